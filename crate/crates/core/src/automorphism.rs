//! Automorphisms of `Dc_n`.
//!
//! For `n >= 3` every automorphism is `phi_(r,s)`: `x -> x^r`, `y -> yx^s` with
//! `r` a unit mod `2n`. These compose as `(r,s)(p,q) = (rp, s + rq)`, where the
//! right-hand map is applied first. `Dc_2` (the quaternion group) has 24
//! automorphisms, only 8 of which have this form, so the explicit
//! [`TableAutomorphism`] is the general representation.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{DicyclicElement, GroupParams};
use crate::modular::{self, reduce, CyclicSubgroup};

/// Something that maps `Dc_n` to itself pointwise.
pub trait GroupMap {
    fn params(&self) -> GroupParams;

    /// Image of `g`. Panics if `g` is from another group.
    fn image(&self, g: &DicyclicElement) -> DicyclicElement;

    fn apply(&self, g: &DicyclicElement) -> Result<DicyclicElement> {
        let n = self.params().n();
        if g.params().n() != n {
            return Err(Error::MismatchedGroups {
                left: n,
                right: g.params().n(),
            });
        }
        Ok(self.image(g))
    }

    /// Images of all elements in canonical order.
    fn images(&self) -> Vec<DicyclicElement> {
        self.params().elements().map(|g| self.image(&g)).collect()
    }
}

fn check_same(left: GroupParams, right: GroupParams) -> Result<()> {
    if left != right {
        return Err(Error::MismatchedGroups {
            left: left.n(),
            right: right.n(),
        });
    }
    Ok(())
}

/// `phi_(r,s)`: `x -> x^r`, `y -> yx^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RsAutomorphism {
    params: GroupParams,
    r: u32,
    s: u32,
}

/// Build `phi_(r,s)` with `r` and `s` reduced mod `2n`.
///
/// For `n = 2` the result is a valid automorphism, but the family misses 16 of
/// the 24 automorphisms; see [`GroupParams::rs_family_complete`].
pub fn make_rs(r: i64, s: i64, params: GroupParams) -> Result<RsAutomorphism> {
    let m = params.modulus();
    let r_red = reduce(r, m);
    if !modular::is_unit(r_red, m) {
        return Err(Error::NotAUnit { r, modulus: m });
    }
    Ok(RsAutomorphism {
        params,
        r: r_red,
        s: reduce(s, m),
    })
}

impl RsAutomorphism {
    pub fn identity(params: GroupParams) -> Self {
        RsAutomorphism { params, r: 1, s: 0 }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    fn modulus(&self) -> u32 {
        self.params.modulus()
    }

    pub fn is_identity(&self) -> bool {
        self.r == 1 && self.s == 0
    }

    /// `self o other` (apply `other` first): `(rp, s + rq)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_same(self.params, other.params)?;
        let m = self.modulus() as u64;
        let (r, s) = (self.r as u64, self.s as u64);
        let (p, q) = (other.r as u64, other.s as u64);
        Ok(RsAutomorphism {
            params: self.params,
            r: (r * p % m) as u32,
            s: ((s + r * q) % m) as u32,
        })
    }

    /// `(r,s)^-1 = (r^-1, -r^-1 s)`.
    pub fn invert(&self) -> Self {
        let m = self.modulus();
        let r_inv = modular::inverse_mod(self.r, m).expect("r is a unit");
        RsAutomorphism {
            params: self.params,
            r: r_inv,
            s: reduce(-(r_inv as i64) * self.s as i64, m),
        }
    }

    /// `self^k` for `k >= 0`.
    pub fn power(&self, k: u64) -> Self {
        let mut acc = Self::identity(self.params);
        for _ in 0..k {
            acc = self.compose(&acc).expect("same group");
        }
        acc
    }

    /// Inner iff `s` is even and `r` is `1` or `2n - 1`.
    pub fn is_inner(&self) -> bool {
        self.inner_conjugator().is_some()
    }

    /// An element `g` with `Inn(g) = self`, if one exists.
    pub fn inner_conjugator(&self) -> Option<DicyclicElement> {
        if !self.s.is_multiple_of(2) {
            return None;
        }
        let half = (self.s / 2) as i64;
        if self.r == 1 {
            Some(self.params.x_pow(-half))
        } else if self.r == self.modulus() - 1 {
            Some(self.params.yx_pow(half))
        } else {
            None
        }
    }

    /// Whether `self^k = id`, via `r^k = 1` and `s(1 + r + ... + r^(k-1)) = 0` mod `2n`.
    pub fn order_divides(&self, k: i64) -> Result<bool> {
        if k < 1 {
            return Err(Error::InvalidOrder(k));
        }
        let m = self.modulus() as u64;
        let r = self.r as u64;
        let mut r_pow = 1u64;
        let mut geometric = 0u64;
        for _ in 0..k {
            geometric = (geometric + r_pow) % m;
            r_pow = r_pow * r % m;
        }
        Ok(r_pow == 1 % m && (self.s as u64 * geometric).is_multiple_of(m))
    }

    /// Least `k >= 1` with `self^k = id`.
    pub fn exact_order(&self) -> u64 {
        let bound = aut_order(self.params);
        let mut acc = *self;
        for k in 1..=bound {
            if acc.is_identity() {
                return k;
            }
            acc = self.compose(&acc).expect("same group");
        }
        unreachable!("order of an automorphism divides |Aut|")
    }

    /// Exact order two: `r^2 = 1`, `s(1 + r) = 0`, and not the identity.
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.order_divides(2).expect("k = 2 is valid")
    }

    pub fn to_table(&self) -> TableAutomorphism {
        TableAutomorphism {
            params: self.params,
            images: self.images(),
        }
    }
}

impl GroupMap for RsAutomorphism {
    fn params(&self) -> GroupParams {
        self.params
    }

    fn image(&self, g: &DicyclicElement) -> DicyclicElement {
        assert_eq!(g.params(), self.params, "element from another group");
        let rb = self.r as i64 * g.b() as i64;
        if g.is_rotation() {
            self.params.x_pow(rb)
        } else {
            self.params.yx_pow(self.s as i64 + rb)
        }
    }
}

impl fmt::Display for RsAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi({},{})", self.r, self.s)
    }
}

/// `Inn(g)` in `(r, s)` form: `Inn(x^b) = (1, -2b)`, `Inn(yx^b) = (2n-1, 2b)`.
pub fn inner_from(g: &DicyclicElement) -> RsAutomorphism {
    let params = g.params();
    let m = params.modulus();
    let b = g.b() as i64;
    if g.is_rotation() {
        RsAutomorphism {
            params,
            r: 1,
            s: reduce(-2 * b, m),
        }
    } else {
        RsAutomorphism {
            params,
            r: m - 1,
            s: reduce(2 * b, m),
        }
    }
}

/// `Inn(g)` is an involution iff `g` has order 4.
pub fn inner_is_involution(g: &DicyclicElement) -> bool {
    g.order() == 4
}

/// The three shapes an inner automorphism of order dividing `k` can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerOrderCase {
    /// `g = x^b`, `g^k = 1`, `bk = 0 (mod 2n)`.
    RotationTrivialPower,
    /// `g = x^b`, `g^k = x^n`, `bk = n (mod 2n)`.
    RotationCentralPower,
    /// `g = yx^b`; `Inn(g)` is an involution.
    Reflection,
}

/// Classify `Inn(g)` given `Inn(g)^k = id`.
///
/// `Inn(g)^k = id` holds exactly when `g^k` is central, so `k` is read as a
/// multiple of the order of `Inn(g)`.
pub fn classify_inner_order(g: &DicyclicElement, k: i64) -> Result<InnerOrderCase> {
    let params = g.params();
    if !params.rs_family_complete() {
        return Err(Error::ClassificationFailure("requires n > 2".into()));
    }
    let inner = inner_from(g);
    if !inner.order_divides(k)? {
        return Err(Error::ClassificationFailure(format!(
            "Inn({g})^{k} is not the identity (order {})",
            inner.exact_order()
        )));
    }
    if !g.is_rotation() {
        return Ok(InnerOrderCase::Reflection);
    }
    let m = params.modulus() as i64;
    let bk = (g.b() as i64 * k).rem_euclid(m);
    if bk == 0 {
        Ok(InnerOrderCase::RotationTrivialPower)
    } else if bk == params.n() as i64 {
        Ok(InnerOrderCase::RotationCentralPower)
    } else {
        Err(Error::ClassificationFailure(format!(
            "{g}^{k} is not central"
        )))
    }
}

/// `sigma = phi_(u,v)` conjugating one automorphism into another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsomorphyWitness {
    pub u: u32,
    pub v: u32,
}

impl IsomorphyWitness {
    pub fn sigma(&self, params: GroupParams) -> RsAutomorphism {
        RsAutomorphism {
            params,
            r: self.u,
            s: self.v,
        }
    }

    /// Checks `sigma o theta = phi o sigma`.
    pub fn verify(&self, phi: &RsAutomorphism, theta: &RsAutomorphism) -> bool {
        let sigma = self.sigma(phi.params);
        matches!(
            (sigma.compose(theta), phi.compose(&sigma)),
            (Ok(a), Ok(b)) if a == b
        )
    }
}

/// Isomorphy test for `phi = (r,s)` and `theta = (p,q)`: `r = p` and `qu - s in <r - 1>`
/// for some unit `u`. The witness satisfies `sigma o theta = phi o sigma`.
pub fn are_isomorphic(
    phi: &RsAutomorphism,
    theta: &RsAutomorphism,
) -> Result<Option<IsomorphyWitness>> {
    check_same(phi.params, theta.params)?;
    if phi.r != theta.r {
        return Ok(None);
    }
    let m = phi.modulus();
    let shift = phi.r as i64 - 1;
    let subgroup = CyclicSubgroup::generated_by(shift, m);
    for u in modular::units(m) {
        let target = theta.s as i64 * u as i64 - phi.s as i64;
        if subgroup.contains(target) {
            let v = modular::solve_linear(shift, target, m).expect("target lies in <r - 1>");
            return Ok(Some(IsomorphyWitness { u, v }));
        }
    }
    Ok(None)
}

/// Partition of all `(r, s)` automorphisms into isomorphy classes, each sorted
/// and listed by lexicographically least representative.
pub fn isomorphy_classes(params: GroupParams) -> Result<Vec<Vec<RsAutomorphism>>> {
    if !params.rs_family_complete() {
        return Err(Error::Precondition(
            "isomorphy classes by (r,s) need n > 2".into(),
        ));
    }
    let all = enumerate_rs_automorphisms(params);
    let mut assigned = vec![false; all.len()];
    let mut classes = Vec::new();
    for i in 0..all.len() {
        if assigned[i] {
            continue;
        }
        let mut class = Vec::new();
        for j in i..all.len() {
            if !assigned[j] && are_isomorphic(&all[i], &all[j])?.is_some() {
                assigned[j] = true;
                class.push(all[j]);
            }
        }
        classes.push(class);
    }
    Ok(classes)
}

/// `|Aut(Dc_n)|`: `2n * phi(2n)` for `n > 2`, and 24 for `n = 2`.
pub fn aut_order(params: GroupParams) -> u64 {
    if params.rs_family_complete() {
        let m = params.modulus();
        m as u64 * modular::totient(m) as u64
    } else {
        24
    }
}

/// Every `phi_(r,s)` in lexicographic `(r, s)` order.
pub fn enumerate_rs_automorphisms(params: GroupParams) -> Vec<RsAutomorphism> {
    let m = params.modulus();
    modular::units(m)
        .into_iter()
        .flat_map(|r| (0..m).map(move |s| RsAutomorphism { params, r, s }))
        .collect()
}

/// Every automorphism, found by trying all images of the generators.
///
/// A pair `(X, Y)` extends to an endomorphism iff `X^(2n) = 1`, `Y^2 = X^n` and
/// `Y^-1 X Y = X^-1`. Survivors are kept when the extension is bijective.
/// Output is ordered by `(index of X, index of Y)`.
pub fn enumerate_automorphisms_bruteforce(params: GroupParams) -> Vec<TableAutomorphism> {
    let n = params.n() as i64;
    let m = params.modulus() as i64;
    let mut found = Vec::new();
    for x_img in params.elements() {
        if !x_img.pow(m).is_identity() {
            continue;
        }
        for y_img in params.elements() {
            if y_img.pow(2) != x_img.pow(n) || y_img.inverse() * x_img * y_img != x_img.inverse() {
                continue;
            }
            let images = extend_generators(params, x_img, y_img);
            let distinct: BTreeSet<_> = images.iter().collect();
            if distinct.len() == images.len() {
                found.push(TableAutomorphism { params, images });
            }
        }
    }
    found
}

fn extend_generators(
    params: GroupParams,
    x_img: DicyclicElement,
    y_img: DicyclicElement,
) -> Vec<DicyclicElement> {
    params
        .elements()
        .map(|g| y_img.pow(g.a() as i64) * x_img.pow(g.b() as i64))
        .collect()
}

/// `|{r in Z_2n : r^2 = 1}|` from the factorization of `n`.
pub fn count_square_roots_of_unity(params: GroupParams) -> u64 {
    let mut k = params.n() as u64;
    let mut alpha = 0;
    while k.is_multiple_of(2) {
        k /= 2;
        alpha += 1;
    }
    let w = modular::omega(k);
    let exponent = match alpha {
        0 => w,
        1 => w + 1,
        _ => w + 2,
    };
    1 << exponent
}

/// An automorphism stored as its full list of images in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableAutomorphism {
    params: GroupParams,
    images: Vec<DicyclicElement>,
}

impl TableAutomorphism {
    /// Validates bijectivity and the homomorphism law.
    pub fn new(params: GroupParams, images: Vec<DicyclicElement>) -> Result<Self> {
        if images.len() != params.order() {
            return Err(Error::NotAnAutomorphism(format!(
                "expected {} images, got {}",
                params.order(),
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|g| g.params() != params) {
            return Err(Error::MismatchedGroups {
                left: params.n(),
                right: bad.params().n(),
            });
        }
        let distinct: BTreeSet<_> = images.iter().collect();
        if distinct.len() != images.len() {
            return Err(Error::NotAnAutomorphism("not bijective".into()));
        }
        for g in params.elements() {
            for h in params.elements() {
                if images[(g * h).index()] != images[g.index()] * images[h.index()] {
                    return Err(Error::NotAnAutomorphism(format!(
                        "f({g} * {h}) != f({g}) * f({h})"
                    )));
                }
            }
        }
        Ok(TableAutomorphism { params, images })
    }

    /// The automorphism determined by `x -> x_img`, `y -> y_img`.
    pub fn from_generators(x_img: DicyclicElement, y_img: DicyclicElement) -> Result<Self> {
        let params = x_img.params();
        check_same(params, y_img.params())?;
        Self::new(params, extend_generators(params, x_img, y_img))
    }

    pub fn identity(params: GroupParams) -> Self {
        TableAutomorphism {
            params,
            images: params.elements().collect(),
        }
    }

    /// Conjugation `h -> g h g^-1`.
    pub fn inner(g: &DicyclicElement) -> Self {
        let params = g.params();
        let g_inv = g.inverse();
        TableAutomorphism {
            params,
            images: params.elements().map(|h| *g * h * g_inv).collect(),
        }
    }

    pub fn x_image(&self) -> DicyclicElement {
        self.images[self.params.x().index()]
    }

    pub fn y_image(&self) -> DicyclicElement {
        self.images[self.params.y().index()]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, g)| g.index() == i)
    }

    /// `self o other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_same(self.params, other.params)?;
        Ok(TableAutomorphism {
            params: self.params,
            images: other
                .images
                .iter()
                .map(|g| self.images[g.index()])
                .collect(),
        })
    }

    pub fn invert(&self) -> Self {
        let mut images = self.images.clone();
        for (i, g) in self.images.iter().enumerate() {
            images[g.index()] = self.params.element_at(i);
        }
        TableAutomorphism {
            params: self.params,
            images,
        }
    }

    pub fn exact_order(&self) -> u64 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc).expect("same group");
            k += 1;
        }
        k
    }

    pub fn is_involution(&self) -> bool {
        self.exact_order() == 2
    }

    /// Some `g` with `Inn(g) = self`, searching the whole group.
    pub fn find_conjugator(&self) -> Option<DicyclicElement> {
        self.params
            .elements()
            .find(|g| TableAutomorphism::inner(g) == *self)
    }

    /// The `(r, s)` form, when `x -> x^r` and `y -> yx^s`.
    pub fn to_rs(&self) -> Option<RsAutomorphism> {
        let (xi, yi) = (self.x_image(), self.y_image());
        if !xi.is_rotation() || yi.is_rotation() {
            return None;
        }
        make_rs(xi.b() as i64, yi.b() as i64, self.params).ok()
    }
}

impl GroupMap for TableAutomorphism {
    fn params(&self) -> GroupParams {
        self.params
    }

    fn image(&self, g: &DicyclicElement) -> DicyclicElement {
        assert_eq!(g.params(), self.params, "element from another group");
        self.images[g.index()]
    }

    fn images(&self) -> Vec<DicyclicElement> {
        self.images.clone()
    }
}

impl fmt::Display for TableAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[x -> {}, y -> {}]", self.x_image(), self.y_image())
    }
}

/// Either representation of an automorphism of `Dc_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automorphism {
    Rs(RsAutomorphism),
    Table(TableAutomorphism),
}

impl Automorphism {
    /// Prefer the `(r, s)` form when the table has one.
    pub fn from_table(table: TableAutomorphism) -> Self {
        match table.to_rs() {
            Some(rs) => Automorphism::Rs(rs),
            None => Automorphism::Table(table),
        }
    }

    pub fn as_rs(&self) -> Option<RsAutomorphism> {
        match self {
            Automorphism::Rs(rs) => Some(*rs),
            Automorphism::Table(t) => t.to_rs(),
        }
    }

    pub fn to_table(&self) -> TableAutomorphism {
        match self {
            Automorphism::Rs(rs) => rs.to_table(),
            Automorphism::Table(t) => t.clone(),
        }
    }

    pub fn x_image(&self) -> DicyclicElement {
        self.image(&self.params().x())
    }

    pub fn y_image(&self) -> DicyclicElement {
        self.image(&self.params().y())
    }

    pub fn exact_order(&self) -> u64 {
        match self {
            Automorphism::Rs(rs) => rs.exact_order(),
            Automorphism::Table(t) => t.exact_order(),
        }
    }

    pub fn is_involution(&self) -> bool {
        match self {
            Automorphism::Rs(rs) => rs.is_involution(),
            Automorphism::Table(t) => t.is_involution(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Automorphism::Rs(rs) => rs.is_identity(),
            Automorphism::Table(t) => t.is_identity(),
        }
    }

    pub fn is_inner(&self) -> bool {
        self.inner_conjugator().is_some()
    }

    pub fn inner_conjugator(&self) -> Option<DicyclicElement> {
        match self {
            Automorphism::Rs(rs) if rs.params.rs_family_complete() => rs.inner_conjugator(),
            other => other.to_table().find_conjugator(),
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Automorphism::Rs(a), Automorphism::Rs(b)) => Ok(Automorphism::Rs(a.compose(b)?)),
            _ => Ok(Automorphism::from_table(
                self.to_table().compose(&other.to_table())?,
            )),
        }
    }
}

impl GroupMap for Automorphism {
    fn params(&self) -> GroupParams {
        match self {
            Automorphism::Rs(rs) => rs.params,
            Automorphism::Table(t) => t.params,
        }
    }

    fn image(&self, g: &DicyclicElement) -> DicyclicElement {
        match self {
            Automorphism::Rs(rs) => rs.image(g),
            Automorphism::Table(t) => t.image(g),
        }
    }
}

impl From<RsAutomorphism> for Automorphism {
    fn from(rs: RsAutomorphism) -> Self {
        Automorphism::Rs(rs)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Automorphism::Rs(rs) => rs.fmt(f),
            Automorphism::Table(t) => t.fmt(f),
        }
    }
}

/// A pair `(phi, g)` under `(phi, g)(theta, h) = (phi o theta, g phi(h))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HolomorphElement {
    pub phi: RsAutomorphism,
    pub g: DicyclicElement,
}

impl HolomorphElement {
    pub fn new(phi: RsAutomorphism, g: DicyclicElement) -> Result<Self> {
        check_same(phi.params, g.params())?;
        Ok(HolomorphElement { phi, g })
    }

    pub fn identity(params: GroupParams) -> Self {
        HolomorphElement {
            phi: RsAutomorphism::identity(params),
            g: params.identity(),
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        let phi = self.phi.compose(&other.phi)?;
        Ok(HolomorphElement {
            phi,
            g: self.g * self.phi.image(&other.g),
        })
    }

    /// `(phi^-1, phi^-1(g^-1))`.
    pub fn inverse(&self) -> Self {
        let phi_inv = self.phi.invert();
        HolomorphElement {
            phi: phi_inv,
            g: phi_inv.image(&self.g.inverse()),
        }
    }
}

pub fn holomorph_compose(e1: &HolomorphElement, e2: &HolomorphElement) -> Result<HolomorphElement> {
    e1.compose(e2)
}
