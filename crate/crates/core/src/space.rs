//! Fixed-point groups `H`, generalized symmetric spaces `Q`, split sets `R`
//! and the orbits of `phi`-twisted conjugation `g * q = g q phi(g)^-1`.
//!
//! Automorphisms in `(r, s)` form use closed forms. The 16 automorphisms of
//! `Dc_2` outside that family are handled by direct computation.
//! [`build_space_report`] cross-checks both against the [`oracle`](crate::oracle).

use std::collections::{BTreeSet, VecDeque};

use crate::automorphism::{Automorphism, GroupMap, RsAutomorphism};
use crate::error::{Error, Result};
use crate::group::{DicyclicElement, GroupParams};
use crate::modular::CyclicSubgroup;
use crate::oracle;

pub type ElementSet = BTreeSet<DicyclicElement>;
pub type Partition = Vec<ElementSet>;

/// Closed forms for `phi_(r,s)`, all exponents mod `2n`.
pub mod closed_form {
    use super::*;

    struct Exponents {
        params: GroupParams,
        n: i64,
        m: i64,
        r: i64,
        s: i64,
    }

    fn exps(phi: &RsAutomorphism) -> Exponents {
        let params = phi.params();
        Exponents {
            params,
            n: params.n() as i64,
            m: params.modulus() as i64,
            r: phi.r() as i64,
            s: phi.s() as i64,
        }
    }

    fn congruent(a: i64, b: i64, m: i64) -> bool {
        (a - b).rem_euclid(m) == 0
    }

    /// `{x^b : b(1-r) = 0} u {yx^b : b(1-r) = s}`.
    pub fn fixed_points(phi: &RsAutomorphism) -> ElementSet {
        let e = exps(phi);
        let rot = (0..e.m)
            .filter(|b| congruent(b * (1 - e.r), 0, e.m))
            .map(|b| e.params.x_pow(b));
        let refl = (0..e.m)
            .filter(|b| congruent(b * (1 - e.r), e.s, e.m))
            .map(|b| e.params.yx_pow(b));
        rot.chain(refl).collect()
    }

    /// `{x^(b(1-r))} u {x^(s + b(r-1))}` over all `b`.
    pub fn symmetric_space(phi: &RsAutomorphism) -> ElementSet {
        let e = exps(phi);
        (0..e.m)
            .flat_map(|b| [b * (1 - e.r), e.s + b * (e.r - 1)])
            .map(|k| e.params.x_pow(k))
            .collect()
    }

    /// `{x^b : b(r+1) = 0} u {yx^b : s + rb = n + b}`.
    pub fn split_elements(phi: &RsAutomorphism) -> ElementSet {
        let e = exps(phi);
        let rot = (0..e.m)
            .filter(|b| congruent(b * (e.r + 1), 0, e.m))
            .map(|b| e.params.x_pow(b));
        let refl = (0..e.m)
            .filter(|b| congruent(e.s + e.r * b, e.n + b, e.m))
            .map(|b| e.params.yx_pow(b));
        rot.chain(refl).collect()
    }

    /// `{yx^l : s + rl = n + l} u {x^k : k(r+1) = 0, k not in <1-r>, k not in s + <r-1>}`.
    pub fn split_not_symmetric(phi: &RsAutomorphism) -> ElementSet {
        let e = exps(phi);
        let sub = CyclicSubgroup::generated_by(1 - e.r, e.m as u32);
        let refl = (0..e.m)
            .filter(|l| congruent(e.s + e.r * l, e.n + l, e.m))
            .map(|l| e.params.yx_pow(l));
        let rot = (0..e.m)
            .filter(|k| {
                congruent(k * (e.r + 1), 0, e.m)
                    && !sub.contains(*k)
                    && !sub.coset_contains(e.s, *k)
            })
            .map(|k| e.params.x_pow(k));
        refl.chain(rot).collect()
    }

    /// Whether `s` lies in `<1 - r>`, i.e. `H` meets the coset `y<x>`.
    pub fn s_in_subgroup(phi: &RsAutomorphism) -> bool {
        let e = exps(phi);
        CyclicSubgroup::generated_by(1 - e.r, e.m as u32).contains(e.s)
    }

    /// Singletons `{x^j}` when `s` is outside `<1-r>`, otherwise pairs `{x^j, x^-j}`.
    pub fn h_orbits(phi: &RsAutomorphism) -> Partition {
        let q = symmetric_space(phi);
        let paired = s_in_subgroup(phi);
        let mut covered = ElementSet::new();
        let mut orbits = Vec::new();
        for g in &q {
            if covered.contains(g) {
                continue;
            }
            let mut orbit = ElementSet::from([*g]);
            if paired {
                orbit.insert(g.inverse());
            }
            covered.extend(orbit.iter().copied());
            orbits.push(orbit);
        }
        orbits
    }

    /// `G` acts transitively: `G\Q = {Q}`.
    pub fn g_orbits(phi: &RsAutomorphism) -> Partition {
        vec![symmetric_space(phi)]
    }
}

fn pointwise_fixed(phi: &Automorphism) -> ElementSet {
    phi.params()
        .elements()
        .filter(|g| phi.image(g) == *g)
        .collect()
}

fn pointwise_symmetric(phi: &Automorphism) -> ElementSet {
    phi.params()
        .elements()
        .map(|g| g * phi.image(&g).inverse())
        .collect()
}

fn pointwise_split(phi: &Automorphism) -> ElementSet {
    phi.params()
        .elements()
        .filter(|g| phi.image(g) == g.inverse())
        .collect()
}

pub fn fixed_point_group(phi: &Automorphism) -> ElementSet {
    match phi.as_rs() {
        Some(rs) => closed_form::fixed_points(&rs),
        None => pointwise_fixed(phi),
    }
}

pub fn generalized_symmetric_space(phi: &Automorphism) -> ElementSet {
    match phi.as_rs() {
        Some(rs) => closed_form::symmetric_space(&rs),
        None => pointwise_symmetric(phi),
    }
}

pub fn split_elements(phi: &Automorphism) -> ElementSet {
    match phi.as_rs() {
        Some(rs) => closed_form::split_elements(&rs),
        None => pointwise_split(phi),
    }
}

pub fn r_minus_q(phi: &Automorphism) -> ElementSet {
    match phi.as_rs() {
        Some(rs) => closed_form::split_not_symmetric(&rs),
        None => pointwise_split(phi)
            .difference(&pointwise_symmetric(phi))
            .copied()
            .collect(),
    }
}

/// `(Q, H)` for a nontrivial inner automorphism.
///
/// `r = 1`: `Q = {1, x^s}`, `H = <x>`. `r = 2n-1`: `Q` is the even powers of
/// `x` and `H = {1, x^n, yx^(s/2), yx^(s/2+n)}`.
pub fn inner_qh(phi: &RsAutomorphism) -> Result<(ElementSet, ElementSet)> {
    let params = phi.params();
    let m = params.modulus() as i64;
    let n = params.n() as i64;
    let s = phi.s() as i64;
    if phi.is_identity() || s % 2 != 0 {
        return Err(Error::Precondition(format!(
            "{phi} is not a nontrivial inner automorphism"
        )));
    }
    if phi.r() == 1 {
        let q = [params.identity(), params.x_pow(s)].into_iter().collect();
        let h = (0..m).map(|b| params.x_pow(b)).collect();
        Ok((q, h))
    } else if phi.r() as i64 == m - 1 {
        let q = (0..n).map(|k| params.x_pow(2 * k)).collect();
        let h = [
            params.identity(),
            params.x_pow(n),
            params.yx_pow(s / 2),
            params.yx_pow(s / 2 + n),
        ]
        .into_iter()
        .collect();
        Ok((q, h))
    } else {
        Err(Error::Precondition(format!(
            "{phi} is not a nontrivial inner automorphism"
        )))
    }
}

/// `g * q = g q phi(g)^-1`.
pub fn twisted_conjugate(
    g: &DicyclicElement,
    q: &DicyclicElement,
    phi: &Automorphism,
) -> Result<DicyclicElement> {
    let image = phi.apply(g)?;
    g.multiply(q)?.multiply(&image.inverse())
}

// Orbits of Q under the group generated by `generators`, breadth first.
fn closure_orbits(phi: &Automorphism, q: &ElementSet, generators: &[DicyclicElement]) -> Partition {
    let mut covered = ElementSet::new();
    let mut orbits = Vec::new();
    for seed in q {
        if covered.contains(seed) {
            continue;
        }
        let mut orbit = ElementSet::from([*seed]);
        let mut queue = VecDeque::from([*seed]);
        while let Some(current) = queue.pop_front() {
            for g in generators {
                let next = *g * current * phi.image(g).inverse();
                if orbit.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        covered.extend(orbit.iter().copied());
        orbits.push(orbit);
    }
    orbits
}

/// A small generating set of a subgroup, taken greedily in canonical order.
pub fn subgroup_generators(subgroup: &ElementSet) -> Vec<DicyclicElement> {
    let Some(first) = subgroup.iter().next() else {
        return Vec::new();
    };
    let mut span = ElementSet::from([first.params().identity()]);
    let mut generators = Vec::new();
    for g in subgroup {
        if span.contains(g) {
            continue;
        }
        generators.push(*g);
        let mut queue: VecDeque<_> = span.iter().copied().collect();
        while let Some(e) = queue.pop_front() {
            for h in &generators {
                let t = e * *h;
                if span.insert(t) {
                    queue.push_back(t);
                }
            }
        }
    }
    generators
}

/// `H\Q` under twisted conjugation.
pub fn h_orbits(phi: &Automorphism) -> Partition {
    match phi.as_rs() {
        Some(rs) => closed_form::h_orbits(&rs),
        None => {
            let gens = subgroup_generators(&pointwise_fixed(phi));
            closure_orbits(phi, &pointwise_symmetric(phi), &gens)
        }
    }
}

/// `G\Q` under twisted conjugation.
pub fn g_orbits(phi: &Automorphism) -> Partition {
    match phi.as_rs() {
        Some(rs) => closed_form::g_orbits(&rs),
        None => {
            let params = phi.params();
            closure_orbits(phi, &pointwise_symmetric(phi), &[params.x(), params.y()])
        }
    }
}

/// For an involution: `g -> g phi(g)^-1` is constant on each coset `gH` and
/// separates distinct cosets, so `|Q| |H| = |G|`.
pub fn coset_bijection_check(phi: &Automorphism) -> Result<bool> {
    if !phi.is_involution() {
        return Err(Error::Precondition(format!("{phi} is not an involution")));
    }
    let params = phi.params();
    let h = fixed_point_group(phi);
    let q = generalized_symmetric_space(phi);
    let project = |g: DicyclicElement| g * phi.image(&g).inverse();
    for g in params.elements() {
        let fiber: ElementSet = params
            .elements()
            .filter(|k| project(*k) == project(g))
            .collect();
        let coset: ElementSet = h.iter().map(|k| g * *k).collect();
        if fiber != coset {
            return Ok(false);
        }
    }
    Ok(q.len() * h.len() == params.order())
}

/// Which computations produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Oracle,
    /// Closed form, checked equal to the oracle.
    Both,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Oracle => "oracle",
            Provenance::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceReport {
    pub phi: Automorphism,
    pub order: u64,
    pub inner: bool,
    pub involution: bool,
    pub h: ElementSet,
    pub q: ElementSet,
    pub r: ElementSet,
    pub r_minus_q: ElementSet,
    pub h_orbits: Partition,
    pub g_orbits: Partition,
    pub provenance: Provenance,
}

fn render(set: &ElementSet) -> String {
    let items: Vec<_> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn render_partition(p: &Partition) -> String {
    let items: Vec<_> = p.iter().map(render).collect();
    format!("{{{}}}", items.join(", "))
}

fn agree(set: &'static str, closed: &ElementSet, oracle: &ElementSet) -> Result<()> {
    if closed != oracle {
        return Err(Error::Consistency {
            set,
            closed_form: render(closed),
            oracle: render(oracle),
        });
    }
    Ok(())
}

fn agree_partition(set: &'static str, closed: &Partition, oracle: &Partition) -> Result<()> {
    if closed != oracle {
        return Err(Error::Consistency {
            set,
            closed_form: render_partition(closed),
            oracle: render_partition(oracle),
        });
    }
    Ok(())
}

fn check_partition(name: &str, partition: &Partition, q: &ElementSet) -> Result<()> {
    let total: usize = partition.iter().map(BTreeSet::len).sum();
    let union: ElementSet = partition.iter().flatten().copied().collect();
    if total != q.len() || union != *q || partition.iter().any(BTreeSet::is_empty) {
        return Err(Error::InvariantViolation(format!(
            "{name} is not a partition of Q"
        )));
    }
    Ok(())
}

/// Compute `H`, `Q`, `R`, `R - Q` and both orbit partitions, and require the
/// closed forms to match definitional recomputation.
pub fn build_space_report(phi: &Automorphism) -> Result<SpaceReport> {
    let params = phi.params();
    let h = fixed_point_group(phi);
    let q = generalized_symmetric_space(phi);
    let r = split_elements(phi);
    let r_minus_q = r_minus_q(phi);
    let h_orb = h_orbits(phi);
    let g_orb = g_orbits(phi);

    let oracle_h = oracle::definitional_h(phi);
    let oracle_q = oracle::definitional_q(phi);
    let oracle_r = oracle::definitional_r(phi);
    agree("H", &h, &oracle_h)?;
    agree("Q", &q, &oracle_q)?;
    agree("R", &r, &oracle_r)?;
    let oracle_rq: ElementSet = oracle_r.difference(&oracle_q).copied().collect();
    agree("R-Q", &r_minus_q, &oracle_rq)?;
    agree_partition("H\\Q", &h_orb, &oracle::h_orbits(phi)?)?;
    agree_partition("G\\Q", &g_orb, &oracle::g_orbits(phi)?)?;

    let identity = params.identity();
    if !h.contains(&identity)
        || h.iter()
            .any(|a| h.iter().any(|b| !h.contains(&(*a * b.inverse()))))
    {
        return Err(Error::InvariantViolation("H is not a subgroup".into()));
    }
    if !q.contains(&identity) {
        return Err(Error::InvariantViolation("1 is not in Q".into()));
    }
    check_partition("H\\Q", &h_orb, &q)?;
    check_partition("G\\Q", &g_orb, &q)?;
    let involution = phi.is_involution();
    if involution && !q.is_subset(&r) {
        return Err(Error::InvariantViolation(
            "Q is not contained in R for an involution".into(),
        ));
    }

    let provenance = if phi.as_rs().is_some() {
        Provenance::Both
    } else {
        Provenance::Oracle
    };
    Ok(SpaceReport {
        phi: phi.clone(),
        order: phi.exact_order(),
        inner: phi.is_inner(),
        involution,
        h,
        q,
        r,
        r_minus_q,
        h_orbits: h_orb,
        g_orbits: g_orb,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{make_rs, TableAutomorphism};

    fn dc(n: i64) -> GroupParams {
        GroupParams::new(n).unwrap()
    }

    fn rs(r: i64, s: i64, n: i64) -> Automorphism {
        make_rs(r, s, dc(n)).unwrap().into()
    }

    fn names(set: &ElementSet) -> Vec<String> {
        set.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn worked_example_five_two() {
        let phi = rs(5, 2, 3);
        assert_eq!(names(&fixed_point_group(&phi)), ["1", "x^3", "yx", "yx^4"]);
        assert_eq!(
            names(&generalized_symmetric_space(&phi)),
            ["1", "x^2", "x^4"]
        );
        let orbits: Vec<_> = h_orbits(&phi).iter().map(names).collect();
        assert_eq!(orbits, vec![vec!["1"], vec!["x^2", "x^4"]]);
        assert_eq!(g_orbits(&phi).len(), 1);
    }

    #[test]
    fn identity_automorphism() {
        let phi = rs(1, 0, 5);
        assert_eq!(fixed_point_group(&phi).len(), 20);
        assert_eq!(names(&generalized_symmetric_space(&phi)), ["1"]);
        assert_eq!(names(&split_elements(&phi)), ["1", "x^5"]);
        assert_eq!(names(&r_minus_q(&phi)), ["x^5"]);
        let report = build_space_report(&phi).unwrap();
        assert_eq!(report.h_orbits.len(), 1);
        assert_eq!(report.g_orbits, vec![ElementSet::from([dc(5).identity()])]);
        assert_eq!(
            coset_bijection_check(&phi),
            Err(Error::Precondition("phi(1,0) is not an involution".into()))
        );
    }

    #[test]
    fn identical_fixed_points_for_non_isomorphic_involutions() {
        let a = rs(3, 0, 4);
        let b = rs(7, 0, 4);
        assert_eq!(names(&fixed_point_group(&a)), ["1", "x^4", "y", "yx^4"]);
        assert_eq!(fixed_point_group(&a), fixed_point_group(&b));
    }

    #[test]
    fn split_involution_sets() {
        for n in 2..9 {
            let phi = rs(1, n, n);
            let p = dc(n);
            let q: ElementSet = [p.identity(), p.x_pow(n)].into_iter().collect();
            assert_eq!(generalized_symmetric_space(&phi), q);
            let refl: ElementSet = (0..2 * n).map(|b| p.yx_pow(b)).collect();
            let mut r = q.clone();
            r.extend(refl.iter().copied());
            assert_eq!(split_elements(&phi), r);
            assert_eq!(r_minus_q(&phi), refl);
            assert!(coset_bijection_check(&phi).unwrap());
        }
    }

    #[test]
    fn inner_special_cases() {
        let (q, h) = inner_qh(&make_rs(1, 2, dc(4)).unwrap()).unwrap();
        assert_eq!(names(&q), ["1", "x^2"]);
        assert_eq!(h.len(), 8);
        let (q, h) = inner_qh(&make_rs(7, 0, dc(4)).unwrap()).unwrap();
        assert_eq!(names(&q), ["1", "x^2", "x^4", "x^6"]);
        assert_eq!(names(&h), ["1", "x^4", "y", "yx^4"]);
        let (q, h) = inner_qh(&make_rs(1, 2, dc(2)).unwrap()).unwrap();
        assert_eq!(names(&q), ["1", "x^2"]);
        assert_eq!(names(&h), ["1", "x", "x^2", "x^3"]);
        assert!(inner_qh(&make_rs(3, 0, dc(4)).unwrap()).is_err());
        assert!(inner_qh(&make_rs(1, 0, dc(4)).unwrap()).is_err());
        assert!(inner_qh(&make_rs(1, 3, dc(4)).unwrap()).is_err());
    }

    #[test]
    fn inner_special_cases_match_general() {
        for n in 3..12 {
            for s in (2..2 * n).step_by(2) {
                for r in [1, 2 * n - 1] {
                    let rs_phi = make_rs(r, s, dc(n)).unwrap();
                    let (q, h) = inner_qh(&rs_phi).unwrap();
                    let phi = Automorphism::Rs(rs_phi);
                    assert_eq!(q, generalized_symmetric_space(&phi));
                    assert_eq!(h, fixed_point_group(&phi));
                }
            }
        }
    }

    #[test]
    fn twisted_action_laws() {
        let phi = rs(3, 1, 5);
        let p = dc(5);
        let q = generalized_symmetric_space(&phi);
        for g in p.elements() {
            for h in p.elements().step_by(3) {
                for x in &q {
                    let lhs = twisted_conjugate(&(g * h), x, &phi).unwrap();
                    let inner = twisted_conjugate(&h, x, &phi).unwrap();
                    assert_eq!(lhs, twisted_conjugate(&g, &inner, &phi).unwrap());
                    assert_eq!(twisted_conjugate(&p.identity(), x, &phi).unwrap(), *x);
                }
            }
        }
        // on H the action is ordinary conjugation
        for h in fixed_point_group(&phi) {
            for x in &q {
                assert_eq!(
                    twisted_conjugate(&h, x, &phi).unwrap(),
                    h * *x * h.inverse()
                );
            }
        }
        assert!(twisted_conjugate(&dc(4).x(), &p.x(), &phi).is_err());
    }

    #[test]
    fn dc2_orbits_are_singletons() {
        for t in crate::automorphism::enumerate_automorphisms_bruteforce(dc(2)) {
            let phi = Automorphism::from_table(t);
            let report = build_space_report(&phi).unwrap();
            assert!(report.h_orbits.iter().all(|o| o.len() == 1));
            assert_eq!(report.g_orbits, vec![report.q.clone()]);
        }
    }

    #[test]
    fn table_only_reports_use_oracle_provenance() {
        let p = dc(2);
        let phi2 = TableAutomorphism::from_generators(p.yx_pow(2), p.x_pow(3)).unwrap();
        let report = build_space_report(&Automorphism::from_table(phi2)).unwrap();
        assert_eq!(report.provenance, Provenance::Oracle);
        assert_eq!(names(&report.q), ["1", "x^2", "yx", "yx^3"]);
        let rs_report = build_space_report(&rs(3, 3, 2)).unwrap();
        assert_eq!(rs_report.provenance, Provenance::Both);
    }

    #[test]
    fn subgroup_generators_span() {
        let h = fixed_point_group(&rs(5, 2, 3));
        let gens = subgroup_generators(&h);
        assert!(gens.len() <= 2);
    }
}
