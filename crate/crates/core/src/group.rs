//! Arithmetic in the dicyclic group
//! `Dc_n = <x, y | x^(2n) = 1, y^2 = x^n, y^-1 x y = x^-1>` of order `4n`.
//!
//! Every element is stored in the normal form `y^a x^b` with `a in {0, 1}`
//! and `0 <= b < 2n`. The canonical element order is
//! `1, x, ..., x^(2n-1), y, yx, ..., yx^(2n-1)`; all set outputs and tables
//! in the crate follow it.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::modular::{gcd, reduce};
use crate::table::GroupTable;

/// The index `n` of `Dc_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupParams {
    n: u32,
}

impl GroupParams {
    pub fn new(n: i64) -> Result<Self> {
        if !(2..=u32::MAX as i64 / 4).contains(&n) {
            return Err(Error::InvalidParams(n));
        }
        Ok(GroupParams { n: n as u32 })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Order of the generator `x`, i.e. `2n`.
    pub fn modulus(&self) -> u32 {
        2 * self.n
    }

    /// `|Dc_n| = 4n`.
    pub fn order(&self) -> usize {
        4 * self.n as usize
    }

    /// Whether the `(r, s)` family describes every automorphism. Fails only for `n = 2`.
    pub fn rs_family_complete(&self) -> bool {
        self.n > 2
    }

    pub fn identity(&self) -> DicyclicElement {
        DicyclicElement {
            n: self.n,
            a: 0,
            b: 0,
        }
    }

    pub fn x(&self) -> DicyclicElement {
        DicyclicElement {
            n: self.n,
            a: 0,
            b: 1,
        }
    }

    pub fn y(&self) -> DicyclicElement {
        DicyclicElement {
            n: self.n,
            a: 1,
            b: 0,
        }
    }

    /// `x^k`, any integer `k`.
    pub fn x_pow(&self, k: i64) -> DicyclicElement {
        DicyclicElement {
            n: self.n,
            a: 0,
            b: reduce(k, self.modulus()),
        }
    }

    /// `yx^k`, any integer `k`.
    pub fn yx_pow(&self, k: i64) -> DicyclicElement {
        DicyclicElement {
            n: self.n,
            a: 1,
            b: reduce(k, self.modulus()),
        }
    }

    pub fn element(&self, a: i64, b: i64) -> DicyclicElement {
        make_element(a, b, *self)
    }

    /// Element at position `index` in canonical order.
    pub fn element_at(&self, index: usize) -> DicyclicElement {
        assert!(
            index < self.order(),
            "index {index} out of range for Dc_{}",
            self.n
        );
        let m = self.modulus() as usize;
        DicyclicElement {
            n: self.n,
            a: (index / m) as u8,
            b: (index % m) as u32,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = DicyclicElement> {
        let params = *self;
        (0..self.order()).map(move |i| params.element_at(i))
    }

    /// Parse the `1`, `x^k`, `yx^k` notation (`x`, `y`, `yx` accepted as shorthands).
    pub fn parse_element(&self, text: &str) -> Result<DicyclicElement> {
        let err = || Error::Parse(text.to_string());
        let t = text.trim();
        if t == "1" {
            return Ok(self.identity());
        }
        let (a, rest) = match t.strip_prefix('y') {
            Some(rest) => (1, rest),
            None => (0, t),
        };
        let b = if rest.is_empty() {
            if a == 0 {
                return Err(err());
            }
            0
        } else {
            let exp = rest.strip_prefix('x').ok_or_else(err)?;
            if exp.is_empty() {
                1
            } else {
                let digits = exp.strip_prefix('^').ok_or_else(err)?;
                if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(err());
                }
                digits.parse::<i64>().map_err(|_| err())?
            }
        };
        Ok(make_element(a, b, *self))
    }
}

/// An element `y^a x^b` of `Dc_n` in canonical form.
///
/// Ordering follows the canonical element order within one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DicyclicElement {
    n: u32,
    a: u8,
    b: u32,
}

/// Build `y^a x^b` for arbitrary integers, reducing with `y^2 = x^n` and `x^(2n) = 1`.
pub fn make_element(a: i64, b: i64, params: GroupParams) -> DicyclicElement {
    // y^4 = 1, y^2 = x^n, y^3 = y x^n
    let a4 = a.rem_euclid(4);
    let b = if a4 >= 2 { b + params.n as i64 } else { b };
    DicyclicElement {
        n: params.n,
        a: (a4 % 2) as u8,
        b: reduce(b, params.modulus()),
    }
}

impl DicyclicElement {
    pub fn params(&self) -> GroupParams {
        GroupParams { n: self.n }
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Whether the element lies in the cyclic subgroup `<x>`.
    pub fn is_rotation(&self) -> bool {
        self.a == 0
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Position in canonical order.
    pub fn index(&self) -> usize {
        self.a as usize * 2 * self.n as usize + self.b as usize
    }

    fn modulus(&self) -> u32 {
        2 * self.n
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedGroups {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Group product `self * other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    // x^l y = y x^-l, so (y^a1 x^b1)(y^a2 x^b2) = y^(a1+a2) x^(b2 +/- b1)
    fn mul_unchecked(&self, other: &Self) -> Self {
        let m = self.modulus() as i64;
        let b1 = self.b as i64;
        let mut c = other.b as i64 + if other.a == 1 { -b1 } else { b1 };
        let mut a = self.a + other.a;
        if a == 2 {
            a = 0;
            c += self.n as i64;
        }
        DicyclicElement {
            n: self.n,
            a,
            b: c.rem_euclid(m) as u32,
        }
    }

    pub fn inverse(&self) -> Self {
        let m = self.modulus();
        let b = if self.a == 0 {
            (m - self.b) % m
        } else {
            (self.b + self.n) % m
        };
        DicyclicElement {
            n: self.n,
            a: self.a,
            b,
        }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Self {
        let params = self.params();
        if self.a == 0 {
            return params.x_pow(self.b as i64 * k);
        }
        // (yx^b)^2 = x^n, so yx^b has order 4.
        match k.rem_euclid(4) {
            0 => params.identity(),
            1 => *self,
            2 => params.x_pow(self.n as i64),
            _ => self.inverse(),
        }
    }

    /// Least `k >= 1` with `self^k = 1`.
    pub fn order(&self) -> u32 {
        if self.a == 1 {
            4
        } else {
            let m = self.modulus();
            m / gcd(self.b as u64, m as u64) as u32
        }
    }

    pub fn conjugate(&self, by: &Self) -> Result<Self> {
        by.multiply(self)?.multiply(&by.inverse())
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.multiply(other)? == other.multiply(self)?)
    }
}

impl Mul for DicyclicElement {
    type Output = DicyclicElement;

    /// Panics when the operands come from different groups; use
    /// [`DicyclicElement::multiply`] for a fallible product.
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(
            self.n, rhs.n,
            "multiplying elements of Dc_{} and Dc_{}",
            self.n, rhs.n
        );
        self.mul_unchecked(&rhs)
    }
}

impl fmt::Display for DicyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => f.write_str("1"),
            (0, 1) => f.write_str("x"),
            (0, b) => write!(f, "x^{b}"),
            (_, 0) => f.write_str("y"),
            (_, 1) => f.write_str("yx"),
            (_, b) => write!(f, "yx^{b}"),
        }
    }
}

pub fn multiply(g: &DicyclicElement, h: &DicyclicElement) -> Result<DicyclicElement> {
    g.multiply(h)
}

pub fn inverse(g: &DicyclicElement) -> DicyclicElement {
    g.inverse()
}

pub fn element_order(g: &DicyclicElement) -> u32 {
    g.order()
}

/// `Z(Dc_n) = {1, x^n}`.
pub fn center(params: GroupParams) -> BTreeSet<DicyclicElement> {
    [params.identity(), params.x_pow(params.n() as i64)]
        .into_iter()
        .collect()
}

/// All `4n` elements in canonical order.
pub fn enumerate_group(params: GroupParams) -> Vec<DicyclicElement> {
    params.elements().collect()
}

/// Full Cayley table, rows and columns in canonical order.
pub fn cayley_table(params: GroupParams) -> GroupTable {
    let elements = enumerate_group(params);
    let labels = elements.iter().map(ToString::to_string).collect();
    GroupTable::from_fn_trusted(labels, 0, |i, j| (elements[i] * elements[j]).index())
}
