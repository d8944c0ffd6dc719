use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite group given by labelled elements and a Cayley table over indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    labels: Vec<String>,
    product: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Build and validate a table. `product[i][j]` is the index of `i * j`.
    pub fn new(labels: Vec<String>, product: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if product.len() != order || product.iter().any(|row| row.len() != order) {
            return Err(Error::InvalidTable(format!("table is not {order}x{order}")));
        }
        let table = GroupTable {
            labels,
            product: product.into_iter().flatten().collect(),
            identity,
        };
        table.validate()?;
        Ok(table)
    }

    /// Build from a product function and validate.
    pub fn from_fn(
        labels: Vec<String>,
        identity: usize,
        product: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let table = Self::from_fn_trusted(labels, identity, product);
        table.validate()?;
        Ok(table)
    }

    // Skips validation; only for products known to be group laws.
    pub(crate) fn from_fn_trusted(
        labels: Vec<String>,
        identity: usize,
        product: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let order = labels.len();
        let product = (0..order)
            .flat_map(|i| (0..order).map(move |j| (i, j)))
            .map(|(i, j)| product(i, j))
            .collect();
        GroupTable {
            labels,
            product,
            identity,
        }
    }

    fn validate(&self) -> Result<()> {
        let order = self.order();
        if self.identity >= order {
            return Err(Error::InvalidTable("identity index out of range".into()));
        }
        if let Some(bad) = self.product.iter().find(|&&k| k >= order) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        for i in 0..order {
            if self.mul(self.identity, i) != i || self.mul(i, self.identity) != i {
                return Err(Error::InvalidTable(format!(
                    "{} is not the identity for {}",
                    self.labels[self.identity], self.labels[i]
                )));
            }
        }
        if !self.is_latin_square() {
            return Err(Error::InvalidTable("not a Latin square".into()));
        }
        if let Some((i, j, k)) = self.associativity_counterexample() {
            return Err(Error::InvalidTable(format!(
                "not associative at ({}, {}, {})",
                self.labels[i], self.labels[j], self.labels[k]
            )));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.product[i * self.order() + j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        let n = self.order();
        &self.product[i * n..(i + 1) * n]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.row(i)
            .iter()
            .position(|&k| k == self.identity)
            .expect("validated table has inverses")
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut acc = i;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, i);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn is_latin_square(&self) -> bool {
        let n = self.order();
        let full = |it: &mut dyn Iterator<Item = usize>| it.collect::<BTreeSet<_>>().len() == n;
        (0..n).all(|i| full(&mut (0..n).map(|j| self.mul(i, j))))
            && (0..n).all(|j| full(&mut (0..n).map(|i| self.mul(i, j))))
    }

    pub fn associativity_counterexample(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Orders of all elements, in index order.
    pub fn order_profile(&self) -> Vec<usize> {
        (0..self.order()).map(|i| self.element_order(i)).collect()
    }
}

/// The cyclic group `C_m`.
pub fn cyclic_table(m: usize) -> GroupTable {
    let labels = (0..m).map(|k| k.to_string()).collect();
    GroupTable::from_fn_trusted(labels, 0, |i, j| (i + j) % m)
}

/// The Klein four group `C_2 x C_2`.
pub fn klein_four_table() -> GroupTable {
    let labels = ["e", "a", "b", "ab"].map(String::from).to_vec();
    GroupTable::from_fn_trusted(labels, 0, |i, j| i ^ j)
}

/// All permutations of `0..degree` in lexicographic order.
pub fn permutations(degree: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, degree: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == degree {
            out.push(prefix.clone());
            return;
        }
        for k in 0..degree {
            if !prefix.contains(&k) {
                prefix.push(k);
                extend(prefix, degree, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), degree, &mut out);
    out
}

/// Cycle notation on points `1..=degree`, e.g. `(123)`; the identity prints as `id`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            out.push_str(&(k + 1).to_string());
            k = perm[k];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("id");
    }
    out
}

/// Composition `p o q` (apply `q` first).
pub fn compose_permutations(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&k| p[k]).collect()
}

/// The symmetric group on `degree` points, composing right-to-left.
pub fn symmetric_table(degree: usize) -> GroupTable {
    let perms = permutations(degree);
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    GroupTable::from_fn_trusted(labels, 0, |i, j| {
        let c = compose_permutations(&perms[i], &perms[j]);
        perms.iter().position(|p| *p == c).expect("closed")
    })
}
