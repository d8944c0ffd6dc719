//! Brute-force engines that recompute results from definitions.
//!
//! Nothing here consults the `(r, s)` formulas: only group multiplication,
//! inversion and pointwise application of a [`GroupMap`] are used.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Display;

use crate::automorphism::{GroupMap, TableAutomorphism};
use crate::error::{Error, Result};
use crate::group::DicyclicElement;
use crate::table::GroupTable;

pub type ElementSet = BTreeSet<DicyclicElement>;

/// `{g : phi(g) = g}`.
pub fn definitional_h(phi: &impl GroupMap) -> ElementSet {
    phi.params()
        .elements()
        .filter(|g| phi.image(g) == *g)
        .collect()
}

/// `{g phi(g)^-1 : g in G}`.
pub fn definitional_q(phi: &impl GroupMap) -> ElementSet {
    phi.params()
        .elements()
        .map(|g| g * phi.image(&g).inverse())
        .collect()
}

/// `{g : phi(g) = g^-1}`.
pub fn definitional_r(phi: &impl GroupMap) -> ElementSet {
    phi.params()
        .elements()
        .filter(|g| phi.image(g) == g.inverse())
        .collect()
}

/// `g q phi(g)^-1`, computed pointwise.
pub fn twisted_action(
    phi: &impl GroupMap,
    g: &DicyclicElement,
    q: &DicyclicElement,
) -> DicyclicElement {
    *g * *q * phi.image(g).inverse()
}

/// An action of `generators` on a finite `carrier`.
pub struct ActionClosureProblem<T, A, F> {
    pub carrier: BTreeSet<T>,
    pub generators: Vec<A>,
    pub act: F,
}

impl<T, A, F> ActionClosureProblem<T, A, F>
where
    T: Ord + Clone + Display,
    A: Display,
    F: Fn(&A, &T) -> T,
{
    pub fn new(carrier: BTreeSet<T>, generators: Vec<A>, act: F) -> Self {
        ActionClosureProblem {
            carrier,
            generators,
            act,
        }
    }

    /// Least act-closed subset of the carrier containing `seed`, built breadth first.
    pub fn orbit(&self, seed: &T) -> Result<BTreeSet<T>> {
        if !self.carrier.contains(seed) {
            return Err(Error::Precondition(format!(
                "seed {seed} is not in the carrier"
            )));
        }
        let mut seen = BTreeSet::from([seed.clone()]);
        let mut queue = VecDeque::from([seed.clone()]);
        while let Some(current) = queue.pop_front() {
            for actor in &self.generators {
                let image = (self.act)(actor, &current);
                if !self.carrier.contains(&image) {
                    return Err(Error::ClosureViolation {
                        actor: actor.to_string(),
                        element: current.to_string(),
                        image: image.to_string(),
                    });
                }
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        Ok(seen)
    }

    /// All orbits, listed by their least element.
    pub fn partition(&self) -> Result<Vec<BTreeSet<T>>> {
        let mut covered = BTreeSet::new();
        let mut orbits = Vec::new();
        for seed in &self.carrier {
            if covered.contains(seed) {
                continue;
            }
            let orbit = self.orbit(seed)?;
            covered.extend(orbit.iter().cloned());
            orbits.push(orbit);
        }
        Ok(orbits)
    }
}

pub fn orbit_closure<T, A, F>(
    problem: &ActionClosureProblem<T, A, F>,
    seed: &T,
) -> Result<BTreeSet<T>>
where
    T: Ord + Clone + Display,
    A: Display,
    F: Fn(&A, &T) -> T,
{
    problem.orbit(seed)
}

/// Orbits of `Q` under twisted conjugation by every element of `acting`.
pub fn twisted_orbits(phi: &impl GroupMap, acting: &ElementSet) -> Result<Vec<ElementSet>> {
    let problem = ActionClosureProblem::new(
        definitional_q(phi),
        acting.iter().copied().collect(),
        |g: &DicyclicElement, q: &DicyclicElement| twisted_action(phi, g, q),
    );
    problem.partition()
}

pub fn h_orbits(phi: &impl GroupMap) -> Result<Vec<ElementSet>> {
    twisted_orbits(phi, &definitional_h(phi))
}

pub fn g_orbits(phi: &impl GroupMap) -> Result<Vec<ElementSet>> {
    twisted_orbits(phi, &phi.params().elements().collect())
}

/// A conjugating element `g` with `g h g^-1 = phi(h)` for all `h`.
pub fn conjugator_search(phi: &impl GroupMap) -> Option<DicyclicElement> {
    let params = phi.params();
    params.elements().find(|g| {
        let g_inv = g.inverse();
        params.elements().all(|h| *g * h * g_inv == phi.image(&h))
    })
}

/// Whether `phi^k` is the identity, by iterating `phi` on every element.
pub fn pointwise_power_is_identity(phi: &impl GroupMap, k: u64) -> bool {
    phi.params().elements().all(|g| {
        let mut h = g;
        for _ in 0..k {
            h = phi.image(&h);
        }
        h == g
    })
}

/// Least `k >= 1` with `phi^k = id`, by iterating images.
pub fn pointwise_order(phi: &impl GroupMap) -> u64 {
    let mut current = phi.images();
    let mut k = 1;
    while current.iter().enumerate().any(|(i, g)| g.index() != i) {
        current = current.iter().map(|g| phi.image(g)).collect();
        k += 1;
    }
    k
}

/// `{r in Z_m : r^2 = 1}`.
pub fn square_roots_of_unity(m: u64) -> Vec<u64> {
    (0..m).filter(|&r| (r * r) % m == 1 % m).collect()
}

fn index_by_images(automorphisms: &[TableAutomorphism]) -> BTreeMap<Vec<DicyclicElement>, usize> {
    automorphisms
        .iter()
        .enumerate()
        .map(|(i, a)| (a.images(), i))
        .collect()
}

/// Composition table of a list of automorphisms; fails if the list is not closed.
pub fn automorphism_group_table(
    automorphisms: &[TableAutomorphism],
    labels: Vec<String>,
) -> Result<GroupTable> {
    let index = index_by_images(automorphisms);
    let identity = automorphisms
        .iter()
        .position(TableAutomorphism::is_identity)
        .ok_or(Error::NotClosed)?;
    let mut product = vec![vec![0; automorphisms.len()]; automorphisms.len()];
    for (i, a) in automorphisms.iter().enumerate() {
        for (j, b) in automorphisms.iter().enumerate() {
            let c = a.compose(b)?;
            product[i][j] = *index.get(&c.images()).ok_or(Error::NotClosed)?;
        }
    }
    GroupTable::new(labels, product, identity)
}

/// Classes under `theta = sigma phi sigma^-1`, as sorted index lists.
pub fn aut_conjugacy_classes(automorphisms: &[TableAutomorphism]) -> Result<Vec<Vec<usize>>> {
    let index = index_by_images(automorphisms);
    if index.len() != automorphisms.len() {
        return Err(Error::NotClosed);
    }
    for a in automorphisms {
        for b in automorphisms {
            if !index.contains_key(&a.compose(b)?.images()) {
                return Err(Error::NotClosed);
            }
        }
    }
    let mut assigned = vec![false; automorphisms.len()];
    let mut classes = Vec::new();
    for (i, phi) in automorphisms.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let mut class = BTreeSet::new();
        for sigma in automorphisms {
            let conj = sigma.compose(phi)?.compose(&sigma.invert())?;
            let j = index[&conj.images()];
            assigned[j] = true;
            class.insert(j);
        }
        classes.push(class.into_iter().collect());
    }
    Ok(classes)
}

/// Greedy generating set, preferring elements of large order.
pub fn generating_set(table: &GroupTable) -> Vec<usize> {
    let mut candidates: Vec<usize> = (0..table.order()).collect();
    candidates.sort_by_key(|&i| (std::cmp::Reverse(table.element_order(i)), i));
    let mut generators = Vec::new();
    let mut span = BTreeSet::from([table.identity()]);
    for c in candidates {
        if span.contains(&c) {
            continue;
        }
        generators.push(c);
        span = subgroup_closure(table, &generators);
        if span.len() == table.order() {
            break;
        }
    }
    generators
}

fn subgroup_closure(table: &GroupTable, generators: &[usize]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([table.identity()]);
    let mut queue = VecDeque::from([table.identity()]);
    while let Some(e) = queue.pop_front() {
        for &g in generators {
            let t = table.mul(e, g);
            if seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    seen
}

// Extends generator images to the subgroup they generate; None on conflict.
fn extend_partial(
    source: &GroupTable,
    target: &GroupTable,
    generators: &[usize],
    images: &[usize],
) -> Option<Vec<Option<usize>>> {
    let mut map = vec![None; source.order()];
    let mut used = vec![false; target.order()];
    map[source.identity()] = Some(target.identity());
    used[target.identity()] = true;
    let mut queue = VecDeque::from([source.identity()]);
    while let Some(e) = queue.pop_front() {
        let e_img = map[e].expect("queued elements are mapped");
        for (&g, &g_img) in generators.iter().zip(images) {
            let t = source.mul(e, g);
            let t_img = target.mul(e_img, g_img);
            match map[t] {
                Some(existing) if existing != t_img => return None,
                Some(_) => {}
                None => {
                    if used[t_img] {
                        return None;
                    }
                    used[t_img] = true;
                    map[t] = Some(t_img);
                    queue.push_back(t);
                }
            }
        }
    }
    Some(map)
}

fn is_isomorphism(source: &GroupTable, target: &GroupTable, map: &[usize]) -> bool {
    let n = source.order();
    let distinct: BTreeSet<_> = map.iter().collect();
    distinct.len() == n
        && (0..n).all(|i| (0..n).all(|j| map[source.mul(i, j)] == target.mul(map[i], map[j])))
}

/// An isomorphism `source -> target` as an index map, found by backtracking
/// over images of a generating set with element orders matched.
pub fn isomorphism_search(source: &GroupTable, target: &GroupTable) -> Option<Vec<usize>> {
    if source.order() != target.order() {
        return None;
    }
    let mut source_profile = source.order_profile();
    let mut target_profile = target.order_profile();
    let target_orders = target_profile.clone();
    source_profile.sort_unstable();
    target_profile.sort_unstable();
    if source_profile != target_profile {
        return None;
    }
    let generators = generating_set(source);
    let candidates: Vec<Vec<usize>> = generators
        .iter()
        .map(|&g| {
            let order = source.element_order(g);
            (0..target.order())
                .filter(|&t| target_orders[t] == order)
                .collect()
        })
        .collect();

    fn backtrack(
        source: &GroupTable,
        target: &GroupTable,
        generators: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let depth = images.len();
        let partial = extend_partial(source, target, &generators[..depth], images)?;
        if depth == generators.len() {
            let map: Vec<usize> = partial.into_iter().collect::<Option<_>>()?;
            return is_isomorphism(source, target, &map).then_some(map);
        }
        for &c in &candidates[depth] {
            images.push(c);
            if let Some(found) = backtrack(source, target, generators, candidates, images) {
                return Some(found);
            }
            images.pop();
        }
        None
    }

    backtrack(source, target, &generators, &candidates, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{enumerate_automorphisms_bruteforce, make_rs};
    use crate::group::GroupParams;
    use crate::table::{cyclic_table, klein_four_table, symmetric_table};

    fn dc(n: i64) -> GroupParams {
        GroupParams::new(n).unwrap()
    }

    fn names(set: &ElementSet) -> Vec<String> {
        set.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn definitional_sets() {
        let phi = make_rs(5, 2, dc(3)).unwrap();
        assert_eq!(names(&definitional_q(&phi)), ["1", "x^2", "x^4"]);
        assert_eq!(names(&definitional_h(&phi)), ["1", "x^3", "yx", "yx^4"]);
        let id = TableAutomorphism::identity(dc(4));
        assert_eq!(definitional_h(&id).len(), 16);
        let split = make_rs(1, 3, dc(3)).unwrap();
        assert_eq!(
            names(&definitional_r(&split)),
            ["1", "x^3", "y", "yx", "yx^2", "yx^3", "yx^4", "yx^5"]
        );
    }

    #[test]
    fn closure_examples() {
        let phi = make_rs(5, 2, dc(3)).unwrap();
        let p = dc(3);
        let problem = ActionClosureProblem::new(
            definitional_q(&phi),
            definitional_h(&phi).into_iter().collect(),
            |g: &DicyclicElement, q: &DicyclicElement| twisted_action(&phi, g, q),
        );
        assert_eq!(names(&problem.orbit(&p.x_pow(2)).unwrap()), ["x^2", "x^4"]);
        let whole = g_orbits(&phi).unwrap();
        assert_eq!(whole, vec![definitional_q(&phi)]);

        let lonely: ActionClosureProblem<DicyclicElement, DicyclicElement, _> =
            ActionClosureProblem::new(
                p.elements().collect(),
                vec![],
                |_: &DicyclicElement, q: &DicyclicElement| *q,
            );
        assert_eq!(lonely.orbit(&p.y()).unwrap().len(), 1);
    }

    #[test]
    fn closure_violation_is_reported() {
        let p = dc(3);
        let carrier: ElementSet = [p.identity(), p.x()].into_iter().collect();
        let problem = ActionClosureProblem::new(
            carrier,
            vec![p.x()],
            |g: &DicyclicElement, q: &DicyclicElement| *g * *q,
        );
        match problem.orbit(&p.identity()) {
            Err(Error::ClosureViolation {
                actor,
                element,
                image,
            }) => {
                assert_eq!(
                    (actor.as_str(), element.as_str(), image.as_str()),
                    ("x", "x", "x^2")
                );
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(problem.orbit(&p.y()).is_err());
    }

    #[test]
    fn orbit_is_minimal() {
        let phi = make_rs(5, 2, dc(3)).unwrap();
        let h: Vec<_> = definitional_h(&phi).into_iter().collect();
        for orbit in h_orbits(&phi).unwrap() {
            for drop in &orbit {
                let rest: ElementSet = orbit.iter().filter(|q| *q != drop).copied().collect();
                let closed = rest
                    .iter()
                    .all(|q| h.iter().all(|g| rest.contains(&twisted_action(&phi, g, q))));
                assert!(!closed || rest.is_empty());
            }
        }
    }

    #[test]
    fn conjugacy_classes_of_small_auts() {
        let auts = enumerate_automorphisms_bruteforce(dc(2));
        let classes = aut_conjugacy_classes(&auts).unwrap();
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), 24);
        let id = auts
            .iter()
            .position(TableAutomorphism::is_identity)
            .unwrap();
        assert!(classes.contains(&vec![id]));
        assert_eq!(
            aut_conjugacy_classes(&auts[1..]).unwrap_err(),
            Error::NotClosed
        );
    }

    #[test]
    fn isomorphism_search_cases() {
        let s4 = symmetric_table(4);
        let auts = enumerate_automorphisms_bruteforce(dc(2));
        let labels = auts.iter().map(ToString::to_string).collect();
        let aut_table = automorphism_group_table(&auts, labels).unwrap();
        let map = isomorphism_search(&aut_table, &s4).unwrap();
        assert!(is_isomorphism(&aut_table, &s4, &map));
        assert!(isomorphism_search(&cyclic_table(4), &klein_four_table()).is_none());
        assert!(isomorphism_search(&cyclic_table(6), &symmetric_table(3)).is_none());
        assert!(isomorphism_search(&klein_four_table(), &klein_four_table()).is_some());
    }

    #[test]
    fn dicyclic_is_not_dihedral_like() {
        // Dc_2 and C_2 x C_4 share order 8 but not order profiles.
        let q8 = crate::group::cayley_table(dc(2));
        let c2c4 = GroupTable::from_fn((0..8).map(|k| k.to_string()).collect(), 0, |i, j| {
            ((i / 4 + j / 4) % 2) * 4 + (i % 4 + j % 4) % 4
        })
        .unwrap();
        assert!(isomorphism_search(&q8, &c2c4).is_none());
        assert!(isomorphism_search(&q8, &q8).is_some());
    }

    #[test]
    fn square_roots_small() {
        assert_eq!(square_roots_of_unity(6), vec![1, 5]);
        assert_eq!(square_roots_of_unity(4), vec![1, 3]);
        assert_eq!(square_roots_of_unity(24).len(), 8);
    }
}
