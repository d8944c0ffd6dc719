//! The quaternion group `Dc_2` and its 24 automorphisms.
//!
//! Automorphisms are named as `rep o Inn(c)`: one of six outer coset
//! representatives `id, phi1, ..., phi5` after an inner automorphism.

use crate::automorphism::{enumerate_automorphisms_bruteforce, GroupMap, TableAutomorphism};
use crate::error::Result;
use crate::group::{DicyclicElement, GroupParams};
use crate::oracle;
use crate::table::{self, klein_four_table, symmetric_table, GroupTable};

pub fn params() -> GroupParams {
    GroupParams::new(2).expect("n = 2 is valid")
}

fn el(name: &str) -> DicyclicElement {
    params().parse_element(name).expect("static element name")
}

fn from_images(x: &str, y: &str) -> TableAutomorphism {
    TableAutomorphism::from_generators(el(x), el(y)).expect("static automorphism")
}

/// Conjugating elements of the nontrivial inner automorphisms.
pub const INNER_CONJUGATORS: [&str; 3] = ["x", "y", "yx"];

/// `(name, x image, y image, order)` of the inner automorphisms.
pub const INNER_TABLE: [(&str, &str, &str, u64); 4] = [
    ("id", "x", "y", 1),
    ("Inn(x)", "x", "yx^2", 2),
    ("Inn(y)", "x^3", "y", 2),
    ("Inn(yx)", "x^3", "yx^2", 2),
];

/// `(name, x image, y image, order)` of the outer coset representatives.
pub const OUTER_REPRESENTATIVES: [(&str, &str, &str, u64); 6] = [
    ("id", "x", "y", 1),
    ("phi1", "x^3", "yx^3", 2),
    ("phi2", "yx^2", "x^3", 2),
    ("phi3", "yx^3", "yx^2", 2),
    ("phi4", "y", "yx", 3),
    ("phi5", "yx", "x", 3),
];

/// Permutation of `{1,2,3}` matched with each representative's coset.
pub const OUT_TO_S3: [&str; 6] = ["id", "(12)", "(13)", "(23)", "(123)", "(132)"];

/// Listing order of all 24 automorphisms as `(representative, conjugator)`.
pub const LISTING: [(usize, Option<&str>); 24] = [
    (0, None),
    (0, Some("x")),
    (0, Some("y")),
    (0, Some("yx")),
    (1, None),
    (2, None),
    (3, None),
    (1, Some("x")),
    (2, Some("yx")),
    (3, Some("y")),
    (4, None),
    (5, None),
    (4, Some("x")),
    (4, Some("y")),
    (4, Some("yx")),
    (5, Some("x")),
    (5, Some("y")),
    (5, Some("yx")),
    (1, Some("y")),
    (1, Some("yx")),
    (2, Some("x")),
    (2, Some("y")),
    (3, Some("x")),
    (3, Some("yx")),
];

pub fn label(rep: usize, conjugator: Option<&str>) -> String {
    match (rep, conjugator) {
        (0, None) => "id".to_string(),
        (0, Some(c)) => format!("Inn({c})"),
        (r, None) => OUTER_REPRESENTATIVES[r].0.to_string(),
        (r, Some(c)) => format!("{} o Inn({c})", OUTER_REPRESENTATIVES[r].0),
    }
}

pub fn representative(rep: usize) -> TableAutomorphism {
    let (_, x, y, _) = OUTER_REPRESENTATIVES[rep];
    from_images(x, y)
}

/// All 24 automorphisms with their labels, in listing order.
pub fn labelled_automorphisms() -> Vec<(String, TableAutomorphism)> {
    LISTING
        .iter()
        .map(|&(rep, conj)| {
            let base = representative(rep);
            let map = match conj {
                None => base,
                Some(c) => base
                    .compose(&TableAutomorphism::inner(&el(c)))
                    .expect("same group"),
            };
            (label(rep, conj), map)
        })
        .collect()
}

/// Label of an automorphism of `Dc_2`, if it is one.
pub fn label_of(phi: &impl GroupMap) -> Option<String> {
    let images = phi.images();
    labelled_automorphisms()
        .into_iter()
        .find(|(_, t)| t.images() == images)
        .map(|(name, _)| name)
}

#[derive(Debug, Clone)]
pub struct NamedAutomorphism {
    pub name: String,
    pub map: TableAutomorphism,
    pub order: u64,
}

#[derive(Debug, Clone)]
pub struct Dc2AutStructure {
    pub inner: Vec<NamedAutomorphism>,
    pub outer_representatives: Vec<NamedAutomorphism>,
    pub aut_order: usize,
    /// Index map `Inn(Dc_2) -> V`.
    pub inn_to_klein: Option<Vec<usize>>,
    /// Index map `Aut(Dc_2) -> S_4`.
    pub aut_to_s4: Option<Vec<usize>>,
    pub out_order: usize,
    pub out_abelian: bool,
    /// Index map `Out(Dc_2) -> S_3` found by search.
    pub out_to_s3: Option<Vec<usize>>,
    /// Whether the fixed representative-to-permutation table is a homomorphism.
    pub out_correspondence_is_homomorphism: bool,
    pub aut_table: GroupTable,
}

fn named(map: TableAutomorphism, name: &str) -> NamedAutomorphism {
    NamedAutomorphism {
        name: name.to_string(),
        order: map.exact_order(),
        map,
    }
}

/// Structure of `Aut(Dc_2)`, derived by brute force and isomorphism search.
pub fn dc2_aut_structure() -> Result<Dc2AutStructure> {
    let p = params();
    let all = enumerate_automorphisms_bruteforce(p);
    let labels = all
        .iter()
        .map(|t| label_of(t).unwrap_or_else(|| t.to_string()))
        .collect();
    let aut_table = oracle::automorphism_group_table(&all, labels)?;

    let mut inner_maps: Vec<TableAutomorphism> = Vec::new();
    for g in p.elements() {
        let inn = TableAutomorphism::inner(&g);
        if !inner_maps.contains(&inn) {
            inner_maps.push(inn);
        }
    }
    let inner: Vec<_> = INNER_TABLE
        .iter()
        .map(|&(name, x, y, _)| named(from_images(x, y), name))
        .collect();
    let inn_table = oracle::automorphism_group_table(
        &inner_maps,
        inner_maps.iter().map(ToString::to_string).collect(),
    )?;

    let outer_representatives: Vec<_> = OUTER_REPRESENTATIVES
        .iter()
        .map(|&(name, x, y, _)| named(from_images(x, y), name))
        .collect();

    // cosets phi Inn, one per representative
    let coset_of = |phi: &TableAutomorphism| -> Option<usize> {
        outer_representatives.iter().position(|rep| {
            inner_maps
                .iter()
                .any(|inn| rep.map.compose(inn).map(|c| c == *phi).unwrap_or(false))
        })
    };
    let out_table = GroupTable::from_fn(
        OUT_TO_S3.iter().map(|s| s.to_string()).collect(),
        0,
        |i, j| {
            let product = outer_representatives[i]
                .map
                .compose(&outer_representatives[j].map)
                .expect("same group");
            coset_of(&product).expect("cosets cover Aut")
        },
    )?;

    let s3 = table::permutations(3);
    let perm_of = |name: &str| {
        s3.iter()
            .find(|p| table::cycle_notation(p) == name)
            .cloned()
            .expect("valid cycle name")
    };
    let correspondence: Vec<_> = OUT_TO_S3.iter().map(|s| perm_of(s)).collect();
    let out_correspondence_is_homomorphism = (0..6).all(|i| {
        (0..6).all(|j| {
            correspondence[out_table.mul(i, j)]
                == table::compose_permutations(&correspondence[i], &correspondence[j])
        })
    });

    Ok(Dc2AutStructure {
        inn_to_klein: oracle::isomorphism_search(&inn_table, &klein_four_table()),
        aut_to_s4: oracle::isomorphism_search(&aut_table, &symmetric_table(4)),
        out_order: out_table.order(),
        out_abelian: out_table.is_abelian(),
        out_to_s3: oracle::isomorphism_search(&out_table, &symmetric_table(3)),
        out_correspondence_is_homomorphism,
        aut_order: all.len(),
        inner,
        outer_representatives,
        aut_table,
    })
}
