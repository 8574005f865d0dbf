//! Named generalized Cartan matrices used by the CLI, the tests and the
//! Python bindings.
//!
//! `H1_4` is not derived here: it is the rank-4 hyperbolic diagram whose
//! Weyl group acts transitively and simply transitively on real roots, taken
//! from the published classification tables of hyperbolic Dynkin diagrams
//! (the complete graph on four vertices with single edges). `E10` follows the
//! standard diagram: a path 1–…–9 with vertex 10 attached to vertex 7.

use crate::gcm::GeneralizedCartanMatrix;

pub const NAMES: [&str; 13] = [
    "A1",
    "A2",
    "B2",
    "A1xA1",
    "A1_aff",
    "H3",
    "H2_3",
    "A1hat_aff",
    "Aprime",
    "E10",
    "H1_4",
    "A3",
    "B3",
];

/// Returns the fixture called `name`, or `None` if unknown.
pub fn fixture(name: &str) -> Option<GeneralizedCartanMatrix> {
    let rows: Vec<Vec<i64>> = match name {
        "A1" => vec![vec![2]],
        "A2" => vec![vec![2, -1], vec![-1, 2]],
        "B2" => vec![vec![2, -2], vec![-1, 2]],
        "A1xA1" => vec![vec![2, 0], vec![0, 2]],
        "A1_aff" => vec![vec![2, -2], vec![-2, 2]],
        "H3" => vec![vec![2, -3], vec![-3, 2]],
        "H2_3" => vec![vec![2, -2, -1], vec![-2, 2, -1], vec![-1, -1, 2]],
        "A1hat_aff" => vec![vec![2, -2, 0], vec![-2, 2, -1], vec![0, -1, 2]],
        "Aprime" => vec![vec![2, -1, 0], vec![-4, 2, -1], vec![0, -1, 2]],
        "E10" => e10(),
        "H1_4" => (0..4)
            .map(|i| (0..4).map(|j| if i == j { 2 } else { -1 }).collect())
            .collect(),
        "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        "B3" => vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
        _ => return None,
    };
    Some(GeneralizedCartanMatrix::new(rows).expect("fixtures satisfy the GCM axioms"))
}

fn e10() -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64; 10]; 10];
    let mut link = |i: usize, j: usize| {
        rows[i][j] = -1;
        rows[j][i] = -1;
    };
    for i in 0..8 {
        link(i, i + 1);
    }
    link(6, 9);
    for (i, r) in rows.iter_mut().enumerate() {
        r[i] = 2;
    }
    rows
}
