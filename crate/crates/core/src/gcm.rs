//! Generalized Cartan matrices: validation, symmetrization, type classification
//! and the Coxeter matrix of the Weyl group.
//!
//! Indices are 0-based throughout the Rust API. Text and JSON output shifts
//! them to 1-based so that vertex `i` prints as the label of `α_{i+1}`.

#![allow(clippy::needless_range_loop)]

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::det::determinant;
use crate::error::{Error, Result};

/// Largest rank accepted by [`GeneralizedCartanMatrix::classify`], which
/// inspects every principal submatrix.
pub const MAX_CLASSIFY_RANK: usize = 16;

/// A square integer matrix with 2 on the diagonal, non-positive entries off
/// it, and a symmetric zero pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedCartanMatrix {
    rows: Vec<Vec<i64>>,
}

impl GeneralizedCartanMatrix {
    /// Validates `rows` against the three GCM axioms.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    row: row + 1,
                    len: r.len(),
                    expected: n,
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let a = rows[i][j];
                if i == j {
                    if a != 2 {
                        return Err(Error::DiagonalNotTwo(i));
                    }
                } else if a > 0 {
                    return Err(Error::PositiveOffDiagonal(i, j));
                } else if a == 0 && rows[j][i] != 0 {
                    return Err(Error::ZeroAsymmetry(i, j));
                }
            }
        }
        Ok(Self { rows })
    }

    /// The number ℓ of simple roots.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The i-th column `A_(i)`.
    pub fn column(&self, i: usize) -> impl Iterator<Item = i64> + '_ {
        self.rows.iter().map(move |r| r[i])
    }

    pub fn transpose(&self) -> Self {
        let n = self.rank();
        Self {
            rows: (0..n)
                .map(|i| (0..n).map(|j| self.rows[j][i]).collect())
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// The principal submatrix on `indices`, in the given order.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            self.check_index(i)?;
        }
        Self::new(
            indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.rows[i][j]).collect())
                .collect(),
        )
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.rows)
    }

    /// Rank of A as a linear map, so `dim 𝔥 = 2ℓ − matrix_rank`.
    pub fn matrix_rank(&self) -> usize {
        let mut m: Vec<Vec<Ratio<BigInt>>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Ratio::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        let n = self.rank();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in 0..n {
                if r != rank && !m[r][col].is_zero() {
                    let f = &m[r][col] / &m[rank][col];
                    for c in col..n {
                        let v = &f * &m[rank][c];
                        m[r][c] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Connected components of the support graph (i ~ j when a_ij ≠ 0), each
    /// sorted, ordered by smallest index.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        components(self.rank(), |i, j| self.rows[i][j] != 0)
    }

    pub fn is_indecomposable(&self) -> bool {
        self.blocks().len() == 1
    }

    /// The canonical symmetrizer: positive integers q with `q_i a_ij = q_j a_ji`,
    /// coprime within each indecomposable block.
    pub fn symmetrizer(&self) -> Result<Symmetrizer> {
        let n = self.rank();
        let mut q: Vec<Option<Ratio<i128>>> = vec![None; n];
        let mut out = vec![0i64; n];
        for block in self.blocks() {
            let root = block[0];
            q[root] = Some(Ratio::one());
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                let qi = q[i].expect("visited");
                for j in 0..n {
                    if j == i || self.rows[i][j] == 0 {
                        continue;
                    }
                    let want = qi * Ratio::new(self.rows[i][j] as i128, self.rows[j][i] as i128);
                    match q[j] {
                        None => {
                            q[j] = Some(want);
                            queue.push_back(j);
                        }
                        Some(qj) if qj != want => return Err(Error::NotSymmetrizable),
                        Some(_) => {}
                    }
                }
            }
            let lcm = block
                .iter()
                .fold(1i128, |acc, &i| acc.lcm(q[i].expect("visited").denom()));
            let scaled: Vec<i128> = block
                .iter()
                .map(|&i| {
                    let v = q[i].expect("visited") * lcm;
                    *v.numer()
                })
                .collect();
            let g = scaled.iter().fold(0i128, |acc, x| acc.gcd(x));
            for (&i, v) in block.iter().zip(scaled) {
                out[i] = i64::try_from(v / g).map_err(|_| Error::Overflow)?;
            }
        }
        Ok(Symmetrizer { diag: out })
    }

    /// Finite, affine or indefinite type of an indecomposable matrix.
    pub fn classify(&self) -> Result<MatrixType> {
        if !self.is_indecomposable() {
            return Err(Error::Decomposable);
        }
        let n = self.rank();
        if n > MAX_CLASSIFY_RANK {
            return Err(Error::RankTooLarge(n, MAX_CLASSIFY_RANK));
        }
        let full = (1usize << n) - 1;
        let size = 1usize << n;
        // Per subset S (bitmask): every principal minor inside S is positive.
        let mut all_positive = vec![true; size];
        // Every indecomposable principal submatrix inside S is finite or affine.
        let mut all_fin_aff = vec![true; size];
        // Some indecomposable principal submatrix inside S is affine.
        let mut has_affine = vec![false; size];
        let mut kind = vec![None; size];

        for s in 1..size {
            let idx: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
            let sub: Vec<Vec<i64>> = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.rows[i][j]).collect())
                .collect();
            let det = determinant(&sub);
            let maximal_proper = idx.iter().map(|&i| s & !(1 << i));
            let proper_positive = maximal_proper.clone().all(|t| all_positive[t]);
            let proper_fin_aff = maximal_proper.clone().all(|t| all_fin_aff[t]);
            let proper_affine = maximal_proper.clone().any(|t| has_affine[t]);

            all_positive[s] = proper_positive && det.is_positive();
            let connected = components(idx.len(), |a, b| sub[a][b] != 0).len() == 1;
            let this = if !connected {
                None
            } else if all_positive[s] {
                Some(MatrixType::Finite)
            } else if det.is_zero() && proper_positive {
                Some(MatrixType::Affine)
            } else {
                Some(MatrixType::Indefinite {
                    hyperbolic: proper_fin_aff,
                    noncompact: proper_fin_aff && proper_affine,
                })
            };
            all_fin_aff[s] = proper_fin_aff && !matches!(this, Some(MatrixType::Indefinite { .. }));
            has_affine[s] = proper_affine || this == Some(MatrixType::Affine);
            kind[s] = this;
        }
        Ok(kind[full].expect("indecomposable"))
    }

    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        let n = self.rank();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            CoxeterEntry::Order(1)
                        } else {
                            CoxeterEntry::from_product(self.rows[i][j] * self.rows[j][i])
                        }
                    })
                    .collect()
            })
            .collect();
        CoxeterMatrix { entries }
    }

    /// First index pair (i < j) whose 2×2 principal submatrix is
    /// `[[2,-2],[-2,2]]` (type A₁⁽¹⁾) or `[[2,-1],[-4,2]]` up to swapping
    /// (type A₂⁽²⁾).
    pub fn affine_rank2_submatrix(&self) -> Option<(usize, usize)> {
        let n = self.rank();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| {
                matches!(
                    (self.rows[i][j], self.rows[j][i]),
                    (-2, -2) | (-1, -4) | (-4, -1)
                )
            })
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", write_rows(&self.rows))
    }
}

impl Serialize for GeneralizedCartanMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneralizedCartanMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        Self::new(rows).map_err(serde::de::Error::custom)
    }
}

fn write_rows<T: fmt::Display>(rows: &[Vec<T>]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", body.join(","))
}

/// Connected components of the graph on `0..n` with adjacency `adj`; each
/// component sorted, components ordered by smallest member.
pub(crate) fn components(n: usize, adj: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if !seen[j] && j != i && adj(i, j) {
                    seen[j] = true;
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Diagonal `q` with `diag(q)·A` symmetric; stored as coprime positive
/// integers per block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symmetrizer {
    diag: Vec<i64>,
}

impl Symmetrizer {
    pub fn diag(&self) -> &[i64] {
        &self.diag
    }

    /// `diag(q)·A`.
    pub fn symmetrized(&self, a: &GeneralizedCartanMatrix) -> Vec<Vec<i64>> {
        a.rows
            .iter()
            .zip(&self.diag)
            .map(|(r, &q)| r.iter().map(|&x| q * x).collect())
            .collect()
    }
}

impl fmt::Display for Symmetrizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.diag.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", cells.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MatrixType {
    Finite,
    Affine,
    Indefinite { hyperbolic: bool, noncompact: bool },
}

impl MatrixType {
    pub fn is_hyperbolic(&self) -> bool {
        matches!(
            self,
            MatrixType::Indefinite {
                hyperbolic: true,
                ..
            }
        )
    }
}

impl fmt::Display for MatrixType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixType::Finite => f.write_str("finite"),
            MatrixType::Affine => f.write_str("affine"),
            MatrixType::Indefinite {
                hyperbolic: false, ..
            } => f.write_str("indefinite"),
            MatrixType::Indefinite {
                hyperbolic: true,
                noncompact: false,
            } => f.write_str("indefinite (hyperbolic, compact)"),
            MatrixType::Indefinite {
                hyperbolic: true,
                noncompact: true,
            } => f.write_str("indefinite (hyperbolic, noncompact)"),
        }
    }
}

/// Order of `w_i w_j`; serialized as an integer or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterEntry {
    Order(u32),
    Infinite,
}

impl CoxeterEntry {
    fn from_product(p: i64) -> Self {
        match p {
            0 => CoxeterEntry::Order(2),
            1 => CoxeterEntry::Order(3),
            2 => CoxeterEntry::Order(4),
            3 => CoxeterEntry::Order(6),
            _ => CoxeterEntry::Infinite,
        }
    }
}

impl fmt::Display for CoxeterEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterEntry::Order(m) => write!(f, "{m}"),
            CoxeterEntry::Infinite => f.write_str("∞"),
        }
    }
}

impl Serialize for CoxeterEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CoxeterEntry::Order(m) => s.serialize_u32(*m),
            CoxeterEntry::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for CoxeterEntry {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(m) => Ok(CoxeterEntry::Order(m)),
            Raw::Str(s) if s == "inf" => Ok(CoxeterEntry::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad coxeter entry {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<CoxeterEntry>>,
}

impl CoxeterMatrix {
    pub fn entries(&self) -> &[Vec<CoxeterEntry>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> CoxeterEntry {
        self.entries[i][j]
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", write_rows(&self.entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gcm(rows: &[&[i64]]) -> GeneralizedCartanMatrix {
        GeneralizedCartanMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn hat() -> GeneralizedCartanMatrix {
        gcm(&[&[2, -2, 0], &[-2, 2, -1], &[0, -1, 2]])
    }

    fn aprime() -> GeneralizedCartanMatrix {
        gcm(&[&[2, -1, 0], &[-4, 2, -1], &[0, -1, 2]])
    }

    #[test]
    fn validation() {
        assert!(GeneralizedCartanMatrix::new(vec![vec![2, -1], vec![-1, 2]]).is_ok());
        assert!(GeneralizedCartanMatrix::new(vec![vec![2, 0], vec![0, 2]]).is_ok());
        assert_eq!(
            GeneralizedCartanMatrix::new(vec![vec![2, -1], vec![0, 2]]),
            Err(Error::ZeroAsymmetry(1, 0))
        );
        assert_eq!(
            GeneralizedCartanMatrix::new(vec![vec![2, 1], vec![1, 2]]),
            Err(Error::PositiveOffDiagonal(0, 1))
        );
        assert_eq!(
            GeneralizedCartanMatrix::new(vec![vec![2, -1], vec![-1, 3]]),
            Err(Error::DiagonalNotTwo(1))
        );
        assert!(matches!(
            GeneralizedCartanMatrix::new(vec![vec![2, -1], vec![-1]]),
            Err(Error::NotSquare { .. })
        ));
        assert_eq!(GeneralizedCartanMatrix::new(vec![]), Err(Error::Empty));
    }

    #[test]
    fn zero_asymmetry_message_is_one_based() {
        let err = GeneralizedCartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).unwrap_err();
        assert_eq!(err.to_string(), "a_{2,1} = 0 but a_{1,2} != 0");
    }

    #[test]
    fn indecomposability() {
        assert!(gcm(&[&[2, -1], &[-1, 2]]).is_indecomposable());
        assert!(!gcm(&[&[2, 0], &[0, 2]]).is_indecomposable());
        assert!(hat().is_indecomposable());
        assert_eq!(
            gcm(&[&[2, 0, -1], &[0, 2, 0], &[-1, 0, 2]]).blocks(),
            vec![vec![0, 2], vec![1]]
        );
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(aprime().symmetrizer().unwrap().diag(), &[4, 1, 1]);
        assert_eq!(hat().symmetrizer().unwrap().diag(), &[1, 1, 1]);
        assert_eq!(
            gcm(&[&[2, -1, -1], &[-2, 2, -1], &[-1, -2, 2]]).symmetrizer(),
            Err(Error::NotSymmetrizable)
        );
        // B2: q_1 a_12 = q_2 a_21 with a_12 = -2, a_21 = -1.
        assert_eq!(
            gcm(&[&[2, -2], &[-1, 2]]).symmetrizer().unwrap().diag(),
            &[1, 2]
        );
        // Blocks are normalized independently.
        let two_blocks = gcm(&[&[2, -3, 0], &[-1, 2, 0], &[0, 0, 2]]);
        assert_eq!(two_blocks.symmetrizer().unwrap().diag(), &[1, 3, 1]);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            gcm(&[&[2, -2], &[-2, 2]]).classify(),
            Ok(MatrixType::Affine)
        );
        assert_eq!(
            gcm(&[&[2, -3], &[-3, 2]]).classify(),
            Ok(MatrixType::Indefinite {
                hyperbolic: true,
                noncompact: false
            })
        );
        assert_eq!(
            hat().classify(),
            Ok(MatrixType::Indefinite {
                hyperbolic: true,
                noncompact: true
            })
        );
        assert_eq!(
            gcm(&[&[2, -1], &[-1, 2]]).classify(),
            Ok(MatrixType::Finite)
        );
        assert_eq!(
            gcm(&[&[2, 0], &[0, 2]]).classify(),
            Err(Error::Decomposable)
        );
        assert_eq!(gcm(&[&[2]]).classify(), Ok(MatrixType::Finite));
    }

    #[test]
    fn classify_affine_and_non_hyperbolic_rank3() {
        // A2^(1): triangle of single edges.
        let a2_aff = gcm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(a2_aff.classify(), Ok(MatrixType::Affine));
        // Triangle containing a hyperbolic rank-2 submatrix is not hyperbolic.
        let t = gcm(&[&[2, -3, -1], &[-3, 2, -1], &[-1, -1, 2]]);
        assert_eq!(
            t.classify(),
            Ok(MatrixType::Indefinite {
                hyperbolic: false,
                noncompact: false
            })
        );
    }

    #[test]
    fn coxeter_matrices_of_the_pair_agree() {
        use CoxeterEntry::*;
        let expected = vec![
            vec![Order(1), Infinite, Order(2)],
            vec![Infinite, Order(1), Order(3)],
            vec![Order(2), Order(3), Order(1)],
        ];
        assert_eq!(hat().coxeter_matrix().entries(), expected.as_slice());
        assert_eq!(aprime().coxeter_matrix(), hat().coxeter_matrix());
        assert_eq!(
            gcm(&[&[2, -1], &[-1, 2]]).coxeter_matrix().get(0, 1),
            Order(3)
        );
        assert_eq!(
            hat().coxeter_matrix().to_string(),
            "[[1,∞,2],[∞,1,3],[2,3,1]]"
        );
        assert_eq!(
            serde_json::to_string(&hat().coxeter_matrix()).unwrap(),
            r#"[[1,"inf",2],["inf",1,3],[2,3,1]]"#
        );
    }

    #[test]
    fn affine_rank2_witness() {
        assert_eq!(hat().affine_rank2_submatrix(), Some((0, 1)));
        assert_eq!(aprime().affine_rank2_submatrix(), Some((0, 1)));
        assert_eq!(gcm(&[&[2, -1], &[-1, 2]]).affine_rank2_submatrix(), None);
    }

    #[test]
    fn cartan_subalgebra_dimension() {
        assert_eq!(gcm(&[&[2, -2], &[-2, 2]]).matrix_rank(), 1);
        assert_eq!(hat().matrix_rank(), 3);
    }

    fn raw_matrix(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max_n)
            .prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-3i64..4, n), n))
    }

    fn axioms_hold(rows: &[Vec<i64>]) -> bool {
        let n = rows.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                if i == j {
                    rows[i][j] == 2
                } else {
                    rows[i][j] <= 0 && ((rows[i][j] == 0) == (rows[j][i] == 0))
                }
            })
        })
    }

    fn random_gcm(max_n: usize) -> impl Strategy<Value = GeneralizedCartanMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0i64..4, 0i64..4), n * n).prop_map(move |pairs| {
                let mut rows = vec![vec![0i64; n]; n];
                for i in 0..n {
                    rows[i][i] = 2;
                    for j in i + 1..n {
                        let (x, y) = pairs[i * n + j];
                        if x != 0 && y != 0 {
                            rows[i][j] = -x;
                            rows[j][i] = -y;
                        }
                    }
                }
                GeneralizedCartanMatrix::new(rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn validate_accepts_exactly_the_axioms(rows in raw_matrix(4)) {
            let mut rows = rows;
            // Bias toward near-valid inputs.
            for (i, r) in rows.iter_mut().enumerate() { if i % 2 == 0 { r[i] = 2; } }
            prop_assert_eq!(GeneralizedCartanMatrix::new(rows.clone()).is_ok(), axioms_hold(&rows));
        }

        #[test]
        fn symmetrizer_symmetrizes(a in random_gcm(4)) {
            if let Ok(q) = a.symmetrizer() {
                prop_assert!(q.diag().iter().all(|&x| x > 0));
                let s = q.symmetrized(&a);
                for i in 0..a.rank() { for j in 0..a.rank() { prop_assert_eq!(s[i][j], s[j][i]); } }
            }
        }

        #[test]
        fn classify_is_permutation_invariant(a in random_gcm(4), seed in any::<u64>()) {
            let n = a.rank();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut x = seed;
            for i in (1..n).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (x >> 33) as usize % (i + 1));
            }
            let b = a.principal_submatrix(&perm).unwrap();
            prop_assert_eq!(a.classify(), b.classify());
        }

        #[test]
        fn rank2_classification_by_product(x in 1i64..8, y in 1i64..8) {
            let a = GeneralizedCartanMatrix::new(vec![vec![2, -x], vec![-y, 2]]).unwrap();
            let t = a.classify().unwrap();
            match x * y {
                p if p <= 3 => prop_assert_eq!(t, MatrixType::Finite),
                4 => prop_assert_eq!(t, MatrixType::Affine),
                _ => prop_assert_eq!(t, MatrixType::Indefinite { hyperbolic: true, noncompact: false }),
            }
        }

        #[test]
        fn symmetric_means_trivial_symmetrizer(a in random_gcm(4)) {
            let s = GeneralizedCartanMatrix::new(
                (0..a.rank()).map(|i| (0..a.rank()).map(|j| a.entry(i.min(j), i.max(j))).collect()).collect()
            ).unwrap();
            prop_assert!(s.symmetrizer().unwrap().diag().iter().all(|&q| q == 1));
        }
    }
}
