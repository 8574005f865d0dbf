//! Root vectors in simple-root coordinates and the simple-reflection action.
//!
//! The reflection `w_i` acts on coordinates by
//! `β ↦ β − (β·A_(i)) α_i`, where `A_(i)` is the i-th column of A. Only the
//! i-th coordinate changes.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gcm::{GeneralizedCartanMatrix, Symmetrizer};

pub type Rational = Ratio<i128>;

/// Coordinates `(b_1, …, b_ℓ)` of `β = Σ b_i α_i`. Orders lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    /// The simple root `α_i` in rank `rank`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `ρ_i(β)`.
    pub fn coordinate(&self, i: usize) -> Result<i64> {
        self.0.get(i).copied().ok_or(Error::IndexOutOfRange {
            index: i,
            rank: self.0.len(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// True when every coordinate is non-negative.
    pub fn is_positive(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.0.iter().all(|&x| x >= 0))
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x <= 0)
    }

    /// Nonzero with coordinates of a single sign.
    pub fn has_uniform_sign(&self) -> bool {
        !self.is_zero() && (self.0.iter().all(|&x| x >= 0) || self.0.iter().all(|&x| x <= 0))
    }

    /// Index of the simple root this vector equals, if any.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &x) in self.0.iter().enumerate() {
            match x {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// `Σ |b_i|`.
    pub fn height(&self) -> u64 {
        self.0.iter().map(|x| x.unsigned_abs()).sum()
    }

    /// Sup norm `max |b_i|`.
    pub fn sup_norm(&self) -> u64 {
        self.0.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", cells.join(","))
    }
}

impl From<Vec<i64>> for RootVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

/// A product of simple reflections, applied right to left: `[i, j]` means
/// `w_i w_j`, so `w_j` acts first. Letters are 0-based in memory and
/// serialize 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w_i · self`: the new letter acts last.
    pub fn push_left(&mut self, i: usize) {
        self.0.insert(0, i);
    }

    /// `self · other`: `other` acts first.
    pub fn then_after(mut self, other: &WeylWord) -> Self {
        self.0.extend_from_slice(&other.0);
        self
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let cells: Vec<String> = self.0.iter().map(|i| format!("w_{}", i + 1)).collect();
        f.write_str(&cells.join(" "))
    }
}

impl Serialize for WeylWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeylWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(d)?;
        raw.into_iter()
            .map(|i| {
                i.checked_sub(1)
                    .ok_or_else(|| serde::de::Error::custom("word letters are 1-based"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(WeylWord)
    }
}

fn check_dim(a: &GeneralizedCartanMatrix, beta: &RootVector) -> Result<()> {
    if beta.dim() == a.rank() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a.rank(),
            got: beta.dim(),
        })
    }
}

/// `⟨β, α_i^∨⟩ = β·A_(i)`.
pub fn pairing(a: &GeneralizedCartanMatrix, beta: &RootVector, i: usize) -> i128 {
    beta.0
        .iter()
        .zip(a.column(i))
        .map(|(&b, c)| b as i128 * c as i128)
        .sum()
}

/// All pairings `β·A_(i)` for `i = 0..ℓ`.
pub fn pairings(a: &GeneralizedCartanMatrix, beta: &RootVector) -> Vec<i128> {
    (0..a.rank()).map(|i| pairing(a, beta, i)).collect()
}

/// `w_i β`.
pub fn reflect(a: &GeneralizedCartanMatrix, i: usize, beta: &RootVector) -> Result<RootVector> {
    a.check_index(i)?;
    check_dim(a, beta)?;
    let p = pairing(a, beta, i);
    let mut out = beta.clone();
    out.0[i] = i64::try_from(beta.0[i] as i128 - p).map_err(|_| Error::Overflow)?;
    Ok(out)
}

/// Applies `w` to `β`, rightmost letter first.
pub fn apply_word(
    a: &GeneralizedCartanMatrix,
    w: &WeylWord,
    beta: &RootVector,
) -> Result<RootVector> {
    check_dim(a, beta)?;
    w.0.iter()
        .rev()
        .try_fold(beta.clone(), |acc, &i| reflect(a, i, &acc))
}

/// The W-invariant form on the root lattice.
///
/// With reflections acting through the columns of A, invariance forces
/// `(α_i|α_j) = ε_i a_ji`, so the form is `B = diag(ε)·Aᵀ` where ε
/// symmetrizes `Aᵀ`. Equivalently `B = A·diag(q)⁻¹` up to scale, for the
/// symmetrizer q of A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    rank: usize,
    entries: Vec<Vec<Rational>>,
}

impl BilinearForm {
    /// The form built from the canonical integer symmetrizer of `Aᵀ`.
    pub fn new(a: &GeneralizedCartanMatrix) -> Result<Self> {
        let t = a.transpose();
        Ok(Self::from_symmetrizer(&t, &t.symmetrizer()?))
    }

    /// `diag(q)·m` for a symmetrizer q of m. Pass `Aᵀ` and its symmetrizer
    /// to get the invariant form of A.
    pub fn from_symmetrizer(m: &GeneralizedCartanMatrix, q: &Symmetrizer) -> Self {
        let entries = q
            .symmetrized(m)
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|x| Rational::from_integer(x as i128))
                    .collect()
            })
            .collect();
        Self {
            rank: m.rank(),
            entries,
        }
    }

    /// `(α_i|α_j) = ε_i a_ji` for arbitrary positive rationals ε; fails
    /// unless the result is symmetric.
    pub fn with_scaling(a: &GeneralizedCartanMatrix, eps: &[Rational]) -> Result<Self> {
        let n = a.rank();
        if eps.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: eps.len(),
            });
        }
        let entries: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| eps[i] * a.entry(j, i) as i128).collect())
            .collect();
        let symmetric = (0..n).all(|i| (0..i).all(|j| entries[i][j] == entries[j][i]));
        if !symmetric || eps.iter().any(|x| *x <= Rational::from_integer(0)) {
            return Err(Error::NotSymmetrizable);
        }
        Ok(Self { rank: n, entries })
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// `βᵀ B γ`.
    pub fn bilinear(&self, beta: &RootVector, gamma: &RootVector) -> Result<Rational> {
        for v in [beta, gamma] {
            if v.dim() != self.rank {
                return Err(Error::DimensionMismatch {
                    expected: self.rank,
                    got: v.dim(),
                });
            }
        }
        let mut total = Rational::from_integer(0);
        for (i, &b) in beta.0.iter().enumerate() {
            if b == 0 {
                continue;
            }
            for (j, &c) in gamma.0.iter().enumerate() {
                if c != 0 {
                    total += self.entries[i][j] * (b as i128 * c as i128);
                }
            }
        }
        Ok(total)
    }

    /// `(β|β)`.
    pub fn norm(&self, beta: &RootVector) -> Result<Rational> {
        self.bilinear(beta, beta)
    }
}

/// Outcome of [`real_root_test`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealRootVerdict {
    /// `apply_word(witness, β)` is a simple root.
    Real { witness: WeylWord },
    /// No height-decreasing reflection exists and β is not simple.
    NotReal,
    /// The step budget ran out first.
    Indeterminate,
}

/// Decides whether β is a real root by height descent toward a simple root.
///
/// At each step the smallest index whose reflection lowers `Σ|b_i|` is used.
/// Negative vectors are handled through `-β`, with a final `w_k` sending
/// `-α_k` to `α_k`. At most `max_steps` reflections are applied.
pub fn real_root_test(
    a: &GeneralizedCartanMatrix,
    beta: &RootVector,
    max_steps: usize,
) -> Result<RealRootVerdict> {
    check_dim(a, beta)?;
    if beta.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !beta.has_uniform_sign() {
        return Err(Error::MixedSigns);
    }
    let negative = beta.is_negative();
    let mut cur = if negative { beta.neg() } else { beta.clone() };
    let mut word = WeylWord::identity();
    let mut steps = 0usize;
    loop {
        if let Some(k) = cur.simple_index() {
            if negative {
                word.push_left(k);
            }
            return Ok(RealRootVerdict::Real { witness: word });
        }
        // On a positive vector, w_i lowers the height exactly when the pairing
        // is positive and the i-th coordinate stays non-negative.
        let Some(i) = (0..a.rank()).find(|&i| pairing(a, &cur, i) > 0) else {
            return Ok(RealRootVerdict::NotReal);
        };
        if steps == max_steps {
            return Ok(RealRootVerdict::Indeterminate);
        }
        let next = reflect(a, i, &cur)?;
        if next.0[i] < 0 {
            // w_i maps positive roots other than α_i to positive roots.
            return Ok(RealRootVerdict::NotReal);
        }
        cur = next;
        word.push_left(i);
        steps += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use proptest::prelude::*;

    fn rv(v: &[i64]) -> RootVector {
        RootVector::new(v.to_vec())
    }

    fn int(x: i128) -> Rational {
        Rational::from_integer(x)
    }

    #[test]
    fn reflect_examples() {
        let a2 = fixture("A2").unwrap();
        assert_eq!(reflect(&a2, 0, &rv(&[1, 0])).unwrap(), rv(&[-1, 0]));
        assert_eq!(reflect(&a2, 0, &rv(&[0, 1])).unwrap(), rv(&[1, 1]));
        let hat = fixture("A1hat_aff").unwrap();
        assert_eq!(reflect(&hat, 1, &rv(&[1, 2, 2])).unwrap(), rv(&[1, 2, 2]));
        assert_eq!(
            reflect(&a2, 2, &rv(&[1, 0])),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        );
        assert!(matches!(
            reflect(&a2, 0, &rv(&[1, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn apply_word_examples() {
        let a2 = fixture("A2").unwrap();
        assert_eq!(
            apply_word(&a2, &WeylWord::new(vec![0, 1]), &rv(&[1, 0])).unwrap(),
            rv(&[0, 1])
        );
        assert_eq!(
            apply_word(&a2, &WeylWord::identity(), &rv(&[3, 8])).unwrap(),
            rv(&[3, 8])
        );
        let aff = fixture("A1_aff").unwrap();
        // w_2 w_1 (-α_1): w_1 gives α_1 = (1,0), then w_2 gives (1,2).
        assert_eq!(
            apply_word(&aff, &WeylWord::new(vec![1, 0]), &rv(&[-1, 0])).unwrap(),
            rv(&[1, 2])
        );
    }

    #[test]
    fn coordinates() {
        let a1 = RootVector::simple(2, 0);
        assert_eq!(a1.coordinate(0), Ok(1));
        assert_eq!(a1.coordinate(1), Ok(0));
        assert_eq!(rv(&[3, 8]).coordinate(0), Ok(3));
        assert!(rv(&[3, 8]).coordinate(2).is_err());
    }

    #[test]
    fn bilinear_and_norm_examples() {
        let a2 = BilinearForm::new(&fixture("A2").unwrap()).unwrap();
        assert_eq!(a2.bilinear(&rv(&[1, 0]), &rv(&[1, 0])), Ok(int(2)));
        let aff = BilinearForm::new(&fixture("A1_aff").unwrap()).unwrap();
        assert_eq!(aff.norm(&rv(&[1, 1])), Ok(int(0)));
        let hat = BilinearForm::new(&fixture("A1hat_aff").unwrap()).unwrap();
        assert_eq!(hat.norm(&rv(&[2, 2, 1])), Ok(int(-2)));
        assert_eq!(hat.norm(&rv(&[1, 2, 2])), Ok(int(2)));
        assert_eq!(hat.norm(&rv(&[1, 1, 0])), Ok(int(0)));
        let h3 = BilinearForm::new(&fixture("H3").unwrap()).unwrap();
        assert_eq!(h3.norm(&rv(&[3, 1])), Ok(int(2)));
        assert!(matches!(
            hat.norm(&rv(&[1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rational_scaling_matches_canonical_up_to_factor() {
        let ap = fixture("Aprime").unwrap();
        let half = Rational::new(1, 2);
        let form = BilinearForm::with_scaling(&ap, &[half, int(4) * half, int(4) * half]).unwrap();
        let canon = BilinearForm::new(&ap).unwrap();
        let b = rv(&[1, 2, 1]);
        assert_eq!(form.norm(&b).unwrap() * int(2), canon.norm(&b).unwrap());
        assert_eq!(
            BilinearForm::with_scaling(&ap, &[int(1), int(1), int(1)]),
            Err(Error::NotSymmetrizable)
        );
    }

    #[test]
    fn positivity() {
        assert_eq!(rv(&[1, 1]).is_positive(), Ok(true));
        assert_eq!(rv(&[-1, 0]).is_positive(), Ok(false));
        assert_eq!(rv(&[1, -1]).is_positive(), Ok(false));
        assert_eq!(rv(&[0, 0]).is_positive(), Err(Error::ZeroVector));
    }

    #[test]
    fn real_root_test_examples() {
        let a2 = fixture("A2").unwrap();
        // Both indices lower the height of (1,1); the smallest one is used.
        let RealRootVerdict::Real { witness } = real_root_test(&a2, &rv(&[1, 1]), 100).unwrap()
        else {
            panic!("(1,1) is real");
        };
        assert_eq!(witness, WeylWord::new(vec![0]));
        assert_eq!(
            apply_word(&a2, &witness, &rv(&[1, 1])).unwrap(),
            rv(&[0, 1])
        );
        // w_2 (α_1 + α_2) = α_1 is an equally valid witness.
        assert_eq!(
            apply_word(&a2, &WeylWord::new(vec![1]), &rv(&[1, 1])).unwrap(),
            rv(&[1, 0])
        );

        let hat = fixture("A1hat_aff").unwrap();
        assert_eq!(
            real_root_test(&hat, &rv(&[1, 1, 0]), 100),
            Ok(RealRootVerdict::NotReal)
        );
        assert_eq!(
            real_root_test(&hat, &rv(&[0, 1, 0]), 100),
            Ok(RealRootVerdict::Real {
                witness: WeylWord::identity()
            })
        );
        assert_eq!(
            real_root_test(&hat, &rv(&[1, -1, 0]), 100),
            Err(Error::MixedSigns)
        );
    }

    #[test]
    fn real_root_test_on_negative_and_budget() {
        let h3 = fixture("H3").unwrap();
        let beta = rv(&[-8, -21]);
        let RealRootVerdict::Real { witness } = real_root_test(&h3, &beta, 100).unwrap() else {
            panic!("-(8,21) is real");
        };
        let image = apply_word(&h3, &witness, &beta).unwrap();
        assert!(image.simple_index().is_some());
        assert_eq!(
            real_root_test(&h3, &beta, 1),
            Ok(RealRootVerdict::Indeterminate)
        );
    }

    #[test]
    fn word_serialization_is_one_based() {
        let w = WeylWord::new(vec![0, 2]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,3]");
        let back: WeylWord = serde_json::from_str("[1,3]").unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<WeylWord>("[0]").is_err());
        assert_eq!(w.to_string(), "w_1 w_3");
    }

    fn symmetrizable_fixture() -> impl Strategy<Value = GeneralizedCartanMatrix> {
        prop_oneof![
            Just("A2"),
            Just("B2"),
            Just("H3"),
            Just("A1hat_aff"),
            Just("Aprime"),
            Just("H2_3"),
            Just("B3"),
        ]
        .prop_map(|n| fixture(n).unwrap())
    }

    proptest! {
        #[test]
        fn reflection_is_an_involution_preserving_other_coords(
            a in symmetrizable_fixture(),
            coords in proptest::collection::vec(-50i64..50, 3),
            i in 0usize..3,
        ) {
            let n = a.rank();
            let beta = RootVector::new(coords[..n].to_vec());
            let i = i % n;
            let image = reflect(&a, i, &beta).unwrap();
            prop_assert_eq!(reflect(&a, i, &image).unwrap(), beta.clone());
            for j in (0..n).filter(|&j| j != i) {
                prop_assert_eq!(image.coordinate(j), beta.coordinate(j));
            }
            let form = BilinearForm::new(&a).unwrap();
            prop_assert_eq!(form.norm(&image).unwrap(), form.norm(&beta).unwrap());
            prop_assert_eq!(image == beta, pairing(&a, &beta, i) == 0);
        }
    }
}
