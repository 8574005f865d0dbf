//! Imaginary roots on hyperboloids of fixed norm.
//!
//! For a symmetrizable hyperbolic matrix, every nonzero lattice point with
//! `(β|β) <= 0` is an imaginary root (up to sign). Each W-orbit of positive
//! imaginary roots meets the antidominant chamber `β·A_(i) <= 0 for all i`
//! in exactly one point, so orbits are counted by reducing into that chamber.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcm::GeneralizedCartanMatrix;
use crate::orbits::bounded_closure;
use crate::roots::{pairing, reflect, BilinearForm, Rational, RootVector, WeylWord};
use crate::SCHEMA;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperboloidQuery {
    pub norm_value: Rational,
    pub coordinate_bound: u64,
}

impl HyperboloidQuery {
    pub fn new(norm_value: Rational, coordinate_bound: u64) -> Result<Self> {
        if norm_value > Rational::from_integer(0) {
            return Err(Error::PositiveNorm);
        }
        Ok(Self {
            norm_value,
            coordinate_bound,
        })
    }
}

pub fn is_antidominant(a: &GeneralizedCartanMatrix, beta: &RootVector) -> bool {
    (0..a.rank()).all(|i| pairing(a, beta, i) <= 0)
}

/// Reduces a positive vector of non-positive norm to the antidominant
/// chamber, reflecting by the smallest index with positive pairing.
/// Returns the representative and the word sending β to it.
pub fn reduce_to_dominant(
    a: &GeneralizedCartanMatrix,
    beta: &RootVector,
) -> Result<(RootVector, WeylWord)> {
    let form = BilinearForm::new(a)?;
    if beta.dim() != a.rank() {
        return Err(Error::DimensionMismatch {
            expected: a.rank(),
            got: beta.dim(),
        });
    }
    if !beta.is_positive()? {
        return Err(Error::NonPositive);
    }
    if form.norm(beta)? > Rational::from_integer(0) {
        return Err(Error::NotImaginary);
    }
    Ok(descend(a, beta.clone()))
}

fn descend(a: &GeneralizedCartanMatrix, mut cur: RootVector) -> (RootVector, WeylWord) {
    let mut word = WeylWord::identity();
    while let Some(i) = (0..a.rank()).find(|&i| pairing(a, &cur, i) > 0) {
        // The i-th coordinate strictly drops, so the loop terminates and the
        // vector stays inside the box it started in.
        cur = reflect(a, i, &cur).expect("descent only lowers coordinates");
        debug_assert!(cur.is_positive().unwrap_or(false));
        word.push_left(i);
    }
    (cur, word)
}

fn check_hyperbolic(a: &GeneralizedCartanMatrix) -> Result<BilinearForm> {
    if !a.classify()?.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    BilinearForm::new(a)
}

/// All nonzero `β` with `0 <= b_i <= bound` and `(β|β) = norm_value`, in
/// lexicographic order.
pub fn enumerate_hyperboloid(
    a: &GeneralizedCartanMatrix,
    q: &HyperboloidQuery,
) -> Result<Vec<RootVector>> {
    let form = check_hyperbolic(a)?;
    Ok(enumerate_with(&form, a.rank(), q))
}

fn enumerate_with(form: &BilinearForm, n: usize, q: &HyperboloidQuery) -> Vec<RootVector> {
    let bound = q.coordinate_bound as i64;
    let mut out = Vec::new();
    if bound == 0 {
        return out;
    }
    let mut coords = vec![0i64; n];
    loop {
        // Odometer with the last coordinate fastest gives lexicographic order.
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if coords[k] < bound {
                coords[k] += 1;
                break;
            }
            coords[k] = 0;
        }
        let v = RootVector::new(coords.clone());
        if form.norm(&v).expect("dimension matches") == q.norm_value {
            out.push(v);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCensus {
    pub norm_value: Rational,
    pub bound: u64,
    /// Antidominant representatives, sorted.
    pub representatives: Vec<RootVector>,
    pub orbit_count: usize,
    /// Antidominant lattice points on the hyperboloid within the box.
    pub lattice_point_bound: usize,
    /// Some enumerated point touches the box boundary, so orbits may extend
    /// past it and the census is a lower bound.
    pub truncated: bool,
}

pub fn orbit_census(a: &GeneralizedCartanMatrix, q: &HyperboloidQuery) -> Result<OrbitCensus> {
    let form = check_hyperbolic(a)?;
    let points = enumerate_with(&form, a.rank(), q);
    let bound = q.coordinate_bound as i64;
    let mut reps = BTreeSet::new();
    let mut truncated = false;
    for p in &points {
        truncated |= p.coords().contains(&bound);
        reps.insert(descend(a, p.clone()).0);
    }
    let lattice_point_bound = points.iter().filter(|p| is_antidominant(a, p)).count();
    let representatives: Vec<RootVector> = reps.into_iter().collect();
    assert!(representatives.len() <= lattice_point_bound);
    Ok(OrbitCensus {
        norm_value: q.norm_value,
        bound: q.coordinate_bound,
        orbit_count: representatives.len(),
        representatives,
        lattice_point_bound,
        truncated,
    })
}

#[derive(Serialize)]
#[serde(untagged)]
enum NormJson {
    Int(i128),
    Frac(String),
}

#[derive(Serialize)]
struct CensusJson<'a> {
    schema: &'a str,
    norm: NormJson,
    bound: u64,
    representatives: &'a [RootVector],
    orbit_count: usize,
    lattice_point_bound: usize,
    truncated: bool,
}

impl OrbitCensus {
    /// Norm is an integer when whole, otherwise the string `"p/q"`.
    pub fn to_json(&self) -> String {
        let norm = if self.norm_value.is_integer() {
            NormJson::Int(self.norm_value.to_integer())
        } else {
            NormJson::Frac(self.norm_value.to_string())
        };
        serde_json::to_string(&CensusJson {
            schema: SCHEMA,
            norm,
            bound: self.bound,
            representatives: &self.representatives,
            orbit_count: self.orbit_count,
            lattice_point_bound: self.lattice_point_bound,
            truncated: self.truncated,
        })
        .expect("census serializes")
    }
}

/// Size of `W β` restricted to the box of radius `bound`.
pub fn in_box_orbit_size(
    a: &GeneralizedCartanMatrix,
    beta: &RootVector,
    bound: u64,
) -> Result<usize> {
    Ok(bounded_closure(a, [beta.clone()], bound)?.set.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegationVerdict {
    /// `-β` lies in the orbit of β.
    Real,
    NotReal,
    /// β itself lies outside the box.
    Indeterminate,
}

/// A root is real exactly when some `w` sends it to its negative.
///
/// The search is confined to the box, but the answer is still exact for
/// roots inside it: a real root descends to `±α_k` through vectors with
/// coordinates no larger in absolute value, and the mirrored path climbs back
/// to `-β`.
pub fn is_real_by_negation(
    a: &GeneralizedCartanMatrix,
    beta: &RootVector,
    bound: u64,
) -> Result<NegationVerdict> {
    if beta.dim() != a.rank() {
        return Err(Error::DimensionMismatch {
            expected: a.rank(),
            got: beta.dim(),
        });
    }
    if beta.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !beta.has_uniform_sign() {
        return Err(Error::MixedSigns);
    }
    if beta.sup_norm() > bound {
        return Ok(NegationVerdict::Indeterminate);
    }
    let orbit = bounded_closure(a, [beta.clone()], bound)?.set;
    Ok(if orbit.contains(&beta.neg()) {
        NegationVerdict::Real
    } else {
        NegationVerdict::NotReal
    })
}
