//! Python bindings. Every index crossing this boundary is 1-based.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use kmorbits::dynkin::{DynkinDiagram, Skeleton};
use kmorbits::fixedpoints::{fixed_roots, transitivity_report};
use kmorbits::imaginary::{
    is_real_by_negation, orbit_census, reduce_to_dominant, HyperboloidQuery, NegationVerdict,
};
use kmorbits::orbitgraph::build_orbit_graph;
use kmorbits::orbits::{connecting_word, generate_real_roots, orbit_partition, same_orbit};
use kmorbits::roots::{reflect, BilinearForm};
use kmorbits::{fixtures, CoxeterEntry, Error, GeneralizedCartanMatrix, Rational, RootVector};

fn err(e: Error) -> PyErr {
    match e {
        Error::IndexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn index(i: usize) -> PyResult<usize> {
    i.checked_sub(1)
        .ok_or_else(|| PyIndexError::new_err("indices are 1-based"))
}

fn fraction(py: Python<'_>, q: Rational) -> PyResult<Py<PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    Ok(cls.call1((*q.numer(), *q.denom()))?.unbind())
}

fn parse_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?.to_string();
    text.trim()
        .parse()
        .map_err(|_| PyValueError::new_err(format!("not a rational number: {text}")))
}

/// A validated generalized Cartan matrix.
#[pyclass(name = "CartanMatrix", module = "kmorbits", frozen)]
struct CartanMatrix {
    inner: GeneralizedCartanMatrix,
}

impl CartanMatrix {
    fn root(&self, coords: Vec<i64>) -> PyResult<RootVector> {
        if coords.len() != self.inner.rank() {
            return Err(err(Error::DimensionMismatch {
                expected: self.inner.rank(),
                got: coords.len(),
            }));
        }
        Ok(RootVector::new(coords))
    }
}

#[pymethods]
impl CartanMatrix {
    #[new]
    fn new(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(Self {
            inner: GeneralizedCartanMatrix::new(rows).map_err(err)?,
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.rows().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("CartanMatrix({})", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    /// `"finite"`, `"affine"` or `"indefinite (hyperbolic, noncompact)"` and
    /// so on. Raises ValueError for a decomposable matrix.
    fn classify(&self) -> PyResult<String> {
        Ok(self.inner.classify().map_err(err)?.to_string())
    }

    fn is_hyperbolic(&self) -> PyResult<bool> {
        Ok(self.inner.classify().map_err(err)?.is_hyperbolic())
    }

    /// Integers q with diag(q)·A symmetric, or None.
    fn symmetrizer(&self) -> Option<Vec<i64>> {
        self.inner.symmetrizer().ok().map(|q| q.diag().to_vec())
    }

    fn determinant(&self) -> String {
        self.inner.determinant().to_string()
    }

    /// Coxeter exponents; infinite entries are `float("inf")`.
    fn coxeter_matrix(&self, py: Python<'_>) -> PyResult<Vec<Vec<Py<PyAny>>>> {
        self.inner
            .coxeter_matrix()
            .entries()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        CoxeterEntry::Order(m) => Ok(m.into_pyobject(py)?.into_any().unbind()),
                        CoxeterEntry::Infinite => {
                            Ok(f64::INFINITY.into_pyobject(py)?.into_any().unbind())
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn dynkin_dot(&self) -> String {
        DynkinDiagram::new(&self.inner).to_dot()
    }

    fn skeleton_dot(&self) -> String {
        Skeleton::new(&self.inner).to_dot()
    }

    fn orbit_partition(&self) -> Vec<Vec<usize>> {
        orbit_partition(&self.inner)
            .classes
            .iter()
            .map(|c| c.iter().map(|i| i + 1).collect())
            .collect()
    }

    fn same_orbit(&self, i: usize, j: usize) -> PyResult<bool> {
        same_orbit(&self.inner, index(i)?, index(j)?).map_err(err)
    }

    /// Letters (1-based, applied right to left) of a word sending α_j to
    /// α_k, or None when they lie in different orbits.
    fn connecting_word(&self, j: usize, k: usize) -> PyResult<Option<Vec<usize>>> {
        Ok(connecting_word(&self.inner, index(j)?, index(k)?)
            .map_err(err)?
            .map(|w| w.one_based()))
    }

    fn reflect(&self, i: usize, beta: Vec<i64>) -> PyResult<Vec<i64>> {
        let beta = self.root(beta)?;
        Ok(reflect(&self.inner, index(i)?, &beta)
            .map_err(err)?
            .into_coords())
    }

    /// `(β|β)` under the invariant form, as a `fractions.Fraction`.
    fn norm(&self, py: Python<'_>, beta: Vec<i64>) -> PyResult<Py<PyAny>> {
        let beta = self.root(beta)?;
        let form = BilinearForm::new(&self.inner).map_err(err)?;
        fraction(py, form.norm(&beta).map_err(err)?)
    }

    /// Real roots generated inside the sup-norm box, sorted.
    fn real_roots(&self, bound: u64) -> PyResult<Vec<Vec<i64>>> {
        let set = generate_real_roots(&self.inner, bound).map_err(err)?;
        Ok(set.roots.into_iter().map(|r| r.into_coords()).collect())
    }

    /// The orbit graph as DOT or JSON text.
    #[pyo3(signature = (bound, format = "json"))]
    fn orbit_graph(&self, bound: u64, format: &str) -> PyResult<String> {
        let g = build_orbit_graph(&self.inner, bound).map_err(err)?;
        match format {
            "json" => Ok(g.export_json()),
            "dot" => Ok(g.export_dot()),
            other => Err(PyValueError::new_err(format!("unknown format {other:?}"))),
        }
    }

    /// Pairs `(root, i)` with `w_i root = root`.
    fn fixed_roots(&self, bound: u64) -> PyResult<Vec<(Vec<i64>, usize)>> {
        Ok(fixed_roots(&self.inner, bound)
            .map_err(err)?
            .pairs
            .into_iter()
            .map(|(r, i)| (r.into_coords(), i + 1))
            .collect())
    }

    fn transitivity<'py>(&self, py: Python<'py>, bound: u64) -> PyResult<Bound<'py, PyDict>> {
        let t = transitivity_report(&self.inner, bound).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("transitive", t.transitive)?;
        d.set_item("simply_transitive_possible", t.simply_transitive_possible)?;
        d.set_item("fixed_roots_found", t.fixed_roots_found)?;
        Ok(d)
    }

    /// Antidominant representative of β and the 1-based word reaching it.
    fn reduce_to_dominant(&self, beta: Vec<i64>) -> PyResult<(Vec<i64>, Vec<usize>)> {
        let beta = self.root(beta)?;
        let (rep, word) = reduce_to_dominant(&self.inner, &beta).map_err(err)?;
        Ok((rep.into_coords(), word.one_based()))
    }

    /// Orbit census of imaginary roots with the given norm (int, str or
    /// Fraction) inside the box.
    fn orbit_census<'py>(
        &self,
        py: Python<'py>,
        norm: &Bound<'py, PyAny>,
        bound: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let q = HyperboloidQuery::new(parse_rational(norm)?, bound).map_err(err)?;
        let c = orbit_census(&self.inner, &q).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("norm", fraction(py, c.norm_value)?)?;
        d.set_item("bound", c.bound)?;
        d.set_item(
            "representatives",
            c.representatives
                .into_iter()
                .map(|r| r.into_coords())
                .collect::<Vec<_>>(),
        )?;
        d.set_item("orbit_count", c.orbit_count)?;
        d.set_item("lattice_point_bound", c.lattice_point_bound)?;
        d.set_item("truncated", c.truncated)?;
        Ok(d)
    }

    /// True or False when decidable within the box, None otherwise.
    fn is_real_by_negation(&self, beta: Vec<i64>, bound: u64) -> PyResult<Option<bool>> {
        let beta = self.root(beta)?;
        Ok(
            match is_real_by_negation(&self.inner, &beta, bound).map_err(err)? {
                NegationVerdict::Real => Some(true),
                NegationVerdict::NotReal => Some(false),
                NegationVerdict::Indeterminate => None,
            },
        )
    }
}

/// A built-in matrix by name.
#[pyfunction]
fn fixture(name: &str) -> PyResult<CartanMatrix> {
    fixtures::fixture(name)
        .map(|inner| CartanMatrix { inner })
        .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))
}

#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    fixtures::NAMES.to_vec()
}

#[pymodule(name = "kmorbits")]
fn kmorbits_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CartanMatrix>()?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add("SCHEMA", kmorbits::SCHEMA)?;
    Ok(())
}
