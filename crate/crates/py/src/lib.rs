//! Python bindings. Subsets cross the boundary as lists of element ids and
//! colorings as lists of integer labels, one per element.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use rainbow_matroid::antiramsey::{self, FamilyParams};
use rainbow_matroid::document;
use rainbow_matroid::families::{self, ExplicitBases, Field, Multigraph, SetFamily, SignedMultigraph, VectorList};
use rainbow_matroid::packing::{self, PackingCertificate, Witness};
use rainbow_matroid::{enumerate_flats, Coloring, MatroidError, Subset};

create_exception!(rainbow_matroid_py, BudgetExceededError, PyRuntimeError);

fn err(e: MatroidError) -> PyErr {
    match e {
        MatroidError::FlatBudgetExceeded { .. } | MatroidError::SearchBudgetExceeded { .. } => {
            BudgetExceededError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn ids(s: Subset) -> Vec<usize> {
    s.to_vec()
}

fn field(p: Option<u64>) -> Field {
    p.map_or(Field::Rational, Field::Prime)
}

#[pyclass(frozen, module = "rainbow_matroid_py")]
struct Matroid {
    inner: rainbow_matroid::Matroid,
}

impl Matroid {
    fn wrap(r: rainbow_matroid::Result<rainbow_matroid::Matroid>) -> PyResult<Self> {
        r.map(|inner| Matroid { inner }).map_err(err)
    }

    fn subset(&self, elements: &[usize]) -> PyResult<Subset> {
        self.inner.subset(elements).map_err(err)
    }

    fn coloring(&self, labels: &[i64]) -> PyResult<Coloring> {
        let c = Coloring::from_labels(labels).map_err(err)?;
        if c.ground_size() != self.inner.ground_size() {
            return Err(PyValueError::new_err(format!(
                "coloring has {} labels for {} elements",
                c.ground_size(),
                self.inner.ground_size()
            )));
        }
        Ok(c)
    }
}

#[pymethods]
impl Matroid {
    #[staticmethod]
    fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let g = Multigraph::new(vertices, edges).map_err(err)?;
        Self::wrap(families::graphic_matroid(&g))
    }

    #[staticmethod]
    fn complete_graph(n: usize) -> PyResult<Self> {
        Self::wrap(families::graphic_matroid(&families::complete_graph(n)))
    }

    #[staticmethod]
    fn bicircular(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let g = Multigraph::new(vertices, edges).map_err(err)?;
        Self::wrap(families::bicircular_matroid(&g))
    }

    #[staticmethod]
    fn cographic(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let g = Multigraph::new(vertices, edges).map_err(err)?;
        Self::wrap(families::cographic_matroid(&g))
    }

    /// Edges are `(u, v, sign)` with sign `1` or `-1`.
    #[staticmethod]
    fn signed(vertices: usize, edges: Vec<(usize, usize, i8)>) -> PyResult<Self> {
        let g = SignedMultigraph::new(vertices, edges).map_err(err)?;
        Self::wrap(families::signed_matroid(&g))
    }

    #[staticmethod]
    fn signed_complete(n: usize) -> PyResult<Self> {
        Self::wrap(families::signed_matroid(&families::signed_complete_graph(n)))
    }

    #[staticmethod]
    fn transversal(universe: usize, sets: Vec<Vec<usize>>) -> PyResult<Self> {
        let sets = sets.into_iter().map(Subset::from_indices).collect();
        let fam = SetFamily::new(universe, sets).map_err(err)?;
        Self::wrap(families::transversal_matroid(&fam))
    }

    /// Column vectors over GF(`prime`), or over the rationals when `prime` is None.
    #[staticmethod]
    #[pyo3(signature = (vectors, prime=None))]
    fn linear(vectors: Vec<Vec<i64>>, prime: Option<u64>) -> PyResult<Self> {
        let dim = vectors.first().map_or(0, Vec::len);
        let v = VectorList::from_integers(field(prime), dim, &vectors).map_err(err)?;
        Self::wrap(families::linear_matroid(&v))
    }

    #[staticmethod]
    #[pyo3(signature = (values, d, prime=None))]
    fn cube(values: Vec<i64>, d: usize, prime: Option<u64>) -> PyResult<Self> {
        Self::wrap(families::cube_matroid(&values, d, field(prime)))
    }

    #[staticmethod]
    fn uniform(k: usize, n: usize) -> PyResult<Self> {
        Self::wrap(families::uniform_matroid(k, n))
    }

    #[staticmethod]
    fn explicit(ground_size: usize, bases: Vec<Vec<usize>>) -> PyResult<Self> {
        let bases = bases.into_iter().map(Subset::from_indices).collect();
        let b = ExplicitBases::new(ground_size, bases).map_err(err)?;
        Self::wrap(families::explicit_matroid(&b))
    }

    /// Parses a matroid spec document.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        document::parse_spec(text)
            .map(|inner| Matroid { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    #[getter]
    fn full_rank(&self) -> usize {
        self.inner.full_rank()
    }

    fn rank(&self, elements: Vec<usize>) -> PyResult<usize> {
        self.inner.rank(self.subset(&elements)?).map_err(err)
    }

    fn is_independent(&self, elements: Vec<usize>) -> PyResult<bool> {
        self.inner.is_independent(self.subset(&elements)?).map_err(err)
    }

    fn closure(&self, elements: Vec<usize>) -> PyResult<Vec<usize>> {
        self.inner.closure(self.subset(&elements)?).map(ids).map_err(err)
    }

    fn is_flat(&self, elements: Vec<usize>) -> PyResult<bool> {
        self.inner.is_flat(self.subset(&elements)?).map_err(err)
    }

    #[pyo3(signature = (elements, forbidden=Vec::new()))]
    fn greedy_basis(&self, elements: Vec<usize>, forbidden: Vec<usize>) -> PyResult<Vec<usize>> {
        let s = self.subset(&elements)?;
        let f = self.subset(&forbidden)?;
        self.inner.greedy_basis(s, f).map(ids).map_err(err)
    }

    fn loops(&self) -> Vec<usize> {
        ids(self.inner.loops())
    }

    /// `(rank, elements)` pairs in canonical order.
    #[pyo3(signature = (max_rank=None))]
    fn flats(&self, max_rank: Option<usize>) -> PyResult<Vec<(usize, Vec<usize>)>> {
        let flats = enumerate_flats(&self.inner, max_rank).map_err(err)?;
        Ok(flats.into_iter().map(|f| (f.rank, ids(f.elements))).collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Matroid({:?}, ground_size={}, rank={})",
            self.inner.family(),
            self.inner.ground_size(),
            self.inner.full_rank()
        )
    }
}

#[pyclass(frozen, get_all, module = "rainbow_matroid_py")]
struct Certificate {
    feasible: bool,
    /// The witness bases, when one was found.
    bases: Option<Vec<Vec<usize>>>,
    budget_exceeded: bool,
    violated_flat: Option<Vec<usize>>,
    violated_rank: Option<usize>,
    lhs: Option<usize>,
    rhs: Option<usize>,
}

#[pymethods]
impl Certificate {
    fn __bool__(&self) -> bool {
        self.feasible
    }

    fn __repr__(&self) -> String {
        match (&self.bases, &self.violated_flat) {
            (Some(b), _) => format!("Certificate(feasible, bases={b:?})"),
            (None, Some(f)) => format!(
                "Certificate(infeasible, flat={f:?}, {} < {})",
                self.lhs.unwrap_or(0),
                self.rhs.unwrap_or(0)
            ),
            (None, None) => "Certificate(feasible, witness search over budget)".into(),
        }
    }
}

impl From<PackingCertificate> for Certificate {
    fn from(c: PackingCertificate) -> Self {
        let mut out = Certificate {
            feasible: c.is_feasible(),
            bases: None,
            budget_exceeded: false,
            violated_flat: None,
            violated_rank: None,
            lhs: None,
            rhs: None,
        };
        match c {
            PackingCertificate::Feasible(Witness::Found(p)) => {
                out.bases = Some(p.bases.into_iter().map(ids).collect());
            }
            PackingCertificate::Feasible(Witness::BudgetExceeded { .. }) => out.budget_exceeded = true,
            PackingCertificate::Infeasible(v) => {
                out.violated_flat = Some(ids(v.flat.elements));
                out.violated_rank = Some(v.flat.rank);
                out.lhs = Some(v.lhs);
                out.rhs = Some(v.rhs);
            }
        }
        out
    }
}

#[pyclass(frozen, get_all, module = "rainbow_matroid_py")]
struct ArResult {
    value: usize,
    branch: String,
    argmax_flat: Option<Vec<usize>>,
    degenerate_flat: Option<Vec<usize>>,
}

#[pymethods]
impl ArResult {
    fn __repr__(&self) -> String {
        format!("ArResult(value={}, branch={:?})", self.value, self.branch)
    }
}

#[pyfunction]
fn union_rank(m: &Matroid, t: usize) -> PyResult<usize> {
    packing::union_rank(&m.inner, t).map_err(err)
}

#[pyfunction]
fn has_disjoint_bases(m: &Matroid, t: usize) -> PyResult<Certificate> {
    packing::has_disjoint_bases(&m.inner, t).map(Into::into).map_err(err)
}

#[pyfunction]
fn has_color_disjoint_bases(m: &Matroid, coloring: Vec<i64>, t: usize) -> PyResult<Certificate> {
    let c = m.coloring(&coloring)?;
    packing::has_color_disjoint_bases(&m.inner, &c, t).map(Into::into).map_err(err)
}

#[pyfunction]
fn extension_feasible(m: &Matroid, coloring: Vec<i64>, seeds: Vec<Vec<usize>>) -> PyResult<Certificate> {
    let c = m.coloring(&coloring)?;
    let seeds = seeds.iter().map(|s| m.subset(s)).collect::<PyResult<Vec<_>>>()?;
    packing::extension_feasible(&m.inner, &c, &seeds).map(Into::into).map_err(err)
}

/// `t` pairwise disjoint rainbow bases, or None when none exist.
#[pyfunction]
fn find_rainbow_bases(py: Python<'_>, m: &Matroid, coloring: Vec<i64>, t: usize) -> PyResult<Option<Vec<Vec<usize>>>> {
    let c = m.coloring(&coloring)?;
    let found = py.detach(|| packing::find_rainbow_bases(&m.inner, &c, t)).map_err(err)?;
    Ok(found.map(|p| p.bases.into_iter().map(ids).collect()))
}

#[pyfunction]
fn ar_number(m: &Matroid, t: usize) -> PyResult<ArResult> {
    let r = antiramsey::ar_number(&m.inner, t).map_err(err)?;
    Ok(ArResult {
        value: r.value,
        branch: r.branch.to_string(),
        argmax_flat: r.argmax_flat.map(|f| ids(f.elements)),
        degenerate_flat: r.degenerate_flat.map(|f| ids(f.elements)),
    })
}

#[pyfunction]
fn ar_bruteforce(py: Python<'_>, m: &Matroid, t: usize) -> PyResult<usize> {
    py.detach(|| antiramsey::ar_bruteforce(&m.inner, t)).map_err(err)
}

/// `(labels, flat_used)` for a coloring with ar(M, t) colors and no `t`
/// disjoint rainbow bases.
#[pyfunction]
fn extremal_coloring(py: Python<'_>, m: &Matroid, t: usize) -> PyResult<(Vec<usize>, Option<Vec<usize>>)> {
    let ex = py.detach(|| antiramsey::extremal_coloring(&m.inner, t)).map_err(err)?;
    Ok((ex.coloring.labels(), ex.flat_used.map(|f| ids(f.elements))))
}

fn family_params(family: &str, n: usize, k: Option<usize>, d: Option<usize>) -> PyResult<FamilyParams> {
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| PyValueError::new_err(format!("{family} needs {name}")))
    };
    Ok(match family {
        "graphic-Kn" => FamilyParams::GraphicComplete { n },
        "bicircular-Kn" => FamilyParams::BicircularComplete { n },
        "signed-Kn" => FamilyParams::SignedComplete { n },
        "uniform" => FamilyParams::Uniform { n, k: need(k, "k")? },
        "cube" => FamilyParams::Cube { size: n, d: need(d, "d")? },
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    })
}

/// Closed-form value for a named family. For cubes `n` is |T|.
#[pyfunction]
#[pyo3(signature = (family, n, t, k=None, d=None))]
fn closed_form(family: &str, n: usize, t: usize, k: Option<usize>, d: Option<usize>) -> PyResult<usize> {
    antiramsey::closed_form(family_params(family, n, k, d)?, t).map_err(err)
}

/// `(closed_form, formula, brute_force)`; brute force is None above 10 elements.
#[pyfunction]
#[pyo3(signature = (family, n, t, k=None, d=None))]
fn cross_verify(
    py: Python<'_>,
    family: &str,
    n: usize,
    t: usize,
    k: Option<usize>,
    d: Option<usize>,
) -> PyResult<(usize, usize, Option<usize>)> {
    let params = family_params(family, n, k, d)?;
    let r = py.detach(|| antiramsey::cross_verify(params, t)).map_err(err)?;
    Ok((r.closed_form, r.formula.value, r.brute_force))
}

#[pymodule]
fn rainbow_matroid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Matroid>()?;
    m.add_class::<Certificate>()?;
    m.add_class::<ArResult>()?;
    m.add("BudgetExceededError", m.py().get_type::<BudgetExceededError>())?;
    m.add_function(wrap_pyfunction!(union_rank, m)?)?;
    m.add_function(wrap_pyfunction!(has_disjoint_bases, m)?)?;
    m.add_function(wrap_pyfunction!(has_color_disjoint_bases, m)?)?;
    m.add_function(wrap_pyfunction!(extension_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(find_rainbow_bases, m)?)?;
    m.add_function(wrap_pyfunction!(ar_number, m)?)?;
    m.add_function(wrap_pyfunction!(ar_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(cross_verify, m)?)?;
    Ok(())
}
