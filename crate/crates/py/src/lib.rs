//! Python bindings. Value types are exposed as immutable classes; composite
//! results (check certificates, surgery reports, catalogs) come back as the
//! same dictionaries the command-line tool prints.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use tanglekit as tk;

create_exception!(tanglekit, TanglekitError, PyValueError);

fn err(e: tk::Error) -> PyErr {
    TanglekitError::new_err(e.to_string())
}

trait OrRaise<T> {
    fn or_raise(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for tk::Result<T> {
    fn or_raise(self) -> PyResult<T> {
        self.map_err(err)
    }
}

/// Round-trips through JSON so Python sees plain dicts, lists and ints.
fn to_py<'py>(py: Python<'py>, v: impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(&v).expect("results serialize");
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Slope", module = "tanglekit", frozen, from_py_object, eq, hash, ord)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PySlope(tk::Slope);

#[pymethods]
impl PySlope {
    #[new]
    #[pyo3(signature = (num, den = BigInt::from(1)))]
    fn new(num: BigInt, den: BigInt) -> PyResult<Self> {
        if den < BigInt::from(0) {
            return Err(TanglekitError::new_err("denominator must be nonnegative"));
        }
        tk::Slope::new(num, den).map(PySlope).or_raise()
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        tk::parse_slope(text).map(PySlope).or_raise()
    }

    #[staticmethod]
    fn infinity() -> Self {
        PySlope(tk::Slope::infinity())
    }

    #[getter]
    fn num(&self) -> BigInt {
        self.0.num().clone()
    }

    #[getter]
    fn den(&self) -> BigInt {
        self.0.den().clone()
    }

    fn is_infinite(&self) -> bool {
        self.0.is_infinite()
    }

    fn distance(&self, other: SlopeLike) -> PyResult<BigInt> {
        Ok(self.0.distance(&other.slope()?))
    }

    fn __neg__(&self) -> Self {
        PySlope(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Slope('{}')", self.0)
    }
}

#[pyclass(
    name = "ContinuedFraction",
    module = "tanglekit",
    frozen,
    from_py_object,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyCf(tk::ContinuedFraction);

#[pymethods]
impl PyCf {
    #[new]
    fn new(coeffs: Vec<BigInt>) -> Self {
        PyCf(tk::ContinuedFraction::new(coeffs))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        tk::parse_cf(text).map(PyCf).or_raise()
    }

    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    fn value(&self) -> PySlope {
        PySlope(self.0.eval())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ContinuedFraction('{}')", self.0)
    }
}

#[pyclass(
    name = "TwoBridgeLink",
    module = "tanglekit",
    frozen,
    from_py_object,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyLink(tk::TwoBridgeLink);

#[pymethods]
impl PyLink {
    #[new]
    fn new(p: BigInt, q: BigInt) -> PyResult<Self> {
        tk::TwoBridgeLink::new(p, q).map(PyLink).or_raise()
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        tk::parse_link(text).map(PyLink).or_raise()
    }

    #[staticmethod]
    fn closure(slope: SlopeLike) -> PyResult<Self> {
        Ok(PyLink(tk::tb_closure(&slope.slope()?)))
    }

    #[getter]
    fn p(&self) -> BigInt {
        self.0.p().clone()
    }

    #[getter]
    fn q(&self) -> BigInt {
        self.0.q().clone()
    }

    fn mirror(&self) -> Self {
        PyLink(self.0.mirror())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("TwoBridgeLink('{}')", self.0)
    }
}

#[pyclass(name = "LensSpace", module = "tanglekit", frozen, from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyLens(tk::LensSpace);

#[pymethods]
impl PyLens {
    #[new]
    fn new(p: BigInt, q: BigInt) -> PyResult<Self> {
        tk::LensSpace::new(p, q).map(PyLens).or_raise()
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        tk::parse_lens(text).map(PyLens).or_raise()
    }

    #[getter]
    fn p(&self) -> BigInt {
        self.0.p().clone()
    }

    #[getter]
    fn q(&self) -> BigInt {
        self.0.q().clone()
    }

    fn mirror(&self) -> Self {
        PyLens(self.0.mirror())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LensSpace('{}')", self.0)
    }
}

#[pyclass(name = "RsrWitness", module = "tanglekit", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyWitness(tk::RsrWitness);

#[pymethods]
impl PyWitness {
    #[getter]
    fn family(&self) -> &'static str {
        self.0.family.name()
    }

    #[getter]
    fn d(&self) -> u64 {
        self.0.d
    }

    #[getter]
    fn eps(&self) -> i8 {
        self.0.eps
    }

    #[getter]
    fn a(&self) -> BigInt {
        self.0.a.clone()
    }

    #[getter]
    fn b(&self) -> BigInt {
        self.0.b.clone()
    }

    #[getter]
    fn branch(&self) -> Option<i8> {
        self.0.branch
    }

    /// `((a, b), (c, d))`, or `None` for the identity.
    #[getter]
    fn transport(&self) -> Option<((BigInt, BigInt), (BigInt, BigInt))> {
        self.0.transport.as_ref().map(|t| {
            let [[a, b], [c, d]] = t.entries();
            ((a.clone(), b.clone()), (c.clone(), d.clone()))
        })
    }

    fn normalized_value(&self) -> PyResult<PySlope> {
        self.0.normalized_value().map(PySlope).or_raise()
    }

    fn pair(&self) -> PyResult<(PySlope, PySlope)> {
        let (x, y) = self.0.pair().or_raise()?;
        Ok((PySlope(x), PySlope(y)))
    }

    fn representative_cf_pair(&self) -> PyResult<(PyCf, PyCf)> {
        let (x, y) = tk::representative_cf_pair(&self.0).or_raise()?;
        Ok((PyCf(x), PyCf(y)))
    }

    fn site_plat(&self) -> PyResult<(PyPlat, PyPlat)> {
        let (x, y) = tk::site_plat(&self.0).or_raise()?;
        Ok((PyPlat(x), PyPlat(y)))
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0)
    }

    fn __repr__(&self) -> String {
        serde_json::to_string(&self.0).expect("witness serializes")
    }
}

#[pyclass(name = "PlatDesc", module = "tanglekit", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPlat(tk::PlatDesc);

#[pymethods]
impl PyPlat {
    #[new]
    #[pyo3(signature = (cf, site = None, framing_note = None))]
    fn new(cf: CfLike, site: Option<usize>, framing_note: Option<String>) -> PyResult<Self> {
        let mut p = tk::cf_to_plat(&cf.cf()?);
        p.site = site;
        p.framing_note = framing_note;
        Ok(PyPlat(p))
    }

    /// `(position, twists)` per region, top to bottom.
    #[getter]
    fn regions(&self) -> Vec<(u8, BigInt)> {
        self.0
            .regions
            .iter()
            .map(|r| (r.position, r.twists.clone()))
            .collect()
    }

    #[getter]
    fn site(&self) -> Option<usize> {
        self.0.site
    }

    #[getter]
    fn framing_note(&self) -> Option<String> {
        self.0.framing_note.clone()
    }

    fn coefficients(&self) -> PyCf {
        PyCf(self.0.coefficients())
    }

    fn value(&self) -> PySlope {
        PySlope(self.0.value())
    }

    fn closure(&self) -> PyLink {
        PyLink(tk::plat_closure(&self.0))
    }

    #[pyo3(signature = (format = "ascii"))]
    fn render(&self, format: &str) -> PyResult<String> {
        let f: tk::RenderFormat = format.parse().or_raise()?;
        Ok(tk::plat_render(&self.0, f))
    }
}

/// A slope given as a `Slope`, an `int`, or text such as `"13/8"`.
#[derive(FromPyObject)]
pub enum SlopeLike {
    Slope(PySlope),
    Int(BigInt),
    Text(String),
}

impl SlopeLike {
    fn slope(self) -> PyResult<tk::Slope> {
        match self {
            SlopeLike::Slope(s) => Ok(s.0),
            SlopeLike::Int(n) => Ok(tk::Slope::integer(n)),
            SlopeLike::Text(t) => tk::parse_slope(&t).or_raise(),
        }
    }
}

/// A continued fraction given as a `ContinuedFraction`, a list of ints or
/// text such as `"[3,3,4]"`.
#[derive(FromPyObject)]
pub enum CfLike {
    Cf(PyCf),
    Coeffs(Vec<BigInt>),
    Text(String),
}

impl CfLike {
    fn cf(self) -> PyResult<tk::ContinuedFraction> {
        match self {
            CfLike::Cf(c) => Ok(c.0),
            CfLike::Coeffs(v) => Ok(tk::ContinuedFraction::new(v)),
            CfLike::Text(t) => tk::parse_cf(&t).or_raise(),
        }
    }
}

#[derive(FromPyObject)]
pub enum LinkLike {
    Link(PyLink),
    Text(String),
}

impl LinkLike {
    fn link(self) -> PyResult<tk::TwoBridgeLink> {
        match self {
            LinkLike::Link(l) => Ok(l.0),
            LinkLike::Text(t) => tk::parse_link(&t).or_raise(),
        }
    }
}

#[derive(FromPyObject)]
pub enum LensLike {
    Lens(PyLens),
    Text(String),
}

impl LensLike {
    fn lens(self) -> PyResult<tk::LensSpace> {
        match self {
            LensLike::Lens(l) => Ok(l.0),
            LensLike::Text(t) => tk::parse_lens(&t).or_raise(),
        }
    }
}

#[pyfunction]
fn cf_eval(cf: CfLike) -> PyResult<PySlope> {
    Ok(PySlope(cf.cf()?.eval()))
}

#[pyfunction]
fn cf_expand(slope: SlopeLike) -> PyResult<PyCf> {
    Ok(PyCf(tk::cf_expand(&slope.slope()?)))
}

/// `(dist, residues)` of the unordered pair.
#[pyfunction]
fn pair_canonical(x: SlopeLike, y: SlopeLike) -> PyResult<(BigInt, Vec<BigInt>)> {
    let c = tk::pair_canonical(&x.slope()?, &y.slope()?).or_raise()?;
    Ok((c.dist, c.residues))
}

#[pyfunction]
#[pyo3(signature = (x, y, d, verbose = false))]
fn classify_rsr(x: SlopeLike, y: SlopeLike, d: u64, verbose: bool) -> PyResult<Vec<PyWitness>> {
    let ws = tk::classify_rsr(&x.slope()?, &y.slope()?, d, verbose).or_raise()?;
    Ok(ws.into_iter().map(PyWitness).collect())
}

#[pyfunction]
fn family_general_members<'py>(
    py: Python<'py>,
    base: SlopeLike,
    d: u64,
    family: &str,
    bound: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let family: tk::Family = family.parse().map_err(TanglekitError::new_err)?;
    to_py(
        py,
        tk::family_general_members(&base.slope()?, d, family, bound).or_raise()?,
    )
}

#[pyfunction]
fn tb_rsr_decide<'py>(py: Python<'py>, x: LinkLike, y: LinkLike, d: u64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, tk::tb_rsr_decide(&x.link()?, &y.link()?, d).or_raise()?)
}

/// Site continued fractions `(before, after)`; raises if the links are not
/// related at distance `d`.
#[pyfunction]
fn tb_rsr_site_cf(x: LinkLike, y: LinkLike, d: u64) -> PyResult<(PyCf, PyCf)> {
    let (x, y) = (x.link()?, y.link()?);
    let found = tk::tb_rsr_decide(&x, &y, d)
        .or_raise()?
        .ok_or_else(|| TanglekitError::new_err(format!("{x} and {y} are not related at distance {d}")))?;
    let (a, b) = tk::tb_rsr_site_cf(&x, &y, &found).or_raise()?;
    Ok((PyCf(a), PyCf(b)))
}

#[pyfunction]
#[pyo3(signature = (x, y, oriented = false))]
fn tb_equiv(x: LinkLike, y: LinkLike, oriented: bool) -> PyResult<bool> {
    Ok(tk::tb_equiv(&x.link()?, &y.link()?, oriented))
}

#[pyfunction]
fn greene_check<'py>(py: Python<'py>, link: LinkLike) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, tk::greene_check(&link.link()?).or_raise()?)
}

#[pyfunction]
fn lisca_check<'py>(py: Python<'py>, link: LinkLike) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, tk::lisca_check(&link.link()?).or_raise()?)
}

#[pyfunction]
#[pyo3(signature = (x, y, oriented = true))]
fn lens_equiv(x: LensLike, y: LensLike, oriented: bool) -> PyResult<bool> {
    Ok(tk::lens_equiv(&x.lens()?, &y.lens()?, oriented))
}

#[pyfunction]
#[allow(non_snake_case)]
fn torus_knot_surgery<'py>(
    py: Python<'py>,
    r: BigInt,
    s: BigInt,
    P: BigInt,
    Q: BigInt,
    n: BigInt,
) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, tk::torus_knot_surgery(&r, &s, &P, &Q, &n).or_raise()?)
}

#[pyfunction]
fn torus_knot_surgery_solve<'py>(
    py: Python<'py>,
    from: LensLike,
    to: LensLike,
    d: u64,
) -> PyResult<Bound<'py, PyAny>> {
    to_py(
        py,
        tk::torus_knot_surgery_solve(&from.lens()?, &to.lens()?, d).or_raise()?,
    )
}

#[pyfunction]
fn klein_fiber_surgeries(k: BigInt, n_bound: u64) -> Vec<(PySlope, PyLens)> {
    tk::klein_fiber_surgeries(&k, n_bound)
        .into_iter()
        .map(|s| (PySlope(s.slope), PyLens(s.result)))
        .collect()
}

#[pyfunction]
fn seifert_knot_catalog<'py>(py: Python<'py>, lens: LensLike) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, tk::seifert_knot_catalog(&lens.lens()?))
}

/// Renders a continued fraction, or a `PlatDesc` with its site marker.
#[pyfunction]
#[pyo3(signature = (plat, format = "ascii"))]
fn plat_render(plat: &Bound<'_, PyAny>, format: &str) -> PyResult<String> {
    let f: tk::RenderFormat = format.parse().or_raise()?;
    let desc = match plat.cast::<PyPlat>() {
        Ok(p) => p.get().0.clone(),
        Err(_) => tk::cf_to_plat(&plat.extract::<CfLike>()?.cf()?),
    };
    Ok(tk::plat_render(&desc, f))
}

#[pymodule]
#[pyo3(name = "tanglekit")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TanglekitError", m.py().get_type::<TanglekitError>())?;
    m.add_class::<PySlope>()?;
    m.add_class::<PyCf>()?;
    m.add_class::<PyLink>()?;
    m.add_class::<PyLens>()?;
    m.add_class::<PyWitness>()?;
    m.add_class::<PyPlat>()?;
    m.add_function(wrap_pyfunction!(cf_eval, m)?)?;
    m.add_function(wrap_pyfunction!(cf_expand, m)?)?;
    m.add_function(wrap_pyfunction!(pair_canonical, m)?)?;
    m.add_function(wrap_pyfunction!(classify_rsr, m)?)?;
    m.add_function(wrap_pyfunction!(family_general_members, m)?)?;
    m.add_function(wrap_pyfunction!(tb_rsr_decide, m)?)?;
    m.add_function(wrap_pyfunction!(tb_rsr_site_cf, m)?)?;
    m.add_function(wrap_pyfunction!(tb_equiv, m)?)?;
    m.add_function(wrap_pyfunction!(greene_check, m)?)?;
    m.add_function(wrap_pyfunction!(lisca_check, m)?)?;
    m.add_function(wrap_pyfunction!(lens_equiv, m)?)?;
    m.add_function(wrap_pyfunction!(torus_knot_surgery, m)?)?;
    m.add_function(wrap_pyfunction!(torus_knot_surgery_solve, m)?)?;
    m.add_function(wrap_pyfunction!(klein_fiber_surgeries, m)?)?;
    m.add_function(wrap_pyfunction!(seifert_knot_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(plat_render, m)?)?;
    Ok(())
}
