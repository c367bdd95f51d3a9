//! Python bindings. Rationals cross the boundary as `"p/q"` strings and
//! instances as their JSON files.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

use sumhard::geom::{Interval, IntervalSet};
use sumhard::linear::{
    solve_3sum, solve_3sum_prime, solve_eqdist, solve_segcontpnt, EqDistInstance, SegContPntInstance,
    ThreeSumInstance, ThreeSumPrimeInstance,
};
use sumhard::workbench::{self, BenchSolver, Config, GenMode, InstanceFile, Kind};
use sumhard::{Error, Rational};

fn py_err(err: Error) -> PyErr {
    match err {
        Error::Io(e) => PyIOError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn rationals(values: &[String]) -> PyResult<Vec<Rational>> {
    values.iter().map(|v| v.parse::<Rational>().map_err(py_err)).collect()
}

fn parsed<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(py_err)
}

/// An instance file of any kind.
#[pyclass(name = "Instance", module = "sumhard_py", from_py_object)]
#[derive(Clone)]
struct PyInstance {
    file: InstanceFile,
}

#[pymethods]
impl PyInstance {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyInstance { file: InstanceFile::from_json(text).map_err(py_err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (kind, n, mode = "random", seed = 0))]
    fn generate(kind: &str, n: usize, mode: &str, seed: u64) -> PyResult<Self> {
        let file = workbench::generate(parsed::<Kind>(kind)?, n, parsed::<GenMode>(mode)?, seed, &Config::default())
            .map_err(py_err)?;
        Ok(PyInstance { file })
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.file.kind().name()
    }

    fn to_json(&self) -> String {
        self.file.to_json()
    }

    /// Follows the reductions named in `chain` (a path in the reduction DAG).
    fn reduce(&self, chain: Vec<String>) -> PyResult<Self> {
        let kinds = chain.iter().map(|k| parsed::<Kind>(k)).collect::<PyResult<Vec<_>>>()?;
        let mut file = self.file.clone();
        for k in workbench::validate_chain(file.kind(), &kinds).map_err(py_err)? {
            file = workbench::reduce_file(&file, k).map_err(py_err)?;
        }
        Ok(PyInstance { file })
    }

    /// Stage record as JSON: answer, witness, verifier and oracle verdicts.
    fn solve(&self) -> PyResult<String> {
        let rec = workbench::solve_instance(&self.file.instance, &Config::default()).map_err(py_err)?;
        Ok(serde_json::to_string(&rec).expect("serializable"))
    }

    fn __repr__(&self) -> String {
        format!("Instance(kind={:?})", self.kind())
    }
}

/// Audit report (JSON) of `instances` run through `chain`.
#[pyfunction]
fn audit(instances: Vec<PyInstance>, chain: Vec<String>) -> PyResult<String> {
    let kinds = chain.iter().map(|k| parsed::<Kind>(k)).collect::<PyResult<Vec<_>>>()?;
    let files: Vec<_> = instances.into_iter().enumerate().map(|(i, p)| (format!("{i:06}"), p.file)).collect();
    let report = workbench::audit(&files, &kinds, &Config::default()).map_err(py_err)?;
    Ok(serde_json::to_string(&report).expect("serializable"))
}

/// SVG drawing of a polycont, rotation/rigid or hausdorff instance.
#[pyfunction]
fn render_svg(instance: &PyInstance) -> PyResult<String> {
    use workbench::{Instance, RenderObject};
    let obj = match &instance.file.instance {
        Instance::PolyCont { p, q } => RenderObject::CombPair(p.clone(), q.clone()),
        Instance::Rotation { a, b } | Instance::Rigid { a, b } => RenderObject::WedgePair(a.clone(), b.clone()),
        Instance::Hausdorff { a, b, eps } => {
            RenderObject::HausdorffGadget { a: a.clone(), b: b.clone(), eps: eps.clone() }
        }
        other => return Err(PyValueError::new_err(format!("nothing to draw for kind {}", other.kind()))),
    };
    Ok(workbench::svg_string(&obj))
}

#[pyfunction(name = "solve_3sum")]
fn py_solve_3sum(values: Vec<String>) -> PyResult<Option<(usize, usize, usize)>> {
    let inst = ThreeSumInstance::new(rationals(&values)?).map_err(py_err)?;
    Ok(solve_3sum(&inst).map(|w| (w.i, w.j, w.k)))
}

#[pyfunction(name = "solve_3sum_prime")]
fn py_solve_3sum_prime(a: Vec<String>, b: Vec<String>, c: Vec<String>) -> PyResult<Option<(usize, usize, usize)>> {
    let inst = ThreeSumPrimeInstance::new(rationals(&a)?, rationals(&b)?, rationals(&c)?).map_err(py_err)?;
    Ok(solve_3sum_prime(&inst).map(|w| (w.i, w.j, w.k)))
}

#[pyfunction(name = "solve_eqdist")]
fn py_solve_eqdist(p: Vec<String>, q: Vec<String>) -> PyResult<Option<(usize, usize, usize, usize)>> {
    let inst = EqDistInstance::new(rationals(&p)?, rationals(&q)?).map_err(py_err)?;
    Ok(solve_eqdist(&inst).map(|w| (w.p1, w.p2, w.q1, w.q2)))
}

/// Smallest shift `v` with `P + v` inside the union of `intervals`, as a
/// rational string.
#[pyfunction(name = "solve_segcontpnt")]
fn py_solve_segcontpnt(p: Vec<String>, intervals: Vec<(String, String)>) -> PyResult<Option<String>> {
    let ivs = intervals
        .iter()
        .map(|(lo, hi)| Interval::new(parsed(lo)?, parsed(hi)?).map_err(py_err))
        .collect::<PyResult<Vec<_>>>()?;
    let q = IntervalSet::new(ivs).map_err(py_err)?;
    let inst = SegContPntInstance::new(rationals(&p)?, q).map_err(py_err)?;
    Ok(solve_segcontpnt(&inst).map(|v| v.to_string()))
}

/// CSV of median and minimum wall times.
#[pyfunction(name = "bench")]
#[pyo3(signature = (solver, sizes, reps = 3, seed = 0))]
fn py_bench(solver: &str, sizes: Vec<usize>, reps: usize, seed: u64) -> PyResult<String> {
    let s: BenchSolver = parsed(solver)?;
    Ok(workbench::to_csv(&workbench::bench(s, &sizes, reps, seed)))
}

#[pymodule]
fn sumhard_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    m.add_function(wrap_pyfunction!(py_solve_3sum, m)?)?;
    m.add_function(wrap_pyfunction!(py_solve_3sum_prime, m)?)?;
    m.add_function(wrap_pyfunction!(py_solve_eqdist, m)?)?;
    m.add_function(wrap_pyfunction!(py_solve_segcontpnt, m)?)?;
    m.add_function(wrap_pyfunction!(py_bench, m)?)?;
    Ok(())
}
