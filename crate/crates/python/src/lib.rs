//! Python bindings: trees, paths and the maps between s-Catalan families.

use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use scat_core::arw;
use scat_core::bijections;
use scat_core::enumeration::{self, Statistic};
use scat_core::parking;
use scat_core::paths::enumerate_paths;
use scat_core::signatures::rational_signature as core_rational_signature;
use scat_core::trees::enumerate_trees;
use scat_core::{Composition, DyckPath, Error, PlanarTree, WeakComposition, DEFAULT_CAP};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::CapExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn composition(s: Vec<usize>) -> PyResult<Composition> {
    Composition::new(s).map_err(py_err)
}

fn blocks(pi: &scat_core::SetPartition) -> Vec<Vec<usize>> {
    pi.blocks().to_vec()
}

/// A planar rooted tree, stored as its preorder degree sequence.
#[pyclass(name = "Tree", frozen, eq, hash, str, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Tree(PlanarTree);

impl std::fmt::Display for Tree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl Tree {
    #[new]
    fn new(degrees: Vec<usize>) -> PyResult<Self> {
        PlanarTree::from_degrees(degrees).map(Tree).map_err(py_err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Tree).map_err(py_err)
    }

    #[getter]
    fn degrees(&self) -> Vec<usize> {
        self.0.degrees().to_vec()
    }

    fn signature(&self) -> Vec<usize> {
        self.0.signature().into_parts()
    }

    fn leaf_count(&self) -> usize {
        self.0.leaf_count()
    }

    fn to_path(&self) -> Path {
        Path(bijections::tree_to_path(&self.0))
    }

    fn to_stirling(&self) -> PyResult<String> {
        bijections::tree_to_stirling(&self.0).map(|w| w.to_string()).map_err(py_err)
    }

    fn to_partition(&self) -> PyResult<Vec<Vec<usize>>> {
        bijections::tree_to_partition(&self.0).map(|p| blocks(&p)).map_err(py_err)
    }

    fn to_matching(&self) -> Vec<Vec<usize>> {
        bijections::tree_to_matching(&self.0).blocks().to_vec()
    }

    /// `(n, chords)` of the matching angulation.
    fn to_angulation(&self) -> (usize, Vec<(usize, usize)>) {
        let a = bijections::tree_to_angulation(&self.0);
        (a.n(), a.diagonals().to_vec())
    }

    fn to_parenthesization(&self) -> String {
        bijections::tree_to_parenthesization(&self.0).to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tree({:?})", self.0.degrees())
    }
}

/// An s-Dyck path given by its signature and east-step composition.
#[pyclass(name = "DyckPath", frozen, eq, hash, str, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Path(DyckPath);

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl Path {
    #[new]
    fn new(s: Vec<usize>, mu: Vec<usize>) -> PyResult<Self> {
        DyckPath::new(composition(s)?, WeakComposition::new(mu)).map(Path).map_err(py_err)
    }

    #[getter]
    fn s(&self) -> Vec<usize> {
        self.0.s().to_vec()
    }

    #[getter]
    fn mu(&self) -> Vec<usize> {
        self.0.mu().to_vec()
    }

    fn word(&self) -> String {
        self.0.word()
    }

    fn area_vector(&self) -> Vec<usize> {
        self.0.area_vector().into_parts()
    }

    fn area(&self) -> usize {
        self.0.area()
    }

    fn peaks(&self) -> usize {
        self.0.peaks()
    }

    fn to_tree(&self) -> Tree {
        Tree(bijections::path_to_tree(&self.0))
    }

    fn __repr__(&self) -> String {
        format!("DyckPath({:?}, {:?})", self.0.s().parts(), self.0.mu().to_vec())
    }
}

/// `C_s` by `"recurrence"`, `"determinant"` or `"exhaustive"`.
#[pyfunction]
#[pyo3(signature = (s, method = "recurrence"))]
fn count(s: Vec<usize>, method: &str) -> PyResult<BigUint> {
    let s = composition(s)?;
    match method {
        "recurrence" => Ok(enumeration::count_recurrence(&s)),
        "determinant" => Ok(enumeration::count_determinant(&s)),
        "exhaustive" => enumeration::count_exhaustive(&s, DEFAULT_CAP).map_err(py_err),
        other => Err(PyValueError::new_err(format!("unknown method `{}`", other))),
    }
}

/// Every s-tree, in the canonical order.
#[pyfunction]
fn trees(s: Vec<usize>) -> PyResult<Vec<Tree>> {
    Ok(enumerate_trees(&composition(s)?).map(Tree).collect())
}

/// Every s-Dyck path, in the canonical order.
#[pyfunction]
fn paths(s: Vec<usize>) -> PyResult<Vec<Path>> {
    Ok(enumerate_paths(&composition(s)?).map(Path).collect())
}

#[pyfunction]
fn stirling_to_tree(word: &str) -> PyResult<Tree> {
    let w = word.parse().map_err(py_err)?;
    bijections::stirling_to_tree(&w).map(Tree).map_err(py_err)
}

#[pyfunction]
fn partition_to_tree(blocks: Vec<Vec<usize>>, s: Vec<usize>) -> PyResult<Tree> {
    let pi = scat_core::SetPartition::new(blocks).map_err(py_err)?;
    bijections::partition_to_tree(&pi, &composition(s)?).map(Tree).map_err(py_err)
}

#[pyfunction]
fn parenthesization_to_tree(word: &str) -> PyResult<Tree> {
    let w = scat_core::Parenthesization::new(word).map_err(py_err)?;
    Ok(Tree(bijections::parenthesization_to_tree(&w)))
}

#[pyfunction]
fn rational_signature(a: u64, b: u64) -> PyResult<Vec<usize>> {
    core_rational_signature(a, b).map(Composition::into_parts).map_err(py_err)
}

/// Histogram of one statistic, e.g. `"peaks"`.
#[pyfunction]
fn narayana(s: Vec<usize>, statistic: &str) -> PyResult<Vec<(usize, BigUint)>> {
    let st: Statistic = statistic.parse().map_err(py_err)?;
    let d = enumeration::narayana_distribution(&composition(s)?, st, DEFAULT_CAP).map_err(py_err)?;
    Ok(d.counts.into_iter().collect())
}

#[pyfunction]
fn count_parking(mu: Vec<usize>) -> BigUint {
    parking::count_parking(&WeakComposition::new(mu))
}

#[pyfunction]
fn s_factorial(s: Vec<usize>) -> PyResult<BigUint> {
    Ok(scat_core::stirling::s_factorial(&composition(s)?))
}

#[pyfunction]
fn laser_partition(a: u64, b: u64, mu: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    let s = core_rational_signature(a, b).map_err(py_err)?;
    let d = DyckPath::new(s, WeakComposition::new(mu)).map_err(py_err)?;
    arw::laser_partition(&d, a, b).map(|p| blocks(&p)).map_err(py_err)
}

type Blocks = Vec<Vec<usize>>;

/// `(laser partition, tree-route partition, equal)` for one rational path.
#[pyfunction]
fn arw_compare(a: u64, b: u64, mu: Vec<usize>) -> PyResult<(Blocks, Blocks, bool)> {
    let s = core_rational_signature(a, b).map_err(py_err)?;
    let d = DyckPath::new(s, WeakComposition::new(mu)).map_err(py_err)?;
    let c = arw::compare_constructions(&d, a, b).map_err(py_err)?;
    Ok((c.arw, c.ours, c.equal))
}

#[pymodule]
fn scat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Tree>()?;
    m.add_class::<Path>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(trees, m)?)?;
    m.add_function(wrap_pyfunction!(paths, m)?)?;
    m.add_function(wrap_pyfunction!(stirling_to_tree, m)?)?;
    m.add_function(wrap_pyfunction!(partition_to_tree, m)?)?;
    m.add_function(wrap_pyfunction!(parenthesization_to_tree, m)?)?;
    m.add_function(wrap_pyfunction!(rational_signature, m)?)?;
    m.add_function(wrap_pyfunction!(narayana, m)?)?;
    m.add_function(wrap_pyfunction!(count_parking, m)?)?;
    m.add_function(wrap_pyfunction!(s_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(laser_partition, m)?)?;
    m.add_function(wrap_pyfunction!(arw_compare, m)?)?;
    Ok(())
}
