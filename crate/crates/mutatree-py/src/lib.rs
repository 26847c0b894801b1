//! Python bindings for the mutatree library.
//!
//! Exposes the series kernel, per-model closed forms, the brute-force
//! oracle and the table emitters. Exact rationals cross the boundary as
//! (numerator, denominator) tuples of Python ints.

use mutatree::models::{self, MutationModel};
use mutatree::oracle;
use mutatree::powerseries::Series as RsSeries;
use mutatree::seqio::{self, TableFormat};
use mutatree::treealg;
use num_bigint::BigInt;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

fn parse_model(name: &str) -> PyResult<MutationModel> {
    MutationModel::from_name(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown model {:?}", name)))
}

fn rational_pair(r: &num_rational::BigRational) -> (BigInt, BigInt) {
    (r.numer().clone(), r.denom().clone())
}

/// Truncated formal power series with exact rational coefficients.
#[pyclass(name = "Series")]
#[derive(Clone)]
struct PySeries {
    inner: RsSeries,
}

#[pymethods]
impl PySeries {
    /// Build from integer coefficients, truncated or padded to the order.
    #[new]
    fn new(coeffs: Vec<(BigInt, BigInt)>, order: usize) -> PyResult<Self> {
        let cs = coeffs
            .into_iter()
            .map(|(n, d)| {
                if d == BigInt::from(0) {
                    Err(PyZeroDivisionError::new_err("zero denominator"))
                } else {
                    Ok(num_rational::BigRational::new(n, d))
                }
            })
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PySeries {
            inner: RsSeries::from_coeffs(cs, order),
        })
    }

    #[staticmethod]
    fn from_ints(coeffs: Vec<i64>, order: usize) -> Self {
        PySeries {
            inner: RsSeries::from_ints(&coeffs, order),
        }
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn coeff_at(&self, n: usize) -> PyResult<(BigInt, BigInt)> {
        self.inner
            .coeff_at(n)
            .map(|c| rational_pair(&c))
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn add(&self, other: &PySeries) -> Self {
        PySeries { inner: self.inner.add(&other.inner) }
    }

    fn sub(&self, other: &PySeries) -> Self {
        PySeries { inner: self.inner.sub(&other.inner) }
    }

    fn mul(&self, other: &PySeries) -> Self {
        PySeries { inner: self.inner.mul(&other.inner) }
    }

    fn div(&self, other: &PySeries) -> PyResult<Self> {
        self.inner
            .div(&other.inner)
            .map(|inner| PySeries { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn derive(&self) -> Self {
        PySeries { inner: self.inner.derive() }
    }

    fn shift_up(&self) -> Self {
        PySeries { inner: self.inner.shift_up() }
    }

    fn compose(&self, other: &PySeries) -> PyResult<Self> {
        self.inner
            .compose(&other.inner)
            .map(|inner| PySeries { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn sqrt(&self) -> PyResult<Self> {
        self.inner
            .sqrt()
            .map(|inner| PySeries { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.inner)
    }
}

#[pyfunction]
fn catalan(n: usize) -> BigInt {
    treealg::catalan(n)
}

#[pyfunction]
fn central_binomial(n: usize) -> BigInt {
    treealg::central_binomial(n)
}

#[pyfunction]
fn binom(a: i64, b: i64) -> BigInt {
    treealg::binom(a, b)
}

#[pyfunction]
fn model_names() -> Vec<&'static str> {
    models::ALL_MODELS.iter().map(|m| m.name()).collect()
}

#[pyfunction]
fn coeff_trees(model: &str, n: usize) -> PyResult<BigInt> {
    Ok(models::coeff_trees(parse_model(model)?, n))
}

#[pyfunction]
fn coeff_vertices(model: &str, n: usize) -> PyResult<BigInt> {
    Ok(models::coeff_vertices(parse_model(model)?, n))
}

#[pyfunction]
fn coeff_new_type(model: &str, n: usize) -> PyResult<BigInt> {
    Ok(models::coeff_new_type(parse_model(model)?, n))
}

/// Exact proportion of new-type vertices as a (numerator, denominator) pair.
#[pyfunction]
fn proportion(model: &str, n: usize) -> PyResult<(BigInt, BigInt)> {
    models::proportion(parse_model(model)?, n)
        .map(|r| rational_pair(&r))
        .map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
}

#[pyfunction]
fn asymptotic_form(model: &str, n: usize) -> PyResult<f64> {
    Ok(models::asymptotic_form(parse_model(model)?, n))
}

/// The three coefficient sequences of a model up to n_max, computed through
/// the series route.
#[pyfunction]
fn series_tables(model: &str, n_max: usize) -> PyResult<(Vec<BigInt>, Vec<BigInt>, Vec<BigInt>)> {
    let model = parse_model(model)?;
    let ctx = treealg::build_context(match model {
        MutationModel::BinaryComplete => 2 * n_max,
        _ => n_max,
    });
    let t = models::series_tables(model, &ctx);
    let pick = |s: &RsSeries| -> Vec<BigInt> {
        (0..=n_max)
            .map(|n| {
                let idx = match model {
                    MutationModel::BinaryComplete => 2 * n,
                    _ => n,
                };
                s.coeff_at(idx).unwrap().numer().clone()
            })
            .collect()
    };
    Ok((pick(&t.trees), pick(&t.vertices), pick(&t.new_type)))
}

/// Brute-force counts (configs, vertices, new-type) at one size.
#[pyfunction]
fn oracle_count(model: &str, n: usize) -> PyResult<(BigInt, BigInt, BigInt)> {
    let row = oracle::count_row(parse_model(model)?, n)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((row.trees, row.vertices, row.new_type))
}

/// All ordered trees with n edges in canonical parentheses form.
#[pyfunction]
fn gen_trees(n: usize) -> PyResult<Vec<String>> {
    oracle::gen_trees(n)
        .map(|ts| ts.iter().map(|t| t.to_string()).collect())
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
fn emit_bfile(rows: Vec<(i64, BigInt)>) -> PyResult<String> {
    seqio::emit_bfile(&rows).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (model, n_max, format = "csv"))]
fn emit_table(model: &str, n_max: usize, format: &str) -> PyResult<String> {
    let fmt = match format {
        "csv" => TableFormat::Csv,
        "jsonl" => TableFormat::Jsonl,
        other => return Err(PyValueError::new_err(format!("unknown format {:?}", other))),
    };
    Ok(seqio::emit_table(parse_model(model)?, n_max, fmt))
}

#[pymodule]
fn mutatree_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries>()?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(central_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(binom, m)?)?;
    m.add_function(wrap_pyfunction!(model_names, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_trees, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_new_type, m)?)?;
    m.add_function(wrap_pyfunction!(proportion, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_form, m)?)?;
    m.add_function(wrap_pyfunction!(series_tables, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_count, m)?)?;
    m.add_function(wrap_pyfunction!(gen_trees, m)?)?;
    m.add_function(wrap_pyfunction!(emit_bfile, m)?)?;
    m.add_function(wrap_pyfunction!(emit_table, m)?)?;
    Ok(())
}
