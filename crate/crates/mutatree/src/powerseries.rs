//! Truncated formal power series with exact rational coefficients.
//!
//! A `Series` stores the coefficients of z^0 .. z^order and every operation
//! is carried out modulo z^{order+1}. Nothing in this module touches
//! floating point.
//!
//! Invariants:
//! - `coeffs.len() == order() + 1` always
//! - binary operations on operands of different order truncate to the
//!   shorter operand first
//! - a `Series` is immutable; every operation returns a new value
//! - coefficients are kept in reduced form (`BigRational` normalizes on
//!   construction)

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Exact coefficient type used throughout.
pub type Coeff = BigRational;

/// Errors reported by series operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    /// Division requires the divisor to have a nonzero constant term.
    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,
    /// Composition a(b) requires b(0) = 0.
    #[error("composition requires the inner series to have zero constant term, got {0}")]
    NonzeroInnerConstant(String),
    /// Square root requires the constant term to be the square of a rational.
    #[error("constant term {0} has no rational square root")]
    NonSquareConstant(String),
    /// Fixed-point iteration failed to stabilize, i.e. the map was not a
    /// z-adic contraction.
    #[error("fixed-point iteration did not stabilize within {0} rounds")]
    NoConvergence(usize),
    /// Coefficient index beyond the truncation order.
    #[error("coefficient z^{index} requested but series is only known to order {order}")]
    OutOfRange { index: usize, order: usize },
}

/// A formal power series truncated at z^order, with exact rational
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Coeff>,
}

impl Series {
    /// Build a series from the given coefficients, truncated or zero-padded
    /// to exactly `order + 1` entries.
    pub fn from_coeffs(cs: Vec<Coeff>, order: usize) -> Series {
        let mut coeffs = cs;
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Coeff::zero());
        Series { coeffs }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(cs: &[i64], order: usize) -> Series {
        Series::from_coeffs(
            cs.iter().map(|&c| Coeff::from(BigInt::from(c))).collect(),
            order,
        )
    }

    /// The zero series 0 + 0z + ... + 0z^order.
    pub fn zero(order: usize) -> Series {
        Series::from_coeffs(vec![], order)
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Series {
        Series::from_ints(&[1], order)
    }

    /// The identity series z.
    pub fn z(order: usize) -> Series {
        Series::from_ints(&[0, 1], order)
    }

    /// Truncation order; coefficients of z^k are known exactly for k <= order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Borrow the coefficient of z^k; zero for k > order is *not* implied,
    /// so the index must be in range.
    pub fn coeff(&self, k: usize) -> &Coeff {
        &self.coeffs[k]
    }

    /// The coefficient extraction operator [z^n].
    pub fn coeff_at(&self, n: usize) -> Result<Coeff, SeriesError> {
        if n > self.order() {
            return Err(SeriesError::OutOfRange {
                index: n,
                order: self.order(),
            });
        }
        Ok(self.coeffs[n].clone())
    }

    /// Copy truncated to `order` (which must be <= self.order()).
    pub fn truncated(&self, order: usize) -> Series {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {}",
            self.order(),
            order
        );
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn common_order(&self, other: &Series) -> usize {
        self.order().min(other.order())
    }

    /// Coefficient-wise sum, truncated to the shorter operand.
    pub fn add(&self, other: &Series) -> Series {
        let n = self.common_order(other);
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Series { coeffs }
    }

    /// Coefficient-wise difference, truncated to the shorter operand.
    pub fn sub(&self, other: &Series) -> Series {
        let n = self.common_order(other);
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] - &other.coeffs[k])
            .collect();
        Series { coeffs }
    }

    /// Cauchy product, truncated to the shorter operand.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.common_order(other);
        let mut coeffs = vec![Coeff::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Series { coeffs }
    }

    /// Multiply every coefficient by the rational `r`.
    pub fn scale(&self, r: &Coeff) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiply by the integer `k`.
    pub fn scale_int(&self, k: i64) -> Series {
        self.scale(&Coeff::from(BigInt::from(k)))
    }

    /// Quotient q with q * other = self up to truncation.
    /// Requires other(0) != 0.
    pub fn div(&self, other: &Series) -> Result<Series, SeriesError> {
        if other.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.common_order(other);
        let mut q = vec![Coeff::zero(); n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if !other.coeffs[j].is_zero() {
                    acc -= &other.coeffs[j] * &q[k - j];
                }
            }
            q[k] = acc / &other.coeffs[0];
        }
        Ok(Series { coeffs: q })
    }

    /// Term-wise derivative. The result is known one order less than the
    /// input; for an order-0 input the result is the zero series of order 0.
    pub fn derive(&self) -> Series {
        if self.order() == 0 {
            return Series::zero(0);
        }
        let coeffs = (1..=self.order())
            .map(|k| &self.coeffs[k] * Coeff::from(BigInt::from(k)))
            .collect();
        Series { coeffs }
    }

    /// Multiply by z. This shift is exact, so the result is known one order
    /// further than the input.
    pub fn shift_up(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Coeff::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Composition self(other), requiring other(0) = 0. Evaluated by
    /// Horner's scheme over truncated arithmetic.
    pub fn compose(&self, other: &Series) -> Result<Series, SeriesError> {
        if !other.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant(
                other.coeffs[0].to_string(),
            ));
        }
        let n = self.common_order(other);
        let mut acc = Series::from_coeffs(vec![self.coeffs[n].clone()], n);
        for k in (0..n).rev() {
            acc = acc.mul(&other.truncated(n));
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Principal square root: s with s*s = self and s(0) = +sqrt(self(0)).
    /// The constant term must be the square of a rational.
    pub fn sqrt(&self) -> Result<Series, SeriesError> {
        let s0 = rational_sqrt(&self.coeffs[0])
            .ok_or_else(|| SeriesError::NonSquareConstant(self.coeffs[0].to_string()))?;
        let n = self.order();
        let mut s = vec![Coeff::zero(); n + 1];
        let two_s0 = &s0 + &s0;
        s[0] = s0;
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc -= &s[j] * &s[k - j];
            }
            s[k] = acc / &two_s0;
        }
        Ok(Series { coeffs: s })
    }
}

/// Square root of a non-negative rational, if it is exactly representable.
fn rational_sqrt(r: &Coeff) -> Option<Coeff> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Coeff::new(sn, sd))
    } else {
        None
    }
}

/// Solve X = F(X) in the ring of truncated series, where F is a z-adic
/// contraction (each occurrence of X inside F is multiplied by z).
///
/// Iterates from X = F(0) until the coefficients stop changing; a
/// contraction fixes one further coefficient per round, so `order + 1`
/// rounds always suffice. Failure to stabilize signals a non-contractive F.
pub fn solve_fixed_point<F>(f: F, order: usize) -> Result<Series, SeriesError>
where
    F: Fn(&Series) -> Series,
{
    let mut x = f(&Series::zero(order)).truncated(order);
    for _ in 0..=order {
        let next = f(&x).truncated(order);
        if next == x {
            return Ok(x);
        }
        x = next;
    }
    Err(SeriesError::NoConvergence(order + 2))
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}z", c)?,
                _ => write!(f, "{}z^{}", c, k)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}
