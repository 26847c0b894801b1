//! The named series of ordered-tree enumeration and the identities that tie
//! them together.
//!
//! C counts ordered trees by edges (Catalan numbers), B counts trees with a
//! distinguished vertex (central binomials), and L = B/C counts trees with a
//! distinguished leaf. `build_context` computes all three and verifies the
//! defining identities eagerly, so that everything downstream can rely on
//! them:
//!
//! - C = 1 + zC^2
//! - B = 1/(1 - 2zC)
//! - C' = B C^2 and B' = 2 B^3
//! - (B - 1)/2 = z B C

use crate::powerseries::{solve_fixed_point, Coeff, Series};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient with the summation-friendly convention that
/// out-of-range arguments (b < 0 or b > a) give 0.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut r = BigInt::one();
    for i in 0..b {
        r = r * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    r
}

/// The n-th Catalan number binom(2n, n)/(n + 1).
pub fn catalan(n: usize) -> BigInt {
    let n = n as i64;
    binom(2 * n, n) / BigInt::from(n + 1)
}

/// The n-th central binomial coefficient binom(2n, n).
pub fn central_binomial(n: usize) -> BigInt {
    let n = n as i64;
    binom(2 * n, n)
}

/// [z^n] C^s = s/(2n+s) * binom(2n+s, n), exact.
pub fn coeff_c_power(n: usize, s: usize) -> BigInt {
    assert!(s >= 1, "coeff_c_power requires s >= 1");
    let (n, s) = (n as i64, s as i64);
    let t = binom(2 * n + s, n) * BigInt::from(s);
    let d = BigInt::from(2 * n + s);
    debug_assert!((&t % &d).is_zero());
    t / d
}

/// [z^n] B C^s = binom(2n+s, n), exact.
pub fn coeff_bc_power(n: usize, s: usize) -> BigInt {
    assert!(s >= 1, "coeff_bc_power requires s >= 1");
    let (n, s) = (n as i64, s as i64);
    binom(2 * n + s, n)
}

/// The three foundational series at a fixed truncation order.
#[derive(Debug, Clone)]
pub struct CatalanContext {
    pub order: usize,
    /// Ordered trees by edges: 1 + z + 2z^2 + 5z^3 + ...
    pub c: Series,
    /// Trees with a distinguished vertex: 1 + 2z + 6z^2 + 20z^3 + ...
    pub b: Series,
    /// Trees with a distinguished leaf, L = B/C.
    pub l: Series,
}

/// Compute C, B and L to the given order and check the defining identities.
/// An identity failure is a defect in the series kernel, so it panics.
pub fn build_context(order: usize) -> CatalanContext {
    let c = solve_fixed_point(
        |x| {
            let zx2 = x.mul(x).shift_up().truncated(x.order());
            Series::one(x.order()).add(&zx2)
        },
        order,
    )
    .expect("1 + zX^2 is a contraction");

    let one = Series::one(order);
    let two_zc = c.shift_up().truncated(order).scale_int(2);
    let b = one.div(&one.sub(&two_zc)).expect("1 - 2zC has constant term 1");
    let l = b.div(&c).expect("C has constant term 1");

    let ctx = CatalanContext { order, c, b, l };
    ctx.verify_identities();
    ctx
}

impl CatalanContext {
    /// The four rewriting-rule identities, checked exactly up to truncation.
    fn verify_identities(&self) {
        let one = Series::one(self.order);
        let zc2 = self.c.mul(&self.c).shift_up().truncated(self.order);
        assert_eq!(self.c, one.add(&zc2), "C = 1 + zC^2 failed");

        let two_zc = self.c.shift_up().truncated(self.order).scale_int(2);
        assert_eq!(
            self.b.mul(&one.sub(&two_zc)),
            one,
            "B = 1/(1 - 2zC) failed"
        );

        if self.order >= 1 {
            let n = self.order - 1;
            let bc2 = self.b.mul(&self.c).mul(&self.c).truncated(n);
            assert_eq!(self.c.derive(), bc2, "C' = B C^2 failed");
            let b3 = self.b.mul(&self.b).mul(&self.b).scale_int(2).truncated(n);
            assert_eq!(self.b.derive(), b3, "B' = 2 B^3 failed");
        }

        let half = Coeff::new(BigInt::one(), BigInt::from(2));
        let lhs = self.b.sub(&one).scale(&half);
        let zbc = self.b.mul(&self.c).shift_up().truncated(self.order);
        assert_eq!(lhs, zbc, "(B - 1)/2 = zBC failed");
    }

    /// Anchor transfer: a statistic counted at the root is counted at an
    /// arbitrary vertex after multiplication by the leaf series L.
    pub fn uplift(&self, root_series: &Series) -> Series {
        self.l.mul(root_series)
    }
}
