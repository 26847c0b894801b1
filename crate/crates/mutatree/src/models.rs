//! The eight mutation models: per-model generating functions, closed-form
//! coefficients, exact proportions and tabulated asymptotic forms.
//!
//! Every model exposes the same three counting sequences:
//!
//! - trees: configurations (tree, mutator, model-specific data) by edge count
//! - vertices: total vertices over those configurations, always the
//!   derivative of z * trees
//! - new_type: total new-type vertices over those configurations
//!
//! Each sequence is computed twice, by independent routes: once as a series
//! built from the Catalan context (`series_tables`) and once as a closed-form
//! big-integer expression (`coeff_*`). Tests and the `verify` command hold
//! the two routes equal; the brute-force oracle arbitrates both.
//!
//! The complete-binary-tree model stores its series in z with even support
//! (coefficient of z^{2n} belongs to n internal vertices); its `coeff_*`
//! functions are indexed by n, not by the z exponent.

use crate::powerseries::{solve_fixed_point, Series, SeriesError};
use crate::treealg::{binom, catalan, central_binomial, CatalanContext};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// The mutation models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MutationModel {
    /// Mutator's rightmost child is new type, a sterile leaf; both stop there.
    ShortLived,
    /// A split point in the mutator's child list; everything right of it is
    /// new type.
    Toggle,
    /// Toggle with the mutator restricted to depth exactly 1.
    ToggleH1,
    /// Embedded new type: a down-closed set of descendants rooted at the
    /// mutator, each new-type vertex's children independently new or normal.
    Ent,
    /// The subtree of the mutator's rightmost child (plus the mutator).
    RightBranch,
    /// The chain of rightmost children from the mutator down to a leaf.
    RightPath,
    /// Right path, with the mutator required to have at least one child.
    RightPathStar,
    /// Complete binary trees; the mutator's whole subtree is new type.
    BinaryComplete,
}

pub const ALL_MODELS: [MutationModel; 8] = [
    MutationModel::ShortLived,
    MutationModel::Toggle,
    MutationModel::ToggleH1,
    MutationModel::Ent,
    MutationModel::RightBranch,
    MutationModel::RightPath,
    MutationModel::RightPathStar,
    MutationModel::BinaryComplete,
];

impl MutationModel {
    pub fn name(&self) -> &'static str {
        match self {
            MutationModel::ShortLived => "short_lived",
            MutationModel::Toggle => "toggle",
            MutationModel::ToggleH1 => "toggle_h1",
            MutationModel::Ent => "ent",
            MutationModel::RightBranch => "right_branch",
            MutationModel::RightPath => "right_path",
            MutationModel::RightPathStar => "right_path_star",
            MutationModel::BinaryComplete => "binary_complete",
        }
    }

    pub fn from_name(s: &str) -> Option<MutationModel> {
        ALL_MODELS.iter().copied().find(|m| m.name() == s)
    }
}

impl std::fmt::Display for MutationModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Errors from model-level computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    /// Proportion is undefined when there are no vertices to count.
    #[error("{model} has no vertices at n = {n}, proportion undefined")]
    DivisionByZeroCount { model: MutationModel, n: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The three series of one model at one truncation order.
#[derive(Debug, Clone)]
pub struct ModelTables {
    pub model: MutationModel,
    pub order: usize,
    pub trees: Series,
    pub vertices: Series,
    pub new_type: Series,
}

/// Build the trees/vertices/new-type series for a model from the context
/// series alone. Closed-form shortcuts live in `coeff_*` so the two routes
/// stay independent.
pub fn series_tables(model: MutationModel, ctx: &CatalanContext) -> ModelTables {
    let n = ctx.order;
    let one = Series::one(n);
    let trees = match model {
        // L * C * z = zB
        MutationModel::ShortLived => ctx.uplift(&ctx.c).shift_up().truncated(n),
        // uplift of C^2
        MutationModel::Toggle => ctx.uplift(&ctx.c.mul(&ctx.c)),
        // zC^4
        MutationModel::ToggleH1 => pow(&ctx.c, 4).shift_up().truncated(n),
        // B * (C o zC^2)
        MutationModel::Ent => {
            let zc2 = ctx.c.mul(&ctx.c).shift_up().truncated(n);
            ctx.b.mul(&ctx.c.compose(&zc2).expect("zC^2 has zero constant term"))
        }
        // L * C * zC = zBC
        MutationModel::RightBranch | MutationModel::RightPathStar => {
            ctx.uplift(&ctx.c).mul(&ctx.c).shift_up().truncated(n)
        }
        // L * 1/(1 - zC) = B
        MutationModel::RightPath => {
            let zc = ctx.c.shift_up().truncated(n);
            ctx.uplift(&one.div(&one.sub(&zc)).expect("1 - zC is invertible"))
        }
        // C(z^2) * B(z^2)
        MutationModel::BinaryComplete => even_c(ctx).mul(&even_b(ctx)),
    };

    // Each configuration on k edges has k + 1 vertices (2k + 1 in the
    // z^2-graded binary case), which is exactly the derivative of z * trees.
    let vertices = trees.shift_up().derive();

    let new_type = match model {
        // always the mutator and its sterile child
        MutationModel::ShortLived => trees.scale_int(2),
        // B^2
        MutationModel::Toggle => ctx.uplift(&ctx.c.mul(&ctx.b)),
        // zC^3B
        MutationModel::ToggleH1 => pow(&ctx.c, 3).mul(&ctx.b).shift_up().truncated(n),
        MutationModel::Ent => ent_radical_new_type(n),
        // B * (z^2 C)'
        MutationModel::RightBranch => {
            let z2c = ctx.c.shift_up().shift_up();
            ctx.b.mul(&z2c.derive().truncated(n))
        }
        // BC
        MutationModel::RightPath => ctx.b.mul(&ctx.c),
        // BC - B/C
        MutationModel::RightPathStar => ctx.b.mul(&ctx.c).sub(&ctx.l),
        // B(z^2)^2 * C(z^2)
        MutationModel::BinaryComplete => {
            let bt = even_b(ctx);
            bt.mul(&bt).mul(&even_c(ctx))
        }
    };

    ModelTables {
        model,
        order: n,
        trees,
        vertices,
        new_type,
    }
}

fn pow(s: &Series, k: u32) -> Series {
    let mut acc = Series::one(s.order());
    for _ in 0..k {
        acc = acc.mul(s);
    }
    acc
}

fn even_c(ctx: &CatalanContext) -> Series {
    let z2 = Series::from_ints(&[0, 0, 1], ctx.order);
    ctx.c.compose(&z2).expect("z^2 has zero constant term")
}

fn even_b(ctx: &CatalanContext) -> Series {
    let z2 = Series::from_ints(&[0, 0, 1], ctx.order);
    ctx.b.compose(&z2).expect("z^2 has zero constant term")
}

/// New-type series for the embedded-new-type model in closed form:
/// sqrt((2 - 5z + 2 sqrt(1 - 4z)) / ((4 - 25z)(1 - 4z))).
pub fn ent_radical_new_type(order: usize) -> Series {
    let root = Series::from_ints(&[1, -4], order)
        .sqrt()
        .expect("1 - 4z has constant term 1");
    let numer = Series::from_ints(&[2, -5], order).add(&root.scale_int(2));
    let denom = Series::from_ints(&[4, -41, 100], order);
    numer
        .div(&denom)
        .expect("denominator has constant term 4")
        .sqrt()
        .expect("radicand has constant term 1")
}

/// Root-anchored embedded-new-type trees, solved from T0 = 1/(1 - z(C + T0)).
pub fn ent_solve_t0(ctx: &CatalanContext) -> Result<Series, SeriesError> {
    let n = ctx.order;
    solve_fixed_point(
        |x| {
            let zc_plus_x = ctx.c.add(x).shift_up().truncated(n);
            Series::one(n)
                .div(&Series::one(n).sub(&zc_plus_x))
                .expect("1 - z(C + X) is invertible")
        },
        n,
    )
}

/// Root-anchored embedded-new-type trees with one marked new-type vertex,
/// solved from V = T0 + zV/(1 - z(C + T0))^2.
pub fn ent_solve_vn_tilde(ctx: &CatalanContext) -> Result<Series, SeriesError> {
    let n = ctx.order;
    let t0 = ent_solve_t0(ctx)?;
    let u = Series::one(n).sub(&ctx.c.add(&t0).shift_up().truncated(n));
    let z_over_u2 = Series::z(n).div(&u.mul(&u))?;
    t0.div(&Series::one(n).sub(&z_over_u2))
}

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

/// Closed-form count of configurations with n edges (n internal vertices for
/// the binary model). Models with no configuration on zero edges return 0
/// at n = 0.
pub fn coeff_trees(model: MutationModel, n: usize) -> BigInt {
    let ni = n as i64;
    match model {
        MutationModel::ShortLived => binom(2 * ni - 2, ni - 1),
        MutationModel::Toggle => binom(2 * ni + 1, ni),
        MutationModel::ToggleH1 => {
            if n == 0 {
                return BigInt::zero();
            }
            let t = binom(2 * ni + 1, ni - 1) * big(4);
            debug_assert!((&t % &big(n + 3)).is_zero());
            t / big(n + 3)
        }
        MutationModel::Ent => (0..=n)
            .map(|k| catalan(k) * binom(2 * ni, ni - k as i64))
            .sum(),
        MutationModel::RightBranch | MutationModel::RightPathStar => binom(2 * ni - 1, ni),
        MutationModel::RightPath => binom(2 * ni, ni),
        MutationModel::BinaryComplete => binom(2 * ni + 1, ni),
    }
}

/// Closed-form total vertex count: (n + 1) * trees, or (2n + 1) * trees for
/// the binary model.
pub fn coeff_vertices(model: MutationModel, n: usize) -> BigInt {
    let per_config = match model {
        MutationModel::BinaryComplete => big(2 * n + 1),
        _ => big(n + 1),
    };
    coeff_trees(model, n) * per_config
}

/// Closed-form total new-type vertex count.
pub fn coeff_new_type(model: MutationModel, n: usize) -> BigInt {
    let ni = n as i64;
    match model {
        MutationModel::ShortLived => coeff_trees(model, n) * big(2),
        MutationModel::Toggle => BigInt::from(4u32).pow(n as u32),
        MutationModel::ToggleH1 => binom(2 * ni + 1, ni - 1),
        MutationModel::Ent => (0..=n)
            .map(|k| central_binomial(k) * binom(2 * ni, ni - k as i64))
            .sum(),
        MutationModel::RightBranch => {
            if n == 0 {
                return BigInt::zero();
            }
            let half_central = central_binomial(n) / big(2);
            BigInt::from(4u32).pow(n as u32 - 1) + half_central
        }
        MutationModel::RightPath => binom(2 * ni + 1, ni),
        MutationModel::RightPathStar => {
            if n == 0 {
                return BigInt::zero();
            }
            let t = central_binomial(n) * big(3 * n + 1);
            debug_assert!((&t % &big(2 * n + 2)).is_zero());
            t / big(2 * n + 2)
        }
        MutationModel::BinaryComplete => {
            // sum_k C_k 4^{n-k}, equivalently 2^{2n+1} - binom(2n+1, n)
            (BigInt::one() << (2 * n + 1)) - binom(2 * ni + 1, ni)
        }
    }
}

/// Exact proportion of new-type vertices among all vertices at size n.
pub fn proportion(model: MutationModel, n: usize) -> Result<BigRational, ModelError> {
    let v = coeff_vertices(model, n);
    if v.is_zero() {
        return Err(ModelError::DivisionByZeroCount { model, n });
    }
    Ok(BigRational::new(coeff_new_type(model, n), v))
}

/// The tabulated asymptotic form of the new-type proportion, evaluated in
/// floating point. This is the only floating-point surface of the library.
///
/// Note that for `right_branch`, `right_path` and `binary_complete` the
/// tabulated expressions differ from the true leading behavior of the exact
/// proportion by a factor of 4 (see README, "Known discrepancies"); they are
/// reproduced here as tabulated.
pub fn asymptotic_form(model: MutationModel, n: usize) -> f64 {
    assert!(n >= 1, "asymptotic form needs n >= 1");
    let nf = n as f64;
    let sqrt_pi_over_n = (std::f64::consts::PI / nf).sqrt();
    match model {
        MutationModel::ShortLived => {
            // 2 / ((n+1) binom(2n-2, n-1)), via logs to survive large n
            let ln = (2.0f64).ln() - (nf + 1.0).ln() - ln_binom(2 * n - 2, n - 1);
            ln.exp()
        }
        MutationModel::Toggle => 0.5 * sqrt_pi_over_n,
        MutationModel::ToggleH1 => (nf + 3.0) / (4.0 * nf + 4.0),
        MutationModel::Ent => 0.6,
        MutationModel::RightBranch => 2.0 * sqrt_pi_over_n,
        MutationModel::RightPath => 1.0 / (2.0 * nf),
        MutationModel::RightPathStar => 3.0 / nf,
        MutationModel::BinaryComplete => 0.125 * sqrt_pi_over_n,
    }
}

fn ln_binom(a: usize, b: usize) -> f64 {
    if b > a {
        return f64::NEG_INFINITY;
    }
    let b = b.min(a - b);
    (1..=b)
        .map(|i| (((a - b + i) as f64) / (i as f64)).ln())
        .sum()
}

/// Convert an exact non-negative rational to f64 without overflowing on
/// large numerator or denominator.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let bits = num.bits().max(den.bits());
    if bits > 900 {
        let shift = bits - 900;
        num >>= shift;
        den >>= shift;
    }
    let n = num.to_f64().unwrap_or(f64::NAN);
    let d = den.to_f64().unwrap_or(f64::NAN);
    n / d
}

/// One row of the six-model summary: configuration count at size n and the
/// tabulated asymptotic proportion at the same n.
#[derive(Debug, Clone)]
pub struct SummaryRow {
    pub model: MutationModel,
    pub trees: BigInt,
    pub asymptotic: f64,
}

/// The six ordered-tree models in summary order.
pub fn summary_table(n: usize) -> Vec<SummaryRow> {
    [
        MutationModel::ShortLived,
        MutationModel::Toggle,
        MutationModel::Ent,
        MutationModel::RightBranch,
        MutationModel::RightPath,
        MutationModel::RightPathStar,
    ]
    .iter()
    .map(|&model| SummaryRow {
        model,
        trees: coeff_trees(model, n),
        asymptotic: asymptotic_form(model, n.max(1)),
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treealg::build_context;

    fn ivals(s: &Series, upto: usize) -> Vec<BigInt> {
        (0..=upto)
            .map(|k| {
                let c = s.coeff_at(k).unwrap();
                assert!(c.is_integer(), "non-integer coefficient {}", c);
                c.numer().clone()
            })
            .collect()
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn short_lived_series() {
        let ctx = build_context(5);
        let t = series_tables(MutationModel::ShortLived, &ctx);
        assert_eq!(ivals(&t.trees, 5), bigs(&[0, 1, 2, 6, 20, 70]));
        assert_eq!(ivals(&t.vertices, 5), bigs(&[0, 2, 6, 24, 100, 420]));
        assert_eq!(ivals(&t.new_type, 5), bigs(&[0, 2, 4, 12, 40, 140]));
    }

    #[test]
    fn toggle_series() {
        let ctx = build_context(4);
        let t = series_tables(MutationModel::Toggle, &ctx);
        assert_eq!(ivals(&t.trees, 3), bigs(&[1, 3, 10, 35]));
        // vertices is B^3
        assert_eq!(ivals(&t.vertices, 4), bigs(&[1, 6, 30, 140, 630]));
        // new type is B^2 = 1/(1 - 4z)
        assert_eq!(ivals(&t.new_type, 4), bigs(&[1, 4, 16, 64, 256]));
    }

    #[test]
    fn toggle_h1_series() {
        let ctx = build_context(5);
        let t = series_tables(MutationModel::ToggleH1, &ctx);
        assert_eq!(ivals(&t.trees, 5), bigs(&[0, 1, 4, 14, 48, 165]));
        assert_eq!(ivals(&t.vertices, 5), bigs(&[0, 2, 12, 56, 240, 990]));
        assert_eq!(ivals(&t.new_type, 4), bigs(&[0, 1, 5, 21, 84]));
    }

    #[test]
    fn ent_series() {
        let ctx = build_context(4);
        let t = series_tables(MutationModel::Ent, &ctx);
        assert_eq!(ivals(&t.trees, 4), bigs(&[1, 3, 12, 52, 236]));
        assert_eq!(ivals(&t.new_type, 4), bigs(&[1, 4, 20, 106, 580]));
    }

    #[test]
    fn right_branch_series() {
        let ctx = build_context(4);
        let t = series_tables(MutationModel::RightBranch, &ctx);
        assert_eq!(ivals(&t.trees, 4), bigs(&[0, 1, 3, 10, 35]));
        assert_eq!(ivals(&t.vertices, 4), bigs(&[0, 2, 9, 40, 175]));
        assert_eq!(ivals(&t.new_type, 4), bigs(&[0, 2, 7, 26, 99]));
    }

    #[test]
    fn right_path_series() {
        let ctx = build_context(3);
        let t = series_tables(MutationModel::RightPath, &ctx);
        assert_eq!(ivals(&t.trees, 3), bigs(&[1, 2, 6, 20]));
        assert_eq!(ivals(&t.vertices, 3), bigs(&[1, 4, 18, 80]));
        assert_eq!(ivals(&t.new_type, 3), bigs(&[1, 3, 10, 35]));
    }

    #[test]
    fn right_path_star_series() {
        let ctx = build_context(4);
        let t = series_tables(MutationModel::RightPathStar, &ctx);
        assert_eq!(ivals(&t.trees, 4), bigs(&[0, 1, 3, 10, 35]));
        assert_eq!(ivals(&t.new_type, 4), bigs(&[0, 2, 7, 25, 91]));
    }

    #[test]
    fn binary_complete_series() {
        let ctx = build_context(7);
        let t = series_tables(MutationModel::BinaryComplete, &ctx);
        assert_eq!(ivals(&t.trees, 7), bigs(&[1, 0, 3, 0, 10, 0, 35, 0]));
        assert_eq!(ivals(&t.vertices, 7), bigs(&[1, 0, 9, 0, 50, 0, 245, 0]));
        assert_eq!(ivals(&t.new_type, 7), bigs(&[1, 0, 5, 0, 22, 0, 93, 0]));
    }

    #[test]
    fn trees_coincide_for_right_branch_and_star() {
        for n in 0..=12 {
            assert_eq!(
                coeff_trees(MutationModel::RightBranch, n),
                coeff_trees(MutationModel::RightPathStar, n)
            );
        }
        // new-type counts diverge first at n = 3: 26 vs 25
        assert_eq!(
            coeff_new_type(MutationModel::RightBranch, 2),
            coeff_new_type(MutationModel::RightPathStar, 2)
        );
        assert_eq!(coeff_new_type(MutationModel::RightBranch, 3), BigInt::from(26));
        assert_eq!(coeff_new_type(MutationModel::RightPathStar, 3), BigInt::from(25));
    }

    #[test]
    fn closed_forms_match_series() {
        let ctx = build_context(16);
        for &model in &ALL_MODELS {
            let t = series_tables(model, &ctx);
            for n in 0..=16usize {
                let (trees, vertices, new_type) = match model {
                    MutationModel::BinaryComplete => {
                        if 2 * n > 16 {
                            continue;
                        }
                        (
                            t.trees.coeff_at(2 * n).unwrap(),
                            t.vertices.coeff_at(2 * n).unwrap(),
                            t.new_type.coeff_at(2 * n).unwrap(),
                        )
                    }
                    _ => (
                        t.trees.coeff_at(n).unwrap(),
                        t.vertices.coeff_at(n).unwrap(),
                        t.new_type.coeff_at(n).unwrap(),
                    ),
                };
                assert_eq!(trees, Coeff::from(coeff_trees(model, n)), "{} trees n={}", model, n);
                assert_eq!(
                    vertices,
                    Coeff::from(coeff_vertices(model, n)),
                    "{} vertices n={}",
                    model,
                    n
                );
                assert_eq!(
                    new_type,
                    Coeff::from(coeff_new_type(model, n)),
                    "{} new_type n={}",
                    model,
                    n
                );
            }
        }
    }

    #[test]
    fn binary_model_series_are_even() {
        let ctx = build_context(15);
        let t = series_tables(MutationModel::BinaryComplete, &ctx);
        for k in (1..=15).step_by(2) {
            assert!(t.trees.coeff_at(k).unwrap().is_zero());
            assert!(t.vertices.coeff_at(k).unwrap().is_zero());
            assert!(t.new_type.coeff_at(k).unwrap().is_zero());
        }
    }

    #[test]
    fn new_type_bounded_by_vertices() {
        for &model in &ALL_MODELS {
            for n in 0..=20 {
                let nt = coeff_new_type(model, n);
                let v = coeff_vertices(model, n);
                assert!(nt.sign() != num_bigint::Sign::Minus);
                assert!(nt <= v, "{} at n = {}", model, n);
            }
        }
    }

    #[test]
    fn ent_three_routes_agree() {
        let ctx = build_context(40);
        let radical = ent_radical_new_type(40);
        let t0 = ent_solve_t0(&ctx).unwrap();
        assert_eq!(ivals(&t0, 4), bigs(&[1, 2, 7, 29, 131]));

        // product route: T0 also equals C * (C o zC^2)
        let zc2 = ctx.c.mul(&ctx.c).shift_up().truncated(40);
        let t0_product = ctx.c.mul(&ctx.c.compose(&zc2).unwrap());
        assert_eq!(t0, t0_product);

        // uplifted marked-vertex series equals the radical closed form
        let vn_tilde = ent_solve_vn_tilde(&ctx).unwrap();
        let uplifted = ctx.uplift(&vn_tilde);
        assert_eq!(uplifted, radical);

        // and the functional-equation fixed point gives the same V-tilde
        let fp = solve_fixed_point(
            |x| {
                let u = Series::one(40).sub(&ctx.c.add(&t0).shift_up().truncated(40));
                let zx = x.shift_up().truncated(40);
                t0.add(&zx.div(&u.mul(&u)).unwrap())
            },
            40,
        )
        .unwrap();
        assert_eq!(fp, vn_tilde);
    }

    #[test]
    fn proportion_values() {
        assert_eq!(
            proportion(MutationModel::RightPath, 1).unwrap(),
            BigRational::new(BigInt::from(3), BigInt::from(4))
        );
        assert_eq!(
            proportion(MutationModel::RightPathStar, 3).unwrap(),
            BigRational::new(BigInt::from(5), BigInt::from(8))
        );
        assert!(matches!(
            proportion(MutationModel::ShortLived, 0),
            Err(ModelError::DivisionByZeroCount { .. })
        ));
        // exactly (n+3)/(4n+4) for the depth-1 toggle
        for n in 1..=200usize {
            assert_eq!(
                proportion(MutationModel::ToggleH1, n).unwrap(),
                BigRational::new(BigInt::from(n + 3), BigInt::from(4 * n + 4))
            );
        }
    }

    #[test]
    fn ent_proportion_near_three_fifths() {
        for n in (50..=200).step_by(25) {
            let p = rational_to_f64(&proportion(MutationModel::Ent, n).unwrap());
            assert!((p - 0.6).abs() < 0.01, "n = {}, p = {}", n, p);
        }
    }

    #[test]
    fn asymptotic_form_values() {
        assert_eq!(asymptotic_form(MutationModel::Ent, 17), 0.6);
        let t = asymptotic_form(MutationModel::Toggle, 10_000);
        assert!((t - 0.5 * (std::f64::consts::PI / 1e4).sqrt()).abs() < 1e-15);
        assert!((t - 0.008862).abs() < 1e-6);
        assert_eq!(asymptotic_form(MutationModel::RightPath, 4), 1.0 / 8.0);
        assert_eq!(asymptotic_form(MutationModel::RightPathStar, 6), 0.5);
        // short-lived proportion is exact at small n and survives huge n
        let s = asymptotic_form(MutationModel::ShortLived, 3);
        assert!((s - 2.0 / 24.0).abs() < 1e-12);
        assert!(asymptotic_form(MutationModel::ShortLived, 100_000) >= 0.0);
    }

    #[test]
    fn toggle_quotient_converges() {
        let q = rational_to_f64(&proportion(MutationModel::Toggle, 10_000).unwrap())
            / asymptotic_form(MutationModel::Toggle, 10_000);
        assert!((q - 1.0).abs() < 0.01, "quotient {}", q);
    }

    #[test]
    fn rational_to_f64_handles_huge_values() {
        let p = proportion(MutationModel::Toggle, 10_000).unwrap();
        let f = rational_to_f64(&p);
        assert!(f.is_finite() && f > 0.0 && f < 1.0);
    }

    #[test]
    fn summary_rows() {
        let rows = summary_table(3);
        let trees: Vec<BigInt> = rows.iter().map(|r| r.trees.clone()).collect();
        assert_eq!(trees, bigs(&[6, 35, 52, 10, 20, 10]));
    }
}
