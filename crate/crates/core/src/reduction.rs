//! Symplectic similarity reduction to Bunse-Gerstner form.
//!
//! A 2n x 2n matrix S is transformed by n-1 similarity steps with
//! matrices of the group
//!
//! ```text
//! G = { U = [[L, 0], [Y L, L^{-T}]] : Y = Y^T },
//! ```
//!
//! a subgroup of the symplectic group. Each step i makes column i of
//! S21 upper triangular (a rank-one symmetric update Y = alpha v v^T)
//! and column i of S11 Hessenberg (either a pivoted elementary factor
//! with bounded multipliers, or a Householder reflector, in which case
//! L is orthogonal and `U = [[Q, 0], [Y Q, Q]]`). Earlier columns keep
//! their shape, so after the sweep S11 is upper Hessenberg and S21 is
//! upper triangular.
//!
//! The block update applied at every step is
//!
//! ```text
//! S11' = L^{-1} (S11 + S12 Y) L          S12' = L^{-1} S12 L^{-T}
//! S21' = L^T (S21 + S22 Y - Y S11 - Y S12 Y) L
//! S22' = L^T (S22 - Y S12) L^{-T}
//! ```
//!
//! realized entirely through rank-one and reflector updates; no dense
//! inverse is ever formed on the production path.

use serde::Serialize;

use crate::mat::{dot, Mat};
use crate::structured::{
    below_diag_norm, below_subdiag_norm, is_symplectic, BlockMat, DEFAULT_STRUCT_TOL,
};

/// Default relative threshold for "already triangular / Hessenberg"
/// skips and for breakdown detection.
pub const DEFAULT_STEP_TOL: f64 = 1e-13;

/// Which family of left factors the reduction uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Pivoted unit-lower-triangular factors with multipliers bounded by 1.
    Elementary,
    /// Householder reflectors; the accumulated left factor is orthogonal.
    Householder,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Elementary => write!(f, "elementary"),
            Variant::Householder => write!(f, "householder"),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "elementary" => Ok(Variant::Elementary),
            "householder" => Ok(Variant::Householder),
            other => Err(format!(
                "unknown variant {other:?}, expected 'elementary' or 'householder'"
            )),
        }
    }
}

/// Reflected-value convention for the Householder step.
///
/// `Formula` follows the closed-form expression with s = +sqrt(sum r^2),
/// always reflecting the subdiagonal to -s; it cancels when the
/// subdiagonal entry approaches -s, which is reported as `BetaUndefined`
/// and handled with a sign-flip reflector. `Stable` is the standard
/// cancellation-free choice, reflecting to -sign(r)*s; it is the default
/// and the convention that reproduces the golden n=6 fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HouseholderSign {
    /// Literal formula: always reflect to `-s`. CLI name: `paper`.
    #[serde(rename = "paper")]
    Formula,
    /// Reflect to `-sign(r) * s`; never cancels. CLI name: `stable`.
    Stable,
}

impl std::str::FromStr for HouseholderSign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paper" => Ok(HouseholderSign::Formula),
            "stable" => Ok(HouseholderSign::Stable),
            other => Err(format!(
                "unknown sign convention {other:?}, expected 'paper' or 'stable'"
            )),
        }
    }
}

/// Options for [`reduce`].
#[derive(Debug, Clone)]
pub struct ReduceOptions {
    pub variant: Variant,
    /// Relative step tolerance (skip and breakdown thresholds).
    pub tol: f64,
    /// Number of reduction sweeps; transforms compose.
    pub passes: usize,
    pub householder_sign: HouseholderSign,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions {
            variant: Variant::Householder,
            tol: DEFAULT_STEP_TOL,
            passes: 1,
            householder_sign: HouseholderSign::Stable,
        }
    }
}

impl ReduceOptions {
    pub fn with_variant(variant: Variant) -> Self {
        ReduceOptions {
            variant,
            ..Default::default()
        }
    }
}

/// The data realizing one similarity step `U_i`.
///
/// `step` is 1-based in `[1, n-1]`. The stored vectors are full length
/// n: `v` has zeros in its first `step` entries; `w` holds elementary
/// multipliers (zeros in the first `step + 1` entries) or a unit-norm
/// reflector (zeros in the first `step` entries). An absent `alpha`
/// means `Y_i = 0`; an all-zero `w` means `L_i` is the bare pivot
/// permutation (or the identity). `pivot` is the 1-based row chosen by
/// column pivoting, recorded for the elementary variant only; the
/// stored `v` and `w` refer to the matrix after that row/column swap.
#[derive(Debug, Clone)]
pub struct StepFactors {
    pub step: usize,
    pub variant: Variant,
    pub pivot: Option<usize>,
    pub alpha: Option<f64>,
    pub v: Vec<f64>,
    pub w: Vec<f64>,
}

impl StepFactors {
    fn identity(step: usize, variant: Variant, n: usize) -> Self {
        StepFactors {
            step,
            variant,
            pivot: None,
            alpha: None,
            v: vec![0.0; n],
            w: vec![0.0; n],
        }
    }

    fn has_w(&self) -> bool {
        self.w.iter().any(|&x| x != 0.0)
    }
}

/// Outcome of the rank-one Y step for one column.
#[derive(Debug, Clone, PartialEq)]
pub enum YStep {
    /// Column already upper triangular; take `Y = 0`.
    AlreadyTriangular,
    /// `Y = alpha v v^T` triangularizes the column.
    Factors { alpha: f64, v: Vec<f64> },
    /// The subdiagonal inner product vanished; no admissible rank-one
    /// update exists for this column.
    Breakdown { inner_product: f64 },
}

/// Outcome of the Householder w computation for one column.
#[derive(Debug, Clone, PartialEq)]
pub enum HouseholderW {
    /// Column already Hessenberg; take `Q = I`.
    AlreadyHessenberg,
    /// Unit reflector vector (full length n).
    Reflector { w: Vec<f64> },
    /// The formula's beta is not finite here (subdiagonal ~ -s with a
    /// negligible tail); the driver substitutes a sign-flip reflector.
    BetaUndefined,
}

/// Compute the rank-one symmetric update for column `step` of S21:
/// `v_j = t_{j,step}` below the diagonal and `alpha = 1 / sum t_j r_j`.
pub fn compute_y_step(s: &BlockMat, step: usize, tol: f64) -> YStep {
    let n = s.n;
    assert!(
        step >= 1 && step < n,
        "step {step} out of range for n = {n}"
    );
    let c = step - 1;
    let t_norm = s.s21.frobenius_norm();
    let skip_thr = tol * t_norm.max(1.0);
    let mut max_below = 0.0f64;
    for r in step..n {
        max_below = max_below.max(s.s21[(r, c)].abs());
    }
    if max_below <= skip_thr {
        return YStep::AlreadyTriangular;
    }
    let mut inner = 0.0;
    for r in step..n {
        inner += s.s21[(r, c)] * s.s11[(r, c)];
    }
    let breakdown_thr = tol * t_norm.max(1.0) * s.s11.frobenius_norm().max(1.0);
    if inner.abs() <= breakdown_thr {
        return YStep::Breakdown {
            inner_product: inner,
        };
    }
    let mut v = vec![0.0; n];
    for (r, slot) in v.iter_mut().enumerate().skip(step) {
        *slot = s.s21[(r, c)];
    }
    YStep::Factors {
        alpha: 1.0 / inner,
        v,
    }
}

/// Choose the pivot row for column `step` of s11: the largest-modulus
/// subdiagonal entry, earliest row on ties. Returns the 1-based row, or
/// `None` when every candidate is below tolerance (column is already
/// Hessenberg and the L step is skipped entirely).
pub fn compute_pivot(s11: &Mat, step: usize, tol: f64) -> Option<usize> {
    let n = s11.rows();
    let c = step - 1;
    let thr = tol * s11.frobenius_norm().max(1.0);
    let mut best = 0.0f64;
    let mut row = None;
    for r in step..n {
        let a = s11[(r, c)].abs();
        if a > best {
            best = a;
            row = Some(r);
        }
    }
    if best <= thr {
        None
    } else {
        row.map(|r| r + 1)
    }
}

/// Elementary multipliers for column `step` of an already-pivoted s11:
/// `w_j = r_j / r_pivot` below the subdiagonal. `None` when the column
/// is already Hessenberg. Pivoting guarantees every `|w_j| <= 1`.
pub fn compute_elementary_w(s11: &Mat, step: usize, tol: f64) -> Option<Vec<f64>> {
    let n = s11.rows();
    let c = step - 1;
    let m = step; // 0-based subdiagonal row
    let thr = tol * s11.frobenius_norm().max(1.0);
    let mut max_tail = 0.0f64;
    for r in m + 1..n {
        max_tail = max_tail.max(s11[(r, c)].abs());
    }
    if max_tail <= thr {
        return None;
    }
    let pivot = s11[(m, c)];
    let mut w = vec![0.0; n];
    for r in m + 1..n {
        w[r] = s11[(r, c)] / pivot;
    }
    Some(w)
}

/// Householder reflector zeroing column `step` of s11 below the
/// subdiagonal: with `x` the subdiagonal tail and `s = ||x||`,
/// `w ~ (x_1 + s, x_2, ..)` normalized by `beta = [2(s^2 + x_1 s)]^{-1/2}`
/// under the `Formula` convention, or the `sign(x_1)` variant under
/// `Stable`. The reflected column becomes `(-s) e_1` resp.
/// `(-sign(x_1) s) e_1`.
pub fn compute_householder_w(
    s11: &Mat,
    step: usize,
    tol: f64,
    sign: HouseholderSign,
) -> HouseholderW {
    let n = s11.rows();
    let c = step - 1;
    let m = step;
    let thr = tol * s11.frobenius_norm().max(1.0);
    let mut max_tail = 0.0f64;
    for r in m + 1..n {
        max_tail = max_tail.max(s11[(r, c)].abs());
    }
    if max_tail <= thr {
        return HouseholderW::AlreadyHessenberg;
    }
    let r0 = s11[(m, c)];
    let mut sum = 0.0;
    for r in m..n {
        let x = s11[(r, c)];
        sum += x * x;
    }
    let s_norm = sum.sqrt();
    let (lead, half_denom) = match sign {
        HouseholderSign::Formula => {
            let half = s_norm * s_norm + r0 * s_norm;
            if half <= tol * s_norm * s_norm {
                return HouseholderW::BetaUndefined;
            }
            (r0 + s_norm, half)
        }
        HouseholderSign::Stable => {
            let sigma = if r0 >= 0.0 { 1.0 } else { -1.0 };
            (r0 + sigma * s_norm, s_norm * s_norm + r0.abs() * s_norm)
        }
    };
    let beta = 1.0 / (2.0 * half_denom).sqrt();
    let mut w = vec![0.0; n];
    w[m] = beta * lead;
    for r in m + 1..n {
        w[r] = beta * s11[(r, c)];
    }
    debug_assert!(
        (dot(&w, &w).sqrt() - 1.0).abs() <= 1e-14,
        "reflector norm drifted"
    );
    HouseholderW::Reflector { w }
}

/// The substitute reflector for the `BetaUndefined` case: flips the
/// sign of the subdiagonal coordinate, sending `(-s, ~0, ..)` to
/// `(+s, ~0, ..)` with no division by a small quantity.
fn flip_reflector(n: usize, step: usize) -> Vec<f64> {
    let mut w = vec![0.0; n];
    w[step] = 1.0;
    w
}

fn apply_permutation_inplace(s: &mut BlockMat, a: usize, b: usize) {
    for block in [&mut s.s11, &mut s.s12, &mut s.s21, &mut s.s22] {
        block.swap_rows(a, b);
        block.swap_cols(a, b);
    }
}

fn apply_y_inplace(s: &mut BlockMat, alpha: f64, v: &[f64]) {
    // products against the pre-update blocks
    let p = s.s12.matvec(v); // S12 v
    let pt = s.s12.tr_matvec(v); // S12^T v
    let q = s.s22.matvec(v); // S22 v
    let z = s.s11.tr_matvec(v); // S11^T v
    let sigma = dot(v, &p); // v^T S12 v
                            // S21 + S22 Y - Y S11 - Y S12 Y
    s.s21.rank_one_update(alpha, &q, v);
    s.s21.rank_one_update(-alpha, v, &z);
    s.s21.rank_one_update(-alpha * alpha * sigma, v, v);
    // S11 + S12 Y
    s.s11.rank_one_update(alpha, &p, v);
    // S22 - Y S12, with Y S12 = alpha v (S12^T v)^T
    s.s22.rank_one_update(-alpha, v, &pt);
}

fn apply_l_elementary_inplace(s: &mut BlockMat, m: usize, w: &[f64]) {
    // L = I + w e_m^T, unit lower triangular
    // S11 <- L^{-1} S11 L
    let row_m = s.s11.row(m).to_vec();
    s.s11.rank_one_update(-1.0, w, &row_m);
    let s11w = s.s11.matvec(w);
    s.s11.add_scaled_col(m, &s11w, 1.0);
    // S12 <- L^{-1} S12 L^{-T}
    let row_m = s.s12.row(m).to_vec();
    s.s12.rank_one_update(-1.0, w, &row_m);
    let col_m = s.s12.col(m);
    s.s12.rank_one_update(-1.0, &col_m, w);
    // S21 <- L^T S21 L
    let wt = s.s21.tr_matvec(w);
    s.s21.add_scaled_row(m, &wt, 1.0);
    let s21w = s.s21.matvec(w);
    s.s21.add_scaled_col(m, &s21w, 1.0);
    // S22 <- L^T S22 L^{-T}
    let wt = s.s22.tr_matvec(w);
    s.s22.add_scaled_row(m, &wt, 1.0);
    let col_m = s.s22.col(m);
    s.s22.rank_one_update(-1.0, &col_m, w);
}

fn apply_q_inplace(s: &mut BlockMat, w: &[f64]) {
    // Q = I - 2 w w^T is symmetric orthogonal; every block maps to Q B Q
    for block in [&mut s.s11, &mut s.s12, &mut s.s21, &mut s.s22] {
        block.house_left(w);
        block.house_right(w);
    }
}

/// Apply one recorded step to a block matrix: the pivot permutation,
/// then the rank-one Y similarity, then the L (or Q) similarity.
pub fn apply_step(s: &BlockMat, f: &StepFactors) -> BlockMat {
    let mut out = s.clone();
    let m = f.step; // 0-based subdiagonal row
    if let Some(k) = f.pivot {
        let q = k - 1;
        if q != m {
            apply_permutation_inplace(&mut out, m, q);
        }
    }
    if let Some(alpha) = f.alpha {
        apply_y_inplace(&mut out, alpha, &f.v);
    }
    if f.has_w() {
        match f.variant {
            Variant::Elementary => apply_l_elementary_inplace(&mut out, m, &f.w),
            Variant::Householder => apply_q_inplace(&mut out, &f.w),
        }
    }
    out
}

/// Accumulated transformation `U = [[L, 0], [Y L, L^{-T}]]`.
///
/// `explicit_left` is L (the orthogonal Q for the Householder variant),
/// `left_inv` its running inverse, and `y` the accumulated symmetric Y
/// with exactly zero first row and column.
#[derive(Debug, Clone)]
pub struct GTransform {
    pub variant: Variant,
    pub factor_list: Vec<StepFactors>,
    pub explicit_left: Mat,
    pub left_inv: Mat,
    pub y: Mat,
}

impl GTransform {
    pub fn identity(n: usize, variant: Variant) -> Self {
        GTransform {
            variant,
            factor_list: Vec::new(),
            explicit_left: Mat::identity(n),
            left_inv: Mat::identity(n),
            y: Mat::zeros(n, n),
        }
    }

    pub fn n(&self) -> usize {
        self.explicit_left.rows()
    }

    /// Dense 2n x 2n `U = [[L, 0], [Y L, L^{-T}]]`. For the Householder
    /// variant the (2,2) block is L itself (orthogonality makes
    /// `L^{-T} = L`), which keeps the assembly exact.
    pub fn assemble(&self) -> Mat {
        let n = self.n();
        let m22 = match self.variant {
            Variant::Householder => self.explicit_left.clone(),
            Variant::Elementary => self.left_inv.transpose(),
        };
        let yl = self.y.matmul(&self.explicit_left);
        let mut u = Mat::zeros(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                u[(r, c)] = self.explicit_left[(r, c)];
                u[(n + r, c)] = yl[(r, c)];
                u[(n + r, n + c)] = m22[(r, c)];
            }
        }
        u
    }

    /// Group composition: the transform equivalent to applying `self`
    /// first and `other` second. `L = L1 L2`,
    /// `Y = Y1 + L1^{-T} Y2 L1^{-1}`.
    pub fn compose(&self, other: &GTransform) -> GTransform {
        assert_eq!(
            self.variant, other.variant,
            "cannot compose transforms of different variants"
        );
        assert_eq!(self.n(), other.n(), "transform order mismatch");
        let n = self.n();
        let explicit_left = self.explicit_left.matmul(&other.explicit_left);
        let left_inv = other.left_inv.matmul(&self.left_inv);
        let l1_inv_t = self.left_inv.transpose();
        let carried = l1_inv_t.matmul(&other.y).matmul(&self.left_inv);
        let mut y = self.y.add(&carried).symmetrized();
        zero_first_row_col(&mut y, n);
        let mut factor_list = self.factor_list.clone();
        factor_list.extend(other.factor_list.iter().cloned());
        GTransform {
            variant: self.variant,
            factor_list,
            explicit_left,
            left_inv,
            y,
        }
    }
}

fn zero_first_row_col(y: &mut Mat, n: usize) {
    for i in 0..n {
        y[(0, i)] = 0.0;
        y[(i, 0)] = 0.0;
    }
}

/// Fold a factor sequence into the explicit transform: L as the ordered
/// product of the per-step factors, Y by the telescoping sum
/// `Y = Y_1 + L_1^{-T} Y_2 L_1^{-1} + ...`, symmetrized, with the first
/// row and column forced to exact zero.
pub fn accumulate(factors: &[StepFactors], n: usize, variant: Variant) -> GTransform {
    let mut l = Mat::identity(n);
    let mut linv = Mat::identity(n);
    let mut y = Mat::zeros(n, n);
    for f in factors {
        let m = f.step;
        if let Some(k) = f.pivot {
            let q = k - 1;
            if q != m {
                l.swap_cols(m, q);
                linv.swap_rows(m, q);
            }
        }
        if let Some(alpha) = f.alpha {
            // contribution L_prefix^{-T} (alpha v v^T) L_prefix^{-1}
            let u = linv.tr_matvec(&f.v);
            y.rank_one_update(alpha, &u, &u);
        }
        if f.has_w() {
            match variant {
                Variant::Elementary => {
                    let lw = l.matvec(&f.w);
                    l.add_scaled_col(m, &lw, 1.0);
                    let row_m = linv.row(m).to_vec();
                    linv.rank_one_update(-1.0, &f.w, &row_m);
                }
                Variant::Householder => {
                    l.house_right(&f.w);
                    linv.house_left(&f.w);
                }
            }
        }
    }
    let mut y = y.symmetrized();
    zero_first_row_col(&mut y, n);
    GTransform {
        variant,
        factor_list: factors.to_vec(),
        explicit_left: l,
        left_inv: linv,
        y,
    }
}

/// Diagnostic record for a failed step.
#[derive(Debug, Clone, Serialize)]
pub struct BreakdownInfo {
    /// 1-based step index within its sweep.
    pub step: usize,
    pub reason: String,
    /// The offending inner product (also embedded in `reason`; kept out
    /// of the serialized report, whose schema is `{step, reason}`).
    #[serde(skip)]
    pub inner_product: f64,
}

/// Residual and structure metrics of a finished (or broken-down)
/// reduction, measured against the original input.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    /// Fully completed steps, summed over sweeps.
    pub steps_completed: usize,
    /// Strictly-below-diagonal norm of the final S21.
    pub s21_below_diag_norm: f64,
    /// Below-first-subdiagonal norm of the final S11.
    pub s11_below_subdiag_norm: f64,
    /// `|| U^T J U - J ||_F` of the assembled transform.
    pub symplectic_dev: f64,
    /// Norm of row 1 and column 1 of Y (forced to zero on assembly).
    pub y_first_rowcol_norm: f64,
    /// `|tr(S'^k) - tr(S^k)| / max(1, |tr(S^k)|)` for k = 1, 2, 3.
    pub trace_power_errors: [f64; 3],
    pub breakdown: Option<BreakdownInfo>,
}

/// A finished reduction: the accumulated transform, the reduced matrix
/// and the diagnostics.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub transform: GTransform,
    pub reduced: BlockMat,
    pub report: ReductionReport,
}

/// Run the n-1 step sweep (repeated `opts.passes` times, composing the
/// transforms) and report the outcome. Breakdown is not an error here:
/// the partial transform, the partially reduced matrix and the failing
/// step are all returned for diagnosis.
pub fn reduce(s: &BlockMat, opts: &ReduceOptions) -> Reduction {
    let n = s.n;
    let passes = opts.passes.max(1);
    let mut cur = s.clone();
    let mut transform = GTransform::identity(n, opts.variant);
    let mut breakdown: Option<BreakdownInfo> = None;
    let mut steps_completed = 0usize;

    'sweeps: for _ in 0..passes {
        let mut factors: Vec<StepFactors> = Vec::with_capacity(n.saturating_sub(1));
        for step in 1..n {
            let mut f = StepFactors::identity(step, opts.variant, n);
            if opts.variant == Variant::Elementary {
                if let Some(k) = compute_pivot(&cur.s11, step, opts.tol) {
                    f.pivot = Some(k);
                    if k - 1 != step {
                        apply_permutation_inplace(&mut cur, step, k - 1);
                    }
                }
            }
            match compute_y_step(&cur, step, opts.tol) {
                YStep::AlreadyTriangular => {}
                YStep::Factors { alpha, v } => {
                    f.alpha = Some(alpha);
                    f.v = v;
                    apply_y_inplace(&mut cur, alpha, &f.v);
                }
                YStep::Breakdown { inner_product } => {
                    breakdown = Some(BreakdownInfo {
                        step,
                        reason: format!(
                            "subdiagonal inner product {inner_product:.6e} vanished; \
                             no rank-one update triangularizes column {step}"
                        ),
                        inner_product,
                    });
                    // the pivot permutation, if any, has already been
                    // applied; keep it in the factor list so the
                    // transform still maps the input to `cur`
                    if f.pivot.is_some() {
                        factors.push(f);
                    }
                    let partial = accumulate(&factors, n, opts.variant);
                    transform = transform.compose(&partial);
                    break 'sweeps;
                }
            }
            match opts.variant {
                Variant::Elementary => {
                    if f.pivot.is_some() {
                        if let Some(w) = compute_elementary_w(&cur.s11, step, opts.tol) {
                            f.w = w;
                            apply_l_elementary_inplace(&mut cur, step, &f.w);
                        }
                    }
                }
                Variant::Householder => {
                    match compute_householder_w(&cur.s11, step, opts.tol, opts.householder_sign) {
                        HouseholderW::AlreadyHessenberg => {}
                        HouseholderW::Reflector { w } => {
                            f.w = w;
                            apply_q_inplace(&mut cur, &f.w);
                        }
                        HouseholderW::BetaUndefined => {
                            f.w = flip_reflector(n, step);
                            apply_q_inplace(&mut cur, &f.w);
                        }
                    }
                }
            }
            factors.push(f);
            steps_completed += 1;
        }
        let sweep = accumulate(&factors, n, opts.variant);
        transform = transform.compose(&sweep);
    }

    let report = build_report(s, &cur, &transform, steps_completed, breakdown);
    Reduction {
        transform,
        reduced: cur,
        report,
    }
}

fn build_report(
    original: &BlockMat,
    reduced: &BlockMat,
    transform: &GTransform,
    steps_completed: usize,
    breakdown: Option<BreakdownInfo>,
) -> ReductionReport {
    let u = transform.assemble();
    let symplectic_dev = is_symplectic(&u, DEFAULT_STRUCT_TOL)
        .expect("assembled transform has even dimension")
        .deviation;
    let n = transform.n();
    let mut y_edge = 0.0;
    for i in 0..n {
        y_edge += transform.y[(0, i)] * transform.y[(0, i)];
        y_edge += transform.y[(i, 0)] * transform.y[(i, 0)];
    }
    let d_orig = original.to_dense();
    let d_red = reduced.to_dense();
    let mut trace_power_errors = [0.0; 3];
    for (k, slot) in trace_power_errors.iter_mut().enumerate() {
        let t_orig = trace_power(&d_orig, k + 1);
        let t_red = trace_power(&d_red, k + 1);
        *slot = (t_red - t_orig).abs() / t_orig.abs().max(1.0);
    }
    ReductionReport {
        steps_completed,
        s21_below_diag_norm: below_diag_norm(&reduced.s21),
        s11_below_subdiag_norm: below_subdiag_norm(&reduced.s11),
        symplectic_dev,
        y_first_rowcol_norm: y_edge.sqrt(),
        trace_power_errors,
        breakdown,
    }
}

fn trace_power(d: &Mat, k: usize) -> f64 {
    let n = d.rows();
    match k {
        1 => d.trace(),
        2 => {
            let mut acc = 0.0;
            for i in 0..n {
                for j in 0..n {
                    acc += d[(i, j)] * d[(j, i)];
                }
            }
            acc
        }
        3 => {
            let d2 = d.matmul(d);
            let mut acc = 0.0;
            for i in 0..n {
                for j in 0..n {
                    acc += d2[(i, j)] * d[(j, i)];
                }
            }
            acc
        }
        _ => unreachable!("only powers 1..=3 are reported"),
    }
}
