//! Collaborative decoding of `ℓ`-interleaved wild Goppa codes.
//!
//! A received `ℓ × n` matrix over `F_q` yields `ℓ` syndrome polynomials
//! `S_i ≡ Σ_j r_ij·(x − α_j)^{-1} (mod g)`. The decoder finds polynomials
//! `(λ, ω_1..ω_ℓ)`, not all zero, with `ω_i ≡ λ·S_i (mod g)`,
//! `deg ω_i < deg λ` and `deg λ` minimal, by solving one homogeneous linear
//! system over `F_{q^m}` per candidate degree. Error positions are the
//! locator roots of `λ`; error values come from `ω_i(α_j)/λ'(α_j)`. Every
//! stage is verified, so a wrong answer can only escape if it passes root,
//! degree, subfield and residual checks simultaneously.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Ext, FieldContext};
use crate::goppa::GoppaCode;
use crate::matrix::FqMatrix;
use crate::poly::Poly;

/// Collaborative decoding radius `⌊ℓ/(ℓ+1) · q/(q−1) · r⌋`.
pub fn max_burst_radius(ell: u64, q: u64, r: u64) -> u64 {
    assert!(ell >= 1 && q >= 2 && r >= 1);
    (ell as u128 * q as u128 * r as u128 / ((ell as u128 + 1) * (q as u128 - 1))) as u64
}

/// Unique decoding radius `⌊q/(q−1) · r/2⌋` of the underlying wild code.
pub fn unique_radius(q: u64, r: u64) -> u64 {
    assert!(q >= 2 && r >= 1);
    (q as u128 * r as u128 / (2 * (q as u128 - 1))) as u64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecoderError {
    DimensionMismatch(String),
    /// The solver requires a nonzero syndrome set; weight 0 is the caller's
    /// short-circuit.
    ZeroSyndromes,
    CapOutOfRange {
        cap: usize,
        max: usize,
    },
    /// `λ'(α) = 0` at a claimed error locator.
    RepeatedRoot,
}

impl fmt::Display for DecoderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecoderError::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            DecoderError::ZeroSyndromes => write!(f, "all syndromes are zero"),
            DecoderError::CapOutOfRange { cap, max } => {
                write!(f, "degree cap {cap} outside [1, {max}]")
            }
            DecoderError::RepeatedRoot => write!(f, "repeated root of the error locator"),
        }
    }
}

/// The `ℓ` syndrome polynomials of a received matrix, each reduced mod `g`.
#[derive(Debug, Clone)]
pub struct SyndromeSet {
    polys: Vec<Poly>,
}

impl SyndromeSet {
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn ell(&self) -> usize {
        self.polys.len()
    }

    /// True iff every row of the generating matrix was a codeword.
    pub fn all_zero(&self) -> bool {
        self.polys.iter().all(Poly::is_zero)
    }
}

/// Syndromes of all rows, via the code's cached `(x − α_j)^{-1} mod g`.
pub fn compute_syndromes(
    received: &FqMatrix,
    code: &GoppaCode,
) -> Result<SyndromeSet, DecoderError> {
    if received.cols() != code.n() {
        return Err(DecoderError::DimensionMismatch(alloc::format!(
            "received width {} != n = {}",
            received.cols(),
            code.n()
        )));
    }
    let polys = (0..received.rows())
        .map(|i| code.syndrome_poly(received.row(i)))
        .collect();
    Ok(SyndromeSet { polys })
}

/// Minimal-degree solution of the linearized system of key equations.
#[derive(Debug, Clone)]
pub struct KeyEquationSolution {
    /// Monic error-locator candidate.
    pub lambda: Poly,
    /// `ω_i = λ·S_i mod g`.
    pub omegas: Vec<Poly>,
    /// `deg λ` after monic normalization.
    pub degree: usize,
    /// Minimal candidate degree whose linear system had a nonzero nullspace.
    pub solved_at: usize,
    /// Nullspace dimension at that candidate degree.
    pub nullity: usize,
}

/// Dense matrix over `F_{q^m}` with just enough elimination for nullspaces.
struct ExtMat {
    rows: usize,
    cols: usize,
    data: Vec<Ext>,
}

impl ExtMat {
    fn get(&self, r: usize, c: usize) -> Ext {
        self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: Ext) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row echelon form; returns pivot columns.
    fn rref(&mut self, ctx: &FieldContext) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&r| !self.get(r, pc).is_zero()) else {
                continue;
            };
            if sel != pr {
                for c in 0..self.cols {
                    let tmp = self.get(pr, c);
                    self.set(pr, c, self.get(sel, c));
                    self.set(sel, c, tmp);
                }
            }
            let inv = ctx.ext_inv(&self.get(pr, pc)).expect("pivot nonzero");
            for c in 0..self.cols {
                let v = ctx.ext_mul(&self.get(pr, c), &inv);
                self.set(pr, c, v);
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, pc);
                if factor.is_zero() {
                    continue;
                }
                for c in 0..self.cols {
                    let t = ctx.ext_mul(&factor, &self.get(pr, c));
                    let v = ctx.ext_sub(&self.get(r, c), &t);
                    self.set(r, c, v);
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }
}

/// Solves for `(λ, ω_i)` with `deg λ` minimal and `deg λ ≤ t_cap`.
///
/// For candidate degree `t` the unknowns are the `t+1` coefficients of `λ`
/// and the equations force coefficients `x^t .. x^(deg g − 1)` of every
/// `λ·S_i mod g` to vanish (`ℓ·(deg g − t)` equations). A solution at `t`
/// remains one at `t+1` (the constraint set only shrinks), so the set of
/// solvable degrees is upward closed and the minimal one is found by
/// bisection; each probe is one Gaussian elimination.
pub fn solve_key_equations(
    syndromes: &SyndromeSet,
    g: &Poly,
    t_cap: usize,
    ctx: &FieldContext,
) -> Result<Option<KeyEquationSolution>, DecoderError> {
    if syndromes.all_zero() {
        return Err(DecoderError::ZeroSyndromes);
    }
    let dg = g.degree().expect("nonzero modulus");
    if t_cap < 1 || t_cap > dg - 1 {
        return Err(DecoderError::CapOutOfRange {
            cap: t_cap,
            max: dg - 1,
        });
    }
    let ell = syndromes.ell();

    // shift_tables[i][k] = x^k · S_i mod g.
    let mut shift_tables: Vec<Vec<Poly>> = Vec::with_capacity(ell);
    for s in syndromes.polys() {
        let mut row = Vec::with_capacity(t_cap + 1);
        let mut cur = s.rem(g, ctx).expect("nonzero modulus");
        row.push(cur.clone());
        for _ in 0..t_cap {
            cur = cur.shift_mod(g, ctx);
            row.push(cur.clone());
        }
        shift_tables.push(row);
    }

    let probe = |t: usize| -> Option<(Vec<Ext>, usize)> {
        let rows = ell * (dg - t);
        let cols = t + 1;
        let mut mat = ExtMat {
            rows,
            cols,
            data: vec![Ext::ZERO; rows * cols],
        };
        for i in 0..ell {
            for j in t..dg {
                let row = i * (dg - t) + (j - t);
                for (k, table) in shift_tables[i].iter().take(cols).enumerate() {
                    mat.set(row, k, table.coeff(j));
                }
            }
        }
        let pivots = mat.rref(ctx);
        let nullity = cols - pivots.len();
        if nullity == 0 {
            return None;
        }
        // Basis vector for the lowest-index free column.
        let free = (0..cols).find(|c| !pivots.contains(c)).unwrap();
        let mut v = vec![Ext::ZERO; cols];
        v[free] = ctx.one();
        for (pr, &pc) in pivots.iter().enumerate() {
            v[pc] = ctx.ext_neg(&mat.get(pr, free));
        }
        Some((v, nullity))
    };

    if probe(t_cap).is_none() {
        return Ok(None);
    }
    let mut lo = 1;
    let mut hi = t_cap;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if probe(mid).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let (v, nullity) = probe(lo).expect("bisection invariant");

    let lambda = Poly::from_coeffs(v).make_monic(ctx);
    let degree = lambda.degree().expect("nullspace vector is nonzero");
    let omegas: Vec<Poly> = syndromes
        .polys()
        .iter()
        .map(|s| lambda.mul_mod(s, g, ctx))
        .collect();
    Ok(Some(KeyEquationSolution {
        lambda,
        omegas,
        degree,
        solved_at: lo,
        nullity,
    }))
}

/// Stage at which decoding was abandoned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureStage {
    /// No candidate degree up to the cap admits a nonzero solution.
    NoMinimalSolution,
    /// `λ` does not split into distinct locator roots.
    RootsNotInL,
    /// Degree contract `deg ω_i < deg λ` broken, a repeated root, or a
    /// claimed error column with no nonzero value.
    DegreeMismatch,
    /// Some recovered error value lies outside `F_q`.
    ValueNotInSubfield,
    /// The corrected word is not a codeword row-wise.
    ResidualSyndromeNonzero,
    /// Nonzero syndromes with a zero search radius.
    RadiusExceeded,
}

impl FailureStage {
    pub fn as_str(&self) -> &'static str {
        match self {
            FailureStage::NoMinimalSolution => "no-minimal-solution",
            FailureStage::RootsNotInL => "roots-not-in-L",
            FailureStage::DegreeMismatch => "degree-mismatch",
            FailureStage::ValueNotInSubfield => "value-not-in-subfield",
            FailureStage::ResidualSyndromeNonzero => "residual-syndrome-nonzero",
            FailureStage::RadiusExceeded => "radius-exceeded",
        }
    }
}

impl fmt::Display for FailureStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one interleaved decoding attempt. Failures are data, not
/// errors: a declared failure is the event the channel simulator counts.
#[derive(Debug, Clone)]
pub enum DecodeOutcome {
    Decoded {
        corrected: FqMatrix,
        error: FqMatrix,
        support: Vec<usize>,
    },
    Failure(FailureStage),
}

impl DecodeOutcome {
    pub fn is_decoded(&self) -> bool {
        matches!(self, DecodeOutcome::Decoded { .. })
    }

    pub fn failure_stage(&self) -> Option<FailureStage> {
        match self {
            DecodeOutcome::Failure(s) => Some(*s),
            DecodeOutcome::Decoded { .. } => None,
        }
    }
}

/// Error values `e_ij = ω_i(α_j) / λ'(α_j)` for each claimed root, as
/// extension-field elements (row per `ω_i`, column per root). The common
/// scalar of a rescaled `(c·λ, c·ω_i)` cancels.
pub fn error_values_from_solution(
    lambda: &Poly,
    omegas: &[Poly],
    roots: &[(usize, Ext)],
    ctx: &FieldContext,
) -> Result<Vec<Vec<Ext>>, DecoderError> {
    let deriv = lambda.formal_derivative(ctx);
    let mut inv_derivs = Vec::with_capacity(roots.len());
    for (_, alpha) in roots {
        let d = deriv.eval(alpha, ctx);
        if d.is_zero() {
            return Err(DecoderError::RepeatedRoot);
        }
        inv_derivs.push(ctx.ext_inv(&d).expect("nonzero"));
    }
    Ok(omegas
        .iter()
        .map(|omega| {
            roots
                .iter()
                .zip(&inv_derivs)
                .map(|((_, alpha), inv_d)| {
                    let num = omega.eval(alpha, ctx);
                    ctx.ext_mul(&num, inv_d)
                })
                .collect()
        })
        .collect())
}

/// Decodes up to the collaborative radius `t_max = ⌊ℓ/(ℓ+1)·q/(q−1)·r⌋`.
pub fn decode(received: &FqMatrix, code: &GoppaCode) -> Result<DecodeOutcome, DecoderError> {
    let ell = received.rows().max(1) as u64;
    let t_max = max_burst_radius(ell, code.ctx().q(), code.r() as u64) as usize;
    decode_with_cap(received, code, t_max)
}

/// Decoding with an explicit search-radius cap (clamped to `t_max` and to
/// the solver's structural limit `deg g − 1`).
pub fn decode_with_cap(
    received: &FqMatrix,
    code: &GoppaCode,
    cap: usize,
) -> Result<DecodeOutcome, DecoderError> {
    let ctx = code.ctx().clone();
    let syndromes = compute_syndromes(received, code)?;
    if syndromes.all_zero() {
        return Ok(DecodeOutcome::Decoded {
            corrected: received.clone(),
            error: FqMatrix::zero(received.rows(), received.cols()),
            support: Vec::new(),
        });
    }

    let ell = received.rows() as u64;
    let t_max = max_burst_radius(ell, ctx.q(), code.r() as u64) as usize;
    let cap = cap.min(t_max).min(code.deg_g() - 1);
    if cap == 0 {
        return Ok(DecodeOutcome::Failure(FailureStage::RadiusExceeded));
    }

    let solution = match solve_key_equations(&syndromes, code.goppa_poly(), cap, &ctx)? {
        Some(s) => s,
        None => return Ok(DecodeOutcome::Failure(FailureStage::NoMinimalSolution)),
    };

    // Degree contract: deg ω_i < deg λ (Option ordering puts zero first).
    let dl = solution.lambda.degree();
    if solution.omegas.iter().any(|w| w.degree() >= dl) {
        return Ok(DecodeOutcome::Failure(FailureStage::DegreeMismatch));
    }

    // λ must split into deg λ distinct locator roots.
    let roots = solution.lambda.roots_in_set(code.locators(), &ctx);
    if roots.len() != solution.degree {
        return Ok(DecodeOutcome::Failure(FailureStage::RootsNotInL));
    }

    let values = match error_values_from_solution(&solution.lambda, &solution.omegas, &roots, &ctx)
    {
        Ok(v) => v,
        Err(DecoderError::RepeatedRoot) => {
            return Ok(DecodeOutcome::Failure(FailureStage::DegreeMismatch))
        }
        Err(e) => return Err(e),
    };

    // Values must lie in F_q, and every claimed column must be hit.
    let mut error = FqMatrix::zero(received.rows(), received.cols());
    for (col_idx, (j, _)) in roots.iter().enumerate() {
        let mut any_nonzero = false;
        for (i, row_vals) in values.iter().enumerate() {
            match ctx.subfield_symbol(&row_vals[col_idx]) {
                Some(sym) => {
                    if sym != 0 {
                        any_nonzero = true;
                    }
                    error.set(i, *j, sym);
                }
                None => return Ok(DecodeOutcome::Failure(FailureStage::ValueNotInSubfield)),
            }
        }
        if !any_nonzero {
            return Ok(DecodeOutcome::Failure(FailureStage::DegreeMismatch));
        }
    }

    let corrected = received.sub(&error, &ctx);
    for i in 0..corrected.rows() {
        if !code.is_codeword(corrected.row(i)) {
            return Ok(DecodeOutcome::Failure(
                FailureStage::ResidualSyndromeNonzero,
            ));
        }
    }

    let support: Vec<usize> = roots.iter().map(|(j, _)| *j).collect();
    Ok(DecodeOutcome::Decoded {
        corrected,
        error,
        support,
    })
}


#[cfg(test)]
mod tests {
    use super::test_support::{locator_and_evaluators_from_error, plant_burst};
    use super::*;
    use crate::goppa::test_support::{arc_ctx, bench_code_127_85};
    use crate::goppa::GoppaCodeSpec;
    use crate::rng::rng_from_seed;

    #[test]
    fn radius_arithmetic_examples() {
        assert_eq!(max_burst_radius(2, 2, 6), 8);
        assert_eq!(max_burst_radius(5, 2, 6), 10);
        assert_eq!(unique_radius(2, 6), 6);
        assert_eq!(max_burst_radius(7, 3, 84), 110);
        assert_eq!(max_burst_radius(9, 4, 222), 266);
        // ℓ=1 halves the product exactly once.
        for &(q, r) in &[(2u64, 6u64), (3, 10), (4, 9), (5, 100)] {
            assert_eq!(max_burst_radius(1, q, r), unique_radius(q, r));
        }
    }

    #[test]
    fn syndromes_of_codewords_vanish() {
        let code = bench_code_127_85(20);
        let ctx = code.ctx().clone();
        let mut rng = rng_from_seed(120);
        let msgs = FqMatrix::random(2, code.k(), &ctx, &mut rng);
        let cw = code.encode_matrix(&msgs).unwrap();
        let syn = compute_syndromes(&cw, &code).unwrap();
        assert!(syn.all_zero());
    }

    #[test]
    fn single_error_syndrome_is_one_inverse_factor() {
        let code = bench_code_127_85(21);
        let mut r = FqMatrix::zero(2, code.n());
        r.set(1, 17, 1);
        let syn = compute_syndromes(&r, &code).unwrap();
        assert!(syn.polys()[0].is_zero());
        assert_eq!(&syn.polys()[1], code.inv_factor(17));
    }

    #[test]
    fn syndromes_match_slow_oracle() {
        // Oracle: term-by-term mod_inverse without the cached factors.
        let ctx = arc_ctx(3, 1, 3, 22);
        let mut rng = rng_from_seed(122);
        let spec = GoppaCodeSpec::random(ctx.clone(), 2, 25, &mut rng, true).unwrap();
        let code = crate::goppa::GoppaCode::build(spec).unwrap();
        for _ in 0..10 {
            let r = FqMatrix::random(3, code.n(), &ctx, &mut rng);
            let syn = compute_syndromes(&r, &code).unwrap();
            for i in 0..3 {
                let mut slow = Poly::zero();
                for (j, alpha) in code.locators().iter().enumerate() {
                    let c = r.get(i, j);
                    if c == 0 {
                        continue;
                    }
                    let invf = Poly::linear(&ctx, alpha)
                        .mod_inverse(code.goppa_poly(), &ctx)
                        .unwrap();
                    slow = slow.add(&invf.scale(&ctx.embed(c), &ctx), &ctx);
                }
                assert_eq!(&slow, &syn.polys()[i]);
            }
        }
    }

    #[test]
    fn solver_recovers_planted_locator_and_evaluators() {
        let code = bench_code_127_85(23);
        let ctx = code.ctx().clone();
        let mut rng = rng_from_seed(123);

        // Up to the unique radius the minimal solution is exactly the
        // planted locator/evaluators, with a one-dimensional nullspace.
        for trial in 0..20 {
            let e = plant_burst(2, code.n(), 6, &ctx, &mut rng);
            let syn = compute_syndromes(&e, &code).unwrap();
            let sol = solve_key_equations(&syn, code.goppa_poly(), 8, &ctx)
                .unwrap()
                .unwrap_or_else(|| panic!("no solution on trial {trial}"));
            let (lambda_true, omegas_true) = locator_and_evaluators_from_error(&e, &code);
            assert_eq!(sol.lambda, lambda_true, "locator mismatch on trial {trial}");
            for (w, wt) in sol.omegas.iter().zip(&omegas_true) {
                assert_eq!(w, wt);
            }
            assert_eq!((sol.degree, sol.solved_at, sol.nullity), (6, 6, 1));
            // Minimality: one degree lower has only the zero solution.
            assert!(solve_key_equations(&syn, code.goppa_poly(), 5, &ctx)
                .unwrap()
                .is_none());
        }

        // At the full radius t_max = 8 recovery is probabilistic: spurious
        // lower-degree solutions exist for a fraction of patterns. Whenever
        // the minimal degree reaches 8 with a 1-dim nullspace, the solution
        // must be the planted one.
        let mut exact = 0;
        for _ in 0..30 {
            let e = plant_burst(2, code.n(), 8, &ctx, &mut rng);
            let syn = compute_syndromes(&e, &code).unwrap();
            let sol = solve_key_equations(&syn, code.goppa_poly(), 8, &ctx)
                .unwrap()
                .expect("at t_max the system always has a nonzero nullspace");
            if sol.solved_at == 8 && sol.nullity == 1 {
                let (lambda_true, omegas_true) = locator_and_evaluators_from_error(&e, &code);
                assert_eq!(sol.lambda, lambda_true);
                for (w, wt) in sol.omegas.iter().zip(&omegas_true) {
                    assert_eq!(w, wt);
                }
                assert!(solve_key_equations(&syn, code.goppa_poly(), 7, &ctx)
                    .unwrap()
                    .is_none());
                exact += 1;
            }
        }
        // Expected success rate is roughly 1 − 0.267.
        assert!(exact >= 15, "only {exact}/30 weight-8 patterns recovered");
    }

    #[test]
    fn single_row_solution_is_unique_up_to_scalar_within_radius() {
        let code = bench_code_127_85(24);
        let ctx = code.ctx().clone();
        let mut rng = rng_from_seed(124);
        for t in 1..=unique_radius(2, 6) as usize {
            let e = plant_burst(1, code.n(), t, &ctx, &mut rng);
            let syn = compute_syndromes(&e, &code).unwrap();
            let sol = solve_key_equations(&syn, code.goppa_poly(), 6, &ctx)
                .unwrap()
                .unwrap();
            let (lambda_true, omegas_true) = locator_and_evaluators_from_error(&e, &code);
            assert_eq!(sol.lambda, lambda_true);
            assert_eq!(sol.omegas[0], omegas_true[0]);
            assert_eq!(sol.nullity, 1);
        }
    }

    #[test]
    fn solver_rejects_zero_syndromes_and_bad_caps() {
        let code = bench_code_127_85(25);
        let ctx = code.ctx().clone();
        let zero = FqMatrix::zero(2, code.n());
        let syn = compute_syndromes(&zero, &code).unwrap();
        assert!(matches!(
            solve_key_equations(&syn, code.goppa_poly(), 4, &ctx),
            Err(DecoderError::ZeroSyndromes)
        ));
        let mut r = FqMatrix::zero(2, code.n());
        r.set(0, 3, 1);
        let syn = compute_syndromes(&r, &code).unwrap();
        assert!(matches!(
            solve_key_equations(&syn, code.goppa_poly(), 0, &ctx),
            Err(DecoderError::CapOutOfRange { .. })
        ));
        assert!(matches!(
            solve_key_equations(&syn, code.goppa_poly(), code.deg_g(), &ctx),
            Err(DecoderError::CapOutOfRange { .. })
        ));
    }

    #[test]
    fn decode_codeword_matrix_gives_zero_error() {
        let code = bench_code_127_85(26);
        let ctx = code.ctx().clone();
        let mut rng = rng_from_seed(126);
        let msgs = FqMatrix::random(2, code.k(), &ctx, &mut rng);
        let cw = code.encode_matrix(&msgs).unwrap();
        match decode(&cw, &code).unwrap() {
            DecodeOutcome::Decoded {
                corrected,
                error,
                support,
            } => {
                assert_eq!(corrected, cw);
                assert!(error.is_zero());
                assert!(support.is_empty());
            }
            DecodeOutcome::Failure(s) => panic!("unexpected failure: {s}"),
        }
    }

    #[test]
    fn decode_recovers_weight_six_bursts_every_time() {
        let code = bench_code_127_85(27);
        let ctx = code.ctx().clone();
        let mut rng = rng_from_seed(127);
        for _ in 0..50 {
            let msgs = FqMatrix::random(2, code.k(), &ctx, &mut rng);
            let cw = code.encode_matrix(&msgs).unwrap();
            let e = plant_burst(2, code.n(), 6, &ctx, &mut rng);
            let received = cw.add(&e, &ctx);
            match decode(&received, &code).unwrap() {
                DecodeOutcome::Decoded {
                    corrected, error, ..
                } => {
                    assert_eq!(error, e);
                    assert_eq!(corrected, cw);
                }
                DecodeOutcome::Failure(s) => panic!("failure at weight 6: {s}"),
            }
        }
    }

    #[test]
    fn decode_always_fails_beyond_the_radius() {
        // Weight 9 exceeds t_max = 8 for ℓ = 2; recovering the planted error
        // is impossible because the solver cannot reach degree 9.
        let code = bench_code_127_85(28);
        let ctx = code.ctx().clone();
        let mut rng = rng_from_seed(128);
        for _ in 0..30 {
            let e = plant_burst(2, code.n(), 9, &ctx, &mut rng);
            match decode(&e, &code).unwrap() {
                DecodeOutcome::Decoded { error, .. } => {
                    assert_ne!(error, e, "cannot recover more errors than t_max")
                }
                DecodeOutcome::Failure(_) => {}
            }
        }
    }

    #[test]
    fn decode_success_respects_degree_contracts() {
        let code = bench_code_127_85(29);
        let ctx = code.ctx().clone();
        let mut rng = rng_from_seed(129);
        let t_max = max_burst_radius(2, 2, 6) as usize;
        for t in 1..=t_max {
            let e = plant_burst(2, code.n(), t, &ctx, &mut rng);
            if let DecodeOutcome::Decoded { error, support, .. } = decode(&e, &code).unwrap() {
                assert_eq!(error.burst_weight(), support.len());
                assert!(support.len() <= t_max);
            }
        }
    }

    #[test]
    fn error_values_recover_planted_values() {
        // Weight-5 plant on a [31, k] binary toy code with ℓ = 3.
        let ctx = arc_ctx(2, 1, 5, 30);
        let mut rng = rng_from_seed(130);
        let spec = GoppaCodeSpec::random(ctx.clone(), 2, 31, &mut rng, true).unwrap();
        let code = crate::goppa::GoppaCode::build(spec).unwrap();
        let e = plant_burst(3, code.n(), 5, &ctx, &mut rng);
        let (lambda, omegas) = locator_and_evaluators_from_error(&e, &code);
        let roots = lambda.roots_in_set(code.locators(), &ctx);
        assert_eq!(roots.len(), 5);
        let values = error_values_from_solution(&lambda, &omegas, &roots, &ctx).unwrap();
        for (i, row) in values.iter().enumerate() {
            for (c, (j, _)) in roots.iter().enumerate() {
                assert_eq!(ctx.subfield_symbol(&row[c]).unwrap(), e.get(i, *j));
            }
        }

        // A common scalar on (λ, ω_i) cancels in the value formula.
        let c = ctx.index_to_ext(13);
        let lambda_s = lambda.scale(&c, &ctx);
        let omegas_s: Vec<Poly> = omegas.iter().map(|w| w.scale(&c, &ctx)).collect();
        let values_s = error_values_from_solution(&lambda_s, &omegas_s, &roots, &ctx).unwrap();
        assert_eq!(values, values_s);

        // Single error, single row: λ = x − α_j, ω = e.
        let mut single = FqMatrix::zero(1, code.n());
        single.set(0, 11, 1);
        let (l1, w1) = locator_and_evaluators_from_error(&single, &code);
        let r1 = l1.roots_in_set(code.locators(), &ctx);
        let v1 = error_values_from_solution(&l1, &w1, &r1, &ctx).unwrap();
        assert_eq!(ctx.subfield_symbol(&v1[0][0]).unwrap(), 1);
    }

    #[test]
    fn repeated_root_is_reported() {
        let ctx = arc_ctx(2, 1, 4, 31);
        let locs = ctx.enumerate_elements();
        // λ = (x − α)² has λ' = 0 at α in characteristic 2.
        let lin = Poly::linear(&ctx, &locs[3]);
        let lambda = lin.mul(&lin, &ctx);
        let omega = Poly::one(&ctx);
        let roots = alloc::vec![(3usize, locs[3])];
        assert_eq!(
            error_values_from_solution(&lambda, &[omega], &roots, &ctx),
            Err(DecoderError::RepeatedRoot)
        );
    }

    #[test]
    fn zero_cap_reports_radius_exceeded() {
        let code = bench_code_127_85(32);
        let mut r = FqMatrix::zero(2, code.n());
        r.set(0, 5, 1);
        match decode_with_cap(&r, &code, 0).unwrap() {
            DecodeOutcome::Failure(FailureStage::RadiusExceeded) => {}
            other => panic!("expected radius-exceeded, got {other:?}"),
        }
    }
}
