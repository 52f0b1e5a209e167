//! Wild Goppa codes over `F_q` with locators in `F_{q^m}`.
//!
//! A code is specified by a locator set `L` of distinct field elements and a
//! monic square-free polynomial `b`; the decoder-facing Goppa polynomial is
//! always `g = b^q`, which describes the same code as `b^(q-1)` but admits
//! the larger key-equation modulus. Membership is the congruence
//! `Σ c_i/(x − α_i) ≡ 0 (mod g)`; the alternant parity check
//! `H[i][j] = α_j^i / g(α_j)` spans the same constraints and is expanded
//! over `F_q` to derive the true dimension and a generator matrix.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::field::{Ext, FieldContext, FieldError, Symbol};
use crate::matrix::{nullspace_from_rref, FqMatrix};
use crate::poly::{Poly, PolyError};
use crate::rng::sample_distinct;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    Field(FieldError),
    Poly(PolyError),
    /// Violation of `r·m ≤ n ≤ q^m`.
    LengthOutOfRange {
        n: usize,
        min: usize,
        max: usize,
    },
    DuplicateLocators,
    /// Some locator is a root of the Goppa polynomial.
    RootLocator,
    NotSquareFree,
    NotMonic,
    ZeroDegree,
    DimensionMismatch(String),
    /// Interleaving order must divide the extension degree.
    InterleavingOrder {
        ell: usize,
        m: usize,
    },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::Field(e) => write!(f, "field error: {e}"),
            CodeError::Poly(e) => write!(f, "polynomial error: {e}"),
            CodeError::LengthOutOfRange { n, min, max } => {
                write!(f, "code length {n} outside [{min}, {max}]")
            }
            CodeError::DuplicateLocators => write!(f, "locators are not distinct"),
            CodeError::RootLocator => write!(f, "a locator is a root of the Goppa polynomial"),
            CodeError::NotSquareFree => write!(f, "polynomial b must be square-free"),
            CodeError::NotMonic => write!(f, "polynomial b must be monic"),
            CodeError::ZeroDegree => write!(f, "polynomial b must be nonconstant"),
            CodeError::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            CodeError::InterleavingOrder { ell, m } => {
                write!(f, "interleaving order {ell} does not divide m = {m}")
            }
        }
    }
}

impl From<FieldError> for CodeError {
    fn from(e: FieldError) -> Self {
        CodeError::Field(e)
    }
}

impl From<PolyError> for CodeError {
    fn from(e: PolyError) -> Self {
        CodeError::Poly(e)
    }
}

/// Validated parameters of a wild Goppa code: locators and the square-free
/// polynomial `b`. Derived quantities: `g = b^q`, `r = (q−1)·deg b`.
#[derive(Clone)]
pub struct GoppaCodeSpec {
    ctx: Arc<FieldContext>,
    locators: Vec<Ext>,
    b: Poly,
}

impl GoppaCodeSpec {
    pub fn new(ctx: Arc<FieldContext>, locators: Vec<Ext>, b: Poly) -> Result<Self, CodeError> {
        let deg_b = b.degree().ok_or(CodeError::ZeroDegree)?;
        if deg_b == 0 {
            return Err(CodeError::ZeroDegree);
        }
        if !b.is_monic(&ctx) {
            return Err(CodeError::NotMonic);
        }
        if !b.is_square_free(&ctx)? {
            return Err(CodeError::NotSquareFree);
        }
        let n = locators.len();
        let r = (ctx.q() as usize - 1) * deg_b;
        let min = r * ctx.m();
        let max = ctx.order() as usize;
        if n < min || n > max {
            return Err(CodeError::LengthOutOfRange { n, min, max });
        }
        let mut seen: Vec<u64> = locators.iter().map(|a| ctx.ext_to_index(a)).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(CodeError::DuplicateLocators);
        }
        if locators.iter().any(|a| b.eval(a, &ctx).is_zero()) {
            return Err(CodeError::RootLocator);
        }
        Ok(GoppaCodeSpec { ctx, locators, b })
    }

    /// Samples `b` (irreducible by default, square-free otherwise) and then
    /// `n` distinct non-roots of `b` as locators, in canonical index order.
    pub fn random(
        ctx: Arc<FieldContext>,
        deg_b: usize,
        n: usize,
        rng: &mut impl RngCore,
        irreducible: bool,
    ) -> Result<Self, CodeError> {
        let b = if irreducible {
            Poly::random_monic_irreducible(deg_b, &ctx, rng)?
        } else {
            Poly::random_monic_square_free(deg_b, &ctx, rng)?
        };
        let pool: Vec<Ext> = ctx
            .enumerate_elements()
            .into_iter()
            .filter(|a| !b.eval(a, &ctx).is_zero())
            .collect();
        if pool.len() < n {
            return Err(CodeError::LengthOutOfRange {
                n,
                min: 0,
                max: pool.len(),
            });
        }
        let picked = sample_distinct(rng, pool.len(), n);
        let locators: Vec<Ext> = picked.into_iter().map(|i| pool[i]).collect();
        GoppaCodeSpec::new(ctx, locators, b)
    }

    pub fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }
    pub fn locators(&self) -> &[Ext] {
        &self.locators
    }
    pub fn b(&self) -> &Poly {
        &self.b
    }
    pub fn n(&self) -> usize {
        self.locators.len()
    }
    pub fn deg_b(&self) -> usize {
        self.b.degree().unwrap()
    }
    /// `r = (q−1)·deg b`, the degree of `b^(q−1)`.
    pub fn r(&self) -> usize {
        (self.ctx.q() as usize - 1) * self.deg_b()
    }
    /// Canonical enumeration indices of the locators (for serialization).
    pub fn locator_indices(&self) -> Vec<u64> {
        self.locators
            .iter()
            .map(|a| self.ctx.ext_to_index(a))
            .collect()
    }
}

/// A built wild Goppa code: parity checks, generator, dimension, and the
/// per-locator inverse factors used by syndrome computation.
pub struct GoppaCode {
    spec: GoppaCodeSpec,
    g: Poly,
    /// `(x − α_j)^{-1} mod g`, per locator.
    inv_factors: Vec<Poly>,
    /// Row-reduced parity check over `F_q` (rank rows).
    h_reduced: FqMatrix,
    /// Generator matrix, `k × n` full rank.
    gen: FqMatrix,
    k: usize,
}

impl GoppaCode {
    /// Builds the code with the decoder-facing polynomial `g = b^q`.
    pub fn build(spec: GoppaCodeSpec) -> Result<GoppaCode, CodeError> {
        let q = spec.ctx.q();
        Self::build_with_exponent(spec, q)
    }

    /// Builds `Γ(L, b^e)`; exponents `q` and `q−1` describe the same code.
    pub fn build_with_exponent(spec: GoppaCodeSpec, exponent: u64) -> Result<GoppaCode, CodeError> {
        let ctx = spec.ctx.clone();
        let g = spec.b.pow(exponent, &ctx);
        let dg = g.degree().unwrap();
        let n = spec.n();

        let mut inv_factors = Vec::with_capacity(n);
        for alpha in &spec.locators {
            let lin = Poly::linear(&ctx, alpha);
            // b(α) ≠ 0 was validated, so gcd(x − α, g) = 1.
            inv_factors.push(
                lin.mod_inverse(&g, &ctx)
                    .map_err(|_| CodeError::RootLocator)?,
            );
        }

        // Alternant parity check H[i][j] = α_j^i / g(α_j) over F_{q^m},
        // expanded into m rows over F_q per extension row.
        let m = ctx.m();
        let mut h_exp = FqMatrix::zero(dg * m, n);
        for (j, alpha) in spec.locators.iter().enumerate() {
            let ginv = ctx
                .ext_inv(&g.eval(alpha, &ctx))
                .expect("g(α) nonzero by construction");
            let mut entry = ginv;
            for i in 0..dg {
                for mu in 0..m {
                    h_exp.set(i * m + mu, j, entry.coeff(mu));
                }
                entry = ctx.ext_mul(&entry, alpha);
            }
        }

        let mut hw = h_exp;
        let pivots = hw.rref(&ctx);
        let rank = pivots.len();
        let gen = nullspace_from_rref(&hw, &pivots, &ctx);
        let k = n - rank;
        debug_assert_eq!(gen.rows(), k);
        let mut h_reduced = FqMatrix::zero(rank, n);
        for r in 0..rank {
            for c in 0..n {
                h_reduced.set(r, c, hw.get(r, c));
            }
        }

        Ok(GoppaCode {
            spec,
            g,
            inv_factors,
            h_reduced,
            gen,
            k,
        })
    }

    pub fn spec(&self) -> &GoppaCodeSpec {
        &self.spec
    }
    pub fn ctx(&self) -> &Arc<FieldContext> {
        self.spec.ctx()
    }
    pub fn locators(&self) -> &[Ext] {
        self.spec.locators()
    }
    pub fn n(&self) -> usize {
        self.spec.n()
    }
    pub fn k(&self) -> usize {
        self.k
    }
    /// `r = (q−1)·deg b` regardless of the exponent the code was built with.
    pub fn r(&self) -> usize {
        self.spec.r()
    }
    pub fn goppa_poly(&self) -> &Poly {
        &self.g
    }
    pub fn deg_g(&self) -> usize {
        self.g.degree().unwrap()
    }
    /// Wild designed distance `⌊q/(q−1)·r⌋ + 1 = q·deg b + 1`.
    pub fn designed_distance(&self) -> usize {
        let q = self.ctx().q() as usize;
        q * self.spec.deg_b() + 1
    }
    pub fn generator(&self) -> &FqMatrix {
        &self.gen
    }
    pub fn parity_check_reduced(&self) -> &FqMatrix {
        &self.h_reduced
    }
    pub fn inv_factor(&self, j: usize) -> &Poly {
        &self.inv_factors[j]
    }

    /// `message · G` for a length-`k` message over `F_q`.
    pub fn encode(&self, message: &[Symbol]) -> Result<Vec<Symbol>, CodeError> {
        if message.len() != self.k {
            return Err(CodeError::DimensionMismatch(alloc::format!(
                "message length {} != k = {}",
                message.len(),
                self.k
            )));
        }
        let q = self.ctx().q();
        if let Some(&bad) = message.iter().find(|&&s| s as u64 >= q) {
            return Err(CodeError::Field(FieldError::SymbolOutOfRange {
                symbol: bad as u64,
                q,
            }));
        }
        Ok(self.gen.vec_mul(message, self.ctx()))
    }

    /// Row-wise encoding of an `ℓ × k` message matrix.
    pub fn encode_matrix(&self, messages: &FqMatrix) -> Result<FqMatrix, CodeError> {
        if messages.cols() != self.k {
            return Err(CodeError::DimensionMismatch(alloc::format!(
                "message width {} != k = {}",
                messages.cols(),
                self.k
            )));
        }
        Ok(messages.mul(&self.gen, self.ctx()))
    }

    /// Syndrome polynomial `Σ_j c_j·(x − α_j)^{-1} mod g` of one row.
    pub fn syndrome_poly(&self, word: &[Symbol]) -> Poly {
        assert_eq!(word.len(), self.n(), "word length");
        let ctx = self.ctx();
        let dg = self.deg_g();
        let mut acc = vec![Ext::ZERO; dg];
        for (j, &c) in word.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (i, co) in self.inv_factors[j].coeffs().iter().enumerate() {
                let t = ctx.ext_scale(co, c);
                acc[i] = ctx.ext_add(&acc[i], &t);
            }
        }
        Poly::from_coeffs(acc)
    }

    /// Membership by direct evaluation of the defining congruence.
    pub fn is_codeword(&self, word: &[Symbol]) -> bool {
        self.syndrome_poly(word).is_zero()
    }

    /// Membership through the expanded parity check (cross-check route).
    pub fn is_codeword_parity(&self, word: &[Symbol]) -> bool {
        let ctx = self.ctx();
        for r in 0..self.h_reduced.rows() {
            let mut acc: Symbol = 0;
            for (j, &c) in word.iter().enumerate() {
                if c != 0 {
                    acc = ctx.sym_add(acc, ctx.sym_mul(self.h_reduced.get(r, j), c));
                }
            }
            if acc != 0 {
                return false;
            }
        }
        true
    }
}

/// Checks `Γ(L, b^(q−1)) = Γ(L, b^q)` by comparing dimensions and verifying
/// mutual membership of the generator rows in both directions.
pub fn wild_equality_check(spec: &GoppaCodeSpec) -> Result<bool, CodeError> {
    let q = spec.ctx().q();
    let code_q = GoppaCode::build_with_exponent(spec.clone(), q)?;
    let code_q1 = GoppaCode::build_with_exponent(spec.clone(), q - 1)?;
    if code_q.k() != code_q1.k() {
        return Ok(false);
    }
    for r in 0..code_q.k() {
        if !code_q1.is_codeword(code_q.generator().row(r)) {
            return Ok(false);
        }
    }
    for r in 0..code_q1.k() {
        if !code_q.is_codeword(code_q1.generator().row(r)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonVerdict {
    InterleavingPreferable,
    ExtensionFieldPreferable,
    Equal,
}

impl ComparisonVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            ComparisonVerdict::InterleavingPreferable => "interleaving preferable",
            ComparisonVerdict::ExtensionFieldPreferable => "extension field preferable",
            ComparisonVerdict::Equal => "equal radii",
        }
    }
}

/// Rate/radius comparison between an `ℓ`-interleaved Goppa code over `F_q`
/// and a rate-matched Goppa code over `F_{q^ℓ}` with the same codeword size.
#[derive(Debug, Clone, PartialEq)]
pub struct InterleavingComparison {
    pub q: u64,
    pub m: usize,
    pub ell: usize,
    /// Goppa polynomial degree of the interleaved code.
    pub r_interleaved: usize,
    /// Matched Goppa polynomial degree over the extension field: `ℓ·r`.
    pub r_extension: usize,
    pub rate_interleaved: f64,
    pub rate_extension: f64,
    pub d_interleaved: usize,
    pub d_extension: usize,
    /// Collaborative radius `⌊ℓ/(ℓ+1)·(d_IΓ − 1)⌋`.
    pub t_interleaved: usize,
    /// Unique radius `⌊(d_Γ − 1)/2⌋` of the extension-field code.
    pub t_extension: usize,
    pub verdict: ComparisonVerdict,
}

/// `r` here is the degree of the interleaved code's Goppa polynomial.
/// Matching rates forces `r_Γ = ℓ·r` on the extension-field side. The binary
/// square-free case gets the doubled distance `2r + 1`, which is what makes
/// `ℓ = 2` the one configuration where interleaving wins the radius race.
pub fn compare_interleaving_vs_extension(
    q: u64,
    m: usize,
    ell: usize,
    r: usize,
    n: usize,
) -> Result<InterleavingComparison, CodeError> {
    if ell == 0 || m == 0 || r == 0 || n == 0 || q < 2 {
        return Err(CodeError::ZeroDegree);
    }
    if !m.is_multiple_of(ell) {
        return Err(CodeError::InterleavingOrder { ell, m });
    }
    let d_int = if q == 2 { 2 * r + 1 } else { r + 1 };
    let r_ext = ell * r;
    let d_ext = r_ext + 1;
    let t_int = ell * (d_int - 1) / (ell + 1);
    let t_ext = (d_ext - 1) / 2;
    let verdict = match t_int.cmp(&t_ext) {
        core::cmp::Ordering::Greater => ComparisonVerdict::InterleavingPreferable,
        core::cmp::Ordering::Less => ComparisonVerdict::ExtensionFieldPreferable,
        core::cmp::Ordering::Equal => ComparisonVerdict::Equal,
    };
    Ok(InterleavingComparison {
        q,
        m,
        ell,
        r_interleaved: r,
        r_extension: r_ext,
        rate_interleaved: (n as f64 - (r * m) as f64) / n as f64,
        rate_extension: (n as f64 - (r_ext * m / ell) as f64) / n as f64,
        d_interleaved: d_int,
        d_extension: d_ext,
        t_interleaved: t_int,
        t_extension: t_ext,
        verdict,
    })
}
