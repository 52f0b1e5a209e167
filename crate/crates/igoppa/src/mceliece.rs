//! Interleaved McEliece over wild Goppa codes, with structured error
//! matrices.
//!
//! The public key is an obfuscated generator `G_pub = S·G·P` together with
//! the burst budget `t_pub` and the interleaving order `ℓ`. Encryption is
//! `Y = M·G_pub + E` where the nonzero columns of `E` form a generator
//! matrix of an `[t_pub, ℓ]_q` code whose exact minimum distance exceeds
//! the unique decoding radius; that distance floor is what defeats
//! row-combination attacks on the ciphertext. Decryption strips the
//! permutation, runs the collaborative decoder and unwinds the scrambler.
//!
//! This is a reference implementation: seedable, deterministic, and with
//! no constant-time or side-channel hardening.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::decoder::{
    decode, max_burst_radius, unique_radius, DecodeOutcome, DecoderError, FailureStage,
};
use crate::field::{FieldContext, FieldError, Symbol};
use crate::goppa::{CodeError, GoppaCode, GoppaCodeSpec};
use crate::matrix::{invert_permutation, FqMatrix};
use crate::poly::PolyError;
use crate::rng::{random_permutation, rng_from_seed, sample_distinct, splitmix64};

/// Enumeration budget for exact minimum-distance verification.
pub const DISTANCE_ENUM_BUDGET: u64 = 1 << 20;
/// Rejection budget for error-code sampling.
pub const SAMPLING_ATTEMPT_BUDGET: u64 = 500;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CryptoError {
    Field(FieldError),
    Code(CodeError),
    Poly(PolyError),
    Decoder(DecoderError),
    /// The interleaved decoder gave up; honest ciphertexts hit this only
    /// with the small probability tracked by the channel simulator.
    DecryptFailed(FailureStage),
    /// No `[t_pub, ℓ, > d_min]_q` code can exist.
    GriesmerInfeasible {
        q: u64,
        ell: usize,
        d_required: u64,
        length_needed: u64,
        length_available: u64,
    },
    SamplingExhausted {
        attempts: u64,
    },
    DistanceBudgetExceeded {
        words: u64,
    },
    UnknownPreset {
        security_bits: u32,
        q: u64,
    },
    NotAPrimePower(u64),
    DimensionMismatch(String),
}

impl fmt::Display for CryptoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CryptoError::Field(e) => write!(f, "field error: {e}"),
            CryptoError::Code(e) => write!(f, "code error: {e}"),
            CryptoError::Poly(e) => write!(f, "polynomial error: {e}"),
            CryptoError::Decoder(e) => write!(f, "decoder error: {e}"),
            CryptoError::DecryptFailed(stage) => write!(f, "decryption failed at stage {stage}"),
            CryptoError::GriesmerInfeasible {
                q,
                ell,
                d_required,
                length_needed,
                length_available,
            } => write!(
                f,
                "no [{length_available},{ell},{d_required}]_{q} code exists: length bound {length_needed}"
            ),
            CryptoError::SamplingExhausted { attempts } => {
                write!(f, "error-code sampling exhausted after {attempts} attempts")
            }
            CryptoError::DistanceBudgetExceeded { words } => {
                write!(f, "exact distance check needs {words} words, over budget")
            }
            CryptoError::UnknownPreset { security_bits, q } => {
                write!(f, "no preset for security {security_bits} and q = {q}")
            }
            CryptoError::NotAPrimePower(q) => write!(f, "{q} is not a prime power"),
            CryptoError::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
        }
    }
}

impl From<FieldError> for CryptoError {
    fn from(e: FieldError) -> Self {
        CryptoError::Field(e)
    }
}
impl From<CodeError> for CryptoError {
    fn from(e: CodeError) -> Self {
        CryptoError::Code(e)
    }
}
impl From<PolyError> for CryptoError {
    fn from(e: PolyError) -> Self {
        CryptoError::Poly(e)
    }
}
impl From<DecoderError> for CryptoError {
    fn from(e: DecoderError) -> Self {
        CryptoError::Decoder(e)
    }
}

/// Splits a prime power `q = p^s`.
pub fn prime_power_split(q: u64) -> Result<(u64, usize), CryptoError> {
    if q < 2 {
        return Err(CryptoError::NotAPrimePower(q));
    }
    let mut p = 2u64;
    loop {
        if p * p > q {
            // q itself is prime.
            return Ok((q, 1));
        }
        if q.is_multiple_of(p) {
            let mut s = 0usize;
            let mut v = q;
            while v.is_multiple_of(p) {
                v /= p;
                s += 1;
            }
            if v == 1 {
                return Ok((p, s));
            }
            return Err(CryptoError::NotAPrimePower(q));
        }
        p += 1;
    }
}

/// Public key: obfuscated generator plus the decoding budget. Carries `r`
/// so the sender can compute the error-code distance floor.
pub struct PublicKey {
    ctx_q: Arc<FieldContext>,
    g_pub: FqMatrix,
    t_pub: usize,
    ell: usize,
    r: usize,
}

impl PublicKey {
    pub fn new(
        q: u64,
        g_pub: FqMatrix,
        t_pub: usize,
        ell: usize,
        r: usize,
    ) -> Result<PublicKey, CryptoError> {
        let (p, s) = prime_power_split(q)?;
        let ctx_q = Arc::new(FieldContext::new(p, s, 1, 0)?);
        Ok(PublicKey {
            ctx_q,
            g_pub,
            t_pub,
            ell,
            r,
        })
    }

    pub fn q(&self) -> u64 {
        self.ctx_q.q()
    }
    pub fn k(&self) -> usize {
        self.g_pub.rows()
    }
    pub fn n(&self) -> usize {
        self.g_pub.cols()
    }
    pub fn t_pub(&self) -> usize {
        self.t_pub
    }
    pub fn ell(&self) -> usize {
        self.ell
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn generator(&self) -> &FqMatrix {
        &self.g_pub
    }
    /// `F_q`-only context used for encryption arithmetic.
    pub fn ctx_q(&self) -> &Arc<FieldContext> {
        &self.ctx_q
    }
}

/// Private key: scrambler, permutation, the underlying code, and the
/// precomputed message-recovery data (information set of `G`).
pub struct PrivateKey {
    code: GoppaCode,
    scrambler: FqMatrix,
    scrambler_inv: FqMatrix,
    perm: Vec<usize>,
    perm_inv: Vec<usize>,
    info_set: Vec<usize>,
    info_inv: FqMatrix,
    t_pub: usize,
    ell: usize,
}

impl PrivateKey {
    /// Assembles a private key from its parts, recomputing all derived data.
    pub fn assemble(
        code: GoppaCode,
        scrambler: FqMatrix,
        perm: Vec<usize>,
        ell: usize,
    ) -> Result<PrivateKey, CryptoError> {
        let k = code.k();
        if scrambler.rows() != k || scrambler.cols() != k {
            return Err(CryptoError::DimensionMismatch(alloc::format!(
                "scrambler is {}x{}, expected {k}x{k}",
                scrambler.rows(),
                scrambler.cols()
            )));
        }
        if perm.len() != code.n() {
            return Err(CryptoError::DimensionMismatch(alloc::format!(
                "permutation length {} != n = {}",
                perm.len(),
                code.n()
            )));
        }
        let ctx = code.ctx().clone();
        let scrambler_inv = scrambler
            .inverse(&ctx)
            .ok_or_else(|| CryptoError::DimensionMismatch("scrambler is singular".into()))?;
        let perm_inv = invert_permutation(&perm);

        // Information set: pivot columns of G give an invertible k×k block.
        let mut work = code.generator().clone();
        let info_set = work.rref(&ctx);
        debug_assert_eq!(info_set.len(), k);
        let mut block = FqMatrix::zero(k, k);
        for r in 0..k {
            for (c, &col) in info_set.iter().enumerate() {
                block.set(r, c, code.generator().get(r, col));
            }
        }
        let info_inv = block
            .inverse(&ctx)
            .expect("information-set block is invertible by construction");

        let t_pub = max_burst_radius(ell as u64, ctx.q(), code.r() as u64) as usize;
        Ok(PrivateKey {
            code,
            scrambler,
            scrambler_inv,
            perm,
            perm_inv,
            info_set,
            info_inv,
            t_pub,
            ell,
        })
    }

    pub fn code(&self) -> &GoppaCode {
        &self.code
    }
    pub fn scrambler(&self) -> &FqMatrix {
        &self.scrambler
    }
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }
    pub fn t_pub(&self) -> usize {
        self.t_pub
    }
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Recomputes the matching public key.
    pub fn derive_public(&self) -> Result<PublicKey, CryptoError> {
        let ctx = self.code.ctx();
        let g_pub = self
            .scrambler
            .mul(self.code.generator(), ctx)
            .permute_columns(&self.perm, ctx);
        PublicKey::new(ctx.q(), g_pub, self.t_pub, self.ell, self.code.r())
    }

    /// Solves `m·G = c` for a codeword row via the stored information set.
    fn message_from_codeword(&self, codeword: &[Symbol]) -> Vec<Symbol> {
        let ctx = self.code.ctx();
        let sub: Vec<Symbol> = self.info_set.iter().map(|&c| codeword[c]).collect();
        self.info_inv.vec_mul(&sub, ctx)
    }
}

/// Ciphertext: an `ℓ × n` symbol matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ciphertext {
    pub matrix: FqMatrix,
}

/// A sampled error-code generator with its exactly-verified distance.
#[derive(Debug, Clone)]
pub struct ErrorCodeSample {
    /// `ℓ × t_pub`, full rank, no zero column.
    pub generator: FqMatrix,
    /// Exact minimum distance (exhaustively verified when within budget).
    pub min_distance: usize,
}

/// How the error-code generator is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCodeStrategy {
    /// MDS for `q ≥ t_pub`, rejection sampling otherwise.
    Auto,
    RandomRejection,
    /// Generalized Reed-Solomon rows: requires `q ≥ t_pub`, gives
    /// `d = t_pub − ℓ + 1` by construction.
    Mds,
}

/// Distance floor from the repair condition: `d_E` must strictly exceed
/// `⌊q/(q−1)·r/2⌋`, the unique decoding radius.
pub fn d_e_threshold(q: u64, r: u64) -> u64 {
    unique_radius(q, r)
}

/// Griesmer length bound `Σ_{i<ell} ⌈d/q^i⌉` for an `[n, ell, d]_q` code.
pub fn griesmer_sum(q: u64, ell: usize, d: u64) -> u64 {
    let mut sum = 0u64;
    let mut denom = 1u64;
    for _ in 0..ell {
        sum += d.div_ceil(denom);
        denom = denom.saturating_mul(q);
    }
    sum
}

/// Exact minimum distance of the code generated by `gen`, by enumerating
/// all `q^ℓ − 1` nonzero message combinations.
pub fn min_distance_exhaustive(gen: &FqMatrix, ctx: &FieldContext) -> Result<usize, CryptoError> {
    scan_min_weight(gen, ctx, None)?.ok_or(CryptoError::DimensionMismatch(
        "zero-dimensional code".into(),
    ))
}

/// Minimum weight scan with optional early abort: returns `None` as soon as
/// a weight `≤ abort_at` is seen. Enumeration walks the base-q message
/// counter and updates the running codeword by `(new − old)·row` per digit
/// change, so the cost per message is `O(t_pub)`.
fn scan_min_weight(
    gen: &FqMatrix,
    ctx: &FieldContext,
    abort_at: Option<usize>,
) -> Result<Option<usize>, CryptoError> {
    let ell = gen.rows();
    let cols = gen.cols();
    let q = ctx.q();
    let mut words = 1u64;
    for _ in 0..ell {
        words = words.saturating_mul(q);
        if words > DISTANCE_ENUM_BUDGET {
            return Err(CryptoError::DistanceBudgetExceeded { words });
        }
    }

    let mut digits = vec![0 as Symbol; ell];
    let mut current = vec![0 as Symbol; cols];
    let mut min_wt = usize::MAX;
    for _ in 1..words {
        // Increment the base-q counter; fold each digit delta into the
        // running codeword.
        let mut pos = 0;
        loop {
            let old = digits[pos];
            let new = if (old as u64) + 1 == q { 0 } else { old + 1 };
            let delta = ctx.sym_sub(new, old);
            for c in 0..cols {
                let t = ctx.sym_mul(delta, gen.get(pos, c));
                current[c] = ctx.sym_add(current[c], t);
            }
            digits[pos] = new;
            if new != 0 {
                break;
            }
            pos += 1;
        }
        let wt = current.iter().filter(|&&c| c != 0).count();
        if wt < min_wt {
            min_wt = wt;
            if let Some(limit) = abort_at {
                if min_wt <= limit {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(min_wt))
}

/// Samples a full-rank `ℓ × t_pub` generator with no zero column and exact
/// minimum distance strictly above `d_min`.
pub fn sample_error_code(
    ctx_q: &FieldContext,
    t_pub: usize,
    ell: usize,
    d_min: u64,
    strategy: ErrorCodeStrategy,
    rng: &mut impl RngCore,
) -> Result<ErrorCodeSample, CryptoError> {
    assert!(ell >= 1 && ell <= t_pub, "need 1 <= ell <= t_pub");
    let q = ctx_q.q();
    // A target distance of d_min + 1 must not be excluded by Griesmer.
    let needed = griesmer_sum(q, ell, d_min + 1);
    if needed > t_pub as u64 {
        return Err(CryptoError::GriesmerInfeasible {
            q,
            ell,
            d_required: d_min + 1,
            length_needed: needed,
            length_available: t_pub as u64,
        });
    }

    let strategy = match strategy {
        ErrorCodeStrategy::Auto => {
            if q >= t_pub as u64 {
                ErrorCodeStrategy::Mds
            } else {
                ErrorCodeStrategy::RandomRejection
            }
        }
        s => s,
    };

    match strategy {
        ErrorCodeStrategy::Mds => {
            assert!(q >= t_pub as u64, "MDS construction needs q >= t_pub");
            // Generalized RS rows through random distinct points with random
            // nonzero column multipliers: d = t_pub − ℓ + 1.
            let points = sample_distinct(rng, q as usize, t_pub);
            let mut gen = FqMatrix::zero(ell, t_pub);
            for (j, &pt) in points.iter().enumerate() {
                let scale = ctx_q.random_nonzero_symbol(rng);
                let x = pt as Symbol;
                let mut pow: Symbol = scale;
                for i in 0..ell {
                    gen.set(i, j, pow);
                    pow = ctx_q.sym_mul(pow, x);
                }
            }
            let d = t_pub - ell + 1;
            // Verify exhaustively when the word count is in budget.
            let mut words = 1u64;
            let mut in_budget = true;
            for _ in 0..ell {
                words = words.saturating_mul(q);
                if words > DISTANCE_ENUM_BUDGET {
                    in_budget = false;
                    break;
                }
            }
            if in_budget {
                let exact = min_distance_exhaustive(&gen, ctx_q)?;
                debug_assert_eq!(exact, d);
            }
            if (d as u64) <= d_min {
                return Err(CryptoError::SamplingExhausted { attempts: 1 });
            }
            debug_assert_eq!(gen.rank(ctx_q), ell);
            Ok(ErrorCodeSample {
                generator: gen,
                min_distance: d,
            })
        }
        ErrorCodeStrategy::RandomRejection => {
            for _ in 0..SAMPLING_ATTEMPT_BUDGET {
                let gen = FqMatrix::random(ell, t_pub, ctx_q, rng);
                if (0..t_pub).any(|c| (0..ell).all(|r| gen.get(r, c) == 0)) {
                    continue;
                }
                if gen.rank(ctx_q) != ell {
                    continue;
                }
                match scan_min_weight(&gen, ctx_q, Some(d_min as usize))? {
                    Some(d) => {
                        debug_assert!(d as u64 > d_min);
                        return Ok(ErrorCodeSample {
                            generator: gen,
                            min_distance: d,
                        });
                    }
                    None => continue,
                }
            }
            Err(CryptoError::SamplingExhausted {
                attempts: SAMPLING_ATTEMPT_BUDGET,
            })
        }
        ErrorCodeStrategy::Auto => unreachable!(),
    }
}

/// Generates a key pair over a fresh wild Goppa code.
pub fn keygen(
    q: u64,
    m: usize,
    deg_b: usize,
    n: usize,
    ell: usize,
    seed: u64,
) -> Result<(PublicKey, PrivateKey), CryptoError> {
    assert!(ell >= 1);
    let (p, s) = prime_power_split(q)?;
    let ctx = Arc::new(FieldContext::new(p, s, m, seed)?);
    let mut rng = rng_from_seed(splitmix64(seed ^ 0x6B65_7967_656E));
    let spec = GoppaCodeSpec::random(ctx.clone(), deg_b, n, &mut rng, true)?;
    let code = GoppaCode::build(spec)?;
    let k = code.k();
    let scrambler = FqMatrix::random_invertible(k, &ctx, &mut rng);
    let perm = random_permutation(&mut rng, n);
    let sk = PrivateKey::assemble(code, scrambler, perm, ell)?;
    let pk = sk.derive_public()?;
    Ok((pk, sk))
}

/// Encrypts an `ℓ × k` message matrix: `Y = M·G_pub + E` with a fresh
/// structured error whose distance exceeds the repair threshold.
pub fn encrypt(
    pk: &PublicKey,
    messages: &FqMatrix,
    rng: &mut impl RngCore,
) -> Result<Ciphertext, CryptoError> {
    encrypt_with_strategy(pk, messages, ErrorCodeStrategy::Auto, rng)
}

pub fn encrypt_with_strategy(
    pk: &PublicKey,
    messages: &FqMatrix,
    strategy: ErrorCodeStrategy,
    rng: &mut impl RngCore,
) -> Result<Ciphertext, CryptoError> {
    if messages.rows() != pk.ell() || messages.cols() != pk.k() {
        return Err(CryptoError::DimensionMismatch(alloc::format!(
            "message matrix is {}x{}, expected {}x{}",
            messages.rows(),
            messages.cols(),
            pk.ell(),
            pk.k()
        )));
    }
    let ctx = pk.ctx_q().clone();
    let d_min = d_e_threshold(ctx.q(), pk.r() as u64);
    let sample = sample_error_code(&ctx, pk.t_pub(), pk.ell(), d_min, strategy, rng)?;
    let support = sample_distinct(rng, pk.n(), pk.t_pub());
    let mut error = FqMatrix::zero(pk.ell(), pk.n());
    for (col, &j) in support.iter().enumerate() {
        for i in 0..pk.ell() {
            error.set(i, j, sample.generator.get(i, col));
        }
    }
    let y = messages.mul(pk.generator(), &ctx).add(&error, &ctx);
    Ok(Ciphertext { matrix: y })
}

/// Decrypts: strip the permutation, decode the burst, invert the encoding
/// on the information set, unwind the scrambler.
pub fn decrypt(sk: &PrivateKey, ciphertext: &Ciphertext) -> Result<FqMatrix, CryptoError> {
    let code = sk.code();
    let ctx = code.ctx().clone();
    let y = &ciphertext.matrix;
    if y.cols() != code.n() || y.rows() != sk.ell() {
        return Err(CryptoError::DimensionMismatch(alloc::format!(
            "ciphertext is {}x{}, expected {}x{}",
            y.rows(),
            y.cols(),
            sk.ell(),
            code.n()
        )));
    }
    let unpermuted = y.permute_columns(&sk.perm_inv, &ctx);
    let corrected = match decode(&unpermuted, code)? {
        DecodeOutcome::Decoded { corrected, .. } => corrected,
        DecodeOutcome::Failure(stage) => return Err(CryptoError::DecryptFailed(stage)),
    };
    let mut scrambled = FqMatrix::zero(sk.ell(), code.k());
    for i in 0..sk.ell() {
        let msg = sk.message_from_codeword(corrected.row(i));
        for (c, &v) in msg.iter().enumerate() {
            scrambled.set(i, c, v);
        }
    }
    Ok(scrambled.mul(&sk.scrambler_inv, &ctx))
}

/// Parameter-validation verdict for the repaired system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub q: u64,
    pub ell: usize,
    pub r: u64,
    pub t_pub: u64,
    /// `⌊q/(q−1)·r/2⌋`: the error-code distance must strictly exceed this.
    pub d_e_threshold: u64,
    pub d_e_target: u64,
    pub target_exceeds_threshold: bool,
    /// Griesmer feasibility of `[t_pub, ℓ, d_e_target]_q`.
    pub griesmer_feasible: bool,
    /// Binary interleaving can never beat unique decoding (Griesmer).
    pub binary_no_gain: bool,
    pub improvement_possible: bool,
}

pub fn validate_params(q: u64, ell: usize, r: u64, d_e_target: u64) -> ValidationReport {
    let t_pub = max_burst_radius(ell as u64, q, r);
    let threshold = d_e_threshold(q, r);
    let target_exceeds_threshold = d_e_target > threshold;
    let griesmer_feasible = griesmer_sum(q, ell, d_e_target) <= t_pub;
    let binary_no_gain = q == 2 && ell >= 2;
    let improvement_possible = target_exceeds_threshold && griesmer_feasible && !binary_no_gain;
    ValidationReport {
        q,
        ell,
        r,
        t_pub,
        d_e_threshold: threshold,
        d_e_target,
        target_exceeds_threshold,
        griesmer_feasible,
        binary_no_gain,
        improvement_possible,
    }
}

/// Public key size in bytes: `⌈k(n−k)·log2(q) / 8⌉` (systematic form).
pub fn public_key_bytes(q: u64, n: u64, k: u64) -> u64 {
    assert!(k > 0 && k < n);
    let symbols = (k * (n - k)) as f64;
    let bits = symbols * libm::log2(q as f64);
    libm::ceil(bits / 8.0) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetMethod {
    UniqueDecoding,
    Interleaved,
}

/// One row of the published parameter table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preset {
    pub security_bits: u32,
    pub q: u64,
    pub m: usize,
    pub method: PresetMethod,
    pub r: u64,
    pub n: u64,
    pub k: u64,
    /// Unique-decoding radius (unique-decoding rows only).
    pub t_unique: Option<u64>,
    /// `(ℓ, t_pub, d_E)` for interleaved rows.
    pub interleaved: Option<(usize, u64, u64)>,
    /// Key size as published.
    pub published_key_bytes: u64,
    /// The published q=5 unique-decoding key size does not match the
    /// formula; it is carried as printed and flagged.
    pub published_bytes_suspect: bool,
}

const PRESETS: &[Preset] = &[
    Preset {
        security_bits: 128,
        q: 2,
        m: 12,
        method: PresetMethod::UniqueDecoding,
        r: 70,
        n: 2800,
        k: 1960,
        t_unique: Some(70),
        interleaved: None,
        published_key_bytes: 205_800,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 128,
        q: 3,
        m: 8,
        method: PresetMethod::UniqueDecoding,
        r: 100,
        n: 2420,
        k: 1620,
        t_unique: Some(75),
        interleaved: None,
        published_key_bytes: 256_763,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 128,
        q: 3,
        m: 8,
        method: PresetMethod::Interleaved,
        r: 100,
        n: 2130,
        k: 1330,
        t_unique: None,
        interleaved: Some((7, 131, 84)),
        published_key_bytes: 210_800,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 128,
        q: 4,
        m: 6,
        method: PresetMethod::UniqueDecoding,
        r: 90,
        n: 2150,
        k: 1610,
        t_unique: Some(60),
        interleaved: None,
        published_key_bytes: 217_350,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 128,
        q: 4,
        m: 6,
        method: PresetMethod::Interleaved,
        r: 90,
        n: 1580,
        k: 1040,
        t_unique: None,
        interleaved: Some((7, 105, 76)),
        published_key_bytes: 140_400,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 128,
        q: 5,
        m: 5,
        method: PresetMethod::UniqueDecoding,
        r: 100,
        n: 1800,
        k: 1380,
        t_unique: Some(62),
        interleaved: None,
        published_key_bytes: 200_266,
        published_bytes_suspect: true,
    },
    Preset {
        security_bits: 128,
        q: 5,
        m: 5,
        method: PresetMethod::Interleaved,
        r: 100,
        n: 1290,
        k: 790,
        t_unique: None,
        interleaved: Some((7, 109, 84)),
        published_key_bytes: 114_646,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 256,
        q: 2,
        m: 13,
        method: PresetMethod::UniqueDecoding,
        r: 120,
        n: 6740,
        k: 5180,
        t_unique: Some(120),
        interleaved: None,
        published_key_bytes: 1_010_100,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 256,
        q: 3,
        m: 8,
        method: PresetMethod::UniqueDecoding,
        r: 180,
        n: 5100,
        k: 3660,
        t_unique: Some(135),
        interleaved: None,
        published_key_bytes: 1_044_173,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 256,
        q: 3,
        m: 8,
        method: PresetMethod::Interleaved,
        r: 180,
        n: 4300,
        k: 2860,
        t_unique: None,
        interleaved: Some((7, 236, 156)),
        published_key_bytes: 815_939,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 256,
        q: 4,
        m: 7,
        method: PresetMethod::UniqueDecoding,
        r: 240,
        n: 4880,
        k: 3200,
        t_unique: Some(160),
        interleaved: None,
        published_key_bytes: 1_344_000,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 256,
        q: 4,
        m: 7,
        method: PresetMethod::Interleaved,
        r: 240,
        n: 3760,
        k: 2080,
        t_unique: None,
        interleaved: Some((7, 280, 208)),
        published_key_bytes: 873_600,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 256,
        q: 5,
        m: 6,
        method: PresetMethod::UniqueDecoding,
        r: 200,
        n: 4690,
        k: 3490,
        t_unique: Some(125),
        interleaved: None,
        published_key_bytes: 1_215_530,
        published_bytes_suspect: false,
    },
    Preset {
        security_bits: 256,
        q: 5,
        m: 6,
        method: PresetMethod::Interleaved,
        r: 200,
        n: 3200,
        k: 2000,
        t_unique: None,
        interleaved: Some((7, 218, 171)),
        published_key_bytes: 696_578,
        published_bytes_suspect: false,
    },
];

/// All published parameter rows.
pub fn all_presets() -> &'static [Preset] {
    PRESETS
}

pub fn preset_params(
    security_bits: u32,
    q: u64,
    method: PresetMethod,
) -> Result<&'static Preset, CryptoError> {
    PRESETS
        .iter()
        .find(|p| p.security_bits == security_bits && p.q == q && p.method == method)
        .ok_or(CryptoError::UnknownPreset { security_bits, q })
}
