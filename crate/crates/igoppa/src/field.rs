//! Exact arithmetic in the tower `F_p ⊂ F_q ⊂ F_{q^m}`, `q = p^s`.
//!
//! `F_q` elements are canonical indices `0..q` (the little-endian base-`p`
//! digits of an index are the coefficients of the residue polynomial modulo
//! the base modulus). Arithmetic in `F_q` is table-driven. Elements of
//! `F_{q^m}` are fixed-size coefficient vectors over `F_q`, reduced modulo
//! the extension modulus.
//!
//! The base modulus is the lexicographically first monic irreducible of its
//! degree over `F_p`, so the meaning of a symbol index depends only on
//! `(p, s)`; this is what makes symbol matrices portable between parties.
//! The extension modulus is chosen by seeded random search and recorded, so
//! a context can be serialized and reloaded identically.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::rng::{splitmix64, uniform_below};

/// Canonical index of an `F_q` element, `0..q`.
pub type Symbol = u16;

/// Maximum supported extension degree `m` of `F_{q^m}` over `F_q`.
pub const MAX_EXT_DEG: usize = 16;
/// Maximum supported subfield size `q` (arithmetic tables are `q × q`).
pub const MAX_BASE_ORDER: u64 = 1 << 10;
/// Maximum supported field order `q^m` (enumeration-based operations).
pub const MAX_ORDER: u64 = 1 << 20;

/// Element of `F_{q^m}`: coefficients over `F_q`, little-endian in the
/// degree, zero-padded beyond `m`. Plain value type; all arithmetic goes
/// through the owning [`FieldContext`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ext([Symbol; MAX_EXT_DEG]);

impl Ext {
    pub const ZERO: Ext = Ext([0; MAX_EXT_DEG]);

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Coefficient of degree `i` (zero beyond the context's `m`).
    pub fn coeff(&self, i: usize) -> Symbol {
        if i < MAX_EXT_DEG {
            self.0[i]
        } else {
            0
        }
    }
}

impl fmt::Debug for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.0.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
        write!(f, "Ext{:?}", &self.0[..top.max(1)])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NonPrimeCharacteristic(u64),
    UnsupportedParameters(String),
    InvalidModulus(String),
    InvalidSubfieldOrder { order: u64 },
    ZeroInverse,
    SymbolOutOfRange { symbol: u64, q: u64 },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPrimeCharacteristic(p) => {
                write!(f, "characteristic {p} is not prime")
            }
            FieldError::UnsupportedParameters(msg) => write!(f, "unsupported parameters: {msg}"),
            FieldError::InvalidModulus(msg) => write!(f, "invalid modulus: {msg}"),
            FieldError::InvalidSubfieldOrder { order } => {
                write!(f, "{order} is not a subfield order of this field")
            }
            FieldError::ZeroInverse => write!(f, "inversion of zero"),
            FieldError::SymbolOutOfRange { symbol, q } => {
                write!(f, "symbol {symbol} out of range for F_{q}")
            }
        }
    }
}

/// Arithmetic context for the tower `F_p ⊂ F_q ⊂ F_{q^m}`.
///
/// Immutable after construction and safe to share across threads.
pub struct FieldContext {
    p: u64,
    s: usize,
    m: usize,
    q: u64,
    order: u64,
    base_modulus: Vec<u64>,
    ext_modulus: Vec<Symbol>,
    add: Vec<Symbol>,
    mul: Vec<Symbol>,
    neg: Vec<Symbol>,
    inv: Vec<Symbol>,
    // x^(m+j) mod ext_modulus for j = 0..m-1, as coefficient rows.
    red: Vec<[Symbol; MAX_EXT_DEG]>,
    fingerprint: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(base: u64, exp: usize, cap: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > cap {
            return None;
        }
    }
    Some(acc)
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (used only to build the base field tables).
// ---------------------------------------------------------------------------

mod fp {
    use super::Vec;

    pub fn trim(f: &mut Vec<u64>) {
        while f.last() == Some(&0) {
            f.pop();
        }
    }

    pub fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = super::vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo monic `f`.
    pub fn rem(p: u64, a: &[u64], f: &[u64]) -> Vec<u64> {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let df = f.len() - 1;
        while r.len() > df {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - df;
            if lead != 0 {
                for (k, &fk) in f.iter().enumerate() {
                    let idx = shift + k;
                    r[idx] = (r[idx] + p - (lead * fk) % p) % p;
                }
            }
            r.pop();
            trim(&mut r);
        }
        r
    }

    /// Trial division by every monic polynomial of degree `1..=deg f / 2`.
    pub fn is_irreducible(p: u64, f: &[u64]) -> bool {
        let deg = f.len() - 1;
        if deg == 0 {
            return false;
        }
        if deg == 1 {
            return true;
        }
        for d in 1..=deg / 2 {
            // Candidate divisor: z^d + sum(code digits).
            let count = super::checked_pow(p, d, u64::MAX).unwrap();
            for code in 0..count {
                let mut g = super::vec![0u64; d + 1];
                g[d] = 1;
                let mut c = code;
                for gi in g.iter_mut().take(d) {
                    *gi = c % p;
                    c /= p;
                }
                if rem(p, f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// Polynomials over F_q by index, used to build and validate the extension.
// ---------------------------------------------------------------------------

struct FqTables<'a> {
    q: u64,
    add: &'a [Symbol],
    mul: &'a [Symbol],
}

impl FqTables<'_> {
    fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add[a as usize * self.q as usize + b as usize]
    }
    fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        self.mul[a as usize * self.q as usize + b as usize]
    }
}

mod fq_poly {
    use super::{FqTables, Symbol, Vec};

    pub fn trim(f: &mut Vec<Symbol>) {
        while f.last() == Some(&0) {
            f.pop();
        }
    }

    /// Remainder of `a` modulo monic `f`, in place on a copy.
    pub fn rem(t: &FqTables, neg: &[Symbol], a: &[Symbol], f: &[Symbol]) -> Vec<Symbol> {
        let mut r: Vec<Symbol> = a.to_vec();
        trim(&mut r);
        let df = f.len() - 1;
        while r.len() > df {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - df;
            if lead != 0 {
                for (k, &fk) in f.iter().enumerate() {
                    let sub = neg[t.mul(lead, fk) as usize];
                    r[shift + k] = t.add(r[shift + k], sub);
                }
            }
            r.pop();
            trim(&mut r);
        }
        r
    }

    /// Trial division by every monic polynomial of degree `1..=deg f / 2`.
    pub fn is_irreducible(t: &FqTables, neg: &[Symbol], f: &[Symbol]) -> bool {
        let deg = f.len() - 1;
        if deg == 0 {
            return false;
        }
        if deg == 1 {
            return true;
        }
        for d in 1..=deg / 2 {
            let count = super::checked_pow(t.q, d, u64::MAX).unwrap();
            for code in 0..count {
                let mut g = super::vec![0 as Symbol; d + 1];
                g[d] = 1;
                let mut c = code;
                for gi in g.iter_mut().take(d) {
                    *gi = (c % t.q) as Symbol;
                    c /= t.q;
                }
                if rem(t, neg, f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl FieldContext {
    /// Builds the tower `F_p ⊂ F_{p^s} ⊂ F_{(p^s)^m}`.
    ///
    /// The base modulus is canonical (seed-independent); the extension
    /// modulus for `m ≥ 2` is found by seeded random search, so equal seeds
    /// give identical contexts.
    pub fn new(p: u64, s: usize, m: usize, seed: u64) -> Result<FieldContext, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeCharacteristic(p));
        }
        if s == 0 || m == 0 {
            return Err(FieldError::UnsupportedParameters(
                "degrees s and m must be positive".into(),
            ));
        }
        if m > MAX_EXT_DEG {
            return Err(FieldError::UnsupportedParameters(format!(
                "extension degree {m} exceeds {MAX_EXT_DEG}"
            )));
        }
        let q = checked_pow(p, s, MAX_BASE_ORDER).ok_or_else(|| {
            FieldError::UnsupportedParameters(format!(
                "base field order p^s exceeds {MAX_BASE_ORDER}"
            ))
        })?;
        let order = checked_pow(q, m, MAX_ORDER).ok_or_else(|| {
            FieldError::UnsupportedParameters(format!("field order q^m exceeds {MAX_ORDER}"))
        })?;

        let base_modulus = canonical_base_modulus(p, s);
        let (add, mul, neg, inv) = build_base_tables(p, s, q, &base_modulus);

        let ext_modulus = {
            let t = FqTables {
                q,
                add: &add,
                mul: &mul,
            };
            if m == 1 {
                vec![0, 1]
            } else {
                let mut rng = crate::rng::rng_from_seed(splitmix64(seed ^ 0x5EED_F1E1));
                let mut found = None;
                for _ in 0..10_000 {
                    let mut f: Vec<Symbol> = (0..m)
                        .map(|_| uniform_below(&mut rng, q) as Symbol)
                        .collect();
                    f.push(1);
                    if f[0] == 0 {
                        f[0] = 1 + uniform_below(&mut rng, q - 1) as Symbol;
                    }
                    if fq_poly::is_irreducible(&t, &neg, &f) {
                        found = Some(f);
                        break;
                    }
                }
                found.ok_or_else(|| {
                    FieldError::InvalidModulus("no irreducible extension modulus found".into())
                })?
            }
        };

        Self::assemble(
            p,
            s,
            m,
            q,
            order,
            base_modulus,
            ext_modulus,
            add,
            mul,
            neg,
            inv,
        )
    }

    /// Rebuilds a context from recorded moduli, validating both.
    pub fn from_parts(
        p: u64,
        s: usize,
        m: usize,
        base_modulus: &[u64],
        ext_modulus: &[u64],
    ) -> Result<FieldContext, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeCharacteristic(p));
        }
        if s == 0 || m == 0 || m > MAX_EXT_DEG {
            return Err(FieldError::UnsupportedParameters("bad degrees".into()));
        }
        let q = checked_pow(p, s, MAX_BASE_ORDER)
            .ok_or_else(|| FieldError::UnsupportedParameters("base order too large".into()))?;
        let order = checked_pow(q, m, MAX_ORDER)
            .ok_or_else(|| FieldError::UnsupportedParameters("order too large".into()))?;

        if base_modulus.len() != s + 1
            || base_modulus[s] != 1
            || base_modulus.iter().any(|&c| c >= p)
        {
            return Err(FieldError::InvalidModulus(
                "base modulus must be monic of degree s with coefficients in F_p".into(),
            ));
        }
        if !fp::is_irreducible(p, base_modulus) {
            return Err(FieldError::InvalidModulus(
                "base modulus is reducible".into(),
            ));
        }
        let base_modulus = base_modulus.to_vec();
        let (add, mul, neg, inv) = build_base_tables(p, s, q, &base_modulus);

        if ext_modulus.len() != m + 1 || ext_modulus[m] != 1 || ext_modulus.iter().any(|&c| c >= q)
        {
            return Err(FieldError::InvalidModulus(
                "extension modulus must be monic of degree m with coefficients in F_q".into(),
            ));
        }
        let ext_modulus: Vec<Symbol> = ext_modulus.iter().map(|&c| c as Symbol).collect();
        {
            let t = FqTables {
                q,
                add: &add,
                mul: &mul,
            };
            if m > 1 && !fq_poly::is_irreducible(&t, &neg, &ext_modulus) {
                return Err(FieldError::InvalidModulus(
                    "extension modulus is reducible".into(),
                ));
            }
        }

        Self::assemble(
            p,
            s,
            m,
            q,
            order,
            base_modulus,
            ext_modulus,
            add,
            mul,
            neg,
            inv,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        p: u64,
        s: usize,
        m: usize,
        q: u64,
        order: u64,
        base_modulus: Vec<u64>,
        ext_modulus: Vec<Symbol>,
        add: Vec<Symbol>,
        mul: Vec<Symbol>,
        neg: Vec<Symbol>,
        inv: Vec<Symbol>,
    ) -> Result<FieldContext, FieldError> {
        let mut ctx = FieldContext {
            p,
            s,
            m,
            q,
            order,
            base_modulus,
            ext_modulus,
            add,
            mul,
            neg,
            inv,
            red: Vec::new(),
            fingerprint: 0,
        };
        ctx.build_reduction_rows();
        ctx.fingerprint = ctx.compute_fingerprint();
        Ok(ctx)
    }

    fn build_reduction_rows(&mut self) {
        let m = self.m;
        // row for x^m: the negated lower part of the monic modulus.
        let mut row = [0 as Symbol; MAX_EXT_DEG];
        for i in 0..m {
            row[i] = self.neg[self.ext_modulus[i] as usize];
        }
        self.red.push(row);
        // x^(m+j+1) = x * x^(m+j), folding the overflow coefficient back.
        for _ in 1..m {
            let prev = *self.red.last().unwrap();
            let mut next = [0 as Symbol; MAX_EXT_DEG];
            let carry = prev[m - 1];
            for i in (1..m).rev() {
                next[i] = prev[i - 1];
            }
            let x_m = self.red[0];
            for i in 0..m {
                next[i] = self.sym_add(next[i], self.sym_mul(carry, x_m[i]));
            }
            self.red.push(next);
        }
    }

    fn compute_fingerprint(&self) -> u64 {
        let mut h = splitmix64(self.p ^ (self.s as u64) << 24 ^ (self.m as u64) << 48);
        for &c in &self.base_modulus {
            h = splitmix64(h ^ c);
        }
        for &c in &self.ext_modulus {
            h = splitmix64(h ^ c as u64);
        }
        h
    }

    // -- parameters ---------------------------------------------------------

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn s(&self) -> usize {
        self.s
    }
    pub fn m(&self) -> usize {
        self.m
    }
    /// Base field size `q = p^s`.
    pub fn q(&self) -> u64 {
        self.q
    }
    /// Full field size `q^m`.
    pub fn order(&self) -> u64 {
        self.order
    }
    pub fn base_modulus(&self) -> &[u64] {
        &self.base_modulus
    }
    pub fn ext_modulus(&self) -> &[Symbol] {
        &self.ext_modulus
    }
    /// Cheap identity check for "same tower, same moduli".
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    // -- F_q symbol arithmetic ----------------------------------------------

    #[inline]
    pub fn sym_add(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn sym_sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.sym_add(a, self.neg[b as usize])
    }
    #[inline]
    pub fn sym_mul(&self, a: Symbol, b: Symbol) -> Symbol {
        self.mul[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn sym_neg(&self, a: Symbol) -> Symbol {
        self.neg[a as usize]
    }
    pub fn sym_inv(&self, a: Symbol) -> Result<Symbol, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.inv[a as usize])
    }
    pub fn random_symbol(&self, rng: &mut impl RngCore) -> Symbol {
        uniform_below(rng, self.q) as Symbol
    }
    pub fn random_nonzero_symbol(&self, rng: &mut impl RngCore) -> Symbol {
        1 + uniform_below(rng, self.q - 1) as Symbol
    }

    // -- F_{q^m} element arithmetic ------------------------------------------

    pub fn zero(&self) -> Ext {
        Ext::ZERO
    }

    pub fn one(&self) -> Ext {
        self.embed(1)
    }

    /// Embeds an `F_q` symbol as a constant of `F_{q^m}`.
    pub fn embed(&self, sym: Symbol) -> Ext {
        debug_assert!((sym as u64) < self.q);
        let mut e = Ext::ZERO;
        e.0[0] = sym;
        e
    }

    /// Element from explicit coefficients over `F_q` (little-endian degree).
    pub fn ext_from_coeffs(&self, coeffs: &[u64]) -> Result<Ext, FieldError> {
        if coeffs.len() > self.m {
            return Err(FieldError::UnsupportedParameters(
                "coefficient vector longer than extension degree".into(),
            ));
        }
        let mut e = Ext::ZERO;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.q {
                return Err(FieldError::SymbolOutOfRange {
                    symbol: c,
                    q: self.q,
                });
            }
            e.0[i] = c as Symbol;
        }
        Ok(e)
    }

    /// The symbol such that `embed(sym) == a`, if `a` lies in embedded `F_q`.
    pub fn subfield_symbol(&self, a: &Ext) -> Option<Symbol> {
        if a.0[1..self.m].iter().all(|&c| c == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }

    pub fn ext_add(&self, a: &Ext, b: &Ext) -> Ext {
        let mut out = Ext::ZERO;
        for i in 0..self.m {
            out.0[i] = self.sym_add(a.0[i], b.0[i]);
        }
        out
    }

    pub fn ext_sub(&self, a: &Ext, b: &Ext) -> Ext {
        let mut out = Ext::ZERO;
        for i in 0..self.m {
            out.0[i] = self.sym_sub(a.0[i], b.0[i]);
        }
        out
    }

    pub fn ext_neg(&self, a: &Ext) -> Ext {
        let mut out = Ext::ZERO;
        for i in 0..self.m {
            out.0[i] = self.sym_neg(a.0[i]);
        }
        out
    }

    pub fn ext_mul(&self, a: &Ext, b: &Ext) -> Ext {
        let m = self.m;
        let mut acc = [0 as Symbol; 2 * MAX_EXT_DEG];
        for i in 0..m {
            let ai = a.0[i];
            if ai == 0 {
                continue;
            }
            for j in 0..m {
                let t = self.sym_mul(ai, b.0[j]);
                acc[i + j] = self.sym_add(acc[i + j], t);
            }
        }
        let mut out = Ext::ZERO;
        out.0[..m].copy_from_slice(&acc[..m]);
        for k in m..2 * m - 1 {
            let c = acc[k];
            if c == 0 {
                continue;
            }
            let row = &self.red[k - m];
            for i in 0..m {
                out.0[i] = self.sym_add(out.0[i], self.sym_mul(c, row[i]));
            }
        }
        out
    }

    /// Multiply by an `F_q` scalar.
    pub fn ext_scale(&self, a: &Ext, c: Symbol) -> Ext {
        let mut out = Ext::ZERO;
        for i in 0..self.m {
            out.0[i] = self.sym_mul(a.0[i], c);
        }
        out
    }

    pub fn ext_pow(&self, a: &Ext, mut e: u64) -> Ext {
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.ext_mul(&acc, &base);
            }
            base = self.ext_mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse in `F_{q^m}` by the extended Euclidean algorithm on the
    /// coefficient representation.
    pub fn ext_inv(&self, a: &Ext) -> Result<Ext, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        if self.m == 1 {
            return Ok(self.embed(self.sym_inv(a.0[0])?));
        }
        // Invariants: u*a ≡ r0, v*a ≡ r1 (mod ext_modulus).
        let mut r0: Vec<Symbol> = self.ext_modulus.clone();
        let mut r1: Vec<Symbol> = a.0[..self.m].to_vec();
        fq_poly::trim(&mut r1);
        let mut u: Vec<Symbol> = vec![];
        let mut v: Vec<Symbol> = vec![1];
        while r1.len() > 1 {
            let (quot, rem) = self.fq_divmod(&r0, &r1);
            let t = self.fq_sub(&u, &self.fq_mul(&quot, &v));
            r0 = r1;
            r1 = rem;
            u = v;
            v = t;
        }
        // r1 is a nonzero constant: gcd(a, modulus) up to scale.
        let c = r1[0];
        debug_assert!(c != 0, "modulus must be irreducible");
        let cinv = self.sym_inv(c)?;
        let mut out = Ext::ZERO;
        for (i, &co) in v.iter().enumerate() {
            out.0[i] = self.sym_mul(co, cinv);
        }
        Ok(out)
    }

    pub fn random_ext(&self, rng: &mut impl RngCore) -> Ext {
        let mut e = Ext::ZERO;
        for i in 0..self.m {
            e.0[i] = uniform_below(rng, self.q) as Symbol;
        }
        e
    }

    pub fn random_nonzero_ext(&self, rng: &mut impl RngCore) -> Ext {
        loop {
            let e = self.random_ext(rng);
            if !e.is_zero() {
                return e;
            }
        }
    }

    // -- enumeration and subfields -------------------------------------------

    /// Element with canonical index `i`: base-`q` digits of `i` are the
    /// coefficients, least significant digit = constant term.
    pub fn index_to_ext(&self, i: u64) -> Ext {
        debug_assert!(i < self.order);
        let mut e = Ext::ZERO;
        let mut v = i;
        for k in 0..self.m {
            e.0[k] = (v % self.q) as Symbol;
            v /= self.q;
        }
        e
    }

    pub fn ext_to_index(&self, a: &Ext) -> u64 {
        let mut v = 0u64;
        for k in (0..self.m).rev() {
            v = v * self.q + a.0[k] as u64;
        }
        v
    }

    /// All field elements in canonical order; index 0 is zero.
    pub fn enumerate_elements(&self) -> Vec<Ext> {
        (0..self.order).map(|i| self.index_to_ext(i)).collect()
    }

    /// Frobenius fixed-point test `a^order == a` for the subfield of the
    /// given order, which must be `p^d` with `d` dividing `s·m`.
    pub fn is_in_subfield(&self, a: &Ext, subfield_order: u64) -> Result<bool, FieldError> {
        let mut d = 0usize;
        let mut acc = 1u64;
        while acc < subfield_order {
            acc *= self.p;
            d += 1;
        }
        if acc != subfield_order || d == 0 || !(self.s * self.m).is_multiple_of(d) {
            return Err(FieldError::InvalidSubfieldOrder {
                order: subfield_order,
            });
        }
        Ok(self.ext_pow(a, subfield_order) == *a)
    }

    // -- F_q polynomial helpers (coefficients as symbols) ---------------------

    fn fq_mul(&self, a: &[Symbol], b: &[Symbol]) -> Vec<Symbol> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0 as Symbol; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = self.sym_add(out[i + j], self.sym_mul(ai, bj));
            }
        }
        fq_poly::trim(&mut out);
        out
    }

    fn fq_sub(&self, a: &[Symbol], b: &[Symbol]) -> Vec<Symbol> {
        let n = a.len().max(b.len());
        let mut out = vec![0 as Symbol; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = self.sym_sub(x, y);
        }
        fq_poly::trim(&mut out);
        out
    }

    fn fq_divmod(&self, a: &[Symbol], b: &[Symbol]) -> (Vec<Symbol>, Vec<Symbol>) {
        debug_assert!(!b.is_empty());
        let mut r = a.to_vec();
        fq_poly::trim(&mut r);
        let db = b.len() - 1;
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let lead_inv = self.inv[*b.last().unwrap() as usize];
        let mut quot = vec![0 as Symbol; r.len() - db];
        while r.len() > db {
            let coef = self.sym_mul(*r.last().unwrap(), lead_inv);
            let shift = r.len() - 1 - db;
            quot[shift] = coef;
            if coef != 0 {
                for (k, &bk) in b.iter().enumerate() {
                    let sub = self.sym_neg(self.sym_mul(coef, bk));
                    r[shift + k] = self.sym_add(r[shift + k], sub);
                }
            }
            r.pop();
            fq_poly::trim(&mut r);
        }
        fq_poly::trim(&mut quot);
        (quot, r)
    }
}

/// Lexicographically first monic irreducible of degree `s` over `F_p`
/// (ordering by the integer code of the non-leading coefficients).
fn canonical_base_modulus(p: u64, s: usize) -> Vec<u64> {
    if s == 1 {
        return vec![0, 1];
    }
    let count = checked_pow(p, s, u64::MAX).unwrap();
    for code in 0..count {
        let mut f = vec![0u64; s + 1];
        f[s] = 1;
        let mut c = code;
        for fi in f.iter_mut().take(s) {
            *fi = c % p;
            c /= p;
        }
        if fp::is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

fn build_base_tables(
    p: u64,
    s: usize,
    q: u64,
    base_modulus: &[u64],
) -> (Vec<Symbol>, Vec<Symbol>, Vec<Symbol>, Vec<Symbol>) {
    let qs = q as usize;
    let digits = |idx: u64| -> Vec<u64> {
        let mut v = vec![0u64; s];
        let mut x = idx;
        for d in v.iter_mut() {
            *d = x % p;
            x /= p;
        }
        v
    };
    let pack = |coeffs: &[u64]| -> Symbol {
        let mut v = 0u64;
        for k in (0..s).rev() {
            v = v * p + coeffs.get(k).copied().unwrap_or(0);
        }
        v as Symbol
    };

    let mut add = vec![0 as Symbol; qs * qs];
    let mut mul = vec![0 as Symbol; qs * qs];
    let mut neg = vec![0 as Symbol; qs];
    for a in 0..q {
        let da = digits(a);
        let negd: Vec<u64> = da.iter().map(|&x| (p - x) % p).collect();
        neg[a as usize] = pack(&negd);
        for b in 0..q {
            let db = digits(b);
            let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
            add[a as usize * qs + b as usize] = pack(&sum);
            let prod = fp::rem(p, &fp::mul(p, &da, &db), base_modulus);
            mul[a as usize * qs + b as usize] = pack(&prod);
        }
    }

    // Inverses by Fermat: a^(q-2). Entry 0 is a sentinel, guarded upstream.
    let mut inv = vec![0 as Symbol; qs];
    for a in 1..q {
        let mut acc: Symbol = 1;
        let mut base = a as Symbol;
        let mut e = q - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul[acc as usize * qs + base as usize];
            }
            base = mul[base as usize * qs + base as usize];
            e >>= 1;
        }
        inv[a as usize] = acc;
    }
    (add, mul, neg, inv)
}
