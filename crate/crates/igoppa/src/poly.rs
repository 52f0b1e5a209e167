//! Dense univariate polynomials over `F_{q^m}`.
//!
//! Coefficients are stored little-endian in the degree with a trimmed
//! leading coefficient; the zero polynomial is the empty vector and its
//! degree is `None` (treated as −∞ by every comparison here). All
//! operations take the owning [`FieldContext`] explicitly.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::field::{Ext, FieldContext, Symbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    DivisionByZero,
    ZeroPolynomial,
    /// `mod_inverse` of an element sharing a factor with the modulus.
    NotCoprime,
    /// Rejection sampling exceeded its retry budget.
    RetryBudgetExceeded,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DivisionByZero => write!(f, "division by the zero polynomial"),
            PolyError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            PolyError::NotCoprime => write!(f, "inputs are not coprime"),
            PolyError::RetryBudgetExceeded => write!(f, "rejection sampling budget exceeded"),
        }
    }
}

/// Dense polynomial over the extension field of a [`FieldContext`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Ext>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(ctx: &FieldContext) -> Poly {
        Poly {
            coeffs: vec![ctx.one()],
        }
    }

    pub fn constant(c: Ext) -> Poly {
        let mut p = Poly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// `c · x^deg`.
    pub fn monomial(c: Ext, deg: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Ext::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// `x - alpha`.
    pub fn linear(ctx: &FieldContext, alpha: &Ext) -> Poly {
        Poly {
            coeffs: vec![ctx.ext_neg(alpha), ctx.one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Ext>) -> Poly {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[Ext] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Ext {
        self.coeffs.get(i).copied().unwrap_or(Ext::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<Ext> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self, ctx: &FieldContext) -> bool {
        self.leading_coeff() == Some(ctx.one())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Ext::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(ctx.ext_add(&self.coeff(i), &other.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(ctx.ext_sub(&self.coeff(i), &other.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self, ctx: &FieldContext) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| ctx.ext_neg(c)).collect())
    }

    pub fn mul(&self, other: &Poly, ctx: &FieldContext) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Ext::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = ctx.ext_mul(a, b);
                out[i + j] = ctx.ext_add(&out[i + j], &t);
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Ext, ctx: &FieldContext) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| ctx.ext_mul(a, c)).collect())
    }

    pub fn pow(&self, mut e: u64, ctx: &FieldContext) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, ctx);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, ctx);
            }
        }
        acc
    }

    /// Quotient and remainder with `self = q·divisor + r`, `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly, ctx: &FieldContext) -> Result<(Poly, Poly), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        if rem.is_zero() || rem.degree() < Some(dd) {
            return Ok((Poly::zero(), rem));
        }
        let lead_inv = ctx
            .ext_inv(&divisor.leading_coeff().unwrap())
            .expect("nonzero leading coefficient");
        let mut quot = vec![Ext::ZERO; rem.coeffs.len() - dd];
        while !rem.is_zero() && rem.degree() >= Some(dd) {
            let shift = rem.coeffs.len() - 1 - dd;
            let c = ctx.ext_mul(rem.coeffs.last().unwrap(), &lead_inv);
            quot[shift] = c;
            for (k, dk) in divisor.coeffs.iter().enumerate() {
                let t = ctx.ext_mul(&c, dk);
                rem.coeffs[shift + k] = ctx.ext_sub(&rem.coeffs[shift + k], &t);
            }
            rem.trim();
        }
        Ok((Poly::from_coeffs(quot), rem))
    }

    pub fn rem(&self, modulus: &Poly, ctx: &FieldContext) -> Result<Poly, PolyError> {
        Ok(self.divmod(modulus, ctx)?.1)
    }

    /// `self · other mod modulus`.
    pub fn mul_mod(&self, other: &Poly, modulus: &Poly, ctx: &FieldContext) -> Poly {
        self.mul(other, ctx)
            .rem(modulus, ctx)
            .expect("nonzero modulus")
    }

    /// `x · self mod modulus`; single-step shift used by syndrome tables.
    pub fn shift_mod(&self, modulus: &Poly, ctx: &FieldContext) -> Poly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Ext::ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Poly::from_coeffs(coeffs)
            .rem(modulus, ctx)
            .expect("nonzero modulus")
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Ext, ctx: &FieldContext) -> Ext {
        let mut acc = Ext::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = ctx.ext_mul(&acc, x);
            acc = ctx.ext_add(&acc, c);
        }
        acc
    }

    /// Characteristic-p formal derivative: coefficient `i·f_i` with `i mod p`.
    pub fn formal_derivative(&self, ctx: &FieldContext) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let p = ctx.p();
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let scalar = (i as u64 % p) as Symbol;
            out.push(ctx.ext_scale(c, scalar));
        }
        Poly::from_coeffs(out)
    }

    pub fn make_monic(&self, ctx: &FieldContext) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => self.scale(&ctx.ext_inv(&lc).expect("nonzero"), ctx),
        }
    }

    /// Extended gcd: returns monic `d` and `(u, v)` with `u·self + v·other = d`.
    pub fn extended_gcd(&self, other: &Poly, ctx: &FieldContext) -> (Poly, Poly, Poly) {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut u0, mut u1) = (Poly::one(ctx), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1, ctx).expect("nonzero divisor");
            let nu = u0.sub(&q.mul(&u1, ctx), ctx);
            let nv = v0.sub(&q.mul(&v1, ctx), ctx);
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = nu;
            v0 = v1;
            v1 = nv;
        }
        let lc = r0.leading_coeff().expect("gcd of nonzero inputs");
        let lc_inv = ctx.ext_inv(&lc).expect("nonzero");
        (
            r0.scale(&lc_inv, ctx),
            u0.scale(&lc_inv, ctx),
            v0.scale(&lc_inv, ctx),
        )
    }

    /// Inverse of `self` modulo `modulus` (`deg modulus ≥ 1`).
    pub fn mod_inverse(&self, modulus: &Poly, ctx: &FieldContext) -> Result<Poly, PolyError> {
        let dm = modulus.degree().ok_or(PolyError::DivisionByZero)?;
        assert!(dm >= 1, "modulus must be nonconstant");
        if self.is_zero() {
            return Err(PolyError::NotCoprime);
        }
        let (d, u, _) = self.extended_gcd(modulus, ctx);
        if d.degree() != Some(0) {
            return Err(PolyError::NotCoprime);
        }
        u.rem(modulus, ctx)
    }

    /// Irreducibility over `F_{q^m}` by the Frobenius-power divisibility
    /// test: `f` of degree `d` is irreducible iff `x^(Q^d) ≡ x (mod f)` and
    /// `gcd(x^(Q^(d/l)) − x, f) = 1` for every prime `l | d`, where `Q = q^m`.
    pub fn is_irreducible(&self, ctx: &FieldContext) -> Result<bool, PolyError> {
        let d = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        if d == 0 {
            return Ok(false);
        }
        if d == 1 {
            return Ok(true);
        }
        let f = self.make_monic(ctx);
        let x = Poly::monomial(ctx.one(), 1);
        // x^Q mod f by square-and-multiply; higher Frobenius powers by
        // modular composition (exponents Q^j overflow u64 otherwise).
        let xq = x.pow_mod(ctx.order(), &f, ctx);
        let mut frob = vec![x.clone(), xq.clone()]; // frob[j] = x^(Q^j) mod f
        for j in 2..=d {
            let next = frob[j - 1].compose_mod(&xq, &f, ctx);
            frob.push(next);
        }
        if frob[d] != x {
            return Ok(false);
        }
        for l in prime_divisors(d as u64) {
            let j = d / l as usize;
            let g = frob[j].sub(&x, ctx);
            if g.is_zero() {
                return Ok(false);
            }
            let (gcd, _, _) = g.extended_gcd(&f, ctx);
            if gcd.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly, ctx: &FieldContext) -> Poly {
        let mut base = self.rem(modulus, ctx).expect("nonzero modulus");
        let mut acc = Poly::one(ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus, ctx);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus, ctx);
            }
        }
        acc
    }

    /// `self(g) mod modulus` by Horner.
    pub fn compose_mod(&self, g: &Poly, modulus: &Poly, ctx: &FieldContext) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_mod(g, modulus, ctx);
            acc = acc.add(&Poly::constant(*c), ctx);
        }
        acc.rem(modulus, ctx).expect("nonzero modulus")
    }

    /// Square-free iff `gcd(f, f′)` is constant; a vanishing derivative of a
    /// nonconstant polynomial (a perfect p-th power) counts as not square-free.
    pub fn is_square_free(&self, ctx: &FieldContext) -> Result<bool, PolyError> {
        let d = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        if d == 0 {
            return Ok(true);
        }
        let fd = self.formal_derivative(ctx);
        if fd.is_zero() {
            return Ok(false);
        }
        let (g, _, _) = self.extended_gcd(&fd, ctx);
        Ok(g.degree() == Some(0))
    }

    /// All `(index, locator)` pairs with `f(locator) = 0`, ascending index.
    pub fn roots_in_set(&self, locators: &[Ext], ctx: &FieldContext) -> Vec<(usize, Ext)> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        locators
            .iter()
            .enumerate()
            .filter(|(_, a)| self.eval(a, ctx).is_zero())
            .map(|(i, a)| (i, *a))
            .collect()
    }

    pub fn random_monic(degree: usize, ctx: &FieldContext, rng: &mut impl RngCore) -> Poly {
        let mut coeffs: Vec<Ext> = (0..degree).map(|_| ctx.random_ext(rng)).collect();
        coeffs.push(ctx.one());
        Poly::from_coeffs(coeffs)
    }

    pub fn random_monic_irreducible(
        degree: usize,
        ctx: &FieldContext,
        rng: &mut impl RngCore,
    ) -> Result<Poly, PolyError> {
        assert!(degree >= 1);
        // A random monic of degree d is irreducible with probability ~1/d.
        for _ in 0..200 * degree.max(4) {
            let f = Poly::random_monic(degree, ctx, rng);
            if f.is_irreducible(ctx)? {
                return Ok(f);
            }
        }
        Err(PolyError::RetryBudgetExceeded)
    }

    pub fn random_monic_square_free(
        degree: usize,
        ctx: &FieldContext,
        rng: &mut impl RngCore,
    ) -> Result<Poly, PolyError> {
        assert!(degree >= 1);
        for _ in 0..1000 {
            let f = Poly::random_monic(degree, ctx, rng);
            if f.is_square_free(ctx)? {
                return Ok(f);
            }
        }
        Err(PolyError::RetryBudgetExceeded)
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
