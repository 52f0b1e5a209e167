//! On-disk JSON formats: keys, messages, ciphertexts, decode outcomes, and
//! the simulation metadata sidecar.
//!
//! Matrices are arrays of integer-coded symbols; field elements are
//! coefficient arrays, little-endian in the degree. Everything a key file
//! stores is validated and re-derived on load: generator and parity
//! matrices never come from the file.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use igoppa::decoder::DecodeOutcome;
use igoppa::field::{FieldContext, Symbol};
use igoppa::goppa::{GoppaCode, GoppaCodeSpec};
use igoppa::matrix::FqMatrix;
use igoppa::mceliece::{PrivateKey, PublicKey};
use igoppa::poly::Poly;

use crate::error::AppError;

/// Canonical rendering: compact JSON plus a trailing newline, so that a
/// decrypt of an encrypt restores the message file byte for byte.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), AppError> {
    fs::write(path, to_canonical_json(value))
        .map_err(|e| AppError::io(&format!("writing {}", path.display()), e))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::io(&format!("reading {}", path.display()), e))?;
    serde_json::from_str(&text)
        .map_err(|e| AppError::usage(format!("malformed {}: {e}", path.display())))
}

#[derive(Serialize, Deserialize, Clone)]
pub struct FieldContextFile {
    pub p: u64,
    pub s: usize,
    pub m: usize,
    pub base_modulus: Vec<u64>,
    pub ext_modulus: Vec<u64>,
}

impl FieldContextFile {
    pub fn from_context(ctx: &FieldContext) -> FieldContextFile {
        FieldContextFile {
            p: ctx.p(),
            s: ctx.s(),
            m: ctx.m(),
            base_modulus: ctx.base_modulus().to_vec(),
            ext_modulus: ctx.ext_modulus().iter().map(|&c| c as u64).collect(),
        }
    }

    pub fn rebuild(&self) -> Result<FieldContext, AppError> {
        Ok(FieldContext::from_parts(
            self.p,
            self.s,
            self.m,
            &self.base_modulus,
            &self.ext_modulus,
        )?)
    }
}

fn matrix_to_rows(m: &FqMatrix) -> Vec<Vec<Symbol>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn rows_to_matrix(rows: &[Vec<Symbol>], q: u64, what: &str) -> Result<FqMatrix, AppError> {
    if rows.is_empty() {
        return Err(AppError::usage(format!("{what}: empty matrix")));
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(AppError::usage(format!("{what}: ragged rows")));
    }
    if rows.iter().flatten().any(|&v| v as u64 >= q) {
        return Err(AppError::usage(format!(
            "{what}: symbol out of range for F_{q}"
        )));
    }
    Ok(FqMatrix::from_rows(rows.to_vec()))
}

/// Public key file: `F_q` descriptor plus the obfuscated generator.
#[derive(Serialize, Deserialize)]
pub struct PublicKeyFile {
    pub p: u64,
    pub s: usize,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub ell: usize,
    pub t_pub: usize,
    pub r: usize,
    pub g_pub: Vec<Vec<Symbol>>,
}

impl PublicKeyFile {
    pub fn from_key(pk: &PublicKey) -> PublicKeyFile {
        let ctx = pk.ctx_q();
        PublicKeyFile {
            p: ctx.p(),
            s: ctx.s(),
            q: pk.q(),
            n: pk.n(),
            k: pk.k(),
            ell: pk.ell(),
            t_pub: pk.t_pub(),
            r: pk.r(),
            g_pub: matrix_to_rows(pk.generator()),
        }
    }

    pub fn rebuild(&self) -> Result<PublicKey, AppError> {
        let g = rows_to_matrix(&self.g_pub, self.q, "public key generator")?;
        if g.rows() != self.k || g.cols() != self.n {
            return Err(AppError::usage("public key dimensions do not match header"));
        }
        Ok(PublicKey::new(self.q, g, self.t_pub, self.ell, self.r)?)
    }
}

/// Private key file: the code parameters (context, locators, `b`), the
/// scrambler, the permutation, and the interleaving order.
#[derive(Serialize, Deserialize)]
pub struct PrivateKeyFile {
    pub context: FieldContextFile,
    pub locator_indices: Vec<u64>,
    /// Coefficients of `b`, constant term first; each element is its
    /// coefficient array over `F_q`, little-endian in the degree.
    pub b: Vec<Vec<u64>>,
    pub scrambler: Vec<Vec<Symbol>>,
    pub permutation: Vec<usize>,
    pub ell: usize,
    pub t_pub: usize,
}

impl PrivateKeyFile {
    pub fn from_key(sk: &PrivateKey) -> PrivateKeyFile {
        let code = sk.code();
        let ctx = code.ctx();
        let b = code
            .spec()
            .b()
            .coeffs()
            .iter()
            .map(|c| (0..ctx.m()).map(|i| c.coeff(i) as u64).collect())
            .collect();
        PrivateKeyFile {
            context: FieldContextFile::from_context(ctx),
            locator_indices: code.spec().locator_indices(),
            b,
            scrambler: matrix_to_rows(sk.scrambler()),
            permutation: sk.permutation().to_vec(),
            ell: sk.ell(),
            t_pub: sk.t_pub(),
        }
    }

    pub fn rebuild(&self) -> Result<PrivateKey, AppError> {
        let ctx = Arc::new(self.context.rebuild()?);
        let order = ctx.order();
        let mut locators = Vec::with_capacity(self.locator_indices.len());
        for &idx in &self.locator_indices {
            if idx >= order {
                return Err(AppError::usage("locator index out of range"));
            }
            locators.push(ctx.index_to_ext(idx));
        }
        let mut coeffs = Vec::with_capacity(self.b.len());
        for c in &self.b {
            coeffs.push(ctx.ext_from_coeffs(c)?);
        }
        let b = Poly::from_coeffs(coeffs);
        let spec = GoppaCodeSpec::new(ctx.clone(), locators, b)?;
        let code = GoppaCode::build(spec)?;
        let scrambler = rows_to_matrix(&self.scrambler, ctx.q(), "scrambler")?;
        let sk = PrivateKey::assemble(code, scrambler, self.permutation.clone(), self.ell)?;
        if sk.t_pub() != self.t_pub {
            return Err(AppError::usage(
                "stored t_pub disagrees with the rebuilt code",
            ));
        }
        Ok(sk)
    }
}

/// Message file: raw symbol rows, `ℓ × k`.
#[derive(Serialize, Deserialize)]
pub struct MessageFile {
    pub ell: usize,
    pub k: usize,
    pub rows: Vec<Vec<Symbol>>,
}

impl MessageFile {
    pub fn from_matrix(m: &FqMatrix) -> MessageFile {
        MessageFile {
            ell: m.rows(),
            k: m.cols(),
            rows: matrix_to_rows(m),
        }
    }

    pub fn to_matrix(&self, q: u64) -> Result<FqMatrix, AppError> {
        let m = rows_to_matrix(&self.rows, q, "message")?;
        if m.rows() != self.ell || m.cols() != self.k {
            return Err(AppError::usage("message dimensions do not match header"));
        }
        Ok(m)
    }
}

/// Ciphertext file: `ℓ × n` symbol matrix.
#[derive(Serialize, Deserialize)]
pub struct CiphertextFile {
    pub ell: usize,
    pub n: usize,
    pub rows: Vec<Vec<Symbol>>,
}

impl CiphertextFile {
    pub fn from_matrix(m: &FqMatrix) -> CiphertextFile {
        CiphertextFile {
            ell: m.rows(),
            n: m.cols(),
            rows: matrix_to_rows(m),
        }
    }

    pub fn to_matrix(&self, q: u64) -> Result<FqMatrix, AppError> {
        let m = rows_to_matrix(&self.rows, q, "ciphertext")?;
        if m.rows() != self.ell || m.cols() != self.n {
            return Err(AppError::usage("ciphertext dimensions do not match header"));
        }
        Ok(m)
    }
}

/// JSON view of a decode outcome: status, stage tag, support, error matrix.
#[derive(Serialize, Deserialize)]
pub struct OutcomeFile {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stage: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Vec<Vec<Symbol>>>,
}

impl OutcomeFile {
    pub fn from_outcome(outcome: &DecodeOutcome) -> OutcomeFile {
        match outcome {
            DecodeOutcome::Decoded { error, support, .. } => OutcomeFile {
                status: "decoded".into(),
                stage: None,
                support: Some(support.clone()),
                error: Some(matrix_to_rows(error)),
            },
            DecodeOutcome::Failure(stage) => OutcomeFile {
                status: "failure".into(),
                stage: Some(stage.as_str().into()),
                support: None,
                error: None,
            },
        }
    }
}

/// Metadata sidecar written next to every sweep CSV.
#[derive(Serialize, Deserialize)]
pub struct SweepMetadata {
    pub q: u64,
    pub m: usize,
    pub deg_b: usize,
    pub n: usize,
    pub ell: usize,
    pub trials: u64,
    pub t_min: usize,
    pub t_max: usize,
    pub seed: u64,
    pub seed_source: String,
    pub rng_id: String,
    pub full_rank: bool,
    pub random_codewords: bool,
    pub timestamp_unix: u64,
}
