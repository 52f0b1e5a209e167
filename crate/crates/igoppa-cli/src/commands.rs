//! One function per subcommand; all output goes through stable JSON/CSV
//! formats and a summary line on stdout.

use std::path::Path;
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::json;

use igoppa::field::FieldContext;
use igoppa::goppa::{compare_interleaving_vs_extension, GoppaCode, GoppaCodeSpec};
use igoppa::mceliece::{
    d_e_threshold, decrypt, encrypt, keygen, preset_params, public_key_bytes, validate_params,
    CryptoError, PresetMethod,
};
use igoppa::rng::{rng_from_seed, RNG_ID};
use igoppa::sim::{run_failure_sweep, sweep_to_csv, TrialConfig};

use crate::error::AppError;
use crate::formats::{
    write_json, CiphertextFile, MessageFile, OutcomeFile, PrivateKeyFile, PublicKeyFile,
    SweepMetadata,
};

/// Seed priority: explicit flag, then the IGOPPA_SEED variable, then 0.
/// The chosen seed and its source are echoed into output metadata.
pub fn resolve_seed(flag: Option<u64>) -> Result<(u64, &'static str), AppError> {
    if let Some(s) = flag {
        return Ok((s, "flag"));
    }
    match std::env::var("IGOPPA_SEED") {
        Ok(v) => {
            let s = v.parse::<u64>().map_err(|_| {
                AppError::usage(format!("IGOPPA_SEED is not a 64-bit integer: {v}"))
            })?;
            Ok((s, "env"))
        }
        Err(_) => Ok((0, "default")),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_keygen(
    q: u64,
    m: usize,
    deg_b: usize,
    n: usize,
    ell: usize,
    seed: Option<u64>,
    out_pub: &Path,
    out_priv: &Path,
    require_gain: bool,
) -> Result<(), AppError> {
    let (seed, seed_source) = resolve_seed(seed)?;
    if ell == 0 || deg_b == 0 {
        return Err(AppError::usage("ell and deg-b must be positive"));
    }
    if require_gain {
        let r = (q - 1) * deg_b as u64;
        let report = validate_params(q, ell, r, d_e_threshold(q, r) + 1);
        if !report.improvement_possible {
            let reason = if report.binary_no_gain {
                "binary interleaving cannot increase the work factor for any ell >= 2"
            } else {
                "no error code above the distance threshold fits the burst budget"
            };
            return Err(AppError::usage(format!(
                "--require-gain: {reason} (q={q}, ell={ell}, r={r}, threshold={})",
                report.d_e_threshold
            )));
        }
    }
    let (pk, sk) = keygen(q, m, deg_b, n, ell, seed)?;
    write_json(out_pub, &PublicKeyFile::from_key(&pk))?;
    write_json(out_priv, &PrivateKeyFile::from_key(&sk))?;
    let summary = json!({
        "n": pk.n(),
        "k": pk.k(),
        "r": pk.r(),
        "t_pub": pk.t_pub(),
        "key_bytes": public_key_bytes(q, pk.n() as u64, pk.k() as u64),
        "seed": seed,
        "seed_source": seed_source,
    });
    println!("{summary}");
    Ok(())
}

pub fn cmd_encrypt(
    pub_path: &Path,
    msg_path: &Path,
    out: &Path,
    seed: Option<u64>,
) -> Result<(), AppError> {
    let (seed, seed_source) = resolve_seed(seed)?;
    let pk = crate::formats::read_json::<PublicKeyFile>(pub_path)?.rebuild()?;
    let msg_file: MessageFile = crate::formats::read_json(msg_path)?;
    if msg_file.ell != pk.ell() || msg_file.k != pk.k() {
        return Err(AppError::usage(format!(
            "message must be {} x {} for this key, got {} x {}",
            pk.ell(),
            pk.k(),
            msg_file.ell,
            msg_file.k
        )));
    }
    let msg = msg_file.to_matrix(pk.q())?;
    let mut rng = rng_from_seed(seed);
    let ct = encrypt(&pk, &msg, &mut rng)?;
    write_json(out, &CiphertextFile::from_matrix(&ct.matrix))?;
    println!(
        "{}",
        json!({"status": "ok", "seed": seed, "seed_source": seed_source})
    );
    Ok(())
}

pub fn cmd_decrypt(priv_path: &Path, ct_path: &Path, out: &Path) -> Result<(), AppError> {
    let sk = crate::formats::read_json::<PrivateKeyFile>(priv_path)?.rebuild()?;
    let ct_file: CiphertextFile = crate::formats::read_json(ct_path)?;
    let ct = igoppa::mceliece::Ciphertext {
        matrix: ct_file.to_matrix(sk.code().ctx().q())?,
    };
    match decrypt(&sk, &ct) {
        Ok(msg) => {
            write_json(out, &MessageFile::from_matrix(&msg))?;
            println!("{}", json!({"status": "ok"}));
            Ok(())
        }
        Err(CryptoError::DecryptFailed(stage)) => {
            let outcome = OutcomeFile {
                status: "failure".into(),
                stage: Some(stage.as_str().into()),
                support: None,
                error: None,
            };
            println!("{}", serde_json::to_string(&outcome).expect("serializable"));
            Err(AppError::Decrypt(format!("decoder stage {stage}")))
        }
        Err(e) => Err(e.into()),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_simulate(
    q: u64,
    m: usize,
    deg_b: usize,
    n: usize,
    ell: usize,
    t_min: usize,
    t_max: usize,
    trials: u64,
    seed: Option<u64>,
    csv_path: &Path,
    full_rank: bool,
    random_codewords: bool,
) -> Result<(), AppError> {
    let (seed, seed_source) = resolve_seed(seed)?;
    if trials == 0 {
        return Err(AppError::usage("--trials must be at least 1"));
    }
    if t_min > t_max || t_max > n {
        return Err(AppError::usage(format!(
            "invalid weight range {t_min}..={t_max} for n = {n}"
        )));
    }
    let (p, s) = igoppa::mceliece::prime_power_split(q)?;
    let ctx = Arc::new(FieldContext::new(p, s, m, seed)?);
    let mut rng = rng_from_seed(seed ^ 0x51_3D);
    let spec = GoppaCodeSpec::random(ctx, deg_b, n, &mut rng, true)?;
    let code = GoppaCode::build(spec)?;

    let cfg = TrialConfig {
        ell,
        trials,
        master_seed: seed,
        full_rank_only: full_rank,
        random_codewords,
    };
    let t_values: Vec<usize> = (t_min..=t_max).collect();
    let result = run_failure_sweep(&code, &cfg, &t_values)?;

    std::fs::write(csv_path, sweep_to_csv(&result))
        .map_err(|e| AppError::io(&format!("writing {}", csv_path.display()), e))?;

    let meta = SweepMetadata {
        q,
        m,
        deg_b,
        n,
        ell,
        trials,
        t_min,
        t_max,
        seed,
        seed_source: seed_source.into(),
        rng_id: RNG_ID.into(),
        full_rank,
        random_codewords,
        timestamp_unix: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
    };
    let meta_path = csv_path.with_extension("csv.meta.json");
    write_json(&meta_path, &meta)?;

    println!(
        "code [{}, {}] over F_{q}, ell={ell}, {} trials per point",
        code.n(),
        code.k(),
        trials
    );
    println!(
        "{:>4} {:>8} {:>9} {:>15} {:>10} {:>10}",
        "t", "trials", "failures", "miscorrections", "p_f", "ci95"
    );
    for rec in &result.records {
        println!(
            "{:>4} {:>8} {:>9} {:>15} {:>10.6} {:>10.6}",
            rec.t,
            rec.trials,
            rec.declared_failures,
            rec.miscorrections,
            rec.failure_probability(),
            rec.ci95_half_width()
        );
    }
    Ok(())
}

pub fn cmd_params_preset(security: u32, q: u64, method: &str) -> Result<(), AppError> {
    let method_enum = match method {
        "unique" | "ud" => PresetMethod::UniqueDecoding,
        "interleaved" | "int" => PresetMethod::Interleaved,
        other => {
            return Err(AppError::usage(format!(
                "unknown method {other:?} (expected 'unique' or 'interleaved')"
            )))
        }
    };
    let preset =
        preset_params(security, q, method_enum).map_err(|e| AppError::usage(e.to_string()))?;
    let computed = public_key_bytes(preset.q, preset.n, preset.k);
    let report = json!({
        "security_bits": preset.security_bits,
        "q": preset.q,
        "m": preset.m,
        "method": method,
        "r": preset.r,
        "n": preset.n,
        "k": preset.k,
        "t_unique": preset.t_unique,
        "interleaved": preset.interleaved.map(|(ell, t_pub, d_e)| json!({
            "ell": ell, "t_pub": t_pub, "d_e": d_e,
        })),
        "published_key_bytes": preset.published_key_bytes,
        "computed_key_bytes": computed,
        "published_bytes_suspect": preset.published_bytes_suspect,
    });
    println!("{report}");
    Ok(())
}

pub fn cmd_params_validate(q: u64, ell: usize, r: u64, d_e_target: u64) -> Result<(), AppError> {
    if q < 2 || ell == 0 || r == 0 {
        return Err(AppError::usage("q >= 2, ell >= 1 and r >= 1 required"));
    }
    let rep = validate_params(q, ell, r, d_e_target);
    let report = json!({
        "q": rep.q,
        "ell": rep.ell,
        "r": rep.r,
        "t_pub": rep.t_pub,
        "d_e_threshold": rep.d_e_threshold,
        "d_e_target": rep.d_e_target,
        "target_exceeds_threshold": rep.target_exceeds_threshold,
        "griesmer_feasible": rep.griesmer_feasible,
        "binary_no_gain": rep.binary_no_gain,
        "improvement_possible": rep.improvement_possible,
    });
    println!("{report}");
    Ok(())
}

pub fn cmd_compare(q: u64, m: usize, ell: usize, r: usize, n: usize) -> Result<(), AppError> {
    let rep = compare_interleaving_vs_extension(q, m, ell, r, n)?;
    let report = json!({
        "q": rep.q,
        "m": rep.m,
        "ell": rep.ell,
        "r_interleaved": rep.r_interleaved,
        "r_extension": rep.r_extension,
        "rate_interleaved": rep.rate_interleaved,
        "rate_extension": rep.rate_extension,
        "d_interleaved": rep.d_interleaved,
        "d_extension": rep.d_extension,
        "t_interleaved": rep.t_interleaved,
        "t_extension": rep.t_extension,
        "verdict": rep.verdict.as_str(),
    });
    println!("{report}");
    Ok(())
}
