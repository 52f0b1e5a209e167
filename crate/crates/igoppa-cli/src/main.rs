//! `igoppa` — interleaved wild Goppa codes from the command line.
//!
//! Subcommands: keygen, encrypt, decrypt, simulate, params, compare.
//! Exit codes: 0 success, 1 I/O failure, 2 usage or parameter error,
//! 3 decryption/decoding failure. All randomized commands take `--seed`;
//! without it the IGOPPA_SEED environment variable applies, then 0, and
//! the choice is echoed into the output metadata.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use igoppa_cli::{commands, error};

#[derive(Parser)]
#[command(
    name = "igoppa",
    version,
    about = "Interleaved wild Goppa codes: key generation, encryption, burst-error simulation and parameter reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a key pair over a fresh wild Goppa code.
    Keygen {
        /// Code symbol field size (a prime power).
        #[arg(long)]
        q: u64,
        /// Extension degree of the locator field over F_q.
        #[arg(long)]
        m: usize,
        /// Degree of the square-free polynomial b (the Goppa polynomial is b^q).
        #[arg(long = "deg-b")]
        deg_b: usize,
        /// Code length (number of locators).
        #[arg(long)]
        n: usize,
        /// Interleaving order.
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long = "out-pub")]
        out_pub: PathBuf,
        #[arg(long = "out-priv")]
        out_priv: PathBuf,
        /// Refuse parameter sets where interleaving cannot beat unique decoding.
        #[arg(long = "require-gain")]
        require_gain: bool,
    },
    /// Encrypt a message matrix under a public key.
    Encrypt {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long)]
        msg: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decrypt a ciphertext with a private key.
    Decrypt {
        #[arg(long = "priv")]
        private: PathBuf,
        #[arg(long)]
        ct: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Monte-Carlo sweep of the decoding failure probability.
    Simulate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long = "deg-b")]
        deg_b: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long = "t-min")]
        t_min: usize,
        #[arg(long = "t-max")]
        t_max: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Output CSV path; a .meta.json sidecar is written next to it.
        #[arg(long)]
        csv: PathBuf,
        /// Condition error samples on full row rank.
        #[arg(long = "full-rank")]
        full_rank: bool,
        /// Encode random codewords per trial instead of decoding bare errors.
        #[arg(long = "random-codewords")]
        random_codewords: bool,
    },
    /// Parameter reports: preset table rows or custom validation.
    Params {
        /// Preset mode: security level in bits (128 or 256).
        #[arg(long)]
        security: Option<u32>,
        #[arg(long)]
        q: u64,
        /// Preset mode: 'unique' or 'interleaved'.
        #[arg(long)]
        method: Option<String>,
        /// Validation mode: interleaving order.
        #[arg(long)]
        ell: Option<usize>,
        /// Validation mode: degree of b^(q-1).
        #[arg(long)]
        r: Option<u64>,
        /// Validation mode: error-code distance to test.
        #[arg(long = "d-e-target")]
        d_e_target: Option<u64>,
    },
    /// Radius/rate comparison: interleaving over F_q vs a code over F_{q^ell}.
    Compare {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        ell: usize,
        /// Goppa polynomial degree of the interleaved code.
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
}

fn run(cli: Cli) -> Result<(), error::AppError> {
    match cli.command {
        Command::Keygen {
            q,
            m,
            deg_b,
            n,
            ell,
            seed,
            out_pub,
            out_priv,
            require_gain,
        } => commands::cmd_keygen(q, m, deg_b, n, ell, seed, &out_pub, &out_priv, require_gain),
        Command::Encrypt {
            public,
            msg,
            out,
            seed,
        } => commands::cmd_encrypt(&public, &msg, &out, seed),
        Command::Decrypt { private, ct, out } => commands::cmd_decrypt(&private, &ct, &out),
        Command::Simulate {
            q,
            m,
            deg_b,
            n,
            ell,
            t_min,
            t_max,
            trials,
            seed,
            csv,
            full_rank,
            random_codewords,
        } => commands::cmd_simulate(
            q,
            m,
            deg_b,
            n,
            ell,
            t_min,
            t_max,
            trials,
            seed,
            &csv,
            full_rank,
            random_codewords,
        ),
        Command::Params {
            security,
            q,
            method,
            ell,
            r,
            d_e_target,
        } => match (security, ell) {
            (Some(sec), None) => {
                let method = method.ok_or_else(|| {
                    error::AppError::usage("preset mode needs --method unique|interleaved")
                })?;
                commands::cmd_params_preset(sec, q, &method)
            }
            (None, Some(ell)) => {
                let r = r.ok_or_else(|| error::AppError::usage("validation mode needs --r"))?;
                let d = d_e_target
                    .ok_or_else(|| error::AppError::usage("validation mode needs --d-e-target"))?;
                commands::cmd_params_validate(q, ell, r, d)
            }
            _ => Err(error::AppError::usage(
                "use either --security/--method (preset) or --ell/--r/--d-e-target (validation)",
            )),
        },
        Command::Compare { q, m, ell, r, n } => commands::cmd_compare(q, m, ell, r, n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
