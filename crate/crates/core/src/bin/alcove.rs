//! Command-line surface for the alcove-path library.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use alcove_path::alcove::build_reduced_chain;
use alcove_path::chevalley::{chevalley_coeffs, dual_coeffs, monk, parabolic_coeffs};
use alcove_path::error::Error;
use alcove_path::json::{self, parse_weight, parse_word};
use alcove_path::root_system::{to_bracket, Family, RootSystem};
use alcove_path::{bench, characters, quantum, svg, verify, Weight};

#[derive(Parser)]
#[command(
    name = "alcove",
    version,
    about = "Alcove walks, Chevalley/Monk coefficients, and Demazure characters \
             in equivariant K-theory of flag varieties",
    after_help = "Weights are comma-separated integers in fundamental coordinates \
                  (fewer than rank entries are zero-padded). For family A, rank+1 \
                  entries (or --bracket) are read as bracket coordinates. Reduced \
                  words are comma-separated 1-based letters; `e` is the identity. \
                  ALCOVE_THREADS caps the parallelism of the coefficient walks."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct SysArgs {
    /// Root-system family: A, B, C, D or G.
    #[arg(long)]
    family: String,
    /// Rank (G requires 2).
    #[arg(long)]
    rank: usize,
}

impl SysArgs {
    fn build(&self) -> Result<RootSystem, Error> {
        let family: Family = self.family.parse()?;
        RootSystem::build(family, self.rank)
    }
}

#[derive(Args)]
struct OutArgs {
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the root-system descriptor as JSON.
    Rootsystem {
        #[command(flatten)]
        sys: SysArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Build the reduced λ-chain.
    Chain {
        #[command(flatten)]
        sys: SysArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Read the weight in type-A bracket coordinates.
        #[arg(long)]
        bracket: bool,
        #[arg(long)]
        json: bool,
        /// Draw the walk instead (rank-2 systems).
        #[arg(long)]
        svg: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Expand e^λ·`[O_u]` into the coefficient table.
    Chevalley {
        #[command(flatten)]
        sys: SysArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        bracket: bool,
        /// Reduced word for u, e.g. 2,1 (default: identity).
        #[arg(long, default_value = "e")]
        u: String,
        /// Restrict to the parabolic quotient with these simple indices.
        #[arg(long, value_delimiter = ',')]
        parabolic: Option<Vec<usize>>,
        /// Compute the dual coefficients instead.
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Expand the divisor product `[O_{w∘ s_i}]`·`[O_u]`.
    Monk {
        #[command(flatten)]
        sys: SysArgs,
        /// Simple index i (1-based).
        #[arg(long)]
        i: usize,
        #[arg(long, default_value = "e")]
        u: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Irreducible or Demazure character of a dominant weight.
    Character {
        #[command(flatten)]
        sys: SysArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        bracket: bool,
        /// Reduced word for the Demazure element (default: longest element).
        #[arg(long)]
        demazure: Option<String>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// The candidate quantum divisor product `[s_i] ∘ [w]`.
    #[command(name = "quantum-monk")]
    QuantumMonk {
        #[command(flatten)]
        sys: SysArgs,
        /// Simple index i (1-based).
        #[arg(long)]
        i: usize,
        #[arg(long, default_value = "e")]
        w: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run the full verification suite.
    Verify,
    /// Time the character model against the operator oracle (CSV).
    Bench {
        #[command(flatten)]
        out: OutArgs,
    },
    /// Draw the reduced λ-chain walk as SVG (rank-2 systems).
    Plot {
        #[command(flatten)]
        sys: SysArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        bracket: bool,
        /// Accepted for symmetry with `chain`; plot always emits SVG.
        #[arg(long)]
        svg: bool,
        #[command(flatten)]
        out: OutArgs,
    },
}

fn emit(out: &OutArgs, text: &str) -> Result<(), Error> {
    match &out.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| {
                    if text.ends_with('\n') {
                        Ok(())
                    } else {
                        stdout.write_all(b"\n")
                    }
                })
                .map_err(|e| Error::InvalidInput(format!("cannot write to stdout: {e}")))
        }
    }
}

fn simple_index(rs: &RootSystem, i: usize) -> Result<usize, Error> {
    if i == 0 || i > rs.rank() {
        return Err(Error::InvalidInput(format!(
            "simple index {i} out of range 1..={}",
            rs.rank()
        )));
    }
    Ok(i - 1)
}

fn weight_label(rs: &RootSystem, mu: &Weight) -> String {
    if rs.family() == Family::A {
        format!("{:?}", to_bracket(mu))
    } else {
        format!("{:?}", mu.0)
    }
}

fn kclass_text(rs: &RootSystem, c: &alcove_path::operators::KClass) -> String {
    let mut lines = Vec::new();
    for (w, p) in c.iter() {
        let word = json::word_json(rs, w);
        let name = if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        lines.push(format!("[O_{name}] * ({p})"));
    }
    if lines.is_empty() {
        lines.push("0".into());
    }
    lines.join("\n")
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Rootsystem { sys, out } => {
            let rs = sys.build()?;
            let text = serde_json::to_string_pretty(&json::root_system_json(&rs))
                .expect("serialization is infallible");
            emit(&out, &text)
        }
        Cmd::Chain {
            sys,
            weight,
            bracket,
            json: as_json,
            svg: as_svg,
            out,
        } => {
            let rs = sys.build()?;
            let lambda = parse_weight(&rs, &weight, bracket)?;
            let chain = build_reduced_chain(&rs, &lambda)?;
            if as_svg {
                return emit(&out, &svg::render_chain(&rs, &chain)?);
            }
            if as_json {
                let text = serde_json::to_string_pretty(&json::chain_json(&rs, &chain))
                    .expect("serialization is infallible");
                return emit(&out, &text);
            }
            let mut lines = vec![format!(
                "reduced chain for λ = {:?} (length {})",
                lambda.0,
                chain.len()
            )];
            for (b, r) in chain.roots.iter().zip(&chain.reflections) {
                lines.push(format!(
                    "  root {:?}   reflection (α = {:?}, k = {})",
                    rs.signed_root_coords(*b),
                    rs.root(r.root).root_coords,
                    r.level
                ));
            }
            emit(&out, &lines.join("\n"))
        }
        Cmd::Chevalley {
            sys,
            weight,
            bracket,
            u,
            parabolic,
            dual,
            json: as_json,
            out,
        } => {
            let rs = sys.build()?;
            let lambda = parse_weight(&rs, &weight, bracket)?;
            let u = parse_word(&rs, &u)?;
            let table = if dual {
                dual_coeffs(&rs, &lambda, &u)?
            } else if let Some(par) = parabolic {
                let zero_based: Vec<usize> = par
                    .iter()
                    .map(|&j| simple_index(&rs, j))
                    .collect::<Result<_, _>>()?;
                parabolic_coeffs(&rs, &lambda, &u, &zero_based)?
            } else {
                chevalley_coeffs(&rs, &build_reduced_chain(&rs, &lambda)?, &u)
            };
            let tj = json::table_json(&rs, &table);
            if as_json {
                let text = serde_json::to_string_pretty(&tj).expect("serialization is infallible");
                return emit(&out, &text);
            }
            let mut lines = vec![format!(
                "{} table for λ = {:?}, u = {:?} ({} entries)",
                if dual {
                    "dual coefficient"
                } else {
                    "coefficient"
                },
                lambda.0,
                tj.u,
                tj.entries.len()
            )];
            for e in &tj.entries {
                lines.push(format!(
                    "  w = {:?}  μ = {}  coeff = {}",
                    e.w,
                    weight_label(&rs, &Weight(e.mu.clone())),
                    e.coeff
                ));
            }
            emit(&out, &lines.join("\n"))
        }
        Cmd::Monk {
            sys,
            i,
            u,
            json: as_json,
            out,
        } => {
            let rs = sys.build()?;
            let idx = simple_index(&rs, i)?;
            let u = parse_word(&rs, &u)?;
            let product = monk(&rs, idx, &u)?;
            if as_json {
                let text = serde_json::to_string_pretty(&json::kclass_json(&rs, &product))
                    .expect("serialization is infallible");
                return emit(&out, &text);
            }
            emit(&out, &kclass_text(&rs, &product))
        }
        Cmd::Character {
            sys,
            weight,
            bracket,
            demazure,
            json: as_json,
            out,
        } => {
            let rs = sys.build()?;
            let lambda = parse_weight(&rs, &weight, bracket)?;
            let dem = demazure.map(|w| parse_word(&rs, &w)).transpose()?;
            let ch = match &dem {
                Some(w) => characters::demazure_character(&rs, &lambda, w)?,
                None => characters::irreducible_character(&rs, &lambda)?,
            };
            if as_json {
                let text = serde_json::to_string_pretty(&json::character_json(
                    &rs,
                    &lambda,
                    dem.as_ref(),
                    &ch,
                ))
                .expect("serialization is infallible");
                return emit(&out, &text);
            }
            let mut lines = vec![format!(
                "character of λ = {:?}{} — {} weights, mass {}",
                lambda.0,
                dem.as_ref()
                    .map(|w| format!(", Demazure word {:?}", json::word_json(&rs, w)))
                    .unwrap_or_default(),
                ch.num_weights(),
                ch.total_mass()
            )];
            for (mu, m) in ch.iter() {
                lines.push(format!("  {}  multiplicity {}", weight_label(&rs, mu), m));
            }
            emit(&out, &lines.join("\n"))
        }
        Cmd::QuantumMonk {
            sys,
            i,
            w,
            json: as_json,
            out,
        } => {
            let rs = sys.build()?;
            let idx = simple_index(&rs, i)?;
            let w = parse_word(&rs, &w)?;
            let product = quantum::conjectural_monk(&rs, idx, &w)?;
            if as_json {
                let text = serde_json::to_string_pretty(&json::qclass_json(&rs, &product))
                    .expect("serialization is infallible");
                return emit(&out, &text);
            }
            let mut lines = Vec::new();
            for (v, p) in product.iter() {
                lines.push(format!("[{:?}] * ({p})", json::word_json(&rs, v)));
            }
            if lines.is_empty() {
                lines.push("0".into());
            }
            lines.push(format!(
                "q-positive: {}",
                if product.is_q_positive() { "yes" } else { "no" }
            ));
            emit(&out, &lines.join("\n"))
        }
        Cmd::Verify => {
            let checks = verify::run_all();
            let mut all_pass = true;
            for c in &checks {
                println!(
                    "{:<28} {}  {}",
                    c.name,
                    if c.pass { "PASS" } else { "FAIL" },
                    c.detail
                );
                all_pass &= c.pass;
            }
            if all_pass {
                Ok(())
            } else {
                Err(Error::Internal("verification suite failed".into()))
            }
        }
        Cmd::Bench { out } => {
            let rows = bench::run()?;
            emit(&out, &bench::to_csv(&rows))
        }
        Cmd::Plot {
            sys,
            weight,
            bracket,
            svg: _,
            out,
        } => {
            let rs = sys.build()?;
            let lambda = parse_weight(&rs, &weight, bracket)?;
            let chain = build_reduced_chain(&rs, &lambda)?;
            emit(&out, &svg::render_chain(&rs, &chain)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::InvalidInput(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Error::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
