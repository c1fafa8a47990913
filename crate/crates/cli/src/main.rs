use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use rees_cli::json::poset_to_json;
use rees_cli::source::load_poset;
use rees_cli::table;
use rees_cli::verify::{self, VerifyConfig};
use rees_core::derange::{
    cycles_to_diagram, diagram_to_cycles, derangement_count, signed_derangement_count, BarredWord,
    PermutationCycles,
};
use rees_core::homology::{
    basis_rank_check, check_c_sigma_iso, poset_homology, representation_dimension_check,
    OrderComplex,
};
use rees_core::labeling::{
    falling_count, falling_words, mobius_by_compositions, mobius_cube_closed_form,
    verify_r_labeling, ReesCubeChain,
};
use rees_core::rees::{rees_bounded, rees_minus};
use rees_core::weights::{check_duality, check_parity_divisibility, mobius_rees_formula};
use rees_core::zoo;

#[derive(Parser)]
#[command(
    name = "rees",
    about = "Rees products of graded posets: Möbius functions, falling chains, and homology",
    version
)]
struct Cli {
    /// Output format (csv applies to `table` only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a zoo poset as JSON
    Zoo {
        #[command(subcommand)]
        family: ZooFamily,
    },
    /// Rees product Rees(P, Q) (or Rees⁻ with --minus) as JSON
    Rees {
        /// P: a file path, `-`, or zoo:<family>:<n>
        p: String,
        /// Q: a file path, `-`, or zoo:<family>:<n>
        q: String,
        /// Remove P's top before the product
        #[arg(long)]
        minus: bool,
    },
    /// Möbius function mu(0̂, 1̂) of a poset
    Mobius(MobiusArgs),
    /// Weight-calculus commands
    Weights {
        #[command(subcommand)]
        cmd: WeightsCmd,
    },
    /// Falling words of Rees(cube_n, C_(n+1))
    Falling {
        n: u32,
        /// List the words instead of counting them
        #[arg(long, conflicts_with = "count")]
        list: bool,
        /// Print the count (the default)
        #[arg(long)]
        count: bool,
    },
    /// Möbius function of Rees(cube_n, C_(n+1)) by a chosen method
    MobiusCube {
        n: u32,
        #[arg(long, value_enum, default_value_t = CubeMethod::Closed)]
        method: CubeMethod,
    },
    /// Check the R-labeling on every interval of Rees(cube_n, C_(n+1))
    VerifyRlabel {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=4))]
        n: u32,
    },
    /// Derangement numbers
    Derange {
        n: u32,
        /// Signed derangements D±_n instead of D_n
        #[arg(long)]
        signed: bool,
    },
    /// The cycle/diagram bijection
    Bijection {
        #[command(subcommand)]
        cmd: BijectionCmd,
    },
    /// Reproduce the Möbius table (columns: n, D_n, (-1)^n mu, factorization)
    Table {
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        /// Allow n beyond 10
        #[arg(long)]
        slow: bool,
    },
    /// Homology computations
    Homology {
        #[command(subcommand)]
        cmd: HomologyCmd,
    },
    /// Representation-dimension identity for Rees(cube_n, C_(n+1))
    RepDim {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=7))]
        n: u32,
    },
    /// Run a verification suite; exit code 1 on any failure
    Verify {
        /// One of flag-weights, rlabel, falling, bijection, homology, rep-dim, all
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        /// Enable the slow tier (n = 4 homology)
        #[arg(long)]
        slow: bool,
        /// Seed for the randomized matrix spot-checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ZooFamily {
    Chain {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=64))]
        n: u32,
    },
    Tree {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=16))]
        t: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..=16))]
        n: u32,
    },
    Boolean {
        #[arg(value_parser = clap::value_parser!(u32).range(0..=16))]
        n: u32,
    },
    Cube {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=8))]
        n: u32,
    },
    Crosspoly {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=8))]
        n: u32,
    },
}

#[derive(Args)]
struct MobiusArgs {
    /// Poset reference: file path, `-` for stdin, or zoo:<family>:<n>
    poset_ref: Option<String>,
    /// Alternative to the positional reference
    #[arg(long, conflicts_with = "poset_ref")]
    poset: Option<String>,
    /// First take Rees(P, C_k)
    #[arg(long, value_name = "K")]
    rees_chain: Option<u32>,
    /// Use Rees⁻ instead of Rees when combined with --rees-chain
    #[arg(long, requires = "rees_chain")]
    minus: bool,
    #[arg(long, value_enum, default_value_t = MobiusMethod::Oracle)]
    method: MobiusMethod,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MobiusMethod {
    /// Interval recursion on the constructed poset
    Oracle,
    /// Zeta-matrix inversion cross-check
    Zeta,
    /// Closed-form sum (cube-chain family only)
    Closed,
    /// Composition sum (cube-chain family only)
    Compositions,
    /// Signed falling-chain count (cube-chain family only)
    Chains,
    /// Weight-calculus formula at t = 1 (requires --rees-chain rank(P))
    Formula,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CubeMethod {
    Oracle,
    Closed,
    Compositions,
    Chains,
}

#[derive(Subcommand)]
enum WeightsCmd {
    /// Möbius polynomial of Rees(P, T_(t, rank P)) in t
    Mu {
        poset_ref: String,
        /// Print the full polynomial
        #[arg(long, conflicts_with = "t")]
        t_poly: bool,
        /// Evaluate at an integer t
        #[arg(long)]
        t: Option<i64>,
    },
    /// Run the duality and divisibility checks for a poset
    Verify { poset_ref: String },
}

#[derive(Subcommand)]
enum BijectionCmd {
    /// Fixed-point-free permutation in cycle form to its barred word
    Forward { cycles: String },
    /// Barred word back to the permutation
    Inverse { word: String },
}

#[derive(Subcommand)]
enum HomologyCmd {
    /// Reduced homology of the order complex of Rees(cube_n, C_(n+1))
    ReesCube {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=4))]
        n: u32,
        /// Required for n = 4
        #[arg(long)]
        slow: bool,
        /// Dump the boundary matrix of the given dimension as sorted
        /// (row, col, value) triplets
        #[arg(long, value_name = "K")]
        dump_boundary: Option<usize>,
    },
    /// Check every C_sigma subposet (iso to the doubled cube; sphere homology)
    Csigma {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=3))]
        n: u32,
    },
    /// Fundamental-cycle basis check
    Basis {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=3))]
        n: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut failed = false;
    let output = match &cli.command {
        Command::Zoo { family } => {
            let p = match *family {
                ZooFamily::Chain { n } => zoo::chain(n),
                ZooFamily::Tree { t, n } => zoo::tary_tree(t, n),
                ZooFamily::Boolean { n } => zoo::boolean_algebra(n),
                ZooFamily::Cube { n } => zoo::cubical_lattice(n),
                ZooFamily::Crosspoly { n } => zoo::crosspolytope_lattice(n),
            };
            poset_to_json(&p)
        }
        Command::Rees { p, q, minus } => {
            let p = load_poset(p)?;
            let q = load_poset(q)?;
            let r = if *minus { rees_minus(&p, &q)? } else { rees_bounded(&p, &q)? };
            poset_to_json(&r)
        }
        Command::Mobius(args) => {
            let value = mobius_command(args)?;
            match cli.format {
                Format::Json => format!("{{\"mobius\": {value}}}"),
                _ => format!("{value}"),
            }
        }
        Command::Weights { cmd } => match cmd {
            WeightsCmd::Mu { poset_ref, t_poly, t } => {
                let p = load_poset(poset_ref)?;
                let poly = mobius_rees_formula(&p)?;
                if *t_poly || t.is_none() {
                    format!("{poly}")
                } else {
                    format!("{}", poly.eval(t.unwrap() as i128))
                }
            }
            WeightsCmd::Verify { poset_ref } => {
                let p = load_poset(poset_ref)?;
                let duality = check_duality(&p, &[1, 2])?;
                let parity = check_parity_divisibility(&p)?;
                failed = !(duality.ok() && parity.ok());
                let mut out = String::new();
                out.push_str(&format!(
                    "duality: symbolic v(S)=v(S_rev) {}; polynomials equal {}\n",
                    duality.symbolic_v_ok, duality.polys_equal
                ));
                for c in &duality.oracle_checks {
                    out.push_str(&format!(
                        "duality oracle t={}: mu = {} vs dual {}\n",
                        c.t, c.mu_p, c.mu_dual
                    ));
                }
                out.push_str(&format!("mu polynomial: {}\n", duality.mu_poly));
                if parity.applicable {
                    out.push_str(&format!(
                        "parity: mu(-1) = {}, mu(1) = {} (even required)\n",
                        parity.value_at_minus_one, parity.value_at_one
                    ));
                } else {
                    out.push_str("parity: not applicable (even rank)\n");
                }
                out
            }
        },
        Command::Falling { n, list, .. } => {
            if *list {
                ensure!(*n >= 1 && *n <= 7, "word listing supported for 1 <= n <= 7");
                let words = falling_words(*n);
                match cli.format {
                    Format::Json => {
                        let items: Vec<serde_json::Value> = words
                            .iter()
                            .map(|w| {
                                let letters: Vec<serde_json::Value> = w
                                    .letters()
                                    .iter()
                                    .map(|l| {
                                        serde_json::json!({"value": l.value, "barred": l.barred})
                                    })
                                    .collect();
                                serde_json::json!(letters)
                            })
                            .collect();
                        serde_json::to_string_pretty(&items).expect("word serialization")
                    }
                    _ => {
                        let mut out = String::new();
                        for w in &words {
                            out.push_str(&w.render());
                            out.push('\n');
                        }
                        out
                    }
                }
            } else {
                ensure!(*n >= 1 && *n <= 18, "count supported for 1 <= n <= 18");
                format!("{}", falling_count(*n))
            }
        }
        Command::MobiusCube { n, method } => {
            ensure!(*n <= 18, "supported up to n = 18");
            let value = match method {
                CubeMethod::Closed => mobius_cube_closed_form(*n),
                CubeMethod::Compositions => mobius_by_compositions(*n),
                CubeMethod::Chains => {
                    ensure!((1..=7).contains(n), "chain enumeration supported for 1 <= n <= 7");
                    let count = falling_words(*n).len() as i128;
                    if n % 2 == 0 {
                        count
                    } else {
                        -count
                    }
                }
                CubeMethod::Oracle => {
                    ensure!((1..=5).contains(n), "oracle supported for 1 <= n <= 5");
                    ReesCubeChain::new(*n).poset.mobius_bounded()? as i128
                }
            };
            format!("{value}")
        }
        Command::VerifyRlabel { n } => {
            let rcc = ReesCubeChain::new(*n);
            let report = verify_r_labeling(&rcc.poset, &rcc.edge_labels());
            failed = !report.ok();
            if report.ok() {
                format!(
                    "all {} intervals have exactly one rising chain\n",
                    report.intervals_checked
                )
            } else {
                let mut out = String::new();
                for (x, y, count) in &report.failures {
                    out.push_str(&format!(
                        "interval [{}, {}] has {count} rising chains\n",
                        rcc.poset.label(*x),
                        rcc.poset.label(*y)
                    ));
                }
                out
            }
        }
        Command::Derange { n, signed } => {
            if *signed {
                ensure!(*n <= 20, "signed derangements supported up to n = 20");
                format!("{}", signed_derangement_count(*n))
            } else {
                ensure!(*n <= 33, "derangements supported up to n = 33");
                format!("{}", derangement_count(*n))
            }
        }
        Command::Bijection { cmd } => match cmd {
            BijectionCmd::Forward { cycles } => {
                let pi = PermutationCycles::parse(cycles)
                    .map_err(|e| anyhow::anyhow!("bad cycles: {e}"))?;
                let word = cycles_to_diagram(&pi).map_err(|e| anyhow::anyhow!("{e}"))?;
                word.render()
            }
            BijectionCmd::Inverse { word } => {
                let w = BarredWord::parse(word).map_err(|e| anyhow::anyhow!("bad word: {e}"))?;
                let pi = diagram_to_cycles(&w).map_err(|e| anyhow::anyhow!("{e}"))?;
                pi.render()
            }
        },
        Command::Table { max_n, slow } => {
            ensure!(*max_n <= 10 || *slow, "n beyond 10 needs --slow");
            let rows = table::build_table(*max_n)?;
            match cli.format {
                Format::Json => table::render_json(&rows),
                Format::Csv => table::render_csv(&rows),
                Format::Text => table::render_text(&rows),
            }
        }
        Command::Homology { cmd } => match cmd {
            HomologyCmd::ReesCube { n, slow, dump_boundary } => {
                ensure!(*n <= 3 || *slow, "n = 4 needs --slow");
                let rcc = ReesCubeChain::new(*n);
                if let Some(k) = dump_boundary {
                    let oc = OrderComplex::of_proper_part(&rcc.poset)?;
                    let bds = oc.complex.boundary_matrices();
                    ensure!(*k < bds.len(), "boundary dimension out of range");
                    let mut out = String::new();
                    for (i, j, v) in bds[*k].triplets() {
                        out.push_str(&format!("{i} {j} {v}\n"));
                    }
                    out
                } else {
                    let h = poset_homology(&rcc.poset)?;
                    render_homology(&h, cli.format)
                }
            }
            HomologyCmd::Csigma { n } => {
                let rcc = ReesCubeChain::new(*n);
                let mut out = String::new();
                for w in falling_words(*n) {
                    let r = check_c_sigma_iso(&rcc, &w)?;
                    failed |= !r.ok();
                    out.push_str(&format!(
                        "{}  iso {}  sphere-homology {}  ({} elements)\n",
                        r.word, r.iso_ok, r.homology_ok, r.element_count
                    ));
                }
                out
            }
            HomologyCmd::Basis { n } => {
                let report = basis_rank_check(*n)?;
                failed = !report.ok();
                format!(
                    "n = {}: {} cycles, rank {}, chain-order {}, triangular {}\n",
                    report.n, report.n_words, report.rank, report.chainorder_ok, report.triangular_ok
                )
            }
        },
        Command::RepDim { n } => {
            let report = representation_dimension_check(*n);
            failed = !report.ok();
            let mut out = String::new();
            for (shape, mult, fillings) in &report.shapes {
                let hooks: Vec<String> =
                    shape.hooks.iter().map(|h| format!("({},{})", h.u, h.b)).collect();
                out.push_str(&format!(
                    "shape [{}]: multiplicity {mult}, fillings {fillings}\n",
                    hooks.join(" ")
                ));
            }
            out.push_str(&format!("total {} expected {}\n", report.total, report.expected));
            out
        }
        Command::Verify { suite, max_n, slow, seed } => {
            let cfg = VerifyConfig { max_n: *max_n, slow: *slow, seed: *seed };
            let reports = verify::run(suite, &cfg)?;
            failed = reports.iter().any(|r| !r.ok());
            match cli.format {
                Format::Json => verify::render_json(&reports),
                _ => verify::render_text(&reports),
            }
        }
    };
    emit(&cli, &output)?;
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn mobius_command(args: &MobiusArgs) -> Result<i128> {
    let reference = args
        .poset_ref
        .clone()
        .or_else(|| args.poset.clone())
        .context("a poset reference is required (positional, or --poset)")?;
    // the closed-form methods apply to the cube-chain family only
    match args.method {
        MobiusMethod::Closed | MobiusMethod::Compositions | MobiusMethod::Chains => {
            let Some(n) = cube_spec_dimension(&reference) else {
                bail!("--method closed/compositions/chains needs --poset zoo:cube:<n>");
            };
            let k = args
                .rees_chain
                .context("--method closed/compositions/chains needs --rees-chain n+1")?;
            ensure!(k == n + 1, "Rees(cube_n, C_(n+1)) needs --rees-chain {}", n + 1);
            ensure!(!args.minus, "closed forms apply to Rees, not Rees⁻");
            return Ok(match args.method {
                MobiusMethod::Closed => mobius_cube_closed_form(n),
                MobiusMethod::Compositions => mobius_by_compositions(n),
                MobiusMethod::Chains => {
                    ensure!((1..=7).contains(&n), "chain enumeration supported for 1 <= n <= 7");
                    let count = falling_words(n).len() as i128;
                    if n % 2 == 0 {
                        count
                    } else {
                        -count
                    }
                }
                _ => unreachable!(),
            });
        }
        MobiusMethod::Formula => {
            let p = load_poset(&reference)?;
            let k = args.rees_chain.context("--method formula needs --rees-chain rank(P)")?;
            ensure!(
                k == p.max_rank(),
                "the weight formula gives Rees(P, C_rank(P)); use --rees-chain {}",
                p.max_rank()
            );
            ensure!(!args.minus, "the weight formula applies to Rees, not Rees⁻");
            return Ok(mobius_rees_formula(&p)?.eval(1));
        }
        MobiusMethod::Oracle | MobiusMethod::Zeta => {}
    }
    let base = load_poset(&reference)?;
    let poset = match args.rees_chain {
        Some(k) => {
            let chain = zoo::chain(k);
            if args.minus {
                rees_minus(&base, &chain)?
            } else {
                rees_bounded(&base, &chain)?
            }
        }
        None => base,
    };
    let (bottom, top) = poset.bounds()?;
    let value = match args.method {
        MobiusMethod::Oracle => poset.mobius(bottom, top)? as i128,
        MobiusMethod::Zeta => poset.mobius_full_by_zeta()[bottom][top] as i128,
        _ => unreachable!(),
    };
    Ok(value)
}

fn cube_spec_dimension(reference: &str) -> Option<u32> {
    let rest = reference.strip_prefix("zoo:cube:")?;
    rest.parse().ok()
}

fn render_homology(h: &[rees_core::homology::HomologyGroup], format: Format) -> String {
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = h
                .iter()
                .enumerate()
                .map(|(k, g)| {
                    serde_json::json!({
                        "dim": k,
                        "betti": g.betti,
                        "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&items).expect("homology serialization")
        }
        _ => {
            let mut out = String::new();
            for (k, g) in h.iter().enumerate() {
                if g.torsion.is_empty() {
                    out.push_str(&format!("H~_{k}: Z^{}\n", g.betti));
                } else {
                    let tors: Vec<String> =
                        g.torsion.iter().map(|t| format!("Z/{t}")).collect();
                    out.push_str(&format!("H~_{k}: Z^{} + {}\n", g.betti, tors.join(" + ")));
                }
            }
            out
        }
    }
}

fn emit(cli: &Cli, output: &str) -> Result<()> {
    let mut text = output.to_string();
    if !text.ends_with('\n') && !text.is_empty() {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {path}"))?;
        }
        None => {
            std::io::stdout().write_all(text.as_bytes()).context("writing stdout")?;
        }
    }
    Ok(())
}
