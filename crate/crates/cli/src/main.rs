//! `tapestry`: twisted Alexander polynomials of knot group presentations
//! over small prime fields, complete SL(2,F_p) representation enumeration,
//! and the divisibility obstruction to meridional epimorphisms.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tapestry_core::algebra::{FFMatrix, Fp};
use tapestry_core::presentation::{FreeWord, GroupHom, GroupPresentation};
use tapestry_core::reps::{enumerate_representations, EnumOptions, RepList, Representation};
use tapestry_core::tap::{
    meridional_obstruction, twisted_alexander, ObstructionMode, ObstructionOptions, Verdict,
};
use tapestry_core::twistknot;
use tapestry_core::wordprob::{self, CosetOutcome};
use tapestry_core::{Error, SCHEMA_VERSION};

/// Exit codes: 0 success, 2 bad input, 3 resource limit, 4 internal error.
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_RESOURCE_LIMIT: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "tapestry", version, about)]
struct Cli {
    /// Worker threads for the representation and obstruction sweeps
    /// (falls back to the TAPESTRY_WORKERS environment variable).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate SL(2,F_p) representations up to conjugacy.
    Enum {
        #[command(flatten)]
        pres: PresArg,
        #[arg(short, long)]
        prime: u32,
        /// Search all generator images instead of one conjugacy class.
        #[arg(long)]
        unconstrained: bool,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Twisted Alexander pair of one representation.
    Tap {
        #[command(flatten)]
        pres: PresArg,
        #[arg(short, long)]
        prime: u32,
        /// Representation matrices, row-major, one `a,b,c,d` group per
        /// generator, groups separated by `;`. Defaults to the trivial
        /// representation.
        #[arg(long)]
        rep: Option<String>,
        /// Pick a representation by its index in the enumeration order.
        #[arg(long, conflicts_with = "rep")]
        index: Option<usize>,
        /// Generator column to delete (default: first generator).
        #[arg(long)]
        column: Option<String>,
    },
    /// Enumerate representations and print the distinct polynomial pairs.
    Table {
        #[command(flatten)]
        pres: PresArg,
        #[arg(short, long)]
        prime: u32,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Decide the meridional-epimorphism obstruction source -> target.
    Obstruct {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(short, long)]
        prime: u32,
        /// Restrict source representations to those with the same image
        /// subgroup and conjugate meridian image.
        #[arg(long)]
        filter_image: bool,
        /// Collect every obstructing target representation, not just the
        /// first.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// The weaker divisibility test on the polynomial fractions.
    Divides {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(short, long)]
        prime: u32,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Twist-knot operations.
    Twist {
        #[command(subcommand)]
        op: TwistOp,
    },
    /// Coset enumeration over the trivial subgroup.
    Coset {
        #[command(flatten)]
        pres: PresArg,
        /// Extra relators to adjoin (each a word, e.g. "y1 y2^-1").
        #[arg(long)]
        extra: Vec<String>,
        /// Adjoin the twist-knot pseudo-meridian (with --pres twist:Q).
        #[arg(long)]
        adjoin_pseudo_meridian: bool,
        #[arg(long, default_value_t = 1_000_000)]
        coset_limit: usize,
    },
    /// Verify a homomorphism file: relators, witnesses and the meridian
    /// trace obstruction.
    VerifyHom {
        #[arg(long)]
        hom: String,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// Source meridian generator (defaults to the presentation's).
        #[arg(long)]
        meridian: Option<String>,
    },
    /// Decide whether a word is the identity (trefoil target only).
    WordIdentity {
        #[command(flatten)]
        pres: PresArg,
        #[arg(long)]
        word: String,
    },
    /// Tietze-simplify a presentation.
    Simplify {
        #[command(flatten)]
        pres: PresArg,
    },
    /// Elementary divisors and free rank of the abelianization.
    Abelianize {
        #[command(flatten)]
        pres: PresArg,
    },
}

#[derive(Subcommand)]
enum TwistOp {
    /// Print the presentation of G(J(2,2q)).
    Pres {
        #[arg(short = 'q', long = "q", allow_hyphen_values = true)]
        q: i64,
    },
    /// Riley polynomial phi_q(u).
    Phi {
        #[arg(short = 'q', long = "q", allow_hyphen_values = true)]
        q: i64,
    },
    /// Trace-gap polynomial p_q(u).
    P {
        #[arg(short = 'q', long = "q", allow_hyphen_values = true)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// Certificate that the pseudo-meridian is not a meridian.
    Certify {
        #[arg(short = 'q', long = "q", allow_hyphen_values = true)]
        q: i64,
    },
    /// Check the three-conjugate generating identity under all
    /// SL(2,F_p) representations.
    Gencheck {
        #[arg(short = 'q', long = "q", allow_hyphen_values = true)]
        q: i64,
        #[arg(short, long)]
        prime: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursion,
    Direct,
}

#[derive(Args)]
struct PresArg {
    /// Presentation: a file path, a builtin fixture name
    /// (e.g. trefoil.pres), or twist:Q for the twist knot J(2,2Q).
    #[arg(long)]
    pres: String,
}

fn load_presentation(spec: &str) -> Result<GroupPresentation, Error> {
    if let Some(q) = spec.strip_prefix("twist:") {
        let q: i64 = q.parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("bad twist parameter `{q}`"),
        })?;
        return twistknot::twist_presentation(q);
    }
    let text = match std::fs::read_to_string(spec) {
        Ok(t) => t,
        Err(_) => match tapestry_core::fixtures::builtin(spec) {
            Some(t) => t.to_string(),
            None => {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!(
                        "`{spec}` is neither a readable file, a builtin fixture {:?}, nor twist:Q",
                        tapestry_core::fixtures::BUILTIN_NAMES
                    ),
                })
            }
        },
    };
    GroupPresentation::parse(&text)
}

fn load_text(spec: &str) -> Result<String, Error> {
    match std::fs::read_to_string(spec) {
        Ok(t) => Ok(t),
        Err(_) => tapestry_core::fixtures::builtin(spec).map(str::to_string).ok_or_else(|| {
            Error::Parse { line: 0, msg: format!("cannot read `{spec}`") }
        }),
    }
}

struct Output {
    json: bool,
    out: Option<PathBuf>,
}

impl Output {
    fn emit(&self, text: String) -> anyhow::Result<()> {
        match &self.out {
            None => {
                println!("{text}");
                Ok(())
            }
            Some(path) => {
                let mut f = std::fs::File::create(path)?;
                writeln!(f, "{text}")?;
                Ok(())
            }
        }
    }

    fn report(&self, text: String, json: serde_json::Value) -> anyhow::Result<()> {
        if self.json {
            self.emit(serde_json::to_string_pretty(&json)?)
        } else {
            self.emit(text)
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownGenerator(_)
        | Error::MissingImage(_)
        | Error::NotPrime(_)
        | Error::NotMeridional(_)
        | Error::BadDeficiency { .. }
        | Error::ZeroTwist
        | Error::NoOracle(_)
        | Error::Unsupported(_) => EXIT_BAD_INPUT,
        Error::NodeLimit { .. } => EXIT_RESOURCE_LIMIT,
        Error::ModulusMismatch(..)
        | Error::SingularMatrix
        | Error::DimensionMismatch(..)
        | Error::ZeroDivisor
        | Error::ZeroDenominator(_) => EXIT_INTERNAL,
    }
}

fn rep_lines(p: &GroupPresentation, rep: &Representation) -> String {
    p.generators
        .iter()
        .zip(rep.images())
        .map(|(name, m)| format!("  {name} -> {m}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_rep(
    field: Fp,
    g: &GroupPresentation,
    text: &str,
) -> Result<Representation, Error> {
    let groups: Vec<&str> = text.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    if groups.len() != g.gen_count() {
        return Err(Error::MissingImage(format!(
            "{} matrix groups supplied for {} generators",
            groups.len(),
            g.gen_count()
        )));
    }
    let mut images = Vec::new();
    for grp in groups {
        let entries: Vec<i64> = grp
            .split([',', ' '])
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i64>().map_err(|_| Error::Parse {
                    line: 0,
                    msg: format!("bad matrix entry `{s}`"),
                })
            })
            .collect::<Result<_, _>>()?;
        let n = (entries.len() as f64).sqrt() as usize;
        if n * n != entries.len() {
            return Err(Error::Parse { line: 0, msg: "matrix is not square".into() });
        }
        images.push(FFMatrix::from_i64(field, n, &entries)?);
    }
    Representation::new(field, images)
}

fn run(cli: &Cli) -> anyhow::Result<Result<(), Error>> {
    let output = Output { json: cli.json, out: cli.out.clone() };
    let workers = cli
        .workers
        .or_else(|| std::env::var("TAPESTRY_WORKERS").ok().and_then(|v| v.parse().ok()));
    if let Some(n) = workers {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok();
    }

    macro_rules! core_try {
        ($e:expr) => {
            match $e {
                Ok(v) => v,
                Err(e) => return Ok(Err(e)),
            }
        };
    }

    match &cli.command {
        Command::Enum { pres, prime, unconstrained, node_limit } => {
            let g = core_try!(load_presentation(&pres.pres));
            let list = core_try!(enumerate_representations(
                &g,
                *prime,
                EnumOptions {
                    constrain_conjugate: !unconstrained,
                    node_limit: *node_limit
                },
            ));
            let mut text = format!(
                "{} over F_{}: {} representations up to conjugacy ({} before dedup, {} nodes)\n",
                g.name,
                prime,
                list.count(),
                list.raw_count,
                list.stats.nodes
            );
            for (i, rep) in list.reps.iter().enumerate() {
                text.push_str(&format!("rep {i}:\n{}\n", rep_lines(&g, rep)));
            }
            output.report(text, serde_json::to_value(&list)?)?;
        }
        Command::Tap { pres, prime, rep, index, column } => {
            let g = core_try!(load_presentation(&pres.pres));
            let field = core_try!(Fp::new(*prime));
            let rho = if let Some(text) = rep {
                core_try!(parse_rep(field, &g, text))
            } else if let Some(i) = index {
                let list = core_try!(enumerate_representations(
                    &g,
                    *prime,
                    EnumOptions::default()
                ));
                match list.reps.get(*i) {
                    Some(r) => r.clone(),
                    None => {
                        return Ok(Err(Error::Parse {
                            line: 0,
                            msg: format!(
                                "representation index {i} out of range ({} found)",
                                list.count()
                            ),
                        }))
                    }
                }
            } else {
                Representation::trivial(field, 2, g.gen_count())
            };
            let col = match column {
                None => None,
                Some(name) => match g.gen_index(name) {
                    Some(i) => Some(i),
                    None => return Ok(Err(Error::UnknownGenerator(name.clone()))),
                },
            };
            let pair = core_try!(twisted_alexander(&g, &rho, col));
            let text = format!(
                "num: {}\nden: {}\ndeleted column: {}{}",
                pair.numerator,
                pair.denominator,
                g.generators[pair.deleted_column],
                match pair.dropped_relator {
                    Some(i) => format!("\ndropped redundant relator index {i}"),
                    None => String::new(),
                }
            );
            let json = json!({
                "schema": SCHEMA_VERSION,
                "presentation": g.name,
                "p": prime,
                "pair": pair,
            });
            output.report(text, json)?;
        }
        Command::Table { pres, prime, node_limit } => {
            let g = core_try!(load_presentation(&pres.pres));
            let list = core_try!(enumerate_representations(
                &g,
                *prime,
                EnumOptions { constrain_conjugate: true, node_limit: *node_limit },
            ));
            let table = core_try!(polynomial_table(&g, &list));
            let mut text = format!(
                "{} over F_{}: {} representations, {} distinct polynomial pairs\n",
                g.name,
                prime,
                list.count(),
                table.len()
            );
            for row in &table {
                text.push_str(&format!(
                    "pair ({} reps):\n{}\n  num: {}\n  den: {}\n",
                    row.rep_indices.len(),
                    rep_lines(&g, &list.reps[row.rep_indices[0]]),
                    row.numerator,
                    row.denominator
                ));
            }
            let json = json!({
                "schema": SCHEMA_VERSION,
                "presentation": g.name,
                "p": prime,
                "representations": list.count(),
                "rows": table.iter().map(|r| json!({
                    "numerator": r.numerator,
                    "denominator": r.denominator,
                    "representative": list.reps[r.rep_indices[0]],
                    "rep_indices": r.rep_indices,
                })).collect::<Vec<_>>(),
            });
            output.report(text, json)?;
        }
        Command::Obstruct { source, target, prime, filter_image, exhaustive, node_limit } => {
            let src = core_try!(load_presentation(source));
            let tgt = core_try!(load_presentation(target));
            let report = core_try!(meridional_obstruction(
                &src,
                &tgt,
                *prime,
                ObstructionOptions {
                    filter_image: *filter_image,
                    exhaustive: *exhaustive,
                    node_limit: *node_limit,
                    mode: ObstructionMode::Meridional,
                },
            ));
            let code = obstruction_text(&output, &src, &tgt, &report)?;
            return Ok(code);
        }
        Command::Divides { source, target, prime, exhaustive, node_limit } => {
            let src = core_try!(load_presentation(source));
            let tgt = core_try!(load_presentation(target));
            let report = core_try!(meridional_obstruction(
                &src,
                &tgt,
                *prime,
                ObstructionOptions {
                    filter_image: false,
                    exhaustive: *exhaustive,
                    node_limit: *node_limit,
                    mode: ObstructionMode::Plain,
                },
            ));
            let code = obstruction_text(&output, &src, &tgt, &report)?;
            return Ok(code);
        }
        Command::Twist { op } => match op {
            TwistOp::Pres { q } => {
                let g = core_try!(twistknot::twist_presentation(*q));
                output.report(
                    g.serialize(),
                    json!({
                        "schema": SCHEMA_VERSION,
                        "name": g.name,
                        "presentation": g.serialize(),
                    }),
                )?;
            }
            TwistOp::Phi { q } => {
                let phi = core_try!(twistknot::riley_phi(*q));
                output.report(
                    format!("phi_{q}(u) = {phi}"),
                    json!({ "schema": SCHEMA_VERSION, "q": q, "phi": phi }),
                )?;
            }
            TwistOp::P { q, method } => {
                let m = match method {
                    Method::Recursion => twistknot::TraceGapMethod::Recursion,
                    Method::Direct => twistknot::TraceGapMethod::Direct,
                };
                let p_q = core_try!(twistknot::trace_gap_p(*q, m));
                output.report(
                    format!("p_{q}(u) = {p_q}"),
                    json!({ "schema": SCHEMA_VERSION, "q": q, "p": p_q }),
                )?;
            }
            TwistOp::Certify { q } => {
                let cert = core_try!(twistknot::non_meridian_certificate(*q));
                let text = format!(
                    "q = {q}: {:?}\nphi_q = {}\np_q = {}\np_q/u^2 = {}\ngcd = {}\n{}",
                    cert.verdict,
                    cert.phi,
                    cert.trace_gap,
                    cert.reduced_gap.as_ref().map_or("-".to_string(), |p| p.to_string()),
                    cert.gcd.as_ref().map_or("-".to_string(), |p| p.to_string()),
                    cert.note
                );
                output.report(text, serde_json::to_value(&cert)?)?;
            }
            TwistOp::Gencheck { q, prime } => {
                let ok = core_try!(twistknot::generating_identity_check(*q, *prime));
                output.report(
                    format!(
                        "generating identity for q = {q} over F_{prime}: {}",
                        if ok { "holds under every representation" } else { "FAILS" }
                    ),
                    json!({ "schema": SCHEMA_VERSION, "q": q, "p": prime, "holds": ok }),
                )?;
                if !ok {
                    return Ok(Err(Error::Unsupported(
                        "generating identity failed".into(),
                    )));
                }
            }
        },
        Command::Coset { pres, extra, adjoin_pseudo_meridian, coset_limit } => {
            let g = core_try!(load_presentation(&pres.pres));
            let mut extras: Vec<FreeWord> = Vec::new();
            for w in extra {
                extras.push(core_try!(g.word(w)));
            }
            if *adjoin_pseudo_meridian {
                let q = match pres.pres.strip_prefix("twist:") {
                    Some(q) => q.parse::<i64>().unwrap_or(0),
                    None => {
                        return Ok(Err(Error::Parse {
                            line: 0,
                            msg: "--adjoin-pseudo-meridian requires --pres twist:Q".into(),
                        }))
                    }
                };
                extras.push(core_try!(twistknot::pseudo_meridian(q)));
            }
            let outcome = wordprob::todd_coxeter_trivial(&g, &extras, *coset_limit);
            let text = match outcome {
                CosetOutcome::Trivial => "TRIVIAL (order 1)".to_string(),
                CosetOutcome::Finite { order } => format!("FINITE (order {order})"),
                CosetOutcome::LimitExceeded => {
                    format!("LIMIT_EXCEEDED (no closure within {coset_limit} cosets)")
                }
            };
            output.report(
                format!("{}: {}", g.name, text),
                json!({
                    "schema": SCHEMA_VERSION,
                    "presentation": g.name,
                    "extra_relators": extra,
                    "coset_limit": coset_limit,
                    "outcome": outcome,
                }),
            )?;
            if outcome == CosetOutcome::LimitExceeded {
                return Ok(Err(Error::NodeLimit { visited: *coset_limit as u64 }));
            }
        }
        Command::VerifyHom { hom, source, target, meridian } => {
            let src = core_try!(load_presentation(source));
            let tgt = core_try!(load_presentation(target));
            let text = core_try!(load_text(hom));
            let h = core_try!(GroupHom::parse(&text, &src, &tgt));
            let hom_report = core_try!(wordprob::verify_group_hom(&h));
            let witnesses_ok = if h.witnesses.is_empty() {
                None
            } else {
                Some(core_try!(wordprob::verify_surjectivity_witnesses(&h, &h.witnesses)))
            };
            let meridian_idx = match meridian {
                Some(name) => match src.gen_index(name) {
                    Some(i) => Some(i),
                    None => return Ok(Err(Error::UnknownGenerator(name.clone()))),
                },
                None => src.meridian,
            };
            let trace = match meridian_idx {
                Some(m) => Some(core_try!(wordprob::meridian_trace_obstruction(&h, m))),
                None => None,
            };
            let mut text = format!(
                "homomorphism: {}\n",
                if hom_report.ok {
                    "all relators vanish".to_string()
                } else {
                    format!("FAILS on relators {:?}", hom_report.failing_relators)
                }
            );
            match witnesses_ok {
                Some(true) => text.push_str("surjectivity witnesses: verified\n"),
                Some(false) => text.push_str("surjectivity witnesses: FAILED\n"),
                None => text.push_str("surjectivity witnesses: none supplied\n"),
            }
            if let Some(t) = &trace {
                text.push_str(&format!(
                    "meridian image matrix: [{} {}; {} {}], trace {} vs {}\n{}",
                    t.matrix.0[0],
                    t.matrix.0[1],
                    t.matrix.0[2],
                    t.matrix.0[3],
                    t.trace,
                    t.target_meridian_trace,
                    if t.meridional_excluded {
                        "traces differ: the homomorphism is NOT meridional"
                    } else {
                        "traces agree: inconclusive"
                    }
                ));
            }
            output.report(
                text,
                json!({
                    "schema": SCHEMA_VERSION,
                    "homomorphism_ok": hom_report.ok,
                    "failing_relators": hom_report.failing_relators,
                    "witnesses_ok": witnesses_ok,
                    "trace": trace,
                }),
            )?;
        }
        Command::WordIdentity { pres, word } => {
            let g = core_try!(load_presentation(&pres.pres));
            let oracle = core_try!(wordprob::oracle_for(&g));
            let w = core_try!(g.word(word));
            let is_id = core_try!(oracle.is_identity(&w));
            output.report(
                format!("`{word}` is {}the identity of {}", if is_id { "" } else { "NOT " }, g.name),
                json!({ "schema": SCHEMA_VERSION, "word": word, "identity": is_id }),
            )?;
        }
        Command::Simplify { pres } => {
            let g = core_try!(load_presentation(&pres.pres));
            let s = g.simplify();
            output.report(
                s.serialize(),
                json!({
                    "schema": SCHEMA_VERSION,
                    "generators_before": g.gen_count(),
                    "generators_after": s.gen_count(),
                    "presentation": s.serialize(),
                }),
            )?;
        }
        Command::Abelianize { pres } => {
            let g = core_try!(load_presentation(&pres.pres));
            let ab = g.abelianization();
            let mut parts: Vec<String> = ab.torsion.iter().map(|d| format!("Z/{d}")).collect();
            parts.extend(std::iter::repeat("Z".to_string()).take(ab.free_rank));
            let text = if parts.is_empty() { "trivial".to_string() } else { parts.join(" + ") };
            output.report(
                format!("H_1({}) = {}", g.name, text),
                json!({
                    "schema": SCHEMA_VERSION,
                    "presentation": g.name,
                    "torsion": ab.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                    "free_rank": ab.free_rank,
                }),
            )?;
        }
    }
    Ok(Ok(()))
}

struct TableRow {
    numerator: tapestry_core::algebra::LaurentPoly,
    denominator: tapestry_core::algebra::LaurentPoly,
    rep_indices: Vec<usize>,
}

fn polynomial_table(g: &GroupPresentation, list: &RepList) -> Result<Vec<TableRow>, Error> {
    let mut rows: Vec<TableRow> = Vec::new();
    for (i, rep) in list.reps.iter().enumerate() {
        let pair = twisted_alexander(g, rep, None)?;
        match rows
            .iter_mut()
            .find(|r| r.numerator == pair.numerator && r.denominator == pair.denominator)
        {
            Some(row) => row.rep_indices.push(i),
            None => rows.push(TableRow {
                numerator: pair.numerator,
                denominator: pair.denominator,
                rep_indices: vec![i],
            }),
        }
    }
    Ok(rows)
}

fn obstruction_text(
    output: &Output,
    src: &GroupPresentation,
    tgt: &GroupPresentation,
    report: &tapestry_core::tap::ObstructionReport,
) -> anyhow::Result<Result<(), Error>> {
    let verdict = match report.verdict {
        Verdict::Obstructed => "OBSTRUCTED",
        Verdict::NotObstructed => "NOT_OBSTRUCTED",
        Verdict::Inconclusive => "INCONCLUSIVE",
    };
    let mut text = format!(
        "{} -> {} over F_{}: {}\n{}\n",
        src.name, tgt.name, report.p, verdict, report.note
    );
    text.push_str(&format!(
        "source: {} representations, {} distinct pairs; target: {} representations, {} distinct pairs\n",
        report.stats.source_reps,
        report.stats.distinct_source_pairs,
        report.stats.target_reps,
        report.stats.distinct_target_pairs
    ));
    for w in &report.witnesses {
        text.push_str(&format!(
            "witness representation {} (target):\n{}\n  num: {}\n  den: {}\n",
            w.rep_index,
            rep_lines(tgt, &w.rep),
            w.pair.numerator,
            w.pair.denominator
        ));
    }
    output.report(text, serde_json::to_value(report)?)?;
    if report.verdict == Verdict::Inconclusive {
        return Ok(Err(Error::NodeLimit { visited: 0 }));
    }
    Ok(Ok(()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
