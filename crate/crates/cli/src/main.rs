//! `quiddity`: command-line front end.
//!
//! Exit codes: 0 for success (or a true verdict), 1 for a false verdict or a
//! failed suite, 2 for any error.

mod verify;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use quiddity::cache::{Cache, CacheKey};
use quiddity::classify::{
    classify, enumerate_quiddities, irreducible_census, parity_audit, transfer_theta, ClassifyFlags, EnumerationReport,
};
use quiddity::numfield::rational::parse_rational;
use quiddity::numfield::{FieldDescriptor, FieldElement, NumberField, QPoly, RectDescriptor};
use quiddity::par::Execution;
use quiddity::polycrit::{irreducible_over_q, rouche_dominant_count, schur_cohn_count};
use quiddity::quiddity::{is_quiddity, QuiddityTuple, TupleJson};
use quiddity::reducibility::find_reduction;

#[derive(Parser)]
#[command(name = "quiddity", version, about = "Exact computations with lambda-quiddities over cyclic subgroups <w>")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Run enumerations on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a tuple is a quiddity.
    Check(TupleArgs),
    /// Search a reduction of a quiddity into a sum of two smaller ones.
    Reduce(TupleArgs),
    /// Run a verification suite, or `all`.
    Verify {
        suite: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Classify the irreducible quiddities over <w>.
    Classify {
        #[command(flatten)]
        gen: GeneratorArgs,
        /// Declare the generator transcendental; no field is needed.
        #[arg(long)]
        transcendental: bool,
    },
    /// List all quiddities within bounds, one per equivalence class.
    Enumerate(BoundedArgs),
    /// Enumerate and decide irreducibility of every member.
    Census(BoundedArgs),
    /// Reinterpret a quiddity over a conjugate embedding.
    Transfer {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Index of the target root, in the order printed by `roots`.
        #[arg(long)]
        target: usize,
    },
    /// Report odd-size quiddities within bounds.
    Parity(BoundedArgs),
    /// List the roots of the minimal polynomial with isolating boxes.
    Roots {
        #[command(flatten)]
        gen: GeneratorArgs,
    },
    /// Irreducibility and root counts in a disk for a rational polynomial.
    Polycrit {
        /// Coefficients, constant term first.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "2")]
        radius: String,
        /// Also try the dominant-term bound with this coefficient index.
        #[arg(long)]
        dominant: Option<usize>,
    },
}

#[derive(Args, Clone)]
struct GeneratorArgs {
    /// Work over Z: the field Q with generator 1.
    #[arg(long, conflicts_with_all = ["min_poly", "field"])]
    int: bool,
    /// Minimal polynomial coefficients, constant term first, e.g. "-2,0,1".
    #[arg(long, allow_hyphen_values = true)]
    min_poly: Option<String>,
    /// Box around the chosen root: "lo,hi" on the real line or "re_lo,re_hi,im_lo,im_hi".
    #[arg(long, allow_hyphen_values = true)]
    root_hint: Option<String>,
    /// Proceed when irreducibility of the minimal polynomial cannot be proven.
    #[arg(long)]
    assume_irreducible: bool,
    /// Field descriptor JSON, inline or as a file path.
    #[arg(long, conflicts_with = "min_poly")]
    field: Option<String>,
    /// Generator coordinates in the power basis; defaults to the root itself (1 over Z).
    #[arg(long, allow_hyphen_values = true)]
    generator: Option<String>,
}

#[derive(Args, Clone)]
struct BoundedArgs {
    #[command(flatten)]
    gen: GeneratorArgs,
    #[arg(long, default_value_t = 6)]
    nmax: usize,
    #[arg(long, default_value_t = 2)]
    kbound: i64,
    /// Directory of the JSON-lines cache; caching is off without it.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct TupleArgs {
    /// Tuple JSON document, inline, as a file path, or `-` for stdin.
    tuple: Option<String>,
    #[command(flatten)]
    gen: GeneratorArgs,
    /// Multipliers k_i of the entries k_i w, e.g. "0,1,0,-1".
    #[arg(long, allow_hyphen_values = true)]
    multipliers: Option<String>,
}

fn split_csv(s: &str) -> Vec<String> {
    s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
}

/// Inline JSON, `-` for stdin, or a file path.
fn read_document(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
}

fn parse_hint(s: &str) -> Result<RectDescriptor> {
    let v = split_csv(s);
    for x in &v {
        parse_rational(x).map_err(|e| anyhow!("root hint: {e}"))?;
    }
    match v.as_slice() {
        [lo, hi] => Ok(RectDescriptor { re: [lo.clone(), hi.clone()], im: ["0".into(), "0".into()] }),
        [a, b, c, d] => Ok(RectDescriptor { re: [a.clone(), b.clone()], im: [c.clone(), d.clone()] }),
        _ => bail!("root hint needs 2 or 4 comma-separated rationals"),
    }
}

impl GeneratorArgs {
    fn descriptor(&self) -> Result<Option<FieldDescriptor>> {
        if self.int {
            return Ok(Some(NumberField::rationals().descriptor()));
        }
        if let Some(doc) = &self.field {
            return Ok(Some(serde_json::from_str(&read_document(doc)?).context("field descriptor")?));
        }
        let Some(mp) = &self.min_poly else { return Ok(None) };
        let hint = self.root_hint.as_deref().ok_or_else(|| anyhow!("--min-poly needs --root-hint"))?;
        Ok(Some(FieldDescriptor {
            min_poly: split_csv(mp),
            root_hint: parse_hint(hint)?,
            assume_irreducible: self.assume_irreducible,
        }))
    }

    fn element(&self) -> Result<Option<FieldElement>> {
        let Some(d) = self.descriptor()? else {
            if self.generator.is_some() {
                bail!("--generator needs a field (--int, --min-poly or --field)");
            }
            return Ok(None);
        };
        let field = d.build()?;
        let w = match &self.generator {
            Some(g) => field.parse_element(&split_csv(g))?,
            None if self.int => field.one(),
            None => field.alpha(),
        };
        Ok(Some(w))
    }

    fn require(&self) -> Result<FieldElement> {
        self.element()?.ok_or_else(|| anyhow!("no field given: use --int, --min-poly with --root-hint, or --field"))
    }
}

impl TupleArgs {
    fn tuple(&self) -> Result<QuiddityTuple> {
        if let Some(doc) = &self.tuple {
            let j: TupleJson = serde_json::from_str(&read_document(doc)?).context("tuple document")?;
            return Ok(j.build()?);
        }
        let ks = self.multipliers.as_deref().ok_or_else(|| anyhow!("give a tuple document or --multipliers"))?;
        let ks: Vec<i64> = split_csv(ks)
            .iter()
            .map(|s| s.parse::<i64>().with_context(|| format!("multiplier {s:?}")))
            .collect::<Result<_>>()?;
        Ok(QuiddityTuple::new(self.gen.require()?, ks))
    }
}

struct Output {
    json: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value)?);
        } else {
            println!("{}", text());
        }
        Ok(())
    }
}

fn fmt_tuple(ks: &[i64]) -> String {
    let inner: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn report_text(r: &EnumerationReport) -> String {
    let mut out = format!(
        "generator {:?} over Q[X]/({}), n <= {}, |k| <= {}\n",
        r.generator,
        QPoly::parse_strings(&r.field.min_poly).map(|p| p.to_string()).unwrap_or_default(),
        r.n_max,
        r.k_bound
    );
    for (n, c) in &r.counts_by_size {
        out.push_str(&format!("size {n}: {c} class(es)\n"));
    }
    for m in &r.quiddities {
        let tag = match m.irreducible {
            Some(true) => "  irreducible",
            Some(false) => "  reducible",
            None => "",
        };
        out.push_str(&format!("{} eps={:+}{}\n", fmt_tuple(&m.multipliers), m.epsilon, tag));
    }
    out.trim_end().to_string()
}

fn bounded_report(args: &BoundedArgs, with_census: bool, exec: Execution) -> Result<EnumerationReport> {
    let w = args.gen.require()?;
    let compute = || -> Result<EnumerationReport> {
        let r = enumerate_quiddities(&w, args.nmax, args.kbound, exec)?;
        Ok(if with_census { irreducible_census(&r, exec)? } else { r })
    };
    let Some(dir) = &args.cache_dir else { return compute() };
    let cache = Cache::new(dir);
    let key = CacheKey {
        field: w.field().descriptor(),
        generator: w.coord_strings(),
        n_max: args.nmax,
        k_bound: args.kbound,
        census: with_census,
    };
    if let Some(r) = cache.load(&key)? {
        return Ok(r);
    }
    let r = compute()?;
    cache.store(&r)?;
    Ok(r)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = Output { json: cli.json };
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match cli.command {
        Command::Check(t) => {
            let t = t.tuple()?;
            let eps = is_quiddity(&t);
            let v = json!({ "is_quiddity": eps.is_some(), "epsilon": eps, "n": t.len() });
            out.emit(&v, || match eps {
                Some(e) => format!("quiddity of size {}, M_n = {:+} Id", t.len(), e),
                None => format!("not a quiddity (size {})", t.len()),
            })?;
            Ok(if eps.is_some() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Reduce(t) => {
            let t = t.tuple()?;
            let w = find_reduction(&t)?;
            let v = json!({ "n": t.len(), "reducible": w.is_some(), "witness": w });
            out.emit(&v, || match &w {
                Some(w) => format!(
                    "reducible: image (rotation {}, reflected {}) = {} + {}",
                    w.rotation,
                    w.reflected,
                    fmt_tuple(&w.a_multipliers),
                    fmt_tuple(&w.b_multipliers)
                ),
                None => "irreducible".to_string(),
            })?;
            Ok(if w.is_some() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { suite, list } => {
            if list || suite.is_none() {
                let names: Vec<_> = verify::SUITES.iter().map(|s| json!({"suite": s.name, "description": s.description})).collect();
                out.emit(&names, || {
                    verify::SUITES.iter().map(|s| format!("{:<20} {}", s.name, s.description)).collect::<Vec<_>>().join("\n")
                })?;
                return Ok(ExitCode::SUCCESS);
            }
            let name = suite.unwrap_or_default();
            let suites: Vec<&verify::Suite> = if name == "all" {
                verify::SUITES.iter().collect()
            } else {
                vec![verify::find(&name).ok_or_else(|| anyhow!("unknown suite {name:?}; see `verify --list`"))?]
            };
            let reports = suites.iter().map(|s| s.run(exec)).collect::<Result<Vec<_>>>()?;
            let ok = reports.iter().all(|r| r.passed());
            out.emit(&reports, || {
                let mut lines = Vec::new();
                for r in &reports {
                    lines.push(format!("[{}] {} - {}", if r.passed() { "PASS" } else { "FAIL" }, r.suite, r.description));
                    for c in &r.claims {
                        lines.push(format!("  {} {}", if c.pass { "pass" } else { "FAIL" }, c.claim));
                        if let Some(d) = &c.detail {
                            lines.push(format!("       {d}"));
                        }
                    }
                }
                lines.join("\n")
            })?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Classify { gen, transcendental } => {
            let w = gen.element()?;
            let o = classify(w.as_ref(), ClassifyFlags { transcendental })?;
            out.emit(&o, || format!("{:?} ({:?})\n{}", o.family, o.justification, o.notes.join("\n")))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate(args) => {
            let r = bounded_report(&args, false, exec)?;
            out.emit(&r, || report_text(&r))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Census(args) => {
            let r = bounded_report(&args, true, exec)?;
            out.emit(&r, || report_text(&r))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Transfer { tuple, target } => {
            let t = tuple.tuple()?;
            let o = transfer_theta(&t, target)?;
            let v = json!({
                "tuple": o.tuple.to_json(),
                "epsilon": o.epsilon,
                "source_index": o.source_index,
                "target_index": o.target_index,
                "certificate": o.certificate,
            });
            out.emit(&v, || {
                format!(
                    "{} over root {} -> root {}, eps = {:+}, certificate {}",
                    fmt_tuple(o.tuple.multipliers()),
                    o.source_index,
                    o.target_index,
                    o.epsilon,
                    if o.certified() { "holds" } else { "FAILS" }
                )
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Parity(args) => {
            let w = args.gen.require()?;
            let r = parity_audit(&w, args.nmax, args.kbound, exec)?;
            out.emit(&r, || {
                let odd: Vec<String> = r.odd_size_members.iter().map(|t| fmt_tuple(t)).collect();
                format!("odd-size quiddities: {}\n{}", odd.len(), odd.join("\n")).trim_end().to_string()
            })?;
            Ok(if r.all_even() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Roots { gen } => {
            let w = gen.require()?;
            let f = w.field();
            let roots: Vec<_> = (0..f.root_count())
                .map(|j| {
                    json!({
                        "index": j,
                        "selected": j == f.selected_index(),
                        "real": f.root_is_real(j),
                        "box": RectDescriptor::from_interval(&f.root_box(j)),
                    })
                })
                .collect();
            out.emit(&roots, || {
                (0..f.root_count())
                    .map(|j| {
                        let b = RectDescriptor::from_interval(&f.root_box(j));
                        let mark = if j == f.selected_index() { "*" } else { " " };
                        format!("{mark}{j}: re [{}, {}] im [{}, {}]", b.re[0], b.re[1], b.im[0], b.im[1])
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Polycrit { poly, radius, dominant } => {
            let p = QPoly::parse_csv(&poly).map_err(|e| anyhow!("polynomial: {e}"))?;
            let r = parse_rational(&radius).map_err(|e| anyhow!("radius: {e}"))?;
            let sc = schur_cohn_count(&p, &r)?;
            let rouche = dominant.map(|j| rouche_dominant_count(&p, j, &r)).transpose()?.flatten();
            let v = json!({
                "poly": p,
                "irreducibility": irreducible_over_q(&p),
                "schur_cohn": sc,
                "dominant_term": rouche,
            });
            out.emit(&v, || {
                let mut s = format!("{p}: {} of {} roots in |z| < {radius}", sc.count, p.degree().unwrap_or(0));
                if let Some(on) = sc.on_boundary.filter(|&n| n > 0) {
                    s.push_str(&format!(", {on} on the circle"));
                }
                s.push_str(&format!("\nirreducibility: {}", irreducible_over_q(&p)));
                if let Some(c) = &rouche {
                    let e = c.rouche.as_ref().expect("dominant-term count has evidence");
                    s.push_str(&format!("\ndominant term: {} < {}, {} roots inside", e.others, e.dominant, c.count));
                }
                s
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            if json {
                eprintln!("{}", json!({ "error": format!("{e:#}") }));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(2)
        }
    }
}
