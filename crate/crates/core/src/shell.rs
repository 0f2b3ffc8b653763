//! Command layer behind the `latbel` binary.
//!
//! Each command loads its inputs through a [`Workspace`], calls one library
//! operation and renders the result as a text report and as JSON. Exit codes
//! are uniform: 0 when the property holds or the computation succeeds, 1 when
//! the property fails, 2 on input errors.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::capacity::{self, ConjugateKind, MonotoneDegree};
use crate::duality::{self, Negation};
use crate::error::{Error, Result};
use crate::evidence::{self, CombinationPolicy, SupportWeights};
use crate::io::{self, Distribution};
use crate::lattice::{self, lattice_from_poset, Elem, Lattice, Poset, Property};
use crate::limits::{Limits, TOLERANCE};
use crate::possibilistic::{self, PossibilityDistribution};
use crate::transforms::{self, SetFunction};
use crate::verdict::Verdict;

#[derive(Debug, Parser)]
#[command(name = "latbel", version, about = "Belief functions on finite lattices")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Tolerance for comparisons of real values.
    #[arg(long, global = true, default_value_t = TOLERANCE)]
    pub tolerance: f64,
    /// Largest number of elements accepted in a lattice or poset.
    #[arg(long, global = true)]
    pub max_elements: Option<usize>,
    /// Largest number of families inspected by k-monotonicity checks.
    #[arg(long, global = true)]
    pub max_families: Option<usize>,
    /// Largest number of maximal chains enumerated.
    #[arg(long, global = true)]
    pub max_chains: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural profile of a lattice file.
    Check { lattice: PathBuf },
    /// Lattice of downsets of a poset file.
    Birkhoff {
        poset: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Möbius function as a matrix.
    Mobius { lattice: PathBuf },
    /// Applies a transform to a function file.
    Transform {
        #[arg(value_enum)]
        direction: Direction,
        function: PathBuf,
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Belief-function operations.
    Bel {
        #[command(subcommand)]
        command: BelCommand,
    },
    /// Possibility operations.
    Poss {
        #[command(subcommand)]
        command: PossCommand,
    },
    /// ∨-negations of a lattice.
    Negations {
        lattice: PathBuf,
        /// Enumerate every negation.
        #[arg(long, conflicts_with = "limit")]
        all: bool,
        #[arg(long, default_value_t = 1)]
        limit: usize,
    },
    /// Maximal chains of a lattice.
    Chains { lattice: PathBuf },
    /// Hasse diagram in DOT format; accepts posets too.
    Dot { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Mobius,
    Zeta,
    Comobius,
    InverseComobius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    Raw,
    ZeroBottom,
    Normalize,
}

impl From<Policy> for CombinationPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::Raw => CombinationPolicy::Raw,
            Policy::ZeroBottom => CombinationPolicy::ZeroBottom,
            Policy::Normalize => CombinationPolicy::Normalize,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Conjugation {
    Vee,
    Wedge,
}

#[derive(Debug, Args)]
pub struct FunctionArgs {
    pub function: PathBuf,
    #[arg(long)]
    pub lattice: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long)]
    pub lattice: PathBuf,
    /// Negation file; when omitted the first negation found is used.
    #[arg(long)]
    pub negation: Option<PathBuf>,
    #[arg(long)]
    pub pi: PathBuf,
    /// Writes the focal masses as a function file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum BelCommand {
    /// Capacity and belief report.
    Check(FunctionArgs),
    /// k-monotonicity.
    Kmono {
        k: usize,
        #[command(flatten)]
        input: FunctionArgs,
    },
    /// k-valuation.
    Valuation {
        k: usize,
        #[command(flatten)]
        input: FunctionArgs,
    },
    /// Conjugate under a ∨-negation.
    Conjugate {
        #[command(flatten)]
        input: FunctionArgs,
        #[arg(long)]
        negation: PathBuf,
        #[arg(long, value_enum, default_value = "vee")]
        kind: Conjugation,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dempster's rule on two mass files.
    Combine {
        m1: PathBuf,
        m2: PathBuf,
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long, value_enum, default_value = "raw")]
        policy: Policy,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weights of simple support functions.
    Decompose {
        #[command(flatten)]
        input: FunctionArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mass of the combination of simple supports given by a weights file.
    Recombine {
        weights: PathBuf,
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Min-identity check.
    Necessity(FunctionArgs),
    /// Max-identity check.
    Possibility(FunctionArgs),
    /// Focal chain of a possibility distribution.
    Reconstruct(ReconstructArgs),
}

#[derive(Debug, Subcommand)]
pub enum PossCommand {
    /// Same as `bel reconstruct`.
    Reconstruct(ReconstructArgs),
}

/// Settings shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub tolerance: f64,
    pub limits: Limits,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            tolerance: TOLERANCE,
            limits: Limits::default(),
        }
    }
}

/// Loaded inputs, keyed by path.
#[derive(Debug, Default)]
pub struct Workspace {
    pub config: Config,
    lattices: HashMap<PathBuf, Arc<Lattice>>,
    warnings: Vec<String>,
}

impl Workspace {
    pub fn new(config: Config) -> Self {
        Workspace {
            config,
            ..Workspace::default()
        }
    }

    fn note_dropped(&mut self, p: &Poset, path: &Path) {
        for &(x, y) in p.dropped_covers() {
            self.warnings.push(format!(
                "{}: cover ({}, {}) is implied by transitivity and was dropped",
                path.display(),
                p.name(x),
                p.name(y)
            ));
        }
    }

    pub fn poset(&mut self, path: &Path) -> Result<Poset> {
        let p = io::parse_poset(&io::read(path)?, &self.config.limits).map_err(|e| at(path, e))?;
        self.note_dropped(&p, path);
        Ok(p)
    }

    pub fn lattice(&mut self, path: &Path) -> Result<Arc<Lattice>> {
        if let Some(l) = self.lattices.get(path) {
            return Ok(Arc::clone(l));
        }
        let p = self.poset(path)?;
        let l = Arc::new(lattice_from_poset(p)?);
        self.lattices.insert(path.to_path_buf(), Arc::clone(&l));
        Ok(l)
    }

    pub fn function(&mut self, lattice: &Path, path: &Path) -> Result<SetFunction> {
        let l = self.lattice(lattice)?;
        io::parse_function(&l, &io::read(path)?).map_err(|e| at(path, e))
    }

    pub fn weights(&mut self, lattice: &Path, path: &Path) -> Result<SupportWeights> {
        let l = self.lattice(lattice)?;
        io::parse_weights(&l, &io::read(path)?).map_err(|e| at(path, e))
    }

    pub fn negation(&mut self, lattice: &Path, path: &Path) -> Result<Negation> {
        let l = self.lattice(lattice)?;
        io::parse_negation(&l, &io::read(path)?).map_err(|e| at(path, e))
    }

    pub fn distribution(&mut self, lattice: &Path, path: &Path) -> Result<Distribution> {
        let l = self.lattice(lattice)?;
        io::parse_distribution(&l, &io::read(path)?).map_err(|e| at(path, e))
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Prefixes format errors with the file they come from.
fn at(path: &Path, e: Error) -> Error {
    match e {
        Error::Format(msg) => Error::Format(format!("{}: {msg}", path.display())),
        other => other,
    }
}

/// Result of a command.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    fn new(code: u8, text: String, json: Value) -> Self {
        Outcome { code, text, json }
    }

    fn error(e: &Error) -> Self {
        Outcome::new(2, format!("error: {e}\n"), json!({ "error": e.to_string() }))
    }

    /// What the binary prints on stdout.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

/// Parses nothing; runs an already parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let mut limits = Limits::from_env();
    if let Some(n) = cli.max_elements {
        limits.max_elements = n;
    }
    if let Some(n) = cli.max_families {
        limits.max_families = n;
    }
    if let Some(n) = cli.max_chains {
        limits.max_chains = n;
    }
    let mut ws = Workspace::new(Config {
        tolerance: cli.tolerance,
        limits,
    });
    let mut outcome = match execute(&mut ws, &cli.command) {
        Ok(o) => o,
        Err(e @ Error::NotALattice { .. }) if matches!(cli.command, Command::Check { .. }) => {
            Outcome::new(1, format!("is_lattice: false\nwitness: {e}\n"), json!({ "is_lattice": false, "witness": e.to_string() }))
        }
        Err(e) => Outcome::error(&e),
    };
    if !ws.warnings.is_empty() {
        let mut text: String = ws.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
        text.push_str(&outcome.text);
        outcome.text = text;
        if let Value::Object(obj) = &mut outcome.json {
            obj.insert("warnings".into(), json!(ws.warnings));
        }
    }
    outcome
}

pub fn execute(ws: &mut Workspace, command: &Command) -> Result<Outcome> {
    let tol = ws.config.tolerance;
    match command {
        Command::Check { lattice } => cmd_check(&*ws.lattice(lattice)?),
        Command::Birkhoff { poset, out } => {
            let p = ws.poset(poset)?;
            let d = lattice::downset_lattice_with(&p, &ws.config.limits)?;
            let text = io::lattice_to_json(&d.lattice);
            write_out(out.as_deref(), &text)?;
            Ok(Outcome::new(0, text.clone(), serde_json::from_str(&text).expect("valid JSON")))
        }
        Command::Mobius { lattice } => Ok(cmd_mobius(&*ws.lattice(lattice)?)),
        Command::Transform {
            direction,
            function,
            lattice,
            out,
        } => {
            let f = ws.function(lattice, function)?;
            let g = match direction {
                Direction::Mobius => transforms::mobius_transform(&f),
                Direction::Zeta => transforms::zeta_transform(&f),
                Direction::Comobius => transforms::comobius_transform(&f),
                Direction::InverseComobius => transforms::mass_from_comobius(&f),
            };
            function_outcome(&g, out.as_deref())
        }
        Command::Bel { command } => bel(ws, command, tol),
        Command::Poss {
            command: PossCommand::Reconstruct(args),
        } => cmd_reconstruct(ws, args),
        Command::Negations { lattice, all, limit } => {
            let l = ws.lattice(lattice)?;
            let found = duality::negations(&l, if *all { usize::MAX } else { *limit });
            Ok(cmd_negations(&l, &found))
        }
        Command::Chains { lattice } => {
            let l = ws.lattice(lattice)?;
            let chains = lattice::maximal_chains_with(&l, &ws.config.limits)?;
            let text: String = chains
                .iter()
                .map(|c| format!("{}\n", l.names_of(c).join(" < ")))
                .collect();
            let list: Vec<Vec<String>> = chains.iter().map(|c| l.names_of(c)).collect();
            Ok(Outcome::new(0, text, json!({ "chains": list })))
        }
        Command::Dot { file } => {
            let p = ws.poset(file)?;
            let text = match lattice_from_poset(p.clone()) {
                Ok(l) => lattice::lattice_to_dot(&l),
                Err(Error::NotALattice { .. }) => lattice::poset_to_dot(&p),
                Err(e) => return Err(e),
            };
            Ok(Outcome::new(0, text.clone(), json!({ "dot": text })))
        }
    }
}

fn write_out(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => io::write(path, text),
        None => Ok(()),
    }
}

fn code(v: &Verdict) -> u8 {
    if v.holds() {
        0
    } else {
        1
    }
}

fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let mut s: String = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn names_json(l: &Lattice, xs: &[Elem]) -> Value {
    json!(l.names_of(xs))
}

fn verdict_text(l: &Lattice, v: &Verdict) -> String {
    match v.witness() {
        None => "holds\n".into(),
        Some(w) => {
            let mut s = format!("fails at ({})", l.names_of(&w.elements).join(", "));
            if let (Some(a), Some(b)) = (w.lhs, w.rhs) {
                s.push_str(&format!(": lhs {a}, rhs {b}"));
            }
            s.push('\n');
            s
        }
    }
}

fn verdict_json(l: &Lattice, v: &Verdict) -> Value {
    match v.witness() {
        None => json!({ "holds": true }),
        Some(w) => json!({
            "holds": false,
            "witness": names_json(l, &w.elements),
            "lhs": w.lhs,
            "rhs": w.rhs,
        }),
    }
}

fn verdict_outcome(l: &Lattice, v: &Verdict) -> Outcome {
    Outcome::new(code(v), verdict_text(l, v), verdict_json(l, v))
}

fn cmd_check(l: &Lattice) -> Result<Outcome> {
    let p = lattice::profile(l);
    let mut text = String::from("is_lattice: true\n");
    let mut props = Map::new();
    for prop in Property::ALL {
        let holds = p.get(prop);
        let witness = p.witnesses.get(&prop);
        text.push_str(&format!("{prop}: {holds}"));
        if let Some(w) = witness.filter(|w| !w.is_empty()) {
            text.push_str(&format!("  witness: {}", l.names_of(w).join(", ")));
        }
        text.push('\n');
        props.insert(
            prop.as_str().into(),
            json!({ "holds": holds, "witness": witness.map(|w| l.names_of(w)) }),
        );
    }
    Ok(Outcome::new(0, text, json!({ "is_lattice": true, "properties": props })))
}

fn cmd_mobius(l: &Lattice) -> Outcome {
    let mu = l.mobius();
    let names: Vec<String> = l.elements().map(|x| l.name(x).to_string()).collect();
    let rows: Vec<Vec<String>> = l
        .elements()
        .map(|x| {
            std::iter::once(l.name(x).to_string())
                .chain(l.elements().map(|y| mu.get(x, y).to_string()))
                .collect()
        })
        .collect();
    let mut headers = vec!["μ"];
    headers.extend(names.iter().map(String::as_str));
    let matrix: Vec<Vec<i64>> = l
        .elements()
        .map(|x| l.elements().map(|y| mu.get(x, y)).collect())
        .collect();
    Outcome::new(0, table(&headers, &rows), json!({ "elements": names, "mu": matrix }))
}

fn function_table(f: &SetFunction) -> String {
    let l = f.lattice();
    let rows: Vec<Vec<String>> = f
        .iter()
        .map(|(x, v)| vec![l.name(x).to_string(), v.to_string()])
        .collect();
    table(&["element", "value"], &rows)
}

fn function_outcome(f: &SetFunction, out: Option<&Path>) -> Result<Outcome> {
    let text = io::function_to_json(f);
    write_out(out, &text)?;
    Ok(Outcome::new(0, function_table(f), serde_json::from_str(&text).expect("valid JSON")))
}

fn focal_table(f: &SetFunction, tol: f64) -> String {
    let l = f.lattice();
    let rows: Vec<Vec<String>> = evidence::focal_elements(f, tol)
        .into_iter()
        .map(|x| vec![l.name(x).to_string(), f[x].to_string()])
        .collect();
    table(&["focal", "mass"], &rows)
}

fn mass_outcome(f: &SetFunction, out: Option<&Path>, tol: f64) -> Result<Outcome> {
    let mut o = function_outcome(f, out)?;
    o.text = focal_table(f, tol);
    Ok(o)
}

fn degree_str(d: MonotoneDegree) -> String {
    match d {
        MonotoneDegree::None => "none".into(),
        MonotoneDegree::UpTo(k) => k.to_string(),
        MonotoneDegree::Total => "total".into(),
    }
}

fn bel(ws: &mut Workspace, command: &BelCommand, tol: f64) -> Result<Outcome> {
    let limits = ws.config.limits;
    match command {
        BelCommand::Check(FunctionArgs { function, lattice }) => {
            let f = ws.function(lattice, function)?;
            let l = f.lattice();
            let r = capacity::capacity_report(&f, tol, &limits)?;
            let mut text = format!(
                "capacity: {}\nbelief: {}\nnecessity: {}\nmax_k_monotone: {}\n",
                r.is_capacity,
                r.is_belief,
                r.is_necessity_hint,
                degree_str(r.max_k_monotone)
            );
            let witness = r.failure_witness.as_ref().map(|w| {
                let v = Verdict::Fails(w.clone());
                text.push_str(&format!("witness: {}", verdict_text(l, &v)));
                verdict_json(l, &v)
            });
            let json = json!({
                "is_capacity": r.is_capacity,
                "is_belief": r.is_belief,
                "is_necessity": r.is_necessity_hint,
                "max_k_monotone": degree_str(r.max_k_monotone),
                "failure": witness,
            });
            Ok(Outcome::new(if r.is_belief { 0 } else { 1 }, text, json))
        }
        BelCommand::Kmono { k, input } | BelCommand::Valuation { k, input } => {
            if *k < 2 {
                return Err(Error::Format("k must be at least 2".into()));
            }
            let f = ws.function(&input.lattice, &input.function)?;
            let v = if matches!(command, BelCommand::Kmono { .. }) {
                capacity::check_k_monotone(&f, *k, tol, &limits)?
            } else {
                capacity::check_k_valuation(&f, *k, tol, &limits)?
            };
            Ok(verdict_outcome(f.lattice(), &v))
        }
        BelCommand::Conjugate {
            input,
            negation,
            kind,
            out,
        } => {
            let f = ws.function(&input.lattice, &input.function)?;
            let n = ws.negation(&input.lattice, negation)?;
            let kind = match kind {
                Conjugation::Vee => ConjugateKind::Vee,
                Conjugation::Wedge => ConjugateKind::Wedge,
            };
            function_outcome(&capacity::conjugate(&f, &n, kind)?, out.as_deref())
        }
        BelCommand::Combine {
            m1,
            m2,
            lattice,
            policy,
            out,
        } => {
            let a = ws.function(lattice, m1)?;
            let b = ws.function(lattice, m2)?;
            let m = evidence::combine(&a, &b, (*policy).into())?;
            mass_outcome(&m, out.as_deref(), tol)
        }
        BelCommand::Decompose { input, out } => {
            let f = ws.function(&input.lattice, &input.function)?;
            let w = evidence::decompose(&f)?;
            let text = io::weights_to_json(&w);
            write_out(out.as_deref(), &text)?;
            let l = w.lattice();
            let rows: Vec<Vec<String>> = w
                .entries()
                .iter()
                .map(|&(y, v)| vec![l.name(y).to_string(), v.to_string()])
                .collect();
            Ok(Outcome::new(
                0,
                table(&["focus", "weight"], &rows),
                serde_json::from_str(&text).expect("valid JSON"),
            ))
        }
        BelCommand::Recombine { weights, lattice, out } => {
            let w = ws.weights(lattice, weights)?;
            mass_outcome(&evidence::recombine(&w), out.as_deref(), tol)
        }
        BelCommand::Necessity(FunctionArgs { function, lattice }) => {
            let f = ws.function(lattice, function)?;
            Ok(verdict_outcome(f.lattice(), &possibilistic::check_necessity(&f, tol)))
        }
        BelCommand::Possibility(FunctionArgs { function, lattice }) => {
            let f = ws.function(lattice, function)?;
            Ok(verdict_outcome(f.lattice(), &possibilistic::check_possibility(&f, tol)))
        }
        BelCommand::Reconstruct(args) => cmd_reconstruct(ws, args),
    }
}

fn cmd_reconstruct(ws: &mut Workspace, args: &ReconstructArgs) -> Result<Outcome> {
    let l = ws.lattice(&args.lattice)?;
    let n = match &args.negation {
        Some(path) => ws.negation(&args.lattice, path)?,
        None => duality::negations(&l, 1).pop().ok_or(Error::NotAutodual)?,
    };
    let pi: PossibilityDistribution = match ws.distribution(&args.lattice, &args.pi)? {
        Distribution::Possibility(pi) => pi,
        Distribution::Necessity(_) => {
            return Err(Error::Format(format!(
                "{}: expected a \"pi\" distribution",
                args.pi.display()
            )))
        }
    };
    let fc = possibilistic::reconstruct_chain(&n, &pi)?;
    write_out(args.out.as_deref(), &io::function_to_json(fc.mass.function()))?;

    let names = |xs: &[Elem]| format!("{{{}}}", l.names_of(xs).join(", "));
    let rows: Vec<Vec<String>> = fc
        .steps
        .iter()
        .map(|s| {
            vec![
                s.k.to_string(),
                l.name(s.x).to_string(),
                l.name(s.negated).to_string(),
                names(&s.eta_negated),
                l.name(s.iota).to_string(),
                l.name(s.chain_element).to_string(),
                s.mass.to_string(),
            ]
        })
        .collect();
    let text = table(&["step", "x", "n(x)", "η(n(x))", "ι_k", "chain", "mass"], &rows);
    let steps: Vec<Value> = fc
        .steps
        .iter()
        .map(|s| {
            json!({
                "step": s.k,
                "x": l.name(s.x),
                "n(x)": l.name(s.negated),
                "eta(n(x))": names_json(&l, &s.eta_negated),
                "iota": l.name(s.iota),
                "chain": l.name(s.chain_element),
                "mass": s.mass,
            })
        })
        .collect();
    let json = json!({
        "order": names_json(&l, &fc.order),
        "iota": names_json(&l, &fc.iota),
        "chain": names_json(&l, &fc.chain),
        "steps": steps,
    });
    Ok(Outcome::new(0, text, json))
}

fn cmd_negations(l: &Lattice, found: &[Negation]) -> Outcome {
    let mut text = String::new();
    let mut list = Vec::new();
    for (i, n) in found.iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        let rows: Vec<Vec<String>> = l
            .elements()
            .map(|x| vec![l.name(x).to_string(), l.name(n.apply(x)).to_string()])
            .collect();
        text.push_str(&table(&["x", "n(x)"], &rows));
        let map: Map<String, Value> = l
            .elements()
            .map(|x| (l.name(x).to_string(), json!(l.name(n.apply(x)))))
            .collect();
        list.push(Value::Object(map));
    }
    if found.is_empty() {
        text.push_str("no negation: the lattice is not autodual\n");
    }
    Outcome::new(
        if found.is_empty() { 1 } else { 0 },
        text,
        json!({ "negations": list }),
    )
}

/// Parses `args` and runs the command.
pub fn main_with_args<I, T>(args: I) -> std::result::Result<(Outcome, bool), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    Ok((run(&cli), cli.json))
}
