//! Command-line front end and the structure file format.
//!
//! ```text
//! # path on three atoms
//! name: path3
//! atoms: a b c
//! contact: adjacency
//! edges: a-b, b-c
//! ```

use crate::algebra::{FiniteBooleanAlgebra, EXHAUSTIVE_ATOMS};
use crate::contact::ContactStructure;
use crate::error::{Error, Result};
use crate::interval::{self, rational, Value};
use crate::points::{self, chain};
use crate::report::{AxiomReport, Verdict};
use crate::spaces::{self, SpaceKind};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContactKind {
    Overlap,
    Adjacency,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub name: Option<String>,
    pub atoms: Vec<String>,
    pub contact: ContactKind,
    pub edges: Vec<(String, String)>,
}

impl SpecFile {
    pub fn to_structure(&self) -> Result<ContactStructure> {
        let b = FiniteBooleanAlgebra::new(&self.atoms)?;
        match self.contact {
            ContactKind::Overlap => Ok(ContactStructure::overlap(b)),
            ContactKind::Adjacency => ContactStructure::from_atom_graph(b, &self.edges),
        }
    }
}

fn err_at(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits on commas and whitespace, keeping 1-based columns.
fn tokens(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        let sep = c == ',' || c.is_whitespace();
        match (sep, start) {
            (true, Some(s)) => {
                out.push((offset + text[..s].chars().count() + 1, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((offset + text[..s].chars().count() + 1, &text[s..]));
    }
    out
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_')
}

pub fn parse_spec(src: &str) -> Result<SpecFile> {
    let mut name = None;
    let mut atoms: Vec<String> = Vec::new();
    let mut atoms_line = None;
    let mut contact = None;
    let mut edges: Vec<(usize, usize, String, String)> = Vec::new();
    let line_count = src.lines().count();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("");
        if text.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = text.split_once(':') else {
            let col = text.chars().take_while(|c| c.is_whitespace()).count() + 1;
            return Err(err_at(line, col, "expected `key: value`"));
        };
        let key_col = text.chars().take_while(|c| c.is_whitespace()).count() + 1;
        let offset = key.chars().count() + 1;
        match key.trim() {
            "name" => name = Some(value.trim().to_string()),
            "atoms" => {
                if atoms_line.is_some() {
                    return Err(err_at(line, key_col, "atoms declared twice"));
                }
                atoms_line = Some(line);
                for (col, t) in tokens(value, offset) {
                    if !valid_name(t) {
                        return Err(err_at(line, col, format!("invalid atom name `{t}`")));
                    }
                    if atoms.iter().any(|a| a == t) {
                        return Err(err_at(line, col, format!("duplicate atom `{t}`")));
                    }
                    atoms.push(t.to_string());
                }
            }
            "contact" => {
                let v = value.trim();
                let col = offset + value.chars().take_while(|c| c.is_whitespace()).count() + 1;
                contact = Some(match v {
                    "overlap" => ContactKind::Overlap,
                    "adjacency" => ContactKind::Adjacency,
                    _ => return Err(err_at(line, col, format!("unknown contact `{v}`, expected overlap or adjacency"))),
                });
            }
            "edges" => {
                for (col, t) in tokens(value, offset) {
                    let parts: Vec<&str> = t.split('-').collect();
                    if parts.len() != 2 || !valid_name(parts[0]) || !valid_name(parts[1]) {
                        return Err(err_at(line, col, format!("malformed edge `{t}`, expected a-b")));
                    }
                    edges.push((line, col, parts[0].to_string(), parts[1].to_string()));
                }
            }
            other => return Err(err_at(line, key_col, format!("unknown key `{other}`"))),
        }
    }
    if atoms.is_empty() {
        return Err(err_at(atoms_line.unwrap_or(line_count + 1), 1, "no atoms declared"));
    }
    let Some(contact) = contact else {
        return Err(err_at(line_count + 1, 1, "missing `contact:` line"));
    };
    for (line, col, a, b) in &edges {
        if contact == ContactKind::Overlap {
            return Err(err_at(*line, *col, "edges given for overlap contact"));
        }
        for (end, c) in [(a, *col), (b, col + a.chars().count() + 1)] {
            if !atoms.contains(end) {
                return Err(err_at(*line, c, format!("unknown atom `{end}`")));
            }
        }
    }
    Ok(SpecFile {
        name,
        atoms,
        contact,
        edges: edges.into_iter().map(|(_, _, a, b)| (a, b)).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PointKind {
    Ultra,
    Round,
    Ends,
    Grz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Stone,
    End,
    Grz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DualityKind {
    Stone,
    Devries,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Origin,
    Tails,
    #[value(name = "deVriesNotEnd")]
    DeVriesNotEnd,
    Stripes4,
    Counterexample,
}

#[derive(Debug, Parser)]
#[command(name = "bca", version, about = "Checks contact algebras, their points and spaces")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    emit: Emit,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Contact axioms, Grzegorczyk conditions and end characterizations
    Check { file: String },
    /// List points of a structure
    Points {
        file: String,
        #[arg(long, value_enum)]
        kind: PointKind,
    },
    /// Build a space of points and check its properties
    Space {
        file: String,
        #[arg(long, value_enum)]
        kind: SpaceArg,
    },
    /// Verify a duality on the structure
    Duality {
        file: String,
        #[arg(long, value_enum)]
        kind: DualityKind,
    },
    /// Regions of the real line
    Ro {
        #[command(subcommand)]
        action: RoAction,
    },
    /// Worked examples on the real line
    Demo {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 20)]
        depth: usize,
        /// Centre of the `origin` family
        #[arg(long, default_value = "0")]
        at: String,
        /// Exit 0 exactly when some verdict fails
        #[arg(long)]
        expect_fail: bool,
    },
}

#[derive(Debug, Subcommand)]
enum RoAction {
    /// Evaluate a region expression or predicate
    Eval { expr: String },
}

enum Outcome {
    Report(AxiomReport, Vec<String>),
    Lines(Vec<String>, serde_json::Value),
}

/// Runs the tool and returns its exit code: 0 when every verdict passes or
/// holds, 1 when one fails, 2 on usage or parse errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    let expect_fail = matches!(cli.command, Command::Demo { expect_fail: true, .. });
    match execute(&cli) {
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Ok(Outcome::Lines(lines, json)) => {
            if cli.emit == Emit::Json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("json"));
            } else {
                for l in lines {
                    let _ = writeln!(out, "{l}");
                }
            }
            0
        }
        Ok(Outcome::Report(report, preamble)) => {
            if cli.emit == Emit::Json {
                let _ = writeln!(out, "{}", report.to_json());
            } else {
                for l in preamble {
                    let _ = writeln!(out, "{l}");
                }
                let _ = write!(out, "{report}");
            }
            let failed = !report.all_pass();
            match (failed, expect_fail) {
                (false, false) | (true, true) => 0,
                _ => 1,
            }
        }
    }
}

fn load(path: &str) -> Result<ContactStructure> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {path}: {e}")))?;
    parse_spec(&src)?.to_structure()
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Check { file } => {
            let s = load(file)?;
            let mut r = s.check_contact_axioms()?;
            r.extend(points::check_g1_g2(&s)?);
            if s.atom_count() <= EXHAUSTIVE_ATOMS {
                r.extend(points::check_end_characterizations(&s)?);
            }
            Ok(Outcome::Report(r, Vec::new()))
        }
        Command::Points { file, kind } => {
            let s = load(file)?;
            let filters = match kind {
                PointKind::Ultra => s.algebra().ultrafilters(),
                PointKind::Round => points::round_filters(&s),
                PointKind::Ends => points::enumerate_ends(&s),
                PointKind::Grz => points::enumerate_g_points(&s)?,
            };
            let lines: Vec<String> = filters.iter().map(|&f| s.algebra().format_filter(f)).collect();
            let json = serde_json::json!(lines);
            if lines.is_empty() {
                return Ok(Outcome::Lines(vec!["(none)".into()], json));
            }
            Ok(Outcome::Lines(lines, json))
        }
        Command::Space { file, kind } => {
            let s = load(file)?;
            let kind = match kind {
                SpaceArg::Stone => SpaceKind::Stone,
                SpaceArg::End => SpaceKind::End,
                SpaceArg::Grz => SpaceKind::Grz,
            };
            let (ps, r) = spaces::space_report(&s, kind)?;
            if cli.emit == Emit::Dot {
                let lines = vec![ps.space.to_dot()];
                return Ok(Outcome::Lines(lines, serde_json::Value::Null));
            }
            let x = &ps.space;
            let mut pre = vec![format!("points: {}", x.labels().join(" "))];
            let opens: Vec<String> = x.opens().iter().map(|&o| x.format_set(o)).collect();
            pre.push(format!("opens: {}", opens.join(" ")));
            Ok(Outcome::Report(r, pre))
        }
        Command::Duality { file, kind } => {
            let s = load(file)?;
            let d = match kind {
                DualityKind::Stone => spaces::verify_stone_duality(s.algebra())?,
                DualityKind::Devries => spaces::verify_de_vries_embedding(&s)?,
            };
            let pre = d.table.iter().map(|(x, set)| format!("{x} -> {set}")).collect();
            Ok(Outcome::Report(d.verdicts, pre))
        }
        Command::Ro { action: RoAction::Eval { expr } } => {
            let v = interval::evaluate(expr)?;
            let json = match &v {
                Value::Bool(b) => serde_json::json!(b),
                Value::Region(r) => serde_json::json!(r.to_string()),
            };
            Ok(Outcome::Lines(vec![v.to_string()], json))
        }
        Command::Demo { family, depth, at, .. } => demo(*family, *depth, at),
    }
}

fn prefix_lines(c: &chain::RegionChain, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{}[{i}] = {}", c.name(), c.get(i))).collect()
}

fn demo(family: Family, depth: usize, at: &str) -> Result<Outcome> {
    let mut r = AxiomReport::new();
    let mut pre = Vec::new();
    match family {
        Family::Origin => {
            let centre = rational::parse(at).ok_or_else(|| err_at(1, 1, format!("bad rational `{at}`")))?;
            let c = chain::origin(centre);
            pre.extend(prefix_lines(&c, 3));
            r.push(chain::is_abstractive(&c, depth));
            r.push(chain::g_rep_falsify(&c, depth, chain::Catalog::Periodic)?);
            r.push(chain::is_w_representative(&c, depth)?);
        }
        Family::Tails => {
            let c = chain::tails();
            pre.extend(prefix_lines(&c, 3));
            r.push(chain::is_abstractive(&c, depth));
            r.push(chain::g_rep_falsify(&c, depth, chain::Catalog::Periodic)?);
            let mut plain = chain::g_rep_falsify(&c, depth, chain::Catalog::Plain)?;
            plain.axiom = "r3(plain)".into();
            r.push(plain);
            r.push(chain::is_w_representative(&c, depth)?);
        }
        Family::DeVriesNotEnd => {
            pre.extend(prefix_lines(&chain::de_vries_not_end(), 3));
            pre.extend(prefix_lines(&chain::de_vries_larger(), 3));
            r.extend(chain::de_vries_not_end_report(depth));
        }
        Family::Stripes4 => {
            let (u, v) = chain::stripes4();
            pre.push(format!("u = {u}"));
            pre.push(format!("v = {v}"));
            r.push(match u.contact_witness(&v) {
                None => Verdict::pass("separated", 1),
                Some(p) => Verdict::fail("separated", vec![rational::format(&p)]),
            });
            let tails = chain::tails();
            for (label, x) in [("u-overlaps-tails", &u), ("v-overlaps-tails", &v)] {
                r.push(match (0..=depth).find(|&i| !x.overlaps(&tails.get(i))) {
                    None => Verdict::holds_to_depth(label, depth),
                    Some(i) => Verdict::fail(label, vec![tails.get(i).to_string()]),
                });
            }
        }
        Family::Counterexample => {
            let (u, v) = chain::stripes4();
            let x = chain::tails();
            let y = chain::build_counterexample_sequence(&x, &u, &v, depth)?;
            pre.extend(prefix_lines(&y, 3));
            r.extend(chain::counterexample_report(&x, &y, depth));
        }
    }
    Ok(Outcome::Report(r, pre))
}
