//! Command implementations behind the `unsharp` binary.
//!
//! Every command produces an [`Outcome`] carrying human-readable text, a
//! JSON document and a pass/fail status; `main` picks the output form and
//! maps the status to an exit code.

pub mod render;

use std::fmt;
use std::path::Path;

use serde_json::{json, Value};
use unsharp_core::deduction::{
    check_lemma1, check_proposition, check_th3, enumerate_deductive_systems, enumerate_filters,
    is_congruence, theta,
};
use unsharp_core::format::{parse_structure, render_structure};
use unsharp_core::generators::build;
use unsharp_core::laws::{
    check_all, check_equation, equation_counterexamples, verify_imp_characterization,
    verify_neg_characterization,
};
use unsharp_core::ops::{is_sharp, make_table};
use unsharp_core::search::{search, SearchConfig};
use unsharp_core::term::parse_equation;
use unsharp_core::{ElemSet, Error, LawId, LawReport, MeetSemilattice, OperatorKind, Subject};

use render::{cell, names, report_json, report_line};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String, std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub passed: bool,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    fn pass(text: String, json: Value) -> Self {
        Outcome {
            passed: true,
            text,
            json,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

/// Reads a structure file, or builds one from a spec string such as
/// `fig1` or `prod:bool:2+mn:3` when no file of that name exists.
pub fn load(arg: &str) -> CliResult<MeetSemilattice> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(arg.to_owned(), e))?;
        let s = parse_structure(&text).map_err(|e| match e {
            Error::Syntax { .. } | Error::AtLine { .. } => CliError::Usage(format!("{arg}: {e}")),
            other => CliError::Core(other),
        })?;
        return Ok(s.with_label(arg));
    }
    match arg.parse() {
        Ok(spec) => Ok(build(&spec)?),
        Err(_) => Err(CliError::Usage(format!(
            "`{arg}` is neither a readable file nor a structure spec"
        ))),
    }
}

/// Parses `d,1` or `{d,1}` into a subset of `s`.
pub fn parse_set(s: &MeetSemilattice, text: &str) -> CliResult<ElemSet> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let parts: Vec<&str> = inner
        .split([',', ' '])
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(CliError::Core(Error::EmptyOperand));
    }
    Ok(s.set_of(&parts)?)
}

pub fn cmd_check(s: &MeetSemilattice) -> Outcome {
    let sharp: ElemSet = (0..s.len()).filter(|&x| is_sharp(s, x)).collect();
    let covers: Vec<[&str; 2]> = s
        .poset()
        .cover_pairs()
        .into_iter()
        .map(|(lo, hi)| [s.name(lo), s.name(hi)])
        .collect();
    let top = s.top().map(|t| s.name(t));
    let text = format!(
        "structure: {}\nelements: {} ({})\nbottom: {}\ntop: {}\nmaximal: {}\nsharp: {}\n",
        s.label(),
        s.len(),
        s.names().join(" "),
        s.name(s.bottom()),
        top.unwrap_or("none"),
        s.render(s.maximal()),
        s.render(&sharp),
    );
    let json = json!({
        "structure": s.label(),
        "elements": s.names(),
        "covers": covers,
        "bottom": s.name(s.bottom()),
        "top": top,
        "maximal": names(s, s.maximal()),
        "sharp": names(s, &sharp),
    });
    Outcome::pass(text, json)
}

pub fn cmd_tables(s: &MeetSemilattice, kind: OperatorKind) -> Outcome {
    let t = make_table(s, kind);
    Outcome::pass(render::table_text(s, &t), render::table_json(s, &t))
}

#[derive(Debug, Clone, Default)]
pub struct LawsOptions {
    pub laws: Vec<LawId>,
    pub equation: Option<String>,
    /// Also run the characterization perturbation checks.
    pub characterize: bool,
    pub trials: usize,
    pub seed: u64,
    /// List every failing binding of `equation`, not just the first.
    pub all: bool,
}

fn reports_outcome(s: &MeetSemilattice, reports: &[LawReport], extra: Option<Value>) -> Outcome {
    let passed = reports
        .iter()
        .all(|r| r.verdict != unsharp_core::Verdict::Fails);
    let mut text: String = reports.iter().map(|r| report_line(s, r) + "\n").collect();
    let mut json = json!({
        "structure": s.label(),
        "passed": passed,
        "records": reports.iter().map(|r| report_json(s, r)).collect::<Vec<_>>(),
    });
    if let Some(Value::Array(all)) = &extra {
        text.push_str(&format!("{} failing bindings\n", all.len()));
        for ce in all {
            let bind: Vec<String> = ce["binding"]
                .as_object()
                .into_iter()
                .flatten()
                .map(|(k, v)| format!("{k}={}", v.as_str().unwrap_or_default()))
                .collect();
            text.push_str(&format!("  {}\n", bind.join(", ")));
        }
        json["counterexamples"] = extra.unwrap();
    }
    Outcome { passed, text, json }
}

pub fn cmd_laws(s: &MeetSemilattice, opts: &LawsOptions) -> CliResult<Outcome> {
    if let Some(src) = &opts.equation {
        let eq = parse_equation(src)?;
        let report = check_equation(s, &eq)?;
        let extra = if opts.all {
            let all = equation_counterexamples(s, &eq)?;
            Some(Value::Array(
                all.iter()
                    .map(|c| render::counterexample_json(s, c))
                    .collect(),
            ))
        } else {
            None
        };
        return Ok(reports_outcome(s, &[report], extra));
    }
    let mut reports: Vec<LawReport> = check_all(s)
        .into_iter()
        .filter(|r| match r.subject {
            Subject::Law(id) => opts.laws.is_empty() || opts.laws.contains(&id),
            _ => true,
        })
        .collect();
    if opts.characterize {
        reports.push(verify_neg_characterization(s, opts.trials, opts.seed));
        reports.push(verify_imp_characterization(s, opts.trials, opts.seed));
    }
    Ok(reports_outcome(s, &reports, None))
}

pub fn cmd_search(equation: &str, cfg: &SearchConfig) -> CliResult<Outcome> {
    let eq = parse_equation(equation)?;
    let out = search(&eq, cfg)?;
    Ok(match out.hit {
        None => Outcome::pass(
            format!(
                "no counterexample ({} structures checked)\n",
                out.structures_checked
            ),
            json!({
                "equation": eq.to_string(),
                "found": false,
                "structures_checked": out.structures_checked,
            }),
        ),
        Some(hit) => {
            let s = &hit.structure;
            let ce = hit.report.counterexample.as_ref().expect("failing report");
            let text = format!(
                "counterexample on {} ({} elements, {} structures checked)\n{}{}\n",
                s.label(),
                s.len(),
                out.structures_checked,
                render_structure(s),
                ce.describe(s)
            );
            Outcome {
                passed: false,
                text,
                json: json!({
                    "equation": eq.to_string(),
                    "found": true,
                    "structures_checked": out.structures_checked,
                    "structure": s.label(),
                    "file": render_structure(s),
                    "counterexample": render::counterexample_json(s, ce),
                }),
            }
        }
    })
}

#[derive(Debug, Clone)]
pub enum DeductionCmd {
    Filters,
    Dsys,
    Theta(String),
    Th3,
    Lemma1,
    Prop(String),
}

fn set_list(s: &MeetSemilattice, sets: &[ElemSet]) -> (String, Value) {
    let text: Vec<String> = sets.iter().map(|x| s.render(x)).collect();
    let json: Vec<Vec<String>> = sets.iter().map(|x| names(s, x)).collect();
    (text.join(" ") + "\n", json!(json))
}

fn report_outcome(s: &MeetSemilattice, r: &LawReport) -> Outcome {
    let text = match (&r.counterexample, &r.note) {
        (None, Some(note)) => format!("{note}\n"),
        (None, None) => format!("holds ({} checked)\n", r.checked),
        (Some(_), _) => report_line(s, r) + "\n",
    };
    Outcome {
        passed: r.holds(),
        text,
        json: report_json(s, r),
    }
}

pub fn cmd_deduction(s: &MeetSemilattice, cmd: &DeductionCmd) -> CliResult<Outcome> {
    Ok(match cmd {
        DeductionCmd::Filters => {
            let filters = enumerate_filters(s);
            let gens: Vec<&str> = (0..s.len()).map(|x| s.name(x)).collect();
            let text: Vec<String> = gens.iter().map(|g| format!("[{g})")).collect();
            let sets: Vec<ElemSet> = filters.iter().map(|f| f.members().clone()).collect();
            Outcome::pass(
                text.join(" ") + "\n",
                json!({
                    "structure": s.label(),
                    "generators": gens,
                    "filters": set_list(s, &sets).1,
                }),
            )
        }
        DeductionCmd::Dsys => {
            let sets: Vec<ElemSet> = enumerate_deductive_systems(s)?
                .iter()
                .map(|d| d.members().clone())
                .collect();
            let (text, list) = set_list(s, &sets);
            Outcome::pass(
                text,
                json!({ "structure": s.label(), "deductive_systems": list }),
            )
        }
        DeductionCmd::Theta(arg) => {
            let a = parse_set(s, arg)?;
            let th = theta(s, &a)?;
            let congruence = is_congruence(s, &th);
            let classes = if th.is_equivalence() {
                th.classes()?
            } else {
                Vec::new()
            };
            let (mut text, list) = set_list(s, &classes);
            if !th.is_equivalence() {
                text = format!("theta({}) is not an equivalence\n", s.render(&a));
            } else if !congruence {
                text.push_str("not a congruence\n");
            }
            Outcome::pass(
                text,
                json!({
                    "structure": s.label(),
                    "set": names(s, &a),
                    "equivalence": th.is_equivalence(),
                    "congruence": congruence,
                    "classes": list,
                }),
            )
        }
        DeductionCmd::Th3 => report_outcome(s, &check_th3(s)?),
        DeductionCmd::Lemma1 => report_outcome(s, &check_lemma1(s)?),
        DeductionCmd::Prop(arg) => {
            let f = parse_set(s, arg)?;
            let r = check_proposition(s, &f).map_err(|e| match e {
                Error::NotAFilter => CliError::Usage(format!("{} is not a filter", s.render(&f))),
                other => CliError::Core(other),
            })?;
            report_outcome(s, &r)
        }
    })
}

/// Renders the structure named by `spec` as a structure file.
pub fn cmd_gen(spec: &str) -> CliResult<Outcome> {
    let s = build(&spec.parse()?)?;
    let file = render_structure(&s);
    Ok(Outcome::pass(
        file.clone(),
        json!({ "structure": s.label(), "file": file }),
    ))
}

/// Table cell for `a -> b`.
pub fn imp_cell(s: &MeetSemilattice, a: usize, b: usize) -> String {
    cell(s, &unsharp_core::ops::imp(s, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use unsharp_core::Fixture;

    #[test]
    fn set_arguments() {
        let s = Fixture::Fig4.build();
        assert_eq!(
            parse_set(&s, "d,1").unwrap(),
            s.set_of(&["d", "1"]).unwrap()
        );
        assert_eq!(
            parse_set(&s, "{d, 1}").unwrap(),
            s.set_of(&["d", "1"]).unwrap()
        );
        assert!(parse_set(&s, "").is_err());
        assert!(parse_set(&s, "q").is_err());
    }

    #[test]
    fn fig1_filters_text() {
        let out = cmd_deduction(&Fixture::Fig1.build(), &DeductionCmd::Filters).unwrap();
        assert_eq!(out.text, "[0) [a) [b) [c)\n");
    }

    #[test]
    fn theta_classes_text() {
        let s = Fixture::Fig4.build();
        let out = cmd_deduction(&s, &DeductionCmd::Theta("d,1".into())).unwrap();
        assert_eq!(out.text, "{0} {a} {b} {c,e,f} {d,1}\n");
    }

    #[test]
    fn skipped_law_passes() {
        let s = Fixture::Fig1.build();
        let opts = LawsOptions {
            laws: vec![LawId::T2_xii],
            ..Default::default()
        };
        let out = cmd_laws(&s, &opts).unwrap();
        assert!(out.passed);
        assert_eq!(out.json["records"][0]["verdict"], "skipped");
        assert_eq!(out.json["records"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn unknown_argument_is_usage_error() {
        assert!(matches!(load("no-such-thing"), Err(CliError::Usage(_))));
    }
}
