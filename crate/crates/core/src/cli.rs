//! The `crossed-hqft` command line: check, build, eval, verify and demo.
//!
//! Exit codes: 0 pass, 1 axiom or verification failure, 2 malformed input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::crossed_algebras::{
    aut_square_check, check_adjunction, check_boxed_identities, check_crossed_algebra,
    group_algebra_c, group_algebra_p, kp_iso_witness, pullback, pushforward, AlgebraError,
    CrossedAlgebra, DEFAULT_SEARCH_BOUND,
};
use crate::crossed_modules::CrossedModule;
use crate::exact_linalg::{FieldKind, Scalar};
use crate::fixtures::{algebra_name, standard_workspace, write_fixtures};
use crate::formal_maps::{CobordismExpression, ElementaryPiece, FormalBoundary};
use crate::formats::{
    to_json, AlgebraDoc, AlgebraMorphismDoc, ElemRef, EvaluatedDoc, FieldDoc, FormatError,
    KpIsoDoc, SUPPORTED_PRIMES,
};
use crate::hqft::{check_equivalence_invariance, random_expression, FormalHqft, HqftError};
use crate::report::Report;
use crate::with_field;
use crate::workspace::{Document, ObjectKind, Workspace, WorkspaceError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

/// Random expressions per algebra in the round-trip suite.
pub const ROUND_TRIP_SAMPLES: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "crossed-hqft",
    version,
    about = "Crossed modules, crossed C-algebras and formal HQFT evaluation"
)]
pub struct Cli {
    /// Ground field for algebra-producing commands: Q or Fp:<p>.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<FieldKind>,
    /// Write the main output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Fixture directory; defaults to ./fixtures, or the built-in set if that is absent.
    #[arg(long, global = true)]
    pub fixtures_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the checker for one object, by name or JSON file path.
    Check {
        /// group, crossed-module, morphism, algebra, expression or simplicial
        kind: String,
        target: String,
    },
    /// Build an algebra (or the K[P] isomorphism witness) and re-check it.
    Build {
        #[command(subcommand)]
        construction: Construction,
    },
    /// Evaluate an expression with the HQFT of an algebra.
    Eval { algebra: String, expression: String },
    /// Run verification suites over every fixture.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Walk through the fixtures; with --write-fixtures, regenerate them instead.
    Demo {
        #[arg(long)]
        write_fixtures: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construction {
    /// The group algebra K[C], graded by ∂.
    #[command(name = "kC")]
    KC { crossed_module: String },
    /// The group algebra K[P].
    #[command(name = "kP")]
    KP { crossed_module: String },
    /// f*(L′) for L′ over the target of the morphism.
    Pullback { morphism: String, algebra: String },
    /// f_*(L) for L over the source of the morphism.
    Pushforward { morphism: String, algebra: String },
    /// K[P] ≅ q*(K[P/∂C]) with its witness and report.
    #[command(name = "kp_iso")]
    KpIso { crossed_module: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Boxed,
    Equivalence,
    Adjunction,
    RoundTrip,
    All,
    None,
}

fn parse_field(s: &str) -> Result<FieldKind, String> {
    let k: FieldKind = s
        .parse()
        .map_err(|_| format!("expected Q or Fp:<p> with p one of {SUPPORTED_PRIMES:?}"))?;
    FieldDoc::from_kind(k).kind().map_err(|e| e.to_string())
}

/// A failed command: either malformed input or a failed check.
#[derive(Debug)]
enum CliError {
    Malformed(String),
    Failed(String),
}

impl From<WorkspaceError> for CliError {
    fn from(e: WorkspaceError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Axioms(r) => CliError::Failed(r.summary()),
            other => CliError::Malformed(other.to_string()),
        }
    }
}

impl From<HqftError> for CliError {
    fn from(e: HqftError) -> Self {
        CliError::Failed(e.to_string())
    }
}

type CliResult = Result<i32, CliError>;

struct Ctx<'a> {
    cli: &'a Cli,
    ws: Workspace,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, text: &str) -> Result<(), CliError> {
        match &self.cli.out {
            Some(path) => fs::write(path, text)
                .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display()))),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Malformed(e.to_string())),
        }
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.stderr, "{text}");
    }

    fn field_or(&self, default: FieldKind) -> Result<FieldKind, CliError> {
        match self.cli.field {
            Some(f) if f != default => Err(CliError::Malformed(format!(
                "--field {f} conflicts with the input algebra over {default}"
            ))),
            _ => Ok(default),
        }
    }

    /// A registered name, or a path to a JSON document checked against the workspace.
    fn document(&self, kind: ObjectKind, target: &str) -> Result<Document, CliError> {
        let doc = if let Some(d) = self.ws.document(target) {
            d.clone()
        } else if target.ends_with(".json") || Path::new(target).is_file() {
            let text = fs::read_to_string(target)
                .map_err(|e| CliError::Malformed(format!("{target}: {e}")))?;
            let doc = Document::parse(&text)
                .map_err(|e| CliError::Malformed(format!("{target}: {e}")))?;
            self.ws.validate(&doc)?;
            doc
        } else {
            return Err(WorkspaceError::UnknownObject {
                kind,
                name: target.to_string(),
            }
            .into());
        };
        if doc.kind() != kind {
            return Err(CliError::Malformed(format!(
                "{target} is a {}, not a {kind}",
                doc.kind()
            )));
        }
        Ok(doc)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
                return EXIT_PASS;
            }
            let _ = stderr.write_all(text.as_bytes());
            return EXIT_MALFORMED;
        }
    };
    if let Command::Demo {
        write_fixtures: Some(dir),
    } = &cli.command
    {
        return match write_fixtures(dir) {
            Ok(()) => EXIT_PASS,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_MALFORMED
            }
        };
    }
    let ws = match load_workspace(cli.fixtures_dir.as_deref()) {
        Ok(ws) => ws,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_MALFORMED;
        }
    };
    let mut ctx = Ctx {
        cli: &cli,
        ws,
        stdout,
        stderr,
    };
    let result = match &cli.command {
        Command::Check { kind, target } => cmd_check(&mut ctx, kind, target),
        Command::Build { construction } => cmd_build(&mut ctx, construction),
        Command::Eval {
            algebra,
            expression,
        } => cmd_eval(&mut ctx, algebra, expression),
        Command::Verify { suite } => cmd_verify(&mut ctx, *suite),
        Command::Demo { .. } => cmd_demo(&mut ctx),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Malformed(m)) => {
            ctx.note(&format!("error: {m}"));
            EXIT_MALFORMED
        }
        Err(CliError::Failed(m)) => {
            ctx.note(&format!("failed: {m}"));
            EXIT_FAIL
        }
    }
}

fn load_workspace(dir: Option<&Path>) -> Result<Workspace, WorkspaceError> {
    match dir {
        Some(d) => Workspace::load_dir(d),
        None if Path::new("fixtures").is_dir() => Workspace::load_dir(Path::new("fixtures")),
        None => Ok(standard_workspace()),
    }
}

fn exit_for(report: &Report) -> i32 {
    if report.passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn cmd_check(ctx: &mut Ctx<'_>, kind: &str, target: &str) -> CliResult {
    let kind = ObjectKind::parse(kind)
        .ok_or_else(|| CliError::Malformed(format!("unknown kind {kind:?}")))?;
    let doc = ctx.document(kind, target)?;
    let report = ctx.ws.check(&doc)?;
    ctx.emit(&to_json(&report))?;
    if let Some(v) = report.first_violation() {
        let v = v.clone();
        ctx.note(&format!(
            "{}: first counterexample {} at {}: {}",
            report.subject, v.axiom, v.instance, v.detail
        ));
    }
    Ok(exit_for(&report))
}

/// Serializes, reloads and re-checks an algebra; writes it either way.
fn finish_algebra<F: Scalar>(
    ctx: &mut Ctx<'_>,
    name: &str,
    cm_name: &str,
    l: &CrossedAlgebra<F>,
) -> CliResult {
    let doc = AlgebraDoc::from_algebra(name, cm_name, l);
    let text = to_json(&doc);
    let reloaded: AlgebraDoc = serde_json::from_str(&text).map_err(FormatError::from)?;
    let back: CrossedAlgebra<F> = ctx.ws.algebra_from_doc(&reloaded)?;
    if &back != l {
        return Err(CliError::Failed(
            "serialization round trip changed the algebra".into(),
        ));
    }
    let report = check_crossed_algebra(&back);
    ctx.emit(&text)?;
    ctx.note(&report.summary());
    if let Some(v) = report.first_violation() {
        let v = v.clone();
        ctx.note(&format!(
            "first counterexample {} at {}: {}",
            v.axiom, v.instance, v.detail
        ));
    }
    Ok(exit_for(&report))
}

fn cm_by_name<'w>(ws: &'w Workspace, name: &str) -> Result<&'w CrossedModule, CliError> {
    Ok(ws.crossed_module(name)?)
}

fn cmd_build(ctx: &mut Ctx<'_>, c: &Construction) -> CliResult {
    let default = FieldKind::Rational;
    match c {
        Construction::KC { crossed_module } | Construction::KP { crossed_module } => {
            let field = ctx.cli.field.unwrap_or(default);
            let cm = cm_by_name(&ctx.ws, crossed_module)?.clone();
            let is_c = matches!(c, Construction::KC { .. });
            let name = algebra_name(if is_c { "kC" } else { "kP" }, crossed_module, field);
            with_field!(field, F => {
                let l: CrossedAlgebra<F> = if is_c { group_algebra_c(&cm) } else { group_algebra_p(&cm) };
                finish_algebra(ctx, &name, crossed_module, &l)
            })
        }
        Construction::Pullback { morphism, algebra }
        | Construction::Pushforward { morphism, algebra } => {
            let f = ctx.ws.morphism(morphism)?;
            let field = ctx.field_or(ctx.ws.algebra_field(algebra)?)?;
            let is_pull = matches!(c, Construction::Pullback { .. });
            let (prefix, over) = if is_pull {
                ("pullback", f.source.clone())
            } else {
                ("pushforward", f.target.clone())
            };
            let name = format!("{prefix}-{algebra}");
            with_field!(field, F => {
                let l: CrossedAlgebra<F> = ctx.ws.algebra(algebra)?;
                let out = if is_pull {
                    pullback(&f.morphism, &l)?
                } else {
                    let pf = pushforward(&f.morphism, &l)?;
                    ctx.note(&pf.rho_report.summary());
                    ctx.note(&format!("ideal dimension {}", pf.ideal_dim()));
                    pf.algebra
                };
                finish_algebra(ctx, &name, &over, &out)
            })
        }
        Construction::KpIso { crossed_module } => {
            let field = ctx.cli.field.unwrap_or(default);
            let cm = cm_by_name(&ctx.ws, crossed_module)?.clone();
            with_field!(field, F => {
                let w = kp_iso_witness::<F>(&cm, None)?;
                let p = cm.base();
                let qn = crate::fixtures::quotient_name(crossed_module);
                let kp_name = algebra_name("kP", crossed_module, field);
                let pulled_name = format!("pullback-{}", algebra_name("kP", &qn, field));
                let cocycle = w.cocycle.values().iter().map(|row| {
                    row.iter().map(|&n| ElemRef::Name(p.name(w.cocycle.kernel_incl()[n]).to_string())).collect()
                }).collect();
                let doc = KpIsoDoc {
                    kind: "kp_iso".into(),
                    name: format!("kp_iso-{}", crossed_module),
                    crossed_module: crossed_module.clone(),
                    field: FieldDoc::from_kind(field),
                    section: w.section.choice().iter().map(|&g| ElemRef::Name(p.name(g).to_string())).collect(),
                    cocycle,
                    kp: AlgebraDoc::from_algebra(&kp_name, crossed_module, &w.kp),
                    pulled: AlgebraDoc::from_algebra(&pulled_name, crossed_module, &w.pulled),
                    morphism: AlgebraMorphismDoc::from_morphism("kp_iso", &kp_name, &pulled_name, &w.morphism),
                    report: w.report.clone(),
                };
                ctx.emit(&to_json(&doc))?;
                ctx.note(&w.report.summary());
                Ok::<i32, CliError>(exit_for(&w.report))
            })
        }
    }
}

fn cmd_eval(ctx: &mut Ctx<'_>, algebra: &str, expression: &str) -> CliResult {
    let adoc = match ctx.document(ObjectKind::Algebra, algebra)? {
        Document::Algebra(d) => d,
        _ => unreachable!("kind checked"),
    };
    let edoc = match ctx.document(ObjectKind::Expression, expression)? {
        Document::Expression(d) => d,
        _ => unreachable!("kind checked"),
    };
    let (cm, e) = ctx.ws.expression_from_doc(&edoc)?;
    let field = ctx.field_or(adoc.field.kind()?)?;
    with_field!(field, F => {
        let l: CrossedAlgebra<F> = ctx.ws.algebra_from_doc(&adoc)?;
        if l.crossed_module() != &cm {
            return Err(CliError::Malformed(format!(
                "{} is over {}, {} over {}",
                adoc.name, adoc.crossed_module.display_name(), edoc.name, edoc.crossed_module.display_name()
            )));
        }
        let tau = FormalHqft::unchecked(&l);
        match tau.eval_expression(&e) {
            Ok(m) => {
                ctx.emit(&to_json(&EvaluatedDoc::from_map(&cm, &m)))?;
                Ok(EXIT_PASS)
            }
            Err(HqftError::TypecheckFailed(r)) => {
                ctx.emit(&to_json(&*r))?;
                Err(CliError::Failed(r.summary()))
            }
            Err(other) => Err(other.into()),
        }
    })
}

#[derive(Serialize)]
struct SuiteResult {
    suite: &'static str,
    subject: String,
    passed: bool,
    checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<String>,
}

#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    results: Vec<SuiteResult>,
}

fn suite_result(suite: &'static str, subject: &str, report: &Report) -> SuiteResult {
    SuiteResult {
        suite,
        subject: subject.to_string(),
        passed: report.passed,
        checked: report.results.iter().map(|r| r.checked).sum(),
        first_failure: report
            .first_violation()
            .map(|v| format!("{} at {}: {}", v.axiom, v.instance, v.detail)),
    }
}

/// Snake identities per grade, extract_algebra(τ_L) = L and functoriality on
/// seeded random expressions.
pub fn round_trip_report<F: Scalar>(l: &CrossedAlgebra<F>, samples: usize, seed: u64) -> Report {
    let tau = FormalHqft::unchecked(l);
    let cm = l.crossed_module();
    let p = cm.base();
    let mut report = Report::new("round trip");
    {
        let mut ax = report.axiom("round trip", "snake identities");
        for g in p.elements() {
            let e = CobordismExpression::from_layers(
                cm,
                vec![
                    vec![
                        ElementaryPiece::Id { g },
                        ElementaryPiece::Cup { g: p.inv(g) },
                    ],
                    vec![ElementaryPiece::Cap { g }, ElementaryPiece::Id { g }],
                ],
            );
            let got = tau.eval_expression(&e);
            let ok = matches!(&got, Ok(m) if m.matrix == crate::exact_linalg::Matrix::identity(l.dim(g)));
            ax.check(ok, || {
                (
                    format!("grade {}", p.name(g)),
                    format!("{:?}", got.map(|m| m.matrix)),
                )
            });
        }
    }
    {
        let got = tau.extract_algebra();
        let ok = matches!(&got, Ok(back) if back == l);
        report
            .axiom("round trip", "extract_algebra(τ_L) = L")
            .check(ok, || match &got {
                Ok(back) => (
                    "L".into(),
                    format!("extracted {} differs", differing_part(back, l)),
                ),
                Err(e) => ("L".into(), e.to_string()),
            });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut ax = report.axiom(
        "round trip",
        "functoriality eval(e₁;e₂) = eval(e₂)·eval(e₁)",
    );
    for i in 0..samples {
        let src: Vec<usize> = (0..(i % 3)).map(|k| (k * 7 + i) % p.order()).collect();
        let e1 = random_expression(&mut rng, cm, &src, 2, 3);
        let mid = e1.target_grades(cm);
        let e2 = random_expression(&mut rng, cm, &mid, 2, 3);
        let ok = match (
            e1.then(cm, &e2),
            tau.eval_expression(&e1),
            tau.eval_expression(&e2),
        ) {
            (Ok(e12), Ok(a), Ok(b)) => {
                tau.eval_expression(&e12)
                    .map(|c| c.matrix == b.matrix.mul(&a.matrix))
                    == Ok(true)
            }
            _ => false,
        };
        ax.check(ok, || {
            (
                format!("sample {i}"),
                FormalBoundary::from_grades(&src).display(p),
            )
        });
    }
    report
}

fn differing_part<F: Scalar>(a: &CrossedAlgebra<F>, b: &CrossedAlgebra<F>) -> &'static str {
    let (x, y) = (a.parts(), b.parts());
    if x.space != y.space {
        "grading"
    } else if x.mul != y.mul {
        "product"
    } else if x.unit != y.unit {
        "unit"
    } else if x.rho != y.rho {
        "pairing"
    } else if x.phi != y.phi {
        "action"
    } else {
        "tilde map"
    }
}

fn cmd_verify(ctx: &mut Ctx<'_>, suite: Suite) -> CliResult {
    let want = |s: Suite| suite == s || suite == Suite::All;
    let mut results = Vec::new();
    let names: Vec<String> = ctx
        .ws
        .names(ObjectKind::Algebra)
        .iter()
        .map(|s| s.to_string())
        .collect();
    for name in &names {
        let field = ctx.ws.algebra_field(name)?;
        with_field!(field, F => {
            let l: CrossedAlgebra<F> = ctx.ws.algebra(name)?;
            if want(Suite::Boxed) {
                let mut r = check_boxed_identities(&l);
                r.absorb("aut square", aut_square_check(&l));
                results.push(suite_result("boxed", name, &r));
            }
            if want(Suite::Equivalence) {
                let r = check_equivalence_invariance(&FormalHqft::unchecked(&l));
                results.push(suite_result("equivalence", name, &r));
            }
            if want(Suite::RoundTrip) {
                let r = round_trip_report(&l, ROUND_TRIP_SAMPLES, 0x5eed);
                results.push(suite_result("round-trip", name, &r));
            }
            Ok::<(), CliError>(())
        })?;
    }
    if want(Suite::Adjunction) {
        for mname in ctx.ws.names(ObjectKind::Morphism) {
            let f = ctx.ws.morphism(mname)?;
            if !f.morphism.is_epimorphism() {
                continue;
            }
            for lname in &names {
                for lpname in &names {
                    let (ld, lpd) = (ctx.ws.algebra_doc(lname)?, ctx.ws.algebra_doc(lpname)?);
                    let (fl, flp) = (ld.field.kind()?, lpd.field.kind()?);
                    if fl != flp || fl == FieldKind::Rational {
                        continue;
                    }
                    if ld.crossed_module.display_name() != f.source
                        || lpd.crossed_module.display_name() != f.target
                    {
                        continue;
                    }
                    let subject = format!("{mname}: {lname} → {lpname}");
                    with_field!(fl, F => {
                        let l: CrossedAlgebra<F> = ctx.ws.algebra(lname)?;
                        let lp: CrossedAlgebra<F> = ctx.ws.algebra(lpname)?;
                        let r = match check_adjunction(&f.morphism, &l, &lp, DEFAULT_SEARCH_BOUND) {
                            Ok((_, r)) => r,
                            Err(e) => {
                                let mut r = Report::new("adjunction");
                                r.fail("adjunction", "constructions defined", subject.clone(), e.to_string());
                                r
                            }
                        };
                        results.push(suite_result("adjunction", &subject, &r));
                        Ok::<(), CliError>(())
                    })?;
                }
            }
        }
    }
    let passed = results.iter().all(|r| r.passed);
    for r in results.iter().filter(|r| !r.passed) {
        let line = format!(
            "{} {}: {}",
            r.suite,
            r.subject,
            r.first_failure.as_deref().unwrap_or("failed")
        );
        ctx.note(&line);
    }
    ctx.emit(&to_json(&VerifyOutput { passed, results }))?;
    Ok(if passed { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_demo(ctx: &mut Ctx<'_>) -> CliResult {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("{} documents loaded", ctx.ws.len()));
    for kind in ObjectKind::ALL {
        let names = ctx.ws.names(kind);
        if names.is_empty() {
            continue;
        }
        line(format!("\n{} ({}):", kind.dir(), names.len()));
        for n in names {
            let doc = ctx.ws.document(n).expect("listed").clone();
            let summary = ctx
                .ws
                .check(&doc)
                .map(|r| r.summary())
                .unwrap_or_else(|e| e.to_string());
            line(format!("  {n:<34} {summary}"));
        }
    }
    line("\nevaluations:".into());
    let pairs = [
        ("kP-CM-Id2", "disc-s"),
        ("kP-CM-Id2", "cup-cap-s"),
        ("kP-CM-A3S3", "snake-CM-A3S3"),
        ("kP-CM-A3S3", "cylinder-pants-CM-A3S3"),
        ("kC-CM-Mod", "cup-swap-cap-CM-Mod"),
    ];
    for (a, e) in pairs {
        let (Ok(adoc), Ok(edoc)) = (ctx.ws.algebra_doc(a), ctx.ws.expression_doc(e)) else {
            continue;
        };
        let (cm, expr) = ctx.ws.expression_from_doc(edoc)?;
        let field = adoc.field.kind()?;
        let text = with_field!(field, F => {
            let l: CrossedAlgebra<F> = ctx.ws.algebra_from_doc(adoc)?;
            let m = FormalHqft::unchecked(&l).eval_expression(&expr)?;
            let rows: Vec<String> = m.matrix.to_rows().iter()
                .map(|r| r.iter().map(|x| x.encode()).collect::<Vec<_>>().join(" "))
                .collect();
            Ok::<String, CliError>(format!(
                "  τ[{a}]({e}): {} → {}  [{}]",
                m.source.display(cm.base()),
                m.target.display(cm.base()),
                rows.join("; ")
            ))
        })?;
        line(text);
    }
    ctx.emit(&out)?;
    Ok(EXIT_PASS)
}
