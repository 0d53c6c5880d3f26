//! Command-line driver: `check`, `derive`, `verify-op`, `search-rb`.
//!
//! Exit codes: 0 when every requested verdict passes, 1 on a checked
//! failure, 2 on usage, input or budget errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{HomAlgebra, Label, Module};
use crate::constructions::{self as cons, ConstructionResult, Options};
use crate::error::{Error, Result};
use crate::identity::{check_bimodule, check_representation, check_suite, Suite};
use crate::io::{
    parse_algebra_file, serialize_algebra_file, AlgebraFile, ConstructionRecord, ReportDocument,
    ReportEntry,
};
use crate::operators::{self, Pattern, Policy, DEFAULT_BUDGET};

#[derive(Parser, Debug)]
#[command(
    name = "homjordan",
    version,
    about = "Check and construct Hom-Jordan type algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Strict,
    Lax,
}

impl From<PolicyArg> for Policy {
    fn from(p: PolicyArg) -> Policy {
        match p {
            PolicyArg::Strict => Policy::Strict,
            PolicyArg::Lax => Policy::Lax,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Auto,
    HomJordan,
    HomPreJordan,
    HomPreAlt,
    HomDendriform,
    HomJDendriform,
    Representation,
    Bimodule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    Anticommutator,
    RbPrejordan,
    PrealtToPrejordan,
    Vertical,
    Horizontal,
    SemidirectJordan,
    SemidirectPrejordan,
    OOpPrejordan,
    CompatiblePrejordan,
    JdendFromOOp,
    RbJdendriform,
    CommutingRbJdendriform,
    Transpose,
    YauTwist,
    ImagePrejordan,
}

impl std::str::FromStr for ConstructionArg {
    type Err = Error;

    /// Accepts the command-line spelling, such as `rb-prejordan`.
    fn from_str(s: &str) -> Result<ConstructionArg> {
        <ConstructionArg as ValueEnum>::from_str(s, true)
            .map_err(|_| Error::Invalid(format!("unknown construction {s:?}")))
    }
}

#[derive(clap::Args, Debug, Clone)]
pub struct Common {
    /// Operator verification policy.
    #[arg(long, value_enum, default_value = "strict")]
    pub policy: PolicyArg,
    /// Skip precondition checks.
    #[arg(long)]
    pub unchecked: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Output path.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run identity suites on an algebra file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        suite: SuiteArg,
        /// Module index for representation/bimodule checks (default: all).
        #[arg(long)]
        module: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Apply a construction and write the resulting algebra file.
    Derive {
        file: PathBuf,
        #[arg(value_enum)]
        construction: ConstructionArg,
        /// Name of the operator map (R, T, beta); defaults per construction.
        #[arg(long)]
        op: Option<String>,
        /// Second operator for commuting-rb-jdendriform.
        #[arg(long)]
        op2: Option<String>,
        #[arg(long, default_value_t = 0)]
        module: usize,
        /// Class preserved by yau-twist.
        #[arg(long, value_enum)]
        suite: Option<SuiteArg>,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a Rota-Baxter operator or, with --module, an O-operator.
    VerifyOp {
        file: PathBuf,
        #[arg(long, default_value = "R")]
        op: String,
        /// Product for Rota-Baxter checks (default: the sole product).
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        module: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate Rota-Baxter operators over a prime field.
    SearchRb {
        file: PathBuf,
        #[arg(long)]
        label: Option<String>,
        /// Rows separated by '/', '*' free, digits fixed, e.g. 000/000/**0.
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[command(flatten)]
        common: Common,
    },
}

/// What the binary prints and the code it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

fn execute(cli: Cli) -> Outcome {
    let (file, common) = match &cli.command {
        Command::Check { file, common, .. }
        | Command::Derive { file, common, .. }
        | Command::VerifyOp { file, common, .. }
        | Command::SearchRb { file, common, .. } => (file.clone(), common.clone()),
    };
    let bytes = match std::fs::read(&file) {
        Ok(b) => b,
        Err(e) => return input_error(&format!("{}: {e}", file.display())),
    };
    let text = String::from_utf8_lossy(&bytes).into_owned();
    let parsed = match parse_algebra_file(&text) {
        Ok(f) => f,
        Err(e) => return input_error(&format!("{}: {e}", file.display())),
    };
    let mut doc = ReportDocument::new(&file.display().to_string(), &bytes);
    let result = match cli.command {
        Command::Check { suite, module, .. } => cmd_check(&parsed, suite, module, &mut doc),
        Command::Derive {
            construction,
            op,
            op2,
            module,
            suite,
            ..
        } => match suite.map(suite_of).transpose() {
            Ok(suite) => cmd_derive(
                &parsed,
                construction,
                DeriveArgs {
                    op,
                    op2,
                    module,
                    suite,
                },
                &common,
                &mut doc,
            ),
            Err(e) => Err(Failure::Input(e)),
        },
        Command::VerifyOp {
            op, label, module, ..
        } => cmd_verify_op(
            &parsed,
            &op,
            label.as_deref(),
            module,
            common.policy.into(),
            &mut doc,
        ),
        Command::SearchRb {
            label,
            pattern,
            budget,
            ..
        } => cmd_search(
            &parsed,
            label.as_deref(),
            pattern.as_deref(),
            budget,
            &common,
            &mut doc,
        ),
    };
    let code = match result {
        Ok(code) => code,
        Err(Failure::Checked(msg)) => {
            doc.finish(1);
            return emit(&doc, &common, false, msg);
        }
        Err(Failure::Input(e)) => return input_error(&e.to_string()),
    };
    doc.finish(code);
    let writes_report = common.output.is_some() && !matches!(doc_kind(&doc), DocKind::Produces);
    emit(&doc, &common, writes_report, String::new())
}

enum DocKind {
    Produces,
    ReportOnly,
}

fn doc_kind(doc: &ReportDocument) -> DocKind {
    let produces = !doc.constructions.is_empty()
        || doc
            .reports
            .iter()
            .any(|r| matches!(r, ReportEntry::Search { .. }));
    if produces {
        DocKind::Produces
    } else {
        DocKind::ReportOnly
    }
}

enum Failure {
    /// A precondition or verification failed: exit 1.
    Checked(String),
    /// Usage or input problem: exit 2.
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Precondition(m) => Failure::Checked(m),
            other => Failure::Input(other),
        }
    }
}

fn input_error(msg: &str) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Text => render_text(doc),
    }
}

fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    for entry in &doc.reports {
        match entry {
            ReportEntry::Suite(r) => {
                let _ = write!(out, "{r}");
            }
            ReportEntry::Operator { map, report } => {
                let _ = write!(out, "{map}: {report}");
            }
            ReportEntry::Search {
                label,
                policy,
                pattern,
                found,
            } => {
                let _ = writeln!(
                    out,
                    "search ({label}, {policy} policy, pattern {}): {found} operators",
                    pattern.as_deref().unwrap_or("none")
                );
            }
        }
    }
    for c in &doc.constructions {
        let verified = match c.verified {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "not verified",
        };
        let _ = writeln!(
            out,
            "derived {} from {} -> {}: {} {}",
            c.construction,
            c.inputs.join(", "),
            c.output.as_deref().unwrap_or("-"),
            c.expected_suite,
            verified
        );
        for a in &c.assertions {
            let _ = writeln!(out, "  assertion {}: {}", a.name, a.verdict.label());
        }
    }
    let _ = writeln!(out, "status: {}", doc.status.to_uppercase());
    out
}

fn emit(doc: &ReportDocument, common: &Common, to_file: bool, message: String) -> Outcome {
    let body = render(doc, common.format);
    let mut stderr = if message.is_empty() {
        String::new()
    } else {
        format!("{message}\n")
    };
    let stdout = if to_file {
        let path = common.output.as_ref().expect("checked by caller");
        if let Err(e) = std::fs::write(path, &body) {
            stderr.push_str(&format!("error: {}: {e}\n", path.display()));
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr,
            };
        }
        String::new()
    } else {
        body
    };
    Outcome {
        code: doc.exit_code,
        stdout,
        stderr,
    }
}

fn cmd_check(
    file: &AlgebraFile,
    suite: SuiteArg,
    module: Option<usize>,
    doc: &mut ReportDocument,
) -> Result<i32, Failure> {
    let alg = &file.algebra;
    let suites: Vec<Suite> = match suite {
        SuiteArg::Auto => Suite::ALGEBRA_SUITES
            .iter()
            .copied()
            .filter(|s| s.declared().iter().all(|l| alg.has(*l)))
            .collect(),
        SuiteArg::HomJordan => vec![Suite::HomJordan],
        SuiteArg::HomPreJordan => vec![Suite::HomPreJordan],
        SuiteArg::HomPreAlt => vec![Suite::HomPreAlt],
        SuiteArg::HomDendriform => vec![Suite::HomDendriform],
        SuiteArg::HomJDendriform => vec![Suite::HomJDendriform],
        SuiteArg::Representation | SuiteArg::Bimodule => Vec::new(),
    };
    for s in suites {
        doc.reports.push(ReportEntry::Suite(check_suite(alg, s)?));
    }
    let want_rep = matches!(suite, SuiteArg::Auto | SuiteArg::Representation);
    let want_bim = matches!(suite, SuiteArg::Auto | SuiteArg::Bimodule);
    let indices: Vec<usize> = match module {
        Some(i) => {
            file.module(i)?;
            vec![i]
        }
        None => (0..file.modules.len()).collect(),
    };
    let mut checked_modules = 0;
    for i in indices {
        match &file.modules[i] {
            Module::Representation(rep) if want_rep => {
                if suite == SuiteArg::Auto && !alg.has(Label::Circ) {
                    continue;
                }
                let mut r = check_representation(alg, rep)?;
                r.suite = format!("{}[module {i}]", r.suite);
                doc.reports.push(ReportEntry::Suite(r));
                checked_modules += 1;
            }
            Module::Bimodule(bim) if want_bim => {
                if suite == SuiteArg::Auto && !alg.has(Label::Dot) {
                    continue;
                }
                let mut r = check_bimodule(alg, bim)?;
                r.suite = format!("{}[module {i}]", r.suite);
                doc.reports.push(ReportEntry::Suite(r));
                checked_modules += 1;
            }
            _ if module.is_some() => {
                return Err(Failure::Input(Error::Invalid(format!(
                    "module {i} does not match suite {suite:?}"
                ))))
            }
            _ => {}
        }
    }
    if matches!(suite, SuiteArg::Representation | SuiteArg::Bimodule) && checked_modules == 0 {
        return Err(Failure::Input(Error::Invalid(
            "file has no matching module".into(),
        )));
    }
    if doc.reports.is_empty() {
        return Err(Failure::Input(Error::Invalid("no applicable suite".into())));
    }
    let all_pass = doc.reports.iter().all(|r| match r {
        ReportEntry::Suite(s) => s.passed(),
        _ => true,
    });
    Ok(if all_pass { 0 } else { 1 })
}

/// Inputs to a construction beyond the algebra itself.
#[derive(Clone, Debug, Default)]
pub struct DeriveArgs {
    /// Name of the operator map; each construction has its own default.
    pub op: Option<String>,
    /// Second operator for commuting-rb-jdendriform.
    pub op2: Option<String>,
    pub module: usize,
    /// Class preserved by yau-twist.
    pub suite: Option<Suite>,
}

fn suite_of(arg: SuiteArg) -> Result<Suite> {
    Ok(match arg {
        SuiteArg::HomJordan => Suite::HomJordan,
        SuiteArg::HomPreJordan => Suite::HomPreJordan,
        SuiteArg::HomPreAlt => Suite::HomPreAlt,
        SuiteArg::HomDendriform => Suite::HomDendriform,
        SuiteArg::HomJDendriform => Suite::HomJDendriform,
        _ => return Err(Error::Invalid("yau-twist needs an algebra suite".into())),
    })
}

fn default_suite(alg: &HomAlgebra) -> Suite {
    if alg.has(Label::Circ) {
        Suite::HomJordan
    } else if alg.has(Label::Dot) {
        Suite::HomPreJordan
    } else {
        Suite::HomJDendriform
    }
}

/// A construction applied to a file: the result, the file to write and
/// the names of the inputs used.
#[derive(Clone, Debug)]
pub struct Derived {
    pub result: ConstructionResult,
    pub file: AlgebraFile,
    pub inputs: Vec<String>,
}

/// Applies `construction` to `file`, looking up maps and modules by name.
pub fn derive(
    file: &AlgebraFile,
    construction: ConstructionArg,
    args: &DeriveArgs,
    opts: Options,
) -> Result<Derived> {
    use ConstructionArg as C;
    let alg = &file.algebra;
    let op_name = |default: &str| args.op.clone().unwrap_or_else(|| default.to_string());
    let mut inputs = vec!["algebra".to_string()];
    let mut named = |name: String| -> Result<&crate::linalg::Matrix> {
        inputs.push(name.clone());
        file.map(&name)
    };
    let module_ref = |i: usize| -> Result<&Module> { file.module(i) };
    let rep = |i: usize| -> Result<crate::algebra::Representation> {
        match module_ref(i)? {
            Module::Representation(r) => Ok(r.clone()),
            Module::Bimodule(_) => Err(Error::Invalid(format!(
                "module {i} is not a representation"
            ))),
        }
    };
    let bim = |i: usize| -> Result<crate::algebra::Bimodule> {
        match module_ref(i)? {
            Module::Bimodule(b) => Ok(b.clone()),
            Module::Representation(_) => {
                Err(Error::Invalid(format!("module {i} is not a bimodule")))
            }
        }
    };
    let result = match construction {
        C::Anticommutator => cons::anticommutator(alg, opts)?,
        C::RbPrejordan => cons::rb_prejordan(alg, named(op_name("R"))?, opts)?,
        C::PrealtToPrejordan => cons::prealt_to_prejordan(alg, opts)?,
        C::Vertical => cons::vertical(alg, opts)?,
        C::Horizontal => cons::horizontal(alg, opts)?,
        C::SemidirectJordan => cons::semidirect_jordan(alg, &rep(args.module)?)?,
        C::SemidirectPrejordan => {
            let out = cons::semidirect_prejordan(alg, &bim(args.module)?)?;
            ConstructionResult {
                output: out,
                construction: "semidirect-prejordan",
                expected_suite: Suite::HomPreJordan,
                guaranteed: false,
                assertions: Vec::new(),
            }
        }
        C::OOpPrejordan => {
            let t = named(op_name("T"))?.clone();
            cons::o_op_prejordan_on_module(alg, &rep(args.module)?, &t, opts)?
        }
        C::CompatiblePrejordan => {
            let t = named(op_name("T"))?.clone();
            cons::compatible_prejordan_from_invertible(alg, &rep(args.module)?, &t, opts)?
        }
        C::JdendFromOOp => {
            let t = named(op_name("T"))?.clone();
            cons::jdend_from_o_op(alg, &bim(args.module)?, &t, opts)?
        }
        C::RbJdendriform => cons::rb_jdendriform_on_prejordan(alg, named(op_name("R"))?, opts)?,
        C::CommutingRbJdendriform => {
            let r1 = named(op_name("R1"))?.clone();
            let r2 = named(args.op2.clone().unwrap_or_else(|| "R2".into()))?.clone();
            cons::commuting_rb_jdendriform(alg, &r1, &r2, opts)?
        }
        C::Transpose => cons::transpose_jdendriform(alg, opts)?,
        C::YauTwist => {
            let suite = args.suite.unwrap_or_else(|| default_suite(alg));
            let beta = named(op_name("beta"))?.clone();
            cons::yau_twist(alg, &beta, suite, opts)?
        }
        C::ImagePrejordan => {
            let t = named(op_name("T"))?.clone();
            cons::image_prejordan(alg, &rep(args.module)?, &t, opts)?
        }
    };
    Ok(Derived {
        file: carry_over(file, result.output.clone()),
        result,
        inputs,
    })
}

fn cmd_derive(
    file: &AlgebraFile,
    construction: ConstructionArg,
    args: DeriveArgs,
    common: &Common,
    doc: &mut ReportDocument,
) -> Result<i32, Failure> {
    let output = common
        .output
        .clone()
        .ok_or_else(|| Failure::Input(Error::Invalid("derive needs -o <path>".into())))?;
    let opts = Options {
        policy: common.policy.into(),
        checked: !common.unchecked,
    };
    let Derived {
        result,
        file: out_file,
        inputs,
    } = derive(file, construction, &args, opts)?;
    write_output(&output, &serialize_algebra_file(&out_file))?;
    let verified = if common.unchecked {
        None
    } else {
        let report = check_suite(&result.output, result.expected_suite)?;
        let passed = report.passed();
        doc.reports.push(ReportEntry::Suite(report));
        Some(passed)
    };
    doc.constructions.push(ConstructionRecord {
        construction: result.construction.into(),
        inputs,
        output: Some(output.display().to_string()),
        expected_suite: result.expected_suite.name().into(),
        verified,
        assertions: result.assertions.clone(),
    });
    let ok = verified.unwrap_or(true) && result.assertions_hold();
    Ok(if ok { 0 } else { 1 })
}

/// Keeps the input's maps and modules when the output lives on the same
/// space.
fn carry_over(input: &AlgebraFile, output: HomAlgebra) -> AlgebraFile {
    let same_space = output.dim() == input.algebra.dim();
    AlgebraFile {
        algebra: output,
        maps: if same_space {
            input.maps.clone()
        } else {
            Default::default()
        },
        modules: if same_space {
            input.modules.clone()
        } else {
            Vec::new()
        },
    }
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

fn resolve_label(alg: &HomAlgebra, label: Option<&str>) -> Result<Label> {
    match label {
        Some(l) => l.parse(),
        None => alg.sole_product().map(|(l, _)| l),
    }
}

fn cmd_verify_op(
    file: &AlgebraFile,
    op: &str,
    label: Option<&str>,
    module: Option<usize>,
    policy: Policy,
    doc: &mut ReportDocument,
) -> Result<i32, Failure> {
    let alg = &file.algebra;
    let map = file.map(op)?;
    let report = match module {
        None => operators::verify_rota_baxter(alg, resolve_label(alg, label)?, map, policy)?,
        Some(i) => match file.module(i)? {
            Module::Representation(rep) => {
                operators::verify_o_operator_jordan(alg, rep, map, policy)?
            }
            Module::Bimodule(bim) => operators::verify_o_operator_prejordan(alg, bim, map, policy)?,
        },
    };
    let ok = report.overall;
    doc.reports.push(ReportEntry::Operator {
        map: op.into(),
        report,
    });
    Ok(if ok { 0 } else { 1 })
}

fn cmd_search(
    file: &AlgebraFile,
    label: Option<&str>,
    pattern: Option<&str>,
    budget: u128,
    common: &Common,
    doc: &mut ReportDocument,
) -> Result<i32, Failure> {
    let output = common
        .output
        .clone()
        .ok_or_else(|| Failure::Input(Error::Invalid("search-rb needs -o <path>".into())))?;
    let alg = &file.algebra;
    let label = resolve_label(alg, label)?;
    let pat = pattern
        .map(|p| Pattern::parse(alg.field(), p))
        .transpose()?;
    let policy: Policy = common.policy.into();
    let found = operators::search_rota_baxter_fp(alg, label, pat.as_ref(), policy, budget)?;
    let width = found.len().to_string().len();
    let mut result = AlgebraFile::new(alg.clone());
    for (i, m) in found.iter().enumerate() {
        result.maps.insert(format!("R{:0width$}", i + 1), m.clone());
    }
    write_output(&output, &serialize_algebra_file(&result))?;
    doc.reports.push(ReportEntry::Search {
        label: label.name().into(),
        policy,
        pattern: pattern.map(String::from),
        found: found.len(),
    });
    doc.constructions.push(ConstructionRecord {
        construction: "search-rb".into(),
        inputs: vec!["algebra".into()],
        output: Some(output.display().to_string()),
        expected_suite: "rota-baxter".into(),
        verified: Some(true),
        assertions: Vec::new(),
    });
    Ok(0)
}
