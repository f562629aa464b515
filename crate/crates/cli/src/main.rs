//! `avw` — exact workbench for the affine-Virasoro algebra of type A1.
//!
//! Exit codes: 0 when the answer is pass-like, 1 when it is fail-like
//! (not simple, not isomorphic, candidate rejected, a check found a
//! counterexample), 2 on usage or expression-parse errors.
//!
//! Output formats: `text` (human-readable, the default) and `records`
//! (line-oriented machine format; each line is tab-separated `key=value`
//! fields following a `report` or `detail` tag). Select with `--format` or
//! the `AVW_FORMAT` environment variable.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use avw_core::classify::{classify_candidate, lemma_identity_check, ClassifyError};
use avw_core::liealg::{check_antisymmetry, check_jacobi};
use avw_core::parse::{
    parse_candidate, parse_envelope, parse_scalar, parse_spec_literal, parse_spoly, Bindings,
};
use avw_core::polymod::{Family, GenAction, ModuleSpec, SPoly};
use avw_core::report::CheckReport;
use avw_core::scalars::rat::Rat;
use avw_core::scalars::Param;
use avw_core::structure::{
    check_invariance, generate_one, is_simple, iso_check, proper_submodule, tau_check,
    two_beta_in_z_plus, StructureError,
};

#[derive(Parser)]
#[command(name = "avw", version, about = "Exact workbench for the affine-Virasoro algebra of type A1")]
struct Cli {
    /// Output format (also via AVW_FORMAT).
    #[arg(long, global = true, value_enum, env = "AVW_FORMAT", default_value_t = Format::Text)]
    format: Format,

    /// Bind a parameter symbol to an exact rational, e.g. `--set L=2`.
    /// Binding L or A to zero is rejected up front.
    #[arg(long = "set", global = true, value_name = "SYM=RAT")]
    set: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Args)]
struct SpecArgs {
    /// Module family: Omega, Delta or Theta.
    #[arg(long)]
    family: String,
    /// λ (nonzero scalar expression; default the symbol L).
    #[arg(long, default_value = "L")]
    lambda: String,
    /// α (nonzero scalar expression; default the symbol A).
    #[arg(long, default_value = "A")]
    alpha: String,
    /// β (scalar expression; default the symbol B).
    #[arg(long, default_value = "B")]
    beta: String,
    /// γ (scalar expression; default the symbol G).
    #[arg(long, default_value = "G")]
    gamma: String,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an algebra element (or enveloping word) to a polynomial.
    Act {
        #[command(flatten)]
        spec: SpecArgs,
        /// Element to apply, e.g. "h[0]" or "(1/2)*1 - (1/(2*A))*e[0]".
        #[arg(long)]
        x: String,
        /// Polynomial in s, t to act on.
        #[arg(long)]
        g: String,
    },
    /// Verify the module axioms (or, with --lie, the Lie-algebra axioms).
    VerifyAxioms {
        /// Check antisymmetry and Jacobi on the bracket table instead of a
        /// module.
        #[arg(long, conflicts_with = "family")]
        lie: bool,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 2)]
        window: i64,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value = "L")]
        lambda: String,
        #[arg(long, default_value = "A")]
        alpha: String,
        #[arg(long, default_value = "B")]
        beta: String,
        #[arg(long, default_value = "G")]
        gamma: String,
    },
    /// Decide simplicity; for a non-simple Theta, print the submodule
    /// generator (exit 1).
    Simplicity {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Print the proper submodule, when one exists; optionally verify its
    /// invariance.
    Submodule {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also verify invariance at this basis window.
        #[arg(long)]
        verify_window: Option<i64>,
        /// Degree bound for the invariance verification (default 3).
        #[arg(long, default_value_t = 3)]
        verify_degree: u32,
    },
    /// Construct an enveloping element mapping a nonzero vector to 1.
    GenerateOne {
        #[command(flatten)]
        spec: SpecArgs,
        /// Starting vector, a polynomial in s, t.
        #[arg(long)]
        w: String,
    },
    /// Decide whether two modules are isomorphic.
    Iso {
        /// First module literal, e.g. "Omega(2,3,1,0)".
        #[arg(long)]
        a: String,
        /// Second module literal.
        #[arg(long)]
        b: String,
    },
    /// Classify candidate free-module data (E0, F0, lambda, gamma).
    Classify {
        /// Candidate text: "E0 = ...; F0 = ...; lambda = ...; gamma = ...".
        #[arg(long, conflicts_with = "candidate_file")]
        candidate: Option<String>,
        /// Read the candidate text from a file.
        #[arg(long)]
        candidate_file: Option<String>,
    },
    /// Check the operator identities moving d0^m and h0^m across e_i, f_i.
    LemmaCheck {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        m: u32,
    },
    /// Check the tau intertwiner for Theta at half-integer beta.
    TauCheck {
        #[arg(long, default_value = "L")]
        lambda: String,
        #[arg(long, default_value = "A")]
        alpha: String,
        /// β with 2β a nonnegative integer.
        #[arg(long)]
        beta: String,
        #[arg(long, default_value = "G")]
        gamma: String,
        #[arg(long, default_value_t = 3)]
        degree: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Error,
}

struct Record {
    id: String,
    fields: Vec<(String, String)>,
}

struct Report {
    verb: &'static str,
    status: Status,
    text: Vec<String>,
    details: Vec<Record>,
}

impl Report {
    fn pass(verb: &'static str) -> Report {
        Report {
            verb,
            status: Status::Pass,
            text: Vec::new(),
            details: Vec::new(),
        }
    }

    fn fail(verb: &'static str) -> Report {
        Report {
            verb,
            status: Status::Fail,
            text: Vec::new(),
            details: Vec::new(),
        }
    }

    fn line(mut self, s: impl Into<String>) -> Report {
        self.text.push(s.into());
        self
    }

    fn detail(mut self, id: impl Into<String>, fields: Vec<(String, String)>) -> Report {
        self.details.push(Record {
            id: id.into(),
            fields,
        });
        self
    }

    fn emit(&self, format: Format) -> ExitCode {
        match format {
            Format::Text => {
                for line in &self.text {
                    println!("{}", line);
                }
            }
            Format::Records => {
                println!(
                    "report\tverb={}\tstatus={}",
                    self.verb,
                    match self.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                        Status::Error => "error",
                    }
                );
                for rec in &self.details {
                    let mut line = format!("detail\tid={}", rec.id);
                    for (k, v) in &rec.fields {
                        let _ = write!(line, "\t{}={}", k, v);
                    }
                    println!("{}", line);
                }
            }
        }
        match self.status {
            Status::Pass => ExitCode::SUCCESS,
            Status::Fail => ExitCode::from(1),
            Status::Error => ExitCode::from(2),
        }
    }
}

/// Usage/parse problems: message on stderr, exit 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => report.emit(cli.format),
        Err(UsageError(msg)) => {
            eprintln!("error: {}", msg);
            let report = Report {
                verb: verb_name(&cli.command),
                status: Status::Error,
                text: Vec::new(),
                details: vec![Record {
                    id: "error".into(),
                    fields: vec![("message".into(), msg)],
                }],
            };
            report.emit(cli.format)
        }
    }
}

fn verb_name(command: &Command) -> &'static str {
    match command {
        Command::Act { .. } => "act",
        Command::VerifyAxioms { .. } => "verify-axioms",
        Command::Simplicity { .. } => "simplicity",
        Command::Submodule { .. } => "submodule",
        Command::GenerateOne { .. } => "generate-one",
        Command::Iso { .. } => "iso",
        Command::Classify { .. } => "classify",
        Command::LemmaCheck { .. } => "lemma-check",
        Command::TauCheck { .. } => "tau-check",
    }
}

fn parse_bindings(pairs: &[String]) -> Result<Bindings, UsageError> {
    let mut bindings = Bindings::empty();
    for pair in pairs {
        let (sym, value) = pair
            .split_once('=')
            .ok_or_else(|| UsageError(format!("--set expects SYM=RAT, got `{}`", pair)))?;
        let param = Param::from_symbol(sym.trim())
            .ok_or_else(|| UsageError(format!("unknown parameter symbol `{}` (use L, A, B, G)", sym)))?;
        let scalar = parse_scalar(value.trim(), &Bindings::empty())
            .map_err(|e| UsageError(format!("in --set {}: {}", pair, e)))?;
        let rat: Rat = scalar
            .as_rational()
            .ok_or_else(|| UsageError(format!("--set {} must bind an exact rational", pair)))?;
        if (param == Param::Lambda || param == Param::Alpha) && scalar.is_zero() {
            return Err(UsageError(format!(
                "--set {}: {} must be nonzero",
                pair,
                sym.trim()
            )));
        }
        bindings.set(param, rat);
    }
    Ok(bindings)
}

fn build_spec(args: &SpecArgs, bindings: &Bindings) -> Result<ModuleSpec, UsageError> {
    let family: Family = args.family.parse().map_err(UsageError)?;
    let lambda = parse_scalar(&args.lambda, bindings)?;
    let alpha = parse_scalar(&args.alpha, bindings)?;
    let beta = parse_scalar(&args.beta, bindings)?;
    let gamma = parse_scalar(&args.gamma, bindings)?;
    Ok(ModuleSpec::new(family, lambda, alpha, beta, gamma)?)
}

/// The action of one generator rendered as an instantiated formula:
/// `<coefficient>*(<substituted argument>)`.
fn formula_instance(action: &GenAction, g: &SPoly) -> String {
    if action.coeff.is_zero() {
        return "0".to_string();
    }
    let shifted = g.compose_shift(action.s_shift, action.t_shift);
    let coeff_str = format!("{}", action.coeff);
    let needs_parens = coeff_str.contains(' ') || coeff_str.starts_with('-');
    let coeff_factor = if action.coeff.is_one() {
        String::new()
    } else if needs_parens {
        format!("({})*", coeff_str)
    } else {
        format!("{}*", coeff_str)
    };
    format!("{}({})", coeff_factor, shifted)
}

fn report_from_check(verb: &'static str, r: &CheckReport, pass_line: String) -> Report {
    if r.passed() {
        Report::pass(verb)
            .line(pass_line)
            .detail(
                format!("{}.summary", verb),
                vec![
                    ("checks".into(), r.checks.to_string()),
                    ("failures".into(), "0".into()),
                ],
            )
    } else {
        let mut report = Report::fail(verb).line(format!(
            "fail: {} ({} checks, {} failures)",
            verb,
            r.checks,
            r.failures.len()
        ));
        for f in &r.failures {
            report = report
                .line(format!("  {}: {} -> {}", f.id, f.inputs, f.difference))
                .detail(
                    f.id.clone(),
                    vec![
                        ("inputs".into(), f.inputs.clone()),
                        ("difference".into(), f.difference.clone()),
                    ],
                );
        }
        report
    }
}

fn run(cli: &Cli) -> Result<Report, UsageError> {
    let bindings = parse_bindings(&cli.set)?;
    match &cli.command {
        Command::Act { spec, x, g } => {
            let module = build_spec(spec, &bindings)?;
            let x_elem = parse_envelope(x, &bindings)?;
            let g_poly = parse_spoly(g, &bindings)?;
            let result = module.act_word(&x_elem, &g_poly);
            // Single plain generator: show the instantiated formula.
            let terms: Vec<_> = x_elem.terms().collect();
            let lhs = if terms.len() == 1 && terms[0].0.len() == 1 && terms[0].1.is_one() {
                formula_instance(&module.gen_action(terms[0].0 .0[0]), &g_poly)
            } else {
                format!("({})*({})", x_elem, g_poly)
            };
            Ok(Report::pass("act")
                .line(format!("{} = {}", lhs, result))
                .detail(
                    "act.result",
                    vec![
                        ("x".into(), format!("{}", x_elem)),
                        ("g".into(), format!("{}", g_poly)),
                        ("result".into(), format!("{}", result)),
                    ],
                ))
        }
        Command::VerifyAxioms {
            lie,
            family,
            window,
            degree,
            lambda,
            alpha,
            beta,
            gamma,
        } => {
            if *lie {
                let anti = check_antisymmetry(*window);
                let jac = check_jacobi(*window);
                let checks = anti.checks + jac.checks;
                if anti.passed() && jac.passed() {
                    return Ok(Report::pass("verify-axioms")
                        .line(format!(
                            "pass: antisymmetry and Jacobi hold at window {} ({} checks)",
                            window, checks
                        ))
                        .detail(
                            "lie-axioms.summary",
                            vec![
                                ("window".into(), window.to_string()),
                                ("checks".into(), checks.to_string()),
                                ("failures".into(), "0".into()),
                            ],
                        ));
                }
                let mut merged = anti;
                merged.checks = checks;
                merged.failures.extend(jac.failures);
                return Ok(report_from_check("verify-axioms", &merged, String::new()));
            }
            let family = family
                .as_deref()
                .ok_or_else(|| UsageError("verify-axioms requires --family or --lie".into()))?;
            let spec = build_spec(
                &SpecArgs {
                    family: family.to_string(),
                    lambda: lambda.clone(),
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    gamma: gamma.clone(),
                },
                &bindings,
            )?;
            let r = spec.check_module_axiom(*window, *degree);
            Ok(report_from_check(
                "verify-axioms",
                &r,
                format!(
                    "pass: module axiom holds for {} at window {}, degree {} ({} checks)",
                    spec.family(),
                    window,
                    degree,
                    r.checks
                ),
            ))
        }
        Command::Simplicity { spec } => {
            let module = build_spec(spec, &bindings)?;
            let two_beta = &(module.beta() + module.beta());
            if is_simple(&module) {
                let line = match module.family() {
                    Family::Omega | Family::Delta => format!(
                        "simple; {} modules are simple for all admissible parameters",
                        module.family()
                    ),
                    Family::Theta => {
                        format!("simple; 2*beta = {} not in Z+", two_beta)
                    }
                };
                Ok(Report::pass("simplicity").line(line).detail(
                    "simplicity.answer",
                    vec![
                        ("family".into(), module.family().to_string()),
                        ("simple".into(), "true".into()),
                    ],
                ))
            } else {
                let shape = proper_submodule(&module).expect("non-simple Theta has a submodule");
                let tb = two_beta_in_z_plus(module.beta()).expect("non-simple means 2*beta in Z+");
                let generator = shape.g.display_with("t");
                Ok(Report::fail("simplicity")
                    .line(format!(
                        "not simple; 2*beta = {} in Z+; submodule generator {}",
                        tb, generator
                    ))
                    .detail(
                        "simplicity.answer",
                        vec![
                            ("family".into(), module.family().to_string()),
                            ("simple".into(), "false".into()),
                            ("two_beta".into(), tb.to_string()),
                            ("generator".into(), generator),
                        ],
                    ))
            }
        }
        Command::Submodule {
            spec,
            verify_window,
            verify_degree,
        } => {
            let module = build_spec(spec, &bindings)?;
            match proper_submodule(&module) {
                None => Ok(Report::pass("submodule")
                    .line("none (module is simple)".to_string())
                    .detail("submodule.answer", vec![("exists".into(), "false".into())])),
                Some(shape) => {
                    let mut report = Report::pass("submodule")
                        .line(format!("proper submodule: {}", shape))
                        .detail(
                            "submodule.answer",
                            vec![
                                ("exists".into(), "true".into()),
                                ("generator".into(), shape.g.display_with("t")),
                            ],
                        );
                    if let Some(window) = verify_window {
                        match check_invariance(&module, &shape, *window, *verify_degree) {
                            Ok(r) => {
                                report = report
                                    .line(format!(
                                        "invariance verified at window {}, degree {} ({} checks)",
                                        window, verify_degree, r.checks
                                    ))
                                    .detail(
                                        "submodule.invariance",
                                        vec![("checks".into(), r.checks.to_string())],
                                    );
                            }
                            Err(e) => {
                                return Ok(Report::fail("submodule")
                                    .line(format!("invariance failed: {}", e))
                                    .detail(
                                        "submodule.invariance",
                                        vec![("error".into(), e.to_string())],
                                    ))
                            }
                        }
                    }
                    Ok(report)
                }
            }
        }
        Command::GenerateOne { spec, w } => {
            let module = build_spec(spec, &bindings)?;
            let vector = parse_spoly(w, &bindings)?;
            match generate_one(&module, &vector) {
                Ok(witness) => Ok(Report::pass("generate-one")
                    .line(format!("witness: {}", witness.u()))
                    .line("validated: witness applied to w yields 1".to_string())
                    .detail(
                        "generate-one.witness",
                        vec![
                            ("w".into(), format!("{}", vector)),
                            ("witness".into(), format!("{}", witness.u())),
                            ("validated".into(), "true".into()),
                        ],
                    )),
                Err(e @ (StructureError::ZeroVector | StructureError::NotSimple { .. })) => {
                    Ok(Report::fail("generate-one")
                        .line(format!("cannot generate 1: {}", e))
                        .detail("generate-one.error", vec![("error".into(), e.to_string())]))
                }
                Err(e) => Err(UsageError(e.to_string())),
            }
        }
        Command::Iso { a, b } => {
            let spec_a = parse_spec_literal(a, &bindings)?;
            let spec_b = parse_spec_literal(b, &bindings)?;
            let decision = iso_check(&spec_a, &spec_b);
            let verdict = if decision.isomorphic {
                "isomorphic"
            } else {
                "not isomorphic"
            };
            let report = if decision.isomorphic {
                Report::pass("iso")
            } else {
                Report::fail("iso")
            };
            Ok(report
                .line(format!("{}; {}", verdict, decision.reason))
                .detail(
                    "iso.answer",
                    vec![
                        ("a".into(), format!("{}", spec_a)),
                        ("b".into(), format!("{}", spec_b)),
                        ("isomorphic".into(), decision.isomorphic.to_string()),
                        ("reason".into(), decision.reason.to_string()),
                    ],
                ))
        }
        Command::Classify {
            candidate,
            candidate_file,
        } => {
            let text = match (candidate, candidate_file) {
                (Some(t), None) => t.clone(),
                (None, Some(path)) => std::fs::read_to_string(path)
                    .map_err(|e| UsageError(format!("cannot read {}: {}", path, e)))?,
                _ => {
                    return Err(UsageError(
                        "classify requires exactly one of --candidate or --candidate-file".into(),
                    ))
                }
            };
            let parsed = parse_candidate(&text, &bindings)?;
            match classify_candidate(&parsed) {
                Ok(result) => {
                    let mut report = Report::pass("classify")
                        .line(format!("family: {}", result.family))
                        .line(format!("lambda: {}", result.lambda))
                        .line(format!("alpha: {}", result.alpha))
                        .line(format!("{}", result.beta))
                        .line(format!("gamma: {}", result.gamma))
                        .line("derivation:".to_string());
                    let mut fields = vec![
                        ("family".into(), result.family.to_string()),
                        ("lambda".into(), format!("{}", result.lambda)),
                        ("alpha".into(), format!("{}", result.alpha)),
                        ("beta".into(), format!("{}", result.beta)),
                        ("gamma".into(), format!("{}", result.gamma)),
                    ];
                    for (k, step) in result.derivation.iter().enumerate() {
                        report = report.line(format!("  - {}", step));
                        fields.push((format!("step{}", k + 1), step.clone()));
                    }
                    Ok(report.detail("classify.result", fields))
                }
                Err(
                    e @ (ClassifyError::Equ1Violated { .. }
                    | ClassifyError::DegreeConstraintViolated { .. }
                    | ClassifyError::NonConstantResidual { .. }
                    | ClassifyError::NonConstantShift { .. }
                    | ClassifyError::ValidationFailed),
                ) => {
                    let constraint = match &e {
                        ClassifyError::Equ1Violated { .. } => "commutation-identity",
                        ClassifyError::DegreeConstraintViolated { .. } => "degree-constraint",
                        ClassifyError::NonConstantResidual { .. } => "non-constant-residual",
                        ClassifyError::NonConstantShift { .. } => "non-constant-shift",
                        _ => "validation",
                    };
                    Ok(Report::fail("classify")
                        .line(format!("rejected ({}): {}", constraint, e))
                        .detail(
                            "classify.rejected",
                            vec![
                                ("constraint".into(), constraint.into()),
                                ("error".into(), e.to_string()),
                            ],
                        ))
                }
                Err(e) => Err(UsageError(e.to_string())),
            }
        }
        Command::LemmaCheck { spec, i, m } => {
            let module = build_spec(spec, &bindings)?;
            let r = lemma_identity_check(&module, *i, *m);
            Ok(report_from_check(
                "lemma-check",
                &r,
                format!(
                    "pass: operator identities hold for {} with i = {}, m = {} ({} checks)",
                    module.family(),
                    i,
                    m,
                    r.checks
                ),
            ))
        }
        Command::TauCheck {
            lambda,
            alpha,
            beta,
            gamma,
            degree,
        } => {
            let lambda = parse_scalar(lambda, &bindings)?;
            let alpha = parse_scalar(alpha, &bindings)?;
            let beta = parse_scalar(beta, &bindings)?;
            let gamma = parse_scalar(gamma, &bindings)?;
            match tau_check(&lambda, &alpha, &beta, &gamma, *degree) {
                Ok(r) => Ok(report_from_check(
                    "tau-check",
                    &r,
                    format!(
                        "pass: intertwiner verified at window 2, degree {} ({} checks)",
                        degree, r.checks
                    ),
                )),
                Err(e) => Err(UsageError(e.to_string())),
            }
        }
    }
}
