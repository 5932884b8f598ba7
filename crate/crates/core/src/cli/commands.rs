//! Subcommand parsing and dispatch.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{HomAlgebra, Identity};
use crate::bimodule::{
    bimodule_irreducibility, check_alternative_bimodule, is_hom_bimodule, ker_im_subbimodules, twist_bimodule, untwist_bimodule,
    BimoduleAxiom, HomBimodule, ModuleAssociatorReport,
};
use crate::cli::document::{load, save_algebra, save_bimodule, Loaded};
use crate::cli::fixtures;
use crate::cli::report::{matrix_json, matrix_text, subspace_json, subspace_text, Outcome, Report, Witness};
use crate::constructions::{direct_sum, idempotent_split, quotient, untwist, yau_twist};
use crate::error::{Error, Result};
use crate::exactlin::{parse_rational, unit_vector, Matrix, Subspace, Vector};
use crate::structure::{
    derived_series, derived_terms_ideal_check, hom_ideal_closure, iso_obstruction, semisimplicity, simplicity,
    solvability_equivalence_check, Decomposition, IsoCertificate, IsoVerdict, Status, StructureVerdict,
    DEFAULT_BUDGET,
};

#[derive(Parser, Debug)]
#[command(name = "homalt", version, about = "Exact checks for Hom-alternative algebras and bimodules")]
struct Cli {
    /// Seed for randomized candidate generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Envelope passes and random samples per search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include elapsed wall time (makes reports nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Expect {
    Yes,
    No,
}

fn expected(e: Option<Expect>) -> Option<bool> {
    e.map(|e| e == Expect::Yes)
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplicativity, left/right Hom-alternativity and Hom-associativity.
    Check { algebra: String },
    /// Derived series and solvability.
    Derived {
        algebra: String,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Solvability of the algebra against its untwisted companion.
    Solvable {
        algebra: String,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Smallest two-sided Hom-ideal containing the given vectors.
    IdealClosure {
        algebra: String,
        #[arg(required = true)]
        vectors: Vec<String>,
    },
    /// Simplicity verdict.
    Simple {
        algebra: String,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Semisimplicity verdict with a decomposition into simple ideals.
    Semisimple {
        algebra: String,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Induced algebra of an invertible-twist algebra.
    Untwist {
        algebra: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Yau twist by a self-morphism (matrix literal "a,b;c,d" or an algebra whose twist is used).
    Twist {
        algebra: String,
        matrix: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Direct sum of two algebras.
    Directsum {
        left: String,
        right: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient by the ideal spanned by the given vectors.
    Quotient {
        algebra: String,
        #[arg(required = true)]
        vectors: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Splitting of an idempotent-twist algebra into quotient and kernel.
    Split { algebra: String },
    /// Isomorphism obstruction, optionally checking a candidate map.
    Iso {
        left: String,
        right: String,
        #[arg(long)]
        candidate: Option<String>,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Hom-alternative bimodule axioms.
    BimoduleCheck { bimodule: String },
    /// Untwisted bimodule over the induced algebra.
    BimoduleUntwist {
        bimodule: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Irreducibility verdict with a decomposition into subbimodules.
    BimoduleIrreducible {
        bimodule: String,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// List embedded fixtures, or print one as a document.
    Fixtures { name: Option<String> },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit: i32,
}

/// Runs one command line (without the program name).
pub fn run<S: AsRef<str>>(args: &[S]) -> RunOutput {
    let argv: Vec<String> = args.iter().map(|a| a.as_ref().to_string()).collect();
    let cli = match Cli::try_parse_from(std::iter::once("homalt".to_string()).chain(argv.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => RunOutput {
                    stdout: text,
                    stderr: String::new(),
                    exit: 0,
                },
                ErrorKind::InvalidSubcommand => failure(Error::UnknownCommand(
                    argv.iter().find(|a| !a.starts_with('-')).cloned().unwrap_or_default(),
                )),
                _ => failure(Error::BadArguments(text)),
            };
        }
    };
    let start = Instant::now();
    let mut report = Report::new(argv, cli.seed, cli.budget);
    if let Err(e) = dispatch(&cli, &mut report) {
        return failure(e);
    }
    if cli.timing {
        report.set_elapsed(start.elapsed());
    }
    RunOutput {
        stdout: if cli.json { report.to_json() } else { report.to_text() },
        stderr: String::new(),
        exit: report.exit_code(),
    }
}

fn failure(e: Error) -> RunOutput {
    RunOutput {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        exit: 3,
    }
}

/// A fixture name or the path of an algebra document.
pub fn resolve_algebra(source: &str) -> Result<HomAlgebra> {
    if fixtures::NAMES.contains(&source) {
        return fixtures::algebra(source);
    }
    match load(&read_input(source)?, &resolve_algebra)? {
        Loaded::Algebra(a) => Ok(a),
        Loaded::Bimodule(_) => Err(Error::BadArguments(format!("`{source}` is a bimodule document"))),
    }
}

/// `regular:<algebra>` or the path of a bimodule document.
pub fn resolve_bimodule(source: &str) -> Result<HomBimodule> {
    if let Some(alg) = source.strip_prefix("regular:") {
        return Ok(HomBimodule::regular(&resolve_algebra(alg)?));
    }
    match load(&read_input(source)?, &resolve_algebra)? {
        Loaded::Bimodule(b) => Ok(b),
        Loaded::Algebra(_) => Err(Error::BadArguments(format!(
            "`{source}` is an algebra document; use regular:{source} for its regular bimodule"
        ))),
    }
}

fn read_input(source: &str) -> Result<String> {
    let path = Path::new(source);
    if !path.is_file() {
        return Err(Error::UnknownInput(source.to_string()));
    }
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{source}: {e}")))
}

/// A basis label or `n` comma-separated rationals.
pub fn parse_vector(alg: &HomAlgebra, token: &str) -> Result<Vector> {
    let n = alg.dim();
    if let Some(i) = alg.labels().iter().position(|l| l == token) {
        return Ok(unit_vector(n, i));
    }
    let parts: Vec<&str> = token.split(',').collect();
    if parts.len() != n {
        return Err(Error::BadArguments(format!(
            "`{token}` is neither a basis label nor {n} comma-separated rationals"
        )));
    }
    parts.into_iter().map(parse_rational).collect()
}

/// A literal `"a,b;c,d"` or an algebra whose twist is taken.
pub fn parse_matrix(token: &str, dim: usize) -> Result<Matrix> {
    let m = match resolve_algebra(token) {
        Ok(alg) => alg.twist().clone(),
        Err(Error::UnknownInput(_)) => {
            let rows = token
                .split(';')
                .map(|row| row.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_rows(rows)?
        }
        Err(e) => return Err(e),
    };
    m.require_shape(dim, dim)?;
    Ok(m)
}

fn algebra_input(report: &mut Report, source: &str) -> Result<HomAlgebra> {
    let alg = resolve_algebra(source)?;
    report.input(source, &save_algebra(&alg));
    Ok(alg)
}

fn bimodule_input(report: &mut Report, source: &str) -> Result<HomBimodule> {
    let bim = resolve_bimodule(source)?;
    report.input(source, &save_bimodule(&bim));
    Ok(bim)
}

fn span_input(alg: &HomAlgebra, tokens: &[String]) -> Result<Subspace> {
    let vectors = tokens.iter().map(|t| parse_vector(alg, t)).collect::<Result<Vec<_>>>()?;
    Subspace::canonicalize(&vectors, alg.dim())
}

fn emit(report: &mut Report, name: &str, text: String, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let shown = path.display().to_string();
            report.value(format!("{name} written to"), shown.clone(), json!(shown));
        }
        None => report.document(name, text),
    }
    Ok(())
}

/// Identity flags; `asserted` marks the three Hom-alternative conditions.
fn identity_flags(report: &mut Report, alg: &HomAlgebra, prefix: &str, asserted: bool) {
    let checks = alg.check_identities();
    for id in Identity::ALL {
        let name = format!("{prefix}{}", id.name());
        let witness = checks.get(id).witness.as_ref().map(Witness::from);
        if asserted && id != Identity::HomAssociativity {
            report.assert_flag(name, witness);
        } else {
            report.flag(name, witness);
        }
    }
}

fn bimodule_flags(report: &mut Report, checks: &ModuleAssociatorReport, prefix: &str) {
    for axiom in BimoduleAxiom::ALL {
        report.assert_flag(format!("{prefix}{}", axiom.name()), checks.witness(axiom).map(Witness::from));
    }
}

fn outcome(status: Status) -> Outcome {
    match status {
        Status::CertifiedYes => Outcome::Positive,
        Status::CertifiedNo => Outcome::Negative,
        Status::Undecided => Outcome::Undecided,
    }
}

fn structure_verdict(report: &mut Report, name: &str, v: &StructureVerdict, expect: Option<Expect>) {
    let mut text = format!("{}: {}", v.reason.as_str(), v.note);
    if let Some(w) = &v.witness {
        text.push_str(&format!("; witness {}", subspace_text(w)));
    }
    let cert = Witness::new(
        text,
        json!({
            "reason": v.reason.as_str(),
            "note": v.note,
            "witness": v.witness.as_ref().map(subspace_json),
            "envelope_dim": v.envelope_dim,
        }),
    );
    report.verdict(name, v.status.as_str(), outcome(v.status), expected(expect), Some(cert));
    if let Some(d) = v.envelope_dim {
        report.value("envelope dimension", d.to_string(), json!(d));
    }
}

fn decomposition(report: &mut Report, name: &str, d: &Decomposition, expect: Option<Expect>) {
    structure_verdict(report, name, &d.verdict, expect);
    if !d.components.is_empty() {
        let text: Vec<String> = d.components.iter().map(subspace_text).collect();
        let json: Vec<_> = d.components.iter().map(subspace_json).collect();
        report.value("components", text.join(" + "), json!(json));
    }
}

fn dims_value(report: &mut Report, name: &str, dims: &[usize]) {
    report.value(name, format!("{dims:?}"), json!(dims));
}

fn dispatch(cli: &Cli, report: &mut Report) -> Result<()> {
    let (seed, budget) = (cli.seed, cli.budget);
    match &cli.command {
        Command::Check { algebra } => {
            let alg = algebra_input(report, algebra)?;
            identity_flags(report, &alg, "", true);
        }
        Command::Derived {
            algebra,
            max_steps,
            expect,
        } => {
            let alg = algebra_input(report, algebra)?;
            let series = derived_series(&alg, max_steps.unwrap_or(alg.dim() + 1));
            dims_value(report, "dims", &series.dims());
            let terms: Vec<String> = series.terms.iter().map(subspace_text).collect();
            let json: Vec<_> = series.terms.iter().map(subspace_json).collect();
            report.value("terms", terms.join(" > "), json!(json));
            for (k, check) in derived_terms_ideal_check(&alg).iter().enumerate() {
                report.flag(
                    format!("A^({k}) is a two-sided Hom-ideal"),
                    check.violation.as_ref().map(Witness::from),
                );
            }
            let (value, out) = match (series.solvable, series.is_settled()) {
                (true, _) => ("SOLVABLE", Outcome::Positive),
                (false, true) => ("NOT_SOLVABLE", Outcome::Negative),
                (false, false) => ("UNDECIDED", Outcome::Undecided),
            };
            report.verdict("solvability", value, out, expected(*expect), None);
        }
        Command::Solvable { algebra, expect } => {
            let alg = algebra_input(report, algebra)?;
            let eq = solvability_equivalence_check(&alg)?;
            dims_value(report, "twisted dims", &eq.twisted.dims());
            dims_value(report, "induced dims", &eq.induced.dims());
            report.bare_flag(
                "twisted and induced solvability agree",
                eq.twisted.solvable == eq.induced.solvable,
                true,
            );
            for (k, ok) in eq.term_identity.iter().enumerate() {
                report.bare_flag(format!("A_alpha^({k}) = alpha^{k}(A^({k}))"), *ok, true);
            }
            let (value, out) = if eq.twisted.solvable {
                ("SOLVABLE", Outcome::Positive)
            } else {
                ("NOT_SOLVABLE", Outcome::Negative)
            };
            report.verdict("solvability", value, out, expected(*expect), None);
        }
        Command::IdealClosure { algebra, vectors } => {
            let alg = algebra_input(report, algebra)?;
            let seed_space = span_input(&alg, vectors)?;
            let closure = hom_ideal_closure(&alg, &seed_space)?;
            report.value("seed", subspace_text(&seed_space), subspace_json(&seed_space));
            report.value("closure", subspace_text(&closure), subspace_json(&closure));
            report.assert_flag(
                "closure is a two-sided Hom-ideal",
                alg.is_hom_ideal(&closure)?.as_ref().map(Witness::from),
            );
            report.bare_flag("closure is proper", closure.is_nontrivial(), false);
        }
        Command::Simple { algebra, expect } => {
            let alg = algebra_input(report, algebra)?;
            let v = simplicity(&alg, seed, budget);
            if let Some(w) = &v.witness {
                report.assert_flag("witness is a two-sided Hom-ideal", alg.is_hom_ideal(w)?.as_ref().map(Witness::from));
            }
            structure_verdict(report, "simplicity", &v, *expect);
        }
        Command::Semisimple { algebra, expect } => {
            let alg = algebra_input(report, algebra)?;
            let d = semisimplicity(&alg, seed, budget);
            decomposition(report, "semisimplicity", &d, *expect);
        }
        Command::Untwist { algebra, out } => {
            let alg = algebra_input(report, algebra)?;
            let pair = untwist(&alg)?;
            report.bare_flag("yau_twist(induced, alpha) = original", pair.is_consistent(), true);
            identity_flags(report, &pair.induced, "induced ", false);
            emit(report, "induced", save_algebra(&pair.induced), out)?;
        }
        Command::Twist { algebra, matrix, out } => {
            let alg = algebra_input(report, algebra)?;
            let beta = parse_matrix(matrix, alg.dim())?;
            report.value("beta", matrix_text(&beta), matrix_json(&beta));
            let twisted = yau_twist(&alg, &beta)?;
            identity_flags(report, &twisted, "twisted ", false);
            emit(report, "twisted", save_algebra(&twisted), out)?;
        }
        Command::Directsum { left, right, out } => {
            let a = algebra_input(report, left)?;
            let b = algebra_input(report, right)?;
            let sum = direct_sum(&a, &b);
            identity_flags(report, &sum, "sum ", false);
            emit(report, "sum", save_algebra(&sum), out)?;
        }
        Command::Quotient { algebra, vectors, out } => {
            let alg = algebra_input(report, algebra)?;
            let ideal = span_input(&alg, vectors)?;
            report.value("ideal", subspace_text(&ideal), subspace_json(&ideal));
            let q = quotient(&alg, &ideal)?;
            report.value("projection", matrix_text(&q.projection), matrix_json(&q.projection));
            identity_flags(report, &q.algebra, "quotient ", false);
            emit(report, "quotient", save_algebra(&q.algebra), out)?;
        }
        Command::Split { algebra } => {
            let alg = algebra_input(report, algebra)?;
            let split = idempotent_split(&alg)?;
            dims_value(report, "part dims", &[split.quotient.algebra.dim(), split.kernel.dim()]);
            report.value(
                "Ker(alpha)",
                subspace_text(&split.kernel_space),
                subspace_json(&split.kernel_space),
            );
            report.value("isomorphism", matrix_text(&split.iso), matrix_json(&split.iso));
            report.assert_flag(
                "A is isomorphic to A/Ker(alpha) + Ker(alpha) via the map above",
                split.violation.as_ref().map(Witness::from),
            );
            report.document("quotient", save_algebra(&split.quotient.algebra));
            report.document("kernel", save_algebra(&split.kernel));
        }
        Command::Iso {
            left,
            right,
            candidate,
            expect,
        } => {
            let a = algebra_input(report, left)?;
            let b = algebra_input(report, right)?;
            let cand = candidate.as_deref().map(|c| parse_matrix(c, b.dim())).transpose()?;
            let r = iso_obstruction(&a, &b, cand.as_ref())?;
            let cert = match &r.certificate {
                IsoCertificate::Dimension { left, right } => Some(Witness::new(
                    format!("dimensions {left} != {right}"),
                    json!({"kind": "dimension", "left": left, "right": right}),
                )),
                IsoCertificate::CharPoly { left, right } => Some(Witness::new(
                    format!("char_poly {left} != {right}"),
                    json!({"kind": "char-poly", "left": left.to_string(), "right": right.to_string()}),
                )),
                IsoCertificate::RankSequence { eigenvalue, left, right } => Some(Witness::new(
                    format!("rank sequences at {eigenvalue}: {left:?} != {right:?}"),
                    json!({"kind": "rank-sequence", "eigenvalue": eigenvalue.to_string(), "left": left, "right": right}),
                )),
                IsoCertificate::Candidate => Some(Witness::new(
                    "candidate is an invertible morphism",
                    json!({"kind": "candidate"}),
                )),
                IsoCertificate::None => None,
            };
            if let Some(f) = &r.candidate_failure {
                report.value("candidate rejected", f.to_string(), json!(f.to_string()));
            }
            let out = match r.verdict {
                IsoVerdict::Isomorphic => Outcome::Positive,
                IsoVerdict::NotIsomorphic => Outcome::Negative,
                IsoVerdict::Inconclusive => Outcome::Undecided,
            };
            report.verdict("isomorphism", r.verdict.as_str(), out, expected(*expect), cert);
        }
        Command::BimoduleCheck { bimodule } => {
            let bim = bimodule_input(report, bimodule)?;
            let checks = is_hom_bimodule(&bim);
            bimodule_flags(report, &checks, "");
            let ki = ker_im_subbimodules(&bim);
            report.value("Ker(alpha_V)", subspace_text(&ki.kernel), subspace_json(&ki.kernel));
            report.value("Im(alpha_V)", subspace_text(&ki.image), subspace_json(&ki.image));
            // Only claimed for modules that satisfy the axioms.
            let holds = checks.all_hold();
            report.bare_flag("Ker(alpha_V) is a subbimodule", ki.kernel_is_subbimodule, holds);
            report.bare_flag("Im(alpha_V) is a subbimodule", ki.image_is_subbimodule, holds && ki.image_asserted);
        }
        Command::BimoduleUntwist { bimodule, out } => {
            let bim = bimodule_input(report, bimodule)?;
            let induced_base = untwist(bim.base())?.induced;
            let plain = untwist_bimodule(&bim, &induced_base)?;
            bimodule_flags(report, &check_alternative_bimodule(&plain), "untwisted ");
            let back = twist_bimodule(&plain, bim.base().twist(), bim.twist())?;
            report.bare_flag("twist(untwist(V)) = V", back == bim, true);
            emit(report, "untwisted", save_bimodule(&plain), out)?;
        }
        Command::BimoduleIrreducible { bimodule, expect } => {
            let bim = bimodule_input(report, bimodule)?;
            let d = bimodule_irreducibility(&bim, seed, budget);
            decomposition(report, "irreducibility", &d, *expect);
        }
        Command::Fixtures { name } => match name {
            None => {
                for n in fixtures::NAMES {
                    let alg = fixtures::algebra(n)?;
                    let desc = fixtures::description(n).unwrap_or_default();
                    report.value(n, format!("dim {}: {desc}", alg.dim()), json!({"dim": alg.dim(), "description": desc}));
                }
            }
            Some(n) => {
                let alg = algebra_input(report, n)?;
                let text = fixtures::document_text(n).map(str::to_string).unwrap_or_else(|| save_algebra(&alg));
                report.document(n.as_str(), text);
            }
        },
    }
    Ok(())
}
