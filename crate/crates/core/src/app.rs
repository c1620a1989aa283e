//! Command-line front end. `main` only parses arguments and calls [`run`].

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::Tolerances;
use crate::error::Error;
use crate::hw::{hw_check, hw_type_check, non_standard_counterexample, InequalityReport};
use crate::io::{self, Input, MatrixFile};
use crate::poly::{
    bound_check, bound_check_commuting_disc, bound_check_unitary, diagonalizable_companion_linear,
    diagonalizable_companion_quadratic_unitary, hw_compare_poly, hw_type_poly, standard_eigenvalues_poly,
    BoundClass, BoundReport, MonicForm, QMatrixPolynomial,
};
use crate::qmat::{diagonalize, is_unitary, standard_eigenvalues, QMatrix};
use crate::trials::{self, DiagClass, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

const EXIT_HELP: &str = "\
Exit status:
  0  success; the inequality or bound holds
  1  the inequality or bound is violated, or a suite item failed
  2  precondition violated (not normal, not diagonalizable, singular leading
     coefficient, shape mismatch, class hypotheses)
  3  parse error in an input file or argument
  4  numeric failure (no convergence, pairing or cross-check failure)";

#[derive(Debug, Parser)]
#[command(name = "qhw", version, about = "Standard eigenvalues and Hoffman-Wielandt checks for quaternion matrices and matrix polynomials", after_help = EXIT_HELP)]
pub struct Cli {
    /// Override a tolerance, e.g. --tol pairing=1e-7 (repeatable).
    #[arg(long = "tol", value_name = "NAME=VALUE", global = true)]
    pub tol: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Side on which the leading coefficient's inverse is applied when
    /// forming the monic polynomial.
    #[arg(long, value_enum, default_value_t = FormArg::Right, global = true)]
    pub monic_form: FormArg,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    /// B_i = A_i A_m^-1
    Right,
    /// B_i = A_m^-1 A_i
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Unitary,
    Ds,
    Commuting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Hw,
    HwType,
    Companion,
    Bounds,
    Diag,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Standard eigenvalues of a matrix or of a polynomial's companion.
    Eigs { file: PathBuf },
    /// Matched eigenvalue distance against ||A - B||_F^2. Polynomials are
    /// compared through their companion matrices.
    Hw {
        a: PathBuf,
        b: PathBuf,
        /// Use the bound kappa(X)^2 ||A - B||_F^2 with X diagonalizing A.
        #[arg(long = "type")]
        weighted: bool,
    },
    /// Eigenvalue-location bounds for a polynomial.
    Bounds {
        file: PathBuf,
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Disc radius for --class commuting; computed when omitted.
        #[arg(long)]
        r: Option<f64>,
    },
    /// Diagonalize a matrix or a polynomial's companion matrix.
    Diag { file: PathBuf },
    /// Replay the reference examples shipped in the fixtures directory.
    PaperSuite {
        #[arg(long, default_value = default_fixtures())]
        fixtures: PathBuf,
    },
    /// Randomized property trials.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

fn default_fixtures() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::NotNormal(_)
        | Error::NotDiagonalizable(_)
        | Error::SingularLeadingCoefficient
        | Error::PreconditionViolated(_)
        | Error::NotLinear(_)
        | Error::ShapeMismatch(_)
        | Error::LengthMismatch(..) => EXIT_PRECONDITION,
        Error::ZeroQuaternion
        | Error::NonFinite
        | Error::NoConvergence { .. }
        | Error::NotHermitian { .. }
        | Error::Singular
        | Error::PairingFailure { .. }
        | Error::MalformedPairing(_)
        | Error::CrossCheck { .. } => EXIT_NUMERIC,
    }
}

/// Six significant digits, trailing zeros removed.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&mag) {
        let s = format!("{x:.5e}");
        let (m, e) = s.split_once('e').expect("exponent form");
        let m = if m.contains('.') { m.trim_end_matches('0').trim_end_matches('.') } else { m };
        return format!("{m}e{e}");
    }
    let decimals = (5 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// `a+bi` with six significant digits; the imaginary part is omitted when zero.
pub fn fmt_complex(z: Complex64) -> String {
    let re = fmt_real(z.re);
    let im = fmt_real(z.im);
    if im == "0" {
        return re;
    }
    let re = if re == "0" { String::new() } else { re };
    match im.strip_prefix('-') {
        Some(abs) => format!("{re}-{abs}i"),
        None if re.is_empty() => format!("{im}i"),
        None => format!("{re}+{im}i"),
    }
}

fn fmt_list(v: &[Complex64]) -> String {
    v.iter().map(|z| fmt_complex(*z)).collect::<Vec<_>>().join(", ")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigsReport {
    pub kind: String,
    pub size: usize,
    pub degree: Option<usize>,
    pub eigenvalues: Vec<Complex64>,
    pub pairing_residual: f64,
    /// Distance to the values obtained through the adjoint polynomial.
    pub adjoint_route_discrepancy: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagReport {
    pub diagonalizable: bool,
    pub justification: String,
    pub eigenvalues: Vec<Complex64>,
    pub kappa: Option<f64>,
    pub x: Option<MatrixFile>,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaperSuiteReport {
    pub items: Vec<SuiteItem>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

struct Ctx<'a> {
    tol: Tolerances,
    format: Format,
    form: MonicForm,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(&mut self, report: &T, human: impl FnOnce() -> String) {
        let text = match self.format {
            Format::Machine => io::emit(report),
            Format::Human => human(),
        };
        let _ = writeln!(self.out, "{}", text.trim_end());
    }

    fn read(&self, path: &Path) -> Result<Input, Error> {
        Ok(match io::read_input(path)? {
            Input::Polynomial(p) => Input::Polynomial(p.with_form(self.form)),
            m => m,
        })
    }

    fn read_polynomial(&self, path: &Path) -> Result<QMatrixPolynomial, Error> {
        match self.read(path)? {
            Input::Polynomial(p) => Ok(p),
            Input::Matrix(_) => Err(Error::PreconditionViolated(format!("{} is a matrix, expected a polynomial", path.display()))),
        }
    }
}

/// Runs one command; returns the process exit status. Diagnostics go to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut tol = Tolerances::default();
    for spec in &cli.tol {
        if let Err(e) = tol.apply_override(spec) {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    }
    let form = match cli.monic_form {
        FormArg::Right => MonicForm::RightInverse,
        FormArg::Left => MonicForm::LeftInverse,
    };
    let mut ctx = Ctx { tol, format: cli.format, form, out };
    let result = match cli.command {
        Command::Eigs { file } => cmd_eigs(&mut ctx, &file),
        Command::Hw { a, b, weighted } => cmd_hw(&mut ctx, &a, &b, weighted),
        Command::Bounds { file, class, r } => cmd_bounds(&mut ctx, &file, class, r),
        Command::Diag { file } => cmd_diag(&mut ctx, &file),
        Command::PaperSuite { fixtures } => cmd_paper_suite(&mut ctx, &fixtures),
        Command::Fuzz { trials, seed, suite } => cmd_fuzz(&mut ctx, trials, seed, suite),
    };
    match result {
        Ok((code, diagnostic)) => {
            if let Some(d) = diagnostic {
                let _ = writeln!(err, "{d}");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type CmdResult = Result<(i32, Option<String>), Error>;

fn cmd_eigs(ctx: &mut Ctx, file: &Path) -> CmdResult {
    let report = match ctx.read(file)? {
        Input::Matrix(a) => {
            let s = standard_eigenvalues(&a, &ctx.tol)?;
            EigsReport {
                kind: "matrix".into(),
                size: a.rows(),
                degree: None,
                eigenvalues: s.values,
                pairing_residual: s.pairing_residual,
                adjoint_route_discrepancy: None,
            }
        }
        Input::Polynomial(p) => {
            let s = standard_eigenvalues_poly(&p, &ctx.tol)?;
            EigsReport {
                kind: "polynomial".into(),
                size: p.size(),
                degree: Some(p.degree()),
                eigenvalues: s.spectrum.values,
                pairing_residual: s.spectrum.pairing_residual,
                adjoint_route_discrepancy: Some(s.discrepancy),
            }
        }
    };
    ctx.emit(&report, || {
        let mut s = format!("standard eigenvalues: {}\npairing residual: {}\n", fmt_list(&report.eigenvalues), fmt_real(report.pairing_residual));
        if let Some(d) = report.adjoint_route_discrepancy {
            s += &format!("adjoint polynomial route discrepancy: {}\n", fmt_real(d));
        }
        s
    });
    Ok((EXIT_OK, None))
}

fn human_inequality(r: &InequalityReport) -> String {
    let mut s = String::new();
    s += &format!("justification: {}\n", r.justification);
    s += &format!("standard eigenvalues A: {}\n", fmt_list(&r.spectrum_a));
    s += &format!("standard eigenvalues B: {}\n", fmt_list(&r.spectrum_b));
    s += &format!("matched distance (lhs): {}\n", fmt_real(r.lhs));
    s += &format!("||A - B||_F^2: {}\n", fmt_real(r.frobenius_sq));
    if let Some(k) = r.kappa {
        s += &format!("kappa(X): {}\n", fmt_real(k));
    }
    s += &format!("bound (rhs): {}\n", fmt_real(r.rhs));
    s += &format!("slack: {}\n", fmt_real(r.slack));
    s += &format!("permutation: {}\n", r.permutation.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "));
    s += &format!("holds: {}\n", if r.holds { "yes" } else { "no" });
    s
}

fn cmd_hw(ctx: &mut Ctx, a: &Path, b: &Path, weighted: bool) -> CmdResult {
    let report = match (ctx.read(a)?, ctx.read(b)?) {
        (Input::Matrix(x), Input::Matrix(y)) if weighted => hw_type_check(&x, &y, &ctx.tol)?,
        (Input::Matrix(x), Input::Matrix(y)) => hw_check(&x, &y, &ctx.tol)?,
        (Input::Polynomial(p), Input::Polynomial(q)) if weighted => hw_type_poly(&p, &q, &ctx.tol)?,
        (Input::Polynomial(p), Input::Polynomial(q)) => hw_compare_poly(&p, &q, &ctx.tol)?,
        _ => return Err(Error::PreconditionViolated("inputs must both be matrices or both be polynomials".into())),
    };
    ctx.emit(&report, || human_inequality(&report));
    if report.holds {
        Ok((EXIT_OK, None))
    } else {
        Ok((EXIT_VIOLATED, Some(format!("inequality violated: lhs {} > rhs {}", report.lhs, report.rhs))))
    }
}

fn human_bounds(r: &BoundReport) -> String {
    let mut s = format!("standard eigenvalues: {}\n", fmt_list(&r.eigenvalues));
    s += &format!("modulus range: [{}, {}]\n", fmt_real(r.min_modulus), fmt_real(r.max_modulus));
    if let Some(rad) = r.radius {
        s += &format!("disc radius r: {}\n", fmt_real(rad));
    }
    match (r.lower, r.lower_margin) {
        (Some(l), Some(m)) => s += &format!("bounds: {} < |l| < {}\nmargins: {} below, {} above\n", fmt_real(l), fmt_real(r.upper), fmt_real(m), fmt_real(r.upper_margin)),
        _ => s += &format!("bound: |l| < {}\nmargin: {}\n", fmt_real(r.upper), fmt_real(r.upper_margin)),
    }
    s += &format!("holds: {}\n", if r.holds { "yes" } else { "no" });
    s
}

fn cmd_bounds(ctx: &mut Ctx, file: &Path, class: ClassArg, r: Option<f64>) -> CmdResult {
    let p = ctx.read_polynomial(file)?;
    let class = match class {
        ClassArg::Unitary => BoundClass::Unitary,
        ClassArg::Ds => BoundClass::DoublyStochastic,
        ClassArg::Commuting => BoundClass::Commuting,
    };
    if r.is_some() && class != BoundClass::Commuting {
        return Err(Error::PreconditionViolated("--r applies only to --class commuting".into()));
    }
    let report = bound_check(&p, class, r, &ctx.tol)?;
    ctx.emit(&report, || human_bounds(&report));
    if report.holds {
        Ok((EXIT_OK, None))
    } else {
        Ok((EXIT_VIOLATED, Some("eigenvalue outside the bound".into())))
    }
}

fn diag_polynomial(p: &QMatrixPolynomial, tol: &Tolerances) -> Result<DiagReport, Error> {
    let d = if p.degree() == 1 {
        diagonalizable_companion_linear(p, tol)?
    } else {
        match diagonalizable_companion_quadratic_unitary(p, tol) {
            Ok(d) => d,
            Err(Error::PreconditionViolated(why)) => {
                let c = p.companion(tol)?.matrix;
                return diag_matrix(&c, tol).map(|mut r| {
                    r.justification = format!("no class applies ({why}); diagonalized numerically");
                    r
                });
            }
            Err(e) => return Err(e),
        }
    };
    Ok(DiagReport {
        diagonalizable: d.diagonalizable,
        justification: d.justification,
        eigenvalues: d.spectrum.map(|s| s.values).unwrap_or_default(),
        kappa: d.kappa,
        x: d.x.as_ref().map(MatrixFile::from_matrix),
        failure: d.failure,
    })
}

fn diag_matrix(a: &QMatrix, tol: &Tolerances) -> Result<DiagReport, Error> {
    match diagonalize(a, tol) {
        Ok(d) => Ok(DiagReport {
            diagonalizable: true,
            justification: "diagonalized numerically".into(),
            kappa: Some(d.condition_number(tol)?),
            eigenvalues: d.spectrum.values,
            x: Some(MatrixFile::from_matrix(&d.x)),
            failure: None,
        }),
        Err(e @ Error::NotDiagonalizable(_)) => Ok(DiagReport {
            diagonalizable: false,
            justification: "diagonalized numerically".into(),
            eigenvalues: standard_eigenvalues(a, tol)?.values,
            kappa: None,
            x: None,
            failure: Some(e.to_string()),
        }),
        Err(e) => Err(e),
    }
}

fn cmd_diag(ctx: &mut Ctx, file: &Path) -> CmdResult {
    let report = match ctx.read(file)? {
        Input::Matrix(a) => diag_matrix(&a, &ctx.tol)?,
        Input::Polynomial(p) => diag_polynomial(&p, &ctx.tol)?,
    };
    ctx.emit(&report, || {
        let mut s = format!("diagonalizable: {}\n", if report.diagonalizable { "yes" } else { "no" });
        s += &format!("justification: {}\n", report.justification);
        if !report.eigenvalues.is_empty() {
            s += &format!("standard eigenvalues: {}\n", fmt_list(&report.eigenvalues));
        }
        if let Some(k) = report.kappa {
            s += &format!("kappa(X): {}\n", fmt_real(k));
        }
        if let Some(f) = &report.failure {
            s += &format!("reason: {f}\n");
        }
        s
    });
    if report.diagonalizable {
        Ok((EXIT_OK, None))
    } else {
        Ok((EXIT_PRECONDITION, Some(format!("error: {}", report.failure.clone().unwrap_or_default()))))
    }
}

struct Suite<'a> {
    dir: &'a Path,
    tol: Tolerances,
    form: MonicForm,
    items: Vec<SuiteItem>,
}

impl Suite<'_> {
    fn matrix(&self, name: &str) -> Result<QMatrix, Error> {
        match io::read_input(&self.dir.join(name))? {
            Input::Matrix(a) => Ok(a),
            Input::Polynomial(_) => Err(Error::Parse(format!("{name}: expected a matrix"))),
        }
    }

    fn polynomial(&self, name: &str) -> Result<QMatrixPolynomial, Error> {
        match io::read_input(&self.dir.join(name))? {
            Input::Polynomial(p) => Ok(p.with_form(self.form)),
            Input::Matrix(_) => Err(Error::Parse(format!("{name}: expected a polynomial"))),
        }
    }

    fn check(&mut self, name: &str, f: impl FnOnce(&Self) -> Result<(bool, String), Error>) {
        let (passed, detail) = f(self).unwrap_or_else(|e| (false, format!("error: {e}")));
        self.items.push(SuiteItem { name: name.into(), passed, detail });
    }
}

fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    a.len() == b.len() && crate::poly::matched_distance(a, b).is_ok_and(|d| d <= tol)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The reference examples. Every item compares against the published value
/// at the stated precision.
pub fn paper_suite(dir: &Path, tol: &Tolerances, form: MonicForm) -> PaperSuiteReport {
    let mut s = Suite { dir, tol: *tol, form, items: vec![] };

    s.check("complex diagonal diag(1+i, 1-i)", |s| {
        let v = standard_eigenvalues(&s.matrix("diag_complex_conjugates.json")?, &s.tol)?.values;
        Ok((close(&v, &[c(1.0, 1.0), c(1.0, 1.0)], 1e-10), format!("standard eigenvalues {}", fmt_list(&v))))
    });
    s.check("diag(j, j) is unitary with eigenvalues i, i", |s| {
        let a = s.matrix("diag_jj.json")?;
        let v = standard_eigenvalues(&a, &s.tol)?.values;
        let norm = a.spectral_norm()?;
        let ok = is_unitary(&a, s.tol.structure) && (norm - 1.0).abs() < 1e-10 && close(&v, &[c(0.0, 1.0); 2], 1e-10);
        Ok((ok, format!("spectral norm {}, eigenvalues {}", fmt_real(norm), fmt_list(&v))))
    });
    s.check("normal pair: standard eigenvalues give lhs = rhs = 1", |s| {
        let r = hw_check(&s.matrix("normal_a.json")?, &s.matrix("normal_b.json")?, &s.tol)?;
        let ok = r.holds && (r.lhs - 1.0).abs() <= 1e-9 && (r.rhs - 1.0).abs() <= 1e-9;
        Ok((ok, format!("lhs {}, rhs {}", fmt_real(r.lhs), fmt_real(r.rhs))))
    });
    s.check("normal pair: non-standard eigenvalue 1-i breaks the bound", |s| {
        let r = non_standard_counterexample(&s.tol)?;
        Ok((r.fails && r.min_cost > 1.0, format!("matched costs {:?} > ||A-B||_F^2 = {}", r.permutation_costs, fmt_real(r.frobenius_sq))))
    });
    s.check("linear normal-coefficient pair: 48 > 27", |s| {
        let (p, q) = (s.polynomial("linear_p.json")?, s.polynomial("linear_q.json")?);
        let r = hw_compare_poly(&p, &q, &s.tol)?;
        let rt = 2.0 * 2f64.sqrt();
        let ok = (r.frobenius_sq - 27.0).abs() <= 1e-9
            && (r.lhs - 48.0).abs() <= 1e-9
            && !r.holds
            && close(&r.spectrum_a, &[c(-4.0 - rt, 0.0), c(-4.0 + rt, 0.0)], 1e-9)
            && close(&r.spectrum_b, &[c(-4.0, 4.0); 2], 1e-9);
        Ok((ok, format!("||C_P - C_Q||_F^2 = {}, matched distance {}", fmt_real(r.frobenius_sq), fmt_real(r.lhs))))
    });
    s.check("linear normal-coefficient pair: weighted bound holds", |s| {
        let r = hw_type_poly(&s.polynomial("linear_p.json")?, &s.polynomial("linear_q.json")?, &s.tol)?;
        Ok((r.holds, format!("lhs {} <= kappa^2 * 27 = {}", fmt_real(r.lhs), fmt_real(r.rhs))))
    });
    s.check("quadratic unitary pair: matched distance >= 4.5102 > 4", |s| {
        let (p, q) = (s.polynomial("quadratic_p.json")?, s.polynomial("quadratic_q.json")?);
        let r = hw_compare_poly(&p, &q, &s.tol)?;
        let want_p = [c(-0.6225, 0.0), c(-0.4969, 0.8643), c(-0.4969, 0.8643), c(1.6163, 0.0)];
        let want_q = [c(-1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)];
        let ok = (r.frobenius_sq - 4.0).abs() <= 1e-9
            && r.lhs >= 4.5102 - 1e-3
            && close(&r.spectrum_a, &want_p, 1e-3)
            && close(&r.spectrum_b, &want_q, 1e-3);
        Ok((ok, format!("C_P eigenvalues {}; matched distance {}", fmt_list(&r.spectrum_a), fmt_real(r.lhs))))
    });
    s.check("quadratic unitary P: moduli in (1/2, 2)", |s| {
        let r = bound_check_unitary(&s.polynomial("quadratic_p.json")?, &s.tol)?;
        let ok = r.holds && (r.max_modulus - 1.6163).abs() < 1e-3;
        Ok((ok, format!("moduli in [{}, {}]", fmt_real(r.min_modulus), fmt_real(r.max_modulus))))
    });
    s.check("quadratic unitary P: coefficients do not commute", |s| {
        let p = s.polynomial("quadratic_p.json")?;
        let k = crate::qmat::commutator_norm(&p.coefficients()[0], &p.coefficients()[1]);
        let routed = matches!(diagonalizable_companion_quadratic_unitary(&p, &s.tol), Err(Error::PreconditionViolated(_)));
        Ok((routed && k > 1e-3, format!("||U0 U1 - U1 U0||_F = {}", fmt_real(k))))
    });
    s.check("I l^2 + I l + I: moduli < r + 1 = 2", |s| {
        let r = bound_check_commuting_disc(&s.polynomial("identity_quadratic.json")?, Some(1.0), &s.tol)?;
        Ok((r.holds, format!("max modulus {}", fmt_real(r.max_modulus))))
    });
    s.check("permutation and doubly stochastic coefficients: moduli in (1/2, 2)", |s| {
        let r = bound_check(&s.polynomial("permutation_quadratic.json")?, BoundClass::DoublyStochastic, None, &s.tol)?;
        Ok((r.holds, format!("moduli in [{}, {}]", fmt_real(r.min_modulus), fmt_real(r.max_modulus))))
    });
    for (file, what) in [
        ("defective_normal_linear.json", "normal linear coefficients"),
        ("defective_triangular.json", "triangular linear coefficients"),
        ("defective_cubic_unitary.json", "cubic with unitary coefficients"),
        ("quadratic_q.json", "quadratic with non-commuting unitary coefficients"),
    ] {
        s.check(&format!("defective companion: {what}"), |s| {
            let c = s.polynomial(file)?.companion(&s.tol)?.matrix;
            match diagonalize(&c, &s.tol) {
                Err(Error::NotDiagonalizable(m)) => Ok((true, m)),
                Err(e) => Err(e),
                Ok(_) => Ok((false, "companion diagonalized".into())),
            }
        });
    }
    let passed = s.items.iter().all(|i| i.passed);
    PaperSuiteReport { items: s.items, passed }
}

fn cmd_paper_suite(ctx: &mut Ctx, dir: &Path) -> CmdResult {
    let report = paper_suite(dir, &ctx.tol, ctx.form);
    ctx.emit(&report, || {
        let mut s = String::new();
        for i in &report.items {
            s += &format!("{} {}: {}\n", if i.passed { "PASS" } else { "FAIL" }, i.name, i.detail);
        }
        s += &format!("{} of {} items passed\n", report.items.iter().filter(|i| i.passed).count(), report.items.len());
        s
    });
    if report.passed {
        Ok((EXIT_OK, None))
    } else {
        Ok((EXIT_VIOLATED, Some("paper suite: some items failed".into())))
    }
}

fn cmd_fuzz(ctx: &mut Ctx, trials: usize, seed: u64, suite: SuiteArg) -> CmdResult {
    let tol = &ctx.tol;
    let suites = match suite {
        SuiteArg::All => trials::all(trials, seed, tol),
        SuiteArg::Hw => vec![trials::hw_normal(trials, seed, tol)],
        SuiteArg::HwType => vec![trials::hw_diagonalizable(trials, seed, tol)],
        SuiteArg::Companion => vec![trials::companion(trials, seed, tol)],
        SuiteArg::Bounds => [BoundClass::Unitary, BoundClass::DoublyStochastic, BoundClass::Commuting]
            .into_iter()
            .map(|c| trials::bounds(c, trials, seed, tol))
            .collect(),
        SuiteArg::Diag => DiagClass::ALL.into_iter().map(|c| trials::diagonalizable_classes(c, trials, seed, tol)).collect(),
    };
    let passed = suites.iter().all(SuiteReport::all_passed);
    let report = FuzzReport { seed, trials, suites, passed };
    ctx.emit(&report, || {
        let mut s = String::new();
        for r in &report.suites {
            s += &format!("{} {}: {}/{} trials, {} {}\n", if r.all_passed() { "PASS" } else { "FAIL" }, r.name, r.passed, r.trials, r.metric, fmt_real(r.extreme));
            for f in r.failures.iter().take(5) {
                s += &format!("    trial {}: {}\n", f.trial, f.message);
            }
        }
        s
    });
    if passed {
        Ok((EXIT_OK, None))
    } else {
        Ok((EXIT_VIOLATED, Some("fuzz: some trials failed".into())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_real(1.0), "1");
        assert_eq!(fmt_real(-6.828427124746), "-6.82843");
        assert_eq!(fmt_real(0.86426887), "0.864269");
        assert_eq!(fmt_real(48.000000000001), "48");
        assert_eq!(fmt_real(1.5e-9), "1.5e-9");
        assert_eq!(fmt_complex(c(1.0, 1.0)), "1+1i");
        assert_eq!(fmt_complex(c(-4.0, 4.0)), "-4+4i");
        assert_eq!(fmt_complex(c(1.0, -0.5)), "1-0.5i");
        assert_eq!(fmt_complex(c(0.0, 1.0)), "1i");
        assert_eq!(fmt_complex(c(2.0, 1e-17)), "2+1e-17i");
    }

    #[test]
    fn exit_codes_are_distinct_by_kind() {
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_PARSE);
        assert_eq!(exit_code(&Error::NotNormal(crate::error::Operand::A)), EXIT_PRECONDITION);
        assert_eq!(exit_code(&Error::NoConvergence { sweeps: 1 }), EXIT_NUMERIC);
    }
}
