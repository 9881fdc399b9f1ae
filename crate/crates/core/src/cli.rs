//! Command-line front end. Every subcommand renders a deterministic document
//! on stdout: a JSON [`OutputRecord`] or, for wave-function grids, CSV.
//!
//! Exit codes: 0 success, 1 a numerical check failed, 2 invalid arguments.

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::contraction::{contraction_report, N1_FROM_J2, N2_FROM_J1};
use crate::error::Error;
use crate::grid::{sample_grid, Grid2D, Window};
use crate::lie_core::{
    commutator, max_abs, CMatrix4, FourVector, Generator, GeneratorLabel, Rapidity,
};
use crate::little_groups::{
    gauge_shift, gauge_transform, little_group, verify_invariance, FourPotential,
};
use crate::oscillator::{six_sigma_window, Space};
use crate::parton::{parton_report, PROTON_MASS_GEV};
use crate::tolerance;

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "littlegroup",
    version,
    about = "Wigner little groups, contraction, and squeezed hadron wave functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Lorentz and E(2) commutation relations.
    AlgebraCheck,
    /// Little group of a four-momentum along z.
    LittleGroup {
        /// Four-momentum components x y z t.
        #[arg(long, num_args = 4, required = true, allow_negative_numbers = true, value_names = ["X", "Y", "Z", "T"])]
        p: Vec<f64>,
        /// Seed for the randomised invariance check.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Apply a gauge transformation exp(-i(uN1 + vN2)) to a plane-wave potential.
    Gauge {
        #[arg(long, allow_negative_numbers = true)]
        u: f64,
        #[arg(long, allow_negative_numbers = true)]
        v: f64,
        /// Potential amplitude a1 a2 a3 a0.
        #[arg(long = "A", num_args = 4, required = true, allow_negative_numbers = true, value_names = ["A1", "A2", "A3", "A0"])]
        a: Vec<f64>,
        /// Angular frequency of the wave (k = omega).
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
    },
    /// Contraction of boosted rotations onto N1, N2.
    Contract {
        /// Comma-separated, strictly increasing positive rapidities.
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        etas: Vec<f64>,
    },
    /// Sample a squeezed wave function on a grid.
    Wavefunction {
        #[arg(long, allow_negative_numbers = true)]
        eta: f64,
        #[arg(long, value_enum, default_value_t = SpaceArg::Position)]
        space: SpaceArg,
        /// Window as CENTER1 CENTER2 HALF_WIDTH1 HALF_WIDTH2; defaults to six
        /// standard deviations of the widest axis.
        #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["C1", "C2", "H1", "H2"])]
        window: Option<Vec<f64>>,
        /// Points per axis.
        #[arg(long, num_args = 2, value_names = ["N1", "N2"], default_values_t = [101usize, 101])]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Dilation factors and widths for a hadron of given energy.
    PartonReport {
        /// Energy in GeV.
        #[arg(long, allow_negative_numbers = true)]
        energy: f64,
        /// Mass in GeV.
        #[arg(long, default_value_t = PROTON_MASS_GEV, allow_negative_numbers = true)]
        mass: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Position,
    Momentum,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Position => Space::Position,
            SpaceArg::Momentum => Space::Momentum,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Envelope of every JSON document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        let inputs = match inputs {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serialises");
        s.push('\n');
        s
    }
}

/// What a command produced: stdout text, an optional diagnostic, and the
/// process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: Option<String>,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: None,
            exit_code: EXIT_OK,
        }
    }

    fn checked(record: OutputRecord, passed: bool, what: &str) -> Self {
        Outcome {
            stdout: record.to_json(),
            stderr: (!passed).then(|| format!("check failed: {what}")),
            exit_code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
        }
    }

    fn invalid(err: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: Some(format!("error: {err}")),
            exit_code: EXIT_INVALID,
        }
    }
}

/// Shortest round-trip decimal, identical to the JSON rendering.
pub fn format_number(x: f64) -> String {
    Value::from(x).to_string()
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::AlgebraCheck => cmd_algebra_check(),
        Command::LittleGroup { p, seed } => cmd_little_group(p, *seed),
        Command::Gauge { u, v, a, omega } => cmd_gauge(*u, *v, a, *omega),
        Command::Contract { etas } => cmd_contract(etas),
        Command::Wavefunction {
            eta,
            space,
            window,
            n,
            format,
        } => cmd_wavefunction(*eta, (*space).into(), window.as_deref(), n, *format),
        Command::PartonReport { energy, mass } => cmd_parton_report(*energy, *mass),
    }
}

/// One commutation relation `[a, b] = expected` with its deviation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Relation {
    pub label: String,
    pub deviation: f64,
}

fn coefficient_label(c: f64, g: GeneratorLabel) -> String {
    if c == 1.0 {
        format!("i{g}")
    } else if c == -1.0 {
        format!("-i{g}")
    } else {
        "0".to_string()
    }
}

/// All fifteen Lorentz relations plus the three E(2) relations.
pub fn algebra_relations() -> Vec<Relation> {
    use crate::lie_core::levi_civita;
    const I: Complex64 = Complex64::new(0.0, 1.0);
    let g = |l: GeneratorLabel| Generator::new(l).matrix;
    let mut out = Vec::new();
    let mut push = |a: GeneratorLabel, b: GeneratorLabel, coeff: f64, target: GeneratorLabel| {
        let expected: CMatrix4 = g(target) * (I * coeff);
        out.push(Relation {
            label: format!("[{a},{b}]={}", coefficient_label(coeff, target)),
            deviation: max_abs(&(commutator(&g(a), &g(b)) - expected)),
        });
    };
    let third = |i: usize, j: usize| (0..3).find(|&k| k != i && k != j).unwrap_or(i);
    // [J_i, J_j] = iε_ijk J_k
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let k = third(i, j);
        push(
            GeneratorLabel::rotation(i + 1),
            GeneratorLabel::rotation(j + 1),
            levi_civita(i, j, k),
            GeneratorLabel::rotation(k + 1),
        );
    }
    // [K_i, K_j] = −iε_ijk J_k
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let k = third(i, j);
        push(
            GeneratorLabel::boost(i + 1),
            GeneratorLabel::boost(j + 1),
            -levi_civita(i, j, k),
            GeneratorLabel::rotation(k + 1),
        );
    }
    // [J_i, K_j] = iε_ijk K_k
    for i in 0..3 {
        for j in 0..3 {
            let k = third(i, j);
            push(
                GeneratorLabel::rotation(i + 1),
                GeneratorLabel::boost(j + 1),
                levi_civita(i, j, k),
                GeneratorLabel::boost(k + 1),
            );
        }
    }
    push(
        GeneratorLabel::N1,
        GeneratorLabel::N2,
        0.0,
        GeneratorLabel::N1,
    );
    push(
        GeneratorLabel::J3,
        GeneratorLabel::N1,
        1.0,
        GeneratorLabel::N2,
    );
    push(
        GeneratorLabel::J3,
        GeneratorLabel::N2,
        -1.0,
        GeneratorLabel::N1,
    );
    out
}

pub fn cmd_algebra_check() -> Outcome {
    let relations = algebra_relations();
    let max = relations.iter().fold(0.0f64, |m, r| m.max(r.deviation));
    let passed = max <= tolerance::EXACT;
    let record = OutputRecord::new(
        "algebra-check",
        json!({}),
        json!({
            "relations": relations,
            "max_deviation": max,
            "tolerance": tolerance::EXACT,
            "passed": passed,
        }),
    );
    Outcome::checked(
        record,
        passed,
        "commutation relation deviation exceeds tolerance",
    )
}

fn matrix_json(m: &CMatrix4) -> Value {
    let part = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
        (0..4)
            .map(|i| (0..4).map(|j| f(&m[(i, j)])).collect())
            .collect()
    };
    json!({ "re": part(|c| c.re), "im": part(|c| c.im) })
}

pub fn cmd_little_group(p: &[f64], seed: u64) -> Outcome {
    let p = FourVector::new(p[0], p[1], p[2], p[3]);
    let group = match little_group(&p) {
        Ok(g) => g,
        Err(e) => return Outcome::invalid(e),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params: Vec<f64> = (0..group.generators.len())
        .map(|_| rng.random_range(-3.0..=3.0))
        .collect();
    let deviation = match verify_invariance(&p, &params) {
        Ok(d) => d,
        Err(e) => return Outcome::invalid(e),
    };
    let passed = deviation <= tolerance::CHAINED;
    let generators: Vec<Value> = group
        .generators
        .iter()
        .map(|g| json!({ "name": g.name, "matrix": matrix_json(&g.matrix) }))
        .collect();
    let record = OutputRecord::new(
        "little-group",
        json!({ "p": p.to_array(), "seed": seed }),
        json!({
            "class": group.class.to_string(),
            "rapidity": group.rapidity.map(|r| r.0),
            "generators": generators,
            "invariance_params": params,
            "invariance_deviation": deviation,
            "passed": passed,
        }),
    );
    Outcome::checked(
        record,
        passed,
        "little-group invariance deviation exceeds 1e-9",
    )
}

pub fn cmd_gauge(u: f64, v: f64, a: &[f64], omega: f64) -> Outcome {
    let potential = FourPotential::new(a[0], a[1], a[2], a[3], omega);
    match gauge_transform(&potential, u, v) {
        Ok(out) => {
            let record = OutputRecord::new(
                "gauge",
                json!({ "u": u, "v": v, "A": a, "omega": omega }),
                json!({
                    "potential": [out.a1, out.a2, out.a3, out.a0],
                    "shift": gauge_shift(&potential, u, v),
                    "k": out.k,
                    "omega": out.omega,
                }),
            );
            Outcome::ok(record.to_json())
        }
        Err(e) => Outcome::invalid(e),
    }
}

/// Convergence bound `C` in `deviation ≤ C·e^{−2η}`.
pub const CONTRACTION_BOUND: f64 = 4.0;

pub fn cmd_contract(etas: &[f64]) -> Outcome {
    let report = match contraction_report(etas) {
        Ok(r) => r,
        Err(e) => return Outcome::invalid(e),
    };
    let passed = report.within_bound(CONTRACTION_BOUND);
    let record = OutputRecord::new(
        "contract",
        json!({ "etas": etas }),
        json!({
            "etas": report.etas,
            "deviations_n1": report.deviations_n1,
            "deviations_n2": report.deviations_n2,
            "fitted_decay_rate": report.fitted_decay_rate,
            "convention": { "N1": N1_FROM_J2, "N2": N2_FROM_J1 },
            "bound_constant": CONTRACTION_BOUND,
            "passed": passed,
        }),
    );
    Outcome::checked(record, passed, "contraction deviation exceeds 4e^(-2eta)")
}

/// Renders a grid as `axis1,axis2,amplitude` rows in storage order.
pub fn grid_csv(grid: &Grid2D, axes: [&str; 2]) -> String {
    let mut s = format!("{},{},amplitude\n", axes[0], axes[1]);
    for i in 0..grid.n.0 {
        for j in 0..grid.n.1 {
            let (a, b) = grid.coord(i, j);
            s.push_str(&format_number(a));
            s.push(',');
            s.push_str(&format_number(b));
            s.push(',');
            s.push_str(&format_number(grid.get(i, j)));
            s.push('\n');
        }
    }
    s
}

pub fn cmd_wavefunction(
    eta: f64,
    space: Space,
    window: Option<&[f64]>,
    n: &[usize],
    format: Format,
) -> Outcome {
    if !eta.is_finite() {
        return Outcome::invalid(Error::InvalidKinematics(format!(
            "rapidity {eta} is not finite"
        )));
    }
    let eta = Rapidity(eta);
    let window = match window {
        Some(w) => Window::new((w[0], w[1]), (w[2], w[3])),
        None => six_sigma_window(eta),
    };
    let grid = match sample_grid(|a, b| space.evaluate(eta, a, b), &window, (n[0], n[1])) {
        Ok(g) => g,
        Err(e) => return Outcome::invalid(e),
    };
    let axes = space.axis_names();
    match format {
        Format::Csv => Outcome::ok(grid_csv(&grid, axes)),
        Format::Json => {
            let record = OutputRecord::new(
                "wavefunction",
                json!({
                    "eta": eta.0,
                    "space": space,
                    "window": window,
                    "n": n,
                }),
                json!({ "axes": axes, "grid": grid }),
            );
            Outcome::ok(record.to_json())
        }
    }
}

pub fn cmd_parton_report(energy: f64, mass: f64) -> Outcome {
    match parton_report(energy, mass) {
        Ok(r) => {
            let record = OutputRecord::new(
                "parton-report",
                json!({ "energy": energy, "mass": mass }),
                serde_json::to_value(r).expect("report serialises"),
            );
            Outcome::ok(record.to_json())
        }
        Err(e) => Outcome::invalid(e),
    }
}
