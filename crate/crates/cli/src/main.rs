//! Command line surface: enumeration, classification, matrix verification,
//! the stability-condition table, and the self-test sweep.
//!
//! Exit codes: 0 success, 2 validation or input error, 3 internal
//! invariant failure.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use nilorbit::algebra::{validate_datum, AlgebraDescriptor, MultiplicityDatum};
use nilorbit::engine::{self, EngineError};
use nilorbit::gibbs;
use nilorbit::orbits;
use nilorbit::report::{self, OrbitRow, ReportError};

#[derive(Parser)]
#[command(
    name = "nilorbit",
    version,
    about = "Negation stability and Gibbs verdicts for nilpotent adjoint orbits of the classical real Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraFlags {
    /// Family: sl_r | so_r | sp_r | su | sl_h | sp_hq | so_star | complex
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List all orbit data of an algebra with their verdicts.
    Enumerate {
        #[command(flatten)]
        alg: AlgebraFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate one multiplicity datum.
    Classify {
        #[command(flatten)]
        alg: AlgebraFlags,
        /// Inline JSON `{"entries":[...]}` or a path to a JSON file.
        #[arg(long)]
        datum: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the exact matrix pipeline on a nilpotent element.
    MatrixCheck {
        /// JSON file `{"alg":{...},"matrix":[["0","1"],["0","0"]]}`.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the per-family stability conditions, spot-checked against the
    /// criterion code on an enumeration sweep.
    Table1 {
        #[arg(long, default_value_t = 6)]
        max_dim: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Oracle-agreement and geometry sweep; exit 3 on any disagreement.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_dim: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

enum CliError {
    User(String),
    Internal(String),
}

impl From<nilorbit::algebra::DatumError> for CliError {
    fn from(e: nilorbit::algebra::DatumError) -> Self {
        CliError::User(e.to_string())
    }
}

impl From<ReportError> for CliError {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Invalid(msg) => CliError::User(msg),
            ReportError::Internal(msg) => CliError::Internal(msg),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Internal(_) => CliError::Internal(e.to_string()),
            other => CliError::User(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal invariant failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn parse_algebra(flags: &AlgebraFlags) -> Result<AlgebraDescriptor, CliError> {
    use AlgebraDescriptor::*;
    let need_n = || {
        flags.n.ok_or_else(|| CliError::User(format!("family {} requires --n", flags.family)))
    };
    let need_pq = || match (flags.p, flags.q) {
        (Some(p), Some(q)) => Ok((p, q)),
        _ => Err(CliError::User(format!("family {} requires --p and --q", flags.family))),
    };
    let alg = match flags.family.as_str() {
        "sl_r" => SlR { n: need_n()? },
        "so_r" => {
            let (p, q) = need_pq()?;
            SoR { p, q }
        }
        "sp_r" => SpR { n: need_n()? },
        "su" => {
            let (p, q) = need_pq()?;
            Su { p, q }
        }
        "sl_h" => SlH { n: need_n()? },
        "sp_hq" => {
            let (p, q) = need_pq()?;
            SpHq { p, q }
        }
        "so_star" => SoStar { n: need_n()? },
        "complex" => Complex,
        other => return Err(CliError::User(format!("unknown family `{other}`"))),
    };
    alg.validate()?;
    Ok(alg)
}

fn params(alg: &AlgebraDescriptor) -> String {
    use AlgebraDescriptor::*;
    match *alg {
        SlR { n } | SpR { n } | SlH { n } | SoStar { n } => format!("n={n}"),
        SoR { p, q } | Su { p, q } | SpHq { p, q } => format!("p={p};q={q}"),
        Complex => String::new(),
    }
}

fn csv_line(row: &OrbitRow) -> String {
    format!(
        "{},{},{},{},{},{}",
        row.alg.family_name(),
        params(&row.alg),
        row.datum.young_string(),
        row.stable,
        row.gibbs,
        row.reason,
    )
}

fn text_line(row: &OrbitRow) -> String {
    format!(
        "{:<12} {:<20} stable={:<5} gibbs={:<16} [{}] {}",
        row.alg.to_string(),
        row.datum.young_string(),
        row.stable,
        row.gibbs.to_string(),
        row.reason,
        row.detail,
    )
}

const CSV_HEADER: &str = "family,params,datum,stable,gibbs,reason";

fn emit_rows(rows: &[OrbitRow], format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string(rows).expect("row serialization"));
        }
        Format::Csv => {
            println!("{CSV_HEADER}");
            for row in rows {
                println!("{}", csv_line(row));
            }
        }
        Format::Text => {
            for row in rows {
                println!("{}", text_line(row));
            }
        }
    }
}

fn read_datum_arg(arg: &str) -> Result<MultiplicityDatum, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| CliError::User(format!("cannot read datum file {arg}: {e}")))?
    };
    Ok(MultiplicityDatum::from_json(&text)?)
}

fn run_matrix_check(path: &str, format: Format) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::User(format!("cannot read {path}: {e}")))?;
    let out = report::matrix_check(&text)?;
    match format {
        Format::Json | Format::Csv => {
            println!("{}", serde_json::to_string(&out).expect("bundle serialization"));
        }
        Format::Text => {
            println!("algebra:   {}", out.alg);
            println!("datum:     {} ({})", out.datum.young_string(), out.datum.to_json());
            println!("stable:    {} [{}] {}", out.stable, out.reason, out.detail);
            println!("gibbs:     {}", out.gibbs);
            if let Some(st) = out.sigma_tau {
                println!("sigma/tau: ({:+},{:+})", st.0, st.1);
            }
            if let Some(det) = &out.conjugator_det {
                println!("det A:     {det}");
            }
            if let Some(a) = &out.conjugator {
                let mut s = String::new();
                for row in a {
                    let _ = writeln!(s, "           [{}]", row.join(", "));
                }
                print!("conjugator A with A x A^-1 = -x:\n{s}");
            }
            if let Some(note) = &out.note {
                println!("note:      {note}");
            }
        }
    }
    Ok(())
}

/// All descriptors of the matrix-level families with ambient dimension at
/// most `max_dim`.
fn matrix_sweep(max_dim: u32) -> Vec<AlgebraDescriptor> {
    use AlgebraDescriptor::*;
    let mut out = Vec::new();
    for n in 2..=max_dim {
        out.push(SlR { n });
    }
    for p in 1..max_dim {
        for q in 1..=max_dim - p {
            out.push(SoR { p, q });
        }
    }
    for n in 1..=max_dim / 2 {
        out.push(SpR { n });
    }
    for p in 1..max_dim {
        for q in 1..=max_dim - p {
            out.push(Su { p, q });
        }
    }
    out
}

fn combinatorial_sweep(max_dim: u32) -> Vec<AlgebraDescriptor> {
    use AlgebraDescriptor::*;
    let mut out = matrix_sweep(max_dim);
    for n in 1..=max_dim {
        out.push(SlH { n });
        out.push(SoStar { n });
    }
    for p in 1..max_dim {
        for q in 1..=max_dim - p {
            out.push(SpHq { p, q });
        }
    }
    out
}

#[derive(Serialize)]
struct Table1Out {
    family: &'static str,
    condition: &'static str,
    data_checked: usize,
    discrepancies: usize,
}

fn run_table1(max_dim: u32, format: Format) -> Result<(), CliError> {
    let mut outputs = Vec::new();
    for row in orbits::table1_rows() {
        let mut checked = 0;
        let mut discrepancies = 0;
        for alg in combinatorial_sweep(max_dim) {
            if alg.family_name() != row.family {
                continue;
            }
            for d in orbits::enumerate_orbit_data(&alg)? {
                let criterion = orbits::negation_stable(&alg, &d)?.stable;
                checked += 1;
                if row.stable(&d) != criterion {
                    discrepancies += 1;
                }
            }
        }
        outputs.push(Table1Out {
            family: row.family,
            condition: row.condition,
            data_checked: checked,
            discrepancies,
        });
    }
    match format {
        Format::Json | Format::Csv => {
            println!("{}", serde_json::to_string(&outputs).expect("table serialization"));
        }
        Format::Text => {
            println!("Conditions for O = -O (evaluated on all data with ambient dim <= {max_dim}):");
            for o in &outputs {
                println!(
                    "  {:<8} {:<100} checked={:<4} discrepancies={}",
                    o.family, o.condition, o.data_checked, o.discrepancies
                );
            }
        }
    }
    if outputs.iter().any(|o| o.discrepancies > 0) {
        return Err(CliError::Internal(
            "table conditions disagree with the criterion code".to_string(),
        ));
    }
    Ok(())
}

fn run_selftest(max_dim: u32, seed: u64) -> Result<(), CliError> {
    let mut failures = 0usize;
    let mut report = |name: &str, pass: bool, detail: String| {
        println!("{} {name}: {detail}", if pass { "PASS" } else { "FAIL" });
        if !pass {
            failures += 1;
        }
    };

    // Round trip and oracle agreement over the matrix families.
    let mut cases = 0usize;
    let mut round_trip_bad = 0usize;
    let mut agree_bad = 0usize;
    for alg in matrix_sweep(max_dim) {
        for d in orbits::enumerate_orbit_data(&alg)? {
            if d.is_zero_orbit() {
                continue;
            }
            cases += 1;
            let t = engine::build_model(&alg, &d)?;
            if engine::extract_datum(&t)? != d {
                round_trip_bad += 1;
                continue;
            }
            let bundle = engine::decide_negation_matrix(&t)?;
            let comb = orbits::negation_stable(&alg, &d)?;
            if bundle.verdict.stable != comb.stable {
                agree_bad += 1;
            }
        }
    }
    report(
        "round-trip extract(build_model(d)) = d",
        round_trip_bad == 0,
        format!("{cases} data, {round_trip_bad} mismatches"),
    );
    report(
        "matrix oracle agrees with the combinatorial criterion",
        agree_bad == 0,
        format!("{cases} data, {agree_bad} disagreements"),
    );

    // so(p,q) component bookkeeping from explicit matrices.
    let mut comp_cases = 0usize;
    let mut comp_bad = 0usize;
    for alg in matrix_sweep(max_dim) {
        if !matches!(alg, AlgebraDescriptor::SoR { .. }) {
            continue;
        }
        for d in orbits::enumerate_orbit_data(&alg)? {
            if d.is_zero_orbit() {
                continue;
            }
            comp_cases += 1;
            let t = engine::build_model(&alg, &d)?;
            let iso = engine::isotypic_decomposition(&t)?;
            if engine::centralizer_components_matrix(&t, &iso)?
                != orbits::centralizer_components(&d)?
            {
                comp_bad += 1;
            }
        }
    }
    report(
        "so(p,q) centralizer components match the image rules",
        comp_bad == 0,
        format!("{comp_cases} data, {comp_bad} mismatches"),
    );

    // Combinatorial involution consistency across all families.
    let mut inv_cases = 0usize;
    let mut inv_bad = 0usize;
    for alg in combinatorial_sweep(max_dim) {
        for d in orbits::enumerate_orbit_data(&alg)? {
            inv_cases += 1;
            let v = orbits::negation_stable(&alg, &d)?;
            let nv = orbits::negation_stable(&alg, &d.negate(&alg))?;
            if v.stable != nv.stable {
                inv_bad += 1;
            }
        }
    }
    report(
        "negation involution consistency",
        inv_bad == 0,
        format!("{inv_cases} data, {inv_bad} mismatches"),
    );

    // Geometry checks.
    let mut flow_worst = 0.0f64;
    for alg in matrix_sweep(max_dim.min(6)) {
        for d in orbits::enumerate_orbit_data(&alg)? {
            if d.is_zero_orbit() {
                continue;
            }
            let t = engine::build_model(&alg, &d)?;
            if !t.x.is_real() {
                continue;
            }
            for tt in [-2.0, -0.5, 0.5, 1.0, 2.0] {
                let res = gibbs::check_conical_flow(
                    &gibbs::FMat::from_exact(&t.x),
                    &gibbs::FMat::from_exact(&t.h),
                    tt,
                );
                flow_worst = flow_worst.max(res);
            }
        }
    }
    report(
        "conical flow exp(t ad_h) x = e^(2t) x",
        flow_worst < 1e-9,
        format!("worst residual {flow_worst:.3e}"),
    );

    let x = gibbs::FMat::from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
    let y = gibbs::FMat::from_rows(&[&[0.0, 0.0], &[1.0, 0.0]]);
    let h = gibbs::FMat::from_rows(&[&[1.0, 0.0], &[0.0, -1.0]]);
    let chart = gibbs::OrbitChart::new(x.clone(), vec![x, y, h.clone()], 1.0, 2)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let mut homo_worst = 0.0f64;
    for t in [0.5, 2.0, 3.0] {
        homo_worst = homo_worst.max(
            gibbs::check_homogeneity(&chart, t, 128, seed)
                .map_err(|e| CliError::Internal(e.to_string()))?,
        );
    }
    report(
        "homogeneity of omega and lambda",
        homo_worst < 1e-9,
        format!("worst relative error {homo_worst:.3e}"),
    );

    let v1 = gibbs::truncated_cone_volume(1.0, 400, 128, 1.0);
    let mut vol_worst = 0.0f64;
    for r in [2.0, 4.0, 8.0] {
        let ratio = gibbs::truncated_cone_volume(r, 400, 128, 1.0) / (v1 * r);
        vol_worst = vol_worst.max((ratio - 1.0).abs());
    }
    report(
        "truncated cone volume scales like R^d",
        vol_worst < 0.01,
        format!("worst relative deviation {vol_worst:.3e}"),
    );

    let pts = gibbs::sample_sl2_cone(10_000, seed);
    let ok = gibbs::check_divergence_bound(&h, &pts, 1.0);
    report("pointwise convexity bound", ok, format!("{} samples", pts.len()));

    if failures > 0 {
        return Err(CliError::Internal(format!("{failures} selftest check(s) failed")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate { alg, format } => {
            let alg = parse_algebra(&alg)?;
            let rows = report::enumerate_rows(alg)?;
            emit_rows(&rows, format);
            Ok(())
        }
        Command::Classify { alg, datum, format } => {
            let alg = parse_algebra(&alg)?;
            let datum = read_datum_arg(&datum)?;
            validate_datum(&alg, &datum)?;
            let row = OrbitRow::new(alg, datum)?;
            emit_rows(&[row], format);
            Ok(())
        }
        Command::MatrixCheck { input, format } => run_matrix_check(&input, format),
        Command::Table1 { max_dim, format } => {
            if max_dim < 1 {
                return Err(CliError::User("--max-dim must be at least 1".to_string()));
            }
            run_table1(max_dim, format)
        }
        Command::Selftest { max_dim, seed } => {
            if max_dim < 1 {
                return Err(CliError::User("--max-dim must be at least 1".to_string()));
            }
            run_selftest(max_dim, seed)
        }
    }
}
