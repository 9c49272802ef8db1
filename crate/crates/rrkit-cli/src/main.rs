//! rrkit command line: compute rate regions, run verification suites, and
//! emit figure data as CSV.
//!
//! Exit codes: 0 success (verify: PASS), 1 verify FAIL, 2 usage or input
//! validation errors, 3 numeric or I/O failures. All output is
//! deterministic for fixed flags; CSV carries 12 significant digits and
//! JSON verdicts print with sorted keys.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rrkit::bsscbsc::{self, BsscBscChannel, Regime};
use rrkit::codebook::{self, Branch};
use rrkit::dmc::ChannelTriple;
use rrkit::inequality;
use rrkit::region::{max_vertical_gap, symmetric_vertical_gap, RateRegion};
use rrkit::{bounds, Error};

#[derive(Parser)]
#[command(name = "rrkit", version, about = "Rate-region toolkit for 3-receiver broadcast channels")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a rate region and write its boundary as CSV.
    Region(RegionArgs),
    /// Run a verification check and print a JSON verdict.
    Verify {
        #[command(subcommand)]
        check: VerifyCmd,
    },
    /// Emit figure data (CSV curves plus a JSON summary).
    Figure {
        #[command(subcommand)]
        figure: FigureCmd,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundKind {
    /// Generic inner bound by auxiliary grid search.
    Inner,
    /// Inner approximation of the two-auxiliary outer bound.
    OuterApprox,
    /// Revised single-auxiliary outer bound (bsscbsc only).
    Bound3,
    /// Closed-form capacity region (bsscbsc only).
    Capacity,
    /// The two-auxiliary witness family (bsscbsc only).
    RegionA,
    /// Closed-form region for a deterministic Y3 branch.
    DetY3,
}

#[derive(Args)]
struct RegionArgs {
    /// `bsscbsc` or a path to a channel-triple JSON document.
    #[arg(long)]
    channel: String,
    /// BSC crossover probability (bsscbsc channels).
    #[arg(long)]
    p: Option<f64>,
    /// Which bound to evaluate.
    #[arg(long, value_enum)]
    bound: BoundKind,
    /// Grid resolution (defaults: 101 for grid sweeps, 513 for closed forms).
    #[arg(long)]
    grid: Option<usize>,
    /// Auxiliary cardinality for the grid sweeps.
    #[arg(long, default_value_t = 3)]
    aux_card: usize,
    /// Add the optional R0 <= min(I(U1;Y1), I(U2;Y2)) constraint to the
    /// outer sweep and report the empirical gap against the plain variant.
    #[arg(long)]
    remark_constraint: bool,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Threshold where the common branch stops out-carrying the skew pair.
    Pmax,
    /// Threshold where the sum-rate cap stops binding, with the boundary
    /// slope check.
    Po,
    /// Monotonicity of the derivative ratio f'/g' on a grid.
    Claim1 {
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 2001)]
        grid: usize,
    },
    /// Randomized two-point interpolation inequality suite.
    Lemma1 {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Single crossover; defaults to the suite {1/6, 1/4, 2/5}.
        #[arg(long)]
        p: Option<f64>,
    },
    /// Randomized finite-mixture inequality suite.
    Corollary1 {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        p: Option<f64>,
    },
    /// Midpoint convexity of the entropy-interpolation composition.
    Gerber {
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1001)]
        grid: usize,
    },
    /// Grid check of the appendix derivative comparison S(x) <= R(x).
    Appendix {
        #[arg(long, default_value_t = 2001)]
        grid: usize,
        /// Optional CSV dump of (x, R, S).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Revised outer bound against the closed-form capacity region.
    Bound3 {
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 201)]
        grid: usize,
        #[arg(long, default_value_t = 3)]
        aux_card: usize,
    },
    /// Flip-symmetry of the doubled-codebook auxiliary identifications.
    Symmetry {
        /// Base codebook JSON; mutually exclusive with --random.
        #[arg(long, conflicts_with = "random")]
        codebook: Option<PathBuf>,
        /// Generate a random base codebook instead.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Crossover for the common branch (and default ML decoders).
        #[arg(long, default_value_t = 0.25)]
        p: f64,
    },
}

#[derive(Subcommand)]
enum FigureCmd {
    /// Inner bound vs the witness family on an aligned grid.
    Fig2 {
        #[arg(long, default_value_t = 0.25)]
        p: f64,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// The appendix derivative comparison table (x, R, S).
    Fig3 {
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("RRKIT_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 3 })
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.cmd {
        Command::Region(args) => region_cmd(args).map(|_| true),
        Command::Verify { check } => verify_cmd(check),
        Command::Figure { figure } => figure_cmd(figure).map(|_| true),
    }
}

fn print_verdict(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("verdict serialization"));
}

fn region_csv(region: &RateRegion) -> Vec<u8> {
    let mut buf = Vec::new();
    region.write_csv(&mut buf).expect("in-memory write");
    buf
}

fn load_triple(path: &str) -> Result<ChannelTriple, Error> {
    let text = std::fs::read_to_string(path)?;
    ChannelTriple::from_json_str(&text)
}

fn region_cmd(args: RegionArgs) -> Result<(), Error> {
    let bsscbsc_channel = args.channel == "bsscbsc";
    let grid_sweep_default = 101;
    let closed_form_default = 513;

    let mut doc = serde_json::Map::new();
    doc.insert("channel".into(), json!(args.channel));

    let (region, regime): (RateRegion, Option<Regime>) = if bsscbsc_channel {
        let p = args.p.ok_or_else(|| Error::Domain("--channel bsscbsc requires --p".into()))?;
        let ch = BsscBscChannel::new(p)?;
        doc.insert("p".into(), json!(p));
        match args.bound {
            BoundKind::Inner => {
                let g = args.grid.unwrap_or(grid_sweep_default);
                (bounds::inner_bound(&ch.triple(), args.aux_card, g)?, Some(Regime::classify(p)))
            }
            BoundKind::OuterApprox => {
                let g = args.grid.unwrap_or(grid_sweep_default);
                let plain = bounds::outer_bound_inner_approx(&ch.triple(), args.aux_card, g)?;
                if args.remark_constraint {
                    let constrained =
                        bounds::outer_bound_inner_approx_constrained(&ch.triple(), args.aux_card, g)?;
                    doc.insert(
                        "remark_constraint_gap".into(),
                        json!(symmetric_vertical_gap(&plain, &constrained)),
                    );
                    (constrained, None)
                } else {
                    (plain, None)
                }
            }
            BoundKind::Bound3 => {
                let g = args.grid.unwrap_or(grid_sweep_default);
                (bsscbsc::bound3_region(p, args.aux_card, g)?, None)
            }
            BoundKind::Capacity => {
                let g = args.grid.unwrap_or(closed_form_default);
                let (r, regime) = bsscbsc::capacity_region(p, g)?;
                (r, Some(regime))
            }
            BoundKind::RegionA => {
                let g = args.grid.unwrap_or(closed_form_default);
                (bsscbsc::region_a(p, g)?, None)
            }
            BoundKind::DetY3 => (bounds::deterministic_y3_region(&ch.triple())?, None),
        }
    } else {
        let triple = load_triple(&args.channel)?;
        if let Some(p) = args.p {
            doc.insert("p".into(), json!(p));
        }
        match args.bound {
            BoundKind::Inner => {
                let g = args.grid.unwrap_or(grid_sweep_default);
                (bounds::inner_bound(&triple, args.aux_card, g)?, None)
            }
            BoundKind::OuterApprox => {
                let g = args.grid.unwrap_or(grid_sweep_default);
                let plain = bounds::outer_bound_inner_approx(&triple, args.aux_card, g)?;
                if args.remark_constraint {
                    let constrained =
                        bounds::outer_bound_inner_approx_constrained(&triple, args.aux_card, g)?;
                    doc.insert(
                        "remark_constraint_gap".into(),
                        json!(symmetric_vertical_gap(&plain, &constrained)),
                    );
                    (constrained, None)
                } else {
                    (plain, None)
                }
            }
            BoundKind::DetY3 => (bounds::deterministic_y3_region(&triple)?, None),
            _ => {
                return Err(Error::Domain(
                    "--bound bound3/capacity/region-a require --channel bsscbsc".into(),
                ))
            }
        }
    };

    let csv = region_csv(&region);
    std::fs::write(&args.out, csv)?;

    if let Some(regime) = regime {
        doc.insert("regime".into(), json!(regime.label()));
    }
    let sum_max = region
        .boundary()
        .iter()
        .map(|v| v.r0 + v.r1)
        .fold(f64::NEG_INFINITY, f64::max);
    doc.insert("r0_max".into(), json!(region.r0_max()));
    doc.insert("r1_intercept".into(), json!(region.r1_max()));
    doc.insert("sum_rate_max".into(), json!(sum_max));
    doc.insert("vertices".into(), json!(region.boundary().len()));
    doc.insert("out".into(), json!(args.out.display().to_string()));
    print_verdict(&Value::Object(doc));
    Ok(())
}

fn verify_cmd(check: VerifyCmd) -> Result<bool, Error> {
    match check {
        VerifyCmd::Pmax => {
            let pm = bsscbsc::p_max();
            let residual = (1.0 - rrkit::entropy::binary_entropy(pm)) - bsscbsc::sum_rate_cap();
            let pass = residual.abs() <= 1e-12 && (pm - 0.184).abs() <= 1e-3;
            print_verdict(&json!({
                "check": "pmax",
                "p_max": pm,
                "residual": residual,
                "pass": pass,
            }));
            Ok(pass)
        }
        VerifyCmd::Po => {
            let po = bsscbsc::p_o();
            let slope = bsscbsc::boundary_slope_limit(po)?;
            let pass = (slope + 1.0).abs() <= 1e-4;
            print_verdict(&json!({
                "check": "po",
                "p_o": po,
                "slope_at_po": slope,
                "slope_error": (slope + 1.0).abs(),
                "pass": pass,
            }));
            Ok(pass)
        }
        VerifyCmd::Claim1 { p, grid } => {
            let v = inequality::claim1_ratio_decreasing(p, grid)?;
            print_verdict(&json!({
                "check": "claim1",
                "p": p,
                "grid": grid,
                "max_increase": v.extremum,
                "at_x": v.at,
                "pass": v.pass,
            }));
            Ok(v.pass)
        }
        VerifyCmd::Lemma1 { trials, seed, p } => {
            let ps = p.map_or_else(|| vec![1.0 / 6.0, 0.25, 0.4], |v| vec![v]);
            let mut min_slack = f64::INFINITY;
            for &pv in &ps {
                min_slack = min_slack.min(inequality::lemma1_random_suite(pv, trials, seed)?.min_slack);
            }
            let pass = min_slack >= -1e-10;
            print_verdict(&json!({
                "check": "lemma1",
                "trials": trials,
                "seed": seed,
                "p_values": ps,
                "min_slack": min_slack,
                "pass": pass,
            }));
            Ok(pass)
        }
        VerifyCmd::Corollary1 { trials, seed, p } => {
            let ps = p.map_or_else(|| vec![1.0 / 6.0, 0.25, 0.4], |v| vec![v]);
            let mut min_slack = f64::INFINITY;
            for &pv in &ps {
                min_slack =
                    min_slack.min(inequality::corollary1_random_suite(pv, trials, seed)?.min_slack);
            }
            let pass = min_slack >= -1e-10;
            print_verdict(&json!({
                "check": "corollary1",
                "trials": trials,
                "seed": seed,
                "p_values": ps,
                "min_slack": min_slack,
                "pass": pass,
            }));
            Ok(pass)
        }
        VerifyCmd::Gerber { p, grid } => {
            let v = inequality::mrs_gerber_convexity(p, grid)?;
            print_verdict(&json!({
                "check": "gerber",
                "p": p,
                "grid": grid,
                "min_second_difference": v.extremum,
                "at_y": v.at,
                "pass": v.pass,
            }));
            Ok(v.pass)
        }
        VerifyCmd::Appendix { grid, out } => {
            let v = inequality::appendix_check(grid);
            if let Some(path) = &out {
                std::fs::write(path, appendix_csv(grid))?;
            }
            let mut doc = serde_json::Map::new();
            doc.insert("check".into(), json!("appendix"));
            doc.insert("grid".into(), json!(grid));
            doc.insert("min_gap".into(), json!(v.extremum));
            doc.insert("at_x".into(), json!(v.at));
            doc.insert("pass".into(), json!(v.pass));
            if let Some(path) = &out {
                doc.insert("out".into(), json!(path.display().to_string()));
            }
            print_verdict(&Value::Object(doc));
            Ok(v.pass)
        }
        VerifyCmd::Bound3 { p, grid, aux_card } => {
            let b3 = bsscbsc::bound3_region(p, aux_card, grid)?;
            let (cap, regime) = bsscbsc::capacity_region(p, 513)?;
            let gap = symmetric_vertical_gap(&b3, &cap);
            let pass = gap <= 2e-3;
            print_verdict(&json!({
                "check": "bound3",
                "p": p,
                "grid": grid,
                "aux_card": aux_card,
                "regime": regime.label(),
                "gap_bound3_capacity": gap,
                "pass": pass,
            }));
            Ok(pass)
        }
        VerifyCmd::Symmetry { codebook: path, random, n, seed, p } => {
            let base = match (path, random) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(path)?;
                    codebook::load_codebook(&text, p)?
                }
                (None, true) => codebook::random_codebook(n, 2, 2, p, seed)?,
                (None, false) => {
                    return Err(Error::Domain("pass --codebook <json> or --random".into()))
                }
            };
            let doubled = codebook::symmetrize_codebook(&base)?;
            let sym = codebook::SymmetricCodebook::new(doubled)?;
            let mut max_dev = 0.0f64;
            let mut max_mi_dev = 0.0f64;
            for i in 1..=sym.n() {
                let d1 = codebook::aux_distribution(&sym, i, p, Branch::Y1)?;
                let d2 = codebook::aux_distribution(&sym, i, p, Branch::Y2)?;
                max_dev = max_dev.max(codebook::relabel_deviation(&d1, &d2)?);
                let y3 = (d1.aux_y3_mutual_information(p) - d2.aux_y3_mutual_information(p)).abs();
                let cross1 = (d1.conditional_mi_to_receiver(codebook::Receiver::Y1)
                    - d2.conditional_mi_to_receiver(codebook::Receiver::Y2))
                .abs();
                let cross2 = (d1.conditional_mi_to_receiver(codebook::Receiver::Y2)
                    - d2.conditional_mi_to_receiver(codebook::Receiver::Y1))
                .abs();
                max_mi_dev = max_mi_dev.max(y3).max(cross1).max(cross2);
            }
            let pass = max_dev <= 1e-12 && max_mi_dev <= 1e-12;
            print_verdict(&json!({
                "check": "symmetry",
                "n": sym.n(),
                "seed": seed,
                "p": p,
                "max_relabel_deviation": max_dev,
                "max_mi_deviation": max_mi_dev,
                "pass": pass,
            }));
            Ok(pass)
        }
    }
}

fn appendix_csv(grid: usize) -> String {
    let mut s = String::from("x,R,S\n");
    for row in inequality::appendix_table(grid) {
        let _ = writeln!(s, "{:.11e},{:.11e},{:.11e}", row.x, row.r, row.s);
    }
    s
}

fn figure_cmd(figure: FigureCmd) -> Result<(), Error> {
    match figure {
        FigureCmd::Fig2 { p, out_dir } => {
            let (inner, regime) = bsscbsc::capacity_region(p, 2049)?;
            let ra = bsscbsc::region_a(p, 2049)?;
            let (gap, at) = max_vertical_gap(&inner, &ra);
            let mut grid: Vec<f64> = inner
                .boundary()
                .iter()
                .chain(ra.boundary().iter())
                .map(|v| v.r0)
                .collect();
            grid.push(0.0);
            grid.sort_by(f64::total_cmp);
            grid.dedup();
            let mut csv = String::from("R0,R1_inner,R1_region_a\n");
            for &r0 in &grid {
                let _ = writeln!(
                    csv,
                    "{:.11e},{:.11e},{:.11e}",
                    r0,
                    inner.height_at(r0),
                    ra.height_at(r0)
                );
            }
            let path = out_dir.join("fig2.csv");
            std::fs::write(&path, csv)?;
            print_verdict(&json!({
                "figure": "fig2",
                "p": p,
                "regime": regime.label(),
                "gap_inner_region_a": gap,
                "r0_at_gap": at,
                "out": path.display().to_string(),
            }));
            Ok(())
        }
        FigureCmd::Fig3 { out_dir } => {
            let grid = 2001;
            let v = inequality::appendix_check(grid);
            let path = out_dir.join("fig3.csv");
            std::fs::write(&path, appendix_csv(grid))?;
            print_verdict(&json!({
                "figure": "fig3",
                "grid": grid,
                "min_gap": v.extremum,
                "at_x": v.at,
                "pass": v.pass,
                "out": path.display().to_string(),
            }));
            Ok(())
        }
    }
}
