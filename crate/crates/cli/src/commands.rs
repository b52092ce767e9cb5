use std::path::Path;

use serde_json::json;

use qir_core::config::{parse_config_over, CampaignConfig};
use qir_core::explore::{
    minimize_slack, monitoring_sweep, parse_grid, run_campaign, run_campaign_with_workers, Argmin,
    MinimizeOptions,
};
use qir_core::relations::{Evaluation, Relation, Report};
use qir_core::states::{self, BipartiteState, ObservableBasis};
use qir_core::tokens::{parse_basis, parse_state};

use crate::output::{
    fixed, manifest_for, to_json, with_manifest, write_atomic, Csv, RunManifest, Unit,
};
use crate::CliError;

/// ε used for the monitored bound in `saturate`.
const SATURATE_EPS: f64 = 0.5;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn from_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Token, or a JSON file if `arg` names an existing file.
fn load_state(arg: &str) -> Result<BipartiteState, CliError> {
    let p = Path::new(arg);
    if p.is_file() {
        from_json(p)
    } else {
        Ok(parse_state(arg)?)
    }
}

fn load_basis(arg: &str) -> Result<ObservableBasis, CliError> {
    let p = Path::new(arg);
    if p.is_file() {
        from_json(p)
    } else {
        Ok(parse_basis(arg)?)
    }
}

fn report_line(r: &Report, unit: Unit) -> String {
    match r {
        Report::Inequality(i) => format!(
            "  {:<40} lhs {:>13}  rhs {:>13}  slack {:>13}  {}",
            i.name,
            unit.show(i.lhs),
            unit.show(i.rhs),
            unit.show(i.slack),
            if i.satisfied { "ok" } else { "VIOLATED" }
        ),
        Report::Identity(i) => format!(
            "  {:<40} residual {:>13}  {}",
            i.name,
            unit.show(i.residual),
            if i.holds { "ok" } else { "VIOLATED" }
        ),
    }
}

pub fn saturate(d: usize, tol: f64, unit: Unit) -> Result<(), CliError> {
    if d < 2 {
        return Err(CliError::Usage(format!("--d must be at least 2, got {d}")));
    }
    let x = states::computational_basis(d)?;
    let y = states::fourier_basis(d)?;
    let cases = [
        ("max_entangled", states::max_entangled(d)?),
        ("max_mixed", states::max_mixed(d, d)?),
    ];
    println!(
        "d = {d}, X = comp:{d}, Y = fourier:{d}, entropies in {}",
        unit.name()
    );
    println!(
        "{:<14} {:>13} {:>13} {:>13} {:>13} {:>13} {:>13} {:>13} {:>13} {:>13}",
        "case", "H(AB)", "H(B)", "H(A|B)", "H(X|B)", "H(Y|B)", "Im(X)", "Im(Y)", "q", "eq11_slack"
    );
    let mut evals = Vec::new();
    for (name, state) in &cases {
        let e = Evaluation::compute(&x, &y, state, Some(SATURATE_EPS))?;
        let row = [
            e.h_ab,
            e.h_b,
            e.cond_entropy(),
            e.uncertainty_x(),
            e.uncertainty_y(),
            e.irreality_x(),
            e.irreality_y(),
            e.q,
            e.combined_ur(tol).slack,
        ];
        let cells: Vec<String> = row
            .iter()
            .map(|&v| format!("{:>13}", unit.show(v)))
            .collect();
        println!("{name:<14} {}", cells.join(" "));
        evals.push((*name, e));
    }
    let mut failures = Vec::new();
    for (name, e) in &evals {
        println!("\n{name} (monitor eps = {SATURATE_EPS}):");
        for rel in Relation::ALL {
            for r in e.reports(rel, tol) {
                println!("{}", report_line(&r, unit));
                if !r.passed() {
                    failures.push(format!("{name}: {}", r.name()));
                }
            }
        }
        let slack = e.combined_ur(tol).slack;
        if slack.abs() > tol {
            failures.push(format!(
                "{name}: combined_ur not saturated (slack {})",
                fixed(slack)
            ));
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Tolerance(failures.join("; ")))
    }
}

pub fn verify(
    config: &Path,
    out: &Path,
    workers: Option<usize>,
    tol: f64,
    unit: Unit,
) -> Result<(), CliError> {
    let base = CampaignConfig {
        tol,
        ..Default::default()
    };
    let cfg = parse_config_over(&read(config)?, base)
        .map_err(|e| CliError::Usage(format!("{}: {e}", config.display())))?;
    let manifest = RunManifest::start(
        "verify",
        serde_json::to_value(&cfg).unwrap_or_default(),
        Some(cfg.seed),
    );
    let res = match workers {
        Some(w) => run_campaign_with_workers(&cfg, w)?,
        None => run_campaign(&cfg)?,
    };

    let manifest_path = out.join("manifest.json");
    let json_path = out.join("campaign.json");
    let csv_path = out.join("slacks.csv");
    write_atomic(&json_path, &to_json(&with_manifest(&res, &manifest_path)?)?)?;

    let mut header = vec!["trial", "dA", "dB", "ensemble", "eps"];
    header.extend(cfg.relations.iter().map(|r| r.name()));
    let mut csv = Csv::new(&header);
    for rec in &res.records {
        let t = &rec.descriptor;
        let mut cells = vec![
            t.trial.to_string(),
            t.d_a.to_string(),
            t.d_b.to_string(),
            t.ensemble.to_string(),
            fixed(rec.eps),
        ];
        cells.extend(rec.slacks.iter().map(|&s| fixed(s)));
        csv.row(&cells);
    }
    write_atomic(&csv_path, &csv.into_bytes())?;
    manifest.finish(&manifest_path, &[&json_path, &csv_path])?;

    println!(
        "{} trials, seed {}, tol {:e}, slacks in {}",
        res.total_trials,
        cfg.seed,
        cfg.tol,
        unit.name()
    );
    println!(
        "{:<16} {:>15} {:>10} {:>8}",
        "relation", "min_slack", "violations", "argmin"
    );
    for s in &res.relations {
        println!(
            "{:<16} {:>15} {:>10} {:>8}",
            s.relation.name(),
            unit.show(s.min_slack),
            s.violations,
            s.argmin.trial
        );
    }
    println!(
        "wrote {}, {}, {}",
        json_path.display(),
        csv_path.display(),
        manifest_path.display()
    );
    let v = res.total_violations();
    if v == 0 {
        Ok(())
    } else {
        Err(CliError::Tolerance(format!("{v} violations")))
    }
}

pub fn verify_point(path: &Path, tol: f64, unit: Unit) -> Result<(), CliError> {
    let argmin: Argmin = from_json(path)?;
    let replayed = argmin.replay()?;
    let gap = (replayed - argmin.slack).abs();
    println!("relation      {}", argmin.relation.name());
    println!("dims          {}x{}", argmin.d_a, argmin.d_b);
    println!("stored slack  {}", unit.show(argmin.slack));
    println!("replayed      {}", unit.show(replayed));
    println!("difference    {:e}", gap);
    if gap > tol {
        return Err(CliError::Tolerance(format!(
            "replay differs from stored slack by {gap:e}"
        )));
    }
    if !(replayed >= -tol) {
        return Err(CliError::Tolerance(format!(
            "{} slack {} below -{tol:e}",
            argmin.relation.name(),
            fixed(replayed)
        )));
    }
    Ok(())
}

pub fn sweep(
    state: &str,
    x: &str,
    y: &str,
    grid: &str,
    out: &Path,
    unit: Unit,
) -> Result<(), CliError> {
    let rho = load_state(state)?;
    let xb = load_basis(x)?;
    let yb = load_basis(y)?;
    let eps = parse_grid(grid)?;
    let manifest = RunManifest::start(
        "sweep",
        json!({ "state": state, "x": x, "y": y, "grid": grid }),
        None,
    );
    let trace = monitoring_sweep(&xb, &yb, &rho, &eps)?;

    let mut csv = Csv::new(&["eps", "irreality_x", "uncertainty_y", "q", "bound_slack"]);
    let slack = trace.bound_slack();
    for (k, s) in slack.iter().enumerate() {
        csv.row(&[
            fixed(trace.eps_grid[k]),
            fixed(trace.irreality_x[k]),
            fixed(trace.uncertainty_y[k]),
            fixed(trace.bound_q),
            fixed(*s),
        ]);
    }
    write_atomic(out, &csv.into_bytes())?;
    let manifest_path = manifest_for(out);
    manifest.finish(&manifest_path, &[out])?;

    println!(
        "{:>13} {:>13} {:>13} {:>13}",
        "eps", "Im(X)", "H(Y|B)", "bound_slack"
    );
    for (k, s) in slack.iter().enumerate() {
        println!(
            "{:>13} {:>13} {:>13} {:>13}",
            fixed(trace.eps_grid[k]),
            unit.show(trace.irreality_x[k]),
            unit.show(trace.uncertainty_y[k]),
            unit.show(*s)
        );
    }
    println!("q = {} {}", unit.show(trace.bound_q), unit.name());
    if !trace.monotone {
        println!(
            "note: irreality of X increases along this path (X and Y dephasings do not commute)"
        );
    }
    println!("wrote {}, {}", out.display(), manifest_path.display());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn minimize(
    relation: &str,
    d_a: usize,
    d_b: usize,
    restarts: usize,
    seed: u64,
    out: &Path,
    tol: f64,
    unit: Unit,
) -> Result<(), CliError> {
    let rel: Relation = relation.parse()?;
    if restarts < 1 {
        return Err(CliError::Usage("--restarts must be at least 1".into()));
    }
    let manifest = RunManifest::start(
        "minimize",
        json!({ "relation": rel.name(), "dA": d_a, "dB": d_b, "restarts": restarts, "seed": seed, "tol": tol }),
        Some(seed),
    );
    let opts = MinimizeOptions {
        restarts,
        seed,
        tol,
        ..Default::default()
    };
    let m = minimize_slack(rel, d_a, d_b, &opts)?;
    let manifest_path = manifest_for(out);
    write_atomic(out, &to_json(&with_manifest(&m.argmin, &manifest_path)?)?)?;
    manifest.finish(&manifest_path, &[out])?;

    println!("relation     {} ({})", rel.name(), rel.alias());
    println!("dims         {d_a}x{d_b}");
    println!("restarts     {restarts} (seed {seed})");
    println!("evaluations  {}", m.evaluations);
    println!("bestSlack    {} {}", unit.show(m.best_slack), unit.name());
    println!("wrote {}, {}", out.display(), manifest_path.display());
    Ok(())
}
