//! Figure data: one [`Table`] per scenario.
//!
//! Grid points are evaluated in parallel and collected in grid order, so the
//! output does not depend on the thread count.

use bispinor_core::dirac::BoostParams;
use bispinor_core::measures::{mean_negativities, negativity};
use bispinor_core::scenarios::{apply_boost, particle_linear_entropy, particle_partition, BoostFamily, NegativitySet};
use bispinor_core::superposition::{
    boost_superposed, build_superposed, project_positive_parity, rapidities_for_wigner_angle, trace_out_parity,
    SpinMomentumNegativities, WignerParams,
};
use rayon::prelude::*;

use crate::config::{Scenario, ScenarioConfig};
use crate::error::Result;
use crate::table::Table;

pub const NEGATIVITY_COLUMNS: [&str; 9] = [
    "neg_S1_rest",
    "neg_S2_rest",
    "neg_P1_rest",
    "neg_P2_rest",
    "neg_S1_S2",
    "neg_P1P2_S1S2",
    "neg_P1_P2",
    "neg_P1S1_P2S2",
    "linear_entropy",
];

/// Output of a scenario run.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutput {
    pub table: Table,
    /// Rapidities used by `eggtray`.
    pub wigner: Option<WignerParams>,
}

fn collect_rows(points: &[f64], f: impl Fn(f64) -> Result<Vec<f64>> + Sync) -> Result<Vec<Vec<f64>>> {
    points
        .par_iter()
        .map(|&x| {
            f(x).map(|mut r| {
                r.insert(0, x);
                r
            })
        })
        .collect()
}

fn fill(header: Vec<String>, rows: Vec<Vec<f64>>) -> Table {
    let mut t = Table::new(header);
    for r in rows {
        t.push(r);
    }
    t
}

fn with_first<'a>(first: &'a str, rest: impl IntoIterator<Item = &'a str>) -> Vec<String> {
    std::iter::once(first).chain(rest).map(String::from).collect()
}

pub fn run(config: &ScenarioConfig) -> Result<SweepOutput> {
    let table = match config.scenario {
        Scenario::Fig1MeanVsTheta => mean_vs_theta(config)?,
        Scenario::ParallelNegativities => negativities_vs_omega(config, BoostFamily::Parallel)?,
        Scenario::PerpNegativities => negativities_vs_omega(config, BoostFamily::Perpendicular)?,
        Scenario::ParallelDeltaMeans => delta_means(config, BoostFamily::Parallel)?,
        Scenario::PerpDeltaMeans => delta_means(config, BoostFamily::Perpendicular)?,
        Scenario::Eggtray => {
            let wigner = rapidities_for_wigner_angle(config.delta)?;
            return Ok(SweepOutput { table: eggtray(config, &wigner)?, wigner: Some(wigner) });
        }
        Scenario::SpinspinProjectionVsTrace => spinspin(config)?,
    };
    Ok(SweepOutput { table, wigner: None })
}

/// Mean negativities of the unboosted centre-of-momentum state against θ.
fn mean_vs_theta(config: &ScenarioConfig) -> Result<Table> {
    let rows = collect_rows(&config.theta_grid.points(), |theta| {
        let st = BoostFamily::Perpendicular.initial_state(config.mass, config.xi0, theta)?;
        Ok(mean_negativities(st.psi())?.as_array().to_vec())
    })?;
    Ok(fill(with_first("theta", ["N1", "N2", "N3", "N4"]), rows))
}

fn negativities_vs_omega(config: &ScenarioConfig, family: BoostFamily) -> Result<Table> {
    let initial = family.initial_state(config.mass, config.xi0, config.theta)?;
    let rows = collect_rows(&config.omega_grid.points(), |omega| {
        let boosted = apply_boost(&initial, &family.boost(omega));
        let mut row = NegativitySet::measure(boosted.psi())?.as_array().to_vec();
        row.push(negativity(boosted.psi(), &particle_partition())?);
        row.push(particle_linear_entropy(boosted.psi())?);
        Ok(row)
    })?;
    Ok(fill(with_first("omega", NEGATIVITY_COLUMNS), rows))
}

fn delta_means(config: &ScenarioConfig, family: BoostFamily) -> Result<Table> {
    let initial = family.initial_state(config.mass, config.xi0, config.theta)?;
    let base = mean_negativities(initial.psi())?;
    let rows = collect_rows(&config.omega_grid.points(), |omega| {
        let boosted = apply_boost(&initial, &family.boost(omega));
        Ok(mean_negativities(boosted.psi())?.difference(&base).to_vec())
    })?;
    Ok(fill(with_first("omega", ["dN1", "dN2", "dN3", "dN4"]), rows))
}

/// Long format `(alpha, theta, values)` over both superposition angles.
fn eggtray(config: &ScenarioConfig, wigner: &WignerParams) -> Result<Table> {
    let thetas = config.theta_grid.points();
    let pairs: Vec<(f64, f64)> =
        config.alpha_grid.points().into_iter().flat_map(|a| thetas.iter().map(move |&t| (a, t))).collect();
    let b = BoostParams::along_x(wigner.omega);
    let rows: Result<Vec<Vec<f64>>> = pairs
        .par_iter()
        .map(|&(alpha, theta)| {
            let st = boost_superposed(&build_superposed(config.mass, wigner.xi0, alpha, theta)?, &b);
            let n = SpinMomentumNegativities::measure(&project_positive_parity(&st)?)?;
            Ok(vec![alpha, theta, n.s1_rest, n.spin_momentum])
        })
        .collect();
    Ok(fill(["alpha", "theta", "neg_S1_p1S2p2_projected", "neg_S1S2_p1p2_projected"].map(String::from).to_vec(), rows?))
}

/// Spin-spin and spin-momentum negativities of the superposed state under a
/// perpendicular boost, by projection and by tracing out parity.
fn spinspin(config: &ScenarioConfig) -> Result<Table> {
    let initial = build_superposed(config.mass, config.xi0, config.alpha, config.theta)?;
    let rows = collect_rows(&config.omega_grid.points(), |omega| {
        let st = boost_superposed(&initial, &BoostParams::along_x(omega));
        let projected = SpinMomentumNegativities::measure(&project_positive_parity(&st)?)?;
        let traced = SpinMomentumNegativities::measure(&trace_out_parity(&st))?;
        Ok(vec![projected.spin_spin, traced.spin_spin, projected.spin_momentum, traced.spin_momentum])
    })?;
    Ok(fill(
        with_first(
            "omega",
            ["neg_S1_S2_projected", "neg_S1_S2_traced", "neg_S1S2_p1p2_projected", "neg_S1S2_p1p2_traced"],
        ),
        rows,
    ))
}
