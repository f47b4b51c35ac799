//! Checks that particle paths are near-geodesic in the congested metric and that
//! their endpoint pairing is near-optimal.

use congested_transport::dual::{self, SolverParams};
use congested_transport::fieldcalc::{Grid, ScalarField};
use congested_transport::flow::{build_velocity, integrate, sample_from_density};
use congested_transport::model::CongestionModel;
use congested_transport::scenario::{difference, floor_and_normalise};
use congested_transport::wardrop::{equilibrium_ratios, flux_intensity, monge_gap, weight_field};

fn main() -> congested_transport::Result<()> {
    let g = Grid::unit_square(33)?;
    let blob = |c: [f64; 2]| {
        ScalarField::from_fn(g, move |x| {
            (-((x[0] - c[0]).powi(2) + (x[1] - c[1]).powi(2)) / 0.02).exp()
        })
    };
    let mu0 = floor_and_normalise(&blob([0.3, 0.35]), 1e-3)?;
    let mu1 = floor_and_normalise(&blob([0.7, 0.65]), 1e-3)?;
    let model = CongestionModel::constant(1.0, 1.0, 1.5)?;
    let sol = dual::solve(&model, &difference(&mu0, &mu1)?, &SolverParams::default())?;

    let velocity = build_velocity(&sol.sigma, &mu0, &mu1)?;
    let traj = integrate(&velocity, &sample_from_density(&mu0, 2_000, 3)?, 32)?;
    let w = weight_field(&model, &flux_intensity(&sol.sigma))?.refined(2)?;

    let stats = equilibrium_ratios(&traj, &w, 100)?;
    println!(
        "path cost / geodesic distance over {} paths: median {:.4}, p95 {:.4}, max {:.4}",
        stats.sampled - stats.skipped,
        stats.median.unwrap_or(f64::NAN),
        stats.p95.unwrap_or(f64::NAN),
        stats.max.unwrap_or(f64::NAN)
    );
    let monge = monge_gap(&traj, &w, 16)?;
    println!(
        "coupling cost {:.5}, optimal {:.5}, relative gap {:.2e}",
        monge.coupling_cost, monge.optimal_cost, monge.gap
    );
    Ok(())
}
