//! Pushes particles along the flux and compares their density with the
//! interpolated marginals.

use congested_transport::dual::{self, SolverParams};
use congested_transport::fieldcalc::{Grid, ScalarField};
use congested_transport::flow::{
    build_velocity, compressibility_diagnostic, integrate, pushforward_error, sample_from_density,
};
use congested_transport::model::CongestionModel;
use congested_transport::scenario::{difference, floor_and_normalise};

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
    let starts = sample_from_density(&mu0, 20_000, 7)?;
    let traj = integrate(&velocity, &starts, 32)?;
    for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
        println!("t = {t:<4} L1 error {:.4}", pushforward_error(&traj, t, &mu0, &mu1)?);
    }
    let c = compressibility_diagnostic(&traj, &velocity)?;
    println!("int sup|div v| dt = {:.3}, max |ln(rho/mu1)| = {:.3}", c.a_one, c.log_ratio);
    Ok(())
}
