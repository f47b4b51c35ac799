//! Solves a strip problem whose optimal flux is known in closed form.

use congested_transport::dual::{self, SolverParams};
use congested_transport::fieldcalc::{Grid, ScalarField};
use congested_transport::model::CongestionModel;

fn main() -> congested_transport::Result<()> {
    let g = Grid::new(129, 3, [0.0, 0.0], [1.0, 1.0])?;
    // mass moves from the left half to the right half
    let f = ScalarField::from_fn(g, |x| if x[0] < 0.5 { 1.0 } else { -1.0 });
    let f = f.map(|v| v - f.weighted_mean());
    let model = CongestionModel::constant(1.0, 0.5, 1.5)?;
    let params = SolverParams {
        gradient_tolerance: 1e-9,
        ..SolverParams::default()
    };
    let sol = dual::solve(&model, &f, &params)?;
    println!(
        "iterations {} (+{} coarse), gap {:.3e}, residual {:.3e}",
        sol.iterations, sol.coarse_iterations, sol.duality_gap, sol.constraint_residual
    );

    // the flux in column i is the running trapezoid sum of f
    let mut strip = 0.0;
    let mut err = 0.0f64;
    for i in 0..g.nx - 1 {
        strip += sol.f.at(i, 0) * g.hx * if i == 0 { 0.5 } else { 1.0 };
        for j in 0..g.ny - 1 {
            let s = sol.sigma.at(i, j);
            err = err.max((s[0] - strip).abs()).max(s[1].abs());
        }
    }
    println!("sup |sigma - strip flux| = {err:.3e}");
    println!("peak flux at x = 1/2: {:.6}", sol.sigma.at(g.nx / 2 - 1, 0)[0]);
    Ok(())
}
