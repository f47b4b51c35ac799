//! Regularity diagnostics of the potential as the grid is refined.

use congested_transport::dual::{self, SolverParams};
use congested_transport::fieldcalc::{Grid, ScalarField};
use congested_transport::model::CongestionModel;
use congested_transport::regularity::{g_functional, regularity_report, RegularityParams};
use congested_transport::scenario::{difference, floor_and_normalise};

fn main() -> congested_transport::Result<()> {
    let model = CongestionModel::constant(1.0, 0.5, 1.5)?;
    println!("G(t) at p = {}:", model.p());
    for t in [0.0, 0.5, 1.0, 2.0] {
        println!("  G({t}) = {:.6}", g_functional(t, model.p()));
    }
    for n in [33, 65] {
        let g = Grid::unit_square(n)?;
        let blob = |c: [f64; 2]| {
            ScalarField::from_fn(g, move |x| {
                (-((x[0] - c[0]).powi(2) + (x[1] - c[1]).powi(2)) / 0.02).exp()
            })
        };
        let mu0 = floor_and_normalise(&blob([0.3, 0.4]), 1e-3)?;
        let mu1 = floor_and_normalise(&blob([0.7, 0.6]), 1e-3)?;
        let f = difference(&mu0, &mu1)?;
        let sol = dual::solve(&model, &f, &SolverParams::default())?;
        let r = regularity_report(&model, &sol.u, &sol.f, &RegularityParams::default())?;
        println!(
            "{n}x{n}: sup|grad u| interior {:.4}, global {:.4}, weighted H2 {:?}, Caccioppoli {:?}",
            r.sup_grad_interior, r.sup_grad_global, r.weighted_h2, r.caccioppoli_ratio
        );
    }
    Ok(())
}
