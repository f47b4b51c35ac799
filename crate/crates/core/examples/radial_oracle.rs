//! Compares a radially symmetric solve with the flux obtained by integrating
//! the data over discs.

use std::f64::consts::PI;

use congested_transport::dual::{self, SolverParams};
use congested_transport::fieldcalc::{Grid, ScalarField};
use congested_transport::model::CongestionModel;
use congested_transport::scenario::{difference, floor_and_normalise};

fn biweight(s: f64) -> f64 {
    let t = 1.0 - s * s;
    if t > 0.0 {
        t * t
    } else {
        0.0
    }
}

fn main() -> congested_transport::Result<()> {
    let (n, eps) = (128, 1e-3);
    let g = Grid::new(n, n, [-0.5, -0.5], [1.0, 1.0])?;
    let core = |r: f64| biweight(r / 0.15);
    let ring = |r: f64| biweight((r - 0.22) / 0.08);
    let raw0 = ScalarField::from_fn(g, |x| core(x[0].hypot(x[1])));
    let raw1 = ScalarField::from_fn(g, |x| ring(x[0].hypot(x[1])));
    // the floors cancel, so f vanishes exactly outside the two supports
    let f = difference(
        &floor_and_normalise(&raw0, eps)?,
        &floor_and_normalise(&raw1, eps)?,
    )?;
    let (c0, c1) = ((1.0 - eps) / raw0.integral(), (1.0 - eps) / raw1.integral());

    let model = CongestionModel::constant(1.0, 1.0, 1.5)?;
    let sol = dual::solve(&model, &f, &SolverParams::default())?;
    println!(
        "converged {} after {} iterations (+{} coarse)",
        sol.converged, sol.iterations, sol.coarse_iterations
    );

    // |sigma|(r) = (1/r) int_0^r f(s) s ds by the midpoint rule, pointing outwards
    let flux = |r: f64| {
        let m = 2000;
        let ds = r.min(0.3) / m as f64;
        (0..m)
            .map(|k| {
                let s = (k as f64 + 0.5) * ds;
                (c0 * core(s) - c1 * ring(s)) * s * ds
            })
            .sum::<f64>()
            / r
    };
    let (mut num, mut den) = (0.0, 0.0);
    for j in 0..g.ny - 1 {
        for i in 0..g.nx - 1 {
            let x = g.cell_center(i, j);
            let r = x[0].hypot(x[1]);
            if r > 0.45 || r == 0.0 {
                continue;
            }
            let s = flux(r);
            let exact = [s * x[0] / r, s * x[1] / r];
            let got = sol.sigma.at(i, j);
            num += (got[0] - exact[0]).powi(2) + (got[1] - exact[1]).powi(2);
            den += exact[0].powi(2) + exact[1].powi(2);
        }
    }
    println!("relative L2 flux error on {n}x{n} nodes: {:.3e}", (num / den).sqrt());
    println!("radial flux at r = 0.15: {:.4}", flux(0.15));
    println!("mass inside r = 0.15: {:.4}", 2.0 * PI * 0.15 * flux(0.15));
    Ok(())
}
