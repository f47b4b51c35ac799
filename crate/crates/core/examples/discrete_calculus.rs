//! Gradient, divergence and the discrete integration-by-parts identity.

use congested_transport::fieldcalc::{
    checkerboard, divergence, gradient, project_out_kernel, Grid, ScalarField, VectorField,
};

fn main() -> congested_transport::Result<()> {
    let g = Grid::new(9, 7, [0.0, 0.0], [2.0, 1.0])?;
    let u = ScalarField::from_fn(g, |x| (x[0] * x[1]).sin());
    let v = VectorField::from_fn(g, |x| [x[1], -x[0] * x[0]]);

    let gu = gradient(&u);
    let lhs: f64 = gu
        .values()
        .iter()
        .zip(v.values())
        .map(|(a, b)| (a[0] * b[0] + a[1] * b[1]) * g.cell_area())
        .sum();
    let rhs = -u.inner(&divergence(&v));
    println!("<grad u, v> = {lhs:.15}");
    println!("-<u, div v> = {rhs:.15}");

    // the gradient cannot see constants or the checkerboard
    let cb = checkerboard(&g);
    let max_grad = gradient(&cb)
        .values()
        .iter()
        .fold(0.0f64, |m, v| m.max(v[0].abs()).max(v[1].abs()));
    println!("max |grad checkerboard| = {max_grad:e}");

    let mut w = u.values().to_vec();
    project_out_kernel(&mut w, &g);
    let w = ScalarField::new(g, w)?;
    println!(
        "after projection: integral = {:e}, <w, checkerboard> = {:e}",
        w.integral(),
        w.inner(&cb)
    );
    Ok(())
}
