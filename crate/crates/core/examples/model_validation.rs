//! Evaluates a congestion model, its conjugate and the structural assumption checks.

use congested_transport::fieldcalc::Grid;
use congested_transport::model::{validate_model, Coefficient, CongestionModel, GaussianBump};

fn main() -> congested_transport::Result<()> {
    let a = Coefficient::Bumps {
        floor: 0.5,
        bumps: vec![GaussianBump {
            center: [0.5, 0.5],
            width: 0.2,
            amplitude: 2.0,
        }],
    };
    let model = CongestionModel::new(a, 1.0, 1.5)?;
    println!("q = {}, p = {}, b = {}", model.q(), model.p(), model.b());

    let x = [0.5, 0.5];
    for i in [0.0, 0.5, 1.0, 2.0] {
        println!(
            "i = {i:<4} H = {:.6}  g = {:.6}",
            model.cost(x, i)?,
            model.marginal_cost(x, i)?
        );
    }
    for s in [0.5, 1.0, 2.0, 4.0] {
        let xi = [s, 0.0];
        println!(
            "|xi| = {s:<4} H* = {:.6}  grad H* = {:?}",
            model.conj_cost(x, xi),
            model.conj_grad(x, xi)
        );
    }

    let report = validate_model(&model, &Grid::unit_square(33)?.node_points());
    for check in &report.checks {
        let mark = if check.passed { "ok" } else { "FAIL" };
        println!("{mark:>4} {}: {}", check.assumption, check.detail);
    }
    println!("a in [{:.3}, {:.3}]", report.a_min, report.a_max);
    Ok(())
}
