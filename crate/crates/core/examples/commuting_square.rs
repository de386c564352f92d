//! Gauge laws against direct recomputation for random local gauges.

use tetrad::gauge::commuting_square;
use tetrad::geometry::{builtin, DiffMode};
use tetrad::sampling::{SampleBox, Sampler};

fn main() -> tetrad::Result<()> {
    let mut sampler = Sampler::new(2024);
    for name in ["schwarzschild_diagonal", "cartesian_in_spherical"] {
        let field = builtin::geometry(name)?;
        let gauge = sampler.gauge(&field.chart);
        let mut worst = 0.0_f64;
        for p in sampler.points(&SampleBox::for_geometry(&field), 25) {
            let res = commuting_square(&field, &gauge, &p, DiffMode::Dual)?;
            worst = worst.max(res.max());
        }
        println!("{name}: worst residual over 25 points {worst:.2e}");
    }
    Ok(())
}
