//! Rotation coefficients, the B and C vectors, and the irreducible parts.

use tetrad::geometry::{builtin, frame_at};
use tetrad::ricci::{decomposition_residuals, ricci_at, B_TRACE_PER_DIRAC};

fn main() -> tetrad::Result<()> {
    for name in ["minkowski_spherical_diagonal", "schwarzschild_diagonal", "cartesian_in_spherical"] {
        let field = builtin::geometry(name)?;
        let r = ricci_at(&frame_at(&field, &[0.0, 4.0, 0.9, 0.3])?);
        println!("{name}");
        for ((a, b, c), v) in r.independent_gamma() {
            if v.abs() > 1e-12 {
                println!("  gamma_{a}{b}{c} = {v:+.6}");
            }
        }
        println!("  B_dirac = {:?}", r.b_dirac);
        println!("  B_trace / B_dirac = {B_TRACE_PER_DIRAC}, residual {:.1e}", r.b_normalization_residual());
        println!("  C = {:?}", r.c);
        for (k, v) in decomposition_residuals(&r) {
            println!("  {k}: {v:.1e}");
        }
    }
    Ok(())
}
