//! Null tetrad, spin coefficients, NP letters and the hat components.

use tetrad::geometry::{builtin, frame_at};
use tetrad::np::{bridge_residual, hat_components, np_letters, null_frame, spin_coefficients, SPINOR_NORMALIZATION};
use tetrad::ricci::ricci_at;

fn main() -> tetrad::Result<()> {
    let field = builtin::geometry("schwarzschild_diagonal")?;
    let frame = frame_at(&field, &[0.0, 5.0, 1.0, 0.0])?;
    let nf = null_frame(&frame);
    println!("null normalization residual: {:.1e}", nf.normalization_residual());

    let s = spin_coefficients(&nf);
    let spinor = s.scale(SPINOR_NORMALIZATION.into());
    for (fam, canon, scaled) in [("L", s.l, spinor.l), ("M", s.m, spinor.m), ("Mbar", s.m_bar, spinor.m_bar), ("N", s.n, spinor.n)] {
        for i in 0..3 {
            println!("{fam}{}: np {:>22.6}  spinor {:>22.6}", i + 1, canon[i], scaled[i]);
        }
    }

    let letters = np_letters(&s);
    println!("rho = {:.6}, mu = {:.6}, gamma = {:.6}", letters.rho, letters.mu, letters.gamma);

    let h = hat_components(&ricci_at(&frame), &frame, None);
    println!("B hat = {:?}", h.b_hat);
    println!("bridge residual: {:.1e}", bridge_residual(&h, &s));
    Ok(())
}
