//! The four-index spinor connection and the round trip back to rotation coefficients.

use tetrad::algebra::max_abs_diff_tensor3;
use tetrad::geometry::{builtin, frame_at};
use tetrad::np::{null_frame, spin_coefficients};
use tetrad::ricci::ricci_at;
use tetrad::spinor::{gamma_spinor, gamma_symmetric, reconstruct_ricci, reconstruction_imaginary_residual};

fn main() -> tetrad::Result<()> {
    let field = builtin::geometry("schwarzschild_diagonal")?;
    let frame = frame_at(&field, &[0.0, 7.0, 0.8, 1.0])?;
    let nf = null_frame(&frame);

    let g = gamma_spinor(&nf);
    let sym = gamma_symmetric(&g);
    println!("antisymmetry residual: {:.1e}", sym.antisymmetry_residual());

    let from_slots = sym.spin_coefficients();
    let direct = spin_coefficients(&nf);
    println!("slot / direct ratio for L1: {:.6}", from_slots.l[0] / direct.l[0]);

    let rec = reconstruct_ricci(&g);
    println!("reconstruction error: {:.1e}", max_abs_diff_tensor3(&rec, &ricci_at(&frame).gamma));
    println!("imaginary residue: {:.1e}", reconstruction_imaginary_residual(&g));
    Ok(())
}
