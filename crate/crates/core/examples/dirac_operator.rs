//! The first-order spinor operator assembled from B and C and from spin coefficients.

use tetrad::geometry::{builtin, frame_at};
use tetrad::np::{assemble_dirac_bc, assemble_dirac_np, hat_components, null_frame, spin_coefficients, Chirality};
use tetrad::ricci::ricci_at;

fn main() -> tetrad::Result<()> {
    let field = builtin::geometry("schwarzschild_diagonal")?;
    let frame = frame_at(&field, &[0.0, 4.0, 1.1, 0.5])?;
    let nf = null_frame(&frame);
    let h = hat_components(&ricci_at(&frame), &frame, None);

    let (upper_np, lower_np) = assemble_dirac_np(&nf, &spin_coefficients(&nf));
    let upper_bc = assemble_dirac_bc(&h, 0.0, Chirality::Upper);
    let lower_bc = assemble_dirac_bc(&h, 0.0, Chirality::Lower);

    for (i, row) in upper_bc.normalized().iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            println!("upper[{i}][{j}] scalar {:.6}", e.scalar);
        }
    }
    println!("upper blocks differ by {:.1e}", upper_bc.max_abs_diff(&upper_np));
    println!("lower blocks differ by {:.1e}", lower_bc.max_abs_diff(&lower_np));
    Ok(())
}
