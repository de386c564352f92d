//! Rotate the Cartesian frame of flat space into the spherical frame.

use std::f64::consts::FRAC_PI_2;
use std::sync::Arc;
use tetrad::algebra::C64;
use tetrad::gauge::{gauge_kernels, transform_spin_coefficients, SpinorGaugeField};
use tetrad::geometry::{builtin, frame_at, DiffMode};
use tetrad::np::{null_frame, spin_coefficients, SPINOR_NORMALIZATION};

fn show(v: &[C64; 3]) -> String {
    v.iter().map(|z| format!("{:.6}", z)).collect::<Vec<_>>().join(", ")
}

fn main() -> tetrad::Result<()> {
    let field = builtin::geometry("cartesian_in_spherical")?;
    let gauge = SpinorGaugeField::spherical();
    let point = [0.0, 2.0, FRAC_PI_2, 0.0];

    let nf = null_frame(&frame_at(&field, &point)?);
    let jet = gauge.spinor_jet(&point, DiffMode::Dual)?;
    let k = gauge_kernels(&spin_coefficients(&nf).scale(SPINOR_NORMALIZATION.into()), &nf, &jet);
    println!("F = {}", show(&k.f));
    println!("H = {}", show(&k.h));

    let law = transform_spin_coefficients(&spin_coefficients(&nf), &nf, &jet).scale(SPINOR_NORMALIZATION.into());
    println!("M after the gauge: {}", show(&law.m));
    println!("Mbar after the gauge: {}", show(&law.m_bar));

    let rotated = frame_at(&field.gauged(Arc::new(gauge)), &point)?;
    for (a, row) in rotated.e_up.iter().enumerate() {
        println!("e_({a}) = {:?}", row.map(|x| (x * 1e12).round() / 1e12));
    }
    Ok(())
}
