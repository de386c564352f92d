use super::laws::{transform_b, transform_c, transform_gamma_symmetric, transform_spin_coefficients};
use super::spinor_field::SpinorGaugeField;
use crate::algebra::{max_abs_diff4, Vec4};
use crate::error::Result;
use crate::geometry::{frame_at_with, DiffMode, TetradField};
use crate::np::{null_frame, spin_coefficients};
use crate::ricci::ricci_at;
use crate::spinor::{gamma_spinor, gamma_symmetric};
use serde::Serialize;
use std::sync::Arc;

/// Law-minus-recompute differences for each transformable quantity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SquareResiduals {
    pub b: f64,
    pub c: f64,
    pub spin: f64,
    pub gamma: f64,
}

impl SquareResiduals {
    pub fn max(&self) -> f64 {
        self.b.max(self.c).max(self.spin).max(self.gamma)
    }
}

/// Transform each quantity of `field` by its gauge law and compare with the
/// same quantity recomputed from the gauged tetrad.
pub fn commuting_square(
    field: &TetradField,
    gauge: &SpinorGaugeField,
    point: &Vec4,
    mode: DiffMode,
) -> Result<SquareResiduals> {
    let jet = gauge.spinor_jet(point, mode)?;
    let lorentz = jet.lorentz();
    let gauged = field.gauged(Arc::new(gauge.clone()));
    let before = frame_at_with(field, point, mode)?;
    let after = frame_at_with(&gauged, point, mode)?;
    let (r0, r1) = (ricci_at(&before), ricci_at(&after));
    let (nf0, nf1) = (null_frame(&before), null_frame(&after));
    let s0 = spin_coefficients(&nf0);
    let s1 = spin_coefficients(&nf1);
    let g0 = gamma_symmetric(&gamma_spinor(&nf0));
    let g1 = gamma_symmetric(&gamma_spinor(&nf1));
    Ok(SquareResiduals {
        b: max_abs_diff4(&transform_b(&r0.b_dirac, &lorentz, &before), &r1.b_dirac),
        c: max_abs_diff4(&transform_c(&r0.c, &lorentz, &before), &r1.c),
        spin: transform_spin_coefficients(&s0, &nf0, &jet).max_abs_diff(&s1),
        gamma: transform_gamma_symmetric(&g0, &nf0, &jet).max_abs_diff(&g1),
    })
}
