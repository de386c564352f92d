use crate::algebra::{identity_residuals, max_abs_diff_tensor3, Conventions, Vec4};
use crate::error::Result;
use crate::gauge::{commuting_square, SpinorGaugeField};
use crate::geometry::{frame_at_with, DiffMode, TetradField};
use crate::np::{
    assemble_dirac_bc, assemble_dirac_np, bridge_residual, hat_components, null_frame,
    sigma_connection_residual, spin_coefficients, Chirality,
};
use crate::ricci::{decomposition_residuals, ricci_at};
use crate::spinor::{
    gamma_spinor, gamma_spinor_from_ricci, max_abs_diff4, reconstruct_ricci,
    reconstruction_imaginary_residual,
};
use serde::Serialize;

/// The invariant suites run by `check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    CliffordIdentities,
    FrameOrthonormality,
    MetricCompatibility,
    LambdaIdentity,
    CFromLambda,
    CVanishesDiagonal,
    Decomposition,
    BNormalization,
    NullNormalization,
    SigmaConnections,
    Bridge,
    OperatorEquivalence,
    SpinorReconstruction,
    GaugeCommutingSquare,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::CliffordIdentities,
        Suite::FrameOrthonormality,
        Suite::MetricCompatibility,
        Suite::LambdaIdentity,
        Suite::CFromLambda,
        Suite::CVanishesDiagonal,
        Suite::Decomposition,
        Suite::BNormalization,
        Suite::NullNormalization,
        Suite::SigmaConnections,
        Suite::Bridge,
        Suite::OperatorEquivalence,
        Suite::SpinorReconstruction,
        Suite::GaugeCommutingSquare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CliffordIdentities => "clifford_identities",
            Suite::FrameOrthonormality => "frame_orthonormality",
            Suite::MetricCompatibility => "metric_compatibility",
            Suite::LambdaIdentity => "lambda_identity",
            Suite::CFromLambda => "c_from_lambda",
            Suite::CVanishesDiagonal => "c_vanishes_diagonal",
            Suite::Decomposition => "decomposition",
            Suite::BNormalization => "b_normalization",
            Suite::NullNormalization => "null_normalization",
            Suite::SigmaConnections => "sigma_connections",
            Suite::Bridge => "bridge",
            Suite::OperatorEquivalence => "operator_equivalence",
            Suite::SpinorReconstruction => "spinor_reconstruction",
            Suite::GaugeCommutingSquare => "gauge_commuting_square",
        }
    }
}

/// What a suite measured at one point: a residual, or `None` when the suite
/// does not apply.
pub type Measurement = (Suite, Option<f64>);

/// Point-independent residual of the algebraic identities.
pub fn clifford_residual() -> f64 {
    identity_residuals(&Conventions::standard()).max()
}

/// Residuals of every point-dependent suite at `point`.
pub fn measure_point(
    field: &TetradField,
    gauges: &[SpinorGaugeField],
    point: &Vec4,
    mode: DiffMode,
) -> Result<Vec<Measurement>> {
    let frame = frame_at_with(field, point, mode)?;
    let r = ricci_at(&frame);
    let nf = null_frame(&frame);
    let s = spin_coefficients(&nf);
    let h = hat_components(&r, &frame, None);
    let decomposition = decomposition_residuals(&r)
        .values()
        .fold(0.0_f64, |m, v| m.max(*v))
        .max(r.antisymmetry_residual());
    let (up, low) = assemble_dirac_np(&nf, &s);
    let operator = up
        .max_abs_diff(&assemble_dirac_bc(&h, 0.0, Chirality::Upper))
        .max(low.max_abs_diff(&assemble_dirac_bc(&h, 0.0, Chirality::Lower)));
    let from_ricci = gamma_spinor_from_ricci(&r.gamma);
    let reconstruction = max_abs_diff_tensor3(&reconstruct_ricci(&from_ricci), &r.gamma)
        .max(reconstruction_imaginary_residual(&from_ricci))
        .max(max_abs_diff4(&gamma_spinor(&nf).g4, &from_ricci.g4));
    let c_diag = field
        .is_diagonal()
        .then(|| r.c.iter().fold(0.0_f64, |m, x| m.max(x.abs())));
    let mut square = None;
    for g in gauges {
        let res = commuting_square(field, g, point, mode)?.max();
        square = Some(square.map_or(res, |m: f64| m.max(res)));
    }
    Ok(vec![
        (Suite::FrameOrthonormality, Some(frame.orthonormality_residual())),
        (Suite::MetricCompatibility, Some(frame.metric_compatibility_residual())),
        (Suite::LambdaIdentity, Some(r.lambda_identity_residual())),
        (Suite::CFromLambda, Some(r.c_route_residual())),
        (Suite::CVanishesDiagonal, c_diag),
        (Suite::Decomposition, Some(decomposition)),
        (Suite::BNormalization, Some(r.b_normalization_residual())),
        (Suite::NullNormalization, Some(nf.normalization_residual())),
        (Suite::SigmaConnections, Some(sigma_connection_residual(&frame, &nf))),
        (Suite::Bridge, Some(bridge_residual(&h, &s))),
        (Suite::OperatorEquivalence, Some(operator)),
        (Suite::SpinorReconstruction, Some(reconstruction)),
        (Suite::GaugeCommutingSquare, square),
    ])
}
