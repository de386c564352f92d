use super::table::Row;
use crate::algebra::{Vec4, C64};
use crate::error::Result;
use crate::geometry::{frame_at_with, DiffMode, TetradField};
use crate::np::{
    hat_components, np_letters, null_frame, spin_coefficients, HatComponents, SpinCoefficientSet,
    SPINOR_NORMALIZATION,
};
use crate::ricci::{ricci_at, RicciAtPoint};
use crate::algebra::Tensor3;

/// Scale used when printing spin coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Normalization {
    /// The `x_{beta;alpha} y^beta z^alpha` contractions as defined.
    Np,
    /// Multiplied by `-2 sqrt2`, the scale of the gauge kernels.
    #[default]
    Spinor,
}

impl Normalization {
    pub fn factor(self) -> f64 {
        match self {
            Normalization::Np => 1.0,
            Normalization::Spinor => SPINOR_NORMALIZATION,
        }
    }
}

/// The quantity catalog for `table`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Gamma,
    BDirac,
    BTrace,
    CVector,
    Decomposition,
    SpinCoefficients,
    NpLetters,
    Hat,
    All,
}

impl Selector {
    pub const NAMES: [&'static str; 9] = [
        "gamma",
        "B_dirac",
        "B_trace",
        "C_vector",
        "decomposition",
        "spin_coefficients",
        "np_letters",
        "hat",
        "all",
    ];

    pub fn parse(s: &str) -> Option<Self> {
        use Selector::*;
        let all = [
            Gamma,
            BDirac,
            BTrace,
            CVector,
            Decomposition,
            SpinCoefficients,
            NpLetters,
            Hat,
            All,
        ];
        Self::NAMES.iter().position(|n| *n == s).map(|k| all[k])
    }
}

/// Everything `eval` reports at one point.
#[derive(Debug, Clone)]
pub struct PointQuantities {
    pub ricci: RicciAtPoint,
    pub spin: SpinCoefficientSet,
    pub hats: HatComponents,
}

pub fn evaluate(field: &TetradField, point: &Vec4, mode: DiffMode) -> Result<PointQuantities> {
    let frame = frame_at_with(field, point, mode)?;
    let ricci = ricci_at(&frame);
    let nf = null_frame(&frame);
    let em = field.em_potential_at(point)?;
    let hats = hat_components(&ricci, &frame, em.as_ref());
    Ok(PointQuantities {
        ricci,
        spin: spin_coefficients(&nf),
        hats,
    })
}

fn vector(row: &mut Row, name: &str, v: &Vec4) {
    for (k, x) in v.iter().enumerate() {
        row.num(format!("{name}{k}"), *x);
    }
}

fn independent(row: &mut Row, name: &str, t: &Tensor3) {
    for a in 0..4 {
        for b in (a + 1)..4 {
            for c in 0..4 {
                row.num(format!("{name}_{a}{b}{c}"), t[a][b][c]);
            }
        }
    }
}

fn hat_vector(row: &mut Row, name: &str, v: &[C64; 4]) {
    for (k, z) in v.iter().enumerate() {
        row.complex(&format!("{name}{k}"), *z);
    }
}

pub fn spin_columns(row: &mut Row, prefix: &str, s: &SpinCoefficientSet, norm: Normalization) {
    let scaled = s.scale(C64::from(norm.factor()));
    for (name, z) in SpinCoefficientSet::NAMES.iter().zip(scaled.to_array()) {
        row.complex(&format!("{prefix}{name}"), z);
    }
}

/// Append the columns of `sel` for one point.
pub fn columns(row: &mut Row, sel: Selector, q: &PointQuantities, norm: Normalization) {
    let r = &q.ricci;
    match sel {
        Selector::Gamma => independent(row, "gamma", &r.gamma),
        Selector::BDirac => vector(row, "B", &r.b_dirac),
        Selector::BTrace => vector(row, "Btrace", &r.b_trace),
        Selector::CVector => vector(row, "C", &r.c),
        Selector::Decomposition => {
            independent(row, "Cpart", &r.decomposition.c_part);
            independent(row, "Bpart", &r.decomposition.b_part);
            independent(row, "Epart", &r.decomposition.e_part);
        }
        Selector::SpinCoefficients => spin_columns(row, "", &q.spin, norm),
        Selector::NpLetters => {
            let letters = np_letters(&q.spin);
            for (name, z) in crate::np::NpLetters::NAMES.iter().zip(letters.to_array()) {
                row.complex(name, z);
            }
        }
        Selector::Hat => {
            hat_vector(row, "Bhat", &q.hats.b_hat);
            hat_vector(row, "Chat", &q.hats.c_hat);
            hat_vector(row, "Ahat", &q.hats.a_hat);
        }
        Selector::All => {
            for s in [
                Selector::Gamma,
                Selector::BDirac,
                Selector::BTrace,
                Selector::CVector,
                Selector::Decomposition,
                Selector::SpinCoefficients,
                Selector::NpLetters,
                Selector::Hat,
            ] {
                columns(row, s, q, norm);
            }
        }
    }
}
