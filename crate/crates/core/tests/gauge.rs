#![allow(clippy::needless_range_loop)]

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::Arc;
use tetrad::algebra::{c, max_abs_diff4, Mat2, Mat4, C64};
use tetrad::gauge::{
    commuting_square, transform_b, transform_c, transform_gamma_symmetric, transform_spin_coefficients,
    ConstantLorentz, LorentzSource, SpinorGaugeField,
};
use tetrad::geometry::{builtin, frame_at, DiffMode};
use tetrad::np::{null_frame, spin_coefficients, SPINOR_NORMALIZATION};
use tetrad::ricci::ricci_at;
use tetrad::sampling::{SampleBox, Sampler};
use tetrad::spinor::{gamma_spinor, gamma_symmetric, GammaSymmetric};

fn close(a: C64, b: C64) -> bool {
    (a - b).norm() < 1e-12
}

#[test]
fn cartesian_legs_in_spherical_coordinates() {
    let f = builtin::geometry("cartesian_in_spherical").unwrap();
    for p in [[0.0, 2.0, FRAC_PI_2, 0.0], [0.3, 1.5, 0.8, 2.1]] {
        let (r, th, ph) = (p[1], p[2], p[3]);
        let nf = null_frame(&frame_at(&f, &p).unwrap());
        let [l, n, m, mb] = nf.sigma_entries();
        let em = C64::from_polar(1.0, -ph);
        let l_want = [c(1.0, 0.0), c(th.cos(), 0.0), c(-th.sin() / r, 0.0), c(0.0, 0.0)];
        let n_want = [c(1.0, 0.0), c(-th.cos(), 0.0), c(th.sin() / r, 0.0), c(0.0, 0.0)];
        let m_want = [
            c(0.0, 0.0),
            em * th.sin(),
            em * (th.cos() / r),
            c(0.0, -1.0) * em / (r * th.sin()),
        ];
        for k in 0..4 {
            assert!(close(l[k], l_want[k]), "l^{k}");
            assert!(close(n[k], n_want[k]), "n^{k}");
            assert!(close(m[k], m_want[k]), "m^{k}");
            assert!(close(mb[k], m_want[k].conj()), "mbar^{k}");
        }
    }
}

#[test]
fn spherical_gauge_derivative_combinations() {
    let g = SpinorGaugeField::spherical();
    let (th, ph) = (0.9, 0.4);
    let j = g.spinor_jet(&[0.0, 1.0, th, ph], DiffMode::Dual).unwrap();
    let (a, b, cc, d) = (j.a(), j.b(), j.c(), j.d());
    let del = |k: usize| j.partials[k];
    let (dt, dp) = (del(2), del(3));
    let e = |m: &Mat2, i, k| m[(i, k)];
    assert!(close(b * e(&dt, 1, 0) - d * e(&dt, 1, 1), c(-0.5, 0.0)));
    assert!(close(cc * e(&dt, 0, 0) - a * e(&dt, 0, 1), c(-0.5, 0.0)));
    assert!(close(b * e(&dp, 1, 0) - d * e(&dp, 1, 1), c(0.0, -0.5 * th.sin())));
    assert!(close(cc * e(&dp, 0, 0) - a * e(&dp, 0, 1), c(0.0, 0.5 * th.sin())));
    assert!(close(a * e(&dt, 1, 1) - b * e(&dt, 0, 0), c(0.0, 0.0)));
    assert!(close(a * e(&dp, 1, 1) - b * e(&dp, 0, 0), c(0.0, -(th / 2.0).cos().powi(2))));

    let j = g.spinor_jet(&[0.0, 1.0, FRAC_PI_2, ph], DiffMode::Dual).unwrap();
    let dp = j.partials[3];
    assert!(close(j.a() * dp[(1, 1)] - j.b() * dp[(0, 0)], c(0.0, -0.5)));
}

#[test]
fn spherical_gauge_is_a_rotation() {
    let l = SpinorGaugeField::spherical()
        .lorentz_jet(&[0.0, 1.0, FRAC_PI_2, 0.0], DiffMode::Dual)
        .unwrap();
    assert!(l.orthogonality_residual() < 1e-12);
    assert!((l.value[0][0] - 1.0).abs() < 1e-15);
    assert!((l.det() - 1.0).abs() < 1e-12);
}

#[test]
fn gauged_cartesian_frame_is_spherical() {
    let f = builtin::geometry("cartesian_in_spherical").unwrap();
    let g = f.gauged(Arc::new(SpinorGaugeField::spherical()));
    let (r, th) = (2.0, 1.1);
    let fj = frame_at(&g, &[0.0, r, th, 0.5]).unwrap();
    let want: Mat4 = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0 / r, 0.0],
        [0.0, 0.0, 0.0, 1.0 / (r * th.sin())],
        [0.0, 1.0, 0.0, 0.0],
    ];
    for a in 0..4 {
        for al in 0..4 {
            assert!((fj.e_up[a][al] - want[a][al]).abs() < 1e-14);
        }
    }
}

#[test]
fn b_law_examples() {
    let f = builtin::geometry("minkowski_cartesian").unwrap();
    let p = [0.0, 0.3, -0.2, 0.7];
    let fj = frame_at(&f, &p).unwrap();
    let bin = [0.1, 0.2, -0.3, 0.4];
    let id = SpinorGaugeField::identity().lorentz_jet(&p, DiffMode::Dual).unwrap();
    assert_eq!(transform_b(&bin, &id, &fj), bin);

    let g = Sampler::new(2).constant_gauge();
    let l = g.lorentz_jet(&p, DiffMode::Dual).unwrap();
    let out = transform_b(&bin, &l, &fj);
    for a in 0..4 {
        let plain: f64 = (0..4).map(|k| l.value[a][k] * bin[k]).sum();
        assert_eq!(out[a], plain);
    }

    let f = builtin::geometry("cartesian_in_spherical").unwrap();
    let res = commuting_square(&f, &SpinorGaugeField::spherical(), &[0.0, 2.0, FRAC_PI_2, 0.0], DiffMode::Dual)
        .unwrap();
    assert!(res.b < 1e-9);
}

#[test]
fn c_law_keeps_diagonal_frames_axial_free() {
    // cyclic permutation of the spatial axes
    let perm: Mat4 = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 1.0, 0.0, 0.0],
    ];
    let f = builtin::geometry("minkowski_spherical_diagonal").unwrap();
    let l = ConstantLorentz(perm);
    let p = [0.0, 3.0, 1.0, 0.2];
    let before = frame_at(&f, &p).unwrap();
    let after = frame_at(&f.gauged(Arc::new(l)), &p).unwrap();
    let jet = l.lorentz_jet(&p, DiffMode::Dual).unwrap();
    let c_law = transform_c(&ricci_at(&before).c, &jet, &before);
    assert!(c_law.iter().all(|x| x.abs() < 1e-15));
    assert!(ricci_at(&after).c.iter().all(|x| x.abs() < 1e-15));

    let cart = builtin::geometry("cartesian_in_spherical").unwrap();
    let g = SpinorGaugeField::spherical();
    let before = frame_at(&cart, &p).unwrap();
    let jet = g.lorentz_jet(&p, DiffMode::Dual).unwrap();
    let c_law = transform_c(&ricci_at(&before).c, &jet, &before);
    assert!(c_law.iter().all(|x| x.abs() < 1e-14));
}

#[test]
fn c_law_random_gauge_on_cartesian_in_spherical() {
    let f = builtin::geometry("cartesian_in_spherical").unwrap();
    let mut s = Sampler::new(5);
    let g = s.gauge(&f.chart);
    for p in s.points(&SampleBox::for_geometry(&f), 20) {
        let before = frame_at(&f, &p).unwrap();
        let after = frame_at(&f.gauged(Arc::new(g.clone())), &p).unwrap();
        let jet = g.lorentz_jet(&p, DiffMode::Dual).unwrap();
        let law = transform_c(&ricci_at(&before).c, &jet, &before);
        assert!(max_abs_diff4(&law, &ricci_at(&after).c) < 1e-9);
    }
}

#[test]
fn identity_gauge_changes_nothing() {
    let f = builtin::geometry("schwarzschild_diagonal").unwrap();
    let p = [0.0, 4.0, 1.2, 0.3];
    let nf = null_frame(&frame_at(&f, &p).unwrap());
    let jet = SpinorGaugeField::identity().spinor_jet(&p, DiffMode::Dual).unwrap();
    let s = spin_coefficients(&nf);
    assert_eq!(transform_spin_coefficients(&s, &nf, &jet), s);
    let g = gamma_symmetric(&gamma_spinor(&nf));
    assert!(transform_gamma_symmetric(&g, &nf, &jet).max_abs_diff(&g) < 1e-15);
}

#[test]
fn constant_gauges_on_schwarzschild() {
    let f = builtin::geometry("schwarzschild_diagonal").unwrap();
    let mut s = Sampler::new(8);
    for _ in 0..5 {
        let g = s.constant_gauge();
        for p in s.points(&SampleBox::for_geometry(&f), 10) {
            let res = commuting_square(&f, &g, &p, DiffMode::Dual).unwrap();
            assert!(res.spin < 1e-9 && res.gamma < 1e-9, "{res:?}");
        }
    }
}

#[test]
fn spherical_gamma_lives_in_m_slots() {
    let f = builtin::geometry("cartesian_in_spherical").unwrap();
    let p = [0.0, 2.0, PI / 3.0, 0.7];
    let nf = null_frame(&frame_at(&f, &p).unwrap());
    let jet = SpinorGaugeField::spherical().spinor_jet(&p, DiffMode::Dual).unwrap();
    let g = transform_gamma_symmetric(&GammaSymmetric::zero(), &nf, &jet);
    for i in 0..2 {
        for j in 0..2 {
            for (k, l) in [(0, 0), (1, 1)] {
                assert!(g.gamma[i][j][k][l].norm() < 1e-14);
            }
        }
    }
    let s = g.spin_coefficients().scale(C64::from(SPINOR_NORMALIZATION));
    assert!(close(s.m[0], c(1.0, 0.0)));
    assert!(close(s.m_bar[1], c(1.0, 0.0)));
}

#[test]
fn non_unimodular_gauge_is_rejected() {
    let f = builtin::geometry("minkowski_cartesian").unwrap();
    let g = SpinorGaugeField::from_strings("1 + x", "1", "0", "0", &f.chart, Default::default()).unwrap();
    assert!(matches!(
        commuting_square(&f, &g, &[0.0, 0.5, 0.0, 0.0], DiffMode::Dual),
        Err(tetrad::Error::NotUnimodular { .. })
    ));
    assert!(commuting_square(&f, &g, &[0.0, 0.0, 0.0, 0.0], DiffMode::Dual).is_ok());
}

#[test]
fn fd_mode_commuting_square() {
    let f = builtin::geometry("schwarzschild_diagonal").unwrap();
    let mut s = Sampler::new(12);
    let g = s.gauge(&f.chart);
    for p in s.points(&SampleBox::for_geometry(&f), 5) {
        let res = commuting_square(&f, &g, &p, DiffMode::Fd).unwrap();
        assert!(res.max() < 1e-6, "{res:?}");
    }
}
