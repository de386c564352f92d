#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;
use std::sync::Arc;
use tetrad::algebra::{c, max_abs_diff_tensor3, Jet, Mat2, C64};
use tetrad::exprlang::{eval_fd, eval_jet, parse, BinOp, Expr, Func, ParamSet};
use tetrad::gauge::{commuting_square, lorentz_from_matrix, SpinorGaugeField};
use tetrad::geometry::{builtin, frame_at, DiffMode};
use tetrad::ricci::{decomposition_residuals, from_gamma, ricci_at};
use tetrad::sampling::{SampleBox, Sampler};
use tetrad::spinor::{gamma_spinor_from_ricci, reconstruct_ricci, reconstruction_imaginary_residual};

fn complex() -> impl Strategy<Value = C64> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| c(re, im))
}

fn jet() -> impl Strategy<Value = Jet> {
    (complex(), prop::array::uniform4(complex())).prop_map(|(value, grad)| Jet { value, grad })
}

fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

/// Expressions that are smooth and finite on the unit box.
fn smooth_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0.1..2.0f64).prop_map(Expr::Num),
        (0usize..4).prop_map(Expr::Coord),
        Just(Expr::Pi),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::bin(BinOp::Add, a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::bin(BinOp::Sub, a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::bin(BinOp::Mul, a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::bin(
                BinOp::Div,
                a,
                Expr::bin(BinOp::Add, Expr::num(2.0), Expr::call(Func::Cos, b))
            )),
            (inner.clone(), 0u8..4).prop_map(|(a, n)| Expr::bin(BinOp::Pow, a, Expr::num(n as f64))),
            inner.clone().prop_map(Expr::neg),
            inner.clone().prop_map(|a| Expr::call(Func::Sin, a)),
            inner.clone().prop_map(|a| Expr::call(Func::Cos, a)),
            inner.clone().prop_map(|a| Expr::call(Func::Exp, Expr::call(Func::Sin, a))),
        ]
    })
}

/// Any expression the printer can produce, including partial functions.
fn any_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0.0..1e6f64).prop_map(Expr::Num),
        (0usize..4).prop_map(Expr::Coord),
        Just(Expr::Pi),
        Just(Expr::ImagUnit),
        "[a-hj-w][a-z_]{0,3}"
            .prop_filter("reserved", |s| s != "pi" && Func::from_name(s).is_none())
            .prop_map(Expr::Ident),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        let op = prop_oneof![
            Just(BinOp::Add),
            Just(BinOp::Sub),
            Just(BinOp::Mul),
            Just(BinOp::Div),
            Just(BinOp::Pow)
        ];
        prop_oneof![
            (op, inner.clone(), inner.clone()).prop_map(|(o, a, b)| Expr::bin(o, a, b)),
            inner.clone().prop_map(Expr::neg),
            (prop::sample::select(Func::ALL.to_vec()), inner).prop_map(|(f, a)| Expr::call(f, a)),
        ]
    })
}

fn antisymmetric() -> impl Strategy<Value = [[[f64; 4]; 4]; 4]> {
    prop::array::uniform24(-2.0..2.0f64).prop_map(|v| {
        let mut t = [[[0.0; 4]; 4]; 4];
        let mut k = 0;
        for a in 0..4 {
            for b in (a + 1)..4 {
                for cc in 0..4 {
                    t[a][b][cc] = v[k];
                    t[b][a][cc] = -v[k];
                    k += 1;
                }
            }
        }
        t
    })
}

proptest! {
    #[test]
    fn jet_product_rule(f in jet(), g in jet()) {
        let p = f * g;
        prop_assert!(close(p.value, f.value * g.value, 1e-14));
        for k in 0..4 {
            prop_assert!(close(p.grad[k], f.grad[k] * g.value + f.value * g.grad[k], 1e-13));
        }
    }

    #[test]
    fn jet_quotient_rule(f in jet(), g in jet()) {
        prop_assume!(g.value.norm() > 0.1);
        let q = f / g;
        for k in 0..4 {
            let expect = (f.grad[k] * g.value - f.value * g.grad[k]) / (g.value * g.value);
            prop_assert!(close(q.grad[k], expect, 1e-11));
        }
    }

    #[test]
    fn print_parse_roundtrip(e in any_expr()) {
        let printed = e.to_string();
        let back = parse(&printed).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn parser_never_panics(s in "[0-9a-z+*/^() .,\\-]{0,24}") {
        let _ = parse(&s);
    }

    #[test]
    fn parse_errors_point_inside_input(s in "[0-9x+*/^()]{1,16}") {
        if let Err(tetrad::Error::Parse { offset, .. }) = parse(&s) {
            prop_assert!(offset <= s.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn jet_matches_finite_differences(e in smooth_expr(), p in prop::array::uniform4(-1.0..1.0f64)) {
        let params = ParamSet::default();
        let j = eval_jet(&e, &p, &params).unwrap();
        let fd = eval_fd(&e, &p, &params, 1e-4).unwrap();
        prop_assert!(close(j.value, fd.value, 1e-15));
        let scale = 1.0 + j.value.norm() + j.grad.iter().map(|g| g.norm()).sum::<f64>();
        for k in 0..4 {
            prop_assert!((j.grad[k] - fd.grad[k]).norm() < 1e-6 * scale, "{} d{}: {} vs {}", e, k, j.grad[k], fd.grad[k]);
        }
    }
}

proptest! {
    #[test]
    fn decomposition_of_random_tensors(t in antisymmetric()) {
        let r = from_gamma(t);
        for (name, v) in decomposition_residuals(&r) {
            prop_assert!(v < 1e-12, "{} = {}", name, v);
        }
    }

    #[test]
    fn reconstruction_roundtrip(t in antisymmetric()) {
        let g = gamma_spinor_from_ricci(&t);
        prop_assert!(max_abs_diff_tensor3(&reconstruct_ricci(&g), &t) < 1e-12);
        prop_assert!(reconstruction_imaginary_residual(&g) < 1e-12);
    }

    #[test]
    fn constant_spinors_give_proper_lorentz(e in complex(), p in complex(), q in complex()) {
        let e = (e * 0.3).exp();
        let b = Mat2::new(e + p * q / e, p / e, q / e, 1.0 / e);
        let l = lorentz_from_matrix(&b, &[Mat2::ZERO; 4]);
        let scale = b.max_abs().powi(2);
        prop_assert!(l.orthogonality_residual() < 1e-12 * scale * scale);
        prop_assert!((l.det() - 1.0).abs() < 1e-10 * scale.powi(4));
        prop_assert!(l.value[0][0] >= 1.0 - 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]
    #[test]
    fn diagonal_tetrads_have_no_axial_part(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = s.diagonal_geometry();
        for p in s.points(&SampleBox::CARTESIAN, 10) {
            let r = ricci_at(&frame_at(&f, &p).unwrap());
            prop_assert!(r.c.iter().all(|x| x.abs() < 1e-9), "{:?}", r.c);
        }
    }

    #[test]
    fn gauge_commuting_square(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = builtin::geometry("schwarzschild_diagonal").unwrap();
        let g = s.gauge(&f.chart);
        for p in s.points(&SampleBox::for_geometry(&f), 5) {
            let res = commuting_square(&f, &g, &p, DiffMode::Dual).unwrap();
            prop_assert!(res.max() < 1e-9, "{:?}", res);
        }
    }

    #[test]
    fn gauge_composition(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = s.full_geometry();
        let g1 = s.gauge(&f.chart);
        let g2 = s.gauge(&f.chart);
        let stepwise = f.gauged(Arc::new(g1.clone())).gauged(Arc::new(g2.clone()));
        let product = f.gauged(Arc::new(g1.then(g2)));
        for p in s.points(&SampleBox::CARTESIAN, 5) {
            let a = frame_at(&stepwise, &p).unwrap();
            let b = frame_at(&product, &p).unwrap();
            let ra = ricci_at(&a);
            let rb = ricci_at(&b);
            prop_assert!(max_abs_diff_tensor3(&ra.gamma, &rb.gamma) < 1e-9);
            for k in 0..4 {
                prop_assert!((ra.b_dirac[k] - rb.b_dirac[k]).abs() < 1e-9);
                prop_assert!((ra.c[k] - rb.c[k]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn gauges_leave_metric_invariant(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = builtin::geometry("cartesian_in_spherical").unwrap();
        let gauged = f.gauged(Arc::new(s.gauge(&f.chart)));
        for p in s.points(&SampleBox::for_geometry(&f), 5) {
            let a = frame_at(&f, &p).unwrap();
            let b = frame_at(&gauged, &p).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    prop_assert!((a.g[i][j] - b.g[i][j]).abs() < 1e-10 * (1.0 + a.g[i][j].abs()));
                }
            }
        }
    }
}

#[test]
fn composition_matches_for_spin_quantities() {
    let mut s = Sampler::new(11);
    let f = builtin::geometry("cartesian_in_spherical").unwrap();
    let g1 = s.gauge(&f.chart);
    let g2 = SpinorGaugeField::spherical();
    let composed = g1.clone().then(g2.clone());
    for p in s.points(&SampleBox::for_geometry(&f), 10) {
        let res = commuting_square(&f.gauged(Arc::new(g1.clone())), &g2, &p, DiffMode::Dual).unwrap();
        assert!(res.max() < 1e-9);
        let res = commuting_square(&f, &composed, &p, DiffMode::Dual).unwrap();
        assert!(res.max() < 1e-9);
    }
}
