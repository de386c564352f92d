//! Tetrad fields: metric, Christoffel symbols and the orthonormality check.

use tetrad::geometry::{builtin, frame_at, GeometryConfig};

fn main() -> tetrad::Result<()> {
    let field = builtin::geometry("schwarzschild_diagonal")?;
    let point = [0.0, 6.0, 1.2, 0.4];
    let frame = frame_at(&field, &point)?;

    println!("{} at {point:?}", field.name);
    println!("metric diagonal: {:?}", (0..4).map(|i| frame.g[i][i]).collect::<Vec<_>>());
    println!("Gamma^r_tt = {:.6}", frame.christoffel[1][0][0]);
    println!("Gamma^th_r th = {:.6}", frame.christoffel[2][1][2]);
    println!("orthonormality residual: {:.2e}", frame.orthonormality_residual());
    println!("metric compatibility residual: {:.2e}", frame.metric_compatibility_residual());

    let cfg: GeometryConfig = serde_json::from_str(
        r#"{
            "name": "boosted",
            "chart": ["t", "x", "y", "z"],
            "params": {"v": 0.3},
            "tetrad": {"kind": "full", "e": [
                ["1/sqrt(1-v^2)", "v/sqrt(1-v^2)", "0", "0"],
                ["v/sqrt(1-v^2)", "1/sqrt(1-v^2)", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"]
            ]}
        }"#,
    )
    .expect("valid json");
    let boosted = cfg.build()?;
    let f = frame_at(&boosted, &[0.0, 1.0, 0.0, 0.0])?;
    println!("{}: g_tt = {:.12}, residual {:.2e}", boosted.name, f.g[0][0], f.orthonormality_residual());
    Ok(())
}
