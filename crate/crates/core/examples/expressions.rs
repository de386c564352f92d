//! Parse an expression, print it back, and evaluate it with derivatives.

use tetrad::exprlang::{eval_fd, eval_jet, parse, parse_bound, ParamSet};

fn main() -> tetrad::Result<()> {
    let chart = ["t", "r", "th", "ph"].map(String::from);
    let params = ParamSet::new().with("M", 1.0)?;

    let src = "sqrt(1 - 2*M/r) * sin(th)^2";
    println!("source:  {src}");
    println!("printed: {}", parse(src)?);

    let e = parse_bound(src, &chart, &params)?;
    let point = [0.0, 5.0, 1.0, 0.0];
    let dual = eval_jet(&e, &point, &params)?;
    let fd = eval_fd(&e, &point, &params, 1e-5)?;
    println!("value at {point:?}: {:.12}", dual.value.re);
    for (name, (a, b)) in chart.iter().zip(dual.grad.iter().zip(fd.grad.iter())) {
        println!("  d/d{name:<2}  dual {:>16.12}  fd {:>16.12}", a.re, b.re);
    }

    match parse("r * (th + ") {
        Err(err) => println!("malformed input: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
