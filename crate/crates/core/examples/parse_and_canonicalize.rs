//! Parses expressions on a chart and prints their canonical forms.

use lightframe::{parse_expression, Chart};

fn main() -> lightframe::Result<()> {
    let ch = Chart::from_names("x1 x2 y1 y2 z1 z2");
    for src in ["(y1^2 - y2^2)/(y1 - y2)", "(y1*y2)/y2", "1/16 + y2^2/8 - y1^2/8", "1/(2*y1 - 4)"] {
        let e = parse_expression(src, &ch)?;
        println!("{src:>26}  ->  {}", e.to_text(&ch));
    }
    let e = parse_expression("y1^2*y2", &ch)?;
    println!("d/dy1 (y1^2*y2) = {}", e.differentiate(2).to_text(&ch));
    match parse_expression("y1 + w", &ch) {
        Err(err) => println!("error: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
