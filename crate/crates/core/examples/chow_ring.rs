use hodgediv::chow::{eval_expression, parse_dims};

fn main() -> hodgediv::Result<()> {
    let mut args = std::env::args().skip(1);
    let expr = args.next().unwrap_or_else(|| "(a+b)^2*(a+3b)*2b".into());
    let dims = args.next().unwrap_or_else(|| "1,3".into());
    let ring = parse_dims(&dims)?;
    let value = eval_expression(&expr, &ring, None)?;
    println!("{expr} on {:?}", ring.dims());
    println!("  class  {value}");
    println!("  degree {}", value.integrate());
    Ok(())
}
