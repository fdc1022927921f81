use hodgediv::exactq::{matrix_rank, solve_exact, QMatrix};
use hodgediv::{Error, Rational};

fn main() -> hodgediv::Result<()> {
    let a = QMatrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]])?;
    let b = [
        Rational::int(1),
        Rational::frac(1, 2),
        Rational::frac(-2, 3),
    ];
    let x = solve_exact(&a, &b)?;
    println!("x = {x:?}");
    assert_eq!(a.mul_vec(&x)?, b);

    let singular = QMatrix::from_i64(&[&[1, 2], &[2, 4]])?;
    println!("rank = {}", matrix_rank(&singular));
    match solve_exact(&singular, &[Rational::int(1), Rational::int(3)]) {
        Err(Error::Inconsistent { rank }) => println!("inconsistent, rank {rank}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
