//! Recovers the class of `D` from test-curve intersection numbers.

use hodgediv::picard::class_d;
use hodgediv::testcurves::derive_theorem_class_detailed;

fn main() -> hodgediv::Result<()> {
    let g: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let der = derive_theorem_class_detailed(g)?;
    println!("genus {g}");
    for (eq, (row, rhs)) in der.equations.iter().zip(
        (0..der.system.rows())
            .map(|r| der.system.row(r))
            .zip(&der.rhs),
    ) {
        let row: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  {eq:<28} [{}] = {rhs}", row.join(", "));
    }
    println!("a' = {}, b' = {}", der.a_prime, der.b_prime);
    println!("D = {}", der.class);
    assert_eq!(der.class, class_d(g)?);
    Ok(())
}
