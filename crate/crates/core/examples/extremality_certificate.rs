use hodgediv::extremality::{
    ample_abelian, certificate_check, default_abelian_grid, threshold_abelian,
};
use hodgediv::picard::class_stratum_abelian;
use hodgediv::Rational;

fn main() -> hodgediv::Result<()> {
    let g = 4;
    let (a, b, c0) = (Rational::int(3), Rational::int(2), Rational::frac(-1, 12));
    let t = threshold_abelian(&a, &b, &c0, g)?;
    println!("d = {} (attained at L = {})", t.d, t.attained_at);

    let stratum = class_stratum_abelian(g)?;
    let ample = ample_abelian(g, &a, &b, &c0)?;
    let grid = default_abelian_grid(g)?;
    for d in [t.d.clone(), &t.d * Rational::int(2)] {
        let cert = certificate_check(&stratum, &ample, &d, &grid)?;
        println!(
            "d = {d}: pass = {}, {} of {} curves violate",
            cert.pass,
            cert.violations.len(),
            cert.checked
        );
        for v in cert.violations.iter().take(3) {
            println!("  {} -> {}", v.curve, v.value);
        }
    }
    Ok(())
}
