//! Canonical genus-4 curves on a quadric, computed on the blow-up lattice and
//! again in the Chow ring of `P^1 x P^3`.

use hodgediv::chow::{adjunction_canonical, relative_dualizing_linear, MultiProjRing};
use hodgediv::picard::{class_d, pair};
use hodgediv::porteous::{
    genus4_quadric_pencil, hyperplane, kappa_degree, lambda_degree, pencil_test_curve,
    singular_fiber_count, weierstrass_sweep_degree, FamilyInvariants,
};
use hodgediv::Rational;

fn main() -> hodgediv::Result<()> {
    let fam = genus4_quadric_pencil();
    let curve = pencil_test_curve(&fam)?;
    println!(
        "lattice: kappa {} delta_0 {} lambda {}",
        kappa_degree(&fam),
        singular_fiber_count(&fam),
        lambda_degree(&fam)
    );
    println!("B.D by pairing {}", pair(&curve, &class_d(4)?)?);
    let inv = FamilyInvariants::from_family(fam.clone())?;
    println!(
        "B.D by sweep   {}",
        weierstrass_sweep_degree(&inv, &hyperplane(&fam))?
    );

    let ring = MultiProjRing::new(vec![1, 3])?;
    let (quadric, cubics) = (ring.linear(&[0, 2])?, ring.linear(&[1, 3])?);
    let x = &quadric * &cubics;
    let omega = relative_dualizing_linear(&adjunction_canonical(&ring, &[quadric, cubics])?, 0)?;
    println!("chow: omega_rel = {omega}");
    println!("chow: kappa = {}", (&omega.pow(2) * &x).integrate());
    let sweep = &omega.scale(&Rational::int(10)) - &ring.generator(0).scale(&Rational::int(4));
    println!(
        "chow: B.D = {}",
        (&(&sweep * &ring.generator(1)) * &x).integrate()
    );
    Ok(())
}
