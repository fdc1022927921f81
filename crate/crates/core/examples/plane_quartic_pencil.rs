use hodgediv::picard::{class_d, pair};
use hodgediv::porteous::{
    eta_degree_from_family, hyperplane, kappa_degree, lambda_degree, pencil_test_curve,
    quartic_pencil, singular_fiber_count, weierstrass_family_class, weierstrass_sweep_degree,
    FamilyInvariants,
};

fn main() -> hodgediv::Result<()> {
    let fam = quartic_pencil();
    let h = hyperplane(&fam);
    println!("genus {}, {} base points", fam.genus, fam.base_points);
    println!("omega_rel = {}", fam.omega_rel);
    println!("deg eta   = {}", eta_degree_from_family(&fam, &h)?);
    println!("kappa     = {}", kappa_degree(&fam));
    println!("delta_0   = {}", singular_fiber_count(&fam));
    println!("lambda    = {}", lambda_degree(&fam));
    let curve = pencil_test_curve(&fam)?;
    println!("B.D       = {}", pair(&curve, &class_d(fam.genus)?)?);

    let inv = FamilyInvariants::from_family(fam)?;
    println!("sweep     = {}", weierstrass_family_class(&inv)?);
    println!("sweep.h   = {}", weierstrass_sweep_degree(&inv, &h)?);
    Ok(())
}
