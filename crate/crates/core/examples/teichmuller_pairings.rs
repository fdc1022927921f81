use hodgediv::extremality::{
    kappa_mu, psi_degree, teich_vector_abelian, teich_vector_quadratic, Partition,
    TeichParamsAbelian, TeichParamsQuadratic,
};
use hodgediv::picard::{class_stratum_abelian, class_stratum_quadratic, pair};
use hodgediv::Rational;

fn main() -> hodgediv::Result<()> {
    let g = 3;
    let pa = Partition::stratum_abelian(g)?;
    println!("abelian {pa}: kappa_mu = {}", kappa_mu(&pa));
    for l in [Rational::zero(), Rational::frac(3, 2), Rational::int(3)] {
        let t = TeichParamsAbelian::new(Rational::int(4), l.clone());
        let c = teich_vector_abelian(g, &pa, &t)?;
        println!(
            "  L = {l:<4} vector {:?}  C.H(2) = {}  C.psi(2) = {}",
            c.vector().unwrap(),
            pair(&c, &class_stratum_abelian(g)?)?,
            psi_degree(g, &pa, &t, 2)?
        );
    }

    let pq = Partition::stratum_quadratic(g)?;
    println!("quadratic {pq}: kappa_mu = {}", kappa_mu(&pq));
    for c_area in [Rational::zero(), Rational::frac(1, 2), Rational::int(2)] {
        let c = teich_vector_quadratic(
            g,
            &pq,
            &TeichParamsQuadratic::new(Rational::int(2), c_area.clone()),
        )?;
        println!(
            "  c_area = {c_area:<4} C.Q(2) = {}",
            pair(&c, &class_stratum_quadratic(g)?)?
        );
    }
    Ok(())
}
