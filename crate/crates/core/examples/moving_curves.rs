use hodgediv::testcurves::{moving_curve_catalog, moving_curve_negativity};

fn main() -> hodgediv::Result<()> {
    for g in [2, 3, 6] {
        println!("genus {g}");
        for c in moving_curve_catalog(g)? {
            println!(
                "  {:<9} {:?}  ({})",
                c.name,
                c.vector().unwrap_or_default(),
                c.anchor
            );
        }
        for (name, sym, v) in moving_curve_negativity(g)? {
            println!("  {name}.{sym} = {v}");
        }
    }
    Ok(())
}
