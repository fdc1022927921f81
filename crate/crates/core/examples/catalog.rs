use hodgediv::catalog::Catalog;

fn main() -> hodgediv::Result<()> {
    let cat = Catalog::build([3])?;
    for c in &cat.classes {
        println!(
            "{:<6} {:<16} {}",
            c.name,
            format!("{:?}", c.kind),
            c.to_class()?
        );
    }
    for c in &cat.curves {
        println!("{:<24} {}", c.name, c.anchor);
    }
    let path = std::env::temp_dir().join("hodgediv-example-catalog.json");
    cat.save(&path)?;
    assert!(Catalog::load(&path)?.diff_against_rebuild()?.is_empty());
    println!("wrote {}", path.display());
    Ok(())
}
