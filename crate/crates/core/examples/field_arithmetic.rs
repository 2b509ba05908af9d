//! Exact arithmetic in GF(p) and Q through the common `Field` interface.

use ecalg::{Field, FieldDescriptor, Gf, Rationals};

fn show<F: Field>(f: &F, a: &str, b: &str) -> ecalg::Result<()> {
    let (x, y) = (f.parse(a)?, f.parse(b)?);
    println!(
        "{}: {a} + {b} = {}, {a}·{b} = {}, {a}/{b} = {}",
        f.descriptor(),
        f.format(&f.add(&x, &y)),
        f.format(&f.mul(&x, &y)),
        f.format(&f.div(&x, &y)?),
    );
    Ok(())
}

fn main() -> ecalg::Result<()> {
    show(&Gf::new(7)?, "3", "5")?;
    show(&Gf::new((1 << 61) - 1)?, "123456789012", "-1")?;
    show(&Rationals, "8", "-3/4")?;

    let field: FieldDescriptor = "gf:13".parse()?;
    println!("{field} has elements {:?}", field.enumerate_elements()?);
    println!("GF(4) is rejected: {}", Gf::new(4).unwrap_err());
    Ok(())
}
