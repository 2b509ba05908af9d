//! Classification of type I algebras over several prime fields, with the
//! ≈-partition cross-checked against exhaustive isomorphism search.

use ecalg::classify::{classify_field, type1_classification, DEFAULT_BUDGET};
use ecalg::report::{OutputFormat, Render};
use ecalg::Gf;

fn main() -> ecalg::Result<()> {
    for p in [2, 3, 5, 7, 11, 13, 19, 31] {
        let r = type1_classification(&Gf::new(p)?)?;
        println!(
            "GF({p}): {} class(es), representatives {:?}",
            r.type1_classes.len(),
            r.representatives()
        );
    }
    println!();
    print!(
        "{}",
        classify_field(&Gf::new(13)?, DEFAULT_BUDGET)?.render(OutputFormat::Md)?
    );
    Ok(())
}
