//! Which type II/III algebras are isomorphic to a type I algebra?

use ecalg::classify::{cross_type_experiment, DEFAULT_BUDGET};
use ecalg::report::{OutputFormat, Render};
use ecalg::Gf;

fn main() -> ecalg::Result<()> {
    for p in [2, 3, 5, 7] {
        print!(
            "{}",
            cross_type_experiment(&Gf::new(p)?, DEFAULT_BUDGET)?.render(OutputFormat::Md)?
        );
        println!();
    }
    Ok(())
}
