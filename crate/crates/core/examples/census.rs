//! Exhaustive census of endo-commutative straight algebras over GF(p).
//!
//! `cargo run --release --example census -- 7`

use ecalg::classify::{enumerate_ecs, DEFAULT_BUDGET};
use ecalg::report::{OutputFormat, Render};
use ecalg::Gf;

fn main() -> ecalg::Result<()> {
    let p = std::env::args()
        .nth(1)
        .map_or(Ok(5), |a| a.parse())
        .expect("a prime");
    let census = enumerate_ecs(&Gf::new(p)?, DEFAULT_BUDGET)?;
    print!("{}", census.render(OutputFormat::Md)?);
    Ok(())
}
