//! Three ways to decide whether x²y² = (xy)² holds identically.

use ecalg::ec::{general_residuals, is_ec_definitional, is_ec_general, is_ec_straight};
use ecalg::{Gf, Rationals, StraightParams, StructureMatrix};

fn main() -> ecalg::Result<()> {
    let f = Gf::new(3)?;
    for s in [[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0], [1, 2, 1, 0, 1, 0]] {
        let s = StraightParams::from_array(s);
        let m = StructureMatrix::straight(f, &s);
        let d = is_ec_definitional(&m);
        println!(
            "S{:?} over GF(3): definitional {}, general {}, straight {}, residuals {:?}",
            s.to_array(),
            d.is_ec,
            is_ec_general(&m).is_ec,
            is_ec_straight(&f, &s).is_ec,
            general_residuals(&m),
        );
        if let Some((x, y)) = d.counterexample {
            println!("  counterexample x = {x:?}, y = {y:?}");
        }
    }

    let q = Rationals;
    let s = StraightParams::from_array(["8", "0", "0", "0", "0", "0"].map(|v| v.parse().unwrap()));
    println!(
        "S(8,0,0,0,0,0) over Q: {}",
        is_ec_general(&StructureMatrix::straight(q, &s)).is_ec
    );
    Ok(())
}
