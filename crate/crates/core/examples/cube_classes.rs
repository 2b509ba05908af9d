//! Cube classes of K*: the relations ∼ and ≈, representative systems, and
//! prime-exponent signatures over Q.

use ecalg::cubes::{
    approx_equiv, cube_subgroup, q_signature, CubeClassPartition, CubeRelation, RepSystem,
};
use ecalg::Gf;
use num_rational::BigRational;

fn main() -> ecalg::Result<()> {
    for p in [7, 11, 13] {
        let f = Gf::new(p)?;
        println!("GF({p}): cubes {:?}", cube_subgroup(&f));
        println!(
            "  ∼-classes {:?}",
            CubeClassPartition::new(&f, CubeRelation::Sim).classes
        );
        println!(
            "  ≈-classes {:?}",
            CubeClassPartition::new(&f, CubeRelation::Approx).classes
        );
        println!("  representatives {:?}", RepSystem::new(&f).reps);
    }
    let f = Gf::new(7)?;
    println!("2 ≈ 4 over GF(7): {}", approx_equiv(&f, &2, &4)?);

    for r in ["2/3", "16/54", "-8"] {
        let r: BigRational = r.parse().unwrap();
        println!("signature of {r}: {}", q_signature(&r)?);
    }
    Ok(())
}
