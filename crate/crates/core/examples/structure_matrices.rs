//! Structure matrices: products, identities, associativity, rank, curledness.

use ecalg::report::multiplication_table;
use ecalg::{Element, Gf, StraightParams, StructureMatrix};

fn main() -> ecalg::Result<()> {
    let f = Gf::new(7)?;
    let s = StructureMatrix::straight(f, &StraightParams::type_one(&f, 2));
    println!(
        "{}",
        multiplication_table(&s, "S(2,0,0,0,0,0) over GF(7)").to_markdown()
    );
    let x = Element::new(3, 4);
    println!("x = 3e + 4f, x² = {:?}", s.square(&x));
    println!(
        "commutative {}, identity {:?}, associative {}, rank {}, straight {}",
        s.is_commutative(),
        s.find_identity(),
        s.is_associative(),
        s.rank(),
        s.is_straight()
    );

    // K × K: e² = e, f² = f, ef = fe = 0
    let g2 = Gf::new(2)?;
    let kk = StructureMatrix::new(g2, [[1, 0], [0, 1], [0, 0], [0, 0]]);
    println!(
        "K×K over GF(2): unital {:?}, symbolically curled {}, pointwise curled {}",
        kk.find_identity(),
        kk.is_curled(),
        kk.is_curled_pointwise()
    );
    Ok(())
}
