//! Isomorphism search: exhaustive over GL₂(GF(p)), through the straight-form
//! equations, and constructively for S(p,0,0,0,0,0) over any field.

use ecalg::iso::{are_isomorphic_bruteforce, straight_iso_search, transform, type_one_iso_decide};
use ecalg::{Field, Gf, Rationals, StraightParams, StructureMatrix};
use num_rational::BigRational;

fn main() -> ecalg::Result<()> {
    let f = Gf::new(7)?;
    let alg = |p| StructureMatrix::straight(f, &StraightParams::type_one(&f, p));
    for (a, b) in [(2, 4), (1, 2), (1, 6)] {
        let w = are_isomorphic_bruteforce(&alg(a), &alg(b))?;
        let c = type_one_iso_decide(&f, &a, &b)?;
        println!(
            "GF(7) S({a}) ≅ S({b}): {} brute force {:?}, constructive {:?} via {:?}",
            w.found, w.transform, c.transform, c.method
        );
    }
    // a type II algebra isomorphic to a type I one
    let g3 = Gf::new(3)?;
    let s = StraightParams::type_one(&g3, 1);
    let t = StraightParams::from_array([0, 1, 2, 0, 2, 0]);
    println!(
        "GF(3) S(1) ≅ S{:?} via the straight-form equations: {:?}",
        t.to_array(),
        straight_iso_search(&g3, &s, &t)?.transform
    );

    let q = Rationals;
    let (eight, one) = (
        BigRational::from_integer(8.into()),
        BigRational::from_integer(1.into()),
    );
    let w = type_one_iso_decide(&q, &eight, &one)?;
    let x = w.transform.expect("8 = 1·2³");
    let image = transform(
        &StructureMatrix::straight(q, &StraightParams::type_one(&q, eight)),
        &x,
    )?;
    let fmt = |v: &BigRational| q.format(v);
    println!(
        "Q: X = [[{}, {}], [{}, {}]] carries S(8) to S({})",
        fmt(&x.x),
        fmt(&x.y),
        fmt(&x.z),
        fmt(&x.w),
        image
            .as_straight()
            .map(|s| s.to_array().iter().map(fmt).collect::<Vec<_>>().join(","))
            .unwrap_or_default()
    );
    Ok(())
}
