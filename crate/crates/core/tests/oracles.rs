//! Library results checked against small, independent reimplementations that
//! work directly from definitions: plain modular arithmetic, algebra maps
//! checked on a basis, cubes found by enumeration.

use std::collections::BTreeSet;

use ecalg::classify::{enumerate_ecs, type1_classification, AlgebraType, Subfamily};
use ecalg::cubes::{
    approx_equiv, q_signature, sim_equiv, CubeClassPartition, CubeRelation, RepSystem,
};
use ecalg::ec::{is_ec_general, is_ec_straight};
use ecalg::iso::are_isomorphic_bruteforce;
use ecalg::{Gf, StraightParams, StructureMatrix, TransformMatrix};
use num_rational::BigRational;

type Rows = [[u64; 2]; 4];

/// `(α, β)·(γ, δ)` from the rows `e², f², ef, fe`.
fn mul(p: u64, r: &Rows, u: (u64, u64), v: (u64, u64)) -> (u64, u64) {
    let coeff = [u.0 * v.0, u.1 * v.1, u.0 * v.1, u.1 * v.0];
    let mut out = (0, 0);
    for (k, c) in coeff.iter().enumerate() {
        out.0 = (out.0 + c % p * r[k][0]) % p;
        out.1 = (out.1 + c % p * r[k][1]) % p;
    }
    out
}

fn ec_by_definition(p: u64, r: &Rows) -> bool {
    let elems: Vec<(u64, u64)> = (0..p).flat_map(|a| (0..p).map(move |b| (a, b))).collect();
    elems.iter().all(|&x| {
        elems.iter().all(|&y| {
            let lhs = mul(p, r, mul(p, r, x, x), mul(p, r, y, y));
            let xy = mul(p, r, x, y);
            lhs == mul(p, r, xy, xy)
        })
    })
}

fn straight_rows(s: [u64; 6]) -> Rows {
    [[0, 1], [s[0], s[1]], [s[2], s[3]], [s[4], s[5]]]
}

fn gf(p: u64) -> Gf {
    Gf::new(p).unwrap()
}

/// `φ(e) = (x, y)`, `φ(f) = (z, w)`; is `φ` multiplicative from `a` to `b`?
fn is_algebra_map(p: u64, a: &Rows, b: &Rows, phi: [u64; 4]) -> bool {
    let img = |u: (u64, u64)| {
        (
            (u.0 * phi[0] + u.1 * phi[2]) % p,
            (u.0 * phi[1] + u.1 * phi[3]) % p,
        )
    };
    let basis = [(1, 0), (0, 1)];
    basis.iter().all(|&u| {
        basis
            .iter()
            .all(|&v| img(mul(p, a, u, v)) == mul(p, b, img(u), img(v)))
    })
}

fn isomorphic_by_definition(p: u64, a: &Rows, b: &Rows) -> bool {
    (0..p.pow(4)).any(|i| {
        let phi = [i / p.pow(3), i / p.pow(2) % p, i / p % p, i % p];
        (phi[0] * phi[3] + p * p - phi[1] * phi[2] % p) % p != 0 && is_algebra_map(p, a, b, phi)
    })
}

#[test]
fn census_matches_definitional_sweep() {
    for p in [2u64, 3, 5] {
        let census = enumerate_ecs(&gf(p), 13).unwrap();
        let mut ec = 0;
        let mut by_type = [0usize; 4];
        for idx in 0..p.pow(6) {
            let s: [u64; 6] = std::array::from_fn(|i| idx / p.pow(5 - i as u32) % p);
            if ec_by_definition(p, &straight_rows(s)) {
                ec += 1;
                let nz = [s[0], s[2], s[4]].iter().filter(|v| **v != 0).count();
                by_type[nz] += 1;
            }
        }
        assert_eq!(census.ec_total, ec, "GF({p})");
        assert_eq!(census.not_rank2, by_type[0]);
        assert_eq!(census.count(AlgebraType::TypeI), by_type[1]);
        assert_eq!(census.count(AlgebraType::TypeII), by_type[2]);
        assert_eq!(census.count(AlgebraType::TypeIII), by_type[3]);
        assert_eq!(census.by_subfamily.get(&Subfamily::E001), None);
        assert_eq!(census.by_subfamily.get(&Subfamily::E010), None);
    }
}

#[test]
fn general_system_matches_definition_on_gf5_samples() {
    let p = 5u64;
    // a deterministic stride through all 5⁸ matrices
    for idx in (0..p.pow(8)).step_by(97) {
        let e: [u64; 8] = std::array::from_fn(|i| idx / p.pow(7 - i as u32) % p);
        let rows = [[e[0], e[1]], [e[2], e[3]], [e[4], e[5]], [e[6], e[7]]];
        let m = StructureMatrix::from_entries(gf(p), e);
        assert_eq!(is_ec_general(&m).is_ec, ec_by_definition(p, &rows), "{e:?}");
    }
}

#[test]
fn type_one_partition_matches_algebra_maps() {
    for p in [2u64, 3, 5, 7, 13] {
        let report = type1_classification(&gf(p)).unwrap();
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for v in 1..p {
            let rows = straight_rows([v, 0, 0, 0, 0, 0]);
            match classes
                .iter_mut()
                .find(|c| isomorphic_by_definition(p, &straight_rows([c[0], 0, 0, 0, 0, 0]), &rows))
            {
                Some(c) => c.push(v),
                None => classes.push(vec![v]),
            }
        }
        let lib: Vec<Vec<u64>> = report
            .type1_classes
            .iter()
            .map(|c| c.members.clone())
            .collect();
        assert_eq!(lib, classes, "GF({p})");
    }
}

#[test]
fn witness_rows_give_an_algebra_map_back() {
    // X carries A to A′ means A is A′ written in the basis e′ = xe + yf,
    // f′ = ze + wf, so e ↦ (x, y), f ↦ (z, w) maps A into A′.
    let p = 7;
    let report = type1_classification(&gf(p)).unwrap();
    for class in &report.type1_classes {
        let source = straight_rows([class.representative, 0, 0, 0, 0, 0]);
        for w in &class.witnesses {
            let target = straight_rows([w.member, 0, 0, 0, 0, 0]);
            for x in [&w.brute_force, &w.constructive] {
                assert!(
                    is_algebra_map(p, &source, &target, [x.x, x.y, x.z, x.w]),
                    "{x:?}"
                );
            }
        }
    }
}

#[test]
fn bruteforce_iso_agrees_with_algebra_maps_on_gf3_straight_algebras() {
    let p = 3u64;
    let f = gf(p);
    let ecs: Vec<[u64; 6]> = (0..p.pow(6))
        .map(|idx| std::array::from_fn(|i| idx / p.pow(5 - i as u32) % p))
        .filter(|s: &[u64; 6]| is_ec_straight(&f, &StraightParams::from_array(*s)).is_ec)
        .collect();
    for (i, s) in ecs.iter().enumerate().step_by(3) {
        for t in ecs.iter().skip(i % 5).step_by(7) {
            let a = StructureMatrix::straight(f, &StraightParams::from_array(*s));
            let b = StructureMatrix::straight(f, &StraightParams::from_array(*t));
            let lib = are_isomorphic_bruteforce(&a, &b).unwrap().found;
            assert_eq!(
                lib,
                isomorphic_by_definition(p, &straight_rows(*s), &straight_rows(*t))
            );
        }
    }
}

fn cubes_by_enumeration(p: u64) -> BTreeSet<u64> {
    (1..p).map(|x| x * x % p * x % p).collect()
}

#[test]
fn cube_relations_match_enumeration() {
    for p in [2u64, 3, 5, 7, 11, 13, 19, 31] {
        let f = gf(p);
        let cubes = cubes_by_enumeration(p);
        let inv = |a: u64| (1..p).find(|b| a * b % p == 1).unwrap();
        let sim = |a: u64, b: u64| cubes.contains(&(a * inv(b) % p));
        let approx = |a: u64, b: u64| sim(a, b) || sim(a * a % p, b) || sim(b * b % p, a);
        for a in 1..p {
            for b in 1..p {
                assert_eq!(sim_equiv(&f, &a, &b).unwrap(), sim(a, b), "GF({p}) {a}∼{b}");
                assert_eq!(
                    approx_equiv(&f, &a, &b).unwrap(),
                    approx(a, b),
                    "GF({p}) {a}≈{b}"
                );
            }
        }
        let partition = CubeClassPartition::new(&f, CubeRelation::Approx);
        let reps = RepSystem::new(&f);
        let expected_classes = if p % 3 == 1 { 2 } else { 1 };
        assert_eq!(partition.classes.len(), expected_classes, "GF({p})");
        assert_eq!(reps.reps.len(), expected_classes);
        for (class, rep) in partition.classes.iter().zip(&reps.reps) {
            assert_eq!(class.iter().min(), Some(rep));
        }
    }
}

fn is_integer_cube(n: u64) -> bool {
    let r = (n as f64).cbrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).any(|k| k * k * k == n)
}

#[test]
fn rational_signatures_match_integer_cube_test() {
    // a/b (coprime, positive) is a cube in Q iff a and b are integer cubes
    for a in 1u64..60 {
        for b in 1u64..60 {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let r = BigRational::new(a.into(), b.into());
            let sig = q_signature(&r).unwrap();
            assert_eq!(
                sig.is_empty(),
                is_integer_cube(a) && is_integer_cube(b),
                "{a}/{b}"
            );
        }
    }
}

#[test]
fn transform_matches_change_of_basis() {
    // B = X̃⁻¹AX exactly when A is B written in the basis given by the rows
    // of X: products of that basis, expressed in it, recover A.
    let p = 5u64;
    let f = gf(p);
    let inv = |a: u64| (1..p).find(|b| a * b % p == 1).unwrap();
    let a: Rows = [[1, 2], [3, 0], [4, 4], [0, 1]];
    let m = StructureMatrix::new(f, a);
    for x in TransformMatrix::general_linear(&f).iter().step_by(11) {
        let (e2, f2) = ((x.x, x.y), (x.z, x.w));
        let det = (x.x * x.w + p * p - x.y * x.z % p) % p;
        let di = inv(det);
        // coordinates of u in the basis (e2, f2)
        let coords = |u: (u64, u64)| {
            (
                (u.0 * x.w + p * p - u.1 * x.z % p) % p * di % p,
                (u.1 * x.x + p * p - u.0 * x.y % p) % p * di % p,
            )
        };
        let b = ecalg::iso::transform(&m, x).unwrap();
        let br = *b.rows();
        let recovered: Rows = [
            mul(p, &br, e2, e2),
            mul(p, &br, f2, f2),
            mul(p, &br, e2, f2),
            mul(p, &br, f2, e2),
        ]
        .map(|u| {
            let c = coords(u);
            [c.0, c.1]
        });
        assert_eq!(recovered, a, "{x:?}");
    }
}
