use ecalg::classify::enumerate_ecs;
use ecalg::cubes::{approx_equiv, sim_equiv, CubeClasses};
use ecalg::ec::is_ec_general;
use ecalg::iso::{are_isomorphic_bruteforce, carries, straight_iso_search, transform};
use ecalg::{Element, Field, Gf, Rationals, StraightParams, StructureMatrix, TransformMatrix};
use num_rational::BigRational;
use proptest::prelude::*;

const PRIMES: [u64; 7] = [2, 3, 5, 7, 13, 65_537, (1 << 61) - 1];

fn gf(p: u64) -> Gf {
    Gf::new(p).unwrap()
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..30).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn field_and_elems(n: usize) -> impl Strategy<Value = (u64, Vec<u64>)> {
    prop::sample::select(PRIMES.to_vec())
        .prop_flat_map(move |p| (Just(p), prop::collection::vec(0..p, n)))
}

fn check_axioms<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) {
    assert_eq!(f.add(a, b), f.add(b, a));
    assert_eq!(f.mul(a, b), f.mul(b, a));
    assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
    assert_eq!(f.add(a, &f.neg(a)), f.zero());
    assert_eq!(f.sub(a, b), f.add(a, &f.neg(b)));
    assert_eq!(f.mul(a, &f.one()), a.clone());
    if f.is_zero(a) {
        assert!(f.inv(a).is_err());
    } else {
        assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
    }
    assert_eq!(f.parse(&f.format(a)).unwrap(), a.clone());
}

proptest! {
    #[test]
    fn prime_field_axioms((p, v) in field_and_elems(3)) {
        check_axioms(&gf(p), &v[0], &v[1], &v[2]);
    }

    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        check_axioms(&Rationals, &a, &b, &c);
    }

    #[test]
    fn multiplication_is_bilinear((p, v) in field_and_elems(15)) {
        let f = gf(p);
        let m = StructureMatrix::from_entries(f, std::array::from_fn(|i| v[i]));
        let (u, w, x) = (
            Element::new(v[8], v[9]),
            Element::new(v[10], v[11]),
            Element::new(v[12], v[13]),
        );
        let k = v[14];
        prop_assert_eq!(
            m.multiply(&u.add(&f, &w), &x),
            m.multiply(&u, &x).add(&f, &m.multiply(&w, &x))
        );
        prop_assert_eq!(
            m.multiply(&x, &u.add(&f, &w)),
            m.multiply(&x, &u).add(&f, &m.multiply(&x, &w))
        );
        prop_assert_eq!(m.multiply(&u.scale(&f, &k), &x), m.multiply(&u, &x).scale(&f, &k));
        prop_assert_eq!(m.multiply(&u, &x.scale(&f, &k)), m.multiply(&u, &x).scale(&f, &k));
    }

    #[test]
    fn tilde_is_multiplicative((p, v) in prop::sample::select(vec![5u64, 7, 13])
        .prop_flat_map(|p| (Just(p), prop::collection::vec(0..p, 8))))
    {
        let f = gf(p);
        let x = TransformMatrix::new(v[0], v[1], v[2], v[3]);
        let y = TransformMatrix::new(v[4], v[5], v[6], v[7]);
        prop_assert_eq!(x.compose(&f, &y).tilde(&f), x.tilde(&f).multiply(&f, &y.tilde(&f)));
        prop_assert_eq!(x.tilde(&f).det(&f), f.pow(&x.det(&f), 4));
    }

    #[test]
    fn rational_approx_of_square(a in small_rational()) {
        prop_assume!(a != BigRational::from_integer(0.into()));
        let q = Rationals;
        prop_assert!(approx_equiv(&q, &a, &q.square(&a)).unwrap());
        prop_assert!(sim_equiv(&q, &a, &q.mul(&a, &q.cube(&BigRational::new(3.into(), 7.into())))).unwrap());
    }

    #[test]
    fn transform_round_trips((p, v) in prop::sample::select(vec![3u64, 5, 7])
        .prop_flat_map(|p| (Just(p), prop::collection::vec(0..p, 12))))
    {
        let f = gf(p);
        let x = TransformMatrix::new(v[8], v[9], v[10], v[11]);
        prop_assume!(x.is_invertible(&f));
        let a = StructureMatrix::from_entries(f, std::array::from_fn(|i| v[i]));
        let b = transform(&a, &x).unwrap();
        prop_assert!(carries(&a, &x, &b));
        prop_assert_eq!(transform(&b, &x.inverse(&f).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(b.rank(), a.rank());
        prop_assert_eq!(b.is_commutative(), a.is_commutative());
        prop_assert_eq!(b.is_associative(), a.is_associative());
        prop_assert_eq!(b.is_curled(), a.is_curled());
    }
}

#[test]
fn cube_relations_are_equivalences() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        let f = gf(p);
        let units: Vec<u64> = f.units().collect();
        for rel in [sim_equiv::<Gf>, approx_equiv::<Gf>] {
            for &a in &units {
                assert!(rel(&f, &a, &a).unwrap());
                for &b in &units {
                    let ab = rel(&f, &a, &b).unwrap();
                    assert_eq!(ab, rel(&f, &b, &a).unwrap());
                    if ab {
                        for &c in &units {
                            if rel(&f, &b, &c).unwrap() {
                                assert!(rel(&f, &a, &c).unwrap(), "GF({p}): {a}, {b}, {c}");
                            }
                        }
                    }
                }
            }
        }
        for &a in &units {
            assert!(approx_equiv(&f, &a, &f.square(&a)).unwrap());
        }
        assert!(sim_equiv(&f, &0, &1).is_err());
    }
}

#[test]
fn cube_rootability_over_small_fields() {
    for p in [2u64, 3, 5, 11, 17] {
        assert!(gf(p).is_cube_rootable(), "GF({p})");
    }
    for p in [7u64, 13, 19] {
        assert!(!gf(p).is_cube_rootable(), "GF({p})");
    }
}

#[test]
fn endo_commutativity_is_invariant_under_isomorphism() {
    for p in [3u64, 5] {
        let f = gf(p);
        let census = enumerate_ecs(&f, 13).unwrap();
        let gl2 = TransformMatrix::general_linear(&f);
        for (i, s) in census.members.values().flatten().enumerate().step_by(5) {
            let a = StructureMatrix::straight(f, s);
            let x = &gl2[(i * 31) % gl2.len()];
            assert!(
                is_ec_general(&transform(&a, x).unwrap()).is_ec,
                "{s:?} under {x:?}"
            );
        }
    }
}

#[test]
fn straight_search_agrees_with_full_search() {
    let f = gf(3);
    let census = enumerate_ecs(&f, 13).unwrap();
    let all: Vec<&StraightParams<u64>> = census.members.values().flatten().collect();
    for s in all.iter().step_by(4) {
        for t in all.iter().step_by(9) {
            let full = are_isomorphic_bruteforce(
                &StructureMatrix::straight(f, s),
                &StructureMatrix::straight(f, t),
            )
            .unwrap();
            let straight = straight_iso_search(&f, s, t).unwrap();
            assert_eq!(full.found, straight.found, "{s:?} vs {t:?}");
            assert_eq!(full.transform, straight.transform);
        }
    }
}
