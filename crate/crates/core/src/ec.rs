//! Endo-commutativity: `x²y² = (xy)²` for all `x, y`.
//!
//! Three deciders are provided so that each can be checked against the others:
//! a definitional sweep over all element pairs (finite fields only), the
//! eight cubic equations in the structure constants, and the five equations
//! specialised to the straight form `S(p, q, a, b, c, d)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{all_elements, Element, StraightParams, StructureMatrix};
use crate::field::{Field, Gf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EcMethod {
    Definitional,
    GeneralSystem,
    StraightSystem,
}

/// Outcome of an endo-commutativity test.
///
/// A negative verdict carries either the 1-based index of the first failing
/// equation (polynomial methods) or the first violating pair (definitional).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EcVerdict<E> {
    pub is_ec: bool,
    pub method: EcMethod,
    pub failing_equation: Option<usize>,
    pub counterexample: Option<(Element<E>, Element<E>)>,
}

impl<E> EcVerdict<E> {
    fn from_residuals<F: Field<Elem = E>>(field: &F, method: EcMethod, residuals: &[E]) -> Self {
        let failing = residuals
            .iter()
            .position(|r| !field.is_zero(r))
            .map(|i| i + 1);
        EcVerdict {
            is_ec: failing.is_none(),
            method,
            failing_equation: failing,
            counterexample: None,
        }
    }
}

/// `lhs − rhs` for each of the eight cubic equations in `a₁, b₁, …, a₄, b₄`,
/// numbered top to bottom.
pub fn general_residuals<F: Field>(m: &StructureMatrix<F>) -> [F::Elem; 8] {
    let f = m.field();
    let [a1, b1, a2, b2, a3, b3, a4, b4] = m.entries();
    let s = |terms: &[&[&F::Elem]]| f.sum_of_products(terms);
    let eq = |lhs: F::Elem, rhs: F::Elem| f.sub(&lhs, &rhs);
    [
        eq(
            s(&[&[a1, a1, a2], &[b1, a2, b2], &[a1, b2, a3], &[b1, a2, a4]]),
            s(&[&[a1, a3, a3], &[a2, b3, b3], &[a3, a3, b3], &[a3, b3, a4]]),
        ),
        eq(
            s(&[&[a1, a1, a2], &[b1, a2, b2], &[b1, a2, a3], &[a1, b2, a4]]),
            s(&[&[a1, a4, a4], &[a2, b4, b4], &[a3, a4, b4], &[a4, a4, b4]]),
        ),
        eq(
            s(&[&[a1, a1, a4], &[b1, a4, a4], &[b1, a2, b4], &[a1, a3, b4]]),
            s(&[&[a1, a1, a3], &[b1, a2, b3], &[b1, a3, a3], &[a1, b3, a4]]),
        ),
        eq(
            s(&[&[a2, a1, a4], &[a2, a4, b4], &[a2, b2, b4]]),
            s(&[&[a2, a1, a3], &[a2, b2, b3], &[a2, a3, b3]]),
        ),
        eq(
            s(&[&[a1, b1, a2], &[b1, b2, b2], &[a1, b2, b3], &[b1, a2, b4]]),
            s(&[&[b1, a3, a3], &[b2, b3, b3], &[a3, b3, b3], &[a3, b3, b4]]),
        ),
        eq(
            s(&[&[a1, b1, a2], &[b1, b2, b2], &[b1, a2, b3], &[a1, b2, b4]]),
            s(&[&[b1, a4, a4], &[b2, b4, b4], &[b3, a4, b4], &[a4, b4, b4]]),
        ),
        eq(
            s(&[&[b1, a1, a4], &[b1, a4, b4], &[b1, b2, b4]]),
            s(&[&[b1, a1, a3], &[b1, b2, b3], &[b1, a3, b3]]),
        ),
        eq(
            s(&[&[b1, a2, a4], &[b2, b3, a4], &[b2, b2, b4], &[a2, b4, b4]]),
            s(&[&[b1, a2, a3], &[b2, b2, b3], &[a2, b3, b3], &[b2, a3, b4]]),
        ),
    ]
}

pub fn is_ec_general<F: Field>(m: &StructureMatrix<F>) -> EcVerdict<F::Elem> {
    EcVerdict::from_residuals(m.field(), EcMethod::GeneralSystem, &general_residuals(m))
}

/// `lhs − rhs` for the five equations characterising endo-commutative
/// `S(p, q, a, b, c, d)`, numbered top to bottom.
pub fn straight_residuals<F: Field>(field: &F, s: &StraightParams<F::Elem>) -> [F::Elem; 5] {
    let f = field;
    let StraightParams { p, q, a, b, c, d } = s;
    let sp = |terms: &[&[&F::Elem]]| f.sum_of_products(terms);
    let b_minus_d = f.sub(b, d);
    let d_minus_b = f.sub(d, b);
    let c_minus_a = f.sub(c, a);
    // p(b + d) − q(a + c)
    let inner = f.sub(&f.mul(p, &f.add(b, d)), &f.mul(q, &f.add(a, c)));
    [
        // pq + pc = pb² + a²b + abc
        f.sub(
            &sp(&[&[p, q], &[p, c]]),
            &sp(&[&[p, b, b], &[a, a, b], &[a, b, c]]),
        ),
        // p(c − a) = (b − d){p(b + d) − q(a + c)}
        f.sub(&f.mul(p, &c_minus_a), &f.mul(&b_minus_d, &inner)),
        // p(d − b) = a² − c²
        f.sub(&f.mul(p, &d_minus_b), &f.sub(&f.mul(a, a), &f.mul(c, c))),
        // q² + pd = a² + qb² + ab² + abd
        f.sub(
            &sp(&[&[q, q], &[p, d]]),
            &sp(&[&[a, a], &[q, b, b], &[a, b, b], &[a, b, d]]),
        ),
        // q(d − b) = ab − cd
        f.sub(&f.mul(q, &d_minus_b), &f.sub(&f.mul(a, b), &f.mul(c, d))),
    ]
}

pub fn is_ec_straight<F: Field>(field: &F, s: &StraightParams<F::Elem>) -> EcVerdict<F::Elem> {
    EcVerdict::from_residuals(
        field,
        EcMethod::StraightSystem,
        &straight_residuals(field, s),
    )
}

/// Checks `x²y² = (xy)²` on every pair, `x` outer and `y` inner, both in
/// lexicographic `(α, β)` order. The first violating pair is reported.
pub fn is_ec_definitional(m: &StructureMatrix<Gf>) -> EcVerdict<u64> {
    let elements = all_elements(m.field());
    let squares: Vec<Element<u64>> = elements.iter().map(|x| m.square(x)).collect();
    let violation = (0..elements.len()).into_par_iter().find_map_first(|i| {
        let x = &elements[i];
        elements.iter().zip(&squares).find_map(|(y, y2)| {
            let lhs = m.multiply(&squares[i], y2);
            let rhs = m.square(&m.multiply(x, y));
            (lhs != rhs).then(|| (x.clone(), y.clone()))
        })
    });
    EcVerdict {
        is_ec: violation.is_none(),
        method: EcMethod::Definitional,
        failing_equation: None,
        counterexample: violation,
    }
}

/// Sequential variant of [`is_ec_definitional`] for callers already running
/// inside a parallel sweep.
pub fn is_ec_definitional_seq(m: &StructureMatrix<Gf>) -> bool {
    let elements = all_elements(m.field());
    let squares: Vec<Element<u64>> = elements.iter().map(|x| m.square(x)).collect();
    elements.iter().zip(&squares).all(|(x, x2)| {
        elements
            .iter()
            .zip(&squares)
            .all(|(y, y2)| m.multiply(x2, y2) == m.square(&m.multiply(x, y)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn gf(p: u64) -> Gf {
        Gf::new(p).unwrap()
    }

    fn s(p: u64, v: [u64; 6]) -> (Gf, StraightParams<u64>) {
        (gf(p), StraightParams::from_array(v))
    }

    #[test]
    fn definitional_examples() {
        let (f, p) = s(2, [1, 0, 0, 0, 0, 0]);
        assert!(is_ec_definitional(&StructureMatrix::straight(f, &p)).is_ec);
        assert!(is_ec_definitional(&StructureMatrix::zero(gf(3))).is_ec);

        let (f, p) = s(3, [0, 0, 0, 0, 1, 0]);
        let m = StructureMatrix::straight(f, &p);
        let v = is_ec_definitional(&m);
        assert!(!v.is_ec);
        let (x, y) = v.counterexample.clone().expect("counterexample");
        assert_ne!(
            m.multiply(&m.square(&x), &m.square(&y)),
            m.square(&m.multiply(&x, &y))
        );
        assert_eq!(v.failing_equation, None);
        assert!(!is_ec_definitional_seq(&m));
    }

    #[test]
    fn general_system_examples() {
        let q = Rationals;
        let s1 = StraightParams::type_one(&q, q.one());
        assert!(is_ec_general(&StructureMatrix::straight(q, &s1)).is_ec);
        assert!(is_ec_general(&StructureMatrix::zero(gf(5))).is_ec);

        let (f, p) = s(5, [0, 0, 1, 0, 0, 0]);
        let v = is_ec_general(&StructureMatrix::straight(f, &p));
        assert!(!v.is_ec);
        assert!(v.failing_equation.is_some());
        assert!(v.counterexample.is_none());
    }

    #[test]
    fn straight_system_examples() {
        for p in 0..7 {
            let (f, t) = s(7, [p, 0, 0, 0, 0, 0]);
            assert!(is_ec_straight(&f, &t).is_ec);
        }
        // (0, q, 0, b, c, d) with c ≠ 0 fails: the third equation reads 0 = −c²
        let (f, t) = s(7, [0, 2, 0, 3, 1, 5]);
        let v = is_ec_straight(&f, &t);
        assert!(!v.is_ec);
        // p = a = 0, c ≠ 0 always leaves 0 = c² in the third equation
        assert_eq!(straight_residuals(&f, &t)[2], 1);
        let (f, t) = s(3, [0; 6]);
        assert!(is_ec_straight(&f, &t).is_ec);
    }

    #[test]
    fn straight_system_matches_general_system_over_gf3() {
        let f = gf(3);
        for idx in 0..729u64 {
            let mut v = [0u64; 6];
            let mut k = idx;
            for slot in v.iter_mut() {
                *slot = k % 3;
                k /= 3;
            }
            let t = StraightParams::from_array(v);
            assert_eq!(
                is_ec_straight(&f, &t).is_ec,
                is_ec_general(&StructureMatrix::straight(f, &t)).is_ec,
                "{v:?}"
            );
        }
    }
}
