//! Isomorphism of 2-dimensional algebras.
//!
//! A basis change `X ∈ GL₂(K)` acts on a structure matrix by
//! `A ↦ X̃⁻¹ A X`; two algebras are isomorphic exactly when some `X` carries
//! one structure matrix to the other. Over finite fields this is decided by
//! scanning `GL₂`; for the type I family `S(p, 0, 0, 0, 0, 0)` the answer
//! is constructive over any field via cube classes.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{StraightParams, StructureMatrix, TransformMatrix};
use crate::cubes::{sim_equiv, CubeClasses};
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::linalg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IsoMethod {
    /// Scan of all of `GL₂(GF(p))` against the full structure matrices.
    BruteForce,
    /// Scan of `GL₂(GF(p))` against the eight straight-form equations.
    StraightSystem,
    /// Type I pair with `p = p′x³`, witness `[[x, 0], [0, x²]]`.
    CubeRatio,
    /// Type I pair with `p² = p′z³`, witness `[[0, z²/p], [z, 0]]`.
    SquareCubeRatio,
}

/// Result of an isomorphism query. When `found`, `transform` carries the
/// first source algebra to the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness<E> {
    pub found: bool,
    pub transform: Option<TransformMatrix<E>>,
    pub method: IsoMethod,
}

impl<E> IsoWitness<E> {
    fn none(method: IsoMethod) -> Self {
        IsoWitness {
            found: false,
            transform: None,
            method,
        }
    }

    fn with(x: TransformMatrix<E>, method: IsoMethod) -> Self {
        IsoWitness {
            found: true,
            transform: Some(x),
            method,
        }
    }
}

/// The structure matrix of `A` in the basis changed by `X`: `X̃⁻¹ A X`.
pub fn transform<F: Field>(
    a: &StructureMatrix<F>,
    x: &TransformMatrix<F::Elem>,
) -> Result<StructureMatrix<F>> {
    let field = a.field();
    if !x.is_invertible(field) {
        return Err(Error::domain("transformation matrix is singular"));
    }
    let tilde_inv = linalg::inverse(field, &x.tilde(field).to_matrix())?;
    let ax = linalg::multiply(field, &a.to_matrix(), &x.to_matrix());
    let out = linalg::multiply(field, &tilde_inv, &ax);
    Ok(StructureMatrix::from_matrix(field.clone(), &out))
}

/// `X̃ A′ = A X`, the inversion-free form of `A′ = X̃⁻¹ A X`.
pub fn carries<F: Field>(
    a: &StructureMatrix<F>,
    x: &TransformMatrix<F::Elem>,
    target: &StructureMatrix<F>,
) -> bool {
    let f = a.field();
    let t = x.tilde(f);
    let (ar, tr) = (a.rows(), target.rows());
    (0..4).all(|i| {
        let lhs = |j: usize| {
            (0..4).fold(f.zero(), |acc, k| {
                f.add(&acc, &f.mul(&t.0[i][k], &tr[k][j]))
            })
        };
        let rhs0 = f.add(&f.mul(&ar[i][0], &x.x), &f.mul(&ar[i][1], &x.z));
        let rhs1 = f.add(&f.mul(&ar[i][0], &x.y), &f.mul(&ar[i][1], &x.w));
        lhs(0) == rhs0 && lhs(1) == rhs1
    })
}

fn confirm<F: Field>(
    a: &StructureMatrix<F>,
    target: &StructureMatrix<F>,
    witness: IsoWitness<F::Elem>,
) -> Result<IsoWitness<F::Elem>> {
    if let Some(x) = &witness.transform {
        if &transform(a, x)? != target {
            return Err(Error::InvariantViolation(format!(
                "witness {x:?} from {:?} does not transform the structure matrix",
                witness.method
            )));
        }
    }
    Ok(witness)
}

/// First `X` in `candidates` with `X̃⁻¹ A X = A′`, scanning in order.
pub fn first_carrying(
    a: &StructureMatrix<Gf>,
    target: &StructureMatrix<Gf>,
    candidates: &[TransformMatrix<u64>],
) -> Option<TransformMatrix<u64>> {
    candidates.iter().find(|x| carries(a, x, target)).cloned()
}

/// Exhaustive isomorphism test over `GL₂(GF(p))` in lexicographic order.
pub fn are_isomorphic_bruteforce(
    a: &StructureMatrix<Gf>,
    target: &StructureMatrix<Gf>,
) -> Result<IsoWitness<u64>> {
    a.same_field(target)?;
    let gl2 = TransformMatrix::general_linear(a.field());
    let hit = gl2
        .par_iter()
        .find_first(|x| carries(a, x, target))
        .cloned();
    let witness = match hit {
        Some(x) => IsoWitness::with(x, IsoMethod::BruteForce),
        None => IsoWitness::none(IsoMethod::BruteForce),
    };
    confirm(a, target, witness)
}

/// `lhs − rhs` of the eight equations in `x, y, z, w` stating that
/// `[[x, y], [z, w]]` carries `S(p,q,a,b,c,d)` to `S(p′,q′,a′,b′,c′,d′)`.
pub fn straight_iso_residuals<F: Field>(
    field: &F,
    s: &StraightParams<F::Elem>,
    t: &StraightParams<F::Elem>,
    m: &TransformMatrix<F::Elem>,
) -> [F::Elem; 8] {
    let f = field;
    let (x, y, z, w) = (&m.x, &m.y, &m.z, &m.w);
    let StraightParams { p, q, a, b, c, d } = s;
    let StraightParams {
        p: p2,
        q: q2,
        a: a2,
        b: b2,
        c: c2,
        d: d2,
    } = t;
    let sp = |terms: &[&[&F::Elem]]| f.sum_of_products(terms);
    let ac2 = f.add(a2, c2);
    let bd2 = f.add(b2, d2);
    [
        // p′y² + (a′+c′)xy = z
        f.sub(&sp(&[&[p2, y, y], &[&ac2, x, y]]), z),
        // x² + q′y² + (b′+d′)xy = w
        f.sub(&sp(&[&[x, x], &[q2, y, y], &[&bd2, x, y]]), w),
        // p′w² + (a′+c′)zw = px + qz
        f.sub(&sp(&[&[p2, w, w], &[&ac2, z, w]]), &sp(&[&[p, x], &[q, z]])),
        // z² + q′w² + (b′+d′)zw = py + qw
        f.sub(
            &sp(&[&[z, z], &[q2, w, w], &[&bd2, z, w]]),
            &sp(&[&[p, y], &[q, w]]),
        ),
        // p′yw + a′xw + c′yz = ax + bz
        f.sub(
            &sp(&[&[p2, y, w], &[a2, x, w], &[c2, y, z]]),
            &sp(&[&[a, x], &[b, z]]),
        ),
        // xz + q′yw + b′xw + d′yz = ay + bw
        f.sub(
            &sp(&[&[x, z], &[q2, y, w], &[b2, x, w], &[d2, y, z]]),
            &sp(&[&[a, y], &[b, w]]),
        ),
        // p′yw + a′yz + c′xw = cx + dz
        f.sub(
            &sp(&[&[p2, y, w], &[a2, y, z], &[c2, x, w]]),
            &sp(&[&[c, x], &[d, z]]),
        ),
        // xz + q′yw + b′yz + d′xw = cy + dw
        f.sub(
            &sp(&[&[x, z], &[q2, y, w], &[b2, y, z], &[d2, x, w]]),
            &sp(&[&[c, y], &[d, w]]),
        ),
    ]
}

/// Isomorphism of two straight algebras through the straight-form equations,
/// scanning `GL₂(GF(p))` lexicographically.
pub fn straight_iso_search(
    field: &Gf,
    s: &StraightParams<u64>,
    t: &StraightParams<u64>,
) -> Result<IsoWitness<u64>> {
    let gl2 = TransformMatrix::general_linear(field);
    let hit = gl2
        .par_iter()
        .find_first(|x| {
            straight_iso_residuals(field, s, t, x)
                .iter()
                .all(|r| *r == 0)
        })
        .cloned();
    let witness = match hit {
        Some(x) => IsoWitness::with(x, IsoMethod::StraightSystem),
        None => IsoWitness::none(IsoMethod::StraightSystem),
    };
    confirm(
        &StructureMatrix::straight(*field, s),
        &StructureMatrix::straight(*field, t),
        witness,
    )
}

/// `lhs − rhs` of the six equations for `X` to carry `S(p,0,0,0,0,0)` to
/// `S(p′,0,0,0,0,0)`: `p′y² = z, x² = w, p′w² = px, z² = py, yw = 0, xz = 0`.
pub fn type_one_residuals<F: Field>(
    field: &F,
    p: &F::Elem,
    p_target: &F::Elem,
    m: &TransformMatrix<F::Elem>,
) -> [F::Elem; 6] {
    let f = field;
    let (x, y, z, w) = (&m.x, &m.y, &m.z, &m.w);
    [
        f.sub(&f.mul(p_target, &f.square(y)), z),
        f.sub(&f.square(x), w),
        f.sub(&f.mul(p_target, &f.square(w)), &f.mul(p, x)),
        f.sub(&f.square(z), &f.mul(p, y)),
        f.mul(y, w),
        f.mul(x, z),
    ]
}

/// Decides `S(p,0,0,0,0,0) ≅ S(p′,0,0,0,0,0)` (true iff `p ≈ p′`) and
/// constructs the transformation matrix when it holds. Works over any field
/// that can extract cube roots, including Q.
pub fn type_one_iso_decide<F: CubeClasses>(
    field: &F,
    p: &F::Elem,
    p_target: &F::Elem,
) -> Result<IsoWitness<F::Elem>> {
    if field.is_zero(p) || field.is_zero(p_target) {
        return Err(Error::domain("type I parameters must be nonzero"));
    }
    let zero = field.zero();
    let witness = if sim_equiv(field, p, p_target)? {
        // p = p′x³
        let x = root_of(field, &field.div(p, p_target)?)?;
        let w = field.square(&x);
        IsoWitness::with(
            TransformMatrix::new(x, zero.clone(), zero, w),
            IsoMethod::CubeRatio,
        )
    } else if sim_equiv(field, &field.square(p), p_target)? {
        // p² = p′z³
        let z = root_of(field, &field.div(&field.square(p), p_target)?)?;
        let y = field.div(&field.square(&z), p)?;
        IsoWitness::with(
            TransformMatrix::new(zero.clone(), y, z, zero),
            IsoMethod::SquareCubeRatio,
        )
    } else {
        IsoWitness::none(IsoMethod::CubeRatio)
    };

    if let Some(x) = &witness.transform {
        if !x.is_invertible(field)
            || type_one_residuals(field, p, p_target, x)
                .iter()
                .any(|r| !field.is_zero(r))
        {
            return Err(Error::InvariantViolation(format!(
                "constructed witness {x:?} fails the type I isomorphism equations"
            )));
        }
    }
    let source =
        StructureMatrix::straight(field.clone(), &StraightParams::type_one(field, p.clone()));
    let target = StructureMatrix::straight(
        field.clone(),
        &StraightParams::type_one(field, p_target.clone()),
    );
    confirm(&source, &target, witness)
}

fn root_of<F: CubeClasses>(field: &F, a: &F::Elem) -> Result<F::Elem> {
    field.cube_root(a)?.ok_or_else(|| {
        Error::InvariantViolation(format!(
            "{} is a cube but no root was found",
            field.format(a)
        ))
    })
}

/// If `X` carries `A` to `B` and `Y` carries `B` to `C`, then `XY` carries
/// `A` to `C`.
pub fn compose_witnesses<F: Field>(
    field: &F,
    first: &TransformMatrix<F::Elem>,
    second: &TransformMatrix<F::Elem>,
) -> TransformMatrix<F::Elem> {
    first.compose(field, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn gf(p: u64) -> Gf {
        Gf::new(p).unwrap()
    }

    fn type_one(p: u64, v: u64) -> StructureMatrix<Gf> {
        StructureMatrix::straight(gf(p), &StraightParams::type_one(&gf(p), v))
    }

    #[test]
    fn identity_transform() {
        let a = StructureMatrix::from_entries(gf(5), [1, 2, 3, 4, 0, 1, 2, 3]);
        assert_eq!(
            transform(&a, &TransformMatrix::identity(&gf(5))).unwrap(),
            a
        );
        assert!(transform(&a, &TransformMatrix::new(1, 2, 2, 4)).is_err());
    }

    #[test]
    fn rational_type_one_transform() {
        let q = Rationals;
        let s8 = StructureMatrix::straight(q, &StraightParams::type_one(&q, q.from_i64(8)));
        let s1 = StructureMatrix::straight(q, &StraightParams::type_one(&q, q.one()));
        let x = TransformMatrix::new(q.from_i64(2), q.zero(), q.zero(), q.from_i64(4));
        assert_eq!(transform(&s8, &x).unwrap(), s1);
        assert!(carries(&s8, &x, &s1));
    }

    #[test]
    fn bruteforce_examples() {
        let a = type_one(7, 3);
        let w = are_isomorphic_bruteforce(&a, &a).unwrap();
        assert!(w.found);
        assert!(
            are_isomorphic_bruteforce(&type_one(7, 2), &type_one(7, 4))
                .unwrap()
                .found
        );
        assert!(
            !are_isomorphic_bruteforce(&type_one(7, 1), &type_one(7, 2))
                .unwrap()
                .found
        );
        assert!(are_isomorphic_bruteforce(&type_one(7, 1), &type_one(5, 1)).is_err());
    }

    #[test]
    fn straight_search_examples() {
        let f = gf(7);
        let s = StraightParams::from_array([3, 1, 2, 0, 5, 6]);
        let w = straight_iso_search(&f, &s, &s).unwrap();
        assert_eq!(w.transform, Some(TransformMatrix::identity(&f)));

        let (s2, s4) = (
            StraightParams::type_one(&f, 2),
            StraightParams::type_one(&f, 4),
        );
        let w = straight_iso_search(&f, &s2, &s4).unwrap();
        let x = w.transform.unwrap();
        assert!(type_one_residuals(&f, &2, &4, &x).iter().all(|r| *r == 0));

        let f3 = gf(3);
        let w = straight_iso_search(
            &f3,
            &StraightParams::from_array([0; 6]),
            &StraightParams::type_one(&f3, 1),
        )
        .unwrap();
        assert!(!w.found);
    }

    #[test]
    fn type_one_witnesses() {
        let q = Rationals;
        let w = type_one_iso_decide(&q, &q.from_i64(8), &q.one()).unwrap();
        assert_eq!(w.method, IsoMethod::CubeRatio);
        assert_eq!(
            w.transform,
            Some(TransformMatrix::new(
                q.from_i64(2),
                q.zero(),
                q.zero(),
                q.from_i64(4)
            ))
        );

        let f = gf(7);
        let w = type_one_iso_decide(&f, &2, &4).unwrap();
        assert_eq!(w.method, IsoMethod::SquareCubeRatio);
        assert_eq!(w.transform, Some(TransformMatrix::new(0, 4, 1, 0)));

        let w = type_one_iso_decide(&f, &5, &5).unwrap();
        assert_eq!(w.transform, Some(TransformMatrix::identity(&f)));

        assert!(!type_one_iso_decide(&f, &1, &2).unwrap().found);
        assert!(
            !type_one_iso_decide(&q, &q.from_i64(2), &q.from_i64(3))
                .unwrap()
                .found
        );
        assert!(matches!(
            type_one_iso_decide(&f, &0, &2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn composed_witness_carries_through() {
        let f = gf(13);
        let w1 = type_one_iso_decide(&f, &2, &3).unwrap().transform.unwrap();
        let w2 = type_one_iso_decide(&f, &3, &11).unwrap().transform.unwrap();
        let x = compose_witnesses(&f, &w1, &w2);
        assert_eq!(transform(&type_one(13, 2), &x).unwrap(), type_one(13, 11));
    }
}
