//! Two-dimensional algebras given by their structure constants.
//!
//! On a basis `{e, f}` an algebra is fixed by the four products
//!
//! ```text
//! e² = a₁e + b₁f    f² = a₂e + b₂f    ef = a₃e + b₃f    fe = a₄e + b₄f
//! ```
//!
//! collected row by row into a 4×2 [`StructureMatrix`].

use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::linalg;

/// An element `αe + βf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element<E> {
    pub alpha: E,
    pub beta: E,
}

impl<E: Clone> Element<E> {
    pub fn new(alpha: E, beta: E) -> Self {
        Element { alpha, beta }
    }
}

impl<E> Element<E> {
    pub fn zero<F: Field<Elem = E>>(field: &F) -> Self {
        Element {
            alpha: field.zero(),
            beta: field.zero(),
        }
    }

    pub fn e<F: Field<Elem = E>>(field: &F) -> Self {
        Element {
            alpha: field.one(),
            beta: field.zero(),
        }
    }

    pub fn f<F: Field<Elem = E>>(field: &F) -> Self {
        Element {
            alpha: field.zero(),
            beta: field.one(),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        Element {
            alpha: field.add(&self.alpha, &other.alpha),
            beta: field.add(&self.beta, &other.beta),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, k: &E) -> Self {
        Element {
            alpha: field.mul(k, &self.alpha),
            beta: field.mul(k, &self.beta),
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        field.is_zero(&self.alpha) && field.is_zero(&self.beta)
    }
}

/// All `p²` elements of an algebra over GF(p), lexicographic in `(α, β)`.
pub fn all_elements(field: &Gf) -> Vec<Element<u64>> {
    field
        .elements()
        .flat_map(|a| field.elements().map(move |b| Element::new(a, b)))
        .collect()
}

/// The six scalars `(p, q, a, b, c, d)` of the straight algebra with
/// `e² = f, f² = pe + qf, ef = ae + bf, fe = ce + df`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StraightParams<E> {
    pub p: E,
    pub q: E,
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E: Clone> StraightParams<E> {
    pub fn new(p: E, q: E, a: E, b: E, c: E, d: E) -> Self {
        StraightParams { p, q, a, b, c, d }
    }

    pub fn from_array([p, q, a, b, c, d]: [E; 6]) -> Self {
        StraightParams { p, q, a, b, c, d }
    }

    pub fn to_array(&self) -> [E; 6] {
        [
            self.p.clone(),
            self.q.clone(),
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]
    }

    /// `S(p, 0, 0, 0, 0, 0)`.
    pub fn type_one<F: Field<Elem = E>>(field: &F, p: E) -> Self {
        let z = field.zero();
        StraightParams::new(p, z.clone(), z.clone(), z.clone(), z.clone(), z)
    }
}

/// Structure constants of a 2-dimensional algebra over `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureMatrix<F: Field> {
    field: F,
    rows: [[F::Elem; 2]; 4],
}

impl<F: Field> StructureMatrix<F> {
    /// Rows are `(a₁, b₁), (a₂, b₂), (a₃, b₃), (a₄, b₄)` for `e², f², ef, fe`.
    pub fn new(field: F, rows: [[F::Elem; 2]; 4]) -> Self {
        StructureMatrix { field, rows }
    }

    /// Builds from the flat order `a₁, b₁, a₂, b₂, a₃, b₃, a₄, b₄`.
    pub fn from_entries(field: F, e: [F::Elem; 8]) -> Self {
        let [a1, b1, a2, b2, a3, b3, a4, b4] = e;
        StructureMatrix::new(field, [[a1, b1], [a2, b2], [a3, b3], [a4, b4]])
    }

    pub fn zero(field: F) -> Self {
        let z = field.zero();
        StructureMatrix::new(field, std::array::from_fn(|_| [z.clone(), z.clone()]))
    }

    /// Embeds `S(p, q, a, b, c, d)` as rows `(0,1), (p,q), (a,b), (c,d)`.
    pub fn straight(field: F, s: &StraightParams<F::Elem>) -> Self {
        let rows = [
            [field.zero(), field.one()],
            [s.p.clone(), s.q.clone()],
            [s.a.clone(), s.b.clone()],
            [s.c.clone(), s.d.clone()],
        ];
        StructureMatrix::new(field, rows)
    }

    /// The straight parameters, when `e² = f` on this basis.
    pub fn as_straight(&self) -> Option<StraightParams<F::Elem>> {
        let f = &self.field;
        let [e2, f2, ef, fe] = &self.rows;
        (f.is_zero(&e2[0]) && e2[1] == f.one()).then(|| {
            StraightParams::new(
                f2[0].clone(),
                f2[1].clone(),
                ef[0].clone(),
                ef[1].clone(),
                fe[0].clone(),
                fe[1].clone(),
            )
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> &[[F::Elem; 2]; 4] {
        &self.rows
    }

    /// `a₁, b₁, a₂, b₂, a₃, b₃, a₄, b₄`.
    pub fn entries(&self) -> [&F::Elem; 8] {
        let r = &self.rows;
        [
            &r[0][0], &r[0][1], &r[1][0], &r[1][1], &r[2][0], &r[2][1], &r[3][0], &r[3][1],
        ]
    }

    pub fn to_matrix(&self) -> linalg::Matrix<F::Elem> {
        self.rows.iter().map(|r| r.to_vec()).collect()
    }

    pub(crate) fn from_matrix(field: F, m: &linalg::Matrix<F::Elem>) -> Self {
        let rows = std::array::from_fn(|i| [m[i][0].clone(), m[i][1].clone()]);
        StructureMatrix::new(field, rows)
    }

    fn check_field(&self, other: &F) -> Result<()> {
        if &self.field == other {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "field mismatch: {} vs {}",
                self.field.descriptor(),
                other.descriptor()
            )))
        }
    }

    pub fn same_field(&self, other: &Self) -> Result<()> {
        self.check_field(&other.field)
    }

    /// The bilinear product `uv`.
    pub fn multiply(&self, u: &Element<F::Elem>, v: &Element<F::Elem>) -> Element<F::Elem> {
        let f = &self.field;
        let [e2, f2, ef, fe] = &self.rows;
        // uv = αγ·e² + αδ·ef + βγ·fe + βδ·f²
        let ag = f.mul(&u.alpha, &v.alpha);
        let ad = f.mul(&u.alpha, &v.beta);
        let bg = f.mul(&u.beta, &v.alpha);
        let bd = f.mul(&u.beta, &v.beta);
        let coord = |k: usize| {
            let s = f.add(&f.mul(&ag, &e2[k]), &f.mul(&ad, &ef[k]));
            let s = f.add(&s, &f.mul(&bg, &fe[k]));
            f.add(&s, &f.mul(&bd, &f2[k]))
        };
        Element {
            alpha: coord(0),
            beta: coord(1),
        }
    }

    /// As [`multiply`](Self::multiply), but rejects elements tagged with another field.
    pub fn multiply_in(
        &self,
        field: &F,
        u: &Element<F::Elem>,
        v: &Element<F::Elem>,
    ) -> Result<Element<F::Elem>> {
        self.check_field(field)?;
        Ok(self.multiply(u, v))
    }

    pub fn square(&self, u: &Element<F::Elem>) -> Element<F::Elem> {
        self.multiply(u, u)
    }

    /// `ef = fe` suffices by bilinearity.
    pub fn is_commutative(&self) -> bool {
        self.rows[2] == self.rows[3]
    }

    /// The identity element, if the algebra is unital.
    ///
    /// Solves `ue = e, uf = f, eu = e, fu = f` for `u = αe + βf`.
    pub fn find_identity(&self) -> Option<Element<F::Elem>> {
        let f = &self.field;
        let [e2, f2, ef, fe] = &self.rows;
        let (zero, one) = (f.zero(), f.one());
        let mut m = Vec::with_capacity(8);
        let mut rhs = Vec::with_capacity(8);
        for k in 0..2 {
            // ue = α e² + β fe
            m.push(vec![e2[k].clone(), fe[k].clone()]);
            rhs.push(if k == 0 { one.clone() } else { zero.clone() });
            // uf = α ef + β f²
            m.push(vec![ef[k].clone(), f2[k].clone()]);
            rhs.push(if k == 1 { one.clone() } else { zero.clone() });
            // eu = α e² + β ef
            m.push(vec![e2[k].clone(), ef[k].clone()]);
            rhs.push(if k == 0 { one.clone() } else { zero.clone() });
            // fu = α fe + β f²
            m.push(vec![fe[k].clone(), f2[k].clone()]);
            rhs.push(if k == 1 { one.clone() } else { zero.clone() });
        }
        let sol = linalg::solve(f, &m, &rhs)?;
        Some(Element::new(sol[0].clone(), sol[1].clone()))
    }

    /// `(gᵢgⱼ)gₖ = gᵢ(gⱼgₖ)` on the eight basis triples.
    pub fn is_associative(&self) -> bool {
        let basis = [Element::e(&self.field), Element::f(&self.field)];
        basis.iter().all(|x| {
            basis.iter().all(|y| {
                basis.iter().all(|z| {
                    self.multiply(&self.multiply(x, y), z) == self.multiply(x, &self.multiply(y, z))
                })
            })
        })
    }

    /// Coefficients of `det(x | x²)` as a cubic form in `(α, β)`:
    /// `[α³, α²β, αβ², β³]`.
    pub fn curl_form(&self) -> [F::Elem; 4] {
        let f = &self.field;
        let [e2, f2, ef, fe] = &self.rows;
        // x² = (α²a₁ + αβ(a₃+a₄) + β²a₂) e + (α²b₁ + αβ(b₃+b₄) + β²b₂) f
        // det = α·x²_f − β·x²_e
        let b34 = f.add(&ef[1], &fe[1]);
        let a34 = f.add(&ef[0], &fe[0]);
        [
            e2[1].clone(),
            f.sub(&b34, &e2[0]),
            f.sub(&f2[1], &a34),
            f.neg(&f2[0]),
        ]
    }

    /// Curled means every square is a multiple of its element; decided by the
    /// cubic form vanishing identically.
    pub fn is_curled(&self) -> bool {
        self.curl_form().iter().all(|c| self.field.is_zero(c))
    }

    pub fn is_straight(&self) -> bool {
        !self.is_curled()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.field, &self.to_matrix())
    }
}

impl StructureMatrix<Gf> {
    /// Pointwise curledness: `det(x | x²) = 0` at every element.
    ///
    /// Agrees with [`is_curled`](Self::is_curled) over fields with more than
    /// two elements; over GF(2) a nonzero cubic form can vanish everywhere.
    pub fn is_curled_pointwise(&self) -> bool {
        let f = &self.field;
        all_elements(f).iter().all(|x| {
            let s = self.square(x);
            f.sub(&f.mul(&x.alpha, &s.beta), &f.mul(&x.beta, &s.alpha)) == 0
        })
    }

    /// Whether the symbolic and pointwise notions of curled disagree here.
    pub fn curl_notions_disagree(&self) -> bool {
        self.is_curled() != self.is_curled_pointwise()
    }

    /// Every structure matrix over GF(p), lexicographic in the flat entry order.
    pub fn all(field: Gf) -> impl Iterator<Item = StructureMatrix<Gf>> {
        let p = field.modulus();
        let total = p.pow(8);
        (0..total).map(move |mut idx| {
            let mut e = [0u64; 8];
            for slot in e.iter_mut().rev() {
                *slot = idx % p;
                idx /= p;
            }
            StructureMatrix::from_entries(field, e)
        })
    }
}

/// A 2×2 basis change `[[x, y], [z, w]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransformMatrix<E> {
    pub x: E,
    pub y: E,
    pub z: E,
    pub w: E,
}

impl<E: Clone> TransformMatrix<E> {
    pub fn new(x: E, y: E, z: E, w: E) -> Self {
        TransformMatrix { x, y, z, w }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F) -> Self {
        TransformMatrix::new(field.one(), field.zero(), field.zero(), field.one())
    }

    pub fn det<F: Field<Elem = E>>(&self, field: &F) -> E {
        field.sub(&field.mul(&self.x, &self.w), &field.mul(&self.y, &self.z))
    }

    pub fn is_invertible<F: Field<Elem = E>>(&self, field: &F) -> bool {
        !field.is_zero(&self.det(field))
    }

    pub fn inverse<F: Field<Elem = E>>(&self, field: &F) -> Result<Self> {
        let d = field
            .inv(&self.det(field))
            .map_err(|_| Error::domain("transformation matrix is singular"))?;
        Ok(TransformMatrix::new(
            field.mul(&d, &self.w),
            field.neg(&field.mul(&d, &self.y)),
            field.neg(&field.mul(&d, &self.z)),
            field.mul(&d, &self.x),
        ))
    }

    /// Matrix product `self · other`.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let dot = |a: &E, b: &E, c: &E, d: &E| field.add(&field.mul(a, b), &field.mul(c, d));
        TransformMatrix::new(
            dot(&self.x, &other.x, &self.y, &other.z),
            dot(&self.x, &other.y, &self.y, &other.w),
            dot(&self.z, &other.x, &self.w, &other.z),
            dot(&self.z, &other.y, &self.w, &other.w),
        )
    }

    pub fn to_matrix(&self) -> linalg::Matrix<E> {
        vec![
            vec![self.x.clone(), self.y.clone()],
            vec![self.z.clone(), self.w.clone()],
        ]
    }

    /// The 4×4 lift governing how structure matrices transform.
    ///
    /// For `X = [[a, b], [c, d]]`:
    ///
    /// ```text
    /// a²  b²  ab  ab
    /// c²  d²  cd  cd
    /// ac  bd  ad  bc
    /// ac  bd  bc  ad
    /// ```
    pub fn tilde<F: Field<Elem = E>>(&self, field: &F) -> TildeMatrix<E> {
        let m = |u: &E, v: &E| field.mul(u, v);
        let (a, b, c, d) = (&self.x, &self.y, &self.z, &self.w);
        let ab = m(a, b);
        let cd = m(c, d);
        let ac = m(a, c);
        let bd = m(b, d);
        let ad = m(a, d);
        let bc = m(b, c);
        TildeMatrix([
            [m(a, a), m(b, b), ab.clone(), ab],
            [m(c, c), m(d, d), cd.clone(), cd],
            [ac.clone(), bd.clone(), ad.clone(), bc.clone()],
            [ac, bd, bc, ad],
        ])
    }
}

impl TransformMatrix<u64> {
    /// `GL₂(GF(p))`, lexicographic in `(x, y, z, w)`.
    pub fn general_linear(field: &Gf) -> Vec<TransformMatrix<u64>> {
        let p = field.modulus();
        let mut out = Vec::with_capacity(((p * p - 1) * (p * p - p)) as usize);
        for x in 0..p {
            for y in 0..p {
                for z in 0..p {
                    for w in 0..p {
                        let t = TransformMatrix::new(x, y, z, w);
                        if t.is_invertible(field) {
                            out.push(t);
                        }
                    }
                }
            }
        }
        out
    }
}

/// A 4×4 matrix produced by [`TransformMatrix::tilde`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TildeMatrix<E>(pub [[E; 4]; 4]);

impl<E: Clone> TildeMatrix<E> {
    pub fn to_matrix(&self) -> linalg::Matrix<E> {
        self.0.iter().map(|r| r.to_vec()).collect()
    }

    pub fn det<F: Field<Elem = E>>(&self, field: &F) -> E {
        linalg::determinant(field, &self.to_matrix())
    }

    pub fn multiply<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let m = linalg::multiply(field, &self.to_matrix(), &other.to_matrix());
        TildeMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| m[i][j].clone())
        }))
    }
}
