//! Rank-2 endo-commutative straight algebras: the type partition, the type I
//! classification, and the search for isomorphisms across types.
//!
//! The rank of `S(p, q, a, b, c, d)` is 2 exactly when one of `p, a, c` is
//! nonzero; the number of nonzero entries among them is the *type*. Type I
//! algebras turn out to be exactly `S(p, 0, 0, 0, 0, 0)` with `p ≠ 0`, and two
//! of them are isomorphic iff their parameters are `≈`-equivalent.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{StraightParams, StructureMatrix, TransformMatrix};
use crate::cubes::{
    approx_equiv, q_signature, rational_from_u64, CubeClassPartition, CubeClasses, CubeRelation,
    RepSystem,
};
use crate::ec::is_ec_straight;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, Gf};
use crate::iso::{are_isomorphic_bruteforce, carries, transform, type_one_iso_decide, IsoMethod};
use crate::report::{
    format_transform, multiplication_table, ser_scalar, ser_scalars, Joined, Render, Table,
};

/// Default cap on `p` for the `p⁶` sweep over straight tuples.
pub const DEFAULT_BUDGET: u64 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AlgebraType {
    TypeI,
    TypeII,
    TypeIII,
    NotRank2,
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraType::TypeI => "I",
            AlgebraType::TypeII => "II",
            AlgebraType::TypeIII => "III",
            AlgebraType::NotRank2 => "rank<2",
        })
    }
}

/// Which of `(p, a, c)` are nonzero, read as three bits in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Subfamily {
    E001,
    E010,
    E100,
    E011,
    E101,
    E110,
    E111,
}

impl Subfamily {
    pub const ALL: [Subfamily; 7] = [
        Subfamily::E001,
        Subfamily::E010,
        Subfamily::E100,
        Subfamily::E011,
        Subfamily::E101,
        Subfamily::E110,
        Subfamily::E111,
    ];

    fn from_bits(p: bool, a: bool, c: bool) -> Option<Self> {
        Some(match (p, a, c) {
            (false, false, false) => return None,
            (false, false, true) => Subfamily::E001,
            (false, true, false) => Subfamily::E010,
            (true, false, false) => Subfamily::E100,
            (false, true, true) => Subfamily::E011,
            (true, false, true) => Subfamily::E101,
            (true, true, false) => Subfamily::E110,
            (true, true, true) => Subfamily::E111,
        })
    }

    pub fn algebra_type(self) -> AlgebraType {
        match self {
            Subfamily::E001 | Subfamily::E010 | Subfamily::E100 => AlgebraType::TypeI,
            Subfamily::E011 | Subfamily::E101 | Subfamily::E110 => AlgebraType::TypeII,
            Subfamily::E111 => AlgebraType::TypeIII,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TypeTag {
    pub kind: AlgebraType,
    pub subfamily: Option<Subfamily>,
}

/// Zero-pattern type of `S(p, q, a, b, c, d)`; endo-commutativity is not checked.
pub fn classify_type<F: Field>(field: &F, s: &StraightParams<F::Elem>) -> TypeTag {
    let nz = |v: &F::Elem| !field.is_zero(v);
    match Subfamily::from_bits(nz(&s.p), nz(&s.a), nz(&s.c)) {
        Some(sub) => TypeTag {
            kind: sub.algebra_type(),
            subfamily: Some(sub),
        },
        None => TypeTag {
            kind: AlgebraType::NotRank2,
            subfamily: None,
        },
    }
}

fn check_budget(field: &Gf, budget: u64) -> Result<()> {
    if field.modulus() > budget {
        return Err(Error::Resource(format!(
            "GF({}) exceeds the enumeration budget p ≤ {budget}",
            field.modulus()
        )));
    }
    Ok(())
}

fn tuple_at(p: u64, mut idx: u64) -> [u64; 6] {
    let mut t = [0u64; 6];
    for slot in t.iter_mut().rev() {
        *slot = idx % p;
        idx /= p;
    }
    t
}

/// Every endo-commutative straight algebra over GF(p), sorted by type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub field: FieldDescriptor,
    pub tuples_scanned: u64,
    pub ec_total: usize,
    pub not_rank2: usize,
    pub by_type: BTreeMap<AlgebraType, usize>,
    pub by_subfamily: BTreeMap<Subfamily, usize>,
    #[serde(skip)]
    pub members: BTreeMap<Subfamily, Vec<StraightParams<u64>>>,
}

impl Census {
    pub fn count(&self, kind: AlgebraType) -> usize {
        self.by_type.get(&kind).copied().unwrap_or(0)
    }

    pub fn of_type(&self, kind: AlgebraType) -> impl Iterator<Item = &StraightParams<u64>> {
        self.members
            .iter()
            .filter(move |(sub, _)| sub.algebra_type() == kind)
            .flat_map(|(_, v)| v.iter())
    }
}

/// Sweeps all `p⁶` tuples in lexicographic order and keeps the endo-commutative ones.
pub fn enumerate_ecs(field: &Gf, budget: u64) -> Result<Census> {
    check_budget(field, budget)?;
    let p = field.modulus();
    let total = p.pow(6);
    let chunk = p.pow(4);
    let survivors: Vec<[u64; 6]> = (0..total / chunk)
        .into_par_iter()
        .flat_map_iter(|block| {
            (block * chunk..(block + 1) * chunk)
                .map(move |idx| tuple_at(p, idx))
                .filter(|t| is_ec_straight(field, &StraightParams::from_array(*t)).is_ec)
        })
        .collect();

    let mut census = Census {
        field: field.descriptor(),
        tuples_scanned: total,
        ec_total: survivors.len(),
        not_rank2: 0,
        by_type: BTreeMap::new(),
        by_subfamily: BTreeMap::new(),
        members: BTreeMap::new(),
    };
    for t in survivors {
        let s = StraightParams::from_array(t);
        match classify_type(field, &s).subfamily {
            None => census.not_rank2 += 1,
            Some(sub) => {
                *census.by_type.entry(sub.algebra_type()).or_default() += 1;
                *census.by_subfamily.entry(sub).or_default() += 1;
                census.members.entry(sub).or_default().push(s);
            }
        }
    }
    Ok(census)
}

/// Outcome of checking that type I consists exactly of `S(p, 0, 0, 0, 0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeOneCharacterisation {
    pub field: FieldDescriptor,
    pub holds: bool,
    pub e001: usize,
    pub e010: usize,
    pub e100: usize,
    pub anomalies: Vec<String>,
}

pub fn verify_type_one_characterisation(
    field: &Gf,
    budget: u64,
) -> Result<TypeOneCharacterisation> {
    let census = enumerate_ecs(field, budget)?;
    Ok(type_one_characterisation_from(field, &census))
}

pub fn type_one_characterisation_from(field: &Gf, census: &Census) -> TypeOneCharacterisation {
    let get = |s: Subfamily| census.members.get(&s).cloned().unwrap_or_default();
    let (e001, e010, e100) = (
        get(Subfamily::E001),
        get(Subfamily::E010),
        get(Subfamily::E100),
    );
    let mut anomalies = Vec::new();
    for s in e001.iter().chain(&e010) {
        anomalies.push(format!(
            "unexpected endo-commutative tuple {:?}",
            s.to_array()
        ));
    }
    let expected: Vec<StraightParams<u64>> = field
        .units()
        .map(|p| StraightParams::type_one(field, p))
        .collect();
    if e100 != expected {
        anomalies.push(format!(
            "E100 tuples {:?} differ from {{(p,0,0,0,0,0) : p ≠ 0}}",
            e100.iter().map(|s| s.to_array()).collect::<Vec<_>>()
        ));
    }
    TypeOneCharacterisation {
        field: field.descriptor(),
        holds: anomalies.is_empty(),
        e001: e001.len(),
        e010: e010.len(),
        e100: e100.len(),
        anomalies,
    }
}

/// A brute-force isomorphism from the class representative to a member,
/// together with the constructive cube-class witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberWitness {
    #[serde(serialize_with = "ser_scalar")]
    pub member: u64,
    pub brute_force: TransformMatrix<u64>,
    pub constructive: TransformMatrix<u64>,
    pub constructive_method: IsoMethod,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeOneClass {
    #[serde(serialize_with = "ser_scalar")]
    pub representative: u64,
    #[serde(serialize_with = "ser_scalars")]
    pub members: Vec<u64>,
    pub witnesses: Vec<MemberWitness>,
}

/// Per-field classification: census counts, type I isomorphism classes and
/// the witnesses behind them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub field: FieldDescriptor,
    pub census: Option<Census>,
    pub type1_classes: Vec<TypeOneClass>,
    pub anomalies: Vec<String>,
    pub observations: Vec<String>,
}

impl ClassificationReport {
    pub fn representatives(&self) -> Vec<u64> {
        self.type1_classes
            .iter()
            .map(|c| c.representative)
            .collect()
    }
}

/// Partitions `{S(p, 0, 0, 0, 0, 0) : p ∈ GF(q)*}` by exhaustive `GL₂` search.
/// Class members in ascending order, each with a witness from the first member.
pub type BruteForceClass = (Vec<u64>, Vec<TransformMatrix<u64>>);

pub fn type_one_partition_bruteforce(field: &Gf) -> Result<Vec<BruteForceClass>> {
    let algebra = |p: u64| StructureMatrix::straight(*field, &StraightParams::type_one(field, p));
    let mut classes: Vec<BruteForceClass> = Vec::new();
    for p in field.units() {
        let target = algebra(p);
        let mut placed = false;
        for (members, witnesses) in classes.iter_mut() {
            let w = are_isomorphic_bruteforce(&algebra(members[0]), &target)?;
            if let Some(x) = w.transform {
                members.push(p);
                witnesses.push(x);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((vec![p], vec![TransformMatrix::identity(field)]));
        }
    }
    Ok(classes)
}

/// Classifies type I algebras over GF(q) twice, by `≈`-classes and by
/// exhaustive isomorphism search, and fails if the two partitions differ.
pub fn type1_classification(field: &Gf) -> Result<ClassificationReport> {
    let approx = CubeClassPartition::new(field, CubeRelation::Approx);
    let brute = type_one_partition_bruteforce(field)?;
    let brute_classes: Vec<&Vec<u64>> = brute.iter().map(|(m, _)| m).collect();
    let approx_classes: Vec<&Vec<u64>> = approx.classes.iter().collect();
    if brute_classes != approx_classes {
        return Err(Error::InvariantViolation(format!(
            "over {}: ≈-classes {:?} differ from isomorphism classes {:?}",
            field.descriptor(),
            approx.classes,
            brute_classes
        )));
    }
    let reps = RepSystem::new(field);

    let mut type1_classes = Vec::new();
    for ((members, brute_witnesses), rep) in brute.into_iter().zip(reps.reps) {
        debug_assert_eq!(members[0], rep);
        let mut witnesses = Vec::new();
        for (member, bw) in members.iter().zip(brute_witnesses) {
            let constructive = type_one_iso_decide(field, &rep, member)?;
            let x = constructive.transform.ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "{rep} ≈ {member} but no constructive witness was produced"
                ))
            })?;
            witnesses.push(MemberWitness {
                member: *member,
                brute_force: bw,
                constructive: x,
                constructive_method: constructive.method,
            });
        }
        type1_classes.push(TypeOneClass {
            representative: rep,
            members,
            witnesses,
        });
    }

    let q = field.modulus();
    let observations = vec![format!(
        "{} type I class(es); q ≡ {} (mod 3)",
        type1_classes.len(),
        q % 3
    )];
    Ok(ClassificationReport {
        field: field.descriptor(),
        census: None,
        type1_classes,
        anomalies: Vec::new(),
        observations,
    })
}

/// Census, type I characterisation and type I classification in one pass.
pub fn classify_field(field: &Gf, budget: u64) -> Result<ClassificationReport> {
    let census = enumerate_ecs(field, budget)?;
    let characterisation = type_one_characterisation_from(field, &census);
    if !characterisation.holds {
        return Err(Error::InvariantViolation(
            characterisation.anomalies.join("; "),
        ));
    }
    let mut report = type1_classification(field)?;
    let flagged: Vec<String> = census
        .members
        .values()
        .flatten()
        .filter(|s| StructureMatrix::straight(*field, s).curl_notions_disagree())
        .map(|s| {
            format!(
                "symbolic and pointwise curledness disagree on {:?}",
                s.to_array()
            )
        })
        .collect();
    report.anomalies.extend(flagged);
    report.census = Some(census);
    Ok(report)
}

/// Every type I algebra is commutative, has no identity, and is not associative.
pub fn verify_commutative_non_unital_non_associative(field: &Gf) -> bool {
    field.units().all(|p| {
        let a = StructureMatrix::straight(*field, &StraightParams::type_one(field, p));
        a.is_commutative() && a.find_identity().is_none() && !a.is_associative()
    })
}

/// Over a cube-rootable field there is a single type I class, represented by 1.
pub fn verify_single_class_when_cube_rootable(field: &Gf) -> Result<bool> {
    if !field.is_cube_rootable() {
        return Err(Error::domain(format!(
            "{} is not cube-rootable",
            field.descriptor()
        )));
    }
    let report = type1_classification(field)?;
    Ok(report.representatives() == vec![1])
}

/// Pairwise cube-class check of a family of distinct primes over Q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeFamilyReport {
    pub primes: Vec<u64>,
    pub pairs_checked: usize,
    pub pairwise_distinct: bool,
    /// Pairs `(p, q)` with `p ∼ q` or `p² ∼ q`.
    pub collisions: Vec<(u64, u64)>,
}

/// Checks that distinct primes lie in distinct `≈`-classes of Q*, comparing
/// the signatures of `p/q` and `p²/q` in both orders.
pub fn q_prime_family(primes: &[u64]) -> Result<PrimeFamilyReport> {
    for (i, &p) in primes.iter().enumerate() {
        if !num_prime::nt_funcs::is_prime64(p) || p >= (1 << 63) {
            return Err(Error::domain(format!("{p} is not a prime below 2^63")));
        }
        if primes[..i].contains(&p) {
            return Err(Error::domain(format!("prime {p} is listed twice")));
        }
    }
    let q = crate::field::Rationals;
    let mut collisions = Vec::new();
    let mut pairs = 0;
    for (i, &p) in primes.iter().enumerate() {
        for &r in &primes[i + 1..] {
            pairs += 1;
            let (pp, rr) = (rational_from_u64(p), rational_from_u64(r));
            let related =
                |a: &num_rational::BigRational, b: &num_rational::BigRational| -> Result<bool> {
                    let sim = q_signature(&(a / b))?.is_empty();
                    let sq = q_signature(&(a * a / b))?.is_empty();
                    Ok(sim || sq)
                };
            // ≈ is symmetric, but both orders are checked independently
            if related(&pp, &rr)? || related(&rr, &pp)? || approx_equiv(&q, &pp, &rr)? {
                collisions.push((p, r));
            }
        }
    }
    Ok(PrimeFamilyReport {
        primes: primes.to_vec(),
        pairs_checked: pairs,
        pairwise_distinct: collisions.is_empty(),
        collisions,
    })
}

/// The two shapes a type II/III algebra must take to be isomorphic to a
/// type I algebra: `q = −a, a ≠ 0, b = 0, c = a, d = 0` with `p = 0` or `p ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SharpPattern {
    PZero,
    PNonzero,
    Neither,
}

pub fn sharp_pattern<F: Field>(field: &F, s: &StraightParams<F::Elem>) -> SharpPattern {
    let f = field;
    let shape =
        s.q == f.neg(&s.a) && !f.is_zero(&s.a) && f.is_zero(&s.b) && s.c == s.a && f.is_zero(&s.d);
    match (shape, f.is_zero(&s.p)) {
        (false, _) => SharpPattern::Neither,
        (true, true) => SharpPattern::PZero,
        (true, false) => SharpPattern::PNonzero,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FilterVerdict {
    /// A type I isomorph exists and the algebra has one of the two shapes.
    Consistent,
    /// No type I isomorph exists; nothing to check.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeOneIsomorph {
    #[serde(serialize_with = "ser_scalar")]
    pub p: u64,
    /// Carries `S(p, 0, 0, 0, 0, 0)` to the queried algebra.
    pub transform: TransformMatrix<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterOutcome {
    pub algebra: StraightParams<u64>,
    pub pattern: SharpPattern,
    pub isomorph: Option<TypeOneIsomorph>,
    pub verdict: FilterVerdict,
}

/// First type I algebra (smallest `p`, then lexicographic `X`) isomorphic to `s`.
fn find_type_one_isomorph(
    field: &Gf,
    s: &StraightParams<u64>,
    gl2: &[TransformMatrix<u64>],
) -> Option<TypeOneIsomorph> {
    let target = StructureMatrix::straight(*field, s);
    field.units().find_map(|p| {
        let source = StructureMatrix::straight(*field, &StraightParams::type_one(field, p));
        gl2.iter()
            .find(|x| carries(&source, x, &target))
            .map(|x| TypeOneIsomorph {
                p,
                transform: x.clone(),
            })
    })
}

/// For an endo-commutative type II/III algebra, searches for a type I
/// isomorph and, if one exists, requires one of the two shapes.
pub fn type_one_isomorph_filter(field: &Gf, s: &StraightParams<u64>) -> Result<FilterOutcome> {
    let gl2 = TransformMatrix::general_linear(field);
    filter_with(field, s, &gl2)
}

fn filter_with(
    field: &Gf,
    s: &StraightParams<u64>,
    gl2: &[TransformMatrix<u64>],
) -> Result<FilterOutcome> {
    let kind = classify_type(field, s).kind;
    if !matches!(kind, AlgebraType::TypeII | AlgebraType::TypeIII) {
        return Err(Error::domain(format!(
            "{:?} is of type {kind}, not II or III",
            s.to_array()
        )));
    }
    if !is_ec_straight(field, s).is_ec {
        return Err(Error::domain(format!(
            "{:?} is not endo-commutative",
            s.to_array()
        )));
    }
    let pattern = sharp_pattern(field, s);
    let isomorph = find_type_one_isomorph(field, s, gl2);
    let verdict = match (&isomorph, pattern) {
        (None, _) => FilterVerdict::NotApplicable,
        (Some(_), SharpPattern::PZero | SharpPattern::PNonzero) => FilterVerdict::Consistent,
        (Some(iso), SharpPattern::Neither) => {
            return Err(Error::InvariantViolation(format!(
                "{:?} is isomorphic to S({},0,0,0,0,0) via {:?} but has neither required shape",
                s.to_array(),
                iso.p,
                iso.transform
            )))
        }
    };
    if let Some(iso) = &isomorph {
        let source = StructureMatrix::straight(*field, &StraightParams::type_one(field, iso.p));
        if transform(&source, &iso.transform)? != StructureMatrix::straight(*field, s) {
            return Err(Error::InvariantViolation(
                "cross-type witness does not verify".into(),
            ));
        }
    }
    Ok(FilterOutcome {
        algebra: s.clone(),
        pattern,
        isomorph,
        verdict,
    })
}

/// Exhaustive search for isomorphisms between type I and type II/III algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossTypeReport {
    pub field: FieldDescriptor,
    pub type1_count: usize,
    pub type2_count: usize,
    pub type3_count: usize,
    /// Type II algebras with a type I isomorph.
    pub type2_isomorphic_to_type1: Vec<FilterOutcome>,
    /// Type III algebras with a type I isomorph.
    pub type3_isomorphic_to_type1: Vec<FilterOutcome>,
    /// Type II/III algebras with one of the two shapes but no type I isomorph.
    pub shaped_without_isomorph: usize,
    /// In characteristic 2 no type II algebra may be isomorphic to a type I one.
    pub char2_type2_claim: Option<bool>,
}

pub fn cross_type_experiment(field: &Gf, budget: u64) -> Result<CrossTypeReport> {
    let census = enumerate_ecs(field, budget)?;
    let gl2 = TransformMatrix::general_linear(field);
    let candidates: Vec<&StraightParams<u64>> = census
        .of_type(AlgebraType::TypeII)
        .chain(census.of_type(AlgebraType::TypeIII))
        .collect();
    let outcomes: Vec<FilterOutcome> = candidates
        .par_iter()
        .map(|s| filter_with(field, s, &gl2))
        .collect::<Result<_>>()?;

    let mut type2 = Vec::new();
    let mut type3 = Vec::new();
    let mut shaped_without = 0;
    for o in outcomes {
        match (o.verdict, classify_type(field, &o.algebra).kind) {
            (FilterVerdict::Consistent, AlgebraType::TypeII) => type2.push(o),
            (FilterVerdict::Consistent, _) => type3.push(o),
            (FilterVerdict::NotApplicable, _) if o.pattern != SharpPattern::Neither => {
                shaped_without += 1
            }
            _ => {}
        }
    }

    let char2_type2_claim = (field.modulus() == 2).then_some(type2.is_empty());
    if char2_type2_claim == Some(false) {
        return Err(Error::InvariantViolation(format!(
            "over GF(2) type II algebras {:?} are isomorphic to type I",
            type2
                .iter()
                .map(|o| o.algebra.to_array())
                .collect::<Vec<_>>()
        )));
    }
    Ok(CrossTypeReport {
        field: field.descriptor(),
        type1_count: census.count(AlgebraType::TypeI),
        type2_count: census.count(AlgebraType::TypeII),
        type3_count: census.count(AlgebraType::TypeIII),
        type2_isomorphic_to_type1: type2,
        type3_isomorphic_to_type1: type3,
        shaped_without_isomorph: shaped_without,
        char2_type2_claim,
    })
}

impl Render for Census {
    fn tables(&self) -> Vec<Table> {
        let mut t = Table::new(
            format!("Endo-commutative straight algebras over {}", self.field),
            &["type", "subfamily", "count"],
        );
        for sub in Subfamily::ALL {
            let n = self.by_subfamily.get(&sub).copied().unwrap_or(0);
            t.push([
                sub.algebra_type().to_string(),
                format!("{sub:?}"),
                n.to_string(),
            ]);
        }
        t.push([
            "rank<2".to_string(),
            "-".to_string(),
            self.not_rank2.to_string(),
        ]);
        t.push([
            "total".to_string(),
            "-".to_string(),
            self.ec_total.to_string(),
        ]);
        vec![t]
    }
}

impl Render for TypeOneCharacterisation {
    fn tables(&self) -> Vec<Table> {
        let mut t = Table::new(
            format!("Type I endo-commutative algebras over {}", self.field),
            &["E001", "E010", "E100", "holds"],
        );
        t.push([
            self.e001.to_string(),
            self.e010.to_string(),
            self.e100.to_string(),
            self.holds.to_string(),
        ]);
        let mut out = vec![t];
        out.extend(notes("Anomalies", &self.anomalies));
        out
    }
}

fn notes(title: &str, lines: &[String]) -> Option<Table> {
    (!lines.is_empty()).then(|| {
        let mut t = Table::new(title, &["note"]);
        for l in lines {
            t.push([l]);
        }
        t
    })
}

impl Render for ClassificationReport {
    fn summary(&self) -> Vec<String> {
        vec![format!(
            "{} type I class(es) over {}; representatives {}",
            self.type1_classes.len(),
            self.field,
            Joined(&self.representatives(), ", ")
        )]
    }

    fn tables(&self) -> Vec<Table> {
        let mut out = Vec::new();
        if let Some(c) = &self.census {
            out.extend(c.tables());
        }
        let mut classes = Table::new(
            format!("Type I isomorphism classes over {}", self.field),
            &["representative", "members", "size"],
        );
        for c in &self.type1_classes {
            classes.push([
                c.representative.to_string(),
                Joined(&c.members, " ").to_string(),
                c.members.len().to_string(),
            ]);
        }
        out.push(classes);
        if let Ok(gf) = self.field.as_gf() {
            for c in &self.type1_classes {
                let m =
                    StructureMatrix::straight(gf, &StraightParams::type_one(&gf, c.representative));
                out.push(multiplication_table(
                    &m,
                    format!("S({},0,0,0,0,0)", c.representative),
                ));
            }
        }
        let mut w = Table::new(
            "Isomorphism witnesses (representative → member)",
            &[
                "representative",
                "member",
                "brute force",
                "constructive",
                "method",
            ],
        );
        for c in &self.type1_classes {
            for m in &c.witnesses {
                w.push([
                    c.representative.to_string(),
                    m.member.to_string(),
                    format_transform(&m.brute_force),
                    format_transform(&m.constructive),
                    format!("{:?}", m.constructive_method),
                ]);
            }
        }
        out.push(w);
        out.extend(notes("Anomalies", &self.anomalies));
        out.extend(notes("Observations", &self.observations));
        out
    }
}

impl Render for PrimeFamilyReport {
    fn summary(&self) -> Vec<String> {
        vec![format!("pairwise distinct: {}", self.pairwise_distinct)]
    }

    fn tables(&self) -> Vec<Table> {
        let mut t = Table::new(
            "Distinct primes in Q* up to ≈",
            &["primes", "pairs checked", "pairwise distinct"],
        );
        t.push([
            Joined(&self.primes, " ").to_string(),
            self.pairs_checked.to_string(),
            self.pairwise_distinct.to_string(),
        ]);
        let mut out = vec![t];
        if !self.collisions.is_empty() {
            let mut c = Table::new("Collisions", &["p", "q"]);
            for (p, q) in &self.collisions {
                c.push([p, q]);
            }
            out.push(c);
        }
        out
    }
}

impl Render for CrossTypeReport {
    fn summary(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(claim) = self.char2_type2_claim {
            out.push(format!("no type II algebra isomorphic to type I: {claim}"));
        }
        out
    }

    fn tables(&self) -> Vec<Table> {
        let mut t = Table::new(
            format!(
                "Type I isomorphs among type II/III algebras over {}",
                self.field
            ),
            &[
                "type I",
                "type II",
                "type III",
                "II ≅ I",
                "III ≅ I",
                "shaped, no isomorph",
            ],
        );
        t.push([
            self.type1_count,
            self.type2_count,
            self.type3_count,
            self.type2_isomorphic_to_type1.len(),
            self.type3_isomorphic_to_type1.len(),
            self.shaped_without_isomorph,
        ]);
        let mut pairs = Table::new(
            "Cross-type isomorphisms",
            &["algebra", "shape", "type I p", "transform"],
        );
        for o in self
            .type2_isomorphic_to_type1
            .iter()
            .chain(&self.type3_isomorphic_to_type1)
        {
            let iso = o
                .isomorph
                .as_ref()
                .expect("consistent outcomes carry an isomorph");
            pairs.push([
                format!("S({})", Joined(&o.algebra.to_array(), ",")),
                format!("{:?}", o.pattern),
                iso.p.to_string(),
                format_transform(&iso.transform),
            ]);
        }
        vec![t, pairs]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Gf {
        Gf::new(p).unwrap()
    }

    fn sp(v: [u64; 6]) -> StraightParams<u64> {
        StraightParams::from_array(v)
    }

    #[test]
    fn type_tags() {
        let f = gf(7);
        let t = classify_type(&f, &sp([1, 0, 0, 0, 0, 0]));
        assert_eq!(t.kind, AlgebraType::TypeI);
        assert_eq!(t.subfamily, Some(Subfamily::E100));
        let t = classify_type(&f, &sp([0, 3, 2, 1, 5, 4]));
        assert_eq!(
            (t.kind, t.subfamily),
            (AlgebraType::TypeII, Some(Subfamily::E011))
        );
        let t = classify_type(&f, &sp([0, 0, 0, 3, 0, 2]));
        assert_eq!((t.kind, t.subfamily), (AlgebraType::NotRank2, None));
        assert_eq!(
            classify_type(&f, &sp([1, 0, 1, 0, 1, 0])).kind,
            AlgebraType::TypeIII
        );
    }

    #[test]
    fn type_one_census_counts() {
        for (p, n) in [(2, 1), (3, 2), (7, 6)] {
            let c = enumerate_ecs(&gf(p), DEFAULT_BUDGET).unwrap();
            assert_eq!(c.count(AlgebraType::TypeI), n, "GF({p})");
            assert_eq!(c.tuples_scanned, p.pow(6));
        }
        assert!(matches!(
            enumerate_ecs(&gf(17), DEFAULT_BUDGET),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn type_one_characterisation_small_fields() {
        for p in [2, 3, 5] {
            let r = verify_type_one_characterisation(&gf(p), DEFAULT_BUDGET).unwrap();
            assert!(r.holds, "{r:?}");
            assert_eq!((r.e001, r.e010, r.e100), (0, 0, (p - 1) as usize));
        }
    }

    #[test]
    fn type_one_classes() {
        assert_eq!(
            type1_classification(&gf(3)).unwrap().representatives(),
            vec![1]
        );
        let r7 = type1_classification(&gf(7)).unwrap();
        assert_eq!(r7.representatives(), vec![1, 2]);
        assert_eq!(r7.type1_classes[0].members, vec![1, 6]);
        assert_eq!(r7.type1_classes[1].members, vec![2, 3, 4, 5]);
        assert_eq!(
            type1_classification(&gf(13)).unwrap().representatives(),
            vec![1, 2]
        );
    }

    #[test]
    fn type_one_properties() {
        for p in [2, 7, 13] {
            assert!(verify_commutative_non_unital_non_associative(&gf(p)));
        }
        for p in [2, 3, 5] {
            assert!(verify_single_class_when_cube_rootable(&gf(p)).unwrap());
        }
        assert!(matches!(
            verify_single_class_when_cube_rootable(&gf(7)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn prime_families() {
        assert!(q_prime_family(&[2, 3]).unwrap().pairwise_distinct);
        let r = q_prime_family(&[2, 3, 5, 7, 11, 13]).unwrap();
        assert!(r.pairwise_distinct);
        assert_eq!(r.pairs_checked, 15);
        let r = q_prime_family(&[2]).unwrap();
        assert!(r.pairwise_distinct);
        assert_eq!(r.pairs_checked, 0);
        assert!(matches!(q_prime_family(&[2, 4]), Err(Error::Domain(_))));
        assert!(matches!(q_prime_family(&[3, 3]), Err(Error::Domain(_))));
    }

    #[test]
    fn sharp_patterns() {
        let f = gf(7);
        assert_eq!(
            sharp_pattern(&f, &sp([1, 6, 1, 0, 1, 0])),
            SharpPattern::PNonzero
        );
        assert_eq!(
            sharp_pattern(&f, &sp([0, 6, 1, 0, 1, 0])),
            SharpPattern::PZero
        );
        assert_eq!(
            sharp_pattern(&f, &sp([1, 1, 1, 0, 1, 0])),
            SharpPattern::Neither
        );
        assert_eq!(
            sharp_pattern(&f, &sp([0, 0, 0, 0, 0, 0])),
            SharpPattern::Neither
        );
    }

    #[test]
    fn filter_rejects_wrong_inputs() {
        let f = gf(3);
        assert!(type_one_isomorph_filter(&f, &sp([1, 0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn gf2_has_no_type_two_isomorphs_of_type_one() {
        let r = cross_type_experiment(&gf(2), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.char2_type2_claim, Some(true));
        assert!(r.type2_isomorphic_to_type1.is_empty());
    }
}
