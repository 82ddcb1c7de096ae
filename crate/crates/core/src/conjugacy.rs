//! Binary conjugacy classes, special classes, and bases of subfields.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{subfield_elements, FieldCtx, FieldElement};
use crate::linalg::{BasisSolver, BinMatrix};

/// Exponents `c·2^i mod n` of one binary conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConjugacyClass {
    /// Generator exponent; for enumerated classes the smallest member.
    pub c: u32,
    /// `c·2^i mod n` for `i = 0..cardinality`.
    pub members: Vec<u32>,
}

impl ConjugacyClass {
    /// The class of `α^c`, listed starting from `c`.
    pub fn generated_by(ctx: &FieldCtx, c: u32) -> ConjugacyClass {
        let n = ctx.n();
        let c = c % n;
        let mut members = alloc::vec![c];
        let mut x = (2 * c as u64 % n as u64) as u32;
        while x != c {
            members.push(x);
            x = (2 * x as u64 % n as u64) as u32;
        }
        ConjugacyClass { c, members }
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    /// `α^c`.
    pub fn generator(&self, ctx: &FieldCtx) -> FieldElement {
        ctx.exp(self.c as u64)
    }

    /// The smallest member.
    pub fn canonical(&self) -> u32 {
        *self.members.iter().min().expect("classes are nonempty")
    }
}

/// All classes of the field, sorted by canonical representative.
pub fn enumerate_classes(ctx: &FieldCtx) -> Vec<ConjugacyClass> {
    let n = ctx.n() as usize;
    let mut seen = alloc::vec![false; n];
    let mut out = Vec::new();
    for c in 0..n {
        if seen[c] {
            continue;
        }
        let cls = ConjugacyClass::generated_by(ctx, c as u32);
        for &x in &cls.members {
            seen[x as usize] = true;
        }
        out.push(cls);
    }
    out
}

/// Orders classes for plan assembly: `{0}` first, then by decreasing cardinality,
/// then by increasing representative. For m = 4 this gives `0, 1, 3, 7, 5`.
pub fn plan_order(mut classes: Vec<ConjugacyClass>) -> Vec<ConjugacyClass> {
    classes.sort_by_key(|k| (k.c != 0, core::cmp::Reverse(k.cardinality()), k.c));
    classes
}

/// True if `e` has even degree `d` over GF(2) and `e^(2^(d/2)) + e + 1 = 0`.
pub fn is_special(ctx: &FieldCtx, e: FieldElement) -> bool {
    if e.is_zero() {
        return false;
    }
    let d = ctx.conjugate_count(e);
    d.is_multiple_of(2) && ctx.frobenius(e, d / 2) + e == FieldElement::ONE
}

/// The special class of full degree `m`.
pub fn find_special_class(ctx: &FieldCtx) -> Result<ConjugacyClass> {
    find_special_class_of_degree(ctx, ctx.m())
}

/// The special class of degree `d` (inside the subfield GF(2^d)), choosing the
/// smallest qualifying representative.
pub fn find_special_class_of_degree(ctx: &FieldCtx, d: u32) -> Result<ConjugacyClass> {
    if !d.is_multiple_of(2) {
        return Err(Error::OddExtensionDegree { m: d });
    }
    if !ctx.m().is_multiple_of(d) {
        return Err(Error::DegreeNotDivisor { d, m: ctx.m() });
    }
    let found = enumerate_classes(ctx)
        .into_iter()
        .find(|k| k.cardinality() == d as usize && is_special(ctx, k.generator(ctx)));
    Ok(found.expect("every even-degree subfield has a special class"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Polynomial,
    Normal,
}

/// A basis of the degree-`degree` subfield of GF(2^m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSpec {
    pub kind: BasisKind,
    pub generator: FieldElement,
    pub degree: u32,
    /// `generator^j` (polynomial) or `generator^(2^j)` (normal), `j < degree`.
    pub vectors: Vec<FieldElement>,
}

impl BasisSpec {
    fn checked(
        ctx: &FieldCtx,
        kind: BasisKind,
        generator: FieldElement,
        degree: u32,
        vectors: Vec<FieldElement>,
    ) -> Result<BasisSpec> {
        if degree == 0 || !ctx.m().is_multiple_of(degree) {
            return Err(Error::DegreeNotDivisor { d: degree, m: ctx.m() });
        }
        if !ctx.in_subfield(generator, degree)? {
            return Err(Error::SingularBasis);
        }
        BasisSolver::new(&vectors)?;
        Ok(BasisSpec { kind, generator, degree, vectors })
    }

    /// The normal basis `γ^(2^i)`, `i < d`; fails if the conjugates are dependent.
    pub fn normal(ctx: &FieldCtx, gamma: FieldElement, d: u32) -> Result<BasisSpec> {
        let v = (0..d).map(|i| ctx.frobenius(gamma, i)).collect();
        BasisSpec::checked(ctx, BasisKind::Normal, gamma, d, v)
    }

    /// The polynomial basis `β^j`, `j < d`.
    pub fn polynomial(ctx: &FieldCtx, beta: FieldElement, d: u32) -> Result<BasisSpec> {
        let v = (0..d).map(|j| ctx.pow(beta, j as u64)).collect();
        BasisSpec::checked(ctx, BasisKind::Polynomial, beta, d, v)
    }

    pub fn solver(&self) -> BasisSolver {
        BasisSolver::new(&self.vectors).expect("validated at construction")
    }
}

/// The normal basis of GF(2^d) ⊂ GF(2^m) generated by the element of smallest exponent.
pub fn find_normal_basis(ctx: &FieldCtx, d: u32) -> Result<BasisSpec> {
    subfield_elements(ctx, d)?
        .into_iter()
        .find_map(|g| BasisSpec::normal(ctx, g, d).ok())
        .ok_or(Error::SingularBasis)
}

/// `M_k`: row `j` holds the normal-basis coordinates of `(α^c)^j`.
pub fn basis_transform_matrix(ctx: &FieldCtx, cls: &ConjugacyClass, normal: &BasisSpec) -> Result<BinMatrix> {
    if cls.cardinality() != normal.vectors.len() {
        return Err(Error::WrongCardinality { expected: normal.vectors.len(), found: cls.cardinality() });
    }
    transform_matrix_of(ctx, cls.generator(ctx), normal)
}

/// `M` for an arbitrary generator `e` of the normal basis's subfield.
pub fn transform_matrix_of(ctx: &FieldCtx, e: FieldElement, normal: &BasisSpec) -> Result<BinMatrix> {
    let d = normal.vectors.len();
    let powers: Vec<FieldElement> = (0..d).map(|j| ctx.pow(e, j as u64)).collect();
    let m = normal.solver().coord_matrix(&powers)?;
    if m.rank() != d {
        return Err(Error::SingularBasis);
    }
    Ok(m)
}
