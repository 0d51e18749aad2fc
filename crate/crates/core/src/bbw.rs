//! Borel–Bott–Weil on `Gr(k, n)`.
//!
//! On `Gr(k, V)` with `dim V = n`, the universal sequence `0 -> S -> V -> Q -> 0`
//! gives a tautological subbundle `S` of rank `k` and a quotient `Q` of rank
//! `n - k`. The bundle `Σ^λ Q ⊗ Σ^μ S` has cohomology computed from
//! `ν = (λ, μ)`: if `ν + ρ` has a repeated entry everything vanishes,
//! otherwise the only nonzero group sits in degree `ℓ(σ)` (the number of
//! inversions of the sorting permutation) and equals `Σ^{σ(ν+ρ)-ρ} V`.
//!
//! Weights are tracked `GL(V)`-equivariantly; the determinant of `V` is never
//! trivialized.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::dimension::weyl_dimension;
use crate::error::{Error, Result};
use crate::sheaf::EquivariantClass;
use crate::weight::{dominant_sort, DominantWeight, IntegerWeight, SortOutcome};

/// `Gr(k, n)`: `k`-planes in an `n`-dimensional space. `k = 1` is projective space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannianContext {
    k: usize,
    n: usize,
}

impl GrassmannianContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidContext { k, n });
        }
        Ok(Self { k, n })
    }

    /// `Gr(2, d + 2)`, the Grassmannian of lines in `P^{d+1}`.
    pub fn lines(d: usize) -> Self {
        Self { k: 2, n: d + 2 }
    }

    /// `Gr(1, d + 2) = P^{d+1}`.
    pub fn projective(d: usize) -> Self {
        Self { k: 1, n: d + 2 }
    }

    /// Rank of `S`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Dimension of `V`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of `Q`.
    pub fn quotient_rank(&self) -> usize {
        self.n - self.k
    }

    pub fn dimension(&self) -> usize {
        self.k * (self.n - self.k)
    }
}

impl fmt::Display for GrassmannianContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

/// `Σ^λ Q ⊗ Σ^μ S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleHomogeneousBundle {
    quotient: DominantWeight,
    sub: DominantWeight,
}

impl IrreducibleHomogeneousBundle {
    pub fn new(ctx: &GrassmannianContext, quotient: DominantWeight, sub: DominantWeight) -> Result<Self> {
        if quotient.len() != ctx.quotient_rank() {
            return Err(Error::LengthMismatch {
                expected: ctx.quotient_rank(),
                got: quotient.len(),
            });
        }
        if sub.len() != ctx.k() {
            return Err(Error::LengthMismatch { expected: ctx.k(), got: sub.len() });
        }
        Ok(Self { quotient, sub })
    }

    /// Convenience constructor from raw entries.
    pub fn from_entries(ctx: &GrassmannianContext, quotient: &[i64], sub: &[i64]) -> Result<Self> {
        Self::new(
            ctx,
            DominantWeight::new(quotient.to_vec())?,
            DominantWeight::new(sub.to_vec())?,
        )
    }

    pub fn trivial(ctx: &GrassmannianContext) -> Self {
        Self {
            quotient: DominantWeight::zero(ctx.quotient_rank()),
            sub: DominantWeight::zero(ctx.k()),
        }
    }

    pub(crate) fn from_parts_unchecked(quotient: DominantWeight, sub: DominantWeight) -> Self {
        Self { quotient, sub }
    }

    /// Weight `λ` on `Q`.
    pub fn quotient(&self) -> &DominantWeight {
        &self.quotient
    }

    /// Weight `μ` on `S`.
    pub fn sub(&self) -> &DominantWeight {
        &self.sub
    }

    pub fn rank(&self) -> BigUint {
        weyl_dimension(&self.quotient) * weyl_dimension(&self.sub)
    }

    /// Tensor with `det(V)^t`, i.e. shift both factors by `t`.
    pub fn twist(&self, t: i64) -> Self {
        Self { quotient: self.quotient.twist(t), sub: self.sub.twist(t) }
    }

    /// `(Σ^λ Q ⊗ Σ^μ S)^∨ = Σ^{-rev λ} Q ⊗ Σ^{-rev μ} S`.
    pub fn dual(&self) -> Self {
        Self { quotient: self.quotient.dual(), sub: self.sub.dual() }
    }

    /// `ν = (λ, μ)`.
    pub fn concatenated_weight(&self) -> IntegerWeight {
        IntegerWeight::from(self.quotient.clone()).concat(self.sub.entries())
    }
}

impl fmt::Display for IrreducibleHomogeneousBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ^{}Q⊗Σ^{}S", self.quotient, self.sub)
    }
}

/// Free-function form of [`IrreducibleHomogeneousBundle::dual`].
pub fn dual_bundle(b: &IrreducibleHomogeneousBundle) -> IrreducibleHomogeneousBundle {
    b.dual()
}

/// `ω = det(S ⊗ Q^∨) = Σ^{(-k,…,-k)} Q ⊗ Σ^{(n-k,…,n-k)} S`.
pub fn canonical_bundle(ctx: &GrassmannianContext) -> IrreducibleHomogeneousBundle {
    IrreducibleHomogeneousBundle {
        quotient: DominantWeight::constant(ctx.quotient_rank(), -(ctx.k() as i64)),
        sub: DominantWeight::constant(ctx.k(), ctx.quotient_rank() as i64),
    }
}

/// `(n, n-1, …, 1)`.
pub fn rho(n: usize) -> IntegerWeight {
    IntegerWeight::new((1..=n as i64).rev().collect()).expect("n >= 1")
}

/// One isotypic component of a cohomology group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isotypic {
    pub multiplicity: u64,
    /// Dimension of a single copy of the irreducible.
    pub dimension: BigUint,
}

impl Isotypic {
    pub fn total(&self) -> BigUint {
        &self.dimension * self.multiplicity
    }
}

/// Nonzero cohomology groups, degree by degree, as `GL(V)`-modules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyProfile {
    groups: BTreeMap<usize, BTreeMap<DominantWeight, Isotypic>>,
}

impl CohomologyProfile {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton(degree: usize, weight: DominantWeight) -> Self {
        let mut p = Self::empty();
        p.insert(degree, weight, 1);
        p
    }

    pub fn insert(&mut self, degree: usize, weight: DominantWeight, multiplicity: u64) {
        if multiplicity == 0 {
            return;
        }
        let slot = self.groups.entry(degree).or_default();
        match slot.get_mut(&weight) {
            Some(iso) => iso.multiplicity += multiplicity,
            None => {
                let dimension = weyl_dimension(&weight);
                slot.insert(weight, Isotypic { multiplicity, dimension });
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Degrees carrying a nonzero group, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.groups.keys().copied()
    }

    pub fn group(&self, degree: usize) -> impl Iterator<Item = (&DominantWeight, &Isotypic)> {
        self.groups.get(&degree).into_iter().flat_map(|m| m.iter())
    }

    pub fn dimension(&self, degree: usize) -> BigUint {
        self.group(degree).map(|(_, iso)| iso.total()).sum()
    }

    pub fn total_dimension(&self) -> BigUint {
        self.groups.keys().map(|&q| self.dimension(q)).sum()
    }

    /// Alternating sum of dimensions.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut chi = BigInt::zero();
        for q in self.degrees() {
            let d = BigInt::from(self.dimension(q));
            if q % 2 == 0 {
                chi += d;
            } else {
                chi -= d;
            }
        }
        chi
    }

    /// Irreducible constituents in all degrees.
    pub fn constituents(&self) -> impl Iterator<Item = &DominantWeight> {
        self.groups.values().flat_map(|m| m.keys())
    }

    /// Direct sum.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.absorb(other, 1);
        out
    }

    pub(crate) fn absorb(&mut self, other: &Self, times: u64) {
        for (&q, m) in &other.groups {
            for (w, iso) in m {
                self.insert(q, w.clone(), iso.multiplicity * times);
            }
        }
    }
}

impl fmt::Display for CohomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (q, m) in &self.groups {
            for (w, iso) in m {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                if iso.multiplicity == 1 {
                    write!(f, "H^{q}: Σ^{w}V [{}]", iso.dimension)?;
                } else {
                    write!(f, "H^{q}: {}·Σ^{w}V [{}]", iso.multiplicity, iso.total())?;
                }
            }
        }
        Ok(())
    }
}

/// Cohomology of `Σ^λ Q ⊗ Σ^μ S` on `ctx`.
pub fn bbw_cohomology(ctx: &GrassmannianContext, b: &IrreducibleHomogeneousBundle) -> CohomologyProfile {
    debug_assert_eq!(b.quotient.len() + b.sub.len(), ctx.n());
    let rho = rho(ctx.n());
    let shifted = &b.concatenated_weight() + &rho;
    match dominant_sort(&shifted) {
        SortOutcome::Singular => CohomologyProfile::empty(),
        SortOutcome::Regular { inversions, sorted } => {
            let weight = sorted
                .entries()
                .iter()
                .zip(rho.entries())
                .map(|(s, r)| s - r)
                .collect();
            let weight = DominantWeight::new(weight).expect("sorted minus rho stays dominant");
            CohomologyProfile::singleton(inversions, weight)
        }
    }
}

/// Serre duality at the level of dimensions:
/// `h^q(E) = h^{dim - q}(E^∨ ⊗ ω)` for every `q`.
pub fn serre_check(ctx: &GrassmannianContext, b: &IrreducibleHomogeneousBundle) -> bool {
    let lhs = bbw_cohomology(ctx, b);
    let partner = EquivariantClass::irreducible(*ctx, b.dual())
        .tensor(&EquivariantClass::irreducible(*ctx, canonical_bundle(ctx)))
        .expect("same context");
    let rhs = partner.cohomology();
    let top = ctx.dimension();
    (0..=top).all(|q| lhs.dimension(q) == rhs.dimension(top - q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(ctx: &GrassmannianContext, l: &[i64], m: &[i64]) -> IrreducibleHomogeneousBundle {
        IrreducibleHomogeneousBundle::from_entries(ctx, l, m).unwrap()
    }

    fn dw(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(4).entries(), &[4, 3, 2, 1]);
        assert_eq!(rho(1).entries(), &[1]);
        assert_eq!(rho(7).entries(), &[7, 6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn context_validation() {
        assert!(GrassmannianContext::new(0, 3).is_err());
        assert!(GrassmannianContext::new(3, 3).is_err());
        let g = GrassmannianContext::new(2, 7).unwrap();
        assert_eq!((g.quotient_rank(), g.dimension()), (5, 10));
        assert!(IrreducibleHomogeneousBundle::from_entries(&g, &[0; 4], &[0, 0]).is_err());
        assert!(IrreducibleHomogeneousBundle::from_entries(&g, &[0; 5], &[0, 1]).is_err());
    }

    #[test]
    fn examples_on_gr27() {
        let g = GrassmannianContext::lines(5);
        let p = bbw_cohomology(&g, &bundle(&g, &[0; 5], &[0, -3]));
        assert_eq!(p, CohomologyProfile::singleton(0, dw(&[0, 0, 0, 0, 0, 0, -3])));
        assert_eq!(p.dimension(0), BigUint::from(84u32));

        let p = bbw_cohomology(&g, &bundle(&g, &[1, 0, 0, 0, 0], &[0, -1]));
        assert_eq!(p, CohomologyProfile::singleton(0, dw(&[1, 0, 0, 0, 0, 0, -1])));
        assert_eq!(p.dimension(0), BigUint::from(48u32));

        assert!(bbw_cohomology(&g, &bundle(&g, &[0; 5], &[1, 0])).is_empty());

        let p = bbw_cohomology(&g, &bundle(&g, &[0; 5], &[6, 0]));
        assert_eq!(p, CohomologyProfile::singleton(5, dw(&[1, 1, 1, 1, 1, 1, 0])));
        assert_eq!(p.dimension(5), BigUint::from(7u32));
    }

    #[test]
    fn twisted_tangent_on_p4_vanishes() {
        let p4 = GrassmannianContext::projective(3);
        assert!(bbw_cohomology(&p4, &bundle(&p4, &[1, 0, 0, 0], &[2])).is_empty());
    }

    #[test]
    fn duals() {
        let g = GrassmannianContext::lines(5);
        assert_eq!(bundle(&g, &[0; 5], &[3, 0]).dual(), bundle(&g, &[0; 5], &[0, -3]));
        assert_eq!(
            bundle(&g, &[1, 0, 0, 0, 0], &[0, -1]).dual(),
            bundle(&g, &[0, 0, 0, 0, -1], &[1, 0])
        );
        let t = IrreducibleHomogeneousBundle::trivial(&g);
        assert_eq!(dual_bundle(&t), t);
    }

    #[test]
    fn canonical_bundles() {
        let g = GrassmannianContext::lines(5);
        assert_eq!(canonical_bundle(&g), bundle(&g, &[-2; 5], &[5, 5]));
        let p = GrassmannianContext::new(1, 6).unwrap();
        assert_eq!(canonical_bundle(&p), bundle(&p, &[-1; 5], &[5]));
        let p1 = GrassmannianContext::new(1, 2).unwrap();
        assert_eq!(canonical_bundle(&p1), bundle(&p1, &[-1], &[1]));
        // H^top(ω) = C
        let top = bbw_cohomology(&g, &canonical_bundle(&g));
        assert_eq!(top.degrees().collect::<Vec<_>>(), vec![10]);
        assert_eq!(top.dimension(10), BigUint::from(1u32));
    }

    #[test]
    fn serre_examples() {
        let g = GrassmannianContext::lines(5);
        assert!(serre_check(&g, &bundle(&g, &[0; 5], &[0, -3])));
        assert!(serre_check(&g, &IrreducibleHomogeneousBundle::trivial(&g)));
        let p4 = GrassmannianContext::projective(3);
        let o3 = bundle(&p4, &[0; 4], &[-3]);
        assert!(serre_check(&p4, &o3));
        assert_eq!(bbw_cohomology(&p4, &o3).dimension(0), BigUint::from(35u32));
        // O(-8) on P^4 carries the dual group in the top degree
        let o_minus_8 = bundle(&p4, &[0; 4], &[8]);
        assert_eq!(bbw_cohomology(&p4, &o_minus_8).dimension(4), BigUint::from(35u32));
    }

    #[test]
    fn basic_vanishing() {
        for n in 3..=12 {
            let g = GrassmannianContext::new(2, n).unwrap();
            let trivial = bbw_cohomology(&g, &IrreducibleHomogeneousBundle::trivial(&g));
            assert_eq!(trivial, CohomologyProfile::singleton(0, DominantWeight::zero(n)));
            let s = bundle(&g, &vec![0; n - 2], &[1, 0]);
            assert!(bbw_cohomology(&g, &s).is_empty());
            let s_dual = bbw_cohomology(&g, &s.dual());
            assert_eq!(s_dual.degrees().collect::<Vec<_>>(), vec![0]);
            assert_eq!(s_dual.dimension(0), BigUint::from(n));
        }
    }
}
