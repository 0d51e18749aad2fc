//! First pages of the Koszul hypercohomology spectral sequences.
//!
//! A regular section of `E = S^3 S^∨` on `Gr(2, d+2)` (or of `O(3)` on
//! `P^{d+1}`) cuts out `Z` and gives the Koszul resolution
//! `0 -> ∧^r E^∨ -> … -> E^∨ -> I_Z -> 0`, with `E^∨ = S^3 S`. Tensoring with a
//! locally free `F` yields a spectral sequence with
//! `E_1^{p,q} = H^q(∧^{1-p} E^∨ ⊗ F) => H^{p+q}(I_Z ⊗ F)`.
//! Appending the `O_G` term instead resolves `O_Z` and gives
//! `E_1^{p,q} = H^q(∧^{-p} E^∨ ⊗ F) => H^{p+q}(F|_Z)`.
//!
//! Only dimensions are modeled, never the differentials. A total degree is
//! reported as determined when every contributing entry is isolated: no
//! differential `d_r : E_r^{p,q} -> E_r^{p+r, q-r+1}` can have a nonzero source
//! or target at that entry.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bbw::{CohomologyProfile, GrassmannianContext};
use crate::error::{Error, Result};
use crate::sheaf::{EquivariantClass, NamedSheaf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PageVariant {
    /// Abuts to `H^*(I_Z ⊗ F)`; columns `p = 1 - r, …, 0`.
    IdealSheaf,
    /// Abuts to `H^*(F|_Z)`; columns `p = -r, …, 0`.
    Restriction,
}

impl PageVariant {
    /// Exterior power `∧^j E^∨` sitting in column `p`.
    pub fn wedge_level(self, p: i64) -> usize {
        match self {
            PageVariant::IdealSheaf => (1 - p) as usize,
            PageVariant::Restriction => (-p) as usize,
        }
    }
}

impl fmt::Display for PageVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PageVariant::IdealSheaf => write!(f, "ideal"),
            PageVariant::Restriction => write!(f, "restriction"),
        }
    }
}

/// Rank of the bundle whose section is resolved: 4 on `Gr(2,n)`, 1 on `P^{n-1}`.
pub fn section_rank(ctx: &GrassmannianContext) -> Result<usize> {
    match ctx.k() {
        1 => Ok(1),
        2 => Ok(4),
        _ => Err(Error::UnsupportedWedge),
    }
}

/// The `E_1` page, one column per Koszul term.
#[derive(Clone, Debug)]
pub struct KoszulPage {
    variant: PageVariant,
    ctx: GrassmannianContext,
    coefficient: EquivariantClass,
    columns: BTreeMap<i64, CohomologyProfile>,
}

impl KoszulPage {
    pub fn variant(&self) -> PageVariant {
        self.variant
    }

    pub fn context(&self) -> GrassmannianContext {
        self.ctx
    }

    pub fn coefficient(&self) -> &EquivariantClass {
        &self.coefficient
    }

    /// Smallest column index.
    pub fn p_min(&self) -> i64 {
        *self.columns.keys().next().expect("pages have at least one column")
    }

    pub fn q_max(&self) -> usize {
        self.ctx.dimension()
    }

    /// Cohomology of the whole Koszul term in column `p`.
    pub fn column(&self, p: i64) -> Option<&CohomologyProfile> {
        self.columns.get(&p)
    }

    /// `E_1^{p,q}` as a profile concentrated in degree `q`.
    pub fn entry(&self, p: i64, q: usize) -> CohomologyProfile {
        let mut out = CohomologyProfile::empty();
        if let Some(col) = self.columns.get(&p) {
            for (w, iso) in col.group(q) {
                out.insert(q, w.clone(), iso.multiplicity);
            }
        }
        out
    }

    pub fn entry_dimension(&self, p: i64, q: usize) -> BigUint {
        self.columns.get(&p).map(|c| c.dimension(q)).unwrap_or_default()
    }

    fn occupied(&self, p: i64, q: i64) -> bool {
        q >= 0
            && self
                .columns
                .get(&p)
                .is_some_and(|c| c.group(q as usize).next().is_some())
    }

    /// Nonzero entries `((p, q), dim)` in column-major order.
    pub fn nonzero_entries(&self) -> Vec<((i64, usize), BigUint)> {
        self.columns
            .iter()
            .flat_map(|(&p, col)| col.degrees().map(move |q| ((p, q), col.dimension(q))))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.values().all(CohomologyProfile::is_empty)
    }

    /// `sum (-1)^{p+q} dim E_1^{p,q}`.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut chi = BigInt::zero();
        for ((p, q), dim) in self.nonzero_entries() {
            if (p + q as i64).rem_euclid(2) == 0 {
                chi += BigInt::from(dim);
            } else {
                chi -= BigInt::from(dim);
            }
        }
        chi
    }

    /// Total degrees the page can contribute to.
    pub fn total_degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.p_min()..=self.q_max() as i64
    }
}

impl fmt::Display for KoszulPage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} page on {} with F = {}", self.variant, self.ctx, self.coefficient)?;
        let entries = self.nonzero_entries();
        if entries.is_empty() {
            return writeln!(f, "  (all entries vanish)");
        }
        for ((p, q), _) in entries {
            writeln!(f, "  E1[{p},{q}] (∧^{}): {}", self.variant.wedge_level(p), self.entry(p, q))?;
        }
        Ok(())
    }
}

/// Builds the `E_1` page for the coefficient bundle `f`.
pub fn build_page(ctx: GrassmannianContext, variant: PageVariant, f: &EquivariantClass) -> Result<KoszulPage> {
    if f.context() != ctx {
        return Err(Error::ContextMismatch);
    }
    let rank = section_rank(&ctx)? as i64;
    let conormal = NamedSheaf::SymCube.class(ctx)?;
    let p_min = match variant {
        PageVariant::IdealSheaf => 1 - rank,
        PageVariant::Restriction => -rank,
    };
    let mut columns = BTreeMap::new();
    for p in p_min..=0 {
        let term = conormal.wedge(variant.wedge_level(p))?.tensor(f)?;
        columns.insert(p, term.cohomology());
    }
    Ok(KoszulPage { variant, ctx, coefficient: f.clone(), columns })
}

/// A pair of page positions joined by a possibly nonzero `d_r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockingPair {
    pub source: (i64, usize),
    pub target: (i64, usize),
    pub r: usize,
}

impl fmt::Display for BlockingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d{}: ({},{}) -> ({},{})",
            self.r, self.source.0, self.source.1, self.target.0, self.target.1
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeVerdict {
    /// Every contributing entry survives to `E_∞`; `profile` lists them.
    Determined { dimension: BigUint, profile: CohomologyProfile },
    /// Some differential may be nonzero; `upper_bound` is the `E_1` total.
    Undetermined { upper_bound: BigUint, blocking: Vec<BlockingPair> },
}

impl DegreeVerdict {
    pub fn dimension(&self) -> Option<&BigUint> {
        match self {
            DegreeVerdict::Determined { dimension, .. } => Some(dimension),
            DegreeVerdict::Undetermined { .. } => None,
        }
    }

    pub fn is_determined(&self) -> bool {
        matches!(self, DegreeVerdict::Determined { .. })
    }

    pub fn upper_bound(&self) -> &BigUint {
        match self {
            DegreeVerdict::Determined { dimension, .. } => dimension,
            DegreeVerdict::Undetermined { upper_bound, .. } => upper_bound,
        }
    }
}

/// Per-total-degree verdicts for a page.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceVerdict {
    pub degrees: BTreeMap<i64, DegreeVerdict>,
}

impl ConvergenceVerdict {
    /// Verdict in total degree `m`; degrees outside the page are zero.
    pub fn degree(&self, m: i64) -> DegreeVerdict {
        self.degrees.get(&m).cloned().unwrap_or(DegreeVerdict::Determined {
            dimension: BigUint::zero(),
            profile: CohomologyProfile::empty(),
        })
    }

    pub fn all_determined(&self) -> bool {
        self.degrees.values().all(DegreeVerdict::is_determined)
    }
}

/// Decides which total degrees of the abutment are fixed by the `E_1` page alone.
pub fn analyze(page: &KoszulPage) -> ConvergenceVerdict {
    let p_min = page.p_min();
    let q_max = page.q_max() as i64;
    let span = (q_max - p_min + 2) as usize;
    let mut degrees = BTreeMap::new();
    for m in page.total_degrees() {
        let mut dimension = BigUint::zero();
        let mut profile = CohomologyProfile::empty();
        let mut blocking = Vec::new();
        for p in p_min..=0 {
            let q = m - p;
            if !(0..=q_max).contains(&q) || !page.occupied(p, q) {
                continue;
            }
            dimension += page.entry_dimension(p, q as usize);
            profile.absorb(&page.entry(p, q as usize), 1);
            for r in 1..span {
                let r_i = r as i64;
                let (tp, tq) = (p + r_i, q - r_i + 1);
                if page.occupied(tp, tq) {
                    blocking.push(BlockingPair { source: (p, q as usize), target: (tp, tq as usize), r });
                }
                let (sp, sq) = (p - r_i, q + r_i - 1);
                if page.occupied(sp, sq) {
                    blocking.push(BlockingPair { source: (sp, sq as usize), target: (p, q as usize), r });
                }
            }
        }
        let verdict = if blocking.is_empty() {
            DegreeVerdict::Determined { dimension, profile }
        } else {
            blocking.sort();
            blocking.dedup();
            DegreeVerdict::Undetermined { upper_bound: dimension, blocking }
        };
        degrees.insert(m, verdict);
    }
    ConvergenceVerdict { degrees }
}

/// `h^m(F|_Z)` if it can be pinned down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RestrictedValue {
    Determined(BigUint),
    Undetermined { upper_bound: BigUint, reason: String },
}

impl RestrictedValue {
    pub fn value(&self) -> Option<&BigUint> {
        match self {
            RestrictedValue::Determined(v) => Some(v),
            RestrictedValue::Undetermined { .. } => None,
        }
    }
}

impl fmt::Display for RestrictedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RestrictedValue::Determined(v) => write!(f, "{v}"),
            RestrictedValue::Undetermined { upper_bound, reason } => {
                write!(f, "<= {upper_bound} (undetermined: {reason})")
            }
        }
    }
}

/// The piece of `… -> H^m(I⊗F) -> H^m(F) -> H^m(F|_Z) -> H^{m+1}(I⊗F) -> …`
/// around the restriction map in degree `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedDegree {
    /// `h^m(F)` on the ambient space.
    pub ambient: BigUint,
    /// Kernel of `H^m(F) -> H^m(F|_Z)`, the image of `H^m(I⊗F)`.
    pub kernel: Option<BigUint>,
    /// Cokernel of the restriction map, the kernel of `H^{m+1}(I⊗F) -> H^{m+1}(F)`.
    pub cokernel: Option<BigUint>,
    pub value: RestrictedValue,
}

impl RestrictedDegree {
    pub fn is_isomorphism(&self) -> Option<bool> {
        Some(self.kernel.as_ref()?.is_zero() && self.cokernel.as_ref()?.is_zero())
    }

    pub fn is_surjective(&self) -> Option<bool> {
        Some(self.cokernel.as_ref()?.is_zero())
    }
}

/// `H^*(F|_Z)` degree by degree, from the ambient cohomology of `F` and the
/// ideal-sheaf page.
#[derive(Clone, Debug)]
pub struct RestrictedCohomology {
    pub ideal_page: KoszulPage,
    pub ideal_verdict: ConvergenceVerdict,
    pub ambient: CohomologyProfile,
    pub degrees: BTreeMap<usize, RestrictedDegree>,
}

impl RestrictedCohomology {
    pub fn degree(&self, m: usize) -> &RestrictedDegree {
        &self.degrees[&m]
    }

    pub fn value(&self, m: usize) -> Option<&BigUint> {
        self.degrees.get(&m)?.value.value()
    }

    pub fn all_determined(&self) -> bool {
        self.degrees.values().all(|d| d.value.value().is_some())
    }

    pub fn euler_characteristic(&self) -> Option<BigInt> {
        let mut chi = BigInt::zero();
        for (&m, d) in &self.degrees {
            let v = BigInt::from(d.value.value()?.clone());
            if m % 2 == 0 {
                chi += v;
            } else {
                chi -= v;
            }
        }
        Some(chi)
    }
}

/// Computes `H^*(F|_Z)` through the long exact sequence of
/// `0 -> I_Z ⊗ F -> F -> F|_Z -> 0`.
///
/// The map `α_j : H^j(I⊗F) -> H^j(F)` has known rank when either side
/// vanishes, and in degree 0 it is injective because `H^{-1}(F|_Z) = 0`.
pub fn restricted_cohomology(ctx: GrassmannianContext, f: &EquivariantClass) -> Result<RestrictedCohomology> {
    let ideal_page = build_page(ctx, PageVariant::IdealSheaf, f)?;
    let ideal_verdict = analyze(&ideal_page);
    let ambient = f.cohomology();

    let alpha_rank = |j: usize| -> std::result::Result<BigUint, String> {
        let h_ideal = ideal_verdict.degree(j as i64);
        let h_amb = ambient.dimension(j);
        let Some(hi) = h_ideal.dimension() else {
            if h_amb.is_zero() {
                return Ok(BigUint::zero());
            }
            return Err(format!("H^{j}(I⊗F) is not determined by the E1 page"));
        };
        if hi.is_zero() || h_amb.is_zero() {
            Ok(BigUint::zero())
        } else if j == 0 {
            assert!(hi <= &h_amb, "H^0(I⊗F) injects into H^0(F)");
            Ok(hi.clone())
        } else {
            Err(format!("rank of H^{j}(I⊗F) -> H^{j}(F) is not forced"))
        }
    };

    let mut degrees = BTreeMap::new();
    for m in 0..=ctx.dimension() {
        let h_amb = ambient.dimension(m);
        let kernel = alpha_rank(m);
        let next_ideal = ideal_verdict.degree(m as i64 + 1);
        let cokernel = match (next_ideal.dimension(), alpha_rank(m + 1)) {
            (Some(h), Ok(rank)) => Ok(h - rank),
            (None, _) => Err(format!("H^{}(I⊗F) is not determined by the E1 page", m + 1)),
            (_, Err(e)) => Err(e),
        };
        let value = match (&kernel, &cokernel) {
            (Ok(k), Ok(c)) => RestrictedValue::Determined(&h_amb - k + c),
            (Err(e), _) | (_, Err(e)) => RestrictedValue::Undetermined {
                upper_bound: &h_amb + next_ideal.upper_bound(),
                reason: e.clone(),
            },
        };
        degrees.insert(
            m,
            RestrictedDegree { ambient: h_amb, kernel: kernel.ok(), cokernel: cokernel.ok(), value },
        );
    }
    Ok(RestrictedCohomology { ideal_page, ideal_verdict, ambient, degrees })
}

/// Cross-checks Euler characteristics between the two pages, the ambient
/// cohomology and the abutments that could be determined.
pub fn euler_consistency(ctx: GrassmannianContext, f: &EquivariantClass) -> Result<bool> {
    let ideal = build_page(ctx, PageVariant::IdealSheaf, f)?;
    let restriction = build_page(ctx, PageVariant::Restriction, f)?;
    let chi_ambient = f.cohomology().euler_characteristic();

    let mut ok = restriction.euler_characteristic() == &chi_ambient - ideal.euler_characteristic();

    for page in [&ideal, &restriction] {
        let verdict = analyze(page);
        if verdict.all_determined() {
            let mut chi = BigInt::zero();
            for (m, v) in &verdict.degrees {
                let d = BigInt::from(v.dimension().expect("determined").clone());
                if m.rem_euclid(2) == 0 {
                    chi += d;
                } else {
                    chi -= d;
                }
            }
            ok &= chi == page.euler_characteristic();
        }
    }

    if let Some(chi) = restricted_cohomology(ctx, f)?.euler_characteristic() {
        ok &= chi == restriction.euler_characteristic();
    }
    Ok(ok)
}

/// One Koszul term `∧^j S^3 S ⊗ F` on `Gr(2, d+2)` with its cohomology.
#[derive(Clone, Debug)]
pub struct KoszulTerm {
    pub coefficient: NamedSheaf,
    pub wedge_level: usize,
    pub class: EquivariantClass,
    pub cohomology: CohomologyProfile,
}

impl KoszulTerm {
    pub fn label(&self) -> String {
        let coeff = match self.coefficient {
            NamedSheaf::Tangent => "Θ".to_string(),
            NamedSheaf::SymCubeDual => "S^3 S^∨".to_string(),
            other => other.to_string(),
        };
        if self.wedge_level == 1 {
            format!("S^3 S ⊗ {coeff}")
        } else {
            format!("∧^{} S^3 S ⊗ {coeff}", self.wedge_level)
        }
    }
}

/// All terms `∧^j S^3 S ⊗ Θ` and `∧^j S^3 S ⊗ S^3 S^∨`, `1 <= j <= 4`, on `Gr(2, d+2)`.
pub fn koszul_terms(d: usize) -> Result<Vec<KoszulTerm>> {
    let ctx = GrassmannianContext::new(2, d + 2)?;
    let conormal = NamedSheaf::SymCube.class(ctx)?;
    let mut out = Vec::new();
    for coefficient in [NamedSheaf::Tangent, NamedSheaf::SymCubeDual] {
        let f = coefficient.class(ctx)?;
        for wedge_level in 1..=4 {
            let class = conormal.wedge(wedge_level)?.tensor(&f)?;
            let cohomology = class.cohomology();
            out.push(KoszulTerm { coefficient, wedge_level, class, cohomology });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(d: usize) -> GrassmannianContext {
        GrassmannianContext::lines(d)
    }

    fn named(ctx: GrassmannianContext, s: NamedSheaf) -> EquivariantClass {
        s.class(ctx).unwrap()
    }

    #[test]
    fn ideal_page_of_tangent_vanishes_for_large_d() {
        let ctx = lines(9);
        let page = build_page(ctx, PageVariant::IdealSheaf, &named(ctx, NamedSheaf::Tangent)).unwrap();
        assert!(page.is_zero());
        assert_eq!(page.p_min(), -3);
    }

    #[test]
    fn ideal_page_of_normal_bundle_at_d5() {
        let ctx = lines(5);
        let page = build_page(ctx, PageVariant::IdealSheaf, &named(ctx, NamedSheaf::SymCubeDual)).unwrap();
        let entries = page.nonzero_entries();
        assert_eq!(entries.len(), 2);
        assert!(entries.contains(&((0, 0), BigUint::from(1u32))));
        let (pos, dim) = entries.iter().find(|(pq, _)| *pq != (0, 0)).unwrap();
        // column -2 carries ∧^3 S^3 S
        assert_eq!(*pos, (-2, 5));
        assert_eq!(*dim, BigUint::from(7u32));
    }

    #[test]
    fn restriction_page_on_projective_space() {
        let ctx = GrassmannianContext::projective(5);
        let page = build_page(ctx, PageVariant::Restriction, &named(ctx, NamedSheaf::Twist(3))).unwrap();
        let entries = page.nonzero_entries();
        // h^0(O_{P^6}(3)) = C(9,3) = 84 and h^0(O) = 1
        assert_eq!(
            entries,
            vec![((-1, 0), BigUint::from(1u32)), ((0, 0), BigUint::from(84u32))]
        );
    }

    #[test]
    fn verdicts() {
        for (d, sheaf, expect) in [
            (6, NamedSheaf::SymCubeDual, [1u32, 0, 0]),
            (5, NamedSheaf::SymCubeDual, [1, 0, 0]),
            (5, NamedSheaf::Tangent, [0, 0, 0]),
        ] {
            let ctx = lines(d);
            let v = analyze(&build_page(ctx, PageVariant::IdealSheaf, &named(ctx, sheaf)).unwrap());
            for (m, want) in expect.iter().enumerate() {
                assert_eq!(v.degree(m as i64).dimension(), Some(&BigUint::from(*want)), "d={d} {sheaf} m={m}");
            }
        }
    }

    #[test]
    fn restriction_page_reports_blocking_pairs() {
        let ctx = lines(6);
        let page = build_page(ctx, PageVariant::Restriction, &named(ctx, NamedSheaf::SymCubeDual)).unwrap();
        let v = analyze(&page);
        match v.degree(0) {
            DegreeVerdict::Undetermined { upper_bound, blocking } => {
                assert_eq!(upper_bound, BigUint::from(120u32));
                assert_eq!(blocking, vec![BlockingPair { source: (-1, 0), target: (0, 0), r: 1 }]);
            }
            other => panic!("expected undetermined, got {other:?}"),
        }
    }

    #[test]
    fn restricted_values() {
        let ctx = lines(5);
        let t = restricted_cohomology(ctx, &named(ctx, NamedSheaf::Tangent)).unwrap();
        assert_eq!(t.value(0), Some(&BigUint::from(48u32)));
        assert_eq!(t.value(1), Some(&BigUint::zero()));
        assert_eq!(t.degree(0).is_isomorphism(), Some(true));

        let n = restricted_cohomology(ctx, &named(ctx, NamedSheaf::SymCubeDual)).unwrap();
        assert_eq!(n.value(0), Some(&BigUint::from(83u32)));
        assert_eq!(n.degree(0).kernel, Some(BigUint::from(1u32)));
        assert_eq!(n.degree(0).is_surjective(), Some(true));

        let p4 = GrassmannianContext::projective(3);
        let tp = restricted_cohomology(p4, &named(p4, NamedSheaf::Tangent)).unwrap();
        assert_eq!(tp.value(0), Some(&BigUint::from(24u32)));
        assert_eq!(tp.value(1), Some(&BigUint::zero()));
    }

    #[test]
    fn euler_examples() {
        assert!(euler_consistency(lines(6), &named(lines(6), NamedSheaf::SymCubeDual)).unwrap());
        assert!(euler_consistency(lines(5), &named(lines(5), NamedSheaf::Tangent)).unwrap());
        assert!(euler_consistency(lines(5), &EquivariantClass::zero(lines(5))).unwrap());
    }

    #[test]
    fn wrong_context_is_rejected() {
        let f = named(lines(5), NamedSheaf::Tangent);
        assert!(build_page(lines(6), PageVariant::IdealSheaf, &f).is_err());
        let g3 = GrassmannianContext::new(3, 6).unwrap();
        assert!(build_page(g3, PageVariant::IdealSheaf, &EquivariantClass::trivial(g3)).is_err());
    }
}
