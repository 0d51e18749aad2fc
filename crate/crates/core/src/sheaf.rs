//! Formal direct sums of irreducible homogeneous bundles.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::bbw::{bbw_cohomology, CohomologyProfile, GrassmannianContext, IrreducibleHomogeneousBundle};
use crate::error::{Error, Result};
use crate::gl2::{gl2_tensor, wedge_power_gl2};
use crate::lr::littlewood_richardson_bounded;
use crate::weight::DominantWeight;

/// A `GL(V)`-equivariant bundle on a Grassmannian, as a multiset of
/// irreducible summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantClass {
    ctx: GrassmannianContext,
    summands: BTreeMap<IrreducibleHomogeneousBundle, u64>,
}

impl EquivariantClass {
    pub fn zero(ctx: GrassmannianContext) -> Self {
        Self { ctx, summands: BTreeMap::new() }
    }

    pub fn irreducible(ctx: GrassmannianContext, b: IrreducibleHomogeneousBundle) -> Self {
        let mut c = Self::zero(ctx);
        c.add_summand(b, 1);
        c
    }

    pub fn trivial(ctx: GrassmannianContext) -> Self {
        Self::irreducible(ctx, IrreducibleHomogeneousBundle::trivial(&ctx))
    }

    /// Builds a class from `(λ, μ, multiplicity)` triples.
    pub fn from_entries(ctx: GrassmannianContext, entries: &[(&[i64], &[i64], u64)]) -> Result<Self> {
        let mut c = Self::zero(ctx);
        for &(l, m, mult) in entries {
            c.add_summand(IrreducibleHomogeneousBundle::from_entries(&ctx, l, m)?, mult);
        }
        Ok(c)
    }

    pub fn add_summand(&mut self, b: IrreducibleHomogeneousBundle, multiplicity: u64) {
        if multiplicity > 0 {
            *self.summands.entry(b).or_insert(0) += multiplicity;
        }
    }

    pub fn context(&self) -> GrassmannianContext {
        self.ctx
    }

    pub fn summands(&self) -> impl Iterator<Item = (&IrreducibleHomogeneousBundle, u64)> {
        self.summands.iter().map(|(b, &m)| (b, m))
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn rank(&self) -> BigUint {
        self.summands.iter().map(|(b, &m)| b.rank() * m).sum()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (b, m) in other.summands() {
            out.add_summand(b.clone(), m);
        }
        Ok(out)
    }

    /// Tensor with `det(V)^t`.
    pub fn twist(&self, t: i64) -> Self {
        Self {
            ctx: self.ctx,
            summands: self.summands.iter().map(|(b, &m)| (b.twist(t), m)).collect(),
        }
    }

    pub fn dual(&self) -> Self {
        Self {
            ctx: self.ctx,
            summands: self.summands.iter().map(|(b, &m)| (b.dual(), m)).collect(),
        }
    }

    /// Tensor product, extended bilinearly. `Q`-factors multiply by
    /// Littlewood–Richardson (dropping Schur functors with more than
    /// `rank Q` rows), `S`-factors by Clebsch–Gordan when `k = 2`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(self.ctx);
        for (a, ma) in self.summands() {
            for (b, mb) in other.summands() {
                let q_part = tensor_weights(a.quotient(), b.quotient())?;
                let s_part = tensor_weights(a.sub(), b.sub())?;
                for (lq, mq) in &q_part {
                    for (ls, ms) in &s_part {
                        out.add_summand(
                            IrreducibleHomogeneousBundle::from_parts_unchecked(lq.clone(), ls.clone()),
                            ma * mb * mq * ms,
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    /// `∧^j` of a single irreducible summand that only involves `S`.
    pub fn wedge(&self, j: usize) -> Result<Self> {
        if j == 0 {
            return Ok(Self::trivial(self.ctx));
        }
        let mut it = self.summands();
        let (b, mult) = match (it.next(), it.next()) {
            (Some(first), None) => first,
            _ => return Err(Error::UnsupportedWedge),
        };
        if mult != 1 || !b.quotient().is_zero() {
            return Err(Error::UnsupportedWedge);
        }
        let zero_q = DominantWeight::zero(self.ctx.quotient_rank());
        match self.ctx.k() {
            1 => Ok(if j == 1 { self.clone() } else { Self::zero(self.ctx) }),
            2 => {
                let mut out = Self::zero(self.ctx);
                for (w, m) in wedge_power_gl2(b.sub(), j)? {
                    out.add_summand(IrreducibleHomogeneousBundle::from_parts_unchecked(zero_q.clone(), w), m);
                }
                Ok(out)
            }
            _ => Err(Error::UnsupportedWedge),
        }
    }

    /// Direct sum of the Borel–Bott–Weil cohomology of the summands.
    pub fn cohomology(&self) -> CohomologyProfile {
        let mut out = CohomologyProfile::empty();
        for (b, m) in self.summands() {
            out.absorb(&bbw_cohomology(&self.ctx, b), m);
        }
        out
    }

    /// The `t` with `self ⊗ det(V)^t = other`, if there is one.
    pub fn det_shift_to(&self, other: &Self) -> Option<i64> {
        if self.ctx != other.ctx || self.summands.len() != other.summands.len() {
            return None;
        }
        if self.is_empty() {
            return Some(0);
        }
        let size = |c: &Self| -> i64 {
            c.summands()
                .map(|(b, m)| (b.quotient().size() + b.sub().size()) * m as i64)
                .sum()
        };
        let count: i64 = self.summands().map(|(_, m)| m as i64).sum();
        let diff = size(other) - size(self);
        let step = count * self.ctx.n() as i64;
        if diff % step != 0 {
            return None;
        }
        let t = diff / step;
        (self.twist(t) == *other).then_some(t)
    }
}

/// True iff the classes agree after tensoring one with a power of `det(V)`.
pub fn equal_mod_det(a: &EquivariantClass, b: &EquivariantClass) -> bool {
    a.det_shift_to(b).is_some()
}

/// Tensor product of two irreducible `GL_r` weights, `r = a.len()`.
fn tensor_weights(a: &DominantWeight, b: &DominantWeight) -> Result<BTreeMap<DominantWeight, u64>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: b.len() });
    }
    let r = a.len();
    if r == 2 {
        return gl2_tensor(a, b);
    }
    // shift into partitions, multiply, shift back
    let sa = -a.last().unwrap_or(0);
    let sb = -b.last().unwrap_or(0);
    let pa = a.twist(sa).to_partition().expect("shifted weight is a partition");
    let pb = b.twist(sb).to_partition().expect("shifted weight is a partition");
    let mut out = BTreeMap::new();
    for (nu, m) in littlewood_richardson_bounded(&pa, &pb, r) {
        let w = nu.to_weight(r).expect("bounded by r rows").twist(-(sa + sb));
        *out.entry(w).or_insert(0) += m;
    }
    Ok(out)
}

impl fmt::Display for EquivariantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, m)) in self.summands().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            if m > 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Bundles referred to by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSheaf {
    /// `S`.
    TautologicalSub,
    /// `Q`.
    Quotient,
    /// `Θ = Q ⊗ S^∨`.
    Tangent,
    /// `S^3 S`.
    SymCube,
    /// `S^3 S^∨`.
    SymCubeDual,
    /// `O(m)` on projective space, where `O(1) = S^∨`.
    Twist(i64),
}

impl NamedSheaf {
    pub fn class(self, ctx: GrassmannianContext) -> Result<EquivariantClass> {
        let r = ctx.quotient_rank();
        let k = ctx.k();
        let unit = |len: usize, first: i64, last: i64| -> Vec<i64> {
            let mut v = vec![0; len];
            v[0] += first;
            v[len - 1] += last;
            v
        };
        let (q, s) = match self {
            NamedSheaf::TautologicalSub => (vec![0; r], unit(k, 1, 0)),
            NamedSheaf::Quotient => (unit(r, 1, 0), vec![0; k]),
            NamedSheaf::Tangent => (unit(r, 1, 0), unit(k, 0, -1)),
            NamedSheaf::SymCube => (vec![0; r], unit(k, 3, 0)),
            NamedSheaf::SymCubeDual => (vec![0; r], unit(k, 0, -3)),
            NamedSheaf::Twist(m) => {
                if k != 1 {
                    return Err(Error::SheafUnavailable { name: self.to_string(), k, n: ctx.n() });
                }
                (vec![0; r], vec![-m])
            }
        };
        EquivariantClass::from_entries(ctx, &[(&q, &s, 1)])
    }
}

impl fmt::Display for NamedSheaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedSheaf::TautologicalSub => write!(f, "tautological_sub"),
            NamedSheaf::Quotient => write!(f, "quotient"),
            NamedSheaf::Tangent => write!(f, "tangent"),
            NamedSheaf::SymCube => write!(f, "sym_cube"),
            NamedSheaf::SymCubeDual => write!(f, "sym_cube_dual"),
            NamedSheaf::Twist(m) => write!(f, "O({m})"),
        }
    }
}

impl FromStr for NamedSheaf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "S" | "tautological_sub" => NamedSheaf::TautologicalSub,
            "Q" | "quotient" => NamedSheaf::Quotient,
            "T" | "tangent" => NamedSheaf::Tangent,
            "S3S" | "sym_cube" => NamedSheaf::SymCube,
            "S3S*" | "sym_cube_dual" => NamedSheaf::SymCubeDual,
            _ => {
                let inner = s
                    .strip_prefix("O(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::UnknownSheaf(s.to_string()))?;
                NamedSheaf::Twist(inner.parse().map_err(|_| Error::UnknownSheaf(s.to_string()))?)
            }
        })
    }
}

/// Looks a sheaf up by name on `ctx`.
pub fn named_class(ctx: GrassmannianContext, name: &str) -> Result<EquivariantClass> {
    name.parse::<NamedSheaf>()?.class(ctx)
}

/// One line of the table of tensor decompositions on `Gr(2, d+2)` that feed
/// the vanishing lemma.
#[derive(Clone, Debug)]
pub struct DecompositionCheck {
    pub line_id: &'static str,
    /// Left-hand side in words, e.g. `∧^2 S^3 S ⊗ Θ`.
    pub lhs: &'static str,
    pub computed: EquivariantClass,
    /// Right-hand side as displayed, with `det V` trivialized.
    pub expected: EquivariantClass,
    /// The determinant twist carrying `computed` onto `expected`.
    pub shift: Option<i64>,
}

impl DecompositionCheck {
    pub fn matches(&self) -> bool {
        self.shift.is_some()
    }
}

/// Recomputes the eight decompositions `∧^i S^3 S ⊗ F` (for `F = Θ` with
/// `1 <= i <= 4`, and `F = S^3 S^∨` with `1 <= i <= 4`) and compares each to the
/// hand-derived right-hand side modulo `det V`.
pub fn verify_decompositions(d: usize) -> Result<Vec<DecompositionCheck>> {
    if d < 3 {
        return Err(Error::DimensionOutOfRange { d, min: 3 });
    }
    let ctx = GrassmannianContext::lines(d);
    let sym3 = NamedSheaf::SymCube.class(ctx)?;
    let tangent = NamedSheaf::Tangent.class(ctx)?;
    let normal = NamedSheaf::SymCubeDual.class(ctx)?;

    let hook: Vec<i64> = std::iter::once(2).chain(std::iter::repeat_n(1, d - 1)).collect();
    let std_q: Vec<i64> = std::iter::once(1).chain(std::iter::repeat_n(0, d - 1)).collect();
    let threes = vec![3i64; d];
    let zeros = vec![0i64; d];

    type Rhs<'a> = (&'static str, &'static str, usize, bool, &'a [i64], Vec<(&'static [i64], u64)>);
    let table: Vec<Rhs> = vec![
        ("sym3-tangent", "S^3 S ⊗ Θ", 1, true, &hook, vec![(&[4, 0], 1), (&[3, 1], 1)]),
        ("wedge2-tangent", "∧^2 S^3 S ⊗ Θ", 2, true, &std_q, vec![(&[5, 0], 1), (&[4, 1], 1), (&[3, 2], 1)]),
        ("wedge3-tangent", "∧^3 S^3 S ⊗ Θ", 3, true, &std_q, vec![(&[6, 2], 1), (&[5, 3], 1)]),
        ("wedge4-tangent", "∧^4 S^3 S ⊗ Θ", 4, true, &std_q, vec![(&[6, 5], 1)]),
        (
            "sym3-normal",
            "S^3 S ⊗ S^3 S^∨",
            1,
            false,
            &threes,
            vec![(&[6, 0], 1), (&[5, 1], 1), (&[4, 2], 1), (&[3, 3], 1)],
        ),
        (
            "wedge2-normal",
            "∧^2 S^3 S ⊗ S^3 S^∨",
            2,
            false,
            &threes,
            vec![(&[8, 1], 1), (&[7, 2], 1), (&[6, 3], 2), (&[5, 4], 1)],
        ),
        (
            "wedge3-normal",
            "∧^3 S^3 S ⊗ S^3 S^∨",
            3,
            false,
            &zeros,
            vec![(&[6, 0], 1), (&[5, 1], 1), (&[4, 2], 1), (&[3, 3], 1)],
        ),
        ("wedge4-normal", "∧^4 S^3 S ⊗ S^3 S^∨", 4, false, &zeros, vec![(&[6, 3], 1)]),
    ];

    let mut out = Vec::with_capacity(table.len());
    for (line_id, lhs, level, is_tangent, q, s_parts) in table {
        let coeff = if is_tangent { &tangent } else { &normal };
        let computed = sym3.wedge(level)?.tensor(coeff)?;
        let entries: Vec<(&[i64], &[i64], u64)> = s_parts.iter().map(|&(s, m)| (q, s, m)).collect();
        let expected = EquivariantClass::from_entries(ctx, &entries)?;
        let shift = computed.det_shift_to(&expected);
        out.push(DecompositionCheck { line_id, lhs, computed, expected, shift });
    }
    Ok(out)
}
