//! First-order deformation counts for a smooth cubic `X ⊂ P^{d+1}` and its
//! Fano scheme of lines `F(X) ⊂ Gr(2, d+2)`.
//!
//! Both sides use the normal sequence `0 -> Θ_Z -> Θ_amb|_Z -> N -> 0`. When
//! `H^0(Θ_Z) = 0` and `H^1(Θ_amb|_Z) = 0` it collapses to
//! `h^1(Θ_Z) = h^0(N) - h^0(Θ_amb|_Z)`. The first vanishing is imported as an
//! axiom; the second is computed.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bbw::GrassmannianContext;
use crate::error::{Error, Result};
use crate::koszul::{restricted_cohomology, RestrictedCohomology};
use crate::sheaf::NamedSheaf;

/// Facts that are consumed rather than computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    H0TangentFanoZero,
    KanVanishing,
    H0TangentCubicZero,
    HqTangentCubicZero,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::H0TangentFanoZero,
        Axiom::KanVanishing,
        Axiom::H0TangentCubicZero,
        Axiom::HqTangentCubicZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::H0TangentFanoZero => "H0_tangent_fano_zero",
            Axiom::KanVanishing => "KAN_vanishing",
            Axiom::H0TangentCubicZero => "H0_tangent_cubic_zero",
            Axiom::HqTangentCubicZero => "Hq_tangent_cubic_zero",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Axiom::H0TangentFanoZero => {
                "H^0(Θ_F(X)) = 0 for the Fano scheme of a smooth cubic (Huybrechts, Cor. 3.3.13)"
            }
            Axiom::KanVanishing => {
                "H^q(Θ_F(X)) = 0 for q >= 2 when d >= 5, via Θ ≅ Ω^{2d-5} ⊗ ω^∨ and Kodaira–Akizuki–Nakano vanishing"
            }
            Axiom::H0TangentCubicZero => "H^0(Θ_X) = 0 for a smooth cubic hypersurface (Kodaira–Spencer)",
            Axiom::HqTangentCubicZero => "H^q(Θ_X) = 0 for q != 1 for a smooth cubic hypersurface (Kodaira–Spencer)",
        }
    }

    pub fn from_name(name: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.name() == name)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name(), self.statement())
    }
}

/// The registry of imported facts.
#[derive(Clone, Copy, Debug, Default)]
pub struct AxiomRegistry;

impl AxiomRegistry {
    pub fn axioms(&self) -> &'static [Axiom] {
        &Axiom::ALL
    }

    pub fn lookup(&self, name: &str) -> Option<Axiom> {
        Axiom::from_name(name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// The cubic `X ⊂ P^{d+1}`.
    Cubic,
    /// Its Fano scheme `F(X) ⊂ Gr(2, d+2)`.
    Fano,
}

impl Side {
    pub fn context(self, d: usize) -> GrassmannianContext {
        match self {
            Side::Cubic => GrassmannianContext::projective(d),
            Side::Fano => GrassmannianContext::lines(d),
        }
    }

    pub fn min_d(self) -> usize {
        match self {
            Side::Cubic => 3,
            Side::Fano => 5,
        }
    }

    /// Imported `H^0(Θ) = 0`.
    pub fn h0_axiom(self) -> Axiom {
        match self {
            Side::Cubic => Axiom::H0TangentCubicZero,
            Side::Fano => Axiom::H0TangentFanoZero,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Cubic => write!(f, "cubic"),
            Side::Fano => write!(f, "fano"),
        }
    }
}

/// Restricted cohomology of the normal bundle and of the ambient tangent
/// bundle on the zero locus.
#[derive(Clone, Debug)]
pub struct NormalSequence {
    pub side: Side,
    pub d: usize,
    pub normal: RestrictedCohomology,
    pub ambient_tangent: RestrictedCohomology,
}

impl NormalSequence {
    pub fn compute(d: usize, side: Side) -> Result<Self> {
        if d < 3 {
            return Err(Error::DimensionOutOfRange { d, min: 3 });
        }
        let ctx = side.context(d);
        let normal = restricted_cohomology(ctx, &NamedSheaf::SymCubeDual.class(ctx)?)?;
        let ambient_tangent = restricted_cohomology(ctx, &NamedSheaf::Tangent.class(ctx)?)?;
        Ok(Self { side, d, normal, ambient_tangent })
    }

    /// Whether `H^q(Θ_Z) = 0` for every `q >= 2` follows from the computed
    /// groups alone, i.e. `h^{q-1}(N) = 0` and `h^q(Θ_amb|_Z) = 0`.
    pub fn higher_vanishing_computed(&self) -> bool {
        let top = self.side.context(self.d).dimension();
        (2..=top).all(|q| {
            let zero = |r: &RestrictedCohomology, m: usize| r.value(m).is_some_and(Zero::is_zero);
            zero(&self.normal, q - 1) && zero(&self.ambient_tangent, q)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationNumbers {
    pub d: usize,
    pub side: Side,
    pub h0_normal: BigUint,
    pub h0_ambient_tangent_restricted: BigUint,
    pub h1_tangent: BigUint,
    pub axioms_used: Vec<Axiom>,
}

/// `h^1` of the tangent sheaf of the cubic or of its Fano scheme.
pub fn deformation_numbers(d: usize, side: Side) -> Result<DeformationNumbers> {
    if d < side.min_d() {
        return Err(Error::DimensionOutOfRange { d, min: side.min_d() });
    }
    let seq = NormalSequence::compute(d, side)?;
    let undetermined = |what: &str, reason: String| Error::Underdetermined { what: what.to_string(), reason };

    let h0_normal = seq
        .normal
        .value(0)
        .cloned()
        .ok_or_else(|| undetermined("h^0(N)", seq.normal.degree(0).value.to_string()))?;
    let h0_amb = seq
        .ambient_tangent
        .value(0)
        .cloned()
        .ok_or_else(|| undetermined("h^0(Θ_amb|Z)", seq.ambient_tangent.degree(0).value.to_string()))?;
    match seq.ambient_tangent.value(1) {
        Some(v) if v.is_zero() => {}
        Some(v) => return Err(undetermined("h^1(Θ_Z)", format!("h^1(Θ_amb|Z) = {v} is nonzero"))),
        None => {
            return Err(undetermined(
                "h^1(Θ_Z)",
                seq.ambient_tangent.degree(1).value.to_string(),
            ))
        }
    }
    if h0_amb > h0_normal {
        return Err(undetermined("h^1(Θ_Z)", "h^0(Θ_amb|Z) exceeds h^0(N)".into()));
    }
    let h1_tangent = &h0_normal - &h0_amb;
    Ok(DeformationNumbers {
        d,
        side,
        h0_normal,
        h0_ambient_tangent_restricted: h0_amb,
        h1_tangent,
        axioms_used: vec![side.h0_axiom()],
    })
}
