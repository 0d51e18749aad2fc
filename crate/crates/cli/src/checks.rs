//! The check catalog and the code that runs one check at one `d`.

use std::fmt;

use bbw_core::gl2::multiset_character;
use bbw_core::{
    analyze, build_page, count_ssyt, deformation_numbers, euler_consistency, koszul_terms, littlewood_richardson,
    restricted_cohomology, serre_check, verify_decompositions, weyl_dimension, Axiom, CohomologyProfile,
    DominantWeight, EquivariantClass, Error as EngineError, GrassmannianContext, IrreducibleHomogeneousBundle,
    LaurentCharacter, NamedSheaf, NormalSequence, PageVariant, Partition, Side, WeightMultiset,
};
use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::golden::{Golden, GoldenError};
use crate::report::{number, CheckResult, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum CheckId {
    ExampleUniversal,
    LemmaS,
    #[value(name = "plethysm-eq4")]
    PlethysmEq4,
    Decompositions,
    LemmaCohomology,
    PropCubic,
    PropFano,
    TheoremModuli,
    #[value(name = "remark-d34")]
    RemarkD34,
    Oracles,
}

impl CheckId {
    /// Catalog order.
    pub const ALL: [CheckId; 10] = [
        CheckId::ExampleUniversal,
        CheckId::LemmaS,
        CheckId::PlethysmEq4,
        CheckId::Decompositions,
        CheckId::LemmaCohomology,
        CheckId::PropCubic,
        CheckId::PropFano,
        CheckId::TheoremModuli,
        CheckId::RemarkD34,
        CheckId::Oracles,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CheckId::ExampleUniversal => "example-universal",
            CheckId::LemmaS => "lemma-s",
            CheckId::PlethysmEq4 => "plethysm-eq4",
            CheckId::Decompositions => "decompositions",
            CheckId::LemmaCohomology => "lemma-cohomology",
            CheckId::PropCubic => "prop-cubic",
            CheckId::PropFano => "prop-fano",
            CheckId::TheoremModuli => "theorem-moduli",
            CheckId::RemarkD34 => "remark-d34",
            CheckId::Oracles => "oracles",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CheckId::ExampleUniversal => {
                "H^0(S^3 S^∨) = S^3 V^∨ of dim C(d+4,3) and H^0(Θ_G) of dim (d+2)^2-1, each the only nonzero group"
            }
            CheckId::LemmaS => "h^0(S^3 S^∨) on Gr(2,d+2) equals dim S^3 V^∨",
            CheckId::PlethysmEq4 => "∧^2 S^3 S = Σ^(5,1)S + Σ^(3,3)S, ∧^3 S^3 S = Σ^(6,3)S, ∧^4 S^3 S = Σ^(6,6)S",
            CheckId::Decompositions => "the eight decompositions of ∧^i S^3 S ⊗ Θ_G and ∧^i S^3 S ⊗ S^3 S^∨ modulo det V",
            CheckId::LemmaCohomology => {
                "vanishing table for ∧^i S^3 S ⊗ Θ_G and ∧^i S^3 S ⊗ S^3 S^∨; the two 7-dimensional groups at d = 5"
            }
            CheckId::PropCubic => {
                "h^0(I_X(3)) = 1, Θ_P(-3) acyclic so H^0(Θ_P) ≅ H^0(Θ_P|X) and H^1(Θ_P|X) = 0, h^1(Θ_X) = C(d+2,3)"
            }
            CheckId::PropFano => {
                "H^0(S^3 S^∨) -> H^0(N) surjective with kernel <s_f>, H^0(Θ_G) ≅ H^0(Θ_G|F), h^1(Θ_F) = C(d+2,3)"
            }
            CheckId::TheoremModuli => "h^1(Θ_X) = h^1(Θ_F(X)) = C(d+2,3)",
            CheckId::RemarkD34 => "E_1 pages and verdicts at d = 3, 4 (informational)",
            CheckId::Oracles => "Weyl/SSYT, LR, Serre duality and Euler characteristic property checks",
        }
    }

    pub fn informational(self) -> bool {
        self == CheckId::RemarkD34
    }

    /// Range of `d` the check is defined on.
    pub fn domain(self) -> (usize, usize) {
        match self {
            CheckId::LemmaCohomology | CheckId::PropFano | CheckId::TheoremModuli => (5, usize::MAX),
            CheckId::RemarkD34 => (3, 4),
            _ => (3, usize::MAX),
        }
    }

    pub fn from_id(s: &str) -> Option<CheckId> {
        CheckId::ALL.into_iter().find(|c| c.id() == s)
    }

    pub fn run(self, d: usize, golden: &Golden) -> CheckResult {
        let (lo, hi) = self.domain();
        if d < lo || d > hi {
            let range = if hi == usize::MAX { format!("d >= {lo}") } else { format!("{lo} <= d <= {hi}") };
            return CheckResult {
                check: self.id().into(),
                d,
                status: Status::Skipped,
                computed: Value::Null,
                expected: Value::Null,
                provenance: String::new(),
                axioms: vec![],
                notes: vec![format!("defined for {range}")],
            };
        }
        let mut rec = Recorder::new(golden, self.id(), d);
        let outcome = match self {
            CheckId::ExampleUniversal => example_universal(&mut rec),
            CheckId::LemmaS => lemma_s(&mut rec),
            CheckId::PlethysmEq4 => plethysm(&mut rec),
            CheckId::Decompositions => decompositions(&mut rec),
            CheckId::LemmaCohomology => lemma_cohomology(&mut rec),
            CheckId::PropCubic => prop_cubic(&mut rec),
            CheckId::PropFano => prop_fano(&mut rec),
            CheckId::TheoremModuli => theorem_moduli(&mut rec),
            CheckId::RemarkD34 => remark_d34(&mut rec),
            CheckId::Oracles => oracles(&mut rec),
        };
        if let Err(e) = outcome {
            rec.error(e);
        }
        rec.finish(self.informational())
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.id())
    }
}

#[derive(Debug)]
enum Failure {
    Engine(EngineError),
    Golden(GoldenError),
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        Failure::Engine(e)
    }
}

impl From<GoldenError> for Failure {
    fn from(e: GoldenError) -> Self {
        Failure::Golden(e)
    }
}

type Step = Result<(), Failure>;

/// Accumulates computed and expected values for one result and decides its status.
struct Recorder<'a> {
    golden: &'a Golden,
    check: &'static str,
    d: usize,
    computed: Map<String, Value>,
    expected: Map<String, Value>,
    provenance: Vec<String>,
    axioms: Vec<Axiom>,
    notes: Vec<String>,
    mismatches: usize,
    open: usize,
    discrepancies: usize,
    broken: bool,
}

impl<'a> Recorder<'a> {
    fn new(golden: &'a Golden, check: &'static str, d: usize) -> Self {
        Self {
            golden,
            check,
            d,
            computed: Map::new(),
            expected: Map::new(),
            provenance: Vec::new(),
            axioms: Vec::new(),
            notes: Vec::new(),
            mismatches: 0,
            open: 0,
            discrepancies: 0,
            broken: false,
        }
    }

    fn cite(&mut self, quantity: &str, provenance: &str) {
        let line = format!("{quantity}: {provenance}");
        if !self.provenance.contains(&line) {
            self.provenance.push(line);
        }
    }

    /// Compares against the golden row `quantity`; `None` means the engine
    /// could not pin the value down.
    fn exact(&mut self, quantity: &str, computed: Option<BigUint>) -> Result<BigUint, GoldenError> {
        let (want, provenance) = self.golden.value(self.check, quantity, self.d)?;
        let provenance = provenance.to_string();
        self.cite(quantity, &provenance);
        self.expected.insert(quantity.into(), number(&want));
        match computed {
            Some(got) => {
                if got != want {
                    self.mismatches += 1;
                    self.notes.push(format!("{quantity}: computed {got}, expected {want}"));
                }
                self.computed.insert(quantity.into(), number(&got));
            }
            None => {
                self.open += 1;
                self.computed.insert(quantity.into(), Value::Null);
            }
        }
        Ok(want)
    }

    /// A structural condition without a golden row.
    fn holds(&mut self, quantity: &str, ok: bool, computed: Value) {
        if !ok {
            self.mismatches += 1;
            self.notes.push(format!("{quantity} does not hold"));
        }
        self.expected.insert(quantity.into(), Value::Bool(true));
        self.computed.insert(quantity.into(), computed);
    }

    /// Like `holds`, but an undecided engine answer is recorded as open.
    fn holds_if_known(&mut self, quantity: &str, ok: Option<bool>) {
        match ok {
            Some(ok) => self.holds(quantity, ok, Value::Bool(ok)),
            None => {
                self.open += 1;
                self.expected.insert(quantity.into(), Value::Bool(true));
                self.computed.insert(quantity.into(), Value::Null);
            }
        }
    }

    fn show(&mut self, key: &str, v: Value) {
        self.computed.insert(key.into(), v);
    }

    fn error(&mut self, e: Failure) {
        match e {
            Failure::Engine(EngineError::Underdetermined { what, reason }) => {
                self.open += 1;
                self.notes.push(format!("{what} undetermined: {reason}"));
            }
            Failure::Engine(e) => {
                self.broken = true;
                self.notes.push(format!("engine error: {e}"));
            }
            Failure::Golden(e) => {
                self.broken = true;
                self.notes.push(e.to_string());
            }
        }
    }

    fn finish(mut self, informational: bool) -> CheckResult {
        self.axioms.sort();
        self.axioms.dedup();
        let status = if self.broken || self.mismatches > 0 {
            Status::Fail
        } else if informational {
            Status::Informational
        } else if self.open > 0 {
            Status::Undetermined
        } else if self.discrepancies > 0 {
            Status::PaperDiscrepancy
        } else {
            Status::Pass
        };
        CheckResult {
            check: self.check.into(),
            d: self.d,
            status,
            computed: Value::Object(self.computed),
            expected: Value::Object(self.expected),
            provenance: self.provenance.join("; "),
            axioms: self.axioms.iter().map(ToString::to_string).collect(),
            notes: self.notes,
        }
    }
}

fn sole_degree(p: &CohomologyProfile) -> Option<usize> {
    let mut it = p.degrees();
    let q = it.next()?;
    it.next().is_none().then_some(q)
}

fn weights_json<'w>(ws: impl IntoIterator<Item = &'w DominantWeight>) -> Value {
    Value::Array(ws.into_iter().map(|w| Value::String(w.to_string())).collect())
}

fn example_universal(rec: &mut Recorder) -> Step {
    let ctx = GrassmannianContext::lines(rec.d);
    let n = ctx.n();
    for (quantity, sheaf, weight) in [
        ("h0_sym3_dual", NamedSheaf::SymCubeDual, {
            let mut w = vec![0; n];
            w[n - 1] = -3;
            w
        }),
        ("h0_tangent", NamedSheaf::Tangent, {
            let mut w = vec![0; n];
            w[0] = 1;
            w[n - 1] = -1;
            w
        }),
    ] {
        let h = sheaf.class(ctx)?.cohomology();
        rec.exact(quantity, Some(h.dimension(0)))?;
        rec.holds(&format!("{quantity}_only_group"), sole_degree(&h) == Some(0), json!(h.degrees().collect::<Vec<_>>()));
        let constituents: Vec<&DominantWeight> = h.constituents().collect();
        let ok = constituents.len() == 1 && constituents[0].entries() == weight.as_slice();
        rec.holds(&format!("{quantity}_weight"), ok, weights_json(constituents));
    }
    Ok(())
}

fn lemma_s(rec: &mut Recorder) -> Step {
    let ctx = GrassmannianContext::lines(rec.d);
    let h = NamedSheaf::SymCubeDual.class(ctx)?.cohomology();
    rec.exact("h0_sym3_dual", Some(h.dimension(0)))?;
    let mut w = vec![0; ctx.n()];
    w[ctx.n() - 1] = -3;
    let sym3_dual = weyl_dimension(&DominantWeight::new(w)?);
    rec.holds("equals_dim_sym3_dual_v", h.dimension(0) == sym3_dual, number(&sym3_dual));
    Ok(())
}

/// Character of `∧^j` of the rank-2 weight `(3,0)`, from `j`-subsets of its monomials.
fn wedge_sym3_character(j: usize) -> LaurentCharacter {
    let monomials: Vec<(i64, i64)> = (0..=3).map(|i| (3 - i, i)).collect();
    let mut out = LaurentCharacter::zero();
    for mask in 0u32..16 {
        if mask.count_ones() as usize == j {
            let (a, b) = (0..4)
                .filter(|i| mask & (1 << i) != 0)
                .fold((0, 0), |(a, b), i| (a + monomials[i].0, b + monomials[i].1));
            out.add_term((a, b), 1);
        }
    }
    out
}

fn plethysm(rec: &mut Recorder) -> Step {
    let ctx = GrassmannianContext::lines(rec.d);
    let sym3 = NamedSheaf::SymCube.class(ctx)?;
    let zero = DominantWeight::zero(ctx.quotient_rank());
    for (j, quantity) in [(2, "wedge2"), (3, "wedge3"), (4, "wedge4")] {
        let (weights, provenance) = rec.golden.weights(rec.check, quantity)?;
        let provenance = provenance.to_string();
        rec.cite(quantity, &provenance);
        let mut expected = EquivariantClass::zero(ctx);
        let mut multiset = WeightMultiset::new();
        for w in &weights {
            expected.add_summand(IrreducibleHomogeneousBundle::new(&ctx, zero.clone(), w.clone())?, 1);
            *multiset.entry(w.clone()).or_insert(0) += 1;
        }
        let got = sym3.wedge(j)?;
        let got_weights: Vec<&DominantWeight> = got.summands().map(|(b, _)| b.sub()).collect();
        rec.expected.insert(quantity.into(), weights_json(&weights));
        rec.holds(quantity, got == expected, weights_json(got_weights));
        let character = multiset_character(&multiset)?;
        rec.holds(&format!("{quantity}_character"), character == wedge_sym3_character(j), json!(character.to_string()));
    }
    Ok(())
}

fn decompositions(rec: &mut Recorder) -> Step {
    let lines = verify_decompositions(rec.d)?;
    let matching = lines.iter().filter(|l| l.matches()).count();
    rec.exact("matching_lines", Some(BigUint::from(matching)))?;
    let mut shifts = Map::new();
    for l in &lines {
        shifts.insert(l.line_id.into(), l.shift.map_or(Value::Null, Value::from));
        if !l.matches() {
            rec.notes.push(format!("{} ({}): computed {}, expected {} mod det", l.line_id, l.lhs, l.computed, l.expected));
        }
    }
    rec.show("det_shifts", Value::Object(shifts));
    Ok(())
}

fn lemma_cohomology(rec: &mut Recorder) -> Step {
    let d = rec.d;
    let terms = koszul_terms(d)?;
    let special = |t: &bbw_core::KoszulTerm| t.coefficient == NamedSheaf::SymCubeDual && t.wedge_level == 1;

    let trace = terms.iter().find(|t| special(t)).expect("S^3 S ⊗ S^3 S^∨ is a term");
    let trace_ok = sole_degree(&trace.cohomology) == Some(0);
    rec.exact("h0_sym3_tensor_dual", trace_ok.then(|| trace.cohomology.dimension(0)))?;
    if !trace_ok {
        rec.mismatches += 1;
        rec.notes.push(format!("{}: {}", trace.label(), trace.cohomology));
    }

    let mut table = Map::new();
    let mut extras = Vec::new();
    for t in &terms {
        table.insert(t.label(), json!(t.cohomology.to_string()));
        for q in t.cohomology.degrees() {
            if !(special(t) && q == 0) {
                extras.push((t.coefficient, t.wedge_level, q, t.cohomology.dimension(q)));
            }
        }
    }
    rec.show("table", Value::Object(table));

    let others = terms.len() - 1;
    if d >= 6 {
        let acyclic = terms.iter().filter(|t| !special(t) && t.cohomology.is_empty()).count();
        rec.exact("acyclic_classes", Some(BigUint::from(acyclic)))?;
        return Ok(());
    }

    // d = 5: exactly one group on each side
    let tangent: Vec<_> = extras.iter().filter(|e| e.0 == NamedSheaf::Tangent).collect();
    let normal: Vec<_> = extras.iter().filter(|e| e.0 == NamedSheaf::SymCubeDual).collect();
    rec.holds(
        "d5_one_group_per_side",
        tangent.len() == 1 && normal.len() == 1,
        json!({"tangent": tangent.len(), "normal": normal.len()}),
    );
    rec.show("d5_acyclic_classes", json!(others - extras.len()));
    if let (Some(t), Some(n)) = (tangent.first(), normal.first()) {
        rec.exact("d5_tangent_dimension", Some(t.3.clone()))?;
        rec.exact("d5_normal_dimension", Some(n.3.clone()))?;
        rec.exact("d5_tangent_degree", Some(BigUint::from(t.2)))?;
        rec.exact("d5_tangent_level", Some(BigUint::from(t.1)))?;
        rec.exact("d5_normal_degree", Some(BigUint::from(n.2)))?;

        // the wedge level on the normal side is compared but never fails
        let (claimed, provenance) = rec.golden.value(rec.check, "d5_normal_level", d)?;
        let provenance = provenance.to_string();
        rec.cite("d5_normal_level", &provenance);
        rec.expected.insert("d5_normal_level".into(), number(&claimed));
        rec.show("d5_normal_level", json!(n.1));
        if BigUint::from(n.1) != claimed {
            rec.discrepancies += 1;
            rec.notes.push(format!(
                "7-dimensional H^5 on the S^3 S^∨ side sits on ∧^{} S^3 S ⊗ S^3 S^∨ (column p = {}), expected ∧^{claimed}",
                n.1,
                1 - n.1 as i64
            ));
        }
    }
    Ok(())
}

fn known_zero(v: Option<&BigUint>) -> Option<bool> {
    v.map(|v| *v == BigUint::ZERO)
}

fn prop_cubic(rec: &mut Recorder) -> Step {
    let d = rec.d;
    let ctx = GrassmannianContext::projective(d);

    let ideal = analyze(&build_page(ctx, PageVariant::IdealSheaf, &NamedSheaf::Twist(3).class(ctx)?)?);
    rec.exact("h0_ideal_cubic", ideal.degree(0).dimension().cloned())?;
    rec.exact("h1_ideal_cubic", ideal.degree(1).dimension().cloned())?;

    let r = restricted_cohomology(ctx, &NamedSheaf::Tangent.class(ctx)?)?;
    rec.holds("theta_p_minus3_acyclic", r.ideal_page.is_zero(), json!(r.ideal_page.is_zero()));
    rec.holds_if_known("h0_restriction_isomorphism", r.degree(0).is_isomorphism());
    rec.exact("h0_tangent_restricted", r.value(0).cloned())?;
    rec.exact("h1_tangent_restricted", r.value(1).cloned())?;

    let n = deformation_numbers(d, Side::Cubic)?;
    rec.axioms.extend(n.axioms_used.iter().copied());
    rec.show("h0_normal", number(&n.h0_normal));
    rec.exact("h1_tangent_cubic", Some(n.h1_tangent))?;
    Ok(())
}

fn prop_fano(rec: &mut Recorder) -> Step {
    let d = rec.d;
    let ctx = GrassmannianContext::lines(d);

    let normal = restricted_cohomology(ctx, &NamedSheaf::SymCubeDual.class(ctx)?)?;
    for (m, q) in [(0, "h0_ideal_normal"), (1, "h1_ideal_normal"), (2, "h2_ideal_normal")] {
        rec.exact(q, normal.ideal_verdict.degree(m).dimension().cloned())?;
    }
    let h0 = normal.degree(0);
    rec.holds_if_known("kernel_is_span_of_section", h0.kernel.as_ref().map(|k| *k == BigUint::from(1u32)));
    rec.holds_if_known("h0_restriction_surjective", h0.is_surjective());
    rec.exact("h0_normal", normal.value(0).cloned())?;

    let tangent = restricted_cohomology(ctx, &NamedSheaf::Tangent.class(ctx)?)?;
    rec.holds_if_known("h0_tangent_isomorphism", tangent.degree(0).is_isomorphism());
    rec.exact("h0_tangent_restricted", tangent.value(0).cloned())?;
    rec.exact("h1_tangent_restricted", tangent.value(1).cloned())?;
    if known_zero(tangent.value(1)) == Some(true) {
        rec.show("h1_tangent_vanishing_via", json!("H^1(Θ_G) = 0 and H^2(I ⊗ Θ_G) = 0"));
    }

    let n = deformation_numbers(d, Side::Fano)?;
    rec.axioms.extend(n.axioms_used.iter().copied());
    if !NormalSequence::compute(d, Side::Fano)?.higher_vanishing_computed() {
        rec.axioms.push(Axiom::KanVanishing);
        rec.notes.push("higher cohomology of Θ_F is not fixed by the E_1 pages at this d".into());
    }
    rec.exact("h1_tangent_fano", Some(n.h1_tangent))?;
    Ok(())
}

fn theorem_moduli(rec: &mut Recorder) -> Step {
    let d = rec.d;
    let (want, provenance) = rec.golden.value(rec.check, "h1", d)?;
    let provenance = provenance.to_string();
    rec.cite("h1", &provenance);
    rec.expected.insert("h1".into(), number(&want));
    let x = deformation_numbers(d, Side::Cubic)?;
    let f = deformation_numbers(d, Side::Fano)?;
    rec.axioms.extend(x.axioms_used.iter().chain(&f.axioms_used).copied());
    rec.show("h1_X", number(&x.h1_tangent));
    rec.show("h1_F", number(&f.h1_tangent));
    for (side, v) in [("h1_X", &x.h1_tangent), ("h1_F", &f.h1_tangent)] {
        if *v != want {
            rec.mismatches += 1;
            rec.notes.push(format!("{side}: computed {v}, expected {want}"));
        }
    }
    Ok(())
}

fn remark_d34(rec: &mut Recorder) -> Step {
    let ctx = GrassmannianContext::lines(rec.d);
    for sheaf in [NamedSheaf::Tangent, NamedSheaf::SymCubeDual] {
        let f = sheaf.class(ctx)?;
        for variant in [PageVariant::IdealSheaf, PageVariant::Restriction] {
            let page = build_page(ctx, variant, &f)?;
            let verdict = analyze(&page);
            let entries: Vec<Value> = page
                .nonzero_entries()
                .into_iter()
                .map(|((p, q), dim)| json!([p, q, number(&dim)]))
                .collect();
            let degrees: Map<String, Value> = verdict
                .degrees
                .iter()
                .map(|(m, v)| {
                    let v = match v.dimension() {
                        Some(dim) => json!({"determined": number(dim)}),
                        None => json!({"at_most": number(v.upper_bound())}),
                    };
                    (m.to_string(), v)
                })
                .collect();
            rec.show(&format!("{sheaf}_{variant}"), json!({"entries": entries, "abutment": degrees}));
        }
    }
    rec.notes.push("pages only; nothing is asserted at d = 3, 4".into());
    Ok(())
}

fn oracles(rec: &mut Recorder) -> Step {
    let d = rec.d;
    let n = d + 2;

    let mut weyl = 0;
    let partitions: Vec<Partition> = (0..=6).flat_map(Partition::all_of_size).collect();
    for p in &partitions {
        for m in p.length().max(1)..=n.min(6) {
            let w = p.to_weight(m).expect("length fits");
            if weyl_dimension(&w) != count_ssyt(p, m) {
                rec.mismatches += 1;
                rec.notes.push(format!("Weyl dimension differs from SSYT count for {p} in {m} variables"));
            }
            weyl += 1;
        }
    }

    let mut lr = 0;
    let small: Vec<&Partition> = partitions.iter().filter(|p| p.size() <= 4).collect();
    for a in &small {
        for b in &small {
            let ab = littlewood_richardson(a, b);
            let (wa, wb) = (a.to_weight(n), b.to_weight(n));
            let product = match (wa, wb) {
                (Some(wa), Some(wb)) => weyl_dimension(&wa) * weyl_dimension(&wb),
                _ => continue,
            };
            let sum: BigUint = ab
                .iter()
                .filter_map(|(nu, mult)| nu.to_weight(n).map(|w| weyl_dimension(&w) * *mult))
                .sum();
            if ab != littlewood_richardson(b, a) || sum != product {
                rec.mismatches += 1;
                rec.notes.push(format!("LR inconsistency for {a} * {b} at n = {n}"));
            }
            lr += 1;
        }
    }

    let mut serre = 0;
    for ctx in [GrassmannianContext::lines(d), GrassmannianContext::projective(d)] {
        for a in 0..=3 {
            for b in -3..=0 {
                let mut q = vec![0i64; ctx.quotient_rank()];
                q[0] = a;
                let last = q.len() - 1;
                q[last] += b;
                if q.windows(2).any(|w| w[0] < w[1]) {
                    continue;
                }
                for hi in -3i64..=3 {
                    for lo in -3..=hi {
                        let s: Vec<i64> = if ctx.k() == 1 { vec![hi] } else { vec![hi, lo] };
                        if ctx.k() == 1 && lo != -3 {
                            continue;
                        }
                        let b = IrreducibleHomogeneousBundle::from_entries(&ctx, &q, &s)?;
                        if !serre_check(&ctx, &b) {
                            rec.mismatches += 1;
                            rec.notes.push(format!("Serre duality fails for {b} on {ctx}"));
                        }
                        serre += 1;
                    }
                }
            }
        }
    }

    let mut euler = 0;
    let cases = [
        (GrassmannianContext::lines(d), NamedSheaf::Tangent),
        (GrassmannianContext::lines(d), NamedSheaf::SymCubeDual),
        (GrassmannianContext::projective(d), NamedSheaf::Tangent),
        (GrassmannianContext::projective(d), NamedSheaf::Twist(3)),
    ];
    for (ctx, sheaf) in cases {
        if !euler_consistency(ctx, &sheaf.class(ctx)?)? {
            rec.mismatches += 1;
            rec.notes.push(format!("Euler characteristics disagree for {sheaf} on {ctx}"));
        }
        euler += 1;
    }

    rec.show("weyl_vs_ssyt", json!(weyl));
    rec.show("lr_products", json!(lr));
    rec.show("serre_pairs", json!(serre));
    rec.show("euler_pages", json!(euler));
    rec.provenance.push("derived: internal consistency checks, no external values".into());
    Ok(())
}
