//! Identity and implication checks over the census, class-count tables,
//! and the audit of the worked examples for canonical reductions.
//!
//! Statements about arbitrary canonical ideals of `k[[t^Γ]]` are checked in
//! their monomial form: canonical ideals are the translates `x + K₀ ⊆ Γ`,
//! products are sumsets, colons are set colons and lengths are gap counts.
//! Every check skips `ℕ` except C1, C2, C7 and C11, whose statements cover
//! the regular ring.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{Analysis, CanonicalReductionRoutes};
use crate::cofinite::CofiniteSet;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::ideal::{self, Exponent, RelativeIdeal, ShiftColength};
use crate::semigroup::NumericalSemigroup;

/// Relative ideals examined per canonical shift in C15.
pub const MIMU_IDEAL_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CheckId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
    C15,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::C6,
        CheckId::C7,
        CheckId::C8,
        CheckId::C9,
        CheckId::C10,
        CheckId::C11,
        CheckId::C12,
        CheckId::C13,
        CheckId::C14,
        CheckId::C15,
    ];

    /// C12 runs in report-only mode.
    pub fn gates_exit(self) -> bool {
        self != CheckId::C12
    }

    pub fn description(self) -> &'static str {
        match self {
            CheckId::C1 => "Gorenstein => almost Gorenstein => canonical reduction",
            CheckId::C2 => "nearly Gorenstein => canonical reduction",
            CheckId::C3 => "with a canonical reduction: minimal multiplicity <=> AG and colength(e+K0) = 2",
            CheckId::C4 => "with a canonical reduction: colength(e+K0) <= e - t + 1, equality <=> AG",
            CheckId::C5 => "M + K0 = M + (K0 - M)",
            CheckId::C6 => "minimal monomial canonical colength 2 => canonical reduction",
            CheckId::C7 => "canonical index 1 <=> Gorenstein",
            CheckId::C8 => "mu(K0 - M) = t + 1",
            CheckId::C9 => "non-maximal shifts are M-translates; no maximal member inside (r+1)M",
            CheckId::C10 => "canonical index 2 identities for 2K0",
            CheckId::C11 => "canonical reduction: formula, e in (Gamma - K0) and sumset reduction agree",
            CheckId::C12 => "monomial canonical ideals are not integrally closed",
            CheckId::C13 => "iM is not a translate of K0 for i = 1, 2, 3",
            CheckId::C14 => "with a canonical reduction: colength(e+K0) is the unique monomial minimum",
            CheckId::C15 => "mu((x+K0) - J) = type(J) for x+K0 in J in Gamma",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let upper = s.trim().to_ascii_uppercase();
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.to_string() == upper)
            .ok_or_else(|| format!("unknown check id {s:?} (expected C1..C15)"))
    }
}

/// A failed check with the data that refutes it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub check: CheckId,
    pub generators: Vec<u32>,
    pub genus: u32,
    pub gaps: Vec<u32>,
    pub witness: Value,
}

/// Per-genus class counts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub genus: u32,
    pub total: u64,
    pub gorenstein: u64,
    pub almost_gorenstein: u64,
    pub nearly_gorenstein: u64,
    pub canonical_reduction: u64,
    pub minimal_multiplicity: u64,
    pub two_agl: u64,
    /// canonical reduction but not almost Gorenstein
    pub canonical_reduction_not_almost: u64,
    pub no_canonical_reduction: u64,
}

impl CensusRow {
    /// `G ≤ AG ≤ CR`, `NG ≤ CR`, everything `≤ total`.
    pub fn is_monotone(&self) -> bool {
        self.gorenstein <= self.almost_gorenstein
            && self.almost_gorenstein <= self.canonical_reduction
            && self.nearly_gorenstein <= self.canonical_reduction
            && self.canonical_reduction <= self.total
            && self.minimal_multiplicity <= self.total
            && self.two_agl <= self.total
            && self.canonical_reduction + self.no_canonical_reduction == self.total
    }
}

/// How many semigroups of one genus a check applied to, and how many passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub check: CheckId,
    pub genus: u32,
    pub evaluated: u64,
    pub passed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunOutcome {
    pub violations: Vec<Violation>,
    pub census: Vec<CensusRow>,
    pub tallies: Vec<CheckTally>,
}

impl RunOutcome {
    /// Violations of checks that gate the exit status.
    pub fn gating_violations(&self) -> usize {
        self.violations.iter().filter(|v| v.check.gates_exit()).count()
    }
}

/// The predicates and invariants of one semigroup, decided without the
/// consistency assertions that [`crate::classify`] enforces.
struct Facts {
    gorenstein: bool,
    almost: bool,
    nearly: bool,
    canonical_reduction: bool,
    minimal_multiplicity: bool,
    two_agl: bool,
    routes: CanonicalReductionRoutes,
}

enum Outcome {
    Skipped,
    Passed,
    Failed(Value),
}

fn verdict(ok: bool, witness: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Outcome::Passed
    } else {
        Outcome::Failed(witness())
    }
}

struct SemigroupResult {
    genus: u32,
    generators: Vec<u32>,
    gaps: Vec<u32>,
    facts: Facts,
    outcomes: Vec<(CheckId, Outcome)>,
}

fn set_json(s: &CofiniteSet) -> Value {
    serde_json::to_value(s).expect("cofinite sets serialize")
}

struct Checker<'a> {
    an: Analysis<'a>,
    facts: Facts,
}

impl<'a> Checker<'a> {
    fn new(s: &'a NumericalSemigroup) -> Result<Self> {
        let an = Analysis::new(s)?;
        let routes = an.canonical_reduction_routes()?;
        let facts = Facts {
            gorenstein: an.is_gorenstein(),
            almost: an.is_almost_gorenstein(),
            nearly: an.is_nearly_gorenstein(),
            canonical_reduction: routes.by_formula,
            minimal_multiplicity: an.has_minimal_multiplicity(),
            two_agl: an.is_two_agl(),
            routes,
        };
        Ok(Checker { an, facts })
    }

    fn regular(&self) -> bool {
        self.an.base.is_natural()
    }

    fn run(&self, id: CheckId) -> Result<Outcome> {
        let f = &self.facts;
        let an = &self.an;
        let e = an.multiplicity();
        let t = an.base.cm_type();
        if self.regular() && !matches!(id, CheckId::C1 | CheckId::C2 | CheckId::C7 | CheckId::C11)
        {
            return Ok(Outcome::Skipped);
        }
        Ok(match id {
            CheckId::C1 => verdict(
                (!f.gorenstein || f.almost) && (!f.almost || f.canonical_reduction),
                || json!({"gorenstein": f.gorenstein, "almost_gorenstein": f.almost,
                          "has_canonical_reduction": f.canonical_reduction}),
            ),
            CheckId::C2 => verdict(!f.nearly || f.canonical_reduction, || {
                json!({"nearly_gorenstein": true, "has_canonical_reduction": false,
                       "trace": set_json(an.trace.set()), "shifts": set_json(an.shifts.set())})
            }),
            CheckId::C3 => {
                if !f.canonical_reduction {
                    return Ok(Outcome::Skipped);
                }
                let colength = an.reduction_colength();
                let rhs = f.almost && colength == Some(2);
                verdict(f.minimal_multiplicity == rhs, || {
                    json!({"minimal_multiplicity": f.minimal_multiplicity,
                           "almost_gorenstein": f.almost, "reduction_colength": colength})
                })
            }
            CheckId::C4 => {
                if !f.canonical_reduction {
                    return Ok(Outcome::Skipped);
                }
                let colength = an.reduction_colength().map(|c| c as i64);
                let bound = e - t as i64 + 1;
                let ok = match colength {
                    Some(c) => c <= bound && ((c == bound) == f.almost),
                    None => false,
                };
                verdict(ok, || {
                    json!({"reduction_colength": colength, "bound": bound,
                           "almost_gorenstein": f.almost})
                })
            }
            CheckId::C5 => {
                let m = an.maximal.set();
                let k0 = an.canonical.set();
                let lhs = m.sum(k0);
                let rhs = m.sum(&k0.colon(m));
                verdict(lhs == rhs, || {
                    json!({"m_plus_k0": set_json(&lhs), "m_plus_k0_colon_m": set_json(&rhs)})
                })
            }
            CheckId::C6 => {
                let min = an.family.min_proper_colength();
                if min != 2 {
                    return Ok(Outcome::Skipped);
                }
                verdict(f.canonical_reduction, || json!({"min_mono_colength": min}))
            }
            CheckId::C7 => verdict((an.canonical_index == 1) == f.gorenstein, || {
                json!({"canonical_index": an.canonical_index, "gorenstein": f.gorenstein})
            }),
            CheckId::C8 => {
                let mu = an.canonical.colon(&an.maximal)?.mu();
                verdict(mu == t + 1, || json!({"mu": mu, "type": t}))
            }
            CheckId::C9 => self.check_maximal_structure()?,
            CheckId::C10 => {
                if an.canonical_index != 2 {
                    return Ok(Outcome::Skipped);
                }
                self.check_index_two()?
            }
            CheckId::C11 => verdict(f.routes.agree(), || {
                serde_json::to_value(f.routes).expect("routes serialize")
            }),
            CheckId::C12 => {
                if f.gorenstein {
                    return Ok(Outcome::Skipped);
                }
                let gamma = an.base.as_set();
                let closed: Vec<Exponent> = an
                    .family
                    .colengths
                    .iter()
                    .map(|sc| sc.shift)
                    .filter(|&x| {
                        let closure = gamma.intersection(&CofiniteSet::from_start(x));
                        an.canonical.set().translate(x) == closure
                    })
                    .collect();
                verdict(closed.is_empty(), || json!({"integrally_closed_shifts": closed}))
            }
            CheckId::C13 => {
                let k0 = an.canonical.set();
                let mut hits = Vec::new();
                for i in 1..=3u32 {
                    let power = an.maximal.set().multiple(i);
                    if power == k0.translate(power.min()) {
                        hits.push(i);
                    }
                }
                verdict(hits.is_empty(), || json!({"canonical_powers": hits}))
            }
            CheckId::C14 => {
                if !f.canonical_reduction {
                    return Ok(Outcome::Skipped);
                }
                let min = an.family.min_proper_colength();
                let at_e = an.reduction_colength();
                let minimizers: Vec<Exponent> = an
                    .family
                    .colengths
                    .iter()
                    .filter(|sc| sc.shift > 0 && sc.colength == min)
                    .map(|sc| sc.shift)
                    .collect();
                verdict(at_e == Some(min) && minimizers == [e], || {
                    json!({"reduction_colength": at_e, "min_mono_colength": min,
                           "minimizing_shifts": minimizers})
                })
            }
            CheckId::C15 => self.check_mimu()?,
        })
    }

    fn check_maximal_structure(&self) -> Result<Outcome> {
        let an = &self.an;
        let shifts = an.shifts.set();
        let reachable = an.maximal.set().sum(shifts);
        let stray: Vec<Exponent> = an
            .family
            .colengths
            .iter()
            .map(|sc| sc.shift)
            .filter(|x| !an.family.maximal_shifts.contains(x) && !reachable.contains(*x))
            .collect();
        let r = an.reduction_number_m.ok_or(Error::RegularRing)?;
        let deep = an.maximal.set().multiple(r + 1);
        let inside: Vec<Exponent> = an
            .family
            .maximal_shifts
            .iter()
            .copied()
            .filter(|&y| an.canonical.set().translate(y).is_subset(&deep))
            .collect();
        Ok(verdict(stray.is_empty() && inside.is_empty(), || {
            json!({"non_maximal_not_translates": stray, "maximal_inside_power": inside,
                   "reduction_number_m": r})
        }))
    }

    fn check_index_two(&self) -> Result<Outcome> {
        let an = &self.an;
        let k0 = an.canonical.set();
        let m = an.maximal.set();
        let gamma = an.base.as_set();
        let j = k0.sum(k0);
        let k0_colon_m = k0.colon(m);
        let gamma_colon_m = gamma.colon(m);
        let mut failed = Vec::new();
        if k0.colon(an.shifts.set()) != j {
            failed.push("i");
        }
        if j.sum(&j) != j || k0.sum(&j) != j {
            failed.push("ii");
        }
        if !k0_colon_m.is_subset(&j) || &j == k0 {
            failed.push("iii");
        }
        let rhs = j == k0_colon_m && k0_colon_m == gamma_colon_m;
        if self.facts.almost != rhs {
            failed.push("iv");
        }
        let pf_union = gamma.union(&CofiniteSet::from_members(
            an.base.pseudo_frobenius().iter().copied(),
            an.base.conductor(),
        ));
        if gamma_colon_m != pf_union {
            failed.push("gamma_colon_m");
        }
        Ok(verdict(failed.is_empty(), || {
            json!({"failed": failed, "two_k0": set_json(&j), "k0_colon_m": set_json(&k0_colon_m),
                   "gamma_colon_m": set_json(&gamma_colon_m)})
        }))
    }

    fn check_mimu(&self) -> Result<Outcome> {
        let an = &self.an;
        let base = an.base;
        let gamma = RelativeIdeal::unit(base);
        let proper = an.shifts.intersection(&an.maximal)?;
        let mut bad = Vec::new();
        for x in proper.minimal_generators() {
            let lower = an.canonical.translate(x);
            let (ideals, _complete) = ideal::ideals_between(&lower, &gamma, MIMU_IDEAL_CAP)?;
            for j in ideals.iter().filter(|j| **j != lower) {
                let mu = lower.colon(j)?.mu();
                let ty = j.ideal_type()?;
                if mu != ty {
                    bad.push(json!({"shift": x, "j": set_json(j.set()), "mu": mu, "type": ty}));
                }
            }
        }
        Ok(verdict(bad.is_empty(), || json!({"failures": bad})))
    }
}

fn check_semigroup(s: &NumericalSemigroup, checks: &[CheckId]) -> Result<SemigroupResult> {
    let checker = Checker::new(s)?;
    let mut outcomes = Vec::with_capacity(checks.len());
    for &id in checks {
        outcomes.push((id, checker.run(id)?));
    }
    Ok(SemigroupResult {
        genus: s.genus(),
        generators: s.generators().to_vec(),
        gaps: s.gaps().to_vec(),
        facts: checker.facts,
        outcomes,
    })
}

/// Runs `checks` over every semigroup of genus `≤ g_max`. Violations are
/// collected, never fatal; they come back sorted by genus, gap list and check.
pub fn run_checks(g_max: u32, checks: &[CheckId]) -> Result<RunOutcome> {
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let results = enumerate::par_map(g_max, |s| check_semigroup(s, &checks))?;

    let mut census: Vec<CensusRow> = (0..=g_max)
        .map(|genus| CensusRow {
            genus,
            ..CensusRow::default()
        })
        .collect();
    let mut tallies: BTreeMap<(CheckId, u32), (u64, u64)> = BTreeMap::new();
    let mut violations = Vec::new();
    for result in results {
        let r = result?;
        let row = &mut census[r.genus as usize];
        let f = &r.facts;
        row.total += 1;
        row.gorenstein += u64::from(f.gorenstein);
        row.almost_gorenstein += u64::from(f.almost);
        row.nearly_gorenstein += u64::from(f.nearly);
        row.canonical_reduction += u64::from(f.canonical_reduction);
        row.minimal_multiplicity += u64::from(f.minimal_multiplicity);
        row.two_agl += u64::from(f.two_agl);
        row.canonical_reduction_not_almost += u64::from(f.canonical_reduction && !f.almost);
        row.no_canonical_reduction += u64::from(!f.canonical_reduction);
        for (id, outcome) in r.outcomes {
            let tally = tallies.entry((id, r.genus)).or_default();
            match outcome {
                Outcome::Skipped => {}
                Outcome::Passed => {
                    tally.0 += 1;
                    tally.1 += 1;
                }
                Outcome::Failed(witness) => {
                    tally.0 += 1;
                    violations.push(Violation {
                        check: id,
                        generators: r.generators.clone(),
                        genus: r.genus,
                        gaps: r.gaps.clone(),
                        witness,
                    });
                }
            }
        }
    }
    violations.sort_by(|a, b| (a.genus, &a.gaps, a.check).cmp(&(b.genus, &b.gaps, b.check)));
    let tallies = tallies
        .into_iter()
        .map(|((check, genus), (evaluated, passed))| CheckTally {
            check,
            genus,
            evaluated,
            passed,
        })
        .collect();
    Ok(RunOutcome {
        violations,
        census,
        tallies,
    })
}

/// One member of the family `⟨e, …, e+i, e+i+j, …, 2e+i+j−1⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyAudit {
    pub e: u32,
    pub i: u32,
    pub j: u32,
    pub generators: Vec<u32>,
    pub has_canonical_reduction: bool,
    /// the claimed value is always `true`
    pub cr_agrees: bool,
    /// exponents `e+1, …, e+j−1` of the claimed canonical reduction
    pub claimed_ideal: Vec<Exponent>,
    pub claimed_ideal_is_canonical: bool,
    pub claimed_ideal_is_reduction: bool,
    pub claimed_ideal_agrees: bool,
    /// minimal generators of `e + K₀` when it lies in `Γ`
    pub reduction_generators: Option<Vec<Exponent>>,
}

/// One member of the family `⟨a, a+1, a+2⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalAudit {
    pub a: u32,
    pub frobenius: i64,
    /// the claimed `2a − 1`
    pub claimed_frobenius: i64,
    pub frobenius_agrees: bool,
    /// whether `a+3, …, 2a−1` are all gaps, as claimed
    pub claimed_gaps_hold: bool,
    pub has_canonical_reduction: bool,
    /// claimed: exactly for `a ∈ {3, 4, 5, 6}`
    pub claimed_cr: bool,
    pub cr_agrees: bool,
}

/// Colengths of the maximal monomial canonical ideals of `⟨3,4,5⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColengthAudit {
    pub generators: Vec<u32>,
    pub maximal_shifts: Vec<ShiftColength>,
    /// `K = (t³, t⁴)`
    pub canonical_ideal: Vec<Exponent>,
    pub canonical_colength: usize,
    pub claimed_canonical_colength: usize,
    pub canonical_agrees: bool,
    /// `I = (t⁴, t⁵)`
    pub second_ideal: Vec<Exponent>,
    pub second_is_canonical: bool,
    pub second_colength: usize,
    pub claimed_second_colength: usize,
    pub second_agrees: bool,
    /// the shift whose translate of `K₀` has the claimed colength, if any
    pub shift_with_claimed_colength: Option<Exponent>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkedExampleAudit {
    pub family: Vec<FamilyAudit>,
    pub interval: Vec<IntervalAudit>,
    pub example: ColengthAudit,
}

/// Generators `e, …, e+i, e+i+j, …, 2e+i+j−1`.
pub fn family_generators(e: u32, i: u32, j: u32) -> Vec<u32> {
    (e..=e + i).chain(e + i + j..=2 * e + i + j - 1).collect()
}

/// Valid `(i, j)` for a given `e`: `0 < j − 1 ≤ i < e − j`.
pub fn family_parameters(e: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for j in 2..e {
        for i in j - 1..e.saturating_sub(j) {
            out.push((i, j));
        }
    }
    out
}

fn is_translate_of_canonical(ideal: &RelativeIdeal<'_>) -> bool {
    let k0 = ideal::canonical_ideal(ideal.base());
    *ideal == k0.translate(ideal.min())
}

fn audit_family(e: u32, i: u32, j: u32) -> Result<FamilyAudit> {
    let generators = family_generators(e, i, j);
    let s = NumericalSemigroup::from_generators(&generators)?;
    let cr = Analysis::new(&s)?.has_canonical_reduction()?;
    let claimed_ideal: Vec<Exponent> = (e + 1..e + j).map(Exponent::from).collect();
    let ideal = RelativeIdeal::generated_by(&s, &claimed_ideal)
        .ok_or_else(|| Error::Internal("empty claimed ideal".into()))?;
    let is_canonical = is_translate_of_canonical(&ideal);
    let is_reduction = ideal.is_reduction_of_m()?;
    let reduction = ideal::canonical_ideal(&s).translate(Exponent::from(e));
    let reduction_generators = reduction
        .set()
        .is_subset(s.as_set())
        .then(|| reduction.minimal_generators());
    Ok(FamilyAudit {
        e,
        i,
        j,
        generators,
        has_canonical_reduction: cr,
        cr_agrees: cr,
        claimed_ideal,
        claimed_ideal_is_canonical: is_canonical,
        claimed_ideal_is_reduction: is_reduction,
        claimed_ideal_agrees: is_canonical && is_reduction,
        reduction_generators,
    })
}

fn audit_interval(a: u32) -> Result<IntervalAudit> {
    let s = NumericalSemigroup::from_generators(&[a, a + 1, a + 2])?;
    let cr = Analysis::new(&s)?.has_canonical_reduction()?;
    let claimed_frobenius = 2 * i64::from(a) - 1;
    let claimed_cr = (3..=6).contains(&a);
    let claimed_gaps_hold = (i64::from(a) + 3..=claimed_frobenius).all(|z| !s.contains(z));
    Ok(IntervalAudit {
        a,
        frobenius: s.frobenius(),
        claimed_frobenius,
        frobenius_agrees: s.frobenius() == claimed_frobenius,
        claimed_gaps_hold,
        has_canonical_reduction: cr,
        claimed_cr,
        cr_agrees: cr == claimed_cr,
    })
}

fn audit_three_four_five() -> Result<ColengthAudit> {
    let s = NumericalSemigroup::from_generators(&[3, 4, 5])?;
    let family = ideal::canonical_family(&s);
    let maximal_shifts = family
        .maximal_shifts
        .iter()
        .map(|&x| ShiftColength {
            shift: x,
            colength: family.colength_of(x).unwrap_or_default(),
        })
        .collect();
    let k = RelativeIdeal::generated_by(&s, &[3, 4]).expect("nonempty");
    let second = RelativeIdeal::generated_by(&s, &[4, 5]).expect("nonempty");
    let canonical_colength = k.colength()?;
    let second_colength = second.colength()?;
    Ok(ColengthAudit {
        generators: vec![3, 4, 5],
        maximal_shifts,
        canonical_ideal: vec![3, 4],
        canonical_colength,
        claimed_canonical_colength: 2,
        canonical_agrees: canonical_colength == 2 && is_translate_of_canonical(&k),
        second_ideal: vec![4, 5],
        second_is_canonical: is_translate_of_canonical(&second),
        second_colength,
        claimed_second_colength: 4,
        second_agrees: second_colength == 4,
        shift_with_claimed_colength: family
            .colengths
            .iter()
            .find(|sc| sc.colength == 4)
            .map(|sc| sc.shift),
    })
}

/// Recomputes the worked examples: the `(e, i, j)` family for `e ∈ [4, 8]`,
/// `⟨a, a+1, a+2⟩` for `a ∈ [3, 50]`, and the colengths for `⟨3,4,5⟩`.
pub fn audit_worked_examples() -> Result<WorkedExampleAudit> {
    let mut family = Vec::new();
    for e in 4..=8 {
        for (i, j) in family_parameters(e) {
            family.push(audit_family(e, i, j)?);
        }
    }
    let interval = (3..=50).map(audit_interval).collect::<Result<Vec<_>>>()?;
    Ok(WorkedExampleAudit {
        family,
        interval,
        example: audit_three_four_five()?,
    })
}
