//! Gorenstein hierarchy and canonical-reduction existence for one semigroup.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{self, Exponent, MonomialCanonicalFamily, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

/// Everything about one semigroup that the predicates and checks share.
pub struct Analysis<'a> {
    pub base: &'a NumericalSemigroup,
    /// `M = Γ ∖ {0}`
    pub maximal: RelativeIdeal<'a>,
    /// `K₀`
    pub canonical: RelativeIdeal<'a>,
    /// `A₀ = Γ − K₀`
    pub shifts: RelativeIdeal<'a>,
    pub trace: RelativeIdeal<'a>,
    pub family: MonomialCanonicalFamily,
    pub canonical_index: u32,
    /// `None` for `ℕ`
    pub reduction_number_m: Option<u32>,
}

/// The three independent answers to "does `R` have a canonical reduction?".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalReductionRoutes {
    /// `e + f − α ∈ Γ` for every gap `α`
    pub by_formula: bool,
    /// `e ∈ Γ − K₀`
    pub by_shift: bool,
    /// some minimal shift `y ∈ (Γ − K₀) ∩ M` makes `y + K₀` a reduction of `M`
    /// by sumset iteration; `None` for `ℕ`
    pub by_sumsets: Option<bool>,
}

impl CanonicalReductionRoutes {
    pub fn agree(&self) -> bool {
        self.by_formula == self.by_shift && self.by_sumsets.is_none_or(|b| b == self.by_formula)
    }
}

impl<'a> Analysis<'a> {
    pub fn new(base: &'a NumericalSemigroup) -> Result<Self> {
        let canonical = ideal::canonical_ideal(base);
        let shifts = ideal::canonical_shifts(base);
        let trace = canonical.sum(&shifts)?;
        let reduction_number_m = if base.is_natural() {
            None
        } else {
            Some(base.reduction_number_m()?)
        };
        Ok(Analysis {
            base,
            maximal: RelativeIdeal::maximal(base),
            canonical,
            shifts,
            trace,
            family: ideal::canonical_family(base),
            canonical_index: ideal::canonical_index(base)?,
            reduction_number_m,
        })
    }

    pub fn multiplicity(&self) -> Exponent {
        Exponent::from(self.base.multiplicity())
    }

    pub fn is_gorenstein(&self) -> bool {
        self.base.is_symmetric()
    }

    /// `M + K₀ ⊆ M`.
    pub fn is_almost_gorenstein(&self) -> bool {
        self.maximal.set().sum(self.canonical.set()).is_subset(self.maximal.set())
    }

    /// `M ⊆ tr(K)`.
    pub fn is_nearly_gorenstein(&self) -> bool {
        self.maximal.is_subset(&self.trace)
    }

    /// `ρ = 2` and `|2K₀ ∖ K₀| = 2`.
    pub fn is_two_agl(&self) -> bool {
        self.canonical_index == 2
            && self
                .canonical
                .multiple(2)
                .set()
                .difference_len(self.canonical.set())
                == 2
    }

    pub fn has_minimal_multiplicity(&self) -> bool {
        self.base.embedding_dimension() == self.base.multiplicity() as usize
    }

    pub fn canonical_reduction_routes(&self) -> Result<CanonicalReductionRoutes> {
        let e = self.multiplicity();
        let f = self.base.frobenius();
        let by_formula = self
            .base
            .gaps()
            .iter()
            .all(|&alpha| self.base.contains(e + f - Exponent::from(alpha)));
        let by_shift = self.shifts.contains(e);
        let by_sumsets = if self.base.is_natural() {
            None
        } else {
            let proper = self.shifts.intersection(&self.maximal)?;
            let mut found = false;
            for y in proper.minimal_generators() {
                if self.canonical.translate(y).is_reduction_of_m_by_sumsets()? {
                    found = true;
                    break;
                }
            }
            Some(found)
        };
        Ok(CanonicalReductionRoutes {
            by_formula,
            by_shift,
            by_sumsets,
        })
    }

    /// Existence of a canonical reduction; all three routes must agree.
    pub fn has_canonical_reduction(&self) -> Result<bool> {
        let routes = self.canonical_reduction_routes()?;
        if !routes.agree() {
            return Err(Error::InternalDisagreement {
                what: "canonical reduction criteria".into(),
                detail: format!("{}: {routes:?}", self.base),
            });
        }
        Ok(routes.by_formula)
    }

    /// `|Γ ∖ (e + K₀)|` when `e + K₀ ⊆ Γ`.
    pub fn reduction_colength(&self) -> Option<usize> {
        self.family.colength_of(self.multiplicity())
    }

    /// Assembles the report without checking the hierarchy invariants.
    pub fn report(&self) -> Result<ClassificationReport> {
        let e = self.base.multiplicity();
        let t = self.base.cm_type();
        Ok(ClassificationReport {
            generators: self.base.generators().to_vec(),
            multiplicity: e,
            embedding_dimension: self.base.embedding_dimension(),
            genus: self.base.genus(),
            frobenius: self.base.frobenius(),
            cm_type: t,
            pf: self.base.pseudo_frobenius().to_vec(),
            gorenstein: self.is_gorenstein(),
            almost_gorenstein: self.is_almost_gorenstein(),
            nearly_gorenstein: self.is_nearly_gorenstein(),
            has_canonical_reduction: self.has_canonical_reduction()?,
            minimal_multiplicity: self.has_minimal_multiplicity(),
            two_agl: self.is_two_agl(),
            canonical_index: self.canonical_index,
            reduction_number_m: self.reduction_number_m,
            min_mono_colength: self.family.min_proper_colength(),
            colength_bound: i64::from(e) - t as i64 + 1,
        })
    }
}

/// All predicates and numeric invariants of one semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub generators: Vec<u32>,
    pub multiplicity: u32,
    pub embedding_dimension: usize,
    pub genus: u32,
    pub frobenius: i64,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub pf: Vec<i64>,
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub has_canonical_reduction: bool,
    pub minimal_multiplicity: bool,
    pub two_agl: bool,
    pub canonical_index: u32,
    /// absent for `ℕ`
    pub reduction_number_m: Option<u32>,
    pub min_mono_colength: usize,
    /// `e − t + 1`
    pub colength_bound: i64,
}

impl ClassificationReport {
    /// Hierarchy invariants every report must satisfy; the first failure is returned.
    pub fn invariant_failure(&self) -> Option<&'static str> {
        let checks: [(&'static str, bool); 6] = [
            ("gorenstein implies almost Gorenstein", !self.gorenstein || self.almost_gorenstein),
            (
                "almost Gorenstein implies canonical reduction",
                !self.almost_gorenstein || self.has_canonical_reduction,
            ),
            (
                "nearly Gorenstein implies canonical reduction",
                !self.nearly_gorenstein || self.has_canonical_reduction,
            ),
            ("gorenstein iff canonical index 1", self.gorenstein == (self.canonical_index == 1)),
            (
                "2-AGL implies canonical index 2 and not Gorenstein",
                !self.two_agl || (self.canonical_index == 2 && !self.gorenstein),
            ),
            (
                "minimal multiplicity iff embedding dimension equals multiplicity",
                self.minimal_multiplicity
                    == (self.embedding_dimension == self.multiplicity as usize),
            ),
        ];
        checks.iter().find(|(_, ok)| !ok).map(|(name, _)| *name)
    }
}

pub fn has_canonical_reduction(base: &NumericalSemigroup) -> Result<bool> {
    Analysis::new(base)?.has_canonical_reduction()
}

pub fn is_almost_gorenstein(base: &NumericalSemigroup) -> bool {
    let m = base.maximal_ideal();
    m.sum(ideal::canonical_ideal(base).set()).is_subset(&m)
}

pub fn is_nearly_gorenstein(base: &NumericalSemigroup) -> bool {
    base.maximal_ideal().is_subset(ideal::trace(base).set())
}

pub fn is_two_agl(base: &NumericalSemigroup) -> Result<bool> {
    Ok(Analysis::new(base)?.is_two_agl())
}

/// Full report; fails if a hierarchy invariant is broken.
pub fn classify(base: &NumericalSemigroup) -> Result<ClassificationReport> {
    let report = Analysis::new(base)?.report()?;
    match report.invariant_failure() {
        None => Ok(report),
        Some(what) => Err(Error::Internal(format!("{base}: {what}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn canonical_reduction_examples() {
        assert!(has_canonical_reduction(&sg(&[3, 4, 5])).unwrap());
        assert!(has_canonical_reduction(&sg(&[1])).unwrap());
        assert!(!has_canonical_reduction(&sg(&[3, 7, 8])).unwrap());
        let s = sg(&[3, 7, 8]);
        let routes = Analysis::new(&s).unwrap().canonical_reduction_routes().unwrap();
        assert_eq!(
            routes,
            CanonicalReductionRoutes {
                by_formula: false,
                by_shift: false,
                by_sumsets: Some(false)
            }
        );
    }

    #[test]
    fn almost_gorenstein_examples() {
        assert!(is_almost_gorenstein(&sg(&[3, 4, 5])));
        assert!(is_almost_gorenstein(&sg(&[4, 5, 6])));
        assert!(!is_almost_gorenstein(&sg(&[4, 5, 11])));
        assert!(is_almost_gorenstein(&sg(&[1])));
    }

    #[test]
    fn nearly_gorenstein_examples() {
        assert!(is_nearly_gorenstein(&sg(&[3, 4, 5])));
        assert!(is_nearly_gorenstein(&sg(&[4, 5, 6])));
        assert!(!is_nearly_gorenstein(&sg(&[3, 7, 8])));
    }

    #[test]
    fn two_agl_examples() {
        assert!(is_two_agl(&sg(&[3, 7, 8])).unwrap());
        assert!(!is_two_agl(&sg(&[3, 4, 5])).unwrap());
        assert!(!is_two_agl(&sg(&[4, 5, 6])).unwrap());
    }

    #[test]
    fn report_three_four_five() {
        let r = classify(&sg(&[3, 4, 5])).unwrap();
        assert_eq!(r.multiplicity, 3);
        assert_eq!(r.embedding_dimension, 3);
        assert_eq!(r.cm_type, 2);
        assert_eq!(r.genus, 2);
        assert_eq!(r.frobenius, 2);
        assert!(!r.gorenstein);
        assert!(r.almost_gorenstein);
        assert!(r.nearly_gorenstein);
        assert!(r.has_canonical_reduction);
        assert!(r.minimal_multiplicity);
        assert!(!r.two_agl);
        assert_eq!(r.canonical_index, 2);
        assert_eq!(r.min_mono_colength, 2);
        assert_eq!(r.reduction_number_m, Some(1));
        assert_eq!(r.colength_bound, 2);
    }

    #[test]
    fn report_natural() {
        let r = classify(&sg(&[1])).unwrap();
        assert_eq!(r.multiplicity, 1);
        assert!(r.gorenstein && r.almost_gorenstein && r.nearly_gorenstein);
        assert!(r.has_canonical_reduction);
        assert_eq!(r.canonical_index, 1);
        assert_eq!(r.reduction_number_m, None);
    }

    #[test]
    fn report_three_seven_eight() {
        let r = classify(&sg(&[3, 7, 8])).unwrap();
        assert_eq!((r.multiplicity, r.embedding_dimension, r.cm_type), (3, 3, 2));
        assert!(!r.gorenstein && !r.almost_gorenstein && !r.nearly_gorenstein);
        assert!(!r.has_canonical_reduction);
        assert!(r.minimal_multiplicity);
        assert!(r.two_agl);
        assert_eq!(r.canonical_index, 2);
        assert_eq!(r.min_mono_colength, 4);
    }

    #[test]
    fn report_json_field_names() {
        let r = classify(&sg(&[3, 4, 5])).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["almost_gorenstein"], true);
        assert_eq!(v["min_mono_colength"], 2);
        assert_eq!(v["type"], 2);
        let back: ClassificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
