//! Homological invariants of the principal block `O_0`, reduced to Hecke
//! algebra data.
//!
//! Grading: `[Δ_x : L_w⟨−k⟩]` is the coefficient of `v^k` in `h_{x,w}`, and
//! `⟨1⟩` acts on Grothendieck groups as multiplication by `v`.

mod certify;
mod characters;
mod conjectures;
mod pd;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cells::CellData;
use crate::coxeter::{CoxeterSystem, Element, Extreme, GeneratorSubset, Quotient};
use crate::error::{Error, Result};
use crate::hecke::KlTable;
use crate::laurent::LaurentPoly;

pub use certify::{Condition, RegularityReport, ShuffleVariant, Verdict, Violation};
pub use characters::CharacterGrid;
pub use conjectures::{ConjectureCheck, ConjectureReport, ConjectureScope, ConventionReport};
pub use pd::{PdFamily, PdKind, PdResult, PdTable, Provenance, RuleSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StructuralKind {
    Standard,
    Costandard,
    Projective,
    Injective,
    Tilting,
}

impl StructuralKind {
    pub fn symbol(self) -> &'static str {
        match self {
            StructuralKind::Standard => "Δ",
            StructuralKind::Costandard => "∇",
            StructuralKind::Projective => "P",
            StructuralKind::Injective => "I",
            StructuralKind::Tilting => "T",
        }
    }

    /// Fixture table name of the structural pd row.
    pub fn table_name(self) -> &'static str {
        match self {
            StructuralKind::Standard => "standard-pd",
            StructuralKind::Costandard => "costandard-pd",
            StructuralKind::Projective => "projective-pd",
            StructuralKind::Injective => "injective-pd",
            StructuralKind::Tilting => "tilting-pd",
        }
    }

    pub const ALL: [StructuralKind; 5] = [
        StructuralKind::Projective,
        StructuralKind::Standard,
        StructuralKind::Tilting,
        StructuralKind::Costandard,
        StructuralKind::Injective,
    ];
}

impl FromStr for StructuralKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "P" | "projective" => StructuralKind::Projective,
            "Delta" | "Δ" | "standard" | "verma" => StructuralKind::Standard,
            "T" | "tilting" => StructuralKind::Tilting,
            "Nabla" | "∇" | "costandard" => StructuralKind::Costandard,
            "I" | "injective" => StructuralKind::Injective,
            _ => return Err(Error::Convention(format!("unknown module kind `{s}`"))),
        })
    }
}

/// Tilting or injective module of a parabolic block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ParabolicKind {
    Tilting,
    Injective,
}

/// Nonzero multiplicities indexed by `(element, homological position)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedMultiplicityTable {
    pub label: String,
    entries: BTreeMap<(usize, i32), u64>,
}

impl GradedMultiplicityTable {
    pub fn new(label: impl Into<String>) -> Self {
        GradedMultiplicityTable { label: label.into(), entries: BTreeMap::new() }
    }

    pub fn add(&mut self, w: usize, pos: i32, mult: u64) {
        if mult > 0 {
            *self.entries.entry((w, pos)).or_default() += mult;
        }
    }

    pub fn get(&self, w: usize, pos: i32) -> u64 {
        self.entries.get(&(w, pos)).copied().unwrap_or(0)
    }

    /// `(element, position, multiplicity)` sorted by element, then position.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i32, u64)> + '_ {
        self.entries.iter().map(|(&(w, i), &m)| (w, i, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries grouped by position, ascending.
    pub fn by_position(&self) -> BTreeMap<i32, Vec<(usize, u64)>> {
        let mut out: BTreeMap<i32, Vec<(usize, u64)>> = BTreeMap::new();
        for (w, i, m) in self.entries() {
            out.entry(i).or_default().push((w, m));
        }
        out
    }

    /// Same support and multiplicities, ignoring the label.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.entries == other.entries
    }

    /// Adds the coefficients of `p` as positions, shifted down by `shift`.
    fn add_poly(&mut self, w: usize, p: &LaurentPoly, shift: i32) -> Result<()> {
        for (k, c) in p.terms() {
            let m =
                c.to_u64().ok_or_else(|| Error::Convention(format!("negative multiplicity {c} in {}", self.label)))?;
            self.add(w, k - shift, m);
        }
        Ok(())
    }
}

/// Index sets and inherited projective dimensions of an S-subcategory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SSubcategorySummary {
    pub subset: String,
    /// Indices of projectives and injectives: `long(W_J\W)`.
    pub projective_indices: Vec<usize>,
    /// Indices of tiltings: `short(W_J\W)`.
    pub tilting_indices: Vec<usize>,
    pub projective_pd: Vec<usize>,
    pub injective_pd: Vec<usize>,
    pub tilting_pd: Vec<usize>,
}

pub struct Engine {
    sys: Arc<CoxeterSystem>,
    kl: KlTable,
    cells: OnceLock<CellData>,
    pd: OnceLock<pd::PdTables>,
    shuffled_overlay: Option<Vec<Vec<u32>>>,
    rules: RuleSet,
}

impl fmt::Debug for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Engine").field("system", &self.sys).field("rules", &self.rules).finish()
    }
}

impl Engine {
    pub fn new(spec: &str, cap: usize) -> Result<Self> {
        Ok(Self::from_system(CoxeterSystem::build(spec, cap)?))
    }

    /// Uses the validated default rule set (see [`RuleSet::validated`]).
    pub fn from_system(sys: CoxeterSystem) -> Self {
        Self::with_rules(sys, RuleSet::validated())
    }

    pub fn with_rules(sys: CoxeterSystem, rules: RuleSet) -> Self {
        let sys = Arc::new(sys);
        let kl = KlTable::new(sys.clone());
        Engine { sys, kl, cells: OnceLock::new(), pd: OnceLock::new(), shuffled_overlay: None, rules }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn kl(&self) -> &KlTable {
        &self.kl
    }

    pub fn rules(&self) -> RuleSet {
        self.rules
    }

    /// Cell data; the first call forces every structure constant.
    pub fn cells(&self) -> &CellData {
        self.cells.get_or_init(|| CellData::new(&self.kl))
    }

    pub fn a(&self, w: usize) -> usize {
        self.cells().a_idx(w)
    }

    pub fn len(&self, w: usize) -> usize {
        self.sys.len_idx(w)
    }

    pub(crate) fn w0(&self) -> usize {
        self.sys.w0_index()
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.sys.mul_idx(x, y)
    }

    fn inv(&self, x: usize) -> usize {
        self.sys.inv_idx(x)
    }

    /// `w0·w`.
    fn w0l(&self, w: usize) -> usize {
        self.mul(self.w0(), w)
    }

    fn check(&self, w: Element) -> Result<usize> {
        if self.sys.owns(w) {
            Ok(w.index())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        Ok(self.sys.parse_element(name)?.index())
    }

    pub fn name(&self, w: usize) -> String {
        self.sys.render_idx(w)
    }

    /// `h_{x,w}`: its `v^k` coefficient is `[Δ_x : L_w⟨−k⟩]`.
    pub fn graded_decomposition_number(&self, x: Element, w: Element) -> Result<LaurentPoly> {
        Ok(self.kl.h(self.check(x)?, self.check(w)?))
    }

    pub fn structural_pd_idx(&self, kind: StructuralKind, w: usize) -> usize {
        match kind {
            StructuralKind::Projective => 0,
            StructuralKind::Standard => self.len(w),
            StructuralKind::Tilting => self.a(w),
            StructuralKind::Injective => 2 * self.a(self.w0l(w)),
            StructuralKind::Costandard => 2 * self.len(self.w0()) - self.len(w),
        }
    }

    pub fn structural_proj_dim(&self, kind: StructuralKind, w: Element) -> Result<usize> {
        Ok(self.structural_pd_idx(kind, self.check(w)?))
    }

    /// Multiplicity of `T_w` at position `i` of the tilting coresolution of
    /// `P_e`: the `v^i` coefficient of `h_{e, w0·w⁻¹·w0}`.
    pub fn tilting_coresolution_dominant(&self) -> Result<GradedMultiplicityTable> {
        let mut t = GradedMultiplicityTable::new("tilting coresolution of P_e");
        for w in 0..self.sys.order() {
            let u = self.sys.conj_w0_idx(self.inv(w));
            t.add_poly(w, &self.kl.h(0, u), 0)?;
        }
        Ok(t)
    }

    /// Multiplicity of `I_x` at position `i` of the linear injective
    /// coresolution of `T_{w0}`: the `v^i` coefficient of `h_{e, w0·x⁻¹}`.
    pub fn linear_injective_coresolution_antidominant(&self) -> Result<GradedMultiplicityTable> {
        let mut t = GradedMultiplicityTable::new("linear injective coresolution of T_w0");
        for x in 0..self.sys.order() {
            let u = self.w0l(self.inv(x));
            t.add_poly(x, &self.kl.h(0, u), 0)?;
        }
        Ok(t)
    }

    /// Graded character of the singular Verma module for the wall `J`:
    /// entry `(u, i)` is the `v^{i+ℓ(w0^J)}` coefficient of `h_{e,u}` for
    /// `u ∈ long(W/W_{J'})`, `J' = w0·J·w0`.
    pub fn singular_verma_character(&self, j: GeneratorSubset) -> Result<GradedMultiplicityTable> {
        let jp = self.sys.conjugate_subset_by_w0(j);
        let shift = self.len(self.sys.longest_idx(j)) as i32;
        let mut t = GradedMultiplicityTable::new(format!("singular Verma character {}", self.sys.render_subset(j)));
        for u in self.sys.coset_reps_idx(jp, Quotient::Right, Extreme::Longest) {
            t.add_poly(u, &self.kl.h(0, u), shift)?;
        }
        Ok(t)
    }

    fn check_short_rep(&self, x: usize, j: GeneratorSubset) -> Result<()> {
        if self.sys.descent_set(x, crate::coxeter::Side::Left).bits() & j.bits() != 0 {
            return Err(Error::NotACosetRepresentative { element: self.name(x), subset: self.sys.render_subset(j) });
        }
        Ok(())
    }

    pub fn parabolic_pd_idx(&self, kind: ParabolicKind, x: usize, j: GeneratorSubset) -> Result<usize> {
        self.check_short_rep(x, j)?;
        let wj = self.sys.longest_idx(j);
        let aj = self.a(wj);
        Ok(match kind {
            ParabolicKind::Tilting => self.a(self.mul(wj, x)) - aj,
            ParabolicKind::Injective => 2 * self.a(self.w0l(x)) - 2 * aj,
        })
    }

    pub fn parabolic_proj_dim(&self, kind: ParabolicKind, x: Element, j: GeneratorSubset) -> Result<usize> {
        self.parabolic_pd_idx(kind, self.check(x)?, j)
    }

    /// Tilting coresolution of the dominant projective of the parabolic
    /// block, read off the singular Verma character through
    /// `u = w0·(w0^J·x)⁻¹·w0`.
    pub fn parabolic_tilting_coresolution(&self, j: GeneratorSubset) -> Result<GradedMultiplicityTable> {
        let sing = self.singular_verma_character(j)?;
        let wj = self.sys.longest_idx(j);
        let mut t =
            GradedMultiplicityTable::new(format!("parabolic tilting coresolution {}", self.sys.render_subset(j)));
        for x in self.sys.coset_reps_idx(j, Quotient::Left, Extreme::Shortest) {
            let u = self.sys.conj_w0_idx(self.inv(self.mul(wj, x)));
            for (&(w, i), &m) in &sing.entries {
                if w == u {
                    t.add(x, i, m);
                }
            }
        }
        Ok(t)
    }

    pub fn s_subcategory_summary(&self, j: GeneratorSubset) -> SSubcategorySummary {
        let long = self.sys.coset_reps_idx(j, Quotient::Left, Extreme::Longest);
        let short = self.sys.coset_reps_idx(j, Quotient::Left, Extreme::Shortest);
        SSubcategorySummary {
            subset: self.sys.render_subset(j),
            projective_pd: long.iter().map(|&w| self.structural_pd_idx(StructuralKind::Projective, w)).collect(),
            injective_pd: long.iter().map(|&w| self.structural_pd_idx(StructuralKind::Injective, w)).collect(),
            tilting_pd: short.iter().map(|&w| self.structural_pd_idx(StructuralKind::Tilting, w)).collect(),
            projective_indices: long,
            tilting_indices: short,
        }
    }

    /// Total multiplicity of `Δ_{w0}` in a standard flag of `T_w`, with
    /// whether it equals 1. Uses `T_w = ⊤_{w0}P_{w0w}`, whose flag
    /// coefficient at `Δ_{w0·z}` is `h_{z, w0w}`.
    pub fn remark_necessary_condition(&self, w: Element) -> Result<(u64, bool)> {
        let w = self.check(w)?;
        let m = self.kl.h(0, self.w0l(w)).eval_at_one().to_u64().unwrap_or(0);
        Ok((m, m == 1))
    }

    /// `(a(w0w), ℓ(w0w), 2a(w0w))`: the derived twisting of `L_w` by `w0`
    /// can only be nonzero in positions `low..=high`, and its square
    /// vanishes below `serre_low`.
    pub fn twisting_cohomology_window(&self, w: Element) -> Result<(usize, usize, usize)> {
        let u = self.w0l(self.check(w)?);
        Ok((self.a(u), self.len(u), 2 * self.a(u)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_CAP;

    fn engine(t: &str) -> Engine {
        Engine::new(t, DEFAULT_CAP).unwrap()
    }

    fn named(e: &Engine, t: &GradedMultiplicityTable) -> Vec<(String, i32, u64)> {
        t.entries().map(|(w, i, m)| (e.name(w), i, m)).collect()
    }

    fn entry(w: &str, i: i32) -> (String, i32, u64) {
        (w.to_string(), i, 1)
    }

    #[test]
    fn structural_rows_a2() {
        let e = engine("A2");
        let row = |k| (0..6).map(|w| e.structural_pd_idx(k, w)).collect::<Vec<_>>();
        assert_eq!(row(StructuralKind::Tilting), [0, 1, 1, 1, 1, 3]);
        assert_eq!(row(StructuralKind::Injective), [6, 2, 2, 2, 2, 0]);
        assert_eq!(row(StructuralKind::Standard)[0], 0);
        assert_eq!(row(StructuralKind::Costandard), [6, 5, 5, 4, 4, 3]);
    }

    #[test]
    fn decomposition_numbers() {
        let e = engine("A2");
        let s = e.system();
        let p = |x: &str| s.parse_element(x).unwrap();
        assert_eq!(e.graded_decomposition_number(p("e"), s.w0()).unwrap(), LaurentPoly::monomial(1, 3));
        assert!(e.graded_decomposition_number(p("st"), p("st")).unwrap().is_one());
        assert!(e.graded_decomposition_number(p("s"), p("t")).unwrap().is_zero());
    }

    #[test]
    fn dominant_tilting_coresolution() {
        let e = engine("A2");
        let t = e.tilting_coresolution_dominant().unwrap();
        let mut got = named(&e, &t);
        got.sort_by_key(|x| (x.1, x.0.clone()));
        assert_eq!(got, [entry("e", 0), entry("s", 1), entry("t", 1), entry("st", 2), entry("ts", 2), entry("sts", 3)]);
        let a1 = engine("A1");
        assert_eq!(named(&a1, &a1.tilting_coresolution_dominant().unwrap()), [entry("e", 0), entry("s", 1)]);
    }

    #[test]
    fn linear_injective_coresolution() {
        let e = engine("A2");
        let t = e.linear_injective_coresolution_antidominant().unwrap();
        let mut got = named(&e, &t);
        got.sort_by_key(|x| (x.1, x.0.clone()));
        assert_eq!(got, [entry("sts", 0), entry("st", 1), entry("ts", 1), entry("s", 2), entry("t", 2), entry("e", 3)]);
        let a1 = engine("A1");
        assert_eq!(
            named(&a1, &a1.linear_injective_coresolution_antidominant().unwrap()),
            [entry("e", 1), entry("s", 0)]
        );
        for (x, i, _) in t.entries() {
            assert!(i as usize >= e.a(e.w0l(x)));
        }
    }

    #[test]
    fn singular_verma_and_parabolic_coresolution() {
        let e = engine("A2");
        let s = GeneratorSubset::from_indices([0]);
        assert_eq!(
            named(&e, &e.singular_verma_character(s).unwrap()),
            [entry("t", 0), entry("st", 1), entry("sts", 2)]
        );
        let full = e.singular_verma_character(GeneratorSubset::full(2)).unwrap();
        assert_eq!(named(&e, &full), [entry("sts", 0)]);
        let none = e.singular_verma_character(GeneratorSubset::EMPTY).unwrap();
        assert_eq!(none.len(), 6);
        assert_eq!(
            named(&e, &e.parabolic_tilting_coresolution(s).unwrap()),
            [entry("e", 0), entry("t", 1), entry("ts", 2)]
        );
        let dom = e.tilting_coresolution_dominant().unwrap();
        assert!(e.parabolic_tilting_coresolution(GeneratorSubset::EMPTY).unwrap().same_entries(&dom));
    }

    #[test]
    fn parabolic_dims() {
        let e = engine("A2");
        let s = GeneratorSubset::from_indices([0]);
        let short = ["e", "t", "ts"].map(|x| e.element(x).unwrap());
        let t: Vec<usize> = short.iter().map(|&x| e.parabolic_pd_idx(ParabolicKind::Tilting, x, s).unwrap()).collect();
        let i: Vec<usize> =
            short.iter().map(|&x| e.parabolic_pd_idx(ParabolicKind::Injective, x, s).unwrap()).collect();
        assert_eq!(t, [0, 0, 2]);
        assert_eq!(i, [4, 0, 0]);
        assert!(matches!(
            e.parabolic_pd_idx(ParabolicKind::Tilting, e.element("s").unwrap(), s),
            Err(Error::NotACosetRepresentative { .. })
        ));
        for w in 0..6 {
            assert_eq!(
                e.parabolic_pd_idx(ParabolicKind::Tilting, w, GeneratorSubset::EMPTY).unwrap(),
                e.structural_pd_idx(StructuralKind::Tilting, w)
            );
            assert_eq!(
                e.parabolic_pd_idx(ParabolicKind::Injective, w, GeneratorSubset::EMPTY).unwrap(),
                e.structural_pd_idx(StructuralKind::Injective, w)
            );
        }
    }

    #[test]
    fn s_subcategory() {
        let e = engine("A2");
        let sum = e.s_subcategory_summary(GeneratorSubset::from_indices([0]));
        let names = |v: &[usize]| v.iter().map(|&w| e.name(w)).collect::<Vec<_>>();
        assert_eq!(names(&sum.projective_indices), ["s", "st", "sts"]);
        assert_eq!(names(&sum.tilting_indices), ["e", "t", "ts"]);
        assert_eq!(sum.tilting_pd, [0, 1, 1]);
        assert_eq!(sum.injective_pd, [2, 2, 0]);
        let all = e.s_subcategory_summary(GeneratorSubset::EMPTY);
        assert_eq!(all.projective_indices.len(), 6);
        assert_eq!(all.tilting_indices.len(), 6);
    }

    #[test]
    fn remark_and_windows() {
        let e = engine("A2");
        let s = e.system();
        for w in s.elements() {
            assert_eq!(e.remark_necessary_condition(w).unwrap(), (1, true));
        }
        let p = |x: &str| s.parse_element(x).unwrap();
        assert_eq!(e.twisting_cohomology_window(p("e")).unwrap(), (3, 3, 6));
        assert_eq!(e.twisting_cohomology_window(s.w0()).unwrap(), (0, 0, 0));
        assert_eq!(e.twisting_cohomology_window(p("s")).unwrap(), (1, 2, 2));
        let a3 = engine("A3");
        assert!(a3.system().elements().any(|w| a3.remark_necessary_condition(w).unwrap().0 >= 2));
    }
}
