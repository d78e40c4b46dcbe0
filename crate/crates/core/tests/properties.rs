//! Randomized invariants of the KL data, cells and pd solvers on groups too
//! large for exhaustive checks in the unit tests.

use std::sync::OnceLock;

use homcat::fixtures::{FixtureSet, Record};
use homcat::hecke::bar_involution;
use homcat::homcat::{PdFamily, PdKind};
use homcat::{Engine, GeneratorSubset, KlSide, DEFAULT_CAP};
use proptest::prelude::*;

/// The last entry is the reducible group A1 × A2, given by its Coxeter matrix.
const SYSTEMS: [&str; 4] = ["A3", "B3", "G2", "[[1,2,2],[2,1,3],[2,3,1]]"];

fn engine(t: &str) -> &'static Engine {
    static CACHE: OnceLock<Vec<Engine>> = OnceLock::new();
    let all = CACHE.get_or_init(|| SYSTEMS.iter().map(|t| Engine::new(t, DEFAULT_CAP).unwrap()).collect());
    &all[SYSTEMS.iter().position(|s| *s == t).unwrap()]
}

/// A system and two elements of it, drawn from raw indices.
fn triple() -> impl Strategy<Value = (&'static str, usize, usize)> {
    (prop::sample::select(SYSTEMS.to_vec()), any::<usize>(), any::<usize>()).prop_map(|(t, a, b)| {
        let n = engine(t).system().order();
        (t, a % n, b % n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kl_basis_is_bar_invariant_and_unitriangular((t, w, _) in triple()) {
        let e = engine(t);
        let sys = e.system();
        let kw = e.kl().kl_element_idx(w);
        prop_assert_eq!(bar_involution(sys, &kw).unwrap(), kw);
        prop_assert!(e.kl().h(w, w).is_one());
        for y in 0..sys.order() {
            let h = e.kl().h(y, w);
            if h.is_zero() {
                continue;
            }
            prop_assert!(sys.bruhat_leq_idx(y, w));
            if y != w {
                prop_assert!(h.low_degree().is_some_and(|d| d >= 1) && h.has_nonnegative_coeffs(), "h = {}", h);
                // degree bound ℓ(w) − ℓ(y)
                prop_assert!(h.degree().finite().is_some_and(|d| d as usize <= sys.len_idx(w) - sys.len_idx(y)));
            }
        }
    }

    #[test]
    fn structure_constants_agree_with_standard_basis((t, x, y) in triple()) {
        let kl = engine(t).kl();
        let mut a = kl.structure_idx(x, y).clone();
        let mut b = kl.structure_via_standard(x, y);
        a.sort_by_key(|p| p.0);
        b.sort_by_key(|p| p.0);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn structure_support_lies_above_both_factors((t, x, y) in triple()) {
        let e = engine(t);
        for (z, h) in e.kl().structure_idx(x, y) {
            let z = *z as usize;
            prop_assert!(e.cells().leq_idx(KlSide::R, x, z) && e.cells().leq_idx(KlSide::L, y, z));
            prop_assert!(h.has_nonnegative_coeffs());
            prop_assert_eq!(h.bar(), h.clone());
        }
    }

    #[test]
    fn a_function_laws((t, x, y) in triple()) {
        let e = engine(t);
        let sys = e.system();
        let cells = e.cells();
        prop_assert_eq!(e.a(x), e.a(sys.inv_idx(x)));
        prop_assert!(e.a(x) <= sys.len_idx(x));
        if cells.leq_idx(KlSide::J, x, y) {
            prop_assert!(e.a(x) <= e.a(y));
            prop_assert!(e.a(sys.mul_idx(sys.w0_index(), y)) <= e.a(sys.mul_idx(sys.w0_index(), x)));
        }
        if cells.same_cell(KlSide::J, x, y) {
            prop_assert_eq!(e.a(x), e.a(y));
        }
        if cells.same_cell(KlSide::L, x, y) {
            prop_assert!(cells.same_cell(KlSide::J, x, y));
            // left cells share their right descent set
            prop_assert_eq!(sys.descent_set(x, homcat::Side::Right), sys.descent_set(y, homcat::Side::Right));
        }
    }

    #[test]
    fn pd_results_are_well_formed((t, x, y) in triple()) {
        let e = engine(t);
        let cap = 2 * e.system().len_idx(e.system().w0_index()) as u32;
        for family in PdFamily::ALL {
            let table = e.pd_table(family);
            prop_assert!(table.conflicts.is_empty(), "{:?}: {:?}", family, table.conflicts);
            let r = table.get(x, y);
            prop_assert!(r.lo() <= r.hi() && r.hi() <= cap);
            if let PdKind::Exact(v) = r.kind {
                prop_assert!(r.contains(v) && r.is_certified());
            }
            if let Some(c) = r.conjectured {
                prop_assert!(r.contains(c), "{:?} ({}, {}): conjectured {} outside {}", family, x, y, c, r);
            }
        }
    }

    #[test]
    fn twisted_flag_and_character_sizes_match((t, x, y) in triple()) {
        let e = engine(t);
        let n = e.system().order();
        let flag = e.twisted_verma_flag_idx(x, y);
        let verma_size = |z: usize| (0..n).map(|w| e.kl().h(z, w).eval_at_one()).sum::<num_bigint::BigInt>();
        let expected: num_bigint::BigInt = flag.terms().map(|(z, c)| c.eval_at_one() * verma_size(z)).sum();
        let grid = e.twisted_projective_character_idx(x, y).unwrap();
        prop_assert_eq!(num_bigint::BigInt::from(grid.total()), expected);
        let tilt = e.twisted_tilting_character_idx(x, y).unwrap();
        let w0 = e.system().w0_index();
        let twin = e.system().mul_idx(x, w0);
        let twin = e.twisted_projective_character_idx(twin, e.system().mul_idx(w0, y)).unwrap();
        prop_assert_eq!(tilt.reversed(), twin);
    }

    #[test]
    fn parabolic_coresolution_of_empty_subset_is_dominant(t in prop::sample::select(SYSTEMS.to_vec())) {
        let e = engine(t);
        let empty = e.parabolic_tilting_coresolution(GeneratorSubset::EMPTY).unwrap();
        prop_assert!(empty.same_entries(&e.tilting_coresolution_dominant().unwrap()));
    }

    #[test]
    fn resealed_value_edits_are_caught_by_recomputation(k in 0usize..64, bump in 1u32..4) {
        let set = FixtureSet::embedded();
        let mut records: Vec<Record> = set.records().map(|(_, r)| r.clone()).collect();
        let rows: Vec<usize> = records
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r.body, homcat::fixtures::RecordBody::PdRow { .. }))
            .map(|(i, _)| i)
            .collect();
        let i = rows[k % rows.len()];
        if let homcat::fixtures::RecordBody::PdRow { values, .. } = &mut records[i].body {
            let j = k % values.len();
            values[j] += bump;
        }
        records[i].seal();
        let e = Engine::new("A2", DEFAULT_CAP).unwrap();
        let report = homcat::fixtures::verify(&e, &FixtureSet::from_records("edited", records)).unwrap();
        prop_assert!(!report.passes());
    }
}
