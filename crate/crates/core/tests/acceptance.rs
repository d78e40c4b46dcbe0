//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::time::{Duration, Instant};

use homcat::fixtures::{self, FixtureSet, Record};
use homcat::hecke::bar_involution;
use homcat::homcat::{ConjectureScope, ParabolicKind, PdFamily, Provenance, ShuffleVariant, StructuralKind};
use homcat::{Engine, GeneratorSubset, KlSide, DEFAULT_CAP};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn engine(t: &str) -> Engine {
    Engine::new(t, DEFAULT_CAP).expect("finite system")
}

fn names(e: &Engine, ws: &[usize]) -> Vec<String> {
    ws.iter().map(|&w| e.name(w)).collect()
}

/// Elements of A2 in table order.
const A2: [&str; 6] = ["e", "s", "t", "st", "ts", "w0"];

fn a2_index(e: &Engine) -> Vec<usize> {
    A2.iter().map(|s| e.element(s).unwrap()).collect()
}

fn c1() -> Check {
    let e = engine("A2");
    let got: Vec<usize> = a2_index(&e).into_iter().map(|w| e.a(w)).collect();
    ensure(got == [0, 1, 1, 1, 1, 3], || format!("a-values {got:?}"))
}

fn c2() -> Check {
    let e = engine("A2");
    let idx = a2_index(&e);
    let row = |k| idx.iter().map(|&w| e.structural_pd_idx(k, w)).collect::<Vec<_>>();
    let (t, i) = (row(StructuralKind::Tilting), row(StructuralKind::Injective));
    ensure(t == [0, 1, 1, 1, 1, 3] && i == [6, 2, 2, 2, 2, 0], || format!("tilting {t:?}, injective {i:?}"))
}

fn c3() -> Check {
    let e = engine("A2");
    let table = e.tilting_coresolution_dominant().map_err(|x| x.to_string())?;
    let mut got: Vec<(String, i32, u64)> = table.entries().map(|(w, i, m)| (e.name(w), i, m)).collect();
    got.sort_by_key(|g| (g.1, g.0.clone()));
    let want: Vec<(String, i32, u64)> = [("e", 0), ("s", 1), ("t", 1), ("st", 2), ("ts", 2), ("sts", 3)]
        .iter()
        .map(|(w, i)| (w.to_string(), *i, 1))
        .collect();
    ensure(got == want, || format!("coresolution {got:?}"))?;
    for t in ["A1", "A2", "A3", "B2"] {
        let r = engine(t).certify_auslander_ringel().map_err(|x| x.to_string())?;
        ensure(r.passes(), || r.to_string())?;
    }
    let start = Instant::now();
    let r = engine("B3").certify_auslander_ringel().map_err(|x| x.to_string())?;
    let took = start.elapsed();
    ensure(r.passes(), || r.to_string())?;
    ensure(took < Duration::from_secs(120), || format!("B3 took {took:?}"))
}

fn c4() -> Check {
    let start = Instant::now();
    for t in ["A1", "A2", "A3", "B2"] {
        let r = engine(t).certify_auslander().map_err(|x| x.to_string())?;
        ensure(r.passes() && r.conditions.len() == 3, || r.to_string())?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))
}

fn c5() -> Check {
    let e = engine("A2");
    let j = e.system().parse_subset("s").unwrap();
    let short = ["e", "t", "ts"].map(|s| e.element(s).unwrap());
    let pd = |k| short.iter().map(|&x| e.parabolic_pd_idx(k, x, j).unwrap()).collect::<Vec<_>>();
    let (t, i) = (pd(ParabolicKind::Tilting), pd(ParabolicKind::Injective));
    ensure(t == [0, 0, 2] && i == [4, 0, 0], || format!("parabolic rows {t:?} {i:?}"))?;
    let c = e.parabolic_tilting_coresolution(j).map_err(|x| x.to_string())?;
    let got: Vec<(String, i32, u64)> = c.entries().map(|(w, i, m)| (e.name(w), i, m)).collect();
    ensure(got == [("e".into(), 0, 1), ("t".into(), 1, 1), ("ts".into(), 2, 1)], || format!("coresolution {got:?}"))?;
    for t in ["A2", "A3"] {
        let e = engine(t);
        let full = GeneratorSubset::full(e.system().rank()).bits();
        for bits in 0..full {
            let r = e.certify_parabolic(GeneratorSubset::from_bits(bits)).map_err(|x| x.to_string())?;
            ensure(r.passes(), || r.to_string())?;
        }
    }
    Ok(())
}

fn c6() -> Check {
    let e = engine("A2");
    let s = e.s_subcategory_summary(e.system().parse_subset("s").unwrap());
    let (p, t) = (names(&e, &s.projective_indices), names(&e, &s.tilting_indices));
    ensure(p == ["s", "st", "sts"] && t == ["e", "t", "ts"], || format!("index sets {p:?} {t:?}"))?;
    ensure(s.tilting_pd == [0, 1, 1] && s.injective_pd == [2, 2, 0], || {
        format!("pd rows {:?} {:?}", s.tilting_pd, s.injective_pd)
    })
}

fn c7() -> Check {
    let e = engine("A2");
    let set = FixtureSet::embedded();
    let w0 = e.system().w0_index();
    for family in [PdFamily::TwistedProjective, PdFamily::TwistedTilting] {
        let fix = set.pd_matrix_indexed(&e, family.table_name()).map_err(|x| x.to_string())?;
        let tab = e.pd_table(family);
        ensure(tab.conflicts.is_empty(), || format!("{family:?} conflicts {:?}", tab.conflicts))?;
        for x in 0..6 {
            for y in 0..6 {
                let r = tab.get(x, y);
                let f = fix[x][y];
                let at = || format!("{family:?} x={} y={}: computed {r}, published {f}", e.name(x), e.name(y));
                ensure(r.contains(f), at)?;
                ensure(r.provenance != Provenance::Fixture, at)?;
                let required = x == 0 || x == w0 || y == 0 || y == w0;
                // exactness detected by the b-bound, in θ_yΔ_x coordinates
                let b_exact = family == PdFamily::TwistedProjective && e.twisted_pd_upper_bound_idx(y, x).1;
                if required || b_exact {
                    ensure(r.is_certified(), at)?;
                }
            }
        }
    }
    let (s, t) = (e.element("s").unwrap(), e.element("t").unwrap());
    let r = e.pd_table(PdFamily::TwistedProjective).get(s, t);
    ensure(r.exact_value() == Some(1) && e.twisted_pd_upper_bound_idx(t, s) == (1, true), || format!("(s,t): {r}"))
}

fn c8() -> Check {
    let e = engine("A2");
    let report = fixtures::verify(&e, &FixtureSet::embedded()).map_err(|x| x.to_string())?;
    let grids: Vec<_> =
        report.outcomes.iter().filter(|o| o.title.starts_with("twisted-") && o.title.contains("character")).collect();
    ensure(grids.len() == 24, || format!("{} grid records", grids.len()))?;
    for g in grids {
        ensure(g.status == fixtures::Status::Match, || format!("{}: {:?}", g.title, g.diffs))?;
    }
    Ok(())
}

fn c9() -> Check {
    let e = engine("A2");
    let set = FixtureSet::embedded();
    let w0 = e.system().w0_index();
    for family in [PdFamily::ShuffledProjective, PdFamily::ShuffledTilting] {
        let fix = set.pd_matrix_indexed(&e, family.table_name()).map_err(|x| x.to_string())?;
        let tab = e.pd_table(family);
        for x in 0..6 {
            for y in 0..6 {
                let r = tab.get(x, y);
                let f = fix[x][y];
                let at = || format!("{family:?} x={} y={}: computed {r}, published {f}", e.name(x), e.name(y));
                ensure(r.contains(f), at)?;
                let known = x == 0 || x == w0 || y == 0 || y == w0 || e.len(x) == 1;
                if known {
                    ensure(r.is_certified() && r.exact_value() == Some(f), at)?;
                }
            }
        }
    }
    for t in ["A1", "A2", "A3"] {
        let e = engine(t);
        for s in 0..e.system().rank() {
            for v in [ShuffleVariant::Projective, ShuffleVariant::Tilting] {
                let r = e.certify_shuffle_simple(s, v).map_err(|x| x.to_string())?;
                ensure(r.passes(), || r.to_string())?;
            }
        }
    }
    Ok(())
}

fn c10() -> Check {
    let e = engine("A2");
    let set = FixtureSet::embedded();
    let r = e.check_conjectures(ConjectureScope::Fixtures(&set)).map_err(|x| x.to_string())?;
    ensure(r.passes(), || format!("{r:?}"))?;
    ensure(r.checks[0].confirmed == 36 && r.checks[1].confirmed == 36, || format!("{r:?}"))?;
    for w in e.system().elements() {
        let (m, ok) = e.remark_necessary_condition(w).map_err(|x| x.to_string())?;
        ensure(m == 1 && ok, || format!("A2 {}: multiplicity {m}", e.system().render(w)))?;
    }
    let a3 = engine("A3");
    let witness = a3.system().elements().find(|&w| a3.remark_necessary_condition(w).unwrap().0 >= 2);
    ensure(witness.is_some(), || "no A3 witness".into())
}

/// Property checks on the elements `ws` of `t` (all of them when `None`).
fn properties(t: &str, sample: Option<usize>, rng: &mut StdRng) -> Check {
    let e = engine(t);
    let sys = e.system();
    let n = sys.order();
    let pick = |rng: &mut StdRng| -> Vec<usize> {
        match sample {
            None => (0..n).collect(),
            Some(k) => (0..k).map(|_| rng.gen_range(0..n)).collect(),
        }
    };
    let cells = e.cells();
    let w0 = sys.w0_index();
    for w in pick(rng) {
        let kw = e.kl().kl_element_idx(w);
        let bar = bar_involution(sys, &kw).map_err(|x| x.to_string())?;
        ensure(bar == kw, || format!("{t}: H̲_{} not bar-invariant", e.name(w)))?;
        ensure(e.kl().h(w, w).is_one(), || format!("{t}: h_ww ≠ 1"))?;
        for y in 0..n {
            let h = e.kl().h(y, w);
            if y != w && !h.is_zero() {
                let ok = h.low_degree().is_some_and(|d| d >= 1) && h.has_nonnegative_coeffs();
                ensure(ok, || format!("{t}: h_({},{}) = {h}", e.name(y), e.name(w)))?;
            }
        }
        ensure(e.a(w) == e.a(sys.inv_idx(w)), || format!("{t}: a(w) ≠ a(w⁻¹)"))?;
    }
    for x in pick(rng) {
        for y in 0..n {
            for (z, _) in e.kl().structure_idx(x, y) {
                let z = *z as usize;
                ensure(cells.leq_idx(KlSide::J, x, z), || format!("{t}: support of H̲_{}H̲_{}", e.name(x), e.name(y)))?;
            }
            if cells.same_cell(KlSide::J, x, y) {
                ensure(e.a(x) == e.a(y), || format!("{t}: a not constant on a two-sided cell"))?;
            }
            if cells.leq_idx(KlSide::J, y, x) {
                let (ax, ay) = (e.a(sys.mul_idx(w0, x)), e.a(sys.mul_idx(w0, y)));
                ensure(ax <= ay, || format!("{t}: a(w0x) > a(w0y) for x={} y={}", e.name(x), e.name(y)))?;
            }
        }
    }
    let empty = e.parabolic_tilting_coresolution(GeneratorSubset::EMPTY).map_err(|x| x.to_string())?;
    let dominant = e.tilting_coresolution_dominant().map_err(|x| x.to_string())?;
    ensure(empty.same_entries(&dominant), || format!("{t}: parabolic(∅) differs from the dominant coresolution"))
}

fn c11() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for t in ["A1", "A2", "B2"] {
        properties(t, None, &mut rng)?;
    }
    for t in ["A3", "B3"] {
        properties(t, Some(12), &mut rng)?;
    }
    Ok(())
}

/// Every leaf of `v` except the seal, as a JSON pointer.
fn leaves(v: &serde_json::Value, path: String, out: &mut Vec<String>) {
    match v {
        serde_json::Value::Object(m) => {
            for (k, x) in m {
                if path.is_empty() && k == "digest" {
                    continue;
                }
                leaves(x, format!("{path}/{k}"), out);
            }
        }
        serde_json::Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                leaves(x, format!("{path}/{i}"), out);
            }
        }
        _ => out.push(path),
    }
}

fn mutate(v: &mut serde_json::Value) {
    let next = match &*v {
        serde_json::Value::Number(n) => serde_json::json!(n.as_i64().unwrap_or(0) + 1),
        serde_json::Value::String(s) => serde_json::json!(format!("{s}x")),
        serde_json::Value::Bool(b) => serde_json::json!(!*b),
        serde_json::Value::Null => serde_json::json!(0),
        other => other.clone(),
    };
    *v = next;
}

fn c12() -> Check {
    let e = engine("A2");
    let set = FixtureSet::embedded();
    let clean = fixtures::verify(&e, &set).map_err(|x| x.to_string())?;
    ensure(clean.passes(), || {
        format!("clean verify failed: {:?}", clean.outcomes.iter().filter(|o| !o.diffs.is_empty()).collect::<Vec<_>>())
    })?;
    let records: Vec<Record> = set.records().map(|(_, r)| r.clone()).collect();
    let mut mutations = 0;
    for (k, rec) in records.iter().enumerate() {
        let json = serde_json::to_value(rec).unwrap();
        let mut paths = Vec::new();
        leaves(&json, String::new(), &mut paths);
        for p in paths {
            let mut m = json.clone();
            mutate(m.pointer_mut(&p).unwrap());
            mutations += 1;
            let Ok(bad) = serde_json::from_value::<Record>(m) else { continue };
            let mut rs = records.clone();
            rs[k] = bad;
            let detected = match fixtures::verify(&e, &FixtureSet::from_records("mutated", rs)) {
                Ok(r) => !r.passes(),
                Err(_) => true,
            };
            ensure(detected, || format!("undetected mutation of record {k} at {p}"))?;
        }
    }
    ensure(mutations > 500, || format!("only {mutations} mutations"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Option<u64>); 12] = [
        ("1 a-function A2", c1, Some(1)),
        ("2 structural pd tables A2", c2, Some(1)),
        ("3 tilting coresolution and Auslander-Ringel certificates", c3, None),
        ("4 Auslander certificates A1 A2 A3 B2", c4, Some(60)),
        ("5 parabolic block A2 J={s} and all proper J in A2 A3", c5, None),
        ("6 S-subcategory A2 J={s}", c6, None),
        ("7 twisted pd tables A2", c7, None),
        ("8 twisted character grids A2", c8, None),
        ("9 shuffled pd tables A2 and simple shuffle certificates", c9, None),
        ("10 conjecture checks", c10, None),
        ("11 property suites", c11, None),
        ("12 fixture harness", c12, None),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let mut result = f();
        let took = start.elapsed();
        if let (Ok(()), Some(secs)) = (&result, limit) {
            if took > Duration::from_secs(secs) {
                result = Err(format!("exceeded {secs} s"));
            }
        }
        match result {
            Ok(()) => println!("PASS criterion {name} ({:.2} s)", took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.2} s): {msg}", took.as_secs_f64());
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
