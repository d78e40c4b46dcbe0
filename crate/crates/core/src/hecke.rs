//! The Hecke algebra of a finite Coxeter system over `ℤ[v,v⁻¹]`, normalized
//! so that `(H_s + v)(H_s − v⁻¹) = 0` and `H̲_s = H_s + v`.
//!
//! [`KlTable`] holds every KL polynomial `h_{y,w}` (computed eagerly) and the
//! KL-basis structure constants `h_{x,y}^z` (computed lazily, one row
//! `x ↦ {H̲_x·H̲_y}_y` at a time).

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::coxeter::{CoxeterSystem, Element};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Standard,
    Kl,
}

/// A finite linear combination of basis elements; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElt {
    system: u64,
    basis: Basis,
    terms: BTreeMap<usize, LaurentPoly>,
}

/// Sparse KL-basis expansion `z ↦ h_{x,y}^z`, sorted by `z`.
pub type SparseRow = Vec<(u32, LaurentPoly)>;

impl HeckeElt {
    pub fn zero(sys: &CoxeterSystem, basis: Basis) -> Self {
        HeckeElt { system: sys.id(), basis, terms: BTreeMap::new() }
    }

    /// The basis vector `H_w` or `H̲_w`.
    pub fn basis_vector(sys: &CoxeterSystem, basis: Basis, w: usize) -> Self {
        Self::from_terms(sys, basis, [(w, LaurentPoly::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, LaurentPoly)>>(sys: &CoxeterSystem, basis: Basis, it: I) -> Self {
        let mut e = Self::zero(sys, basis);
        for (w, c) in it {
            e.add_term(w, &c);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn system_id(&self) -> u64 {
        self.system
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: usize) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    pub fn add_term(&mut self, w: usize, c: &LaurentPoly) {
        self.add_scaled_term(w, c, &BigInt::one(), 0);
    }

    fn add_scaled_term(&mut self, w: usize, c: &LaurentPoly, k: &BigInt, shift: i32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        slot.add_scaled(c, k, shift);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_assign(&mut self, other: &HeckeElt) {
        debug_assert_eq!(self.basis, other.basis);
        for (&w, c) in &other.terms {
            self.add_term(w, c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElt {
        let mut out = HeckeElt { system: self.system, basis: self.basis, terms: BTreeMap::new() };
        if c.is_zero() {
            return out;
        }
        for (&w, x) in &self.terms {
            out.terms.insert(w, x * c);
        }
        out
    }

    /// Render as `coeff·H_w` terms in enumeration order.
    pub fn render(&self, sys: &CoxeterSystem) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sym = match self.basis {
            Basis::Standard => "H",
            Basis::Kl => "C",
        };
        self.terms
            .iter()
            .map(|(&w, c)| {
                let name = sys.render_idx(w);
                if c.is_one() {
                    format!("{sym}_{name}")
                } else {
                    format!("({c}){sym}_{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn check_same(sys: &CoxeterSystem, a: &HeckeElt) -> Result<()> {
    if a.system == sys.id() {
        Ok(())
    } else {
        Err(Error::SystemMismatch)
    }
}

/// `a·H_s` in the standard basis.
fn std_rmul_gen(sys: &CoxeterSystem, a: &HeckeElt, s: usize) -> HeckeElt {
    let mut out = HeckeElt { system: a.system, basis: Basis::Standard, terms: BTreeMap::new() };
    let q = LaurentPoly::from_terms([(-1, 1), (1, -1)]);
    for (&x, c) in &a.terms {
        let xs = sys.rmul_gen(x, s);
        out.add_term(xs, c);
        if xs < x {
            out.add_term(x, &(c * &q));
        }
    }
    out
}

/// `H_s·a` in the standard basis.
fn std_lmul_gen(sys: &CoxeterSystem, s: usize, a: &HeckeElt) -> HeckeElt {
    let mut out = HeckeElt { system: a.system, basis: Basis::Standard, terms: BTreeMap::new() };
    let q = LaurentPoly::from_terms([(-1, 1), (1, -1)]);
    for (&x, c) in &a.terms {
        let sx = sys.lmul_gen(s, x);
        out.add_term(sx, c);
        if sx < x {
            out.add_term(x, &(c * &q));
        }
    }
    out
}

/// Product in the standard basis.
pub fn std_multiply(sys: &CoxeterSystem, a: &HeckeElt, b: &HeckeElt) -> Result<HeckeElt> {
    check_same(sys, a)?;
    check_same(sys, b)?;
    if a.basis != Basis::Standard || b.basis != Basis::Standard {
        return Err(Error::Convention("std_multiply expects standard-basis operands".into()));
    }
    let mut out = HeckeElt::zero(sys, Basis::Standard);
    for (&y, c) in &b.terms {
        let mut part = a.scale(c);
        for &s in sys.word(y) {
            part = std_rmul_gen(sys, &part, s as usize);
        }
        out.add_assign(&part);
    }
    Ok(out)
}

/// `H_x·b` for a standard-basis `b`, by left multiplication along the word of `x`.
pub fn std_left_multiply(sys: &CoxeterSystem, x: usize, b: &HeckeElt) -> HeckeElt {
    let mut out = b.clone();
    for &s in sys.word(x).iter().rev() {
        out = std_lmul_gen(sys, s as usize, &out);
    }
    out
}

/// The bar involution on a standard-basis element: `v ↦ v⁻¹` on
/// coefficients and `H_s ↦ H_s + (v − v⁻¹)`, extended multiplicatively.
pub fn bar_involution(sys: &CoxeterSystem, a: &HeckeElt) -> Result<HeckeElt> {
    check_same(sys, a)?;
    let mut out = HeckeElt::zero(sys, Basis::Standard);
    let shift = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    for (&w, c) in &a.terms {
        let mut img = HeckeElt::from_terms(sys, Basis::Standard, [(0, c.bar())]);
        for &s in sys.word(w) {
            let mut next = std_rmul_gen(sys, &img, s as usize);
            next.add_assign(&img.scale(&shift));
            img = next;
        }
        out.add_assign(&img);
    }
    Ok(out)
}

pub struct KlTable {
    sys: Arc<CoxeterSystem>,
    /// `kl[w]` lists `(y, h_{y,w})` for every `y ≤ w` with `h_{y,w} ≠ 0`, sorted by `y`.
    kl: Vec<Vec<(u32, LaurentPoly)>>,
    /// `mu[w]` lists `(y, μ(y,w))` for `y < w` with `μ ≠ 0`.
    mu: Vec<Vec<(u32, i64)>>,
    rows: Vec<OnceLock<Vec<SparseRow>>>,
}

impl std::fmt::Debug for KlTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KlTable").field("system", &self.sys).finish()
    }
}

impl KlTable {
    /// Computes all KL elements layer by layer in length; elements of equal
    /// length are independent and built in parallel.
    pub fn new(sys: Arc<CoxeterSystem>) -> Self {
        let n = sys.order();
        let mut kl: Vec<Vec<(u32, LaurentPoly)>> = Vec::with_capacity(n);
        let mut mu: Vec<Vec<(u32, i64)>> = Vec::with_capacity(n);
        let mut start = 0;
        while start < n {
            let l = sys.len_idx(start);
            let end = (start..n).find(|&w| sys.len_idx(w) != l).unwrap_or(n);
            let layer: Vec<Vec<LaurentPoly>> =
                (start..end).into_par_iter().map(|w| Self::kl_column(&sys, w, &kl, &mu)).collect();
            for col in layer {
                let sparse: Vec<(u32, LaurentPoly)> =
                    col.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(y, p)| (y as u32, p.clone())).collect();
                let w = kl.len();
                let m: Vec<(u32, i64)> = sparse
                    .iter()
                    .filter(|(y, _)| *y as usize != w)
                    .filter_map(|(y, p)| {
                        let c = p.coeff(1);
                        (!c.is_zero()).then(|| (*y, c.to_i64().expect("μ fits in i64")))
                    })
                    .collect();
                kl.push(sparse);
                mu.push(m);
            }
            start = end;
        }
        let rows = (0..n).map(|_| OnceLock::new()).collect();
        KlTable { sys, kl, mu, rows }
    }

    /// Dense standard-basis coefficients of `H̲_w`, from
    /// `H̲_w = H̲_s·H̲_{sw} − Σ_{y < sw, sy < y} μ(y, sw)·H̲_y`.
    fn kl_column(
        sys: &CoxeterSystem,
        w: usize,
        kl: &[Vec<(u32, LaurentPoly)>],
        mu: &[Vec<(u32, i64)>],
    ) -> Vec<LaurentPoly> {
        let n = sys.order();
        let mut col = vec![LaurentPoly::zero(); n];
        if w == 0 {
            col[0] = LaurentPoly::one();
            return col;
        }
        let s = sys.word(w)[0] as usize;
        let wp = sys.lmul_gen(s, w);
        let one = BigInt::one();
        for (y, h) in &kl[wp] {
            let y = *y as usize;
            let sy = sys.lmul_gen(s, y);
            col[sy].add_scaled(h, &one, 0);
            let shift = if sy > y { 1 } else { -1 };
            col[y].add_scaled(h, &one, shift);
        }
        for &(y, m) in &mu[wp] {
            let y = y as usize;
            if sys.is_left_descent(y, s) {
                let m = BigInt::from(-m);
                for (z, h) in &kl[y] {
                    col[*z as usize].add_scaled(h, &m, 0);
                }
            }
        }
        col
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn system_arc(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    pub fn h_ref(&self, y: usize, w: usize) -> Option<&LaurentPoly> {
        let col = &self.kl[w];
        col.binary_search_by_key(&(y as u32), |e| e.0).ok().map(|i| &col[i].1)
    }

    /// `h_{y,w}` (zero unless `y ≤ w`).
    pub fn h(&self, y: usize, w: usize) -> LaurentPoly {
        self.h_ref(y, w).cloned().unwrap_or_default()
    }

    /// Nonzero `h_{y,w}` for fixed `w`, sorted by `y`.
    pub fn column(&self, w: usize) -> &[(u32, LaurentPoly)] {
        &self.kl[w]
    }

    pub fn mu_idx(&self, y: usize, w: usize) -> i64 {
        let m = &self.mu[w];
        m.binary_search_by_key(&(y as u32), |e| e.0).map(|i| m[i].1).unwrap_or(0)
    }

    pub fn mu_list(&self, w: usize) -> &[(u32, i64)] {
        &self.mu[w]
    }

    pub fn kl_element_idx(&self, w: usize) -> HeckeElt {
        HeckeElt::from_terms(&self.sys, Basis::Standard, self.kl[w].iter().map(|(y, p)| (*y as usize, p.clone())))
    }

    /// Rewrites a standard-basis element in the KL basis by peeling off the
    /// Bruhat-maximal term; enumeration order refines Bruhat order, so the
    /// largest index in the support is always maximal.
    pub fn expand_in_kl_basis(&self, a: &HeckeElt) -> Result<HeckeElt> {
        check_same(&self.sys, a)?;
        if a.basis == Basis::Kl {
            return Ok(a.clone());
        }
        let mut rest = a.clone();
        let mut out = HeckeElt::zero(&self.sys, Basis::Kl);
        while let Some((&w, c)) = rest.terms.iter().next_back() {
            let c = c.clone();
            for (y, h) in &self.kl[w] {
                rest.add_scaled_term(*y as usize, &(h * &c), &-BigInt::one(), 0);
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    /// Flattens a KL-basis element to the standard basis.
    pub fn to_standard(&self, a: &HeckeElt) -> Result<HeckeElt> {
        check_same(&self.sys, a)?;
        if a.basis == Basis::Standard {
            return Ok(a.clone());
        }
        let mut out = HeckeElt::zero(&self.sys, Basis::Standard);
        for (&z, c) in &a.terms {
            for (y, h) in &self.kl[z] {
                out.add_term(*y as usize, &(h * c));
            }
        }
        Ok(out)
    }

    /// `H̲_w·H̲_s` in the KL basis.
    fn kl_rmul_gen(
        &self,
        w: usize,
        s: usize,
        coeff: &LaurentPoly,
        out: &mut BTreeMap<u32, LaurentPoly>,
        sign: &BigInt,
    ) {
        let sys = &self.sys;
        let ws = sys.rmul_gen(w, s);
        let mut add = |z: usize, c: &LaurentPoly, k: &BigInt, shift: i32| {
            let slot = out.entry(z as u32).or_default();
            slot.add_scaled(c, k, shift);
        };
        if ws < w {
            add(w, coeff, sign, 1);
            add(w, coeff, sign, -1);
        } else {
            add(ws, coeff, sign, 0);
            for &(z, m) in &self.mu[w] {
                if sys.is_right_descent(z as usize, s) {
                    add(z as usize, coeff, &(sign * BigInt::from(m)), 0);
                }
            }
        }
    }

    /// Row `x` of the structure constants: entry `y` is `H̲_x·H̲_y` in the KL
    /// basis, from
    /// `H̲_x·H̲_y = (H̲_x·H̲_{ys})·H̲_s − Σ_{z < ys, zs < z} μ(z, ys)·H̲_x·H̲_z`
    /// with `s` the last letter of `y`.
    fn compute_row(&self, x: usize) -> Vec<SparseRow> {
        let sys = &self.sys;
        let n = sys.order();
        let mut row: Vec<SparseRow> = Vec::with_capacity(n);
        row.push(vec![(x as u32, LaurentPoly::one())]);
        let one = BigInt::one();
        let minus = -BigInt::one();
        for y in 1..n {
            let s = *sys.word(y).last().unwrap() as usize;
            let yp = sys.rmul_gen(y, s);
            let mut acc: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
            for (w, c) in &row[yp] {
                self.kl_rmul_gen(*w as usize, s, c, &mut acc, &one);
            }
            for &(z, m) in &self.mu[yp] {
                if sys.is_right_descent(z as usize, s) {
                    let k = &minus * BigInt::from(m);
                    for (w, c) in &row[z as usize] {
                        acc.entry(*w).or_default().add_scaled(c, &k, 0);
                    }
                }
            }
            row.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
        row
    }

    pub fn structure_row(&self, x: usize) -> &[SparseRow] {
        self.rows[x].get_or_init(|| self.compute_row(x))
    }

    /// `{h_{x,y}^z}_z` as a sparse list.
    pub fn structure_idx(&self, x: usize, y: usize) -> &SparseRow {
        &self.structure_row(x)[y]
    }

    /// `h_{x,y}^z`.
    pub fn h_xyz(&self, x: usize, y: usize, z: usize) -> LaurentPoly {
        let r = self.structure_idx(x, y);
        r.binary_search_by_key(&(z as u32), |e| e.0).map(|i| r[i].1.clone()).unwrap_or_default()
    }

    /// Forces every structure-constant row, in parallel.
    pub fn fill_structure_constants(&self) {
        (0..self.sys.order()).into_par_iter().for_each(|x| {
            self.structure_row(x);
        });
    }

    /// The standard-basis route: multiply the two KL elements in the
    /// standard basis and re-expand. Kept independent of the row recursion
    /// so that each can check the other.
    pub fn structure_via_standard(&self, x: usize, y: usize) -> SparseRow {
        let prod = std_multiply(&self.sys, &self.kl_element_idx(x), &self.kl_element_idx(y)).expect("same system");
        let kl = self.expand_in_kl_basis(&prod).expect("same system");
        kl.terms.into_iter().map(|(z, c)| (z as u32, c)).collect()
    }

    // Element-level API.

    fn check(&self, w: Element) -> Result<usize> {
        if self.sys.owns(w) {
            Ok(w.index())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    pub fn kl_element(&self, w: Element) -> Result<HeckeElt> {
        Ok(self.kl_element_idx(self.check(w)?))
    }

    pub fn kl_polynomial(&self, y: Element, w: Element) -> Result<LaurentPoly> {
        Ok(self.h(self.check(y)?, self.check(w)?))
    }

    pub fn mu_coefficient(&self, y: Element, w: Element) -> Result<i64> {
        Ok(self.mu_idx(self.check(y)?, self.check(w)?))
    }

    pub fn kl_structure_constants(&self, x: Element, y: Element) -> Result<Vec<(Element, LaurentPoly)>> {
        let (x, y) = (self.check(x)?, self.check(y)?);
        Ok(self.structure_idx(x, y).iter().map(|(z, c)| (self.sys.element(*z as usize), c.clone())).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_CAP;
    use proptest::prelude::*;

    fn table(t: &str) -> KlTable {
        KlTable::new(Arc::new(CoxeterSystem::build(t, DEFAULT_CAP).unwrap()))
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn std(sys: &CoxeterSystem, terms: &[(&str, &str)]) -> HeckeElt {
        HeckeElt::from_terms(
            sys,
            Basis::Standard,
            terms.iter().map(|(w, c)| (sys.parse_element(w).unwrap().index(), p(c))),
        )
    }

    #[test]
    fn quadratic_relation_and_lengths() {
        let k = table("A2");
        let w = k.system();
        let hs = std(w, &[("s", "1")]);
        let ht = std(w, &[("t", "1")]);
        assert_eq!(std_multiply(w, &hs, &hs).unwrap(), std(w, &[("e", "1"), ("s", "v^-1-v")]));
        assert_eq!(std_multiply(w, &hs, &ht).unwrap(), std(w, &[("st", "1")]));
        let a = std(w, &[("ts", "2v+1"), ("s", "v^-3")]);
        assert_eq!(std_multiply(w, &std(w, &[("e", "1")]), &a).unwrap(), a);
        let other = CoxeterSystem::build("A2", DEFAULT_CAP).unwrap();
        let foreign = HeckeElt::basis_vector(&other, Basis::Standard, 1);
        assert!(matches!(std_multiply(w, &hs, &foreign), Err(Error::SystemMismatch)));
    }

    #[test]
    fn bar_examples() {
        let k = table("A2");
        let w = k.system();
        let hs = std(w, &[("s", "1")]);
        assert_eq!(bar_involution(w, &hs).unwrap(), std(w, &[("s", "1"), ("e", "v-v^-1")]));
        let he = std(w, &[("e", "1")]);
        assert_eq!(bar_involution(w, &he).unwrap(), he);
        for x in 0..w.order() {
            let hx = HeckeElt::basis_vector(w, Basis::Standard, x);
            assert_eq!(bar_involution(w, &bar_involution(w, &hx).unwrap()).unwrap(), hx);
        }
    }

    #[test]
    fn kl_element_examples() {
        let k = table("A2");
        let w = k.system();
        let e = |s: &str| w.parse_element(s).unwrap();
        assert_eq!(k.kl_element(e("s")).unwrap(), std(w, &[("s", "1"), ("e", "v")]));
        assert_eq!(k.kl_element(e("st")).unwrap(), std(w, &[("st", "1"), ("s", "v"), ("t", "v"), ("e", "v^2")]));
        assert_eq!(k.kl_element(e("e")).unwrap(), std(w, &[("e", "1")]));
        assert_eq!(k.kl_polynomial(e("e"), w.w0()).unwrap(), p("v^3"));
        assert_eq!(k.kl_polynomial(e("s"), e("t")).unwrap(), LaurentPoly::zero());
        for y in 0..6 {
            for x in 0..6 {
                let expect = if w.bruhat_leq_idx(y, x) {
                    LaurentPoly::monomial(1, (w.len_idx(x) - w.len_idx(y)) as i32)
                } else {
                    LaurentPoly::zero()
                };
                assert_eq!(k.h(y, x), expect);
            }
        }
    }

    #[test]
    fn structure_constant_examples() {
        let k = table("A2");
        let w = k.system();
        let e = |s: &str| w.parse_element(s).unwrap().index();
        assert_eq!(k.h_xyz(e("s"), e("s"), e("s")), p("v+v^-1"));
        let st_ts = k.structure_idx(e("st"), e("ts")).clone();
        assert_eq!(st_ts, vec![(e("s") as u32, p("v+v^-1")), (e("sts") as u32, p("v+v^-1"))]);
        for y in 0..6 {
            assert_eq!(k.structure_idx(0, y), &vec![(y as u32, LaurentPoly::one())]);
        }
    }

    #[test]
    fn expand_examples() {
        let k = table("A2");
        let w = k.system();
        let s = w.parse_element("s").unwrap().index();
        let hs = HeckeElt::basis_vector(w, Basis::Standard, s);
        let ex = k.expand_in_kl_basis(&hs).unwrap();
        assert_eq!(ex, HeckeElt::from_terms(w, Basis::Kl, [(s, p("1")), (0, p("-v"))]));
        let he = HeckeElt::basis_vector(w, Basis::Standard, 0);
        assert_eq!(k.expand_in_kl_basis(&he).unwrap(), HeckeElt::basis_vector(w, Basis::Kl, 0));
        for x in 0..6 {
            assert_eq!(k.expand_in_kl_basis(&k.kl_element_idx(x)).unwrap(), HeckeElt::basis_vector(w, Basis::Kl, x));
        }
    }

    /// KL elements characterized independently: bar-invariant, unitriangular,
    /// off-diagonal coefficients in vℤ[v].
    #[test]
    fn kl_basis_characterization() {
        for t in ["A1", "A2", "A3", "B2", "B3", "G2"] {
            let k = table(t);
            let w = k.system();
            for x in 0..w.order() {
                let c = k.kl_element_idx(x);
                assert_eq!(bar_involution(w, &c).unwrap(), c, "{t} bar-invariance at {x}");
                assert!(k.h(x, x).is_one());
                for (y, h) in k.column(x) {
                    let y = *y as usize;
                    assert!(w.bruhat_leq_idx(y, x));
                    if y != x {
                        assert!(h.low_degree().unwrap() >= 1, "{t} h_{{{y},{x}}} = {h}");
                        assert!(h.has_nonnegative_coeffs());
                        let d = h.degree().finite().unwrap();
                        assert!(d as usize <= w.len_idx(x) - w.len_idx(y));
                    }
                }
            }
        }
    }

    #[test]
    fn structure_routes_agree() {
        for t in ["A1", "A2", "B2", "A3", "G2"] {
            let k = table(t);
            let n = k.system().order();
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(k.structure_idx(x, y), &k.structure_via_standard(x, y), "{t} ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn structure_constants_are_bar_symmetric() {
        for t in ["A1", "A2", "B2"] {
            let k = table(t);
            let n = k.system().order();
            for x in 0..n {
                for y in 0..n {
                    for (_, c) in k.structure_idx(x, y) {
                        assert!(c.is_bar_symmetric());
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn expand_inverts_flattening(coeffs in prop::collection::vec((0usize..48, -2i32..3, -3i64..4), 0..8)) {
            let k = table("B3");
            let w = k.system();
            let a = HeckeElt::from_terms(w, Basis::Kl, coeffs.into_iter().map(|(z, d, c)| (z, LaurentPoly::monomial(c, d))));
            let flat = k.to_standard(&a).unwrap();
            prop_assert_eq!(k.expand_in_kl_basis(&flat).unwrap(), a);
        }

        #[test]
        fn std_multiply_is_associative(x in 0usize..24, y in 0usize..24, z in 0usize..24) {
            let k = table("A3");
            let w = k.system();
            let (a, b, c) = (k.kl_element_idx(x), k.kl_element_idx(y), HeckeElt::basis_vector(w, Basis::Standard, z));
            let l = std_multiply(w, &std_multiply(w, &a, &b).unwrap(), &c).unwrap();
            let r = std_multiply(w, &a, &std_multiply(w, &b, &c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
            prop_assert_eq!(std_left_multiply(w, z, &b), std_multiply(w, &HeckeElt::basis_vector(w, Basis::Standard, z), &b).unwrap());
        }
    }
}
