//! Verma flags and graded characters of twisted projective and tilting
//! modules.
//!
//! On Grothendieck groups `⊤_xP_y ≅ θ_yΔ_x` is `H_x·H̲_y`, so its graded Verma
//! flag is read off the standard-basis expansion, and its composition
//! factors follow by substituting `Δ_z ↦ Σ_w h_{z,w} L_w`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::Engine;
use crate::coxeter::Element;
use crate::error::{Error, Result};
use crate::hecke::{std_left_multiply, HeckeElt};
use crate::laurent::LaurentPoly;

/// Multiplicity of `L_w⟨−deg⟩`, keyed by `(deg, w)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CharacterGrid {
    cells: BTreeMap<(i32, usize), u64>,
}

impl CharacterGrid {
    fn add(&mut self, deg: i32, w: usize, m: u64) {
        if m > 0 {
            *self.cells.entry((deg, w)).or_default() += m;
        }
    }

    pub fn get(&self, deg: i32, w: usize) -> u64 {
        self.cells.get(&(deg, w)).copied().unwrap_or(0)
    }

    /// `(deg, w, mult)` with degrees ascending.
    pub fn entries(&self) -> impl Iterator<Item = (i32, usize, u64)> + '_ {
        self.cells.iter().map(|(&(d, w), &m)| (d, w, m))
    }

    pub fn degrees(&self) -> Vec<i32> {
        let mut d: Vec<i32> = self.cells.keys().map(|k| k.0).collect();
        d.dedup();
        d
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    /// Degree `d` becomes `−d`.
    pub fn reversed(&self) -> Self {
        CharacterGrid { cells: self.cells.iter().map(|(&(d, w), &m)| ((-d, w), m)).collect() }
    }

    /// One line per degree, ascending, with explicit signs; an element is
    /// repeated once per unit of multiplicity.
    pub fn render(&self, engine: &Engine) -> String {
        let mut out = String::new();
        for d in self.degrees() {
            let names: Vec<String> = self
                .entries()
                .filter(|e| e.0 == d)
                .flat_map(|(_, w, m)| std::iter::repeat_n(engine.name(w), m as usize))
                .collect();
            let _ = writeln!(out, "{d:+3} | {}", names.join(" "));
        }
        out
    }
}

impl Engine {
    /// `H_x·H̲_y` in the standard basis: the coefficient of `v^k` at `H_z` is
    /// `(⊤_xP_y : Δ_z⟨k⟩)`.
    pub fn twisted_verma_flag_idx(&self, x: usize, y: usize) -> HeckeElt {
        std_left_multiply(self.system(), x, &self.kl().kl_element_idx(y))
    }

    pub fn twisted_verma_flag(&self, x: Element, y: Element) -> Result<Vec<(Element, LaurentPoly)>> {
        let flag = self.twisted_verma_flag_idx(self.check(x)?, self.check(y)?);
        Ok(flag.terms().map(|(z, c)| (self.system().element(z), c.clone())).collect())
    }

    /// Graded composition factors of `⊤_xP_y`.
    pub fn twisted_projective_character_idx(&self, x: usize, y: usize) -> Result<CharacterGrid> {
        let mut grid = CharacterGrid::default();
        for (z, c) in self.twisted_verma_flag_idx(x, y).terms() {
            for w in 0..self.system().order() {
                let Some(h) = self.kl().h_ref(z, w) else { continue };
                let prod = c * h;
                for (d, m) in prod.terms() {
                    let m = m.to_u64().ok_or_else(|| Error::Convention(format!("negative character entry {m}")))?;
                    grid.add(d, w, m);
                }
            }
        }
        Ok(grid)
    }

    pub fn twisted_projective_character(&self, x: Element, y: Element) -> Result<CharacterGrid> {
        self.twisted_projective_character_idx(self.check(x)?, self.check(y)?)
    }

    /// Graded composition factors of `⊤_xT_y`: degree reversal of
    /// `⊤_{xw0}P_{w0y}` under the duality exchanging `Δ` and `∇`.
    pub fn twisted_tilting_character_idx(&self, x: usize, y: usize) -> Result<CharacterGrid> {
        Ok(self.twisted_projective_character_idx(self.mul(x, self.w0()), self.w0l(y))?.reversed())
    }

    pub fn twisted_tilting_character(&self, x: Element, y: Element) -> Result<CharacterGrid> {
        self.twisted_tilting_character_idx(self.check(x)?, self.check(y)?)
    }
}
