//! KL preorders and cells, Lusztig's `a`-function and the `b`-function.
//!
//! Orientation: `e` is the minimum and `w0` the maximum of every preorder.
//! `x ≤_R y` means `H̲_y` occurs in `H̲_x·H̲_z` for some `z`; `x ≤_L y` means
//! it occurs in `H̲_z·H̲_x`. Since the algebra is generated by the `H̲_s`, the
//! closure is built from products with simple KL elements only.

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitMatrix;
use crate::coxeter::{CoxeterSystem, Element};
use crate::error::{Error, Result};
use crate::hecke::KlTable;
use crate::laurent::Degree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum KlSide {
    L,
    R,
    J,
}

pub struct CellData {
    system: u64,
    left: BitMatrix,
    right: BitMatrix,
    two_sided: BitMatrix,
    a: Vec<u32>,
    /// `b[x][y]`.
    b: Vec<Vec<Degree>>,
}

/// Support of `H̲_w·H̲_s` (right) or `H̲_s·H̲_w` (left) in the KL basis.
fn simple_product_support(kl: &KlTable, w: usize, s: usize, side: KlSide) -> Vec<usize> {
    let sys = kl.system();
    let (ws, desc): (usize, fn(&CoxeterSystem, usize, usize) -> bool) = match side {
        KlSide::R => (sys.rmul_gen(w, s), CoxeterSystem::is_right_descent),
        _ => (sys.lmul_gen(s, w), CoxeterSystem::is_left_descent),
    };
    if ws < w {
        return vec![w];
    }
    let mut out = vec![ws];
    out.extend(kl.mu_list(w).iter().map(|&(z, _)| z as usize).filter(|&z| desc(sys, z, s)));
    out
}

fn closure(kl: &KlTable, side: KlSide) -> BitMatrix {
    let sys = kl.system();
    let mut m = BitMatrix::new(sys.order());
    for w in 0..sys.order() {
        for s in 0..sys.rank() {
            for z in simple_product_support(kl, w, s, side) {
                m.set(w, z);
            }
        }
    }
    m.close_transitively();
    m
}

impl CellData {
    /// Builds preorders, `a` and `b`; forces every structure-constant row.
    pub fn new(kl: &KlTable) -> Self {
        let sys = kl.system();
        let n = sys.order();
        let (left, right) = rayon::join(|| closure(kl, KlSide::L), || closure(kl, KlSide::R));
        let mut two_sided = BitMatrix::new(n);
        for x in 0..n {
            for y in left.row_ones(x).chain(right.row_ones(x)) {
                two_sided.set(x, y);
            }
        }
        two_sided.close_transitively();

        kl.fill_structure_constants();
        let a: Vec<u32> = {
            let mut a = vec![0i32; n];
            for x in 0..n {
                for y in 0..n {
                    for (z, c) in kl.structure_idx(x, y) {
                        let d = c.degree().finite().expect("nonzero structure constant");
                        let slot = &mut a[*z as usize];
                        *slot = (*slot).max(d);
                    }
                }
            }
            a.into_iter().map(|d| d as u32).collect()
        };
        // b(x,y) = max_z deg h_{z,x⁻¹}^y
        let b: Vec<Vec<Degree>> = (0..n)
            .into_par_iter()
            .map(|x| {
                let xi = sys.inv_idx(x);
                let mut row = vec![Degree::NegInfinity; n];
                for z in 0..n {
                    for (y, c) in kl.structure_idx(z, xi) {
                        let slot = &mut row[*y as usize];
                        *slot = (*slot).max(c.degree());
                    }
                }
                row
            })
            .collect();
        CellData { system: sys.id(), left, right, two_sided, a, b }
    }

    fn matrix(&self, side: KlSide) -> &BitMatrix {
        match side {
            KlSide::L => &self.left,
            KlSide::R => &self.right,
            KlSide::J => &self.two_sided,
        }
    }

    pub fn leq_idx(&self, side: KlSide, x: usize, y: usize) -> bool {
        self.matrix(side).get(x, y)
    }

    pub fn same_cell(&self, side: KlSide, x: usize, y: usize) -> bool {
        self.leq_idx(side, x, y) && self.leq_idx(side, y, x)
    }

    /// Cells as sorted index lists, ordered by their smallest element.
    pub fn partition(&self, side: KlSide) -> Vec<Vec<usize>> {
        let n = self.a.len();
        let mut seen = vec![false; n];
        let mut cells = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let cell: Vec<usize> = (x..n).filter(|&y| self.same_cell(side, x, y)).collect();
            for &y in &cell {
                seen[y] = true;
            }
            cells.push(cell);
        }
        cells
    }

    pub fn a_idx(&self, w: usize) -> usize {
        self.a[w] as usize
    }

    pub fn a_table(&self) -> &[u32] {
        &self.a
    }

    pub fn b_idx(&self, x: usize, y: usize) -> Degree {
        self.b[x][y]
    }

    fn check(&self, w: Element, sys: &CoxeterSystem) -> Result<usize> {
        if sys.id() == self.system && sys.owns(w) {
            Ok(w.index())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    pub fn kl_leq(&self, sys: &CoxeterSystem, side: KlSide, x: Element, y: Element) -> Result<bool> {
        Ok(self.leq_idx(side, self.check(x, sys)?, self.check(y, sys)?))
    }

    pub fn a_function(&self, sys: &CoxeterSystem, w: Element) -> Result<usize> {
        Ok(self.a_idx(self.check(w, sys)?))
    }

    pub fn b_function(&self, sys: &CoxeterSystem, x: Element, y: Element) -> Result<Degree> {
        Ok(self.b_idx(self.check(x, sys)?, self.check(y, sys)?))
    }
}
