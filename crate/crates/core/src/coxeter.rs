//! Finite Coxeter systems: enumeration, word arithmetic, Bruhat order and
//! parabolic data.
//!
//! Elements are indices into an enumeration sorted by `(length, ShortLex)`,
//! so index 0 is the identity and the last index is `w0`. Each system carries
//! a process-unique id and every [`Element`] records the id of its owner.

use std::collections::VecDeque;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 40_320;

/// Bruhat order is materialized as a bit matrix up to this size.
const BRUHAT_MATRIX_LIMIT: usize = 1_000;

static NEXT_SYSTEM_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    system: u64,
    index: u32,
}

impl Element {
    pub fn index(self) -> usize {
        self.index as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GeneratorSubset(u64);

impl GeneratorSubset {
    pub const EMPTY: GeneratorSubset = GeneratorSubset(0);

    pub fn from_bits(bits: u64) -> Self {
        GeneratorSubset(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        GeneratorSubset(it.into_iter().fold(0, |acc, i| acc | 1 << i))
    }

    pub fn full(rank: usize) -> Self {
        GeneratorSubset(if rank == 64 { u64::MAX } else { (1u64 << rank) - 1 })
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: GeneratorSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Which quotient a set of coset representatives is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quotient {
    /// `W_J\W`: cosets `W_J·w`.
    Left,
    /// `W/W_J`: cosets `w·W_J`.
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Shortest,
    Longest,
}

pub struct CoxeterSystem {
    id: u64,
    name: String,
    matrix: Vec<Vec<u32>>,
    gen_names: Vec<String>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inv: Vec<u32>,
    len: Vec<u32>,
    words: Vec<Vec<u8>>,
    bruhat: Option<BitMatrix>,
}

/// A parabolic subgroup `W_J` as a Coxeter system of its own, with its
/// inclusion into the ambient group.
pub struct ParabolicEmbedding {
    pub system: CoxeterSystem,
    pub subset: GeneratorSubset,
    /// `map[i]` is the ambient index of the sub-system element with index `i`.
    pub map: Vec<usize>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("name", &self.name)
            .field("rank", &self.rank())
            .field("order", &self.order())
            .finish()
    }
}

/// Coxeter matrix for a Cartan type string such as `A3`, `B_2`, `E6`, `I2(5)`.
pub fn cartan_matrix(ty: &str) -> Result<Vec<Vec<u32>>> {
    let unknown = || Error::UnknownType(ty.to_string());
    let t: String = ty.chars().filter(|c| *c != '_' && !c.is_whitespace()).collect();
    let t = t.to_ascii_uppercase();
    if let Some(m) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        let m: u32 = m.parse().map_err(|_| unknown())?;
        if m < 2 {
            return Err(unknown());
        }
        return Ok(vec![vec![1, m], vec![m, 1]]);
    }
    let (letter, n) = t.split_at(1);
    let n: usize = n.parse().map_err(|_| unknown())?;
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect::<Vec<_>>();
    match letter {
        "A" if n >= 1 => edges = chain(n),
        "B" | "C" if n >= 2 => {
            edges = chain(n);
            edges.last_mut().unwrap().2 = 4;
        }
        "D" if n >= 4 => {
            edges = chain(n - 1);
            edges.push((n - 3, n - 1, 3));
        }
        "E" if (6..=8).contains(&n) => {
            edges.push((0, 2, 3));
            edges.push((1, 3, 3));
            for i in 2..n - 1 {
                edges.push((i, i + 1, 3));
            }
        }
        "F" if n == 4 => edges = vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
        "G" if n == 2 => edges = vec![(0, 1, 6)],
        "H" if n == 3 || n == 4 => {
            edges = chain(n);
            edges[0].2 = 5;
        }
        _ => return Err(unknown()),
    }
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for (i, j, k) in edges {
        m[i][j] = k;
        m[j][i] = k;
    }
    Ok(m)
}

fn default_gen_names(rank: usize) -> Vec<String> {
    match rank {
        1 => vec!["s".into()],
        2 => vec!["s".into(), "t".into()],
        _ => (1..=rank).map(|i| format!("s{i}")).collect(),
    }
}

fn validate_matrix(m: &[Vec<u32>]) -> Result<()> {
    let n = m.len();
    if n > 64 {
        return Err(Error::MalformedMatrix(format!("rank {n} exceeds 64")));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedMatrix(format!("row {i} has length {}", row.len())));
        }
        if row[i] != 1 {
            return Err(Error::MalformedMatrix(format!("m({i},{i}) = {} (expected 1)", row[i])));
        }
        for j in 0..n {
            if m[i][j] != m[j][i] {
                return Err(Error::MalformedMatrix(format!("m({i},{j}) != m({j},{i})")));
            }
            // 0 encodes m = ∞
            if i != j && m[i][j] == 1 {
                return Err(Error::MalformedMatrix(format!("m({i},{j}) = 1 off the diagonal")));
            }
        }
    }
    Ok(())
}

/// Right regular action of `W` on itself, found by Todd–Coxeter coset
/// enumeration over the trivial subgroup (HLT strategy).
///
/// Every generator is an involution, so the table has one column per
/// generator and a definition `c·s = d` is always recorded together with
/// `d·s = c`.
struct CosetEnumerator {
    rank: usize,
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    queue: VecDeque<u32>,
    limit: usize,
}

const UNDEF: u32 = u32::MAX;

impl CosetEnumerator {
    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, s: usize) -> Result<()> {
        let d = self.table.len();
        if d >= self.limit {
            return Err(Error::InfiniteGroup { cap: self.limit });
        }
        let d = d as u32;
        self.table.push(vec![UNDEF; self.rank]);
        self.parent.push(d);
        self.table[c as usize][s] = d;
        self.table[d as usize][s] = c;
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi as usize] = lo;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for s in 0..self.rank {
                let f = self.table[e as usize][s];
                if f == UNDEF {
                    continue;
                }
                if self.table[f as usize][s] == e {
                    self.table[f as usize][s] = UNDEF;
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let g = self.table[e1 as usize][s];
                if g != UNDEF {
                    self.merge(f1, g);
                } else {
                    let h = self.table[f1 as usize][s];
                    if h != UNDEF {
                        self.merge(e1, h);
                    } else {
                        self.table[e1 as usize][s] = f1;
                        self.table[f1 as usize][s] = e1;
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, word: &[usize]) -> Result<()> {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = word.len();
        loop {
            while i < j && self.table[f as usize][word[i]] != UNDEF {
                f = self.table[f as usize][word[i]];
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.table[b as usize][word[j - 1]] != UNDEF {
                b = self.table[b as usize][word[j - 1]];
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let s = word[i];
                self.table[f as usize][s] = b;
                self.table[b as usize][s] = f;
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    /// Returns the compacted table over live cosets, coset 0 being the identity.
    fn run(rank: usize, relators: &[Vec<usize>], limit: usize) -> Result<Vec<Vec<u32>>> {
        let mut en =
            CosetEnumerator { rank, table: vec![vec![UNDEF; rank]], parent: vec![0], queue: VecDeque::new(), limit };
        let mut c = 0u32;
        while (c as usize) < en.table.len() {
            if en.live(c) {
                for r in relators {
                    en.scan_and_fill(c, r)?;
                    if !en.live(c) {
                        break;
                    }
                }
                if en.live(c) {
                    for s in 0..rank {
                        if en.table[c as usize][s] == UNDEF {
                            en.define(c, s)?;
                        }
                    }
                }
            }
            c += 1;
        }
        let mut renum = vec![UNDEF; en.table.len()];
        let mut n = 0u32;
        for k in 0..en.table.len() {
            if en.live(k as u32) {
                renum[k] = n;
                n += 1;
            }
        }
        let mut out = Vec::with_capacity(n as usize);
        for k in 0..en.table.len() {
            if en.live(k as u32) {
                let row = (0..rank)
                    .map(|s| {
                        let d = en.table[k][s];
                        renum[en.rep(d) as usize]
                    })
                    .collect();
                out.push(row);
            }
        }
        Ok(out)
    }
}

impl CoxeterSystem {
    /// Builds a system from a type string (`A2`, `B_3`, `E6`, `I2(5)`, ...) or
    /// a JSON Coxeter matrix such as `[[1,3],[3,1]]` (0 encodes ∞).
    pub fn build(spec: &str, cap: usize) -> Result<Self> {
        let spec = spec.trim();
        if spec.starts_with('[') {
            let m: Vec<Vec<u32>> = serde_json::from_str(spec)
                .map_err(|e| Error::MalformedMatrix(format!("not a JSON integer matrix: {e}")))?;
            let names = default_gen_names(m.len());
            return Self::from_matrix(spec, m, names, cap);
        }
        let m = cartan_matrix(spec)?;
        let names = default_gen_names(m.len());
        let name: String = spec.chars().filter(|c| *c != '_').collect::<String>().to_ascii_uppercase();
        Self::from_matrix(&name, m, names, cap)
    }

    pub fn from_matrix(name: &str, matrix: Vec<Vec<u32>>, gen_names: Vec<String>, cap: usize) -> Result<Self> {
        validate_matrix(&matrix)?;
        let rank = matrix.len();
        if gen_names.len() != rank {
            return Err(Error::MalformedMatrix("generator name count differs from rank".into()));
        }
        let table = if rank == 0 {
            vec![vec![]]
        } else {
            let mut relators = Vec::new();
            for i in 0..rank {
                for j in i + 1..rank {
                    let m = matrix[i][j];
                    if m == 0 {
                        return Err(Error::InfiniteGroup { cap });
                    }
                    relators.push([i, j].repeat(m as usize));
                }
            }
            // short relators first keeps the HLT table small
            relators.sort_by_key(|r| r.len());
            let limit = cap.saturating_mul(16).max(4096);
            CosetEnumerator::run(rank, &relators, limit).map_err(|_| Error::InfiniteGroup { cap })?
        };
        if table.len() > cap {
            return Err(Error::InfiniteGroup { cap });
        }
        Ok(Self::from_right_table(name, matrix, gen_names, &table))
    }

    /// Reindexes a right-action table by breadth-first search in ShortLex order.
    fn from_right_table(name: &str, matrix: Vec<Vec<u32>>, gen_names: Vec<String>, table: &[Vec<u32>]) -> Self {
        let rank = matrix.len();
        let n = table.len();
        let mut new_of_old = vec![UNDEF; n];
        let mut old_of_new = Vec::with_capacity(n);
        let mut words: Vec<Vec<u8>> = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        new_of_old[0] = 0;
        old_of_new.push(0u32);
        words.push(Vec::new());
        queue.push_back(0u32);
        while let Some(c) = queue.pop_front() {
            let cn = new_of_old[c as usize] as usize;
            for s in 0..rank {
                let d = table[c as usize][s];
                if new_of_old[d as usize] == UNDEF {
                    new_of_old[d as usize] = old_of_new.len() as u32;
                    old_of_new.push(d);
                    let mut w = words[cn].clone();
                    w.push(s as u8);
                    words.push(w);
                    queue.push_back(d);
                }
            }
        }
        let right: Vec<Vec<u32>> = old_of_new
            .iter()
            .map(|&c| (0..rank).map(|s| new_of_old[table[c as usize][s] as usize]).collect())
            .collect();
        let len: Vec<u32> = words.iter().map(|w| w.len() as u32).collect();
        let apply = |start: u32, word: &mut dyn Iterator<Item = u8>| -> u32 {
            word.fold(start, |c, s| right[c as usize][s as usize])
        };
        let inv: Vec<u32> = words.iter().map(|w| apply(0, &mut w.iter().rev().copied())).collect();
        let left: Vec<Vec<u32>> =
            (0..n).map(|w| (0..rank).map(|s| inv[right[inv[w] as usize][s] as usize]).collect()).collect();
        let mut sys = CoxeterSystem {
            id: NEXT_SYSTEM_ID.fetch_add(1, Ordering::Relaxed),
            name: name.to_string(),
            matrix,
            gen_names,
            right,
            left,
            inv,
            len,
            words,
            bruhat: None,
        };
        if n <= BRUHAT_MATRIX_LIMIT {
            sys.bruhat = Some(sys.bruhat_matrix());
        }
        sys
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Process-unique identity of this system.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn order(&self) -> usize {
        self.len.len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn element(&self, index: usize) -> Element {
        assert!(index < self.order(), "element index {index} out of range");
        Element { system: self.id, index: index as u32 }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn identity(&self) -> Element {
        self.element(0)
    }

    pub fn generator(&self, s: usize) -> Element {
        self.element(self.right[0][s] as usize)
    }

    pub fn w0(&self) -> Element {
        self.element(self.order() - 1)
    }

    pub fn w0_index(&self) -> usize {
        self.order() - 1
    }

    pub fn owns(&self, w: Element) -> bool {
        w.system == self.id && w.index() < self.order()
    }

    fn check(&self, w: Element) -> Result<usize> {
        if self.owns(w) {
            Ok(w.index())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    // Index-level arithmetic used by the table builders.

    #[inline]
    pub fn rmul_gen(&self, w: usize, s: usize) -> usize {
        self.right[w][s] as usize
    }

    #[inline]
    pub fn lmul_gen(&self, s: usize, w: usize) -> usize {
        self.left[w][s] as usize
    }

    #[inline]
    pub fn inv_idx(&self, w: usize) -> usize {
        self.inv[w] as usize
    }

    #[inline]
    pub fn len_idx(&self, w: usize) -> usize {
        self.len[w] as usize
    }

    /// ShortLex normal form as generator indices.
    pub fn word(&self, w: usize) -> &[u8] {
        &self.words[w]
    }

    pub fn mul_idx(&self, u: usize, w: usize) -> usize {
        self.words[w].iter().fold(u, |c, &s| self.right[c][s as usize] as usize)
    }

    pub fn conj_w0_idx(&self, w: usize) -> usize {
        let w0 = self.w0_index();
        self.mul_idx(self.mul_idx(w0, w), w0)
    }

    #[inline]
    pub fn is_right_descent(&self, w: usize, s: usize) -> bool {
        self.right[w][s] < w as u32
    }

    #[inline]
    pub fn is_left_descent(&self, w: usize, s: usize) -> bool {
        self.left[w][s] < w as u32
    }

    pub fn descent_set(&self, w: usize, side: Side) -> GeneratorSubset {
        GeneratorSubset::from_indices((0..self.rank()).filter(|&s| match side {
            Side::Left => self.is_left_descent(w, s),
            Side::Right => self.is_right_descent(w, s),
        }))
    }

    /// Bruhat order via the lifting recursion: if `ws < w` then
    /// `u ≤ w` iff `min(u, us) ≤ ws`.
    pub fn bruhat_leq_idx(&self, u: usize, w: usize) -> bool {
        if let Some(m) = &self.bruhat {
            return m.get(w, u);
        }
        self.bruhat_leq_recursive(u, w)
    }

    fn bruhat_leq_recursive(&self, mut u: usize, mut w: usize) -> bool {
        loop {
            if self.len[u] > self.len[w] {
                return false;
            }
            if u == w {
                return true;
            }
            let s = *self.words[w].last().unwrap() as usize;
            u = u.min(self.rmul_gen(u, s));
            w = self.rmul_gen(w, s);
        }
    }

    /// Row `w` lists every `u ≤ w`.
    fn bruhat_matrix(&self) -> BitMatrix {
        let n = self.order();
        let mut m = BitMatrix::new(n);
        m.set(0, 0);
        for w in 1..n {
            let s = *self.words[w].last().unwrap() as usize;
            let ws = self.rmul_gen(w, s);
            for u in 0..n {
                if self.len[u] <= self.len[w] && m.get(ws, u.min(self.rmul_gen(u, s))) {
                    m.set(w, u);
                }
            }
        }
        m
    }

    /// All `u ≤ w` in enumeration order.
    pub fn bruhat_interval_below(&self, w: usize) -> Vec<usize> {
        match &self.bruhat {
            Some(m) => m.row_ones(w).collect(),
            None => (0..=w).filter(|&u| self.bruhat_leq_recursive(u, w)).collect(),
        }
    }

    pub fn longest_idx(&self, j: GeneratorSubset) -> usize {
        let mut w = 0;
        'grow: loop {
            for s in j.iter() {
                if !self.is_right_descent(w, s) {
                    w = self.rmul_gen(w, s);
                    continue 'grow;
                }
            }
            return w;
        }
    }

    pub fn coset_reps_idx(&self, j: GeneratorSubset, quotient: Quotient, extreme: Extreme) -> Vec<usize> {
        (0..self.order())
            .filter(|&w| {
                let d = match quotient {
                    Quotient::Left => self.descent_set(w, Side::Left),
                    Quotient::Right => self.descent_set(w, Side::Right),
                };
                match extreme {
                    Extreme::Shortest => d.bits() & j.bits() == 0,
                    Extreme::Longest => j.is_subset_of(d),
                }
            })
            .collect()
    }

    // Element-level API.

    pub fn multiply(&self, u: Element, w: Element) -> Result<Element> {
        let (u, w) = (self.check(u)?, self.check(w)?);
        Ok(self.element(self.mul_idx(u, w)))
    }

    pub fn inverse(&self, w: Element) -> Result<Element> {
        Ok(self.element(self.inv_idx(self.check(w)?)))
    }

    pub fn length(&self, w: Element) -> Result<usize> {
        Ok(self.len_idx(self.check(w)?))
    }

    pub fn descents(&self, w: Element, side: Side) -> Result<GeneratorSubset> {
        Ok(self.descent_set(self.check(w)?, side))
    }

    pub fn bruhat_leq(&self, u: Element, w: Element) -> Result<bool> {
        Ok(self.bruhat_leq_idx(self.check(u)?, self.check(w)?))
    }

    pub fn longest_element(&self, j: GeneratorSubset) -> Element {
        self.element(self.longest_idx(j))
    }

    pub fn coset_representatives(&self, j: GeneratorSubset, quotient: Quotient, extreme: Extreme) -> Vec<Element> {
        self.coset_reps_idx(j, quotient, extreme).into_iter().map(|w| self.element(w)).collect()
    }

    pub fn conjugate_by_w0(&self, w: Element) -> Result<Element> {
        Ok(self.element(self.conj_w0_idx(self.check(w)?)))
    }

    /// The generator subset `w0·J·w0`.
    pub fn conjugate_subset_by_w0(&self, j: GeneratorSubset) -> GeneratorSubset {
        GeneratorSubset::from_indices(j.iter().map(|s| {
            let c = self.conj_w0_idx(self.right[0][s] as usize);
            self.words[c][0] as usize
        }))
    }

    pub fn parabolic_embed(&self, j: GeneratorSubset) -> ParabolicEmbedding {
        let gens: Vec<usize> = j.iter().filter(|&s| s < self.rank()).collect();
        let matrix: Vec<Vec<u32>> = gens.iter().map(|&a| gens.iter().map(|&b| self.matrix[a][b]).collect()).collect();
        let names: Vec<String> = gens.iter().map(|&s| self.gen_names[s].clone()).collect();
        let name = format!("{}[{}]", self.name, names.join(","));
        // a parabolic subgroup of a finite group is finite and no larger
        let system = CoxeterSystem::from_matrix(&name, matrix, names, self.order().max(1))
            .expect("parabolic subgroup of a finite Coxeter group");
        let map = (0..system.order())
            .map(|w| system.word(w).iter().fold(0, |c, &s| self.rmul_gen(c, gens[s as usize])))
            .collect();
        ParabolicEmbedding { system, subset: j, map }
    }

    // Names and parsing.

    pub fn render_idx(&self, w: usize) -> String {
        if w == 0 {
            return "e".to_string();
        }
        self.words[w].iter().map(|&s| self.gen_names[s as usize].as_str()).collect()
    }

    pub fn render(&self, w: Element) -> String {
        self.render_idx(w.index())
    }

    /// Parses a word over the generator names; `e` and `w0` are accepted
    /// as the identity and the longest element.
    pub fn parse_element(&self, input: &str) -> Result<Element> {
        let err = || Error::ParseElement { input: input.to_string(), system: self.name.clone() };
        let cleaned: String = input.chars().filter(|c| !c.is_whitespace() && !"·*.".contains(*c)).collect();
        match cleaned.as_str() {
            "" => return Err(err()),
            "e" | "1" => return Ok(self.identity()),
            "w0" | "w_0" => return Ok(self.w0()),
            _ => {}
        }
        let mut rest = cleaned.as_str();
        let mut w = 0usize;
        while !rest.is_empty() {
            let (s, name_len) = self
                .gen_names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len())
                .map(|(s, n)| (s, n.len()))
                .ok_or_else(err)?;
            w = self.rmul_gen(w, s);
            rest = &rest[name_len..];
        }
        Ok(self.element(w))
    }

    /// Parses `{s,t}`, `s,t`, `st` or `∅`/`{}` as a generator subset.
    pub fn parse_subset(&self, input: &str) -> Result<GeneratorSubset> {
        let err = || Error::ParseSubset(input.to_string());
        let body = input.trim().trim_start_matches('{').trim_end_matches('}');
        let mut j = GeneratorSubset::EMPTY;
        if body.is_empty() || body == "∅" || body == "empty" {
            return Ok(j);
        }
        if body == "S" && !self.gen_names.iter().any(|n| n == "S") {
            return Ok(GeneratorSubset::full(self.rank()));
        }
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let mut rest = tok;
            while !rest.is_empty() {
                let (s, l) = self
                    .gen_names
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| rest.starts_with(n.as_str()))
                    .max_by_key(|(_, n)| n.len())
                    .map(|(s, n)| (s, n.len()))
                    .ok_or_else(err)?;
                j.insert(s);
                rest = &rest[l..];
            }
        }
        Ok(j)
    }

    pub fn render_subset(&self, j: GeneratorSubset) -> String {
        let names: Vec<&str> = j.iter().map(|s| self.gen_names[s].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// JSON-friendly dump of the enumeration and, when materialized, the
    /// Bruhat matrix.
    pub fn summary(&self, with_bruhat: bool) -> SystemSummary {
        SystemSummary {
            name: self.name.clone(),
            rank: self.rank(),
            order: self.order(),
            coxeter_matrix: self.matrix.clone(),
            generators: self.gen_names.clone(),
            elements: (0..self.order())
                .map(|w| ElementSummary {
                    index: w,
                    word: self.render_idx(w),
                    length: self.len_idx(w),
                    inverse: self.render_idx(self.inv_idx(w)),
                })
                .collect(),
            bruhat: with_bruhat.then(|| {
                (0..self.order())
                    .map(|w| (0..self.order()).map(|u| self.bruhat_leq_idx(u, w) as u8).collect())
                    .collect()
            }),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SystemSummary {
    pub name: String,
    pub rank: usize,
    pub order: usize,
    pub coxeter_matrix: Vec<Vec<u32>>,
    pub generators: Vec<String>,
    pub elements: Vec<ElementSummary>,
    /// `bruhat[w][u] = 1` iff `u ≤ w`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bruhat: Option<Vec<Vec<u8>>>,
}

#[derive(Debug, Serialize)]
pub struct ElementSummary {
    pub index: usize,
    pub word: String,
    pub length: usize,
    pub inverse: String,
}
