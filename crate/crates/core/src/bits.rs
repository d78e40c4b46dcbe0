//! Dense square bit matrices for order relations on element indices.

#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix { n, words, data: vec![0; n * words] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// ORs row `src` into row `dst`; returns whether `dst` changed.
    pub fn or_row_into(&mut self, src: usize, dst: usize) -> bool {
        if src == dst {
            return false;
        }
        let w = self.words;
        let mut changed = false;
        for k in 0..w {
            let s = self.data[src * w + k];
            let d = &mut self.data[dst * w + k];
            if *d | s != *d {
                *d |= s;
                changed = true;
            }
        }
        changed
    }

    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Reflexive-transitive closure (Warshall, row-parallel by words).
    pub fn close_transitively(&mut self) {
        for i in 0..self.n {
            self.set(i, i);
        }
        for k in 0..self.n {
            for i in 0..self.n {
                if self.get(i, k) {
                    self.or_row_into(k, i);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_a_chain() {
        let mut m = BitMatrix::new(70);
        for i in 0..69 {
            m.set(i, i + 1);
        }
        m.close_transitively();
        assert!(m.get(0, 69));
        assert!(!m.get(69, 0));
        assert_eq!(m.row_ones(60).collect::<Vec<_>>(), (60..70).collect::<Vec<_>>());
    }
}
