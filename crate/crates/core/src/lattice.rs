//! Lattice boxes `[lo, hi] ⊂ N^n` with a dense mixed-radix index.

/// Iterates the lattice points of `[lo, hi]` in lexicographic order.
pub struct BoxIter {
    lo: Vec<u32>,
    hi: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl BoxIter {
    pub fn new(hi: &[u32]) -> Self {
        Self::between(&vec![0; hi.len()], hi)
    }

    pub fn between(lo: &[u32], hi: &[u32]) -> Self {
        let empty = lo.iter().zip(hi).any(|(a, b)| a > b);
        Self {
            lo: lo.to_vec(),
            hi: hi.to_vec(),
            next: if empty { None } else { Some(lo.to_vec()) },
        }
    }
}

impl Iterator for BoxIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for j in (0..succ.len()).rev() {
            if succ[j] < self.hi[j] {
                succ[j] += 1;
                self.next = Some(succ);
                break;
            }
            succ[j] = self.lo[j];
        }
        Some(cur)
    }
}

/// Dense indexing of the box `[0, g]`; index order is lexicographic.
#[derive(Clone, Debug)]
pub struct Grid {
    g: Vec<u32>,
    strides: Vec<usize>,
    len: usize,
}

impl Grid {
    pub fn new(g: &[u32]) -> Self {
        let n = g.len();
        let mut strides = vec![1usize; n];
        for j in (0..n.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * (g[j + 1] as usize + 1);
        }
        let len = g.iter().map(|&x| x as usize + 1).product();
        Self {
            g: g.to_vec(),
            strides,
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn top(&self) -> &[u32] {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    pub fn stride(&self, j: usize) -> usize {
        self.strides[j]
    }

    pub fn index(&self, a: &[u32]) -> usize {
        a.iter()
            .zip(&self.strides)
            .map(|(&x, &s)| x as usize * s)
            .sum()
    }

    pub fn point(&self, mut idx: usize) -> Vec<u32> {
        let mut a = vec![0; self.g.len()];
        for (j, s) in self.strides.iter().enumerate() {
            a[j] = (idx / s) as u32;
            idx %= s;
        }
        a
    }
}
