//! Lexicographic walk over the `n`-subsets of `0..m`.

/// `C(m, n)`, exact in 128 bits for every size this crate meets.
pub fn binomial(m: u64, n: u64) -> u128 {
    if n > m {
        return 0;
    }
    let n = n.min(m - n);
    let mut acc: u128 = 1;
    for i in 0..n {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Cursor over strictly increasing index tuples in lexicographic order,
/// starting at `(0, 1, ..., n-1)`. Indices are zero-based positions in a
/// pool of size `m`.
#[derive(Clone, Debug)]
pub struct CombinationCursor {
    m: usize,
    n: usize,
    current: Vec<usize>,
    rank: u128,
    total: u128,
    exhausted: bool,
}

impl CombinationCursor {
    pub fn new(m: usize, n: usize) -> Self {
        let total = binomial(m as u64, n as u64);
        CombinationCursor {
            m,
            n,
            current: (0..n).collect(),
            rank: 0,
            total,
            exhausted: total == 0,
        }
    }

    /// Cursor positioned at the tuple of lexicographic rank `rank`.
    pub fn at_rank(m: usize, n: usize, rank: u128) -> Self {
        let mut c = Self::new(m, n);
        if rank >= c.total {
            c.exhausted = true;
            c.rank = c.total;
            return c;
        }
        c.current = unrank(m, n, rank);
        c.rank = rank;
        c
    }

    pub fn pool_size(&self) -> usize {
        self.m
    }

    pub fn subset_size(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    /// Rank of the current tuple; equals `total()` once exhausted.
    pub fn rank(&self) -> u128 {
        self.rank
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn current(&self) -> Option<&[usize]> {
        (!self.exhausted).then_some(self.current.as_slice())
    }

    /// Moves to the next tuple. Returns the first position that changed, or
    /// `None` at exhaustion.
    pub fn advance(&mut self) -> Option<usize> {
        if self.exhausted {
            return None;
        }
        let (m, n) = (self.m, self.n);
        for i in (0..n).rev() {
            if self.current[i] < m - (n - i) {
                self.current[i] += 1;
                for j in i + 1..n {
                    self.current[j] = self.current[j - 1] + 1;
                }
                self.rank += 1;
                return Some(i);
            }
        }
        self.exhausted = true;
        self.rank = self.total;
        None
    }

    /// Skips every remaining tuple sharing the first `len` entries of the
    /// current one (`len >= 1`), then advances. Returns how many tuples were
    /// passed over, the current one included.
    pub fn skip_prefix(&mut self, len: usize) -> u128 {
        if self.exhausted {
            return 0;
        }
        debug_assert!(len >= 1 && len <= self.n);
        let before = self.rank;
        for k in len..self.n {
            self.current[k] = self.m - self.n + k;
        }
        let last_with_prefix = lex_rank(self.m, &self.current);
        self.rank = last_with_prefix;
        self.advance();
        let after = if self.exhausted { self.total } else { self.rank };
        debug_assert!(self.exhausted || after == last_with_prefix + 1);
        after - before
    }
}

impl Iterator for CombinationCursor {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current()?.to_vec();
        self.advance();
        Some(out)
    }
}

/// Lexicographic rank of a strictly increasing tuple over `0..m`.
pub fn lex_rank(m: usize, tuple: &[usize]) -> u128 {
    let n = tuple.len();
    let mut rank = 0u128;
    let mut prev: isize = -1;
    for (k, &c) in tuple.iter().enumerate() {
        for v in (prev + 1) as usize..c {
            rank += binomial((m - 1 - v) as u64, (n - 1 - k) as u64);
        }
        prev = c as isize;
    }
    rank
}

/// Tuple of lexicographic rank `rank`.
pub fn unrank(m: usize, n: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(n);
    let mut v = 0usize;
    for k in 0..n {
        loop {
            let below = binomial((m - 1 - v) as u64, (n - 1 - k) as u64);
            if rank < below {
                break;
            }
            rank -= below;
            v += 1;
        }
        out.push(v);
        v += 1;
    }
    out
}
