//! Word-level helpers shared by the bitset kernels.
//!
//! Rows are `&[u64]` slices of a fixed word count; bit `v` of a row lives in
//! word `v / 64` at position `v % 64`. Small exhaustive scans (n <= 64) use a
//! single `u64` mask instead.

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

#[inline]
pub(crate) fn get(row: &[u64], v: usize) -> bool {
    row[v / WORD] >> (v % WORD) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], v: usize) {
    row[v / WORD] |= 1 << (v % WORD);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], v: usize) {
    row[v / WORD] &= !(1 << (v % WORD));
}

#[inline]
pub(crate) fn is_empty(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// `dst &= src`, returning whether the result is non-empty.
#[inline]
pub(crate) fn and_assign(dst: &mut [u64], src: &[u64]) -> bool {
    let mut any = 0;
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
        any |= *d;
    }
    any != 0
}

/// Row with bits `0..n` set.
pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut row = vec![u64::MAX; words_for(n)];
    if !n.is_multiple_of(WORD) {
        if let Some(last) = row.last_mut() {
            *last = (1u64 << (n % WORD)) - 1;
        }
    }
    row
}

#[cfg(test)]
pub(crate) fn from_indices(n: usize, vs: &[usize]) -> Vec<u64> {
    let mut row = vec![0; words_for(n)];
    for &v in vs {
        set(&mut row, v);
    }
    row
}

pub(crate) fn ones(row: &[u64]) -> Ones<'_> {
    Ones {
        row,
        word: 0,
        cur: row.first().copied().unwrap_or(0),
    }
}

pub(crate) struct Ones<'a> {
    row: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * WORD + t);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.word];
        }
    }
}

#[inline]
pub(crate) fn mask_ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(t)
        }
    })
}

#[inline]
pub(crate) fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// k-subsets of `0..n` as ascending index vectors, in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    first: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            first: true,
        }
    }

    /// Advances to the next combination; returns `None` when exhausted.
    pub(crate) fn next_comb(&mut self) -> Option<&[usize]> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(&self.idx);
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_rows() {
        assert_eq!(full(0), Vec::<u64>::new());
        assert_eq!(full(3), vec![0b111]);
        assert_eq!(full(64), vec![u64::MAX]);
        assert_eq!(full(65), vec![u64::MAX, 1]);
    }

    #[test]
    fn ones_iterates_across_words() {
        let row = from_indices(130, &[0, 63, 64, 129]);
        assert_eq!(ones(&row).collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(count(&row), 4);
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut c = Combinations::new(4, 2);
        let mut all = Vec::new();
        while let Some(x) = c.next_comb() {
            all.push(x.to_vec());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert!(Combinations::new(2, 3).next_comb().is_none());
        assert_eq!(Combinations::new(3, 0).next_comb(), Some(&[][..]));
    }
}
