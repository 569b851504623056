//! Directed graphs with loops, stored as dense out- and in-adjacency bit rows,
//! together with the domination primitives everything else is built on.
//!
//! A digraph is *d-dominating* when every vertex set `S` with `1 <= |S| <= d`
//! has a common out-neighbour `w`. The out-neighbour may lie in `S` itself, in
//! which case the loop `(w, w)` must be present. Reversing every arc turns a
//! d-dominating digraph into a *d-dominated* one.

use std::fmt;
use std::ops::Deref;

use crate::bits;
use crate::error::{invalid, Error, Result};

/// Largest vertex count accepted by the exact dominating-set search.
pub const MIN_DOMINATING_SET_LIMIT: usize = 64;

/// A digraph on vertices `0..n`; loops allowed, no parallel arcs.
///
/// Both the out-rows and their transpose are kept so that in- and
/// out-neighbourhood queries are equally cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    words: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = bits::words_for(n);
        Digraph {
            n,
            words,
            out: vec![0; n * words],
            inn: vec![0; n * words],
        }
    }

    pub fn from_fn(n: usize, mut arc: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Digraph::new(n);
        for u in 0..n {
            for v in 0..n {
                if arc(u, v) {
                    g.insert_arc(u, v);
                }
            }
        }
        g
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Digraph::new(n);
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(invalid(format!("arc ({u},{v}) out of range for n = {n}")));
            }
            g.insert_arc(u, v);
        }
        Ok(g)
    }

    /// `V x V`, optionally without the loops.
    pub fn complete(n: usize, loops: bool) -> Self {
        Digraph::from_fn(n, |u, v| loops || u != v)
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Self {
        Digraph::from_fn(n, |u, v| n > 1 && v == (u + 1) % n)
    }

    pub(crate) fn insert_arc(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::set(&mut self.out[u * w..(u + 1) * w], v);
        bits::set(&mut self.inn[v * w..(v + 1) * w], u);
    }

    #[cfg(test)]
    pub(crate) fn remove_arc(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::clear(&mut self.out[u * w..(u + 1) * w], v);
        bits::clear(&mut self.inn[v * w..(v + 1) * w], u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        bits::get(self.out_row(u), v)
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.has_arc(u, u)
    }

    #[inline]
    pub(crate) fn out_row(&self, u: usize) -> &[u64] {
        &self.out[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub(crate) fn in_row(&self, u: usize) -> &[u64] {
        &self.inn[u * self.words..(u + 1) * self.words]
    }

    /// Out-rows packed into single words; only for `n <= 64`.
    pub(crate) fn out_masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| (0..self.n).map(|u| self.out_row(u).first().copied().unwrap_or(0)).collect())
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.out_row(u))
    }

    pub fn in_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.in_row(u))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        bits::count(self.out_row(u))
    }

    pub fn in_degree(&self, u: usize) -> usize {
        bits::count(self.in_row(u))
    }

    pub fn arc_count(&self) -> usize {
        bits::count(&self.out)
    }

    /// All arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    /// Whether the stored transpose agrees with the out-rows.
    pub fn is_transpose_coherent(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| bits::get(self.out_row(u), v) == bits::get(self.in_row(v), u)))
    }

    fn check_vertices(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&v| v >= self.n) {
            Some(v) => Err(invalid(format!("vertex {v} out of range for n = {}", self.n))),
            None => Ok(()),
        }
    }

    /// `{ w : (s, w) is an arc for every s in S }`.
    pub fn common_out_neighbors(&self, s: &[usize]) -> Result<Vec<usize>> {
        if s.is_empty() {
            return Err(invalid("common_out_neighbors needs a non-empty set"));
        }
        self.check_vertices(s)?;
        let mut acc = self.out_row(s[0]).to_vec();
        for &v in &s[1..] {
            bits::and_assign(&mut acc, self.out_row(v));
        }
        Ok(bits::ones(&acc).collect())
    }

    /// Decides d-domination. On failure the witness is the smallest failing
    /// set, ties broken lexicographically by sorted index sequence.
    pub fn check_d_dominating(&self, d: usize) -> Result<DominationCertificate> {
        if d == 0 {
            return Err(invalid("d must be at least 1"));
        }
        let universe = bits::full(self.n);
        Ok(match first_failing_set(self, &universe, d, Side::Out) {
            Some(w) => DominationCertificate::Fails(w),
            None => DominationCertificate::Holds,
        })
    }

    /// Same as [`check_d_dominating`](Self::check_d_dominating) on the reverse.
    pub fn check_d_dominated(&self, d: usize) -> Result<DominationCertificate> {
        if d == 0 {
            return Err(invalid("d must be at least 1"));
        }
        let universe = bits::full(self.n);
        Ok(match first_failing_set(self, &universe, d, Side::In) {
            Some(w) => DominationCertificate::Fails(w),
            None => DominationCertificate::Holds,
        })
    }

    pub fn is_d_dominating(&self, d: usize) -> bool {
        self.check_d_dominating(d).map(|c| c.holds()).unwrap_or(false)
    }

    pub fn is_d_dominated(&self, d: usize) -> bool {
        self.check_d_dominated(d).map(|c| c.holds()).unwrap_or(false)
    }

    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            words: self.words,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// The subgraph induced on `u`, reindexed in increasing original order.
    pub fn induced(&self, u: &[usize]) -> Result<Induced> {
        self.check_vertices(u)?;
        let mut map = u.to_vec();
        map.sort_unstable();
        map.dedup();
        let graph = Digraph::from_fn(map.len(), |a, b| self.has_arc(map[a], map[b]));
        Ok(Induced { graph, map })
    }

    /// A smallest set `S` such that every vertex outside `S` receives an arc
    /// from `S`; lexicographically first among the smallest.
    pub fn min_out_dominating_set(&self) -> Result<Vec<usize>> {
        self.min_dominating_set(Side::Out)
    }

    /// A smallest set `S` such that every vertex outside `S` sends an arc into `S`.
    pub fn min_in_dominating_set(&self) -> Result<Vec<usize>> {
        self.min_dominating_set(Side::In)
    }

    fn min_dominating_set(&self, side: Side) -> Result<Vec<usize>> {
        if self.n == 0 {
            return Err(invalid("dominating sets need n >= 1"));
        }
        if self.n > MIN_DOMINATING_SET_LIMIT {
            return Err(Error::Capacity {
                what: "exact dominating-set search",
                n: self.n,
                limit: MIN_DOMINATING_SET_LIMIT,
            });
        }
        Ok(self
            .find_dominating_set(self.n, side)
            .expect("the full vertex set always dominates"))
    }

    /// Smallest out-dominating set of size at most `max_size`, if any.
    pub fn find_out_dominating_set(&self, max_size: usize) -> Option<Vec<usize>> {
        self.find_dominating_set(max_size, Side::Out)
    }

    /// Smallest in-dominating set of size at most `max_size`, if any.
    pub fn find_in_dominating_set(&self, max_size: usize) -> Option<Vec<usize>> {
        self.find_dominating_set(max_size, Side::In)
    }

    fn find_dominating_set(&self, max_size: usize, side: Side) -> Option<Vec<usize>> {
        if self.n == 0 {
            return Some(Vec::new());
        }
        // Closed neighbourhoods: what a single chosen vertex takes care of.
        let closed: Vec<Vec<u64>> = (0..self.n)
            .map(|v| {
                let mut row = side.row(self, v).to_vec();
                bits::set(&mut row, v);
                row
            })
            .collect();
        let target = bits::full(self.n);
        for size in 1..=max_size.min(self.n) {
            let mut stack = vec![vec![0u64; self.words]; size + 1];
            let mut chosen = Vec::with_capacity(size);
            if cover_search(&closed, &target, size, 0, &mut stack, &mut chosen) {
                return Some(chosen);
            }
        }
        None
    }
}

fn cover_search(
    closed: &[Vec<u64>],
    target: &[u64],
    size: usize,
    start: usize,
    stack: &mut [Vec<u64>],
    chosen: &mut Vec<usize>,
) -> bool {
    let depth = chosen.len();
    if depth == size {
        return stack[depth] == target;
    }
    let n = closed.len();
    for v in start..=n - (size - depth) {
        let (lo, hi) = stack.split_at_mut(depth + 1);
        for ((h, l), c) in hi[0].iter_mut().zip(&lo[depth]).zip(&closed[v]) {
            *h = l | c;
        }
        chosen.push(v);
        if cover_search(closed, target, size, v + 1, stack, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Clone, Copy)]
pub(crate) enum Side {
    Out,
    In,
}

impl Side {
    #[inline]
    fn row(self, g: &Digraph, v: usize) -> &[u64] {
        match self {
            Side::Out => g.out_row(v),
            Side::In => g.in_row(v),
        }
    }
}

/// Smallest (then lexicographically first) `S` within `universe`,
/// `1 <= |S| <= d`, whose common `side`-neighbourhood misses `universe`.
pub(crate) fn first_failing_set(g: &Digraph, universe: &[u64], d: usize, side: Side) -> Option<Vec<usize>> {
    let verts: Vec<usize> = bits::ones(universe).collect();
    for size in 1..=d.min(verts.len()) {
        let mut stack = vec![universe.to_vec(); size + 1];
        let mut chosen = Vec::with_capacity(size);
        if failing_search(g, &verts, size, 0, side, &mut stack, &mut chosen) {
            return Some(chosen);
        }
    }
    None
}

fn failing_search(
    g: &Digraph,
    verts: &[usize],
    size: usize,
    start: usize,
    side: Side,
    stack: &mut [Vec<u64>],
    chosen: &mut Vec<usize>,
) -> bool {
    let depth = chosen.len();
    for i in start..=verts.len() - (size - depth) {
        let v = verts[i];
        let (lo, hi) = stack.split_at_mut(depth + 1);
        hi[0].copy_from_slice(&lo[depth]);
        let nonempty = bits::and_assign(&mut hi[0], side.row(g, v));
        chosen.push(v);
        if depth + 1 == size {
            if !nonempty {
                return true;
            }
        } else if failing_search(g, verts, size, i + 1, side, stack, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Single-word variant for `n <= 64`: whether every `S` within `within`, `1 <= |S| <= k`, has a common
/// row-neighbour inside `within`.
pub(crate) fn k_dominating_within(rows: &[u64], within: u64, k: usize) -> bool {
    // every singleton needs a neighbour before any pair is worth trying
    if bits::mask_ones(within).any(|v| rows[v] & within == 0) {
        return false;
    }
    k < 2 || extensions_dominated(rows, within, within, k)
}

/// Every set drawn from `cands` of size at most `left`, joined to a prefix
/// with common neighbourhood `inter`, keeps a non-empty intersection.
fn extensions_dominated(rows: &[u64], cands: u64, inter: u64, left: usize) -> bool {
    let mut rest = cands;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let next = inter & rows[v];
        if next == 0 {
            return false;
        }
        if left > 1 && !extensions_dominated(rows, rest, next, left - 1) {
            return false;
        }
    }
    true
}

/// Outcome of a domination check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominationCertificate {
    Holds,
    /// A set of at most `d` vertices with no common out-neighbour.
    Fails(Vec<usize>),
}

impl DominationCertificate {
    pub fn holds(&self) -> bool {
        matches!(self, DominationCertificate::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            DominationCertificate::Holds => None,
            DominationCertificate::Fails(w) => Some(w),
        }
    }
}

/// An induced subgraph with its map back to the parent's indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Digraph,
    /// `map[i]` is the parent index of vertex `i`.
    pub map: Vec<usize>,
}

impl Induced {
    pub fn lift(&self, vs: &[usize]) -> Vec<usize> {
        vs.iter().map(|&v| self.map[v]).collect()
    }
}

/// A loopless digraph with exactly one arc between any two distinct vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tournament(Digraph);

impl Tournament {
    pub fn from_digraph(g: Digraph) -> Result<Self> {
        for u in 0..g.n() {
            if g.has_loop(u) {
                return Err(invalid(format!("tournament has a loop at {u}")));
            }
            for v in u + 1..g.n() {
                if g.has_arc(u, v) == g.has_arc(v, u) {
                    return Err(invalid(format!(
                        "pair {{{u},{v}}} must carry exactly one arc in a tournament"
                    )));
                }
            }
        }
        Ok(Tournament(g))
    }

    /// Orients each pair `u < v` as `u -> v` iff `beats(u, v)`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Digraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if beats(u, v) {
                    g.insert_arc(u, v);
                } else {
                    g.insert_arc(v, u);
                }
            }
        }
        Tournament(g)
    }

    /// `u -> v` whenever `u < v`.
    pub fn transitive(n: usize) -> Self {
        Tournament::from_fn(n, |_, _| true)
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn reverse(&self) -> Tournament {
        Tournament(self.0.reverse())
    }

    /// The tournament plus a loop at every vertex.
    pub fn star(&self) -> Digraph {
        let mut g = self.0.clone();
        for u in 0..g.n() {
            g.insert_arc(u, u);
        }
        g
    }

    /// Induced subtournament; the map is in increasing original order.
    pub fn induced(&self, u: &[usize]) -> Result<(Tournament, Vec<usize>)> {
        let Induced { graph, map } = self.0.induced(u)?;
        Ok((Tournament(graph), map))
    }
}

impl Deref for Tournament {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.0
    }
}

impl TryFrom<Digraph> for Tournament {
    type Error = Error;

    fn try_from(g: Digraph) -> Result<Self> {
        Tournament::from_digraph(g)
    }
}
