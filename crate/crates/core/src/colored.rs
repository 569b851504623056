//! Complete digraphs (loops included) with a color on every arc, and the
//! undirected "both arcs share a color" graphs used to dispatch the cover
//! construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::digraph::Digraph;
use crate::error::{invalid, Error, Result};

/// Largest vertex count accepted by [`UndirectedGraph::clique_number`].
pub const CLIQUE_NUMBER_LIMIT: usize = 64;

/// An index into a palette.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub u8);

impl Color {
    pub const RED: Color = Color(0);
    pub const BLUE: Color = Color(1);
    pub const GREEN: Color = Color(2);

    /// The other color of a two-color palette.
    pub fn other(self) -> Color {
        Color(1 - self.0.min(1))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Labels used when a palette is not given explicitly.
pub const DEFAULT_LABELS: [char; 3] = ['R', 'B', 'G'];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredCompleteDigraph {
    n: usize,
    palette: Vec<char>,
    /// Row-major `n * n`, diagonal holds the loop colors.
    colors: Vec<Color>,
}

impl ColoredCompleteDigraph {
    pub fn from_fn(n: usize, palette: Vec<char>, mut color: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        validate_palette(&palette)?;
        let mut colors = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                let c = color(u, v);
                if c.index() >= palette.len() {
                    return Err(invalid(format!("color index {} outside palette of size {}", c.0, palette.len())));
                }
                colors.push(c);
            }
        }
        Ok(ColoredCompleteDigraph { n, palette, colors })
    }

    /// Two colors `R`, `B`.
    pub fn two_colored(n: usize, color: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        Self::from_fn(n, DEFAULT_LABELS[..2].to_vec(), color)
    }

    pub fn monochromatic(n: usize, c: Color) -> Self {
        Self::two_colored(n, |_, _| c).expect("red and blue are in the default palette")
    }

    /// Each arc (loops included) is red with probability `red_prob`, drawn
    /// from a ChaCha8 stream seeded with `seed`.
    pub fn random(n: usize, red_prob: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::two_colored(n, |_, _| {
            if rng.random_bool(red_prob) {
                Color::RED
            } else {
                Color::BLUE
            }
        })
        .expect("two colors")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn palette(&self) -> &[char] {
        &self.palette
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        self.colors[u * self.n + v]
    }

    pub fn label(&self, c: Color) -> char {
        self.palette[c.index()]
    }

    pub fn color_of_label(&self, label: char) -> Result<Color> {
        self.palette
            .iter()
            .position(|&l| l == label)
            .map(|i| Color(i as u8))
            .ok_or_else(|| invalid(format!("color {label:?} not in palette {:?}", self.palette)))
    }

    fn check_color(&self, c: Color) -> Result<()> {
        if c.index() < self.palette.len() {
            Ok(())
        } else {
            Err(invalid(format!("unknown color index {}", c.0)))
        }
    }

    pub(crate) fn require_two_colors(&self) -> Result<()> {
        if self.palette.len() == 2 {
            Ok(())
        } else {
            Err(invalid(format!(
                "covering needs a 2-color palette, got {} colors",
                self.palette.len()
            )))
        }
    }

    /// The spanning digraph of all arcs colored `c`.
    pub fn mono_subgraph(&self, c: Color) -> Result<Digraph> {
        self.check_color(c)?;
        Ok(Digraph::from_fn(self.n, |u, v| self.color(u, v) == c))
    }

    /// Arcs of color `c` among the vertices of `u`, reindexed in increasing
    /// order. `u` must be sorted, duplicate-free and in range.
    pub(crate) fn mono_induced(&self, c: Color, u: &[usize]) -> Digraph {
        Digraph::from_fn(u.len(), |a, b| self.color(u[a], u[b]) == c)
    }

    /// Vertex sets by loop color, indexed by palette position.
    pub fn loop_partition(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.palette.len()];
        for v in 0..self.n {
            parts[self.color(v, v).index()].push(v);
        }
        parts
    }

    /// Undirected graph on `u` (reindexed in increasing order) with an edge
    /// `{a, b}` iff both `(a, b)` and `(b, a)` have color `c`. Loops are ignored.
    pub fn bidirectional_graph(&self, u: &[usize], c: Color) -> Result<UndirectedGraph> {
        self.check_color(c)?;
        let u = self.sorted_subset(u)?;
        Ok(UndirectedGraph::from_fn(u.len(), |a, b| {
            self.color(u[a], u[b]) == c && self.color(u[b], u[a]) == c
        }))
    }

    pub(crate) fn sorted_subset(&self, u: &[usize]) -> Result<Vec<usize>> {
        if let Some(v) = u.iter().find(|&&v| v >= self.n) {
            return Err(invalid(format!("vertex {v} out of range for n = {}", self.n)));
        }
        let mut u = u.to_vec();
        u.sort_unstable();
        u.dedup();
        Ok(u)
    }
}

fn validate_palette(palette: &[char]) -> Result<()> {
    if !(2..=3).contains(&palette.len()) {
        return Err(invalid(format!("palette must have 2 or 3 colors, got {}", palette.len())));
    }
    for (i, a) in palette.iter().enumerate() {
        if a.is_whitespace() || palette[..i].contains(a) {
            return Err(invalid(format!("bad palette label {a:?}")));
        }
    }
    Ok(())
}

/// Simple undirected graph on `0..n` with symmetric adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        let words = bits::words_for(n);
        UndirectedGraph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// `edge` is consulted once per pair `a < b`.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = UndirectedGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if edge(a, b) {
                    g.insert_edge(a, b);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = UndirectedGraph::new(n);
        for (a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(invalid(format!("bad edge {{{a},{b}}} for n = {n}")));
            }
            g.insert_edge(a, b);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        UndirectedGraph::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Self {
        UndirectedGraph::from_fn(n, |a, b| b == a + 1 || (a == 0 && b == n - 1 && n > 2))
    }

    fn insert_edge(&mut self, a: usize, b: usize) {
        let w = self.words;
        bits::set(&mut self.adj[a * w..(a + 1) * w], b);
        bits::set(&mut self.adj[b * w..(b + 1) * w], a);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.adj[a * self.words..(a + 1) * self.words]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        bits::get(self.row(a), b)
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.adj) / 2
    }

    /// The lexicographically smallest clique of exactly `k` vertices.
    ///
    /// Depth-first in increasing vertex order, pruned by a greedy coloring
    /// of the remaining candidates.
    pub fn find_clique(&self, k: usize) -> Option<Vec<usize>> {
        if k == 0 || k > self.n {
            return None;
        }
        let mut chosen = Vec::with_capacity(k);
        self.extend_clique(&bits::full(self.n), k, &mut chosen).then_some(chosen)
    }

    fn extend_clique(&self, cands: &[u64], k: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return true;
        }
        if chosen.len() + self.greedy_color_bound(cands) < k {
            return false;
        }
        let mut rest = cands.to_vec();
        for v in bits::ones(cands) {
            bits::clear(&mut rest, v);
            if chosen.len() + 1 + bits::count(&rest) < k {
                break;
            }
            let mut next = rest.clone();
            bits::and_assign(&mut next, self.row(v));
            chosen.push(v);
            if self.extend_clique(&next, k, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Number of color classes in a greedy coloring of `cands`; an upper
    /// bound on the clique number of the induced subgraph.
    fn greedy_color_bound(&self, cands: &[u64]) -> usize {
        let mut uncolored = cands.to_vec();
        let mut classes = 0;
        while !bits::is_empty(&uncolored) {
            classes += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = bits::ones(&avail).next() {
                bits::clear(&mut uncolored, v);
                bits::clear(&mut avail, v);
                for (a, r) in avail.iter_mut().zip(self.row(v)) {
                    *a &= !r;
                }
            }
        }
        classes
    }

    /// Size of a largest clique; 0 on the empty graph.
    pub fn clique_number(&self) -> Result<usize> {
        if self.n > CLIQUE_NUMBER_LIMIT {
            return Err(Error::Capacity {
                what: "clique number",
                n: self.n,
                limit: CLIQUE_NUMBER_LIMIT,
            });
        }
        let mut best = 0;
        while self.find_clique(best + 1).is_some() {
            best += 1;
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mono_subgraphs_of_all_red() {
        let k = ColoredCompleteDigraph::monochromatic(4, Color::RED);
        assert_eq!(k.mono_subgraph(Color::RED).unwrap(), Digraph::complete(4, true));
        assert_eq!(k.mono_subgraph(Color::BLUE).unwrap().arc_count(), 0);
        assert!(k.mono_subgraph(Color::GREEN).is_err());
        assert_eq!(k.loop_partition(), vec![vec![0, 1, 2, 3], vec![]]);
    }

    #[test]
    fn palette_validation() {
        assert!(ColoredCompleteDigraph::from_fn(1, vec!['R'], |_, _| Color::RED).is_err());
        assert!(ColoredCompleteDigraph::from_fn(1, vec!['R', 'R'], |_, _| Color::RED).is_err());
        assert!(ColoredCompleteDigraph::from_fn(1, vec!['R', 'B'], |_, _| Color::GREEN).is_err());
        let k = ColoredCompleteDigraph::monochromatic(2, Color::BLUE);
        assert_eq!(k.color_of_label('B').unwrap(), Color::BLUE);
        assert!(k.color_of_label('G').is_err());
    }

    #[test]
    fn half_graph_has_no_bidirectional_red() {
        let k = ColoredCompleteDigraph::two_colored(5, |u, v| if u <= v { Color::RED } else { Color::BLUE }).unwrap();
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(k.bidirectional_graph(&all, Color::RED).unwrap().edge_count(), 0);
        let blue = ColoredCompleteDigraph::monochromatic(4, Color::BLUE);
        assert_eq!(blue.bidirectional_graph(&[0, 1, 2, 3], Color::BLUE).unwrap(), UndirectedGraph::complete(4));
    }

    #[test]
    fn cliques() {
        assert_eq!(UndirectedGraph::complete(4).find_clique(3), Some(vec![0, 1, 2]));
        assert_eq!(UndirectedGraph::new(4).find_clique(2), None);
        assert_eq!(UndirectedGraph::new(4).find_clique(1), Some(vec![0]));
        assert_eq!(UndirectedGraph::new(5).clique_number().unwrap(), 1);
        assert_eq!(UndirectedGraph::new(0).clique_number().unwrap(), 0);
        assert_eq!(UndirectedGraph::complete(6).clique_number().unwrap(), 6);
        assert_eq!(UndirectedGraph::cycle(5).clique_number().unwrap(), 2);
        assert!(UndirectedGraph::new(65).clique_number().is_err());
        assert_eq!(UndirectedGraph::new(65).find_clique(1), Some(vec![0]));
    }

    #[test]
    fn lexicographically_smallest_clique() {
        // triangles {1,2,3} and {0,4,5}; the latter sorts first
        let g = UndirectedGraph::from_edges(6, [(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(g.find_clique(3), Some(vec![0, 4, 5]));
    }
}
