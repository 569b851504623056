//! Exhaustive ground truth for small instances: exact minimum monochromatic
//! covers, the lower-bound example generators and a block-confinement check.
//!
//! Everything here enumerates all `2^n` vertex subsets with single-word
//! masks, independently of the constructive cover engine.

use crate::bits;
use crate::colored::{Color, ColoredCompleteDigraph};
use crate::cover::{CoverCertificate, CoverPart};
use crate::digraph::{k_dominating_within, Digraph};
use crate::error::{invalid, Error, Result};

/// Hard vertex-count guard for the `2^n` scans in this module.
pub const ORACLE_LIMIT: usize = 20;

fn check_limit(what: &'static str, n: usize) -> Result<()> {
    if n > ORACLE_LIMIT {
        return Err(Error::Capacity {
            what,
            n,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasiblePart {
    pub color: char,
    pub vertices: Vec<usize>,
}

/// Inclusion-maximal vertex sets whose monochromatic induced subgraph is
/// d-dominating, grouped by palette order and then sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibleFamily {
    pub d: usize,
    pub parts: Vec<FeasiblePart>,
}

/// Masks `U` (non-empty) with `rows` k-dominating within `U` and no proper
/// feasible superset.
fn maximal_feasible(rows: &[u64], k: usize) -> Vec<u64> {
    let n = rows.len();
    let size = 1usize << n;
    let feasible: Vec<bool> = (0..size).map(|m| m != 0 && k_dominating_within(rows, m as u64, k)).collect();
    // below[m]: some proper superset of m is feasible
    let mut below = vec![false; size];
    for m in (0..size).rev() {
        let mut free = !m & (size - 1);
        while free != 0 {
            let bit = free & free.wrapping_neg();
            free &= free - 1;
            let up = m | bit;
            if feasible[up] || below[up] {
                below[m] = true;
                break;
            }
        }
    }
    let mut out: Vec<u64> = (1..size).filter(|&m| feasible[m] && !below[m]).map(|m| m as u64).collect();
    out.sort_by_key(|&m| bits::mask_ones(m).collect::<Vec<_>>());
    out
}

pub fn feasible_parts(k: &ColoredCompleteDigraph, d: usize) -> Result<FeasibleFamily> {
    if d == 0 {
        return Err(invalid("d must be at least 1"));
    }
    check_limit("feasible-part enumeration", k.n())?;
    let mut parts = Vec::new();
    for c in 0..k.palette().len() {
        let color = Color(c as u8);
        let rows = k.mono_subgraph(color)?.out_masks().expect("n <= 20");
        parts.extend(maximal_feasible(&rows, d).into_iter().map(|m| FeasiblePart {
            color: k.label(color),
            vertices: bits::mask_ones(m).collect(),
        }));
    }
    Ok(FeasibleFamily { d, parts })
}

/// Exact set cover of `0..n` by `sets`. Returns the lexicographically least
/// sorted index sequence among minimum covers, or `None` if some vertex lies
/// in no set.
fn exact_cover(n: usize, sets: &[u64]) -> Option<Vec<usize>> {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let union = sets.iter().fold(0, |a, &s| a | s);
    if union & full != full {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let solver = Solver::new(n, sets);
    let upper = solver.greedy(full);
    let lower = n.div_ceil(sets.iter().map(|s| s.count_ones() as usize).max().unwrap_or(1));
    let optimum = (lower..upper).find(|&k| solver.coverable(full, k, 0)).unwrap_or(upper);

    let mut chosen = Vec::with_capacity(optimum);
    let mut uncovered = full;
    let mut start = 0;
    while chosen.len() < optimum {
        let left = optimum - chosen.len() - 1;
        let i = (start..sets.len())
            .find(|&i| sets[i] & uncovered != 0 && solver.coverable(uncovered & !sets[i], left, i + 1))
            .expect("an optimum exists with this prefix");
        chosen.push(i);
        uncovered &= !sets[i];
        start = i + 1;
    }
    Some(chosen)
}

struct Solver<'a> {
    sets: &'a [u64],
    /// For each vertex, the indices of sets containing it.
    containing: Vec<Vec<usize>>,
}

impl<'a> Solver<'a> {
    fn new(n: usize, sets: &'a [u64]) -> Self {
        let containing = (0..n)
            .map(|v| (0..sets.len()).filter(|&i| sets[i] >> v & 1 == 1).collect())
            .collect();
        Solver { sets, containing }
    }

    fn greedy(&self, full: u64) -> usize {
        let mut uncovered = full;
        let mut used = 0;
        while uncovered != 0 {
            let best = self.sets.iter().max_by_key(|&&s| (s & uncovered).count_ones()).expect("feasible");
            uncovered &= !best;
            used += 1;
        }
        used
    }

    /// Whether `uncovered` can be covered by `budget` sets of index `>= min`.
    fn coverable(&self, uncovered: u64, budget: usize, min: usize) -> bool {
        if uncovered == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let best = self.sets[min.min(self.sets.len())..]
            .iter()
            .map(|&s| (s & uncovered).count_ones() as usize)
            .max()
            .unwrap_or(0);
        if uncovered.count_ones() as usize > budget * best {
            return false;
        }
        let v = uncovered.trailing_zeros() as usize;
        self.containing[v]
            .iter()
            .filter(|&&i| i >= min)
            .any(|&i| self.coverable(uncovered & !self.sets[i], budget - 1, min))
    }
}

/// An optimal monochromatic cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCover {
    pub parts: Vec<FeasiblePart>,
}

impl MinCover {
    pub fn size(&self) -> usize {
        self.parts.len()
    }

    pub fn to_certificate(&self, n: usize, d: usize) -> CoverCertificate {
        CoverCertificate {
            d,
            n,
            parts: self
                .parts
                .iter()
                .map(|p| CoverPart {
                    color: p.color,
                    vertices: p.vertices.clone(),
                    provenance: None,
                })
                .collect(),
        }
    }
}

/// The minimum number of monochromatic d-dominating subgraphs covering `k`.
pub fn min_cover_size(k: &ColoredCompleteDigraph, d: usize) -> Result<MinCover> {
    let family = feasible_parts(k, d)?;
    let sets: Vec<u64> = family.parts.iter().map(|p| bits::mask_of(&p.vertices)).collect();
    let chosen = exact_cover(k.n(), &sets).ok_or_else(|| Error::Internal("loop singletons always cover".into()))?;
    Ok(MinCover {
        parts: chosen.into_iter().map(|i| family.parts[i].clone()).collect(),
    })
}

/// The fewest vertex sets, each inducing a k-dominating subgraph of `g`,
/// whose union is all of `g`. `None` when some vertex lies in no such set.
pub fn min_cover_dominating(g: &Digraph, k: usize) -> Result<Option<Vec<Vec<usize>>>> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    check_limit("dominating-subgraph cover", g.n())?;
    let rows = g.out_masks().expect("n <= 20");
    let family = maximal_feasible(&rows, k);
    Ok(exact_cover(g.n(), &family).map(|chosen| chosen.into_iter().map(|i| bits::mask_ones(family[i]).collect()).collect()))
}

/// A generated lower-bound instance with its block structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleCim {
    pub graph: ColoredCompleteDigraph,
    /// `R_1..R_d` followed by `B_1..B_d`, vertices assigned consecutively.
    pub blocks: Vec<Vec<usize>>,
}

/// Partition into red blocks `R_1..R_d` and blue blocks `B_1..B_d` of the
/// given sizes. Inside a block everything (loops too) takes the block color;
/// `R -> B` is red and `B -> R` blue; distinct red blocks are joined in
/// blue, distinct blue blocks in red.
pub fn generate_example_cim(d: usize, sizes: &[usize]) -> Result<ExampleCim> {
    if d == 0 || sizes.len() != 2 * d {
        return Err(invalid(format!("need exactly 2d = {} block sizes, got {}", 2 * d, sizes.len())));
    }
    if sizes.contains(&0) {
        return Err(invalid("block sizes must be positive"));
    }
    let mut owner = Vec::new();
    let mut blocks = Vec::with_capacity(sizes.len());
    for (b, &s) in sizes.iter().enumerate() {
        blocks.push((owner.len()..owner.len() + s).collect());
        owner.extend(std::iter::repeat_n(b, s));
    }
    let is_red = |b: usize| b < d;
    let graph = ColoredCompleteDigraph::two_colored(owner.len(), |u, v| {
        let (a, b) = (owner[u], owner[v]);
        let red = match (is_red(a), is_red(b)) {
            _ if a == b => is_red(a),
            (true, false) => true,
            (false, true) => false,
            (true, true) => false,
            (false, false) => true,
        };
        if red {
            Color::RED
        } else {
            Color::BLUE
        }
    })?;
    Ok(ExampleCim { graph, blocks })
}

/// Green loops, red arcs upward (`i < j`), blue arcs downward.
pub fn generate_three_color(n: usize) -> Result<ColoredCompleteDigraph> {
    if n == 0 {
        return Err(invalid("three-color example needs n >= 1"));
    }
    ColoredCompleteDigraph::from_fn(n, vec!['R', 'B', 'G'], |u, v| match u.cmp(&v) {
        std::cmp::Ordering::Equal => Color::GREEN,
        std::cmp::Ordering::Less => Color::RED,
        std::cmp::Ordering::Greater => Color::BLUE,
    })
}

/// `None` when every maximal feasible part lies inside one block, otherwise
/// the first straddling part.
pub fn verify_parts_confined(k: &ColoredCompleteDigraph, blocks: &[Vec<usize>], d: usize) -> Result<Option<FeasiblePart>> {
    check_limit("confinement check", k.n())?;
    let mut owner = vec![usize::MAX; k.n()];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            if v >= k.n() || owner[v] != usize::MAX {
                return Err(invalid(format!("blocks do not partition the vertex set (vertex {v})")));
            }
            owner[v] = b;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(invalid(format!("vertex {v} is in no block")));
    }
    Ok(feasible_parts(k, d)?
        .parts
        .into_iter()
        .find(|p| p.vertices.iter().any(|&v| owner[v] != owner[p.vertices[0]])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paradox::{coloring_from_tournament, paley};

    fn part(color: char, vertices: &[usize]) -> FeasiblePart {
        FeasiblePart {
            color,
            vertices: vertices.to_vec(),
        }
    }

    #[test]
    fn all_red_family() {
        let k = ColoredCompleteDigraph::monochromatic(4, Color::RED);
        assert_eq!(feasible_parts(&k, 2).unwrap().parts, vec![part('R', &[0, 1, 2, 3])]);
        assert_eq!(min_cover_size(&k, 2).unwrap().size(), 1);
    }

    #[test]
    fn three_color_family() {
        let k = generate_three_color(3).unwrap();
        assert_eq!(
            feasible_parts(&k, 2).unwrap().parts,
            vec![part('G', &[0]), part('G', &[1]), part('G', &[2])]
        );
        assert_eq!(min_cover_size(&generate_three_color(5).unwrap(), 2).unwrap().size(), 5);
        assert_eq!(k.color(0, 1), Color::RED);
        assert_eq!(k.color(2, 1), Color::BLUE);
        assert!(generate_three_color(0).is_err());
    }

    #[test]
    fn example_cim_structure() {
        let ex = generate_example_cim(2, &[1, 1, 1, 1]).unwrap();
        let k = &ex.graph;
        assert_eq!(k.n(), 4);
        assert_eq!((0..4).map(|v| k.label(k.color(v, v))).collect::<String>(), "RRBB");
        assert_eq!(k.loop_partition(), vec![vec![0, 1], vec![2, 3]]);
        let bi = k.bidirectional_graph(&[0, 1], Color::BLUE).unwrap();
        assert_eq!(bi.find_clique(2), Some(vec![0, 1]));
        assert_eq!(
            feasible_parts(k, 2).unwrap().parts,
            vec![part('R', &[0]), part('R', &[1]), part('B', &[2]), part('B', &[3])]
        );
        assert_eq!(min_cover_size(k, 2).unwrap().size(), 4);
        assert_eq!(verify_parts_confined(k, &ex.blocks, 2).unwrap(), None);

        let ex = generate_example_cim(2, &[2, 1, 1, 1]).unwrap();
        assert_eq!(ex.graph.color(0, 1), Color::RED);
        assert_eq!(ex.graph.color(1, 0), Color::RED);
        assert_eq!(ex.blocks[0], vec![0, 1]);

        assert!(generate_example_cim(2, &[1, 1, 1]).is_err());
        assert!(generate_example_cim(2, &[1, 0, 1, 1]).is_err());
    }

    #[test]
    fn confinement_fails_on_all_red() {
        let k = ColoredCompleteDigraph::monochromatic(4, Color::RED);
        let hit = verify_parts_confined(&k, &[vec![0, 1], vec![2, 3]], 2).unwrap();
        assert_eq!(hit, Some(part('R', &[0, 1, 2, 3])));
        assert!(verify_parts_confined(&k, &[vec![0, 1]], 2).is_err());
        assert!(verify_parts_confined(&k, &[vec![0, 1, 2, 3], vec![1]], 2).is_err());
    }

    #[test]
    fn paley_coloring_needs_three_parts() {
        let k = coloring_from_tournament(&paley(7).unwrap());
        let best = min_cover_size(&k, 3).unwrap();
        assert_eq!(best.size(), 3);
        assert!(best.parts.iter().all(|p| p.color == 'R'));
    }

    #[test]
    fn dominating_covers() {
        let star = paley(7).unwrap().reverse().star();
        assert_eq!(min_cover_dominating(&star, 3).unwrap().unwrap().len(), 3);
        let full = Digraph::complete(5, true);
        assert_eq!(min_cover_dominating(&full, 3).unwrap(), Some(vec![vec![0, 1, 2, 3, 4]]));
        assert_eq!(min_cover_dominating(&Digraph::complete(1, true), 1).unwrap(), Some(vec![vec![0]]));
        assert_eq!(min_cover_dominating(&Digraph::new(2), 1).unwrap(), None);
        assert!(min_cover_dominating(&Digraph::new(21), 1).is_err());
    }

    #[test]
    fn exact_cover_is_lexicographically_least() {
        // {0,1},{2},{0},{1,2}: optimum 2 via (0,1) and (0,3); (0,1) wins
        let sets = [0b011, 0b100, 0b001, 0b110];
        assert_eq!(exact_cover(3, &sets), Some(vec![0, 1]));
        assert_eq!(exact_cover(3, &[0b011]), None);
        assert_eq!(exact_cover(0, &[]), Some(vec![]));
    }

    #[test]
    fn guard() {
        let k = ColoredCompleteDigraph::monochromatic(21, Color::RED);
        assert!(matches!(feasible_parts(&k, 2), Err(Error::Capacity { .. })));
    }
}
