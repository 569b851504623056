//! Brute-force references over plain boolean matrices. Nothing here touches
//! the library's bitsets or search code.
#![allow(dead_code)]

use domcover::{Color, ColoredCompleteDigraph, Digraph};

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Digraph) -> Matrix {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_arc(u, v)).collect()).collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let n = m.len();
    (0..n).map(|u| (0..n).map(|v| m[v][u]).collect()).collect()
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn common_out(m: &Matrix, s: &[usize]) -> Vec<usize> {
    (0..m.len()).filter(|&v| s.iter().all(|&u| m[u][v])).collect()
}

/// First set (by size, then lexicographic) of size `1..=d` without a common
/// out-neighbour; `None` when the matrix is d-dominating.
pub fn first_failure(m: &Matrix, d: usize) -> Option<Vec<usize>> {
    (1..=d.min(m.len()))
        .flat_map(|k| subsets_of_size(m.len(), k))
        .find(|s| common_out(m, s).is_empty())
}

pub fn dominating(m: &Matrix, d: usize) -> bool {
    first_failure(m, d).is_none()
}

pub fn induced(m: &Matrix, vs: &[usize]) -> Matrix {
    vs.iter().map(|&u| vs.iter().map(|&v| m[u][v]).collect()).collect()
}

/// Whether `s` is in-dominating: every vertex outside `s` has an arc into `s`.
pub fn in_dominating(m: &Matrix, s: &[usize]) -> bool {
    (0..m.len()).all(|v| s.contains(&v) || s.iter().any(|&u| m[v][u]))
}

pub fn min_in_dominating_size(m: &Matrix) -> usize {
    (1..=m.len())
        .find(|&k| subsets_of_size(m.len(), k).iter().any(|s| in_dominating(m, s)))
        .unwrap_or(0)
}

pub fn is_tournament(m: &Matrix) -> bool {
    let n = m.len();
    (0..n).all(|u| !m[u][u] && (0..n).all(|v| u == v || m[u][v] != m[v][u]))
}

/// Paley adjacency from an explicit table of squares.
pub fn paley_matrix(p: usize) -> Matrix {
    let squares: Vec<usize> = (1..p).map(|x| x * x % p).collect();
    (0..p)
        .map(|a| (0..p).map(|b| a != b && squares.contains(&((a + p - b) % p))).collect())
        .collect()
}

pub fn clique_number(adj: &Matrix) -> usize {
    let n = adj.len();
    (0..=n)
        .rev()
        .find(|&k| {
            subsets_of_size(n, k)
                .iter()
                .any(|s| s.iter().all(|&a| s.iter().all(|&b| a == b || adj[a][b])))
        })
        .unwrap_or(0)
}

pub fn mono_matrix(k: &ColoredCompleteDigraph, c: Color) -> Matrix {
    (0..k.n()).map(|u| (0..k.n()).map(|v| k.color(u, v) == c).collect()).collect()
}

/// All (color, vertex set) pairs whose induced monochromatic subgraph is
/// d-dominating. Exponential; keep `n` small.
pub fn feasible(k: &ColoredCompleteDigraph, d: usize) -> Vec<(Color, Vec<usize>)> {
    let n = k.n();
    let mut out = Vec::new();
    for c in 0..k.palette().len() {
        let c = Color(c as u8);
        let m = mono_matrix(k, c);
        for size in 1..=n {
            for s in subsets_of_size(n, size) {
                if dominating(&induced(&m, &s), d) {
                    out.push((c, s));
                }
            }
        }
    }
    out
}

/// Keeps sets not strictly contained in another feasible set of the same list.
pub fn maximal(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in sets {
        let dominated = sets
            .iter()
            .any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v)));
        if !dominated && !out.contains(s) {
            out.push(s.clone());
        }
    }
    out
}

/// Smallest number of `sets` whose union is `0..n` by trying every
/// combination of increasing size. `None` if no cover exists.
pub fn min_set_cover(n: usize, sets: &[Vec<usize>]) -> Option<usize> {
    if n == 0 {
        return Some(0);
    }
    for size in 1..=sets.len() {
        for idx in subsets_of_size(sets.len(), size) {
            let mut hit = vec![false; n];
            for &i in &idx {
                for &v in &sets[i] {
                    hit[v] = true;
                }
            }
            if hit.iter().all(|&h| h) {
                return Some(size);
            }
        }
    }
    None
}

pub fn min_cover(k: &ColoredCompleteDigraph, d: usize) -> usize {
    let sets: Vec<Vec<usize>> = feasible(k, d).into_iter().map(|(_, s)| s).collect();
    min_set_cover(k.n(), &maximal(&sets)).expect("loops make singletons feasible in two colors")
}

/// Every labeled tournament on `n` vertices, as matrices.
pub fn all_tournaments(n: usize) -> Vec<Matrix> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|code| {
            let mut m = vec![vec![false; n]; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if code >> i & 1 == 1 {
                    m[u][v] = true;
                } else {
                    m[v][u] = true;
                }
            }
            m
        })
        .collect()
}

pub fn digraph(m: &Matrix) -> Digraph {
    Digraph::from_fn(m.len(), |u, v| m[u][v])
}
