//! Covers of 2-colored complete digraphs by monochromatic d-dominating
//! subgraphs.
//!
//! The construction splits the vertices by loop color into `R` (red loops)
//! and `B` (blue loops). If the graph of bidirectionally blue pairs inside `R`
//! has a clique of size `d + 1`, that clique anchors a cover with `d` red
//! parts and one blue part ([`cover_with_clique`]); symmetrically for `B`.
//! Otherwise each side is covered on its own by [`cover_uniform_loops`],
//! whose parts all share the loop color and whose recursion depth is bounded
//! by the clique number of the opposite color.
//!
//! A vertex set `U` can be covered by a single color-`c` d-dominating
//! subgraph exactly when the full color-`c` subgraph induced on `U` is
//! d-dominating, so every part is stored as a `(color, vertex set)` pair.

use std::fmt;

use crate::colored::{Color, ColoredCompleteDigraph};
use crate::digraph::DominationCertificate;
use crate::error::{invalid, Error, Result};

/// Which construction step emitted a part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// The whole loop class was already d-dominating.
    Whole,
    /// In-neighbourhood `W_i` of a witness or clique vertex.
    WPart,
    /// The opposite-color part anchored by a `(d+1)`-clique.
    L2Blue,
    /// A recursive call whose vertex set was already d-dominating.
    RecursiveBase,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Whole => "whole",
            Provenance::WPart => "W-part",
            Provenance::L2Blue => "L2-blue",
            Provenance::RecursiveBase => "recursive-base",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        [Provenance::Whole, Provenance::WPart, Provenance::L2Blue, Provenance::RecursiveBase]
            .into_iter()
            .find(|p| p.tag() == tag)
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPart {
    /// Palette label.
    pub color: char,
    /// Sorted ascending.
    pub vertices: Vec<usize>,
    pub provenance: Option<Provenance>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    pub d: usize,
    pub n: usize,
    pub parts: Vec<CoverPart>,
}

/// The part count guaranteed by [`cover`]: 8 for `d = 2`, otherwise
/// `2 * (d + d^2 + ... + d^d)`.
pub fn bound(d: usize) -> Result<u64> {
    if d < 2 {
        return Err(invalid("bound is defined for d >= 2"));
    }
    if d == 2 {
        return Ok(8);
    }
    let d64 = d as u64;
    let overflow = || invalid(format!("bound for d = {d} overflows u64"));
    let mut pow = 1u64;
    let mut sum = 0u64;
    for _ in 0..d {
        pow = pow.checked_mul(d64).ok_or_else(overflow)?;
        sum = sum.checked_add(pow).ok_or_else(overflow)?;
    }
    sum.checked_mul(2).ok_or_else(overflow)
}

/// Covers `k` by at most [`bound`]`(d)` monochromatic d-dominating subgraphs.
///
/// Requires a 2-color palette and `d >= 2`; for `d = 1` use [`loop_cover`].
pub fn cover(k: &ColoredCompleteDigraph, d: usize) -> Result<CoverCertificate> {
    k.require_two_colors()?;
    if d < 2 {
        return Err(invalid("cover needs d >= 2; the loop classes already answer d = 1"));
    }
    let loops = k.loop_partition();
    let parts = match clique_anchor(k, &loops, d)? {
        Some((x, base)) => cover_with_clique(k, &x, d, base)?,
        None => {
            let mut parts = Vec::new();
            for base in [Color::RED, Color::BLUE] {
                let side = &loops[base.index()];
                if !side.is_empty() {
                    parts.extend(cover_uniform_loops(k, side, d, base, 0)?);
                }
            }
            parts
        }
    };
    Ok(CoverCertificate {
        d,
        n: k.n(),
        parts: drop_dominated_parts(parts),
    })
}

/// A `(d+1)`-clique of opposite-color two-way pairs among one loop class,
/// red side first.
fn clique_anchor(k: &ColoredCompleteDigraph, loops: &[Vec<usize>], d: usize) -> Result<Option<(Vec<usize>, Color)>> {
    for base in [Color::RED, Color::BLUE] {
        let side = &loops[base.index()];
        let g = k.bidirectional_graph(side, base.other())?;
        if let Some(clique) = g.find_clique(d + 1) {
            return Ok(Some((clique.into_iter().map(|i| side[i]).collect(), base)));
        }
    }
    Ok(None)
}

/// The optimal cover for `d = 1`: one part per non-empty loop class.
pub fn loop_cover(k: &ColoredCompleteDigraph) -> CoverCertificate {
    let parts = k
        .loop_partition()
        .into_iter()
        .enumerate()
        .filter(|(_, vs)| !vs.is_empty())
        .map(|(c, vertices)| CoverPart {
            color: k.label(Color(c as u8)),
            vertices,
            provenance: Some(Provenance::Whole),
        })
        .collect();
    CoverCertificate { d: 1, n: k.n(), parts }
}

fn drop_dominated_parts(parts: Vec<CoverPart>) -> Vec<CoverPart> {
    let mut kept: Vec<CoverPart> = Vec::with_capacity(parts.len());
    for p in parts {
        let redundant = kept
            .iter()
            .any(|q| q.color == p.color && p.vertices.iter().all(|v| q.vertices.binary_search(v).is_ok()));
        if !redundant {
            kept.push(p);
        }
    }
    kept
}

fn check_loops(k: &ColoredCompleteDigraph, u: &[usize], base: Color) -> Result<()> {
    match u.iter().find(|&&v| k.color(v, v) != base) {
        Some(v) => Err(invalid(format!("vertex {v} has a loop of color {:?}, expected {:?}", k.label(k.color(*v, *v)), k.label(base)))),
        None => Ok(()),
    }
}

/// `None` if the `base`-colored subgraph induced on `u` is d-dominating.
/// Otherwise `min(d, |u|)` vertices of `u` with no common `base`-colored
/// out-neighbour in `u`: the smallest failing set, padded with the
/// smallest unused vertices of `u`.
pub fn find_witness_set(k: &ColoredCompleteDigraph, u: &[usize], d: usize, base: Color) -> Result<Option<Vec<usize>>> {
    k.require_two_colors()?;
    if d == 0 {
        return Err(invalid("d must be at least 1"));
    }
    let u = k.sorted_subset(u)?;
    if u.is_empty() {
        return Err(invalid("witness search needs a non-empty vertex set"));
    }
    check_loops(k, &u, base)?;
    let g = k.mono_induced(base, &u);
    let DominationCertificate::Fails(local) = g.check_d_dominating(d)? else {
        return Ok(None);
    };
    let mut witness: Vec<usize> = local.iter().map(|&i| u[i]).collect();
    for &v in &u {
        if witness.len() >= d {
            break;
        }
        if !witness.contains(&v) {
            witness.push(v);
        }
    }
    witness.sort_unstable();
    Ok(Some(witness))
}

/// Covers `u`, all of whose loops have color `base`, by `base`-colored
/// d-dominating parts.
///
/// With a witness `u_1..u_d` the parts are `W_i = { v in U : (v, u_i) is base }`,
/// each trivially d-dominating through `u_i`. Every other vertex is joined
/// to some `u_i` by opposite-colored arcs in both directions; these form
/// `T_i` and are covered recursively, with the opposite color's clique
/// number dropping by one per level.
pub fn cover_uniform_loops(
    k: &ColoredCompleteDigraph,
    u: &[usize],
    d: usize,
    base: Color,
    depth: usize,
) -> Result<Vec<CoverPart>> {
    if depth > d {
        return Err(Error::Internal(format!(
            "recursion depth {depth} exceeds d = {d}; loop colors or clique bound violated"
        )));
    }
    let u = k.sorted_subset(u)?;
    if u.is_empty() {
        return Ok(Vec::new());
    }
    let label = k.label(base);
    let Some(witness) = find_witness_set(k, &u, d, base)? else {
        let provenance = if depth == 0 { Provenance::Whole } else { Provenance::RecursiveBase };
        return Ok(vec![CoverPart {
            color: label,
            vertices: u,
            provenance: Some(provenance),
        }]);
    };

    let mut parts = Vec::new();
    let mut in_some_w = vec![false; k.n()];
    for &ui in &witness {
        let w: Vec<usize> = u.iter().copied().filter(|&v| k.color(v, ui) == base).collect();
        for &v in &w {
            in_some_w[v] = true;
        }
        parts.push(CoverPart {
            color: label,
            vertices: w,
            provenance: Some(Provenance::WPart),
        });
    }
    let rest: Vec<usize> = u.iter().copied().filter(|&v| !in_some_w[v]).collect();
    for &ui in &witness {
        let t: Vec<usize> = rest.iter().copied().filter(|&v| k.color(ui, v) != base).collect();
        if !t.is_empty() {
            parts.extend(cover_uniform_loops(k, &t, d, base, depth + 1)?);
        }
    }
    Ok(parts)
}

/// Covers all of `k` by `d` parts of color `base` and one of the other color,
/// given a clique `x` of `d + 1` base-loop vertices that are pairwise joined
/// by opposite-colored arcs in both directions.
pub fn cover_with_clique(k: &ColoredCompleteDigraph, x: &[usize], d: usize, base: Color) -> Result<Vec<CoverPart>> {
    k.require_two_colors()?;
    let x = k.sorted_subset(x)?;
    if x.len() != d + 1 {
        return Err(invalid(format!("clique must have d + 1 = {} vertices, got {}", d + 1, x.len())));
    }
    check_loops(k, &x, base)?;
    let other = base.other();
    for (i, &a) in x.iter().enumerate() {
        for &b in &x[i + 1..] {
            if k.color(a, b) != other || k.color(b, a) != other {
                return Err(invalid(format!("{{{a},{b}}} is not joined both ways in the opposite color")));
            }
        }
    }

    let mut parts = Vec::with_capacity(d + 1);
    let mut in_some_w = vec![false; k.n()];
    for &xi in &x[..d] {
        let w: Vec<usize> = (0..k.n()).filter(|&v| k.color(v, xi) == base).collect();
        for &v in &w {
            in_some_w[v] = true;
        }
        parts.push(CoverPart {
            color: k.label(base),
            vertices: w,
            provenance: Some(Provenance::WPart),
        });
    }
    let rest: Vec<usize> = (0..k.n()).filter(|&v| !in_some_w[v] || x.binary_search(&v).is_ok()).collect();
    let g = k.mono_induced(other, &rest);
    if let DominationCertificate::Fails(local) = g.check_d_dominating(d)? {
        let witness: Vec<usize> = local.iter().map(|&i| rest[i]).collect();
        return Err(Error::Internal(format!(
            "clique part {rest:?} is not {d}-dominating in color {:?}: {witness:?} has no common out-neighbour",
            k.label(other)
        )));
    }
    parts.push(CoverPart {
        color: k.label(other),
        vertices: rest,
        provenance: Some(Provenance::L2Blue),
    });
    Ok(parts)
}

/// First reason a certificate is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverDefect {
    SizeMismatch { expected: usize, found: usize },
    UnknownColor { part: usize, color: char },
    VertexOutOfRange { part: usize, vertex: usize },
    UncoveredVertex(usize),
    NotDominating { part: usize, witness: Vec<usize> },
}

impl fmt::Display for CoverDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverDefect::SizeMismatch { expected, found } => {
                write!(f, "certificate is for n = {found}, graph has n = {expected}")
            }
            CoverDefect::UnknownColor { part, color } => write!(f, "part {part}: unknown color {color:?}"),
            CoverDefect::VertexOutOfRange { part, vertex } => write!(f, "part {part}: vertex {vertex} out of range"),
            CoverDefect::UncoveredVertex(v) => write!(f, "uncovered vertex {v}"),
            CoverDefect::NotDominating { part, witness } => {
                write!(f, "part {part} is not dominating: {witness:?} has no common out-neighbour")
            }
        }
    }
}

/// Checks that the parts cover every vertex and that each part's
/// monochromatic induced subgraph is d-dominating.
pub fn verify_cover(k: &ColoredCompleteDigraph, cert: &CoverCertificate, d: usize) -> Result<(), CoverDefect> {
    if cert.n != k.n() {
        return Err(CoverDefect::SizeMismatch {
            expected: k.n(),
            found: cert.n,
        });
    }
    let mut covered = vec![false; k.n()];
    let mut checked = Vec::with_capacity(cert.parts.len());
    for (i, part) in cert.parts.iter().enumerate() {
        let color = k.color_of_label(part.color).map_err(|_| CoverDefect::UnknownColor {
            part: i,
            color: part.color,
        })?;
        if let Some(&v) = part.vertices.iter().find(|&&v| v >= k.n()) {
            return Err(CoverDefect::VertexOutOfRange { part: i, vertex: v });
        }
        for &v in &part.vertices {
            covered[v] = true;
        }
        checked.push(color);
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return Err(CoverDefect::UncoveredVertex(v));
    }
    for (i, (part, &color)) in cert.parts.iter().zip(&checked).enumerate() {
        let vs = k.sorted_subset(&part.vertices).expect("range checked above");
        let g = k.mono_induced(color, &vs);
        let cert = g.check_d_dominating(d.max(1)).expect("d >= 1");
        if let DominationCertificate::Fails(local) = cert {
            return Err(CoverDefect::NotDominating {
                part: i,
                witness: local.iter().map(|&j| vs[j]).collect(),
            });
        }
    }
    Ok(())
}
