//! Paradoxical tournaments: Paley tournaments, exhaustive subtournament
//! scans, the randomized cycle-power construction and critical tournaments.
//!
//! A tournament is *perfectly d-paradoxical* when it is d-dominating and
//! d-dominated while none of its subtournaments is `(d+1)`-dominating or
//! `(d+1)`-dominated. It is *critical* for a property when it has the
//! property and no proper subtournament does.

use rand::seq::index;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::{self, Combinations};
use crate::colored::{Color, ColoredCompleteDigraph};
use crate::digraph::{k_dominating_within, Digraph, DominationCertificate, Tournament};
use crate::error::{invalid, Error, Result};

/// Default vertex-count guard for scans over all vertex subsets.
pub const DEFAULT_GUARD: usize = 22;

/// Hard ceiling for subset scans: subsets are single-word masks.
const MASK_LIMIT: usize = 63;

/// Default retry budget for [`bukh`].
pub const DEFAULT_RETRIES: u32 = 32;

/// A prime `p` with `p = 3 (mod 4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PaleyParams {
    p: usize,
}

impl PaleyParams {
    pub fn new(p: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(invalid(format!("{p} is not prime")));
        }
        if p % 4 != 3 {
            return Err(invalid(format!("{p} is not 3 mod 4, so -1 is a square and the relation is symmetric")));
        }
        Ok(PaleyParams { p })
    }

    pub fn p(self) -> usize {
        self.p
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q))
}

/// The Paley tournament on `0..p`: `a -> b` iff `a - b` is a non-zero
/// square mod `p`.
pub fn paley(p: usize) -> Result<Tournament> {
    let p = PaleyParams::new(p)?.p();
    let mut square = vec![false; p];
    for x in 1..p {
        square[x * x % p] = true;
    }
    Ok(Tournament::from_fn(p, |a, b| square[(a + p - b) % p]))
}

/// Which domination direction a check is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Dominating,
    Dominated,
}

impl Mode {
    fn holds(self, g: &Digraph, d: usize) -> Result<bool> {
        Ok(match self {
            Mode::Dominating => g.check_d_dominating(d)?.holds(),
            Mode::Dominated => g.check_d_dominated(d)?.holds(),
        })
    }

    /// Rows whose common intersections decide the property.
    fn rows(self, t: &Tournament) -> Vec<u64> {
        let g = match self {
            Mode::Dominating => t.as_digraph().clone(),
            Mode::Dominated => t.reverse().into_digraph(),
        };
        g.out_masks().expect("guarded to n <= 63")
    }
}

fn check_guard(what: &'static str, n: usize, guard: usize) -> Result<()> {
    let limit = guard.min(MASK_LIMIT);
    if n > limit {
        return Err(Error::Capacity { what, n, limit });
    }
    Ok(())
}

/// First vertex set, smallest then lexicographic, with size in `sizes`
/// whose induced subgraph has the property encoded by `rows` at `k`.
fn first_subset(rows: &[u64], sizes: std::ops::RangeInclusive<usize>, k: usize) -> Option<Vec<usize>> {
    const CHUNK: usize = 1 << 14;
    let n = rows.len();
    for size in sizes {
        let mut combos = Combinations::new(n, size);
        loop {
            let mut chunk = Vec::with_capacity(CHUNK);
            while chunk.len() < CHUNK {
                match combos.next_comb() {
                    Some(c) => chunk.push(bits::mask_of(c)),
                    None => break,
                }
            }
            if chunk.is_empty() {
                break;
            }
            let hit = chunk.par_iter().position_first(|&m| k_dominating_within(rows, m, k));
            if let Some(i) = hit {
                return Some(bits::mask_ones(chunk[i]).collect());
            }
        }
    }
    None
}

/// The smallest (then lexicographically first) vertex set inducing a
/// k-dominating subtournament, if any. Scans all subsets; `n <= guard`.
pub fn has_k_dominating_subtournament(t: &Tournament, k: usize, guard: usize) -> Result<Option<Vec<usize>>> {
    subtournament_with(t, k, guard, Mode::Dominating)
}

/// As [`has_k_dominating_subtournament`] for k-dominated subtournaments.
pub fn has_k_dominated_subtournament(t: &Tournament, k: usize, guard: usize) -> Result<Option<Vec<usize>>> {
    subtournament_with(t, k, guard, Mode::Dominated)
}

fn subtournament_with(t: &Tournament, k: usize, guard: usize, mode: Mode) -> Result<Option<Vec<usize>>> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    check_guard("subtournament scan", t.n(), guard)?;
    Ok(first_subset(&mode.rows(t), 1..=t.n(), k))
}

/// The four checks behind "perfectly d-paradoxical".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParadoxReport {
    pub d: usize,
    pub dominating: DominationCertificate,
    pub dominated: DominationCertificate,
    /// A `(d+1)`-dominating subtournament, if one exists.
    pub dominating_sub: Option<Vec<usize>>,
    /// A `(d+1)`-dominated subtournament, if one exists.
    pub dominated_sub: Option<Vec<usize>>,
}

impl ParadoxReport {
    pub fn is_perfect(&self) -> bool {
        self.dominating.holds() && self.dominated.holds() && self.dominating_sub.is_none() && self.dominated_sub.is_none()
    }
}

pub fn is_perfectly_paradoxical(t: &Tournament, d: usize, guard: usize) -> Result<ParadoxReport> {
    if d == 0 {
        return Err(invalid("d must be at least 1"));
    }
    check_guard("perfectly paradoxical check", t.n(), guard)?;
    Ok(ParadoxReport {
        d,
        dominating: t.check_d_dominating(d)?,
        dominated: t.check_d_dominated(d)?,
        dominating_sub: has_k_dominating_subtournament(t, d + 1, guard)?,
        dominated_sub: has_k_dominated_subtournament(t, d + 1, guard)?,
    })
}

/// The oriented `(m-1)`-st power of the `n`-cycle: `i -> j` iff
/// `1 <= (j - i) mod n <= m - 1`.
pub fn cycle_power_orientation(n: usize, m: usize) -> Result<Digraph> {
    if m == 0 || n <= 2 * (m - 1) {
        return Err(invalid(format!(
            "cycle power needs m >= 1 and n > 2(m - 1); got n = {n}, m = {m}"
        )));
    }
    Ok(Digraph::from_fn(n, |i, j| {
        let gap = (j + n - i) % n;
        gap >= 1 && gap < m
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BukhParams {
    pub d: usize,
    pub m: usize,
    pub seed: u64,
    pub max_retries: u32,
}

impl BukhParams {
    /// `m = 2^(3d)`, seed 0, [`DEFAULT_RETRIES`].
    pub fn new(d: usize) -> Result<Self> {
        let m = u32::try_from(3 * d)
            .ok()
            .and_then(|e| 1usize.checked_shl(e))
            .ok_or_else(|| invalid(format!("2^(3d) overflows for d = {d}")))?;
        let params = BukhParams {
            d,
            m,
            seed: 0,
            max_retries: DEFAULT_RETRIES,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn n(&self) -> usize {
        self.m * (self.d + 1)
    }

    fn validate(&self) -> Result<()> {
        if self.d < 2 {
            return Err(invalid("Bukh construction needs d >= 2"));
        }
        if self.m < 2 {
            return Err(invalid("Bukh construction needs m >= 2"));
        }
        if self.max_retries == 0 {
            return Err(invalid("max_retries must be positive"));
        }
        self.m
            .checked_mul(self.d + 1)
            .ok_or_else(|| invalid("n = m(d+1) overflows"))?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BukhAttempt {
    pub seed: u64,
    pub dominating: DominationCertificate,
    pub dominated: DominationCertificate,
}

impl BukhAttempt {
    pub fn succeeded(&self) -> bool {
        self.dominating.holds() && self.dominated.holds()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BukhReport {
    pub attempts: Vec<BukhAttempt>,
}

/// Orients the pairs `base` leaves open. Pairs `i < j` are visited in
/// lexicographic order and each consumes one bit of a ChaCha8 stream seeded
/// with `seed` (64-bit words, least significant bit first): 1 means `i -> j`.
pub fn complete_orientation(base: &Digraph, seed: u64) -> Result<Tournament> {
    let n = base.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word = 0u64;
    let mut left = 0u32;
    let mut g = Digraph::new(n);
    for i in 0..n {
        if base.has_loop(i) {
            return Err(invalid(format!("base has a loop at {i}")));
        }
        for j in i + 1..n {
            let (fwd, back) = (base.has_arc(i, j), base.has_arc(j, i));
            let forward = match (fwd, back) {
                (true, true) => return Err(invalid(format!("base orients {{{i},{j}}} both ways"))),
                (true, false) => true,
                (false, true) => false,
                (false, false) => {
                    if left == 0 {
                        word = rng.next_u64();
                        left = 64;
                    }
                    let bit = word & 1 == 1;
                    word >>= 1;
                    left -= 1;
                    bit
                }
            };
            if forward {
                g.insert_arc(i, j);
            } else {
                g.insert_arc(j, i);
            }
        }
    }
    Tournament::from_digraph(g)
}

/// Extends the cycle power `G(n, m)` to a random tournament, retrying with
/// seeds `seed, seed + 1, ...` until the result is d-dominating and
/// d-dominated.
pub fn bukh(params: &BukhParams) -> Result<(Tournament, BukhReport)> {
    params.validate()?;
    let base = cycle_power_orientation(params.n(), params.m)?;
    let mut report = BukhReport::default();
    for attempt in 0..params.max_retries {
        let seed = params.seed.wrapping_add(attempt as u64);
        let t = complete_orientation(&base, seed)?;
        let result = BukhAttempt {
            seed,
            dominating: t.check_d_dominating(params.d)?,
            dominated: t.check_d_dominated(params.d)?,
        };
        let ok = result.succeeded();
        report.attempts.push(result);
        if ok {
            return Ok((t, report));
        }
    }
    Err(Error::ConstructionFailed(Box::new(report)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominationSide {
    /// No in-dominating set of the allowed size.
    In,
    /// No out-dominating set of the allowed size.
    Out,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphCounterexample {
    pub vertices: Vec<usize>,
    pub side: DominationSide,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledCheck {
    pub checked: usize,
    pub counterexample: Option<SubgraphCounterexample>,
}

impl SampledCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks that the full vertex set and `samples` random non-empty induced
/// subgraphs each have in- and out-dominating sets of order at most `d + 1`.
/// Sample sizes are uniform on `1..=n`, members uniform among sets of that size.
pub fn subgraph_domination_property(g: &Digraph, d: usize, samples: usize, seed: u64) -> Result<SampledCheck> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let full: Vec<usize> = (0..n).collect();
    let draws = std::iter::once(full).chain((0..if n == 0 { 0 } else { samples }).map(|_| {
        let size = rng.random_range(1..=n);
        let mut vs = index::sample(&mut rng, n, size).into_vec();
        vs.sort_unstable();
        vs
    }));
    for vs in draws {
        let sub = g.induced(&vs)?.graph;
        checked += 1;
        for side in [DominationSide::Out, DominationSide::In] {
            let found = match side {
                DominationSide::Out => sub.find_out_dominating_set(d + 1),
                DominationSide::In => sub.find_in_dominating_set(d + 1),
            };
            if found.is_none() {
                return Ok(SampledCheck {
                    checked,
                    counterexample: Some(SubgraphCounterexample { vertices: vs, side }),
                });
            }
        }
    }
    Ok(SampledCheck {
        checked,
        counterexample: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criticality {
    /// No proper non-empty subtournament has the property (exhaustive).
    Critical,
    /// No single-vertex deletion keeps the property; larger deletions untested.
    WeaklyCritical,
    NotCritical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub verdict: Criticality,
    pub mode: Mode,
    /// A proper vertex subset whose subtournament keeps the property.
    pub counterexample: Option<Vec<usize>>,
}

/// Decides criticality exhaustively for `n <= guard`; above the guard only
/// single-vertex deletions are tried and the best verdict is weakly critical.
pub fn is_critical(t: &Tournament, d: usize, mode: Mode, guard: usize) -> Result<CriticalityReport> {
    if d == 0 {
        return Err(invalid("d must be at least 1"));
    }
    if !mode.holds(t, d)? {
        return Err(invalid(format!("tournament is not {d}-{}", mode_word(mode))));
    }
    let n = t.n();
    if n <= guard.min(MASK_LIMIT) {
        let counterexample = if n > 1 { first_subset(&mode.rows(t), 1..=n - 1, d) } else { None };
        let verdict = if counterexample.is_some() { Criticality::NotCritical } else { Criticality::Critical };
        return Ok(CriticalityReport {
            verdict,
            mode,
            counterexample,
        });
    }
    for v in 0..n {
        let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        if mode.holds(&t.induced(&keep)?.0, d)? {
            return Ok(CriticalityReport {
                verdict: Criticality::NotCritical,
                mode,
                counterexample: Some(keep),
            });
        }
    }
    Ok(CriticalityReport {
        verdict: Criticality::WeaklyCritical,
        mode,
        counterexample: None,
    })
}

fn mode_word(mode: Mode) -> &'static str {
    match mode {
        Mode::Dominating => "dominating",
        Mode::Dominated => "dominated",
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalCore {
    pub tournament: Tournament,
    /// Original index of each kept vertex, ascending.
    pub kept: Vec<usize>,
    pub report: CriticalityReport,
}

/// Deletes the smallest-index vertex whose removal keeps the property until
/// no such vertex remains.
pub fn make_critical(t: &Tournament, d: usize, mode: Mode, guard: usize) -> Result<CriticalCore> {
    if d == 0 {
        return Err(invalid("d must be at least 1"));
    }
    if !mode.holds(t, d)? {
        return Err(invalid(format!("tournament is not {d}-{}", mode_word(mode))));
    }
    let mut kept: Vec<usize> = (0..t.n()).collect();
    'shrink: loop {
        for i in 0..kept.len() {
            let mut trial = kept.clone();
            trial.remove(i);
            if mode.holds(&t.induced(&trial)?.0, d)? {
                kept = trial;
                continue 'shrink;
            }
        }
        break;
    }
    let (tournament, _) = t.induced(&kept)?;
    let report = is_critical(&tournament, d, mode, guard)?;
    Ok(CriticalCore {
        tournament,
        kept,
        report,
    })
}

/// Blue on the arcs of `t_blue`, red on every loop and every reversed arc.
pub fn coloring_from_tournament(t_blue: &Tournament) -> ColoredCompleteDigraph {
    ColoredCompleteDigraph::two_colored(t_blue.n(), |u, v| {
        if t_blue.has_arc(u, v) {
            Color::BLUE
        } else {
            Color::RED
        }
    })
    .expect("two colors")
}
