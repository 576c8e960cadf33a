//! Exact maximization of k-modal path length.
//!
//! The main routine is a dynamic program over points in x-order with states
//! (point, section index). Because only the relative order of coordinates
//! matters, the DP runs on y-ranks; results are exact. A subset-enumeration
//! brute force serves as an independent oracle at small n, and rho_exact
//! minimizes over every permutation of [n].

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::geom::GenericPointSet;
use crate::path::{ModalPath, Monotonicity, Sign};

/// Maximum length witnessed by an explicit path.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub length: usize,
    pub witness: ModalPath,
}

/// Exhaustive minimum over all permutations of [n].
#[derive(Debug, Clone, Serialize)]
pub struct RhoResult {
    pub n: usize,
    pub k: usize,
    pub value: usize,
    /// Lexicographically smallest permutation (1-based) attaining the value.
    pub witness_permutation: Vec<usize>,
}

const BRUTE_LIMIT: usize = 16;
const RHO_LIMIT: usize = 10;

/// DP over y-ranks. Returns the optimum and, when `witness` is set, the
/// chosen (point index, section index) assignment.
///
/// Transition: a point extends a path either by continuing its own section
/// (direction must match) or by opening a later section after any earlier
/// one; intermediate sections are skipped implicitly, which is exactly what
/// possibly-empty sections allow.
fn rank_dp(yr: &[usize], k: usize, sign: Sign, witness: bool) -> (usize, Vec<(usize, usize)>) {
    let n = yr.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let cols = k + 1;
    let inc: Vec<bool> = (0..cols)
        .map(|j| sign.section_monotonicity(j) == Monotonicity::Increasing)
        .collect();
    // dp[p*cols+j]: best length of a path ending at p with p in section j.
    let mut dp = vec![0usize; n * cols];
    // prefix[p*cols+j]: max of dp[p][0..=j], with the section attaining it.
    let mut prefix = vec![(0usize, 0usize); n * cols];
    let mut parent = if witness {
        vec![usize::MAX; n * cols]
    } else {
        Vec::new()
    };

    let mut best_state = (1usize, 0usize); // (value, state index)
    for p in 0..n {
        for j in 0..cols {
            let mut best = 1usize;
            let mut par = usize::MAX;
            for q in 0..p {
                let compatible = if inc[j] { yr[q] < yr[p] } else { yr[q] > yr[p] };
                if compatible {
                    let cand = dp[q * cols + j] + 1;
                    if cand > best {
                        best = cand;
                        par = q * cols + j;
                    }
                }
                if j > 0 {
                    let (v, js) = prefix[q * cols + j - 1];
                    if v + 1 > best {
                        best = v + 1;
                        par = q * cols + js;
                    }
                }
            }
            dp[p * cols + j] = best;
            if witness {
                parent[p * cols + j] = par;
            }
            let cur = (best, j);
            prefix[p * cols + j] = if j == 0 {
                cur
            } else {
                let prev = prefix[p * cols + j - 1];
                if prev.0 >= cur.0 {
                    prev
                } else {
                    cur
                }
            };
            if best > best_state.0 {
                best_state = (best, p * cols + j);
            }
        }
    }

    if !witness {
        return (best_state.0, Vec::new());
    }
    let mut assignment = Vec::with_capacity(best_state.0);
    let mut state = best_state.1;
    loop {
        assignment.push((state / cols, state % cols));
        let par = parent[state];
        if par == usize::MAX {
            break;
        }
        state = par;
    }
    assignment.reverse();
    (best_state.0, assignment)
}

fn witness_path(
    s: &GenericPointSet,
    k: usize,
    sign: Sign,
    assignment: &[(usize, usize)],
) -> ModalPath {
    let mut sections = vec![Vec::new(); k + 1];
    for &(p, j) in assignment {
        sections[j].push(s.point(p).clone());
    }
    ModalPath::new(k, sign, sections).expect("witness arity is k+1 by construction")
}

/// Longest (sign, k)-modal path of `s`, with a witness.
pub fn longest_modal(s: &GenericPointSet, k: usize, sign: Sign) -> SolveResult {
    let yr = s.y_ranks();
    let (length, assignment) = rank_dp(&yr, k, sign, true);
    if s.is_empty() {
        return SolveResult {
            length: 0,
            witness: ModalPath::empty(k, sign),
        };
    }
    SolveResult {
        length,
        witness: witness_path(s, k, sign, &assignment),
    }
}

/// Longest k-modal path over both signs; ties resolve to plus.
pub fn longest_modal_best(s: &GenericPointSet, k: usize) -> SolveResult {
    let plus = longest_modal(s, k, Sign::Plus);
    let minus = longest_modal(s, k, Sign::Minus);
    if plus.length >= minus.length {
        plus
    } else {
        minus
    }
}

/// Length-only variant used by sweeps.
pub fn longest_modal_len(s: &GenericPointSet, k: usize, sign: Sign) -> usize {
    rank_dp(&s.y_ranks(), k, sign, false).0
}

/// Best length over both signs for a rank vector (a permutation of 0..n).
pub fn longest_modal_len_ranks(yr: &[usize], k: usize) -> usize {
    rank_dp(yr, k, Sign::Plus, false)
        .0
        .max(rank_dp(yr, k, Sign::Minus, false).0)
}

/// Is the x-ordered rank sequence a k-modal path of the given sign?
///
/// Greedy check: stay in the current section while the pair respects its
/// direction, otherwise open the next one. Minimality of the final section
/// index makes this exact, because a feasible assignment ending lower can
/// always be pushed upward.
fn is_modal_ranks(yr: &[usize], k: usize, sign: Sign) -> bool {
    let mut section = 0usize;
    for w in yr.windows(2) {
        let want = sign.section_monotonicity(section);
        let ok = match want {
            Monotonicity::Increasing => w[0] < w[1],
            Monotonicity::Decreasing => w[0] > w[1],
        };
        if !ok {
            section += 1;
            if section > k {
                return false;
            }
        }
    }
    true
}

/// Independent oracle: maximum over all subsets and both signs, section
/// placement checked greedily. Guarded to |s| <= 16.
pub fn brute_longest(s: &GenericPointSet, k: usize) -> Result<usize, Error> {
    let n = s.len();
    if n > BRUTE_LIMIT {
        return Err(Error::SizeGuard {
            what: "brute_longest",
            limit: BRUTE_LIMIT,
            got: n,
        });
    }
    let yr = s.y_ranks();
    let mut best = 0usize;
    let mut sub = Vec::with_capacity(n);
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        sub.clear();
        for (i, &r) in yr.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sub.push(r);
            }
        }
        if is_modal_ranks(&sub, k, Sign::Plus) || is_modal_ranks(&sub, k, Sign::Minus) {
            best = size;
        }
    }
    Ok(best)
}

fn reverse_perm(p: &[usize]) -> Vec<usize> {
    p.iter().rev().copied().collect()
}

fn complement_perm(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    p.iter().map(|&v| n - 1 - v).collect()
}

/// Is `p` the lexicographic minimum of its orbit under reverse/complement?
/// All four orbit members share the same best-sign optimum, so restricting
/// the exhaustive minimum to orbit minima is sound.
fn orbit_minimal(p: &[usize]) -> bool {
    let rev = reverse_perm(p);
    if rev[..] < *p {
        return false;
    }
    let comp = complement_perm(p);
    if comp[..] < *p {
        return false;
    }
    let revcomp = reverse_perm(&comp);
    revcomp[..] >= *p
}

fn for_each_permutation<F: FnMut(&[usize])>(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, f: &mut F) {
    if rest.is_empty() {
        f(prefix);
        return;
    }
    for i in 0..rest.len() {
        let v = rest.remove(i);
        prefix.push(v);
        for_each_permutation(prefix, rest, f);
        prefix.pop();
        rest.insert(i, v);
    }
}

fn rho_scan(n: usize, k: usize, prune: bool) -> (usize, Vec<usize>) {
    if n == 0 {
        return (0, Vec::new());
    }
    // Shard by leading value; shards are independent and min-reduced, so the
    // outcome does not depend on scheduling.
    let shard_results: Vec<(usize, Vec<usize>)> = (0..n)
        .into_par_iter()
        .filter_map(|first| {
            let mut best: Option<(usize, Vec<usize>)> = None;
            let mut prefix = vec![first];
            let mut rest: Vec<usize> = (0..n).filter(|&v| v != first).collect();
            for_each_permutation(&mut prefix, &mut rest, &mut |perm: &[usize]| {
                if prune && !orbit_minimal(perm) {
                    return;
                }
                let value = longest_modal_len_ranks(perm, k);
                let better = match &best {
                    None => true,
                    Some((v, w)) => value < *v || (value == *v && perm < &w[..]),
                };
                if better {
                    best = Some((value, perm.to_vec()));
                }
            });
            best
        })
        .collect();
    shard_results
        .into_iter()
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .expect("at least one shard yields a permutation")
}

/// Exhaustive rho(n; k): the minimum over every permutation of [n] of the
/// best-sign optimum, with the lexicographically smallest witness. Guarded
/// to n <= 10; use [`rho_sampled`] beyond that.
pub fn rho_exact(n: usize, k: usize) -> Result<RhoResult, Error> {
    if n > RHO_LIMIT {
        return Err(Error::SizeGuard {
            what: "rho_exact (use sampling mode for larger n)",
            limit: RHO_LIMIT,
            got: n,
        });
    }
    let (value, perm) = rho_scan(n, k, true);
    Ok(RhoResult {
        n,
        k,
        value,
        witness_permutation: perm.iter().map(|v| v + 1).collect(),
    })
}

/// Sampled upper bound on rho(n; k): the smallest best-sign optimum among
/// `trials` random permutations. This is only an upper bound on rho; it
/// proves nothing about all permutations.
pub fn rho_sampled(n: usize, k: usize, trials: usize, seed: u64) -> RhoResult {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 0..trials.max(1) {
        perm.shuffle(&mut rng);
        let value = longest_modal_len_ranks(&perm, k);
        let better = match &best {
            None => true,
            Some((v, w)) => value < *v || (value == *v && perm < *w),
        };
        if better {
            best = Some((value, perm.clone()));
        }
    }
    let (value, perm) = best.unwrap_or((0, Vec::new()));
    RhoResult {
        n,
        k,
        value,
        witness_permutation: perm.iter().map(|v| v + 1).collect(),
    }
}
