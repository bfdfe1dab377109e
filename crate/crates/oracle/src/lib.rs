//! Independent brute-force reference solvers for every problem in the repo.
//!
//! These enumerate modification sets, deletion sets, or contraction sets
//! exhaustively and evaluate graph parameters by generic subset scans. They
//! refuse inputs beyond their configured limits instead of running unbounded.

pub mod graph;

use graph::{dist_brute, max_clique_large, BitGraph};
use ivx_core::{Instance, Interval, ModificationSet, OptValue};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle limit exceeded: {msg} (limits: n<={max_n}, k<={max_k})")]
    LimitExceeded {
        msg: String,
        max_n: usize,
        max_k: usize,
    },
    #[error("{0}")]
    BadInput(String),
}

/// Size gates for the exponential oracles.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_n: 12, max_k: 4 }
    }
}

impl OracleLimits {
    /// Reads overrides from a spec string like `n=14,k=5`.
    pub fn from_spec(spec: &str) -> Result<Self, String> {
        let mut limits = OracleLimits::default();
        for part in spec.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| format!("bad limit component `{part}`"))?;
            let parsed: usize = val
                .trim()
                .parse()
                .map_err(|_| format!("bad limit value `{val}`"))?;
            match key.trim() {
                "n" => limits.max_n = parsed,
                "k" => limits.max_k = parsed,
                other => return Err(format!("unknown limit key `{other}`")),
            }
        }
        Ok(limits)
    }

    pub fn from_env() -> Self {
        match std::env::var("IVX_ORACLE_LIMITS") {
            Ok(spec) => OracleLimits::from_spec(&spec).unwrap_or_default(),
            Err(_) => OracleLimits::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Alpha,
    Omega,
    Dist,
    Scat,
    HamPath,
    HamCycle,
    PathCover,
    /// Toughness slack with exact rational threshold p/q: the value is
    /// max over cut sets of p*c(G-S) - q*|S|.
    Tough {
        p: i64,
        q: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// Evaluates a parameter on a fixed interval list. Hamiltonicity parameters
/// come back as 1 (holds) / 0 (does not hold).
pub fn evaluate_param(
    intervals: &[Interval],
    sp: Option<(i64, i64)>,
    param: Param,
) -> Result<OptValue, OracleError> {
    let n = intervals.len();
    let needs_bitmask = !matches!(param, Param::Dist | Param::Omega);
    if needs_bitmask && n > 20 {
        return Err(OracleError::BadInput(format!(
            "subset-scan parameter on {n} vertices refused"
        )));
    }
    Ok(match param {
        Param::Alpha => OptValue::Finite(BitGraph::from_intervals(intervals).alpha().0 as i64),
        Param::Omega => {
            if n <= 20 {
                OptValue::Finite(BitGraph::from_intervals(intervals).omega().0 as i64)
            } else {
                OptValue::Finite(max_clique_large(intervals) as i64)
            }
        }
        Param::Dist => {
            let (s, t) = sp.ok_or_else(|| {
                OracleError::BadInput("dist parameter requires s and t".into())
            })?;
            dist_brute(intervals, s, t)
        }
        Param::Scat => BitGraph::from_intervals(intervals).scattering().0,
        Param::HamPath => {
            OptValue::Finite(BitGraph::from_intervals(intervals).has_hamilton_path() as i64)
        }
        Param::HamCycle => {
            OptValue::Finite(BitGraph::from_intervals(intervals).has_hamilton_cycle() as i64)
        }
        Param::PathCover => {
            OptValue::Finite(BitGraph::from_intervals(intervals).path_cover_number() as i64)
        }
        Param::Tough { p, q } => BitGraph::from_intervals(intervals).toughness_slack(p, q),
    })
}

/// Lexicographic combinations of `elems`, by size 0..=k then lexicographic
/// order within each size.
fn combinations_by_size(elems: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for size in 1..=k.min(elems.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| elems[i]).collect());
            // advance the combination
            let mut pos = size;
            while pos > 0 {
                pos -= 1;
                if idx[pos] != elems.len() - size + pos {
                    idx[pos] += 1;
                    for j in pos + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
                if pos == 0 {
                    idx.clear();
                }
            }
            if idx.is_empty() {
                break;
            }
        }
    }
    out
}

struct Candidate {
    value: OptValue,
    witness: Vec<usize>,
}

fn better(sense: Sense, challenger: &Candidate, incumbent: &Candidate) -> bool {
    match sense {
        Sense::Min => challenger.value < incumbent.value,
        Sense::Max => challenger.value > incumbent.value,
    }
}

/// Exact optimum of the framework objective by enumerating every modification
/// set X of size at most k over the pairs whose replacement actually differs
/// from the original (substituting an identical replacement never changes the
/// graph). The witness is the first optimum in (size, lexicographic) order.
pub fn brute_over_x(
    inst: &Instance,
    param: Param,
    sense: Sense,
    limits: &OracleLimits,
    threads: usize,
) -> Result<(OptValue, ModificationSet), OracleError> {
    let effective: Vec<usize> = (1..=inst.n())
        .filter(|&i| inst.pairs[i - 1].0 != inst.pairs[i - 1].1)
        .collect();
    if effective.len() > limits.max_n || inst.budget.min(effective.len()) > limits.max_k {
        return Err(OracleError::LimitExceeded {
            msg: format!(
                "{} modifiable pairs, budget {}",
                effective.len(),
                inst.budget
            ),
            max_n: limits.max_n,
            max_k: limits.max_k,
        });
    }
    let sp = inst.sp.map(|e| (e.s, e.t));
    let sets = combinations_by_size(&effective, inst.budget.min(effective.len()));

    let eval = |indices: &[usize]| -> Result<Candidate, OracleError> {
        let x = ModificationSet::new(indices.to_vec());
        let modified = inst
            .apply(&x)
            .map_err(|e| OracleError::BadInput(e.to_string()))?;
        Ok(Candidate {
            value: evaluate_param(&modified, sp, param)?,
            witness: indices.to_vec(),
        })
    };

    let best = if threads <= 1 || sets.len() < 64 {
        let mut best: Option<Candidate> = None;
        for set in &sets {
            let cand = eval(set)?;
            if best.as_ref().map_or(true, |b| better(sense, &cand, b)) {
                best = Some(cand);
            }
        }
        best
    } else {
        let chunk = sets.len().div_ceil(threads);
        let results: Vec<Result<Option<Candidate>, OracleError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = sets
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        let mut best: Option<Candidate> = None;
                        for set in part {
                            let cand = eval(set)?;
                            if best.as_ref().map_or(true, |b| better(sense, &cand, b)) {
                                best = Some(cand);
                            }
                        }
                        Ok(best)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        // merge in chunk order so the witness tie-break is schedule-independent
        let mut best: Option<Candidate> = None;
        for r in results {
            if let Some(cand) = r? {
                if best.as_ref().map_or(true, |b| better(sense, &cand, b)) {
                    best = Some(cand);
                }
            }
        }
        best
    };

    let best = best.ok_or_else(|| OracleError::BadInput("no candidate sets".into()))?;
    Ok((best.value, ModificationSet::new(best.witness)))
}

/// Exact most-vital-nodes optimum by enumerating deletion sets.
pub fn brute_mvn(
    intervals: &[Interval],
    k: usize,
    sp: Option<(i64, i64)>,
    param: Param,
    sense: Sense,
    limits: &OracleLimits,
) -> Result<(OptValue, Vec<usize>), OracleError> {
    let n = intervals.len();
    if n > limits.max_n || k.min(n) > limits.max_k {
        return Err(OracleError::LimitExceeded {
            msg: format!("{n} vertices, budget {k}"),
            max_n: limits.max_n,
            max_k: limits.max_k,
        });
    }
    let vertices: Vec<usize> = (1..=n).collect();
    let mut best: Option<Candidate> = None;
    for set in combinations_by_size(&vertices, k.min(n)) {
        let remaining: Vec<Interval> = (1..=n)
            .filter(|i| !set.contains(i))
            .map(|i| intervals[i - 1])
            .collect();
        let cand = Candidate {
            value: evaluate_param(&remaining, sp, param)?,
            witness: set,
        };
        if best.as_ref().map_or(true, |b| better(sense, &cand, b)) {
            best = Some(cand);
        }
    }
    let best = best.unwrap();
    Ok((best.value, best.witness))
}

/// Exact multiset most-vital-nodes for shortest path: enumerate deletion
/// sub-multisets of size at most k and maximize the remaining walk length.
pub fn brute_mvn_dist(
    intervals: &[Interval],
    k: usize,
    s: i64,
    t: i64,
    limits: &OracleLimits,
) -> Result<OptValue, OracleError> {
    let n = intervals.len();
    if n > limits.max_n || k.min(n) > limits.max_k {
        return Err(OracleError::LimitExceeded {
            msg: format!("{n} intervals, budget {k}"),
            max_n: limits.max_n,
            max_k: limits.max_k,
        });
    }
    let vertices: Vec<usize> = (1..=n).collect();
    let mut best = OptValue::MinusInf;
    for set in combinations_by_size(&vertices, k.min(n)) {
        let remaining: Vec<Interval> = (1..=n)
            .filter(|i| !set.contains(i))
            .map(|i| intervals[i - 1])
            .collect();
        let d = dist_brute(&remaining, s, t);
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

/// Exact contraction-blocker optimum: enumerate edge subsets of size at most
/// k, contract (quotient by the chosen edges' connected groups), and take the
/// minimum independence number. Returns the value and the first optimal edge
/// set in (size, lexicographic) order, edges as 1-based vertex pairs.
pub fn brute_contraction(
    intervals: &[Interval],
    k: usize,
    limits: &OracleLimits,
) -> Result<(usize, Vec<(usize, usize)>), OracleError> {
    let n = intervals.len();
    if n > limits.max_n || k > limits.max_k {
        return Err(OracleError::LimitExceeded {
            msg: format!("{n} vertices, budget {k}"),
            max_n: limits.max_n,
            max_k: limits.max_k,
        });
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if intervals[u].intersects(&intervals[v]) {
                edges.push((u, v));
            }
        }
    }
    let edge_ids: Vec<usize> = (0..edges.len()).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for set in combinations_by_size(&edge_ids, k.min(edges.len())) {
        // groups = connected components of the chosen edge set
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for &e in &set {
            let (u, v) = edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        // quotient adjacency, then alpha by subset scan
        let mut groups: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let mut reps: Vec<usize> = groups.clone();
        reps.sort_unstable();
        reps.dedup();
        for g in groups.iter_mut() {
            *g = reps.binary_search(g).unwrap();
        }
        let m = reps.len();
        let mut adj = vec![0u64; m];
        for u in 0..n {
            for v in 0..n {
                if u != v && groups[u] != groups[v] && intervals[u].intersects(&intervals[v]) {
                    adj[groups[u]] |= 1 << groups[v];
                }
            }
        }
        let g = BitGraph { n: m, adj };
        let alpha = g.alpha().0;
        if best.as_ref().map_or(true, |(b, _)| alpha < *b) {
            best = Some((alpha, set));
        }
    }
    let (value, set) = best.unwrap();
    Ok((
        value,
        set.iter().map(|&e| (edges[e].0 + 1, edges[e].1 + 1)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ivx_core::{Instance, Mode};

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn combinations_cover_size_then_lex() {
        let sets = combinations_by_size(&[1, 2, 3], 2);
        assert_eq!(
            sets,
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn interdiction_example_shortest_path() {
        // shrinking the spanning interval forces a two-step walk
        let inst = Instance::new(
            Mode::Shrink,
            vec![
                (iv(0, 4), iv(0, 4)),
                (iv(3, 10), iv(3, 10)),
                (iv(0, 10), iv(5, 6)),
            ],
            1,
            Some(ivx_core::SpEndpoints { s: 0, t: 10 }),
        )
        .unwrap();
        let (v, x) = brute_over_x(
            &inst,
            Param::Dist,
            Sense::Max,
            &OracleLimits::default(),
            1,
        )
        .unwrap();
        assert_eq!(v, OptValue::Finite(2));
        assert_eq!(x.indices(), &[3]);
    }

    #[test]
    fn scat_example_p3_empty_middle() {
        let inst = Instance::new(
            Mode::Shrink,
            vec![
                (iv(0, 2), iv(0, 2)),
                (iv(1, 4), iv(2, 2)),
                (iv(3, 5), iv(3, 5)),
            ],
            1,
            None,
        )
        .unwrap();
        let (v, x) = brute_over_x(
            &inst,
            Param::Scat,
            Sense::Max,
            &OracleLimits::default(),
            1,
        )
        .unwrap();
        assert_eq!(v, OptValue::Finite(3));
        assert_eq!(x.indices(), &[2]);
    }

    #[test]
    fn mvn_alpha_p3() {
        let ivs = [iv(0, 2), iv(1, 4), iv(3, 5)];
        let (v, _) = brute_mvn(
            &ivs,
            1,
            None,
            Param::Alpha,
            Sense::Min,
            &OracleLimits::default(),
        )
        .unwrap();
        assert_eq!(v, OptValue::Finite(1));
    }

    #[test]
    fn contraction_p3() {
        let ivs = [iv(0, 2), iv(1, 4), iv(3, 5)];
        let (v0, _) = brute_contraction(&ivs, 0, &OracleLimits::default()).unwrap();
        assert_eq!(v0, 2);
        let (v1, x) = brute_contraction(&ivs, 1, &OracleLimits::default()).unwrap();
        assert_eq!(v1, 1);
        assert_eq!(x.len(), 1);
    }

    #[test]
    fn limits_are_enforced() {
        let ivs: Vec<Interval> = (0..20).map(|i| iv(i, i + 1)).collect();
        let err = brute_mvn(
            &ivs,
            1,
            None,
            Param::Alpha,
            Sense::Min,
            &OracleLimits::default(),
        )
        .unwrap_err();
        assert!(matches!(err, OracleError::LimitExceeded { .. }));
    }

    #[test]
    fn threaded_matches_sequential() {
        let inst = Instance::new(
            Mode::Shrink,
            (0..10)
                .map(|i| (iv(2 * i, 2 * i + 3), iv(2 * i + 1, 2 * i + 2)))
                .collect(),
            3,
            None,
        )
        .unwrap();
        let limits = OracleLimits::default();
        let seq = brute_over_x(&inst, Param::Alpha, Sense::Max, &limits, 1).unwrap();
        let par = brute_over_x(&inst, Param::Alpha, Sense::Max, &limits, 4).unwrap();
        assert_eq!(seq, par);
    }
}
