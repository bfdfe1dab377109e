//! Independence-number interdiction and assistance.
//!
//! Interdiction (expand mode) equals clique-cover assistance: a chain DP over
//! endpoint-sorted intervals where skipping a gap costs one expansion per
//! original strictly inside it and is impossible once a replacement lies
//! strictly inside. Assistance (shrink mode) is a longest-path computation on
//! a layered point DAG where replacement arcs advance a budget layer; pairs
//! whose replacement is empty are handled by a bonus dimension since their
//! shrink contributes a free-floating independent vertex.

use crate::error::SolverError;
use crate::igraph::CliqueCover;
use ivx_core::{normalize, CoordMap, Instance, Interval, Mode, ModificationSet};

const INF: usize = usize::MAX / 2;

struct Entry {
    start: i64,
    end: i64,
    local: usize,
    is_orig: bool,
}

struct InterdictDp {
    /// F[j][k']: minimum chain size ending at endpoint j with k' expansions
    f: Vec<Vec<usize>>,
    parent: Vec<Vec<(usize, usize)>>,
    entries: Vec<Entry>, // 1-based by endpoint rank; entries[0] unused
    ends: Vec<i64>,
    norm: Instance,
    map: CoordMap,
    ids: Vec<usize>,     // local -> global pair id
    empty_ids: Vec<usize>,
}

fn interdict_dp(inst: &Instance) -> Result<InterdictDp, SolverError> {
    if inst.mode != Mode::Expand {
        return Err(SolverError::ModeMismatch {
            expected: Mode::Expand,
            problem: "alpha-interdict",
        });
    }
    let mut ids = Vec::new();
    let mut empty_ids = Vec::new();
    let mut sub_pairs = Vec::new();
    for (i, &(orig, repl)) in inst.pairs.iter().enumerate() {
        if orig.is_empty() {
            if repl.is_empty() {
                empty_ids.push(i + 1);
            } else {
                return Err(SolverError::Unsupported(format!(
                    "pair {}: expanding an empty original into a real interval is not supported",
                    i + 1
                )));
            }
        } else {
            ids.push(i + 1);
            sub_pairs.push((orig, repl));
        }
    }
    let k = inst.budget;
    let sub = Instance::new(Mode::Expand, sub_pairs, k, None)?;
    let (norm, map) = normalize(&sub);
    let m = norm.n();

    let mut entries: Vec<Entry> = Vec::with_capacity(2 * m);
    for (local, &(o, r)) in norm.pairs.iter().enumerate() {
        entries.push(Entry {
            start: o.a,
            end: o.b,
            local,
            is_orig: true,
        });
        entries.push(Entry {
            start: r.a,
            end: r.b,
            local,
            is_orig: false,
        });
    }
    entries.sort_by_key(|e| e.end);
    let ends: Vec<i64> = entries.iter().map(|e| e.end).collect();
    // prepend a slot so entries are 1-based by endpoint rank
    let mut entries1 = vec![Entry {
        start: 0,
        end: i64::MIN,
        local: usize::MAX,
        is_orig: false,
    }];
    entries1.extend(entries);

    // r(l): number of endpoints strictly below entry l's start; the entry is
    // strictly inside the gap (d_i, d_j) iff i <= r(l) and l < j
    let rank_of = |l: usize| -> usize { ends.partition_point(|&d| d < entries1[l].start) };
    let mut by_r: Vec<Vec<usize>> = vec![Vec::new(); 2 * m + 1];
    for l in 1..=2 * m {
        by_r[rank_of(l)].push(l);
    }

    let cols = k + 1;
    let mut f = vec![vec![INF; cols]; 2 * m + 2];
    let mut parent = vec![vec![(usize::MAX, 0usize); cols]; 2 * m + 2];
    for kp in 0..cols {
        f[0][kp] = 0;
    }
    for j in 1..=2 * m + 1 {
        let mut cost = 0usize;
        let mut blocked = false;
        for i in (0..j).rev() {
            for &l in &by_r[i.min(2 * m)] {
                if l < j {
                    if entries1[l].is_orig {
                        cost += 1;
                    } else {
                        blocked = true;
                    }
                }
            }
            if blocked || cost > k {
                break;
            }
            for kp in cost..cols {
                if f[i][kp - cost] != INF {
                    let cand = 1 + f[i][kp - cost];
                    if cand < f[j][kp] {
                        f[j][kp] = cand;
                        parent[j][kp] = (i, kp - cost);
                    }
                }
            }
        }
    }

    Ok(InterdictDp {
        f,
        parent,
        entries: entries1,
        ends,
        norm,
        map,
        ids,
        empty_ids,
    })
}

impl InterdictDp {
    fn value_at(&self, budget: usize) -> usize {
        let j = self.f.len() - 1;
        self.f[j][budget] - 1 + self.empty_ids.len()
    }

    /// Chain of selected endpoint ranks (interior only) for a budget.
    fn chain_at(&self, budget: usize) -> Vec<usize> {
        let mut chain = Vec::new();
        let (mut j, mut kp) = (self.f.len() - 1, budget);
        while j != 0 {
            chain.push(j);
            let (pj, pk) = self.parent[j][kp];
            assert_ne!(pj, usize::MAX, "infeasible chain state");
            j = pj;
            kp = pk;
        }
        chain.push(0);
        chain.reverse();
        chain.pop(); // drop the +inf sentinel
        chain.remove(0); // drop the -inf sentinel
        chain
    }

    fn strictly_inside(&self, i: usize, j: usize) -> Vec<usize> {
        (i + 1..j.min(self.ends.len() + 1))
            .filter(|&l| {
                let e = &self.entries[l];
                self.ends.partition_point(|&d| d < e.start) >= i
            })
            .collect()
    }

    fn witness_at(&self, budget: usize) -> (ModificationSet, CliqueCover) {
        let m = self.norm.n();
        let mut full_chain = vec![0usize];
        full_chain.extend(self.chain_at(budget));
        full_chain.push(2 * m + 1);

        let mut x_local = Vec::new();
        for w in full_chain.windows(2) {
            for l in self.strictly_inside(w[0], w[1]) {
                if self.entries[l].is_orig {
                    x_local.push(self.entries[l].local);
                }
            }
        }
        let x: ModificationSet = x_local.iter().map(|&l| self.ids[l]).collect();
        assert!(x.len() <= budget, "chain spent more than the budget");

        // selected endpoints stab every final interval; assign each pair to
        // the leftmost selected point its final interval contains
        let selected: Vec<usize> = full_chain[1..full_chain.len() - 1].to_vec();
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); selected.len()];
        let mut points: Vec<Option<i64>> = selected
            .iter()
            .map(|&j| Some(self.map.to_original(self.entries[j].end)))
            .collect();
        for local in 0..m {
            let (o, r) = self.norm.pairs[local];
            let final_iv = if x_local.contains(&local) { r } else { o };
            let at = selected
                .iter()
                .position(|&j| final_iv.contains(self.entries[j].end))
                .expect("every final interval contains a selected endpoint");
            parts[at].push(self.ids[local]);
        }
        assert!(
            parts.iter().all(|p| !p.is_empty()),
            "optimal chains select only stabbing points"
        );
        for &id in &self.empty_ids {
            parts.push(vec![id]);
            points.push(None);
        }
        (x, CliqueCover { parts, points })
    }
}

/// Minimum independence number reachable by expanding at most k intervals,
/// with the expansion set and a certifying clique cover.
pub fn alpha_interdict(
    inst: &Instance,
) -> Result<(usize, ModificationSet, CliqueCover), SolverError> {
    let dp = interdict_dp(inst)?;
    let value = dp.value_at(inst.budget);
    let (x, cover) = dp.witness_at(inst.budget);
    debug_assert_eq!(cover.parts.len(), value);
    Ok((value, x, cover))
}

/// Interdiction values for every budget 0..=k in one pass.
pub fn alpha_interdict_values(inst: &Instance) -> Result<Vec<usize>, SolverError> {
    let dp = interdict_dp(inst)?;
    Ok((0..=inst.budget).map(|b| dp.value_at(b)).collect())
}

/// Maximum independence number reachable by shrinking at most k intervals,
/// with the shrink set and the independent set itself.
pub fn alpha_assist(
    inst: &Instance,
) -> Result<(usize, ModificationSet, Vec<usize>), SolverError> {
    if inst.mode != Mode::Shrink {
        return Err(SolverError::ModeMismatch {
            expected: Mode::Shrink,
            problem: "alpha-assist",
        });
    }
    let k = inst.budget;
    let mut ids = Vec::new();
    let mut empty_ids = Vec::new();
    let mut sub_pairs = Vec::new();
    for (i, &(orig, repl)) in inst.pairs.iter().enumerate() {
        if orig.is_empty() {
            empty_ids.push(i + 1);
        } else {
            ids.push(i + 1);
            sub_pairs.push((orig, repl));
        }
    }
    let m = sub_pairs.len();
    if m == 0 {
        return Ok((
            empty_ids.len(),
            ModificationSet::empty(),
            empty_ids,
        ));
    }
    let sub = Instance::new(Mode::Shrink, sub_pairs, k, None)?;
    let (norm, _) = normalize(&sub);

    // locals with an empty replacement: their shrink is a position-free +1
    let e_locals: Vec<usize> = (0..m)
        .filter(|&l| norm.pairs[l].1.is_empty())
        .collect();
    let is_e: Vec<bool> = (0..m).map(|l| norm.pairs[l].1.is_empty()).collect();
    let ecount = e_locals.len();

    let mut points: Vec<i64> = Vec::with_capacity(4 * m);
    for &(o, r) in &norm.pairs {
        points.push(o.a);
        points.push(o.b);
        if !r.is_empty() {
            points.push(r.a);
            points.push(r.b);
        }
    }
    points.sort_unstable();
    points.dedup();
    let np = points.len();
    let rank = |c: i64| points.binary_search(&c).unwrap();

    let lsize = k + 1;
    let bsize = ecount + 1;
    let cell = |p: usize, l: usize, b: usize| (p * lsize + l) * bsize + b;
    if np
        .checked_mul(lsize)
        .and_then(|v| v.checked_mul(bsize))
        .map_or(true, |v| v > 200_000_000)
    {
        return Err(SolverError::LimitExceeded(format!(
            "assistance DAG with {np} points, {lsize} layers, {bsize} bonus slots"
        )));
    }

    // arcs grouped by start point: (end_rank, local, is_repl)
    let mut arcs_from: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); np];
    let mut arcs_into: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); np];
    for l in 0..m {
        let (o, r) = norm.pairs[l];
        arcs_from[rank(o.a)].push((rank(o.b), l, false));
        arcs_into[rank(o.b)].push((rank(o.a), l, false));
        if !r.is_empty() {
            arcs_from[rank(r.a)].push((rank(r.b), l, true));
            arcs_into[rank(r.b)].push((rank(r.a), l, true));
        }
    }
    for list in arcs_from.iter_mut().chain(arcs_into.iter_mut()) {
        list.sort_unstable();
    }

    let mut dp = vec![-1i32; np * lsize * bsize];
    dp[cell(0, 0, 0)] = 0;
    for p in 0..np {
        if p > 0 {
            for l in 0..lsize {
                for b in 0..bsize {
                    let prev = dp[cell(p - 1, l, b)];
                    if prev > dp[cell(p, l, b)] {
                        dp[cell(p, l, b)] = prev;
                    }
                }
            }
        }
        for l in 1..lsize {
            for b in 0..bsize {
                let lower = dp[cell(p, l - 1, b)];
                if lower > dp[cell(p, l, b)] {
                    dp[cell(p, l, b)] = lower;
                }
            }
        }
        for &(q, local, is_repl) in &arcs_from[p] {
            for l in 0..lsize {
                for b in 0..bsize {
                    let cur = dp[cell(p, l, b)];
                    if cur < 0 {
                        continue;
                    }
                    if is_repl {
                        if l + 1 < lsize {
                            let t = cell(q, l + 1, b);
                            if cur + 1 > dp[t] {
                                dp[t] = cur + 1;
                            }
                        }
                    } else {
                        let nb = b + usize::from(is_e[local]);
                        if nb < bsize {
                            let t = cell(q, l, nb);
                            if cur + 1 > dp[t] {
                                dp[t] = cur + 1;
                            }
                        }
                    }
                }
            }
        }
    }

    // best chain plus the bonus of position-free empty shrinks
    let mut best = (0usize, 0usize, 0usize, 0i64); // (r, b, e, total)
    let mut found = false;
    for r in 0..lsize {
        for b in 0..bsize {
            let h = dp[cell(np - 1, r, b)];
            if h < 0 {
                continue;
            }
            let e = (k - r).min(ecount - b);
            let total = h as i64 + e as i64;
            if !found || total > best.3 {
                best = (r, b, e, total);
                found = true;
            }
        }
    }
    assert!(found, "the empty chain is always feasible");
    let (r_star, b_star, e_star, _) = best;

    // reconstruct one maximum path without stored parents
    let mut members: Vec<(usize, bool)> = Vec::new(); // (local, is_repl)
    let (mut p, mut l, mut b) = (np - 1, r_star, b_star);
    let mut v = dp[cell(np - 1, r_star, b_star)];
    'walk: while !(p == 0 && l == 0 && b == 0 && v == 0) {
        if l > 0 && dp[cell(p, l - 1, b)] == v {
            l -= 1;
            continue;
        }
        if p > 0 && dp[cell(p - 1, l, b)] == v {
            p -= 1;
            continue;
        }
        for &(pa, local, is_repl) in &arcs_into[p] {
            if is_repl {
                if l > 0 && dp[cell(pa, l - 1, b)] == v - 1 {
                    members.push((local, true));
                    p = pa;
                    l -= 1;
                    v -= 1;
                    continue 'walk;
                }
            } else {
                let eb = usize::from(is_e[local]);
                if b >= eb && dp[cell(pa, l, b - eb)] == v - 1 {
                    members.push((local, false));
                    p = pa;
                    b -= eb;
                    v -= 1;
                    continue 'walk;
                }
            }
        }
        unreachable!("every reachable state has a predecessor");
    }

    let used_e_blues: Vec<usize> = members
        .iter()
        .filter(|&&(l, is_repl)| !is_repl && is_e[l])
        .map(|&(l, _)| l)
        .collect();
    let bonus: Vec<usize> = e_locals
        .iter()
        .copied()
        .filter(|l| !used_e_blues.contains(l))
        .take(e_star)
        .collect();

    let mut x: Vec<usize> = members
        .iter()
        .filter(|&&(_, is_repl)| is_repl)
        .map(|&(l, _)| ids[l])
        .collect();
    x.extend(bonus.iter().map(|&l| ids[l]));
    let mut independent: Vec<usize> = members.iter().map(|&(l, _)| ids[l]).collect();
    independent.extend(bonus.iter().map(|&l| ids[l]));
    independent.extend(empty_ids.iter().copied());
    independent.sort_unstable();

    let value = members.len() + e_star + empty_ids.len();
    let x = ModificationSet::new(x);
    assert!(x.len() <= k);
    Ok((value, x, independent))
}

/// Minimum independence number after deleting at most k vertices, via the
/// expand embedding with spanning replacements; empty intervals are isolated
/// vertices handled by an exact budget split.
pub fn mvn_alpha(intervals: &[Interval], k: usize) -> Result<(usize, Vec<usize>), SolverError> {
    let n = intervals.len();
    let empties: Vec<usize> = (1..=n)
        .filter(|&i| intervals[i - 1].is_empty())
        .collect();
    let solid: Vec<usize> = (1..=n)
        .filter(|&i| !intervals[i - 1].is_empty())
        .collect();
    let me = empties.len();
    let ns = solid.len();

    let values: Vec<usize> = if ns == 0 {
        vec![0]
    } else {
        let big = 1 + solid
            .iter()
            .map(|&i| intervals[i - 1].a.abs().max(intervals[i - 1].b.abs()))
            .max()
            .unwrap();
        let pairs: Vec<(Interval, Interval)> = solid
            .iter()
            .map(|&i| (intervals[i - 1], Interval::new(-big, big).unwrap()))
            .collect();
        let cap = k.min(ns.saturating_sub(1));
        let emb = Instance::new(Mode::Expand, pairs, cap, None)?;
        alpha_interdict_values(&emb)?
    };
    // deletion value for a budget spent on the solid part
    let v_solid = |b: usize| -> usize {
        if b >= ns {
            0
        } else {
            values[b.min(values.len() - 1)]
        }
    };

    let mut best: Option<(usize, usize)> = None; // (value, empties deleted)
    for ke in 0..=k.min(me) {
        let total = (me - ke) + v_solid(k - ke);
        if best.map_or(true, |(v, _)| total < v) {
            best = Some((total, ke));
        }
    }
    let (value, ke) = best.unwrap();

    let mut deleted: Vec<usize> = empties[..ke].to_vec();
    let kr = k - ke;
    if ns > 0 && kr > 0 {
        if kr >= ns {
            deleted.extend(solid.iter().copied());
        } else {
            let big = 1 + solid
                .iter()
                .map(|&i| intervals[i - 1].a.abs().max(intervals[i - 1].b.abs()))
                .max()
                .unwrap();
            let pairs: Vec<(Interval, Interval)> = solid
                .iter()
                .map(|&i| (intervals[i - 1], Interval::new(-big, big).unwrap()))
                .collect();
            let emb = Instance::new(Mode::Expand, pairs, kr, None)?;
            let (_, x, _) = alpha_interdict(&emb)?;
            deleted.extend(x.indices().iter().map(|&l| solid[l - 1]));
        }
    }
    deleted.sort_unstable();
    Ok((value, deleted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn interdict_merges_two_singletons() {
        let inst = Instance::new(
            Mode::Expand,
            vec![(iv(0, 1), iv(0, 3)), (iv(2, 3), iv(2, 3))],
            1,
            None,
        )
        .unwrap();
        let (v, x, cover) = alpha_interdict(&inst).unwrap();
        assert_eq!(v, 1);
        assert_eq!(x.indices(), &[1]);
        assert_eq!(cover.parts.len(), 1);
    }

    #[test]
    fn interdict_budget_zero_is_alpha() {
        let inst = Instance::new(
            Mode::Expand,
            vec![(iv(0, 1), iv(0, 5)), (iv(2, 3), iv(0, 5)), (iv(4, 5), iv(0, 5))],
            0,
            None,
        )
        .unwrap();
        assert_eq!(alpha_interdict(&inst).unwrap().0, 3);
    }

    #[test]
    fn interdict_spanning_replacements() {
        let inst = Instance::new(
            Mode::Expand,
            vec![
                (iv(0, 1), iv(-10, 10)),
                (iv(2, 3), iv(-10, 10)),
                (iv(4, 5), iv(-10, 10)),
            ],
            1,
            None,
        )
        .unwrap();
        assert_eq!(alpha_interdict(&inst).unwrap().0, 2);
    }

    #[test]
    fn interdict_refuses_growable_empty_original() {
        let inst = Instance::new(Mode::Expand, vec![(iv(2, 2), iv(0, 5))], 1, None).unwrap();
        assert!(matches!(
            alpha_interdict(&inst),
            Err(SolverError::Unsupported(_))
        ));
    }

    #[test]
    fn assist_shrink_frees_space() {
        let inst = Instance::new(
            Mode::Shrink,
            vec![(iv(0, 5), iv(4, 5)), (iv(1, 2), iv(1, 2))],
            1,
            None,
        )
        .unwrap();
        let (v, x, set) = alpha_assist(&inst).unwrap();
        assert_eq!(v, 2);
        assert_eq!(x.indices(), &[1]);
        assert_eq!(set, vec![1, 2]);
    }

    #[test]
    fn assist_three_interval_chain() {
        // shrinking the first two leaves three pairwise-disjoint intervals
        let inst = Instance::new(
            Mode::Shrink,
            vec![
                (iv(0, 5), iv(0, 1)),
                (iv(2, 8), iv(3, 4)),
                (iv(6, 9), iv(6, 9)),
            ],
            2,
            None,
        )
        .unwrap();
        let (v, x, _) = alpha_assist(&inst).unwrap();
        assert_eq!(v, 3);
        assert_eq!(x.indices(), &[1, 2]);
    }

    #[test]
    fn assist_empty_replacement_bonus() {
        // an isolated shrink coexists with an interval spanning its position
        let inst = Instance::new(
            Mode::Shrink,
            vec![(iv(2, 3), iv(2, 2)), (iv(0, 10), iv(0, 10))],
            1,
            None,
        )
        .unwrap();
        let (v, x, set) = alpha_assist(&inst).unwrap();
        assert_eq!(v, 2);
        assert_eq!(x.indices(), &[1]);
        assert_eq!(set, vec![1, 2]);
    }

    #[test]
    fn assist_does_not_double_use_a_pair() {
        let inst = Instance::new(Mode::Shrink, vec![(iv(0, 2), iv(1, 1))], 2, None).unwrap();
        let (v, _, _) = alpha_assist(&inst).unwrap();
        assert_eq!(v, 1);
    }

    #[test]
    fn mvn_alpha_examples() {
        let p3 = [iv(0, 2), iv(1, 4), iv(3, 5)];
        let (v, _) = mvn_alpha(&p3, 1).unwrap();
        assert_eq!(v, 1);
        assert_eq!(mvn_alpha(&p3, 0).unwrap().0, 2);
        let (v, deleted) = mvn_alpha(&p3, 3).unwrap();
        assert_eq!(v, 0);
        assert_eq!(deleted, vec![1, 2, 3]);
    }
}
