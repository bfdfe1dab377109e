//! Shortest-path assistance and interdiction in the shrink/expand model.
//!
//! Both problems first clip every interval to [s, t] and translate s to 0.
//! Assistance is a budgeted shortest path over rightmost-reach arcs.
//! Interdiction runs a disconnection sweep, then a dynamic program over
//! states (x, y, d): x is the rightmost point at walk distance d-1 and y the
//! rightmost at distance d for the surviving intervals, with replacement
//! intervals carried at weight k+1 so that the surviving-weight threshold
//! rules out deleting any replacement group.

use crate::error::SolverError;
use ivx_core::{Instance, Interval, Mode, ModificationSet, OptValue, SpEndpoints};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpAssistWitness {
    pub x: ModificationSet,
    /// Vertices of the walk in order.
    pub walk: Vec<usize>,
}

const NEG: i64 = i64::MIN / 4;

fn clipped(intervals: &[Interval], s: i64, t: i64) -> Vec<Interval> {
    intervals
        .iter()
        .map(|iv| {
            let c = iv.clip(s, t);
            if c.is_empty() {
                Interval::empty(0)
            } else {
                Interval::new(c.a - s, c.b - s).unwrap()
            }
        })
        .collect()
}

/// Minimum walk length from s to t after expanding at most k intervals.
pub fn sp_assist(inst: &Instance) -> Result<(OptValue, SpAssistWitness), SolverError> {
    if inst.mode != Mode::Expand {
        return Err(SolverError::ModeMismatch {
            expected: Mode::Expand,
            problem: "sp-assist",
        });
    }
    let SpEndpoints { s, t } = inst.sp.ok_or(SolverError::MissingEndpoints("sp-assist"))?;
    let k = inst.budget;
    let orig = clipped(&inst.originals(), s, t);
    let repl = clipped(&inst.replacements(), s, t);
    let big_t = t - s;

    let mut points: Vec<i64> = vec![0, big_t];
    for iv in orig.iter().chain(repl.iter()).filter(|iv| !iv.is_empty()) {
        points.push(iv.a);
        points.push(iv.b);
    }
    points.sort_unstable();
    points.dedup();
    let rank = |c: i64| points.binary_search(&c).expect("point registered");
    let np = points.len();

    // rightmost reach via one interval containing each point, by a sweep
    let reach_table = |list: &[Interval]| -> Vec<Option<(i64, usize)>> {
        let mut order: Vec<usize> = (0..list.len()).filter(|&i| !list[i].is_empty()).collect();
        order.sort_by_key(|&i| (list[i].a, i));
        let mut out = vec![None; np];
        let mut ptr = 0;
        let mut best: Option<(i64, usize)> = None;
        for (pi, &p) in points.iter().enumerate() {
            while ptr < order.len() && list[order[ptr]].a <= p {
                let i = order[ptr];
                if best.map_or(true, |(b, bi)| list[i].b > b || (list[i].b == b && i < bi)) {
                    best = Some((list[i].b, i));
                }
                ptr += 1;
            }
            if let Some((b, i)) = best {
                if b >= p {
                    out[pi] = Some((b, i));
                }
            }
        }
        out
    };
    let reach_orig = reach_table(&orig);
    let reach_repl = reach_table(&repl);

    // f[p][j]: fewest intervals to reach point p using exactly j expansions
    let mut f = vec![vec![i64::MAX; k + 1]; np];
    let mut parent: Vec<Vec<Option<(usize, usize, usize, bool)>>> = vec![vec![None; k + 1]; np];
    for j in 0..=k {
        f[rank(0)][j] = 0;
    }
    for p in 0..np {
        for j in 0..=k {
            let cur = f[p][j];
            if cur == i64::MAX {
                continue;
            }
            if let Some((b, i)) = reach_orig[p] {
                if b > points[p] {
                    let q = rank(b);
                    if cur + 1 < f[q][j] {
                        f[q][j] = cur + 1;
                        parent[q][j] = Some((p, j, i, false));
                    }
                }
            }
            if j < k {
                if let Some((b, i)) = reach_repl[p] {
                    if b > points[p] {
                        let q = rank(b);
                        if cur + 1 < f[q][j + 1] {
                            f[q][j + 1] = cur + 1;
                            parent[q][j + 1] = Some((p, j, i, true));
                        }
                    }
                }
            }
        }
    }

    let tr = rank(big_t);
    let best_j = (0..=k).min_by_key(|&j| (f[tr][j], j)).unwrap();
    if f[tr][best_j] == i64::MAX {
        return Ok((
            OptValue::PlusInf,
            SpAssistWitness {
                x: ModificationSet::empty(),
                walk: vec![],
            },
        ));
    }
    let mut walk = Vec::new();
    let mut x = Vec::new();
    let (mut p, mut j) = (tr, best_j);
    while let Some((pp, pj, vertex, expensive)) = parent[p][j] {
        walk.push(vertex + 1);
        if expensive {
            x.push(vertex + 1);
        }
        p = pp;
        j = pj;
    }
    walk.reverse();
    debug_assert!(p == rank(0));
    Ok((
        OptValue::Finite(f[tr][best_j]),
        SpAssistWitness {
            x: ModificationSet::new(x),
            walk,
        },
    ))
}

/// Coverage sweep over elementary segments: a segment is breakable when no
/// replacement covers it and at most k originals do. Returns the covering
/// originals of the leftmost breakable segment.
fn breakable_segment(
    orig: &[Interval],
    repl: Option<&[Interval]>,
    k: usize,
    big_t: i64,
) -> Option<Vec<usize>> {
    let mut coords = vec![0, big_t];
    for iv in orig.iter().filter(|iv| !iv.is_empty()) {
        coords.push(iv.a);
        coords.push(iv.b);
    }
    if let Some(repl) = repl {
        for iv in repl.iter().filter(|iv| !iv.is_empty()) {
            coords.push(iv.a);
            coords.push(iv.b);
        }
    }
    coords.sort_unstable();
    coords.dedup();
    let nseg = coords.len() - 1;
    let rank = |c: i64| coords.binary_search(&c).unwrap();
    let mut cover_o = vec![0i64; nseg + 1];
    let mut cover_r = vec![0i64; nseg + 1];
    for iv in orig.iter().filter(|iv| !iv.is_empty()) {
        cover_o[rank(iv.a)] += 1;
        cover_o[rank(iv.b)] -= 1;
    }
    if let Some(repl) = repl {
        for iv in repl.iter().filter(|iv| !iv.is_empty()) {
            cover_r[rank(iv.a)] += 1;
            cover_r[rank(iv.b)] -= 1;
        }
    }
    let mut co = 0i64;
    let mut cr = 0i64;
    for seg in 0..nseg {
        co += cover_o[seg];
        cr += cover_r[seg];
        if cr == 0 && co as usize <= k {
            let (u, v) = (coords[seg], coords[seg + 1]);
            let witness: Vec<usize> = orig
                .iter()
                .enumerate()
                .filter(|(_, iv)| !iv.is_empty() && iv.a <= u && iv.b >= v)
                .map(|(i, _)| i + 1)
                .collect();
            return Some(witness);
        }
    }
    None
}

/// The interdiction DP over weighted non-empty intervals. Returns the optimal
/// distance and, per item, whether it survives in the optimal kept set.
fn interdict_core(items: &[(Interval, i64)], slack: i64) -> (i64, Vec<bool>) {
    let total: i64 = items.iter().map(|&(_, w)| w).sum();
    let threshold = total - slack;
    let mut points: Vec<i64> = items.iter().flat_map(|&(iv, _)| [iv.a, iv.b]).collect();
    points.sort_unstable();
    points.dedup();
    let np = points.len();
    let rank = |c: i64| points.binary_search(&c).unwrap();

    // cnt[x][y]: weight of items with a <= P[x] and b <= P[y]
    // ends[x][y]: number of items with a <= P[x] and b == P[y]
    let mut cnt = vec![0i64; np * np];
    let mut ends = vec![0u32; np * np];
    for &(iv, w) in items {
        cnt[rank(iv.a) * np + rank(iv.b)] += w;
        ends[rank(iv.a) * np + rank(iv.b)] += 1;
    }
    // ends: prefix over x only (exact-end counts per y)
    for x in 1..np {
        for y in 0..np {
            ends[x * np + y] += ends[(x - 1) * np + y];
        }
    }
    // cnt: 2D prefix, rows then columns
    for x in 0..np {
        for y in 1..np {
            cnt[x * np + y] += cnt[x * np + y - 1];
        }
    }
    for x in 1..np {
        for y in 0..np {
            cnt[x * np + y] += cnt[(x - 1) * np + y];
        }
    }
    debug_assert_eq!(points[0], 0);
    let weight_le_x = |x: usize| cnt[x * np + np - 1];
    let tr = np - 1;

    // rolling layers with sqrt-spaced checkpoints for the backtrack
    let dmax = items.len();
    let every = ((dmax as f64).sqrt().ceil() as usize).max(1);
    let mut layer1 = vec![NEG; np * np];
    for y in 1..np {
        if ends[y] > 0 {
            layer1[y] = cnt[y];
        }
    }
    let advance = |prev: &[i64]| -> (Vec<i64>, bool) {
        let mut cur = vec![NEG; np * np];
        let mut any = false;
        for x in 1..np {
            let ws: Vec<usize> = (0..x).filter(|&w| prev[w * np + x] > NEG).collect();
            if ws.is_empty() {
                continue;
            }
            for y in x + 1..np {
                let level = ends[x * np + y];
                if level == 0 {
                    continue;
                }
                let mut best = NEG;
                for &w in &ws {
                    if ends[w * np + y] >= level {
                        break; // no item ending at y starts in (w, x]
                    }
                    let cand = prev[w * np + x] - cnt[w * np + y];
                    if cand > best {
                        best = cand;
                    }
                }
                if best > NEG {
                    cur[x * np + y] = best + cnt[x * np + y];
                    any = true;
                }
            }
        }
        (cur, any)
    };

    let feasible_x = |layer: &[i64]| -> Option<usize> {
        (0..tr).find(|&x| {
            layer[x * np + tr] > NEG && layer[x * np + tr] + total - weight_le_x(x) >= threshold
        })
    };

    let mut checkpoints: Vec<(usize, Vec<i64>)> = vec![(1, layer1.clone())];
    let mut best: Option<(usize, usize)> = None; // (d, x)
    if tr > 0 {
        if let Some(x) = feasible_x(&layer1) {
            best = Some((1, x));
        }
    }
    let mut cur = layer1;
    let mut d = 1;
    while d < dmax {
        let (next, any) = advance(&cur);
        if !any {
            break;
        }
        d += 1;
        cur = next;
        if let Some(x) = feasible_x(&cur) {
            best = Some((d, x));
        }
        if d % every == 0 {
            checkpoints.push((d, cur.clone()));
        }
    }

    let (d_opt, x_opt) = best.expect("the undamaged interval set always satisfies the threshold");

    // recover the chain of critical points by replaying checkpoint segments
    let layer_at = |target: usize, checkpoints: &[(usize, Vec<i64>)]| -> Vec<i64> {
        let (mut at, mut layer) = checkpoints
            .iter()
            .rev()
            .find(|(dd, _)| *dd <= target)
            .map(|(dd, l)| (*dd, l.clone()))
            .expect("layer 1 is always checkpointed");
        while at < target {
            layer = advance(&layer).0;
            at += 1;
        }
        layer
    };
    let mut chain = vec![rank(points[tr])]; // y_d = t
    let mut xcur = x_opt;
    let mut dd = d_opt;
    chain.push(xcur);
    while dd >= 2 {
        let prev = layer_at(dd - 1, &checkpoints);
        let here = layer_at(dd, &checkpoints);
        let y = chain[chain.len() - 2];
        let x = xcur;
        let value = here[x * np + y];
        let level = ends[x * np + y];
        let w = (0..x)
            .find(|&w| {
                ends[w * np + y] < level
                    && prev[w * np + x] > NEG
                    && prev[w * np + x] - cnt[w * np + y] + cnt[x * np + y] == value
            })
            .expect("every finite state has a predecessor");
        chain.push(w);
        xcur = w;
        dd -= 1;
    }
    chain.reverse(); // now 0 = p_0 < p_1 < ... < p_d = t as ranks
    debug_assert_eq!(chain[0], 0);
    debug_assert_eq!(chain.len(), d_opt + 1);

    // classify items: kept when counted by some chain window
    let kept: Vec<bool> = items
        .iter()
        .map(|&(iv, _)| {
            let (ra, rb) = (rank(iv.a), rank(iv.b));
            if ra > chain[d_opt - 1] {
                return true; // right of the last critical point: never deleted
            }
            // find the window p_{j-1} < a <= p_j (level-1 window is a <= 0)
            let j = (0..d_opt)
                .find(|&j| ra <= chain[j] && (j == 0 || ra > chain[j - 1]))
                .expect("chain windows partition the points");
            rb <= chain[j + 1]
        })
        .collect();
    (d_opt as i64, kept)
}

/// Maximum over shrink sets of the s-t walk length; plus infinity when the
/// interdictor can disconnect s from t.
pub fn sp_interdict(inst: &Instance) -> Result<(OptValue, ModificationSet), SolverError> {
    if inst.mode != Mode::Shrink {
        return Err(SolverError::ModeMismatch {
            expected: Mode::Shrink,
            problem: "sp-interdict",
        });
    }
    let SpEndpoints { s, t } = inst
        .sp
        .ok_or(SolverError::MissingEndpoints("sp-interdict"))?;
    let k = inst.budget;
    let orig = clipped(&inst.originals(), s, t);
    let repl = clipped(&inst.replacements(), s, t);
    let big_t = t - s;

    if let Some(covering) = breakable_segment(&orig, Some(&repl), k, big_t) {
        return Ok((OptValue::PlusInf, ModificationSet::new(covering)));
    }

    let mut items: Vec<(Interval, i64)> = Vec::new();
    let mut orig_item_of_pair: Vec<Option<usize>> = vec![None; inst.n()];
    for (i, iv) in orig.iter().enumerate() {
        if !iv.is_empty() {
            orig_item_of_pair[i] = Some(items.len());
            items.push((*iv, 1));
        }
    }
    for iv in repl.iter().filter(|iv| !iv.is_empty()) {
        items.push((*iv, k as i64 + 1));
    }
    let (d_opt, kept) = interdict_core(&items, k as i64);
    let x: Vec<usize> = (1..=inst.n())
        .filter(|&i| orig_item_of_pair[i - 1].map_or(false, |it| !kept[it]))
        .collect();
    debug_assert!(x.len() <= k);
    Ok((OptValue::Finite(d_opt), ModificationSet::new(x)))
}

/// Most-vital-nodes for shortest path over a plain interval multiset: the
/// maximum walk length after deleting at most k intervals.
pub fn sp_interdict_multiset(
    intervals: &[Interval],
    k: usize,
    s: i64,
    t: i64,
) -> Result<OptValue, SolverError> {
    if s >= t {
        return Err(SolverError::Unsupported(format!(
            "requires s < t, got s={s}, t={t}"
        )));
    }
    let clip = clipped(intervals, s, t);
    let big_t = t - s;
    if breakable_segment(&clip, None, k, big_t).is_some() {
        return Ok(OptValue::PlusInf);
    }
    let items: Vec<(Interval, i64)> = clip
        .iter()
        .filter(|iv| !iv.is_empty())
        .map(|&iv| (iv, 1))
        .collect();
    let (d_opt, _) = interdict_core(&items, k as i64);
    Ok(OptValue::Finite(d_opt))
}

/// Most-vital-nodes for shortest path, answered through both implemented
/// routes (the direct multiset program and the shrink-model embedding with
/// empty replacements), which must agree.
pub fn mvn_shortest_path(
    intervals: &[Interval],
    k: usize,
    s: i64,
    t: i64,
) -> Result<(OptValue, ModificationSet), SolverError> {
    let direct = sp_interdict_multiset(intervals, k, s, t)?;
    let pairs = intervals
        .iter()
        .map(|&iv| {
            if iv.is_empty() {
                (iv, iv)
            } else {
                (iv, Interval::empty(iv.a))
            }
        })
        .collect();
    let inst = Instance::new(Mode::Shrink, pairs, k, Some(SpEndpoints { s, t }))?;
    let (embedded, x) = sp_interdict(&inst)?;
    assert_eq!(
        direct, embedded,
        "multiset and embedding routes disagree on the most-vital-nodes value"
    );
    Ok((direct, x))
}

/// Internal consistency check of the interdiction table: recomputes every
/// finite state of every layer from the previous layer by a fresh scan over
/// all predecessors and verifies the stored values, including the base layer
/// against its definition. Returns the number of finite cells checked.
pub fn validate_interdict_decomposition(inst: &Instance) -> Result<usize, String> {
    if inst.mode != Mode::Shrink {
        return Err("requires shrink mode".into());
    }
    let SpEndpoints { s, t } = inst.sp.ok_or("requires endpoints")?;
    let k = inst.budget;
    let orig = clipped(&inst.originals(), s, t);
    let repl = clipped(&inst.replacements(), s, t);
    if breakable_segment(&orig, Some(&repl), k, t - s).is_some() {
        return Ok(0);
    }
    let mut items: Vec<(Interval, i64)> = Vec::new();
    for iv in orig.iter().filter(|iv| !iv.is_empty()) {
        items.push((*iv, 1));
    }
    for iv in repl.iter().filter(|iv| !iv.is_empty()) {
        items.push((*iv, k as i64 + 1));
    }
    let mut points: Vec<i64> = items.iter().flat_map(|&(iv, _)| [iv.a, iv.b]).collect();
    points.sort_unstable();
    points.dedup();
    let np = points.len();
    let rank = |c: i64| points.binary_search(&c).unwrap();

    // reference tables straight from the definitions
    let weight_between = |w: usize, x: usize, ylim: usize| -> i64 {
        items
            .iter()
            .filter(|&&(iv, _)| {
                rank(iv.a) > w && rank(iv.a) <= x && rank(iv.b) <= ylim
            })
            .map(|&(_, wt)| wt)
            .sum()
    };
    let valid = |w: usize, x: usize, y: usize| -> bool {
        items
            .iter()
            .any(|&(iv, _)| rank(iv.a) > w && rank(iv.a) <= x && rank(iv.b) == y)
    };

    // full forward tables; the base layer straight from its definition:
    // reachable in one step iff some item starts at 0 and ends exactly at y
    let mut layers: Vec<Vec<i64>> = Vec::new();
    let mut base = vec![NEG; np * np];
    for y in 1..np {
        if items.iter().any(|&(iv, _)| rank(iv.a) == 0 && rank(iv.b) == y) {
            base[y] = items
                .iter()
                .filter(|&&(iv, _)| rank(iv.a) == 0 && rank(iv.b) <= y)
                .map(|&(_, wt)| wt)
                .sum();
        }
    }
    layers.push(base);
    let mut checked = layers[0].iter().filter(|&&v| v > NEG).count();
    loop {
        let prev = layers.last().unwrap();
        let mut cur = vec![NEG; np * np];
        let mut any = false;
        for x in 1..np {
            for y in x + 1..np {
                let mut best = NEG;
                for w in 0..x {
                    if prev[w * np + x] > NEG && valid(w, x, y) {
                        best = best.max(prev[w * np + x] + weight_between(w, x, y));
                    }
                }
                if best > NEG {
                    cur[x * np + y] = best;
                    any = true;
                    checked += 1;
                }
            }
        }
        if !any || layers.len() >= items.len() {
            break;
        }
        layers.push(cur);
    }

    // every finite cell on layer d >= 2 must be explained by a predecessor
    // with exact value equality
    for d in 1..layers.len() {
        for x in 1..np {
            for y in x + 1..np {
                let v = layers[d][x * np + y];
                if v == NEG {
                    continue;
                }
                let explained = (0..x).any(|w| {
                    layers[d - 1][w * np + x] > NEG
                        && valid(w, x, y)
                        && layers[d - 1][w * np + x] + weight_between(w, x, y) == v
                });
                if !explained {
                    return Err(format!("cell (x={x}, y={y}, d={}) has no predecessor", d + 1));
                }
            }
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    fn expand(pairs: Vec<(Interval, Interval)>, k: usize, s: i64, t: i64) -> Instance {
        Instance::new(Mode::Expand, pairs, k, Some(SpEndpoints { s, t })).unwrap()
    }

    fn shrink(pairs: Vec<(Interval, Interval)>, k: usize, s: i64, t: i64) -> Instance {
        Instance::new(Mode::Shrink, pairs, k, Some(SpEndpoints { s, t })).unwrap()
    }

    #[test]
    fn assist_example_two_expansions() {
        let inst = expand(
            vec![(iv(0, 4), iv(0, 5)), (iv(6, 10), iv(5, 10))],
            2,
            0,
            10,
        );
        let (v, w) = sp_assist(&inst).unwrap();
        assert_eq!(v, OptValue::Finite(2));
        assert_eq!(w.x.indices(), &[1, 2]);
        assert_eq!(w.walk, vec![1, 2]);
    }

    #[test]
    fn assist_budget_zero_is_plain_distance() {
        let inst = expand(
            vec![(iv(0, 4), iv(0, 10)), (iv(3, 10), iv(3, 10))],
            0,
            0,
            10,
        );
        assert_eq!(sp_assist(&inst).unwrap().0, OptValue::Finite(2));
    }

    #[test]
    fn assist_single_cover() {
        let inst = expand(vec![(iv(0, 10), iv(0, 12))], 1, 0, 10);
        let (v, w) = sp_assist(&inst).unwrap();
        assert_eq!(v, OptValue::Finite(1));
        assert!(w.x.is_empty());
    }

    #[test]
    fn assist_unreachable() {
        let inst = expand(vec![(iv(0, 4), iv(0, 5))], 1, 0, 10);
        assert_eq!(sp_assist(&inst).unwrap().0, OptValue::PlusInf);
    }

    #[test]
    fn interdict_example_forces_detour() {
        let inst = shrink(
            vec![
                (iv(0, 4), iv(0, 4)),
                (iv(3, 10), iv(3, 10)),
                (iv(0, 10), iv(5, 6)),
            ],
            1,
            0,
            10,
        );
        let (v, x) = sp_interdict(&inst).unwrap();
        assert_eq!(v, OptValue::Finite(2));
        assert_eq!(x.indices(), &[3]);
    }

    #[test]
    fn interdict_budget_zero_is_plain_distance() {
        let inst = shrink(
            vec![(iv(0, 4), iv(1, 2)), (iv(3, 10), iv(4, 5))],
            0,
            0,
            10,
        );
        let (v, x) = sp_interdict(&inst).unwrap();
        assert_eq!(v, OptValue::Finite(2));
        assert!(x.is_empty());
    }

    #[test]
    fn interdict_disconnects_with_empty_replacement() {
        let inst = shrink(vec![(iv(0, 10), iv(5, 5))], 1, 0, 10);
        let (v, x) = sp_interdict(&inst).unwrap();
        assert_eq!(v, OptValue::PlusInf);
        assert_eq!(x.indices(), &[1]);
    }

    #[test]
    fn multiset_examples() {
        let m = [iv(0, 4), iv(3, 10), iv(0, 10)];
        assert_eq!(
            sp_interdict_multiset(&m, 1, 0, 10).unwrap(),
            OptValue::Finite(2)
        );
        assert_eq!(
            sp_interdict_multiset(&m, 0, 0, 10).unwrap(),
            OptValue::Finite(1)
        );
        assert_eq!(sp_interdict_multiset(&m, 3, 0, 10).unwrap(), OptValue::PlusInf);
    }

    #[test]
    fn mvn_routes_agree() {
        let m = [iv(0, 4), iv(3, 10), iv(0, 10)];
        let (v, x) = mvn_shortest_path(&m, 1, 0, 10).unwrap();
        assert_eq!(v, OptValue::Finite(2));
        assert_eq!(x.indices(), &[3]);
    }

    #[test]
    fn clipping_translates_and_collapses() {
        // an interval touching [s, t] in one point is useless and collapses
        let c = clipped(&[iv(-5, 0), iv(-2, 7), iv(9, 20)], 0, 10);
        assert!(c[0].is_empty());
        assert_eq!(c[1], iv(0, 7));
        assert_eq!(c[2], iv(9, 10));
    }

    #[test]
    fn decomposition_validator_runs() {
        let inst = shrink(
            vec![
                (iv(0, 4), iv(0, 4)),
                (iv(3, 10), iv(3, 10)),
                (iv(0, 10), iv(5, 6)),
            ],
            1,
            0,
            10,
        );
        assert!(validate_interdict_decomposition(&inst).unwrap() > 0);
    }
}
