//! Generic brute-force graph parameters over bitmask adjacency.
//!
//! Everything here works from the interval-intersection definition alone and
//! shares no code with the dynamic-programming solvers, so agreement between
//! the two is meaningful evidence.

use ivx_core::{Interval, OptValue};

/// Adjacency by bitmask; usable up to 64 vertices, though the exponential
/// parameters are gated much lower by [`crate::OracleLimits`].
#[derive(Debug, Clone)]
pub struct BitGraph {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl BitGraph {
    pub fn from_intervals(intervals: &[Interval]) -> Self {
        let n = intervals.len();
        assert!(n <= 64, "bitmask oracle limited to 64 vertices");
        let mut adj = vec![0u64; n];
        for u in 0..n {
            for v in 0..n {
                if u != v && intervals[u].intersects(&intervals[v]) {
                    adj[u] |= 1 << v;
                }
            }
        }
        BitGraph { n, adj }
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn is_independent(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.adj[v] & mask != 0 {
                return false;
            }
        }
        true
    }

    fn is_clique(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if mask & !(self.adj[v] | (1 << v)) != 0 {
                return false;
            }
        }
        true
    }

    /// Maximum independent set by exhaustive subset scan.
    pub fn alpha(&self) -> (usize, u64) {
        let mut best = (0usize, 0u64);
        for mask in 0..=self.full_mask() {
            let size = mask.count_ones() as usize;
            if size > best.0 && self.is_independent(mask) {
                best = (size, mask);
            }
            if mask == self.full_mask() {
                break;
            }
        }
        best
    }

    /// Maximum clique by exhaustive subset scan.
    pub fn omega(&self) -> (usize, u64) {
        let mut best = (0usize, 0u64);
        for mask in 0..=self.full_mask() {
            let size = mask.count_ones() as usize;
            if size > best.0 && self.is_clique(mask) {
                best = (size, mask);
            }
            if mask == self.full_mask() {
                break;
            }
        }
        best
    }

    /// Number of connected components among the vertices in `alive`.
    pub fn components(&self, alive: u64) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        let mut rest = alive;
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            count += 1;
            let mut stack = 1u64 << start;
            while stack != 0 {
                let v = stack.trailing_zeros() as usize;
                stack &= stack - 1;
                if seen & (1 << v) != 0 {
                    continue;
                }
                seen |= 1 << v;
                stack |= self.adj[v] & alive & !seen;
            }
            rest = alive & !seen;
        }
        count
    }

    /// Scattering number: max over cut sets S with c(G-S) > 1 of c(G-S) - |S|;
    /// minus infinity when no such S exists (complete graphs).
    pub fn scattering(&self) -> (OptValue, u64) {
        let full = self.full_mask();
        let mut best: Option<(i64, u64)> = None;
        for s in 0..=full {
            let alive = full & !s;
            let c = self.components(alive) as i64;
            if c > 1 {
                let val = c - s.count_ones() as i64;
                if best.map_or(true, |(bv, _)| val > bv) {
                    best = Some((val, s));
                }
            }
            if s == full {
                break;
            }
        }
        match best {
            Some((v, s)) => (OptValue::Finite(v), s),
            None => (OptValue::MinusInf, 0),
        }
    }

    /// Largest value of p*c(G-S) - q*|S| over cut sets with c(G-S) > 1.
    pub fn toughness_slack(&self, p: i64, q: i64) -> OptValue {
        let full = self.full_mask();
        let mut best: Option<i64> = None;
        for s in 0..=full {
            let c = self.components(full & !s) as i64;
            if c > 1 {
                let val = p * c - q * s.count_ones() as i64;
                best = Some(best.map_or(val, |b: i64| b.max(val)));
            }
            if s == full {
                break;
            }
        }
        best.map_or(OptValue::MinusInf, OptValue::Finite)
    }

    /// For each vertex set, the possible endpoints of a simple path visiting
    /// exactly that set.
    fn path_endpoints(&self) -> Vec<u64> {
        let full = self.full_mask();
        let mut reach = vec![0u64; (full as usize) + 1];
        for v in 0..self.n {
            reach[1usize << v] = 1 << v;
        }
        for mask in 1..=full {
            let ends = reach[mask as usize];
            if ends == 0 {
                continue;
            }
            let mut m = ends;
            while m != 0 {
                let last = m.trailing_zeros() as usize;
                m &= m - 1;
                let mut nexts = self.adj[last] & !mask;
                while nexts != 0 {
                    let w = nexts.trailing_zeros() as usize;
                    nexts &= nexts - 1;
                    reach[(mask | (1 << w)) as usize] |= 1 << w;
                }
            }
            if mask == full {
                break;
            }
        }
        reach
    }

    pub fn has_hamilton_path(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.path_endpoints()[self.full_mask() as usize] != 0
    }

    /// Hamilton cycle with the degenerate conventions used throughout:
    /// a single vertex counts, and two adjacent vertices count. For n >= 3 a
    /// cycle exists iff some Hamilton path anchored at vertex 0 ends next to 0.
    pub fn has_hamilton_cycle(&self) -> bool {
        match self.n {
            0 | 1 => true,
            2 => self.adj[0] & 0b10 != 0,
            _ => {
                let full = self.full_mask();
                let mut reach = vec![0u64; (full as usize) + 1];
                reach[1usize] = 1; // path {0} ending at 0
                for mask in 1..=full {
                    if mask & 1 == 0 {
                        continue;
                    }
                    let ends = reach[mask as usize];
                    if ends == 0 {
                        continue;
                    }
                    let mut m = ends;
                    while m != 0 {
                        let last = m.trailing_zeros() as usize;
                        m &= m - 1;
                        let mut nexts = self.adj[last] & !mask;
                        while nexts != 0 {
                            let w = nexts.trailing_zeros() as usize;
                            nexts &= nexts - 1;
                            reach[(mask | (1 << w)) as usize] |= 1 << w;
                        }
                    }
                    if mask == full {
                        break;
                    }
                }
                reach[full as usize] & self.adj[0] != 0
            }
        }
    }

    /// Minimum number of vertex-disjoint paths covering all vertices; 1 for
    /// the empty graph by convention.
    pub fn path_cover_number(&self) -> usize {
        if self.n == 0 {
            return 1;
        }
        let full = self.full_mask();
        let reach = self.path_endpoints();
        let mut dp = vec![usize::MAX; (full as usize) + 1];
        dp[0] = 0;
        for mask in 1..=full {
            // iterate submasks containing the lowest set vertex, so every
            // partition is enumerated once
            let low = mask & mask.wrapping_neg();
            let mut sub = mask;
            let mut best = usize::MAX;
            while sub != 0 {
                if sub & low != 0 && reach[sub as usize] != 0 {
                    let rest = dp[(mask & !sub) as usize];
                    if rest != usize::MAX {
                        best = best.min(rest + 1);
                    }
                }
                sub = (sub - 1) & mask;
            }
            dp[mask as usize] = best;
            if mask == full {
                break;
            }
        }
        dp[full as usize]
    }
}

/// Shortest walk length: the minimum number of intervals needed to walk from
/// `s` to `t`, by breadth-first search over the intersection structure.
pub fn dist_brute(intervals: &[Interval], s: i64, t: i64) -> OptValue {
    if s == t {
        return OptValue::Finite(0);
    }
    let n = intervals.len();
    let mut layer: Vec<usize> = (0..n).filter(|&i| intervals[i].contains(s)).collect();
    let mut visited = vec![false; n];
    for &i in &layer {
        visited[i] = true;
    }
    let mut depth = 1i64;
    while !layer.is_empty() {
        if layer.iter().any(|&i| intervals[i].contains(t)) {
            return OptValue::Finite(depth);
        }
        let mut next = Vec::new();
        for &i in &layer {
            for j in 0..n {
                if !visited[j] && intervals[i].intersects(&intervals[j]) {
                    visited[j] = true;
                    next.push(j);
                }
            }
        }
        layer = next;
        depth += 1;
    }
    OptValue::PlusInf
}

/// Bron-Kerbosch maximum clique for graphs too large for the subset scan;
/// interval graphs have linearly many maximal cliques so this stays fast.
pub fn max_clique_large(intervals: &[Interval]) -> usize {
    let n = intervals.len();
    assert!(n <= 192, "large clique oracle limited to 192 vertices");
    const W: usize = 3;
    let idx = |v: usize| (v / 64, 1u64 << (v % 64));
    let mut adj = vec![[0u64; W]; n];
    for u in 0..n {
        for v in 0..n {
            if u != v && intervals[u].intersects(&intervals[v]) {
                let (w, b) = idx(v);
                adj[u][w] |= b;
            }
        }
    }
    fn popcnt(m: &[u64; 3]) -> usize {
        m.iter().map(|x| x.count_ones() as usize).sum()
    }
    fn bk(adj: &[[u64; 3]], r: usize, mut p: [u64; 3], mut x: [u64; 3], best: &mut usize) {
        if popcnt(&p) == 0 && popcnt(&x) == 0 {
            *best = (*best).max(r);
            return;
        }
        if r + popcnt(&p) <= *best {
            return;
        }
        // pivot: vertex in P union X with most neighbours in P
        let mut pivot = None;
        let mut pivot_deg = 0usize;
        for w in 0..3 {
            let mut m = p[w] | x[w];
            while m != 0 {
                let v = w * 64 + m.trailing_zeros() as usize;
                m &= m - 1;
                let deg = (0..3).map(|i| (adj[v][i] & p[i]).count_ones() as usize).sum();
                if pivot.is_none() || deg > pivot_deg {
                    pivot = Some(v);
                    pivot_deg = deg;
                }
            }
        }
        let mut cand = p;
        if let Some(pv) = pivot {
            for w in 0..3 {
                cand[w] &= !adj[pv][w];
            }
        }
        for w in 0..3 {
            while cand[w] != 0 {
                let v = w * 64 + cand[w].trailing_zeros() as usize;
                cand[w] &= cand[w] - 1;
                let mut p2 = [0u64; 3];
                let mut x2 = [0u64; 3];
                for i in 0..3 {
                    p2[i] = p[i] & adj[v][i];
                    x2[i] = x[i] & adj[v][i];
                }
                bk(adj, r + 1, p2, x2, best);
                let (bw, bb) = (v / 64, 1u64 << (v % 64));
                p[bw] &= !bb;
                x[bw] |= bb;
            }
        }
    }
    let mut p = [0u64; W];
    for v in 0..n {
        let (w, b) = idx(v);
        p[w] |= b;
    }
    let mut best = 0;
    bk(&adj, 0, p, [0u64; W], &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn p3_parameters() {
        let ivs = [iv(0, 2), iv(1, 4), iv(3, 5)];
        let g = BitGraph::from_intervals(&ivs);
        assert_eq!(g.alpha().0, 2);
        assert_eq!(g.omega().0, 2);
        assert_eq!(g.scattering().0, OptValue::Finite(1));
        assert!(g.has_hamilton_path());
        assert!(!g.has_hamilton_cycle());
        assert_eq!(g.path_cover_number(), 1);
    }

    #[test]
    fn triangle_parameters() {
        let ivs = [iv(0, 2), iv(1, 3), iv(0, 3)];
        let g = BitGraph::from_intervals(&ivs);
        assert_eq!(g.scattering().0, OptValue::MinusInf);
        assert!(g.has_hamilton_cycle());
        assert_eq!(g.path_cover_number(), 1);
        assert_eq!(max_clique_large(&ivs), 3);
    }

    #[test]
    fn two_isolated_vertices() {
        let ivs = [iv(0, 1), iv(2, 3)];
        let g = BitGraph::from_intervals(&ivs);
        assert_eq!(g.scattering().0, OptValue::Finite(2));
        assert!(!g.has_hamilton_path());
        assert!(!g.has_hamilton_cycle());
        assert_eq!(g.path_cover_number(), 2);
    }

    #[test]
    fn degenerate_hamilton_conventions() {
        let single = BitGraph::from_intervals(&[iv(0, 1)]);
        assert!(single.has_hamilton_path());
        assert!(single.has_hamilton_cycle());
        let k2 = BitGraph::from_intervals(&[iv(0, 2), iv(1, 3)]);
        assert!(k2.has_hamilton_cycle());
    }

    #[test]
    fn dist_examples() {
        assert_eq!(dist_brute(&[iv(0, 10)], 0, 10), OptValue::Finite(1));
        assert_eq!(dist_brute(&[iv(0, 4), iv(3, 10)], 0, 10), OptValue::Finite(2));
        assert_eq!(dist_brute(&[iv(0, 4), iv(6, 10)], 0, 10), OptValue::PlusInf);
        assert_eq!(dist_brute(&[], 5, 5), OptValue::Finite(0));
    }

    #[test]
    fn empty_intervals_are_invisible() {
        let ivs = [iv(0, 4), iv(2, 2), iv(3, 8)];
        let g = BitGraph::from_intervals(&ivs);
        assert_eq!(g.alpha().0, 2); // the empty vertex plus one real interval
        assert_eq!(g.components(g.full_mask()), 2);
        assert_eq!(dist_brute(&ivs, 0, 8), OptValue::Finite(2));
    }

    #[test]
    fn bron_kerbosch_matches_subset_scan() {
        let ivs = [iv(0, 3), iv(1, 4), iv(2, 5), iv(5, 9), iv(6, 7), iv(8, 12)];
        let g = BitGraph::from_intervals(&ivs);
        assert_eq!(g.omega().0, max_clique_large(&ivs));
    }
}
