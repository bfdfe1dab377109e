//! Static interval-graph parameters: independence number, clique number,
//! clique cover, walk distance, scattering number, and the Hamiltonicity
//! parameters derived from it. Vertices are 1-based indices into the interval
//! list; empty intervals are isolated vertices.

use crate::scattering;
use ivx_core::{Instance, Interval, Mode, OptValue};

#[derive(Debug, Clone)]
pub struct IntervalGraph {
    intervals: Vec<Interval>,
}

/// A clique cover with its stabbing points. Parts holding a single
/// empty-interval vertex carry no point (the vertex is isolated); every other
/// part is certified by a coordinate contained in all of its members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    pub parts: Vec<Vec<usize>>,
    pub points: Vec<Option<i64>>,
}

impl IntervalGraph {
    pub fn new(intervals: Vec<Interval>) -> Self {
        IntervalGraph { intervals }
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// 1-based adjacency.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.intervals[u - 1].intersects(&self.intervals[v - 1])
    }

    /// Maximum independent set: greedy by earliest endpoint over the
    /// non-empty intervals, plus every empty-interval vertex.
    pub fn alpha(&self) -> (usize, Vec<usize>) {
        let mut witness: Vec<usize> = self
            .intervals
            .iter()
            .enumerate()
            .filter(|(_, iv)| iv.is_empty())
            .map(|(i, _)| i + 1)
            .collect();
        let mut order: Vec<usize> = (0..self.n())
            .filter(|&i| !self.intervals[i].is_empty())
            .collect();
        order.sort_by_key(|&i| (self.intervals[i].b, self.intervals[i].a, i));
        let mut frontier = i64::MIN;
        for &i in &order {
            if self.intervals[i].a > frontier || frontier == i64::MIN {
                witness.push(i + 1);
                frontier = self.intervals[i].b;
            }
        }
        witness.sort_unstable();
        (witness.len(), witness)
    }

    /// Maximum clique size via the max point-coverage sweep. Returns the size,
    /// a witness point (None when no non-empty interval exists), and the
    /// clique members.
    pub fn omega(&self) -> (usize, Option<i64>, Vec<usize>) {
        match max_coverage_point(&self.intervals) {
            Some((point, size)) => {
                let members: Vec<usize> = self
                    .intervals
                    .iter()
                    .enumerate()
                    .filter(|(_, iv)| iv.contains(point))
                    .map(|(i, _)| i + 1)
                    .collect();
                debug_assert_eq!(members.len(), size);
                (size, Some(point), members)
            }
            None => {
                if self.n() == 0 {
                    (0, None, vec![])
                } else {
                    (1, None, vec![1])
                }
            }
        }
    }

    /// Minimum clique cover. On interval graphs this equals the independence
    /// number; the greedy independent set's endpoints serve as cover points
    /// and every non-empty interval contains the first such point it meets.
    pub fn kappa(&self) -> (usize, CliqueCover) {
        let (_, independent) = self.alpha();
        let mut points: Vec<i64> = independent
            .iter()
            .filter(|&&v| !self.intervals[v - 1].is_empty())
            .map(|&v| self.intervals[v - 1].b)
            .collect();
        points.sort_unstable();

        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
        let mut cover_points: Vec<Option<i64>> = points.iter().map(|&p| Some(p)).collect();
        for (i, iv) in self.intervals.iter().enumerate() {
            if iv.is_empty() {
                parts.push(vec![i + 1]);
                cover_points.push(None);
            } else {
                let at = points
                    .iter()
                    .position(|&p| iv.contains(p))
                    .expect("every non-empty interval contains a greedy endpoint");
                parts[at].push(i + 1);
            }
        }
        debug_assert!(parts.iter().all(|p| !p.is_empty()));
        (parts.len(), CliqueCover { parts, points: cover_points })
    }

    /// Scattering number with a cut-set witness, computed by running the
    /// scattering-assistance solver with budget zero.
    pub fn scattering(&self) -> (OptValue, Vec<usize>) {
        let pairs = self.intervals.iter().map(|&iv| (iv, iv)).collect();
        let inst =
            Instance::new(Mode::Shrink, pairs, 0, None).expect("identity pairs are valid");
        let (value, witness) =
            scattering::scat_assist(&inst).expect("budget-zero instance is in contract");
        debug_assert!(witness.x.is_empty());
        (value, witness.s)
    }

    pub fn has_hamilton_path(&self) -> bool {
        self.scattering().0 <= OptValue::Finite(1)
    }

    pub fn has_hamilton_cycle(&self) -> bool {
        self.scattering().0 <= OptValue::Finite(0)
    }

    /// Path cover number: max(sc(G), 1), with complete graphs (sc = -inf)
    /// covered by a single Hamilton path.
    pub fn path_cover_number(&self) -> usize {
        match self.scattering().0 {
            OptValue::Finite(v) if v > 1 => v as usize,
            _ => 1,
        }
    }

    /// Connected components as sorted lists of 1-based vertices; empty
    /// intervals form singletons.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(&self.intervals)
    }
}

/// Point of maximum coverage over non-empty intervals: returns the smallest
/// maximizing endpoint coordinate and the coverage there.
pub fn max_coverage_point(intervals: &[Interval]) -> Option<(i64, usize)> {
    let mut events: Vec<(i64, i32)> = Vec::new();
    for iv in intervals.iter().filter(|iv| !iv.is_empty()) {
        events.push((iv.a, 1));
        events.push((iv.b, -1));
    }
    if events.is_empty() {
        return None;
    }
    // at a shared coordinate, opens count before closes: closed intervals
    events.sort_by_key(|&(c, d)| (c, -d));
    let mut best: Option<(i64, usize)> = None;
    let mut cur = 0i64;
    let mut i = 0;
    while i < events.len() {
        let coord = events[i].0;
        while i < events.len() && events[i].0 == coord && events[i].1 == 1 {
            cur += 1;
            i += 1;
        }
        if best.map_or(true, |(_, b)| cur as usize > b) {
            best = Some((coord, cur as usize));
        }
        while i < events.len() && events[i].0 == coord {
            cur -= 1;
            i += 1;
        }
    }
    best
}

/// Minimum number of intervals needed to walk from s to t, with the chosen
/// walk as 1-based indices. dist(s, s) = 0 by convention.
pub fn dist(intervals: &[Interval], s: i64, t: i64) -> (OptValue, Vec<usize>) {
    if s == t {
        return (OptValue::Finite(0), vec![]);
    }
    let (lo, hi) = if s < t { (s, t) } else { (t, s) };
    let mut order: Vec<usize> = (0..intervals.len())
        .filter(|&i| !intervals[i].is_empty())
        .collect();
    order.sort_by_key(|&i| (intervals[i].a, i));

    let mut cur = lo;
    let mut walk = Vec::new();
    let mut ptr = 0;
    let mut reach = i64::MIN;
    let mut reach_idx = usize::MAX;
    loop {
        while ptr < order.len() && intervals[order[ptr]].a <= cur {
            let i = order[ptr];
            if intervals[i].b > reach || (intervals[i].b == reach && i < reach_idx) {
                reach = intervals[i].b;
                reach_idx = i;
            }
            ptr += 1;
        }
        if reach < cur || reach_idx == usize::MAX {
            return (OptValue::PlusInf, vec![]);
        }
        if reach == cur {
            // the best interval ends exactly here: no progress possible
            return (OptValue::PlusInf, vec![]);
        }
        walk.push(reach_idx + 1);
        cur = reach;
        if cur >= hi {
            return (OptValue::Finite(walk.len() as i64), walk);
        }
    }
}

/// Connected components of an interval list: 1-based, each sorted.
pub fn components_of(intervals: &[Interval]) -> Vec<Vec<usize>> {
    let mut comps: Vec<Vec<usize>> = intervals
        .iter()
        .enumerate()
        .filter(|(_, iv)| iv.is_empty())
        .map(|(i, _)| vec![i + 1])
        .collect();
    let mut order: Vec<usize> = (0..intervals.len())
        .filter(|&i| !intervals[i].is_empty())
        .collect();
    order.sort_by_key(|&i| (intervals[i].a, intervals[i].b, i));
    let mut cur: Vec<usize> = Vec::new();
    let mut max_b = i64::MIN;
    for &i in &order {
        if cur.is_empty() || intervals[i].a <= max_b {
            cur.push(i + 1);
            max_b = max_b.max(intervals[i].b);
        } else {
            cur.sort_unstable();
            comps.push(std::mem::take(&mut cur));
            cur.push(i + 1);
            max_b = intervals[i].b;
        }
    }
    if !cur.is_empty() {
        cur.sort_unstable();
        comps.push(cur);
    }
    comps.sort();
    comps
}

/// True when every pair of distinct vertices is adjacent.
pub fn is_complete(intervals: &[Interval]) -> bool {
    let n = intervals.len();
    for u in 0..n {
        for v in u + 1..n {
            if !intervals[u].intersects(&intervals[v]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    fn graph(list: &[(i64, i64)]) -> IntervalGraph {
        IntervalGraph::new(list.iter().map(|&(a, b)| iv(a, b)).collect())
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(graph(&[(0, 1), (2, 3)]).alpha().0, 2);
        assert_eq!(graph(&[(0, 3), (1, 2)]).alpha().0, 1);
    }

    #[test]
    fn omega_examples() {
        let (w, p, members) = graph(&[(0, 3), (1, 4), (2, 5)]).omega();
        assert_eq!(w, 3);
        assert_eq!(p, Some(2));
        assert_eq!(members, vec![1, 2, 3]);
        assert_eq!(graph(&[]).omega().0, 0);
        // all-empty graph still has cliques of size one
        let g = IntervalGraph::new(vec![Interval::empty(0), Interval::empty(1)]);
        assert_eq!(g.omega().0, 1);
    }

    #[test]
    fn kappa_is_certified() {
        let g = graph(&[(0, 3), (1, 4), (2, 5), (6, 8), (7, 9)]);
        let (k, cover) = g.kappa();
        assert_eq!(k, g.alpha().0);
        let mut seen = vec![false; g.n()];
        for (part, point) in cover.parts.iter().zip(&cover.points) {
            assert!(!part.is_empty());
            for &v in part {
                assert!(!seen[v - 1]);
                seen[v - 1] = true;
                if let Some(p) = point {
                    assert!(g.intervals()[v - 1].contains(*p));
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn dist_examples() {
        let (d, w) = dist(&[iv(0, 10)], 0, 10);
        assert_eq!(d, OptValue::Finite(1));
        assert_eq!(w, vec![1]);
        let (d, w) = dist(&[iv(0, 4), iv(3, 10)], 0, 10);
        assert_eq!(d, OptValue::Finite(2));
        assert_eq!(w, vec![1, 2]);
        assert_eq!(dist(&[iv(0, 4), iv(6, 10)], 0, 10).0, OptValue::PlusInf);
        assert_eq!(dist(&[], 5, 5).0, OptValue::Finite(0));
        // touching intervals chain across the shared point
        let (d, _) = dist(&[iv(0, 4), iv(4, 10)], 0, 10);
        assert_eq!(d, OptValue::Finite(2));
    }

    #[test]
    fn components_examples() {
        let comps = components_of(&[iv(0, 2), iv(1, 4), iv(6, 8), iv(3, 3)]);
        assert_eq!(comps, vec![vec![1, 2], vec![3], vec![4]]);
    }

    #[test]
    fn complete_detection() {
        assert!(is_complete(&[iv(0, 2), iv(1, 3), iv(0, 3)]));
        assert!(!is_complete(&[iv(0, 1), iv(2, 3)]));
        assert!(is_complete(&[]));
        assert!(!is_complete(&[Interval::empty(0), iv(0, 3)]));
    }
}
