//! Scattering-number assistance and its derived problems.
//!
//! The solver scans all interval endpoints right-to-left, deciding for each
//! pair whether the owner keeps the original, deletes the vertex, or the
//! assistant shrinks it. The scan's memory (leftmost locked component, budget,
//! capped component counter) is compiled into a DAG whose maximum-cost path is
//! the optimum. The same engine with rescaled arc costs solves the toughness
//! interdiction variant, and with deletion-style costs the vertex-deletion
//! variant that drives the most-vital-nodes reductions.

use crate::error::SolverError;
use crate::igraph;
use ivx_core::{normalize, Instance, Interval, Mode, ModificationSet, OptValue};
use std::collections::HashMap;

const INF_RANK: u16 = u16::MAX;
const MAX_STATES_PER_STEP: usize = 8_000_000;

/// Shrink set and delete set certifying the reported value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScatWitness {
    pub x: ModificationSet,
    pub s: Vec<usize>,
}

impl ScatWitness {
    fn empty() -> Self {
        ScatWitness {
            x: ModificationSet::empty(),
            s: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Costs {
    component: i64,
    delete: i64,
    /// Whether a shrink that lands on an empty replacement contributes a
    /// component. True for the assistance/toughness problems (the isolated
    /// vertex stays in the graph), false for the vertex-deletion variant
    /// (the vertex is gone).
    isolated_shrink_counts: bool,
}

#[derive(Debug, Clone, Copy)]
struct StepItem {
    pair: usize, // local index
    is_orig: bool,
    c: i64,
    d: i64,
    oc: i64,
    od: i64,
    empty: bool,
}

type Key = u64;

fn pack(l: u16, r: u16, k: u16, g: u8) -> Key {
    ((l as u64) << 40) | ((r as u64) << 24) | ((k as u64) << 8) | g as u64
}

fn unpack(key: Key) -> (u16, u16, u16, u8) {
    (
        (key >> 40) as u16,
        ((key >> 24) & 0xFFFF) as u16,
        ((key >> 8) & 0xFFFF) as u16,
        (key & 0xFF) as u8,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Cell {
    beta: i64,
    shr: u32,
    del: u32,
    parent: Key,
    decision: u8,
}

impl Cell {
    fn rank(&self) -> (i64, i64, i64) {
        (self.beta, -(self.shr as i64), -(self.del as i64))
    }

    fn beats(&self, other: &Cell) -> bool {
        match self.rank().cmp(&other.rank()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => {
                (self.parent, self.decision) < (other.parent, other.decision)
            }
        }
    }
}

const DEC_LOCK: u8 = 0;
const DEC_DELAY: u8 = 1;
const DEC_LOCK_DISCARD: u8 = 2;
const DEC_DELETE: u8 = 3;
const DEC_SHRINK: u8 = 4;

struct Engine {
    items: Vec<StepItem>,
    costs: Costs,
    beta0: i64,
    gamma0: u8,
    budget: u16,
}

impl Engine {
    fn initial(&self) -> HashMap<Key, Cell> {
        let key = pack(INF_RANK, INF_RANK, self.budget, self.gamma0);
        let mut map = HashMap::new();
        map.insert(
            key,
            Cell {
                beta: self.beta0,
                shr: 0,
                del: 0,
                parent: 0,
                decision: u8::MAX,
            },
        );
        map
    }

    fn advance(&self, map: &HashMap<Key, Cell>, item: &StepItem) -> HashMap<Key, Cell> {
        let mut next: HashMap<Key, Cell> = HashMap::with_capacity(map.len() * 2);
        let mut push = |key: Key, cell: Cell| match next.entry(key) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                if cell.beats(e.get()) {
                    e.insert(cell);
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(cell);
            }
        };
        let endpoint = item.d as u16;
        for (&key, cell) in map {
            let (l, r, k, g) = unpack(key);
            // invariant: the locked component's right end never falls behind
            // the scan position
            assert!(l == INF_RANK || r >= endpoint, "scan invariant violated");
            let base = Cell {
                parent: key,
                ..*cell
            };
            if item.is_orig {
                // lock
                let (c, d) = (item.c as u16, item.d as u16);
                if l != INF_RANK && l as i64 <= item.d {
                    push(
                        pack(l.min(c), r, k, g),
                        Cell {
                            decision: DEC_LOCK,
                            ..base
                        },
                    );
                } else {
                    push(
                        pack(c, d, k, (g + 1).min(2)),
                        Cell {
                            beta: base.beta + self.costs.component,
                            decision: DEC_LOCK,
                            ..base
                        },
                    );
                }
                // delay
                push(
                    key,
                    Cell {
                        decision: DEC_DELAY,
                        ..base
                    },
                );
            } else {
                let orig_covered =
                    l != INF_RANK && (l as i64) <= item.oc && item.od <= r as i64;
                if orig_covered {
                    push(
                        key,
                        Cell {
                            decision: DEC_LOCK_DISCARD,
                            ..base
                        },
                    );
                    // A covered original is redundant for its component, so
                    // shrinking it to an empty replacement still gains an
                    // isolated vertex. Excluded when the component's span
                    // equals the original's: endpoints are unique after
                    // normalization, so span equality means the original
                    // itself was locked and may be the component's only
                    // member, which would double-count.
                    let span_equal = l as i64 == item.oc && r as i64 == item.od;
                    if item.empty && k > 0 && !span_equal {
                        let shrunk = Cell {
                            shr: base.shr + 1,
                            decision: DEC_SHRINK,
                            ..base
                        };
                        if self.costs.isolated_shrink_counts {
                            push(
                                pack(l, r, k - 1, (g + 1).min(2)),
                                Cell {
                                    beta: shrunk.beta + self.costs.component,
                                    ..shrunk
                                },
                            );
                        } else {
                            push(pack(l, r, k - 1, g), shrunk);
                        }
                    }
                } else {
                    push(
                        key,
                        Cell {
                            beta: base.beta + self.costs.delete,
                            del: base.del + 1,
                            decision: DEC_DELETE,
                            ..base
                        },
                    );
                    if k > 0 {
                        let shrunk = Cell {
                            shr: base.shr + 1,
                            decision: DEC_SHRINK,
                            ..base
                        };
                        if item.empty {
                            if self.costs.isolated_shrink_counts {
                                push(
                                    pack(l, r, k - 1, (g + 1).min(2)),
                                    Cell {
                                        beta: shrunk.beta + self.costs.component,
                                        ..shrunk
                                    },
                                );
                            } else {
                                push(pack(l, r, k - 1, g), shrunk);
                            }
                        } else {
                            let (c, d) = (item.c as u16, item.d as u16);
                            if l != INF_RANK && (l as i64) <= item.d {
                                push(pack(l.min(c), r, k - 1, g), shrunk);
                            } else {
                                push(
                                    pack(c, d, k - 1, (g + 1).min(2)),
                                    Cell {
                                        beta: shrunk.beta + self.costs.component,
                                        ..shrunk
                                    },
                                );
                            }
                        }
                    }
                }
            }
        }
        next
    }

    /// Forward pass with sqrt-spaced checkpoints, then a segment-replay
    /// backtrack recovering one optimal decision per step.
    fn run(&self) -> Result<(OptValue, Vec<u8>), SolverError> {
        let steps = self.items.len();
        let every = ((steps as f64).sqrt().ceil() as usize).max(1);
        let mut checkpoints: Vec<(usize, HashMap<Key, Cell>)> = vec![(0, self.initial())];
        let mut cur = self.initial();
        for (i, item) in self.items.iter().enumerate() {
            cur = self.advance(&cur, item);
            if cur.len() > MAX_STATES_PER_STEP {
                return Err(SolverError::LimitExceeded(format!(
                    "{} scan states at step {i}",
                    cur.len()
                )));
            }
            if (i + 1) % every == 0 && i + 1 < steps {
                checkpoints.push((i + 1, cur.clone()));
            }
        }

        // readout: only executions that produced at least two components count
        let best = cur
            .iter()
            .filter(|(&key, _)| unpack(key).3 >= 2)
            .max_by(|(ka, a), (kb, b)| {
                a.rank()
                    .cmp(&b.rank())
                    .then_with(|| kb.cmp(ka))
            });
        let (mut target_key, value) = match best {
            None => return Ok((OptValue::MinusInf, Vec::new())),
            Some((&key, cell)) => (key, OptValue::Finite(cell.beta)),
        };

        // backtrack by replaying each checkpoint segment
        let mut decisions = vec![u8::MAX; steps];
        let mut target_step = steps;
        for (cp_step, cp_map) in checkpoints.iter().rev() {
            if *cp_step >= target_step {
                continue;
            }
            let mut seg: Vec<HashMap<Key, Cell>> = Vec::with_capacity(target_step - cp_step);
            let mut m = cp_map.clone();
            for s in *cp_step..target_step {
                m = self.advance(&m, &self.items[s]);
                seg.push(m.clone());
            }
            for s in (*cp_step..target_step).rev() {
                let cell = seg[s - cp_step]
                    .get(&target_key)
                    .expect("backtrack state missing");
                decisions[s] = cell.decision;
                target_key = cell.parent;
            }
            target_step = *cp_step;
            if target_step == 0 {
                break;
            }
        }
        Ok((value, decisions))
    }
}

struct Prepared {
    engine: Engine,
    /// local pair index -> original 1-based pair id
    ids: Vec<usize>,
}

/// Splits off empty originals (their vertices are permanently isolated
/// components) and normalizes the rest into scan items.
fn prepare(inst: &Instance, costs: Costs) -> Result<(Prepared, usize), SolverError> {
    let mut ids = Vec::new();
    let mut sub_pairs = Vec::new();
    let mut m0 = 0usize;
    for (i, &(orig, repl)) in inst.pairs.iter().enumerate() {
        if orig.is_empty() {
            m0 += 1;
        } else {
            ids.push(i + 1);
            sub_pairs.push((orig, repl));
        }
    }
    let sub = Instance::new(Mode::Shrink, sub_pairs, inst.budget, None)?;
    let (norm, _) = normalize(&sub);
    if norm.n() * 4 + 2 > INF_RANK as usize {
        return Err(SolverError::LimitExceeded(format!(
            "{} pairs exceed the scan's coordinate range",
            norm.n()
        )));
    }
    let mut items = Vec::with_capacity(2 * norm.n());
    for (local, &(o, r)) in norm.pairs.iter().enumerate() {
        items.push(StepItem {
            pair: local,
            is_orig: true,
            c: o.a,
            d: o.b,
            oc: o.a,
            od: o.b,
            empty: false,
        });
        items.push(StepItem {
            pair: local,
            is_orig: false,
            c: r.a,
            d: r.b,
            oc: o.a,
            od: o.b,
            empty: r.is_empty(),
        });
    }
    items.sort_by_key(|it| std::cmp::Reverse(it.d));
    let engine = Engine {
        items,
        costs,
        beta0: m0 as i64 * costs.component,
        gamma0: m0.min(2) as u8,
        budget: inst.budget.min(u16::MAX as usize - 1) as u16,
    };
    Ok((Prepared { engine, ids }, m0))
}

fn decode(prepared: &Prepared, decisions: &[u8]) -> ScatWitness {
    let mut x = Vec::new();
    let mut s = Vec::new();
    for (item, &dec) in prepared.engine.items.iter().zip(decisions) {
        if !item.is_orig {
            match dec {
                DEC_DELETE => s.push(prepared.ids[item.pair]),
                DEC_SHRINK => x.push(prepared.ids[item.pair]),
                _ => {}
            }
        }
    }
    s.sort_unstable();
    ScatWitness {
        x: ModificationSet::new(x),
        s,
    }
}

fn run_with_costs(
    inst: &Instance,
    costs: Costs,
    problem: &'static str,
) -> Result<(OptValue, ScatWitness), SolverError> {
    if inst.mode != Mode::Shrink {
        return Err(SolverError::ModeMismatch {
            expected: Mode::Shrink,
            problem,
        });
    }
    let (prepared, _m0) = prepare(inst, costs)?;
    let (value, decisions) = prepared.engine.run()?;
    let witness = if value == OptValue::MinusInf {
        ScatWitness::empty()
    } else {
        decode(&prepared, &decisions)
    };
    Ok((value, witness))
}

/// Maximum over candidate pairs (X, S) of c(G_X - S) - |S| when at least two
/// components remain, and minus infinity otherwise.
pub fn scat_assist(inst: &Instance) -> Result<(OptValue, ScatWitness), SolverError> {
    run_with_costs(
        inst,
        Costs {
            component: 1,
            delete: -1,
            isolated_shrink_counts: true,
        },
        "scat-assist",
    )
}

/// Maximum over candidate pairs of p*c(G_X - S) - q*|S| (components weighted
/// by the exact rational threshold p/q).
pub fn toughness_slack(
    inst: &Instance,
    p: i64,
    q: i64,
) -> Result<(OptValue, ScatWitness), SolverError> {
    run_with_costs(
        inst,
        Costs {
            component: p,
            delete: -q,
            isolated_shrink_counts: true,
        },
        "tough-interdict",
    )
}

/// Toughness interdiction: given a p/q-tough original graph, decide whether
/// some shrink set breaks toughness, i.e. whether the slack can be made
/// positive. Errors when the original graph is not p/q-tough.
pub fn tough_interdict(
    inst: &Instance,
    p: i64,
    q: i64,
) -> Result<(bool, ScatWitness), SolverError> {
    if inst.mode != Mode::Shrink {
        return Err(SolverError::ModeMismatch {
            expected: Mode::Shrink,
            problem: "tough-interdict",
        });
    }
    if p <= 0 || q <= 0 {
        return Err(SolverError::Unsupported(format!(
            "toughness threshold must be a positive rational, got {p}/{q}"
        )));
    }
    let base_pairs = inst.pairs.iter().map(|&(o, _)| (o, o)).collect();
    let base = Instance::new(Mode::Shrink, base_pairs, 0, None)?;
    let (base_slack, _) = toughness_slack(&base, p, q)?;
    if base_slack > OptValue::Finite(0) {
        return Err(SolverError::Precondition(format!(
            "original graph is not {p}/{q}-tough (slack {base_slack})"
        )));
    }
    let (value, witness) = toughness_slack(inst, p, q)?;
    Ok((value > OptValue::Finite(0), witness))
}

/// Hamilton-path interdiction: succeeds iff the best reachable scattering
/// number exceeds 1.
pub fn ham_path_interdict(inst: &Instance) -> Result<(bool, ScatWitness), SolverError> {
    let (v, w) = scat_assist(inst)?;
    Ok((v > OptValue::Finite(1), w))
}

/// Hamilton-cycle interdiction: succeeds iff the best reachable scattering
/// number exceeds 0.
pub fn ham_cycle_interdict(inst: &Instance) -> Result<(bool, ScatWitness), SolverError> {
    let (v, w) = scat_assist(inst)?;
    Ok((v > OptValue::Finite(0), w))
}

/// Path-cover interdiction value: the largest reachable path cover number.
pub fn path_cover_interdict(inst: &Instance) -> Result<(usize, ScatWitness), SolverError> {
    let (v, w) = scat_assist(inst)?;
    let value = match v {
        OptValue::Finite(x) if x > 1 => x as usize,
        _ => 1,
    };
    Ok((value, w))
}

/// Best scattering number reachable by deleting at most k vertices:
/// max over |D| <= k of sc(G - D), with the deletion and cut witnesses.
pub fn scat_deletion(
    intervals: &[Interval],
    k: usize,
) -> Result<(OptValue, Vec<usize>, Vec<usize>), SolverError> {
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
    let inst = Instance::new(Mode::Shrink, pairs, k, None)?;
    let (value, witness) = run_with_costs(
        &inst,
        Costs {
            component: 1,
            delete: -1,
            isolated_shrink_counts: false,
        },
        "scat-mvn",
    )?;
    let deleted: Vec<usize> = witness.x.indices().to_vec();
    Ok((value, deleted, witness.s))
}

/// Most-vital-nodes for Hamilton path: can deleting at most k vertices leave
/// a graph without a Hamilton path?
pub fn mvn_ham_path(intervals: &[Interval], k: usize) -> Result<bool, SolverError> {
    Ok(scat_deletion(intervals, k)?.0 > OptValue::Finite(1))
}

/// Most-vital-nodes for Hamilton cycle.
pub fn mvn_ham_cycle(intervals: &[Interval], k: usize) -> Result<bool, SolverError> {
    Ok(scat_deletion(intervals, k)?.0 > OptValue::Finite(0))
}

/// Most-vital-nodes for path cover: the largest reachable path cover number.
pub fn mvn_path_cover(intervals: &[Interval], k: usize) -> Result<usize, SolverError> {
    Ok(match scat_deletion(intervals, k)?.0 {
        OptValue::Finite(v) if v > 1 => v as usize,
        _ => 1,
    })
}

/// Recomputes c(G_X - S) - |S| for a candidate pair, for witness validation.
pub fn candidate_pair_value(
    inst: &Instance,
    witness: &ScatWitness,
    p: i64,
    q: i64,
) -> Result<OptValue, SolverError> {
    let modified = inst.apply(&witness.x)?;
    let remaining: Vec<Interval> = (1..=inst.n())
        .filter(|v| witness.s.binary_search(v).is_err())
        .map(|v| modified[v - 1])
        .collect();
    let c = igraph::components_of(&remaining).len() as i64;
    if c > 1 {
        Ok(OptValue::Finite(p * c - q * witness.s.len() as i64))
    } else {
        Ok(OptValue::MinusInf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    fn inst(pairs: Vec<(Interval, Interval)>, k: usize) -> Instance {
        Instance::new(Mode::Shrink, pairs, k, None).unwrap()
    }

    #[test]
    fn p3_budget_zero() {
        let i = inst(
            vec![
                (iv(0, 2), iv(0, 2)),
                (iv(1, 4), iv(1, 4)),
                (iv(3, 5), iv(3, 5)),
            ],
            0,
        );
        let (v, w) = scat_assist(&i).unwrap();
        assert_eq!(v, OptValue::Finite(1));
        assert_eq!(w.s, vec![2]);
        assert_eq!(candidate_pair_value(&i, &w, 1, 1).unwrap(), v);
    }

    #[test]
    fn p3_empty_middle_budget_one() {
        let i = inst(
            vec![
                (iv(0, 2), iv(0, 2)),
                (iv(1, 4), iv(2, 2)),
                (iv(3, 5), iv(3, 5)),
            ],
            1,
        );
        let (v, w) = scat_assist(&i).unwrap();
        assert_eq!(v, OptValue::Finite(3));
        assert_eq!(w.x.indices(), &[2]);
        assert!(w.s.is_empty());
        assert_eq!(candidate_pair_value(&i, &w, 1, 1).unwrap(), v);
    }

    #[test]
    fn triangle_is_minus_infinity() {
        for k in 0..3 {
            let i = inst(
                vec![
                    (iv(0, 2), iv(0, 2)),
                    (iv(1, 3), iv(1, 3)),
                    (iv(0, 3), iv(0, 3)),
                ],
                k,
            );
            assert_eq!(scat_assist(&i).unwrap().0, OptValue::MinusInf);
        }
    }

    #[test]
    fn triangle_with_empty_replacement() {
        // shrinking one vertex to nothing leaves K2 plus an isolated vertex
        let i = inst(
            vec![
                (iv(0, 2), iv(0, 2)),
                (iv(1, 3), iv(1, 3)),
                (iv(0, 3), iv(1, 1)),
            ],
            1,
        );
        let (v, w) = scat_assist(&i).unwrap();
        assert_eq!(v, OptValue::Finite(2));
        assert_eq!(w.x.indices(), &[3]);
        let (cycle, _) = ham_cycle_interdict(&i).unwrap();
        assert!(cycle);
        let (path, _) = ham_path_interdict(&i).unwrap();
        assert!(path); // sc = 2 > 1
    }

    #[test]
    fn empty_originals_are_permanent_components() {
        let i = inst(
            vec![
                (iv(4, 4), iv(4, 4)),
                (iv(0, 2), iv(0, 2)),
                (iv(1, 3), iv(1, 3)),
            ],
            0,
        );
        // one isolated vertex plus a K2: S = {} gives two components
        let (v, w) = scat_assist(&i).unwrap();
        assert_eq!(v, OptValue::Finite(2));
        assert!(w.x.is_empty() && w.s.is_empty());
    }

    #[test]
    fn deletion_variant_matches_hand_computation() {
        // P3: deleting the middle vertex leaves two isolated vertices, sc = 2
        let ivs = [iv(0, 2), iv(1, 4), iv(3, 5)];
        let (v, d, s) = scat_deletion(&ivs, 1).unwrap();
        assert_eq!(v, OptValue::Finite(2));
        assert_eq!(d, vec![2]);
        assert!(s.is_empty());
        // K3 with one deletion leaves K2: every cut is trivial, -inf
        let k3 = [iv(0, 2), iv(1, 3), iv(0, 3)];
        assert_eq!(scat_deletion(&k3, 1).unwrap().0, OptValue::MinusInf);
        assert_eq!(scat_deletion(&k3, 0).unwrap().0, OptValue::MinusInf);
    }

    #[test]
    fn toughness_example_k3() {
        // K3 is 1-tough; emptying one vertex gives slack 1*2 - 0 = 2 > 0
        let i = inst(
            vec![
                (iv(0, 2), iv(0, 2)),
                (iv(1, 3), iv(1, 3)),
                (iv(0, 3), iv(1, 1)),
            ],
            1,
        );
        let (ok, w) = tough_interdict(&i, 1, 1).unwrap();
        assert!(ok);
        assert_eq!(w.x.indices(), &[3]);
        // with budget zero the interdiction fails on a tough graph
        let i0 = inst(
            vec![
                (iv(0, 2), iv(0, 2)),
                (iv(1, 3), iv(1, 3)),
                (iv(0, 3), iv(0, 3)),
            ],
            0,
        );
        assert!(!tough_interdict(&i0, 1, 1).unwrap().0);
    }

    #[test]
    fn toughness_precondition_rejected() {
        // two disjoint intervals: not tough at all
        let i = inst(vec![(iv(0, 1), iv(0, 1)), (iv(2, 3), iv(2, 3))], 1);
        assert!(matches!(
            tough_interdict(&i, 1, 1),
            Err(SolverError::Precondition(_))
        ));
    }

    #[test]
    fn mode_is_checked() {
        let i = Instance::new(Mode::Expand, vec![(iv(0, 1), iv(0, 2))], 1, None).unwrap();
        assert!(matches!(
            scat_assist(&i),
            Err(SolverError::ModeMismatch { .. })
        ));
    }
}
