//! Endpoint normalization.
//!
//! Re-represents an instance on an integer grid where all start/end
//! coordinates of all non-empty intervals (originals and replacements) are
//! pairwise distinct, while preserving, for every modification set X, the
//! adjacency structure of the resulting interval graph, the containment
//! relation inside every pair, and point membership of the shortest-path
//! endpoints. Empty intervals stay empty and receive a fresh coordinate.
//!
//! Tie-breaking at a shared coordinate: all start events precede all point
//! markers, which precede all end events. Coincident starts are ordered with
//! the containing interval first (descending old end); coincident ends with
//! the contained interval first (descending old start); within a pair the
//! mode's containment direction decides.

use crate::instance::{Instance, Mode, SpEndpoints};
use crate::interval::Interval;

/// Monotone map from normalized coordinates back to original ones.
#[derive(Debug, Clone)]
pub struct CoordMap {
    old_of: Vec<i64>,
}

impl CoordMap {
    /// Translates a normalized coordinate back. Normalized coordinates are
    /// dense ranks, so this is a direct lookup; out-of-range values clamp to
    /// the nearest event.
    pub fn to_original(&self, p: i64) -> i64 {
        if self.old_of.is_empty() {
            return p;
        }
        let idx = p.clamp(0, self.old_of.len() as i64 - 1) as usize;
        self.old_of[idx]
    }

    pub fn len(&self) -> usize {
        self.old_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old_of.is_empty()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    OrigStart(usize),
    OrigEnd(usize),
    OrigPoint(usize),
    ReplStart(usize),
    ReplEnd(usize),
    ReplPoint(usize),
    S,
    T,
}

struct Event {
    coord: i64,
    class: u8, // 0 start, 1 point, 2 end
    key: (i64, u8, usize, u8),
    slot: Slot,
}

/// Normalizes an instance; returns the equivalent instance and the coordinate
/// map for translating witness points back.
pub fn normalize(inst: &Instance) -> (Instance, CoordMap) {
    let n = inst.n();
    let mut events: Vec<Event> = Vec::with_capacity(4 * n + 2);

    // Rank 0 sorts first. Starts: the containing side of a pair first.
    // Ends: the contained side first.
    let (orig_start_rank, repl_start_rank) = match inst.mode {
        Mode::Shrink => (0u8, 1u8),
        Mode::Expand => (1u8, 0u8),
    };
    let (orig_end_rank, repl_end_rank) = (repl_start_rank, orig_start_rank);

    for (i, &(orig, repl)) in inst.pairs.iter().enumerate() {
        if orig.is_empty() {
            events.push(Event {
                coord: orig.a,
                class: 1,
                key: (0, 0, i, 0),
                slot: Slot::OrigPoint(i),
            });
        } else {
            events.push(Event {
                coord: orig.a,
                class: 0,
                key: (-orig.b, orig_start_rank, i, 0),
                slot: Slot::OrigStart(i),
            });
            events.push(Event {
                coord: orig.b,
                class: 2,
                key: (-orig.a, orig_end_rank, i, 0),
                slot: Slot::OrigEnd(i),
            });
        }
        if repl.is_empty() {
            events.push(Event {
                coord: repl.a,
                class: 1,
                key: (0, 0, i, 1),
                slot: Slot::ReplPoint(i),
            });
        } else {
            events.push(Event {
                coord: repl.a,
                class: 0,
                key: (-repl.b, repl_start_rank, i, 1),
                slot: Slot::ReplStart(i),
            });
            events.push(Event {
                coord: repl.b,
                class: 2,
                key: (-repl.a, repl_end_rank, i, 1),
                slot: Slot::ReplEnd(i),
            });
        }
    }
    if let Some(SpEndpoints { s, t }) = inst.sp {
        events.push(Event {
            coord: s,
            class: 1,
            key: (0, 0, usize::MAX - 1, 0),
            slot: Slot::S,
        });
        events.push(Event {
            coord: t,
            class: 1,
            key: (0, 0, usize::MAX, 0),
            slot: Slot::T,
        });
    }

    events.sort_by(|x, y| {
        (x.coord, x.class, x.key)
            .cmp(&(y.coord, y.class, y.key))
    });

    let mut old_of = Vec::with_capacity(events.len());
    let mut orig_a = vec![0i64; n];
    let mut orig_b = vec![0i64; n];
    let mut repl_a = vec![0i64; n];
    let mut repl_b = vec![0i64; n];
    let (mut new_s, mut new_t) = (0i64, 0i64);

    for (rank, ev) in events.iter().enumerate() {
        let c = rank as i64;
        old_of.push(ev.coord);
        match ev.slot {
            Slot::OrigStart(i) => orig_a[i] = c,
            Slot::OrigEnd(i) => orig_b[i] = c,
            Slot::OrigPoint(i) => {
                orig_a[i] = c;
                orig_b[i] = c;
            }
            Slot::ReplStart(i) => repl_a[i] = c,
            Slot::ReplEnd(i) => repl_b[i] = c,
            Slot::ReplPoint(i) => {
                repl_a[i] = c;
                repl_b[i] = c;
            }
            Slot::S => new_s = c,
            Slot::T => new_t = c,
        }
    }

    let pairs = (0..n)
        .map(|i| {
            (
                Interval {
                    a: orig_a[i],
                    b: orig_b[i],
                },
                Interval {
                    a: repl_a[i],
                    b: repl_b[i],
                },
            )
        })
        .collect();
    let sp = inst.sp.map(|_| SpEndpoints { s: new_s, t: new_t });

    let out = Instance::new(inst.mode, pairs, inst.budget, sp)
        .expect("normalization preserves containment");
    (out, CoordMap { old_of })
}

/// Normalizes a plain interval list to pairwise-distinct endpoints, preserving
/// the intersection graph. Empty intervals keep a degenerate fresh coordinate.
pub fn normalize_intervals(intervals: &[Interval]) -> (Vec<Interval>, CoordMap) {
    let mut events: Vec<(i64, u8, (i64, usize), usize, bool)> = Vec::new();
    for (i, iv) in intervals.iter().enumerate() {
        if iv.is_empty() {
            events.push((iv.a, 1, (0, i), i, true));
        } else {
            events.push((iv.a, 0, (-iv.b, i), i, true));
            events.push((iv.b, 2, (-iv.a, i), i, false));
        }
    }
    events.sort();

    let mut old_of = Vec::with_capacity(events.len());
    let mut out = vec![Interval::empty(0); intervals.len()];
    for (rank, &(coord, class, _, i, is_start)) in events.iter().enumerate() {
        let c = rank as i64;
        old_of.push(coord);
        match class {
            1 => out[i] = Interval::empty(c),
            _ if is_start => out[i].a = c,
            _ => out[i].b = c,
        }
    }
    (out, CoordMap { old_of })
}
