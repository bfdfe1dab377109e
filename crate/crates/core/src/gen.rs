//! Seeded instance generators.
//!
//! Deterministic under a fixed seed. Emitted instances always satisfy the
//! mode's containment invariants; the `path` and `complete` families
//! reproduce the canonical small graphs used throughout the test suites.

use crate::instance::{Instance, Mode, SpEndpoints};
use crate::interval::Interval;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Random,
    Nested,
    Clustered,
    Path,
    Complete,
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" => Ok(Family::Random),
            "nested" => Ok(Family::Nested),
            "clustered" => Ok(Family::Clustered),
            "path" => Ok(Family::Path),
            "complete" => Ok(Family::Complete),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub family: Family,
    pub seed: u64,
    /// Attach shortest-path endpoints spanning the instance.
    pub with_sp: bool,
}

pub fn generate(cfg: &GenConfig) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let originals = match cfg.family {
        Family::Random => random_originals(cfg.n, &mut rng, cfg.mode),
        Family::Nested => nested_originals(cfg.n, &mut rng),
        Family::Clustered => clustered_originals(cfg.n, &mut rng),
        Family::Path => path_originals(cfg.n),
        Family::Complete => complete_originals(cfg.n),
    };
    let pairs = originals
        .into_iter()
        .map(|orig| {
            let repl = match cfg.mode {
                Mode::Shrink => shrink_replacement(orig, &mut rng),
                Mode::Expand => expand_replacement(orig, &mut rng),
            };
            (orig, repl)
        })
        .collect::<Vec<_>>();
    let sp = if cfg.with_sp {
        let lo = pairs
            .iter()
            .flat_map(|(o, r)| [o.a, r.a])
            .min()
            .unwrap_or(0);
        let hi = pairs
            .iter()
            .flat_map(|(o, r)| [o.b, r.b])
            .max()
            .unwrap_or(1);
        Some(SpEndpoints {
            s: lo,
            t: hi.max(lo + 1),
        })
    } else {
        None
    };
    Instance::new(cfg.mode, pairs, cfg.k, sp).expect("generated instance violates invariants")
}

fn random_originals(n: usize, rng: &mut ChaCha8Rng, mode: Mode) -> Vec<Interval> {
    let span = (4 * n as i64 + 8).max(12);
    (0..n)
        .map(|_| {
            // Shrink instances occasionally carry empty originals; expand
            // instances keep originals non-empty (an empty original that can
            // grow is outside the solvers' contracts).
            if mode == Mode::Shrink && rng.gen_ratio(1, 16) {
                Interval::empty(rng.gen_range(0..span))
            } else {
                let a = rng.gen_range(0..span - 1);
                let len = rng.gen_range(1..=(span - a).min(span / 2).max(1));
                Interval::new(a, a + len).unwrap()
            }
        })
        .collect()
}

fn nested_originals(n: usize, rng: &mut ChaCha8Rng) -> Vec<Interval> {
    let mut out = Vec::with_capacity(n);
    let mut offset = 0i64;
    while out.len() < n {
        let depth = rng.gen_range(1..=4usize).min(n - out.len());
        let width = 2 * depth as i64 + rng.gen_range(0..4);
        for d in 0..depth as i64 {
            out.push(Interval::new(offset + d, offset + width - d).unwrap());
        }
        offset += width + rng.gen_range(0..3);
    }
    out
}

fn clustered_originals(n: usize, rng: &mut ChaCha8Rng) -> Vec<Interval> {
    let clusters = (n / 4).max(1);
    (0..n)
        .map(|_| {
            let c = rng.gen_range(0..clusters) as i64 * 10;
            let a = c + rng.gen_range(0..4);
            let b = a + rng.gen_range(1..=5);
            Interval::new(a, b).unwrap()
        })
        .collect()
}

fn path_originals(n: usize) -> Vec<Interval> {
    // P3 keeps its canonical representation from the test corpus.
    let canonical = [(0, 2), (1, 4), (3, 5)];
    if n <= 3 {
        return canonical[..n]
            .iter()
            .map(|&(a, b)| Interval::new(a, b).unwrap())
            .collect();
    }
    (0..n as i64)
        .map(|i| Interval::new(3 * i, 3 * i + 4).unwrap())
        .collect()
}

fn complete_originals(n: usize) -> Vec<Interval> {
    let canonical = [(0, 2), (1, 3), (0, 3)];
    if n <= 3 {
        return canonical[..n]
            .iter()
            .map(|&(a, b)| Interval::new(a, b).unwrap())
            .collect();
    }
    (0..n as i64)
        .map(|i| Interval::new(i, n as i64 + i).unwrap())
        .collect()
}

fn shrink_replacement(orig: Interval, rng: &mut ChaCha8Rng) -> Interval {
    if orig.is_empty() {
        return orig;
    }
    if rng.gen_ratio(1, 4) {
        return orig;
    }
    if rng.gen_ratio(1, 6) {
        return Interval::empty(rng.gen_range(orig.a..=orig.b));
    }
    let a = rng.gen_range(orig.a..=orig.b);
    let b = rng.gen_range(a..=orig.b);
    Interval::new(a, b).unwrap()
}

fn expand_replacement(orig: Interval, rng: &mut ChaCha8Rng) -> Interval {
    if orig.is_empty() {
        return orig;
    }
    if rng.gen_ratio(1, 4) {
        return orig;
    }
    let a = orig.a - rng.gen_range(0..6);
    let b = orig.b + rng.gen_range(0..6);
    Interval::new(a, b).unwrap()
}
