//! The `.sxi` instance file format.
//!
//! Line-oriented UTF-8: `mode shrink|expand`, `k <nonneg-int>`, optional
//! `s <int>` and `t <int>`, then one `interval <a> <b> <a'> <b'>` line per
//! pair. Lines starting with `#` are comments. Canonical serialization emits
//! the fields in that order with single spaces and no trailing whitespace.

use crate::error::CoreError;
use crate::instance::{Instance, Mode, SpEndpoints};
use crate::interval::Interval;

fn parse_int(tok: &str, line: usize) -> Result<i64, CoreError> {
    // Decimals are rejected on purpose; coordinates are exact integers.
    tok.parse::<i64>().map_err(|_| CoreError::Parse {
        line,
        msg: format!("expected integer, got `{tok}`"),
    })
}

pub fn parse_instance(text: &str) -> Result<Instance, CoreError> {
    let mut mode: Option<Mode> = None;
    let mut k: Option<usize> = None;
    let mut s: Option<i64> = None;
    let mut t: Option<i64> = None;
    let mut raw_pairs: Vec<(usize, i64, i64, i64, i64)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "mode" => {
                if mode.is_some() {
                    return Err(CoreError::Parse {
                        line: lineno,
                        msg: "duplicate `mode` line".into(),
                    });
                }
                mode = Some(match toks.get(1) {
                    Some(&"shrink") => Mode::Shrink,
                    Some(&"expand") => Mode::Expand,
                    other => {
                        return Err(CoreError::Parse {
                            line: lineno,
                            msg: format!("expected `shrink` or `expand`, got `{other:?}`"),
                        })
                    }
                });
            }
            "k" => {
                if k.is_some() {
                    return Err(CoreError::Parse {
                        line: lineno,
                        msg: "duplicate `k` line".into(),
                    });
                }
                if toks.len() != 2 {
                    return Err(CoreError::Parse {
                        line: lineno,
                        msg: "expected `k <nonneg-int>`".into(),
                    });
                }
                let v = parse_int(toks[1], lineno)?;
                if v < 0 {
                    return Err(CoreError::Parse {
                        line: lineno,
                        msg: format!("budget must be nonnegative, got {v}"),
                    });
                }
                k = Some(v as usize);
            }
            "s" | "t" => {
                if toks.len() != 2 {
                    return Err(CoreError::Parse {
                        line: lineno,
                        msg: format!("expected `{} <int>`", toks[0]),
                    });
                }
                let v = parse_int(toks[1], lineno)?;
                let slot = if toks[0] == "s" { &mut s } else { &mut t };
                if slot.is_some() {
                    return Err(CoreError::Parse {
                        line: lineno,
                        msg: format!("duplicate `{}` line", toks[0]),
                    });
                }
                *slot = Some(v);
            }
            "interval" => {
                if toks.len() != 5 {
                    return Err(CoreError::Parse {
                        line: lineno,
                        msg: "expected `interval <a> <b> <a'> <b'>`".into(),
                    });
                }
                let a = parse_int(toks[1], lineno)?;
                let b = parse_int(toks[2], lineno)?;
                let a2 = parse_int(toks[3], lineno)?;
                let b2 = parse_int(toks[4], lineno)?;
                raw_pairs.push((lineno, a, b, a2, b2));
            }
            other => {
                return Err(CoreError::Parse {
                    line: lineno,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }

    let mode = mode.ok_or(CoreError::Parse {
        line: 0,
        msg: "missing `mode` line".into(),
    })?;
    let k = k.ok_or(CoreError::Parse {
        line: 0,
        msg: "missing `k` line".into(),
    })?;
    let sp = match (s, t) {
        (Some(s), Some(t)) => Some(SpEndpoints { s, t }),
        (None, None) => None,
        _ => {
            return Err(CoreError::Parse {
                line: 0,
                msg: "`s` and `t` must be given together".into(),
            })
        }
    };

    let mut pairs = Vec::with_capacity(raw_pairs.len());
    for (lineno, a, b, a2, b2) in raw_pairs {
        let orig = Interval::new(a, b).map_err(|e| CoreError::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        let repl = Interval::new(a2, b2).map_err(|e| CoreError::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        pairs.push((orig, repl));
    }

    Instance::new(mode, pairs, k, sp)
}

pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    out.push_str(&format!("mode {}\n", inst.mode.as_str()));
    out.push_str(&format!("k {}\n", inst.budget));
    if let Some(SpEndpoints { s, t }) = inst.sp {
        out.push_str(&format!("s {s}\n"));
        out.push_str(&format!("t {t}\n"));
    }
    for (orig, repl) in &inst.pairs {
        out.push_str(&format!(
            "interval {} {} {} {}\n",
            orig.a, orig.b, repl.a, repl.b
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_instance() {
        let inst = parse_instance("mode shrink\nk 1\ninterval 0 4 1 2\n").unwrap();
        assert_eq!(inst.mode, Mode::Shrink);
        assert_eq!(inst.budget, 1);
        assert_eq!(inst.pairs, vec![(Interval::new(0, 4).unwrap(), Interval::new(1, 2).unwrap())]);
        assert!(inst.sp.is_none());
    }

    #[test]
    fn containment_violation_reports_pair() {
        let err = parse_instance("mode shrink\nk 0\ninterval 0 4 5 6\n").unwrap_err();
        match err {
            CoreError::Containment { pair, .. } => assert_eq!(pair, 1),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn syntax_error_reports_line() {
        let err = parse_instance("mode shrink\nk 0\ninterval 0 4 0.5 2\n").unwrap_err();
        match err {
            CoreError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let inst =
            parse_instance("# header\nmode expand\n\nk 2\ns -1\nt 7\n# body\ninterval 0 4 0 5\n")
                .unwrap();
        assert_eq!(inst.sp, Some(SpEndpoints { s: -1, t: 7 }));
    }

    #[test]
    fn roundtrip_is_identity() {
        let text = "mode expand\nk 2\ns 0\nt 9\ninterval 0 4 0 5\ninterval 4 9 3 9\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(serialize_instance(&inst), text);
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
    }
}
