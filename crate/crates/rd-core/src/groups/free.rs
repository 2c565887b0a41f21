//! Reduced-word arithmetic for free groups.
//!
//! Letters are nonzero `i32`s: `+k` is generator `k-1`, `-k` its inverse.

use crate::{Error, Result};

/// Freely reduce a letter sequence.
pub(crate) fn reduce(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for l in letters {
        debug_assert!(l != 0);
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub(crate) fn mul(a: &[i32], b: &[i32]) -> Vec<i32> {
    let mut out = a.to_vec();
    for &l in b {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub(crate) fn inv(a: &[i32]) -> Vec<i32> {
    a.iter().rev().map(|&l| -l).collect()
}

fn gen_name(k: i32, rank: u32) -> String {
    if rank == 1 {
        "a".to_string()
    } else {
        format!("a{k}")
    }
}

/// Format a reduced word as runs with exponents: `a1^2 a2^-1`.
pub(crate) fn format(word: &[i32], rank: u32) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let l = word[i];
        let mut run = 1usize;
        while i + run < word.len() && word[i + run] == l {
            run += 1;
        }
        let exp = if l > 0 { run as i64 } else { -(run as i64) };
        let name = gen_name(l.abs(), rank);
        if exp == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{exp}"));
        }
        i += run;
    }
    parts.join(" ")
}

/// Parse a word string; accepts unreduced input and reduces it.
pub(crate) fn parse(s: &str, rank: u32) -> Result<Vec<i32>> {
    let s = s.trim();
    if s == "1" || s.is_empty() {
        return Ok(Vec::new());
    }
    let err = |reason: String| Error::ParseElement {
        input: s.to_string(),
        reason,
    };
    let mut letters = Vec::new();
    for token in s.split_whitespace() {
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| err(format!("bad exponent in '{token}'")))?;
                (n, exp)
            }
            None => (token, 1),
        };
        let idx_str = name
            .strip_prefix('a')
            .ok_or_else(|| err(format!("generator '{name}' must be 'a' or 'a<index>'")))?;
        let k: u32 = if idx_str.is_empty() {
            if rank != 1 {
                return Err(err("bare generator 'a' is only valid at rank 1".into()));
            }
            1
        } else {
            idx_str
                .parse()
                .map_err(|_| err(format!("bad generator index '{idx_str}'")))?
        };
        if k == 0 || k > rank {
            return Err(err(format!("generator index {k} out of range 1..={rank}")));
        }
        if exp == 0 {
            continue;
        }
        if exp.unsigned_abs() > 1_000_000 {
            return Err(err("exponent too large".into()));
        }
        let letter = if exp > 0 { k as i32 } else { -(k as i32) };
        for _ in 0..exp.unsigned_abs() {
            letters.push(letter);
        }
    }
    Ok(reduce(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels() {
        // (a b)(b^-1 a) = a^2
        assert_eq!(mul(&[1, 2], &[-2, 1]), vec![1, 1]);
        assert_eq!(reduce(vec![1, -1]), Vec::<i32>::new());
    }

    #[test]
    fn inverse_reverses() {
        assert_eq!(inv(&[1, 2]), vec![-2, -1]);
    }

    #[test]
    fn format_parse_round_trip() {
        let w = vec![1, 1, -2];
        let s = format(&w, 2);
        assert_eq!(s, "a1^2 a2^-1");
        assert_eq!(parse(&s, 2).unwrap(), w);
        assert_eq!(parse("1", 2).unwrap(), Vec::<i32>::new());
        assert_eq!(format(&[], 2), "1");
        // rank-1 groups print a bare `a`
        assert_eq!(format(&[1, 1], 1), "a^2");
        assert_eq!(parse("a^-3", 1).unwrap(), vec![-1, -1, -1]);
        // unreduced input is reduced on parse
        assert_eq!(parse("a1 a1^-1 a2", 2).unwrap(), vec![2]);
    }
}
