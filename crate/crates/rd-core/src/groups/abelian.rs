//! Integer-vector arithmetic for weighted free-abelian groups.

use num::rational::Ratio;

use crate::length::Length;
use crate::{Error, Result};

pub(crate) fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

/// Weighted word length `sum_i w_i |v_i|`.
pub(crate) fn length(weights: &[Ratio<i64>], v: &[i64]) -> Length {
    Length::from_ratio(super::weighted_l1(weights, v))
}

pub(crate) fn format(v: &[i64]) -> String {
    let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", coords.join(","))
}

pub(crate) fn parse(s: &str, n: usize) -> Result<Vec<i64>> {
    let s = s.trim();
    let err = |reason: String| Error::ParseElement {
        input: s.to_string(),
        reason,
    };
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| err("vector must be parenthesized like (1,-2,0)".into()))?;
    let coords: Vec<i64> = inner
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| err(format!("bad coordinate: {e}")))?;
    if coords.len() != n {
        return Err(err(format!("expected {n} coordinates, got {}", coords.len())));
    }
    Ok(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_length() {
        let w = vec![Ratio::from_integer(3); 3];
        assert_eq!(length(&w, &[1, -2, 0]), Length::from_integer(9));
    }

    #[test]
    fn format_parse_round_trip() {
        assert_eq!(format(&[1, -2, 0]), "(1,-2,0)");
        assert_eq!(parse("(1,-2,0)", 3).unwrap(), vec![1, -2, 0]);
        assert!(parse("(1,2)", 3).is_err());
    }
}
