//! Residue arithmetic for finite cyclic groups Z_m.

use crate::{Error, Result};

pub(crate) fn mul(order: u64, a: u64, b: u64) -> u64 {
    (a + b) % order
}

pub(crate) fn inv(order: u64, a: u64) -> u64 {
    if a == 0 {
        0
    } else {
        order - a
    }
}

/// Word length with respect to the generator `a`: min(j, m-j).
pub(crate) fn length(order: u64, a: u64) -> u64 {
    a.min(order - a)
}

pub(crate) fn format(a: u64) -> String {
    match a {
        0 => "1".to_string(),
        1 => "a".to_string(),
        j => format!("a^{j}"),
    }
}

pub(crate) fn parse(s: &str, order: u64) -> Result<u64> {
    let s = s.trim();
    let err = |reason: String| Error::ParseElement {
        input: s.to_string(),
        reason,
    };
    if s == "1" || s.is_empty() {
        return Ok(0);
    }
    let rest = s
        .strip_prefix('a')
        .ok_or_else(|| err("cyclic elements look like 'a^j' or '1'".into()))?;
    let exp: i64 = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')
            .ok_or_else(|| err("expected '^' before exponent".into()))?
            .parse()
            .map_err(|_| err("bad exponent".into()))?
    };
    Ok(exp.rem_euclid(order as i64) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_order() {
        assert_eq!(mul(5, 3, 4), 2);
        assert_eq!(inv(5, 2), 3);
        assert_eq!(length(5, 3), 2);
        assert_eq!(length(5, 0), 0);
    }

    #[test]
    fn parse_negative_exponent() {
        assert_eq!(parse("a^-1", 5).unwrap(), 4);
        assert_eq!(parse("1", 5).unwrap(), 0);
        assert_eq!(format(3), "a^3");
    }
}
