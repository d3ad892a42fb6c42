use super::Permutation;
use crate::error::{Result, TciError};

/// Parses cycle notation such as `"(1,2)(3,4)"`. The identity is `"()"` or `"id"`.
///
/// Cycles are one-based. Overlapping cycles are read as a product with the
/// rightmost factor applied first.
pub fn parse_cycles(m: usize, s: &str) -> Result<Permutation> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() || s == "id" || s == "()" {
        return Ok(Permutation::identity(m));
    }
    let mut cycles = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| TciError::Parse(format!("malformed cycle notation {s:?}")))?;
        let points = if body.0.is_empty() {
            Vec::new()
        } else {
            parse_index_list(body.0, m)?
        };
        cycles.push(points);
        rest = body.1;
    }
    Permutation::from_cycles(m, &cycles)
}

/// Parses one-based one-line notation such as `"2,1,3"`.
pub fn parse_one_line(s: &str) -> Result<Permutation> {
    let images = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| TciError::Parse(format!("bad one-line entry {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_one_line(&images)
}

/// Parses a comma list of one-based indices in `1..=m`, returning zero-based indices.
pub fn parse_index_list(s: &str, m: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let v: usize = t
                .trim()
                .parse()
                .map_err(|_| TciError::Parse(format!("bad index {t:?}")))?;
            if v == 0 || v > m {
                return Err(TciError::IndexOutOfRange { index: v, max: m });
            }
            Ok(v - 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_and_identity() {
        let p = parse_cycles(4, "(1,2)(3,4)").unwrap();
        assert_eq!(p.one_line(), vec![2, 1, 4, 3]);
        assert!(parse_cycles(3, "id").unwrap().is_identity());
        assert!(parse_cycles(3, "()").unwrap().is_identity());
        assert_eq!(parse_one_line("2,1,3").unwrap(), parse_cycles(3, "(1,2)").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_cycles(3, "(1,4)").is_err());
        assert!(parse_cycles(3, "(1,1)").is_err());
        assert!(parse_cycles(3, "(1,2").is_err());
        assert!(parse_one_line("1,1").is_err());
        assert!(parse_one_line("0,1").is_err());
        assert!(parse_index_list("1,x", 3).is_err());
    }
}
