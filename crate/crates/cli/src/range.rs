use std::fmt;
use std::str::FromStr;

/// Inclusive integer range written `a..b`, `a..=b` or `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: usize,
    pub hi: usize,
}

impl IntRange {
    pub fn values(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("not a nonnegative integer: {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(IntRange { lo, hi })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!("3..8".parse::<IntRange>().unwrap(), IntRange { lo: 3, hi: 8 });
        assert_eq!("3..=8".parse::<IntRange>().unwrap(), IntRange { lo: 3, hi: 8 });
        assert_eq!("5".parse::<IntRange>().unwrap(), IntRange { lo: 5, hi: 5 });
        assert!("8..3".parse::<IntRange>().is_err());
        assert!("x".parse::<IntRange>().is_err());
    }
}
