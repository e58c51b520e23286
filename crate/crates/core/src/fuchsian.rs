//! Signature arithmetic: normalized hyperbolic area, Teichmüller dimension,
//! Riemann–Hurwitz genus, candidate signatures and the dimension-preserving
//! extension table.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// `(h; m₁, …, m_l)`, periods kept non-decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    h: u32,
    periods: Vec<u32>,
}

impl Signature {
    pub fn new(h: u32, mut periods: Vec<u32>) -> Result<Self> {
        if let Some(&m) = periods.iter().find(|&&m| m < 2) {
            return Err(Error::params(format!("period {m} is not >= 2")));
        }
        periods.sort_unstable();
        Ok(Signature { h, periods })
    }

    pub fn orbit_genus(&self) -> u32 {
        self.h
    }

    pub fn periods(&self) -> &[u32] {
        &self.periods
    }

    pub fn len(&self) -> usize {
        self.periods.len()
    }

    pub fn is_empty(&self) -> bool {
        self.periods.is_empty()
    }

    /// `μ(Δ)/2π = 2h − 2 + Σ(1 − 1/mᵢ)`
    pub fn normalized_area(&self) -> Rational {
        let base = Rational::from_integer(2 * self.h as i64 - 2);
        self.periods.iter().fold(base, |acc, &m| {
            acc + Rational::one() - Rational::new(1, m as i64)
        })
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.normalized_area() > Rational::zero()
    }

    /// `3h − 3 + l`
    pub fn teich_dim(&self) -> Result<u32> {
        let d = 3 * self.h as i64 - 3 + self.periods.len() as i64;
        if d < 0 {
            return Err(Error::params(format!(
                "signature {self} has negative Teichmüller dimension"
            )));
        }
        Ok(d as u32)
    }

    /// Genus of a surface-kernel action of a group of `group_order` with this
    /// signature: `g = 1 + |G|·area/2`.
    pub fn rh_genus(&self, group_order: usize) -> Result<u64> {
        let area = self.normalized_area();
        if area <= Rational::zero() {
            return Err(Error::params(format!("signature {self} is not hyperbolic")));
        }
        let twice = area * Rational::from_integer(group_order as i64);
        if !twice.is_integer() || twice.to_integer() % 2 != 0 {
            return Err(Error::NonIntegral(format!(
                "|G|·area = {twice} is not an even integer for {self} and |G| = {group_order}"
            )));
        }
        Ok(1 + (twice.to_integer() / 2) as u64)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.periods.iter().map(|p| p.to_string()).collect();
        write!(f, "{};{}", self.h, ps.join(","))
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Accepts `"h;m1,m2,..."`, with optional parentheses, spaces, and `-` or
    /// nothing for an empty period list.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
            .collect();
        let (h, rest) = t
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("signature {s:?} must look like h;m1,m2,...")))?;
        let h = h
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad orbit genus in {s:?}")))?;
        let periods = if rest.is_empty() || rest == "-" {
            Vec::new()
        } else {
            rest.split(',')
                .map(|p| {
                    p.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad period {p:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Signature::new(h, periods).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Signature {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Signature {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Every signature `(h; m₁,…,m_l)` of normalized area `2(genus−1)/group_order`
/// whose periods lie in `available_orders` (1 is ignored).
///
/// Sorted by `h`, then by `l`, then lexicographically by periods.
pub fn candidate_signatures(available_orders: &[u32], group_order: usize, genus: u64) -> Result<Vec<Signature>> {
    if genus < 2 {
        return Err(Error::params("candidate signatures need genus >= 2"));
    }
    let target = Rational::new(2 * (genus as i64 - 1), group_order as i64);
    let mut orders: Vec<u32> = available_orders.iter().copied().filter(|&m| m >= 2).collect();
    orders.sort_unstable();
    orders.dedup();

    let mut out = Vec::new();
    let mut h = 0i64;
    // 2h − 2 ≤ target bounds h
    while Rational::from_integer(2 * h - 2) <= target {
        let remaining = target - Rational::from_integer(2 * h - 2);
        let mut current = Vec::new();
        periods_summing_to(&orders, 0, remaining, &mut current, &mut |ps| {
            out.push(Signature {
                h: h as u32,
                periods: ps.to_vec(),
            })
        });
        h += 1;
    }
    out.sort_by(|a, b| {
        (a.h, a.periods.len(), &a.periods).cmp(&(b.h, b.periods.len(), &b.periods))
    });
    Ok(out)
}

/// Non-decreasing period lists (drawn from `orders[start..]`) with
/// `Σ(1 − 1/m) = remaining`. Each term is in `[1/2, 1)`, which bounds the depth.
fn periods_summing_to(
    orders: &[u32],
    start: usize,
    remaining: Rational,
    current: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if remaining.is_zero() {
        emit(current);
        return;
    }
    let half = Rational::new(1, 2);
    if remaining < half {
        return;
    }
    for (i, &m) in orders.iter().enumerate().skip(start) {
        let term = Rational::one() - Rational::new(1, m as i64);
        if term > remaining {
            break;
        }
        let left = remaining - term;
        if !left.is_zero() && left < half {
            continue;
        }
        current.push(m);
        periods_summing_to(orders, i, left, current, emit);
        current.pop();
    }
}

/// One row pattern of the extension table; `t`, `t1`, `t2` are free periods
/// and `2t` means twice `t`.
#[derive(Debug, Clone, Copy)]
pub struct ExtensionPattern {
    pub inner: &'static str,
    pub outer: &'static str,
    pub index: u32,
}

/// Dimension-preserving inclusions `Δ ⊂ Δ′` used by the boundary analysis.
pub const EXTENSION_TABLE: &[ExtensionPattern] = &[
    ExtensionPattern {
        inner: "1;t",
        outer: "0;2,2,2,2t",
        index: 2,
    },
    ExtensionPattern {
        inner: "0;t,t,t,t",
        outer: "0;2,2,2,t",
        index: 4,
    },
    ExtensionPattern {
        inner: "0;t1,t1,t2,t2",
        outer: "0;2,2,t1,t2",
        index: 2,
    },
    ExtensionPattern {
        inner: "2;",
        outer: "0;2,2,2,2,2,2",
        index: 2,
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionRule {
    pub inner: Signature,
    pub outer: Signature,
    pub index: u32,
}

impl ExtensionRule {
    /// Area ratio equals the index and the Teichmüller dimensions agree.
    pub fn is_consistent(&self) -> bool {
        self.inner.normalized_area() == self.outer.normalized_area() * Rational::from_integer(self.index as i64)
            && self.inner.teich_dim().ok() == self.outer.teich_dim().ok()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Lit(u32),
    Var(String),
    Double(String),
}

fn tokenize(pattern: &str) -> (u32, Vec<Token>) {
    let (h, rest) = pattern.split_once(';').expect("pattern has ';'");
    let toks = rest
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            if let Ok(v) = t.parse() {
                Token::Lit(v)
            } else if let Some(var) = t.strip_prefix('2') {
                Token::Double(var.to_string())
            } else {
                Token::Var(t.to_string())
            }
        })
        .collect();
    (h.parse().expect("pattern genus"), toks)
}

/// Direct dimension-preserving extensions of `sig` according to [`EXTENSION_TABLE`].
pub fn possible_extensions(sig: &Signature) -> Vec<ExtensionRule> {
    let mut rules: Vec<ExtensionRule> = Vec::new();
    for row in EXTENSION_TABLE {
        let (h_in, inner) = tokenize(row.inner);
        if h_in != sig.h || inner.len() != sig.periods.len() {
            continue;
        }
        let (h_out, outer) = tokenize(row.outer);
        for binding in bindings(&inner, &sig.periods) {
            let periods: Option<Vec<u32>> = outer
                .iter()
                .map(|t| match t {
                    Token::Lit(v) => Some(*v),
                    Token::Var(v) => lookup(&binding, v),
                    Token::Double(v) => lookup(&binding, v).map(|x| 2 * x),
                })
                .collect();
            let Some(periods) = periods else { continue };
            let Ok(outer_sig) = Signature::new(h_out, periods) else { continue };
            let rule = ExtensionRule {
                inner: sig.clone(),
                outer: outer_sig,
                index: row.index,
            };
            if rule.is_consistent() && !rules.contains(&rule) {
                rules.push(rule);
            }
        }
    }
    rules
}

fn lookup(binding: &[(String, u32)], var: &str) -> Option<u32> {
    binding.iter().find(|(n, _)| n == var).map(|(_, v)| *v)
}

/// Assignments of pattern variables matching `periods` in some order.
fn bindings(pattern: &[Token], periods: &[u32]) -> Vec<Vec<(String, u32)>> {
    let mut out = Vec::new();
    let mut used = vec![false; periods.len()];
    let mut binding = Vec::new();
    bind_rec(pattern, periods, &mut used, &mut binding, &mut out);
    out
}

fn bind_rec(
    pattern: &[Token],
    periods: &[u32],
    used: &mut [bool],
    binding: &mut Vec<(String, u32)>,
    out: &mut Vec<Vec<(String, u32)>>,
) {
    let Some((tok, rest)) = pattern.split_first() else {
        if !out.contains(binding) {
            out.push(binding.clone());
        }
        return;
    };
    for i in 0..periods.len() {
        if used[i] {
            continue;
        }
        let p = periods[i];
        let (ok, pushed) = match tok {
            Token::Lit(v) => (*v == p, false),
            Token::Var(v) => match lookup(binding, v) {
                Some(x) => (x == p, false),
                None => {
                    binding.push((v.clone(), p));
                    (true, true)
                }
            },
            Token::Double(v) => match lookup(binding, v) {
                Some(x) => (2 * x == p, false),
                None if p % 2 == 0 && p >= 4 => {
                    binding.push((v.clone(), p / 2));
                    (true, true)
                }
                None => (false, false),
            },
        };
        if ok {
            used[i] = true;
            bind_rec(rest, periods, used, binding, out);
            used[i] = false;
        }
        if pushed {
            binding.pop();
        }
    }
}

/// Area as an `f64`, for display only.
pub fn area_f64(sig: &Signature) -> f64 {
    sig.normalized_area().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn areas() {
        assert_eq!(sig("0;2,2,2,2,2").normalized_area(), Rational::new(1, 2));
        assert_eq!(sig("1;2").normalized_area(), Rational::new(1, 2));
        assert_eq!(sig("0;2,8,8").normalized_area(), Rational::new(1, 4));
    }

    #[test]
    fn teichmuller_dimensions() {
        assert_eq!(sig("0;2,2,4,4").teich_dim().unwrap(), 1);
        assert_eq!(sig("0;2,2,2,2,2").teich_dim().unwrap(), 2);
        assert_eq!(sig("1;2").teich_dim().unwrap(), 1);
        assert!(sig("0;2").teich_dim().is_err());
    }

    #[test]
    fn riemann_hurwitz() {
        assert_eq!(sig("0;2,2,2,2,2").rh_genus(44).unwrap(), 12);
        assert_eq!(sig("0;2,2,4,4").rh_genus(52).unwrap(), 14);
        assert_eq!(sig("0;2,8,8").rh_genus(136).unwrap(), 18);
        assert!(matches!(sig("0;2,2,2,2,2").rh_genus(6), Err(Error::NonIntegral(_))));
        assert!(sig("0;2,2,2,2").rh_genus(8).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(sig("(0; 2, 2, 4, 4)"), sig("0;4,2,4,2"));
        assert_eq!(sig("2;-").periods(), &[] as &[u32]);
        assert_eq!(sig("2;").to_string(), "2;");
        assert!("0;1,2".parse::<Signature>().is_err());
        assert!("0,2,2".parse::<Signature>().is_err());
    }

    #[test]
    fn candidates_for_order_44() {
        let c = candidate_signatures(&[1, 2, 4, 11, 22, 44], 44, 12).unwrap();
        assert_eq!(c, vec![sig("0;2,2,4,4"), sig("0;2,2,2,2,2"), sig("1;2")]);
        let c = candidate_signatures(&[1, 2, 11, 22], 44, 12).unwrap();
        assert_eq!(c, vec![sig("0;2,2,2,2,2"), sig("1;2")]);
        let c = candidate_signatures(&[1, 2, 3, 4, 6, 12], 44, 12).unwrap();
        assert!(c.contains(&sig("0;2,2,3,6")));
        assert!(c.contains(&sig("0;2,3,3,3")));
    }

    #[test]
    fn extensions() {
        let rules = possible_extensions(&sig("0;2,2,4,4"));
        assert_eq!(rules.len(), 1);
        assert_eq!(rules[0].outer, sig("0;2,2,2,4"));
        assert_eq!(rules[0].index, 2);
        assert!(possible_extensions(&sig("0;2,2,2,2,2")).is_empty());
        let rules = possible_extensions(&sig("1;2"));
        assert_eq!(rules.len(), 1);
        assert_eq!(rules[0].outer, sig("0;2,2,2,4"));
        assert_eq!(rules[0].index, 2);
        let rules = possible_extensions(&sig("2;"));
        assert_eq!(rules[0].outer, sig("0;2,2,2,2,2,2"));
        assert!(possible_extensions(&sig("0;3,3,3,3")).iter().any(|r| r.index == 4));
    }

    #[test]
    fn every_table_row_is_consistent_on_samples() {
        for s in ["1;3", "1;5", "0;3,3,3,3", "0;2,2,3,3", "0;3,3,5,5", "2;"] {
            for r in possible_extensions(&sig(s)) {
                assert!(r.is_consistent(), "{r:?}");
            }
        }
    }
}
