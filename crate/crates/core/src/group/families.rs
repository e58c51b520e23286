//! The concrete group families and their string specs.
//!
//! Spec strings are `family:params`, products joined by `x`:
//! `cyclic:44`, `dihedral:22`, `metacyclic:13,4,5`, `q8xc:5`, `d2semi:3,3`,
//! `cyclic:11xcyclic:2xcyclic:2`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::{FiniteGroup, Generator, Word, MAX_ORDER};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `C_n`, generator `c`.
    Cyclic(u32),
    /// Dihedral group of order `2n`: `⟨r,s : r^n = s² = (sr)² = 1⟩`.
    Dihedral(u32),
    /// `⟨a,b : a^q = b^m = 1, bab⁻¹ = a^u⟩`, requires `u^m ≡ 1 mod q`.
    Metacyclic { q: u32, m: u32, u: u32 },
    /// `Q₈ × C_n` on generators `x, y, z`; `n = 1` gives `Q₈`.
    Q8TimesCyclic(u32),
    /// `D_{2^n} ⋊ C₂` of order `2^{n+2}`: `trt = r^m`, `tst = s`.
    Dihedral2Semidirect { n: u32, m: u32 },
    Product(Vec<GroupSpec>),
    /// A subgroup re-realized as a group; not buildable from a string.
    Subgroup {
        parent: Box<GroupSpec>,
        generators: Vec<String>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        let order = self.expected_order()?;
        if order > MAX_ORDER as u64 {
            return Err(Error::OrderOverflow {
                order: order.min(usize::MAX as u64) as usize,
                limit: MAX_ORDER,
            });
        }
        match *self {
            GroupSpec::Cyclic(n) => cyclic(self.clone(), n as usize),
            GroupSpec::Dihedral(n) => dihedral(self.clone(), n as usize),
            GroupSpec::Metacyclic { q, m, u } => {
                metacyclic(self.clone(), q as usize, m as usize, u as usize)
            }
            GroupSpec::Q8TimesCyclic(n) => q8_times_cyclic(self.clone(), n as usize),
            GroupSpec::Dihedral2Semidirect { n, m } => d2_semidirect(self.clone(), n, m as usize),
            GroupSpec::Product(ref factors) => {
                let built = factors
                    .iter()
                    .map(|f| f.build())
                    .collect::<Result<Vec<_>>>()?;
                direct_product(self.clone(), &built)
            }
            GroupSpec::Subgroup { .. } => Err(Error::Unsupported(
                "subgroup specs are produced by subgroup_as_group, not built".into(),
            )),
        }
    }

    /// Order implied by the parameters, after validating them.
    pub fn expected_order(&self) -> Result<u64> {
        match *self {
            GroupSpec::Cyclic(n) => {
                if n == 0 {
                    return Err(Error::params("cyclic group needs n >= 1"));
                }
                Ok(n as u64)
            }
            GroupSpec::Dihedral(n) => {
                if n == 0 {
                    return Err(Error::params("dihedral group needs n >= 1"));
                }
                Ok(2 * n as u64)
            }
            GroupSpec::Metacyclic { q, m, u } => {
                if q == 0 || m == 0 {
                    return Err(Error::params("metacyclic group needs q, m >= 1"));
                }
                if pow_mod(u as u64, m as u64, q as u64) != 1 % q as u64 {
                    return Err(Error::params(format!(
                        "{u}^{m} is not 1 mod {q}, so b a b^-1 = a^{u} does not define a group of order {}",
                        q as u64 * m as u64
                    )));
                }
                Ok(q as u64 * m as u64)
            }
            GroupSpec::Q8TimesCyclic(n) => {
                if n == 0 {
                    return Err(Error::params("Q8 x C_n needs n >= 1"));
                }
                Ok(8 * n as u64)
            }
            GroupSpec::Dihedral2Semidirect { n, m } => {
                if n == 0 || n > 20 {
                    return Err(Error::params("d2semi needs 1 <= n <= 20"));
                }
                let modulus = 1u64 << n;
                if m % 2 == 0 || (m as u64 * m as u64) % modulus != 1 % modulus {
                    return Err(Error::params(format!(
                        "m = {m} must satisfy m^2 = 1 mod 2^{n} for r -> r^m to be an involutive automorphism"
                    )));
                }
                Ok(1u64 << (n + 2))
            }
            GroupSpec::Product(ref factors) => {
                if factors.is_empty() {
                    return Err(Error::params("empty product"));
                }
                let mut total: u64 = 1;
                for f in factors {
                    total = total.saturating_mul(f.expected_order()?);
                }
                Ok(total)
            }
            GroupSpec::Subgroup { .. } => Err(Error::Unsupported("subgroup spec".into())),
        }
    }

    /// Name in the usual mathematical notation, e.g. `C_13 ⋊_4 C_4`.
    ///
    /// Dihedral groups follow the `D_n` = order `2n` convention.
    pub fn paper_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("C_{n}"),
            GroupSpec::Dihedral(n) => format!("D_{n}"),
            GroupSpec::Metacyclic { q, m, u } => {
                let k = multiplicative_order(*u as u64, *q as u64).unwrap_or(1);
                if k == 1 {
                    format!("C_{q} × C_{m}")
                } else {
                    format!("C_{q} ⋊_{k} C_{m}")
                }
            }
            GroupSpec::Q8TimesCyclic(1) => "Q_8".to_string(),
            GroupSpec::Q8TimesCyclic(n) => format!("Q_8 × C_{n}"),
            GroupSpec::Dihedral2Semidirect { n, m } => format!("D_{{2^{n}}} ⋊ C_2 (m={m})"),
            GroupSpec::Product(factors) => {
                let mut parts: Vec<(String, usize)> = Vec::new();
                for f in factors {
                    let name = f.paper_name();
                    match parts.last_mut() {
                        Some((last, k)) if *last == name => *k += 1,
                        _ => parts.push((name, 1)),
                    }
                }
                parts
                    .into_iter()
                    .map(|(n, k)| if k == 1 { n } else { format!("{n}^{k}") })
                    .collect::<Vec<_>>()
                    .join(" × ")
            }
            GroupSpec::Subgroup { parent, generators } => {
                format!("⟨{}⟩ ≤ {}", generators.join(", "), parent.paper_name())
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Metacyclic { q, m, u } => write!(f, "metacyclic:{q},{m},{u}"),
            GroupSpec::Q8TimesCyclic(n) => write!(f, "q8xc:{n}"),
            GroupSpec::Dihedral2Semidirect { n, m } => write!(f, "d2semi:{n},{m}"),
            GroupSpec::Product(factors) => {
                let parts: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::Subgroup { parent, generators } => {
                write!(f, "sub({parent}|{})", generators.join(","))
            }
        }
    }
}

const FAMILIES: &[&str] = &["cyclic", "dihedral", "metacyclic", "q8xc", "d2semi"];

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        let mut factors = Vec::new();
        loop {
            let (factor, tail) = parse_factor(rest)?;
            factors.push(factor);
            if tail.is_empty() {
                break;
            }
            rest = tail
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected 'x' between factors in {s:?}")))?;
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GroupSpec::Product(factors)
        })
    }
}

fn parse_factor(s: &str) -> Result<(GroupSpec, &str)> {
    if let Some(tail) = s.strip_prefix("q8") {
        if !tail.starts_with("xc:") {
            return Ok((GroupSpec::Q8TimesCyclic(1), tail));
        }
    }
    let (name, tail) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected family:params, got {s:?}")))?;
    if !FAMILIES.contains(&name) {
        return Err(Error::Parse(format!(
            "unknown group family {name:?} (expected one of {})",
            FAMILIES.join(", ")
        )));
    }
    let end = tail
        .find(|c: char| !(c.is_ascii_digit() || c == ','))
        .unwrap_or(tail.len());
    let params: Vec<u32> = tail[..end]
        .split(',')
        .map(|p| {
            p.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad parameter {p:?} for {name}")))
        })
        .collect::<Result<_>>()?;
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::Parse(format!("{name} takes {k} parameter(s)")))
        }
    };
    let spec = match name {
        "cyclic" => {
            arity(1)?;
            GroupSpec::Cyclic(params[0])
        }
        "dihedral" => {
            arity(1)?;
            GroupSpec::Dihedral(params[0])
        }
        "metacyclic" => {
            arity(3)?;
            GroupSpec::Metacyclic {
                q: params[0],
                m: params[1],
                u: params[2],
            }
        }
        "q8xc" => {
            arity(1)?;
            GroupSpec::Q8TimesCyclic(params[0])
        }
        "d2semi" => {
            arity(2)?;
            GroupSpec::Dihedral2Semidirect {
                n: params[0],
                m: params[1],
            }
        }
        _ => unreachable!(),
    };
    Ok((spec, &tail[end..]))
}

pub(crate) fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % modulus;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        e >>= 1;
    }
    result
}

/// Least `k ≥ 1` with `u^k ≡ 1 mod q`, if `u` is a unit.
pub(crate) fn multiplicative_order(u: u64, q: u64) -> Option<u64> {
    if q == 1 {
        return Some(1);
    }
    if u.gcd(&q) != 1 {
        return None;
    }
    let mut x = u % q;
    let mut k = 1;
    while x != 1 {
        x = x * (u % q) % q;
        k += 1;
    }
    Some(k)
}

fn finish(
    spec: GroupSpec,
    order: usize,
    mul: impl Fn(usize, usize) -> usize,
    generators: Vec<(&str, usize)>,
    words: Vec<Word>,
) -> Result<FiniteGroup> {
    let mut table = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = mul(a, b) as u32;
        }
    }
    let generators = generators
        .into_iter()
        .map(|(name, element)| Generator {
            name: name.to_string(),
            element,
        })
        .collect();
    FiniteGroup::from_table(spec, table, generators, Some(words), None)
}

fn cyclic(spec: GroupSpec, n: usize) -> Result<FiniteGroup> {
    let words = (0..n).map(|k| vec![(0, k as u32)]).collect();
    finish(spec, n, |a, b| (a + b) % n, vec![("c", 1 % n)], words)
}

/// Element `s^e r^i` has index `e·n + i`.
fn dihedral(spec: GroupSpec, n: usize) -> Result<FiniteGroup> {
    let order = 2 * n;
    let mul = |a: usize, b: usize| {
        let (e1, i1) = (a / n, a % n);
        let (e2, i2) = (b / n, b % n);
        let i1 = if e2 == 1 { (n - i1) % n } else { i1 };
        ((e1 + e2) % 2) * n + (i1 + i2) % n
    };
    let words = (0..order)
        .map(|x| vec![(1, (x / n) as u32), (0, (x % n) as u32)])
        .collect();
    finish(spec, order, mul, vec![("r", 1 % n), ("s", n)], words)
}

/// Element `a^i b^j` has index `i·m + j`; `(i₁,j₁)(i₂,j₂) = (i₁ + u^{j₁} i₂, j₁ + j₂)`.
fn metacyclic(spec: GroupSpec, q: usize, m: usize, u: usize) -> Result<FiniteGroup> {
    let order = q * m;
    let upow: Vec<usize> = (0..m)
        .map(|j| pow_mod(u as u64, j as u64, q as u64) as usize)
        .collect();
    let mul = |x: usize, y: usize| {
        let (i1, j1) = (x / m, x % m);
        let (i2, j2) = (y / m, y % m);
        ((i1 + upow[j1] * i2) % q) * m + (j1 + j2) % m
    };
    let words = (0..order)
        .map(|x| vec![(0, (x / m) as u32), (1, (x % m) as u32)])
        .collect();
    finish(
        spec,
        order,
        mul,
        vec![("a", if q > 1 { m } else { 0 }), ("b", 1 % order)],
        words,
    )
}

/// Element `x^i y^e z^k` has index `(2i + e)·n + k`, with `y² = x²` and `yxy⁻¹ = x³`.
fn q8_times_cyclic(spec: GroupSpec, n: usize) -> Result<FiniteGroup> {
    let order = 8 * n;
    let decode = |v: usize| ((v / n) / 2, (v / n) % 2, v % n);
    let mul = |a: usize, b: usize| {
        let (i1, e1, k1) = decode(a);
        let (i2, e2, k2) = decode(b);
        let i2 = if e1 == 1 { (4 - i2) % 4 } else { i2 };
        let mut i = i1 + i2;
        let mut e = e1 + e2;
        if e == 2 {
            e = 0;
            i += 2;
        }
        ((i % 4) * 2 + e) * n + (k1 + k2) % n
    };
    let words = (0..order)
        .map(|v| {
            let (i, e, k) = decode(v);
            vec![(0, i as u32), (1, e as u32), (2, k as u32)]
        })
        .collect();
    let mut gens = vec![("x", 2 * n), ("y", n)];
    if n > 1 {
        gens.push(("z", 1));
    }
    finish(spec, order, mul, gens, words)
}

/// Element `s^e r^i t^f` has index `(e·2^n + i)·2 + f`, where `t` acts on the
/// dihedral part by `s ↦ s, r ↦ r^m`.
fn d2_semidirect(spec: GroupSpec, n: u32, m: usize) -> Result<FiniteGroup> {
    let big_n = 1usize << n;
    let order = 4 * big_n;
    let decode = |v: usize| ((v / 2) / big_n, (v / 2) % big_n, v % 2);
    let mul = |a: usize, b: usize| {
        let (e1, i1, f1) = decode(a);
        let (e2, mut i2, f2) = decode(b);
        if f1 == 1 {
            i2 = i2 * m % big_n;
        }
        let i1 = if e2 == 1 { (big_n - i1) % big_n } else { i1 };
        (((e1 + e2) % 2) * big_n + (i1 + i2) % big_n) * 2 + (f1 + f2) % 2
    };
    let words = (0..order)
        .map(|v| {
            let (e, i, f) = decode(v);
            vec![(1, e as u32), (0, i as u32), (2, f as u32)]
        })
        .collect();
    let gens = vec![("r", 2), ("s", 2 * big_n), ("t", 1)];
    finish(spec, order, mul, gens, words)
}

/// Lexicographic index pairing: the first factor is most significant.
fn direct_product(spec: GroupSpec, factors: &[FiniteGroup]) -> Result<FiniteGroup> {
    let sizes: Vec<usize> = factors.iter().map(|f| f.order()).collect();
    let order: usize = sizes.iter().product();
    let coords = |mut v: usize| -> Vec<usize> {
        let mut c = vec![0; sizes.len()];
        for k in (0..sizes.len()).rev() {
            c[k] = v % sizes[k];
            v /= sizes[k];
        }
        c
    };
    let all_coords: Vec<Vec<usize>> = (0..order).map(coords).collect();
    let encode = |c: &[usize]| c.iter().zip(&sizes).fold(0, |acc, (&x, &n)| acc * n + x);
    let mul = |a: usize, b: usize| {
        let prod: Vec<usize> = factors
            .iter()
            .zip(all_coords[a].iter().zip(&all_coords[b]))
            .map(|(f, (&x, &y))| f.mul(x, y))
            .collect();
        encode(&prod)
    };

    // Generator names colliding across factors get the factor position appended.
    let mut names = Vec::new();
    let mut elements = Vec::new();
    let mut slot_offsets = Vec::new();
    for (k, f) in factors.iter().enumerate() {
        slot_offsets.push(names.len());
        for g in f.generators() {
            let collides = factors
                .iter()
                .enumerate()
                .any(|(j, o)| j != k && o.generator(&g.name).is_some());
            names.push(if collides {
                format!("{}{}", g.name, k + 1)
            } else {
                g.name.clone()
            });
            let mut c = vec![0; factors.len()];
            c[k] = g.element;
            elements.push(encode(&c));
        }
    }
    let words: Option<Vec<Word>> = factors
        .iter()
        .map(|f| f.words.as_ref())
        .collect::<Option<Vec<_>>>()
        .map(|fw| {
            let offsets = &slot_offsets;
            all_coords
                .iter()
                .map(|c| {
                    c.iter()
                        .enumerate()
                        .flat_map(|(k, &x)| {
                            fw[k][x]
                                .iter()
                                .map(move |&(slot, e)| (slot + offsets[k], e))
                        })
                        .collect()
                })
                .collect()
        });
    let mut table = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = mul(a, b) as u32;
        }
    }
    let generators = names
        .into_iter()
        .zip(elements)
        .map(|(name, element)| Generator { name, element })
        .collect();
    let labels = if words.is_none() {
        Some(
            all_coords
                .iter()
                .map(|c| {
                    c.iter()
                        .enumerate()
                        .map(|(k, &x)| factors[k].label(x).to_string())
                        .collect::<Vec<_>>()
                        .join("·")
                })
                .collect(),
        )
    } else {
        None
    };
    FiniteGroup::from_table(spec, table, generators, words, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "cyclic:44",
            "dihedral:22",
            "metacyclic:13,4,5",
            "q8xc:5",
            "d2semi:3,3",
            "cyclic:11xcyclic:2xcyclic:2",
            "q8xc:3xcyclic:2",
            "metacyclic:7,6,3xcyclic:2",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("q8".parse::<GroupSpec>().unwrap(), GroupSpec::Q8TimesCyclic(1));
    }

    #[test]
    fn parse_errors() {
        assert!("foo:3".parse::<GroupSpec>().is_err());
        assert!("cyclic:".parse::<GroupSpec>().is_err());
        assert!("metacyclic:13,4".parse::<GroupSpec>().is_err());
        assert!("cyclic:4ycyclic:2".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn congruence_preconditions() {
        let bad = GroupSpec::Metacyclic { q: 13, m: 4, u: 3 };
        assert!(matches!(bad.build(), Err(Error::InvalidParameters(_))));
        let bad = GroupSpec::Dihedral2Semidirect { n: 3, m: 5 };
        // 25 ≡ 1 mod 8, so m = 5 is allowed; m = 2 is not.
        assert!(bad.build().is_ok());
        assert!(GroupSpec::Dihedral2Semidirect { n: 3, m: 2 }.build().is_err());
        assert!(matches!(
            GroupSpec::Cyclic(5000).build(),
            Err(Error::OrderOverflow { .. })
        ));
    }

    #[test]
    fn family_orders() {
        let g = GroupSpec::Dihedral2Semidirect { n: 3, m: 3 }.build().unwrap();
        assert_eq!(g.order(), 32);
        let g = GroupSpec::Q8TimesCyclic(5).build().unwrap();
        assert_eq!(g.order(), 40);
        assert_eq!(g.element_order(g.generator("x").unwrap()), 4);
        assert_eq!(g.element_order(g.generator("z").unwrap()), 5);
    }

    #[test]
    fn metacyclic_conjugation_identity() {
        for (q, m, u) in [(13u32, 4u32, 5u32), (17, 8, 2), (7, 6, 3), (11, 4, 10)] {
            let g = GroupSpec::Metacyclic { q, m, u }.build().unwrap();
            let a = g.generator("a").unwrap();
            let b = g.generator("b").unwrap();
            assert_eq!(g.element_order(a), q);
            assert_eq!(g.element_order(b), m);
            for k in 0..q as i64 {
                assert_eq!(g.conj(b, g.pow(a, k)), g.pow(a, u as i64 * k));
            }
        }
    }

    #[test]
    fn quaternion_relations() {
        let g = GroupSpec::Q8TimesCyclic(3).build().unwrap();
        let x = g.generator("x").unwrap();
        let y = g.generator("y").unwrap();
        assert_eq!(g.pow(x, 2), g.pow(y, 2));
        assert_eq!(g.conj(y, x), g.pow(x, 3));
    }

    #[test]
    fn product_generator_names() {
        let g: FiniteGroup = "cyclic:11xcyclic:2xcyclic:2"
            .parse::<GroupSpec>()
            .unwrap()
            .build()
            .unwrap();
        let names: Vec<&str> = g.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["c1", "c2", "c3"]);
        assert_eq!(g.spec().paper_name(), "C_11 × C_2^2");
    }
}
