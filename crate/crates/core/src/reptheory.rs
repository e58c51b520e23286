//! Closed-form complex character tables for the dihedral group of order `4q`
//! and for `C_q ⋊₄ C₄`, with exact fixed-subspace dimensions.

use serde_json::{json, Value};

use crate::cyclotomic::CyclotomicValue;
use crate::error::{Error, Result};
use crate::group::families::multiplicative_order;
use crate::group::{FiniteGroup, GroupSpec, SubgroupHandle};

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Least `u` with multiplicative order exactly `m` modulo the prime `q`.
pub fn find_root_of_unity(q: u32, m: u32) -> Result<u32> {
    if !is_prime(q) {
        return Err(Error::params(format!("{q} is not prime")));
    }
    if m == 0 || (q - 1) % m != 0 {
        return Err(Error::params(format!("{m} does not divide {q} − 1")));
    }
    (1..q)
        .find(|&u| multiplicative_order(u as u64, q as u64) == Some(m as u64))
        .ok_or_else(|| Error::invariant(format!("no element of order {m} mod {q}")))
}

/// Least representatives `k` of the blocks `{k, ku, −k, −ku}` partitioning
/// `{1, …, q−1}`, for `u` of multiplicative order 4.
pub fn orbit_reps_k(q: u32, u: u32) -> Result<Vec<u32>> {
    if multiplicative_order(u as u64, q as u64) != Some(4) {
        return Err(Error::params(format!("{u} does not have order 4 modulo {q}")));
    }
    let mut covered = vec![false; q as usize];
    let mut reps = Vec::new();
    for k in 1..q {
        if covered[k as usize] {
            continue;
        }
        let block = orbit_block(q, u, k);
        for &x in &block {
            if covered[x as usize] {
                return Err(Error::invariant("blocks are not disjoint"));
            }
            covered[x as usize] = true;
        }
        reps.push(k);
    }
    if covered[1..].iter().any(|c| !c) || reps.len() as u32 * 4 != q - 1 {
        return Err(Error::invariant("blocks do not cover 1..q−1"));
    }
    Ok(reps)
}

/// `{k, ku, k u², k u³}` = `{k, ku, −k, −ku}` in that order.
pub fn orbit_block(q: u32, u: u32, k: u32) -> [u32; 4] {
    let (q, u) = (q as u64, u as u64);
    let mut x = k as u64 % q;
    let mut out = [0u32; 4];
    for slot in &mut out {
        *slot = x as u32;
        x = x * u % q;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub degree: u32,
    /// One value per conjugacy class, in the table's class order.
    pub values: Vec<CyclotomicValue>,
}

impl Character {
    pub fn is_trivial(&self) -> bool {
        self.degree == 1 && self.values.iter().all(|v| v.as_integer() == Some(1))
    }
}

/// Characters of one group, stored per conjugacy class.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: FiniteGroup,
    conductor: u32,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    characters: Vec<Character>,
}

impl CharacterTable {
    fn assemble(
        group: FiniteGroup,
        conductor: u32,
        characters: Vec<(String, u32, Box<dyn Fn(usize) -> CyclotomicValue>)>,
    ) -> Self {
        let classes = group.conjugacy_classes();
        let class_of = group.class_map(&classes);
        let characters = characters
            .into_iter()
            .map(|(name, degree, f)| Character {
                name,
                degree,
                values: classes.iter().map(|c| f(c[0])).collect(),
            })
            .collect();
        CharacterTable {
            group,
            conductor,
            classes,
            class_of,
            characters,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn character(&self, name: &str) -> Option<&Character> {
        self.characters.iter().find(|c| c.name == name)
    }

    pub fn value<'a>(&self, chi: &'a Character, x: usize) -> &'a CyclotomicValue {
        &chi.values[self.class_of[x]]
    }

    /// `(1/|H|) Σ_{h∈H} χ(h)`, which must be a non-negative integer.
    pub fn fixed_dim(&self, chi: &Character, h: &SubgroupHandle) -> Result<u32> {
        let sum = h
            .elements()
            .iter()
            .fold(CyclotomicValue::zero(self.conductor), |acc, &x| &acc + self.value(chi, x));
        let total = sum.as_integer().ok_or_else(|| {
            Error::NonIntegral(format!("character sum of {} over a subgroup is {sum}", chi.name))
        })?;
        let n = h.order() as i64;
        if total < 0 || total % n != 0 {
            return Err(Error::NonIntegral(format!(
                "fixed dimension of {} is {total}/{n}",
                chi.name
            )));
        }
        Ok((total / n) as u32)
    }

    /// `Σ_classes |C|·χ(C)·conj(ψ(C))`.
    pub fn inner_product_times_order(&self, chi: &Character, psi: &Character) -> CyclotomicValue {
        self.classes
            .iter()
            .enumerate()
            .fold(CyclotomicValue::zero(self.conductor), |acc, (k, c)| {
                let term = (&chi.values[k] * &psi.values[k].conj()).scale(c.len() as i64);
                &acc + &term
            })
    }

    /// Both orthogonality relations and `Σ d² = |G|`, exactly.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let n = self.group.order() as i64;
        let degrees: i64 = self.characters.iter().map(|c| (c.degree as i64).pow(2)).sum();
        if degrees != n {
            return Err(Error::invariant(format!("Σ d² = {degrees} ≠ {n}")));
        }
        if self.characters.len() != self.classes.len() {
            return Err(Error::invariant("character count differs from class count"));
        }
        for (i, chi) in self.characters.iter().enumerate() {
            if chi.values[self.class_of[self.group.identity()]].as_integer() != Some(chi.degree as i64) {
                return Err(Error::invariant(format!("{} at the identity is not its degree", chi.name)));
            }
            for (j, psi) in self.characters.iter().enumerate() {
                let want = if i == j { n } else { 0 };
                if self.inner_product_times_order(chi, psi).as_integer() != Some(want) {
                    return Err(Error::invariant(format!(
                        "first orthogonality fails for {} and {}",
                        chi.name, psi.name
                    )));
                }
            }
        }
        for (a, ca) in self.classes.iter().enumerate() {
            for b in 0..self.classes.len() {
                let sum = self
                    .characters
                    .iter()
                    .fold(CyclotomicValue::zero(self.conductor), |acc, chi| {
                        &acc + &(&chi.values[a] * &chi.values[b].conj())
                    });
                let want = if a == b { n / ca.len() as i64 } else { 0 };
                if sum.as_integer() != Some(want) {
                    return Err(Error::invariant(format!(
                        "second orthogonality fails for classes {a} and {b}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Values as coefficient arrays over `1, ω, ω², …` with the conductor.
    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.spec().to_string(),
            "conductor": self.conductor,
            "classes": self.classes.iter().map(|c| json!({
                "representative": self.group.label(c[0]),
                "size": c.len(),
            })).collect::<Vec<_>>(),
            "characters": self.characters.iter().map(|chi| json!({
                "name": chi.name,
                "degree": chi.degree,
                "values": chi.values.iter().map(|v| v.coefficients().to_vec()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Exponent pairs `(i, j)` of each element written as `x^i y^j` in the
/// normal form of a two-generator group.
fn normal_form_exponents(group: &FiniteGroup, x: &str, xo: i64, y: &str, yo: i64) -> Result<Vec<(i64, i64)>> {
    let mut out = vec![(0, 0); group.order()];
    for i in 0..xo {
        for j in 0..yo {
            out[group.eval_word(&[(x, i), (y, j)])?] = (i, j);
        }
    }
    Ok(out)
}

/// Dihedral group of order `4q` (`r` of order `2q`):
/// `U1±: r ↦ 1, s ↦ ±1`, `U2±: r ↦ −1, s ↦ ±1`, and `V_j` for `1 ≤ j ≤ q−1`.
pub fn dihedral_characters(q: u32) -> Result<CharacterTable> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::params(format!("q = {q} must be odd and at least 3")));
    }
    let group = GroupSpec::Dihedral(2 * q).build()?;
    let n = 2 * q;
    // element = s^e r^i
    let coords = std::rc::Rc::new(normal_form_exponents(&group, "s", 2, "r", n as i64)?);
    let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    let mut chars: Vec<(String, u32, Box<dyn Fn(usize) -> CyclotomicValue>)> = Vec::new();
    for (name, rs, ss) in [("U1+", 1, 1), ("U1-", 1, -1), ("U2+", -1, 1), ("U2-", -1, -1)] {
        let c = coords.clone();
        chars.push((
            name.to_string(),
            1,
            Box::new(move |x| {
                let (e, i) = c[x];
                let v = if rs == -1 { sign(i) } else { 1 } * if ss == -1 { sign(e) } else { 1 };
                CyclotomicValue::from_integer(n, v)
            }),
        ));
    }
    for j in 1..q as i64 {
        let c = coords.clone();
        chars.push((
            format!("V{j}"),
            2,
            Box::new(move |x| {
                let (e, i) = c[x];
                if e == 1 {
                    CyclotomicValue::zero(n)
                } else {
                    &CyclotomicValue::root_power(n, j * i) + &CyclotomicValue::root_power(n, -j * i)
                }
            }),
        ));
    }
    Ok(CharacterTable::assemble(group, n, chars))
}

/// `C_q ⋊₄ C₄ = ⟨a,b : a^q = b⁴ = 1, bab⁻¹ = a^u⟩`: `U_l: a ↦ 1, b ↦ ω₄^l`
/// and `V_j` of degree 4 with `a ↦ diag(ω^{k}, ω^{ku}, ω^{−k}, ω^{−ku})` and
/// `b` the cyclic shift, so `χ(a^i b^j) = [j = 0]·Σ_block ω_q^{ik}`.
pub fn metacyclic4_characters(q: u32, u: u32) -> Result<CharacterTable> {
    let reps = orbit_reps_k(q, u)?;
    let group = GroupSpec::Metacyclic { q, m: 4, u }.build()?;
    let n = 4 * q;
    let coords = std::rc::Rc::new(normal_form_exponents(&group, "a", q as i64, "b", 4)?);
    let mut chars: Vec<(String, u32, Box<dyn Fn(usize) -> CyclotomicValue>)> = Vec::new();
    for l in 0..4i64 {
        let c = coords.clone();
        chars.push((
            format!("U{l}"),
            1,
            // ω₄ = ω_{4q}^q
            Box::new(move |x| CyclotomicValue::root_power(n, c[x].1 * l * q as i64)),
        ));
    }
    for (idx, &k) in reps.iter().enumerate() {
        let c = coords.clone();
        let block = orbit_block(q, u, k);
        chars.push((
            format!("V{}", idx + 1),
            4,
            Box::new(move |x| {
                let (i, j) = c[x];
                if j != 0 {
                    return CyclotomicValue::zero(n);
                }
                // ω_q = ω_{4q}^4
                block.iter().fold(CyclotomicValue::zero(n), |acc, &e| {
                    &acc + &CyclotomicValue::root_power(n, 4 * i * e as i64)
                })
            }),
        ));
    }
    Ok(CharacterTable::assemble(group, n, chars))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_examples() {
        assert_eq!(find_root_of_unity(13, 4).unwrap(), 5);
        assert_eq!(find_root_of_unity(17, 8).unwrap(), 2);
        assert_eq!(find_root_of_unity(7, 6).unwrap(), 3);
        assert!(find_root_of_unity(11, 4).is_err());
        assert!(find_root_of_unity(15, 2).is_err());
    }

    #[test]
    fn orbit_rep_examples() {
        assert_eq!(orbit_reps_k(13, 5).unwrap(), vec![1, 2, 4]);
        assert_eq!(orbit_block(13, 5, 1), [1, 5, 12, 8]);
        assert_eq!(orbit_block(13, 5, 2), [2, 10, 11, 3]);
        assert_eq!(orbit_block(13, 5, 4), [4, 7, 9, 6]);
        assert_eq!(orbit_reps_k(5, 2).unwrap(), vec![1]);
        assert!(orbit_reps_k(13, 4).is_err());
    }

    #[test]
    fn dihedral_table() {
        let t = dihedral_characters(11).unwrap();
        assert_eq!(t.characters().len(), 14);
        t.verify_orthogonality().unwrap();
        let g = t.group();
        let r = g.element("r").unwrap();
        let rq = g.pow(r, 11);
        assert_eq!(t.value(t.character("U2+").unwrap(), r).as_integer(), Some(-1));
        assert_eq!(t.value(t.character("U2-").unwrap(), r).as_integer(), Some(-1));
        for j in 1..11 {
            let v = t.character(&format!("V{j}")).unwrap();
            let want = if j % 2 == 0 { 2 } else { -2 };
            assert_eq!(t.value(v, rq).as_integer(), Some(want));
            let s = g.element("s").unwrap();
            assert_eq!(t.fixed_dim(v, &g.subgroup_generated(&[s])).unwrap(), 1);
            assert_eq!(t.fixed_dim(v, &g.subgroup_generated(&[r])).unwrap(), 0);
            let fixed = t.fixed_dim(v, &g.subgroup_generated(&[rq])).unwrap();
            assert_eq!(fixed, if j % 2 == 0 { 2 } else { 0 });
        }
        let s = g.element("s").unwrap();
        assert_eq!(t.fixed_dim(t.character("U1-").unwrap(), &g.subgroup_generated(&[s])).unwrap(), 0);
    }

    #[test]
    fn metacyclic_table() {
        for (q, u) in [(5, 2), (13, 5), (17, 4)] {
            let t = metacyclic4_characters(q, u).unwrap();
            t.verify_orthogonality().unwrap();
            let b = t.group().element("b").unwrap();
            for chi in t.characters() {
                if chi.degree == 4 {
                    assert!(t.value(chi, b).is_zero());
                }
            }
        }
        let t = metacyclic4_characters(13, 5).unwrap();
        assert_eq!(t.characters().len(), 7);
        let b = t.group().element("b").unwrap();
        for l in 0..4 {
            let chi = t.character(&format!("U{l}")).unwrap();
            assert_eq!(*t.value(chi, b), CyclotomicValue::root_power(52, 13 * l));
        }
        assert!(metacyclic4_characters(13, 4).is_err());
    }

    /// The monomial model is a representation: conjugating the diagonal of
    /// `a` by the shift gives the diagonal of `a^u`.
    #[test]
    fn degree_four_model_is_a_homomorphism() {
        let (q, u) = (13u32, 5u32);
        for k in orbit_reps_k(q, u).unwrap() {
            let d = orbit_block(q, u, k);
            // (P D P⁻¹)_{ii} = D_{i+1,i+1} must equal (D^u)_{ii} = u·D_{ii}
            for i in 0..4 {
                assert_eq!(d[(i + 1) % 4] as u64, d[i] as u64 * u as u64 % q as u64);
            }
        }
    }

    #[test]
    fn fixed_dimension_basics() {
        let t = metacyclic4_characters(13, 5).unwrap();
        let g = t.group();
        let trivial = g.trivial_subgroup();
        let b = g.element("b").unwrap();
        let a = g.element("a").unwrap();
        for chi in t.characters() {
            assert_eq!(t.fixed_dim(chi, &trivial).unwrap(), chi.degree);
            // conjugate subgroups fix the same dimension
            let hb = g.subgroup_generated(&[b]);
            for k in 1..5 {
                let hk = g.subgroup_generated(&[g.mul(g.pow(a, k), b)]);
                assert_eq!(t.fixed_dim(chi, &hk).unwrap(), t.fixed_dim(chi, &hb).unwrap());
            }
        }
        let u0 = t.character("U0").unwrap();
        assert!(u0.is_trivial());
        for h in g.cyclic_subgroups() {
            assert_eq!(t.fixed_dim(u0, &h).unwrap(), 1);
        }
        let json = t.to_json();
        assert_eq!(json["characters"].as_array().unwrap().len(), 7);
    }
}
