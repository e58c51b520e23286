//! Isotypic factor dimensions, admissible subgroup collections, quotient
//! genera and the Jacobian decompositions of the two equisymmetric families.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fuchsian::Signature;
use crate::genvec::{vector_satisfies, GeneratingVector};
use crate::group::{FiniteGroup, SubgroupHandle};
use crate::reptheory::{dihedral_characters, find_root_of_unity, metacyclic4_characters, Character, CharacterTable};

/// `d(h−1) + ½Σ(d − d^{⟨xᵢ⟩})` for a non-trivial character, `h` for the trivial one.
pub fn factor_dimension(table: &CharacterTable, chi: &Character, vec: &GeneratingVector) -> Result<u32> {
    let h = vec.signature.orbit_genus() as i64;
    if chi.is_trivial() {
        return Ok(h as u32);
    }
    let g = table.group();
    let d = chi.degree as i64;
    let mut twice = 2 * d * (h - 1);
    for &x in &vec.elliptic {
        twice += d - table.fixed_dim(chi, &g.subgroup_generated(&[x]))? as i64;
    }
    if twice % 2 != 0 {
        return Err(Error::NonIntegral(format!(
            "factor dimension of {} is {twice}/2",
            chi.name
        )));
    }
    if twice < 0 {
        return Err(Error::invariant(format!(
            "factor dimension of {} is negative",
            chi.name
        )));
    }
    Ok((twice / 2) as u32)
}

/// Characters with non-zero factor dimension.
pub fn relevant_reps<'t>(table: &'t CharacterTable, vec: &GeneratingVector) -> Result<Vec<&'t Character>> {
    let mut out = Vec::new();
    for chi in table.characters() {
        if factor_dimension(table, chi, vec)? != 0 {
            out.push(chi);
        }
    }
    Ok(out)
}

/// `Σᵢ d^{Hᵢ} ≤ d` for every relevant character.
pub fn is_admissible(table: &CharacterTable, subgroups: &[SubgroupHandle], vec: &GeneratingVector) -> Result<bool> {
    for chi in relevant_reps(table, vec)? {
        let mut total = 0;
        for h in subgroups {
            total += table.fixed_dim(chi, h)?;
        }
        if total > chi.degree {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of orbits of `⟨x⟩` acting by left multiplication on `G/H`.
fn coset_orbits(group: &FiniteGroup, coset_of: &[usize], cosets: usize, x: usize) -> usize {
    let mut seen = vec![false; cosets];
    // pick a representative element per coset
    let mut rep = vec![usize::MAX; cosets];
    for (e, &c) in coset_of.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = e;
        }
    }
    let mut orbits = 0;
    for c in 0..cosets {
        if seen[c] {
            continue;
        }
        orbits += 1;
        let mut e = rep[c];
        while !seen[coset_of[e]] {
            seen[coset_of[e]] = true;
            e = group.mul(x, e);
        }
    }
    orbits
}

/// Genus of `S/H` from Riemann–Hurwitz over coset orbits:
/// `2g_H − 2 = n(2h − 2) + Σᵢ (n − #orbits of ⟨xᵢ⟩ on G/H)`, `n = [G:H]`.
pub fn quotient_genus(group: &FiniteGroup, vec: &GeneratingVector, h: &SubgroupHandle) -> Result<u64> {
    let n = h.index();
    // left cosets gH
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut cosets = 0;
    for g in 0..group.order() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        for &y in h.elements() {
            coset_of[group.mul(g, y)] = cosets;
        }
        cosets += 1;
    }
    debug_assert_eq!(cosets, n);
    let orbit_h = vec.signature.orbit_genus() as i64;
    let mut twice = n as i64 * (2 * orbit_h - 2);
    for &x in vec.entries().iter().skip(2 * vec.hyperbolic.len()) {
        twice += (n - coset_orbits(group, &coset_of, cosets, x)) as i64;
    }
    let numerator = twice + 2;
    if numerator < 0 || numerator % 2 != 0 {
        return Err(Error::NonIntegral(format!("quotient genus is {numerator}/2")));
    }
    Ok((numerator / 2) as u64)
}

/// Character-theoretic oracle: `g_H = Σ_χ d_χ^H · factor_dimension(χ)`.
pub fn quotient_genus_by_characters(table: &CharacterTable, vec: &GeneratingVector, h: &SubgroupHandle) -> Result<u64> {
    let mut total = 0u64;
    for chi in table.characters() {
        total += table.fixed_dim(chi, h)? as u64 * factor_dimension(table, chi, vec)? as u64;
    }
    Ok(total)
}

/// `Σ_χ d_χ · factor_dimension(χ)`, which must equal the genus.
pub fn dimension_sum(table: &CharacterTable, vec: &GeneratingVector) -> Result<u64> {
    let mut total = 0u64;
    for chi in table.characters() {
        total += chi.degree as u64 * factor_dimension(table, chi, vec)? as u64;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `C_q ⋊₄ C₄` acting with signature `(0;2,2,4,4)`, `q ≡ 1 mod 4`.
    F1,
    /// Dihedral group of order `4q` acting with signature `(0;2,2,2,2,2)`.
    F2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F1 => "F1",
            Family::F2 => "F2",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "F1" => Ok(Family::F1),
            "F2" => Ok(Family::F2),
            _ => Err(Error::Parse(format!("unknown family {s:?}, expected F1 or F2"))),
        }
    }
}

/// The family's group, character table and canonical action vector.
pub fn family_action(family: Family, q: u32) -> Result<(CharacterTable, GeneratingVector)> {
    if q < 3 || (2..q).take_while(|d| d * d <= q).any(|d| q % d == 0) {
        return Err(Error::params(format!("q = {q} must be an odd prime")));
    }
    match family {
        Family::F2 => {
            let table = dihedral_characters(q)?;
            let g = table.group();
            let vec = GeneratingVector::from_labels(
                g,
                Signature::new(0, vec![2; 5])?,
                &[],
                &["s", "s", &format!("sr^{}", q + 1), "sr", &format!("r^{q}")],
            )?;
            Ok((table, vec))
        }
        Family::F1 => {
            if q % 4 != 1 {
                return Err(Error::params(format!("family F1 needs q ≡ 1 mod 4, got q = {q}")));
            }
            let u = find_root_of_unity(q, 4)?;
            let table = metacyclic4_characters(q, u)?;
            let vec = GeneratingVector::from_labels(
                table.group(),
                Signature::new(0, vec![2, 2, 4, 4])?,
                &[],
                &["b^2", "ab^2", "ab", "b^3"],
            )?;
            Ok((table, vec))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub subgroup: String,
    pub genus: u64,
    pub multiplicity: u32,
}

#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub family: Family,
    pub q: u32,
    pub genus: u64,
    pub group: String,
    pub vector: Vec<String>,
    pub factors: Vec<Factor>,
    pub residual: i64,
    pub admissible: bool,
    pub genus_sum_ok: bool,
    /// Each `⟨a^t b⟩` in the collection is conjugate to `⟨b⟩` (F1 only).
    pub conjugacy_ok: bool,
    pub relevant: Vec<String>,
}

impl DecompositionReport {
    /// Some factor is a Jacobian of genus one, i.e. an elliptic curve.
    pub fn has_elliptic_factor(&self) -> bool {
        self.factors.iter().any(|f| f.genus == 1)
    }

    pub fn is_complete(&self) -> bool {
        self.residual == 0 && self.admissible && self.genus_sum_ok && self.conjugacy_ok
    }

    pub fn factor_genera(&self) -> Vec<u64> {
        self.factors
            .iter()
            .flat_map(|f| std::iter::repeat(f.genus).take(f.multiplicity as usize))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.to_string(),
            "q": self.q,
            "genus": self.genus,
            "factors": self.factors.iter().map(|f| json!({
                "subgroup": f.subgroup,
                "genus": f.genus,
                "multiplicity": f.multiplicity,
            })).collect::<Vec<_>>(),
            "residual": self.residual,
            "admissible": self.admissible,
            "genus_sum_ok": self.genus_sum_ok,
            "elliptic_factor": self.has_elliptic_factor(),
        })
    }
}

/// Builds the family's action, checks the admissible collection and sums the
/// quotient genera; the residual is whatever dimension is left over.
pub fn decomposition_report(family: Family, q: u32) -> Result<DecompositionReport> {
    let (table, vec) = family_action(family, q)?;
    let g = table.group();
    if !vector_satisfies(g, &vec) {
        return Err(Error::invariant("family action vector is not valid"));
    }
    let genus = vec.action_genus(g)?;
    let cyclic = |label: &str| -> Result<SubgroupHandle> { Ok(g.subgroup_generated(&[g.parse_element(label)?])) };

    let (collection, factors, conjugacy_ok) = match family {
        Family::F2 => {
            let subgroups = vec![cyclic("r")?, cyclic("s")?, cyclic("sr")?];
            let factors = ["<r>", "<s>", "<sr>"]
                .iter()
                .zip(&subgroups)
                .map(|(name, h)| {
                    Ok(Factor {
                        subgroup: name.to_string(),
                        genus: quotient_genus(g, &vec, h)?,
                        multiplicity: 1,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            (subgroups, factors, true)
        }
        Family::F1 => {
            let a = g.parse_element("a")?;
            let b = g.parse_element("b")?;
            let hb = g.subgroup_generated(&[b]);
            let genus_b = quotient_genus(g, &vec, &hb)?;
            let mut subgroups = vec![g.subgroup_generated(&[a])];
            let mut conjugacy_ok = true;
            for t in 1..=4 {
                let x = g.mul(g.pow(a, t), b);
                conjugacy_ok &= g.cyclic_subgroups_conjugate(x, b);
                let h = g.subgroup_generated(&[x]);
                conjugacy_ok &= quotient_genus(g, &vec, &h)? == genus_b;
                subgroups.push(h);
            }
            let factors = vec![
                Factor {
                    subgroup: "<a>".into(),
                    genus: quotient_genus(g, &vec, &subgroups[0])?,
                    multiplicity: 1,
                },
                Factor {
                    subgroup: "<b>".into(),
                    genus: genus_b,
                    multiplicity: 4,
                },
            ];
            (subgroups, factors, conjugacy_ok)
        }
    };

    let admissible = is_admissible(&table, &collection, &vec)?;
    let covered: u64 = factors.iter().map(|f| f.genus * f.multiplicity as u64).sum();
    let residual = genus as i64 - covered as i64;
    let genus_sum_ok = dimension_sum(&table, &vec)? == genus;
    let relevant = relevant_reps(&table, &vec)?.iter().map(|c| c.name.clone()).collect();
    Ok(DecompositionReport {
        family,
        q,
        genus,
        group: g.spec().to_string(),
        vector: vec.entry_labels(g),
        factors,
        residual,
        admissible,
        genus_sum_ok,
        conjugacy_ok,
        relevant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd(table: &CharacterTable, vec: &GeneratingVector, name: &str) -> u32 {
        factor_dimension(table, table.character(name).unwrap(), vec).unwrap()
    }

    #[test]
    fn dihedral_factor_dimensions() {
        let (t, v) = family_action(Family::F2, 11).unwrap();
        assert_eq!(fd(&t, &v, "U1+"), 0);
        assert_eq!(fd(&t, &v, "U1-"), 1);
        assert_eq!(fd(&t, &v, "U2+"), 0);
        assert_eq!(fd(&t, &v, "U2-"), 1);
        for j in 1..11 {
            assert_eq!(fd(&t, &v, &format!("V{j}")), if j % 2 == 1 { 1 } else { 0 });
        }
        let names: Vec<_> = relevant_reps(&t, &v).unwrap().iter().map(|c| c.name.clone()).collect();
        assert_eq!(names, ["U1-", "U2-", "V1", "V3", "V5", "V7", "V9"]);
    }

    #[test]
    fn metacyclic_factor_dimensions() {
        let (t, v) = family_action(Family::F1, 13).unwrap();
        assert_eq!(fd(&t, &v, "U0"), 0);
        assert_eq!(fd(&t, &v, "U2"), 0);
        for j in 1..=3 {
            assert_eq!(fd(&t, &v, &format!("V{j}")), 1);
        }
        let names: Vec<_> = relevant_reps(&t, &v).unwrap().iter().map(|c| c.name.clone()).collect();
        assert_eq!(names, ["U1", "U3", "V1", "V2", "V3"]);
    }

    #[test]
    fn admissibility() {
        let (t, v) = family_action(Family::F2, 11).unwrap();
        let g = t.group();
        let c = |l: &str| g.subgroup_generated(&[g.element(l).unwrap()]);
        assert!(is_admissible(&t, &[c("r"), c("s"), c("sr")], &v).unwrap());
        assert!(!is_admissible(&t, &[c("r"), c("r")], &v).unwrap());
        // sub-collections stay admissible
        assert!(is_admissible(&t, &[c("s"), c("sr")], &v).unwrap());
    }

    #[test]
    fn quotient_genus_examples() {
        let (t, v) = family_action(Family::F2, 11).unwrap();
        let g = t.group();
        let c = |l: &str| g.subgroup_generated(&[g.element(l).unwrap()]);
        assert_eq!(quotient_genus(g, &v, &c("s")).unwrap(), 5);
        assert_eq!(quotient_genus(g, &v, &c("r")).unwrap(), 1);
        assert_eq!(quotient_genus(g, &v, &c("sr")).unwrap(), 6);
        assert_eq!(quotient_genus(g, &v, &g.trivial_subgroup()).unwrap(), 12);
        assert_eq!(quotient_genus(g, &v, &g.whole_group()).unwrap(), 0);

        let (t, v) = family_action(Family::F1, 13).unwrap();
        let g = t.group();
        let c = |l: &str| g.subgroup_generated(&[g.element(l).unwrap()]);
        assert_eq!(quotient_genus(g, &v, &c("a")).unwrap(), 2);
        assert_eq!(quotient_genus(g, &v, &c("b")).unwrap(), 3);
        for h in g.cyclic_subgroups() {
            assert_eq!(
                quotient_genus(g, &v, &h).unwrap(),
                quotient_genus_by_characters(&t, &v, &h).unwrap()
            );
        }
    }

    #[test]
    fn reports() {
        let r = decomposition_report(Family::F2, 11).unwrap();
        assert_eq!(r.factor_genera(), [1, 5, 6]);
        assert_eq!(r.residual, 0);
        assert!(r.is_complete() && r.has_elliptic_factor());

        let r = decomposition_report(Family::F1, 13).unwrap();
        assert_eq!(r.factor_genera(), [2, 3, 3, 3, 3]);
        assert!(r.is_complete());

        let r = decomposition_report(Family::F1, 5).unwrap();
        assert_eq!(r.factor_genera(), [2, 1, 1, 1, 1]);
        assert_eq!(r.residual, 0);

        assert!(decomposition_report(Family::F1, 11).is_err());
        assert!(decomposition_report(Family::F2, 9).is_err());
    }
}
