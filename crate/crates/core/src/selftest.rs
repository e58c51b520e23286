//! The invariant suite run by `autsurf selftest`.

use std::path::Path;

use crate::classify::{boundary_vectors, groups_of_order_4q, BoundaryCase};
use crate::error::Result;
use crate::fuchsian::Signature;
use crate::genvec::{enumerate_vectors, vector_satisfies, BraidDirection};
use crate::golden;
use crate::jacobian::{decomposition_report, dimension_sum, family_action, quotient_genus, quotient_genus_by_characters, Family};
use crate::reptheory::{dihedral_characters, find_root_of_unity, metacyclic4_characters};

#[derive(Debug, Clone)]
pub struct SelftestItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn item(name: &str, outcome: Result<(bool, String)>) -> SelftestItem {
    match outcome {
        Ok((passed, detail)) => SelftestItem {
            name: name.to_string(),
            passed,
            detail,
        },
        Err(e) => SelftestItem {
            name: name.to_string(),
            passed: false,
            detail: e.to_string(),
        },
    }
}

const PRIMES: [u32; 4] = [5, 7, 11, 13];

fn no_genus_one_actions() -> Result<(bool, String)> {
    let sig: Signature = "1;2".parse()?;
    let mut scanned = 0;
    for q in PRIMES {
        for g in groups_of_order_4q(q)? {
            if !enumerate_vectors(&g, &sig)?.is_empty() {
                return Ok((false, format!("{} admits a (1;2) vector", g.spec())));
            }
            scanned += 1;
        }
    }
    Ok((true, format!("{scanned} groups scanned, none admits (1;2)")))
}

fn metacyclic_only_for_2244() -> Result<(bool, String)> {
    let sig: Signature = "0;2,2,4,4".parse()?;
    for q in [5, 13] {
        let u = find_root_of_unity(q, 4)?;
        for g in groups_of_order_4q(q)? {
            let count = enumerate_vectors(&g, &sig)?.len();
            let is_target = g.spec().to_string() == format!("metacyclic:{q},4,{u}");
            if (count > 0) != is_target {
                return Ok((false, format!("{} has {count} vectors", g.spec())));
            }
        }
    }
    Ok((true, "only C_q ⋊_4 C_4 admits (0;2,2,4,4) at q = 5, 13".into()))
}

fn orthogonality() -> Result<(bool, String)> {
    let mut n = 0;
    for q in PRIMES {
        dihedral_characters(q)?.verify_orthogonality()?;
        n += 1;
        if q % 4 == 1 {
            metacyclic4_characters(q, find_root_of_unity(q, 4)?)?.verify_orthogonality()?;
            n += 1;
        }
    }
    Ok((true, format!("{n} tables pass both orthogonality relations")))
}

fn families() -> impl Iterator<Item = (Family, u32)> {
    PRIMES
        .into_iter()
        .flat_map(|q| [(Family::F2, q), (Family::F1, q)])
        .filter(|&(f, q)| f == Family::F2 || q % 4 == 1)
}

fn genus_sums() -> Result<(bool, String)> {
    for (f, q) in families() {
        let (t, v) = family_action(f, q)?;
        let g = v.action_genus(t.group())?;
        if dimension_sum(&t, &v)? != g {
            return Ok((false, format!("{f} at q = {q}")));
        }
    }
    Ok((true, "Σ d·dim = g for both families at q = 5, 7, 11, 13".into()))
}

fn quotient_double_computation() -> Result<(bool, String)> {
    let mut n = 0;
    for (f, q) in families() {
        let (t, v) = family_action(f, q)?;
        for h in t.group().cyclic_subgroups() {
            let a = quotient_genus(t.group(), &v, &h)?;
            let b = quotient_genus_by_characters(&t, &v, &h)?;
            if a != b {
                return Ok((false, format!("{f} q = {q}: {a} ≠ {b}")));
            }
            n += 1;
        }
    }
    Ok((true, format!("{n} cyclic subgroups agree")))
}

fn braid_round_trips() -> Result<(bool, String)> {
    let g = "dihedral:22".parse::<crate::group::GroupSpec>()?.build()?;
    let sig: Signature = "0;2,2,2,2,2".parse()?;
    let vectors = enumerate_vectors(&g, &sig)?;
    let mut moves = 0;
    for v in vectors.iter().step_by(vectors.len() / 250 + 1) {
        for i in 1..sig.len() {
            let w = v.braid_move(&g, i, BraidDirection::Forward)?;
            if !vector_satisfies(&g, &w) || w.braid_move(&g, i, BraidDirection::Backward)? != *v {
                return Ok((false, format!("braid {i} on {:?}", v.entry_labels(&g))));
            }
            moves += 2;
        }
    }
    Ok((true, format!("{moves} braid moves round-trip and stay valid")))
}

fn jacobians() -> Result<(bool, String)> {
    let f2 = decomposition_report(Family::F2, 11)?;
    let f1 = decomposition_report(Family::F1, 13)?;
    let ok = f2.factor_genera() == [1, 5, 6] && f1.factor_genera() == [2, 3, 3, 3, 3] && f1.is_complete() && f2.is_complete();
    Ok((ok, format!("F2 q=11 {:?}, F1 q=13 {:?}", f2.factor_genera(), f1.factor_genera())))
}

fn boundary() -> Result<(bool, String)> {
    let a = boundary_vectors(17, BoundaryCase::Ord8)?;
    let b = boundary_vectors(7, BoundaryCase::Ord6)?;
    let ok = a.key_checks_pass() && a.subgroup_ok && b.subgroup_ok;
    Ok((ok, "q = 17 ord8 and q = 7 ord6 restrictions".into()))
}

fn goldens(dir: &Path, workers: usize) -> Result<(bool, String)> {
    let checks = golden::verify(dir, workers)?;
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{}: stored {} oracle {} engine {}", c.name, c.stored, c.oracle, c.engine))
        .collect();
    if bad.is_empty() {
        Ok((true, format!("{} stored values reproduced", checks.len())))
    } else {
        Ok((false, bad.join("; ")))
    }
}

pub fn run_selftest(golden_dir: &Path, workers: usize) -> Vec<SelftestItem> {
    vec![
        item("no (1;2) actions of order 4q", no_genus_one_actions()),
        item("(0;2,2,4,4) only for C_q ⋊_4 C_4", metacyclic_only_for_2244()),
        item("character orthogonality", orthogonality()),
        item("genus-sum identity", genus_sums()),
        item("quotient genus double computation", quotient_double_computation()),
        item("braid round trips", braid_round_trips()),
        item("jacobian decompositions", jacobians()),
        item("boundary restrictions", boundary()),
        item("golden values", goldens(golden_dir, workers)),
    ]
}
