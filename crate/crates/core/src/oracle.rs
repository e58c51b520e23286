//! Slow reference computations that share nothing with the enumeration and
//! orbit engine beyond the group tables themselves. They produce the stored
//! golden values and re-check them.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::fuchsian::Signature;
use crate::genvec::{distinct_permutations, hurwitz, BraidDirection};
use crate::group::{automorphisms, FiniteGroup};

/// Budget on tuples scanned by the naive oracles.
pub const ORACLE_BUDGET: u64 = 50_000_000;

/// Every tuple whose `i`-th entry has order `orders[i]`, whose product is the
/// identity and which generates the group. No entry is solved for.
fn naive_scan(group: &FiniteGroup, orders: &[u32]) -> Result<Vec<Vec<usize>>> {
    let pools: Vec<Vec<usize>> = orders
        .iter()
        .map(|&m| (0..group.order()).filter(|&x| group.element_order(x) == m).collect())
        .collect();
    let space = pools.iter().fold(1u64, |a, p| a.saturating_mul(p.len() as u64));
    if space > ORACLE_BUDGET {
        return Err(Error::BudgetExceeded(format!("oracle scan of {space} tuples")));
    }
    let mut out = Vec::new();
    if pools.iter().any(|p| p.is_empty()) {
        return Ok(out);
    }
    let mut idx = vec![0usize; pools.len()];
    loop {
        let tuple: Vec<usize> = idx.iter().zip(&pools).map(|(&i, p)| p[i]).collect();
        if group.product(&tuple) == group.identity() && group.generates(&tuple) {
            out.push(tuple);
        }
        let mut k = pools.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < pools[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn require_genus_zero(sig: &Signature) -> Result<()> {
    if sig.orbit_genus() != 0 {
        return Err(Error::Unsupported("oracles handle orbit genus 0 only".into()));
    }
    Ok(())
}

/// Exhaustive count of vectors with entries in sorted period order.
pub fn naive_vector_count(group: &FiniteGroup, sig: &Signature) -> Result<usize> {
    require_genus_zero(sig)?;
    Ok(naive_scan(group, sig.periods())?.len())
}

/// Number of orbits under both braid directions and every automorphism, by
/// breadth-first search over all period orderings.
pub fn naive_class_count(group: &FiniteGroup, sig: &Signature) -> Result<usize> {
    require_genus_zero(sig)?;
    let mut all: Vec<Vec<usize>> = Vec::new();
    for arrangement in distinct_permutations(sig.periods()) {
        all.extend(naive_scan(group, &arrangement)?);
    }
    let members: HashSet<Vec<usize>> = all.iter().cloned().collect();
    let auts = automorphisms(group)?;
    let l = sig.len();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut classes = 0;
    for start in &all {
        if seen.contains(start) {
            continue;
        }
        classes += 1;
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(v) = queue.pop_front() {
            let mut next: Vec<Vec<usize>> = Vec::new();
            for i in 0..l - 1 {
                for dir in [BraidDirection::Forward, BraidDirection::Backward] {
                    let mut w = v.clone();
                    hurwitz(group, &mut w, i, dir);
                    next.push(w);
                }
            }
            for a in &auts {
                next.push(v.iter().map(|&x| a.apply(x)).collect());
            }
            for w in next {
                if !members.contains(&w) {
                    return Err(Error::invariant("oracle orbit left the vector set"));
                }
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genvec::{enumerate_vectors, orbit_classes};
    use crate::group::GroupSpec;

    #[test]
    fn oracles_agree_with_engine_on_small_cases() {
        for (g, s) in [
            ("dihedral:6", "0;2,2,2,2,2"),
            ("dihedral:4", "0;2,2,2,2,2,2"),
            ("dihedral:10", "0;2,2,2,2,2"),
            ("metacyclic:5,4,2", "0;2,2,4,4"),
            ("cyclic:4xcyclic:2", "0;2,2,4,4"),
        ] {
            let group: FiniteGroup = g.parse::<GroupSpec>().unwrap().build().unwrap();
            let sig: Signature = s.parse().unwrap();
            assert_eq!(
                naive_vector_count(&group, &sig).unwrap(),
                enumerate_vectors(&group, &sig).unwrap().len(),
                "{g} {s}"
            );
            assert_eq!(
                naive_class_count(&group, &sig).unwrap(),
                orbit_classes(&group, &sig).unwrap().class_count(),
                "{g} {s}"
            );
        }
    }
}
