//! Homomorphisms between table groups, and brute-force automorphism and
//! isomorphism search by backtracking over generator images.

use super::{FiniteGroup, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};

/// Upper bound on generator-image tuples a single search may visit.
pub const MORPHISM_SEARCH_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupMorphism {
    source_order: usize,
    target_order: usize,
    images: Vec<usize>,
    injective: bool,
    surjective: bool,
}

impl GroupMorphism {
    /// Wraps an explicit image table after checking `φ(xy) = φ(x)φ(y)` on every pair.
    pub fn from_images(source: &FiniteGroup, target: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() || images.iter().any(|&y| y >= target.order()) {
            return Err(Error::params("image table has the wrong shape"));
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if images[source.mul(x, y)] != target.mul(images[x], images[y]) {
                    return Err(Error::params("map is not a homomorphism"));
                }
            }
        }
        Ok(Self::with_flags(source.order(), target.order(), images))
    }

    /// Extends generator images to a homomorphism, if one exists.
    ///
    /// Walks the Cayley graph of `source` from the identity; the map is a
    /// homomorphism iff every edge `x → x·gⱼ` is respected.
    pub fn from_generator_images(
        source: &FiniteGroup,
        target: &FiniteGroup,
        gen_images: &[usize],
    ) -> Option<Self> {
        let images = extend(source, target, gen_images)?;
        Some(Self::with_flags(source.order(), target.order(), images))
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        Self::with_flags(group.order(), group.order(), (0..group.order()).collect())
    }

    fn with_flags(source_order: usize, target_order: usize, images: Vec<usize>) -> Self {
        let mut hit = vec![false; target_order];
        let mut distinct = 0;
        for &y in &images {
            if !hit[y] {
                hit[y] = true;
                distinct += 1;
            }
        }
        GroupMorphism {
            source_order,
            target_order,
            injective: distinct == source_order,
            surjective: distinct == target_order,
            images,
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_bijective(&self) -> bool {
        self.injective && self.surjective
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &GroupMorphism) -> GroupMorphism {
        assert_eq!(other.target_order, self.source_order);
        let images = other.images.iter().map(|&y| self.images[y]).collect();
        Self::with_flags(other.source_order, self.target_order, images)
    }

    pub fn inverse(&self) -> Option<GroupMorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.target_order];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(Self::with_flags(self.target_order, self.source_order, inv))
    }
}

fn extend(source: &FiniteGroup, target: &FiniteGroup, gen_images: &[usize]) -> Option<Vec<usize>> {
    let gens: Vec<usize> = source.generators().iter().map(|g| g.element).collect();
    assert_eq!(gens.len(), gen_images.len());
    let mut images = vec![usize::MAX; source.order()];
    images[0] = 0;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for (&g, &h) in gens.iter().zip(gen_images) {
            let y = source.mul(x, g);
            let img = target.mul(images[x], h);
            if images[y] == usize::MAX {
                images[y] = img;
                stack.push(y);
            } else if images[y] != img {
                return None;
            }
        }
    }
    Some(images)
}

fn check_budget(group: &FiniteGroup) -> Result<()> {
    if group.order() > EXHAUSTIVE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "brute-force morphism search is limited to order {EXHAUSTIVE_LIMIT}, got {}",
            group.order()
        )));
    }
    Ok(())
}

/// Backtracks over images of the source generators among target elements of
/// matching order, collecting bijective homomorphisms.
fn search_bijections(
    source: &FiniteGroup,
    target: &FiniteGroup,
    first_only: bool,
) -> Result<Vec<GroupMorphism>> {
    check_budget(source)?;
    check_budget(target)?;
    if source.order() != target.order() {
        return Ok(Vec::new());
    }
    let candidates: Vec<Vec<usize>> = source
        .generators()
        .iter()
        .map(|g| target.elements_of_order(source.element_order(g.element)))
        .collect();
    let space = candidates
        .iter()
        .fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64));
    if space > MORPHISM_SEARCH_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "{space} generator-image tuples exceed the budget of {MORPHISM_SEARCH_BUDGET}"
        )));
    }

    let mut found = Vec::new();
    let mut choice = vec![0usize; candidates.len()];
    let mut idx = vec![0usize; candidates.len()];
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(found);
    }
    // odometer over candidate lists, first generator most significant
    'outer: loop {
        for (k, c) in candidates.iter().enumerate() {
            choice[k] = c[idx[k]];
        }
        if let Some(images) = extend(source, target, &choice) {
            let m = GroupMorphism::with_flags(source.order(), target.order(), images);
            if m.is_bijective() {
                found.push(m);
                if first_only {
                    break 'outer;
                }
            }
        }
        let mut k = candidates.len();
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < candidates[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
    Ok(found)
}

/// All automorphisms, ordered lexicographically by generator images.
pub fn automorphisms(group: &FiniteGroup) -> Result<Vec<GroupMorphism>> {
    search_bijections(group, group, false)
}

/// Some isomorphism `g → h`, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<GroupMorphism>> {
    check_budget(g)?;
    check_budget(h)?;
    if g.order() != h.order() || g.order_profile() != h.order_profile() || g.is_abelian() != h.is_abelian() {
        return Ok(None);
    }
    Ok(search_bijections(g, h, true)?.into_iter().next())
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use std::collections::HashSet;

    fn build(s: &str) -> FiniteGroup {
        s.parse::<GroupSpec>().unwrap().build().unwrap()
    }

    /// Independent count: every bijection of a 2-generated group is determined
    /// by generator images, so scan all image pairs and test the full table.
    fn brute_force_automorphism_count(g: &FiniteGroup) -> usize {
        let gens: Vec<usize> = g.generators().iter().map(|x| x.element).collect();
        let mut count = 0;
        let n = g.order();
        let mut tuple = vec![0usize; gens.len()];
        loop {
            if let Some(images) = extend(g, g, &tuple) {
                let distinct: HashSet<_> = images.iter().collect();
                if distinct.len() == n && GroupMorphism::from_images(g, g, images).is_ok() {
                    count += 1;
                }
            }
            let mut k = gens.len();
            loop {
                if k == 0 {
                    return count;
                }
                k -= 1;
                tuple[k] += 1;
                if tuple[k] < n {
                    break;
                }
                tuple[k] = 0;
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&build("cyclic:13")).unwrap().len(), 12);
        let q8 = build("q8");
        assert_eq!(brute_force_automorphism_count(&q8), 24);
        assert_eq!(automorphisms(&q8).unwrap().len(), 24);
        let d3 = build("dihedral:3");
        assert_eq!(brute_force_automorphism_count(&d3), 6);
        assert_eq!(automorphisms(&d3).unwrap().len(), 6);
    }

    #[test]
    fn automorphisms_form_a_group() {
        for s in ["dihedral:10", "metacyclic:5,4,2", "q8xc:3"] {
            let g = build(s);
            let auts = automorphisms(&g).unwrap();
            let set: HashSet<Vec<usize>> = auts.iter().map(|a| a.images().to_vec()).collect();
            assert!(set.contains(GroupMorphism::identity(&g).images()));
            for a in &auts {
                assert!(set.contains(a.inverse().unwrap().images()));
                for b in &auts {
                    assert!(set.contains(a.compose(b).images()));
                }
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let a = build("d2semi:3,1");
        let b = build("d2semi:3,3");
        assert!(!are_isomorphic(&a, &b).unwrap());
        assert!(are_isomorphic(&build("cyclic:4xcyclic:11"), &build("cyclic:44")).unwrap());
        let m5 = build("metacyclic:13,4,5");
        let m8 = build("metacyclic:13,4,8");
        let iso = find_isomorphism(&m5, &m8).unwrap().unwrap();
        assert!(GroupMorphism::from_images(&m5, &m8, iso.images().to_vec()).is_ok());
    }

    #[test]
    fn budget_guard() {
        let big = build("cyclic:1024");
        assert!(matches!(automorphisms(&big), Err(Error::BudgetExceeded(_))));
    }
}
