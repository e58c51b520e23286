//! Generating vectors (surface-kernel epimorphisms `Δ → G`), braid moves,
//! the automorphism action, and the equivalence classes they generate.
//!
//! A vector for signature `(h; m₁,…,m_l)` is a tuple
//! `(a₁,b₁,…,a_h,b_h, x₁,…,x_l)` of group elements such that
//! `Π[aᵢ,bᵢ]·Πxⱼ = 1`, the orders of the `xⱼ` are the periods (as a multiset)
//! and the entries generate `G`.
//!
//! Braid moves use the product-preserving Hurwitz convention
//! `(…, xᵢ, xᵢ₊₁, …) ↦ (…, xᵢ₊₁, xᵢ₊₁⁻¹ xᵢ xᵢ₊₁, …)`.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuchsian::Signature;
use crate::group::{automorphisms, FiniteGroup, GroupMorphism};

/// Enumeration refuses signatures with `|G|^(l−1+2h)` above this.
pub const ENUMERATION_BUDGET: u128 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingVector {
    pub signature: Signature,
    pub hyperbolic: Vec<(usize, usize)>,
    pub elliptic: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidDirection {
    Forward,
    Backward,
}

impl GeneratingVector {
    pub fn new(signature: Signature, hyperbolic: Vec<(usize, usize)>, elliptic: Vec<usize>) -> Self {
        GeneratingVector {
            signature,
            hyperbolic,
            elliptic,
        }
    }

    /// Builds a vector from element labels; `hyperbolic` holds `(aᵢ, bᵢ)` pairs.
    pub fn from_labels(
        group: &FiniteGroup,
        signature: Signature,
        hyperbolic: &[(&str, &str)],
        elliptic: &[&str],
    ) -> Result<Self> {
        let hyperbolic = hyperbolic
            .iter()
            .map(|(a, b)| Ok((group.parse_element(a)?, group.parse_element(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let elliptic = elliptic
            .iter()
            .map(|x| group.parse_element(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratingVector::new(signature, hyperbolic, elliptic))
    }

    /// All entries in presentation order: `a₁, b₁, …, x₁, …`.
    pub fn entries(&self) -> Vec<usize> {
        self.hyperbolic
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(self.elliptic.iter().copied())
            .collect()
    }

    pub fn entry_labels(&self, group: &FiniteGroup) -> Vec<String> {
        self.entries()
            .into_iter()
            .map(|x| group.label(x).to_string())
            .collect()
    }

    /// `Π[aᵢ,bᵢ]·Πxⱼ`
    pub fn long_relation(&self, group: &FiniteGroup) -> usize {
        let comms = self
            .hyperbolic
            .iter()
            .fold(0, |acc, &(a, b)| group.mul(acc, group.commutator(a, b)));
        group.mul(comms, group.product(&self.elliptic))
    }

    /// Braid move on elliptic positions `index, index+1` (1-based).
    pub fn braid_move(&self, group: &FiniteGroup, index: usize, direction: BraidDirection) -> Result<Self> {
        let l = self.elliptic.len();
        if index == 0 || index >= l {
            return Err(Error::params(format!(
                "braid index {index} out of range 1..={}",
                l.saturating_sub(1)
            )));
        }
        let mut out = self.clone();
        hurwitz(group, &mut out.elliptic, index - 1, direction);
        Ok(out)
    }

    pub fn apply_automorphism(&self, omega: &GroupMorphism) -> Self {
        GeneratingVector {
            signature: self.signature.clone(),
            hyperbolic: self
                .hyperbolic
                .iter()
                .map(|&(a, b)| (omega.apply(a), omega.apply(b)))
                .collect(),
            elliptic: self.elliptic.iter().map(|&x| omega.apply(x)).collect(),
        }
    }

    /// Genus of the surface on which this vector's action lives.
    pub fn action_genus(&self, group: &FiniteGroup) -> Result<u64> {
        self.signature.rh_genus(group.order())
    }

    pub fn to_record(&self, group: &FiniteGroup) -> VectorRecord {
        VectorRecord {
            signature: self.signature.to_string(),
            hyperbolic: self
                .hyperbolic
                .iter()
                .map(|&(a, b)| [group.label(a).to_string(), group.label(b).to_string()])
                .collect(),
            elliptic: self
                .elliptic
                .iter()
                .map(|&x| group.label(x).to_string())
                .collect(),
        }
    }
}

/// JSON form of a vector: labels plus the signature string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VectorRecord {
    pub signature: String,
    pub hyperbolic: Vec<[String; 2]>,
    pub elliptic: Vec<String>,
}

/// Hurwitz move on a raw elliptic tuple, positions `i, i+1` (0-based).
#[inline]
pub(crate) fn hurwitz(group: &FiniteGroup, v: &mut [usize], i: usize, direction: BraidDirection) {
    let (x, y) = (v[i], v[i + 1]);
    match direction {
        BraidDirection::Forward => {
            v[i] = y;
            v[i + 1] = group.mul(group.mul(group.inv(y), x), y);
        }
        BraidDirection::Backward => {
            v[i] = group.mul(group.mul(x, y), group.inv(x));
            v[i + 1] = x;
        }
    }
}

/// Outcome of checking the three defining conditions of a generating vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VectorCheck {
    pub shape_ok: bool,
    pub product_is_identity: bool,
    pub orders_match: bool,
    pub generates: bool,
}

impl VectorCheck {
    pub fn is_valid(&self) -> bool {
        self.shape_ok && self.product_is_identity && self.orders_match && self.generates
    }

    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.shape_ok {
            v.push("entry count does not match the signature");
        }
        if !self.product_is_identity {
            v.push("long relation product is not the identity");
        }
        if !self.orders_match {
            v.push("elliptic orders do not match the periods");
        }
        if !self.generates {
            v.push("entries do not generate the group");
        }
        v
    }
}

pub fn check_vector(group: &FiniteGroup, vec: &GeneratingVector) -> VectorCheck {
    let shape_ok = vec.hyperbolic.len() == vec.signature.orbit_genus() as usize
        && vec.elliptic.len() == vec.signature.len()
        && vec.entries().iter().all(|&x| x < group.order());
    if !shape_ok {
        return VectorCheck {
            shape_ok,
            product_is_identity: false,
            orders_match: false,
            generates: false,
        };
    }
    let mut orders: Vec<u32> = vec.elliptic.iter().map(|&x| group.element_order(x)).collect();
    orders.sort_unstable();
    VectorCheck {
        shape_ok,
        product_is_identity: vec.long_relation(group) == group.identity(),
        orders_match: orders == vec.signature.periods(),
        generates: group.generates(&vec.entries()),
    }
}

pub fn vector_satisfies(group: &FiniteGroup, vec: &GeneratingVector) -> bool {
    check_vector(group, vec).is_valid()
}

fn check_budget(group: &FiniteGroup, sig: &Signature) -> Result<()> {
    if sig.orbit_genus() > 1 {
        return Err(Error::Unsupported(format!(
            "enumeration supports orbit genus 0 or 1, got {sig}"
        )));
    }
    if !sig.is_hyperbolic() {
        return Err(Error::params(format!("signature {sig} is not hyperbolic")));
    }
    let exponent = sig.len() as u32 - 1 + 2 * sig.orbit_genus();
    let space = (group.order() as u128).checked_pow(exponent).unwrap_or(u128::MAX);
    if space > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "|G|^{exponent} = {space} exceeds {ENUMERATION_BUDGET} for {} with {sig}",
            group.spec()
        )));
    }
    Ok(())
}

/// Depth-first search over the free slots; the last elliptic entry is solved.
struct Search<'g> {
    group: &'g FiniteGroup,
    /// candidate lists per free slot
    slots: Vec<Vec<usize>>,
    /// 0 or 1: whether slots 0 and 1 are a hyperbolic pair
    h: usize,
    last_order: u32,
}

impl Search<'_> {
    fn run_branch(&self, first: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut entries = Vec::with_capacity(self.slots.len() + 1);
        entries.push(first);
        self.descend(&mut entries, &mut out);
        out
    }

    fn prefix_product(&self, entries: &[usize]) -> usize {
        let g = self.group;
        if self.h == 1 {
            let c = g.commutator(entries[0], entries[1]);
            g.mul(c, g.product(&entries[2..]))
        } else {
            g.product(entries)
        }
    }

    fn descend(&self, entries: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let g = self.group;
        let depth = entries.len();
        if depth == self.slots.len() {
            let last = g.inv(self.prefix_product(entries));
            if g.element_order(last) != self.last_order {
                return;
            }
            entries.push(last);
            if g.generates(entries) {
                out.push(entries.clone());
            }
            entries.pop();
            return;
        }
        for &x in &self.slots[depth] {
            entries.push(x);
            self.descend(entries, out);
            entries.pop();
        }
    }
}

/// Raw tuples for one ordering of the periods. Entries are laid out as
/// `a, b` (when `h = 1`) followed by the elliptic entries in `periods` order.
fn enumerate_raw(
    group: &FiniteGroup,
    h: u32,
    periods: &[u32],
    workers: usize,
) -> Result<Vec<Vec<usize>>> {
    let (&last_order, free) = periods
        .split_last()
        .ok_or_else(|| Error::Unsupported("signatures without periods".into()))?;
    let mut slots: Vec<Vec<usize>> = Vec::new();
    if h == 1 {
        slots.push((0..group.order()).collect());
        slots.push((0..group.order()).collect());
    }
    for &m in free {
        slots.push(group.elements_of_order(m));
    }
    let search = Search {
        group,
        slots,
        h: h as usize,
        last_order,
    };
    if search.slots.is_empty() {
        // a single elliptic entry, solved from the empty prefix
        let mut entries = Vec::new();
        let mut out = Vec::new();
        search.descend(&mut entries, &mut out);
        return Ok(out);
    }
    let firsts = search.slots[0].clone();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let branches: Vec<Vec<Vec<usize>>> =
        pool.install(|| firsts.par_iter().map(|&x| search.run_branch(x)).collect());
    Ok(branches.into_iter().flatten().collect())
}

fn raw_to_vector(sig: &Signature, raw: Vec<usize>) -> GeneratingVector {
    let h = sig.orbit_genus() as usize;
    let hyperbolic = (0..h).map(|i| (raw[2 * i], raw[2 * i + 1])).collect();
    GeneratingVector::new(sig.clone(), hyperbolic, raw[2 * h..].to_vec())
}

/// Every generating vector with elliptic orders in the signature's sorted
/// period order, in lexicographic order of entries.
pub fn enumerate_vectors(group: &FiniteGroup, sig: &Signature) -> Result<Vec<GeneratingVector>> {
    enumerate_vectors_with(group, sig, 1)
}

pub fn enumerate_vectors_with(
    group: &FiniteGroup,
    sig: &Signature,
    workers: usize,
) -> Result<Vec<GeneratingVector>> {
    check_budget(group, sig)?;
    Ok(enumerate_raw(group, sig.orbit_genus(), sig.periods(), workers)?
        .into_iter()
        .map(|raw| raw_to_vector(sig, raw))
        .collect())
}

/// Distinct orderings of a multiset, lexicographic.
pub(crate) fn distinct_permutations(sorted: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = sorted.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// A small generating set of the group formed by `auts`.
pub fn automorphism_generators(auts: &[GroupMorphism]) -> Vec<GroupMorphism> {
    let mut gens: Vec<GroupMorphism> = Vec::new();
    let mut closure: HashSet<Vec<usize>> = HashSet::new();
    for a in auts {
        if closure.contains(a.images()) {
            continue;
        }
        gens.push(a.clone());
        // regenerate the closure from scratch
        let mut frontier: Vec<GroupMorphism> = vec![a.clone()];
        closure.insert(a.images().to_vec());
        let known: Vec<GroupMorphism> = auts
            .iter()
            .filter(|m| closure.contains(m.images()))
            .cloned()
            .collect();
        frontier.extend(known);
        while let Some(m) = frontier.pop() {
            for g in &gens {
                let c = m.compose(g);
                if closure.insert(c.images().to_vec()) {
                    frontier.push(c);
                }
            }
        }
    }
    gens
}

/// One topological class of actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionClass {
    /// Lexicographically least member with elliptic orders in sorted period order.
    pub representative: GeneratingVector,
    /// Members with elliptic orders in sorted period order.
    pub orbit_size: usize,
    /// Members over every ordering of the periods.
    pub full_orbit_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSummary {
    pub signature: Signature,
    /// Output size of [`enumerate_vectors`].
    pub vector_count: usize,
    /// Vectors over every ordering of the periods.
    pub arrangement_vector_count: usize,
    pub classes: Vec<ActionClass>,
}

impl OrbitSummary {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins, so results do not depend on edge order
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Partitions the generating vectors of an orbit-genus-0 signature into
/// classes under braid moves and `Aut(G)`.
pub fn orbit_classes(group: &FiniteGroup, sig: &Signature) -> Result<OrbitSummary> {
    orbit_classes_with(group, sig, 1)
}

pub fn orbit_classes_with(group: &FiniteGroup, sig: &Signature, workers: usize) -> Result<OrbitSummary> {
    if sig.orbit_genus() != 0 {
        return Err(Error::Unsupported(format!(
            "orbit classes are computed for orbit genus 0 only, got {sig}"
        )));
    }
    check_budget(group, sig)?;
    let l = sig.len();

    // nodes: every ordering of the periods; the sorted ordering comes first
    let mut arena: Vec<usize> = Vec::new();
    let mut sorted_count = 0usize;
    for (k, arrangement) in distinct_permutations(sig.periods()).iter().enumerate() {
        let raws = enumerate_raw(group, 0, arrangement, workers)?;
        if k == 0 {
            sorted_count = raws.len();
        }
        for r in raws {
            arena.extend(r);
        }
    }
    let n = arena.len() / l;
    let node = |i: usize| &arena[i * l..(i + 1) * l];
    let index: HashMap<&[usize], u32> = (0..n).map(|i| (node(i), i as u32)).collect();

    let aut_gens = automorphism_generators(&automorphisms(group)?);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let edges: Vec<Vec<u32>> = pool.install(|| {
        (0..n)
            .into_par_iter()
            .map(|i| {
                let mut out = Vec::with_capacity(l - 1 + aut_gens.len());
                let mut buf = node(i).to_vec();
                for j in 0..l - 1 {
                    buf.copy_from_slice(node(i));
                    hurwitz(group, &mut buf, j, BraidDirection::Forward);
                    out.push(index.get(buf.as_slice()).copied().unwrap_or(u32::MAX));
                }
                for a in &aut_gens {
                    for (b, &x) in buf.iter_mut().zip(node(i)) {
                        *b = a.apply(x);
                    }
                    out.push(index.get(buf.as_slice()).copied().unwrap_or(u32::MAX));
                }
                out
            })
            .collect()
    });

    let mut uf = UnionFind::new(n);
    for (i, targets) in edges.iter().enumerate() {
        for &t in targets {
            if t == u32::MAX {
                return Err(Error::invariant(format!(
                    "orbit of {:?} left the set of generating vectors",
                    node(i)
                )));
            }
            uf.union(i as u32, t);
        }
    }

    // component root -> (least sorted member, sorted members, all members)
    let mut comps: HashMap<u32, (usize, usize, usize)> = HashMap::new();
    for i in 0..n {
        let root = uf.find(i as u32);
        let e = comps.entry(root).or_insert((usize::MAX, 0, 0));
        e.2 += 1;
        if i < sorted_count {
            e.1 += 1;
            e.0 = e.0.min(i);
        }
    }
    let mut classes: Vec<ActionClass> = comps
        .into_values()
        .map(|(rep, orbit, full)| {
            if rep == usize::MAX {
                return Err(Error::invariant("class without a sorted-order member"));
            }
            Ok(ActionClass {
                representative: GeneratingVector::new(sig.clone(), Vec::new(), node(rep).to_vec()),
                orbit_size: orbit,
                full_orbit_size: full,
            })
        })
        .collect::<Result<_>>()?;
    classes.sort_by(|a, b| a.representative.elliptic.cmp(&b.representative.elliptic));

    Ok(OrbitSummary {
        signature: sig.clone(),
        vector_count: sorted_count,
        arrangement_vector_count: n,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn build(s: &str) -> FiniteGroup {
        s.parse::<GroupSpec>().unwrap().build().unwrap()
    }

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn dihedral_theta(q: u32) -> (FiniteGroup, GeneratingVector) {
        let g = build(&format!("dihedral:{}", 2 * q));
        let v = GeneratingVector::from_labels(
            &g,
            sig("0;2,2,2,2,2"),
            &[],
            &["s", "s", &format!("sr^{}", q + 1), "sr", &format!("r^{q}")],
        )
        .unwrap();
        (g, v)
    }

    #[test]
    fn satisfies_examples() {
        let (g, v) = dihedral_theta(11);
        assert!(vector_satisfies(&g, &v));

        let m = build("metacyclic:13,4,5");
        let v = GeneratingVector::from_labels(&m, sig("0;2,2,4,4"), &[], &["b^2", "ab^2", "ab", "b^3"]).unwrap();
        assert!(vector_satisfies(&m, &v));

        let bad = GeneratingVector::from_labels(&g, sig("0;2,2,2,2,2"), &[], &["s", "s", "s", "s", "1"]).unwrap();
        let check = check_vector(&g, &bad);
        assert!(!check.orders_match);
        assert!(!check.is_valid());
    }

    #[test]
    fn braid_examples() {
        let (g, v) = dihedral_theta(11);
        let w = v.braid_move(&g, 1, BraidDirection::Forward).unwrap();
        assert_eq!(w, v);
        let w = v.braid_move(&g, 2, BraidDirection::Forward).unwrap();
        assert_eq!(w.entry_labels(&g), ["s", "sr^12", "sr^2", "sr", "r^11"]);
        assert_eq!(w.braid_move(&g, 2, BraidDirection::Backward).unwrap(), v);
        assert!(v.braid_move(&g, 0, BraidDirection::Forward).is_err());
        assert!(v.braid_move(&g, 5, BraidDirection::Forward).is_err());
    }

    #[test]
    fn braid_moves_theta_n_forward() {
        let q = 13;
        let m = build("metacyclic:13,4,5");
        let theta = |n: i64| {
            GeneratingVector::from_labels(
                &m,
                sig("0;2,2,4,4"),
                &[],
                &[
                    m.label(m.mul(m.pow(m.element("a").unwrap(), n), m.element("b^2").unwrap())),
                    m.label(m.mul(m.pow(m.element("a").unwrap(), n + 1), m.element("b^2").unwrap())),
                    "ab",
                    "b^3",
                ],
            )
            .unwrap()
        };
        for n in 0..q {
            assert_eq!(theta(n).braid_move(&m, 1, BraidDirection::Forward).unwrap(), theta(n + 1));
        }
    }

    #[test]
    fn automorphism_action() {
        let (g, v) = dihedral_theta(11);
        let r = g.element("r").unwrap();
        let sr = g.element("sr").unwrap();
        let omega = GroupMorphism::from_generator_images(&g, &g, &[r, sr]).unwrap();
        let w = v.apply_automorphism(&omega);
        assert_eq!(w.entry_labels(&g), ["sr", "sr", "sr^13", "sr^2", "r^11"]);
        assert!(vector_satisfies(&g, &w));
        assert_eq!(v.apply_automorphism(&GroupMorphism::identity(&g)), v);

        let m = build("metacyclic:13,4,5");
        let a = m.element("a").unwrap();
        let b = m.element("b").unwrap();
        let omega = GroupMorphism::from_generator_images(&m, &m, &[m.pow(a, 3), b]).unwrap();
        let v = GeneratingVector::from_labels(&m, sig("0;2,2,4,4"), &[], &["b^2", "ab^2", "ab", "b^3"]).unwrap();
        assert_eq!(v.apply_automorphism(&omega).entry_labels(&m), ["b^2", "a^3b^2", "a^3b", "b^3"]);
    }

    #[test]
    fn empty_enumerations() {
        let g = build("metacyclic:13,4,12");
        assert!(enumerate_vectors(&g, &sig("0;2,2,4,4")).unwrap().is_empty());
        let c = build("cyclic:44");
        assert!(enumerate_vectors(&c, &sig("1;2")).unwrap().is_empty());
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let g = build("dihedral:10");
        let vs = enumerate_vectors(&g, &sig("0;2,2,2,2,2")).unwrap();
        assert!(!vs.is_empty());
        assert!(vs.windows(2).all(|w| w[0].elliptic < w[1].elliptic));
        assert!(vs.iter().all(|v| vector_satisfies(&g, v)));
    }

    #[test]
    fn budget_and_genus_guards() {
        let g = build("dihedral:200");
        assert!(matches!(
            enumerate_vectors(&g, &sig("0;2,2,2,2,2")),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            enumerate_vectors(&g, &sig("2;")),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            orbit_classes(&build("cyclic:4"), &sig("1;2")),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn single_class_dihedral_small() {
        for q in [5, 7] {
            let g = build(&format!("dihedral:{}", 2 * q));
            let s = orbit_classes(&g, &sig("0;2,2,2,2,2")).unwrap();
            assert_eq!(s.class_count(), 1, "q = {q}");
            let (_, theta) = dihedral_theta(q);
            let rep = &s.classes[0].representative;
            assert!(vector_satisfies(&g, rep));
            assert_eq!(s.classes[0].orbit_size, s.vector_count);
            // theta lies in the (single) class
            let vs = enumerate_vectors(&g, &sig("0;2,2,2,2,2")).unwrap();
            assert!(vs.contains(&theta));
        }
    }

    #[test]
    fn permutations_of_multiset() {
        assert_eq!(distinct_permutations(&[2, 2, 4, 4]).len(), 6);
        assert_eq!(distinct_permutations(&[2, 2, 2]).len(), 1);
        assert_eq!(distinct_permutations(&[2, 3, 4]).len(), 6);
    }

    #[test]
    fn genus_of_vectors() {
        let (g, v) = dihedral_theta(11);
        assert_eq!(v.action_genus(&g).unwrap(), 12);
        let m = build("metacyclic:13,4,5");
        let v = GeneratingVector::from_labels(&m, sig("0;2,2,4,4"), &[], &["b^2", "ab^2", "ab", "b^3"]).unwrap();
        assert_eq!(v.action_genus(&m).unwrap(), 14);
        let q = build("q8xc:5");
        let v = GeneratingVector::from_labels(&q, sig("1;2"), &[("x", "yz")], &["x^2"]).unwrap();
        assert!(vector_satisfies(&q, &v));
        assert_eq!(v.action_genus(&q).unwrap(), 11);
    }
}
