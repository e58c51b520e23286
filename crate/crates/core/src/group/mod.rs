//! Finite groups as explicit multiplication tables.
//!
//! Every group in this crate is small (order at most [`MAX_ORDER`]) and is
//! stored as a dense Cayley table over element indices `0..order`, with index
//! `0` the identity. Each element carries a normal-form label such as
//! `"a^3b^2"` or `"sr^12"`, so reports never expose raw indices.

pub(crate) mod families;
mod morphism;

pub use families::GroupSpec;
pub use morphism::{are_isomorphic, automorphisms, find_isomorphism, GroupMorphism};

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};

/// Largest group order any constructor accepts.
pub const MAX_ORDER: usize = 4096;

/// Groups up to this order get an exhaustive associativity check and are
/// eligible for brute-force automorphism and isomorphism searches.
pub const EXHAUSTIVE_LIMIT: usize = 512;

/// A named generator of a [`FiniteGroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub element: usize,
}

/// A normal-form word: `(generator slot, exponent)` pairs in reading order.
pub(crate) type Word = Vec<(usize, u32)>;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    spec: GroupSpec,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<Generator>,
    words: Option<Vec<Word>>,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table and wraps it. Index 0 must be the identity.
    pub(crate) fn from_table(
        spec: GroupSpec,
        table: Vec<u32>,
        generators: Vec<Generator>,
        words: Option<Vec<Word>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let order = (table.len() as f64).sqrt().round() as usize;
        if order == 0 || order * order != table.len() {
            return Err(Error::invariant("multiplication table is not square"));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderOverflow {
                order,
                limit: MAX_ORDER,
            });
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::invariant("table entry out of range"));
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::invariant("index 0 is not a two-sided identity"));
            }
        }
        let mut inverses = vec![u32::MAX; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            let y = row
                .iter()
                .position(|&v| v == 0)
                .ok_or_else(|| Error::invariant(format!("element {x} has no inverse")))?;
            if table[y * order + x] != 0 {
                return Err(Error::invariant(format!("element {x} has no two-sided inverse")));
            }
            inverses[x] = y as u32;
        }
        if order <= EXHAUSTIVE_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b] as usize;
                    let row_ab = &table[ab * order..(ab + 1) * order];
                    let row_b = &table[b * order..(b + 1) * order];
                    let row_a = &table[a * order..(a + 1) * order];
                    for c in 0..order {
                        if row_ab[c] != row_a[row_b[c] as usize] {
                            return Err(Error::invariant(format!(
                                "multiplication is not associative at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }

        let labels = match (labels, &words) {
            (Some(l), _) => l,
            (None, Some(w)) => render_labels(&generators, w),
            (None, None) => (0..order).map(|i| format!("g{i}")).collect(),
        };
        if labels.len() != order {
            return Err(Error::invariant("label count does not match order"));
        }
        let mut label_index = HashMap::with_capacity(order);
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), i).is_some() {
                return Err(Error::invariant(format!("duplicate element label {l}")));
            }
        }

        let mut group = FiniteGroup {
            spec,
            order,
            table,
            inverses,
            orders: Vec::new(),
            generators,
            words,
            labels,
            label_index,
        };
        group.orders = (0..order).map(|x| group.compute_order(x)).collect();

        let gens: Vec<usize> = group.generators.iter().map(|g| g.element).collect();
        if group.closure(&gens).iter().filter(|&&m| m).count() != order {
            return Err(Error::invariant("named generators do not generate the group"));
        }
        Ok(group)
    }

    fn compute_order(&self, x: usize) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let n = k.unsigned_abs() % self.orders[a] as u64;
        (0..n).fold(0, |acc, _| self.mul(acc, base))
    }

    /// `g x g⁻¹`
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[a,b] = a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn product(&self, elems: &[usize]) -> usize {
        elems.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn element_order(&self, x: usize) -> u32 {
        self.orders[x]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .map(|g| g.element)
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    /// Element by label; errors name the offending label.
    pub fn parse_element(&self, label: &str) -> Result<usize> {
        self.element(label.trim())
            .ok_or_else(|| Error::Parse(format!("no element labelled {label:?} in {}", self.spec)))
    }

    /// Evaluates a word of `(generator name, exponent)` pairs.
    pub fn eval_word(&self, word: &[(&str, i64)]) -> Result<usize> {
        let mut acc = 0;
        for &(name, exp) in word {
            let g = self
                .generator(name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {name}")))?;
            acc = self.mul(acc, self.pow(g, exp));
        }
        Ok(acc)
    }

    /// Replaces generator names and re-renders the labels.
    pub fn with_generator_names(mut self, names: &[&str]) -> Result<Self> {
        if names.len() != self.generators.len() {
            return Err(Error::params("wrong number of generator names"));
        }
        let words = self
            .words
            .as_ref()
            .ok_or_else(|| Error::Unsupported("group has no normal-form words".into()))?;
        for (g, n) in self.generators.iter_mut().zip(names) {
            g.name = n.to_string();
        }
        self.labels = render_labels(&self.generators, words);
        self.label_index = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        if self.label_index.len() != self.order {
            return Err(Error::invariant("renamed labels are not distinct"));
        }
        Ok(self)
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<usize> = self.generators.iter().map(|g| g.element).collect();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership mask of the subgroup generated by `seeds`.
    pub fn closure(&self, seeds: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let seeds: Vec<usize> = seeds.iter().copied().filter(|&s| s != 0).collect();
        while let Some(x) = queue.pop_front() {
            for &s in &seeds {
                let y = self.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    /// Whether `elems` generate the whole group.
    pub fn generates(&self, elems: &[usize]) -> bool {
        self.closure(elems).iter().all(|&m| m)
    }

    pub fn subgroup_generated(&self, elems: &[usize]) -> SubgroupHandle {
        SubgroupHandle::from_mask(self.order, self.closure(elems))
    }

    pub fn whole_group(&self) -> SubgroupHandle {
        SubgroupHandle::from_mask(self.order, vec![true; self.order])
    }

    pub fn trivial_subgroup(&self) -> SubgroupHandle {
        self.subgroup_generated(&[])
    }

    pub fn commutator_subgroup(&self) -> SubgroupHandle {
        let mut seen = vec![false; self.order];
        for a in 0..self.order {
            for b in 0..self.order {
                seen[self.commutator(a, b)] = true;
            }
        }
        let comms: Vec<usize> = (0..self.order).filter(|&x| seen[x]).collect();
        self.subgroup_generated(&comms)
    }

    /// Conjugacy classes, each sorted, listed by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if assigned[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order).map(|g| self.conj(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                assigned[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Class index of every element, consistent with [`Self::conjugacy_classes`].
    pub fn class_map(&self, classes: &[Vec<usize>]) -> Vec<usize> {
        let mut map = vec![0; self.order];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                map[x] = i;
            }
        }
        map
    }

    pub fn elements_of_order(&self, k: u32) -> Vec<usize> {
        (0..self.order).filter(|&x| self.orders[x] == k).collect()
    }

    /// Distinct element orders, ascending.
    pub fn available_orders(&self) -> Vec<u32> {
        let mut v = self.orders.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Number of elements of each order.
    pub fn order_profile(&self) -> BTreeMap<u32, usize> {
        let mut profile = BTreeMap::new();
        for &o in &self.orders {
            *profile.entry(o).or_insert(0) += 1;
        }
        profile
    }

    /// True iff some conjugate of `⟨x⟩` equals `⟨y⟩`.
    pub fn cyclic_subgroups_conjugate(&self, x: usize, y: usize) -> bool {
        let target = self.subgroup_generated(&[y]);
        (0..self.order).any(|g| {
            let c = self.conj(g, x);
            target.contains(c) && self.element_order(c) == self.element_order(y)
        })
    }

    /// Every cyclic subgroup, each listed once, ordered by least generator index.
    pub fn cyclic_subgroups(&self) -> Vec<SubgroupHandle> {
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        let mut out = Vec::new();
        for x in 0..self.order {
            let h = self.subgroup_generated(&[x]);
            if seen.insert(h.elements().to_vec(), ()).is_none() {
                out.push(h);
            }
        }
        out
    }

    /// Re-realizes a subgroup as a group in its own right.
    ///
    /// Labels are inherited from the parent; the generators are `gens`
    /// (which must generate `h`). The second value maps new indices to
    /// parent indices.
    pub fn subgroup_as_group(
        &self,
        h: &SubgroupHandle,
        gens: &[usize],
    ) -> Result<(FiniteGroup, Vec<usize>)> {
        let embed: Vec<usize> = h.elements().to_vec();
        let n = embed.len();
        let mut back = vec![usize::MAX; self.order];
        for (i, &x) in embed.iter().enumerate() {
            back[x] = i;
        }
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = self.mul(embed[i], embed[j]);
                if back[p] == usize::MAX {
                    return Err(Error::invariant("subgroup is not closed"));
                }
                table[i * n + j] = back[p] as u32;
            }
        }
        let generators = gens
            .iter()
            .map(|&g| {
                if back[g] == usize::MAX {
                    Err(Error::params("generator outside subgroup"))
                } else {
                    Ok(Generator {
                        name: self.label(g).to_string(),
                        element: back[g],
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = GroupSpec::Subgroup {
            parent: Box::new(self.spec.clone()),
            generators: gens.iter().map(|&g| self.label(g).to_string()).collect(),
        };
        let labels = embed.iter().map(|&x| self.label(x).to_string()).collect();
        let group = FiniteGroup::from_table(spec, table, generators, None, Some(labels))?;
        Ok((group, embed))
    }
}

fn render_labels(generators: &[Generator], words: &[Word]) -> Vec<String> {
    words
        .iter()
        .map(|w| {
            let mut s = String::new();
            for &(slot, e) in w {
                if e == 0 {
                    continue;
                }
                s.push_str(&generators[slot].name);
                if e > 1 {
                    s.push('^');
                    s.push_str(&e.to_string());
                }
            }
            if s.is_empty() {
                s.push('1');
            }
            s
        })
        .collect()
}

/// A subgroup, stored as a sorted element-index set of its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupHandle {
    parent_order: usize,
    elements: Vec<usize>,
    mask: Vec<bool>,
}

impl SubgroupHandle {
    fn from_mask(parent_order: usize, mask: Vec<bool>) -> Self {
        let elements = (0..parent_order).filter(|&x| mask[x]).collect();
        SubgroupHandle {
            parent_order,
            elements,
            mask,
        }
    }

    /// Checks closure, identity and Lagrange before wrapping `elements`.
    pub fn from_elements(group: &FiniteGroup, elements: &[usize]) -> Result<Self> {
        let mut mask = vec![false; group.order()];
        for &x in elements {
            if x >= group.order() {
                return Err(Error::params("element index out of range"));
            }
            mask[x] = true;
        }
        if !mask[0] {
            return Err(Error::params("subgroup must contain the identity"));
        }
        for &a in elements {
            if !mask[group.inv(a)] {
                return Err(Error::params("subset not closed under inverses"));
            }
            for &b in elements {
                if !mask[group.mul(a, b)] {
                    return Err(Error::params("subset not closed under multiplication"));
                }
            }
        }
        let h = SubgroupHandle::from_mask(group.order(), mask);
        if group.order() % h.order() != 0 {
            return Err(Error::invariant("subgroup order does not divide group order"));
        }
        Ok(h)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn index(&self) -> usize {
        self.parent_order / self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}
