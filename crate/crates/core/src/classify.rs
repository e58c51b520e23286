//! Classification drivers: actions of order `4g − 4` for `g − 1` prime, the
//! boundary constructions with their restrictions, and the examples showing
//! that primality of `g − 1` matters.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fuchsian::{candidate_signatures, Signature};
use crate::genvec::{check_vector, enumerate_vectors_with, orbit_classes_with, vector_satisfies, GeneratingVector};
use crate::group::{are_isomorphic, FiniteGroup, GroupSpec, SubgroupHandle};
use crate::reptheory::find_root_of_unity;

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn odd_prime(q: u32, limit: u32) -> Result<()> {
    if q < 3 || !is_prime(q as u64) {
        return Err(Error::params(format!("q = {q} must be an odd prime")));
    }
    if q > limit {
        return Err(Error::params(format!("q = {q} exceeds the supported bound {limit}")));
    }
    Ok(())
}

/// Every group of order `4q` up to isomorphism, `q` an odd prime:
/// `C_{4q}`, `C_q × C₂²`, the dihedral group, `C_q ⋊₂ C₄`, and `C_q ⋊₄ C₄`
/// when `q ≡ 1 mod 4`. The list is certified pairwise non-isomorphic.
pub fn groups_of_order_4q(q: u32) -> Result<Vec<FiniteGroup>> {
    odd_prime(q, 127)?;
    let mut specs = vec![
        GroupSpec::Cyclic(4 * q),
        GroupSpec::Product(vec![GroupSpec::Cyclic(q), GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]),
        GroupSpec::Dihedral(2 * q),
        GroupSpec::Metacyclic { q, m: 4, u: q - 1 },
    ];
    if q % 4 == 1 {
        specs.push(GroupSpec::Metacyclic {
            q,
            m: 4,
            u: find_root_of_unity(q, 4)?,
        });
    }
    let groups = specs.iter().map(|s| s.build()).collect::<Result<Vec<_>>>()?;
    for (i, a) in groups.iter().enumerate() {
        for b in &groups[i + 1..] {
            if are_isomorphic(a, b)? {
                return Err(Error::invariant(format!("{} ≅ {}", a.spec(), b.spec())));
            }
        }
    }
    Ok(groups)
}

/// One searched (group, signature) pair.
#[derive(Debug, Clone)]
pub struct StratumEntry {
    pub group: GroupSpec,
    pub signature: Signature,
    pub vector_count: usize,
    /// `None` when classes were not computed (positive orbit genus with vectors).
    pub class_count: Option<usize>,
    pub representatives: Vec<Vec<String>>,
}

impl StratumEntry {
    pub fn is_stratum(&self) -> bool {
        self.vector_count > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.to_string(),
            "paper_name": self.group.paper_name(),
            "signature": self.signature.to_string(),
            "vector_count": self.vector_count,
            "class_count": self.class_count,
            "representatives": self.representatives,
        })
    }
}

#[derive(Debug, Clone)]
pub struct StrataReport {
    pub genus: u64,
    pub q: u64,
    pub q_prime: bool,
    /// Every pair searched, including empty ones.
    pub searched: Vec<StratumEntry>,
    pub theorem1_consistent: bool,
}

impl StrataReport {
    /// Pairs that admit at least one action.
    pub fn strata(&self) -> Vec<&StratumEntry> {
        self.searched.iter().filter(|e| e.is_stratum()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "genus": self.genus,
            "q": self.q,
            "q_prime": self.q_prime,
            "strata": self.strata().iter().map(|e| e.to_json()).collect::<Vec<_>>(),
            "theorem1_consistent": self.theorem1_consistent,
        })
    }
}

/// Vector count, classes and representatives for one pair.
pub fn stratum(group: &FiniteGroup, sig: &Signature, workers: usize) -> Result<StratumEntry> {
    if sig.orbit_genus() == 0 {
        let summary = orbit_classes_with(group, sig, workers)?;
        Ok(StratumEntry {
            group: group.spec().clone(),
            signature: sig.clone(),
            vector_count: summary.vector_count,
            class_count: Some(summary.class_count()),
            representatives: summary
                .classes
                .iter()
                .map(|c| c.representative.entry_labels(group))
                .collect(),
        })
    } else {
        let vectors = enumerate_vectors_with(group, sig, workers)?;
        Ok(StratumEntry {
            group: group.spec().clone(),
            signature: sig.clone(),
            vector_count: vectors.len(),
            class_count: vectors.is_empty().then_some(0),
            representatives: vectors.first().map(|v| vec![v.entry_labels(group)]).unwrap_or_default(),
        })
    }
}

/// All actions of groups of order `4g − 4` on genus `g`, for `g − 1` prime.
pub fn classify_genus(genus: u64, workers: usize) -> Result<StrataReport> {
    if !(8..=128).contains(&genus) {
        return Err(Error::params(format!("genus {genus} is outside 8..=128")));
    }
    let q = genus - 1;
    if !is_prime(q) {
        return Err(Error::params(format!(
            "g − 1 = {q} is not prime; the non-prime examples are under `counterexample`"
        )));
    }
    let mut searched = Vec::new();
    for group in groups_of_order_4q(q as u32)? {
        for sig in candidate_signatures(&group.available_orders(), group.order(), genus)? {
            searched.push(stratum(&group, &sig, workers)?);
        }
    }
    searched.sort_by(|a, b| {
        (a.group.to_string(), a.signature.to_string()).cmp(&(b.group.to_string(), b.signature.to_string()))
    });
    let theorem1_consistent = expected_pattern(q as u32, &searched)?;
    Ok(StrataReport {
        genus,
        q,
        q_prime: true,
        searched,
        theorem1_consistent,
    })
}

/// The expected strata: the dihedral `(0;2⁵)` family always, plus the
/// `C_q ⋊₄ C₄` `(0;2,2,4,4)` family when `q ≡ 1 mod 4`, each a single class.
fn expected_pattern(q: u32, searched: &[StratumEntry]) -> Result<bool> {
    let mut expected = vec![(GroupSpec::Dihedral(2 * q), Signature::new(0, vec![2; 5])?)];
    if q % 4 == 1 {
        expected.push((
            GroupSpec::Metacyclic {
                q,
                m: 4,
                u: find_root_of_unity(q, 4)?,
            },
            Signature::new(0, vec![2, 2, 4, 4])?,
        ));
    }
    let strata: Vec<&StratumEntry> = searched.iter().filter(|e| e.is_stratum()).collect();
    Ok(strata.len() == expected.len()
        && expected.iter().all(|(g, s)| {
            strata
                .iter()
                .any(|e| &e.group == g && &e.signature == s && e.class_count == Some(1))
        }))
}

/// A checked `(1;2)` action of `Q₈ × C_n`: `a ↦ x, b ↦ yz, x₁ ↦ y²`.
#[derive(Debug, Clone)]
pub struct Q8Example {
    pub n: u32,
    pub group: FiniteGroup,
    pub vector: GeneratingVector,
    pub genus: u64,
}

impl Q8Example {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": "q8",
            "n": self.n,
            "group": self.group.spec().to_string(),
            "paper_name": self.group.spec().paper_name(),
            "order": self.group.order(),
            "signature": self.vector.signature.to_string(),
            "vector": self.vector.entry_labels(&self.group),
            "genus": self.genus,
            "valid": vector_satisfies(&self.group, &self.vector),
        })
    }
}

pub fn counterexample_q8(n: u32) -> Result<Q8Example> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::params(format!("n = {n} must be odd and at least 3")));
    }
    let group = GroupSpec::Q8TimesCyclic(n).build()?;
    let a = group.eval_word(&[("x", 1)])?;
    let b = group.eval_word(&[("y", 1), ("z", 1)])?;
    let x1 = group.eval_word(&[("y", 2)])?;
    let vector = GeneratingVector::new(Signature::new(1, vec![2])?, vec![(a, b)], vec![x1]);
    let check = check_vector(&group, &vector);
    if !check.is_valid() {
        return Err(Error::invariant(format!("Q8 example: {}", check.violations().join("; "))));
    }
    let genus = vector.action_genus(&group)?;
    if genus != 2 * n as u64 + 1 || group.order() as u64 != 4 * genus - 4 {
        return Err(Error::invariant("Q8 example has the wrong genus or order"));
    }
    Ok(Q8Example { n, group, vector, genus })
}

#[derive(Debug, Clone)]
pub struct Dihedral2Member {
    pub m: u32,
    pub group: FiniteGroup,
    pub vector: GeneratingVector,
    pub genus: u64,
}

/// Four `(0;2⁵)` actions on genus `2ⁿ + 1`, one for each twist `m`.
///
/// The twists `m` and `−m` give isomorphic groups (`t ↦ ts` is an
/// isomorphism, since `s` is fixed by the twist), so the four groups fall
/// into two isomorphism classes; `pairwise_non_isomorphic` reports this
/// honestly rather than assuming it.
#[derive(Debug, Clone)]
pub struct Dihedral2Example {
    pub n: u32,
    pub members: Vec<Dihedral2Member>,
    pub pairwise_non_isomorphic: bool,
    /// Twists grouped by isomorphism type of the group.
    pub isomorphism_classes: Vec<Vec<u32>>,
}

impl Dihedral2Example {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": "dihedral2",
            "n": self.n,
            "groups": self.members.iter().map(|m| json!({
                "m": m.m,
                "group": m.group.spec().to_string(),
                "order": m.group.order(),
                "signature": m.vector.signature.to_string(),
                "vector": m.vector.entry_labels(&m.group),
                "genus": m.genus,
                "valid": vector_satisfies(&m.group, &m.vector),
            })).collect::<Vec<_>>(),
            "pairwise_non_isomorphic": self.pairwise_non_isomorphic,
            "isomorphism_classes": self.isomorphism_classes,
        })
    }
}

pub fn counterexample_dihedral2(n: u32) -> Result<Dihedral2Example> {
    if !(3..=6).contains(&n) {
        return Err(Error::params(format!("n = {n} must lie in 3..=6")));
    }
    let p = 1u32 << n;
    let mut members = Vec::new();
    for m in [1, p - 1, p / 2 - 1, p / 2 + 1] {
        let group = GroupSpec::Dihedral2Semidirect { n, m }.build()?;
        let entries = [
            group.eval_word(&[("s", 1), ("r", 1)])?,
            group.eval_word(&[("s", 1), ("r", 1)])?,
            group.eval_word(&[("s", 1)])?,
            group.eval_word(&[("t", 1)])?,
            group.eval_word(&[("s", 1), ("t", 1)])?,
        ];
        let vector = GeneratingVector::new(Signature::new(0, vec![2; 5])?, Vec::new(), entries.to_vec());
        let check = check_vector(&group, &vector);
        if !check.is_valid() {
            return Err(Error::invariant(format!("m = {m}: {}", check.violations().join("; "))));
        }
        let genus = vector.action_genus(&group)?;
        if genus != p as u64 + 1 {
            return Err(Error::invariant(format!("m = {m}: genus {genus} ≠ {}", p + 1)));
        }
        members.push(Dihedral2Member { m, group, vector, genus });
    }
    let mut isomorphism_classes: Vec<Vec<u32>> = Vec::new();
    let mut class_leader: Vec<usize> = Vec::new();
    for (i, member) in members.iter().enumerate() {
        let mut placed = false;
        for (k, &lead) in class_leader.iter().enumerate() {
            if are_isomorphic(&members[lead].group, &member.group)? {
                isomorphism_classes[k].push(member.m);
                placed = true;
                break;
            }
        }
        if !placed {
            class_leader.push(i);
            isomorphism_classes.push(vec![member.m]);
        }
    }
    Ok(Dihedral2Example {
        n,
        pairwise_non_isomorphic: isomorphism_classes.len() == members.len(),
        members,
        isomorphism_classes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCase {
    /// `C_q ⋊₈ C₈` with signature `(0;2,8,8)`, `q ≡ 1 mod 8`.
    Ord8,
    /// `(C_q ⋊₆ C₆) × C₂` with signature `(0;2,6,6)`, `q ≡ 1 mod 6`.
    Ord6,
}

impl std::str::FromStr for BoundaryCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ord8" => Ok(BoundaryCase::Ord8),
            "ord6" => Ok(BoundaryCase::Ord6),
            _ => Err(Error::Parse(format!("unknown case {s:?}, expected ord8 or ord6"))),
        }
    }
}

impl std::fmt::Display for BoundaryCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundaryCase::Ord8 => "ord8",
            BoundaryCase::Ord6 => "ord6",
        })
    }
}

/// A word in the elliptic generators `y₁, y₂, y₃` of the outer group, as
/// `(position, exponent)` pairs with 0-based positions.
pub type EllipticWord = &'static [(usize, i64)];

/// `(y₁, y₁, y₃², y₃⁶)`: a `(0;2,2,4,4)` subgroup of index 2 in `(0;2,8,8)`.
pub const HAT_WORDS: [EllipticWord; 4] = [&[(0, 1)], &[(0, 1)], &[(2, 2)], &[(2, 6)]];

/// `(y₃³, y₁, y₂y₁y₂⁻¹, y₂²y₁y₂⁻², y₂³)`: a `(0;2⁵)` subgroup of index 3 in `(0;2,6,6)`.
pub const TILDE_WORDS: [EllipticWord; 5] = [
    &[(2, 3)],
    &[(0, 1)],
    &[(1, 1), (0, 1), (1, -1)],
    &[(1, 2), (0, 1), (1, -2)],
    &[(1, 3)],
];

/// Stated in the literature and not recomputed here.
pub const CITED_ASSUMPTION: &str = "no surface of genus g ≥ 14 with g − 1 prime has a group of order 8(g − 1) acting with signature (0;2,2,2,4); quoted, not recomputed";

/// An action restricted to a finite-index subgroup of its Fuchsian group.
#[derive(Debug, Clone)]
pub struct RestrictionWitness {
    pub outer: GeneratingVector,
    pub words: Vec<Vec<(usize, i64)>>,
    /// Induced entries, as parent-group element indices.
    pub induced: GeneratingVector,
    pub subgroup: SubgroupHandle,
    pub index: usize,
}

impl RestrictionWitness {
    pub fn induced_signature(&self) -> &Signature {
        &self.induced.signature
    }

    pub fn to_json(&self, group: &FiniteGroup) -> Value {
        json!({
            "outer_signature": self.outer.signature.to_string(),
            "outer_vector": self.outer.entry_labels(group),
            "words": self.words,
            "induced_signature": self.induced.signature.to_string(),
            "induced_vector": self.induced.entry_labels(group),
            "subgroup_order": self.subgroup.order(),
            "index": self.index,
        })
    }
}

/// Evaluates `words` under an orbit-genus-0 outer vector and checks that the
/// result is a surface-kernel vector of the generated subgroup whose area
/// matches the index.
pub fn restrict_action(
    group: &FiniteGroup,
    outer: &GeneratingVector,
    words: &[&[(usize, i64)]],
) -> Result<RestrictionWitness> {
    if outer.signature.orbit_genus() != 0 {
        return Err(Error::Unsupported("restriction from positive orbit genus".into()));
    }
    let mut induced = Vec::with_capacity(words.len());
    for w in words {
        let mut x = group.identity();
        for &(pos, e) in w.iter() {
            let y = *outer
                .elliptic
                .get(pos)
                .ok_or_else(|| Error::params(format!("word position {pos} out of range")))?;
            x = group.mul(x, group.pow(y, e));
        }
        induced.push(x);
    }
    if group.product(&induced) != group.identity() {
        return Err(Error::params("restricted words do not multiply to the identity"));
    }
    let periods: Vec<u32> = induced.iter().map(|&x| group.element_order(x)).collect();
    let signature = Signature::new(0, periods)?;
    let subgroup = group.subgroup_generated(&induced);
    let index = subgroup.index();
    if signature.normalized_area() != outer.signature.normalized_area() * index as i64 {
        return Err(Error::invariant(format!(
            "area of {signature} is not {index} times the area of {}",
            outer.signature
        )));
    }
    let induced = GeneratingVector::new(signature, Vec::new(), induced);
    // validate over the subgroup realized as a group of its own
    let (sub, embed) = group.subgroup_as_group(&subgroup, &induced.elliptic)?;
    let mut back = vec![usize::MAX; group.order()];
    for (i, &x) in embed.iter().enumerate() {
        back[x] = i;
    }
    let local = GeneratingVector::new(
        induced.signature.clone(),
        Vec::new(),
        induced.elliptic.iter().map(|&x| back[x]).collect(),
    );
    if !vector_satisfies(&sub, &local) {
        return Err(Error::invariant("restricted vector is not a surface-kernel vector of its subgroup"));
    }
    if induced.action_genus(&sub)? != outer.action_genus(group)? {
        return Err(Error::invariant("restriction changed the genus"));
    }
    Ok(RestrictionWitness {
        outer: outer.clone(),
        words: words.iter().map(|w| w.to_vec()).collect(),
        induced,
        subgroup,
        index,
    })
}

/// A closed-form image of a restricted generator compared with the computed one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageCheck {
    pub vector: usize,
    pub position: usize,
    pub expected: String,
    pub computed: String,
}

impl ImageCheck {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Debug, Clone)]
pub struct BoundaryReport {
    pub q: u32,
    pub case: BoundaryCase,
    pub u: u32,
    pub group: FiniteGroup,
    pub vectors: [GeneratingVector; 2],
    pub witnesses: Vec<RestrictionWitness>,
    /// `Θᵢ(x̂₃) = α^{1±u³}β⁶` for ord8, the closed forms the argument relies on.
    pub key_checks: Vec<ImageCheck>,
    /// The remaining closed-form images, checked for information only.
    pub other_checks: Vec<ImageCheck>,
    /// Restrictions land in the expected subgroup (`⟨α,β²⟩`, resp. `⟨αγ,β³⟩` dihedral).
    pub subgroup_ok: bool,
}

impl BoundaryReport {
    pub fn key_checks_pass(&self) -> bool {
        self.key_checks.iter().all(ImageCheck::matches)
    }

    pub fn to_json(&self) -> Value {
        let checks = |v: &[ImageCheck]| {
            v.iter()
                .map(|c| {
                    json!({
                        "vector": c.vector,
                        "position": c.position,
                        "expected": c.expected,
                        "computed": c.computed,
                        "matches": c.matches(),
                    })
                })
                .collect::<Vec<_>>()
        };
        json!({
            "q": self.q,
            "case": self.case.to_string(),
            "u": self.u,
            "group": self.group.spec().to_string(),
            "paper_name": self.group.spec().paper_name(),
            "genus": self.vectors[0].action_genus(&self.group).ok(),
            "vectors": self.vectors.iter().map(|v| json!({
                "signature": v.signature.to_string(),
                "vector": v.entry_labels(&self.group),
                "valid": vector_satisfies(&self.group, v),
            })).collect::<Vec<_>>(),
            "restrictions": self.witnesses.iter().map(|w| w.to_json(&self.group)).collect::<Vec<_>>(),
            "key_image_checks": checks(&self.key_checks),
            "other_image_checks": checks(&self.other_checks),
            "subgroup_ok": self.subgroup_ok,
            "cited_assumption": CITED_ASSUMPTION,
        })
    }
}

/// The two extra-symmetric actions on the boundary of each family, and their
/// restrictions back to the family's signature.
pub fn boundary_vectors(q: u32, case: BoundaryCase) -> Result<BoundaryReport> {
    odd_prime(q, 4096)?;
    let m = match case {
        BoundaryCase::Ord8 => 8,
        BoundaryCase::Ord6 => 6,
    };
    if q % m != 1 {
        return Err(Error::params(format!("case {case} needs q ≡ 1 mod {m}, got q = {q}")));
    }
    let u = find_root_of_unity(q, m)?;
    let ui = u as i64;
    let qi = q as i64;
    let group = match case {
        BoundaryCase::Ord8 => GroupSpec::Metacyclic { q, m: 8, u }.build()?.with_generator_names(&["α", "β"])?,
        BoundaryCase::Ord6 => GroupSpec::Product(vec![GroupSpec::Metacyclic { q, m: 6, u }, GroupSpec::Cyclic(2)])
            .build()?
            .with_generator_names(&["α", "β", "γ"])?,
    };
    let g = &group;
    // α^i β^j γ^k
    let el = |i: i64, j: i64, k: i64| -> Result<usize> {
        let mut w = vec![("α", i.rem_euclid(qi)), ("β", j)];
        if k != 0 {
            w.push(("γ", k));
        }
        g.eval_word(&w)
    };
    let u2 = ui * ui % qi;
    let u3 = u2 * ui % qi;
    let (sig, images, words): (Signature, [[usize; 3]; 2], Vec<&[(usize, i64)]>) = match case {
        BoundaryCase::Ord8 => (
            Signature::new(0, vec![2, 8, 8])?,
            [
                [el(0, 4, 0)?, el(-ui, 1, 0)?, el(1, 3, 0)?],
                // as printed, Θ₂(y₂) = α^u β breaks the long relation; α^u β⁵ is
                // the unique value compatible with Θ₂(y₁) = β⁴ and Θ₂(y₃) = αβ⁷
                [el(0, 4, 0)?, el(ui, 5, 0)?, el(1, 7, 0)?],
            ],
            HAT_WORDS.to_vec(),
        ),
        BoundaryCase::Ord6 => (
            Signature::new(0, vec![2, 6, 6])?,
            [
                [el(0, 3, 0)?, el(-ui, 1, 1)?, el(1, 2, 1)?],
                [el(0, 3, 1)?, el(-u2, 2, 1)?, el(1, 1, 0)?],
            ],
            TILDE_WORDS.to_vec(),
        ),
    };
    let vectors = images.map(|e| GeneratingVector::new(sig.clone(), Vec::new(), e.to_vec()));
    for (i, v) in vectors.iter().enumerate() {
        let check = check_vector(g, v);
        if !check.is_valid() {
            return Err(Error::invariant(format!(
                "boundary vector {}: {}",
                i + 1,
                check.violations().join("; ")
            )));
        }
    }
    let witnesses = vectors
        .iter()
        .map(|v| restrict_action(g, v, &words))
        .collect::<Result<Vec<_>>>()?;

    // closed forms of the restricted images, per vector
    let closed: [Vec<usize>; 2] = match case {
        BoundaryCase::Ord8 => [
            vec![el(0, 4, 0)?, el(0, 4, 0)?, el(1 + u3, 6, 0)?, el(u3 - u2, 7, 0)?],
            vec![el(0, 4, 0)?, el(0, 4, 0)?, el(1 - u3, 6, 0)?, el(u3 + u2, 7, 0)?],
        ],
        BoundaryCase::Ord6 => [
            vec![
                el(0, 0, 1)?,
                el(0, 3, 0)?,
                el(-2 * ui, 3, 0)?,
                el(2 - 4 * ui, 3, 0)?,
                el(2 - 2 * ui, 3, 1)?,
            ],
            vec![
                el(2 * ui, 3, 0)?,
                el(0, 3, 1)?,
                el(-2 * u2, 3, 1)?,
                el(2, 3, 1)?,
                el(0, 0, 1)?,
            ],
        ],
    };
    let mut key_checks = Vec::new();
    let mut other_checks = Vec::new();
    for (i, w) in witnesses.iter().enumerate() {
        for (pos, (&want, &got)) in closed[i].iter().zip(&w.induced.elliptic).enumerate() {
            let c = ImageCheck {
                vector: i + 1,
                position: pos + 1,
                expected: g.label(want).to_string(),
                computed: g.label(got).to_string(),
            };
            if case == BoundaryCase::Ord8 && pos == 2 {
                key_checks.push(c);
            } else {
                other_checks.push(c);
            }
        }
    }

    let target = match case {
        BoundaryCase::Ord8 => g.subgroup_generated(&[el(1, 0, 0)?, el(0, 2, 0)?]),
        BoundaryCase::Ord6 => g.subgroup_generated(&[el(1, 0, 1)?, el(0, 3, 0)?]),
    };
    let mut subgroup_ok = witnesses.iter().all(|w| w.subgroup == target);
    if case == BoundaryCase::Ord6 {
        let dihedral = GroupSpec::Dihedral(2 * q).build()?;
        let (sub, _) = g.subgroup_as_group(&target, &[el(1, 0, 1)?, el(0, 3, 0)?])?;
        subgroup_ok &= are_isomorphic(&sub, &dihedral)?;
    }
    Ok(BoundaryReport {
        q,
        case,
        u,
        group,
        vectors,
        witnesses,
        key_checks,
        other_checks,
        subgroup_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylow_lists() {
        assert_eq!(groups_of_order_4q(11).unwrap().len(), 4);
        assert_eq!(groups_of_order_4q(13).unwrap().len(), 5);
        assert_eq!(groups_of_order_4q(5).unwrap().len(), 5);
        assert!(groups_of_order_4q(9).is_err());
    }

    #[test]
    fn classify_rejects_composite() {
        assert!(matches!(classify_genus(11, 1), Err(Error::InvalidParameters(_))));
        assert!(classify_genus(7, 1).is_err());
    }

    #[test]
    fn q8_examples() {
        let e = counterexample_q8(5).unwrap();
        assert_eq!((e.genus, e.group.order()), (11, 40));
        let e = counterexample_q8(3).unwrap();
        assert_eq!((e.genus, e.group.order()), (7, 24));
        assert!(counterexample_q8(4).is_err());
        assert!(counterexample_q8(1).is_err());
    }

    #[test]
    fn dihedral2_example() {
        let e = counterexample_dihedral2(3).unwrap();
        assert_eq!(e.members.len(), 4);
        assert!(e.members.iter().all(|m| m.genus == 9 && m.group.order() == 32));
        // m and −m give the same group, so only two types remain
        assert!(!e.pairwise_non_isomorphic);
        assert_eq!(e.isomorphism_classes, vec![vec![1, 7], vec![3, 5]]);
        assert!(counterexample_dihedral2(2).is_err());
    }

    /// Explicit witness independent of the isomorphism search: with `t' = ts`
    /// the twist by `−m` becomes the twist by `m`.
    #[test]
    fn opposite_twists_are_isomorphic() {
        for (n, m) in [(3u32, 1u32), (3, 3), (4, 7)] {
            let p = 1 << n;
            let a = GroupSpec::Dihedral2Semidirect { n, m }.build().unwrap();
            let b = GroupSpec::Dihedral2Semidirect { n, m: p - m }.build().unwrap();
            let images = [
                b.eval_word(&[("r", 1)]).unwrap(),
                b.eval_word(&[("s", 1)]).unwrap(),
                b.eval_word(&[("s", 1), ("t", 1)]).unwrap(),
            ];
            let names: Vec<&str> = a.generators().iter().map(|g| g.name.as_str()).collect();
            assert_eq!(names, ["r", "s", "t"]);
            let phi = crate::group::GroupMorphism::from_generator_images(&a, &b, &images).unwrap();
            assert!(phi.is_bijective());
        }
    }

    #[test]
    fn boundary_ord8() {
        let r = boundary_vectors(17, BoundaryCase::Ord8).unwrap();
        assert_eq!(r.u, 2);
        assert_eq!(r.vectors[0].action_genus(&r.group).unwrap(), 18);
        for w in &r.witnesses {
            assert_eq!(w.index, 2);
            assert_eq!(w.subgroup.order(), 68);
            assert_eq!(w.induced_signature().to_string(), "0;2,2,4,4");
            assert_eq!(r.group.label(w.induced.elliptic[0]), "β^4");
            assert_eq!(r.group.label(w.induced.elliptic[1]), "β^4");
        }
        assert!(r.key_checks_pass());
        assert!(r.subgroup_ok);
        assert!(boundary_vectors(11, BoundaryCase::Ord8).is_err());
    }

    #[test]
    fn boundary_ord6() {
        let r = boundary_vectors(7, BoundaryCase::Ord6).unwrap();
        assert_eq!(r.u, 3);
        assert_eq!(r.vectors[0].action_genus(&r.group).unwrap(), 8);
        for w in &r.witnesses {
            assert_eq!(w.index, 3);
            assert_eq!(w.subgroup.order(), 28);
            assert_eq!(w.induced_signature().to_string(), "0;2,2,2,2,2");
        }
        assert!(r.subgroup_ok);
    }

    #[test]
    fn restriction_rejects_bad_words() {
        let r = boundary_vectors(17, BoundaryCase::Ord8).unwrap();
        let bad: [&[(usize, i64)]; 2] = [&[(0, 1)], &[(1, 1)]];
        assert!(restrict_action(&r.group, &r.vectors[0], &bad).is_err());
    }
}
