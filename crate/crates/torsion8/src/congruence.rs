//! Finite congruence quotients of SL2 over Z/2^n and the reference group
//! theory for the division-field Galois groups.
//!
//! Everything profinite is rendered at a finite modulus: SL2(Z/16) is the
//! deepest level needed, where the normal closure of the presentation's
//! relators is compared against the kernel of reduction to SL2(Z/8).

use sha2::{Digest, Sha256};
use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::todd_coxeter::{self, commutator_word, concat, power_word, Word};

/// An element of SL2(Z/2^n), n <= 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub modulus: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Mat2 {
    pub fn new(modulus: u32, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if !(modulus.is_power_of_two() && (2..=16).contains(&modulus)) {
            return Err(Error::OutOfRange(format!(
                "modulus {modulus} is not 2^n with n <= 4"
            )));
        }
        let m = modulus as i64;
        let (a, b, c, d) = (
            a.rem_euclid(m) as u32,
            b.rem_euclid(m) as u32,
            c.rem_euclid(m) as u32,
            d.rem_euclid(m) as u32,
        );
        let det = (a as i64 * d as i64 - b as i64 * c as i64).rem_euclid(m);
        if det != 1 {
            return Err(Error::InvariantViolation(format!(
                "determinant {det} != 1 mod {modulus}"
            )));
        }
        Ok(Mat2 {
            modulus,
            a,
            b,
            c,
            d,
        })
    }

    pub fn identity(modulus: u32) -> Self {
        Mat2::new(modulus, 1, 0, 0, 1).expect("identity")
    }

    pub fn neg_identity(modulus: u32) -> Self {
        Mat2::new(modulus, -1, 0, 0, -1).expect("negated identity")
    }

    /// `[[1, -2], [0, 1]]`, a standard generator of the level-2 group.
    pub fn sigma_tilde(modulus: u32) -> Self {
        Mat2::new(modulus, 1, -2, 0, 1).expect("sigma generator")
    }

    /// `[[1, 0], [2, 1]]`, the companion generator.
    pub fn tau_tilde(modulus: u32) -> Self {
        Mat2::new(modulus, 1, 0, 2, 1).expect("tau generator")
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let m = self.modulus as u64;
        let mul = |x: u32, y: u32| (x as u64 * y as u64) % m;
        Mat2 {
            modulus: self.modulus,
            a: ((mul(self.a, rhs.a) + mul(self.b, rhs.c)) % m) as u32,
            b: ((mul(self.a, rhs.b) + mul(self.b, rhs.d)) % m) as u32,
            c: ((mul(self.c, rhs.a) + mul(self.d, rhs.c)) % m) as u32,
            d: ((mul(self.c, rhs.b) + mul(self.d, rhs.d)) % m) as u32,
        }
    }

    /// Inverse by adjugate; valid since det = 1.
    pub fn inv(&self) -> Mat2 {
        Mat2::new(
            self.modulus,
            self.d as i64,
            -(self.b as i64),
            -(self.c as i64),
            self.a as i64,
        )
        .expect("adjugate of det-1 matrix")
    }

    pub fn neg(&self) -> Mat2 {
        let m = self.modulus as i64;
        Mat2::new(
            self.modulus,
            m - self.a as i64,
            m - self.b as i64,
            m - self.c as i64,
            m - self.d as i64,
        )
        .expect("negation preserves det mod m")
    }

    pub fn pow(&self, n: usize) -> Mat2 {
        let mut acc = Mat2::identity(self.modulus);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity(self.modulus)
    }

    /// Reduction SL2(Z/2^n) -> SL2(Z/2^k) for k <= n.
    pub fn reduce_mod(&self, smaller: u32) -> Mat2 {
        Mat2 {
            modulus: smaller,
            a: self.a % smaller,
            b: self.b % smaller,
            c: self.c % smaller,
            d: self.d % smaller,
        }
    }

    /// Evaluates a word in two given matrices.
    pub fn eval_word(word: &[i32], s: &Mat2, t: &Mat2) -> Mat2 {
        let mut acc = Mat2::identity(s.modulus);
        for &letter in word {
            let factor = match letter {
                1 => *s,
                -1 => s.inv(),
                2 => *t,
                -2 => t.inv(),
                other => panic!("letter {other} outside the two-generator alphabet"),
            };
            acc = acc.mul(&factor);
        }
        acc
    }
}

/// A finite set of matrices closed under multiplication and inverse.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pub modulus: u32,
    pub elements: Vec<Mat2>,
    index: HashMap<Mat2, usize>,
}

impl FiniteGroup {
    fn from_elements(modulus: u32, mut elements: Vec<Mat2>) -> Result<Self> {
        elements.sort_by_key(|m| (m.a, m.b, m.c, m.d));
        elements.dedup();
        let index: HashMap<Mat2, usize> =
            elements.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let g = FiniteGroup {
            modulus,
            elements,
            index,
        };
        for x in &g.elements {
            if !g.contains(&x.inv()) {
                return Err(Error::InvariantViolation(
                    "element set is not closed under inversion".into(),
                ));
            }
        }
        if !g.contains(&Mat2::identity(modulus)) {
            return Err(Error::InvariantViolation(
                "element set lacks the identity".into(),
            ));
        }
        Ok(g)
    }

    /// Subgroup generated by the given matrices.
    pub fn closure(modulus: u32, gens: &[Mat2]) -> FiniteGroup {
        let mut seen: HashSet<Mat2> = HashSet::new();
        let mut queue: VecDeque<Mat2> = VecDeque::new();
        seen.insert(Mat2::identity(modulus));
        queue.push_back(Mat2::identity(modulus));
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.mul(g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
                let y = x.mul(&g.inv());
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        FiniteGroup::from_elements(modulus, seen.into_iter().collect())
            .expect("closures are closed")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        self.index.contains_key(m)
    }

    pub fn index_of(&self, m: &Mat2) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Normal closure of a subset inside this group (the subset must lie
    /// in the group).
    pub fn normal_closure(&self, subset: &[Mat2]) -> FiniteGroup {
        let mut gens: Vec<Mat2> = Vec::new();
        for r in subset {
            for h in &self.elements {
                gens.push(h.mul(r).mul(&h.inv()));
            }
        }
        FiniteGroup::closure(self.modulus, &gens)
    }

    pub fn center(&self) -> Vec<Mat2> {
        self.elements
            .iter()
            .filter(|z| self.elements.iter().all(|g| z.mul(g) == g.mul(z)))
            .copied()
            .collect()
    }

    pub fn element_order(&self, m: &Mat2) -> usize {
        let mut acc = *m;
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.mul(m);
            n += 1;
        }
        n
    }

    /// Abstract multiplication table for isomorphism checking.
    pub fn group_table(&self) -> GroupTable {
        let n = self.order();
        let mut table = vec![vec![0usize; n]; n];
        for (i, x) in self.elements.iter().enumerate() {
            for (j, y) in self.elements.iter().enumerate() {
                table[i][j] = self.index[&x.mul(y)];
            }
        }
        let identity = self.index[&Mat2::identity(self.modulus)];
        GroupTable { table, identity }
    }
}

/// The image of the level-2^level congruence subgroup inside SL2(Z/2^n):
/// all determinant-1 matrices congruent to the identity mod 2^level,
/// enumerated by exhaustion.
pub fn congruence_image(n: u32, level: u32) -> Result<FiniteGroup> {
    if !(1..=4).contains(&n) || level > n {
        return Err(Error::OutOfRange(format!(
            "congruence_image(n={n}, level={level}) needs 1 <= n <= 4, level <= n"
        )));
    }
    let m = 1u32 << n;
    let step = 1u32 << level;
    let count = m / step;
    // a, d run over residues congruent to 1, b, c to 0, all mod 2^level
    let diag: Vec<u32> = (0..count).map(|k| (1 + k * step) % m).collect();
    let off: Vec<u32> = (0..count).map(|k| (k * step) % m).collect();
    let mut elements = Vec::new();
    for &a in &diag {
        for &d in &diag {
            for &b in &off {
                for &c in &off {
                    let det = (a as i64 * d as i64 - b as i64 * c as i64).rem_euclid(m as i64);
                    if det == 1 {
                        elements.push(Mat2 {
                            modulus: m,
                            a,
                            b,
                            c,
                            d,
                        });
                    }
                }
            }
        }
    }
    FiniteGroup::from_elements(m, elements)
}

/// Report for the direct-product decomposition of the level-2 group.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DirectProductReport {
    pub gamma2_order: usize,
    pub gamma2_prime_order: usize,
    pub neg_identity_in_prime: bool,
    pub intersection_trivial: bool,
    pub unique_factorization: bool,
}

impl DirectProductReport {
    pub fn holds(&self) -> bool {
        !self.neg_identity_in_prime && self.intersection_trivial && self.unique_factorization
    }
}

/// The subgroup of the level-2 image whose diagonal entries are 1 mod 4,
/// together with the exhaustive verification that the level-2 image is the
/// direct product of this subgroup with the scalars.
pub fn gamma2_prime(modulus: u32) -> Result<(FiniteGroup, DirectProductReport)> {
    if !(modulus == 8 || modulus == 16) {
        return Err(Error::OutOfRange(format!(
            "gamma2_prime needs modulus 8 or 16, got {modulus}"
        )));
    }
    let n = modulus.trailing_zeros();
    let gamma2 = congruence_image(n, 1)?;
    let elements: Vec<Mat2> = gamma2
        .elements
        .iter()
        .filter(|m| m.a % 4 == 1 && m.d % 4 == 1)
        .copied()
        .collect();
    let prime = FiniteGroup::from_elements(modulus, elements)?;

    let neg = Mat2::neg_identity(modulus);
    let neg_in_prime = prime.contains(&neg);
    let intersection_trivial = {
        let scalars = [Mat2::identity(modulus), neg];
        scalars
            .iter()
            .filter(|s| prime.contains(s))
            .all(|s| s.is_identity())
    };
    // every element of the level-2 image must factor as (+-I) * (prime
    // part) in exactly one way
    let mut unique_factorization = true;
    for g in &gamma2.elements {
        let in_prime = prime.contains(g);
        let neg_in = prime.contains(&g.neg());
        if in_prime == neg_in {
            unique_factorization = false;
        }
    }
    let report = DirectProductReport {
        gamma2_order: gamma2.order(),
        gamma2_prime_order: prime.order(),
        neg_identity_in_prime: neg_in_prime,
        intersection_trivial,
        unique_factorization,
    };
    Ok((prime, report))
}

/// The seven relator words in the two generators.
pub fn presentation_relators() -> Vec<Word> {
    let s: Word = vec![1];
    let t: Word = vec![2];
    let s2 = power_word(&s, 2);
    let t2 = power_word(&t, 2);
    let c = commutator_word(&s, &t);
    vec![
        power_word(&s, 4),
        power_word(&t, 4),
        commutator_word(&s2, &t),
        commutator_word(&s, &t2),
        concat(&[&c, &c]),
        commutator_word(&c, &s),
        commutator_word(&c, &t),
    ]
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct PresentationReport {
    /// One verdict per relator, evaluated on the concrete matrices.
    pub relations_hold: Vec<bool>,
    /// The two matrices generate the whole group.
    pub generates: bool,
    /// Order of the abstract presented group by coset enumeration.
    pub abstract_order: Option<usize>,
    pub commutator_subgroup_order: usize,
    pub commutator_nontrivial_order: Option<usize>,
    /// Element-order census of the abelianization: counts of orders 1, 2, 4.
    pub abelianization_census: (usize, usize, usize),
    pub abelianization_is_z4_x_z4: bool,
}

impl PresentationReport {
    pub fn all_pass(&self) -> bool {
        self.relations_hold.iter().all(|&b| b)
            && self.generates
            && self.abstract_order == Some(32)
            && self.commutator_subgroup_order == 2
            && self.commutator_nontrivial_order == Some(2)
            && self.abelianization_is_z4_x_z4
    }
}

/// Verifies the seven relations on `s`, `t`, that they generate `g`, and
/// that the abstract group presented by those relations closes at exactly
/// 32 elements (with its commutator and abelianization structure).
pub fn check_presentation(g: &FiniteGroup, s: &Mat2, t: &Mat2) -> Result<PresentationReport> {
    if !g.contains(s) || !g.contains(t) {
        return Err(Error::OutOfRange(
            "presentation generators must lie in the group".into(),
        ));
    }
    let relators = presentation_relators();
    let relations_hold: Vec<bool> = relators
        .iter()
        .map(|w| Mat2::eval_word(w, s, t).is_identity())
        .collect();
    let generates = FiniteGroup::closure(g.modulus, &[*s, *t]).order() == g.order();

    // abstract group, by coset enumeration capped per the divergence guard
    let enumeration = todd_coxeter::enumerate(2, &relators, 10_000);
    let abstract_order = enumeration.as_ref().map(|t| t.num_cosets);

    let (commutator_subgroup_order, commutator_nontrivial_order, census, is_z4z4) =
        match &enumeration {
            Some(table) => abstract_structure(table),
            None => (0, None, (0, 0, 0), false),
        };

    Ok(PresentationReport {
        relations_hold,
        generates,
        abstract_order,
        commutator_subgroup_order,
        commutator_nontrivial_order,
        abelianization_census: census,
        abelianization_is_z4_x_z4: is_z4z4,
    })
}

type Perm = Vec<usize>;

fn perm_mul(p: &Perm, q: &Perm) -> Perm {
    // apply q first, then p
    q.iter().map(|&i| p[i]).collect()
}

fn perm_inv(p: &Perm) -> Perm {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j] = i;
    }
    out
}

fn perm_order(p: &Perm) -> usize {
    let id: Perm = (0..p.len()).collect();
    let mut acc = p.clone();
    let mut n = 1;
    while acc != id {
        acc = perm_mul(&acc, p);
        n += 1;
    }
    n
}

fn perm_closure(gens: &[Perm]) -> Vec<Perm> {
    let n = gens[0].len();
    let id: Perm = (0..n).collect();
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = perm_mul(&x, g);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Commutator subgroup and abelianization census of the presented group,
/// computed in its regular representation.
fn abstract_structure(
    table: &todd_coxeter::CosetTable,
) -> (usize, Option<usize>, (usize, usize, usize), bool) {
    let gens = &table.gen_perms;
    let elements = perm_closure(gens);
    let mut commutators: Vec<Perm> = Vec::new();
    for x in &elements {
        for y in &elements {
            commutators.push(perm_mul(
                &perm_mul(x, y),
                &perm_mul(&perm_inv(x), &perm_inv(y)),
            ));
        }
    }
    commutators.sort();
    commutators.dedup();
    let commutator_subgroup = perm_closure(&commutators);
    let nontrivial_order = {
        let id: Perm = (0..gens[0].len()).collect();
        let nontrivial: Vec<&Perm> = commutator_subgroup.iter().filter(|p| **p != id).collect();
        if nontrivial.len() == 1 {
            Some(perm_order(nontrivial[0]))
        } else {
            None
        }
    };

    // abelianization: one representative per commutator-subgroup coset
    let comm_set: HashSet<&Perm> = commutator_subgroup.iter().collect();
    let mut cosets: Vec<Perm> = Vec::new();
    let mut seen: HashSet<Perm> = HashSet::new();
    for e in &elements {
        if seen.contains(e) {
            continue;
        }
        cosets.push(e.clone());
        for c in &commutator_subgroup {
            seen.insert(perm_mul(e, c));
        }
    }
    let coset_order = |e: &Perm| -> usize {
        let mut acc = e.clone();
        let mut n = 1;
        while !comm_set.contains(&acc) {
            acc = perm_mul(&acc, e);
            n += 1;
        }
        n
    };
    let mut census = (0usize, 0usize, 0usize);
    let mut other = 0usize;
    for e in &cosets {
        match coset_order(e) {
            1 => census.0 += 1,
            2 => census.1 += 1,
            4 => census.2 += 1,
            _ => other += 1,
        }
    }
    // census (1, 3, 12) characterizes Z/4 x Z/4 among abelian groups of
    // order 16
    let is_z4z4 = cosets.len() == 16 && other == 0 && census == (1, 3, 12);
    (commutator_subgroup.len(), nontrivial_order, census, is_z4z4)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct UniqueQuotientReport {
    pub ambient_order: usize,
    pub normal_closure_order: usize,
    pub kernel_order: usize,
    pub closure_equals_kernel: bool,
    pub center_order: usize,
    pub center_exponent_two: bool,
    pub two_generated: bool,
}

impl UniqueQuotientReport {
    pub fn all_pass(&self) -> bool {
        self.closure_equals_kernel && self.center_exponent_two && !self.two_generated
    }
}

/// Finite rendering of the unique-quotient argument: inside SL2(Z/16) the
/// normal closure of the seven relator images in the diagonal-1-mod-4
/// subgroup equals the kernel of reduction to SL2(Z/8). Also checks the
/// two facts the argument leans on: the center of the order-32 quotient is
/// elementary abelian, and the full level-2 quotient mod 8 cannot be
/// generated by two elements.
pub fn unique_quotient_check() -> Result<UniqueQuotientReport> {
    let (h16, _) = gamma2_prime(16)?;
    let s16 = Mat2::sigma_tilde(16);
    let t16 = Mat2::tau_tilde(16);
    let relator_images: Vec<Mat2> = presentation_relators()
        .iter()
        .map(|w| Mat2::eval_word(w, &s16, &t16))
        .collect();
    for r in &relator_images {
        if !h16.contains(r) {
            return Err(Error::InvariantViolation(
                "relator image escapes the mod-16 subgroup".into(),
            ));
        }
    }
    let closure = h16.normal_closure(&relator_images);
    let kernel: Vec<Mat2> = h16
        .elements
        .iter()
        .filter(|m| m.reduce_mod(8).is_identity())
        .copied()
        .collect();
    let closure_equals_kernel =
        closure.order() == kernel.len() && kernel.iter().all(|m| closure.contains(m));

    let (prime8, _) = gamma2_prime(8)?;
    let center = prime8.center();
    let center_exponent_two = center.iter().all(|z| prime8.element_order(z) <= 2);

    // exhaustive pair search in the order-64 group
    let gamma2_8 = congruence_image(3, 1)?;
    let mut two_generated = false;
    'outer: for x in &gamma2_8.elements {
        for y in &gamma2_8.elements {
            if FiniteGroup::closure(8, &[*x, *y]).order() == gamma2_8.order() {
                two_generated = true;
                break 'outer;
            }
        }
    }

    Ok(UniqueQuotientReport {
        ambient_order: h16.order(),
        normal_closure_order: closure.order(),
        kernel_order: kernel.len(),
        closure_equals_kernel,
        center_order: center.len(),
        center_exponent_two,
        two_generated,
    })
}

/// Abstract multiplication table of a finite group; the common currency
/// for isomorphism checks between matrix groups and automorphism groups.
#[derive(Debug, Clone)]
pub struct GroupTable {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn hash_hex(&self) -> String {
        let mut h = Sha256::new();
        for row in &self.table {
            for &v in row {
                h.update((v as u64).to_le_bytes());
            }
        }
        let digest = h.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct MatchOutcome {
    pub is_isomorphism: bool,
    /// A word over the generator map that witnesses failure, if any.
    pub witness: Option<String>,
    pub table_hash_left: String,
    pub table_hash_right: String,
}

/// Extends `gen_map` (pairs of element indices, left group to right group)
/// to a map by words and checks it is a bijective homomorphism of the
/// multiplication tables.
pub fn match_isomorphism(
    g: &GroupTable,
    h: &GroupTable,
    gen_map: &[(usize, usize)],
) -> Result<MatchOutcome> {
    let fail = |witness: String| MatchOutcome {
        is_isomorphism: false,
        witness: Some(witness),
        table_hash_left: g.hash_hex(),
        table_hash_right: h.hash_hex(),
    };
    if g.order() != h.order() {
        return Ok(fail(format!(
            "orders differ: {} vs {}",
            g.order(),
            h.order()
        )));
    }
    let mut map: Vec<Option<usize>> = vec![None; g.order()];
    map[g.identity] = Some(h.identity);
    let mut words: Vec<String> = vec![String::new(); g.order()];
    let mut queue = VecDeque::new();
    queue.push_back(g.identity);
    while let Some(x) = queue.pop_front() {
        let y = map[x].expect("queued elements are mapped");
        for (k, &(gx, hy)) in gen_map.iter().enumerate() {
            let nx = g.table[x][gx];
            let ny = h.table[y][hy];
            match map[nx] {
                None => {
                    map[nx] = Some(ny);
                    words[nx] = format!("{}g{}", words[x], k);
                    queue.push_back(nx);
                }
                Some(existing) if existing != ny => {
                    return Ok(fail(format!("word {}g{} maps inconsistently", words[x], k)));
                }
                _ => {}
            }
        }
    }
    if map.iter().any(|m| m.is_none()) {
        return Ok(fail("generators do not generate the left group".into()));
    }
    let map: Vec<usize> = map.into_iter().map(|m| m.expect("checked")).collect();
    let mut image: Vec<usize> = map.clone();
    image.sort_unstable();
    image.dedup();
    if image.len() != h.order() {
        return Ok(fail("extended map is not injective".into()));
    }
    for i in 0..g.order() {
        for j in 0..g.order() {
            if map[g.table[i][j]] != h.table[map[i]][map[j]] {
                return Ok(fail(format!("homomorphism fails at pair ({i}, {j})")));
            }
        }
    }
    Ok(MatchOutcome {
        is_isomorphism: true,
        witness: None,
        table_hash_left: g.hash_hex(),
        table_hash_right: h.hash_hex(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_mod2_has_six_elements() {
        let g = congruence_image(1, 0).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn gamma2_mod8_has_order_64() {
        let g = congruence_image(3, 1).unwrap();
        assert_eq!(g.order(), 64);
    }

    #[test]
    fn gamma_quotients_are_elementary_abelian_of_order_8() {
        // levels (2, 1) and (3, 2) render Gamma(2)/Gamma(4), Gamma(4)/Gamma(8)
        for (n, level) in [(2u32, 1u32), (3, 2)] {
            let g = congruence_image(n, level).unwrap();
            assert_eq!(g.order(), 8, "image at n={n}, level={level}");
            for m in &g.elements {
                assert!(g.element_order(m) <= 2);
            }
            for x in &g.elements {
                for y in &g.elements {
                    assert_eq!(x.mul(y), y.mul(x));
                }
            }
        }
    }

    #[test]
    fn gamma2_prime_direct_product() {
        let (prime, report) = gamma2_prime(8).unwrap();
        assert_eq!(prime.order(), 32);
        assert!(!report.neg_identity_in_prime);
        assert!(report.holds(), "{report:?}");
        assert_eq!(report.gamma2_order, 64);
    }

    #[test]
    fn presentation_holds_for_standard_generators() {
        let (prime, _) = gamma2_prime(8).unwrap();
        let s = Mat2::sigma_tilde(8);
        let t = Mat2::tau_tilde(8);
        let report = check_presentation(&prime, &s, &t).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.abstract_order, Some(32));
        assert_eq!(report.abelianization_census, (1, 3, 12));
    }

    #[test]
    fn unique_quotient_at_mod_16() {
        let report = unique_quotient_check().unwrap();
        assert!(report.closure_equals_kernel, "{report:?}");
        assert_eq!(report.normal_closure_order, 8);
        assert_eq!(report.kernel_order, 8);
        assert!(report.center_exponent_two);
        assert!(!report.two_generated);
    }

    #[test]
    fn identity_map_is_isomorphism() {
        let (prime, _) = gamma2_prime(8).unwrap();
        let table = prime.group_table();
        let s = prime.index_of(&Mat2::sigma_tilde(8)).unwrap();
        let t = prime.index_of(&Mat2::tau_tilde(8)).unwrap();
        let outcome = match_isomorphism(&table, &table, &[(s, s), (t, t)]).unwrap();
        assert!(outcome.is_isomorphism, "{outcome:?}");
    }

    #[test]
    fn wrong_sized_map_fails() {
        let (prime, _) = gamma2_prime(8).unwrap();
        let gamma2 = congruence_image(3, 1).unwrap();
        let outcome = match_isomorphism(&prime.group_table(), &gamma2.group_table(), &[]).unwrap();
        assert!(!outcome.is_isomorphism);
    }

    #[test]
    fn determinant_enforced() {
        assert!(Mat2::new(8, 1, 1, 1, 1).is_err());
        assert!(Mat2::new(8, 3, 2, 4, 3).is_ok()); // det = 9 - 8 = 1
    }
}
