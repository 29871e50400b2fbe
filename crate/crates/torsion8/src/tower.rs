//! Towers of quadratic extensions of the rationals.
//!
//! A tower is an ordered list of adjoined square roots. Level `k` adjoins a
//! generator `g_k` with `g_k^2 = d_k`, where the radicand `d_k` is a nonzero
//! non-square element of the sub-tower below level `k`. Elements are dense
//! coefficient vectors over the canonical basis of square-root products:
//! basis monomial `s_S = prod_{k in S} g_k`, with subsets `S` ordered by
//! bitmask value. Products follow `s_S * s_T = (prod_{k in S ∩ T} d_k) *
//! s_{S xor T}`, realized here by recursive splitting at the top level.
//!
//! Because every radicand is verified non-square at adjunction time, each
//! level is a genuine quadratic field extension and the whole tower is a
//! field; inverses are computed by norm descent and never fail on nonzero
//! elements.

use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::{format_rational, rational_sqrt, Rational};

/// One adjunction step: a label plus the radicand's coefficients over the
/// sub-tower of all earlier levels (length `2^k` at level `k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerLevel {
    pub label: String,
    pub radicand: Vec<Rational>,
}

/// An immutable tower of quadratic extensions. Shared behind `Arc`; the
/// content hash `id` identifies structurally equal towers across processes.
#[derive(Debug)]
pub struct TowerDescriptor {
    levels: Vec<TowerLevel>,
    id: String,
}

fn content_id(levels: &[TowerLevel]) -> String {
    let mut h = Sha256::new();
    for lv in levels {
        h.update(lv.label.as_bytes());
        h.update([0u8]);
        for c in &lv.radicand {
            h.update(format_rational(c).as_bytes());
            h.update([1u8]);
        }
        h.update([2u8]);
    }
    let digest = h.finalize();
    let mut s = String::new();
    for b in &digest[..8] {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

impl TowerDescriptor {
    /// The trivial tower: the rationals themselves.
    pub fn rationals() -> Arc<Self> {
        Arc::new(TowerDescriptor {
            levels: Vec::new(),
            id: content_id(&[]),
        })
    }

    pub fn levels(&self) -> &[TowerLevel] {
        &self.levels
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    /// Dimension over the rationals: `2^levels`.
    pub fn dimension(&self) -> usize {
        1 << self.levels.len()
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn level_index(&self, label: &str) -> Option<usize> {
        self.levels.iter().position(|lv| lv.label == label)
    }

    /// The radicand of level `k` as an element of the full tower.
    pub fn radicand(self: &Arc<Self>, k: usize) -> TowerElement {
        let mut coeffs = vec![Rational::zero(); self.dimension()];
        coeffs[..self.levels[k].radicand.len()].clone_from_slice(&self.levels[k].radicand);
        TowerElement {
            tower: self.clone(),
            coeffs,
        }
    }

    /// True if `bigger` extends `self` by zero or more levels.
    pub fn is_prefix_of(&self, bigger: &TowerDescriptor) -> bool {
        bigger.levels.len() >= self.levels.len()
            && bigger.levels[..self.levels.len()] == self.levels
    }
}

/// An element of a tower: rational coefficients over the canonical basis.
#[derive(Clone)]
pub struct TowerElement {
    tower: Arc<TowerDescriptor>,
    coeffs: Vec<Rational>,
}

fn slice_is_zero(s: &[Rational]) -> bool {
    s.iter().all(|c| c.is_zero())
}

/// out += x * y, all slices of length `2^levels.len()`.
fn mul_acc(levels: &[TowerLevel], x: &[Rational], y: &[Rational], out: &mut [Rational]) {
    if levels.is_empty() {
        if !x[0].is_zero() && !y[0].is_zero() {
            out[0] += &x[0] * &y[0];
        }
        return;
    }
    let (sub, top) = levels.split_at(levels.len() - 1);
    let top = &top[0];
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, e) = y.split_at(h);
    let (lo, hi) = out.split_at_mut(h);
    let az = slice_is_zero(a);
    let bz = slice_is_zero(b);
    let cz = slice_is_zero(c);
    let ez = slice_is_zero(e);
    if !az && !cz {
        mul_acc(sub, a, c, lo);
    }
    if !bz && !ez {
        let mut be = vec![Rational::zero(); h];
        mul_acc(sub, b, e, &mut be);
        if !slice_is_zero(&be) {
            mul_acc(sub, &be, &top.radicand, lo);
        }
    }
    if !az && !ez {
        mul_acc(sub, a, e, hi);
    }
    if !bz && !cz {
        mul_acc(sub, b, c, hi);
    }
}

fn mul_slices(levels: &[TowerLevel], x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); x.len()];
    mul_acc(levels, x, y, &mut out);
    out
}

fn neg_slice(x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|c| -c).collect()
}

fn sub_slices(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn add_slices(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Multiplicative inverse by norm descent: with `x = a + b g`, `g^2 = d`,
/// `x^{-1} = (a - b g) / (a^2 - b^2 d)` and the norm lives one level down.
fn inv_slice(levels: &[TowerLevel], x: &[Rational]) -> Result<Vec<Rational>> {
    if levels.is_empty() {
        if x[0].is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(vec![x[0].recip()]);
    }
    let (sub, top) = levels.split_at(levels.len() - 1);
    let top = &top[0];
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    if slice_is_zero(b) {
        let mut out = inv_slice(sub, a)?;
        out.extend(std::iter::repeat_n(Rational::zero(), h));
        return Ok(out);
    }
    let b2 = mul_slices(sub, b, b);
    let b2d = mul_slices(sub, &b2, &top.radicand);
    let norm = sub_slices(&mul_slices(sub, a, a), &b2d);
    // norm = 0 with b != 0 would mean the radicand is a square below,
    // which adjunction rules out
    let ni = inv_slice(sub, &norm).map_err(|e| match e {
        Error::DivisionByZero => Error::InvariantViolation(
            "zero norm on nonzero element; tower radicand is a square".into(),
        ),
        other => other,
    })?;
    let mut out = mul_slices(sub, a, &ni);
    out.extend(neg_slice(&mul_slices(sub, b, &ni)));
    Ok(out)
}

/// Square root by norm descent over the top level, if one exists in the
/// tower. For `x = a + b g`: when `b = 0`, the root is either `sqrt(a)` or
/// `sqrt(a/d) * g`; when `b != 0`, the root is `u + v g` with
/// `u^2 = (a ± n)/2`, `n = sqrt(a^2 - b^2 d)`, `v = b/(2u)`. At most one
/// branch can succeed because `d` is a non-square in the sub-tower.
fn sqrt_slice(levels: &[TowerLevel], x: &[Rational]) -> Option<Vec<Rational>> {
    if levels.is_empty() {
        return rational_sqrt(&x[0]).map(|r| vec![r]);
    }
    let (sub, top) = levels.split_at(levels.len() - 1);
    let top = &top[0];
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    if slice_is_zero(b) {
        if let Some(r) = sqrt_slice(sub, a) {
            let mut out = r;
            out.extend(std::iter::repeat_n(Rational::zero(), h));
            return Some(out);
        }
        let dinv = inv_slice(sub, &top.radicand).expect("radicand is nonzero");
        let ad = mul_slices(sub, a, &dinv);
        if let Some(c) = sqrt_slice(sub, &ad) {
            let mut out = vec![Rational::zero(); h];
            out.extend(c);
            return Some(out);
        }
        return None;
    }
    let b2 = mul_slices(sub, b, b);
    let b2d = mul_slices(sub, &b2, &top.radicand);
    let norm2 = sub_slices(&mul_slices(sub, a, a), &b2d);
    let n = sqrt_slice(sub, &norm2)?;
    let two = Rational::from_integer(2.into());
    for n_signed in [n.clone(), neg_slice(&n)] {
        let u2: Vec<Rational> = a
            .iter()
            .zip(&n_signed)
            .map(|(ai, ni)| (ai + ni) / &two)
            .collect();
        if slice_is_zero(&u2) {
            continue;
        }
        if let Some(u) = sqrt_slice(sub, &u2) {
            let ui = match inv_slice(sub, &u) {
                Ok(ui) => ui,
                Err(_) => continue,
            };
            let v: Vec<Rational> = mul_slices(sub, b, &ui).iter().map(|c| c / &two).collect();
            let mut out = u;
            out.extend(v);
            return Some(out);
        }
    }
    None
}

impl TowerElement {
    pub fn from_coeffs(tower: Arc<TowerDescriptor>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != tower.dimension() {
            return Err(Error::BadEmbedding(format!(
                "coefficient vector has length {}, tower dimension is {}",
                coeffs.len(),
                tower.dimension()
            )));
        }
        Ok(TowerElement { tower, coeffs })
    }

    pub fn from_rational(tower: &Arc<TowerDescriptor>, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); tower.dimension()];
        coeffs[0] = r;
        TowerElement {
            tower: tower.clone(),
            coeffs,
        }
    }

    pub fn zero(tower: &Arc<TowerDescriptor>) -> Self {
        Self::from_rational(tower, Rational::zero())
    }

    pub fn one(tower: &Arc<TowerDescriptor>) -> Self {
        Self::from_rational(tower, Rational::one())
    }

    /// The basis monomial for a subset of levels given as a bitmask.
    pub fn basis_monomial(tower: &Arc<TowerDescriptor>, mask: usize) -> Self {
        assert!(mask < tower.dimension());
        let mut coeffs = vec![Rational::zero(); tower.dimension()];
        coeffs[mask] = Rational::one();
        TowerElement {
            tower: tower.clone(),
            coeffs,
        }
    }

    /// The generator adjoined at level `k`.
    pub fn generator(tower: &Arc<TowerDescriptor>, k: usize) -> Self {
        Self::basis_monomial(tower, 1 << k)
    }

    pub fn tower(&self) -> &Arc<TowerDescriptor> {
        &self.tower
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        slice_is_zero(&self.coeffs)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && slice_is_zero(&self.coeffs[1..])
    }

    /// Some(r) iff the element lies in the rational base line.
    pub fn as_rational(&self) -> Option<&Rational> {
        if slice_is_zero(&self.coeffs[1..]) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same_tower(&self, other: &TowerElement) -> Result<()> {
        if self.tower.id != other.tower.id {
            return Err(Error::TowerMismatch(
                self.tower.id.clone(),
                other.tower.id.clone(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &TowerElement) -> Result<TowerElement> {
        self.check_same_tower(other)?;
        Ok(TowerElement {
            tower: self.tower.clone(),
            coeffs: add_slices(&self.coeffs, &other.coeffs),
        })
    }

    pub fn sub(&self, other: &TowerElement) -> Result<TowerElement> {
        self.check_same_tower(other)?;
        Ok(TowerElement {
            tower: self.tower.clone(),
            coeffs: sub_slices(&self.coeffs, &other.coeffs),
        })
    }

    pub fn mul(&self, other: &TowerElement) -> Result<TowerElement> {
        self.check_same_tower(other)?;
        Ok(TowerElement {
            tower: self.tower.clone(),
            coeffs: mul_slices(self.tower.levels(), &self.coeffs, &other.coeffs),
        })
    }

    pub fn inv(&self) -> Result<TowerElement> {
        Ok(TowerElement {
            tower: self.tower.clone(),
            coeffs: inv_slice(self.tower.levels(), &self.coeffs)?,
        })
    }

    pub fn div(&self, other: &TowerElement) -> Result<TowerElement> {
        self.mul(&other.inv()?)
    }

    pub fn neg(&self) -> TowerElement {
        TowerElement {
            tower: self.tower.clone(),
            coeffs: neg_slice(&self.coeffs),
        }
    }

    pub fn scale(&self, r: &Rational) -> TowerElement {
        TowerElement {
            tower: self.tower.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn square(&self) -> TowerElement {
        self.mul(self).expect("same tower")
    }

    pub fn pow(&self, mut n: u64) -> TowerElement {
        let mut base = self.clone();
        let mut acc = TowerElement::one(&self.tower);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same tower");
            }
            base = base.square();
            n >>= 1;
        }
        acc
    }

    /// Flips the sign so the first nonzero coefficient in basis order is
    /// positive. Both roots of a square are related by this flip, so it
    /// fixes a canonical representative.
    pub fn canonical_sign(mut self) -> TowerElement {
        if let Some(c) = self.coeffs.iter().find(|c| !c.is_zero()) {
            if c.is_negative() {
                self.coeffs = neg_slice(&self.coeffs);
            }
        }
        self
    }

    /// A square root inside the tower, if one exists; the canonical sign
    /// rule picks among the two roots. Deterministic.
    pub fn sqrt_in_tower(&self) -> Option<TowerElement> {
        sqrt_slice(self.tower.levels(), &self.coeffs).map(|coeffs| {
            TowerElement {
                tower: self.tower.clone(),
                coeffs,
            }
            .canonical_sign()
        })
    }

    /// Reinterprets the element in an extension of its tower by padding the
    /// coefficient vector.
    pub fn embed(&self, bigger: &Arc<TowerDescriptor>) -> Result<TowerElement> {
        if self.tower.id == bigger.id {
            return Ok(self.clone());
        }
        if !self.tower.is_prefix_of(bigger) {
            return Err(Error::BadEmbedding(format!(
                "tower {} is not a prefix of {}",
                self.tower.id, bigger.id
            )));
        }
        let mut coeffs = vec![Rational::zero(); bigger.dimension()];
        coeffs[..self.coeffs.len()].clone_from_slice(&self.coeffs);
        Ok(TowerElement {
            tower: bigger.clone(),
            coeffs,
        })
    }

    /// Projects down to a sub-tower; fails if any coefficient outside the
    /// sub-tower's basis is nonzero.
    pub fn project(&self, smaller: &Arc<TowerDescriptor>) -> Result<TowerElement> {
        if !smaller.is_prefix_of(&self.tower) {
            return Err(Error::BadEmbedding(format!(
                "tower {} is not a prefix of {}",
                smaller.id, self.tower.id
            )));
        }
        let dim = smaller.dimension();
        if !slice_is_zero(&self.coeffs[dim..]) {
            return Err(Error::BadEmbedding(
                "element has support outside the sub-tower".into(),
            ));
        }
        Ok(TowerElement {
            tower: smaller.clone(),
            coeffs: self.coeffs[..dim].to_vec(),
        })
    }

    /// Lexicographic comparison of coefficient vectors; total order within
    /// one tower, used for deterministic output ordering.
    pub fn lex_cmp(&self, other: &TowerElement) -> Ordering {
        debug_assert_eq!(self.tower.id, other.tower.id);
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for TowerElement {
    fn eq(&self, other: &Self) -> bool {
        self.tower.id == other.tower.id && self.coeffs == other.coeffs
    }
}

impl Eq for TowerElement {}

impl std::hash::Hash for TowerElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.tower.id.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rational(c))?;
            for (k, lv) in self.tower.levels().iter().enumerate() {
                if mask & (1 << k) != 0 {
                    write!(f, "*{}", lv.label)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Adjoins a square root of `d` to tower `t`. If `d` is already a square,
/// the tower is returned unchanged together with the canonical root;
/// otherwise a new level is appended and the fresh generator returned.
pub fn adjoin_sqrt(
    t: &Arc<TowerDescriptor>,
    d: &TowerElement,
    label: &str,
) -> Result<(Arc<TowerDescriptor>, TowerElement)> {
    if d.tower().id() != t.id() {
        return Err(Error::TowerMismatch(
            d.tower().id().to_string(),
            t.id().to_string(),
        ));
    }
    if d.is_zero() {
        return Err(Error::DegenerateRadicand);
    }
    if let Some(r) = d.sqrt_in_tower() {
        return Ok((t.clone(), r));
    }
    if t.level_index(label).is_some() {
        return Err(Error::DuplicateLabel(label.to_string()));
    }
    let mut levels = t.levels().to_vec();
    levels.push(TowerLevel {
        label: label.to_string(),
        radicand: d.coeffs().to_vec(),
    });
    let id = content_id(&levels);
    let new_tower = Arc::new(TowerDescriptor { levels, id });
    let generator = TowerElement::generator(&new_tower, t.num_levels());
    Ok((new_tower, generator))
}

/// Post-hoc audit of the adjunction invariant: no level's radicand is a
/// square in the sub-tower below it.
pub fn audit_no_square_radicands(t: &TowerDescriptor) -> bool {
    for k in 0..t.num_levels() {
        if sqrt_slice(&t.levels()[..k], &t.levels()[k].radicand).is_some() {
            return false;
        }
    }
    true
}

macro_rules! bin_op {
    ($trait:ident, $fn:ident, $method:ident) => {
        impl std::ops::$trait<&TowerElement> for &TowerElement {
            type Output = TowerElement;
            fn $fn(self, rhs: &TowerElement) -> TowerElement {
                self.$method(rhs).expect("tower mismatch")
            }
        }
    };
}
bin_op!(Add, add, add);
bin_op!(Sub, sub, sub);
bin_op!(Mul, mul, mul);

impl std::ops::Neg for &TowerElement {
    type Output = TowerElement;
    fn neg(self) -> TowerElement {
        TowerElement::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_frac, rat_i64};

    pub(crate) fn q_sqrt2() -> (Arc<TowerDescriptor>, TowerElement) {
        let q = TowerDescriptor::rationals();
        let two = TowerElement::from_rational(&q, rat_i64(2));
        adjoin_sqrt(&q, &two, "sqrt2").unwrap()
    }

    pub(crate) fn q_zeta4() -> (Arc<TowerDescriptor>, TowerElement) {
        let q = TowerDescriptor::rationals();
        let m1 = TowerElement::from_rational(&q, rat_i64(-1));
        adjoin_sqrt(&q, &m1, "zeta4").unwrap()
    }

    #[test]
    fn add_examples() {
        let q = TowerDescriptor::rationals();
        let half = TowerElement::from_rational(&q, rat_frac(1, 2));
        assert!(half.add(&half).unwrap().is_one());

        let (t, s) = q_sqrt2();
        let one = TowerElement::one(&t);
        let x = one.add(&s).unwrap(); // 1 + sqrt2
        let zero = TowerElement::zero(&t);
        assert_eq!(x.add(&zero).unwrap(), x);
        let three = TowerElement::from_rational(&t, rat_i64(3));
        let y = three.sub(&s).unwrap(); // 3 - sqrt2
        let sum = x.add(&y).unwrap();
        assert_eq!(sum, TowerElement::from_rational(&t, rat_i64(4)));
    }

    #[test]
    fn mul_examples() {
        let (t, s) = q_sqrt2();
        assert_eq!(s.square(), TowerElement::from_rational(&t, rat_i64(2)));

        let (tz, z4) = q_zeta4();
        assert_eq!(z4.square(), TowerElement::from_rational(&tz, rat_i64(-1)));

        let one = TowerElement::one(&t);
        let p = one.add(&s).unwrap();
        let m = one.sub(&s).unwrap();
        assert_eq!(
            p.mul(&m).unwrap(),
            TowerElement::from_rational(&t, rat_i64(-1))
        );
    }

    #[test]
    fn inv_examples() {
        let q = TowerDescriptor::rationals();
        let two = TowerElement::from_rational(&q, rat_i64(2));
        assert_eq!(
            two.inv().unwrap(),
            TowerElement::from_rational(&q, rat_frac(1, 2))
        );

        let (t, s) = q_sqrt2();
        assert_eq!(s.inv().unwrap(), s.scale(&rat_frac(1, 2)));
        assert!(s.mul(&s.inv().unwrap()).unwrap().is_one());

        let (tz, z4) = q_zeta4();
        let one = TowerElement::one(&tz);
        let x = one.add(&z4).unwrap();
        let expected = one.sub(&z4).unwrap().scale(&rat_frac(1, 2));
        assert_eq!(x.inv().unwrap(), expected);

        assert!(matches!(
            TowerElement::zero(&t).inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn adjoin_square_collapses() {
        let q = TowerDescriptor::rationals();
        let four = TowerElement::from_rational(&q, rat_i64(4));
        let (t, r) = adjoin_sqrt(&q, &four, "sqrt4").unwrap();
        assert_eq!(t.num_levels(), 0);
        assert_eq!(r, TowerElement::from_rational(&q, rat_i64(2)));

        let (t2, s) = q_sqrt2();
        let eight = TowerElement::from_rational(&t2, rat_i64(8));
        let (t3, r8) = adjoin_sqrt(&t2, &eight, "sqrt8").unwrap();
        assert_eq!(t3.id(), t2.id());
        assert_eq!(r8, s.scale(&rat_i64(2)));
    }

    #[test]
    fn adjoin_new_level() {
        let (t, g) = q_zeta4();
        assert_eq!(t.dimension(), 2);
        assert_eq!(g.square(), TowerElement::from_rational(&t, rat_i64(-1)));

        let q = TowerDescriptor::rationals();
        let zero = TowerElement::zero(&q);
        assert!(matches!(
            adjoin_sqrt(&q, &zero, "bad"),
            Err(Error::DegenerateRadicand)
        ));
    }

    #[test]
    fn sqrt_in_tower_examples() {
        let (t, s) = q_sqrt2();
        // 3 + 2*sqrt2 = (1 + sqrt2)^2
        let x = TowerElement::from_rational(&t, rat_i64(3))
            .add(&s.scale(&rat_i64(2)))
            .unwrap();
        let r = x.sqrt_in_tower().unwrap();
        assert_eq!(r, TowerElement::one(&t).add(&s).unwrap());

        let q = TowerDescriptor::rationals();
        assert!(TowerElement::from_rational(&q, rat_i64(2))
            .sqrt_in_tower()
            .is_none());

        // sqrt(x^2) is +-x for any x
        let x = TowerElement::one(&t).sub(&s.scale(&rat_i64(3))).unwrap();
        let r = x.square().sqrt_in_tower().unwrap();
        assert!(r == x || r == x.neg());
        assert_eq!(r.square(), x.square());
    }

    #[test]
    fn canonical_sign_rule() {
        let (_, z4) = q_zeta4();
        // sqrt(-1) in Q(zeta4) must come back as +zeta4
        let m1 = z4.square();
        assert_eq!(m1.sqrt_in_tower().unwrap(), z4);
    }

    #[test]
    fn mismatched_towers_error() {
        let (_, s) = q_sqrt2();
        let (_, z) = q_zeta4();
        assert!(matches!(s.add(&z), Err(Error::TowerMismatch(_, _))));
        assert!(matches!(s.mul(&z), Err(Error::TowerMismatch(_, _))));
    }

    #[test]
    fn embed_and_project() {
        let (t1, s) = q_sqrt2();
        let m1 = TowerElement::from_rational(&t1, rat_i64(-1));
        let (t2, z) = adjoin_sqrt(&t1, &m1, "zeta4").unwrap();
        assert_eq!(t2.dimension(), 4);
        let s2 = s.embed(&t2).unwrap();
        assert_eq!(s2.square(), TowerElement::from_rational(&t2, rat_i64(2)));
        assert_eq!(s2.project(&t1).unwrap(), s);
        assert!(z.project(&t1).is_err());
    }

    #[test]
    fn audit_holds_on_built_towers() {
        let (t1, _) = q_sqrt2();
        let m1 = TowerElement::from_rational(&t1, rat_i64(-1));
        let (t2, _) = adjoin_sqrt(&t1, &m1, "zeta4").unwrap();
        assert!(audit_no_square_radicands(&t2));
    }
}
