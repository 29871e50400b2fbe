//! Division polynomials over the tower.
//!
//! For `y^2 = x^3 + c2 x^2 + c1 x + c0` the polynomial `psi_n` vanishes at
//! the x-coordinates of points killed by multiplication by `n`. Even-index
//! polynomials carry a factor `2y`; this module works with the y-stripped
//! parts throughout, so `psi_2 = 1` here and an affine point `P` satisfies
//! `nP = infinity` iff the stripped `psi_n` vanishes at `x(P)` (for even
//! `n`, alternatively `y(P) = 0`). These provide an order oracle
//! independent of the group law.

use std::sync::Arc;

use crate::curve::{Curve, Point};
use crate::error::{Error, Result};
use crate::rational::{rat_i64, Rational};
use crate::tower::{TowerDescriptor, TowerElement};

/// Dense univariate polynomial with tower-element coefficients, ascending
/// degree order, trailing zeros trimmed.
#[derive(Debug, Clone)]
pub struct Poly {
    tower: Arc<TowerDescriptor>,
    coeffs: Vec<TowerElement>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.tower.id() == other.tower.id() && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn from_coeffs(tower: &Arc<TowerDescriptor>, mut coeffs: Vec<TowerElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            tower: tower.clone(),
            coeffs,
        }
    }

    pub fn zero(tower: &Arc<TowerDescriptor>) -> Self {
        Poly {
            tower: tower.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: TowerElement) -> Self {
        let tower = c.tower().clone();
        Self::from_coeffs(&tower, vec![c])
    }

    pub fn one(tower: &Arc<TowerDescriptor>) -> Self {
        Self::constant(TowerElement::one(tower))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[TowerElement] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b)?,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Ok(Poly::from_coeffs(&self.tower, out))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            tower: self.tower.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.tower));
        }
        let mut out =
            vec![TowerElement::zero(&self.tower); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(Poly::from_coeffs(&self.tower, out))
    }

    pub fn scale(&self, r: &Rational) -> Poly {
        Poly {
            tower: self.tower.clone(),
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn square(&self) -> Result<Poly> {
        self.mul(self)
    }

    pub fn eval(&self, x: &TowerElement) -> Result<TowerElement> {
        let mut acc = TowerElement::zero(&self.tower);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x)?.add(c)?;
        }
        Ok(acc)
    }
}

/// The y-stripped division polynomials `psi_1 .. psi_n` for `1 <= n <= 8`.
fn psi_table(n: usize, curve: &Curve) -> Result<Vec<Poly>> {
    if !(1..=8).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "division polynomial index {n} outside 1..=8"
        )));
    }
    let t = curve.tower();
    let (c2, c1, c0) = curve.coefficients();
    let rat = |k: i64| TowerElement::from_rational(t, rat_i64(k));
    let b2 = c2.scale(&rat_i64(4));
    let b4 = c1.scale(&rat_i64(2));
    let b6 = c0.scale(&rat_i64(4));
    let b8 = c2.mul(c0)?.scale(&rat_i64(4)).sub(&c1.square())?;

    // f = x^3 + c2 x^2 + c1 x + c0; even/odd recurrences mix in 16 f^2
    let f = Poly::from_coeffs(t, vec![c0.clone(), c1.clone(), c2.clone(), rat(1)]);
    let f2_16 = f.square()?.scale(&rat_i64(16));

    let mut psi: Vec<Poly> = Vec::with_capacity(9);
    psi.push(Poly::zero(t)); // psi_0
    psi.push(Poly::one(t)); // psi_1
    psi.push(Poly::one(t)); // psi_2 stripped
    psi.push(Poly::from_coeffs(
        t,
        vec![
            b8.clone(),
            b6.scale(&rat_i64(3)),
            b4.scale(&rat_i64(3)),
            b2.clone(),
            rat(3),
        ],
    ));
    psi.push(Poly::from_coeffs(
        t,
        vec![
            b4.mul(&b8)?.sub(&b6.square())?,
            b2.mul(&b8)?.sub(&b4.mul(&b6)?)?,
            b8.scale(&rat_i64(10)),
            b6.scale(&rat_i64(10)),
            b4.scale(&rat_i64(5)),
            b2.clone(),
            rat(2),
        ],
    ));

    for k in 5..=n {
        let next = if k % 2 == 1 {
            let m = (k - 1) / 2;
            let t1 = psi[m + 2].mul(&psi[m].mul(&psi[m])?.mul(&psi[m])?)?;
            let t2 = psi[m - 1].mul(&psi[m + 1].mul(&psi[m + 1])?.mul(&psi[m + 1])?)?;
            if m % 2 == 0 {
                t1.mul(&f2_16)?.sub(&t2)?
            } else {
                t1.sub(&t2.mul(&f2_16)?)?
            }
        } else {
            let m = k / 2;
            let t1 = psi[m + 2].mul(&psi[m - 1].square()?)?;
            let t2 = psi[m - 2].mul(&psi[m + 1].square()?)?;
            psi[m].mul(&t1.sub(&t2)?)?
        };
        psi.push(next);
    }
    Ok(psi)
}

/// The y-stripped `psi_n` for `1 <= n <= 8`.
pub fn division_poly(n: usize, curve: &Curve) -> Result<Poly> {
    Ok(psi_table(n, curve)?.swap_remove(n))
}

/// Whether `n * P = infinity`, decided purely from the division polynomial
/// (and `y = 0` for the even part), with no use of the group law.
pub fn annihilates(n: usize, curve: &Curve, p: &Point) -> Result<bool> {
    let (x, y) = match p {
        Point::Infinity => return Ok(true),
        Point::Affine(x, y) => (x, y),
    };
    let psi = division_poly(n, curve)?;
    if n.is_multiple_of(2) && y.is_zero() {
        return Ok(true);
    }
    Ok(psi.eval(x)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_tower, CurveInput};

    #[test]
    fn low_index_polys() {
        let gs = build_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
        let curve = Curve::from_generator_set(&gs).unwrap();
        assert_eq!(division_poly(1, &curve).unwrap(), Poly::one(&gs.tower));
        assert_eq!(division_poly(2, &curve).unwrap(), Poly::one(&gs.tower));
        assert!(matches!(
            division_poly(0, &curve),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            division_poly(9, &curve),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn two_torsion_detected_by_even_part() {
        let gs = build_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
        let curve = Curve::from_generator_set(&gs).unwrap();
        let p = curve
            .affine(gs.alpha[1].clone(), TowerElement::zero(&gs.tower))
            .unwrap();
        assert!(annihilates(2, &curve, &p).unwrap());
        assert!(!annihilates(1, &curve, &p).unwrap());
        // 3P = P != infinity for 2-torsion
        assert!(!annihilates(3, &curve, &p).unwrap());
    }

    #[test]
    fn paper_order4_x_kills_psi4() {
        // x = zeta4*A2*A3 + alpha1 is the x-coordinate of an order-4 point
        let gs = build_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
        let curve = Curve::from_generator_set(&gs).unwrap();
        let x = gs
            .zeta4
            .mul(&gs.a[1])
            .unwrap()
            .mul(&gs.a[2])
            .unwrap()
            .add(&gs.alpha[0])
            .unwrap();
        let psi4 = division_poly(4, &curve).unwrap();
        assert!(psi4.eval(&x).unwrap().is_zero());
        // and psi_2-part does not kill it: the point is not 2-torsion
        for e in gs.alpha.iter() {
            assert_ne!(&x, e);
        }
    }

    #[test]
    fn division_polys_agree_with_scalar_mul_on_4_torsion() {
        let gs = build_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
        let curve = Curve::from_generator_set(&gs).unwrap();
        // (10 + 3*A2, 30 + 9*A2) has order 4
        let s = &gs.a[1];
        let x = TowerElement::from_rational(&gs.tower, rat_i64(10))
            .add(&s.scale(&rat_i64(3)))
            .unwrap();
        let y = TowerElement::from_rational(&gs.tower, rat_i64(30))
            .add(&s.scale(&rat_i64(9)))
            .unwrap();
        let p = curve.affine(x, y).unwrap();
        for n in 1..=8 {
            let by_poly = annihilates(n, &curve, &p).unwrap();
            let by_mul = curve.scalar_mul(n as i64, &p).unwrap().is_infinity();
            assert_eq!(by_poly, by_mul, "disagreement at n={n}");
        }
    }
}
