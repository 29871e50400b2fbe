//! Weierstrass point arithmetic over tower elements.
//!
//! Curves here are split cubics `y^2 = (x - e1)(x - e2)(x - e3)` whose roots
//! are elements of one tower. The chord-tangent group law is implemented
//! exactly; no approximation enters anywhere.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::generators::GeneratorSet;
use crate::rational::rat_i64;
use crate::tower::{TowerDescriptor, TowerElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine(TowerElement, TowerElement),
}

impl Point {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn xy(&self) -> Option<(&TowerElement, &TowerElement)> {
        match self {
            Point::Infinity => None,
            Point::Affine(x, y) => Some((x, y)),
        }
    }

    /// Deterministic total order: infinity first, then lexicographic on
    /// coordinates.
    pub fn cmp_points(&self, other: &Point) -> Ordering {
        match (self, other) {
            (Point::Infinity, Point::Infinity) => Ordering::Equal,
            (Point::Infinity, _) => Ordering::Less,
            (_, Point::Infinity) => Ordering::Greater,
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => {
                x1.lex_cmp(x2).then_with(|| y1.lex_cmp(y2))
            }
        }
    }
}

/// `y^2 = x^3 + c2 x^2 + c1 x + c0`, kept in both root and coefficient form.
#[derive(Debug, Clone)]
pub struct Curve {
    tower: Arc<TowerDescriptor>,
    roots: [TowerElement; 3],
    c2: TowerElement,
    c1: TowerElement,
    c0: TowerElement,
}

impl Curve {
    pub fn new(roots: [TowerElement; 3]) -> Result<Self> {
        let tower = roots[0].tower().clone();
        for r in &roots[1..] {
            if r.tower().id() != tower.id() {
                return Err(Error::TowerMismatch(
                    r.tower().id().to_string(),
                    tower.id().to_string(),
                ));
            }
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                if roots[i] == roots[j] {
                    return Err(Error::RepeatedRoots);
                }
            }
        }
        let [e1, e2, e3] = &roots;
        let c2 = e1.add(e2)?.add(e3)?.neg();
        let c1 = e1.mul(e2)?.add(&e1.mul(e3)?)?.add(&e2.mul(e3)?)?;
        let c0 = e1.mul(e2)?.mul(e3)?.neg();
        Ok(Curve {
            tower,
            roots,
            c2,
            c1,
            c0,
        })
    }

    /// The working cubic of a generator set, over its tower.
    pub fn from_generator_set(gs: &GeneratorSet) -> Result<Self> {
        Curve::new(gs.alpha.clone())
    }

    pub fn tower(&self) -> &Arc<TowerDescriptor> {
        &self.tower
    }

    pub fn roots(&self) -> &[TowerElement; 3] {
        &self.roots
    }

    pub fn coefficients(&self) -> (&TowerElement, &TowerElement, &TowerElement) {
        (&self.c2, &self.c1, &self.c0)
    }

    /// Right-hand side `(x - e1)(x - e2)(x - e3)`.
    pub fn rhs(&self, x: &TowerElement) -> Result<TowerElement> {
        let mut acc = TowerElement::one(&self.tower);
        for e in &self.roots {
            acc = acc.mul(&x.sub(e)?)?;
        }
        Ok(acc)
    }

    pub fn contains(&self, x: &TowerElement, y: &TowerElement) -> Result<bool> {
        Ok(y.square() == self.rhs(x)?)
    }

    /// Validated affine point constructor; the only place the curve
    /// equation is enforced.
    pub fn affine(&self, x: TowerElement, y: TowerElement) -> Result<Point> {
        if !self.contains(&x, &y)? {
            return Err(Error::PointNotOnCurve(x.to_string(), y.to_string()));
        }
        Ok(Point::Affine(x, y))
    }

    pub fn infinity(&self) -> Point {
        Point::Infinity
    }

    /// Same curve over an extension tower.
    pub fn embed(&self, bigger: &Arc<TowerDescriptor>) -> Result<Curve> {
        Curve::new([
            self.roots[0].embed(bigger)?,
            self.roots[1].embed(bigger)?,
            self.roots[2].embed(bigger)?,
        ])
    }

    pub fn add(&self, p: &Point, q: &Point) -> Result<Point> {
        let (x1, y1) = match p {
            Point::Infinity => return Ok(q.clone()),
            Point::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            Point::Infinity => return Ok(p.clone()),
            Point::Affine(x, y) => (x, y),
        };
        let lambda = if x1 == x2 {
            if *y1 == y2.neg() {
                return Ok(Point::Infinity);
            }
            // tangent slope (3x^2 + 2 c2 x + c1) / (2y)
            let num = x1
                .square()
                .scale(&rat_i64(3))
                .add(&self.c2.mul(x1)?.scale(&rat_i64(2)))?
                .add(&self.c1)?;
            num.div(&y1.scale(&rat_i64(2)))?
        } else {
            y2.sub(y1)?.div(&x2.sub(x1)?)?
        };
        let x3 = lambda.square().sub(&self.c2)?.sub(x1)?.sub(x2)?;
        let y3 = lambda.mul(&x1.sub(&x3)?)?.sub(y1)?;
        Ok(Point::Affine(x3, y3))
    }

    pub fn neg(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x.clone(), y.neg()),
        }
    }

    pub fn double(&self, p: &Point) -> Result<Point> {
        self.add(p, p)
    }

    pub fn sub(&self, p: &Point, q: &Point) -> Result<Point> {
        self.add(p, &self.neg(q))
    }

    pub fn scalar_mul(&self, n: i64, p: &Point) -> Result<Point> {
        if n < 0 {
            return self.scalar_mul(-n, &self.neg(p));
        }
        let mut acc = Point::Infinity;
        let mut base = p.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            base = self.double(&base)?;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Exact order of a point of order dividing 8, or None otherwise.
    pub fn torsion_order(&self, p: &Point) -> Result<Option<u8>> {
        let mut q = p.clone();
        if q.is_infinity() {
            return Ok(Some(1));
        }
        for ord in [2u8, 4, 8] {
            q = self.double(&q)?;
            if q.is_infinity() {
                return Ok(Some(ord));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_tower, CurveInput};

    fn flagship() -> (GeneratorSet, Curve) {
        let gs = build_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
        let curve = Curve::from_generator_set(&gs).unwrap();
        (gs, curve)
    }

    fn real_order4_point(gs: &GeneratorSet, curve: &Curve) -> Point {
        // (10 + 3*A2, 30 + 9*A2) on y^2 = x(x-1)(x-10), where A2^2 = 10
        let s = &gs.a[1];
        let x = TowerElement::from_rational(&gs.tower, rat_i64(10))
            .add(&s.scale(&rat_i64(3)))
            .unwrap();
        let y = TowerElement::from_rational(&gs.tower, rat_i64(30))
            .add(&s.scale(&rat_i64(9)))
            .unwrap();
        curve.affine(x, y).unwrap()
    }

    #[test]
    fn two_torsion_doubles_to_infinity() {
        let (gs, curve) = flagship();
        for e in gs.alpha.iter() {
            let p = curve
                .affine(e.clone(), TowerElement::zero(&gs.tower))
                .unwrap();
            assert!(curve.double(&p).unwrap().is_infinity());
        }
    }

    #[test]
    fn add_neg_gives_infinity() {
        let (gs, curve) = flagship();
        let p = real_order4_point(&gs, &curve);
        assert!(curve.add(&p, &curve.neg(&p)).unwrap().is_infinity());
        assert_eq!(curve.torsion_order(&p).unwrap(), Some(4));
        let twice = curve.double(&p).unwrap();
        let (tx, ty) = twice.xy().unwrap();
        assert_eq!(tx, &TowerElement::from_rational(&gs.tower, rat_i64(10)));
        assert!(ty.is_zero());
    }

    #[test]
    fn off_curve_point_rejected() {
        let (gs, curve) = flagship();
        let one = TowerElement::one(&gs.tower);
        assert!(matches!(
            curve.affine(one.clone(), one),
            Err(Error::PointNotOnCurve(_, _))
        ));
    }

    #[test]
    fn scalar_mul_matches_repeated_add() {
        let (gs, curve) = flagship();
        let p = real_order4_point(&gs, &curve);
        let mut acc = Point::Infinity;
        for n in 1..=8 {
            acc = curve.add(&acc, &p).unwrap();
            assert_eq!(curve.scalar_mul(n, &p).unwrap(), acc);
        }
        assert_eq!(
            curve.scalar_mul(-3, &p).unwrap(),
            curve.neg(&curve.scalar_mul(3, &p).unwrap())
        );
    }

    #[test]
    fn repeated_roots_rejected() {
        let t = TowerDescriptor::rationals();
        let z = TowerElement::zero(&t);
        let o = TowerElement::one(&t);
        assert!(matches!(
            Curve::new([z.clone(), z, o]),
            Err(Error::RepeatedRoots)
        ));
    }
}
