//! Point halving and full 2-power torsion enumeration.
//!
//! Halving follows the radical construction: given `P0 = (x0, y0)`, choose
//! `r_i` with `r_i^2 = x0 - e_i` and `r_1 r_2 r_3 = -y0`; then
//! `P = (x0 + (r1 r2 + r2 r3 + r3 r1), -y0 + (r1 + r2 + r3)(r1 r2 + r2 r3 + r3 r1))`
//! satisfies `2P = P0`, and the four admissible sign assignments produce the
//! four halves. Square roots missing from the working tower are adjoined to
//! a scratch extension that is discarded afterwards; the final coordinates
//! must land back in the original tower, and failure of that projection is
//! the designated counterexample signal.

use std::collections::HashSet;

use crate::curve::{Curve, Point};
use crate::divpoly::annihilates;
use crate::error::{Error, Result};
use crate::generators::GeneratorSet;
use crate::tower::{adjoin_sqrt, TowerElement};

/// Result of halving one affine point.
#[derive(Debug, Clone)]
pub struct Halves {
    /// The four points `P` with `2P = P0`, sorted, in the original tower.
    pub points: Vec<Point>,
    /// Whether any square root required a temporary tower extension.
    pub scratch_used: bool,
}

/// All `P` with `2P = P0`. Scratch extension depth is bounded by the three
/// adjunctions this can ever need.
pub fn halve(curve: &Curve, p0: &Point) -> Result<Halves> {
    let (x0, y0) = p0
        .xy()
        .ok_or_else(|| Error::HalvingFailure("halving expects an affine input point".into()))?;

    let home = curve.tower().clone();
    let mut t = home.clone();
    let mut x0 = x0.clone();
    let mut y0 = y0.clone();
    let mut roots: Vec<TowerElement> = curve.roots().to_vec();
    let mut rs: Vec<TowerElement> = Vec::with_capacity(3);
    let mut scratch_used = false;

    for i in 0..3 {
        let d = x0.sub(&roots[i])?;
        let r = match d.sqrt_in_tower() {
            Some(r) => r,
            None => {
                let (t2, gen) = adjoin_sqrt(&t, &d, &format!("halving_scratch{i}"))?;
                scratch_used = true;
                t = t2;
                x0 = x0.embed(&t)?;
                y0 = y0.embed(&t)?;
                for e in roots.iter_mut() {
                    *e = e.embed(&t)?;
                }
                for r in rs.iter_mut() {
                    *r = r.embed(&t)?;
                }
                gen
            }
        };
        rs.push(r);
    }

    let work_curve = curve.embed(&t)?;
    // sign assignments are constrained by the product of the r_i matching
    // y0: with that orientation -y0 + s1*s2 expands to the on-curve value
    // (r1+r2)(r2+r3)(r3+r1)
    let mut seen: HashSet<Point> = HashSet::new();
    let mut halves: Vec<Point> = Vec::new();
    for signs in 0..8u8 {
        let r: Vec<TowerElement> = (0..3)
            .map(|i| {
                if signs & (1 << i) != 0 {
                    rs[i].neg()
                } else {
                    rs[i].clone()
                }
            })
            .collect();
        if r[0].mul(&r[1])?.mul(&r[2])? != y0 {
            continue;
        }
        let s1 = r[0].add(&r[1])?.add(&r[2])?;
        let s2 = r[0]
            .mul(&r[1])?
            .add(&r[1].mul(&r[2])?)?
            .add(&r[2].mul(&r[0])?)?;
        let px = x0.add(&s2)?;
        let py = s1.mul(&s2)?.sub(&y0)?;
        let p = work_curve.affine(px, py)?;
        if work_curve.double(&p)? != work_curve.affine(x0.clone(), y0.clone())? {
            return Err(Error::InvariantViolation(
                "halving candidate does not double back to its input".into(),
            ));
        }
        if seen.insert(p.clone()) {
            halves.push(p);
        }
    }
    if halves.len() != 4 {
        return Err(Error::InvariantViolation(format!(
            "expected 4 halves, found {}",
            halves.len()
        )));
    }

    // project back; support on scratch levels means the halves live outside
    // the division-field tower
    let mut out: Vec<Point> = Vec::with_capacity(4);
    for p in halves {
        let (x, y) = p.xy().expect("halves are affine");
        let (x, y) = match (x.project(&home), y.project(&home)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => {
                return Err(Error::HalvingFailure(
                    "halved coordinates do not lie in the original tower".into(),
                ))
            }
        };
        out.push(Point::Affine(x, y));
    }
    out.sort_by(|a, b| a.cmp_points(b));
    Ok(Halves {
        points: out,
        scratch_used,
    })
}

/// The full 2-power torsion of the curve, each level enumerated by halving
/// the previous one.
#[derive(Debug, Clone)]
pub struct TorsionSet {
    pub e2: Vec<Point>,
    pub e4: Vec<Point>,
    pub e8: Vec<Point>,
    /// Whether any halving needed a temporary extension.
    pub scratch_used: bool,
}

impl TorsionSet {
    /// Counts of points of order 1, 2, 4, 8 within `E[8]`.
    pub fn census(&self, curve: &Curve) -> Result<(usize, usize, usize, usize)> {
        let mut census = (0usize, 0usize, 0usize, 0usize);
        for p in &self.e8 {
            match curve.torsion_order(p)? {
                Some(1) => census.0 += 1,
                Some(2) => census.1 += 1,
                Some(4) => census.2 += 1,
                Some(8) => census.3 += 1,
                other => {
                    return Err(Error::InvariantViolation(format!(
                        "unexpected torsion order {other:?}"
                    )))
                }
            }
        }
        Ok(census)
    }
}

fn sorted_dedup(mut points: Vec<Point>) -> Vec<Point> {
    points.sort_by(|a, b| a.cmp_points(b));
    points.dedup();
    points
}

/// Enumerates `E[2]`, `E[4]`, `E[8]` inside the generator-set tower, checking
/// cardinalities, the doubling fibration, closure on sampled pairs, and the
/// division-polynomial order oracle.
pub fn enumerate_torsion(curve: &Curve, gs: &GeneratorSet) -> Result<TorsionSet> {
    if curve.tower().id() != gs.tower.id() {
        return Err(Error::TowerMismatch(
            curve.tower().id().to_string(),
            gs.tower.id().to_string(),
        ));
    }
    let mut scratch_used = false;
    let zero = TowerElement::zero(&gs.tower);
    let mut e2: Vec<Point> = vec![Point::Infinity];
    for e in curve.roots() {
        e2.push(curve.affine(e.clone(), zero.clone())?);
    }
    let e2 = sorted_dedup(e2);
    if e2.len() != 4 {
        return Err(Error::InvariantViolation(format!(
            "|E[2]| = {}, expected 4",
            e2.len()
        )));
    }

    // E[4] = E[2] together with the halves of the affine 2-torsion
    let mut e4 = e2.clone();
    for p in &e2 {
        if p.is_infinity() {
            continue;
        }
        let h = halve(curve, p)?;
        scratch_used |= h.scratch_used;
        e4.extend(h.points);
    }
    let e4 = sorted_dedup(e4);
    if e4.len() != 16 {
        return Err(Error::InvariantViolation(format!(
            "|E[4]| = {}, expected 16",
            e4.len()
        )));
    }

    // E[8] = E[2] together with the halves of the affine 4-torsion
    let mut e8 = e2.clone();
    for p in &e4 {
        if p.is_infinity() {
            continue;
        }
        let h = halve(curve, p)?;
        scratch_used |= h.scratch_used;
        e8.extend(h.points);
    }
    let e8 = sorted_dedup(e8);
    if e8.len() != 64 {
        return Err(Error::InvariantViolation(format!(
            "|E[8]| = {}, expected 64",
            e8.len()
        )));
    }

    // doubling maps E[8] onto E[4] four-to-one
    let mut fiber_counts = std::collections::HashMap::new();
    for p in &e8 {
        let d = curve.double(p)?;
        if !e4.contains(&d) {
            return Err(Error::InvariantViolation(
                "double of an E[8] point escapes E[4]".into(),
            ));
        }
        *fiber_counts.entry(d).or_insert(0usize) += 1;
    }
    if fiber_counts.len() != 16 || fiber_counts.values().any(|&c| c != 4) {
        return Err(Error::InvariantViolation(
            "doubling E[8] -> E[4] is not exactly 4-to-1".into(),
        ));
    }

    // closure under addition on a deterministic sample of pairs
    for step in [1usize, 7, 13, 29] {
        for i in 0..e8.len() {
            let j = (i * step + step) % e8.len();
            let s = curve.add(&e8[i], &e8[j])?;
            if !e8.contains(&s) {
                return Err(Error::InvariantViolation(
                    "E[8] is not closed under addition".into(),
                ));
            }
        }
    }

    // division-polynomial cross-check of every order
    let ts = TorsionSet {
        e2,
        e4,
        e8,
        scratch_used,
    };
    for p in &ts.e8 {
        let order = curve
            .torsion_order(p)?
            .ok_or_else(|| Error::InvariantViolation("order does not divide 8".into()))?;
        for n in 1..=8usize {
            let expected = n % order as usize == 0;
            if annihilates(n, curve, p)? != expected {
                return Err(Error::InvariantViolation(format!(
                    "division polynomial disagrees with order {order} at n = {n}"
                )));
            }
        }
    }
    Ok(ts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_tower, CurveInput};
    use crate::rational::rat_i64;

    #[test]
    fn halves_of_origin_match_radical_formula() {
        let gs = build_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
        let curve = Curve::from_generator_set(&gs).unwrap();
        let p0 = curve
            .affine(TowerElement::zero(&gs.tower), TowerElement::zero(&gs.tower))
            .unwrap();
        let halves = halve(&curve, &p0).unwrap();
        assert_eq!(halves.points.len(), 4);
        assert!(!halves.scratch_used);
        // x-values are exactly { zeta4 A2 A3, -zeta4 A2 A3 }, each twice,
        // so the set is closed under flipping the signs of the A_i
        let w = gs.zeta4.mul(&gs.a[1]).unwrap().mul(&gs.a[2]).unwrap();
        let mut xs: Vec<TowerElement> = halves
            .points
            .iter()
            .map(|p| p.xy().unwrap().0.clone())
            .collect();
        xs.sort_by(|a, b| a.lex_cmp(b));
        xs.dedup();
        let mut expected = vec![w.clone(), w.neg()];
        expected.sort_by(|a, b| a.lex_cmp(b));
        assert_eq!(xs, expected);
        for p in &halves.points {
            assert_eq!(curve.double(p).unwrap(), p0);
        }
    }

    #[test]
    fn halves_differ_by_two_torsion() {
        let gs = build_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
        let curve = Curve::from_generator_set(&gs).unwrap();
        let p0 = curve
            .affine(
                TowerElement::from_rational(&gs.tower, rat_i64(1)),
                TowerElement::zero(&gs.tower),
            )
            .unwrap();
        let halves = halve(&curve, &p0).unwrap();
        let base = &halves.points[0];
        let mut shifted: Vec<Point> = Vec::new();
        for e in curve.roots() {
            let t = curve
                .affine(e.clone(), TowerElement::zero(&gs.tower))
                .unwrap();
            shifted.push(curve.add(base, &t).unwrap());
        }
        shifted.push(base.clone());
        shifted.sort_by(|a, b| a.cmp_points(b));
        assert_eq!(shifted, halves.points);
    }

    #[test]
    fn halving_infinity_is_rejected() {
        let gs = build_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
        let curve = Curve::from_generator_set(&gs).unwrap();
        assert!(matches!(
            halve(&curve, &Point::Infinity),
            Err(Error::HalvingFailure(_))
        ));
    }

    #[test]
    fn halving_an_8_torsion_point_fails_membership() {
        // halves of 8-torsion live in the 16-division field, outside the
        // tower; the scratch projection must report that
        let gs = build_tower(&CurveInput::degree3([0, 1, 2]).unwrap()).unwrap();
        let curve = Curve::from_generator_set(&gs).unwrap();
        let ts = enumerate_torsion(&curve, &gs).unwrap();
        let q = ts
            .e8
            .iter()
            .find(|p| curve.torsion_order(p).unwrap() == Some(8))
            .unwrap();
        match halve(&curve, q) {
            Err(Error::HalvingFailure(_)) => {}
            other => panic!("expected halving failure, got {other:?}"),
        }
    }
}
