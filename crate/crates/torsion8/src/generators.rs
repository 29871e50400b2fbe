//! Construction of the division-field generator tower for a curve.
//!
//! Starting from the rationals, the builder adjoins in a fixed order a
//! fourth root of unity, the three square roots `A_i` of differences of the
//! working cubic's roots, an eighth root of unity, and the three elements
//! `B_i` with `B_i^2 = A_i (A_{i+1} + zeta4 A_{i+2})`. Radicands that are
//! already squares collapse into the existing tower instead of adding a
//! level, so special curves produce smaller towers. The companion elements
//! `B_i'` are forced by `B_i B_i' = zeta4 A_i^2` and never adjoined.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::{rat_i64, Rational};
use crate::tower::{adjoin_sqrt, TowerDescriptor, TowerElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Degree3,
    Degree4,
}

/// A curve given by the distinct roots of its defining polynomial:
/// `y^2 = prod (x - alpha_i)` of degree 3, or degree 4 taken as the
/// Jacobian of the genus-1 quartic curve.
#[derive(Debug, Clone)]
pub struct CurveInput {
    pub mode: Mode,
    pub roots: Vec<Rational>,
}

impl CurveInput {
    pub fn new(mode: Mode, roots: Vec<Rational>) -> Result<Self> {
        let expected = match mode {
            Mode::Degree3 => 3,
            Mode::Degree4 => 4,
        };
        if roots.len() != expected {
            return Err(Error::Parse(format!(
                "expected {expected} roots, got {}",
                roots.len()
            )));
        }
        for i in 0..roots.len() {
            for j in (i + 1)..roots.len() {
                if roots[i] == roots[j] {
                    return Err(Error::RepeatedRoots);
                }
            }
        }
        Ok(CurveInput { mode, roots })
    }

    pub fn degree3(roots: [i64; 3]) -> Result<Self> {
        Self::new(Mode::Degree3, roots.iter().map(|&r| rat_i64(r)).collect())
    }

    pub fn degree4(roots: [i64; 4]) -> Result<Self> {
        Self::new(Mode::Degree4, roots.iter().map(|&r| rat_i64(r)).collect())
    }
}

/// `gamma_i = (alpha_{i+1} + alpha_{i+2})(alpha_i + alpha_4)` for the three
/// cyclic indices; these generate the 2-division field of the Jacobian in
/// the degree-4 case. Also checks the difference identity
/// `gamma_{i+1} - gamma_{i+2} = (alpha_i - alpha_4)(alpha_{i+1} - alpha_{i+2})`.
pub fn compute_gamma(roots: &[Rational; 4]) -> Result<[Rational; 3]> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if roots[i] == roots[j] {
                return Err(Error::RepeatedRoots);
            }
        }
    }
    let a = |i: usize| &roots[i % 3]; // cycles over the first three roots
    let a4 = &roots[3];
    let gamma: Vec<Rational> = (0..3)
        .map(|i| (a(i + 1) + a(i + 2)) * (a(i) + a4))
        .collect();
    for i in 0..3 {
        let lhs = &gamma[(i + 1) % 3] - &gamma[(i + 2) % 3];
        let rhs = (a(i) - a4) * (a(i + 1) - a(i + 2));
        if lhs != rhs {
            return Err(Error::InvariantViolation(format!(
                "gamma difference identity failed at i={}",
                i + 1
            )));
        }
    }
    Ok([gamma[0].clone(), gamma[1].clone(), gamma[2].clone()])
}

/// The roots of the working cubic model: the input roots in the degree-3
/// case, the `gamma_i` in the degree-4 case.
pub fn working_cubic(input: &CurveInput) -> Result<[Rational; 3]> {
    match input.mode {
        Mode::Degree3 => Ok([
            input.roots[0].clone(),
            input.roots[1].clone(),
            input.roots[2].clone(),
        ]),
        Mode::Degree4 => {
            let roots: [Rational; 4] = [
                input.roots[0].clone(),
                input.roots[1].clone(),
                input.roots[2].clone(),
                input.roots[3].clone(),
            ];
            let gamma = compute_gamma(&roots)?;
            if gamma[0] == gamma[1] || gamma[1] == gamma[2] || gamma[0] == gamma[2] {
                return Err(Error::DegenerateModel);
            }
            Ok(gamma)
        }
    }
}

/// The full generator set of a curve: the tower plus the distinguished
/// elements living inside it.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub tower: Arc<TowerDescriptor>,
    /// Working cubic roots, embedded into the final tower.
    pub alpha: [TowerElement; 3],
    /// The degree-4 resolvent values, when the input was a quartic.
    pub gamma: Option<[Rational; 3]>,
    pub a: [TowerElement; 3],
    pub b: [TowerElement; 3],
    /// Companions with `b[i] * bp[i] = zeta4 * a[i]^2`.
    pub bp: [TowerElement; 3],
    pub zeta4: TowerElement,
    pub zeta8: TowerElement,
}

fn embed_all(elems: &mut [&mut TowerElement], t: &Arc<TowerDescriptor>) -> Result<()> {
    for e in elems.iter_mut() {
        **e = e.embed(t)?;
    }
    Ok(())
}

/// Builds the tower for a curve, adjoining in order `zeta4`, `A1..A3`,
/// `zeta8`, `B1..B3`. Dependent radicands add no level.
pub fn build_tower(input: &CurveInput) -> Result<GeneratorSet> {
    let w = working_cubic(input)?;
    let gamma = match input.mode {
        Mode::Degree4 => Some(w.clone()),
        Mode::Degree3 => None,
    };

    let mut t = TowerDescriptor::rationals();
    let minus_one = TowerElement::from_rational(&t, rat_i64(-1));
    let (t2, mut zeta4) = adjoin_sqrt(&t, &minus_one, "zeta4")?;
    t = t2;

    let mut a: Vec<TowerElement> = Vec::with_capacity(3);
    for i in 0..3 {
        let rad = TowerElement::from_rational(&t, &w[(i + 1) % 3] - &w[(i + 2) % 3]);
        let (t2, gen) = adjoin_sqrt(&t, &rad, &format!("A{}", i + 1))?;
        if t2.id() != t.id() {
            t = t2;
            let mut refs: Vec<&mut TowerElement> = vec![&mut zeta4];
            refs.extend(a.iter_mut());
            embed_all(&mut refs, &t)?;
        }
        a.push(gen);
    }

    let (t2, mut zeta8) = adjoin_sqrt(&t, &zeta4, "zeta8")?;
    if t2.id() != t.id() {
        t = t2;
        let mut refs: Vec<&mut TowerElement> = vec![&mut zeta4];
        refs.extend(a.iter_mut());
        embed_all(&mut refs, &t)?;
    }

    let mut b: Vec<TowerElement> = Vec::with_capacity(3);
    for i in 0..3 {
        let rad = a[i].mul(&a[(i + 1) % 3].add(&zeta4.mul(&a[(i + 2) % 3])?)?)?;
        let (t2, gen) = adjoin_sqrt(&t, &rad, &format!("B{}", i + 1))?;
        if t2.id() != t.id() {
            t = t2;
            let mut refs: Vec<&mut TowerElement> = vec![&mut zeta4, &mut zeta8];
            refs.extend(a.iter_mut());
            refs.extend(b.iter_mut());
            embed_all(&mut refs, &t)?;
        }
        b.push(gen);
    }

    // B_i' = zeta4 * A_i^2 / B_i, an element of the tower, never adjoined
    let mut bp: Vec<TowerElement> = Vec::with_capacity(3);
    for i in 0..3 {
        bp.push(zeta4.mul(&a[i].square())?.div(&b[i])?);
    }

    let alpha: Vec<TowerElement> = w
        .iter()
        .map(|r| TowerElement::from_rational(&t, r.clone()))
        .collect();

    Ok(GeneratorSet {
        tower: t,
        alpha: alpha.try_into().expect("three roots"),
        gamma,
        a: a.try_into().expect("three generators"),
        b: b.try_into().expect("three generators"),
        bp: bp.try_into().expect("three companions"),
        zeta4,
        zeta8,
    })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct IdentityCheck {
    pub name: String,
    /// 1-based cyclic index, absent for the single global identity.
    pub index: Option<usize>,
    pub passed: bool,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    /// Skipped entries carry a notice and do not count as failures.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.skipped.is_some())
    }
}

/// Verifies, exactly, every algebraic identity the generator set must
/// satisfy: the vanishing sum of the `A_i^2`, the conjugate-radicand
/// product `-A_i^4`, the four expansion identities for `(B_i ± B_i')^2`
/// and `(B_i ± zeta4 B_i')^2`, and the square identity expressing
/// `A_i A_{i+2}` as an explicit quotient.
pub fn verify_identities(g: &GeneratorSet) -> Result<IdentityReport> {
    let mut checks = Vec::new();
    let z4 = &g.zeta4;
    let two = rat_i64(2);

    let sum_sq = g.a[0]
        .square()
        .add(&g.a[1].square())?
        .add(&g.a[2].square())?;
    checks.push(IdentityCheck {
        name: "a_squares_sum_zero".into(),
        index: None,
        passed: sum_sq.is_zero(),
        skipped: None,
    });

    for i in 0..3 {
        let ai = &g.a[i];
        let aj = &g.a[(i + 1) % 3];
        let ak = &g.a[(i + 2) % 3];
        let bi = &g.b[i];
        let bpi = &g.bp[i];

        // (A_i (A_{i+1} + z4 A_{i+2})) (A_i (A_{i+1} - z4 A_{i+2})) = -A_i^4
        let plus = ai.mul(&aj.add(&z4.mul(ak)?)?)?;
        let minus = ai.mul(&aj.sub(&z4.mul(ak)?)?)?;
        let lhs = plus.mul(&minus)?;
        let rhs = ai.pow(4).neg();
        checks.push(IdentityCheck {
            name: "conjugate_radicand_product".into(),
            index: Some(i + 1),
            passed: lhs == rhs,
            skipped: None,
        });

        // (B_i ± B_i')^2 = 2 A_i A_{i+1} ± 2 z4 A_i^2
        let base = ai.mul(aj)?.scale(&two);
        let twist = z4.mul(&ai.square())?.scale(&two);
        for (tag, sign) in [("plus", 1i64), ("minus", -1i64)] {
            let lhs = if sign > 0 {
                bi.add(bpi)?.square()
            } else {
                bi.sub(bpi)?.square()
            };
            let rhs = if sign > 0 {
                base.add(&twist)?
            } else {
                base.sub(&twist)?
            };
            checks.push(IdentityCheck {
                name: format!("square_b_{tag}_bp"),
                index: Some(i + 1),
                passed: lhs == rhs,
                skipped: None,
            });
        }

        // (B_i ± z4 B_i')^2 = 2 z4 A_i A_{i+2} ∓ 2 A_i^2
        let base = z4.mul(&ai.mul(ak)?)?.scale(&two);
        let twist = ai.square().scale(&two);
        for (tag, sign) in [("plus", 1i64), ("minus", -1i64)] {
            let z4bp = z4.mul(bpi)?;
            let lhs = if sign > 0 {
                bi.add(&z4bp)?.square()
            } else {
                bi.sub(&z4bp)?.square()
            };
            let rhs = if sign > 0 {
                base.sub(&twist)?
            } else {
                base.add(&twist)?
            };
            checks.push(IdentityCheck {
                name: format!("square_b_{tag}_zeta4_bp"),
                index: Some(i + 1),
                passed: lhs == rhs,
                skipped: None,
            });
        }

        // [(1 - z4)^{-1} (B_i - B_i') B_{i+2} / (A_i + z4 A_{i+1})]^2 = A_i A_{i+2}
        let denom = ai.add(&z4.mul(aj)?)?;
        if denom.is_zero() {
            checks.push(IdentityCheck {
                name: "product_root_quotient".into(),
                index: Some(i + 1),
                passed: false,
                skipped: Some("A_i + zeta4*A_{i+1} vanishes; quotient undefined".into()),
            });
        } else {
            let one_minus_z4 = TowerElement::one(&g.tower).sub(z4)?;
            let expr = one_minus_z4
                .inv()?
                .mul(&bi.sub(bpi)?)?
                .mul(&g.b[(i + 2) % 3])?
                .div(&denom)?;
            let passed = expr.square() == ai.mul(ak)?;
            checks.push(IdentityCheck {
                name: "product_root_quotient".into(),
                index: Some(i + 1),
                passed,
                skipped: None,
            });
        }
    }

    Ok(IdentityReport { checks })
}
