//! End-to-end integration tests: the batch pipeline, the Galois-to-matrix
//! certificate map, model consistency for quartic inputs, and the
//! byte-stability of serialized reports.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torsion8::automorphism::{
    galois_status, generate_group, permutation_on_torsion, torsion_basis, GaloisStatus,
    TowerAutomorphism,
};
use torsion8::congruence::{congruence_image, match_isomorphism, Mat2};
use torsion8::curve::Curve;
use torsion8::generators::{build_tower, compute_gamma, CurveInput, GeneratorSet, Mode};
use torsion8::pipeline::{self, group_table_of, Check, JobSpec};
use torsion8::rational::{rat_frac, rat_i64, Rational};
use torsion8::torsion::{enumerate_torsion, halve, TorsionSet};

struct Fixture {
    gs: GeneratorSet,
    curve: Curve,
    ts: TorsionSet,
}

fn fixture(input: CurveInput) -> Fixture {
    let gs = build_tower(&input).unwrap();
    let curve = Curve::from_generator_set(&gs).unwrap();
    let ts = enumerate_torsion(&curve, &gs).unwrap();
    Fixture { gs, curve, ts }
}

fn small_flagship() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture(CurveInput::degree3([0, 1, 2]).unwrap()))
}

fn golden() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture(CurveInput::degree3([0, 3, 10]).unwrap()))
}

#[test]
fn verify_pipeline_on_flagship_is_idempotent() {
    let job = JobSpec {
        mode: "degree3".into(),
        roots: vec!["0".into(), "1".into(), "10".into()],
        checks: Check::ALL.to_vec(),
        output_path: None,
    };
    let first = pipeline::run(&job).unwrap();
    assert!(first.overall_pass, "{}", first.text_summary());
    let second = pipeline::run(&job).unwrap();
    assert_eq!(
        first.to_json(),
        second.to_json(),
        "reports must be byte-identical"
    );
    // the flagship collapses generators, so it is flagged
    assert!(!first.degeneracy_flags.is_empty());
}

#[test]
fn tower_dump_golden_values() {
    let dump = pipeline::dump_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
    assert_eq!(dump.tower.dimension, 64);
    let labels: Vec<&str> = dump.tower.levels.iter().map(|l| l.label.as_str()).collect();
    assert_eq!(labels, ["zeta4", "A2", "zeta8", "B1", "B2", "B3"]);
    assert!(dump.gamma.is_none());
    assert!(dump.identities.all_passed());

    let dump4 = pipeline::dump_tower(&CurveInput::degree4([0, 1, 2, 5]).unwrap()).unwrap();
    assert_eq!(dump4.tower.dimension, 128);
    assert_eq!(
        dump4.gamma,
        Some(vec!["15".to_string(), "12".to_string(), "7".to_string()])
    );

    // serialization is byte-stable run to run
    let again = pipeline::dump_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
    assert_eq!(
        serde_json::to_string(&dump).unwrap(),
        serde_json::to_string(&again).unwrap()
    );
}

#[test]
fn torsion_dump_lists_census() {
    let dump = pipeline::dump_torsion(&CurveInput::degree3([0, 1, 2]).unwrap()).unwrap();
    assert_eq!(dump.points.len(), 64);
    assert_eq!(dump.census, (1, 3, 12, 48));
    assert!(!dump.scratch_used);
    for p in &dump.points {
        assert!(matches!(p.order, 1 | 2 | 4 | 8));
        assert_eq!(p.x.is_none(), p.order == 1);
    }
}

#[test]
fn permuting_roots_preserves_tower_dimension() {
    for roots in [[0i64, 1, 10], [0, 3, 10]] {
        let dims: Vec<usize> = [
            [roots[0], roots[1], roots[2]],
            [roots[0], roots[2], roots[1]],
            [roots[1], roots[0], roots[2]],
            [roots[1], roots[2], roots[0]],
            [roots[2], roots[0], roots[1]],
            [roots[2], roots[1], roots[0]],
        ]
        .iter()
        .map(|r| {
            build_tower(&CurveInput::degree3(*r).unwrap())
                .unwrap()
                .tower
                .dimension()
        })
        .collect();
        assert!(dims.windows(2).all(|w| w[0] == w[1]), "{roots:?}: {dims:?}");
    }
}

#[test]
fn quartic_square_roots_match_both_formulas() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51f0_ab1e);
    let random_rational = |rng: &mut ChaCha8Rng| -> Rational {
        rat_frac(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=50))
    };
    for _ in 0..50 {
        let mut roots: Vec<Rational> = Vec::new();
        while roots.len() < 4 {
            let r = random_rational(&mut rng);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let quartet: [Rational; 4] = roots.clone().try_into().unwrap();
        let gamma = compute_gamma(&quartet).unwrap();
        let input = CurveInput::new(Mode::Degree4, roots.clone()).unwrap();
        let gs = build_tower(&input).unwrap();
        for i in 0..3 {
            // A_i^2 from the gamma differences coincides with the product
            // of root differences
            let from_gamma = &gamma[(i + 1) % 3] - &gamma[(i + 2) % 3];
            let from_roots = (&roots[i] - &roots[3]) * (&roots[(i + 1) % 3] - &roots[(i + 2) % 3]);
            assert_eq!(from_gamma, from_roots);
            assert_eq!(gs.a[i].square().as_rational().cloned(), Some(from_roots));
        }
    }
}

#[test]
fn group_law_associative_on_torsion_triples() {
    let fx = small_flagship();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1234_5678);
    for _ in 0..100 {
        let p = &fx.ts.e8[rng.gen_range(0..64)];
        let q = &fx.ts.e8[rng.gen_range(0..64)];
        let r = &fx.ts.e8[rng.gen_range(0..64)];
        let left = fx.curve.add(&fx.curve.add(p, q).unwrap(), r).unwrap();
        let right = fx.curve.add(p, &fx.curve.add(q, r).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn every_four_torsion_point_reappears_among_halves_of_its_double() {
    let fx = small_flagship();
    for p in &fx.ts.e4 {
        if fx.curve.torsion_order(p).unwrap() != Some(4) {
            continue;
        }
        let double = fx.curve.double(p).unwrap();
        let halves = halve(&fx.curve, &double).unwrap();
        assert!(halves.points.contains(p));
    }
}

#[test]
fn eight_torsion_killed_by_eight() {
    let fx = small_flagship();
    for q in &fx.ts.e8 {
        assert!(fx.curve.scalar_mul(8, q).unwrap().is_infinity());
    }
}

#[test]
fn mu_fixes_two_torsion_and_matches_negation_matrix() {
    let fx = golden();
    let (sigma, tau, mu) = match galois_status(&fx.gs) {
        GaloisStatus::NonDegenerate { sigma, tau, mu } => (sigma, tau, mu),
        GaloisStatus::Degenerate { reason, .. } => panic!("unexpected degeneracy: {reason}"),
    };
    let action = mu.action().unwrap();
    for e in fx.curve.roots() {
        let p = fx
            .curve
            .affine(e.clone(), torsion8::tower::TowerElement::zero(&fx.gs.tower))
            .unwrap();
        assert_eq!(action.act_on_point(&fx.curve, &p).unwrap(), p);
    }
    let basis = torsion_basis(&fx.curve, &fx.ts.e8).unwrap();
    let (_, cert) = permutation_on_torsion(&mu, &fx.curve, &basis).unwrap();
    assert_eq!(
        cert.entries(),
        [[7, 0], [0, 7]],
        "mu is the scalar -1 mod 8"
    );
    let id = TowerAutomorphism::identity(&fx.gs.tower);
    let (perm, id_cert) = permutation_on_torsion(&id, &fx.curve, &basis).unwrap();
    assert_eq!(id_cert.entries(), [[1, 0], [0, 1]]);
    assert!(perm.iter().enumerate().all(|(i, &j)| i == j));
    let _ = (sigma, tau);
}

/// The certificate map on the full automorphism group: every element of
/// the order-64 Galois group lands in the level-2 congruence image with
/// determinant 1, the map is an injective homomorphism, and its image is
/// exactly the level-2 image.
#[test]
fn certificate_map_is_isomorphism_onto_level2_image() {
    let fx = golden();
    let (sigma, tau, mu) = match galois_status(&fx.gs) {
        GaloisStatus::NonDegenerate { sigma, tau, mu } => (sigma, tau, mu),
        GaloisStatus::Degenerate { reason, .. } => panic!("unexpected degeneracy: {reason}"),
    };
    let group = generate_group(&[sigma, tau, mu]).unwrap();
    assert_eq!(group.order(), 64);
    let basis = torsion_basis(&fx.curve, &fx.ts.e8).unwrap();

    let mats: Vec<Mat2> = group
        .elements
        .iter()
        .map(|phi| {
            let (_, cert) = permutation_on_torsion(phi, &fx.curve, &basis).unwrap();
            assert!(cert.additive);
            assert_eq!(cert.det_mod8, 1);
            // congruent to the identity mod 2
            assert!(cert.a % 2 == 1 && cert.d % 2 == 1 && cert.b % 2 == 0 && cert.c % 2 == 0);
            Mat2::new(
                8,
                cert.a as i64,
                cert.b as i64,
                cert.c as i64,
                cert.d as i64,
            )
            .unwrap()
        })
        .collect();

    // injective homomorphism
    let mut distinct = mats.clone();
    distinct.sort_by_key(|m| (m.a, m.b, m.c, m.d));
    distinct.dedup();
    assert_eq!(distinct.len(), 64, "certificate map is not injective");
    for i in 0..group.order() {
        for j in 0..group.order() {
            let k = group.mul(i, j);
            assert_eq!(mats[i].mul(&mats[j]), mats[k], "map fails at ({i}, {j})");
        }
    }

    // the image is exactly the level-2 congruence image mod 8
    let gamma2 = congruence_image(3, 1).unwrap();
    assert!(mats.iter().all(|m| gamma2.contains(m)));
    assert_eq!(gamma2.order(), 64);
}

#[test]
fn transposed_generator_map_is_also_an_isomorphism() {
    // swapping the two standard generators respects the symmetric
    // presentation, so the swapped map extends to an isomorphism as well
    let fx = golden();
    let (sigma, tau, mu) = match galois_status(&fx.gs) {
        GaloisStatus::NonDegenerate { sigma, tau, mu } => (sigma, tau, mu),
        GaloisStatus::Degenerate { reason, .. } => panic!("unexpected degeneracy: {reason}"),
    };
    let group = generate_group(&[sigma.clone(), tau.clone(), mu.clone()]).unwrap();
    let gamma2 = congruence_image(3, 1).unwrap();
    let swapped = [
        (
            group.index_of(&sigma).unwrap(),
            gamma2.index_of(&Mat2::tau_tilde(8)).unwrap(),
        ),
        (
            group.index_of(&tau).unwrap(),
            gamma2.index_of(&Mat2::sigma_tilde(8)).unwrap(),
        ),
        (
            group.index_of(&mu).unwrap(),
            gamma2.index_of(&Mat2::neg_identity(8)).unwrap(),
        ),
    ];
    let outcome =
        match_isomorphism(&group_table_of(&group), &gamma2.group_table(), &swapped).unwrap();
    assert!(outcome.is_isomorphism, "{outcome:?}");
}

#[test]
fn mu_is_central_of_order_two_and_outside_sigma_tau() {
    let fx = golden();
    let (sigma, tau, mu) = match galois_status(&fx.gs) {
        GaloisStatus::NonDegenerate { sigma, tau, mu } => (sigma, tau, mu),
        GaloisStatus::Degenerate { reason, .. } => panic!("unexpected degeneracy: {reason}"),
    };
    let st = generate_group(&[sigma.clone(), tau.clone()]).unwrap();
    assert_eq!(st.order(), 32);
    assert!(st.index_of(&mu).is_none(), "mu lies in <sigma, tau>");
    let full = generate_group(&[sigma, tau, mu.clone()]).unwrap();
    let mi = full.index_of(&mu).unwrap();
    assert!(full.is_central(mi));
    assert_eq!(full.order_of_element(mi), 2);
}

#[test]
fn galois_check_passes_on_golden_curve() {
    let job = JobSpec {
        mode: "degree3".into(),
        roots: vec!["0".into(), "3".into(), "10".into()],
        checks: vec![Check::GaloisGroup],
        output_path: None,
    };
    let report = pipeline::run(&job).unwrap();
    assert!(report.overall_pass, "{}", report.text_summary());
    let g = report.galois.as_ref().unwrap();
    assert!(!g.degenerate);
    assert_eq!(g.sigma_tau_order, Some(32));
    assert_eq!(g.full_group_order, Some(64));
    assert_eq!(g.isomorphism_to_reference, Some(true));
    assert_eq!(g.certificates_in_level2, Some(true));
    // the sigma and tau certificates generate an order-32 matrix group
    assert_eq!(g.certificate_map_injective, Some(true));
    let certs = g.matrix_certificates.as_ref().unwrap();
    assert_eq!(certs.len(), 3);
    let mu_cert = certs.iter().find(|c| c.name == "mu").unwrap();
    assert_eq!(mu_cert.certificate.entries(), [[7, 0], [0, 7]]);
}

#[test]
fn apply_is_a_ring_homomorphism_on_200_pairs() {
    // a small tower keeps 200 dense products cheap; use a nontrivial
    // automorphism of the dimension-16 flagship tower
    let fx = small_flagship();
    let autos = torsion8::automorphism::all_automorphisms(&fx.gs.tower).unwrap();
    let phi = autos.iter().find(|a| !a.is_identity()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed_beef);
    let dim = fx.gs.tower.dimension();
    let random_element = |rng: &mut ChaCha8Rng| {
        let coeffs: Vec<Rational> = (0..dim)
            .map(|_| rat_frac(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)))
            .collect();
        torsion8::tower::TowerElement::from_coeffs(fx.gs.tower.clone(), coeffs).unwrap()
    };
    for _ in 0..200 {
        let x = random_element(&mut rng);
        let y = random_element(&mut rng);
        assert_eq!(
            phi.apply(&x.mul(&y).unwrap()).unwrap(),
            phi.apply(&x).unwrap().mul(&phi.apply(&y).unwrap()).unwrap()
        );
        assert_eq!(
            phi.apply(&x.add(&y).unwrap()).unwrap(),
            phi.apply(&x).unwrap().add(&phi.apply(&y).unwrap()).unwrap()
        );
    }
}

#[test]
fn pipeline_rejects_bad_inputs() {
    let job = JobSpec {
        mode: "degree3".into(),
        roots: vec!["0".into(), "1".into(), "1".into()],
        checks: vec![Check::Identities],
        output_path: None,
    };
    assert!(pipeline::run(&job).is_err());

    let job = JobSpec {
        mode: "degree5".into(),
        roots: vec!["0".into(), "1".into(), "2".into()],
        checks: vec![Check::Identities],
        output_path: None,
    };
    assert!(pipeline::run(&job).is_err());
}

#[test]
fn identity_example_values_on_flagship() {
    // spot values used throughout: A-squares and the quartic of A1
    let gs = build_tower(&CurveInput::degree3([0, 1, 10]).unwrap()).unwrap();
    assert_eq!(
        gs.a[0].pow(4).neg(),
        torsion8::tower::TowerElement::from_rational(&gs.tower, rat_i64(-81))
    );
}
