mod common;

use common::*;
use isoclifford_core::lie::*;
use isoclifford_core::{IsoContext, Multivector, Signature};
use proptest::prelude::*;

/// Invertible paravector `2 + v`; its inverse takes the conjugation shortcut,
/// which keeps `Cl(12,0)` tractable.
fn paravector_isounit(sig: Signature) -> impl Strategy<Value = IsoContext> {
    (vector(sig), 0.05f64..0.9).prop_map(move |(v, r)| {
        let v = v.scale(r / v.norm().max(1e-6));
        IsoContext::new(&Multivector::scalar(sig, 2.0) + &v).unwrap()
    })
}

fn check_iso_matches_rigid(n: usize, ctx: &IsoContext) -> Result<(), TestCaseError> {
    let rigid = su_n_generators(n, None).unwrap();
    let iso = su_n_generators(n, Some(ctx)).unwrap();
    prop_assert_eq!(span_rank(&iso), n * n - 1);
    for (g, gz) in rigid.generators.iter().zip(&iso.generators) {
        prop_assert!(ctx.lift(g).unwrap().max_abs_diff(gz) < 1e-12);
    }
    let a = structure_constants(&rigid).unwrap();
    let b = structure_constants(&iso).unwrap();
    prop_assert!(a.max_abs_diff(&b) < 1e-9);
    prop_assert!(b.max_residual < CLOSURE_TOLERANCE);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn su2_iso_constants_match_rigid(ctx in paravector_isounit(Signature::new(4, 0).unwrap())) {
        check_iso_matches_rigid(2, &ctx)?;
    }

    #[test]
    fn su3_iso_constants_match_rigid(ctx in paravector_isounit(Signature::new(6, 0).unwrap())) {
        check_iso_matches_rigid(3, &ctx)?;
    }

    #[test]
    fn su3_general_isounit(z in isounit(Signature::new(6, 0).unwrap())) {
        check_iso_matches_rigid(3, &IsoContext::new(z).unwrap())?;
    }

    #[test]
    fn iso_transport_case1(z in isounit(Signature::spacetime())) {
        let ctx = IsoContext::new(z).unwrap();
        let rigid = su3_case1_generators(None).unwrap();
        let iso = su3_case1_generators(Some(&ctx)).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let lhs = iso.bracket(i, j).unwrap();
                let rhs = ctx.lift(&rigid.bracket(i, j).unwrap()).unwrap();
                prop_assert!(lhs.max_abs_diff(&rhs) < 1e-9);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2))]

    #[test]
    fn su6_iso_constants_match_rigid(ctx in paravector_isounit(Signature::new(12, 0).unwrap())) {
        check_iso_matches_rigid(6, &ctx)?;
    }
}

/// Repeated singular values in the coordinate matrix once broke the solve here.
#[test]
fn su3_paravector_isounit_regression() {
    let sig = Signature::new(6, 0).unwrap();
    let v = [-0.407069691295161, -0.34373126212625277, 0.0, 0.12152387144315606, -0.21866062327446883, -0.24847536818004926];
    let zeta = &Multivector::scalar(sig, 2.0) + &Multivector::vector(sig, &v).unwrap();
    check_iso_matches_rigid(3, &IsoContext::new(zeta).unwrap()).unwrap();
}

#[test]
fn su_n_dimensions_and_jacobi() {
    for n in [2, 3, 6] {
        let gs = su_n_generators(n, None).unwrap();
        assert_eq!(gs.len(), n * n - 1);
        assert_eq!(span_rank(&gs), n * n - 1);
        let sc = structure_constants(&gs).unwrap();
        assert!(sc.antisymmetry_defect() < 1e-8);
        if n < 6 {
            assert!(sc.jacobi_defect() < 1e-8);
        }
    }
}

#[test]
fn su6_jacobi() {
    let sc = structure_constants(&su6_generators(None).unwrap()).unwrap();
    assert!(sc.jacobi_defect() < 1e-8);
}

#[test]
fn case1_su2_u1_subalgebra() {
    let gs = su3_case1_generators(None).unwrap();
    let sub = GeneratorSet {
        generators: gs.generators[..3].to_vec(),
        names: gs.names[..3].to_vec(),
        ..gs.clone()
    };
    let sc = structure_constants(&sub).unwrap();
    assert!(sc.max_residual < 1e-9);
    for i in 0..3 {
        assert!(gs.bracket(i, 7).unwrap().norm() < 1e-9);
    }
}
