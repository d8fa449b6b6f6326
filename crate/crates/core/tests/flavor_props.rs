use isoclifford_core::flavor::*;
use isoclifford_core::{Complex64, ComplexMatrix};
use proptest::prelude::*;

fn su3_isounit() -> impl Strategy<Value = FlavorIsoUnit> {
    (prop::collection::vec(0.2f64..5.0, 2), 0.1f64..10.0)
        .prop_map(|(p, delta)| FlavorIsoUnit::new(FlavorGroup::Su3, &p, delta).unwrap())
}

fn masses(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.5f64..2.0e5, n)
}

fn sample_in(bounds: &QuarkMassBounds, group: FlavorGroup) -> impl Strategy<Value = Vec<f64>> {
    let b = bounds.for_group(group).unwrap();
    b.iter().map(|x| x.min..=x.max).collect::<Vec<_>>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn iso_gell_mann_relation(z in su3_isounit()) {
        let lambdas = gell_mann(3).unwrap();
        let lifted = z.lifted_generators().unwrap();
        let scale = Complex64::new(0.0, 2.0 * z.delta().powf(-0.5));
        for a in 0..8 {
            for b in 0..8 {
                let lhs = z.iso_commutator(&lifted[a], &lifted[b]).unwrap();
                let mut rhs = ComplexMatrix::zeros(3, 3);
                for c in 0..8 {
                    let f = structure_constant(&lambdas, a, b, c);
                    rhs = &rhs + &lifted[c].scale(scale * f);
                }
                prop_assert!(lhs.max_abs_diff(&rhs) < 1e-10);
            }
        }
    }

    #[test]
    fn determinant_is_one(p in prop::collection::vec(1e-3f64..1e3, 5)) {
        let z = FlavorIsoUnit::new(FlavorGroup::Su6, &p, 1.0).unwrap();
        prop_assert!((z.determinant() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn equal_mass_fixed_point(m in masses(6)) {
        let z = equal_mass_params(&m).unwrap();
        let g = common_iso_mass(&m).unwrap();
        let iso = iso_mass_operator(&z, &m).unwrap();
        let target = ComplexMatrix::identity(6).scale(g);
        prop_assert!(iso.max_abs_diff(&target) / g < 1e-12);
    }

    #[test]
    fn eigenvalue_isoequation(m in masses(3)) {
        let z = equal_mass_params(&m).unwrap();
        let iso = iso_mass_operator(&z, &m).unwrap();
        for (state, &mi) in z.iso_states().iter().zip(&m) {
            let out = state.iso_apply(&iso).unwrap();
            for (o, s) in out.iter().zip(state.vector()) {
                prop_assert!((o - s * mi).norm() <= 1e-12 * mi.max(1.0) * s.norm().max(1.0));
            }
            prop_assert!((state.iso_expectation(&iso).unwrap().re - mi).abs() < 1e-12 * mi.max(1.0));
        }
    }

    #[test]
    fn decomposition_reconstructs(m in masses(6)) {
        let d = decompose_mass(&m).unwrap();
        let rebuilt = d.reconstruct(6).unwrap();
        prop_assert!(rebuilt.max_abs_diff(&mass_operator(&m).unwrap()) < 1e-9 * m.iter().cloned().fold(1.0, f64::max));
    }

    #[test]
    fn alpha_monotone(m in masses(6), k in 0usize..6) {
        let mut up = m.clone();
        up[k] *= 1.01;
        let a0 = param_values(&m).unwrap()[0];
        let a1 = param_values(&up).unwrap()[0];
        if k == 0 {
            prop_assert!(a1 > a0);
        } else {
            prop_assert!(a1 < a0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn samples_stay_inside_rigorous_su6(m in sample_in(&QuarkMassBounds::reference(), FlavorGroup::Su6)) {
        let ivs = param_intervals(&QuarkMassBounds::reference(), FlavorGroup::Su6).unwrap();
        for (iv, p) in ivs.iter().zip(param_values(&m).unwrap()) {
            prop_assert!(iv.rigorous.contains(p), "{} = {} outside {:?}", iv.name, p, iv.rigorous);
        }
    }

    #[test]
    fn samples_stay_inside_rigorous_su3(m in sample_in(&QuarkMassBounds::reference(), FlavorGroup::Su3)) {
        let ivs = param_intervals(&QuarkMassBounds::reference(), FlavorGroup::Su3).unwrap();
        for (iv, p) in ivs.iter().zip(param_values(&m).unwrap()) {
            prop_assert!(iv.rigorous.contains(p));
        }
    }
}

#[test]
fn unit_params_recover_rigid_objects() {
    let z = FlavorIsoUnit::identity(FlavorGroup::Su3);
    for (l, lz) in gell_mann(3).unwrap().iter().zip(z.lifted_generators().unwrap()) {
        assert_eq!(l.max_abs_diff(&lz), 0.0);
    }
    let lambdas = gell_mann(3).unwrap();
    let a = &lambdas[0];
    let b = &lambdas[1];
    assert!(z.iso_commutator(a, b).unwrap().max_abs_diff(&(&(a * b) - &(b * a))) < 1e-15);
}
