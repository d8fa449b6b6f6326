use isoclifford_core::flavor::*;
use isoclifford_core::random;
use isoclifford_core::{Complex64, ComplexMatrix, Result};
use rand::Rng;

use super::Runner;
use crate::report::PaperComparison;

const SU3_CENTRAL: [f64; 3] = [2.25, 5.0, 90.0];

fn normalization_defect(n: usize) -> Result<f64> {
    let l = gell_mann(n)?;
    let mut w: f64 = 0.0;
    for (a, la) in l.iter().enumerate() {
        w = w.max(la.trace().norm()).max(la.max_abs_diff(&la.adjoint()));
        for (b, lb) in l.iter().enumerate() {
            let want = if a == b { 2.0 } else { 0.0 };
            w = w.max(((la * lb).trace() - want).norm());
        }
    }
    Ok(w)
}

fn random_su3_isounit<R: Rng>(rng: &mut R, delta: f64) -> Result<FlavorIsoUnit> {
    let d = random::unit_determinant_diagonal(rng, 3);
    FlavorIsoUnit::new(FlavorGroup::Su3, &[1.0 / d[0], 1.0 / d[1]], delta)
}

fn expectations(z: &FlavorIsoUnit, op: &ComplexMatrix, want: &[f64]) -> Result<f64> {
    let mut w: f64 = 0.0;
    for (s, &v) in z.iso_states().iter().zip(want) {
        w = w.max((s.iso_expectation(op)? - v).norm());
    }
    Ok(w)
}

fn interval_comparisons(r: &mut Runner, group: FlavorGroup) {
    let Ok(rows) = param_intervals(&QuarkMassBounds::reference(), group) else {
        return;
    };
    for iv in rows {
        let paper = [iv.paper.lo, iv.paper.hi];
        r.compare(PaperComparison::new(
            format!("intervals.{}.{}.rigorous", group.name(), iv.name),
            &[iv.rigorous.lo, iv.rigorous.hi],
            &paper,
            iv.rigorous_matches_paper(),
        ));
        r.compare(PaperComparison::new(
            format!("intervals.{}.{}.joint", group.name(), iv.name),
            &[iv.joint.lo, iv.joint.hi],
            &paper,
            iv.joint_matches_paper(),
        ));
    }
}

pub fn flavor(r: &mut Runner) {
    r.check("gell_mann.su3.normalization", 1e-12, |_| normalization_defect(3));
    r.check("gell_mann.su6.normalization", 1e-12, |_| normalization_defect(6));
    r.check("gell_mann.su3.f_values", 1e-12, |_| {
        let l = gell_mann(3)?;
        let mut w: f64 = 0.0;
        let listed = su3_reference_constants();
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    let mut sorted = [a + 1, b + 1, c + 1];
                    sorted.sort_unstable();
                    let base = listed.iter().find(|(t, _)| *t == sorted).map_or(0.0, |(_, f)| *f);
                    // Sign of the permutation taking (a, b, c) to ascending order.
                    let inversions = [(a, b), (a, c), (b, c)].iter().filter(|(x, y)| x > y).count();
                    let want = if inversions % 2 == 0 { base } else { -base };
                    w = w.max((structure_constant(&l, a, b, c) - want).abs());
                }
            }
        }
        Ok(w)
    });
    for (tag, delta) in [("delta1", 1.0), ("delta2.5", 2.5)] {
        r.check(&format!("iso_gell_mann.{tag}"), 1e-10, |rng| {
            let l = gell_mann(3)?;
            let mut w: f64 = 0.0;
            for _ in 0..10 {
                let z = random_su3_isounit(rng, delta)?;
                let lifted = z.lifted_generators()?;
                let k = Complex64::new(0.0, 2.0 / delta.sqrt());
                for a in 0..8 {
                    for b in a + 1..8 {
                        let lhs = z.iso_commutator(&lifted[a], &lifted[b])?;
                        let mut rhs = ComplexMatrix::zeros(3, 3);
                        for (c, lc) in lifted.iter().enumerate() {
                            rhs = &rhs + &lc.scale(k * structure_constant(&l, a, b, c));
                        }
                        w = w.max(lhs.max_abs_diff(&rhs));
                    }
                }
            }
            Ok(w)
        });
    }
    r.check("limit_recovery", 0.0, |_| {
        let z = FlavorIsoUnit::identity(FlavorGroup::Su6);
        let mut w: f64 = 0.0;
        for (l, lz) in gell_mann(6)?.iter().zip(z.lifted_generators()?) {
            w = w.max(l.max_abs_diff(&lz));
        }
        Ok(w)
    });
    r.check("iso_state.alpha4", 1e-15, |_| {
        let z = FlavorIsoUnit::new(FlavorGroup::Su3, &[4.0, 1.0], 1.0)?;
        let u = &z.iso_states()[0];
        let v = u.vector();
        Ok((v[0] - 0.5).norm().max(v[1].norm()).max(v[2].norm()).max((u.iso_inner(u)? - 1.0).norm()))
    });

    // SU(3) at the central masses.
    r.check("su3.alpha", 1e-4, |_| Ok((param_values(&SU3_CENTRAL)?[0] - 0.22407).abs()));
    r.check("su3.beta", 1e-4, |_| Ok((param_values(&SU3_CENTRAL)?[1] - 0.49792).abs()));
    r.check("su3.params_closed_form", 1e-14, |_| {
        let p = param_values(&SU3_CENTRAL)?;
        let [u, d, s] = SU3_CENTRAL;
        Ok((p[0] - (u * u / (d * s)).cbrt()).abs().max((p[1] - (d * d / (u * s)).cbrt()).abs()))
    });
    r.check("su3.iso_mass_matrix", 1e-9, |_| {
        let z = equal_mass_params(&SU3_CENTRAL)?;
        let g = 1012.5f64.cbrt();
        Ok(iso_mass_operator(&z, &SU3_CENTRAL)?.max_abs_diff(&ComplexMatrix::identity(3).scale(g)) / g)
    });
    let z3 = equal_mass_params(&SU3_CENTRAL);
    let third = 1.0 / 3.0;
    r.check("su3.expectation.hypercharge", 1e-12, |_| {
        let z = z3.as_ref().map_err(Clone::clone)?;
        expectations(z, &z.hypercharge()?, &[1.0 / 6.0, 1.0 / 6.0, -third])
    });
    r.check("su3.expectation.isospin3", 1e-12, |_| {
        let z = z3.as_ref().map_err(Clone::clone)?;
        expectations(z, &z.isospin3()?, &[0.5, -0.5, 0.0])
    });
    r.check("su3.expectation.charge", 1e-12, |_| {
        let z = z3.as_ref().map_err(Clone::clone)?;
        expectations(z, &z.charge()?, &[2.0 * third, -third, -third])
    });
    r.check("su3.expectation.mass", 1e-12, |_| {
        let z = z3.as_ref().map_err(Clone::clone)?;
        expectations(z, &iso_mass_operator(z, &SU3_CENTRAL)?, &SU3_CENTRAL)
    });

    // SU(6) at the central masses.
    let m6 = QuarkMassBounds::reference().central(FlavorGroup::Su6);
    r.check("su6.det_isounit", 1e-12, |_| {
        let z = equal_mass_params(m6.as_ref().map_err(Clone::clone)?)?;
        Ok((z.determinant() - 1.0).abs())
    });
    r.check("su6.equal_iso_mass", 1e-12, |_| {
        let m = m6.as_ref().map_err(Clone::clone)?;
        let z = equal_mass_params(m)?;
        let g = common_iso_mass(m)?;
        let log_mean = m.iter().map(|x| x.ln()).sum::<f64>() / 6.0;
        let iso = iso_mass_operator(&z, m)?;
        Ok((iso.max_abs_diff(&ComplexMatrix::identity(6).scale(g)) / g).max((g - log_mean.exp()).abs() / g))
    });
    r.check("su6.decomposition_reconstruction", 1e-9, |_| {
        let m = m6.as_ref().map_err(Clone::clone)?;
        Ok(decompose_mass(m)?.reconstruct(6)?.max_abs_diff(&mass_operator(m)?))
    });
    r.check("su6.chain", 1e-9, |_| {
        let m = m6.as_ref().map_err(Clone::clone)?;
        let p = param_values(m)?;
        let mut chain: Vec<f64> = p.iter().zip(m).map(|(pi, mi)| mi / pi).collect();
        chain.push(p.iter().product::<f64>() * m[5]);
        let first = chain[0];
        Ok(chain.iter().map(|c| (c - first).abs() / first).fold(0.0, f64::max))
    });
    r.check("su6.eigenvalue_isoequation", 1e-12, |_| {
        let m = m6.as_ref().map_err(Clone::clone)?;
        let z = equal_mass_params(m)?;
        let iso = iso_mass_operator(&z, m)?;
        let mut w: f64 = 0.0;
        for (s, &mi) in z.iso_states().iter().zip(m) {
            for (o, v) in s.iso_apply(&iso)?.iter().zip(s.vector()) {
                w = w.max((o - v * mi).norm() / (mi * v.norm().max(1.0)));
            }
        }
        Ok(w)
    });

    // Intervals.
    r.check("intervals.su3.alpha_rigorous", 1e-3, |_| {
        let iv = &param_intervals(&QuarkMassBounds::reference(), FlavorGroup::Su3)?[0];
        Ok((iv.rigorous.lo - 0.1430).abs().max((iv.rigorous.hi - 0.3499).abs()))
    });
    for group in [FlavorGroup::Su3, FlavorGroup::Su6] {
        r.check(&format!("intervals.{}.soundness", group.name()), 0.0, |rng| {
            let bounds = QuarkMassBounds::reference();
            let rows = param_intervals(&bounds, group)?;
            let b = bounds.for_group(group)?;
            let mut outside = 0usize;
            for _ in 0..1000 {
                let m: Vec<f64> = b.iter().map(|x| rng.random_range(x.min..=x.max)).collect();
                for (iv, p) in rows.iter().zip(param_values(&m)?) {
                    if !iv.rigorous.contains(p) {
                        outside += 1;
                    }
                }
            }
            Ok(outside as f64)
        });
    }
    r.check("alpha_monotonicity", 0.0, |rng| {
        let mut violations = 0usize;
        for _ in 0..100 {
            let m: Vec<f64> = (0..6).map(|_| rng.random_range(1.0..1e5)).collect();
            let a0 = param_values(&m)?[0];
            for k in 0..6 {
                let mut up = m.clone();
                up[k] *= 1.001;
                let a1 = param_values(&up)?[0];
                if (k == 0) != (a1 > a0) {
                    violations += 1;
                }
            }
        }
        Ok(violations as f64)
    });

    interval_comparisons(r, FlavorGroup::Su3);
    interval_comparisons(r, FlavorGroup::Su6);
    for m in [SU3_CENTRAL.to_vec(), m6.clone().unwrap_or_default()] {
        if let (Ok(d), Ok(p)) = (decompose_mass(&m), paper_mass_coefficients(&m)) {
            let c = d.coefficients();
            let ok = c.iter().zip(&p).all(|(a, b)| (a - b).abs() <= 1e-9 * b.abs().max(1.0));
            r.compare(
                PaperComparison::new(format!("mass_decomposition.su{}", m.len()), &c, &p, ok)
                    .with_note("identity coefficient first, then the diagonal generators"),
            );
        }
    }
    if let Ok(l) = gell_mann(6) {
        // λ24 and λ35 carry √(2/(k(k−1))) for k = 5, 6.
        let computed = [l[23].get(0, 0).re, l[34].get(0, 0).re];
        let printed = [1.0 / (2.0 * 6f64.sqrt()), 1.0 / (2.0 * 30f64.sqrt())];
        let ok = computed.iter().zip(&printed).all(|(a, b)| (a - b).abs() < 1e-12);
        r.compare(
            PaperComparison::new("gell_mann.su6.diagonal_prefactors_24_35", &computed, &printed, ok)
                .with_note("prefactors giving tr(λλ) = 2"),
        );
    }
}
