use isoclifford_core::lie::{
    closure_residuals, printed_cartan_generator, span_rank, structure_constants,
    su3_case1_generators, su3_case2_generators, su6_generators, su_n_generators, GeneratorSet,
    CLOSURE_TOLERANCE,
};
use isoclifford_core::random;
use isoclifford_core::{IsoContext, Multivector, Result, Signature};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::Runner;
use crate::report::PaperComparison;

/// `2 + v` with `|v| < 1`: invertible through the conjugation shortcut, so
/// usable in `Cl(12,0)` where a dense solve is out of reach.
fn paravector_isounit(rng: &mut ChaCha8Rng, sig: Signature) -> Result<IsoContext> {
    let v = random::vector(rng, sig);
    let v = v.scale(rng.random_range(0.05..0.9) / v.norm().max(1e-6));
    IsoContext::new(&Multivector::scalar(sig, 2.0) + &v)
}

type IsounitSampler = fn(&mut ChaCha8Rng, Signature) -> Result<IsoContext>;

fn su_n_checks(r: &mut Runner, n: usize, ctx_of: IsounitSampler) {
    let tag = format!("su{n}_bivector");
    let sig = Signature::new(2 * n, 0).expect("n <= 6");
    let rigid = match su_n_generators(n, None) {
        Ok(g) => g,
        Err(_) => {
            r.check(&format!("{tag}.build"), 0.0, |_| Ok(f64::NAN));
            return;
        }
    };
    r.check(&format!("{tag}.dimension"), 0.0, |_| {
        Ok((span_rank(&rigid) as f64 - (n * n - 1) as f64).abs().max((rigid.len() as f64 - (n * n - 1) as f64).abs()))
    });
    let sc = structure_constants(&rigid);
    r.check(&format!("{tag}.closure"), CLOSURE_TOLERANCE, |_| Ok(sc.as_ref().map_err(Clone::clone)?.max_residual));
    r.check(&format!("{tag}.antisymmetry"), 1e-8, |_| Ok(sc.as_ref().map_err(Clone::clone)?.antisymmetry_defect()));
    r.check(&format!("{tag}.jacobi"), 1e-8, |_| Ok(sc.as_ref().map_err(Clone::clone)?.jacobi_defect()));
    let ctx = ctx_of(&mut r.rng, sig);
    let iso_sc = ctx.as_ref().map_err(Clone::clone).and_then(|c| structure_constants(&su_n_generators(n, Some(c))?));
    r.check(&format!("{tag}.iso_closure"), CLOSURE_TOLERANCE, |_| Ok(iso_sc.as_ref().map_err(Clone::clone)?.max_residual));
    r.check(&format!("{tag}.iso_matches_rigid"), 1e-9, |_| {
        Ok(sc.as_ref().map_err(Clone::clone)?.max_abs_diff(iso_sc.as_ref().map_err(Clone::clone)?))
    });
}

fn general_isounit(rng: &mut ChaCha8Rng, sig: Signature) -> Result<IsoContext> {
    IsoContext::new(random::isounit(rng, sig, true))
}

/// Pairs whose bracket leaves the span, and the largest residual.
fn closure_summary(gs: &GeneratorSet) -> Result<(Vec<(usize, usize)>, f64)> {
    let res = closure_residuals(gs)?;
    let mut failing = Vec::new();
    let mut w: f64 = 0.0;
    for i in 0..gs.len() {
        for j in i + 1..gs.len() {
            w = w.max(res[i][j]);
            if res[i][j] > CLOSURE_TOLERANCE {
                failing.push((i + 1, j + 1));
            }
        }
    }
    Ok((failing, w))
}

pub fn su3(r: &mut Runner) {
    su_n_checks(r, 2, general_isounit);
    su_n_checks(r, 3, general_isounit);

    let st = Signature::spacetime();
    let rigid = su3_case1_generators(None);
    r.check("case1.rank", 0.0, |_| Ok((span_rank(rigid.as_ref().map_err(Clone::clone)?) as f64 - 8.0).abs()));
    r.check("case1.su2_subalgebra", 1e-9, |_| {
        let gs = rigid.as_ref().map_err(Clone::clone)?;
        let sub = GeneratorSet {
            generators: gs.generators[..3].to_vec(),
            names: gs.names[..3].to_vec(),
            ..gs.clone()
        };
        Ok(structure_constants(&sub)?.max_residual)
    });
    r.check("case1.u1_commutes", 1e-9, |_| {
        let gs = rigid.as_ref().map_err(Clone::clone)?;
        (0..3).try_fold(0.0f64, |w, i| Ok(w.max(gs.bracket(i, 7)?.norm())))
    });
    // The bracket [λ1, λ2] measured against 2i λ3, for ζ = 1 and 20 random ζ.
    r.check("case1.bracket12_is_2i_lambda3", 1e-9, |rng| {
        let mut contexts = vec![IsoContext::identity(st)];
        for _ in 0..20 {
            contexts.push(IsoContext::new(random::isounit(rng, st, true))?);
        }
        let mut w: f64 = 0.0;
        for ctx in &contexts {
            let gs = su3_case1_generators(Some(ctx))?;
            let want = gs.generators[2].scale(Complex64::new(0.0, 2.0));
            w = w.max(gs.bracket(0, 1)?.max_abs_diff(&want));
        }
        Ok(w)
    });
    r.check("case1.iso_transport", 1e-9, |rng| {
        let ctx = IsoContext::new(random::isounit(rng, st, true))?;
        let base = rigid.as_ref().map_err(Clone::clone)?;
        let iso = su3_case1_generators(Some(&ctx))?;
        let mut w: f64 = 0.0;
        for i in 0..8 {
            for j in 0..8 {
                w = w.max(iso.bracket(i, j)?.max_abs_diff(&ctx.lift(&base.bracket(i, j)?)?));
            }
        }
        Ok(w)
    });
    r.check("case2.rank", 0.0, |_| Ok((span_rank(&su3_case2_generators(None)?) as f64 - 8.0).abs()));

    if let Ok(gs) = &rigid {
        if let Ok(b) = gs.bracket(0, 1) {
            // Least-squares coefficient of λ3 in [λ1, λ2].
            let l3 = &gs.generators[2];
            let num: Complex64 = l3.terms().map(|(bl, c)| c.conj() * b.coefficient(bl)).sum();
            let k = num / l3.norm().powi(2);
            r.compare(
                PaperComparison::new("case1.bracket12_coefficient", &[k.re, k.im], &[0.0, 1.0], (k - Complex64::i()).norm() < 1e-9)
                    .with_note("[λ1, λ2] = k λ3; printed k = i"),
            );
        }
    }
    for (name, gs) in [("case1", su3_case1_generators(None)), ("case2", su3_case2_generators(None))] {
        if let Ok((failing, w)) = gs.as_ref().map_err(Clone::clone).and_then(closure_summary) {
            r.compare(
                PaperComparison::new(
                    format!("{name}.closure_failing_pairs"),
                    &[failing.len() as f64, w],
                    &[0.0, 0.0],
                    failing.is_empty(),
                )
                .with_note(format!("number of pairs leaving the span and largest residual; pairs {failing:?}")),
            );
        }
    }
    let printed = printed_cartan_generator(3, 1).and_then(|h| {
        let mut gs = su_n_generators(3, None)?;
        gs.generators[6] = h;
        closure_summary(&gs)
    });
    if let Ok((failing, w)) = printed {
        r.compare(
            PaperComparison::new("su3_bivector.printed_cartan_closure", &[failing.len() as f64, w], &[0.0, 0.0], failing.is_empty())
                .with_note("H1 taken literally, with its second term a vector wedged with itself"),
        );
    }
}

pub fn su6(r: &mut Runner) {
    su_n_checks(r, 6, paravector_isounit);
    r.check("appendix.count", 0.0, |_| Ok((su6_generators(None)?.len() as f64 - 35.0).abs()));
}
