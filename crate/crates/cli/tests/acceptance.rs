//! Acceptance criteria 1–13, one line each.
//!
//! Runs without the libtest harness so the lines always reach stdout. A
//! criterion listed in `EXPECTED_FAILURES` is evaluated exactly as stated and
//! is expected to fail; the target exits non-zero if any criterion's outcome
//! differs from its expectation.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use isoclifford_core::clifford::BasisBlade;
use isoclifford_core::flavor::*;
use isoclifford_core::lie::{span_rank, structure_constants, su3_case1_generators, su_n_generators};
use isoclifford_core::octonion::{oct_isotope, oct_product, unit};
use isoclifford_core::rep::idempotent;
use isoclifford_core::{Complex64, ComplexMatrix, DiracRep, IsoContext, Multivector, Signature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `[λ1, λ2]_ζ = i λ3` as stated does not hold: the bracket is `2i λ3`.
const EXPECTED_FAILURES: &[u32] = &[3];

type Outcome = Result<String, String>;

fn within(what: &str, value: f64, tol: f64) -> Outcome {
    let line = format!("{what} = {value:.3e} (tol {tol:.0e})");
    if value.is_finite() && value < tol {
        Ok(line)
    } else {
        Err(line)
    }
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xACCE_0000 + criterion)
}

fn rand_mv(rng: &mut ChaCha8Rng, sig: Signature, terms: usize) -> Multivector {
    let mut out = Multivector::zero(sig);
    for _ in 0..terms {
        let b = BasisBlade(rng.random_range(0..sig.blade_count() as u32));
        let c = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        out = &out + &Multivector::blade(sig, b, c);
    }
    out
}

/// `2 + x`, `‖x‖₁ ≤ 1.5`.
fn rand_isounit(rng: &mut ChaCha8Rng, sig: Signature) -> IsoContext {
    let x = rand_mv(rng, sig, 5);
    let x = x.scale(rng.random_range(0.1..1.5) / x.l1_norm().max(1e-9));
    IsoContext::new(&Multivector::scalar(sig, 2.0) + &x).expect("dominant scalar part")
}

fn e(sig: Signature, i: usize) -> Multivector {
    Multivector::basis_vector(sig, i).unwrap()
}

fn c1_octonion_table() -> Outcome {
    let cycles = [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3)];
    let mut w: f64 = 0.0;
    for a in 1..=7usize {
        for b in 1..=7usize {
            let mut want = Multivector::zero(unit(0).signature());
            if a == b {
                want = -unit(0);
            }
            for &(x, y, z) in &cycles {
                for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                    if (a, b) == (p, q) {
                        want = unit(r);
                    } else if (a, b) == (q, p) {
                        want = -unit(r);
                    }
                }
            }
            w = w.max(oct_product(&unit(a), &unit(b)).unwrap().max_abs_diff(&want));
        }
    }
    within("49 products, max deviation", w, 1e-12)
}

fn c2_example1() -> Outcome {
    let iso = oct_isotope(&unit(1)).unwrap();
    let right = iso.right_product(&unit(2), &unit(5)).unwrap().max_abs_diff(&-unit(7));
    let left = iso.left_product(&unit(2), &unit(5)).unwrap().max_abs_diff(&unit(7));
    within("e2 ⋄ e5 + e7 and e2 ⋄' e5 − e7", right.max(left), 1e-12)
}

fn c3_example2() -> Outcome {
    let st = Signature::spacetime();
    let mut r = rng(3);
    let mut contexts = vec![IsoContext::identity(st)];
    contexts.extend((0..20).map(|_| rand_isounit(&mut r, st)));
    let mut w: f64 = 0.0;
    let mut w2: f64 = 0.0;
    for ctx in &contexts {
        let gs = su3_case1_generators(Some(ctx)).unwrap();
        let bracket = gs.bracket(0, 1).unwrap();
        w = w.max(bracket.max_abs_diff(&gs.generators[2].scale(Complex64::i())));
        w2 = w2.max(bracket.max_abs_diff(&gs.generators[2].scale(Complex64::new(0.0, 2.0))));
    }
    within(&format!("residual of [λ1, λ2]_ζ − iλ3 (against 2iλ3: {w2:.1e})"), w, 1e-9)
}

fn c4_commutator_lift() -> Outcome {
    let mut r = rng(4);
    let mut w: f64 = 0.0;
    for sig in [Signature::euclidean3(), Signature::spacetime(), Signature::octonionic()] {
        for _ in 0..10 {
            let ctx = rand_isounit(&mut r, sig);
            for _ in 0..10 {
                let a = rand_mv(&mut r, sig, 5);
                let b = rand_mv(&mut r, sig, 5);
                let lhs = ctx.iso_commutator(&(&a * ctx.zeta()), &(&b * ctx.zeta())).unwrap();
                let rhs = &(&(&a * &b) - &(&b * &a)) * ctx.zeta();
                w = w.max(lhs.max_abs_diff(&rhs));
            }
        }
    }
    within("300 pairs, max residual", w, 1e-9)
}

fn c5_lifted_metric() -> Outcome {
    let st = Signature::spacetime();
    let mut r = rng(5);
    let mut w: f64 = 0.0;
    for k in 0..11 {
        let ctx = if k == 0 { IsoContext::identity(st) } else { rand_isounit(&mut r, st) };
        for mu in 0..4 {
            for nu in 0..4 {
                let a = &e(st, mu) * ctx.zeta();
                let b = &e(st, nu) * ctx.zeta();
                let s = &ctx.iso_product(&a, &b).unwrap() + &ctx.iso_product(&b, &a).unwrap();
                let eta = [1.0, -1.0, -1.0, -1.0][mu] * if mu == nu { 2.0 } else { 0.0 };
                w = w.max(s.max_abs_diff(&ctx.zeta().scale(eta)));
            }
        }
    }
    within("all pairs, 11 isounits, max residual", w, 1e-10)
}

fn c6_su_n() -> Outcome {
    let mut r = rng(6);
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [2usize, 3, 6] {
        let sig = Signature::new(2 * n, 0).unwrap();
        let rigid = su_n_generators(n, None).unwrap();
        let mut para = Multivector::scalar(sig, 2.0);
        for i in 0..2 * n {
            para = &para + &e(sig, i).scale(r.random_range(-0.2..0.2));
        }
        let ctx = IsoContext::new(para).unwrap();
        let iso = su_n_generators(n, Some(&ctx)).unwrap();
        let rank = span_rank(&rigid);
        let (Ok(a), Ok(b)) = (structure_constants(&rigid), structure_constants(&iso)) else {
            return Err(format!("su({n}) does not close"));
        };
        let diff = a.max_abs_diff(&b);
        ok &= rank == n * n - 1 && a.max_residual < 1e-8 && b.max_residual < 1e-8 && diff < 1e-9;
        notes.push(format!(
            "su({n}): dim {rank}, closure {:.1e}/{:.1e}, tensor diff {diff:.1e}",
            a.max_residual, b.max_residual
        ));
    }
    let line = notes.join("; ");
    if ok { Ok(line) } else { Err(line) }
}

fn c7_iso_gell_mann() -> Outcome {
    let listed: BTreeMap<[usize; 3], f64> = [
        ([1, 2, 3], 1.0),
        ([1, 4, 7], 0.5),
        ([1, 5, 6], -0.5),
        ([2, 4, 6], 0.5),
        ([2, 5, 7], 0.5),
        ([3, 4, 5], 0.5),
        ([3, 6, 7], -0.5),
        ([4, 5, 8], 3f64.sqrt() / 2.0),
        ([6, 7, 8], 3f64.sqrt() / 2.0),
    ]
    .into_iter()
    .collect();
    // Totally antisymmetric extension of the listed values.
    let f = |a: usize, b: usize, c: usize| -> f64 {
        let mut idx = [a, b, c];
        let mut sign = 1.0;
        for i in 0..3 {
            for j in 0..2 - i {
                if idx[j] > idx[j + 1] {
                    idx.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        listed.get(&idx).map_or(0.0, |v| sign * v)
    };
    let lambdas = gell_mann(3).unwrap();
    let mut f_dev: f64 = 0.0;
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                f_dev = f_dev.max((structure_constant(&lambdas, a, b, c) - f(a + 1, b + 1, c + 1)).abs());
            }
        }
    }
    let mut r = rng(7);
    let mut w: f64 = 0.0;
    for delta in [1.0, 2.5] {
        for _ in 0..10 {
            let x: f64 = r.random_range(-1.0..1.0);
            let y: f64 = r.random_range(-1.0..1.0);
            let z = FlavorIsoUnit::new(FlavorGroup::Su3, &[x.exp(), y.exp()], delta).unwrap();
            let zm = z.matrix();
            let zi = z.inverse_matrix();
            let lift = |l: &ComplexMatrix| (&zm * l).scale(delta.powf(-0.5));
            for a in 0..8 {
                for b in a + 1..8 {
                    let (la, lb) = (lift(&lambdas[a]), lift(&lambdas[b]));
                    let lhs = &(&(&la * &zi) * &lb) - &(&(&lb * &zi) * &la);
                    let mut rhs = ComplexMatrix::zeros(3, 3);
                    for c in 0..8 {
                        let k = Complex64::new(0.0, 2.0 * f(a + 1, b + 1, c + 1) / delta.sqrt());
                        rhs = &rhs + &lift(&lambdas[c]).scale(k);
                    }
                    w = w.max(lhs.max_abs_diff(&rhs));
                }
            }
        }
    }
    let line = format!("28 pairs × 20 isounits: {w:.1e} (tol 1e-10); f deviation {f_dev:.1e}");
    if w < 1e-10 && f_dev < 1e-12 { Ok(line) } else { Err(line) }
}

fn c8_dirac() -> Outcome {
    let d = DiracRep::build();
    let st = Signature::spacetime();
    let mut anti: f64 = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            let s = &(d.gamma(mu) * d.gamma(nu)) + &(d.gamma(nu) * d.gamma(mu));
            let eta = if mu != nu { 0.0 } else if mu == 0 { 2.0 } else { -2.0 };
            anti = anti.max(s.max_abs_diff(&ComplexMatrix::identity(4).scale(eta)));
        }
    }
    let mut r = rng(8);
    let mut hom: f64 = 0.0;
    for _ in 0..200 {
        let a = rand_mv(&mut r, st, 8);
        let b = rand_mv(&mut r, st, 8);
        hom = hom.max(d.rep(&(&a * &b)).unwrap().max_abs_diff(&(&d.rep(&a).unwrap() * &d.rep(&b).unwrap())));
    }
    let f = d.rep(&idempotent()).unwrap();
    let idem = (&f * &f).max_abs_diff(&f);
    let rank = f.rank(1e-10);
    let line = format!("anticommutation {anti:.1e}, homomorphism {hom:.1e}, rep(f)² − rep(f) {idem:.1e}, rank {rank}");
    if anti == 0.0 && hom < 1e-9 && idem < 1e-12 && rank == 2 { Ok(line) } else { Err(line) }
}

fn c9_su3_numbers() -> Outcome {
    let m = [2.25, 5.0, 90.0];
    let z = equal_mass_params(&m).unwrap();
    let alpha = z.params()[0];
    let g = 1012.5f64.cbrt();
    let iso = iso_mass_operator(&z, &m).unwrap();
    let iso_dev = iso.max_abs_diff(&ComplexMatrix::identity(3).scale(g)) / g;
    let mut exp_dev: f64 = 0.0;
    let ops = [
        (z.hypercharge().unwrap(), [1.0 / 6.0, 1.0 / 6.0, -1.0 / 3.0]),
        (z.isospin3().unwrap(), [0.5, -0.5, 0.0]),
        (iso, m),
    ];
    for (op, want) in &ops {
        for (s, w) in z.iso_states().iter().zip(want) {
            exp_dev = exp_dev.max((s.iso_expectation(op).unwrap() - w).norm());
        }
    }
    let line = format!("α = {alpha:.6}, iso-mass deviation {iso_dev:.1e}, expectation deviation {exp_dev:.1e}");
    if (alpha - 0.22407).abs() < 1e-4 && iso_dev < 1e-9 && exp_dev < 1e-12 { Ok(line) } else { Err(line) }
}

fn c10_su6() -> Outcome {
    let m = QuarkMassBounds::reference().central(FlavorGroup::Su6).unwrap();
    let z = equal_mass_params(&m).unwrap();
    let det = (z.determinant() - 1.0).abs();
    let geo = m.iter().product::<f64>().powf(1.0 / 6.0);
    let iso = iso_mass_operator(&z, &m).unwrap();
    let eq = iso.diagonal().iter().map(|x| (x.re - geo).abs() / geo).fold(0.0, f64::max);
    let rebuilt = decompose_mass(&m).unwrap().reconstruct(6).unwrap();
    let rec = rebuilt.max_abs_diff(&ComplexMatrix::from_real_diagonal(&m));
    let p = z.params();
    let chain = [
        m[0] / p[0],
        m[1] / p[1],
        m[2] / p[2],
        m[3] / p[3],
        m[4] / p[4],
        p.iter().product::<f64>() * m[5],
    ];
    let ch = chain.iter().map(|c| (c - chain[0]).abs() / chain[0]).fold(0.0, f64::max);
    let line = format!("det {det:.1e}, equal iso-mass {eq:.1e}, reconstruction {rec:.1e}, chain {ch:.1e}");
    if det < 1e-12 && eq < 1e-12 && rec < 1e-9 && ch < 1e-9 { Ok(line) } else { Err(line) }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isoclifford"))
}

fn reference_mass_file() -> tempfile::NamedTempFile {
    let text = r#"{
  "u": {"min": 1.5, "max": 3.0},
  "d": {"min": 3, "max": 7},
  "s": {"min": 70, "max": 110},
  "c": {"min": 1160, "max": 1340},
  "b": {"min": 4130, "max": 4270},
  "t": {"min": 170900, "max": 177500}
}
"#;
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), text).unwrap();
    f
}

fn c11_intervals() -> Outcome {
    // Corner oracle: α = (m_u² / (m_d m_s))^{1/3} is smallest at (u min, d max, s max).
    let lo = (1.5f64 * 1.5 / (7.0 * 110.0)).cbrt();
    let hi = (3.0f64 * 3.0 / (3.0 * 70.0)).cbrt();
    let iv = &param_intervals(&QuarkMassBounds::reference(), FlavorGroup::Su3).unwrap()[0];
    let oracle = (lo - 0.1430).abs().max((hi - 0.3499).abs());
    let lib = (iv.rigorous.lo - lo).abs().max((iv.rigorous.hi - hi).abs());

    let file = reference_mass_file();
    let mut printed = true;
    for (group, paper) in [
        ("su3", vec![[0.2204, 0.2638], [0.2768, 0.3057]]),
        (
            "su6",
            vec![[5.945e-3, 8.212e-3], [1.189e-2, 1.920e-2], [2.774e-1, 3.018e-1], [3.676, 4.598], [486.938, 677.379]],
        ),
    ] {
        let out = bin()
            .args(["flavor", "--group", group, "--intervals", "--masses"])
            .arg(file.path())
            .output()
            .unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let rows = v["intervals"].as_array().unwrap();
        printed &= rows.len() == paper.len();
        for (row, p) in rows.iter().zip(&paper) {
            printed &= row["paper"][0].as_f64() == Some(p[0]) && row["paper"][1].as_f64() == Some(p[1]);
            printed &= row["rigorous_match"].is_boolean() && row["joint_match"].is_boolean();
        }
    }
    let line = format!(
        "rigorous α = [{:.4}, {:.4}] vs [0.1430, 0.3499]: {oracle:.1e} (tol 1e-3), library vs corners {lib:.1e}, reference columns printed: {printed}",
        iv.rigorous.lo, iv.rigorous.hi
    );
    if oracle < 1e-3 && lib < 1e-15 && printed { Ok(line) } else { Err(line) }
}

/// `Σ x^k / k!` by plain summation.
fn taylor_exp(x: &Multivector) -> Multivector {
    let mut term = Multivector::one(x.signature());
    let mut sum = term.clone();
    for k in 1..60 {
        term = (&term * x).scale(1.0 / k as f64);
        sum = &sum + &term;
    }
    sum
}

fn c12_iso_exp() -> Outcome {
    let mut r = rng(12);
    let mut w: f64 = 0.0;
    for sig in [Signature::spacetime(), Signature::euclidean3()] {
        for _ in 0..10 {
            let ctx = rand_isounit(&mut r, sig);
            for _ in 0..50 {
                let a = rand_mv(&mut r, sig, 4);
                let a = a.scale(r.random_range(0.0..1.0) / a.l1_norm().max(1e-9));
                let want = &taylor_exp(&(&a * ctx.zeta_inv())) * ctx.zeta();
                w = w.max(ctx.iso_exp(&a).unwrap().max_abs_diff(&want));
            }
        }
    }
    within("500 samples per signature, max residual", w, 1e-9)
}

fn c13_end_to_end() -> Outcome {
    let start = Instant::now();
    let verify = bin().args(["verify", "--suite", "all"]).output().unwrap();
    let elapsed = start.elapsed();
    let file = reference_mass_file();
    let flavor = bin()
        .args(["flavor", "--group", "su6", "--intervals", "--masses"])
        .arg(file.path())
        .output()
        .unwrap();
    let text = String::from_utf8(flavor.stdout).unwrap();
    let roundtrip = serde_json::from_str::<isoclifford_cli::report::Report>(&text)
        .map(|r| r.render(isoclifford_cli::report::Format::Json) == text)
        .unwrap_or(false);
    let line = format!(
        "verify all exit {:?} in {:.1}s; flavor su6 exit {:?}, JSON round-trip {roundtrip}",
        verify.status.code(),
        elapsed.as_secs_f64(),
        flavor.status.code()
    );
    if verify.status.success() && elapsed < Duration::from_secs(60) && flavor.status.success() && roundtrip {
        Ok(line)
    } else {
        Err(line)
    }
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 13] = [
        (1, "octonion table", c1_octonion_table),
        (2, "ζ = e1 isotopes", c2_example1),
        (3, "[λ1, λ2]_ζ = iλ3", c3_example2),
        (4, "[aζ, bζ]_ζ = (ab − ba)ζ", c4_commutator_lift),
        (5, "lifted vector anticommutator", c5_lifted_metric),
        (6, "su(n) closure and iso/rigid constants", c6_su_n),
        (7, "iso Gell-Mann commutators", c7_iso_gell_mann),
        (8, "Dirac representation", c8_dirac),
        (9, "SU(3) flavor numbers", c9_su3_numbers),
        (10, "SU(6) flavor", c10_su6),
        (11, "interval report", c11_intervals),
        (12, "iso_exp closed form", c12_iso_exp),
        (13, "end to end", c13_end_to_end),
    ];
    let mut unexpected = 0;
    for (id, title, f) in criteria {
        let outcome = f();
        let expected_fail = EXPECTED_FAILURES.contains(&id);
        let (status, detail) = match (&outcome, expected_fail) {
            (Ok(d), false) => ("PASS", d),
            (Err(d), true) => ("FAIL (expected)", d),
            (Err(d), false) => {
                unexpected += 1;
                ("FAIL", d)
            }
            (Ok(d), true) => {
                unexpected += 1;
                ("PASS (unexpected)", d)
            }
        };
        println!("criterion {id:2} {status}: {title}: {detail}");
    }
    if unexpected > 0 {
        println!("{unexpected} criteria deviated from their expected outcome");
        std::process::exit(1);
    }
}
