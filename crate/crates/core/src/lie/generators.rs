use std::fmt;

use num_complex::Complex64;

use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::isotopy::IsoContext;
use crate::linalg::{re, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraLabel {
    Su(usize),
    Su3Case1,
    Su3Case2,
}

impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraLabel::Su(n) => write!(f, "su({n})"),
            AlgebraLabel::Su3Case1 => write!(f, "su(3) case 1"),
            AlgebraLabel::Su3Case2 => write!(f, "su(3) case 2"),
        }
    }
}

/// An ordered family of generators, rigid or lifted by an isounit.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub label: AlgebraLabel,
    pub signature: Signature,
    pub names: Vec<String>,
    pub generators: Vec<Multivector>,
    pub context: Option<IsoContext>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_iso(&self) -> bool {
        self.context.is_some()
    }

    /// `[G_i, G_j]`, or `[G_i, G_j]_ζ` for a lifted set.
    pub fn bracket(&self, i: usize, j: usize) -> Result<Multivector> {
        let (a, b) = (&self.generators[i], &self.generators[j]);
        match &self.context {
            Some(ctx) => ctx.iso_commutator(a, b),
            None => a.commutator(b),
        }
    }

    /// The unit of the product in use: ζ, or 1.
    pub fn unit(&self) -> Multivector {
        match &self.context {
            Some(ctx) => ctx.zeta().clone(),
            None => Multivector::one(self.signature),
        }
    }
}

/// Builds wedges of basis vectors, lifting them first when an isounit is given.
struct Wedger<'a> {
    signature: Signature,
    ctx: Option<&'a IsoContext>,
}

impl Wedger<'_> {
    fn new(signature: Signature, ctx: Option<&IsoContext>) -> Result<Wedger<'_>> {
        if let Some(c) = ctx {
            if c.signature() != signature {
                return Err(Error::SignatureMismatch {
                    left: signature,
                    right: c.signature(),
                });
            }
        }
        Ok(Wedger { signature, ctx })
    }

    fn vector(&self, i: usize) -> Result<Multivector> {
        let e = Multivector::basis_vector(self.signature, i)?;
        match self.ctx {
            Some(c) => c.lift(&e),
            None => Ok(e),
        }
    }

    /// `e_{i₁} ∧ e_{i₂} ∧ …` (lifted and iso-wedged in the iso case).
    fn wedge(&self, indices: &[usize]) -> Result<Multivector> {
        let factors = indices
            .iter()
            .map(|&i| self.vector(i))
            .collect::<Result<Vec<_>>>()?;
        match self.ctx {
            Some(c) => c.iso_wedge_chain(&factors),
            None => {
                let (first, rest) = factors.split_first().expect("non-empty index list");
                rest.iter().try_fold(first.clone(), |acc, v| acc.wedge(v))
            }
        }
    }

    fn combine(&self, parts: &[(Complex64, &[usize])]) -> Result<Multivector> {
        parts.iter().try_fold(Multivector::zero(self.signature), |acc, (c, idx)| {
            acc.try_add(&self.wedge(idx)?.scale(*c))
        })
    }
}

/// The `n² − 1` generators `E^{pq}`, `F^{pq}` (p < q) and `H^r` of su(n) in
/// `Cl(2n,0)`, in that order.
///
/// `H^r = e_r ∧ e_{r+n} − e_{r+1} ∧ e_{r+n+1}`. Indices above are 1-based;
/// `e_k` is the basis vector with index `k − 1`.
pub fn su_n_generators(n: usize, ctx: Option<&IsoContext>) -> Result<GeneratorSet> {
    if !(2..=6).contains(&n) {
        return Err(Error::OutOfRange { n, min: 2, max: 6 });
    }
    let sig = Signature::new(2 * n, 0)?;
    let w = Wedger::new(sig, ctx)?;
    let one = re(1.0);
    let mut names = Vec::new();
    let mut generators = Vec::new();
    let e = |k: usize| k - 1;
    for p in 1..=n {
        for q in p + 1..=n {
            names.push(format!("E{p}{q}"));
            generators.push(w.combine(&[
                (one, &[e(p), e(q)]),
                (one, &[e(p + n), e(q + n)]),
            ])?);
        }
    }
    for p in 1..=n {
        for q in p + 1..=n {
            names.push(format!("F{p}{q}"));
            generators.push(w.combine(&[
                (one, &[e(p), e(q + n)]),
                (-one, &[e(p + n), e(q)]),
            ])?);
        }
    }
    for r in 1..n {
        names.push(format!("H{r}"));
        generators.push(w.combine(&[
            (one, &[e(r), e(r + n)]),
            (-one, &[e(r + 1), e(r + n + 1)]),
        ])?);
    }
    Ok(GeneratorSet {
        label: AlgebraLabel::Su(n),
        signature: sig,
        names,
        generators,
        context: ctx.cloned(),
    })
}

/// The 35 generators of su(6) in `Cl(12,0)`: fifteen `E`, fifteen `F`, five `H`.
pub fn su6_generators(ctx: Option<&IsoContext>) -> Result<GeneratorSet> {
    su_n_generators(6, ctx)
}

/// `e_r ∧ e_{r+n} − e_{r+n+1} ∧ e_{r+n+1}` taken literally. Its second term
/// is a vector wedged with itself.
pub fn printed_cartan_generator(n: usize, r: usize) -> Result<Multivector> {
    if !(2..=6).contains(&n) || r == 0 || r >= n {
        return Err(Error::OutOfRange { n, min: 2, max: 6 });
    }
    let sig = Signature::new(2 * n, 0)?;
    let w = Wedger::new(sig, None)?;
    w.combine(&[(re(1.0), &[r - 1, r + n - 1]), (re(-1.0), &[r + n, r + n])])
}

fn su3_family(
    label: AlgebraLabel,
    prefix: &str,
    ctx: Option<&IsoContext>,
    spec: &[Vec<(Complex64, &[usize])>],
) -> Result<GeneratorSet> {
    let sig = Signature::spacetime();
    let w = Wedger::new(sig, ctx)?;
    let generators = spec
        .iter()
        .map(|parts| w.combine(parts))
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet {
        label,
        signature: sig,
        names: (1..=spec.len()).map(|a| format!("{prefix}{a}")).collect(),
        generators,
        context: ctx.cloned(),
    })
}

/// `λ¹ … λ⁸` in `Cl(1,3) ⊗ C`, e.g. `λ¹ = ½(e0 ∧ e1 + i e2 ∧ e3)`.
pub fn su3_case1_generators(ctx: Option<&IsoContext>) -> Result<GeneratorSet> {
    let h = re(0.5);
    let ih = I * 0.5;
    let s3 = 3f64.sqrt();
    su3_family(
        AlgebraLabel::Su3Case1,
        "lambda",
        ctx,
        &[
            vec![(h, &[0, 1]), (ih, &[2, 3])],
            vec![(h, &[0, 2]), (-ih, &[1, 3])],
            vec![(h, &[0, 3]), (ih, &[1, 2])],
            vec![(h, &[0]), (ih, &[0, 1, 2])],
            vec![(ih, &[3]), (-h, &[1, 2, 3])],
            vec![(h, &[0, 2, 3]), (ih, &[2])],
            vec![(ih, &[1]), (ih, &[0, 1, 3])],
            vec![
                (I / s3, &[0, 1, 2, 3]),
                (re(1.0 / (2.0 * s3)), &[0, 3]),
                (-I / (2.0 * s3), &[1, 2]),
            ],
        ],
    )
}

/// `ξ¹ … ξ⁸` in `Cl(1,3) ⊗ C`, e.g. `ξ¹ = −(i/2)(e2 ∧ e3 + i e0 ∧ e2 ∧ e3)`.
pub fn su3_case2_generators(ctx: Option<&IsoContext>) -> Result<GeneratorSet> {
    let h = re(0.5);
    let ih = I * 0.5;
    let k = I / (2.0 * 3f64.sqrt());
    su3_family(
        AlgebraLabel::Su3Case2,
        "xi",
        ctx,
        &[
            // −(i/2)(e23 + i e023) = −(i/2)e23 + ½ e023
            vec![(-ih, &[2, 3]), (h, &[0, 2, 3])],
            vec![(ih, &[1, 3]), (ih, &[0, 1, 3])],
            vec![(ih, &[1, 2]), (ih, &[0, 1, 2])],
            vec![(h, &[0, 1, 2, 3]), (ih, &[0, 3])],
            vec![(h, &[3]), (-ih, &[1, 2, 3])],
            vec![(h, &[2]), (ih, &[0, 1])],
            vec![(h, &[1]), (-ih, &[0, 2])],
            // (i/(2√3))(2e0 + i e12 − i e012)
            vec![(k * 2.0, &[0]), (k * I, &[1, 2]), (-k * I, &[0, 1, 2])],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::BasisBlade;

    #[test]
    fn generator_counts() {
        for n in 2..=6 {
            assert_eq!(su_n_generators(n, None).unwrap().len(), n * n - 1);
        }
        assert!(matches!(su_n_generators(7, None), Err(Error::OutOfRange { .. })));
        assert!(matches!(su_n_generators(1, None), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn su2_layout() {
        let gs = su_n_generators(2, None).unwrap();
        assert_eq!(gs.names, ["E12", "F12", "H1"]);
        // E12 = e1∧e2 + e3∧e4 in 1-based labels
        let sig = gs.signature;
        let expected = &Multivector::blade(sig, BasisBlade(0b0011), 1.0)
            + &Multivector::blade(sig, BasisBlade(0b1100), 1.0);
        assert!(gs.generators[0].approx_eq(&expected, 0.0));
    }

    #[test]
    fn printed_cartan_keeps_only_first_term() {
        let literal = printed_cartan_generator(3, 1).unwrap();
        assert_eq!(literal.term_count(), 1);
        assert_eq!(literal.coefficient(BasisBlade(0b1001)), re(1.0));
    }

    #[test]
    fn first_case1_generator() {
        let gs = su3_case1_generators(None).unwrap();
        let sig = gs.signature;
        let expected = &Multivector::blade(sig, BasisBlade(0b0011), 0.5)
            + &Multivector::blade(sig, BasisBlade(0b1100), I * 0.5);
        assert!(gs.generators[0].approx_eq(&expected, 0.0));
    }
}
