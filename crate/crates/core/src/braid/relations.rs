use num_complex::Complex64;

use super::diagram::{all_diagrams, TLElement};
use super::BraidError;
use crate::linalg::{max_abs_diff, CMatrix};

/// Which defining relations to test.
#[derive(Clone, Debug)]
pub enum RelationSet {
    /// `g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}` and far commutativity.
    Artin,
    /// `g² = (t-1) g + t` for every generator.
    Hecke { t: Complex64 },
    /// Braid generators `b_i` (the input list) against transpositions `t_i`.
    MixedGinf { transpositions: Vec<CMatrix> },
    /// Cubic relation, the spectral projector `E` of eigenvalue `μ₃`, and
    /// `E_i E_{i±1} E_i ∝ E_i`.
    BirmanWenzl { mu: [Complex64; 3] },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    /// `(relation name, max residual)` per family checked.
    pub residuals: Vec<(String, f64)>,
}

impl RelationReport {
    pub fn max(&self) -> f64 {
        self.residuals.iter().map(|r| r.1).fold(0.0, f64::max)
    }
}

fn artin_residuals(g: &[CMatrix], name: &str, out: &mut Vec<(String, f64)>) {
    let mut braid: f64 = 0.0;
    let mut far: f64 = 0.0;
    for i in 0..g.len() {
        for j in 0..g.len() {
            if j == i + 1 {
                braid = braid.max(max_abs_diff(&(&g[i] * &g[j] * &g[i]), &(&g[j] * &g[i] * &g[j])));
            } else if j >= i + 2 {
                far = far.max(max_abs_diff(&(&g[i] * &g[j]), &(&g[j] * &g[i])));
            }
        }
    }
    out.push((format!("{name}:braid"), braid));
    out.push((format!("{name}:far"), far));
}

pub fn relation_check(generators: &[CMatrix], set: &RelationSet) -> Result<RelationReport, BraidError> {
    let dim = generators.first().map_or(0, CMatrix::nrows);
    let all_square = |ms: &[CMatrix]| ms.iter().all(|m| m.nrows() == dim && m.ncols() == dim);
    if !all_square(generators) {
        return Err(BraidError::ShapeMismatch);
    }
    let id = CMatrix::identity(dim, dim);
    let mut out = Vec::new();
    match set {
        RelationSet::Artin => artin_residuals(generators, "artin", &mut out),
        RelationSet::Hecke { t } => {
            let r = generators
                .iter()
                .map(|g| max_abs_diff(&(g * g), &(g * (t - 1.0) + &id * *t)))
                .fold(0.0, f64::max);
            out.push(("hecke:quadratic".into(), r));
        }
        RelationSet::MixedGinf { transpositions: t } => {
            if !all_square(t) || t.len() != generators.len() {
                return Err(BraidError::ShapeMismatch);
            }
            let b = generators;
            artin_residuals(b, "b", &mut out);
            artin_residuals(t, "t", &mut out);
            let inv = t.iter().map(|ti| max_abs_diff(&(ti * ti), &id)).fold(0.0, f64::max);
            out.push(("t:involution".into(), inv));
            let (mut far, mut m1, mut m2): (f64, f64, f64) = (0.0, 0.0, 0.0);
            for i in 0..b.len() {
                for j in 0..b.len() {
                    let gap = i.abs_diff(j);
                    if gap >= 2 {
                        far = far.max(max_abs_diff(&(&b[i] * &t[j]), &(&t[j] * &b[i])));
                    } else if gap == 1 {
                        m1 = m1.max(max_abs_diff(&(&b[i] * &t[j] * &t[i]), &(&t[j] * &t[i] * &b[j])));
                        m2 = m2.max(max_abs_diff(&(&b[i] * &b[j] * &t[i]), &(&t[j] * &b[i] * &b[j])));
                    }
                }
            }
            out.push(("mixed:far".into(), far));
            out.push(("mixed:btt".into(), m1));
            out.push(("mixed:bbt".into(), m2));
        }
        RelationSet::BirmanWenzl { mu } => {
            let [m1, m2, m3] = *mu;
            artin_residuals(generators, "artin", &mut out);
            let mut cubic: f64 = 0.0;
            let mut idem: f64 = 0.0;
            let mut eig: f64 = 0.0;
            let mut es = Vec::new();
            for g in generators {
                let p = (g - &id * m1) * (g - &id * m2) * (g - &id * m3);
                cubic = cubic.max(p.iter().map(|z| z.norm()).fold(0.0, f64::max));
                let ginv = g.clone().try_inverse().ok_or(BraidError::ShapeMismatch)?;
                let e = (g - &id * (m1 + m2) + ginv * (m1 * m2)) * (m3 / ((m3 - m1) * (m3 - m2)));
                idem = idem.max(max_abs_diff(&(&e * &e), &e));
                eig = eig.max(max_abs_diff(&(&e * g), &(&e * m3)));
                es.push(e);
            }
            // E_i E_j E_i = c E_i with one scalar c for all neighbours
            let mut prop: f64 = 0.0;
            for i in 0..es.len() {
                for j in [i.wrapping_sub(1), i + 1] {
                    if j >= es.len() {
                        continue;
                    }
                    let lhs = &es[i] * &es[j] * &es[i];
                    let denom = es[i].iter().map(|z| z.norm_sqr()).sum::<f64>();
                    if denom == 0.0 {
                        continue;
                    }
                    let c: Complex64 =
                        es[i].iter().zip(lhs.iter()).map(|(a, b)| a.conj() * b).sum::<Complex64>() / denom;
                    prop = prop.max(max_abs_diff(&lhs, &(&es[i] * c)));
                }
            }
            out.push(("bw:cubic".into(), cubic));
            out.push(("bw:idempotent".into(), idem));
            out.push(("bw:eigen".into(), eig));
            out.push(("bw:tl".into(), prop));
        }
    }
    Ok(RelationReport { residuals: out })
}

/// Matrices of left multiplication by `elements` on the diagram basis.
pub fn regular_representation(elements: &[TLElement]) -> Result<Vec<CMatrix>, BraidError> {
    let Some(first) = elements.first() else { return Ok(Vec::new()) };
    let (n, delta) = (first.strands(), first.delta());
    let basis = all_diagrams(n);
    let index: std::collections::HashMap<_, _> = basis.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
    elements
        .iter()
        .map(|x| {
            let mut m = CMatrix::zeros(basis.len(), basis.len());
            for (col, d) in basis.iter().enumerate() {
                let prod = x.mul(&TLElement::from_diagram(d.clone(), delta, Complex64::new(1.0, 0.0)))?;
                for (dd, c) in prod.terms() {
                    m[(index[dd], col)] += c;
                }
            }
            Ok(m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::markov::braid_generator;
    use crate::braid::params::HeckeParams;
    use crate::linalg::c;

    #[test]
    fn identity_generators() {
        let g = vec![CMatrix::identity(3, 3); 4];
        assert_eq!(relation_check(&g, &RelationSet::Artin).unwrap().max(), 0.0);
        let r = relation_check(&g, &RelationSet::MixedGinf { transpositions: g.clone() }).unwrap();
        assert_eq!(r.max(), 0.0);
    }

    #[test]
    fn abelian_mixed_family() {
        let w = Complex64::from_polar(1.0, 0.7);
        let b = vec![CMatrix::from_element(1, 1, w); 4];
        let t = vec![CMatrix::from_element(1, 1, c(-1.0, 0.0)); 4];
        assert_eq!(relation_check(&b, &RelationSet::MixedGinf { transpositions: t }).unwrap().max(), 0.0);
    }

    #[test]
    fn tl3_regular_rep_is_hecke() {
        let p = HeckeParams::from_q(Some(5), 1.0);
        let gens: Vec<TLElement> = (1..=2).map(|k| braid_generator(3, k, false, &p).unwrap()).collect();
        let mats = regular_representation(&gens).unwrap();
        assert_eq!(mats[0].nrows(), 5);
        assert!(relation_check(&mats, &RelationSet::Artin).unwrap().max() < 1e-10);
        // normalize to the Hecke form g = -ε/λ₂
        let hecke: Vec<CMatrix> = mats.iter().map(|m| m * (-p.lambda2.inv())).collect();
        assert!(relation_check(&hecke, &RelationSet::Hecke { t: p.t() }).unwrap().max() < 1e-10);
    }

    #[test]
    fn birman_wenzl_on_tl_quotient() {
        let p = HeckeParams::from_q(Some(6), 1.0);
        let gens: Vec<TLElement> = (1..=3).map(|k| braid_generator(4, k, false, &p).unwrap()).collect();
        let mats = regular_representation(&gens).unwrap();
        let mu = [p.lambda1(), c(0.3, 0.9), p.lambda2];
        let r = relation_check(&mats, &RelationSet::BirmanWenzl { mu }).unwrap();
        assert!(r.max() < 1e-9, "{r:?}");
        let wrong = [p.lambda1(), c(0.3, 0.9), c(2.0, 0.0)];
        assert!(relation_check(&mats, &RelationSet::BirmanWenzl { mu: wrong }).unwrap().max() > 1e-3);
    }
}
