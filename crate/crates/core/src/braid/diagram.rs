use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::BraidError;

/// A planar (noncrossing) perfect matching on `2n` boundary points.
///
/// Points `0..n` run along the top left to right, points `n..2n` along the
/// bottom left to right. `partner[p]` is the point joined to `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram {
    partner: Vec<u8>,
}

impl TLDiagram {
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| if p < n { (p + n) as u8 } else { (p - n) as u8 }).collect();
        Self { partner }
    }

    /// The cup-cap diagram `U_i` joining strands `i-1` and `i` (1-based `i`).
    pub fn cup_cap(n: usize, i: usize) -> Result<Self, BraidError> {
        if i == 0 || i >= n {
            return Err(BraidError::IndexOutOfRange { index: i, strands: n });
        }
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[n + a] = (n + b) as u8;
        d.partner[n + b] = (n + a) as u8;
        Ok(d)
    }

    /// Build from a list of pairs; checks that it is a noncrossing perfect matching.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, BraidError> {
        let mut partner = vec![u8::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || a == b || partner[a] != u8::MAX || partner[b] != u8::MAX {
                return Err(BraidError::InvalidDiagram);
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        let d = Self { partner };
        if pairs.len() != n || !d.is_planar() {
            return Err(BraidError::InvalidDiagram);
        }
        Ok(d)
    }

    pub fn strands(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    /// Pairs `(a, b)` with `a < b`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&p| p < self.partner(p))
            .map(|p| (p, self.partner(p)))
            .collect()
    }

    /// Position of a point when walking the boundary as a circle: top left to
    /// right, then bottom right to left.
    fn circle_position(&self, p: usize) -> usize {
        let n = self.strands();
        if p < n {
            p
        } else {
            3 * n - 1 - p
        }
    }

    pub fn is_planar(&self) -> bool {
        let pairs: Vec<(usize, usize)> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (self.circle_position(a), self.circle_position(b));
                (x.min(y), x.max(y))
            })
            .collect();
        pairs.iter().all(|&(a, b)| pairs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Mirror image top ↔ bottom (the adjoint of the diagram).
    pub fn adjoint(&self) -> Self {
        let n = self.strands();
        let flip = |p: usize| if p < n { p + n } else { p - n };
        let mut partner = vec![0u8; 2 * n];
        for p in 0..2 * n {
            partner[flip(p)] = flip(self.partner(p)) as u8;
        }
        Self { partner }
    }

    /// Add a straight strand on the left.
    pub fn shift(&self) -> Self {
        let n = self.strands();
        let m = n + 1;
        let map = |p: usize| if p < n { p + 1 } else { p + 2 };
        let mut partner = vec![0u8; 2 * m];
        partner[0] = m as u8;
        partner[m] = 0;
        for p in 0..2 * n {
            partner[map(p)] = map(self.partner(p)) as u8;
        }
        Self { partner }
    }

    /// Stack `self` on top of `other`: `self`'s bottom meets `other`'s top.
    /// Returns the resulting diagram and the number of closed loops.
    pub fn compose(&self, other: &Self) -> (Self, usize) {
        let n = self.strands();
        assert_eq!(n, other.strands(), "strand mismatch");
        // external points: self top 0..n -> result 0..n, other bottom n..2n -> result n..2n
        let mut partner = vec![0u8; 2 * n];
        let mut seen_mid = vec![false; n];

        let mut done = vec![false; 2 * n];
        for ext in 0..2 * n {
            if done[ext] {
                continue;
            }
            let (mut in_self, mut p) = if ext < n { (true, ext) } else { (false, ext) };
            let end = loop {
                let q = if in_self { self.partner(p) } else { other.partner(p) };
                if in_self {
                    if q < n {
                        break q;
                    }
                    seen_mid[q - n] = true;
                    in_self = false;
                    p = q - n;
                } else {
                    if q >= n {
                        break q;
                    }
                    seen_mid[q] = true;
                    in_self = true;
                    p = q + n;
                }
            };
            partner[ext] = end as u8;
            partner[end] = ext as u8;
            done[ext] = true;
            done[end] = true;
        }

        // Remaining middle points lie on closed loops.
        let mut loops = 0;
        for k in 0..n {
            if seen_mid[k] {
                continue;
            }
            loops += 1;
            let mut m = k;
            loop {
                seen_mid[m] = true;
                // from middle point m go through `other` (its top point m)
                let q = other.partner(m);
                debug_assert!(q < n);
                seen_mid[q] = true;
                // then through `self` from its bottom point q
                let r = self.partner(q + n) - n;
                if r == k {
                    break;
                }
                m = r;
            }
        }
        (Self { partner }, loops)
    }

    /// Number of loops when the top is joined to the bottom (Markov closure).
    pub fn closure_loops(&self) -> usize {
        let n = self.strands();
        let mut seen = vec![false; n];
        let mut loops = 0;
        for k in 0..n {
            if seen[k] {
                continue;
            }
            loops += 1;
            // start at top point k, walk through the diagram and around the closure
            let mut p = k;
            loop {
                seen[p % n] = true;
                let q = self.partner(p);
                seen[q % n] = true;
                // closure joins top j with bottom n + j
                let next = if q < n { q + n } else { q - n };
                if next == k {
                    break;
                }
                p = next;
            }
        }
        loops
    }
}

impl fmt::Debug for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TL{:?}", self.pairs())
    }
}

/// All planar diagrams on `n` strands, in sorted order. There are Catalan(n).
pub fn all_diagrams(n: usize) -> Vec<TLDiagram> {
    // Match points around the circle; position -> point label.
    let label = |pos: usize| if pos < n { pos } else { 3 * n - 1 - pos };
    let mut out = Vec::new();
    // Noncrossing matchings of circle positions: the first position pairs
    // with some later one, splitting the rest into inside and outside.
    fn gen(positions: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if positions.is_empty() {
            return vec![Vec::new()];
        }
        let mut res = Vec::new();
        for k in (1..positions.len()).step_by(2) {
            let inside = gen(&positions[1..k]);
            let outside = gen(&positions[k + 1..]);
            for i in &inside {
                for o in &outside {
                    let mut m = vec![(positions[0], positions[k])];
                    m.extend_from_slice(i);
                    m.extend_from_slice(o);
                    res.push(m);
                }
            }
        }
        res
    }
    let positions: Vec<usize> = (0..2 * n).collect();
    let res = gen(&positions);
    for pairs in res {
        let mut partner = vec![0u8; 2 * n];
        for (a, b) in pairs {
            let (x, y) = (label(a), label(b));
            partner[x] = y as u8;
            partner[y] = x as u8;
        }
        out.push(TLDiagram { partner });
    }
    out.sort();
    out
}

/// Formal complex combination of diagrams on `n` strands with loop value `δ`.
#[derive(Clone, Debug, PartialEq)]
pub struct TLElement {
    n: usize,
    delta: f64,
    terms: BTreeMap<TLDiagram, Complex64>,
}

impl TLElement {
    pub fn zero(n: usize, delta: f64) -> Self {
        Self { n, delta, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize, delta: f64) -> Self {
        Self::from_diagram(TLDiagram::identity(n), delta, Complex64::new(1.0, 0.0))
    }

    pub fn from_diagram(d: TLDiagram, delta: f64, coeff: Complex64) -> Self {
        let n = d.strands();
        Self { n, delta, terms: BTreeMap::from([(d, coeff)]) }
    }

    /// `E_i = U_i / δ`, the projector normalization.
    pub fn e(n: usize, i: usize, delta: f64) -> Result<Self, BraidError> {
        Ok(Self::from_diagram(TLDiagram::cup_cap(n, i)?, delta, Complex64::new(1.0 / delta, 0.0)))
    }

    pub fn strands(&self) -> usize {
        self.n
    }
    pub fn delta(&self) -> f64 {
        self.delta
    }
    pub fn terms(&self) -> &BTreeMap<TLDiagram, Complex64> {
        &self.terms
    }
    pub fn coefficient(&self, d: &TLDiagram) -> Complex64 {
        self.terms.get(d).copied().unwrap_or_default()
    }

    fn check(&self, other: &Self) -> Result<(), BraidError> {
        if self.n != other.n || self.delta != other.delta {
            return Err(BraidError::StrandMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, BraidError> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            *out.terms.entry(d.clone()).or_default() += c;
        }
        out.terms.retain(|_, c| *c != Complex64::default());
        Ok(out)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| *c *= s);
        out.terms.retain(|_, c| *c != Complex64::default());
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, BraidError> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Bilinear extension of diagram stacking; each closed loop gives `δ`.
    pub fn mul(&self, other: &Self) -> Result<Self, BraidError> {
        self.check(other)?;
        let mut powers = vec![1.0];
        let mut acc: std::collections::HashMap<TLDiagram, Complex64> = std::collections::HashMap::new();
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let (d, loops) = da.compose(db);
                while powers.len() <= loops {
                    powers.push(powers.last().unwrap() * self.delta);
                }
                *acc.entry(d).or_default() += ca * cb * powers[loops];
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| *c != Complex64::default()).collect();
        Ok(Self { n: self.n, delta: self.delta, terms })
    }

    /// Conjugate-linear adjoint: mirror each diagram, conjugate coefficients.
    pub fn adjoint(&self) -> Self {
        let terms = self.terms.iter().map(|(d, c)| (d.adjoint(), c.conj())).collect();
        Self { n: self.n, delta: self.delta, terms }
    }

    /// The shift `ρ`: one more strand on the left.
    pub fn shift(&self) -> Self {
        let terms = self.terms.iter().map(|(d, c)| (d.shift(), *c)).collect();
        Self { n: self.n + 1, delta: self.delta, terms }
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn distance(&self, other: &Self) -> Result<f64, BraidError> {
        Ok(self.sub(other)?.max_abs())
    }
}

/// Normalized Markov trace: `tr(D) = δ^{loops - n}`, extended linearly.
pub fn markov_trace(x: &TLElement) -> Complex64 {
    let n = x.strands() as i32;
    x.terms()
        .iter()
        .map(|(d, c)| c * x.delta().powi(d.closure_loops() as i32 - n))
        .sum()
}
