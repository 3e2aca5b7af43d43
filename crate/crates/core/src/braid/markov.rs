use num_complex::Complex64;

use super::diagram::{markov_trace, TLElement};
use super::params::HeckeParams;
use super::BraidError;

/// `g_k = λ₁(1 - E_k) + λ₂E_k` (or its inverse) on `n` strands.
pub fn braid_generator(n: usize, k: usize, inverse: bool, params: &HeckeParams) -> Result<TLElement, BraidError> {
    let delta = params.delta();
    let e = TLElement::e(n, k, delta)?;
    let one = TLElement::identity(n, delta);
    let (l1, l2) = if inverse {
        (params.lambda1().inv(), params.lambda2.inv())
    } else {
        (params.lambda1(), params.lambda2)
    };
    one.sub(&e)?.scale(l1).add(&e.scale(l2))
}

/// Strand count needed for a word: `max|k| + 1`.
pub fn strands_for(word: &[i32]) -> usize {
    word.iter().map(|k| k.unsigned_abs() as usize).max().unwrap_or(0) + 1
}

/// Product of the generators in `word` (`k > 0` is `g_k`, `k < 0` its inverse).
pub fn braid_word_element(word: &[i32], n: usize, params: &HeckeParams) -> Result<TLElement, BraidError> {
    let mut x = TLElement::identity(n, params.delta());
    for &k in word {
        let idx = k.unsigned_abs() as usize;
        if k == 0 || idx >= n {
            return Err(BraidError::IndexOutOfRange { index: idx, strands: n });
        }
        x = x.mul(&braid_generator(n, idx, k < 0, params)?)?;
    }
    Ok(x)
}

/// Normalized Markov trace of a braid word on `n` strands.
pub fn braid_markov_trace(word: &[i32], n: usize, params: &HeckeParams) -> Result<Complex64, BraidError> {
    Ok(markov_trace(&braid_word_element(word, n, params)?))
}
