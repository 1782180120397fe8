//! The unital algebra generated by two matrices: word bases, dimension,
//! and invariant-subspace closures.

use super::matrix::{Matrix, Vector};
use super::subspace::RowSpan;

/// A word in the two generators; `0` selects the first matrix, `1` the
/// second. The empty word is the identity.
pub type Word = Vec<u8>;

/// An independent set of words whose matrices span the generated algebra.
///
/// Words are enumerated level by level (all lengths k before k+1), each level
/// produced by prefixing a generator to the previous level's retained words;
/// a word is retained when its matrix is independent of everything before it.
pub struct WordBasis {
    pub words: Vec<Word>,
    pub matrices: Vec<Matrix>,
    span: RowSpan,
}

impl WordBasis {
    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn span(&self) -> &RowSpan {
        &self.span
    }
}

/// Enumerate words until the span of their matrices stabilizes.
pub fn word_basis(a: &Matrix, b: &Matrix) -> WordBasis {
    let n = a.dim();
    assert_eq!(n, b.dim(), "generators must have equal dimension");
    let full = n * n;
    let mut span = RowSpan::new(full);
    let identity = Matrix::identity(n);
    span.insert(identity.vectorize());
    let mut words: Vec<Word> = vec![Vec::new()];
    let mut matrices = vec![identity.clone()];
    // Frontier of words added in the last level; spanning-set growth only
    // ever comes from extending those.
    let mut frontier: Vec<(Word, Matrix)> = vec![(Vec::new(), identity)];
    while !frontier.is_empty() && span.dim() < full {
        let mut next = Vec::new();
        for (word, mat) in &frontier {
            for (g, gen) in [(0u8, a), (1u8, b)] {
                let extended = gen * mat;
                if span.insert(extended.vectorize()) {
                    let mut w = Vec::with_capacity(word.len() + 1);
                    w.push(g);
                    w.extend_from_slice(word);
                    words.push(w.clone());
                    matrices.push(extended.clone());
                    next.push((w, extended));
                }
                if span.dim() == full {
                    break;
                }
            }
        }
        frontier = next;
    }
    WordBasis {
        words,
        matrices,
        span,
    }
}

/// Dimension of the unital algebra generated by `a` and `b`. The value
/// `n²` certifies that no common invariant subspace exists over any field
/// extension; anything smaller refutes that over the algebraic closure.
pub fn generated_algebra_dim(a: &Matrix, b: &Matrix) -> usize {
    word_basis(a, b).dim()
}

/// Smallest subspace containing `seed` and invariant under both matrices.
pub fn invariant_closure(a: &Matrix, b: &Matrix, seed: &Vector) -> Vec<Vector> {
    let n = a.dim();
    let mut span = RowSpan::new(n);
    let mut frontier = Vec::new();
    if span.insert(seed.clone()) {
        frontier.push(seed.clone());
    }
    while let Some(v) = frontier.pop() {
        for m in [a, b] {
            let w = m.matvec(&v);
            if span.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    span.basis().to_vec()
}

/// Search the given seed vectors for one whose invariant closure is a proper
/// nonzero subspace; returns its basis. Rational seeds can miss subspaces
/// that only exist over an extension field, so `None` is inconclusive —
/// `generated_algebra_dim` is the decision procedure.
pub fn invariant_subspace_witness(
    a: &Matrix,
    b: &Matrix,
    seeds: &[Vector],
) -> Option<Vec<Vector>> {
    let n = a.dim();
    for seed in seeds {
        let closure = invariant_closure(a, b, seed);
        if !closure.is_empty() && closure.len() < n {
            return Some(closure);
        }
    }
    None
}
