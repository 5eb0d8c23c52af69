//! Finite groups of invertible rational matrices.

use std::collections::{HashSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::poly::Polynomial;

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// The full element list `A_1, ..., A_h` of a finite matrix group.
///
/// Elements are kept in breadth-first discovery order starting from the
/// identity, so element indices are stable and reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGroup {
    dim: usize,
    elements: Vec<RationalMatrix>,
}

impl MatrixGroup {
    pub fn trivial(dim: usize) -> Self {
        MatrixGroup {
            dim,
            elements: vec![RationalMatrix::identity(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[RationalMatrix] {
        &self.elements
    }

    /// Element `k` (zero-based).
    pub fn element(&self, k: usize) -> &RationalMatrix {
        &self.elements[k]
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        self.elements.iter().any(|e| e == m)
    }
}

/// Smallest product-closed set containing the identity and `generators`.
///
/// Breadth-first from the identity; each dequeued element `g` is extended by
/// `g * s` for every generator `s` in the given order. `dimension` is only
/// needed when `generators` is empty.
pub fn group_closure(
    generators: &[RationalMatrix],
    dimension: Option<usize>,
    cap: usize,
) -> Result<MatrixGroup> {
    if cap == 0 {
        return Err(Error::Domain("closure cap must be at least 1".into()));
    }
    let dim = match (generators.first(), dimension) {
        (Some(g), Some(d)) => {
            Error::check_dim(d, g.dim())?;
            d
        }
        (Some(g), None) => g.dim(),
        (None, Some(d)) => d,
        (None, None) => return Err(Error::Underspecified),
    };
    for (index, g) in generators.iter().enumerate() {
        Error::check_dim(dim, g.dim())?;
        if g.determinant().is_zero() {
            return Err(Error::InvalidGenerator { index });
        }
    }

    let identity = RationalMatrix::identity(dim);
    let mut seen: HashSet<RationalMatrix> = HashSet::new();
    let mut elements = vec![identity.clone()];
    let mut queue = VecDeque::from([identity.clone()]);
    seen.insert(identity);

    while let Some(g) = queue.pop_front() {
        for s in generators {
            let next = &g * s;
            if seen.contains(&next) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::NotFiniteWithinCap { cap });
            }
            seen.insert(next.clone());
            elements.push(next.clone());
            queue.push_back(next);
        }
    }
    Ok(MatrixGroup { dim, elements })
}

/// `p(g x)`.
pub fn act(g: &RationalMatrix, p: &Polynomial) -> Result<Polynomial> {
    p.linear_substitute(g)
}
