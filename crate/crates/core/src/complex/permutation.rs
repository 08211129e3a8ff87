use std::fmt;

use crate::complex::{Complex, FaceSet, RelativeComplex, SimplicialComplex};
use crate::error::ComplexError;

/// A permutation of the vertex indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPermutation {
    image: Vec<usize>,
}

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        VertexPermutation { image: (0..n).collect() }
    }

    /// `image[i]` is where vertex `i` goes.
    pub fn from_images(image: Vec<usize>) -> Result<Self, ComplexError> {
        let mut seen = vec![false; image.len()];
        for &j in &image {
            if j >= image.len() || std::mem::replace(&mut seen[j], true) {
                return Err(ComplexError::NotAPermutation(format!("{image:?}")));
            }
        }
        Ok(VertexPermutation { image })
    }

    /// Builds a permutation of `0..n` from disjoint cycles, e.g. `[[0, 7], [2, 4], [6, 8]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, ComplexError> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &v) in cycle.iter().enumerate() {
                if v >= n || std::mem::replace(&mut touched[v], true) {
                    return Err(ComplexError::NotAPermutation(format!("cycles {cycles:?} on {n} vertices")));
                }
                image[v] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(VertexPermutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image.get(v).copied().unwrap_or(v)
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        VertexPermutation { image: inv }
    }

    fn check_domain(&self, k: &impl FaceSet) -> Result<(), ComplexError> {
        match k.ambient().vertex_set().max_vertex() {
            Some(m) if m >= self.image.len() => Err(ComplexError::NotAPermutation(format!(
                "permutation of {} vertices does not cover vertex {m}",
                self.image.len()
            ))),
            _ => Ok(()),
        }
    }

    pub fn apply_to(&self, k: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        self.check_domain(k)?;
        Ok(k.relabel(|v| self.apply(v)))
    }

    pub fn apply_to_relative(&self, r: &RelativeComplex) -> Result<RelativeComplex, ComplexError> {
        self.check_domain(r)?;
        Ok(r.relabel(|v| self.apply(v)))
    }

    pub fn apply_to_complex(&self, k: &Complex) -> Result<Complex, ComplexError> {
        self.check_domain(k)?;
        Ok(k.relabel(|v| self.apply(v)))
    }

    /// True when the facet set is fixed setwise.
    pub fn is_automorphism(&self, k: &SimplicialComplex) -> Result<bool, ComplexError> {
        Ok(self.apply_to(k)?.facets() == k.facets())
    }
}

impl fmt::Display for VertexPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.image.len()];
        let mut wrote = false;
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v.to_string());
                v = self.image[v];
            }
            write!(f, "({})", cycle.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
