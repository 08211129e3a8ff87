use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::FaceSet;

/// Face counts `(f₋₁, f₀, …, f_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FVector(pub Vec<i64>);

/// `(h₀, …, h_{d+1})`, related to the f-vector by
/// `h_k = Σ_{i=0}^{k} (−1)^{k−i} C(d+1−i, k−i) f_{i−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HVector(pub Vec<i64>);

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl FVector {
    /// Counts faces by dimension. The vector runs up to the largest face's
    /// dimension; a face set without faces gives the empty vector.
    pub fn of<K: FaceSet + ?Sized>(k: &K) -> FVector {
        let faces = k.faces();
        let Some(top) = faces.last() else {
            return FVector(Vec::new());
        };
        let mut counts = vec![0i64; top.len() + 1];
        for f in &faces {
            counts[f.len()] += 1;
        }
        FVector(counts)
    }

    /// `f_i`, for `i ≥ −1`; zero past the end.
    pub fn get(&self, i: i32) -> i64 {
        usize::try_from(i + 1).ok().and_then(|j| self.0.get(j)).copied().unwrap_or(0)
    }

    /// `d`, with `d + 2` entries in the vector.
    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 2
    }

    pub fn to_h(&self) -> HVector {
        let d = self.dim() as i64;
        let h = (0..=d + 1)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(d + 1 - i, k - i) * self.0[i as usize]
                    })
                    .sum()
            })
            .collect();
        HVector(h)
    }

    /// Entrywise `a·self + b·other`, padding the shorter vector with zeros.
    pub fn combine(&self, a: i64, other: &FVector, b: i64) -> FVector {
        let n = self.0.len().max(other.0.len());
        let at = |v: &FVector, i: usize| v.0.get(i).copied().unwrap_or(0);
        FVector((0..n).map(|i| a * at(self, i) + b * at(other, i)).collect())
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl HVector {
    /// Inverse transform: `f_{k−1} = Σ_{i=0}^{k} C(d+1−i, k−i) h_i`.
    pub fn to_f(&self) -> FVector {
        let d = self.0.len() as i64 - 2;
        let f = (0..=d + 1)
            .map(|k| (0..=k).map(|i| binomial(d + 1 - i, k - i) * self.0[i as usize]).sum())
            .collect();
        FVector(f)
    }

    /// Pads with zeros to `len` entries.
    pub fn padded(mut self, len: usize) -> HVector {
        if self.0.len() < len {
            self.0.resize(len, 0);
        }
        self
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    write!(f, "({})", parts.join(","))
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}
