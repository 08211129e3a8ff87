use std::cmp::Ordering;
use std::fmt;

use crate::error::ComplexError;

/// Maximum number of distinct vertex indices a [`Face`] can hold.
pub const MAX_VERTICES: usize = 256;

const WORDS: usize = MAX_VERTICES / 64;

/// A finite set of vertex indices, stored as a fixed-width bitset.
///
/// Faces order canonically: first by cardinality, then lexicographically on
/// the increasing vertex sequence. Every listing produced by this crate
/// (face enumerations, facet lists, certificates) follows that order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face {
    bits: [u64; WORDS],
}

impl Face {
    /// The empty face, of dimension −1.
    pub const EMPTY: Face = Face { bits: [0; WORDS] };

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self, ComplexError> {
        let mut face = Face::EMPTY;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(ComplexError::VertexOutOfRange(v));
            }
            face.insert(v);
        }
        Ok(face)
    }

    /// Builds a face from signed indices, rejecting negative ones.
    pub fn from_signed<I: IntoIterator<Item = i64>>(vertices: I) -> Result<Self, ComplexError> {
        let mut out = Vec::new();
        for v in vertices {
            if v < 0 {
                return Err(ComplexError::NegativeVertex(v));
            }
            out.push(v as usize);
        }
        Face::from_vertices(out)
    }

    /// Parses the compact digit notation `0123` for faces on vertices 0–9.
    pub fn from_digits(s: &str) -> Result<Self, ComplexError> {
        let mut vs = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c.to_digit(10) {
                Some(d) => vs.push(d as usize),
                None => return Err(ComplexError::BadDigitFace(s.to_string())),
            }
        }
        Face::from_vertices(vs)
    }

    /// Shorthand for [`Face::from_digits`] that panics on bad input. Meant for
    /// literals in fixtures and tests.
    pub fn d(s: &str) -> Self {
        Face::from_digits(s).expect("valid digit face")
    }

    pub fn singleton(v: usize) -> Self {
        let mut f = Face::EMPTY;
        f.insert(v);
        f
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn dim(&self) -> i32 {
        self.len() as i32 - 1
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.bits[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits[v / 64] &= !(1 << (v % 64));
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.bits.iter().zip(other.bits.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.bits.iter().zip(other.bits.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut bits = self.bits;
        for (w, o) in bits.iter_mut().zip(other.bits.iter()) {
            *w |= o;
        }
        Face { bits }
    }

    pub fn intersection(&self, other: &Face) -> Face {
        let mut bits = self.bits;
        for (w, o) in bits.iter_mut().zip(other.bits.iter()) {
            *w &= o;
        }
        Face { bits }
    }

    pub fn difference(&self, other: &Face) -> Face {
        let mut bits = self.bits;
        for (w, o) in bits.iter_mut().zip(other.bits.iter()) {
            *w &= !o;
        }
        Face { bits }
    }

    /// Largest vertex index, if any.
    pub fn max_vertex(&self) -> Option<usize> {
        (0..WORDS)
            .rev()
            .find(|&i| self.bits[i] != 0)
            .map(|i| i * 64 + 63 - self.bits[i].leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> Vertices {
        Vertices { bits: self.bits, word: 0 }
    }

    /// All subsets of this face (including the empty face and the face itself).
    pub fn subsets(&self) -> Subsets {
        let verts: Vec<usize> = self.vertices().collect();
        assert!(verts.len() < 64, "face too large to enumerate subsets");
        Subsets { end: 1u64 << verts.len(), verts, mask: 0 }
    }

    /// Codimension-one faces `self ∖ {v}`, paired with the position of `v`.
    pub fn boundary(&self) -> impl Iterator<Item = (usize, Face)> + '_ {
        self.vertices().enumerate().map(move |(k, v)| (k, self.without(v)))
    }

    pub fn map<F: Fn(usize) -> usize>(&self, f: F) -> Face {
        let mut out = Face::EMPTY;
        for v in self.vertices() {
            out.insert(f(v));
        }
        out
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in 0..WORDS {
            let x = self.bits[i] ^ other.bits[i];
            if x != 0 {
                // the smaller sequence is the one holding the least differing vertex
                let low = x & x.wrapping_neg();
                return if self.bits[i] & low != 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        if self.max_vertex().is_some_and(|m| m < 10) {
            for v in self.vertices() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face({self})")
    }
}

pub struct Vertices {
    bits: [u64; WORDS],
    word: usize,
}

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.bits[self.word];
            if w != 0 {
                let tz = w.trailing_zeros() as usize;
                self.bits[self.word] &= w - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
        }
        None
    }
}

pub struct Subsets {
    verts: Vec<usize>,
    mask: u64,
    end: u64,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        if self.mask >= self.end {
            return None;
        }
        let mut face = Face::EMPTY;
        for (k, &v) in self.verts.iter().enumerate() {
            if self.mask >> k & 1 == 1 {
                face.insert(v);
            }
        }
        self.mask += 1;
        Some(face)
    }
}

/// Keeps the maximal elements of `faces`, sorted canonically and deduplicated.
pub fn maximal_faces<I: IntoIterator<Item = Face>>(faces: I) -> Vec<Face> {
    let mut all: Vec<Face> = faces.into_iter().collect();
    all.sort();
    all.dedup();
    // larger faces come later in canonical order, so only look forward
    let mut keep = Vec::with_capacity(all.len());
    for (i, f) in all.iter().enumerate() {
        if !all[i + 1..].iter().any(|g| g.len() > f.len() && f.is_subset(g)) {
            keep.push(*f);
        }
    }
    keep
}

/// Keeps the minimal elements of `faces`, sorted canonically and deduplicated.
pub fn minimal_faces<I: IntoIterator<Item = Face>>(faces: I) -> Vec<Face> {
    let mut all: Vec<Face> = faces.into_iter().collect();
    all.sort();
    all.dedup();
    let mut keep: Vec<Face> = Vec::new();
    for f in all {
        if !keep.iter().any(|g| g.is_subset(&f)) {
            keep.push(f);
        }
    }
    keep
}
