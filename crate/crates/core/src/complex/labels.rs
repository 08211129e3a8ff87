use std::collections::HashMap;

use crate::complex::Face;
use crate::error::ComplexError;

/// Bijection between external vertex names and dense internal indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMap {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Labels `0..n` by their decimal index.
    pub fn numeric(n: usize) -> Self {
        let mut map = VertexMap::new();
        for i in 0..n {
            map.intern(&i.to_string());
        }
        map
    }

    pub fn from_names<I, S>(names: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut map = VertexMap::new();
        for name in names {
            let name = name.into();
            if map.index.contains_key(&name) {
                return Err(ComplexError::DuplicateLabel(name));
            }
            map.intern(&name);
        }
        Ok(map)
    }

    /// Returns the index of `name`, assigning the next free one if unseen.
    pub fn intern(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    pub fn index_of(&self, name: &str) -> Result<usize, ComplexError> {
        self.index.get(name).copied().ok_or_else(|| ComplexError::UnknownVertex(name.to_string()))
    }

    pub fn name(&self, index: usize) -> Option<&str> {
        self.names.get(index).map(String::as_str)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Name list of a face, falling back to the raw index for unlabeled vertices.
    pub fn face_names(&self, face: &Face) -> Vec<String> {
        face.vertices()
            .map(|v| self.name(v).map(str::to_string).unwrap_or_else(|| v.to_string()))
            .collect()
    }

    /// Human rendering: concatenated when every label is one character, else space separated.
    pub fn render(&self, face: &Face) -> String {
        if face.is_empty() {
            return "∅".to_string();
        }
        let names = self.face_names(face);
        if names.iter().all(|n| n.chars().count() == 1) {
            names.concat()
        } else {
            names.join(" ")
        }
    }

    pub fn face_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Face, ComplexError> {
        let idx = names.iter().map(|n| self.index_of(n.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Face::from_vertices(idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let map = VertexMap::from_names(["a", "b", "c_2"]).unwrap();
        for (i, n) in map.names().iter().enumerate() {
            assert_eq!(map.index_of(n).unwrap(), i);
            assert_eq!(map.name(i), Some(n.as_str()));
        }
        let f = map.face_from_names(&["c_2", "a"]).unwrap();
        assert_eq!(map.face_names(&f), vec!["a", "c_2"]);
        assert_eq!(map.render(&f), "a c_2");
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(VertexMap::from_names(["x", "x"]).is_err());
    }

    #[test]
    fn unknown_label() {
        let map = VertexMap::numeric(3);
        assert_eq!(map.index_of("7"), Err(ComplexError::UnknownVertex("7".into())));
    }
}
