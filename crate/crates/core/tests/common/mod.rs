//! Brute-force oracles and generators shared by the integration tests. None
//! of this reuses the search machinery of the library.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simplicial_cert::complex::maximal_faces;
use simplicial_cert::{Face, FaceSet, SimplicialComplex};

/// Decides partitionability by assigning a bottom to each facet in turn.
/// A face is checked to be covered as soon as the last facet above it has
/// been assigned.
pub fn brute_partitionable<K: FaceSet + ?Sized>(k: &K) -> bool {
    let faces = k.faces();
    let tops = k.maximal_faces();
    if tops.is_empty() {
        return faces.is_empty();
    }
    let index: HashMap<Face, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); tops.len()];
    for (i, f) in faces.iter().enumerate() {
        let last = tops.iter().rposition(|t| f.is_subset(t)).expect("every face lies in a maximal face");
        due[last].push(i);
    }
    let mut covered = vec![false; faces.len()];
    assign(0, &tops, &index, &due, &mut covered)
}

fn assign(
    i: usize,
    tops: &[Face],
    index: &HashMap<Face, usize>,
    due: &[Vec<usize>],
    covered: &mut [bool],
) -> bool {
    if i == tops.len() {
        return true;
    }
    let top = tops[i];
    for bottom in top.subsets() {
        let Some(members) = top
            .difference(&bottom)
            .subsets()
            .map(|extra| index.get(&bottom.union(&extra)).copied())
            .collect::<Option<Vec<usize>>>()
        else {
            continue;
        };
        if members.iter().any(|&m| covered[m]) {
            continue;
        }
        for &m in &members {
            covered[m] = true;
        }
        if due[i].iter().all(|&m| covered[m]) && assign(i + 1, tops, index, due, covered) {
            return true;
        }
        for &m in &members {
            covered[m] = false;
        }
    }
    false
}

fn closure(facets: &[Face]) -> Vec<Face> {
    let mut faces: Vec<Face> = facets.iter().flat_map(|f| f.subsets()).collect();
    faces.sort();
    faces.dedup();
    faces
}

/// Decides shellability from the classical definition: each facet meets the
/// complex of the earlier ones in a pure complex of codimension one.
pub fn brute_shellable(k: &SimplicialComplex) -> bool {
    let facets = k.facets().to_vec();
    let mut used = vec![false; facets.len()];
    let mut order = Vec::new();
    extend(&facets, &mut used, &mut order)
}

fn attaches(prefix: &[Face], f: &Face) -> bool {
    if prefix.is_empty() {
        return true;
    }
    let earlier = closure(prefix);
    let common: Vec<Face> = f.subsets().filter(|s| earlier.binary_search(s).is_ok()).collect();
    let tops = maximal_faces(common);
    !tops.is_empty() && tops.iter().all(|t| t.len() + 1 == f.len())
}

fn extend(facets: &[Face], used: &mut [bool], order: &mut Vec<Face>) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    for i in 0..facets.len() {
        if used[i] || !attaches(order, &facets[i]) {
            continue;
        }
        used[i] = true;
        order.push(facets[i]);
        if extend(facets, used, order) {
            return true;
        }
        order.pop();
        used[i] = false;
    }
    false
}

/// All `size`-subsets of `0..n`, in lexicographic order.
pub fn k_subsets(n: usize, size: usize) -> Vec<Face> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| Face::from_vertices((0..n).filter(|v| m >> v & 1 == 1)).unwrap())
        .collect()
}

/// Every nonempty family of equal-size subsets of `0..n`.
pub fn all_pure_complexes(n: usize) -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    for size in 0..=n {
        let pool = k_subsets(n, size);
        for mask in 1u64..1 << pool.len() {
            let facets = pool.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, f)| *f);
            out.push(SimplicialComplex::from_facets(facets));
        }
    }
    out
}

/// A pure complex on at most `max_n` vertices, drawn from `rng`.
pub fn random_pure_complex(rng: &mut impl Rng, max_n: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_n);
    let size = rng.gen_range(1..=n);
    let pool = k_subsets(n, size);
    let p = rng.gen_range(0.15..0.85);
    let mut facets: Vec<Face> = pool.iter().copied().filter(|_| rng.gen_bool(p)).collect();
    if facets.is_empty() {
        facets.push(pool[rng.gen_range(0..pool.len())]);
    }
    SimplicialComplex::from_facets(facets)
}

pub fn random_pure_complexes(seed: u64, count: usize, max_n: usize) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_pure_complex(&mut rng, max_n)).collect()
}

/// A subcomplex of `k` generated by a random subset of its faces.
pub fn random_subcomplex(rng: &mut impl Rng, k: &SimplicialComplex) -> SimplicialComplex {
    let faces = k.faces();
    let picks: Vec<Face> = faces.iter().copied().filter(|f| !f.is_empty() && rng.gen_bool(0.2)).collect();
    SimplicialComplex::from_facets(picks)
}

pub fn c(facets: &[&str]) -> SimplicialComplex {
    SimplicialComplex::from_digit_facets(facets).unwrap()
}
