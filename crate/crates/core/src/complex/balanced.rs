use std::collections::BTreeMap;

use crate::complex::SimplicialComplex;
use crate::error::ComplexError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Balance {
    pub balanced: bool,
    /// vertex → color in `0..=d`, when balanced
    pub coloring: Option<BTreeMap<usize, usize>>,
    /// backtracking nodes visited
    pub nodes: u64,
}

/// Searches exhaustively for a `(d+1)`-coloring of the vertices in which
/// every facet is rainbow.
///
/// Color classes are interchangeable, so a vertex may only open the next
/// unused color; this removes the `(d+1)!` relabelings from the search.
pub fn is_balanced(k: &SimplicialComplex) -> Result<Balance, ComplexError> {
    if !k.is_pure() {
        return Err(ComplexError::NotPure);
    }
    let Some(d) = k.dim() else {
        return Ok(Balance { balanced: true, coloring: Some(BTreeMap::new()), nodes: 0 });
    };
    let colors = (d + 1) as usize;
    let verts: Vec<usize> = k.vertex_set().vertices().collect();
    let pos: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    let mut adj = vec![vec![false; n]; n];
    for f in k.facets() {
        let vs: Vec<usize> = f.vertices().map(|v| pos[&v]).collect();
        for &a in &vs {
            for &b in &vs {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
    }

    // visit vertices so that each one (after the first of its component) has an already placed neighbour
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (order.iter().filter(|&&u| adj[v][u]).count(), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }

    let mut color = vec![usize::MAX; n];
    let mut nodes = 0u64;
    let found = assign(0, 0, &order, &adj, colors, &mut color, &mut nodes);
    let coloring = found.then(|| verts.iter().enumerate().map(|(i, &v)| (v, color[i])).collect());
    Ok(Balance { balanced: found, coloring, nodes })
}

fn assign(
    depth: usize,
    used: usize,
    order: &[usize],
    adj: &[Vec<bool>],
    colors: usize,
    color: &mut [usize],
    nodes: &mut u64,
) -> bool {
    *nodes += 1;
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for c in 0..colors.min(used + 1) {
        if (0..adj.len()).any(|u| adj[v][u] && color[u] == c) {
            continue;
        }
        color[v] = c;
        if assign(depth + 1, used.max(c + 1), order, adj, colors, color, nodes) {
            return true;
        }
    }
    color[v] = usize::MAX;
    false
}

/// Checks that `coloring` uses colors `0..=d` and makes every facet rainbow.
pub fn verify_coloring(k: &SimplicialComplex, coloring: &BTreeMap<usize, usize>) -> bool {
    let Some(d) = k.dim() else { return true };
    k.facets().iter().all(|f| {
        let mut seen = vec![false; (d + 1) as usize];
        f.vertices().all(|v| match coloring.get(&v) {
            Some(&c) if c < seen.len() => !std::mem::replace(&mut seen[c], true),
            _ => false,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_digit_facets(facets).unwrap()
    }

    #[test]
    fn single_simplex_is_balanced() {
        let k = c(&["0123"]);
        let b = is_balanced(&k).unwrap();
        assert!(b.balanced);
        assert!(verify_coloring(&k, b.coloring.as_ref().unwrap()));
    }

    #[test]
    fn square_is_bipartite() {
        let k = c(&["12", "23", "34", "14"]);
        let b = is_balanced(&k).unwrap();
        assert!(b.balanced);
        assert!(verify_coloring(&k, b.coloring.as_ref().unwrap()));
    }

    #[test]
    fn triangle_boundary_is_not() {
        assert!(!is_balanced(&c(&["12", "23", "13"])).unwrap().balanced);
    }

    #[test]
    fn octahedron_boundary_is_balanced() {
        let k = c(&["024", "025", "034", "035", "124", "125", "134", "135"]);
        assert!(is_balanced(&k).unwrap().balanced);
    }

    #[test]
    fn rejects_non_pure() {
        assert_eq!(is_balanced(&c(&["123", "45"])), Err(ComplexError::NotPure));
    }
}
