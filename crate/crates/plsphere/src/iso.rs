//! Facet-preserving vertex bijections between complexes.
//!
//! The search backtracks over vertex maps in table order, pruning with
//! facet degrees and pairwise co-degrees. Complexes in this crate stay
//! small enough (≲ 40 vertices) that no canonical-labelling machinery is
//! needed. The first bijection found is the lexicographically least one,
//! so results are deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{SimplicialComplex, VertexLabel};

/// Returns the lexicographically least label bijection carrying the facets
/// of `a` onto the facets of `b`, or `None` when the complexes are not
/// isomorphic.
pub fn are_isomorphic(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Option<Vec<(VertexLabel, VertexLabel)>> {
    let m = a.vertex_count();
    if m != b.vertex_count()
        || a.facets().len() != b.facets().len()
        || a.facet_size() != b.facet_size()
    {
        return None;
    }
    if m == 0 {
        return Some(Vec::new());
    }

    let deg_a = degrees(a);
    let deg_b = degrees(b);
    let mut sorted_a = deg_a.clone();
    let mut sorted_b = deg_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    let co_a = co_degrees(a);
    let co_b = co_degrees(b);

    let mut mapping = vec![usize::MAX; m];
    let mut used = vec![false; m];
    if !extend(a, b, &deg_a, &deg_b, &co_a, &co_b, &mut mapping, &mut used, 0) {
        return None;
    }
    Some(
        mapping
            .iter()
            .enumerate()
            .map(|(i, &j)| (a.label(i).clone(), b.label(j).clone()))
            .collect(),
    )
}

/// Number of facets containing each vertex.
fn degrees(k: &SimplicialComplex) -> Vec<usize> {
    let mut deg = vec![0usize; k.vertex_count()];
    for facet in k.facets() {
        for &i in facet.indices() {
            deg[i] += 1;
        }
    }
    deg
}

/// Number of facets containing each vertex pair, as a flat m×m table.
fn co_degrees(k: &SimplicialComplex) -> Vec<u32> {
    let m = k.vertex_count();
    let mut co = vec![0u32; m * m];
    for facet in k.facets() {
        let idx = facet.indices();
        for (p, &i) in idx.iter().enumerate() {
            for &j in &idx[p + 1..] {
                co[i * m + j] += 1;
                co[j * m + i] += 1;
            }
        }
    }
    co
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    deg_a: &[usize],
    deg_b: &[usize],
    co_a: &[u32],
    co_b: &[u32],
    mapping: &mut [usize],
    used: &mut [bool],
    next: usize,
) -> bool {
    let m = mapping.len();
    if next == m {
        return facets_match(a, b, mapping);
    }
    'candidates: for candidate in 0..m {
        if used[candidate] || deg_a[next] != deg_b[candidate] {
            continue;
        }
        for prev in 0..next {
            if co_a[next * m + prev] != co_b[candidate * m + mapping[prev]] {
                continue 'candidates;
            }
        }
        mapping[next] = candidate;
        used[candidate] = true;
        if extend(a, b, deg_a, deg_b, co_a, co_b, mapping, used, next + 1) {
            return true;
        }
        mapping[next] = usize::MAX;
        used[candidate] = false;
    }
    false
}

fn facets_match(a: &SimplicialComplex, b: &SimplicialComplex, mapping: &[usize]) -> bool {
    let mut image: Vec<Vec<usize>> = a
        .facets()
        .iter()
        .map(|f| {
            let mut mapped: Vec<usize> = f.indices().iter().map(|&i| mapping[i]).collect();
            mapped.sort_unstable();
            mapped
        })
        .collect();
    image.sort();
    let target: Vec<Vec<usize>> = b.facets().iter().map(|f| f.indices().to_vec()).collect();
    image == target
}
