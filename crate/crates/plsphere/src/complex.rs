//! Pure simplicial complexes given by their facet lists.
//!
//! A [`SimplicialComplex`] owns an ordered vertex label table and a
//! lexicographically sorted facet list over indices into that table. All
//! facets have equal cardinality, none contains another, and every vertex
//! occurs in at least one facet. The complex `{∅}` (zero vertices, one
//! empty facet) is representable and acts as the join identity and as the
//! link of a facet; the void complex (no faces at all) is not.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Default cap on enumerated faces, shared by every face-walking routine.
pub const DEFAULT_FACE_BUDGET: u64 = 10_000_000;

/// A human-readable vertex name such as `"3"`, `"3#1"`, or `"w{1.2}"`.
///
/// Labels are nonempty and contain neither whitespace nor commas, so they
/// survive file formats and command-line face syntax unquoted. Derived
/// vertices keep their ancestry readable: the k-th wedge copy of `v` is
/// `v#k` and a subdivision vertex at σ is `w{…}` over σ's labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel(String);

impl VertexLabel {
    pub fn new(text: &str) -> Result<Self> {
        if text.is_empty() || text.contains(char::is_whitespace) || text.contains(',') {
            return Err(Error::InvalidLabel(text.to_owned()));
        }
        Ok(VertexLabel(text.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl core::fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

/// A face: a strictly increasing sequence of vertex indices.
///
/// The empty face `∅` is a valid value; it is a face of every complex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<usize>);

impl Face {
    /// The empty face.
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    /// Builds a face from indices that must already be strictly increasing.
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFacet(format!("{indices:?} is not strictly increasing")));
        }
        Ok(Face(indices))
    }

    /// Builds a face from indices in any order, rejecting repeats.
    pub fn from_unsorted(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFacet(format!("{indices:?} repeats a vertex")));
        }
        Ok(Face(indices))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|i| other.contains(*i))
    }

    /// Set union, valid for any two faces of the same complex.
    pub fn union(&self, other: &Face) -> Face {
        let mut merged: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        merged.sort_unstable();
        merged.dedup();
        Face(merged)
    }

    /// Set difference `self ∖ other`.
    pub fn minus(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|i| !other.contains(*i)).collect())
    }

    pub fn intersects(&self, other: &Face) -> bool {
        self.0.iter().any(|i| other.contains(*i))
    }

    /// Bitmask over vertex indices; only valid when the complex has ≤ 64 vertices.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, i| m | (1u64 << i))
    }
}

/// Face counts per dimension together with the Euler characteristic.
///
/// When the face budget is exceeded only `f₀`, `f₁`, `f₂` are computed,
/// `truncated` is set, and the Euler characteristic is unavailable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<u64>,
    truncated: bool,
}

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Euler characteristic `Σ (−1)^i f_i`, absent for truncated vectors.
    pub fn euler(&self) -> Option<i64> {
        if self.truncated {
            return None;
        }
        Some(
            self.counts
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { *c as i64 } else { -(*c as i64) })
                .sum(),
        )
    }
}

/// A pure simplicial complex in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<VertexLabel>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Normalizes a raw facet list given by vertex labels.
    ///
    /// The label table is built in first-appearance order, duplicate facets
    /// merge silently, and the facet list is sorted lexicographically.
    /// Rejects impure input, a facet contained in another facet, and empty
    /// input.
    pub fn from_label_facets(raw_facets: &[Vec<&str>]) -> Result<Self> {
        if raw_facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut labels: Vec<VertexLabel> = Vec::new();
        let mut facets: Vec<Face> = Vec::with_capacity(raw_facets.len());
        for raw in raw_facets {
            let mut indices = Vec::with_capacity(raw.len());
            for text in raw {
                let label = VertexLabel::new(text)?;
                let index = match labels.iter().position(|l| *l == label) {
                    Some(i) => i,
                    None => {
                        labels.push(label);
                        labels.len() - 1
                    }
                };
                indices.push(index);
            }
            facets.push(Face::from_unsorted(indices).map_err(|_| {
                Error::InvalidFacet(format!("facet {raw:?} repeats a vertex"))
            })?);
        }
        Self::from_parts(labels, facets)
    }

    /// Canonicalizes and validates an index-level representation.
    ///
    /// Sorting and deduplication are applied here; purity, maximality, and
    /// the absence of ghost vertices are enforced.
    pub fn from_parts(labels: Vec<VertexLabel>, mut facets: Vec<Face>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        for i in 0..labels.len() {
            for j in (i + 1)..labels.len() {
                if labels[i] == labels[j] {
                    return Err(Error::InvalidLabel(format!(
                        "duplicate label {}",
                        labels[i]
                    )));
                }
            }
        }
        facets.sort();
        facets.dedup();
        for facet in &facets {
            if let Some(&max) = facet.indices().last() {
                if max >= labels.len() {
                    return Err(Error::InvalidFacet(format!(
                        "index {max} out of range for {} labels",
                        labels.len()
                    )));
                }
            }
        }
        // containment first: a strict subset is reported as non-maximal,
        // everything else of unequal cardinality as impure
        for i in 0..facets.len() {
            for j in 0..facets.len() {
                if i != j
                    && facets[i].len() < facets[j].len()
                    && facets[i].is_subset_of(&facets[j])
                {
                    return Err(Error::NonMaximalFacet {
                        inner: index_face_string(&labels, &facets[i]),
                        outer: index_face_string(&labels, &facets[j]),
                    });
                }
            }
        }
        if let Some(first) = facets.first() {
            for facet in &facets[1..] {
                if facet.len() != first.len() {
                    let (small, large) = if facet.len() < first.len() {
                        (facet, first)
                    } else {
                        (first, facet)
                    };
                    return Err(Error::NotPure {
                        smaller: index_face_string(&labels, small),
                        larger: index_face_string(&labels, large),
                    });
                }
            }
        }
        let mut seen = vec![false; labels.len()];
        for facet in &facets {
            for &i in facet.indices() {
                seen[i] = true;
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::GhostVertex(labels[i].as_str().to_owned()));
        }
        Ok(SimplicialComplex { labels, facets })
    }

    /// The complex `{∅}`: zero vertices, one empty facet.
    pub fn empty_complex() -> Self {
        SimplicialComplex { labels: Vec::new(), facets: vec![Face::empty()] }
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Number of vertices, usually written `m`.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Common facet cardinality, usually written `n`; the dimension is `n − 1`.
    pub fn facet_size(&self) -> usize {
        self.facets[0].len()
    }

    pub fn dimension(&self) -> isize {
        self.facet_size() as isize - 1
    }

    /// Picard number `m − n`.
    pub fn picard_number(&self) -> isize {
        self.vertex_count() as isize - self.facet_size() as isize
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_str() == label)
    }

    pub fn label(&self, index: usize) -> &VertexLabel {
        &self.labels[index]
    }

    /// Resolves labels to a face of this complex's vertex set (membership
    /// in the complex is not implied; see [`Self::is_face`]).
    pub fn face_from_labels(&self, labels: &[&str]) -> Result<Face> {
        let mut indices = Vec::with_capacity(labels.len());
        for text in labels {
            let index = self
                .index_of(text)
                .ok_or_else(|| Error::NotAVertex((*text).to_owned()))?;
            indices.push(index);
        }
        Face::from_unsorted(indices)
    }

    pub fn face_labels(&self, face: &Face) -> Vec<&str> {
        face.indices().iter().map(|&i| self.labels[i].as_str()).collect()
    }

    pub fn face_string(&self, face: &Face) -> String {
        let mut out = String::from("{");
        for (k, &i) in face.indices().iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(self.labels[i].as_str());
        }
        out.push('}');
        out
    }

    /// Whether σ is a face, i.e. a subset of some facet.
    pub fn is_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    /// Equality of labelled face sets, ignoring label-table order.
    pub fn same_labelled_faces(&self, other: &SimplicialComplex) -> bool {
        let mut mine: Vec<VertexLabel> = self.labels.clone();
        let mut theirs: Vec<VertexLabel> = other.labels.clone();
        mine.sort();
        theirs.sort();
        if mine != theirs {
            return false;
        }
        let key = |k: &SimplicialComplex| {
            let mut facets: Vec<Vec<&str>> = k
                .facets
                .iter()
                .map(|f| {
                    let mut labels = k.face_labels(f);
                    labels.sort_unstable();
                    labels
                })
                .collect();
            facets.sort();
            facets.iter().map(|f| f.join(",")).collect::<Vec<_>>()
        };
        key(self) == key(other)
    }

    /// Facet bitmasks; available only for complexes on ≤ 64 vertices.
    pub fn facet_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count() > 64 {
            return None;
        }
        Some(self.facets.iter().map(Face::mask).collect())
    }

    /// The star of σ: the subcomplex spanned by the facets containing σ.
    ///
    /// Labels are inherited from this complex in table order. `star(K, ∅)`
    /// is `K` itself.
    pub fn star(&self, face: &Face) -> Result<SimplicialComplex> {
        if !self.is_face(face) {
            return Err(Error::NotAFace(self.face_string(face)));
        }
        let kept: Vec<Face> =
            self.facets.iter().filter(|f| face.is_subset_of(f)).cloned().collect();
        self.restrict_to(kept)
    }

    /// The link of σ: faces disjoint from σ whose union with σ is a face.
    ///
    /// Labels are inherited; the link of a facet is the complex `{∅}`.
    pub fn link(&self, face: &Face) -> Result<SimplicialComplex> {
        if !self.is_face(face) {
            return Err(Error::NotAFace(self.face_string(face)));
        }
        let kept: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(f))
            .map(|f| f.minus(face))
            .collect();
        self.restrict_to(kept)
    }

    /// Rebuilds a complex from a facet subset, dropping unused labels while
    /// keeping their relative order.
    fn restrict_to(&self, facets: Vec<Face>) -> Result<SimplicialComplex> {
        let mut used = vec![false; self.labels.len()];
        for facet in &facets {
            for &i in facet.indices() {
                used[i] = true;
            }
        }
        let mut remap = vec![usize::MAX; self.labels.len()];
        let mut labels = Vec::new();
        for (i, keep) in used.iter().enumerate() {
            if *keep {
                remap[i] = labels.len();
                labels.push(self.labels[i].clone());
            }
        }
        let facets = facets
            .into_iter()
            .map(|f| Face::new(f.indices().iter().map(|&i| remap[i]).collect()))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_parts(labels, facets)
    }

    /// Join with a complex on a disjoint label set.
    ///
    /// Joining with `{∅}` on either side is the identity.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        for label in &other.labels {
            if self.index_of(label.as_str()).is_some() {
                return Err(Error::LabelCollision(label.as_str().to_owned()));
            }
        }
        let shift = self.labels.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for left in &self.facets {
            for right in &other.facets {
                let mut indices = left.indices().to_vec();
                indices.extend(right.indices().iter().map(|&i| i + shift));
                facets.push(Face::new(indices)?);
            }
        }
        SimplicialComplex::from_parts(labels, facets)
    }

    /// All inclusion-minimal vertex subsets that are not faces, sorted.
    pub fn minimal_non_faces(&self) -> Result<Vec<Face>> {
        self.minimal_non_faces_budgeted(DEFAULT_FACE_BUDGET)
    }

    /// As [`Self::minimal_non_faces`] with an explicit face budget.
    ///
    /// Candidates of size k are sets whose every (k−1)-subset is a face,
    /// so they are found by extending enumerated (k−1)-faces; a candidate
    /// that is not itself a face is a minimal non-face.
    pub fn minimal_non_faces_budgeted(&self, budget: u64) -> Result<Vec<Face>> {
        let n = self.facet_size();
        let m = self.vertex_count();
        let by_dim = self.enumerate_faces(budget)?;
        let empty: Vec<u64> = Vec::new();
        let mut out: Vec<Face> = Vec::new();
        for size in 2..=(n + 1) {
            let lower = &by_dim.masks[size - 2];
            let this = if size - 1 < by_dim.masks.len() { &by_dim.masks[size - 1] } else { &empty };
            for &mask in lower {
                let top = high_bit(mask);
                for v in (top + 1)..m {
                    let candidate = mask | (1u64 << v);
                    if this.binary_search(&candidate).is_ok() {
                        continue;
                    }
                    // every (size-1)-subset must be a face
                    let mut all_faces = true;
                    let mut bits = candidate;
                    while bits != 0 {
                        let low = bits & bits.wrapping_neg();
                        let sub = candidate & !low;
                        if lower.binary_search(&sub).is_err() {
                            all_faces = false;
                            break;
                        }
                        bits &= bits - 1;
                    }
                    if all_faces {
                        out.push(face_from_mask(candidate));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Enumerates every nonempty face, grouped by dimension, as sorted
    /// bitmask vectors. Fails once the running face count passes `budget`.
    pub fn enumerate_faces(&self, budget: u64) -> Result<FaceSets> {
        let n = self.facet_size();
        let m = self.vertex_count();
        if m > 64 {
            return Err(Error::InvalidParameters(format!(
                "face enumeration supports at most 64 vertices, complex has {m}"
            )));
        }
        if n == 0 {
            return Ok(FaceSets { masks: Vec::new() });
        }
        let mut masks: Vec<Vec<u64>> = vec![Vec::new(); n];
        let mut top: Vec<u64> = self.facets.iter().map(Face::mask).collect();
        top.sort_unstable();
        top.dedup();
        let mut total = top.len() as u64;
        if total > budget {
            return Err(Error::BudgetExceeded { budget, reached: total });
        }
        masks[n - 1] = top;
        for size in (1..n).rev() {
            let parents = &masks[size];
            let mut children: Vec<u64> = Vec::new();
            // chunked dedup keeps the transient candidate list bounded
            const CHUNK: usize = 1 << 25;
            for &parent in parents {
                let mut bits = parent;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    children.push(parent & !low);
                    bits &= bits - 1;
                }
                if children.len() >= CHUNK {
                    children.sort_unstable();
                    children.dedup();
                }
            }
            children.sort_unstable();
            children.dedup();
            total += children.len() as u64;
            masks[size - 1] = children;
            if total > budget {
                return Err(Error::BudgetExceeded { budget, reached: total });
            }
        }
        Ok(FaceSets { masks })
    }

    /// Face counts per dimension plus the Euler characteristic.
    ///
    /// Above the budget, only `f₀`, `f₁`, `f₂` are counted and the result
    /// is flagged truncated.
    pub fn f_vector(&self, budget: u64) -> Result<FVector> {
        match self.enumerate_faces(budget) {
            Ok(sets) => Ok(FVector {
                counts: sets.masks.iter().map(|level| level.len() as u64).collect(),
                truncated: false,
            }),
            Err(Error::BudgetExceeded { .. }) => {
                let n = self.facet_size();
                let mut counts = vec![self.vertex_count() as u64];
                for size in 2..=n.min(3) {
                    counts.push(self.count_small_faces(size));
                }
                Ok(FVector { counts, truncated: true })
            }
            Err(other) => Err(other),
        }
    }

    /// Distinct faces of a fixed small cardinality, straight from facets.
    fn count_small_faces(&self, size: usize) -> u64 {
        let mut found: Vec<u64> = Vec::new();
        const CHUNK: usize = 1 << 25;
        for facet in &self.facets {
            push_subsets(facet.indices(), size, &mut found);
            if found.len() >= CHUNK {
                found.sort_unstable();
                found.dedup();
            }
        }
        found.sort_unstable();
        found.dedup();
        found.len() as u64
    }
}

/// Nonempty faces of a complex grouped by dimension.
///
/// `masks[d]` lists the dimension-d faces (size d+1) as sorted bitmasks.
pub struct FaceSets {
    pub masks: Vec<Vec<u64>>,
}

impl FaceSets {
    pub fn total(&self) -> u64 {
        self.masks.iter().map(|l| l.len() as u64).sum()
    }
}

/// The boundary complex of a simplex given by its vertex labels: all
/// proper subsets. For a single vertex this is the complex `{∅}`.
pub fn boundary_of_simplex(labels: &[&str]) -> Result<SimplicialComplex> {
    if labels.is_empty() {
        return Err(Error::EmptyInput);
    }
    let table = labels
        .iter()
        .map(|text| VertexLabel::new(text))
        .collect::<Result<Vec<_>>>()?;
    if labels.len() == 1 {
        return Ok(SimplicialComplex::empty_complex());
    }
    let all: Vec<usize> = (0..labels.len()).collect();
    let facets = all
        .iter()
        .map(|&drop| Face::new(all.iter().copied().filter(|&i| i != drop).collect()))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_parts(table, facets)
}

fn index_face_string(labels: &[VertexLabel], face: &Face) -> String {
    let mut out = String::from("{");
    for (k, &i) in face.indices().iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        match labels.get(i) {
            Some(l) => out.push_str(l.as_str()),
            None => out.push_str(&format!("#{i}")),
        }
    }
    out.push('}');
    out
}

pub(crate) fn face_from_mask(mask: u64) -> Face {
    let mut indices = Vec::with_capacity(mask.count_ones() as usize);
    let mut bits = mask;
    while bits != 0 {
        indices.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    Face::new(indices).expect("mask bits are strictly increasing")
}

fn high_bit(mask: u64) -> usize {
    63 - mask.leading_zeros() as usize
}

fn push_subsets(indices: &[usize], size: usize, out: &mut Vec<u64>) {
    fn rec(indices: &[usize], size: usize, start: usize, depth: usize, mask: u64, out: &mut Vec<u64>) {
        if depth == size {
            out.push(mask);
            return;
        }
        for i in start..=(indices.len() - (size - depth)) {
            rec(indices, size, i + 1, depth + 1, mask | (1u64 << indices[i]), out);
        }
    }
    if indices.len() >= size {
        rec(indices, size, 0, 0, 0, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_label_facets(&[
            vec!["1", "2"],
            vec!["2", "3"],
            vec!["3", "4"],
            vec!["4", "5"],
            vec!["5", "1"],
        ])
        .unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        // antipodal pairs {1,4}, {2,5}, {3,6}
        let mut facets = Vec::new();
        for a in ["1", "4"] {
            for b in ["2", "5"] {
                for c in ["3", "6"] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        SimplicialComplex::from_label_facets(&facets).unwrap()
    }

    /// All faces of `k` by exhaustive subset check, for small oracles.
    fn all_faces_brute(k: &SimplicialComplex) -> BTreeSet<Vec<usize>> {
        let m = k.vertex_count();
        let mut faces = BTreeSet::new();
        for mask in 0u64..(1 << m) {
            let subset = face_from_mask(mask);
            if k.is_face(&subset) {
                faces.insert(subset.indices().to_vec());
            }
        }
        faces
    }

    #[test]
    fn validate_triangle_boundary() {
        let k = SimplicialComplex::from_label_facets(&[
            vec!["1", "2"],
            vec!["2", "3"],
            vec!["3", "1"],
        ])
        .unwrap();
        assert_eq!(k.dimension(), 1);
        assert_eq!(k.vertex_count(), 3);
        assert_eq!(k.facets().len(), 3);
    }

    #[test]
    fn validate_rejects_impure() {
        let err = SimplicialComplex::from_label_facets(&[vec!["1", "2", "3"], vec!["3", "4"]])
            .unwrap_err();
        assert!(matches!(err, Error::NotPure { .. }));
    }

    #[test]
    fn validate_rejects_contained_facet() {
        let err = SimplicialComplex::from_label_facets(&[vec!["1", "2", "3"], vec!["1", "2"]])
            .unwrap_err();
        assert!(matches!(err, Error::NonMaximalFacet { .. }));
    }

    #[test]
    fn validate_merges_duplicates() {
        let k = SimplicialComplex::from_label_facets(&[
            vec!["1", "2"],
            vec!["1", "2"],
            vec!["2", "3"],
            vec!["3", "1"],
        ])
        .unwrap();
        assert_eq!(k.facets().len(), 3);
    }

    #[test]
    fn validate_rejects_empty_input() {
        assert!(matches!(
            SimplicialComplex::from_label_facets(&[]),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn empty_complex_is_representable() {
        let k = SimplicialComplex::from_label_facets(&[vec![]]).unwrap();
        assert_eq!(k, SimplicialComplex::empty_complex());
        assert_eq!(k.dimension(), -1);
        assert_eq!(k.vertex_count(), 0);
    }

    #[test]
    fn label_rules_enforced() {
        assert!(VertexLabel::new("").is_err());
        assert!(VertexLabel::new("a b").is_err());
        assert!(VertexLabel::new("a,b").is_err());
        assert!(VertexLabel::new("w{1.2}").is_ok());
        assert!(VertexLabel::new("1#1").is_ok());
    }

    #[test]
    fn link_of_vertex_in_triangle() {
        let k = SimplicialComplex::from_label_facets(&[
            vec!["1", "2"],
            vec!["2", "3"],
            vec!["3", "1"],
        ])
        .unwrap();
        let link = k.link(&k.face_from_labels(&["1"]).unwrap()).unwrap();
        let expected =
            SimplicialComplex::from_label_facets(&[vec!["2"], vec!["3"]]).unwrap();
        assert_eq!(link, expected);
    }

    #[test]
    fn link_of_vertex_in_octahedron_is_square() {
        let k = octahedron();
        let link = k.link(&k.face_from_labels(&["1"]).unwrap()).unwrap();
        // oracle: expand the definition over the 8 facets by hand
        let expected = SimplicialComplex::from_label_facets(&[
            vec!["2", "3"],
            vec!["2", "6"],
            vec!["5", "3"],
            vec!["5", "6"],
        ])
        .unwrap();
        assert_eq!(link, expected);
        assert_eq!(link.facets().len(), 4);
    }

    #[test]
    fn link_of_facet_is_empty_complex() {
        let k = pentagon();
        let link = k.link(&k.face_from_labels(&["1", "2"]).unwrap()).unwrap();
        assert_eq!(link, SimplicialComplex::empty_complex());
    }

    #[test]
    fn link_rejects_non_face() {
        let k = pentagon();
        let err = k.link(&k.face_from_labels(&["1", "3"]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotAFace(_)));
    }

    #[test]
    fn star_examples() {
        let k = SimplicialComplex::from_label_facets(&[
            vec!["1", "2"],
            vec!["2", "3"],
            vec!["3", "1"],
        ])
        .unwrap();
        let star = k.star(&k.face_from_labels(&["1"]).unwrap()).unwrap();
        let expected =
            SimplicialComplex::from_label_facets(&[vec!["1", "2"], vec!["1", "3"]]).unwrap();
        assert_eq!(star, expected);

        let p = pentagon();
        let edge_star = p.star(&p.face_from_labels(&["1", "2"]).unwrap()).unwrap();
        assert_eq!(edge_star.facets().len(), 1);

        let whole = p.star(&Face::empty()).unwrap();
        assert_eq!(whole, p);
    }

    #[test]
    fn star_link_cross_derivation() {
        // st(K,σ) is the closure of the facets containing σ and
        // lk(K,σ) strips σ from exactly those facets; cross-check both
        // against the definitional face sets on small complexes.
        for k in [pentagon(), octahedron()] {
            let faces = all_faces_brute(&k);
            for face_indices in &faces {
                let sigma = Face::new(face_indices.clone()).unwrap();
                let star = k.star(&sigma).unwrap();
                let link = k.link(&sigma).unwrap();

                let star_faces: BTreeSet<Vec<usize>> = all_faces_brute(&star)
                    .into_iter()
                    .map(|f| f.iter().map(|&i| k.index_of(star.label(i).as_str()).unwrap()).collect())
                    .collect();
                let expected_star: BTreeSet<Vec<usize>> = faces
                    .iter()
                    .filter(|tau| {
                        let t = Face::new((*tau).clone()).unwrap();
                        k.is_face(&t.union(&sigma))
                    })
                    .cloned()
                    .collect();
                assert_eq!(star_faces, expected_star);

                let link_faces: BTreeSet<Vec<usize>> = all_faces_brute(&link)
                    .into_iter()
                    .map(|f| f.iter().map(|&i| k.index_of(link.label(i).as_str()).unwrap()).collect())
                    .collect();
                let expected_link: BTreeSet<Vec<usize>> = faces
                    .iter()
                    .filter(|tau| {
                        let t = Face::new((*tau).clone()).unwrap();
                        !t.intersects(&sigma) && k.is_face(&t.union(&sigma))
                    })
                    .cloned()
                    .collect();
                assert_eq!(link_faces, expected_link);
            }
        }
    }

    #[test]
    fn join_of_two_segments_is_square() {
        let ab = boundary_of_simplex(&["a", "b"]).unwrap();
        let cd = boundary_of_simplex(&["c", "d"]).unwrap();
        let square = ab.join(&cd).unwrap();
        let expected = SimplicialComplex::from_label_facets(&[
            vec!["a", "c"],
            vec!["a", "d"],
            vec!["b", "c"],
            vec!["b", "d"],
        ])
        .unwrap();
        assert!(square.same_labelled_faces(&expected));
        // left labels precede right labels in the join's table
        let table: Vec<&str> = square.labels().iter().map(|l| l.as_str()).collect();
        assert_eq!(table, vec!["a", "b", "c", "d"]);
    }

    #[test]
    fn join_with_empty_complex_is_identity() {
        let p = pentagon();
        assert_eq!(p.join(&SimplicialComplex::empty_complex()).unwrap(), p);
        let joined = SimplicialComplex::empty_complex().join(&p).unwrap();
        assert_eq!(joined, p);
    }

    #[test]
    fn join_suspension_of_pentagon_has_ten_facets() {
        let poles = boundary_of_simplex(&["N", "S"]).unwrap();
        let s = poles.join(&pentagon()).unwrap();
        assert_eq!(s.facets().len(), 10);
        assert_eq!(s.dimension(), 2);
    }

    #[test]
    fn join_rejects_label_collision() {
        let p = pentagon();
        let other = boundary_of_simplex(&["1", "x"]).unwrap();
        assert!(matches!(p.join(&other), Err(Error::LabelCollision(_))));
    }

    #[test]
    fn join_minimal_non_faces_are_united() {
        let triangle = boundary_of_simplex(&["1", "2", "3"]).unwrap();
        let segment = boundary_of_simplex(&["a", "b"]).unwrap();
        let join = triangle.join(&segment).unwrap();
        let mut expected: Vec<Vec<&str>> = vec![vec!["1", "2", "3"], vec!["a", "b"]];
        expected.sort();
        let got: Vec<Vec<&str>> = join
            .minimal_non_faces()
            .unwrap()
            .iter()
            .map(|f| join.face_labels(f))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn boundary_of_simplex_cases() {
        let seg = boundary_of_simplex(&["1", "2"]).unwrap();
        assert_eq!(seg.facets().len(), 2);
        assert_eq!(seg.dimension(), 0);

        let tri = boundary_of_simplex(&["1", "2", "3"]).unwrap();
        assert_eq!(tri.facets().len(), 3);
        assert_eq!(tri.dimension(), 1);

        let point = boundary_of_simplex(&["1"]).unwrap();
        assert_eq!(point, SimplicialComplex::empty_complex());
    }

    /// Oracle: minimal non-faces by brute force over all vertex subsets.
    fn minimal_non_faces_brute(k: &SimplicialComplex) -> Vec<Vec<usize>> {
        let m = k.vertex_count();
        let mut non_faces: Vec<u64> = Vec::new();
        for mask in 1u64..(1 << m) {
            let face = face_from_mask(mask);
            if !k.is_face(&face) {
                non_faces.push(mask);
            }
        }
        let mut minimal = Vec::new();
        for &mask in &non_faces {
            let is_minimal = non_faces.iter().all(|&other| {
                other == mask || (other & mask) != other
            });
            if is_minimal {
                minimal.push(face_from_mask(mask).indices().to_vec());
            }
        }
        minimal.sort();
        minimal
    }

    #[test]
    fn minimal_non_faces_examples() {
        let tri = boundary_of_simplex(&["1", "2", "3"]).unwrap();
        let got: Vec<Vec<usize>> = tri
            .minimal_non_faces()
            .unwrap()
            .iter()
            .map(|f| f.indices().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0, 1, 2]]);

        let p = pentagon();
        let got: Vec<Vec<usize>> =
            p.minimal_non_faces().unwrap().iter().map(|f| f.indices().to_vec()).collect();
        assert_eq!(got, minimal_non_faces_brute(&p));
        let labelled: Vec<Vec<&str>> = p
            .minimal_non_faces()
            .unwrap()
            .iter()
            .map(|f| p.face_labels(f))
            .collect();
        assert_eq!(
            labelled,
            vec![
                vec!["1", "3"],
                vec!["1", "4"],
                vec!["2", "4"],
                vec!["2", "5"],
                vec!["3", "5"],
            ]
        );

        let oct = octahedron();
        let got: Vec<Vec<usize>> =
            oct.minimal_non_faces().unwrap().iter().map(|f| f.indices().to_vec()).collect();
        assert_eq!(got, minimal_non_faces_brute(&oct));
        assert_eq!(got.len(), 3);
        for f in &got {
            assert_eq!(f.len(), 2);
        }
    }

    #[test]
    fn minimal_non_face_round_trip_reconstruction() {
        // faces = subsets containing no minimal non-face; reconstructing
        // from that description must reproduce the complex
        for k in [
            pentagon(),
            octahedron(),
            boundary_of_simplex(&["1", "2", "3", "4"]).unwrap(),
        ] {
            let non_faces = k.minimal_non_faces().unwrap();
            let m = k.vertex_count();
            let mut facets: Vec<Face> = Vec::new();
            for mask in 0u64..(1 << m) {
                let blocked = non_faces.iter().any(|nf| (mask & nf.mask()) == nf.mask());
                if blocked {
                    continue;
                }
                let extendable = (0..m).any(|v| {
                    mask & (1 << v) == 0
                        && !non_faces
                            .iter()
                            .any(|nf| ((mask | (1 << v)) & nf.mask()) == nf.mask())
                });
                if !extendable {
                    facets.push(face_from_mask(mask));
                }
            }
            let rebuilt = SimplicialComplex::from_parts(k.labels().to_vec(), facets).unwrap();
            assert_eq!(rebuilt, k);
        }
    }

    #[test]
    fn f_vector_examples() {
        let p = pentagon();
        let fv = p.f_vector(DEFAULT_FACE_BUDGET).unwrap();
        assert_eq!(fv.counts(), &[5, 5]);
        assert_eq!(fv.euler(), Some(0));

        let oct = octahedron();
        let fv = oct.f_vector(DEFAULT_FACE_BUDGET).unwrap();
        assert_eq!(fv.counts(), &[6, 12, 8]);
        assert_eq!(fv.euler(), Some(2));
    }

    #[test]
    fn f_vector_matches_brute_force() {
        for k in [pentagon(), octahedron()] {
            let faces = all_faces_brute(&k);
            let mut counts = vec![0u64; k.facet_size()];
            for f in &faces {
                if !f.is_empty() {
                    counts[f.len() - 1] += 1;
                }
            }
            assert_eq!(k.f_vector(DEFAULT_FACE_BUDGET).unwrap().counts(), &counts[..]);
        }
    }

    #[test]
    fn f_vector_budget_truncation() {
        let oct = octahedron();
        let fv = oct.f_vector(10).unwrap();
        assert!(fv.truncated());
        assert_eq!(fv.euler(), None);
        assert_eq!(fv.counts()[0], 6);
        assert_eq!(fv.counts()[1], 12);
        assert_eq!(fv.counts()[2], 8);
    }

    #[test]
    fn enumerate_faces_counts_match_brute_force() {
        let oct = octahedron();
        let sets = oct.enumerate_faces(DEFAULT_FACE_BUDGET).unwrap();
        assert_eq!(sets.total(), 26);
        assert!(sets.masks.iter().all(|level| level.windows(2).all(|w| w[0] < w[1])));
    }
}
