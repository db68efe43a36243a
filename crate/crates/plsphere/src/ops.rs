//! Constructions that manufacture new complexes from old ones: stellar
//! subdivision, wedge, suspension, and the iterated wedge `K(J)`.
//!
//! Labelling conventions make outputs canonical and replayable:
//!
//! * the wedge copy of `v` is inserted immediately after `v` in the label
//!   table, and the k-th copy is named `v#k` by default;
//! * `K(J)` wedges vertices in table order and creates the copies of each
//!   vertex so that its group reads `v, v#1, …, v#(jᵥ−1)`;
//! * a subdivision vertex at σ is named `w{…}` over σ's labels joined
//!   with `.` unless the caller overrides it.
//!
//! Under these conventions `K(2,1,…,1)` equals the plain wedge at the
//! first vertex as a literal complex, and building `K(J)` in any wedge
//! order yields the identical canonical form.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{boundary_of_simplex, face_from_mask, Face, SimplicialComplex, VertexLabel};
use crate::{Error, Result};

/// One positive multiplicity per vertex of a base complex, in table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTuple(Vec<u32>);

impl MultiplicityTuple {
    pub fn new(entries: Vec<u32>, base: &SimplicialComplex) -> Result<Self> {
        if entries.len() != base.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: base.vertex_count(),
                got: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|&j| j == 0) {
            return Err(Error::InvalidParameters(format!(
                "multiplicity of vertex {} must be positive",
                base.label(pos)
            )));
        }
        Ok(MultiplicityTuple(entries))
    }

    pub fn all_ones(base: &SimplicialComplex) -> Self {
        MultiplicityTuple(vec![1; base.vertex_count()])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&j| j == 1)
    }
}

/// One selection per vertex, bounded by the paired multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionTuple(Vec<u32>);

impl SelectionTuple {
    pub fn new(
        entries: Vec<u32>,
        j: &MultiplicityTuple,
        base: &SimplicialComplex,
    ) -> Result<Self> {
        if entries.len() != j.entries().len() {
            return Err(Error::LengthMismatch {
                expected: j.entries().len(),
                got: entries.len(),
            });
        }
        for (v, (&s, &jv)) in entries.iter().zip(j.entries()).enumerate() {
            if s >= jv {
                return Err(Error::BoundsViolation {
                    vertex: base.label(v).as_str().to_owned(),
                    selected: s,
                    multiplicity: jv,
                });
            }
        }
        Ok(SelectionTuple(entries))
    }

    pub fn zeros(j: &MultiplicityTuple) -> Self {
        SelectionTuple(vec![0; j.entries().len()])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

/// The wedge of `k` at the vertex labelled `v`.
///
/// Facets are the wedged edge `{v, v'}` joined with the link of `v`, plus
/// both copies over every facet avoiding `v`. The copy label is inserted
/// right after `v` in the table; the link of the copy is `k` itself with
/// its original labels.
pub fn wedge(k: &SimplicialComplex, v: &str, copy_label: &str) -> Result<SimplicialComplex> {
    let v_pos = k.index_of(v).ok_or_else(|| Error::NotAVertex(v.to_owned()))?;
    let copy = VertexLabel::new(copy_label)?;
    if k.index_of(copy_label).is_some() {
        return Err(Error::LabelCollision(copy_label.to_owned()));
    }

    let mut labels = k.labels().to_vec();
    labels.insert(v_pos + 1, copy);
    let shift = |i: usize| if i <= v_pos { i } else { i + 1 };
    let copy_pos = v_pos + 1;

    let mut facets = Vec::new();
    for facet in k.facets() {
        let mapped: Vec<usize> = facet.indices().iter().map(|&i| shift(i)).collect();
        if facet.contains(v_pos) {
            let mut with_copy = mapped.clone();
            with_copy.push(copy_pos);
            facets.push(Face::from_unsorted(with_copy)?);
        } else {
            let mut with_v = mapped.clone();
            with_v.push(v_pos);
            facets.push(Face::from_unsorted(with_v)?);
            let mut with_copy = mapped;
            with_copy.push(copy_pos);
            facets.push(Face::from_unsorted(with_copy)?);
        }
    }
    SimplicialComplex::from_parts(labels, facets)
}

/// Smallest unused copy label `v#k`, `k ≥ 1`.
pub fn next_copy_label(k: &SimplicialComplex, v: &str) -> String {
    let mut i = 1u32;
    loop {
        let candidate = format!("{v}#{i}");
        if k.index_of(&candidate).is_none() {
            return candidate;
        }
        i += 1;
    }
}

/// Default name for the vertex subdividing σ: `w{…}` over σ's labels.
pub fn default_subdivision_label(k: &SimplicialComplex, sigma: &Face) -> String {
    let mut out = String::from("w{");
    for (i, label) in k.face_labels(sigma).iter().enumerate() {
        if i > 0 {
            out.push('.');
        }
        out.push_str(label);
    }
    out.push('}');
    out
}

/// The stellar subdivision of `k` at the face σ.
///
/// The star of σ is removed and replaced by the cone over ∂σ ∗ lk(σ) with
/// apex `new_label`. Subdividing a single vertex degenerates to renaming
/// that vertex, which keeps the composition rules of the larger
/// constructions uniform.
pub fn stellar_subdivision(
    k: &SimplicialComplex,
    sigma: &Face,
    new_label: &str,
) -> Result<SimplicialComplex> {
    if sigma.is_empty() {
        return Err(Error::InvalidParameters("cannot subdivide the empty face".to_owned()));
    }
    if !k.is_face(sigma) {
        return Err(Error::NotAFace(k.face_string(sigma)));
    }
    let fresh = VertexLabel::new(new_label)?;
    if k.index_of(new_label).is_some() {
        return Err(Error::LabelCollision(new_label.to_owned()));
    }

    if sigma.len() == 1 {
        let mut labels = k.labels().to_vec();
        labels[sigma.indices()[0]] = fresh;
        return SimplicialComplex::from_parts(labels, k.facets().to_vec());
    }

    let mut labels = k.labels().to_vec();
    labels.push(fresh);
    let apex = labels.len() - 1;

    let mut facets: Vec<Face> = Vec::new();
    for facet in k.facets() {
        if !sigma.is_subset_of(facet) {
            facets.push(facet.clone());
        } else {
            let link_part = facet.minus(sigma);
            for &x in sigma.indices() {
                let mut indices: Vec<usize> = sigma
                    .indices()
                    .iter()
                    .copied()
                    .filter(|&i| i != x)
                    .chain(link_part.indices().iter().copied())
                    .collect();
                indices.push(apex);
                facets.push(Face::from_unsorted(indices)?);
            }
        }
    }
    SimplicialComplex::from_parts(labels, facets)
}

/// The suspension `∂I ∗ k` with poles `north` and `south`.
///
/// The pole pair is a non-face of the result.
pub fn suspension(
    k: &SimplicialComplex,
    north: &str,
    south: &str,
) -> Result<SimplicialComplex> {
    if k.index_of(north).is_some() {
        return Err(Error::LabelCollision(north.to_owned()));
    }
    if k.index_of(south).is_some() {
        return Err(Error::LabelCollision(south.to_owned()));
    }
    if north == south {
        return Err(Error::LabelCollision(north.to_owned()));
    }
    boundary_of_simplex(&[north, south])?.join(k)
}

/// The iterated wedge `K(J)` with `jᵥ` copies of each vertex.
///
/// Wedges are applied in increasing vertex order; each vertex's copies are
/// created highest index first, so the final table groups every vertex
/// with its copies in ascending order. The result is independent of wedge
/// order as a literal canonical complex, and `K(1,…,1)` is `K` itself.
pub fn j_construction(
    k: &SimplicialComplex,
    j: &MultiplicityTuple,
) -> Result<SimplicialComplex> {
    if j.entries().len() != k.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: k.vertex_count(),
            got: j.entries().len(),
        });
    }
    let mut current = k.clone();
    for (v, &multiplicity) in j.entries().iter().enumerate() {
        let base_label = k.label(v).as_str().to_owned();
        for copy_index in (1..multiplicity).rev() {
            let copy_label = format!("{base_label}#{copy_index}");
            current = wedge(&current, &base_label, &copy_label)?;
        }
    }
    Ok(current)
}

/// Labels of the face of `K(J)` assembled by a selection tuple: the chosen
/// copy of every vertex with multiplicity at least two.
pub fn assembled_face_labels(
    base: &SimplicialComplex,
    j: &MultiplicityTuple,
    s: &SelectionTuple,
) -> Result<Vec<String>> {
    if j.entries().len() != base.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: base.vertex_count(),
            got: j.entries().len(),
        });
    }
    let mut labels = Vec::new();
    for (v, (&jv, &sv)) in j.entries().iter().zip(s.entries()).enumerate() {
        if sv >= jv {
            return Err(Error::BoundsViolation {
                vertex: base.label(v).as_str().to_owned(),
                selected: sv,
                multiplicity: jv,
            });
        }
        if jv == 1 {
            continue;
        }
        if sv == 0 {
            labels.push(base.label(v).as_str().to_owned());
        } else {
            labels.push(format!("{}#{sv}", base.label(v)));
        }
    }
    Ok(labels)
}

/// The assembled face as a face of `j_construction(base, j)`.
///
/// Membership is checked, not assumed; a miss would mean the construction
/// itself is broken and is reported as a contradiction.
pub fn assembled_face(
    base: &SimplicialComplex,
    j: &MultiplicityTuple,
    s: &SelectionTuple,
) -> Result<Face> {
    let kj = j_construction(base, j)?;
    let labels = assembled_face_labels(base, j, s)?;
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let face = kj.face_from_labels(&refs)?;
    if !kj.is_face(&face) {
        return Err(Error::ConstructionContradicted(format!(
            "assembled face {} is not a face of the iterated wedge",
            kj.face_string(&face)
        )));
    }
    Ok(face)
}

/// The wedge rebuilt from minimal non-faces instead of from facets.
///
/// Each minimal non-face through `v` gains the copy alongside `v`; the
/// complex reconstructed from the widened family must coincide with
/// [`wedge`], which is the defining cross-check of the construction.
pub fn wedge_via_nonface_duplication(
    k: &SimplicialComplex,
    v: &str,
    copy_label: &str,
) -> Result<SimplicialComplex> {
    let v_pos = k.index_of(v).ok_or_else(|| Error::NotAVertex(v.to_owned()))?;
    let copy = VertexLabel::new(copy_label)?;
    if k.index_of(copy_label).is_some() {
        return Err(Error::LabelCollision(copy_label.to_owned()));
    }
    let m = k.vertex_count() + 1;
    if m > 20 {
        return Err(Error::InvalidParameters(format!(
            "non-face reconstruction is exponential and capped at 20 vertices, got {m}"
        )));
    }

    let mut labels = k.labels().to_vec();
    labels.insert(v_pos + 1, copy);
    let shift = |i: usize| if i <= v_pos { i } else { i + 1 };
    let copy_pos = v_pos + 1;

    let non_faces: Vec<u64> = k
        .minimal_non_faces()?
        .iter()
        .map(|nf| {
            let mut mask: u64 = nf.indices().iter().map(|&i| 1u64 << shift(i)).sum();
            if nf.contains(v_pos) {
                mask |= 1u64 << copy_pos;
            }
            mask
        })
        .collect();

    let blocked = |mask: u64| non_faces.iter().any(|&nf| mask & nf == nf);
    let mut facets = Vec::new();
    for mask in 0u64..(1 << m) {
        if blocked(mask) {
            continue;
        }
        let maximal = (0..m).all(|u| mask & (1 << u) != 0 || blocked(mask | (1 << u)));
        if maximal {
            facets.push(face_from_mask(mask));
        }
    }
    SimplicialComplex::from_parts(labels, facets)
}
