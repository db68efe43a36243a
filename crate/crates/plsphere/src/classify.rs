//! Covering pairs and the wedge/suspension dichotomy.
//!
//! A pair of vertices that meets every facet is either a wedged edge (the
//! pair is a face) or a suspended pair (it is not); both kinds come with a
//! reconstruction witness that is re-verified rather than trusted. A
//! complex with no wedged edge is a seed; unwinding wedged edges one link
//! at a time decomposes any complex as a seed with a multiplicity tuple.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::{Face, SimplicialComplex, VertexLabel};
use crate::ops::{next_copy_label, wedge, MultiplicityTuple};
use crate::{Error, Result};

/// How a covering pair sits in the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// The pair is a face; the complex is a wedge with this wedged edge.
    WedgedEdge,
    /// The pair is a non-face; the complex is a suspension with these poles.
    SuspendedPair,
}

/// A verified classification of one covering pair.
///
/// For a wedged edge `{v,w}` the witness is `link(K,w)` and wedging it at
/// `v` with copy `w` reproduces `K`; for a suspended pair the witness is
/// `link(K,v)` and suspending it with poles `v,w` reproduces `K`.
#[derive(Clone, Debug)]
pub struct PairClassification {
    pub pair: (usize, usize),
    pub kind: PairKind,
    pub witness: SimplicialComplex,
}

/// Seed verdict with the offending wedged edge when negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedVerdict {
    pub seed: bool,
    pub wedged_edge: Option<(usize, usize)>,
}

/// Suspension verdict with a witness pair when positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspensionVerdict {
    pub suspended: bool,
    pub pair: Option<(usize, usize)>,
}

/// A complex expressed as an iterated wedge over a seed.
#[derive(Clone, Debug)]
pub struct SeedDecomposition {
    pub seed: SimplicialComplex,
    pub j: MultiplicityTuple,
    /// input label → (seed vertex label, copy index); copy 0 is the
    /// surviving vertex itself.
    pub label_map: Vec<(VertexLabel, (VertexLabel, u32))>,
}

impl SeedDecomposition {
    /// Replays the wedges recorded in `j` over the seed; the result is
    /// isomorphic to the decomposed complex.
    pub fn rebuild(&self) -> Result<SimplicialComplex> {
        let mut current = self.seed.clone();
        for (v, &jv) in self.j.entries().iter().enumerate() {
            let base = self.seed.label(v).as_str().to_owned();
            for _ in 1..jv {
                let copy = next_copy_label(&current, &base);
                current = wedge(&current, &base, &copy)?;
            }
        }
        Ok(current)
    }
}

/// All unordered vertex pairs meeting every facet, in index order.
pub fn covering_pairs(k: &SimplicialComplex) -> Vec<(usize, usize)> {
    let m = k.vertex_count();
    let mut pairs = Vec::new();
    if m < 2 {
        return pairs;
    }
    if let Some(masks) = k.facet_masks() {
        for a in 0..m {
            for b in (a + 1)..m {
                let pair = (1u64 << a) | (1u64 << b);
                if masks.iter().all(|&f| f & pair != 0) {
                    pairs.push((a, b));
                }
            }
        }
    } else {
        for a in 0..m {
            for b in (a + 1)..m {
                if k.facets().iter().all(|f| f.contains(a) || f.contains(b)) {
                    pairs.push((a, b));
                }
            }
        }
    }
    pairs
}

fn is_covering(k: &SimplicialComplex, pair: (usize, usize)) -> bool {
    k.facets().iter().all(|f| f.contains(pair.0) || f.contains(pair.1))
}

fn pair_string(k: &SimplicialComplex, pair: (usize, usize)) -> String {
    format!("{{{},{}}}", k.label(pair.0), k.label(pair.1))
}

/// Classifies a covering pair as wedged edge or suspended pair and
/// verifies the corresponding reconstruction witness.
///
/// Verification failure means the input is not actually the wedge or
/// suspension the dichotomy promises for spheres, e.g. because the input
/// is not a sphere at all.
pub fn classify_pair(
    k: &SimplicialComplex,
    pair: (usize, usize),
) -> Result<PairClassification> {
    if !is_covering(k, pair) {
        return Err(Error::NotCoveringPair(pair_string(k, pair)));
    }
    let (v, w) = pair;
    let edge = Face::new(alloc::vec![v, w]).expect("pair indices are ordered");
    if k.is_face(&edge) {
        let witness = k.link(&Face::new(alloc::vec![w]).expect("singleton"))?;
        let rebuilt = wedge(&witness, k.label(v).as_str(), k.label(w).as_str())?;
        if !rebuilt.same_labelled_faces(k) {
            return Err(Error::WitnessVerificationFailed(format!(
                "wedge of link at {} along {} differs from the complex",
                k.label(w),
                pair_string(k, pair)
            )));
        }
        Ok(PairClassification { pair, kind: PairKind::WedgedEdge, witness })
    } else {
        let witness = k.link(&Face::new(alloc::vec![v]).expect("singleton"))?;
        let rebuilt = crate::ops::suspension(&witness, k.label(v).as_str(), k.label(w).as_str())?;
        if !rebuilt.same_labelled_faces(k) {
            return Err(Error::WitnessVerificationFailed(format!(
                "suspension of link at {} with poles {} differs from the complex",
                k.label(v),
                pair_string(k, pair)
            )));
        }
        Ok(PairClassification { pair, kind: PairKind::SuspendedPair, witness })
    }
}

/// A complex is a seed when no covering pair is a face.
pub fn is_seed(k: &SimplicialComplex) -> SeedVerdict {
    for pair in covering_pairs(k) {
        let edge = Face::new(alloc::vec![pair.0, pair.1]).expect("ordered");
        if k.is_face(&edge) {
            return SeedVerdict { seed: false, wedged_edge: Some(pair) };
        }
    }
    SeedVerdict { seed: true, wedged_edge: None }
}

/// A complex is suspended when some covering pair is a non-face.
pub fn is_suspended(k: &SimplicialComplex) -> SuspensionVerdict {
    for pair in covering_pairs(k) {
        let edge = Face::new(alloc::vec![pair.0, pair.1]).expect("ordered");
        if !k.is_face(&edge) {
            return SuspensionVerdict { suspended: true, pair: Some(pair) };
        }
    }
    SuspensionVerdict { suspended: false, pair: None }
}

/// Unwinds wedged edges until none remain.
///
/// At each step the lexicographically least wedged edge `{v,w}` is
/// removed by replacing the complex with its link at `w`, crediting the
/// copy to `v`'s group. The returned tuple is aligned with the seed's
/// label table; rebuilding with it is isomorphic to the input.
pub fn seed_decomposition(k: &SimplicialComplex) -> Result<SeedDecomposition> {
    let mut current = k.clone();
    // group representative per input label, with absorbed copies in order
    let mut group_of: Vec<(String, String)> = k
        .labels()
        .iter()
        .map(|l| (l.as_str().to_owned(), l.as_str().to_owned()))
        .collect();

    loop {
        let verdict = is_seed(&current);
        let (v, w) = match verdict.wedged_edge {
            None => break,
            Some(pair) => pair,
        };
        let survivor = current.label(v).as_str().to_owned();
        let removed = current.label(w).as_str().to_owned();
        // everything grouped under the removed vertex now belongs to the survivor
        let target = group_of
            .iter()
            .find(|(label, _)| *label == survivor)
            .map(|(_, head)| head.clone())
            .expect("survivor is an input label");
        for (_, head) in group_of.iter_mut() {
            if *head == removed {
                *head = target.clone();
            }
        }
        current = current.link(&Face::new(alloc::vec![w]).expect("singleton"))?;
    }

    let mut entries = Vec::with_capacity(current.vertex_count());
    for seed_label in current.labels() {
        let copies =
            group_of.iter().filter(|(_, head)| head == seed_label.as_str()).count() as u32;
        entries.push(copies);
    }
    // copy indices: the surviving vertex is copy 0, absorbed labels number
    // upward in input-table order
    let mut label_map: Vec<(VertexLabel, (VertexLabel, u32))> = Vec::new();
    let mut next_index: Vec<u32> = alloc::vec![1; current.vertex_count()];
    for (input, head) in &group_of {
        let seed_pos = current
            .index_of(head)
            .expect("group heads survive into the seed");
        let index = if input == head {
            0
        } else {
            let i = next_index[seed_pos];
            next_index[seed_pos] += 1;
            i
        };
        label_map.push((
            VertexLabel::new(input).expect("input labels are valid"),
            (current.label(seed_pos).clone(), index),
        ));
    }

    let j = MultiplicityTuple::new(entries, &current)?;
    Ok(SeedDecomposition { seed: current, j, label_map })
}
