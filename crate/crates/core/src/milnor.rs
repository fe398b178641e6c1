//! Link groups and the triple linking number.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::algebra::{magnus_expand, AlgebraError, FreeWord};
use crate::diagram::{Arc, Diagram, DiagramError, LeafTriple};

/// Sign relating the degree-2 Magnus coefficient of the third longitude
/// to the triple linking number. Fixed by the bundled Borromean rings.
pub const MU_CALIBRATION: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("components {0} and {1} have linking number {2}, expected 0")]
    Linked(usize, usize, i64),
    #[error("longitude of component {component} has exponent sum {sum} in meridian {meridian}")]
    LongitudeExponent { component: usize, meridian: usize, sum: i64 },
}

/// One crossing of a Wirtinger presentation in generator terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WirtingerCrossing {
    pub under_in: usize,
    pub under_out: usize,
    pub over: usize,
    pub sign: i8,
}

/// Generators are the arcs of the diagram (maximal strands between
/// undercrossings). Crossing `x` gives the relation
/// `over^s · under_in · over^-s = under_out` with `s` its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WirtingerPresentation {
    /// Owning component of each generator.
    pub generator_component: Vec<usize>,
    /// Relator per crossing, `over^s under_in over^-s under_out^-1`.
    pub relations: Vec<FreeWord>,
    pub crossings: Vec<WirtingerCrossing>,
    /// Generator of the arc holding the first edge of each component.
    pub meridians: Vec<usize>,
    /// Generator of every diagram edge.
    pub edge_generator: BTreeMap<Arc, usize>,
}

impl WirtingerPresentation {
    pub fn rank(&self) -> usize {
        self.generator_component.len()
    }
}

/// Wirtinger presentation of the link group. Generators are numbered by
/// component, each component starting at the arc holding its first edge.
pub fn wirtinger(d: &Diagram) -> WirtingerPresentation {
    let mut generator_component = Vec::new();
    let mut edge_generator = BTreeMap::new();
    let mut meridians = Vec::new();
    let ends_arc = |a: Arc| d.head(a).map(|h| h.slot == 0).unwrap_or(false);
    for (k, comp) in d.components().iter().enumerate() {
        let len = comp.len();
        // Back up to the start of the arc holding the first edge.
        let mut start = 0;
        if comp.iter().any(|&a| ends_arc(a)) {
            while !ends_arc(comp[(start + len - 1) % len]) {
                start = (start + len - 1) % len;
            }
        }
        meridians.push(generator_component.len());
        generator_component.push(k);
        for step in 0..len {
            let e = comp[(start + step) % len];
            edge_generator.insert(e, generator_component.len() - 1);
            if ends_arc(e) && step + 1 < len {
                generator_component.push(k);
            }
        }
    }
    let rank = generator_component.len();
    let mut relations = Vec::new();
    let mut crossings = Vec::new();
    for x in d.crossings() {
        let wc = WirtingerCrossing {
            under_in: edge_generator[&x.under_in()],
            under_out: edge_generator[&x.under_out()],
            over: edge_generator[&x.over_in()],
            sign: x.sign,
        };
        let s = wc.sign as i64;
        let r = FreeWord::from_syllables(
            rank,
            &[(wc.over, s), (wc.under_in, 1), (wc.over, -s), (wc.under_out, -1)],
        )
        .expect("generators in range");
        relations.push(r);
        crossings.push(wc);
    }
    WirtingerPresentation { generator_component, relations, crossings, meridians, edge_generator }
}

/// Undercrossings met walking once around component `k` from its first
/// edge: (over generator, sign).
fn under_passages(d: &Diagram, p: &WirtingerPresentation, k: usize) -> Vec<(usize, i8)> {
    d.components()[k]
        .iter()
        .filter_map(|&e| {
            let h = d.head(e)?;
            (h.slot == 0).then(|| {
                let x = d.crossings()[h.crossing];
                (p.edge_generator[&x.over_in()], x.sign)
            })
        })
        .collect()
}

/// Each arc generator written as a conjugate of its component's meridian,
/// with conjugators taken in meridians only. Correct modulo the third
/// lower central series subgroup, which is all degree-2 Magnus
/// coefficients can see.
fn arc_words(d: &Diagram, p: &WirtingerPresentation) -> Vec<FreeWord> {
    let n = d.num_components();
    let meridian = |k: usize| FreeWord::generator(n, k).unwrap();
    let mut words: Vec<Option<FreeWord>> = vec![None; p.rank()];
    for k in 0..n {
        let mut conj = FreeWord::identity(n);
        let comp = &d.components()[k];
        for &e in comp {
            let g = p.edge_generator[&e];
            words[g].get_or_insert_with(|| meridian(k).conjugate_by(&conj));
            if let Some(h) = d.head(e) {
                if h.slot == 0 {
                    let x = d.crossings()[h.crossing];
                    let over_comp = p.generator_component[p.edge_generator[&x.over_in()]];
                    conj = meridian(over_comp).pow(x.sign as i64).mul(&conj);
                }
            }
        }
    }
    words.into_iter().map(|w| w.expect("every arc is visited")).collect()
}

/// Longitude of component `k` in the meridians of all components, with the
/// blackboard framing removed.
pub fn longitude_word(d: &Diagram, k: usize) -> Result<FreeWord, MilnorError> {
    let n = d.num_components();
    if k >= n {
        return Err(DiagramError::ComponentIndex { index: k, len: n }.into());
    }
    for j in 0..n {
        if j != k {
            let l = d.linking_number(j, k)?;
            if l != 0 {
                return Err(MilnorError::Linked(j.min(k), j.max(k), l));
            }
        }
    }
    let p = wirtinger(d);
    let words = arc_words(d, &p);
    let mut lon = FreeWord::identity(n);
    for (over, sign) in under_passages(d, &p, k) {
        lon = words[over].pow(sign as i64).mul(&lon);
    }
    let framing = d.framing(k)?;
    lon = lon.mul(&FreeWord::generator(n, k)?.pow(-framing));
    for j in 0..n {
        let sum = lon.exponent_sum(j);
        if sum != 0 {
            return Err(MilnorError::LongitudeExponent { component: k, meridian: j, sum });
        }
    }
    Ok(lon)
}

/// Triple linking number of an algebraically split 3-component diagram.
pub fn mu123(d: &Diagram) -> Result<i64, MilnorError> {
    if d.num_components() != 3 {
        return Err(DiagramError::ComponentCount { expected: 3, found: d.num_components() }.into());
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let l = d.linking_number(i, j)?;
        if l != 0 {
            return Err(MilnorError::Linked(i, j, l));
        }
    }
    let lon = longitude_word(d, 2)?;
    let series = magnus_expand(&lon, 2)?;
    let c: BigInt = series.coefficient(&[0, 1]);
    Ok(MU_CALIBRATION * c.to_i64().expect("small coefficient"))
}

/// Cancel the pairwise linking of the leaves with clasps. For each pair
/// `i < j` in lexicographic order, `|l_ij|` clasps of sign `-sgn(l_ij)`
/// are inserted in the first face both leaves bound.
pub fn build_f0(leaves: &LeafTriple) -> Result<Diagram, MilnorError> {
    let mut d = leaves.ordered();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let l = d.linking_number(i, j)?;
        let sign: i8 = if l > 0 { -1 } else { 1 };
        for _ in 0..l.abs() {
            let (a, b) = clasp_site(&d, i, j)?;
            d = d.insert_clasp(a, b, sign)?;
        }
        debug_assert_eq!(d.linking_number(i, j)?, 0);
    }
    Ok(d)
}

fn clasp_site(d: &Diagram, i: usize, j: usize) -> Result<(Arc, Arc), DiagramError> {
    let first = |k: usize| d.components()[k][0];
    if d.is_loop(first(i)) || d.is_loop(first(j)) {
        return Ok((first(i), first(j)));
    }
    for face in d.faces() {
        let on = |k: usize| face.darts.iter().find(|t| d.component_of(t.arc) == Some(k)).map(|t| t.arc);
        if let (Some(a), Some(b)) = (on(i), on(j)) {
            return Ok((a, b));
        }
    }
    Err(DiagramError::NoSharedFace(first(i), first(j)))
}

/// Triple linking number of the split link associated with the leaves.
pub fn mu123_of_leaves(leaves: &LeafTriple) -> Result<i64, MilnorError> {
    mu123(&build_f0(leaves)?)
}
