//! Oriented link diagrams in planar-diagram (PD) form.
//!
//! A crossing lists four edge ids counterclockwise, starting at the incoming
//! under-strand. The under-strand runs from slot 0 to slot 2. On a positive
//! crossing the over-strand runs from slot 3 to slot 1, on a negative one
//! from slot 1 to slot 3. Components are cycles of edge ids in the
//! direction of travel; a component with no crossings is a single edge.
//!
//! Framing is blackboard: the framing of a component is its self-writhe.

mod braid;
mod faces;
mod ops;
mod pd;
mod seifert;

pub use braid::braid_closure;
pub use faces::{Dart, Face};
pub use pd::{parse_pd, PdCrossing, PdDocument};
pub use seifert::{seifert_circles, seifert_matrix, seifert_matrix_with_outer_face, SeifertCircle};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Arc = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed document: {0}")]
    Syntax(String),
    #[error("crossing {crossing}: sign must be +1 or -1, got {sign}")]
    BadSign { crossing: usize, sign: i64 },
    #[error("crossing {crossing}: arc ids must be positive, got {arc}")]
    NonPositiveArc { crossing: usize, arc: i64 },
    #[error("arc {arc} is listed in more than one component position")]
    RepeatedComponentArc { arc: Arc },
    #[error("component {component} is empty")]
    EmptyComponent { component: usize },
    #[error("crossing {crossing}: arc {arc} does not belong to any component")]
    UnknownArc { crossing: usize, arc: Arc },
    #[error("crossing {crossing}: arc {arc} appears {count} times in the diagram, expected 2")]
    ArcCount { crossing: usize, arc: Arc, count: usize },
    #[error("arc {arc} never meets a crossing but its component has other arcs")]
    DanglingArc { arc: Arc },
    #[error("crossing {crossing}: strand does not follow the component cycles")]
    NotClosed { crossing: usize },
    #[error("crossing {crossing}: sign disagrees with the strand orientations")]
    SignMismatch { crossing: usize },
    #[error("crossing {crossing}: arc {arc} enters or leaves a crossing twice")]
    RepeatedPassage { crossing: usize, arc: Arc },
    #[error("diagram is not planar: a piece with {crossings} crossings has {faces} faces")]
    NonPlanar { crossings: usize, faces: usize },
    #[error("component index {index} out of range for {len} components")]
    ComponentIndex { index: usize, len: usize },
    #[error("crossing index {index} out of range for {len} crossings")]
    CrossingIndex { index: usize, len: usize },
    #[error("arc {0} is not in the diagram")]
    MissingArc(Arc),
    #[error("linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),
    #[error("component order must be a permutation of 0..{len}")]
    BadOrder { len: usize },
    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("arcs {0} and {1} do not bound a common face")]
    NoSharedFace(Arc, Arc),
    #[error("sign must be +1 or -1, got {0}")]
    Sign(i64),
    #[error("braid generator {gen} out of range for {strands} strands")]
    BraidGenerator { gen: i64, strands: usize },
}

/// A crossing in PD form. See the module docs for the slot convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Crossing {
    pub arcs: [Arc; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn new(arcs: [Arc; 4], sign: i8) -> Self {
        Self { arcs, sign }
    }

    pub fn under_in(&self) -> Arc {
        self.arcs[0]
    }

    pub fn under_out(&self) -> Arc {
        self.arcs[2]
    }

    pub fn over_in_slot(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    pub fn over_out_slot(&self) -> usize {
        if self.sign > 0 {
            1
        } else {
            3
        }
    }

    pub fn over_in(&self) -> Arc {
        self.arcs[self.over_in_slot()]
    }

    pub fn over_out(&self) -> Arc {
        self.arcs[self.over_out_slot()]
    }

    /// Whether the strand at `slot` points into the crossing.
    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in_slot()
    }
}

/// Position of an edge end: crossing index and slot 0..4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub crossing: usize,
    pub slot: usize,
}

/// A validated oriented link diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<Arc>>,
    component_of: BTreeMap<Arc, usize>,
    next: BTreeMap<Arc, Arc>,
    head: BTreeMap<Arc, Slot>,
    tail: BTreeMap<Arc, Slot>,
}

impl Diagram {
    /// Validate and build a diagram.
    pub fn new(crossings: Vec<Crossing>, components: Vec<Vec<Arc>>) -> Result<Self, DiagramError> {
        for (i, c) in crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::BadSign { crossing: i, sign: c.sign as i64 });
            }
            if let Some(&a) = c.arcs.iter().find(|&&a| a == 0) {
                return Err(DiagramError::NonPositiveArc { crossing: i, arc: a as i64 });
            }
        }
        let mut component_of = BTreeMap::new();
        let mut next = BTreeMap::new();
        for (k, comp) in components.iter().enumerate() {
            if comp.is_empty() {
                return Err(DiagramError::EmptyComponent { component: k });
            }
            for (i, &a) in comp.iter().enumerate() {
                if a == 0 {
                    return Err(DiagramError::NonPositiveArc { crossing: 0, arc: 0 });
                }
                if component_of.insert(a, k).is_some() {
                    return Err(DiagramError::RepeatedComponentArc { arc: a });
                }
                next.insert(a, comp[(i + 1) % comp.len()]);
            }
        }

        let mut count: BTreeMap<Arc, (usize, usize)> = BTreeMap::new();
        for (i, c) in crossings.iter().enumerate() {
            for &a in &c.arcs {
                if !component_of.contains_key(&a) {
                    return Err(DiagramError::UnknownArc { crossing: i, arc: a });
                }
                count.entry(a).or_insert((0, i)).0 += 1;
            }
        }
        for (&a, &(n, first)) in &count {
            if n != 2 {
                return Err(DiagramError::ArcCount { crossing: first, arc: a, count: n });
            }
        }
        for comp in &components {
            if comp.len() > 1 {
                if let Some(&a) = comp.iter().find(|a| !count.contains_key(a)) {
                    return Err(DiagramError::DanglingArc { arc: a });
                }
            }
        }

        for (i, c) in crossings.iter().enumerate() {
            let follows = |from: Arc, to: Arc| from != to && next[&from] == to;
            if !follows(c.under_in(), c.under_out()) {
                return Err(DiagramError::NotClosed { crossing: i });
            }
            if !follows(c.over_in(), c.over_out()) {
                return Err(if follows(c.over_out(), c.over_in()) {
                    DiagramError::SignMismatch { crossing: i }
                } else {
                    DiagramError::NotClosed { crossing: i }
                });
            }
        }

        let mut head = BTreeMap::new();
        let mut tail = BTreeMap::new();
        for (i, c) in crossings.iter().enumerate() {
            for (s, &a) in c.arcs.iter().enumerate() {
                let table = if c.is_incoming(s) { &mut head } else { &mut tail };
                if table.insert(a, Slot { crossing: i, slot: s }).is_some() {
                    // On a two-arc cycle both over directions follow the
                    // cycle; a wrong sign then shows up as a repeated passage.
                    let reversed = next[&c.over_out()] == c.over_in();
                    return Err(if s % 2 == 1 && reversed {
                        DiagramError::SignMismatch { crossing: i }
                    } else {
                        DiagramError::RepeatedPassage { crossing: i, arc: a }
                    });
                }
            }
        }

        let d = Self { crossings, components, component_of, next, head, tail };
        d.check_planar()?;
        Ok(d)
    }

    fn check_planar(&self) -> Result<(), DiagramError> {
        let n = self.crossings.len();
        if n == 0 {
            return Ok(());
        }
        let piece = self.crossing_pieces();
        let mut crossings_in = BTreeMap::<usize, usize>::new();
        for &p in &piece {
            *crossings_in.entry(p).or_default() += 1;
        }
        let mut faces_in = BTreeMap::<usize, usize>::new();
        for face in self.faces() {
            let slot = self.arrival(face.darts[0]);
            *faces_in.entry(piece[slot.crossing]).or_default() += 1;
        }
        for (p, &v) in &crossings_in {
            let f = faces_in.get(p).copied().unwrap_or(0);
            if f != v + 2 {
                return Err(DiagramError::NonPlanar { crossings: v, faces: f });
            }
        }
        Ok(())
    }

    /// Label of the connected piece of the projection containing each crossing.
    fn crossing_pieces(&self) -> Vec<usize> {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for a in self.head.keys() {
            let (h, t) = (self.head[a].crossing, self.tail[a].crossing);
            let (rh, rt) = (find(&mut parent, h), find(&mut parent, t));
            parent[rh] = rt;
        }
        (0..n).map(|i| find(&mut parent, i)).collect()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<Arc>] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.components.iter().flatten().copied()
    }

    pub fn max_arc(&self) -> Arc {
        self.arcs().max().unwrap_or(0)
    }

    pub fn component_of(&self, arc: Arc) -> Option<usize> {
        self.component_of.get(&arc).copied()
    }

    /// The arc following `arc` along its component.
    pub fn next_arc(&self, arc: Arc) -> Option<Arc> {
        self.next.get(&arc).copied()
    }

    /// Where `arc` ends (enters a crossing). `None` for crossingless loops.
    pub fn head(&self, arc: Arc) -> Option<Slot> {
        self.head.get(&arc).copied()
    }

    /// Where `arc` starts (leaves a crossing). `None` for crossingless loops.
    pub fn tail(&self, arc: Arc) -> Option<Slot> {
        self.tail.get(&arc).copied()
    }

    pub fn is_loop(&self, arc: Arc) -> bool {
        self.component_of.contains_key(&arc) && !self.head.contains_key(&arc)
    }

    fn check_component(&self, i: usize) -> Result<(), DiagramError> {
        if i >= self.components.len() {
            Err(DiagramError::ComponentIndex { index: i, len: self.components.len() })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_crossing(&self, c: usize) -> Result<(), DiagramError> {
        if c >= self.crossings.len() {
            Err(DiagramError::CrossingIndex { index: c, len: self.crossings.len() })
        } else {
            Ok(())
        }
    }

    /// Components of the under- and over-strand of crossing `c`.
    pub fn crossing_components(&self, c: usize) -> (usize, usize) {
        let x = &self.crossings[c];
        (self.component_of[&x.under_in()], self.component_of[&x.over_in()])
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Blackboard framing: sum of signs of the self-crossings of component `i`.
    pub fn framing(&self, i: usize) -> Result<i64, DiagramError> {
        self.check_component(i)?;
        Ok((0..self.crossings.len())
            .filter(|&c| self.crossing_components(c) == (i, i))
            .map(|c| self.crossings[c].sign as i64)
            .sum())
    }

    pub fn framings(&self) -> Vec<i64> {
        (0..self.num_components()).map(|i| self.framing(i).unwrap()).collect()
    }

    /// Half the signed count of crossings between components `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, DiagramError> {
        self.check_component(i)?;
        self.check_component(j)?;
        if i == j {
            return Err(DiagramError::SameComponent(i));
        }
        let total: i64 = (0..self.crossings.len())
            .filter(|&c| {
                let (u, o) = self.crossing_components(c);
                (u, o) == (i, j) || (u, o) == (j, i)
            })
            .map(|c| self.crossings[c].sign as i64)
            .sum();
        debug_assert!(total % 2 == 0, "planar diagrams have even mixed sign sums");
        Ok(total / 2)
    }

    /// Linking matrix with framings on the diagonal.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_components();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            self.framing(i).unwrap()
                        } else {
                            self.linking_number(i, j).unwrap()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Whether the projection is connected (every component meets every
    /// other through a chain of crossings).
    pub fn is_connected(&self) -> bool {
        let n = self.num_components();
        if n <= 1 {
            return true;
        }
        let mut seen = BTreeSet::from([0usize]);
        let mut stack = vec![0usize];
        while let Some(k) = stack.pop() {
            for c in 0..self.crossings.len() {
                let (u, o) = self.crossing_components(c);
                for (a, b) in [(u, o), (o, u)] {
                    if a == k && seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
        }
        seen.len() == n
    }
}

/// A 3-component diagram with an explicit leaf order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafTriple {
    diagram: Diagram,
    leaves: [usize; 3],
}

impl LeafTriple {
    /// `leaves[k]` is the component index of leaf `k`.
    pub fn new(diagram: Diagram, leaves: [usize; 3]) -> Result<Self, DiagramError> {
        if diagram.num_components() != 3 {
            return Err(DiagramError::ComponentCount { expected: 3, found: diagram.num_components() });
        }
        let mut sorted = leaves;
        sorted.sort();
        if sorted != [0, 1, 2] {
            return Err(DiagramError::BadOrder { len: 3 });
        }
        Ok(Self { diagram, leaves })
    }

    /// Leaves in the diagram's own component order.
    pub fn in_order(diagram: Diagram) -> Result<Self, DiagramError> {
        Self::new(diagram, [0, 1, 2])
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn leaves(&self) -> [usize; 3] {
        self.leaves
    }

    /// The diagram with components renumbered so leaf `k` is component `k`.
    pub fn ordered(&self) -> Diagram {
        self.diagram.reorder(&self.leaves).expect("leaf order is a permutation")
    }

    pub fn framings(&self) -> [i64; 3] {
        self.leaves.map(|k| self.diagram.framing(k).unwrap())
    }

    /// `(l12, l13, l23)` in leaf order.
    pub fn linkings(&self) -> [i64; 3] {
        let [a, b, c] = self.leaves;
        let lk = |i, j| self.diagram.linking_number(i, j).unwrap();
        [lk(a, b), lk(a, c), lk(b, c)]
    }
}
