use std::collections::{BTreeMap, BTreeSet};

use super::{Arc, Crossing, Diagram, DiagramError, Slot};

/// An arc traversed forwards (along the orientation) or backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub arc: Arc,
    pub forward: bool,
}

/// A complementary region of the projection, as the cycle of darts that
/// keeps it on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn contains(&self, dart: Dart) -> bool {
        self.darts.contains(&dart)
    }
}

impl Diagram {
    pub(crate) fn arrival(&self, d: Dart) -> Slot {
        if d.forward {
            self.head(d.arc).unwrap()
        } else {
            self.tail(d.arc).unwrap()
        }
    }

    /// Faces of the projection. Crossingless components bound no faces of
    /// their own and are ignored. Order is deterministic: faces are
    /// discovered by scanning arcs in component order, forward dart first.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for arc in self.arcs() {
            if self.is_loop(arc) {
                continue;
            }
            for forward in [true, false] {
                let start = Dart { arc, forward };
                if seen.contains(&start) {
                    continue;
                }
                let mut darts = Vec::new();
                let mut d = start;
                loop {
                    seen.insert(d);
                    darts.push(d);
                    let s = self.arrival(d);
                    let out = (s.slot + 3) % 4;
                    let a = self.crossings()[s.crossing].arcs[out];
                    let here = Slot { crossing: s.crossing, slot: out };
                    d = Dart { arc: a, forward: self.tail(a) == Some(here) };
                    if d == start {
                        break;
                    }
                }
                faces.push(Face { darts });
            }
        }
        faces
    }

    /// Index into `faces` of the face on the left of each dart.
    pub(crate) fn left_faces(faces: &[Face]) -> BTreeMap<Dart, usize> {
        let mut map = BTreeMap::new();
        for (k, f) in faces.iter().enumerate() {
            for &d in &f.darts {
                map.insert(d, k);
            }
        }
        map
    }

    /// Insert a clasp between `arc` and `other` so that their components'
    /// linking number changes by `sign`.
    ///
    /// A finger pushed out of `arc` through a face both arcs bound hooks
    /// `other`, producing two crossings of sign `sign`. A crossingless loop
    /// can take either role and needs no shared face.
    pub fn insert_clasp(&self, arc: Arc, other: Arc, sign: i8) -> Result<Diagram, DiagramError> {
        if sign != 1 && sign != -1 {
            return Err(DiagramError::Sign(sign as i64));
        }
        for a in [arc, other] {
            if self.component_of(a).is_none() {
                return Err(DiagramError::MissingArc(a));
            }
        }
        if arc == other {
            return Err(DiagramError::NoSharedFace(arc, other));
        }
        // A loop is easiest to treat as the hooked strand.
        let (e, e2) = if self.is_loop(arc) && !self.is_loop(other) { (other, arc) } else { (arc, other) };
        let faces = self.faces();
        let (east, east2) = if self.is_loop(e) || self.is_loop(e2) {
            (true, true)
        } else {
            let fwd = |a: Arc| Dart { arc: a, forward: true };
            let back = |a: Arc| Dart { arc: a, forward: false };
            let shared = faces.iter().find(|f| {
                (f.contains(fwd(e)) || f.contains(back(e))) && (f.contains(fwd(e2)) || f.contains(back(e2)))
            });
            let f = shared.ok_or(DiagramError::NoSharedFace(arc, other))?;
            // Local frame: the face lies above `e` and below `e2`.
            (f.contains(fwd(e)), !f.contains(fwd(e2)))
        };

        let mut id = self.max_arc();
        let mut fresh = || {
            id += 1;
            id
        };
        let (tip, e_last) = (fresh(), if self.is_loop(e) { e } else { fresh() });
        let (mid2, e2_last) = (fresh(), if self.is_loop(e2) { e2 } else { fresh() });

        let mut crossings = self.crossings().to_vec();
        if let Some(h) = self.head(e) {
            crossings[h.crossing].arcs[h.slot] = e_last;
        }
        if let Some(h) = self.head(e2) {
            crossings[h.crossing].arcs[h.slot] = e2_last;
        }

        // The finger leaves `e` northwards at its first crossing and returns
        // southwards at the second; the first lies west when `e` runs east.
        // `e2` crosses both, entering from the west when it runs east.
        let d2: i8 = if east2 { 1 } else { -1 };
        let finger_over_first = sign == -d2;
        let e2_from = if east2 { Compass::W } else { Compass::E };
        let e2_pieces = |west: bool| match (east2, west) {
            (true, true) | (false, false) => (e2, mid2),
            _ => (mid2, e2_last),
        };
        let (in1, out1) = e2_pieces(east);
        let (in2, out2) = e2_pieces(!east);
        let first =
            compass_crossing(Compass::S, e, Compass::N, tip, e2_from, in1, out1, finger_over_first);
        let second =
            compass_crossing(Compass::N, tip, Compass::S, e_last, e2_from, in2, out2, !finger_over_first);
        debug_assert_eq!((first.sign, second.sign), (sign, sign));
        crossings.push(first);
        crossings.push(second);

        let mut components = self.components().to_vec();
        let insert_after = |list: &mut Vec<Arc>, a: Arc, new: &[Arc]| {
            let pos = list.iter().position(|&x| x == a).unwrap();
            list.splice(pos + 1..pos + 1, new.iter().copied());
        };
        let ce = self.component_of(e).unwrap();
        let ce2 = self.component_of(e2).unwrap();
        let new_e: Vec<Arc> = if self.is_loop(e) { vec![tip] } else { vec![tip, e_last] };
        let new_e2: Vec<Arc> = if self.is_loop(e2) { vec![mid2] } else { vec![mid2, e2_last] };
        insert_after(&mut components[ce], e, &new_e);
        insert_after(&mut components[ce2], e2, &new_e2);
        Diagram::new(crossings, components)
    }
}

/// Compass directions in counterclockwise order starting south.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Compass {
    S = 0,
    E = 1,
    N = 2,
    W = 3,
}

impl Compass {
    fn opposite(self) -> Compass {
        Compass::from_index(self as usize + 2)
    }

    fn from_index(i: usize) -> Compass {
        [Compass::S, Compass::E, Compass::N, Compass::W][i % 4]
    }

    fn vector(self) -> (i64, i64) {
        match self {
            Compass::S => (0, -1),
            Compass::E => (1, 0),
            Compass::N => (0, 1),
            Compass::W => (-1, 0),
        }
    }
}

/// Build a crossing from two straight strands. Strand one enters from
/// `a_from` on arc `a_in` and leaves on `a_out` at the opposite side; strand
/// two enters from `b_from` on `b_in` and leaves on `b_out`. `a_over`
/// selects which strand is on top.
#[allow(clippy::too_many_arguments)]
pub(crate) fn compass_crossing(
    a_from: Compass,
    a_in: Arc,
    a_to: Compass,
    a_out: Arc,
    b_from: Compass,
    b_in: Arc,
    b_out: Arc,
    a_over: bool,
) -> Crossing {
    debug_assert_eq!(a_from.opposite(), a_to);
    let b_to = b_from.opposite();
    let mut at = [0; 4];
    at[a_from as usize] = a_in;
    at[a_to as usize] = a_out;
    at[b_from as usize] = b_in;
    at[b_to as usize] = b_out;
    let (under_from, over_from) = if a_over { (b_from, a_from) } else { (a_from, b_from) };
    let dir = |c: Compass| {
        let (x, y) = c.vector();
        (-x, -y)
    };
    let (ou, uu) = (dir(over_from), dir(under_from));
    let cross = ou.0 * uu.1 - ou.1 * uu.0;
    let start = under_from as usize;
    let arcs = [at[start], at[(start + 1) % 4], at[(start + 2) % 4], at[(start + 3) % 4]];
    Crossing::new(arcs, if cross > 0 { 1 } else { -1 })
}
