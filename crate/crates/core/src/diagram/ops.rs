use std::collections::{BTreeMap, BTreeSet};

use super::{Arc, Crossing, Diagram, DiagramError};

impl Diagram {
    /// Renumber components: component `k` of the result is `order[k]` of self.
    pub fn reorder(&self, order: &[usize]) -> Result<Diagram, DiagramError> {
        let n = self.num_components();
        let distinct: BTreeSet<usize> = order.iter().copied().collect();
        if order.len() != n || distinct.len() != n || order.iter().any(|&k| k >= n) {
            return Err(DiagramError::BadOrder { len: n });
        }
        let components = order.iter().map(|&k| self.components()[k].clone()).collect();
        Diagram::new(self.crossings().to_vec(), components)
    }

    /// Swap over- and under-strand at crossing `c`; the sign flips.
    pub fn crossing_change(&self, c: usize) -> Result<Diagram, DiagramError> {
        self.check_crossing(c)?;
        let mut crossings = self.crossings().to_vec();
        crossings[c] = changed(crossings[c]);
        Diagram::new(crossings, self.components().to_vec())
    }

    /// Change every crossing: a diagram of the mirror image.
    pub fn mirror(&self) -> Diagram {
        let crossings = self.crossings().iter().map(|&x| changed(x)).collect();
        Diagram::new(crossings, self.components().to_vec()).expect("mirror of a valid diagram")
    }

    /// Reverse the orientation of component `i`.
    pub fn reverse_component(&self, i: usize) -> Result<Diagram, DiagramError> {
        if i >= self.num_components() {
            return Err(DiagramError::ComponentIndex { index: i, len: self.num_components() });
        }
        let mut crossings = self.crossings().to_vec();
        for (k, x) in crossings.iter_mut().enumerate() {
            let (under, over) = self.crossing_components(k);
            if under == i {
                x.arcs.rotate_left(2);
            }
            if (under == i) != (over == i) {
                x.sign = -x.sign;
            }
        }
        let mut components = self.components().to_vec();
        let comp = &mut components[i];
        comp[1..].reverse();
        Diagram::new(crossings, components)
    }

    /// Orientation-respecting smoothing of crossing `c`.
    ///
    /// The incoming under-arc joins the outgoing over-arc and the incoming
    /// over-arc joins the outgoing under-arc. A joined arc keeps the id of
    /// its first piece; an arc joined to itself becomes a crossingless loop.
    pub fn smooth_crossing(&self, c: usize) -> Result<Diagram, DiagramError> {
        self.check_crossing(c)?;
        let x = self.crossings()[c];
        let mut next: BTreeMap<Arc, Arc> = self.arcs().map(|a| (a, self.next_arc(a).unwrap())).collect();
        next.insert(x.under_in(), x.over_out());
        next.insert(x.over_in(), x.under_out());
        let joined = |a: Arc| a == x.under_in() || a == x.over_in();

        let mut rename: BTreeMap<Arc, Arc> = BTreeMap::new();
        let mut components = Vec::new();
        let mut seen = BTreeSet::new();
        for start in self.arcs() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut a = next[&start];
            while a != start {
                seen.insert(a);
                cycle.push(a);
                a = next[&a];
            }
            let len = cycle.len();
            let Some(first) = (0..len).find(|&k| !joined(cycle[(k + len - 1) % len])) else {
                for &a in &cycle {
                    rename.insert(a, cycle[0]);
                }
                components.push(vec![cycle[0]]);
                continue;
            };
            cycle.rotate_left(first);
            let mut comp = Vec::new();
            let mut current = cycle[0];
            for k in 0..len {
                if k == 0 || !joined(cycle[k - 1]) {
                    current = cycle[k];
                    comp.push(current);
                }
                rename.insert(cycle[k], current);
            }
            components.push(comp);
        }
        let crossings = self
            .crossings()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != c)
            .map(|(_, y)| Crossing::new(y.arcs.map(|a| rename[&a]), y.sign))
            .collect();
        Diagram::new(crossings, components)
    }

    /// Insert a curl of the given sign on arc `arc`; the framing of its
    /// component changes by `sign`.
    pub fn add_kink(&self, arc: Arc, sign: i8) -> Result<Diagram, DiagramError> {
        if sign != 1 && sign != -1 {
            return Err(DiagramError::Sign(sign as i64));
        }
        let comp = self.component_of(arc).ok_or(DiagramError::MissingArc(arc))?;
        let lobe = self.max_arc() + 1;
        let is_loop = self.is_loop(arc);
        let rest = if is_loop { arc } else { lobe + 1 };
        let mut crossings = self.crossings().to_vec();
        if let Some(h) = self.head(arc) {
            crossings[h.crossing].arcs[h.slot] = rest;
        }
        crossings.push(if sign > 0 {
            Crossing::new([arc, rest, lobe, lobe], 1)
        } else {
            Crossing::new([arc, lobe, lobe, rest], -1)
        });
        let mut components = self.components().to_vec();
        let list = &mut components[comp];
        let pos = list.iter().position(|&a| a == arc).unwrap();
        if is_loop {
            list.insert(pos + 1, lobe);
        } else {
            list.splice(pos + 1..pos + 1, [lobe, rest]);
        }
        Diagram::new(crossings, components)
    }

    /// Add curls to component `i` until its framing equals `target`.
    pub fn with_framing(&self, i: usize, target: i64) -> Result<Diagram, DiagramError> {
        let mut d = self.clone();
        let mut f = d.framing(i)?;
        while f != target {
            let sign = if target > f { 1 } else { -1 };
            let arc = d.components()[i][0];
            d = d.add_kink(arc, sign)?;
            f += sign as i64;
        }
        Ok(d)
    }
}

fn changed(x: Crossing) -> Crossing {
    let mut arcs = x.arcs;
    if x.sign > 0 {
        arcs.rotate_right(1);
    } else {
        arcs.rotate_left(1);
    }
    Crossing::new(arcs, -x.sign)
}
