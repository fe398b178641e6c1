use super::{Arc, Crossing, Diagram, DiagramError};

/// Closure of a braid on `strands` strands. Generator `k` (1-based) crosses
/// strands `k` and `k+1`; a negative entry is the inverse generator.
/// Strands run upwards, and `σ_k` is a positive crossing.
///
/// Components are numbered by the bottom position of their first strand.
pub fn braid_closure(strands: usize, word: &[i64]) -> Result<Diagram, DiagramError> {
    let mut current: Vec<Arc> = (1..=strands as Arc).collect();
    let mut next_id = strands as Arc;
    let mut crossings = Vec::with_capacity(word.len());
    for &g in word {
        let k = g.unsigned_abs() as usize;
        if g == 0 || k >= strands {
            return Err(DiagramError::BraidGenerator { gen: g, strands });
        }
        let (sw, se) = (current[k - 1], current[k]);
        let (nw, ne) = (next_id + 1, next_id + 2);
        next_id += 2;
        // SW strand continues to NE, SE strand to NW.
        crossings.push(if g > 0 {
            Crossing::new([se, ne, nw, sw], 1)
        } else {
            Crossing::new([sw, se, ne, nw], -1)
        });
        current[k - 1] = nw;
        current[k] = ne;
    }
    let rename = |a: Arc| current.iter().position(|&c| c == a).map(|p| p as Arc + 1).unwrap_or(a);
    for c in &mut crossings {
        c.arcs = c.arcs.map(rename);
    }

    // Follow strands to build components.
    let mut succ = std::collections::BTreeMap::new();
    for c in &crossings {
        succ.insert(c.under_in(), c.under_out());
        succ.insert(c.over_in(), c.over_out());
    }
    let mut components: Vec<Vec<Arc>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for start in 1..=strands as Arc {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut a = succ.get(&start).copied().unwrap_or(start);
        while a != start {
            seen.insert(a);
            comp.push(a);
            a = succ[&a];
        }
        components.push(comp);
    }
    Diagram::new(crossings, components)
}
