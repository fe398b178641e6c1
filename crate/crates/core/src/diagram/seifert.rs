use std::collections::{BTreeMap, VecDeque};

use super::{Arc, Dart, Diagram, DiagramError};

/// A Seifert circle: arcs in order of travel and its turning direction in
/// the plane (+1 counterclockwise, -1 clockwise) relative to a chosen
/// outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertCircle {
    pub arcs: Vec<Arc>,
    pub orientation: i8,
}

/// Seifert circles of a diagram, oriented relative to its largest face.
pub fn seifert_circles(d: &Diagram) -> Vec<SeifertCircle> {
    let faces = d.faces();
    let outer = largest_face(&faces);
    circles_with_outer(d, &faces, outer)
}

fn largest_face(faces: &[super::Face]) -> usize {
    let mut best = 0;
    for (k, f) in faces.iter().enumerate() {
        if f.darts.len() > faces[best].darts.len() {
            best = k;
        }
    }
    best
}

fn smoothing_successor(d: &Diagram, a: Arc) -> Arc {
    let h = d.head(a).unwrap();
    let x = d.crossings()[h.crossing];
    if h.slot == 0 {
        x.over_out()
    } else {
        x.under_out()
    }
}

fn circles_with_outer(d: &Diagram, faces: &[super::Face], outer: usize) -> Vec<SeifertCircle> {
    let mut seen = std::collections::BTreeSet::new();
    let mut circles = Vec::new();
    for start in d.arcs() {
        if d.is_loop(start) || !seen.insert(start) {
            continue;
        }
        let mut arcs = vec![start];
        let mut a = smoothing_successor(d, start);
        while a != start {
            seen.insert(a);
            arcs.push(a);
            a = smoothing_successor(d, a);
        }
        circles.push(arcs);
    }
    let left = Diagram::left_faces(faces);
    circles
        .into_iter()
        .map(|arcs| {
            let on_circle: std::collections::BTreeSet<Arc> = arcs.iter().copied().collect();
            let mut reached = vec![false; faces.len()];
            let start = left[&Dart { arc: arcs[0], forward: true }];
            reached[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                for dart in &faces[f].darts {
                    if on_circle.contains(&dart.arc) {
                        continue;
                    }
                    let g = left[&Dart { arc: dart.arc, forward: !dart.forward }];
                    if !reached[g] {
                        reached[g] = true;
                        queue.push_back(g);
                    }
                }
            }
            // A counterclockwise circle has its bounded side on the left.
            let orientation = if reached[outer] { -1 } else { 1 };
            SeifertCircle { arcs, orientation }
        })
        .collect()
}

/// Seifert matrix from Seifert's algorithm, using the largest face as the
/// outer region.
pub fn seifert_matrix(d: &Diagram) -> Result<Vec<Vec<i64>>, DiagramError> {
    let faces = d.faces();
    seifert_matrix_with_outer_face(d, largest_face(&faces))
}

/// One pass of a basis curve through a Seifert disk: the circle, and the
/// bands (crossings) through which the curve enters and leaves it.
#[derive(Clone, Copy, Debug)]
struct Visit {
    circle: usize,
    enter: usize,
    exit: usize,
}

/// Seifert matrix with the face at `outer` (an index into [`Diagram::faces`])
/// taken as the unbounded region. Different choices give congruent-up-to-
/// S-equivalence matrices with the same Alexander polynomial.
pub fn seifert_matrix_with_outer_face(d: &Diagram, outer: usize) -> Result<Vec<Vec<i64>>, DiagramError> {
    if d.num_components() != 1 {
        return Err(DiagramError::ComponentCount { expected: 1, found: d.num_components() });
    }
    if d.num_crossings() == 0 {
        return Ok(Vec::new());
    }
    let faces = d.faces();
    let circles = circles_with_outer(d, &faces, outer);
    let mut circle_of = BTreeMap::new();
    let mut position = BTreeMap::new();
    for (k, c) in circles.iter().enumerate() {
        for (i, &a) in c.arcs.iter().enumerate() {
            circle_of.insert(a, k);
            position.insert((k, d.head(a).unwrap().crossing), i);
        }
    }
    let crossings = d.crossings();
    // Left and right circle of each band, looking along the strands.
    let sides: Vec<(usize, usize)> = crossings
        .iter()
        .map(|x| {
            let (l, r) = if x.sign > 0 { (x.over_in(), x.under_in()) } else { (x.under_in(), x.over_in()) };
            (circle_of[&l], circle_of[&r])
        })
        .collect();
    for &(l, r) in &sides {
        assert_ne!(l, r, "a band joins two distinct Seifert circles");
    }

    // Spanning tree of the Seifert graph.
    let s = circles.len();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; s];
    let mut depth = vec![usize::MAX; s];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    let mut tree_band = vec![false; crossings.len()];
    while let Some(p) = queue.pop_front() {
        for (x, &(l, r)) in sides.iter().enumerate() {
            let q = if l == p {
                r
            } else if r == p {
                l
            } else {
                continue;
            };
            if depth[q] == usize::MAX {
                depth[q] = depth[p] + 1;
                parent[q] = Some((p, x));
                tree_band[x] = true;
                queue.push_back(q);
            }
        }
    }

    // Fundamental cycles: cross band x from L to R, then return to L
    // through the tree.
    let mut cycles: Vec<Vec<Visit>> = Vec::new();
    for (x, &(l, r)) in sides.iter().enumerate() {
        if tree_band[x] {
            continue;
        }
        // Tree paths from r and l up to their common ancestor.
        let climb = |mut v: usize, stop_depth: usize| {
            let mut steps = Vec::new();
            while depth[v] > stop_depth {
                let (p, band) = parent[v].unwrap();
                steps.push((v, band, p));
                v = p;
            }
            (v, steps)
        };
        let (mut a, mut b) = (r, l);
        let target = depth[a].min(depth[b]);
        let (ra, mut up_r) = climb(a, target);
        let (rb, mut up_l) = climb(b, target);
        a = ra;
        b = rb;
        while a != b {
            let (pa, ba) = parent[a].unwrap();
            let (pb, bb) = parent[b].unwrap();
            up_r.push((a, ba, pa));
            up_l.push((b, bb, pb));
            a = pa;
            b = pb;
        }
        // Circle sequence: r -> ... -> apex -> ... -> l, then band x back to r.
        let mut path: Vec<(usize, usize)> = Vec::new(); // (circle, band used to leave it)
        for &(v, band, _) in &up_r {
            path.push((v, band));
        }
        let mut down: Vec<(usize, usize)> = up_l.iter().map(|&(v, band, _)| (v, band)).collect();
        down.reverse();
        // apex is entered from the last up_r band and left by the first down band
        let apex = a;
        let mut seq: Vec<(usize, usize)> = path; // leaving bands
        let apex_exit = down.first().map(|&(_, band)| band).unwrap_or(x);
        seq.push((apex, apex_exit));
        for (k, &(v, _)) in down.iter().enumerate() {
            let exit = down.get(k + 1).map(|&(_, band)| band).unwrap_or(x);
            seq.push((v, exit));
        }
        let n = seq.len();
        let visits = (0..n)
            .map(|k| Visit { circle: seq[k].0, enter: seq[(k + n - 1) % n].1, exit: seq[k].1 })
            .collect();
        cycles.push(visits);
    }

    let slot = |band: usize, circle: usize| -> usize {
        let left = sides[band].0 == circle;
        match (left, crossings[band].sign > 0) {
            (true, true) | (false, false) => 0,
            _ => 1,
        }
    };
    let is_parent = |band: usize, circle: usize| -> bool {
        let (l, r) = sides[band];
        let o = circles[circle].orientation;
        (circle == l && o < 0) || (circle == r && o > 0)
    };

    let g = cycles.len();
    let mut v = vec![vec![0i64; g]; g];
    for (i, a) in cycles.iter().enumerate() {
        for (j, b) in cycles.iter().enumerate() {
            let mut total = 0i64;
            for va in a {
                for vb in b.iter().filter(|vb| vb.circle == va.circle) {
                    let p = va.circle;
                    let len = 2 * circles[p].arcs.len();
                    let at = |band: usize, s: usize| 2 * position[&(p, band)] + s;
                    let start = at(va.enter, slot(va.enter, p));
                    let span = (at(va.exit, slot(va.exit, p)) + len - start) % len;
                    let sigma = circles[p].orientation as i64;
                    for (band, entering) in [(vb.enter, true), (vb.exit, false)] {
                        let pos = at(band, 1 - slot(band, p));
                        let offset = (pos + len - start) % len;
                        if offset == 0 || offset >= span {
                            continue;
                        }
                        let dir = if entering { -1 } else { 1 };
                        if sigma > 0 {
                            total += dir;
                        }
                        if is_parent(band, p) {
                            total -= dir * sigma;
                        }
                    }
                }
            }
            v[i][j] = total;
        }
    }
    Ok(v)
}
