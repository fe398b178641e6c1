use casson_core::diagram::{braid_closure, Diagram};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sign(rng: &mut ChaCha8Rng) -> i8 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// A random link diagram: a braid closure on up to four strands, then
/// some clasps inside faces and curls.
pub fn diagram(seed: u64) -> Diagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let strands = rng.gen_range(2..=4usize);
    let len = rng.gen_range(0..=8);
    let word: Vec<i64> = (0..len).map(|_| rng.gen_range(1..strands as i64) * sign(&mut rng) as i64).collect();
    let mut d = braid_closure(strands, &word).unwrap();
    for _ in 0..rng.gen_range(0..3) {
        let faces = d.faces();
        if !faces.is_empty() {
            let f = &faces[rng.gen_range(0..faces.len())];
            let a = f.darts[rng.gen_range(0..f.darts.len())].arc;
            let b = f.darts[rng.gen_range(0..f.darts.len())].arc;
            if a != b {
                d = d.insert_clasp(a, b, sign(&mut rng)).unwrap();
            }
        }
        let arcs: Vec<_> = d.arcs().collect();
        let s = sign(&mut rng);
        d = d.add_kink(arcs[rng.gen_range(0..arcs.len())], s).unwrap();
    }
    d
}
