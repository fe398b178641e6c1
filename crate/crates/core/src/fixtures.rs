//! Bundled diagrams used by tests, benches and the command-line tool.

use crate::diagram::{parse_pd, Diagram, PdDocument};

pub const UNKNOT: &str = include_str!("../fixtures/unknot.json");
pub const KINK_UNKNOT: &str = include_str!("../fixtures/kink_unknot.json");
pub const HOPF: &str = include_str!("../fixtures/hopf.json");
pub const TREFOIL: &str = include_str!("../fixtures/trefoil.json");
pub const FIGURE_EIGHT: &str = include_str!("../fixtures/figure_eight.json");
/// Orientation and order here are the sign convention for the triple
/// linking number.
pub const BORROMEAN_RINGS: &str = include_str!("../fixtures/borromean_rings.json");
pub const UNLINK2: &str = include_str!("../fixtures/unlink2.json");
pub const UNLINK3: &str = include_str!("../fixtures/unlink3.json");

/// Every bundled document with its file stem.
pub const ALL: &[(&str, &str)] = &[
    ("unknot", UNKNOT),
    ("kink_unknot", KINK_UNKNOT),
    ("hopf", HOPF),
    ("trefoil", TREFOIL),
    ("figure_eight", FIGURE_EIGHT),
    ("borromean_rings", BORROMEAN_RINGS),
    ("unlink2", UNLINK2),
    ("unlink3", UNLINK3),
];

fn load(text: &str) -> Diagram {
    parse_pd(text).expect("bundled fixture is valid")
}

pub fn unknot() -> Diagram {
    load(UNKNOT)
}

pub fn kink_unknot() -> Diagram {
    load(KINK_UNKNOT)
}

pub fn hopf() -> Diagram {
    load(HOPF)
}

pub fn trefoil() -> Diagram {
    load(TREFOIL)
}

pub fn figure_eight() -> Diagram {
    load(FIGURE_EIGHT)
}

pub fn borromean_rings() -> Diagram {
    load(BORROMEAN_RINGS)
}

pub fn borromean_document() -> PdDocument {
    PdDocument::from_json(BORROMEAN_RINGS).expect("bundled fixture is valid")
}

pub fn unlink(n: usize) -> Diagram {
    let components = (1..=n as u64).map(|a| vec![a]).collect();
    Diagram::new(Vec::new(), components).expect("crossingless unlink")
}
