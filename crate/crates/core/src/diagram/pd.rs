use serde::{Deserialize, Serialize};

use super::{Arc, Crossing, Diagram, DiagramError};

/// A crossing as it appears in a JSON document.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PdCrossing {
    pub arcs: [i64; 4],
    pub sign: i64,
}

/// The JSON form of a diagram.
///
/// `order` (optional) lists component indices in the order they should be
/// numbered. `leaves` (optional) names three component indices as the
/// ordered leaves of a surgery link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PdDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub components: Vec<Vec<i64>>,
    pub crossings: Vec<PdCrossing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaves: Option<Vec<usize>>,
}

impl PdDocument {
    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        serde_json::from_str(text).map_err(|e| DiagramError::Syntax(e.to_string()))
    }

    /// Validate into a diagram, applying `order` if present.
    pub fn to_diagram(&self) -> Result<Diagram, DiagramError> {
        let mut crossings = Vec::with_capacity(self.crossings.len());
        for (i, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::BadSign { crossing: i, sign: c.sign });
            }
            let mut arcs = [0; 4];
            for (k, &a) in c.arcs.iter().enumerate() {
                if a <= 0 {
                    return Err(DiagramError::NonPositiveArc { crossing: i, arc: a });
                }
                arcs[k] = a as Arc;
            }
            crossings.push(Crossing::new(arcs, c.sign as i8));
        }
        let mut components = Vec::with_capacity(self.components.len());
        for comp in &self.components {
            let mut arcs = Vec::with_capacity(comp.len());
            for &a in comp {
                if a <= 0 {
                    return Err(DiagramError::NonPositiveArc { crossing: 0, arc: a });
                }
                arcs.push(a as Arc);
            }
            components.push(arcs);
        }
        let d = Diagram::new(crossings, components)?;
        match &self.order {
            Some(order) => d.reorder(order),
            None => Ok(d),
        }
    }

    /// Canonical document for a diagram: crossings sorted, no metadata.
    pub fn from_diagram(d: &Diagram) -> Self {
        let mut crossings: Vec<PdCrossing> = d
            .crossings()
            .iter()
            .map(|c| PdCrossing { arcs: c.arcs.map(|a| a as i64), sign: c.sign as i64 })
            .collect();
        crossings.sort();
        Self {
            name: None,
            note: None,
            components: d.components().iter().map(|c| c.iter().map(|&a| a as i64).collect()).collect(),
            crossings,
            order: None,
            leaves: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }
}

/// Parse and validate a PD document.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    PdDocument::from_json(text)?.to_diagram()
}

impl Diagram {
    /// Canonical JSON: crossings sorted lexicographically.
    pub fn to_json(&self) -> String {
        PdDocument::from_diagram(self).to_json()
    }

    /// The same diagram with crossings in canonical (sorted) order.
    pub fn canonical(&self) -> Diagram {
        PdDocument::from_diagram(self).to_diagram().expect("canonical form of a valid diagram")
    }
}
