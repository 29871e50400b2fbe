//! Serializable views of every artifact the pipeline produces.
//!
//! Rationals are serialized as `"p/q"` strings (just `"p"` for integers),
//! tower elements as coefficient-string vectors tagged with the tower's
//! content id, and descriptors as the ordered list of levels. All
//! containers are order-stable so a fixed input always serializes to
//! identical bytes.

use serde::{Deserialize, Serialize};

use crate::curve::Point;
use crate::generators::{GeneratorSet, IdentityReport};
use crate::rational::format_rational;
use crate::tower::{TowerDescriptor, TowerElement};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ElementJson {
    pub tower_id: String,
    pub coeffs: Vec<String>,
}

impl ElementJson {
    pub fn from_element(e: &TowerElement) -> Self {
        ElementJson {
            tower_id: e.tower().id().to_string(),
            coeffs: e.coeffs().iter().map(format_rational).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LevelJson {
    pub label: String,
    /// Radicand coefficients over the sub-tower below this level.
    pub radicand: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TowerJson {
    pub tower_id: String,
    pub dimension: usize,
    pub levels: Vec<LevelJson>,
}

impl TowerJson {
    pub fn from_descriptor(t: &TowerDescriptor) -> Self {
        TowerJson {
            tower_id: t.id().to_string(),
            dimension: t.dimension(),
            levels: t
                .levels()
                .iter()
                .map(|lv| LevelJson {
                    label: lv.label.clone(),
                    radicand: lv.radicand.iter().map(format_rational).collect(),
                })
                .collect(),
        }
    }
}

/// Tower summary plus the generator elements, as emitted by the `tower`
/// verb.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorSetJson {
    pub tower: TowerJson,
    pub alpha: Vec<ElementJson>,
    pub gamma: Option<Vec<String>>,
    pub a: Vec<ElementJson>,
    pub b: Vec<ElementJson>,
    pub b_companion: Vec<ElementJson>,
    pub zeta4: ElementJson,
    pub zeta8: ElementJson,
    pub identities: IdentityReport,
}

impl GeneratorSetJson {
    pub fn new(gs: &GeneratorSet, identities: IdentityReport) -> Self {
        GeneratorSetJson {
            tower: TowerJson::from_descriptor(&gs.tower),
            alpha: gs.alpha.iter().map(ElementJson::from_element).collect(),
            gamma: gs
                .gamma
                .as_ref()
                .map(|g| g.iter().map(format_rational).collect()),
            a: gs.a.iter().map(ElementJson::from_element).collect(),
            b: gs.b.iter().map(ElementJson::from_element).collect(),
            b_companion: gs.bp.iter().map(ElementJson::from_element).collect(),
            zeta4: ElementJson::from_element(&gs.zeta4),
            zeta8: ElementJson::from_element(&gs.zeta8),
            identities,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PointJson {
    /// Absent for the point at infinity.
    pub x: Option<ElementJson>,
    pub y: Option<ElementJson>,
    pub order: u8,
}

impl PointJson {
    pub fn from_point(p: &Point, order: u8) -> Self {
        match p {
            Point::Infinity => PointJson {
                x: None,
                y: None,
                order,
            },
            Point::Affine(x, y) => PointJson {
                x: Some(ElementJson::from_element(x)),
                y: Some(ElementJson::from_element(y)),
                order,
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TorsionDumpJson {
    pub tower_id: String,
    pub census: (usize, usize, usize, usize),
    pub scratch_used: bool,
    pub points: Vec<PointJson>,
}
