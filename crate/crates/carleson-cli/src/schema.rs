//! Input document schemas.
//!
//! Three JSON shapes are accepted:
//!
//! * a measure:  `{"atoms":[{"x":0.0,"t":1.0,"w":1.0}, ...]}`
//! * a system:   `{"q":2.0,"modes":[{"lambda":[re,im],"b":[re,im]}, ...]}`
//! * a family:   `{"family":"example-e","epsilon":0.5,"gamma":2.0,"N":3,"q":2.0}`
//!
//! The family form expands to the discrete counterexample measure.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use carleson_core::measures::{example_family_measure, DiscreteMeasure, HalfPlaneAtom};
use carleson_core::systems::DiagonalSystem;

use crate::error::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AtomDoc {
    pub x: f64,
    pub t: f64,
    pub w: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureDoc {
    pub atoms: Vec<AtomDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModeDoc {
    pub lambda: [f64; 2],
    pub b: [f64; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemDoc {
    pub q: f64,
    pub modes: Vec<ModeDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub family: String,
    pub epsilon: f64,
    pub gamma: f64,
    #[serde(rename = "N")]
    pub n: usize,
    pub q: f64,
}

/// A parsed and validated input document.
#[derive(Debug, Clone)]
pub enum ParsedInput {
    Measure(DiscreteMeasure),
    System(DiagonalSystem),
    Family {
        doc: FamilyDoc,
        measure: DiscreteMeasure,
    },
}

impl ParsedInput {
    /// The measure view: direct, family expansion, or the Laplace-route
    /// measure of a system.
    pub fn as_measure(&self) -> Result<DiscreteMeasure, CliError> {
        match self {
            ParsedInput::Measure(m) => Ok(m.clone()),
            ParsedInput::Family { measure, .. } => Ok(measure.clone()),
            ParsedInput::System(sys) => Ok(carleson_core::systems::poisson_measure(sys)),
        }
    }

    pub fn as_system(&self) -> Result<&DiagonalSystem, CliError> {
        match self {
            ParsedInput::System(sys) => Ok(sys),
            _ => Err(CliError::Parse(
                "this command needs a system document ({\"q\":..,\"modes\":[..]})".into(),
            )),
        }
    }
}

pub fn measure_from_doc(doc: &MeasureDoc) -> Result<DiscreteMeasure, CliError> {
    let atoms = doc
        .atoms
        .iter()
        .map(|a| HalfPlaneAtom::new(a.x, a.t, a.w))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DiscreteMeasure::new(atoms)?)
}

pub fn system_from_doc(doc: &SystemDoc) -> Result<DiagonalSystem, CliError> {
    let lambdas = doc
        .modes
        .iter()
        .map(|m| Complex64::new(m.lambda[0], m.lambda[1]))
        .collect();
    let b = doc
        .modes
        .iter()
        .map(|m| Complex64::new(m.b[0], m.b[1]))
        .collect();
    Ok(DiagonalSystem::new(lambdas, b, doc.q)?)
}

/// Parses an input document, dispatching on its top-level keys.
pub fn parse_spec(text: &str) -> Result<ParsedInput, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Parse("top level must be a JSON object".into()))?;

    if obj.contains_key("atoms") {
        let doc: MeasureDoc =
            serde_json::from_value(value.clone()).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(ParsedInput::Measure(measure_from_doc(&doc)?))
    } else if obj.contains_key("modes") {
        let doc: SystemDoc =
            serde_json::from_value(value.clone()).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(ParsedInput::System(system_from_doc(&doc)?))
    } else if obj.contains_key("family") {
        let doc: FamilyDoc =
            serde_json::from_value(value.clone()).map_err(|e| CliError::Parse(e.to_string()))?;
        if doc.family != "example-e" {
            return Err(CliError::Parse(format!(
                "unknown family {:?}; supported: \"example-e\"",
                doc.family
            )));
        }
        let measure = example_family_measure(doc.epsilon, doc.gamma, doc.n)?;
        Ok(ParsedInput::Family { doc, measure })
    } else {
        Err(CliError::Parse(
            "expected one of the keys \"atoms\", \"modes\", or \"family\"".into(),
        ))
    }
}

/// Serialises a measure back to its document form (exact round trip).
pub fn measure_to_doc(mu: &DiscreteMeasure) -> MeasureDoc {
    MeasureDoc {
        atoms: mu
            .atoms()
            .iter()
            .map(|a| AtomDoc {
                x: a.x,
                t: a.t,
                w: a.w,
            })
            .collect(),
    }
}

/// Serialises a system back to its document form (exact round trip).
pub fn system_to_doc(sys: &DiagonalSystem) -> SystemDoc {
    SystemDoc {
        q: sys.q(),
        modes: sys
            .lambdas()
            .iter()
            .zip(sys.b())
            .map(|(l, b)| ModeDoc {
                lambda: [l.re, l.im],
                b: [b.re, b.im],
            })
            .collect(),
    }
}
