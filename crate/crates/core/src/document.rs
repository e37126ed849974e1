//! JSON documents for complexes, colourings and covers.
//!
//! The canonical form lists maximal facets only, each ascending, sorted
//! lexicographically, with colour classes ascending.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloured::ColouredComplex;
use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::nerve::Cover;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DocErrorCode {
    Parse,
    EmptyFacet,
    ColourOverlap,
    ColourPartition,
    ColourUnknownVertex,
    MemberNotInHost,
}

impl DocErrorCode {
    pub fn as_str(&self) -> &'static str {
        match self {
            DocErrorCode::Parse => "PARSE",
            DocErrorCode::EmptyFacet => "EMPTY_FACET",
            DocErrorCode::ColourOverlap => "COLOUR_OVERLAP",
            DocErrorCode::ColourPartition => "COLOUR_PARTITION",
            DocErrorCode::ColourUnknownVertex => "COLOUR_UNKNOWN_VERTEX",
            DocErrorCode::MemberNotInHost => "MEMBER_NOT_IN_HOST",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocumentError {
    pub code: DocErrorCode,
    pub message: String,
}

impl DocumentError {
    fn new(code: DocErrorCode, message: impl Into<String>) -> Self {
        DocumentError { code, message: message.into() }
    }
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code.as_str(), self.message)
    }
}

impl std::error::Error for DocumentError {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub name: String,
    pub facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colours: Option<BTreeMap<usize, Vec<usize>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: ComplexDocument = serde_json::from_str(text)
            .map_err(|e| DocumentError::new(DocErrorCode::Parse, e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), DocumentError> {
        if let Some(i) = self.facets.iter().position(Vec::is_empty) {
            return Err(DocumentError::new(DocErrorCode::EmptyFacet, format!("facet {i} is empty")));
        }
        if self.colours.is_some() {
            self.to_coloured()?;
        }
        Ok(())
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, DocumentError> {
        SimplicialComplex::from_facets(self.facets.iter().map(|f| f.iter().copied()))
            .map_err(|e| DocumentError::new(DocErrorCode::EmptyFacet, e.to_string()))
    }

    /// Colour classes `0..=max key`; missing keys give empty classes.
    pub fn to_coloured(&self) -> Result<Option<ColouredComplex>, DocumentError> {
        let Some(colours) = &self.colours else {
            return Ok(None);
        };
        let complex = self.to_complex()?;
        let m = colours.keys().next_back().copied().unwrap_or(0);
        let mut classes = vec![Vec::new(); m + 1];
        let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
        for (&c, verts) in colours {
            for &v in verts {
                if !complex.has_vertex(v) {
                    return Err(DocumentError::new(
                        DocErrorCode::ColourUnknownVertex,
                        format!("colour {c} lists vertex {v}, which is not in the complex"),
                    ));
                }
                if let Some(prev) = owner.insert(v, c) {
                    if prev != c {
                        return Err(DocumentError::new(
                            DocErrorCode::ColourOverlap,
                            format!("vertex {v} appears in colours {prev} and {c}"),
                        ));
                    }
                }
            }
            classes[c] = verts.clone();
        }
        if let Some(v) = complex.vertices().into_iter().find(|v| !owner.contains_key(v)) {
            return Err(DocumentError::new(
                DocErrorCode::ColourPartition,
                format!("vertex {v} has no colour"),
            ));
        }
        ColouredComplex::new(complex, classes)
            .map(Some)
            .map_err(|e: Error| DocumentError::new(DocErrorCode::ColourPartition, e.to_string()))
    }

    pub fn from_complex(name: impl Into<String>, x: &SimplicialComplex) -> Self {
        let mut facets: Vec<Vec<usize>> = x.facets().into_iter().map(Vec::from).collect();
        facets.sort();
        ComplexDocument { name: name.into(), facets, colours: None, metadata: BTreeMap::new() }
    }

    pub fn from_coloured(name: impl Into<String>, k: &ColouredComplex) -> Self {
        let mut doc = Self::from_complex(name, k.complex());
        doc.colours = Some(k.classes().iter().cloned().enumerate().collect());
        doc
    }

    /// Same complex and colouring in canonical form.
    pub fn canonical(&self) -> Result<Self, DocumentError> {
        let mut out = match self.to_coloured()? {
            Some(k) => Self::from_coloured(self.name.clone(), &k),
            None => Self::from_complex(self.name.clone(), &self.to_complex()?),
        };
        out.metadata = self.metadata.clone();
        Ok(out)
    }

    /// Pretty JSON with a trailing newline.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serialises");
        s.push('\n');
        s
    }
}

/// Cover members given by facet lists. The host is the companion complex
/// document; without one, the union of the members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDocument {
    #[serde(default)]
    pub name: String,
    pub members: Vec<Vec<Vec<usize>>>,
}

impl CoverDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: CoverDocument = serde_json::from_str(text)
            .map_err(|e| DocumentError::new(DocErrorCode::Parse, e.to_string()))?;
        for (i, m) in doc.members.iter().enumerate() {
            if let Some(j) = m.iter().position(Vec::is_empty) {
                return Err(DocumentError::new(
                    DocErrorCode::EmptyFacet,
                    format!("member {i} facet {j} is empty"),
                ));
            }
        }
        Ok(doc)
    }

    pub fn members(&self) -> Vec<SimplicialComplex> {
        self.members
            .iter()
            .map(|m| SimplicialComplex::from_facets(m.iter().map(|f| f.iter().copied())).unwrap())
            .collect()
    }

    pub fn to_cover(&self, host: Option<&SimplicialComplex>) -> Result<Cover, DocumentError> {
        let members = self.members();
        match host {
            None => Ok(Cover::from_members(members)),
            Some(h) => Cover::new(h.clone(), members)
                .map_err(|e| DocumentError::new(DocErrorCode::MemberNotInHost, e.to_string())),
        }
    }

    pub fn from_cover(name: impl Into<String>, cover: &Cover) -> Self {
        let members = cover
            .members()
            .iter()
            .map(|m| ComplexDocument::from_complex("", m).facets)
            .collect();
        CoverDocument { name: name.into(), members }
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serialises");
        s.push('\n');
        s
    }
}
