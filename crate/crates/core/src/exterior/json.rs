//! JSON form format: `{"N": 12, "degree": 4, "terms": [{"indices": [1,2,3,4], "coeff": "3/2"}]}`
//! with 1-based strictly increasing indices and decimal-free rational strings.
//! Multi-piece structure forms use `{"pieces": [form, ...]}`.

use serde::{Deserialize, Serialize};

use super::basis::{Monomial, MAX_DIM};
use super::form::KForm;
use crate::error::{Error, Result};
use crate::linalg::scalar;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub indices: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FormJson {
    #[serde(rename = "N")]
    pub dim: usize,
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PiecesJson {
    pub pieces: Vec<FormJson>,
}

impl FormJson {
    pub fn from_form(f: &KForm) -> Self {
        FormJson {
            dim: f.dim(),
            degree: f.degree(),
            terms: f
                .terms()
                .map(|(m, c)| TermJson { indices: m.indices().map(|i| i + 1).collect(), coeff: scalar::render(c) })
                .collect(),
        }
    }

    pub fn to_form(&self) -> Result<KForm> {
        if self.dim > MAX_DIM {
            return Err(Error::Parse(format!("N = {} exceeds {MAX_DIM}", self.dim)));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.indices.len() != self.degree {
                return Err(Error::Parse(format!("term {:?} does not have degree {}", t.indices, self.degree)));
            }
            if t.indices.iter().any(|&i| i == 0 || i > self.dim) {
                return Err(Error::Parse(format!("indices {:?} outside 1..{}", t.indices, self.dim)));
            }
            let zero_based: Vec<usize> = t.indices.iter().map(|i| i - 1).collect();
            let m = Monomial::from_indices(&zero_based)
                .ok_or_else(|| Error::Parse(format!("indices {:?} not strictly increasing", t.indices)))?;
            terms.push((m, scalar::parse(&t.coeff)?));
        }
        KForm::from_terms(self.dim, self.degree, terms)
    }
}

pub fn form_to_json(f: &KForm) -> String {
    serde_json::to_string(&FormJson::from_form(f)).expect("serializable")
}

pub fn form_from_json(s: &str) -> Result<KForm> {
    let f: FormJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    f.to_form()
}

/// Accepts either a single form or a `{"pieces": [...]}` document.
pub fn pieces_from_json(s: &str) -> Result<Vec<KForm>> {
    let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    if v.get("pieces").is_some() {
        let p: PiecesJson = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        p.pieces.iter().map(FormJson::to_form).collect()
    } else {
        let f: FormJson = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(vec![f.to_form()?])
    }
}

pub fn pieces_to_json(pieces: &[KForm]) -> String {
    serde_json::to_string(&PiecesJson { pieces: pieces.iter().map(FormJson::from_form).collect() }).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::frac;

    #[test]
    fn round_trip() {
        let f = KForm::monomial(12, &[0, 1, 2, 3]).unwrap().scale(&frac(3, 2));
        let s = form_to_json(&f);
        assert_eq!(s, r#"{"N":12,"degree":4,"terms":[{"indices":[1,2,3,4],"coeff":"3/2"}]}"#);
        assert_eq!(form_from_json(&s).unwrap(), f);
        assert_eq!(pieces_from_json(&pieces_to_json(&[f.clone()])).unwrap(), vec![f]);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            r#"{"N":4,"degree":2,"terms":[{"indices":[2,1],"coeff":"1"}]}"#,
            r#"{"N":4,"degree":2,"terms":[{"indices":[0,1],"coeff":"1"}]}"#,
            r#"{"N":4,"degree":2,"terms":[{"indices":[1,5],"coeff":"1"}]}"#,
            r#"{"N":4,"degree":2,"terms":[{"indices":[1,2],"coeff":"0.5"}]}"#,
            r#"{"N":4,"degree":2,"terms":[{"indices":[1,2,3],"coeff":"1"}]}"#,
        ] {
            assert!(form_from_json(bad).is_err(), "{bad}");
        }
    }
}
