//! JSON form of a quasi-polynomial: `{"period", "threshold", "components"}`
//! with each component a list of coefficients, lowest degree first, written
//! as `"p/q"` strings (or `"p"` for integers).

use std::str::FromStr;

use num_rational::BigRational;
use parafrob_core::{Polynomial, QuasiPolynomial};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("coefficient {0:?} is not a rational number")]
    Coefficient(String),
    #[error("invalid quasi-polynomial: {0}")]
    Invalid(#[from] parafrob_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpJson {
    pub period: u64,
    pub threshold: i64,
    pub components: Vec<Vec<String>>,
}

impl QpJson {
    pub fn from_qp(f: &QuasiPolynomial) -> Self {
        QpJson {
            period: f.period(),
            threshold: f.threshold(),
            components: f
                .components()
                .iter()
                .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }

    pub fn to_qp(&self) -> Result<QuasiPolynomial, JsonError> {
        let components = self
            .components
            .iter()
            .map(|cs| {
                cs.iter()
                    .map(|c| BigRational::from_str(c.trim()).map_err(|_| JsonError::Coefficient(c.clone())))
                    .collect::<Result<Vec<_>, _>>()
                    .map(Polynomial::new)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QuasiPolynomial::new(self.period, components, self.threshold)?)
    }
}

pub fn to_string(f: &QuasiPolynomial) -> String {
    serde_json::to_string(&QpJson::from_qp(f)).expect("plain data serializes")
}

pub fn from_str(text: &str) -> Result<QuasiPolynomial, JsonError> {
    serde_json::from_str::<QpJson>(text)?.to_qp()
}
