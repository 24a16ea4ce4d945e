use std::fmt;

use num_bigint::BigInt;

/// Truncated power-series coefficients, exact integers throughout.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    terms: Vec<BigInt>,
    origin: String,
}

impl Series {
    pub fn new(terms: Vec<BigInt>, origin: impl Into<String>) -> Self {
        Series {
            terms,
            origin: origin.into(),
        }
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// What this expansion came from (a rendered rational function or a
    /// family label).
    pub fn origin(&self) -> &str {
        &self.origin
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&BigInt> {
        self.terms.get(i)
    }

    /// Test helper view; panics if a coefficient exceeds i64.
    pub fn to_i64_vec(&self) -> Vec<i64> {
        self.terms
            .iter()
            .map(|t| i64::try_from(t.clone()).expect("series coefficient exceeds i64"))
            .collect()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", rendered.join(" "))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}]({})", self.origin, self)
    }
}
