//! Small dense vector used for word, phrase, and document embeddings.

use std::ops::Index;

use crate::error::{Error, Result};

/// Fixed-dimension dense vector of f64 components.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseVector {
    components: Vec<f64>,
}

impl DenseVector {
    pub fn new(components: Vec<f64>) -> Self {
        DenseVector { components }
    }

    pub fn zeros(dimension: usize) -> Self {
        DenseVector {
            components: vec![0.0; dimension],
        }
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.components
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.components
    }

    /// Component-wise sum; errors on dimension mismatch.
    pub fn add_assign(&mut self, other: &DenseVector) -> Result<()> {
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch {
                left: self.dimension(),
                right: other.dimension(),
            });
        }
        for (a, b) in self.components.iter_mut().zip(&other.components) {
            *a += b;
        }
        Ok(())
    }

    pub fn scale(&mut self, factor: f64) {
        for a in &mut self.components {
            *a *= factor;
        }
    }

    pub fn dot(&self, other: &DenseVector) -> Result<f64> {
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch {
                left: self.dimension(),
                right: other.dimension(),
            });
        }
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.components.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|a| *a == 0.0)
    }
}

impl From<Vec<f64>> for DenseVector {
    fn from(components: Vec<f64>) -> Self {
        DenseVector::new(components)
    }
}

impl Index<usize> for DenseVector {
    type Output = f64;

    fn index(&self, idx: usize) -> &f64 {
        &self.components[idx]
    }
}
