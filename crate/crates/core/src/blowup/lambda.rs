use serde::Serialize;

use crate::algebra::{MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// Coefficients expressing each `f_i` as `Σ_j λ_ij g_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaMatrix {
    #[serde(serialize_with = "crate::io::report::ser_poly_matrix")]
    pub entries: Vec<Vec<Polynomial>>,
}

impl LambdaMatrix {
    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i]
    }
}

/// Ordered multivariate division of every `f` by the list `gs`; the remainder
/// must vanish.
pub fn lambda_matrix(fs: &[Polynomial], gs: &[Polynomial], order: &MonomialOrder) -> Result<LambdaMatrix> {
    let mut entries = Vec::with_capacity(fs.len());
    for (i, f) in fs.iter().enumerate() {
        let (quotients, remainder) = f.divide_by_list(gs, order);
        if !remainder.is_zero() {
            return Err(Error::NotInIdeal(i));
        }
        entries.push(quotients);
    }
    Ok(LambdaMatrix { entries })
}
