//! Exact scalars, polynomials and dense linear algebra over Q and GF(p).

mod matrix;
mod poly;
mod scalar;

pub use matrix::{Matrix, RrefKernel};
pub use poly::{factor_over_field, Factorization, Poly};
pub use scalar::{format_rational, parse_rational, FieldSpec, Scalar};

use crate::error::{Error, Result};

/// Smallest field element of multiplicative order exactly `n`.
///
/// Over GF(p) this requires `n | p - 1`; over Q only `n ∈ {1, 2}` exist.
pub fn primitive_root_of_unity(field: FieldSpec, n: u64) -> Result<Scalar> {
    let unavailable = || Error::OrderUnavailable {
        order: n,
        field: field.to_string(),
    };
    match field {
        FieldSpec::Rationals => match n {
            1 => Ok(field.one()),
            2 => Ok(field.from_i64(-1)),
            _ => Err(unavailable()),
        },
        FieldSpec::PrimeField(p) => {
            if n == 0 || (p - 1) % n != 0 {
                return Err(unavailable());
            }
            (1..p)
                .map(|v| field.from_u64(v))
                .find(|s| s.multiplicative_order() == Some(n))
                .ok_or_else(unavailable)
        }
    }
}
