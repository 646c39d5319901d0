//! Classical forms on `GF(q)^dim` in standard coordinates, paired as
//! `(x_0, x_1), (x_2, x_3), ...`.

use std::fmt;
use std::str::FromStr;

use polar_core::census::counts;
use polar_core::{validate_params, PolarParams};

use crate::field::{Elem, FiniteField};
use crate::vector::{coord, Packed, MAX_DIM};
use crate::OracleError;

/// Default bound on the number of singular subspaces in any single rank.
pub const DEFAULT_CAP: u64 = 2_000_000;

pub const CAP_ENV: &str = "POLAR_CENSUS_CAP";

/// The cap from `POLAR_CENSUS_CAP`, or [`DEFAULT_CAP`] when unset or not an
/// integer.
pub fn cap_from_env() -> u64 {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// `W(2n-1, q)`: order `(q, q)`.
    Symplectic,
    /// `Q(2n, q)`: order `(q, q)`.
    Parabolic,
    /// `Q+(2n-1, q)`: order `(q, 1)`.
    Hyperbolic,
    /// `Q-(2n+1, q)`: order `(q, q^2)`.
    Elliptic,
    /// `H(2n-1, q^2)`: order `(q^2, q)`.
    Hermitian,
    /// `H(2n, q^2)`: order `(q^2, q^3)`.
    HermitianOdd,
}

impl FormKind {
    pub const ALL: [FormKind; 6] = [
        FormKind::Symplectic,
        FormKind::Parabolic,
        FormKind::Hyperbolic,
        FormKind::Elliptic,
        FormKind::Hermitian,
        FormKind::HermitianOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormKind::Symplectic => "symplectic",
            FormKind::Parabolic => "parabolic",
            FormKind::Hyperbolic => "hyperbolic",
            FormKind::Elliptic => "elliptic",
            FormKind::Hermitian => "hermitian",
            FormKind::HermitianOdd => "hermitian-odd",
        }
    }

    pub fn is_hermitian(self) -> bool {
        matches!(self, FormKind::Hermitian | FormKind::HermitianOdd)
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(
            self,
            FormKind::Parabolic | FormKind::Hyperbolic | FormKind::Elliptic
        )
    }

    pub fn dim(self, n: u32) -> u32 {
        match self {
            FormKind::Symplectic | FormKind::Hyperbolic | FormKind::Hermitian => 2 * n,
            FormKind::Parabolic | FormKind::HermitianOdd => 2 * n + 1,
            FormKind::Elliptic => 2 * n + 2,
        }
    }

    /// `(s, t)` for base field order `q` (the Hermitian kinds live over
    /// `GF(q^2)`).
    pub fn order(self, q: u64) -> (u64, u64) {
        match self {
            FormKind::Symplectic | FormKind::Parabolic => (q, q),
            FormKind::Hyperbolic => (q, 1),
            FormKind::Elliptic => (q, q * q),
            FormKind::Hermitian => (q * q, q),
            FormKind::HermitianOdd => (q * q, q * q * q),
        }
    }

    fn supported_q(self) -> &'static [u32] {
        if self.is_hermitian() {
            &[2, 3]
        } else {
            &[2, 3, 4, 5]
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        FormKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown form kind {s:?}"))
    }
}

/// A sparse coefficient `c * x_a * y_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry {
    pub a: u32,
    pub b: u32,
    pub c: Elem,
}

#[derive(Debug, Clone)]
pub struct FormSpace {
    field: FiniteField,
    kind: FormKind,
    q: u32,
    dim: u32,
    /// Gram entries of the (sesqui)linear form `B(x, y) = sum c x_a y_b^sigma`.
    gram: Vec<Entry>,
    /// Quadratic form `Q(x) = sum c x_a x_b` for the orthogonal kinds.
    quad: Vec<Entry>,
    params: PolarParams,
}

/// Builds a space under the cap from `POLAR_CENSUS_CAP`.
pub fn build_space(kind: FormKind, q: u32, n: u32) -> Result<FormSpace, OracleError> {
    build_space_with_cap(kind, q, n, cap_from_env())
}

pub fn build_space_with_cap(
    kind: FormKind,
    q: u32,
    n: u32,
    cap: u64,
) -> Result<FormSpace, OracleError> {
    if !kind.supported_q().contains(&q) {
        return Err(OracleError::UnsupportedField(format!(
            "{kind} over q = {q}"
        )));
    }
    let (s, t) = kind.order(q as u64);
    let params = validate_params(n as i64, s as i64, t as i64)?;
    let dim = kind.dim(n);
    if dim > MAX_DIM {
        return Err(OracleError::TooLarge {
            size: format!("dimension {dim}"),
            cap,
        });
    }
    if let Some(big) = counts(&params)
        .into_iter()
        .max()
        .filter(|c| *c.as_biguint() > cap.into())
    {
        return Err(OracleError::TooLarge {
            size: big.to_string(),
            cap,
        });
    }
    let field = FiniteField::new(if kind.is_hermitian() { q * q } else { q })?;
    let mut quad = Vec::new();
    let mut gram = Vec::new();
    for k in 0..n {
        let (a, b) = (2 * k, 2 * k + 1);
        match kind {
            FormKind::Symplectic => {
                gram.push(Entry { a, b, c: 1 });
                gram.push(Entry {
                    a: b,
                    b: a,
                    c: field.neg(1),
                });
            }
            FormKind::Hermitian | FormKind::HermitianOdd => {
                gram.push(Entry { a, b, c: 1 });
                gram.push(Entry { a: b, b: a, c: 1 });
            }
            _ => quad.push(Entry { a, b, c: 1 }),
        }
    }
    let last = 2 * n;
    match kind {
        FormKind::Parabolic => quad.push(Entry {
            a: last,
            b: last,
            c: 1,
        }),
        FormKind::Elliptic => {
            let (a1, b1) = field.irreducible_quadratic();
            quad.push(Entry {
                a: last,
                b: last,
                c: 1,
            });
            if a1 != 0 {
                quad.push(Entry {
                    a: last,
                    b: last + 1,
                    c: a1,
                });
            }
            quad.push(Entry {
                a: last + 1,
                b: last + 1,
                c: b1,
            });
        }
        FormKind::HermitianOdd => gram.push(Entry {
            a: last,
            b: last,
            c: 1,
        }),
        _ => {}
    }
    if kind.is_orthogonal() {
        // polar form B(x, y) = Q(x + y) - Q(x) - Q(y)
        for e in &quad {
            if e.a == e.b {
                let two = field.add(e.c, e.c);
                if two != 0 {
                    gram.push(Entry {
                        a: e.a,
                        b: e.a,
                        c: two,
                    });
                }
            } else {
                gram.push(Entry {
                    a: e.a,
                    b: e.b,
                    c: e.c,
                });
                gram.push(Entry {
                    a: e.b,
                    b: e.a,
                    c: e.c,
                });
            }
        }
    }
    Ok(FormSpace {
        field,
        kind,
        q,
        dim,
        gram,
        quad,
        params,
    })
}

impl FormSpace {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    /// Base field order passed to [`build_space`].
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn rank(&self) -> u32 {
        self.params.n()
    }

    /// The order `(n, s, t)` the space should realise.
    pub fn params(&self) -> PolarParams {
        self.params
    }

    pub fn gram(&self) -> &[Entry] {
        &self.gram
    }

    pub fn quadratic(&self) -> &[Entry] {
        &self.quad
    }

    /// `B(x, y)`, semilinear in `y` for the Hermitian kinds.
    #[inline]
    pub fn form(&self, x: Packed, y: Packed) -> Elem {
        let f = &self.field;
        let herm = self.kind.is_hermitian();
        self.gram.iter().fold(0, |acc, e| {
            let xa = coord(x, e.a);
            if xa == 0 {
                return acc;
            }
            let mut yb = coord(y, e.b);
            if herm {
                yb = f.frobenius(yb);
            }
            f.add(acc, f.mul(e.c, f.mul(xa, yb)))
        })
    }

    pub fn quadratic_value(&self, x: Packed) -> Elem {
        let f = &self.field;
        self.quad.iter().fold(0, |acc, e| {
            f.add(acc, f.mul(e.c, f.mul(coord(x, e.a), coord(x, e.b))))
        })
    }

    /// Whether the vector spans a singular point.
    pub fn is_singular(&self, x: Packed) -> bool {
        match self.kind {
            FormKind::Symplectic => true,
            k if k.is_orthogonal() => self.quadratic_value(x) == 0,
            _ => self.form(x, x) == 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_and_orders() {
        for k in FormKind::ALL {
            assert_eq!(k.name().parse::<FormKind>().unwrap(), k);
        }
        assert_eq!(FormKind::Elliptic.dim(3), 8);
        assert_eq!(FormKind::HermitianOdd.order(2), (4, 8));
        let sp = build_space_with_cap(FormKind::Symplectic, 2, 3, DEFAULT_CAP).unwrap();
        assert_eq!((sp.params().s(), sp.params().t(), sp.dim()), (2, 2, 6));
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            build_space_with_cap(FormKind::Hermitian, 4, 3, DEFAULT_CAP),
            Err(OracleError::UnsupportedField(_))
        ));
        assert!(matches!(
            build_space_with_cap(FormKind::Symplectic, 7, 3, DEFAULT_CAP),
            Err(OracleError::UnsupportedField(_))
        ));
        assert!(matches!(
            build_space_with_cap(FormKind::Symplectic, 5, 5, DEFAULT_CAP),
            Err(OracleError::TooLarge { .. })
        ));
        assert!(matches!(
            build_space_with_cap(FormKind::Symplectic, 2, 2, DEFAULT_CAP),
            Err(OracleError::Params(polar_core::Error::RankTooSmall(2)))
        ));
        assert!(build_space_with_cap(FormKind::Symplectic, 2, 3, 100).is_err());
    }

    #[test]
    fn char_two_parabolic_uses_the_quadratic_form() {
        let s = build_space_with_cap(FormKind::Parabolic, 2, 3, DEFAULT_CAP).unwrap();
        let e6 = crate::vector::from_coords(&[0, 0, 0, 0, 0, 0, 1]);
        // isotropic for the alternating polar form but not singular
        assert_eq!(s.form(e6, e6), 0);
        assert!(!s.is_singular(e6));
    }
}
