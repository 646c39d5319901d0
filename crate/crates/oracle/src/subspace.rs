use crate::field::FiniteField;
use crate::form::FormSpace;
use crate::vector::{axpy, coord, normalize, pivot, Packed};

/// A subspace as its reduced row-echelon basis, rows ordered by pivot.
/// Equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubspaceRep {
    rows: Vec<Packed>,
}

/// Clears `v` at the pivots of an echelon basis.
fn reduce(f: &FiniteField, dim: u32, rows: &[Packed], mut v: Packed) -> Packed {
    for &r in rows {
        let p = pivot(r).expect("nonzero row");
        let c = coord(v, p);
        if c != 0 {
            v = axpy(f, dim, v, f.neg(c), r);
        }
    }
    v
}

/// Reduced row-echelon basis of the span; rows with earlier pivots first.
fn rref(f: &FiniteField, dim: u32, vectors: &[Packed]) -> Vec<Packed> {
    let mut rows: Vec<Packed> = Vec::new();
    for &v in vectors {
        let v = reduce(f, dim, &rows, v);
        if v == 0 {
            continue;
        }
        let v = normalize(f, dim, v);
        let p = pivot(v).unwrap();
        for r in rows.iter_mut() {
            let c = coord(*r, p);
            if c != 0 {
                *r = axpy(f, dim, *r, f.neg(c), v);
            }
        }
        rows.push(v);
    }
    rows.sort_unstable_by(|a, b| b.cmp(a));
    rows
}

/// Dimension (as a vector space) of the span of `vectors`.
pub fn vector_rank(f: &FiniteField, dim: u32, vectors: &[Packed]) -> u32 {
    rref(f, dim, vectors).len() as u32
}

impl SubspaceRep {
    /// Echelonizes any spanning set.
    pub fn span(space: &FormSpace, vectors: &[Packed]) -> SubspaceRep {
        SubspaceRep {
            rows: rref(space.field(), space.dim(), vectors),
        }
    }

    /// Takes rows already in reduced echelon form.
    pub(crate) fn from_echelon(rows: Vec<Packed>) -> SubspaceRep {
        SubspaceRep { rows }
    }

    pub fn rows(&self) -> &[Packed] {
        &self.rows
    }

    /// Projective dimension; -1 for the zero subspace.
    pub fn dimension(&self) -> i32 {
        self.rows.len() as i32 - 1
    }

    pub fn pivots(&self) -> Vec<u32> {
        self.rows
            .iter()
            .map(|&r| pivot(r).expect("nonzero row"))
            .collect()
    }

    pub fn is_echelon(&self, space: &FormSpace) -> bool {
        rref(space.field(), space.dim(), &self.rows) == self.rows
    }

    pub fn contains(&self, space: &FormSpace, v: Packed) -> bool {
        reduce(space.field(), space.dim(), &self.rows, v) == 0
    }

    /// Every vector in the span is singular.
    pub fn is_totally_singular(&self, space: &FormSpace) -> bool {
        self.rows.iter().all(|&r| space.is_singular(r))
            && self
                .rows
                .iter()
                .all(|&a| self.rows.iter().all(|&b| space.form(a, b) == 0))
    }

    /// Vector dimension of `self + other`.
    pub fn join_rank(&self, space: &FormSpace, other: &SubspaceRep) -> u32 {
        let (f, dim) = (space.field(), space.dim());
        let residuals: Vec<Packed> = other
            .rows
            .iter()
            .map(|&v| reduce(f, dim, &self.rows, v))
            .filter(|&v| v != 0)
            .collect();
        self.rows.len() as u32 + vector_rank(f, dim, &residuals)
    }

    /// Vector dimension of `self ∩ other`.
    pub fn meet_rank(&self, space: &FormSpace, other: &SubspaceRep) -> u32 {
        (self.rows.len() + other.rows.len()) as u32 - self.join_rank(space, other)
    }

    /// `B(x, y) = 0` for all basis vectors `x` of `self`, `y` of `other`.
    pub fn orthogonal_to(&self, space: &FormSpace, other: &SubspaceRep) -> bool {
        self.rows
            .iter()
            .all(|&a| other.rows.iter().all(|&b| space.form(a, b) == 0))
    }
}
