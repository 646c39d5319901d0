use rayon::prelude::*;

use crate::form::FormSpace;
use crate::subspace::SubspaceRep;
use crate::vector::{coord, pivot, with_coord, Packed};
use crate::OracleError;

/// Normalized representatives of the singular points, grouped by pivot;
/// each group ascending.
fn points_by_pivot(space: &FormSpace) -> Vec<Vec<Packed>> {
    let dim = space.dim();
    let q = space.field().order() as u64;
    (0..dim)
        .into_par_iter()
        .map(|p| {
            let free = dim - p - 1;
            let base = with_coord(0, p, 1);
            let mut out: Vec<Packed> = (0..q.pow(free))
                .map(|mut idx| {
                    let mut v = base;
                    for k in (p + 1..dim).rev() {
                        v = with_coord(v, k, (idx % q) as u8);
                        idx /= q;
                    }
                    v
                })
                .filter(|&v| space.is_singular(v))
                .collect();
            out.sort_unstable();
            out
        })
        .collect()
}

pub fn singular_points(space: &FormSpace) -> Vec<SubspaceRep> {
    let mut pts: Vec<SubspaceRep> = points_by_pivot(space)
        .into_iter()
        .flatten()
        .map(|v| SubspaceRep::from_echelon(vec![v]))
        .collect();
    pts.sort_unstable();
    pts
}

/// Canonical extensions of an echelon basis: a singular point whose pivot
/// lies after every existing pivot, in a column where all rows vanish, and
/// which is orthogonal to every row. Appending it keeps the basis reduced,
/// and every totally singular space arises from exactly one parent, its
/// span without the last row.
fn extensions<'a>(
    space: &'a FormSpace,
    by_pivot: &'a [Vec<Packed>],
    parent: &'a SubspaceRep,
) -> impl Iterator<Item = SubspaceRep> + 'a {
    let rows = parent.rows();
    let last = pivot(*rows.last().expect("nonempty")).unwrap();
    (last + 1..space.dim())
        .filter(move |&p| rows.iter().all(|&r| coord(r, p) == 0))
        .flat_map(move |p| by_pivot[p as usize].iter())
        .filter(move |&&v| rows.iter().all(|&r| space.form(r, v) == 0))
        .map(move |&v| {
            let mut next = rows.to_vec();
            next.push(v);
            SubspaceRep::from_echelon(next)
        })
}

/// `Delta_0, ..., Delta_top`, each sorted.
pub fn enumerate_layers(space: &FormSpace, top: u32) -> Result<Vec<Vec<SubspaceRep>>, OracleError> {
    space.params().check_rank(top)?;
    let by_pivot = points_by_pivot(space);
    let mut layers = vec![singular_points(space)];
    for _ in 0..top {
        let prev = layers.last().unwrap();
        let mut next: Vec<SubspaceRep> = prev
            .par_iter()
            .flat_map_iter(|s| extensions(space, &by_pivot, s))
            .collect();
        next.par_sort_unstable();
        layers.push(next);
    }
    Ok(layers)
}

/// Every totally singular projective `i`-space exactly once, sorted.
pub fn enumerate(space: &FormSpace, i: u32) -> Result<Vec<SubspaceRep>, OracleError> {
    Ok(enumerate_layers(space, i)?.pop().unwrap())
}
