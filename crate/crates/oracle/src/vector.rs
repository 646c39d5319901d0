//! Vectors over a small field packed one nibble per coordinate into a
//! `u64`, coordinate 0 in the most significant nibble, so integer order is
//! lexicographic order on coordinates.

use crate::field::{Elem, FiniteField};

pub type Packed = u64;

pub const MAX_DIM: u32 = 16;

#[inline]
fn shift(k: u32) -> u32 {
    60 - 4 * k
}

#[inline]
pub fn coord(v: Packed, k: u32) -> Elem {
    ((v >> shift(k)) & 0xf) as Elem
}

#[inline]
pub fn with_coord(v: Packed, k: u32, a: Elem) -> Packed {
    (v & !(0xf << shift(k))) | ((a as Packed) << shift(k))
}

pub fn from_coords(c: &[Elem]) -> Packed {
    c.iter()
        .enumerate()
        .fold(0, |v, (k, &a)| with_coord(v, k as u32, a))
}

pub fn to_coords(v: Packed, dim: u32) -> Vec<Elem> {
    (0..dim).map(|k| coord(v, k)).collect()
}

/// Index of the first nonzero coordinate.
#[inline]
pub fn pivot(v: Packed) -> Option<u32> {
    (v != 0).then(|| v.leading_zeros() / 4)
}

/// `y + a x`
pub fn axpy(f: &FiniteField, dim: u32, y: Packed, a: Elem, x: Packed) -> Packed {
    if a == 0 || x == 0 {
        return y;
    }
    (0..dim).fold(y, |acc, k| {
        let xk = coord(x, k);
        if xk == 0 {
            acc
        } else {
            with_coord(acc, k, f.add(coord(acc, k), f.mul(a, xk)))
        }
    })
}

pub fn scale(f: &FiniteField, dim: u32, a: Elem, x: Packed) -> Packed {
    axpy(f, dim, 0, a, x)
}

/// Scales so that the pivot coordinate is 1.
pub fn normalize(f: &FiniteField, dim: u32, x: Packed) -> Packed {
    match pivot(x) {
        Some(p) => scale(f, dim, f.inv(coord(x, p)).expect("nonzero"), x),
        None => 0,
    }
}

/// `dim` lowercase hex digits, one per coordinate.
pub fn to_hex(v: Packed, dim: u32) -> String {
    (0..dim)
        .map(|k| char::from_digit(coord(v, k) as u32, 16).unwrap())
        .collect()
}

pub fn from_hex(s: &str) -> Option<(Packed, u32)> {
    if s.is_empty() || s.len() > MAX_DIM as usize {
        return None;
    }
    let digits: Option<Vec<Elem>> = s
        .chars()
        .map(|c| c.to_digit(16).map(|d| d as Elem))
        .collect();
    digits.map(|d| (from_coords(&d), d.len() as u32))
}
