//! Table-driven arithmetic in GF(p) and GF(p^2) for small orders.
//!
//! Elements of GF(p^2) are stored as `a + p*b` for `a + b*alpha`, where
//! `alpha^2 = c0 + c1*alpha` is a root of an irreducible quadratic.

use crate::OracleError;

pub type Elem = u8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u8,
    d: u8,
    order: u8,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    frob: Vec<Elem>,
}

fn is_prime(n: u8) -> bool {
    n >= 2
        && (2..n)
            .take_while(|k| k * k <= n)
            .all(|k| !n.is_multiple_of(k))
}

impl FiniteField {
    /// Any prime order up to 13, or 4 or 9. Elements must fit in a nibble.
    pub fn new(order: u32) -> Result<FiniteField, OracleError> {
        let unsupported = || OracleError::UnsupportedField(format!("GF({order})"));
        let o = u8::try_from(order).map_err(|_| unsupported())?;
        if o > 16 {
            return Err(unsupported());
        }
        if is_prime(o) {
            return Ok(Self::build(o, 1, 0, 0));
        }
        let p = (2..o)
            .find(|&p| is_prime(p) && p * p == o)
            .ok_or_else(unsupported)?;
        // x^2 - c1 x - c0 with no root in GF(p)
        let (c0, c1) = (0..p)
            .flat_map(|c0| (0..p).map(move |c1| (c0, c1)))
            .find(|&(c0, c1)| {
                (0..p as u32).all(|x| {
                    !(x * x + (p - c1) as u32 * x + (p - c0) as u32).is_multiple_of(p as u32)
                })
            })
            .expect("irreducible quadratic exists");
        Ok(Self::build(p, 2, c0, c1))
    }

    fn build(p: u8, d: u8, c0: u8, c1: u8) -> FiniteField {
        let order = if d == 1 { p } else { p * p };
        let q = order as usize;
        let pu = p as u32;
        let split = |x: usize| ((x as u32) % pu, (x as u32) / pu);
        let join = |a: u32, b: u32| (a % pu + pu * (b % pu)) as Elem;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for x in 0..q {
            for y in 0..q {
                let (a, b) = split(x);
                let (c, e) = split(y);
                add[x * q + y] = join(a + c, b + e);
                // (a + b alpha)(c + e alpha) = ac + be c0 + (ae + bc + be c1) alpha
                let be = b * e;
                mul[x * q + y] = join(a * c + be * c0 as u32, a * e + b * c + be * c1 as u32);
            }
        }
        let neg = (0..q)
            .map(|x| (0..q).find(|&y| add[x * q + y] == 0).unwrap() as Elem)
            .collect();
        let inv = (0..q)
            .map(|x| {
                if x == 0 {
                    0
                } else {
                    (1..q).find(|&y| mul[x * q + y] == 1).unwrap() as Elem
                }
            })
            .collect();
        let frob = (0..q)
            .map(|x| {
                let mut r = 1usize;
                for _ in 0..p {
                    r = mul[r * q + x] as usize;
                }
                r as Elem
            })
            .collect();
        FiniteField {
            p,
            d,
            order,
            add,
            mul,
            neg,
            inv,
            frob,
        }
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.d
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// `x -> x^p`; the identity on a prime field.
    #[inline]
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.frob[a as usize]
    }

    /// The involution `x -> x^p` of GF(p^2); `None` over a prime field.
    pub fn conjugate(&self, a: Elem) -> Option<Elem> {
        (self.d == 2).then(|| self.frobenius(a))
    }

    pub fn has_conjugation(&self) -> bool {
        self.d == 2
    }

    /// Some `(a, b)` with `x^2 + a x + b` irreducible.
    pub fn irreducible_quadratic(&self) -> (Elem, Elem) {
        for a in self.elements() {
            for b in self.elements() {
                if self
                    .elements()
                    .all(|x| self.add(self.add(self.mul(x, x), self.mul(a, x)), b) != 0)
                {
                    return (a, b);
                }
            }
        }
        unreachable!("every finite field has an irreducible quadratic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supported_orders() {
        for q in [2, 3, 4, 5, 7, 9, 11, 13] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.order() as u32, q);
        }
        for q in [0, 1, 6, 8, 16, 25, 300] {
            assert!(matches!(
                FiniteField::new(q),
                Err(OracleError::UnsupportedField(_))
            ));
        }
    }

    #[test]
    fn gf4_and_gf9() {
        let f = FiniteField::new(4).unwrap();
        assert_eq!((f.characteristic(), f.degree()), (2, 2));
        // the multiplicative group is cyclic of order 3
        for a in 1..4 {
            assert_eq!(f.mul(f.mul(a, a), a), 1);
        }
        assert!(f.has_conjugation());
        let g = FiniteField::new(9).unwrap();
        let fixed: Vec<Elem> = g
            .elements()
            .filter(|&a| g.conjugate(a) == Some(a))
            .collect();
        assert_eq!(fixed, vec![0, 1, 2]);
        assert_eq!(FiniteField::new(5).unwrap().conjugate(3), None);
    }
}
