use polar_oracle::FiniteField;

#[test]
fn field_axioms_exhaustive() {
    for order in [2, 3, 4, 5, 7, 9] {
        let f = FiniteField::new(order).unwrap();
        let els: Vec<u8> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            } else {
                assert_eq!(f.inv(a), None);
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(f.add(a, b), b), a);
                for &c in &els {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn conjugation_is_an_involutory_automorphism() {
    for order in [4, 9] {
        let f = FiniteField::new(order).unwrap();
        let c = |x| f.conjugate(x).unwrap();
        let mut moved = false;
        for a in f.elements() {
            assert_eq!(c(c(a)), a);
            moved |= c(a) != a;
            for b in f.elements() {
                assert_eq!(c(f.add(a, b)), f.add(c(a), c(b)));
                assert_eq!(c(f.mul(a, b)), f.mul(c(a), c(b)));
            }
        }
        assert!(moved);
    }
}
