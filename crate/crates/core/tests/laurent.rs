use std::collections::BTreeMap;

use clustermatch::{Error, ExponentVector, LaurentPolynomial as L};
use num_bigint::BigInt;
use proptest::prelude::*;

fn t(nvars: usize, terms: &[(&[i32], i64)]) -> L {
    L::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), *c)))
}

fn x(nvars: usize, i: usize) -> L {
    L::var(nvars, i - 1)
}

#[test]
fn addition() {
    let a = t(3, &[(&[0, 1, 0], 1), (&[0, 0, 0], 1)]);
    assert_eq!(&a + &L::zero(3), a);

    let m = t(3, &[(&[1, 0, 1], 1)]);
    let s = &m + &(-&m);
    assert!(s.is_zero());
    assert_eq!(s.num_terms(), 0);

    let b = t(3, &[(&[1, 0, 1], 1), (&[0, 1, 0], 1)]);
    assert_eq!(
        &a + &b,
        t(3, &[(&[1, 0, 1], 1), (&[0, 1, 0], 2), (&[0, 0, 0], 1)])
    );
    assert_eq!((&a + &b).to_string(), "x1*x3 + 2*x2 + 1");
}

#[test]
fn multiplication() {
    let a = t(2, &[(&[0, 1], 1), (&[0, 0], 1)]);
    assert_eq!(&a * &L::one(2), a);
    assert!((&t(2, &[(&[-1, 0], 1)]) * &x(2, 1)).is_one());
    assert_eq!(&a * &a, t(2, &[(&[0, 2], 1), (&[0, 1], 2), (&[0, 0], 1)]));
}

#[test]
fn exact_division() {
    let num = t(2, &[(&[0, 1], 1), (&[0, 0], 1)]);
    assert_eq!(
        num.div_exact(&x(2, 1)).unwrap(),
        t(2, &[(&[-1, 1], 1), (&[-1, 0], 1)])
    );
    assert_eq!(num.div_exact(&L::one(2)).unwrap(), num);

    // (x2+1)^2 + x1^2 (1+x2) = (x2+1)(x2+1+x1^2)
    let p = &(&num * &num) + &(&t(2, &[(&[2, 0], 1)]) * &num);
    assert_eq!(
        p.div_exact(&num).unwrap(),
        t(2, &[(&[0, 1], 1), (&[0, 0], 1), (&[2, 0], 1)])
    );
}

#[test]
fn inexact_division_is_an_error() {
    let p = t(2, &[(&[0, 1], 1), (&[0, 0], 1)]);
    let q = t(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
    assert!(matches!(p.div_exact(&q), Err(Error::Divisibility(_))));
    assert!(matches!(
        p.div_exact(&L::zero(2)),
        Err(Error::Divisibility(_))
    ));
    assert!(matches!(
        t(2, &[(&[0, 0], 2)]).div_exact(&t(2, &[(&[0, 0], 3)])),
        Err(Error::Divisibility(_))
    ));
}

#[test]
fn substitution() {
    let p = t(3, &[(&[1, 0, 1], 1), (&[0, 1, 0], 1)]);
    let mut m = BTreeMap::new();
    m.insert(0, x(2, 2));
    m.insert(1, x(2, 1));
    m.insert(2, x(2, 2));
    assert_eq!(
        p.substitute(&m, 2).unwrap(),
        t(2, &[(&[0, 2], 1), (&[1, 0], 1)])
    );

    assert_eq!(p.substitute(&BTreeMap::new(), 3).unwrap(), p);

    let q = &x(3, 1) + &x(3, 2);
    let mut fold = BTreeMap::new();
    fold.insert(1, x(3, 1));
    assert_eq!(q.substitute(&fold, 3).unwrap(), t(3, &[(&[1, 0, 0], 2)]));
}

#[test]
fn substituting_zero_into_a_denominator_is_a_pole() {
    let p = t(2, &[(&[-1, 1], 1)]);
    let mut m = BTreeMap::new();
    m.insert(0, L::zero(2));
    assert!(matches!(p.substitute(&m, 2), Err(Error::Pole(_))));
}

#[test]
fn split_examples() {
    let p = t(2, &[(&[-1, 1], 1), (&[-1, 0], 1)]);
    let f = p.split().unwrap();
    assert_eq!(f.numerator, t(2, &[(&[0, 1], 1), (&[0, 0], 1)]));
    assert_eq!(f.denominator.as_slice(), &[1, 0]);

    let f = x(2, 1).split().unwrap();
    assert!(f.numerator.is_one());
    assert_eq!(f.denominator.as_slice(), &[-1, 0]);

    let long = t(
        3,
        &[
            (&[-1, 1, -1], 1),
            (&[-1, 0, -1], 2),
            (&[0, -1, 0], 1),
            (&[-1, -1, -1], 1),
        ],
    );
    let f = long.split().unwrap();
    assert_eq!(
        f.numerator,
        t(
            3,
            &[
                (&[0, 2, 0], 1),
                (&[0, 1, 0], 2),
                (&[1, 0, 1], 1),
                (&[0, 0, 0], 1)
            ]
        )
    );
    assert_eq!(f.denominator.as_slice(), &[1, 1, 1]);
    assert!(L::zero(3).split().is_err());
}

#[test]
fn text_forms() {
    let p = t(2, &[(&[0, 2], 1), (&[-1, 0], -1)]);
    assert_eq!(p.to_string(), "x2^2 - x1^-1");
    assert_eq!(L::parse("x2^2 - x1^-1", 2).unwrap(), p);
    assert_eq!(
        t(2, &[(&[-1, 1], 1), (&[-1, 0], 1)]).to_fraction_string(),
        "(x2 + 1) / x1"
    );
    assert_eq!(
        t(2, &[(&[-1, -2], 1)]).to_fraction_string(),
        "1 / (x1*x2^2)"
    );
    assert_eq!(x(2, 1).to_fraction_string(), "x1");
    assert_eq!(L::zero(2).to_string(), "0");
    assert_eq!(
        L::parse("3*x1*x1 + x2 - x2", 2).unwrap(),
        t(2, &[(&[2, 0], 3)])
    );
}

#[test]
fn ambient_mismatch() {
    assert!(matches!(
        x(2, 1).checked_add(&x(3, 1)),
        Err(Error::Dimension(2, 3))
    ));
    assert!(x(2, 1).checked_mul(&x(3, 1)).is_err());
}

fn poly(nvars: usize) -> impl Strategy<Value = L> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, nvars), -6i64..=6), 0..6)
        .prop_map(move |terms| L::from_terms(nvars, terms))
}

fn monomial(nvars: usize) -> impl Strategy<Value = L> {
    (
        prop::collection::vec(-3i32..=3, nvars),
        prop::sample::select(vec![1i64, -1]),
    )
        .prop_map(move |(e, c)| L::monomial(nvars, ExponentVector::from(e), c))
}

/// Evaluates at a point where every variable is a nonzero integer power of
/// a fixed base, so the result is an exact rational `num / den`.
fn eval(p: &L, point: &[i64]) -> (BigInt, BigInt) {
    let shift: Vec<i32> = match p.min_exponents() {
        Some(m) => m.as_slice().iter().map(|e| -e.min(&0)).collect(),
        None => return (BigInt::from(0), BigInt::from(1)),
    };
    let mut num = BigInt::from(0);
    for (e, c) in p.terms() {
        let mut term = c.clone();
        for (i, &k) in e.as_slice().iter().enumerate() {
            term *= BigInt::from(point[i]).pow((k + shift[i]) as u32);
        }
        num += term;
    }
    let mut den = BigInt::from(1);
    for (i, &s) in shift.iter().enumerate() {
        den *= BigInt::from(point[i]).pow(s as u32);
    }
    (num, den)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn no_zero_coefficients_stored(a in poly(3), b in poly(3)) {
        for p in [&a + &b, &a * &b, &a - &b] {
            prop_assert!(p.terms().all(|(e, c)| *c != BigInt::from(0) && e.len() == 3));
        }
    }

    #[test]
    fn multiplication_matches_evaluation(a in poly(3), b in poly(3)) {
        let pt = [2, -3, 5];
        let (an, ad) = eval(&a, &pt);
        let (bn, bd) = eval(&b, &pt);
        let (pn, pd) = eval(&(&a * &b), &pt);
        prop_assert_eq!(pn * &ad * &bd, an * bn * pd);
    }

    #[test]
    fn split_recombines(a in poly(3)) {
        prop_assume!(!a.is_zero());
        let f = a.split().unwrap();
        prop_assert_eq!(f.recombine(), a.clone());
        prop_assert!(f.numerator.is_polynomial());
        // Every slot has a term of exponent zero in the numerator.
        for i in 0..3 {
            prop_assert!(f.numerator.terms().any(|(e, _)| e.get(i) == 0));
        }
    }

    #[test]
    fn division_by_monomial_inverts_multiplication(a in poly(3), m in monomial(3)) {
        prop_assert_eq!((&a * &m).div_exact(&m).unwrap(), a);
    }

    #[test]
    fn division_inverts_multiplication(a in poly(2), q in poly(2)) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&a * &q).div_exact(&q).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_map(a in poly(3), b in poly(3), images in prop::collection::vec(monomial(2), 3)) {
        let m: BTreeMap<usize, L> = images.into_iter().enumerate().collect();
        let s = |p: &L| p.substitute(&m, 2).unwrap();
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
    }

    #[test]
    fn print_parse_round_trip(a in poly(4)) {
        prop_assert_eq!(L::parse(&a.to_string(), 4).unwrap(), a);
    }
}
