use super::*;
use crate::hilbert::hilbert_function;
use proptest::prelude::*;

fn ex27() -> FatPointScheme {
    FatPointScheme::from_integers(
        2,
        &[&[1, 0, 0], &[1, 0, 1], &[1, 1, 0], &[1, 1, 1], &[1, 2, 0], &[1, 2, 1], &[1, 3, 0], &[1, 3, 1]],
        &[1, 2, 1, 2, 2, 1, 5, 1],
    )
    .unwrap()
}

fn p(s: &str) -> Polynomial {
    Polynomial::parse(s, 3).unwrap()
}

#[test]
fn point_normalization() {
    let a = ProjectivePoint::from_integers(&[0, 2, 4]).unwrap();
    assert_eq!(a.to_string(), "(0:1:2)");
    assert_eq!(a, ProjectivePoint::from_integers(&[0, -1, -2]).unwrap());
    assert!(ProjectivePoint::from_integers(&[0, 0, 0]).is_err());
}

#[test]
fn point_ideals() {
    let i = point_vanishing_ideal(&ProjectivePoint::from_integers(&[1, 0, 0]).unwrap());
    assert!(i.same_ideal(&Ideal::parse(3, &["X1", "X2"]).unwrap()));
    let i = point_vanishing_ideal(&ProjectivePoint::from_integers(&[1, 2, 0]).unwrap());
    assert!(i.same_ideal(&Ideal::parse(3, &["X1 - 2X0", "X2"]).unwrap()));
    let i = point_vanishing_ideal(&ProjectivePoint::from_integers(&[0, 0, 1]).unwrap());
    assert!(i.same_ideal(&Ideal::parse(3, &["X0", "X1"]).unwrap()));
}

#[test]
fn vanishing_generators_separate_points() {
    let w = ex27();
    for (i, a) in w.points().iter().enumerate() {
        let ia = a.vanishing_ideal();
        for g in ia.generators() {
            assert!(g.evaluate(a.coordinates()).is_zero());
        }
        for (j, b) in w.points().iter().enumerate() {
            if i != j {
                assert!(ia.generators().iter().any(|g| !g.evaluate(b.coordinates()).is_zero()));
            }
        }
    }
}

#[test]
fn double_point_ideal() {
    let w = FatPointScheme::from_integers(2, &[&[1, 0, 0]], &[2]).unwrap();
    assert!(w.ideal().same_ideal(&Ideal::parse(3, &["X1^2", "X1*X2", "X2^2"]).unwrap()));
    assert_eq!(w.degree(), 3);
}

#[test]
fn example_scheme_hilbert_function() {
    let w = ex27();
    assert_eq!(w.degree(), 28);
    let hf = hilbert_function(&w.ideal()).unwrap();
    assert_eq!(hf.to_string(), "1 3 6 10 15 21 26 27 28 28 ...");
    assert_eq!(hilbert_function_by_interpolation(&w), hf);
}

#[test]
fn interpolation_matches_intersection() {
    let w = FatPointScheme::from_integers(2, &[&[1, 0, 0], &[1, 1, 1], &[0, 1, 2]], &[2, 1, 3]).unwrap();
    assert!(w.ideal().same_ideal(&fat_scheme_ideal_by_intersection(&w)));
    let support = ex27().support();
    assert!(support.ideal().same_ideal(&fat_scheme_ideal_by_intersection(&support)));
}

#[test]
fn slimming_and_fattening() {
    let y = ex27().slimming();
    assert_eq!(y.multiplicities(), &[1, 1, 1, 4]);
    assert_eq!(y.degree(), 13);
    let y_expected =
        FatPointScheme::from_integers(2, &[&[1, 0, 1], &[1, 1, 1], &[1, 2, 0], &[1, 3, 0]], &[1, 1, 1, 4]).unwrap();
    assert_eq!(y, y_expected);
    let x = ex27().support();
    let empty = x.slimming();
    assert!(empty.is_empty());
    assert_eq!(empty.degree(), 0);
    assert!(empty.ideal().is_unit());
    let three = FatPointScheme::from_integers(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[1, 1, 1]).unwrap();
    let fat = three.fattening(1);
    assert_eq!(fat.multiplicities(), &[2, 2, 2]);
    assert_eq!(fat.degree(), 9);
}

#[test]
fn invalid_schemes_rejected() {
    let a = ProjectivePoint::from_integers(&[1, 1, 0]).unwrap();
    let b = ProjectivePoint::from_integers(&[2, 2, 0]).unwrap();
    assert!(FatPointScheme::new(2, vec![a.clone(), b], vec![1, 1]).is_err());
    assert!(FatPointScheme::new(2, vec![a.clone()], vec![0]).is_err());
    assert!(FatPointScheme::new(3, vec![a], vec![1]).is_err());
}

#[test]
fn file_round_trip() {
    let text = "# example\nn 2\npoint 1 0 0 mult 2\npoint 1 1/2 -3 mult 1 # trailing\n";
    let w = parse_scheme(text).unwrap();
    assert_eq!(w.multiplicities(), &[2, 1]);
    let printed = print_scheme(&w);
    assert_eq!(printed, "n 2\npoint 1 0 0 mult 2\npoint 1 1/2 -3 mult 1\n");
    assert_eq!(parse_scheme(&printed).unwrap(), w);
    assert_eq!(print_scheme(&parse_scheme(&printed).unwrap()), printed);
}

#[test]
fn file_errors_carry_line_numbers() {
    assert_eq!(
        parse_scheme("n 2\npoint 1 0 mult 1\n").unwrap_err(),
        Error::SchemeFormat { line: 2, message: "expected 'point' with 3 coordinates then 'mult <m>'".into() }
    );
    assert!(matches!(parse_scheme("point 1 0 0 mult 1"), Err(Error::SchemeFormat { line: 1, .. })));
    assert!(matches!(parse_scheme("n 2\npoint 1 x 0 mult 1"), Err(Error::SchemeFormat { line: 2, .. })));
    assert!(matches!(parse_scheme("n 2\npoint 0 0 0 mult 1"), Err(Error::SchemeFormat { line: 2, .. })));
    assert!(matches!(
        parse_scheme("n 2\npoint 1 0 0 mult 1\npoint 2 0 0 mult 1"),
        Err(Error::SchemeFormat { line: 3, .. })
    ));
}

fn assert_separator_contracts(w: &FatPointScheme, j: usize, seps: &[Polynomial]) {
    let iw = w.ideal();
    let iwj = w.reduce_at(j).unwrap().ideal();
    let pj = w.points()[j - 1].vanishing_ideal();
    assert_eq!(seps.len() as u64, w.degree() - w.reduce_at(j).unwrap().degree());
    assert!(seps.windows(2).all(|s| s[0].degree() <= s[1].degree()));
    let mut acc = iw.clone();
    for f in seps {
        assert!(iwj.contains(f) && !iw.contains(f));
        assert!(acc.quotient_by(f).unwrap().same_ideal(&pj));
        acc = acc.sum(&Ideal::new(w.nvars(), vec![f.clone()]).unwrap()).unwrap();
        assert!(acc.is_saturated().unwrap());
    }
    assert!(acc.same_ideal(&iwj));
}

#[test]
fn separators_two_points() {
    let w = FatPointScheme::from_integers(2, &[&[1, 0, 0], &[1, 1, 1]], &[1, 1]).unwrap();
    let seps = separators(&w, 2).unwrap();
    assert_eq!(seps.len(), 1);
    let f = &seps[0];
    assert_eq!(f.degree(), Some(1));
    assert!(f.evaluate(w.points()[0].coordinates()).is_zero());
    assert!(!f.evaluate(w.points()[1].coordinates()).is_zero());
    assert_separator_contracts(&w, 2, &seps);
}

#[test]
fn separators_of_a_fivefold_point() {
    let w = FatPointScheme::from_integers(2, &[&[1, 0, 0], &[1, 3, 0], &[1, 1, 1]], &[1, 5, 2]).unwrap();
    let seps = separators(&w, 2).unwrap();
    assert_eq!(seps.len(), 5);
    assert_separator_contracts(&w, 2, &seps);
}

#[test]
fn separator_of_a_lone_point() {
    let w = FatPointScheme::from_integers(2, &[&[1, 2, 3]], &[1]).unwrap();
    let seps = separators(&w, 1).unwrap();
    assert_eq!(seps, vec![p("1")]);
    let augmented = w.ideal().sum(&Ideal::new(3, seps.clone()).unwrap()).unwrap();
    assert!(augmented.is_unit());
    assert!(w.ideal().quotient_by(&seps[0]).unwrap().same_ideal(&w.ideal()));
    assert_eq!(separators(&w, 2).unwrap_err(), Error::PointIndexOutOfRange { index: 2, len: 1 });
}

pub(crate) fn small_scheme(n: usize) -> impl Strategy<Value = FatPointScheme> {
    proptest::collection::vec((proptest::collection::vec(0i64..=3, n + 1), 1u32..=3), 1..=4).prop_filter_map(
        "distinct nonzero points",
        move |pts| {
            let mut points = Vec::new();
            let mut mults = Vec::new();
            for (c, m) in pts {
                let pt = ProjectivePoint::from_integers(&c).ok()?;
                if points.contains(&pt) {
                    return None;
                }
                points.push(pt);
                mults.push(m);
            }
            FatPointScheme::new(n, points, mults).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn degree_is_the_stable_value(w in small_scheme(2)) {
        let hf = hilbert_function(&w.ideal()).unwrap();
        prop_assert_eq!(hf.stable_value(), w.degree());
        prop_assert_eq!(hilbert_function_by_interpolation(&w), hf.clone());
        prop_assert!(hf.values().windows(2).all(|v| v[0] <= v[1]));
    }

    #[test]
    fn interpolation_is_the_intersection(w in small_scheme(2)) {
        prop_assert!(w.ideal().same_ideal(&fat_scheme_ideal_by_intersection(&w)));
    }

    #[test]
    fn fat_ideal_is_saturated(w in small_scheme(2)) {
        prop_assert!(w.ideal().is_saturated().unwrap());
    }

    #[test]
    fn separators_satisfy_contracts(w in small_scheme(2), j in 1usize..=4) {
        prop_assume!(j <= w.len());
        let seps = separators(&w, j).unwrap();
        assert_separator_contracts(&w, j, &seps);
    }

    #[test]
    fn file_format_round_trips(w in small_scheme(3)) {
        prop_assert_eq!(parse_scheme(&print_scheme(&w)).unwrap(), w);
    }
}
