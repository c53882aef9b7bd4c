use super::*;
use crate::polyring::strategies::homogeneous;
use proptest::prelude::*;

fn p(s: &str) -> Polynomial {
    Polynomial::parse(s, 3).unwrap()
}

fn ideal(gens: &[&str]) -> Ideal {
    Ideal::parse(3, gens).unwrap()
}

fn point_ideal(a: i64, b: i64, c: i64) -> Ideal {
    // first coordinate is 1 for every point used here
    assert_eq!(a, 1);
    ideal(&[&format!("X1 - {}X0", b), &format!("X2 - {}X0", c)])
}

fn ex27_support() -> Vec<Ideal> {
    [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1)]
        .iter()
        .map(|&(b, c)| point_ideal(1, b, c))
        .collect()
}

#[test]
fn normal_form_examples() {
    assert!(normal_form(&p("X1^2"), &[p("X1")]).is_zero());
    assert_eq!(normal_form(&p("X0*X1 + X2^2"), &[p("X1")]), p("X2^2"));
    let f = p("3/2X0*X1 - X2^2");
    assert_eq!(normal_form(&f, &[]), f);
}

#[test]
fn normal_form_keeps_rational_scale() {
    let r = normal_form(&p("1/3X0^2 + X1^2"), &[p("2X0 - X2")]);
    assert_eq!(r, p("X1^2 + 1/12X2^2"));
}

#[test]
fn reduced_basis_examples() {
    let lin = ideal(&["X1", "X2 - X0"]);
    let mut got: Vec<_> = lin.groebner_basis().polynomials().to_vec();
    got.sort_by_key(|q| q.to_string());
    let mut want = vec![p("X1"), p("X0 - X2")];
    want.sort_by_key(|q| q.to_string());
    assert_eq!(got, want);

    let two = ideal(&["X0^2", "X0*X1 + X1^2"]);
    let gb = two.groebner_basis().polynomials().to_vec();
    assert_eq!(gb.len(), 3);
    assert!(gb.contains(&p("X0^2")));
    assert!(gb.contains(&p("X0*X1 + X1^2")));
    assert!(gb.contains(&p("X1^3")));
}

#[test]
fn product_and_power() {
    let a = ideal(&["X1"]);
    let b = ideal(&["X2"]);
    assert!(a.product(&b).unwrap().same_ideal(&ideal(&["X1*X2"])));
    let m = ideal(&["X1", "X2"]);
    assert!(m.power(2).same_ideal(&ideal(&["X1^2", "X1*X2", "X2^2"])));
    assert!(m.power(0).is_unit());
}

#[test]
fn intersection_examples() {
    let a = ideal(&["X1"]);
    let b = ideal(&["X2"]);
    assert!(a.intersection(&b).unwrap().same_ideal(&ideal(&["X1*X2"])));
    let i = ideal(&["X0*X2 - X2^2", "X1^2"]);
    assert!(i.intersection(&i).unwrap().same_ideal(&i));
}

#[test]
fn intersection_of_eight_points_is_the_complete_intersection() {
    let mut acc = Ideal::unit(3);
    for q in ex27_support() {
        acc = acc.intersection(&q).unwrap();
    }
    let ci = ideal(&["X0*X2 - X2^2", "6X0^3*X1 - 11X0^2*X1^2 + 6X0*X1^3 - X1^4"]);
    assert!(acc.same_ideal(&ci));
}

#[test]
fn colon_examples() {
    let i = ideal(&["X1*X2"]);
    assert!(i.colon(&ideal(&["X1"])).unwrap().same_ideal(&ideal(&["X2"])));
    let j = ideal(&["X0*X2 - X2^2", "X1^3"]);
    assert!(j.colon(&j).unwrap().is_unit());
}

#[test]
fn saturation_examples() {
    let sq = ideal(&["X1^2", "X1*X2", "X2^2"]);
    let m = Ideal::maximal(3);
    assert!(sq.saturation(&m).unwrap().same_ideal(&sq));
    assert!(Ideal::unit(3).saturation(&m).unwrap().is_unit());
    // an M-primary component is removed
    let embedded = sq.intersection(&m.power(4)).unwrap();
    assert!(!embedded.same_ideal(&sq));
    assert!(embedded.saturation(&m).unwrap().same_ideal(&sq));
}

#[test]
fn graded_piece_examples() {
    let lin = ideal(&["X1", "X2"]);
    assert_eq!(lin.graded_piece(1).len(), 2);
    assert!(ideal(&["X1^2", "X2^3"]).graded_piece(1).is_empty());
    // dim S_d - dim I_d equals the standard-monomial count
    let i = ideal(&["X0*X2 - X2^2", "X1^3"]);
    for d in 0..6 {
        let piece = i.graded_piece(d);
        assert_eq!(piece.len(), i.graded_dimension(d));
        assert!(piece.iter().all(|q| i.contains(q) && q.degree() == Some(d)));
    }
}

#[test]
fn ambient_mismatch_reported() {
    let a = ideal(&["X1"]);
    let b = Ideal::parse(4, &["X1"]).unwrap();
    assert_eq!(a.sum(&b).unwrap_err(), Error::AmbientMismatch { left: 3, right: 4 });
    assert!(Ideal::parse(3, &["X0 + X1^2"]).is_err());
}

#[test]
fn minimal_generators_drop_redundant_ones() {
    let i = ideal(&["X1", "X1*X2", "X2", "X1^2 + X2^2"]);
    assert_eq!(i.minimal_generators().len(), 2);
}

fn small_ideal() -> impl Strategy<Value = Ideal> {
    proptest::collection::vec((1u32..=3).prop_flat_map(|d| homogeneous(3, d)), 1..=3)
        .prop_map(|gens| Ideal::new(3, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reduced_basis_is_idempotent(i in small_ideal()) {
        let gb = i.groebner_basis().polynomials().to_vec();
        let again = Ideal::new(3, gb.clone()).unwrap();
        prop_assert_eq!(again.groebner_basis().polynomials(), &gb[..]);
    }

    #[test]
    fn membership_is_sound(i in small_ideal(), cs in proptest::collection::vec(homogeneous(3, 2), 3)) {
        let gens = i.generators().to_vec();
        let d = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
        // combination sum c_i * X0^(d - deg g_i) * g_i, homogeneous of degree d + 2
        let mut f = Polynomial::zero(3);
        for (g, c) in gens.iter().zip(&cs) {
            let pad = Polynomial::monomial(
                Monomial::from_exponents(&[(d - g.degree().unwrap()) as u16, 0, 0]),
                Rational::one(),
            );
            f = &f + &(&(c * &pad) * g);
        }
        prop_assert!(i.contains(&f));
        prop_assert!(i.groebner_basis().normal_form(&f).is_zero());
        let leads = i.groebner_basis().leading_monomials();
        for u in Monomial::all_of_degree(3, d + 2) {
            if !leads.iter().any(|l| l.divides(&u)) {
                prop_assert!(!i.contains(&(&f + &Polynomial::monomial(u, Rational::one()))));
            }
        }
    }

    #[test]
    fn dimension_identity(i in small_ideal(), j in small_ideal()) {
        let meet = i.intersection(&j).unwrap();
        let join = i.sum(&j).unwrap();
        for d in 0..6 {
            prop_assert_eq!(
                meet.graded_dimension(d) + join.graded_dimension(d),
                i.graded_dimension(d) + j.graded_dimension(d)
            );
        }
    }

    #[test]
    fn product_within_intersection(i in small_ideal(), j in small_ideal()) {
        let prod = i.product(&j).unwrap();
        let meet = i.intersection(&j).unwrap();
        prop_assert!(prod.is_subset_of(&meet));
        prop_assert!(meet.is_subset_of(&i));
        prop_assert!(meet.is_subset_of(&j));
    }

    #[test]
    fn colon_times_element_lands_in_ideal(i in small_ideal(), g in homogeneous(3, 1)) {
        prop_assume!(!g.is_zero());
        let q = i.quotient_by(&g).unwrap();
        for h in q.generators() {
            prop_assert!(i.contains(&(h * &g)));
        }
    }
}
