use std::cmp::Ordering;

use artin_core::artin::{brho_norm, sqrt_coeffs, BRhoElement};
use artin_core::ideal::{is_standard, is_standard_monomial, normal_form, steps_are_contracting};
use artin_core::quotient::equal_mod_i;
use artin_core::rational::{int, rat};
use artin_core::series::{residual, solve_flat_counterexample, TruncatedSeriesR};
use artin_core::{compare, parse_polynomial, Monomial, Polynomial, RElement, Rational, Reducer, Variable};
use artin_core::Strategy as ReductionStrategy;
use num_traits::Zero;
use proptest::prelude::*;

fn var_strategy(max_w: u32) -> impl Strategy<Value = Variable> {
    prop_oneof![
        Just(Variable::X),
        Just(Variable::Y),
        Just(Variable::Z),
        (0..=max_w).prop_map(Variable::W),
    ]
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(var_strategy(10), 0..=6)
        .prop_map(|vs| vs.into_iter().fold(Monomial::one(), |m, v| m.mul(&Monomial::var(v))))
}

fn coeff_strategy() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((coeff_strategy(), monomial_strategy()), 0..=8)
        .prop_map(Polynomial::from_terms)
}

fn standard_strategy() -> impl Strategy<Value = Polynomial> {
    poly_strategy().prop_map(|p| normal_form(&p).unwrap().0)
}

fn nf(p: &Polynomial) -> Polynomial {
    normal_form(p).unwrap().0
}

fn x_times(p: &Polynomial) -> Polynomial {
    &Polynomial::var(Variable::X) * p
}

/// `ι(x) = ι(z) = 0`, `ι(y) = 1`, `ι(w_k) = k`: every generator is homogeneous
/// for both this weight and the total degree.
fn weight(m: &Monomial) -> u64 {
    m.y_exp() as u64 + m.w_index_sum()
}

/// `x`-free, `y`-free monomials carrying some `w_i` with `i ≥ 1`: the only
/// standard monomials on which multiplication by `x` can collide.
fn in_collision_class(m: &Monomial) -> bool {
    m.x_exp() == 0 && m.y_exp() == 0 && m.max_w_index().is_some_and(|i| i >= 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn order_is_total(a in monomial_strategy(), b in monomial_strategy()) {
        let ab = compare(&a, &b);
        prop_assert_eq!(ab, compare(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
    }

    #[test]
    fn order_is_multiplicative(a in monomial_strategy(), b in monomial_strategy(), c in monomial_strategy()) {
        prop_assert_eq!(compare(&a, &b), compare(&a.mul(&c), &b.mul(&c)));
        prop_assert_ne!(compare(&c, &Monomial::one()), Ordering::Less);
    }

    #[test]
    fn l1_norm_is_a_banach_norm(p in poly_strategy(), q in poly_strategy()) {
        prop_assert!((&p + &q).l1_norm() <= p.l1_norm() + q.l1_norm());
        prop_assert!((&p * &q).l1_norm() <= p.l1_norm() * q.l1_norm());
    }

    #[test]
    fn print_parse_round_trip(p in poly_strategy()) {
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn strategies_agree(p in poly_strategy(), seed in any::<u64>()) {
        let lead = Reducer::default().normal_form(&p).unwrap().0;
        let random = Reducer::with_strategy(ReductionStrategy::Random { seed }).normal_form(&p).unwrap().0;
        prop_assert_eq!(lead, random);
    }

    #[test]
    fn normal_form_is_idempotent_and_standard(p in poly_strategy()) {
        let once = nf(&p);
        prop_assert!(is_standard(&once));
        prop_assert_eq!(nf(&once), once);
    }

    #[test]
    fn trace_replays_and_lies_in_ideal(p in poly_strategy()) {
        let (result, trace) = normal_form(&p).unwrap();
        prop_assert_eq!(trace.replay(&p), result.clone());
        prop_assert_eq!(&p - &result, trace.ideal_combination());
        prop_assert!(nf(&(&p - &result)).is_zero());
        prop_assert!(steps_are_contracting(&trace));
    }

    #[test]
    fn norm_is_monotone(p in poly_strategy()) {
        prop_assert!(nf(&p).l1_norm() <= p.l1_norm());
    }

    #[test]
    fn degree_and_weight_preserved(m in monomial_strategy()) {
        for t in nf(&Polynomial::from(m.clone())).terms() {
            prop_assert_eq!(t.monomial.total_degree(), m.total_degree());
            prop_assert_eq!(weight(&t.monomial), weight(&m));
        }
    }

    #[test]
    fn monomials_reduce_to_one_term(m in monomial_strategy()) {
        // binomial generators: a monomial's orbit is a chain of single terms
        let (result, trace) = normal_form(&Polynomial::from(m)).unwrap();
        prop_assert_eq!(result.len(), 1);
        prop_assert!(trace.steps.len() as u64 <= 1 + 64 * 64);
    }

    #[test]
    fn bare_w_coefficients_are_untouched(p in poly_strategy(), k in 0u32..=10) {
        let w = Monomial::var(Variable::W(k));
        prop_assert_eq!(nf(&p).coefficient(&w), p.coefficient(&w));
    }

    #[test]
    fn norm_bound_is_consistent(p in poly_strategy()) {
        let r = RElement::project(&p).unwrap();
        prop_assert_eq!(r.norm_upper_bound(), &r.normal_form().l1_norm());
        if let Some(exact) = r.exact_norm() {
            prop_assert!(&exact <= r.norm_upper_bound());
        }
    }

    #[test]
    fn multiplication_by_x_is_injective_off_the_collision_class(f in standard_strategy()) {
        let f = Polynomial::from_terms(
            f.terms().iter().filter(|t| !in_collision_class(&t.monomial)).map(|t| (t.coeff.clone(), t.monomial.clone())),
        );
        let xf = RElement::project(&x_times(&f)).unwrap();
        prop_assert_eq!(xf.is_zero(), f.is_zero());
        prop_assert_eq!(xf.divide_by_x().unwrap().map(|h| h.normal_form().clone()), Some(f));
    }

    #[test]
    fn division_returns_a_preimage(f in standard_strategy()) {
        let xf = RElement::project(&x_times(&f)).unwrap();
        let h = xf.divide_by_x().unwrap().expect("x*f is a multiple of x");
        prop_assert!(equal_mod_i(&x_times(h.normal_form()), &x_times(&f)).unwrap());
    }

    #[test]
    fn series_solution_is_rigid_off_the_kernel(k in 0usize..=6, d in standard_strategy()) {
        let d = Polynomial::from_terms(
            d.terms().iter().filter(|t| !in_collision_class(&t.monomial)).map(|t| (t.coeff.clone(), t.monomial.clone())),
        );
        prop_assume!(!d.is_zero());
        let mut f = solve_flat_counterexample(6).unwrap();
        let perturbed = f.coeff(k).add(&RElement::project(&d).unwrap());
        f.set_coeff(k, perturbed);
        prop_assert!(!residual(&f).unwrap().is_zero());
    }

    #[test]
    fn brho_norm_is_submultiplicative(
        a in prop::collection::vec((0u32..8, coeff_strategy()), 0..6),
        b in prop::collection::vec((0u32..8, coeff_strategy()), 0..6),
        (rn, rd) in (1i64..=5, 1i64..=5),
    ) {
        let rho = rat(rn, rd);
        let f = BRhoElement::from_coeffs(a, &rho);
        let g = BRhoElement::from_coeffs(b, &rho);
        prop_assert!(brho_norm(&f.mul(&g)) <= brho_norm(&f) * brho_norm(&g));
        prop_assert!(brho_norm(&f.add(&g)) <= brho_norm(&f) + brho_norm(&g));
    }
}

#[test]
fn collision_witness() {
    let delta = parse_polynomial("2*w0*w2 - w1^2").unwrap();
    assert!(is_standard(&delta));
    assert!(is_standard_monomial(&Monomial::new(0, 0, 0, &[(1, 2)])));
    assert!(nf(&x_times(&delta)).is_zero());
    // so x*w1^2 and 2*x*w0*w2 are the same class
    assert!(equal_mod_i(&x_times(&parse_polynomial("w1^2").unwrap()), &x_times(&parse_polynomial("2*w0*w2").unwrap())).unwrap());
}

#[test]
fn series_non_uniqueness_witness() {
    let delta = RElement::project(&parse_polynomial("2*w0*w2 - w1^2").unwrap()).unwrap();
    for k in 0..=6 {
        let mut f = solve_flat_counterexample(6).unwrap();
        let shifted = f.coeff(k).add(&delta);
        f.set_coeff(k, shifted);
        assert!(residual(&f).unwrap().is_zero(), "k = {k}");
        assert_ne!(f, solve_flat_counterexample(6).unwrap());
    }
}

#[test]
fn zero_series_has_residual_minus_z_squared() {
    let res = residual(&TruncatedSeriesR::zero(0)).unwrap();
    assert_eq!(res.coeff(0).normal_form(), &parse_polynomial("-x*w0").unwrap());
}

#[test]
fn sqrt_square_self_test() {
    for c in 0..=30usize {
        let a = sqrt_coeffs(c);
        let mut s = vec![int(1)];
        s.extend(a);
        // t-coefficients of s^2 - (1 + t) below t^{c+1}
        for n in 0..=c {
            let sq = (0..=n).fold(Rational::zero(), |acc, i| acc + &s[i] * &s[n - i]);
            let target = if n <= 1 { int(1) } else { int(0) };
            assert_eq!(sq, target, "c = {c}, n = {n}");
        }
    }
}
