use proptest::prelude::*;

use mnqt::exact::{RatFunc, Var};
use mnqt::kostka::{fake_degree, kostka_direct, kostka_iter1, ls_arguments, ls_coefficient};
use mnqt::macdonald::{qt_binomial, sk_qt, skew_eval_a_minus_1, skew_q};
use mnqt::partitions::{partitions, partitions_inside, standard_tableaux_rows, Partition, SkewShape};
use mnqt::pieri::hl_inverse_pieri;
use mnqt::symfunc::{Alphabet, Basis, SymFunc};
use mnqt::Int;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let ps = partitions(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

fn pair(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max).prop_flat_map(|n| {
        let ps = partitions(n);
        let k = ps.len();
        (0..k, 0..k).prop_map(move |(i, j)| (ps[i].clone(), ps[j].clone()))
    })
}

fn skew_pair(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    partition(max).prop_flat_map(|lam| {
        let inner: Vec<Partition> = (0..=lam.size()).flat_map(|k| partitions_inside(&lam, k)).collect();
        let n = inner.len();
        (Just(lam), 0..n).prop_map(move |(l, i)| (l, inner[i].clone()))
    })
}

fn monomial() -> impl Strategy<Value = RatFunc> {
    (-3i64..=3, 0i64..=3, 0i64..=2, 0i64..=2).prop_map(|(c, q, t, a)| RatFunc::monomial([q, t, a]).scale_int(&Int::from(c)))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (prop::collection::vec(monomial(), 1..4), prop::collection::vec(monomial(), 1..3)).prop_map(|(n, d)| {
        let num = RatFunc::sum(n.iter());
        let den = RatFunc::sum(d.iter()).add(&RatFunc::one().add(&RatFunc::q()));
        if den.is_zero() {
            num
        } else {
            num.div(&den)
        }
    })
}

fn hook_count(lam: &Partition) -> Int {
    let mut num = Int::ONE;
    for i in 1..=lam.size() {
        num = &num * &Int::from(i as i64);
    }
    let mut den = Int::ONE;
    for (i, j) in lam.cells() {
        den = &den * &Int::from((lam.arm(i, j) + lam.leg(i, j) + 1) as i64);
    }
    num.div_exact(&den)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratfunc_prints_and_parses(x in ratfunc()) {
        let back: RatFunc = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn ratfunc_field_laws(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        if !y.is_zero() {
            prop_assert_eq!(x.mul(&y).div(&y), x);
        }
    }

    #[test]
    fn conjugation_is_an_involution(lam in partition(9)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
        let n: usize = lam.conj().iter().map(|&c| c * c.saturating_sub(1) / 2).sum();
        prop_assert_eq!(lam.n(), n);
    }

    #[test]
    fn partition_text_round_trip(lam in partition(9)) {
        let back: Partition = lam.to_string().parse().unwrap();
        prop_assert_eq!(back, lam);
    }

    #[test]
    fn a_minus_one_closed_form((lam, mu) in skew_pair(4)) {
        let oracle = skew_q(&lam, &mu).unwrap().eval(&Alphabet::a_minus_one()).unwrap();
        prop_assert_eq!(skew_eval_a_minus_1(&lam, &mu), oracle);
    }

    #[test]
    fn sk_is_an_evaluation((lam, mu) in skew_pair(4)) {
        let al = Alphabet::new("(1-q/t)/(1-t)", |n| {
            let n = n as i64;
            RatFunc::monomial([n, -n, 0]).one_minus().div(&RatFunc::t().pow(n).one_minus())
        });
        prop_assert_eq!(sk_qt(&lam, &mu), skew_q(&lam, &mu).unwrap().eval(&al).unwrap());
    }

    #[test]
    fn binomial_is_one_on_the_diagonal(lam in partition(5)) {
        prop_assert!(qt_binomial(&lam, &lam).unwrap().is_one());
    }

    #[test]
    fn fake_degree_counts_tableaux((lam, mu) in skew_pair(6)) {
        let f = fake_degree(&lam, &mu).unwrap();
        let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        let count = standard_tableaux_rows(&shape).len() as i64;
        prop_assert_eq!(f.substitute_with(Var::Q, &RatFunc::one()).unwrap(), RatFunc::from_int(count));
        if mu.is_empty() {
            prop_assert_eq!(RatFunc::from_int(hook_count(&lam)), RatFunc::from_int(count));
        }
    }

    #[test]
    fn kostka_specializations((lam, mu) in pair(5)) {
        let k = kostka_direct(&lam, &mu).unwrap();
        prop_assert_eq!(&k, &kostka_iter1(&lam, &mu).unwrap());
        let one = RatFunc::one();
        let at11 = k.substitute_with(Var::Q, &one).unwrap().substitute_with(Var::T, &one).unwrap();
        prop_assert_eq!(at11, RatFunc::from_int(hook_count(&lam)));
        // K_{λμ}(0,1) is the number of semistandard tableaux of shape λ and content μ
        let at01 = k.substitute_with(Var::Q, &RatFunc::zero()).unwrap().substitute_with(Var::T, &one).unwrap();
        let classical = SymFunc::s(&lam).convert(Basis::Monomial).unwrap().coeff(&mu);
        prop_assert_eq!(at01, classical);
    }

    #[test]
    fn ls_coefficient_at_zero_is_one(lam in partition(8)) {
        let u = ls_arguments(&lam);
        let theta = vec![0; u.len()];
        prop_assert!(ls_coefficient(&theta, &u).unwrap().is_one());
    }

    #[test]
    fn pieri_inversion_reconstructs(lam in partition(6)) {
        prop_assert!(hl_inverse_pieri(&lam).unwrap().check().unwrap());
    }
}
