use proptest::prelude::*;

use charge_basis::basis::descent_compare;
use charge_basis::catabolism::{
    adjacent_swap_check, blasiak_ctype, catabolize, catabolize_jdt, ctype, ctype_direct, ctype_of_permutation,
};
use charge_basis::chains::{build_seed_filling, chains_run};
use charge_basis::charge::{
    charge, charge_word, cocharge, cocharge_word, cocharge_word_inverse, is_cocharge_word, tableau_charge,
    tableau_cocharge,
};
use charge_basis::partition::{enumerate_partitions, Partition};
use charge_basis::perm::{rsk_inverse, Permutation};
use charge_basis::qpoly::QPolynomial;
use charge_basis::quotient::tanisaki::tanisaki_groebner;
use charge_basis::quotient::{MVPolynomial, MonomialOrder};

fn perm(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let all = enumerate_partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn same_size_partitions(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max).prop_flat_map(|n| {
        let all = enumerate_partitions(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

fn qpoly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-5i64..=5, 0..5).prop_map(QPolynomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rsk_round_trip(w in perm(10)) {
        let (p, q) = w.rsk();
        prop_assert!(p.is_standard() && q.is_standard());
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), w);
    }

    #[test]
    fn charge_and_cocharge_are_complementary(w in perm(10)) {
        let n = w.len();
        prop_assert_eq!(charge(&w) + cocharge(&w), n * (n - 1) / 2);
        let z = cocharge_word(&w);
        prop_assert!(is_cocharge_word(&z));
        prop_assert_eq!(cocharge_word_inverse(&z).unwrap(), w.clone());
        let mut cw = cocharge_word(&w.reverse());
        cw.reverse();
        prop_assert_eq!(charge_word(&w), cw);
    }

    #[test]
    fn statistics_depend_only_on_insertion_tableau(w in perm(9)) {
        let p = w.insertion_tableau();
        prop_assert_eq!(charge(&w), tableau_charge(&p));
        let c = ctype(&p).unwrap();
        prop_assert_eq!(&c, &ctype_direct(&p).unwrap());
        prop_assert_eq!(&c, &ctype_of_permutation(&w));
        prop_assert_eq!(&c, &blasiak_ctype(&cocharge_word(&w)).unwrap().shape);
        prop_assert_eq!(ctype(&p.transpose()).unwrap(), ctype_of_permutation(&w.reverse()));
    }

    #[test]
    fn catabolism_drops_cocharge_by_boxes_outside_first_row(w in perm(9)) {
        let t = w.insertion_tableau();
        let k = catabolize(&t);
        prop_assert_eq!(&k, &catabolize_jdt(&t));
        prop_assert!(k.is_standard());
        let drop = t.size() - t.shape().part(0);
        prop_assert_eq!(tableau_cocharge(&k) + drop, tableau_cocharge(&t));
    }

    #[test]
    fn adjacent_swaps_raise_ctype(w in perm(10)) {
        for i in (1..w.len()).filter(|&i| w.at(i) + 1 < w.at(i + 1)) {
            prop_assert!(adjacent_swap_check(&w, i).unwrap().1, "{} at {}", w, i);
        }
    }

    #[test]
    fn shuffles_dominate_the_sum(u in perm(6), v in perm(6), seed in any::<u64>()) {
        let (x, y) = (cocharge_word(&u), cocharge_word(&v));
        let total = x.len() + y.len();
        // Choose |x| positions for x from the seed bits, deterministically.
        let mut order: Vec<usize> = (1..=total).collect();
        let mut s = seed;
        for i in (1..total).rev() {
            order.swap(i, (s % (i as u64 + 1)) as usize);
            s = s.rotate_left(7) ^ 0x9e37_79b9_7f4a_7c15;
        }
        let mut first: Vec<usize> = order[..x.len()].to_vec();
        first.sort_unstable();
        let second: Vec<usize> = (1..=total).filter(|p| !first.contains(p)).collect();
        let (mut xi, mut yi) = (x.iter(), y.iter());
        let z: Vec<usize> = (1..=total)
            .map(|p| *if first.contains(&p) { xi.next() } else { yi.next() }.unwrap())
            .collect();
        let floor = ctype_of_permutation(&u).partwise_sum(&ctype_of_permutation(&v));
        let ct = ctype_of_permutation(&cocharge_word_inverse(&z).unwrap());
        prop_assert!(ct.dominates(&floor).unwrap());
        let seed_filling = build_seed_filling(&z, &[first, second]).unwrap();
        prop_assert_eq!(seed_filling.shape(), floor);
        let out = chains_run(&z, &seed_filling).unwrap();
        prop_assert_eq!(out.ctype, ct);
    }

    #[test]
    fn transpose_reverses_dominance((a, b) in same_size_partitions(8)) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.dominates(&b).unwrap(), b.transpose().dominates(&a.transpose()).unwrap());
    }

    #[test]
    fn descent_compare_is_a_total_order(a in prop::collection::vec(0usize..4, 5), b in prop::collection::vec(0usize..4, 5)) {
        let ab = descent_compare(&a, &b).unwrap();
        prop_assert_eq!(ab.reverse(), descent_compare(&b, &a).unwrap());
        prop_assert_eq!(ab.is_eq(), a == b);
    }

    #[test]
    fn qpolynomials_form_a_ring(a in qpoly(), b in qpoly(), c in qpoly(), x in -3i64..=3) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), &a * &c + &b * &c);
        prop_assert_eq!((&a * &b).eval(x), a.eval(x) * b.eval(x));
        prop_assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn normal_forms_are_canonical(mu in partition(4), terms in prop::collection::vec((prop::collection::vec(0usize..4, 4), -3i64..=3), 1..6)) {
        let n = mu.size();
        let order = MonomialOrder::Grevlex;
        let gb = tanisaki_groebner(&mu, order, None).unwrap();
        let p = terms.iter().fold(MVPolynomial::zero(n, order), |acc, (m, c)| {
            acc.add(&MVPolynomial::monomial(&m[..n], order).scale(&num_rational::BigRational::from_integer((*c).into())))
        });
        let r = gb.normal_form(&p);
        prop_assert_eq!(gb.normal_form(&r), r.clone());
        prop_assert!(gb.contains(&p.sub(&r)));
    }
}
