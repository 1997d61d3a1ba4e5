//! Cross-module invariants: ring axioms, order axioms, and the structural
//! identities tying partitions, strata and stalk tables together.

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use zastava::partitions::{enumerate_partitions, CoweightPartition};
use zastava::poly::QPolynomial;
use zastava::qkostant::kostant_table;
use zastava::rootdata::{coweight_box, Coweight, RootSystem};
use zastava::stalks::{stalk_poly_for_partition, zastava_stalk_table, Side};
use zastava::strata::zastava_strata;

fn arb_poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-1_000_000i64..=1_000_000, 0..=21)
        .prop_map(|coeffs| QPolynomial::from_ints(&coeffs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn addition_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn results_stay_canonical(a in arb_poly(), b in arb_poly()) {
        for p in [&a + &b, &a * &b] {
            prop_assert!(p.coeffs().last().is_none_or(|c| c != &BigInt::from(0)));
        }
    }

    #[test]
    fn divide_by_q_inverts_shift(a in arb_poly()) {
        prop_assert_eq!(a.shift_up(1).divide_by_q().unwrap(), a);
    }
}

fn arb_coweight(rank: usize) -> impl Strategy<Value = Coweight> {
    prop::collection::vec(-5i64..=5, rank).prop_map(Coweight::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn leq_is_a_partial_order(
        a in arb_coweight(3),
        b in arb_coweight(3),
        c in arb_coweight(3),
    ) {
        prop_assert!(a.leq(&a).unwrap());
        if a.leq(&b).unwrap() && b.leq(&a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if a.leq(&b).unwrap() && b.leq(&c).unwrap() {
            prop_assert!(a.leq(&c).unwrap());
        }
    }

    #[test]
    fn rho_pairing_is_additive(a in arb_coweight(4), b in arb_coweight(4)) {
        let sum = a.checked_add(&b).unwrap();
        prop_assert_eq!(sum.pairing_rho(), a.pairing_rho() + b.pairing_rho());
    }
}

fn random_partition(rng: &mut ChaCha8Rng, rank: usize, max_coord: i64) -> CoweightPartition {
    let nu = Coweight::new((0..rank).map(|_| rng.random_range(0..=max_coord)).collect());
    let all = enumerate_partitions(&nu).unwrap();
    all.choose(rng).unwrap().clone()
}

#[test]
fn stalk_polynomials_multiply_under_concat() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for name in ["A2", "B2"] {
        let rs = RootSystem::named(name).unwrap();
        for _ in 0..100 {
            let g1 = random_partition(&mut rng, 2, 3);
            let g2 = random_partition(&mut rng, 2, 3);
            let merged = g1.concat(&g2).unwrap();
            let product =
                &stalk_poly_for_partition(&rs, &g1) * &stalk_poly_for_partition(&rs, &g2);
            assert_eq!(stalk_poly_for_partition(&rs, &merged), product);
        }
    }
}

#[test]
fn zastava_dims_add_under_factorization() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfac7);
    let rs = RootSystem::named("B2").unwrap();
    for _ in 0..50 {
        let mu1 = Coweight::new(vec![rng.random_range(0..=2), rng.random_range(0..=2)]);
        let mu2 = Coweight::new(vec![rng.random_range(0..=2), rng.random_range(0..=2)]);
        let strata1 = zastava_strata(&rs, &mu1).unwrap();
        let strata2 = zastava_strata(&rs, &mu2).unwrap();
        let s1 = strata1.choose(&mut rng).unwrap();
        let s2 = strata2.choose(&mut rng).unwrap();
        let total = mu1.checked_add(&mu2).unwrap();
        let merged_gamma = s1.gamma.concat(&s2.gamma).unwrap();
        let merged = zastava_strata(&rs, &total)
            .unwrap()
            .into_iter()
            .find(|s| s.gamma == merged_gamma && s.nu == s1.nu.checked_add(&s2.nu).unwrap())
            .expect("concatenated stratum exists");
        assert_eq!(merged.dim, s1.dim + s2.dim);
    }
}

#[test]
fn duality_reflects_degree_maps() {
    for name in ["A1", "A2", "B2"] {
        let rs = RootSystem::named(name).unwrap();
        let bound = if rs.rank() == 1 {
            Coweight::new(vec![4])
        } else {
            Coweight::new(vec![2, 2])
        };
        for mu in coweight_box(&bound).unwrap() {
            let stalk = zastava_stalk_table(&rs, &mu, Side::Stalk).unwrap();
            let costalk = zastava_stalk_table(&rs, &mu, Side::Costalk).unwrap();
            for (s, c) in stalk.entries.iter().zip(&costalk.entries) {
                let reflected: std::collections::BTreeMap<i64, _> = s
                    .degree_ranks
                    .0
                    .iter()
                    .map(|(m, r)| (-m - 2 * s.dim, r.clone()))
                    .collect();
                assert_eq!(reflected, c.degree_ranks.0, "{name} {mu}");
            }
        }
    }
}

#[test]
fn generating_function_identity_small_boxes() {
    // The table is the box truncation of ∏_γ Σ_k q^k x^{kγ}.
    for (name, bound) in [("A2", vec![2, 2]), ("B2", vec![2, 1]), ("G2", vec![1, 1])] {
        let rs = RootSystem::named(name).unwrap();
        let bound = Coweight::new(bound);
        let expected = truncated_product(&rs, &bound);
        let table = kostant_table(&rs, &bound).unwrap();
        assert_eq!(table.values(), &expected, "type {name}");
    }
}

/// Independent oracle: multiplies out the factors of the generating product
/// one coroot at a time, truncating to the box at every step.
fn truncated_product(
    rs: &RootSystem,
    bound: &Coweight,
) -> std::collections::BTreeMap<Coweight, QPolynomial> {
    let points = coweight_box(bound).unwrap();
    let mut acc: std::collections::BTreeMap<Coweight, QPolynomial> = points
        .iter()
        .map(|p| (p.clone(), QPolynomial::zero()))
        .collect();
    acc.insert(Coweight::zero(bound.rank()), QPolynomial::one());
    for gamma in rs.positive_coroots() {
        let mut next: std::collections::BTreeMap<Coweight, QPolynomial> = points
            .iter()
            .map(|p| (p.clone(), QPolynomial::zero()))
            .collect();
        for x in &points {
            // Coefficient of x^x in old · Σ_k q^k x^{kγ}.
            let mut total = QPolynomial::zero();
            let mut k = 0usize;
            loop {
                let mut shifted = x.clone();
                let mut ok = true;
                for _ in 0..k {
                    match shifted.checked_sub(gamma) {
                        Ok(s) if s.is_dominant_sum() => shifted = s,
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    break;
                }
                total = &total + &acc[&shifted].shift_up(k);
                k += 1;
            }
            next.insert(x.clone(), total);
        }
        acc = next;
    }
    acc
}
