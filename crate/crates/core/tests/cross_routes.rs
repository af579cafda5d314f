use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use genus_forge::characters::{f_weight, signed_f_weight_via_q, CharacterTable};
use genus_forge::exact_arith::{ExactInt, ExactRat};
use genus_forge::genus_distribution::{
    a_coefficient, dist_via_hz, dist_via_stirling, dist_via_theorem, epsilon_counts,
};
use genus_forge::group_fourier::{hook_only_law, product_law_at_type, ClassProductLaw};
use genus_forge::montecarlo::{run_mc_with, Boundary, McConfig};
use genus_forge::oracle::{a_coefficient_by_series, census_with_boundary, enumerate_census};
use genus_forge::permutations::{class_size, sample_unicyclic, CycleType, Permutation};

fn rat(n: i64, d: i64) -> ExactRat {
    ExactRat::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn small_tables() {
    // n = 3: five planar gluings, ten on the torus
    let eps = epsilon_counts(3).unwrap();
    assert_eq!(eps[&0], BigInt::from(5));
    assert_eq!(eps[&1], BigInt::from(10));
    // n = 4: 14 + 70 + 21 = 105
    let eps = epsilon_counts(4).unwrap();
    let v: Vec<ExactInt> = eps.values().cloned().collect();
    assert_eq!(v, vec![BigInt::from(14), BigInt::from(70), BigInt::from(21)]);
    assert_eq!(dist_via_stirling(2).unwrap().prob(3), rat(2, 3));
}

#[test]
fn gluing_law_from_characters_matches_enumeration() {
    // Fourier mass on each class of S_2n, summed by cycle count, is the law of X_n
    for n in 1..=4 {
        let law = ClassProductLaw::gluing(2 * n).unwrap();
        let census = enumerate_census(n, 8).unwrap().distribution().unwrap();
        let mut by_cycles = vec![ExactRat::zero(); 2 * n + 1];
        for t in CycleType::all(2 * n) {
            let point = product_law_at_type(&law, &t, 10).unwrap();
            assert_eq!(point, hook_only_law(&t).unwrap());
            by_cycles[t.total_cycles()] += point * ExactRat::from_integer(class_size(&t));
        }
        for nu in 1..=n + 1 {
            assert_eq!(by_cycles[nu], census.prob(nu), "n={n} nu={nu}");
        }
    }
}

#[test]
fn census_independent_of_boundary_choice() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 5;
    let fixed = enumerate_census(n, 8).unwrap();
    for _ in 0..4 {
        let beta = sample_unicyclic(2 * n, &mut rng).unwrap();
        assert_eq!(census_with_boundary(n, &beta, 8).unwrap(), fixed, "{beta}");
    }
    let reversed = Permutation::full_cycle(2 * n).inverse();
    assert_eq!(census_with_boundary(n, &reversed, 8).unwrap(), fixed);
}

#[test]
fn a_coefficients_two_ways() {
    for n in 1..=4 {
        for nu in 1..=n + 1 {
            for arm in 1..=2 * n {
                assert_eq!(
                    a_coefficient(n, nu, arm).unwrap(),
                    a_coefficient_by_series(n, nu, arm).unwrap(),
                    "n={n} nu={nu} arm={arm}"
                );
            }
        }
    }
}

#[test]
fn f_weights_from_table() {
    for n_total in [2usize, 4, 6, 8] {
        let table = CharacterTable::cached(n_total);
        let inv = table
            .class_index(&CycleType::involution(n_total).unwrap())
            .unwrap();
        let cyc = table.class_index(&CycleType::full_cycle(n_total)).unwrap();
        for (row, lambda) in table.partitions().iter().enumerate() {
            if !lambda.is_hook() {
                continue;
            }
            let arm = lambda.parts()[0];
            let expect = ExactRat::new(
                table.value(row, inv) * table.value(row, cyc),
                table.dimensions()[row].clone(),
            );
            assert_eq!(f_weight(n_total, arm).unwrap(), expect, "{lambda}");
            let leg = n_total + 1 - arm;
            let sign = if leg % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            assert_eq!(
                signed_f_weight_via_q(n_total / 2, arm).unwrap(),
                sign * expect,
                "{lambda}"
            );
        }
    }
}

#[test]
fn random_boundary_matches_exact_law_in_mean() {
    let mut cfg = McConfig::new(8, 60_000, 13);
    cfg.boundary = Boundary::UniformUnicyclic;
    let r = run_mc_with(&cfg).unwrap();
    assert!(r.mean_within(4.0), "z = {}", r.mean_z_score());
    assert!(r.tv() < 0.03, "tv {}", r.tv());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn routes_agree(n in 1usize..=14) {
        let s = dist_via_stirling(n).unwrap();
        prop_assert_eq!(&dist_via_theorem(n).unwrap(), &s);
        prop_assert_eq!(&dist_via_hz(n).unwrap(), &s);
        prop_assert!(s.total_mass().is_one());
        s.validate().unwrap();
    }
}
