//! Verification suites behind `genus-forge verify`.

use std::collections::BTreeMap;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use genus_forge::characters::{
    chi_hook_general, chi_hook_on_involution, chi_hook_on_ncycle, dimension, mn_character, partitions_of,
    HookShape,
};
use genus_forge::exact_arith::identities::{
    alternating_even_sum, alternating_odd_sum, check_series_against_stirling, check_stirling_log_series,
};
use genus_forge::exact_arith::{double_factorial, factorial, hz_series, ExactRat};
use genus_forge::genus_distribution::{
    dist_via_hz, dist_via_stirling, dist_via_theorem, even_odd_split, hz_mean, GenusDistribution,
};
use genus_forge::group_fourier::{
    bruteforce_counts, frobenius_count, hook_only_law, product_law_at_type, product_law_pointmass,
    ClassProductLaw, DEFAULT_FOURIER_LIMIT,
};
use genus_forge::oracle::{check_exponential_formula, enumerate_census};
use genus_forge::permutations::{class_size, sample_class, CycleType};

use crate::output::{Cell, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Characters,
    Fourier,
    Distributions,
    Identities,
    All,
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n_max: usize,
    pub big_n_max: usize,
    pub seed: u64,
    pub oracle_limit: usize,
}

type Outcome = Result<(), String>;

pub struct Report {
    table: Table,
    failures: Vec<String>,
}

impl Report {
    fn new() -> Self {
        Report {
            table: Table::new(&["check_name", "params", "status"]),
            failures: Vec::new(),
        }
    }

    fn record(&mut self, name: &str, params: String, outcome: Outcome) {
        let status = match outcome {
            Ok(()) => "pass",
            Err(why) => {
                self.failures.push(format!("{name} [{params}]: {why}"));
                "fail"
            }
        };
        self.table
            .push(vec![Cell::text(name), Cell::text(params), Cell::text(status)]);
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn failures(&self) -> &[String] {
        &self.failures
    }
}

pub fn run(suite: Suite, p: &SuiteParams) -> Report {
    let mut r = Report::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        identities(&mut r);
    }
    if matches!(suite, Suite::Characters | Suite::All) {
        characters(&mut r, p.big_n_max);
    }
    if matches!(suite, Suite::Fourier | Suite::All) {
        fourier(&mut r, p.big_n_max, p.seed);
    }
    if matches!(suite, Suite::Distributions | Suite::All) {
        distributions(&mut r, p.n_max, p.oracle_limit);
    }
    r
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identities(r: &mut Report) {
    let a_max = 12;
    let even = (0..=a_max).try_for_each(|a| {
        (0..=2 * a + 1).try_for_each(|b| {
            let (lhs, rhs) = alternating_even_sum(a, b);
            ensure(lhs == rhs, || format!("a={a} b={b}: {lhs} != {rhs}"))
        })
    });
    r.record("alternating_even_binomial_sum", format!("a<={a_max}"), even);
    let odd = (0..=a_max).try_for_each(|a| {
        (0..=2 * a + 2).try_for_each(|b| {
            let (lhs, rhs) = alternating_odd_sum(a, b);
            ensure(lhs == rhs, || format!("a={a} b={b}: {lhs} != {rhs}"))
        })
    });
    r.record("alternating_odd_binomial_sum", format!("a<={a_max}"), odd);

    let order = 10;
    r.record(
        "stirling_log_series",
        format!("order={order}"),
        check_stirling_log_series(order).map_err(|e| e.to_string()),
    );
    r.record(
        "log_ratio_exponential_vs_stirling",
        format!("order={order}"),
        hz_series(order)
            .and_then(|s| check_series_against_stirling(&s))
            .map_err(|e| e.to_string()),
    );
}

fn characters(r: &mut Report, n_max: usize) {
    let squares = (1..=n_max).try_for_each(|n| {
        let sum: BigInt = partitions_of(n).iter().map(|l| dimension(l).pow(2)).sum();
        ensure(sum == factorial(n), || format!("N={n}: sum {sum}"))
    });
    r.record("dimension_square_sum", format!("N<={n_max}"), squares);

    let small = n_max.min(8);
    let identity = (1..=small).try_for_each(|n| {
        partitions_of(n).iter().try_for_each(|l| {
            let chi = mn_character(l, &CycleType::identity(n)).map_err(|e| e.to_string())?;
            ensure(chi == dimension(l), || format!("{l}: {chi}"))
        })
    });
    r.record(
        "character_at_identity_is_dimension",
        format!("N<={small}"),
        identity,
    );

    let vanish = (1..=small).try_for_each(|n| {
        partitions_of(n)
            .iter()
            .filter(|l| !l.is_hook())
            .try_for_each(|l| {
                let chi = mn_character(l, &CycleType::full_cycle(n)).map_err(|e| e.to_string())?;
                ensure(chi.is_zero(), || format!("{l}: {chi}"))
            })
    });
    r.record("non_hooks_vanish_on_full_cycle", format!("N<={small}"), vanish);

    let closed = (1..=n_max).try_for_each(|n| hook_forms_match(n).map_err(|e| format!("N={n}: {e}")));
    r.record("hook_closed_forms_match_rim_hooks", format!("N<={n_max}"), closed);
}

fn hook_forms_match(n: usize) -> Outcome {
    let classes = CycleType::all(n);
    for h in HookShape::all(n) {
        let lambda = h.partition();
        let mn = |t: &CycleType| mn_character(&lambda, t).map_err(|e| e.to_string());
        let on_cycle = chi_hook_on_ncycle(h);
        ensure(on_cycle == mn(&CycleType::full_cycle(n))?, || {
            format!("{lambda} on N-cycle")
        })?;
        if n.is_multiple_of(2) {
            let inv = CycleType::involution(n).map_err(|e| e.to_string())?;
            let closed = chi_hook_on_involution(h).map_err(|e| e.to_string())?;
            ensure(closed == mn(&inv)?, || format!("{lambda} on involutions"))?;
        }
        for t in &classes {
            let closed = chi_hook_general(h, t).map_err(|e| e.to_string())?;
            ensure(closed == mn(t)?, || format!("{lambda} on {t}"))?;
        }
    }
    Ok(())
}

fn random_law(rng: &mut ChaCha8Rng, n: usize, k: usize) -> ClassProductLaw {
    let classes = CycleType::all(n);
    let picked = (0..k)
        .map(|_| classes.choose(rng).expect("S_n has classes").clone())
        .collect();
    ClassProductLaw::new(picked).expect("classes share a degree")
}

/// Character-sum law and Frobenius count against exhaustive counting.
pub fn fourier_matches_bruteforce(law: &ClassProductLaw, rng: &mut ChaCha8Rng) -> Outcome {
    let n = law.degree();
    let counts = bruteforce_counts(law, u64::MAX).map_err(|e| e.to_string())?;
    let total = law.tuple_count();
    for t in CycleType::all(n) {
        let hits = counts.get(&t).copied().unwrap_or(0);
        let class_mass = ExactRat::new(BigInt::from(hits), total.clone());
        let by_type = product_law_at_type(law, &t, DEFAULT_FOURIER_LIMIT).map_err(|e| e.to_string())?;
        let point = product_law_pointmass(law, &sample_class(&t, rng), DEFAULT_FOURIER_LIMIT)
            .map_err(|e| e.to_string())?;
        let size = ExactRat::from_integer(class_size(&t));
        ensure(&by_type * &size == class_mass && point == by_type, || {
            format!("{:?} at {t}: {by_type} vs {class_mass}/|C|", law.classes())
        })?;
    }
    let frob = frobenius_count(law, DEFAULT_FOURIER_LIMIT).map_err(|e| e.to_string())?;
    let id_hits = counts.get(&CycleType::identity(n)).copied().unwrap_or(0);
    ensure(frob == BigInt::from(id_hits), || {
        format!("{:?}: Frobenius {frob} vs {id_hits}", law.classes())
    })
}

fn fourier(r: &mut Report, n_max: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let brute_n = n_max.min(5);

    let pairs = (1..=brute_n).try_for_each(|n| {
        let classes = CycleType::all(n);
        for a in &classes {
            for b in &classes {
                let law = ClassProductLaw::new(vec![a.clone(), b.clone()]).map_err(|e| e.to_string())?;
                fourier_matches_bruteforce(&law, &mut rng)?;
            }
        }
        Ok(())
    });
    r.record(
        "product_law_vs_bruteforce_k<=2",
        format!("N<={brute_n} exhaustive"),
        pairs,
    );

    let triples = (1..=brute_n).try_for_each(|n| {
        (0..12).try_for_each(|_| {
            let law = random_law(&mut rng, n, 3);
            fourier_matches_bruteforce(&law, &mut rng)
        })
    });
    r.record(
        "product_law_vs_bruteforce_k=3",
        format!("N<={brute_n} random seed={seed}"),
        triples,
    );

    let gluing_sizes: Vec<usize> = (2..=n_max.min(6)).step_by(2).collect();
    let gluing = gluing_sizes.iter().try_for_each(|&n| {
        let law = ClassProductLaw::gluing(n).map_err(|e| e.to_string())?;
        fourier_matches_bruteforce(&law, &mut rng)?;
        CycleType::all(n).iter().try_for_each(|t| {
            let hooks = hook_only_law(t).map_err(|e| e.to_string())?;
            let full = product_law_at_type(&law, t, DEFAULT_FOURIER_LIMIT).map_err(|e| e.to_string())?;
            ensure(hooks == full, || {
                format!("N={n} at {t}: hook sum {hooks} vs {full}")
            })
        })
    });
    r.record(
        "gluing_law_vs_bruteforce",
        format!("N in {gluing_sizes:?}"),
        gluing,
    );

    let frob_n = n_max.clamp(1, 8);
    let integral = (0..50).try_for_each(|_| {
        let n = rng.random_range(1..=frob_n);
        let k = rng.random_range(1..=4);
        let law = random_law(&mut rng, n, k);
        frobenius_count(&law, DEFAULT_FOURIER_LIMIT)
            .map(|_| ())
            .map_err(|e| e.to_string())
    });
    r.record(
        "frobenius_count_integral",
        format!("50 laws N<={frob_n} seed={seed}"),
        integral,
    );
}

fn distributions(r: &mut Report, n_max: usize, oracle_limit: usize) {
    let dists: Vec<(usize, GenusDistribution)> = (1..=n_max)
        .map(|n| (n, dist_via_stirling(n).expect("n >= 1")))
        .collect();

    let oracle_n = n_max.min(oracle_limit);
    let four_way = dists.iter().try_for_each(|(n, stirling)| {
        let n = *n;
        let theorem = dist_via_theorem(n).map_err(|e| e.to_string())?;
        let hz = dist_via_hz(n).map_err(|e| e.to_string())?;
        ensure(&theorem == stirling, || format!("n={n}: theorem vs stirling"))?;
        ensure(&hz == stirling, || format!("n={n}: hz vs stirling"))?;
        if n <= oracle_n {
            let census = enumerate_census(n, oracle_limit)
                .and_then(|c| c.distribution())
                .map_err(|e| e.to_string())?;
            ensure(&census == stirling, || format!("n={n}: census vs stirling"))?;
        }
        Ok(())
    });
    r.record(
        "four_way_agreement",
        format!("n<={n_max} oracle n<={oracle_n}"),
        four_way,
    );

    let catalan = dists.iter().try_for_each(|(n, d)| {
        let eps = d.epsilon_counts().map_err(|e| e.to_string())?;
        let c = factorial(2 * n) / (factorial(*n) * factorial(n + 1));
        ensure(eps.get(&0) == Some(&c), || {
            format!("n={n}: {:?} vs {c}", eps.get(&0))
        })
    });
    r.record("planar_gluings_are_catalan", format!("n<={n_max}"), catalan);

    let totals = dists.iter().try_for_each(|(n, d)| {
        let eps = d.epsilon_counts().map_err(|e| e.to_string())?;
        let sum: BigInt = eps.values().sum();
        let expect = double_factorial(2 * *n as i64 - 1).map_err(|e| e.to_string())?;
        ensure(sum == expect, || format!("n={n}: {sum}"))?;
        ensure(d.total_mass().is_one(), || {
            format!("n={n}: mass {}", d.total_mass())
        })
    });
    r.record("gluing_total_is_double_factorial", format!("n<={n_max}"), totals);

    let parity = dists.iter().try_for_each(|(n, d)| {
        d.iter().try_for_each(|(nu, p)| {
            let admissible = (n + 1 - nu) % 2 == 0;
            ensure(admissible != p.is_zero(), || format!("n={n} nu={nu}: {p}"))
        })
    });
    r.record("parity_support", format!("n<={n_max}"), parity);

    let split = dists.iter().try_for_each(|(n, d)| {
        (1..=n + 1).try_for_each(|nu| {
            let (even, odd) = even_odd_split(*n, nu).map_err(|e| e.to_string())?;
            ensure(even + odd == d.prob(nu), || format!("n={n} nu={nu}"))
        })
    });
    r.record("even_odd_arm_split", format!("n<={n_max}"), split);

    let means = dists.iter().try_for_each(|(n, d)| {
        let m = hz_mean(*n).map_err(|e| e.to_string())?;
        ensure(m == d.mean(), || format!("n={n}: {m} vs {}", d.mean()))
    });
    r.record("mean_from_generating_function", format!("n<={n_max}"), means);

    let order = 8;
    r.record(
        "exponential_formula",
        format!("order={order}"),
        check_exponential_formula(order).map_err(|e| e.to_string()),
    );
}

/// Tally of checks by status, for summaries.
pub fn status_counts(report: &Report) -> BTreeMap<&'static str, usize> {
    let mut out = BTreeMap::new();
    out.insert("fail", report.failures.len());
    out.insert("pass", report.table.rows().len() - report.failures.len());
    out
}
