//! Property and exhaustive-grid invariants for the bound kernels.

mod common;

use common::{from_edge_mask, naive_alpha};
use hibound::bounds::{
    binomial, ell_bound, ell_closed_form_k2, f_eval, falling_factorial, rising_factorial,
    turan_bound, turan_spencer_bound, ExactRational,
};
use hibound::hypergraph::{binomial_u128, Hypergraph};
use num_traits::Zero;
use proptest::prelude::*;

/// f via the binomial-coefficient ratio: the independent second route.
fn f_binomial_route(n: u64, k: u64, i: u64) -> ExactRational {
    ExactRational::new(binomial(n, i + 1), binomial(n, i + 1 - k))
}

#[test]
fn f_is_strictly_decreasing() {
    for n in 2u64..=30 {
        for k in 2u64..=6.min(n) {
            let mut prev: Option<ExactRational> = None;
            for i in (k - 1)..=n {
                let v = f_eval(n, k, i).unwrap();
                if let Some(p) = prev {
                    assert!(p > v, "f not decreasing at n={n} k={k} i={i}");
                }
                prev = Some(v);
            }
            assert_eq!(prev.unwrap(), ExactRational::zero(), "f(n) must be 0");
        }
    }
}

#[test]
fn f_two_forms_agree() {
    for n in 2u64..=30 {
        for k in 2u64..=6.min(n) {
            for i in (k - 1)..=n {
                assert_eq!(f_eval(n, k, i).unwrap(), f_binomial_route(n, k, i));
            }
        }
    }
}

#[test]
fn ell_sandwich_characterization() {
    for k in 2u64..=5 {
        for n in k..=14 {
            let total = binomial_u128(n, k).unwrap() as u64;
            for m in 0..=total {
                let r = ell_bound(n, m, k).unwrap();
                assert!((k - 1..=n).contains(&r));
                assert!(
                    f_eval(n, k, r).unwrap() <= ExactRational::from(num_bigint::BigInt::from(m))
                );
                if r > k - 1 {
                    assert!(
                        f_eval(n, k, r - 1).unwrap()
                            > ExactRational::from(num_bigint::BigInt::from(m))
                    );
                }
            }
        }
    }
}

#[test]
fn ell_extremes_characterize_complete_and_empty() {
    for k in 2u64..=5 {
        for n in k..=14 {
            let total = binomial_u128(n, k).unwrap() as u64;
            for m in 0..=total {
                let r = ell_bound(n, m, k).unwrap();
                assert_eq!(r == k - 1, m == total, "n={n} k={k} m={m}");
                assert_eq!(r == n, m == 0, "n={n} k={k} m={m}");
            }
        }
    }
}

#[test]
fn ell_monotone_in_edge_count() {
    for k in 2u64..=5 {
        for n in k..=14 {
            let total = binomial_u128(n, k).unwrap() as u64;
            let mut prev = None;
            for m in 0..=total {
                let r = ell_bound(n, m, k).unwrap();
                if let Some(p) = prev {
                    assert!(r <= p);
                }
                prev = Some(r);
            }
        }
    }
}

#[test]
fn ell_never_above_turan_on_graphs() {
    for n in 2u64..=30 {
        for m in 0..=(n * (n - 1) / 2) {
            assert!(
                ell_bound(n, m, 2).unwrap() <= turan_bound(n, m),
                "n={n} m={m}"
            );
        }
    }
}

#[test]
fn turan_spencer_never_above_turan_on_graphs() {
    for n in 2u64..=30 {
        for m in n.div_ceil(2)..=(n * (n - 1) / 2) {
            assert!(
                turan_spencer_bound(n, m, 2).unwrap() <= turan_bound(n, m),
                "n={n} m={m}"
            );
        }
    }
}

#[test]
fn closed_form_agrees_with_scan() {
    for n in 2u64..=100 {
        for m in 0..=(n * (n - 1) / 2) {
            assert_eq!(
                ell_closed_form_k2(n, m).unwrap(),
                ell_bound(n, m, 2).unwrap(),
                "n={n} m={m}"
            );
        }
    }
}

#[test]
fn binomial_pigeonhole_holds_at_alpha() {
    // C(n, a+1) <= m * C(n, a-k+1) with a the exact independence number,
    // over every 3-uniform edge set on 5 vertices.
    for mask in 0u64..1 << 10 {
        let h = from_edge_mask(5, 3, mask);
        let a = naive_alpha(&h) as u64;
        assert!(binomial(5, a + 1) <= binomial(5, a + 1 - 3) * h.m());
    }
}

#[test]
fn degree_handshake_exhaustive_and_random() {
    for mask in 0u64..1 << 10 {
        let h = from_edge_mask(5, 3, mask);
        assert_eq!(h.degree_sequence().sum(), 3 * h.m());
    }
    for (n, k) in [(8usize, 3u64), (10, 2), (9, 4)] {
        let total = binomial_u128(n as u64, k).unwrap() as u64;
        for seed in 0..1000u64 {
            let m = seed * 37 % (total + 1);
            let h = Hypergraph::random_uniform(n, k as usize, m, seed).unwrap();
            h.validate().unwrap();
            assert_eq!(h.degree_sequence().sum(), k * h.m());
        }
    }
}

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..=12, 2usize..=5, any::<u64>()).prop_flat_map(|(n, k, seed)| {
        let total = binomial_u128(n as u64, k as u64).unwrap() as u64;
        (0..=total).prop_map(move |m| Hypergraph::random_uniform(n, k, m, seed).unwrap())
    })
}

proptest! {
    #[test]
    fn rising_equals_shifted_falling(x in 0i64..60, count in 0u32..8) {
        prop_assert_eq!(
            rising_factorial(x, count),
            falling_factorial(x + count as i64 - 1, count)
        );
    }

    #[test]
    fn ell_stays_in_domain(n in 1u64..40, k in 2u64..6, m_frac in 0.0f64..=1.0) {
        let total = binomial_u128(n, k).unwrap() as u64;
        let m = (m_frac * total as f64).round() as u64;
        let r = ell_bound(n, m, k).unwrap();
        prop_assert!(r <= n);
        if n >= k {
            prop_assert!(r >= k - 1);
        } else {
            prop_assert_eq!(r, n);
        }
    }

    #[test]
    fn generated_instances_validate(h in arb_hypergraph()) {
        prop_assert!(h.validate().is_ok());
        prop_assert_eq!(h.degree_sequence().sum(), h.k() as u64 * h.m());
    }

    #[test]
    fn parse_serialize_round_trip(h in arb_hypergraph()) {
        let text = hibound::io::serialize_hypergraph(&h);
        let back = hibound::io::parse_hypergraph(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(hibound::io::serialize_hypergraph(&back), text);
    }

    #[test]
    fn report_invariants(h in arb_hypergraph()) {
        use hibound::bounds::{compute_report, BoundSelection};
        use hibound::exact::SolverConfig;
        let with_alpha = h.n() <= 10;
        let report = compute_report(&h, &BoundSelection::default(), with_alpha, &SolverConfig::default());
        for (name, value) in report.present_bounds() {
            prop_assert!(value <= report.n, "{name} = {value} above n = {}", report.n);
            if let Some(alpha) = report.alpha {
                prop_assert!(report.alpha_exhausted);
                prop_assert!(value <= alpha, "{name} = {value} above alpha = {alpha}");
            }
        }
    }
}
