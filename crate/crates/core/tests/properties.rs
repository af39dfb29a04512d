use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use zetaforge::corpus::sample_series;
use zetaforge::numerics::{compensated_sum, DD_EPS};
use zetaforge::specfun::constants::{euler_gamma, gamma1, zeta2, zeta3};
use zetaforge::{Dd, ExtendedReal};

#[test]
fn compensated_sum_is_permutation_robust() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut terms: Vec<ExtendedReal> = (1..=100_000)
        .map(|k| {
            let k = k as f64;
            let magnitude = 10f64.powi(rng.gen_range(-12..6));
            ExtendedReal::exact(Dd::from_f64(magnitude * (k.sin() + 0.01)))
        })
        .collect();
    let reference = compensated_sum(&terms).unwrap();
    let ulp = reference.value.hi.abs() * DD_EPS;
    for _ in 0..5 {
        terms.shuffle(&mut rng);
        let s = compensated_sum(&terms).unwrap();
        let spread = (s.value - reference.value).abs().to_f64();
        assert!(spread < 4.0 * ulp, "spread {spread:e} vs ulp {ulp:e}");
    }
}

/// Closed forms of the sample series, by record id.
fn closed_form(id: &str) -> Option<Dd> {
    let g = euler_gamma();
    Some(match id {
        "E1.4" => Dd::from_f64(1.5) - g - zeta2().mul_f64(0.5),
        "E1.5" => Dd::from_f64(3.0) - zeta2() - zeta3(),
        "E1.8" => Dd::ONE - g,
        "E1.10" => (zeta2() - g.sqr()).mul_f64(0.5) - gamma1(),
        "E1.12" => zeta3() - g * zeta2(),
        _ => return None,
    })
}

#[test]
fn error_bounds_hold_at_random_truncations() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut checked = 0;
    let mut honest = 0;
    for sample in sample_series() {
        let Some(exact) = closed_form(sample.id) else {
            continue;
        };
        let model = sample
            .spec
            .tail_model
            .clone()
            .expect("corpus series carry a tail model");
        for _ in 0..40 {
            let n: u64 = rng.gen_range(model.valid_from.max(sample.spec.n0)..4000);
            let mut h = Dd::ZERO;
            let mut partial = Dd::ZERO;
            let mut abs = 0.0;
            for k in 1..=n {
                h += Dd::from_f64(k as f64).recip();
                if k >= sample.spec.n0 {
                    let t = (sample.spec.term)(k, h);
                    partial += t;
                    abs += t.hi.abs();
                }
            }
            let total = ExtendedReal::new(partial, abs * 8.0 * DD_EPS) + model.evaluate(n).unwrap();
            checked += 1;
            if (total.value - exact).abs().to_f64() <= total.err + exact.hi.abs() * 2.0 * DD_EPS {
                honest += 1;
            }
        }
    }
    assert_eq!(checked, 200);
    assert!(honest as f64 >= 0.99 * checked as f64, "{honest}/{checked}");
}

proptest! {
    #[test]
    fn extended_reals_round_trip_through_json(hi in -1e300f64..1e300, frac in -0.5f64..0.5, err in 0f64..1e-10) {
        let lo = hi * frac * DD_EPS;
        let x = ExtendedReal::new(Dd::from_f64(hi) + Dd::from_f64(lo), err);
        let back: ExtendedReal = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn double_double_sum_is_exact(a in -1e10f64..1e10, b in -1e10f64..1e10) {
        let s = Dd::from_f64(a) + Dd::from_f64(b);
        prop_assert_eq!((s - Dd::from_f64(b)).to_f64(), a);
    }
}
