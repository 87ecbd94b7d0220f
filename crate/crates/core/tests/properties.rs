use proptest::prelude::*;

use kummer_verify::klein::points::count_points_quartic;
use kummer_verify::modularity::{count_points, euler_factor_h3, frobenius_trace, EllipticKind, SplitInfo};
use kummer_verify::quotient::{verify_invariant_generation, z7_invariant_generators, Grading};
use kummer_verify::ring::{is_prime, primes_up_to};

fn prime_below(n: u64) -> impl Strategy<Value = u64> {
    let primes = primes_up_to(n);
    (0..primes.len()).prop_map(move |i| primes[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hasse_and_supersingular_inert(p in prime_below(500)) {
        for kind in EllipticKind::ALL {
            if let Ok(fd) = frobenius_trace(kind, p) {
                prop_assert!(fd.a_p * fd.a_p <= 4 * p as i64);
                if fd.split == SplitInfo::Inert {
                    prop_assert_eq!(fd.a_p, 0);
                }
            }
        }
    }

    #[test]
    fn generation_monotone_in_bound(d in 0u32..=14) {
        let z7 = z7_invariant_generators();
        let g = Grading { modulus: 7, weights: vec![1, 2, 3] };
        prop_assert!(verify_invariant_generation(&g, &z7.sigma_vectors(), d).ok());
    }
}

#[test]
fn cubed_factor_matches_extension_count() {
    // beyond the required 2, 3, 5: every good prime up to 13
    for p in primes_up_to(13) {
        for kind in EllipticKind::ALL {
            let Ok(fd) = frobenius_trace(kind, p) else { continue };
            let n3 = count_points(kind, p.pow(3)).unwrap() as i64;
            let b = euler_factor_h3(&fd).b_p;
            assert_eq!(b, (p.pow(3) as i64 + 1 - n3).into(), "{kind:?} p = {p}");
        }
    }
}

#[test]
fn quartic_count_independent_of_threads() {
    let counts = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| primes_up_to(150).into_iter().map(|p| count_points_quartic(p).unwrap()).collect::<Vec<_>>())
    };
    assert_eq!(counts(1), counts(5));
}

#[test]
fn composite_moduli_rejected() {
    assert!(count_points_quartic(91).is_err());
    assert!(count_points(EllipticKind::OmegaCubic, 15).is_err());
    assert!(!is_prime(1));
}
