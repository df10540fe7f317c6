use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use pmod_core::census::{closed_form_row, count_conjugacy_set, enumerated_rows, EnumOptions};
use pmod_core::classify::{classify, Axis, ClassTag};
use pmod_core::gamma::{gamma_census, gamma_classify, GammaElement};
use pmod_core::word::{enumerate_sphere, Letter, Word};

/// Reducible words of length `n` by brute force over `u γ^k u⁻¹`.
fn reducible_oracle(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for axis in Axis::ALL {
        let gamma = axis.word();
        for len in 0..=n {
            for u in enumerate_sphere(len, None) {
                for k in 1..=n as i64 {
                    for k in [k, -k] {
                        let x = gamma.pow(k).conjugate_by(&u);
                        if x.len() == n {
                            out.insert(x.to_string());
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn reducible_sets_match_bruteforce_through_radius_10() {
    for n in 1..=10 {
        let classified: BTreeSet<String> = enumerate_sphere(n, None)
            .filter(|w| classify(w).tag() == ClassTag::Reducible)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(classified, reducible_oracle(n), "n={n}");
    }
}

#[test]
fn axis_symmetry_and_odd_vanishing() {
    let opts = EnumOptions::default();
    for n in 1..=13 {
        let a = count_conjugacy_set(Axis::A, n, &opts).unwrap();
        assert_eq!(a, count_conjugacy_set(Axis::B, n, &opts).unwrap());
        if n % 2 == 1 {
            assert_eq!(count_conjugacy_set(Axis::AB, n, &opts).unwrap(), 0);
        }
    }
}

#[test]
fn enumerated_rows_equal_closed_forms() {
    let rows = enumerated_rows(13, &EnumOptions::default()).unwrap();
    for row in rows {
        assert_eq!(row, closed_form_row(row.n));
        assert_eq!(&row.h_n, &(&row.r_n + &row.p_n + 1u32));
    }
}

#[test]
fn gamma_periodic_spheres_and_ratio_trend() {
    let rows = gamma_census(13, &EnumOptions::default()).unwrap();
    let periodic: Vec<BigUint> = rows.iter().map(|r| r.periodic.clone()).collect();
    let expected: Vec<BigUint> = (0..=13u32)
        .map(|n| BigUint::from(match n {
            1 => 2u32,
            2 => 1,
            _ => 0,
        }))
        .collect();
    assert_eq!(periodic, expected);
    let gaps: Vec<BigRational> = rows.iter().map(|r| BigRational::one() - &r.ratio).collect();
    for n in 5..gaps.len() {
        assert!(gaps[n] <= gaps[n - 1], "gap grew at n={n}");
    }
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..24).prop_map(Word::reduce)
}

proptest! {
    #[test]
    fn gamma_pseudo_anosov_iff_word_is(w in word(), ei: bool, ej: bool) {
        let g = GammaElement::new(w.clone(), ei, ej);
        let gt = gamma_classify(&g).tag();
        prop_assert_eq!(gt == ClassTag::PseudoAnosov, classify(&w).tag() == ClassTag::PseudoAnosov);
        prop_assert_eq!(gt == ClassTag::Periodic, w.is_empty() && (ei || ej));
        // squares drop the torsion part
        let sq = g.multiply(&g);
        prop_assert!(!sq.eps_i && !sq.eps_j);
        prop_assert_eq!(sq.word, w.pow(2));
    }
}
