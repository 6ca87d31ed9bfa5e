//! Cross-validation of the two determinant paths and the Bernoulli
//! pipeline against its independent number-theoretic oracles.

use bernoulli_det_core::bernoulli::asymptotic_ratio;
use bernoulli_det_core::{
    bernoulli_explicit, precision_study, vsc_denominator, BernoulliTable,
    DeterminantSequence, ExactRational, HessenbergMatrix,
};

#[test]
fn recurrence_matches_fraction_free_determinants() {
    let seq = DeterminantSequence::new(12);
    for k in 1..=12 {
        let direct = HessenbergMatrix::build(k).det_fraction_free();
        assert_eq!(seq.value(k), &direct, "disagreement at k = {k}");
    }
}

#[test]
fn convolution_residuals_vanish_up_to_200() {
    let seq = DeterminantSequence::new(200);
    for k in 1..=200 {
        assert_eq!(
            seq.convolution_residual(k),
            ExactRational::zero(),
            "nonzero residual at k = {k}"
        );
    }
}

#[test]
fn sequence_is_positive_and_decreasing() {
    let seq = DeterminantSequence::new(200);
    for k in 1..=200 {
        assert!(seq.value(k).is_positive(), "D_{k} not positive");
    }
    for k in 1..200 {
        assert!(
            seq.value(k + 1) < seq.value(k),
            "D_{} not smaller than D_{k}",
            k + 1
        );
    }
}

#[test]
fn explicit_equals_classical_recursion_up_to_100() {
    let seq = DeterminantSequence::new(100);
    let mut table = BernoulliTable::new();
    table.ensure(200);
    for p in 1..=100u64 {
        let explicit = bernoulli_explicit(p, &seq).unwrap();
        assert_eq!(
            &explicit.value,
            table.get(2 * p).unwrap(),
            "mismatch at p = {p}"
        );
    }
}

#[test]
fn denominators_and_signs_follow_the_classical_laws() {
    let seq = DeterminantSequence::new(100);
    let mut table = BernoulliTable::new();
    table.ensure(200);
    for p in 1..=100u64 {
        let value = &bernoulli_explicit(p, &seq).unwrap().value;
        assert_eq!(
            value.denominator(),
            &vsc_denominator(p),
            "denominator law fails at p = {p}"
        );
        assert_eq!(
            value.is_positive(),
            p % 2 == 1,
            "sign alternation fails at p = {p}"
        );
    }
}

#[test]
fn denominators_are_squarefree() {
    let seq = DeterminantSequence::new(40);
    for p in 1..=40u64 {
        let value = bernoulli_explicit(p, &seq).unwrap().value;
        let den = value.denominator().clone();
        let mut n = den.clone();
        let mut d = num_bigint::BigInt::from(2);
        while &d * &d <= n {
            let mut count = 0;
            while (&n % &d) == num_bigint::BigInt::from(0) {
                n /= &d;
                count += 1;
            }
            assert!(count <= 1, "denominator of B_{} not squarefree", 2 * p);
            d += 1;
        }
    }
}

#[test]
fn asymptotic_ratio_brackets() {
    let seq = DeterminantSequence::new(40);
    let one = ExactRational::one();
    let upper = ExactRational::ratio(165, 100);
    let band = ExactRational::ratio(1, 1000);
    for p in 1..=40u64 {
        let value = bernoulli_explicit(p, &seq).unwrap().value;
        let ratio = asymptotic_ratio(p, &value);
        assert!(
            ratio > one && ratio <= upper,
            "ratio {ratio} out of (1, 1.65] at p = {p}"
        );
        if p >= 25 {
            assert!(
                (&ratio - &one).abs() < band,
                "ratio {ratio} too far from 1 at p = {p}"
            );
        }
    }
}

#[test]
fn precision_loss_grows_from_small_p() {
    let seq = DeterminantSequence::new(20);
    let baseline = precision_study(1, 53, &seq).unwrap().lost_bits;
    for p in [5u64, 10, 15, 20] {
        let report = precision_study(p, 53, &seq).unwrap();
        assert!(
            report.lost_bits >= baseline,
            "lost_bits at p = {p} below the p = 1 baseline"
        );
    }
}

#[test]
fn precision_headroom_restores_accuracy() {
    let seq = DeterminantSequence::new(20);
    let narrow = precision_study(20, 53, &seq).unwrap();
    let wide = precision_study(20, 512, &seq).unwrap();
    let narrow_rel = narrow.relative_error.expect("not total loss");
    let wide_rel = wide.relative_error.expect("not total loss");
    assert!(wide_rel < narrow_rel);
    // 512-bit headroom leaves far more than 300 correct bits
    assert!(wide_rel < ExactRational::ratio(1, 2).pow(300));
}
