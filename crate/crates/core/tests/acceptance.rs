//! Acceptance suite. Each test prints one PASS line per criterion; the
//! whole file is expected to stay green.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines and measured margins.

use aigc_core::rng::derive_rng;
use aigc_core::sim::images::{base_image, noised_image};
use aigc_core::similarity::{hamming, is_duplicate, phash, SimilarityThresholds};

const CORPUS_SEED: u64 = 1;
const CORPUS_N: u64 = 100;

/// Criterion 5 — challenge oracle separation over a 100-image seeded corpus:
/// exact copies pass all three metrics, sigma=8 noised copies read as
/// duplicates >= 95% of the time, independent pairs read as distinct >= 95%
/// of the time, all at the default thresholds.
#[test]
fn criterion_05_challenge_oracle_separation() {
    let t = SimilarityThresholds::default();
    let mut exact_all3 = 0;
    let mut noised_true = 0;
    let mut indep_false = 0;
    let mut phash_sigma5_close = 0;

    for i in 0..CORPUS_N {
        let base = base_image(&mut derive_rng(CORPUS_SEED, "corpus/base", i));
        let noised8 = noised_image(&mut derive_rng(CORPUS_SEED, "corpus/noise8", i), &base, 8.0);
        let noised5 = noised_image(&mut derive_rng(CORPUS_SEED, "corpus/noise5", i), &base, 5.0);
        let indep = base_image(&mut derive_rng(CORPUS_SEED, "corpus/indep", i));

        let (verdict, tuple, passed) = is_duplicate(&base, &base.clone(), &t);
        assert!(verdict && tuple.histogram == 1.0);
        if passed == 3 {
            exact_all3 += 1;
        }
        if is_duplicate(&base, &noised8, &t).0 {
            noised_true += 1;
        }
        if !is_duplicate(&base, &indep, &t).0 {
            indep_false += 1;
        }
        if hamming(phash(&base), phash(&noised5)) <= 10 {
            phash_sigma5_close += 1;
        }
    }

    println!(
        "criterion 5: exact {exact_all3}/100 (need 100), noised(s=8) {noised_true}/100 (need >=95), \
         independent {indep_false}/100 (need >=95), phash(s=5) close {phash_sigma5_close}/100 (need >=95)"
    );
    assert_eq!(exact_all3, 100);
    assert!(noised_true >= 95, "noised duplicates detected: {noised_true}/100");
    assert!(indep_false >= 95, "independent pairs separated: {indep_false}/100");
    assert!(phash_sigma5_close >= 95, "phash sigma=5 distance<=10: {phash_sigma5_close}/100");
    println!("criterion 5 PASS");
}
