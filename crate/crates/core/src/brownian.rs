//! Direct moment formula for free convolution with a semicircular family,
//! as a sum over partial pairings.
//!
//! The moment of `nu` convolved with the semicircular family of variance
//! `t` at a word `w` is a sum over the non-crossing partial pairings of
//! the positions of `w`. A pairing contributes only when every pair
//! carries equal letters; it then contributes `t` per pair times a product
//! of `nu`-moments over the blocks of the maximal completion of the
//! pairing on the unpaired positions. Everything about a pairing except
//! the letters of `w` is precomputed once per word length and cached as a
//! [`PairingPlan`].

use crate::distributions::{Distribution, DistributionError};
use crate::partitions::{enumerate_nc_le2, maximal_completion, GroundSet, SetPartition};
use crate::report::{compare_series, IdentityReport};
use crate::series::{words_of_length, Rational, Series, SeriesError, Word};
use num::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

/// A non-crossing partial pairing of `{1..n}` together with everything the
/// moment formula needs to evaluate its term: the pairs, the unpaired
/// positions, and the maximal completion on the unpaired positions (the
/// coarsest partition whose union with the pairs is still non-crossing).
#[derive(Debug, Clone)]
pub struct PairingPlan {
    pairing: SetPartition,
    pairs: Vec<(u32, u32)>,
    singles: Vec<u32>,
    completion: Option<SetPartition>,
}

impl PairingPlan {
    fn new(pairing: &crate::partitions::PartialPairing) -> Self {
        let pairs = pairing.pairs();
        let singles = pairing.single_points();
        let completion = if singles.is_empty() {
            None
        } else if pairs.is_empty() {
            // an empty base separates nothing, so everything merges
            Some(
                SetPartition::with_ground(
                    &GroundSet::new(singles.clone()).expect("singles are distinct"),
                    vec![singles.clone()],
                )
                .expect("one block on its own ground"),
            )
        } else {
            let base = pairing.as_partition().restrict(&pairing.paired_points());
            Some(
                maximal_completion(
                    &base,
                    &GroundSet::new(singles.clone()).expect("singles are distinct"),
                )
                .expect("singles are disjoint from the pairs"),
            )
        };
        PairingPlan {
            pairing: pairing.as_partition().clone(),
            pairs,
            singles,
            completion,
        }
    }

    /// The pairing as a partition with blocks of size at most 2.
    pub fn pairing(&self) -> &SetPartition {
        &self.pairing
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn singles(&self) -> &[u32] {
        &self.singles
    }

    /// The maximal completion on the unpaired positions, labeled by the
    /// original positions; `None` when every position is paired.
    pub fn completion(&self) -> Option<&SetPartition> {
        self.completion.as_ref()
    }

    /// `t^pairs` when every pair of positions carries equal letters in
    /// `w`, otherwise zero.
    pub fn letter_weight(&self, w: &Word, t: &Rational) -> Rational {
        let letters = w.letters();
        let mut weight = Rational::one();
        for &(p, q) in &self.pairs {
            if letters[p as usize - 1] != letters[q as usize - 1] {
                return Rational::zero();
            }
            weight *= t;
        }
        weight
    }

    /// The product of `nu`-moments over the completion blocks.
    pub fn base_moment(&self, nu: &Distribution, w: &Word) -> Result<Rational, SeriesError> {
        let mut product = Rational::one();
        if let Some(completion) = &self.completion {
            for block in completion.blocks() {
                let m = nu.moments().coefficient(&w.subword(block))?;
                if m.is_zero() {
                    return Ok(m);
                }
                product *= m;
            }
        }
        Ok(product)
    }
}

static PLANS: LazyLock<Mutex<HashMap<usize, Arc<Vec<PairingPlan>>>>> =
    LazyLock::new(Default::default);

/// The pairing plans for words of length `n`, cached per `n`. Their count
/// follows the Motzkin numbers 1, 2, 4, 9, 21, 51, ...
pub fn pairing_plans(n: usize) -> Arc<Vec<PairingPlan>> {
    let mut cache = PLANS.lock().expect("plan cache poisoned");
    cache
        .entry(n)
        .or_insert_with(|| {
            Arc::new(
                enumerate_nc_le2(&GroundSet::first_n(n))
                    .iter()
                    .map(PairingPlan::new)
                    .collect(),
            )
        })
        .clone()
}

/// One pairing's contribution to a moment of the convolution, kept with
/// its factors for inspection.
#[derive(Debug, Clone)]
pub struct PairingTerm {
    /// The pairing, as a partition of the word's positions.
    pub pairing: SetPartition,
    /// `t` per pair when all pairs carry equal letters, else 0.
    pub weight: Rational,
    /// The product of `nu`-moments over the completion blocks.
    pub base_moment: Rational,
    /// `weight * base_moment`.
    pub value: Rational,
}

/// The moment of `nu` convolved with the semicircular family of variance
/// `t`, at the word `w`, straight from the pairing sum. Needs the moments
/// of `nu` only on subwords of `w`. The result is a polynomial in `t`.
pub fn brownian_moment(nu: &Distribution, t: &Rational, w: &Word) -> Result<Rational, SeriesError> {
    nu.moments().check_word(w)?;
    let mut sum = Rational::zero();
    for plan in pairing_plans(w.len()).iter() {
        let weight = plan.letter_weight(w, t);
        if weight.is_zero() {
            continue;
        }
        sum += weight * plan.base_moment(nu, w)?;
    }
    Ok(sum)
}

/// Every pairing's contribution to [`brownian_moment`], including the
/// vanishing ones, in enumeration order.
pub fn brownian_moment_breakdown(
    nu: &Distribution,
    t: &Rational,
    w: &Word,
) -> Result<Vec<PairingTerm>, SeriesError> {
    nu.moments().check_word(w)?;
    let mut terms = Vec::new();
    for plan in pairing_plans(w.len()).iter() {
        let weight = plan.letter_weight(w, t);
        let base_moment = plan.base_moment(nu, w)?;
        let value = &weight * &base_moment;
        terms.push(PairingTerm {
            pairing: plan.pairing().clone(),
            weight,
            base_moment,
            value,
        });
    }
    Ok(terms)
}

/// The full convolution of `nu` with the semicircular family of variance
/// `t >= 0`, with every moment computed from the pairing sum.
pub fn brownian_moments(
    nu: &Distribution,
    t: &Rational,
) -> Result<Distribution, DistributionError> {
    if t.is_negative() {
        return Err(DistributionError::NegativeVariance(t.clone()));
    }
    let (k, degree) = (nu.k(), nu.degree());
    let mut entries = Vec::new();
    for n in 1..=degree {
        for w in words_of_length(k, n) {
            let m = brownian_moment(nu, t, &w).expect("word within degree");
            if !m.is_zero() {
                entries.push((w, m));
            }
        }
    }
    Ok(Distribution::from_moments(
        Series::from_coeffs(k, degree, entries).expect("coefficients within degree"),
    ))
}

/// Checks the pairing-sum route against the cumulant route
/// `nu.free_convolve(semicircular(t))` for `t >= 0`.
pub fn brownian_check(
    nu: &Distribution,
    t: &Rational,
) -> Result<IdentityReport, DistributionError> {
    let direct = brownian_moments(nu, t)?;
    let gaussian = Distribution::semicircular(nu.k(), nu.degree(), t)?;
    let convolved = nu.free_convolve(&gaussian);
    Ok(compare_series(direct.moments(), convolved.moments()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{all_words, rat};

    fn w(letters: &[u16]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn plan_counts_follow_motzkin_numbers() {
        for (n, count) in [(1, 1), (2, 2), (3, 4), (4, 9), (5, 21), (6, 51)] {
            assert_eq!(pairing_plans(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn completions_merge_exactly_the_unseparated_positions() {
        // pairs {2,8} and {4,5} leave {1,9} and {3,6,7} as the classes
        let plans = pairing_plans(9);
        let target = SetPartition::new(vec![
            vec![1],
            vec![2, 8],
            vec![3],
            vec![4, 5],
            vec![6],
            vec![7],
            vec![9],
        ])
        .unwrap();
        let plan = plans
            .iter()
            .find(|p| *p.pairing() == target)
            .expect("pairing enumerated");
        assert_eq!(plan.pairs(), [(2, 8), (4, 5)]);
        assert_eq!(plan.singles(), [1, 3, 6, 7, 9]);
        let completion = plan.completion().unwrap();
        let expected = SetPartition::with_ground(
            &GroundSet::new(vec![1, 3, 6, 7, 9]).unwrap(),
            vec![vec![1, 9], vec![3, 6, 7]],
        )
        .unwrap();
        assert_eq!(completion, &expected);
    }

    #[test]
    fn a_single_pairing_term_factors_as_weight_times_moments() {
        let entries = all_words(2, 3)
            .into_iter()
            .enumerate()
            .map(|(i, word)| (word, rat(i as i64 + 2, 7)));
        let nu = Distribution::from_moments(Series::from_coeffs(2, 3, entries).unwrap());
        let t = rat(5, 3);
        let plans = pairing_plans(9);
        let target = SetPartition::new(vec![
            vec![1],
            vec![2, 8],
            vec![3],
            vec![4, 5],
            vec![6],
            vec![7],
            vec![9],
        ])
        .unwrap();
        let plan = plans.iter().find(|p| *p.pairing() == target).unwrap();

        // letters match on both pairs: positions 2, 8 and 4, 5
        let word = w(&[1, 2, 1, 1, 1, 2, 2, 2, 1]);
        let weight = plan.letter_weight(&word, &t);
        assert_eq!(weight, &t * &t);
        let expected = nu.moment(&w(&[1, 1])).unwrap() * nu.moment(&w(&[1, 2, 2])).unwrap();
        assert_eq!(plan.base_moment(&nu, &word).unwrap(), expected);

        // breaking one pair's letters kills the weight
        let broken = w(&[1, 2, 1, 1, 1, 2, 2, 1, 1]);
        assert_eq!(plan.letter_weight(&broken, &t), rat(0, 1));
    }

    #[test]
    fn pairing_sum_matches_the_cumulant_route() {
        // free Poisson: moments are the Catalan numbers
        let entries = (1..=4).map(|n| (Word::new(vec![1; n]), rat(1, 1)));
        let nu = Distribution::from_r(Series::from_coeffs(1, 4, entries).unwrap());
        for t in [rat(1, 1), rat(1, 3), rat(0, 1)] {
            assert!(brownian_check(&nu, &t).unwrap().passed(), "t = {t}");
        }
        assert_eq!(
            brownian_moments(&nu, &rat(-1, 1)),
            Err(DistributionError::NegativeVariance(rat(-1, 1)))
        );
    }

    #[test]
    fn breakdown_terms_sum_to_the_moment() {
        let entries = all_words(2, 4)
            .into_iter()
            .enumerate()
            .map(|(i, word)| (word, rat(i as i64 - 5, 3)));
        let nu = Distribution::from_moments(Series::from_coeffs(2, 4, entries).unwrap());
        let t = rat(2, 1);
        let word = w(&[1, 2, 2, 1]);
        let terms = brownian_moment_breakdown(&nu, &t, &word).unwrap();
        assert_eq!(terms.len(), 9);
        let total = terms
            .iter()
            .fold(Rational::zero(), |acc, term| acc + &term.value);
        assert_eq!(total, brownian_moment(&nu, &t, &word).unwrap());
        // the all-singleton pairing contributes the bare moment of w
        let bare = terms
            .iter()
            .find(|term| term.pairing.blocks().iter().all(|b| b.len() == 1))
            .unwrap();
        assert_eq!(bare.weight, rat(1, 1));
        assert_eq!(bare.value, nu.moment(&word).unwrap());
    }

    #[test]
    fn mismatched_letters_contribute_nothing() {
        // nu = delta_zero makes every term with a singleton vanish, so the
        // moment reduces to complete pairings with matched letters
        let nu = Distribution::delta_zero(2, 4);
        let t = rat(1, 1);
        assert_eq!(
            brownian_moment(&nu, &t, &w(&[1, 2, 2, 1])).unwrap(),
            rat(1, 1)
        );
        assert_eq!(
            brownian_moment(&nu, &t, &w(&[1, 2, 1, 2])).unwrap(),
            rat(0, 1)
        );
        assert_eq!(
            brownian_moment(&nu, &t, &w(&[1, 1, 1, 1])).unwrap(),
            rat(2, 1)
        );
    }
}
