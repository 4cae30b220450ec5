//! Transforms between moment and cumulant series, built from sums over
//! non-crossing partitions.
//!
//! The central operation is [`reta`], the map taking the free cumulant
//! series (R-transform) of a distribution to its Boolean cumulant series
//! (eta-series). Its coefficient formula is a sum of generalized
//! coefficients over the non-crossing partitions that tie the first and
//! last points into one block; iterating it only ever rescales its
//! argument, which is the engine behind the Boolean-to-free semigroup in
//! [`crate::distributions`].
//!
//! Partition lists are enumerated once per ground-set size and shared
//! behind a synchronized cache, since every coefficient of every transform
//! at length `n` sums over the same lists.

use crate::partitions::{enumerate_interval, enumerate_nc, GroundSet, SetPartition};
use crate::report::{compare_series, IdentityReport};
use crate::series::{words_of_length, Coeff, Rational, Series, SeriesError, TruncatedSeries, Word};
use num::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

/// Errors from transform-level identity checks.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    /// The rescaling identity for iterated `reta` degenerates at `s = -1`.
    #[error("the reta rescaling identity is undefined at s = -1")]
    ScaleAtMinusOne,
}

type PartitionCache = LazyLock<Mutex<HashMap<usize, Arc<Vec<SetPartition>>>>>;

static NC_ALL: PartitionCache = LazyLock::new(Default::default);
static NC_ANCHORED: PartitionCache = LazyLock::new(Default::default);
static INTERVALS: PartitionCache = LazyLock::new(Default::default);
type PairCache = LazyLock<Mutex<HashMap<usize, Arc<Vec<(SetPartition, SetPartition)>>>>>;

static NC_KREWERAS: PairCache = LazyLock::new(Default::default);

/// All non-crossing partitions of `{1..n}`, cached per `n`.
pub fn nc_partitions(n: usize) -> Arc<Vec<SetPartition>> {
    let mut cache = NC_ALL.lock().expect("partition cache poisoned");
    cache
        .entry(n)
        .or_insert_with(|| Arc::new(enumerate_nc(&GroundSet::first_n(n))))
        .clone()
}

/// The non-crossing partitions of `{1..n}` that put `1` and `n` into one
/// block; exactly those that strongly refine the one-block partition.
pub fn nc_anchored(n: usize) -> Arc<Vec<SetPartition>> {
    let mut cache = NC_ANCHORED.lock().expect("partition cache poisoned");
    cache
        .entry(n)
        .or_insert_with(|| {
            Arc::new(
                nc_partitions(n)
                    .iter()
                    .filter(|p| p.same_block(1, n as u32))
                    .cloned()
                    .collect(),
            )
        })
        .clone()
}

/// All interval partitions of `{1..n}`, cached per `n`.
pub fn interval_partitions(n: usize) -> Arc<Vec<SetPartition>> {
    let mut cache = INTERVALS.lock().expect("partition cache poisoned");
    cache
        .entry(n)
        .or_insert_with(|| Arc::new(enumerate_interval(&GroundSet::first_n(n))))
        .clone()
}

/// Non-crossing partitions of `{1..n}` paired with their Kreweras
/// complements, cached per `n`.
pub fn nc_with_kreweras(n: usize) -> Arc<Vec<(SetPartition, SetPartition)>> {
    let mut cache = NC_KREWERAS.lock().expect("partition cache poisoned");
    cache
        .entry(n)
        .or_insert_with(|| {
            Arc::new(
                nc_partitions(n)
                    .iter()
                    .map(|p| (p.clone(), p.kreweras_complement()))
                    .collect(),
            )
        })
        .clone()
}

/// The generalized coefficient of `f` at `(w, p)`: the product over the
/// blocks `B` of `p` of the coefficient of the subword `w|B`.
///
/// `p` must partition the positions `{1..|w|}` of `w`.
pub fn generalized_coefficient<C: Coeff>(
    f: &TruncatedSeries<C>,
    w: &Word,
    p: &SetPartition,
) -> Result<C, SeriesError> {
    let n = w.len();
    assert!(
        p.n() == n && p.ground().first() == Some(&1) && p.ground().last() == Some(&(n as u32)),
        "partition of {:?} does not index the positions of a word of length {n}",
        p.ground()
    );
    let mut acc = C::one();
    for b in p.blocks() {
        let c = f.coefficient(&w.subword(b))?;
        if c.is_zero() {
            return Ok(C::zero());
        }
        acc = acc * c;
    }
    Ok(acc)
}

/// The transform mapping the free cumulant series of a distribution to its
/// Boolean cumulant series.
///
/// Coefficient formula: `Cf_w(reta f)` is the sum of the generalized
/// coefficients `Cf_{w;p}(f)` over the non-crossing partitions `p` of the
/// positions of `w` that tie the first and last position into one block.
/// Coefficients of length 1 and 2 are left unchanged.
pub fn reta<C: Coeff>(f: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    let (k, degree) = (f.k(), f.degree());
    let mut entries = Vec::new();
    for n in 1..=degree {
        let anchored = nc_anchored(n);
        for w in words_of_length(k, n) {
            let mut sum = C::zero();
            for p in anchored.iter() {
                sum = sum + generalized_coefficient(f, &w, p).expect("word within degree");
            }
            if !sum.is_zero() {
                entries.push((w, sum));
            }
        }
    }
    TruncatedSeries::from_coeffs(k, degree, entries).expect("coefficients within degree")
}

/// The generalized coefficient of `reta(f)` at `(w, rho)`, computed
/// directly as the sum of `Cf_{w;p}(f)` over the partitions `p` that
/// strongly refine `rho`. Used to cross-check that generalized
/// coefficients of `reta(f)` factor the same way as ordinary ones.
pub fn reta_generalized_coefficient<C: Coeff>(
    f: &TruncatedSeries<C>,
    w: &Word,
    rho: &SetPartition,
) -> Result<C, SeriesError> {
    let mut sum = C::zero();
    for p in nc_partitions(w.len()).iter() {
        if p.strongly_refines(rho) {
            sum = sum + generalized_coefficient(f, w, p)?;
        }
    }
    Ok(sum)
}

/// The inverse of [`reta`], computed as `-reta(-g)`.
pub fn reta_inverse<C: Coeff>(g: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    reta(&g.neg()).neg()
}

/// The inverse of [`reta`] computed from its alternating-sign partition
/// sum: `Cf_w(f)` is the sum over anchored non-crossing `p` of
/// `(-1)^(1+|p|) Cf_{w;p}(g)`. Exists as an independent route for
/// cross-checking [`reta_inverse`].
pub fn reta_inverse_alternating<C: Coeff>(g: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    let (k, degree) = (g.k(), g.degree());
    let mut entries = Vec::new();
    for n in 1..=degree {
        let anchored = nc_anchored(n);
        for w in words_of_length(k, n) {
            let mut sum = C::zero();
            for p in anchored.iter() {
                let term = generalized_coefficient(g, &w, p).expect("word within degree");
                if p.block_count() % 2 == 1 {
                    sum = sum + term;
                } else {
                    sum = sum - term;
                }
            }
            if !sum.is_zero() {
                entries.push((w, sum));
            }
        }
    }
    TruncatedSeries::from_coeffs(k, degree, entries).expect("coefficients within degree")
}

/// Checks the rescaling law for iterated `reta`:
/// `reta(s * reta(f)) = (s/(1+s)) * reta((1+s) * f)` for `s != -1`.
pub fn reta_scaling_identity(f: &Series, s: &Rational) -> Result<IdentityReport, TransformError> {
    let one_plus_s = Rational::one() + s;
    if one_plus_s.is_zero() {
        return Err(TransformError::ScaleAtMinusOne);
    }
    let lhs = reta(&reta(f).scale(s));
    let rhs = reta(&f.scale(&one_plus_s)).scale(&(s / &one_plus_s));
    Ok(compare_series(&lhs, &rhs))
}

/// Checks the negated iteration law `reta(-reta(f)) = -f`, the `s = -1`
/// limit that survives where the rescaling law degenerates.
pub fn reta_negation_identity(f: &Series) -> IdentityReport {
    let lhs = reta(&reta(f).neg());
    compare_series(&lhs, &f.neg())
}

/// Moment series from the free cumulant series: the coefficient of `w` is
/// the sum of generalized coefficients of the cumulant series over all
/// non-crossing partitions of the positions of `w`.
pub fn moments_from_free_cumulants<C: Coeff>(r: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    partition_sum(r, nc_partitions)
}

/// Moment series from the Boolean cumulant series: same shape of sum as
/// [`moments_from_free_cumulants`], but over interval partitions only.
/// Must agree with the series-arithmetic route
/// [`TruncatedSeries::boolean_to_moments`].
pub fn moments_from_boolean_cumulants<C: Coeff>(b: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    partition_sum(b, interval_partitions)
}

fn partition_sum<C: Coeff>(
    f: &TruncatedSeries<C>,
    lists: impl Fn(usize) -> Arc<Vec<SetPartition>>,
) -> TruncatedSeries<C> {
    let (k, degree) = (f.k(), f.degree());
    let mut entries = Vec::new();
    for n in 1..=degree {
        let partitions = lists(n);
        for w in words_of_length(k, n) {
            let mut sum = C::zero();
            for p in partitions.iter() {
                sum = sum + generalized_coefficient(f, &w, p).expect("word within degree");
            }
            if !sum.is_zero() {
                entries.push((w, sum));
            }
        }
    }
    TruncatedSeries::from_coeffs(k, degree, entries).expect("coefficients within degree")
}

/// Free cumulant series from the moment series, by the subtraction
/// recursion: `Cf_w(R) = Cf_w(M) - sum of Cf_{w;p}(R)` over non-crossing
/// `p` with more than one block. Every such `p` has only blocks shorter
/// than `w`, so the recursion closes degree by degree.
pub fn free_cumulants_from_moments<C: Coeff>(m: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    cumulants_by_subtraction(m, nc_partitions)
}

/// Boolean cumulant series from the moment series, by the same subtraction
/// recursion restricted to interval partitions. Inverse of
/// [`moments_from_boolean_cumulants`].
pub fn boolean_cumulants_from_moments<C: Coeff>(m: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    cumulants_by_subtraction(m, interval_partitions)
}

fn cumulants_by_subtraction<C: Coeff>(
    m: &TruncatedSeries<C>,
    lists: impl Fn(usize) -> Arc<Vec<SetPartition>>,
) -> TruncatedSeries<C> {
    let (k, degree) = (m.k(), m.degree());
    let mut entries: Vec<(Word, C)> = Vec::new();
    let mut partial = TruncatedSeries::zero(k, degree);
    for n in 1..=degree {
        let partitions = lists(n);
        for w in words_of_length(k, n) {
            let mut c = m.coefficient(&w).expect("word within degree");
            for p in partitions.iter().filter(|p| p.block_count() > 1) {
                c = c - generalized_coefficient(&partial, &w, p).expect("blocks within degree");
            }
            if !c.is_zero() {
                entries.push((w, c));
            }
        }
        partial = TruncatedSeries::from_coeffs(k, degree, entries.iter().cloned())
            .expect("coefficients within degree");
    }
    partial
}

/// Checks the functional equation tying the free cumulant series to the
/// moment series: substituting `z_i (1 + M)` into `R` returns `M` at every
/// retained degree.
pub fn functional_equation_identity(m: &Series) -> IdentityReport {
    let (k, degree) = (m.k(), m.degree());
    let r = free_cumulants_from_moments(m);
    let args: Vec<Series> = (1..=k as u16)
        .map(|i| {
            let z = Series::monomial(k, degree, Word::single(i), Rational::one())
                .expect("letter within alphabet");
            z.add(&z.mul(m))
        })
        .collect();
    compare_series(&r.substitute(&args), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn w(letters: &[u16]) -> Word {
        Word::new(letters.to_vec())
    }

    /// A dense degree-3 series over two letters with distinct small
    /// coefficients, so cancellations cannot hide index mistakes.
    fn dense_f() -> Series {
        let mut entries = Vec::new();
        for (idx, word) in crate::series::all_words(2, 3).into_iter().enumerate() {
            entries.push((word, rat(idx as i64 + 1, 3)));
        }
        Series::from_coeffs(2, 3, entries).unwrap()
    }

    #[test]
    fn generalized_coefficient_multiplies_block_subwords() {
        let f = Series::from_coeffs(
            2,
            4,
            [
                (w(&[1, 2]), rat(3, 1)),
                (w(&[2]), rat(5, 1)),
                (w(&[1, 2, 2, 1]), rat(7, 1)),
            ],
        )
        .unwrap();
        let word = w(&[1, 2, 2, 1]);
        let one_block = SetPartition::new(vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(
            generalized_coefficient(&f, &word, &one_block).unwrap(),
            rat(7, 1)
        );
        // blocks {1,4} and {2,3}: Cf_(1,1) * Cf_(2,2) = 0 * 0
        let nested = SetPartition::new(vec![vec![1, 4], vec![2, 3]]).unwrap();
        assert_eq!(
            generalized_coefficient(&f, &word, &nested).unwrap(),
            rat(0, 1)
        );
        // blocks {1,2} and {3,4}: Cf_(1,2) * Cf_(2,1) = 3 * 0
        let split = SetPartition::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(
            generalized_coefficient(&f, &word, &split).unwrap(),
            rat(0, 1)
        );
        // blocks {1,3},{2},{4}: Cf_(1,2) * Cf_(2) * Cf_(1) = 3 * 5 * 0
        let crossingless = SetPartition::new(vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        assert_eq!(
            generalized_coefficient(&f, &word, &crossingless).unwrap(),
            rat(0, 1)
        );
        let with_singles = SetPartition::new(vec![vec![1, 4], vec![2], vec![3]]).unwrap();
        // Cf_(1,1) = 0
        assert_eq!(
            generalized_coefficient(&f, &word, &with_singles).unwrap(),
            rat(0, 1)
        );
        // blocks {1},{2},{3,4}: Cf_(1) * Cf_(2) * Cf_(2,1) = 0
        let pair_and_singles = SetPartition::new(vec![vec![1], vec![2], vec![3, 4]]).unwrap();
        assert_eq!(
            generalized_coefficient(&f, &word, &pair_and_singles).unwrap(),
            rat(0, 1)
        );
    }

    #[test]
    fn reta_fixes_orders_one_and_two_and_shifts_order_three() {
        let f = dense_f();
        let g = reta(&f);
        for word in crate::series::all_words(2, 2) {
            assert_eq!(
                g.coefficient(&word).unwrap(),
                f.coefficient(&word).unwrap(),
                "low-order coefficient moved at {word}"
            );
        }
        // at order three the only extra anchored partition is {1,3}{2}
        for word in words_of_length(2, 3) {
            let letters = word.letters().to_vec();
            let expected = f.coefficient(&word).unwrap()
                + f.coefficient(&w(&[letters[0], letters[2]])).unwrap()
                    * f.coefficient(&w(&[letters[1]])).unwrap();
            assert_eq!(g.coefficient(&word).unwrap(), expected, "order 3 at {word}");
        }
    }

    #[test]
    fn reta_of_a_linear_series_is_itself() {
        let f = Series::from_coeffs(3, 4, [(w(&[2]), rat(5, 7))]).unwrap();
        assert_eq!(reta(&f), f);
    }

    #[test]
    fn reta_inverse_round_trips_and_matches_the_alternating_sum() {
        let f = dense_f();
        let g = reta(&f);
        assert_eq!(reta_inverse(&g), f);
        assert_eq!(reta(&reta_inverse(&g)), g);
        assert_eq!(reta_inverse_alternating(&g), f);
    }

    #[test]
    fn generalized_coefficients_of_reta_sum_over_strong_refinements() {
        let f = dense_f();
        let g = reta(&f);
        for word in words_of_length(2, 3) {
            for rho in nc_partitions(3).iter() {
                assert_eq!(
                    generalized_coefficient(&g, &word, rho).unwrap(),
                    reta_generalized_coefficient(&f, &word, rho).unwrap(),
                    "generalized coefficient mismatch at {word}, {rho}"
                );
            }
        }
    }

    #[test]
    fn reta_scaling_identity_holds_and_rejects_minus_one() {
        let f = dense_f();
        for s in [rat(1, 1), rat(2, 1), rat(-1, 2), rat(3, 4)] {
            let report = reta_scaling_identity(&f, &s).unwrap();
            assert!(report.passed(), "scaling identity failed at s = {s}");
        }
        assert_eq!(
            reta_scaling_identity(&f, &rat(-1, 1)),
            Err(TransformError::ScaleAtMinusOne)
        );
        assert!(reta_negation_identity(&f).passed());
    }

    #[test]
    fn semicircular_cumulants_produce_catalan_moments() {
        // R = z^2 in one variable: even moments count non-crossing pairings
        let r = Series::monomial(1, 6, w(&[1, 1]), rat(1, 1)).unwrap();
        let m = moments_from_free_cumulants(&r);
        let expect = [
            (w(&[1]), 0),
            (w(&[1, 1]), 1),
            (w(&[1, 1, 1]), 0),
            (w(&[1, 1, 1, 1]), 2),
            (w(&[1, 1, 1, 1, 1]), 0),
            (w(&[1, 1, 1, 1, 1, 1]), 5),
        ];
        for (word, value) in expect {
            assert_eq!(m.coefficient(&word).unwrap(), rat(value, 1), "at {word}");
        }
        assert_eq!(free_cumulants_from_moments(&m), r);
    }

    #[test]
    fn rate_one_poisson_cumulants_produce_catalan_counts() {
        // every free cumulant 1: the moment of z^n counts all non-crossing
        // partitions of n points
        let r =
            Series::from_coeffs(1, 6, (1..=6).map(|n| (Word::new(vec![1; n]), rat(1, 1)))).unwrap();
        let m = moments_from_free_cumulants(&r);
        for (n, catalan) in [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)] {
            assert_eq!(
                m.coefficient(&Word::new(vec![1u16; n])).unwrap(),
                rat(catalan, 1)
            );
        }
    }

    #[test]
    fn second_cumulants_are_centered_second_moments() {
        let m = Series::from_coeffs(1, 2, [(w(&[1]), rat(1, 2)), (w(&[1, 1]), rat(2, 1))]).unwrap();
        let r = free_cumulants_from_moments(&m);
        let b = boolean_cumulants_from_moments(&m);
        // kappa_2 = b_2 = m_2 - m_1^2
        assert_eq!(r.coefficient(&w(&[1, 1])).unwrap(), rat(7, 4));
        assert_eq!(b.coefficient(&w(&[1, 1])).unwrap(), rat(7, 4));
    }

    #[test]
    fn boolean_cumulant_routes_agree() {
        let m = dense_f();
        let eta_series = m.moments_to_boolean();
        let eta_intervals = boolean_cumulants_from_moments(&m);
        assert_eq!(eta_series, eta_intervals);
        assert_eq!(moments_from_boolean_cumulants(&eta_series), m);
        assert_eq!(eta_series.boolean_to_moments(), m);
    }

    #[test]
    fn cumulant_moment_round_trips() {
        let m = dense_f();
        assert_eq!(
            moments_from_free_cumulants(&free_cumulants_from_moments(&m)),
            m
        );
        let r = dense_f();
        assert_eq!(
            free_cumulants_from_moments(&moments_from_free_cumulants(&r)),
            r
        );
    }

    #[test]
    fn functional_equation_holds_for_random_like_moments() {
        assert!(functional_equation_identity(&dense_f()).passed());
    }
}
