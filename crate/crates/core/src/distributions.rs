//! Joint distributions of non-commuting variables, represented by their
//! truncated moment series, with the convolutions and semigroups acting on
//! them.
//!
//! A [`Distribution`] is a linear functional on words, normalized to 1 on
//! the empty word, known up to a fixed degree. Three series encode it
//! interchangeably: the moments themselves, the free cumulant series
//! (which linearizes free convolution), and the Boolean cumulant series
//! (which linearizes Boolean convolution). Convolution powers rescale the
//! matching cumulant series, and the Boolean-to-free semigroup `bbp`
//! interpolates between the two worlds by composing fractional powers.

use crate::partitions::SetPartition;
use crate::report::{compare_series, IdentityReport};
use crate::series::{words_of_length, Coeff, Rational, Series, SeriesError, TruncatedSeries, Word};
use crate::transforms::{
    free_cumulants_from_moments, generalized_coefficient, moments_from_free_cumulants,
    nc_with_kreweras, reta,
};
use num::{One, Signed, Zero};

/// Domain errors for operations that only make sense for restricted
/// parameter ranges.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DistributionError {
    #[error("convolution power exponents must be positive, got {0}")]
    NonPositivePower(Rational),
    #[error("the Boolean-to-free semigroup is defined for t >= 0, got {0}")]
    NegativeTime(Rational),
    #[error("this route is defined for t > 0 only, got {0}")]
    NonPositiveTime(Rational),
    #[error("dilation factors must be positive, got {0}")]
    NonPositiveDilation(Rational),
    #[error("semicircular variance must be nonnegative, got {0}")]
    NegativeVariance(Rational),
    #[error("exponents must satisfy p >= 1 and q > (p-1)/p, got p = {p}, q = {q}")]
    ExponentsOutOfRange { p: Box<Rational>, q: Box<Rational> },
}

/// A joint distribution of `k` variables, known through its moments on
/// words of length up to a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    moments: Series,
}

impl Distribution {
    /// Wraps a moment series. The empty-word moment is implicitly 1 and is
    /// never stored.
    pub fn from_moments(moments: Series) -> Self {
        Distribution { moments }
    }

    /// Recovers the distribution whose free cumulant series is `r`.
    pub fn from_r(r: Series) -> Self {
        Distribution {
            moments: moments_from_free_cumulants(&r),
        }
    }

    /// Recovers the distribution whose Boolean cumulant series is `eta`.
    pub fn from_eta(eta: Series) -> Self {
        Distribution {
            moments: eta.boolean_to_moments(),
        }
    }

    /// The point mass at the origin: every moment vanishes.
    pub fn delta_zero(k: usize, degree: usize) -> Self {
        Distribution {
            moments: Series::zero(k, degree),
        }
    }

    /// The distribution of the constant tuple `(1, ..., 1)`: every moment
    /// equals 1.
    pub fn delta_one(k: usize, degree: usize) -> Self {
        let entries = crate::series::all_words(k, degree)
            .into_iter()
            .map(|w| (w, Rational::one()));
        Distribution {
            moments: Series::from_coeffs(k, degree, entries).expect("enumerated words are valid"),
        }
    }

    /// The semicircular family of variance `t`: free cumulant series
    /// `t (z_1^2 + ... + z_k^2)`. At `t = 0` this is the point mass at the
    /// origin.
    pub fn semicircular(k: usize, degree: usize, t: &Rational) -> Result<Self, DistributionError> {
        if t.is_negative() {
            return Err(DistributionError::NegativeVariance(t.clone()));
        }
        let entries = (1..=k as u16).map(|i| (Word::new(vec![i, i]), t.clone()));
        let r = Series::from_coeffs(k, degree, entries).expect("squares are valid words");
        Ok(Distribution::from_r(r))
    }

    pub fn k(&self) -> usize {
        self.moments.k()
    }

    pub fn degree(&self) -> usize {
        self.moments.degree()
    }

    pub fn moments(&self) -> &Series {
        &self.moments
    }

    /// The moment at `w`; the empty word has moment 1.
    pub fn moment(&self, w: &Word) -> Result<Rational, SeriesError> {
        if w.is_empty() {
            return Ok(Rational::one());
        }
        self.moments.coefficient(w)
    }

    /// The Boolean cumulant series, via the alternating geometric series
    /// `M (1 + M)^{-1}`.
    pub fn eta(&self) -> Series {
        self.moments.moments_to_boolean()
    }

    /// The free cumulant series, via the subtraction recursion over
    /// non-crossing partitions.
    pub fn r_transform(&self) -> Series {
        free_cumulants_from_moments(&self.moments)
    }

    /// Forgets moments above `degree`.
    pub fn truncate(&self, degree: usize) -> Self {
        Distribution {
            moments: self.moments.truncate(degree),
        }
    }

    /// Free convolution: free cumulant series add.
    pub fn free_convolve(&self, other: &Self) -> Self {
        Distribution::from_r(self.r_transform().add(&other.r_transform()))
    }

    /// Boolean convolution: Boolean cumulant series add.
    pub fn boolean_convolve(&self, other: &Self) -> Self {
        Distribution::from_eta(self.eta().add(&other.eta()))
    }

    /// Free convolution power: rescales the free cumulant series by
    /// `t > 0`.
    pub fn free_power(&self, t: &Rational) -> Result<Self, DistributionError> {
        if !t.is_positive() {
            return Err(DistributionError::NonPositivePower(t.clone()));
        }
        Ok(Distribution::from_r(self.r_transform().scale(t)))
    }

    /// Boolean convolution power: rescales the Boolean cumulant series by
    /// `t > 0`.
    pub fn boolean_power(&self, t: &Rational) -> Result<Self, DistributionError> {
        if !t.is_positive() {
            return Err(DistributionError::NonPositivePower(t.clone()));
        }
        Ok(Distribution::from_eta(self.eta().scale(t)))
    }

    /// The Boolean-to-free semigroup at time `t >= 0`, as the composition
    /// of fractional convolution powers:
    /// `bbp_t = (boolean power 1/(1+t)) of (free power 1+t)`.
    ///
    /// `t = 0` is the identity and `t = 1` is the Boolean-to-free
    /// bijection, which turns the Boolean cumulant series of the input
    /// into the free cumulant series of the output.
    pub fn bbp(&self, t: &Rational) -> Result<Self, DistributionError> {
        if t.is_negative() {
            return Err(DistributionError::NegativeTime(t.clone()));
        }
        if t.is_zero() {
            return Ok(self.clone());
        }
        let one_plus_t = Rational::one() + t;
        Ok(self
            .free_power(&one_plus_t)
            .expect("1 + t is positive")
            .boolean_power(&one_plus_t.recip())
            .expect("1/(1+t) is positive"))
    }

    /// The semigroup at `t > 0` computed on the free cumulant side:
    /// the output's free cumulant series is `(1/t) reta(t R)`.
    pub fn bbp_via_r(&self, t: &Rational) -> Result<Self, DistributionError> {
        if !t.is_positive() {
            return Err(DistributionError::NonPositiveTime(t.clone()));
        }
        let r = reta(&self.r_transform().scale(t)).scale(&t.recip());
        Ok(Distribution::from_r(r))
    }

    /// The semigroup at `t > 0` computed on the Boolean cumulant side:
    /// the output's Boolean cumulant series is `(1/t) reta(t eta)`.
    pub fn bbp_via_eta(&self, t: &Rational) -> Result<Self, DistributionError> {
        if !t.is_positive() {
            return Err(DistributionError::NonPositiveTime(t.clone()));
        }
        let eta = reta(&self.eta().scale(t)).scale(&t.recip());
        Ok(Distribution::from_eta(eta))
    }

    /// Dilation by `r > 0`: the moment at `w` picks up a factor
    /// `r^{|w|}`. Cumulant series of every flavor dilate the same way.
    pub fn dilate(&self, r: &Rational) -> Result<Self, DistributionError> {
        if !r.is_positive() {
            return Err(DistributionError::NonPositiveDilation(r.clone()));
        }
        Ok(Distribution {
            moments: self.moments.dilate(r),
        })
    }

    /// Free multiplicative convolution. The moment at `w` is the sum over
    /// non-crossing partitions `p` of the positions of `w` of the
    /// generalized free cumulant of `self` at `(w, p)` times the
    /// generalized moment of `other` at `(w, Kreweras complement of p)`.
    ///
    /// The distribution [`Distribution::delta_one`] is a two-sided
    /// identity. Truncates to the smaller of the two degrees.
    pub fn mult_convolve(&self, other: &Self) -> Self {
        self.moments
            .assert_same_alphabet(&other.moments, "multiply");
        let k = self.k();
        let degree = self.degree().min(other.degree());
        let r = self.r_transform();
        let mut entries = Vec::new();
        for n in 1..=degree {
            let pairs = nc_with_kreweras(n);
            for w in words_of_length(k, n) {
                let mut sum = Rational::zero();
                for (p, complement) in pairs.iter() {
                    let a = generalized_coefficient(&r, &w, p).expect("word within degree");
                    if a.is_zero() {
                        continue;
                    }
                    let b = generalized_coefficient(&other.moments, &w, complement)
                        .expect("word within degree");
                    sum += a * b;
                }
                if !sum.is_zero() {
                    entries.push((w, sum));
                }
            }
        }
        Distribution {
            moments: Series::from_coeffs(k, degree, entries).expect("coefficients within degree"),
        }
    }

    /// The two-state embedding: maps a distribution of `k` variables to
    /// the distribution whose Boolean cumulant series is given by
    /// [`phi_eta`]. Raises the degree by exactly 2.
    pub fn phi(&self) -> Self {
        Distribution {
            moments: phi_eta(&self.moments).boolean_to_moments(),
        }
    }
}

/// The Boolean cumulant series of the two-state embedding of a moment
/// series: the coefficient at the word `(i, w, j)` is the moment of `w`
/// when `i = j` (1 for empty `w`) and 0 otherwise. Coefficients at words
/// of length 1 vanish. The output degree is the input degree plus 2.
///
/// Generic in the coefficients so the floating-point operator model can
/// be compared against this exact pipeline.
pub fn phi_eta<C: Coeff>(nu_moments: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    let k = nu_moments.k();
    let degree = nu_moments.degree() + 2;
    let mut entries = Vec::new();
    for i in 1..=k as u16 {
        entries.push((Word::new(vec![i, i]), C::one()));
        for (w, c) in nu_moments.iter() {
            let mut letters = Vec::with_capacity(w.len() + 2);
            letters.push(i);
            letters.extend_from_slice(w.letters());
            letters.push(i);
            entries.push((Word::new(letters), c.clone()));
        }
    }
    TruncatedSeries::from_coeffs(k, degree, entries).expect("wrapped words stay within degree")
}

/// Checks the semigroup law `bbp_s of bbp_t = bbp_{s+t}` for `s, t >= 0`.
pub fn semigroup_check(
    mu: &Distribution,
    s: &Rational,
    t: &Rational,
) -> Result<IdentityReport, DistributionError> {
    let lhs = mu.bbp(t)?.bbp(s)?;
    let rhs = mu.bbp(&(s + t))?;
    Ok(compare_series(lhs.moments(), rhs.moments()))
}

/// Checks that the three routes to the semigroup agree for `t > 0`: the
/// composition of fractional powers, the free-cumulant rescaling route,
/// and the Boolean-cumulant rescaling route.
pub fn bbp_route_checks(
    mu: &Distribution,
    t: &Rational,
) -> Result<IdentityReport, DistributionError> {
    let composed = mu.bbp(t)?;
    let via_r = mu.bbp_via_r(t)?;
    let via_eta = mu.bbp_via_eta(t)?;
    Ok(IdentityReport::combine([
        compare_series(composed.moments(), via_r.moments()),
        compare_series(composed.moments(), via_eta.moments()),
    ]))
}

/// Checks the commutation of fractional powers: for `p >= 1` and
/// `q > (p-1)/p`,
/// `boolean power q of free power p = free power p' of boolean power q'`
/// with `q' = 1 - p + pq` and `p' = pq / q'`.
pub fn exponent_commutation_check(
    mu: &Distribution,
    p: &Rational,
    q: &Rational,
) -> Result<IdentityReport, DistributionError> {
    let one = Rational::one();
    let q_new = &one - p + p * q;
    if p < &one || !q_new.is_positive() {
        return Err(DistributionError::ExponentsOutOfRange {
            p: Box::new(p.clone()),
            q: Box::new(q.clone()),
        });
    }
    let p_new = p * q / &q_new;
    let lhs = mu.free_power(p)?.boolean_power(q)?;
    let rhs = mu.boolean_power(&q_new)?.free_power(&p_new)?;
    Ok(compare_series(lhs.moments(), rhs.moments()))
}

/// Checks that the semigroup respects multiplicative convolution:
/// `bbp_t(mu mult nu) = bbp_t(mu) mult bbp_t(nu)` for `t >= 0`.
pub fn boxtimes_bbp_check(
    mu: &Distribution,
    nu: &Distribution,
    t: &Rational,
) -> Result<IdentityReport, DistributionError> {
    let lhs = mu.mult_convolve(nu).bbp(t)?;
    let rhs = mu.bbp(t)?.mult_convolve(&nu.bbp(t)?);
    Ok(compare_series(lhs.moments(), rhs.moments()))
}

/// Checks the two power-dilation laws for `t > 0`:
/// a convolution power taken before multiplying equals the power of the
/// product followed by a dilation by `t`, once for free powers and once
/// for Boolean powers.
pub fn power_dilation_checks(
    mu: &Distribution,
    nu: &Distribution,
    t: &Rational,
) -> Result<IdentityReport, DistributionError> {
    if !t.is_positive() {
        return Err(DistributionError::NonPositiveTime(t.clone()));
    }
    let product = mu.mult_convolve(nu);
    let free_lhs = mu.free_power(t)?.mult_convolve(&nu.free_power(t)?);
    let free_rhs = product.free_power(t)?.dilate(t)?;
    let boolean_lhs = mu.boolean_power(t)?.mult_convolve(&nu.boolean_power(t)?);
    let boolean_rhs = product.boolean_power(t)?.dilate(t)?;
    Ok(IdentityReport::combine([
        compare_series(free_lhs.moments(), free_rhs.moments()),
        compare_series(boolean_lhs.moments(), boolean_rhs.moments()),
    ]))
}

/// Checks that the two-state embedding intertwines semicircular free
/// convolution with the semigroup: `phi(nu free-conv semicircular(t)) =
/// bbp_t(phi(nu))` for `t > 0`.
pub fn phi_brownian_check(
    nu: &Distribution,
    t: &Rational,
) -> Result<IdentityReport, DistributionError> {
    if !t.is_positive() {
        return Err(DistributionError::NonPositiveTime(t.clone()));
    }
    let gaussian = Distribution::semicircular(nu.k(), nu.degree(), t)?;
    let lhs = nu.free_convolve(&gaussian).phi();
    let rhs = nu.phi().bbp(t)?;
    Ok(compare_series(lhs.moments(), rhs.moments()))
}

/// Checks the defining mixed-moment formula of multiplicative convolution
/// directly against its partition sum, for use as an independent route in
/// verification suites.
pub fn mult_convolve_term(
    mu: &Distribution,
    nu: &Distribution,
    w: &Word,
    p: &SetPartition,
) -> Rational {
    let a = generalized_coefficient(&mu.r_transform(), w, p).expect("word within degree");
    let b = generalized_coefficient(nu.moments(), w, &p.kreweras_complement())
        .expect("word within degree");
    a * b
}
