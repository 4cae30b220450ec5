//! Truncated power series in non-commuting indeterminates.
//!
//! A [`TruncatedSeries`] holds the coefficients of a formal power series
//! in `z_1, ..., z_k` with vanishing constant term, exactly up to a fixed
//! total degree. Coefficients are indexed by [`Word`]s over the alphabet
//! `{1, ..., k}`; the monomial for the word `(i_1, ..., i_n)` is
//! `z_{i_1} z_{i_2} ... z_{i_n}` and the order of letters matters.
//!
//! All operations are pure: they take their operands by reference and
//! return new series. Binary operations truncate to the smaller of the two
//! degrees, which is the largest degree at which the result is exact.

use num::{BigRational, One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Exact coefficient scalar used throughout the crate.
pub type Rational = BigRational;

/// Series with rational coefficients, the default instantiation.
pub type Series = TruncatedSeries<Rational>;

/// Truncation degree used when no explicit degree is requested.
pub const DEFAULT_DEGREE: usize = 6;

/// Degrees above this are legal but likely to be slow; construction warns.
pub const ADVISORY_DEGREE_CAP: usize = 10;

/// Coefficient ring for a series. Implemented by any commutative ring
/// with equality, in particular `BigRational` and `Complex<BigRational>`.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + std::ops::Neg<Output = Self>
        + std::ops::Sub<Output = Self>
{
}

/// Errors reported by series construction and coefficient lookup.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    /// Coefficient words must have length at least one; the constant term
    /// is identically zero and is not stored.
    #[error("word must have length >= 1 (constant terms are identically zero)")]
    EmptyWord,
    /// The word is longer than the truncation degree, so its coefficient
    /// is unknown rather than zero.
    #[error("word length {len} exceeds truncation degree {degree}; coefficient is unknown")]
    DegreeExceeded { len: usize, degree: usize },
    /// A letter falls outside the series alphabet.
    #[error("letter {letter} is outside the alphabet 1..={k}")]
    LetterOutOfRange { letter: u16, k: usize },
    /// Text that does not parse as a comma-separated word.
    #[error("cannot parse {input:?} as a word; expected comma-separated letters like \"1,2,1\"")]
    MalformedWord { input: String },
}

/// A finite word over the alphabet `{1, 2, ...}` of 1-based letters.
///
/// Words order first by length, then lexicographically, which is the
/// canonical iteration order of a series.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn new(letters: impl Into<Vec<u16>>) -> Self {
        Word(letters.into())
    }

    /// The empty word. It never appears as a series key; it stands for the
    /// monomial `1` when moments of distributions are read off.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(letter: u16) -> Self {
        Word(vec![letter])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The subword at the given strictly increasing 1-based positions.
    ///
    /// For `w = (i_1, ..., i_n)` and positions `(b_1 < ... < b_m)` this is
    /// `(i_{b_1}, ..., i_{b_m})`, the restriction of `w` to a block of a
    /// partition of `{1, ..., n}`.
    pub fn subword(&self, positions: &[u32]) -> Word {
        let letters = positions
            .iter()
            .map(|&p| {
                assert!(
                    p >= 1 && (p as usize) <= self.0.len(),
                    "position {p} outside word of length {}",
                    self.0.len()
                );
                self.0[p as usize - 1]
            })
            .collect();
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{letter}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl FromStr for Word {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || SeriesError::MalformedWord {
            input: s.to_string(),
        };
        if s.trim().is_empty() {
            return Err(malformed());
        }
        let letters = s
            .split(',')
            .map(|part| part.trim().parse::<u16>().map_err(|_| malformed()))
            .collect::<Result<Vec<u16>, _>>()?;
        if letters.contains(&0) {
            return Err(malformed());
        }
        Ok(Word(letters))
    }
}

/// All words of exactly the given length, in lexicographic order.
pub fn words_of_length(k: usize, len: usize) -> Vec<Word> {
    assert!(
        k >= 1 && k <= u16::MAX as usize,
        "alphabet size {k} out of range"
    );
    if len == 0 {
        return vec![Word::empty()];
    }
    let mut out = Vec::with_capacity(k.pow(len.min(16) as u32));
    let mut current = vec![1u16; len];
    loop {
        out.push(Word(current.clone()));
        // advance the odometer, least significant letter last
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if (current[pos] as usize) < k {
                current[pos] += 1;
                for slot in current.iter_mut().skip(pos + 1) {
                    *slot = 1;
                }
                break;
            }
        }
    }
}

/// All words of length `1..=max_len`, in canonical (length, lexicographic) order.
pub fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        out.extend(words_of_length(k, len));
    }
    out
}

/// A formal power series over `k` non-commuting indeterminates, with zero
/// constant term, known exactly up to total degree `degree`.
///
/// Zero coefficients are never stored; two series compare equal iff they
/// have the same alphabet, the same degree and the same coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coeff> {
    k: usize,
    degree: usize,
    coeffs: BTreeMap<Word, C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// The zero series over `z_1, ..., z_k`, truncated at `degree`.
    pub fn zero(k: usize, degree: usize) -> Self {
        assert!(k >= 1, "alphabet must have at least one letter");
        assert!(
            k <= u16::MAX as usize,
            "alphabet size {k} exceeds the supported maximum {}",
            u16::MAX
        );
        if degree > ADVISORY_DEGREE_CAP {
            log::warn!(
                "truncation degree {degree} exceeds the advisory cap {ADVISORY_DEGREE_CAP}; \
                 partition sums grow like the Catalan numbers and may be slow"
            );
        }
        TruncatedSeries {
            k,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a series from explicit coefficients. Repeated words are summed;
    /// zero coefficients are dropped.
    pub fn from_coeffs(
        k: usize,
        degree: usize,
        entries: impl IntoIterator<Item = (Word, C)>,
    ) -> Result<Self, SeriesError> {
        let mut series = Self::zero(k, degree);
        for (word, c) in entries {
            series.check_word(&word)?;
            let slot = series.coeffs.entry(word).or_insert_with(C::zero);
            *slot = slot.clone() + c;
        }
        series.coeffs.retain(|_, c| !c.is_zero());
        Ok(series)
    }

    /// The series `c * z_{i_1} ... z_{i_n}` with a single monomial.
    pub fn monomial(k: usize, degree: usize, word: Word, c: C) -> Result<Self, SeriesError> {
        Self::from_coeffs(k, degree, [(word, c)])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn check_word(&self, w: &Word) -> Result<(), SeriesError> {
        if w.is_empty() {
            return Err(SeriesError::EmptyWord);
        }
        if w.len() > self.degree {
            return Err(SeriesError::DegreeExceeded {
                len: w.len(),
                degree: self.degree,
            });
        }
        for &letter in w.letters() {
            if letter == 0 || letter as usize > self.k {
                return Err(SeriesError::LetterOutOfRange { letter, k: self.k });
            }
        }
        Ok(())
    }

    /// The coefficient of `w`, distinguishing stored-zero (`Ok(0)`) from
    /// out-of-range lookups (`Err`).
    pub fn coefficient(&self, w: &Word) -> Result<C, SeriesError> {
        self.check_word(w)?;
        Ok(self.coeffs.get(w).cloned().unwrap_or_else(C::zero))
    }

    /// Stored (non-zero) coefficients in canonical word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.coeffs.iter()
    }

    /// Number of non-zero coefficients.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub(crate) fn assert_same_alphabet(&self, rhs: &Self, op: &str) {
        assert_eq!(
            self.k, rhs.k,
            "cannot {op} series over different alphabets ({} vs {})",
            self.k, rhs.k
        );
    }

    /// Sum, truncated at the smaller of the two degrees.
    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_alphabet(rhs, "add");
        let degree = self.degree.min(rhs.degree);
        let mut coeffs: BTreeMap<Word, C> = BTreeMap::new();
        for (w, c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            if w.len() > degree {
                continue;
            }
            let slot = coeffs.entry(w.clone()).or_insert_with(C::zero);
            *slot = slot.clone() + c.clone();
        }
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            k: self.k,
            degree,
            coeffs,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            k: self.k,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Scalar multiple `c * f`.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.k, self.degree);
        }
        let mut coeffs: BTreeMap<Word, C> = self
            .coeffs
            .iter()
            .map(|(w, old)| (w.clone(), c.clone() * old.clone()))
            .collect();
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            k: self.k,
            degree: self.degree,
            coeffs,
        }
    }

    /// Non-commutative product, truncated at the smaller of the two degrees.
    ///
    /// The coefficient of `w` in `f * g` is the sum of
    /// `Cf_{w1}(f) * Cf_{w2}(g)` over the splits `w = w1 w2` into non-empty
    /// halves. Time: O(support(f) * support(g)).
    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_alphabet(rhs, "multiply");
        let degree = self.degree.min(rhs.degree);
        let mut coeffs: BTreeMap<Word, C> = BTreeMap::new();
        for (w1, c1) in &self.coeffs {
            if w1.len() >= degree {
                continue;
            }
            for (w2, c2) in &rhs.coeffs {
                if w1.len() + w2.len() > degree {
                    continue;
                }
                let word = w1.concat(w2);
                let slot = coeffs.entry(word).or_insert_with(C::zero);
                *slot = slot.clone() + c1.clone() * c2.clone();
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            k: self.k,
            degree,
            coeffs,
        }
    }

    /// Re-truncates to a smaller degree, discarding higher coefficients.
    pub fn truncate(&self, degree: usize) -> Self {
        assert!(
            degree <= self.degree,
            "cannot extend truncation degree from {} to {degree}: higher coefficients are unknown",
            self.degree
        );
        TruncatedSeries {
            k: self.k,
            degree,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(w, _)| w.len() <= degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitution `f(g_1, ..., g_k)`.
    ///
    /// Each `g_i` must have zero constant term (guaranteed by the type), so
    /// the composition is well defined degree by degree. The result is exact
    /// up to the smaller of `f`'s degree and the degrees of the arguments,
    /// over the alphabet of the arguments.
    pub fn substitute(&self, args: &[Self]) -> Self {
        assert_eq!(
            args.len(),
            self.k,
            "substitution needs one series per indeterminate ({} expected, {} given)",
            self.k,
            args.len()
        );
        let k_out = args[0].k;
        let mut degree = self.degree;
        for g in args {
            assert_eq!(g.k, k_out, "substituted series must share one alphabet");
            degree = degree.min(g.degree);
        }
        let mut acc = Self::zero(k_out, degree);
        for (w, c) in &self.coeffs {
            if w.len() > degree {
                continue;
            }
            let mut prod = args[w.letters()[0] as usize - 1].truncate(degree);
            for &letter in &w.letters()[1..] {
                if prod.is_zero() {
                    break;
                }
                prod = prod.mul(&args[letter as usize - 1]);
            }
            acc = acc.add(&prod.scale(c));
        }
        acc
    }

    /// Dilation by `r`: the coefficient of every word `w` is multiplied by
    /// `r^{|w|}`. Equivalently, `z_i` is replaced by `r * z_i`.
    pub fn dilate(&self, r: &C) -> Self {
        let mut coeffs: BTreeMap<Word, C> = BTreeMap::new();
        let mut power = C::one();
        let mut power_len = 0usize;
        for (w, c) in &self.coeffs {
            while power_len < w.len() {
                power = power * r.clone();
                power_len += 1;
            }
            coeffs.insert(w.clone(), power.clone() * c.clone());
        }
        coeffs.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            k: self.k,
            degree: self.degree,
            coeffs,
        }
    }

    /// Geometric sum `sum_{j>=1} s_j f^j` with `s_j = (-1)^{j+1}` when
    /// alternating, else `s_j = 1`. Powers beyond the degree vanish because
    /// `f` has no constant term.
    fn geometric_sum(&self, alternating: bool) -> Self {
        let mut acc = Self::zero(self.k, self.degree);
        let mut power = self.clone();
        for j in 1..=self.degree {
            if power.is_zero() {
                break;
            }
            if alternating && j % 2 == 0 {
                acc = acc.add(&power.neg());
            } else {
                acc = acc.add(&power);
            }
            if j < self.degree {
                power = power.mul(self);
            }
        }
        acc
    }

    /// `f (1 + f)^{-1}`, the series that turns a moment series into the
    /// Boolean cumulant series `eta`.
    pub fn moments_to_boolean(&self) -> Self {
        self.geometric_sum(true)
    }

    /// `f (1 - f)^{-1}`, the inverse of [`Self::moments_to_boolean`]: it
    /// turns a Boolean cumulant series `eta` back into moments.
    pub fn boolean_to_moments(&self) -> Self {
        self.geometric_sum(false)
    }
}

impl<C: Coeff> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TruncatedSeries(k={}, degree={}, {{",
            self.k, self.degree
        )?;
        let mut first = true;
        for (w, c) in &self.coeffs {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {c}")?;
            first = false;
        }
        write!(f, "}})")
    }
}

/// Convenience constructor for rational coefficients.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u16]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn coefficient_lookup_distinguishes_zero_from_unknown() {
        let f = Series::from_coeffs(2, 4, [(w(&[1]), rat(3, 1)), (w(&[2, 1]), rat(1, 2))]).unwrap();
        assert_eq!(f.coefficient(&w(&[2, 1])).unwrap(), rat(1, 2));
        assert_eq!(f.coefficient(&w(&[1, 1])).unwrap(), rat(0, 1));
        assert_eq!(
            f.coefficient(&w(&[1, 2, 1, 2, 1])),
            Err(SeriesError::DegreeExceeded { len: 5, degree: 4 })
        );
        assert_eq!(f.coefficient(&Word::empty()), Err(SeriesError::EmptyWord));
        assert_eq!(
            f.coefficient(&w(&[3])),
            Err(SeriesError::LetterOutOfRange { letter: 3, k: 2 })
        );
    }

    #[test]
    fn construction_rejects_out_of_range_words() {
        let too_long = Series::from_coeffs(1, 2, [(w(&[1, 1, 1]), rat(1, 1))]);
        assert_eq!(
            too_long,
            Err(SeriesError::DegreeExceeded { len: 3, degree: 2 })
        );
        let bad_letter = Series::from_coeffs(1, 2, [(w(&[2]), rat(1, 1))]);
        assert_eq!(
            bad_letter,
            Err(SeriesError::LetterOutOfRange { letter: 2, k: 1 })
        );
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let f = Series::from_coeffs(1, 3, [(w(&[1]), rat(1, 1)), (w(&[1]), rat(-1, 1))]).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.support_size(), 0);
    }

    #[test]
    fn add_truncates_to_the_smaller_degree() {
        let f = Series::monomial(2, 3, w(&[1]), rat(1, 1)).unwrap();
        let g = Series::from_coeffs(2, 5, [(w(&[2]), rat(2, 1)), (w(&[1, 1, 1, 1]), rat(7, 1))])
            .unwrap();
        let sum = f.add(&g);
        assert_eq!(sum.degree(), 3);
        assert_eq!(sum.coefficient(&w(&[1])).unwrap(), rat(1, 1));
        assert_eq!(sum.coefficient(&w(&[2])).unwrap(), rat(2, 1));
        // the degree-4 term of g is beyond the common truncation
        assert!(sum.coefficient(&w(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    #[should_panic(expected = "different alphabets")]
    fn add_rejects_alphabet_mismatch() {
        let f = Series::zero(2, 3);
        let g = Series::zero(3, 3);
        let _ = f.add(&g);
    }

    #[test]
    fn product_keeps_letter_order() {
        // (z1 + z2) * z1 = z1 z1 + z2 z1
        let f = Series::from_coeffs(2, 6, [(w(&[1]), rat(1, 1)), (w(&[2]), rat(1, 1))]).unwrap();
        let g = Series::monomial(2, 6, w(&[1]), rat(1, 1)).unwrap();
        let prod = f.mul(&g);
        assert_eq!(prod.coefficient(&w(&[1, 1])).unwrap(), rat(1, 1));
        assert_eq!(prod.coefficient(&w(&[2, 1])).unwrap(), rat(1, 1));
        assert_eq!(prod.coefficient(&w(&[1, 2])).unwrap(), rat(0, 1));
        assert_eq!(prod.support_size(), 2);

        // z1 z2 != z2 z1
        let z1 = Series::monomial(2, 2, w(&[1]), rat(1, 1)).unwrap();
        let z2 = Series::monomial(2, 2, w(&[2]), rat(1, 1)).unwrap();
        assert_ne!(z1.mul(&z2), z2.mul(&z1));
    }

    #[test]
    fn product_drops_terms_beyond_truncation() {
        let f = Series::from_coeffs(1, 3, [(w(&[1]), rat(1, 1)), (w(&[1, 1]), rat(1, 1))]).unwrap();
        let prod = f.mul(&f);
        // degree-4 part of (z + z^2)^2 is cut off at degree 3
        assert_eq!(prod.coefficient(&w(&[1, 1])).unwrap(), rat(1, 1));
        assert_eq!(prod.coefficient(&w(&[1, 1, 1])).unwrap(), rat(2, 1));
        assert_eq!(prod.degree(), 3);
    }

    #[test]
    fn boolean_conversion_of_geometric_moments_is_linear() {
        // moments m_n = 1 for all n (point mass at 1): eta = z exactly
        let m = Series::from_coeffs(1, 4, (1..=4).map(|n| (Word::new(vec![1u16; n]), rat(1, 1))))
            .unwrap();
        let eta = m.moments_to_boolean();
        assert_eq!(eta, Series::monomial(1, 4, w(&[1]), rat(1, 1)).unwrap());
        assert_eq!(eta.boolean_to_moments(), m);
    }

    #[test]
    fn alternating_geometric_matches_multiplying_back() {
        // g = f(1+f)^{-1} for f = z: g = z - z^2 + z^3 - z^4, and g(1+f) = f
        let f = Series::monomial(1, 4, w(&[1]), rat(1, 1)).unwrap();
        let g = f.moments_to_boolean();
        assert_eq!(g.coefficient(&w(&[1])).unwrap(), rat(1, 1));
        assert_eq!(g.coefficient(&w(&[1, 1])).unwrap(), rat(-1, 1));
        assert_eq!(g.coefficient(&w(&[1, 1, 1])).unwrap(), rat(1, 1));
        assert_eq!(g.coefficient(&w(&[1, 1, 1, 1])).unwrap(), rat(-1, 1));
        assert_eq!(g.add(&g.mul(&f)), f);
    }

    #[test]
    fn substitution_expands_products_of_arguments() {
        // f = z1 z2, g1 = z1 + z1^2, g2 = z2  =>  f(g1, g2) = z1 z2 + z1 z1 z2
        let f = Series::monomial(2, 4, w(&[1, 2]), rat(1, 1)).unwrap();
        let g1 =
            Series::from_coeffs(2, 4, [(w(&[1]), rat(1, 1)), (w(&[1, 1]), rat(1, 1))]).unwrap();
        let g2 = Series::monomial(2, 4, w(&[2]), rat(1, 1)).unwrap();
        let composed = f.substitute(&[g1, g2]);
        assert_eq!(composed.coefficient(&w(&[1, 2])).unwrap(), rat(1, 1));
        assert_eq!(composed.coefficient(&w(&[1, 1, 2])).unwrap(), rat(1, 1));
        assert_eq!(composed.support_size(), 2);
    }

    #[test]
    fn dilation_scales_by_length() {
        let f = Series::from_coeffs(2, 3, [(w(&[1]), rat(1, 1)), (w(&[1, 2]), rat(1, 1))]).unwrap();
        let d = f.dilate(&rat(2, 1));
        assert_eq!(d.coefficient(&w(&[1])).unwrap(), rat(2, 1));
        assert_eq!(d.coefficient(&w(&[1, 2])).unwrap(), rat(4, 1));
    }

    #[test]
    fn word_order_is_by_length_then_lexicographic() {
        let words = all_words(2, 2);
        let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["1", "2", "1,1", "1,2", "2,1", "2,2"]);
    }

    #[test]
    fn word_text_round_trips() {
        let word = w(&[1, 2, 1]);
        assert_eq!(word.to_string(), "1,2,1");
        assert_eq!("1,2,1".parse::<Word>().unwrap(), word);
        assert_eq!("  1 , 2 ".parse::<Word>().unwrap(), w(&[1, 2]));
        assert!("".parse::<Word>().is_err());
        assert!("1,,2".parse::<Word>().is_err());
        assert!("0,1".parse::<Word>().is_err());
        assert!("a,b".parse::<Word>().is_err());
    }

    #[test]
    fn subword_picks_one_based_positions() {
        let word = w(&[3, 1, 4, 1, 5]);
        assert_eq!(word.subword(&[1, 3, 5]), w(&[3, 4, 5]));
        assert_eq!(word.subword(&[2]), w(&[1]));
        assert_eq!(word.subword(&[]), Word::empty());
    }
}
