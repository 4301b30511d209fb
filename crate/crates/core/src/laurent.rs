//! Exact multivariate Laurent polynomial arithmetic over the integers.
//!
//! Coefficients are arbitrary-precision integers and exponents may be
//! negative. Terms are stored in a map sorted under graded-lexicographic
//! order, so iteration is deterministic and the leading term is the maximal
//! key. Exact division shifts to ordinary polynomials and runs the
//! leading-term elimination loop; a failed step reports
//! [`Error::NonExactDivision`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Result};

/// Exponent vector of one Laurent monomial.
///
/// Ordered graded-lexicographically: total degree first, then entrywise.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Exponents(Vec<i64>);

impl Exponents {
    pub fn new(e: Vec<i64>) -> Self {
        Exponents(e)
    }

    pub fn zero(nvars: usize) -> Self {
        Exponents(vec![0; nvars])
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[var] = 1;
        Exponents(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<i64>> for Exponents {
    fn from(e: Vec<i64>) -> Self {
        Exponents(e)
    }
}

/// A Laurent polynomial with integer coefficients.
///
/// Invariants: no stored coefficient is zero, and every exponent vector has
/// length [`LaurentPoly::nvars`]. The zero polynomial has an empty term map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Exponents::zero(nvars), c);
        }
        p
    }

    /// The monomial `x_var` (0-based variable index).
    pub fn variable(nvars: usize, var: usize) -> Self {
        Self::monomial(nvars, Exponents::unit(nvars, var), BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: impl Into<Exponents>, coeff: impl Into<BigInt>) -> Self {
        let exps = exps.into();
        assert_eq!(exps.len(), nvars, "exponent vector length mismatch");
        let mut p = Self::zero(nvars);
        let c = coeff.into();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num_terms() == 1 && {
            let (e, c) = self.terms.iter().next().unwrap();
            e.is_zero() && c.is_one()
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, exps: &Exponents) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by the monomial with the given exponent shift.
    pub fn shift(&self, delta: &Exponents) -> Self {
        assert_eq!(delta.len(), self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(delta), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms. `None` for zero.
    pub fn min_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut min = first.0.clone();
        for e in it {
            for (m, &v) in min.iter_mut().zip(e.as_slice()) {
                if v < *m {
                    *m = v;
                }
            }
        }
        Some(Exponents(min))
    }

    /// Exact quotient `self / divisor`.
    ///
    /// The divisor must be nonzero. If it is a single term the division is
    /// termwise; otherwise both operands are shifted to ordinary polynomials
    /// and divided by leading-term elimination under graded-lex order. Any
    /// failing step yields [`Error::NonExactDivision`].
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        assert_eq!(self.nvars, divisor.nvars, "variable count mismatch");
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if divisor.num_terms() == 1 {
            let (de, dc) = divisor.leading_term().unwrap();
            let mut out = Self::zero(self.nvars);
            for (e, c) in &self.terms {
                if (c % dc).is_zero() {
                    out.terms.insert(e.sub(de), c / dc);
                } else {
                    return Err(Error::NonExactDivision);
                }
            }
            return Ok(out);
        }

        let fa = self.min_exponents().unwrap();
        let ga = divisor.min_exponents().unwrap();
        let mut rem = self.shift(&Exponents(fa.0.iter().map(|e| -e).collect()));
        let g = divisor.shift(&Exponents(ga.0.iter().map(|e| -e).collect()));
        let (glead, gcoeff) = {
            let (e, c) = g.leading_term().unwrap();
            (e.clone(), c.clone())
        };

        let mut quot = Self::zero(self.nvars);
        while !rem.is_zero() {
            let (rlead, rcoeff) = {
                let (e, c) = rem.leading_term().unwrap();
                (e.clone(), c.clone())
            };
            let de = rlead.sub(&glead);
            if de.as_slice().iter().any(|&e| e < 0) || !(&rcoeff % &gcoeff).is_zero() {
                return Err(Error::NonExactDivision);
            }
            let t = Self::monomial(self.nvars, de, &rcoeff / &gcoeff);
            rem = rem.sub(&t.mul(&g));
            quot = quot.add(&t);
        }
        Ok(quot.shift(&fa.sub(&ga)))
    }

    /// Write `self` as a fraction `numerator / monomial` in lowest terms.
    pub fn reduced_form(&self) -> Result<ReducedFraction> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let min = self.min_exponents().unwrap();
        let den: Vec<i64> = min.as_slice().iter().map(|&e| (-e).max(0)).collect();
        let numerator = self.shift(&Exponents(den.clone()));
        Ok(ReducedFraction {
            numerator,
            denominator: Exponents(den),
        })
    }

    /// Evaluate at the 0/1 points with a single zero coordinate and require
    /// every value to be positive.
    ///
    /// Requires all exponents nonnegative; the value at the point with 0 in
    /// position `i` is the sum of the coefficients of the terms not
    /// involving `x_i`.
    pub fn positivity_condition(&self) -> Result<bool> {
        for e in self.terms.keys() {
            if e.as_slice().iter().any(|&v| v < 0) {
                return Err(Error::NegativeExponent);
            }
        }
        for i in 0..self.nvars {
            let mut value = BigInt::zero();
            for (e, c) in &self.terms {
                if e.as_slice()[i] == 0 {
                    value += c;
                }
            }
            if !value.is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Deterministic total order: compare term lists in descending
    /// graded-lex order, entry by entry.
    pub fn cmp_order(&self, other: &Self) -> Ordering {
        self.nvars.cmp(&other.nvars).then_with(|| {
            let mut a = self.terms.iter().rev();
            let mut b = other.terms.iter().rev();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((ea, ca)), Some((eb, cb))) => {
                        let o = ea.cmp(eb).then_with(|| ca.cmp(cb));
                        if o != Ordering::Equal {
                            return o;
                        }
                    }
                }
            }
        })
    }

    /// JSON encoding: a list of `[coefficient-string, exponent-list]` pairs
    /// in descending graded-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms_desc()
                .map(|(e, c)| {
                    serde_json::json!([
                        c.to_string(),
                        e.as_slice().to_vec()
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value, nvars: usize) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected a JSON array of terms".into()))?;
        let mut out = Self::zero(nvars);
        for t in arr {
            let pair = t
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse("term must be [coefficient, exponents]".into()))?;
            let c: BigInt = pair[0]
                .as_str()
                .ok_or_else(|| Error::Parse("coefficient must be a string".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad coefficient".into()))?;
            let exps = pair[1]
                .as_array()
                .ok_or_else(|| Error::Parse("exponents must be an array".into()))?;
            if exps.len() != nvars {
                return Err(Error::Parse(format!(
                    "exponent list has length {}, expected {nvars}",
                    exps.len()
                )));
            }
            let mut e = Vec::with_capacity(nvars);
            for x in exps {
                e.push(
                    x.as_i64()
                        .ok_or_else(|| Error::Parse("bad exponent".into()))?,
                );
            }
            if out.terms.contains_key(&Exponents(e.clone())) {
                return Err(Error::Parse("duplicate exponent vector".into()));
            }
            if c.is_zero() {
                return Err(Error::Parse("zero coefficient stored".into()));
            }
            out.terms.insert(Exponents(e), c);
        }
        Ok(out)
    }

    /// Parse the human-readable format produced by `Display`.
    ///
    /// Grammar: terms joined by `+` or `-`; each term is an optional integer
    /// coefficient, an optional `*`, and variable powers `x<k>` or
    /// `x<k>^<e>` separated by whitespace or `*`. Variables are 1-based in
    /// the text.
    pub fn parse(input: &str, nvars: usize) -> Result<Self> {
        Parser {
            chars: input.chars().peekable(),
            nvars,
        }
        .parse_poly()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            let mut factors = String::new();
            for (i, &ex) in e.as_slice().iter().enumerate() {
                if ex == 0 {
                    continue;
                }
                if !factors.is_empty() {
                    factors.push(' ');
                }
                factors.push_str(&format!("x{}", i + 1));
                if ex != 1 {
                    factors.push_str(&format!("^{ex}"));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{factors}")?;
            } else {
                write!(f, "{mag} * {factors}")?;
            }
        }
        Ok(())
    }
}

// Display-based Debug so test failures stay readable.
impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    nvars: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn parse_uint(&mut self) -> Result<String> {
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap());
        }
        if s.is_empty() {
            Err(Error::Parse("expected digits".into()))
        } else {
            Ok(s)
        }
    }

    fn parse_poly(&mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.nvars);
        self.skip_ws();
        let mut sign = match self.chars.peek() {
            Some('-') => {
                self.chars.next();
                true
            }
            Some('+') => {
                self.chars.next();
                false
            }
            _ => false,
        };
        loop {
            self.skip_ws();
            let (e, c) = self.parse_term()?;
            out.add_term(e, if sign { -c } else { c });
            self.skip_ws();
            match self.chars.next() {
                None => break,
                Some('+') => sign = false,
                Some('-') => sign = true,
                Some(c) => return Err(Error::Parse(format!("unexpected character '{c}'"))),
            }
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<(Exponents, BigInt)> {
        let mut coeff = BigInt::one();
        let mut saw_anything = false;
        if matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.parse_uint()?.parse().unwrap();
            saw_anything = true;
        }
        let mut exps = vec![0i64; self.nvars];
        loop {
            self.skip_ws();
            if matches!(self.chars.peek(), Some('*')) {
                self.chars.next();
                self.skip_ws();
            }
            if !matches!(self.chars.peek(), Some('x')) {
                break;
            }
            self.chars.next();
            let var: usize = self
                .parse_uint()?
                .parse()
                .map_err(|_| Error::Parse("bad variable index".into()))?;
            if var == 0 || var > self.nvars {
                return Err(Error::Parse(format!(
                    "variable x{var} out of range for {} variables",
                    self.nvars
                )));
            }
            let mut exp: i64 = 1;
            if matches!(self.chars.peek(), Some('^')) {
                self.chars.next();
                let neg = if matches!(self.chars.peek(), Some('-')) {
                    self.chars.next();
                    true
                } else {
                    false
                };
                exp = self
                    .parse_uint()?
                    .parse()
                    .map_err(|_| Error::Parse("bad exponent".into()))?;
                if neg {
                    exp = -exp;
                }
            }
            exps[var - 1] += exp;
            saw_anything = true;
        }
        if !saw_anything {
            return Err(Error::Parse("empty term".into()));
        }
        Ok((Exponents(exps), coeff))
    }
}

/// A Laurent polynomial written as `numerator / x^d` in lowest terms.
///
/// The numerator has only nonnegative exponents and the denominator vector
/// is nonnegative; whenever `d_i > 0` the numerator has a term with
/// exponent 0 at `i`, so numerator and denominator share no variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReducedFraction {
    numerator: LaurentPoly,
    denominator: Exponents,
}

impl ReducedFraction {
    pub fn new(numerator: LaurentPoly, denominator: impl Into<Exponents>) -> Self {
        let denominator = denominator.into();
        assert_eq!(numerator.nvars(), denominator.len());
        assert!(denominator.as_slice().iter().all(|&d| d >= 0));
        ReducedFraction {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Exponents {
        &self.denominator
    }

    /// Multiply back out to the underlying Laurent polynomial.
    pub fn reconstruct(&self) -> LaurentPoly {
        let neg = Exponents(self.denominator.as_slice().iter().map(|&d| -d).collect());
        self.numerator.shift(&neg)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.as_slice().to_vec(),
        })
    }
}

impl Ord for ReducedFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.denominator
            .cmp(&other.denominator)
            .then_with(|| self.numerator.cmp_order(&other.numerator))
    }
}

impl PartialOrd for ReducedFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_zero() {
            return write!(f, "{}", self.numerator);
        }
        let mut den = String::new();
        for (i, &d) in self.denominator.as_slice().iter().enumerate() {
            if d == 0 {
                continue;
            }
            if !den.is_empty() {
                den.push(' ');
            }
            den.push_str(&format!("x{}", i + 1));
            if d != 1 {
                den.push_str(&format!("^{d}"));
            }
        }
        if self.numerator.num_terms() > 1 {
            write!(f, "({}) / {}", self.numerator, den)
        } else {
            write!(f, "{} / {}", self.numerator, den)
        }
    }
}

impl fmt::Debug for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn add_and_mul_basics() {
        let n = 3;
        let x2 = LaurentPoly::variable(n, 1);
        let one = LaurentPoly::one(n);
        assert_eq!(x2.add(&one), p("1 + x2", n));

        let x1 = LaurentPoly::variable(n, 0);
        let x1inv = LaurentPoly::monomial(n, vec![-1, 0, 0], 1);
        assert_eq!(x1.mul(&x1inv), LaurentPoly::one(n));

        let b = p("1 + x2", n);
        assert_eq!(b.mul(&b), p("1 + 2 x2 + x2^2", n));
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let n = 2;
        let f = p("1 + x1", n);
        let g = f.sub(&p("x1", n));
        assert_eq!(g, LaurentPoly::one(n));
        assert_eq!(f.sub(&f), LaurentPoly::zero(n));
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn exact_div_by_monomial() {
        let n = 3;
        let f = p("1 + x2", n);
        let x1 = LaurentPoly::variable(n, 0);
        let q = f.exact_div(&x1).unwrap();
        assert_eq!(q, p("x1^-1 + x1^-1 x2", n));
        assert_eq!(q.mul(&x1), f);
    }

    #[test]
    fn exact_div_identity_and_square() {
        let n = 3;
        let f = p("x1^-2 x2 + 5 x3", n);
        assert_eq!(f.exact_div(&LaurentPoly::one(n)).unwrap(), f);

        let sq = p("1 + 2 x2 + x2^2", n);
        assert_eq!(sq.exact_div(&p("1 + x2", n)).unwrap(), p("1 + x2", n));
    }

    #[test]
    fn exact_div_detects_failure() {
        let n = 3;
        let err = p("1 + x2", n).exact_div(&p("1 + x1", n));
        assert!(matches!(err, Err(Error::NonExactDivision)));

        let err = p("3 x1", n).exact_div(&p("2", n));
        assert!(matches!(err, Err(Error::NonExactDivision)));
    }

    #[test]
    fn reduced_form_examples() {
        let n = 3;
        let f = p("x1^-1 + x1^-1 x2", n);
        let rf = f.reduced_form().unwrap();
        assert_eq!(rf.numerator(), &p("1 + x2", n));
        assert_eq!(rf.denominator().as_slice(), &[1, 0, 0]);
        assert_eq!(rf.reconstruct(), f);

        let x1 = LaurentPoly::variable(n, 0);
        let rf = x1.reduced_form().unwrap();
        assert_eq!(rf.numerator(), &x1);
        assert_eq!(rf.denominator().as_slice(), &[0, 0, 0]);

        // expansion of ((1+x2)x1 + (1+x2)x3) / (x1 x2 x3)
        let num = p("x1 + x1 x2 + x3 + x2 x3", n);
        let den = LaurentPoly::monomial(n, vec![1, 1, 1], 1);
        let f = num.exact_div(&den).unwrap();
        let rf = f.reduced_form().unwrap();
        assert_eq!(rf.denominator().as_slice(), &[1, 1, 1]);
        assert_eq!(rf.numerator(), &num);

        assert!(matches!(
            LaurentPoly::zero(n).reduced_form(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn positivity_condition_examples() {
        let n = 3;
        assert!(p("1 + x2", n).positivity_condition().unwrap());
        assert!(!p("x1 + x1 x2", n).positivity_condition().unwrap());
        assert!(p("1", n).positivity_condition().unwrap());
        assert!(matches!(
            p("x1^-1", n).positivity_condition(),
            Err(Error::NegativeExponent)
        ));
    }

    #[test]
    fn coefficient_positivity() {
        let n = 2;
        assert!(p("1 + x2", n).coefficients_positive());
        assert!(!p("1 - x2", n).coefficients_positive());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let n = 3;
        let f = p("2 x1^2 x3^-1 - 7 + x2", n);
        assert_eq!(f.to_string(), "2 * x1^2 x3^-1 + x2 - 7");
        assert_eq!(LaurentPoly::parse(&f.to_string(), n).unwrap(), f);
        assert_eq!(LaurentPoly::zero(n).to_string(), "0");
        assert_eq!(p("0", n), LaurentPoly::zero(n));
    }

    #[test]
    fn json_round_trip() {
        let n = 3;
        let f = p("12345678901234567890 x1 - x2^3 + 4", n);
        let v = f.to_json();
        assert_eq!(LaurentPoly::from_json(&v, n).unwrap(), f);
    }

    #[test]
    fn reduced_fraction_display() {
        let n = 3;
        let f = p("x1^-1 + x1^-1 x2", n);
        assert_eq!(f.reduced_form().unwrap().to_string(), "(x2 + 1) / x1");
        let g = LaurentPoly::variable(n, 2);
        assert_eq!(g.reduced_form().unwrap().to_string(), "x3");
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
        let term = (
            proptest::collection::vec(-3i64..=3, nvars),
            -5i64..=5i64,
        );
        proptest::collection::vec(term, 0..5).prop_map(move |ts| {
            LaurentPoly::from_terms(
                nvars,
                ts.into_iter()
                    .map(|(e, c)| (Exponents::new(e), BigInt::from(c))),
            )
        })
    }

    fn arb_nonneg_poly(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
        let term = (
            proptest::collection::vec(0i64..=3, nvars),
            prop_oneof![-5i64..=-1, 1i64..=5],
        );
        proptest::collection::vec(term, 1..5).prop_map(move |ts| {
            LaurentPoly::from_terms(
                nvars,
                ts.into_iter()
                    .map(|(e, c)| (Exponents::new(e), BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn division_round_trip(q in arb_poly(3), g in arb_poly(3)) {
            prop_assume!(!g.is_zero());
            let f = q.mul(&g);
            let back = f.exact_div(&g).unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn reduced_form_round_trip(f in arb_poly(3)) {
            prop_assume!(!f.is_zero());
            let rf = f.reduced_form().unwrap();
            prop_assert_eq!(rf.reconstruct(), f);
            for (i, &d) in rf.denominator().as_slice().iter().enumerate() {
                prop_assert!(d >= 0);
                if d > 0 {
                    prop_assert!(rf.numerator().terms().any(|(e, _)| e.as_slice()[i] == 0));
                }
            }
        }

        #[test]
        fn positivity_implies_reduced_quotients(f in arb_nonneg_poly(3), m in proptest::collection::vec(0i64..=2, 3)) {
            prop_assume!(!f.is_zero());
            if f.positivity_condition().unwrap() {
                let shifted = f.shift(&Exponents::new(m.iter().map(|&v| -v).collect()));
                let rf = shifted.reduced_form().unwrap();
                prop_assert_eq!(rf.numerator(), &f);
            }
        }

        #[test]
        fn display_parse_round_trip(f in arb_poly(3)) {
            let s = f.to_string();
            prop_assert_eq!(LaurentPoly::parse(&s, 3).unwrap(), f);
        }
    }
}
