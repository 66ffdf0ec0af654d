//! Exact sparse polynomials in the variables `q`, `t`, `x` over the
//! integers.
//!
//! Terms live in a `BTreeMap` keyed by the exponent triple
//! `(e_q, e_t, e_x)`, so the canonical form is unique, equality is
//! structural, and serialization order is the lexicographic order on
//! exponents. No zero coefficient is ever stored.
//!
//! The coefficient type is generic over the integer-like scalars of
//! `num-traits`; every arithmetic step is checked, and overflow surfaces as
//! [`PolyError::Overflow`] rather than wrapping. The crate root fixes the
//! default scalar with `type MultiPoly = Poly<i64>`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exponent triple `(e_q, e_t, e_x)`.
pub type Exponents = [u32; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("coefficient overflow in polynomial arithmetic")]
    Overflow,
}

/// Scalars usable as polynomial coefficients: exact signed integers with
/// checked arithmetic (`i64`, `i128`, big integers, ...).
pub trait Coeff:
    Clone
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
{
}

impl<T> Coeff for T where
    T: Clone
        + Eq
        + Ord
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
{
}

/// The three variables, in the order they index exponent triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    Q,
    T,
    X,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::T, Var::X];

    pub fn index(self) -> usize {
        match self {
            Var::Q => 0,
            Var::T => 1,
            Var::X => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::X => "x",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Var {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "q" => Ok(Var::Q),
            "t" => Ok(Var::T),
            "x" => Ok(Var::X),
            other => Err(format!("unknown variable {other:?}")),
        }
    }
}

/// A sparse exact polynomial in `q`, `t`, `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<C: Coeff> {
    terms: BTreeMap<Exponents, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0, 0, 0], c);
        }
        Poly { terms }
    }

    /// The variable `v` as a polynomial.
    pub fn var(v: Var) -> Self {
        Poly::term(Self::unit_exps(v, 1), C::one())
    }

    /// `q^a t^b x^c` with coefficient 1.
    pub fn monomial(e_q: u32, e_t: u32, e_x: u32) -> Self {
        Poly::term([e_q, e_t, e_x], C::one())
    }

    /// A single term with the given exponents and coefficient.
    pub fn term(exps: Exponents, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { terms }
    }

    /// Accumulate terms, combining duplicates with checked addition.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Exponents, C)>,
    ) -> Result<Self, PolyError> {
        let mut poly = Poly::zero();
        for (exps, c) in terms {
            poly.add_term(exps, c)?;
        }
        Ok(poly)
    }

    fn unit_exps(v: Var, e: u32) -> Exponents {
        let mut exps = [0, 0, 0];
        exps[v.index()] = e;
        exps
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    /// Largest exponent of `v` across all terms.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Exponents, c: C) -> Result<(), PolyError> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let sum = existing.checked_add(&c).ok_or(PolyError::Overflow)?;
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (exps, c) in &other.terms {
            out.add_term(*exps, c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            let negated = C::zero().checked_sub(c).ok_or(PolyError::Overflow)?;
            terms.insert(*exps, negated);
        }
        Ok(Poly { terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg()?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let c = ca.checked_mul(cb).ok_or(PolyError::Overflow)?;
                out.add_term(exps, c)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &C) -> Result<Self, PolyError> {
        if factor.is_zero() {
            return Ok(Poly::zero());
        }
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            let scaled = c.checked_mul(factor).ok_or(PolyError::Overflow)?;
            terms.insert(*exps, scaled);
        }
        Ok(Poly { terms })
    }

    pub fn pow(&self, e: u32) -> Result<Self, PolyError> {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Replace every occurrence of `var` by `replacement`, exactly.
    /// Substituting a variable by itself is the identity.
    pub fn substitute(&self, var: Var, replacement: &Self) -> Result<Self, PolyError> {
        let vi = var.index();
        let max_e = self.terms.keys().map(|e| e[vi]).max().unwrap_or(0);
        let mut powers: Vec<Poly<C>> = Vec::with_capacity(max_e as usize + 1);
        powers.push(Poly::one());
        for k in 1..=max_e as usize {
            let next = powers[k - 1].mul(replacement)?;
            powers.push(next);
        }
        let mut out = Poly::zero();
        for (exps, c) in &self.terms {
            let mut rest = *exps;
            rest[vi] = 0;
            let base = Poly::term(rest, c.clone());
            out = out.add(&base.mul(&powers[exps[vi] as usize])?)?;
        }
        Ok(out)
    }

    /// Evaluate at a full integer assignment.
    pub fn specialize_int(&self, q: &C, t: &C, x: &C) -> Result<C, PolyError> {
        let vals = [q, t, x];
        let mut total = C::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (vi, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.checked_mul(vals[vi]).ok_or(PolyError::Overflow)?;
                }
            }
            total = total.checked_add(&term).ok_or(PolyError::Overflow)?;
        }
        Ok(total)
    }

    /// Coefficient of the given exponent triple; zero when absent.
    pub fn coefficient(&self, exps: Exponents) -> C {
        self.terms.get(&exps).cloned().unwrap_or_else(C::zero)
    }

    /// Rows of coefficients grouped by the exponent of `v`: for each
    /// exponent present, the polynomial in the remaining variables.
    pub fn coefficient_rows(&self, v: Var) -> Vec<(u32, Poly<C>)> {
        let vi = v.index();
        let mut rows: BTreeMap<u32, Poly<C>> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let mut rest = *exps;
            rest[vi] = 0;
            rows.entry(exps[vi])
                .or_insert_with(Poly::zero)
                .terms
                .insert(rest, c.clone());
        }
        rows.into_iter().collect()
    }

    /// For a polynomial involving only `v`: the lowest exponent present and
    /// the dense coefficient list from there up to the highest exponent.
    /// `None` when another variable occurs; the zero polynomial gives
    /// `Some((0, []))`.
    pub fn coefficients_in(&self, v: Var) -> Option<(u32, Vec<C>)> {
        let vi = v.index();
        for exps in self.terms.keys() {
            for (j, &e) in exps.iter().enumerate() {
                if j != vi && e > 0 {
                    return None;
                }
            }
        }
        if self.terms.is_empty() {
            return Some((0, Vec::new()));
        }
        let lo = self.terms.keys().map(|e| e[vi]).min().unwrap();
        let hi = self.terms.keys().map(|e| e[vi]).max().unwrap();
        let mut dense = vec![C::zero(); (hi - lo + 1) as usize];
        for (exps, c) in &self.terms {
            dense[(exps[vi] - lo) as usize] = c.clone();
        }
        Some((lo, dense))
    }

    /// Sum of all coefficients, i.e. the value at `q = t = x = 1`.
    pub fn coefficient_sum(&self) -> Result<C, PolyError> {
        let one = C::one();
        self.specialize_int(&one, &one, &one)
    }

    /// Terms as serializable records, in canonical order.
    pub fn term_records(&self) -> Vec<TermRecord<C>> {
        self.terms
            .iter()
            .map(|(exps, c)| TermRecord {
                q: exps[0],
                t: exps[1],
                x: exps[2],
                c: c.clone(),
            })
            .collect()
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn q_int<C: Coeff>(n: usize) -> Poly<C> {
    let mut terms = BTreeMap::new();
    for e in 0..n {
        terms.insert([e as u32, 0, 0], C::one());
    }
    Poly { terms }
}

/// One term of the JSON form `{"terms": [{"q": .., "t": .., "x": .., "c": ..}, ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermRecord<C> {
    pub q: u32,
    pub t: u32,
    pub x: u32,
    pub c: C,
}

impl<C: Coeff + Serialize> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<C> {
            terms: Vec<TermRecord<C>>,
        }
        Wire {
            terms: self.term_records(),
        }
        .serialize(serializer)
    }
}

impl<'de, C: Coeff + Deserialize<'de>> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire<C> {
            terms: Vec<TermRecord<C>>,
        }
        let wire = Wire::<C>::deserialize(deserializer)?;
        Poly::from_terms(wire.terms.into_iter().map(|t| ([t.q, t.t, t.x], t.c)))
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Human form such as `q^2*t + 2*q*t^2 + t^3`: terms by ascending total
    /// degree (ties broken by descending exponent triple), with exponent-1
    /// and coefficient-1 elision.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<(&Exponents, &C)> = self.terms.iter().collect();
        ordered.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            da.cmp(&db).then_with(|| eb.cmp(ea))
        });
        for (i, (exps, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let abs = c.abs();
            let mono = format_monomial(exps);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn format_monomial(exps: &Exponents) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        let e = exps[v.index()];
        match e {
            0 => {}
            1 => parts.push(v.as_str().to_string()),
            _ => parts.push(format!("{}^{}", v.as_str(), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<i64>;

    fn q() -> P {
        P::var(Var::Q)
    }
    fn t() -> P {
        P::var(Var::T)
    }

    #[test]
    fn binomial_square() {
        let sum = q().add(&t()).unwrap();
        let sq = sum.mul(&sum).unwrap();
        let expected = P::from_terms([([2, 0, 0], 1), ([1, 1, 0], 2), ([0, 2, 0], 1)]).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn additive_identity_and_distributivity() {
        let a = P::from_terms([([0, 2, 0], 1), ([1, 1, 0], 1)]).unwrap(); // t^2 + q*t
        assert_eq!(a.add(&P::zero()).unwrap(), a);
        let prod = a.mul(&q()).unwrap();
        let expected = P::from_terms([([1, 2, 0], 1), ([2, 1, 0], 1)]).unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn q_int_values() {
        assert_eq!(q_int::<i64>(0), P::zero());
        assert_eq!(q_int::<i64>(1), P::one());
        let three = P::from_terms([([0, 0, 0], 1), ([1, 0, 0], 1), ([2, 0, 0], 1)]).unwrap();
        assert_eq!(q_int::<i64>(3), three);
    }

    #[test]
    fn substitute_examples() {
        // q*t^2 with t -> q gives q^3
        let a = P::term([1, 2, 0], 1);
        assert_eq!(a.substitute(Var::T, &q()).unwrap(), P::term([3, 0, 0], 1));
        // t with t -> q^2 t
        let qqt = P::term([2, 1, 0], 1);
        assert_eq!(t().substitute(Var::T, &qqt).unwrap(), qqt);
        // substituting a variable by itself is the identity
        let b = P::from_terms([([1, 2, 3], 4), ([0, 1, 0], -2)]).unwrap();
        assert_eq!(b.substitute(Var::T, &t()).unwrap(), b);
    }

    #[test]
    fn substitution_turns_sb3_into_dim3() {
        // t^3 + 2qt^2 + q^2 t^2 + q^2 t  |->  4q^3 + q^4 under t -> q
        let sb3 = P::from_terms([
            ([0, 3, 0], 1),
            ([1, 2, 0], 2),
            ([2, 2, 0], 1),
            ([2, 1, 0], 1),
        ])
        .unwrap();
        let dim3 = sb3.substitute(Var::T, &q()).unwrap();
        let expected = P::from_terms([([3, 0, 0], 4), ([4, 0, 0], 1)]).unwrap();
        assert_eq!(dim3, expected);
    }

    #[test]
    fn specialization() {
        let a = P::from_terms([([2, 0, 0], 1), ([1, 1, 0], 2)]).unwrap(); // q^2 + 2qt
        assert_eq!(a.specialize_int(&1, &1, &1).unwrap(), 3);
        assert_eq!(a.coefficient_sum().unwrap(), 3);
        assert_eq!(a.specialize_int(&2, &3, &1).unwrap(), 4 + 12);
    }

    #[test]
    fn coefficient_extraction() {
        let sb3 = P::from_terms([
            ([0, 3, 0], 1),
            ([1, 2, 0], 2),
            ([2, 2, 0], 1),
            ([2, 1, 0], 1),
        ])
        .unwrap();
        assert_eq!(sb3.coefficient([1, 2, 0]), 2);
        assert_eq!(sb3.coefficient([5, 5, 5]), 0);

        // (q+t)^2 * t by t-degree: q^2 at t^1, 2q at t^2, 1 at t^3
        let p = q().add(&t()).unwrap().pow(2).unwrap().mul(&t()).unwrap();
        let rows = p.coefficient_rows(Var::T);
        assert_eq!(
            rows,
            vec![
                (1, P::term([2, 0, 0], 1)),
                (2, P::term([1, 0, 0], 2)),
                (3, P::one()),
            ]
        );
    }

    #[test]
    fn univariate_coefficients() {
        let p = P::from_terms([([2, 0, 0], 4), ([4, 0, 0], 7)]).unwrap();
        assert_eq!(p.coefficients_in(Var::Q), Some((2, vec![4, 0, 7])));
        assert_eq!(p.coefficients_in(Var::T), None);
        assert_eq!(P::zero().coefficients_in(Var::X), Some((0, vec![])));
    }

    #[test]
    fn overflow_is_detected() {
        let big = P::constant(i64::MAX);
        assert_eq!(big.add(&P::one()), Err(PolyError::Overflow));
        assert_eq!(big.mul(&P::constant(2)), Err(PolyError::Overflow));
        assert_eq!(
            big.specialize_int(&1, &1, &2).map(|_| ()),
            Ok(())
        );
        let sq = P::constant(i64::MAX).mul(&P::constant(i64::MAX));
        assert_eq!(sq, Err(PolyError::Overflow));
    }

    #[test]
    fn display_forms() {
        let p = P::from_terms([([2, 1, 0], 1), ([1, 2, 0], 2), ([0, 3, 0], 1)]).unwrap();
        assert_eq!(p.to_string(), "q^2*t + 2*q*t^2 + t^3");
        let m2 = P::from_terms([([0, 0, 2], 1), ([1, 1, 1], 1)]).unwrap();
        assert_eq!(m2.to_string(), "x^2 + q*t*x");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::constant(-3).to_string(), "-3");
        let mixed = P::from_terms([([1, 0, 0], -1), ([0, 0, 0], 1)]).unwrap();
        assert_eq!(mixed.to_string(), "1 - q");
    }

    #[test]
    fn json_round_trip_and_canonical_order() {
        let p = P::from_terms([([1, 2, 0], 2), ([0, 3, 0], 1), ([2, 1, 0], 1)]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"q":0,"t":3,"x":0,"c":1},{"q":1,"t":2,"x":0,"c":2},{"q":2,"t":1,"x":0,"c":1}]}"#
        );
        let back: P = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = P> {
            proptest::collection::vec(
                ((0u32..4, 0u32..4, 0u32..3), -6i64..7),
                0..6,
            )
            .prop_map(|terms| {
                P::from_terms(terms.into_iter().map(|((a, b, c), v)| ([a, b, c], v))).unwrap()
            })
        }

        proptest! {
            #[test]
            fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                let ab = a.add(&b).unwrap();
                prop_assert_eq!(ab.clone(), b.add(&a).unwrap());
                prop_assert_eq!(
                    ab.add(&c).unwrap(),
                    a.add(&b.add(&c).unwrap()).unwrap()
                );
                prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                prop_assert_eq!(
                    a.mul(&b).unwrap().mul(&c).unwrap(),
                    a.mul(&b.mul(&c).unwrap()).unwrap()
                );
                prop_assert_eq!(
                    a.mul(&b.add(&c).unwrap()).unwrap(),
                    a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
                );
                prop_assert_eq!(a.mul(&P::one()).unwrap(), a.clone());
                prop_assert_eq!(a.add(&P::zero()).unwrap(), a.clone());
                prop_assert_eq!(a.sub(&a).unwrap(), P::zero());
            }

            #[test]
            fn substitute_commutes_with_arithmetic(a in arb_poly(), b in arb_poly()) {
                let repl = P::term([1, 1, 0], 1); // t -> q*t
                let lhs = a.add(&b).unwrap().substitute(Var::T, &repl).unwrap();
                let rhs = a
                    .substitute(Var::T, &repl)
                    .unwrap()
                    .add(&b.substitute(Var::T, &repl).unwrap())
                    .unwrap();
                prop_assert_eq!(lhs, rhs);
                let lhs = a.mul(&b).unwrap().substitute(Var::T, &repl).unwrap();
                let rhs = a
                    .substitute(Var::T, &repl)
                    .unwrap()
                    .mul(&b.substitute(Var::T, &repl).unwrap())
                    .unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn all_ones_specialization_is_coefficient_sum(a in arb_poly()) {
                let direct: i64 = a.terms().map(|(_, c)| *c).sum();
                prop_assert_eq!(a.coefficient_sum().unwrap(), direct);
            }
        }
    }
}
