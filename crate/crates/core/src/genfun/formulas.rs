//! Closed forms and recursions for the spread/block generating functions,
//! and the Catalan recursions for the inversion and major-index polynomials
//! of 321-avoiding permutations.
//!
//! Every function here computes purely from a formula; the enumeration
//! oracles live in the parent module, and `verify` compares the two.

use crate::poly::{q_int, PolyError, Var};
use crate::MultiPoly;

type P = MultiPoly;

fn tv() -> P {
    P::var(Var::T)
}

fn xv() -> P {
    P::var(Var::X)
}

fn mono(q: usize, t: usize, x: usize) -> P {
    P::monomial(q as u32, t as u32, x as u32)
}

fn term(c: i64, q: usize, t: usize, x: usize) -> P {
    P::term([q as u32, t as u32, x as u32], c)
}

/// `SB_n(12/3) = t^n + Σ_{i=1}^{n-1} t^i q^{n-i} [i]_q`. Also serves
/// `SB_n(1/23)`, which `tau` transports onto the same distribution.
pub fn sb_12_3(n: usize) -> Result<P, PolyError> {
    let mut acc = mono(0, n, 0);
    for i in 1..n {
        acc = acc.add(&mono(n - i, i, 0).mul(&q_int(i))?)?;
    }
    Ok(acc)
}

/// `SB_n(13/2) = (q + t)^{n-1} t` for `n >= 1`, with `SB_0 = 1`.
pub fn sb_13_2(n: usize) -> Result<P, PolyError> {
    if n == 0 {
        return Ok(P::one());
    }
    mono(1, 0, 0).add(&tv())?.pow(n as u32 - 1)?.mul(&tv())
}

/// `SB_n(1/2/3)` for `n >= 2`, split by the final letter of the word.
///
/// Words ending in 1 contribute
/// `q^{n-1} t + q^{n-1} t^2 ((n-2) + Σ_{i=2}^{n-2} Σ_{j=i+1}^{n-1} 2^{j-i-1} q^{j-i})`
/// (iterating over the first and last positions of the letter 2), and words
/// ending in 2 contribute
/// `t^2 ((n-1) q^{n-2} + Σ_{i=2}^{n-2} Σ_{j=i+1}^{n-1} 2^{j-i-1} q^{n-1+j-i})`.
pub fn sb_1_2_3(n: usize) -> Result<P, PolyError> {
    assert!(n >= 2, "closed form applies from n = 2");
    let mut ending_one = term(n as i64 - 2, 0, 0, 0);
    let mut ending_two = term(n as i64 - 1, n - 2, 0, 0);
    for i in 2..=n.saturating_sub(2) {
        for j in i + 1..=n - 1 {
            let words = 1i64 << (j - i - 1);
            ending_one = ending_one.add(&term(words, j - i, 0, 0))?;
            ending_two = ending_two.add(&term(words, n - 1 + j - i, 0, 0))?;
        }
    }
    let mut acc = mono(n - 1, 1, 0);
    acc = acc.add(&mono(n - 1, 2, 0).mul(&ending_one)?)?;
    acc.add(&mono(0, 2, 0).mul(&ending_two)?)
}

/// Catalan recursion for the noncrossing class:
/// `SB_n(13/24) = t SB_{n-1} + Σ_{k=2}^n q^{k-1} SB_{k-2} SB_{n-k+1}`.
pub fn sb_13_24_seq(n_max: usize) -> Result<Vec<P>, PolyError> {
    let mut seq = vec![P::one()];
    if n_max >= 1 {
        seq.push(tv());
    }
    for n in 2..=n_max {
        let mut acc = tv().mul(&seq[n - 1])?;
        for k in 2..=n {
            let product = seq[k - 2].mul(&seq[n - k + 1])?;
            acc = acc.add(&mono(k - 1, 0, 0).mul(&product)?)?;
        }
        seq.push(acc);
    }
    Ok(seq)
}

/// Fibonacci recursion for `Π_n(13/2, 123)`:
/// `SB_n = t SB_{n-1} + q t SB_{n-2}`.
pub fn sb_fibonacci_seq(n_max: usize) -> Result<Vec<P>, PolyError> {
    let mut seq = vec![P::one()];
    if n_max >= 1 {
        seq.push(tv());
    }
    for n in 2..=n_max {
        let acc = tv().mul(&seq[n - 1])?;
        let two_back = mono(1, 1, 0).mul(&seq[n - 2])?;
        seq.push(acc.add(&two_back)?);
    }
    Ok(seq)
}

/// Motzkin recursion for `Π_n(123, 13/24)`:
/// `SB_n = t SB_{n-1} + Σ_{k=0}^{n-2} q^{k+1} t SB_k SB_{n-k-2}`.
///
/// The `literal` variant drops the factor `t` inside the sum. It omits the
/// block formed by the two 1s of each summand, so it disagrees with the
/// enumeration oracle from `n = 2` on (by exactly `q - q t` there); it is
/// kept so `verify` can document the discrepancy.
pub fn sb_motzkin_seq(n_max: usize, literal: bool) -> Result<Vec<P>, PolyError> {
    let mut seq = vec![P::one()];
    if n_max >= 1 {
        seq.push(tv());
    }
    for n in 2..=n_max {
        let mut acc = tv().mul(&seq[n - 1])?;
        for k in 0..=n - 2 {
            let product = seq[k].mul(&seq[n - k - 2])?;
            let factor = if literal {
                mono(k + 1, 0, 0)
            } else {
                mono(k + 1, 1, 0)
            };
            acc = acc.add(&factor.mul(&product)?)?;
        }
        seq.push(acc);
    }
    Ok(seq)
}

/// `SB_n(1/2/3, 13/24)` for `n >= 1`: words `1^k 2^j 1^{n-k-j}` give
/// `t q^{n-1} + t^2 ((n-1) q^{n-2} + q^{n-1} Σ_{k=2}^{n-1} [n-k]_q)`.
pub fn sb_1_2_3_and_13_24(n: usize) -> Result<P, PolyError> {
    if n == 0 {
        return Ok(P::one());
    }
    let mut acc = mono(n - 1, 1, 0);
    if n >= 2 {
        acc = acc.add(&term(n as i64 - 1, n - 2, 2, 0))?;
        let mut inner = P::zero();
        for k in 2..=n - 1 {
            inner = inner.add(&q_int(n - k))?;
        }
        acc = acc.add(&mono(n - 1, 2, 0).mul(&inner)?)?;
    }
    Ok(acc)
}

/// The seven closed forms for the remaining pairs of length-3 patterns,
/// valid for `n >= 1` (`n = 0` is the empty partition, value 1).
pub mod pairs {
    use super::*;

    /// `Π_n(1/2/3, 1/23)` and `Π_n(1/2/3, 12/3)`: three partitions,
    /// `q^{n-1}(t + t^2) + q^{n-2} t^2` once the three shapes are distinct
    /// (`n >= 3`). For `n <= 2` the shapes coincide and the class values
    /// are forced: `t` and `q t + t^2`.
    pub fn three_shapes(n: usize) -> Result<P, PolyError> {
        match n {
            0 => Ok(P::one()),
            1 => Ok(tv()),
            2 => mono(1, 1, 0).add(&mono(0, 2, 0)),
            _ => {
                let acc = mono(n - 1, 1, 0).add(&mono(n - 1, 2, 0))?;
                acc.add(&mono(n - 2, 2, 0))
            }
        }
    }

    /// `Π_n(1/2/3, 13/2) = q^{n-1} t + (n-1) q^{n-2} t^2`.
    pub fn sb_1_2_3_and_13_2(n: usize) -> Result<P, PolyError> {
        if n == 0 {
            return Ok(P::one());
        }
        let mut acc = mono(n - 1, 1, 0);
        if n >= 2 {
            acc = acc.add(&term(n as i64 - 1, n - 2, 2, 0))?;
        }
        Ok(acc)
    }

    /// `Π_n(1/23, 13/2) = q^{n-1} t + Σ_{k=1}^{n-1} q^{k-1} t^{n-k+1}`.
    pub fn sb_1_23_and_13_2(n: usize) -> Result<P, PolyError> {
        if n == 0 {
            return Ok(P::one());
        }
        let mut acc = mono(n - 1, 1, 0);
        for k in 1..n {
            acc = acc.add(&mono(k - 1, n - k + 1, 0))?;
        }
        Ok(acc)
    }

    /// `Π_n(1/23, 123)` and `Π_n(12/3, 123)`:
    /// `q [n-1]_q t^{n-1} + t^n`.
    pub fn q_analog_tail(n: usize) -> Result<P, PolyError> {
        if n == 0 {
            return Ok(P::one());
        }
        let acc = mono(1, n - 1, 0).mul(&q_int(n - 1))?;
        acc.add(&mono(0, n, 0))
    }

    /// `Π_n(13/2, 12/3) = Σ_{k=1}^n q^{n-k} t^k`.
    pub fn sb_13_2_and_12_3(n: usize) -> Result<P, PolyError> {
        if n == 0 {
            return Ok(P::one());
        }
        let mut acc = P::zero();
        for k in 1..=n {
            acc = acc.add(&mono(n - k, k, 0))?;
        }
        Ok(acc)
    }
}

/// Catalan recursion for `I_n(q,t,x) = Σ q^inv t^LRM x^fix` over
/// `Av_n(321)`:
/// `I_n = t x I_{n-1} + Σ_{j=2}^n q^{j-1} I_{j-2}(q,t,1) (I_{n-j+1} - t(x-1) I_{n-j})`.
pub fn i_seq(n_max: usize) -> Result<Vec<P>, PolyError> {
    let mut seq = vec![P::one()];
    let tx = mono(0, 1, 1);
    let t_times_x_minus_1 = tx.sub(&tv())?; // t(x - 1)
    for n in 1..=n_max {
        let mut acc = tx.mul(&seq[n - 1])?;
        for j in 2..=n {
            let at_x1 = seq[j - 2].substitute(Var::X, &P::one())?;
            let inner = seq[n - j + 1].sub(&t_times_x_minus_1.mul(&seq[n - j])?)?;
            acc = acc.add(&mono(j - 1, 0, 0).mul(&at_x1)?.mul(&inner)?)?;
        }
        seq.push(acc);
    }
    Ok(seq)
}

/// Catalan recursion for `M_n(q,t,x) = Σ q^maj t^des x^LRM` over
/// `Av_n(321)`:
/// `M_n = x M_{n-1}(q,qt,x) + Σ_{k=2}^n (M_{k-1} + x(q^{k-1} t - 1) M_{k-2}) M_{n-k}(q, q^k t, x)`.
///
/// Lower-order polynomials are memoized plain; the `t -> q^k t` shifts are
/// applied at use sites.
pub fn m_seq(n_max: usize) -> Result<Vec<P>, PolyError> {
    let mut seq = vec![P::one()];
    for n in 1..=n_max {
        let shifted = seq[n - 1].substitute(Var::T, &mono(1, 1, 0))?;
        let mut acc = xv().mul(&shifted)?;
        for k in 2..=n {
            let bracket = mono(k - 1, 1, 0).sub(&P::one())?; // q^{k-1} t - 1
            let left = seq[k - 1].add(&xv().mul(&bracket)?.mul(&seq[k - 2])?)?;
            let right = seq[n - k].substitute(Var::T, &mono(k, 1, 0))?;
            acc = acc.add(&left.mul(&right)?)?;
        }
        seq.push(acc);
    }
    Ok(seq)
}
