//! Parametric families — complete graphs with an interval of gains on
//! every edge, covering the Shi, extended Shi, and Linial arrangements —
//! together with their closed-form integral counts and the Eulerian
//! numbers they are built from.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::graph::GainGraph;

/// The named families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `[a, b]K_n`: all gains in `[a, b]` on every edge of `K_n`.
    IntervalKn,
    /// `[0, 1]K_n`, the Shi arrangement.
    Shi,
    /// `[-s+1, s]K_n`, the extended Shi arrangement.
    ExtShi,
    /// `[1, 1]K_n`, the Linial arrangement.
    Linial,
}

/// A family selection: which family, its order, and its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: Family,
    pub n: u32,
    /// Interval bounds, used by `IntervalKn`.
    pub a: i64,
    pub b: i64,
    /// Extension parameter, used by `ExtShi`.
    pub s: u32,
}

impl FamilySpec {
    pub fn shi(n: u32) -> Self {
        FamilySpec {
            name: Family::Shi,
            n,
            a: 0,
            b: 1,
            s: 1,
        }
    }

    pub fn ext_shi(n: u32, s: u32) -> Self {
        FamilySpec {
            name: Family::ExtShi,
            n,
            a: -(s as i64) + 1,
            b: s as i64,
            s,
        }
    }

    pub fn linial(n: u32) -> Self {
        FamilySpec {
            name: Family::Linial,
            n,
            a: 1,
            b: 1,
            s: 1,
        }
    }

    pub fn interval(n: u32, a: i64, b: i64) -> Self {
        FamilySpec {
            name: Family::IntervalKn,
            n,
            a,
            b,
            s: 1,
        }
    }

    /// The gain interval of this family.
    pub fn gain_interval(&self) -> (i64, i64) {
        match self.name {
            Family::IntervalKn => (self.a, self.b),
            Family::Shi => (0, 1),
            Family::ExtShi => (-(self.s as i64) + 1, self.s as i64),
            Family::Linial => (1, 1),
        }
    }

    pub fn graph(&self) -> Result<GainGraph, Error> {
        let (lo, hi) = self.gain_interval();
        interval_complete_graph(self.n, lo, hi)
    }

    /// The closed-form count for this family, when one is known.
    pub fn closed_form(&self, m: i64) -> Result<BigInt, Error> {
        match self.name {
            Family::Shi => Ok(shi_closed_form(self.n, 1, m)),
            Family::ExtShi => Ok(shi_closed_form(self.n, self.s, m)),
            Family::Linial => {
                if self.n == 1 {
                    Ok(BigInt::from(m.max(0)))
                } else {
                    Ok(one_bminus1_closed_form(self.n, 2, m))
                }
            }
            Family::IntervalKn => {
                let (lo, hi) = (self.a, self.b);
                if lo > hi {
                    Err(Error::EmptyInterval(lo, hi))
                } else if lo <= 0 {
                    ab_closed_form(self.n, lo, hi, m)
                } else if lo == 1 {
                    if self.n == 1 {
                        Ok(BigInt::from(m.max(0)))
                    } else {
                        Ok(one_bminus1_closed_form(self.n, hi + 1, m))
                    }
                } else {
                    Err(Error::NoClosedForm)
                }
            }
        }
    }
}

/// The complete graph on `n` vertices with every gain in `[a, b]` on each
/// edge `e_ij`, `i < j`.
pub fn interval_complete_graph(n: u32, a: i64, b: i64) -> Result<GainGraph, Error> {
    if a > b {
        return Err(Error::EmptyInterval(a, b));
    }
    let n = n as usize;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for g in a..=b {
                edges.push((i, j, g));
            }
        }
    }
    GainGraph::new(n, edges)
}

fn eulerian_row(n: u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for order in 2..=n {
        let mut next = vec![BigInt::zero(); order as usize];
        for (i, value) in row.iter().enumerate() {
            let k = (i + 1) as u64;
            next[i] += BigInt::from(k) * value;
            next[i + 1] += BigInt::from(order - k) * value;
        }
        row = next;
    }
    row
}

/// The Eulerian number `A(n, k)`: permutations of `n` elements with
/// `k - 1` ascents, by the recurrence
/// `A(n, k) = k A(n-1, k) + (n-k+1) A(n-1, k-1)`.
pub fn eulerian(n: u64, k: u64) -> Result<BigInt, Error> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::EulerianIndexOutOfRange { n, k });
    }
    Ok(eulerian_row(n)[(k - 1) as usize].clone())
}

fn eulerian_or_zero(row: &[BigInt], k: i64) -> BigInt {
    if k >= 1 && (k as usize) <= row.len() {
        row[(k - 1) as usize].clone()
    } else {
        BigInt::zero()
    }
}

/// Binomial coefficient that vanishes for `x < n` (negative `x`
/// included): the number of `n`-subsets of an `x`-set.
fn binomial_truncated(x: i64, n: u32) -> BigInt {
    if x < n as i64 {
        return BigInt::zero();
    }
    binomial_polynomial(x, n)
}

/// The binomial coefficient as a polynomial in its top argument: the
/// falling factorial of length `n` divided by `n!`. Nonzero on negative
/// arguments.
fn binomial_polynomial(x: i64, n: u32) -> BigInt {
    let mut numerator = BigInt::one();
    let mut factorial = BigInt::one();
    for i in 0..n as i64 {
        numerator *= BigInt::from(x - i);
        factorial *= BigInt::from(i + 1);
    }
    numerator / factorial
}

/// Closed form for the (extended) Shi count: `[m - s(n-1)]^n` once `m`
/// reaches `n + (s-1)(n-1)`, and 0 below.
pub fn shi_closed_form(n: u32, s: u32, m: i64) -> BigInt {
    assert!(n >= 1 && s >= 1);
    let threshold = n as i64 + (s as i64 - 1) * (n as i64 - 1);
    if m < threshold {
        return BigInt::zero();
    }
    BigInt::from(m - s as i64 * (n as i64 - 1)).pow(n)
}

/// The Eulerian-number count for `[0, b]K_n`:
/// `sum_r A(n, r+1) C(m - br, n)`, zero for `m < 0`.
pub fn zero_b_closed_form(n: u32, b: i64, m: i64) -> BigInt {
    assert!(n >= 1 && b >= 1);
    if m < 0 {
        return BigInt::zero();
    }
    let row = eulerian_row(n as u64);
    let mut total = BigInt::zero();
    for r in 0..=(m / b) {
        total += eulerian_or_zero(&row, r + 1) * binomial_truncated(m - b * r, n);
    }
    total
}

/// The single polynomial the `[0, b]K_n` count becomes for
/// `m >= b(n-1)`: the same Eulerian sum with untruncated binomials.
pub fn zero_b_polynomial(n: u32, b: i64, m: i64) -> BigInt {
    assert!(n >= 1 && b >= 1);
    let row = eulerian_row(n as u64);
    let mut total = BigInt::zero();
    for r in 0..n as i64 {
        total += eulerian_or_zero(&row, r + 1) * binomial_polynomial(m - b * r, n);
    }
    total
}

/// Reduction of a symmetric-ish interval `[-a, b]` (`0 <= a <= b`, passed
/// as its raw endpoints `lo = -a`, `hi = b`) onto `[0, b-a]` with the
/// argument shifted down by `(n-1)a`; intervals with `lo > 0` are not of
/// this shape. When the reduced interval collapses to `[0, 0]` the count
/// is the falling factorial of the shifted argument.
pub fn ab_closed_form(n: u32, lo: i64, hi: i64, m: i64) -> Result<BigInt, Error> {
    if lo > 0 || -lo > hi {
        return Err(Error::NotShiftReducible(lo, hi));
    }
    let a = -lo;
    let width = hi - a;
    let shifted = m - (n as i64 - 1) * a;
    if shifted < 0 {
        return Ok(BigInt::zero());
    }
    if width == 0 {
        // All-zero gains on the complete graph: falling factorial.
        let mut product = BigInt::one();
        for i in 0..n as i64 {
            product *= BigInt::from(shifted - i);
        }
        return Ok(if shifted < n as i64 {
            BigInt::zero()
        } else {
            product
        });
    }
    Ok(zero_b_closed_form(n, width, shifted))
}

/// The Eulerian-number count for `[1, b-1]K_n` (`n >= 2`):
/// `sum_r A(n, r+1) C(m + n - 1 - br, n)`, zero for `m < 0`. The Linial
/// arrangement is the case `b = 2`.
pub fn one_bminus1_closed_form(n: u32, b: i64, m: i64) -> BigInt {
    assert!(n >= 2 && b >= 1);
    if m < 0 {
        return BigInt::zero();
    }
    let row = eulerian_row(n as u64);
    let mut total = BigInt::zero();
    for r in 0..=((m + n as i64 - 1) / b) {
        total += eulerian_or_zero(&row, r + 1) * binomial_truncated(m + n as i64 - 1 - b * r, n);
    }
    total
}

/// The polynomial the `[1, b-1]K_n` count becomes for
/// `m >= (b-1)(n-1)`.
pub fn one_bminus1_polynomial(n: u32, b: i64, m: i64) -> BigInt {
    assert!(n >= 2 && b >= 1);
    let row = eulerian_row(n as u64);
    let mut total = BigInt::zero();
    for r in 0..n as i64 {
        total += eulerian_or_zero(&row, r + 1) * binomial_polynomial(m + n as i64 - 1 - b * r, n);
    }
    total
}

/// For odd `n = 2k + 1` and `b >= 2`, checks that the eventual polynomial
/// of the `[1, b-1]K_n` count vanishes at the integer `(b-1)(n-1)/2`, the
/// zero forced by the symmetry `A(n, r+1) = A(n, n-r)`.
pub fn odd_zero_check(n: u32, b: i64) -> Result<bool, Error> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    assert!(n >= 3 && b >= 2);
    let m = (b - 1) * (n as i64 - 1) / 2;
    Ok(one_bminus1_polynomial(n, b, m).is_zero())
}
