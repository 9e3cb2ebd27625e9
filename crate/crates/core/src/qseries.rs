//! Truncated q-series with exact integer coefficients.
//!
//! [`QPolynomial`] is a dense series in `q` cut off above a fixed order `N`;
//! [`XQSeries`] adds a second variable `x` that marks the number of parts.
//! The builders cover the three two-variable sums for k=3, Andrews' k=3 sum
//! and the Gordon product sides.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::enumeration::CountTable;
use crate::error::SeriesError;

/// `Σ c_i q^i` for `i ≤ N`; coefficients above `N` are unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero(order: usize) -> Self {
        QPolynomial { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `q^exp`, or zero when `exp` lies above the truncation.
    pub fn monomial(exp: usize, order: usize) -> Self {
        let mut p = Self::zero(order);
        if exp <= order {
            p.coeffs[exp] = BigInt::one();
        }
        p
    }

    /// Pads with zeros or drops terms above `order`.
    pub fn from_coeffs<I, C>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(order);
        for (slot, c) in p.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        p
    }

    /// The truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, exp: usize) -> &BigInt {
        &self.coeffs[exp]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::TruncationMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        out.add_assign_shifted(other, 0);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(QPolynomial { coeffs })
    }

    /// Truncated product. Terms whose exponents sum above `N` are never formed.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `self += q^shift * other`, ignoring anything that lands above `N`.
    pub fn add_assign_shifted(&mut self, other: &Self, shift: usize) {
        let n = self.order();
        if shift > n {
            return;
        }
        for (slot, c) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
            *slot += c;
        }
    }

    /// Multiplies in place by `1 / (1 - q^step)`.
    pub fn divide_by_one_minus_q_pow(&mut self, step: usize) {
        assert!(step > 0, "1/(1-q^0) is undefined");
        for i in step..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - step];
        }
    }

    /// The same series known only up to `order ≤ N`.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        QPolynomial { coeffs: self.coeffs[..=order].to_vec() }
    }
}

pub fn poly_mul(p: &QPolynomial, r: &QPolynomial) -> Result<QPolynomial, SeriesError> {
    p.mul(r)
}

/// `1 / (q^alpha; q^alpha)_m = Π_{j=1..m} 1/(1 - q^{alpha j})`, truncated at `order`.
pub fn inv_pochhammer(alpha: usize, m: usize, order: usize) -> QPolynomial {
    assert!(alpha >= 1);
    let mut p = QPolynomial::one(order);
    for j in 1..=m {
        let step = alpha * j;
        if step > order {
            break;
        }
        p.divide_by_one_minus_q_pow(step);
    }
    p
}

/// `Π 1/(1 - q^n)` over `n ≤ order` with `n ≢ 0, ±a (mod 2k+1)`.
pub fn product_side(k: u32, a: u32, order: usize) -> QPolynomial {
    assert!(k >= 2 && (1..=k).contains(&a));
    let modulus = (2 * k + 1) as usize;
    let a = a as usize;
    let mut p = QPolynomial::one(order);
    for n in 1..=order {
        let r = n % modulus;
        if r != 0 && r != a && r != modulus - a {
            p.divide_by_one_minus_q_pow(n);
        }
    }
    p
}

/// Weight of the lightest k=3 partition with `pairs` pairs and `singletons`
/// singletons: `4·C(m+1,2) + 2mn + C(n+1,2)` plus `n`, `0` or `-2m` for a = 1, 2, 3.
pub fn shape_exponent(a: u32, pairs: u32, singletons: u32) -> u64 {
    let (m, n) = (u64::from(pairs), u64::from(singletons));
    let common = 2 * m * (m + 1) + 2 * m * n + n * (n + 1) / 2;
    match a {
        1 => common + n,
        2 => common,
        3 => common - 2 * m,
        _ => panic!("shape_exponent is defined for a in 1..=3, got {a}"),
    }
}

/// A polynomial in `x` whose coefficients are truncated q-series.
#[derive(Clone, Debug)]
pub struct XQSeries {
    order: usize,
    x_max: usize,
    terms: BTreeMap<usize, QPolynomial>,
}

impl XQSeries {
    pub fn zero(order: usize, x_max: usize) -> Self {
        XQSeries { order, x_max, terms: BTreeMap::new() }
    }

    /// `p` as the `x^0` coefficient.
    pub fn from_q(p: QPolynomial) -> Self {
        let mut s = Self::zero(p.order(), 0);
        s.terms.insert(0, p);
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn x_max(&self) -> usize {
        self.x_max
    }

    /// Coefficient of `x^xdeg`; the zero series when absent.
    pub fn x_coeff(&self, xdeg: usize) -> QPolynomial {
        self.terms.get(&xdeg).cloned().unwrap_or_else(|| QPolynomial::zero(self.order))
    }

    pub fn coeff(&self, xdeg: usize, qdeg: usize) -> BigInt {
        self.terms.get(&xdeg).map(|p| p.coeff(qdeg).clone()).unwrap_or_default()
    }

    /// `self += x^xdeg q^shift p`. Terms with `xdeg > x_max` are dropped.
    pub fn add_term(&mut self, xdeg: usize, shift: usize, p: &QPolynomial) {
        if xdeg > self.x_max || shift > self.order {
            return;
        }
        let order = self.order;
        self.terms.entry(xdeg).or_insert_with(|| QPolynomial::zero(order)).add_assign_shifted(p, shift);
    }

    /// Specialises `x = 1`.
    pub fn at_x_one(&self) -> QPolynomial {
        let mut out = QPolynomial::zero(self.order);
        for p in self.terms.values() {
            out.add_assign_shifted(p, 0);
        }
        out
    }

    /// Nonzero `(xdeg, qdeg, coeff)` triples sorted by `(xdeg, qdeg)`.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.terms.iter().flat_map(|(&x, p)| {
            p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(q, c)| (x, q, c))
        })
    }

    /// Cells that differ between the two series, absent cells read as zero.
    /// Only degrees tracked by both sides are compared.
    pub fn mismatches(&self, other: &Self) -> Vec<(usize, usize, BigInt, BigInt)> {
        let order = self.order.min(other.order);
        let x_max = self.x_max.min(other.x_max);
        let mut out = Vec::new();
        for x in 0..=x_max {
            for q in 0..=order {
                let (l, r) = (self.coeff(x, q), other.coeff(x, q));
                if l != r {
                    out.push((x, q, l, r));
                }
            }
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(QPolynomial::is_nonnegative)
    }

    /// `xdeg\tqdeg\tcoeff` rows, zero rows omitted.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("xdeg\tqdeg\tcoeff\n");
        for (x, q, c) in self.nonzero_terms() {
            let _ = writeln!(s, "{x}\t{q}\t{c}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            truncation: usize,
            xmax: usize,
            terms: Vec<(usize, usize, String)>,
        }
        let doc = Doc {
            truncation: self.order,
            xmax: self.x_max,
            terms: self.nonzero_terms().map(|(x, q, c)| (x, q, c.to_string())).collect(),
        };
        serde_json::to_string(&doc).expect("series JSON is always serialisable")
    }
}

/// `Σ_{m,n} q^{E_a(m,n)} x^{2m+n} / ((q²;q²)_m (q;q)_n)` for a in 1..=3.
///
/// `(m, n)` runs lexicographically; terms above `order` in `q` or `x_max` in
/// `x` are skipped.
pub fn t_series(a: u32, order: usize, x_max: usize) -> XQSeries {
    assert!((1..=3).contains(&a), "t_series is defined for a in 1..=3");
    let mut out = XQSeries::zero(order, x_max);
    for m in 0u32.. {
        if shape_exponent(a, m, 0) > order as u64 || 2 * m as usize > x_max {
            break;
        }
        let mut running = inv_pochhammer(2, m as usize, order);
        for n in 0u32.. {
            let exp = shape_exponent(a, m, n);
            let xdeg = (2 * m + n) as usize;
            if exp > order as u64 || xdeg > x_max {
                break;
            }
            if n > 0 {
                running.divide_by_one_minus_q_pow(n as usize);
            }
            out.add_term(xdeg, exp as usize, &running);
        }
    }
    out
}

/// `Σ_{m,n} q^{(m+n)² + n²} / ((q;q)_m (q;q)_n)`.
pub fn andrews_sum_k3(order: usize) -> QPolynomial {
    let mut out = QPolynomial::zero(order);
    for m in 0usize.. {
        if m * m > order {
            break;
        }
        let mut running = inv_pochhammer(1, m, order);
        for n in 0usize.. {
            let exp = (m + n) * (m + n) + n * n;
            if exp > order {
                break;
            }
            if n > 0 {
                running.divide_by_one_minus_q_pow(n);
            }
            out.add_assign_shifted(&running, exp);
        }
    }
    out
}

/// Coefficient of `x^m q^n` is the table entry for weight `n` with `m` parts.
pub fn series_from_counts(table: &CountTable) -> XQSeries {
    let order = table.max_weight as usize;
    let mut out = XQSeries::zero(order, order);
    for (&(n, m), &c) in &table.entries {
        let mut cell = QPolynomial::zero(order);
        cell.coeffs[0] = BigInt::from(c);
        out.add_term(m as usize, n as usize, &cell);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64], order: usize) -> QPolynomial {
        QPolynomial::from_coeffs(c.iter().copied(), order)
    }

    #[test]
    fn mul_examples() {
        let p = poly(&[1, 1], 2).mul(&poly(&[1, -1], 2)).unwrap();
        assert_eq!(p, poly(&[1, 0, -1], 2));
        let any = poly(&[3, -2, 7, 0, 5], 4);
        assert_eq!(any.mul(&QPolynomial::one(4)).unwrap(), any);
        // (1 + q + ... + q^5)(1 - q) = 1 - q^6, which truncates to 1
        let geo = poly(&[1; 6], 5);
        assert_eq!(geo.mul(&poly(&[1, -1], 5)).unwrap(), QPolynomial::one(5));
    }

    #[test]
    fn mul_rejects_mismatched_orders() {
        assert_eq!(poly(&[1], 2).mul(&poly(&[1], 3)), Err(SeriesError::TruncationMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn inv_pochhammer_examples() {
        assert_eq!(inv_pochhammer(1, 0, 10), QPolynomial::one(10));
        assert_eq!(inv_pochhammer(1, 1, 4), poly(&[1, 1, 1, 1, 1], 4));
        assert_eq!(inv_pochhammer(2, 1, 5), poly(&[1, 0, 1, 0, 1, 0], 5));
    }

    #[test]
    fn inv_pochhammer_times_pochhammer_is_one() {
        let order = 30;
        let mut poch = QPolynomial::one(order);
        for j in 1..=4 {
            poch = poch.mul(&poly(&[1], order).sub(&QPolynomial::monomial(2 * j, order)).unwrap()).unwrap();
        }
        assert_eq!(poch.mul(&inv_pochhammer(2, 4, order)).unwrap(), QPolynomial::one(order));
    }

    #[test]
    fn product_side_examples() {
        assert_eq!(product_side(3, 2, 9).coeff(9), &BigInt::from(10));
        assert_eq!(product_side(2, 1, 12).coeff(9), &BigInt::from(3));
        for (k, a) in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
            assert_eq!(product_side(k, a, 5).coeff(0), &BigInt::one());
        }
    }

    #[test]
    fn shape_exponents() {
        assert_eq!(shape_exponent(3, 3, 4), 52);
        assert_eq!(shape_exponent(2, 2, 4), 38);
        assert_eq!(shape_exponent(1, 1, 0), 4);
        assert_eq!(shape_exponent(1, 1, 2), 13);
        for a in 1..=3 {
            assert_eq!(shape_exponent(a, 0, 0), 0);
        }
    }

    #[test]
    fn t_series_examples() {
        let t2 = t_series(2, 9, 9);
        assert_eq!(t2.at_x_one().coeff(9), &BigInt::from(10));
        for a in 1..=3 {
            assert_eq!(t_series(a, 5, 5).coeff(0, 0), BigInt::one());
        }
        assert_eq!(t_series(3, 4, 4).coeff(2, 2), BigInt::one());
    }

    #[test]
    fn andrews_low_coefficients() {
        let s = andrews_sum_k3(10);
        assert_eq!(s.coeff(0), &BigInt::one());
        assert_eq!(s.coeff(1), &BigInt::one());
    }

    #[test]
    fn empty_table_gives_zero_series() {
        use crate::enumeration::Side;
        let table = CountTable { k: 3, a: 3, side: Side::Difference, max_weight: 4, entries: BTreeMap::new() };
        assert_eq!(series_from_counts(&table).nonzero_terms().count(), 0);
    }

    #[test]
    fn serialisations() {
        let s = XQSeries::from_q(product_side(3, 3, 0));
        assert_eq!(s.to_tsv(), "xdeg\tqdeg\tcoeff\n0\t0\t1\n");
        assert_eq!(s.to_json(), r#"{"truncation":0,"xmax":0,"terms":[[0,0,"1"]]}"#);
    }

    #[test]
    fn large_coefficients_stay_exact() {
        // p(500) = 2300165032574323995027 overflows u64
        let s = product_side(500, 500, 500);
        let mut all = QPolynomial::one(500);
        for n in 1..=500 {
            all.divide_by_one_minus_q_pow(n);
        }
        assert_eq!(all.coeff(500).to_string(), "2300165032574323995027");
        // modulus 1001 with a = 500 excludes only the part 500 itself below 501
        assert_eq!(s.coeff(500), &(all.coeff(500) - 1));
    }
}
