//! Truncated Laurent series over F_q in the local parameter x0.
//!
//! A series carries its valuation, a coefficient window, and a precision
//! N: the series is known modulo x0^N. Series built from polynomial data
//! are flagged exact (all omitted coefficients are genuinely zero), which
//! is what lets Newton polygons distinguish "coefficient is zero" from
//! "coefficient is zero as far as we can see".

use crate::algebra::field::{FieldSpec, Fq};
use crate::error::LocalError;

#[derive(Clone, Debug)]
pub struct LaurentSeries {
    /// Valuation of the first stored coefficient; the window covers
    /// exponents val, val+1, ..., val + coeffs.len() - 1.
    val: i64,
    coeffs: Vec<Fq>,
    /// The series is known modulo x0^precision.
    precision: i64,
    /// True when every coefficient outside the window is exactly zero.
    exact: bool,
    field: FieldSpec,
}

impl LaurentSeries {
    /// Series from a coefficient window starting at exponent `val`,
    /// known mod x0^precision.
    pub fn new(field: FieldSpec, val: i64, coeffs: Vec<Fq>, precision: i64) -> Self {
        let mut s = LaurentSeries {
            val,
            coeffs,
            precision,
            exact: false,
            field,
        };
        s.normalize();
        s
    }

    /// An exactly-known series (a Laurent polynomial): coefficients
    /// outside the window are zero, precision is unbounded in spirit and
    /// recorded as the window end for bookkeeping.
    pub fn exact_polynomial(field: FieldSpec, val: i64, coeffs: Vec<Fq>) -> Self {
        let end = val + coeffs.len() as i64;
        let mut s = LaurentSeries {
            val,
            coeffs,
            precision: end,
            exact: true,
            field,
        };
        s.normalize();
        s
    }

    pub fn zero(field: FieldSpec, precision: i64) -> Self {
        LaurentSeries {
            val: precision,
            coeffs: Vec::new(),
            precision,
            exact: false,
            field,
        }
    }

    pub fn exact_zero(field: FieldSpec) -> Self {
        LaurentSeries {
            val: 0,
            coeffs: Vec::new(),
            precision: 0,
            exact: true,
            field,
        }
    }

    pub fn constant(field: FieldSpec, c: Fq) -> Self {
        Self::exact_polynomial(field, 0, vec![c])
    }

    pub fn one(field: FieldSpec) -> Self {
        let c = field.one();
        Self::constant(field, c)
    }

    /// x0^n.
    pub fn parameter_power(field: FieldSpec, n: i64) -> Self {
        let c = field.one();
        Self::exact_polynomial(field, n, vec![c])
    }

    fn normalize(&mut self) {
        // drop leading zeros, adjusting the valuation
        while let Some(first) = self.coeffs.first() {
            if self.field.is_zero(first) {
                self.coeffs.remove(0);
                self.val += 1;
            } else {
                break;
            }
        }
        if self.exact {
            // exact series keep their full support; trim trailing zeros
            while self.coeffs.last().map(|c| self.field.is_zero(c)) == Some(true) {
                self.coeffs.pop();
            }
            self.precision = self.val + self.coeffs.len() as i64;
            if self.coeffs.is_empty() {
                self.val = 0;
                self.precision = 0;
            }
            return;
        }
        // inexact: clip the window to the precision
        let end = self.val + self.coeffs.len() as i64;
        if end > self.precision {
            let keep = (self.precision - self.val).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().map(|c| self.field.is_zero(c)) == Some(true) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.val = self.precision;
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// True when no nonzero coefficient is stored (the series is 0 mod
    /// x0^precision; genuinely zero if also exact).
    pub fn is_zero_at_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.exact && self.coeffs.is_empty()
    }

    /// Valuation: Some(v) when a nonzero coefficient is visible, None when
    /// the series is 0 at working precision (undetermined unless exact).
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.val)
        }
    }

    pub fn coeff(&self, n: i64) -> Fq {
        if n < self.val || n >= self.val + self.coeffs.len() as i64 {
            self.field.zero()
        } else {
            self.coeffs[(n - self.val) as usize].clone()
        }
    }

    /// Truncate to a lower precision (or keep as is if already lower).
    pub fn truncate(&self, precision: i64) -> Self {
        let effective = if self.exact { i64::MAX } else { self.precision };
        let new_precision = effective.min(precision);
        if !self.exact && new_precision == self.precision {
            return self.clone();
        }
        let mut s = self.clone();
        s.exact = false;
        s.precision = new_precision;
        s.normalize();
        s
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        let f = &self.field;
        let exact = self.exact && other.exact;
        let prec = if exact {
            i64::MAX
        } else {
            let p1 = if self.exact { i64::MAX } else { self.precision };
            let p2 = if other.exact { i64::MAX } else { other.precision };
            p1.min(p2)
        };
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return if exact {
                Self::exact_zero(f.clone())
            } else {
                Self::zero(f.clone(), prec)
            };
        }
        let lo = match (self.coeffs.is_empty(), other.coeffs.is_empty()) {
            (true, false) => other.val,
            (false, true) => self.val,
            _ => self.val.min(other.val),
        };
        let hi_data = (self.val + self.coeffs.len() as i64).max(other.val + other.coeffs.len() as i64);
        let hi = if exact { hi_data } else { hi_data.min(prec) };
        let mut coeffs = Vec::with_capacity((hi - lo).max(0) as usize);
        for n in lo..hi {
            coeffs.push(f.add(&self.coeff(n), &other.coeff(n)));
        }
        let mut s = LaurentSeries {
            val: lo,
            coeffs,
            precision: if exact { hi } else { prec },
            exact,
            field: f.clone(),
        };
        s.normalize();
        s
    }

    pub fn neg(&self) -> LaurentSeries {
        let mut s = self.clone();
        for c in s.coeffs.iter_mut() {
            *c = self.field.neg(c);
        }
        s
    }

    pub fn sub(&self, other: &LaurentSeries) -> LaurentSeries {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let f = &self.field;
        let exact = self.exact && other.exact;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            // 0 * (series known mod x0^N): product known mod x0^(v_other + N)-ish;
            // keep it simple and sound: known mod min over visible bounds.
            if exact {
                return Self::exact_zero(f.clone());
            }
            let prec = self.zero_product_precision(other);
            return Self::zero(f.clone(), prec);
        }
        let prec = if exact {
            i64::MAX
        } else {
            let p1 = if self.exact { i64::MAX } else { self.precision - self.val };
            let p2 = if other.exact {
                i64::MAX
            } else {
                other.precision - other.val
            };
            // relative precisions add valuations back
            self.val + other.val + p1.min(p2)
        };
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let width = if exact {
            n
        } else {
            n.min((prec - self.val - other.val).max(0) as usize)
        };
        let mut coeffs = vec![f.zero(); width];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            let jmax = width.saturating_sub(i).min(other.coeffs.len());
            for j in 0..jmax {
                f.mul_add_assign(&mut coeffs[i + j], a, &other.coeffs[j]);
            }
        }
        let mut s = LaurentSeries {
            val: self.val + other.val,
            coeffs,
            precision: if exact {
                self.val + other.val + n as i64
            } else {
                prec
            },
            exact,
            field: f.clone(),
        };
        s.normalize();
        s
    }

    fn zero_product_precision(&self, other: &LaurentSeries) -> i64 {
        let a = if self.exact { i64::MAX } else { self.precision };
        let b = if other.exact { i64::MAX } else { other.precision };
        let av = self.valuation().unwrap_or(a);
        let bv = other.valuation().unwrap_or(b);
        // product vanishes at least to order av + bv; refuse overflow
        (av.saturating_add(b)).min(bv.saturating_add(a)).min(1 << 40)
    }

    pub fn scale(&self, c: &Fq) -> LaurentSeries {
        if self.field.is_zero(c) {
            return if self.exact {
                Self::exact_zero(self.field.clone())
            } else {
                Self::zero(self.field.clone(), self.precision)
            };
        }
        let mut s = self.clone();
        for a in s.coeffs.iter_mut() {
            *a = self.field.mul(a, c);
        }
        s
    }

    /// Multiply by x0^n.
    pub fn shift(&self, n: i64) -> LaurentSeries {
        let mut s = self.clone();
        s.val += n;
        if !s.exact {
            s.precision += n;
        } else {
            s.precision = s.val + s.coeffs.len() as i64;
        }
        s
    }

    /// Multiplicative inverse: a * result = 1 mod x0^(N - 2 v(a)) in the
    /// sense that precision is tracked relative to the valuation.
    pub fn invert(&self) -> Result<LaurentSeries, LocalError> {
        if self.coeffs.is_empty() {
            return Err(LocalError::ZeroDivisor);
        }
        let f = &self.field;
        let v = self.val;
        // relative precision: how many coefficients of the unit part we know
        let rel = if self.exact {
            // an exact polynomial inverts to a series with no intrinsic
            // truncation; cap at a generous default window
            (self.coeffs.len() as i64).max(64)
        } else {
            self.precision - v
        };
        if rel <= 0 {
            return Err(LocalError::InsufficientPrecision(
                "no unit part visible at working precision".into(),
            ));
        }
        let n = rel as usize;
        let u0_inv = f.inv(&self.coeffs[0]).expect("leading coefficient nonzero");
        // Newton-free direct recurrence: b_k = -u0^{-1} * sum_{j=1..k} u_j b_{k-j}
        let mut b = Vec::with_capacity(n);
        b.push(u0_inv.clone());
        for k in 1..n {
            let mut acc = f.zero();
            let jmax = k.min(self.coeffs.len() - 1);
            for j in 1..=jmax {
                f.mul_add_assign(&mut acc, &self.coeffs[j], &b[k - j]);
            }
            acc = f.neg(&acc);
            b.push(f.mul(&u0_inv, &acc));
        }
        Ok(LaurentSeries {
            val: -v,
            coeffs: b,
            precision: -v + rel,
            exact: false,
            field: f.clone(),
        })
    }

    /// Substitute x0 = x1^e (exponent scaling); precision scales with it.
    pub fn ramify(&self, e: i64) -> LaurentSeries {
        assert!(e >= 1);
        if e == 1 {
            return self.clone();
        }
        let f = &self.field;
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * e as usize);
        for c in &self.coeffs {
            coeffs.push(c.clone());
            for _ in 1..e {
                coeffs.push(f.zero());
            }
        }
        if !coeffs.is_empty() {
            coeffs.truncate(coeffs.len() - (e as usize - 1));
        }
        LaurentSeries {
            val: self.val * e,
            coeffs,
            precision: if self.exact {
                self.val * e + self.coeffs.len() as i64 * e
            } else {
                self.precision * e
            },
            exact: self.exact,
            field: f.clone(),
        }
    }

    /// Undo `ramify(e)`: requires all visible exponents to be multiples
    /// of e, which holds for quantities that genuinely live over x0.
    pub fn unramify(&self, e: i64) -> Result<LaurentSeries, LocalError> {
        assert!(e >= 1);
        if e == 1 {
            return Ok(self.clone());
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !self.field.is_zero(c) && (self.val + i as i64).rem_euclid(e) != 0 {
                return Err(LocalError::InsufficientPrecision(format!(
                    "series does not descend: nonzero coefficient at ramified exponent {}",
                    self.val + i as i64
                )));
            }
        }
        if self.coeffs.is_empty() {
            return Ok(LaurentSeries {
                val: self.val.div_euclid(e),
                coeffs: Vec::new(),
                precision: self.precision.div_euclid(e),
                exact: self.exact,
                field: self.field.clone(),
            });
        }
        let val = self.val / e;
        let coeffs: Vec<Fq> = self
            .coeffs
            .iter()
            .step_by(e as usize)
            .cloned()
            .collect();
        Ok(LaurentSeries {
            val,
            coeffs,
            precision: if self.exact {
                val + self.coeffs.len().div_ceil(e as usize) as i64
            } else {
                self.precision.div_euclid(e)
            },
            exact: self.exact,
            field: self.field.clone(),
        })
    }

    /// Coefficient-wise equality on the window [lo, hi).
    pub fn agrees_with(&self, other: &LaurentSeries, lo: i64, hi: i64) -> bool {
        (lo..hi).all(|n| self.coeff(n) == other.coeff(n))
    }

    /// The coefficient of x0^0, i.e. the reduction mod x0 for integral
    /// series.
    pub fn residue(&self) -> Fq {
        self.coeff(0)
    }

    pub fn format(&self) -> String {
        if self.coeffs.is_empty() {
            return if self.exact {
                "0".into()
            } else {
                format!("O(x0^{})", self.precision)
            };
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let n = self.val + i as i64;
            let cs = f.format(c);
            let t = match n {
                0 => cs,
                1 if cs == "1" => "x0".into(),
                1 => format!("{cs}*x0"),
                _ if cs == "1" => format!("x0^{n}"),
                _ => format!("{cs}*x0^{n}"),
            };
            terms.push(t);
        }
        if !self.exact {
            terms.push(format!("O(x0^{})", self.precision));
        }
        terms.join(" + ")
    }
}

impl PartialEq for LaurentSeries {
    /// Equality of the visible coefficient data (valuation + window).
    fn eq(&self, other: &Self) -> bool {
        self.val == other.val && self.coeffs == other.coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn series(val: i64, ints: &[i64], prec: i64) -> LaurentSeries {
        let f = f3();
        let coeffs = ints.iter().map(|&n| f.from_int(n)).collect();
        LaurentSeries::new(f, val, coeffs, prec)
    }

    #[test]
    fn invert_one() {
        let one = LaurentSeries::one(f3());
        let inv = one.invert().unwrap();
        assert_eq!(inv.coeff(0), f3().one());
        assert!(inv.valuation() == Some(0));
    }

    #[test]
    fn invert_geometric() {
        // invert(1 + x0) over F_3 at N = 4: 1 + 2x0 + x0^2 + 2x0^3
        let a = series(0, &[1, 1], 4);
        let inv = a.invert().unwrap();
        assert_eq!(inv, series(0, &[1, 2, 1, 2], 4));
        // multiply back: = 1 mod x0^4
        let prod = a.mul(&inv);
        assert!(prod.agrees_with(&LaurentSeries::one(f3()), 0, 4));
    }

    #[test]
    fn invert_shifts_valuation() {
        let x0 = LaurentSeries::parameter_power(f3(), 1);
        let inv = x0.invert().unwrap();
        assert_eq!(inv.valuation(), Some(-1));
        assert!(inv.mul(&x0).agrees_with(&LaurentSeries::one(f3()), 0, 1));
    }

    #[test]
    fn invert_zero_fails() {
        let z = LaurentSeries::zero(f3(), 5);
        assert!(matches!(z.invert(), Err(LocalError::ZeroDivisor)));
    }

    #[test]
    fn exact_polynomials_know_their_zeros() {
        let a = LaurentSeries::exact_polynomial(f3(), 2, vec![f3().one()]);
        assert!(a.is_exact());
        assert_eq!(a.valuation(), Some(2));
        let z = a.sub(&a);
        assert!(z.is_exactly_zero());
    }

    #[test]
    fn precision_tracks_through_mul() {
        let a = series(1, &[1, 1], 3); // x0 + x0^2 + O(x0^3)
        let b = series(0, &[2], 5); // 2 + O(x0^5)
        let prod = a.mul(&b);
        // relative precisions: a has 2 known coefficients, b has 5
        assert_eq!(prod.precision(), 3);
        assert_eq!(prod.coeff(1), f3().from_int(2));
    }

    #[test]
    fn ramify_round_trip() {
        let a = series(-1, &[2, 0, 1], 4);
        let r = a.ramify(3);
        assert_eq!(r.valuation(), Some(-3));
        assert_eq!(r.precision(), 12);
        let back = r.unramify(3).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.precision(), 4);
    }

    #[test]
    fn unramify_rejects_bad_support() {
        let a = series(0, &[1, 1], 4); // 1 + x1, not a series in x1^2
        assert!(a.unramify(2).is_err());
    }
}
