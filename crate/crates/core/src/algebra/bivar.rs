//! Bivariate polynomials over F_q in (x, y), stored as y-coefficient
//! vectors of univariate polynomials in x. Resultants with respect to y
//! are Sylvester determinants, evaluated by fraction-free (Bareiss)
//! elimination so the normalization is pinned: f's coefficient rows on
//! top, descending powers left to right.

use crate::algebra::field::{FieldSpec, Fq};
use crate::algebra::poly::Poly;
use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    /// ycoeffs[i] is the coefficient of y^i, a polynomial in x.
    ycoeffs: Vec<Poly>,
    field: FieldSpec,
}

impl BivarPoly {
    pub fn new(field: FieldSpec, mut ycoeffs: Vec<Poly>) -> Self {
        while ycoeffs.last().map(Poly::is_zero) == Some(true) {
            ycoeffs.pop();
        }
        BivarPoly { ycoeffs, field }
    }

    pub fn zero(field: FieldSpec) -> Self {
        BivarPoly {
            ycoeffs: Vec::new(),
            field,
        }
    }

    /// A(y) + x * B(y), the shape of all cover equations here.
    pub fn linear_in_x(a: &Poly, b: &Poly) -> Self {
        let field = a.field().clone();
        let n = (a.degree().map_or(0, |d| d + 1)).max(b.degree().map_or(0, |d| d + 1));
        let mut ycoeffs = Vec::with_capacity(n);
        for i in 0..n {
            let coeffs = vec![a.coeff(i), b.coeff(i)];
            ycoeffs.push(Poly::new(field.clone(), coeffs));
        }
        BivarPoly::new(field, ycoeffs)
    }

    /// Embed a univariate polynomial in y.
    pub fn from_y_poly(a: &Poly) -> Self {
        let field = a.field().clone();
        let ycoeffs = a
            .coeffs()
            .iter()
            .map(|c| Poly::constant(field.clone(), c.clone()))
            .collect();
        BivarPoly::new(field, ycoeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.ycoeffs.len().checked_sub(1)
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.ycoeffs.iter().filter_map(Poly::degree).max()
    }

    pub fn y_coeff(&self, i: usize) -> Poly {
        self.ycoeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.field.clone()))
    }

    pub fn y_coeffs(&self) -> &[Poly] {
        &self.ycoeffs
    }

    pub fn add(&self, other: &BivarPoly) -> BivarPoly {
        let n = self.ycoeffs.len().max(other.ycoeffs.len());
        let ycoeffs = (0..n)
            .map(|i| self.y_coeff(i).add(&other.y_coeff(i)))
            .collect();
        BivarPoly::new(self.field.clone(), ycoeffs)
    }

    pub fn sub(&self, other: &BivarPoly) -> BivarPoly {
        let n = self.ycoeffs.len().max(other.ycoeffs.len());
        let ycoeffs = (0..n)
            .map(|i| self.y_coeff(i).sub(&other.y_coeff(i)))
            .collect();
        BivarPoly::new(self.field.clone(), ycoeffs)
    }

    pub fn mul(&self, other: &BivarPoly) -> BivarPoly {
        if self.is_zero() || other.is_zero() {
            return BivarPoly::zero(self.field.clone());
        }
        let mut ycoeffs =
            vec![Poly::zero(self.field.clone()); self.ycoeffs.len() + other.ycoeffs.len() - 1];
        for (i, a) in self.ycoeffs.iter().enumerate() {
            for (j, b) in other.ycoeffs.iter().enumerate() {
                ycoeffs[i + j] = ycoeffs[i + j].add(&a.mul(b));
            }
        }
        BivarPoly::new(self.field.clone(), ycoeffs)
    }

    /// Formal derivative with respect to y.
    pub fn derivative_y(&self) -> BivarPoly {
        if self.ycoeffs.len() <= 1 {
            return BivarPoly::zero(self.field.clone());
        }
        let f = &self.field;
        let ycoeffs = self
            .ycoeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&f.from_int(i as i64)))
            .collect();
        BivarPoly::new(f.clone(), ycoeffs)
    }

    /// Specialize x to a field element; returns a polynomial in y.
    pub fn eval_x(&self, x0: &Fq) -> Poly {
        let coeffs = self.ycoeffs.iter().map(|c| c.eval(x0)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.ycoeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.format("x");
            let wrapped = if c.coeffs().iter().filter(|a| !self.field.is_zero(a)).count() > 1 {
                format!("({cs})")
            } else {
                cs
            };
            let t = match i {
                0 => wrapped,
                1 if wrapped == "1" => "y".into(),
                1 => format!("{wrapped}*y"),
                _ if wrapped == "1" => format!("y^{i}"),
                _ => format!("{wrapped}*y^{i}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }
}

/// Resultant of f and g with respect to y: the determinant of the
/// Sylvester matrix with f's coefficients in the top rows. Zero iff f and
/// g share a factor in y over F_q(x).
pub fn resultant_y(f: &BivarPoly, g: &BivarPoly) -> Result<Poly, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let field = f.field().clone();
    let m = f.degree_y().unwrap();
    let n = g.degree_y().unwrap();
    if m == 0 && n == 0 {
        return Ok(Poly::one(field));
    }
    if m == 0 {
        return Ok(f.y_coeff(0).pow(n));
    }
    if n == 0 {
        return Ok(g.y_coeff(0).pow(m));
    }
    let size = m + n;
    let mut mat = vec![vec![Poly::zero(field.clone()); size]; size];
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = f.y_coeff(m - k);
        }
    }
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = g.y_coeff(n - k);
        }
    }
    bareiss_determinant(mat, field)
}

/// Fraction-free determinant over the integral domain F_q[x].
fn bareiss_determinant(mut m: Vec<Vec<Poly>>, field: FieldSpec) -> Result<Poly, AlgebraError> {
    let n = m.len();
    let mut sign = false;
    let mut prev = Poly::one(field.clone());
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Ok(Poly::zero(field)),
            }
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                let (q, r) = num.div_rem(&prev).expect("bareiss pivot nonzero");
                debug_assert!(r.is_zero(), "bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = Poly::zero(field.clone());
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { det.neg() } else { det })
}

/// Discriminant of f with respect to y:
/// (-1)^{d(d-1)/2} Res_y(f, f_y) / lc_y(f).
pub fn discriminant_y(f: &BivarPoly) -> Result<Poly, AlgebraError> {
    let d = f
        .degree_y()
        .ok_or(AlgebraError::ZeroPolynomial)
        .and_then(|d| {
            if d == 0 {
                Err(AlgebraError::DegenerateResultant(
                    "constant in y has no discriminant".into(),
                ))
            } else {
                Ok(d)
            }
        })?;
    let fy = f.derivative_y();
    if fy.is_zero() {
        return Err(AlgebraError::DegenerateResultant(
            "y-derivative vanishes identically".into(),
        ));
    }
    let res = resultant_y(f, &fy)?;
    let lc = f.y_coeff(d);
    let (q, r) = res.div_rem(&lc).ok_or(AlgebraError::ZeroPolynomial)?;
    if !r.is_zero() {
        return Err(AlgebraError::DegenerateResultant(
            "leading coefficient does not divide the resultant".into(),
        ));
    }
    Ok(if (d * (d - 1) / 2) % 2 == 1 { q.neg() } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    fn ypoly(ints: &[i64]) -> BivarPoly {
        BivarPoly::from_y_poly(&Poly::from_ints(f5(), ints))
    }

    #[test]
    fn linear_resultant_is_difference() {
        // Res_y(y - a, y - b) = b - a
        let a = ypoly(&[-2, 1]);
        let b = ypoly(&[-4, 1]);
        let r = resultant_y(&a, &b).unwrap();
        // b - a with a = 2, b = 4: 4 - 2 = 2
        assert_eq!(r, Poly::from_ints(f5(), &[2]));
    }

    #[test]
    fn common_factor_gives_zero() {
        let f = ypoly(&[1, 2, 1]);
        assert!(resultant_y(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn sylvester_hand_oracle() {
        // Res_y(y^2 - x, 2y) over F_5: the 3x3 Sylvester determinant
        // | 1 0 -x |
        // | 2 0  0 |
        // | 0 2  0 |  = -4x = x over F_5; a nonzero multiple of x.
        let field = f5();
        let f = BivarPoly::linear_in_x(
            &Poly::from_ints(field.clone(), &[0, 0, 1]),
            &Poly::from_ints(field.clone(), &[-1]),
        );
        let g = BivarPoly::from_y_poly(&Poly::from_ints(field.clone(), &[0, 2]));
        let r = resultant_y(&f, &g).unwrap();
        assert_eq!(r, Poly::from_ints(field, &[0, 1]));
        assert_eq!(r.y_order(), 1);
    }

    #[test]
    fn resultant_rejects_zero() {
        let z = BivarPoly::zero(f5());
        let f = ypoly(&[1, 1]);
        assert!(resultant_y(&z, &f).is_err());
        assert!(resultant_y(&f, &z).is_err());
    }

    #[test]
    fn resultant_vanishes_iff_common_root() {
        // f = (y - 1)(y - x), g = (y - x)(y - 2) share y - x
        let field = f5();
        let y_minus_x = BivarPoly::linear_in_x(
            &Poly::from_ints(field.clone(), &[0, 1]),
            &Poly::from_ints(field.clone(), &[-1]),
        );
        let f = ypoly(&[-1, 1]).mul(&y_minus_x);
        let g = y_minus_x.mul(&ypoly(&[-2, 1]));
        assert!(resultant_y(&f, &g).unwrap().is_zero());
        let h = ypoly(&[-1, 1]).mul(&ypoly(&[-2, 1]));
        assert!(!resultant_y(&f, &h).unwrap().is_zero());
    }

    #[test]
    fn discriminant_of_y2_minus_x() {
        // disc(y^2 - x) = 4x
        let field = f5();
        let f = BivarPoly::linear_in_x(
            &Poly::from_ints(field.clone(), &[0, 0, 1]),
            &Poly::from_ints(field.clone(), &[-1]),
        );
        let d = discriminant_y(&f).unwrap();
        assert_eq!(d, Poly::from_ints(field, &[0, 4]));
    }

    #[test]
    fn eval_x_specializes() {
        let field = f5();
        // f = y^2 - x at x = 4: y^2 - 4
        let f = BivarPoly::linear_in_x(
            &Poly::from_ints(field.clone(), &[0, 0, 1]),
            &Poly::from_ints(field.clone(), &[-1]),
        );
        let fy = f.eval_x(&field.from_int(4));
        assert_eq!(fy, Poly::from_ints(field, &[-4, 0, 1]));
    }
}
