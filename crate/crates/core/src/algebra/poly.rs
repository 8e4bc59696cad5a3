//! Univariate polynomials over F_q: exact arithmetic, gcd, squarefree
//! structure in characteristic p, and classical factorization
//! (distinct-degree + Cantor-Zassenhaus) at desk scale.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::{FieldSpec, Fq};
use crate::error::AlgebraError;

/// Polynomial over F_q, coefficients in ascending degree. The zero
/// polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Fq>,
    field: FieldSpec,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Fq>) -> Self {
        while coeffs.last().map(|c| field.is_zero(c)) == Some(true) {
            coeffs.pop();
        }
        Poly { coeffs, field }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly {
            coeffs: Vec::new(),
            field,
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        let c = field.one();
        Poly {
            coeffs: vec![c],
            field,
        }
    }

    pub fn constant(field: FieldSpec, c: Fq) -> Self {
        Self::new(field, vec![c])
    }

    /// From integer coefficients, ascending degree.
    pub fn from_ints(field: FieldSpec, ints: &[i64]) -> Self {
        let coeffs = ints.iter().map(|&n| field.from_int(n)).collect();
        Self::new(field, coeffs)
    }

    pub fn monomial(field: FieldSpec, c: Fq, n: usize) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field);
        }
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs, field }
    }

    pub fn x(field: FieldSpec) -> Self {
        Self::monomial(field.clone(), field.one(), 1)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg(0) = 0, for contexts that never see zero.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Fq> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map(|c| self.field.is_one(c)) == Some(true)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.field.add(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.field.sub(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
            field: self.field.clone(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                f.mul_add_assign(&mut coeffs[i + j], a, b);
            }
        }
        Poly::new(f.clone(), coeffs)
    }

    pub fn scale(&self, c: &Fq) -> Poly {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn pow(&self, mut n: usize) -> Poly {
        let mut result = Poly::one(self.field.clone());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        result
    }

    pub fn monic(&self) -> Option<Poly> {
        let lc = self.leading_coeff()?;
        let inv = self.field.inv(lc).ok()?;
        Some(self.scale(&inv))
    }

    /// Euclidean division; None when the divisor is zero.
    pub fn div_rem(&self, divisor: &Poly) -> Option<(Poly, Poly)> {
        let f = &self.field;
        let ddeg = divisor.degree()?;
        if self.coeffs.len() < divisor.coeffs.len() {
            return Some((Poly::zero(f.clone()), self.clone()));
        }
        let lc_inv = f.inv(divisor.leading_coeff().unwrap()).ok()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); self.coeffs.len() - divisor.coeffs.len() + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + ddeg].clone();
            if f.is_zero(&top) {
                continue;
            }
            let q = f.mul(&top, &lc_inv);
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&q, dc);
                rem[k + i] = f.sub(&rem[k + i], &t);
            }
            quot[k] = q;
        }
        rem.truncate(ddeg);
        Some((Poly::new(f.clone(), quot), Poly::new(f.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Option<Poly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    pub fn eval(&self, x: &Fq) -> Fq {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.mul(&acc, x);
            acc = f.add(&acc, c);
        }
        acc
    }

    /// Formal derivative; exponents divisible by p drop out.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_int(i as i64)))
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    /// Monic gcd; zero if both inputs are zero.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic().unwrap_or(a)
    }

    /// Extended gcd: (g, s, t) with g = gcd monic and s*a + t*b = g.
    pub fn extended_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let field = a.field.clone();
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(field.clone()), Poly::zero(field.clone()));
        let (mut t0, mut t1) = (Poly::zero(field.clone()), Poly::one(field.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).unwrap();
            r0 = r1;
            r1 = r;
            let s = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = s;
            let t = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lc_inv = field.inv(r0.leading_coeff().unwrap()).unwrap();
        let c = Poly::constant(field, lc_inv);
        (r0.mul(&c), s0.mul(&c), t0.mul(&c))
    }

    /// base^e mod self.
    pub fn powmod(&self, base: &Poly, mut e: u64) -> Option<Poly> {
        if self.is_zero() {
            return None;
        }
        let mut result = Poly::one(self.field.clone());
        let mut b = base.rem(self)?;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&b).rem(self)?;
            }
            b = b.mul(&b).rem(self)?;
            e >>= 1;
        }
        Some(result)
    }

    /// p-th root of a polynomial whose exponents are all multiples of p.
    fn pth_root(&self) -> Poly {
        let f = &self.field;
        let p = f.p() as usize;
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p)
            .map(|c| f.pth_root(c))
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    /// Squarefree decomposition, characteristic-p aware: pairwise-coprime
    /// monic squarefree factors with multiplicities whose product, times a
    /// constant, recovers the input. Multiplicities are reported in
    /// increasing order.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let mut out = Self::squarefree_rec(&self.monic().unwrap(), 1);
        out.retain(|(f, _)| f.degree() != Some(0));
        out.sort_by(|a, b| a.1.cmp(&b.1).then(cmp_poly(&a.0, &b.0)));
        Ok(out)
    }

    fn squarefree_rec(f: &Poly, stride: usize) -> Vec<(Poly, usize)> {
        let p = f.field.p() as usize;
        if f.is_constant() {
            return Vec::new();
        }
        let df = f.derivative();
        if df.is_zero() {
            // f = g(y^p)
            return Self::squarefree_rec(&f.pth_root(), stride * p);
        }
        // Yun's algorithm, with the p-th power part split off at the end.
        let mut result = Vec::new();
        let mut c = Poly::gcd(f, &df);
        let mut w = f.div_rem(&c).unwrap().0;
        let mut i = 1usize;
        while !w.is_constant() {
            let y = Poly::gcd(&w, &c);
            let z = w.div_rem(&y).unwrap().0;
            if !z.is_constant() {
                result.push((z.monic().unwrap(), i * stride));
            }
            w = y;
            c = c.div_rem(&w).unwrap().0;
            i += 1;
            if i > p && w.is_constant() {
                break;
            }
        }
        if !c.is_constant() {
            for (g, m) in Self::squarefree_rec(&c.pth_root(), stride) {
                result.push((g, m * p));
            }
        }
        result
    }

    /// True iff the polynomial is a square in k[x] up to a constant, for k
    /// the algebraic closure: every squarefree multiplicity is even.
    pub fn is_square_in_closure(&self) -> Result<bool, AlgebraError> {
        Ok(self
            .squarefree_decomposition()?
            .iter()
            .all(|(_, m)| m % 2 == 0))
    }

    /// Distinct-degree splitting of a monic squarefree polynomial:
    /// (product of all irreducible factors of degree i, i) pairs.
    pub fn distinct_degree_factorization(&self) -> Vec<(Poly, usize)> {
        let f0 = match self.monic() {
            Some(m) if !m.is_constant() => m,
            _ => return Vec::new(),
        };
        let q = self.field.order();
        let n = f0.degree().unwrap();
        let mut out = Vec::new();
        let mut fstar = f0;
        let mut h = Poly::x(self.field.clone());
        let mut i = 0usize;
        while fstar.degree().unwrap_or(0) >= 2 * (i + 1) {
            i += 1;
            h = fstar.powmod(&h, q).unwrap();
            let g = Poly::gcd(&h.sub(&Poly::x(self.field.clone())), &fstar);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
                fstar = fstar.div_rem(&g).unwrap().0;
                h = h.rem(&fstar).unwrap_or(h);
            }
        }
        if fstar.degree().unwrap_or(0) > 0 {
            let d = fstar.degree().unwrap();
            out.push((fstar, d));
        }
        debug_assert_eq!(out.iter().map(|(g, _)| g.degree_or_zero()).sum::<usize>(), n);
        out
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, with
    /// multiplicity one each, sorted ascending. This is the cycle type of
    /// the Frobenius element acting on the roots.
    pub fn irreducible_degree_multiset(&self) -> Vec<usize> {
        let mut degs = Vec::new();
        for (g, i) in self.distinct_degree_factorization() {
            let count = g.degree_or_zero() / i;
            degs.extend(std::iter::repeat(i).take(count));
        }
        degs.sort_unstable();
        degs
    }

    /// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree
    /// product of irreducibles all of degree d.
    fn equal_degree_split(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
        let n = match self.degree() {
            Some(n) if n > 0 => n,
            _ => return Vec::new(),
        };
        if n == d {
            return vec![self.clone()];
        }
        let field = &self.field;
        let exp = {
            // (q^d - 1) / 2
            let mut t: u128 = 1;
            for _ in 0..d {
                t *= field.order() as u128;
            }
            ((t - 1) / 2) as u64
        };
        loop {
            let mut coeffs = Vec::with_capacity(n);
            for _ in 0..n {
                coeffs.push(field.random(rng));
            }
            let a = Poly::new(field.clone(), coeffs);
            if a.is_constant() {
                continue;
            }
            let g1 = Poly::gcd(&a, self);
            let cand = if g1.degree().unwrap_or(0) > 0 && g1.degree().unwrap() < n {
                Some(g1)
            } else {
                let b = self.powmod(&a, exp).unwrap();
                let g2 = Poly::gcd(&b.sub(&Poly::one(field.clone())), self);
                if g2.degree().unwrap_or(0) > 0 && g2.degree().unwrap() < n {
                    Some(g2)
                } else {
                    None
                }
            };
            if let Some(g) = cand {
                let other = self.div_rem(&g).unwrap().0;
                let mut parts = g.equal_degree_split(d, rng);
                parts.extend(other.equal_degree_split(d, rng));
                return parts;
            }
        }
    }

    /// Full factorization into monic irreducibles with multiplicities,
    /// sorted by degree then coefficients. The Cantor-Zassenhaus stage is
    /// seeded from the input so output is deterministic.
    pub fn factor(&self) -> Result<Vec<(Poly, usize)>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.det_seed());
        let mut out = Vec::new();
        for (sqf, mult) in self.squarefree_decomposition()? {
            for (prod, deg) in sqf.distinct_degree_factorization() {
                for irr in prod.equal_degree_split(deg, &mut rng) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
        Ok(out)
    }

    /// Coprime splitting into powers of distinct irreducibles: pieces
    /// q_i^{e_i}, pairwise coprime, whose product times a constant is the
    /// input. Sorted canonically.
    pub fn coprime_power_pieces(&self) -> Result<Vec<Poly>, AlgebraError> {
        let mut pieces: Vec<Poly> = self
            .factor()?
            .into_iter()
            .map(|(q, e)| q.pow(e))
            .collect();
        pieces.sort_by(cmp_poly);
        Ok(pieces)
    }

    fn det_seed(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for c in &self.coeffs {
            for &w in c.coords() {
                h ^= w;
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
        h
    }

    /// Substitute y -> y + c.
    pub fn shift(&self, c: &Fq) -> Poly {
        let f = &self.field;
        let mut result = Poly::zero(f.clone());
        let lin = Poly::new(f.clone(), vec![c.clone(), f.one()]);
        for coeff in self.coeffs.iter().rev() {
            result = result.mul(&lin);
            result = result.add(&Poly::constant(f.clone(), coeff.clone()));
        }
        result
    }

    /// Largest k with y^k dividing the polynomial (0 for the zero poly).
    pub fn y_order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !self.field.is_zero(c))
            .unwrap_or(0)
    }

    pub fn format(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let cs = f.format(c);
            let t = match i {
                0 => cs,
                1 if cs == "1" => var.to_string(),
                1 => format!("{cs}*{var}"),
                _ if cs == "1" => format!("{var}^{i}"),
                _ => format!("{cs}*{var}^{i}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }
}

/// Canonical ordering: by degree, then coefficient indices from the top.
pub(crate) fn cmp_poly(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    a.coeffs()
        .len()
        .cmp(&b.coeffs().len())
        .then_with(|| {
            for (x, y) in a.coeffs().iter().zip(b.coeffs()).rev() {
                let fx = a.field().element_index(x);
                let fy = b.field().element_index(y);
                match fx.cmp(&fy) {
                    std::cmp::Ordering::Equal => continue,
                    o => return o,
                }
            }
            std::cmp::Ordering::Equal
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    #[test]
    fn derivative_kills_pth_powers() {
        // d/dy (y^5) over F_5 -> 0
        let f = Poly::monomial(f5(), f5().one(), 5);
        assert!(f.derivative().is_zero());
    }

    #[test]
    fn derivative_hand_oracle() {
        // d/dy (1 + y^14(y+1)) over F_5: expand 1 + y^14 + y^15, then
        // differentiate term by term: 14 y^13 + 15 y^14 = 4 y^13.
        let field = f5();
        let y14 = Poly::monomial(field.clone(), field.one(), 14);
        let y15 = Poly::monomial(field.clone(), field.one(), 15);
        let f = Poly::one(field.clone()).add(&y14).add(&y15);
        let expected = Poly::monomial(field.clone(), field.from_int(4), 13);
        assert_eq!(f.derivative(), expected);
    }

    #[test]
    fn derivative_linear() {
        let field = f3();
        let f = Poly::from_ints(field.clone(), &[1, 1]); // y + 1
        assert_eq!(f.derivative(), Poly::one(field));
    }

    #[test]
    fn division_and_gcd() {
        let field = f5();
        // (y-1)(y-2) and (y-2)(y-3): gcd = y-2
        let a = Poly::from_ints(field.clone(), &[-1, 1]).mul(&Poly::from_ints(field.clone(), &[-2, 1]));
        let b = Poly::from_ints(field.clone(), &[-2, 1]).mul(&Poly::from_ints(field.clone(), &[-3, 1]));
        let g = Poly::gcd(&a, &b);
        assert_eq!(g, Poly::from_ints(field, &[-2, 1]));
    }

    #[test]
    fn extended_gcd_relation() {
        let field = f5();
        let a = Poly::from_ints(field.clone(), &[1, 2, 1]);
        let b = Poly::from_ints(field.clone(), &[1, 1]);
        let (g, s, t) = Poly::extended_gcd(&a, &b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn squarefree_simple_square() {
        // (y+1)^2 over F_3 -> [(y+1, 2)]
        let field = f3();
        let f = Poly::from_ints(field.clone(), &[1, 1]).pow(2);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(Poly::from_ints(field, &[1, 1]), 2)]);
    }

    #[test]
    fn squarefree_pth_power() {
        // y^3 over F_3 -> [(y, 3)]
        let field = f3();
        let f = Poly::monomial(field.clone(), field.one(), 3);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(Poly::x(field), 3)]);
    }

    #[test]
    fn squarefree_mixed() {
        // y^2 (y+1) over F_5 -> [(y+1, 1), (y, 2)]
        let field = f5();
        let f = Poly::x(field.clone())
            .pow(2)
            .mul(&Poly::from_ints(field.clone(), &[1, 1]));
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(
            dec,
            vec![
                (Poly::from_ints(field.clone(), &[1, 1]), 1),
                (Poly::x(field), 2)
            ]
        );
    }

    #[test]
    fn square_in_closure() {
        let field = f5();
        // (x+1)^2 x^2 -> true
        let f = Poly::from_ints(field.clone(), &[1, 1])
            .pow(2)
            .mul(&Poly::x(field.clone()).pow(2));
        assert!(f.is_square_in_closure().unwrap());
        // x -> false
        assert!(!Poly::x(field.clone()).is_square_in_closure().unwrap());
        // 3 (x^2+x+1)^2 -> true: the constant is a square in the closure
        let g = Poly::from_ints(field.clone(), &[1, 1, 1])
            .pow(2)
            .scale(&field.from_int(3));
        assert!(g.is_square_in_closure().unwrap());
    }

    #[test]
    fn factorization_recovers_product() {
        let field = f5();
        // (y-1)^2 (y-2) (y^2+2) with y^2+2 irreducible over F_5
        let f = Poly::from_ints(field.clone(), &[-1, 1])
            .pow(2)
            .mul(&Poly::from_ints(field.clone(), &[-2, 1]))
            .mul(&Poly::from_ints(field.clone(), &[2, 0, 1]));
        let factors = f.factor().unwrap();
        let mut prod = Poly::one(field);
        for (g, m) in &factors {
            prod = prod.mul(&g.pow(*m));
        }
        assert_eq!(prod, f.monic().unwrap());
        assert_eq!(factors.len(), 3);
    }

    #[test]
    fn degree_multiset_is_frobenius_cycle_type() {
        let field = f5();
        // (y-1)(y-2)(y^2+2): degrees 1,1,2
        let f = Poly::from_ints(field.clone(), &[-1, 1])
            .mul(&Poly::from_ints(field.clone(), &[-2, 1]))
            .mul(&Poly::from_ints(field, &[2, 0, 1]));
        assert_eq!(f.irreducible_degree_multiset(), vec![1, 1, 2]);
    }

    #[test]
    fn shift_substitutes() {
        let field = f5();
        // f(y) = y^2, f(y+1) = y^2 + 2y + 1
        let f = Poly::x(field.clone()).pow(2);
        let shifted = f.shift(&field.one());
        assert_eq!(shifted, Poly::from_ints(field, &[1, 2, 1]));
    }
}
