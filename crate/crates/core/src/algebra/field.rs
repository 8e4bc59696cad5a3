//! Arithmetic in the finite field F_q, q = p^e, p an odd prime.
//!
//! Extension fields are realised as F_p[t]/(mu) for a fixed monic
//! irreducible modulus mu of degree e, found by deterministic search, so
//! that equal (p, e) always name the same field representation.

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Description of the ground field F_q with q = p^e.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u64,
    e: u32,
    /// Monic irreducible modulus of degree e over F_p, coefficients in
    /// ascending degree (length e + 1). Empty when e == 1.
    modulus: Vec<u64>,
}

/// An element of F_q: its coordinate vector over F_p in the basis
/// 1, t, ..., t^{e-1}. The length always equals the extension degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fq(Vec<u64>);

impl Fq {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    /// The F_p value of a prime-field element (e == 1).
    pub fn as_prime(&self) -> u64 {
        debug_assert_eq!(self.0.len(), 1);
        self.0[0]
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors of n, each listed once.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// -- dense F_p[t] helpers used only for the modulus search --------------

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    fp_rem(&mut prod, m, p);
    prod
}

fn fp_rem(a: &mut Vec<u64>, m: &[u64], p: u64) {
    // m is monic
    fp_trim(a);
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        if lead != 0 {
            for (k, &mk) in m.iter().enumerate() {
                let idx = shift + k;
                a[idx] = (a[idx] + p * p - (lead * mk) % p) % p;
            }
        }
        a.pop();
        fp_trim(a);
    }
}

fn fp_powmod_x(exp_p: u64, exp_e: u32, m: &[u64], p: u64) -> Vec<u64> {
    // x^(p^exp_e') via repeated exponentiation by p, exp_e times, starting
    // from x^exp_p ... here we only need x^(p^k) mod m: iterate k times.
    let mut h = vec![0, 1]; // x
    let _ = exp_p;
    for _ in 0..exp_e {
        h = fp_powmod(&h, p, m, p);
    }
    h
}

fn fp_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = base.to_vec();
    fp_rem(&mut b, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = fp_mulmod(&result, &b, m, p);
        }
        b = fp_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !b.is_empty() {
        // a mod b with b made monic first
        let lb = *b.last().unwrap();
        let lb_inv = mod_inv(lb, p);
        let bm: Vec<u64> = b.iter().map(|&c| c * lb_inv % p).collect();
        fp_rem(&mut a, &bm, p);
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a != 0 mod p
    debug_assert!(a % p != 0);
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    let e = (f.len() - 1) as u32;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    // Rabin's test: x^{p^e} == x mod f, and gcd(x^{p^{e/q}} - x, f) = 1
    // for every prime q | e.
    for q in prime_factors(e as u64) {
        let k = e as u64 / q;
        let h = fp_powmod_x(p, k as u32, f, p);
        // h - x
        let mut diff = h;
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(&mut diff);
        let g = fp_gcd(&diff, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    let h = fp_powmod_x(p, e, f, p);
    let mut diff = h;
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(&mut diff);
    diff.is_empty()
}

impl FieldSpec {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Self, AlgebraError> {
        Self::extension(p, 1)
    }

    /// F_{p^e}, with the modulus fixed by deterministic search (smallest
    /// monic irreducible of degree e in the lexicographic coefficient
    /// order, constant coefficient varying fastest).
    pub fn extension(p: u64, e: u32) -> Result<Self, AlgebraError> {
        if p < 3 || !is_prime(p) {
            return Err(AlgebraError::InvalidField(format!(
                "characteristic must be an odd prime >= 3, got {p}"
            )));
        }
        if e == 0 {
            return Err(AlgebraError::InvalidField(
                "extension degree must be >= 1".into(),
            ));
        }
        if (p as f64).powi(e as i32) > 1e9 {
            return Err(AlgebraError::InvalidField(format!(
                "field order {p}^{e} exceeds the supported range"
            )));
        }
        let modulus = if e == 1 {
            Vec::new()
        } else {
            let mut found = None;
            // monic x^e + c_{e-1} x^{e-1} + ... + c_0, counter in base p
            'outer: for counter in 0..p.pow(e) {
                let mut f = vec![0u64; e as usize + 1];
                f[e as usize] = 1;
                let mut c = counter;
                for slot in f.iter_mut().take(e as usize) {
                    *slot = c % p;
                    c /= p;
                }
                if fp_is_irreducible(&f, p) {
                    found = Some(f);
                    break 'outer;
                }
            }
            found.ok_or_else(|| {
                AlgebraError::InvalidField(format!("no irreducible modulus of degree {e} found"))
            })?
        };
        Ok(FieldSpec { p, e, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// q = p^e.
    pub fn order(&self) -> u64 {
        self.p.pow(self.e)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Fq {
        Fq(vec![0; self.e as usize])
    }

    pub fn one(&self) -> Fq {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Fq {
        let p = self.p as i64;
        let mut v = vec![0u64; self.e as usize];
        v[0] = n.rem_euclid(p) as u64;
        Fq(v)
    }

    /// The class of t, a generator of F_q over F_p (e >= 2), or 1 when e == 1.
    pub fn gen(&self) -> Fq {
        if self.e == 1 {
            return self.one();
        }
        let mut v = vec![0u64; self.e as usize];
        v[1] = 1;
        Fq(v)
    }

    /// Element from its index in the base-p coordinate enumeration.
    pub fn element_from_index(&self, mut idx: u64) -> Fq {
        debug_assert!(idx < self.order());
        let mut v = vec![0u64; self.e as usize];
        for slot in v.iter_mut() {
            *slot = idx % self.p;
            idx /= self.p;
        }
        Fq(v)
    }

    pub fn element_index(&self, a: &Fq) -> u64 {
        let mut idx = 0u64;
        for &c in a.0.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    /// All q elements, in coordinate-index order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (0..self.order()).map(move |i| self.element_from_index(i))
    }

    pub fn is_zero(&self, a: &Fq) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: &Fq) -> bool {
        a.0[0] == 1 && a.0[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Fq, b: &Fq) -> Fq {
        Fq(a.0
            .iter()
            .zip(&b.0)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect())
    }

    pub fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        Fq(a.0
            .iter()
            .zip(&b.0)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect())
    }

    pub fn neg(&self, a: &Fq) -> Fq {
        Fq(a.0.iter().map(|&x| (self.p - x) % self.p).collect())
    }

    pub fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        if self.e == 1 {
            return Fq(vec![a.0[0] * b.0[0] % self.p]);
        }
        let mut prod = fp_mulmod(&a.0, &b.0, &self.modulus, self.p);
        prod.resize(self.e as usize, 0);
        Fq(prod)
    }

    /// a += b * c, in place.
    pub fn mul_add_assign(&self, acc: &mut Fq, b: &Fq, c: &Fq) {
        if self.e == 1 {
            acc.0[0] = (acc.0[0] + b.0[0] * c.0[0]) % self.p;
            return;
        }
        let prod = self.mul(b, c);
        for (x, y) in acc.0.iter_mut().zip(&prod.0) {
            *x = (*x + y) % self.p;
        }
    }

    pub fn inv(&self, a: &Fq) -> Result<Fq, AlgebraError> {
        if self.is_zero(a) {
            return Err(AlgebraError::DivisionByZero);
        }
        // a^(q-2)
        Ok(self.pow(a, self.order() - 2))
    }

    pub fn div(&self, a: &Fq, b: &Fq) -> Result<Fq, AlgebraError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Fq, mut n: u64) -> Fq {
        let mut result = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        result
    }

    /// The unique p-th root: a^{p^{e-1}} (Frobenius inverse).
    pub fn pth_root(&self, a: &Fq) -> Fq {
        let mut r = a.clone();
        for _ in 0..self.e.saturating_sub(1) {
            r = self.pow_frobenius(&r);
        }
        r
    }

    fn pow_frobenius(&self, a: &Fq) -> Fq {
        self.pow(a, self.p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: &Fq) -> Result<u64, AlgebraError> {
        if self.is_zero(a) {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut n = self.order() - 1;
        for q in prime_factors(n) {
            while n % q == 0 && self.is_one(&self.pow(a, n / q)) {
                n /= q;
            }
        }
        Ok(n)
    }

    pub fn random<R: rand::Rng>(&self, rng: &mut R) -> Fq {
        self.element_from_index(rng.gen_range(0..self.order()))
    }

    /// Display an element: a plain integer for e == 1, a t-polynomial
    /// otherwise.
    pub fn format(&self, a: &Fq) -> String {
        if self.e == 1 {
            return a.0[0].to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in a.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = match i {
                0 => c.to_string(),
                1 if c == 1 => "t".into(),
                1 => format!("{c}*t"),
                _ if c == 1 => format!("t^{i}"),
                _ => format!("{c}*t^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// The least primitive root modulo the prime p.
pub fn least_primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    'g: for g in 2..p {
        for &q in &factors {
            if pow_mod(g, (p - 1) / q, p) == 1 {
                continue 'g;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = FieldSpec::prime(5).unwrap();
        let a = f.from_int(3);
        let b = f.from_int(4);
        assert_eq!(f.mul(&a, &b), f.from_int(2)); // 12 = 2 mod 5
        assert_eq!(f.add(&a, &b), f.from_int(2));
        assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::extension(5, 0).is_err());
    }

    #[test]
    fn extension_field_arithmetic() {
        let f = FieldSpec::extension(3, 2).unwrap();
        assert_eq!(f.order(), 9);
        // every nonzero element is invertible
        for a in f.elements().skip(1) {
            let inv = f.inv(&a).unwrap();
            assert!(f.is_one(&f.mul(&a, &inv)));
        }
        // Frobenius fixed field is F_p
        for a in f.elements() {
            let ap = f.pow(&a, 3);
            let app = f.pow(&ap, 3);
            assert_eq!(app, a);
        }
    }

    #[test]
    fn pth_root_inverts_frobenius() {
        let f = FieldSpec::extension(5, 2).unwrap();
        for a in f.elements() {
            let r = f.pth_root(&a);
            assert_eq!(f.pow(&r, 5), a);
        }
    }

    #[test]
    fn modulus_is_deterministic() {
        let f1 = FieldSpec::extension(7, 2).unwrap();
        let f2 = FieldSpec::extension(7, 2).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(least_primitive_root(3), 2);
        assert_eq!(least_primitive_root(5), 2);
        assert_eq!(least_primitive_root(7), 3);
        assert_eq!(least_primitive_root(11), 2);
        assert_eq!(least_primitive_root(13), 2);
    }

    #[test]
    fn multiplicative_orders() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.multiplicative_order(&f.from_int(3)).unwrap(), 6);
        assert_eq!(f.multiplicative_order(&f.from_int(2)).unwrap(), 3);
        assert_eq!(f.multiplicative_order(&f.from_int(6)).unwrap(), 2);
        assert_eq!(f.multiplicative_order(&f.from_int(1)).unwrap(), 1);
    }
}
