use std::fmt;

use super::{Budget, OracleError};

/// The finite field `F_q`, `q = p^e <= 255`, with full operation tables.
///
/// Elements are `u8` codes. For `e > 1` the code of `c_0 + c_1 x + ... +
/// c_{e-1} x^{e-1}` (residues modulo [`FqField::modulus`]) is
/// `sum c_i p^i`; for `e = 1` it is the residue itself.
#[derive(Clone)]
pub struct FqField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        (self.p, self.e, &self.modulus) == (other.p, other.e, &other.modulus)
    }
}

impl Eq for FqField {}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FqField")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `F_{p^e}` reduced modulo the lexicographically smallest monic irreducible
/// of degree `e` over `F_p` (coefficients compared from the constant term up).
pub fn make_field(p: u32, e: u32, budget: &Budget) -> Result<FqField, OracleError> {
    if !is_prime(p) {
        return Err(OracleError::NotPrime(p));
    }
    if e == 0 {
        return Err(OracleError::InvalidField("extension degree must be at least 1".into()));
    }
    let q = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
    let cap = budget.max_field_order.min(255) as u64;
    if q > cap {
        return Err(OracleError::BudgetExceeded(format!("field order {p}^{e} exceeds {cap}")));
    }
    let prime = FqField::prime(p);
    if e == 1 {
        return Ok(prime);
    }
    let modulus = monic_polys(&prime, e as usize)
        .find(|f| f.is_irreducible(&prime, budget).unwrap_or(false))
        .expect("an irreducible of every degree exists");
    Ok(FqField::extension(&prime, &modulus))
}

impl FqField {
    fn prime(p: u32) -> Self {
        let idx = |a: u32, b: u32| (a * p + b) as usize;
        let mut add = vec![0u8; (p * p) as usize];
        let mut mul = vec![0u8; (p * p) as usize];
        for a in 0..p {
            for b in 0..p {
                add[idx(a, b)] = ((a + b) % p) as u8;
                mul[idx(a, b)] = ((a * b) % p) as u8;
            }
        }
        let mut field = Self {
            p,
            e: 1,
            q: p,
            modulus: vec![0, 1],
            add,
            mul,
            neg: (0..p).map(|a| ((p - a) % p) as u8).collect(),
            inv: vec![0; p as usize],
        };
        field.fill_inverses();
        field
    }

    fn extension(prime: &FqField, modulus: &FqPoly) -> Self {
        let p = prime.p;
        let e = modulus.degree().expect("non-constant modulus") as u32;
        let q = p.pow(e);
        let decode = |code: u32| -> FqPoly {
            let mut c = Vec::with_capacity(e as usize);
            let mut x = code;
            for _ in 0..e {
                c.push((x % p) as u8);
                x /= p;
            }
            FqPoly::new(c)
        };
        let encode = |poly: &FqPoly| -> u8 {
            poly.coeffs()
                .iter()
                .rev()
                .fold(0u32, |acc, &c| acc * p + c as u32) as u8
        };
        let elems: Vec<FqPoly> = (0..q).map(decode).collect();
        let mut add = vec![0u8; (q * q) as usize];
        let mut mul = vec![0u8; (q * q) as usize];
        for a in 0..q as usize {
            for b in 0..q as usize {
                add[a * q as usize + b] = encode(&elems[a].add(&elems[b], prime));
                mul[a * q as usize + b] = encode(&elems[a].mul(&elems[b], prime).rem(modulus, prime));
            }
        }
        let neg = elems.iter().map(|x| encode(&x.neg(prime))).collect();
        let mut field = Self {
            p,
            e,
            q,
            modulus: modulus.coeffs().iter().map(|&c| c as u32).collect(),
            add,
            mul,
            neg,
            inv: vec![0; q as usize],
        };
        field.fill_inverses();
        field
    }

    fn fill_inverses(&mut self) {
        for a in 1..self.q as u8 {
            self.inv[a as usize] = (1..self.q as u8)
                .find(|&b| self.mul(a, b) == 1)
                .expect("field element has an inverse");
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the defining polynomial over `F_p`, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    /// Element code from coefficients over `F_p` (constant term first).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<u8, OracleError> {
        if coeffs.len() > self.e as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(OracleError::InvalidMatrix(format!(
                "{coeffs:?} is not an element of F_{}",
                self.q
            )));
        }
        Ok(coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c) as u8)
    }

    /// Coefficients over `F_p`, constant term first, length `e`.
    pub fn to_coeffs(&self, a: u8) -> Vec<u32> {
        let mut x = a as u32;
        (0..self.e)
            .map(|_| {
                let c = x % self.p;
                x /= self.p;
                c
            })
            .collect()
    }
}

/// Polynomial over `F_q`, constant term first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqPoly {
    coeffs: Vec<u8>,
}

impl FqPoly {
    pub fn new(mut coeffs: Vec<u8>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &FqPoly, f: &FqField) -> FqPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u8], i: usize| v.get(i).copied().unwrap_or(0);
        FqPoly::new((0..n).map(|i| f.add(get(&self.coeffs, i), get(&other.coeffs, i))).collect())
    }

    pub fn neg(&self, f: &FqField) -> FqPoly {
        FqPoly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn mul(&self, other: &FqPoly, f: &FqField) -> FqPoly {
        if self.is_zero() || other.is_zero() {
            return FqPoly::new(Vec::new());
        }
        let mut out = vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        FqPoly::new(out)
    }

    pub fn pow(&self, e: u32, f: &FqField) -> FqPoly {
        (0..e).fold(FqPoly::one(), |acc, _| acc.mul(self, f))
    }

    /// Remainder modulo a non-zero divisor.
    pub fn rem(&self, divisor: &FqPoly, f: &FqField) -> FqPoly {
        let dd = divisor.degree().expect("non-zero divisor");
        let lead_inv = f.inv(divisor.coeffs[dd]).expect("non-zero leading coefficient");
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let c = f.mul(r[top], lead_inv);
            if c != 0 {
                for (i, &d) in divisor.coeffs.iter().enumerate() {
                    let k = top - dd + i;
                    r[k] = f.sub(r[k], f.mul(c, d));
                }
            }
            r.pop();
        }
        FqPoly::new(r)
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(&self, f: &FqField, budget: &Budget) -> Result<bool, OracleError> {
        let Some(d) = self.degree() else {
            return Ok(false);
        };
        if d == 0 {
            return Ok(false);
        }
        let candidates: u128 = (1..=d / 2).map(|k| (f.order() as u128).pow(k as u32)).sum();
        budget.check("irreducibility test", candidates)?;
        for k in 1..=d / 2 {
            if monic_polys(f, k).any(|g| self.rem(&g, f).is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        parts.join(" + ")
    }
}

/// Monic polynomials of degree `d` over `F_q`, ordered lexicographically by
/// `(c_0, c_1, ..., c_{d-1})`.
pub(crate) fn monic_polys(f: &FqField, d: usize) -> impl Iterator<Item = FqPoly> + '_ {
    let q = f.order() as u64;
    let total = q.pow(d as u32);
    (0..total).map(move |idx| {
        let mut coeffs = vec![0u8; d + 1];
        let mut x = idx;
        for k in (0..d).rev() {
            coeffs[k] = (x % q) as u8;
            x /= q;
        }
        coeffs[d] = 1;
        FqPoly::new(coeffs)
    })
}

/// All monic irreducibles of degree `d` over `f`, in [`monic_polys`] order.
pub fn irreducibles(f: &FqField, d: usize, budget: &Budget) -> Result<Vec<FqPoly>, OracleError> {
    if d == 0 {
        return Ok(Vec::new());
    }
    budget.check("irreducible enumeration", (f.order() as u128).pow(d as u32))?;
    let mut out = Vec::new();
    for g in monic_polys(f, d) {
        if g.is_irreducible(f, budget)? {
            out.push(g);
        }
    }
    Ok(out)
}
