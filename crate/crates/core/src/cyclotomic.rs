//! Exact cyclotomic integers `Z[ζ_n]`.
//!
//! A value is stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` after reduction
//! modulo the cyclotomic polynomial `Φ_n`, so two values with the same
//! conductor `n` are equal iff their coefficient vectors are. Values of
//! different conductors are compared after [`Cyc::lift`] to a common one.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &den);
        }
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// An element of `Z[ζ_n]`, `ζ_n = exp(2πi/n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cyc {
    n: u32,
    coeffs: Vec<i64>,
}

impl Cyc {
    fn reduce(n: u32, mut poly: Vec<i64>) -> Cyc {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        for i in (deg..poly.len()).rev() {
            let c = poly[i];
            if c != 0 {
                for (j, &p) in phi.iter().enumerate() {
                    poly[i - deg + j] -= c * p;
                }
            }
        }
        poly.resize(deg, 0);
        Cyc { n, coeffs: poly }
    }

    pub fn from_int(n: u32, v: i64) -> Cyc {
        let deg = cyclotomic_polynomial(n).len() - 1;
        let mut coeffs = vec![0; deg];
        coeffs[0] = v;
        Cyc { n, coeffs }
    }

    pub fn zero(n: u32) -> Cyc {
        Cyc::from_int(n, 0)
    }

    pub fn one(n: u32) -> Cyc {
        Cyc::from_int(n, 1)
    }

    /// `ζ_n^k`.
    pub fn root(n: u32, k: i64) -> Cyc {
        Cyc::from_exponents(n, [(k, 1)])
    }

    /// `Σ m · ζ_n^k` over the given `(k, m)` pairs.
    pub fn from_exponents(n: u32, terms: impl IntoIterator<Item = (i64, i64)>) -> Cyc {
        let mut poly = vec![0i64; n as usize];
        for (k, m) in terms {
            poly[k.rem_euclid(n as i64) as usize] += m;
        }
        Cyc::reduce(n, poly)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as an integer, if it is rational.
    pub fn to_int(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then(|| self.coeffs[0])
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Cyc {
        let n = self.n as usize;
        let mut poly = vec![0i64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            poly[(n - i) % n] += c;
        }
        Cyc::reduce(self.n, poly)
    }

    /// The same number written in `Z[ζ_m]`; `m` must be a multiple of the
    /// conductor.
    pub fn lift(&self, m: u32) -> Cyc {
        assert!(m % self.n == 0, "cannot lift from {} to {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut poly = vec![0i64; m as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            poly[i * step] += c;
        }
        Cyc::reduce(m, poly)
    }

    /// Divides every coefficient by `d`, if that is exact.
    pub fn div_exact(&self, d: i64) -> Option<Cyc> {
        if self.coeffs.iter().any(|c| c % d != 0) {
            return None;
        }
        Some(Cyc { n: self.n, coeffs: self.coeffs.iter().map(|c| c / d).collect() })
    }

    pub fn scale(&self, k: i64) -> Cyc {
        Cyc { n: self.n, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        if a.n == b.n {
            (a.clone(), b.clone())
        } else {
            let m = a.n.lcm(&b.n);
            (a.lift(m), b.lift(m))
        }
    }

    /// Equality across conductors.
    pub fn same_value(&self, other: &Cyc) -> bool {
        let (a, b) = Cyc::common(self, other);
        a == b
    }
}

impl Add for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        let (a, b) = Cyc::common(self, rhs);
        Cyc { n: a.n, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }
}

impl Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        self + &(-rhs)
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        self.scale(-1)
    }
}

impl Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        let (a, b) = Cyc::common(self, rhs);
        let mut poly = vec![0i64; a.coeffs.len() + b.coeffs.len()];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                poly[i + j] += x * y;
            }
        }
        Cyc::reduce(a.n, poly)
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.to_int() {
            return write!(f, "{v}");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "z{}^{i}", self.n)?,
                _ => write!(f, "{a}*z{}^{i}", self.n)?,
            }
        }
        Ok(())
    }
}
