//! Exact scalar fields: rational functions Q(q) and cyclotomic fields Q[q]/Φ_n.
//!
//! Every [`Scalar`] carries its field. Arithmetic operators panic when the
//! fields of the operands differ; the `try_*` methods report the mismatch
//! as an error instead.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("q-binomial [{n} {k}] undefined for k > n")]
    BinomialRange { n: i64, k: i64 },
    #[error("invalid scalar serialization: {0}")]
    Parse(String),
}

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    c: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(r: BigRational) -> Self {
        let mut p = Poly { c: vec![r] };
        p.trim();
        p
    }

    pub fn monomial(coef: BigRational, deg: usize) -> Self {
        if coef.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigRational::zero(); deg + 1];
        c[deg] = coef;
        Poly { c }
    }

    pub fn from_coeffs(c: Vec<BigRational>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Poly::from_coeffs(c.iter().map(|&x| rat(x)).collect())
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.c.last()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.c.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            match (self.c.get(k), o.c.get(k)) {
                (Some(a), Some(b)) => c.push(a + b),
                (Some(a), None) => c.push(a.clone()),
                (None, Some(b)) => c.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, r: &BigRational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly {
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead = d.lead().unwrap().clone();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let f = &r[k] / &lead;
            for (i, dc) in d.c.iter().enumerate() {
                if !dc.is_zero() {
                    let t = &f * dc;
                    r[k - dd + i] -= t;
                }
            }
            q[k - dd] = f;
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => self.scale(&(BigRational::one() / l)),
        }
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Returns (g, s) with s·a ≡ g (mod m), g = gcd(a, m) monic.
    fn inverse_mod(a: &Poly, m: &Poly) -> Option<Poly> {
        let (mut r0, mut r1) = (m.clone(), a.rem(m));
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let inv = BigRational::one() / &r0.c[0];
        Some(s0.scale(&inv).rem(m))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn is_monomial(&self) -> bool {
        self.c.iter().filter(|x| !x.is_zero()).count() == 1
    }
}

/// The n-th cyclotomic polynomial, memoized.
pub fn cyclotomic_poly(n: u32) -> Arc<Poly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut p = Poly::monomial(BigRational::one(), n as usize).sub(&Poly::one());
    for d in 1..n {
        if n % d == 0 {
            p = p.divrem(&cyclotomic_poly(d)).0;
        }
    }
    let p = Arc::new(p);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// Element of Q(q) as num/den with den monic and gcd(num, den) = 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: Poly::one(),
            });
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let l = den.lead().unwrap().clone();
        if !l.is_one() {
            let inv = BigRational::one() / l;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&o.den)).unwrap()
    }

    fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&o.num));
        }
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    fn inv(&self) -> Result<RatFunc, ScalarError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

/// Element of Q[q]/Φ_n, stored as the remainder of degree < φ(n).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycElem {
    n: u32,
    coeffs: Poly,
}

impl CycElem {
    pub fn new(n: u32, p: &Poly) -> Self {
        CycElem {
            n,
            coeffs: reduce_poly_mod_cyclotomic(p, n),
        }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &Poly {
        &self.coeffs
    }
}

fn reduce_poly_mod_cyclotomic(p: &Poly, n: u32) -> Poly {
    let m = cyclotomic_poly(n);
    if p.degree().map_or(true, |d| d < m.degree().unwrap()) {
        return p.clone();
    }
    p.rem(&m)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    RationalFunctions,
    Cyclotomic(u32),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::RationalFunctions => write!(f, "Q(q)"),
            Field::Cyclotomic(n) => write!(f, "Q[q]/Phi_{n}"),
        }
    }
}

impl Field {
    pub fn from_poly(self, p: Poly) -> Scalar {
        match self {
            Field::RationalFunctions => Scalar::Rat(RatFunc::from_poly(p)),
            Field::Cyclotomic(n) => Scalar::Cyc(CycElem::new(n, &p)),
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_poly(Poly::zero())
    }

    pub fn one(self) -> Scalar {
        self.from_poly(Poly::one())
    }

    pub fn int(self, n: i64) -> Scalar {
        self.from_poly(Poly::constant(rat(n)))
    }

    pub fn ratio(self, n: i64, d: i64) -> Scalar {
        self.from_poly(Poly::constant(BigRational::new(
            BigInt::from(n),
            BigInt::from(d),
        )))
    }

    pub fn rational(self, r: BigRational) -> Scalar {
        self.from_poly(Poly::constant(r))
    }

    pub fn q(self) -> Scalar {
        self.from_poly(Poly::monomial(BigRational::one(), 1))
    }

    /// q^k for any integer k.
    pub fn q_pow(self, k: i64) -> Scalar {
        let m = Poly::monomial(BigRational::one(), k.unsigned_abs() as usize);
        match self {
            Field::RationalFunctions => {
                if k >= 0 {
                    Scalar::Rat(RatFunc::from_poly(m))
                } else {
                    Scalar::Rat(RatFunc {
                        num: Poly::one(),
                        den: m,
                    })
                }
            }
            Field::Cyclotomic(n) => {
                let e = k.rem_euclid(n as i64) as usize;
                Scalar::Cyc(CycElem::new(n, &Poly::monomial(BigRational::one(), e)))
            }
        }
    }

    /// [n] = 1 + q + … + q^{n-1}; negative n gives -q^{n}[-n].
    pub fn q_int(self, n: i64) -> Scalar {
        if n >= 0 {
            self.from_poly(Poly::from_coeffs(vec![BigRational::one(); n as usize]))
        } else {
            -(self.q_pow(n) * self.q_int(-n))
        }
    }

    pub fn q_factorial(self, n: u32) -> Scalar {
        let mut acc = self.one();
        for k in 1..=n as i64 {
            acc = acc * self.q_int(k);
        }
        acc
    }

    /// Gaussian binomial, computed by the q-Pascal rule so that it is also
    /// defined at roots of unity.
    pub fn q_binomial(self, n: i64, k: i64) -> Result<Scalar, ScalarError> {
        if k < 0 || n < 0 || k > n {
            return Err(ScalarError::BinomialRange { n, k });
        }
        let p = q_binomial_poly(n as usize, k as usize);
        Ok(self.from_poly(p))
    }
}

fn q_binomial_poly(n: usize, k: usize) -> Poly {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Poly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&(n, k)) {
        return p.clone();
    }
    let p = if k == 0 || k == n {
        Poly::one()
    } else {
        // [n k] = [n-1 k-1] + q^k [n-1 k]
        let a = q_binomial_poly(n - 1, k - 1);
        let b = q_binomial_poly(n - 1, k);
        a.add(&Poly::monomial(BigRational::one(), k).mul(&b))
    };
    cache.lock().unwrap().insert((n, k), p.clone());
    p
}

pub fn q_int(n: i64) -> Scalar {
    Field::RationalFunctions.q_int(n)
}

pub fn q_factorial(n: u32) -> Scalar {
    Field::RationalFunctions.q_factorial(n)
}

pub fn q_binomial(n: i64, k: i64) -> Result<Scalar, ScalarError> {
    Field::RationalFunctions.q_binomial(n, k)
}

/// Image of a Laurent-polynomial element of Q(q) in Q[q]/Φ_n.
pub fn reduce_mod_cyclotomic(a: &Scalar, n: u32) -> Result<Scalar, ScalarError> {
    match a {
        Scalar::Cyc(c) if c.n == n => Ok(a.clone()),
        Scalar::Cyc(c) => Err(ScalarError::FieldMismatch(
            Field::Cyclotomic(c.n),
            Field::Cyclotomic(n),
        )),
        Scalar::Rat(r) => {
            let f = Field::Cyclotomic(n);
            let num = f.from_poly(r.num.clone());
            let den = f.from_poly(r.den.clone());
            num.try_div(&den)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(RatFunc),
    Cyc(CycElem),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::RationalFunctions,
            Scalar::Cyc(c) => Field::Cyclotomic(c.n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.num.is_zero(),
            Scalar::Cyc(c) => c.coeffs.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.num.is_one() && r.den.is_one(),
            Scalar::Cyc(c) => c.coeffs.is_one(),
        }
    }

    fn check(&self, o: &Scalar) -> Result<(), ScalarError> {
        if self.field() != o.field() {
            return Err(ScalarError::FieldMismatch(self.field(), o.field()));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(o)?;
        Ok(match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.add(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(CycElem {
                n: a.n,
                coeffs: a.coeffs.add(&b.coeffs),
            }),
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&o.neg_ref())
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(o)?;
        Ok(match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.mul(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => {
                let p = a.coeffs.mul(&b.coeffs);
                let coeffs = if a.coeffs.is_monomial() && a.coeffs.degree() == Some(0)
                    || b.coeffs.is_monomial() && b.coeffs.degree() == Some(0)
                {
                    p
                } else {
                    reduce_poly_mod_cyclotomic(&p, a.n)
                };
                Scalar::Cyc(CycElem { n: a.n, coeffs })
            }
            _ => unreachable!(),
        })
    }

    pub fn try_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.inv()?),
            Scalar::Cyc(a) => {
                let m = cyclotomic_poly(a.n);
                let s = Poly::inverse_mod(&a.coeffs, &m).ok_or(ScalarError::DivisionByZero)?;
                Scalar::Cyc(CycElem { n: a.n, coeffs: s })
            }
        })
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(o)?;
        self.try_mul(&o.try_inv()?)
    }

    pub fn inv(&self) -> Scalar {
        self.try_inv().expect("inverse of zero scalar")
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(RatFunc {
                num: a.num.neg(),
                den: a.den.clone(),
            }),
            Scalar::Cyc(a) => Scalar::Cyc(CycElem {
                n: a.n,
                coeffs: a.coeffs.neg(),
            }),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut b = base;
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// The numerator and denominator polynomials (denominator 1 for cyclotomic elements).
    pub fn as_fraction(&self) -> (Poly, Poly) {
        match self {
            Scalar::Rat(r) => (r.num.clone(), r.den.clone()),
            Scalar::Cyc(c) => (c.coeffs.clone(), Poly::one()),
        }
    }

    /// Value at a rational point (None at a pole); cyclotomic elements are
    /// evaluated on their reduced representative.
    pub fn eval_at(&self, x: &BigRational) -> Option<BigRational> {
        let (n, d) = self.as_fraction();
        let dv = d.eval(x);
        if dv.is_zero() {
            return None;
        }
        Some(n.eval(x) / dv)
    }

    /// Canonical JSON form with integer coefficients.
    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Rat(r) => {
                let (n, d) = integer_normalize(&r.num, &r.den);
                json!({ "num": int_map(&n), "den": int_map(&d) })
            }
            Scalar::Cyc(c) => {
                let l = common_denominator(c.coeffs.coeffs());
                let ints: Vec<BigInt> = c
                    .coeffs
                    .coeffs()
                    .iter()
                    .map(|x| (x * &l).to_integer())
                    .collect();
                let mut m = Map::new();
                m.insert("cyclotomic_n".into(), json!(c.n));
                m.insert("coeffs".into(), int_map(&ints));
                if !l.is_one() {
                    m.insert("den".into(), Value::String(l.to_integer().to_string()));
                }
                Value::Object(m)
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Scalar, ScalarError> {
        let obj = v
            .as_object()
            .ok_or_else(|| ScalarError::Parse("expected object".into()))?;
        if let Some(n) = obj.get("cyclotomic_n") {
            let n = n
                .as_u64()
                .filter(|&n| n >= 1)
                .ok_or_else(|| ScalarError::Parse("bad cyclotomic_n".into()))?
                as u32;
            let p = parse_int_map(
                obj.get("coeffs")
                    .ok_or_else(|| ScalarError::Parse("missing coeffs".into()))?,
            )?;
            let den = match obj.get("den") {
                None => BigRational::one(),
                Some(d) => parse_bigint(d)?.into(),
            };
            if den.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            return Ok(Field::Cyclotomic(n).from_poly(p.scale(&(BigRational::one() / den))));
        }
        let num = parse_int_map(
            obj.get("num")
                .ok_or_else(|| ScalarError::Parse("missing num".into()))?,
        )?;
        let den = parse_int_map(
            obj.get("den")
                .ok_or_else(|| ScalarError::Parse("missing den".into()))?,
        )?;
        Ok(Scalar::Rat(RatFunc::new(num, den)?))
    }
}

fn common_denominator(c: &[BigRational]) -> BigRational {
    let mut l = BigInt::one();
    for x in c {
        l = l.lcm(x.denom());
    }
    BigRational::from_integer(l)
}

/// Scale num/den to coprime integer coefficients with positive leading denominator coefficient.
fn integer_normalize(num: &Poly, den: &Poly) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut all: Vec<BigRational> = num.coeffs().to_vec();
    all.extend(den.coeffs().iter().cloned());
    let l = common_denominator(&all);
    let n: Vec<BigInt> = num.coeffs().iter().map(|x| (x * &l).to_integer()).collect();
    let d: Vec<BigInt> = den.coeffs().iter().map(|x| (x * &l).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in n.iter().chain(d.iter()) {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    if d.last().is_some_and(|x| x.is_negative()) {
        g = -g;
    }
    (
        n.iter().map(|x| x / &g).collect(),
        d.iter().map(|x| x / &g).collect(),
    )
}

fn int_map(c: &[BigInt]) -> Value {
    let mut m = Map::new();
    for (k, x) in c.iter().enumerate() {
        if !x.is_zero() {
            m.insert(k.to_string(), Value::String(x.to_string()));
        }
    }
    Value::Object(m)
}

fn parse_bigint(v: &Value) -> Result<BigInt, ScalarError> {
    match v {
        Value::String(s) => s
            .parse()
            .map_err(|_| ScalarError::Parse(format!("bad integer {s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| ScalarError::Parse(format!("bad integer {n}"))),
        _ => Err(ScalarError::Parse("expected integer".into())),
    }
}

fn parse_int_map(v: &Value) -> Result<Poly, ScalarError> {
    let obj = v
        .as_object()
        .ok_or_else(|| ScalarError::Parse("expected coefficient map".into()))?;
    let mut p = Poly::zero();
    for (k, x) in obj {
        let e: usize = k
            .parse()
            .map_err(|_| ScalarError::Parse(format!("bad exponent {k:?}")))?;
        let c = parse_bigint(x)?;
        p = p.add(&Poly::monomial(BigRational::from_integer(c), e));
    }
    Ok(p)
}

fn fmt_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for k in (0..p.c.len()).rev() {
        let c = &p.c[k];
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let mono = match k {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{k}"),
        };
        if mono.is_empty() {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{a}*{mono}")?;
        }
    }
    Ok(())
}

struct PolyDisplay<'a>(&'a Poly);

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self.0, f)
    }
}

impl Scalar {
    /// True when the scalar prints as a single signed term (no parentheses needed
    /// as a coefficient).
    pub fn is_simple(&self) -> bool {
        let (n, d) = self.as_fraction();
        d.is_one() && n.c.iter().filter(|x| !x.is_zero()).count() <= 1
    }

    /// Leading sign of the printed form.
    pub fn is_negative_term(&self) -> bool {
        let (n, d) = self.as_fraction();
        d.is_one() && n.is_monomial() && n.lead().unwrap().is_negative()
    }
}

impl Scalar {
    /// Terms (coefficient, exponent) when the value is a Laurent polynomial in
    /// q, lowest exponent first.
    pub fn laurent_terms(&self) -> Option<Vec<(BigRational, i64)>> {
        let (n, d) = self.as_fraction();
        let nz: Vec<(usize, &BigRational)> =
            d.c.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
        if nz.len() != 1 {
            return None;
        }
        let (k, dc) = nz[0];
        Some(
            n.c.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c / dc, i as i64 - k as i64))
                .collect(),
        )
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.den.is_one() {
                    fmt_poly(&r.num, f)
                } else {
                    let n = PolyDisplay(&r.num);
                    let d = PolyDisplay(&r.den);
                    let wrap = |p: &Poly| p.c.iter().filter(|x| !x.is_zero()).count() > 1;
                    match (wrap(&r.num), wrap(&r.den)) {
                        (true, true) => write!(f, "({n})/({d})"),
                        (true, false) => write!(f, "({n})/{d}"),
                        (false, true) => write!(f, "{n}/({d})"),
                        (false, false) => write!(f, "{n}/{d}"),
                    }
                }
            }
            Scalar::Cyc(c) => fmt_poly(&c.coeffs, f),
        }
    }
}

/// Parses an integer-coefficient Laurent monomial sum such as "q^2 - 3*q^-1 + 1".
pub fn parse_scalar(field: Field, s: &str) -> Result<Scalar, ScalarError> {
    let err = || ScalarError::Parse(format!("cannot parse scalar {s:?}"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err());
    }
    let mut acc = field.zero();
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ => (1, rest),
        };
        // term ends at next + or - that is not directly after '^'
        let bytes = body.as_bytes();
        let mut end = bytes.len();
        for i in 0..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && i > 0 && bytes[i - 1] != b'^' {
                end = i;
                break;
            }
        }
        let term = &body[..end];
        rest = &body[end..];
        let mut val = field.int(sign);
        for fac in term.split('*') {
            if fac.is_empty() {
                return Err(err());
            }
            if let Some(e) = fac.strip_prefix("q^") {
                let e: i64 = e.parse().map_err(|_| err())?;
                val = val * field.q_pow(e);
            } else if fac == "q" {
                val = val * field.q();
            } else if let Some((a, b)) = fac.split_once('/') {
                let a: i64 = a.parse().map_err(|_| err())?;
                let b: i64 = b.parse().map_err(|_| err())?;
                if b == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                val = val * field.ratio(a, b);
            } else {
                let n: i64 = fac.parse().map_err(|_| err())?;
                val = val * field.int(n);
            }
        }
        acc = acc + val;
    }
    Ok(acc)
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o).expect("scalar field mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$f(&o).expect("scalar field mismatch")
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$f(o).expect("scalar field mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

/// Exponent → integer coefficient view of a Laurent polynomial, used by tests
/// and by the printers.
pub fn laurent_coefficients(s: &Scalar) -> Option<BTreeMap<i64, BigRational>> {
    let (n, d) = s.as_fraction();
    if !d.is_monomial() {
        return None;
    }
    let shift = d.degree().unwrap() as i64;
    let l = d.lead().unwrap().clone();
    let mut m = BTreeMap::new();
    for (k, c) in n.coeffs().iter().enumerate() {
        if !c.is_zero() {
            m.insert(k as i64 - shift, c / &l);
        }
    }
    Some(m)
}

pub fn to_i64(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}
