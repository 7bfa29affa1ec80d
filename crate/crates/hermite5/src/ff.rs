//! Arithmetic in GF(p) and GF(p^n).
//!
//! A [`FieldCtx`] owns the characteristic, the extension degree, and (for
//! proper extensions) the monic irreducible modulus together with a
//! precomputed reduction table. Elements are dense coefficient vectors in the
//! power basis 1, z, ..., z^(n-1); all operations go through the context.
//! Univariate polynomials over GF(p) are [`UniPoly`] values with ascending
//! coefficients and no trailing zeros, so the zero polynomial has an empty
//! coefficient vector and `degree()` is `None` rather than a sentinel integer
//! mixed into arithmetic.

use crate::Error;

/// Largest characteristic accepted: keeps products of two residues inside
/// u64 without widening.
const MAX_PRIME: u64 = 1 << 31;

pub(crate) fn add_m(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn sub_m(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn mul_m(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn neg_m(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

/// Inverse of a nonzero residue mod a prime, by the extended Euclid algorithm.
pub(crate) fn inv_m(a: u64, p: u64) -> Result<u64, Error> {
    if a.is_multiple_of(p) {
        return Err(Error::DivisionByZero);
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Ok(t0.rem_euclid(p as i128) as u64)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A univariate polynomial over GF(p), ascending coefficients, normalized so
/// the vector never ends in a zero. The zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl UniPoly {
    /// Builds a polynomial from ascending coefficients, reducing each entry
    /// mod p and trimming trailing zeros.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        UniPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        UniPoly::new(p, vec![1])
    }

    /// The monomial x.
    pub fn x(p: u64) -> Self {
        UniPoly::new(p, vec![0, 1])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = add_m(self.coeff(i), rhs.coeff(i), self.p);
        }
        UniPoly::new(self.p, out)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = sub_m(self.coeff(i), rhs.coeff(i), self.p);
        }
        UniPoly::new(self.p, out)
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_m(out[i + j], mul_m(a, b, self.p), self.p);
            }
        }
        UniPoly::new(self.p, out)
    }

    pub fn scale(&self, c: u64) -> UniPoly {
        UniPoly::new(self.p, self.coeffs.iter().map(|&a| mul_m(a, c % self.p, self.p)).collect())
    }

    /// Quotient and remainder; the divisor may have any nonzero leading
    /// coefficient.
    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), Error> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = inv_m(divisor.leading_coeff(), self.p)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = mul_m(rem[k], lc_inv, self.p);
            if factor != 0 {
                quot[k - d] = factor;
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[k - d + i] = sub_m(rem[k - d + i], mul_m(factor, dc, self.p), self.p);
                }
            }
            rem.pop();
        }
        Ok((UniPoly::new(self.p, quot), UniPoly::new(self.p, rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly, Error> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            0 | 1 => a,
            lc => a.scale(inv_m(lc, self.p).expect("nonzero leading coefficient")),
        }
    }

    /// Evaluation at a prime-field point (Horner).
    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = add_m(mul_m(acc, x % self.p, self.p), c, self.p);
        }
        acc
    }

    /// Evaluation at an extension-field element, coefficients lifted from
    /// the prime subfield.
    pub fn eval_element(&self, ctx: &FieldCtx, a: &FFElement) -> FFElement {
        let mut acc = ctx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = ctx.add(&ctx.mul(&acc, a), &ctx.from_base(c));
        }
        acc
    }

    /// Rabin's criterion: a monic f of degree n is irreducible over GF(p)
    /// iff x^(p^n) = x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for every prime
    /// l dividing n. Non-monic input is normalized first; constants are not
    /// irreducible.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let f = if self.is_monic() {
            self.clone()
        } else {
            self.scale(inv_m(self.leading_coeff(), self.p).expect("nonzero leading coefficient"))
        };
        let x = UniPoly::x(self.p);
        // frob[k] = x^(p^k) mod f, built by repeated p-th powering
        let mut frob = x.clone();
        let mut frob_at = vec![x.clone()];
        for _ in 0..n {
            frob = poly_pow_mod(&frob, self.p, &f);
            frob_at.push(frob.clone());
        }
        if frob_at[n] != x.rem(&f).expect("monic divisor") {
            return false;
        }
        for l in prime_factors(n as u64) {
            let g = frob_at[n / l as usize].sub(&x);
            let d = g.gcd(&f);
            if d.degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Parses either a monomial sum like `x^5 + x^2 + 1` (any single-letter
    /// variable, signed coefficients) or a compact ascending coefficient list
    /// like `1,0,1,0,0,1`.
    pub fn parse(p: u64, text: &str) -> Result<UniPoly, Error> {
        let coeffs = parse_poly_text(p, text)?;
        Ok(UniPoly::new(p, coeffs))
    }

    /// Canonical monomial form with the given variable letter, descending
    /// powers, coefficients as canonical residues.
    pub fn to_text(&self, var: char) -> String {
        render_poly(&self.coeffs, var)
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text('x'))
    }
}

fn render_poly(coeffs: &[u64], var: char) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, _) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, _) => format!("{c}{var}"),
            (_, 1) => format!("{var}^{i}"),
            (_, _) => format!("{c}{var}^{i}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Ascending coefficients from either text format; entries reduced mod p.
fn parse_poly_text(p: u64, text: &str) -> Result<Vec<u64>, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if !text.chars().any(|c| c.is_ascii_alphabetic()) && text.contains(',') {
        return text
            .split(',')
            .map(|tok| parse_residue(p, tok))
            .collect::<Result<Vec<_>, _>>();
    }
    if !text.chars().any(|c| c.is_ascii_alphabetic()) && !text.contains(',') {
        // a bare constant
        return Ok(vec![parse_residue(p, text)?]);
    }
    let normalized = text.replace('-', "+-");
    let mut coeffs: Vec<u64> = Vec::new();
    for raw in normalized.split('+') {
        let tok = raw.trim();
        if tok.is_empty() {
            continue;
        }
        let (neg, tok) = match tok.strip_prefix('-') {
            Some(rest) => (true, rest.trim_start()),
            None => (false, tok),
        };
        if tok.is_empty() {
            return Err(Error::Parse("dangling sign".into()));
        }
        let mut chars = tok.char_indices().peekable();
        let mut digits_end = 0;
        while let Some(&(i, c)) = chars.peek() {
            if c.is_ascii_digit() {
                digits_end = i + c.len_utf8();
                chars.next();
            } else {
                break;
            }
        }
        let coef_text = &tok[..digits_end];
        let mut rest = tok[digits_end..].trim_start();
        rest = rest.strip_prefix('*').map(str::trim_start).unwrap_or(rest);
        let coef = if coef_text.is_empty() {
            if rest.is_empty() {
                return Err(Error::Parse(format!("bad term: {raw:?}")));
            }
            1
        } else {
            coef_text
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad coefficient: {coef_text:?}")))?
                % p
        };
        let exp = if rest.is_empty() {
            0
        } else {
            let mut rc = rest.chars();
            let v = rc.next().unwrap();
            if !v.is_ascii_alphabetic() {
                return Err(Error::Parse(format!("bad term: {raw:?}")));
            }
            let after = rc.as_str().trim_start();
            if after.is_empty() {
                1
            } else if let Some(etext) = after.strip_prefix('^') {
                let etext = etext.trim();
                let e: usize = etext
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent: {etext:?}")))?;
                if e > 64 {
                    return Err(Error::Parse(format!("exponent too large: {e}")));
                }
                e
            } else {
                return Err(Error::Parse(format!("bad term: {raw:?}")));
            }
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        let signed = if neg { neg_m(coef, p) } else { coef };
        coeffs[exp] = add_m(coeffs[exp], signed, p);
    }
    Ok(coeffs)
}

fn parse_residue(p: u64, tok: &str) -> Result<u64, Error> {
    let tok = tok.trim();
    let v: i64 = tok
        .parse()
        .map_err(|_| Error::Parse(format!("bad residue: {tok:?}")))?;
    Ok(v.rem_euclid(p as i64) as u64)
}

fn poly_pow_mod(base: &UniPoly, mut e: u64, modulus: &UniPoly) -> UniPoly {
    let mut r = UniPoly::one(base.p());
    let mut b = base.rem(modulus).expect("nonzero modulus");
    while e > 0 {
        if e & 1 == 1 {
            r = r.mul(&b).rem(modulus).expect("nonzero modulus");
        }
        b = b.mul(&b).rem(modulus).expect("nonzero modulus");
        e >>= 1;
    }
    r
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

/// The lexicographically smallest monic irreducible polynomial of degree n
/// over GF(p): coefficient vectors are scanned in ascending counter order,
/// the counter's base-p digits giving the non-leading coefficients with the
/// constant term least significant.
pub fn find_irreducible(p: u64, n: u32) -> UniPoly {
    let total = p.checked_pow(n).expect("p^n must fit in u64");
    for k in 0..total {
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut kk = k;
        for _ in 0..n {
            coeffs.push(kk % p);
            kk /= p;
        }
        coeffs.push(1);
        let f = UniPoly::new(p, coeffs);
        if f.is_irreducible() {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

/// Number of monic irreducible polynomials of degree n over GF(p), by the
/// Moebius necklace formula (1/n) sum_{d | n} mu(d) p^(n/d).
pub fn irreducible_count(p: u64, n: u32) -> u64 {
    let mut total: i128 = 0;
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mu = moebius(d as u64);
        if mu == 0 {
            continue;
        }
        total += mu as i128 * p.pow(n / d) as i128;
    }
    (total / n as i128) as u64
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut mu = 1i64;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// An element of GF(p^n): coordinates in the power basis 1, z, ..., z^(n-1),
/// each a canonical residue in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FFElement {
    coeffs: Vec<u64>,
}

impl FFElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Canonical monomial form in the given variable, e.g. `z^4 + 3z + 1`.
    pub fn to_text(&self, var: char) -> String {
        render_poly(&self.coeffs, var)
    }
}

impl std::fmt::Display for FFElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text('z'))
    }
}

/// A finite field GF(p^n). Degree 1 contexts have no modulus; proper
/// extensions carry a monic irreducible modulus over GF(p) and a reduction
/// table for z^n .. z^(2n-2). Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    degree: usize,
    modulus: Option<UniPoly>,
    /// reduction[i] = coordinates of z^(n+i) for i in 0..n-1
    reduction: Vec<Vec<u64>>,
}

impl FieldCtx {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<FieldCtx, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::Unsupported(format!(
                "characteristic {p} exceeds the supported range"
            )));
        }
        Ok(FieldCtx {
            p,
            degree: 1,
            modulus: None,
            reduction: vec![],
        })
    }

    /// GF(p^n) as GF(p)[z]/(modulus). The base must be a prime field; towers
    /// are modeled as separate contexts.
    pub fn extension(base: &FieldCtx, modulus: UniPoly) -> Result<FieldCtx, Error> {
        if base.degree != 1 {
            return Err(Error::Unsupported(
                "extensions are built over prime fields only".into(),
            ));
        }
        if modulus.p() != base.p {
            return Err(Error::Unsupported(
                "modulus is defined over a different prime".into(),
            ));
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic(modulus.to_text('x')));
        }
        let n = modulus.degree().expect("monic polynomials are nonzero");
        if n < 2 {
            return Err(Error::Unsupported(
                "extension degree must be at least 2".into(),
            ));
        }
        if base.p.checked_pow(n as u32).is_none() {
            return Err(Error::Unsupported(format!(
                "field order {}^{} does not fit in u64",
                base.p, n
            )));
        }
        if !modulus.is_irreducible() {
            return Err(Error::NotIrreducible(modulus.to_text('x')));
        }
        let p = base.p;
        // z^n = -(low part of the modulus)
        let mut row: Vec<u64> = (0..n).map(|i| neg_m(modulus.coeff(i), p)).collect();
        let mut reduction = vec![row.clone()];
        for _ in 1..n.saturating_sub(1) {
            // multiply by z: shift up, fold the overflow back through z^n
            let top = row[n - 1];
            let mut next = vec![0u64; n];
            next[1..n].copy_from_slice(&row[..n - 1]);
            if top != 0 {
                for (i, slot) in next.iter_mut().enumerate() {
                    *slot = add_m(*slot, mul_m(top, reduction[0][i], p), p);
                }
            }
            reduction.push(next.clone());
            row = next;
        }
        Ok(FieldCtx {
            p,
            degree: n,
            modulus: Some(modulus),
            reduction,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> Option<&UniPoly> {
        self.modulus.as_ref()
    }

    /// p^n, the number of elements.
    pub fn order(&self) -> u64 {
        self.p.pow(self.degree as u32)
    }

    pub fn zero(&self) -> FFElement {
        FFElement {
            coeffs: vec![0; self.degree],
        }
    }

    pub fn one(&self) -> FFElement {
        self.from_base(1)
    }

    /// Embeds a prime-field residue.
    pub fn from_base(&self, c: u64) -> FFElement {
        let mut coeffs = vec![0; self.degree];
        coeffs[0] = c % self.p;
        FFElement { coeffs }
    }

    /// The generator z of a proper extension.
    pub fn generator(&self) -> FFElement {
        assert!(self.degree >= 2, "prime fields have no generator z");
        let mut coeffs = vec![0; self.degree];
        coeffs[1] = 1;
        FFElement { coeffs }
    }

    /// Builds an element from coordinates (length must equal the degree);
    /// entries are reduced mod p.
    pub fn element(&self, coeffs: Vec<u64>) -> Result<FFElement, Error> {
        if coeffs.len() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: coeffs.len(),
            });
        }
        Ok(FFElement {
            coeffs: coeffs.into_iter().map(|c| c % self.p).collect(),
        })
    }

    /// The k-th element in the enumeration by base-p digits of k
    /// (constant coordinate least significant).
    pub fn element_from_index(&self, k: u64) -> FFElement {
        let mut coeffs = Vec::with_capacity(self.degree);
        let mut kk = k;
        for _ in 0..self.degree {
            coeffs.push(kk % self.p);
            kk /= self.p;
        }
        FFElement { coeffs }
    }

    /// All p^n elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FFElement> + '_ {
        (0..self.order()).map(move |k| self.element_from_index(k))
    }

    pub fn add(&self, a: &FFElement, b: &FFElement) -> FFElement {
        FFElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| add_m(x, y, self.p))
                .collect(),
        }
    }

    pub fn sub(&self, a: &FFElement, b: &FFElement) -> FFElement {
        FFElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| sub_m(x, y, self.p))
                .collect(),
        }
    }

    pub fn neg(&self, a: &FFElement) -> FFElement {
        FFElement {
            coeffs: a.coeffs.iter().map(|&x| neg_m(x, self.p)).collect(),
        }
    }

    pub fn scale(&self, c: u64, a: &FFElement) -> FFElement {
        let c = c % self.p;
        FFElement {
            coeffs: a.coeffs.iter().map(|&x| mul_m(c, x, self.p)).collect(),
        }
    }

    pub fn mul(&self, a: &FFElement, b: &FFElement) -> FFElement {
        let n = self.degree;
        if n == 1 {
            return FFElement {
                coeffs: vec![mul_m(a.coeffs[0], b.coeffs[0], self.p)],
            };
        }
        let mut raw = vec![0u64; 2 * n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                raw[i + j] = add_m(raw[i + j], mul_m(x, y, self.p), self.p);
            }
        }
        let mut out: Vec<u64> = raw[..n].to_vec();
        for (red, &high) in self.reduction.iter().zip(&raw[n..]) {
            if high == 0 {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = add_m(*slot, mul_m(high, red[i], self.p), self.p);
            }
        }
        FFElement { coeffs: out }
    }

    pub fn pow(&self, a: &FFElement, mut e: u64) -> FFElement {
        let mut r = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse, by the extended Euclid algorithm against the
    /// modulus.
    pub fn invert(&self, a: &FFElement) -> Result<FFElement, Error> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.degree == 1 {
            return Ok(FFElement {
                coeffs: vec![inv_m(a.coeffs[0], self.p)?],
            });
        }
        let f = self.modulus.as_ref().expect("extension has a modulus");
        let a_poly = UniPoly::new(self.p, a.coeffs.clone());
        // extended Euclid: s*a + t*f = gcd = constant
        let (mut r0, mut r1) = (a_poly, f.clone());
        let (mut s0, mut s1) = (UniPoly::one(self.p), UniPoly::zero(self.p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
        }
        debug_assert_eq!(r0.degree(), Some(0), "modulus must be irreducible");
        let scale = inv_m(r0.coeff(0), self.p)?;
        let inv_poly = s0.scale(scale).rem(f)?;
        let mut coeffs = vec![0u64; self.degree];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            *slot = inv_poly.coeff(i);
        }
        Ok(FFElement { coeffs })
    }

    /// a^(p^k), by k-fold p-th powering.
    pub fn frobenius(&self, a: &FFElement, k: usize) -> FFElement {
        let mut r = a.clone();
        for _ in 0..k {
            r = self.pow(&r, self.p);
        }
        r
    }

    /// Trace of z^i over the prime field, read off as the trace of the i-th
    /// power of the companion matrix of the modulus.
    pub fn trace_power(&self, i: usize) -> u64 {
        let f = self
            .modulus
            .as_ref()
            .expect("trace_power requires a proper extension");
        trace_power_mod(self.p, f, i)
    }

    /// The monic minimal polynomial of a over GF(p): smallest linear
    /// dependency among 1, a, a^2, ... found by Gaussian elimination.
    pub fn minimal_polynomial(&self, a: &FFElement) -> UniPoly {
        let n = self.degree;
        let mut powers: Vec<Vec<u64>> = vec![self.one().coeffs];
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
            powers.push(acc.coeffs.clone());
        }
        for k in 1..=n {
            if let Some(combo) = solve_in_span(self.p, &powers[..k], &powers[k], n) {
                let mut coeffs = vec![0u64; k + 1];
                for (i, c) in combo.into_iter().enumerate() {
                    coeffs[i] = neg_m(c, self.p);
                }
                coeffs[k] = 1;
                return UniPoly::new(self.p, coeffs);
            }
        }
        unreachable!("a^n is always a combination of lower powers")
    }

    /// The characteristic polynomial of a for GF(p^n)/GF(p), as the conjugate
    /// product over all n Frobenius images of a. Monic of degree n over GF(p).
    pub fn char_poly(&self, a: &FFElement) -> UniPoly {
        let n = self.degree;
        let mut conjs = Vec::with_capacity(n);
        let mut c = a.clone();
        for _ in 0..n {
            conjs.push(c.clone());
            c = self.pow(&c, self.p);
        }
        // expand prod (t - conj) with coefficients in the extension
        let mut acc: Vec<FFElement> = vec![self.one()];
        for conj in &conjs {
            let mut next = vec![self.zero(); acc.len() + 1];
            for (d, co) in acc.iter().enumerate() {
                next[d + 1] = self.add(&next[d + 1], co);
                let m = self.mul(co, conj);
                next[d] = self.sub(&next[d], &m);
            }
            acc = next;
        }
        // the product is Galois-stable, so every coefficient sits in GF(p)
        let coeffs: Vec<u64> = acc
            .iter()
            .map(|co| {
                debug_assert!(co.coeffs[1..].iter().all(|&v| v == 0));
                co.coeffs[0]
            })
            .collect();
        UniPoly::new(self.p, coeffs)
    }

    /// Parses an element from either polynomial text in any single-letter
    /// variable (degree below the field degree) or a compact coordinate list.
    pub fn parse_element(&self, text: &str) -> Result<FFElement, Error> {
        let coeffs = parse_poly_text(self.p, text)?;
        if coeffs.len() > self.degree {
            return Err(Error::Parse(format!(
                "element degree {} is not below the field degree {}",
                coeffs.len() - 1,
                self.degree
            )));
        }
        let mut full = coeffs;
        full.resize(self.degree, 0);
        self.element(full)
    }
}

/// Trace of z^i in GF(p)[z]/(f) via the companion matrix of f; well defined
/// for any monic modulus, irreducible or not.
pub(crate) fn trace_power_mod(p: u64, f: &UniPoly, i: usize) -> u64 {
    let n = f.degree().expect("monic modulus");
    let mut companion = vec![vec![0u64; n]; n];
    for c in 0..n - 1 {
        companion[c + 1][c] = 1;
    }
    for (r, row) in companion.iter_mut().enumerate() {
        row[n - 1] = neg_m(f.coeff(r), p);
    }
    let mut acc: Vec<Vec<u64>> = (0..n)
        .map(|r| (0..n).map(|c| u64::from(r == c)).collect())
        .collect();
    for _ in 0..i {
        acc = mat_mul(&acc, &companion, p);
    }
    (0..n).fold(0, |t, r| add_m(t, acc[r][r], p))
}

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for r in 0..n {
        for k in 0..n {
            if a[r][k] == 0 {
                continue;
            }
            for c in 0..n {
                out[r][c] = add_m(out[r][c], mul_m(a[r][k], b[k][c], p), p);
            }
        }
    }
    out
}

/// If `target` lies in the span of `rows` over GF(p), returns combination
/// coefficients; `width` is the common vector length.
fn solve_in_span(p: u64, rows: &[Vec<u64>], target: &[u64], width: usize) -> Option<Vec<u64>> {
    let k = rows.len();
    // augmented rows [row | e_i] so elimination tracks the combination
    let mut mat: Vec<Vec<u64>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..k).map(|j| u64::from(i == j)));
            v
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(sel) = (r..k).find(|&rr| mat[rr][col] != 0) else {
            continue;
        };
        mat.swap(r, sel);
        let inv = inv_m(mat[r][col], p).expect("nonzero pivot");
        for v in mat[r].iter_mut() {
            *v = mul_m(*v, inv, p);
        }
        for rr in 0..k {
            if rr != r && mat[rr][col] != 0 {
                let f = mat[rr][col];
                let (head, tail) = mat.split_at_mut(rr.max(r));
                let (src, dst) = if rr > r {
                    (&head[r], &mut tail[0])
                } else {
                    (&tail[0], &mut head[rr])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d = sub_m(*d, mul_m(f, *s, p), p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == k {
            break;
        }
    }
    let mut residual = target.to_vec();
    let mut combo = vec![0u64; k];
    for (idx, &pc) in pivots.iter().enumerate() {
        let f = residual[pc];
        if f != 0 {
            for (d, s) in residual.iter_mut().zip(mat[idx][..width].iter()) {
                *d = sub_m(*d, mul_m(f, *s, p), p);
            }
            for (c, s) in combo.iter_mut().zip(mat[idx][width..].iter()) {
                *c = add_m(*c, mul_m(f, *s, p), p);
            }
        }
    }
    if residual.iter().all(|&v| v == 0) {
        Some(combo)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::prime(p).unwrap()
    }

    fn ext(p: u64, modulus: &str) -> FieldCtx {
        FieldCtx::extension(&gf(p), UniPoly::parse(p, modulus).unwrap()).unwrap()
    }

    #[test]
    fn prime_field_construction() {
        assert!(FieldCtx::prime(2).is_ok());
        assert!(FieldCtx::prime(13).is_ok());
        assert_eq!(FieldCtx::prime(1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(FieldCtx::prime(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldCtx::prime(0).unwrap_err(), Error::NotPrime(0));
    }

    #[test]
    fn prime_field_inversion() {
        let f7 = gf(7);
        let three = f7.from_base(3);
        assert_eq!(f7.invert(&three).unwrap(), f7.from_base(5));
        assert_eq!(f7.invert(&f7.one()).unwrap(), f7.one());
        assert_eq!(f7.invert(&f7.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn poly_parse_both_formats() {
        let a = UniPoly::parse(2, "x^5 + x^2 + 1").unwrap();
        let b = UniPoly::parse(2, "1,0,1,0,0,1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_text('x'), "x^5 + x^2 + 1");
        let c = UniPoly::parse(7, "z^5 - z - 1").unwrap();
        let d = UniPoly::parse(7, "6,6,0,0,0,1").unwrap();
        assert_eq!(c, d);
        assert_eq!(c.to_text('x'), "x^5 + 6x + 6");
        assert_eq!(UniPoly::parse(7, "3*x^2 + 2").unwrap().to_text('x'), "3x^2 + 2");
        assert_eq!(UniPoly::parse(7, "0").unwrap(), UniPoly::zero(7));
        assert!(UniPoly::parse(7, "x^").is_err());
        assert!(UniPoly::parse(7, "").is_err());
        assert!(UniPoly::parse(7, "3y + q").is_ok()); // letters are not cross-checked
    }

    #[test]
    fn zero_polynomial_degree_is_none() {
        assert_eq!(UniPoly::zero(5).degree(), None);
        assert_eq!(UniPoly::new(5, vec![5, 10]).degree(), None);
        assert_eq!(UniPoly::one(5).degree(), Some(0));
    }

    #[test]
    fn divrem_roundtrip() {
        let p = 7;
        let a = UniPoly::parse(p, "x^5 + 3x^3 + x + 6").unwrap();
        let b = UniPoly::parse(p, "2x^2 + 5").unwrap();
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
        assert_eq!(
            a.divrem(&UniPoly::zero(p)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    /// Exhaustive factor search: does any monic divisor of degree 1..deg/2
    /// divide f?
    fn brute_irreducible(f: &UniPoly) -> bool {
        let p = f.p();
        let n = match f.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        for d in 1..=n / 2 {
            let count = p.pow(d as u32);
            for k in 0..count {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut kk = k;
                for _ in 0..d {
                    coeffs.push(kk % p);
                    kk /= p;
                }
                coeffs.push(1);
                let g = UniPoly::new(p, coeffs);
                if f.rem(&g).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn irreducibility_fixed_cases() {
        assert!(UniPoly::parse(2, "x^5 + x^2 + 1").unwrap().is_irreducible());
        assert!(!UniPoly::parse(2, "x^2 + 1").unwrap().is_irreducible());
        assert!(UniPoly::parse(7, "x - 3").unwrap().is_irreducible());
        assert!(!UniPoly::one(7).is_irreducible());
        assert!(!UniPoly::zero(7).is_irreducible());
    }

    #[test]
    fn irreducibility_agrees_with_factor_search() {
        for p in [2u64, 3] {
            for deg in 1..=5usize {
                let count = p.pow(deg as u32);
                for k in 0..count {
                    let mut coeffs = Vec::with_capacity(deg + 1);
                    let mut kk = k;
                    for _ in 0..deg {
                        coeffs.push(kk % p);
                        kk /= p;
                    }
                    coeffs.push(1);
                    let f = UniPoly::new(p, coeffs);
                    assert_eq!(
                        f.is_irreducible(),
                        brute_irreducible(&f),
                        "disagreement at p={p}, f={f}"
                    );
                }
            }
        }
    }

    #[test]
    fn find_irreducible_scan_order() {
        // over GF(2) the scan passes x^5, x^5+1, x^5+x, x^5+x+1, x^5+x^2
        // before the first irreducible hit
        assert_eq!(find_irreducible(2, 5).to_text('x'), "x^5 + x^2 + 1");
        assert_eq!(find_irreducible(2, 1).to_text('x'), "x");
        assert_eq!(find_irreducible(7, 1).to_text('x'), "x");
        assert_eq!(find_irreducible(3, 5).to_text('x'), "x^5 + 2x + 1");
        assert_eq!(find_irreducible(5, 5).to_text('x'), "x^5 + 4x + 1");
        assert_eq!(find_irreducible(7, 5).to_text('x'), "x^5 + x + 3");
        assert_eq!(find_irreducible(2, 2).to_text('x'), "x^2 + x + 1");
        assert_eq!(find_irreducible(3, 2).to_text('x'), "x^2 + 1");
        assert_eq!(find_irreducible(7, 2).to_text('x'), "x^2 + 1");
    }

    #[test]
    fn irreducible_counts() {
        assert_eq!(irreducible_count(2, 5), 6);
        assert_eq!(irreducible_count(3, 5), 48);
        assert_eq!(irreducible_count(5, 5), 624);
        assert_eq!(irreducible_count(7, 5), 3360);
        assert_eq!(irreducible_count(2, 1), 2);
        assert_eq!(irreducible_count(2, 2), 1);
        // cross-check the formula by scanning
        for p in [2u64, 3] {
            for n in 1..=5u32 {
                let mut scan = 0;
                for k in 0..p.pow(n) {
                    let mut coeffs = Vec::new();
                    let mut kk = k;
                    for _ in 0..n {
                        coeffs.push(kk % p);
                        kk /= p;
                    }
                    coeffs.push(1);
                    if UniPoly::new(p, coeffs).is_irreducible() {
                        scan += 1;
                    }
                }
                assert_eq!(scan, irreducible_count(p, n), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn all_irreducible_quintics_over_gf2() {
        let mut found = Vec::new();
        for k in 0u64..32 {
            let coeffs = vec![k & 1, (k >> 1) & 1, (k >> 2) & 1, (k >> 3) & 1, (k >> 4) & 1, 1];
            let f = UniPoly::new(2, coeffs);
            if f.is_irreducible() {
                found.push(f.to_text('x'));
            }
        }
        assert_eq!(
            found,
            vec![
                "x^5 + x^2 + 1",
                "x^5 + x^3 + 1",
                "x^5 + x^3 + x^2 + x + 1",
                "x^5 + x^4 + x^2 + x + 1",
                "x^5 + x^4 + x^3 + x + 1",
                "x^5 + x^4 + x^3 + x^2 + 1",
            ]
        );
    }

    #[test]
    fn extension_construction_errors() {
        let f2 = gf(2);
        let reducible = UniPoly::parse(2, "x^2 + 1").unwrap();
        assert!(matches!(
            FieldCtx::extension(&f2, reducible).unwrap_err(),
            Error::NotIrreducible(_)
        ));
        let f3 = gf(3);
        let nonmonic = UniPoly::parse(3, "2x^2 + 1").unwrap();
        assert!(matches!(
            FieldCtx::extension(&f3, nonmonic).unwrap_err(),
            Error::NotMonic(_)
        ));
        let wrong_prime = UniPoly::parse(5, "x^2 + 2").unwrap();
        assert!(matches!(
            FieldCtx::extension(&f3, wrong_prime).unwrap_err(),
            Error::Unsupported(_)
        ));
    }

    #[test]
    fn gf4_inverse_and_frobenius() {
        let f4 = ext(2, "w^2 + w + 1");
        let w = f4.generator();
        let w1 = f4.add(&w, &f4.one());
        assert_eq!(f4.invert(&w).unwrap(), w1);
        assert_eq!(f4.frobenius(&w, 1), w1);
        assert_eq!(f4.frobenius(&w, 0), w);
        let c = f4.from_base(1);
        assert_eq!(f4.frobenius(&c, 1), c);
    }

    #[test]
    fn field_axioms_gf32() {
        let f32 = ext(2, "x^5 + x^2 + 1");
        let all: Vec<FFElement> = f32.elements().collect();
        assert_eq!(all.len(), 32);
        for a in &all {
            if !a.is_zero() {
                let inv = f32.invert(a).unwrap();
                assert_eq!(f32.mul(a, &inv), f32.one());
            }
            for b in &all {
                // Frobenius is additive and multiplicative
                let fa = f32.frobenius(a, 1);
                let fb = f32.frobenius(b, 1);
                assert_eq!(f32.frobenius(&f32.add(a, b), 1), f32.add(&fa, &fb));
                assert_eq!(f32.frobenius(&f32.mul(a, b), 1), f32.mul(&fa, &fb));
            }
            assert_eq!(f32.frobenius(a, 5), *a);
        }
    }

    #[test]
    fn field_axioms_random_gf7_5() {
        let f = ext(7, "x^5 + x + 3");
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let a = f.element_from_index(rng.gen_range(0..f.order()));
            let b = f.element_from_index(rng.gen_range(0..f.order()));
            let c = f.element_from_index(rng.gen_range(0..f.order()));
            assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            if !a.is_zero() {
                assert_eq!(f.mul(&a, &f.invert(&a).unwrap()), f.one());
            }
        }
    }

    /// Newton's identities applied to the elementary symmetric functions of
    /// the roots (the modulus coefficients): an independent route to the
    /// power sums tr(z^i).
    fn newton_traces(p: u64, f: &UniPoly) -> Vec<u64> {
        let n = f.degree().unwrap();
        // f = x^n + a_{n-1} x^{n-1} + ... + a_0; e_k = (-1)^k a_{n-k}
        let e: Vec<u64> = (0..=n)
            .map(|k| {
                let a = if k == 0 { 1 } else { f.coeff(n - k) };
                if k % 2 == 0 {
                    a
                } else {
                    neg_m(a, p)
                }
            })
            .collect();
        let mut ps = vec![n as u64 % p]; // p_0 = n
        for k in 1..n {
            // p_k = (-1)^(k-1) k e_k + sum_{i=1}^{k-1} (-1)^(k-1+i) e_{k-i} p_i
            let mut acc = mul_m(k as u64 % p, e[k], p);
            if k % 2 == 0 {
                acc = neg_m(acc, p);
            }
            for i in 1..k {
                let term = mul_m(e[k - i], ps[i], p);
                if (k - 1 + i) % 2 == 0 {
                    acc = add_m(acc, term, p);
                } else {
                    acc = sub_m(acc, term, p);
                }
            }
            ps.push(acc);
        }
        ps
    }

    #[test]
    fn trace_powers_match_newton_identities() {
        // the companion-matrix trace is defined for any monic modulus,
        // irreducible or not
        let cases = [
            (7u64, "z^5 - z - 1"),
            (7, "x^5 + x + 3"),
            (3, "x^5 + 2x + 1"),
            (2, "x^5 + x^2 + 1"),
            (7, "x^5 + 3x^4 + x^2 + 5"),
        ];
        for (p, text) in cases {
            let f = UniPoly::parse(p, text).unwrap();
            let expected = newton_traces(p, &f);
            for (i, &want) in expected.iter().enumerate() {
                assert_eq!(trace_power_mod(p, &f, i), want, "p={p} f={f} i={i}");
            }
        }
    }

    #[test]
    fn trace_power_fixed_values() {
        // quotient-ring values for z^5 - z - 1 over GF(7)
        let f = UniPoly::parse(7, "z^5 - z - 1").unwrap();
        let traces: Vec<u64> = (0..5).map(|i| trace_power_mod(7, &f, i)).collect();
        assert_eq!(traces, vec![5, 0, 0, 0, 4]);
        // field values through the public context API
        let f7 = ext(7, "x^5 + x + 3");
        let traces: Vec<u64> = (0..5).map(|i| f7.trace_power(i)).collect();
        assert_eq!(traces, vec![5, 0, 0, 0, 3]);
        // trace of the identity is the degree
        assert_eq!(ext(2, "x^5 + x^2 + 1").trace_power(0), 1); // 5 mod 2
        assert_eq!(ext(3, "x^5 + 2x + 1").trace_power(0), 2); // 5 mod 3
        assert_eq!(f7.trace_power(0), 5);
    }

    #[test]
    fn minimal_polynomial_cases() {
        let f32 = ext(2, "x^5 + x^2 + 1");
        let z = f32.generator();
        assert_eq!(f32.minimal_polynomial(&z), *f32.modulus().unwrap());
        let f7 = ext(7, "x^5 + x + 3");
        assert_eq!(
            f7.minimal_polynomial(&f7.from_base(4)).to_text('x'),
            "x + 3"
        );
        // z^2 generates GF(2^5): degree must be 5 and substitution annihilates
        let z2 = f32.mul(&z, &z);
        let mp = f32.minimal_polynomial(&z2);
        assert_eq!(mp.degree(), Some(5));
        assert!(mp.is_monic());
        assert!(mp.eval_element(&f32, &z2).is_zero());
        assert!(mp.is_irreducible());
    }

    #[test]
    fn minimal_polynomial_divides_char_poly() {
        let f32 = ext(2, "x^5 + x^2 + 1");
        for a in f32.elements() {
            let mp = f32.minimal_polynomial(&a);
            let cp = f32.char_poly(&a);
            assert!(cp.rem(&mp).unwrap().is_zero(), "a={a}");
            assert!(mp.eval_element(&f32, &a).is_zero());
        }
        let f7 = ext(7, "x^5 + x + 3");
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let a = f7.element_from_index(rng.gen_range(0..f7.order()));
            let mp = f7.minimal_polynomial(&a);
            let cp = f7.char_poly(&a);
            assert!(cp.rem(&mp).unwrap().is_zero());
            assert!(mp.eval_element(&f7, &a).is_zero());
        }
    }

    #[test]
    fn char_poly_fixed_cases() {
        // char poly of 1 is (t-1)^5 = t^5 - 5t^4 + 10t^3 - 10t^2 + 5t - 1
        let binomial = |p: u64| {
            UniPoly::new(
                p,
                vec![neg_m(1 % p, p), 5 % p, neg_m(10 % p, p), 10 % p, neg_m(5 % p, p), 1],
            )
        };
        for (p, modtext) in [
            (2u64, "x^5 + x^2 + 1"),
            (3, "x^5 + 2x + 1"),
            (5, "x^5 + 4x + 1"),
            (7, "x^5 + x + 3"),
        ] {
            let f = ext(p, modtext);
            assert_eq!(f.char_poly(&f.one()), binomial(p), "p={p}");
            assert_eq!(f.char_poly(&f.zero()).to_text('t'), "t^5");
            assert_eq!(f.char_poly(&f.generator()), *f.modulus().unwrap());
        }
    }

    #[test]
    fn char_poly_t4_coefficient_is_minus_trace() {
        let f7 = ext(7, "x^5 + x + 3");
        let traces: Vec<u64> = (0..5).map(|i| f7.trace_power(i)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let a = f7.element_from_index(rng.gen_range(0..f7.order()));
            let trace = a
                .coeffs()
                .iter()
                .zip(&traces)
                .fold(0, |acc, (&c, &t)| add_m(acc, mul_m(c, t, 7), 7));
            assert_eq!(f7.char_poly(&a).coeff(4), neg_m(trace, 7));
        }
    }

    #[test]
    fn element_text_roundtrip() {
        let f32 = ext(2, "x^5 + x^2 + 1");
        let a = f32.element(vec![0, 1, 0, 0, 1]).unwrap();
        assert_eq!(a.to_text('z'), "z^4 + z");
        assert_eq!(f32.parse_element("z^4 + z").unwrap(), a);
        assert_eq!(f32.parse_element("0,1,0,0,1").unwrap(), a);
        assert!(f32.parse_element("z^5").is_err());
        let f7 = gf(7);
        assert_eq!(f7.parse_element("12").unwrap(), f7.from_base(5));
    }

    #[test]
    fn element_enumeration_is_exhaustive_and_ordered() {
        let f9 = ext(3, "x^2 + 1");
        let all: Vec<FFElement> = f9.elements().collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], f9.zero());
        assert_eq!(all[1], f9.one());
        assert_eq!(all[3], f9.generator());
        let unique: std::collections::HashSet<Vec<u64>> =
            all.iter().map(|a| a.coeffs().to_vec()).collect();
        assert_eq!(unique.len(), 9);
    }
}
