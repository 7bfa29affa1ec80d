//! Sparse homogeneous multivariate forms over GF(p), and the symbolic
//! characteristic-polynomial coefficients of a generic field element.
//!
//! Writing a = x0 + x1 z + ... + x4 z^4 with indeterminate coordinates, the
//! multiplication-by-a matrix M(x) has linear forms as entries, and
//! det(t I - M(x)) = t^5 + c1 t^4 + c2 t^3 + c3 t^2 + c4 t + c5 with each
//! c_i a homogeneous form of degree i in x0..x4. This module computes the
//! c_i exactly by a Leibniz expansion over the 120 permutations, treating t
//! as a sixth formal variable, which stays division-free and therefore works
//! in every characteristic.
//!
//! Terms are kept in a sorted map under graded-lexicographic order (earlier
//! variables dominate), so serialization is canonical and reproducible.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::ff::{add_m, inv_m, mul_m, neg_m, FFElement, FieldCtx, UniPoly};
use crate::Error;

/// Exponent vector of a monomial in up to 6 variables. Compact and `Copy`
/// so determinant expansion does not allocate per comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monomial {
    len: u8,
    exps: [u8; 6],
}

impl Monomial {
    pub fn new(exps: &[u8]) -> Monomial {
        assert!(exps.len() <= 6, "at most 6 variables");
        let mut buf = [0u8; 6];
        buf[..exps.len()].copy_from_slice(exps);
        Monomial {
            len: exps.len() as u8,
            exps: buf,
        }
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps[..self.len as usize]
    }

    pub fn degree(&self) -> u32 {
        self.exps().iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len, other.len);
        let mut buf = [0u8; 6];
        for (slot, (a, b)) in buf.iter_mut().zip(self.exps.iter().zip(&other.exps)) {
            *slot = a + b;
        }
        Monomial {
            len: self.len,
            exps: buf,
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: lower total degree first; within a degree,
    /// higher powers of earlier variables first (so x0^3 precedes x0^2*x1).
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps().cmp(self.exps()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A homogeneous multivariate form over GF(p): a map from exponent vectors
/// to nonzero residues. Homogeneity is structural; inserting a term of the
/// wrong degree is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiForm {
    p: u64,
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl MultiForm {
    pub fn zero(p: u64, nvars: usize, degree: usize) -> MultiForm {
        assert!((1..=6).contains(&nvars), "1 to 6 variables supported");
        MultiForm {
            p,
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Single-term form.
    pub fn monomial(p: u64, nvars: usize, exps: &[u8], coef: u64) -> MultiForm {
        let degree = exps.iter().map(|&e| e as usize).sum();
        let mut f = MultiForm::zero(p, nvars, degree);
        f.add_term(exps, coef).expect("consistent by construction");
        f
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], u64)> {
        self.terms.iter().map(|(m, &c)| (m.exps(), c))
    }

    /// Adds coef * x^exps into the form, merging with an existing term and
    /// dropping it if the sum cancels.
    pub fn add_term(&mut self, exps: &[u8], coef: u64) -> Result<(), Error> {
        if exps.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: exps.len(),
            });
        }
        let deg: usize = exps.iter().map(|&e| e as usize).sum();
        if deg != self.degree {
            return Err(Error::Unsupported(format!(
                "term of degree {deg} in a form of degree {}",
                self.degree
            )));
        }
        let coef = coef % self.p;
        if coef == 0 {
            return Ok(());
        }
        let key = Monomial::new(exps);
        let slot = self.terms.entry(key).or_insert(0);
        *slot = add_m(*slot, coef, self.p);
        if *slot == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    /// Value of the form at a point with prime-field coordinates.
    pub fn eval(&self, point: &[u64]) -> Result<u64, Error> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        // powers[i][e] = point[i]^e
        let maxe = self.degree;
        let mut powers = vec![vec![1u64; maxe + 1]; self.nvars];
        for (i, &x) in point.iter().enumerate() {
            let x = x % self.p;
            for e in 1..=maxe {
                powers[i][e] = mul_m(powers[i][e - 1], x, self.p);
            }
        }
        let mut acc = 0u64;
        for (m, &c) in &self.terms {
            let mut term = c;
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = mul_m(term, powers[i][e as usize], self.p);
                }
            }
            acc = add_m(acc, term, self.p);
        }
        Ok(acc)
    }

    /// Value at a point with coordinates in an extension of GF(p); the
    /// form's coefficients embed through the prime subfield.
    pub fn eval_ext(&self, ctx: &FieldCtx, point: &[FFElement]) -> Result<FFElement, Error> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let maxe = self.degree;
        let mut powers: Vec<Vec<FFElement>> = Vec::with_capacity(self.nvars);
        for x in point {
            let mut row = vec![ctx.one()];
            for e in 1..=maxe {
                row.push(ctx.mul(&row[e - 1], x));
            }
            powers.push(row);
        }
        let mut acc = ctx.zero();
        for (m, &c) in &self.terms {
            let mut term = ctx.from_base(c);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = ctx.mul(&term, &powers[i][e as usize]);
                }
            }
            acc = ctx.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Formal partial derivatives, one per variable, each homogeneous of
    /// degree d - 1.
    pub fn partials(&self) -> Vec<MultiForm> {
        let d = self.degree.saturating_sub(1);
        let mut out: Vec<MultiForm> = (0..self.nvars)
            .map(|_| MultiForm::zero(self.p, self.nvars, d))
            .collect();
        for (m, &c) in &self.terms {
            for i in 0..self.nvars {
                let e = m.exps()[i];
                if e == 0 {
                    continue;
                }
                let coef = mul_m(c, e as u64 % self.p, self.p);
                if coef == 0 {
                    continue;
                }
                let mut exps = m.exps().to_vec();
                exps[i] -= 1;
                out[i].add_term(&exps, coef).expect("degree drops by one");
            }
        }
        out
    }

    pub fn add_form(&self, rhs: &MultiForm) -> MultiForm {
        assert_eq!(self.nvars, rhs.nvars);
        assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(m.exps(), c).expect("same shape");
        }
        out
    }

    pub fn scale(&self, c: u64) -> MultiForm {
        let c = c % self.p;
        let mut out = MultiForm::zero(self.p, self.nvars, self.degree);
        if c == 0 {
            return out;
        }
        for (m, &a) in &self.terms {
            out.terms.insert(*m, mul_m(a, c, self.p));
        }
        out
    }

    pub fn neg(&self) -> MultiForm {
        self.scale(neg_m(1 % self.p, self.p))
    }

    pub fn mul(&self, rhs: &MultiForm) -> MultiForm {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiForm::zero(self.p, self.nvars, self.degree + rhs.degree);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &rhs.terms {
                let key = ma.mul(mb);
                let c = mul_m(ca, cb, self.p);
                let slot = out.terms.entry(key).or_insert(0);
                *slot = add_m(*slot, c, self.p);
                if *slot == 0 {
                    out.terms.remove(&key);
                }
            }
        }
        out
    }

    /// Eliminates the substitution's pivot variable: the result is a form in
    /// one variable fewer satisfying result(v) = self(lift(v)) for every
    /// point v.
    pub fn substitute(&self, s: &LinearSubstitution) -> Result<MultiForm, Error> {
        if s.pivot >= self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: s.pivot + 1,
            });
        }
        let small = self.nvars - 1;
        // replacement as a degree-1 form in the remaining variables
        let mut repl = MultiForm::zero(self.p, small, 1);
        for (k, &c) in s.replacement.iter().enumerate() {
            let mut exps = vec![0u8; small];
            exps[k] = 1;
            repl.add_term(&exps, c)?;
        }
        // powers of the replacement, up to the highest pivot exponent
        let maxe = self
            .terms
            .keys()
            .map(|m| m.exps()[s.pivot] as usize)
            .max()
            .unwrap_or(0);
        let mut repl_pows = vec![MultiForm::monomial(self.p, small, &vec![0u8; small], 1)];
        for e in 1..=maxe {
            repl_pows.push(repl_pows[e - 1].mul(&repl));
        }
        let mut out = MultiForm::zero(self.p, small, self.degree);
        for (m, &c) in &self.terms {
            let e_piv = m.exps()[s.pivot] as usize;
            let rest: Vec<u8> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != s.pivot)
                .map(|(_, &e)| e)
                .collect();
            for (rm, &rc) in &repl_pows[e_piv].terms {
                let mut exps = rest.clone();
                for (i, &re) in rm.exps().iter().enumerate() {
                    exps[i] += re;
                }
                out.add_term(&exps, mul_m(c, rc, self.p))?;
            }
        }
        Ok(out)
    }

    /// Canonical JSON: `{"nvars": n, "degree": d, "terms": [{"exp": [...],
    /// "coef": c}, ...]}` with terms in graded-lex order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, &c)| json!({"exp": m.exps(), "coef": c}))
            .collect();
        json!({"nvars": self.nvars, "degree": self.degree, "terms": terms})
    }

    pub fn from_json(p: u64, v: &Value) -> Result<MultiForm, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("form JSON must be an object".into()))?;
        let nvars = obj
            .get("nvars")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing nvars".into()))? as usize;
        let degree = obj
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing degree".into()))? as usize;
        if !(1..=6).contains(&nvars) {
            return Err(Error::Parse(format!("unsupported nvars {nvars}")));
        }
        let mut out = MultiForm::zero(p, nvars, degree);
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing terms".into()))?;
        for t in terms {
            let exp = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term missing exp".into()))?;
            let coef = t
                .get("coef")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("term missing coef".into()))?;
            let exps: Vec<u8> = exp
                .iter()
                .map(|e| {
                    e.as_u64()
                        .filter(|&e| e <= 60)
                        .map(|e| e as u8)
                        .ok_or_else(|| Error::Parse("bad exponent".into()))
                })
                .collect::<Result<_, _>>()?;
            out.add_term(&exps, coef)
                .map_err(|e| Error::Parse(format!("bad term: {e}")))?;
        }
        Ok(out)
    }

    /// Parses text like `x0^3 + 2*x1*x2^2` (also accepted without the
    /// asterisks); every term must have the expected total degree.
    pub fn parse(p: u64, nvars: usize, degree: usize, text: &str) -> Result<MultiForm, Error> {
        let mut out = MultiForm::zero(p, nvars, degree);
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty form".into()));
        }
        if text == "0" {
            return Ok(out);
        }
        let normalized = text.replace('-', "+-");
        for raw in normalized.split('+') {
            let tok = raw.trim();
            if tok.is_empty() {
                continue;
            }
            let (neg, tok) = match tok.strip_prefix('-') {
                Some(rest) => (true, rest.trim_start()),
                None => (false, tok),
            };
            let (mut coef, mut exps) = (1u64 % p, vec![0u8; nvars]);
            let mut saw_coef = false;
            let mut saw_var = false;
            let mut rest = tok;
            // optional leading coefficient
            let digits = rest.chars().take_while(char::is_ascii_digit).count();
            if digits > 0 {
                coef = rest[..digits]
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {raw:?}")))?
                    % p;
                rest = &rest[digits..];
                saw_coef = true;
            }
            loop {
                rest = rest.trim_start().strip_prefix('*').unwrap_or(rest).trim_start();
                if rest.is_empty() {
                    break;
                }
                let mut chars = rest.chars();
                let letter = chars.next().unwrap();
                if !letter.is_ascii_alphabetic() {
                    return Err(Error::Parse(format!("bad factor in {raw:?}")));
                }
                let after = chars.as_str();
                let idx_digits = after.chars().take_while(char::is_ascii_digit).count();
                if idx_digits == 0 {
                    return Err(Error::Parse(format!(
                        "variables are {letter}0..{letter}{}",
                        nvars - 1
                    )));
                }
                let idx: usize = after[..idx_digits]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable in {raw:?}")))?;
                if idx >= nvars {
                    return Err(Error::Parse(format!(
                        "variable index {idx} out of range for {nvars} variables"
                    )));
                }
                rest = &after[idx_digits..];
                let mut exp = 1u8;
                if let Some(etext) = rest.trim_start().strip_prefix('^') {
                    let etext = etext.trim_start();
                    let edigits = etext.chars().take_while(char::is_ascii_digit).count();
                    if edigits == 0 {
                        return Err(Error::Parse(format!("bad exponent in {raw:?}")));
                    }
                    exp = etext[..edigits]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {raw:?}")))?;
                    rest = &etext[edigits..];
                }
                exps[idx] += exp;
                saw_var = true;
            }
            if !saw_coef && !saw_var {
                return Err(Error::Parse(format!("bad term: {raw:?}")));
            }
            let signed = if neg { neg_m(coef, p) } else { coef };
            out.add_term(&exps, signed)?;
        }
        Ok(out)
    }

    /// Canonical text in variables x0..x{nvars-1}, graded-lex term order,
    /// explicit `*` between factors.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, &c) in &self.terms {
            let mut factors = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{i}")),
                    _ => factors.push(format!("x{i}^{e}")),
                }
            }
            let part = if factors.is_empty() {
                c.to_string()
            } else if c == 1 {
                factors.join("*")
            } else {
                format!("{c}*{}", factors.join("*"))
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl std::fmt::Display for MultiForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Solves a nonzero linear form for its pivot variable: x_j as a linear
/// combination of the other variables, plus the induced lift from points in
/// the small space back to the hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSubstitution {
    p: u64,
    pivot: usize,
    /// coefficients over the remaining variables, in ascending original order
    replacement: Vec<u64>,
}

impl LinearSubstitution {
    /// Picks the lowest variable with an invertible coefficient as the pivot.
    pub fn from_linear_form(f: &MultiForm) -> Result<LinearSubstitution, Error> {
        assert_eq!(f.degree(), 1, "substitution source must be linear");
        let p = f.p();
        let n = f.nvars();
        let mut gamma = vec![0u64; n];
        for (exps, c) in f.terms() {
            let i = exps.iter().position(|&e| e == 1).expect("degree-1 term");
            gamma[i] = c;
        }
        let pivot = gamma
            .iter()
            .position(|&c| c != 0)
            .ok_or(Error::ZeroLinearForm)?;
        let inv = inv_m(gamma[pivot], p)?;
        let scale = neg_m(inv, p);
        let replacement: Vec<u64> = gamma
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pivot)
            .map(|(_, &c)| mul_m(scale, c, p))
            .collect();
        Ok(LinearSubstitution {
            p,
            pivot,
            replacement,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn replacement(&self) -> &[u64] {
        &self.replacement
    }

    /// Lifts a point of the small space to the hyperplane: the pivot
    /// coordinate is filled in from the replacement combination.
    pub fn lift(&self, v: &[u64]) -> Result<Vec<u64>, Error> {
        if v.len() != self.replacement.len() {
            return Err(Error::DimensionMismatch {
                expected: self.replacement.len(),
                got: v.len(),
            });
        }
        let filled = v
            .iter()
            .zip(&self.replacement)
            .fold(0, |acc, (&x, &c)| add_m(acc, mul_m(x % self.p, c, self.p), self.p));
        let mut out = Vec::with_capacity(v.len() + 1);
        out.extend_from_slice(&v[..self.pivot]);
        out.push(filled);
        out.extend_from_slice(&v[self.pivot..]);
        out.iter_mut().for_each(|x| *x %= self.p);
        Ok(out)
    }
}

/// The n x n matrix of multiplication by the generic element
/// a = x0 + x1 z + ... + x_{n-1} z^{n-1}: entry (r, c) is the coefficient of
/// z^r in a * z^c reduced mod the modulus, a linear form in the coordinates.
/// Well defined over any monic modulus.
pub(crate) fn mult_matrix_from_modulus(p: u64, f: &UniPoly) -> Vec<Vec<MultiForm>> {
    let n = f.degree().expect("monic modulus");
    assert!(f.is_monic());
    // zpow[k] = coordinates of z^k mod f, for k in 0..2n-1
    let mut zpow: Vec<Vec<u64>> = (0..n)
        .map(|k| (0..n).map(|i| u64::from(i == k)).collect())
        .collect();
    for k in n..2 * n - 1 {
        let prev = &zpow[k - 1];
        let top = prev[n - 1];
        let mut next = vec![0u64; n];
        next[1..].copy_from_slice(&prev[..n - 1]);
        if top != 0 {
            for (i, slot) in next.iter_mut().enumerate() {
                *slot = add_m(*slot, mul_m(top, neg_m(f.coeff(i), p), p), p);
            }
        }
        zpow.push(next);
    }
    let mut matrix = vec![vec![MultiForm::zero(p, n, 1); n]; n];
    for c in 0..n {
        for i in 0..n {
            // contribution of x_i z^i * z^c
            let vec = &zpow[i + c];
            for (r, &coef) in vec.iter().enumerate() {
                if coef != 0 {
                    let mut exps = vec![0u8; n];
                    exps[i] = 1;
                    matrix[r][c]
                        .add_term(&exps, coef)
                        .expect("linear by construction");
                }
            }
        }
    }
    matrix
}

/// See [`mult_matrix_from_modulus`]; the public entry point takes a proper
/// extension context.
pub fn generic_multiplication_matrix(ctx: &FieldCtx) -> Vec<Vec<MultiForm>> {
    let f = ctx
        .modulus()
        .expect("generic multiplication matrix requires a proper extension");
    mult_matrix_from_modulus(ctx.p(), f)
}

/// The coefficients c1..c5 of det(t I - M(x)) for a quintic modulus, each a
/// homogeneous form of degree i in x0..x4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharCoefficients {
    p: u64,
    coeffs: Vec<MultiForm>,
}

impl CharCoefficients {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// c_i for i in 1..=5.
    pub fn c(&self, i: usize) -> &MultiForm {
        assert!((1..=5).contains(&i));
        &self.coeffs[i - 1]
    }

    pub fn all(&self) -> &[MultiForm] {
        &self.coeffs
    }

    /// The quintic t^5 + c1(v) t^4 + ... + c5(v) at a concrete coordinate
    /// vector.
    pub fn quintic_at(&self, point: &[u64]) -> Result<UniPoly, Error> {
        let mut coeffs = vec![0u64; 6];
        coeffs[5] = 1;
        for (i, form) in self.coeffs.iter().enumerate() {
            coeffs[4 - i] = form.eval(point)?;
        }
        Ok(UniPoly::new(self.p, coeffs))
    }
}

/// Leibniz expansion of det(t I - M(x)) over the 120 permutations of the
/// rows, with t carried as a sixth formal variable. Division-free, so the
/// result is exact in every characteristic. Defined over any monic quintic
/// modulus.
pub(crate) fn char_coefficients_from_modulus(p: u64, f: &UniPoly) -> CharCoefficients {
    let n = f.degree().expect("monic modulus");
    assert_eq!(n, 5, "characteristic coefficients are quintic-specific");
    let matrix = mult_matrix_from_modulus(p, f);
    // entries of t I - M as forms in x0..x4 and t (variable index 5)
    let t_var = n;
    let mut entries = vec![vec![MultiForm::zero(p, n + 1, 1); n]; n];
    for (r, row) in matrix.iter().enumerate() {
        for (c, m) in row.iter().enumerate() {
            let slot = &mut entries[r][c];
            for (exps, coef) in m.terms() {
                let mut lifted = exps.to_vec();
                lifted.push(0);
                slot.add_term(&lifted, neg_m(coef, p)).expect("linear");
            }
            if r == c {
                let mut t_exps = vec![0u8; n + 1];
                t_exps[t_var] = 1;
                slot.add_term(&t_exps, 1).expect("linear");
            }
        }
    }
    let mut det = MultiForm::zero(p, n + 1, n);
    for (perm, even) in permutations_with_sign(n) {
        let mut prod = entries[0][perm[0]].clone();
        for (r, &c) in perm.iter().enumerate().skip(1) {
            if prod.is_zero() {
                break;
            }
            prod = prod.mul(&entries[r][c]);
        }
        det = det.add_form(&if even { prod } else { prod.neg() });
    }
    // split by powers of t: terms with t-exponent k belong to c_{n-k}
    let mut coeffs: Vec<MultiForm> = (1..=n).map(|i| MultiForm::zero(p, n, i)).collect();
    for (exps, coef) in det.terms() {
        let k = exps[t_var] as usize;
        if k == n {
            debug_assert_eq!(coef, 1, "det is monic in t");
            continue;
        }
        coeffs[n - k - 1]
            .add_term(&exps[..n], coef)
            .expect("degree bookkeeping");
    }
    CharCoefficients { p, coeffs }
}

/// See [`char_coefficients_from_modulus`]; the public entry point takes a
/// quintic extension context.
pub fn generic_char_coefficients(ctx: &FieldCtx) -> CharCoefficients {
    assert_eq!(ctx.degree(), 5, "requires a quintic extension");
    let f = ctx.modulus().expect("quintic extensions have a modulus");
    char_coefficients_from_modulus(ctx.p(), f)
}

/// All permutations of 0..n with their parity, by Heap's algorithm; each
/// successive permutation differs by one transposition.
fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![(perm.clone(), true)];
    let mut even = true;
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            even = !even;
            out.push((perm.clone(), even));
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}
