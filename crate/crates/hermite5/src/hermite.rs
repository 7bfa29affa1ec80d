//! The end-to-end pipeline: from a quintic modulus over GF(p) to an element
//! whose minimal polynomial has the shape x^5 + c2*x^3 + c4*x + c5.
//!
//! The steps are: build the five characteristic coefficient forms for the
//! generic element, eliminate a variable with the linear form c1, scan the
//! cubic c3 restricted to the hyperplane for a projective rational point,
//! lift the point back to five coordinates, and read off the element together
//! with its minimal polynomial. Zero-count helpers make the Chevalley-Warning
//! congruence that guarantees the scan succeeds checkable in tests and from
//! the command line.

use std::time::Instant;

use serde::Serialize;

use crate::ff::{FFElement, FieldCtx, UniPoly};
use crate::forms::{generic_char_coefficients, CharCoefficients, LinearSubstitution, MultiForm};
use crate::Error;

/// A point of projective space over GF(p), held in normalized form: the
/// coordinates are reduced mod p and scaled so the first nonzero one is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    p: u64,
    coords: Vec<u64>,
}

impl ProjPoint {
    /// Normalizes a coordinate vector. Fails with `BadPoint` when every
    /// coordinate is zero mod p.
    pub fn new(p: u64, coords: Vec<u64>) -> Result<ProjPoint, Error> {
        let reduced: Vec<u64> = coords.iter().map(|&c| c % p).collect();
        let lead = reduced.iter().position(|&c| c != 0).ok_or(Error::BadPoint)?;
        let inv = crate::ff::inv_m(reduced[lead], p)?;
        let coords = reduced
            .iter()
            .map(|&c| crate::ff::mul_m(c, inv, p))
            .collect();
        Ok(ProjPoint { p, coords })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// The five characteristic coefficient forms of a fixed quintic extension,
/// together with the field context they were computed in.
pub struct HermiteSystem {
    ctx: FieldCtx,
    coeffs: CharCoefficients,
}

impl HermiteSystem {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coefficients(&self) -> &CharCoefficients {
        &self.coeffs
    }

    /// The linear form c1 (the negated trace form).
    pub fn c1(&self) -> &MultiForm {
        self.coeffs.c(1)
    }

    /// The cubic form c3.
    pub fn c3(&self) -> &MultiForm {
        self.coeffs.c(3)
    }
}

/// Computes the characteristic coefficient forms for a degree-5 context.
pub fn build_system(ctx: &FieldCtx) -> HermiteSystem {
    HermiteSystem {
        ctx: ctx.clone(),
        coeffs: generic_char_coefficients(ctx),
    }
}

/// Solves c1 = 0 for its pivot variable and substitutes the solution into c3,
/// producing a cubic form in four variables together with the substitution
/// that lifts four-variable points back to the hyperplane c1 = 0.
pub fn eliminate_c1(sys: &HermiteSystem) -> Result<(MultiForm, LinearSubstitution), Error> {
    let subst = LinearSubstitution::from_linear_form(sys.c1())?;
    let cubic = sys.c3().substitute(&subst)?;
    Ok((cubic, subst))
}

/// All vectors of a given length with entries in 0..p, sorted by total
/// weight and then lexicographically.
fn graded_lex_vectors(p: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut v = vec![0u64; len];
    loop {
        out.push(v.clone());
        let mut i = len;
        loop {
            if i == 0 {
                out.sort_by_key(|w| (w.iter().sum::<u64>(), w.clone()));
                return out;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < p {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Deterministic scan for a projective zero of a form over GF(p).
///
/// Points are visited chart by chart: first all points with x0 = 1, then
/// x0 = 0 and x1 = 1, and so on; within a chart the free coordinates run in
/// graded lexicographic order. The first zero different from `excluded` is
/// returned; `NoPointFound` means the whole of projective space was scanned.
pub fn search_point(form: &MultiForm, excluded: Option<&ProjPoint>) -> Result<ProjPoint, Error> {
    let p = form.p();
    let n = form.nvars();
    let mut candidate = vec![0u64; n];
    for pivot in 0..n {
        candidate[..pivot].fill(0);
        candidate[pivot] = 1;
        for tail in graded_lex_vectors(p, n - pivot - 1) {
            candidate[pivot + 1..].copy_from_slice(&tail);
            if form.eval(&candidate)? != 0 {
                continue;
            }
            if let Some(ex) = excluded {
                if ex.coords() == candidate.as_slice() {
                    continue;
                }
            }
            return ProjPoint::new(p, candidate);
        }
    }
    Err(Error::NoPointFound)
}

/// Lifts a four-variable point to the hyperplane c1 = 0 and reads off the
/// corresponding field element and its minimal polynomial.
///
/// Fails with `BadPoint` when the lift lands on (1 : 0 : 0 : 0 : 0), the
/// point carrying the base-field element 1.
pub fn recover_element(
    point: &ProjPoint,
    subst: &LinearSubstitution,
    ctx: &FieldCtx,
) -> Result<(FFElement, UniPoly), Error> {
    let lifted = ProjPoint::new(ctx.p(), subst.lift(point.coords())?)?;
    let trivial = lifted.coords()[0] == 1 && lifted.coords()[1..].iter().all(|&c| c == 0);
    if trivial {
        return Err(Error::BadPoint);
    }
    let a = ctx.element(lifted.coords().to_vec())?;
    let minpoly = ctx.minimal_polynomial(&a);
    Ok((a, minpoly))
}

/// The result of a full pipeline run, with every verdict recomputed from the
/// reported data rather than carried over from intermediate steps.
#[derive(Debug, Clone, Serialize)]
pub struct HermiteReport {
    pub p: u64,
    pub modulus: String,
    pub point: Vec<u64>,
    pub element: String,
    pub minpoly: String,
    pub c_pattern_ok: bool,
    pub primitive_ok: bool,
    pub on_surface_ok: bool,
    pub elapsed_ms: u64,
}

/// Runs the whole pipeline for one modulus: field setup, coefficient forms,
/// elimination, point search, element recovery, verdicts.
pub fn hermite_pipeline(p: u64, modulus: &UniPoly) -> Result<HermiteReport, Error> {
    let start = Instant::now();
    if modulus.degree() != Some(5) {
        return Err(Error::Unsupported(format!(
            "modulus must have degree 5, got {}",
            modulus.to_text('x')
        )));
    }
    let base = FieldCtx::prime(p)?;
    let ctx = FieldCtx::extension(&base, modulus.clone())?;
    let sys = build_system(&ctx);
    let (cubic, subst) = eliminate_c1(&sys)?;

    let e0 = [1u64, 0, 0, 0, 0];
    let excluded = if sys.c1().eval(&e0)? == 0 {
        let mut v = e0.to_vec();
        v.remove(subst.pivot());
        Some(ProjPoint::new(p, v)?)
    } else {
        None
    };

    let point4 = search_point(&cubic, excluded.as_ref())?;
    let (a, _) = recover_element(&point4, &subst, &ctx)?;
    let point = a.coeffs().to_vec();

    let minpoly = ctx.minimal_polynomial(&a);
    let c_pattern_ok = minpoly.is_monic()
        && minpoly.degree() == Some(5)
        && minpoly.coeff(4) == 0
        && minpoly.coeff(2) == 0;
    let primitive_ok = minpoly.degree() == Some(5);
    let on_surface_ok = sys.c1().eval(&point)? == 0 && sys.c3().eval(&point)? == 0;

    Ok(HermiteReport {
        p,
        modulus: modulus.to_text('x'),
        point,
        element: a.to_text('z'),
        minpoly: minpoly.to_text('x'),
        c_pattern_ok,
        primitive_ok,
        on_surface_ok,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Counts the common zeros of c1 and c3 in affine space GF(p)^5, origin
/// included. The count is divisible by p: c1 and c3 have total degree
/// 1 + 3 = 4, strictly less than the number of variables.
pub fn affine_zero_count(sys: &HermiteSystem, budget: u64) -> Result<u64, Error> {
    let p = sys.ctx().p();
    let needed = (p as u128).pow(5);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: u64::try_from(needed).unwrap_or(u64::MAX),
            budget,
        });
    }
    let c1 = sys.c1();
    let c3 = sys.c3();
    let mut count = 0u64;
    let mut v = vec![0u64; 5];
    loop {
        if c1.eval(&v)? == 0 && c3.eval(&v)? == 0 {
            count += 1;
        }
        let mut i = 0;
        while i < 5 {
            v[i] += 1;
            if v[i] < p {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        if i == 5 {
            return Ok(count);
        }
    }
}

/// Counts the common zeros of c1 and c3 in projective space P^4 over GF(p).
/// Satisfies affine = 1 + (p - 1) * projective.
pub fn projective_zero_count(sys: &HermiteSystem, budget: u64) -> Result<u64, Error> {
    let p = sys.ctx().p();
    let needed: u128 = (0..5).map(|j| (p as u128).pow(j)).sum();
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: u64::try_from(needed).unwrap_or(u64::MAX),
            budget,
        });
    }
    let c1 = sys.c1();
    let c3 = sys.c3();
    let mut count = 0u64;
    let mut v = vec![0u64; 5];
    for pivot in 0..5 {
        v[..=pivot].fill(0);
        v[pivot] = 1;
        let tail = pivot + 1;
        loop {
            if c1.eval(&v)? == 0 && c3.eval(&v)? == 0 {
                count += 1;
            }
            let mut i = tail;
            while i < 5 {
                v[i] += 1;
                if v[i] < p {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
            if i == 5 {
                break;
            }
        }
    }
    Ok(count)
}
