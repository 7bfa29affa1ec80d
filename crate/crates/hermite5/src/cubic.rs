//! Cubic surface diagnostics and quadratic secant-line descent.
//!
//! A cubic form in four variables over GF(p) cuts a surface in P^3. This
//! module counts its rational points, scans for singular points over small
//! extension fields, and descends points defined over GF(p^2) to rational
//! points: the line through a point P and its conjugate P^sigma meets the
//! surface in a third point, and that point is fixed by sigma.

use crate::ff::{find_irreducible, FFElement, FieldCtx, UniPoly};
use crate::forms::MultiForm;
use crate::hermite::ProjPoint;
use crate::Error;

/// A cubic surface in P^3 over a prime field.
pub struct CubicSurface {
    ctx: FieldCtx,
    form: MultiForm,
    partials: Vec<MultiForm>,
}

impl CubicSurface {
    /// Wraps a nonzero cubic form in four variables. The context must be a
    /// prime field of the same characteristic as the form.
    pub fn new(ctx: &FieldCtx, form: MultiForm) -> Result<CubicSurface, Error> {
        if ctx.degree() != 1 {
            return Err(Error::Unsupported(
                "cubic surfaces are defined over prime fields".into(),
            ));
        }
        if form.p() != ctx.p() {
            return Err(Error::Unsupported(format!(
                "form is over GF({}) but the context is GF({})",
                form.p(),
                ctx.p()
            )));
        }
        if form.nvars() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                got: form.nvars(),
            });
        }
        if form.degree() != 3 || form.is_zero() {
            return Err(Error::Unsupported("a nonzero cubic form is required".into()));
        }
        let partials = form.partials();
        Ok(CubicSurface {
            ctx: ctx.clone(),
            form,
            partials,
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn form(&self) -> &MultiForm {
        &self.form
    }

    /// Whether a point with coordinates in GF(p^2) lies on the surface.
    pub fn contains(&self, point: &QuadExtPoint) -> Result<bool, Error> {
        if point.ctx().p() != self.ctx.p() {
            return Err(Error::Unsupported(format!(
                "point lives over GF({}^2) but the surface is over GF({})",
                point.ctx().p(),
                self.ctx.p()
            )));
        }
        Ok(self
            .form
            .eval_ext(point.ctx(), point.coords())?
            .is_zero())
    }
}

/// A point of P^3 with coordinates in a quadratic extension GF(p^2), held in
/// normalized form: the first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExtPoint {
    ctx: FieldCtx,
    coords: Vec<FFElement>,
}

impl QuadExtPoint {
    pub fn new(ctx: &FieldCtx, coords: Vec<FFElement>) -> Result<QuadExtPoint, Error> {
        if ctx.degree() != 2 {
            return Err(Error::Unsupported(
                "point coordinates must lie in a quadratic extension".into(),
            ));
        }
        if coords.len() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                got: coords.len(),
            });
        }
        let coords: Result<Vec<FFElement>, Error> = coords
            .into_iter()
            .map(|c| ctx.element(c.coeffs().to_vec()))
            .collect();
        let coords = coords?;
        let lead = coords.iter().position(|c| !c.is_zero()).ok_or(Error::BadPoint)?;
        let inv = ctx.invert(&coords[lead])?;
        let coords = coords.iter().map(|c| ctx.mul(c, &inv)).collect();
        Ok(QuadExtPoint {
            ctx: ctx.clone(),
            coords,
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coords(&self) -> &[FFElement] {
        &self.coords
    }

    /// The coordinatewise image under the Frobenius x -> x^p.
    pub fn conjugate(&self) -> QuadExtPoint {
        let coords = self
            .coords
            .iter()
            .map(|c| self.ctx.frobenius(c, 1))
            .collect();
        QuadExtPoint {
            ctx: self.ctx.clone(),
            coords,
        }
    }
}

impl std::fmt::Display for QuadExtPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_text('w')).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// Projects a normalized point to P^3 over the prime field when every
/// coordinate lies in the prime subfield.
pub fn rationality_test(point: &QuadExtPoint) -> Option<ProjPoint> {
    let rational = point
        .coords()
        .iter()
        .all(|c| c.coeffs().iter().skip(1).all(|&digit| digit == 0));
    if !rational {
        return None;
    }
    let consts: Vec<u64> = point.coords().iter().map(|c| c.coeffs()[0]).collect();
    Some(ProjPoint::new(point.ctx().p(), consts).expect("normalized point is nonzero"))
}

/// A singular point of a cubic surface together with the degree over GF(p)
/// of its field of definition.
#[derive(Debug, Clone)]
pub struct SingularPoint {
    field_degree: usize,
    coords: Vec<FFElement>,
}

impl SingularPoint {
    /// Degree over the prime field of the smallest field containing all
    /// coordinates.
    pub fn field_degree(&self) -> usize {
        self.field_degree
    }

    pub fn coords(&self) -> &[FFElement] {
        &self.coords
    }
}

impl std::fmt::Display for SingularPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_text('w')).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// The result of one secant-line descent step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescentOutcome {
    /// The line met the surface in a third, rational point.
    Descended(ProjPoint),
    /// The input point already had rational coordinates.
    AlreadyRational(ProjPoint),
    /// The whole secant line lies on the surface.
    LineOnSurface,
    /// The third intersection point coincides with the input point or its
    /// conjugate.
    TangentSecant,
}

/// Counts the points of the surface in P^3 over GF(p).
pub fn count_points(surface: &CubicSurface, budget: u64) -> Result<u64, Error> {
    let p = surface.ctx().p();
    let needed: u128 = (0..4).map(|j| (p as u128).pow(j)).sum();
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: u64::try_from(needed).unwrap_or(u64::MAX),
            budget,
        });
    }
    let form = surface.form();
    let mut count = 0u64;
    let mut v = [0u64; 4];
    for pivot in 0..4 {
        v[..=pivot].fill(0);
        v[pivot] = 1;
        loop {
            if form.eval(&v)? == 0 {
                count += 1;
            }
            let mut i = 3;
            loop {
                if i == pivot {
                    break;
                }
                v[i] += 1;
                if v[i] < p {
                    break;
                }
                v[i] = 0;
                i -= 1;
            }
            if i == pivot {
                break;
            }
        }
    }
    Ok(count)
}

/// Whether every coordinate is fixed by the Frobenius power x -> x^(p^e),
/// that is, lies in the subfield GF(p^e).
fn defined_over_subfield(ctx: &FieldCtx, coords: &[FFElement], e: usize) -> bool {
    coords.iter().all(|c| &ctx.frobenius(c, e) == c)
}

/// Scans P^3 over GF(p^d) for every d up to `maxdeg` for points where the
/// form and all four partial derivatives vanish. Each singular point is
/// reported once, at the degree of its actual field of definition.
pub fn jacobian_singular_scan(
    surface: &CubicSurface,
    maxdeg: usize,
    budget: u64,
) -> Result<Vec<SingularPoint>, Error> {
    let p = surface.ctx().p();
    let mut needed: u128 = 0;
    for d in 1..=maxdeg {
        let q = (p as u128).pow(d as u32);
        needed += q * q * q + q * q + q + 1;
    }
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: u64::try_from(needed).unwrap_or(u64::MAX),
            budget,
        });
    }

    let mut out = Vec::new();
    for d in 1..=maxdeg {
        let ctx_d = if d == 1 {
            surface.ctx().clone()
        } else {
            FieldCtx::extension(surface.ctx(), find_irreducible(p, d as u32))?
        };
        let q = ctx_d.order();
        let proper_divisors: Vec<usize> = (1..d).filter(|e| d % e == 0).collect();
        let mut coords = vec![ctx_d.zero(); 4];
        for pivot in 0..4 {
            for c in coords[..=pivot].iter_mut() {
                *c = ctx_d.zero();
            }
            coords[pivot] = ctx_d.one();
            let free = 3 - pivot;
            let total = q.pow(free as u32);
            for t in 0..total {
                let mut rest = t;
                for m in (0..free).rev() {
                    coords[pivot + 1 + m] = ctx_d.element_from_index(rest % q);
                    rest /= q;
                }
                if !surface.form().eval_ext(&ctx_d, &coords)?.is_zero() {
                    continue;
                }
                let singular = surface
                    .partials
                    .iter()
                    .all(|df| df.eval_ext(&ctx_d, &coords).map(|v| v.is_zero()).unwrap_or(false));
                if !singular {
                    continue;
                }
                if proper_divisors
                    .iter()
                    .any(|&e| defined_over_subfield(&ctx_d, &coords, e))
                {
                    continue;
                }
                out.push(SingularPoint {
                    field_degree: d,
                    coords: coords.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Restricts the surface to the line s*P + u*Q and returns the coefficients
/// of the binary cubic g(s, u), ordered from s^3 down to u^3.
fn restrict_to_line(
    surface: &CubicSurface,
    ctx2: &FieldCtx,
    pt: &[FFElement],
    qt: &[FFElement],
) -> Result<Vec<FFElement>, Error> {
    let mut g = vec![ctx2.zero(); 4];
    for (exps, coef) in surface.form().terms() {
        let mut acc = vec![ctx2.from_base(coef)];
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                let mut next = vec![ctx2.zero(); acc.len() + 1];
                for (k, val) in acc.iter().enumerate() {
                    next[k] = ctx2.add(&next[k], &ctx2.mul(val, &pt[i]));
                    next[k + 1] = ctx2.add(&next[k + 1], &ctx2.mul(val, &qt[i]));
                }
                acc = next;
            }
        }
        for (k, val) in acc.iter().enumerate() {
            g[k] = ctx2.add(&g[k], val);
        }
    }
    Ok(g)
}

/// Descends a point with coordinates in GF(p^2) to a rational point by
/// intersecting the surface with the secant line through the point and its
/// Frobenius conjugate.
///
/// The restriction of the form to that line is g(s, u) = s*u*(alpha*s + beta*u)
/// with sigma(alpha) = beta, and the third intersection point beta*P - alpha*P^sigma
/// is fixed by sigma up to sign, hence rational after normalization.
pub fn secant_descent(
    surface: &CubicSurface,
    point: &QuadExtPoint,
) -> Result<DescentOutcome, Error> {
    if point.ctx().p() != surface.ctx().p() {
        return Err(Error::Unsupported(format!(
            "point lives over GF({}^2) but the surface is over GF({})",
            point.ctx().p(),
            surface.ctx().p()
        )));
    }
    if !surface.contains(point)? {
        return Err(Error::NotOnSurface);
    }
    if let Some(rational) = rationality_test(point) {
        return Ok(DescentOutcome::AlreadyRational(rational));
    }

    let ctx2 = point.ctx();
    let conj = point.conjugate();
    let g = restrict_to_line(surface, ctx2, point.coords(), conj.coords())?;
    debug_assert!(g[0].is_zero() && g[3].is_zero());
    if g.iter().all(|c| c.is_zero()) {
        return Ok(DescentOutcome::LineOnSurface);
    }
    let alpha = &g[1];
    let beta = &g[2];
    if alpha.is_zero() || beta.is_zero() {
        return Ok(DescentOutcome::TangentSecant);
    }
    debug_assert_eq!(&ctx2.frobenius(alpha, 1), beta);

    let third: Vec<FFElement> = point
        .coords()
        .iter()
        .zip(conj.coords())
        .map(|(a, b)| ctx2.sub(&ctx2.mul(beta, a), &ctx2.mul(alpha, b)))
        .collect();
    let third = QuadExtPoint::new(ctx2, third)?;
    let rational = rationality_test(&third)
        .expect("the third intersection point of a secant line is rational");
    Ok(DescentOutcome::Descended(rational))
}

/// Convenience constructor for the quadratic extension GF(p^2) used by the
/// descent routines, built on the first irreducible quadratic in counter
/// order.
pub fn quadratic_extension(p: u64) -> Result<FieldCtx, Error> {
    let base = FieldCtx::prime(p)?;
    FieldCtx::extension(&base, find_irreducible(p, 2))
}

/// Parses one GF(p^2) coordinate given as polynomial text in w, for example
/// "w + 3" or "2".
pub fn parse_quadratic_coord(ctx2: &FieldCtx, text: &str) -> Result<FFElement, Error> {
    let poly = UniPoly::parse(ctx2.p(), text)?;
    Ok(poly.eval_element(ctx2, &ctx2.generator()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    fn fermat(p: u64) -> CubicSurface {
        let ctx = FieldCtx::prime(p).unwrap();
        let form = MultiForm::parse(p, 4, 3, "x0^3 + x1^3 + x2^3 + x3^3").unwrap();
        CubicSurface::new(&ctx, form).unwrap()
    }

    fn ext_point(ctx2: &FieldCtx, texts: [&str; 4]) -> QuadExtPoint {
        let coords = texts
            .iter()
            .map(|t| parse_quadratic_coord(ctx2, t).unwrap())
            .collect();
        QuadExtPoint::new(ctx2, coords).unwrap()
    }

    #[test]
    fn surface_constructor_validates_input() {
        let ctx = FieldCtx::prime(2).unwrap();
        let quadric = MultiForm::parse(2, 4, 2, "x0^2 + x1*x2").unwrap();
        assert!(matches!(
            CubicSurface::new(&ctx, quadric),
            Err(Error::Unsupported(_))
        ));
        let three_vars = MultiForm::parse(2, 3, 3, "x0^3").unwrap();
        assert!(matches!(
            CubicSurface::new(&ctx, three_vars),
            Err(Error::DimensionMismatch { expected: 4, got: 3 })
        ));
        let zero = MultiForm::zero(2, 4, 3);
        assert!(matches!(
            CubicSurface::new(&ctx, zero),
            Err(Error::Unsupported(_))
        ));
        let wrong_p = MultiForm::parse(3, 4, 3, "x0^3").unwrap();
        assert!(matches!(
            CubicSurface::new(&ctx, wrong_p),
            Err(Error::Unsupported(_))
        ));
        let ctx4 = quadratic_extension(2).unwrap();
        let cubic = MultiForm::parse(2, 4, 3, "x0^3").unwrap();
        assert!(matches!(
            CubicSurface::new(&ctx4, cubic),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn fermat_point_counts() {
        assert_eq!(count_points(&fermat(2), DEFAULT_BUDGET).unwrap(), 7);
        assert_eq!(count_points(&fermat(3), DEFAULT_BUDGET).unwrap(), 13);
        assert_eq!(count_points(&fermat(7), DEFAULT_BUDGET).unwrap(), 99);
    }

    #[test]
    fn count_respects_budget() {
        match count_points(&fermat(7), 10) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, 400);
                assert_eq!(budget, 10);
            }
            other => panic!("expected budget error, got {:?}", other),
        }
    }

    #[test]
    fn quad_ext_point_normalizes() {
        let ctx2 = quadratic_extension(2).unwrap();
        let w = ctx2.generator();
        let pt = QuadExtPoint::new(&ctx2, vec![ctx2.zero(), w.clone(), w.clone(), ctx2.zero()])
            .unwrap();
        assert_eq!(pt.to_string(), "(0 : 1 : 1 : 0)");
        let rational = rationality_test(&pt).unwrap();
        assert_eq!(rational.coords(), &[0, 1, 1, 0]);
    }

    #[test]
    fn quad_ext_point_conjugate_and_rationality() {
        let ctx2 = quadratic_extension(7).unwrap();
        let pt = ext_point(&ctx2, ["1", "0", "w + 3", "w + 6"]);
        assert_eq!(pt.to_string(), "(1 : 0 : w + 3 : w + 6)");
        assert!(rationality_test(&pt).is_none());
        let conj = pt.conjugate();
        assert_eq!(conj.to_string(), "(1 : 0 : 6w + 3 : 6w + 6)");
        assert_eq!(conj.conjugate(), pt);
    }

    #[test]
    fn descent_rejects_points_off_the_surface() {
        let ctx2 = quadratic_extension(2).unwrap();
        let pt = ext_point(&ctx2, ["1", "0", "0", "0"]);
        assert!(matches!(
            secant_descent(&fermat(2), &pt),
            Err(Error::NotOnSurface)
        ));
    }

    #[test]
    fn descent_recognizes_rational_points() {
        let ctx2 = quadratic_extension(2).unwrap();
        let pt = ext_point(&ctx2, ["1", "1", "0", "0"]);
        match secant_descent(&fermat(2), &pt).unwrap() {
            DescentOutcome::AlreadyRational(q) => assert_eq!(q.coords(), &[1, 1, 0, 0]),
            other => panic!("expected AlreadyRational, got {:?}", other),
        }
    }

    #[test]
    fn descent_over_gf4_regression() {
        let surface = fermat(2);
        let ctx2 = quadratic_extension(2).unwrap();
        let pt = ext_point(&ctx2, ["1", "0", "0", "w"]);
        assert!(surface.contains(&pt).unwrap());
        match secant_descent(&surface, &pt).unwrap() {
            DescentOutcome::Descended(q) => {
                assert_eq!(q.coords(), &[1, 0, 0, 1]);
                assert_eq!(surface.form().eval(q.coords()).unwrap(), 0);
            }
            other => panic!("expected Descended, got {:?}", other),
        }
    }

    #[test]
    fn descent_over_gf49_regression() {
        let surface = fermat(7);
        let ctx2 = quadratic_extension(7).unwrap();
        let pt = ext_point(&ctx2, ["1", "0", "w + 3", "w + 6"]);
        assert!(surface.contains(&pt).unwrap());
        match secant_descent(&surface, &pt).unwrap() {
            DescentOutcome::Descended(q) => {
                assert_eq!(q.coords(), &[1, 0, 0, 3]);
                assert_eq!(surface.form().eval(q.coords()).unwrap(), 0);
            }
            other => panic!("expected Descended, got {:?}", other),
        }
    }

    #[test]
    fn descent_detects_a_line_on_the_surface() {
        let ctx = FieldCtx::prime(2).unwrap();
        let form = MultiForm::parse(2, 4, 3, "x0*x1*x2").unwrap();
        let surface = CubicSurface::new(&ctx, form).unwrap();
        let ctx2 = quadratic_extension(2).unwrap();
        let pt = ext_point(&ctx2, ["0", "1", "w", "0"]);
        assert_eq!(
            secant_descent(&surface, &pt).unwrap(),
            DescentOutcome::LineOnSurface
        );
    }

    /// Brute-force check of a secant line: collect the normalized points of
    /// the line s*P + u*P^sigma that lie on the surface.
    fn line_zeros(
        surface: &CubicSurface,
        ctx2: &FieldCtx,
        pt: &QuadExtPoint,
    ) -> Vec<QuadExtPoint> {
        let conj = pt.conjugate();
        let mut zeros = Vec::new();
        let mut scalars: Vec<(FFElement, FFElement)> = Vec::new();
        for k in 0..ctx2.order() {
            scalars.push((ctx2.one(), ctx2.element_from_index(k)));
        }
        scalars.push((ctx2.zero(), ctx2.one()));
        for (s, u) in scalars {
            let coords: Vec<FFElement> = pt
                .coords()
                .iter()
                .zip(conj.coords())
                .map(|(a, b)| ctx2.add(&ctx2.mul(&s, a), &ctx2.mul(&u, b)))
                .collect();
            if coords.iter().all(|c| c.is_zero()) {
                continue;
            }
            let candidate = QuadExtPoint::new(ctx2, coords).unwrap();
            if surface
                .form()
                .eval_ext(ctx2, candidate.coords())
                .unwrap()
                .is_zero()
                && !zeros.contains(&candidate)
            {
                zeros.push(candidate);
            }
        }
        zeros
    }

    #[test]
    fn secant_line_meets_the_surface_in_exactly_three_points() {
        let surface = fermat(7);
        let ctx2 = quadratic_extension(7).unwrap();
        let pt = ext_point(&ctx2, ["1", "0", "w + 3", "w + 6"]);
        let zeros = line_zeros(&surface, &ctx2, &pt);
        assert_eq!(zeros.len(), 3);
        assert!(zeros.contains(&pt));
        assert!(zeros.contains(&pt.conjugate()));
        let q = ext_point(&ctx2, ["1", "0", "0", "3"]);
        assert!(zeros.contains(&q));
    }

    #[test]
    fn descent_outcomes_verified_by_brute_force_over_small_fields() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for p in [2u64, 3] {
            let ctx = FieldCtx::prime(p).unwrap();
            let ctx2 = quadratic_extension(p).unwrap();
            let mut checked = 0;
            while checked < 5 {
                let mut form = MultiForm::zero(p, 4, 3);
                for _ in 0..6 {
                    let mut exps = [0u8; 4];
                    for _ in 0..3 {
                        exps[rng.gen_range(0..4)] += 1;
                    }
                    let coef = rng.gen_range(1..p);
                    let _ = form.add_term(&exps, coef);
                }
                if form.is_zero() {
                    continue;
                }
                let surface = CubicSurface::new(&ctx, form).unwrap();
                checked += 1;
                let q = ctx2.order();
                for pivot in 0..4usize {
                    let free = 3 - pivot;
                    for t in 0..q.pow(free as u32) {
                        let mut coords = vec![ctx2.zero(); 4];
                        coords[pivot] = ctx2.one();
                        let mut rest = t;
                        for m in (0..free).rev() {
                            coords[pivot + 1 + m] = ctx2.element_from_index(rest % q);
                            rest /= q;
                        }
                        let pt = QuadExtPoint::new(&ctx2, coords).unwrap();
                        if !surface.contains(&pt).unwrap() {
                            continue;
                        }
                        match secant_descent(&surface, &pt).unwrap() {
                            DescentOutcome::AlreadyRational(v) => {
                                assert!(rationality_test(&pt).is_some());
                                assert_eq!(surface.form().eval(v.coords()).unwrap(), 0);
                            }
                            DescentOutcome::Descended(v) => {
                                assert!(rationality_test(&pt).is_none());
                                assert_eq!(surface.form().eval(v.coords()).unwrap(), 0);
                                let zeros = line_zeros(&surface, &ctx2, &pt);
                                let lifted: Vec<FFElement> = v
                                    .coords()
                                    .iter()
                                    .map(|&c| ctx2.from_base(c))
                                    .collect();
                                let as_ext = QuadExtPoint::new(&ctx2, lifted).unwrap();
                                assert!(zeros.contains(&as_ext));
                            }
                            DescentOutcome::LineOnSurface => {
                                let zeros = line_zeros(&surface, &ctx2, &pt);
                                assert_eq!(zeros.len() as u64, ctx2.order() + 1);
                            }
                            DescentOutcome::TangentSecant => {
                                panic!("tangent secant reported for a conjugate pair")
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fermat_surfaces_are_smooth_away_from_characteristic_three() {
        assert!(jacobian_singular_scan(&fermat(2), 1, DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
        assert!(jacobian_singular_scan(&fermat(7), 1, DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn fermat_over_gf3_is_singular_everywhere() {
        let surface = fermat(3);
        let singular = jacobian_singular_scan(&surface, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(singular.len() as u64, count_points(&surface, DEFAULT_BUDGET).unwrap());
        assert!(singular.iter().all(|s| s.field_degree() == 1));

        let deeper = jacobian_singular_scan(&surface, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(deeper.len(), 91);
        let new_at_two = deeper.iter().filter(|s| s.field_degree() == 2).count();
        assert_eq!(new_at_two, 78);
    }

    #[test]
    fn singular_scan_respects_budget() {
        match jacobian_singular_scan(&fermat(3), 2, 100) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, 860);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget error, got {:?}", other.map(|v| v.len())),
        }
    }

    #[test]
    fn singular_points_render_with_their_field() {
        let surface = fermat(3);
        let singular = jacobian_singular_scan(&surface, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(singular[0].to_string(), "(1 : 0 : 0 : 2)");
    }
}
