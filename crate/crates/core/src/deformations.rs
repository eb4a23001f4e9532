//! Truncated Hom-pre-Lie deformations `x·_t y = Σ t^k μ_k(x,y)` of a
//! commutative Hom-associative algebra, their semi-classical limits,
//! infinitesimal cocycles, obstructions and extensions.

use crate::algebra::{HomAlgebra, HomFManifold};
use crate::cohomology::{coboundary, Cochain, ComplexContext};
use crate::error::{Error, Result};
use crate::linalg::{tuples, BilinearMap, LinearMap, MultiTensor, Vector};
use crate::report::CheckReport;

/// `base` supplies `μ0` and the twist; `terms[k − 1]` is `μ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deformation {
    base: HomAlgebra,
    terms: Vec<BilinearMap>,
}

impl Deformation {
    pub fn new(base: HomAlgebra, terms: Vec<BilinearMap>) -> Result<Self> {
        let d = base.dim();
        if let Some(k) = terms.iter().position(|t| !t.is_square_on(d)) {
            return Err(Error::DimensionMismatch(format!("mu{} is not a product on the base space", k + 1)));
        }
        Ok(Deformation { base, terms })
    }

    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn terms(&self) -> &[BilinearMap] {
        &self.terms
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `μ_k`, with `μ_0` the base product.
    pub fn mu(&self, k: usize) -> &BilinearMap {
        if k == 0 {
            self.base.product()
        } else {
            &self.terms[k - 1]
        }
    }

    pub fn extended(&self, next: BilinearMap) -> Result<Deformation> {
        let mut terms = self.terms.clone();
        terms.push(next);
        Deformation::new(self.base.clone(), terms)
    }

    pub fn truncated(&self, order: usize) -> Deformation {
        Deformation { base: self.base.clone(), terms: self.terms[..order.min(self.order())].to_vec() }
    }

    /// `Σ_{i+j=k, i,j ≥ lo} μ_i(μ_j(x,y), α(z)) − μ_i(α(x), μ_j(y,z))`.
    fn rule_side(&self, k: usize, lo: usize, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let a = self.base.twist();
        let mut acc = Vector::zeros(self.base.dim());
        for i in 0..=k {
            let j = k - i;
            if i < lo || j < lo || i > self.order() || j > self.order() {
                continue;
            }
            acc += &(self.mu(i).apply(&self.mu(j).apply(x, y), &a.apply(z)) - self.mu(i).apply(&a.apply(x), &self.mu(j).apply(y, z)));
        }
        acc
    }
}

fn rule_report(d: &Deformation, name: &str, orders: std::ops::RangeInclusive<usize>) -> CheckReport {
    let n = d.base.dim();
    let mut report = CheckReport::new(name);
    for k in orders {
        report.over_tuples(&format!("pre-lie rule at t^{k}"), n, 3, |t| {
            let (x, y, z) = (d.base.basis(t[0]), d.base.basis(t[1]), d.base.basis(t[2]));
            (d.rule_side(k, 0, &x, &y, &z), d.rule_side(k, 0, &y, &x, &z))
        });
    }
    report
}

/// The Hom-pre-Lie rule `Σ_{i+j=k} (μ_i(μ_j(x,y),α(z)) − μ_i(α(x),μ_j(y,z)))`
/// is symmetric in `x, y` for every `0 ≤ k ≤ order`.
pub fn check_n_deformation(d: &Deformation) -> CheckReport {
    rule_report(d, "n-deformation", 0..=d.order())
}

fn require(report: &CheckReport, what: &str) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} ({} failing instances)", report.failures)))
    }
}

/// `(A, μ0, [x,y] = μ1(x,y) − μ1(y,x), α)`.
pub fn semiclassical_limit(d: &Deformation) -> Result<HomFManifold> {
    if d.order() == 0 {
        return Err(Error::Precondition("semi-classical limit needs a first-order term".into()));
    }
    require(&check_n_deformation(d), "not a Hom-pre-Lie deformation")?;
    HomFManifold::new(d.base.product().clone(), d.terms[0].commutator(), d.base.twist().clone())
}

/// `δψ(x,y,z) = R(x,y,z) − R(y,x,z)` with
/// `R(x,y,z) = ψ(x,y)·α(z) − α(x)·ψ(y,z) + ψ(x·y, α(z)) − ψ(α(x), y·z)`:
/// the part of the rule at order `n + 1` that involves `μ_{n+1} = ψ`.
pub fn rule_defect(base: &HomAlgebra, psi: &BilinearMap) -> Result<Cochain> {
    let d = Deformation::new(base.clone(), vec![psi.clone()])?;
    let n = base.dim();
    let mut t = MultiTensor::zeros(vec![n; 4]);
    for idx in tuples(n, 3) {
        let (x, y, z) = (base.basis(idx[0]), base.basis(idx[1]), base.basis(idx[2]));
        t.set_fiber(&idx, &(d.rule_side(1, 0, &x, &y, &z) - d.rule_side(1, 0, &y, &x, &z)));
    }
    Cochain::new(t)
}

/// What the different readings of "`μ1` is a 2-cocycle" say about one `μ1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleComparison {
    /// The order-1 rule: the ground truth.
    pub rule: bool,
    /// The closed-form identity with `μ1(x, y·α(z))` on the left.
    pub closed_form: bool,
    /// `∂μ1 = 0` in the adjoint complex of `(A, ·, α)`; `None` when `α` is
    /// singular.
    pub coboundary_vanishes: Option<bool>,
    /// `∂μ1 = −δμ1` exactly.
    pub coboundary_matches_rule: Option<bool>,
}

pub fn compare_cocycle_conditions(base: &HomAlgebra, mu1: &BilinearMap) -> Result<CocycleComparison> {
    let d = Deformation::new(base.clone(), vec![mu1.clone()])?;
    let rule = rule_report(&d, "rule", 1..=1).passed;
    let a = base.twist();
    let closed_form = tuples(base.dim(), 3).all(|t| {
        let (x, y, z) = (base.basis(t[0]), base.basis(t[1]), base.basis(t[2]));
        let lhs = base.mul(&mu1.apply(&x, &y), &a.apply(&z)) - base.mul(&a.apply(&x), &mu1.apply(&y, &z)) - mu1.apply(&x, &base.mul(&y, &a.apply(&z)));
        let rhs = base.mul(&mu1.apply(&y, &x), &a.apply(&z)) - base.mul(&a.apply(&y), &mu1.apply(&x, &z)) - mu1.apply(&a.apply(&y), &base.mul(&x, &z));
        lhs == rhs
    });
    let (mut coboundary_vanishes, mut coboundary_matches_rule) = (None, None);
    if let Ok(ctx) = ComplexContext::adjoint(base.clone()) {
        let dmu = coboundary(&ctx, &Cochain::from_bilinear(mu1))?;
        coboundary_vanishes = Some(dmu.is_zero());
        coboundary_matches_rule = Some(dmu.add(&rule_defect(base, mu1)?).is_zero());
    }
    Ok(CocycleComparison { rule, closed_form, coboundary_vanishes, coboundary_matches_rule })
}

/// `μ1` defines a Hom-pre-Lie infinitesimal deformation: the rule at order
/// 1. Notes record how the closed form and `∂μ1` compare.
pub fn check_infinitesimal_cocycle(base: &HomAlgebra, mu1: &BilinearMap) -> Result<CheckReport> {
    let d = Deformation::new(base.clone(), vec![mu1.clone()])?;
    let mut report = rule_report(&d, "infinitesimal-cocycle", 1..=1);
    let cmp = compare_cocycle_conditions(base, mu1)?;
    if cmp.closed_form != cmp.rule {
        report.note(format!("closed form gives {} where the rule gives {}", verdict(cmp.closed_form), verdict(cmp.rule)));
    }
    match (cmp.coboundary_vanishes, cmp.coboundary_matches_rule) {
        (Some(z), Some(m)) => {
            if !m {
                report.note("coboundary of mu1 differs from the rule defect at this twist");
            }
            if z != cmp.rule {
                report.note(format!("coboundary test gives {} where the rule gives {}", verdict(z), verdict(cmp.rule)));
            }
        }
        _ => report.note("twist is singular; coboundary not evaluated"),
    }
    Ok(report)
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

/// `x·φ(y) + φ(x)·y − φ(x·y)`.
pub fn exact_part(base: &HomAlgebra, phi: &LinearMap) -> BilinearMap {
    let n = base.dim();
    BilinearMap::from_fn(n, n, n, |i, j| {
        let (x, y) = (base.basis(i), base.basis(j));
        base.mul(&x, &phi.apply(&y)) + base.mul(&phi.apply(&x), &y) - phi.apply(&base.mul(&x, &y))
    })
}

/// Some `φ` with `μ1 − μ1' = x·φ(y) + φ(x)·y − φ(x·y)`, or `None` if there
/// is none.
pub fn equivalence_witness(base: &HomAlgebra, mu1: &BilinearMap, mu1_prime: &BilinearMap) -> Result<Option<LinearMap>> {
    let n = base.dim();
    if !mu1.is_square_on(n) || !mu1_prime.is_square_on(n) {
        return Err(Error::DimensionMismatch("deformation terms must be products on the base space".into()));
    }
    let mut columns = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut e = LinearMap::zeros(n, n);
            e.set(r, c, crate::linalg::one());
            columns.push(Vector(exact_part(base, &e).coords().to_vec()));
        }
    }
    let system = LinearMap::from_columns(n * n * n, &columns);
    let rhs = Vector(mu1.sub(mu1_prime).coords().to_vec());
    Ok(system.solve(&rhs)?.map(|sol| {
        let mut phi = LinearMap::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                phi.set(r, c, sol.particular[r * n + c].clone());
            }
        }
        phi
    }))
}

/// `Θ_n(x,y,z) = Σ_{i+j=n+1, i,j≥1} μ_i(μ_j(x,y),α(z)) − μ_i(α(x),μ_j(y,z))
/// − μ_i(μ_j(y,x),α(z)) + μ_i(α(y),μ_j(x,z))`.
pub fn obstruction_theta(d: &Deformation) -> Result<Cochain> {
    if d.order() == 0 {
        return Err(Error::Precondition("obstruction needs a deformation of order at least 1".into()));
    }
    require(&check_n_deformation(d), "not a Hom-pre-Lie deformation")?;
    let n = d.base.dim();
    let k = d.order() + 1;
    let mut t = MultiTensor::zeros(vec![n; 4]);
    for idx in tuples(n, 3) {
        let (x, y, z) = (d.base.basis(idx[0]), d.base.basis(idx[1]), d.base.basis(idx[2]));
        t.set_fiber(&idx, &(d.rule_side(k, 1, &x, &y, &z) - d.rule_side(k, 1, &y, &x, &z)));
    }
    Cochain::new(t)
}

/// `∂Θ_n = 0` in the adjoint complex of the base.
pub fn check_theta_closed(d: &Deformation) -> Result<CheckReport> {
    let theta = obstruction_theta(d)?;
    let ctx = ComplexContext::adjoint(d.base.clone())?;
    let dt = coboundary(&ctx, &theta)?;
    let n = d.base.dim();
    let mut report = CheckReport::new("obstruction-closed");
    report.over_tuples("d(theta) = 0", n, 4, |t| (dt.at(t), Vector::zeros(n)));
    Ok(report)
}

/// Some `μ_{n+1}` extending `d` to order `n + 1`, i.e. a solution of
/// `δψ = −Θ_n` over all bilinear maps, or `None` if the obstruction is
/// nonzero.
pub fn extend_deformation(d: &Deformation) -> Result<Option<BilinearMap>> {
    let theta = obstruction_theta(d)?;
    let n = d.base.dim();
    let unknowns = n * n * n;
    let mut columns = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let psi = BilinearMap::from_coords(n, n, n, Vector::basis(unknowns, u).into_inner());
        columns.push(Vector(rule_defect(&d.base, &psi)?.tensor().data().to_vec()));
    }
    let system = LinearMap::from_columns(n * n * n * n, &columns);
    let rhs = -Vector(theta.tensor().data().to_vec());
    Ok(system.solve(&rhs)?.map(|sol| BilinearMap::from_coords(n, n, n, sol.particular.into_inner())))
}
