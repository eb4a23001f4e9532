//! Representations `(V; ρ, μ, φ)`: `ρ` for a bracket, `μ` for a product,
//! `φ` the twist on `V`. Includes duals, the semidirect product and the
//! coherence conditions under which the coadjoint is a representation.

use num_traits::Zero;

use crate::algebra::{HomAlgebra, HomFManifold, HomPreF};
use crate::error::{Error, Result};
use crate::linalg::{int, BilinearMap, LinearMap, Vector};
use crate::report::CheckReport;

/// One `module_dim × module_dim` matrix per basis element of the acting
/// algebra for each present action. A Lie-only representation has no `μ`,
/// a product-only one has no `ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    alg_dim: usize,
    module_dim: usize,
    rho: Option<Vec<LinearMap>>,
    mu: Option<Vec<LinearMap>>,
    phi: LinearMap,
}

fn combine(maps: &[LinearMap], x: &Vector, u: &Vector) -> Vector {
    let mut out = Vector::zeros(u.dim());
    for (c, m) in x.iter().zip(maps) {
        if !c.is_zero() {
            out += &m.apply(u).scale(c);
        }
    }
    out
}

fn linear_combination(maps: &[LinearMap], x: &Vector, n: usize) -> LinearMap {
    let mut out = LinearMap::zeros(n, n);
    for (c, m) in x.iter().zip(maps) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

impl Representation {
    pub fn new(alg_dim: usize, rho: Option<Vec<LinearMap>>, mu: Option<Vec<LinearMap>>, phi: LinearMap) -> Result<Self> {
        let m = phi.rows();
        if phi.cols() != m {
            return Err(Error::DimensionMismatch("module twist must be square".into()));
        }
        for (name, maps) in [("rho", &rho), ("mu", &mu)] {
            if let Some(maps) = maps {
                if maps.len() != alg_dim {
                    return Err(Error::DimensionMismatch(format!("{name} needs one matrix per basis element ({alg_dim})")));
                }
                if maps.iter().any(|a| a.rows() != m || a.cols() != m) {
                    return Err(Error::DimensionMismatch(format!("{name} matrices must be {m}x{m}")));
                }
            }
        }
        Ok(Representation { alg_dim, module_dim: m, rho, mu, phi })
    }

    /// `(A; ad, L, α)`.
    pub fn adjoint(fm: &HomFManifold) -> Self {
        let d = fm.dim();
        let rho = (0..d).map(|i| fm.bracket().left_mult(&fm.basis(i))).collect();
        let mu = (0..d).map(|i| fm.dot().left_mult(&fm.basis(i))).collect();
        Representation { alg_dim: d, module_dim: d, rho: Some(rho), mu: Some(mu), phi: fm.twist().clone() }
    }

    /// `(A; L, α)` for a product-only algebra.
    pub fn adjoint_assoc(alg: &HomAlgebra) -> Self {
        let d = alg.dim();
        let mu = (0..d).map(|i| alg.product().left_mult(&alg.basis(i))).collect();
        Representation { alg_dim: d, module_dim: d, rho: None, mu: Some(mu), phi: alg.twist().clone() }
    }

    /// `(A; ad, α)` for a bracket-only algebra.
    pub fn adjoint_lie(alg: &HomAlgebra) -> Self {
        let d = alg.dim();
        let rho = (0..d).map(|i| alg.product().left_mult(&alg.basis(i))).collect();
        Representation { alg_dim: d, module_dim: d, rho: Some(rho), mu: None, phi: alg.twist().clone() }
    }

    /// `(A; L∗, R∗, α)` of a Hom-pre-Lie algebra `(A, ∗, α)`.
    pub fn adjoint_pre_lie(alg: &HomAlgebra) -> Self {
        let d = alg.dim();
        let rho = (0..d).map(|i| alg.product().left_mult(&alg.basis(i))).collect();
        let mu = (0..d).map(|i| alg.product().right_mult(&alg.basis(i))).collect();
        Representation { alg_dim: d, module_dim: d, rho: Some(rho), mu: Some(mu), phi: alg.twist().clone() }
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn rho(&self) -> Option<&[LinearMap]> {
        self.rho.as_deref()
    }

    pub fn mu(&self) -> Option<&[LinearMap]> {
        self.mu.as_deref()
    }

    pub fn phi(&self) -> &LinearMap {
        &self.phi
    }

    pub fn require_rho(&self) -> Result<&[LinearMap]> {
        self.rho().ok_or_else(|| Error::Precondition("representation has no bracket action".into()))
    }

    pub fn require_mu(&self) -> Result<&[LinearMap]> {
        self.mu().ok_or_else(|| Error::Precondition("representation has no product action".into()))
    }

    /// `ρ(x)u`. Panics if the representation has no bracket action.
    pub fn act_rho(&self, x: &Vector, u: &Vector) -> Vector {
        combine(self.rho.as_ref().expect("bracket action"), x, u)
    }

    /// `μ(x)u`. Panics if the representation has no product action.
    pub fn act_mu(&self, x: &Vector, u: &Vector) -> Vector {
        combine(self.mu.as_ref().expect("product action"), x, u)
    }

    pub fn rho_of(&self, x: &Vector) -> Result<LinearMap> {
        Ok(linear_combination(self.require_rho()?, x, self.module_dim))
    }

    pub fn mu_of(&self, x: &Vector) -> Result<LinearMap> {
        Ok(linear_combination(self.require_mu()?, x, self.module_dim))
    }

    fn u(&self, i: usize) -> Vector {
        Vector::basis(self.module_dim, i)
    }

    fn fits(&self, alg_dim: usize, twist: &LinearMap) -> Result<()> {
        if self.alg_dim != alg_dim || twist.rows() != alg_dim {
            return Err(Error::DimensionMismatch(format!(
                "representation of a {}-dimensional algebra used with a {alg_dim}-dimensional one",
                self.alg_dim
            )));
        }
        Ok(())
    }
}

/// `μ(α(x))∘φ = φ∘μ(x)` and `μ(x·y)∘φ = μ(α(x))∘μ(y)`.
pub fn check_rep_comm_assoc(alg: &HomAlgebra, rep: &Representation) -> Result<CheckReport> {
    rep.fits(alg.dim(), alg.twist())?;
    rep.require_mu()?;
    let (d, m) = (alg.dim(), rep.module_dim);
    let a = alg.twist();
    let phi = &rep.phi;
    let mut report = CheckReport::new("rep-comm-assoc");
    report.over_mixed("product action intertwines twists", &[d, m], |t| {
        let (x, u) = (alg.basis(t[0]), rep.u(t[1]));
        (rep.act_mu(&a.apply(&x), &phi.apply(&u)), phi.apply(&rep.act_mu(&x, &u)))
    });
    report.over_mixed("product action is multiplicative", &[d, d, m], |t| {
        let (x, y, u) = (alg.basis(t[0]), alg.basis(t[1]), rep.u(t[2]));
        (rep.act_mu(&alg.mul(&x, &y), &phi.apply(&u)), rep.act_mu(&a.apply(&x), &rep.act_mu(&y, &u)))
    });
    Ok(report)
}

/// `ρ(α(x))∘φ = φ∘ρ(x)` and `ρ([x,y])∘φ = ρ(α(x))∘ρ(y) − ρ(α(y))∘ρ(x)`.
pub fn check_rep_hom_lie(alg: &HomAlgebra, rep: &Representation) -> Result<CheckReport> {
    rep.fits(alg.dim(), alg.twist())?;
    rep.require_rho()?;
    let (d, m) = (alg.dim(), rep.module_dim);
    let a = alg.twist();
    let phi = &rep.phi;
    let mut report = CheckReport::new("rep-hom-lie");
    report.over_mixed("bracket action intertwines twists", &[d, m], |t| {
        let (x, u) = (alg.basis(t[0]), rep.u(t[1]));
        (rep.act_rho(&a.apply(&x), &phi.apply(&u)), phi.apply(&rep.act_rho(&x, &u)))
    });
    report.over_mixed("bracket action is a Lie morphism", &[d, d, m], |t| {
        let (x, y, u) = (alg.basis(t[0]), alg.basis(t[1]), rep.u(t[2]));
        let lhs = rep.act_rho(&alg.mul(&x, &y), &phi.apply(&u));
        let rhs = rep.act_rho(&a.apply(&x), &rep.act_rho(&y, &u)) - rep.act_rho(&a.apply(&y), &rep.act_rho(&x, &u));
        (lhs, rhs)
    });
    Ok(report)
}

/// Representation of a Hom-pre-Lie algebra `(A, ∗, α)`: `ρ` represents the
/// commutator, `φ∘μ(x) = μ(α(x))∘φ` and
/// `ρ(α(x))μ(y) − μ(α(y))ρ(x) = μ(x∗y)φ − μ(α(y))μ(x)`.
pub fn check_rep_hom_pre_lie(alg: &HomAlgebra, rep: &Representation) -> Result<CheckReport> {
    rep.fits(alg.dim(), alg.twist())?;
    rep.require_mu()?;
    let commutator = HomAlgebra::new(alg.product().commutator(), alg.twist().clone())?;
    let mut report = CheckReport::new("rep-hom-pre-lie");
    report.absorb(check_rep_hom_lie(&commutator, rep)?);
    let (d, m) = (alg.dim(), rep.module_dim);
    let a = alg.twist();
    let phi = &rep.phi;
    report.over_mixed("right action intertwines twists", &[d, m], |t| {
        let (x, u) = (alg.basis(t[0]), rep.u(t[1]));
        (phi.apply(&rep.act_mu(&x, &u)), rep.act_mu(&a.apply(&x), &phi.apply(&u)))
    });
    report.over_mixed("pre-lie compatibility", &[d, d, m], |t| {
        let (x, y, u) = (alg.basis(t[0]), alg.basis(t[1]), rep.u(t[2]));
        let (ax, ay) = (a.apply(&x), a.apply(&y));
        let lhs = rep.act_rho(&ax, &rep.act_mu(&y, &u)) - rep.act_mu(&ay, &rep.act_rho(&x, &u));
        let rhs = rep.act_mu(&alg.mul(&x, &y), &phi.apply(&u)) - rep.act_mu(&ay, &rep.act_mu(&x, &u));
        (lhs, rhs)
    });
    Ok(report)
}

fn l1(fm: &HomFManifold, rep: &Representation, x: &Vector, y: &Vector, u: &Vector) -> Vector {
    rep.act_rho(&fm.alpha(x), &rep.act_mu(y, u))
        - rep.act_mu(&fm.alpha(y), &rep.act_rho(x, u))
        - rep.act_mu(&fm.br(x, y), &rep.phi.apply(u))
}

fn l2(fm: &HomFManifold, rep: &Representation, x: &Vector, y: &Vector, u: &Vector) -> Vector {
    rep.act_mu(&fm.alpha(x), &rep.act_rho(y, u)) + rep.act_mu(&fm.alpha(y), &rep.act_rho(x, u))
        - rep.act_rho(&fm.mul(x, y), &rep.phi.apply(u))
}

fn l3(fm: &HomFManifold, rep: &Representation, x: &Vector, y: &Vector, u: &Vector) -> Vector {
    rep.act_rho(&fm.alpha(y), &rep.act_mu(x, u)) + rep.act_rho(&fm.alpha(x), &rep.act_mu(y, u))
        - rep.act_rho(&fm.mul(x, y), &rep.phi.apply(u))
}

fn eval_checked(
    fm: &HomFManifold,
    rep: &Representation,
    x: &Vector,
    y: &Vector,
    u: &Vector,
    f: fn(&HomFManifold, &Representation, &Vector, &Vector, &Vector) -> Vector,
) -> Result<Vector> {
    rep.fits(fm.dim(), fm.twist())?;
    rep.require_rho()?;
    rep.require_mu()?;
    if x.dim() != fm.dim() || y.dim() != fm.dim() || u.dim() != rep.module_dim {
        return Err(Error::DimensionMismatch("argument of the wrong length".into()));
    }
    Ok(f(fm, rep, x, y, u))
}

/// `L1(x,y,u) = ρ(α(x))μ(y)u − μ(α(y))ρ(x)u − μ([x,y])φ(u)`.
pub fn eval_l1(fm: &HomFManifold, rep: &Representation, x: &Vector, y: &Vector, u: &Vector) -> Result<Vector> {
    eval_checked(fm, rep, x, y, u, l1)
}

/// `L2(x,y,u) = μ(α(x))ρ(y)u + μ(α(y))ρ(x)u − ρ(x·y)φ(u)`.
pub fn eval_l2(fm: &HomFManifold, rep: &Representation, x: &Vector, y: &Vector, u: &Vector) -> Result<Vector> {
    eval_checked(fm, rep, x, y, u, l2)
}

/// `L3(x,y,u) = ρ(α(y))μ(x)u + ρ(α(x))μ(y)u − ρ(x·y)φ(u)`.
pub fn eval_l3(fm: &HomFManifold, rep: &Representation, x: &Vector, y: &Vector, u: &Vector) -> Result<Vector> {
    eval_checked(fm, rep, x, y, u, l3)
}

/// `(V; ρ, μ, φ)` is a representation of the Hom-F-manifold algebra: `μ`
/// represents `·`, `ρ` represents `[·,·]`, and
/// `L1(x·y, α(z), φ(u)) = μ(α²(x))L1(y,z,u) + μ(α²(y))L1(x,z,u)`,
/// `μ(L(x,y,z))φ²(u) = L2(α(y), α(z), μ(x)u) − μ(α²(x))L2(y,z,u)`.
pub fn check_rep_f_manifold(fm: &HomFManifold, rep: &Representation) -> Result<CheckReport> {
    let mut report = CheckReport::new("rep-f-manifold");
    report.absorb(check_rep_comm_assoc(&fm.dot_algebra(), rep)?);
    report.absorb(check_rep_hom_lie(&fm.bracket_algebra(), rep)?);
    let (d, m) = (fm.dim(), rep.module_dim);
    let e: Vec<Vector> = (0..d).map(|i| fm.basis(i)).collect();
    let a2e: Vec<Vector> = e.iter().map(|x| fm.alpha2(x)).collect();
    let phi = &rep.phi;
    report.over_mixed("rep hertling-manin", &[d, d, d, m], |t| {
        let (x, y, z, u) = (&e[t[0]], &e[t[1]], &e[t[2]], rep.u(t[3]));
        let lhs = l1(fm, rep, &fm.mul(x, y), &fm.alpha(z), &phi.apply(&u));
        let rhs = rep.act_mu(&a2e[t[0]], &l1(fm, rep, y, z, &u)) + rep.act_mu(&a2e[t[1]], &l1(fm, rep, x, z, &u));
        (lhs, rhs)
    });
    report.over_mixed("rep leibnizator", &[d, d, d, m], |t| {
        let (x, y, z, u) = (&e[t[0]], &e[t[1]], &e[t[2]], rep.u(t[3]));
        let lhs = rep.act_mu(&fm.leibniz(x, y, z), &phi.apply(&phi.apply(&u)));
        let rhs = l2(fm, rep, &fm.alpha(y), &fm.alpha(z), &rep.act_mu(x, &u)) - rep.act_mu(&a2e[t[0]], &l2(fm, rep, y, z, &u));
        (lhs, rhs)
    });
    Ok(report)
}

fn dual_twist(rep: &Representation) -> Result<(LinearMap, LinearMap)> {
    let inv = rep.phi.inverse_named("module twist")?;
    Ok((inv.transpose(), inv.compose(&inv)))
}

/// `x ↦ −(φ⁻²∘A(α(x)))ᵀ` in the dual basis, i.e. `⟨A^⋆(x)ξ, u⟩ = −⟨ξ, φ⁻²A(α(x))u⟩`.
fn star_maps(maps: &[LinearMap], twist: &LinearMap, phi_inv2: &LinearMap) -> Vec<LinearMap> {
    let n = phi_inv2.rows();
    (0..twist.cols())
        .map(|i| phi_inv2.compose(&linear_combination(maps, &twist.column(i), n)).transpose().neg())
        .collect()
}

/// The dual actions `(ρ^⋆, μ^⋆)` on `V*` (each absent if absent in `rep`)
/// and the dual twist `(φ⁻¹)ᵀ`.
pub fn star_actions(rep: &Representation, twist: &LinearMap) -> Result<(Option<Vec<LinearMap>>, Option<Vec<LinearMap>>, LinearMap)> {
    rep.fits(rep.alg_dim, twist)?;
    let (dual_phi, inv2) = dual_twist(rep)?;
    let rho = rep.rho.as_ref().map(|r| star_maps(r, twist, &inv2));
    let mu = rep.mu.as_ref().map(|r| star_maps(r, twist, &inv2));
    Ok((rho, mu, dual_phi))
}

/// `(V*; −μ^⋆, (φ⁻¹)ᵀ)`. The sign is the one used for the product action in
/// the other duals; `μ^⋆` itself is anti-multiplicative and is not a
/// representation unless it vanishes.
pub fn dual_rep_assoc(rep: &Representation, twist: &LinearMap) -> Result<Representation> {
    rep.require_mu()?;
    let (_, mu, phi) = star_actions(rep, twist)?;
    let mu = mu.unwrap().iter().map(LinearMap::neg).collect();
    Representation::new(rep.alg_dim, None, Some(mu), phi)
}

/// `(V*; ρ^⋆, (φ⁻¹)ᵀ)`.
pub fn dual_rep_lie(rep: &Representation, twist: &LinearMap) -> Result<Representation> {
    rep.require_rho()?;
    let (rho, _, phi) = star_actions(rep, twist)?;
    Representation::new(rep.alg_dim, rho, None, phi)
}

/// `(V*; ρ^⋆ − μ^⋆, −μ^⋆, (φ⁻¹)ᵀ)` for a Hom-pre-Lie representation.
pub fn dual_rep_pre_lie(rep: &Representation, twist: &LinearMap) -> Result<Representation> {
    rep.require_rho()?;
    rep.require_mu()?;
    let (rho, mu, phi) = star_actions(rep, twist)?;
    let (rho, mu) = (rho.unwrap(), mu.unwrap());
    let new_rho = rho.iter().zip(&mu).map(|(r, m)| r.sub(m)).collect();
    let new_mu = mu.iter().map(LinearMap::neg).collect();
    Representation::new(rep.alg_dim, Some(new_rho), Some(new_mu), phi)
}

/// `(V*; ρ^⋆, −μ^⋆, (φ⁻¹)ᵀ)`. Requires invertible `α` and `φ`; it is a
/// representation exactly when [`check_dual_rep_conditions`] passes.
pub fn dual_rep_f_manifold(fm: &HomFManifold, rep: &Representation) -> Result<Representation> {
    rep.require_rho()?;
    rep.require_mu()?;
    fm.twist().inverse_named("algebra twist")?;
    let (rho, mu, phi) = star_actions(rep, fm.twist())?;
    let mu = mu.unwrap().iter().map(LinearMap::neg).collect();
    Representation::new(rep.alg_dim, rho, Some(mu), phi)
}

/// `L1(x·y, z, φ(u)) = L1(α(y), z, μ(x)u) + L1(α(x), z, μ(y)u)` and
/// `μ(L(x,y,z))φ²(u) = L3(α(y), α(z), μ(x)u) − μ(α(x))L3(y,z,u)`.
pub fn check_dual_rep_conditions(fm: &HomFManifold, rep: &Representation) -> Result<CheckReport> {
    rep.fits(fm.dim(), fm.twist())?;
    rep.require_rho()?;
    rep.require_mu()?;
    let (d, m) = (fm.dim(), rep.module_dim);
    let e: Vec<Vector> = (0..d).map(|i| fm.basis(i)).collect();
    let phi = &rep.phi;
    let mut report = CheckReport::new("dual-rep-conditions");
    report.over_mixed("co-hertling-manin", &[d, d, d, m], |t| {
        let (x, y, z, u) = (&e[t[0]], &e[t[1]], &e[t[2]], rep.u(t[3]));
        let lhs = l1(fm, rep, &fm.mul(x, y), z, &phi.apply(&u));
        let rhs = l1(fm, rep, &fm.alpha(y), z, &rep.act_mu(x, &u)) + l1(fm, rep, &fm.alpha(x), z, &rep.act_mu(y, &u));
        (lhs, rhs)
    });
    report.over_mixed("co-leibnizator", &[d, d, d, m], |t| {
        let (x, y, z, u) = (&e[t[0]], &e[t[1]], &e[t[2]], rep.u(t[3]));
        let lhs = rep.act_mu(&fm.leibniz(x, y, z), &phi.apply(&phi.apply(&u)));
        let rhs = l3(fm, rep, &fm.alpha(y), &fm.alpha(z), &rep.act_mu(x, &u)) - rep.act_mu(&fm.alpha(x), &l3(fm, rep, y, z, &u));
        (lhs, rhs)
    });
    Ok(report)
}

/// `K(x,y,z) = [α(x), y·z] + [α(y), z·x] + [α(z), x·y]`.
fn cyclic_k(fm: &HomFManifold, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    fm.br(&fm.alpha(x), &fm.mul(y, z)) + fm.br(&fm.alpha(y), &fm.mul(z, x)) + fm.br(&fm.alpha(z), &fm.mul(x, y))
}

/// `L(x·y, z, α(w)) = L(α(y), z, x·w) + L(α(x), z, y·w)` and
/// `L(x,y,z)·α²(w) = K(α(y), α(z), x·w) − α(x)·K(y,z,w)`. These are the
/// dual-representation conditions for the adjoint representation.
pub fn check_coherence(fm: &HomFManifold) -> CheckReport {
    let d = fm.dim();
    let e: Vec<Vector> = (0..d).map(|i| fm.basis(i)).collect();
    let mut report = CheckReport::new("coherence");
    report.over_tuples("coherence hertling-manin", d, 4, |t| {
        let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
        let lhs = fm.leibniz(&fm.mul(x, y), z, &fm.alpha(w));
        let rhs = fm.leibniz(&fm.alpha(y), z, &fm.mul(x, w)) + fm.leibniz(&fm.alpha(x), z, &fm.mul(y, w));
        (lhs, rhs)
    });
    report.over_tuples("coherence leibnizator", d, 4, |t| {
        let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
        let lhs = fm.mul(&fm.leibniz(x, y, z), &fm.alpha2(w));
        let rhs = cyclic_k(fm, &fm.alpha(y), &fm.alpha(z), &fm.mul(x, w)) - fm.mul(&fm.alpha(x), &cyclic_k(fm, y, z, w));
        (lhs, rhs)
    });
    report
}

/// `(A*; ad^⋆, −L^⋆, (α⁻¹)ᵀ)`. Requires invertible `α`.
pub fn coadjoint(fm: &HomFManifold) -> Result<Representation> {
    dual_rep_f_manifold(fm, &Representation::adjoint(fm))
}

/// `⟨A^⋆(x)ξ, u⟩ = −⟨ξ, A(α⁻¹(x))φ⁻²(u)⟩` for each present action `A`.
pub fn check_dual_pairing(rep: &Representation, twist: &LinearMap) -> Result<CheckReport> {
    let (rho_s, mu_s, _) = star_actions(rep, twist)?;
    let a_inv = twist.inverse_named("algebra twist")?;
    let inv2 = rep.phi.inverse_named("module twist")?.pow(2);
    let (d, m) = (rep.alg_dim, rep.module_dim);
    let mut report = CheckReport::new("dual-pairing");
    let pairs = [("rho", rep.rho.as_ref(), rho_s.as_ref()), ("mu", rep.mu.as_ref(), mu_s.as_ref())];
    for (name, maps, star) in pairs {
        let (Some(maps), Some(star)) = (maps, star) else { continue };
        report.over_mixed(&format!("{name} pairing"), &[d, m], |t| {
            let xi = rep.u(t[1]);
            let lhs = star[t[0]].apply(&xi);
            let a = linear_combination(maps, &a_inv.column(t[0]), m).compose(&inv2);
            (lhs, -a.transpose().apply(&xi))
        });
    }
    Ok(report)
}

/// Pairing identities for the dual `L`-operators:
/// `⟨L1^⋆(x,y,ξ), u⟩ = ⟨ξ, L1(α⁻²(x), α⁻²(y), φ⁻⁴(u))⟩` and
/// `⟨L2^⋆(x,y,ξ), u⟩ = −⟨ξ, L3(α⁻²(x), α⁻²(y), φ⁻⁴(u))⟩`, where
/// `L1^⋆(x,y,ξ) = −ρ^⋆(α(x))μ^⋆(y)ξ + μ^⋆(α(y))ρ^⋆(x)ξ + μ^⋆([x,y])(φ⁻¹)ᵀξ` and
/// `L2^⋆(x,y,ξ) = −μ^⋆(α(x))ρ^⋆(y)ξ − μ^⋆(α(y))ρ^⋆(x)ξ − ρ^⋆(x·y)(φ⁻¹)ᵀξ`.
pub fn check_dual_l_lemma(fm: &HomFManifold, rep: &Representation) -> Result<CheckReport> {
    rep.fits(fm.dim(), fm.twist())?;
    rep.require_rho()?;
    rep.require_mu()?;
    let (rho_s, mu_s, dphi) = star_actions(rep, fm.twist())?;
    let star = Representation::new(rep.alg_dim, rho_s, mu_s, dphi)?;
    let a_inv2 = fm.twist().inverse_named("algebra twist")?.pow(2);
    let phi_inv4 = rep.phi.inverse_named("module twist")?.pow(4);
    let (d, m) = (fm.dim(), rep.module_dim);
    let e: Vec<Vector> = (0..d).map(|i| fm.basis(i)).collect();
    let pair_rhs = |f: fn(&HomFManifold, &Representation, &Vector, &Vector, &Vector) -> Vector, x: usize, y: usize, xi: &Vector| {
        let (x2, y2) = (a_inv2.apply(&e[x]), a_inv2.apply(&e[y]));
        Vector((0..m).map(|u| xi.dot(&f(fm, rep, &x2, &y2, &phi_inv4.column(u)))).collect())
    };
    let mut report = CheckReport::new("dual-l-lemma");
    report.over_mixed("L1 pairing", &[d, d, m], |t| {
        let (x, y, xi) = (&e[t[0]], &e[t[1]], star.u(t[2]));
        let lhs = star.act_mu(&fm.alpha(y), &star.act_rho(x, &xi))
            - star.act_rho(&fm.alpha(x), &star.act_mu(y, &xi))
            + star.act_mu(&fm.br(x, y), &star.phi.apply(&xi));
        (lhs, pair_rhs(l1, t[0], t[1], &xi))
    });
    report.over_mixed("L2 pairing", &[d, d, m], |t| {
        let (x, y, xi) = (&e[t[0]], &e[t[1]], star.u(t[2]));
        let lhs = -(star.act_mu(&fm.alpha(x), &star.act_rho(y, &xi))
            + star.act_mu(&fm.alpha(y), &star.act_rho(x, &xi))
            + star.act_rho(&fm.mul(x, y), &star.phi.apply(&xi)));
        (lhs, -pair_rhs(l3, t[0], t[1], &xi))
    });
    Ok(report)
}

/// `A ⊕ V` with `(x1+v1)·(x2+v2) = x1·x2 + μ(x1)v2 + μ(x2)v1`,
/// `[x1+v1, x2+v2] = [x1,x2] + ρ(x1)v2 − ρ(x2)v1` and twist `α ⊕ φ`.
/// Built for any representation shape; it is a Hom-F-manifold algebra when
/// `rep` satisfies the representation identities.
pub fn semidirect_product(fm: &HomFManifold, rep: &Representation) -> Result<HomFManifold> {
    rep.fits(fm.dim(), fm.twist())?;
    let rho = rep.require_rho()?;
    let mu = rep.require_mu()?;
    let (d, m) = (fm.dim(), rep.module_dim);
    let n = d + m;
    let lift = |v: Vector| Vector::zeros(d).concat(&v);
    let build = |base: &BilinearMap, act: &[LinearMap], sign: i64| {
        BilinearMap::from_fn(n, n, n, |i, j| match (i < d, j < d) {
            (true, true) => base.basis_product(i, j).concat(&Vector::zeros(m)),
            (true, false) => lift(act[i].column(j - d)),
            (false, true) => lift(act[j].column(i - d).scale(&int(sign))),
            (false, false) => Vector::zeros(n),
        })
    };
    HomFManifold::new(build(fm.dot(), mu, 1), build(fm.bracket(), rho, -1), fm.twist().direct_sum(&rep.phi))
}

/// `(A; L∗, L⋄, α)`, a representation of the sub-adjacent Hom-F-manifold
/// algebra of a Hom-pre-F-manifold algebra.
pub fn left_multiplication_rep(pf: &HomPreF) -> Representation {
    let d = pf.dim();
    let rho = (0..d).map(|i| pf.star().left_mult(&pf.basis(i))).collect();
    let mu = (0..d).map(|i| pf.diamond().left_mult(&pf.basis(i))).collect();
    Representation { alg_dim: d, module_dim: d, rho: Some(rho), mu: Some(mu), phi: pf.twist().clone() }
}
