//! O-operators and Rota-Baxter operators, the pre-F-manifold structures
//! they induce, and the symplectic construction.

use crate::algebra::{HomAlgebra, HomFManifold, HomPreF};
use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, LinearMap, Vector};
use crate::report::CheckReport;
use crate::representations::{check_coherence, check_rep_f_manifold, Representation};

fn require(report: &CheckReport, what: &str) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} ({} failing instances)", report.failures)))
    }
}

fn check_operator_shape(t: &LinearMap, alg_dim: usize, rep: &Representation) -> Result<()> {
    if rep.alg_dim() != alg_dim || t.rows() != alg_dim || t.cols() != rep.module_dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator must map the {}-dimensional module into the {alg_dim}-dimensional algebra",
            rep.module_dim()
        )));
    }
    Ok(())
}

/// A map `T: V → A` with `T∘φ = α∘T`, paired with the representation it is
/// taken with respect to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperator {
    t: LinearMap,
    rep: Representation,
}

impl OOperator {
    pub fn new(t: LinearMap, rep: Representation, twist: &LinearMap) -> Result<Self> {
        check_operator_shape(&t, twist.rows(), &rep)?;
        if t.compose(rep.phi()) != twist.compose(&t) {
            return Err(Error::Precondition("operator does not intertwine the twists".into()));
        }
        Ok(OOperator { t, rep })
    }

    pub fn map(&self) -> &LinearMap {
        &self.t
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }
}

fn intertwining(report: &mut CheckReport, t: &LinearMap, twist: &LinearMap, rep: &Representation) {
    report.over_tuples("intertwines twists", rep.module_dim(), 1, |i| {
        let u = Vector::basis(rep.module_dim(), i[0]);
        (t.apply(&rep.phi().apply(&u)), twist.apply(&t.apply(&u)))
    });
}

fn product_identity(report: &mut CheckReport, t: &LinearMap, alg: &HomAlgebra, rep: &Representation) {
    let m = rep.module_dim();
    report.over_tuples("o-operator product", m, 2, |i| {
        let (u, v) = (Vector::basis(m, i[0]), Vector::basis(m, i[1]));
        let (tu, tv) = (t.apply(&u), t.apply(&v));
        (alg.mul(&tu, &tv), t.apply(&(rep.act_mu(&tu, &v) + rep.act_mu(&tv, &u))))
    });
}

fn bracket_identity(report: &mut CheckReport, t: &LinearMap, alg: &HomAlgebra, rep: &Representation) {
    let m = rep.module_dim();
    report.over_tuples("o-operator bracket", m, 2, |i| {
        let (u, v) = (Vector::basis(m, i[0]), Vector::basis(m, i[1]));
        let (tu, tv) = (t.apply(&u), t.apply(&v));
        (alg.mul(&tu, &tv), t.apply(&(rep.act_rho(&tu, &v) - rep.act_rho(&tv, &u))))
    });
}

/// `T∘φ = α∘T` and `T(u)·T(v) = T(μ(T(u))v + μ(T(v))u)`.
pub fn check_o_operator_assoc(t: &LinearMap, alg: &HomAlgebra, rep: &Representation) -> Result<CheckReport> {
    check_operator_shape(t, alg.dim(), rep)?;
    rep.require_mu()?;
    let mut report = CheckReport::new("o-operator-assoc");
    intertwining(&mut report, t, alg.twist(), rep);
    product_identity(&mut report, t, alg, rep);
    Ok(report)
}

/// `T∘φ = α∘T` and `[T(u), T(v)] = T(ρ(T(u))v − ρ(T(v))u)`.
pub fn check_o_operator_lie(t: &LinearMap, alg: &HomAlgebra, rep: &Representation) -> Result<CheckReport> {
    check_operator_shape(t, alg.dim(), rep)?;
    rep.require_rho()?;
    let mut report = CheckReport::new("o-operator-lie");
    intertwining(&mut report, t, alg.twist(), rep);
    bracket_identity(&mut report, t, alg, rep);
    Ok(report)
}

/// Both O-operator identities with one intertwining check.
pub fn check_o_operator_f_manifold(t: &LinearMap, fm: &HomFManifold, rep: &Representation) -> Result<CheckReport> {
    check_operator_shape(t, fm.dim(), rep)?;
    rep.require_mu()?;
    rep.require_rho()?;
    let mut report = CheckReport::new("o-operator-f-manifold");
    intertwining(&mut report, t, fm.twist(), rep);
    product_identity(&mut report, t, &fm.dot_algebra(), rep);
    bracket_identity(&mut report, t, &fm.bracket_algebra(), rep);
    Ok(report)
}

/// `(V, u⋄v = μ(T(u))v, u∗v = ρ(T(u))v, φ)`.
pub fn induced_pre_f(t: &LinearMap, fm: &HomFManifold, rep: &Representation) -> Result<HomPreF> {
    require(&check_o_operator_f_manifold(t, fm, rep)?, "map is not an O-operator")?;
    require(&check_rep_f_manifold(fm, rep)?, "not a representation")?;
    let m = rep.module_dim();
    let diamond = BilinearMap::from_fn(m, m, m, |i, j| rep.act_mu(&t.column(i), &Vector::basis(m, j)));
    let star = BilinearMap::from_fn(m, m, m, |i, j| rep.act_rho(&t.column(i), &Vector::basis(m, j)));
    HomPreF::new(diamond, star, rep.phi().clone())
}

/// `x⋄y = R(x)·y`, `x∗y = [R(x), y]` for a Rota-Baxter operator of weight 0.
pub fn rota_baxter_induced(r: &LinearMap, fm: &HomFManifold) -> Result<HomPreF> {
    induced_pre_f(r, fm, &Representation::adjoint(fm))
}

/// `x⋄y = T(μ(x)T⁻¹(y))`, `x∗y = T(ρ(x)T⁻¹(y))` on `A` for an invertible
/// O-operator `T`. Its sub-adjacent structure is `fm` itself.
pub fn compatible_from_invertible_o(t: &LinearMap, fm: &HomFManifold, rep: &Representation) -> Result<HomPreF> {
    check_operator_shape(t, fm.dim(), rep)?;
    let t_inv = t.inverse_named("operator")?;
    require(&check_o_operator_f_manifold(t, fm, rep)?, "map is not an O-operator")?;
    let d = fm.dim();
    let via = |act: &dyn Fn(&Vector, &Vector) -> Vector| {
        BilinearMap::from_fn(d, d, d, |i, j| t.apply(&act(&fm.basis(i), &t_inv.column(j))))
    };
    let diamond = via(&|x, u| rep.act_mu(x, u));
    let star = via(&|x, u| rep.act_rho(x, u));
    HomPreF::new(diamond, star, fm.twist().clone())
}

/// Antisymmetric bilinear form `ω` on `A`, with `ω^♯` the matrix of
/// `x ↦ ω(x, ·)` in the dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    omega: BilinearMap,
}

impl SymplecticForm {
    /// `omega` is a `d × d → 1` bilinear map.
    pub fn new(omega: BilinearMap) -> Result<Self> {
        if omega.out_dim() != 1 || omega.left_dim() != omega.right_dim() {
            return Err(Error::DimensionMismatch("form must be a d x d -> 1 bilinear map".into()));
        }
        if !omega.is_antisymmetric() {
            return Err(Error::Precondition("form is not antisymmetric".into()));
        }
        Ok(SymplecticForm { omega })
    }

    pub fn dim(&self) -> usize {
        self.omega.left_dim()
    }

    pub fn form(&self) -> &BilinearMap {
        &self.omega
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        self.omega.apply(x, y)
    }

    /// Column `i` is `(ω(e_i, e_j))_j`.
    pub fn sharp(&self) -> LinearMap {
        let d = self.dim();
        let mut s = LinearMap::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                s.set(j, i, self.omega.get(i, j, 0).clone());
            }
        }
        s
    }
}

/// `ω(α(x), α(y)) = ω(x, y)` and `↺ ω(x∘y, α(z)) = 0` for `∘` both the
/// product and the bracket.
pub fn check_symplectic(fm: &HomFManifold, omega: &SymplecticForm) -> Result<CheckReport> {
    let d = fm.dim();
    if omega.dim() != d {
        return Err(Error::DimensionMismatch(format!("form is on a {}-dimensional space", omega.dim())));
    }
    let mut report = CheckReport::new("symplectic");
    report.over_tuples("twist invariance", d, 2, |t| {
        let (x, y) = (fm.basis(t[0]), fm.basis(t[1]));
        (omega.eval(&fm.alpha(&x), &fm.alpha(&y)), omega.eval(&x, &y))
    });
    let cyclic = |op: &dyn Fn(&Vector, &Vector) -> Vector, x: &Vector, y: &Vector, z: &Vector| {
        omega.eval(&op(x, y), &fm.alpha(z)) + omega.eval(&op(y, z), &fm.alpha(x)) + omega.eval(&op(z, x), &fm.alpha(y))
    };
    report.over_tuples("cyclic product", d, 3, |t| {
        let (x, y, z) = (fm.basis(t[0]), fm.basis(t[1]), fm.basis(t[2]));
        (cyclic(&|a, b| fm.mul(a, b), &x, &y, &z), Vector::zeros(1))
    });
    report.over_tuples("cyclic bracket", d, 3, |t| {
        let (x, y, z) = (fm.basis(t[0]), fm.basis(t[1]), fm.basis(t[2]));
        (cyclic(&|a, b| fm.br(a, b), &x, &y, &z), Vector::zeros(1))
    });
    if !omega.sharp().is_invertible() {
        report.note("form is degenerate: its sharp map is not invertible");
    }
    Ok(report)
}

/// Solves `ω(x⋄y, α(z)) = ω(α(y), x·z)` and `ω(x∗y, α(z)) = ω(α(y), [z,x])`
/// for every basis pair `(x, y)`.
pub fn pre_f_from_symplectic(fm: &HomFManifold, omega: &SymplecticForm) -> Result<HomPreF> {
    require(&check_symplectic(fm, omega)?, "form is not symplectic")?;
    require(&check_coherence(fm), "algebra is not coherent")?;
    let d = fm.dim();
    let scalar = |v: Vector| v[0].clone();
    // row k: w ↦ ω(w, α(e_k))
    let mut system = LinearMap::zeros(d, d);
    for k in 0..d {
        let ak = fm.alpha(&fm.basis(k));
        for l in 0..d {
            system.set(k, l, scalar(omega.eval(&fm.basis(l), &ak)));
        }
    }
    if !system.is_invertible() {
        return Err(Error::NotInvertible("sharp map composed with the twist".into()));
    }
    let solve = |rhs: Vector| -> Vector {
        let sol = system.solve(&rhs).expect("square system").expect("invertible system");
        sol.particular
    };
    let diamond = BilinearMap::from_fn(d, d, d, |i, j| {
        let (x, y) = (fm.basis(i), fm.basis(j));
        solve(Vector((0..d).map(|k| scalar(omega.eval(&fm.alpha(&y), &fm.mul(&x, &fm.basis(k))))).collect()))
    });
    let star = BilinearMap::from_fn(d, d, d, |i, j| {
        let (x, y) = (fm.basis(i), fm.basis(j));
        solve(Vector((0..d).map(|k| scalar(omega.eval(&fm.alpha(&y), &fm.br(&fm.basis(k), &x)))).collect()))
    });
    HomPreF::new(diamond, star, fm.twist().clone())
}

/// Whether `T(u⋄v)` and `T(u∗v)` depend only on `T(u)` and `T(v)`: both
/// vanish whenever one argument lies in `ker T`.
pub fn check_image_subalgebra(t: &LinearMap, pf: &HomPreF) -> CheckReport {
    let mut report = CheckReport::new("image-subalgebra");
    let kernel = t.kernel_basis();
    let m = pf.dim();
    for (name, op) in [("diamond", pf.diamond()), ("star", pf.star())] {
        for (ki, k) in kernel.iter().enumerate() {
            for j in 0..m {
                let v = pf.basis(j);
                report.expect_eq(&format!("{name} kills kernel on the left"), &[ki, j], t.apply(&op.apply(k, &v)), Vector::zeros(t.rows()));
                report.expect_eq(&format!("{name} kills kernel on the right"), &[ki, j], t.apply(&op.apply(&v, k)), Vector::zeros(t.rows()));
            }
        }
    }
    report
}

/// `T(u⋄v + v⋄u) = T(u)·T(v)` and `T(u∗v − v∗u) = [T(u), T(v)]`.
pub fn check_operator_morphism(t: &LinearMap, pf: &HomPreF, fm: &HomFManifold) -> CheckReport {
    let mut report = CheckReport::new("operator-morphism");
    let m = pf.dim();
    report.over_tuples("preserves product", m, 2, |i| {
        let (u, v) = (pf.basis(i[0]), pf.basis(i[1]));
        (t.apply(&pf.dot().apply(&u, &v)), fm.mul(&t.apply(&u), &t.apply(&v)))
    });
    report.over_tuples("preserves bracket", m, 2, |i| {
        let (u, v) = (pf.basis(i[0]), pf.basis(i[1]));
        (t.apply(&pf.bracket().apply(&u, &v)), fm.br(&t.apply(&u), &t.apply(&v)))
    });
    report
}
