//! Building new structures from old: derivation products, sub-adjacent
//! structures, Yau twists, direct sums and tensor products, and morphisms.

use crate::algebra::{check_comm_hom_assoc, check_f_admissible, check_pre_f_manifold, HomAlgebra, HomFManifold, HomPreF};
use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, LinearMap, Scalar, Vector};
use crate::report::CheckReport;

fn require(report: &CheckReport, what: &str) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} ({} failing instances)", report.failures)))
    }
}

/// `D∘α = α∘D` and `D(x·y) = D(x)·y + x·D(y)`.
pub fn check_derivation(alg: &HomAlgebra, d: &LinearMap) -> Result<CheckReport> {
    let n = alg.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!("derivation must be {n}x{n}")));
    }
    let a = alg.twist();
    let mut report = CheckReport::new("derivation");
    report.over_tuples("commutes with twist", n, 1, |t| {
        let x = alg.basis(t[0]);
        (d.apply(&a.apply(&x)), a.apply(&d.apply(&x)))
    });
    report.over_tuples("leibniz rule", n, 2, |t| {
        let (x, y) = (alg.basis(t[0]), alg.basis(t[1]));
        (d.apply(&alg.mul(&x, &y)), alg.mul(&d.apply(&x), &y) + alg.mul(&x, &d.apply(&y)))
    });
    Ok(report)
}

/// `x∗y = x·D(y) + λ·x·y` for a derivation `D` of a commutative
/// Hom-associative algebra.
pub fn derivation_product(alg: &HomAlgebra, d: &LinearMap, lambda: &Scalar) -> Result<HomAlgebra> {
    require(&check_comm_hom_assoc(alg), "base algebra is not commutative Hom-associative")?;
    require(&check_derivation(alg, d)?, "map is not a derivation commuting with the twist")?;
    let star = BilinearMap::from_fn(alg.dim(), alg.dim(), alg.dim(), |i, j| {
        let (x, y) = (alg.basis(i), alg.basis(j));
        alg.mul(&x, &d.apply(&y)) + alg.mul(&x, &y).scale(lambda)
    });
    HomAlgebra::new(star, alg.twist().clone())
}

pub fn commutator_bracket(star: &BilinearMap) -> BilinearMap {
    star.commutator()
}

pub fn symmetrized_product(diamond: &BilinearMap) -> BilinearMap {
    diamond.symmetrized()
}

/// `(A, ·, [x,y] = x∗y − y∗x, α)` from an F-manifold-admissible pair.
pub fn subadjacent_from_admissible(alg_dot: &HomAlgebra, alg_star: &HomAlgebra) -> Result<HomFManifold> {
    require(&check_f_admissible(alg_dot, alg_star)?, "pair is not F-manifold-admissible")?;
    HomFManifold::new(alg_dot.product().clone(), alg_star.product().commutator(), alg_dot.twist().clone())
}

/// `(A, x⋄y + y⋄x, x∗y − y∗x, α)` from a Hom-pre-F-manifold algebra.
pub fn subadjacent_from_pre_f(pf: &HomPreF) -> Result<HomFManifold> {
    require(&check_pre_f_manifold(pf), "input is not a Hom-pre-F-manifold algebra")?;
    HomFManifold::new(pf.dot().clone(), pf.bracket().clone(), pf.twist().clone())
}

/// Result of [`yau_twist`]. `unverified` is set when the input twist is not
/// the identity: the construction is then carried out but is only known to
/// give a Hom-F-manifold algebra after re-checking.
#[derive(Clone, Debug)]
pub struct YauTwist {
    pub algebra: HomFManifold,
    pub unverified: bool,
}

/// `x·' y = φ(x)·φ(y)`, `[x,y]' = [φ(x),φ(y)]`, `α' = φ∘α` for a
/// self-morphism `φ`.
pub fn yau_twist(fm: &HomFManifold, phi: &LinearMap) -> Result<YauTwist> {
    require(&check_morphism(fm, fm, &Morphism::new(phi.clone()))?, "twisting map is not a self-morphism")?;
    let id = LinearMap::identity(fm.dim());
    let algebra = HomFManifold::new(fm.dot().transport(phi, phi, &id), fm.bracket().transport(phi, phi, &id), phi.compose(fm.twist()))?;
    Ok(YauTwist { algebra, unverified: *fm.twist() != id })
}

/// Componentwise structure on `A ⊕ B`.
pub fn direct_sum(a: &HomFManifold, b: &HomFManifold) -> Result<HomFManifold> {
    let (m, n) = (a.dim(), b.dim());
    let block = |p: &BilinearMap, q: &BilinearMap| {
        BilinearMap::from_fn(m + n, m + n, m + n, |i, j| match (i < m, j < m) {
            (true, true) => p.basis_product(i, j).concat(&Vector::zeros(n)),
            (false, false) => Vector::zeros(m).concat(&q.basis_product(i - m, j - m)),
            _ => Vector::zeros(m + n),
        })
    };
    HomFManifold::new(block(a.dot(), b.dot()), block(a.bracket(), b.bracket()), a.twist().direct_sum(b.twist()))
}

/// Structure on `A ⊗ B` with basis `e_i ⊗ f_j` at index `i·dim B + j`:
/// `(x1⊗x2)·(y1⊗y2) = (x1·y1)⊗(x2·y2)`,
/// `[x1⊗x2, y1⊗y2] = [x1,y1]⊗(x2·y2) + (x1·y1)⊗[x2,y2]`, twist `α⊗β`.
/// Not a Hom-F-manifold algebra in general; check the result.
pub fn tensor_product(a: &HomFManifold, b: &HomFManifold) -> Result<HomFManifold> {
    let (m, n) = (a.dim(), b.dim());
    let kron = |u: &Vector, v: &Vector| {
        let mut out = Vector::zeros(m * n);
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                out[i * n + j] = ui * vj;
            }
        }
        out
    };
    let dot = BilinearMap::from_fn(m * n, m * n, m * n, |p, q| {
        kron(&a.dot().basis_product(p / n, q / n), &b.dot().basis_product(p % n, q % n))
    });
    let bracket = BilinearMap::from_fn(m * n, m * n, m * n, |p, q| {
        let (i1, i2, j1, j2) = (p / n, p % n, q / n, q % n);
        kron(&a.bracket().basis_product(i1, j1), &b.dot().basis_product(i2, j2))
            + kron(&a.dot().basis_product(i1, j1), &b.bracket().basis_product(i2, j2))
    });
    HomFManifold::new(dot, bracket, a.twist().kronecker(b.twist()))
}

/// A linear map between two Hom-F-manifold algebras. A weak morphism only
/// has to preserve the bracket and intertwine the twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub map: LinearMap,
    pub weak: bool,
}

impl Morphism {
    pub fn new(map: LinearMap) -> Self {
        Morphism { map, weak: false }
    }

    pub fn weak(map: LinearMap) -> Self {
        Morphism { map, weak: true }
    }
}

pub fn check_morphism(src: &HomFManifold, dst: &HomFManifold, m: &Morphism) -> Result<CheckReport> {
    let f = &m.map;
    if f.cols() != src.dim() || f.rows() != dst.dim() {
        return Err(Error::DimensionMismatch(format!("morphism must be {}x{}", dst.dim(), src.dim())));
    }
    let mut report = CheckReport::new(if m.weak { "weak-morphism" } else { "morphism" });
    report.over_tuples("intertwines twists", src.dim(), 1, |t| {
        let x = src.basis(t[0]);
        (f.apply(&src.alpha(&x)), dst.alpha(&f.apply(&x)))
    });
    if !m.weak {
        report.over_tuples("preserves product", src.dim(), 2, |t| {
            let (x, y) = (src.basis(t[0]), src.basis(t[1]));
            (f.apply(&src.mul(&x, &y)), dst.mul(&f.apply(&x), &f.apply(&y)))
        });
    }
    report.over_tuples("preserves bracket", src.dim(), 2, |t| {
        let (x, y) = (src.basis(t[0]), src.basis(t[1]));
        (f.apply(&src.br(&x, &y)), dst.br(&f.apply(&x), &f.apply(&y)))
    });
    Ok(report)
}
