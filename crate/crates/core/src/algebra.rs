//! Structure-constant models of the Hom-algebra species and exhaustive
//! basis-enumeration checkers for their axioms.
//!
//! Every identity is multilinear, so checking it on all basis tuples is
//! equivalent to checking it on all vectors. Checkers never stop at the
//! first failure; each failing basis tuple becomes a [`Witness`](crate::report::Witness).

use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, LinearMap, MultiTensor, Vector};
use crate::report::CheckReport;

fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

fn check_shapes(dim: usize, maps: &[(&str, &BilinearMap)], twist: &LinearMap) -> Result<()> {
    for (name, m) in maps {
        if !m.is_square_on(dim) {
            return Err(Error::DimensionMismatch(format!(
                "{name} is {}x{}->{}, expected a product on a {dim}-dimensional space",
                m.left_dim(),
                m.right_dim(),
                m.out_dim()
            )));
        }
    }
    if twist.rows() != dim || twist.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "twist is {}x{}, expected {dim}x{dim}",
            twist.rows(),
            twist.cols()
        )));
    }
    Ok(())
}

/// A vector space with one bilinear product and a twist map `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    labels: Vec<String>,
    product: BilinearMap,
    twist: LinearMap,
}

impl HomAlgebra {
    pub fn new(product: BilinearMap, twist: LinearMap) -> Result<Self> {
        let dim = twist.rows();
        check_shapes(dim, &[("product", &product)], &twist)?;
        Ok(HomAlgebra { labels: default_labels(dim), product, twist })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch("wrong number of basis labels".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.twist.rows()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product(&self) -> &BilinearMap {
        &self.product
    }

    pub fn twist(&self) -> &LinearMap {
        &self.twist
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.product.apply(x, y)
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    fn check_vectors(&self, vs: &[&Vector]) -> Result<()> {
        match vs.iter().find(|v| v.dim() != self.dim()) {
            Some(v) => Err(Error::DimensionMismatch(format!(
                "vector of length {} in a {}-dimensional algebra",
                v.dim(),
                self.dim()
            ))),
            None => Ok(()),
        }
    }

    fn associator_raw(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let a = &self.twist;
        &self.mul(&self.mul(x, y), &a.apply(z)) - &self.mul(&a.apply(x), &self.mul(y, z))
    }
}

/// `as_α(x,y,z) = (x·y)·α(z) − α(x)·(y·z)`.
pub fn hom_associator(alg: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    alg.check_vectors(&[x, y, z])?;
    Ok(alg.associator_raw(x, y, z))
}

fn check_symmetry(alg: &HomAlgebra, report: &mut CheckReport, sign: i64) {
    let identity = if sign > 0 { "commutativity" } else { "skew-symmetry" };
    report.over_tuples(identity, alg.dim(), 2, |t| {
        let l = alg.product.basis_product(t[0], t[1]);
        let r = alg.product.basis_product(t[1], t[0]);
        (l, if sign > 0 { r } else { -r })
    });
}

/// Commutativity plus `(x·y)·α(z) = α(x)·(y·z)` on all basis triples.
pub fn check_comm_hom_assoc(alg: &HomAlgebra) -> CheckReport {
    let mut report = CheckReport::new("comm-hom-assoc");
    check_symmetry(alg, &mut report, 1);
    let a = &alg.twist;
    report.over_tuples("hom-associativity", alg.dim(), 3, |t| {
        let (x, y, z) = (alg.basis(t[0]), alg.basis(t[1]), alg.basis(t[2]));
        let lhs = alg.mul(&alg.mul(&x, &y), &a.apply(&z));
        let rhs = alg.mul(&a.apply(&x), &alg.mul(&y, &z));
        (lhs, rhs)
    });
    report
}

/// Skew-symmetry plus the cyclic Hom-Jacobi sum `↺ [α(x),[y,z]] = 0`.
pub fn check_hom_lie(alg: &HomAlgebra) -> CheckReport {
    let mut report = CheckReport::new("hom-lie");
    check_symmetry(alg, &mut report, -1);
    let a = &alg.twist;
    report.over_tuples("hom-jacobi", alg.dim(), 3, |t| {
        let (x, y, z) = (alg.basis(t[0]), alg.basis(t[1]), alg.basis(t[2]));
        let br = |u: &Vector, v: &Vector| alg.mul(u, v);
        let sum = br(&a.apply(&x), &br(&y, &z)) + br(&a.apply(&y), &br(&z, &x)) + br(&a.apply(&z), &br(&x, &y));
        (sum, Vector::zeros(alg.dim()))
    });
    report
}

/// `α(x)⋄(y⋄z) = (y⋄x)⋄α(z) + (x⋄y)⋄α(z)`.
pub fn check_hom_zinbiel(alg: &HomAlgebra) -> CheckReport {
    let mut report = CheckReport::new("hom-zinbiel");
    let a = &alg.twist;
    report.over_tuples("hom-zinbiel", alg.dim(), 3, |t| {
        let (x, y, z) = (alg.basis(t[0]), alg.basis(t[1]), alg.basis(t[2]));
        let lhs = alg.mul(&a.apply(&x), &alg.mul(&y, &z));
        let rhs = alg.mul(&alg.mul(&y, &x), &a.apply(&z)) + alg.mul(&alg.mul(&x, &y), &a.apply(&z));
        (lhs, rhs)
    });
    report
}

/// `as_α(x,y,z) = as_α(y,x,z)`.
pub fn check_hom_pre_lie(alg: &HomAlgebra) -> CheckReport {
    let mut report = CheckReport::new("hom-pre-lie");
    report.over_tuples("left-symmetric associator", alg.dim(), 3, |t| {
        let (x, y, z) = (alg.basis(t[0]), alg.basis(t[1]), alg.basis(t[2]));
        (alg.associator_raw(&x, &y, &z), alg.associator_raw(&y, &x, &z))
    });
    report
}

/// Cyclic sum of `as_α(x,y,z) − as_α(y,x,z)` vanishes.
pub fn check_hom_lie_admissible(alg: &HomAlgebra) -> CheckReport {
    let mut report = CheckReport::new("hom-lie-admissible");
    report.over_tuples("cyclic associator sum", alg.dim(), 3, |t| {
        let (x, y, z) = (alg.basis(t[0]), alg.basis(t[1]), alg.basis(t[2]));
        let part = |p: &Vector, q: &Vector, r: &Vector| &alg.associator_raw(p, q, r) - &alg.associator_raw(q, p, r);
        (part(&x, &y, &z) + part(&y, &z, &x) + part(&z, &x, &y), Vector::zeros(alg.dim()))
    });
    report
}

/// Commutative product `·`, skew bracket `[·,·]` and twist `α` on one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomFManifold {
    labels: Vec<String>,
    dot: BilinearMap,
    bracket: BilinearMap,
    twist: LinearMap,
}

impl HomFManifold {
    /// Rejects a non-symmetric `dot` or a non-skew `bracket`.
    pub fn new(dot: BilinearMap, bracket: BilinearMap, twist: LinearMap) -> Result<Self> {
        let dim = twist.rows();
        check_shapes(dim, &[("dot", &dot), ("bracket", &bracket)], &twist)?;
        if !dot.is_symmetric() {
            return Err(Error::Precondition("dot product is not symmetric".into()));
        }
        if !bracket.is_antisymmetric() {
            return Err(Error::Precondition("bracket is not skew-symmetric".into()));
        }
        Ok(HomFManifold { labels: default_labels(dim), dot, bracket, twist })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch("wrong number of basis labels".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.twist.rows()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dot(&self) -> &BilinearMap {
        &self.dot
    }

    pub fn bracket(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn twist(&self) -> &LinearMap {
        &self.twist
    }

    pub fn dot_algebra(&self) -> HomAlgebra {
        HomAlgebra { labels: self.labels.clone(), product: self.dot.clone(), twist: self.twist.clone() }
    }

    pub fn bracket_algebra(&self) -> HomAlgebra {
        HomAlgebra { labels: self.labels.clone(), product: self.bracket.clone(), twist: self.twist.clone() }
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.dot.apply(x, y)
    }

    pub fn br(&self, x: &Vector, y: &Vector) -> Vector {
        self.bracket.apply(x, y)
    }

    pub fn alpha(&self, x: &Vector) -> Vector {
        self.twist.apply(x)
    }

    pub fn alpha2(&self, x: &Vector) -> Vector {
        self.twist.apply(&self.twist.apply(x))
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// `[α(x), y·z] − [x,y]·α(z) − α(y)·[x,z]`, without dimension checks.
    pub fn leibniz(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.br(&self.alpha(x), &self.mul(y, z)) - self.mul(&self.br(x, y), &self.alpha(z)) - self.mul(&self.alpha(y), &self.br(x, z))
    }

    /// The Leibnizator on all basis triples, as a tensor `[d, d, d, d]`.
    pub fn leibniz_tensor(&self) -> MultiTensor {
        let d = self.dim();
        let mut t = MultiTensor::zeros(vec![d, d, d, d]);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    t.set_fiber(&[i, j, k], &self.leibniz(&self.basis(i), &self.basis(j), &self.basis(k)));
                }
            }
        }
        t
    }
}

/// Hom-Leibnizator `L(x,y,z) = [α(x),y·z] − [x,y]·α(z) − α(y)·[x,z]`.
pub fn leibnizator(fm: &HomFManifold, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    if [x, y, z].iter().any(|v| v.dim() != fm.dim()) {
        return Err(Error::DimensionMismatch("Leibnizator argument of the wrong length".into()));
    }
    Ok(fm.leibniz(x, y, z))
}

/// `L(x·y, α(z), α(w)) = α²(x)·L(y,z,w) + α²(y)·L(x,z,w)` on all basis 4-tuples.
pub fn check_hertling_manin(fm: &HomFManifold) -> CheckReport {
    let mut report = CheckReport::new("hertling-manin");
    let lt = fm.leibniz_tensor();
    let e: Vec<Vector> = (0..fm.dim()).map(|i| fm.basis(i)).collect();
    let ae: Vec<Vector> = e.iter().map(|v| fm.alpha(v)).collect();
    let a2e: Vec<Vector> = e.iter().map(|v| fm.alpha2(v)).collect();
    report.over_tuples("hom-hertling-manin", fm.dim(), 4, |t| {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let xy = fm.mul(&e[x], &e[y]);
        let lhs = lt.contract(&[&xy, &ae[z], &ae[w]]);
        let rhs = fm.mul(&a2e[x], &lt.fiber(&[y, z, w])) + fm.mul(&a2e[y], &lt.fiber(&[x, z, w]));
        (lhs, rhs)
    });
    report
}

pub fn check_hom_f_manifold(fm: &HomFManifold) -> CheckReport {
    let mut report = CheckReport::new("hom-f-manifold");
    report.absorb(check_comm_hom_assoc(&fm.dot_algebra()));
    report.absorb(check_hom_lie(&fm.bracket_algebra()));
    report.absorb(check_hertling_manin(fm));
    report
}

/// Whether the Leibnizator vanishes on every basis triple, i.e. the
/// bracket acts by (twisted) derivations of the product.
pub fn leibnizator_vanishes(fm: &HomFManifold) -> bool {
    fm.leibniz_tensor().is_zero()
}

/// A Hom-Poisson algebra: a Hom-F-manifold algebra whose Leibnizator vanishes.
pub fn is_hom_poisson(fm: &HomFManifold) -> bool {
    leibnizator_vanishes(fm)
        && check_comm_hom_assoc(&fm.dot_algebra()).passed
        && check_hom_lie(&fm.bracket_algebra()).passed
}

/// Commutative Hom-associative `·`, Hom-Lie-admissible `∗`, and
/// `α(x)∗(y·z) − (x∗y)·α(z) − α(y)·(x∗z)` symmetric in `x, y`.
pub fn check_f_admissible(alg_dot: &HomAlgebra, alg_star: &HomAlgebra) -> Result<CheckReport> {
    if alg_dot.dim() != alg_star.dim() || alg_dot.twist != alg_star.twist {
        return Err(Error::Precondition("dot and star must share dimension and twist".into()));
    }
    let mut report = CheckReport::new("f-admissible");
    report.absorb(check_comm_hom_assoc(alg_dot));
    report.absorb(check_hom_lie_admissible(alg_star));
    let a = &alg_dot.twist;
    let dot = |u: &Vector, v: &Vector| alg_dot.mul(u, v);
    let star = |u: &Vector, v: &Vector| alg_star.mul(u, v);
    let side = |x: &Vector, y: &Vector, z: &Vector| {
        star(&a.apply(x), &dot(y, z)) - dot(&star(x, y), &a.apply(z)) - dot(&a.apply(y), &star(x, z))
    };
    report.over_tuples("admissible compatibility", alg_dot.dim(), 3, |t| {
        let (x, y, z) = (alg_dot.basis(t[0]), alg_dot.basis(t[1]), alg_dot.basis(t[2]));
        (side(&x, &y, &z), side(&y, &x, &z))
    });
    Ok(report)
}

/// `(A, ·, ∗, α)` is a Hom-pre-Lie commutative algebra: `·` commutative
/// Hom-associative, `∗` Hom-pre-Lie and
/// `α(x)∗(y·z) − (x∗y)·α(z) − α(y)·(x∗z) = 0`.
pub fn check_pre_lie_commutative(alg_dot: &HomAlgebra, alg_star: &HomAlgebra) -> Result<CheckReport> {
    if alg_dot.dim() != alg_star.dim() || alg_dot.twist != alg_star.twist {
        return Err(Error::Precondition("dot and star must share dimension and twist".into()));
    }
    let mut report = CheckReport::new("pre-lie-commutative");
    report.absorb(check_comm_hom_assoc(alg_dot));
    report.absorb(check_hom_pre_lie(alg_star));
    let a = &alg_dot.twist;
    report.over_tuples("derivation-like compatibility", alg_dot.dim(), 3, |t| {
        let (x, y, z) = (alg_dot.basis(t[0]), alg_dot.basis(t[1]), alg_dot.basis(t[2]));
        let lhs = alg_star.mul(&a.apply(&x), &alg_dot.mul(&y, &z))
            - alg_dot.mul(&alg_star.mul(&x, &y), &a.apply(&z))
            - alg_dot.mul(&a.apply(&y), &alg_star.mul(&x, &z));
        (lhs, Vector::zeros(alg_dot.dim()))
    });
    Ok(report)
}

/// Two products `⋄`, `∗` with a shared twist. Its sub-adjacent operations
/// are `x·y = x⋄y + y⋄x` and `[x,y] = x∗y − y∗x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPreF {
    labels: Vec<String>,
    diamond: BilinearMap,
    star: BilinearMap,
    twist: LinearMap,
    dot: BilinearMap,
    bracket: BilinearMap,
}

impl HomPreF {
    pub fn new(diamond: BilinearMap, star: BilinearMap, twist: LinearMap) -> Result<Self> {
        let dim = twist.rows();
        check_shapes(dim, &[("diamond", &diamond), ("star", &star)], &twist)?;
        let dot = diamond.symmetrized();
        let bracket = star.commutator();
        Ok(HomPreF { labels: default_labels(dim), diamond, star, twist, dot, bracket })
    }

    pub fn dim(&self) -> usize {
        self.twist.rows()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch("wrong number of basis labels".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn diamond(&self) -> &BilinearMap {
        &self.diamond
    }

    pub fn star(&self) -> &BilinearMap {
        &self.star
    }

    pub fn twist(&self) -> &LinearMap {
        &self.twist
    }

    /// Symmetrized `⋄`.
    pub fn dot(&self) -> &BilinearMap {
        &self.dot
    }

    /// Commutator of `∗`.
    pub fn bracket(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn diamond_algebra(&self) -> HomAlgebra {
        HomAlgebra { labels: self.labels.clone(), product: self.diamond.clone(), twist: self.twist.clone() }
    }

    pub fn star_algebra(&self) -> HomAlgebra {
        HomAlgebra { labels: self.labels.clone(), product: self.star.clone(), twist: self.twist.clone() }
    }

    fn a(&self, x: &Vector) -> Vector {
        self.twist.apply(x)
    }

    fn dia(&self, x: &Vector, y: &Vector) -> Vector {
        self.diamond.apply(x, y)
    }

    fn st(&self, x: &Vector, y: &Vector) -> Vector {
        self.star.apply(x, y)
    }

    /// `F1(x,y,z) = α(x)∗(y⋄z) − α(y)⋄(x∗z) − [x,y]⋄α(z)`.
    pub fn f1(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.st(&self.a(x), &self.dia(y, z)) - self.dia(&self.a(y), &self.st(x, z)) - self.dia(&self.bracket.apply(x, y), &self.a(z))
    }

    /// `F2(x,y,z) = α(x)⋄(y∗z) + α(y)⋄(x∗z) − (x·y)∗α(z)`.
    pub fn f2(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.dia(&self.a(x), &self.st(y, z)) + self.dia(&self.a(y), &self.st(x, z)) - self.st(&self.dot.apply(x, y), &self.a(z))
    }

    /// Leibnizator of the sub-adjacent `(·, [·,·], α)`.
    pub fn leibniz(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let (dot, br) = (&self.dot, &self.bracket);
        br.apply(&self.a(x), &dot.apply(y, z)) - dot.apply(&br.apply(x, y), &self.a(z)) - dot.apply(&self.a(y), &br.apply(x, z))
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }
}

/// Hom-Zinbiel `⋄`, Hom-pre-Lie `∗`, and the two compatibility identities
/// `F1(x·y,α(z),α(w)) = α²(x)⋄F1(y,z,w) + α²(y)⋄F1(x,z,w)` and
/// `L(x,y,z)⋄α²(w) = F2(α(y),α(z),x⋄w) − α²(x)⋄F2(y,z,w)`.
pub fn check_pre_f_manifold(pf: &HomPreF) -> CheckReport {
    let mut report = CheckReport::new("pre-f-manifold");
    report.absorb(check_hom_zinbiel(&pf.diamond_algebra()));
    report.absorb(check_hom_pre_lie(&pf.star_algebra()));
    let d = pf.dim();
    let e: Vec<Vector> = (0..d).map(|i| pf.basis(i)).collect();
    let ae: Vec<Vector> = e.iter().map(|v| pf.a(v)).collect();
    let a2e: Vec<Vector> = ae.iter().map(|v| pf.a(v)).collect();
    report.over_tuples("pre-hertling-manin F1", d, 4, |t| {
        let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
        let lhs = pf.f1(&pf.dot.apply(x, y), &ae[t[2]], &ae[t[3]]);
        let rhs = pf.dia(&a2e[t[0]], &pf.f1(y, z, w)) + pf.dia(&a2e[t[1]], &pf.f1(x, z, w));
        (lhs, rhs)
    });
    report.over_tuples("pre-hertling-manin F2", d, 4, |t| {
        let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
        let lhs = pf.dia(&pf.leibniz(x, y, z), &a2e[t[3]]);
        let rhs = pf.f2(&ae[t[1]], &ae[t[2]], &pf.dia(x, w)) - pf.dia(&a2e[t[0]], &pf.f2(y, z, w));
        (lhs, rhs)
    });
    report
}

/// `L(x,y,z) = F1(x,y,z) + F1(x,z,y) + F2(y,z,x)` on all basis triples; an
/// identity for arbitrary `⋄`, `∗`.
pub fn check_leibniz_decomposition(pf: &HomPreF) -> CheckReport {
    let mut report = CheckReport::new("leibniz-decomposition");
    report.over_tuples("L = F1 + F1(swap) + F2(cycle)", pf.dim(), 3, |t| {
        let (x, y, z) = (pf.basis(t[0]), pf.basis(t[1]), pf.basis(t[2]));
        let rhs = pf.f1(&x, &y, &z) + pf.f1(&x, &z, &y) + pf.f2(&y, &z, &x);
        (pf.leibniz(&x, &y, &z), rhs)
    });
    report
}
