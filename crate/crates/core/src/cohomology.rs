//! The cochain complex `C^n(A;V) = Hom(∧^{n−1}A ⊗ A, V)` of a Hom-pre-Lie
//! algebra with coefficients in a representation, its coboundary, and
//! exact cohomology dimensions.

use std::collections::HashMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{mixed_tuples, ratio, tuples, LinearMap, MultiTensor, Scalar, Vector};
use crate::report::CheckReport;
use crate::representations::{check_rep_hom_pre_lie, Representation};

/// A degree-`n` cochain: `n` algebra slots and one module output slot,
/// antisymmetric in the first `n − 1` slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    tensor: MultiTensor,
}

/// Strictly increasing tuples of length `len` over `0..dim`.
fn increasing(dim: usize, len: usize) -> Vec<Vec<usize>> {
    tuples(dim, len).filter(|t| t.windows(2).all(|w| w[0] < w[1])).collect()
}

/// Sorts `t` in place and returns the sign of the sorting permutation, or
/// `None` if two entries coincide.
fn sort_with_sign(t: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl Cochain {
    /// Wraps a tensor with dims `[d; n] ++ [m]`, rejecting tensors that are
    /// not antisymmetric in the first `n − 1` slots.
    pub fn new(tensor: MultiTensor) -> Result<Self> {
        let dims = tensor.dims();
        if dims.len() < 2 {
            return Err(Error::InvalidCochain("cochains have degree at least 1".into()));
        }
        let d = dims[0];
        if dims[..dims.len() - 1].iter().any(|&x| x != d) {
            return Err(Error::InvalidCochain("all argument slots must have the algebra dimension".into()));
        }
        let n = dims.len() - 1;
        if n >= 3 {
            for t in tuples(d, n) {
                for s in 0..n - 2 {
                    let mut u = t.clone();
                    u.swap(s, s + 1);
                    if tensor.fiber(&t) != -tensor.fiber(&u) {
                        let at: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
                        return Err(Error::InvalidCochain(format!(
                            "not antisymmetric in slots {} and {} at ({})",
                            s + 1,
                            s + 2,
                            at.join(",")
                        )));
                    }
                }
            }
        }
        Ok(Cochain { tensor })
    }

    pub fn zero(degree: usize, alg_dim: usize, module_dim: usize) -> Self {
        let mut dims = vec![alg_dim; degree];
        dims.push(module_dim);
        Cochain { tensor: MultiTensor::zeros(dims) }
    }

    /// A degree-1 cochain from a linear map `A → V`.
    pub fn from_linear(map: &LinearMap) -> Self {
        let mut c = Cochain::zero(1, map.cols(), map.rows());
        for j in 0..map.cols() {
            c.tensor.set_fiber(&[j], &map.column(j));
        }
        c
    }

    /// A degree-2 cochain from a bilinear map `A ⊗ A → V`.
    pub fn from_bilinear(map: &crate::linalg::BilinearMap) -> Self {
        let mut c = Cochain::zero(2, map.left_dim(), map.out_dim());
        for i in 0..map.left_dim() {
            for j in 0..map.right_dim() {
                c.tensor.set_fiber(&[i, j], &map.basis_product(i, j));
            }
        }
        c
    }

    pub fn to_bilinear(&self) -> Option<crate::linalg::BilinearMap> {
        if self.degree() != 2 {
            return None;
        }
        let d = self.alg_dim();
        Some(crate::linalg::BilinearMap::from_fn(d, d, self.module_dim(), |i, j| self.tensor.fiber(&[i, j])))
    }

    pub fn degree(&self) -> usize {
        self.tensor.arity() - 1
    }

    pub fn alg_dim(&self) -> usize {
        self.tensor.dims()[0]
    }

    pub fn module_dim(&self) -> usize {
        *self.tensor.dims().last().unwrap()
    }

    pub fn tensor(&self) -> &MultiTensor {
        &self.tensor
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    /// Value on a tuple of basis indices.
    pub fn at(&self, args: &[usize]) -> Vector {
        self.tensor.fiber(args)
    }

    pub fn eval(&self, args: &[&Vector]) -> Vector {
        self.tensor.contract(args)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        Cochain { tensor: self.tensor.add(&other.tensor) }
    }

    pub fn scale(&self, s: &Scalar) -> Cochain {
        Cochain { tensor: self.tensor.scale(s) }
    }

    /// Number of independent coordinates: `C(d, n−1) · d · m`.
    pub fn space_dim(degree: usize, alg_dim: usize, module_dim: usize) -> usize {
        increasing(alg_dim, degree - 1).len() * alg_dim * module_dim
    }

    /// Coordinates in the basis indexed by `(i1 < … < i_{n−1}; j; k)`.
    pub fn coords(&self) -> Vector {
        let (n, d, m) = (self.degree(), self.alg_dim(), self.module_dim());
        let mut out = Vec::with_capacity(Cochain::space_dim(n, d, m));
        for head in increasing(d, n - 1) {
            for j in 0..d {
                let mut t = head.clone();
                t.push(j);
                out.extend(self.tensor.fiber(&t).into_inner());
            }
        }
        Vector(out)
    }

    /// Inverse of [`coords`](Self::coords); fills in the antisymmetric
    /// images of each coordinate.
    pub fn from_coords(degree: usize, alg_dim: usize, module_dim: usize, coords: &Vector) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidCochain("cochains have degree at least 1".into()));
        }
        if coords.dim() != Cochain::space_dim(degree, alg_dim, module_dim) {
            return Err(Error::DimensionMismatch("wrong number of cochain coordinates".into()));
        }
        let rank: HashMap<Vec<usize>, usize> = increasing(alg_dim, degree - 1).into_iter().enumerate().map(|(i, h)| (h, i)).collect();
        let mut c = Cochain::zero(degree, alg_dim, module_dim);
        for t in tuples(alg_dim, degree) {
            let mut head = t[..degree - 1].to_vec();
            let Some(sign) = sort_with_sign(&mut head) else { continue };
            let base = (rank[&head] * alg_dim + t[degree - 1]) * module_dim;
            let v = Vector(coords.0[base..base + module_dim].to_vec());
            c.tensor.set_fiber(&t, &if sign > 0 { v } else { -v });
        }
        Ok(c)
    }
}

/// A Hom-pre-Lie algebra `(A, ∗, α)` with invertible `α` and a
/// representation `(V; ρ, μ, φ)` of it.
#[derive(Clone, Debug)]
pub struct ComplexContext {
    alg: HomAlgebra,
    rep: Representation,
    alpha_inv: LinearMap,
    alpha_inv2: LinearMap,
}

impl ComplexContext {
    pub fn new(alg: HomAlgebra, rep: Representation) -> Result<Self> {
        let alpha_inv = alg.twist().inverse_named("algebra twist")?;
        rep.require_rho()?;
        rep.require_mu()?;
        let r = check_rep_hom_pre_lie(&alg, &rep)?;
        if !r.passed {
            return Err(Error::Precondition(format!(
                "not a representation of the Hom-pre-Lie algebra ({} failing instances)",
                r.failures
            )));
        }
        let alpha_inv2 = alpha_inv.compose(&alpha_inv);
        Ok(ComplexContext { alg, rep, alpha_inv, alpha_inv2 })
    }

    /// The adjoint context `(A; L∗, R∗, α)`.
    pub fn adjoint(alg: HomAlgebra) -> Result<Self> {
        let rep = Representation::adjoint_pre_lie(&alg);
        ComplexContext::new(alg, rep)
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.alg
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    fn dims(&self) -> (usize, usize) {
        (self.alg.dim(), self.rep.module_dim())
    }
}

/// `t` with `a` applied in each of its first `n` slots.
fn pulled_back(t: &MultiTensor, a: &LinearMap, n: usize) -> MultiTensor {
    let mut cur = t.clone();
    for slot in 0..n {
        let mut next = MultiTensor::zeros(cur.dims().to_vec());
        for idx in mixed_tuples(cur.dims()) {
            let mut src = idx.clone();
            let mut acc = Scalar::default();
            for k in 0..a.rows() {
                let c = a.get(k, idx[slot]);
                if c.is_zero() {
                    continue;
                }
                src[slot] = k;
                let v = cur.get(&src);
                if !v.is_zero() {
                    acc += c * v;
                }
            }
            next.set(&idx, acc);
        }
        cur = next;
    }
    cur
}

/// `Σ_k y_k g(…, e_k, …)` with `e_k` in `slot` and the other slots from `idx`.
fn contract_slot(g: &MultiTensor, idx: &mut [usize], slot: usize, y: &Vector) -> Vector {
    let mut acc = Vector::zeros(*g.dims().last().expect("cochain has an output slot"));
    for (k, c) in y.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        idx[slot] = k;
        acc += &g.fiber(idx).scale(c);
    }
    acc
}

/// `(∂f)(x_1, …, x_{n+1})`, the sum of
/// `(−1)^{i+1} ρ(x_i) f(α⁻¹x_1, …, \hat{i}, …, α⁻¹x_{n+1})`,
/// `(−1)^{i+1} μ(x_{n+1}) f(α⁻¹x_1, …, \hat{i}, …, α⁻¹x_n, α⁻¹x_i)`,
/// `−(−1)^{i+1} φ f(α⁻¹x_1, …, \hat{i}, …, α⁻¹x_n, α⁻²x_i ∗ α⁻²x_{n+1})` for `i ≤ n`, and
/// `(−1)^{i+j} φ f([α⁻²x_i, α⁻²x_j], α⁻¹x_1, …, \hat{i}, \hat{j}, …, α⁻¹x_{n+1})` for `i < j ≤ n`.
pub fn coboundary(ctx: &ComplexContext, f: &Cochain) -> Result<Cochain> {
    let (d, m) = ctx.dims();
    if f.alg_dim() != d || f.module_dim() != m {
        return Err(Error::DimensionMismatch("cochain does not match the context".into()));
    }
    let n = f.degree();
    let alg = &ctx.alg;
    let rep = &ctx.rep;
    let phi = rep.phi();
    let alpha = alg.twist();
    let e: Vec<Vector> = (0..d).map(|i| alg.basis(i)).collect();
    // g(x_1, …, x_n) = f(α⁻¹x_1, …, α⁻¹x_n), so f(…, y) = g(…, α(y))
    let g = pulled_back(f.tensor(), &ctx.alpha_inv, n);
    let a2: Vec<Vector> = e.iter().map(|x| ctx.alpha_inv2.apply(x)).collect();
    let star: Vec<Vec<Vector>> = (0..d).map(|i| (0..d).map(|j| alpha.apply(&alg.mul(&a2[i], &a2[j]))).collect()).collect();
    let bracket: Vec<Vec<Vector>> = (0..d)
        .map(|i| (0..d).map(|j| &star[i][j] - &star[j][i]).collect())
        .collect();

    let mut out = Cochain::zero(n + 1, d, m);
    let mut idx = vec![0usize; n];
    for t in tuples(d, n + 1) {
        let mut acc = Vector::zeros(m);
        for i in 0..n {
            let mut k = 0;
            for (slot, &ti) in t.iter().enumerate() {
                if slot != i {
                    idx[k] = ti;
                    k += 1;
                }
            }
            let v = rep.act_rho(&e[t[i]], &g.fiber(&idx));
            idx[n - 1] = t[i];
            let w = rep.act_mu(&e[t[n]], &g.fiber(&idx));
            let s = phi.apply(&contract_slot(&g, &mut idx, n - 1, &star[t[i]][t[n]]));
            let term = v + w - s;
            acc = if i % 2 == 0 { acc + term } else { acc - term };
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut k = 1;
                for (slot, &ti) in t.iter().enumerate() {
                    if slot != i && slot != j {
                        idx[k] = ti;
                        k += 1;
                    }
                }
                let term = phi.apply(&contract_slot(&g, &mut idx, 0, &bracket[t[i]][t[j]]));
                acc = if (i + j) % 2 == 0 { acc + term } else { acc - term };
            }
        }
        out.tensor.set_fiber(&t, &acc);
    }
    // the complex is only well defined if ∂f lands in C^{n+1}
    Cochain::new(out.tensor).map_err(|e| Error::InvalidCochain(format!("coboundary left the cochain space: {e}")))
}

/// `∂(∂f) = 0` on every basis tuple.
pub fn check_d_squared(ctx: &ComplexContext, f: &Cochain) -> Result<CheckReport> {
    let dd = coboundary(ctx, &coboundary(ctx, f)?)?;
    let (d, m) = ctx.dims();
    let mut report = CheckReport::new("d-squared");
    report.over_tuples("d(df) = 0", d, f.degree() + 2, |t| (dd.at(t), Vector::zeros(m)));
    Ok(report)
}

/// Matrix of `∂: C^n → C^{n+1}` in the coordinate bases of
/// [`Cochain::coords`].
pub fn coboundary_matrix(ctx: &ComplexContext, degree: usize) -> Result<LinearMap> {
    if degree == 0 {
        return Err(Error::Precondition("cochain degree must be at least 1".into()));
    }
    let (d, m) = ctx.dims();
    let cols = Cochain::space_dim(degree, d, m);
    let rows = Cochain::space_dim(degree + 1, d, m);
    let mut columns = Vec::with_capacity(cols);
    for c in 0..cols {
        let basis = Cochain::from_coords(degree, d, m, &Vector::basis(cols, c))?;
        columns.push(coboundary(ctx, &basis)?.coords());
    }
    Ok(LinearMap::from_columns(rows, &columns))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyDims {
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

/// `dim Z^n`, `dim B^n` and `dim H^n = dim Z^n − dim B^n`, with `B^1 = 0`.
pub fn cohomology_dims(ctx: &ComplexContext, degree: usize) -> Result<CohomologyDims> {
    let dn = coboundary_matrix(ctx, degree)?;
    let cochains = dn.cols();
    let cocycles = cochains - dn.rank();
    let coboundaries = if degree == 1 { 0 } else { coboundary_matrix(ctx, degree - 1)?.rank() };
    Ok(CohomologyDims { cochains, cocycles, coboundaries, cohomology: cocycles - coboundaries })
}

/// A cochain with random small rational coordinates, reproducible from
/// `seed`.
pub fn random_cochain(degree: usize, alg_dim: usize, module_dim: usize, seed: u64) -> Result<Cochain> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = Cochain::space_dim(degree.max(1), alg_dim, module_dim);
    let coords = Vector(
        (0..n)
            .map(|_| {
                let num = rng.gen_range(-4..=4);
                ratio(num, rng.gen_range(1..=3))
            })
            .collect(),
    );
    Cochain::from_coords(degree, alg_dim, module_dim, &coords)
}
