use std::fmt;

use num_traits::Zero;

use super::matrix::LinearMap;
use super::scalar::{format_scalar, Scalar};
use super::vector::Vector;

/// Bilinear map given by structure constants: `e_i ∘ f_j = Σ_k c[i][j][k] g_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    left: usize,
    right: usize,
    out: usize,
    c: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zeros(left: usize, right: usize, out: usize) -> Self {
        BilinearMap { left, right, out, c: vec![Scalar::zero(); left * right * out] }
    }

    /// Zero product on a `dim`-dimensional space.
    pub fn square(dim: usize) -> Self {
        Self::zeros(dim, dim, dim)
    }

    pub fn from_fn(left: usize, right: usize, out: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut m = Self::zeros(left, right, out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.dim(), out, "structure constant vector has the wrong length");
                m.set_product(i, j, &v);
            }
        }
        m
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn is_square_on(&self, dim: usize) -> bool {
        self.left == dim && self.right == dim && self.out == dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.right + j) * self.out + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.idx(i, j, k);
        self.c[n] = v;
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: &Vector) {
        for k in 0..self.out {
            self.set(i, j, k, v[k].clone());
        }
    }

    /// `e_i ∘ e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = self.idx(i, j, 0);
        Vector(self.c[start..start + self.out].to_vec())
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        assert_eq!(x.dim(), self.left, "left argument has the wrong dimension");
        assert_eq!(y.dim(), self.right, "right argument has the wrong dimension");
        let mut r = Vector::zeros(self.out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                let base = self.idx(i, j, 0);
                for k in 0..self.out {
                    let c = &self.c[base + k];
                    if !c.is_zero() {
                        r[k] += c * &w;
                    }
                }
            }
        }
        r
    }

    /// Matrix of `y ↦ x ∘ y`.
    pub fn left_mult(&self, x: &Vector) -> LinearMap {
        let cols: Vec<Vector> = (0..self.right).map(|j| self.apply(x, &Vector::basis(self.right, j))).collect();
        LinearMap::from_columns(self.out, &cols)
    }

    /// Matrix of `x ↦ x ∘ y`.
    pub fn right_mult(&self, y: &Vector) -> LinearMap {
        let cols: Vec<Vector> = (0..self.left).map(|i| self.apply(&Vector::basis(self.left, i), y)).collect();
        LinearMap::from_columns(self.out, &cols)
    }

    pub fn is_symmetric(&self) -> bool {
        self.left == self.right
            && (0..self.left).all(|i| (0..self.right).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.left == self.right
            && (0..self.left)
                .all(|i| (0..self.right).all(|j| self.basis_product(i, j) == -self.basis_product(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `(x, y) ↦ y ∘ x`.
    pub fn opposite(&self) -> BilinearMap {
        BilinearMap::from_fn(self.right, self.left, self.out, |i, j| self.basis_product(j, i))
    }

    /// `x ∘ y − y ∘ x`.
    pub fn commutator(&self) -> BilinearMap {
        self.sub(&self.opposite())
    }

    /// `x ∘ y + y ∘ x`.
    pub fn symmetrized(&self) -> BilinearMap {
        self.add(&self.opposite())
    }

    pub fn add(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!((self.left, self.right, self.out), (other.left, other.right, other.out));
        BilinearMap {
            left: self.left,
            right: self.right,
            out: self.out,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!((self.left, self.right, self.out), (other.left, other.right, other.out));
        BilinearMap {
            left: self.left,
            right: self.right,
            out: self.out,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> BilinearMap {
        BilinearMap { left: self.left, right: self.right, out: self.out, c: self.c.iter().map(|x| x * s).collect() }
    }

    /// Structure constants in storage order `(i, j, k)`, `k` fastest.
    pub fn coords(&self) -> &[Scalar] {
        &self.c
    }

    pub fn from_coords(left: usize, right: usize, out: usize, coords: Vec<Scalar>) -> Self {
        assert_eq!(coords.len(), left * right * out, "coordinate count mismatch");
        BilinearMap { left, right, out, c: coords }
    }

    /// Nonzero structure constants as `(i, j, k, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        (0..self.left).flat_map(move |i| {
            (0..self.right).flat_map(move |j| {
                (0..self.out).filter_map(move |k| {
                    let v = self.get(i, j, k);
                    (!v.is_zero()).then_some((i, j, k, v))
                })
            })
        })
    }

    /// Pulls both arguments back through `a` and `b` and pushes the output
    /// through `o`: `(x, y) ↦ o(a(x) ∘ b(y))`.
    pub fn transport(&self, a: &LinearMap, b: &LinearMap, o: &LinearMap) -> BilinearMap {
        BilinearMap::from_fn(a.cols(), b.cols(), o.rows(), |i, j| {
            o.apply(&self.apply(&a.column(i), &b.column(j)))
        })
    }
}

impl fmt::Debug for BilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearMap({}x{}->{}", self.left, self.right, self.out)?;
        for (i, j, k, v) in self.entries() {
            write!(f, " [{},{},{}]={}", i + 1, j + 1, k + 1, format_scalar(v))?;
        }
        write!(f, ")")
    }
}

/// Dense multilinear tensor with one dimension per slot; the last slot is
/// the output slot when the tensor is used as a multilinear map.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiTensor {
    dims: Vec<usize>,
    data: Vec<Scalar>,
}

impl MultiTensor {
    pub fn zeros(dims: Vec<usize>) -> Self {
        let n = dims.iter().product();
        MultiTensor { dims, data: vec![Scalar::zero(); n] }
    }

    pub fn from_data(dims: Vec<usize>, data: Vec<Scalar>) -> Self {
        assert_eq!(dims.iter().product::<usize>(), data.len(), "entry count must equal the product of dims");
        MultiTensor { dims, data }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.dims.len(), "index arity mismatch");
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "tensor index out of range");
            acc * d + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// The output vector stored at input index `args` (all slots but the last).
    pub fn fiber(&self, args: &[usize]) -> Vector {
        let out = *self.dims.last().expect("tensor has an output slot");
        let mut idx = args.to_vec();
        idx.push(0);
        let start = self.offset(&idx);
        Vector(self.data[start..start + out].to_vec())
    }

    pub fn set_fiber(&mut self, args: &[usize], v: &Vector) {
        let out = *self.dims.last().expect("tensor has an output slot");
        let mut idx = args.to_vec();
        idx.push(0);
        let start = self.offset(&idx);
        self.data[start..start + out].clone_from_slice(&v.0);
    }

    /// Evaluates the tensor as a multilinear map on `args`, one vector per
    /// input slot.
    pub fn contract(&self, args: &[&Vector]) -> Vector {
        let n = self.dims.len() - 1;
        assert_eq!(args.len(), n, "wrong number of arguments");
        for (a, d) in args.iter().zip(&self.dims) {
            assert_eq!(a.dim(), *d, "argument dimension mismatch");
        }
        let out = self.dims[n];
        let mut result = Vector::zeros(out);
        let mut idx = vec![0usize; n];
        contract_rec(self, args, 0, &Scalar::from_integer(1.into()), &mut idx, &mut result);
        result
    }

    pub fn add(&self, other: &MultiTensor) -> MultiTensor {
        assert_eq!(self.dims, other.dims);
        MultiTensor { dims: self.dims.clone(), data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> MultiTensor {
        MultiTensor { dims: self.dims.clone(), data: self.data.iter().map(|x| x * s).collect() }
    }
}

fn contract_rec(t: &MultiTensor, args: &[&Vector], slot: usize, w: &Scalar, idx: &mut [usize], acc: &mut Vector) {
    if slot == args.len() {
        let f = t.fiber(idx);
        for (a, b) in acc.iter_mut().zip(f.iter()) {
            if !b.is_zero() {
                *a += b * w;
            }
        }
        return;
    }
    for (i, x) in args[slot].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        idx[slot] = i;
        contract_rec(t, args, slot + 1, &(w * x), idx, acc);
    }
}

/// All index tuples in `0..dim` of the given length, lexicographic.
pub fn tuples(dim: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    mixed_tuples(&vec![dim; len])
}

/// All index tuples with slot `s` ranging over `0..dims[s]`, lexicographic.
pub fn mixed_tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> {
    let dims = dims.to_vec();
    let total = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d)).expect("tuple count overflow");
    (0..total).map(move |mut n| {
        let mut t = vec![0; dims.len()];
        for slot in (0..dims.len()).rev() {
            t[slot] = n % dims[slot];
            n /= dims[slot];
        }
        t
    })
}
