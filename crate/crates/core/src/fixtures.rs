//! The finite-dimensional example structures, instantiated at rational
//! parameter values.

use crate::algebra::{HomAlgebra, HomFManifold};
use crate::linalg::{int, one, pow, BilinearMap, LinearMap, Scalar};

use crate::linalg::scalar;

/// Two-dimensional commutative Hom-associative algebra
/// `e1·e1 = e1`, `e1·e2 = e2·e1 = b·e2`, `α = diag(1, b)`.
pub fn a2_algebra(b: &Scalar) -> HomAlgebra {
    let mut dot = BilinearMap::square(2);
    dot.set(0, 0, 0, one());
    dot.set(0, 1, 1, b.clone());
    dot.set(1, 0, 1, b.clone());
    HomAlgebra::new(dot, LinearMap::diagonal(&[one(), b.clone()])).expect("a2 shapes")
}

/// Derivation `e1 ↦ 0`, `e2 ↦ a·e2` of [`a2_algebra`].
pub fn a2_derivation(a: &Scalar) -> LinearMap {
    LinearMap::diagonal(&[scalar::zero(), a.clone()])
}

/// [`a2_algebra`] with the bracket `[e1, e2] = ab·e2`.
pub fn a2(b: &Scalar, a: &Scalar) -> HomFManifold {
    let alg = a2_algebra(b);
    let mut br = BilinearMap::square(2);
    br.set(0, 1, 1, a * b);
    br.set(1, 0, 1, -(a * b));
    HomFManifold::new(alg.product().clone(), br, alg.twist().clone()).expect("a2 invariants")
}

/// Three-dimensional graded algebra `e2·e3 = e3·e2 = b³e1`, `e3·e3 = b²e2`,
/// `α = diag(b³, b², b)`.
pub fn a3_algebra(b: &Scalar) -> HomAlgebra {
    let mut dot = BilinearMap::square(3);
    dot.set(1, 2, 0, pow(b, 3));
    dot.set(2, 1, 0, pow(b, 3));
    dot.set(2, 2, 1, pow(b, 2));
    HomAlgebra::new(dot, LinearMap::diagonal(&[pow(b, 3), pow(b, 2), b.clone()])).expect("a3 shapes")
}

/// Grading derivation `D = diag(3, 2, 1)` of [`a3_algebra`].
pub fn d3() -> LinearMap {
    LinearMap::diagonal(&[int(3), int(2), int(1)])
}

/// [`a3_algebra`] with the bracket `[e2, e3] = −b³e1`.
pub fn a3(b: &Scalar) -> HomFManifold {
    let alg = a3_algebra(b);
    let mut br = BilinearMap::square(3);
    br.set(1, 2, 0, -pow(b, 3));
    br.set(2, 1, 0, pow(b, 3));
    HomFManifold::new(alg.product().clone(), br, alg.twist().clone()).expect("a3 invariants")
}

/// Rota-Baxter operator `R = diag(1/3, 1/2, 1)` on [`a3`].
pub fn r3() -> LinearMap {
    LinearMap::diagonal(&[scalar::ratio(1, 3), scalar::ratio(1, 2), one()])
}

/// Hom-Poisson algebra: `e1` a unit, `e2`, `e3` square-zero,
/// `[e2, e3] = e3`, Yau-twisted by the automorphism `diag(1, 1, c)`.
pub fn poisson3(c: &Scalar) -> HomFManifold {
    let mut dot = BilinearMap::square(3);
    for i in 0..3 {
        dot.set(0, i, i, one());
        dot.set(i, 0, i, one());
    }
    let mut br = BilinearMap::square(3);
    br.set(1, 2, 2, one());
    br.set(2, 1, 2, -one());
    let phi = LinearMap::diagonal(&[one(), one(), c.clone()]);
    HomFManifold::new(dot.transport(&phi, &phi, &LinearMap::identity(3)), br.transport(&phi, &phi, &LinearMap::identity(3)), phi)
        .expect("poisson3 invariants")
}

/// Two-dimensional Lie algebra `[e1, e2] = e2` with zero product and
/// `α = id`; carries the symplectic form `ω(e1, e2) = 1`.
pub fn lie2() -> HomFManifold {
    let mut br = BilinearMap::square(2);
    br.set(0, 1, 1, one());
    br.set(1, 0, 1, -one());
    HomFManifold::new(BilinearMap::square(2), br, LinearMap::identity(2)).expect("lie2 invariants")
}

/// `ω(e1, e2) = 1 = −ω(e2, e1)` on a 2-dimensional space.
pub fn omega2() -> BilinearMap {
    let mut w = BilinearMap::zeros(2, 2, 1);
    w.set(0, 1, 0, one());
    w.set(1, 0, 0, -one());
    w
}

/// One-dimensional unital algebra `e·e = e`, zero bracket, `α = id`.
pub fn unit1() -> HomFManifold {
    let mut dot = BilinearMap::square(1);
    dot.set(0, 0, 0, one());
    HomFManifold::new(dot, BilinearMap::square(1), LinearMap::identity(1)).expect("unit1 invariants")
}

/// F-manifold algebra `e1·e2 = e3`, `[e2, e3] = e2`, `α = id` whose
/// Leibnizator fails both coherence identities.
pub fn noncoherent3() -> HomFManifold {
    let mut dot = BilinearMap::square(3);
    dot.set(0, 1, 2, one());
    dot.set(1, 0, 2, one());
    let mut br = BilinearMap::square(3);
    br.set(1, 2, 1, one());
    br.set(2, 1, 1, -one());
    HomFManifold::new(dot, br, LinearMap::identity(3)).expect("noncoherent3 invariants")
}
