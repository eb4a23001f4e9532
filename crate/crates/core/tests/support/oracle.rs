//! Brute-force transcriptions of every checked identity over raw structure
//! constants, and seeded random structures of dimension 2 to 4 (valid and
//! invalid) to compare them on.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use homf::algebra::*;
use homf::constructions::{check_derivation, check_morphism, direct_sum, Morphism};
use homf::deformations::{check_n_deformation, Deformation};
use homf::fixtures;
use homf::linalg::{int, ratio, BilinearMap, LinearMap, Scalar};
use homf::operators::*;
use homf::representations::*;
use homf::CheckReport;

type Q = BigRational;
type V = Vec<Q>;
type M = Vec<Vec<Q>>;
type C = Vec<Vec<Vec<Q>>>;
type W = (String, Vec<usize>, V, V);

// ---- raw arithmetic ----

fn zeros(n: usize) -> V {
    vec![Q::zero(); n]
}

fn e(n: usize, i: usize) -> V {
    let mut v = zeros(n);
    v[i] = Q::one();
    v
}

fn add(x: &V, y: &V) -> V {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub(x: &V, y: &V) -> V {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn neg(x: &V) -> V {
    x.iter().map(|a| -a).collect()
}

fn prod(c: &C, x: &V, y: &V) -> V {
    let out = c[0][0].len();
    let mut r = zeros(out);
    for i in 0..x.len() {
        for j in 0..y.len() {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            for k in 0..out {
                r[k] += &x[i] * &y[j] * &c[i][j][k];
            }
        }
    }
    r
}

fn ap(a: &M, x: &V) -> V {
    a.iter().map(|row| row.iter().zip(x).fold(Q::zero(), |s, (p, q)| s + p * q)).collect()
}

/// `Σ x_i maps_i u`.
fn act(maps: &[M], x: &V, u: &V) -> V {
    let mut r = zeros(u.len());
    for (i, xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            let v = ap(&maps[i], u);
            for k in 0..r.len() {
                r[k] += xi * &v[k];
            }
        }
    }
    r
}

fn odometer(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &d in dims {
        out = out.into_iter().flat_map(|t| (0..d).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

fn run(out: &mut Vec<W>, name: &str, dims: &[usize], f: impl Fn(&[usize]) -> (V, V)) {
    for t in odometer(dims) {
        let (l, r) = f(&t);
        if l != r {
            out.push((name.to_string(), t, l, r));
        }
    }
}

fn raw_c(b: &BilinearMap) -> C {
    (0..b.left_dim())
        .map(|i| (0..b.right_dim()).map(|j| (0..b.out_dim()).map(|k| b.get(i, j, k).clone()).collect()).collect())
        .collect()
}

fn raw_m(a: &LinearMap) -> M {
    a.to_rows()
}

fn lib(r: &CheckReport) -> Vec<W> {
    r.counterexamples.iter().map(|w| (w.identity.clone(), w.indices.clone(), w.lhs.0.clone(), w.rhs.0.clone())).collect()
}

fn rank(mut rows: M) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for k in 0..cols {
                    let t = &f * &rows[r][k];
                    rows[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

// ---- transcribed identities ----

struct Raw {
    d: usize,
    dot: C,
    br: C,
    a: M,
}

impl Raw {
    fn of(fm: &HomFManifold) -> Raw {
        Raw { d: fm.dim(), dot: raw_c(fm.dot()), br: raw_c(fm.bracket()), a: raw_m(fm.twist()) }
    }
    fn e(&self, i: usize) -> V {
        e(self.d, i)
    }
    fn m(&self, x: &V, y: &V) -> V {
        prod(&self.dot, x, y)
    }
    fn b(&self, x: &V, y: &V) -> V {
        prod(&self.br, x, y)
    }
    fn al(&self, x: &V) -> V {
        ap(&self.a, x)
    }
    fn al2(&self, x: &V) -> V {
        self.al(&self.al(x))
    }
    /// `[αx, y·z] − [x,y]·αz − αy·[x,z]`
    fn leib(&self, x: &V, y: &V, z: &V) -> V {
        let t1 = self.b(&self.al(x), &self.m(y, z));
        let t2 = self.m(&self.b(x, y), &self.al(z));
        let t3 = self.m(&self.al(y), &self.b(x, z));
        sub(&sub(&t1, &t2), &t3)
    }
}

fn assoc(c: &C, a: &M, x: &V, y: &V, z: &V) -> V {
    sub(&prod(c, &prod(c, x, y), &ap(a, z)), &prod(c, &ap(a, x), &prod(c, y, z)))
}

fn o_comm_assoc(c: &C, a: &M) -> Vec<W> {
    let d = a.len();
    let mut w = vec![];
    run(&mut w, "commutativity", &[d, d], |t| (prod(c, &e(d, t[0]), &e(d, t[1])), prod(c, &e(d, t[1]), &e(d, t[0]))));
    run(&mut w, "hom-associativity", &[d, d, d], |t| {
        let (x, y, z) = (e(d, t[0]), e(d, t[1]), e(d, t[2]));
        (prod(c, &prod(c, &x, &y), &ap(a, &z)), prod(c, &ap(a, &x), &prod(c, &y, &z)))
    });
    w
}

fn o_hom_lie(c: &C, a: &M) -> Vec<W> {
    let d = a.len();
    let mut w = vec![];
    run(&mut w, "skew-symmetry", &[d, d], |t| (prod(c, &e(d, t[0]), &e(d, t[1])), neg(&prod(c, &e(d, t[1]), &e(d, t[0])))));
    run(&mut w, "hom-jacobi", &[d, d, d], |t| {
        let (x, y, z) = (e(d, t[0]), e(d, t[1]), e(d, t[2]));
        let j = |p: &V, q: &V, r: &V| prod(c, &ap(a, p), &prod(c, q, r));
        (add(&add(&j(&x, &y, &z), &j(&y, &z, &x)), &j(&z, &x, &y)), zeros(d))
    });
    w
}

fn o_zinbiel(c: &C, a: &M) -> Vec<W> {
    let d = a.len();
    let mut w = vec![];
    run(&mut w, "hom-zinbiel", &[d, d, d], |t| {
        let (x, y, z) = (e(d, t[0]), e(d, t[1]), e(d, t[2]));
        let rhs = add(&prod(c, &prod(c, &y, &x), &ap(a, &z)), &prod(c, &prod(c, &x, &y), &ap(a, &z)));
        (prod(c, &ap(a, &x), &prod(c, &y, &z)), rhs)
    });
    w
}

fn o_pre_lie(c: &C, a: &M) -> Vec<W> {
    let d = a.len();
    let mut w = vec![];
    run(&mut w, "left-symmetric associator", &[d, d, d], |t| {
        let (x, y, z) = (e(d, t[0]), e(d, t[1]), e(d, t[2]));
        (assoc(c, a, &x, &y, &z), assoc(c, a, &y, &x, &z))
    });
    w
}

fn o_lie_admissible(c: &C, a: &M) -> Vec<W> {
    let d = a.len();
    let mut w = vec![];
    run(&mut w, "cyclic associator sum", &[d, d, d], |t| {
        let (x, y, z) = (e(d, t[0]), e(d, t[1]), e(d, t[2]));
        let p = |u: &V, v: &V, s: &V| sub(&assoc(c, a, u, v, s), &assoc(c, a, v, u, s));
        (add(&add(&p(&x, &y, &z), &p(&y, &z, &x)), &p(&z, &x, &y)), zeros(d))
    });
    w
}

fn o_hm(r: &Raw) -> Vec<W> {
    let d = r.d;
    let mut w = vec![];
    run(&mut w, "hom-hertling-manin", &[d, d, d, d], |t| {
        let (x, y, z, u) = (r.e(t[0]), r.e(t[1]), r.e(t[2]), r.e(t[3]));
        let lhs = r.leib(&r.m(&x, &y), &r.al(&z), &r.al(&u));
        let rhs = add(&r.m(&r.al2(&x), &r.leib(&y, &z, &u)), &r.m(&r.al2(&y), &r.leib(&x, &z, &u)));
        (lhs, rhs)
    });
    w
}

fn o_f_manifold(r: &Raw) -> Vec<W> {
    [o_comm_assoc(&r.dot, &r.a), o_hom_lie(&r.br, &r.a), o_hm(r)].concat()
}

fn compat(dot: &C, star: &C, a: &M, x: &V, y: &V, z: &V) -> V {
    let t1 = prod(star, &ap(a, x), &prod(dot, y, z));
    let t2 = prod(dot, &prod(star, x, y), &ap(a, z));
    let t3 = prod(dot, &ap(a, y), &prod(star, x, z));
    sub(&sub(&t1, &t2), &t3)
}

fn o_f_admissible(dot: &C, star: &C, a: &M) -> Vec<W> {
    let d = a.len();
    let mut w = [o_comm_assoc(dot, a), o_lie_admissible(star, a)].concat();
    run(&mut w, "admissible compatibility", &[d, d, d], |t| {
        let (x, y, z) = (e(d, t[0]), e(d, t[1]), e(d, t[2]));
        (compat(dot, star, a, &x, &y, &z), compat(dot, star, a, &y, &x, &z))
    });
    w
}

fn o_pre_lie_commutative(dot: &C, star: &C, a: &M) -> Vec<W> {
    let d = a.len();
    let mut w = [o_comm_assoc(dot, a), o_pre_lie(star, a)].concat();
    run(&mut w, "derivation-like compatibility", &[d, d, d], |t| {
        let (x, y, z) = (e(d, t[0]), e(d, t[1]), e(d, t[2]));
        (compat(dot, star, a, &x, &y, &z), zeros(d))
    });
    w
}

struct PreF {
    d: usize,
    dia: C,
    star: C,
    a: M,
}

impl PreF {
    fn dm(&self, x: &V, y: &V) -> V {
        prod(&self.dia, x, y)
    }
    fn st(&self, x: &V, y: &V) -> V {
        prod(&self.star, x, y)
    }
    fn al(&self, x: &V) -> V {
        ap(&self.a, x)
    }
    fn dot(&self, x: &V, y: &V) -> V {
        add(&self.dm(x, y), &self.dm(y, x))
    }
    fn br(&self, x: &V, y: &V) -> V {
        sub(&self.st(x, y), &self.st(y, x))
    }
    fn f1(&self, x: &V, y: &V, z: &V) -> V {
        let t1 = self.st(&self.al(x), &self.dm(y, z));
        let t2 = self.dm(&self.al(y), &self.st(x, z));
        let t3 = self.dm(&self.br(x, y), &self.al(z));
        sub(&sub(&t1, &t2), &t3)
    }
    fn f2(&self, x: &V, y: &V, z: &V) -> V {
        let t1 = self.dm(&self.al(x), &self.st(y, z));
        let t2 = self.dm(&self.al(y), &self.st(x, z));
        let t3 = self.st(&self.dot(x, y), &self.al(z));
        sub(&add(&t1, &t2), &t3)
    }
    fn leib(&self, x: &V, y: &V, z: &V) -> V {
        let t1 = self.br(&self.al(x), &self.dot(y, z));
        let t2 = self.dot(&self.br(x, y), &self.al(z));
        let t3 = self.dot(&self.al(y), &self.br(x, z));
        sub(&sub(&t1, &t2), &t3)
    }
}

fn o_pre_f(p: &PreF) -> Vec<W> {
    let d = p.d;
    let mut w = [o_zinbiel(&p.dia, &p.a), o_pre_lie(&p.star, &p.a)].concat();
    run(&mut w, "pre-hertling-manin F1", &[d, d, d, d], |t| {
        let (x, y, z, u) = (e(d, t[0]), e(d, t[1]), e(d, t[2]), e(d, t[3]));
        let a2 = |v: &V| p.al(&p.al(v));
        let lhs = p.f1(&p.dot(&x, &y), &p.al(&z), &p.al(&u));
        (lhs, add(&p.dm(&a2(&x), &p.f1(&y, &z, &u)), &p.dm(&a2(&y), &p.f1(&x, &z, &u))))
    });
    run(&mut w, "pre-hertling-manin F2", &[d, d, d, d], |t| {
        let (x, y, z, u) = (e(d, t[0]), e(d, t[1]), e(d, t[2]), e(d, t[3]));
        let a2 = |v: &V| p.al(&p.al(v));
        let lhs = p.dm(&p.leib(&x, &y, &z), &a2(&u));
        (lhs, sub(&p.f2(&p.al(&y), &p.al(&z), &p.dm(&x, &u)), &p.dm(&a2(&x), &p.f2(&y, &z, &u))))
    });
    w
}

fn o_leib_decomposition(p: &PreF) -> Vec<W> {
    let d = p.d;
    let mut w = vec![];
    run(&mut w, "L = F1 + F1(swap) + F2(cycle)", &[d, d, d], |t| {
        let (x, y, z) = (e(d, t[0]), e(d, t[1]), e(d, t[2]));
        (p.leib(&x, &y, &z), add(&add(&p.f1(&x, &y, &z), &p.f1(&x, &z, &y)), &p.f2(&y, &z, &x)))
    });
    w
}

fn o_derivation(c: &C, a: &M, dm: &M) -> Vec<W> {
    let d = a.len();
    let mut w = vec![];
    run(&mut w, "commutes with twist", &[d], |t| (ap(dm, &ap(a, &e(d, t[0]))), ap(a, &ap(dm, &e(d, t[0])))));
    run(&mut w, "leibniz rule", &[d, d], |t| {
        let (x, y) = (e(d, t[0]), e(d, t[1]));
        (ap(dm, &prod(c, &x, &y)), add(&prod(c, &ap(dm, &x), &y), &prod(c, &x, &ap(dm, &y))))
    });
    w
}

fn o_morphism(src: &Raw, dst: &Raw, f: &M, weak: bool) -> Vec<W> {
    let d = src.d;
    let mut w = vec![];
    run(&mut w, "intertwines twists", &[d], |t| (ap(f, &src.al(&src.e(t[0]))), dst.al(&ap(f, &src.e(t[0])))));
    if !weak {
        run(&mut w, "preserves product", &[d, d], |t| {
            let (x, y) = (src.e(t[0]), src.e(t[1]));
            (ap(f, &src.m(&x, &y)), dst.m(&ap(f, &x), &ap(f, &y)))
        });
    }
    run(&mut w, "preserves bracket", &[d, d], |t| {
        let (x, y) = (src.e(t[0]), src.e(t[1]));
        (ap(f, &src.b(&x, &y)), dst.b(&ap(f, &x), &ap(f, &y)))
    });
    w
}

struct RawRep {
    m: usize,
    rho: Vec<M>,
    mu: Vec<M>,
    phi: M,
}

impl RawRep {
    fn of(r: &Representation) -> RawRep {
        RawRep {
            m: r.module_dim(),
            rho: r.rho().unwrap().iter().map(raw_m).collect(),
            mu: r.mu().unwrap().iter().map(raw_m).collect(),
            phi: raw_m(r.phi()),
        }
    }
    fn u(&self, i: usize) -> V {
        e(self.m, i)
    }
    fn ph(&self, u: &V) -> V {
        ap(&self.phi, u)
    }
    fn r(&self, x: &V, u: &V) -> V {
        act(&self.rho, x, u)
    }
    fn mu(&self, x: &V, u: &V) -> V {
        act(&self.mu, x, u)
    }
}

fn o_rep_comm_assoc(c: &C, a: &M, rep: &RawRep) -> Vec<W> {
    let (d, m) = (a.len(), rep.m);
    let mut w = vec![];
    run(&mut w, "product action intertwines twists", &[d, m], |t| {
        let (x, u) = (e(d, t[0]), rep.u(t[1]));
        (rep.mu(&ap(a, &x), &rep.ph(&u)), rep.ph(&rep.mu(&x, &u)))
    });
    run(&mut w, "product action is multiplicative", &[d, d, m], |t| {
        let (x, y, u) = (e(d, t[0]), e(d, t[1]), rep.u(t[2]));
        (rep.mu(&prod(c, &x, &y), &rep.ph(&u)), rep.mu(&ap(a, &x), &rep.mu(&y, &u)))
    });
    w
}

fn o_rep_hom_lie(c: &C, a: &M, rep: &RawRep) -> Vec<W> {
    let (d, m) = (a.len(), rep.m);
    let mut w = vec![];
    run(&mut w, "bracket action intertwines twists", &[d, m], |t| {
        let (x, u) = (e(d, t[0]), rep.u(t[1]));
        (rep.r(&ap(a, &x), &rep.ph(&u)), rep.ph(&rep.r(&x, &u)))
    });
    run(&mut w, "bracket action is a Lie morphism", &[d, d, m], |t| {
        let (x, y, u) = (e(d, t[0]), e(d, t[1]), rep.u(t[2]));
        let rhs = sub(&rep.r(&ap(a, &x), &rep.r(&y, &u)), &rep.r(&ap(a, &y), &rep.r(&x, &u)));
        (rep.r(&prod(c, &x, &y), &rep.ph(&u)), rhs)
    });
    w
}

fn o_rep_pre_lie(star: &C, a: &M, rep: &RawRep) -> Vec<W> {
    let (d, m) = (a.len(), rep.m);
    let comm: C = (0..d).map(|i| (0..d).map(|j| sub(&star[i][j], &star[j][i])).collect()).collect();
    let mut w = o_rep_hom_lie(&comm, a, rep);
    run(&mut w, "right action intertwines twists", &[d, m], |t| {
        let (x, u) = (e(d, t[0]), rep.u(t[1]));
        (rep.ph(&rep.mu(&x, &u)), rep.mu(&ap(a, &x), &rep.ph(&u)))
    });
    run(&mut w, "pre-lie compatibility", &[d, d, m], |t| {
        let (x, y, u) = (e(d, t[0]), e(d, t[1]), rep.u(t[2]));
        let (ax, ay) = (ap(a, &x), ap(a, &y));
        let lhs = sub(&rep.r(&ax, &rep.mu(&y, &u)), &rep.mu(&ay, &rep.r(&x, &u)));
        let rhs = sub(&rep.mu(&prod(star, &x, &y), &rep.ph(&u)), &rep.mu(&ay, &rep.mu(&x, &u)));
        (lhs, rhs)
    });
    w
}

fn l1(f: &Raw, rep: &RawRep, x: &V, y: &V, u: &V) -> V {
    let t1 = rep.r(&f.al(x), &rep.mu(y, u));
    let t2 = rep.mu(&f.al(y), &rep.r(x, u));
    let t3 = rep.mu(&f.b(x, y), &rep.ph(u));
    sub(&sub(&t1, &t2), &t3)
}

fn l2(f: &Raw, rep: &RawRep, x: &V, y: &V, u: &V) -> V {
    let t1 = rep.mu(&f.al(x), &rep.r(y, u));
    let t2 = rep.mu(&f.al(y), &rep.r(x, u));
    sub(&add(&t1, &t2), &rep.r(&f.m(x, y), &rep.ph(u)))
}

fn l3(f: &Raw, rep: &RawRep, x: &V, y: &V, u: &V) -> V {
    let t1 = rep.r(&f.al(y), &rep.mu(x, u));
    let t2 = rep.r(&f.al(x), &rep.mu(y, u));
    sub(&add(&t1, &t2), &rep.r(&f.m(x, y), &rep.ph(u)))
}

fn o_rep_f(f: &Raw, rep: &RawRep) -> Vec<W> {
    let (d, m) = (f.d, rep.m);
    let mut w = [o_rep_comm_assoc(&f.dot, &f.a, rep), o_rep_hom_lie(&f.br, &f.a, rep)].concat();
    run(&mut w, "rep hertling-manin", &[d, d, d, m], |t| {
        let (x, y, z, u) = (f.e(t[0]), f.e(t[1]), f.e(t[2]), rep.u(t[3]));
        let lhs = l1(f, rep, &f.m(&x, &y), &f.al(&z), &rep.ph(&u));
        (lhs, add(&rep.mu(&f.al2(&x), &l1(f, rep, &y, &z, &u)), &rep.mu(&f.al2(&y), &l1(f, rep, &x, &z, &u))))
    });
    run(&mut w, "rep leibnizator", &[d, d, d, m], |t| {
        let (x, y, z, u) = (f.e(t[0]), f.e(t[1]), f.e(t[2]), rep.u(t[3]));
        let lhs = rep.mu(&f.leib(&x, &y, &z), &rep.ph(&rep.ph(&u)));
        (lhs, sub(&l2(f, rep, &f.al(&y), &f.al(&z), &rep.mu(&x, &u)), &rep.mu(&f.al2(&x), &l2(f, rep, &y, &z, &u))))
    });
    w
}

fn o_dual_conditions(f: &Raw, rep: &RawRep) -> Vec<W> {
    let (d, m) = (f.d, rep.m);
    let mut w = vec![];
    run(&mut w, "co-hertling-manin", &[d, d, d, m], |t| {
        let (x, y, z, u) = (f.e(t[0]), f.e(t[1]), f.e(t[2]), rep.u(t[3]));
        let lhs = l1(f, rep, &f.m(&x, &y), &z, &rep.ph(&u));
        (lhs, add(&l1(f, rep, &f.al(&y), &z, &rep.mu(&x, &u)), &l1(f, rep, &f.al(&x), &z, &rep.mu(&y, &u))))
    });
    run(&mut w, "co-leibnizator", &[d, d, d, m], |t| {
        let (x, y, z, u) = (f.e(t[0]), f.e(t[1]), f.e(t[2]), rep.u(t[3]));
        let lhs = rep.mu(&f.leib(&x, &y, &z), &rep.ph(&rep.ph(&u)));
        (lhs, sub(&l3(f, rep, &f.al(&y), &f.al(&z), &rep.mu(&x, &u)), &rep.mu(&f.al(&x), &l3(f, rep, &y, &z, &u))))
    });
    w
}

fn o_coherence(f: &Raw) -> Vec<W> {
    let d = f.d;
    let k = |x: &V, y: &V, z: &V| {
        add(&add(&f.b(&f.al(x), &f.m(y, z)), &f.b(&f.al(y), &f.m(z, x))), &f.b(&f.al(z), &f.m(x, y)))
    };
    let mut w = vec![];
    run(&mut w, "coherence hertling-manin", &[d, d, d, d], |t| {
        let (x, y, z, u) = (f.e(t[0]), f.e(t[1]), f.e(t[2]), f.e(t[3]));
        let lhs = f.leib(&f.m(&x, &y), &z, &f.al(&u));
        (lhs, add(&f.leib(&f.al(&y), &z, &f.m(&x, &u)), &f.leib(&f.al(&x), &z, &f.m(&y, &u))))
    });
    run(&mut w, "coherence leibnizator", &[d, d, d, d], |t| {
        let (x, y, z, u) = (f.e(t[0]), f.e(t[1]), f.e(t[2]), f.e(t[3]));
        let lhs = f.m(&f.leib(&x, &y, &z), &f.al2(&u));
        (lhs, sub(&k(&f.al(&y), &f.al(&z), &f.m(&x, &u)), &f.m(&f.al(&x), &k(&y, &z, &u))))
    });
    w
}

fn o_o_operator(f: &Raw, rep: &RawRep, t: &M, product: bool, bracket: bool) -> Vec<W> {
    let m = rep.m;
    let mut w = vec![];
    run(&mut w, "intertwines twists", &[m], |i| (ap(t, &rep.ph(&rep.u(i[0]))), f.al(&ap(t, &rep.u(i[0])))));
    if product {
        run(&mut w, "o-operator product", &[m, m], |i| {
            let (tu, tv) = (ap(t, &rep.u(i[0])), ap(t, &rep.u(i[1])));
            (f.m(&tu, &tv), ap(t, &add(&rep.mu(&tu, &rep.u(i[1])), &rep.mu(&tv, &rep.u(i[0])))))
        });
    }
    if bracket {
        run(&mut w, "o-operator bracket", &[m, m], |i| {
            let (tu, tv) = (ap(t, &rep.u(i[0])), ap(t, &rep.u(i[1])));
            (f.b(&tu, &tv), ap(t, &sub(&rep.r(&tu, &rep.u(i[1])), &rep.r(&tv, &rep.u(i[0])))))
        });
    }
    w
}

fn o_symplectic(f: &Raw, om: &C) -> Vec<W> {
    let d = f.d;
    let mut w = vec![];
    run(&mut w, "twist invariance", &[d, d], |t| {
        let (x, y) = (f.e(t[0]), f.e(t[1]));
        (prod(om, &f.al(&x), &f.al(&y)), prod(om, &x, &y))
    });
    for (name, use_dot) in [("cyclic product", true), ("cyclic bracket", false)] {
        run(&mut w, name, &[d, d, d], |t| {
            let (x, y, z) = (f.e(t[0]), f.e(t[1]), f.e(t[2]));
            let op = |p: &V, q: &V| if use_dot { f.m(p, q) } else { f.b(p, q) };
            let s = add(&add(&prod(om, &op(&x, &y), &f.al(&z)), &prod(om, &op(&y, &z), &f.al(&x))), &prod(om, &op(&z, &x), &f.al(&y)));
            (s, zeros(1))
        });
    }
    w
}

fn o_n_deformation(mus: &[C], a: &M) -> Vec<W> {
    let d = a.len();
    let side = |k: usize, x: &V, y: &V, z: &V| {
        let mut s = zeros(d);
        for i in 0..=k {
            let j = k - i;
            if i < mus.len() && j < mus.len() {
                s = add(&s, &assoc2(&mus[i], &mus[j], a, x, y, z));
            }
        }
        s
    };
    let mut w = vec![];
    for k in 0..mus.len() {
        run(&mut w, &format!("pre-lie rule at t^{k}"), &[d, d, d], |t| {
            let (x, y, z) = (e(d, t[0]), e(d, t[1]), e(d, t[2]));
            (side(k, &x, &y, &z), side(k, &y, &x, &z))
        });
    }
    w
}

/// `μ_i(μ_j(x,y), αz) − μ_i(αx, μ_j(y,z))`.
fn assoc2(mi: &C, mj: &C, a: &M, x: &V, y: &V, z: &V) -> V {
    sub(&prod(mi, &prod(mj, x, y), &ap(a, z)), &prod(mi, &ap(a, x), &prod(mj, y, z)))
}

fn o_operator_morphism(p: &PreF, f: &Raw, t: &M) -> Vec<W> {
    let m = p.d;
    let mut w = vec![];
    run(&mut w, "preserves product", &[m, m], |i| {
        let (u, v) = (e(m, i[0]), e(m, i[1]));
        (ap(t, &p.dot(&u, &v)), f.m(&ap(t, &u), &ap(t, &v)))
    });
    run(&mut w, "preserves bracket", &[m, m], |i| {
        let (u, v) = (e(m, i[0]), e(m, i[1]));
        (ap(t, &p.br(&u, &v)), f.b(&ap(t, &u), &ap(t, &v)))
    });
    w
}

/// `T(u⋄v)` and `T(u∗v)` vanish for `u ∈ ker T`: `ker T ⊆ ker(T∘L_v)`
/// and `ker T ⊆ ker(T∘R_v)` for every basis `v`, decided by ranks.
fn o_image_subalgebra(p: &PreF, t: &M) -> bool {
    let m = p.d;
    let base = rank(t.clone());
    [&p.dia, &p.star].iter().all(|c| {
        (0..m).all(|v| {
            let left: M = t.iter().map(|row| (0..m).map(|u| row.iter().zip(&c[u][v]).fold(Q::zero(), |s, (a, b)| s + a * b)).collect()).collect();
            let right: M = t.iter().map(|row| (0..m).map(|u| row.iter().zip(&c[v][u]).fold(Q::zero(), |s, (a, b)| s + a * b)).collect()).collect();
            rank([t.clone(), left].concat()) == base && rank([t.clone(), right].concat()) == base
        })
    })
}

// ---- random structures ----

fn small(rng: &mut ChaCha8Rng) -> Scalar {
    match rng.gen_range(0..6) {
        0 => ratio(1, 2),
        1 => ratio(-1, 2),
        _ => int(rng.gen_range(-2..=2)),
    }
}

fn nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    [int(1), int(2), int(-1), ratio(1, 2), int(3)][rng.gen_range(0..5)].clone()
}

fn sparse_bilinear(rng: &mut ChaCha8Rng, d: usize, out: usize, sign: i8) -> BilinearMap {
    let mut b = BilinearMap::zeros(d, d, out);
    for i in 0..d {
        for j in 0..d {
            if (sign != 0 && j < i) || (sign < 0 && i == j) {
                continue;
            }
            for k in 0..out {
                if rng.gen_bool(0.3) {
                    let v = small(rng);
                    b.set(i, j, k, v.clone());
                    if sign != 0 && i != j {
                        b.set(j, i, k, if sign > 0 { v } else { -v });
                    }
                }
            }
        }
    }
    b
}

fn sparse_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize) -> LinearMap {
    let mut a = LinearMap::zeros(r, c);
    for i in 0..r {
        for j in 0..c {
            if rng.gen_bool(0.35) {
                a.set(i, j, small(rng));
            }
        }
    }
    a
}

fn random_twist(rng: &mut ChaCha8Rng, d: usize) -> LinearMap {
    match rng.gen_range(0..3) {
        0 => LinearMap::identity(d),
        1 => LinearMap::diagonal(&(0..d).map(|_| nonzero(rng)).collect::<Vec<_>>()),
        _ => sparse_matrix(rng, d, d).add(&LinearMap::identity(d)),
    }
}

fn change_of_basis(rng: &mut ChaCha8Rng, d: usize) -> (LinearMap, LinearMap) {
    loop {
        let p = sparse_matrix(rng, d, d).add(&LinearMap::identity(d));
        if let Some(q) = p.inverse() {
            return (p, q);
        }
    }
}

/// A valid Hom-F-manifold algebra of dimension `d` with a derivation of
/// its product and, for `a3`, the operator `R3`.
fn valid_base(seed: u64, d: usize, rng: &mut ChaCha8Rng) -> (HomFManifold, LinearMap, Option<LinearMap>) {
    let pick = (seed / 6) as usize;
    match d {
        2 if pick % 2 == 0 => {
            let a = nonzero(rng);
            (fixtures::a2(&nonzero(rng), &a), fixtures::a2_derivation(&a), None)
        }
        2 => (fixtures::lie2(), LinearMap::zeros(2, 2), None),
        3 => match pick % 3 {
            0 => (fixtures::a3(&nonzero(rng)), fixtures::d3(), Some(fixtures::r3())),
            1 => (fixtures::poisson3(&nonzero(rng)), LinearMap::zeros(3, 3), None),
            _ => (fixtures::noncoherent3(), LinearMap::zeros(3, 3), None),
        },
        _ => {
            let a = nonzero(rng);
            let s = direct_sum(&fixtures::a2(&nonzero(rng), &a), &fixtures::lie2()).unwrap();
            (s, fixtures::a2_derivation(&a).direct_sum(&LinearMap::zeros(2, 2)), None)
        }
    }
}

struct Case {
    fm: HomFManifold,
    star: HomAlgebra,
    pf: HomPreF,
    der: LinearMap,
    morph: LinearMap,
    rep: Representation,
    pre_lie_rep: Representation,
    op: LinearMap,
    omega: BilinearMap,
    mu1: BilinearMap,
}

fn case(seed: u64) -> Case {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = 2 + (seed % 3) as usize;
    if seed % 2 == 0 {
        let (fm, der, r3) = valid_base(seed, d, &mut rng);
        let (p, q) = change_of_basis(&mut rng, d);
        let move_b = |b: &BilinearMap| b.transport(&q, &q, &p);
        let conj = |a: &LinearMap| p.compose(a).compose(&q);
        let twist = conj(fm.twist());
        let fm2 = HomFManifold::new(move_b(fm.dot()), move_b(fm.bracket()), twist.clone()).unwrap();
        let der = conj(&der);
        let star_c = BilinearMap::from_fn(d, d, d, |i, j| fm2.mul(&fm2.basis(i), &der.apply(&fm2.basis(j))));
        let star = HomAlgebra::new(star_c.clone(), twist.clone()).unwrap();
        let rep = Representation::adjoint(&fm2);
        let pre_lie_rep = Representation::adjoint_pre_lie(&star);
        let (pf, op) = match r3 {
            Some(r) => {
                let base_pf = induced_pre_f(&r, &fm, &Representation::adjoint(&fm)).unwrap();
                (HomPreF::new(move_b(base_pf.diamond()), move_b(base_pf.star()), twist.clone()).unwrap(), conj(&r))
            }
            None => (HomPreF::new(fm2.dot().scale(&ratio(1, 2)), star_c.clone(), twist.clone()).unwrap(), LinearMap::zeros(d, d)),
        };
        let mut omega = BilinearMap::zeros(d, d, 1);
        omega.set(0, 1, 0, int(1));
        omega.set(1, 0, 0, int(-1));
        let omega = omega.transport(&q, &q, &LinearMap::identity(1));
        let morph = if rng.gen_bool(0.5) { LinearMap::identity(d) } else { LinearMap::zeros(d, d) };
        Case { fm: fm2, star, pf, der, morph, rep, pre_lie_rep, op, omega, mu1: star_c }
    } else {
        let twist = random_twist(&mut rng, d);
        let fm = HomFManifold::new(sparse_bilinear(&mut rng, d, d, 1), sparse_bilinear(&mut rng, d, d, -1), twist.clone()).unwrap();
        let star = HomAlgebra::new(sparse_bilinear(&mut rng, d, d, 0), twist.clone()).unwrap();
        let pf = HomPreF::new(sparse_bilinear(&mut rng, d, d, 0), star.product().clone(), twist.clone()).unwrap();
        let m = rng.gen_range(1..=2);
        let maps = |rng: &mut ChaCha8Rng| (0..d).map(|_| sparse_matrix(rng, m, m)).collect::<Vec<_>>();
        let phi = random_twist(&mut rng, m);
        let rep = Representation::new(d, Some(maps(&mut rng)), Some(maps(&mut rng)), phi.clone()).unwrap();
        let pre_lie_rep = Representation::new(d, Some(maps(&mut rng)), Some(maps(&mut rng)), phi).unwrap();
        Case {
            fm,
            pf,
            der: sparse_matrix(&mut rng, d, d),
            morph: sparse_matrix(&mut rng, d, d),
            op: sparse_matrix(&mut rng, d, m),
            omega: sparse_bilinear(&mut rng, d, 1, -1),
            mu1: sparse_bilinear(&mut rng, d, d, 0),
            star,
            rep,
            pre_lie_rep,
        }
    }
}

/// Per-checker pass/fail counts and every disagreement found.
#[derive(Default)]
pub struct Tally {
    pub counts: BTreeMap<&'static str, (usize, usize)>,
    pub mismatches: Vec<String>,
}

impl Tally {
    fn agree(&mut self, name: &'static str, seed: u64, r: &CheckReport, oracle: Vec<W>) {
        let capped: Vec<W> = oracle.iter().take(16).cloned().collect();
        if lib(r) != oracle {
            self.mismatches.push(format!("{name}: witnesses differ on seed {seed}"));
        } else if r.passed != oracle.is_empty() || r.failures != oracle.len() {
            self.mismatches.push(format!("{name}: verdict or failure count differs on seed {seed}"));
        } else if lib(&r.clone().capped(16)) != capped {
            self.mismatches.push(format!("{name}: capped witnesses differ on seed {seed}"));
        }
        let entry = self.counts.entry(name).or_default();
        if r.passed {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
    }

    /// Checkers that never passed or never failed, which would make their
    /// agreement vacuous.
    pub fn one_sided(&self) -> Vec<&'static str> {
        self.counts
            .iter()
            // the decomposition holds for any pair of products
            .filter(|(name, (pass, fail))| *pass == 0 || (*fail == 0 && **name != "leibniz-decomposition"))
            .map(|(name, _)| *name)
            .collect()
    }
}

/// Runs every checker and its transcription on the cases built from `seeds`.
/// Seeds are spread over threads; results are merged in seed order.
pub fn compare_all(seeds: std::ops::Range<u64>) -> Tally {
    let seeds: Vec<u64> = seeds.collect();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(seeds.len().max(1));
    let chunk = seeds.len().div_ceil(workers).max(1);
    let parts: Vec<Tally> = std::thread::scope(|s| {
        let handles: Vec<_> = seeds.chunks(chunk).map(|c| s.spawn(move || compare_seeds(c))).collect();
        handles.into_iter().map(|h| h.join().expect("oracle worker panicked")).collect()
    });
    let mut tally = Tally::default();
    for part in parts {
        for (name, (pass, fail)) in part.counts {
            let entry = tally.counts.entry(name).or_default();
            entry.0 += pass;
            entry.1 += fail;
        }
        tally.mismatches.extend(part.mismatches);
    }
    tally
}

fn compare_seeds(seeds: &[u64]) -> Tally {
    let mut tally = Tally::default();
    for &seed in seeds {
        let c = case(seed);
        let f = Raw::of(&c.fm);
        let (dot_alg, br_alg) = (c.fm.dot_algebra(), c.fm.bracket_algebra());
        let star = raw_c(c.star.product());
        let p = PreF { d: c.pf.dim(), dia: raw_c(c.pf.diamond()), star: raw_c(c.pf.star()), a: raw_m(c.pf.twist()) };
        let rep = RawRep::of(&c.rep);
        let plr = RawRep::of(&c.pre_lie_rep);

        tally.agree("comm-hom-assoc", seed, &check_comm_hom_assoc(&dot_alg), o_comm_assoc(&f.dot, &f.a));
        tally.agree("hom-lie", seed, &check_hom_lie(&br_alg), o_hom_lie(&f.br, &f.a));
        tally.agree("hom-zinbiel", seed, &check_hom_zinbiel(&c.pf.diamond_algebra()), o_zinbiel(&p.dia, &p.a));
        tally.agree("hom-pre-lie", seed, &check_hom_pre_lie(&c.star), o_pre_lie(&star, &f.a));
        tally.agree("hom-lie-admissible", seed, &check_hom_lie_admissible(&c.star), o_lie_admissible(&star, &f.a));
        tally.agree("hertling-manin", seed, &check_hertling_manin(&c.fm), o_hm(&f));
        tally.agree("hom-f-manifold", seed, &check_hom_f_manifold(&c.fm), o_f_manifold(&f));
        tally.agree("f-admissible", seed, &check_f_admissible(&dot_alg, &c.star).unwrap(), o_f_admissible(&f.dot, &star, &f.a));
        tally.agree("pre-lie-commutative", seed, &check_pre_lie_commutative(&dot_alg, &c.star).unwrap(), o_pre_lie_commutative(&f.dot, &star, &f.a));
        tally.agree("pre-f-manifold", seed, &check_pre_f_manifold(&c.pf), o_pre_f(&p));
        tally.agree("leibniz-decomposition", seed, &check_leibniz_decomposition(&c.pf), o_leib_decomposition(&p));
        tally.agree("derivation", seed, &check_derivation(&dot_alg, &c.der).unwrap(), o_derivation(&f.dot, &f.a, &raw_m(&c.der)));
        for weak in [false, true] {
            let m = if weak { Morphism::weak(c.morph.clone()) } else { Morphism::new(c.morph.clone()) };
            let name = if weak { "weak-morphism" } else { "morphism" };
            tally.agree(name, seed, &check_morphism(&c.fm, &c.fm, &m).unwrap(), o_morphism(&f, &f, &raw_m(&c.morph), weak));
        }
        tally.agree("rep-comm-assoc", seed, &check_rep_comm_assoc(&dot_alg, &c.rep).unwrap(), o_rep_comm_assoc(&f.dot, &f.a, &rep));
        tally.agree("rep-hom-lie", seed, &check_rep_hom_lie(&br_alg, &c.rep).unwrap(), o_rep_hom_lie(&f.br, &f.a, &rep));
        tally.agree("rep-hom-pre-lie", seed, &check_rep_hom_pre_lie(&c.star, &c.pre_lie_rep).unwrap(), o_rep_pre_lie(&star, &f.a, &plr));
        tally.agree("rep-f-manifold", seed, &check_rep_f_manifold(&c.fm, &c.rep).unwrap(), o_rep_f(&f, &rep));
        tally.agree("dual-rep-conditions", seed, &check_dual_rep_conditions(&c.fm, &c.rep).unwrap(), o_dual_conditions(&f, &rep));
        tally.agree("coherence", seed, &check_coherence(&c.fm), o_coherence(&f));

        let op = raw_m(&c.op);
        tally.agree("o-operator-assoc", seed, &check_o_operator_assoc(&c.op, &dot_alg, &c.rep).unwrap(), o_o_operator(&f, &rep, &op, true, false));
        tally.agree("o-operator-lie", seed, &check_o_operator_lie(&c.op, &br_alg, &c.rep).unwrap(), o_o_operator(&f, &rep, &op, false, true));
        tally.agree("o-operator-f-manifold", seed, &check_o_operator_f_manifold(&c.op, &c.fm, &c.rep).unwrap(), o_o_operator(&f, &rep, &op, true, true));

        let form = SymplecticForm::new(c.omega.clone()).unwrap();
        let mut sym = check_symplectic(&c.fm, &form).unwrap();
        sym.notes.clear();
        tally.agree("symplectic", seed, &sym, o_symplectic(&f, &raw_c(&c.omega)));

        let def = Deformation::new(dot_alg.clone(), vec![c.mu1.clone()]).unwrap();
        tally.agree("n-deformation", seed, &check_n_deformation(&def), o_n_deformation(&[f.dot.clone(), raw_c(&c.mu1)], &f.a));

        if c.op.cols() == c.pf.dim() {
            tally.agree("operator-morphism", seed, &check_operator_morphism(&c.op, &c.pf, &c.fm), o_operator_morphism(&p, &f, &op));
            if check_image_subalgebra(&c.op, &c.pf).passed != o_image_subalgebra(&p, &op) {
                tally.mismatches.push(format!("image-subalgebra: verdict differs on seed {seed}"));
            }
        }
    }
    tally
}
