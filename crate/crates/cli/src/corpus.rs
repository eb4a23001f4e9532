//! The shipped fixture files, generated from the library's example
//! structures.

use homf::algebra::HomAlgebra;
use homf::constructions::derivation_product;
use homf::deformations::Deformation;
use homf::fixtures;
use homf::linalg::{int, ratio, zero, BilinearMap, LinearMap, Scalar};
use homf::operators::{pre_f_from_symplectic, rota_baxter_induced, SymplecticForm};
use homf::representations::Representation;

use crate::schema::StructureFile;

fn a2_file(b: i64, a: i64) -> (String, StructureFile) {
    let (bs, as_) = (int(b), int(a));
    let f = StructureFile::from_hom_f_manifold(&fixtures::a2(&bs, &as_))
        .named(
            &format!("a2_b{b}_a{a}"),
            "Two-dimensional Hom-F-manifold algebra: e1·e1 = e1, e1·e2 = e2·e1 = b e2, [e1,e2] = ab e2, twist diag(1, b). \
             The derivation e2 ↦ a e2 gives the bracket as the commutator of x·D(y).",
        )
        .with_parameter("a", as_.clone())
        .with_parameter("b", bs)
        .with_derivation(&fixtures::a2_derivation(&as_));
    (format!("a2_b{b}_a{a}.json"), f)
}

const A3: &str = "Three-dimensional Hom-F-manifold algebra: e2·e3 = e3·e2 = b³e1, e3·e3 = b²e2, [e2,e3] = −b³e1, \
                  twist diag(b³, b², b). The bracket is the commutator of x·D(y) for the derivation D = diag(3, 2, 1).";

fn b_tag(b: &Scalar) -> String {
    homf::linalg::format_scalar(b).replace('/', "_")
}

fn a3_file(b: &Scalar) -> (String, StructureFile) {
    let name = format!("a3_b{}", b_tag(b));
    let f = StructureFile::from_hom_f_manifold(&fixtures::a3(b))
        .named(&name, A3)
        .with_parameter("b", b.clone())
        .with_derivation(&fixtures::d3());
    (format!("{name}.json"), f)
}

fn r3_file(b: &Scalar) -> (String, StructureFile) {
    let fm = fixtures::a3(b);
    let name = format!("r3_a3_b{}", b_tag(b));
    let f = StructureFile::from_operator(&fm, &Representation::adjoint(&fm), &fixtures::r3())
        .named(
            &name,
            "Rota-Baxter operator R = diag(1/3, 1/2, 1) of weight zero on a3, as an O-operator for the adjoint \
             representation (rho = ad, mu = left multiplication).",
        )
        .with_parameter("b", b.clone());
    (format!("{name}.json"), f)
}

fn entries(dim: usize, list: &[(usize, usize, usize, i64)]) -> BilinearMap {
    let mut p = BilinearMap::square(dim);
    for &(i, j, k, v) in list {
        p.set(i - 1, j - 1, k - 1, int(v));
    }
    p
}

/// Every fixture as `(file name, contents)`, in a fixed order.
pub fn corpus() -> Vec<(String, StructureFile)> {
    let one = int(1);
    let a3_alg = fixtures::a3_algebra(&one);
    let a3 = fixtures::a3(&one);
    let star = derivation_product(&a3_alg, &fixtures::d3(), &zero()).expect("D is a derivation of a3");

    let mut out = vec![a2_file(2, 3), a2_file(1, 1)];
    for b in [int(1), int(2), ratio(1, 2)] {
        out.push(a3_file(&b));
    }
    out.push((
        "d3_a3_b1.json".into(),
        StructureFile::from_hom_algebra(&a3_alg)
            .named("d3_a3_b1", "Commutative Hom-associative algebra of a3 at b = 1 with its derivation D = diag(3, 2, 1).")
            .with_parameter("b", one.clone())
            .with_derivation(&fixtures::d3()),
    ));
    out.push((
        "a3_b1_pre_lie.json".into(),
        StructureFile::from_hom_algebra(&star)
            .named("a3_b1_pre_lie", "Hom-pre-Lie algebra x∗y = x·D(y) on a3 at b = 1, D = diag(3, 2, 1).")
            .with_parameter("b", one.clone()),
    ));
    out.push(r3_file(&one));
    out.push(r3_file(&int(2)));
    out.push((
        "induced_r3_a3_b1.json".into(),
        StructureFile::from_hom_pre_f(&rota_baxter_induced(&fixtures::r3(), &a3).expect("R is an O-operator"))
            .named(
                "induced_r3_a3_b1",
                "Hom-pre-F-manifold algebra induced on a3 (b = 1) by R = diag(1/3, 1/2, 1): x⋄y = R(x)·y, x∗y = [R(x),y].",
            )
            .with_parameter("b", one.clone()),
    ));
    out.push((
        "lie2_pre_f.json".into(),
        StructureFile::from_hom_pre_f(
            &pre_f_from_symplectic(&fixtures::lie2(), &SymplecticForm::new(fixtures::omega2()).expect("antisymmetric"))
                .expect("lie2 is coherent"),
        )
        .named("lie2_pre_f", "Hom-pre-F-manifold algebra of the symplectic form ω(e1,e2) = 1 on the Lie algebra [e1,e2] = e2."),
    ));
    out.push((
        "adjoint_a3_b1.json".into(),
        StructureFile::from_representation_of(&a3, &Representation::adjoint(&a3))
            .named("adjoint_a3_b1", "Adjoint representation (ad, L, α) of a3 at b = 1.")
            .with_parameter("b", one.clone()),
    ));
    let a2 = fixtures::a2(&int(2), &int(3));
    let adj = Representation::adjoint(&a2);
    let doubled: Vec<_> = adj.mu().expect("adjoint has mu").iter().map(|m| m.scale(&int(2))).collect();
    let broken = Representation::new(2, adj.rho().map(<[_]>::to_vec), Some(doubled), adj.phi().clone()).expect("shapes");
    out.push((
        "doubled_mu_a2_b2_a3.json".into(),
        StructureFile::from_representation_of(&a2, &broken)
            .named("doubled_mu_a2_b2_a3", "Not a representation: the adjoint of a2 (b = 2, a = 3) with mu doubled.")
            .with_parameter("a", int(3))
            .with_parameter("b", int(2)),
    ));
    out.push((
        "deformation_a3_b1.json".into(),
        StructureFile::from_deformation(&Deformation::new(a3_alg.clone(), vec![star.product().clone()]).expect("shapes"))
            .named(
                "deformation_a3_b1",
                "First-order Hom-pre-Lie deformation of the product of a3 (b = 1) by mu1(x, y) = x·D(y). \
                 Its semi-classical limit is a3 with [e2,e3] = −e1.",
            )
            .with_parameter("b", one.clone()),
    ));
    out.push((
        "obstructed_a3_b1.json".into(),
        StructureFile::from_deformation(
            &Deformation::new(a3_alg, vec![entries(3, &[(1, 2, 1, 2), (1, 3, 2, 1)])]).expect("shapes"),
        )
        .named(
            "obstructed_a3_b1",
            "First-order deformation of the product of a3 (b = 1) with mu1(e1,e2) = 2e1, mu1(e1,e3) = e2. \
             It satisfies the first-order rule but its obstruction class is nonzero.",
        )
        .with_parameter("b", one.clone()),
    ));
    out.push((
        "poisson3_c2.json".into(),
        StructureFile::from_hom_f_manifold(&fixtures::poisson3(&int(2)))
            .named(
                "poisson3_c2",
                "Hom-Poisson algebra: e1 a unit, e2 and e3 square-zero, [e2,e3] = e3, Yau-twisted by diag(1, 1, c).",
            )
            .with_parameter("c", int(2)),
    ));
    out.push((
        "lie2_symplectic.json".into(),
        StructureFile::from_symplectic(&fixtures::lie2(), &SymplecticForm::new(fixtures::omega2()).expect("antisymmetric"))
            .named("lie2_symplectic", "Two-dimensional Lie algebra [e1,e2] = e2 with zero product and ω(e1,e2) = 1."),
    ));
    out.push((
        "noncoherent3.json".into(),
        StructureFile::from_hom_f_manifold(&fixtures::noncoherent3())
            .named("noncoherent3", "F-manifold algebra e1·e2 = e3, [e2,e3] = e2 that fails both coherence identities."),
    ));
    let abelian = HomAlgebra::new(BilinearMap::square(1), LinearMap::identity(1)).expect("shapes");
    out.push((
        "abelian1.json".into(),
        StructureFile::from_hom_algebra(&abelian).named("abelian1", "One-dimensional algebra with zero product and identity twist."),
    ));
    out
}
