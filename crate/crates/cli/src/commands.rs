//! The verbs behind the `homf` binary, as plain functions from parsed
//! inputs to a report and an optional output structure.

use std::path::Path;

use homf::algebra::*;
use homf::cohomology::{check_d_squared, cohomology_dims, random_cochain, ComplexContext};
use homf::constructions::{
    check_derivation, derivation_product, direct_sum, subadjacent_from_admissible, subadjacent_from_pre_f, tensor_product,
    yau_twist,
};
use homf::deformations::{
    check_infinitesimal_cocycle, check_n_deformation, check_theta_closed, extend_deformation, obstruction_theta,
    semiclassical_limit, Deformation,
};
use homf::linalg::{zero, BilinearMap, Scalar};
use homf::operators::*;
use homf::representations::*;
use homf::CheckReport;

use crate::error::{CliError, Result};
use crate::report::{digest, DimsRecord, ReportFile};
use crate::schema::{Kind, StructureFile};

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub max_witnesses: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_witnesses: homf::report::DEFAULT_MAX_WITNESSES, seed: 0 }
    }
}

/// A parsed input file and the digest of its bytes.
#[derive(Clone, Debug)]
pub struct Input {
    pub file: StructureFile,
    pub digest: String,
}

impl Input {
    pub fn from_text(text: &str) -> Result<Self> {
        Ok(Input { file: StructureFile::parse(text)?, digest: digest(text.as_bytes()) })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Self::from_text(&text)
    }
}

pub struct Outcome {
    pub report: ReportFile,
    pub artifact: Option<StructureFile>,
}

fn unknown(what: &str, name: &str, kind: Kind, known: &[&str]) -> CliError {
    CliError::Input(format!("unknown {what} `{name}` for a {kind} file; expected one of: {}", known.join(", ")))
}

fn expect_kind(f: &StructureFile, allowed: &[Kind]) -> Result<()> {
    if allowed.contains(&f.kind) {
        return Ok(());
    }
    let names: Vec<String> = allowed.iter().map(Kind::to_string).collect();
    Err(CliError::Input(format!("a {} file does not fit here; expected {}", f.kind, names.join(" or "))))
}

/// Check names accepted for each kind of file.
pub fn checks_for(kind: Kind) -> &'static [&'static str] {
    match kind {
        Kind::HomAlgebra => &["comm-hom-assoc", "hom-lie", "hom-zinbiel", "hom-pre-lie", "hom-lie-admissible", "derivation"],
        Kind::HomFManifold => &["hom-f-manifold", "hertling-manin", "coherence", "comm-hom-assoc", "hom-lie", "derivation"],
        Kind::HomPreF => &["pre-f-manifold", "leibniz-decomposition", "hom-zinbiel", "hom-pre-lie"],
        Kind::Representation => &[
            "rep-f-manifold",
            "rep-comm-assoc",
            "rep-hom-lie",
            "rep-hom-pre-lie",
            "dual-rep-conditions",
            "dual-pairing",
            "dual-l-lemma",
        ],
        Kind::Operator => &["o-operator-f-manifold", "o-operator-assoc", "o-operator-lie", "image-subalgebra", "operator-morphism"],
        Kind::Symplectic => &["symplectic"],
        Kind::Deformation => &["n-deformation", "infinitesimal-cocycle", "obstruction-closed"],
        Kind::Cochain => &["d-squared"],
    }
}

/// The complex of a `hom-algebra`, pre-Lie `representation` or `cochain`
/// file: its representation if it has one, the adjoint one otherwise.
fn complex(f: &StructureFile) -> Result<ComplexContext> {
    let alg = f.hom_algebra()?;
    Ok(match f.representation()? {
        Some(rep) => ComplexContext::new(alg, rep)?,
        None => ComplexContext::adjoint(alg)?,
    })
}

fn first_term(d: &Deformation) -> Result<&BilinearMap> {
    d.terms().first().ok_or_else(|| CliError::Input("deformation has no first-order term".into()))
}

fn run_check(name: &str, f: &StructureFile) -> Result<CheckReport> {
    let kind = f.kind;
    let known = checks_for(kind);
    if !known.contains(&name) {
        return Err(unknown("check", name, kind, known));
    }
    let report = match kind {
        Kind::HomAlgebra => {
            let alg = f.hom_algebra()?;
            match name {
                "comm-hom-assoc" => check_comm_hom_assoc(&alg),
                "hom-lie" => check_hom_lie(&alg),
                "hom-zinbiel" => check_hom_zinbiel(&alg),
                "hom-pre-lie" => check_hom_pre_lie(&alg),
                "hom-lie-admissible" => check_hom_lie_admissible(&alg),
                _ => check_derivation(&alg, &f.derivation_map()?)?,
            }
        }
        Kind::HomFManifold => {
            let fm = f.hom_f_manifold()?;
            match name {
                "hom-f-manifold" => check_hom_f_manifold(&fm),
                "hertling-manin" => check_hertling_manin(&fm),
                "coherence" => check_coherence(&fm),
                "comm-hom-assoc" => check_comm_hom_assoc(&fm.dot_algebra()),
                "hom-lie" => check_hom_lie(&fm.bracket_algebra()),
                _ => check_derivation(&fm.dot_algebra(), &f.derivation_map()?)?,
            }
        }
        Kind::HomPreF => {
            let pf = f.hom_pre_f()?;
            match name {
                "pre-f-manifold" => check_pre_f_manifold(&pf),
                "leibniz-decomposition" => check_leibniz_decomposition(&pf),
                "hom-zinbiel" => check_hom_zinbiel(&pf.diamond_algebra()),
                _ => check_hom_pre_lie(&pf.star_algebra()),
            }
        }
        Kind::Representation => {
            let rep = f.required_representation()?;
            if name == "rep-hom-pre-lie" {
                check_rep_hom_pre_lie(&f.hom_algebra()?, &rep)?
            } else {
                let fm = f.hom_f_manifold()?;
                match name {
                    "rep-f-manifold" => check_rep_f_manifold(&fm, &rep)?,
                    "rep-comm-assoc" => check_rep_comm_assoc(&fm.dot_algebra(), &rep)?,
                    "rep-hom-lie" => check_rep_hom_lie(&fm.bracket_algebra(), &rep)?,
                    "dual-rep-conditions" => check_dual_rep_conditions(&fm, &rep)?,
                    "dual-pairing" => check_dual_pairing(&rep, fm.twist())?,
                    _ => check_dual_l_lemma(&fm, &rep)?,
                }
            }
        }
        Kind::Operator => {
            let fm = f.hom_f_manifold()?;
            let (t, rep) = f.operator_parts(&fm)?;
            match name {
                "o-operator-f-manifold" => check_o_operator_f_manifold(&t, &fm, &rep)?,
                "o-operator-assoc" => check_o_operator_assoc(&t, &fm.dot_algebra(), &rep)?,
                "o-operator-lie" => check_o_operator_lie(&t, &fm.bracket_algebra(), &rep)?,
                "image-subalgebra" => check_image_subalgebra(&t, &induced_pre_f(&t, &fm, &rep)?),
                _ => check_operator_morphism(&t, &induced_pre_f(&t, &fm, &rep)?, &fm),
            }
        }
        Kind::Symplectic => check_symplectic(&f.hom_f_manifold()?, &f.symplectic_form()?)?,
        Kind::Deformation => {
            let d = f.deformation()?;
            match name {
                "n-deformation" => check_n_deformation(&d),
                "infinitesimal-cocycle" => check_infinitesimal_cocycle(d.base(), first_term(&d)?)?,
                _ => check_theta_closed(&d)?,
            }
        }
        Kind::Cochain => {
            let ctx = complex(f)?;
            let c = f.cochain(ctx.rep().module_dim())?;
            check_d_squared(&ctx, &c)?
        }
    };
    Ok(report)
}

/// `check NAME`: one verdict.
pub fn check(name: &str, input: &Input, opts: Options) -> Result<Outcome> {
    let r = run_check(name, &input.file)?;
    let mut report = ReportFile::new(format!("check {name}"), vec![input.digest.clone()]);
    report.push(&r, opts.max_witnesses);
    Ok(Outcome { report, artifact: None })
}

pub const CONSTRUCTIONS: &[&str] = &[
    "direct-sum",
    "tensor-product",
    "yau-twist",
    "derivation-pre-lie",
    "derivation-f-manifold",
    "derivation-deformation",
    "subadjacent",
    "adjoint",
    "coadjoint",
    "dual-rep",
    "semidirect",
    "induced-pre-f",
    "compatible-pre-f",
    "symplectic-pre-f",
];

fn one_input<'a>(inputs: &'a [Input], name: &str) -> Result<&'a StructureFile> {
    match inputs {
        [one] => Ok(&one.file),
        _ => Err(CliError::Input(format!("{name} takes one input, got {}", inputs.len()))),
    }
}

/// The commutative algebra of a file carrying a `derivation`.
fn derivation_base(f: &StructureFile) -> Result<HomAlgebra> {
    expect_kind(f, &[Kind::HomAlgebra, Kind::HomFManifold])?;
    Ok(match f.kind {
        Kind::HomAlgebra => f.hom_algebra()?,
        _ => f.hom_f_manifold()?.dot_algebra(),
    })
}

fn build(name: &str, inputs: &[Input], lambda: &Scalar) -> Result<(StructureFile, Vec<String>)> {
    let mut notes = Vec::new();
    let out = match name {
        "direct-sum" | "tensor-product" => {
            let [a, b] = inputs else {
                return Err(CliError::Input(format!("{name} takes two inputs, got {}", inputs.len())));
            };
            expect_kind(&a.file, &[Kind::HomFManifold])?;
            expect_kind(&b.file, &[Kind::HomFManifold])?;
            let (x, y) = (a.file.hom_f_manifold()?, b.file.hom_f_manifold()?);
            let fm = if name == "direct-sum" { direct_sum(&x, &y)? } else { tensor_product(&x, &y)? };
            StructureFile::from_hom_f_manifold(&fm)
        }
        "yau-twist" => {
            let f = one_input(inputs, name)?;
            expect_kind(f, &[Kind::HomFManifold])?;
            let y = yau_twist(&f.hom_f_manifold()?, &f.twisting_map()?)?;
            if y.unverified {
                notes.push("input twist is not the identity; validity rests on the recheck".to_string());
            }
            StructureFile::from_hom_f_manifold(&y.algebra)
        }
        "derivation-pre-lie" | "derivation-f-manifold" | "derivation-deformation" => {
            let f = one_input(inputs, name)?;
            let alg = derivation_base(f)?;
            let star = derivation_product(&alg, &f.derivation_map()?, lambda)?;
            match name {
                "derivation-pre-lie" => StructureFile::from_hom_algebra(&star),
                "derivation-f-manifold" => StructureFile::from_hom_f_manifold(&subadjacent_from_admissible(&alg, &star)?),
                _ => StructureFile::from_deformation(&Deformation::new(alg, vec![star.product().clone()])?),
            }
        }
        "subadjacent" => {
            let f = one_input(inputs, name)?;
            expect_kind(f, &[Kind::HomPreF])?;
            StructureFile::from_hom_f_manifold(&subadjacent_from_pre_f(&f.hom_pre_f()?)?)
        }
        "adjoint" | "coadjoint" => {
            let f = one_input(inputs, name)?;
            expect_kind(f, &[Kind::HomFManifold])?;
            let fm = f.hom_f_manifold()?;
            let rep = if name == "adjoint" { Representation::adjoint(&fm) } else { coadjoint(&fm)? };
            StructureFile::from_representation_of(&fm, &rep)
        }
        "dual-rep" | "semidirect" => {
            let f = one_input(inputs, name)?;
            expect_kind(f, &[Kind::Representation])?;
            let fm = f.hom_f_manifold()?;
            let rep = f.required_representation()?;
            if name == "dual-rep" {
                StructureFile::from_representation_of(&fm, &dual_rep_f_manifold(&fm, &rep)?)
            } else {
                StructureFile::from_hom_f_manifold(&semidirect_product(&fm, &rep)?)
            }
        }
        "induced-pre-f" | "compatible-pre-f" => {
            let f = one_input(inputs, name)?;
            expect_kind(f, &[Kind::Operator])?;
            let fm = f.hom_f_manifold()?;
            let (t, rep) = f.operator_parts(&fm)?;
            let pf = if name == "induced-pre-f" { induced_pre_f(&t, &fm, &rep)? } else { compatible_from_invertible_o(&t, &fm, &rep)? };
            StructureFile::from_hom_pre_f(&pf)
        }
        "symplectic-pre-f" => {
            let f = one_input(inputs, name)?;
            expect_kind(f, &[Kind::Symplectic])?;
            StructureFile::from_hom_pre_f(&pre_f_from_symplectic(&f.hom_f_manifold()?, &f.symplectic_form()?)?)
        }
        _ => return Err(CliError::Input(format!("unknown construction `{name}`; expected one of: {}", CONSTRUCTIONS.join(", ")))),
    };
    Ok((out, notes))
}

/// The check a constructed file is re-validated with.
fn recheck_name(kind: Kind) -> &'static str {
    match kind {
        Kind::HomAlgebra => "hom-pre-lie",
        Kind::HomFManifold => "hom-f-manifold",
        Kind::HomPreF => "pre-f-manifold",
        Kind::Representation => "rep-f-manifold",
        Kind::Deformation => "n-deformation",
        Kind::Operator => "o-operator-f-manifold",
        Kind::Symplectic => "symplectic",
        Kind::Cochain => "d-squared",
    }
}

/// Writes `artifact` to text and reads it back, so that every verdict on an
/// output is a verdict on what lands on disk.
fn reread(artifact: &StructureFile) -> Result<StructureFile> {
    StructureFile::parse(&artifact.to_text())
}

fn attach(report: &mut ReportFile, artifact: &StructureFile) {
    report.output_digest = Some(digest(artifact.to_text().as_bytes()));
}

fn finish(mut report: ReportFile, artifact: StructureFile, check: &str, opts: Options) -> Result<Outcome> {
    let artifact = reread(&artifact)?;
    report.push(&run_check(check, &artifact)?, opts.max_witnesses);
    attach(&mut report, &artifact);
    Ok(Outcome { report, artifact: Some(artifact) })
}

/// `construct NAME`: builds a structure from the inputs and rechecks it.
pub fn construct(name: &str, inputs: &[Input], lambda: &Scalar, opts: Options) -> Result<Outcome> {
    let (mut artifact, notes) = build(name, inputs, lambda)?;
    let sources: Vec<&str> = inputs.iter().filter_map(|i| i.file.name.as_deref()).collect();
    if sources.len() == inputs.len() {
        artifact.name = Some(format!("{name}({})", sources.join(", ")));
    }
    if *lambda != zero() && name.starts_with("derivation-") {
        artifact = artifact.with_parameter("lambda", lambda.clone());
    }
    let mut report = ReportFile::new(format!("construct {name}"), inputs.iter().map(|i| i.digest.clone()).collect());
    report.messages = notes;
    let check = recheck_name(artifact.kind);
    finish(report, artifact, check, opts)
}

/// `cohomology --degree N`: dimensions of `C^N`, `Z^N`, `B^N`, `H^N`, and
/// `∂∂ = 0` on `samples` seeded random cochains of degree `N`.
pub fn cohomology(input: &Input, degree: usize, samples: usize, opts: Options) -> Result<Outcome> {
    let f = &input.file;
    expect_kind(f, &[Kind::HomAlgebra, Kind::Representation, Kind::Cochain])?;
    let ctx = complex(f)?;
    let dims = cohomology_dims(&ctx, degree)?;
    let mut report = ReportFile::new(format!("cohomology --degree {degree}"), vec![input.digest.clone()]);
    report.cohomology = Some(DimsRecord {
        degree,
        cochains: dims.cochains,
        cocycles: dims.cocycles,
        coboundaries: dims.coboundaries,
        cohomology: dims.cohomology,
    });
    let (d, m) = (ctx.algebra().dim(), ctx.rep().module_dim());
    let mut sq = CheckReport::new("d-squared");
    for k in 0..samples as u64 {
        let c = random_cochain(degree, d, m, opts.seed.wrapping_add(k))?;
        sq.absorb(check_d_squared(&ctx, &c)?);
    }
    sq.note(format!("{samples} random cochains from seed {}", opts.seed));
    report.push(&sq, opts.max_witnesses);
    Ok(Outcome { report, artifact: None })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeformAction {
    Check,
    Limit,
    Theta,
    Extend,
}

pub const OBSTRUCTED: &str = "obstruction class nonzero";

/// `deform ACTION` on a deformation file.
pub fn deform(action: DeformAction, input: &Input, opts: Options) -> Result<Outcome> {
    let f = &input.file;
    expect_kind(f, &[Kind::Deformation])?;
    let d = f.deformation()?;
    let verb = match action {
        DeformAction::Check => "check",
        DeformAction::Limit => "limit",
        DeformAction::Theta => "theta",
        DeformAction::Extend => "extend",
    };
    let mut report = ReportFile::new(format!("deform {verb}"), vec![input.digest.clone()]);
    let named = |mut a: StructureFile| {
        a.name = f.name.as_ref().map(|n| format!("{verb}({n})"));
        a
    };
    match action {
        DeformAction::Check => {
            report.push(&check_n_deformation(&d), opts.max_witnesses);
            Ok(Outcome { report, artifact: None })
        }
        DeformAction::Limit => {
            let limit = named(StructureFile::from_hom_f_manifold(&semiclassical_limit(&d)?));
            finish(report, limit, "hom-f-manifold", opts)
        }
        DeformAction::Theta => {
            let artifact = reread(&named(StructureFile::from_cochain(d.base(), None, &obstruction_theta(&d)?)))?;
            report.push(&check_theta_closed(&d)?, opts.max_witnesses);
            attach(&mut report, &artifact);
            Ok(Outcome { report, artifact: Some(artifact) })
        }
        DeformAction::Extend => match extend_deformation(&d)? {
            Some(next) => {
                let extended = named(StructureFile::from_deformation(&d.extended(next)?));
                finish(report, extended, "n-deformation", opts)
            }
            None => {
                report.fail_with(OBSTRUCTED);
                Ok(Outcome { report, artifact: None })
            }
        },
    }
}
