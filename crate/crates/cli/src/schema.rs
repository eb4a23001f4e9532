//! The structure file format: one JSON object per structure, 1-based
//! indices, exact rationals written as `"p/q"` strings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use homf::algebra::{HomAlgebra, HomFManifold, HomPreF};
use homf::cohomology::Cochain;
use homf::deformations::Deformation;
use homf::linalg::{format_scalar, parse_scalar, tuples, BilinearMap, LinearMap, MultiTensor, Scalar};
use homf::operators::SymplecticForm;
use homf::representations::Representation;

use crate::error::{CliError, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    HomAlgebra,
    HomFManifold,
    HomPreF,
    Representation,
    Operator,
    Symplectic,
    Deformation,
    Cochain,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::HomAlgebra => "hom-algebra",
            Kind::HomFManifold => "hom-f-manifold",
            Kind::HomPreF => "hom-pre-f",
            Kind::Representation => "representation",
            Kind::Operator => "operator",
            Kind::Symplectic => "symplectic",
            Kind::Deformation => "deformation",
            Kind::Cochain => "cochain",
        };
        f.write_str(s)
    }
}

/// An exact rational. Reads `"p/q"`, `"p"` or a JSON integer; always
/// writes the canonical string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational(pub Scalar);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Rational(Scalar::from_integer(n.into()))),
            Raw::Text(t) => parse_scalar(&t).map(Rational).map_err(serde::de::Error::custom),
        }
    }
}

/// `[i, j, k, value]`: `e_i ∘ e_j` has `value` on `e_k`.
pub type Entry = (usize, usize, usize, Rational);
/// Row-major matrix.
pub type Grid = Vec<Vec<Rational>>;
/// `[[i_1, …, i_n, k], value]`: `f(e_{i_1}, …, e_{i_n})` has `value` on `e_k`.
pub type CochainEntry = (Vec<usize>, Rational);

/// A structure file. Which optional fields are required depends on `kind`:
///
/// * `hom-algebra`: `product`, `twist`; optional `derivation`
/// * `hom-f-manifold`: `dot`, `bracket`, `twist`; optional `derivation`, `map`
/// * `hom-pre-f`: `diamond`, `star`, `twist`
/// * `representation`: `dot` and `bracket` (or `product` for a Hom-pre-Lie
///   base), `twist`, `module_dim`, `rho` and/or `mu`, `phi`
/// * `operator`: a Hom-F-manifold algebra, `operator`, and optionally
///   representation fields (the adjoint representation otherwise)
/// * `symplectic`: a Hom-F-manifold algebra and `form`
/// * `deformation`: `product`, `twist`, `terms`
/// * `cochain`: `product`, `twist`, optional representation fields,
///   `degree`, `values`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub schema_version: u32,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, Rational>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diamond: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<Grid>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<Grid>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<CochainEntry>>,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn check_index(i: usize, n: usize, field: &str) -> Result<usize> {
    if i == 0 || i > n {
        return Err(bad(format!("{field}: index {i} out of range 1..={n}")));
    }
    Ok(i - 1)
}

pub fn decode_bilinear(entries: &[Entry], left: usize, right: usize, out: usize, field: &str) -> Result<BilinearMap> {
    let mut m = BilinearMap::zeros(left, right, out);
    let mut seen = BTreeSet::new();
    for (i, j, k, v) in entries {
        let idx = (check_index(*i, left, field)?, check_index(*j, right, field)?, check_index(*k, out, field)?);
        if !seen.insert(idx) {
            return Err(bad(format!("{field}: entry ({i},{j},{k}) given twice")));
        }
        m.set(idx.0, idx.1, idx.2, v.0.clone());
    }
    Ok(m)
}

pub fn encode_bilinear(m: &BilinearMap) -> Vec<Entry> {
    m.entries().map(|(i, j, k, v)| (i + 1, j + 1, k + 1, Rational(v.clone()))).collect()
}

pub fn decode_matrix(grid: &Grid, rows: usize, cols: usize, field: &str) -> Result<LinearMap> {
    if grid.len() != rows || grid.iter().any(|r| r.len() != cols) {
        return Err(bad(format!("{field}: expected a {rows}x{cols} matrix")));
    }
    Ok(LinearMap::from_rows(grid.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect())?)
}

pub fn encode_matrix(m: &LinearMap) -> Grid {
    m.to_rows().into_iter().map(|r| r.into_iter().map(Rational).collect()).collect()
}

fn required<'a, T>(field: &'a Option<T>, name: &str, kind: Kind) -> Result<&'a T> {
    field.as_ref().ok_or_else(|| bad(format!("{kind} file needs `{name}`")))
}

impl StructureFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: StructureFile = serde_json::from_str(text)?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(bad(format!("unsupported schema_version {} (expected {SCHEMA_VERSION})", file.schema_version)));
        }
        if file.dim == 0 {
            return Err(bad("dim must be positive"));
        }
        if let Some(basis) = &file.basis {
            if basis.len() != file.dim {
                return Err(bad(format!("basis has {} labels for dim {}", basis.len(), file.dim)));
            }
        }
        Ok(file)
    }

    pub fn to_text(&self) -> String {
        crate::json::to_text(&serde_json::to_value(self).expect("structure files serialize"))
    }

    fn empty(kind: Kind, dim: usize) -> Self {
        StructureFile {
            schema_version: SCHEMA_VERSION,
            kind,
            name: None,
            description: None,
            parameters: BTreeMap::new(),
            dim,
            basis: None,
            twist: None,
            product: None,
            dot: None,
            bracket: None,
            diamond: None,
            star: None,
            derivation: None,
            map: None,
            module_dim: None,
            rho: None,
            mu: None,
            phi: None,
            operator: None,
            form: None,
            terms: None,
            degree: None,
            values: None,
        }
    }

    pub fn named(mut self, name: &str, description: &str) -> Self {
        self.name = Some(name.to_string());
        self.description = Some(description.to_string());
        self
    }

    pub fn with_parameter(mut self, key: &str, value: Scalar) -> Self {
        self.parameters.insert(key.to_string(), Rational(value));
        self
    }

    pub fn with_derivation(mut self, d: &LinearMap) -> Self {
        self.derivation = Some(encode_matrix(d));
        self
    }

    fn labels(mut self, labels: &[String]) -> Self {
        let default: Vec<String> = (1..=labels.len()).map(|i| format!("e{i}")).collect();
        if labels != default.as_slice() {
            self.basis = Some(labels.to_vec());
        }
        self
    }

    fn bilinear(&self, field: &Option<Vec<Entry>>, name: &str) -> Result<BilinearMap> {
        decode_bilinear(required(field, name, self.kind)?, self.dim, self.dim, self.dim, name)
    }

    fn twist_map(&self) -> Result<LinearMap> {
        decode_matrix(required(&self.twist, "twist", self.kind)?, self.dim, self.dim, "twist")
    }

    fn with_labels_of<T>(&self, value: T, f: impl FnOnce(T, Vec<String>) -> homf::Result<T>) -> Result<T> {
        match &self.basis {
            Some(b) => Ok(f(value, b.clone())?),
            None => Ok(value),
        }
    }

    pub fn from_hom_algebra(alg: &HomAlgebra) -> Self {
        let mut f = Self::empty(Kind::HomAlgebra, alg.dim()).labels(alg.labels());
        f.twist = Some(encode_matrix(alg.twist()));
        f.product = Some(encode_bilinear(alg.product()));
        f
    }

    /// The single-product algebra of a `hom-algebra`, `deformation`,
    /// `cochain` or pre-Lie `representation` file.
    pub fn hom_algebra(&self) -> Result<HomAlgebra> {
        let alg = HomAlgebra::new(self.bilinear(&self.product, "product")?, self.twist_map()?)?;
        self.with_labels_of(alg, HomAlgebra::with_labels)
    }

    pub fn from_hom_f_manifold(fm: &HomFManifold) -> Self {
        let mut f = Self::empty(Kind::HomFManifold, fm.dim()).labels(fm.labels());
        f.twist = Some(encode_matrix(fm.twist()));
        f.dot = Some(encode_bilinear(fm.dot()));
        f.bracket = Some(encode_bilinear(fm.bracket()));
        f
    }

    pub fn hom_f_manifold(&self) -> Result<HomFManifold> {
        let fm = HomFManifold::new(self.bilinear(&self.dot, "dot")?, self.bilinear(&self.bracket, "bracket")?, self.twist_map()?)?;
        self.with_labels_of(fm, HomFManifold::with_labels)
    }

    pub fn from_hom_pre_f(pf: &HomPreF) -> Self {
        let mut f = Self::empty(Kind::HomPreF, pf.dim()).labels(pf.labels());
        f.twist = Some(encode_matrix(pf.twist()));
        f.diamond = Some(encode_bilinear(pf.diamond()));
        f.star = Some(encode_bilinear(pf.star()));
        f
    }

    pub fn hom_pre_f(&self) -> Result<HomPreF> {
        let pf = HomPreF::new(self.bilinear(&self.diamond, "diamond")?, self.bilinear(&self.star, "star")?, self.twist_map()?)?;
        self.with_labels_of(pf, HomPreF::with_labels)
    }

    pub fn derivation_map(&self) -> Result<LinearMap> {
        decode_matrix(required(&self.derivation, "derivation", self.kind)?, self.dim, self.dim, "derivation")
    }

    pub fn twisting_map(&self) -> Result<LinearMap> {
        decode_matrix(required(&self.map, "map", self.kind)?, self.dim, self.dim, "map")
    }

    fn set_rep(&mut self, rep: &Representation) {
        self.module_dim = Some(rep.module_dim());
        self.rho = rep.rho().map(|m| m.iter().map(encode_matrix).collect());
        self.mu = rep.mu().map(|m| m.iter().map(encode_matrix).collect());
        self.phi = Some(encode_matrix(rep.phi()));
    }

    fn has_rep(&self) -> bool {
        self.module_dim.is_some() || self.rho.is_some() || self.mu.is_some() || self.phi.is_some()
    }

    /// The representation fields, if any are present.
    pub fn representation(&self) -> Result<Option<Representation>> {
        if !self.has_rep() {
            return Ok(None);
        }
        let m = *required(&self.module_dim, "module_dim", self.kind)?;
        let maps = |field: &Option<Vec<Grid>>, name: &str| -> Result<Option<Vec<LinearMap>>> {
            match field {
                None => Ok(None),
                Some(grids) => {
                    if grids.len() != self.dim {
                        return Err(bad(format!("{name}: expected one matrix per basis element ({})", self.dim)));
                    }
                    let ms = grids.iter().enumerate().map(|(i, g)| decode_matrix(g, m, m, &format!("{name}[{}]", i + 1)));
                    Ok(Some(ms.collect::<Result<_>>()?))
                }
            }
        };
        let phi = decode_matrix(required(&self.phi, "phi", self.kind)?, m, m, "phi")?;
        Ok(Some(Representation::new(self.dim, maps(&self.rho, "rho")?, maps(&self.mu, "mu")?, phi)?))
    }

    pub fn from_representation_of(fm: &HomFManifold, rep: &Representation) -> Self {
        let mut f = Self::from_hom_f_manifold(fm);
        f.kind = Kind::Representation;
        f.set_rep(rep);
        f
    }

    pub fn from_pre_lie_representation(alg: &HomAlgebra, rep: &Representation) -> Self {
        let mut f = Self::from_hom_algebra(alg);
        f.kind = Kind::Representation;
        f.set_rep(rep);
        f
    }

    pub fn required_representation(&self) -> Result<Representation> {
        self.representation()?.ok_or_else(|| bad(format!("{} file needs `module_dim`, `rho`/`mu` and `phi`", self.kind)))
    }

    pub fn from_operator(fm: &HomFManifold, rep: &Representation, t: &LinearMap) -> Self {
        let mut f = Self::from_representation_of(fm, rep);
        f.kind = Kind::Operator;
        f.operator = Some(encode_matrix(t));
        f
    }

    /// The map `T: V → A` and its representation (the adjoint one when the
    /// file gives none).
    pub fn operator_parts(&self, fm: &HomFManifold) -> Result<(LinearMap, Representation)> {
        let rep = self.representation()?.unwrap_or_else(|| Representation::adjoint(fm));
        let t = decode_matrix(required(&self.operator, "operator", self.kind)?, self.dim, rep.module_dim(), "operator")?;
        Ok((t, rep))
    }

    pub fn from_symplectic(fm: &HomFManifold, omega: &SymplecticForm) -> Self {
        let mut f = Self::from_hom_f_manifold(fm);
        f.kind = Kind::Symplectic;
        let d = fm.dim();
        let grid = (0..d).map(|i| (0..d).map(|j| Rational(omega.form().get(i, j, 0).clone())).collect()).collect();
        f.form = Some(grid);
        f
    }

    pub fn symplectic_form(&self) -> Result<SymplecticForm> {
        let m = decode_matrix(required(&self.form, "form", self.kind)?, self.dim, self.dim, "form")?;
        let mut omega = BilinearMap::zeros(self.dim, self.dim, 1);
        for i in 0..self.dim {
            for j in 0..self.dim {
                omega.set(i, j, 0, m.get(i, j).clone());
            }
        }
        Ok(SymplecticForm::new(omega)?)
    }

    pub fn from_deformation(d: &Deformation) -> Self {
        let mut f = Self::from_hom_algebra(d.base());
        f.kind = Kind::Deformation;
        f.terms = Some(d.terms().iter().map(encode_bilinear).collect());
        f
    }

    pub fn deformation(&self) -> Result<Deformation> {
        let base = self.hom_algebra()?;
        let terms = required(&self.terms, "terms", self.kind)?
            .iter()
            .enumerate()
            .map(|(k, t)| decode_bilinear(t, self.dim, self.dim, self.dim, &format!("terms[{}]", k + 1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Deformation::new(base, terms)?)
    }

    pub fn from_cochain(alg: &HomAlgebra, rep: Option<&Representation>, c: &Cochain) -> Self {
        let mut f = Self::from_hom_algebra(alg);
        f.kind = Kind::Cochain;
        if let Some(rep) = rep {
            f.set_rep(rep);
        }
        f.degree = Some(c.degree());
        let t = c.tensor();
        let values = tuples(c.alg_dim(), c.degree())
            .flat_map(|args| {
                (0..c.module_dim()).filter_map(move |k| {
                    let mut idx = args.clone();
                    idx.push(k);
                    let v = t.get(&idx).clone();
                    (v != Scalar::from_integer(0.into())).then(|| (idx.iter().map(|i| i + 1).collect(), Rational(v)))
                })
            })
            .collect();
        f.values = Some(values);
        f
    }

    pub fn cochain(&self, module_dim: usize) -> Result<Cochain> {
        let n = *required(&self.degree, "degree", self.kind)?;
        if n == 0 {
            return Err(bad("cochain degree must be at least 1"));
        }
        let mut dims = vec![self.dim; n];
        dims.push(module_dim);
        let mut t = MultiTensor::zeros(dims.clone());
        let mut seen = BTreeSet::new();
        for (idx, v) in required(&self.values, "values", self.kind)? {
            if idx.len() != n + 1 {
                return Err(bad(format!("values: index {idx:?} needs {} entries", n + 1)));
            }
            let zero_based = idx.iter().zip(&dims).map(|(&i, &d)| check_index(i, d, "values")).collect::<Result<Vec<_>>>()?;
            if !seen.insert(zero_based.clone()) {
                return Err(bad(format!("values: index {idx:?} given twice")));
            }
            t.set(&zero_based, v.0.clone());
        }
        Ok(Cochain::new(t)?)
    }
}
