//! Workspace files, reports and the commands behind the `xmodlie` binary.
//!
//! A workspace is one or more TOML documents with the array-of-table
//! sections `algebra`, `action`, `hom`, `xmod`, `braided` and `morphism`.
//! Sections are resolved in that order across all documents, so a name may
//! only refer to objects of an earlier section or earlier in the same
//! section. Names are unique across the whole workspace. Basis indices in
//! files are 1-based and rationals are integers or `"p/q"` strings.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::braid::{
    braided_center, braided_commutator, classify_braided_extension, is_perfect_braided,
    is_perfect_xmod, non_perfect_witness, product_braided, verify_braiding, BraidedMorphism,
    BraidedProduct, BraidedXMod, Braiding,
};
use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, rat, RatMatrix, Rational, Subspace};
use crate::liealg::{verify_lie, LieAlgebra, LieHom};
use crate::natensor::{induced_hom, TensorPresentation};
use crate::uce::{
    check_perfect_base_lemmas, compare_uce, compatible_uce, mediating_morphism,
    tensor_braided_xmod, universal_central_extension, Uce, UceResult,
};
use crate::xmod::{
    classify_xmod_extension, verify_action, verify_xmod, Action, CrossedModule, ExtensionClass,
};

/// The shipped example corpus, `(file name, contents)`.
pub const CORPUS: &[(&str, &str)] = &[
    ("abelian.toml", include_str!("../corpus/abelian.toml")),
    ("sl2.toml", include_str!("../corpus/sl2.toml")),
    ("h3.toml", include_str!("../corpus/h3.toml")),
    ("k2k3.toml", include_str!("../corpus/k2k3.toml")),
];

pub const DEMOS: &[&str] = &["k2k3", "sl2-uce", "sl2-corollary"];

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

type Entry = (usize, usize, usize, Scalar);

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(default)]
    algebra: Vec<AlgebraDef>,
    #[serde(default)]
    action: Vec<ActionDef>,
    #[serde(default)]
    hom: Vec<HomDef>,
    #[serde(default)]
    xmod: Vec<XModDef>,
    #[serde(default)]
    braided: Vec<BraidedDef>,
    #[serde(default)]
    morphism: Vec<MorphismDef>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum AlgebraDef {
    Abelian {
        name: String,
        dim: usize,
        basis: Option<Vec<String>>,
    },
    Structure {
        name: String,
        dim: usize,
        basis: Option<Vec<String>>,
        #[serde(default)]
        brackets: Vec<Entry>,
    },
    TensorSquare {
        name: String,
        of: String,
    },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum ActionDef {
    Adjoint {
        name: String,
        of: String,
    },
    Zero {
        name: String,
        actor: String,
        module: String,
    },
    /// `[j, i, k, v]`: `e_j · e_i` has coefficient `v` on `e_k`.
    Entries {
        name: String,
        actor: String,
        module: String,
        entries: Vec<Entry>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomDef {
    name: String,
    source: String,
    target: String,
    /// `"identity"` or `"zero"` when no matrix is given.
    kind: Option<String>,
    matrix: Option<Vec<Vec<Scalar>>>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum XModDef {
    Identity {
        name: String,
        of: String,
    },
    Tensor {
        name: String,
        of: String,
    },
    Explicit {
        name: String,
        boundary: String,
        action: String,
    },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum BraidedDef {
    Identity {
        name: String,
        of: String,
    },
    Tensor {
        name: String,
        of: String,
    },
    Product {
        name: String,
        left: String,
        right: String,
    },
    Explicit {
        name: String,
        xmod: String,
        braiding: BraidingSpec,
    },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum BraidingSpec {
    /// `"bracket"` or `"zero"`.
    Named(String),
    /// `[j, j2, i, v]`: `{e_j, e_j2}` has coefficient `v` on `e_i`.
    Entries { entries: Vec<Entry> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismDef {
    name: String,
    source: String,
    target: String,
    f1: MapSpec,
    f2: MapSpec,
    expect: Option<Expectation>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum MapSpec {
    /// `"identity"`, `"zero"`, `"project-left"` or `"project-right"`.
    Named(String),
    Hom {
        hom: String,
    },
    TensorOf {
        tensor_of: String,
    },
    Matrix {
        matrix: Vec<Vec<Scalar>>,
    },
}

/// Expected classification flags of a morphism; unset flags are not checked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub extension: Option<bool>,
    pub central: Option<bool>,
    pub compatible_central: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct MorphismEntry {
    pub morphism: BraidedMorphism,
    pub expect: Option<Expectation>,
}

/// Named objects in definition order.
#[derive(Clone, Debug)]
struct Table<T> {
    kind: &'static str,
    items: Vec<(String, T)>,
}

impl<T> Table<T> {
    fn new(kind: &'static str) -> Self {
        Self {
            kind,
            items: Vec::new(),
        }
    }

    fn get(&self, name: &str) -> Result<&T> {
        self.items
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::Unresolved {
                kind: self.kind.into(),
                name: name.into(),
            })
    }

    fn try_get(&self, name: &str) -> Option<&T> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

/// Loaded and verified definitions.
#[derive(Clone, Debug)]
pub struct Workspace {
    algebras: Table<Arc<LieAlgebra>>,
    actions: Table<Action>,
    homs: Table<LieHom>,
    xmods: Table<CrossedModule>,
    braided: Table<BraidedXMod>,
    morphisms: Table<MorphismEntry>,
    /// Tensor squares keyed by the name of the algebra they present.
    squares: HashMap<String, TensorPresentation>,
    products: HashMap<String, BraidedProduct>,
    names: HashMap<String, &'static str>,
}

fn parse_err(location: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn scalar(location: &str, s: &Scalar) -> Result<Rational> {
    match s {
        Scalar::Int(i) => Ok(rat(*i)),
        Scalar::Text(t) => parse_rational(t)
            .ok_or_else(|| parse_err(location, format!("`{t}` is not a rational of the form p/q"))),
    }
}

fn index(location: &str, i: usize, dim: usize) -> Result<usize> {
    if i == 0 || i > dim {
        return Err(parse_err(
            location,
            format!("basis index {i} out of range 1..={dim}"),
        ));
    }
    Ok(i - 1)
}

fn matrix(location: &str, rows: &[Vec<Scalar>], nrows: usize, ncols: usize) -> Result<RatMatrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(parse_err(
            location,
            format!("matrix must be {nrows} x {ncols}"),
        ));
    }
    let entries = rows
        .iter()
        .flatten()
        .map(|s| scalar(location, s))
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_entries(nrows, ncols, entries)
}

impl Workspace {
    pub fn empty() -> Self {
        Self {
            algebras: Table::new("algebra"),
            actions: Table::new("action"),
            homs: Table::new("hom"),
            xmods: Table::new("crossed module"),
            braided: Table::new("braided crossed module"),
            morphisms: Table::new("morphism"),
            squares: HashMap::new(),
            products: HashMap::new(),
            names: HashMap::new(),
        }
    }

    /// The shipped corpus.
    pub fn builtin() -> Result<Self> {
        Self::from_sources(CORPUS)
    }

    pub fn from_str(origin: &str, text: &str) -> Result<Self> {
        Self::from_sources(&[(origin, text)])
    }

    pub fn from_paths<P: AsRef<Path>>(paths: &[P]) -> Result<Self> {
        let texts = paths
            .iter()
            .map(|p| {
                let p = p.as_ref();
                std::fs::read_to_string(p)
                    .map(|t| (p.display().to_string(), t))
                    .map_err(|source| Error::Io {
                        path: p.display().to_string(),
                        source,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<(&str, &str)> = texts
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Self::from_sources(&refs)
    }

    /// Parses every document, then resolves sections in order.
    pub fn from_sources<S: AsRef<str>, T: AsRef<str>>(sources: &[(S, T)]) -> Result<Self> {
        let mut docs = Vec::with_capacity(sources.len());
        for (origin, text) in sources {
            let doc: Document = toml::from_str(text.as_ref())
                .map_err(|e| parse_err(origin.as_ref(), e.to_string().trim_end()))?;
            docs.push((origin.as_ref().to_string(), doc));
        }
        let mut ws = Self::empty();
        for (o, d) in &docs {
            for a in &d.algebra {
                ws.add_algebra(o, a)?;
            }
        }
        for (o, d) in &docs {
            for a in &d.action {
                ws.add_action(o, a)?;
            }
        }
        for (o, d) in &docs {
            for h in &d.hom {
                ws.add_hom(o, h)?;
            }
        }
        for (o, d) in &docs {
            for x in &d.xmod {
                ws.add_xmod(o, x)?;
            }
        }
        for (o, d) in &docs {
            for b in &d.braided {
                ws.add_braided(o, b)?;
            }
        }
        for (o, d) in &docs {
            for m in &d.morphism {
                ws.add_morphism(o, m)?;
            }
        }
        Ok(ws)
    }

    fn claim(&mut self, origin: &str, name: &str, kind: &'static str) -> Result<()> {
        if let Some(prev) = self.names.insert(name.to_string(), kind) {
            return Err(parse_err(
                origin,
                format!("name `{name}` is already used by a {prev}"),
            ));
        }
        Ok(())
    }

    fn add_algebra(&mut self, origin: &str, def: &AlgebraDef) -> Result<()> {
        let (name, l) = match def {
            AlgebraDef::Abelian { name, dim, basis } => {
                let mut l = LieAlgebra::abelian(*dim).with_name(name);
                if let Some(b) = basis {
                    l = l.with_basis_names(b.clone())?;
                }
                (name, l)
            }
            AlgebraDef::Structure {
                name,
                dim,
                basis,
                brackets,
            } => {
                let loc = format!("{origin}: algebra {name}");
                let entries = brackets
                    .iter()
                    .map(|(i, j, k, v)| {
                        Ok((
                            index(&loc, *i, *dim)?,
                            index(&loc, *j, *dim)?,
                            index(&loc, *k, *dim)?,
                            scalar(&loc, v)?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let mut l = LieAlgebra::from_sparse(name, *dim, &entries)?;
                if let Some(b) = basis {
                    l = l.with_basis_names(b.clone())?;
                }
                (name, l)
            }
            AlgebraDef::TensorSquare { name, of } => {
                let base = self.algebras.get(of)?.clone();
                let tp = TensorPresentation::square(&base)?;
                let l = (**tp.algebra()).clone().with_name(name);
                self.squares.insert(name.clone(), tp);
                (name, l)
            }
        };
        self.claim(origin, name, "algebra")?;
        self.algebras.items.push((name.clone(), Arc::new(l)));
        Ok(())
    }

    fn add_action(&mut self, origin: &str, def: &ActionDef) -> Result<()> {
        let (name, act) = match def {
            ActionDef::Adjoint { name, of } => (name, self.algebras.get(of)?.adjoint_action()),
            ActionDef::Zero {
                name,
                actor,
                module,
            } => (
                name,
                Action::zero(self.algebras.get(actor)?, self.algebras.get(module)?),
            ),
            ActionDef::Entries {
                name,
                actor,
                module,
                entries,
            } => {
                let loc = format!("{origin}: action {name}");
                let n = self.algebras.get(actor)?.clone();
                let m = self.algebras.get(module)?.clone();
                let (dn, dm) = (n.dim(), m.dim());
                let mut a = vec![rat(0); dn * dm * dm];
                for (j, i, k, v) in entries {
                    let (j, i, k) = (
                        index(&loc, *j, dn)?,
                        index(&loc, *i, dm)?,
                        index(&loc, *k, dm)?,
                    );
                    a[(j * dm + i) * dm + k] = scalar(&loc, v)?;
                }
                (name, Action::new(n, m, a)?)
            }
        };
        verify_action(&act).map_err(|v| Error::axiom(format!("action {name}"), v))?;
        self.claim(origin, name, "action")?;
        self.actions.items.push((name.clone(), act));
        Ok(())
    }

    fn add_hom(&mut self, origin: &str, def: &HomDef) -> Result<()> {
        let src = self.algebras.get(&def.source)?.clone();
        let tgt = self.algebras.get(&def.target)?.clone();
        let loc = format!("{origin}: hom {}", def.name);
        let spec = match (&def.kind, &def.matrix) {
            (None, Some(rows)) => MapSpec::Matrix {
                matrix: rows.clone(),
            },
            (Some(k), None) => MapSpec::Named(k.clone()),
            _ => return Err(parse_err(&loc, "give exactly one of `kind` and `matrix`")),
        };
        let m = self.resolve_map(&loc, &spec, &src, &tgt, None, 0)?;
        let h = LieHom::new(src, tgt, m)?;
        h.check()
            .map_err(|v| Error::axiom(format!("hom {}", def.name), v))?;
        self.claim(origin, &def.name, "hom")?;
        self.homs.items.push((def.name.clone(), h));
        Ok(())
    }

    fn add_xmod(&mut self, origin: &str, def: &XModDef) -> Result<()> {
        let (name, x) = match def {
            XModDef::Identity { name, of } => {
                let mut x = CrossedModule::identity(self.algebras.get(of)?);
                x.name = name.clone();
                (name, x)
            }
            XModDef::Tensor { name, of } => {
                let (tp, bx) = tensor_braided_xmod(self.algebras.get(of)?)?;
                self.squares.insert(tp.algebra().name().to_string(), tp);
                let mut x = bx.xmod;
                x.name = name.clone();
                (name, x)
            }
            XModDef::Explicit {
                name,
                boundary,
                action,
            } => {
                let d = self.homs.get(boundary)?.clone();
                let a = self.actions.get(action)?.clone();
                (name, CrossedModule::new(name, d, a)?)
            }
        };
        verify_xmod(&x).map_err(|v| Error::axiom(format!("crossed module {name}"), v))?;
        self.claim(origin, name, "crossed module")?;
        self.xmods.items.push((name.clone(), x));
        Ok(())
    }

    fn add_braided(&mut self, origin: &str, def: &BraidedDef) -> Result<()> {
        let (name, bx) = match def {
            BraidedDef::Identity { name, of } => {
                let l = self.algebras.get(of)?;
                let bx = BraidedXMod::new(CrossedModule::identity(l), Braiding::bracket(l))?;
                (name, bx.with_name(name))
            }
            BraidedDef::Tensor { name, of } => {
                let (tp, bx) = tensor_braided_xmod(self.algebras.get(of)?)?;
                self.squares.insert(tp.algebra().name().to_string(), tp);
                (name, bx.with_name(name))
            }
            BraidedDef::Product { name, left, right } => {
                let p = product_braided(self.braided.get(left)?, self.braided.get(right)?)?;
                let bx = p.product.clone().with_name(name);
                self.products.insert(name.clone(), p);
                (name, bx)
            }
            BraidedDef::Explicit {
                name,
                xmod,
                braiding,
            } => {
                let x = self.xmods.get(xmod)?.clone();
                let (dn, dm) = (x.base().dim(), x.top().dim());
                let loc = format!("{origin}: braided {name}");
                let b = match braiding {
                    BraidingSpec::Named(s) if s == "zero" => Braiding::zero(dn, dm),
                    BraidingSpec::Named(s) if s == "bracket" => {
                        if !x.top().same_structure(x.base()) {
                            return Err(parse_err(&loc, "bracket braiding needs top = base"));
                        }
                        Braiding::bracket(x.base())
                    }
                    BraidingSpec::Named(s) => {
                        return Err(parse_err(&loc, format!("unknown braiding `{s}`")))
                    }
                    BraidingSpec::Entries { entries } => {
                        let mut t = vec![rat(0); dn * dn * dm];
                        for (j, j2, i, v) in entries {
                            let (j, j2, i) = (
                                index(&loc, *j, dn)?,
                                index(&loc, *j2, dn)?,
                                index(&loc, *i, dm)?,
                            );
                            t[(j * dn + j2) * dm + i] = scalar(&loc, v)?;
                        }
                        Braiding::new(dn, dm, t)?
                    }
                };
                (name, BraidedXMod::new(x, b)?.with_name(name))
            }
        };
        self.claim(origin, name, "braided crossed module")?;
        self.braided.items.push((name.clone(), bx));
        Ok(())
    }

    fn add_morphism(&mut self, origin: &str, def: &MorphismDef) -> Result<()> {
        let src = self.braided.get(&def.source)?.clone();
        let tgt = self.braided.get(&def.target)?.clone();
        let loc = format!("{origin}: morphism {}", def.name);
        let m1 = self.resolve_map(&loc, &def.f1, src.top(), tgt.top(), Some(&def.source), 1)?;
        let m2 = self.resolve_map(&loc, &def.f2, src.base(), tgt.base(), Some(&def.source), 2)?;
        let morphism = BraidedMorphism::new(src, tgt, m1, m2)?;
        morphism
            .check()
            .map_err(|v| Error::axiom(format!("morphism {}", def.name), v))?;
        self.claim(origin, &def.name, "morphism")?;
        self.morphisms.items.push((
            def.name.clone(),
            MorphismEntry {
                morphism,
                expect: def.expect,
            },
        ));
        Ok(())
    }

    /// Matrix of a map `src -> tgt`; `product` and `component` locate
    /// projections out of a product source.
    fn resolve_map(
        &self,
        loc: &str,
        spec: &MapSpec,
        src: &Arc<LieAlgebra>,
        tgt: &Arc<LieAlgebra>,
        product: Option<&str>,
        component: usize,
    ) -> Result<RatMatrix> {
        match spec {
            MapSpec::Named(s) => match s.as_str() {
                "identity" => {
                    if !src.same_structure(tgt) {
                        return Err(parse_err(loc, "identity between different algebras"));
                    }
                    Ok(RatMatrix::identity(src.dim()))
                }
                "zero" => Ok(RatMatrix::zeros(tgt.dim(), src.dim())),
                "project-left" | "project-right" => {
                    let p = product
                        .and_then(|n| self.products.get(n))
                        .ok_or_else(|| parse_err(loc, format!("`{s}` needs a product source")))?;
                    let proj = if s == "project-left" {
                        &p.proj_left
                    } else {
                        &p.proj_right
                    };
                    let m = if component == 1 { &proj.f1 } else { &proj.f2 };
                    if m.matrix.rows() != tgt.dim() {
                        return Err(parse_err(loc, format!("`{s}` does not land in the target")));
                    }
                    Ok(m.matrix.clone())
                }
                other => Err(parse_err(loc, format!("unknown map `{other}`"))),
            },
            MapSpec::Hom { hom } => {
                let h = self.homs.get(hom)?;
                if !h.source.same_structure(src) || !h.target.same_structure(tgt) {
                    return Err(parse_err(
                        loc,
                        format!("hom `{hom}` has the wrong source or target"),
                    ));
                }
                Ok(h.matrix.clone())
            }
            MapSpec::TensorOf { tensor_of } => {
                let h = self.homs.get(tensor_of)?;
                let find = |a: &Arc<LieAlgebra>| {
                    self.squares.get(a.name()).ok_or_else(|| {
                        parse_err(loc, format!("{} is not a known tensor square", a.name()))
                    })
                };
                let (ts, tt) = (find(src)?, find(tgt)?);
                Ok(induced_hom(ts, tt, h, h)?.matrix)
            }
            MapSpec::Matrix { matrix: rows } => matrix(loc, rows, tgt.dim(), src.dim()),
        }
    }

    pub fn algebra(&self, name: &str) -> Result<&Arc<LieAlgebra>> {
        self.algebras.get(name)
    }

    pub fn action(&self, name: &str) -> Result<&Action> {
        self.actions.get(name)
    }

    pub fn hom(&self, name: &str) -> Result<&LieHom> {
        self.homs.get(name)
    }

    pub fn xmod(&self, name: &str) -> Result<&CrossedModule> {
        self.xmods.get(name)
    }

    pub fn braided(&self, name: &str) -> Result<&BraidedXMod> {
        self.braided.get(name)
    }

    pub fn morphism(&self, name: &str) -> Result<&MorphismEntry> {
        self.morphisms.get(name)
    }

    pub fn algebra_names(&self) -> Vec<&str> {
        self.algebras
            .items
            .iter()
            .map(|(n, _)| n.as_str())
            .collect()
    }

    pub fn braided_names(&self) -> Vec<&str> {
        self.braided.items.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn morphism_names(&self) -> Vec<&str> {
        self.morphisms
            .items
            .iter()
            .map(|(n, _)| n.as_str())
            .collect()
    }

    /// Every object name in definition order, section by section.
    pub fn all_names(&self) -> Vec<String> {
        let mut out = Vec::new();
        out.extend(self.algebras.items.iter().map(|(n, _)| n.clone()));
        out.extend(self.actions.items.iter().map(|(n, _)| n.clone()));
        out.extend(self.homs.items.iter().map(|(n, _)| n.clone()));
        out.extend(self.xmods.items.iter().map(|(n, _)| n.clone()));
        out.extend(self.braided.items.iter().map(|(n, _)| n.clone()));
        out.extend(self.morphisms.items.iter().map(|(n, _)| n.clone()));
        out
    }

    /// The tensor presentation behind a workspace algebra, if any.
    pub fn tensor_presentation(&self, algebra: &str) -> Option<&TensorPresentation> {
        self.squares.get(algebra)
    }
}

/// A report value. Counts are dimensions; vectors and rationals are text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldValue {
    Bool(bool),
    Count(u64),
    Text(String),
    List(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Field {
    pub key: String,
    pub value: FieldValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub fields: Vec<Field>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            fields: Vec::new(),
        }
    }

    fn push(mut self, key: &str, value: FieldValue) -> Self {
        self.fields.push(Field {
            key: key.into(),
            value,
        });
        self
    }

    pub fn flag(self, key: &str, v: bool) -> Self {
        self.push(key, FieldValue::Bool(v))
    }

    pub fn count(self, key: &str, v: usize) -> Self {
        self.push(key, FieldValue::Count(v as u64))
    }

    pub fn text(self, key: &str, v: impl Into<String>) -> Self {
        self.push(key, FieldValue::Text(v.into()))
    }

    pub fn list(self, key: &str, v: Vec<String>) -> Self {
        self.push(key, FieldValue::List(v))
    }

    /// `key.dim` and `key.basis`.
    pub fn subspace(self, key: &str, s: &Subspace) -> Self {
        let basis = s.basis_vectors().iter().map(|v| format_vector(v)).collect();
        self.count(&format!("{key}.dim"), s.dim())
            .list(&format!("{key}.basis"), basis)
    }

    pub fn get(&self, key: &str) -> Option<&FieldValue> {
        self.fields.iter().find(|f| f.key == key).map(|f| &f.value)
    }
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    /// Every requested check passed.
    pub ok: bool,
    /// Checks that were skipped or degenerate; fatal under `--strict`.
    pub warnings: Vec<String>,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: &str, args: &[String]) -> Self {
        Self {
            command: command.into(),
            args: args.to_vec(),
            ok: true,
            warnings: Vec::new(),
            sections: Vec::new(),
        }
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    /// Looks up `field` in `section`.
    pub fn value(&self, section: &str, field: &str) -> Option<&FieldValue> {
        self.section(section)?.get(field)
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_machine(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err("report", e.to_string()))
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let status = if self.ok { "ok" } else { "FAILED" };
        let _ = writeln!(out, "{} {}: {status}", self.command, self.args.join(" "));
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}]", s.name);
            for f in &s.fields {
                let v = match &f.value {
                    FieldValue::Bool(b) => b.to_string(),
                    FieldValue::Count(n) => n.to_string(),
                    FieldValue::Text(t) => t.clone(),
                    FieldValue::List(l) if l.is_empty() => "-".into(),
                    FieldValue::List(l) => l.join(" "),
                };
                let _ = writeln!(out, "  {:<28} {v}", f.key);
            }
        }
        out
    }

    /// 0 when every check passed, 4 on a failed expectation or, with
    /// `strict`, on any warning.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if !self.ok || (strict && !self.warnings.is_empty()) {
            crate::error::Category::Mismatch as i32
        } else {
            0
        }
    }
}

/// Dispatches a command against a workspace.
pub fn run(ws: &Workspace, command: &str, args: &[String]) -> Result<Report> {
    let arity = |lo: usize, hi: usize| {
        if args.len() < lo || args.len() > hi {
            Err(Error::Usage(format!(
                "`{command}` takes {lo} to {hi} names, got {}",
                args.len()
            )))
        } else {
            Ok(())
        }
    };
    match command {
        "verify" => cmd_verify(ws, args),
        "analyze" => {
            arity(1, 1)?;
            cmd_analyze(ws, &args[0])
        }
        "tensor" => {
            arity(1, 4)?;
            cmd_tensor(ws, args)
        }
        "uce" => {
            arity(1, 1)?;
            cmd_uce(ws, &args[0])
        }
        "classify" => {
            arity(1, 1)?;
            cmd_classify(ws, &args[0])
        }
        "demo" => {
            arity(1, 1)?;
            cmd_demo(&args[0])
        }
        other => Err(Error::Usage(format!("unknown command `{other}`"))),
    }
}

fn axiom_check(object: String, v: crate::error::Verdict) -> Result<()> {
    v.map_err(|violation| Error::Axiom { object, violation })
}

pub fn cmd_verify(ws: &Workspace, names: &[String]) -> Result<Report> {
    let mut r = Report::new("verify", names);
    let targets = if names.is_empty() {
        ws.all_names()
    } else {
        names.to_vec()
    };
    for name in &targets {
        let kind = *ws.names.get(name).ok_or_else(|| Error::Unresolved {
            kind: "object".into(),
            name: name.clone(),
        })?;
        let mut s = Section::new(format!("{kind} {name}"));
        match kind {
            "algebra" => {
                let l = ws.algebras.get(name)?;
                axiom_check(name.clone(), verify_lie(l.dim(), l.structure_constants()))?;
                s = s.count("dim", l.dim()).flag("lie_axioms", true);
            }
            "action" => {
                let a = ws.actions.get(name)?;
                axiom_check(name.clone(), verify_action(a))?;
                s = s
                    .text("actor", a.actor().name())
                    .text("module", a.module().name())
                    .flag("action_axioms", true);
            }
            "hom" => {
                let h = ws.homs.get(name)?;
                axiom_check(name.clone(), h.check())?;
                s = s
                    .count("rank", h.matrix.rank())
                    .flag("bracket_preserved", true);
            }
            "crossed module" => {
                let x = ws.xmods.get(name)?;
                axiom_check(name.clone(), verify_xmod(x))?;
                s = s
                    .count("top.dim", x.top().dim())
                    .count("base.dim", x.base().dim())
                    .flag("xmod_axioms", true);
            }
            "braided crossed module" => {
                let b = ws.braided.get(name)?;
                axiom_check(name.clone(), verify_xmod(&b.xmod))?;
                axiom_check(name.clone(), verify_braiding(b))?;
                s = s
                    .count("top.dim", b.top().dim())
                    .count("base.dim", b.base().dim())
                    .flag("xmod_axioms", true)
                    .flag("braiding_axioms", true);
            }
            _ => {
                let m = &ws.morphisms.get(name)?.morphism;
                axiom_check(name.clone(), m.check())?;
                s = s
                    .text("source", m.source.name())
                    .text("target", m.target.name())
                    .flag("morphism_axioms", true);
            }
        }
        r.sections.push(s);
    }
    Ok(r)
}

fn braided_sections(bx: &BraidedXMod, r: &mut Report) -> Result<()> {
    let c = braided_center(bx);
    let x = &bx.xmod;
    r.sections.push(
        Section::new("dimensions")
            .text("top", bx.top().name())
            .text("base", bx.base().name())
            .count("top.dim", bx.top().dim())
            .count("base.dim", bx.base().dim()),
    );
    r.sections.push(
        Section::new("center")
            .subspace("fixed_points", &c.submodule.top)
            .subspace("base_center", &bx.base().center())
            .subspace("stabilizer", &x.stabilizer())
            .subspace("center_stabilizer", &c.center_stabilizer)
            .subspace("braided_center", &c.submodule.base)
            .subspace("boundary_preimage", &c.boundary_preimage)
            .flag(
                "fixed_points_eq_boundary_preimage",
                c.characterization_holds,
            )
            .flag("braided_center_in_center_stabilizer", c.contained_in_center)
            .flag("boundary_into_center", x.center().flags.boundary_compatible),
    );
    let k = braided_commutator(bx);
    r.sections.push(
        Section::new("commutator")
            .subspace("top_derived", &k.top_derived)
            .subspace("action_span", &k.action_span)
            .subspace("braiding_span", &k.submodule.top)
            .subspace("base_derived", &k.submodule.base)
            .flag("inclusions", k.inclusions_hold)
            .flag("braiding_span_ideal", k.is_ideal),
    );
    r.ok &= c.characterization_holds && c.contained_in_center && k.inclusions_hold && k.is_ideal;
    r.sections.push(
        Section::new("perfect")
            .flag("braided", is_perfect_braided(bx))
            .flag("xmod", is_perfect_xmod(bx)),
    );
    match check_perfect_base_lemmas(bx)? {
        Some(l) => r.sections.push(
            Section::new("perfect_base")
                .flag("braiding_span_eq_action_span", true)
                .flag("braided_center_eq_center_stabilizer", true)
                .count("braiding_span.dim", l.commutator_dim)
                .count("braided_center.dim", l.braided_center_dim),
        ),
        None => r.warnings.push(format!(
            "{}: base is not perfect, perfect-base equalities skipped",
            bx.name()
        )),
    }
    Ok(())
}

pub fn cmd_analyze(ws: &Workspace, name: &str) -> Result<Report> {
    let args = [name.to_string()];
    let mut r = Report::new("analyze", &args);
    if let Some(bx) = ws.braided.try_get(name) {
        braided_sections(bx, &mut r)?;
    } else if let Some(x) = ws.xmods.try_get(name) {
        let c = x.center();
        let k = x.commutator();
        r.sections.push(
            Section::new("center")
                .subspace("fixed_points", &c.top)
                .subspace("base_center", &x.base().center())
                .subspace("stabilizer", &x.stabilizer())
                .subspace("center_stabilizer", &c.base)
                .flag("boundary_into_center", c.flags.boundary_compatible),
        );
        r.sections.push(
            Section::new("commutator")
                .subspace("action_span", &k.top)
                .subspace("base_derived", &k.base)
                .flag("perfect", x.is_perfect()),
        );
    } else if let Some(l) = ws.algebras.try_get(name) {
        r.sections.push(
            Section::new("algebra")
                .count("dim", l.dim())
                .flag("abelian", l.is_abelian())
                .flag("perfect", l.is_perfect())
                .subspace("center", &l.center())
                .subspace("derived", &l.derived_subalgebra()),
        );
    } else {
        return Err(Error::Unresolved {
            kind: "algebra, crossed module or braided crossed module".into(),
            name: name.into(),
        });
    }
    Ok(r)
}

fn find_action(ws: &Workspace, actor: &LieAlgebra, module: &LieAlgebra) -> Option<Action> {
    ws.actions
        .items
        .iter()
        .map(|(_, a)| a)
        .find(|a| a.actor().name() == actor.name() && a.module().name() == module.name())
        .cloned()
}

pub fn cmd_tensor(ws: &Workspace, args: &[String]) -> Result<Report> {
    let mut r = Report::new("tensor", args);
    let m = ws.algebra(&args[0])?.clone();
    let n = ws.algebra(args.get(1).unwrap_or(&args[0]))?.clone();
    let (mn, nm) = match args.len() {
        4 => (ws.action(&args[2])?.clone(), ws.action(&args[3])?.clone()),
        3 => return Err(Error::Usage("give both actions or neither".into())),
        _ if Arc::ptr_eq(&m, &n) => (m.adjoint_action(), m.adjoint_action()),
        _ => {
            let mut pick = |a: &Arc<LieAlgebra>, b: &Arc<LieAlgebra>| {
                find_action(ws, a, b).unwrap_or_else(|| {
                    r.warnings.push(format!(
                        "no action of {} on {} defined, using the zero action",
                        a.name(),
                        b.name()
                    ));
                    Action::zero(a, b)
                })
            };
            let mn = pick(&m, &n);
            let nm = pick(&n, &m);
            (mn, nm)
        }
    };
    let tp = TensorPresentation::build(&mn, &nm)?;
    let l = tp.algebra();
    let mut brackets = Vec::new();
    for a in 0..l.dim() {
        for b in a + 1..l.dim() {
            let v = l.basis_bracket(a, b);
            if v.iter().any(|x| !num::Zero::is_zero(x)) {
                brackets.push(format!("[t{},t{}]={}", a + 1, b + 1, format_vector(v)));
            }
        }
    }
    r.sections.push(
        Section::new("tensor")
            .text("left", m.name())
            .text("right", n.name())
            .count("ambient.dim", tp.ambient_dim())
            .count("relations.dim", tp.relations().dim())
            .count("dim", tp.dim())
            .flag("abelian", l.is_abelian())
            .flag("perfect", l.is_perfect())
            .list("brackets", brackets),
    );
    Ok(r)
}

fn uce_sections(bx: &BraidedXMod, r: &mut Report) -> Result<Option<Uce>> {
    r.sections.push(
        Section::new("input")
            .text("name", bx.name())
            .flag("perfect_braided", is_perfect_braided(bx))
            .flag("perfect_xmod", is_perfect_xmod(bx)),
    );
    match universal_central_extension(bx)? {
        UceResult::Uce(u) => {
            let class = classify_braided_extension(&u.phi.morphism)?.class;
            r.sections.push(
                Section::new("uce")
                    .text("kind", "uce")
                    .count("tensor_square.dim", u.phi.square.algebra().dim())
                    .count("ker_top.dim", u.ker_top.dim())
                    .count("ker_base.dim", u.ker_base.dim())
                    .flag("extension", class.is_extension())
                    .flag("central", class.is_central())
                    .flag("compatible_central", class.is_compatible_central()),
            );
            Ok(Some(*u))
        }
        UceResult::NotPerfect(c) => {
            r.sections.push(
                Section::new("uce")
                    .text("kind", "not_perfect")
                    .count("braiding_span.codim", c.top_codim)
                    .count("base_derived.codim", c.base_codim),
            );
            let w = non_perfect_witness(&BraidedMorphism::identity(bx))?;
            let (comp, col) = w.difference;
            r.sections.push(
                Section::new("non_perfect_witness")
                    .text("extension", w.extension.source.name())
                    .flag("h_ne_g", true)
                    .text(
                        "difference",
                        format!("component {comp}, column {}", col + 1),
                    )
                    .flag("composites_equal", true)
                    .flag("projection_central", true),
            );
            Ok(None)
        }
    }
}

pub fn cmd_uce(ws: &Workspace, name: &str) -> Result<Report> {
    let args = [name.to_string()];
    let mut r = Report::new("uce", &args);
    let bx = ws.braided(name)?;
    let uce = uce_sections(bx, &mut r)?;
    if is_perfect_xmod(bx) {
        let c = compatible_uce(bx)?;
        r.sections.push(
            Section::new("compatible_uce")
                .count("top.dim", c.nm.dim())
                .count("base.dim", c.square.algebra().dim())
                .count("ker_top.dim", c.ker_top.dim())
                .count("ker_base.dim", c.ker_base.dim())
                .flag("braiding_axioms", true)
                .flag("compatible_central", true),
        );
    } else {
        r.warnings.push(format!(
            "{name} is not perfect as a crossed module, compatible construction skipped"
        ));
    }
    if uce.is_some() && is_perfect_xmod(bx) {
        let cmp = compare_uce(bx)?;
        r.sections.push(
            Section::new("comparison")
                .flag("inverse_pair", true)
                .flag("phi_eq_c_after_h", true)
                .flag("c_eq_phi_after_h_prime", true)
                .count("h.rank", cmp.h.f1.matrix.rank()),
        );
    }
    Ok(r)
}

fn expectation_section(e: &Expectation, class: &crate::braid::BraidedClass) -> (Section, bool) {
    let mut s = Section::new("expectation");
    let mut ok = true;
    let actual = [
        ("extension", e.extension, class.is_extension()),
        ("central", e.central, class.is_central()),
        (
            "compatible_central",
            e.compatible_central,
            class.is_compatible_central(),
        ),
    ];
    for (key, want, got) in actual {
        if let Some(w) = want {
            ok &= w == got;
            s = s.flag(&format!("{key}.matches"), w == got);
        }
    }
    (s, ok)
}

pub fn cmd_classify(ws: &Workspace, name: &str) -> Result<Report> {
    let args = [name.to_string()];
    let mut r = Report::new("classify", &args);
    let entry = ws.morphism(name)?;
    let f = &entry.morphism;
    let e = classify_braided_extension(f)?;
    let xe = classify_xmod_extension(&f.underlying())?;
    r.sections.push(
        Section::new("classification")
            .text("source", f.source.name())
            .text("target", f.target.name())
            .flag("extension", e.class.is_extension())
            .flag("central", e.class.is_central())
            .flag("compatible_central", e.class.is_compatible_central())
            .flag(
                "xmod_central",
                matches!(xe.class, ExtensionClass::Extension { central: true }),
            )
            .subspace("ker_top", &e.ker_top)
            .subspace("ker_base", &e.ker_base)
            .subspace("fixed_points", &e.fixed_points)
            .subspace("braided_center", &e.braided_center)
            .subspace("center_stabilizer", &e.center_stabilizer),
    );
    match &entry.expect {
        Some(x) => {
            let (s, ok) = expectation_section(x, &e.class);
            r.ok &= ok;
            r.sections.push(s);
        }
        None => r
            .warnings
            .push(format!("{name} has no expected classification")),
    }
    if e.class.is_central() && is_perfect_braided(&f.target) {
        if let UceResult::Uce(u) = universal_central_extension(&f.target)? {
            let m = mediating_morphism(f, &u)?;
            r.sections.push(
                Section::new("mediating")
                    .flag("factors_phi", true)
                    .flag("section_independent", m.perturbed.same_maps(&m.h))
                    .count("perturbation.dim", m.perturbation_dim),
            );
            if m.perturbation_dim == 0 {
                r.warnings.push(format!(
                    "{name}: kernel is zero, section perturbation is trivial"
                ));
            }
        }
    }
    Ok(r)
}

fn expect_count(r: &mut Report, s: Section, key: &str, got: usize, want: usize) -> Section {
    r.ok &= got == want;
    s.count(key, got)
}

fn expect_flag(r: &mut Report, s: Section, key: &str, got: bool, want: bool) -> Section {
    r.ok &= got == want;
    s.flag(key, got)
}

/// Worked examples on the built-in corpus. Each checks its own expected
/// values and clears `ok` on any difference.
pub fn cmd_demo(id: &str) -> Result<Report> {
    let ws = Workspace::builtin()?;
    let args = [id.to_string()];
    let mut r = Report::new("demo", &args);
    match id {
        "k2k3" => {
            let f = &ws.morphism("pi.tensor")?.morphism;
            let e = classify_braided_extension(f)?;
            let k3 = ws.braided("K3.tensor")?;
            let pi = ws.hom("pi")?;
            let mut s = Section::new("k2k3");
            s = expect_flag(&mut r, s, "extension", e.class.is_extension(), true);
            s = expect_flag(
                &mut r,
                s,
                "compatible_central",
                e.class.is_compatible_central(),
                true,
            );
            s = expect_flag(&mut r, s, "central", e.class.is_central(), false);
            s = expect_count(&mut r, s, "braided_center.dim", e.braided_center.dim(), 0);
            s = expect_count(&mut r, s, "base_center.dim", k3.base().center().dim(), 3);
            s = expect_count(&mut r, s, "stabilizer.dim", k3.xmod.stabilizer().dim(), 3);
            s = expect_count(&mut r, s, "fixed_points.dim", e.fixed_points.dim(), 9);
            s = expect_count(&mut r, s, "ker_pi.dim", pi.kernel().dim(), 1);
            s = expect_count(&mut r, s, "ker_pi_tensor.dim", e.ker_top.dim(), 5);
            r.sections.push(s);
        }
        "sl2-uce" => {
            let s = ws.braided("sl2.id")?;
            uce_sections(s, &mut r)?;
            let u = match universal_central_extension(s)? {
                UceResult::Uce(u) => u,
                UceResult::NotPerfect(_) => {
                    r.ok = false;
                    return Ok(r);
                }
            };
            let class = classify_braided_extension(&u.phi.morphism)?.class;
            let mut sec = Section::new("sl2");
            sec = expect_count(
                &mut r,
                sec,
                "tensor_square.dim",
                u.phi.square.algebra().dim(),
                3,
            );
            sec = expect_count(&mut r, sec, "ker_top.dim", u.ker_top.dim(), 0);
            sec = expect_count(&mut r, sec, "ker_base.dim", u.ker_base.dim(), 0);
            sec = expect_flag(&mut r, sec, "central", class.is_central(), true);
            r.sections.push(sec);

            let h = ws.braided("h3.id")?;
            let mut sec = Section::new("h3");
            let not_perfect = matches!(universal_central_extension(h)?, UceResult::NotPerfect(_));
            sec = expect_flag(&mut r, sec, "not_perfect", not_perfect, true);
            let w = non_perfect_witness(&BraidedMorphism::identity(h))?;
            let differ = !w.h.same_maps(&w.g);
            let agree = w
                .extension
                .compose(&w.h)?
                .same_maps(&w.extension.compose(&w.g)?);
            sec = expect_flag(&mut r, sec, "h_ne_g", differ, true);
            sec = expect_flag(&mut r, sec, "composites_equal", agree, true);
            r.sections.push(sec);
        }
        "sl2-corollary" => {
            let t = ws.braided("sl2.tensor")?;
            let cmp = compare_uce(t)?;
            let mut s = Section::new("corollary");
            s = expect_count(&mut r, s, "m_tensor_mm.dim", cmp.compatible.nm.dim(), 3);
            s = expect_count(&mut r, s, "m_tensor_m.dim", t.top().dim(), 3);
            s = expect_flag(
                &mut r,
                s,
                "dims_match",
                cmp.compatible.nm.dim() == t.top().dim(),
                true,
            );
            s = s
                .flag("inverse_pair", true)
                .flag("phi_eq_c_after_h", true)
                .flag("c_eq_phi_after_h_prime", true);
            r.sections.push(s);
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown demo `{other}`, expected one of {}",
                DEMOS.join(", ")
            )))
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_loads() {
        let ws = Workspace::builtin().unwrap();
        assert!(ws
            .algebra("sl2")
            .unwrap()
            .same_structure(&LieAlgebra::sl2()));
        assert!(ws
            .algebra("h3")
            .unwrap()
            .same_structure(&LieAlgebra::heisenberg()));
        assert_eq!(ws.algebra_names(), ["K1", "K2", "K3", "K4", "sl2", "h3"]);
    }

    #[test]
    fn single_algebra_file() {
        let ws = Workspace::from_str(
            "t.toml",
            r#"
            [[algebra]]
            name = "sl2"
            kind = "structure"
            dim = 3
            brackets = [[2, 1, 1, 2], [2, 3, 3, -2], [1, 3, 2, "1/1"]]
            "#,
        )
        .unwrap();
        assert_eq!(ws.algebra_names().len(), 1);
    }

    #[test]
    fn antisymmetry_conflict_is_rejected() {
        let err = Workspace::from_str(
            "bad.toml",
            r#"
            [[algebra]]
            name = "bad"
            kind = "structure"
            dim = 2
            brackets = [[1, 2, 1, 1], [2, 1, 1, 1]]
            "#,
        )
        .unwrap_err();
        match err {
            Error::Axiom { violation, .. } => {
                assert_eq!(violation.axiom, crate::error::Axiom::Antisymmetry)
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn parse_and_resolution_errors() {
        let e = Workspace::from_str("x.toml", "[[algebra]]\nname = 1").unwrap_err();
        assert_eq!(e.category(), crate::error::Category::Parse);
        assert!(e.to_string().contains("x.toml"));
        let e = Workspace::from_str(
            "x.toml",
            "[[braided]]\nname = \"b\"\nkind = \"identity\"\nof = \"nope\"",
        )
        .unwrap_err();
        assert!(matches!(e, Error::Unresolved { .. }));
        let e = Workspace::from_str(
            "x.toml",
            "[[algebra]]\nname = \"a\"\nkind = \"abelian\"\ndim = 1\n[[algebra]]\nname = \"a\"\nkind = \"abelian\"\ndim = 2",
        )
        .unwrap_err();
        assert!(e.to_string().contains("already used"));
        let e = Workspace::from_str(
            "x.toml",
            "[[algebra]]\nname = \"a\"\nkind = \"structure\"\ndim = 2\nbrackets = [[1, 2, 3, 1]]",
        )
        .unwrap_err();
        assert!(e.to_string().contains("out of range"));
    }

    #[test]
    fn explicit_sections() {
        let ws = Workspace::from_str(
            "x.toml",
            r#"
            [[algebra]]
            name = "L"
            kind = "structure"
            dim = 2
            brackets = [[1, 2, 2, 1]]

            [[action]]
            name = "ad"
            kind = "adjoint"
            of = "L"

            [[hom]]
            name = "id"
            source = "L"
            target = "L"
            kind = "identity"

            [[xmod]]
            name = "X"
            kind = "explicit"
            boundary = "id"
            action = "ad"

            [[braided]]
            name = "B"
            kind = "explicit"
            xmod = "X"
            braiding = "bracket"

            [[braided]]
            name = "B2"
            kind = "explicit"
            xmod = "X"
            braiding = { entries = [[1, 2, 2, 1], [2, 1, 2, -1]] }

            [[morphism]]
            name = "f"
            source = "B"
            target = "B2"
            f1 = { matrix = [[1, 0], [0, 1]] }
            f2 = "identity"
            "#,
        )
        .unwrap();
        assert_eq!(
            ws.braided("B").unwrap().braiding,
            ws.braided("B2").unwrap().braiding
        );
        let r = cmd_verify(&ws, &[]).unwrap();
        assert_eq!(r.sections.len(), 7);
    }

    #[test]
    fn wrong_braiding_is_an_axiom_error() {
        let e = Workspace::from_str(
            "x.toml",
            r#"
            [[algebra]]
            name = "L"
            kind = "structure"
            dim = 2
            brackets = [[1, 2, 2, 1]]

            [[xmod]]
            name = "X"
            kind = "identity"
            of = "L"

            [[braided]]
            name = "B"
            kind = "explicit"
            xmod = "X"
            braiding = "zero"
            "#,
        )
        .unwrap_err();
        assert_eq!(e.category(), crate::error::Category::Axiom);
    }

    #[test]
    fn analyze_tensor_k3() {
        let ws = Workspace::builtin().unwrap();
        let r = cmd_analyze(&ws, "K3.tensor").unwrap();
        let count = |k: &str| r.value("center", k).cloned();
        assert_eq!(count("braided_center.dim"), Some(FieldValue::Count(0)));
        assert_eq!(count("base_center.dim"), Some(FieldValue::Count(3)));
        assert_eq!(count("stabilizer.dim"), Some(FieldValue::Count(3)));
        assert_eq!(count("fixed_points.dim"), Some(FieldValue::Count(9)));
        assert!(r.ok);
    }

    #[test]
    fn uce_and_classify_commands() {
        let ws = Workspace::builtin().unwrap();
        let r = cmd_uce(&ws, "h3.id").unwrap();
        assert_eq!(
            r.value("uce", "kind"),
            Some(&FieldValue::Text("not_perfect".into()))
        );
        let r = cmd_classify(&ws, "sl2.id.identity").unwrap();
        assert_eq!(
            r.value("classification", "central"),
            Some(&FieldValue::Bool(true))
        );
        assert!(r.ok);
        let r = cmd_classify(&ws, "pi.tensor").unwrap();
        assert!(r.ok);
        assert_eq!(
            r.value("classification", "central"),
            Some(&FieldValue::Bool(false))
        );
    }

    #[test]
    fn demos_pass() {
        for id in DEMOS {
            let r = cmd_demo(id).unwrap();
            assert!(r.ok, "{id}");
        }
        assert!(matches!(cmd_demo("nope"), Err(Error::Usage(_))));
    }

    #[test]
    fn reports_round_trip() {
        let r = cmd_demo("k2k3").unwrap();
        let text = r.to_machine();
        let back = Report::from_machine(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_machine(), text);
        assert!(r.to_human().contains("compatible_central"));
    }

    #[test]
    fn tensor_command() {
        let ws = Workspace::builtin().unwrap();
        let r = cmd_tensor(&ws, &["sl2".into()]).unwrap();
        assert_eq!(r.value("tensor", "dim"), Some(&FieldValue::Count(3)));
        let r = cmd_tensor(&ws, &["K2".into(), "K3".into()]).unwrap();
        assert_eq!(r.value("tensor", "dim"), Some(&FieldValue::Count(6)));
        assert_eq!(r.warnings.len(), 2);
    }
}
