//! JSON workspace documents: named monoids, acts, presentations and
//! generating sets, each optionally carrying the recipe that built it.
//!
//! Loading re-validates every table, re-executes every recipe and compares
//! the result with the stored table. Saving writes entries sorted by name
//! with row-major tables, so `save(load(doc))` is stable.

use std::collections::{BTreeMap, HashSet};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::act::{direct_product_act, is_generating_set, right_regular_act, validate_act, ActElem, FiniteAct};
use crate::diagonal::diagonal_act;
use crate::error::Error;
use crate::family::{monoid_by_name, small_acts};
use crate::monoid::{
    adjoin_zero, attach_act_monoid, direct_product_monoid, full_transformation_monoid,
    validate_monoid, FiniteMonoid,
};
use crate::presentation::{
    ActPresentation, ActRelation, BoundPresentation, FreeActElem, GenLabel, PresentationReport,
};
use crate::wreath::{wreath_act, wreath_monoid};

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{entry}: {source}")]
    Validation { entry: String, source: Error },
    #[error("{entry} refers to undefined {kind} '{reference}'")]
    DanglingReference {
        entry: String,
        kind: &'static str,
        reference: String,
    },
    #[error("{entry}: recipe does not reproduce the stored table")]
    RecipeMismatch { entry: String },
    #[error("{entry}: reference cycle")]
    Cycle { entry: String },
    #[error("{entry}: {message}")]
    BadRecipe { entry: String, message: String },
    #[error("{entry}: stored verdict disagrees with re-verification")]
    StaleVerdict { entry: String },
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl WorkspaceError {
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            WorkspaceError::Validation {
                source: Error::SizeLimitExceeded { .. },
                ..
            }
        )
    }
}

type WsResult<T> = Result<T, WorkspaceError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recipe {
    pub op: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub args: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl Recipe {
    pub fn new(op: &str, args: &[&str], n: Option<usize>) -> Self {
        Recipe {
            op: op.to_string(),
            args: args.iter().map(|s| s.to_string()).collect(),
            n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidEntry {
    pub order: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActEntry {
    pub monoid: String,
    pub size: usize,
    pub action: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationEntry {
    pub monoid: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act: Option<String>,
    pub generators: Vec<GenLabel>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assign: Vec<ActElem>,
    pub relations: Vec<(FreeActElem, FreeActElem)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<PresentationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingSetEntry {
    pub act: String,
    pub elems: Vec<ActElem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkspaceDocument {
    #[serde(default)]
    pub monoids: BTreeMap<String, MonoidEntry>,
    #[serde(default)]
    pub acts: BTreeMap<String, ActEntry>,
    #[serde(default)]
    pub presentations: BTreeMap<String, PresentationEntry>,
    #[serde(default)]
    pub generating_sets: BTreeMap<String, GeneratingSetEntry>,
}

impl WorkspaceDocument {
    pub fn from_json(text: &str) -> WsResult<Self> {
        serde_json::from_str(text).map_err(|e| WorkspaceError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Canonical text: keys sorted, arrays of scalars (table rows, maps,
    /// free act elements' fields) kept on one line.
    pub fn to_json(&self) -> String {
        to_pretty_json(&serde_json::to_value(self).expect("documents serialize"))
    }

    pub fn add_monoid(&mut self, name: &str, m: &FiniteMonoid, recipe: Option<Recipe>) {
        self.monoids.insert(
            name.to_string(),
            MonoidEntry {
                order: m.order(),
                identity: m.identity(),
                table: m.rows(),
                labels: m.labels().map(<[String]>::to_vec),
                recipe,
            },
        );
    }

    pub fn add_act(&mut self, name: &str, monoid: &str, a: &FiniteAct, recipe: Option<Recipe>) {
        self.acts.insert(
            name.to_string(),
            ActEntry {
                monoid: monoid.to_string(),
                size: a.size(),
                action: a.rows(),
                labels: a.labels().map(<[String]>::to_vec),
                recipe,
            },
        );
    }

    pub fn add_presentation(
        &mut self,
        name: &str,
        monoid: &str,
        act: Option<&str>,
        p: &BoundPresentation,
        verdict: Option<PresentationReport>,
        recipe: Option<Recipe>,
    ) {
        self.presentations.insert(
            name.to_string(),
            PresentationEntry {
                monoid: monoid.to_string(),
                act: act.map(str::to_string),
                generators: p.presentation.gen_labels().to_vec(),
                assign: p.assign.clone(),
                relations: p.relations().iter().map(|r| (r.lhs, r.rhs)).collect(),
                verdict,
                recipe,
            },
        );
    }
}

/// Indented JSON with scalar-only arrays and objects on a single line,
/// ending in a newline.
pub fn to_pretty_json(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(map) => map.values().all(|i| !i.is_array() && !i.is_object()),
        _ => true,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    if is_flat(v) {
        match v {
            Value::Array(items) => {
                let parts: Vec<String> = items.iter().map(Value::to_string).collect();
                out.push_str(&format!("[{}]", parts.join(", ")));
            }
            Value::Object(map) if !map.is_empty() => {
                let parts: Vec<String> = map
                    .iter()
                    .map(|(k, x)| format!("{}: {x}", Value::String(k.clone())))
                    .collect();
                out.push_str(&format!("{{{}}}", parts.join(", ")));
            }
            _ => out.push_str(&v.to_string()),
        }
        return;
    }
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        _ => unreachable!("scalars are flat"),
    }
}

/// A loaded, validated workspace.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub document: WorkspaceDocument,
    pub monoids: BTreeMap<String, Arc<FiniteMonoid>>,
    pub acts: BTreeMap<String, FiniteAct>,
}

pub fn load_workspace(path: impl AsRef<Path>) -> WsResult<Workspace> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| WorkspaceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Workspace::from_document(WorkspaceDocument::from_json(&text)?)
}

pub fn save_workspace(path: impl AsRef<Path>, doc: &WorkspaceDocument) -> WsResult<()> {
    let path = path.as_ref();
    std::fs::write(path, doc.to_json()).map_err(|e| WorkspaceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn validation(entry: &str) -> impl Fn(Error) -> WorkspaceError + '_ {
    move |source| WorkspaceError::Validation {
        entry: entry.to_string(),
        source,
    }
}

struct Resolver<'d> {
    doc: &'d WorkspaceDocument,
    monoids: BTreeMap<String, Arc<FiniteMonoid>>,
    acts: BTreeMap<String, FiniteAct>,
    visiting: HashSet<String>,
}

impl<'d> Resolver<'d> {
    fn enter(&mut self, key: String) -> WsResult<()> {
        if !self.visiting.insert(key.clone()) {
            return Err(WorkspaceError::Cycle { entry: key });
        }
        Ok(())
    }

    fn monoid(&mut self, name: &str, from: &str) -> WsResult<Arc<FiniteMonoid>> {
        if let Some(m) = self.monoids.get(name) {
            return Ok(m.clone());
        }
        let entry = self
            .doc
            .monoids
            .get(name)
            .ok_or_else(|| WorkspaceError::DanglingReference {
                entry: from.to_string(),
                kind: "monoid",
                reference: name.to_string(),
            })?;
        self.enter(format!("monoid:{name}"))?;
        let mut m = validate_monoid(entry.order, &entry.table, entry.identity).map_err(validation(name))?;
        if let Some(labels) = &entry.labels {
            if labels.len() != entry.order {
                return Err(validation(name)(Error::invalid("label count")));
            }
            m = m.with_labels(labels.clone());
        }
        if let Some(recipe) = &entry.recipe {
            let built = self.build_monoid(name, recipe)?;
            if built != m {
                return Err(WorkspaceError::RecipeMismatch {
                    entry: name.to_string(),
                });
            }
        }
        let m = Arc::new(m);
        self.monoids.insert(name.to_string(), m.clone());
        Ok(m)
    }

    fn act(&mut self, name: &str, from: &str) -> WsResult<FiniteAct> {
        if let Some(a) = self.acts.get(name) {
            return Ok(a.clone());
        }
        let entry = self
            .doc
            .acts
            .get(name)
            .ok_or_else(|| WorkspaceError::DanglingReference {
                entry: from.to_string(),
                kind: "act",
                reference: name.to_string(),
            })?;
        self.enter(format!("act:{name}"))?;
        let m = self.monoid(&entry.monoid, name)?;
        let mut a = validate_act(m, entry.size, &entry.action).map_err(validation(name))?;
        if let Some(labels) = &entry.labels {
            if labels.len() != entry.size {
                return Err(validation(name)(Error::invalid("label count")));
            }
            a = a.with_labels(labels.clone());
        }
        if let Some(recipe) = &entry.recipe {
            let built = self.build_act(name, recipe)?;
            if built != a {
                return Err(WorkspaceError::RecipeMismatch {
                    entry: name.to_string(),
                });
            }
        }
        self.acts.insert(name.to_string(), a.clone());
        Ok(a)
    }

    fn arg<'r>(entry: &str, recipe: &'r Recipe, i: usize) -> WsResult<&'r str> {
        recipe
            .args
            .get(i)
            .map(String::as_str)
            .ok_or_else(|| WorkspaceError::BadRecipe {
                entry: entry.to_string(),
                message: format!("'{}' needs argument {}", recipe.op, i + 1),
            })
    }

    fn count(entry: &str, recipe: &Recipe) -> WsResult<usize> {
        recipe.n.ok_or_else(|| WorkspaceError::BadRecipe {
            entry: entry.to_string(),
            message: format!("'{}' needs n", recipe.op),
        })
    }

    fn build_monoid(&mut self, entry: &str, recipe: &Recipe) -> WsResult<FiniteMonoid> {
        let v = validation(entry);
        Ok(match recipe.op.as_str() {
            "trivial" => FiniteMonoid::trivial(),
            "cyclic" => FiniteMonoid::cyclic_group(Self::count(entry, recipe)?).map_err(v)?,
            "chain" => FiniteMonoid::semilattice_chain(Self::count(entry, recipe)?).map_err(v)?,
            "symmetric" => FiniteMonoid::symmetric_group(Self::count(entry, recipe)?).map_err(v)?,
            "transformations" => full_transformation_monoid(Self::count(entry, recipe)?).map_err(v)?,
            "left_zero_band" => FiniteMonoid::left_zero_band(Self::count(entry, recipe)?).map_err(v)?,
            "family" => {
                let name = Self::arg(entry, recipe, 0)?;
                monoid_by_name(name)
                    .map(|m| (*m).clone())
                    .ok_or_else(|| WorkspaceError::BadRecipe {
                        entry: entry.to_string(),
                        message: format!("no family monoid '{name}'"),
                    })?
            }
            "product" => {
                let m = self.monoid(Self::arg(entry, recipe, 0)?, entry)?;
                let n = self.monoid(Self::arg(entry, recipe, 1)?, entry)?;
                direct_product_monoid(&m, &n).map_err(v)?
            }
            "zero" => adjoin_zero(&*self.monoid(Self::arg(entry, recipe, 0)?, entry)?),
            "attach" => {
                let a = self.act(Self::arg(entry, recipe, 0)?, entry)?;
                attach_act_monoid(a.base(), &a).map_err(v)?
            }
            "wreath" => {
                let a = self.act(Self::arg(entry, recipe, 0)?, entry)?;
                let n = self.monoid(Self::arg(entry, recipe, 1)?, entry)?;
                (*wreath_monoid(a.base_arc(), &n, &a).map_err(v)?.monoid).clone()
            }
            other => {
                return Err(WorkspaceError::BadRecipe {
                    entry: entry.to_string(),
                    message: format!("unknown monoid recipe '{other}'"),
                })
            }
        })
    }

    fn build_act(&mut self, entry: &str, recipe: &Recipe) -> WsResult<FiniteAct> {
        let v = validation(entry);
        Ok(match recipe.op.as_str() {
            "regular" => right_regular_act(&self.monoid(Self::arg(entry, recipe, 0)?, entry)?),
            "trivial" => {
                let m = self.monoid(Self::arg(entry, recipe, 0)?, entry)?;
                FiniteAct::trivial(m, Self::count(entry, recipe)?).map_err(v)?
            }
            "diagonal" => diagonal_act(&self.monoid(Self::arg(entry, recipe, 0)?, entry)?).map_err(v)?,
            "product" => {
                let a = self.act(Self::arg(entry, recipe, 0)?, entry)?;
                let b = self.act(Self::arg(entry, recipe, 1)?, entry)?;
                direct_product_act(&a, &b).map_err(v)?
            }
            "wreath" => {
                let a = self.act(Self::arg(entry, recipe, 0)?, entry)?;
                let b = self.act(Self::arg(entry, recipe, 1)?, entry)?;
                wreath_act(&a, &b).map_err(v)?.act
            }
            "family" => {
                let (mname, aname) = (Self::arg(entry, recipe, 0)?, Self::arg(entry, recipe, 1)?);
                family_act(mname, aname).ok_or_else(|| WorkspaceError::BadRecipe {
                    entry: entry.to_string(),
                    message: format!("no family act '{mname}/{aname}'"),
                })?
            }
            other => {
                return Err(WorkspaceError::BadRecipe {
                    entry: entry.to_string(),
                    message: format!("unknown act recipe '{other}'"),
                })
            }
        })
    }
}

/// A small act of a family monoid, by act name (`regular`, `trivial2`, ...).
pub fn family_act(monoid: &str, act: &str) -> Option<FiniteAct> {
    let m = monoid_by_name(monoid)?;
    small_acts(&m, 6)
        .into_iter()
        .find(|a| a.name == act)
        .map(|a| a.value)
}

impl Workspace {
    pub fn from_document(document: WorkspaceDocument) -> WsResult<Self> {
        let mut r = Resolver {
            doc: &document,
            monoids: BTreeMap::new(),
            acts: BTreeMap::new(),
            visiting: HashSet::new(),
        };
        for name in document.monoids.keys() {
            r.monoid(name, name)?;
        }
        for name in document.acts.keys() {
            r.act(name, name)?;
        }
        let (monoids, acts) = (r.monoids, r.acts);
        let ws = Workspace {
            document: document.clone(),
            monoids,
            acts,
        };
        for name in document.presentations.keys() {
            let (p, target) = ws.presentation(name)?;
            let entry = &document.presentations[name];
            if let (Some(stored), Some(target)) = (&entry.verdict, target) {
                if stored.holds() != p.verify(&target).holds() {
                    return Err(WorkspaceError::StaleVerdict {
                        entry: name.clone(),
                    });
                }
            }
        }
        for (name, g) in &document.generating_sets {
            let act = ws.act(&g.act, name)?;
            if g.elems.iter().any(|&e| e >= act.size()) {
                return Err(validation(name)(Error::OutOfRange("generating set element".into())));
            }
            if let Some(stored) = g.verified {
                if stored != is_generating_set(&act, &g.elems) {
                    return Err(WorkspaceError::StaleVerdict { entry: name.clone() });
                }
            }
        }
        Ok(ws)
    }

    pub fn monoid(&self, name: &str, from: &str) -> WsResult<Arc<FiniteMonoid>> {
        self.monoids
            .get(name)
            .cloned()
            .ok_or_else(|| WorkspaceError::DanglingReference {
                entry: from.to_string(),
                kind: "monoid",
                reference: name.to_string(),
            })
    }

    pub fn act(&self, name: &str, from: &str) -> WsResult<FiniteAct> {
        self.acts
            .get(name)
            .cloned()
            .ok_or_else(|| WorkspaceError::DanglingReference {
                entry: from.to_string(),
                kind: "act",
                reference: name.to_string(),
            })
    }

    /// The named presentation and, if it names one, its target act.
    pub fn presentation(&self, name: &str) -> WsResult<(BoundPresentation, Option<FiniteAct>)> {
        let entry = self
            .document
            .presentations
            .get(name)
            .ok_or_else(|| WorkspaceError::DanglingReference {
                entry: name.to_string(),
                kind: "presentation",
                reference: name.to_string(),
            })?;
        let m = self.monoid(&entry.monoid, name)?;
        let relations = entry
            .relations
            .iter()
            .map(|&(l, r)| ActRelation::new(l, r))
            .collect();
        let presentation =
            ActPresentation::new(entry.generators.clone(), m, relations).map_err(validation(name))?;
        let target = match &entry.act {
            Some(a) => Some(self.act(a, name)?),
            None => None,
        };
        if target.is_some() && entry.assign.len() != entry.generators.len() {
            return Err(validation(name)(Error::invalid("assign must list one image per generator")));
        }
        Ok((
            BoundPresentation {
                presentation,
                assign: entry.assign.clone(),
            },
            target,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_doc() -> WorkspaceDocument {
        let mut doc = WorkspaceDocument::default();
        let z2 = FiniteMonoid::cyclic_group(2).unwrap();
        doc.add_monoid("Z2", &z2, Some(Recipe::new("cyclic", &[], Some(2))));
        let rr = right_regular_act(&Arc::new(z2));
        doc.add_act("A", "Z2", &rr, Some(Recipe::new("regular", &["Z2"], None)));
        doc
    }

    #[test]
    fn minimal_document_loads() {
        let doc = WorkspaceDocument::from_json(
            r#"{"monoids": {"T": {"order": 1, "identity": 0, "table": [[0]]}}}"#,
        )
        .unwrap();
        let ws = Workspace::from_document(doc).unwrap();
        assert_eq!(ws.monoids["T"].order(), 1);
    }

    #[test]
    fn broken_cell_names_the_triple() {
        let doc = WorkspaceDocument::from_json(
            r#"{"monoids": {"B": {"order": 3, "identity": 0, "table": [[0,1,2],[1,2,2],[2,2,1]]}}}"#,
        )
        .unwrap();
        match Workspace::from_document(doc).unwrap_err() {
            WorkspaceError::Validation { entry, source } => {
                assert_eq!(entry, "B");
                assert!(matches!(source, Error::NotAssociative(..)));
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn dangling_and_parse_errors() {
        let doc = WorkspaceDocument::from_json(
            r#"{"acts": {"A": {"monoid": "missing", "size": 1, "action": [[0]]}}}"#,
        )
        .unwrap();
        assert!(matches!(
            Workspace::from_document(doc).unwrap_err(),
            WorkspaceError::DanglingReference { .. }
        ));
        assert!(matches!(
            WorkspaceDocument::from_json("{\n  \"monoids\": [").unwrap_err(),
            WorkspaceError::Parse { line: 2, .. }
        ));
    }

    #[test]
    fn recipes_are_replayed() {
        let doc = z2_doc();
        Workspace::from_document(doc.clone()).unwrap();
        let mut bad = doc;
        bad.acts.get_mut("A").unwrap().recipe = Some(Recipe::new("trivial", &["Z2"], Some(2)));
        assert!(matches!(
            Workspace::from_document(bad).unwrap_err(),
            WorkspaceError::RecipeMismatch { .. }
        ));
    }

    #[test]
    fn round_trip_is_stable() {
        let doc = z2_doc();
        let text = doc.to_json();
        let again = WorkspaceDocument::from_json(&text).unwrap();
        assert_eq!(again.to_json(), text);
    }
}
