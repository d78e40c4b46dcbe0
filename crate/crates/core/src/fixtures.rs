//! Versioned JSON fixtures holding the published A2 tables and figures, and
//! the harness that recomputes and diffs them.
//!
//! Every record carries a SHA-256 seal over its canonical serialization
//! (the record without its `digest` field). Semantic recomputation detects
//! changes to computable values; the seal detects changes to everything
//! else, such as documentation text or values the engine only bounds.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::homcat::{Engine, ParabolicKind, StructuralKind};

pub const FORMAT_VERSION: u32 = 1;
pub const ENV_VAR: &str = "HOMCAT_FIXTURES";
pub const EMBEDDED_A2: &str = include_str!("../fixtures/a2.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub version: u32,
    pub records: Vec<Record>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    #[serde(flatten)]
    pub body: RecordBody,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub digest: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecordBody {
    PdRow {
        system: String,
        table: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subset: Option<String>,
        elements: Vec<String>,
        values: Vec<u32>,
    },
    /// `values[i][j]` belongs to `(rows[i], cols[j])`.
    PdMatrix { system: String, table: String, rows: Vec<String>, cols: Vec<String>, values: Vec<Vec<PdCell>> },
    Grid {
        system: String,
        family: String,
        x: String,
        y: String,
        entries: Vec<GridEntry>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        erratum: Option<String>,
    },
    Coresolution {
        system: String,
        table: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subset: Option<String>,
        entries: Vec<CoresolutionEntry>,
    },
    IndexSet {
        system: String,
        table: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subset: Option<String>,
        elements: Vec<String>,
    },
    /// Published data with no computational counterpart.
    Documentation {
        system: String,
        table: String,
        text: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        data: Option<serde_json::Value>,
    },
}

/// A published value, or a bound as emitted by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PdCell {
    Value(u32),
    Bounded {
        lo: u32,
        hi: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        provenance: Option<String>,
    },
}

impl PdCell {
    pub fn value(&self) -> Option<u32> {
        match self {
            PdCell::Value(v) => Some(*v),
            PdCell::Bounded { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridEntry {
    pub w: String,
    pub deg: i32,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoresolutionEntry {
    pub w: String,
    pub pos: i32,
    pub mult: u64,
}

impl RecordBody {
    pub fn system(&self) -> &str {
        match self {
            RecordBody::PdRow { system, .. }
            | RecordBody::PdMatrix { system, .. }
            | RecordBody::Grid { system, .. }
            | RecordBody::Coresolution { system, .. }
            | RecordBody::IndexSet { system, .. }
            | RecordBody::Documentation { system, .. } => system,
        }
    }

    /// Short human-readable identifier.
    pub fn title(&self) -> String {
        let sub = |s: &Option<String>| s.as_ref().map(|s| format!(" J={s}")).unwrap_or_default();
        match self {
            RecordBody::PdRow { table, subset, .. }
            | RecordBody::Coresolution { table, subset, .. }
            | RecordBody::IndexSet { table, subset, .. } => format!("{table}{}", sub(subset)),
            RecordBody::PdMatrix { table, .. } | RecordBody::Documentation { table, .. } => table.clone(),
            RecordBody::Grid { family, x, y, .. } => format!("{family} character x={x} y={y}"),
        }
    }

    pub fn is_documentation(&self) -> bool {
        matches!(self, RecordBody::Documentation { .. })
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl Record {
    pub fn new(body: RecordBody) -> Self {
        Record { body, digest: None }
    }

    pub fn compute_digest(&self) -> String {
        let canonical = serde_json::to_vec(&self.body).expect("records serialize");
        hex(&Sha256::digest(canonical))
    }

    pub fn seal(&mut self) {
        self.digest = Some(self.compute_digest());
    }

    pub fn seal_ok(&self) -> bool {
        self.digest.as_deref() == Some(self.compute_digest().as_str())
    }
}

impl FixtureFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: FixtureFile = serde_json::from_str(text).map_err(|e| Error::FixtureFormat(e.to_string()))?;
        if file.version != FORMAT_VERSION {
            return Err(Error::FixtureFormat(format!(
                "unsupported version {} (expected {FORMAT_VERSION})",
                file.version
            )));
        }
        Ok(file)
    }

    pub fn seal_all(&mut self) {
        self.records.iter_mut().for_each(Record::seal);
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture files serialize")
    }
}

/// Records gathered from one or more fixture files.
#[derive(Debug, Clone, Default)]
pub struct FixtureSet {
    records: Vec<(String, Record)>,
}

impl FixtureSet {
    pub fn embedded() -> Self {
        let file = FixtureFile::parse(EMBEDDED_A2).expect("embedded fixture parses");
        FixtureSet { records: file.records.into_iter().map(|r| ("<embedded>/a2.json".into(), r)).collect() }
    }

    pub fn from_records(source: &str, records: Vec<Record>) -> Self {
        FixtureSet { records: records.into_iter().map(|r| (source.to_string(), r)).collect() }
    }

    /// Every `*.json` file of `dir`, in name order.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let io = |e| Error::Io { path: dir.display().to_string(), source: e };
        let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let mut set = FixtureSet::default();
        for p in paths {
            set.add_file(&p)?;
        }
        Ok(set)
    }

    pub fn add_file(&mut self, path: &Path) -> Result<()> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), source: e })?;
        let file = FixtureFile::parse(&text).map_err(|e| match e {
            Error::FixtureFormat(m) => Error::FixtureFormat(format!("{}: {m}", path.display())),
            other => other,
        })?;
        let name = path.display().to_string();
        self.records.extend(file.records.into_iter().map(|r| (name.clone(), r)));
        Ok(())
    }

    /// Explicit directory, then the `HOMCAT_FIXTURES` directory, then the
    /// embedded copy.
    pub fn resolve(dir: Option<&Path>) -> Result<Self> {
        if let Some(d) = dir {
            return Self::load_dir(d);
        }
        match std::env::var_os(ENV_VAR) {
            Some(d) if !d.is_empty() => Self::load_dir(Path::new(&d)),
            _ => Ok(Self::embedded()),
        }
    }

    pub fn records(&self) -> impl Iterator<Item = (&str, &Record)> + '_ {
        self.records.iter().map(|(s, r)| (s.as_str(), r))
    }

    pub fn for_system<'a>(&'a self, system: &str) -> impl Iterator<Item = &'a Record> + 'a {
        let system = system.to_string();
        self.records.iter().map(|(_, r)| r).filter(move |r| r.body.system() == system)
    }

    pub fn has_system(&self, system: &str) -> bool {
        self.for_system(system).next().is_some()
    }

    /// A published pd matrix as `(row names, column names, values)`.
    pub fn pd_matrix(&self, system: &str, table: &str) -> Result<(&[String], &[String], Vec<Vec<u32>>)> {
        for r in self.for_system(system) {
            if let RecordBody::PdMatrix { table: t, rows, cols, values, .. } = &r.body {
                if t == table {
                    let vals = values
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|c| {
                                    c.value().ok_or_else(|| {
                                        Error::FixtureFormat(format!("{table}: bounded cell in a published table"))
                                    })
                                })
                                .collect()
                        })
                        .collect::<Result<Vec<Vec<u32>>>>()?;
                    return Ok((rows, cols, vals));
                }
            }
        }
        Err(Error::FixtureMissing(format!("{system} {table}")))
    }

    /// `values[x][y]` reindexed by element index, for a square matrix over
    /// the whole group.
    pub fn pd_matrix_indexed(&self, engine: &Engine, table: &str) -> Result<Vec<Vec<u32>>> {
        let (rows, cols, vals) = self.pd_matrix(engine.system().name(), table)?;
        let n = engine.system().order();
        if rows.len() != n || cols.len() != n {
            return Err(Error::FixtureFormat(format!("{table}: expected a {n}x{n} table")));
        }
        let ri = rows.iter().map(|s| engine.element(s)).collect::<Result<Vec<_>>>()?;
        let ci = cols.iter().map(|s| engine.element(s)).collect::<Result<Vec<_>>>()?;
        let mut out = vec![vec![0; n]; n];
        for (i, &x) in ri.iter().enumerate() {
            for (j, &y) in ci.iter().enumerate() {
                out[x][y] = vals[i][j];
            }
        }
        Ok(out)
    }

    pub fn coresolution(&self, system: &str, table: &str, subset: Option<&str>) -> Option<&[CoresolutionEntry]> {
        self.for_system(system).find_map(|r| match &r.body {
            RecordBody::Coresolution { table: t, subset: s, entries, .. } if t == table && s.as_deref() == subset => {
                Some(entries.as_slice())
            }
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    /// Published data with no computation; only the seal is checked.
    Documentation,
    BadSeal,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub source: String,
    pub title: String,
    pub status: Status,
    pub diffs: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub system: String,
    pub outcomes: Vec<Outcome>,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        !self.outcomes.is_empty()
            && self.outcomes.iter().all(|o| matches!(o.status, Status::Match | Status::Documentation))
    }

    pub fn count(&self, status: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == status).count()
    }
}

/// Recomputes every record of `engine`'s system and diffs it.
pub fn verify(engine: &Engine, set: &FixtureSet) -> Result<VerifyReport> {
    let system = engine.system().name().to_string();
    if !set.has_system(&system) {
        return Err(Error::FixtureMissing(system));
    }
    let mut outcomes = Vec::new();
    // seals are checked for every record; content only for this system
    for (source, rec) in set.records().filter(|(_, r)| r.body.system() == system || !r.seal_ok()) {
        let mut diffs = Vec::new();
        let status = if !rec.seal_ok() {
            diffs.push(match &rec.digest {
                None => "record is not sealed".to_string(),
                Some(d) => format!("seal {d} does not match content {}", rec.compute_digest()),
            });
            Status::BadSeal
        } else if rec.body.is_documentation() {
            Status::Documentation
        } else {
            match check_record(engine, &rec.body, &mut diffs) {
                Ok(()) if diffs.is_empty() => Status::Match,
                Ok(()) => Status::Mismatch,
                Err(e) => {
                    diffs.push(e.to_string());
                    Status::Mismatch
                }
            }
        };
        outcomes.push(Outcome { source: source.to_string(), title: rec.body.title(), status, diffs });
    }
    Ok(VerifyReport { system, outcomes })
}

fn diff_lists<T: Ord + std::fmt::Debug + Clone>(want: &[T], got: &[T], diffs: &mut Vec<String>) {
    let mut a = want.to_vec();
    let mut b = got.to_vec();
    a.sort();
    b.sort();
    for x in a.iter().filter(|x| b.binary_search(x).is_err()) {
        diffs.push(format!("published {x:?} not computed"));
    }
    for x in b.iter().filter(|x| a.binary_search(x).is_err()) {
        diffs.push(format!("computed {x:?} not published"));
    }
}

fn check_record(engine: &Engine, body: &RecordBody, diffs: &mut Vec<String>) -> Result<()> {
    let sys = engine.system();
    let subset = |s: &Option<String>| -> Result<_> {
        s.as_deref().map(|s| sys.parse_subset(s)).transpose().map(|j| j.unwrap_or_default())
    };
    match body {
        RecordBody::PdRow { table, subset: sub, elements, values, .. } => {
            let j = subset(sub)?;
            if elements.len() != values.len() {
                return Err(Error::FixtureFormat(format!("{table}: row length mismatch")));
            }
            for (name, &want) in elements.iter().zip(values) {
                let w = engine.element(name)?;
                let structural = StructuralKind::ALL.into_iter().find(|k| k.table_name() == table);
                let got = match table.as_str() {
                    "a-function" => engine.a(w),
                    _ if structural.is_some() => engine.structural_pd_idx(structural.expect("matched"), w),
                    "parabolic-tilting-pd" => engine.parabolic_pd_idx(ParabolicKind::Tilting, w, j)?,
                    "parabolic-injective-pd" => engine.parabolic_pd_idx(ParabolicKind::Injective, w, j)?,
                    "s-subcategory-tilting-pd" => pick(engine, j, w, |s| (&s.tilting_indices, &s.tilting_pd))?,
                    "s-subcategory-projective-pd" => pick(engine, j, w, |s| (&s.projective_indices, &s.projective_pd))?,
                    "s-subcategory-injective-pd" => pick(engine, j, w, |s| (&s.projective_indices, &s.injective_pd))?,
                    other => return Err(Error::FixtureFormat(format!("unknown pd row `{other}`"))),
                };
                if got as u32 != want {
                    diffs.push(format!("{name}: published {want}, computed {got}"));
                }
            }
        }
        RecordBody::PdMatrix { table, rows, cols, values, .. } => {
            let family = match table.as_str() {
                "twisted-projective-pd" => crate::homcat::PdFamily::TwistedProjective,
                "twisted-tilting-pd" => crate::homcat::PdFamily::TwistedTilting,
                "shuffled-projective-pd" => crate::homcat::PdFamily::ShuffledProjective,
                "shuffled-tilting-pd" => crate::homcat::PdFamily::ShuffledTilting,
                other => return Err(Error::FixtureFormat(format!("unknown pd table `{other}`"))),
            };
            let computed = engine.pd_table(family);
            if values.len() != rows.len() {
                return Err(Error::FixtureFormat(format!("{table}: row count mismatch")));
            }
            for (rname, row) in rows.iter().zip(values) {
                let x = engine.element(rname)?;
                if row.len() != cols.len() {
                    return Err(Error::FixtureFormat(format!("{table}: column count mismatch")));
                }
                for (cname, cell) in cols.iter().zip(row) {
                    let y = engine.element(cname)?;
                    let r = computed.get(x, y);
                    let ok = match cell {
                        PdCell::Value(v) => r.contains(*v),
                        PdCell::Bounded { lo, hi, .. } => r.lo() == *lo && r.hi() == *hi,
                    };
                    if !ok {
                        diffs.push(format!("({rname},{cname}): published {cell:?}, computed {r}"));
                    }
                }
            }
        }
        RecordBody::Grid { family, x, y, entries, .. } => {
            let (x, y) = (sys.parse_element(x)?, sys.parse_element(y)?);
            let grid = match family.as_str() {
                "twisted-p" => engine.twisted_projective_character(x, y)?,
                "twisted-t" => engine.twisted_tilting_character(x, y)?,
                other => return Err(Error::FixtureFormat(format!("unknown character family `{other}`"))),
            };
            let got: Vec<GridEntry> =
                grid.entries().map(|(deg, w, mult)| GridEntry { w: engine.name(w), deg, mult }).collect();
            let want = entries
                .iter()
                .map(|e| Ok(GridEntry { w: engine.name(engine.element(&e.w)?), ..e.clone() }))
                .collect::<Result<Vec<_>>>()?;
            diff_lists(&merge_grid(&want), &got, diffs);
        }
        RecordBody::Coresolution { table, subset: sub, entries, .. } => {
            let t = match table.as_str() {
                "tilting-coresolution-dominant" => engine.tilting_coresolution_dominant()?,
                "linear-injective-coresolution" => engine.linear_injective_coresolution_antidominant()?,
                "parabolic-tilting-coresolution" => engine.parabolic_tilting_coresolution(subset(sub)?)?,
                "singular-verma-character" => engine.singular_verma_character(subset(sub)?)?,
                other => return Err(Error::FixtureFormat(format!("unknown coresolution `{other}`"))),
            };
            let got: Vec<CoresolutionEntry> =
                t.entries().map(|(w, pos, mult)| CoresolutionEntry { w: engine.name(w), pos, mult }).collect();
            let want = entries
                .iter()
                .map(|e| Ok(CoresolutionEntry { w: engine.name(engine.element(&e.w)?), ..e.clone() }))
                .collect::<Result<Vec<_>>>()?;
            diff_lists(&want, &got, diffs);
        }
        RecordBody::IndexSet { table, subset: sub, elements, .. } => {
            let s = engine.s_subcategory_summary(subset(sub)?);
            let got = match table.as_str() {
                "s-subcategory-projective-indices" => &s.projective_indices,
                "s-subcategory-tilting-indices" => &s.tilting_indices,
                other => return Err(Error::FixtureFormat(format!("unknown index set `{other}`"))),
            };
            let want = elements.iter().map(|e| engine.element(e)).collect::<Result<Vec<_>>>()?;
            diff_lists(&want, got, diffs);
        }
        RecordBody::Documentation { .. } => {}
    }
    Ok(())
}

fn pick(
    engine: &Engine,
    j: crate::coxeter::GeneratorSubset,
    w: usize,
    f: impl Fn(&crate::homcat::SSubcategorySummary) -> (&Vec<usize>, &Vec<usize>),
) -> Result<usize> {
    let s = engine.s_subcategory_summary(j);
    let (idx, vals) = f(&s);
    idx.iter()
        .position(|&u| u == w)
        .map(|p| vals[p])
        .ok_or_else(|| Error::FixtureFormat(format!("{} is not indexed by this subcategory", engine.name(w))))
}

/// Canonical element names with repeated `(w, deg)` cells summed.
fn merge_grid(entries: &[GridEntry]) -> Vec<GridEntry> {
    let mut m: BTreeMap<(String, i32), u64> = BTreeMap::new();
    for e in entries {
        *m.entry((e.w.clone(), e.deg)).or_default() += e.mult;
    }
    m.into_iter().map(|((w, deg), mult)| GridEntry { w, deg, mult }).collect()
}
