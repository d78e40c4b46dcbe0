//! One function per subcommand. Each returns the rendered output and whether
//! every check it ran passed.

use std::fmt;
use std::fmt::Write as _;

use homcat::fixtures::{self, FixtureFile, FixtureSet, GridEntry, PdCell, Record, RecordBody, Status};
use homcat::homcat::{ConjectureScope, ParabolicKind, PdFamily, PdKind, PdTable, RegularityReport, ShuffleVariant};
use homcat::{Engine, GeneratorSubset, KlSide};
use serde::Serialize;

use crate::render::{columns, matrix, tsv};
use crate::{CertifyWhich, CharacterFamily, Cli, Command, FixtureAction, Format, KlWhat, TableFamily};

pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn pass(text: String) -> Self {
        Output { text, ok: true }
    }
}

#[derive(Debug)]
pub enum CliError {
    Engine(homcat::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<homcat::Error> for CliError {
    fn from(e: homcat::Error) -> Self {
        CliError::Engine(e)
    }
}

type CmdResult = Result<Output, CliError>;

pub fn run(cli: &Cli) -> CmdResult {
    let engine = |system: &str| Engine::new(system, cli.cap);
    let f = cli.format;
    match &cli.command {
        Command::Elements { system, bruhat } => cmd_elements(&engine(system)?, *bruhat, f),
        Command::Kl { system, what } => cmd_kl(&engine(system)?, *what, f),
        Command::Table { system, family, subset } => cmd_table(&engine(system)?, *family, subset.as_deref(), f),
        Command::Certify { system, which, arg } => cmd_certify(&engine(system)?, *which, arg.as_deref(), f),
        Command::Character { system, x, y, family } => cmd_character(&engine(system)?, x, y, *family, f),
        Command::Conjectures { system } => cmd_conjectures(&engine(system)?, &fixture_set(cli)?, f),
        Command::Fixtures { system, action } => cmd_fixtures(&engine(system)?, &fixture_set(cli)?, *action, f),
    }
}

fn fixture_set(cli: &Cli) -> Result<FixtureSet, CliError> {
    let dir = cli.fixtures.as_deref().filter(|d| !d.as_os_str().is_empty());
    Ok(FixtureSet::resolve(dir)?)
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn layout(rows: &[Vec<String>], f: Format) -> String {
    match f {
        Format::Tsv => tsv(rows),
        _ => columns(rows),
    }
}

fn sealed(records: Vec<RecordBody>) -> String {
    let mut file =
        FixtureFile { version: fixtures::FORMAT_VERSION, records: records.into_iter().map(Record::new).collect() };
    file.seal_all();
    file.to_json_pretty() + "\n"
}

fn names(e: &Engine, ws: &[usize]) -> Vec<String> {
    ws.iter().map(|&w| e.name(w)).collect()
}

fn all_names(e: &Engine) -> Vec<String> {
    (0..e.system().order()).map(|w| e.name(w)).collect()
}

/// Subset in fixture style: generator names joined by commas.
fn subset_label(e: &Engine, j: GeneratorSubset) -> String {
    e.system().render_subset(j).trim_start_matches('{').trim_end_matches('}').to_string()
}

fn require<'a>(arg: Option<&'a str>, what: &str) -> Result<&'a str, CliError> {
    arg.ok_or_else(|| CliError::Usage(format!("missing argument: {what}")))
}

pub fn cmd_elements(e: &Engine, bruhat: bool, f: Format) -> CmdResult {
    let sys = e.system();
    if f == Format::Json {
        return Ok(Output::pass(json(&sys.summary(bruhat))));
    }
    let mut rows = vec![vec!["index".into(), "element".into(), "length".into(), "inverse".into()]];
    for w in 0..sys.order() {
        rows.push(vec![w.to_string(), e.name(w), sys.len_idx(w).to_string(), e.name(sys.inv_idx(w))]);
    }
    let mut text = layout(&rows, f);
    if bruhat {
        let mut rows = vec![vec!["element".into(), "bruhat-below".into()]];
        for w in 0..sys.order() {
            let below = sys.bruhat_interval_below(w);
            rows.push(vec![e.name(w), names(e, &below).join(" ")]);
        }
        text.push('\n');
        text += &layout(&rows, f);
    }
    Ok(Output::pass(text))
}

pub fn cmd_kl(e: &Engine, what: KlWhat, f: Format) -> CmdResult {
    let kl = e.kl();
    let n = e.system().order();
    let text = match what {
        KlWhat::Polys | KlWhat::Mu | KlWhat::Structure => {
            let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match what {
                KlWhat::Polys => (
                    vec!["y", "w", "h"],
                    (0..n)
                        .flat_map(|w| {
                            kl.column(w).iter().map(move |(y, p)| vec![e.name(*y as usize), e.name(w), p.to_string()])
                        })
                        .collect(),
                ),
                KlWhat::Mu => (
                    vec!["y", "w", "mu"],
                    (0..n)
                        .flat_map(|w| {
                            kl.mu_list(w).iter().map(move |(y, m)| vec![e.name(*y as usize), e.name(w), m.to_string()])
                        })
                        .collect(),
                ),
                _ => {
                    kl.fill_structure_constants();
                    let mut rows = Vec::new();
                    for x in 0..n {
                        for y in 0..n {
                            for (z, p) in kl.structure_idx(x, y) {
                                rows.push(vec![e.name(x), e.name(y), e.name(*z as usize), p.to_string()]);
                            }
                        }
                    }
                    (vec!["x", "y", "z", "h"], rows)
                }
            };
            match f {
                Format::Json => {
                    let objs: Vec<serde_json::Map<String, serde_json::Value>> = rows
                        .iter()
                        .map(|r| header.iter().zip(r).map(|(k, v)| (k.to_string(), serde_json::json!(v))).collect())
                        .collect();
                    json(&objs)
                }
                _ => {
                    let mut all = vec![header.iter().map(|s| s.to_string()).collect()];
                    all.extend(rows);
                    layout(&all, f)
                }
            }
        }
        KlWhat::Cells => {
            let cells = e.cells();
            let part = |side| -> Vec<Vec<String>> { cells.partition(side).iter().map(|c| names(e, c)).collect() };
            let sides = [("left", KlSide::L), ("right", KlSide::R), ("two-sided", KlSide::J)];
            match f {
                Format::Json => {
                    let obj: serde_json::Map<String, serde_json::Value> =
                        sides.iter().map(|(k, s)| (k.to_string(), serde_json::json!(part(*s)))).collect();
                    json(&obj)
                }
                _ => {
                    let mut rows = vec![vec!["side".into(), "cell".into(), "a".into(), "elements".into()]];
                    for (label, side) in sides {
                        for (i, c) in cells.partition(side).iter().enumerate() {
                            rows.push(vec![label.into(), i.to_string(), e.a(c[0]).to_string(), names(e, c).join(" ")]);
                        }
                    }
                    layout(&rows, f)
                }
            }
        }
        KlWhat::Afun => {
            let values: Vec<u32> = (0..n).map(|w| e.a(w) as u32).collect();
            match f {
                Format::Json => sealed(vec![RecordBody::PdRow {
                    system: e.system().name().into(),
                    table: "a-function".into(),
                    subset: None,
                    elements: all_names(e),
                    values,
                }]),
                _ => layout(
                    &matrix("w", &all_names(e), vec![("a".into(), values.iter().map(u32::to_string).collect())]),
                    f,
                ),
            }
        }
        KlWhat::Bfun => {
            let cells = e.cells();
            match f {
                Format::Json => {
                    let values: Vec<Vec<homcat::Degree>> =
                        (0..n).map(|x| (0..n).map(|y| cells.b_idx(x, y)).collect()).collect();
                    json(&serde_json::json!({ "rows": all_names(e), "cols": all_names(e), "values": values }))
                }
                _ => {
                    let rows =
                        (0..n).map(|x| (e.name(x), (0..n).map(|y| cells.b_idx(x, y).to_string()).collect())).collect();
                    layout(&matrix("b(x,y)", &all_names(e), rows), f)
                }
            }
        }
    };
    Ok(Output::pass(text))
}

pub fn cmd_table(e: &Engine, family: TableFamily, subset: Option<&str>, f: Format) -> CmdResult {
    let system = e.system().name().to_string();
    let pd_family = match family {
        TableFamily::TwistedP => Some(PdFamily::TwistedProjective),
        TableFamily::TwistedT => Some(PdFamily::TwistedTilting),
        TableFamily::ShuffledP => Some(PdFamily::ShuffledProjective),
        TableFamily::ShuffledT => Some(PdFamily::ShuffledTilting),
        _ => None,
    };
    if let Some(pf) = pd_family {
        return Ok(pd_matrix(e, e.pd_table(pf), f));
    }
    // pd rows as (table name, indexing elements, values)
    let (label, rows, sets): (Option<String>, Vec<(String, Vec<usize>, Vec<u32>)>, Vec<(String, Vec<usize>)>) =
        match family {
            TableFamily::Structural => {
                let all: Vec<usize> = (0..e.system().order()).collect();
                let rows = e
                    .structural_table()
                    .into_iter()
                    .map(|(k, v)| (k.table_name().to_string(), all.clone(), v.into_iter().map(|x| x as u32).collect()))
                    .collect();
                (None, rows, Vec::new())
            }
            TableFamily::Parabolic => {
                let j = e.system().parse_subset(require(subset, "generator subset J")?)?;
                let short = e.s_subcategory_summary(j).tilting_indices;
                let mut rows = Vec::new();
                for (kind, name) in [
                    (ParabolicKind::Tilting, "parabolic-tilting-pd"),
                    (ParabolicKind::Injective, "parabolic-injective-pd"),
                ] {
                    let v = short
                        .iter()
                        .map(|&x| e.parabolic_pd_idx(kind, x, j).map(|d| d as u32))
                        .collect::<homcat::Result<_>>()?;
                    rows.push((name.to_string(), short.clone(), v));
                }
                (Some(subset_label(e, j)), rows, Vec::new())
            }
            _ => {
                let j = e.system().parse_subset(require(subset, "generator subset J")?)?;
                let s = e.s_subcategory_summary(j);
                let u = |v: &[usize]| v.iter().map(|&x| x as u32).collect::<Vec<_>>();
                let rows = vec![
                    ("s-subcategory-projective-pd".into(), s.projective_indices.clone(), u(&s.projective_pd)),
                    ("s-subcategory-injective-pd".into(), s.projective_indices.clone(), u(&s.injective_pd)),
                    ("s-subcategory-tilting-pd".into(), s.tilting_indices.clone(), u(&s.tilting_pd)),
                ];
                let sets = vec![
                    ("s-subcategory-projective-indices".into(), s.projective_indices.clone()),
                    ("s-subcategory-tilting-indices".into(), s.tilting_indices.clone()),
                ];
                (Some(subset_label(e, j)), rows, sets)
            }
        };
    let text = match f {
        Format::Json => {
            let mut records: Vec<RecordBody> = sets
                .iter()
                .map(|(table, ws)| RecordBody::IndexSet {
                    system: system.clone(),
                    table: table.clone(),
                    subset: label.clone(),
                    elements: names(e, ws),
                })
                .collect();
            records.extend(rows.iter().map(|(table, ws, values)| RecordBody::PdRow {
                system: system.clone(),
                table: table.clone(),
                subset: label.clone(),
                elements: names(e, ws),
                values: values.clone(),
            }));
            sealed(records)
        }
        _ => {
            let mut out = String::new();
            for (table, ws, values) in &rows {
                let title = match &label {
                    Some(j) => format!("{table} J={j}"),
                    None => table.clone(),
                };
                out += &layout(
                    &matrix(&title, &names(e, ws), vec![("pd".into(), values.iter().map(u32::to_string).collect())]),
                    f,
                );
            }
            out
        }
    };
    Ok(Output::pass(text))
}

/// Exact entries bare, ranges as `[lo,hi]`; in text mode each entry carries
/// a letter naming its provenance, explained below the grid.
fn pd_matrix(e: &Engine, t: &PdTable, f: Format) -> Output {
    let n = t.size();
    let cols = all_names(e);
    let text = match f {
        Format::Json => {
            let values = (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| {
                            let r = t.get(x, y);
                            match r.kind {
                                PdKind::Exact(v) => PdCell::Value(v),
                                PdKind::Range(lo, hi) => {
                                    PdCell::Bounded { lo, hi, provenance: Some(r.provenance.as_str().into()) }
                                }
                            }
                        })
                        .collect()
                })
                .collect();
            sealed(vec![RecordBody::PdMatrix {
                system: e.system().name().into(),
                table: t.family.table_name().into(),
                rows: cols.clone(),
                cols: cols.clone(),
                values,
            }])
        }
        Format::Tsv => {
            let mut rows = vec![["x", "y", "pd", "provenance", "conjectured"].map(String::from).to_vec()];
            for x in 0..n {
                for y in 0..n {
                    let r = t.get(x, y);
                    let conj = r.conjectured.map(|c| c.to_string()).unwrap_or_default();
                    rows.push(vec![e.name(x), e.name(y), r.to_string(), r.provenance.as_str().into(), conj]);
                }
            }
            tsv(&rows)
        }
        Format::Text => {
            let mut legend: Vec<&'static str> = Vec::new();
            let mut tag = |p: &'static str| -> char {
                let i = legend.iter().position(|&q| q == p).unwrap_or_else(|| {
                    legend.push(p);
                    legend.len() - 1
                });
                (b'a' + i as u8) as char
            };
            let rows = (0..n)
                .map(|x| {
                    let cells = (0..n)
                        .map(|y| {
                            let r = t.get(x, y);
                            let conj =
                                r.conjectured.filter(|_| !r.is_exact()).map(|c| format!("~{c}")).unwrap_or_default();
                            format!("{r}{}{conj}", tag(r.provenance.as_str()))
                        })
                        .collect();
                    (e.name(x), cells)
                })
                .collect();
            let mut out = format!("pd {} on {} (rows x, columns y)\n", t.family.module(), e.system().name());
            out += &columns(&matrix("x\\y", &cols, rows));
            for (i, p) in legend.iter().enumerate() {
                let _ = writeln!(out, "  {} = {p}", (b'a' + i as u8) as char);
            }
            if t.rows().flatten().any(|r| !r.is_exact() && r.conjectured.is_some()) {
                out += "  ~n = conjectured value\n";
            }
            for c in &t.conflicts {
                let _ = writeln!(out, "  conflict: {c}");
            }
            out
        }
    };
    Output { text, ok: t.conflicts.is_empty() }
}

pub fn cmd_certify(e: &Engine, which: CertifyWhich, arg: Option<&str>, f: Format) -> CmdResult {
    let sys = e.system();
    let both = [ShuffleVariant::Projective, ShuffleVariant::Tilting];
    let reports: Vec<RegularityReport> = match which {
        CertifyWhich::Ringel => vec![e.certify_auslander_ringel()?],
        CertifyWhich::Auslander => vec![e.certify_auslander()?],
        CertifyWhich::Parabolic => {
            let j = sys.parse_subset(require(arg, "generator subset J")?)?;
            if j == GeneratorSubset::full(sys.rank()) {
                return Err(CliError::Usage("parabolic certificate needs a proper subset".into()));
            }
            vec![e.certify_parabolic(j)?]
        }
        CertifyWhich::Shuffle => {
            let j = sys.parse_subset(require(arg, "simple reflection s")?)?;
            let mut it = j.iter();
            let (Some(s), None) = (it.next(), it.next()) else {
                return Err(CliError::Usage("shuffle certificate needs exactly one generator".into()));
            };
            both.iter().map(|&v| e.certify_shuffle_simple(s, v)).collect::<homcat::Result<_>>()?
        }
        CertifyWhich::TwistedLevi => {
            let j = sys.parse_subset(require(arg, "generator subset J")?)?;
            both.iter().map(|&v| e.certify_twisted_levi(j, v)).collect::<homcat::Result<_>>()?
        }
        CertifyWhich::All => e.certify_all()?,
    };
    let ok = reports.iter().all(RegularityReport::passes);
    let text = match f {
        Format::Json => json(&reports),
        Format::Tsv => {
            let mut rows =
                vec![["system", "certificate", "verdict", "checked", "violations"].map(String::from).to_vec()];
            for r in &reports {
                let verdict = if r.passes() { "pass" } else { "fail" };
                rows.push(vec![
                    r.system.clone(),
                    r.certificate.clone(),
                    verdict.into(),
                    r.checked.to_string(),
                    r.violations.len().to_string(),
                ]);
            }
            tsv(&rows)
        }
        Format::Text => {
            let mut out: String = reports.iter().map(|r| r.to_string()).collect();
            let passed = reports.iter().filter(|r| r.passes()).count();
            let _ = writeln!(out, "{passed} of {} certificates passed", reports.len());
            out
        }
    };
    Ok(Output { text, ok })
}

pub fn cmd_character(e: &Engine, x: &str, y: &str, family: CharacterFamily, f: Format) -> CmdResult {
    let (xi, yi) = (e.element(x)?, e.element(y)?);
    let (grid, tag, module) = match family {
        CharacterFamily::TwistedP => (e.twisted_projective_character_idx(xi, yi)?, "twisted-p", "⊤_x P_y"),
        CharacterFamily::TwistedT => (e.twisted_tilting_character_idx(xi, yi)?, "twisted-t", "⊤_x T_y"),
    };
    let text = match f {
        Format::Json => sealed(vec![RecordBody::Grid {
            system: e.system().name().into(),
            family: tag.into(),
            x: e.name(xi),
            y: e.name(yi),
            entries: grid.entries().map(|(deg, w, mult)| GridEntry { w: e.name(w), deg, mult }).collect(),
            erratum: None,
        }]),
        Format::Tsv => {
            let mut rows = vec![["deg", "w", "mult"].map(String::from).to_vec()];
            rows.extend(grid.entries().map(|(d, w, m)| vec![d.to_string(), e.name(w), m.to_string()]));
            tsv(&rows)
        }
        Format::Text => format!("{module}, x={} y={}\n{}", e.name(xi), e.name(yi), grid.render(e)),
    };
    Ok(Output::pass(text))
}

pub fn cmd_conjectures(e: &Engine, set: &FixtureSet, f: Format) -> CmdResult {
    let scope =
        if set.has_system(e.system().name()) { ConjectureScope::Fixtures(set) } else { ConjectureScope::Computed };
    let r = e.check_conjectures(scope)?;
    let text = match f {
        Format::Json => json(&r),
        _ => {
            let mut rows = vec![["check", "confirmed", "undecided", "counterexamples"].map(String::from).to_vec()];
            for c in &r.checks {
                rows.push(vec![
                    c.name.clone(),
                    c.confirmed.to_string(),
                    c.undecided.to_string(),
                    c.counterexamples.len().to_string(),
                ]);
            }
            let mut out = layout(&rows, f);
            if f == Format::Text {
                out = format!("{} ({} scope)\n{out}", r.system, r.scope);
                for c in &r.checks {
                    let _ = writeln!(out, "{}: {}", c.name, c.statement);
                    for x in &c.counterexamples {
                        let _ = writeln!(out, "  counterexample {x}");
                    }
                }
            }
            out
        }
    };
    Ok(Output { text, ok: r.passes() })
}

fn kind_of(body: &RecordBody) -> String {
    serde_json::to_value(body).ok().and_then(|v| v["kind"].as_str().map(String::from)).unwrap_or_default()
}

pub fn cmd_fixtures(e: &Engine, set: &FixtureSet, action: FixtureAction, f: Format) -> CmdResult {
    let system = e.system().name();
    match action {
        FixtureAction::List => {
            if !set.has_system(system) {
                return Err(homcat::Error::FixtureMissing(system.into()).into());
            }
            let (docs, computable): (Vec<&Record>, Vec<&Record>) =
                set.for_system(system).partition(|r| r.body.is_documentation());
            let text = match f {
                Format::Json => {
                    let list = |rs: &[&Record]| rs.iter().map(|r| r.body.title()).collect::<Vec<_>>();
                    json(
                        &serde_json::json!({ "system": system, "computable": list(&computable), "documentation": list(&docs) }),
                    )
                }
                _ => {
                    let mut rows = vec![["class", "kind", "title"].map(String::from).to_vec()];
                    for (class, rs) in [("computable", &computable), ("documentation", &docs)] {
                        rows.extend(rs.iter().map(|r| vec![class.to_string(), kind_of(&r.body), r.body.title()]));
                    }
                    layout(&rows, f)
                }
            };
            Ok(Output::pass(text))
        }
        FixtureAction::Verify => {
            let report = fixtures::verify(e, set)?;
            let ok = report.passes();
            let text = match f {
                Format::Json => json(&report),
                Format::Tsv => {
                    let mut rows = vec![["source", "title", "status", "diffs"].map(String::from).to_vec()];
                    for o in &report.outcomes {
                        let status = serde_json::to_value(&o.status)
                            .ok()
                            .and_then(|v| v.as_str().map(String::from))
                            .unwrap_or_default();
                        rows.push(vec![o.source.clone(), o.title.clone(), status, o.diffs.join("; ")]);
                    }
                    tsv(&rows)
                }
                Format::Text => {
                    let mut out = String::new();
                    let mut docs = Vec::new();
                    for o in &report.outcomes {
                        let tag = match o.status {
                            Status::Match => "match",
                            Status::Mismatch => "MISMATCH",
                            Status::BadSeal => "BAD-SEAL",
                            Status::Documentation => {
                                docs.push(&o.title);
                                continue;
                            }
                        };
                        let _ = writeln!(out, "{tag:<9} {}", o.title);
                        for d in &o.diffs {
                            let _ = writeln!(out, "          {d}");
                        }
                    }
                    if !docs.is_empty() {
                        out += "documentation only (seal checked):\n";
                        for t in docs {
                            let _ = writeln!(out, "          {t}");
                        }
                    }
                    let _ = writeln!(
                        out,
                        "{}: {} match, {} mismatch, {} bad seal, {} documentation",
                        report.system,
                        report.count(Status::Match),
                        report.count(Status::Mismatch),
                        report.count(Status::BadSeal),
                        report.count(Status::Documentation)
                    );
                    out
                }
            };
            Ok(Output { text, ok })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Engine {
        Engine::new("A2", homcat::DEFAULT_CAP).unwrap()
    }

    #[test]
    fn structural_rows_in_text() {
        let out = cmd_table(&a2(), TableFamily::Structural, None, Format::Text).unwrap();
        assert!(out.ok);
        let tilting = out.text.lines().skip_while(|l| !l.starts_with("tilting-pd")).nth(1).unwrap();
        assert_eq!(tilting.split_whitespace().collect::<Vec<_>>(), ["pd", "0", "1", "1", "1", "1", "3"]);
    }

    #[test]
    fn pd_matrix_text_marks_provenance() {
        let e = a2();
        let out = cmd_table(&e, TableFamily::TwistedP, None, Format::Text).unwrap();
        assert!(out.text.contains(" = projective-case"));
        let out = cmd_table(&e, TableFamily::ShuffledP, None, Format::Text).unwrap();
        assert!(out.text.contains("[0,"), "{}", out.text);
    }

    #[test]
    fn usage_errors() {
        let e = a2();
        assert!(matches!(cmd_table(&e, TableFamily::Parabolic, None, Format::Text), Err(CliError::Usage(_))));
        assert!(matches!(cmd_certify(&e, CertifyWhich::Shuffle, Some("s,t"), Format::Text), Err(CliError::Usage(_))));
        assert!(matches!(cmd_certify(&e, CertifyWhich::Parabolic, Some("s,t"), Format::Text), Err(CliError::Usage(_))));
        assert!(matches!(
            cmd_character(&e, "q", "e", CharacterFamily::TwistedP, Format::Text),
            Err(CliError::Engine(_))
        ));
    }
}
