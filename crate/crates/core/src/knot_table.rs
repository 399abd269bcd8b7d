//! Named reference polynomials.
//!
//! Tables are UTF-8 text with one `name,components,polynomial` record per
//! line. Lines starting with `#` are comments, except a leading
//! `#convention: <name>` header selecting the polynomial convention:
//!
//! * `morton` (default): `v⁻¹P(L₊) − vP(L₋) = zP(L₀)`, the one used here;
//! * `knot-atlas`: `aP(L₊) − a⁻¹P(L₋) = zP(L₀)`, read with `a = v⁻¹`.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::hecke::homfly;
use crate::poly::LaurentPoly2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub name: String,
    pub components: usize,
    pub polynomial: LaurentPoly2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    Morton,
    KnotAtlas,
}

impl Convention {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "morton" => Some(Convention::Morton),
            "knot-atlas" => Some(Convention::KnotAtlas),
            _ => None,
        }
    }

    /// Rewrites a polynomial given in this convention into the native one.
    pub fn to_native(self, p: LaurentPoly2) -> LaurentPoly2 {
        match self {
            Convention::Morton => p,
            Convention::KnotAtlas => p.invert_v(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnotTable {
    entries: Vec<TableEntry>,
    by_name: HashMap<String, usize>,
}

fn table_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Table {
        line,
        column,
        message: message.into(),
    }
}

impl KnotTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&TableEntry> {
        self.by_name.get(name).map(|&i| &self.entries[i])
    }

    /// Adds an entry after checking the name is new and the component count
    /// fits the parity of the `z`-degrees.
    pub fn insert(&mut self, entry: TableEntry) -> Result<()> {
        check_entry(&entry).map_err(Error::Domain)?;
        if self.by_name.contains_key(&entry.name) {
            return Err(Error::domain(format!("duplicate name {}", entry.name)));
        }
        self.by_name.insert(entry.name.clone(), self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut table = KnotTable::new();
        let mut convention = Convention::Morton;
        let mut seen_record = false;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(value) = comment.trim_start().strip_prefix("convention:") {
                    if seen_record {
                        return Err(table_error(line, 1, "convention header after records"));
                    }
                    let value = value.trim();
                    convention = Convention::parse(value).ok_or_else(|| {
                        table_error(line, 1, format!("unknown convention {value:?}"))
                    })?;
                }
                continue;
            }
            seen_record = true;
            table.push_record(raw, line, convention)?;
        }
        Ok(table)
    }

    fn push_record(&mut self, raw: &str, line: usize, convention: Convention) -> Result<()> {
        let mut fields = raw.splitn(3, ',');
        let (name, comps, poly) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            _ => return Err(table_error(line, 1, "expected name,components,polynomial")),
        };
        let comps_col = name.chars().count() + 2;
        let poly_col = comps_col + comps.chars().count() + 1;
        let name = name.trim();
        if name.is_empty() {
            return Err(table_error(line, 1, "empty name"));
        }
        let components: usize = comps
            .trim()
            .parse()
            .ok()
            .filter(|&c| (1..=3).contains(&c))
            .ok_or_else(|| {
                table_error(
                    line,
                    comps_col,
                    format!("bad component count {:?}", comps.trim()),
                )
            })?;
        let polynomial: LaurentPoly2 = poly.parse().map_err(|e| match e {
            Error::Parse { position, message } => table_error(line, poly_col + position, message),
            other => other,
        })?;
        let entry = TableEntry {
            name: name.to_string(),
            components,
            polynomial: convention.to_native(polynomial),
        };
        if self.by_name.contains_key(name) {
            return Err(table_error(line, 1, format!("duplicate name {name}")));
        }
        check_entry(&entry).map_err(|m| table_error(line, poly_col, m))?;
        self.by_name.insert(entry.name.clone(), self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Text form in the native convention; [`KnotTable::parse`] reads it
    /// back to an equal table.
    pub fn render(&self) -> String {
        let mut out = String::from("#convention: morton\n# name,components,polynomial\n");
        for e in &self.entries {
            out.push_str(&format!("{},{},{}\n", e.name, e.components, e.polynomial));
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.render())
            .map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display())))
    }

    /// First name whose polynomial is `p` or the mirror image of `p`.
    pub fn match_poly(&self, p: &LaurentPoly2) -> Option<&str> {
        let mirror = p.mirror();
        self.entries
            .iter()
            .find(|e| e.polynomial == *p || e.polynomial == mirror)
            .map(|e| e.name.as_str())
    }
}

fn check_entry(e: &TableEntry) -> std::result::Result<(), String> {
    if e.polynomial.is_zero() {
        return Err("zero polynomial".into());
    }
    if !e.polynomial.parity_consistent() {
        return Err("mixed parities of v- and z-exponents".into());
    }
    let expected = ((e.components as i32) - 1).rem_euclid(2);
    if e.polynomial.z_parity() != Some(expected) {
        return Err(format!(
            "z-degrees do not fit {} component(s)",
            e.components
        ));
    }
    Ok(())
}

/// Closed 3-braid representatives of small knots, in band letters.
pub const REFERENCE_BRAIDS: &[(&str, &str)] = &[
    ("unknot", "[1 2]"),
    ("3_1", "[1 1 1 2]"),
    ("4_1", "[1 -2 1 -2]"),
    ("5_1", "[1 1 1 1 1 2]"),
    ("5_2", "[1 1 1 2 -1 2]"),
    ("6_2", "[1 1 1 -2 1 -2]"),
    ("6_3", "[1 1 -2 1 -2 -2]"),
    ("7_3", "[1 1 1 1 1 2 -1 2]"),
    ("7_5", "[1 1 1 1 2 -1 2 2]"),
    ("8_20", "[1 1 1 -2 -1 -1 -1 -2]"),
    ("8_21", "[1 1 1 2 -1 -1 2 2]"),
    ("3_1#3_1", "[1 1 1 2 2 2]"),
    ("3_1#!3_1", "[1 1 1 -2 -2 -2]"),
];

/// A table of the reference knots with polynomials computed here.
pub fn make_table() -> KnotTable {
    let mut table = KnotTable::new();
    for (name, braid) in REFERENCE_BRAIDS {
        let word: BraidWord = braid.parse().expect("reference braid");
        table
            .insert(TableEntry {
                name: name.to_string(),
                components: word.closure_components(),
                polynomial: homfly(&word),
            })
            .expect("reference table entry");
    }
    table
}
