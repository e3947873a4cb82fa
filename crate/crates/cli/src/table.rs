use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use knotforge::diagram::{parse_pd, PdCode};

/// Named PD codes read from a `name,pd` CSV file. Lines starting with `#`
/// are comments; the leading ones are kept as the provenance string.
#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    entries: BTreeMap<String, PdCode>,
    order: Vec<String>,
    pub provenance: String,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableError {
    pub line: Option<u64>,
    pub message: String,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "knot table, line {l}: {}", self.message),
            None => write!(f, "knot table: {}", self.message),
        }
    }
}

impl std::error::Error for TableError {}

fn err(line: Option<u64>, message: impl Into<String>) -> TableError {
    TableError { line, message: message.into() }
}

impl KnotTable {
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let provenance = text
            .lines()
            .take_while(|l| l.trim_start().starts_with('#'))
            .map(|l| l.trim_start().trim_start_matches('#').trim())
            .collect::<Vec<_>>()
            .join(" ");
        // csv positions point before any skipped comment lines
        let line_of = |p: &csv::Position| {
            let start = text.as_bytes()[..p.byte() as usize].iter().filter(|&&b| b == b'\n').count();
            let skipped = text.lines().skip(start).take_while(|l| l.trim().is_empty() || l.trim_start().starts_with('#')).count();
            (start + skipped + 1) as u64
        };
        let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(text.as_bytes());
        let mut table = KnotTable { provenance, ..Default::default() };
        let headers = match rdr.headers() {
            Ok(h) => h.clone(),
            Err(e) => return Err(err(e.position().map(line_of), e.to_string())),
        };
        if headers.is_empty() {
            table.warnings.push("the knot table is empty".into());
            return Ok(table);
        }
        let col = |name: &str| headers.iter().position(|h| h == name);
        let (Some(ni), Some(pi)) = (col("name"), col("pd")) else {
            return Err(err(Some(1), "expected the columns `name` and `pd`"));
        };
        for rec in rdr.records() {
            let rec = rec.map_err(|e| err(e.position().map(line_of), e.to_string()))?;
            let line = rec.position().map(line_of);
            let name = rec.get(ni).unwrap_or("").to_string();
            if name.is_empty() {
                return Err(err(line, "missing knot name"));
            }
            let pd = parse_pd(rec.get(pi).unwrap_or("")).map_err(|e| err(line, format!("{name}: {e}")))?;
            if table.entries.contains_key(&name) {
                return Err(err(line, format!("duplicate knot name {name}")));
            }
            table.order.push(name.clone());
            table.entries.insert(name, pd);
        }
        if table.order.is_empty() {
            table.warnings.push("the knot table is empty".into());
        }
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self, TableError> {
        let text = std::fs::read_to_string(path).map_err(|e| err(None, format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Names in file order.
    pub fn names(&self) -> &[String] {
        &self.order
    }

    pub fn get(&self, name: &str) -> Option<&PdCode> {
        self.entries.get(name)
    }

    /// CSV text that [`KnotTable::parse`] reads back to the same table.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if !self.provenance.is_empty() {
            out += &format!("# {}\n", self.provenance);
        }
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        w.write_record(["name", "pd"]).unwrap();
        for n in &self.order {
            w.write_record([n.as_str(), &self.entries[n].to_string()]).unwrap();
        }
        out + &String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// Table path: the explicit one, then `KNOTFORGE_TABLE`, then an imported
/// table in `.knotforge/`, then `data/knots.csv` in the working directory,
/// then the table shipped with the sources.
pub fn default_table_path(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Some(p) = std::env::var_os("KNOTFORGE_TABLE") {
        return PathBuf::from(p);
    }
    for p in [".knotforge/knots.csv", "data/knots.csv"] {
        if Path::new(p).is_file() {
            return PathBuf::from(p);
        }
    }
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/knots.csv"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_and_writes() {
        let text = "# source\nname,pd\n3_1,\"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"\n";
        let t = KnotTable::parse(text).unwrap();
        assert_eq!(t.names(), ["3_1"]);
        assert_eq!(t.provenance, "source");
        assert_eq!(KnotTable::parse(&t.to_csv()).unwrap().to_csv(), t.to_csv());
    }

    #[test]
    fn duplicate_names_report_their_line() {
        let text = "name,pd\na,\"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"\n# comment\na,\"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"\n";
        let e = KnotTable::parse(text).unwrap_err();
        assert_eq!(e.line, Some(4));
        assert!(e.message.contains("duplicate"));
    }

    #[test]
    fn bad_pd_reports_its_line() {
        let e = KnotTable::parse("name,pd\nk,\"X[1,2,3]\"\n").unwrap_err();
        assert_eq!(e.line, Some(2));
    }

    #[test]
    fn empty_file_warns() {
        for text in ["", "name,pd\n", "# nothing\n"] {
            let t = KnotTable::parse(text).unwrap();
            assert!(t.is_empty());
            assert_eq!(t.warnings.len(), 1);
        }
    }
}
