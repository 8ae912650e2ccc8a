//! OEIS triangles used as reference data.
//!
//! A handful of triangles ship with the crate as b-files (see
//! `fixtures/oeis`). Row `j` of a fixture is OEIS row `offset + j` and is
//! compared against row `j` of a matrix. A [`Fetcher`] can download further
//! b-files into a local cache; nothing in the library calls it implicitly.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::MultiPoly;
use crate::error::{Error, Result};
use crate::riordan::LowerTriMatrix;

/// Parsed b-file: `(index, value)` pairs with strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter().map(|(_, v)| v)
    }
}

/// Parses `index value` lines. Blank lines and lines starting with `#` are
/// skipped; line numbers in errors are 1-based.
pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (at, line) in text.lines().enumerate() {
        let line_no = at + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::MalformedLine(line_no));
        };
        let index: i64 = index.parse().map_err(|_| Error::MalformedLine(line_no))?;
        let value: BigInt = value.parse().map_err(|_| Error::MalformedLine(line_no))?;
        if entries.last().is_some_and(|(prev, _)| *prev >= index) {
            return Err(Error::NonIncreasingIndex(line_no));
        }
        entries.push((index, value));
    }
    Ok(BFile { entries })
}

pub fn render_bfile(bfile: &BFile) -> String {
    bfile.entries.iter().map(|(n, v)| format!("{n} {v}\n")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    ByRows,
    /// Each row is listed from its last entry to its first.
    ByRowsReversed,
}

/// Number of entries OEIS lists for row `j` of the fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowShape {
    /// `j + 1` entries.
    Full,
    /// `j/2 + 1` entries, as for γ-vectors.
    Half,
    /// A plain sequence, not a triangle.
    Flat,
}

impl RowShape {
    fn len(self, row: usize) -> usize {
        match self {
            RowShape::Full => row + 1,
            RowShape::Half => row / 2 + 1,
            RowShape::Flat => usize::MAX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleFixture {
    pub anumber: &'static str,
    pub title: String,
    pub reading: Reading,
    pub offset: i64,
    pub shape: RowShape,
    pub values: Vec<BigInt>,
}

impl TriangleFixture {
    /// The values split into rows, each in natural `k = 0, 1, ..` order.
    /// A trailing incomplete row is dropped.
    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        if self.shape == RowShape::Flat {
            return vec![self.values.clone()];
        }
        let mut rows = Vec::new();
        let mut rest = self.values.as_slice();
        loop {
            let len = self.shape.len(rows.len());
            if rest.len() < len {
                return rows;
            }
            let (row, tail) = rest.split_at(len);
            let mut row = row.to_vec();
            if self.reading == Reading::ByRowsReversed {
                row.reverse();
            }
            rows.push(row);
            rest = tail;
        }
    }
}

const EMBEDDED: [(&str, RowShape, &str); 12] = [
    ("A001147", RowShape::Flat, include_str!("../fixtures/oeis/A001147.txt")),
    ("A001263", RowShape::Full, include_str!("../fixtures/oeis/A001263.txt")),
    ("A007318", RowShape::Full, include_str!("../fixtures/oeis/A007318.txt")),
    ("A008292", RowShape::Full, include_str!("../fixtures/oeis/A008292.txt")),
    ("A013609", RowShape::Full, include_str!("../fixtures/oeis/A013609.txt")),
    ("A019538", RowShape::Full, include_str!("../fixtures/oeis/A019538.txt")),
    ("A033282", RowShape::Full, include_str!("../fixtures/oeis/A033282.txt")),
    ("A038207", RowShape::Full, include_str!("../fixtures/oeis/A038207.txt")),
    ("A055151", RowShape::Half, include_str!("../fixtures/oeis/A055151.txt")),
    ("A074909", RowShape::Full, include_str!("../fixtures/oeis/A074909.txt")),
    ("A101280", RowShape::Half, include_str!("../fixtures/oeis/A101280.txt")),
    ("A135278", RowShape::Full, include_str!("../fixtures/oeis/A135278.txt")),
];

/// Raw bytes of an embedded fixture file.
pub fn fixture_source(anumber: &str) -> Result<&'static str> {
    EMBEDDED
        .iter()
        .find(|(a, _, _)| *a == anumber)
        .map(|(_, _, text)| *text)
        .ok_or_else(|| Error::UnknownFixture(anumber.to_string()))
}

fn load(anumber: &'static str, shape: RowShape, text: &str) -> TriangleFixture {
    let bfile = parse_bfile(text).expect("embedded fixtures are well formed");
    let title = text
        .lines()
        .next()
        .and_then(|l| l.split_once(": "))
        .map_or_else(String::new, |(_, t)| t.trim().to_string());
    TriangleFixture {
        anumber,
        title,
        reading: Reading::ByRows,
        offset: bfile.entries.first().map_or(0, |(n, _)| *n),
        shape,
        values: bfile.values().cloned().collect(),
    }
}

pub fn fixtures() -> &'static [TriangleFixture] {
    static ALL: OnceLock<Vec<TriangleFixture>> = OnceLock::new();
    ALL.get_or_init(|| EMBEDDED.iter().map(|&(a, shape, text)| load(a, shape, text)).collect())
}

pub fn fixture(anumber: &str) -> Result<&'static TriangleFixture> {
    fixtures().iter().find(|f| f.anumber == anumber).ok_or_else(|| Error::UnknownFixture(anumber.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub expected: BigInt,
    pub found: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleReport {
    pub anumber: String,
    pub offset: i64,
    pub rows_compared: usize,
    pub entries_matched: usize,
    pub mismatch: Option<Mismatch>,
}

impl TriangleReport {
    pub fn is_match(&self) -> bool {
        self.mismatch.is_none() && self.rows_compared > 0
    }
}

impl fmt::Display for TriangleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(
                f,
                "{}: {} entries in {} rows match (rows from offset {})",
                self.anumber, self.entries_matched, self.rows_compared, self.offset
            ),
            Some(m) => write!(
                f,
                "{}: row {} (OEIS row {}) column {}: expected {}, found {}",
                self.anumber,
                m.row,
                self.offset + m.row as i64,
                m.col,
                m.expected,
                m.found
            ),
        }
    }
}

/// Compares a matrix with a fixture over the rows both provide. Entries a
/// half-shaped fixture omits must be zero in the matrix.
pub fn check_triangle(m: &LowerTriMatrix<MultiPoly>, fix: &TriangleFixture) -> Result<TriangleReport> {
    let m = m.to_integers()?;
    let expected = fix.rows();
    let mut report = TriangleReport {
        anumber: fix.anumber.to_string(),
        offset: fix.offset,
        rows_compared: 0,
        entries_matched: 0,
        mismatch: None,
    };
    let rows = if fix.shape == RowShape::Flat { 0 } else { expected.len().min(m.size()) };
    for (n, want) in expected.iter().take(rows).enumerate() {
        let zero = BigInt::zero();
        for (k, found) in m.row(n).iter().enumerate() {
            let want = want.get(k).unwrap_or(&zero);
            if want != found {
                report.mismatch = Some(Mismatch { row: n, col: k, expected: want.clone(), found: found.clone() });
                return Ok(report);
            }
            report.entries_matched += 1;
        }
        report.rows_compared += 1;
    }
    Ok(report)
}

/// Compares a sequence with a flat fixture over the common prefix.
pub fn check_sequence(values: &[BigInt], fix: &TriangleFixture) -> TriangleReport {
    let mut report = TriangleReport {
        anumber: fix.anumber.to_string(),
        offset: fix.offset,
        rows_compared: 1,
        entries_matched: 0,
        mismatch: None,
    };
    for (k, (want, found)) in fix.values.iter().zip(values).enumerate() {
        if want != found {
            report.mismatch = Some(Mismatch { row: 0, col: k, expected: want.clone(), found: found.clone() });
            return report;
        }
        report.entries_matched += 1;
    }
    report
}

pub const ENDPOINT_VAR: &str = "RIORDAN_OEIS_URL";
pub const CACHE_VAR: &str = "RIORDAN_OEIS_CACHE";
pub const DEFAULT_ENDPOINT: &str = "https://oeis.org";

fn validate(anumber: &str) -> Result<()> {
    let ok = anumber.len() == 7 && anumber.starts_with('A') && anumber[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidANumber(anumber.to_string()))
    }
}

/// Downloads b-files from `{endpoint}/Annnnnn/bnnnnnn.txt`, keeping a
/// verbatim copy per A-number in the cache directory.
#[derive(Debug, Clone)]
pub struct Fetcher {
    endpoint: String,
    cache_dir: PathBuf,
    timeout: Duration,
}

impl Fetcher {
    pub fn new(endpoint: impl Into<String>, cache_dir: impl Into<PathBuf>) -> Self {
        Fetcher {
            endpoint: endpoint.into().trim_end_matches('/').to_string(),
            cache_dir: cache_dir.into(),
            timeout: Duration::from_secs(30),
        }
    }

    /// Uses `RIORDAN_OEIS_URL` if set, the public OEIS server otherwise.
    pub fn from_env(cache_dir: impl Into<PathBuf>) -> Self {
        let endpoint = std::env::var(ENDPOINT_VAR).unwrap_or_else(|_| DEFAULT_ENDPOINT.to_string());
        Self::new(endpoint, cache_dir)
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn url(&self, anumber: &str) -> String {
        format!("{}/{}/b{}.txt", self.endpoint, anumber, &anumber[1..])
    }

    pub fn cache_path(&self, anumber: &str) -> PathBuf {
        self.cache_dir.join(format!("{anumber}.txt"))
    }

    /// Cached copy only.
    pub fn cached(&self, anumber: &str) -> Result<BFile> {
        validate(anumber)?;
        match fs::read_to_string(self.cache_path(anumber)) {
            Ok(text) => parse_bfile(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Err(Error::CacheMiss(anumber.to_string())),
            Err(e) => Err(e.into()),
        }
    }

    /// Serves from the cache when possible and downloads otherwise.
    pub fn fetch(&self, anumber: &str) -> Result<BFile> {
        match self.cached(anumber) {
            Err(Error::CacheMiss(_)) => {}
            other => return other,
        }
        let bytes = self.download(anumber)?;
        let text = String::from_utf8(bytes.clone()).map_err(|_| Error::MalformedLine(0))?;
        let bfile = parse_bfile(&text)?;
        store(&self.cache_dir, &self.cache_path(anumber), &bytes)?;
        Ok(bfile)
    }

    fn download(&self, anumber: &str) -> Result<Vec<u8>> {
        let agent: ureq::Agent = ureq::Agent::config_builder().timeout_global(Some(self.timeout)).build().into();
        let unavailable = |e: ureq::Error| Error::NetworkUnavailable(format!("{}: {e}", self.url(anumber)));
        let mut response = agent.get(&self.url(anumber)).call().map_err(unavailable)?;
        response.body_mut().read_to_vec().map_err(unavailable)
    }
}

/// Writes through a temporary file and a rename so readers never see a
/// partial download.
fn store(dir: &Path, path: &Path, bytes: &[u8]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let nanos = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map_or(0, |d| d.as_nanos());
    let tmp = dir.join(format!(".{}.{}.{nanos}.tmp", path.file_name().and_then(|n| n.to_str()).unwrap_or("bfile"), std::process::id()));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })?;
    Ok(())
}

/// Default cache location: `RIORDAN_OEIS_CACHE`, else `.oeis-cache` in the
/// working directory.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_VAR).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".oeis-cache"))
}

pub fn fetch_bfile(anumber: &str, cache_dir: &Path) -> Result<BFile> {
    Fetcher::from_env(cache_dir).fetch(anumber)
}
