//! CSV plumbing: labelled datasets, point files and report output.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use datagrinder::classifier::Dataset;
use datagrinder::Point2;

use crate::error::{CliError, Result};

/// A labelled table with the class label in the last column. String labels
/// become dense ids in order of first appearance.
#[derive(Clone, Debug)]
pub struct CsvDataset {
    pub header: Option<Vec<String>>,
    pub rows: Vec<Vec<f64>>,
    /// Raw label text per row.
    pub label_text: Vec<String>,
    pub class_names: Vec<String>,
    pub labels: Vec<usize>,
}

impl CsvDataset {
    pub fn feature_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn to_dataset(&self) -> Result<Dataset> {
        Ok(Dataset::from_rows(
            &self.rows,
            self.labels.clone(),
            self.class_names.len(),
        )?)
    }
}

struct Table {
    header: Option<Vec<String>>,
    records: Vec<(u64, Vec<String>)>,
}

fn csv_err(path: &Path, source: csv::Error) -> CliError {
    CliError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

/// Reads every record and splits off a header line, recognised by a first
/// line whose leading `numeric` fields do not all parse as numbers.
fn read_table(path: &Path, numeric: impl Fn(usize) -> usize) -> Result<Table> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| csv_err(path, e))?;
    let mut records = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| csv_err(path, e))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.iter().all(str::is_empty) {
            continue;
        }
        records.push((line, rec.iter().map(str::to_owned).collect::<Vec<_>>()));
    }
    let mut header = None;
    if let Some((_, first)) = records.first() {
        let k = numeric(first.len()).min(first.len());
        if first[..k].iter().any(|f| f.parse::<f64>().is_err()) {
            header = Some(records.remove(0).1);
        }
    }
    Ok(Table { header, records })
}

fn parse_field(path: &Path, line: u64, col: usize, text: &str) -> Result<f64> {
    match text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(CliError::Parse {
            path: path.to_path_buf(),
            line,
            message: format!("column {} is not a finite number: {text:?}", col + 1),
        }),
    }
}

fn check_width(path: &Path, line: u64, found: usize, expected: usize) -> Result<()> {
    if found != expected {
        return Err(CliError::Parse {
            path: path.to_path_buf(),
            line,
            message: format!("expected {expected} columns, found {found}"),
        });
    }
    Ok(())
}

pub fn read_dataset(path: &Path) -> Result<CsvDataset> {
    let table = read_table(path, |w| w.saturating_sub(1))?;
    let Some((_, first)) = table.records.first() else {
        return Err(CliError::Data(format!("{}: no data rows", path.display())));
    };
    let width = first.len();
    if width < 3 {
        return Err(CliError::Data(format!(
            "{}: need at least two feature columns and a label column",
            path.display()
        )));
    }
    let mut out = CsvDataset {
        header: table.header,
        rows: Vec::with_capacity(table.records.len()),
        label_text: Vec::with_capacity(table.records.len()),
        class_names: Vec::new(),
        labels: Vec::with_capacity(table.records.len()),
    };
    for (line, rec) in &table.records {
        check_width(path, *line, rec.len(), width)?;
        let row = rec[..width - 1]
            .iter()
            .enumerate()
            .map(|(c, f)| parse_field(path, *line, c, f))
            .collect::<Result<Vec<_>>>()?;
        let text = rec[width - 1].clone();
        let id = match out.class_names.iter().position(|n| *n == text) {
            Some(id) => id,
            None => {
                out.class_names.push(text.clone());
                out.class_names.len() - 1
            }
        };
        out.rows.push(row);
        out.label_text.push(text);
        out.labels.push(id);
    }
    Ok(out)
}

/// Rows for prediction: `features` numeric columns, optionally followed by a
/// label column.
pub struct PredictInput {
    pub header: Option<Vec<String>>,
    pub records: Vec<Vec<String>>,
    pub rows: Vec<Vec<f64>>,
    pub labels: Option<Vec<String>>,
}

pub fn read_predict_input(path: &Path, features: usize) -> Result<PredictInput> {
    let table = read_table(path, |_| features)?;
    let Some((_, first)) = table.records.first() else {
        return Err(CliError::Data(format!("{}: no data rows", path.display())));
    };
    let width = first.len();
    if width != features && width != features + 1 {
        return Err(CliError::Data(format!(
            "{}: model expects {features} features, file has {width} columns",
            path.display()
        )));
    }
    let mut rows = Vec::with_capacity(table.records.len());
    let mut labels = (width > features).then(Vec::new);
    let mut records = Vec::with_capacity(table.records.len());
    for (line, rec) in table.records {
        check_width(path, line, rec.len(), width)?;
        rows.push(
            rec[..features]
                .iter()
                .enumerate()
                .map(|(c, f)| parse_field(path, line, c, f))
                .collect::<Result<Vec<_>>>()?,
        );
        if let Some(l) = labels.as_mut() {
            l.push(rec[features].clone());
        }
        records.push(rec);
    }
    Ok(PredictInput {
        header: table.header,
        records,
        rows,
        labels,
    })
}

/// Two-column `x,y` point file with an optional header.
pub fn read_points(path: &Path) -> Result<Vec<Point2>> {
    let table = read_table(path, |_| 2)?;
    table
        .records
        .iter()
        .map(|(line, rec)| {
            check_width(path, *line, rec.len(), 2)?;
            Ok(Point2::new(
                parse_field(path, *line, 0, &rec[0])?,
                parse_field(path, *line, 1, &rec[1])?,
            ))
        })
        .collect()
}

/// Report sink: the `--out` file when given, stdout otherwise.
pub fn open_output(out: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    match out {
        Some(path) => {
            let f = File::create(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(Box::new(io::BufWriter::new(f)))
        }
        None => Ok(Box::new(io::BufWriter::new(io::stdout()))),
    }
}

pub fn csv_writer(out: Box<dyn Write>) -> csv::Writer<Box<dyn Write>> {
    csv::WriterBuilder::new().from_writer(out)
}
