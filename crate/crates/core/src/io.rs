//! Batch ingestion, lattice generation and result serialisation.
//!
//! Two line formats are supported for both input and output:
//!
//! * CSV with a mandatory header, comma separated, LF or CRLF endings and no
//!   quoting. Column names are matched case-insensitively; unknown columns are
//!   skipped and reported in [`RecordBatch::ignored_fields`].
//! * JSON lines, one flat object per line using the same field names.
//!
//! Numbers are written with the shortest decimal form that parses back to the
//! same `f64`, so a write/parse cycle preserves every value bit for bit.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::UnitValue;
use crate::bifuzzy::{penta_decompose, BifuzzyPair, PentaIndexes};
use crate::neutrosophic::{
    deca_decompose, DecaIndexes, EntropyTriad, Feature, NeutrosophicTriplet,
};
use crate::Variant;

/// Default tolerance for input values just outside `[0, 1]`.
pub const INGEST_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum BatchError {
    #[error("line {line}: {reason}")]
    MalformedRow { line: usize, reason: String },

    #[error("line {line}: {field} = {value} is outside [0, 1]")]
    OutOfRange {
        line: usize,
        field: &'static str,
        value: f64,
    },

    #[error("input contains no data rows")]
    EmptyInput,

    #[error("step {step} does not evenly divide the unit interval")]
    InvalidStep { step: f64 },

    #[error("result rows mix schemas or variants")]
    MixedRows,

    #[error("failed to read input: {0}")]
    SourceFailure(#[source] std::io::Error),

    #[error("failed to write output: {0}")]
    SinkFailure(#[source] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schema {
    Pair,
    Triplet,
}

impl Schema {
    pub fn fields(self) -> &'static [&'static str] {
        match self {
            Schema::Pair => &["mu", "nu"],
            Schema::Triplet => &["mu", "omega", "nu"],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Jsonl,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "jsonl" | "json-lines" | "ndjson" => Ok(Format::Jsonl),
            other => Err(format!("unknown format `{other}` (expected csv or jsonl)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Record {
    Pair(BifuzzyPair),
    Triplet(NeutrosophicTriplet),
}

impl Record {
    pub fn schema(&self) -> Schema {
        match self {
            Record::Pair(_) => Schema::Pair,
            Record::Triplet(_) => Schema::Triplet,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        match self {
            Record::Pair(p) => vec![p.mu.get(), p.nu.get()],
            Record::Triplet(x) => x.values().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RecordBatch {
    pub schema: Schema,
    pub rows: Vec<Record>,
    /// 1-based source line of each row; synthetic for generated lattices.
    pub line_numbers: Vec<usize>,
    /// Input fields that were present but not used.
    pub ignored_fields: Vec<String>,
}

impl RecordBatch {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ParseOptions {
    pub clamp_tolerance: f64,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self {
            clamp_tolerance: INGEST_TOLERANCE,
        }
    }
}

pub fn parse_records<R: Read>(
    reader: R,
    format: Format,
    schema: Schema,
    options: &ParseOptions,
) -> Result<RecordBatch, BatchError> {
    let mut builder = BatchBuilder::new(schema, options);
    match format {
        Format::Csv => parse_csv(reader, &mut builder)?,
        Format::Jsonl => parse_jsonl(reader, &mut builder)?,
    }
    builder.finish()
}

struct BatchBuilder<'a> {
    schema: Schema,
    options: &'a ParseOptions,
    rows: Vec<Record>,
    line_numbers: Vec<usize>,
    ignored: BTreeSet<String>,
}

impl<'a> BatchBuilder<'a> {
    fn new(schema: Schema, options: &'a ParseOptions) -> Self {
        Self {
            schema,
            options,
            rows: Vec::new(),
            line_numbers: Vec::new(),
            ignored: BTreeSet::new(),
        }
    }

    fn push(&mut self, line: usize, raw: &[f64]) -> Result<(), BatchError> {
        let fields = self.schema.fields();
        let mut units = [UnitValue::ZERO; 3];
        for ((slot, &value), &field) in units.iter_mut().zip(raw).zip(fields) {
            *slot = UnitValue::with_tolerance(value, self.options.clamp_tolerance)
                .map_err(|_| BatchError::OutOfRange { line, field, value })?;
        }
        let record = match self.schema {
            Schema::Pair => Record::Pair(BifuzzyPair::from_units(units[0], units[1])),
            Schema::Triplet => Record::Triplet(NeutrosophicTriplet::from_units(
                units[0], units[1], units[2],
            )),
        };
        self.rows.push(record);
        self.line_numbers.push(line);
        Ok(())
    }

    fn finish(self) -> Result<RecordBatch, BatchError> {
        if self.rows.is_empty() {
            return Err(BatchError::EmptyInput);
        }
        Ok(RecordBatch {
            schema: self.schema,
            rows: self.rows,
            line_numbers: self.line_numbers,
            ignored_fields: self.ignored.into_iter().collect(),
        })
    }
}

fn parse_number(line: usize, field: &str, text: &str) -> Result<f64, BatchError> {
    match text.trim().parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(BatchError::MalformedRow {
            line,
            reason: format!("{field}: `{text}` is not a finite number"),
        }),
    }
}

fn parse_csv<R: Read>(mut reader: R, builder: &mut BatchBuilder<'_>) -> Result<(), BatchError> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(BatchError::SourceFailure)?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let Some((header_line, header)) = lines.next() else {
        return Err(BatchError::EmptyInput);
    };
    let headers: Vec<&str> = header
        .trim_start_matches('\u{feff}')
        .split(',')
        .map(str::trim)
        .collect();
    let mut columns = Vec::with_capacity(3);
    for &field in builder.schema.fields() {
        match headers.iter().position(|h| h.eq_ignore_ascii_case(field)) {
            Some(i) => columns.push(i),
            None => {
                return Err(BatchError::MalformedRow {
                    line: header_line,
                    reason: format!("header has no `{field}` column"),
                })
            }
        }
    }
    for (i, name) in headers.iter().enumerate() {
        if !columns.contains(&i) {
            builder.ignored.insert(name.to_string());
        }
    }

    let mut raw = [0.0; 3];
    for (line, content) in lines {
        let cells: Vec<&str> = content.split(',').collect();
        if cells.len() != headers.len() {
            return Err(BatchError::MalformedRow {
                line,
                reason: format!("expected {} fields, found {}", headers.len(), cells.len()),
            });
        }
        for (slot, (&col, &field)) in raw
            .iter_mut()
            .zip(columns.iter().zip(builder.schema.fields()))
        {
            *slot = parse_number(line, field, cells[col])?;
        }
        builder.push(line, &raw[..columns.len()])?;
    }
    Ok(())
}

fn parse_jsonl<R: Read>(mut reader: R, builder: &mut BatchBuilder<'_>) -> Result<(), BatchError> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(BatchError::SourceFailure)?;

    let mut raw = [0.0; 3];
    for (idx, content) in text.lines().enumerate() {
        let line = idx + 1;
        if content.trim().is_empty() {
            continue;
        }
        let object: serde_json::Map<String, serde_json::Value> = serde_json::from_str(content)
            .map_err(|e| BatchError::MalformedRow {
                line,
                reason: format!("not a JSON object: {e}"),
            })?;
        let fields = builder.schema.fields();
        for (slot, &field) in raw.iter_mut().zip(fields) {
            let value = object
                .iter()
                .find(|(k, _)| k.eq_ignore_ascii_case(field))
                .map(|(_, v)| v)
                .ok_or_else(|| BatchError::MalformedRow {
                    line,
                    reason: format!("missing field `{field}`"),
                })?;
            *slot = value.as_f64().ok_or_else(|| BatchError::MalformedRow {
                line,
                reason: format!("{field}: `{value}` is not a number"),
            })?;
        }
        for key in object.keys() {
            if !fields.iter().any(|f| key.eq_ignore_ascii_case(f)) {
                builder.ignored.insert(key.clone());
            }
        }
        builder.push(line, &raw[..fields.len()])?;
    }
    Ok(())
}

/// Number of lattice intervals for `step`, if `step` evenly divides `[0, 1]`.
pub fn grid_divisions(step: f64) -> Result<usize, BatchError> {
    if !(step.is_finite() && step > 0.0 && step <= 1.0) {
        return Err(BatchError::InvalidStep { step });
    }
    let inverse = 1.0 / step;
    let divisions = inverse.round();
    if (inverse - divisions).abs() > 1e-9 || divisions < 1.0 {
        return Err(BatchError::InvalidStep { step });
    }
    Ok(divisions as usize)
}

/// All lattice points of the unit square or cube with spacing `step`, in
/// lexicographic order of `(mu, nu)` or `(mu, omega, nu)`.
pub fn generate_grid(schema: Schema, step: f64) -> Result<RecordBatch, BatchError> {
    let n = grid_divisions(step)?;
    let axis: Vec<UnitValue> = (0..=n)
        .map(|i| UnitValue::new(i as f64 / n as f64).expect("lattice coordinate in [0, 1]"))
        .collect();

    let rows: Vec<Record> = match schema {
        Schema::Pair => axis
            .iter()
            .flat_map(|&mu| {
                axis.iter()
                    .map(move |&nu| Record::Pair(BifuzzyPair::from_units(mu, nu)))
            })
            .collect(),
        Schema::Triplet => {
            let mut rows = Vec::with_capacity(axis.len().pow(3));
            for &mu in &axis {
                for &omega in &axis {
                    for &nu in &axis {
                        rows.push(Record::Triplet(NeutrosophicTriplet::from_units(
                            mu, omega, nu,
                        )));
                    }
                }
            }
            rows
        }
    };
    Ok(RecordBatch {
        schema,
        line_numbers: (1..=rows.len()).collect(),
        rows,
        ignored_fields: Vec::new(),
    })
}

/// One decomposed input.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ResultRow {
    Pair {
        input: BifuzzyPair,
        indexes: PentaIndexes,
    },
    Triplet {
        input: NeutrosophicTriplet,
        indexes: DecaIndexes,
        triad: EntropyTriad,
    },
}

impl ResultRow {
    pub fn compute(record: &Record, variant: Variant) -> Self {
        match *record {
            Record::Pair(input) => ResultRow::Pair {
                input,
                indexes: penta_decompose(input, variant),
            },
            Record::Triplet(input) => {
                let indexes = deca_decompose(input, variant);
                ResultRow::Triplet {
                    input,
                    indexes,
                    triad: EntropyTriad::from(&indexes),
                }
            }
        }
    }

    pub fn schema(&self) -> Schema {
        match self {
            ResultRow::Pair { .. } => Schema::Pair,
            ResultRow::Triplet { .. } => Schema::Triplet,
        }
    }

    pub fn variant(&self) -> Variant {
        match self {
            ResultRow::Pair { indexes, .. } => indexes.variant,
            ResultRow::Triplet { indexes, .. } => indexes.variant,
        }
    }

    fn full_values(&self) -> Vec<f64> {
        match self {
            ResultRow::Pair { input, indexes } => {
                let mut v = vec![input.mu.get(), input.nu.get()];
                v.extend(indexes.values());
                v
            }
            ResultRow::Triplet {
                input,
                indexes,
                triad,
            } => {
                let mut v = input.values().to_vec();
                v.extend(indexes.values());
                v.extend(triad.values());
                v
            }
        }
    }

    fn entropy_values(&self) -> Vec<f64> {
        match self {
            ResultRow::Pair { input, indexes } => vec![
                input.mu.get(),
                input.nu.get(),
                indexes.entropy(),
                indexes.non_entropy(),
            ],
            ResultRow::Triplet { input, triad, .. } => {
                let mut v = input.values().to_vec();
                v.extend(triad.values());
                v.push(triad.non_entropy());
                v
            }
        }
    }
}

/// Decomposes every row of `batch` in parallel; output order equals input order.
pub fn compute_results(batch: &RecordBatch, variant: Variant) -> Vec<ResultRow> {
    batch
        .rows
        .par_iter()
        .map(|record| ResultRow::compute(record, variant))
        .collect()
}

/// Column names of [`write_results`] output.
pub fn result_header(schema: Schema) -> Vec<&'static str> {
    let mut header: Vec<&'static str> = schema.fields().to_vec();
    match schema {
        Schema::Pair => header.extend(PentaIndexes::FIELDS),
        Schema::Triplet => {
            header.extend(Feature::ALL.map(Feature::symbol));
            header.extend(["entropy", "neutro_entropy", "anti_entropy"]);
        }
    }
    header
}

/// Column names of [`write_entropy_report`] output.
pub fn entropy_header(schema: Schema) -> Vec<&'static str> {
    let mut header: Vec<&'static str> = schema.fields().to_vec();
    match schema {
        Schema::Pair => header.extend(["entropy", "non_entropy"]),
        Schema::Triplet => {
            header.extend(["entropy", "neutro_entropy", "anti_entropy", "non_entropy"])
        }
    }
    header
}

/// Writes inputs, indexes and (for triplets) the entropy triad. Returns the
/// number of data rows written.
pub fn write_results<W: Write>(
    rows: &[ResultRow],
    schema: Schema,
    format: Format,
    sink: W,
) -> Result<usize, BatchError> {
    check_homogeneous(rows, schema)?;
    write_table(
        &result_header(schema),
        rows.iter().map(ResultRow::full_values),
        format,
        sink,
    )
}

/// Writes inputs with entropy measures only, plus non-entropy.
pub fn write_entropy_report<W: Write>(
    rows: &[ResultRow],
    schema: Schema,
    format: Format,
    sink: W,
) -> Result<usize, BatchError> {
    check_homogeneous(rows, schema)?;
    write_table(
        &entropy_header(schema),
        rows.iter().map(ResultRow::entropy_values),
        format,
        sink,
    )
}

fn check_homogeneous(rows: &[ResultRow], schema: Schema) -> Result<(), BatchError> {
    let variant = rows.first().map(ResultRow::variant);
    if rows
        .iter()
        .any(|r| r.schema() != schema || Some(r.variant()) != variant)
    {
        return Err(BatchError::MixedRows);
    }
    Ok(())
}

/// Writes rows of numbers under `header` as CSV or JSON lines.
pub fn write_table<W, I>(
    header: &[&str],
    rows: I,
    format: Format,
    mut sink: W,
) -> Result<usize, BatchError>
where
    W: Write,
    I: IntoIterator<Item = Vec<f64>>,
{
    let mut buf = String::new();
    if format == Format::Csv {
        buf.push_str(&header.join(","));
        buf.push('\n');
    }
    let mut count = 0;
    for values in rows {
        debug_assert_eq!(values.len(), header.len());
        match format {
            Format::Csv => {
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        buf.push(',');
                    }
                    write!(buf, "{v}").expect("writing to a String");
                }
            }
            Format::Jsonl => {
                buf.push('{');
                for (i, (name, v)) in header.iter().zip(&values).enumerate() {
                    if i > 0 {
                        buf.push(',');
                    }
                    write!(buf, "\"{name}\":{v}").expect("writing to a String");
                }
                buf.push('}');
            }
        }
        buf.push('\n');
        count += 1;
        if buf.len() >= 1 << 16 {
            sink.write_all(buf.as_bytes())
                .map_err(BatchError::SinkFailure)?;
            buf.clear();
        }
    }
    sink.write_all(buf.as_bytes())
        .map_err(BatchError::SinkFailure)?;
    sink.flush().map_err(BatchError::SinkFailure)?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn csv(text: &str, schema: Schema) -> Result<RecordBatch, BatchError> {
        parse_records(
            text.as_bytes(),
            Format::Csv,
            schema,
            &ParseOptions::default(),
        )
    }

    #[test]
    fn parses_single_triplet() {
        let batch = csv("mu,omega,nu\n0.8,0.5,0.1\n", Schema::Triplet).unwrap();
        assert_eq!(
            batch.rows,
            vec![Record::Triplet(
                NeutrosophicTriplet::new(0.8, 0.5, 0.1).unwrap()
            )]
        );
        assert_eq!(batch.line_numbers, vec![2]);
    }

    #[test]
    fn parses_pairs_with_crlf_and_mixed_case_header() {
        let batch = csv("MU,Nu\r\n1,0\r\n0,0\r\n", Schema::Pair).unwrap();
        assert_eq!(batch.len(), 2);
        assert_eq!(batch.line_numbers, vec![2, 3]);
        assert_eq!(
            batch.rows[1],
            Record::Pair(BifuzzyPair::new(0.0, 0.0).unwrap())
        );
    }

    #[test]
    fn reports_out_of_range_with_line_and_field() {
        let err = csv("mu,omega,nu\n0.8,1.5,0.1\n", Schema::Triplet).unwrap_err();
        match err {
            BatchError::OutOfRange { line, field, value } => {
                assert_eq!((line, field, value), (2, "omega", 1.5));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn clamps_small_excursions() {
        let batch = csv("mu,omega,nu\n1.0000000001,-1e-10,0.5\n", Schema::Triplet).unwrap();
        assert_eq!(batch.rows[0].values(), vec![1.0, 0.0, 0.5]);
        assert!(csv("mu,omega,nu\n1.000001,0,0.5\n", Schema::Triplet).is_err());
    }

    #[test]
    fn ignores_and_reports_extra_columns() {
        let batch = csv("id,nu,mu,note\n7,0.2,0.7,x\n", Schema::Pair).unwrap();
        assert_eq!(batch.rows[0].values(), vec![0.7, 0.2]);
        assert_eq!(
            batch.ignored_fields,
            vec!["id".to_string(), "note".to_string()]
        );
    }

    #[test]
    fn malformed_rows() {
        assert!(matches!(
            csv("mu,omega,nu\n0.1,0.2\n", Schema::Triplet),
            Err(BatchError::MalformedRow { line: 2, .. })
        ));
        assert!(matches!(
            csv("mu,omega,nu\n0.1,abc,0.2\n", Schema::Triplet),
            Err(BatchError::MalformedRow { line: 2, .. })
        ));
        assert!(matches!(
            csv("mu,omega,nu\n0.1,NaN,0.2\n", Schema::Triplet),
            Err(BatchError::MalformedRow { line: 2, .. })
        ));
        assert!(matches!(
            csv("mu,nu\n0.1,0.2\n", Schema::Triplet),
            Err(BatchError::MalformedRow { line: 1, .. })
        ));
    }

    #[test]
    fn empty_inputs() {
        assert!(matches!(csv("", Schema::Pair), Err(BatchError::EmptyInput)));
        assert!(matches!(
            csv("mu,nu\n", Schema::Pair),
            Err(BatchError::EmptyInput)
        ));
        let r = parse_records(
            &b"\n\n"[..],
            Format::Jsonl,
            Schema::Pair,
            &ParseOptions::default(),
        );
        assert!(matches!(r, Err(BatchError::EmptyInput)));
    }

    #[test]
    fn parses_jsonl() {
        let text = "{\"mu\":0.8,\"omega\":0.5,\"nu\":0.1}\n\n{\"Nu\":1,\"MU\":0,\"omega\":0,\"tag\":\"x\"}\n";
        let batch = parse_records(
            text.as_bytes(),
            Format::Jsonl,
            Schema::Triplet,
            &ParseOptions::default(),
        )
        .unwrap();
        assert_eq!(batch.line_numbers, vec![1, 3]);
        assert_eq!(batch.rows[1].values(), vec![0.0, 0.0, 1.0]);
        assert_eq!(batch.ignored_fields, vec!["tag".to_string()]);

        let bad = parse_records(
            &b"{\"mu\":0.8}\n"[..],
            Format::Jsonl,
            Schema::Pair,
            &ParseOptions::default(),
        );
        assert!(matches!(bad, Err(BatchError::MalformedRow { line: 1, .. })));
        let bad = parse_records(
            &b"[1,2]\n"[..],
            Format::Jsonl,
            Schema::Pair,
            &ParseOptions::default(),
        );
        assert!(matches!(bad, Err(BatchError::MalformedRow { line: 1, .. })));
    }

    #[test]
    fn grid_sizes_and_order() {
        let g = generate_grid(Schema::Triplet, 0.5).unwrap();
        assert_eq!(g.len(), 27);
        assert_eq!(g.rows[0].values(), vec![0.0, 0.0, 0.0]);
        assert_eq!(g.rows[1].values(), vec![0.0, 0.0, 0.5]);
        assert_eq!(g.rows[26].values(), vec![1.0, 1.0, 1.0]);

        let g = generate_grid(Schema::Pair, 1.0).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(generate_grid(Schema::Triplet, 0.05).unwrap().len(), 9261);
        assert_eq!(generate_grid(Schema::Pair, 0.01).unwrap().len(), 10201);
        assert!(g.line_numbers.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn grid_rejects_bad_steps() {
        for step in [0.0, -0.1, 0.3, 1.5, f64::NAN] {
            assert!(matches!(
                generate_grid(Schema::Pair, step),
                Err(BatchError::InvalidStep { .. })
            ));
        }
    }

    #[test]
    fn writes_prototype_row() {
        let batch = csv("mu,omega,nu\n1,0,0\n", Schema::Triplet).unwrap();
        let rows = compute_results(&batch, Variant::I);
        let mut out = Vec::new();
        assert_eq!(
            write_results(&rows, Schema::Triplet, Format::Csv, &mut out).unwrap(),
            1
        );
        let text = String::from_utf8(out).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "mu,omega,nu,t,t_w,f,f_w,c,n,s,u,a,h,entropy,neutro_entropy,anti_entropy"
        );
        assert_eq!(lines.next().unwrap(), "1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,1");
        assert!(lines.next().is_none());
    }

    #[test]
    fn empty_result_is_header_only() {
        let mut out = Vec::new();
        assert_eq!(
            write_results(&[], Schema::Pair, Format::Csv, &mut out).unwrap(),
            0
        );
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "mu,nu,truth,falsity,ambiguity,ignorance,contradiction\n"
        );
        let mut out = Vec::new();
        assert_eq!(
            write_results(&[], Schema::Pair, Format::Jsonl, &mut out).unwrap(),
            0
        );
        assert!(out.is_empty());
    }

    #[test]
    fn rejects_mixed_rows() {
        let batch = csv("mu,omega,nu\n1,0,0\n", Schema::Triplet).unwrap();
        let mut rows = compute_results(&batch, Variant::I);
        rows.extend(compute_results(&batch, Variant::II));
        assert!(matches!(
            write_results(&rows, Schema::Triplet, Format::Csv, Vec::new()),
            Err(BatchError::MixedRows)
        ));
        assert!(matches!(
            write_results(&rows[..1], Schema::Pair, Format::Csv, Vec::new()),
            Err(BatchError::MixedRows)
        ));
    }

    #[test]
    fn entropy_report_columns() {
        let batch = csv("mu,omega,nu\n0.8,0.5,0.1\n", Schema::Triplet).unwrap();
        let rows = compute_results(&batch, Variant::I);
        let mut out = Vec::new();
        write_entropy_report(&rows, Schema::Triplet, Format::Jsonl, &mut out).unwrap();
        let line = String::from_utf8(out).unwrap();
        let obj: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
        assert!((obj["non_entropy"].as_f64().unwrap() - 0.7).abs() < 1e-12);
        assert!((obj["entropy"].as_f64().unwrap() - 0.3).abs() < 1e-12);
    }

    #[test]
    fn grid_sweep_preserves_order() {
        let grid = generate_grid(Schema::Triplet, 0.05).unwrap();
        let rows = compute_results(&grid, Variant::II);
        let mut out = Vec::new();
        assert_eq!(
            write_results(&rows, Schema::Triplet, Format::Csv, &mut out).unwrap(),
            9261
        );
        let back = parse_records(
            &out[..],
            Format::Csv,
            Schema::Triplet,
            &ParseOptions::default(),
        )
        .unwrap();
        assert_eq!(back.rows, grid.rows);
        assert_eq!(back.ignored_fields.len(), 13);
    }
}
