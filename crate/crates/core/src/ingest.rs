//! Table ingestion: delimited-text parsing, missing-value filtering,
//! categorical encoding into numeric feature vectors, and train/test
//! splitting.
//!
//! The encoding is the fixed-length representation the rest of the
//! pipeline consumes: ordinal (one integer-coded column per attribute,
//! codes assigned in lexicographic order) or one-hot (`col=value`
//! indicator columns). Rows containing a missing token are dropped, never
//! imputed.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::seed::rng_from;

/// Role of a column in the schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnKind {
    Categorical,
    Numeric,
    Label,
}

/// One column of the input schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnSpec {
    pub name: String,
    pub kind: ColumnKind,
}

impl ColumnSpec {
    pub fn categorical(name: &str) -> Self {
        ColumnSpec {
            name: name.into(),
            kind: ColumnKind::Categorical,
        }
    }

    pub fn numeric(name: &str) -> Self {
        ColumnSpec {
            name: name.into(),
            kind: ColumnKind::Numeric,
        }
    }

    pub fn label(name: &str) -> Self {
        ColumnSpec {
            name: name.into(),
            kind: ColumnKind::Label,
        }
    }
}

/// Exactly one label column; names unique and non-empty.
pub fn validate_schema(schema: &[ColumnSpec]) -> Result<()> {
    if schema.is_empty() {
        return Err(Error::EmptyInput("schema has no columns".into()));
    }
    let mut seen = BTreeSet::new();
    let mut labels = 0usize;
    for spec in schema {
        if spec.name.is_empty() {
            return Err(Error::InvalidParameter {
                name: "schema".into(),
                reason: "column with empty name".into(),
            });
        }
        if !seen.insert(spec.name.as_str()) {
            return Err(Error::InvalidParameter {
                name: "schema".into(),
                reason: format!("duplicate column name `{}`", spec.name),
            });
        }
        if spec.kind == ColumnKind::Label {
            labels += 1;
        }
    }
    if labels != 1 {
        return Err(Error::InvalidParameter {
            name: "schema".into(),
            reason: format!("expected exactly 1 label column, found {labels}"),
        });
    }
    Ok(())
}

/// Parsed table: schema plus verbatim text cells.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawTable {
    pub columns: Vec<ColumnSpec>,
    pub rows: Vec<Vec<String>>,
}

impl RawTable {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn column_index(&self, name: &str) -> Result<usize> {
        self.columns
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownColumn(name.into()))
    }
}

/// Parse RFC-4180-style delimited text against a schema. The first row
/// must be a header matching the schema names in order; cells are kept
/// verbatim.
pub fn parse_table(bytes: &[u8], schema: &[ColumnSpec], delimiter: u8) -> Result<RawTable> {
    validate_schema(schema)?;
    let reader = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .has_headers(false)
        .flexible(false)
        .from_reader(bytes);

    let mut records = reader.into_records();
    let header = match records.next() {
        Some(rec) => rec.map_err(|e| Error::Parse(e.to_string()))?,
        None => return Err(Error::EmptyDataset("input has no header row".into())),
    };

    for (i, spec) in schema.iter().enumerate() {
        let found = header.get(i).unwrap_or("<missing>");
        if found != spec.name {
            return Err(Error::SchemaMismatch {
                index: i,
                found: found.into(),
                expected: spec.name.clone(),
            });
        }
    }
    if header.len() > schema.len() {
        return Err(Error::SchemaMismatch {
            index: schema.len(),
            found: header.get(schema.len()).unwrap_or("").into(),
            expected: "<end of schema>".into(),
        });
    }

    let mut rows = Vec::new();
    for (idx, rec) in records.enumerate() {
        let row_number = idx + 1; // 1-based data row
        let rec = rec.map_err(|e| match e.kind() {
            csv::ErrorKind::UnequalLengths { expected_len, len, .. } => Error::RaggedRow {
                row: row_number,
                expected: *expected_len as usize,
                found: *len as usize,
            },
            _ => Error::Parse(format!("row {row_number}: {e}")),
        })?;
        rows.push(rec.iter().map(str::to_owned).collect());
    }

    Ok(RawTable {
        columns: schema.to_vec(),
        rows,
    })
}

/// Keep exactly the rows where no cell equals a missing token; order
/// preserved. Dropping every row is an error.
pub fn drop_missing(table: &RawTable, missing_tokens: &[String]) -> Result<RawTable> {
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .filter(|row| !row.iter().any(|cell| missing_tokens.iter().any(|t| t == cell)))
        .cloned()
        .collect();
    if rows.is_empty() {
        return Err(Error::EmptyDataset(
            "all rows contain missing values".into(),
        ));
    }
    Ok(RawTable {
        columns: table.columns.clone(),
        rows,
    })
}

/// How categorical attributes become feature columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum EncodingStrategy {
    /// One integer-coded column per attribute (codes are lexicographic).
    #[default]
    Ordinal,
    /// One `col=value` indicator column per category.
    OneHot,
}

/// Per-column category vocabularies; code = index into `categories`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ColumnEncoding {
    Categorical { name: String, categories: Vec<String> },
    Numeric { name: String },
}

/// Bijection between raw cells and the numeric feature space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncodingMap {
    pub strategy: EncodingStrategy,
    pub schema: Vec<ColumnSpec>,
    /// Non-label columns, in schema order.
    pub columns: Vec<ColumnEncoding>,
    pub label_column: String,
    /// Class name for each integer label, index = code.
    pub classes: Vec<String>,
}

impl EncodingMap {
    /// Integer code of a category string, if in-vocabulary.
    pub fn encode_value(&self, column: &str, value: &str) -> Option<usize> {
        self.columns.iter().find_map(|c| match c {
            ColumnEncoding::Categorical { name, categories } if name == column => {
                categories.binary_search_by(|c| c.as_str().cmp(value)).ok()
            }
            _ => None,
        })
    }

    /// Category string for an integer code.
    pub fn decode_value(&self, column: &str, code: usize) -> Option<&str> {
        self.columns.iter().find_map(|c| match c {
            ColumnEncoding::Categorical { name, categories } if name == column => {
                categories.get(code).map(String::as_str)
            }
            _ => None,
        })
    }

    /// Rebuild a raw table from an ordinal-encoded dataset. Categorical
    /// and label cells are restored exactly; numeric cells are formatted
    /// floats.
    pub fn decode_dataset(&self, data: &Dataset) -> Result<RawTable> {
        if self.strategy != EncodingStrategy::Ordinal {
            return Err(Error::Capability {
                operation: "decode_dataset".into(),
                kind: "one_hot encoding".into(),
            });
        }
        let mut rows = Vec::with_capacity(data.n_rows());
        for i in 0..data.n_rows() {
            let mut row = Vec::with_capacity(self.schema.len());
            let mut feat = 0usize;
            for spec in &self.schema {
                if spec.kind == ColumnKind::Label {
                    row.push(self.classes[data.y[i]].clone());
                    continue;
                }
                let v = data.x.get(i, feat);
                match &self.columns[feat] {
                    ColumnEncoding::Categorical { name, categories } => {
                        let code = v as usize;
                        let cell = categories.get(code).ok_or_else(|| Error::UnknownColumn(
                            format!("{name} code {code} out of vocabulary"),
                        ))?;
                        row.push(cell.clone());
                    }
                    ColumnEncoding::Numeric { .. } => row.push(format!("{v}")),
                }
                feat += 1;
            }
            rows.push(row);
        }
        Ok(RawTable {
            columns: self.schema.clone(),
            rows,
        })
    }
}

/// Encoded numeric dataset: feature matrix, names, and integer labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    x: Matrix,
    feature_names: Vec<String>,
    y: Vec<usize>,
    class_names: Vec<String>,
}

impl Dataset {
    pub fn new(
        x: Matrix,
        feature_names: Vec<String>,
        y: Vec<usize>,
        class_names: Vec<String>,
    ) -> Result<Self> {
        if x.n_rows() == 0 || x.n_cols() == 0 {
            return Err(Error::EmptyDataset(format!(
                "dataset must have at least one row and one feature (got {}x{})",
                x.n_rows(),
                x.n_cols()
            )));
        }
        if x.n_rows() != y.len() {
            return Err(Error::ShapeMismatch {
                context: "Dataset::new".into(),
                expected: format!("{} labels", x.n_rows()),
                found: format!("{}", y.len()),
            });
        }
        if feature_names.len() != x.n_cols() {
            return Err(Error::ShapeMismatch {
                context: "Dataset::new".into(),
                expected: format!("{} feature names", x.n_cols()),
                found: format!("{}", feature_names.len()),
            });
        }
        let k = class_names.len();
        if k == 0 {
            return Err(Error::Label("no class names".into()));
        }
        if let Some(bad) = y.iter().find(|&&l| l >= k) {
            return Err(Error::Label(format!("label {bad} out of range 0..{k}")));
        }
        if !x.is_finite() {
            return Err(Error::NonFinite("feature matrix contains NaN or infinity".into()));
        }
        Ok(Dataset {
            x,
            feature_names,
            y,
            class_names,
        })
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn n_rows(&self) -> usize {
        self.x.n_rows()
    }

    pub fn n_features(&self) -> usize {
        self.x.n_cols()
    }

    pub fn n_classes(&self) -> usize {
        self.class_names.len()
    }

    /// Dataset restricted to the given rows, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> Result<Dataset> {
        Dataset::new(
            self.x.select_rows(indices),
            self.feature_names.clone(),
            indices.iter().map(|&i| self.y[i]).collect(),
            self.class_names.clone(),
        )
    }

    /// Dataset restricted to the given feature columns, labels untouched.
    pub fn select_features(&self, indices: &[usize]) -> Result<Dataset> {
        if let Some(&bad) = indices.iter().find(|&&j| j >= self.n_features()) {
            return Err(Error::ShapeMismatch {
                context: "Dataset::select_features".into(),
                expected: format!("indices < {}", self.n_features()),
                found: format!("{bad}"),
            });
        }
        Dataset::new(
            self.x.select_cols(indices),
            indices
                .iter()
                .map(|&j| self.feature_names[j].clone())
                .collect(),
            self.y.clone(),
            self.class_names.clone(),
        )
    }

    /// Same rows with a replaced feature matrix (used by transforms).
    pub fn with_features(&self, x: Matrix, feature_names: Vec<String>) -> Result<Dataset> {
        Dataset::new(x, feature_names, self.y.clone(), self.class_names.clone())
    }
}

/// Encode a raw table into a numeric dataset.
///
/// Categorical codes are consecutive integers assigned in lexicographic
/// order of the category strings; numeric cells must parse as finite
/// reals (period decimal separator only).
pub fn encode(table: &RawTable, strategy: EncodingStrategy) -> Result<(Dataset, EncodingMap)> {
    validate_schema(&table.columns)?;
    if table.rows.is_empty() {
        return Err(Error::EmptyDataset("cannot encode a table with no rows".into()));
    }

    let label_idx = table
        .columns
        .iter()
        .position(|c| c.kind == ColumnKind::Label)
        .expect("validated schema has a label column");

    // Vocabularies for every categorical column (and the label).
    let mut column_encodings = Vec::new();
    for (j, spec) in table.columns.iter().enumerate() {
        match spec.kind {
            ColumnKind::Categorical => {
                let mut values: Vec<String> = table
                    .rows
                    .iter()
                    .map(|r| r[j].clone())
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                values.sort();
                column_encodings.push(ColumnEncoding::Categorical {
                    name: spec.name.clone(),
                    categories: values,
                });
            }
            ColumnKind::Numeric => column_encodings.push(ColumnEncoding::Numeric {
                name: spec.name.clone(),
            }),
            ColumnKind::Label => {}
        }
    }

    let classes: Vec<String> = table
        .rows
        .iter()
        .map(|r| r[label_idx].clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if classes.len() < 2 {
        return Err(Error::DegenerateLabel {
            column: table.columns[label_idx].name.clone(),
            distinct: classes.len(),
        });
    }

    // Feature columns in output order.
    let mut feature_names = Vec::new();
    for enc in &column_encodings {
        match (enc, strategy) {
            (ColumnEncoding::Categorical { name, categories }, EncodingStrategy::OneHot) => {
                for cat in categories {
                    feature_names.push(format!("{name}={cat}"));
                }
            }
            (ColumnEncoding::Categorical { name, .. }, EncodingStrategy::Ordinal)
            | (ColumnEncoding::Numeric { name }, _) => feature_names.push(name.clone()),
        }
    }

    let n = table.rows.len();
    let d = feature_names.len();
    let mut x = Matrix::zeros(n, d);
    let mut y = Vec::with_capacity(n);

    for (i, row) in table.rows.iter().enumerate() {
        let mut out_j = 0usize;
        let mut enc_iter = column_encodings.iter();
        for (j, spec) in table.columns.iter().enumerate() {
            if j == label_idx {
                let code = classes
                    .binary_search(&row[j])
                    .expect("label vocabulary covers all rows");
                y.push(code);
                continue;
            }
            let enc = enc_iter.next().expect("one encoding per non-label column");
            match enc {
                ColumnEncoding::Categorical { categories, .. } => {
                    let code = categories
                        .binary_search(&row[j])
                        .expect("vocabulary covers all rows");
                    match strategy {
                        EncodingStrategy::Ordinal => {
                            x.set(i, out_j, code as f64);
                            out_j += 1;
                        }
                        EncodingStrategy::OneHot => {
                            x.set(i, out_j + code, 1.0);
                            out_j += categories.len();
                        }
                    }
                }
                ColumnEncoding::Numeric { .. } => {
                    let parsed: f64 = row[j].trim().parse().map_err(|_| Error::NumericParse {
                        row: i + 1,
                        column: spec.name.clone(),
                        value: row[j].clone(),
                    })?;
                    if !parsed.is_finite() {
                        return Err(Error::NumericParse {
                            row: i + 1,
                            column: spec.name.clone(),
                            value: row[j].clone(),
                        });
                    }
                    x.set(i, out_j, parsed);
                    out_j += 1;
                }
            }
        }
    }

    let map = EncodingMap {
        strategy,
        schema: table.columns.clone(),
        columns: column_encodings,
        label_column: table.columns[label_idx].name.clone(),
        classes: classes.clone(),
    };
    let dataset = Dataset::new(x, feature_names, y, classes)?;
    Ok((dataset, map))
}

/// Seeded train/test split. Index sets are disjoint, cover all rows, and
/// keep the original row order within each part. Stratified mode draws
/// `round(count * fraction)` test rows per class (capped so the training
/// part keeps at least one row of every class).
pub fn split(
    data: &Dataset,
    test_fraction: f64,
    seed: u64,
    stratified: bool,
) -> Result<(Dataset, Dataset)> {
    if !(test_fraction > 0.0 && test_fraction < 1.0) {
        return Err(Error::InvalidParameter {
            name: "test_fraction".into(),
            reason: format!("must be in (0,1), got {test_fraction}"),
        });
    }
    let n = data.n_rows();
    let mut rng = rng_from(seed);
    let mut test_idx: Vec<usize> = Vec::new();

    if stratified {
        let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &label) in data.y().iter().enumerate() {
            by_class.entry(label).or_default().push(i);
        }
        for (&label, members) in &by_class {
            if members.len() < 2 {
                return Err(Error::Stratification {
                    class: data.class_names()[label].clone(),
                    count: members.len(),
                });
            }
        }
        for members in by_class.values() {
            let count = members.len();
            let want = (count as f64 * test_fraction).round() as usize;
            let take = want.min(count - 1);
            let mut shuffled = members.clone();
            shuffled.shuffle(&mut rng);
            test_idx.extend_from_slice(&shuffled[..take]);
        }
    } else {
        let want = ((n as f64 * test_fraction).round() as usize).clamp(1, n.saturating_sub(1));
        let mut indices: Vec<usize> = (0..n).collect();
        indices.shuffle(&mut rng);
        test_idx.extend_from_slice(&indices[..want]);
    }

    if test_idx.is_empty() || test_idx.len() == n {
        return Err(Error::EmptyDataset(format!(
            "split produced an empty part (test rows: {} of {n})",
            test_idx.len()
        )));
    }

    test_idx.sort_unstable();
    let in_test: BTreeSet<usize> = test_idx.iter().copied().collect();
    let train_idx: Vec<usize> = (0..n).filter(|i| !in_test.contains(i)).collect();

    Ok((data.select_rows(&train_idx)?, data.select_rows(&test_idx)?))
}

/// Value counts of one column, sorted by count descending (ties by value).
pub fn summarize(table: &RawTable, column: &str) -> Result<Vec<(String, usize)>> {
    let idx = table.column_index(column)?;
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for row in &table.rows {
        *counts.entry(row[idx].as_str()).or_insert(0) += 1;
    }
    let mut out: Vec<(String, usize)> = counts
        .into_iter()
        .map(|(v, c)| (v.to_owned(), c))
        .collect();
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// Render a summary as two-column CSV (`value,count`).
pub fn summary_to_csv(summary: &[(String, usize)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["value", "count"]).expect("in-memory write");
    for (value, count) in summary {
        w.write_record([value.as_str(), &count.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schema_ab() -> Vec<ColumnSpec> {
        vec![ColumnSpec::categorical("a"), ColumnSpec::label("b")]
    }

    #[test]
    fn minimal_parse() {
        let table = parse_table(b"a,b\nx,1\n", &schema_ab(), b',').unwrap();
        assert_eq!(table.n_rows(), 1);
        assert_eq!(table.rows[0], vec!["x", "1"]);
    }

    #[test]
    fn header_mismatch_names_offender() {
        let schema = vec![ColumnSpec::categorical("a"), ColumnSpec::label("c")];
        let err = parse_table(b"a,b\nx,1\n", &schema, b',').unwrap_err();
        match err {
            Error::SchemaMismatch { found, expected, .. } => {
                assert_eq!(found, "b");
                assert_eq!(expected, "c");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn ragged_row_reports_row_number() {
        let err = parse_table(b"a,b\nx,1\ny\n", &schema_ab(), b',').unwrap_err();
        match err {
            Error::RaggedRow { row, expected, found } => {
                assert_eq!(row, 2);
                assert_eq!(expected, 2);
                assert_eq!(found, 1);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_608_row_table() {
        // Shaped like a 608-patient, 18-findings-plus-label file.
        let mut schema: Vec<ColumnSpec> =
            (0..18).map(|i| ColumnSpec::numeric(&format!("f{i}"))).collect();
        schema.push(ColumnSpec::label("result"));
        let mut text = schema
            .iter()
            .map(|c| c.name.clone())
            .collect::<Vec<_>>()
            .join(",");
        text.push('\n');
        for i in 0..608 {
            let mut cells: Vec<String> = (0..18).map(|j| format!("{}", (i * 19 + j) % 7)).collect();
            cells.push(if i % 8 == 0 { "positive".into() } else { "negative".into() });
            text.push_str(&cells.join(","));
            text.push('\n');
        }
        let table = parse_table(text.as_bytes(), &schema, b',').unwrap();
        assert_eq!(table.n_rows(), 608);
        assert_eq!(table.columns.len(), 19);
    }

    #[test]
    fn drop_missing_identity_and_filter() {
        let table = parse_table(b"a,b\nx,1\ny,2\n", &schema_ab(), b',').unwrap();
        let kept = drop_missing(&table, &[String::new()]).unwrap();
        assert_eq!(kept, table);

        let table = parse_table(b"a,b\nx,1\n,2\nz,3\n", &schema_ab(), b',').unwrap();
        let kept = drop_missing(&table, &[String::new()]).unwrap();
        assert_eq!(kept.n_rows(), 2);
        assert_eq!(kept.rows[0][0], "x");
        assert_eq!(kept.rows[1][0], "z");
    }

    #[test]
    fn drop_missing_custom_tokens_preserves_order() {
        let table = parse_table(
            b"a,b\nr1,1\nNA,2\nr3,1\nNA,2\nr5,1\n",
            &schema_ab(),
            b',',
        )
        .unwrap();
        let tokens = vec!["NA".to_string(), String::new()];
        let kept = drop_missing(&table, &tokens).unwrap();
        // Brute-force oracle: scan rows, keep those without tokens.
        let expected: Vec<&Vec<String>> = table
            .rows
            .iter()
            .filter(|r| r.iter().all(|c| !tokens.contains(c)))
            .collect();
        assert_eq!(kept.n_rows(), 3);
        assert_eq!(kept.rows.iter().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn drop_missing_all_rows_is_error() {
        let table = parse_table(b"a,b\n,1\n", &schema_ab(), b',').unwrap();
        assert!(matches!(
            drop_missing(&table, &[String::new()]),
            Err(Error::EmptyDataset(_))
        ));
    }

    #[test]
    fn ordinal_encoding_is_lexicographic() {
        let schema = vec![ColumnSpec::categorical("c"), ColumnSpec::label("y")];
        let table = parse_table(b"c,y\nA,p\nB,q\nA,p\n", &schema, b',').unwrap();
        let (data, map) = encode(&table, EncodingStrategy::Ordinal).unwrap();
        assert_eq!(data.x().column(0), vec![0.0, 1.0, 0.0]);
        assert_eq!(map.encode_value("c", "A"), Some(0));
        assert_eq!(map.encode_value("c", "B"), Some(1));
        assert_eq!(map.decode_value("c", 1), Some("B"));
    }

    #[test]
    fn one_hot_expands_indicators() {
        let schema = vec![ColumnSpec::categorical("c"), ColumnSpec::label("y")];
        let table = parse_table(b"c,y\nA,p\nB,q\nA,p\n", &schema, b',').unwrap();
        let (data, _) = encode(&table, EncodingStrategy::OneHot).unwrap();
        assert_eq!(data.feature_names(), &["c=A".to_string(), "c=B".to_string()]);
        assert_eq!(data.x().column(0), vec![1.0, 0.0, 1.0]);
        assert_eq!(data.x().column(1), vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn one_hot_dimension_count() {
        let schema = vec![
            ColumnSpec::categorical("c1"),
            ColumnSpec::categorical("c2"),
            ColumnSpec::numeric("n"),
            ColumnSpec::label("y"),
        ];
        let table = parse_table(
            b"c1,c2,n,y\nA,u,1.5,p\nB,v,2.5,q\nC,u,3.5,p\n",
            &schema,
            b',',
        )
        .unwrap();
        let (data, _) = encode(&table, EncodingStrategy::OneHot).unwrap();
        // 3 categories + 2 categories + 1 numeric column.
        assert_eq!(data.n_features(), 6);
    }

    #[test]
    fn numeric_parse_failure_names_cell() {
        let schema = vec![ColumnSpec::numeric("n"), ColumnSpec::label("y")];
        let table = parse_table(b"n,y\n1.5,p\noops,q\n", &schema, b',').unwrap();
        let err = encode(&table, EncodingStrategy::Ordinal).unwrap_err();
        match err {
            Error::NumericParse { row, column, .. } => {
                assert_eq!(row, 2);
                assert_eq!(column, "n");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn degenerate_label_is_error() {
        let schema = vec![ColumnSpec::categorical("c"), ColumnSpec::label("y")];
        let table = parse_table(b"c,y\nA,p\nB,p\n", &schema, b',').unwrap();
        assert!(matches!(
            encode(&table, EncodingStrategy::Ordinal),
            Err(Error::DegenerateLabel { .. })
        ));
    }

    #[test]
    fn ordinal_roundtrip_restores_categorical_cells() {
        let schema = vec![
            ColumnSpec::categorical("c"),
            ColumnSpec::numeric("n"),
            ColumnSpec::label("y"),
        ];
        let table = parse_table(
            b"c,n,y\nblue,1.5,p\nred,2.0,q\ngreen,0.25,p\nblue,4.5,q\n",
            &schema,
            b',',
        )
        .unwrap();
        let (data, map) = encode(&table, EncodingStrategy::Ordinal).unwrap();
        let restored = map.decode_dataset(&data).unwrap();
        for (orig, back) in table.rows.iter().zip(&restored.rows) {
            assert_eq!(orig[0], back[0]);
            assert_eq!(orig[2], back[2]);
        }
    }

    #[test]
    fn split_partitions_rows() {
        let x = Matrix::from_vec(10, 1, (0..10).map(|i| i as f64).collect()).unwrap();
        let y = vec![0, 1, 0, 1, 0, 1, 0, 1, 0, 1];
        let data = Dataset::new(x, vec!["f".into()], y, vec!["a".into(), "b".into()]).unwrap();
        let (train, test) = split(&data, 0.3, 7, false).unwrap();
        assert_eq!(train.n_rows(), 7);
        assert_eq!(test.n_rows(), 3);
        let mut all: Vec<f64> = train
            .x()
            .column(0)
            .into_iter()
            .chain(test.x().column(0))
            .collect();
        all.sort_by(|a, b| a.total_cmp(b));
        assert_eq!(all, (0..10).map(|i| i as f64).collect::<Vec<_>>());
    }

    #[test]
    fn stratified_split_preserves_proportions() {
        let x = Matrix::from_vec(10, 1, (0..10).map(|i| i as f64).collect()).unwrap();
        let y = vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 1];
        let data = Dataset::new(x, vec!["f".into()], y, vec!["a".into(), "b".into()]).unwrap();
        let (train, test) = split(&data, 0.5, 3, true).unwrap();
        let count = |d: &Dataset| d.y().iter().filter(|&&l| l == 1).count();
        assert_eq!(count(&train), 1);
        assert_eq!(count(&test), 1);
    }

    #[test]
    fn split_is_deterministic() {
        let x = Matrix::from_vec(20, 1, (0..20).map(|i| i as f64).collect()).unwrap();
        let y: Vec<usize> = (0..20).map(|i| i % 2).collect();
        let data = Dataset::new(x, vec!["f".into()], y, vec!["a".into(), "b".into()]).unwrap();
        let (tr1, te1) = split(&data, 0.3, 99, true).unwrap();
        let (tr2, te2) = split(&data, 0.3, 99, true).unwrap();
        assert_eq!(tr1.x().data(), tr2.x().data());
        assert_eq!(te1.x().data(), te2.x().data());
    }

    #[test]
    fn singleton_class_fails_stratification() {
        let x = Matrix::from_vec(3, 1, vec![1.0, 2.0, 3.0]).unwrap();
        let data = Dataset::new(
            x,
            vec!["f".into()],
            vec![0, 0, 1],
            vec!["a".into(), "b".into()],
        )
        .unwrap();
        assert!(matches!(
            split(&data, 0.5, 0, true),
            Err(Error::Stratification { .. })
        ));
    }

    #[test]
    fn summarize_counts_and_sorts() {
        let table = parse_table(b"a,b\nA,1\nA,2\nB,1\n", &schema_ab(), b',').unwrap();
        let summary = summarize(&table, "a").unwrap();
        assert_eq!(summary, vec![("A".into(), 2), ("B".into(), 1)]);
        let total: usize = summary.iter().map(|(_, c)| c).sum();
        assert_eq!(total, table.n_rows());
        assert!(matches!(
            summarize(&table, "missing"),
            Err(Error::UnknownColumn(_))
        ));
    }

    #[test]
    fn summarize_single_value_column() {
        let table = parse_table(b"a,b\nv,1\nv,2\nv,1\n", &schema_ab(), b',').unwrap();
        assert_eq!(summarize(&table, "a").unwrap(), vec![("v".into(), 3)]);
    }

    #[test]
    fn summary_csv_format() {
        let csv = summary_to_csv(&[("White".into(), 78244), ("Black".into(), 8806)]);
        assert_eq!(csv, "value,count\nWhite,78244\nBlack,8806\n");
    }
}
