use crate::algebra::C64;
use crate::error::Result;
use serde_json::{Map, Value};

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format!("{x:?}"),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// A header plus rows, in input-point order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

/// Builds one row's `(column, cell)` pairs.
#[derive(Debug, Default)]
pub struct Row(pub Vec<(String, Cell)>);

impl Row {
    pub fn num(&mut self, name: impl Into<String>, x: f64) {
        self.0.push((name.into(), Cell::Num(x)));
    }

    /// Complex values become `name_re`, `name_im` columns.
    pub fn complex(&mut self, name: &str, z: C64) {
        self.num(format!("{name}_re"), z.re);
        self.num(format!("{name}_im"), z.im);
    }

    pub fn text(&mut self, name: impl Into<String>, s: impl Into<String>) {
        self.0.push((name.into(), Cell::Text(s.into())));
    }
}

impl Table {
    /// Append a row; the first row fixes the header. Later rows are matched by
    /// column name, with missing cells left empty.
    pub fn push(&mut self, row: Row) {
        if self.columns.is_empty() && self.rows.is_empty() {
            self.columns = row.0.iter().map(|(n, _)| n.clone()).collect();
        }
        let mut cells = vec![Cell::Empty; self.columns.len()];
        for (name, cell) in row.0 {
            match self.columns.iter().position(|c| *c == name) {
                Some(k) => cells[k] = cell,
                None => {
                    self.columns.push(name);
                    for r in &mut self.rows {
                        r.push(Cell::Empty);
                    }
                    cells.push(cell);
                }
            }
        }
        self.rows.push(cells);
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| &r[k]).collect())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::csv))?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// An array of records with keys in column order.
    pub fn to_json(&self) -> Result<String> {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let m: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| (c.clone(), v.json()))
                    .collect();
                Value::Object(m)
            })
            .collect();
        Ok(serde_json::to_string_pretty(&records)? + "\n")
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}
