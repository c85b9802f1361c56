use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Settled = 0,
    Open = 1,
    Invalid = 2,
}

/// One command result in all three renderings.
pub struct Report {
    pub status: Status,
    pub text: String,
    pub json: Value,
    pub csv: String,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.clone(),
        }
    }
}

/// A CSV document with a header row.
pub fn csv_table<I>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("CSV of UTF-8 fields")
}

/// Appends a line to a text buffer.
pub fn line(buf: &mut String, s: impl AsRef<str>) {
    buf.push_str(s.as_ref());
    buf.push('\n');
}
