use crate::commands::Output;
use crate::Format;

pub struct Table {
    title: String,
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: String, headers: &[&str]) -> Self {
        Self {
            title,
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

pub fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Csv => csv(&out.table),
        Format::Latex => latex(&out.table),
    }
}

fn csv(t: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for line in std::iter::once(&t.headers).chain(&t.rows) {
        w.write_record(line).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("fields are utf-8")
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '{' | '}' | '_' | '&' | '%' | '#' | '$' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\^{}"),
            _ => out.push(c),
        }
    }
    out
}

fn latex(t: &Table) -> String {
    let mut s = format!("% {}\n", t.title);
    s.push_str(&format!(
        "\\begin{{tabular}}{{{}}}\n\\hline\n",
        "l".repeat(t.headers.len())
    ));
    let line = |cells: &[String]| {
        let cells: Vec<String> = cells.iter().map(|c| latex_escape(c)).collect();
        format!("{} \\\\\n", cells.join(" & "))
    };
    s.push_str(&line(&t.headers));
    s.push_str("\\hline\n");
    for row in &t.rows {
        s.push_str(&line(row));
    }
    s.push_str("\\hline\n\\end{tabular}\n");
    s
}
