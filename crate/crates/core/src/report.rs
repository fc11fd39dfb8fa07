//! Verification reports: per-cell expected/got tables that serialize to JSON
//! and render as fixed-width text. All ordering is deterministic.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CellOutcome {
    pub bidegree: (u32, u32),
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub n: usize,
    pub pass: bool,
    pub cells: Vec<CellOutcome>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>, n: usize) -> Self {
        Report {
            name: name.into(),
            n,
            pass: true,
            cells: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        bidegree: (u32, u32),
        expected: impl ToString,
        got: impl ToString,
        pass: bool,
    ) {
        self.pass &= pass;
        self.cells.push(CellOutcome {
            bidegree,
            expected: expected.to_string(),
            got: got.to_string(),
            pass,
        });
    }

    pub fn check_eq<T: PartialEq + ToString>(&mut self, bidegree: (u32, u32), expected: T, got: T) {
        let pass = expected == got;
        self.push(bidegree, expected, got, pass);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "== {} (n = {}): {}\n",
            self.name,
            self.n,
            if self.pass { "PASS" } else { "FAIL" }
        ));
        let wide = self
            .cells
            .iter()
            .map(|c| c.expected.len().max(c.got.len()))
            .max()
            .unwrap_or(0)
            .min(40);
        for c in &self.cells {
            out.push_str(&format!(
                "  ({:>2},{:>2})  expected {:>w$}  got {:>w$}  {}\n",
                c.bidegree.0,
                c.bidegree.1,
                c.expected,
                c.got,
                if c.pass { "ok" } else { "FAIL" },
                w = wide,
            ));
        }
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        out
    }
}
