//! Plain-text table format.
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 2
//! 2 2 2
//! 1 a 0
//! ```
//!
//! Line 1 is the order `n`, the next `n` lines are the rows of the table and
//! an optional final line holds `n` labels. Anything after that is rejected.

use super::{FiniteSemigroup, SemigroupError};

fn parse_err(line: usize, reason: impl Into<String>) -> SemigroupError {
    SemigroupError::Parse {
        line,
        reason: reason.into(),
    }
}

impl FiniteSemigroup {
    pub fn parse_text(input: &str) -> Result<Self, SemigroupError> {
        let mut lines: Vec<&str> = input.lines().map(str::trim).collect();
        while lines.last().is_some_and(|l| l.is_empty()) {
            lines.pop();
        }
        let header = lines.first().ok_or_else(|| parse_err(1, "missing order"))?;
        let n: usize = header
            .parse()
            .map_err(|_| parse_err(1, format!("expected the order, found {header:?}")))?;
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        if lines.len() < n + 1 {
            return Err(parse_err(
                lines.len() + 1,
                format!("expected {n} table rows, found {}", lines.len() - 1),
            ));
        }
        if lines.len() > n + 2 {
            return Err(parse_err(n + 3, "trailing content after the label line"));
        }
        let mut rows = Vec::with_capacity(n);
        for (k, line) in lines[1..=n].iter().enumerate() {
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| parse_err(k + 2, format!("not an element index: {tok:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let mut s = Self::from_rows(rows)?;
        if let Some(label_line) = lines.get(n + 1) {
            let labels: Vec<&str> = label_line.split_whitespace().collect();
            if labels.len() != n {
                return Err(parse_err(
                    n + 2,
                    format!("expected {n} labels, found {}", labels.len()),
                ));
            }
            s = s.with_labels(labels)?;
        }
        Ok(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.table.chunks(self.order) {
            let row: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if let Some(labels) = &self.labels {
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }
}
