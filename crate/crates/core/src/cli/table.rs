use super::Format;

/// Rows of cells rendered either aligned or tab-separated, always with a
/// header row and LF line endings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let mut out = String::new();
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    out.push_str(&row.join("\t"));
                    out.push('\n');
                }
                out
            }
            Format::Text => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|j| {
                        std::iter::once(&self.header)
                            .chain(&self.rows)
                            .map(|r| r[j].chars().count())
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let mut out = String::new();
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    let mut line = String::new();
                    for (j, cell) in row.iter().enumerate() {
                        let pad = widths[j] - cell.chars().count();
                        if j == 0 {
                            line.push_str(cell);
                            line.push_str(&" ".repeat(pad));
                        } else {
                            line.push_str("  ");
                            line.push_str(&" ".repeat(pad));
                            line.push_str(cell);
                        }
                    }
                    out.push_str(line.trim_end());
                    out.push('\n');
                }
                out
            }
        }
    }
}
