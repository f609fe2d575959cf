//! Output rendering for the four supported formats.

use clap::ValueEnum;
use kosphere::spheres::PhiValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Md,
    Csv,
    Json,
}

/// Renders an 8x8 residue table. Rows are labeled by `n mod 8`,
/// columns by `m mod 8`.
pub fn render_residue_table(name: &str, table: &[[PhiValue; 8]; 8], format: Format) -> String {
    let cell = |v: &PhiValue| v.as_str().to_string();
    match format {
        Format::Json => {
            let rows: Vec<Vec<String>> =
                table.iter().map(|r| r.iter().map(cell).collect()).collect();
            let value = serde_json::json!({ "table": name, "rows": rows });
            serde_json::to_string(&value).expect("static structure")
        }
        Format::Csv => {
            let mut out = String::from("n/m,0,1,2,3,4,5,6,7\n");
            for (n, row) in table.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(cell).collect();
                out.push_str(&format!("{n},{}\n", cells.join(",")));
            }
            out
        }
        Format::Md => {
            let mut out = String::from("| n\\m | 0 | 1 | 2 | 3 | 4 | 5 | 6 | 7 |\n");
            out.push_str("|---|---|---|---|---|---|---|---|---|\n");
            for (n, row) in table.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(cell).collect();
                out.push_str(&format!("| {n} | {} |\n", cells.join(" | ")));
            }
            out
        }
        Format::Text => {
            let mut out = format!("{name} (rows n mod 8, columns m mod 8)\n");
            out.push_str("n\\m    0    1    2    3    4    5    6    7\n");
            for (n, row) in table.iter().enumerate() {
                out.push_str(&format!("{n}  "));
                for v in row {
                    out.push_str(&format!(" {:>4}", v.as_str()));
                }
                out.push('\n');
            }
            out
        }
    }
}

/// Renders a list of records with a fixed column set.
pub fn render_records(
    columns: &[&str],
    rows: &[Vec<String>],
    json_rows: Vec<serde_json::Value>,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            serde_json::to_string(&serde_json::Value::Array(json_rows)).expect("static structure")
        }
        Format::Csv => {
            let mut out = format!("{}\n", columns.join(","));
            for row in rows {
                out.push_str(&format!("{}\n", row.join(",")));
            }
            out
        }
        Format::Md => {
            let mut out = format!("| {} |\n", columns.join(" | "));
            out.push_str(&format!("|{}\n", "---|".repeat(columns.len())));
            for row in rows {
                out.push_str(&format!("| {} |\n", row.join(" | ")));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&format!("{}\n", row.join(" ")));
            }
            out
        }
    }
}
