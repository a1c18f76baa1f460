//! Sweep tables as CSV or aligned text.

use paraspec::spectra::SweepTable;

fn header(table: &SweepTable, parameter: &str) -> Vec<String> {
    std::iter::once(parameter.to_owned())
        .chain((1..=table.dimension()).map(|k| format!("E{k}")))
        .collect()
}

/// LF-terminated CSV; floats use the shortest representation that
/// round-trips.
pub fn emit_csv(table: &SweepTable, parameter: &str) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    // writing into a Vec cannot fail
    w.write_record(header(table, parameter))
        .expect("in-memory write");
    for (l, e) in table.rows() {
        let record = std::iter::once(l)
            .chain(e.iter().copied())
            .map(|v| v.to_string());
        w.write_record(record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn emit_text(table: &SweepTable, parameter: &str) -> String {
    let mut out = String::new();
    let head = header(table, parameter);
    out.push_str(&head.iter().map(|h| format!("{h:>24}")).collect::<String>());
    out.push('\n');
    for (l, e) in table.rows() {
        for v in std::iter::once(l).chain(e.iter().copied()) {
            out.push_str(&format!("{v:>24.16e}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let t = SweepTable {
            lambdas: vec![0.0, 0.5],
            eigenvalues: vec![vec![-1.0, 1.0], vec![0.1, 2.0]],
        };
        assert_eq!(emit_csv(&t, "lambda"), "lambda,E1,E2\n0,-1,1\n0.5,0.1,2\n");
        assert_eq!(emit_text(&t, "lambda").lines().count(), 3);
    }
}
