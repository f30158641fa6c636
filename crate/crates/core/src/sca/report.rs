//! CSV output of the analyses. Column order is fixed.

use std::io::{self, BufRead, Write};

use super::leakage::{ConvergencePoint, CpaByte};

pub const NICV_HEADER: &str = "t,byte,value";
pub const CPA_HEADER: &str = "byte,k,score,rank";
pub const CONVERGENCE_HEADER: &str = "traces,byte,rank,score_true,score_best_wrong";

pub fn write_nicv(w: &mut impl Write, nicv: &[Vec<f64>]) -> io::Result<()> {
    writeln!(w, "{NICV_HEADER}")?;
    for (b, row) in nicv.iter().enumerate() {
        for (t, v) in row.iter().enumerate() {
            writeln!(w, "{t},{b},{v:.9}")?;
        }
    }
    Ok(())
}

pub fn write_cpa(w: &mut impl Write, cpa: &[CpaByte]) -> io::Result<()> {
    writeln!(w, "{CPA_HEADER}")?;
    for (b, r) in cpa.iter().enumerate() {
        for (pos, k) in r.ranking().iter().enumerate() {
            writeln!(w, "{b},{k},{:.9},{}", r.scores[*k as usize], pos + 1)?;
        }
    }
    Ok(())
}

pub fn write_convergence(w: &mut impl Write, conv: &[ConvergencePoint]) -> io::Result<()> {
    writeln!(w, "{CONVERGENCE_HEADER}")?;
    for c in conv {
        writeln!(w, "{},{},{},{:.9},{:.9}", c.traces, c.byte, c.rank, c.score_true, c.score_best_wrong)?;
    }
    Ok(())
}

/// Reads any of the files above back as rows of fields, checking the
/// header and the column count.
pub fn read_csv(r: impl BufRead, header: &str) -> io::Result<Vec<Vec<String>>> {
    let bad = |m: String| io::Error::new(io::ErrorKind::InvalidData, m);
    let mut lines = r.lines();
    let h = lines.next().transpose()?.unwrap_or_default();
    if h != header {
        return Err(bad(format!("expected header `{header}`, found `{h}`")));
    }
    let cols = header.split(',').count();
    let mut rows = Vec::new();
    for l in lines {
        let l = l?;
        let row: Vec<String> = l.split(',').map(str::to_string).collect();
        if row.len() != cols {
            return Err(bad(format!("row `{l}` has {} columns, expected {cols}", row.len())));
        }
        rows.push(row);
    }
    Ok(rows)
}
