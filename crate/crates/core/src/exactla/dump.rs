//! Plain-text matrix dumps: a `rows cols characteristic` header followed by
//! row-major entries, one matrix row per line.

use crate::error::{Error, Result};

use super::field::Field;
use super::matrix::ExactMatrix;

pub fn write_dump<F: Field>(m: &ExactMatrix<F>) -> String {
    let f = m.field();
    let mut s = format!("{} {} {}\n", m.rows(), m.cols(), f.characteristic());
    for row in m.row_iter() {
        let line: Vec<String> = row.iter().map(|x| f.format(x)).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

pub fn read_dump<F: Field>(field: F, text: &str) -> Result<ExactMatrix<F>> {
    let mut tokens = text.split_whitespace();
    let mut header = |what: &str| -> Result<u64> {
        tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("matrix dump: missing {what}")))
    };
    let rows = header("rows")? as usize;
    let cols = header("cols")? as usize;
    let ch = header("characteristic")?;
    if ch != field.characteristic() {
        return Err(Error::Parse(format!(
            "matrix dump has characteristic {ch}, expected {}",
            field.characteristic()
        )));
    }
    let entries = tokens
        .map(|t| field.parse_elem(t))
        .collect::<Result<Vec<_>>>()?;
    if entries.len() != rows * cols {
        return Err(Error::Parse(format!(
            "matrix dump: expected {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    let data = entries.chunks(cols.max(1)).map(|c| c.to_vec()).collect();
    if cols == 0 {
        return Ok(ExactMatrix::zeros(field, rows, 0));
    }
    ExactMatrix::from_rows(field, cols, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::Rationals;
    use crate::rat;

    #[test]
    fn round_trip() {
        let mut m = ExactMatrix::zeros(Rationals, 2, 3);
        m.set(0, 0, rat(1, 1));
        m.set(1, 2, rat(-3, 2));
        let text = write_dump(&m);
        assert_eq!(text, "2 3 0\n1 0 0\n0 0 -3/2\n");
        assert_eq!(read_dump(Rationals, &text).unwrap(), m);
        assert!(read_dump(Rationals, "2 3 0\n1 0").is_err());
        assert!(read_dump(Rationals, "1 1 7\n1").is_err());
    }
}
