use serde::{Deserialize, Serialize};
use stanley_core::{Error, MatrixKind, NatMatrix, Result, SemistandardTableau};

/// A recording tableau T and an insertion tableau U of the same shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableauPair {
    pub recording: SemistandardTableau,
    pub insertion: SemistandardTableau,
}

impl TableauPair {
    pub fn new(recording: SemistandardTableau, insertion: SemistandardTableau) -> Result<Self> {
        if recording.shape() != insertion.shape() {
            return Err(Error::domain(format!(
                "shapes differ: {} vs {}",
                recording.shape(),
                insertion.shape()
            )));
        }
        Ok(TableauPair { recording, insertion })
    }
}

/// Row-inserts `x`, returning the row that grew.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(c) => x = std::mem::replace(&mut row[c], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Removes the last cell of row `r` and reverse-bumps it out of the first row.
fn row_uninsert(rows: &mut Vec<Vec<usize>>, r: usize) -> usize {
    let mut y = rows[r].pop().expect("nonempty row");
    if rows[r].is_empty() {
        rows.pop();
    }
    for row in rows[..r].iter_mut().rev() {
        let c = row.iter().rposition(|&x| x < y).expect("reverse bump target");
        y = std::mem::replace(&mut row[c], y);
    }
    y
}

/// Row holding the last-recorded cell: the rightmost occurrence of the largest entry.
fn last_recorded_row(rows: &[Vec<usize>]) -> Option<usize> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (r, row) in rows.iter().enumerate() {
        if let Some(&x) = row.last() {
            let c = row.len() - 1;
            if best.is_none_or(|(bx, _, bc)| x > bx || (x == bx && c > bc)) {
                best = Some((x, r, c));
            }
        }
    }
    best.map(|(_, r, _)| r)
}

fn knuth_forward(m: &NatMatrix) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut rec: Vec<Vec<usize>> = Vec::new();
    let mut ins: Vec<Vec<usize>> = Vec::new();
    for ((i, j), mult) in m.nonzero() {
        for _ in 0..mult {
            let r = row_insert(&mut ins, j);
            if r == rec.len() {
                rec.push(Vec::new());
            }
            rec[r].push(i);
        }
    }
    (rec, ins)
}

fn knuth_reverse(mut rec: Vec<Vec<usize>>, mut ins: Vec<Vec<usize>>, m: &mut NatMatrix) {
    while let Some(r) = last_recorded_row(&rec) {
        let i = rec[r].pop().expect("nonempty row");
        if rec[r].is_empty() {
            rec.pop();
        }
        let j = row_uninsert(&mut ins, r);
        m.add(i, j, 1);
    }
}

/// Reverse RSK: the pair (T, U) to the p x q matrix, with p and q the tableau bounds.
pub fn rsk_gl(pair: &TableauPair) -> Result<NatMatrix> {
    if pair.recording.shape() != pair.insertion.shape() {
        return Err(Error::domain("recording and insertion tableaux have different shapes"));
    }
    let mut m = NatMatrix::zeros(pair.recording.bound(), pair.insertion.bound(), MatrixKind::Generic);
    knuth_reverse(pair.recording.rows().to_vec(), pair.insertion.rows().to_vec(), &mut m);
    Ok(m)
}

/// Knuth's RSK: M to (recording T, insertion U).
pub fn rsk_gl_inverse(m: &NatMatrix) -> TableauPair {
    let (rec, ins) = knuth_forward(m);
    TableauPair {
        recording: SemistandardTableau::new(rec, m.rows()).expect("RSK output is semistandard"),
        insertion: SemistandardTableau::new(ins, m.cols()).expect("RSK output is semistandard"),
    }
}

/// Symmetric matrix M + M^t with the diagonal doubled.
fn symmetrize(m: &NatMatrix) -> NatMatrix {
    let n = m.rows();
    let mut s = NatMatrix::zeros(n, n, MatrixKind::Generic);
    for ((i, j), v) in m.nonzero() {
        s.add(i, j, v);
        s.add(j, i, v);
    }
    s
}

/// Upper triangular half of a symmetric matrix, halving the diagonal when asked.
fn upper_half(s: &NatMatrix, halve_diagonal: bool, kind: MatrixKind) -> Result<NatMatrix> {
    let n = s.rows();
    let mut m = NatMatrix::zeros(n, n, kind);
    for ((i, j), v) in s.nonzero() {
        if i < j {
            m.set(i, j, v);
        } else if i == j {
            if halve_diagonal {
                debug_assert!(v % 2 == 0);
                m.set(i, j, v / 2);
            } else {
                m.set(i, j, v);
            }
        }
    }
    m.validate()?;
    Ok(m)
}

/// Upper triangular part of RSK(T, T); its trace counts the odd columns of T.
pub fn twin_rsk(t: &SemistandardTableau) -> NatMatrix {
    let mut s = NatMatrix::zeros(t.bound(), t.bound(), MatrixKind::Generic);
    knuth_reverse(t.rows().to_vec(), t.rows().to_vec(), &mut s);
    upper_half(&s, false, MatrixKind::UpperTriangular).expect("upper half is upper triangular")
}

fn square_check(m: &NatMatrix, kind: MatrixKind) -> Result<()> {
    if m.rows() != m.cols() {
        return Err(Error::domain("matrix must be square"));
    }
    m.clone().with_kind(kind).map(|_| ())
}

/// Tableau with even columns to the strictly upper triangular matrix.
pub fn rsk_sp(t: &SemistandardTableau) -> Result<NatMatrix> {
    if !t.shape().all_columns_even() {
        return Err(Error::domain(format!("shape {} has an odd column", t.shape())));
    }
    let mut s = NatMatrix::zeros(t.bound(), t.bound(), MatrixKind::Generic);
    knuth_reverse(t.rows().to_vec(), t.rows().to_vec(), &mut s);
    upper_half(&s, false, MatrixKind::StrictlyUpperTriangular)
}

/// Strictly upper triangular matrix to its tableau with even columns.
pub fn rsk_sp_inverse(m: &NatMatrix) -> Result<SemistandardTableau> {
    square_check(m, MatrixKind::StrictlyUpperTriangular)?;
    let (rec, ins) = knuth_forward(&symmetrize(m));
    debug_assert_eq!(rec, ins);
    SemistandardTableau::new(ins, m.rows())
}

/// Column insertion with weak bumping; returns (row, column) of the new cell.
fn column_insert(cols: &mut Vec<Vec<usize>>, mut v: usize) -> (usize, usize) {
    for (c, col) in cols.iter_mut().enumerate() {
        match col.iter().position(|&y| y >= v) {
            Some(r) => v = std::mem::replace(&mut col[r], v),
            None => {
                col.push(v);
                return (col.len() - 1, c);
            }
        }
    }
    cols.push(vec![v]);
    (0, cols.len() - 1)
}

fn columns_to_rows(cols: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let height = cols.first().map_or(0, Vec::len);
    (0..height)
        .map(|r| cols.iter().take_while(|c| c.len() > r).map(|c| c[r]).collect())
        .collect()
}

fn rows_to_columns(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width)
        .map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
        .collect()
}

/// Upper triangular matrix to its tableau with even rows (Burge insertion of M + M^t).
pub fn rsk_o_inverse(m: &NatMatrix) -> Result<SemistandardTableau> {
    square_check(m, MatrixKind::UpperTriangular)?;
    let s = symmetrize(m);
    let n = s.rows();
    let mut cols: Vec<Vec<usize>> = Vec::new();
    for u in 1..=n {
        for v in (1..=n).rev() {
            for _ in 0..s.get(u, v) {
                column_insert(&mut cols, v);
            }
        }
    }
    SemistandardTableau::new(columns_to_rows(&cols), n)
}

/// Tableau with even rows to the upper triangular matrix (reverse Burge insertion).
pub fn rsk_o(t: &SemistandardTableau) -> Result<NatMatrix> {
    if !t.shape().all_rows_even() {
        return Err(Error::domain(format!("shape {} has an odd row", t.shape())));
    }
    let n = t.bound();
    let mut s = NatMatrix::zeros(n, n, MatrixKind::Generic);
    let mut rec = t.rows().to_vec();
    let mut cols = rows_to_columns(t.rows());
    while let Some(r) = last_recorded_row(&rec) {
        let u = rec[r].pop().expect("nonempty row");
        if rec[r].is_empty() {
            rec.pop();
        }
        let mut c = rec.get(r).map_or(0, Vec::len);
        let mut y = cols[c].pop().expect("cell present in insertion tableau");
        if cols[c].is_empty() {
            cols.pop();
        }
        while c > 0 {
            c -= 1;
            let col = &mut cols[c];
            let pos = col.iter().rposition(|&x| x <= y).expect("reverse column bump target");
            y = std::mem::replace(&mut col[pos], y);
        }
        s.add(u, y, 1);
    }
    upper_half(&s, true, MatrixKind::UpperTriangular)
}
