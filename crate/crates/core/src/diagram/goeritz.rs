//! Checkerboard colorings, Goeritz matrices and the link determinant.

use super::{checkerboard_coloring, Diagram, DiagramError};

/// Checkerboard coloring plus the reduced Goeritz matrix of a connected
/// diagram (one row/column deleted).
#[derive(Clone, Debug)]
pub struct GoeritzData {
    /// Per face: true if white.
    pub coloring: Vec<bool>,
    /// Reduced matrix over white faces, row-major, size `whites - 1`.
    pub matrix: Vec<Vec<i64>>,
    /// Index (into the white-face list) of the deleted row/column.
    pub deleted: usize,
}

/// Builds the Goeritz matrix of a connected diagram with at least one
/// crossing. White faces are the ones whose corners at each crossing are not
/// swept by rotating the over-strand counterclockwise, anchored at the
/// lowest crossing; crossings whose white corners disagree with that rule
/// contribute with opposite sign.
pub fn goeritz_matrix(d: &Diagram) -> Result<GoeritzData, DiagramError> {
    if d.n_crossings() == 0 {
        return Err(DiagramError::Crossingless);
    }
    if d.components() != 1 {
        return Err(DiagramError::NotConnected);
    }
    let faces = d.faces();
    let coloring = checkerboard_coloring(d, &faces);
    let mut white_index = vec![usize::MAX; faces.orbits.len()];
    let mut whites = 0usize;
    for (f, &w) in coloring.iter().enumerate() {
        if w {
            white_index[f] = whites;
            whites += 1;
        }
    }
    let mut full = vec![vec![0i64; whites]; whites];
    for c in 0..d.n_crossings() {
        let f0 = Diagram::face_at_corner(&faces, c, 0);
        let white_parity: usize = if coloring[f0] { 0 } else { 1 };
        let eta: i64 = if white_parity as u8 == d.under_axis(c) {
            1
        } else {
            -1
        };
        let fa = Diagram::face_at_corner(&faces, c, white_parity);
        let fb = Diagram::face_at_corner(&faces, c, white_parity + 2);
        debug_assert!(coloring[fa] && coloring[fb]);
        let (i, j) = (white_index[fa], white_index[fb]);
        if i != j {
            full[i][j] -= eta;
            full[j][i] -= eta;
        }
    }
    for (i, row) in full.iter_mut().enumerate() {
        let row_sum: i64 = row
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .sum();
        row[i] = -row_sum;
    }
    let deleted = whites - 1;
    let matrix: Vec<Vec<i64>> = (0..deleted)
        .map(|i| (0..deleted).map(|j| full[i][j]).collect())
        .collect();
    Ok(GoeritzData {
        coloring,
        matrix,
        deleted,
    })
}

/// Exact determinant of an integer matrix by fraction-free elimination.
pub fn int_determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let pivot = (k + 1..n).find(|&r| a[r][k] != 0);
            match pivot {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    let det = sign * a[n - 1][n - 1];
    i64::try_from(det).expect("determinant exceeds i64")
}

/// `|H1|` of the double branched cover: the absolute Goeritz determinant for
/// connected diagrams, 1 for a lone circle or the empty diagram, and 0 for
/// split diagrams (the cover is not a rational homology sphere).
pub fn link_determinant(d: &Diagram) -> u64 {
    match d.components() {
        0 => 1,
        1 => {
            if d.n_crossings() == 0 {
                1
            } else {
                int_determinant(&goeritz_matrix(d).expect("connected").matrix).unsigned_abs()
            }
        }
        _ => 0,
    }
}
