//! Sparse fraction-free elimination over the integers.
//!
//! Rows are integer vectors (rational rows are scaled by the lcm of their
//! denominators first). A row update is `r <- (p/g) r - (a/g) pivot` with
//! `g = gcd(p, a)`, followed by division by the row content, so entries stay
//! as small as the lattice allows. Pivots are chosen to limit fill: the
//! shortest active row, and within it the column touched by the fewest
//! active rows.

use num_rational::BigRational;

use super::int::Int;
use super::matrix::SparseVec;

pub type IntRow = Vec<(usize, Int)>;

/// Divides a row by the gcd of its entries and makes the first entry positive.
pub fn make_primitive(row: &mut IntRow) {
    let Some((_, first)) = row.first() else { return };
    let neg = first.is_negative();
    let mut g = Int::ZERO;
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if !g.is_one() && !g.is_zero() {
        for (_, x) in row.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
    if neg {
        for (_, x) in row.iter_mut() {
            *x = x.neg();
        }
    }
}

fn find(row: &IntRow, col: usize) -> Option<usize> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok()
}

/// `alpha * target - beta * pivot`, merged over sorted supports.
fn combine(target: &IntRow, alpha: &Int, pivot: &IntRow, beta: &Int) -> IntRow {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ci = target.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, target[i].1.mul(alpha)));
            i += 1;
        } else if cj < ci {
            out.push((cj, pivot[j].1.mul(beta).neg()));
            j += 1;
        } else {
            let v = target[i].1.mul_sub_mul(alpha, &pivot[j].1, beta);
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Eliminates `col` from `target` using `pivot` (whose entry at `col` is `p`).
fn eliminate_from(target: &IntRow, pivot: &IntRow, col: usize, p: &Int) -> IntRow {
    let pos = find(target, col).expect("target holds the pivot column");
    let a = &target[pos].1;
    let g = p.gcd(a);
    let alpha = p.div_exact(&g);
    let beta = a.div_exact(&g);
    let mut row = combine(target, &alpha, pivot, &beta);
    make_primitive(&mut row);
    row
}

struct Forward {
    active: Vec<IntRow>,
    col_count: Vec<u32>,
    retired: Vec<(usize, IntRow)>,
    keep_retired: bool,
}

impl Forward {
    fn new(rows: Vec<IntRow>, ncols: usize, keep_retired: bool) -> Self {
        let mut col_count = vec![0u32; ncols];
        let active: Vec<IntRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for r in &active {
            for (c, _) in r {
                col_count[*c] += 1;
            }
        }
        Forward { active, col_count, retired: Vec::new(), keep_retired }
    }

    fn choose_pivot(&self) -> Option<(usize, usize)> {
        let mut best_row: Option<usize> = None;
        for (i, r) in self.active.iter().enumerate() {
            let better = match best_row {
                None => true,
                Some(b) => {
                    let rb = &self.active[b];
                    r.len() < rb.len()
                }
            };
            if better {
                best_row = Some(i);
                if r.len() == 1 {
                    break;
                }
            }
        }
        let ri = best_row?;
        let row = &self.active[ri];
        let col = row
            .iter()
            .min_by(|a, b| {
                (self.col_count[a.0], a.1.bits(), a.0).cmp(&(self.col_count[b.0], b.1.bits(), b.0))
            })
            .map(|(c, _)| *c)
            .expect("active rows are non-empty");
        Some((ri, col))
    }

    fn run(&mut self) {
        while let Some((ri, col)) = self.choose_pivot() {
            let pivot = self.active.swap_remove(ri);
            for (c, _) in &pivot {
                self.col_count[*c] -= 1;
            }
            let p = pivot[find(&pivot, col).expect("pivot entry")].1.clone();
            let mut k = 0;
            while k < self.active.len() {
                if find(&self.active[k], col).is_some() {
                    for (c, _) in &self.active[k] {
                        self.col_count[*c] -= 1;
                    }
                    let updated = eliminate_from(&self.active[k], &pivot, col, &p);
                    if updated.is_empty() {
                        self.active.swap_remove(k);
                        continue;
                    }
                    for (c, _) in &updated {
                        self.col_count[*c] += 1;
                    }
                    self.active[k] = updated;
                }
                k += 1;
            }
            if self.keep_retired {
                self.retired.push((col, pivot));
            } else {
                self.retired.push((col, Vec::new()));
            }
        }
    }
}

/// Exact rank of the integer row set.
pub fn rank(rows: Vec<IntRow>, ncols: usize) -> usize {
    let mut f = Forward::new(rows, ncols, false);
    f.run();
    f.retired.len()
}

/// Fully reduced echelon form with integer rows: each row holds exactly one
/// pivot column, rows are sorted by pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<(usize, IntRow)>,
}

impl Echelon {
    /// Divides each row by its pivot entry: the canonical RREF over Q.
    pub fn into_rational(self) -> Vec<(usize, SparseVec)> {
        self.rows
            .into_iter()
            .map(|(pc, row)| {
                let p = row[find(&row, pc).expect("pivot present")].1.to_big();
                let v = row
                    .into_iter()
                    .map(|(c, x)| (c, BigRational::new(x.to_big(), p.clone())))
                    .collect();
                (pc, v)
            })
            .collect()
    }
}

pub fn reduce(rows: Vec<IntRow>, ncols: usize) -> Echelon {
    let mut f = Forward::new(rows, ncols, true);
    f.run();
    let mut retired = f.retired;
    // back substitution: row i never contains the pivot of an earlier row,
    // so clearing later pivots from earlier rows in reverse order suffices.
    for j in (0..retired.len()).rev() {
        let (cj, _) = retired[j];
        let (head, tail) = retired.split_at_mut(j);
        let pivot_row = &tail[0].1;
        let p = pivot_row[find(pivot_row, cj).expect("pivot present")].1.clone();
        for (_, row) in head.iter_mut() {
            if find(row, cj).is_some() {
                *row = eliminate_from(row, pivot_row, cj, &p);
            }
        }
    }
    retired.sort_by_key(|(c, _)| *c);
    Echelon { rows: retired }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> IntRow {
        v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, Int::Small(*x))).collect()
    }

    #[test]
    fn primitive_rows() {
        let mut r = row(&[-4, 0, 6, 8]);
        make_primitive(&mut r);
        assert_eq!(r, row(&[2, 0, -3, -4]));
    }

    #[test]
    fn rank_and_reduce_agree() {
        let rows = vec![row(&[1, 2, 3, 4]), row(&[2, 4, 6, 8]), row(&[0, 1, 1, 0]), row(&[1, 3, 4, 4])];
        assert_eq!(rank(rows.clone(), 4), 2);
        let e = reduce(rows, 4);
        assert_eq!(e.rows.iter().map(|(c, _)| *c).collect::<Vec<_>>(), vec![0, 1]);
        let q = e.into_rational();
        // x0 + x2 + 4x3 ; x1 + x2
        assert_eq!(q[0].1.len(), 3);
        assert_eq!(q[1].1.len(), 2);
    }

    #[test]
    fn reduced_rows_only_hold_their_own_pivot() {
        let rows = vec![row(&[0, 3, 1, 2]), row(&[5, 1, 0, 1]), row(&[1, 1, 1, 1])];
        let e = reduce(rows, 4);
        let pcs: Vec<usize> = e.rows.iter().map(|(c, _)| *c).collect();
        for (pc, r) in &e.rows {
            for other in &pcs {
                if other != pc {
                    assert!(find(r, *other).is_none());
                }
            }
        }
    }
}
