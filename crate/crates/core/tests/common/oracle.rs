//! Brute-force reference solver.
//!
//! Works over all `n²` matrix entries per block, imposes homogeneity as
//! explicit equations, builds every column by evaluating the defining residual
//! on an elementary matrix, and eliminates with its own Gauss–Jordan routine.
//! Nothing here calls into the solver under test.

use gderiv::{GaussianRational as Q, OmegaSuperAlgebra, Parity, SpaceKind};
use num_traits::{One, Zero};

pub type Rows = Vec<Vec<Q>>;

/// Reduced row echelon form with zero rows dropped.
pub fn rref(mut rows: Rows) -> Rows {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &(&f * p);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// Basis of `{v : rows·v = 0}`.
pub fn kernel(rows: Rows, width: usize) -> Rows {
    let red = rref(rows);
    let pivots: Vec<usize> = red
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    (0..width)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); width];
            v[free] = Q::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect()
}

fn sign(a: usize, b: usize) -> Q {
    if a * b % 2 == 1 {
        -Q::one()
    } else {
        Q::one()
    }
}

fn bit(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

struct Alg {
    n: usize,
    par: Vec<usize>,
    c: Vec<Q>,
    om: Vec<Q>,
}

impl Alg {
    fn new(a: &OmegaSuperAlgebra) -> Self {
        let n = a.dim();
        let mut c = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c.push(a.constant(i, j, k).clone());
                }
            }
        }
        let om = (0..n * n).map(|t| a.omega()[(t / n, t % n)].clone()).collect();
        Self {
            n,
            par: a.parities().iter().map(|&p| bit(p)).collect(),
            c,
            om,
        }
    }

    /// `[b_x, v]` for a basis vector and an arbitrary vector.
    fn br_left(&self, x: usize, v: &[Q]) -> Vec<Q> {
        let n = self.n;
        (0..n)
            .map(|k| (0..n).map(|j| &v[j] * &self.c[(x * n + j) * n + k]).sum())
            .collect()
    }

    /// `[v, b_y]`.
    fn br_right(&self, v: &[Q], y: usize) -> Vec<Q> {
        let n = self.n;
        (0..n)
            .map(|k| (0..n).map(|i| &v[i] * &self.c[(i * n + y) * n + k]).sum())
            .collect()
    }

    fn br_basis(&self, x: usize, y: usize) -> Vec<Q> {
        let n = self.n;
        (0..n).map(|k| self.c[(x * n + y) * n + k].clone()).collect()
    }
}

/// Column `j` of a map stored row-major.
fn col(m: &[Q], n: usize, j: usize) -> Vec<Q> {
    (0..n).map(|i| m[i * n + j].clone()).collect()
}

fn mul(m: &[Q], n: usize, v: &[Q]) -> Vec<Q> {
    (0..n).map(|i| (0..n).map(|j| &m[i * n + j] * &v[j]).sum()).collect()
}

fn combine(terms: &[(Q, Vec<Q>)]) -> Vec<Q> {
    let n = terms[0].1.len();
    (0..n).map(|k| terms.iter().map(|(s, v)| s * &v[k]).sum()).collect()
}

/// Residual vectors of the defining identities for blocks `maps`, concatenated
/// over all ordered basis pairs.
fn residual(a: &Alg, kind: SpaceKind, deg: usize, maps: &[Vec<Q>]) -> Vec<Q> {
    let n = a.n;
    let one = Q::one();
    let neg = -Q::one();
    let mut out = Vec::new();
    for x in 0..n {
        let e = sign(deg, a.par[x]);
        let ne = -&e;
        for y in 0..n {
            let bxy = a.br_basis(x, y);
            let left = |m: &[Q]| a.br_right(&col(m, n, x), y);
            let right = |m: &[Q]| a.br_left(x, &col(m, n, y));
            let on = |m: &[Q]| mul(m, n, &bxy);
            let mut parts: Vec<Vec<Q>> = Vec::new();
            match kind {
                SpaceKind::Der => parts.push(combine(&[
                    (one.clone(), on(&maps[0])),
                    (neg.clone(), left(&maps[0])),
                    (ne.clone(), right(&maps[0])),
                ])),
                SpaceKind::GDer => parts.push(combine(&[
                    (one.clone(), on(&maps[2])),
                    (neg.clone(), left(&maps[0])),
                    (ne.clone(), right(&maps[1])),
                ])),
                SpaceKind::QDer => parts.push(combine(&[
                    (one.clone(), on(&maps[1])),
                    (neg.clone(), left(&maps[0])),
                    (ne.clone(), right(&maps[0])),
                ])),
                SpaceKind::Cent => {
                    parts.push(combine(&[(one.clone(), left(&maps[0])), (ne.clone(), right(&maps[0]))]));
                    parts.push(combine(&[(one.clone(), on(&maps[0])), (neg.clone(), left(&maps[0]))]));
                }
                SpaceKind::QCent => {
                    parts.push(combine(&[(one.clone(), left(&maps[0])), (ne.clone(), right(&maps[0]))]))
                }
                SpaceKind::ZDer => {
                    parts.push(left(&maps[0]));
                    parts.push(on(&maps[0]));
                }
            }
            out.extend(parts.into_iter().flatten());
        }
    }
    out
}

/// `ω(d b_x, b_y) + ε ω(b_x, d b_y)` over all pairs.
fn compat_residual(a: &Alg, deg: usize, m: &[Q]) -> Vec<Q> {
    let n = a.n;
    let mut out = Vec::new();
    for x in 0..n {
        let e = sign(deg, a.par[x]);
        for y in 0..n {
            let dx = col(m, n, x);
            let dy = col(m, n, y);
            let l: Q = (0..n).map(|i| &dx[i] * &a.om[i * n + y]).sum();
            let r: Q = (0..n).map(|j| &a.om[x * n + j] * &dy[j]).sum();
            out.push(l + &e * &r);
        }
    }
    out
}

fn blocks(kind: SpaceKind) -> usize {
    match kind {
        SpaceKind::GDer => 3,
        SpaceKind::QDer => 2,
        _ => 1,
    }
}

/// Canonical basis of the requested space as row-major `n²` vectors.
pub fn solve(alg: &OmegaSuperAlgebra, kind: SpaceKind, degree: Parity, compatible: bool, strict: bool) -> Rows {
    let a = Alg::new(alg);
    let n = a.n;
    let nn = n * n;
    let nb = blocks(kind);
    let width = nb * nn;
    let deg = bit(degree);

    let zero_maps = || vec![vec![Q::zero(); nn]; nb];
    let columns: Vec<Vec<Q>> = (0..width)
        .map(|u| {
            let mut maps = zero_maps();
            maps[u / nn][u % nn] = Q::one();
            let mut column = residual(&a, kind, deg, &maps);
            if compatible {
                for (b, m) in maps.iter().enumerate() {
                    if b == 0 || strict {
                        column.extend(compat_residual(&a, deg, m));
                    }
                }
            }
            column
        })
        .collect();

    let height = columns[0].len();
    let mut rows: Rows = (0..height)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    for b in 0..nb {
        for i in 0..n {
            for j in 0..n {
                if (a.par[i] + a.par[j]) % 2 != deg {
                    let mut row = vec![Q::zero(); width];
                    row[b * nn + i * n + j] = Q::one();
                    rows.push(row);
                }
            }
        }
    }
    let projected: Rows = kernel(rows, width).into_iter().map(|v| v[..nn].to_vec()).collect();
    rref(projected)
}
