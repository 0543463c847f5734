//! Derivation-type spaces as kernels of linear constraint systems.
//!
//! Every space is solved per homogeneous degree over the *admissible*
//! matrix coordinates of that degree: entries `(i, j)` with
//! `|bᵢ| = |bⱼ| + degree`. Column `j` of a map's matrix is the image of `bⱼ`.
//! Spaces with existential witnesses (GDer, QDer) are solved jointly in the
//! stacked unknowns `(d, d′[, d″])` and projected onto the `d` block.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::GaussianRational;
use crate::superalgebra::{OmegaSuperAlgebra, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Der,
    GDer,
    QDer,
    Cent,
    QCent,
    ZDer,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 6] = [
        SpaceKind::Der,
        SpaceKind::GDer,
        SpaceKind::QDer,
        SpaceKind::Cent,
        SpaceKind::QCent,
        SpaceKind::ZDer,
    ];

    /// Number of stacked unknown maps: `d` plus its witnesses.
    pub fn blocks(self) -> usize {
        match self {
            SpaceKind::GDer => 3,
            SpaceKind::QDer => 2,
            _ => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SpaceKind::Der => "Der",
            SpaceKind::GDer => "GDer",
            SpaceKind::QDer => "QDer",
            SpaceKind::Cent => "Cent",
            SpaceKind::QCent => "QCent",
            SpaceKind::ZDer => "ZDer",
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A homogeneous linear endomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GradedMap {
    degree: Parity,
    matrix: Matrix,
}

impl GradedMap {
    /// Fails with [`Error::NotHomogeneous`] if `matrix` has an entry outside
    /// the admissible pattern of `degree`.
    pub fn new(alg: &OmegaSuperAlgebra, degree: Parity, matrix: Matrix) -> Result<Self> {
        Self::with_parities(alg.parities(), degree, matrix)
    }

    pub fn with_parities(parities: &[Parity], degree: Parity, matrix: Matrix) -> Result<Self> {
        let n = parities.len();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::AmbientMismatch {
                left: n,
                right: matrix.rows().max(matrix.cols()),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if parities[i] != parities[j] + degree && !matrix[(i, j)].is_zero() {
                    return Err(Error::NotHomogeneous);
                }
            }
        }
        Ok(Self { degree, matrix })
    }

    pub fn zero(n: usize, degree: Parity) -> Self {
        Self {
            degree,
            matrix: Matrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            degree: Parity::Even,
            matrix: Matrix::identity(n),
        }
    }

    pub fn degree(&self) -> Parity {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        self.matrix.apply(v)
    }

    /// Image of the basis vector `bⱼ`.
    pub fn image(&self, j: usize) -> Vec<GaussianRational> {
        self.matrix.column(j)
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Self {
            degree: self.degree,
            matrix: self.matrix.scale(s),
        }
    }

    /// Sum of two maps of the same degree.
    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding maps of different degree");
        Self {
            degree: self.degree,
            matrix: &self.matrix + &other.matrix,
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "subtracting maps of different degree");
        Self {
            degree: self.degree,
            matrix: &self.matrix - &other.matrix,
        }
    }
}

/// `[d, e] = d·e − (−1)^{|d||e|} e·d`.
pub fn super_commutator(d: &GradedMap, e: &GradedMap) -> GradedMap {
    let de = &d.matrix * &e.matrix;
    let ed = (&e.matrix * &d.matrix).scale(&d.degree.sign(e.degree));
    GradedMap {
        degree: d.degree + e.degree,
        matrix: &de - &ed,
    }
}

/// Admissible matrix coordinates of one degree, in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapCoords {
    n: usize,
    degree: Parity,
    entries: Vec<(usize, usize)>,
}

impl MapCoords {
    pub fn new(parities: &[Parity], degree: Parity) -> Self {
        let n = parities.len();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| parities[i] == parities[j] + degree)
            .collect();
        Self { n, degree, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn degree(&self) -> Parity {
        self.degree
    }

    pub fn to_map(&self, values: &[GaussianRational]) -> GradedMap {
        assert_eq!(values.len(), self.len());
        let mut matrix = Matrix::zeros(self.n, self.n);
        for (&(i, j), v) in self.entries.iter().zip(values) {
            matrix[(i, j)] = v.clone();
        }
        GradedMap {
            degree: self.degree,
            matrix,
        }
    }

    pub fn from_map(&self, d: &GradedMap) -> Vec<GaussianRational> {
        self.entries.iter().map(|&(i, j)| d.matrix[(i, j)].clone()).collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Intersect with the maps compatible with ω.
    pub compatible: bool,
    /// Also require the witnesses `d′`, `d″` to be compatible. This goes
    /// beyond the usual definition, which constrains `d` only.
    pub strict_witnesses: bool,
}

impl SolveOptions {
    pub fn plain() -> Self {
        Self::default()
    }

    pub fn compatible() -> Self {
        Self {
            compatible: true,
            strict_witnesses: false,
        }
    }
}

/// One derivation-type space of a single degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapSpace {
    pub kind: SpaceKind,
    pub degree: Parity,
    pub compatible: bool,
    pub strict_witnesses: bool,
    pub coords: MapCoords,
    /// Canonical basis over the admissible coordinates.
    pub basis: Subspace,
    /// Joint solution space over stacked `(d, d′[, d″])` coordinates, for
    /// GDer and QDer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub joint_basis: Option<Subspace>,
}

impl MapSpace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn options(&self) -> SolveOptions {
        SolveOptions {
            compatible: self.compatible,
            strict_witnesses: self.strict_witnesses,
        }
    }

    pub fn elements(&self) -> Vec<GradedMap> {
        self.basis.basis().iter().map(|v| self.coords.to_map(v)).collect()
    }

    /// Linear combination of the basis elements.
    pub fn combination(&self, coeffs: &[GaussianRational]) -> GradedMap {
        assert_eq!(coeffs.len(), self.dim());
        let mut values = vec![GaussianRational::zero(); self.coords.len()];
        for (c, row) in coeffs.iter().zip(self.basis.basis()) {
            for (v, x) in values.iter_mut().zip(row) {
                *v += &(c * x);
            }
        }
        self.coords.to_map(&values)
    }

    pub fn contains(&self, d: &GradedMap) -> bool {
        if d.degree != self.degree {
            return d.is_zero();
        }
        self.basis
            .contains(&self.coords.from_map(d))
            .expect("coordinates match the space")
    }
}

#[derive(Clone, Copy)]
enum Term {
    /// `D_b([x, y])`
    OfBracket(usize),
    /// `[D_b(x), y]`
    Left(usize),
    /// `[x, D_b(y)]`
    Right(usize),
}

/// Coefficient `sign`, times `(−1)^{|d||x|}` when `koszul` is set.
#[derive(Clone, Copy)]
struct Coef {
    sign: i64,
    koszul: bool,
}

const PLUS: Coef = Coef { sign: 1, koszul: false };
const MINUS: Coef = Coef {
    sign: -1,
    koszul: false,
};
const MINUS_K: Coef = Coef { sign: -1, koszul: true };

/// Each identity is a sum of terms that must vanish for all basis pairs.
fn identities(kind: SpaceKind) -> Vec<Vec<(Term, Coef)>> {
    use Term::*;
    match kind {
        // d([x,y]) = [d x, y] + ε[x, d y]
        SpaceKind::Der => vec![vec![(OfBracket(0), PLUS), (Left(0), MINUS), (Right(0), MINUS_K)]],
        // d″([x,y]) = [d x, y] + ε[x, d′ y]
        SpaceKind::GDer => vec![vec![(OfBracket(2), PLUS), (Left(0), MINUS), (Right(1), MINUS_K)]],
        // d′([x,y]) = [d x, y] + ε[x, d y]
        SpaceKind::QDer => vec![vec![(OfBracket(1), PLUS), (Left(0), MINUS), (Right(0), MINUS_K)]],
        // [d x, y] = ε[x, d y] = d([x,y])
        SpaceKind::Cent => vec![
            vec![(Left(0), PLUS), (Right(0), MINUS_K)],
            vec![(OfBracket(0), PLUS), (Left(0), MINUS)],
        ],
        // [d x, y] = ε[x, d y]
        SpaceKind::QCent => vec![vec![(Left(0), PLUS), (Right(0), MINUS_K)]],
        // [d x, y] = d([x,y]) = 0
        SpaceKind::ZDer => vec![vec![(Left(0), PLUS)], vec![(OfBracket(0), PLUS)]],
    }
}

/// Coefficient matrix of the stacked system for `kind`; columns are
/// `blocks × coords.len()` unknowns.
fn assemble(alg: &OmegaSuperAlgebra, kind: SpaceKind, coords: &MapCoords, opts: SolveOptions) -> Matrix {
    let n = alg.dim();
    let m = coords.len();
    let blocks = kind.blocks();
    let width = blocks * m;
    let mut rows: Vec<Vec<GaussianRational>> = Vec::new();

    for identity in identities(kind) {
        for x in 0..n {
            let eps = coords.degree.sign(alg.parity(x));
            for y in 0..n {
                let bracket_xy = alg.bracket_basis(x, y);
                let mut eqs = vec![vec![GaussianRational::zero(); width]; n];
                for &(term, coef) in &identity {
                    let mut c = GaussianRational::from_integer(coef.sign);
                    if coef.koszul {
                        c = &c * &eps;
                    }
                    for (t, &(i, j)) in coords.entries.iter().enumerate() {
                        let contribute =
                            |eqs: &mut Vec<Vec<GaussianRational>>, b: usize, k: usize, v: &GaussianRational| {
                                if !v.is_zero() {
                                    eqs[k][b * m + t] += &(&c * v);
                                }
                            };
                        match term {
                            // E_ij([x,y]) = c[x][y][j]·bᵢ
                            Term::OfBracket(b) => contribute(&mut eqs, b, i, &bracket_xy[j]),
                            // [E_ij(bₓ), b_y] = δ_jx [bᵢ, b_y]
                            Term::Left(b) if j == x => {
                                for (k, v) in alg.bracket_basis(i, y).iter().enumerate() {
                                    contribute(&mut eqs, b, k, v);
                                }
                            }
                            // [bₓ, E_ij(b_y)] = δ_jy [bₓ, bᵢ]
                            Term::Right(b) if j == y => {
                                for (k, v) in alg.bracket_basis(x, i).iter().enumerate() {
                                    contribute(&mut eqs, b, k, v);
                                }
                            }
                            _ => {}
                        }
                    }
                }
                rows.extend(eqs.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
            }
        }
    }

    if opts.compatible {
        let constrained = if opts.strict_witnesses { blocks } else { 1 };
        let compat = compatibility_rows(alg, coords);
        for b in 0..constrained {
            for row in &compat {
                let mut full = vec![GaussianRational::zero(); width];
                full[b * m..(b + 1) * m].clone_from_slice(row);
                rows.push(full);
            }
        }
    }

    if rows.is_empty() {
        return Matrix::zeros(0, width);
    }
    Matrix::from_rows(rows)
}

/// Rows of `ω(d bₓ, b_y) + (−1)^{|d||x|} ω(bₓ, d b_y) = 0` over all pairs.
fn compatibility_rows(alg: &OmegaSuperAlgebra, coords: &MapCoords) -> Vec<Vec<GaussianRational>> {
    let n = alg.dim();
    let omega = alg.omega();
    let mut rows = Vec::new();
    for x in 0..n {
        let eps = coords.degree.sign(alg.parity(x));
        for y in 0..n {
            let row: Vec<GaussianRational> = coords
                .entries
                .iter()
                .map(|&(i, j)| {
                    // E_ij bₓ = δ_jx bᵢ, E_ij b_y = δ_jy bᵢ
                    let mut c = GaussianRational::zero();
                    if j == x {
                        c += &omega[(i, y)];
                    }
                    if j == y {
                        c += &(&eps * &omega[(x, i)]);
                    }
                    c
                })
                .collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

/// Maps of the given degree compatible with ω, over the admissible coordinates.
pub fn compatibility_space(alg: &OmegaSuperAlgebra, degree: Parity) -> Subspace {
    let coords = MapCoords::new(alg.parities(), degree);
    let rows = compatibility_rows(alg, &coords);
    if rows.is_empty() {
        return Subspace::full(coords.len());
    }
    Subspace::kernel(&Matrix::from_rows(rows))
}

/// Solves one derivation-type space.
///
/// With `opts.compatible`, the compatibility equations are imposed on the `d`
/// block of the joint system, which projects to the intersection of the plain
/// space with [`compatibility_space`].
pub fn solve_space(alg: &OmegaSuperAlgebra, kind: SpaceKind, degree: Parity, opts: SolveOptions) -> MapSpace {
    let coords = MapCoords::new(alg.parities(), degree);
    let m = coords.len();
    let system = assemble(alg, kind, &coords, opts);
    let joint = Subspace::kernel(&system);
    let (basis, joint_basis) = if kind.blocks() > 1 {
        let d_block: Vec<usize> = (0..m).collect();
        (joint.project(&d_block).expect("d block is in range"), Some(joint))
    } else {
        (joint, None)
    };
    MapSpace {
        kind,
        degree,
        compatible: opts.compatible,
        strict_witnesses: opts.strict_witnesses && opts.compatible,
        coords,
        basis,
        joint_basis,
    }
}

/// Witness maps `(d′, d″)` for `d` in a GDer or QDer space.
///
/// The canonical witness sets every free unknown to zero. For QDer the pair
/// is `(d, d′)`: a quasiderivation is a generalized derivation whose first
/// witness is `d` itself.
pub fn gder_witness(alg: &OmegaSuperAlgebra, space: &MapSpace, d: &GradedMap) -> Result<(GradedMap, GradedMap)> {
    witness_with_free(alg, space, d, None)
}

/// Like [`gder_witness`] but with free unknown number `shift` set to one.
/// Returns `Ok(None)` when the witness is unique.
pub fn shifted_witness(
    alg: &OmegaSuperAlgebra,
    space: &MapSpace,
    d: &GradedMap,
    shift: usize,
) -> Result<Option<(GradedMap, GradedMap)>> {
    match witness_with_free(alg, space, d, Some(shift)) {
        Ok(w) => Ok(Some(w)),
        Err(Error::NoWitness(_)) if space.kind.blocks() > 1 => Ok(None),
        Err(e) => Err(e),
    }
}

fn witness_with_free(
    alg: &OmegaSuperAlgebra,
    space: &MapSpace,
    d: &GradedMap,
    shift: Option<usize>,
) -> Result<(GradedMap, GradedMap)> {
    if space.kind.blocks() == 1 {
        return Err(Error::NoWitness(space.kind.to_string()));
    }
    if !space.contains(d) || d.degree != space.degree {
        return Err(Error::NotMember(space.kind.to_string()));
    }
    let coords = &space.coords;
    let m = coords.len();
    let system = assemble(alg, space.kind, coords, space.options());
    let w = system.cols() - m;
    let d_vals = coords.from_map(d);
    // [A_w | −A_d·d]
    let aug = Matrix::from_fn(system.rows(), w + 1, |r, c| {
        if c < w {
            system[(r, m + c)].clone()
        } else {
            -(0..m).map(|k| &system[(r, k)] * &d_vals[k]).sum::<GaussianRational>()
        }
    });
    let (rref, pivots) = aug.rref();
    if pivots.last() == Some(&w) {
        return Err(Error::NotMember(space.kind.to_string()));
    }
    let free: Vec<usize> = (0..w).filter(|c| !pivots.contains(c)).collect();
    let mut sol = vec![GaussianRational::zero(); w];
    if let Some(s) = shift {
        let &col = free.get(s).ok_or_else(|| Error::NoWitness(space.kind.to_string()))?;
        sol[col] = GaussianRational::one();
    }
    for (r, &p) in pivots.iter().enumerate() {
        let mut v = rref[(r, w)].clone();
        for &f in &free {
            if !sol[f].is_zero() {
                v -= &(&rref[(r, f)] * &sol[f]);
            }
        }
        sol[p] = v;
    }
    let block = |b: usize| coords.to_map(&sol[b * m..(b + 1) * m]);
    Ok(match space.kind {
        SpaceKind::GDer => (block(0), block(1)),
        _ => (d.clone(), block(0)),
    })
}

/// Both homogeneous components of one kind of space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedMapSpace {
    pub even: MapSpace,
    pub odd: MapSpace,
}

impl GradedMapSpace {
    pub fn solve(alg: &OmegaSuperAlgebra, kind: SpaceKind, opts: SolveOptions) -> Self {
        Self {
            even: solve_space(alg, kind, Parity::Even, opts),
            odd: solve_space(alg, kind, Parity::Odd, opts),
        }
    }

    pub fn part(&self, p: Parity) -> &MapSpace {
        match p {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    pub fn dim(&self) -> usize {
        self.even.dim() + self.odd.dim()
    }

    /// Basis elements of both degrees.
    pub fn elements(&self) -> Vec<GradedMap> {
        let mut v = self.even.elements();
        v.extend(self.odd.elements());
        v
    }

    pub fn contains(&self, d: &GradedMap) -> bool {
        self.part(d.degree).contains(d)
    }

    pub fn span(&self) -> MapSpan {
        MapSpan::from(self)
    }
}

/// A graded subspace of homogeneous maps, one canonical subspace per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapSpan {
    pub even: Subspace,
    pub odd: Subspace,
    #[serde(skip)]
    coords: [MapCoords; 2],
}

impl MapSpan {
    pub fn zero(parities: &[Parity]) -> Self {
        let coords = [
            MapCoords::new(parities, Parity::Even),
            MapCoords::new(parities, Parity::Odd),
        ];
        Self {
            even: Subspace::zero(coords[0].len()),
            odd: Subspace::zero(coords[1].len()),
            coords,
        }
    }

    /// All homogeneous maps.
    pub fn full(parities: &[Parity]) -> Self {
        let mut s = Self::zero(parities);
        s.even = Subspace::full(s.coords[0].len());
        s.odd = Subspace::full(s.coords[1].len());
        s
    }

    pub fn from_maps<'a>(parities: &[Parity], maps: impl IntoIterator<Item = &'a GradedMap>) -> Self {
        let mut s = Self::zero(parities);
        let mut rows: [Vec<Vec<GaussianRational>>; 2] = [Vec::new(), Vec::new()];
        for d in maps {
            let b = d.degree.bit() as usize;
            rows[b].push(s.coords[b].from_map(d));
        }
        let [even_rows, odd_rows] = rows;
        s.even = Subspace::span(s.coords[0].len(), even_rows).expect("admissible coordinates");
        s.odd = Subspace::span(s.coords[1].len(), odd_rows).expect("admissible coordinates");
        s
    }

    pub fn part(&self, p: Parity) -> &Subspace {
        match p {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    pub fn coords(&self, p: Parity) -> &MapCoords {
        &self.coords[p.bit() as usize]
    }

    pub fn dim(&self) -> usize {
        self.even.dim() + self.odd.dim()
    }

    pub fn elements(&self) -> Vec<GradedMap> {
        Parity::BOTH
            .iter()
            .flat_map(|&p| {
                let c = self.coords(p);
                self.part(p).basis().iter().map(|v| c.to_map(v)).collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn contains(&self, d: &GradedMap) -> bool {
        self.part(d.degree)
            .contains(&self.coords(d.degree).from_map(d))
            .expect("admissible coordinates")
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        Parity::BOTH.iter().all(|&p| {
            self.part(p)
                .is_subspace_of(other.part(p))
                .expect("same ambient algebra")
        })
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.combine(other, Subspace::sum)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.combine(other, Subspace::intersect)
    }

    fn combine(&self, other: &Self, f: impl Fn(&Subspace, &Subspace) -> Result<Subspace>) -> Self {
        Self {
            even: f(&self.even, &other.even).expect("same ambient algebra"),
            odd: f(&self.odd, &other.odd).expect("same ambient algebra"),
            coords: self.coords.clone(),
        }
    }
}

impl From<&GradedMapSpace> for MapSpan {
    fn from(s: &GradedMapSpace) -> Self {
        Self {
            even: s.even.basis.clone(),
            odd: s.odd.basis.clone(),
            coords: [s.even.coords.clone(), s.odd.coords.clone()],
        }
    }
}

/// Direct evaluation of the defining identities of `kind` on all basis
/// pairs. `maps` is `[d]`, `[d, d′]` (QDer) or `[d, d′, d″]` (GDer).
pub fn satisfies_identity(alg: &OmegaSuperAlgebra, kind: SpaceKind, maps: &[GradedMap]) -> bool {
    assert_eq!(maps.len(), kind.blocks());
    let n = alg.dim();
    let degree = maps[0].degree;
    for x in 0..n {
        let eps = degree.sign(alg.parity(x));
        for y in 0..n {
            let bxy = alg.bracket_basis(x, y).to_vec();
            let ex = alg.unit(x);
            let ey = alg.unit(y);
            for identity in identities(kind) {
                let mut total = vec![GaussianRational::zero(); n];
                for (term, coef) in identity {
                    let v = match term {
                        Term::OfBracket(b) => maps[b].apply(&bxy),
                        Term::Left(b) => alg.bracket(&maps[b].apply(&ex), &ey),
                        Term::Right(b) => alg.bracket(&ex, &maps[b].apply(&ey)),
                    };
                    let mut c = GaussianRational::from_integer(coef.sign);
                    if coef.koszul {
                        c = &c * &eps;
                    }
                    for (t, x) in total.iter_mut().zip(&v) {
                        *t += &(&c * x);
                    }
                }
                if total.iter().any(|c| !c.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Direct evaluation of `ω(d x, y) + (−1)^{|d||x|} ω(x, d y) = 0` on basis pairs.
pub fn is_compatible(alg: &OmegaSuperAlgebra, d: &GradedMap) -> bool {
    let n = alg.dim();
    (0..n).all(|x| {
        let eps = d.degree.sign(alg.parity(x));
        let ex = alg.unit(x);
        let dx = d.apply(&ex);
        (0..n).all(|y| {
            let ey = alg.unit(y);
            let lhs = alg.omega_eval(&dx, &ey) + &eps * alg.omega_eval(&ex, &d.apply(&ey));
            lhs.is_zero()
        })
    })
}
