//! Finite CW complexes as cell counts plus integer boundary matrices.
//!
//! `boundaries[n - 1]` is the matrix of `∂_n`: one column per `n`-cell, one row
//! per `(n-1)`-cell, so column `b` is the boundary of cell `b`. An edge from
//! vertex `x` to vertex `y` has boundary `x - y`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::intmat::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwComplex {
    name: String,
    cells: Vec<usize>,
    boundaries: Vec<IntMatrix>,
    basepoint: usize,
}

/// One failed condition, located by dimension where that makes sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoVertices,
    BoundaryCount { expected: usize, found: usize },
    Shape {
        dim: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// `∂_{dim-1} ∘ ∂_dim ≠ 0`.
    Chain { dim: usize },
    /// A column of `∂_1` does not sum to zero.
    Augmentation { column: usize, sum: BigInt },
    Basepoint { basepoint: usize, vertices: usize },
    /// Chain-map component of the wrong shape.
    MapShape {
        dim: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    MapCount { expected: usize, found: usize },
    /// `∂'_dim F_dim ≠ F_{dim-1} ∂_dim`.
    MapChain { dim: usize },
    /// A column of `F_0` does not sum to one.
    MapAugmentation { column: usize, sum: BigInt },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoVertices => f.write_str("dimension 0: a complex needs at least one vertex"),
            Violation::BoundaryCount { expected, found } => write!(
                f,
                "expected {} boundary matrices, found {}",
                expected, found
            ),
            Violation::Shape {
                dim,
                expected,
                found,
            } => write!(
                f,
                "dimension {}: shape violation, boundary matrix must be {}x{} but is {}x{}",
                dim, expected.0, expected.1, found.0, found.1
            ),
            Violation::Chain { dim } => write!(
                f,
                "dimension {}: chain violation, B{} * B{} is not zero",
                dim,
                dim - 1,
                dim
            ),
            Violation::Augmentation { column, sum } => write!(
                f,
                "dimension 1: augmentation violation, column {} of B1 sums to {}",
                column, sum
            ),
            Violation::Basepoint {
                basepoint,
                vertices,
            } => write!(
                f,
                "dimension 0: basepoint {} out of range for {} vertices",
                basepoint, vertices
            ),
            Violation::MapShape {
                dim,
                expected,
                found,
            } => write!(
                f,
                "dimension {}: map component must be {}x{} but is {}x{}",
                dim, expected.0, expected.1, found.0, found.1
            ),
            Violation::MapCount { expected, found } => write!(
                f,
                "expected {} map components, found {}",
                expected, found
            ),
            Violation::MapChain { dim } => write!(
                f,
                "dimension {}: chain-map violation, boundaries do not commute with the map",
                dim
            ),
            Violation::MapAugmentation { column, sum } => write!(
                f,
                "dimension 0: column {} of F0 sums to {}, expected 1",
                column, sum
            ),
        }
    }
}

/// Result of [`CwComplex::validate`] or [`crate::maps::ChainMap::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

impl CwComplex {
    /// Builds and validates a complex.
    pub fn new(
        name: impl Into<String>,
        cells: Vec<usize>,
        boundaries: Vec<IntMatrix>,
        basepoint: usize,
    ) -> Result<Self, Error> {
        let x = Self::from_parts(name, cells, boundaries, basepoint);
        let report = x.validate();
        if report.is_ok() {
            Ok(x)
        } else {
            Err(Error::InvalidComplex(report))
        }
    }

    /// Builds a complex without checking anything; see [`validate`](Self::validate).
    pub fn from_parts(
        name: impl Into<String>,
        cells: Vec<usize>,
        boundaries: Vec<IntMatrix>,
        basepoint: usize,
    ) -> Self {
        CwComplex {
            name: name.into(),
            cells,
            boundaries,
            basepoint,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Top dimension `N`; cells exist in dimensions `0..=N`.
    pub fn dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// Number of `n`-cells; zero outside `0..=dim`.
    pub fn cell_count(&self, n: i64) -> usize {
        if n < 0 {
            return 0;
        }
        self.cells.get(n as usize).copied().unwrap_or(0)
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    /// The stored matrices `[B_1, ..., B_N]`.
    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    /// `B_n` for any `n`; outside `1..=dim` this is the zero matrix of the
    /// right (often empty) shape.
    pub fn boundary(&self, n: i64) -> IntMatrix {
        if n >= 1 && (n as usize) <= self.boundaries.len() {
            return self.boundaries[n as usize - 1].clone();
        }
        IntMatrix::zeros(self.cell_count(n - 1), self.cell_count(n))
    }

    /// Same cells, boundaries and basepoint; names are ignored.
    pub fn same_structure(&self, other: &CwComplex) -> bool {
        self.cells == other.cells
            && self.boundaries == other.boundaries
            && self.basepoint == other.basepoint
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.cells.is_empty() || self.cells[0] == 0 {
            violations.push(Violation::NoVertices);
        }
        let n_max = self.dim();
        if self.boundaries.len() != n_max {
            violations.push(Violation::BoundaryCount {
                expected: n_max,
                found: self.boundaries.len(),
            });
            return ValidationReport { violations };
        }
        if let Some(&c0) = self.cells.first() {
            if c0 > 0 && self.basepoint >= c0 {
                violations.push(Violation::Basepoint {
                    basepoint: self.basepoint,
                    vertices: c0,
                });
            }
        }
        let mut shapes_ok = vec![false; n_max + 1];
        for n in 1..=n_max {
            let b = &self.boundaries[n - 1];
            let expected = (self.cells[n - 1], self.cells[n]);
            if b.shape() != expected {
                violations.push(Violation::Shape {
                    dim: n,
                    expected,
                    found: b.shape(),
                });
            } else {
                shapes_ok[n] = true;
            }
        }
        if n_max >= 1 && shapes_ok[1] {
            let b1 = &self.boundaries[0];
            for j in 0..b1.cols() {
                let sum = b1.column_sum(j);
                if !sum.is_zero() {
                    violations.push(Violation::Augmentation { column: j, sum });
                }
            }
        }
        for n in 2..=n_max {
            if shapes_ok[n] && shapes_ok[n - 1] {
                let prod = &self.boundaries[n - 2] * &self.boundaries[n - 1];
                if !prod.is_zero() {
                    violations.push(Violation::Chain { dim: n });
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub(crate) fn require_valid(&self) -> Result<(), Error> {
        let r = self.validate();
        if r.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidComplex(r))
        }
    }

    /// `Σ (-1)^n c_n`.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// The sub-complex of cells of dimension at most `n`.
    pub fn skeleton(&self, n: usize) -> Result<CwComplex, Error> {
        if n > self.dim() {
            return Err(Error::OutOfRange {
                what: "skeleton dimension",
                value: n as i64,
                max: self.dim() as i64,
            });
        }
        if n == self.dim() {
            return Ok(self.clone());
        }
        Ok(CwComplex {
            name: format!("{}_{}", self.name, n),
            cells: self.cells[..=n].to_vec(),
            boundaries: self.boundaries[..n].to_vec(),
            basepoint: self.basepoint,
        })
    }

    /// Collapses the `m`-skeleton to the basepoint: cells become
    /// `[1, 0, ..., 0, c_{m+1}, ..., c_N]`, `B_{m+1}` becomes zero and higher
    /// boundaries are unchanged.
    pub fn quotient_by_skeleton(&self, m: usize) -> Result<CwComplex, Error> {
        if m >= self.dim() {
            return Err(Error::OutOfRange {
                what: "collapsed skeleton dimension",
                value: m as i64,
                max: self.dim() as i64 - 1,
            });
        }
        let mut cells = vec![0usize; self.cells.len()];
        cells[0] = 1;
        cells[m + 1..].copy_from_slice(&self.cells[m + 1..]);
        let mut boundaries = Vec::with_capacity(self.dim());
        for n in 1..=self.dim() {
            if n <= m + 1 {
                boundaries.push(IntMatrix::zeros(cells[n - 1], cells[n]));
            } else {
                boundaries.push(self.boundaries[n - 1].clone());
            }
        }
        Ok(CwComplex {
            name: format!("{}/{}_{}", self.name, self.name, m),
            cells,
            boundaries,
            basepoint: 0,
        })
    }

    /// Reduced suspension: one vertex, every non-basepoint vertex becomes a
    /// loop and every `n`-cell an `(n+1)`-cell.
    pub fn suspension(&self) -> CwComplex {
        let c0 = self.cells[0];
        let mut cells = vec![1, c0 - 1];
        cells.extend_from_slice(&self.cells[1..]);
        let mut boundaries = vec![IntMatrix::zeros(1, c0 - 1)];
        if self.dim() >= 1 {
            boundaries.push(self.boundaries[0].delete_row(self.basepoint));
            boundaries.extend(self.boundaries[1..].iter().cloned());
        }
        CwComplex {
            name: format!("susp({})", self.name),
            cells,
            boundaries,
            basepoint: 0,
        }
    }

    /// Reduced chain complex: the basepoint vertex is dropped, as is its row
    /// of `B_1`. Returned as cell counts and matrices, not as a complex.
    pub(crate) fn reduced_cells(&self, n: i64) -> usize {
        match n {
            0 => self.cells[0] - 1,
            _ => self.cell_count(n),
        }
    }

    pub(crate) fn reduced_boundary(&self, n: i64) -> IntMatrix {
        match n {
            1 => self.boundary(1).delete_row(self.basepoint),
            _ if n <= 0 => IntMatrix::zeros(self.reduced_cells(n - 1), self.reduced_cells(n)),
            _ => self.boundary(n),
        }
    }

    /// Index of each vertex among the non-basepoint vertices.
    pub(crate) fn reduced_vertex_index(&self, v: usize) -> Option<usize> {
        match v.cmp(&self.basepoint) {
            core::cmp::Ordering::Less => Some(v),
            core::cmp::Ordering::Equal => None,
            core::cmp::Ordering::Greater => Some(v - 1),
        }
    }
}

/// One-point union; basepoints are merged into vertex 0 and the remaining cells
/// are concatenated in input order.
pub fn wedge(xs: &[CwComplex]) -> CwComplex {
    if xs.is_empty() {
        return point();
    }
    let dim = xs.iter().map(CwComplex::dim).max().unwrap_or(0);
    let mut cells = vec![1usize; dim + 1];
    cells[0] = 1 + xs.iter().map(|x| x.cells[0] - 1).sum::<usize>();
    for (n, c) in cells.iter_mut().enumerate().skip(1) {
        *c = xs.iter().map(|x| x.cell_count(n as i64)).sum();
    }

    let mut boundaries = Vec::with_capacity(dim);
    for n in 1..=dim {
        let mut b = IntMatrix::zeros(cells[n - 1], cells[n]);
        let (mut row_off, mut col_off) = (if n == 1 { 1 } else { 0 }, 0);
        for x in xs {
            let bx = x.boundary(n as i64);
            for j in 0..bx.cols() {
                for i in 0..bx.rows() {
                    if bx[(i, j)].is_zero() {
                        continue;
                    }
                    let row = if n == 1 {
                        match x.reduced_vertex_index(i) {
                            None => 0,
                            Some(k) => row_off + k,
                        }
                    } else {
                        row_off + i
                    };
                    b[(row, col_off + j)] += &bx[(i, j)];
                }
            }
            row_off += if n == 1 { x.cells[0] - 1 } else { bx.rows() };
            col_off += bx.cols();
        }
        boundaries.push(b);
    }
    let names: Vec<&str> = xs.iter().map(|x| x.name()).collect();
    CwComplex {
        name: format!("wedge({})", names.join(",")),
        cells,
        boundaries,
        basepoint: 0,
    }
}

/// Combinatorial 2-complex input: vertices, oriented edges and faces given by
/// closed edge words.
///
/// A word is a list of signed 1-based edge indices: `+i` traverses edge `i`
/// forwards, `-i` backwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePresentation {
    pub vertices: usize,
    pub basepoint: usize,
    pub edges: Vec<(usize, usize)>,
    pub faces: Vec<Vec<i64>>,
}

impl EdgePresentation {
    /// Checks that every word is a closed loop of existing edges.
    pub fn check(&self) -> Result<(), Error> {
        if self.vertices == 0 {
            return Err(Error::InvalidParameter("a presentation needs at least one vertex"));
        }
        if self.basepoint >= self.vertices {
            return Err(Error::InvalidParameter("basepoint out of range"));
        }
        if self
            .edges
            .iter()
            .any(|&(s, t)| s >= self.vertices || t >= self.vertices)
        {
            return Err(Error::InvalidParameter("edge endpoint out of range"));
        }
        for (f, word) in self.faces.iter().enumerate() {
            if word.is_empty() {
                return Err(Error::MalformedWord {
                    face: f,
                    reason: "empty word",
                });
            }
            let mut ends = Vec::with_capacity(word.len());
            for &letter in word {
                let idx = letter.unsigned_abs() as usize;
                if letter == 0 || idx > self.edges.len() {
                    return Err(Error::MalformedWord {
                        face: f,
                        reason: "edge index out of range",
                    });
                }
                let (s, t) = self.edges[idx - 1];
                ends.push(if letter > 0 { (s, t) } else { (t, s) });
            }
            for k in 0..ends.len() {
                let next = ends[(k + 1) % ends.len()];
                if ends[k].1 != next.0 {
                    return Err(Error::MalformedWord {
                        face: f,
                        reason: if k + 1 == ends.len() {
                            "loop does not close"
                        } else {
                            "consecutive edges do not meet"
                        },
                    });
                }
            }
        }
        Ok(())
    }
}

/// Builds the cellular chain complex of an edge presentation. The coefficient
/// of a face on an edge is the exponent sum of that edge in the face's word.
pub fn from_presentation(name: impl Into<String>, p: &EdgePresentation) -> Result<CwComplex, Error> {
    p.check()?;
    let mut cells = vec![p.vertices];
    let mut boundaries = Vec::new();
    if !p.edges.is_empty() || !p.faces.is_empty() {
        cells.push(p.edges.len());
        let mut b1 = IntMatrix::zeros(p.vertices, p.edges.len());
        for (j, &(s, t)) in p.edges.iter().enumerate() {
            if s != t {
                b1[(s, j)] += 1;
                b1[(t, j)] -= 1;
            }
        }
        boundaries.push(b1);
    }
    if !p.faces.is_empty() {
        cells.push(p.faces.len());
        let mut b2 = IntMatrix::zeros(p.edges.len(), p.faces.len());
        for (f, word) in p.faces.iter().enumerate() {
            for &letter in word {
                let e = letter.unsigned_abs() as usize - 1;
                if letter > 0 {
                    b2[(e, f)] += 1;
                } else {
                    b2[(e, f)] -= 1;
                }
            }
        }
        boundaries.push(b2);
    }
    CwComplex::new(name, cells, boundaries, p.basepoint)
}

fn scalar(v: i64) -> IntMatrix {
    IntMatrix::from_fn(1, 1, |_, _| BigInt::from(v))
}

/// Complex with one cell in each listed dimension (and one vertex), given the
/// `1x1` boundary entries where both neighbouring cells exist.
fn single_cells(name: String, present: &[bool], entry: impl Fn(usize) -> i64) -> CwComplex {
    let cells: Vec<usize> = present.iter().map(|&p| p as usize).collect();
    let boundaries = (1..cells.len())
        .map(|n| {
            if cells[n - 1] == 1 && cells[n] == 1 {
                scalar(entry(n))
            } else {
                IntMatrix::zeros(cells[n - 1], cells[n])
            }
        })
        .collect();
    CwComplex {
        name,
        cells,
        boundaries,
        basepoint: 0,
    }
}

pub fn point() -> CwComplex {
    CwComplex {
        name: "point".to_string(),
        cells: vec![1],
        boundaries: Vec::new(),
        basepoint: 0,
    }
}

/// Minimal model of `S^n`: one vertex and one `n`-cell; `S^0` is two points.
pub fn sphere(n: usize) -> CwComplex {
    if n == 0 {
        return CwComplex {
            name: "sphere(0)".to_string(),
            cells: vec![2],
            boundaries: Vec::new(),
            basepoint: 0,
        };
    }
    let present: Vec<bool> = (0..=n).map(|k| k == 0 || k == n).collect();
    single_cells(format!("sphere({})", n), &present, |_| 0)
}

fn commutator_surface(name: String, genus: usize) -> CwComplex {
    let mut word = Vec::with_capacity(4 * genus);
    for k in 0..genus as i64 {
        let (a, b) = (2 * k + 1, 2 * k + 2);
        word.extend_from_slice(&[a, b, -a, -b]);
    }
    let p = EdgePresentation {
        vertices: 1,
        basepoint: 0,
        edges: vec![(0, 0); 2 * genus],
        faces: vec![word],
    };
    from_presentation(name, &p).expect("commutator words are closed loops")
}

pub fn torus() -> CwComplex {
    commutator_surface("torus".to_string(), 1)
}

pub fn klein() -> CwComplex {
    let p = EdgePresentation {
        vertices: 1,
        basepoint: 0,
        edges: vec![(0, 0), (0, 0)],
        faces: vec![vec![1, 2, 1, -2]],
    };
    from_presentation("klein", &p).expect("klein word is a closed loop")
}

/// Closed orientable surface of genus `g >= 1`.
pub fn surface(genus: usize) -> CwComplex {
    commutator_surface(format!("surface({})", genus), genus)
}

/// `RP^n` with one cell per dimension; `B_k = 1 + (-1)^k`.
pub fn rp(n: usize) -> CwComplex {
    let present = vec![true; n + 1];
    single_cells(format!("rp({})", n), &present, |k| if k % 2 == 0 { 2 } else { 0 })
}

/// `CP^n` with one cell in each even dimension up to `2n`.
pub fn cp(n: usize) -> CwComplex {
    let present: Vec<bool> = (0..=2 * n).map(|k| k % 2 == 0).collect();
    single_cells(format!("cp({})", n), &present, |_| 0)
}

/// Moore space `M(Z/q, n)`: a cell in dimensions `n` and `n + 1` with
/// `B_{n+1} = [q]`.
pub fn moore(q: i64, n: usize) -> CwComplex {
    let present: Vec<bool> = (0..=n + 1).map(|k| k == 0 || k >= n).collect();
    single_cells(format!("moore({},{})", q, n), &present, move |k| {
        if k == n + 1 {
            q
        } else {
            0
        }
    })
}

/// Three-dimensional lens space `L(p, 1)` with one cell per dimension.
pub fn lens(p: i64) -> CwComplex {
    single_cells(format!("lens({})", p), &[true; 4], move |k| if k == 2 { p } else { 0 })
}

/// Names accepted by [`zoo`] together with their parameter names.
pub const ZOO_NAMES: &[(&str, &[&str])] = &[
    ("point", &[]),
    ("sphere", &["n"]),
    ("torus", &[]),
    ("klein", &[]),
    ("rp", &["n"]),
    ("cp", &["n"]),
    ("moore", &["q", "n"]),
    ("surface", &["g"]),
    ("lens", &["p"]),
];

/// Standard complexes by name: `point`, `sphere n`, `torus`, `klein`, `rp n`,
/// `cp n`, `moore q n`, `surface g`, `lens p`.
pub fn zoo(name: &str, params: &[i64]) -> Result<CwComplex, Error> {
    let expected = ZOO_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, p)| p.len())
        .ok_or_else(|| Error::UnknownComplex(name.to_string()))?;
    if params.len() != expected {
        return Err(Error::InvalidParameter("wrong number of parameters"));
    }
    let at_least = |v: i64, lo: i64, msg: &'static str| -> Result<usize, Error> {
        if v < lo {
            Err(Error::InvalidParameter(msg))
        } else {
            Ok(v as usize)
        }
    };
    let x = match name {
        "point" => point(),
        "sphere" => sphere(at_least(params[0], 0, "sphere dimension must be >= 0")?),
        "torus" => torus(),
        "klein" => klein(),
        "rp" => rp(at_least(params[0], 1, "rp dimension must be >= 1")?),
        "cp" => cp(at_least(params[0], 1, "cp dimension must be >= 1")?),
        "moore" => {
            at_least(params[0], 2, "moore order must be >= 2")?;
            moore(params[0], at_least(params[1], 1, "moore dimension must be >= 1")?)
        }
        "surface" => surface(at_least(params[0], 1, "surface genus must be >= 1")?),
        "lens" => {
            at_least(params[0], 2, "lens order must be >= 2")?;
            lens(params[0])
        }
        _ => unreachable!("name checked above"),
    };
    debug_assert!(x.is_valid());
    Ok(x)
}

impl CwComplex {
    /// `B_n` with the entry at `(row, col)` increased by `delta`. Meant for
    /// negative controls; the result is not validated.
    pub fn with_perturbed_entry(&self, n: usize, row: usize, col: usize, delta: i64) -> CwComplex {
        let mut y = self.clone();
        y.boundaries[n - 1][(row, col)] += BigInt::from(delta);
        y.name = format!("{}~", self.name);
        y
    }

    /// `true` iff every boundary matrix is zero.
    pub fn has_zero_boundaries(&self) -> bool {
        self.boundaries.iter().all(IntMatrix::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn torus_data_validates() {
        let x = CwComplex::new("t", vec![1, 2, 1], vec![IntMatrix::zeros(1, 2), IntMatrix::zeros(2, 1)], 0);
        assert!(x.is_ok());
    }

    use num_traits::One;

    #[test]
    fn augmentation_violation() {
        let x = CwComplex::from_parts("bad", vec![2, 1], vec![m(&[&[1], &[0]])], 0);
        let r = x.validate();
        assert_eq!(
            r.violations,
            vec![Violation::Augmentation {
                column: 0,
                sum: BigInt::one()
            }]
        );
    }

    #[test]
    fn chain_violation_names_dimension() {
        let x = CwComplex::from_parts(
            "bad",
            vec![2, 2, 1],
            vec![m(&[&[1, -1], &[-1, 1]]), m(&[&[1], &[0]])],
            0,
        );
        assert_eq!(x.validate().violations, vec![Violation::Chain { dim: 2 }]);
    }

    #[test]
    fn shape_and_basepoint_violations() {
        let x = CwComplex::from_parts("bad", vec![1, 2, 1], vec![IntMatrix::zeros(2, 1), IntMatrix::zeros(2, 1)], 3);
        let v = x.validate().violations;
        assert!(v.contains(&Violation::Basepoint {
            basepoint: 3,
            vertices: 1
        }));
        assert!(v.iter().any(|v| matches!(v, Violation::Shape { dim: 1, .. })));
        let none = CwComplex::from_parts("none", vec![0], vec![], 0);
        assert!(none.validate().violations.contains(&Violation::NoVertices));
    }

    #[test]
    fn presentations() {
        let t = torus();
        assert_eq!(t.cells(), &[1, 2, 1]);
        assert!(t.boundary(2).is_zero());

        let k = klein();
        assert_eq!(k.boundary(2), m(&[&[2], &[0]]));

        let p = EdgePresentation {
            vertices: 2,
            basepoint: 0,
            edges: vec![(0, 1)],
            faces: vec![vec![1, -1]],
        };
        let x = from_presentation("disk-ish", &p).unwrap();
        assert_eq!(x.boundary(1), m(&[&[1], &[-1]]));
        assert_eq!(x.boundary(2), m(&[&[0]]));
    }

    #[test]
    fn malformed_words() {
        let mut p = EdgePresentation {
            vertices: 2,
            basepoint: 0,
            edges: vec![(0, 1)],
            faces: vec![vec![1]],
        };
        assert_eq!(
            from_presentation("x", &p),
            Err(Error::MalformedWord {
                face: 0,
                reason: "loop does not close"
            })
        );
        p.faces = vec![vec![2]];
        assert!(matches!(from_presentation("x", &p), Err(Error::MalformedWord { .. })));
        p.faces = vec![vec![0]];
        assert!(matches!(from_presentation("x", &p), Err(Error::MalformedWord { .. })));
        p.faces = vec![vec![1, 1, -1, -1]];
        assert!(matches!(from_presentation("x", &p), Err(Error::MalformedWord { .. })));
    }

    #[test]
    fn presentation_dimensions() {
        let p = EdgePresentation {
            vertices: 3,
            basepoint: 1,
            edges: vec![],
            faces: vec![],
        };
        let x = from_presentation("pts", &p).unwrap();
        assert_eq!((x.dim(), x.cells(), x.basepoint()), (0, &[3usize][..], 1));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(torus().euler_characteristic(), 0);
        assert_eq!(sphere(2).euler_characteristic(), 2);
        assert_eq!(rp(2).euler_characteristic(), 1);
    }

    #[test]
    fn skeleton_examples() {
        let s = rp(3).skeleton(1).unwrap();
        assert_eq!(s.cells(), &[1, 1]);
        assert_eq!(s.boundary(1), m(&[&[0]]));
        assert_eq!(rp(3).skeleton(3).unwrap(), rp(3));
        assert_eq!(torus().skeleton(0).unwrap().cells(), &[1]);
        assert!(torus().skeleton(3).is_err());
    }

    #[test]
    fn quotient_examples() {
        let q = rp(3).skeleton(2).unwrap().quotient_by_skeleton(1).unwrap();
        assert_eq!(q.cells(), &[1, 0, 1]);
        assert!(q.has_zero_boundaries());

        let q = torus().quotient_by_skeleton(0).unwrap();
        assert_eq!(q.cells(), &[1, 2, 1]);
        assert!(q.boundary(1).is_zero());

        let q = rp(3).quotient_by_skeleton(1).unwrap();
        assert_eq!(q.cells(), &[1, 0, 1, 1]);
        assert_eq!(q.boundary(2), IntMatrix::zeros(0, 1));
        assert_eq!(q.boundary(3), m(&[&[0]]));
        assert!(q.is_valid());

        assert!(torus().quotient_by_skeleton(2).is_err());
    }

    #[test]
    fn suspension_examples() {
        assert_eq!(point().suspension().cells(), &[1, 0]);
        let s1 = sphere(0).suspension();
        assert!(s1.same_structure(&sphere(1)));
        let st = torus().suspension();
        assert_eq!(st.cells(), &[1, 0, 2, 1]);
        assert_eq!(st.boundary(2).shape(), (0, 2));
        assert_eq!(st.boundary(3), m(&[&[0], &[0]]));
        assert!(st.is_valid());
    }

    #[test]
    fn wedge_examples() {
        let w = wedge(&[sphere(1), sphere(1)]);
        assert_eq!(w.cells(), &[1, 2]);
        assert_eq!(w.boundary(1), m(&[&[0, 0]]));
        assert!(wedge(&[klein(), point()]).same_structure(&klein()));
        let w = wedge(&[sphere(1), sphere(2)]);
        assert_eq!(w.cells(), &[1, 1, 1]);
        assert!(w.has_zero_boundaries());
        assert!(w.is_valid());
    }

    #[test]
    fn wedge_folds_basepoint_rows() {
        // an interval based at its second vertex, wedged with S^0 based at 0
        let interval = CwComplex::new("I", vec![2, 1], vec![m(&[&[1], &[-1]])], 1).unwrap();
        let w = wedge(&[interval, sphere(0)]);
        assert_eq!(w.cells(), &[3, 1]);
        assert_eq!(w.boundary(1), m(&[&[-1], &[1], &[0]]));
        assert!(w.is_valid());
    }

    #[test]
    fn zoo_examples() {
        let x = zoo("rp", &[2]).unwrap();
        assert_eq!(x.cells(), &[1, 1, 1]);
        assert_eq!(x.boundary(1), m(&[&[0]]));
        assert_eq!(x.boundary(2), m(&[&[2]]));

        let x = zoo("moore", &[3, 2]).unwrap();
        assert_eq!(x.cells(), &[1, 0, 1, 1]);
        assert_eq!(x.boundary(3), m(&[&[3]]));

        let x = zoo("surface", &[2]).unwrap();
        assert_eq!(x.boundary(2), IntMatrix::zeros(4, 1));

        assert_eq!(zoo("cp", &[2]).unwrap().cells(), &[1, 0, 1, 0, 1]);
        assert_eq!(zoo("lens", &[5]).unwrap().boundary(2), m(&[&[5]]));
        assert_eq!(zoo("sphere", &[0]).unwrap().cells(), &[2]);
        assert_eq!(zoo("sphere", &[3]).unwrap().cells(), &[1, 0, 0, 1]);

        assert!(matches!(zoo("mobius", &[]), Err(Error::UnknownComplex(_))));
        assert!(zoo("moore", &[1, 2]).is_err());
        assert!(zoo("rp", &[]).is_err());
        assert!(zoo("rp", &[0]).is_err());
    }
}
