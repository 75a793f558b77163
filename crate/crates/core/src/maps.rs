//! Cellular chain maps, sphere degrees, algebraic mapping cones and the
//! homomorphisms they induce.
//!
//! A chain map `F : X -> Y` is one integer matrix per dimension, `F_n` having a
//! row per `n`-cell of `Y` and a column per `n`-cell of `X`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abgroups::{self, AbHom, FgAbGroup};
use crate::complex::{self, CwComplex, ValidationReport, Violation};
use crate::error::Error;
use crate::homology::{self, chain_rank, GroupWithPresentation, Variant};
use crate::intmat::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: CwComplex,
    target: CwComplex,
    maps: Vec<IntMatrix>,
}

impl ChainMap {
    /// Builds and validates a chain map. `maps` may be shorter than
    /// `max(dim X, dim Y) + 1`; missing components are zero.
    pub fn new(source: CwComplex, target: CwComplex, mut maps: Vec<IntMatrix>) -> Result<Self, Error> {
        let top = source.dim().max(target.dim());
        for n in maps.len()..=top {
            maps.push(IntMatrix::zeros(target.cell_count(n as i64), source.cell_count(n as i64)));
        }
        let f = ChainMap {
            source,
            target,
            maps,
        };
        let report = f.validate();
        if report.is_ok() {
            Ok(f)
        } else {
            Err(Error::InvalidMap(report))
        }
    }

    /// No checks at all; see [`validate`](Self::validate).
    pub fn from_parts(source: CwComplex, target: CwComplex, maps: Vec<IntMatrix>) -> Self {
        ChainMap {
            source,
            target,
            maps,
        }
    }

    pub fn source(&self) -> &CwComplex {
        &self.source
    }

    pub fn target(&self) -> &CwComplex {
        &self.target
    }

    pub fn maps(&self) -> &[IntMatrix] {
        &self.maps
    }

    /// `F_n`, zero outside the stored range.
    pub fn component(&self, n: i64) -> IntMatrix {
        if n >= 0 && (n as usize) < self.maps.len() {
            return self.maps[n as usize].clone();
        }
        IntMatrix::zeros(self.target.cell_count(n), self.source.cell_count(n))
    }

    /// Component of the map on the (possibly augmented) chain complexes.
    fn chain_component(&self, n: i64, reduced: bool) -> IntMatrix {
        if reduced && n == -1 {
            IntMatrix::identity(1)
        } else {
            self.component(n)
        }
    }

    pub fn same_structure(&self, other: &ChainMap) -> bool {
        self.source.same_structure(&other.source)
            && self.target.same_structure(&other.target)
            && self.maps == other.maps
    }

    /// Shape, chain condition `B'_n F_n = F_{n-1} B_n`, and augmentation
    /// (every column of `F_0` sums to 1).
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let top = self.source.dim().max(self.target.dim());
        if self.maps.len() != top + 1 {
            violations.push(Violation::MapCount {
                expected: top + 1,
                found: self.maps.len(),
            });
            return ValidationReport { violations };
        }
        let mut shapes_ok = vec![true; top + 1];
        for (n, f) in self.maps.iter().enumerate() {
            let expected = (self.target.cell_count(n as i64), self.source.cell_count(n as i64));
            if f.shape() != expected {
                violations.push(Violation::MapShape {
                    dim: n,
                    expected,
                    found: f.shape(),
                });
                shapes_ok[n] = false;
            }
        }
        if shapes_ok[0] {
            for j in 0..self.maps[0].cols() {
                let sum = self.maps[0].column_sum(j);
                if !sum.is_one() {
                    violations.push(Violation::MapAugmentation { column: j, sum });
                }
            }
        }
        for n in 1..=top {
            if !(shapes_ok[n] && shapes_ok[n - 1]) {
                continue;
            }
            let bt = self.target.boundary(n as i64);
            let bs = self.source.boundary(n as i64);
            if bt.shape().0 != self.maps[n - 1].rows() || bs.shape().1 != self.maps[n].cols() {
                continue;
            }
            if &bt * &self.maps[n] != &self.maps[n - 1] * &bs {
                violations.push(Violation::MapChain { dim: n });
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn require_valid(&self) -> Result<(), Error> {
        self.source.require_valid()?;
        self.target.require_valid()?;
        let r = self.validate();
        if r.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidMap(r))
        }
    }

    /// The source basepoint goes to the target basepoint.
    pub fn is_pointed(&self) -> bool {
        let f0 = &self.maps[0];
        (0..f0.rows()).all(|i| {
            let e = &f0[(i, self.source.basepoint())];
            if i == self.target.basepoint() {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }
}

pub fn identity_map(x: &CwComplex) -> ChainMap {
    let maps = x.cells().iter().map(|&c| IntMatrix::identity(c)).collect();
    ChainMap::from_parts(x.clone(), x.clone(), maps)
}

/// `g ∘ f`.
pub fn compose(g: &ChainMap, f: &ChainMap) -> Result<ChainMap, Error> {
    if !f.target.same_structure(&g.source) {
        return Err(Error::ShapeMismatch {
            context: "compose: f.target must equal g.source",
            expected: (f.target.dim(), f.target.cell_count(0)),
            found: (g.source.dim(), g.source.cell_count(0)),
        });
    }
    let top = f.source.dim().max(g.target.dim());
    let maps = (0..=top as i64)
        .map(|n| &g.component(n) * &f.component(n))
        .collect();
    Ok(ChainMap::from_parts(f.source.clone(), g.target.clone(), maps))
}

/// Map sending every vertex of `source` to vertex `vertex` of `target` and every
/// higher cell to zero.
pub fn constant_map(source: &CwComplex, target: &CwComplex, vertex: usize) -> Result<ChainMap, Error> {
    if vertex >= target.cell_count(0) {
        return Err(Error::OutOfRange {
            what: "vertex",
            value: vertex as i64,
            max: target.cell_count(0) as i64 - 1,
        });
    }
    let mut f0 = IntMatrix::zeros(target.cell_count(0), source.cell_count(0));
    for j in 0..f0.cols() {
        f0[(vertex, j)] = BigInt::one();
    }
    ChainMap::new(source.clone(), target.clone(), vec![f0])
}

/// The degree-`d` self-map of the minimal `S^n`. For `n = 0`, `d = 1` is the
/// identity, `d = -1` swaps the two points and `d = 0` is the constant map to
/// the basepoint.
pub fn sphere_self_map(n: usize, d: i64) -> Result<ChainMap, Error> {
    let s = complex::sphere(n);
    if n == 0 {
        let f0 = match d {
            1 => IntMatrix::identity(2),
            -1 => IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
            0 => IntMatrix::from_i64_rows(&[&[1, 1], &[0, 0]]),
            _ => return Err(Error::InvalidParameter("self-maps of S^0 have degree -1, 0 or 1")),
        };
        return ChainMap::new(s.clone(), s, vec![f0]);
    }
    let maps = (0..=n)
        .map(|k| {
            let c = s.cell_count(k as i64);
            if k == n {
                IntMatrix::from_fn(1, 1, |_, _| BigInt::from(d))
            } else if k == 0 {
                IntMatrix::identity(1)
            } else {
                IntMatrix::zeros(c, c)
            }
        })
        .collect();
    ChainMap::new(s.clone(), s, maps)
}

/// The four self-maps of `S^0`: identity, swap, and the constants at each point.
pub fn s0_self_maps() -> [ChainMap; 4] {
    let s = complex::sphere(0);
    [
        identity_map(&s),
        sphere_self_map(0, -1).expect("swap"),
        constant_map(&s, &s, 0).expect("constant"),
        constant_map(&s, &s, 1).expect("constant"),
    ]
}

/// Degree of a self-map of a sphere model: the integer by which it acts on the
/// single nontrivial reduced integral homology group. Any CW model of the
/// sphere works, not just the minimal one.
pub fn degree(f: &ChainMap) -> Result<BigInt, Error> {
    f.require_valid()?;
    if !f.source.same_structure(&f.target) {
        return Err(Error::NotAnEndomorphism);
    }
    let z = FgAbGroup::free(1);
    let mut sphere_dim = None;
    for n in 0..=f.source.dim() as i64 {
        let h = homology::homology(&f.source, n, &z, true)?.into_group();
        if h.is_trivial() {
            continue;
        }
        if h != z || sphere_dim.is_some() {
            return Err(Error::NotASphereModel);
        }
        sphere_dim = Some(n);
    }
    let n = sphere_dim.ok_or(Error::NotASphereModel)?;
    let h = induced_map(f, n, &z, Variant::Homology, true)?;
    Ok(h.matrix()[(0, 0)].clone())
}

/// `F_0` transported to the reduced 0-chains (vertices other than the
/// basepoint): the column of vertex `i` is `F_0 e_i - F_0 e_b` without the
/// target basepoint row.
fn reduced_vertex_map(f: &ChainMap) -> IntMatrix {
    let f0 = f.component(0);
    let b = f.source.basepoint();
    let bt = f.target.basepoint();
    let cols: Vec<usize> = (0..f0.cols()).filter(|&j| j != b).collect();
    let rows: Vec<usize> = (0..f0.rows()).filter(|&i| i != bt).collect();
    IntMatrix::from_fn(rows.len(), cols.len(), |i, j| {
        &f0[(rows[i], cols[j])] - &f0[(rows[i], b)]
    })
}

/// The induced map of reduced suspensions.
pub fn susp_map(f: &ChainMap) -> Result<ChainMap, Error> {
    f.require_valid()?;
    let source = f.source.suspension();
    let target = f.target.suspension();
    let top = source.dim().max(target.dim());
    let mut maps = vec![IntMatrix::identity(1), reduced_vertex_map(f)];
    for n in 2..=top as i64 {
        maps.push(f.component(n - 1));
    }
    ChainMap::new(source, target, maps)
}

/// Algebraic mapping cone of `f : X -> Y` together with the inclusion of `Y`
/// and the projection onto the suspension of `X`.
#[derive(Clone, Debug)]
pub struct MappingCone {
    pub complex: CwComplex,
    /// `Y -> cone`.
    pub inclusion: ChainMap,
    /// `cone -> susp(X)`; in degree `n >= 1` it is `(-1)^n` times the
    /// projection onto the shifted copy of `X`.
    pub projection: ChainMap,
}

/// `cone_n = C_n(Y) + C~_{n-1}(X)` with boundary
/// `[[B'_n, F~_{n-1}], [0, -B~_{n-1}]]`, where `~` is the reduced complex of `X`
/// (basepoint vertex removed) and `F~_0` sends vertex `i` to `F_0 e_i - F_0 e_b`.
/// Cone on a pointed map of sphere models gives the Moore space on the nose.
///
/// Works for any augmentation-preserving chain map, pointed or not.
pub fn mapping_cone(f: &ChainMap) -> Result<MappingCone, Error> {
    f.require_valid()?;
    let x = &f.source;
    let y = &f.target;
    let top = y.dim().max(x.dim() + 1);
    let yc = |n: i64| y.cell_count(n);
    let xr = |n: i64| if n < 0 { 0 } else { x.reduced_cells(n) };
    let cells: Vec<usize> = (0..=top as i64).map(|n| yc(n) + xr(n - 1)).collect();

    // F~_k : C~_k(X) -> C_k(Y)
    let f_red = |k: i64| -> IntMatrix {
        if k < 0 {
            IntMatrix::zeros(yc(k), 0)
        } else if k == 0 {
            let f0 = f.component(0);
            let b = x.basepoint();
            let keep: Vec<usize> = (0..f0.cols()).filter(|&j| j != b).collect();
            IntMatrix::from_fn(f0.rows(), keep.len(), |i, j| &f0[(i, keep[j])] - &f0[(i, b)])
        } else {
            f.component(k)
        }
    };
    let x_red_boundary = |k: i64| -> IntMatrix {
        if k < 0 {
            IntMatrix::zeros(xr(k - 1), xr(k))
        } else {
            x.reduced_boundary(k)
        }
    };

    let mut boundaries = Vec::with_capacity(top);
    for n in 1..=top as i64 {
        let top_row = y.boundary(n).hstack(&f_red(n - 1));
        let bottom_row = IntMatrix::zeros(xr(n - 2), yc(n)).hstack(&x_red_boundary(n - 1).neg());
        boundaries.push(top_row.vstack(&bottom_row));
    }
    let cone = CwComplex::new(
        format!("cone({}->{})", x.name(), y.name()),
        cells.clone(),
        boundaries,
        y.basepoint(),
    )?;

    let inclusion_maps = (0..=top as i64)
        .map(|n| IntMatrix::identity(yc(n)).vstack(&IntMatrix::zeros(xr(n - 1), yc(n))))
        .collect();
    let inclusion = ChainMap::new(y.clone(), cone.clone(), inclusion_maps)?;

    let sx = x.suspension();
    let mut projection_maps = vec![IntMatrix::from_fn(1, cells[0], |_, _| BigInt::one())];
    for n in 1..=top as i64 {
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let block = IntMatrix::zeros(xr(n - 1), yc(n)).hstack(&IntMatrix::identity(xr(n - 1)).scale(&sign));
        projection_maps.push(block);
    }
    let projection = ChainMap::new(cone.clone(), sx, projection_maps)?;

    Ok(MappingCone {
        complex: cone,
        inclusion,
        projection,
    })
}

/// Inclusion of the `m`-skeleton.
pub fn skeleton_inclusion(x: &CwComplex, m: usize) -> Result<ChainMap, Error> {
    let sk = x.skeleton(m)?;
    let maps = (0..=x.dim() as i64)
        .map(|n| {
            if n as usize <= m {
                IntMatrix::identity(x.cell_count(n))
            } else {
                IntMatrix::zeros(x.cell_count(n), 0)
            }
        })
        .collect();
    ChainMap::new(sk, x.clone(), maps)
}

/// The collapse `X -> X / X_m`.
pub fn quotient_map(x: &CwComplex, m: usize) -> Result<ChainMap, Error> {
    let q = x.quotient_by_skeleton(m)?;
    let maps = (0..=x.dim() as i64)
        .map(|n| {
            if n == 0 {
                IntMatrix::from_fn(1, x.cell_count(0), |_, _| BigInt::one())
            } else if n as usize <= m {
                IntMatrix::zeros(0, x.cell_count(n))
            } else {
                IntMatrix::identity(x.cell_count(n))
            }
        })
        .collect();
    ChainMap::new(x.clone(), q, maps)
}

/// The comparison `cone(X_m -> X) -> X / X_m` that collapses the cone on the
/// skeleton: the quotient map on the `X` part and zero on the shifted part.
pub fn cone_collapse(x: &CwComplex, m: usize) -> Result<(MappingCone, ChainMap), Error> {
    let incl = skeleton_inclusion(x, m)?;
    let cone = mapping_cone(&incl)?;
    let pi = quotient_map(x, m)?;
    let sk = incl.source();
    let maps = (0..=cone.complex.dim() as i64)
        .map(|n| {
            let shifted = if n == 0 { 0 } else if n == 1 { sk.cell_count(0) - 1 } else { sk.cell_count(n - 1) };
            let p = pi.component(n);
            p.hstack(&IntMatrix::zeros(p.rows(), shifted))
        })
        .collect();
    let q = ChainMap::new(cone.complex.clone(), pi.target().clone(), maps)?;
    Ok((cone, q))
}

/// The homomorphism induced on (co)homology in degree `n`, together with the
/// presentations it is written against. Homology is covariant
/// (`source -> target`), cohomology contravariant (`target -> source`).
pub fn induced_with_presentations(
    f: &ChainMap,
    n: i64,
    coeff: &FgAbGroup,
    variant: Variant,
    reduced: bool,
) -> Result<(GroupWithPresentation, GroupWithPresentation, AbHom), Error> {
    f.require_valid()?;
    let fx = homology::group(&f.source, n, coeff, variant, reduced)?;
    let fy = homology::group(&f.target, n, coeff, variant, reduced)?;
    let fn_ = f.chain_component(n, reduced);
    debug_assert_eq!(fn_.shape(), (chain_rank(&f.target, n, reduced), chain_rank(&f.source, n, reduced)));
    match variant {
        Variant::Homology => {
            let h = homology::hom_from_cell_map(&fx, &fy, &fn_)?;
            Ok((fx, fy, h))
        }
        Variant::Cohomology => {
            let h = homology::hom_from_cell_map(&fy, &fx, &fn_.transpose())?;
            Ok((fy, fx, h))
        }
    }
}

pub fn induced_map(
    f: &ChainMap,
    n: i64,
    coeff: &FgAbGroup,
    variant: Variant,
    reduced: bool,
) -> Result<AbHom, Error> {
    Ok(induced_with_presentations(f, n, coeff, variant, reduced)?.2)
}

/// Cell-level cochain matrix of the suspension isomorphism
/// `C~^n(X) -> C~^{n+1}(susp X)`: the identity for `n >= 1`, and for `n = 0`
/// the passage to values relative to the basepoint.
fn suspension_cochain_matrix(x: &CwComplex, n: i64) -> IntMatrix {
    if n >= 1 {
        return IntMatrix::identity(x.cell_count(n));
    }
    if n < 0 {
        return IntMatrix::zeros(chain_rank(&x.suspension(), n + 1, true), chain_rank(x, n, true));
    }
    let c0 = x.cell_count(0);
    let b = x.basepoint();
    let mut m = IntMatrix::zeros(c0 - 1, c0);
    for (k, i) in (0..c0).filter(|&i| i != b).enumerate() {
        m[(k, i)] = BigInt::one();
        m[(k, b)] = -BigInt::one();
    }
    m
}

/// The suspension isomorphism `h~^n(X; G) -> h~^{n+1}(susp X; G)`.
pub fn suspension_iso(x: &CwComplex, n: i64, coeff: &FgAbGroup) -> Result<AbHom, Error> {
    let src = homology::cohomology(x, n, coeff, true)?;
    let dst = homology::cohomology(&x.suspension(), n + 1, coeff, true)?;
    if n < 0 {
        return Ok(AbHom::zero(src.group(), dst.group()));
    }
    homology::hom_from_cell_map(&src, &dst, &suspension_cochain_matrix(x, n))
}

/// Connecting homomorphism `h~^n(X; G) -> h~^{n+1}(cone f; G)` of the cofiber
/// sequence `X -> Y -> cone f`: the suspension isomorphism followed by the map
/// induced by the cone's projection onto `susp X`. The only sign is the one
/// built into the cone boundary and the projection.
pub fn connecting_map(f: &ChainMap, n: i64, coeff: &FgAbGroup) -> Result<AbHom, Error> {
    let cone = mapping_cone(f)?;
    connecting_map_with(f, &cone, n, coeff)
}

pub(crate) fn connecting_map_with(
    f: &ChainMap,
    cone: &MappingCone,
    n: i64,
    coeff: &FgAbGroup,
) -> Result<AbHom, Error> {
    let shift = suspension_iso(&f.source, n, coeff)?;
    let proj = induced_map(&cone.projection, n + 1, coeff, Variant::Cohomology, true)?;
    abgroups::compose(&proj, &shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroups::parse_group;
    use crate::complex::{moore, rp, sphere, torus};

    fn g(s: &str) -> FgAbGroup {
        parse_group(s).unwrap()
    }

    fn deg(f: &ChainMap) -> Result<i64, Error> {
        degree(f).map(|d| i64::try_from(&d).unwrap())
    }

    #[test]
    fn identity_and_compose() {
        let t = torus();
        let id = identity_map(&t);
        assert!(id.is_valid());
        let f = sphere_self_map(2, 3).unwrap();
        let c = compose(&identity_map(f.target()), &f).unwrap();
        assert!(c.same_structure(&f));
    }

    #[test]
    fn chain_condition_violation() {
        let x = rp(2);
        // F_1 = [1] but F_2 = [0]: B'_2 F_2 = 0 while F_1 B_2 = [2]
        let f = ChainMap::from_parts(
            x.clone(),
            x,
            vec![IntMatrix::identity(1), IntMatrix::identity(1), IntMatrix::zeros(1, 1)],
        );
        assert_eq!(f.validate().violations, vec![Violation::MapChain { dim: 2 }]);
    }

    #[test]
    fn sphere_maps() {
        let f = sphere_self_map(1, 3).unwrap();
        assert_eq!(f.component(1), IntMatrix::from_i64_rows(&[&[3]]));
        assert!(sphere_self_map(2, 0).unwrap().is_valid());
        assert!(sphere_self_map(0, 2).is_err());
    }

    #[test]
    fn degree_examples() {
        for n in 0..=4 {
            assert_eq!(deg(&identity_map(&sphere(n))), Ok(1));
        }
        let c = compose(&sphere_self_map(2, 2).unwrap(), &sphere_self_map(2, -3).unwrap()).unwrap();
        assert_eq!(deg(&c), Ok(-6));
        let s = susp_map(&sphere_self_map(1, 5).unwrap()).unwrap();
        assert_eq!(deg(&s), Ok(5));
        let [id, swap, c0, c1] = s0_self_maps();
        assert_eq!(
            [deg(&id), deg(&swap), deg(&c0), deg(&c1)],
            [Ok(1), Ok(-1), Ok(0), Ok(0)]
        );
    }

    #[test]
    fn degree_rejects_non_spheres() {
        assert_eq!(
            degree(&identity_map(&torus())),
            Err(Error::NotASphereModel)
        );
        assert_eq!(
            degree(&identity_map(&complex::point())),
            Err(Error::NotASphereModel)
        );
        assert_eq!(
            degree(&identity_map(&moore(2, 1))),
            Err(Error::NotASphereModel)
        );
    }

    #[test]
    fn degree_on_a_non_minimal_sphere() {
        // S^1 as two vertices and two edges a: 0 -> 1, b: 1 -> 0
        let circle = CwComplex::new(
            "circle2",
            vec![2, 2],
            vec![IntMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]])],
            0,
        )
        .unwrap();
        // rotation by half a turn swaps vertices and edges: degree 1
        let rot = ChainMap::new(
            circle.clone(),
            circle.clone(),
            vec![
                IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
                IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
            ],
        )
        .unwrap();
        assert_eq!(deg(&rot), Ok(1));
        // reflection fixing the vertices reverses both edges: degree -1
        let refl = ChainMap::new(
            circle.clone(),
            circle,
            vec![IntMatrix::identity(2), IntMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]])],
        );
        assert!(refl.is_err(), "edge reversal alone does not commute with the boundary");
    }

    #[test]
    fn susp_map_examples() {
        let t = torus();
        assert!(susp_map(&identity_map(&t)).unwrap().same_structure(&identity_map(&t.suspension())));
        for d in -3..=3 {
            let s = susp_map(&sphere_self_map(1, d).unwrap()).unwrap();
            assert!(s.same_structure(&sphere_self_map(2, d).unwrap()));
        }
        let swap = sphere_self_map(0, -1).unwrap();
        assert!(susp_map(&swap).unwrap().same_structure(&sphere_self_map(1, -1).unwrap()));
    }

    #[test]
    fn cone_of_degree_map_is_moore_space() {
        for q in [2, 3, 5] {
            for n in 1..=2 {
                let cone = mapping_cone(&sphere_self_map(n, q).unwrap()).unwrap();
                assert!(cone.complex.same_structure(&moore(q, n)));
            }
        }
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        for x in [sphere(2), torus(), rp(3)] {
            let cone = mapping_cone(&identity_map(&x)).unwrap();
            for n in -1..=x.dim() as i64 + 2 {
                let h = homology::integral_homology(&cone.complex, n, true).unwrap();
                assert!(h.group().is_trivial());
            }
        }
    }

    #[test]
    fn cone_of_constant_circle_map() {
        let f = constant_map(&sphere(1), &complex::point(), 0).unwrap();
        let cone = mapping_cone(&f).unwrap();
        assert_eq!(cone.complex.cells(), &[1, 0, 1]);
        assert!(cone.complex.has_zero_boundaries());
    }

    #[test]
    fn induced_examples() {
        let t = torus();
        let id = induced_map(&identity_map(&t), 1, &g("Z"), Variant::Cohomology, false).unwrap();
        assert_eq!(id, AbHom::identity(&g("Z^2")));

        for n in 1..=3 {
            for q in [-2, 3] {
                let h = induced_map(&sphere_self_map(n, q).unwrap(), n as i64, &g("Z"), Variant::Cohomology, true)
                    .unwrap();
                assert_eq!(h.matrix()[(0, 0)], BigInt::from(q));
            }
        }

        // S^1 -> torus onto the first edge, restricted on H^1: Z^2 -> Z, onto
        let f = ChainMap::new(
            sphere(1),
            t.clone(),
            vec![IntMatrix::identity(1), IntMatrix::from_i64_rows(&[&[1], &[0]]), IntMatrix::zeros(1, 0)],
        )
        .unwrap();
        let h = induced_map(&f, 1, &g("Z"), Variant::Cohomology, false).unwrap();
        assert_eq!(h.source(), &g("Z^2"));
        assert_eq!(h.target(), &g("Z"));
        assert!(abgroups::hom_cokernel(&h).is_trivial());
    }

    #[test]
    fn connecting_examples() {
        for q in [2, 3, 5] {
            let f = sphere_self_map(2, q).unwrap();
            let gamma = connecting_map(&f, 2, &g("Z")).unwrap();
            assert_eq!(gamma.target(), &FgAbGroup::cyclic(q));
            assert!(abgroups::hom_cokernel(&gamma).is_trivial());
        }
        let incl = skeleton_inclusion(&rp(2), 1).unwrap();
        let gamma = connecting_map(&incl, 1, &g("Z")).unwrap();
        assert_eq!(gamma.source(), &g("Z"));
        assert_eq!(gamma.target(), &g("Z"));
        assert_eq!(gamma.matrix()[(0, 0)].magnitude(), &num_bigint::BigUint::from(2u32));
    }

    #[test]
    fn cone_collapse_is_a_quasi_isomorphism() {
        for x in [rp(3), torus(), complex::klein()] {
            for m in 0..x.dim() {
                let (cone, q) = cone_collapse(&x, m).unwrap();
                for n in -1..=x.dim() as i64 + 1 {
                    let h = induced_map(&q, n, &g("Z"), Variant::Cohomology, true).unwrap();
                    abgroups::invert_iso(&h).unwrap();
                    let a = homology::cohomology(&cone.complex, n, &g("Z/2"), true).unwrap();
                    let b = homology::cohomology(q.target(), n, &g("Z/2"), true).unwrap();
                    assert_eq!(a.group(), b.group());
                }
            }
        }
    }
}
