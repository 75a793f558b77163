//! Cellular homology and cohomology with coefficients in any finitely
//! generated abelian group.
//!
//! The coefficient group is split into its cyclic factors. For a `Z` factor the
//! group is `ker / im` of the integer (co)boundaries; for a `Z/d` factor the
//! cycles are taken modulo `d` and `d` times everything is added to the
//! boundaries. All factors share one ambient lattice (one block of cell
//! coordinates per factor), so a single quotient computation yields canonical
//! generators for the whole group.
//!
//! Reduced groups use the augmented complex `... -> Z[A_1] -> Z[A_0] -> Z`,
//! with `Z` sitting in degree `-1`. Dually, reduced cohomology in degree 0
//! divides out the constant cochains.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::abgroups::{AbHom, FgAbGroup};
use crate::complex::CwComplex;
use crate::error::Error;
use crate::intmat::{self, IntMatrix, LatticeQuotient};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Homology,
    Cohomology,
}

/// A (co)homology group together with the data to compute in it.
///
/// The ambient space has one block of `cells` coordinates per cyclic factor of
/// the coefficient group; each canonical generator has a lift there that is a
/// (co)cycle, and [`coordinates`](Self::coordinates) sends any (co)cycle to
/// canonical coordinates.
#[derive(Clone, Debug)]
pub struct GroupWithPresentation {
    quotient: LatticeQuotient,
    factors: Vec<BigInt>,
    cells: usize,
}

impl GroupWithPresentation {
    pub fn group(&self) -> &FgAbGroup {
        self.quotient.group()
    }

    pub fn into_group(self) -> FgAbGroup {
        self.quotient.group().clone()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    /// Number of cells in the relevant degree (the size of one factor block).
    pub fn cells(&self) -> usize {
        self.cells
    }

    /// Orders of the coefficient factors, `0` meaning `Z`.
    pub fn factor_orders(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn generator_lifts(&self) -> &[Vec<BigInt>] {
        self.quotient.lifts()
    }

    pub fn coordinates(&self, v: &[BigInt]) -> Result<Vec<BigInt>, Error> {
        self.quotient.coordinates(v)
    }

    /// A (co)cycle representing the element with the given coordinates.
    pub fn element(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.quotient.element(coords)
    }

    /// Applies a cell-level matrix (`target cells x self.cells`) to every
    /// factor block of `v`.
    pub(crate) fn apply_blockwise(&self, m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
        apply_blockwise(m, v, self.factors.len())
    }
}

pub(crate) fn apply_blockwise(m: &IntMatrix, v: &[BigInt], blocks: usize) -> Vec<BigInt> {
    let (rows, cols) = m.shape();
    assert_eq!(v.len(), cols * blocks, "block vector length mismatch");
    let mut out = Vec::with_capacity(rows * blocks);
    for b in 0..blocks {
        out.extend(m.mul_vec(&v[b * cols..(b + 1) * cols]));
    }
    out
}

/// `ker(out_map) / im(in_map)` with coefficients in `coeff`, where
/// `out_map: Z^m -> Z^k` and `in_map: Z^l -> Z^m` satisfy `out_map * in_map = 0`.
pub fn kernel_mod_image(
    out_map: &IntMatrix,
    in_map: &IntMatrix,
    coeff: &FgAbGroup,
) -> Result<GroupWithPresentation, Error> {
    let m = out_map.cols();
    if in_map.rows() != m {
        return Err(Error::ShapeMismatch {
            context: "kernel_mod_image",
            expected: (m, in_map.cols()),
            found: in_map.shape(),
        });
    }
    let factors = coeff.cyclic_factors();
    let mut nums = Vec::with_capacity(factors.len());
    let mut dens = Vec::with_capacity(factors.len());
    for d in &factors {
        if d.is_zero() {
            if !(out_map * in_map).is_zero() {
                return Err(Error::ChainConditionViolation);
            }
            nums.push(intmat::kernel_basis(out_map));
            dens.push(in_map.clone());
        } else {
            nums.push(intmat::mod_d_cycles(out_map, d));
            dens.push(in_map.hstack(&IntMatrix::identity(m).scale(d)));
        }
    }
    let ambient = m * factors.len();
    let quotient = intmat::quotient_group(
        ambient,
        &IntMatrix::block_diagonal(&nums),
        &IntMatrix::block_diagonal(&dens),
    )
    .map_err(|e| match e {
        Error::ContainmentViolation => Error::ChainConditionViolation,
        e => e,
    })?;
    Ok(GroupWithPresentation {
        quotient,
        factors,
        cells: m,
    })
}

/// Rank of the chain group in degree `n`; the reduced complex has a `Z` in
/// degree `-1`.
pub(crate) fn chain_rank(x: &CwComplex, n: i64, reduced: bool) -> usize {
    if reduced && n == -1 {
        1
    } else {
        x.cell_count(n)
    }
}

/// `∂_n : C_n -> C_{n-1}` of the (possibly augmented) cellular chain complex.
pub(crate) fn chain_boundary(x: &CwComplex, n: i64, reduced: bool) -> IntMatrix {
    if reduced && n == 0 {
        IntMatrix::from_fn(1, x.cell_count(0), |_, _| BigInt::one())
    } else if n <= 0 {
        IntMatrix::zeros(chain_rank(x, n - 1, reduced), chain_rank(x, n, reduced))
    } else {
        x.boundary(n)
    }
}

/// `H_n(x; coeff)`, reduced or not. Out-of-range degrees give the trivial group.
pub fn homology(
    x: &CwComplex,
    n: i64,
    coeff: &FgAbGroup,
    reduced: bool,
) -> Result<GroupWithPresentation, Error> {
    x.require_valid()?;
    kernel_mod_image(
        &chain_boundary(x, n, reduced),
        &chain_boundary(x, n + 1, reduced),
        coeff,
    )
}

/// `H_n(x; Z)`.
pub fn integral_homology(
    x: &CwComplex,
    n: i64,
    reduced: bool,
) -> Result<GroupWithPresentation, Error> {
    homology(x, n, &FgAbGroup::free(1), reduced)
}

/// `H^n(x; coeff)` by dualizing each cyclic factor and taking kernel modulo
/// image of the coboundaries `B_{n+1}^T` and `B_n^T`.
pub fn cohomology(
    x: &CwComplex,
    n: i64,
    coeff: &FgAbGroup,
    reduced: bool,
) -> Result<GroupWithPresentation, Error> {
    x.require_valid()?;
    kernel_mod_image(
        &chain_boundary(x, n + 1, reduced).transpose(),
        &chain_boundary(x, n, reduced).transpose(),
        coeff,
    )
}

pub fn group(
    x: &CwComplex,
    n: i64,
    coeff: &FgAbGroup,
    variant: Variant,
    reduced: bool,
) -> Result<GroupWithPresentation, Error> {
    match variant {
        Variant::Homology => homology(x, n, coeff, reduced),
        Variant::Cohomology => cohomology(x, n, coeff, reduced),
    }
}

/// Groups for every degree `-1 ..= dim + 1`.
pub fn all_groups(
    x: &CwComplex,
    coeff: &FgAbGroup,
    variant: Variant,
    reduced: bool,
) -> Result<Vec<(i64, FgAbGroup)>, Error> {
    (-1..=x.dim() as i64 + 1)
        .map(|n| Ok((n, group(x, n, coeff, variant, reduced)?.into_group())))
        .collect()
}

/// Integral Betti numbers `b_0, ..., b_dim` (unreduced).
pub fn betti_numbers(x: &CwComplex) -> Result<Vec<usize>, Error> {
    (0..=x.dim() as i64)
        .map(|n| Ok(integral_homology(x, n, false)?.group().rank()))
        .collect()
}

/// Homomorphism between two presented groups induced by a cell-level matrix
/// acting on every coefficient block.
pub(crate) fn hom_from_cell_map(
    source: &GroupWithPresentation,
    target: &GroupWithPresentation,
    cell_map: &IntMatrix,
) -> Result<AbHom, Error> {
    if source.factors != target.factors
        || cell_map.shape() != (target.cells, source.cells)
    {
        return Err(Error::ShapeMismatch {
            context: "induced homomorphism",
            expected: (target.cells, source.cells),
            found: cell_map.shape(),
        });
    }
    let cols: Vec<Vec<BigInt>> = source
        .generator_lifts()
        .iter()
        .map(|lift| target.coordinates(&source.apply_blockwise(cell_map, lift)))
        .collect::<Result<_, _>>()?;
    let n = target.group().num_generators();
    AbHom::new(
        source.group().clone(),
        target.group().clone(),
        IntMatrix::from_columns(n, &cols),
    )
}

/// Reduces a blockwise vector modulo the factor orders.
pub(crate) fn reduce_blocks(v: &mut [BigInt], factors: &[BigInt], cells: usize) {
    for (b, d) in factors.iter().enumerate() {
        if d.is_positive() {
            for e in &mut v[b * cells..(b + 1) * cells] {
                *e = e.mod_floor(d);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::abgroups::parse_group;
    use crate::complex::{self, sphere};

    fn g(s: &str) -> FgAbGroup {
        parse_group(s).unwrap()
    }

    fn h(x: &CwComplex, n: i64) -> FgAbGroup {
        integral_homology(x, n, false).unwrap().into_group()
    }

    fn coh(x: &CwComplex, n: i64, coeff: &str, reduced: bool) -> FgAbGroup {
        cohomology(x, n, &g(coeff), reduced).unwrap().into_group()
    }

    #[test]
    fn torus_homology() {
        let t = complex::torus();
        assert_eq!(h(&t, 0), g("Z"));
        assert_eq!(h(&t, 1), g("Z^2"));
        assert_eq!(h(&t, 2), g("Z"));
        assert!(h(&t, 3).is_trivial());
        assert!(h(&t, -1).is_trivial());
    }

    #[test]
    fn klein_homology() {
        let k = complex::klein();
        assert_eq!(h(&k, 1), g("Z + Z/2"));
        assert!(h(&k, 2).is_trivial());
    }

    #[test]
    fn reduced_zeroth_homology_of_s0() {
        let s0 = sphere(0);
        assert_eq!(integral_homology(&s0, 0, true).unwrap().into_group(), g("Z"));
        assert_eq!(h(&s0, 0), g("Z^2"));
        assert!(integral_homology(&s0, -1, true).unwrap().group().is_trivial());
    }

    #[test]
    fn rp2_cohomology() {
        let x = complex::rp(2);
        assert!(coh(&x, 1, "Z", false).is_trivial());
        assert_eq!(coh(&x, 2, "Z", false), g("Z/2"));
        assert_eq!(coh(&x, 1, "Z/2", false), g("Z/2"));
        assert_eq!(coh(&x, 2, "Z/2", false), g("Z/2"));
    }

    #[test]
    fn moore_cohomology() {
        for q in [2, 3, 5] {
            for n in 1..=2 {
                let m = complex::moore(q, n);
                assert_eq!(coh(&m, n as i64 + 1, "Z", true), FgAbGroup::cyclic(q));
                assert!(coh(&m, n as i64, "Z", true).is_trivial());
            }
        }
    }

    #[test]
    fn spheres_with_mixed_coefficients() {
        for n in 0..=4usize {
            let s = sphere(n);
            for coeff in ["Z", "Z/2", "Z + Z/4"] {
                for m in -1..=5i64 {
                    let got = coh(&s, m, coeff, true);
                    if m == n as i64 {
                        assert_eq!(got, g(coeff), "H^{}(S^{}; {})", m, n, coeff);
                    } else {
                        assert!(got.is_trivial(), "H^{}(S^{}; {}) = {}", m, n, coeff, got);
                    }
                }
            }
        }
    }

    #[test]
    fn all_groups_tables() {
        let t = all_groups(&complex::torus(), &g("Z"), Variant::Cohomology, true).unwrap();
        let expect = [(-1, "0"), (0, "0"), (1, "Z^2"), (2, "Z"), (3, "0")];
        assert_eq!(t, expect.map(|(n, s)| (n, g(s))).to_vec());

        let p = all_groups(&complex::point(), &g("Z"), Variant::Cohomology, true).unwrap();
        assert!(p.iter().all(|(_, x)| x.is_trivial()));

        let r = all_groups(&complex::rp(3), &g("Z"), Variant::Cohomology, true).unwrap();
        let expect = [(-1, "0"), (0, "0"), (1, "0"), (2, "Z/2"), (3, "Z"), (4, "0")];
        assert_eq!(r, expect.map(|(n, s)| (n, g(s))).to_vec());
    }

    #[test]
    fn unreduced_zeroth_adds_a_free_summand() {
        for x in [complex::torus(), sphere(0), complex::rp(3), complex::wedge(&[sphere(0), sphere(0)])] {
            for coeff in ["Z", "Z/2", "Z + Z/4"] {
                let red = homology(&x, 0, &g(coeff), true).unwrap().into_group();
                let unred = homology(&x, 0, &g(coeff), false).unwrap().into_group();
                assert_eq!(crate::abgroups::direct_sum(&red, &g(coeff)), unred);
                let red = coh(&x, 0, coeff, true);
                let unred = coh(&x, 0, coeff, false);
                assert_eq!(crate::abgroups::direct_sum(&red, &g(coeff)), unred);
            }
        }
    }

    #[test]
    fn lifts_are_cocycles_and_round_trip() {
        let x = complex::klein();
        for coeff in ["Z", "Z/2", "Z/6", "Z + Z/4"] {
            for n in 0..=2 {
                let p = cohomology(&x, n, &g(coeff), false).unwrap();
                let delta = chain_boundary(&x, n + 1, false).transpose();
                for (i, lift) in p.generator_lifts().iter().enumerate() {
                    let mut image = apply_blockwise(&delta, lift, p.factor_orders().len());
                    reduce_blocks(&mut image, p.factor_orders(), delta.rows());
                    assert!(image.iter().all(Zero::is_zero));
                    let c = p.coordinates(lift).unwrap();
                    for (j, cj) in c.iter().enumerate() {
                        assert_eq!(cj.is_one(), i == j);
                        assert_eq!(cj.is_zero(), i != j);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_complex_is_rejected() {
        let bad = CwComplex::from_parts("bad", vec![2, 1], vec![IntMatrix::from_i64_rows(&[&[1], &[0]])], 0);
        assert!(matches!(homology(&bad, 0, &g("Z"), false), Err(Error::InvalidComplex(_))));
    }
}
