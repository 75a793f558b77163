//! Executable checks of the Eilenberg–Steenrod axioms and of the skeletal
//! reformulation of cellular cohomology.
//!
//! Group-level checks go through a [`CohomologyTheory`], so a deliberately
//! broken engine can be plugged in as a negative control. Checks that need
//! homomorphisms (exactness, naturality, the reformulation) use the cellular
//! engine directly.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::abgroups::{self, format_group, AbHom, FgAbGroup};
use crate::complex::{self, CwComplex};
use crate::error::Error;
use crate::homology::{self, GroupWithPresentation, Variant};
use crate::intmat::IntMatrix;
use crate::maps::{self, ChainMap};

/// Anything that assigns reduced cohomology groups to complexes.
pub trait CohomologyTheory {
    fn reduced_cohomology(&self, x: &CwComplex, n: i64, coeff: &FgAbGroup) -> Result<FgAbGroup, Error>;
}

/// The cellular engine of this crate.
#[derive(Clone, Copy, Debug, Default)]
pub struct Cellular;

impl CohomologyTheory for Cellular {
    fn reduced_cohomology(&self, x: &CwComplex, n: i64, coeff: &FgAbGroup) -> Result<FgAbGroup, Error> {
        Ok(homology::cohomology(x, n, coeff, true)?.into_group())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub subject: String,
    pub coeff: FgAbGroup,
    pub range: RangeInclusive<i64>,
    pub passed: bool,
    /// One line per failure; empty when the check passed.
    pub witnesses: Vec<String>,
}

impl CheckReport {
    fn new(check: &str, subject: &str, coeff: &FgAbGroup, range: RangeInclusive<i64>) -> Self {
        CheckReport {
            check: check.to_string(),
            subject: subject.to_string(),
            coeff: coeff.clone(),
            range,
            passed: true,
            witnesses: Vec::new(),
        }
    }

    fn fail(&mut self, witness: String) {
        self.passed = false;
        self.witnesses.push(witness);
    }

    fn finish(mut self, result: Result<(), Error>) -> Self {
        if let Err(e) = result {
            self.fail(format!("error: {}", e));
        }
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} G={} dims={}..{}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check,
            self.subject,
            format_group(&self.coeff),
            self.range.start(),
            self.range.end()
        )?;
        for w in &self.witnesses {
            write!(f, "\n    {}", w)?;
        }
        Ok(())
    }
}

/// Reduced `h^n(S^0; G)` is `G` at `n = 0` and trivial elsewhere.
pub fn check_dimension(coeff: &FgAbGroup, range: RangeInclusive<i64>) -> CheckReport {
    check_dimension_with(&Cellular, coeff, range)
}

pub fn check_dimension_with(
    theory: &dyn CohomologyTheory,
    coeff: &FgAbGroup,
    range: RangeInclusive<i64>,
) -> CheckReport {
    let s0 = complex::sphere(0);
    let mut report = CheckReport::new("dimension", s0.name(), coeff, range.clone());
    let result = (|| {
        for n in range {
            let h = theory.reduced_cohomology(&s0, n, coeff)?;
            let expected = if n == 0 { coeff.clone() } else { FgAbGroup::trivial() };
            if h != expected {
                report.fail(format!("n={}: expected {}, found {}", n, expected, h));
            }
        }
        Ok(())
    })();
    report.finish(result)
}

/// `h^{n+1}(susp X) = h^n(X)` for every `n` in range.
pub fn check_suspension(x: &CwComplex, coeff: &FgAbGroup, range: RangeInclusive<i64>) -> CheckReport {
    check_suspension_with(&Cellular, x, coeff, range)
}

pub fn check_suspension_with(
    theory: &dyn CohomologyTheory,
    x: &CwComplex,
    coeff: &FgAbGroup,
    range: RangeInclusive<i64>,
) -> CheckReport {
    let mut report = CheckReport::new("suspension", x.name(), coeff, range.clone());
    let sx = x.suspension();
    let result = (|| {
        for n in range {
            let a = theory.reduced_cohomology(x, n, coeff)?;
            let b = theory.reduced_cohomology(&sx, n + 1, coeff)?;
            if a != b {
                report.fail(format!("n={}: H^{}(X) = {} but H^{}(susp X) = {}", n, n, a, n + 1, b));
            }
        }
        Ok(())
    })();
    report.finish(result)
}

/// `h^n(wedge xs) = ⊕ h^n(x_i)` for every `n` in range.
pub fn check_wedge(xs: &[CwComplex], coeff: &FgAbGroup, range: RangeInclusive<i64>) -> CheckReport {
    check_wedge_with(&Cellular, xs, coeff, range)
}

pub fn check_wedge_with(
    theory: &dyn CohomologyTheory,
    xs: &[CwComplex],
    coeff: &FgAbGroup,
    range: RangeInclusive<i64>,
) -> CheckReport {
    let w = complex::wedge(xs);
    let mut report = CheckReport::new("wedge", w.name(), coeff, range.clone());
    let result = (|| {
        for n in range {
            let whole = theory.reduced_cohomology(&w, n, coeff)?;
            let parts = xs
                .iter()
                .map(|x| theory.reduced_cohomology(x, n, coeff))
                .collect::<Result<Vec<_>, _>>()?;
            let sum = abgroups::direct_sum_all(&parts);
            if whole != sum {
                report.fail(format!("n={}: wedge has {}, sum of summands is {}", n, whole, sum));
            }
        }
        Ok(())
    })();
    report.finish(result)
}

/// The square `susp ∘ f^* = (susp f)^* ∘ susp` commutes in every degree.
pub fn check_suspension_naturality(f: &ChainMap, coeff: &FgAbGroup, range: RangeInclusive<i64>) -> CheckReport {
    let subject = format!("{}->{}", f.source().name(), f.target().name());
    let mut report = CheckReport::new("suspension-naturality", &subject, coeff, range.clone());
    let result = (|| {
        let sf = maps::susp_map(f)?;
        for n in range {
            let fstar = maps::induced_map(f, n, coeff, Variant::Cohomology, true)?;
            let sfstar = maps::induced_map(&sf, n + 1, coeff, Variant::Cohomology, true)?;
            let sx = maps::suspension_iso(f.source(), n, coeff)?;
            let sy = maps::suspension_iso(f.target(), n, coeff)?;
            let left = abgroups::compose(&sx, &fstar)?;
            let right = abgroups::compose(&sfstar, &sy)?;
            if left != right {
                report.fail(format!("n={}: square does not commute", n));
            }
        }
        Ok(())
    })();
    report.finish(result)
}

/// Exactness of `h^n(C) -> h^n(Y) -> h^n(X) -> h^{n+1}(C) -> ...` for the
/// cofiber sequence `X -> Y -> C` of `f`, at every node whose two maps both
/// have indices in range.
pub fn check_les_exactness(f: &ChainMap, coeff: &FgAbGroup, range: RangeInclusive<i64>) -> CheckReport {
    let subject = format!("{}->{}", f.source().name(), f.target().name());
    let mut report = CheckReport::new("les", &subject, coeff, range.clone());
    let result = (|| {
        let cone = maps::mapping_cone(f)?;
        let cohom = |g: &ChainMap, n: i64| maps::induced_map(g, n, coeff, Variant::Cohomology, true);
        let (lo, hi) = (*range.start(), *range.end());
        let mut prev_gamma: Option<AbHom> = None;
        for n in lo..=hi {
            let a = cohom(&cone.inclusion, n)?;
            let b = cohom(f, n)?;
            let gamma = maps::connecting_map_with(f, &cone, n, coeff)?;
            if let Some(g) = &prev_gamma {
                if !abgroups::is_exact_pair(g, &a)? {
                    report.fail(les_witness("H^n(C)", n, g, &a));
                }
            }
            if !abgroups::is_exact_pair(&a, &b)? {
                report.fail(les_witness("H^n(Y)", n, &a, &b));
            }
            if !abgroups::is_exact_pair(&b, &gamma)? {
                report.fail(les_witness("H^n(X)", n, &b, &gamma));
            }
            prev_gamma = Some(gamma);
        }
        Ok(())
    })();
    report.finish(result)
}

fn les_witness(node: &str, n: i64, into: &AbHom, out: &AbHom) -> String {
    format!(
        "n={}: not exact at {} = {}: image {} vs kernel {}",
        n,
        node,
        into.target(),
        abgroups::hom_image(into),
        abgroups::hom_kernel(out)
    )
}

/// A stage `δ_k : M_{k-1} -> M_k` of the skeletal cochain complex, with the
/// presentations of both ends.
pub struct SkeletalCoboundary {
    pub source: GroupWithPresentation,
    pub target: GroupWithPresentation,
    pub map: AbHom,
}

fn trivial_presentation(coeff: &FgAbGroup) -> Result<GroupWithPresentation, Error> {
    homology::kernel_mod_image(&IntMatrix::zeros(0, 0), &IntMatrix::zeros(0, 0), coeff)
}

/// `G^cells` with every cochain a generator lift.
fn free_cochains(cells: usize, coeff: &FgAbGroup) -> Result<GroupWithPresentation, Error> {
    homology::kernel_mod_image(&IntMatrix::zeros(0, cells), &IntMatrix::zeros(cells, 0), coeff)
}

fn cohom_of(x: &CwComplex, n: i64, coeff: &FgAbGroup) -> Result<GroupWithPresentation, Error> {
    homology::cohomology(x, n, coeff, true)
}

/// `X_k / X_{k-1}`; the 0-th layer is the discrete vertex set.
fn layer(x: &CwComplex, k: usize) -> Result<CwComplex, Error> {
    let sk = x.skeleton(k)?;
    if k == 0 {
        Ok(sk)
    } else {
        sk.quotient_by_skeleton(k - 1)
    }
}

/// The middle group `M_k`: `G` in degree `-1`, vertex cochains `G^{c_0}` in
/// degree 0 (the augmented slot), `h^k(X_k / X_{k-1})` above.
pub fn skeletal_group(x: &CwComplex, coeff: &FgAbGroup, k: i64) -> Result<GroupWithPresentation, Error> {
    match k {
        _ if k < -1 || k > x.dim() as i64 => trivial_presentation(coeff),
        -1 => free_cochains(1, coeff),
        0 => free_cochains(x.cell_count(0), coeff),
        _ => cohom_of(&layer(x, k as usize)?, k, coeff),
    }
}

/// `δ_k : M_{k-1} -> M_k`. In degree 0 it is the diagonal `G -> G^{c_0}`; in
/// degree `k >= 1` it is the connecting map of
/// `X_{k-1}/X_{k-2} -> X_k/X_{k-2}`, carried over to `h^k(X_k/X_{k-1})` through
/// the inverse of the cone-collapse isomorphism.
pub fn skeletal_coboundary(x: &CwComplex, coeff: &FgAbGroup, k: i64) -> Result<SkeletalCoboundary, Error> {
    x.require_valid()?;
    let dim = x.dim() as i64;
    if k <= -1 || k > dim {
        let source = skeletal_group(x, coeff, k - 1)?;
        let target = skeletal_group(x, coeff, k)?;
        let map = AbHom::zero(source.group(), target.group());
        return Ok(SkeletalCoboundary { source, target, map });
    }
    if k == 0 {
        let source = skeletal_group(x, coeff, -1)?;
        let target = skeletal_group(x, coeff, 0)?;
        let ones = IntMatrix::from_fn(x.cell_count(0), 1, |_, _| BigInt::one());
        let map = homology::hom_from_cell_map(&source, &target, &ones)?;
        return Ok(SkeletalCoboundary { source, target, map });
    }

    let k = k as usize;
    // Y = X_k / X_{k-2}, or X_1 itself when k = 1
    let y = if k == 1 {
        x.skeleton(1)?
    } else {
        x.skeleton(k)?.quotient_by_skeleton(k - 2)?
    };
    let incl = maps::skeleton_inclusion(&y, k - 1)?;
    let (cone, collapse) = maps::cone_collapse(&y, k - 1)?;
    let gamma = maps::connecting_map_with(&incl, &cone, k as i64 - 1, coeff)?;
    let (target, _, collapse_star) =
        maps::induced_with_presentations(&collapse, k as i64, coeff, Variant::Cohomology, true)?;
    let back = abgroups::invert_iso(&collapse_star).map_err(|_| Error::IsoTransportFailure)?;
    let delta = abgroups::compose(&back, &gamma)?;

    if k == 1 {
        // vertex cochains -> relative values modulo constants
        let source = skeletal_group(x, coeff, 0)?;
        let h0 = cohom_of(incl.source(), 0, coeff)?;
        let proj = homology::hom_from_cell_map(&source, &h0, &IntMatrix::identity(x.cell_count(0)))?;
        let map = abgroups::compose(&delta, &proj)?;
        Ok(SkeletalCoboundary { source, target, map })
    } else {
        let source = cohom_of(incl.source(), k as i64 - 1, coeff)?;
        Ok(SkeletalCoboundary {
            source,
            target,
            map: delta,
        })
    }
}

/// Parity union-find over cells: `find` returns the root and the sign of a
/// cell relative to it.
struct SignClasses {
    parent: Vec<usize>,
    flip: Vec<bool>,
}

impl SignClasses {
    fn new(n: usize) -> Self {
        SignClasses {
            parent: (0..n).collect(),
            flip: vec![false; n],
        }
    }

    fn find(&mut self, i: usize) -> (usize, bool) {
        if self.parent[i] == i {
            return (i, false);
        }
        let (root, f) = self.find(self.parent[i]);
        self.parent[i] = root;
        self.flip[i] ^= f;
        (root, self.flip[i])
    }

    /// Records `sign(i) * sign(j) = -1` if `opposite`, `+1` otherwise. False on
    /// contradiction.
    fn relate(&mut self, i: usize, j: usize, opposite: bool) -> bool {
        let (ri, fi) = self.find(i);
        let (rj, fj) = self.find(j);
        if ri == rj {
            return fi ^ fj == opposite;
        }
        self.parent[ri] = rj;
        self.flip[ri] = fi ^ fj ^ opposite;
        true
    }
}

fn congruent(a: &BigInt, b: &BigInt, d: &BigInt) -> bool {
    if d.is_zero() {
        a == b
    } else {
        (a - b).mod_floor(d).is_zero()
    }
}

/// Compares the cell-level matrix of `δ_{n+1}` with `B_{n+1}^T`, allowing an
/// independent sign for every cell on each side.
fn compare_with_boundary(x: &CwComplex, delta: &SkeletalCoboundary, n: usize, report: &mut CheckReport) -> Result<(), Error> {
    let b = x.boundary(n as i64 + 1);
    let (cn, cn1) = (x.cell_count(n as i64), x.cell_count(n as i64 + 1));
    let factors = delta.source.factor_orders().to_vec();
    let mut signs = SignClasses::new(cn + cn1);
    for (block, d) in factors.iter().enumerate() {
        for j in 0..cn {
            let mut e = vec![BigInt::zero(); cn * factors.len()];
            e[block * cn + j] = BigInt::one();
            let coords = delta.source.coordinates(&e)?;
            let mut image = delta.target.element(&delta.map.apply(&coords));
            homology::reduce_blocks(&mut image, &factors, cn1);
            for i in 0..cn1 {
                let got = &image[block * cn1 + i];
                let want = &b[(j, i)];
                let plus = congruent(got, want, d);
                let minus = congruent(got, &-want, d);
                let consistent = match (plus, minus) {
                    (true, true) => true,
                    (true, false) => signs.relate(j, cn + i, false),
                    (false, true) => signs.relate(j, cn + i, true),
                    (false, false) => false,
                };
                if !consistent {
                    report.fail(format!(
                        "n={}: delta entry ({}, {}) is {} but the boundary gives {} (factor {})",
                        n, i, j, got, want, d
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Recomputes `h^n(X; G)` as `ker δ_{n+1} / im δ_n` of the skeletal complex and
/// checks it against the cellular group, checks that the layer
/// `X_n / X_{n-1}` looks like a wedge of `c_n` spheres, and checks that
/// `δ_{n+1}` is `B_{n+1}^T` up to signs.
pub fn check_skeletal_reformulation(x: &CwComplex, coeff: &FgAbGroup, n: i64) -> CheckReport {
    let mut report = CheckReport::new("reformulation", x.name(), coeff, n..=n);
    let result = (|| {
        if n < 0 || n > x.dim() as i64 {
            return Err(Error::OutOfRange {
                what: "reformulation dimension",
                value: n,
                max: x.dim() as i64,
            });
        }
        let d_in = skeletal_coboundary(x, coeff, n)?;
        let d_out = skeletal_coboundary(x, coeff, n + 1)?;

        let direct = homology::cohomology(x, n, coeff, true)?.into_group();
        let reformulated = abgroups::subquotient(&d_in.map, &d_out.map)?.group().clone();
        if direct != reformulated {
            report.fail(format!("n={}: ker/im gives {}, cellular gives {}", n, reformulated, direct));
        }

        let cn = x.cell_count(n);
        let expected = coeff.power(cn);
        if d_out.source.group() != &expected {
            report.fail(format!("n={}: layer group {} is not {}", n, d_out.source.group(), expected));
        }
        if n == 0 {
            let h0 = cohom_of(&x.skeleton(0)?, 0, coeff)?.into_group();
            if h0 != coeff.power(cn - 1) {
                report.fail(format!("n=0: reduced H^0 of the vertices is {}", h0));
            }
        } else {
            let q = layer(x, n as usize)?;
            for m in -1..=n + 1 {
                let h = cohom_of(&q, m, coeff)?.into_group();
                if m != n && !h.is_trivial() {
                    report.fail(format!("n={}: H^{} of the layer is {}", n, m, h));
                }
            }
        }

        compare_with_boundary(x, &d_out, n as usize, &mut report)
    })();
    report.finish(result)
}

/// The complexes every check is run over.
pub fn corpus() -> Vec<CwComplex> {
    let mut xs = vec![complex::point()];
    xs.extend((0..=4).map(complex::sphere));
    xs.push(complex::torus());
    xs.push(complex::klein());
    xs.push(complex::surface(2));
    xs.extend((1..=4).map(complex::rp));
    xs.extend((1..=2).map(complex::cp));
    for q in [2, 3, 5] {
        for n in 1..=2 {
            xs.push(complex::moore(q, n));
        }
    }
    xs.extend([2, 3].map(complex::lens));
    xs
}

/// Coefficient groups of the full battery.
pub fn corpus_coefficients() -> Vec<FgAbGroup> {
    vec![
        FgAbGroup::free(1),
        FgAbGroup::cyclic(2),
        FgAbGroup::cyclic(6),
        abgroups::direct_sum(&FgAbGroup::free(1), &FgAbGroup::cyclic(4)),
    ]
}

/// Inclusions of every proper skeleton.
pub fn skeleton_inclusions(x: &CwComplex) -> Result<Vec<ChainMap>, Error> {
    (0..x.dim()).map(|m| maps::skeleton_inclusion(x, m)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Dimension,
    Suspension,
    Wedge,
    Les,
    Reformulation,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["dimension", "suspension", "wedge", "les", "reformulation", "all"];

    pub fn from_name(name: &str) -> Option<Suite> {
        Some(match name {
            "dimension" => Suite::Dimension,
            "suspension" => Suite::Suspension,
            "wedge" => Suite::Wedge,
            "les" => Suite::Les,
            "reformulation" => Suite::Reformulation,
            "all" => Suite::All,
            _ => return None,
        })
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// Default dimension range for `x`: `-1 ..= dim + 2`.
pub fn default_range(x: &CwComplex) -> RangeInclusive<i64> {
    -1..=x.dim() as i64 + 2
}

/// Runs the selected suites on one complex.
pub fn run_complex_suite(x: &CwComplex, coeff: &FgAbGroup, range: RangeInclusive<i64>, suite: Suite) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if suite.includes(Suite::Dimension) {
        out.push(check_dimension(coeff, range.clone()));
    }
    if suite.includes(Suite::Suspension) {
        out.push(check_suspension(x, coeff, range.clone()));
    }
    if suite.includes(Suite::Wedge) {
        out.push(check_wedge(&[x.clone(), complex::sphere(1), x.clone()], coeff, range.clone()));
    }
    if suite.includes(Suite::Les) {
        match skeleton_inclusions(x) {
            Ok(incls) => out.extend(incls.iter().map(|f| check_les_exactness(f, coeff, range.clone()))),
            Err(e) => {
                let mut r = CheckReport::new("les", x.name(), coeff, range.clone());
                r.fail(format!("error: {}", e));
                out.push(r);
            }
        }
    }
    if suite.includes(Suite::Reformulation) {
        for n in 0..=x.dim() as i64 {
            if range.contains(&n) {
                out.push(check_skeletal_reformulation(x, coeff, n));
            }
        }
    }
    out
}

/// Runs the selected suites on one map: exactness of its cofiber sequence and
/// naturality of the suspension isomorphism, plus the complex suites on both
/// ends.
pub fn run_map_suite(f: &ChainMap, coeff: &FgAbGroup, range: RangeInclusive<i64>, suite: Suite) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if suite.includes(Suite::Les) {
        out.push(check_les_exactness(f, coeff, range.clone()));
    }
    if suite.includes(Suite::Suspension) {
        out.push(check_suspension_naturality(f, coeff, range.clone()));
    }
    let inner = if suite == Suite::Les { None } else { Some(suite) };
    if let Some(s) = inner {
        let mut ends: Vec<&CwComplex> = vec![f.source()];
        if !f.target().same_structure(f.source()) {
            ends.push(f.target());
        }
        for x in ends {
            out.extend(run_complex_suite(x, coeff, range.clone(), s).into_iter().filter(|r| r.check != "les"));
        }
    }
    out
}

/// Engine that reports a wrong answer in one place, for negative controls.
pub struct Corrupted<T> {
    pub inner: T,
    /// Answer substituted for `H^degree` of any complex with this name.
    pub subject: String,
    pub degree: i64,
    pub answer: FgAbGroup,
}

impl<T: CohomologyTheory> CohomologyTheory for Corrupted<T> {
    fn reduced_cohomology(&self, x: &CwComplex, n: i64, coeff: &FgAbGroup) -> Result<FgAbGroup, Error> {
        if n == self.degree && x.name() == self.subject {
            return Ok(self.answer.clone());
        }
        self.inner.reduced_cohomology(x, n, coeff)
    }
}

impl<T: CohomologyTheory + ?Sized> CohomologyTheory for Box<T> {
    fn reduced_cohomology(&self, x: &CwComplex, n: i64, coeff: &FgAbGroup) -> Result<FgAbGroup, Error> {
        (**self).reduced_cohomology(x, n, coeff)
    }
}
