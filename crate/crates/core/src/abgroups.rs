//! Finitely generated abelian groups in invariant-factor form and
//! homomorphisms between them.
//!
//! A group `Z^r + Z/d1 + ... + Z/dk` with `d1 | d2 | ... | dk`, every `di >= 2`,
//! has canonical generators ordered free-first, then torsion in chain order.
//! Homomorphisms are integer matrices against those generators.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::intmat::{self, IntMatrix, LatticeQuotient};

/// `Z^rank + Z/t1 + ... + Z/tk` with `t1 | t2 | ... | tk` and every `ti >= 2`.
///
/// Equality is structural; the representation is unique.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FgAbGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/d`. `d = 0` gives `Z` and `d = ±1` the trivial group.
    pub fn cyclic(d: impl Into<BigInt>) -> Self {
        normalize_diagonal(&[d.into()], 0)
    }

    /// Assembles a group from parts already known to be canonical.
    pub(crate) fn from_canonical_parts(rank: usize, torsion: Vec<BigInt>) -> Self {
        debug_assert!(is_divisibility_chain(&torsion));
        FgAbGroup { rank, torsion }
    }

    /// Validating constructor: the torsion list must already be a divisibility
    /// chain of integers `>= 2`.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self, Error> {
        if !is_divisibility_chain(&torsion) {
            return Err(Error::InvalidParameter(
                "torsion must be a divisibility chain of integers >= 2",
            ));
        }
        Ok(FgAbGroup { rank, torsion })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Cardinality, if finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Number of canonical generators.
    pub fn num_generators(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Order of each canonical generator, `0` standing for infinite order.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.rank];
        v.extend(self.torsion.iter().cloned());
        v
    }

    /// The cyclic summands as orders (`0` for `Z`), free part first. Same as
    /// [`generator_orders`](Self::generator_orders).
    pub fn cyclic_factors(&self) -> Vec<BigInt> {
        self.generator_orders()
    }

    /// Columns generate the relation lattice: one column `d e_i` per torsion
    /// generator `i`.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.num_generators();
        let mut m = IntMatrix::zeros(n, self.torsion.len());
        for (k, d) in self.torsion.iter().enumerate() {
            m[(self.rank + k, k)] = d.clone();
        }
        m
    }

    /// `n` copies of `self`.
    pub fn power(&self, n: usize) -> Self {
        let mut diag = Vec::with_capacity(n * self.torsion.len());
        for _ in 0..n {
            diag.extend(self.torsion.iter().cloned());
        }
        normalize_diagonal(&diag, self.rank * n)
    }

    /// Reduces a coordinate vector into canonical range.
    pub fn reduce(&self, coords: &mut [BigInt]) {
        for (c, d) in coords.iter_mut().zip(self.generator_orders()) {
            if d.is_positive() {
                *c = c.mod_floor(&d);
            }
        }
    }
}

fn is_divisibility_chain(t: &[BigInt]) -> bool {
    let two = BigInt::from(2);
    t.iter().all(|d| *d >= two) && t.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}

/// Canonical group `Z^zeros+extra_free + (+) Z/|d|` of a diagonal presentation.
///
/// Units drop out, zeros count as free summands, and the remaining orders are
/// rearranged into invariant factors.
pub fn normalize_diagonal(diagonal: &[BigInt], extra_free: usize) -> FgAbGroup {
    let mut rank = extra_free;
    let mut t: Vec<BigInt> = Vec::new();
    for d in diagonal {
        if d.is_zero() {
            rank += 1;
        } else if !d.magnitude().is_one() {
            t.push(d.abs());
        }
    }
    t.sort();
    // after pass i, t[i] divides every later entry; (a, b) -> (gcd, lcm)
    // preserves Z/a + Z/b up to isomorphism
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[j].is_multiple_of(&t[i]) {
                continue;
            }
            let g = t[i].gcd(&t[j]);
            let l = t[i].lcm(&t[j]);
            t[i] = g;
            t[j] = l;
        }
    }
    t.retain(|d| !d.is_one());
    FgAbGroup { rank, torsion: t }
}

pub fn direct_sum(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let diag: Vec<BigInt> = a.torsion.iter().chain(&b.torsion).cloned().collect();
    normalize_diagonal(&diag, a.rank + b.rank)
}

/// Direct sum of any number of groups; the empty sum is trivial.
pub fn direct_sum_all<'a>(groups: impl IntoIterator<Item = &'a FgAbGroup>) -> FgAbGroup {
    let mut rank = 0;
    let mut diag = Vec::new();
    for g in groups {
        rank += g.rank;
        diag.extend(g.torsion.iter().cloned());
    }
    normalize_diagonal(&diag, rank)
}

/// Prints `Z^2 + Z/2 + (Z/4)^3`; the trivial group prints as `0`.
pub fn format_group(g: &FgAbGroup) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    let mut sep = "";
    match g.rank {
        0 => {}
        1 => {
            out.push('Z');
            sep = " + ";
        }
        r => {
            let _ = write!(out, "Z^{}", r);
            sep = " + ";
        }
    }
    let mut i = 0;
    while i < g.torsion.len() {
        let d = &g.torsion[i];
        let run = g.torsion[i..].iter().take_while(|x| *x == d).count();
        out.push_str(sep);
        if run == 1 {
            let _ = write!(out, "Z/{}", d);
        } else {
            let _ = write!(out, "(Z/{})^{}", d, run);
        }
        sep = " + ";
        i += run;
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_group(self))
    }
}

struct GroupParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl GroupParser<'_> {
    fn err(&self, message: &'static str) -> Error {
        Error::ParseGroup {
            position: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8, message: &'static str) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(message))
        }
    }

    fn number(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(text).expect("decimal digits"))
    }

    fn exponent(&mut self) -> Result<usize, Error> {
        self.skip_ws();
        let at = self.pos;
        let k = self.number()?;
        let k: usize = num_traits::ToPrimitive::to_usize(&k).ok_or(Error::ParseGroup {
            position: at,
            message: "exponent too large",
        })?;
        if k == 0 {
            return Err(Error::ParseGroup {
                position: at,
                message: "exponent must be at least 1",
            });
        }
        Ok(k)
    }

    fn modulus(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let at = self.pos;
        let d = self.number()?;
        if d < BigInt::from(2) {
            return Err(Error::ParseGroup {
                position: at,
                message: "cyclic order must be at least 2",
            });
        }
        Ok(d)
    }

    /// Adds one term to `(rank, torsion)`.
    fn term(&mut self, rank: &mut usize, torsion: &mut Vec<BigInt>) -> Result<(), Error> {
        self.skip_ws();
        if self.eat(b'0') {
            return Ok(());
        }
        if self.eat(b'(') {
            self.expect(b'Z', "expected 'Z'")?;
            self.expect(b'/', "expected '/'")?;
            let d = self.modulus()?;
            self.expect(b')', "expected ')'")?;
            self.expect(b'^', "expected '^'")?;
            let k = self.exponent()?;
            torsion.extend(core::iter::repeat(d).take(k));
            return Ok(());
        }
        self.expect(b'Z', "expected 'Z', '(Z/d)^k' or '0'")?;
        if self.eat(b'^') {
            *rank += self.exponent()?;
        } else if self.eat(b'/') {
            torsion.push(self.modulus()?);
        } else {
            *rank += 1;
        }
        Ok(())
    }
}

/// Parses `term ('+' term)*` with `term := Z | Z^k | Z/d | (Z/d)^k | 0`.
pub fn parse_group(text: &str) -> Result<FgAbGroup, Error> {
    let mut p = GroupParser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut rank = 0;
    let mut torsion = Vec::new();
    p.term(&mut rank, &mut torsion)?;
    loop {
        p.skip_ws();
        if p.pos == p.src.len() {
            break;
        }
        p.expect(b'+', "expected '+' or end of input")?;
        p.term(&mut rank, &mut torsion)?;
    }
    Ok(normalize_diagonal(&torsion, rank))
}

impl FromStr for FgAbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_group(s)
    }
}

/// A homomorphism between two groups written on their canonical generators.
///
/// Column `j` is the image of source generator `j`. Entries in a torsion row are
/// kept reduced into `[0, order)`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    /// Checks shape and well-definedness, and reduces the matrix.
    pub fn new(source: FgAbGroup, target: FgAbGroup, mut matrix: IntMatrix) -> Result<Self, Error> {
        let shape = (target.num_generators(), source.num_generators());
        if matrix.shape() != shape {
            return Err(Error::ShapeMismatch {
                context: "AbHom::new",
                expected: shape,
                found: matrix.shape(),
            });
        }
        let t_orders = target.generator_orders();
        matrix.reduce_rows_mod(&t_orders);
        // a generator of order d must map into the relation lattice when scaled by d
        for (j, d) in source.generator_orders().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            for (i, o) in t_orders.iter().enumerate() {
                let scaled = &matrix[(i, j)] * d;
                let ok = if o.is_zero() {
                    scaled.is_zero()
                } else {
                    scaled.is_multiple_of(o)
                };
                if !ok {
                    return Err(Error::NotWellDefined);
                }
            }
        }
        Ok(AbHom {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        AbHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.num_generators()),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        AbHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.num_generators(), source.num_generators()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Image of an element given in source coordinates, reduced.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.matrix.mul_vec(x);
        self.target.reduce(&mut y);
        y
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &AbHom) -> Result<AbHom, Error> {
        compose(self, first)
    }

    /// Lattice in `Z^source_gens` of lifts of kernel elements; contains the
    /// source relations.
    pub(crate) fn kernel_lattice(&self) -> IntMatrix {
        let s = self.source.num_generators();
        let block = self.matrix.hstack(&self.target.relation_matrix());
        let ker = intmat::kernel_basis(&block);
        let first: Vec<usize> = (0..s).collect();
        ker.select_rows(&first)
    }

    /// Generators in `Z^target_gens` of the lifted image (image plus target relations).
    pub(crate) fn image_lattice(&self) -> IntMatrix {
        self.matrix.hstack(&self.target.relation_matrix())
    }
}

/// `g ∘ f`.
pub fn compose(g: &AbHom, f: &AbHom) -> Result<AbHom, Error> {
    if f.target != g.source {
        return Err(Error::IncompatibleGroups);
    }
    let mut m = &g.matrix * &f.matrix;
    m.reduce_rows_mod(&g.target.generator_orders());
    Ok(AbHom {
        source: f.source.clone(),
        target: g.target.clone(),
        matrix: m,
    })
}

pub fn hom_kernel(h: &AbHom) -> FgAbGroup {
    kernel_quotient(h).group().clone()
}

/// `ker h` with lifts in source coordinates.
pub fn kernel_quotient(h: &AbHom) -> LatticeQuotient {
    let s = h.source.num_generators();
    intmat::quotient_group(s, &h.kernel_lattice(), &h.source.relation_matrix())
        .expect("source relations lie in the kernel of a well-defined homomorphism")
}

pub fn hom_image(h: &AbHom) -> FgAbGroup {
    let t = h.target.num_generators();
    intmat::quotient_group(t, &h.image_lattice(), &h.target.relation_matrix())
        .expect("relations lie in the lifted image")
        .group()
        .clone()
}

pub fn hom_cokernel(h: &AbHom) -> FgAbGroup {
    let t = h.target.num_generators();
    intmat::quotient_group(t, &IntMatrix::identity(t), &h.image_lattice())
        .expect("every lattice lies in the whole space")
        .group()
        .clone()
}

fn same_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.columns().all(|c| intmat::lattice_contains(b, &c))
        && b.columns().all(|c| intmat::lattice_contains(a, &c))
}

/// True iff `im g = ker h` as subgroups of the shared middle group.
pub fn is_exact_pair(g: &AbHom, h: &AbHom) -> Result<bool, Error> {
    if g.target != h.source {
        return Err(Error::IncompatibleGroups);
    }
    Ok(same_lattice(&g.image_lattice(), &h.kernel_lattice()))
}

/// `ker h / im g` for composable `g`, `h` with `h ∘ g = 0`.
pub fn subquotient(g: &AbHom, h: &AbHom) -> Result<LatticeQuotient, Error> {
    if g.target != h.source {
        return Err(Error::IncompatibleGroups);
    }
    let b = g.target.num_generators();
    intmat::quotient_group(b, &h.kernel_lattice(), &g.image_lattice())
}

/// Inverse of an isomorphism.
pub fn invert_iso(h: &AbHom) -> Result<AbHom, Error> {
    if !hom_kernel(h).is_trivial() || !hom_cokernel(h).is_trivial() {
        return Err(Error::NotAnIsomorphism);
    }
    let t = h.target.num_generators();
    let s = h.source.num_generators();
    let block = h.image_lattice();
    let mut cols = Vec::with_capacity(t);
    for j in 0..t {
        let mut e = vec![BigInt::zero(); t];
        e[j] = BigInt::one();
        let sol = intmat::solve(&block, &e).ok_or(Error::NotAnIsomorphism)?;
        cols.push(sol[..s].to_vec());
    }
    AbHom::new(h.target.clone(), h.source.clone(), IntMatrix::from_columns(s, &cols))
}
