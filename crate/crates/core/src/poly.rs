//! Sparse multivariate polynomials with exact integer coefficients, the hook
//! polynomials attached to cells, and the identities they satisfy: the cover
//! recursion over bicolored tableaux, its content-weighted refinement, and
//! the weighted tableau sum.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::counting::enumerate_syt;
use crate::error::{Error, Result};
use crate::excited::enumerate_excited;
use crate::shapes::{Cell, DiagramKind, StrictPartition};

/// Which letter the variables of a polynomial use. `X` indexes shape
/// variables by row or column, `Z` indexes content weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarFamily {
    X,
    Z,
}

impl VarFamily {
    fn letter(self) -> char {
        match self {
            VarFamily::X => 'x',
            VarFamily::Z => 'z',
        }
    }
}

/// A power product of variables, indexed by nonnegative integers. Ordered
/// graded-lexicographically: higher total degree first, ties broken at the
/// smallest variable index where the exponents differ, larger exponent
/// winning.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<u32, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(index: u32) -> Self {
        Monomial(BTreeMap::from([(index, 1)]))
    }

    pub fn degree(&self) -> u64 {
        self.0.values().map(|&e| e as u64).sum()
    }

    pub fn exponents(&self) -> &BTreeMap<u32, u32> {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    // Exponents add when monomials multiply.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(mut self, rhs: Monomial) -> Monomial {
        for (v, e) in rhs.0 {
            *self.0.entry(v).or_insert(0) += e;
        }
        self
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let vars: std::collections::BTreeSet<u32> =
            self.0.keys().chain(other.0.keys()).copied().collect();
        for v in vars {
            let a = self.0.get(&v).copied().unwrap_or(0);
            let b = other.0.get(&v).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial stored as monomial-to-coefficient map without zero terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    pub family: VarFamily,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(family: VarFamily) -> Self {
        SparsePoly { family, terms: BTreeMap::new() }
    }

    pub fn constant(family: VarFamily, c: impl Into<BigInt>) -> Self {
        let mut p = SparsePoly::zero(family);
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn var(family: VarFamily, index: u32) -> Self {
        let mut p = SparsePoly::zero(family);
        p.add_term(Monomial::var(index), BigInt::one());
        p
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = SparsePoly::zero(VarFamily::X);
        p.add_term(m, BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in descending monomial order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Evaluates at the given variable assignment.
    pub fn specialize(&self, vals: &BTreeMap<u32, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut prod = BigRational::from(c.clone());
            for (&v, &e) in m.exponents() {
                let x = vals.get(&v).ok_or(Error::MissingAssignment(v))?;
                for _ in 0..e {
                    prod *= x;
                }
            }
            total += prod;
        }
        Ok(total)
    }

    /// Evaluates at an integer assignment.
    pub fn specialize_int(&self, vals: &BTreeMap<u32, i64>) -> Result<BigInt> {
        let rat: BTreeMap<u32, BigRational> = vals
            .iter()
            .map(|(&v, &x)| (v, BigRational::from(BigInt::from(x))))
            .collect();
        let r = self.specialize(&rat)?;
        debug_assert!(r.is_integer());
        Ok(r.to_integer())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.family, rhs.family, "mixed variable families");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.family, rhs.family, "mixed variable families");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.family);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.family, rhs.family, "mixed variable families");
        let mut out = SparsePoly::zero(self.family);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.clone() * mb.clone(), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = self.family.letter();
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || m.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            let mut first = !show_coeff;
            for (&v, &e) in m.exponents() {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{letter}{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Serializes as a list of `{"m": {"<var>": exp, ...}, "c": "<coeff>"}`
/// objects in descending monomial order, coefficients as decimal strings.
impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a Monomial, &'a BigInt);

        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(2))?;
                struct Expo<'a>(&'a Monomial);
                impl Serialize for Expo<'_> {
                    fn serialize<S: Serializer>(
                        &self,
                        serializer: S,
                    ) -> std::result::Result<S::Ok, S::Error> {
                        let mut m = serializer.serialize_map(Some(self.0.exponents().len()))?;
                        for (v, e) in self.0.exponents() {
                            m.serialize_entry(&v.to_string(), e)?;
                        }
                        m.end()
                    }
                }
                map.serialize_entry("m", &Expo(self.0))?;
                map.serialize_entry("c", &self.1.to_string())?;
                map.end()
            }
        }

        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms_desc() {
            seq.serialize_element(&Term(m, c))?;
        }
        seq.end()
    }
}

/// The hook length of a cell written in shape variables: the row variable
/// alone on the type-B diagonal, otherwise row plus column variable.
pub fn hook_poly(kind: DiagramKind, cell: Cell) -> SparsePoly {
    let row = SparsePoly::var(VarFamily::X, cell.row);
    if kind == DiagramKind::B && cell.row == cell.col {
        row
    } else {
        &row + &SparsePoly::var(VarFamily::X, cell.col)
    }
}

/// Sum over all excited diagrams of `lambda / mu` of the product of cell hook
/// polynomials; equivalently, the total weight of all bicolored tableaux of
/// `mu` inside `lambda`.
pub fn excited_enumerator(
    mu: &StrictPartition,
    lambda: &StrictPartition,
    kind: DiagramKind,
) -> SparsePoly {
    enumerate_excited(lambda, mu, kind)
        .into_par_iter()
        .map(|d| {
            d.cells()
                .iter()
                .map(|&c| hook_poly(kind, c))
                .fold(SparsePoly::constant(VarFamily::X, 1), |acc, h| &acc * &h)
        })
        .reduce(|| SparsePoly::zero(VarFamily::X), |a, b| &a + &b)
}

/// Sum of the variables indexed by the skew index set of `lambda` over `mu`.
pub fn w_linear(
    mu: &StrictPartition,
    lambda: &StrictPartition,
    kind: DiagramKind,
) -> SparsePoly {
    let mut p = SparsePoly::zero(VarFamily::X);
    for k in lambda.w_set(kind, mu) {
        p.add_term(Monomial::var(k), BigInt::one());
    }
    p
}

pub fn cover_identity_lhs(
    mu: &StrictPartition,
    lambda: &StrictPartition,
    kind: DiagramKind,
) -> SparsePoly {
    &w_linear(mu, lambda, kind) * &excited_enumerator(mu, lambda, kind)
}

pub fn cover_identity_rhs(
    mu: &StrictPartition,
    lambda: &StrictPartition,
    kind: DiagramKind,
) -> SparsePoly {
    lambda
        .covers_within(mu)
        .par_iter()
        .map(|nu| excited_enumerator(nu, lambda, kind))
        .reduce(|| SparsePoly::zero(VarFamily::X), |a, b| &a + &b)
}

/// The cover recursion: multiplying the enumerator of `mu` by the linear
/// index sum equals the sum of the enumerators of all one-cell extensions of
/// `mu` inside `lambda`.
pub fn verify_cover_identity(
    mu: &StrictPartition,
    lambda: &StrictPartition,
    kind: DiagramKind,
) -> bool {
    cover_identity_lhs(mu, lambda, kind) == cover_identity_rhs(mu, lambda, kind)
}

/// Hook length refined by contents: each hook cell contributes the content
/// variable `z_c`, doubled cells twice.
pub fn weighted_hook(
    lambda: &StrictPartition,
    kind: DiagramKind,
    cell: Cell,
) -> Result<SparsePoly> {
    let mut p = SparsePoly::zero(VarFamily::Z);
    for u in lambda.hook_cells(kind, cell)? {
        p.add_term(Monomial::var(u.content() as u32), BigInt::one());
    }
    Ok(p)
}

/// The content-weighted analogue of the shape variables: consecutive content
/// sums for rows, negated prefix sums past the rows. Specializing every
/// variable to 1 recovers the integer variables.
pub fn x_var_z(lambda: &StrictPartition, kind: DiagramKind, i: u32) -> SparsePoly {
    assert!(i >= 1, "variable indices start at 1");
    let shift = kind.shift();
    let mut p = SparsePoly::zero(VarFamily::Z);
    if i <= lambda.len() {
        for c in shift..lambda.part(i) + shift {
            p.add_term(Monomial::var(c), BigInt::one());
        }
    } else {
        let cols = lambda.col_len_for(kind, i);
        for c in shift..i - cols {
            p.add_term(Monomial::var(c), -BigInt::one());
        }
    }
    p
}

/// Sum of content variables over the skew cells.
pub fn skew_content_sum(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: DiagramKind,
) -> SparsePoly {
    let mut p = SparsePoly::zero(VarFamily::Z);
    for u in lambda.skew_cells(kind, mu) {
        p.add_term(Monomial::var(u.content() as u32), BigInt::one());
    }
    p
}

/// Sum over excited diagrams of the product of weighted hooks of their cells.
pub fn weighted_enumerator(
    mu: &StrictPartition,
    lambda: &StrictPartition,
    kind: DiagramKind,
) -> SparsePoly {
    enumerate_excited(lambda, mu, kind)
        .into_par_iter()
        .map(|d| {
            d.cells()
                .iter()
                .map(|&c| weighted_hook(lambda, kind, c).expect("cell inside"))
                .fold(SparsePoly::constant(VarFamily::Z, 1), |acc, h| &acc * &h)
        })
        .reduce(|| SparsePoly::zero(VarFamily::Z), |a, b| &a + &b)
}

/// Content-weighted cover recursion, together with the weighted index-sum
/// identity it rests on.
pub fn verify_weighted_recursion(
    mu: &StrictPartition,
    lambda: &StrictPartition,
    kind: DiagramKind,
) -> bool {
    let content_sum = skew_content_sum(lambda, mu, kind);
    let mut index_sum = SparsePoly::zero(VarFamily::Z);
    for k in lambda.w_set(kind, mu) {
        index_sum = &index_sum + &x_var_z(lambda, kind, k);
    }
    if content_sum != index_sum {
        return false;
    }
    let lhs = &content_sum * &weighted_enumerator(mu, lambda, kind);
    let rhs = lambda
        .covers_within(mu)
        .par_iter()
        .map(|nu| weighted_enumerator(nu, lambda, kind))
        .reduce(|| SparsePoly::zero(VarFamily::Z), |a, b| &a + &b);
    lhs == rhs
}

/// Both sides of the weighted tableau sum at a concrete assignment of the
/// content variables: over standard tableaux, the product of reciprocals of
/// suffix content sums; over excited diagrams, the product of reciprocals of
/// weighted hooks outside the diagram.
pub fn z_identity_sides(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: DiagramKind,
    vals: &BTreeMap<u32, BigRational>,
) -> Result<(BigRational, BigRational)> {
    let z = |c: u32| -> Result<BigRational> {
        vals.get(&c).cloned().ok_or(Error::MissingAssignment(c))
    };
    let mut lhs = BigRational::zero();
    for t in enumerate_syt(lambda, mu)? {
        let contents = t.content_sequence(kind);
        let mut suffix = BigRational::zero();
        let mut product = BigRational::one();
        for &c in contents.iter().rev() {
            suffix += z(c)?;
            if suffix.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            product *= suffix.recip();
        }
        lhs += product;
    }
    let diagram = lambda.diagram(kind);
    let mut rhs = BigRational::zero();
    for d in enumerate_excited(lambda, mu, kind) {
        let mut product = BigRational::one();
        for &u in diagram.iter() {
            if d.contains_cell(u) {
                continue;
            }
            let h = weighted_hook(lambda, kind, u)?.specialize(vals)?;
            if h.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            product *= h.recip();
        }
        rhs += product;
    }
    Ok((lhs, rhs))
}

pub fn verify_z_identity(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: DiagramKind,
    vals: &BTreeMap<u32, BigRational>,
) -> Result<bool> {
    let (lhs, rhs) = z_identity_sides(lambda, mu, kind, vals)?;
    Ok(lhs == rhs)
}

/// Assigns `z_c = q^c` for all contents appearing in the diagram of `lambda`.
pub fn geometric_assignment(
    lambda: &StrictPartition,
    q: &BigRational,
) -> BTreeMap<u32, BigRational> {
    let max = lambda.first() + 1;
    let mut vals = BTreeMap::new();
    let mut power = BigRational::one();
    for c in 0..=max {
        vals.insert(c, power.clone());
        power *= q;
    }
    vals
}
