//! Standard tableaux of skew shifted shapes and several ways of counting
//! them: direct backtracking over cover chains, the excited-diagram hook
//! formula, the memoized cover recursion, and the classical product formula
//! for straight shapes.

use std::collections::BTreeMap;

use num::{BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::excited::enumerate_excited;
use crate::shapes::{Cell, DiagramKind, StrictPartition};

/// A standard tableau of the skew shape `lambda / mu`, recorded as the order
/// in which cells are added along a chain of strict partitions. Cells are in
/// type-B coordinates; entry `m` sits at `order[m - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewSYT {
    pub lambda: StrictPartition,
    pub mu: StrictPartition,
    pub order: Vec<Cell>,
}

impl SkewSYT {
    /// Contents of the cells in entry order, in the coordinates of the given
    /// diagram kind.
    pub fn content_sequence(&self, kind: DiagramKind) -> Vec<u32> {
        self.order
            .iter()
            .map(|c| c.content() as u32 + kind.shift())
            .collect()
    }
}

fn added_cell(prev: &StrictPartition, next: &StrictPartition) -> Cell {
    for r in 1..=next.len() {
        if next.part(r) != prev.part(r) {
            return Cell { row: r, col: next.part(r) + r - 1 };
        }
    }
    unreachable!("cover adds a cell");
}

/// All standard tableaux of `lambda / mu`, as chains of strict partitions.
pub fn enumerate_syt(lambda: &StrictPartition, mu: &StrictPartition) -> Result<Vec<SkewSYT>> {
    if !lambda.contains(mu) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut order = Vec::new();
    fn go(
        lambda: &StrictPartition,
        mu: &StrictPartition,
        current: &StrictPartition,
        order: &mut Vec<Cell>,
        out: &mut Vec<SkewSYT>,
    ) {
        if current == lambda {
            out.push(SkewSYT {
                lambda: lambda.clone(),
                mu: mu.clone(),
                order: order.clone(),
            });
            return;
        }
        for nu in lambda.covers_within(current) {
            order.push(added_cell(current, &nu));
            go(lambda, mu, &nu, order, out);
            order.pop();
        }
    }
    go(lambda, mu, mu, &mut order, &mut out);
    Ok(out)
}

/// Counts standard tableaux by backtracking over cover chains.
pub fn f_backtrack(lambda: &StrictPartition, mu: &StrictPartition) -> BigUint {
    if !lambda.contains(mu) {
        return BigUint::zero();
    }
    fn go(lambda: &StrictPartition, current: &StrictPartition) -> BigUint {
        if current == lambda {
            return BigUint::one();
        }
        lambda
            .covers_within(current)
            .iter()
            .map(|nu| go(lambda, nu))
            .sum()
    }
    go(lambda, mu)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Counts standard tableaux through the excited-diagram hook formula:
/// `n!` times the sum over excited diagrams of their hook products, divided
/// by the hook product of the whole diagram. Fails if the division is not
/// exact.
pub fn f_naruse(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: DiagramKind,
) -> Result<BigUint> {
    if !lambda.contains(mu) {
        return Ok(BigUint::zero());
    }
    let n = lambda.size() - mu.size();
    let numerator: BigUint = enumerate_excited(lambda, mu, kind)
        .iter()
        .map(|d| d.hook_product())
        .sum::<BigUint>()
        * factorial(n);
    let denominator: BigUint = lambda
        .diagram(kind)
        .into_iter()
        .map(|c| BigUint::from(lambda.hook_length(kind, c).expect("cell inside")))
        .product();
    let (q, r) = num::Integer::div_rem(&numerator, &denominator);
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "hook formula for {lambda}/{mu} ({kind}) does not divide exactly"
        )));
    }
    Ok(q)
}

/// Counts standard tableaux by the memoized cover recursion
/// `f(sigma) = sum of f(nu)` over one-cell extensions of `sigma` in `lambda`.
pub fn f_recursive(lambda: &StrictPartition, mu: &StrictPartition) -> BigUint {
    if !lambda.contains(mu) {
        return BigUint::zero();
    }
    fn go(
        lambda: &StrictPartition,
        current: &StrictPartition,
        memo: &mut BTreeMap<Vec<u32>, BigUint>,
    ) -> BigUint {
        if current == lambda {
            return BigUint::one();
        }
        if let Some(v) = memo.get(current.parts()) {
            return v.clone();
        }
        let total: BigUint = lambda
            .covers_within(current)
            .iter()
            .map(|nu| go(lambda, nu, memo))
            .sum();
        memo.insert(current.parts().to_vec(), total.clone());
        total
    }
    go(lambda, mu, &mut BTreeMap::new())
}

/// The product formula for straight shifted shapes: `n!` divided by the
/// type-B hook product.
pub fn f_classical(lambda: &StrictPartition) -> Result<BigUint> {
    let denominator: BigUint = lambda
        .diagram(DiagramKind::B)
        .into_iter()
        .map(|c| BigUint::from(lambda.hook_length(DiagramKind::B, c).expect("cell inside")))
        .product();
    let (q, r) = num::Integer::div_rem(&factorial(lambda.size()), &denominator);
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "hook product of {lambda} does not divide exactly"
        )));
    }
    Ok(q)
}

/// The ordinary hook length formula for an unshifted straight shape given by
/// weakly decreasing row lengths.
pub fn f_straight_shape(rows: &[u32]) -> Result<BigUint> {
    for w in rows.windows(2) {
        if w[0] < w[1] {
            return Err(Error::Parse(
                format!("{rows:?}"),
                "row lengths must be weakly decreasing",
            ));
        }
    }
    let rows: Vec<u32> = rows.iter().copied().filter(|&r| r > 0).collect();
    let n: u64 = rows.iter().map(|&r| r as u64).sum();
    let col_len = |j: u32| rows.iter().filter(|&&r| r >= j).count() as u64;
    let mut denominator = BigUint::one();
    for (i, &r) in rows.iter().enumerate() {
        for j in 1..=r {
            let hook = (r - j) as u64 + col_len(j) - i as u64;
            denominator *= BigUint::from(hook);
        }
    }
    let (q, rem) = num::Integer::div_rem(&factorial(n), &denominator);
    if !rem.is_zero() {
        return Err(Error::Invariant(format!(
            "hook product of {rows:?} does not divide exactly"
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn straight_shape_counts() {
        assert_eq!(f_classical(&p("42")).unwrap(), BigUint::from(5u32));
        assert_eq!(f_classical(&p("1")).unwrap(), BigUint::one());
        assert_eq!(f_classical(&p("[]")).unwrap(), BigUint::one());
        assert_eq!(f_backtrack(&p("42"), &p("[]")), BigUint::from(5u32));
    }

    #[test]
    fn skew_counts_agree_across_routes() {
        let cases = [("432", "2"), ("543", "2"), ("42", "[]"), ("531", "31"), ("4321", "21")];
        for (l, m) in cases {
            let l = p(l);
            let m = p(m);
            let back = f_backtrack(&l, &m);
            assert_eq!(back, f_recursive(&l, &m), "{l}/{m}");
            assert_eq!(back, BigUint::from(enumerate_syt(&l, &m).unwrap().len()));
            for kind in DiagramKind::BOTH {
                assert_eq!(back, f_naruse(&l, &m, kind).unwrap(), "{l}/{m} {kind}");
            }
        }
        assert_eq!(f_backtrack(&p("432"), &p("2")), BigUint::from(12u32));
        assert_eq!(f_backtrack(&p("543"), &p("2")), BigUint::from(110u32));
    }

    #[test]
    fn empty_and_degenerate_shapes() {
        let l = p("321");
        assert_eq!(f_backtrack(&l, &l), BigUint::one());
        assert_eq!(f_naruse(&l, &l, DiagramKind::B).unwrap(), BigUint::one());
        // mu not contained in lambda counts zero tableaux.
        assert_eq!(f_backtrack(&p("21"), &p("3")), BigUint::zero());
        assert_eq!(f_naruse(&p("21"), &p("3"), DiagramKind::D).unwrap(), BigUint::zero());
        assert!(enumerate_syt(&p("21"), &p("3")).unwrap().is_empty());
    }

    #[test]
    fn staircase_skew_matches_unshifted_shape() {
        // Removing the staircase from a shifted shape leaves column-shifted
        // copies of an ordinary shape with the same chain structure.
        let pairs = [("531", "321", vec![2, 1]), ("642", "321", vec![3, 2, 1]), ("4321", "4321", vec![])];
        for (l, m, rows) in pairs {
            let expect = f_straight_shape(&rows).unwrap();
            assert_eq!(f_backtrack(&p(l), &p(m)), expect, "{l}/{m}");
        }
    }

    #[test]
    fn tableau_content_sequences() {
        let tableaux = enumerate_syt(&p("21"), &p("[]")).unwrap();
        assert_eq!(tableaux.len(), 1);
        let t = &tableaux[0];
        assert_eq!(t.order, vec![Cell { row: 1, col: 1 }, Cell { row: 1, col: 2 }, Cell { row: 2, col: 2 }]);
        assert_eq!(t.content_sequence(DiagramKind::B), vec![0, 1, 0]);
        assert_eq!(t.content_sequence(DiagramKind::D), vec![1, 2, 1]);
    }
}
