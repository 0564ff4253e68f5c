//! Coefficient maps of chromatic symmetric functions in the power-sum basis.
//!
//! [`PExpansionX`] is indexed by integer partitions `λ` (the commuting
//! function `X_G`), [`PExpansionY`] by set partitions `π` of the vertex set
//! (the non-commuting `Y_G`). Zero coefficients are never stored.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partition::{IntegerPartition, SetPartition};
use crate::poly::IntPolynomial;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PExpansionX {
    terms: BTreeMap<IntegerPartition, BigInt>,
}

impl PExpansionX {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, lambda: IntegerPartition, coeff: BigInt) {
        add_into(&mut self.terms, lambda, coeff);
    }

    pub fn coeff(&self, lambda: &IntegerPartition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in reverse lexicographic order of `λ`: `(n)` first, `(1^n)` last.
    pub fn iter(&self) -> impl Iterator<Item = (&IntegerPartition, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Replace each `p_λ` by `x^ℓ(λ)`.
    pub fn specialize(&self) -> IntPolynomial {
        self.terms
            .iter()
            .map(|(lambda, c)| IntPolynomial::monomial(c.clone(), lambda.len()))
            .sum()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PExpansionY {
    terms: BTreeMap<SetPartition, BigInt>,
}

impl PExpansionY {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, pi: SetPartition, coeff: BigInt) {
        add_into(&mut self.terms, pi, coeff);
    }

    pub fn coeff(&self, pi: &SetPartition) -> BigInt {
        self.terms.get(pi).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical set-partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&SetPartition, &BigInt)> {
        self.terms.iter()
    }

    /// Forget the vertex labels: `p_π ↦ p_{shape(π)}`.
    pub fn collapse_by_shape(&self) -> PExpansionX {
        let mut out = PExpansionX::new();
        for (pi, c) in &self.terms {
            out.add_term(pi.shape(), c.clone());
        }
        out
    }

    /// Replace each `p_π` by `x^ℓ(π)`.
    pub fn specialize(&self) -> IntPolynomial {
        self.terms
            .iter()
            .map(|(pi, c)| IntPolynomial::monomial(c.clone(), pi.len()))
            .sum()
    }
}

/// Writes `c p_key` terms in iteration order, e.g. `2p(3) - 3p(2,1) + p(1,1,1)`.
fn write_terms<'a, K: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let magnitude = c.abs();
        match (first, c.is_negative()) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        if !magnitude.is_one() {
            write!(f, "{magnitude}")?;
        }
        write!(f, "p{key}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for PExpansionX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter())
    }
}

impl fmt::Display for PExpansionY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter())
    }
}

fn add_into<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn cancelled_terms_disappear() {
        let mut y = PExpansionY::new();
        y.add_term(p("{{1,2}}"), BigInt::from(3));
        y.add_term(p("{{1,2}}"), BigInt::from(-3));
        y.add_term(p("{{1},{2}}"), BigInt::zero());
        assert!(y.is_empty());
    }

    #[test]
    fn collapse_and_specialize() {
        let mut y = PExpansionY::new();
        y.add_term(p("{{1,2},{3}}"), BigInt::from(-1));
        y.add_term(p("{{1,3},{2}}"), BigInt::from(-1));
        y.add_term(p("{{1},{2},{3}}"), BigInt::from(1));
        let x = y.collapse_by_shape();
        assert_eq!(
            x.coeff(&IntegerPartition::new(vec![2, 1]).unwrap()),
            BigInt::from(-2)
        );
        assert_eq!(x.len(), 2);
        assert_eq!(y.specialize(), IntPolynomial::from_i64s(&[0, 0, -2, 1]));
        assert_eq!(x.specialize(), y.specialize());
        let order: Vec<String> = x.iter().map(|(l, _)| l.to_string()).collect();
        assert_eq!(order, ["(2,1)", "(1,1,1)"]);
        assert_eq!(x.to_string(), "-2p(2,1) + p(1,1,1)");
        assert_eq!(PExpansionX::new().to_string(), "0");
    }
}
