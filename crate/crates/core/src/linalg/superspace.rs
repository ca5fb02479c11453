use std::fmt;
use std::ops::Add;

use serde::Serialize;

/// ℤ₂-degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        Parity::from_bit(!self.is_odd())
    }

    /// True when both are odd, i.e. the Koszul sign `(-1)^{|a||b|}` is −1.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != rhs.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_odd() { "1" } else { "0" })
    }
}

/// A ℤ₂-graded vector space with a labelled homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperVectorSpace {
    basis: Vec<(String, Parity)>,
}

impl SuperVectorSpace {
    pub fn new(basis: Vec<(String, Parity)>) -> Self {
        SuperVectorSpace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dim_even(&self) -> usize {
        self.basis.iter().filter(|(_, p)| !p.is_odd()).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.dim() - self.dim_even()
    }

    /// `dim V₀ − dim V₁`.
    pub fn superdimension(&self) -> i64 {
        self.dim_even() as i64 - self.dim_odd() as i64
    }

    pub fn parity(&self, index: usize) -> Parity {
        self.basis[index].1
    }

    pub fn label(&self, index: usize) -> &str {
        &self.basis[index].0
    }

    pub fn basis(&self) -> &[(String, Parity)] {
        &self.basis
    }

    pub fn parities(&self) -> impl Iterator<Item = Parity> + '_ {
        self.basis.iter().map(|(_, p)| *p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn superdimension_counts() {
        let v = SuperVectorSpace::new(vec![
            ("a".into(), Parity::Even),
            ("b".into(), Parity::Odd),
            ("c".into(), Parity::Odd),
        ]);
        assert_eq!(v.dim_even() + v.dim_odd(), v.dim());
        assert_eq!(v.superdimension(), -1);
    }

    #[test]
    fn parity_arithmetic() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Odd + Parity::Even, Parity::Odd);
        assert!(Parity::Odd.koszul(Parity::Odd));
        assert!(!Parity::Odd.koszul(Parity::Even));
    }
}
