//! Root data of gl(m|n) in the ε-basis for the distinguished (upper
//! triangular) Borel subalgebra.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{int, parse_scalar, scalar_string, Parity, Scalar};

/// A weight `Σ cᵢ εᵢ` of gl(m|n), split as `m` even coordinates then `n` odd ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    m: usize,
    n: usize,
    coords: Vec<Scalar>,
}

impl Weight {
    pub fn new(m: usize, n: usize, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != m + n {
            return Err(Error::Parse(format!(
                "expected {} coordinates for gl({m}|{n}), got {}",
                m + n,
                coords.len()
            )));
        }
        Ok(Weight { m, n, coords })
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Weight {
            m,
            n,
            coords: vec![Scalar::zero(); m + n],
        }
    }

    /// Integer weight; panics if the length is wrong.
    pub fn from_ints(m: usize, n: usize, coords: &[i64]) -> Self {
        Weight::new(m, n, coords.iter().map(|&c| int(c)).collect()).expect("weight length")
    }

    /// `ε_index` with a 0-based index.
    pub fn epsilon(m: usize, n: usize, index: usize) -> Self {
        let mut w = Weight::zero(m, n);
        w.coords[index] = int(1);
        w
    }

    /// Parses `a1,...,am|b1,...,bn` with integer or `p/q` entries.
    pub fn parse(text: &str) -> Result<Self> {
        let (left, right) = text
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("weight {text:?} is missing '|'")))?;
        let block = |s: &str| -> Result<Vec<Scalar>> {
            let s = s.trim();
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',').map(parse_scalar).collect()
        };
        let even = block(left)?;
        let odd = block(right)?;
        if even.is_empty() || odd.is_empty() {
            return Err(Error::Parse(format!("weight {text:?} has an empty block")));
        }
        let (m, n) = (even.len(), odd.len());
        Weight::new(m, n, even.into_iter().chain(odd).collect())
    }

    /// Parses and checks the shape against gl(m|n).
    pub fn parse_for(m: usize, n: usize, text: &str) -> Result<Self> {
        let w = Weight::parse(text)?;
        if w.shape() != (m, n) {
            return Err(Error::Parse(format!(
                "weight {text:?} has shape ({}|{}), expected ({m}|{n})",
                w.m, w.n
            )));
        }
        Ok(w)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn even_block(&self) -> &[Scalar] {
        &self.coords[..self.m]
    }

    pub fn odd_block(&self) -> &[Scalar] {
        &self.coords[self.m..]
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if all are integral and fit in `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn scale(&self, factor: &Scalar) -> Weight {
        Weight {
            m: self.m,
            n: self.n,
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    fn check_shape(&self, other: &Weight) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(self.m, self.n, other.m, other.n));
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Scalar]| xs.iter().map(scalar_string).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(self.even_block()), join(self.odd_block()))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Weight::parse(s)
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.shape(), rhs.shape(), "adding weights of different shapes");
        Weight {
            m: self.m,
            n: self.n,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self + &(-rhs)
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            m: self.m,
            n: self.n,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// `(w1, w2) = Σ_{i≤m} w1ᵢ w2ᵢ − Σ_{i>m} w1ᵢ w2ᵢ`.
pub fn bilinear_form(w1: &Weight, w2: &Weight) -> Result<Scalar> {
    w1.check_shape(w2)?;
    let mut acc = Scalar::zero();
    for (i, (a, b)) in w1.coords.iter().zip(&w2.coords).enumerate() {
        if i < w1.m {
            acc += a * b;
        } else {
            acc -= a * b;
        }
    }
    Ok(acc)
}

/// The root `ε_i − ε_j` (0-based indices, `i ≠ j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    m: usize,
    n: usize,
    i: usize,
    j: usize,
}

impl Root {
    pub fn new(m: usize, n: usize, i: usize, j: usize) -> Self {
        assert!(i != j && i < m + n && j < m + n, "invalid root indices");
        Root { m, n, i, j }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit((self.i < self.m) != (self.j < self.m))
    }

    pub fn is_odd(&self) -> bool {
        self.parity().is_odd()
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn to_weight(&self) -> Weight {
        &Weight::epsilon(self.m, self.n, self.i) - &Weight::epsilon(self.m, self.n, self.j)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i + 1, self.j + 1)
    }
}

/// All roots of gl(m|n).
#[derive(Clone, Debug)]
pub struct RootSystemGL {
    m: usize,
    n: usize,
    roots: Vec<Root>,
}

impl RootSystemGL {
    pub fn new(m: usize, n: usize) -> Self {
        let size = m + n;
        let roots = (0..size)
            .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| Root::new(m, n, i, j)))
            .collect();
        RootSystemGL { m, n, roots }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn odd(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_odd())
    }

    /// Roots α with (α, α) = 0.
    pub fn isotropic(&self) -> Vec<Root> {
        self.roots
            .iter()
            .filter(|r| {
                let w = r.to_weight();
                bilinear_form(&w, &w).is_ok_and(|v| v.is_zero())
            })
            .copied()
            .collect()
    }
}

/// ρ with `2ρ = Σ even positive roots − Σ odd positive roots`.
pub fn rho(m: usize, n: usize) -> Weight {
    let system = RootSystemGL::new(m, n);
    let mut two_rho = Weight::zero(m, n);
    for root in system.positive() {
        let w = root.to_weight();
        two_rho = if root.is_odd() { &two_rho - &w } else { &two_rho + &w };
    }
    two_rho.scale(&crate::linalg::frac(1, 2))
}

fn weakly_decreasing(xs: &[Scalar]) -> bool {
    xs.windows(2).all(|w| w[0] >= w[1])
}

/// Integral and weakly decreasing inside each block.
pub fn is_dominant_integral(lambda: &Weight) -> bool {
    lambda.is_integral() && weakly_decreasing(lambda.even_block()) && weakly_decreasing(lambda.odd_block())
}

pub(crate) fn require_dominant(lambda: &Weight) -> Result<()> {
    if is_dominant_integral(lambda) {
        Ok(())
    } else {
        Err(Error::NotDominant(lambda.to_string()))
    }
}

/// Dominant integral weights of gl(m|n) with every entry in `[lo, hi]`,
/// in lexicographic order of the coordinates.
pub fn dominant_weights(m: usize, n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    fn decreasing(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in lo..=hi {
            for mut rest in decreasing(len - 1, lo, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let evens = decreasing(m, lo, hi);
    let odds = decreasing(n, lo, hi);
    let mut out = Vec::with_capacity(evens.len() * odds.len());
    for a in &evens {
        for b in &odds {
            let coords: Vec<i64> = a.iter().chain(b).copied().collect();
            out.push(Weight::from_ints(m, n, &coords));
        }
    }
    out.sort();
    out
}

fn weyl_block(block: &[Scalar]) -> Scalar {
    let mut acc = int(1);
    for i in 0..block.len() {
        for j in i + 1..block.len() {
            let gap = int((j - i) as i64);
            acc *= (&block[i] - &block[j] + &gap) / gap;
        }
    }
    acc
}

/// Dimension of the simple gl(m)⊕gl(n)-module of highest weight λ (Weyl's formula).
pub fn dim_l0(lambda: &Weight) -> Result<usize> {
    require_dominant(lambda)?;
    let d = weyl_block(lambda.even_block()) * weyl_block(lambda.odd_block());
    debug_assert!(d.is_integer());
    Ok(d.to_integer().to_usize().expect("dimension fits in usize"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    #[test]
    fn dominant_weight_counts() {
        assert_eq!(dominant_weights(1, 1, -2, 2).len(), 25);
        assert_eq!(dominant_weights(2, 1, -2, 2).len(), 75);
        assert_eq!(dominant_weights(2, 2, -2, 2).len(), 225);
        assert!(dominant_weights(2, 2, -3, 3).iter().all(is_dominant_integral));
    }

    #[test]
    fn form_examples() {
        let e = |i| Weight::epsilon(2, 1, i);
        assert_eq!(bilinear_form(&e(0), &e(0)).unwrap(), int(1));
        assert_eq!(bilinear_form(&e(2), &e(2)).unwrap(), int(-1));
        let a = &e(0) - &e(2);
        assert_eq!(bilinear_form(&a, &a).unwrap(), int(0));
        assert!(matches!(
            bilinear_form(&e(0), &Weight::zero(1, 1)),
            Err(Error::ShapeMismatch(..))
        ));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(1, 1).coords(), &[frac(-1, 2), frac(1, 2)]);
        assert_eq!(rho(2, 1), Weight::from_ints(2, 1, &[0, -1, 1]));
        assert_eq!(
            rho(2, 2).coords(),
            &[frac(-1, 2), frac(-3, 2), frac(3, 2), frac(1, 2)]
        );
    }

    #[test]
    fn dominance_examples() {
        assert!(is_dominant_integral(&Weight::parse("0,0|0").unwrap()));
        assert!(!is_dominant_integral(&Weight::parse("0,1|0").unwrap()));
        assert!(is_dominant_integral(&Weight::parse("3,1|2,0").unwrap()));
        assert!(!is_dominant_integral(&Weight::parse("1/2|0").unwrap()));
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(dim_l0(&Weight::parse("0,0|0,0").unwrap()).unwrap(), 1);
        assert_eq!(dim_l0(&Weight::parse("1,0|0").unwrap()).unwrap(), 2);
        assert_eq!(dim_l0(&Weight::parse("2,0|0").unwrap()).unwrap(), 3);
        assert!(matches!(dim_l0(&Weight::parse("0,1|0").unwrap()), Err(Error::NotDominant(_))));
    }

    #[test]
    fn root_counts() {
        for m in 1..=4 {
            for n in 1..=4 {
                let sys = RootSystemGL::new(m, n);
                assert_eq!(sys.roots().len(), (m + n) * (m + n - 1));
                assert_eq!(sys.odd().count(), 2 * m * n);
                let iso = sys.isotropic();
                assert_eq!(iso.len(), 2 * m * n);
                assert!(iso.iter().all(Root::is_odd));
            }
        }
    }

    #[test]
    fn weight_text_round_trip() {
        let w = Weight::parse("1,-1/2|3/4").unwrap();
        assert_eq!(w.shape(), (2, 1));
        assert_eq!(w.to_string(), "1,-1/2|3/4");
        assert!(Weight::parse("1,2").is_err());
        assert!(Weight::parse_for(1, 1, "1,0|0").is_err());
    }
}
