//! Monomials, reverse lexicographic orders, binomials and monomial ideals.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactmath::{Int, IntVec};

/// Exponent vector of a monomial in the variables of a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    /// Product of the listed variables (with repetition).
    pub fn product(n: usize, vars: &[usize]) -> Self {
        let mut m = Self::one(n);
        for &v in vars {
            m.0[v] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; `other` must divide `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self / other * by`, the rewriting step of a binomial reduction.
    pub(crate) fn replace(&self, other: &Monomial, by: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .zip(&by.0)
                .map(|((a, b), c)| a - b + c)
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Support folded into 64 bits; subset of supports implies subset of masks.
    pub(crate) fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | 1 << (i % 64))
    }

    /// Formats as `x1*x4^2*z` given variable names; the unit monomial prints as `1`.
    pub fn format(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{e}", names[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn parse(s: &str, names: &[String]) -> Result<Monomial> {
        let s = s.trim();
        let mut m = Monomial::one(names.len());
        if s == "1" {
            return Ok(m);
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let i = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            m.0[i] += exp;
        }
        Ok(m)
    }
}

/// Degree-compatible reverse lexicographic order given by a variable ranking.
///
/// `ranking[0]` is the largest variable and the last entry the smallest. At
/// equal degree, `u > v` iff at the smallest-ranked variable where the exponents
/// differ, `u` has the smaller exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    ranking: Vec<usize>,
}

impl MonomialOrder {
    pub fn revlex(ranking: Vec<usize>) -> Result<Self> {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &v in &ranking {
            if v >= n || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "variable ranking {ranking:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { ranking })
    }

    /// Variable 0 largest, variable `n - 1` smallest.
    pub fn natural(n: usize) -> Self {
        MonomialOrder {
            ranking: (0..n).collect(),
        }
    }

    /// Natural ranking with `var` moved to the bottom.
    pub fn with_smallest(n: usize, var: usize) -> Self {
        let mut ranking: Vec<usize> = (0..n).filter(|&v| v != var).collect();
        ranking.push(var);
        MonomialOrder { ranking }
    }

    /// Variables from largest to smallest.
    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.ranking.last().copied()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            for &v in self.ranking.iter().rev() {
                match a.0[v].cmp(&b.0[v]) {
                    Ordering::Equal => continue,
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        })
    }

    /// Parses an order over the named variables.
    ///
    /// Accepted forms: `z < x2 < x1 < ...` (ascending), `x1 > x2 > ... > z`
    /// (descending), or a comma-separated list read smallest first, as in
    /// `z,x2,x1,x3`.
    pub fn parse(s: &str, names: &[String]) -> Result<Self> {
        let (tokens, ascending): (Vec<&str>, bool) = if s.contains('<') {
            (s.split('<').collect(), true)
        } else if s.contains('>') {
            (s.split('>').collect(), false)
        } else {
            (s.split(',').collect(), true)
        };
        let mut ranking = tokens
            .iter()
            .map(|t| {
                let t = t.trim();
                names
                    .iter()
                    .position(|n| n == t)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{t}` in order")))
            })
            .collect::<Result<Vec<_>>>()?;
        if ranking.len() != names.len() {
            return Err(Error::Parse(format!(
                "order lists {} variables, configuration has {}",
                ranking.len(),
                names.len()
            )));
        }
        if ascending {
            ranking.reverse();
        }
        Self::revlex(ranking)
    }

    /// Ascending display, e.g. `z < x2 < x1`.
    pub fn format(&self, names: &[String]) -> String {
        let parts: Vec<&str> = self.ranking.iter().rev().map(|&v| names[v].as_str()).collect();
        parts.join(" < ")
    }
}

/// A binomial `x^plus - x^minus` with coefficients ±1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Self {
        Binomial { plus, minus }
    }

    /// `x^{v⁺} - x^{v⁻}` for an integer relation `v`.
    pub fn from_vector(v: &IntVec) -> Self {
        use num_traits::ToPrimitive;
        let to_u32 = |x: &Int| x.to_u32().expect("exponent fits in u32");
        let (p, m) = crate::exactmath::positive_negative_parts(v);
        Binomial {
            plus: Monomial(p.iter().map(to_u32).collect()),
            minus: Monomial(m.iter().map(to_u32).collect()),
        }
    }

    /// The exponent difference `plus - minus`.
    pub fn to_vector(&self) -> IntVec {
        IntVec::new(
            self.plus
                .0
                .iter()
                .zip(&self.minus.0)
                .map(|(&a, &b)| Int::from(a) - Int::from(b))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    pub fn is_irreducible(&self) -> bool {
        self.plus.is_coprime(&self.minus)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree() == self.minus.degree()
    }

    pub fn swapped(&self) -> Self {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Orients so that `plus` is the leading term under `order`.
    pub fn oriented(self, order: &MonomialOrder) -> Self {
        if order.cmp(&self.plus, &self.minus) == Ordering::Less {
            self.swapped()
        } else {
            self
        }
    }

    /// Orientation independent of any order: `plus` is the lexicographically
    /// larger exponent vector (first variable weighs most).
    pub fn canonical(self) -> Self {
        if self.plus < self.minus {
            self.swapped()
        } else {
            self
        }
    }

    /// Formats as `x1*x3 - x2*z`.
    pub fn format(&self, names: &[String]) -> String {
        format!("{} - {}", self.plus.format(names), self.minus.format(names))
    }

    pub fn parse(s: &str, names: &[String]) -> Result<Binomial> {
        let (p, m) = s
            .split_once(" - ")
            .or_else(|| s.split_once('-'))
            .ok_or_else(|| Error::Parse(format!("binomial `{s}` must be `u - v`")))?;
        Ok(Binomial {
            plus: Monomial::parse(p, names)?,
            minus: Monomial::parse(m, names)?,
        })
    }
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Keeps only the minimal elements of `gens`, sorted.
    pub fn new(mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        MonomialIdeal { generators: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Every minimal generator has degree two.
    pub fn is_quadratic(&self) -> bool {
        self.generators.iter().all(|g| g.degree() == 2)
    }

    pub fn format(&self, names: &[String]) -> Vec<String> {
        self.generators.iter().map(|g| g.format(names)).collect()
    }
}
