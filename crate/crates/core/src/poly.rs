//! Sparse integer-coefficient Laurent polynomials over the weight lattice,
//! or over its h-scaled refinement.
//!
//! An exponent vector `e` with `scale = s` stands for the monomial
//! x^{e/s}; scale 1 is the plain group algebra of the lattice, scale h the
//! refinement used while composing root operators. Exponents are kept in a
//! `BTreeMap` so iteration (and serialization) order is the lexicographic
//! order on exponents. Zero coefficients are never stored. Mixing scales is
//! a programming error and panics.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    rank: usize,
    scale: i64,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentPoly {
    pub fn zero(rank: usize, scale: i64) -> Self {
        assert!(scale >= 1);
        LaurentPoly {
            rank,
            scale,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, scale: i64) -> Self {
        Self::monomial(vec![0; rank], 1, scale)
    }

    pub fn monomial(exponent: Vec<i64>, coeff: i64, scale: i64) -> Self {
        let rank = exponent.len();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exponent, coeff);
        }
        LaurentPoly { rank, scale, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponent: &[i64]) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &i64)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, coeff: i64) {
        use std::collections::btree_map::Entry;
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    fn assert_compatible(&self, other: &LaurentPoly) {
        assert_eq!(self.rank, other.rank, "rank mismatch in Laurent arithmetic");
        assert_eq!(
            self.scale, other.scale,
            "scale mismatch in Laurent arithmetic"
        );
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            scale: self.scale,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale_by(&self, k: i64) -> LaurentPoly {
        if k == 0 {
            return LaurentPoly::zero(self.rank, self.scale);
        }
        LaurentPoly {
            rank: self.rank,
            scale: self.scale,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        self.assert_compatible(other);
        let mut out = LaurentPoly::zero(self.rank, self.scale);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiply by the single monomial coeff·x^{exponent/scale}.
    pub fn mul_monomial(&self, exponent: &[i64], coeff: i64) -> LaurentPoly {
        assert_eq!(exponent.len(), self.rank);
        if coeff == 0 {
            return LaurentPoly::zero(self.rank, self.scale);
        }
        LaurentPoly {
            rank: self.rank,
            scale: self.scale,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(exponent).map(|(x, y)| x + y).collect(),
                        coeff * c,
                    )
                })
                .collect(),
        }
    }

    /// Apply a map to every exponent vector (must stay injective on the
    /// support, which linear lattice maps are).
    pub fn map_exponents(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank, self.scale);
        for (e, c) in &self.terms {
            out.add_term(f(e), *c);
        }
        out
    }

    /// Reinterpret on the h-scaled lattice: exponents multiply by `h`.
    pub fn upscale(&self, h: i64) -> LaurentPoly {
        assert_eq!(self.scale, 1, "upscale starts from the unscaled lattice");
        LaurentPoly {
            rank: self.rank,
            scale: h,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| x * h).collect(), *c))
                .collect(),
        }
    }

    /// Inverse of `upscale`; `None` if some exponent is not divisible by h.
    pub fn downscale(&self) -> Option<LaurentPoly> {
        let h = self.scale;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.iter().any(|x| x % h != 0) {
                return None;
            }
            terms.insert(e.iter().map(|x| x / h).collect(), *c);
        }
        Some(LaurentPoly {
            rank: self.rank,
            scale: 1,
            terms,
        })
    }

    /// Specialize every variable to 1 (the sum of coefficients).
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// The part supported on the zero exponent, as an integer.
    pub fn constant_term(&self) -> i64 {
        self.coeff(&vec![0; self.rank])
    }

    /// Keep only terms whose total exponent degree equals `d` (used for
    /// q-degree filtration; exponents are assumed nonnegative there).
    pub fn total_degree_part(&self, d: i64) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            scale: self.scale,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<i64>() == d)
                .map(|(e, c)| (e.clone(), *c))
                .collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if mag != 1 || is_const {
                write!(f, "{mag}")?;
            }
            if !is_const {
                write!(f, "x^[")?;
                for (k, x) in e.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    if self.scale == 1 {
                        write!(f, "{x}")?;
                    } else {
                        write!(f, "{x}/{}", self.scale)?;
                    }
                }
                write!(f, "]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
