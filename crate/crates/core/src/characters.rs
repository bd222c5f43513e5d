//! Demazure and irreducible characters from admissible subsets of a reduced
//! chain, with two independent oracles: the Demazure-operator recursion on
//! polynomials and the Weyl dimension formula.

use std::collections::BTreeMap;
use std::fmt;

use crate::alcove::build_reduced_chain;
use crate::chevalley::chevalley_coeffs;
use crate::error::{internal, invalid, Result};
use crate::poly::LaurentPoly;
use crate::root_system::{RootSystem, SignedRoot, Weight};
use crate::weyl::{longest_element, WeylElement};

/// A formal character: weights with positive multiplicities.
#[derive(Clone, PartialEq, Eq)]
pub struct Character {
    rank: usize,
    terms: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new(rank: usize) -> Self {
        Character {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_weight(&mut self, mu: Weight, mult: u64) {
        if mult > 0 {
            *self.terms.entry(mu).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.terms.iter()
    }

    pub fn num_weights(&self) -> usize {
        self.terms.len()
    }

    /// Total mass Σ_μ m(μ); for an irreducible character this is dim V_λ.
    pub fn total_mass(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn to_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero(self.rank, 1);
        for (mu, m) in &self.terms {
            p.add_term(mu.0.clone(), *m as i64);
        }
        p
    }

    pub fn from_poly(p: &LaurentPoly) -> Result<Character> {
        let mut ch = Character::new(p.rank());
        for (e, c) in p.iter() {
            if *c < 0 {
                return Err(internal("character polynomial has a negative multiplicity"));
            }
            ch.add_weight(Weight(e.clone()), *c as u64);
        }
        Ok(ch)
    }

    /// True when every simple reflection permutes the terms.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| {
            let si = WeylElement::simple(rs, i);
            self.terms
                .iter()
                .all(|(mu, m)| self.multiplicity(&si.act_weight(mu)) == *m)
        })
    }

    /// Termwise comparison: `self` ≤ `other` at every weight.
    pub fn is_submodule_of(&self, other: &Character) -> bool {
        self.terms
            .iter()
            .all(|(mu, m)| other.multiplicity(mu) >= *m)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Character({} weights, mass {})",
            self.num_weights(),
            self.total_mass()
        )
    }
}

/// One line of disagreement between two characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffEntry {
    pub weight: Weight,
    pub left: u64,
    pub right: u64,
}

/// Differences between two characters; empty iff they are equal.
pub fn character_diff(a: &Character, b: &Character) -> Vec<DiffEntry> {
    let mut keys: Vec<&Weight> = a.terms.keys().chain(b.terms.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|mu| {
            let (l, r) = (a.multiplicity(mu), b.multiplicity(mu));
            (l != r).then(|| DiffEntry {
                weight: mu.clone(),
                left: l,
                right: r,
            })
        })
        .collect()
}

/// Character of the Demazure module attached to (λ, u), together with the
/// number of admissible subsets that produced it.
pub fn demazure_character_with_count(
    rs: &RootSystem,
    lambda: &Weight,
    u: &WeylElement,
) -> Result<(Character, u64)> {
    if !lambda.is_dominant() {
        return Err(invalid("Demazure characters need a dominant weight"));
    }
    let chain = build_reduced_chain(rs, lambda)?;
    let table = chevalley_coeffs(rs, &chain, u);
    let mut ch = Character::new(rs.rank());
    let mut count = 0u64;
    for ((_, mu), c) in table.entries() {
        if *c < 0 {
            return Err(internal(
                "dominant-weight expansion produced a negative coefficient",
            ));
        }
        ch.add_weight(mu.clone(), *c as u64);
        count += *c as u64;
    }
    Ok((ch, count))
}

pub fn demazure_character(rs: &RootSystem, lambda: &Weight, u: &WeylElement) -> Result<Character> {
    demazure_character_with_count(rs, lambda, u).map(|(ch, _)| ch)
}

/// Character of the irreducible module V_λ (the longest-element Demazure
/// character).
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    demazure_character(rs, lambda, &longest_element(rs))
}

/// The same character enumerated the other way round: saturated chains
/// increasing from the identity. An independent code path kept for
/// cross-checking.
pub fn irreducible_character_increasing(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    if !lambda.is_dominant() {
        return Err(invalid("irreducible characters need a dominant weight"));
    }
    let chain = build_reduced_chain(rs, lambda)?;
    let linears: Vec<WeylElement> = chain
        .roots
        .iter()
        .map(|b| WeylElement::reflection(rs, SignedRoot::positive(b.index)))
        .collect();
    let mut ch = Character::new(rs.rank());

    struct Up<'a> {
        rs: &'a RootSystem,
        chain: &'a crate::alcove::LambdaChain,
        linears: &'a [WeylElement],
        ch: &'a mut Character,
    }
    impl Up<'_> {
        fn walk(&mut self, x: &WeylElement, trans: &Weight, pos: usize) {
            let mu = x.act_weight(&self.chain.lambda).sub(trans);
            self.ch.add_weight(mu, 1);
            for j in pos..self.chain.len() {
                let x2 = WeylElement::multiply(self.rs, x, &self.linears[j]);
                if x2.length() != x.length() + 1 {
                    continue;
                }
                let refl = &self.chain.reflections[j];
                let alpha_w = Weight(self.rs.root(refl.root).weight_coords.clone());
                let trans2 = trans.add(&x.act_weight(&alpha_w).scale(refl.level));
                self.walk(&x2, &trans2, j + 1);
            }
        }
    }
    let mut up = Up {
        rs,
        chain: &chain,
        linears: &linears,
        ch: &mut ch,
    };
    up.walk(&WeylElement::identity(rs), &Weight::zero(rs.rank()), 0);
    Ok(ch)
}

/// The Demazure-operator route: T_u(e^λ), an oracle independent of the
/// chain walk.
pub fn demazure_character_via_operators(
    rs: &RootSystem,
    lambda: &Weight,
    u: &WeylElement,
) -> Result<Character> {
    if !lambda.is_dominant() {
        return Err(invalid("Demazure characters need a dominant weight"));
    }
    let word = u.reduced_word(rs);
    let f = LaurentPoly::monomial(lambda.0.clone(), 1, 1);
    let out = crate::operators::demazure_word_on_poly(rs, &word, &f)?;
    Character::from_poly(&out)
}

/// dim V_λ by the Weyl dimension formula, Π (λ+ρ, α∨) / (ρ, α∨).
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    if !lambda.is_dominant() {
        return Err(invalid("the dimension formula needs a dominant weight"));
    }
    let shifted = lambda.add(rs.rho());
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..rs.num_positive_roots() {
        let beta = SignedRoot::positive(i);
        num *= rs.pairing(&shifted, beta) as i128;
        den *= rs.pairing(rs.rho(), beta) as i128;
        let g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    if den != 1 || num <= 0 {
        return Err(internal(
            "dimension formula did not collapse to a positive integer",
        ));
    }
    u64::try_from(num).map_err(|_| internal("dimension exceeds u64"))
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}
