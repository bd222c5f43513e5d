//! The operator algebra on the structure-sheaf basis of K_T(G/B).
//!
//! A `KClass` is a finitely supported map from Weyl-group elements to
//! Laurent polynomials, the coordinates of a class in the basis {`[O_w]`}.
//! Acting on it we have
//!
//! - the Bruhat operators `apply_b`, which move one Bruhat step down,
//! - the diagonal scalings `apply_x` by x^{w(λ/h)} on the h-scaled lattice,
//! - their combinations `apply_r` = X^α + X^{(ρ,α∨)α} B_α, whose chain
//!   compositions realize multiplication by e^λ,
//! - the Demazure operators `apply_t` and their polynomial avatar
//!   `demazure_on_poly`,
//! - the base change to the dual basis {`[I_w]`} built from ε_i = 1 − T_i.

use std::collections::BTreeMap;

use crate::alcove::LambdaChain;
use crate::error::{internal, invalid, Result};
use crate::poly::LaurentPoly;
use crate::root_system::{RootSystem, SignedRoot, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// A finitely supported `Z[X]`-combination of basis classes `[O_w]` (or, after
/// a base change, `[I_w]`); zero polynomials are pruned.
#[derive(Clone, PartialEq, Eq)]
pub struct KClass {
    rank: usize,
    scale: i64,
    terms: BTreeMap<WeylElement, LaurentPoly>,
}

impl KClass {
    pub fn zero(rank: usize, scale: i64) -> Self {
        KClass {
            rank,
            scale,
            terms: BTreeMap::new(),
        }
    }

    /// The basis class `[O_w]` with coefficient 1.
    pub fn basis(w: WeylElement, scale: i64) -> Self {
        let rank = w.rank();
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one(rank, scale));
        KClass { rank, scale, terms }
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

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &WeylElement) -> LaurentPoly {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.rank, self.scale))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: WeylElement, p: LaurentPoly) {
        use std::collections::btree_map::Entry;
        if p.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&p);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(p);
            }
        }
    }

    pub fn add(&self, other: &KClass) -> KClass {
        let mut out = self.clone();
        for (w, p) in &other.terms {
            out.add_term(w.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, other: &KClass) -> KClass {
        let mut out = self.clone();
        for (w, p) in &other.terms {
            out.add_term(w.clone(), p.neg());
        }
        out
    }

    pub fn scale_by_poly(&self, f: &LaurentPoly) -> KClass {
        let mut out = KClass::zero(self.rank, self.scale);
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.mul(f));
        }
        out
    }

    /// Reinterpret a lattice-exponent class on the h-scaled lattice.
    pub fn upscale(&self, h: i64) -> KClass {
        KClass {
            rank: self.rank,
            scale: h,
            terms: self
                .terms
                .iter()
                .map(|(w, p)| (w.clone(), p.upscale(h)))
                .collect(),
        }
    }

    /// Inverse of `upscale`; fails if some exponent is not divisible.
    pub fn downscale(&self) -> Result<KClass> {
        let mut terms = BTreeMap::new();
        for (w, p) in &self.terms {
            let q = p.downscale().ok_or_else(|| {
                internal("class exponents are not divisible by the Coxeter number")
            })?;
            terms.insert(w.clone(), q);
        }
        Ok(KClass {
            rank: self.rank,
            scale: 1,
            terms,
        })
    }
}

impl std::fmt::Debug for KClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (w, p) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({p})·[O len {}]", w.length())?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Bruhat, scaling, and R operators
// ---------------------------------------------------------------------------

/// B_β: move from `[O_w]` to `[O_{w s_β}]` when the length drops by one, with
/// B_{−α} = −B_α for α positive.
pub fn apply_b(rs: &RootSystem, beta: SignedRoot, c: &KClass) -> KClass {
    let mut out = KClass::zero(c.rank(), c.scale());
    let refl = WeylElement::reflection(rs, beta);
    for (w, p) in c.iter() {
        let ws = WeylElement::multiply(rs, w, &refl);
        if ws.length() + 1 == w.length() {
            out.add_term(ws, if beta.negative { p.neg() } else { p.clone() });
        }
    }
    out
}

/// X^λ: scale `[O_w]` by x^{w(λ)/h}; the class must live on the h-scaled
/// lattice.
pub fn apply_x(rs: &RootSystem, lambda: &Weight, c: &KClass) -> KClass {
    assert_eq!(
        c.scale(),
        rs.coxeter_number(),
        "X operators act on the h-scaled lattice"
    );
    let mut out = KClass::zero(c.rank(), c.scale());
    for (w, p) in c.iter() {
        let e = w.act_weight(lambda);
        out.add_term(w.clone(), p.mul_monomial(&e.0, 1));
    }
    out
}

/// R_β = X^β + X^{(ρ,β∨)β} B_β, valid for either sign of β; the inverse of
/// R_β is R_{−β}.
pub fn apply_r(rs: &RootSystem, beta: SignedRoot, c: &KClass) -> KClass {
    let beta_w = rs.signed_weight_coords(beta);
    let height = rs.pairing(rs.rho(), beta);
    let diag = apply_x(rs, &beta_w, c);
    let shifted = apply_x(rs, &beta_w.scale(height), &apply_b(rs, beta, c));
    diag.add(&shifted)
}

/// The chain composition R_{β_l} ⋯ R_{β_1} (the first chain root acts
/// first) on an h-scaled class.
pub fn apply_r_chain(rs: &RootSystem, chain: &LambdaChain, c: &KClass) -> KClass {
    let mut acc = c.clone();
    for beta in &chain.roots {
        acc = apply_r(rs, *beta, &acc);
    }
    acc
}

/// Multiplication by e^λ on lattice-exponent classes: embed into the
/// h-scaled lattice, run the chain of R operators, land back. Divisibility
/// of every final exponent by h is a theorem; its failure signals a kernel
/// bug.
pub fn multiply_by_exp(rs: &RootSystem, chain: &LambdaChain, c: &KClass) -> Result<KClass> {
    assert_eq!(
        c.scale(),
        1,
        "multiply_by_exp takes a lattice-exponent class"
    );
    let up = c.upscale(rs.coxeter_number());
    apply_r_chain(rs, chain, &up).downscale()
}

// ---------------------------------------------------------------------------
// Demazure operators
// ---------------------------------------------------------------------------

/// T_i on classes: `[O_w]` ↦ `[O_{w s_i}]` when the length goes up, `[O_w]` when
/// it goes down; coefficients ride along unchanged.
pub fn apply_t(rs: &RootSystem, i: usize, c: &KClass) -> KClass {
    let si = WeylElement::simple(rs, i);
    let mut out = KClass::zero(c.rank(), c.scale());
    for (w, p) in c.iter() {
        let ws = WeylElement::multiply(rs, w, &si);
        if ws.length() > w.length() {
            out.add_term(ws, p.clone());
        } else {
            out.add_term(w.clone(), p.clone());
        }
    }
    out
}

/// ε_i = 1 − T_i.
pub fn apply_eps(rs: &RootSystem, i: usize, c: &KClass) -> KClass {
    c.sub(&apply_t(rs, i, c))
}

/// T_w for a reduced word (the last letter acts first); non-reduced words
/// are rejected rather than normalized.
pub fn apply_t_word(rs: &RootSystem, word: &[usize], c: &KClass) -> Result<KClass> {
    crate::weyl::element_from_reduced_word(rs, word)?;
    let mut acc = c.clone();
    for &i in word.iter().rev() {
        acc = apply_t(rs, i, &acc);
    }
    Ok(acc)
}

/// ε_w for a reduced word (the last letter acts first).
pub fn apply_eps_word(rs: &RootSystem, word: &[usize], c: &KClass) -> Result<KClass> {
    crate::weyl::element_from_reduced_word(rs, word)?;
    let mut acc = c.clone();
    for &i in word.iter().rev() {
        acc = apply_eps(rs, i, &acc);
    }
    Ok(acc)
}

/// The Demazure operator on lattice Laurent polynomials,
/// T_i(f) = (f − e^{−α_i} s_i(f)) / (1 − e^{−α_i}), computed by exact
/// division. The numerator is always divisible, so a division failure is a
/// kernel bug.
pub fn demazure_on_poly(rs: &RootSystem, i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    assert_eq!(f.scale(), 1, "Demazure operators act on lattice exponents");
    if i >= rs.rank() {
        return Err(invalid("simple index out of range"));
    }
    let si = WeylElement::simple(rs, i);
    let alpha = SignedRoot::positive(rs.simple_root_index(i));
    let alpha_w = rs.signed_weight_coords(alpha);
    let minus_alpha: Vec<i64> = alpha_w.0.iter().map(|x| -x).collect();

    let reflected = f.map_exponents(|e| si.act_weight(&Weight(e.to_vec())).0);
    let numerator = f.sub(&reflected.mul_monomial(&minus_alpha, 1));

    // Divide by (1 − e^{−α_i}), peeling from the top level of the pairing
    // (·, α_i∨) downward; each step trades the top term for one two levels
    // lower, so a step budget bounds the loop.
    let level = |e: &[i64]| -> i64 {
        e.iter()
            .zip(&rs.root(alpha.index).coroot_coords)
            .map(|(x, c)| x * c)
            .sum()
    };
    let mut quotient = LaurentPoly::zero(f.rank(), 1);
    let mut rem = numerator;
    let budget = {
        let levels: Vec<i64> = rem.iter().map(|(e, _)| level(e)).collect();
        let span = match (levels.iter().max(), levels.iter().min()) {
            (Some(max), Some(min)) => (max - min) / 2 + 2,
            _ => 1,
        };
        (rem.num_terms() as i64 + 1) * span + 8
    };
    let mut steps = 0i64;
    while !rem.is_zero() {
        steps += 1;
        if steps > budget {
            return Err(internal(
                "inexact division by 1 − e^{−α_i} in the Demazure operator",
            ));
        }
        let (e, c) = rem
            .iter()
            .max_by_key(|(e, _)| level(e))
            .map(|(e, c)| (e.clone(), *c))
            .expect("nonzero remainder has a top term");
        quotient.add_term(e.clone(), c);
        rem.add_term(e.clone(), -c);
        rem.add_term(e.iter().zip(&minus_alpha).map(|(x, y)| x + y).collect(), c);
    }
    Ok(quotient)
}

/// T_w on polynomials for a reduced word (the last letter acts first).
pub fn demazure_word_on_poly(
    rs: &RootSystem,
    word: &[usize],
    f: &LaurentPoly,
) -> Result<LaurentPoly> {
    crate::weyl::element_from_reduced_word(rs, word)?;
    let mut acc = f.clone();
    for &i in word.iter().rev() {
        acc = demazure_on_poly(rs, i, &acc)?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// The dual basis [I_w]
// ---------------------------------------------------------------------------

/// Base change between the {`[O_w]`} and {`[I_w]`} bases.
///
/// `[I_w]` is defined by applying the ε-word of w^{-1} to `[O_1]`. Expanding
/// gives `[I_w]` = Σ_{u ≤ w} (−1)^{ℓ(u)} `[O_u]`, and the same alternating
/// triangular matrix is its own inverse (the alternating length sum over a
/// Bruhat interval vanishes unless the interval is a point). Both facts are
/// computed here from the ε-words, not assumed.
pub struct IBasis {
    /// expansions[w] = O-coefficients of `[I_w]`, keyed by group index.
    expansions: Vec<BTreeMap<usize, i64>>,
    /// inverse[w] = I-coefficients of `[O_w]`.
    inverse: Vec<BTreeMap<usize, i64>>,
}

impl IBasis {
    pub fn new(rs: &RootSystem, group: &WeylGroup) -> Result<IBasis> {
        let n = group.len();
        let mut expansions = Vec::with_capacity(n);
        for w in group.elements() {
            let word = w.inverse(rs).reduced_word(rs);
            let cls = apply_eps_word(rs, &word, &KClass::basis(WeylElement::identity(rs), 1))?;
            let mut row = BTreeMap::new();
            for (u, p) in cls.iter() {
                let c = p.constant_term();
                if p.num_terms() != usize::from(c != 0) {
                    return Err(internal("ε-word expansion has non-constant coefficients"));
                }
                if c != 0 {
                    row.insert(group.index_of(u), c);
                }
            }
            expansions.push(row);
        }
        // Invert the triangular system: elements are length-sorted and
        // expansions[w] is supported on indices ≤ w with diagonal ±1.
        let mut inverse = vec![BTreeMap::new(); n];
        for (target, row) in inverse.iter_mut().enumerate() {
            let mut residual: BTreeMap<usize, i64> = BTreeMap::new();
            residual.insert(target, 1);
            let mut coeffs = BTreeMap::new();
            while let Some((&top, &c)) = residual.iter().next_back() {
                let diag = expansions[top][&top];
                debug_assert!(diag == 1 || diag == -1);
                let b = c * diag;
                coeffs.insert(top, b);
                for (&u, &e) in &expansions[top] {
                    let entry = residual.entry(u).or_insert(0);
                    *entry -= b * e;
                    if *entry == 0 {
                        residual.remove(&u);
                    }
                }
            }
            *row = coeffs;
        }
        Ok(IBasis {
            expansions,
            inverse,
        })
    }

    pub fn i_in_o(&self, w_index: usize) -> &BTreeMap<usize, i64> {
        &self.expansions[w_index]
    }

    pub fn o_in_i(&self, w_index: usize) -> &BTreeMap<usize, i64> {
        &self.inverse[w_index]
    }

    /// Reinterpret O-coordinates as I-coordinates.
    pub fn to_i_basis(&self, group: &WeylGroup, c: &KClass) -> KClass {
        self.substitute(group, c, &self.inverse)
    }

    /// Expand I-coordinates back into O-coordinates.
    pub fn from_i_basis(&self, group: &WeylGroup, c: &KClass) -> KClass {
        self.substitute(group, c, &self.expansions)
    }

    fn substitute(&self, group: &WeylGroup, c: &KClass, rows: &[BTreeMap<usize, i64>]) -> KClass {
        let mut out = KClass::zero(c.rank(), c.scale());
        for (w, p) in c.iter() {
            for (&u, &coeff) in &rows[group.index_of(w)] {
                out.add_term(group.element(u).clone(), p.scale_by(coeff));
            }
        }
        out
    }
}
