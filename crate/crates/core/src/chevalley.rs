//! The Chevalley coefficient engine.
//!
//! Expanding e^λ·`[O_u]` over the basis {x^μ `[O_w]`} reduces to a signed count
//! of index subsets J of a λ-chain whose reflections step down a saturated
//! Bruhat chain from u; the weight μ of a subset is read off the composed
//! affine action on −λ. The search is a depth-first walk over chain
//! positions pruned by the one-step length-drop test, carrying the composed
//! affine map incrementally (its linear part is the current chain endpoint,
//! so only the translation needs updating).
//!
//! On top of the raw tables sit the divisor-class (Monk) product, the dual
//! coefficients, restriction to a parabolic quotient, and the classical
//! degree-one check.

use std::collections::{BTreeMap, BTreeSet};

use crate::alcove::{build_reduced_chain, reverse_negate_chain, LambdaChain};
use crate::error::{internal, invalid, Result};
use crate::operators::KClass;
use crate::poly::LaurentPoly;
use crate::root_system::{RootSystem, SignedRoot, Weight};
use crate::weyl::{longest_element, WeylElement};

/// The expansion table of e^λ·`[O_u]`: entry ((w, μ) → c) is the coefficient
/// of x^μ `[O_w]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChevalleyTable {
    pub lambda: Weight,
    pub u: WeylElement,
    entries: BTreeMap<(WeylElement, Weight), i64>,
}

impl ChevalleyTable {
    pub fn entries(&self) -> impl Iterator<Item = (&(WeylElement, Weight), &i64)> {
        self.entries.iter()
    }

    pub fn get(&self, w: &WeylElement, mu: &Weight) -> i64 {
        self.entries
            .get(&(w.clone(), mu.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn support(&self) -> BTreeSet<WeylElement> {
        self.entries.keys().map(|(w, _)| w.clone()).collect()
    }

    /// The polynomial coefficient of `[O_w]`: Σ_μ c_{u,w}^{λ,μ} x^μ.
    pub fn coeff_poly(&self, w: &WeylElement) -> LaurentPoly {
        let rank = self.lambda.rank();
        let mut p = LaurentPoly::zero(rank, 1);
        for ((v, mu), c) in &self.entries {
            if v == w {
                p.add_term(mu.0.clone(), *c);
            }
        }
        p
    }

    /// Collapse the equivariant parameters: w ↦ Σ_μ c_{u,w}^{λ,μ}.
    pub fn nonequivariant(&self) -> BTreeMap<WeylElement, i64> {
        let mut out: BTreeMap<WeylElement, i64> = BTreeMap::new();
        for ((w, _), c) in &self.entries {
            *out.entry(w.clone()).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// The product class Σ_{w,μ} c x^μ `[O_w]`.
    pub fn to_kclass(&self) -> KClass {
        let rank = self.lambda.rank();
        let mut out = KClass::zero(rank, 1);
        for ((w, mu), c) in &self.entries {
            out.add_term(w.clone(), LaurentPoly::monomial(mu.0.clone(), *c, 1));
        }
        out
    }
}

type Entries = BTreeMap<(WeylElement, Weight), i64>;
type Visited = BTreeSet<WeylElement>;

struct DfsState<'a> {
    rs: &'a RootSystem,
    chain: &'a LambdaChain,
    lambda: &'a Weight,
    /// The reflection elements s_{β_j}.
    linears: Vec<WeylElement>,
    entries: Entries,
    visited: Visited,
}

impl DfsState<'_> {
    /// Record the subset ending at `x` with composed translation `trans`
    /// and sign; then try to extend by any later chain position.
    fn walk(&mut self, x: &WeylElement, trans: &Weight, pos: usize, sign: i64) {
        let mu = x.act_weight(self.lambda).sub(trans);
        *self.entries.entry((x.clone(), mu)).or_insert(0) += sign;
        self.visited.insert(x.clone());
        for j in pos..self.chain.len() {
            let x2 = WeylElement::multiply(self.rs, x, &self.linears[j]);
            if x2.length() + 1 != x.length() {
                continue;
            }
            let refl = &self.chain.reflections[j];
            let alpha_w = Weight(self.rs.root(refl.root).weight_coords.clone());
            let trans2 = trans.add(&x.act_weight(&alpha_w).scale(refl.level));
            let sign2 = if self.chain.roots[j].negative {
                -sign
            } else {
                sign
            };
            self.walk(&x2, &trans2, j + 1, sign2);
        }
    }
}

fn thread_budget() -> usize {
    std::env::var("ALCOVE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

fn coeffs_with_visited(
    rs: &RootSystem,
    chain: &LambdaChain,
    u: &WeylElement,
) -> (Entries, Visited) {
    let linears: Vec<WeylElement> = chain
        .roots
        .iter()
        .map(|b| WeylElement::reflection(rs, SignedRoot::positive(b.index)))
        .collect();
    let threads = thread_budget().min(chain.len().max(1));
    if threads <= 1 || chain.len() < 2 {
        let mut state = DfsState {
            rs,
            chain,
            lambda: &chain.lambda,
            linears,
            entries: BTreeMap::new(),
            visited: BTreeSet::new(),
        };
        state.walk(u, &Weight::zero(rs.rank()), 0, 1);
        return (state.entries, state.visited);
    }

    // Parallel over the choice of the smallest index in J; the empty subset
    // is accounted once at the end. Merging is commutative addition, so the
    // result does not depend on the thread count.
    let chunks: Vec<Vec<usize>> = {
        let mut c: Vec<Vec<usize>> = vec![Vec::new(); threads];
        for j in 0..chain.len() {
            c[j % threads].push(j);
        }
        c.retain(|v| !v.is_empty());
        c
    };
    let results: Vec<(Entries, Visited)> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let linears = &linears;
                scope.spawn(move || {
                    let mut state = DfsState {
                        rs,
                        chain,
                        lambda: &chain.lambda,
                        linears: linears.clone(),
                        entries: BTreeMap::new(),
                        visited: BTreeSet::new(),
                    };
                    for &j0 in chunk {
                        let x2 = WeylElement::multiply(rs, u, &state.linears[j0]);
                        if x2.length() + 1 != u.length() {
                            continue;
                        }
                        let refl = &chain.reflections[j0];
                        let alpha_w = Weight(rs.root(refl.root).weight_coords.clone());
                        let trans = u.act_weight(&alpha_w).scale(refl.level);
                        let sign = if chain.roots[j0].negative { -1 } else { 1 };
                        state.walk(&x2, &trans, j0 + 1, sign);
                    }
                    (state.entries, state.visited)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread panicked"))
            .collect()
    });

    let mut entries = Entries::new();
    let mut visited = Visited::new();
    entries.insert((u.clone(), u.act_weight(&chain.lambda)), 1);
    visited.insert(u.clone());
    for (sub, vis) in results {
        for (k, v) in sub {
            *entries.entry(k).or_insert(0) += v;
        }
        visited.extend(vis);
    }
    (entries, visited)
}

/// Expand e^λ·`[O_u]` along a λ-chain (reduced or not; the table is
/// chain-independent).
pub fn chevalley_coeffs(rs: &RootSystem, chain: &LambdaChain, u: &WeylElement) -> ChevalleyTable {
    let (mut entries, _) = coeffs_with_visited(rs, chain, u);
    entries.retain(|_, c| *c != 0);
    ChevalleyTable {
        lambda: chain.lambda.clone(),
        u: u.clone(),
        entries,
    }
}

/// The product e^λ·`[O_u]` as a class, using the canonical reduced chain.
pub fn chevalley_product(rs: &RootSystem, lambda: &Weight, u: &WeylElement) -> Result<KClass> {
    let chain = build_reduced_chain(rs, lambda)?;
    Ok(chevalley_coeffs(rs, &chain, u).to_kclass())
}

/// Nonequivariant coefficients of e^λ·`[O_u]`.
pub fn nonequivariant_coeffs(
    rs: &RootSystem,
    lambda: &Weight,
    u: &WeylElement,
) -> Result<BTreeMap<WeylElement, i64>> {
    let chain = build_reduced_chain(rs, lambda)?;
    Ok(chevalley_coeffs(rs, &chain, u).nonequivariant())
}

/// The divisor-class product `[O_{w∘ s_i}]`·`[O_u]`, expanded over nonempty
/// admissible subsets of a reduced (−ω_i)-chain, plus the diagonal term
/// (1 − x^{w∘(ω_i) − u(ω_i)})`[O_u]`.
pub fn monk(rs: &RootSystem, i: usize, u: &WeylElement) -> Result<KClass> {
    if i >= rs.rank() {
        return Err(invalid("simple index out of range"));
    }
    let omega = Weight::fundamental(rs.rank(), i);
    let chain = reverse_negate_chain(rs, &build_reduced_chain(rs, &omega)?)?;
    let w0 = longest_element(rs);
    let w0_omega = w0.act_weight(&omega);

    let (entries, _) = coeffs_with_visited(rs, &chain, u);
    let mut out = KClass::zero(rs.rank(), 1);
    // diagonal: 1 − x^{w∘(ω_i) − u(ω_i)}
    let diag = LaurentPoly::one(rs.rank(), 1).sub(&LaurentPoly::monomial(
        w0_omega.sub(&u.act_weight(&omega)).0,
        1,
        1,
    ));
    out.add_term(u.clone(), diag);
    for ((w, mu), c) in entries {
        // Skip the empty subset: it is the (w = u, μ = u(−ω_i)) entry.
        if w == *u && mu == u.act_weight(&chain.lambda) {
            continue;
        }
        // The raw entry sign from the all-negative chain is (−1)^{|J|}; the
        // product wants (−1)^{|J|−1}, and the exponent is ν = w∘(ω_i) + μ
        // since μ = −u r_{j_1}⋯r_{j_s}(ω_i).
        let nu = w0_omega.add(&mu);
        out.add_term(w, LaurentPoly::monomial(nu.0, -c, 1));
    }
    Ok(out)
}

/// The same product through the line-bundle identity
/// `[O_{w∘ s_i}]` = 1 − x^{w∘(ω_i)} e^{−ω_i}; an independent route used to
/// cross-check `monk`.
pub fn monk_via_line_bundle(rs: &RootSystem, i: usize, u: &WeylElement) -> Result<KClass> {
    if i >= rs.rank() {
        return Err(invalid("simple index out of range"));
    }
    let omega = Weight::fundamental(rs.rank(), i);
    let w0_omega = longest_element(rs).act_weight(&omega);
    let product = chevalley_product(rs, &omega.neg(), u)?;
    let scaled = product.scale_by_poly(&LaurentPoly::monomial(w0_omega.0, 1, 1));
    Ok(KClass::basis(u.clone(), 1).sub(&scaled))
}

/// Dual coefficients d_{u,w}^{λ,μ} = c_{u,w}^{−λ,−μ}; the returned table's
/// `lambda` field stores λ and its entries are indexed by (w, μ).
pub fn dual_coeffs(rs: &RootSystem, lambda: &Weight, u: &WeylElement) -> Result<ChevalleyTable> {
    let chain = build_reduced_chain(rs, &lambda.neg())?;
    let table = chevalley_coeffs(rs, &chain, u);
    let entries = table
        .entries
        .into_iter()
        .map(|((w, mu), c)| ((w, mu.neg()), c))
        .collect();
    Ok(ChevalleyTable {
        lambda: lambda.clone(),
        u: u.clone(),
        entries,
    })
}

/// Chevalley coefficients on a parabolic quotient: λ must pair to zero with
/// the parabolic simples and u must be the maximal representative of its
/// coset; every element visited by the reduced-chain walk is then maximal
/// too, which is asserted.
pub fn parabolic_coeffs(
    rs: &RootSystem,
    lambda: &Weight,
    u: &WeylElement,
    parabolic: &[usize],
) -> Result<ChevalleyTable> {
    for &j in parabolic {
        if j >= rs.rank() {
            return Err(invalid("parabolic index out of range"));
        }
        if lambda.0[j] != 0 {
            return Err(invalid(format!(
                "weight pairs nontrivially with parabolic simple root {} ((λ, α∨) = {})",
                j + 1,
                lambda.0[j]
            )));
        }
    }
    let is_maximal = |w: &WeylElement| parabolic.iter().all(|&j| w.has_right_descent(rs, j));
    if !is_maximal(u) {
        return Err(invalid(
            "u is not the maximal representative of its parabolic coset",
        ));
    }
    let chain = build_reduced_chain(rs, lambda)?;
    let (mut entries, visited) = coeffs_with_visited(rs, &chain, u);
    for w in &visited {
        if !is_maximal(w) {
            return Err(internal(
                "parabolic walk left the set of maximal coset representatives",
            ));
        }
    }
    entries.retain(|_, c| *c != 0);
    Ok(ChevalleyTable {
        lambda: lambda.clone(),
        u: u.clone(),
        entries,
    })
}

/// For every cover u s_β ⋖ u (β positive), the collapsed coefficient
/// Σ_μ c_{u, u s_β}^{λ,μ}; the classical degree-one formula says this
/// equals (λ, β∨).
pub fn classical_check(
    rs: &RootSystem,
    lambda: &Weight,
    u: &WeylElement,
) -> Result<Vec<(usize, i64)>> {
    let chain = build_reduced_chain(rs, lambda)?;
    let table = chevalley_coeffs(rs, &chain, u);
    let noneq = table.nonequivariant();
    let mut out = Vec::new();
    for idx in 0..rs.num_positive_roots() {
        let beta = SignedRoot::positive(idx);
        let w = u.times_reflection(rs, beta);
        if w.length() + 1 == u.length() {
            out.push((idx, noneq.get(&w).copied().unwrap_or(0)));
        }
    }
    Ok(out)
}
