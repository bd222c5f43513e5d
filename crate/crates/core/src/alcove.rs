//! Affine reflections, alcove walks, and λ-chains.
//!
//! A λ-chain is a sequence of signed roots (β_1, ..., β_l) labeling an alcove
//! path from the fundamental alcove A∘ to A∘ − λ, together with the affine
//! reflections (r_1, ..., r_l) in the walls crossed. Chains are rebuilt from
//! their root sequence by replaying the walk: the m_α bookkeeping (one
//! integer per positive root, stepped ±1 per crossing) both derives the
//! reflection levels and validates that the walk ends at A∘ − λ. Every chain
//! transformation below goes through that validator.

use crate::error::{internal, invalid, Result};
use crate::root_system::{RootSystem, SignedRoot, Weight};
use crate::weyl::WeylElement;

/// The affine reflection s_{α,k} in the hyperplane (x, α∨) = k, stored in
/// canonical form with α positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineReflection {
    /// Index of the positive root α in the `RootSystem` table.
    pub root: usize,
    /// Hyperplane level k.
    pub level: i64,
}

impl AffineReflection {
    /// s_{α,k}(λ) = λ − ((λ, α∨) − k) α.
    pub fn apply(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        let alpha = SignedRoot::positive(self.root);
        let p = rs.pairing(lambda, alpha) - self.level;
        lambda.sub(&rs.signed_weight_coords(alpha).scale(p))
    }

    /// The linear part s_α ∈ W.
    pub fn linear_part(&self, rs: &RootSystem) -> WeylElement {
        WeylElement::reflection(rs, SignedRoot::positive(self.root))
    }

    /// Conjugation by the translation t_ν shifts the level by (ν, α∨).
    pub fn translate(&self, rs: &RootSystem, nu: &Weight) -> AffineReflection {
        AffineReflection {
            root: self.root,
            level: self.level + rs.pairing(nu, SignedRoot::positive(self.root)),
        }
    }
}

/// A λ-chain: signed roots plus the affine reflections of the walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaChain {
    pub lambda: Weight,
    pub roots: Vec<SignedRoot>,
    pub reflections: Vec<AffineReflection>,
    pub reduced: bool,
}

impl LambdaChain {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Build a chain from its root sequence by replaying the alcove walk.
    ///
    /// Fails if the walk does not end at A∘ − λ. The `reduced` flag is set
    /// iff no root appears together with its negative, which for valid
    /// chains characterizes minimal length.
    pub fn from_roots(
        rs: &RootSystem,
        lambda: Weight,
        roots: Vec<SignedRoot>,
    ) -> Result<LambdaChain> {
        let mut m = vec![0i64; rs.num_positive_roots()];
        let mut reflections = Vec::with_capacity(roots.len());
        for beta in &roots {
            let level = if beta.negative {
                m[beta.index] += 1;
                m[beta.index]
            } else {
                let level = m[beta.index];
                m[beta.index] -= 1;
                level
            };
            reflections.push(AffineReflection {
                root: beta.index,
                level,
            });
        }
        for (i, mi) in m.iter().enumerate() {
            let expected = -rs.pairing(&lambda, SignedRoot::positive(i));
            if *mi != expected {
                return Err(invalid(format!(
                    "root sequence is not a valid chain for the given weight: \
                     m_α = {mi} but −(λ, α∨) = {expected} at positive root {i}"
                )));
            }
        }
        let mut seen = vec![[false, false]; rs.num_positive_roots()];
        for beta in &roots {
            seen[beta.index][usize::from(beta.negative)] = true;
        }
        let reduced = !seen.iter().any(|s| s[0] && s[1]);
        Ok(LambdaChain {
            lambda,
            roots,
            reflections,
            reduced,
        })
    }
}

/// The set R_λ of affine reflections in the hyperplanes separating A∘ from
/// A∘ − λ, ordered by (root index, level) for determinism.
pub fn separating_reflections(rs: &RootSystem, lambda: &Weight) -> Vec<AffineReflection> {
    let mut out = Vec::new();
    for i in 0..rs.num_positive_roots() {
        let p = rs.pairing(lambda, SignedRoot::positive(i));
        if p > 0 {
            for k in (1 - p)..=0 {
                out.push(AffineReflection { root: i, level: k });
            }
        } else if p < 0 {
            for k in 1..=(-p) {
                out.push(AffineReflection { root: i, level: k });
            }
        }
    }
    out.sort();
    out
}

/// Exact fraction with positive denominator, for lexicographic sorting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Frac {
        assert!(den != 0, "zero denominator");
        let g = crate::root_system::gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Frac {
            num: s * num / g,
            den: s * den / g,
        }
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// The map h(s_{α,k}) = (λ, α∨)^{-1} · (−k, (ω_1, α∨), ..., (ω_r, α∨)),
/// the crossing-time signature of the reflection along the perturbed
/// straight-line walk towards −λ.
pub fn h_vector(rs: &RootSystem, r: &AffineReflection, lambda: &Weight) -> Result<Vec<Frac>> {
    let m = rs.pairing(lambda, SignedRoot::positive(r.root));
    if m == 0 {
        return Err(invalid(
            "reflection does not separate A∘ from A∘ − λ: (λ, α∨) = 0",
        ));
    }
    let mut v = Vec::with_capacity(rs.rank() + 1);
    v.push(Frac::new(-r.level, m));
    for c in &rs.root(r.root).coroot_coords {
        v.push(Frac::new(*c, m));
    }
    Ok(v)
}

fn b_map(r: &AffineReflection) -> SignedRoot {
    SignedRoot {
        index: r.root,
        negative: r.level > 0,
    }
}

/// The reduced λ-chain from the lexicographic construction: sort R_λ by the
/// crossing-time signature and read off the roots.
///
/// The sort key reverses the fundamental-coordinate block of `h_vector`
/// (the simple-root total order α_r < ... < α_1), the choice that
/// reproduces the known worked chains in types A and G2 alike.
pub fn build_reduced_chain(rs: &RootSystem, lambda: &Weight) -> Result<LambdaChain> {
    let refs = separating_reflections(rs, lambda);
    let mut keyed: Vec<(Vec<Frac>, AffineReflection)> = refs
        .into_iter()
        .map(|r| {
            let h = h_vector(rs, &r, lambda).expect("separating reflection has nonzero pairing");
            let mut key = vec![h[0]];
            key.extend(h[1..].iter().rev());
            (key, r)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    for pair in keyed.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(internal("crossing-time map is not injective on R_λ"));
        }
    }
    let roots: Vec<SignedRoot> = keyed.iter().map(|(_, r)| b_map(r)).collect();
    let chain = LambdaChain::from_roots(rs, lambda.clone(), roots)?;
    if chain.reflections != keyed.into_iter().map(|(_, r)| r).collect::<Vec<_>>() {
        return Err(internal(
            "replayed reflections disagree with the separating set",
        ));
    }
    if !chain.reduced {
        return Err(internal("lexicographic chain is not reduced"));
    }
    Ok(chain)
}

/// Turn a λ-chain into a (−λ)-chain: reverse the walk and negate the labels.
pub fn reverse_negate_chain(rs: &RootSystem, chain: &LambdaChain) -> Result<LambdaChain> {
    let roots: Vec<SignedRoot> = chain.roots.iter().rev().map(|b| b.negated()).collect();
    LambdaChain::from_roots(rs, chain.lambda.neg(), roots)
}

/// Concatenate a λ-chain and a μ-chain into a (λ+μ)-chain: the μ-walk runs
/// first, then the λ-walk translated by −μ (so the λ-reflections get their
/// levels shifted by −(μ, α∨), which the replay performs implicitly).
pub fn concat_chains(
    rs: &RootSystem,
    c_lambda: &LambdaChain,
    c_mu: &LambdaChain,
) -> Result<LambdaChain> {
    let mut roots = c_mu.roots.clone();
    roots.extend(c_lambda.roots.iter().copied());
    LambdaChain::from_roots(rs, c_lambda.lambda.add(&c_mu.lambda), roots)
}

/// From a λ-chain make the s_i(λ)-chain (α_i, s_i(β_1), ..., s_i(β_l), −α_i).
pub fn si_conjugate_chain(rs: &RootSystem, chain: &LambdaChain, i: usize) -> Result<LambdaChain> {
    if i >= rs.rank() {
        return Err(invalid("simple index out of range"));
    }
    let alpha_i = SignedRoot::positive(rs.simple_root_index(i));
    let si = WeylElement::simple(rs, i);
    let mut roots = vec![alpha_i];
    roots.extend(chain.roots.iter().map(|b| si.act_root(rs, *b)));
    roots.push(alpha_i.negated());
    let new_lambda = si.act_weight(&chain.lambda);
    LambdaChain::from_roots(rs, new_lambda, roots)
}

/// Tail-flip at position j (1-based), defined when ±β_j is a simple root
/// α_i: returns the s(λ)-chain (α_i, s_i(β_1), ..., s_i(β_{j-1}),
/// β_{j+1}, ..., β_l), where s is the affine reflection in the wall the
/// reversed walk A∘ → A∘ + λ crosses at the step labeled β_j.
pub fn tail_flip_chain(rs: &RootSystem, chain: &LambdaChain, j: usize) -> Result<LambdaChain> {
    if j == 0 || j > chain.len() {
        return Err(invalid("tail-flip position out of range"));
    }
    let beta_j = chain.roots[j - 1];
    let simple = (0..rs.rank()).find(|&i| rs.simple_root_index(i) == beta_j.index);
    let Some(i) = simple else {
        return Err(invalid("tail-flip needs ±β_j to be a simple root"));
    };

    // Walk the reversed path A∘ → A∘ + λ (labels β_l, ..., β_1, each step in
    // the +β direction) down to the step labeled β_j to find its wall level.
    let mut m = vec![0i64; rs.num_positive_roots()];
    let mut level = None;
    for t in (1..=chain.len()).rev() {
        let beta = chain.roots[t - 1];
        let k = if beta.negative {
            let k = m[beta.index];
            m[beta.index] -= 1;
            k
        } else {
            m[beta.index] += 1;
            m[beta.index]
        };
        if t == j {
            level = Some(k);
            break;
        }
    }
    let s = AffineReflection {
        root: beta_j.index,
        level: level.expect("loop reaches t = j"),
    };

    let si = WeylElement::simple(rs, i);
    let mut roots = vec![SignedRoot::positive(rs.simple_root_index(i))];
    roots.extend(chain.roots[..j - 1].iter().map(|b| si.act_root(rs, *b)));
    roots.extend(chain.roots[j..].iter().copied());
    let new_lambda = s.apply(rs, &chain.lambda);
    LambdaChain::from_roots(rs, new_lambda, roots)
}

/// Insert an adjacent (β, −β) pair at `pos`, producing a valid non-reduced
/// chain for the same weight.
pub fn insert_crossing_pair(
    rs: &RootSystem,
    chain: &LambdaChain,
    pos: usize,
    beta: SignedRoot,
) -> Result<LambdaChain> {
    if pos > chain.len() {
        return Err(invalid("insertion position out of range"));
    }
    let mut roots = chain.roots.clone();
    roots.insert(pos, beta.negated());
    roots.insert(pos, beta);
    LambdaChain::from_roots(rs, chain.lambda.clone(), roots)
}

/// h-scaled central points of the alcoves along the walk A∘ → A∘ − λ:
/// starting from ρ (= h ζ_{A∘}), each crossing labeled β subtracts β.
pub fn central_points(rs: &RootSystem, chain: &LambdaChain) -> Vec<Weight> {
    let mut out = Vec::with_capacity(chain.len() + 1);
    let mut z = rs.rho().clone();
    out.push(z.clone());
    for beta in &chain.roots {
        z = z.sub(&rs.signed_weight_coords(*beta));
        out.push(z.clone());
    }
    out
}

/// Minuscule test: every pairing (λ, α∨), α > 0, lies in {0, 1}.
pub fn is_minuscule(rs: &RootSystem, lambda: &Weight) -> bool {
    (0..rs.num_positive_roots()).all(|i| {
        let p = rs.pairing(lambda, SignedRoot::positive(i));
        p == 0 || p == 1
    })
}

/// The element v_{−λ} of the affine Weyl group, when it is finite — exactly
/// for minuscule λ. Characterized by v(ρ) = ρ − hλ on the h-scaled lattice.
pub fn v_minus_lambda_in_w(rs: &RootSystem, lambda: &Weight) -> Option<WeylElement> {
    if !is_minuscule(rs, lambda) {
        return None;
    }
    let target = rs.rho().sub(&lambda.scale(rs.coxeter_number()));
    // ρ is regular dominant, so pulling `target` back to the dominant
    // chamber writes down the unique w with w(ρ) = target.
    let mut nu = target.clone();
    let mut word_rev = Vec::new();
    while let Some(i) = (0..rs.rank()).find(|&i| nu.0[i] < 0) {
        nu = WeylElement::simple(rs, i).act_weight(&nu);
        word_rev.push(i);
    }
    debug_assert_eq!(nu, *rs.rho());
    let mut w = WeylElement::identity(rs);
    for &i in word_rev.iter().rev() {
        w = WeylElement::multiply(rs, &WeylElement::simple(rs, i), &w);
    }
    debug_assert_eq!(w.act_weight(rs.rho()), target);
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{to_bracket, Family, RootSystem};
    use proptest::prelude::*;

    fn chain_root_coords(rs: &RootSystem, chain: &LambdaChain) -> Vec<Vec<i64>> {
        chain
            .roots
            .iter()
            .map(|b| rs.signed_root_coords(*b))
            .collect()
    }

    #[test]
    fn separating_set_empty_for_zero() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        assert!(separating_reflections(&rs, &Weight::zero(2)).is_empty());
        let chain = build_reduced_chain(&rs, &Weight::zero(2)).unwrap();
        assert!(chain.is_empty());
    }

    #[test]
    fn g2_omega1_separating_set_and_h_vectors() {
        let rs = RootSystem::build(Family::G, 2).unwrap();
        let om1 = Weight::fundamental(2, 0);
        let idx = |a: &[i64]| rs.classify(a).unwrap().index;
        let set = separating_reflections(&rs, &om1);
        let expect: Vec<(usize, i64)> = vec![
            (idx(&[1, 0]), 0),
            (idx(&[3, 1]), 0),
            (idx(&[2, 1]), 0),
            (idx(&[2, 1]), -1),
            (idx(&[3, 2]), 0),
            (idx(&[1, 1]), 0),
        ];
        let got: Vec<(usize, i64)> = set.iter().map(|r| (r.root, r.level)).collect();
        let mut expect_sorted = expect.clone();
        expect_sorted.sort();
        assert_eq!(got, expect_sorted);

        // crossing-time signature of s_{2α_1+α_2, 0} at λ = ω_1 is (0, 1, 3/2)
        let h = h_vector(
            &rs,
            &AffineReflection {
                root: idx(&[2, 1]),
                level: 0,
            },
            &om1,
        )
        .unwrap();
        assert_eq!(h, vec![Frac::new(0, 1), Frac::new(1, 1), Frac::new(3, 2)]);
        // and of s_{α_2, 0} at λ = ω_2 is (0, 0, 1)
        let om2 = Weight::fundamental(2, 1);
        let h2 = h_vector(
            &rs,
            &AffineReflection {
                root: idx(&[0, 1]),
                level: 0,
            },
            &om2,
        )
        .unwrap();
        assert_eq!(h2, vec![Frac::new(0, 1), Frac::new(0, 1), Frac::new(1, 1)]);
        // zero pairing is an error
        assert!(h_vector(
            &rs,
            &AffineReflection {
                root: idx(&[0, 1]),
                level: 0
            },
            &om1
        )
        .is_err());
    }

    #[test]
    fn g2_fundamental_chains() {
        let rs = RootSystem::build(Family::G, 2).unwrap();
        let chain1 = build_reduced_chain(&rs, &Weight::fundamental(2, 0)).unwrap();
        assert_eq!(
            chain_root_coords(&rs, &chain1),
            vec![
                vec![1, 0],
                vec![3, 1],
                vec![2, 1],
                vec![3, 2],
                vec![1, 1],
                vec![2, 1]
            ]
        );
        let chain2 = build_reduced_chain(&rs, &Weight::fundamental(2, 1)).unwrap();
        assert_eq!(
            chain_root_coords(&rs, &chain2),
            vec![
                vec![0, 1],
                vec![1, 1],
                vec![3, 2],
                vec![2, 1],
                vec![3, 1],
                vec![1, 1],
                vec![2, 1],
                vec![3, 2],
                vec![1, 1],
                vec![2, 1]
            ]
        );
        let levels: Vec<i64> = chain2.reflections.iter().map(|r| r.level).collect();
        assert_eq!(levels, vec![0, 0, 0, 0, 0, -1, -1, -1, -2, -2]);
    }

    #[test]
    fn a3_omega2_chain() {
        let rs = RootSystem::build(Family::A, 3).unwrap();
        let chain = build_reduced_chain(&rs, &Weight::fundamental(3, 1)).unwrap();
        assert_eq!(
            chain_root_coords(&rs, &chain),
            vec![vec![0, 1, 0], vec![1, 1, 0], vec![0, 1, 1], vec![1, 1, 1]]
        );
    }

    #[test]
    fn a_omega1_chain_general() {
        for n in 2..=5usize {
            let rs = RootSystem::build(Family::A, n - 1).unwrap();
            let chain = build_reduced_chain(&rs, &Weight::fundamental(n - 1, 0)).unwrap();
            let expect: Vec<Vec<i64>> = (1..n)
                .map(|j| (0..n - 1).map(|t| i64::from(t < j)).collect())
                .collect();
            assert_eq!(chain_root_coords(&rs, &chain), expect);
        }
    }

    #[test]
    fn c3_omega1_chain_matches_epsilon_form() {
        // (ε_1−ε_2, ε_1−ε_3, 2ε_1, ε_1+ε_3, ε_1+ε_2)
        let rs = RootSystem::build(Family::C, 3).unwrap();
        let chain = build_reduced_chain(&rs, &Weight::fundamental(3, 0)).unwrap();
        assert_eq!(
            chain_root_coords(&rs, &chain),
            vec![
                vec![1, 0, 0],
                vec![1, 1, 0],
                vec![2, 2, 1],
                vec![1, 1, 1],
                vec![1, 2, 1]
            ]
        );
    }

    #[test]
    fn example_chain_for_3_1_0() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let chain = build_reduced_chain(&rs, &Weight(vec![2, 1])).unwrap();
        assert_eq!(
            chain_root_coords(&rs, &chain),
            vec![
                vec![1, 0],
                vec![1, 1],
                vec![0, 1],
                vec![1, 1],
                vec![1, 0],
                vec![1, 1]
            ]
        );
        let refl: Vec<(Vec<i64>, i64)> = chain
            .reflections
            .iter()
            .map(|r| (rs.root(r.root).root_coords.clone(), r.level))
            .collect();
        assert_eq!(
            refl,
            vec![
                (vec![1, 0], 0),
                (vec![1, 1], 0),
                (vec![0, 1], 0),
                (vec![1, 1], -1),
                (vec![1, 0], -1),
                (vec![1, 1], -2)
            ]
        );
        assert!(chain.reduced);
    }

    #[test]
    fn reduced_chain_root_counts() {
        // in a reduced chain, α appears (λ, α∨) times and −α never, when the
        // pairing is nonnegative
        let rs = RootSystem::build(Family::B, 2).unwrap();
        for lambda in [
            Weight(vec![2, 1]),
            Weight(vec![0, 3]),
            Weight(vec![-1, 2]),
            Weight(vec![-2, -1]),
        ] {
            let chain = build_reduced_chain(&rs, &lambda).unwrap();
            for i in 0..rs.num_positive_roots() {
                let p = rs.pairing(&lambda, SignedRoot::positive(i));
                let pos = chain
                    .roots
                    .iter()
                    .filter(|b| b.index == i && !b.negative)
                    .count() as i64;
                let neg = chain
                    .roots
                    .iter()
                    .filter(|b| b.index == i && b.negative)
                    .count() as i64;
                if p >= 0 {
                    assert_eq!((pos, neg), (p, 0));
                } else {
                    assert_eq!((pos, neg), (0, -p));
                }
            }
            // all reflections distinct
            let mut refl = chain.reflections.clone();
            refl.sort();
            refl.dedup();
            assert_eq!(refl.len(), chain.len());
        }
    }

    #[test]
    fn h_injective_on_fundamental_weights() {
        for rs in [
            RootSystem::build(Family::A, 3).unwrap(),
            RootSystem::build(Family::B, 3).unwrap(),
            RootSystem::build(Family::C, 3).unwrap(),
            RootSystem::build(Family::G, 2).unwrap(),
        ] {
            for i in 0..rs.rank() {
                let lam = Weight::fundamental(rs.rank(), i);
                let set = separating_reflections(&rs, &lam);
                let mut hs: Vec<Vec<Frac>> = set
                    .iter()
                    .map(|r| h_vector(&rs, r, &lam).unwrap())
                    .collect();
                hs.sort();
                hs.dedup();
                assert_eq!(hs.len(), set.len());
            }
        }
    }

    #[test]
    fn reverse_negate_round_trip() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let chain = build_reduced_chain(&rs, &Weight::fundamental(2, 0)).unwrap();
        let rev = reverse_negate_chain(&rs, &chain).unwrap();
        assert_eq!(rev.lambda, Weight(vec![-1, 0]));
        assert_eq!(
            chain_root_coords(&rs, &rev),
            vec![vec![-1, -1], vec![-1, 0]]
        );
        // reflections are the translated originals, in reverse
        assert_eq!(
            rev.reflections,
            vec![
                AffineReflection {
                    root: rs.classify(&[1, 1]).unwrap().index,
                    level: 1
                },
                AffineReflection {
                    root: rs.classify(&[1, 0]).unwrap().index,
                    level: 1
                },
            ]
        );
        let back = reverse_negate_chain(&rs, &rev).unwrap();
        assert_eq!(back, chain);

        let empty = LambdaChain::from_roots(&rs, Weight::zero(2), vec![]).unwrap();
        assert_eq!(reverse_negate_chain(&rs, &empty).unwrap(), empty);
    }

    #[test]
    fn translated_reflection_formula_matches_replay() {
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let lam = Weight(vec![1, 2]);
        let mu = Weight(vec![2, 0]);
        let cl = build_reduced_chain(&rs, &lam).unwrap();
        let cm = build_reduced_chain(&rs, &mu).unwrap();
        let cat = concat_chains(&rs, &cl, &cm).unwrap();
        assert_eq!(cat.lambda, Weight(vec![3, 2]));
        // first block: μ-chain verbatim; second block: λ-reflections shifted
        // by −(μ, α∨)
        assert_eq!(&cat.reflections[..cm.len()], &cm.reflections[..]);
        let shifted: Vec<AffineReflection> = cl
            .reflections
            .iter()
            .map(|r| r.translate(&rs, &mu.neg()))
            .collect();
        assert_eq!(&cat.reflections[cm.len()..], &shifted[..]);
    }

    #[test]
    fn concat_with_empty_is_identity() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let c = build_reduced_chain(&rs, &Weight(vec![2, 1])).unwrap();
        let empty = LambdaChain::from_roots(&rs, Weight::zero(2), vec![]).unwrap();
        assert_eq!(concat_chains(&rs, &c, &empty).unwrap(), c);
    }

    #[test]
    fn concat_of_fundamental_chains_gives_the_worked_chain() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let c1 = build_reduced_chain(&rs, &Weight::fundamental(2, 0)).unwrap();
        let c2 = build_reduced_chain(&rs, &Weight::fundamental(2, 1)).unwrap();
        let inner = concat_chains(&rs, &c1, &c2).unwrap();
        let full = concat_chains(&rs, &inner, &c1).unwrap();
        assert_eq!(full.lambda, Weight(vec![2, 1]));
        assert_eq!(
            chain_root_coords(&rs, &full),
            vec![
                vec![1, 0],
                vec![1, 1],
                vec![0, 1],
                vec![1, 1],
                vec![1, 0],
                vec![1, 1]
            ]
        );
    }

    #[test]
    fn si_conjugate_of_empty_chain() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let empty = LambdaChain::from_roots(&rs, Weight::zero(2), vec![]).unwrap();
        let conj = si_conjugate_chain(&rs, &empty, 0).unwrap();
        assert_eq!(chain_root_coords(&rs, &conj), vec![vec![1, 0], vec![-1, 0]]);
        assert!(!conj.reduced);
        assert_eq!(conj.lambda, Weight::zero(2));
    }

    #[test]
    fn si_conjugate_of_omega1_chain() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let chain = build_reduced_chain(&rs, &Weight::fundamental(2, 0)).unwrap();
        let conj = si_conjugate_chain(&rs, &chain, 0).unwrap();
        // (α_1, s_1(α_1), s_1(α_1+α_2), −α_1) = (α_1, −α_1, α_2, −α_1)
        assert_eq!(
            chain_root_coords(&rs, &conj),
            vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![-1, 0]]
        );
        assert_eq!(conj.lambda, Weight(vec![-1, 1]));
    }

    #[test]
    fn tail_flip_validates() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let chain = build_reduced_chain(&rs, &Weight(vec![2, 1])).unwrap();
        // positions with simple ±β_j: 1 (α_1), 3 (α_2), 5 (α_1)
        for j in [1usize, 3, 5] {
            let flipped = tail_flip_chain(&rs, &chain, j).unwrap();
            assert_eq!(flipped.len(), chain.len());
            // validity is what from_roots checks; also the multiset of
            // separating hyperplanes of the new weight is a sub-multiset of
            // the walk for reduced results
            if flipped.reduced {
                let expect = separating_reflections(&rs, &flipped.lambda);
                let mut got = flipped.reflections.clone();
                got.sort();
                assert_eq!(got, expect);
            }
        }
        assert!(tail_flip_chain(&rs, &chain, 2).is_err());
        assert!(tail_flip_chain(&rs, &chain, 7).is_err());
    }

    #[test]
    fn inserted_pair_is_valid_non_reduced() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let chain = build_reduced_chain(&rs, &Weight(vec![2, 1])).unwrap();
        let beta = SignedRoot::positive(rs.classify(&[0, 1]).unwrap().index);
        let fat = insert_crossing_pair(&rs, &chain, 2, beta).unwrap();
        assert_eq!(fat.len(), chain.len() + 2);
        assert!(!fat.reduced);
        assert_eq!(fat.lambda, chain.lambda);
    }

    #[test]
    fn invalid_root_sequence_rejected() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let a1 = SignedRoot::positive(rs.simple_root_index(0));
        assert!(LambdaChain::from_roots(&rs, Weight::fundamental(2, 0), vec![a1]).is_err());
    }

    #[test]
    fn central_walk_type_a() {
        // h-scaled central points for the ω_2-walk in A_3 start at ρ and end
        // at ρ − 4ω_2; in bracket form that is [4,3,2,1] → [2,1,4,3]
        let rs = RootSystem::build(Family::A, 3).unwrap();
        let chain = build_reduced_chain(&rs, &Weight::fundamental(3, 1)).unwrap();
        let pts = central_points(&rs, &chain);
        assert_eq!(to_bracket(&pts[0]), vec![3, 2, 1, 0]);
        let last = pts.last().unwrap();
        assert_eq!(last, &rs.rho().sub(&Weight::fundamental(3, 1).scale(4)));
        assert_eq!(
            to_bracket(last),
            to_bracket(&from_shifted(vec![2, 1, 4, 3]))
        );
        for (k, pair) in pts.windows(2).enumerate() {
            let diff = pair[1].sub(&pair[0]);
            assert_eq!(diff, rs.signed_weight_coords(chain.roots[k]).neg());
        }
    }

    fn from_shifted(bracket: Vec<i64>) -> Weight {
        crate::root_system::from_bracket(&bracket).unwrap()
    }

    #[test]
    fn central_point_of_fundamental_alcove_is_rho() {
        for n in 2..=4usize {
            let rs = RootSystem::build(Family::A, n - 1).unwrap();
            let chain = build_reduced_chain(&rs, &Weight::zero(n - 1)).unwrap();
            let pts = central_points(&rs, &chain);
            assert_eq!(pts, vec![rs.rho().clone()]);
            let expect: Vec<i64> = (0..n as i64).rev().collect();
            assert_eq!(to_bracket(&pts[0]), expect);
        }
    }

    #[test]
    fn minuscule_classification() {
        let c2 = RootSystem::build(Family::C, 2).unwrap();
        assert!(is_minuscule(&c2, &Weight::fundamental(2, 0)));
        assert!(!is_minuscule(&c2, &Weight::fundamental(2, 1)));
        assert!(v_minus_lambda_in_w(&c2, &Weight::fundamental(2, 0)).is_some());
        assert!(v_minus_lambda_in_w(&c2, &Weight::fundamental(2, 1)).is_none());

        let b3 = RootSystem::build(Family::B, 3).unwrap();
        let spin = v_minus_lambda_in_w(&b3, &Weight::fundamental(3, 2)).unwrap();
        assert_eq!(spin.length() as usize, 3 * 4 / 2);
    }

    #[test]
    fn v_minus_omega_k_in_type_a() {
        // v_{−ω_k} is the k-shift permutation; pin it down by its action on ρ
        let rs = RootSystem::build(Family::A, 3).unwrap();
        let n = 4i64;
        for k in 0..3 {
            let om = Weight::fundamental(3, k);
            let v = v_minus_lambda_in_w(&rs, &om).expect("fundamental A-weights are minuscule");
            // ρ is regular, so v(ρ) = ρ − nω_k pins down the shift permutation
            assert_eq!(v.act_weight(rs.rho()), rs.rho().sub(&om.scale(n)));
            assert_eq!(v.length() as usize, separating_reflections(&rs, &om).len());
        }
    }

    proptest! {
        #[test]
        fn separating_count_is_pairing_sum(a in -4i64..=4, b in -4i64..=4) {
            let rs = RootSystem::build(Family::B, 2).unwrap();
            let lam = Weight(vec![a, b]);
            let total: i64 = (0..rs.num_positive_roots())
                .map(|i| rs.pairing(&lam, SignedRoot::positive(i)).abs())
                .sum();
            prop_assert_eq!(separating_reflections(&rs, &lam).len() as i64, total);
            let chain = build_reduced_chain(&rs, &lam).unwrap();
            prop_assert_eq!(chain.len() as i64, total);
        }

        #[test]
        fn double_reverse_negate_is_identity(a in -3i64..=3, b in -3i64..=3) {
            let rs = RootSystem::build(Family::A, 2).unwrap();
            let lam = Weight(vec![a, b]);
            let chain = build_reduced_chain(&rs, &lam).unwrap();
            let back = reverse_negate_chain(&rs, &reverse_negate_chain(&rs, &chain).unwrap()).unwrap();
            prop_assert_eq!(back, chain);
        }
    }
}
