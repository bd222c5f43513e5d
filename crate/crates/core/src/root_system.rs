//! Exact root-system kernel.
//!
//! Everything is integral: weights are stored in fundamental-weight
//! coordinates, roots in simple-root coordinates, and coroots in
//! simple-coroot coordinates. The normalized pairing (λ, α∨) is then a plain
//! dot product, so no square roots from an invariant form ever appear.
//!
//! The Cartan matrix convention is `cartan[i][j] = (α_j, α_i∨)`, which makes
//! the column `i` of the matrix equal to the simple root α_i written in
//! fundamental coordinates.

use std::collections::HashMap;
use std::fmt;

use crate::error::{internal, invalid, Result};

/// Simple Lie family of a root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
    /// Built from a user-supplied Cartan matrix; untested beyond finiteness.
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
            Family::Custom => "Custom",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "G" | "g" | "G2" | "g2" => Ok(Family::G),
            other => Err(invalid(format!(
                "unknown family `{other}` (expected A, B, C, D or G)"
            ))),
        }
    }
}

/// A weight in fundamental-weight coordinates: `Weight(vec![a_1, ..., a_r])`
/// stands for a_1 ω_1 + ... + a_r ω_r.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&x| x <= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| k * a).collect())
    }
}

/// A positive root, carrying its coordinates in all three bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the simple-root basis (all ≥ 0 here).
    pub root_coords: Vec<i64>,
    /// Coordinates of the coroot α∨ in the simple-coroot basis; entry i
    /// equals (ω_i, α∨).
    pub coroot_coords: Vec<i64>,
    /// The root as a weight, i.e. fundamental coordinates (α, α_i∨).
    pub weight_coords: Vec<i64>,
}

impl Root {
    /// Height of the coroot α∨, i.e. (ρ, α∨).
    pub fn coroot_height(&self) -> i64 {
        self.coroot_coords.iter().sum()
    }
}

/// A root of either sign, referring to the positive-root table of its
/// `RootSystem` by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedRoot {
    pub index: usize,
    pub negative: bool,
}

impl SignedRoot {
    pub fn positive(index: usize) -> Self {
        SignedRoot {
            index,
            negative: false,
        }
    }

    pub fn negated(self) -> Self {
        SignedRoot {
            index: self.index,
            negative: !self.negative,
        }
    }

    pub fn sign(self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

/// An irreducible (or custom) finite root system with exact integer tables.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    /// cartan[i][j] = (α_j, α_i∨)
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    index_of: HashMap<Vec<i64>, usize>,
    rho: Weight,
    /// Index into `positive_roots` of the root whose coroot is highest.
    highest_coroot_index: usize,
    coxeter_number: i64,
}

fn family_cartan(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    let chain = |r: usize| -> Vec<Vec<i64>> {
        let mut c = vec![vec![0i64; r]; r];
        for i in 0..r {
            c[i][i] = 2;
            if i + 1 < r {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c
    };
    match family {
        Family::A => {
            if rank < 1 {
                return Err(invalid("family A needs rank >= 1"));
            }
            Ok(chain(rank))
        }
        Family::B => {
            if rank < 2 {
                return Err(invalid("family B needs rank >= 2"));
            }
            let mut c = chain(rank);
            // short last root: (α_{r-1}, α_r∨) = -2
            c[rank - 1][rank - 2] = -2;
            Ok(c)
        }
        Family::C => {
            if rank < 2 {
                return Err(invalid("family C needs rank >= 2"));
            }
            let mut c = chain(rank);
            // long last root: (α_r, α_{r-1}∨) = -2
            c[rank - 2][rank - 1] = -2;
            Ok(c)
        }
        Family::D => {
            if rank < 3 {
                return Err(invalid("family D needs rank >= 3"));
            }
            let mut c = chain(rank - 1);
            for row in c.iter_mut() {
                row.push(0);
            }
            c.push(vec![0; rank]);
            c[rank - 1][rank - 1] = 2;
            c[rank - 1][rank - 3] = -1;
            c[rank - 3][rank - 1] = -1;
            Ok(c)
        }
        Family::G => {
            if rank != 2 {
                return Err(invalid("family G needs rank 2"));
            }
            // α_1 short, α_2 long
            Ok(vec![vec![2, -3], vec![-1, 2]])
        }
        Family::Custom => Err(invalid("custom systems go through RootSystem::from_cartan")),
    }
}

fn expected_positive_count(family: Family, rank: usize) -> Option<usize> {
    match family {
        Family::A => Some(rank * (rank + 1) / 2),
        Family::B | Family::C => Some(rank * rank),
        Family::D => Some(rank * (rank - 1)),
        Family::G => Some(6),
        Family::Custom => None,
    }
}

impl RootSystem {
    /// Build a root system for one of the named families.
    pub fn build(family: Family, rank: usize) -> Result<RootSystem> {
        let cartan = family_cartan(family, rank)?;
        Self::from_parts(family, cartan)
    }

    /// Build from an arbitrary Cartan matrix (finite type expected; the
    /// closure aborts if the root count explodes).
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<RootSystem> {
        let r = cartan.len();
        if r == 0 || cartan.iter().any(|row| row.len() != r) {
            return Err(invalid("Cartan matrix must be square and nonempty"));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row[i] != 2 {
                return Err(invalid("Cartan matrix needs 2 on the diagonal"));
            }
            for (j, &entry) in row.iter().enumerate() {
                if i != j && entry > 0 {
                    return Err(invalid("off-diagonal Cartan entries must be <= 0"));
                }
                if i != j && (entry == 0) != (cartan[j][i] == 0) {
                    return Err(invalid("Cartan zeros must be symmetric"));
                }
            }
        }
        Self::from_parts(Family::Custom, cartan)
    }

    fn from_parts(family: Family, cartan: Vec<Vec<i64>>) -> Result<RootSystem> {
        let rank = cartan.len();
        const ROOT_CAP: usize = 4096;

        // Closure of the simple roots under simple reflections. Root and
        // coroot coordinates ride along together so no invariant form is
        // needed. A signed pair (a, c) transforms under s_i as
        //   a ↦ a - (C a)_i e_i,   c ↦ c - (Cᵀ c)_i e_i.
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for i in 0..rank {
            let mut a = vec![0i64; rank];
            let mut c = vec![0i64; rank];
            a[i] = 1;
            c[i] = 1;
            seen.insert(a.clone(), c.clone());
            queue.push((a, c));
        }
        while let Some((a, c)) = queue.pop() {
            for i in 0..rank {
                let pa: i64 = (0..rank).map(|j| cartan[i][j] * a[j]).sum();
                let pc: i64 = (0..rank).map(|j| cartan[j][i] * c[j]).sum();
                let mut a2 = a.clone();
                let mut c2 = c.clone();
                a2[i] -= pa;
                c2[i] -= pc;
                if !seen.contains_key(&a2) {
                    if seen.len() >= ROOT_CAP {
                        return Err(invalid(
                            "Cartan matrix is not of finite type (root closure exceeded cap)",
                        ));
                    }
                    seen.insert(a2.clone(), c2.clone());
                    queue.push((a2, c2));
                }
            }
        }

        let mut positive: Vec<(Vec<i64>, Vec<i64>)> = seen
            .into_iter()
            .filter(|(a, _)| a.iter().all(|&x| x >= 0))
            .collect();
        // Deterministic indices: sort by (height, lex).
        positive.sort_by(|(a, _), (b, _)| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });

        if let Some(expected) = expected_positive_count(family, rank) {
            if positive.len() != expected {
                return Err(internal(format!(
                    "positive root count {} differs from the expected {} for {}{}",
                    positive.len(),
                    expected,
                    family,
                    rank
                )));
            }
        }

        let positive_roots: Vec<Root> = positive
            .into_iter()
            .map(|(a, c)| {
                let w: Vec<i64> = (0..rank)
                    .map(|i| (0..rank).map(|j| cartan[i][j] * a[j]).sum())
                    .collect();
                Root {
                    root_coords: a,
                    coroot_coords: c,
                    weight_coords: w,
                }
            })
            .collect();
        let index_of: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.root_coords.clone(), i))
            .collect();

        let rho = Weight(vec![1; rank]);
        // ρ is half the sum of the positive roots.
        let mut twice_rho = vec![0i64; rank];
        for r in &positive_roots {
            for (t, w) in twice_rho.iter_mut().zip(&r.weight_coords) {
                *t += w;
            }
        }
        if twice_rho != vec![2i64; rank] {
            return Err(internal(
                "half-sum of positive roots is not ω_1 + ... + ω_r",
            ));
        }

        let highest_coroot_index = (0..positive_roots.len())
            .max_by_key(|&i| positive_roots[i].coroot_height())
            .expect("nonempty root system");
        let coxeter_number = positive_roots[highest_coroot_index].coroot_height() + 1;

        Ok(RootSystem {
            family,
            rank,
            cartan,
            positive_roots,
            index_of,
            rho,
            highest_coroot_index,
            coxeter_number,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Entry (α_j, α_i∨) of the Cartan matrix.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.positive_roots[index]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The highest coroot θ∨, as coordinates in the simple-coroot basis.
    pub fn highest_coroot(&self) -> &[i64] {
        &self.positive_roots[self.highest_coroot_index].coroot_coords
    }

    /// Coxeter number h = (ρ, θ∨) + 1.
    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    /// Index of the simple root α_i in the positive-root table.
    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut a = vec![0i64; self.rank];
        a[i] = 1;
        self.index_of[&a]
    }

    /// Look up a root given in simple-root coordinates (either sign).
    pub fn classify(&self, coords: &[i64]) -> Option<SignedRoot> {
        if let Some(&i) = self.index_of.get(coords) {
            return Some(SignedRoot::positive(i));
        }
        let neg: Vec<i64> = coords.iter().map(|x| -x).collect();
        self.index_of.get(&neg).map(|&i| SignedRoot {
            index: i,
            negative: true,
        })
    }

    /// Simple-root coordinates of a signed root.
    pub fn signed_root_coords(&self, beta: SignedRoot) -> Vec<i64> {
        let s = beta.sign();
        self.positive_roots[beta.index]
            .root_coords
            .iter()
            .map(|x| s * x)
            .collect()
    }

    /// The signed root as a weight (fundamental coordinates).
    pub fn signed_weight_coords(&self, beta: SignedRoot) -> Weight {
        let s = beta.sign();
        Weight(
            self.positive_roots[beta.index]
                .weight_coords
                .iter()
                .map(|x| s * x)
                .collect(),
        )
    }

    /// Pairing (λ, α∨) of a weight with the coroot of a signed root.
    pub fn pairing(&self, lambda: &Weight, beta: SignedRoot) -> i64 {
        let dot: i64 = self.positive_roots[beta.index]
            .coroot_coords
            .iter()
            .zip(&lambda.0)
            .map(|(c, l)| c * l)
            .sum();
        beta.sign() * dot
    }

    /// Pairing (β, γ∨) of two signed roots.
    pub fn root_pairing(&self, beta: SignedRoot, gamma: SignedRoot) -> i64 {
        let a = &self.positive_roots[beta.index].root_coords;
        let c = &self.positive_roots[gamma.index].coroot_coords;
        // (α_j, γ∨) = Σ_i c_i cartan[i][j]
        let dot: i64 = (0..self.rank)
            .map(|j| {
                a[j] * (0..self.rank)
                    .map(|i| c[i] * self.cartan[i][j])
                    .sum::<i64>()
            })
            .sum();
        beta.sign() * gamma.sign() * dot
    }

    /// Reflection s_β(λ) = λ − (λ, β∨) β of a weight in a signed root.
    pub fn reflect_weight(&self, lambda: &Weight, beta: SignedRoot) -> Weight {
        let p = self.pairing(lambda, beta);
        let bw = self.signed_weight_coords(beta);
        lambda.sub(&bw.scale(p))
    }

    /// Reflection s_γ(β) of a signed root in another signed root.
    pub fn reflect_root(&self, beta: SignedRoot, gamma: SignedRoot) -> SignedRoot {
        let p = self.root_pairing(beta, gamma);
        let g = self.signed_root_coords(gamma);
        let mut a = self.signed_root_coords(beta);
        for (x, gi) in a.iter_mut().zip(&g) {
            *x -= p * gi;
        }
        self.classify(&a).expect("reflection of a root is a root")
    }

    /// Symmetrizers d_i > 0 with `d_i · cartan[i][j]` symmetric, normalized to
    /// smallest positive integers. Used only for drawing.
    pub fn symmetrizers(&self) -> Vec<i64> {
        let r = self.rank;
        // numerators/denominator propagation along the Dynkin graph
        let mut num = vec![0i64; r];
        let mut den = vec![1i64; r];
        let mut todo = vec![true; r];
        for start in 0..r {
            if !todo[start] {
                continue;
            }
            num[start] = 1;
            den[start] = 1;
            todo[start] = false;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..r {
                    if i != j && self.cartan[i][j] != 0 && todo[j] {
                        // d_j = d_i * cartan[i][j] / cartan[j][i]
                        num[j] = num[i] * self.cartan[i][j];
                        den[j] = den[i] * self.cartan[j][i];
                        if num[j] * den[j] < 0 {
                            num[j] = -num[j];
                            den[j] = -den[j];
                        }
                        todo[j] = false;
                        stack.push(j);
                    }
                }
            }
        }
        let lcm = den.iter().fold(1i64, |acc, &d| {
            let d = d.abs().max(1);
            acc / gcd(acc, d) * d
        });
        let mut d: Vec<i64> = (0..r).map(|i| num[i] * (lcm / den[i])).collect();
        let g = d.iter().fold(0i64, |acc, &x| gcd(acc, x.abs()));
        if g > 1 {
            for x in d.iter_mut() {
                *x /= g;
            }
        }
        d
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// ---------------------------------------------------------------------------
// Type-A bracket coordinates (display / IO layer)
// ---------------------------------------------------------------------------

/// Convert fundamental coordinates of an A_{n-1} weight to the n-entry
/// bracket form [λ_1, ..., λ_n], canonicalized so the minimum entry is 0.
pub fn to_bracket(lambda: &Weight) -> Vec<i64> {
    let r = lambda.rank();
    let mut out = vec![0i64; r + 1];
    let mut acc = 0;
    for k in (0..r).rev() {
        acc += lambda.0[k];
        out[k] = acc;
    }
    let min = *out.iter().min().unwrap();
    for x in out.iter_mut() {
        *x -= min;
    }
    out
}

/// Convert bracket coordinates (length r+1) back to fundamental coordinates.
pub fn from_bracket(bracket: &[i64]) -> Result<Weight> {
    if bracket.len() < 2 {
        return Err(invalid("bracket coordinates need at least 2 entries"));
    }
    Ok(Weight(bracket.windows(2).map(|w| w[0] - w[1]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g2() -> RootSystem {
        RootSystem::build(Family::G, 2).unwrap()
    }

    #[test]
    fn g2_positive_roots_match_known_table() {
        let rs = g2();
        assert_eq!(rs.num_positive_roots(), 6);
        let coords: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.root_coords.clone())
            .collect();
        // (height, lex) order
        assert_eq!(
            coords,
            vec![
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![3, 2]
            ]
        );
        // coroot table: α∨ of 2α_1+α_2 is 2α_1∨+3α_2∨, etc.
        let co = |a: &[i64]| {
            let i = rs.classify(a).unwrap().index;
            rs.root(i).coroot_coords.clone()
        };
        assert_eq!(co(&[1, 0]), vec![1, 0]);
        assert_eq!(co(&[3, 1]), vec![1, 1]);
        assert_eq!(co(&[2, 1]), vec![2, 3]);
        assert_eq!(co(&[3, 2]), vec![1, 2]);
        assert_eq!(co(&[1, 1]), vec![1, 3]);
        assert_eq!(co(&[0, 1]), vec![0, 1]);
        assert_eq!(rs.coxeter_number(), 6);
        assert_eq!(rs.highest_coroot(), &[2, 3]);
    }

    #[test]
    fn counts_and_coxeter_numbers() {
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(a2.num_positive_roots(), 3);
        assert_eq!(a2.coxeter_number(), 3);
        let a3 = RootSystem::build(Family::A, 3).unwrap();
        assert_eq!(a3.coxeter_number(), 4);
        for r in 2..=4 {
            let c = RootSystem::build(Family::C, r).unwrap();
            assert_eq!(c.coxeter_number(), 2 * r as i64);
            assert_eq!(c.num_positive_roots(), r * r);
            let b = RootSystem::build(Family::B, r).unwrap();
            assert_eq!(b.coxeter_number(), 2 * r as i64);
        }
        let d4 = RootSystem::build(Family::D, 4).unwrap();
        assert_eq!(d4.num_positive_roots(), 12);
        assert_eq!(d4.coxeter_number(), 6);
    }

    #[test]
    fn f4_from_cartan() {
        // chain with one double bond in the middle
        let cartan = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ];
        let f4 = RootSystem::from_cartan(cartan).unwrap();
        assert_eq!(f4.num_positive_roots(), 24);
        assert_eq!(f4.coxeter_number(), 12);
    }

    #[test]
    fn infinite_type_rejected() {
        // affine A_1 Cartan matrix
        let err = RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]);
        assert!(err.is_err());
    }

    #[test]
    fn unsupported_ranks_rejected() {
        assert!(RootSystem::build(Family::G, 3).is_err());
        assert!(RootSystem::build(Family::B, 1).is_err());
        assert!(RootSystem::build(Family::A, 0).is_err());
    }

    #[test]
    fn pairing_is_dual_basis() {
        for rs in [
            RootSystem::build(Family::A, 3).unwrap(),
            RootSystem::build(Family::B, 3).unwrap(),
            g2(),
        ] {
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    let om = Weight::fundamental(rs.rank(), i);
                    let aj = SignedRoot::positive(rs.simple_root_index(j));
                    assert_eq!(rs.pairing(&om, aj), i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn rho_theta_pairing_in_a3() {
        let rs = RootSystem::build(Family::A, 3).unwrap();
        let theta = SignedRoot::positive(rs.classify(&[1, 1, 1]).unwrap().index);
        assert_eq!(rs.pairing(rs.rho(), theta), 3);
    }

    #[test]
    fn reflect_rho_by_simple() {
        for rs in [
            RootSystem::build(Family::A, 2).unwrap(),
            RootSystem::build(Family::B, 2).unwrap(),
        ] {
            for i in 0..rs.rank() {
                let ai = SignedRoot::positive(rs.simple_root_index(i));
                let refl = rs.reflect_weight(rs.rho(), ai);
                let alpha_w = rs.signed_weight_coords(ai);
                assert_eq!(refl, rs.rho().sub(&alpha_w));
            }
        }
    }

    #[test]
    fn reflect_omega1_by_alpha2_in_a2() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let om1 = Weight::fundamental(2, 0);
        let a2 = SignedRoot::positive(rs.simple_root_index(1));
        assert_eq!(rs.reflect_weight(&om1, a2), om1);
    }

    #[test]
    fn roots_closed_under_reflections() {
        for rs in [RootSystem::build(Family::B, 3).unwrap(), g2()] {
            for i in 0..rs.num_positive_roots() {
                for j in 0..rs.num_positive_roots() {
                    // classify() panics inside reflect_root if not a root
                    let _ = rs.reflect_root(SignedRoot::positive(i), SignedRoot::positive(j));
                }
            }
        }
    }

    #[test]
    fn highest_coroot_height_is_h_minus_one() {
        for rs in [
            RootSystem::build(Family::A, 3).unwrap(),
            RootSystem::build(Family::B, 3).unwrap(),
            RootSystem::build(Family::C, 3).unwrap(),
            g2(),
        ] {
            let h: i64 = rs.highest_coroot().iter().sum();
            assert_eq!(h, rs.coxeter_number() - 1);
        }
    }

    #[test]
    fn b2_pairing_matches_epsilon_coordinates() {
        // B_2 embedded in R^2: α_1 = ε_1 − ε_2, α_2 = ε_2. Doubled ε
        // coordinates keep everything integral: 2λ = a_1(2,0) + a_2(1,1).
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let eps_coroot = |a: &[i64]| -> (i64, i64) {
            match a {
                [1, 0] => (1, -1), // (ε_1−ε_2)∨
                [0, 1] => (0, 2),  // ε_2∨ = 2ε_2
                [1, 1] => (2, 0),  // ε_1∨ = 2ε_1
                [1, 2] => (1, 1),  // (ε_1+ε_2)∨
                _ => panic!("not a B_2 root"),
            }
        };
        for a1 in -4i64..=4 {
            for a2 in -4i64..=4 {
                let lam = Weight(vec![a1, a2]);
                let twice_eps = (2 * a1 + a2, a2);
                for root in rs.positive_roots() {
                    let (c1, c2) = eps_coroot(&root.root_coords);
                    let via_eps = (twice_eps.0 * c1 + twice_eps.1 * c2) / 2;
                    let sr = rs.classify(&root.root_coords).unwrap();
                    assert_eq!(rs.pairing(&lam, sr), via_eps);
                }
            }
        }
    }

    #[test]
    fn bracket_round_trip() {
        let lam = Weight(vec![2, 1, 0]);
        let b = to_bracket(&lam);
        assert_eq!(b, vec![3, 1, 0, 0]);
        assert_eq!(from_bracket(&b).unwrap(), lam);
        assert_eq!(to_bracket(&Weight(vec![1, 1, 1])), vec![3, 2, 1, 0]);
    }

    proptest! {
        #[test]
        fn reflection_is_involution(coords in proptest::collection::vec(-6i64..=6, 3)) {
            let rs = RootSystem::build(Family::B, 3).unwrap();
            let lam = Weight(coords);
            for i in 0..rs.num_positive_roots() {
                let beta = SignedRoot::positive(i);
                let twice = rs.reflect_weight(&rs.reflect_weight(&lam, beta), beta);
                prop_assert_eq!(&twice, &lam);
                if rs.pairing(&lam, beta) == 0 {
                    prop_assert_eq!(&rs.reflect_weight(&lam, beta), &lam);
                }
            }
        }

        #[test]
        fn pairing_linear_and_odd(a in proptest::collection::vec(-5i64..=5, 2),
                                  b in proptest::collection::vec(-5i64..=5, 2)) {
            let rs = RootSystem::build(Family::G, 2).unwrap();
            let (wa, wb) = (Weight(a), Weight(b));
            for i in 0..rs.num_positive_roots() {
                let beta = SignedRoot::positive(i);
                prop_assert_eq!(rs.pairing(&wa.add(&wb), beta), rs.pairing(&wa, beta) + rs.pairing(&wb, beta));
                prop_assert_eq!(rs.pairing(&wa, beta.negated()), -rs.pairing(&wa, beta));
            }
        }
    }
}
