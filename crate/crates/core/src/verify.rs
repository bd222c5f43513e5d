//! The verification suite behind `alcove verify` and the acceptance test
//! target: golden values, oracle equivalences, operator identities, and
//! symmetry checks, all at exact integer/polynomial equality.

use std::collections::BTreeMap;

use crate::alcove::{build_reduced_chain, concat_chains, insert_crossing_pair};
use crate::characters::{
    character_diff, demazure_character_via_operators, demazure_character_with_count, weyl_dimension,
};
use crate::chevalley::{
    chevalley_coeffs, classical_check, monk, monk_via_line_bundle, ChevalleyTable,
};
use crate::error::{invalid, Result};
use crate::operators::{apply_b, apply_r, multiply_by_exp, KClass};
use crate::poly::LaurentPoly;
use crate::quantum::{
    apply_q, conjectural_monk, linear_truncation, quantum_cohomology_divisor, QClass,
};
use crate::root_system::{Family, RootSystem, SignedRoot, Weight};
use crate::weyl::{element_from_word, WeylElement, WeylGroup};

/// What one named check produced.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn run(name: &'static str, f: impl FnOnce() -> Result<String>) -> Check {
    match f() {
        Ok(detail) => Check {
            name,
            pass: true,
            detail,
        },
        Err(e) => Check {
            name,
            pass: false,
            detail: e.to_string(),
        },
    }
}

/// Run every criterion; one entry per check.
pub fn run_all() -> Vec<Check> {
    vec![
        run("golden-chains", golden_chains),
        run("golden-products", golden_products),
        run("golden-characters", golden_characters),
        run("demazure-operator-oracle", demazure_operator_oracle),
        run("dimension-oracle", dimension_oracle),
        run("operator-route-equivalence", operator_route_equivalence),
        run("yang-baxter", yang_baxter),
        run("chain-independence", chain_independence),
        run("dualities", dualities),
        run("monk-two-routes", monk_two_routes),
        run("sign-laws", sign_laws),
        run("quantum-specializations", quantum_specializations),
        run("classical-limit", classical_limit),
        run("subset-count-is-dimension", subset_count_is_dimension),
    ]
}

fn ensure(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg.to_string()))
    }
}

fn chain_coords(rs: &RootSystem, chain: &crate::alcove::LambdaChain) -> Vec<Vec<i64>> {
    chain
        .roots
        .iter()
        .map(|b| rs.signed_root_coords(*b))
        .collect()
}

/// Reduced chains for ω_2 in A_3 and both fundamental weights in G_2 match
/// the published sequences, including the reflection orders.
pub fn golden_chains() -> Result<String> {
    let a3 = RootSystem::build(Family::A, 3)?;
    let chain = build_reduced_chain(&a3, &Weight::fundamental(3, 1))?;
    ensure(
        chain_coords(&a3, &chain)
            == vec![vec![0, 1, 0], vec![1, 1, 0], vec![0, 1, 1], vec![1, 1, 1]],
        "A_3 ω_2-chain is not (α_23, α_13, α_24, α_14)",
    )?;

    let g2 = RootSystem::build(Family::G, 2)?;
    let c1 = build_reduced_chain(&g2, &Weight::fundamental(2, 0))?;
    ensure(
        chain_coords(&g2, &c1)
            == vec![
                vec![1, 0],
                vec![3, 1],
                vec![2, 1],
                vec![3, 2],
                vec![1, 1],
                vec![2, 1],
            ],
        "G_2 ω_1-chain mismatch",
    )?;
    let refl1: Vec<(Vec<i64>, i64)> = c1
        .reflections
        .iter()
        .map(|r| (g2.root(r.root).root_coords.clone(), r.level))
        .collect();
    ensure(
        refl1
            == vec![
                (vec![1, 0], 0),
                (vec![3, 1], 0),
                (vec![2, 1], 0),
                (vec![3, 2], 0),
                (vec![1, 1], 0),
                (vec![2, 1], -1),
            ],
        "G_2 ω_1 reflection order mismatch",
    )?;
    let c2 = build_reduced_chain(&g2, &Weight::fundamental(2, 1))?;
    ensure(
        chain_coords(&g2, &c2)
            == vec![
                vec![0, 1],
                vec![1, 1],
                vec![3, 2],
                vec![2, 1],
                vec![3, 1],
                vec![1, 1],
                vec![2, 1],
                vec![3, 2],
                vec![1, 1],
                vec![2, 1],
            ],
        "G_2 ω_2-chain mismatch",
    )?;
    let refl2: Vec<(Vec<i64>, i64)> = c2
        .reflections
        .iter()
        .map(|r| (g2.root(r.root).root_coords.clone(), r.level))
        .collect();
    ensure(
        refl2
            == vec![
                (vec![0, 1], 0),
                (vec![1, 1], 0),
                (vec![3, 2], 0),
                (vec![2, 1], 0),
                (vec![3, 1], 0),
                (vec![1, 1], -1),
                (vec![2, 1], -1),
                (vec![3, 2], -1),
                (vec![1, 1], -2),
                (vec![2, 1], -2),
            ],
        "G_2 ω_2 reflection order mismatch",
    )?;
    Ok("A_3 ω_2 and G_2 ω_1/ω_2 chains verbatim".into())
}

fn bracket_table(rs: &RootSystem, t: &ChevalleyTable) -> Vec<(Vec<usize>, Vec<i64>, i64)> {
    let mut out: Vec<(Vec<usize>, Vec<i64>, i64)> = t
        .entries()
        .map(|((w, mu), c)| {
            (
                w.reduced_word(rs).iter().map(|i| i + 1).collect(),
                crate::root_system::to_bracket(mu),
                *c,
            )
        })
        .collect();
    out.sort();
    out
}

/// The two worked type-A expansions, in bracket coordinates.
pub fn golden_products() -> Result<String> {
    let rs = RootSystem::build(Family::A, 2)?;
    let w0 = crate::weyl::longest_element(&rs);
    let t1 = chevalley_coeffs(
        &rs,
        &build_reduced_chain(&rs, &Weight::fundamental(2, 0))?,
        &w0,
    );
    let mut expect1 = vec![
        (vec![1, 2, 1], vec![0, 0, 1], 1),
        (vec![1, 2], vec![0, 1, 0], 1),
        (vec![2], vec![1, 0, 0], 1),
    ];
    expect1.sort();
    ensure(
        bracket_table(&rs, &t1) == expect1,
        "three-term ω_1 expansion mismatch",
    )?;

    let u = element_from_word(&rs, &[1, 0]);
    let t2 = chevalley_coeffs(&rs, &build_reduced_chain(&rs, &Weight(vec![2, 1]))?, &u);
    let mut expect2 = vec![
        (vec![2, 1], vec![1, 0, 3], 1),
        (vec![2], vec![3, 0, 1], 1),
        (vec![2], vec![2, 0, 2], 1),
        (vec![1], vec![1, 3, 0], 1),
        (vec![1], vec![0, 1, 0], 1), // printed representative [1,2,1]
        (vec![1], vec![0, 0, 1], 1), // printed representative [1,1,2]
        (vec![], vec![3, 1, 0], 1),
        (vec![], vec![2, 2, 0], 1),
        (vec![], vec![1, 0, 0], 1), // printed representative [2,1,1]
    ];
    expect2.sort();
    ensure(
        bracket_table(&rs, &t2) == expect2,
        "nine-monomial [3,1,0] expansion mismatch",
    )?;
    Ok("both worked expansions exact".into())
}

/// The two worked characters.
pub fn golden_characters() -> Result<String> {
    let rs = RootSystem::build(Family::A, 2)?;
    let ch1 = crate::characters::irreducible_character(&rs, &Weight::fundamental(2, 0))?;
    let mut expect1 = crate::characters::Character::new(2);
    for b in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
        expect1.add_weight(crate::root_system::from_bracket(&b)?, 1);
    }
    ensure(
        character_diff(&ch1, &expect1).is_empty(),
        "fundamental character mismatch",
    )?;

    let u = element_from_word(&rs, &[1, 0]);
    let ch2 = crate::characters::demazure_character(&rs, &Weight(vec![2, 1]), &u)?;
    let mut expect2 = crate::characters::Character::new(2);
    for b in [
        [1, 0, 3],
        [3, 0, 1],
        [2, 0, 2],
        [1, 3, 0],
        [1, 2, 1],
        [1, 1, 2],
        [3, 1, 0],
        [2, 2, 0],
        [2, 1, 1],
    ] {
        expect2.add_weight(crate::root_system::from_bracket(&b)?, 1);
    }
    ensure(
        character_diff(&ch2, &expect2).is_empty(),
        "nine-term Demazure character mismatch",
    )?;
    ensure(ch2.total_mass() == 9, "nine-term character has wrong mass")?;
    Ok("both worked characters exact".into())
}

/// Chain-walk Demazure characters equal the operator recursion for every
/// group element of A_2 and B_2 over five weights.
pub fn demazure_operator_oracle() -> Result<String> {
    let mut cases = 0usize;
    for fam in [Family::A, Family::B] {
        let rs = RootSystem::build(fam, 2)?;
        let group = WeylGroup::enumerate(&rs);
        let rho = rs.rho().clone();
        let weights = [
            Weight::fundamental(2, 0),
            Weight::fundamental(2, 1),
            rho.clone(),
            rho.scale(2),
            rho.add(&Weight::fundamental(2, 0)),
        ];
        for lam in &weights {
            for u in group.elements() {
                let model = crate::characters::demazure_character(&rs, lam, u)?;
                let oracle = demazure_character_via_operators(&rs, lam, u)?;
                let diff = character_diff(&model, &oracle);
                ensure(
                    diff.is_empty(),
                    &format!(
                        "Demazure mismatch at {fam:?}, λ = {:?}, ℓ(u) = {}",
                        lam,
                        u.length()
                    ),
                )?;
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{cases} (λ, u) pairs agree with the operator recursion"
    ))
}

/// Character masses equal the dimension formula across six systems.
pub fn dimension_oracle() -> Result<String> {
    let systems = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::G, 2),
    ];
    let mut cases = 0usize;
    for (fam, rank) in systems {
        let rs = RootSystem::build(fam, rank)?;
        let w0 = crate::weyl::longest_element(&rs);
        let mut weights: Vec<Weight> = (0..rank).map(|i| Weight::fundamental(rank, i)).collect();
        weights.push(rs.rho().clone());
        for lam in weights {
            let (ch, count) = demazure_character_with_count(&rs, &lam, &w0)?;
            let dim = weyl_dimension(&rs, &lam)?;
            ensure(
                ch.total_mass() == dim && count == dim,
                &format!("mass ≠ dimension at {fam:?}{rank}, λ = {:?}", lam),
            )?;
            cases += 1;
        }
    }
    // the ρ-dimension of A_3 is 2^6
    let a3 = RootSystem::build(Family::A, 3)?;
    ensure(weyl_dimension(&a3, a3.rho())? == 64, "dim V_ρ(A_3) ≠ 64")?;
    Ok(format!("{cases} characters match the dimension formula"))
}

/// The chain of R operators equals the subset-walk table entry for entry,
/// with the h-divisibility assertion live on every application.
pub fn operator_route_equivalence() -> Result<String> {
    let mut cases = 0usize;
    for fam in [Family::A, Family::B] {
        let rs = RootSystem::build(fam, 2)?;
        let group = WeylGroup::enumerate(&rs);
        let weights = [
            Weight::fundamental(2, 0),
            Weight::fundamental(2, 0).neg(),
            Weight::fundamental(2, 1),
            Weight::fundamental(2, 1).neg(),
            rs.rho().clone(),
        ];
        for lam in &weights {
            let chain = build_reduced_chain(&rs, lam)?;
            for u in group.elements() {
                let via_ops = multiply_by_exp(&rs, &chain, &KClass::basis(u.clone(), 1))?;
                let via_table = chevalley_coeffs(&rs, &chain, u).to_kclass();
                ensure(
                    via_ops == via_table,
                    &format!("operator/table mismatch at {fam:?}, λ = {:?}", lam),
                )?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} operator applications match the tables"))
}

/// The alternating sequence of roots between α and β (both ends included).
pub fn normal_order(
    rs: &RootSystem,
    alpha: SignedRoot,
    beta: SignedRoot,
) -> Result<Vec<SignedRoot>> {
    ensure(
        rs.root_pairing(alpha, beta) <= 0,
        "normal order needs (α, β) ≤ 0",
    )?;
    let mut seq = vec![alpha];
    let mut k = 1usize;
    while *seq.last().unwrap() != beta {
        if k > 7 {
            return Err(invalid("alternation did not close up; not a rank-2 pair"));
        }
        // γ_{k+1} = s_α s_β s_α ⋯ (k reflections) applied to β or α
        let mut gamma = if k % 2 == 1 { beta } else { alpha };
        for j in (0..k).rev() {
            let mirror = if j % 2 == 0 { alpha } else { beta };
            gamma = rs.reflect_root(gamma, mirror);
        }
        seq.push(gamma);
        k += 1;
    }
    Ok(seq)
}

/// The braid identity over every rank-2 pair of roots of B_3 and G_2 for
/// three operator families, checked on every basis class.
pub fn yang_baxter() -> Result<String> {
    let mut pairs = 0usize;
    for rs in [
        RootSystem::build(Family::B, 3)?,
        RootSystem::build(Family::G, 2)?,
    ] {
        let group = WeylGroup::enumerate(&rs);
        let all_roots: Vec<SignedRoot> = (0..rs.num_positive_roots())
            .flat_map(|i| [SignedRoot::positive(i), SignedRoot::positive(i).negated()])
            .collect();
        for &alpha in &all_roots {
            for &beta in &all_roots {
                if alpha.index == beta.index || rs.root_pairing(alpha, beta) > 0 {
                    continue;
                }
                let seq = normal_order(&rs, alpha, beta)?;
                // operators R, 1 + B, 1 + Q applied along the sequence in
                // both reading directions
                let fold_r = |roots: &[SignedRoot], c: &KClass| {
                    roots
                        .iter()
                        .fold(c.clone(), |acc, b| apply_r(&rs, *b, &acc))
                };
                let fold_b = |roots: &[SignedRoot], c: &KClass| {
                    roots
                        .iter()
                        .fold(c.clone(), |acc, b| acc.add(&apply_b(&rs, *b, &acc)))
                };
                let fold_q = |roots: &[SignedRoot], c: &QClass| {
                    roots
                        .iter()
                        .fold(c.clone(), |acc, b| acc.add(&apply_q(&rs, *b, &acc)))
                };
                let rev: Vec<SignedRoot> = seq.iter().rev().copied().collect();
                for w in group.elements() {
                    let ch = KClass::basis(w.clone(), rs.coxeter_number());
                    ensure(
                        fold_r(&seq, &ch) == fold_r(&rev, &ch),
                        "R-matrix braid identity failed",
                    )?;
                    let cb = KClass::basis(w.clone(), 1);
                    ensure(
                        fold_b(&seq, &cb) == fold_b(&rev, &cb),
                        "Bruhat braid identity failed",
                    )?;
                    let cq = QClass::basis(w.clone());
                    ensure(
                        fold_q(&seq, &cq) == fold_q(&rev, &cq),
                        "quantum Bruhat braid identity failed",
                    )?;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "braid identity on {pairs} root pairs, three operator families"
    ))
}

/// Identical tables from three distinct chains for λ = 2ω_1 + ω_2 in A_2.
pub fn chain_independence() -> Result<String> {
    let rs = RootSystem::build(Family::A, 2)?;
    let lam = Weight(vec![2, 1]);
    let lex = build_reduced_chain(&rs, &lam)?;
    let cat = {
        let c1 = build_reduced_chain(&rs, &Weight::fundamental(2, 0))?;
        let c2 = build_reduced_chain(&rs, &Weight::fundamental(2, 1))?;
        concat_chains(&rs, &concat_chains(&rs, &c1, &c2)?, &c1)?
    };
    let fat = insert_crossing_pair(&rs, &lex, 2, SignedRoot::positive(1))?;
    ensure(
        !fat.reduced && lex.reduced && cat.reduced,
        "chain reducedness flags are off",
    )?;
    let group = WeylGroup::enumerate(&rs);
    for u in group.elements() {
        let a = chevalley_coeffs(&rs, &lex, u);
        let b = chevalley_coeffs(&rs, &cat, u);
        let c = chevalley_coeffs(&rs, &fat, u);
        ensure(a == b && a == c, "tables differ across chains")?;
    }
    Ok(format!(
        "3 chains × {} group elements give identical tables",
        group.len()
    ))
}

fn tables_for(
    rs: &RootSystem,
    group: &WeylGroup,
    lam: &Weight,
) -> Result<BTreeMap<WeylElement, ChevalleyTable>> {
    let chain = build_reduced_chain(rs, lam)?;
    Ok(group
        .elements()
        .iter()
        .map(|u| (u.clone(), chevalley_coeffs(rs, &chain, u)))
        .collect())
}

/// The two reflection symmetries of the coefficient tables and their
/// composition, plus the divisor-coefficient identity that follows.
pub fn dualities() -> Result<String> {
    let mut cases = 0usize;
    for fam in [Family::A, Family::B] {
        let rs = RootSystem::build(fam, 2)?;
        let group = WeylGroup::enumerate(&rs);
        let w0 = group.longest().clone();
        let iota =
            |p: &LaurentPoly| p.map_exponents(|e| w0.act_weight(&Weight(e.to_vec())).neg().0);
        let weights = [
            Weight::fundamental(2, 0),
            Weight::fundamental(2, 0).neg(),
            Weight::fundamental(2, 1),
            Weight::fundamental(2, 1).neg(),
            rs.rho().clone(),
        ];
        for lam in &weights {
            let t_lam = tables_for(&rs, &group, lam)?;
            let t_w0lam = tables_for(&rs, &group, &w0.act_weight(lam))?;
            let t_neg = tables_for(&rs, &group, &lam.neg())?;
            let t_negw0 = tables_for(&rs, &group, &w0.act_weight(lam).neg())?;
            for u in group.elements() {
                for w in group.elements() {
                    let lhs = t_lam[u].coeff_poly(w);
                    let sign = if (u.length() as i64 - w.length() as i64).rem_euclid(2) == 0 {
                        1
                    } else {
                        -1
                    };
                    // first symmetry: right multiplication by w∘
                    let rhs1 = t_w0lam[&WeylElement::multiply(&rs, w, &w0)]
                        .coeff_poly(&WeylElement::multiply(&rs, u, &w0))
                        .scale_by(sign);
                    ensure(lhs == rhs1, "right-w∘ duality failed")?;
                    // second symmetry: left multiplication by w∘ and ι
                    let rhs2 = iota(
                        &t_neg[&WeylElement::multiply(&rs, &w0, w)]
                            .coeff_poly(&WeylElement::multiply(&rs, &w0, u)),
                    )
                    .scale_by(sign);
                    ensure(lhs == rhs2, "left-w∘ duality failed")?;
                    // composition: conjugation by w∘
                    let uc = WeylElement::multiply(&rs, &WeylElement::multiply(&rs, &w0, u), &w0);
                    let wc = WeylElement::multiply(&rs, &WeylElement::multiply(&rs, &w0, w), &w0);
                    let rhs3 = iota(&t_negw0[&uc].coeff_poly(&wc));
                    ensure(lhs == rhs3, "conjugation duality failed")?;
                    cases += 1;
                }
            }
        }
        // divisor-coefficient identity:
        // c_u^w(−ω_i) = −x^{−w∘(ω_i)} c_{w∘ s_i, u}^w for w ≠ u
        for i in 0..rs.rank() {
            let omega = Weight::fundamental(2, i);
            let t = tables_for(&rs, &group, &omega.neg())?;
            for u in group.elements() {
                let product = monk(&rs, i, u)?;
                for w in group.elements() {
                    if w == u {
                        continue;
                    }
                    let lhs = t[u].coeff_poly(w);
                    let rhs = product
                        .coeff(w)
                        .mul_monomial(&w0.act_weight(&omega).neg().0, -1);
                    ensure(lhs == rhs, "divisor-coefficient identity failed")?;
                }
            }
        }
    }
    Ok(format!(
        "{cases} (λ, u, w) triples satisfy all three dualities"
    ))
}

/// Subset-walk Monk equals the line-bundle route, including the diagonal.
pub fn monk_two_routes() -> Result<String> {
    let mut cases = 0usize;
    for fam in [Family::A, Family::B] {
        let rs = RootSystem::build(fam, 2)?;
        let group = WeylGroup::enumerate(&rs);
        let w0 = group.longest().clone();
        for i in 0..rs.rank() {
            let omega = Weight::fundamental(2, i);
            for u in group.elements() {
                let a = monk(&rs, i, u)?;
                let b = monk_via_line_bundle(&rs, i, u)?;
                ensure(a == b, &format!("Monk routes differ at {fam:?}, i = {i}"))?;
                let diag = LaurentPoly::one(2, 1).sub(&LaurentPoly::monomial(
                    w0.act_weight(&omega).sub(&u.act_weight(&omega)).0,
                    1,
                    1,
                ));
                ensure(a.coeff(u) == diag, "diagonal Monk coefficient mismatch")?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} divisor products agree across routes"))
}

/// Entrywise signs for a dominant and an antidominant weight over B_2.
pub fn sign_laws() -> Result<String> {
    let rs = RootSystem::build(Family::B, 2)?;
    let group = WeylGroup::enumerate(&rs);
    let rho = rs.rho().clone();
    for u in group.elements() {
        let pos = chevalley_coeffs(&rs, &build_reduced_chain(&rs, &rho)?, u);
        for (_, c) in pos.entries() {
            ensure(*c >= 0, "dominant table has a negative entry")?;
        }
        let neg = chevalley_coeffs(&rs, &build_reduced_chain(&rs, &rho.neg())?, u);
        for ((w, _), c) in neg.entries() {
            let sign = if (u.length() as i64 - w.length() as i64).rem_euclid(2) == 0 {
                1
            } else {
                -1
            };
            ensure(
                c * sign > 0,
                "antidominant table breaks the alternating sign law",
            )?;
        }
    }
    Ok("ρ-table nonnegative, (−ρ)-table alternating over B_2".into())
}

/// The two specializations of the quantum divisor product: q → 0 equals the
/// classical divisor product (computed by the chain walk in the relabeled
/// basis), and the single-operator truncation equals the quantum-cohomology
/// divisor formula.
pub fn quantum_specializations() -> Result<String> {
    let mut cases = 0usize;
    for fam in [Family::A, Family::B] {
        let rs = RootSystem::build(fam, 2)?;
        let group = WeylGroup::enumerate(&rs);
        let w0 = group.longest().clone();
        for i in 0..rs.rank() {
            for w in group.elements() {
                let product = conjectural_monk(&rs, i, w)?;
                let got = product.q_zero();
                let u = WeylElement::multiply(&rs, &w0, w);
                let classical = monk(&rs, i, &u)?;
                let mut expect: BTreeMap<WeylElement, i64> = BTreeMap::new();
                for (v, p) in classical.iter() {
                    let c = p.eval_at_one();
                    if c != 0 {
                        expect.insert(WeylElement::multiply(&rs, &w0, v), c);
                    }
                }
                ensure(got == expect, &format!("q→0 mismatch at {fam:?}, i = {i}"))?;
                let lin = linear_truncation(&rs, i, w)?;
                let rhs = quantum_cohomology_divisor(&rs, i, w)?;
                ensure(
                    lin == rhs,
                    &format!("degree-one mismatch at {fam:?}, i = {i}"),
                )?;
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{cases} quantum products specialize correctly both ways"
    ))
}

/// The degree-one limit over every cover in A_3 at λ = ρ.
pub fn classical_limit() -> Result<String> {
    let rs = RootSystem::build(Family::A, 3)?;
    let group = WeylGroup::enumerate(&rs);
    let mut covers = 0usize;
    for u in group.elements() {
        for (idx, sum) in classical_check(&rs, rs.rho(), u)? {
            ensure(
                sum == rs.pairing(rs.rho(), SignedRoot::positive(idx)),
                "degree-one coefficient differs from the pairing",
            )?;
            covers += 1;
        }
    }
    Ok(format!("{covers} covers match (ρ, β∨)"))
}

/// The admissible-subset count equals the module dimension for V_ρ across
/// the benchmark systems, the machine-independent face of the benchmark.
pub fn subset_count_is_dimension() -> Result<String> {
    let systems = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
    ];
    let mut detail = Vec::new();
    for (fam, rank) in systems {
        let rs = RootSystem::build(fam, rank)?;
        let w0 = crate::weyl::longest_element(&rs);
        let (_, count) = demazure_character_with_count(&rs, rs.rho(), &w0)?;
        let dim = weyl_dimension(&rs, rs.rho())?;
        ensure(
            count == dim,
            &format!("subset count ≠ dim V_ρ in {fam:?}{rank}"),
        )?;
        detail.push(format!("{fam}{rank}: {count}"));
    }
    Ok(detail.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_order_matches_known_sequences() {
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let (a, b) = (
            SignedRoot::positive(a2.simple_root_index(0)),
            SignedRoot::positive(a2.simple_root_index(1)),
        );
        let seq = normal_order(&a2, a, b).unwrap();
        let coords: Vec<Vec<i64>> = seq.iter().map(|s| a2.signed_root_coords(*s)).collect();
        assert_eq!(coords, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);

        let g2 = RootSystem::build(Family::G, 2).unwrap();
        let (a, b) = (
            SignedRoot::positive(g2.simple_root_index(0)),
            SignedRoot::positive(g2.simple_root_index(1)),
        );
        let seq = normal_order(&g2, a, b).unwrap();
        let coords: Vec<Vec<i64>> = seq.iter().map(|s| g2.signed_root_coords(*s)).collect();
        assert_eq!(
            coords,
            vec![
                vec![1, 0],
                vec![3, 1],
                vec![2, 1],
                vec![3, 2],
                vec![1, 1],
                vec![0, 1]
            ]
        );
        // orthogonal pair: just (α, β)
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        let long = SignedRoot::positive(b2.classify(&[1, 0]).unwrap().index);
        let other = SignedRoot::positive(b2.classify(&[1, 2]).unwrap().index);
        assert_eq!(b2.root_pairing(long, other), 0);
        assert_eq!(normal_order(&b2, long, other).unwrap(), vec![long, other]);
        // positive pairing rejected
        assert!(normal_order(&b2, long, long.negated()).is_err());
    }

    // Full criteria run in the acceptance test target; here a quick pass
    // over the cheap ones keeps the module honest under `cargo test --lib`.
    #[test]
    fn fast_checks_pass() {
        for f in [
            golden_chains,
            golden_products,
            golden_characters,
            sign_laws,
            chain_independence,
        ] {
            f().unwrap();
        }
    }
}
