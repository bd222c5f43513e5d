//! JSON schemas for the CLI surface.
//!
//! Every emitter here is deterministic: entries come out of ordered maps or
//! are sorted explicitly, so the byte stream is stable across runs and
//! thread counts. Each schema re-parses to the in-memory object it came
//! from (given the ambient root system).

use serde::{Deserialize, Serialize};

use crate::alcove::{AffineReflection, LambdaChain};
use crate::characters::Character;
use crate::chevalley::ChevalleyTable;
use crate::error::{invalid, Result};
use crate::operators::KClass;
use crate::poly::LaurentPoly;
use crate::quantum::QClass;
use crate::root_system::{to_bracket, Family, RootSystem, Weight};
use crate::weyl::{element_from_reduced_word, WeylElement};

// ---------------------------------------------------------------------------
// root systems
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub family: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
}

pub fn root_system_json(rs: &RootSystem) -> RootSystemJson {
    RootSystemJson {
        family: rs.family().to_string(),
        rank: rs.rank(),
        cartan: rs.cartan().to_vec(),
        positive_roots: rs
            .positive_roots()
            .iter()
            .map(|r| r.root_coords.clone())
            .collect(),
    }
}

pub fn root_system_from_json(json: &RootSystemJson) -> Result<RootSystem> {
    let rs = match json.family.parse::<Family>() {
        Ok(f) => RootSystem::build(f, json.rank)?,
        Err(_) => RootSystem::from_cartan(json.cartan.clone())?,
    };
    if rs.cartan() != json.cartan.as_slice() {
        return Err(invalid("Cartan matrix does not match the named family"));
    }
    Ok(rs)
}

// ---------------------------------------------------------------------------
// chains
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootJson {
    /// Simple-root coordinates of the underlying positive root.
    pub coords: Vec<i64>,
    /// +1 or −1.
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionJson {
    pub root: Vec<i64>,
    pub level: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub lambda: Vec<i64>,
    pub roots: Vec<RootJson>,
    pub reflections: Vec<ReflectionJson>,
    pub reduced: bool,
}

pub fn chain_json(rs: &RootSystem, chain: &LambdaChain) -> ChainJson {
    ChainJson {
        lambda: chain.lambda.0.clone(),
        roots: chain
            .roots
            .iter()
            .map(|b| RootJson {
                coords: rs.root(b.index).root_coords.clone(),
                sign: if b.negative { -1 } else { 1 },
            })
            .collect(),
        reflections: chain
            .reflections
            .iter()
            .map(|r| ReflectionJson {
                root: rs.root(r.root).root_coords.clone(),
                level: r.level,
            })
            .collect(),
        reduced: chain.reduced,
    }
}

pub fn chain_from_json(rs: &RootSystem, json: &ChainJson) -> Result<LambdaChain> {
    let mut roots = Vec::with_capacity(json.roots.len());
    for r in &json.roots {
        let signed = rs
            .classify(&r.coords)
            .ok_or_else(|| invalid(format!("{:?} is not a root of the system", r.coords)))?;
        if signed.negative {
            return Err(invalid(
                "chain roots must be recorded by their positive part and a sign",
            ));
        }
        roots.push(if r.sign < 0 { signed.negated() } else { signed });
    }
    let chain = LambdaChain::from_roots(rs, Weight(json.lambda.clone()), roots)?;
    let expect: Vec<AffineReflection> = json
        .reflections
        .iter()
        .map(|r| {
            rs.classify(&r.root)
                .filter(|s| !s.negative)
                .map(|s| AffineReflection {
                    root: s.index,
                    level: r.level,
                })
                .ok_or_else(|| invalid("reflection root is not a positive root"))
        })
        .collect::<Result<_>>()?;
    if chain.reflections != expect {
        return Err(invalid(
            "recorded reflections disagree with the replayed walk",
        ));
    }
    Ok(chain)
}

// ---------------------------------------------------------------------------
// words, polynomials, classes
// ---------------------------------------------------------------------------

/// Reduced word of w with 1-based letters.
pub fn word_json(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    w.reduced_word(rs).iter().map(|i| i + 1).collect()
}

pub fn word_from_json(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
    let zero_based: Vec<usize> = word
        .iter()
        .map(|&i| {
            if i == 0 || i > rs.rank() {
                Err(invalid(format!(
                    "letter {i} out of range for rank {}",
                    rs.rank()
                )))
            } else {
                Ok(i - 1)
            }
        })
        .collect::<Result<_>>()?;
    element_from_reduced_word(rs, &zero_based)
}

/// The action matrix of w on simple roots (row-major).
pub fn element_matrix_json(w: &WeylElement) -> Vec<Vec<i64>> {
    w.matrix_rows()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponent: Vec<i64>,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub scale: i64,
    pub terms: Vec<TermJson>,
}

pub fn poly_json(p: &LaurentPoly) -> PolyJson {
    PolyJson {
        scale: p.scale(),
        terms: p
            .iter()
            .map(|(e, c)| TermJson {
                exponent: e.clone(),
                coeff: *c,
            })
            .collect(),
    }
}

pub fn poly_from_json(rank: usize, json: &PolyJson) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero(rank, json.scale.max(1));
    for t in &json.terms {
        if t.exponent.len() != rank {
            return Err(invalid("exponent arity does not match the rank"));
        }
        p.add_term(t.exponent.clone(), t.coeff);
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KClassEntryJson {
    /// Reduced word with 1-based letters; empty for the identity.
    pub w: Vec<usize>,
    pub poly: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KClassJson {
    pub scale: i64,
    pub classes: Vec<KClassEntryJson>,
}

pub fn kclass_json(rs: &RootSystem, c: &KClass) -> KClassJson {
    KClassJson {
        scale: c.scale(),
        classes: c
            .iter()
            .map(|(w, p)| KClassEntryJson {
                w: word_json(rs, w),
                poly: poly_json(p).terms,
            })
            .collect(),
    }
}

pub fn kclass_from_json(rs: &RootSystem, json: &KClassJson) -> Result<KClass> {
    let mut out = KClass::zero(rs.rank(), json.scale.max(1));
    for entry in &json.classes {
        let w = word_from_json(rs, &entry.w)?;
        let p = poly_from_json(
            rs.rank(),
            &PolyJson {
                scale: json.scale,
                terms: entry.poly.clone(),
            },
        )?;
        out.add_term(w, p);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// coefficient tables
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryJson {
    pub w: Vec<usize>,
    pub mu: Vec<i64>,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub lambda: Vec<i64>,
    pub u: Vec<usize>,
    pub entries: Vec<TableEntryJson>,
}

/// Entries sorted by (length of w descending, word lex, exponent lex).
pub fn table_json(rs: &RootSystem, t: &ChevalleyTable) -> TableJson {
    let mut entries: Vec<(u32, Vec<usize>, Vec<i64>, i64)> = t
        .entries()
        .map(|((w, mu), c)| (w.length(), word_json(rs, w), mu.0.clone(), *c))
        .collect();
    entries.sort_by(|a, b| {
        b.0.cmp(&a.0)
            .then_with(|| a.1.cmp(&b.1))
            .then_with(|| a.2.cmp(&b.2))
    });
    TableJson {
        lambda: t.lambda.0.clone(),
        u: word_json(rs, &t.u),
        entries: entries
            .into_iter()
            .map(|(_, w, mu, coeff)| TableEntryJson { w, mu, coeff })
            .collect(),
    }
}

/// Rebuild a table's content as (element, weight) → coefficient and check it
/// against a freshly computed one.
pub fn table_matches(rs: &RootSystem, json: &TableJson, t: &ChevalleyTable) -> Result<bool> {
    if json.lambda != t.lambda.0 || word_from_json(rs, &json.u)? != t.u {
        return Ok(false);
    }
    let mut count = 0usize;
    for e in &json.entries {
        let w = word_from_json(rs, &e.w)?;
        if t.get(&w, &Weight(e.mu.clone())) != e.coeff {
            return Ok(false);
        }
        count += 1;
    }
    Ok(count == t.num_entries())
}

// ---------------------------------------------------------------------------
// characters and quantum classes
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTermJson {
    pub weight: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<i64>>,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub family: String,
    pub rank: usize,
    pub lambda: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub demazure: Option<Vec<usize>>,
    pub dimension: u64,
    pub terms: Vec<CharacterTermJson>,
}

pub fn character_json(
    rs: &RootSystem,
    lambda: &Weight,
    demazure: Option<&WeylElement>,
    ch: &Character,
) -> CharacterJson {
    let brackets = rs.family() == Family::A;
    CharacterJson {
        family: rs.family().to_string(),
        rank: rs.rank(),
        lambda: lambda.0.clone(),
        demazure: demazure.map(|w| word_json(rs, w)),
        dimension: ch.total_mass(),
        terms: ch
            .iter()
            .map(|(mu, m)| CharacterTermJson {
                weight: mu.0.clone(),
                bracket: brackets.then(|| to_bracket(mu)),
                mult: *m,
            })
            .collect(),
    }
}

pub fn character_from_json(json: &CharacterJson) -> Character {
    let mut ch = Character::new(json.rank);
    for t in &json.terms {
        ch.add_weight(Weight(t.weight.clone()), t.mult);
    }
    ch
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QClassJson {
    pub classes: Vec<KClassEntryJson>,
}

pub fn qclass_json(rs: &RootSystem, c: &QClass) -> QClassJson {
    QClassJson {
        classes: c
            .iter()
            .map(|(w, p)| KClassEntryJson {
                w: word_json(rs, w),
                poly: poly_json(p).terms,
            })
            .collect(),
    }
}

pub fn qclass_from_json(rs: &RootSystem, json: &QClassJson) -> Result<QClass> {
    let mut out = QClass::zero(rs.rank());
    for entry in &json.classes {
        let w = word_from_json(rs, &entry.w)?;
        let p = poly_from_json(
            rs.rank(),
            &PolyJson {
                scale: 1,
                terms: entry.poly.clone(),
            },
        )?;
        out.add_term(w, p);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// weights from the command line
// ---------------------------------------------------------------------------

/// Parse a comma-separated weight. Up to `rank` entries are fundamental
/// coordinates (zero-padded); for family A exactly rank+1 entries are
/// bracket coordinates, as is anything with `bracket = true`.
pub fn parse_weight(rs: &RootSystem, text: &str, bracket: bool) -> Result<Weight> {
    let parts: Vec<i64> = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| invalid(format!("cannot parse weight entry `{}`", s.trim())))
            })
            .collect::<Result<_>>()?
    };
    let is_a = rs.family() == Family::A;
    if bracket {
        if !is_a {
            return Err(invalid("bracket coordinates are a type-A input form"));
        }
        if parts.len() > rs.rank() + 1 {
            return Err(invalid(format!(
                "bracket form takes at most {} entries",
                rs.rank() + 1
            )));
        }
        let mut full = parts;
        full.resize(rs.rank() + 1, 0);
        return crate::root_system::from_bracket(&full);
    }
    if parts.len() <= rs.rank() {
        let mut full = parts;
        full.resize(rs.rank(), 0);
        return Ok(Weight(full));
    }
    if is_a && parts.len() == rs.rank() + 1 {
        return crate::root_system::from_bracket(&parts);
    }
    Err(invalid(format!(
        "weight has {} entries but the rank is {}",
        parts.len(),
        rs.rank()
    )))
}

/// Parse a reduced word like "1,2,1"; empty input or "e" is the identity.
pub fn parse_word(rs: &RootSystem, text: &str) -> Result<WeylElement> {
    let t = text.trim();
    if t.is_empty() || t == "e" {
        return Ok(WeylElement::identity(rs));
    }
    let letters: Vec<usize> = t
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("cannot parse word letter `{}`", s.trim())))
        })
        .collect::<Result<_>>()?;
    word_from_json(rs, &letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::build_reduced_chain;
    use crate::chevalley::chevalley_coeffs;
    use crate::weyl::longest_element;

    fn rs_a3() -> RootSystem {
        RootSystem::build(Family::A, 3).unwrap()
    }

    #[test]
    fn root_system_round_trip() {
        for rs in [rs_a3(), RootSystem::build(Family::G, 2).unwrap()] {
            let json = root_system_json(&rs);
            let text = serde_json::to_string(&json).unwrap();
            let parsed: RootSystemJson = serde_json::from_str(&text).unwrap();
            let back = root_system_from_json(&parsed).unwrap();
            assert_eq!(back.cartan(), rs.cartan());
            assert_eq!(back.num_positive_roots(), rs.num_positive_roots());
        }
    }

    #[test]
    fn chain_round_trip() {
        let rs = rs_a3();
        let chain = build_reduced_chain(&rs, &Weight(vec![1, 0, 2])).unwrap();
        let json = chain_json(&rs, &chain);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: ChainJson = serde_json::from_str(&text).unwrap();
        assert_eq!(chain_from_json(&rs, &parsed).unwrap(), chain);
    }

    #[test]
    fn chain_json_rejects_tampering() {
        let rs = rs_a3();
        let chain = build_reduced_chain(&rs, &Weight(vec![0, 1, 0])).unwrap();
        let mut json = chain_json(&rs, &chain);
        json.reflections[0].level += 1;
        assert!(chain_from_json(&rs, &json).is_err());
    }

    #[test]
    fn table_round_trip() {
        let rs = rs_a3();
        let chain = build_reduced_chain(&rs, &Weight(vec![1, 1, 0])).unwrap();
        let w0 = longest_element(&rs);
        let t = chevalley_coeffs(&rs, &chain, &w0);
        let json = table_json(&rs, &t);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: TableJson = serde_json::from_str(&text).unwrap();
        assert!(table_matches(&rs, &parsed, &t).unwrap());
        // entries sorted by descending length first
        let lens: Vec<usize> = parsed.entries.iter().map(|e| e.w.len()).collect();
        let mut sorted = lens.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(lens, sorted);
    }

    #[test]
    fn kclass_round_trip() {
        let rs = rs_a3();
        let w0 = longest_element(&rs);
        let c = crate::chevalley::chevalley_product(&rs, &Weight(vec![0, 1, 0]), &w0).unwrap();
        let json = kclass_json(&rs, &c);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: KClassJson = serde_json::from_str(&text).unwrap();
        assert_eq!(kclass_from_json(&rs, &parsed).unwrap(), c);
    }

    #[test]
    fn character_round_trip() {
        let rs = rs_a3();
        let lam = Weight(vec![1, 0, 1]);
        let ch = crate::characters::irreducible_character(&rs, &lam).unwrap();
        let json = character_json(&rs, &lam, None, &ch);
        let text = serde_json::to_string_pretty(&json).unwrap();
        let parsed: CharacterJson = serde_json::from_str(&text).unwrap();
        let back = character_from_json(&parsed);
        assert!(crate::characters::character_diff(&ch, &back).is_empty());
        assert_eq!(parsed.dimension, ch.total_mass());
    }

    #[test]
    fn qclass_round_trip() {
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let w = longest_element(&rs);
        let q = crate::quantum::conjectural_monk(&rs, 1, &w).unwrap();
        let json = qclass_json(&rs, &q);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: QClassJson = serde_json::from_str(&text).unwrap();
        assert_eq!(qclass_from_json(&rs, &parsed).unwrap(), q);
    }

    #[test]
    fn weight_parsing_rules() {
        let a3 = rs_a3();
        assert_eq!(
            parse_weight(&a3, "0,1", false).unwrap(),
            Weight(vec![0, 1, 0])
        );
        assert_eq!(
            parse_weight(&a3, "1,1,0,0", false).unwrap(),
            Weight(vec![0, 1, 0])
        );
        assert_eq!(
            parse_weight(&a3, "3,1,0,0", true).unwrap(),
            Weight(vec![2, 1, 0])
        );
        assert!(parse_weight(&a3, "1,2,3,4,5", false).is_err());
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        assert!(parse_weight(&b2, "1,1,0", false).is_err());
        assert!(parse_weight(&b2, "1,1", true).is_err());
        assert_eq!(parse_weight(&b2, "", false).unwrap(), Weight(vec![0, 0]));
    }

    #[test]
    fn element_matrices_serialize() {
        let rs = rs_a3();
        let w0 = longest_element(&rs);
        let m = element_matrix_json(&w0);
        let text = serde_json::to_string(&m).unwrap();
        let back: Vec<Vec<i64>> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        // w∘ negates the highest root
        let theta = vec![1i64, 1, 1];
        let image: Vec<i64> = (0..3)
            .map(|i| (0..3).map(|j| m[i][j] * theta[j]).sum())
            .collect();
        assert_eq!(image, vec![-1, -1, -1]);
    }

    #[test]
    fn word_parsing_rules() {
        let rs = rs_a3();
        assert!(parse_word(&rs, "e").unwrap().is_identity());
        assert!(parse_word(&rs, "").unwrap().is_identity());
        assert_eq!(parse_word(&rs, "1,2").unwrap().length(), 2);
        assert!(parse_word(&rs, "1,1").is_err());
        assert!(parse_word(&rs, "4").is_err());
        assert!(parse_word(&rs, "0").is_err());
    }

    #[test]
    fn emitted_json_is_byte_stable() {
        let rs = rs_a3();
        let chain = build_reduced_chain(&rs, &Weight(vec![1, 1, 0])).unwrap();
        let a = serde_json::to_string(&chain_json(&rs, &chain)).unwrap();
        let b = serde_json::to_string(&chain_json(&rs, &chain)).unwrap();
        assert_eq!(a, b);
    }
}
