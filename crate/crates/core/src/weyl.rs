//! Weyl-group arithmetic: canonical matrix elements, length, reduced words,
//! covers, Bruhat order, longest element.
//!
//! The canonical form of an element is its action matrix on simple roots;
//! words are derived from it, never stored as identity. Equality, hashing
//! and ordering go through that matrix (plus the cached length, which the
//! matrix determines).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::error::{invalid, Result};
use crate::root_system::{RootSystem, SignedRoot, Weight};

/// A Weyl-group element.
///
/// `root_mat` acts on simple-root coordinates, `weight_mat` on
/// fundamental-weight coordinates (the contragredient action); both are
/// row-major r×r with column `j` holding the image of the j-th basis vector.
#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    root_mat: Vec<i64>,
    weight_mat: Vec<i64>,
    len: u32,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.root_mat == other.root_mat
    }
}
impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.root_mat.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by (length, matrix) so that map iteration visits short elements
/// first, deterministically.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.root_mat.cmp(&other.root_mat))
    }
}

fn mat_mul(rank: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; rank * rank];
    for i in 0..rank {
        for k in 0..rank {
            let aik = a[i * rank + k];
            if aik == 0 {
                continue;
            }
            for j in 0..rank {
                out[i * rank + j] += aik * b[k * rank + j];
            }
        }
    }
    out
}

fn mat_vec(rank: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..rank)
        .map(|i| (0..rank).map(|j| m[i * rank + j] * v[j]).sum())
        .collect()
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> WeylElement {
        let r = rs.rank();
        let mut id = vec![0i64; r * r];
        for i in 0..r {
            id[i * r + i] = 1;
        }
        WeylElement {
            rank: r,
            root_mat: id.clone(),
            weight_mat: id,
            len: 0,
        }
    }

    /// The simple reflection s_i (0-based index).
    pub fn simple(rs: &RootSystem, i: usize) -> WeylElement {
        assert!(i < rs.rank(), "simple reflection index out of range");
        WeylElement::reflection(rs, SignedRoot::positive(rs.simple_root_index(i)))
    }

    /// The reflection s_β for a (signed) root β.
    pub fn reflection(rs: &RootSystem, beta: SignedRoot) -> WeylElement {
        let r = rs.rank();
        let root = rs.root(beta.index);
        let a = &root.root_coords;
        let c = &root.coroot_coords;
        let w = &root.weight_coords;
        let mut root_mat = vec![0i64; r * r];
        let mut weight_mat = vec![0i64; r * r];
        for j in 0..r {
            // (α_j, β∨)
            let p: i64 = (0..r).map(|i| c[i] * rs.cartan_entry(i, j)).sum();
            for k in 0..r {
                root_mat[k * r + j] = i64::from(k == j) - p * a[k];
                weight_mat[k * r + j] = i64::from(k == j) - c[j] * w[k];
            }
        }
        let mut el = WeylElement {
            rank: r,
            root_mat,
            weight_mat,
            len: 0,
        };
        el.len = el.count_inversions(rs);
        el
    }

    fn count_inversions(&self, rs: &RootSystem) -> u32 {
        rs.positive_roots()
            .iter()
            .filter(|root| {
                let img = mat_vec(self.rank, &self.root_mat, &root.root_coords);
                img.iter().any(|&x| x < 0)
            })
            .count() as u32
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// ℓ(w), the inversion count.
    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn multiply(rs: &RootSystem, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let r = u.rank;
        let mut w = WeylElement {
            rank: r,
            root_mat: mat_mul(r, &u.root_mat, &v.root_mat),
            weight_mat: mat_mul(r, &u.weight_mat, &v.weight_mat),
            len: 0,
        };
        w.len = w.count_inversions(rs);
        w
    }

    /// Right multiplication by the simple reflection s_i.
    pub fn times_simple(&self, rs: &RootSystem, i: usize) -> WeylElement {
        WeylElement::multiply(rs, self, &WeylElement::simple(rs, i))
    }

    /// Right multiplication by the reflection in a signed root.
    pub fn times_reflection(&self, rs: &RootSystem, beta: SignedRoot) -> WeylElement {
        WeylElement::multiply(rs, self, &WeylElement::reflection(rs, beta))
    }

    /// Action on a weight in fundamental coordinates.
    pub fn act_weight(&self, lambda: &Weight) -> Weight {
        Weight(mat_vec(self.rank, &self.weight_mat, &lambda.0))
    }

    /// Action on a signed root.
    pub fn act_root(&self, rs: &RootSystem, beta: SignedRoot) -> SignedRoot {
        let coords = rs.signed_root_coords(beta);
        let img = mat_vec(self.rank, &self.root_mat, &coords);
        rs.classify(&img).expect("Weyl image of a root is a root")
    }

    /// True iff ℓ(w s_i) = ℓ(w) − 1, i.e. w(α_i) is a negative root.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        self.act_root(rs, SignedRoot::positive(rs.simple_root_index(i)))
            .negative
    }

    /// A canonical reduced word (smallest descent first when read from the
    /// right); multiplies back to `self` and every prefix increases length.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.len as usize);
        while !w.is_identity() {
            let i = (0..rs.rank())
                .find(|&i| w.has_right_descent(rs, i))
                .expect("non-identity element has a descent");
            w = w.times_simple(rs, i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let mut word = self.reduced_word(rs);
        word.reverse();
        element_from_word(rs, &word)
    }

    /// Action matrix on simple roots, row-major, for serialization.
    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| self.root_mat[i * self.rank..(i + 1) * self.rank].to_vec())
            .collect()
    }

    pub(crate) fn mat_key(&self) -> &[i64] {
        &self.root_mat
    }
}

/// Multiply out a word in the simple reflections (not required reduced).
pub fn element_from_word(rs: &RootSystem, word: &[usize]) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    for &i in word {
        w = w.times_simple(rs, i);
    }
    w
}

/// Multiply a word and insist it is reduced.
pub fn element_from_reduced_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
    for &i in word {
        if i >= rs.rank() {
            return Err(invalid(format!(
                "letter {} out of range for rank {}",
                i + 1,
                rs.rank()
            )));
        }
    }
    let w = element_from_word(rs, word);
    if w.length() as usize != word.len() {
        return Err(invalid(format!(
            "word {:?} is not reduced (element has length {})",
            word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            w.length()
        )));
    }
    Ok(w)
}

/// The longest element w∘.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    loop {
        match (0..rs.rank()).find(|&i| !w.has_right_descent(rs, i)) {
            Some(i) => w = w.times_simple(rs, i),
            None => return w,
        }
    }
}

/// u ⋗ w: w = u s_β for some positive β with ℓ(u) = ℓ(w) + 1.
pub fn is_cover(rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    if u.length() != w.length() + 1 {
        return false;
    }
    (0..rs.num_positive_roots()).any(|i| &u.times_reflection(rs, SignedRoot::positive(i)) == w)
}

/// Bruhat order u ≤ w via the lifting property; no group enumeration needed.
pub fn bruhat_leq(rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    if u.length() > w.length() {
        return false;
    }
    if u.is_identity() {
        return true;
    }
    let mut u = u.clone();
    let mut w = w.clone();
    loop {
        if u.length() > w.length() {
            return false;
        }
        if u.is_identity() {
            return true;
        }
        let i = (0..rs.rank())
            .find(|&i| w.has_right_descent(rs, i))
            .expect("non-identity element has a descent");
        w = w.times_simple(rs, i);
        if u.has_right_descent(rs, i) {
            u = u.times_simple(rs, i);
        }
    }
}

/// A fully enumerated Weyl group with its Bruhat poset memoized.
///
/// Built once, then read-only. Intended for the small ranks the test and
/// verification suites run at; the standalone `bruhat_leq` covers the rest.
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    /// down_covers[u] = sorted indices w with u ⋗ w.
    down_covers: Vec<Vec<usize>>,
    /// leq[u] = bitset over element indices w with w ≤ u.
    leq: Vec<Vec<u64>>,
    longest: usize,
}

impl WeylGroup {
    pub fn enumerate(rs: &RootSystem) -> WeylGroup {
        let mut elements = vec![WeylElement::identity(rs)];
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        index.insert(elements[0].mat_key().to_vec(), 0);
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            head += 1;
            for i in 0..rs.rank() {
                let next = w.times_simple(rs, i);
                if !index.contains_key(next.mat_key()) {
                    index.insert(next.mat_key().to_vec(), elements.len());
                    elements.push(next);
                }
            }
        }
        elements.sort();
        let index: HashMap<Vec<i64>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.mat_key().to_vec(), i))
            .collect();

        let n = elements.len();
        let mut down_covers = vec![Vec::new(); n];
        for (ui, u) in elements.iter().enumerate() {
            for ri in 0..rs.num_positive_roots() {
                let w = u.times_reflection(rs, SignedRoot::positive(ri));
                if w.length() + 1 == u.length() {
                    let wi = index[w.mat_key()];
                    if !down_covers[ui].contains(&wi) {
                        down_covers[ui].push(wi);
                    }
                }
            }
            down_covers[ui].sort_unstable();
        }

        // Transitive closure by length induction: the down-set of u is u
        // itself plus the union of the down-sets of everything u covers.
        let words = n.div_ceil(64);
        let mut leq = vec![vec![0u64; words]; n];
        for ui in 0..n {
            // elements are length-sorted, so covered elements come earlier
            let (head, tail) = leq.split_at_mut(ui);
            tail[0][ui / 64] |= 1 << (ui % 64);
            for &wi in &down_covers[ui] {
                for k in 0..words {
                    tail[0][k] |= head[wi][k];
                }
            }
        }

        let longest = n - 1;
        debug_assert_eq!(elements[longest].length() as usize, rs.num_positive_roots());
        WeylGroup {
            elements,
            index,
            down_covers,
            leq,
            longest,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[w.mat_key()]
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    /// Memoized Bruhat comparison.
    pub fn leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        let ui = self.index_of(u);
        let wi = self.index_of(w);
        self.leq[wi][ui / 64] >> (ui % 64) & 1 == 1
    }

    /// Elements covered by u (one Bruhat step down).
    pub fn covered_by(&self, u: &WeylElement) -> Vec<&WeylElement> {
        self.down_covers[self.index_of(u)]
            .iter()
            .map(|&i| &self.elements[i])
            .collect()
    }
}
