//! Words in a graph product and the element calculus on them.
//!
//! An element of the graph product of cyclic vertex groups is written as a
//! sequence of syllables `v^k`. Two moves generate all equalities between
//! geodesic spellings: merging two same-vertex syllables whose separators
//! all commute with the vertex (the deletion move), and swapping adjacent
//! syllables of adjacent vertices (the transpose move). `reduce` drives
//! the first to a fixpoint; `normal_form` then picks the lexicographically
//! least spelling among transpose-equivalent ones, which is a canonical
//! representative of the group element.
//!
//! The letter length of `v^k` is `min(k, n-k)` when the vertex group is
//! finite of order `n` and `|k|` otherwise; summed over a reduced word it
//! is the geodesic word length of the element over the standard letters.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::abelian::CyclicFactor;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// A vertex power with a non-zero exponent, normalized into `1..n-1` when
/// the vertex group is finite of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Syllable {
    vertex: usize,
    exponent: i64,
}

impl Syllable {
    pub fn vertex_index(&self) -> usize {
        self.vertex
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }
}

/// The order of one group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

impl ElementOrder {
    pub fn is_finite(&self) -> bool {
        matches!(self, ElementOrder::Finite(_))
    }
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(n) => write!(f, "{n}"),
            ElementOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// A word over a context graph: an immutable syllable sequence naming an
/// element of the graph product. Context identity is by value, so a word
/// parsed against an equal graph interoperates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    context: Arc<LabeledGraph>,
    syllables: Vec<Syllable>,
}

impl Word {
    /// The empty word, the identity element.
    pub fn identity(context: Arc<LabeledGraph>) -> Word {
        Word {
            context,
            syllables: Vec::new(),
        }
    }

    /// Build from `(vertex name, exponent)` pairs. Exponents are reduced
    /// modulo the vertex order; pairs that normalize to zero vanish.
    pub fn from_pairs(context: Arc<LabeledGraph>, pairs: &[(&str, i64)]) -> Result<Word> {
        let mut syllables = Vec::with_capacity(pairs.len());
        for &(name, exponent) in pairs {
            let vertex = context.require(name)?;
            let order = word_order(&context, vertex)?;
            if let Some(exponent) = normalize_exponent(order, exponent) {
                syllables.push(Syllable { vertex, exponent });
            }
        }
        Ok(Word { context, syllables })
    }

    /// Parse the word syntax: whitespace-separated `name` or `name^k`
    /// tokens, `k` a non-zero integer. The empty string is the identity.
    pub fn parse(context: Arc<LabeledGraph>, text: &str) -> Result<Word> {
        let mut pairs: Vec<(&str, i64)> = Vec::new();
        let mut col = 1;
        for chunk in text.split_inclusive(char::is_whitespace) {
            let token = chunk.trim_end_matches(char::is_whitespace);
            if !token.is_empty() {
                pairs.push(parse_token(token, col)?);
            }
            col += chunk.chars().count();
        }
        Word::from_pairs(context, &pairs)
    }

    pub fn context(&self) -> &Arc<LabeledGraph> {
        &self.context
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Syllables as `(vertex name, exponent)` pairs.
    pub fn syllable_pairs(&self) -> Vec<(String, i64)> {
        self.syllables
            .iter()
            .map(|s| (self.context.name_at(s.vertex).to_string(), s.exponent))
            .collect()
    }

    pub fn is_identity_word(&self) -> bool {
        self.syllables.is_empty()
    }

    fn vertex_name(&self, s: &Syllable) -> &str {
        self.context.name_at(s.vertex)
    }

    fn order_of(&self, vertex: usize) -> CyclicFactor {
        self.context
            .vertex_order(vertex)
            .expect("syllable vertices are validated cyclic at construction")
    }

    /// Letter length of the spelling as written (not of the element).
    pub fn letter_len(&self) -> u64 {
        self.syllables
            .iter()
            .map(|s| syllable_letter_len(self.order_of(s.vertex), s.exponent))
            .sum()
    }

    /// Geodesic letter length of the element.
    pub fn geodesic_len(&self) -> u64 {
        self.reduce().letter_len()
    }

    fn adjacent(&self, s: &Syllable, t: &Syllable) -> bool {
        self.context.adjacent_idx(s.vertex, t.vertex)
    }

    /// Locate a deletion move: a pair of same-vertex syllables separated
    /// only by syllables adjacent to that vertex.
    fn find_merge(&self) -> Option<(usize, usize)> {
        for i in 0..self.syllables.len() {
            for j in i + 1..self.syllables.len() {
                if self.syllables[j].vertex == self.syllables[i].vertex {
                    return Some((i, j));
                }
                if !self.adjacent(&self.syllables[j], &self.syllables[i]) {
                    break; // blocks this vertex for every later j as well
                }
            }
        }
        None
    }

    /// No deletion move applies: the word is a geodesic spelling.
    pub fn is_reduced(&self) -> bool {
        self.find_merge().is_none()
    }

    /// Drive deletion moves to a fixpoint. The result is a reduced word
    /// equal to this one in the group.
    pub fn reduce(&self) -> Word {
        let mut out = self.clone();
        while let Some((i, j)) = out.find_merge() {
            let order = out.order_of(out.syllables[i].vertex);
            let sum = out.syllables[i]
                .exponent
                .checked_add(out.syllables[j].exponent)
                .expect("syllable exponent overflow");
            out.syllables.remove(j);
            match normalize_exponent(order, sum) {
                Some(exponent) => out.syllables[i].exponent = exponent,
                None => {
                    out.syllables.remove(i);
                }
            }
        }
        out
    }

    /// Indices of syllables that can be shuffled to the front: everything
    /// before them commutes with their vertex. In a reduced word these have
    /// pairwise distinct vertices.
    fn front_shufflable(syllables: &[Syllable], ctx: &LabeledGraph) -> Vec<usize> {
        let mut out = Vec::new();
        'candidate: for i in 0..syllables.len() {
            for k in 0..i {
                if !ctx.adjacent_idx(syllables[k].vertex, syllables[i].vertex) {
                    continue 'candidate;
                }
            }
            out.push(i);
        }
        out
    }

    /// The canonical spelling of the element: reduce, then repeatedly emit
    /// the front-shufflable syllable with the least vertex name. Equal
    /// elements produce identical normal forms.
    pub fn normal_form(&self) -> Word {
        let reduced = self.reduce();
        let mut remaining = reduced.syllables;
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let front = Word::front_shufflable(&remaining, &self.context);
            let &pick = front
                .iter()
                .min_by_key(|&&i| self.context.name_at(remaining[i].vertex))
                .expect("index 0 is always front-shufflable");
            out.push(remaining.remove(pick));
        }
        Word {
            context: self.context.clone(),
            syllables: out,
        }
    }

    fn same_context(&self, other: &Word) -> Result<()> {
        if Arc::ptr_eq(&self.context, &other.context) || *self.context == *other.context {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Product in the group, returned in normal form.
    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.same_context(other)?;
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        Ok(Word {
            context: self.context.clone(),
            syllables,
        }
        .normal_form())
    }

    /// The inverse spelling: syllables reversed, exponents negated.
    pub fn invert(&self) -> Word {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| {
                let order = self.order_of(s.vertex);
                let exponent = normalize_exponent(order, -s.exponent)
                    .expect("negating a non-zero exponent stays non-zero");
                Syllable {
                    vertex: s.vertex,
                    exponent,
                }
            })
            .collect();
        Word {
            context: self.context.clone(),
            syllables,
        }
    }

    /// Group-element equality: the normal form of `self * other^-1` is
    /// empty.
    pub fn equal(&self, other: &Word) -> Result<bool> {
        Ok(self.multiply(&other.invert())?.is_identity_word())
    }

    /// Vertices appearing in the reduced word; well-defined for the
    /// element, not just the spelling.
    pub fn support(&self) -> BTreeSet<String> {
        self.reduce()
            .syllables
            .iter()
            .map(|s| self.context.name_at(s.vertex).to_string())
            .collect()
    }

    /// Conjugate to a minimal-length element: repeatedly conjugate by a
    /// front-shufflable syllable whenever that strictly shortens the
    /// geodesic length. Returns `(conjugator, core)` with
    /// `core = conjugator^-1 * self * conjugator`, both in normal form.
    pub fn cyclically_reduce(&self) -> (Word, Word) {
        let mut core = self.reduce();
        let mut conjugator: Vec<Syllable> = Vec::new();
        loop {
            let current_len = core.letter_len();
            let mut improved = false;
            for i in Word::front_shufflable(&core.syllables, &self.context) {
                let s = core.syllables[i];
                // s commutes with everything before it, so conjugating by s
                // moves it to the back: s^-1 (s . rest) s = rest . s
                let mut candidate = core.clone();
                candidate.syllables.remove(i);
                candidate.syllables.push(s);
                let candidate = candidate.reduce();
                if candidate.letter_len() < current_len {
                    core = candidate;
                    conjugator.push(s);
                    improved = true;
                    break;
                }
            }
            if !improved {
                break;
            }
        }
        let conjugator = Word {
            context: self.context.clone(),
            syllables: conjugator,
        };
        (conjugator.normal_form(), core.normal_form())
    }

    /// Support of the minimal-length conjugate.
    pub fn cyclic_support(&self) -> BTreeSet<String> {
        let (_, core) = self.cyclically_reduce();
        core.support()
    }

    /// True iff the support spans a clique, i.e. the element lies in the
    /// direct product of the supporting vertex groups.
    pub fn is_cp(&self) -> bool {
        let support = self.support();
        let ids: BTreeSet<usize> = support
            .iter()
            .map(|name| self.context.index_of(name).unwrap())
            .collect();
        self.context.is_clique_indices(&ids)
    }

    /// The centralizer of a commuting-product element: the full subgraph
    /// on the star of its support generates exactly the elements commuting
    /// with it.
    pub fn centralizer(&self) -> Result<LabeledGraph> {
        if !self.is_cp() {
            return Err(Error::NotCommutingProduct);
        }
        let support = self.support();
        if support.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let star = self.context.star_of(&support)?;
        self.context.full_subgraph(&star)
    }

    /// The order of the element. Finite exactly when the minimal conjugate
    /// lies in a clique of finite-order vertices, where the order is the
    /// lcm of the syllable orders.
    pub fn order(&self) -> ElementOrder {
        let (_, core) = self.cyclically_reduce();
        if core.is_identity_word() {
            return ElementOrder::Finite(1);
        }
        let ids: BTreeSet<usize> = core.syllables.iter().map(|s| s.vertex).collect();
        if !self.context.is_clique_indices(&ids) {
            return ElementOrder::Infinite;
        }
        let mut order: u64 = 1;
        for s in &core.syllables {
            match core.order_of(s.vertex) {
                CyclicFactor::Infinite => return ElementOrder::Infinite,
                CyclicFactor::Finite(n) => {
                    let e = s.exponent as u64; // normalized into 1..n-1
                    order = lcm(order, n / gcd(n, e));
                }
            }
        }
        ElementOrder::Finite(order)
    }

    /// The unique minimal-length element of the conjugacy class of a
    /// finite-order element.
    pub fn minimal_conjugacy_rep(&self) -> Result<Word> {
        if !self.order().is_finite() {
            return Err(Error::InfiniteOrder);
        }
        Ok(self.cyclically_reduce().1)
    }

    /// The retraction onto the infinite-order part: torsion syllables are
    /// deleted and the rest is read in the Artin subgraph. Requires all
    /// context labels directly indecomposable. This map is a group
    /// homomorphism.
    pub fn retract_to_artin(&self) -> Result<Word> {
        let (_, artin) = torsion_artin_split(&self.context)?;
        let artin = Arc::new(artin);
        let syllables = self
            .syllables
            .iter()
            .filter_map(|s| match self.order_of(s.vertex) {
                CyclicFactor::Infinite => {
                    let vertex = artin
                        .index_of(self.context.name_at(s.vertex))
                        .expect("infinite-order vertex is in the Artin part");
                    Some(Syllable {
                        vertex,
                        exponent: s.exponent,
                    })
                }
                CyclicFactor::Finite(_) => None,
            })
            .collect();
        Ok(Word {
            context: artin,
            syllables,
        }
        .normal_form())
    }
}

/// Writes the word syntax; exponent 1 is implicit, the identity is empty.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if s.exponent == 1 {
                write!(f, "{}", self.vertex_name(s))?;
            } else {
                write!(f, "{}^{}", self.vertex_name(s), s.exponent)?;
            }
        }
        Ok(())
    }
}

/// Split a graph with directly-indecomposable labels into its torsion part
/// (finite-order vertices) and Artin part (infinite-order vertices).
/// Either part may be empty.
pub fn torsion_artin_split(g: &LabeledGraph) -> Result<(LabeledGraph, LabeledGraph)> {
    g.require_indecomposable_labels()?;
    let mut torsion = BTreeSet::new();
    let mut artin = BTreeSet::new();
    for v in 0..g.vertex_count() {
        match g.vertex_order(v)? {
            CyclicFactor::Finite(_) => torsion.insert(v),
            CyclicFactor::Infinite => artin.insert(v),
        };
    }
    Ok((g.induced_by_indices(&torsion), g.induced_by_indices(&artin)))
}

/// Representatives for the conjugacy classes of maximal finite subgroups:
/// the maximal cliques of the torsion subgraph, each naming the direct
/// product of its vertex groups.
pub fn maximal_finite_reps(g: &LabeledGraph) -> Result<Vec<BTreeSet<String>>> {
    let (torsion, _) = torsion_artin_split(g)?;
    Ok(torsion.maximal_cliques())
}

/// The vertex order usable in syllable arithmetic. Orders beyond `i64`
/// cannot be normalized into signed exponents and are rejected.
fn word_order(g: &LabeledGraph, vertex: usize) -> Result<CyclicFactor> {
    let order = g.vertex_order(vertex)?;
    if let CyclicFactor::Finite(n) = order {
        if n > i64::MAX as u64 {
            return Err(Error::Overflow);
        }
    }
    Ok(order)
}

/// Reduce an exponent modulo the vertex order; `None` when it vanishes.
fn normalize_exponent(order: CyclicFactor, exponent: i64) -> Option<i64> {
    match order {
        CyclicFactor::Infinite => (exponent != 0).then_some(exponent),
        CyclicFactor::Finite(n) => {
            let e = (exponent as i128).rem_euclid(n as i128) as i64;
            (e != 0).then_some(e)
        }
    }
}

fn syllable_letter_len(order: CyclicFactor, exponent: i64) -> u64 {
    match order {
        CyclicFactor::Infinite => exponent.unsigned_abs(),
        CyclicFactor::Finite(n) => {
            let e = exponent as u64;
            e.min(n - e)
        }
    }
}

fn parse_token(token: &str, col: usize) -> Result<(&str, i64)> {
    let (name, exponent) = match token.split_once('^') {
        None => (token, 1),
        Some((name, exp_text)) => {
            let exponent: i64 = exp_text.parse().map_err(|_| {
                Error::parse(1, col, format!("bad exponent in `{token}`"))
            })?;
            if exponent == 0 {
                return Err(Error::parse(1, col, "exponent must be non-zero"));
            }
            (name, exponent)
        }
    };
    if !crate::graph::is_valid_vertex_name(name) {
        return Err(Error::parse(1, col, format!("bad vertex token `{name}`")));
    }
    Ok((name, exponent))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::graph;

    fn ctx(spec: &str) -> Arc<LabeledGraph> {
        Arc::new(graph(spec))
    }

    fn word(c: &Arc<LabeledGraph>, text: &str) -> Word {
        Word::parse(c.clone(), text).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let c = ctx("a:Z b:Z/3 ; a-b");
        assert_eq!(word(&c, "a b^-1 a^3").to_string(), "a b^2 a^3");
        assert_eq!(word(&c, "").to_string(), "");
        assert_eq!(word(&c, "b^3").to_string(), ""); // b^3 = 1 in Z/3
        assert!(matches!(
            Word::parse(c.clone(), "a^0"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Word::parse(c.clone(), "a^x"),
            Err(Error::Parse { .. })
        ));
        assert_eq!(
            Word::parse(c.clone(), "q"),
            Err(Error::UnknownVertex("q".into()))
        );
        let non_cyclic = ctx("a:Z^2");
        assert!(matches!(
            Word::parse(non_cyclic, "a"),
            Err(Error::NonCyclicVertex { .. })
        ));
    }

    #[test]
    fn reduce_examples() {
        let path = ctx("a:Z b:Z c:Z ; a-b b-c");
        assert_eq!(word(&path, "a b a^-1").reduce().to_string(), "b");

        let z3 = ctx("u:Z/3");
        assert_eq!(word(&z3, "u u").reduce().to_string(), "u^2");

        let dihedral = ctx("a:Z/2 b:Z/2");
        let w = word(&dihedral, "a b a b");
        assert_eq!(w.reduce(), w);
        assert!(w.is_reduced());
    }

    #[test]
    fn reduction_is_sound() {
        let c = ctx("a:Z b:Z/2 c:Z/6 ; a-b b-c");
        for text in ["a b a^-1 c", "c c c", "a b c b a", "b c^3 b a a^-1"] {
            let w = word(&c, text);
            let r = w.reduce();
            assert!(r.is_reduced());
            assert!(w.equal(&r).unwrap(), "{text}");
            assert!(r.letter_len() <= w.letter_len());
        }
    }

    #[test]
    fn normal_form_examples() {
        let edge = ctx("a:Z b:Z ; a-b");
        assert_eq!(word(&edge, "b a").normal_form().to_string(), "a b");
        let non_edge = ctx("a:Z b:Z");
        assert_eq!(word(&non_edge, "b a").normal_form().to_string(), "b a");
    }

    #[test]
    fn normal_form_is_swap_invariant() {
        // all legal transpose moves on a reduced word preserve the normal form
        let c = ctx("a:Z b:Z/2 c:Z/3 d:Z ; a-b b-c a-c a-d");
        let w = word(&c, "d a b c a^2").reduce();
        let nf = w.normal_form();
        let mut stack = vec![w.clone()];
        let mut seen = BTreeSet::new();
        while let Some(current) = stack.pop() {
            if !seen.insert(current.to_string()) {
                continue;
            }
            assert_eq!(current.normal_form(), nf);
            for i in 0..current.syllables.len().saturating_sub(1) {
                let (s, t) = (current.syllables[i], current.syllables[i + 1]);
                if current.context.adjacent_idx(s.vertex, t.vertex) {
                    let mut swapped = current.clone();
                    swapped.syllables.swap(i, i + 1);
                    stack.push(swapped);
                }
            }
        }
        assert!(seen.len() > 1, "the example admits swaps");
    }

    #[test]
    fn group_operations() {
        let c = ctx("a:Z b:Z/3 ; a-b");
        let one = word(&c, "a").multiply(&word(&c, "a^-1")).unwrap();
        assert!(one.is_identity_word());

        assert_eq!(word(&c, "a b^2").invert().to_string(), "b a^-1");

        let edge = ctx("a:Z b:Z ; a-b");
        assert!(word(&edge, "a b").equal(&word(&edge, "b a")).unwrap());
        let non_edge = ctx("a:Z b:Z");
        assert!(!word(&non_edge, "a b").equal(&word(&non_edge, "b a")).unwrap());

        let other = ctx("x:Z");
        assert_eq!(
            word(&non_edge, "a").multiply(&word(&other, "x")),
            Err(Error::ContextMismatch)
        );

        // same presentation built twice: contexts are equal by value
        let again = ctx("a:Z b:Z");
        assert!(word(&non_edge, "a b").equal(&word(&again, "a b")).unwrap());
    }

    #[test]
    fn support_examples() {
        let edge = ctx("a:Z b:Z ; a-b");
        assert_eq!(
            word(&edge, "a b a^-1").support(),
            BTreeSet::from(["b".to_string()])
        );
        assert!(word(&edge, "").support().is_empty());
        let non_edge = ctx("a:Z b:Z");
        assert_eq!(word(&non_edge, "a b").support().len(), 2);
    }

    #[test]
    fn cyclic_reduction_examples() {
        let c = ctx("a:Z b:Z/2");
        let w = word(&c, "a b a^-1");
        let (conj, core) = w.cyclically_reduce();
        assert_eq!(core.to_string(), "b");
        // the stated identity: core = conj^-1 * w * conj
        let recomputed = conj
            .invert()
            .multiply(&w)
            .unwrap()
            .multiply(&conj)
            .unwrap();
        assert_eq!(recomputed, core);

        let already = word(&c, "b");
        let (conj, core) = already.cyclically_reduce();
        assert!(conj.is_identity_word());
        assert_eq!(core, already);

        assert_eq!(w.cyclic_support(), BTreeSet::from(["b".to_string()]));
        assert!(word(&c, "").cyclic_support().is_empty());
    }

    #[test]
    fn cp_and_centralizer() {
        let path = ctx("a:Z b:Z c:Z ; a-b b-c");
        assert!(word(&path, "b").is_cp());
        assert!(word(&path, "a b").is_cp());
        assert!(!word(&path, "a c").is_cp());
        assert!(word(&path, "").is_cp());

        let star_b = word(&path, "b").centralizer().unwrap();
        assert_eq!(star_b.names(), &["a".to_string(), "b".to_string(), "c".to_string()]);
        let star_a = word(&path, "a").centralizer().unwrap();
        assert_eq!(star_a.names(), &["a".to_string(), "b".to_string()]);

        assert_eq!(
            word(&path, "a c").centralizer(),
            Err(Error::NotCommutingProduct)
        );
        assert_eq!(word(&path, "").centralizer(), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn element_orders() {
        let c = ctx("a:Z u:Z/6");
        assert_eq!(word(&c, "a").order(), ElementOrder::Infinite);
        assert_eq!(word(&c, "u^2").order(), ElementOrder::Finite(3));
        assert_eq!(word(&c, "u").order(), ElementOrder::Finite(6));
        assert_eq!(word(&c, "").order(), ElementOrder::Finite(1));

        // infinite dihedral: the product of the two reflections translates
        let dihedral = ctx("a:Z/2 b:Z/2");
        assert_eq!(word(&dihedral, "a b").order(), ElementOrder::Infinite);

        // adjacent torsion vertices generate a finite direct product
        let square = ctx("u:Z/2 v:Z/3 ; u-v");
        assert_eq!(word(&square, "u v").order(), ElementOrder::Finite(6));
    }

    #[test]
    fn oracle_confirms_infinite_dihedral_translation() {
        // powers of ab in the infinite dihedral group never return to the
        // identity within a generous radius
        let dihedral = ctx("a:Z/2 b:Z/2");
        let ab = word(&dihedral, "a b");
        let mut power = Word::identity(dihedral.clone());
        for k in 1..=8 {
            power = power.multiply(&ab).unwrap();
            assert!(!power.is_identity_word(), "(ab)^{k} is not the identity");
        }
    }

    #[test]
    fn minimal_conjugacy_reps() {
        let c = ctx("a:Z u:Z/2");
        assert_eq!(
            word(&c, "a u a^-1").minimal_conjugacy_rep().unwrap().to_string(),
            "u"
        );
        let adj = ctx("u:Z/2 v:Z/3 ; u-v");
        assert_eq!(
            word(&adj, "u v").minimal_conjugacy_rep().unwrap().to_string(),
            "u v"
        );
        assert_eq!(
            word(&c, "a").minimal_conjugacy_rep(),
            Err(Error::InfiniteOrder)
        );
    }

    #[test]
    fn torsion_artin_examples() {
        let g = graph("a:Z/2 b:Z ; a-b");
        let (t, art) = torsion_artin_split(&g).unwrap();
        assert_eq!(t.names(), &["a".to_string()]);
        assert_eq!(art.names(), &["b".to_string()]);

        let torsion_triangle = graph("a:Z/2 b:Z/3 c:Z/5 ; a-b b-c a-c");
        let (t, art) = torsion_artin_split(&torsion_triangle).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert!(art.is_empty());

        let artin_path = graph("a:Z b:Z c:Z ; a-b b-c");
        let (t, art) = torsion_artin_split(&artin_path).unwrap();
        assert!(t.is_empty());
        assert_eq!(art, artin_path);

        let decomposable = graph("a:Z/6");
        assert!(matches!(
            torsion_artin_split(&decomposable),
            Err(Error::NotIndecomposable { .. })
        ));
    }

    #[test]
    fn retraction_examples() {
        let c = ctx("u:Z/2 a:Z");
        assert_eq!(word(&c, "u a u^-1").retract_to_artin().unwrap().to_string(), "a");
        assert_eq!(word(&c, "u").retract_to_artin().unwrap().to_string(), "");

        // homomorphism spot-check
        let w1 = word(&c, "u a u a^2");
        let w2 = word(&c, "a^-1 u a");
        let lhs = w1.multiply(&w2).unwrap().retract_to_artin().unwrap();
        let rhs = w1
            .retract_to_artin()
            .unwrap()
            .multiply(&w2.retract_to_artin().unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn maximal_finite_rep_examples() {
        let torsion_path = graph("u:Z/2 v:Z/3 w:Z/2 ; u-v v-w");
        let reps = maximal_finite_reps(&torsion_path).unwrap();
        assert_eq!(reps.len(), 2);

        let artin = graph("a:Z b:Z ; a-b");
        assert!(maximal_finite_reps(&artin).unwrap().is_empty());

        let mixed = graph("u:Z/2 a:Z v:Z/4 ; u-a a-v u-v");
        let (torsion, _) = torsion_artin_split(&mixed).unwrap();
        assert_eq!(
            maximal_finite_reps(&mixed).unwrap(),
            torsion.maximal_cliques()
        );
    }
}
