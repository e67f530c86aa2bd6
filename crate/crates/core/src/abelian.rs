//! Finitely-generated abelian group labels.
//!
//! A label records a group of the form `Z^r x Z/n1 x ... x Z/nk` as its free
//! rank together with the multiset of finite cyclic factor orders. The module
//! provides the two canonical rewritings of such a group — the primary
//! (prime-power) decomposition and the invariant-factor chain — plus the
//! direct-indecomposability test. Two labels present isomorphic groups
//! exactly when their invariant factors agree.

use std::fmt;

use crate::error::{Error, Result};

/// A single cyclic group: `Z/n` for some `n >= 2`, or infinite cyclic `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CyclicFactor {
    /// Finite cyclic of the given order (always >= 2).
    Finite(u64),
    /// Infinite cyclic. Sorts after every finite factor.
    Infinite,
}

impl CyclicFactor {
    /// A cyclic group is directly indecomposable iff it is infinite or of
    /// prime-power order.
    pub fn is_indecomposable(self) -> bool {
        match self {
            CyclicFactor::Infinite => true,
            CyclicFactor::Finite(n) => {
                let fs = factorize(n);
                fs.len() == 1
            }
        }
    }

    /// `(prime, exponent)` for a prime-power order, `None` otherwise
    /// (including the infinite factor).
    pub fn prime_power(self) -> Option<(u64, u32)> {
        match self {
            CyclicFactor::Infinite => None,
            CyclicFactor::Finite(n) => {
                let fs = factorize(n);
                if fs.len() == 1 {
                    Some(fs[0])
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for CyclicFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicFactor::Finite(n) => write!(f, "Z/{n}"),
            CyclicFactor::Infinite => write!(f, "Z"),
        }
    }
}

/// A finitely-generated abelian group, kept as a presentation:
/// `free_rank` infinite-cyclic factors and a sorted multiset of finite
/// cyclic orders. Labels are non-trivial by construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianLabel {
    free_rank: u32,
    torsion_orders: Vec<u64>, // sorted ascending, every entry >= 2
}

impl AbelianLabel {
    /// Build a label from a free rank and finite factor orders.
    pub fn new(free_rank: u32, torsion_orders: &[u64]) -> Result<Self> {
        if let Some(&n) = torsion_orders.iter().find(|&&n| n < 2) {
            return Err(Error::BadTorsionOrder(n));
        }
        if free_rank == 0 && torsion_orders.is_empty() {
            return Err(Error::TrivialLabel);
        }
        let mut torsion_orders = torsion_orders.to_vec();
        torsion_orders.sort_unstable();
        Ok(AbelianLabel {
            free_rank,
            torsion_orders,
        })
    }

    /// The infinite cyclic group `Z`.
    pub fn infinite_cyclic() -> Self {
        AbelianLabel {
            free_rank: 1,
            torsion_orders: Vec::new(),
        }
    }

    /// The finite cyclic group `Z/n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        AbelianLabel::new(0, &[n])
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    /// Finite factor orders, ascending.
    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion_orders
    }

    /// The order of the group if it is a single cyclic factor, `None` if the
    /// label is not cyclic. Syllable arithmetic is only defined on cyclic
    /// vertex groups.
    pub fn cyclic_order(&self) -> Option<CyclicFactor> {
        match (self.free_rank, self.torsion_orders.as_slice()) {
            (1, []) => Some(CyclicFactor::Infinite),
            (0, [n]) => Some(CyclicFactor::Finite(*n)),
            _ => None,
        }
    }

    /// True iff the label is a single directly-indecomposable cyclic factor.
    pub fn is_indecomposable(&self) -> bool {
        self.cyclic_order()
            .map(CyclicFactor::is_indecomposable)
            .unwrap_or(false)
    }

    /// Split into directly-indecomposable cyclic factors.
    ///
    /// Each finite order `n = p1^a1 * ... * pr^ar` contributes the factors
    /// `pi^ai`; the free part contributes `free_rank` copies of `Z`. Finite
    /// factors are sorted by `(prime, exponent)` with `Z` factors last, so
    /// the result is a canonical multiset.
    pub fn primary_decompose(&self) -> Vec<CyclicFactor> {
        let mut primaries: Vec<(u64, u32)> = Vec::new();
        for &n in &self.torsion_orders {
            primaries.extend(factorize(n));
        }
        primaries.sort_unstable();
        let mut out: Vec<CyclicFactor> = primaries
            .into_iter()
            .map(|(p, a)| CyclicFactor::Finite(p.pow(a)))
            .collect();
        out.extend(std::iter::repeat_n(
            CyclicFactor::Infinite,
            self.free_rank as usize,
        ));
        out
    }

    /// The invariant-factor chain `d1 | d2 | ... | dk` followed by the free
    /// factors. Two labels present isomorphic groups iff this agrees.
    pub fn invariant_factors(&self) -> Result<Vec<CyclicFactor>> {
        // Group the primary factors per prime, exponents descending: the
        // largest invariant factor collects the largest exponent of each
        // prime, the next one the second largest, and so on.
        let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for factor in self.primary_decompose() {
            if let Some((p, a)) = factor.prime_power() {
                match per_prime.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, exps)) => exps.push(a),
                    None => per_prime.push((p, vec![a])),
                }
            }
        }
        for (_, exps) in &mut per_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        let chain_len = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut chain = Vec::with_capacity(chain_len);
        for i in 0..chain_len {
            let mut d: u64 = 1;
            for (p, exps) in &per_prime {
                if let Some(&a) = exps.get(i) {
                    d = d
                        .checked_mul(p.checked_pow(a).ok_or(Error::Overflow)?)
                        .ok_or(Error::Overflow)?;
                }
            }
            chain.push(d);
        }
        // i = 0 built the largest factor; the chain is reported ascending.
        chain.reverse();
        let mut out: Vec<CyclicFactor> = chain.into_iter().map(CyclicFactor::Finite).collect();
        out.extend(std::iter::repeat_n(
            CyclicFactor::Infinite,
            self.free_rank as usize,
        ));
        Ok(out)
    }

    /// The same group with its torsion rewritten as the invariant-factor
    /// chain. This is the canonical presentation: two labels are isomorphic
    /// iff their invariant-factor forms are equal.
    pub fn to_invariant_factor_form(&self) -> Result<AbelianLabel> {
        let torsion: Vec<u64> = self
            .invariant_factors()?
            .into_iter()
            .filter_map(|f| match f {
                CyclicFactor::Finite(n) => Some(n),
                CyclicFactor::Infinite => None,
            })
            .collect();
        AbelianLabel::new(self.free_rank, &torsion)
    }

    /// Whether two labels present isomorphic groups. Decided on the
    /// canonical multiset of directly-indecomposable factors, which exists
    /// for every representable label.
    pub fn is_isomorphic_to(&self, other: &AbelianLabel) -> bool {
        self.primary_decompose() == other.primary_decompose()
    }

    /// Direct product of a family of labels.
    pub fn direct_product<'a>(parts: impl IntoIterator<Item = &'a AbelianLabel>) -> Result<Self> {
        let mut free_rank: u32 = 0;
        let mut torsion = Vec::new();
        for part in parts {
            free_rank = free_rank
                .checked_add(part.free_rank)
                .ok_or(Error::Overflow)?;
            torsion.extend_from_slice(&part.torsion_orders);
        }
        AbelianLabel::new(free_rank, &torsion)
    }

    /// Parse the label grammar: factors joined by `x`, each factor one of
    /// `Z`, `Z^k` (k >= 1) or `Z/n` (n >= 2). `col0` is the 1-based column
    /// at which the text starts, for diagnostics.
    pub fn parse_at(text: &str, line: usize, col0: usize) -> Result<Self> {
        let mut free_rank: u32 = 0;
        let mut torsion = Vec::new();
        let mut col = col0;
        if text.is_empty() {
            return Err(Error::parse(line, col, "empty abelian group expression"));
        }
        for piece in text.split('x') {
            let (rank, orders) = parse_factor(piece, line, col)?;
            free_rank = free_rank.checked_add(rank).ok_or(Error::Overflow)?;
            torsion.extend(orders);
            col += piece.len() + 1;
        }
        AbelianLabel::new(free_rank, &torsion).map_err(|e| match e {
            Error::TrivialLabel => Error::parse(line, col0, "trivial group label"),
            other => other,
        })
    }

    /// Parse a standalone label expression.
    pub fn parse(text: &str) -> Result<Self> {
        AbelianLabel::parse_at(text, 1, 1)
    }
}

/// Displays the canonical invariant-factor text, e.g. `Z/2xZ/6xZ^2`.
/// Falls back to the raw presentation if the chain overflows u64.
impl fmt::Display for AbelianLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let canon = self.to_invariant_factor_form().unwrap_or_else(|_| self.clone());
        let mut first = true;
        for &n in &canon.torsion_orders {
            if !first {
                write!(f, "x")?;
            }
            write!(f, "Z/{n}")?;
            first = false;
        }
        match canon.free_rank {
            0 => {}
            1 => {
                if !first {
                    write!(f, "x")?;
                }
                write!(f, "Z")?;
            }
            r => {
                if !first {
                    write!(f, "x")?;
                }
                write!(f, "Z^{r}")?;
            }
        }
        Ok(())
    }
}

fn parse_factor(piece: &str, line: usize, col: usize) -> Result<(u32, Vec<u64>)> {
    if piece == "Z" {
        return Ok((1, Vec::new()));
    }
    if let Some(rest) = piece.strip_prefix("Z^") {
        let k: u32 = rest
            .parse()
            .map_err(|_| Error::parse(line, col, format!("bad free rank `{piece}`")))?;
        if k < 1 {
            return Err(Error::parse(line, col, "free rank must be at least 1"));
        }
        return Ok((k, Vec::new()));
    }
    if let Some(rest) = piece.strip_prefix("Z/") {
        let n: u64 = rest
            .parse()
            .map_err(|_| Error::parse(line, col, format!("bad cyclic order `{piece}`")))?;
        if n < 2 {
            return Err(Error::parse(line, col, "cyclic order must be at least 2"));
        }
        return Ok((0, vec![n]));
    }
    Err(Error::parse(
        line,
        col,
        format!("expected `Z`, `Z^k` or `Z/n`, found `{piece}`"),
    ))
}

/// Prime factorization by trial division, `(prime, exponent)` pairs in
/// ascending prime order. Orders are desk-scale, so this is plenty.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    debug_assert!(n >= 2);
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
