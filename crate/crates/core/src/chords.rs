//! Chord diagrams and the Touchard crossing polynomial.
//!
//! `T_m(q) = sum over chord diagrams on 2m nodes of q^{crossings}` is
//! computed three ways: direct enumeration ([`touchard_enum`]), a sum over
//! opening-node sets of products of q-integers ([`touchard_refine`]), and
//! the alternating binomial sum that equals `(q-1)^m T_m(q)`
//! ([`touchard_riordan_rhs`]).

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::poly::UniPoly;
use crate::qcomb::{binom2, binomial, q_integer};

/// Largest `m` [`touchard_enum`] accepts by default: 15!! = 2027025 diagrams.
pub const DEFAULT_MAX_ENUM_M: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordError {
    #[error("invalid chord diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid opening set: {0}")]
    InvalidOpeningSet(String),
    #[error("enumeration of m={m} exceeds the budget of m<={max}")]
    BudgetExceeded { m: usize, max: usize },
}

/// A fixed-point-free involution on `{1, ..., 2m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    // zero-based partner of each node
    partner: Vec<usize>,
}

impl ChordDiagram {
    /// From a one-based pairing array, e.g. `[4, 6, 5, 1, 3, 2, 8, 7]`.
    pub fn from_pairing(pairing: &[usize]) -> Result<Self, ChordError> {
        let n = pairing.len();
        if n % 2 == 1 {
            return Err(ChordError::InvalidDiagram(format!("odd number of nodes {n}")));
        }
        let partner: Vec<usize> = pairing
            .iter()
            .map(|&p| {
                if p == 0 || p > n {
                    Err(ChordError::InvalidDiagram(format!("partner {p} outside 1..={n}")))
                } else {
                    Ok(p - 1)
                }
            })
            .collect::<Result<_, _>>()?;
        for (i, &p) in partner.iter().enumerate() {
            if p == i {
                return Err(ChordError::InvalidDiagram(format!("node {} is fixed", i + 1)));
            }
            if partner[p] != i {
                return Err(ChordError::InvalidDiagram(format!(
                    "not an involution at node {}",
                    i + 1
                )));
            }
        }
        Ok(Self { partner })
    }

    /// From one-based arcs, e.g. `[(1,4), (2,6), (3,5), (7,8)]`.
    pub fn from_arcs(arcs: &[(usize, usize)]) -> Result<Self, ChordError> {
        let n = 2 * arcs.len();
        let mut pairing = vec![0usize; n];
        for &(a, b) in arcs {
            for (x, y) in [(a, b), (b, a)] {
                if x == 0 || x > n {
                    return Err(ChordError::InvalidDiagram(format!("node {x} outside 1..={n}")));
                }
                if pairing[x - 1] != 0 {
                    return Err(ChordError::InvalidDiagram(format!("node {x} used twice")));
                }
                pairing[x - 1] = y;
            }
        }
        Self::from_pairing(&pairing)
    }

    /// Number of arcs.
    pub fn m(&self) -> usize {
        self.partner.len() / 2
    }

    /// One-based pairing array.
    pub fn pairing(&self) -> Vec<usize> {
        self.partner.iter().map(|p| p + 1).collect()
    }

    /// One-based arcs `(open, close)` sorted by opening node.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i < p)
            .map(|(i, &p)| (i + 1, p + 1))
            .collect()
    }

    /// One-based opening nodes in increasing order.
    pub fn openings(&self) -> Vec<usize> {
        self.arcs().into_iter().map(|(a, _)| a).collect()
    }

    /// Pairs of arcs `(i,j), (k,l)` with `i < k < j < l`.
    pub fn crossing_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let arcs = self.arcs();
        arcs.iter()
            .tuple_combinations()
            .filter(|(&(i, j), &(k, l))| i < k && k < j && j < l)
            .map(|(a, b)| (*a, *b))
            .collect()
    }

    pub fn crossings(&self) -> usize {
        pairing_crossings(&self.partner)
    }
}

fn pairing_crossings(partner: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..partner.len() {
        let j = partner[i];
        if j < i {
            continue;
        }
        count += partner[i + 1..j].iter().filter(|&&k| k > j).count();
    }
    count
}

pub fn crossings(d: &ChordDiagram) -> usize {
    d.crossings()
}

/// Calls `visit` with the zero-based partner array of every diagram on
/// `2m` nodes. Order: the smallest unpaired node is matched with each larger
/// unpaired node in turn, recursively.
pub fn for_each_diagram(m: usize, mut visit: impl FnMut(&[usize])) {
    const UNSET: usize = usize::MAX;
    fn go(partner: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        let Some(a) = partner.iter().position(|&p| p == UNSET) else {
            visit(partner);
            return;
        };
        for b in a + 1..partner.len() {
            if partner[b] == UNSET {
                partner[a] = b;
                partner[b] = a;
                go(partner, visit);
                partner[a] = UNSET;
                partner[b] = UNSET;
            }
        }
    }
    let mut partner = vec![UNSET; 2 * m];
    go(&mut partner, &mut visit);
}

/// All diagrams on `2m` nodes, in [`for_each_diagram`] order.
pub fn diagrams(m: usize) -> Vec<ChordDiagram> {
    let mut out = Vec::new();
    for_each_diagram(m, |p| out.push(ChordDiagram { partner: p.to_vec() }));
    out
}

fn histogram_to_poly(hist: Vec<u64>) -> UniPoly {
    UniPoly::from_coeffs(hist.into_iter().map(BigInt::from).collect())
}

/// `T_m(q)` by visiting every diagram, limited to `m <= max_m`.
pub fn touchard_enum_with_budget(m: usize, max_m: usize) -> Result<UniPoly, ChordError> {
    if m > max_m {
        return Err(ChordError::BudgetExceeded { m, max: max_m });
    }
    let mut hist = vec![0u64; binom2(m as i64) as usize + 1];
    for_each_diagram(m, |p| hist[pairing_crossings(p)] += 1);
    Ok(histogram_to_poly(hist))
}

pub fn touchard_enum(m: usize) -> Result<UniPoly, ChordError> {
    touchard_enum_with_budget(m, DEFAULT_MAX_ENUM_M)
}

/// Strictly increasing one-based opening nodes `c_1 < ... < c_m` in
/// `[1, 2m]` that admit at least one diagram (`c_j <= 2j - 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpeningSet {
    c: Vec<usize>,
}

impl OpeningSet {
    pub fn new(c: Vec<usize>) -> Result<Self, ChordError> {
        let m = c.len();
        if !c.windows(2).all(|w| w[0] < w[1]) {
            return Err(ChordError::InvalidOpeningSet("not strictly increasing".into()));
        }
        for (j, &cj) in c.iter().enumerate() {
            if cj == 0 || cj > 2 * m {
                return Err(ChordError::InvalidOpeningSet(format!("{cj} outside 1..={}", 2 * m)));
            }
            if cj > 2 * j + 1 {
                return Err(ChordError::InvalidOpeningSet(format!(
                    "c_{} = {cj} > {} leaves a closing node with nothing to close",
                    j + 1,
                    2 * j + 1
                )));
            }
        }
        Ok(Self { c })
    }

    pub fn nodes(&self) -> &[usize] {
        &self.c
    }

    pub fn m(&self) -> usize {
        self.c.len()
    }
}

/// `r_j = #{i : c_i <= j + i - 1}` for `j = 1..=m`, on any increasing
/// sequence (valid or not).
pub fn r_values_raw(c: &[usize]) -> Vec<usize> {
    let m = c.len();
    (1..=m)
        .map(|j| (1..=m).filter(|&i| c[i - 1] < j + i).count())
        .collect()
}

/// Number of openings to the left of each closing node.
pub fn r_values(c: &OpeningSet) -> Vec<usize> {
    r_values_raw(&c.c)
}

/// `prod_j [r_j - (j-1)]_q`, with `[n]_q = 0` for `n <= 0`.
pub fn contribution_raw(c: &[usize]) -> UniPoly {
    r_values_raw(c)
        .into_iter()
        .enumerate()
        .map(|(j, r)| q_integer(r as i64 - j as i64))
        .product()
}

/// Sum of `q^{crossings}` over diagrams with opening nodes `c`.
pub fn refinement_contribution(c: &OpeningSet) -> UniPoly {
    contribution_raw(&c.c)
}

/// `T_m(q)` as the sum of [`contribution_raw`] over every `m`-subset of `[2m]`.
pub fn touchard_refine(m: usize) -> UniPoly {
    (1..=2 * m)
        .combinations(m)
        .map(|c| contribution_raw(&c))
        .sum()
}

/// `sum_{j=0}^{2m} (-1)^j C(2m, j) q^{C(m-j+1, 2)}`.
pub fn touchard_riordan_rhs(m: usize) -> UniPoly {
    let m = m as i64;
    (0..=2 * m)
        .map(|j| {
            let c = binomial(2 * m as u64, j);
            let c = if j % 2 == 0 { c } else { -c };
            UniPoly::monomial(c, binom2(m - j + 1) as usize)
        })
        .sum()
}

/// `(q - 1)^m`.
pub fn q_minus_one_pow(m: usize) -> UniPoly {
    UniPoly::from_coeffs(vec![-BigInt::one(), BigInt::one()]).pow(m as u32)
}
