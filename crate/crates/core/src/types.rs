//! Integer partitions and similarity class types.
//!
//! A similarity class type is a multiset of `(degree, partition)` pairs: one
//! pair per irreducible factor `p` of the characteristic polynomial, recording
//! `deg p` and the partition of Jordan block sizes at `p`. Types do not depend
//! on `q`.
//!
//! Type strings list one entry per pair, `d:p1,p2,...`, separated by `;`.
//! Repeating an entry raises its multiplicity: `1:1;1:1` is the regular split
//! semisimple type of size 2.

use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("cannot parse type {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid type: {0}")]
    Validation(String),
}

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Accepts parts in any order; rejects zero parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, TypeError> {
        if parts.contains(&0) {
            return Err(TypeError::Validation("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// The partition with its largest part removed.
    pub fn tail(&self) -> Partition {
        Partition(self.0.get(1..).unwrap_or_default().to_vec())
    }

    /// `(k, k, ..., k)` with `count` parts.
    pub fn repeated(k: u32, count: usize) -> Self {
        assert!(k > 0 || count == 0);
        Partition(vec![k; count])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One distinct pair of a type together with how often it occurs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeEntry {
    pub degree: u32,
    pub partition: Partition,
    pub multiplicity: u32,
}

impl TypeEntry {
    fn key(&self) -> (u32, Reverse<&Partition>, u32) {
        (self.degree, Reverse(&self.partition), self.multiplicity)
    }
}

impl PartialOrd for TypeEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TypeEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// Canonical form: distinct pairs sorted by degree, then partition in
/// reverse-lex order, each with its multiplicity. Equality of multisets is
/// structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimilarityClassType {
    entries: Vec<TypeEntry>,
}

impl SimilarityClassType {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, Partition)>) -> Result<Self, TypeError> {
        let mut flat: Vec<(u32, Partition)> = Vec::new();
        for (d, lambda) in pairs {
            if d == 0 {
                return Err(TypeError::Validation("degree must be positive".into()));
            }
            if lambda.is_empty() {
                return Err(TypeError::Validation("partition must be non-empty".into()));
            }
            flat.push((d, lambda));
        }
        if flat.is_empty() {
            return Err(TypeError::Validation("a type needs at least one pair".into()));
        }
        flat.sort_by(|a, b| (a.0, Reverse(&a.1)).cmp(&(b.0, Reverse(&b.1))));
        let mut entries: Vec<TypeEntry> = Vec::new();
        for (degree, partition) in flat {
            match entries.last_mut() {
                Some(e) if e.degree == degree && e.partition == partition => e.multiplicity += 1,
                _ => entries.push(TypeEntry {
                    degree,
                    partition,
                    multiplicity: 1,
                }),
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[TypeEntry] {
        &self.entries
    }

    /// Every pair, repeated according to multiplicity, in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, &Partition)> + '_ {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n((e.degree, &e.partition), e.multiplicity as usize))
    }

    /// `sum d * |lambda|` over pairs, with multiplicity.
    pub fn size(&self) -> u32 {
        self.entries
            .iter()
            .map(|e| e.degree * e.partition.size() * e.multiplicity)
            .sum()
    }

    /// Largest number of parts of any partition in the type.
    pub fn max_parts(&self) -> usize {
        self.entries.iter().map(|e| e.partition.len()).max().unwrap_or(0)
    }

    /// Scalar matrix: `{(1, (1^n))}`.
    pub fn scalar(n: u32) -> Self {
        Self::single(1, Partition::repeated(1, n as usize))
    }

    /// Diagonal with distinct entries: `{(1,(1))}` repeated `n` times.
    pub fn regular_split_semisimple(n: u32) -> Self {
        Self::from_pairs((0..n).map(|_| (1, Partition::repeated(1, 1)))).expect("n >= 1")
    }

    /// Single nilpotent Jordan block: `{(1, (n))}`.
    pub fn regular_nilpotent(n: u32) -> Self {
        Self::single(1, Partition::repeated(n, 1))
    }

    /// Irreducible characteristic polynomial: `{(n, (1))}`.
    pub fn simple(n: u32) -> Self {
        Self::single(n, Partition::repeated(1, 1))
    }

    /// `{(1, (1^{m+i})), (m-i, (1))}` for `1 <= i <= m`. At `i = m` the
    /// degree-zero pair is dropped, leaving the scalar type of size `2m`.
    pub fn tau(m: u32, i: u32) -> Result<Self, TypeError> {
        if i == 0 || i > m {
            return Err(TypeError::Validation(format!("tau index {i} outside 1..={m}")));
        }
        let mut pairs = vec![(1, Partition::repeated(1, (m + i) as usize))];
        if m > i {
            pairs.push((m - i, Partition::repeated(1, 1)));
        }
        Self::from_pairs(pairs)
    }

    fn single(d: u32, lambda: Partition) -> Self {
        Self::from_pairs([(d, lambda)]).expect("valid pair")
    }
}

/// Every similarity class type of size `n`, sorted canonically.
pub fn types_of_size(n: u32) -> Vec<SimilarityClassType> {
    // distinct (d, lambda) with d * |lambda| <= n, in canonical pair order
    let mut kinds: Vec<(u32, Partition)> = Vec::new();
    for d in 1..=n {
        for k in 1..=n / d {
            kinds.extend(partitions_of(k).into_iter().map(|p| (d, p)));
        }
    }
    kinds.sort_by(|a, b| (a.0, Reverse(&a.1)).cmp(&(b.0, Reverse(&b.1))));

    fn go(
        kinds: &[(u32, Partition)],
        idx: usize,
        remaining: u32,
        chosen: &mut Vec<TypeEntry>,
        out: &mut Vec<SimilarityClassType>,
    ) {
        if remaining == 0 {
            out.push(SimilarityClassType { entries: chosen.clone() });
            return;
        }
        let Some((d, lambda)) = kinds.get(idx) else {
            return;
        };
        let weight = d * lambda.size();
        go(kinds, idx + 1, remaining, chosen, out);
        for mult in 1..=remaining / weight {
            chosen.push(TypeEntry {
                degree: *d,
                partition: lambda.clone(),
                multiplicity: mult,
            });
            go(kinds, idx + 1, remaining - mult * weight, chosen, out);
            chosen.pop();
        }
    }

    let mut out = Vec::new();
    if n > 0 {
        go(&kinds, 0, n, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

impl fmt::Display for SimilarityClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.pairs().map(|(d, p)| format!("{d}:{p}")).collect();
        write!(f, "{}", items.join(";"))
    }
}

fn parse_positive(s: &str, what: &str, input: &str) -> Result<u32, TypeError> {
    let parse_err = |reason: String| TypeError::Parse {
        input: input.to_string(),
        reason,
    };
    let v: u32 = s
        .trim()
        .parse()
        .map_err(|_| parse_err(format!("{what} {s:?} is not a positive integer")))?;
    if v == 0 {
        return Err(parse_err(format!("{what} must be positive")));
    }
    Ok(v)
}

impl FromStr for SimilarityClassType {
    type Err = TypeError;

    fn from_str(input: &str) -> Result<Self, TypeError> {
        let parse_err = |reason: &str| TypeError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if input.trim().is_empty() {
            return Err(parse_err("empty string"));
        }
        let mut pairs = Vec::new();
        for entry in input.split(';') {
            let (d, parts) = entry
                .split_once(':')
                .ok_or_else(|| parse_err("entries look like d:p1,p2,..."))?;
            let d = parse_positive(d, "degree", input)?;
            if parts.trim().is_empty() {
                return Err(TypeError::Validation(format!(
                    "entry {entry:?} has an empty partition"
                )));
            }
            let parts = parts
                .split(',')
                .map(|p| parse_positive(p, "part", input))
                .collect::<Result<Vec<_>, _>>()?;
            pairs.push((d, Partition::new(parts)?));
        }
        Self::from_pairs(pairs)
    }
}

pub fn parse_type(s: &str) -> Result<SimilarityClassType, TypeError> {
    s.parse()
}

pub fn format_type(tau: &SimilarityClassType) -> String {
    tau.to_string()
}

impl Serialize for SimilarityClassType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            pairs: Vec<(u32, &'a [u32])>,
        }
        Raw {
            pairs: self.pairs().map(|(d, p)| (d, p.parts())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimilarityClassType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            pairs: Vec<(u32, Vec<u32>)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let pairs = raw
            .pairs
            .into_iter()
            .map(|(d, parts)| Partition::new(parts).map(|p| (d, p)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Self::from_pairs(pairs).map_err(D::Error::custom)
    }
}
