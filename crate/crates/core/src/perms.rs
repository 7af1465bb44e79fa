//! Permutations, partitions, compositions, skew shapes and tableaux, plus
//! the exhaustive oracles that every formula is checked against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation (values `1..=n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &a in &word {
            if a == 0 || a > n || seen[a] {
                return Err(Error::Argument(format!("{word:?} is not a permutation of [{n}]")));
            }
            seen[a] = true;
        }
        Ok(Perm(word))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    /// Parses a word of single digits such as `"2143"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Argument(format!("bad permutation word {s:?}")))?;
        Perm::new(word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &a) in self.0.iter().enumerate() {
            inv[a - 1] = i + 1;
        }
        Perm(inv)
    }

    /// `w'(i) = n + 1 - w(i)`.
    pub fn complement(&self) -> Perm {
        let n = self.0.len();
        Perm(self.0.iter().map(|&a| n + 1 - a).collect())
    }
}

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Argument(format!("partition {parts:?} has a non-positive part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Argument(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `<m^r>`: `r` parts equal to `m`.
    pub fn rectangle(m: usize, r: usize) -> Self {
        if m == 0 {
            return Partition::default();
        }
        Partition(vec![m; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of part size `m`.
    pub fn multiplicity(&self, m: usize) -> usize {
        self.0.iter().filter(|&&p| p == m).count()
    }

    /// `(size, multiplicity)` pairs, largest size first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((m, c)) if *m == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Union of parts (the partition of the product `p_self * p_other`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// Every part multiplied by `s`.
    pub fn stretch(&self, s: usize) -> Partition {
        Partition(self.0.iter().map(|&p| p * s).collect())
    }

    /// Product of hook lengths.
    pub fn hook_product(&self) -> u128 {
        let conj = self.conjugate();
        let mut h: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.part(j) - i - 1;
                h *= (arm + leg + 1) as u128;
            }
        }
        h
    }

    /// Staircase `(m-1, m-2, ..., 1)`.
    pub fn staircase(m: usize) -> Partition {
        Partition((1..m).rev().collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Partitions of `n` with all parts at most `max_part`.
pub fn partitions_bounded(n: usize, max_part: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| p.part(0) <= max_part).collect()
}

/// Ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Argument(format!("composition {parts:?} has a non-positive part")));
        }
        Ok(Composition(parts))
    }

    /// The composition whose partial sums are `set` (positions in `[n-1]`).
    pub fn from_descent_set(set: &BTreeSet<usize>, n: usize) -> Self {
        let mut parts = Vec::new();
        let mut last = 0;
        for &d in set.iter().chain(std::iter::once(&n)) {
            if d > last {
                parts.push(d - last);
                last = d;
            }
        }
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums except the last.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Descent composition of an alternating permutation of `[n]`:
    /// `(1, 2, ..., 2, j)`.
    pub fn alternating(n: usize) -> Self {
        Composition::from_descent_set(&alternating_set(n, false), n)
    }

    /// Descent composition of a reverse alternating permutation of `[n]`.
    pub fn reverse_alternating(n: usize) -> Self {
        Composition::from_descent_set(&alternating_set(n, true), n)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// All `2^(n-1)` compositions of `n >= 1` (the empty composition for 0).
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(Vec::new())];
    }
    (0..1u64 << (n - 1))
        .map(|mask| {
            let set: BTreeSet<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            Composition::from_descent_set(&set, n)
        })
        .collect()
}

/// `{1,3,5,...}` (or `{2,4,...}` when `reverse`) intersected with `[n-1]`.
pub fn alternating_set(n: usize, reverse: bool) -> BTreeSet<usize> {
    let start = if reverse { 2 } else { 1 };
    (start..n).step_by(2).collect()
}

/// Skew shape `outer / inner` (English notation, rows top to bottom).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.len() > outer.len() || (0..inner.len()).any(|i| inner.part(i) > outer.part(i)) {
            return Err(Error::Argument(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::default() }
    }

    /// Builds a shape from per-row `(start, end)` column ranges.
    fn from_rows(rows: &[(usize, usize)]) -> Self {
        let outer = Partition(rows.iter().map(|r| r.1).collect());
        let inner = Partition::from_unsorted(rows.iter().map(|r| r.0).collect());
        SkewShape::new(outer, inner).expect("row ranges form a skew shape")
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `[start, end)` of row `i`.
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Cells `(row, col)` in reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|i| {
                let (a, b) = self.row_range(i);
                (a..b).map(move |j| (i, j))
            })
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Border strip `B_alpha`: rows of lengths `alpha_1..alpha_k` from top to
/// bottom, each row sharing exactly one column with the row below it.
pub fn ribbon_shape(alpha: &Composition) -> SkewShape {
    let k = alpha.len();
    let mut rows = vec![(0, 0); k];
    let mut start = 0;
    for i in (0..k).rev() {
        rows[i] = (start, start + alpha.0[i]);
        start += alpha.0[i] - 1;
    }
    SkewShape::from_rows(&rows)
}

/// `tau_n = B_(1,2,...,2,j)`; with `primed`, its transpose.
pub fn tau_shape(n: usize, primed: bool) -> SkewShape {
    let tau = ribbon_shape(&Composition::alternating(n));
    if primed {
        tau.conjugate()
    } else {
        tau
    }
}

/// Disjoint union of rows (components in `row_set`, 1-based) and columns
/// with sizes `alpha_1..alpha_k` from top to bottom, touching only at
/// corners.
pub fn multiset_shape(alpha: &Composition, row_set: &BTreeSet<usize>) -> SkewShape {
    let mut rows_bottom_up = Vec::new();
    let mut col = 0;
    for (idx, &size) in alpha.0.iter().enumerate().rev() {
        if row_set.contains(&(idx + 1)) {
            rows_bottom_up.push((col, col + size));
            col += size;
        } else {
            for _ in 0..size {
                rows_bottom_up.push((col, col + 1));
            }
            col += 1;
        }
    }
    rows_bottom_up.reverse();
    SkewShape::from_rows(&rows_bottom_up)
}

/// Standard Young tableau of a skew shape; `rows[i]` lists the entries of
/// row `i` from its first cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Straight tableau from its rows, validated as standard.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        let t = Tableau { shape: SkewShape::straight(outer), rows };
        t.check_standard()?;
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    fn entry(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = self.shape.row_range(i);
        (j >= a && j < b).then(|| self.rows[i][j - a])
    }

    fn check_standard(&self) -> Result<()> {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            let (a, _) = self.shape.row_range(i);
            for (off, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::Argument("tableau entries are not 1..n".into()));
                }
                seen[v] = true;
                let j = a + off;
                if off > 0 && row[off - 1] >= v {
                    return Err(Error::Argument("tableau row not increasing".into()));
                }
                if i > 0 && self.entry(i - 1, j).is_some_and(|above| above >= v) {
                    return Err(Error::Argument("tableau column not increasing".into()));
                }
            }
        }
        Ok(())
    }

    /// `{ i : i+1 is in a lower row than i }`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let n = self.size();
        let mut row_of = vec![0; n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = i;
            }
        }
        (1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect()
    }

    pub fn transpose(&self) -> Tableau {
        let shape = self.shape.conjugate();
        let rows = (0..shape.rows())
            .map(|j| {
                let (a, b) = shape.row_range(j);
                (a..b).map(|i| self.entry(i, j).expect("cell in transposed shape")).collect()
            })
            .collect();
        Tableau { shape, rows }
    }
}

/// Descent composition of a standard tableau.
pub fn tableau_descent_composition(t: &Tableau) -> Composition {
    Composition::from_descent_set(&t.descent_set(), t.size())
}

/// `{ i : a_i > a_{i+1} }`.
pub fn descent_set(w: &Perm) -> BTreeSet<usize> {
    w.0.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).collect()
}

pub fn descent_composition(w: &Perm) -> Composition {
    Composition::from_descent_set(&descent_set(w), w.len())
}

/// `a_1 > a_2 < a_3 > ...`.
pub fn is_alternating(w: &Perm) -> bool {
    zigzag(&w.0, false)
}

/// `a_1 < a_2 > a_3 < ...`.
pub fn is_reverse_alternating(w: &Perm) -> bool {
    zigzag(&w.0, true)
}

fn zigzag(word: &[usize], reverse: bool) -> bool {
    word.windows(2).enumerate().all(|(i, p)| ((i % 2 == 0) != reverse) == (p[0] > p[1]))
}

pub fn cycle_type(w: &Perm) -> Partition {
    let n = w.len();
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = w.0[i] - 1;
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_unsorted(lens)
}

pub fn fixed_point_count(w: &Perm) -> usize {
    w.0.iter().enumerate().filter(|(i, &a)| a == i + 1).count()
}

pub fn is_involution(w: &Perm) -> bool {
    w.0.iter().enumerate().all(|(i, &a)| w.0[a - 1] == i + 1)
}

/// Row-insertion RSK: returns the insertion tableau `P` and recording
/// tableau `Q`.
pub fn rsk(w: &Perm) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &a) in w.0.iter().enumerate() {
        let mut x = a;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(pos) => {
                    x = std::mem::replace(&mut p[row][pos], x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    let shape = SkewShape::straight(Partition(p.iter().map(Vec::len).collect()));
    (Tableau { shape: shape.clone(), rows: p }, Tableau { shape, rows: q })
}

/// Size limits for the exhaustive oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n` for sweeps over `S_n`.
    pub sn_bound: usize,
    /// Largest `n` for sweeps that look at `w` and `w^-1` together.
    pub inverse_bound: usize,
    /// Largest shape size for tableau enumeration.
    pub syt_bound: usize,
    /// Largest multiset size for multiset-word enumeration.
    pub multiset_bound: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { sn_bound: 9, inverse_bound: 8, syt_bound: 14, multiset_bound: 12 }
    }
}

fn check_bound(what: &str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::OracleLimit { what: what.to_string(), n, bound })
    } else {
        Ok(())
    }
}

/// Visits every standard tableau of `shape`.
pub fn for_each_syt(shape: &SkewShape, bound: usize, mut f: impl FnMut(&Tableau)) -> Result<()> {
    let n = shape.size();
    check_bound("standard tableaux", n, bound)?;
    let k = shape.rows();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); k];
    fn rec(
        shape: &SkewShape,
        next: usize,
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        f: &mut dyn FnMut(&Tableau),
    ) {
        if next > n {
            f(&Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        for i in 0..rows.len() {
            let (a, b) = shape.row_range(i);
            let j = a + rows[i].len();
            if j >= b {
                continue;
            }
            if i > 0 {
                let (pa, _) = shape.row_range(i - 1);
                if j >= pa && pa + rows[i - 1].len() <= j {
                    continue;
                }
            }
            rows[i].push(next);
            rec(shape, next + 1, n, rows, f);
            rows[i].pop();
        }
    }
    rec(shape, 1, n, &mut rows, &mut f);
    Ok(())
}

/// All standard tableaux of `shape`, in a fixed order.
pub fn enumerate_syt(shape: &SkewShape, bound: usize) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    for_each_syt(shape, bound, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Number of standard tableaux of `shape` per descent composition.
pub fn syt_descent_counts(shape: &SkewShape, bound: usize) -> Result<BTreeMap<Composition, u64>> {
    let mut out = BTreeMap::new();
    for_each_syt(shape, bound, |t| *out.entry(tableau_descent_composition(t)).or_insert(0) += 1)?;
    Ok(out)
}

/// Visits every permutation of `[n]` in lexicographic order.
pub fn for_each_perm(n: usize, mut f: impl FnMut(&Perm)) {
    let mut w = Perm::identity(n);
    loop {
        f(&w);
        if !next_permutation(&mut w.0) {
            break;
        }
    }
}

/// Advances `v` to its lexicographic successor; false at the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Which of `w`, `w^-1` must be alternating (`Alt`) or reverse alternating
/// (`Ralt`): first component constrains `w`, second `w^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DoubleVariant {
    AltAlt,
    AltRalt,
    RaltRalt,
    RaltAlt,
}

impl DoubleVariant {
    pub const ALL: [DoubleVariant; 4] =
        [DoubleVariant::AltAlt, DoubleVariant::AltRalt, DoubleVariant::RaltRalt, DoubleVariant::RaltAlt];

    /// `(w reversed?, w^-1 reversed?)`.
    pub fn flags(self) -> (bool, bool) {
        match self {
            DoubleVariant::AltAlt => (false, false),
            DoubleVariant::AltRalt => (false, true),
            DoubleVariant::RaltRalt => (true, true),
            DoubleVariant::RaltAlt => (true, false),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DoubleVariant::AltAlt => "alt_alt",
            DoubleVariant::AltRalt => "alt_ralt",
            DoubleVariant::RaltRalt => "ralt_ralt",
            DoubleVariant::RaltAlt => "ralt_alt",
        }
    }
}

impl std::str::FromStr for DoubleVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DoubleVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown variant {s:?}")))
    }
}

/// A question answered by exhaustive enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleQuery {
    /// (Reverse) alternating `w` with the given cycle type.
    AlternatingCycleType { rho: Partition, reverse: bool },
    /// (Reverse) alternating `w` with exactly `k` fixed points.
    AlternatingFixedPoints { k: usize, reverse: bool },
    /// `#{w : co(w) = co_w, co(w^-1) = co_inverse}`.
    DescentPair { co_w: Composition, co_inverse: Composition },
    DoublyAlternating(DoubleVariant),
    AlternatingInvolutions { reverse: bool },
    /// (Reverse) alternating standard tableaux of a shape.
    AlternatingTableaux { shape: SkewShape, reverse: bool },
    /// Standard tableaux of a shape with the given descent composition.
    TableauDescentClass { shape: SkewShape, alpha: Composition },
    /// (Reverse) `(A,B)`-alternating `alpha`-permutations of a multiset.
    Multiset { alpha: Composition, row_set: BTreeSet<usize>, reverse: bool },
}

/// Counts the objects described by `query`. `n` is the size of the
/// permutations (ignored by shape and multiset queries, which carry their
/// own size).
pub fn oracle_counts(n: usize, query: &OracleQuery, cfg: &OracleConfig) -> Result<u64> {
    let mut count = 0u64;
    match query {
        OracleQuery::AlternatingCycleType { rho, reverse } => {
            check_bound("S_n sweep", n, cfg.sn_bound)?;
            for_each_perm(n, |w| {
                if zigzag(&w.0, *reverse) && &cycle_type(w) == rho {
                    count += 1;
                }
            });
        }
        OracleQuery::AlternatingFixedPoints { k, reverse } => {
            check_bound("S_n sweep", n, cfg.sn_bound)?;
            for_each_perm(n, |w| {
                if zigzag(&w.0, *reverse) && fixed_point_count(w) == *k {
                    count += 1;
                }
            });
        }
        OracleQuery::DescentPair { co_w, co_inverse } => {
            check_bound("inverse-pair sweep", n, cfg.inverse_bound)?;
            for_each_perm(n, |w| {
                if &descent_composition(w) == co_w && &descent_composition(&w.inverse()) == co_inverse {
                    count += 1;
                }
            });
        }
        OracleQuery::DoublyAlternating(variant) => {
            check_bound("inverse-pair sweep", n, cfg.inverse_bound)?;
            let (rw, rinv) = variant.flags();
            for_each_perm(n, |w| {
                if zigzag(&w.0, rw) && zigzag(&w.inverse().0, rinv) {
                    count += 1;
                }
            });
        }
        OracleQuery::AlternatingInvolutions { reverse } => {
            check_bound("S_n sweep", n, cfg.sn_bound)?;
            for_each_perm(n, |w| {
                if zigzag(&w.0, *reverse) && is_involution(w) {
                    count += 1;
                }
            });
        }
        OracleQuery::AlternatingTableaux { shape, reverse } => {
            let target = alternating_set(shape.size(), *reverse);
            for_each_syt(shape, cfg.syt_bound, |t| {
                if t.descent_set() == target {
                    count += 1;
                }
            })?;
        }
        OracleQuery::TableauDescentClass { shape, alpha } => {
            for_each_syt(shape, cfg.syt_bound, |t| {
                if &tableau_descent_composition(t) == alpha {
                    count += 1;
                }
            })?;
        }
        OracleQuery::Multiset { alpha, row_set, reverse } => {
            check_bound("multiset sweep", alpha.size(), cfg.multiset_bound)?;
            for_each_multiset_word(alpha, |word| {
                if is_ab_alternating(word, row_set, *reverse) {
                    count += 1;
                }
            });
        }
    }
    Ok(count)
}

/// Per-`n` tallies over the (reverse) alternating permutations of `[n]`,
/// from a single sweep of `S_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlternatingTally {
    pub total: u64,
    pub by_cycle_type: BTreeMap<Partition, u64>,
    pub by_fixed_points: BTreeMap<usize, u64>,
    pub involutions: u64,
}

pub fn tally_alternating(n: usize, reverse: bool, cfg: &OracleConfig) -> Result<AlternatingTally> {
    check_bound("S_n sweep", n, cfg.sn_bound)?;
    let mut tally = AlternatingTally::default();
    for_each_perm(n, |w| {
        if !zigzag(&w.0, reverse) {
            return;
        }
        tally.total += 1;
        *tally.by_cycle_type.entry(cycle_type(w)).or_insert(0) += 1;
        *tally.by_fixed_points.entry(fixed_point_count(w)).or_insert(0) += 1;
        if is_involution(w) {
            tally.involutions += 1;
        }
    });
    Ok(tally)
}

/// `#{w in S_n : co(w) = beta, co(w^-1) = alpha}` for every pair, keyed
/// `(beta, alpha)`.
pub fn tally_descent_pairs(n: usize, cfg: &OracleConfig) -> Result<BTreeMap<(Composition, Composition), u64>> {
    check_bound("inverse-pair sweep", n, cfg.inverse_bound)?;
    let mut out = BTreeMap::new();
    for_each_perm(n, |w| {
        let key = (descent_composition(w), descent_composition(&w.inverse()));
        *out.entry(key).or_insert(0) += 1;
    });
    Ok(out)
}

/// Visits every word with `alpha_i` copies of `i`, in lexicographic order.
pub fn for_each_multiset_word(alpha: &Composition, mut f: impl FnMut(&[usize])) {
    let mut word: Vec<usize> =
        alpha.0.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m)).collect();
    loop {
        f(&word);
        if !next_permutation(&mut word) {
            break;
        }
    }
}

/// `a_1 > a_2 < a_3 > ...` (or the reverse pattern), where equal letters
/// `j, j` count as a descent iff `j` is in `row_set` (the set `A`).
pub fn is_ab_alternating(word: &[usize], row_set: &BTreeSet<usize>, reverse: bool) -> bool {
    word.windows(2).enumerate().all(|(i, p)| {
        let descent = if p[0] == p[1] { row_set.contains(&p[0]) } else { p[0] > p[1] };
        ((i % 2 == 0) != reverse) == descent
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Perm {
        Perm::from_digits(s).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn descents() {
        assert_eq!(descent_set(&perm("213")), set(&[1]));
        assert_eq!(descent_set(&Perm::identity(5)), set(&[]));
        assert_eq!(descent_set(&perm("231")), set(&[2]));
        assert_eq!(descent_composition(&perm("132")), comp(&[2, 1]));
        assert_eq!(descent_composition(&Perm::identity(4)), comp(&[4]));
        assert_eq!(descent_composition(&perm("2143")), comp(&[1, 2, 1]));
    }

    #[test]
    fn alternation() {
        assert!(is_alternating(&perm("2143")));
        assert!(is_alternating(&perm("1")) && is_reverse_alternating(&perm("1")));
        assert!(!is_alternating(&perm("123")) && !is_reverse_alternating(&perm("123")));
        assert!(is_reverse_alternating(&perm("1324")));
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle_type(&Perm::identity(4)), part(&[1, 1, 1, 1]));
        assert_eq!(cycle_type(&perm("3142")), part(&[4]));
        assert_eq!(cycle_type(&perm("2143")), part(&[2, 2]));
        assert_eq!(fixed_point_count(&perm("4231")), 2);
    }

    #[test]
    fn bad_inputs() {
        assert!(Perm::from_digits("112").is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
        assert!(SkewShape::new(part(&[2]), part(&[1, 1])).is_err());
    }

    #[test]
    fn tableau_descents() {
        let t = Tableau::from_rows(vec![vec![1, 2, 5], vec![3, 4], vec![6]]).unwrap();
        assert_eq!(t.descent_set(), set(&[2, 5]));
        assert_eq!(tableau_descent_composition(&t), comp(&[2, 3, 1]));
        let row = Tableau::from_rows(vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(tableau_descent_composition(&row), comp(&[4]));
        let col = Tableau::from_rows(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(tableau_descent_composition(&col), comp(&[1, 1, 1]));
        assert!(Tableau::from_rows(vec![vec![2, 1]]).is_err());
    }

    #[test]
    fn rsk_trivial_and_properties() {
        let (p, q) = rsk(&perm("1"));
        assert_eq!(p.rows(), &[vec![1]]);
        assert_eq!(q.rows(), &[vec![1]]);
        for n in 1..=7 {
            for_each_perm(n, |w| {
                let (p, q) = rsk(w);
                assert_eq!(descent_set(w), q.descent_set());
                assert_eq!(rsk(&w.inverse()), (q, p));
            });
        }
    }

    #[test]
    fn syt_counts() {
        let cfg = OracleConfig::default();
        assert_eq!(enumerate_syt(&SkewShape::straight(part(&[2, 1])), 14).unwrap().len(), 2);
        assert_eq!(enumerate_syt(&SkewShape::straight(part(&[5])), 14).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&tau_shape(3, false), 14).unwrap().len(), 2);
        for n in 1..=8 {
            let fact: u128 = (1..=n as u128).product();
            for lam in partitions(n) {
                let count = enumerate_syt(&SkewShape::straight(lam.clone()), cfg.syt_bound).unwrap().len();
                assert_eq!(count as u128, fact / lam.hook_product(), "{lam}");
            }
        }
        assert!(matches!(
            enumerate_syt(&SkewShape::straight(part(&[15])), 14),
            Err(Error::OracleLimit { .. })
        ));
    }

    #[test]
    fn ribbons() {
        assert_eq!(ribbon_shape(&comp(&[4])), SkewShape::straight(part(&[4])));
        assert_eq!(ribbon_shape(&comp(&[1, 1, 1])), SkewShape::straight(part(&[1, 1, 1])));
        for k in 1..=4 {
            let twos = ribbon_shape(&comp(&vec![2; k]));
            assert_eq!(tau_shape(2 * k, true), twos);
        }
        // tau_n has E_n tableaux
        let euler = crate::exact::euler_numbers(9);
        for n in 1..=9 {
            for primed in [false, true] {
                let count = enumerate_syt(&tau_shape(n, primed), 14).unwrap().len();
                assert_eq!(num_bigint::BigInt::from(count), euler[n]);
            }
        }
    }

    #[test]
    fn multiset_shapes() {
        let s = multiset_shape(&comp(&[3, 1, 2, 2]), &set(&[2, 4]));
        assert_eq!(s, multiset_shape(&comp(&[3, 1, 2, 2]), &set(&[4])));
        assert_eq!(s.outer(), &part(&[5, 5, 5, 4, 3, 3, 2]));
        assert_eq!(s.inner(), &part(&[4, 4, 4, 3, 2, 2]));
        assert_eq!(multiset_shape(&comp(&[4]), &set(&[1])), SkewShape::straight(part(&[4])));
        let cells = multiset_shape(&comp(&[1, 1]), &set(&[]));
        assert_eq!(cells.size(), 2);
        assert_eq!(cells.cells(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn multiset_words() {
        let a = set(&[1, 3]);
        let w: Vec<usize> = "1142214343".chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
        assert!(is_ab_alternating(&w, &a, false));
        let w: Vec<usize> = "2213341414".chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
        assert!(is_ab_alternating(&w, &a, true));
        let mut n = 0;
        for_each_multiset_word(&comp(&[3, 3, 3]), |_| n += 1);
        assert_eq!(n, 1680);
    }

    #[test]
    fn oracle_examples() {
        let cfg = OracleConfig::default();
        let q = OracleQuery::DoublyAlternating(DoubleVariant::AltAlt);
        assert_eq!(oracle_counts(3, &q, &cfg).unwrap(), 1);
        let q = OracleQuery::AlternatingCycleType { rho: part(&[2, 1]), reverse: false };
        assert_eq!(oracle_counts(3, &q, &cfg).unwrap(), 1);
        let q = OracleQuery::Multiset { alpha: comp(&[3, 3, 3]), row_set: set(&[]), reverse: false };
        assert_eq!(oracle_counts(9, &q, &cfg).unwrap(), 30);
        let q = OracleQuery::AlternatingFixedPoints { k: 0, reverse: false };
        assert!(matches!(oracle_counts(10, &q, &cfg), Err(Error::OracleLimit { .. })));
    }

    #[test]
    fn alternating_counts_and_reversal() {
        let cfg = OracleConfig::default();
        let euler = crate::exact::euler_numbers(8);
        for n in 1..=8 {
            let alt = tally_alternating(n, false, &cfg).unwrap();
            let ralt = tally_alternating(n, true, &cfg).unwrap();
            assert_eq!(num_bigint::BigInt::from(alt.total), euler[n]);
            assert_eq!(alt.total, ralt.total);
        }
        // the complement map swaps the two classes
        for_each_perm(6, |w| assert_eq!(is_alternating(w), is_reverse_alternating(&w.complement())));
    }

    #[test]
    fn descent_pairs_are_symmetric() {
        let cfg = OracleConfig::default();
        for n in 1..=6 {
            let t = tally_descent_pairs(n, &cfg).unwrap();
            for ((b, a), c) in &t {
                assert_eq!(t.get(&(a.clone(), b.clone())), Some(c));
            }
        }
    }

    #[test]
    fn f_equals_g() {
        let cfg = OracleConfig::default();
        for n in 1..=8 {
            let f = oracle_counts(n, &OracleQuery::DoublyAlternating(DoubleVariant::AltAlt), &cfg).unwrap();
            let g = oracle_counts(n, &OracleQuery::DoublyAlternating(DoubleVariant::RaltRalt), &cfg).unwrap();
            assert_eq!(f, g, "n = {n}");
        }
    }

    #[test]
    fn partition_listing() {
        let p4: Vec<String> = partitions(4).iter().map(ToString::to_string).collect();
        assert_eq!(p4, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(partitions(0), vec![Partition::default()]);
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(Partition::staircase(4).hook_product(), 45);
    }
}
