//! Partitions, skew shapes, multipartitions, standard tableaux and contents.

mod bratteli;
mod tableau;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::qfield::RatFunc;

pub use bratteli::{bratteli, BratteliEdge, BratteliFamily, BratteliGraph};
pub use tableau::{enumerate_standard_tableaux, StandardTableau};

/// Weakly decreasing list of positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return invalid(format!("partition {rows:?} has an empty row"));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("partition {rows:?} is not weakly decreasing"));
        }
        Ok(Partition(rows))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `r` (1-based); zero beyond the last row.
    pub fn row_len(&self, r: usize) -> usize {
        r.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    /// Whether the box at 1-based `(row, col)` lies in the diagram.
    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.row_len(row)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Positions `(row, col)` where a box can be added.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        (1..=self.length() + 1)
            .filter(|&r| r == 1 || self.row_len(r - 1) > self.row_len(r))
            .map(|r| (r, self.row_len(r) + 1))
            .collect()
    }

    /// Positions `(row, col)` of removable corner boxes.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        (1..=self.length())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| (r, self.row_len(r)))
            .collect()
    }

    fn with_row_delta(&self, row: usize, delta: isize) -> Result<Self> {
        let mut rows = self.0.clone();
        if row > rows.len() {
            rows.resize(row, 0);
        }
        let v = rows[row - 1] as isize + delta;
        if v < 0 {
            return invalid("row length would become negative");
        }
        rows[row - 1] = v as usize;
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition::new(rows)
    }

    pub fn add_box(&self, row: usize) -> Result<Self> {
        self.with_row_delta(row, 1)
    }

    pub fn remove_box(&self, row: usize) -> Result<Self> {
        self.with_row_delta(row, -1)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `outer / inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return invalid(format!("{inner} is not contained in {outer}"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Ordered tuple of `r >= 1` partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return invalid("a multipartition needs at least one component");
        }
        Ok(MultiPartition(components))
    }

    pub fn from_rows(rows: &[&[usize]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| Partition::new(r.to_vec())).collect::<Result<_>>()?)
    }

    pub fn empty(r: usize) -> Self {
        MultiPartition(vec![Partition::empty(); r.max(1)])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i - 1]
    }

    /// Number of components `r`.
    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// Componentwise containment.
    pub fn contains(&self, other: &MultiPartition) -> bool {
        self.r() == other.r() && self.0.iter().zip(&other.0).all(|(a, b)| a.contains(b))
    }

    fn replace(&self, i: usize, p: Partition) -> Self {
        let mut comps = self.0.clone();
        comps[i - 1] = p;
        MultiPartition(comps)
    }
}

impl TryFrom<Vec<Partition>> for MultiPartition {
    type Error = Error;
    fn try_from(c: Vec<Partition>) -> Result<Self> {
        MultiPartition::new(c)
    }
}

impl From<MultiPartition> for Vec<Partition> {
    fn from(m: MultiPartition) -> Self {
        m.0
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A box at 1-based `(row, col)`, in component `comp` for multipartitions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Cell {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub comp: Option<usize>,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn plain(row: usize, col: usize) -> Self {
        Cell { comp: None, row, col }
    }

    pub fn in_comp(comp: usize, row: usize, col: usize) -> Self {
        Cell {
            comp: Some(comp),
            row,
            col,
        }
    }

    /// `c - r`
    pub fn diagonal(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    fn left(&self) -> Option<Cell> {
        (self.col > 1).then(|| Cell {
            col: self.col - 1,
            ..*self
        })
    }

    fn up(&self) -> Option<Cell> {
        (self.row > 1).then(|| Cell {
            row: self.row - 1,
            ..*self
        })
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.comp {
            Some(i) => write!(f, "[{i}]({},{})", self.row, self.col),
            None => write!(f, "({},{})", self.row, self.col),
        }
    }
}

/// Any of the shapes that index a seminormal basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Shape {
    Partition(Partition),
    Multi(MultiPartition),
    Skew(SkewShape),
}

impl Shape {
    /// Parse `[2,1]`, `[[1],[1]]` or `[2,1]/[1]`.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = |e: serde_json::Error| Error::Parse(format!("bad shape {spec:?}: {e}"));
        if let Some((outer, inner)) = spec.split_once('/') {
            let outer: Partition = serde_json::from_str(outer.trim()).map_err(bad)?;
            let inner: Partition = serde_json::from_str(inner.trim()).map_err(bad)?;
            return Ok(Shape::Skew(SkewShape::new(outer, inner)?));
        }
        serde_json::from_str(spec.trim()).map_err(bad)
    }

    pub fn size(&self) -> usize {
        match self {
            Shape::Partition(p) => p.size(),
            Shape::Multi(m) => m.size(),
            Shape::Skew(s) => s.size(),
        }
    }

    pub fn contains_cell(&self, c: &Cell) -> bool {
        match (self, c.comp) {
            (Shape::Partition(p), None) => p.contains_box(c.row, c.col),
            (Shape::Skew(s), None) => s.outer.contains_box(c.row, c.col) && !s.inner.contains_box(c.row, c.col),
            (Shape::Multi(m), Some(i)) => i >= 1 && i <= m.r() && m.component(i).contains_box(c.row, c.col),
            _ => false,
        }
    }

    /// All boxes, sorted by `(comp, row, col)`.
    pub fn cells(&self) -> Vec<Cell> {
        let from_rows = |outer: &Partition, inner: Option<&Partition>, comp: Option<usize>| {
            let mut out = Vec::new();
            for r in 1..=outer.length() {
                let start = inner.map_or(0, |p| p.row_len(r));
                for c in start + 1..=outer.row_len(r) {
                    out.push(Cell { comp, row: r, col: c });
                }
            }
            out
        };
        match self {
            Shape::Partition(p) => from_rows(p, None, None),
            Shape::Skew(s) => from_rows(&s.outer, Some(&s.inner), None),
            Shape::Multi(m) => m
                .components()
                .iter()
                .enumerate()
                .flat_map(|(i, p)| from_rows(p, None, Some(i + 1)))
                .collect(),
        }
    }

    /// Boxes whose addition gives a valid shape of the same kind.
    pub fn addable_boxes(&self) -> Vec<Cell> {
        match self {
            Shape::Partition(p) => p.addable().into_iter().map(|(r, c)| Cell::plain(r, c)).collect(),
            Shape::Skew(s) => s.outer.addable().into_iter().map(|(r, c)| Cell::plain(r, c)).collect(),
            Shape::Multi(m) => m
                .components()
                .iter()
                .enumerate()
                .flat_map(|(i, p)| p.addable().into_iter().map(move |(r, c)| Cell::in_comp(i + 1, r, c)))
                .collect(),
        }
    }

    /// Boxes whose removal gives a valid shape of the same kind.
    pub fn removable_boxes(&self) -> Vec<Cell> {
        match self {
            Shape::Partition(p) => p.removable().into_iter().map(|(r, c)| Cell::plain(r, c)).collect(),
            Shape::Skew(s) => s
                .outer
                .removable()
                .into_iter()
                .filter(|&(r, c)| c > s.inner.row_len(r))
                .map(|(r, c)| Cell::plain(r, c))
                .collect(),
            Shape::Multi(m) => m
                .components()
                .iter()
                .enumerate()
                .flat_map(|(i, p)| p.removable().into_iter().map(move |(r, c)| Cell::in_comp(i + 1, r, c)))
                .collect(),
        }
    }

    /// The shape with removable box `cell` taken away.
    pub fn remove_cell(&self, cell: &Cell) -> Result<Shape> {
        if !self.removable_boxes().contains(cell) {
            return invalid(format!("{cell} is not removable from {self}"));
        }
        Ok(match self {
            Shape::Partition(p) => Shape::Partition(p.remove_box(cell.row)?),
            Shape::Skew(s) => Shape::Skew(SkewShape::new(s.outer.remove_box(cell.row)?, s.inner.clone())?),
            Shape::Multi(m) => {
                let i = cell.comp.expect("multipartition cell");
                Shape::Multi(m.replace(i, m.component(i).remove_box(cell.row)?))
            }
        })
    }

    /// The shape with addable box `cell` added.
    pub fn add_cell(&self, cell: &Cell) -> Result<Shape> {
        if !self.addable_boxes().contains(cell) {
            return invalid(format!("{cell} is not addable to {self}"));
        }
        Ok(match self {
            Shape::Partition(p) => Shape::Partition(p.add_box(cell.row)?),
            Shape::Skew(s) => Shape::Skew(SkewShape::new(s.outer.add_box(cell.row)?, s.inner.clone())?),
            Shape::Multi(m) => {
                let i = cell.comp.expect("multipartition cell");
                Shape::Multi(m.replace(i, m.component(i).add_box(cell.row)?))
            }
        })
    }

    /// Standardness constraints: the in-shape left and upper neighbours of `c`.
    pub(crate) fn predecessors(&self, c: &Cell) -> impl Iterator<Item = Cell> + '_ {
        [c.left(), c.up()]
            .into_iter()
            .flatten()
            .filter(move |n| self.contains_cell(n))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Partition(p) => write!(f, "{p}"),
            Shape::Multi(m) => write!(f, "{m}"),
            Shape::Skew(s) => write!(f, "{s}"),
        }
    }
}

impl From<Partition> for Shape {
    fn from(p: Partition) -> Self {
        Shape::Partition(p)
    }
}

impl From<MultiPartition> for Shape {
    fn from(m: MultiPartition) -> Self {
        Shape::Multi(m)
    }
}

impl From<SkewShape> for Shape {
    fn from(s: SkewShape) -> Self {
        Shape::Skew(s)
    }
}

/// How box contents are computed.
#[derive(Clone, Debug, PartialEq)]
pub enum ContentRule {
    /// `q^{2(c-r)}`
    Plain,
    /// `u_i q^{2(c-r)}` for a box in component `i`
    Cyclotomic(Vec<RatFunc>),
    /// `u_1 q^{2(c-r)+2}`
    Shifted(RatFunc),
}

/// The content `CT(b)` of a box under `rule`.
pub fn content(cell: &Cell, rule: &ContentRule) -> Result<RatFunc> {
    let diag = cell.diagonal();
    match (rule, cell.comp) {
        (ContentRule::Plain, None) => Ok(RatFunc::q_pow(2 * diag)),
        (ContentRule::Plain, Some(i)) => invalid(format!("box in component {i} needs parameters u")),
        (ContentRule::Cyclotomic(_), None) => Ok(RatFunc::q_pow(2 * diag)),
        (ContentRule::Cyclotomic(u), Some(i)) => {
            let ui = u
                .get(i.wrapping_sub(1))
                .ok_or_else(|| Error::InvalidArgument(format!("no parameter u_{i} among {} given", u.len())))?;
            Ok(ui.mul(&RatFunc::q_pow(2 * diag)))
        }
        (ContentRule::Shifted(u1), _) => Ok(u1.mul(&RatFunc::q_pow(2 * diag + 2))),
    }
}

/// All partitions of `k` in reverse-lexicographic order.
pub fn enumerate_partitions(k: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `k` into `r` parts, first part largest first.
fn compositions(k: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 1 {
        return vec![vec![k]];
    }
    (0..=k)
        .rev()
        .flat_map(|first| {
            compositions(k - first, r - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// All `r`-tuples of partitions with `k` boxes in total.
pub fn index_set_h(k: usize, r: usize) -> Result<Vec<MultiPartition>> {
    if r == 0 {
        return invalid("r must be at least 1");
    }
    let mut out = Vec::new();
    for sizes in compositions(k, r) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &s in &sizes {
            let parts = enumerate_partitions(s);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    parts.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(MultiPartition));
    }
    Ok(out)
}

/// Pairs of partitions with `k` boxes whose first component has at most one row.
pub fn index_set_a(k: usize) -> Vec<MultiPartition> {
    index_set_h(k, 2)
        .expect("r = 2")
        .into_iter()
        .filter(|m| m.component(1).length() <= 1)
        .collect()
}

/// Number of standard tableaux of `shape`.
pub fn dimension(shape: &Shape) -> usize {
    enumerate_standard_tableaux(shape).len()
}
