use std::collections::HashMap;

use serde::Serialize;

use super::{Cell, Shape};
use crate::error::{invalid, Result};

/// A standard filling of a shape by `1..=k`.
///
/// `positions[i]` is the box holding `i + 1`. Tableaux of one shape are
/// ordered lexicographically by `positions`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct StandardTableau {
    shape: Shape,
    positions: Vec<Cell>,
}

impl StandardTableau {
    /// Validates that `positions` is a standard filling of `shape`.
    pub fn new(shape: Shape, positions: Vec<Cell>) -> Result<Self> {
        let mut cells = positions.clone();
        cells.sort();
        if cells != shape.cells() {
            return invalid(format!("positions do not fill {shape} exactly once"));
        }
        let t = StandardTableau { shape, positions };
        if !t.is_standard() {
            return invalid("filling is not standard");
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn positions(&self) -> &[Cell] {
        &self.positions
    }

    pub fn k(&self) -> usize {
        self.positions.len()
    }

    /// Box holding entry `i` (1-based).
    pub fn cell_of(&self, i: usize) -> Cell {
        self.positions[i - 1]
    }

    pub fn entry_at(&self, cell: &Cell) -> Option<usize> {
        self.positions.iter().position(|c| c == cell).map(|i| i + 1)
    }

    fn is_standard(&self) -> bool {
        let entry: HashMap<Cell, usize> = self.positions.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        self.positions
            .iter()
            .enumerate()
            .all(|(i, c)| self.shape.predecessors(c).all(|p| entry[&p] < i))
    }

    /// `s_i T`, exchanging `i` and `i+1`, if the result is standard.
    pub fn swap(&self, i: usize) -> Option<StandardTableau> {
        if i == 0 || i >= self.k() {
            return None;
        }
        let mut positions = self.positions.clone();
        positions.swap(i - 1, i);
        let t = StandardTableau {
            shape: self.shape.clone(),
            positions,
        };
        t.is_standard().then_some(t)
    }

    /// Drop the box holding `k`, giving a tableau of the smaller shape.
    pub fn remove_largest(&self) -> Result<StandardTableau> {
        let last = *self
            .positions
            .last()
            .ok_or_else(|| crate::Error::InvalidArgument("empty tableau".into()))?;
        let shape = self.shape.remove_cell(&last)?;
        Ok(StandardTableau {
            shape,
            positions: self.positions[..self.k() - 1].to_vec(),
        })
    }

    /// Rows of entries per component, `None` for inner skew boxes.
    pub fn filling(&self) -> Vec<Vec<Vec<Option<usize>>>> {
        let (comps, inner): (Vec<Vec<usize>>, Vec<usize>) = match &self.shape {
            Shape::Partition(p) => (vec![p.rows().to_vec()], vec![]),
            Shape::Skew(s) => (vec![s.outer.rows().to_vec()], s.inner.rows().to_vec()),
            Shape::Multi(m) => (m.components().iter().map(|p| p.rows().to_vec()).collect(), vec![]),
        };
        let multi = matches!(self.shape, Shape::Multi(_));
        comps
            .iter()
            .enumerate()
            .map(|(ci, rows)| {
                rows.iter()
                    .enumerate()
                    .map(|(ri, &len)| {
                        (1..=len)
                            .map(|col| {
                                if inner.get(ri).is_some_and(|&l| col <= l) {
                                    return None;
                                }
                                let cell = Cell {
                                    comp: multi.then_some(ci + 1),
                                    row: ri + 1,
                                    col,
                                };
                                self.entry_at(&cell)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

impl PartialOrd for StandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StandardTableau {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.positions.cmp(&other.positions)
    }
}

/// All standard tableaux of `shape`, in canonical order.
pub fn enumerate_standard_tableaux(shape: &Shape) -> Vec<StandardTableau> {
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut placed: HashMap<Cell, usize> = HashMap::new();
    let mut positions = Vec::with_capacity(cells.len());
    fn rec(
        shape: &Shape,
        cells: &[Cell],
        placed: &mut HashMap<Cell, usize>,
        positions: &mut Vec<Cell>,
        out: &mut Vec<StandardTableau>,
    ) {
        if positions.len() == cells.len() {
            out.push(StandardTableau {
                shape: shape.clone(),
                positions: positions.clone(),
            });
            return;
        }
        for c in cells {
            if placed.contains_key(c) || !shape.predecessors(c).all(|p| placed.contains_key(&p)) {
                continue;
            }
            placed.insert(*c, positions.len());
            positions.push(*c);
            rec(shape, cells, placed, positions, out);
            positions.pop();
            placed.remove(c);
        }
    }
    rec(shape, &cells, &mut placed, &mut positions, &mut out);
    out
}
