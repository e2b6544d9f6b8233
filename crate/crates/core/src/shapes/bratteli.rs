use std::fmt::Write;

use serde::Serialize;

use super::{index_set_a, index_set_h, MultiPartition, Shape};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum BratteliFamily {
    /// Pairs of partitions.
    TypeB,
    /// Pairs whose first component has at most one row.
    AQuotient,
}

/// Edge between `parent` on level `level - 1` and `child` on level `level`,
/// both given as indices into their level.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct BratteliEdge {
    pub level: usize,
    pub parent: usize,
    pub child: usize,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct BratteliGraph {
    pub family: BratteliFamily,
    pub levels: Vec<Vec<MultiPartition>>,
    pub edges: Vec<BratteliEdge>,
}

/// Levels `0..=levels` with one-box-removal edges.
pub fn bratteli(levels: usize, family: BratteliFamily) -> BratteliGraph {
    let vertices: Vec<Vec<MultiPartition>> = (0..=levels)
        .map(|m| match family {
            BratteliFamily::TypeB => index_set_h(m, 2).expect("r = 2"),
            BratteliFamily::AQuotient => index_set_a(m),
        })
        .collect();
    let mut edges = Vec::new();
    for m in 1..=levels {
        for (ci, child) in vertices[m].iter().enumerate() {
            let shape = Shape::Multi(child.clone());
            for cell in shape.removable_boxes() {
                let Ok(Shape::Multi(parent)) = shape.remove_cell(&cell) else {
                    unreachable!("removing a box from a multipartition")
                };
                if let Some(pi) = vertices[m - 1].iter().position(|v| *v == parent) {
                    edges.push(BratteliEdge {
                        level: m,
                        parent: pi,
                        child: ci,
                    });
                }
            }
        }
    }
    edges.sort();
    BratteliGraph {
        family,
        levels: vertices,
        edges,
    }
}

impl BratteliGraph {
    pub fn vertex_counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn edge_counts(&self) -> Vec<usize> {
        (1..self.levels.len())
            .map(|m| self.edges.iter().filter(|e| e.level == m).count())
            .collect()
    }

    /// Number of paths from the root to each vertex.
    pub fn path_counts(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![vec![1; self.levels.first().map_or(0, Vec::len)]];
        for m in 1..self.levels.len() {
            let mut level = vec![0; self.levels[m].len()];
            for e in self.edges.iter().filter(|e| e.level == m) {
                level[e.child] += out[m - 1][e.parent];
            }
            out.push(level);
        }
        out
    }

    /// Graphviz source with one rank per level.
    pub fn to_dot(&self) -> String {
        let id = |m: usize, i: usize| format!("v{m}_{i}");
        let mut s = String::from("graph bratteli {\n  node [shape=plaintext];\n");
        for (m, level) in self.levels.iter().enumerate() {
            s.push_str("  { rank=same;");
            for (i, v) in level.iter().enumerate() {
                write!(s, " {} [label=\"{}\"];", id(m, i), v).unwrap();
            }
            s.push_str(" }\n");
        }
        for e in &self.edges {
            writeln!(s, "  {} -- {};", id(e.level - 1, e.parent), id(e.level, e.child)).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::dimension;

    fn m(rows: &[&[usize]]) -> MultiPartition {
        MultiPartition::from_rows(rows).unwrap()
    }

    #[test]
    fn counts() {
        let b = bratteli(3, BratteliFamily::TypeB);
        assert_eq!(b.vertex_counts(), vec![1, 2, 5, 10]);
        assert_eq!(b.edge_counts(), vec![2, 6, 16]);
        let a = bratteli(3, BratteliFamily::AQuotient);
        assert_eq!(a.vertex_counts(), vec![1, 2, 4, 7]);
        assert_eq!(a.edge_counts(), vec![2, 5, 11]);
    }

    #[test]
    fn quotient_drops_descendants_of_column_pair() {
        let b = bratteli(4, BratteliFamily::TypeB);
        let a = bratteli(4, BratteliFamily::AQuotient);
        let bad = m(&[&[1, 1], &[]]);
        for (lb, la) in b.levels.iter().zip(&a.levels) {
            let kept: Vec<_> = lb.iter().filter(|v| !v.contains(&bad)).cloned().collect();
            assert_eq!(&kept, la);
        }
    }

    #[test]
    fn path_counts_are_dimensions() {
        for fam in [BratteliFamily::TypeB, BratteliFamily::AQuotient] {
            let g = bratteli(4, fam);
            for (level, counts) in g.levels.iter().zip(g.path_counts()) {
                for (v, c) in level.iter().zip(counts) {
                    assert_eq!(dimension(&Shape::Multi(v.clone())), c, "{v}");
                }
            }
        }
    }

    #[test]
    fn dot_is_deterministic() {
        let g = bratteli(2, BratteliFamily::AQuotient);
        let dot = g.to_dot();
        assert_eq!(dot, bratteli(2, BratteliFamily::AQuotient).to_dot());
        assert!(dot.starts_with("graph bratteli {"));
        assert!(dot.contains("v0_0 [label=\"(∅,∅)\"]"));
        assert_eq!(dot.matches(" -- ").count(), 7);
    }
}
