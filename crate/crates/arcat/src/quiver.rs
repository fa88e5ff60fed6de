//! Finite quivers and their paths.
//!
//! A quiver is a finite directed multigraph with labeled vertices and
//! arrows. Paths are composed in diagram order: the path `[a, b]` means
//! "first travel along `a`, then along `b`", so its source is the source
//! of `a` and its target is the target of `b`. Length-0 paths (the lazy
//! paths `e_v`) are included in every enumeration.
//!
//! Path enumeration refuses quivers with directed cycles — everything
//! downstream (path-algebra bases, projectives) needs the path set to be
//! finite.

use crate::error::{Error, Result};

/// Vertex index into [`Quiver::vertices`].
pub type VertexId = usize;
/// Arrow index into [`Quiver::arrows`].
pub type ArrowId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Quiver {
        Quiver::default()
    }

    /// Add a vertex; labels must be unique.
    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<VertexId> {
        let label = label.into();
        if self.vertices.contains(&label) {
            return Err(Error::Malformed {
                reason: format!("duplicate vertex label `{label}`"),
            });
        }
        self.vertices.push(label);
        Ok(self.vertices.len() - 1)
    }

    /// Add an arrow between existing vertices; names must be unique.
    pub fn add_arrow(
        &mut self,
        name: impl Into<String>,
        source: VertexId,
        target: VertexId,
    ) -> Result<ArrowId> {
        let name = name.into();
        if source >= self.vertices.len() || target >= self.vertices.len() {
            return Err(Error::UnknownVertex {
                vertex: format!("#{}", source.max(target)),
            });
        }
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::Malformed {
                reason: format!("duplicate arrow name `{name}`"),
            });
        }
        self.arrows.push(Arrow {
            name,
            source,
            target,
        });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Result<VertexId> {
        self.vertices
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex {
                vertex: label.to_string(),
            })
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_by_name(&self, name: &str) -> Result<ArrowId> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow {
                arrow: name.to_string(),
            })
    }

    /// Arrows with the given source vertex, in declaration order.
    pub fn arrows_from(&self, v: VertexId) -> Vec<ArrowId> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].source == v)
            .collect()
    }

    /// Arrows with the given target vertex, in declaration order.
    pub fn arrows_into(&self, v: VertexId) -> Vec<ArrowId> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].target == v)
            .collect()
    }

    /// Does the quiver contain a directed cycle? Returns a vertex on one.
    pub fn find_cycle(&self) -> Option<VertexId> {
        // Kahn peeling: repeatedly remove sources; leftovers lie on cycles.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0usize;
        while let Some(v) = stack.pop() {
            removed += 1;
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        stack.push(a.target);
                    }
                }
            }
        }
        if removed == n {
            None
        } else {
            (0..n).find(|&v| indeg[v] > 0)
        }
    }

    /// All paths, ordered by (length, arrow sequence). Includes one lazy
    /// path per vertex, ordered by vertex index. Errors with
    /// `cycle-detected` when the path set would be infinite.
    pub fn enumerate_paths(&self) -> Result<Vec<Path>> {
        if let Some(v) = self.find_cycle() {
            return Err(Error::CycleDetected {
                vertex: self.vertices[v].clone(),
            });
        }
        let mut all: Vec<Path> = (0..self.vertices.len()).map(Path::lazy).collect();
        let mut frontier: Vec<Path> = all.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.arrows_from(p.target(self)) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path {
                        source: p.source,
                        arrows,
                    });
                }
            }
            next.sort_by(|a, b| a.arrows.cmp(&b.arrows));
            all.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(all)
    }

    /// Human-readable path rendering: `e_v` or `a*b*c`.
    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A directed path: a source vertex and a composable arrow sequence in
/// diagram order (possibly empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl Path {
    /// The lazy (length-0) path at a vertex.
    pub fn lazy(v: VertexId) -> Path {
        Path {
            source: v,
            arrows: vec![],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> VertexId {
        self.arrows
            .last()
            .map_or(self.source, |&a| q.arrow(a).target)
    }

    /// Concatenate `self` then `other`; `None` if they do not compose.
    pub fn then(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.target(q) != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            arrows,
        })
    }

    /// Is the arrow sequence genuinely composable in `q`?
    pub fn is_valid(&self, q: &Quiver) -> bool {
        let mut at = self.source;
        for &a in &self.arrows {
            if a >= q.arrow_count() || q.arrow(a).source != at {
                return false;
            }
            at = q.arrow(a).target;
        }
        true
    }
}

/// The linearly oriented type-A quiver on `n` vertices: labels `"1".."n"`,
/// arrows `a_{k+1,k}: k+1 -> k`, so every arrow points toward vertex 1.
/// With this orientation the composition series of an interval module
/// reads top-down as `"a/a-1/.../b"`.
pub fn linear_an(n: usize) -> Quiver {
    let mut q = Quiver::new();
    for i in 1..=n {
        q.add_vertex(i.to_string()).expect("fresh labels");
    }
    for i in (2..=n).rev() {
        // vertex labels are 1-based, ids 0-based
        q.add_arrow(format!("a{}{}", i, i - 1), i - 1, i - 2)
            .expect("fresh arrows");
    }
    q
}

/// A type-A quiver on `n` vertices with alternating orientation:
/// the arrow between `k` and `k+1` points `k+1 -> k` for odd `k` and
/// `k -> k+1` for even `k`.
pub fn alternating_an(n: usize) -> Quiver {
    let mut q = Quiver::new();
    for i in 1..=n {
        q.add_vertex(i.to_string()).expect("fresh labels");
    }
    for k in 1..n {
        if k % 2 == 1 {
            q.add_arrow(format!("a{}{}", k + 1, k), k, k - 1)
                .expect("fresh arrows");
        } else {
            q.add_arrow(format!("a{}{}", k, k + 1), k - 1, k)
                .expect("fresh arrows");
        }
    }
    q
}
