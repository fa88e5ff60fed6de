//! Bound quiver algebras: path algebras of acyclic quivers modulo
//! admissible relations.
//!
//! Construction is honest linear algebra. All paths of the (finite,
//! because acyclic) free path category are enumerated; the two-sided
//! ideal generated by the relations is closed under pre- and
//! post-composition with every path; within each `(source, target)`
//! block the closed relation set is row-reduced; the non-pivot paths
//! survive as the **path basis** of the quotient, and every pivot path
//! receives a normal form over the surviving paths. Multiplication of
//! basis elements is concatenation followed by normal-form lookup.
//!
//! The indecomposable projective `P(i)` is realized as the representation
//! whose space at `v` is spanned by the basis paths `i ~> v`, with arrows
//! acting by right concatenation; the indecomposable injective `I(i)`
//! is the dual construction on paths `v ~> i` with transposed action.
//! Consequently `dim Hom(P(i), M) = dim M_i` and `sum_i dim P(i)` equals
//! the dimension of the algebra — both are pinned by tests.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Rat};
use crate::quiver::{ArrowId, Path, Quiver, VertexId};
use crate::rep::Representation;

static NEXT_TOKEN: AtomicU64 = AtomicU64::new(1);

/// A relation: a formal rational combination of parallel paths, each of
/// length at least two.
#[derive(Debug, Clone)]
pub struct Relation {
    pub terms: Vec<(Rat, Path)>,
}

/// Combination of quotient-basis elements, as `(coefficient, basis index)`.
pub type Combo = Vec<(Rat, usize)>;

#[derive(Debug)]
pub struct BoundQuiverAlgebra {
    token: u64,
    quiver: Quiver,
    relations: Vec<Relation>,
    /// every path of the free category, in (length, lex) order
    paths: Vec<Path>,
    path_index: HashMap<Path, usize>,
    /// indices into `paths` that survive in the quotient
    basis: Vec<usize>,
    /// path index -> basis position, for surviving paths
    basis_pos: Vec<Option<usize>>,
    /// path index -> normal form over basis positions
    normal_form: Vec<Combo>,
    /// `[x][y]` -> basis positions of paths `x ~> y`
    block: Vec<Vec<Vec<usize>>>,
}

impl BoundQuiverAlgebra {
    /// Build the algebra. Errors: `cycle-detected` for cyclic quivers,
    /// `inadmissible-relation` for relations that are empty, too short,
    /// or not parallel.
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<BoundQuiverAlgebra> {
        let paths = quiver.enumerate_paths()?;
        let path_index: HashMap<Path, usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        for (k, rel) in relations.iter().enumerate() {
            let live: Vec<&(Rat, Path)> =
                rel.terms.iter().filter(|(c, _)| !c.is_zero()).collect();
            if live.is_empty() {
                return Err(Error::InadmissibleRelation {
                    reason: format!("relation #{k} has no nonzero term"),
                });
            }
            let (s0, t0) = (live[0].1.source, live[0].1.target(&quiver));
            for (_, p) in &live {
                if !p.is_valid(&quiver) {
                    return Err(Error::InadmissibleRelation {
                        reason: format!("relation #{k} contains a non-composable path"),
                    });
                }
                if p.len() < 2 {
                    return Err(Error::InadmissibleRelation {
                        reason: format!(
                            "relation #{k} contains a path of length {} (needs >= 2)",
                            p.len()
                        ),
                    });
                }
                if p.source != s0 || p.target(&quiver) != t0 {
                    return Err(Error::InadmissibleRelation {
                        reason: format!("relation #{k} mixes non-parallel paths"),
                    });
                }
            }
        }

        // Close the relations under pre- and post-composition with all
        // paths, then eliminate per block.
        let nv = quiver.vertex_count();
        // block_paths[x][y] = indices of paths x ~> y
        let mut block_paths: Vec<Vec<Vec<usize>>> = vec![vec![vec![]; nv]; nv];
        for (i, p) in paths.iter().enumerate() {
            block_paths[p.source][p.target(&quiver)].push(i);
        }
        // ideal elements per block, as coordinate rows over the block's
        // path list
        let mut ideal_rows: HashMap<(VertexId, VertexId), Vec<Vec<Rat>>> = HashMap::new();
        for rel in &relations {
            let terms: Vec<(Rat, usize)> = rel
                .terms
                .iter()
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, p)| (c.clone(), path_index[p]))
                .collect();
            let u = paths[terms[0].1].source;
            let v = paths[terms[0].1].target(&quiver);
            for pre in paths.iter().filter(|p| p.target(&quiver) == u) {
                for post in paths.iter().filter(|p| p.source == v) {
                    let x = pre.source;
                    let y = post.target(&quiver);
                    let bp = &block_paths[x][y];
                    let mut row = vec![Rat::zero(); bp.len()];
                    for (c, t) in &terms {
                        let comp = pre
                            .then(&paths[*t], &quiver)
                            .and_then(|q| q.then(post, &quiver))
                            .expect("closure paths compose by construction");
                        let idx = path_index[&comp];
                        let pos = bp.binary_search(&idx).expect("path in its own block");
                        row[pos] += c;
                    }
                    ideal_rows.entry((x, y)).or_default().push(row);
                }
            }
        }
        // eliminate per block; pivots die, free paths survive
        let mut basis_pos: Vec<Option<usize>> = vec![None; paths.len()];
        let mut normal_form: Vec<Combo> = vec![vec![]; paths.len()];
        let mut basis: Vec<usize> = Vec::new();
        // first pass: choose survivors block by block (in block order), so
        // basis order follows global path order within each block
        let mut pivot_data: HashMap<(VertexId, VertexId), (ExactMatrix, Vec<usize>)> =
            HashMap::new();
        for x in 0..nv {
            for y in 0..nv {
                let bp = &block_paths[x][y];
                if bp.is_empty() {
                    continue;
                }
                let (r, pivots) = match ideal_rows.get(&(x, y)) {
                    None => (ExactMatrix::zero(0, bp.len()), vec![]),
                    Some(rows) => ExactMatrix::from_rows(rows.clone()).rref(),
                };
                for (k, &pi) in bp.iter().enumerate() {
                    if !pivots.contains(&k) {
                        basis_pos[pi] = Some(usize::MAX); // placeholder
                        basis.push(pi);
                    }
                }
                pivot_data.insert((x, y), (r, pivots));
            }
        }
        // global basis order: by path order
        basis.sort();
        for (pos, &pi) in basis.iter().enumerate() {
            basis_pos[pi] = Some(pos);
        }
        // second pass: normal forms
        for x in 0..nv {
            for y in 0..nv {
                let bp = &block_paths[x][y];
                if bp.is_empty() {
                    continue;
                }
                let (r, pivots) = &pivot_data[&(x, y)];
                for (row, &pk) in pivots.iter().enumerate() {
                    // pivot path == - sum over free columns of rref entries
                    let mut nf: Combo = Vec::new();
                    for (k, &pi) in bp.iter().enumerate() {
                        if pivots.contains(&k) {
                            continue;
                        }
                        let c = r.at(row, k);
                        if !c.is_zero() {
                            nf.push((-c.clone(), basis_pos[pi].unwrap()));
                        }
                    }
                    normal_form[bp[pk]] = nf;
                }
                for (k, &pi) in bp.iter().enumerate() {
                    if !pivots.contains(&k) {
                        normal_form[pi] = vec![(Rat::one(), basis_pos[pi].unwrap())];
                    }
                }
            }
        }

        let mut block: Vec<Vec<Vec<usize>>> = vec![vec![vec![]; nv]; nv];
        for (pos, &pi) in basis.iter().enumerate() {
            let p = &paths[pi];
            block[p.source][p.target(&quiver)].push(pos);
        }

        Ok(BoundQuiverAlgebra {
            token: NEXT_TOKEN.fetch_add(1, Ordering::Relaxed),
            quiver,
            relations,
            paths,
            path_index,
            basis,
            basis_pos,
            normal_form,
            block,
        })
    }

    /// Path algebra without relations.
    pub fn path_algebra(quiver: Quiver) -> Result<BoundQuiverAlgebra> {
        BoundQuiverAlgebra::new(quiver, vec![])
    }

    /// Identity token distinguishing algebra instances; representations
    /// remember it so cross-algebra operations can be refused.
    pub fn token(&self) -> u64 {
        self.token
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Dimension of the algebra over the rationals.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The surviving basis paths, in (length, lex) order.
    pub fn basis_paths(&self) -> Vec<&Path> {
        self.basis.iter().map(|&i| &self.paths[i]).collect()
    }

    /// Printable names of the basis paths.
    pub fn basis_path_names(&self) -> Vec<String> {
        self.basis_paths()
            .iter()
            .map(|p| self.quiver.path_name(p))
            .collect()
    }

    /// The basis path behind a basis position.
    pub fn basis_path(&self, pos: usize) -> &Path {
        &self.paths[self.basis[pos]]
    }

    /// Basis positions of paths `x ~> y`.
    pub fn basis_block(&self, x: VertexId, y: VertexId) -> &[usize] {
        &self.block[x][y]
    }

    /// Normal form of an enumerated path (by index into the free path
    /// list) as a combination of basis positions.
    fn nf_of_path_index(&self, i: usize) -> &Combo {
        &self.normal_form[i]
    }

    /// Basis position of a free path, when the path survives in the
    /// basis (i.e. is its own normal form).
    pub fn basis_position(&self, p: &Path) -> Option<usize> {
        self.path_index.get(p).and_then(|&i| self.basis_pos[i])
    }

    /// Normal form of a free path.
    pub fn normal_form_of(&self, p: &Path) -> Result<Combo> {
        let i = self
            .path_index
            .get(p)
            .ok_or_else(|| Error::Malformed {
                reason: "path does not belong to this quiver".into(),
            })?;
        Ok(self.normal_form[*i].clone())
    }

    /// Product of two basis elements: concatenation + normal form.
    /// Returns the empty combination when the paths do not compose.
    pub fn mult_basis(&self, a: usize, b: usize) -> Combo {
        let pa = self.basis_path(a);
        let pb = self.basis_path(b);
        match pa.then(pb, &self.quiver) {
            Some(c) => self.nf_of_path_index(self.path_index[&c]).clone(),
            None => vec![],
        }
    }

    /// Product of two combinations of basis elements.
    pub fn mult_combo(&self, a: &[(Rat, usize)], b: &[(Rat, usize)]) -> Combo {
        let mut acc: HashMap<usize, Rat> = HashMap::new();
        for (ca, ia) in a {
            for (cb, ib) in b {
                for (c, i) in self.mult_basis(*ia, *ib) {
                    *acc.entry(i).or_insert_with(Rat::zero) += ca * cb * c;
                }
            }
        }
        let mut out: Combo = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (c, i)).collect();
        out.sort_by_key(|(_, i)| *i);
        out
    }

    /// Right-multiply a basis element by an arrow (as a length-1 path).
    pub fn mult_basis_by_arrow(&self, a: usize, arrow: ArrowId) -> Combo {
        let pa = self.basis_path(a);
        if pa.target(&self.quiver) != self.quiver.arrow(arrow).source {
            return vec![];
        }
        let mut arrows = pa.arrows.clone();
        arrows.push(arrow);
        let c = Path {
            source: pa.source,
            arrows,
        };
        self.nf_of_path_index(self.path_index[&c]).clone()
    }

    /// Left-multiply a basis element by an arrow.
    pub fn mult_arrow_by_basis(&self, arrow: ArrowId, b: usize) -> Combo {
        let pb = self.basis_path(b);
        if self.quiver.arrow(arrow).target != pb.source {
            return vec![];
        }
        let mut arrows = vec![arrow];
        arrows.extend_from_slice(&pb.arrows);
        let c = Path {
            source: self.quiver.arrow(arrow).source,
            arrows,
        };
        self.nf_of_path_index(self.path_index[&c]).clone()
    }

    fn check_vertex(&self, i: VertexId) -> Result<()> {
        if i >= self.quiver.vertex_count() {
            return Err(Error::UnknownVertex {
                vertex: format!("#{i}"),
            });
        }
        Ok(())
    }

    /// The indecomposable projective `P(i)`: spaces spanned by basis paths
    /// `i ~> v`, arrows acting by concatenation followed by normal form.
    pub fn projective(&self, i: VertexId) -> Result<Representation> {
        self.check_vertex(i)?;
        let nv = self.quiver.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|v| self.block[i][v].len()).collect();
        let mut maps = Vec::with_capacity(self.quiver.arrow_count());
        for a in 0..self.quiver.arrow_count() {
            let (u, v) = (self.quiver.arrow(a).source, self.quiver.arrow(a).target);
            let mut m = ExactMatrix::zero(dims[v], dims[u]);
            for (col, &bu) in self.block[i][u].iter().enumerate() {
                for (c, pos) in self.mult_basis_by_arrow(bu, a) {
                    let row = self.block[i][v]
                        .iter()
                        .position(|&x| x == pos)
                        .expect("product lands in the i ~> v block");
                    m.set(row, col, c);
                }
            }
            maps.push(m);
        }
        Representation::new_unchecked(self.token, dims, maps)
    }

    /// The indecomposable injective `I(i)`: the vector-space dual of the
    /// `v ~> i` path spaces. The space at `v` is indexed by basis paths
    /// `v ~> i`, and the arrow `a: u -> v` acts by the transpose of
    /// left-concatenation `q |-> a*q` (a map from the `v ~> i` block to
    /// the `u ~> i` block).
    pub fn injective(&self, i: VertexId) -> Result<Representation> {
        self.check_vertex(i)?;
        let nv = self.quiver.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|v| self.block[v][i].len()).collect();
        let mut maps = Vec::with_capacity(self.quiver.arrow_count());
        for a in 0..self.quiver.arrow_count() {
            let (u, v) = (self.quiver.arrow(a).source, self.quiver.arrow(a).target);
            // h: span(v ~> i) -> span(u ~> i), q |-> a*q; the arrow acts as h^T
            let mut h = ExactMatrix::zero(dims[u], dims[v]);
            for (col, &bv) in self.block[v][i].iter().enumerate() {
                for (c, pos) in self.mult_arrow_by_basis(a, bv) {
                    let row = self.block[u][i]
                        .iter()
                        .position(|&x| x == pos)
                        .expect("product lands in the u ~> i block");
                    h.set(row, col, c);
                }
            }
            maps.push(h.transpose());
        }
        Representation::new_unchecked(self.token, dims, maps)
    }

    /// The simple module at vertex `i`.
    pub fn simple(&self, i: VertexId) -> Result<Representation> {
        self.check_vertex(i)?;
        let nv = self.quiver.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|v| usize::from(v == i)).collect();
        let maps = (0..self.quiver.arrow_count())
            .map(|a| {
                let (u, v) = (self.quiver.arrow(a).source, self.quiver.arrow(a).target);
                ExactMatrix::zero(dims[v], dims[u])
            })
            .collect();
        Representation::new_unchecked(self.token, dims, maps)
    }

    /// Detect whether this is the path algebra of a linearly oriented
    /// type-A quiver as produced by [`crate::quiver::linear_an`]:
    /// vertices labeled `"1".."n"`, one arrow `k+1 -> k` for each `k`,
    /// and no relations. Returns `n` on success.
    pub fn linear_an_size(&self) -> Option<usize> {
        if !self.relations.is_empty() {
            return None;
        }
        let n = self.quiver.vertex_count();
        if n == 0 || self.quiver.arrow_count() != n - 1 {
            return None;
        }
        for i in 1..=n {
            if self.quiver.vertex_by_label(&i.to_string()).ok()? != i - 1 {
                return None;
            }
        }
        for k in 1..n {
            // need exactly one arrow (k+1) -> k
            let found = self
                .quiver
                .arrows()
                .iter()
                .filter(|a| a.source == k && a.target == k - 1)
                .count();
            if found != 1 {
                return None;
            }
        }
        Some(n)
    }

    /// The interval module of a linearly oriented type-A algebra: dimension
    /// one on vertices `b..=a` (1-based labels), identity on the arrows
    /// inside the interval. Its composition series reads `a/a-1/.../b`.
    pub fn interval_module(&self, b: usize, a: usize) -> Result<Representation> {
        let n = self.linear_an_size().ok_or_else(|| Error::Malformed {
            reason: "interval modules need the linearly oriented type-A algebra".into(),
        })?;
        if !(1 <= b && b <= a && a <= n) {
            return Err(Error::Malformed {
                reason: format!("interval [{b}, {a}] out of range 1..={n}"),
            });
        }
        let dims: Vec<usize> = (0..n).map(|v| usize::from(b - 1 <= v && v < a)).collect();
        let maps = (0..self.quiver.arrow_count())
            .map(|arr| {
                let (u, v) = (
                    self.quiver.arrow(arr).source,
                    self.quiver.arrow(arr).target,
                );
                if dims[u] == 1 && dims[v] == 1 {
                    ExactMatrix::identity(1)
                } else {
                    ExactMatrix::zero(dims[v], dims[u])
                }
            })
            .collect();
        Representation::new_unchecked(self.token, dims, maps)
    }

    /// Parse a composition-series name like `"3/2/1"` into the matching
    /// interval module. Only valid for the linearly oriented type-A
    /// algebra.
    pub fn module_by_name(&self, name: &str) -> Result<Representation> {
        let parts: Vec<usize> = name
            .split('/')
            .map(|s| {
                s.trim().parse::<usize>().map_err(|_| Error::Malformed {
                    reason: format!("bad module name `{name}`"),
                })
            })
            .collect::<Result<_>>()?;
        if parts.is_empty() {
            return Err(Error::Malformed {
                reason: "empty module name".into(),
            });
        }
        for w in parts.windows(2) {
            if w[0] != w[1] + 1 {
                return Err(Error::Malformed {
                    reason: format!("module name `{name}` is not a descending interval"),
                });
            }
        }
        let a = parts[0];
        let b = *parts.last().unwrap();
        self.interval_module(b, a)
    }

    /// Composition-series name of a representation, when it is literally
    /// an interval module of the linear type-A algebra (dimension vector
    /// an interval of ones with nonzero interior arrow maps). Other
    /// representations get their dimension vector as a fallback.
    pub fn module_name(&self, rep: &Representation) -> String {
        if self.linear_an_size().is_some() {
            if let Some((b, a)) = self.interval_shape(rep) {
                return (b..=a).rev().map(|k| k.to_string()).collect::<Vec<_>>().join("/");
            }
        }
        format!(
            "({})",
            rep.dims()
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }

    fn interval_shape(&self, rep: &Representation) -> Option<(usize, usize)> {
        let dims = rep.dims();
        let support: Vec<usize> = (0..dims.len()).filter(|&v| dims[v] > 0).collect();
        if support.is_empty() || support.iter().any(|&v| dims[v] != 1) {
            return None;
        }
        let b = support[0] + 1;
        let a = *support.last().unwrap() + 1;
        if support.len() != a - b + 1 {
            return None; // not contiguous
        }
        // interior arrows must act by a nonzero scalar
        for arr in self.quiver.arrows() {
            let (u, v) = (arr.source, arr.target);
            if dims[u] == 1 && dims[v] == 1 {
                let m = &rep.maps()[self
                    .quiver
                    .arrows()
                    .iter()
                    .position(|x| x.name == arr.name)
                    .unwrap()];
                if m.at(0, 0).is_zero() {
                    return None;
                }
            }
        }
        Some((b, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::quiver::linear_an;

    fn rel(q: &Quiver, terms: &[(i64, &[&str])]) -> Relation {
        Relation {
            terms: terms
                .iter()
                .map(|(c, names)| {
                    let arrows: Vec<ArrowId> =
                        names.iter().map(|n| q.arrow_by_name(n).unwrap()).collect();
                    let source = q.arrow(arrows[0]).source;
                    (rat(*c), Path { source, arrows })
                })
                .collect(),
        }
    }

    #[test]
    fn linear_a3_path_algebra_has_dimension_six() {
        let alg = BoundQuiverAlgebra::path_algebra(linear_an(3)).unwrap();
        assert_eq!(alg.dim(), 6);
        // P-dimension bookkeeping: sum of dim P(i) equals dim A
        let total: usize = (0..3)
            .map(|i| alg.projective(i).unwrap().total_dim())
            .sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn killing_the_long_path_drops_dimension_to_five() {
        let q = linear_an(3);
        let r = rel(&q, &[(1, &["a32", "a21"])]);
        let alg = BoundQuiverAlgebra::new(q, vec![r]).unwrap();
        assert_eq!(alg.dim(), 5);
        let names = alg.basis_path_names();
        assert!(!names.contains(&"a32*a21".to_string()));
    }

    #[test]
    fn empty_quiver_gives_the_zero_algebra() {
        let alg = BoundQuiverAlgebra::path_algebra(Quiver::new()).unwrap();
        assert_eq!(alg.dim(), 0);
    }

    #[test]
    fn length_one_relation_is_inadmissible() {
        let q = linear_an(2);
        let a = q.arrow_by_name("a21").unwrap();
        let r = Relation {
            terms: vec![(
                rat(1),
                Path {
                    source: q.arrow(a).source,
                    arrows: vec![a],
                },
            )],
        };
        match BoundQuiverAlgebra::new(q, vec![r]) {
            Err(Error::InadmissibleRelation { .. }) => {}
            other => panic!("expected inadmissible-relation, got {other:?}"),
        }
    }

    #[test]
    fn non_parallel_relation_is_inadmissible() {
        // commutative-square quiver without the square: 4 -> 2 -> 1, 4 -> 3 -> 1
        let mut q = Quiver::new();
        for l in ["1", "2", "3", "4"] {
            q.add_vertex(l).unwrap();
        }
        q.add_arrow("b", 3, 1).unwrap();
        q.add_arrow("c", 1, 0).unwrap();
        q.add_arrow("d", 3, 2).unwrap();
        q.add_arrow("e", 2, 0).unwrap();
        // b*c and d alone are not parallel (different lengths is fine, but
        // d has target 3 != 1): construct b*c - d*? no, take b*c vs d*e but
        // with mismatched sources: use c (too short) in one term instead
        let bad = Relation {
            terms: vec![
                (
                    rat(1),
                    Path {
                        source: 3,
                        arrows: vec![0, 1],
                    },
                ),
                (
                    rat(-1),
                    Path {
                        source: 3,
                        arrows: vec![2],
                    },
                ),
            ],
        };
        assert!(matches!(
            BoundQuiverAlgebra::new(q, vec![bad]),
            Err(Error::InadmissibleRelation { .. })
        ));
    }

    #[test]
    fn commutativity_relation_identifies_the_two_square_paths() {
        let mut q = Quiver::new();
        for l in ["1", "2", "3", "4"] {
            q.add_vertex(l).unwrap();
        }
        q.add_arrow("b", 3, 1).unwrap(); // 4 -> 2
        q.add_arrow("c", 1, 0).unwrap(); // 2 -> 1
        q.add_arrow("d", 3, 2).unwrap(); // 4 -> 3
        q.add_arrow("e", 2, 0).unwrap(); // 3 -> 1
        let r = rel(&q, &[(1, &["b", "c"]), (-1, &["d", "e"])]);
        let alg = BoundQuiverAlgebra::new(q, vec![r]).unwrap();
        // free algebra: 4 lazy + 4 arrows + 2 long = 10; one identification
        assert_eq!(alg.dim(), 9);
        // the two long paths now have equal normal forms
        let bc = Path {
            source: 3,
            arrows: vec![0, 1],
        };
        let de = Path {
            source: 3,
            arrows: vec![2, 3],
        };
        assert_eq!(
            alg.normal_form_of(&bc).unwrap(),
            alg.normal_form_of(&de).unwrap()
        );
    }

    #[test]
    fn projective_dimension_vectors_match_hand_enumeration() {
        let alg = BoundQuiverAlgebra::path_algebra(linear_an(3)).unwrap();
        // with arrows 3 -> 2 -> 1: P(1) = S(1), P(2) = 2/1, P(3) = 3/2/1
        assert_eq!(alg.projective(0).unwrap().dims(), &[1, 0, 0]);
        assert_eq!(alg.projective(1).unwrap().dims(), &[1, 1, 0]);
        assert_eq!(alg.projective(2).unwrap().dims(), &[1, 1, 1]);
    }

    #[test]
    fn injective_dimension_vectors_match_hand_enumeration() {
        let alg = BoundQuiverAlgebra::path_algebra(linear_an(3)).unwrap();
        // I(1) = 3/2/1, I(2) = 3/2, I(3) = S(3)
        assert_eq!(alg.injective(0).unwrap().dims(), &[1, 1, 1]);
        assert_eq!(alg.injective(1).unwrap().dims(), &[0, 1, 1]);
        assert_eq!(alg.injective(2).unwrap().dims(), &[0, 0, 1]);
    }

    #[test]
    fn representations_satisfy_relations_by_construction() {
        let q = linear_an(3);
        let r = rel(&q, &[(1, &["a32", "a21"])]);
        let alg = BoundQuiverAlgebra::new(q, vec![r]).unwrap();
        for i in 0..3 {
            let p = alg.projective(i).unwrap();
            p.validate(&alg).unwrap();
            let inj = alg.injective(i).unwrap();
            inj.validate(&alg).unwrap();
        }
        // with the relation, P(3) loses its socle layer
        assert_eq!(alg.projective(2).unwrap().dims(), &[0, 1, 1]);
        assert_eq!(alg.injective(0).unwrap().dims(), &[1, 1, 0]);
    }

    #[test]
    fn interval_modules_and_names_roundtrip() {
        let alg = BoundQuiverAlgebra::path_algebra(linear_an(4)).unwrap();
        let m = alg.module_by_name("3/2").unwrap();
        assert_eq!(m.dims(), &[0, 1, 1, 0]);
        assert_eq!(alg.module_name(&m), "3/2");
        assert_eq!(alg.module_name(&alg.simple(3).unwrap()), "4");
        assert!(alg.module_by_name("3/1").is_err());
    }

    #[test]
    fn multiplication_respects_normal_forms() {
        let q = linear_an(3);
        let r = rel(&q, &[(1, &["a32", "a21"])]);
        let alg = BoundQuiverAlgebra::new(q, vec![r]).unwrap();
        // find basis positions of the two arrows
        let names = alg.basis_path_names();
        let a32 = names.iter().position(|n| n == "a32").unwrap();
        let a21 = names.iter().position(|n| n == "a21").unwrap();
        assert!(alg.mult_basis(a32, a21).is_empty()); // killed by the relation
        let e3 = names.iter().position(|n| n == "e_3").unwrap();
        assert_eq!(alg.mult_basis(e3, a32), vec![(rat(1), a32)]);
    }
}
