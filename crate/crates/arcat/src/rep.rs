//! Representations of a bound quiver algebra and their morphisms.
//!
//! A representation assigns a rational vector space to each vertex and a
//! matrix to each arrow `a: u -> v`, of shape `dims[v] x dims[u]` (columns
//! index the source space). Modules over the algebra *are* these
//! representations; the relations must evaluate to zero, which
//! [`Representation::validate`] checks and every constructor in the crate
//! guarantees.
//!
//! A morphism is a vertex-indexed family of matrices commuting with the
//! arrow actions. The whole hom space is computed in one exact kernel
//! computation: the commuting-square conditions are assembled into a
//! single linear system over all matrix entries and
//! [`crate::linalg::ExactMatrix::kernel_basis`] does the rest.

use num_traits::{One, Zero};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Rat};
use crate::quiver::Path;

/// A finite-dimensional representation (= module). Carries the identity
/// token of the algebra it was built over so cross-algebra mixups are
/// caught at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    token: u64,
    dims: Vec<usize>,
    maps: Vec<ExactMatrix>,
}

impl Representation {
    /// Build and fully validate (shapes and relations).
    pub fn new(
        alg: &BoundQuiverAlgebra,
        dims: Vec<usize>,
        maps: Vec<ExactMatrix>,
    ) -> Result<Representation> {
        let rep = Representation::new_unchecked(alg.token(), dims, maps)?;
        rep.validate(alg)?;
        Ok(rep)
    }

    /// Shape-check only; used by constructors that guarantee the
    /// relations structurally (projectives, injectives, kernels, ...).
    pub(crate) fn new_unchecked(
        token: u64,
        dims: Vec<usize>,
        maps: Vec<ExactMatrix>,
    ) -> Result<Representation> {
        Ok(Representation { token, dims, maps })
    }

    /// The zero representation over an algebra.
    pub fn zero(alg: &BoundQuiverAlgebra) -> Representation {
        let nv = alg.quiver().vertex_count();
        let na = alg.quiver().arrow_count();
        Representation {
            token: alg.token(),
            dims: vec![0; nv],
            maps: (0..na).map(|_| ExactMatrix::zero(0, 0)).collect(),
        }
    }

    pub fn token(&self) -> u64 {
        self.token
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[ExactMatrix] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Check shapes, token, and that every relation evaluates to zero.
    pub fn validate(&self, alg: &BoundQuiverAlgebra) -> Result<()> {
        if self.token != alg.token() {
            return Err(Error::AlgebraMismatch);
        }
        let q = alg.quiver();
        if self.dims.len() != q.vertex_count() || self.maps.len() != q.arrow_count() {
            return Err(Error::Mismatch {
                reason: "vertex/arrow count mismatch".into(),
            });
        }
        for (a, m) in self.maps.iter().enumerate() {
            let (u, v) = (q.arrow(a).source, q.arrow(a).target);
            if m.rows() != self.dims[v] || m.cols() != self.dims[u] {
                return Err(Error::Mismatch {
                    reason: format!(
                        "arrow `{}` matrix is {}x{}, expected {}x{}",
                        q.arrow(a).name,
                        m.rows(),
                        m.cols(),
                        self.dims[v],
                        self.dims[u]
                    ),
                });
            }
        }
        for (k, rel) in alg.relations().iter().enumerate() {
            let (s, t) = {
                let p = &rel.terms[0].1;
                (p.source, p.target(q))
            };
            let mut acc = ExactMatrix::zero(self.dims[t], self.dims[s]);
            for (c, p) in &rel.terms {
                acc = acc.add(&self.path_action(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidRepresentation {
                    reason: format!("relation #{k} does not vanish"),
                });
            }
        }
        Ok(())
    }

    /// The matrix by which a free path acts: the ordered product of its
    /// arrow matrices (first arrow applied first).
    pub fn path_action(&self, p: &Path) -> ExactMatrix {
        let mut acc = ExactMatrix::identity(self.dims[p.source]);
        for &a in &p.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// Direct sum, with the four canonical structure morphisms:
    /// `(sum, incl_left, incl_right, proj_left, proj_right)`.
    pub fn direct_sum(&self, other: &Representation) -> DirectSum {
        assert_eq!(self.token, other.token, "direct sum across algebras");
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps: Vec<ExactMatrix> = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        let sum = Representation {
            token: self.token,
            dims,
            maps,
        };
        let mut il = Vec::new();
        let mut ir = Vec::new();
        let mut pl = Vec::new();
        let mut pr = Vec::new();
        for v in 0..self.dims.len() {
            let (a, b) = (self.dims[v], other.dims[v]);
            let mut i_l = ExactMatrix::zero(a + b, a);
            let mut i_r = ExactMatrix::zero(a + b, b);
            let mut p_l = ExactMatrix::zero(a, a + b);
            let mut p_r = ExactMatrix::zero(b, a + b);
            for k in 0..a {
                i_l.set(k, k, Rat::one());
                p_l.set(k, k, Rat::one());
            }
            for k in 0..b {
                i_r.set(a + k, k, Rat::one());
                p_r.set(k, a + k, Rat::one());
            }
            il.push(i_l);
            ir.push(i_r);
            pl.push(p_l);
            pr.push(p_r);
        }
        DirectSum {
            sum,
            incl_left: RepMorphism { maps: il },
            incl_right: RepMorphism { maps: ir },
            proj_left: RepMorphism { maps: pl },
            proj_right: RepMorphism { maps: pr },
        }
    }

}

/// Direct sum plus its structure maps.
pub struct DirectSum {
    pub sum: Representation,
    pub incl_left: RepMorphism,
    pub incl_right: RepMorphism,
    pub proj_left: RepMorphism,
    pub proj_right: RepMorphism,
}

/// A morphism of representations: one matrix per vertex, shape
/// `dims_target[v] x dims_source[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMorphism {
    pub maps: Vec<ExactMatrix>,
}

impl RepMorphism {
    pub fn zero(from: &Representation, to: &Representation) -> RepMorphism {
        RepMorphism {
            maps: from
                .dims
                .iter()
                .zip(&to.dims)
                .map(|(&m, &n)| ExactMatrix::zero(n, m))
                .collect(),
        }
    }

    pub fn identity(of: &Representation) -> RepMorphism {
        RepMorphism {
            maps: of.dims.iter().map(|&d| ExactMatrix::identity(d)).collect(),
        }
    }

    /// `self: M -> N` composed with `then: N -> P`, yielding `M -> P`.
    pub fn then(&self, then: &RepMorphism) -> RepMorphism {
        RepMorphism {
            maps: self
                .maps
                .iter()
                .zip(&then.maps)
                .map(|(f, g)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> RepMorphism {
        RepMorphism {
            maps: self.maps.iter().map(|m| m.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }

    /// Verify this is a genuine morphism `from -> to`: shapes match and
    /// every arrow square commutes.
    pub fn check(
        &self,
        alg: &BoundQuiverAlgebra,
        from: &Representation,
        to: &Representation,
    ) -> Result<()> {
        if from.token != alg.token() || to.token != alg.token() {
            return Err(Error::AlgebraMismatch);
        }
        let q = alg.quiver();
        if self.maps.len() != q.vertex_count() {
            return Err(Error::Mismatch {
                reason: "morphism has wrong number of vertex maps".into(),
            });
        }
        for v in 0..q.vertex_count() {
            if self.maps[v].rows() != to.dims[v] || self.maps[v].cols() != from.dims[v] {
                return Err(Error::Mismatch {
                    reason: format!("vertex {v} map has wrong shape"),
                });
            }
        }
        for a in 0..q.arrow_count() {
            let (u, v) = (q.arrow(a).source, q.arrow(a).target);
            let lhs = self.maps[v].mul(&from.maps[a]);
            let rhs = to.maps[a].mul(&self.maps[u]);
            if lhs != rhs {
                return Err(Error::Mismatch {
                    reason: format!("square for arrow `{}` does not commute", q.arrow(a).name),
                });
            }
        }
        Ok(())
    }

    /// Flatten to one coordinate vector (vertices in order, row-major).
    pub fn flatten(&self) -> Vec<Rat> {
        self.maps.iter().flat_map(|m| m.flatten()).collect()
    }
}

/// Compute a basis of `Hom(M, N)` by solving all commuting-square
/// constraints at once. The basis order is deterministic: it is read off
/// the rref-based kernel of the constraint matrix.
pub fn hom_basis(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
    n: &Representation,
) -> Result<Vec<RepMorphism>> {
    if m.token != alg.token() || n.token != alg.token() {
        return Err(Error::AlgebraMismatch);
    }
    let q = alg.quiver();
    let nv = q.vertex_count();
    // unknowns: entries of f_v (n.dims[v] x m.dims[v]), row-major,
    // vertices in order
    let offsets: Vec<usize> = {
        let mut off = vec![0usize; nv + 1];
        for v in 0..nv {
            off[v + 1] = off[v] + n.dims[v] * m.dims[v];
        }
        off
    };
    let total = offsets[nv];
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for a in 0..q.arrow_count() {
        let (u, v) = (q.arrow(a).source, q.arrow(a).target);
        // constraint: f_v * M_a - N_a * f_u = 0, one row per entry (r, c)
        for r in 0..n.dims[v] {
            for c in 0..m.dims[u] {
                let mut row = vec![Rat::zero(); total];
                // d/d f_v[r, k] -> M_a[k, c]
                for k in 0..m.dims[v] {
                    let coeff = m.maps[a].at(k, c);
                    if !coeff.is_zero() {
                        row[offsets[v] + r * m.dims[v] + k] += coeff;
                    }
                }
                // d/d f_u[k, c] -> -N_a[r, k]
                for k in 0..n.dims[u] {
                    let coeff = n.maps[a].at(r, k);
                    if !coeff.is_zero() {
                        row[offsets[u] + k * m.dims[u] + c] -= coeff;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let constraint = if rows.is_empty() {
        ExactMatrix::zero(0, total)
    } else {
        ExactMatrix::from_rows(rows)
    };
    let kernel = constraint.kernel_basis();
    let mut basis = Vec::with_capacity(kernel.len());
    for vec in kernel {
        let mut maps = Vec::with_capacity(nv);
        for v in 0..nv {
            let slice = vec[offsets[v]..offsets[v] + n.dims[v] * m.dims[v]].to_vec();
            maps.push(ExactMatrix::from_flat(n.dims[v], m.dims[v], slice));
        }
        basis.push(RepMorphism { maps });
    }
    Ok(basis)
}

/// Dimension of `Hom(M, N)`.
pub fn hom_dim(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_basis(alg, m, n)?.len())
}

/// Coordinates of `f` relative to a hom basis, or `None` when `f` is not
/// in the span (which signals a logic error in callers).
pub fn morphism_coords(basis: &[RepMorphism], f: &RepMorphism) -> Option<Vec<Rat>> {
    let fvec = f.flatten();
    if basis.is_empty() {
        return if fvec.iter().all(|x| x.is_zero()) {
            Some(vec![])
        } else {
            None
        };
    }
    let dim = fvec.len();
    let cols: Vec<Vec<Rat>> = basis.iter().map(|b| b.flatten()).collect();
    ExactMatrix::from_columns(dim, &cols).solve(&fvec)
}

/// Linear combination of hom-basis elements.
pub fn combo_morphism(basis: &[RepMorphism], coords: &[Rat]) -> RepMorphism {
    assert_eq!(basis.len(), coords.len(), "coordinate length mismatch");
    assert!(!basis.is_empty(), "cannot combine an empty basis");
    let mut acc = RepMorphism {
        maps: basis[0]
            .maps
            .iter()
            .map(|m| ExactMatrix::zero(m.rows(), m.cols()))
            .collect(),
    };
    for (b, c) in basis.iter().zip(coords) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

/// Kernel of a morphism `f: M -> N` as a subrepresentation with its
/// inclusion. Arrow actions are induced by solving against the inclusion
/// columns (which have full column rank by construction).
pub fn kernel(
    alg: &BoundQuiverAlgebra,
    f: &RepMorphism,
    m: &Representation,
    _n: &Representation,
) -> (Representation, RepMorphism) {
    let q = alg.quiver();
    let nv = q.vertex_count();
    let mut inc = Vec::with_capacity(nv);
    let mut dims = Vec::with_capacity(nv);
    for v in 0..nv {
        let basis = f.maps[v].kernel_basis();
        dims.push(basis.len());
        inc.push(ExactMatrix::from_columns(m.dims[v], &basis));
    }
    let mut maps = Vec::with_capacity(q.arrow_count());
    for a in 0..q.arrow_count() {
        let (u, v) = (q.arrow(a).source, q.arrow(a).target);
        let rhs = m.maps[a].mul(&inc[u]);
        let sol = inc[v]
            .solve_matrix(&rhs)
            .expect("arrow action preserves the kernel");
        maps.push(sol);
    }
    (
        Representation {
            token: m.token,
            dims,
            maps,
        },
        RepMorphism { maps: inc },
    )
}

/// Cokernel of `f: M -> N` with its projection `N -> C`. At each vertex
/// the image columns are completed to a basis by standard vectors; the
/// quotient coordinates are the complement block of the inverse base
/// change.
pub fn cokernel(
    alg: &BoundQuiverAlgebra,
    f: &RepMorphism,
    _m: &Representation,
    n: &Representation,
) -> (Representation, RepMorphism) {
    let q = alg.quiver();
    let nv = q.vertex_count();
    let mut proj = Vec::with_capacity(nv);
    let mut sect = Vec::with_capacity(nv);
    let mut dims = Vec::with_capacity(nv);
    for v in 0..nv {
        let ndim = n.dims[v];
        // image basis: pivot columns of f_v
        let (_, col_pivots) = f.maps[v].rref();
        let mut cols: Vec<Vec<Rat>> = col_pivots
            .iter()
            .map(|&c| f.maps[v].column(c))
            .collect();
        let rank = cols.len();
        // complete with standard basis vectors
        let mut chosen_std = Vec::new();
        for k in 0..ndim {
            if cols.len() == ndim {
                break;
            }
            let mut e = vec![Rat::zero(); ndim];
            e[k] = Rat::one();
            let mut trial = cols.clone();
            trial.push(e.clone());
            if crate::linalg::span_rank(ndim, &trial) == cols.len() + 1 {
                cols.push(e);
                chosen_std.push(k);
            }
        }
        let t = ExactMatrix::from_columns(ndim, &cols);
        let tinv = if ndim == 0 {
            ExactMatrix::zero(0, 0)
        } else {
            t.inverse().expect("completed to a basis")
        };
        let cdim = ndim - rank;
        dims.push(cdim);
        // projection: bottom cdim rows of T^{-1}
        proj.push(tinv.block(rank, 0, cdim, ndim));
        // section: the chosen standard vectors as columns
        let mut s = ExactMatrix::zero(ndim, cdim);
        for (j, &k) in chosen_std.iter().enumerate() {
            s.set(k, j, Rat::one());
        }
        sect.push(s);
    }
    let mut maps = Vec::with_capacity(q.arrow_count());
    for a in 0..q.arrow_count() {
        let (u, v) = (q.arrow(a).source, q.arrow(a).target);
        maps.push(proj[v].mul(&n.maps[a]).mul(&sect[u]));
    }
    (
        Representation {
            token: n.token,
            dims,
            maps,
        },
        RepMorphism { maps: proj },
    )
}

/// Image of `f: M -> N`: the subrepresentation `(Im, incl: Im -> N,
/// proj: M -> Im)` with `incl . proj = f`.
pub fn image(
    alg: &BoundQuiverAlgebra,
    f: &RepMorphism,
    _m: &Representation,
    n: &Representation,
) -> (Representation, RepMorphism, RepMorphism) {
    let q = alg.quiver();
    let nv = q.vertex_count();
    let mut inc = Vec::with_capacity(nv);
    let mut prj = Vec::with_capacity(nv);
    let mut dims = Vec::with_capacity(nv);
    for v in 0..nv {
        let (_, col_pivots) = f.maps[v].rref();
        let cols: Vec<Vec<Rat>> = col_pivots.iter().map(|&c| f.maps[v].column(c)).collect();
        let i = ExactMatrix::from_columns(n.dims[v], &cols);
        let p = i
            .solve_matrix(&f.maps[v])
            .expect("f factors through its image");
        dims.push(cols.len());
        inc.push(i);
        prj.push(p);
    }
    let mut maps = Vec::with_capacity(q.arrow_count());
    for a in 0..q.arrow_count() {
        let (u, v) = (q.arrow(a).source, q.arrow(a).target);
        let rhs = n.maps[a].mul(&inc[u]);
        maps.push(
            inc[v]
                .solve_matrix(&rhs)
                .expect("arrow action preserves the image"),
        );
    }
    (
        Representation {
            token: n.token,
            dims,
            maps,
        },
        RepMorphism { maps: inc },
        RepMorphism { maps: prj },
    )
}

/// Conjugate a representation by invertible base-change matrices, one per
/// vertex; returns the twin representation and the isomorphism onto it.
pub fn change_basis(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
    t: &[ExactMatrix],
) -> (Representation, RepMorphism) {
    let q = alg.quiver();
    assert_eq!(t.len(), q.vertex_count());
    let tinv: Vec<ExactMatrix> = t
        .iter()
        .map(|x| x.inverse().expect("base change must be invertible"))
        .collect();
    let maps = (0..q.arrow_count())
        .map(|a| {
            let (u, v) = (q.arrow(a).source, q.arrow(a).target);
            t[v].mul(&m.maps[a]).mul(&tinv[u])
        })
        .collect();
    (
        Representation {
            token: m.token,
            dims: m.dims.clone(),
            maps,
        },
        RepMorphism { maps: t.to_vec() },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BoundQuiverAlgebra;
    use crate::linalg::rat;
    use crate::quiver::linear_an;

    fn ka3() -> BoundQuiverAlgebra {
        BoundQuiverAlgebra::path_algebra(linear_an(3)).unwrap()
    }

    /// Deterministic generator of valid representations of a hereditary
    /// algebra (no relations to satisfy, any matrices are valid).
    struct Lcg(u64);
    impl Lcg {
        fn next(&mut self) -> u64 {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            self.0 >> 33
        }
        fn small(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next() % ((hi - lo + 1) as u64)) as i64
        }
    }

    fn random_rep(alg: &BoundQuiverAlgebra, rng: &mut Lcg, max_dim: usize) -> Representation {
        let q = alg.quiver();
        let dims: Vec<usize> = (0..q.vertex_count())
            .map(|_| rng.small(0, max_dim as i64) as usize)
            .collect();
        let maps = (0..q.arrow_count())
            .map(|a| {
                let (u, v) = (q.arrow(a).source, q.arrow(a).target);
                let mut m = ExactMatrix::zero(dims[v], dims[u]);
                for r in 0..dims[v] {
                    for c in 0..dims[u] {
                        m.set(r, c, rat(rng.small(-2, 2)));
                    }
                }
                m
            })
            .collect();
        Representation::new(alg, dims, maps).unwrap()
    }

    #[test]
    fn hom_of_m_with_itself_contains_identity() {
        let alg = ka3();
        let m = alg.projective(1).unwrap();
        let basis = hom_basis(&alg, &m, &m).unwrap();
        let id = RepMorphism::identity(&m);
        assert!(morphism_coords(&basis, &id).is_some());
    }

    #[test]
    fn hom_from_projective_counts_the_vertex_dimension() {
        // dim Hom(P(i), M) = dim M_i, checked against the generic
        // constraint solver on twenty deterministic pseudo-random modules
        let alg = ka3();
        let mut rng = Lcg(42);
        for _ in 0..20 {
            let m = random_rep(&alg, &mut rng, 3);
            for i in 0..3 {
                let p = alg.projective(i).unwrap();
                assert_eq!(
                    hom_dim(&alg, &p, &m).unwrap(),
                    m.dims()[i],
                    "P({i}) against {:?}",
                    m.dims()
                );
            }
        }
    }

    #[test]
    fn hom_between_disjoint_simples_vanishes() {
        let alg = ka3();
        let s1 = alg.simple(0).unwrap();
        let s2 = alg.simple(1).unwrap();
        assert_eq!(hom_dim(&alg, &s2, &s1).unwrap(), 0);
        assert_eq!(hom_dim(&alg, &s1, &s2).unwrap(), 0);
    }

    #[test]
    fn hom_basis_elements_are_genuine_morphisms() {
        let alg = ka3();
        let mut rng = Lcg(7);
        for _ in 0..10 {
            let m = random_rep(&alg, &mut rng, 2);
            let n = random_rep(&alg, &mut rng, 2);
            for f in hom_basis(&alg, &m, &n).unwrap() {
                f.check(&alg, &m, &n).unwrap();
            }
        }
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let alg = ka3();
        let m = alg.projective(2).unwrap();
        let (k, _) = kernel(&alg, &RepMorphism::identity(&m), &m, &m);
        assert!(k.is_zero());
    }

    #[test]
    fn kernel_of_projective_quotient_is_the_radical_layer() {
        // P(2) -> S(2) has kernel S(1) over kA3
        let alg = ka3();
        let p2 = alg.projective(1).unwrap();
        let s2 = alg.simple(1).unwrap();
        let basis = hom_basis(&alg, &p2, &s2).unwrap();
        assert_eq!(basis.len(), 1);
        let (k, inc) = kernel(&alg, &basis[0], &p2, &s2);
        assert_eq!(k.dims(), &[1, 0, 0]);
        inc.check(&alg, &k, &p2).unwrap();
    }

    #[test]
    fn cokernel_of_zero_map_is_the_target() {
        let alg = ka3();
        let m = alg.simple(0).unwrap();
        let n = alg.projective(2).unwrap();
        let (c, proj) = cokernel(&alg, &RepMorphism::zero(&m, &n), &m, &n);
        assert_eq!(c.dims(), n.dims());
        proj.check(&alg, &n, &c).unwrap();
        assert!(proj.is_isomorphism());
    }

    #[test]
    fn rank_nullity_per_vertex_on_random_morphisms() {
        let alg = ka3();
        let mut rng = Lcg(99);
        for _ in 0..10 {
            let m = random_rep(&alg, &mut rng, 3);
            let n = random_rep(&alg, &mut rng, 3);
            for f in hom_basis(&alg, &m, &n).unwrap() {
                let (k, _) = kernel(&alg, &f, &m, &n);
                let (im, inc, prj) = image(&alg, &f, &m, &n);
                let (c, _) = cokernel(&alg, &f, &m, &n);
                for v in 0..3 {
                    assert_eq!(k.dims()[v] + im.dims()[v], m.dims()[v]);
                    assert_eq!(im.dims()[v] + c.dims()[v], n.dims()[v]);
                }
                // incl . proj = f
                assert_eq!(prj.then(&inc), f);
            }
        }
    }

    #[test]
    fn direct_sum_structure_maps_behave() {
        let alg = ka3();
        let m = alg.projective(1).unwrap();
        let n = alg.simple(2).unwrap();
        let ds = m.direct_sum(&n);
        ds.incl_left.check(&alg, &m, &ds.sum).unwrap();
        ds.proj_right.check(&alg, &ds.sum, &n).unwrap();
        // proj_left . incl_left = id, proj_left . incl_right = 0
        assert_eq!(ds.incl_left.then(&ds.proj_left), RepMorphism::identity(&m));
        assert!(ds.incl_right.then(&ds.proj_left).is_zero());
        // incl_left.proj_left + incl_right.proj_right = id on the sum
        let idsum = ds
            .proj_left
            .then(&ds.incl_left)
            .add(&ds.proj_right.then(&ds.incl_right));
        assert_eq!(idsum, RepMorphism::identity(&ds.sum));
    }

    #[test]
    fn cross_algebra_operations_are_refused() {
        let alg1 = ka3();
        let alg2 = ka3();
        let m = alg1.projective(0).unwrap();
        let n = alg2.projective(0).unwrap();
        assert!(matches!(
            hom_basis(&alg1, &m, &n),
            Err(Error::AlgebraMismatch)
        ));
    }

    #[test]
    fn change_basis_produces_an_isomorphic_twin() {
        let alg = ka3();
        let m = alg.projective(2).unwrap();
        let t: Vec<ExactMatrix> = m
            .dims()
            .iter()
            .map(|&d| {
                // unipotent upper-triangular twist
                let mut x = ExactMatrix::identity(d);
                if d >= 2 {
                    x.set(0, 1, rat(3));
                }
                x
            })
            .collect();
        let (m2, iso) = change_basis(&alg, &m, &t);
        m2.validate(&alg).unwrap();
        iso.check(&alg, &m, &m2).unwrap();
        assert!(iso.is_isomorphism());
    }
}
