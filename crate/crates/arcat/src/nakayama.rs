//! The Nakayama functor and its inverse, computed on canonical
//! projectives and injectives.
//!
//! On objects the functor just swaps `P(v)` for `I(v)` summandwise. On
//! morphisms it works through path coordinates: a morphism
//! `P(a) -> P(b)` is determined by the image of the generator, a
//! combination `w` of basis paths `b ~> a`, and the corresponding
//! morphism `I(a) -> I(b)` acts at each vertex `u` as the transpose of
//! "concatenate with `w` and reduce": the matrix of
//! `q |-> normal_form(q . w)` from paths `u ~> b` to paths `u ~> a`.
//! The inverse functor reads `w` back off an injective morphism and
//! left-concatenates instead. Both directions are exact path
//! bookkeeping — no choices, no bases to chase.

use num_traits::Zero;

use crate::algebra::{BoundQuiverAlgebra, Combo};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Rat};
use crate::modcat::{
    injective_envelope, injective_sum, projective_cover, projective_sum, CanonicalInjective,
    CanonicalProjective,
};
use crate::quiver::VertexId;
use crate::rep::{RepMorphism, Representation};

/// Position of the lazy path inside the `(v, v)` block.
fn lazy_pos(alg: &BoundQuiverAlgebra, v: VertexId) -> usize {
    alg.basis_block(v, v)
        .iter()
        .position(|&p| alg.basis_path(p).is_empty())
        .expect("the lazy path survives in any admissible quotient")
}

/// Extract, for each summand pair, the path combination `w` (over basis
/// paths `target_vertex ~> source_vertex`) that the morphism block
/// realises. `f` maps `src -> dst`; the entry `(j, i)` describes the
/// component from summand `i` of `src` into summand `j` of `dst`.
fn extract_projective_words(
    alg: &BoundQuiverAlgebra,
    src: &CanonicalProjective,
    dst: &CanonicalProjective,
    f: &RepMorphism,
) -> Vec<Vec<Combo>> {
    let mut words = vec![vec![Combo::new(); src.summand_count()]; dst.summand_count()];
    for (i, &vi) in src.vertices().iter().enumerate() {
        // the generator of P(v_i) sits at vertex v_i, at the lazy path
        let col = src.block_offset(i, vi) + lazy_pos(alg, vi);
        for (j, &vj) in dst.vertices().iter().enumerate() {
            let block = alg.basis_block(vj, vi);
            let row0 = dst.block_offset(j, vi);
            let mut w = Combo::new();
            for (k, &pos) in block.iter().enumerate() {
                let c = f.maps[vi].at(row0 + k, col);
                if !c.is_zero() {
                    w.push((c.clone(), pos));
                }
            }
            words[j][i] = w;
        }
    }
    words
}

/// Extract the word of each block of a morphism of canonical
/// injectives: the component `I(v_i) -> I(v_j)` is read off at vertex
/// `v_j`, where its matrix has a single row indexed by the lazy path,
/// whose entries are the coordinates of `w` over paths `v_j ~> v_i`.
fn extract_injective_words(
    alg: &BoundQuiverAlgebra,
    src: &CanonicalInjective,
    dst: &CanonicalInjective,
    g: &RepMorphism,
) -> Vec<Vec<Combo>> {
    let mut words = vec![vec![Combo::new(); src.summand_count()]; dst.summand_count()];
    for (j, &vj) in dst.vertices().iter().enumerate() {
        let row = dst.block_offset(j, vj) + lazy_pos(alg, vj);
        for (i, &vi) in src.vertices().iter().enumerate() {
            let block = alg.basis_block(vj, vi);
            let col0 = src.block_offset(i, vj);
            let mut w = Combo::new();
            for (k, &pos) in block.iter().enumerate() {
                let c = g.maps[vj].at(row, col0 + k);
                if !c.is_zero() {
                    w.push((c.clone(), pos));
                }
            }
            words[j][i] = w;
        }
    }
    words
}

/// Index of a basis position inside a block listing.
fn local_index(block: &[usize], pos: usize) -> usize {
    block
        .iter()
        .position(|&p| p == pos)
        .expect("product of composable paths stays in its block")
}

/// Nakayama functor on objects: `P(v_1) + ... + P(v_k)` becomes
/// `I(v_1) + ... + I(v_k)`.
pub fn nakayama_object(
    alg: &BoundQuiverAlgebra,
    p: &CanonicalProjective,
) -> Result<CanonicalInjective> {
    injective_sum(alg, p.vertices())
}

/// Inverse Nakayama functor on objects.
pub fn nakayama_inverse_object(
    alg: &BoundQuiverAlgebra,
    i: &CanonicalInjective,
) -> Result<CanonicalProjective> {
    projective_sum(alg, i.vertices())
}

/// Nakayama functor on a morphism of canonical projectives.
pub fn nakayama_map(
    alg: &BoundQuiverAlgebra,
    src: &CanonicalProjective,
    dst: &CanonicalProjective,
    f: &RepMorphism,
) -> Result<RepMorphism> {
    let nu_src = nakayama_object(alg, src)?;
    let nu_dst = nakayama_object(alg, dst)?;
    let words = extract_projective_words(alg, src, dst, f);
    let nv = alg.quiver().vertex_count();
    let mut maps = Vec::with_capacity(nv);
    for u in 0..nv {
        let mut mat = ExactMatrix::zero(nu_dst.rep.dims()[u], nu_src.rep.dims()[u]);
        for (j, &vj) in dst.vertices().iter().enumerate() {
            let row_block = alg.basis_block(u, vj);
            let row0 = nu_dst.block_offset(j, u);
            for (i, &vi) in src.vertices().iter().enumerate() {
                let w = &words[j][i];
                if w.is_empty() {
                    continue;
                }
                let col_block = alg.basis_block(u, vi);
                let col0 = nu_src.block_offset(i, u);
                // h: paths u ~> v_j  ->  paths u ~> v_i, q |-> nf(q . w);
                // the block of nu(f) is the transpose of h
                for (r, &qpos) in row_block.iter().enumerate() {
                    let prod = alg.mult_combo(&[(Rat::from_integer(1.into()), qpos)], w);
                    for (c, pos) in prod {
                        let k = local_index(col_block, pos);
                        let cur = mat.at(row0 + r, col0 + k).clone();
                        mat.set(row0 + r, col0 + k, cur + c);
                    }
                }
            }
        }
        maps.push(mat);
    }
    Ok(RepMorphism { maps })
}

/// Inverse Nakayama functor on a morphism of canonical injectives.
pub fn nakayama_inverse_map(
    alg: &BoundQuiverAlgebra,
    src: &CanonicalInjective,
    dst: &CanonicalInjective,
    g: &RepMorphism,
) -> Result<RepMorphism> {
    let pr_src = nakayama_inverse_object(alg, src)?;
    let pr_dst = nakayama_inverse_object(alg, dst)?;
    let words = extract_injective_words(alg, src, dst, g);
    let nv = alg.quiver().vertex_count();
    let mut maps = Vec::with_capacity(nv);
    for u in 0..nv {
        let mut mat = ExactMatrix::zero(pr_dst.rep.dims()[u], pr_src.rep.dims()[u]);
        for (j, &vj) in dst.vertices().iter().enumerate() {
            let row_block = alg.basis_block(vj, u);
            let row0 = pr_dst.block_offset(j, u);
            for (i, &vi) in src.vertices().iter().enumerate() {
                let w = &words[j][i];
                if w.is_empty() {
                    continue;
                }
                let col_block = alg.basis_block(vi, u);
                let col0 = pr_src.block_offset(i, u);
                // P(w): P(v_i) -> P(v_j) left-concatenates: q |-> nf(w . q)
                for (c_idx, &qpos) in col_block.iter().enumerate() {
                    let prod = alg.mult_combo(w, &[(Rat::from_integer(1.into()), qpos)]);
                    for (c, pos) in prod {
                        let r = local_index(row_block, pos);
                        let cur = mat.at(row0 + r, col0 + c_idx).clone();
                        mat.set(row0 + r, col0 + c_idx, cur + c);
                    }
                }
            }
        }
        maps.push(mat);
    }
    Ok(RepMorphism { maps })
}

/// Recognise an arbitrary projective module as a canonical one: returns
/// the canonical projective and the isomorphism onto `m`. Errors with
/// `NotProjective` otherwise.
pub fn canonicalize_projective(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
) -> Result<(CanonicalProjective, RepMorphism)> {
    let (p, eps) = projective_cover(alg, m)?;
    if !eps.is_isomorphism() {
        return Err(Error::NotProjective {
            reason: format!(
                "cover by {} summands has a {}-dimensional kernel",
                p.summand_count(),
                p.rep.total_dim() - m.total_dim()
            ),
        });
    }
    Ok((p, eps))
}

/// Recognise an arbitrary injective module as a canonical one: returns
/// the canonical injective and the isomorphism from `m` into it.
pub fn canonicalize_injective(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
) -> Result<(CanonicalInjective, RepMorphism)> {
    let (i, eta) = injective_envelope(alg, m)?;
    if !eta.is_isomorphism() {
        return Err(Error::NotInjective {
            reason: format!(
                "envelope by {} summands has a {}-dimensional cokernel",
                i.summand_count(),
                i.rep.total_dim() - m.total_dim()
            ),
        });
    }
    Ok((i, eta))
}

/// Nakayama functor applied to an arbitrary projective module (the
/// result is the canonical injective on the same vertices).
pub fn nakayama_of_projective(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
) -> Result<CanonicalInjective> {
    let (p, _) = canonicalize_projective(alg, m)?;
    nakayama_object(alg, &p)
}

/// Inverse Nakayama functor applied to an arbitrary injective module.
pub fn nakayama_inverse_of_injective(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
) -> Result<CanonicalProjective> {
    let (i, _) = canonicalize_injective(alg, m)?;
    nakayama_inverse_object(alg, &i)
}

/// Both sides of the duality `dim Hom(P, M) = dim Hom(M, N(P))`,
/// returned as a pair so callers see the agreement instead of trusting
/// it.
pub fn nakayama_duality_dims(
    alg: &BoundQuiverAlgebra,
    p: &Representation,
    m: &Representation,
) -> Result<(usize, usize)> {
    let nu_p = nakayama_of_projective(alg, p)?;
    Ok((
        crate::rep::hom_dim(alg, p, m)?,
        crate::rep::hom_dim(alg, m, &nu_p.rep)?,
    ))
}

/// Transport a morphism between arbitrary projective modules through
/// the Nakayama functor: canonicalize both ends and push the conjugated
/// morphism through. Returns the two canonical injectives and the image
/// morphism between them.
pub fn nakayama_of_projective_map(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
    n: &Representation,
    f: &RepMorphism,
) -> Result<(CanonicalInjective, CanonicalInjective, RepMorphism)> {
    let (pm, eps_m) = canonicalize_projective(alg, m)?;
    let (pn, eps_n) = canonicalize_projective(alg, n)?;
    let eps_n_inv = RepMorphism {
        maps: eps_n
            .maps
            .iter()
            .map(|x| x.inverse().expect("canonicalization isomorphism"))
            .collect(),
    };
    let f0 = eps_m.then(f).then(&eps_n_inv);
    let nf = nakayama_map(alg, &pm, &pn, &f0)?;
    Ok((nakayama_object(alg, &pm)?, nakayama_object(alg, &pn)?, nf))
}
