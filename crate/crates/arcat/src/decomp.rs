//! Direct-sum decomposition through endomorphism rings.
//!
//! Over the rationals, splitting a module is a question about idempotents
//! in `End(M)`, and the crate finds them without ever factoring a
//! polynomial: whenever some endomorphism has a minimal polynomial with
//! two coprime parts (distinct squarefree classes, or a rational root
//! split off its complement), the Bezout identity for those parts
//! evaluates to an *exact* idempotent. The radical of `End(M)` is the
//! radical of its trace form (we are in characteristic zero), so "is
//! this module indecomposable" reduces to `dim End/rad == 1`.
//!
//! When `dim End/rad > 1` but no candidate splits — which happens when
//! the semisimple quotient is a division algebra, or when a matrix block
//! hides its idempotents from every candidate we try — the decomposition
//! is reported as undecidable rather than guessed at.

use num_traits::{One, Zero};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{rat, ExactMatrix, Rat};
use crate::poly::{min_poly, Poly};
use crate::rep::{combo_morphism, hom_basis, morphism_coords, RepMorphism, Representation};

/// A full direct-sum decomposition: `sum incl_i . proj_i = id`, each
/// `proj_i . incl_i = id`, and mixed composites vanish.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub summands: Vec<Representation>,
    /// `summands[i] -> M`
    pub inclusions: Vec<RepMorphism>,
    /// `M -> summands[i]`
    pub projections: Vec<RepMorphism>,
}

/// The block-diagonal operator a morphism induces on the total space.
fn total_matrix(f: &RepMorphism) -> ExactMatrix {
    f.maps
        .iter()
        .fold(ExactMatrix::zero(0, 0), |acc, m| acc.block_diag(m))
}

fn total_trace(f: &RepMorphism) -> Rat {
    f.maps.iter().map(|m| m.trace()).sum()
}

/// Evaluate a polynomial at an endomorphism (Horner; the constant term
/// becomes a multiple of the identity).
fn eval_on_endo(p: &Poly, phi: &RepMorphism, m: &Representation) -> RepMorphism {
    let id = RepMorphism::identity(m);
    let mut acc = RepMorphism::zero(m, m);
    for c in p.coeffs().iter().rev() {
        acc = acc.then(phi).add(&id.scale(c));
    }
    acc
}

/// Basis of `rad End(M)`: the radical of the trace form
/// `(x, y) -> tr(xy on the total space)`, valid in characteristic zero.
pub fn end_radical(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
) -> Result<Vec<RepMorphism>> {
    let basis = hom_basis(alg, m, m)?;
    let k = basis.len();
    let mut gram = ExactMatrix::zero(k, k);
    for i in 0..k {
        for j in i..k {
            let t = total_trace(&basis[i].then(&basis[j]));
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    Ok(gram
        .kernel_basis()
        .into_iter()
        .map(|coords| combo_morphism(&basis, &coords))
        .collect())
}

/// `dim End(M) / rad End(M)`.
pub fn end_dim_mod_rad(alg: &BoundQuiverAlgebra, m: &Representation) -> Result<usize> {
    let basis = hom_basis(alg, m, m)?;
    Ok(basis.len() - end_radical(alg, m)?.len())
}

/// Try to read a coprime factorisation `mu = f1 * f2` off a minimal
/// polynomial: distinct squarefree classes split immediately; a single
/// class with a rational root splits as (linear power, rest).
fn coprime_split(mu: &Poly) -> Option<(Poly, Poly)> {
    let classes = mu.squarefree_decomposition();
    if classes.len() >= 2 {
        let mut f1 = Poly::one();
        for _ in 0..classes[0].1 {
            f1 = f1.mul(&classes[0].0);
        }
        let mut f2 = Poly::one();
        for (g, e) in &classes[1..] {
            for _ in 0..*e {
                f2 = f2.mul(g);
            }
        }
        return Some((f1, f2));
    }
    if classes.len() == 1 && classes[0].0.degree() > 1 {
        let (g, e) = (&classes[0].0, classes[0].1);
        if let Some(lambda) = g.rational_roots().first() {
            // mu = (x - lambda)^e * (g / (x - lambda))^e, coprime parts
            let lin = Poly::linear(lambda);
            let mut f1 = Poly::one();
            for _ in 0..e {
                f1 = f1.mul(&lin);
            }
            let (f2, r) = mu.div_rem(&f1);
            debug_assert!(r.is_zero());
            if f2.degree() >= 1 {
                return Some((f1, f2));
            }
        }
    }
    None
}

/// Exact nontrivial idempotent from a split minimal polynomial: with
/// `u f1 + v f2 = 1` and `f1 f2 (phi) = 0`, the element `(v f2)(phi)`
/// squares to itself on the nose.
fn idempotent_from_split(
    phi: &RepMorphism,
    m: &Representation,
    f1: &Poly,
    f2: &Poly,
) -> Option<RepMorphism> {
    let (g, _, v) = f1.xgcd(f2);
    if g.degree() != 0 {
        return None; // not coprime after all
    }
    // normalise the Bezout identity to u f1 + v f2 = 1
    let v = v.scale(&(Rat::one() / g.coeff(0)));
    let e = eval_on_endo(&v.mul(f2), phi, m);
    let e2 = e.then(&e);
    if e2 != e {
        return None;
    }
    if e.is_zero() || e == RepMorphism::identity(m) {
        return None;
    }
    Some(e)
}

/// Deterministic candidate endomorphisms to probe for splits: the hom
/// basis itself, pairwise sums and products, and a few seeded small
/// random combinations.
fn split_candidates(basis: &[RepMorphism]) -> Vec<RepMorphism> {
    let mut out: Vec<RepMorphism> = basis.to_vec();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i < j {
                out.push(basis[i].add(&basis[j]));
            }
            if i != j {
                out.push(basis[i].then(&basis[j]));
            }
        }
    }
    let mut state: u64 = 0x9e3779b97f4a7c15;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) % 7) as i64 - 3
    };
    for _ in 0..20 {
        let mut acc: Option<RepMorphism> = None;
        for b in basis {
            let c = rat(next());
            if c.is_zero() {
                continue;
            }
            let t = b.scale(&c);
            acc = Some(match acc {
                None => t,
                Some(a) => a.add(&t),
            });
        }
        if let Some(a) = acc {
            out.push(a);
        }
    }
    out
}

/// Try to produce one exact nontrivial idempotent in `End(M)`.
fn find_idempotent(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
) -> Result<Option<RepMorphism>> {
    let basis = hom_basis(alg, m, m)?;
    for phi in split_candidates(&basis) {
        if phi.is_zero() {
            continue;
        }
        let mu = min_poly(&total_matrix(&phi));
        if let Some((f1, f2)) = coprime_split(&mu) {
            if let Some(e) = idempotent_from_split(&phi, m, &f1, &f2) {
                return Ok(Some(e));
            }
        }
    }
    // second pass: search in the semisimple quotient End/rad, where
    // nilpotents no longer mask eigenvalue splits, and lift the
    // idempotent back up by the cubic correction e <- 3e^2 - 2e^3
    if let Some(e) = quotient_idempotent(alg, m, &basis)? {
        return Ok(Some(e));
    }
    Ok(None)
}

/// Search for an idempotent in `End(M)/rad` via its regular
/// representation, then lift it to an exact idempotent of `End(M)`.
fn quotient_idempotent(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
    basis: &[RepMorphism],
) -> Result<Option<RepMorphism>> {
    let k = basis.len();
    let rad = end_radical(alg, m)?;
    let s = k - rad.len();
    if s <= 1 {
        return Ok(None); // local ring: nothing to find
    }
    // coordinates (in the End basis) of the radical, completed to a
    // basis of End by standard vectors; the chosen complement spans the
    // quotient
    let mut cols: Vec<Vec<Rat>> = rad
        .iter()
        .map(|r| morphism_coords(basis, r).expect("radical lies in End"))
        .collect();
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..k {
        if cols.len() == k {
            break;
        }
        let mut e = vec![Rat::zero(); k];
        e[i] = Rat::one();
        cols.push(e);
        if crate::linalg::span_rank(k, &cols) == cols.len() {
            chosen.push(i);
        } else {
            cols.pop();
        }
    }
    let t = ExactMatrix::from_columns(k, &cols);
    let tinv = t.inverse().expect("completed to a basis");
    let reduce = |coords: &[Rat]| -> Vec<Rat> {
        // quotient coordinates: the complement block of T^{-1} . coords
        let full = tinv.apply(coords);
        full[rad.len()..].to_vec()
    };
    // multiplication table of the quotient
    let mut table = vec![vec![vec![Rat::zero(); s]; s]; s];
    for (a, &ia) in chosen.iter().enumerate() {
        for (b, &ib) in chosen.iter().enumerate() {
            let prod = basis[ia].then(&basis[ib]);
            let coords = morphism_coords(basis, &prod).expect("End is closed");
            table[a][b] = reduce(&coords);
        }
    }
    let id_q = reduce(&morphism_coords(basis, &RepMorphism::identity(m)).expect("id in End"));
    let mult = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); s];
        for a in 0..s {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..s {
                if y[b].is_zero() {
                    continue;
                }
                for (o, t) in out.iter_mut().zip(&table[a][b]) {
                    *o += &x[a] * &y[b] * t;
                }
            }
        }
        out
    };
    // quotient-level candidates: basis vectors, sums, products
    let mut cands: Vec<Vec<Rat>> = Vec::new();
    for a in 0..s {
        let mut e = vec![Rat::zero(); s];
        e[a] = Rat::one();
        cands.push(e);
    }
    for a in 0..s {
        for b in 0..s {
            if a < b {
                let mut x = cands[a].clone();
                for (xi, yi) in x.iter_mut().zip(&cands[b]) {
                    *xi += yi;
                }
                cands.push(x);
            }
            if a != b {
                cands.push(mult(&cands[a].clone(), &cands[b].clone()));
            }
        }
    }
    for z in cands {
        if z.iter().all(|c| c.is_zero()) {
            continue;
        }
        // left-multiplication matrix of z on the quotient
        let mut lz = ExactMatrix::zero(s, s);
        for b in 0..s {
            let mut eb = vec![Rat::zero(); s];
            eb[b] = Rat::one();
            let col = mult(&z, &eb);
            for (r, x) in col.into_iter().enumerate() {
                lz.set(r, b, x);
            }
        }
        let mu = min_poly(&lz);
        let Some((f1, f2)) = coprime_split(&mu) else {
            continue;
        };
        let (g, _, v) = f1.xgcd(&f2);
        if g.degree() != 0 {
            continue;
        }
        let v = v.scale(&(Rat::one() / g.coeff(0)));
        // Horner in the quotient algebra
        let poly = v.mul(&f2);
        let mut acc = vec![Rat::zero(); s];
        for c in poly.coeffs().iter().rev() {
            acc = mult(&z, &acc);
            for (a, i) in acc.iter_mut().zip(&id_q) {
                *a += c * i;
            }
        }
        let e_bar = acc;
        // quotient-exact idempotency and nontriviality
        let sq = mult(&e_bar, &e_bar);
        if sq != e_bar
            || e_bar.iter().all(|c| c.is_zero())
            || e_bar == id_q
        {
            continue;
        }
        // lift: any preimage, corrected until exactly idempotent
        let mut e = {
            let mut acc: Option<RepMorphism> = None;
            for (a, &ia) in chosen.iter().enumerate() {
                if e_bar[a].is_zero() {
                    continue;
                }
                let t = basis[ia].scale(&e_bar[a]);
                acc = Some(match acc {
                    None => t,
                    Some(x) => x.add(&t),
                });
            }
            match acc {
                Some(x) => x,
                None => continue,
            }
        };
        for _ in 0..64 {
            let e2 = e.then(&e);
            if e2 == e {
                break;
            }
            // 3e^2 - 2e^3
            let e3 = e2.then(&e);
            e = e2.scale(&rat(3)).sub(&e3.scale(&rat(2)));
        }
        let e2 = e.then(&e);
        if e2 != e || e.is_zero() || e == RepMorphism::identity(m) {
            continue;
        }
        return Ok(Some(e));
    }
    Ok(None)
}

/// Decompose a module into indecomposable summands with inclusion and
/// projection data. Errors with `UndecidableDecomposition` when a
/// module resists both the direct and the quotient-lifted idempotent
/// search while its endomorphism ring is provably non-local.
pub fn decompose(alg: &BoundQuiverAlgebra, m: &Representation) -> Result<Decomposition> {
    if m.is_zero() {
        return Ok(Decomposition {
            summands: vec![],
            inclusions: vec![],
            projections: vec![],
        });
    }
    if end_dim_mod_rad(alg, m)? == 1 {
        return Ok(Decomposition {
            summands: vec![m.clone()],
            inclusions: vec![RepMorphism::identity(m)],
            projections: vec![RepMorphism::identity(m)],
        });
    }
    let Some(e) = find_idempotent(alg, m)? else {
        return Err(Error::UndecidableDecomposition { dim: m.total_dim() });
    };
    let id = RepMorphism::identity(m);
    let (m1, inc1, prj1) = crate::rep::image(alg, &e, m, m);
    let (m2, inc2, prj2) = crate::rep::image(alg, &id.sub(&e), m, m);
    let mut out = Decomposition {
        summands: vec![],
        inclusions: vec![],
        projections: vec![],
    };
    for (part, inc, prj) in [(m1, inc1, prj1), (m2, inc2, prj2)] {
        let sub = decompose(alg, &part)?;
        for ((s, si), sp) in sub
            .summands
            .into_iter()
            .zip(sub.inclusions)
            .zip(sub.projections)
        {
            out.summands.push(s);
            out.inclusions.push(si.then(&inc));
            out.projections.push(prj.clone().then(&sp));
        }
    }
    Ok(out)
}

/// `true` iff the module is indecomposable (zero counts as decomposable
/// into no summands, hence not indecomposable).
pub fn is_indecomposable(alg: &BoundQuiverAlgebra, m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    if end_dim_mod_rad(alg, m)? == 1 {
        return Ok(true);
    }
    // non-local endomorphism ring: decomposable, provided we can exhibit
    // the split; otherwise the question is genuinely undecided
    match find_idempotent(alg, m)? {
        Some(_) => Ok(false),
        None => Err(Error::UndecidableDecomposition { dim: m.total_dim() }),
    }
}

/// Explicit isomorphism between two *indecomposable* modules, if one
/// exists. Complete for indecomposables: when an isomorphism exists,
/// some pair of hom-basis elements composes to an invertible
/// endomorphism, because the identity cannot lie in the radical.
pub fn indec_iso(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
    n: &Representation,
) -> Result<Option<RepMorphism>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let fwd = hom_basis(alg, m, n)?;
    let bwd = hom_basis(alg, n, m)?;
    for f in &fwd {
        for g in &bwd {
            if f.then(g).is_isomorphism() {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// Explicit isomorphism between arbitrary modules: decompose both sides
/// and match summands greedily.
pub fn iso_between(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
    n: &Representation,
) -> Result<Option<RepMorphism>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(RepMorphism::zero(m, n)));
    }
    let dm = decompose(alg, m)?;
    let dn = decompose(alg, n)?;
    if dm.summands.len() != dn.summands.len() {
        return Ok(None);
    }
    let mut used = vec![false; dn.summands.len()];
    let mut acc = RepMorphism::zero(m, n);
    for (i, s) in dm.summands.iter().enumerate() {
        let mut matched = false;
        for (j, t) in dn.summands.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(h) = indec_iso(alg, s, t)? {
                used[j] = true;
                matched = true;
                acc = acc.add(&dm.projections[i].then(&h).then(&dn.inclusions[j]));
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    Ok(if acc.is_isomorphism() { Some(acc) } else { None })
}

/// Basis of the radical `rad Hom(X, Y)` between indecomposables: all of
/// `Hom` when they are non-isomorphic, the non-isomorphisms otherwise.
pub fn radical_hom_indec(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    y: &Representation,
) -> Result<Vec<RepMorphism>> {
    match indec_iso(alg, x, y)? {
        None => hom_basis(alg, x, y),
        Some(h) => Ok(end_radical(alg, x)?
            .into_iter()
            .map(|u| u.then(&h))
            .collect()),
    }
}
