//! The artifact's acceptance gate: one criterion per test, each
//! printing a single PASS/FAIL line (visible with
//! `cargo test --test acceptance -- --nocapture`). Every check is exact
//! rational arithmetic; the only tolerances are the wall-clock budgets
//! pinned beside each criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use arcat::algebra::BoundQuiverAlgebra;
use arcat::approx::{
    cover_kernel_in_radical, is_strong_cover, minimize, nu_via_approx, precover,
    proper_diagnostics, representability_check, subcategory, tau_as_cover, LinearCategory,
    MeshEngine, Realization,
};
use arcat::artrans::{
    ar_quiver, ar_sequence, default_dimension_cap, tau, tau_property_suite, verify_almost_split,
};
use arcat::decomp::indec_iso;
use arcat::linalg::ExactMatrix;
use arcat::mesh::{build_mesh, label_slice, MeshCategory, MeshVertex, SliceLabeling};
use arcat::modcat::{is_projective, projective_sum};
use arcat::nakayama::{
    nakayama_duality_dims, nakayama_inverse_object, nakayama_map, nakayama_object,
    nakayama_of_projective,
};
use arcat::quiver::{alternating_an, linear_an};
use arcat::rep::{hom_basis, morphism_coords, Representation};

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn ok<T>(r: arcat::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn criterion(num: usize, label: &str, limit: Duration, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed <= limit => {
            println!("ACCEPTANCE {num} ({label}): PASS ({elapsed:.2?})");
        }
        Ok(()) => {
            println!(
                "ACCEPTANCE {num} ({label}): FAIL (time budget {limit:.0?} exceeded: {elapsed:.2?})"
            );
            panic!("criterion {num} exceeded its time budget");
        }
        Err(msg) => {
            println!("ACCEPTANCE {num} ({label}): FAIL — {msg}");
            panic!("criterion {num} failed: {msg}");
        }
    }
}

fn linear_algebra(n: usize) -> BoundQuiverAlgebra {
    BoundQuiverAlgebra::path_algebra(linear_an(n)).expect("acyclic")
}

/// Mesh window wide enough to label the slice of `kA_n` and apply all
/// three automorphisms to it.
fn slice_window(n: usize) -> (i64, i64) {
    (-(2 * n as i64) - 2, 2 * n as i64 + 3)
}

fn labeled_slice(n: usize) -> Result<(MeshCategory, BoundQuiverAlgebra, SliceLabeling), String> {
    let mc = ok(build_mesh(n, slice_window(n)), "mesh build")?;
    let alg = linear_algebra(n);
    let labels = ok(label_slice(&mc, &alg), "slice labeling")?;
    Ok((mc, alg, labels))
}

fn vertex_named(labels: &SliceLabeling, name: &str) -> Result<MeshVertex, String> {
    labels
        .names
        .iter()
        .position(|n| n == name)
        .map(|k| labels.vertices[k])
        .ok_or_else(|| format!("module {name} not on the slice"))
}

fn shuffle<T>(xs: &mut [T], mut seed: u64) {
    seed = seed.max(1);
    for k in (1..xs.len()).rev() {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        xs.swap(k, (seed as usize) % (k + 1));
    }
}

#[test]
fn criterion_1_example_reproduction() {
    criterion(1, "embedded two-vertex example", Duration::from_secs(5), || {
        let mc = ok(build_mesh(3, (-6, 6)), "mesh build")?;
        let alg = linear_algebra(3);
        let labels = ok(label_slice(&mc, &alg), "slice labeling")?;
        let engine = MeshEngine::with_labels(&mc, &labels);
        let one = vertex_named(&labels, "1")?;
        let p21 = vertex_named(&labels, "2/1")?;
        let s2 = vertex_named(&labels, "2")?;
        let sub = ok(subcategory(&engine, vec![one, p21, s2]), "subcategory")?;

        let s1 = ok(mc.serre(one), "serre")?;
        ensure!(engine.label(s1) == "3/2/1", "S(1) = {}, not 3/2/1", engine.label(s1));

        let cover = ok(
            minimize(&engine, &sub, &ok(precover(&engine, &sub, s1), "precover")?),
            "minimize",
        )?;
        let src: Vec<String> = cover.summands.iter().map(|&v| engine.label(v)).collect();
        ensure!(src == ["2/1"], "cover source {src:?}, expected [2/1]");
        ensure!(
            ok(is_strong_cover(&engine, &sub, &cover), "strongness")?,
            "minimized cover of S(1) is not strong"
        );

        let table = ok(nu_via_approx(&engine, &sub), "nu table")?;
        let got: Vec<(String, Vec<String>)> = table
            .projectives
            .iter()
            .zip(&table.images)
            .map(|(&p, imgs)| {
                (
                    engine.label(p),
                    imgs.iter().map(|&v| engine.label(v)).collect(),
                )
            })
            .collect();
        let expect = vec![
            ("1".to_string(), vec!["2/1".to_string()]),
            ("2/1".to_string(), vec!["2".to_string()]),
        ];
        ensure!(got == expect, "nu table {got:?}, expected {expect:?}");

        // the very same assignment must be the classical functor of the
        // two-vertex algebra
        let a2 = linear_algebra(2);
        for v in 0..2 {
            let p = ok(a2.projective(v), "projective")?;
            let ni = ok(nakayama_of_projective(&a2, &p), "classical functor")?;
            let classical = a2.module_name(&ni.rep);
            let via_covers = &got
                .iter()
                .find(|(name, _)| *name == a2.module_name(&p))
                .ok_or("projective missing from the table")?
                .1;
            ensure!(
                via_covers.len() == 1 && via_covers[0] == classical,
                "cover route gives {via_covers:?} where the classical functor gives {classical}"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_2_ar_data_of_the_three_vertex_algebra() {
    criterion(2, "AR quiver, translate, sequence", Duration::from_secs(5), || {
        let alg = linear_algebra(3);
        let ar = ok(ar_quiver(&alg, default_dimension_cap()), "knitting")?;
        ensure!(
            ar.modules.len() == 6,
            "{} indecomposables, expected 6",
            ar.modules.len()
        );

        let arrows: BTreeSet<(String, String, usize)> = ar
            .arrows
            .iter()
            .map(|&(s, t, m)| (ar.names[s].clone(), ar.names[t].clone(), m))
            .collect();
        let expect: BTreeSet<(String, String, usize)> = [
            ("1", "2/1"),
            ("2/1", "3/2/1"),
            ("2/1", "2"),
            ("3/2/1", "3/2"),
            ("2", "3/2"),
            ("3/2", "3"),
        ]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string(), 1))
        .collect();
        ensure!(arrows == expect, "adjacency {arrows:?}, expected {expect:?}");

        let taus: BTreeSet<(String, String)> = ar
            .translation
            .iter()
            .enumerate()
            .filter_map(|(k, t)| t.map(|t| (ar.names[k].clone(), ar.names[t].clone())))
            .collect();
        let expect_taus: BTreeSet<(String, String)> = [("2", "1"), ("3/2", "2/1"), ("3", "2")]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        ensure!(taus == expect_taus, "translation {taus:?}, expected {expect_taus:?}");

        let s2 = ok(alg.module_by_name("2"), "module 2")?;
        let t = ok(tau(&alg, &s2), "translate")?;
        ensure!(alg.module_name(&t) == "1", "tau(2) = {}, expected 1", alg.module_name(&t));

        let seq = ok(ar_sequence(&alg, &s2), "sequence")?;
        ensure!(alg.module_name(&seq.left) == "1", "left term {}", alg.module_name(&seq.left));
        ensure!(alg.module_name(&seq.right) == "2", "right term {}", alg.module_name(&seq.right));
        let p21 = ok(alg.module_by_name("2/1"), "module 2/1")?;
        ensure!(
            ok(indec_iso(&alg, &seq.middle, &p21), "middle comparison")?.is_some(),
            "middle term is not 2/1 (dims {:?})",
            seq.middle.dims()
        );
        ensure!(
            ok(verify_almost_split(&alg, &seq, &ar.modules), "lifting test")?,
            "sequence fails the almost-split lifting test over the corpus"
        );
        Ok(())
    });
}

#[test]
fn criterion_3_translate_property_suite() {
    criterion(3, "translate property suite", Duration::from_secs(60), || {
        for n in [2usize, 3, 4] {
            for (orientation, quiver) in [("linear", linear_an(n)), ("alternating", alternating_an(n))] {
                let alg = ok(BoundQuiverAlgebra::path_algebra(quiver), "algebra")?;
                let verdicts = ok(
                    tau_property_suite(&alg, default_dimension_cap()),
                    "property suite",
                )?;
                ensure!(
                    verdicts.len() == 8,
                    "A_{n} {orientation}: {} verdicts, expected 8",
                    verdicts.len()
                );
                for v in &verdicts {
                    ensure!(
                        v.passed,
                        "A_{n} {orientation}: property `{}` failed: {}",
                        v.name,
                        v.detail
                    );
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_4_serre_dimension_symmetry() {
    criterion(4, "Serre dimension symmetry", Duration::from_secs(30), || {
        for n in 1usize..=4 {
            let mc = ok(build_mesh(n, (-8, 8)), "mesh build")?;
            let verts = mc.usable_vertices();
            let mut checked = 0usize;
            for &x in &verts {
                let sx = match mc.serre(x) {
                    Ok(sx) => sx,
                    Err(_) => continue, // Serre image leaves the usable range
                };
                for &y in &verts {
                    let lhs = ok(mc.hom_dim(x, y), "hom")?;
                    let rhs = ok(mc.hom_dim(y, sx), "hom")?;
                    ensure!(
                        lhs == rhs,
                        "A_{n}: dim hom({x}, {y}) = {lhs} but dim hom({y}, S{x}) = {rhs}"
                    );
                    checked += 1;
                }
            }
            ensure!(checked > 0, "A_{n}: no checkable pairs in the window");
        }
        Ok(())
    });
}

#[test]
fn criterion_5_setup_hypotheses_on_the_slice() {
    criterion(5, "slice hypotheses and projectivity", Duration::from_secs(60), || {
        for n in 1usize..=4 {
            let (mc, alg, labels) = labeled_slice(n)?;
            // hom(A, desuspended A') vanishes on every pair
            for &va in &labels.vertices {
                for &vb in &labels.vertices {
                    let target = ok(mc.suspension_inverse(vb), "desuspension")?;
                    let d = ok(mc.hom_dim(va, target), "hom")?;
                    ensure!(
                        d == 0,
                        "A_{n}: hom({va}, Sigma^-1 {vb}) has dimension {d}"
                    );
                }
            }
            // suspension-vanishing projectivity matches the module
            // category, in both directions
            for (k, m) in labels.modules.iter().enumerate() {
                let mut vanishes = true;
                for &vb in &labels.vertices {
                    let target = ok(mc.suspension(vb), "suspension")?;
                    if ok(mc.hom_dim(labels.vertices[k], target), "hom")? != 0 {
                        vanishes = false;
                        break;
                    }
                }
                let classical = ok(is_projective(&alg, m), "projectivity")?;
                ensure!(
                    vanishes == classical,
                    "A_{n}: {} has suspension-vanishing {vanishes} but projectivity {classical}",
                    labels.names[k]
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_functor_equivalence_and_duality() {
    criterion(6, "functor equivalence and duality", Duration::from_secs(60), || {
        let alg = linear_algebra(4);
        let ps: Vec<_> = (0..4)
            .map(|v| projective_sum(&alg, &[v]))
            .collect::<arcat::Result<_>>()
            .map_err(|e| format!("projectives: {e}"))?;
        let ns: Vec<_> = ps
            .iter()
            .map(|p| nakayama_object(&alg, p))
            .collect::<arcat::Result<_>>()
            .map_err(|e| format!("functor images: {e}"))?;

        // full faithfulness, by rank, on every projective pair
        for (i, pi) in ps.iter().enumerate() {
            for (j, pj) in ps.iter().enumerate() {
                let fs = ok(hom_basis(&alg, &pi.rep, &pj.rep), "hom basis")?;
                let gs = ok(hom_basis(&alg, &ns[i].rep, &ns[j].rep), "hom basis")?;
                ensure!(
                    fs.len() == gs.len(),
                    "hom(P({}), P({})) has dim {} but its image pair has dim {}",
                    i + 1,
                    j + 1,
                    fs.len(),
                    gs.len()
                );
                let mut cols = Vec::new();
                for f in &fs {
                    let nf = ok(nakayama_map(&alg, pi, pj, f), "morphism action")?;
                    cols.push(
                        morphism_coords(&gs, &nf)
                            .ok_or("functor image escaped its hom space")?,
                    );
                }
                let rank = ExactMatrix::from_columns(gs.len(), &cols).rank();
                ensure!(
                    rank == fs.len(),
                    "action on hom(P({}), P({})) has rank {rank} of {}",
                    i + 1,
                    j + 1,
                    fs.len()
                );
            }
        }

        // the inverse undoes the functor on objects
        for (i, pi) in ps.iter().enumerate() {
            let back = ok(nakayama_inverse_object(&alg, &ns[i]), "inverse functor")?;
            ensure!(
                back.vertices() == pi.vertices() && back.rep == pi.rep,
                "round trip moved P({})",
                i + 1
            );
        }

        // duality dims agree on every (projective, interval) pair and
        // on the zero module
        let mut corpus: Vec<Representation> = vec![Representation::zero(&alg)];
        for hi in 1..=4usize {
            for lo in 1..=hi {
                let name: Vec<String> = (lo..=hi).rev().map(|v| v.to_string()).collect();
                corpus.push(ok(alg.module_by_name(&name.join("/")), "interval")?);
            }
        }
        for (i, _) in ps.iter().enumerate() {
            let p = ok(alg.projective(i), "projective")?;
            for m in &corpus {
                let (d1, d2) = ok(nakayama_duality_dims(&alg, &p, m), "duality dims")?;
                ensure!(
                    d1 == d2,
                    "duality split on (P({}), {}): {d1} vs {d2}",
                    i + 1,
                    alg.module_name(m)
                );
            }
        }

        // representability over every acceptance subcategory
        let mut instances: Vec<(MeshCategory, Vec<MeshVertex>)> = Vec::new();
        for n in 1usize..=4 {
            let (mc, _, labels) = labeled_slice(n)?;
            instances.push((mc, labels.vertices.clone()));
        }
        let (mc_a2, _, labels_a2) = labeled_slice(3)?;
        instances.push((
            mc_a2,
            vec![
                vertex_named(&labels_a2, "1")?,
                vertex_named(&labels_a2, "2/1")?,
                vertex_named(&labels_a2, "2")?,
            ],
        ));
        for (mc, gens) in &instances {
            let engine = MeshEngine::new(mc);
            let sub = ok(subcategory(&engine, gens.clone()), "subcategory")?;
            let table = ok(nu_via_approx(&engine, &sub), "nu table")?;
            for (k, &p) in table.projectives.iter().enumerate() {
                ensure!(
                    ok(
                        representability_check(&engine, &sub, p, &table.images[k]),
                        "representability"
                    )?,
                    "representability fails at {p:?} in a {}-generator subcategory",
                    gens.len()
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_7_translate_as_cover() {
    criterion(7, "translate as a minimized cover", Duration::from_secs(60), || {
        // the full three-vertex slice
        let mc = ok(build_mesh(3, (-6, 6)), "mesh build")?;
        let alg = linear_algebra(3);
        let labels = ok(label_slice(&mc, &alg), "slice labeling")?;
        let engine = MeshEngine::with_labels(&mc, &labels);
        let sub = ok(subcategory(&engine, labels.vertices.clone()), "subcategory")?;
        let real = Realization::from_slice(&labels, &alg);
        let mut tested = 0usize;
        for (k, m) in labels.modules.iter().enumerate() {
            if ok(is_projective(&alg, m), "projectivity")? {
                continue;
            }
            let (_, cover, agree) = ok(
                tau_as_cover(&mc, &sub, &real, labels.vertices[k]),
                "translate as cover",
            )?;
            ensure!(!cover.summands.is_empty(), "{}: cover is zero", labels.names[k]);
            ensure!(agree, "{}: routes disagree", labels.names[k]);
            tested += 1;
        }
        ensure!(tested == 3, "tested {tested} slice modules, expected 3");

        // the embedded two-vertex subcategory
        let a2 = linear_algebra(2);
        let one = vertex_named(&labels, "1")?;
        let p21 = vertex_named(&labels, "2/1")?;
        let s2 = vertex_named(&labels, "2")?;
        let sub2 = ok(subcategory(&engine, vec![one, p21, s2]), "subcategory")?;
        let real2 = ok(
            Realization::new(
                &mc,
                &a2,
                vec![
                    (ok(a2.module_by_name("1"), "module")?, one),
                    (ok(a2.module_by_name("2/1"), "module")?, p21),
                    (ok(a2.module_by_name("2"), "module")?, s2),
                ],
            ),
            "realization",
        )?;
        let mut tested = 0usize;
        for (m, v) in real2.modules.clone().into_iter().zip([one, p21, s2]) {
            if ok(is_projective(&a2, &m), "projectivity")? {
                continue;
            }
            let (t, cover, agree) = ok(tau_as_cover(&mc, &sub2, &real2, v), "translate as cover")?;
            ensure!(!cover.summands.is_empty(), "cover of the translate target is zero");
            ensure!(
                agree,
                "routes disagree on {} (classical translate {})",
                a2.module_name(&m),
                a2.module_name(&t)
            );
            tested += 1;
        }
        ensure!(tested == 1, "tested {tested} embedded modules, expected 1");
        Ok(())
    });
}

#[test]
fn criterion_8_choice_independence() {
    criterion(8, "choice independence of minimization", Duration::from_secs(60), || {
        let mc = ok(build_mesh(3, (-6, 6)), "mesh build")?;
        let alg = linear_algebra(3);
        let labels = ok(label_slice(&mc, &alg), "slice labeling")?;
        let engine = MeshEngine::with_labels(&mc, &labels);
        let gens = vec![
            vertex_named(&labels, "1")?,
            vertex_named(&labels, "2/1")?,
            vertex_named(&labels, "2")?,
        ];
        let base_sub = ok(subcategory(&engine, gens.clone()), "subcategory")?;
        let base_table = ok(nu_via_approx(&engine, &base_sub), "nu table")?;
        let s1 = ok(mc.serre(gens[0]), "serre")?;
        let base_cover = ok(
            minimize(&engine, &base_sub, &ok(precover(&engine, &base_sub, s1), "precover")?),
            "minimize",
        )?;
        let mut base_src = base_cover.summands.clone();
        base_src.sort();

        for run in 0..20u64 {
            let mut shuffled = gens.clone();
            shuffle(&mut shuffled, run + 1);
            let sub = ok(subcategory(&engine, shuffled), "subcategory")?;
            let table = ok(nu_via_approx(&engine, &sub), "nu table")?;
            for (k, &p) in base_table.projectives.iter().enumerate() {
                let mut want = base_table.images[k].clone();
                want.sort();
                let mut got = table
                    .image_of(p)
                    .ok_or_else(|| format!("run {run}: projective {p:?} missing"))?
                    .to_vec();
                got.sort();
                ensure!(
                    got == want,
                    "run {run}: image of {p:?} is {got:?}, expected {want:?}"
                );
            }
            let cover = ok(
                minimize(&engine, &sub, &ok(precover(&engine, &sub, s1), "precover")?),
                "minimize",
            )?;
            let mut src = cover.summands.clone();
            src.sort();
            ensure!(
                src == base_src,
                "run {run}: cover source {src:?}, expected {base_src:?}"
            );
            ensure!(
                ok(cover_kernel_in_radical(&engine, &cover), "minimality certificate")?,
                "run {run}: minimized cover fails the right-minimality certificate"
            );
            for c in &table.covers {
                ensure!(
                    ok(cover_kernel_in_radical(&engine, c), "minimality certificate")?,
                    "run {run}: a table cover fails the right-minimality certificate"
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_9_enough_projectives_iff_enough_injectives() {
    criterion(9, "enough projectives iff enough injectives", Duration::from_secs(60), || {
        // full slices in ranks one through four
        for n in 1usize..=4 {
            let (mc, _, labels) = labeled_slice(n)?;
            let engine = MeshEngine::with_labels(&mc, &labels);
            let sub = ok(subcategory(&engine, labels.vertices.clone()), "subcategory")?;
            let report = ok(proper_diagnostics(&engine, &sub), "diagnostics")?;
            ensure!(
                report.enough_projectives == report.enough_injectives,
                "A_{n} slice: flags disagree"
            );
            ensure!(report.enough_projectives, "A_{n} slice: a slice has both");
        }
        // the embedded two-vertex subcategory and every single-object
        // subcategory of the three-vertex slice
        let (mc, _, labels) = labeled_slice(3)?;
        let engine = MeshEngine::with_labels(&mc, &labels);
        let sub = ok(
            subcategory(
                &engine,
                vec![
                    vertex_named(&labels, "1")?,
                    vertex_named(&labels, "2/1")?,
                    vertex_named(&labels, "2")?,
                ],
            ),
            "subcategory",
        )?;
        let report = ok(proper_diagnostics(&engine, &sub), "diagnostics")?;
        ensure!(
            report.enough_projectives && report.enough_injectives,
            "embedded subcategory: flags {} / {}",
            report.enough_projectives,
            report.enough_injectives
        );
        for &v in &labels.vertices {
            let sub = ok(subcategory(&engine, vec![v]), "subcategory")?;
            let report = ok(proper_diagnostics(&engine, &sub), "diagnostics")?;
            ensure!(
                report.enough_projectives == report.enough_injectives,
                "single object {v}: flags disagree"
            );
        }
        Ok(())
    });
}
