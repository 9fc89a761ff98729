//! Acceptance gate: prints one PASS/FAIL line per criterion and exits non-zero if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use lie_ext::catalog::{self, build_snobl_counterexample, CatalogEntry};
use lie_ext::exactlin::{int, is_nilpotent, jordan_chevalley, minpoly, Mat, Rat, Subspace};
use lie_ext::extensions::{
    extend_by_derivations, extension_of_nilradical, malcev_split_solvable,
    standard_solvable_extension, togo_dim_check, verify_rank_bound, Extension,
};
use lie_ext::liecore::{direct_sum, leibniz_violation, semidirect_sum, LieAlgebra};
use lie_ext::random::{seeded_rng, small_vector, SeededRng};
use lie_ext::structure::{
    derivations, is_characteristically_nilpotent, maximal_torus, nilradical, LinearLieAlgebra,
};
use lie_ext::Error;
use serde_json::Value;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn entry(name: &str) -> Result<CatalogEntry, String> {
    catalog::get(name).map_err(e)
}

fn k_plus_favre7() -> Result<LieAlgebra, String> {
    Ok(direct_sum(
        &LieAlgebra::abelian(1),
        &entry("favre7")?.algebra,
    ))
}

/// Nilpotent algebras whose standard extensions form the test matrix.
fn matrix_nilpotents() -> Result<Vec<(String, LieAlgebra)>, String> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push((
            format!("abelian:{n}"),
            entry(&format!("abelian:{n}"))?.algebra,
        ));
    }
    for d in [3, 5] {
        out.push((
            format!("heisenberg:{d}"),
            entry(&format!("heisenberg:{d}"))?.algebra,
        ));
    }
    for d in 4..=6 {
        out.push((
            format!("filiform:{d}"),
            entry(&format!("filiform:{d}"))?.algebra,
        ));
    }
    out.push(("k+favre7".into(), k_plus_favre7()?));
    Ok(out)
}

/// Every nilpotent algebra the catalog can name (with small parameters).
fn catalog_nilpotents() -> Result<Vec<(String, LieAlgebra)>, String> {
    let mut out = Vec::new();
    for name in [
        "abelian:1",
        "abelian:2",
        "abelian:3",
        "abelian:4",
        "abelian:5",
        "heisenberg:3",
        "heisenberg:5",
        "heisenberg:7",
        "filiform:3",
        "filiform:4",
        "filiform:5",
        "filiform:6",
        "filiform:7",
        "favre7",
    ] {
        out.push((name.to_string(), entry(name)?.algebra));
    }
    out.push(("k+favre7".into(), k_plus_favre7()?));
    Ok(out)
}

/// Validated extensions: standard extensions, the two counterexample algebras, and
/// `sl2 ⋉ Q²` split along its nilradical.
fn test_matrix() -> Result<Vec<(String, Extension)>, String> {
    let mut out = Vec::new();
    for (name, n) in matrix_nilpotents()? {
        out.push((
            format!("standard({name})"),
            standard_solvable_extension(&n).map_err(e)?,
        ));
    }
    let c = build_snobl_counterexample().map_err(e)?;
    out.push(("R1".into(), c.r1));
    out.push(("R2".into(), c.r2));
    out.push((
        "sl2_plane".into(),
        extension_of_nilradical(&entry("sl2_plane")?.algebra).map_err(e)?,
    ));
    Ok(out)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_lie-ext"))
        .args(["demo", "snobl", "--format", "json"])
        .output()
        .map_err(e)?;
    let secs = start.elapsed().as_secs_f64();
    ensure(out.status.success(), || {
        format!("exit status {}", out.status)
    })?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(e)?;
    let vals = &v["values"];
    let pair = |k: &str| -> Vec<u64> {
        vals[k]
            .as_array()
            .map(|a| a.iter().filter_map(Value::as_u64).collect())
            .unwrap_or_default()
    };
    ensure(pair("dim_R") == [9, 9], || {
        format!("dim R = {:?}", pair("dim_R"))
    })?;
    ensure(pair("dim_M") == [9, 10], || {
        format!("dim M = {:?}", pair("dim_M"))
    })?;
    ensure(pair("dim_Der") == [13, 12], || {
        format!("dim Der = {:?}", pair("dim_Der"))
    })?;
    ensure(vals["non_isomorphic"] == true, || {
        "fingerprints agree".into()
    })?;
    ensure(
        vals["fingerprints"]["R1"] != vals["fingerprints"]["R2"],
        || "fingerprint objects are equal".into(),
    )?;
    ensure(secs < 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!(
        "dim R 9/9, dim M 9/10, dim Der 13/12, non-isomorphic, {secs:.2}s"
    ))
}

fn criterion_2(matrix: &[(String, Extension)]) -> Outcome {
    for (name, ext) in matrix {
        let r = verify_rank_bound(ext).map_err(e)?;
        ensure(r.holds, || {
            format!(
                "{name}: toric rank {} > generators {}",
                r.toric_rank, r.generators
            )
        })?;
    }
    Ok(format!("{} extensions", matrix.len()))
}

/// Closed generator sets: one random derivation, or two random elements of a
/// maximal torus (which commute).
fn random_generator_sets(n: &LieAlgebra, rng: &mut SeededRng) -> Result<Vec<Vec<Mat>>, String> {
    let d = derivations(n);
    let t = maximal_torus(&d).map_err(e)?;
    let mut sets = Vec::new();
    for _ in 0..2 {
        sets.push(vec![d.element(&small_vector(rng, d.dim()))]);
    }
    sets.push(
        (0..2)
            .map(|_| t.element(&small_vector(rng, t.dim())))
            .collect(),
    );
    Ok(sets)
}

fn criterion_3(matrix: &[(String, Extension)]) -> Outcome {
    let mut checked = 0;
    for (name, ext) in matrix {
        if !ext.total.is_solvable() {
            continue;
        }
        let r = verify_rank_bound(ext).map_err(e)?;
        let (codim, holds) = r
            .solvable_bound
            .ok_or_else(|| format!("{name}: solvable bound not evaluated"))?;
        ensure(holds, || {
            format!("{name}: dim L/N = {codim} > {}", r.generators)
        })?;
        checked += 1;
    }
    // Random generator sets: accepted ones obey the bound, rejected ones really do
    // enlarge the nilradical.
    let mut rng = seeded_rng(3);
    let (mut accepted, mut rejected) = (0, 0);
    for (name, n) in matrix_nilpotents()? {
        let d = derivations(&n);
        let nilpotent_basis: Vec<Mat> = d
            .basis()
            .iter()
            .filter(|m| is_nilpotent(m).unwrap_or(false) && !m.is_zero())
            .cloned()
            .collect();
        let mut trials: Vec<Vec<Mat>> = nilpotent_basis
            .iter()
            .take(2)
            .map(|m| vec![m.clone()])
            .collect();
        trials.extend(random_generator_sets(&n, &mut rng)?);
        for gens in trials {
            match extend_by_derivations(&n, gens.clone()) {
                Ok(ext) => {
                    let r = verify_rank_bound(&ext).map_err(e)?;
                    let ok = r.solvable_bound.map(|b| b.1).unwrap_or(false);
                    ensure(ok, || {
                        format!("{name}: accepted extension violates the bound")
                    })?;
                    accepted += 1;
                }
                Err(Error::NilradicalMismatch { .. }) => {
                    let span = LinearLieAlgebra::spanned_by(&n, gens).map_err(e)?;
                    let raw = semidirect_sum(&span, &n).map_err(e)?;
                    let grown = nilradical(&raw.total).map_err(e)?.dim();
                    ensure(grown > n.dim(), || {
                        format!("{name}: rejected although the nilradical is N")
                    })?;
                    rejected += 1;
                }
                Err(other) => return Err(format!("{name}: {other}")),
            }
        }
        // Nilpotent derivations always enlarge the nilradical.
        for m in nilpotent_basis.iter().take(2) {
            let r = extend_by_derivations(&n, vec![m.clone()]);
            ensure(matches!(r, Err(Error::NilradicalMismatch { .. })), || {
                format!("{name}: nilpotent derivation accepted")
            })?;
        }
    }
    ensure(accepted > 0 && rejected > 0, || {
        format!("degenerate sample: {accepted} accepted, {rejected} rejected")
    })?;
    Ok(format!(
        "{checked} solvable extensions; {accepted} accepted and {rejected} rejected random generator sets"
    ))
}

fn criterion_4() -> Outcome {
    let k = LieAlgebra::abelian(1);
    let cases = [
        ("(k, h3)", entry("heisenberg:3")?.algebra, 10),
        ("(k, favre7)", entry("favre7")?.algebra, 15),
        ("(k, k)", LieAlgebra::abelian(1), 4),
    ];
    let mut parts = Vec::new();
    for (name, b, oracle) in cases {
        let r = togo_dim_check(&k, &b);
        ensure(r.holds && r.der_sum == r.predicted(), || {
            format!(
                "{name}: Der = {} but formula gives {}",
                r.der_sum,
                r.predicted()
            )
        })?;
        ensure(r.der_sum == oracle, || {
            format!("{name}: Der = {}, expected {oracle}", r.der_sum)
        })?;
        parts.push(format!("{name} = {}", r.der_sum));
    }
    Ok(parts.join(", "))
}

fn random_rational_matrix(rng: &mut SeededRng, n: usize) -> Mat {
    let num = small_vector(rng, n * n);
    let den = small_vector(rng, n * n);
    let data = num
        .into_iter()
        .zip(den)
        // denominators in 1..=7
        .map(|(a, b)| a / (int(4) + b))
        .collect();
    Mat::from_vec(n, n, data)
}

fn criterion_5() -> Outcome {
    let mut rng = seeded_rng(5);
    for t in 0..100 {
        let m = random_rational_matrix(&mut rng, 5);
        let jc = jordan_chevalley(&m).map_err(e)?;
        let (s, n) = (&jc.semisimple, &jc.nilpotent);
        ensure((s + n) == m, || format!("matrix {t}: s + n != m"))?;
        ensure((s * n) == (n * s), || {
            format!("matrix {t}: s and n do not commute")
        })?;
        ensure(n.pow(5).is_zero(), || format!("matrix {t}: n^5 != 0"))?;
        ensure(minpoly(s).map_err(e)?.is_squarefree(), || {
            format!("matrix {t}: minimal polynomial of s is not squarefree")
        })?;
        ensure(jc.witness.eval_mat(&m) == *s, || {
            format!("matrix {t}: witness p(m) != s")
        })?;
    }
    Ok("100 matrices, 5 postconditions each".into())
}

/// Dimension of the Leibniz solution space of `[x1, x2] = x3`, by elimination on the
/// explicitly written 9-unknown system.
fn dense_der_h3() -> usize {
    // Unknowns d[r][c] at r * 3 + c, D e_c = sum_r d[r][c] e_r. The only nonzero
    // bracket is [e1, e2] = e3; write D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] for
    // all i < j, component by component.
    let br = |i: usize, j: usize| -> [i64; 3] {
        match (i, j) {
            (0, 1) => [0, 0, 1],
            (1, 0) => [0, 0, -1],
            _ => [0, 0, 0],
        }
    };
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            for k in 0..3 {
                let mut row = vec![int(0); 9];
                for (r, c) in br(i, j).iter().enumerate() {
                    row[k * 3 + r] += int(*c);
                }
                for m in 0..3 {
                    row[m * 3 + i] -= int(br(m, j)[k]);
                    row[m * 3 + j] -= int(br(i, m)[k]);
                }
                rows.push(row);
            }
        }
    }
    let mut rank = 0;
    for col in 0..9 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != int(0)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != int(0) {
                let f = row[col].clone() / pivot[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        rank += 1;
    }
    9 - rank
}

fn criterion_6() -> Outcome {
    for n in 1..=5 {
        let d = derivations(&LieAlgebra::abelian(n)).dim();
        ensure(d == n * n, || format!("Der(abelian {n}) = {d}"))?;
    }
    let oracle = dense_der_h3();
    let computed = derivations(&entry("heisenberg:3")?.algebra).dim();
    ensure(oracle == 6 && computed == 6, || {
        format!("Der(h3): solver {computed}, dense oracle {oracle}")
    })?;
    let mut count = 0;
    for (name, l) in catalog_nilpotents()? {
        for m in derivations(&l).basis() {
            let jc = jordan_chevalley(m).map_err(e)?;
            for part in [&jc.semisimple, &jc.nilpotent] {
                ensure(leibniz_violation(&l, part).is_none(), || {
                    format!("{name}: a Jordan part of a derivation is not a derivation")
                })?;
            }
            count += 1;
        }
    }
    Ok(format!(
        "Der(h3) = 6 by both methods; {count} derivations split"
    ))
}

fn criterion_7(matrix: &[(String, Extension)]) -> Outcome {
    let r2 = entry("r2")?.algebra;
    let y = Subspace::coordinate_span(2, [1]);
    ensure(nilradical(&r2).map_err(e)? == y, || {
        "nilradical(r2) != span{y}".into()
    })?;

    for (name, n) in catalog_nilpotents()? {
        let ext = standard_solvable_extension(&n).map_err(e)?;
        let nil = nilradical(&ext.total).map_err(e)?;
        ensure(nil == ext.nilideal && nil.dim() == n.dim(), || {
            format!("{name}: nilradical of the standard extension is not N")
        })?;
    }

    let sl2_plane = entry("sl2_plane")?.algebra;
    let plane = Subspace::coordinate_span(5, [3, 4]);
    ensure(nilradical(&sl2_plane).map_err(e)? == plane, || {
        "nilradical(sl2 ⋉ Q²) != Q²".into()
    })?;

    let mut rng = seeded_rng(7);
    let mut solvable = 0;
    for (name, ext) in matrix {
        let l = &ext.total;
        if !l.is_solvable() {
            continue;
        }
        solvable += 1;
        let nil = nilradical(l).map_err(e)?;
        let mut samples: Vec<Vec<Rat>> = (0..50).map(|_| small_vector(&mut rng, l.dim())).collect();
        // also elements of the nilradical itself, so both directions get exercised
        samples.extend((0..10).map(|_| nil.combine(&small_vector(&mut rng, nil.dim()))));
        for x in samples {
            let ad_nil = is_nilpotent(&l.ad(&x)).map_err(e)?;
            ensure(ad_nil == nil.contains(&x), || {
                format!("{name}: ad-nilpotency and membership disagree at {x:?}")
            })?;
        }
    }
    Ok(format!(
        "r2, sl2 ⋉ Q², standard extensions, {solvable} solvable algebras sampled"
    ))
}

fn criterion_8() -> Outcome {
    let n = entry("favre7")?.algebra;
    ensure(is_characteristically_nilpotent(&n).map_err(e)?, || {
        "favre7 is not characteristically nilpotent".into()
    })?;
    let t = maximal_torus(&derivations(&n)).map_err(e)?;
    ensure(t.dim() == 0, || {
        format!("maximal torus has dimension {}", t.dim())
    })?;
    let ext = standard_solvable_extension(&n).map_err(e)?;
    ensure(ext.total.dim() == 7 && ext.complement.is_zero(), || {
        format!("standard extension has dimension {}", ext.total.dim())
    })?;
    ensure(ext.total == n, || {
        "standard extension differs from favre7".into()
    })?;
    Ok("Der nilpotent, torus 0, standard extension is favre7".into())
}

fn random_invertible(rng: &mut SeededRng, n: usize) -> Mat {
    loop {
        let m = Mat::from_vec(n, n, small_vector(rng, n * n));
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn criterion_9(matrix: &[(String, Extension)]) -> Outcome {
    let r2 = build_snobl_counterexample().map_err(e)?.r2.total;
    let mut rng = seeded_rng(9);
    let mut versions = vec![r2.clone()];
    for _ in 0..2 {
        let p = random_invertible(&mut rng, r2.dim());
        versions.push(r2.change_basis(&p).map_err(e)?);
    }
    for (i, l) in versions.iter().enumerate() {
        let m = malcev_split_solvable(l).map_err(e)?.m.dim();
        ensure(m == 10, || format!("basis {i}: dim M = {m}"))?;
    }
    let mut count = 0;
    for (name, ext) in matrix {
        if !ext.total.is_solvable() {
            continue;
        }
        let s = malcev_split_solvable(&ext.total).map_err(e)?;
        let again = malcev_split_solvable(&s.m).map_err(e)?;
        ensure(again.added_dim == 0, || {
            format!("{name}: splitting its splitting adds {}", again.added_dim)
        })?;
        count += 1;
    }
    Ok(format!(
        "dim M = 10 in 3 bases; idempotent on {count} algebras"
    ))
}

fn criterion_10() -> Outcome {
    let list = catalog_nilpotents()?;
    for (name, n) in &list {
        let complement = n.derived_algebra().complement();
        let generated = n.generated_subalgebra(&complement).map_err(e)?;
        ensure(generated.is_full(), || {
            format!(
                "{name}: generated subalgebra has dimension {}",
                generated.dim()
            )
        })?;
    }
    Ok(format!("{} nilpotent algebras", list.len()))
}

fn main() -> ExitCode {
    let matrix = match test_matrix() {
        Ok(m) => m,
        Err(err) => {
            println!("cannot build the test matrix: {err}");
            return ExitCode::FAILURE;
        }
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("counterexample reproduction", criterion_1()),
        ("toric rank bound", criterion_2(&matrix)),
        ("solvable codimension bound", criterion_3(&matrix)),
        ("direct sum derivation formula", criterion_4()),
        ("Jordan-Chevalley postconditions", criterion_5()),
        ("derivation solver oracles", criterion_6()),
        ("nilradical oracles", criterion_7(&matrix)),
        ("characteristic nilpotency", criterion_8()),
        ("splitting invariance", criterion_9(&matrix)),
        ("generation lemma", criterion_10()),
    ];
    let mut failed = 0;
    for (i, (title, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria pass", results.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria fail", results.len());
        ExitCode::FAILURE
    }
}
