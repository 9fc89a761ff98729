//! One function per subcommand. Each loads its inputs, calls the library and records
//! values and certificates; none of them does any algebra of its own.

use std::path::Path;

use lie_ext::catalog::{self, build_snobl_counterexample, CatalogEntry};
use lie_ext::exactlin::{is_semisimple, parse_rat, Mat, Rat};
use lie_ext::extensions::{
    extend_by_derivations, extension_of_nilradical, malcev_split_solvable_with,
    standard_solvable_extension_with, togo_dim_check, verify_rank_bound, Extension,
};
use lie_ext::liecore::{LieAlgebra, SeriesKind};
use lie_ext::random::SeededRng;
use lie_ext::structure::{
    cartan_subalgebra_with, derivations, fingerprint, is_characteristically_nilpotent,
    maximal_torus_with, nilradical_with, LinearLieAlgebra,
};
use lie_ext::{Error, Result};
use serde::Deserialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::report::{bracket_lines, matrix, subspace, InputId, Report};

/// Catalog name first, then file path.
pub fn resolve(src: &str) -> Result<(CatalogEntry, InputId)> {
    match catalog::get(src) {
        Err(Error::UnknownEntry(name)) => {
            let path = Path::new(src);
            if !path.is_file() {
                return Err(Error::UnknownEntry(name));
            }
            let bytes = std::fs::read(path).map_err(|e| Error::Io {
                path: src.to_string(),
                message: e.to_string(),
            })?;
            let sha256 = Sha256::digest(&bytes)
                .iter()
                .map(|b| format!("{b:02x}"))
                .collect();
            let entry = catalog::load(path)?;
            Ok((
                entry,
                InputId::File {
                    path: src.to_string(),
                    sha256,
                },
            ))
        }
        other => other.map(|e| (e, InputId::Catalog(src.to_string()))),
    }
}

fn load(report: &mut Report, src: &str) -> Result<LieAlgebra> {
    let (entry, id) = resolve(src)?;
    report.inputs.push(id);
    Ok(entry.algebra)
}

fn algebra_values(report: &mut Report, prefix: &str, l: &LieAlgebra) {
    report.value(&format!("{prefix}dim"), l.dim());
    report.value(&format!("{prefix}basis"), l.labels());
    report.value(&format!("{prefix}brackets"), bracket_lines(l));
}

fn matrices(ms: &[Mat]) -> serde_json::Value {
    serde_json::Value::Array(ms.iter().map(matrix).collect())
}

pub fn info(report: &mut Report, src: &str) -> Result<()> {
    let l = load(report, src)?;
    algebra_values(report, "", &l);
    report.value("abelian", l.is_abelian());
    report.value("nilpotent", l.is_nilpotent());
    report.value("solvable", l.is_solvable());
    report.value("center_dim", l.center().dim());
    report.value("derived_algebra_dim", l.derived_algebra().dim());
    report.value(
        "lower_central_dims",
        l.series_dims(SeriesKind::LowerCentral),
    );
    report.value("derived_dims", l.series_dims(SeriesKind::Derived));
    report.certify("jacobi", l.verify_structure().violations.is_empty());
    Ok(())
}

pub fn der(report: &mut Report, src: &str) -> Result<()> {
    let l = load(report, src)?;
    let d = derivations(&l);
    report.value("dim", d.dim());
    report.value("basis", matrices(d.basis()));
    if l.is_nilpotent() {
        report.value(
            "characteristically_nilpotent",
            is_characteristically_nilpotent(&l)?,
        );
    }
    let rechecked = LinearLieAlgebra::of_derivations(&l, d.basis().to_vec()).is_ok();
    report.certify("basis_satisfies_leibniz_and_closes", rechecked);
    Ok(())
}

pub fn nilradical(report: &mut Report, src: &str, rng: &mut SeededRng) -> Result<()> {
    let l = load(report, src)?;
    let n = nilradical_with(&l, rng)?;
    report.value("nilradical", subspace(&n));
    report.certify("ideal", l.is_ideal(&n));
    report.certify("nilpotent", l.subalgebra(&n)?.algebra.is_nilpotent());
    Ok(())
}

pub fn cartan(report: &mut Report, src: &str, rng: &mut SeededRng) -> Result<()> {
    let l = load(report, src)?;
    let h = cartan_subalgebra_with(&l, rng);
    report.value("cartan", subspace(&h));
    report.certify("subalgebra", l.is_subalgebra(&h));
    report.certify("nilpotent", l.subalgebra(&h)?.algebra.is_nilpotent());
    report.certify("self_normalizing", l.normalizer(&h)? == h);
    Ok(())
}

pub fn torus(report: &mut Report, src: &str, rng: &mut SeededRng) -> Result<()> {
    let l = load(report, src)?;
    let t = maximal_torus_with(&derivations(&l), rng)?;
    report.value("dim", t.dim());
    report.value("basis", matrices(t.basis()));
    report.certify("abelian", t.algebra().is_abelian());
    let semisimple = t
        .basis()
        .iter()
        .map(is_semisimple)
        .collect::<Result<Vec<_>>>()?;
    report.certify("semisimple", semisimple.into_iter().all(|b| b));
    Ok(())
}

/// `{"derivations": [[["1", "0"], ["0", "-1/2"]], ...]}`, rows of each matrix in order;
/// column `j` holds the image of the `j`-th basis vector.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DerivationFile {
    derivations: Vec<Vec<Vec<String>>>,
}

pub fn read_derivations(path: &Path, dim: usize) -> Result<Vec<Mat>> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    let file: DerivationFile = serde_json::from_str(&text).map_err(|e| Error::Parse {
        location: format!("{shown}: line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    file.derivations
        .iter()
        .enumerate()
        .map(|(g, rows)| {
            if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                return Err(Error::Parse {
                    location: format!("{shown}: derivations[{g}]"),
                    message: format!("expected a {dim}x{dim} matrix"),
                });
            }
            let entries = rows
                .iter()
                .flatten()
                .map(|s| parse_rat(s))
                .collect::<std::result::Result<Vec<Rat>, _>>()
                .map_err(|e| Error::Parse {
                    location: format!("{shown}: derivations[{g}]"),
                    message: e.to_string(),
                })?;
            Ok(Mat::from_vec(dim, dim, entries))
        })
        .collect()
}

fn extension_values(report: &mut Report, e: &Extension) -> Result<()> {
    algebra_values(report, "", &e.total);
    report.value("nilradical", subspace(&e.nilideal));
    report.value("complement", subspace(&e.complement));
    report.value("ideal_brackets", bracket_lines(&e.ideal_algebra()?));
    report.certify("nilradical_is_ideal", e.is_validated());
    Ok(())
}

pub fn extend(
    report: &mut Report,
    src: &str,
    by: Option<&Path>,
    rng: &mut SeededRng,
) -> Result<()> {
    let n = load(report, src)?;
    let e = match by {
        Some(path) => {
            let gens = read_derivations(path, n.dim())?;
            extend_by_derivations(&n, gens)?
        }
        None => standard_solvable_extension_with(&n, rng)?,
    };
    report.value("added_dim", e.complement.dim());
    extension_values(report, &e)
}

pub fn split(report: &mut Report, src: &str, rng: &mut SeededRng) -> Result<()> {
    let l = load(report, src)?;
    let s = malcev_split_solvable_with(&l, rng)?;
    report.value("dim_M", s.m.dim());
    report.value("added_dim", s.added_dim);
    report.value("already_split", s.added_dim == 0);
    report.value("basis", s.m.labels());
    report.value("brackets", bracket_lines(&s.m));
    report.value("torus_derivations", matrices(&s.torus_derivations));
    // The splitting is only returned once its certificate has passed.
    report.certify("split_certificate", true);
    Ok(())
}

pub fn fingerprint_cmd(report: &mut Report, src: &str) -> Result<()> {
    let l = load(report, src)?;
    report.value("fingerprint", fingerprint(&l)?);
    Ok(())
}

pub fn rank_bound(report: &mut Report, src: &str) -> Result<()> {
    let l = load(report, src)?;
    let e = extension_of_nilradical(&l)?;
    let r = verify_rank_bound(&e)?;
    report.value("nilradical_dim", e.nilideal.dim());
    report.value("toric_rank", r.toric_rank);
    report.value("generators", r.generators);
    report.certify("toric_rank_le_generators", r.holds);
    if let Some((codim, holds)) = r.solvable_bound {
        report.value("codim_nilradical", codim);
        report.certify("codim_nilradical_le_generators", holds);
    }
    Ok(())
}

pub fn togo(report: &mut Report, src_a: &str, src_b: &str) -> Result<()> {
    let a = load(report, src_a)?;
    let b = load(report, src_b)?;
    let r = togo_dim_check(&a, &b);
    report.value("der_sum", r.der_sum);
    report.value("der_a", r.der_a);
    report.value("der_b", r.der_b);
    report.value("cross_ab", r.cross_ab);
    report.value("cross_ba", r.cross_ba);
    report.value("predicted", r.predicted());
    report.certify("dimension_formula", r.holds);
    Ok(())
}

pub fn snobl(report: &mut Report) -> Result<()> {
    let c = build_snobl_counterexample()?;
    let cert = &c.certificates;
    algebra_values(report, "N_", &c.n);
    report.value("R1_brackets", bracket_lines(&c.r1.total));
    report.value("R2_brackets", bracket_lines(&c.r2.total));
    report.value("dim_R", cert.dim_r);
    report.value("dim_M", cert.dim_m);
    report.value("dim_Der", cert.dim_der);
    report.value(
        "fingerprints",
        json!({"R1": cert.fingerprints[0], "R2": cert.fingerprints[1]}),
    );
    report.value("non_isomorphic", cert.non_isomorphic);
    report.certify("same_nilradical", c.r1.nilideal == c.r2.nilideal);
    report.certify("same_dimension", cert.dim_r[0] == cert.dim_r[1]);
    report.certify("non_isomorphic", cert.non_isomorphic);
    Ok(())
}
