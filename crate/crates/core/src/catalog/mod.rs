//! Named Lie algebras with their known invariants, the two-extension counterexample,
//! and the JSON file format.

mod format;
mod snobl;

use serde::{Deserialize, Serialize};

pub use format::{from_json_str, load, store, to_json_string, to_json_value};
pub use snobl::{build_snobl_counterexample, SnoblCertificates, SnoblCounterexample};

use crate::error::{Error, Result};
use crate::exactlin::{int, is_nilpotent, unit_vector, Mat};
use crate::liecore::{semidirect_sum, Bracket, LieAlgebra, SeriesKind};
use crate::structure::{
    derivations, is_characteristically_nilpotent, maximal_torus, nilradical, LinearLieAlgebra,
};

/// Bundled copy of the seven-dimensional characteristically nilpotent algebra.
const FAVRE7_JSON: &str = include_str!("../../data/favre7.json");

/// Environment variable naming a directory whose `favre7.json` replaces the bundled one.
pub const DATA_DIR_ENV: &str = "LIE_EXT_DATA_DIR";

/// Known invariants; each field that is present is a hard check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedInvariants {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub der_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived_algebra_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_central_dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived_dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilradical_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristically_nilpotent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub expected: ExpectedInvariants,
}

fn check<T: PartialEq + std::fmt::Debug>(
    field: &str,
    expected: &Option<T>,
    computed: impl FnOnce() -> Result<T>,
) -> Result<()> {
    let Some(e) = expected else { return Ok(()) };
    let c = computed()?;
    if &c != e {
        return Err(Error::InvariantMismatch {
            field: field.to_string(),
            expected: format!("{e:?}"),
            computed: format!("{c:?}"),
        });
    }
    Ok(())
}

impl CatalogEntry {
    /// Jacobi identity, then every recorded invariant.
    pub fn validate(&self) -> Result<()> {
        let l = &self.algebra;
        l.validate()?;
        let x = &self.expected;
        check("center_dim", &x.center_dim, || Ok(l.center().dim()))?;
        check("derived_algebra_dim", &x.derived_algebra_dim, || {
            Ok(l.derived_algebra().dim())
        })?;
        check("lower_central_dims", &x.lower_central_dims, || {
            Ok(l.series_dims(SeriesKind::LowerCentral))
        })?;
        check("derived_dims", &x.derived_dims, || {
            Ok(l.series_dims(SeriesKind::Derived))
        })?;
        check("nilradical_dim", &x.nilradical_dim, || {
            Ok(nilradical(l)?.dim())
        })?;
        check("der_dim", &x.der_dim, || Ok(derivations(l).dim()))?;
        check("torus_dim", &x.torus_dim, || {
            Ok(maximal_torus(&derivations(l))?.dim())
        })?;
        check(
            "characteristically_nilpotent",
            &x.characteristically_nilpotent,
            || is_characteristically_nilpotent(l),
        )?;
        Ok(())
    }
}

/// Names accepted by [`get`]; parametrized families take `name:param`.
pub const NAMES: &[&str] = &[
    "abelian:n",
    "heisenberg:2k+1",
    "filiform:n",
    "favre7",
    "r2",
    "sl2",
    "sl2_plane",
    "so2_torus_extension",
    "diagonal_torus_extension",
];

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn param(name: &str, p: Option<&str>) -> Result<usize> {
    let p = p.ok_or_else(|| Error::InvalidParams {
        name: name.to_string(),
        reason: "a parameter is required, e.g. name:3".into(),
    })?;
    p.parse().map_err(|_| Error::InvalidParams {
        name: name.to_string(),
        reason: format!("{p:?} is not a non-negative integer"),
    })
}

fn no_param(name: &str, p: Option<&str>) -> Result<()> {
    match p {
        None => Ok(()),
        Some(p) => Err(Error::InvalidParams {
            name: name.to_string(),
            reason: format!("takes no parameter, got {p:?}"),
        }),
    }
}

/// Looks up `name` or `name:param`, builds the algebra and validates it.
pub fn get(spec: &str) -> Result<CatalogEntry> {
    let (name, p) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let entry = match name {
        "abelian" => abelian(param(name, p)?),
        "heisenberg" => heisenberg(param(name, p)?)?,
        "filiform" => filiform(param(name, p)?)?,
        "favre7" => {
            no_param(name, p)?;
            return favre7();
        }
        "r2" => {
            no_param(name, p)?;
            r2()
        }
        "sl2" => {
            no_param(name, p)?;
            sl2()
        }
        "sl2_plane" => {
            no_param(name, p)?;
            sl2_plane()
        }
        "so2_torus_extension" => {
            no_param(name, p)?;
            plane_extension(
                name,
                vec![Mat::from_i64(2, 2, &[0, 1, -1, 0]), Mat::identity(2)],
            )?
        }
        "diagonal_torus_extension" => {
            no_param(name, p)?;
            plane_extension(
                name,
                vec![
                    Mat::from_i64(2, 2, &[1, 0, 0, 0]),
                    Mat::from_i64(2, 2, &[0, 0, 0, 1]),
                ],
            )?
        }
        _ => return Err(Error::UnknownEntry(spec.to_string())),
    };
    entry.validate()?;
    Ok(entry)
}

pub fn abelian(n: usize) -> CatalogEntry {
    let lcs = if n == 0 { vec![0] } else { vec![n, 0] };
    CatalogEntry {
        name: format!("abelian:{n}"),
        algebra: LieAlgebra::with_labels(labels("e", n)),
        expected: ExpectedInvariants {
            der_dim: Some(n * n),
            center_dim: Some(n),
            lower_central_dims: Some(lcs),
            torus_dim: Some(n),
            ..Default::default()
        },
    }
}

/// `[x_i, y_i] = z` on the basis `x_1..x_k, y_1..y_k, z`.
pub fn heisenberg(dim: usize) -> Result<CatalogEntry> {
    if dim < 3 || dim.is_multiple_of(2) {
        return Err(Error::InvalidParams {
            name: "heisenberg".into(),
            reason: format!("dimension must be odd and at least 3, got {dim}"),
        });
    }
    let k = (dim - 1) / 2;
    let mut names = labels("x", k);
    names.extend(labels("y", k));
    names.push("z".into());
    let brackets = (0..k).map(|i| (i, k + i, vec![(2 * k, int(1))])).collect();
    Ok(CatalogEntry {
        name: format!("heisenberg:{dim}"),
        algebra: LieAlgebra::from_brackets(names, brackets)?,
        expected: ExpectedInvariants {
            // csp(2k) plus the maps into the center
            der_dim: Some(2 * k * k + k + 1 + 2 * k),
            center_dim: Some(1),
            lower_central_dims: Some(vec![dim, 1, 0]),
            torus_dim: Some(k + 1),
            ..Default::default()
        },
    })
}

/// The standard graded filiform algebra `[e_1, e_i] = e_{i+1}`, `2 ≤ i < n`.
pub fn filiform(n: usize) -> Result<CatalogEntry> {
    if n < 3 {
        return Err(Error::InvalidParams {
            name: "filiform".into(),
            reason: format!("dimension must be at least 3, got {n}"),
        });
    }
    let brackets = (1..n - 1).map(|i| (0, i, vec![(i + 1, int(1))])).collect();
    let mut lcs = vec![n];
    lcs.extend((0..=n - 2).rev());
    Ok(CatalogEntry {
        name: format!("filiform:{n}"),
        algebra: LieAlgebra::from_brackets(labels("e", n), brackets)?,
        expected: ExpectedInvariants {
            center_dim: Some(1),
            lower_central_dims: Some(lcs),
            torus_dim: Some(2),
            ..Default::default()
        },
    })
}

pub fn r2() -> CatalogEntry {
    CatalogEntry {
        name: "r2".into(),
        algebra: LieAlgebra::from_brackets(
            vec!["x".into(), "y".into()],
            vec![(0, 1, vec![(1, int(1))])],
        )
        .expect("literal"),
        expected: ExpectedInvariants {
            der_dim: Some(2),
            center_dim: Some(0),
            derived_dims: Some(vec![2, 1, 0]),
            nilradical_dim: Some(1),
            ..Default::default()
        },
    }
}

fn sl2_brackets() -> Vec<Bracket> {
    // basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
    vec![
        (0, 1, vec![(2, int(1))]),
        (2, 0, vec![(0, int(2))]),
        (2, 1, vec![(1, int(-2))]),
    ]
}

pub fn sl2() -> CatalogEntry {
    CatalogEntry {
        name: "sl2".into(),
        algebra: LieAlgebra::from_brackets(
            vec!["e".into(), "f".into(), "h".into()],
            sl2_brackets(),
        )
        .expect("literal"),
        expected: ExpectedInvariants {
            der_dim: Some(3),
            center_dim: Some(0),
            derived_dims: Some(vec![3]),
            nilradical_dim: Some(0),
            ..Default::default()
        },
    }
}

/// `sl2 ⋉ Q^2` with the natural action on `v1, v2`.
pub fn sl2_plane() -> CatalogEntry {
    let mut b = sl2_brackets();
    b.push((0, 4, vec![(3, int(1))]));
    b.push((1, 3, vec![(4, int(1))]));
    b.push((2, 3, vec![(3, int(1))]));
    b.push((2, 4, vec![(4, int(-1))]));
    let names = ["e", "f", "h", "v1", "v2"].map(String::from).to_vec();
    CatalogEntry {
        name: "sl2_plane".into(),
        algebra: LieAlgebra::from_brackets(names, b).expect("literal"),
        expected: ExpectedInvariants {
            center_dim: Some(0),
            nilradical_dim: Some(2),
            ..Default::default()
        },
    }
}

fn plane_extension(name: &str, mats: Vec<Mat>) -> Result<CatalogEntry> {
    let plane = LieAlgebra::with_labels(vec!["v1".into(), "v2".into()]);
    let d = LinearLieAlgebra::new(&plane, mats)?;
    let total = semidirect_sum(&d, &plane)?.total;
    Ok(CatalogEntry {
        name: name.to_string(),
        algebra: total,
        expected: ExpectedInvariants {
            nilradical_dim: Some(2),
            derived_algebra_dim: Some(2),
            ..Default::default()
        },
    })
}

/// The bundled seven-dimensional characteristically nilpotent algebra, read from
/// `$LIE_EXT_DATA_DIR/favre7.json` when that variable is set.
///
/// Besides the recorded invariants, the entry must pass the gate: derivation
/// algebra nilpotent, every derivation a nilpotent matrix, one-dimensional center
/// spanned by the last basis vector, and first basis vector outside `[N, N]`.
pub fn favre7() -> Result<CatalogEntry> {
    let entry = match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => load(&std::path::Path::new(&dir).join("favre7.json"))?,
        None => from_json_str(FAVRE7_JSON)?,
    };
    favre7_gate(&entry.algebra)?;
    Ok(entry)
}

fn favre7_gate(l: &LieAlgebra) -> Result<()> {
    let fail = |detail: &str| Error::Contract {
        operation: "favre7 gate",
        detail: detail.to_string(),
    };
    let n = l.dim();
    if n != 7 {
        return Err(fail("dimension is not 7"));
    }
    if !is_characteristically_nilpotent(l)? {
        return Err(fail("derivation algebra is not nilpotent"));
    }
    for m in derivations(l).basis() {
        if !is_nilpotent(m)? {
            return Err(fail("a derivation is not a nilpotent matrix"));
        }
    }
    let z = l.center();
    if z.dim() != 1 || !z.contains(&unit_vector(n, n - 1)) {
        return Err(fail("center is not spanned by the last basis vector"));
    }
    if l.derived_algebra().contains(&unit_vector(n, 0)) {
        return Err(fail("first basis vector lies in [N, N]"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_named_entry_builds() {
        for spec in [
            "abelian:3",
            "heisenberg:3",
            "heisenberg:5",
            "filiform:4",
            "filiform:6",
            "favre7",
            "r2",
            "sl2",
            "sl2_plane",
            "so2_torus_extension",
            "diagonal_torus_extension",
        ] {
            let e = get(spec).unwrap_or_else(|err| panic!("{spec}: {err}"));
            assert!(e.algebra.verify_structure().is_valid());
        }
    }

    #[test]
    fn lookup_errors() {
        assert!(matches!(get("nosuch"), Err(Error::UnknownEntry(_))));
        assert!(matches!(
            get("heisenberg:4"),
            Err(Error::InvalidParams { .. })
        ));
        assert!(matches!(get("abelian"), Err(Error::InvalidParams { .. })));
        assert!(matches!(get("abelian:x"), Err(Error::InvalidParams { .. })));
        assert!(matches!(get("r2:3"), Err(Error::InvalidParams { .. })));
    }

    #[test]
    fn filiform4_series() {
        let e = get("filiform:4").unwrap();
        assert_eq!(
            e.algebra.series_dims(SeriesKind::LowerCentral),
            vec![4, 2, 1, 0]
        );
    }

    #[test]
    fn torus_extensions_of_plane() {
        for name in ["so2_torus_extension", "diagonal_torus_extension"] {
            let e = get(name).unwrap();
            assert_eq!(e.algebra.dim(), 4);
            assert_eq!(nilradical(&e.algebra).unwrap().dim(), 2);
        }
    }

    #[test]
    fn wrong_expectation_is_reported() {
        let mut e = heisenberg(3).unwrap();
        e.expected.der_dim = Some(7);
        let err = e.validate().unwrap_err();
        assert!(err.to_string().contains("expected 7, computed 6"), "{err}");
    }
}
