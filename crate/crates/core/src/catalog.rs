//! Built-in Lie algebras.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::poly::{default_names, parse_rational};
use crate::Rational;

pub struct CatalogInfo {
    pub key: &'static str,
    pub description: &'static str,
}

pub fn catalog_entries() -> Vec<CatalogInfo> {
    vec![
        CatalogInfo {
            key: "L:n",
            description: "standard filiform, [v1, vi] = v(i+1) for 1 < i < n (n >= 3)",
        },
        CatalogInfo {
            key: "panyushev",
            description: "[v1,v2] = v2, [v1,v3] = v3, [v1,v4] = -v4",
        },
        CatalogInfo {
            key: "example32",
            description: "[v1,v2] = v2 + v3, [v1,v3] = v3 (ad v1 is a Jordan block)",
        },
        CatalogInfo {
            key: "heisenberg:P",
            description: "Heisenberg algebra on W + W* + kc extended by t acting as (p, -p*); \
                          P is the matrix p, rows separated by ';' and entries by ',', e.g. heisenberg:0,1;0,0",
        },
        CatalogInfo {
            key: "sl2",
            description: "[h,e] = 2e, [h,f] = -2f, [e,f] = h",
        },
        CatalogInfo {
            key: "abelian:n",
            description: "n-dimensional abelian",
        },
        CatalogInfo {
            key: "nonabelian2",
            description: "two-dimensional non-abelian, [v1,v2] = v2",
        },
    ]
}

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// `L(n)`: `[v_1, v_i] = v_{i+1}` for `1 < i < n`.
pub fn filiform(n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("L:n needs n >= 3, got {n}")));
    }
    let data: Vec<_> = (1..n - 1).map(|i| (0, i, vec![(i + 1, q(1))])).collect();
    LieAlgebra::from_sparse(format!("L:{n}"), default_names(n), &data)
}

/// Four-dimensional algebra whose semi-center is generated by proper
/// semi-invariants of total degree 3 while its invariants need degree 4.
pub fn panyushev() -> LieAlgebra {
    LieAlgebra::from_sparse(
        "panyushev",
        default_names(4),
        &[
            (0, 1, vec![(1, q(1))]),
            (0, 2, vec![(2, q(1))]),
            (0, 3, vec![(3, q(-1))]),
        ],
    )
    .expect("valid")
}

/// Three-dimensional solvable algebra where `ad v1` is a single Jordan block.
pub fn jordan_block_extension() -> LieAlgebra {
    LieAlgebra::from_sparse(
        "example32",
        default_names(3),
        &[(0, 1, vec![(1, q(1)), (2, q(1))]), (0, 2, vec![(2, q(1))])],
    )
    .expect("valid")
}

pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_sparse(
        "sl2",
        names(&["h", "e", "f"]),
        &[
            (0, 1, vec![(1, q(2))]),
            (0, 2, vec![(2, q(-2))]),
            (1, 2, vec![(0, q(1))]),
        ],
    )
    .expect("valid")
}

pub fn nonabelian2() -> LieAlgebra {
    LieAlgebra::from_sparse("nonabelian2", default_names(2), &[(0, 1, vec![(1, q(1))])]).expect("valid")
}

/// Heisenberg algebra on `W + W* + kc` with `[phi_j, w_i] = delta_ij c`,
/// extended by `t` acting as the derivation `(p, -p*)`, where
/// `p(w_j) = sum_i p_ij w_i`. Basis order: `w1..wm, phi1..phim, c, t`.
pub fn heisenberg(p: &Matrix) -> Result<LieAlgebra> {
    if !p.is_square() || p.rows() == 0 {
        return Err(Error::InvalidInput("heisenberg needs a nonempty square matrix".into()));
    }
    let m = p.rows();
    let (c, t) = (2 * m, 2 * m + 1);
    let mut basis: Vec<String> = (1..=m).map(|i| format!("w{i}")).collect();
    basis.extend((1..=m).map(|i| format!("phi{i}")));
    basis.push("c".into());
    basis.push("t".into());
    let mut data = Vec::new();
    for i in 0..m {
        // [w_i, phi_i] = -c
        data.push((i, m + i, vec![(c, q(-1))]));
    }
    for j in 0..m {
        let w_img: Vec<_> = (0..m)
            .filter(|&i| !num_traits::Zero::is_zero(p.get(i, j)))
            .map(|i| (i, p.get(i, j).clone()))
            .collect();
        if !w_img.is_empty() {
            data.push((t, j, w_img));
        }
        // p*(phi_j) = sum_k p_jk phi_k
        let phi_img: Vec<_> = (0..m)
            .filter(|&k| !num_traits::Zero::is_zero(p.get(j, k)))
            .map(|k| (m + k, -p.get(j, k).clone()))
            .collect();
        if !phi_img.is_empty() {
            data.push((t, m + j, phi_img));
        }
    }
    let label = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| crate::poly::format_rational(p.get(i, j)))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";");
    LieAlgebra::from_sparse(format!("heisenberg:{label}"), basis, &data)
}

fn parse_usize(param: Option<&str>, what: &str) -> Result<usize> {
    let p = param.ok_or_else(|| Error::InvalidInput(format!("{what} needs a parameter, e.g. {what}:4")))?;
    p.trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("{what}: expected a positive integer, got {p:?}")))
}

fn parse_matrix(s: &str) -> Result<Matrix> {
    let rows: Vec<Vec<Rational>> = s
        .split(';')
        .map(|row| row.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let m = rows.len();
    if rows.iter().any(|r| r.len() != m) {
        return Err(Error::InvalidInput(format!(
            "heisenberg matrix must be square, got {s:?}"
        )));
    }
    Ok(Matrix::from_rows(rows))
}

/// Resolve `NAME[:PARAM]`.
pub fn lookup(spec: &str) -> Result<LieAlgebra> {
    let (name, param) = match spec.split_once(':') {
        Some((a, b)) => (a.trim(), Some(b)),
        None => (spec.trim(), None),
    };
    let no_param = |g: LieAlgebra| -> Result<LieAlgebra> {
        match param {
            None => Ok(g),
            Some(_) => Err(Error::InvalidInput(format!("{name} takes no parameter"))),
        }
    };
    match name.to_ascii_lowercase().as_str() {
        "l" => filiform(parse_usize(param, "L")?),
        "abelian" => {
            let n = parse_usize(param, "abelian")?;
            if n == 0 {
                return Err(Error::InvalidInput("abelian:n needs n >= 1".into()));
            }
            Ok(LieAlgebra::abelian(n))
        }
        "panyushev" => no_param(panyushev()),
        "example32" => no_param(jordan_block_extension()),
        "sl2" => no_param(sl2()),
        "nonabelian2" => no_param(nonabelian2()),
        "heisenberg" => {
            let p = param
                .ok_or_else(|| Error::InvalidInput("heisenberg needs a matrix, e.g. heisenberg:0,1;0,0".into()))?;
            heisenberg(&parse_matrix(p)?)
        }
        _ => Err(Error::InvalidInput(format!(
            "unknown catalog entry {name:?}; run `catalog` for the list"
        ))),
    }
}

/// One representative of every catalog family, for property checks.
pub fn sample_catalog() -> Vec<LieAlgebra> {
    let mut out: Vec<LieAlgebra> = (3..=6).map(|n| filiform(n).expect("n >= 3")).collect();
    out.push(panyushev());
    out.push(jordan_block_extension());
    out.push(sl2());
    out.push(nonabelian2());
    out.push(LieAlgebra::abelian(3));
    out.push(lookup("heisenberg:0,1;0,0").expect("valid"));
    out.push(lookup("heisenberg:1").expect("valid"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_resolve() {
        assert_eq!(lookup("L:5").unwrap().dim(), 5);
        assert_eq!(lookup("abelian:4").unwrap().dim(), 4);
        assert_eq!(lookup("heisenberg:0,1;0,0").unwrap().dim(), 6);
        assert!(lookup("L:2").is_err());
        assert!(lookup("L").is_err());
        assert!(lookup("sl2:3").is_err());
        assert!(lookup("heisenberg:1,2").is_err());
        assert!(lookup("nope").is_err());
    }

    #[test]
    fn heisenberg_center_for_zero_p() {
        let g = lookup("heisenberg:0").unwrap();
        // basis w1, phi1, c, t: both c and t are central
        let z = g.center();
        assert_eq!(z.dim(), 2);
    }

    #[test]
    fn heisenberg_quadratic_invariant() {
        let g = lookup("heisenberg:0,1;0,0").unwrap();
        let rep = crate::invariants::Representation::adjoint(&g);
        let z = crate::poly::parse_poly("t*c - w1*phi2", g.basis_names()).unwrap();
        let zero = vec![Rational::from_integer(0.into()); g.dim()];
        assert!(rep.is_semi_invariant(&z, &zero));
    }

    #[test]
    fn every_entry_round_trips() {
        for g in sample_catalog() {
            let back = LieAlgebra::from_json_str(&g.to_json_string()).unwrap();
            assert_eq!(back, g);
        }
    }
}
