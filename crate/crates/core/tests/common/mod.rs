//! Independent reference computations for the integration tests. Nothing
//! here calls into the crate's algebra.
#![allow(dead_code)]

pub mod random;

use std::collections::BTreeMap;

/// Closed-form single-surgery variation in plain integers.
pub fn closed_form(f: [i64; 3], l: [i64; 3], mu: i64) -> i128 {
    let [f1, f2, f3] = f.map(i128::from);
    let [l12, l13, l23] = l.map(i128::from);
    -f1 * f2 * f3 - 2 * l12 * l13 * l23 - 2 * mu as i128
        + l23 * (l23 + 1) * f1
        + l13 * (l13 + 1) * f2
        + l12 * (l12 + 1) * f3
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    for c in 0..n {
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect()).collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][c] as i128 * cofactor_det(&minor);
    }
    total
}

/// Truncated noncommutative power series as word -> coefficient.
pub type Series = BTreeMap<Vec<usize>, i64>;

fn series_mul(a: &Series, b: &Series, degree: usize) -> Series {
    let mut out = Series::new();
    for (u, x) in a {
        for (v, y) in b {
            if u.len() + v.len() <= degree {
                let mut w = u.clone();
                w.extend(v);
                *out.entry(w).or_insert(0) += x * y;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Magnus expansion of a word given as signed 1-based generators
/// (`-2` is the inverse of the second generator).
pub fn magnus(word: &[i64], degree: usize) -> Series {
    let mut acc = Series::from([(vec![], 1)]);
    for &g in word {
        let x = g.unsigned_abs() as usize - 1;
        let mut factor = Series::from([(vec![], 1)]);
        for k in 1..=degree {
            let c = if g > 0 {
                if k == 1 {
                    1
                } else {
                    0
                }
            } else if k % 2 == 1 {
                -1
            } else {
                1
            };
            if c != 0 {
                factor.insert(vec![x; k], c);
            }
        }
        acc = series_mul(&acc, &factor, degree);
    }
    acc
}

/// `det(V - t V^T)` for a 2x2 Seifert matrix, as coefficients of 1, t, t².
pub fn seifert_poly_2x2(v: [[i64; 2]; 2]) -> [i64; 3] {
    let [[a, b], [c, d]] = v;
    // (a - ta)(d - td) - (b - tc)(c - tb)
    let ad = a * d;
    [ad - b * c, -2 * ad + b * b + c * c, ad - c * b]
}

/// Half the second derivative at 1 of `Σ c_k t^(low + k)`.
pub fn half_second_derivative(low: i64, coeffs: &[i64]) -> i64 {
    let twice: i64 = coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            let e = low + k as i64;
            c * e * (e - 1)
        })
        .sum();
    assert_eq!(twice % 2, 0);
    twice / 2
}

/// Linking number straight from a PD document: half the signed count of
/// crossings whose two strands lie on the two given components.
pub fn pd_linking(doc: &serde_json::Value, i: usize, j: usize) -> i64 {
    let comp_of = |arc: i64| {
        doc["components"].as_array().unwrap().iter().position(|c| c.as_array().unwrap().iter().any(|a| a.as_i64() == Some(arc))).unwrap()
    };
    let mut sum = 0;
    for x in doc["crossings"].as_array().unwrap() {
        let arcs: Vec<i64> = x["arcs"].as_array().unwrap().iter().map(|a| a.as_i64().unwrap()).collect();
        let (a, b) = (comp_of(arcs[0]), comp_of(arcs[1]));
        if (a, b) == (i, j) || (a, b) == (j, i) {
            sum += x["sign"].as_i64().unwrap();
        }
    }
    assert_eq!(sum % 2, 0);
    sum / 2
}

/// Writhe from a PD document.
pub fn pd_writhe(doc: &serde_json::Value) -> i64 {
    doc["crossings"].as_array().unwrap().iter().map(|x| x["sign"].as_i64().unwrap()).sum()
}

/// Small exact fractions for Johannes' formula.
pub fn reduced(num: i64, den: i64) -> (i64, i64) {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let g = gcd(num, den);
    let s = if den < 0 { -1 } else { 1 };
    (s * num / g, s * den / g)
}

/// Integer polynomials in one variable as coefficient lists from degree 0.
pub type Poly = Vec<i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &Poly, b: &Poly, sign: i64) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += sign * y;
    }
    out
}

fn poly_det(m: &[Vec<Poly>]) -> Poly {
    if m.is_empty() {
        return vec![1];
    }
    let mut total = vec![0];
    for c in 0..m.len() {
        let minor: Vec<Vec<Poly>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, p)| p.clone()).collect()).collect();
        let term = poly_mul(&m[0][c], &poly_det(&minor));
        total = poly_add(&total, &term, if c % 2 == 0 { 1 } else { -1 });
    }
    total
}

/// `det(V - t V^T)` by cofactor expansion, shifted to be centred on
/// degree zero and scaled to value 1 at `t = 1`. Returns the lowest
/// exponent and the coefficients.
pub fn alexander_from_seifert(v: &[Vec<i64>]) -> (i64, Vec<i64>) {
    let n = v.len();
    let m: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|j| vec![v[i][j], -v[j][i]]).collect()).collect();
    let mut p = poly_det(&m);
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    let first = p.iter().position(|&c| c != 0).unwrap();
    let p: Vec<i64> = p[first..].to_vec();
    let s: i64 = p.iter().sum();
    assert!(s == 1 || s == -1, "not a knot Seifert matrix");
    assert_eq!(p.len() % 2, 1);
    (-(p.len() as i64 / 2), p.into_iter().map(|c| c * s).collect())
}
