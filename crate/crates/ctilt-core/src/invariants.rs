//! Derived invariants of an algebra computed from its Cartan matrix C:
//! determinant, Euler form, asymmetry S = C·C^{-T}, characteristic
//! polynomials, and the associated polynomial det(C)·charpoly(S).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, RationalMatrix};
use crate::path_algebra::CartanMatrix;
use crate::quiver::Permutation;

/// Polynomial with arbitrary-precision integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Drops trailing zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Content signed like the leading coefficient (0 for the zero polynomial).
    pub fn signed_content(&self) -> BigInt {
        let g = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.leading().is_negative() {
            -g
        } else {
            g
        }
    }

    /// Normalized text "d(x^n + …)", with the prefix omitted when d = 1 and
    /// written "-(…)" when d = −1. See [`normalize_text`] for comparisons.
    pub fn normalized(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let d = self.signed_content();
        let inner: Vec<BigInt> = self.coeffs.iter().map(|c| c / &d).collect();
        let body = format_terms(&inner);
        if d.is_one() {
            body
        } else if d == -BigInt::one() {
            format!("-({body})")
        } else {
            format!("{d}({body})")
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.normalized())
    }
}

fn format_terms(c: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = a.abs();
        let mono = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        if k == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}{mono}"));
        }
    }
    out
}

/// Whitespace-insensitive form of polynomial text, for byte comparison.
pub fn normalize_text(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('−', "-")
}

/// Exact determinant.
pub fn determinant(c: &CartanMatrix) -> Result<BigInt> {
    linalg::determinant(c)
}

/// Euler form ⟨x, y⟩ = xᵀ Cᵀ y; in particular ⟨e_i, e_j⟩ = c_ji.
pub fn euler_form(c: &CartanMatrix, x: &[i64], y: &[i64]) -> Result<i64> {
    let n = c.len();
    if x.len() != n || y.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {} against a {n}×{n} form",
            x.len(),
            y.len()
        )));
    }
    let mut s = 0;
    for i in 0..n {
        for j in 0..n {
            s += x[i] * c[j][i] * y[j];
        }
    }
    Ok(s)
}

/// The asymmetry S = C·C^{-T} with a flag for integrality.
#[derive(Clone, Debug, PartialEq)]
pub struct Asymmetry {
    pub s: RationalMatrix,
    pub integral: bool,
}

/// Computes S = C·C^{-T}; errors on a singular Cartan matrix.
pub fn asymmetry(c: &CartanMatrix) -> Result<Asymmetry> {
    let cr = linalg::to_rational(c);
    let inv_t = linalg::transpose(&linalg::inverse(&cr).map_err(|_| {
        Error::invariant("singular Cartan matrix")
    })?);
    let s = linalg::mat_mul_rational(&cr, &inv_t);
    let integral = s.iter().flatten().all(BigRational::is_integer);
    Ok(Asymmetry { s, integral })
}

/// Monic characteristic polynomial det(xI − M), lowest degree first,
/// via reduction to upper Hessenberg form over Q.
pub fn char_poly(m: &RationalMatrix) -> Vec<BigRational> {
    let n = m.len();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else {
            continue;
        };
        if p != j + 1 {
            h.swap(p, j + 1);
            for row in h.iter_mut() {
                row.swap(p, j + 1);
            }
        }
        for r in j + 2..n {
            if h[r][j].is_zero() {
                continue;
            }
            let t = &h[r][j] / &h[j + 1][j];
            for c in 0..n {
                let v = &t * &h[j + 1][c];
                h[r][c] -= v;
            }
            for row in h.iter_mut() {
                let v = &t * &row[r];
                row[j + 1] += v;
            }
        }
    }
    // p_m = (x − h_mm) p_{m−1} − Σ_i h_{i,m} (Π h_{k,k−1}) p_{i}
    let mut polys: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for m_ in 1..=n {
        let prev = &polys[m_ - 1];
        let mut next = vec![BigRational::zero(); m_ + 1];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= &h[m_ - 1][m_ - 1] * c;
        }
        let mut prod = BigRational::one();
        for i in (0..m_ - 1).rev() {
            prod = &prod * &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let coef = &h[i][m_ - 1] * &prod;
            for (d, c) in polys[i].iter().enumerate() {
                next[d] -= &coef * c;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

/// det(C)·charpoly(C·C^{-T}); errors when singular or non-integral.
pub fn associated_polynomial(c: &CartanMatrix) -> Result<IntPolynomial> {
    let det = determinant(c)?;
    if det.is_zero() {
        return Err(Error::invariant("singular Cartan matrix"));
    }
    let s = asymmetry(c)?;
    let cp = char_poly(&s.s);
    let d = BigRational::from_integer(det);
    let mut coeffs = Vec::with_capacity(cp.len());
    for a in cp {
        let v = a * &d;
        if !v.is_integer() {
            return Err(Error::invariant(format!(
                "associated polynomial has a non-integral coefficient {v}"
            )));
        }
        coeffs.push(v.to_integer());
    }
    Ok(IntPolynomial::new(coeffs))
}

/// P_σ C P_σᵀ: the matrix whose (σ(i), σ(j)) entry is c_ij.
pub fn permute_matrix(c: &CartanMatrix, p: &Permutation) -> CartanMatrix {
    let n = c.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[p.apply(i)][p.apply(j)] = c[i][j];
        }
    }
    out
}

/// Some σ with P_σ c1 P_σᵀ = c2, found by backtracking with pruning on
/// diagonal entries and sorted rows and columns.
pub fn cartan_permutation_match(c1: &CartanMatrix, c2: &CartanMatrix) -> Option<Permutation> {
    permutation_search(c1, c2, Some(1)).into_iter().next()
}

/// Every σ with P_σ c1 P_σᵀ = c2, in lexicographic order of images.
pub fn cartan_permutation_matches(c1: &CartanMatrix, c2: &CartanMatrix) -> Vec<Permutation> {
    permutation_search(c1, c2, None)
}

fn permutation_search(
    c1: &CartanMatrix,
    c2: &CartanMatrix,
    limit: Option<usize>,
) -> Vec<Permutation> {
    let n = c1.len();
    if c2.len() != n {
        return Vec::new();
    }
    let profile = |c: &CartanMatrix, i: usize| {
        let mut row: Vec<i64> = c[i].clone();
        let mut col: Vec<i64> = (0..n).map(|k| c[k][i]).collect();
        row.sort_unstable();
        col.sort_unstable();
        (c[i][i], row, col)
    };
    let p1: Vec<_> = (0..n).map(|i| profile(c1, i)).collect();
    let p2: Vec<_> = (0..n).map(|i| profile(c2, i)).collect();
    {
        let (mut a, mut b) = (p1.clone(), p2.clone());
        a.sort();
        b.sort();
        if a != b {
            return Vec::new();
        }
    }
    struct Search<'a> {
        c1: &'a CartanMatrix,
        c2: &'a CartanMatrix,
        p1: &'a [(i64, Vec<i64>, Vec<i64>)],
        p2: &'a [(i64, Vec<i64>, Vec<i64>)],
        image: Vec<usize>,
        used: Vec<bool>,
        found: Vec<Permutation>,
        limit: Option<usize>,
    }
    impl Search<'_> {
        fn rec(&mut self, i: usize) {
            let n = self.c1.len();
            if self.limit.is_some_and(|l| self.found.len() >= l) {
                return;
            }
            if i == n {
                let p = Permutation::from_images(self.image.clone())
                    .expect("backtracking builds a bijection");
                self.found.push(p);
                return;
            }
            for w in 0..n {
                if self.used[w] || self.p1[i] != self.p2[w] {
                    continue;
                }
                let (c1, c2, image) = (self.c1, self.c2, &self.image);
                if (0..i).any(|u| c1[u][i] != c2[image[u]][w] || c1[i][u] != c2[w][image[u]]) {
                    continue;
                }
                self.image[i] = w;
                self.used[w] = true;
                self.rec(i + 1);
                self.used[w] = false;
            }
        }
    }
    let mut s = Search {
        c1,
        c2,
        p1: &p1,
        p2: &p2,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
        limit,
    };
    s.rec(0);
    s.found
}
