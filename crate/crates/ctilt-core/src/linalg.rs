//! Exact linear algebra over Z and Q.
//!
//! Ranks and determinants use fraction-free elimination in checked `i128`
//! arithmetic and retry with big integers on overflow, so results are exact
//! either way.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix as a vector of rows.
pub type IntMatrix = Vec<Vec<i64>>;

/// Dense rational matrix as a vector of rows.
pub type RationalMatrix = Vec<Vec<BigRational>>;

trait Ring: Clone + PartialEq + Sized {
    fn r_zero() -> Self;
    fn r_one() -> Self;
    fn r_is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Self;
}

impl Ring for i128 {
    fn r_zero() -> Self {
        0
    }
    fn r_one() -> Self {
        1
    }
    fn r_is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl Ring for BigInt {
    fn r_zero() -> Self {
        Zero::zero()
    }
    fn r_one() -> Self {
        One::one()
    }
    fn r_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

/// Bareiss elimination; returns the rank and, for square input, the
/// determinant. `None` signals an overflow in the chosen ring.
fn bareiss<T: Ring>(mut m: Vec<Vec<T>>, cols: usize) -> Option<(usize, T)> {
    let rows = m.len();
    let mut prev = T::r_one();
    let mut negate = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].r_is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            negate = !negate;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let a = m[r][c].mul(&m[i][j])?;
                let b = m[i][c].mul(&m[r][j])?;
                m[i][j] = a.sub(&b)?.div_exact(&prev);
            }
            m[i][c] = T::r_zero();
        }
        // every entry is now a minor of the input, so the next division is exact
        prev = m[r][c].clone();
        r += 1;
    }
    let det = if rows == cols && r == rows && rows > 0 {
        let d = m[rows - 1][cols - 1].clone();
        if negate {
            T::r_zero().sub(&d)?
        } else {
            d
        }
    } else if rows == 0 && cols == 0 {
        T::r_one()
    } else {
        T::r_zero()
    };
    Some((r, det))
}

fn run_bareiss(m: &[Vec<i64>]) -> (usize, BigInt) {
    let cols = m.first().map_or(0, Vec::len);
    let small: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    if let Some((rank, det)) = bareiss(small, cols) {
        return (rank, BigInt::from(det));
    }
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    bareiss(big, cols).expect("big integers do not overflow")
}

/// Exact rank over Q of an integer matrix.
pub fn rank(m: &[Vec<i64>]) -> usize {
    run_bareiss(m).0
}

/// Exact determinant of a square integer matrix.
pub fn determinant(m: &[Vec<i64>]) -> Result<BigInt> {
    check_square(m)?;
    Ok(run_bareiss(m).1)
}

fn check_square<T>(m: &[Vec<T>]) -> Result<()> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("matrix with {n} rows is not square")));
    }
    Ok(())
}

pub fn to_rational(m: &[Vec<i64>]) -> RationalMatrix {
    m.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| (0..rows).map(|i| m[i][j].clone()).collect()).collect()
}

pub fn mat_mul_int(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_mul_rational(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

/// Inverse by Gauss–Jordan elimination over Q.
pub fn inverse(m: &RationalMatrix) -> Result<RationalMatrix> {
    check_square(m)?;
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !a[i][c].is_zero())
            .ok_or_else(|| Error::invariant("singular matrix"))?;
        a.swap(p, c);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of the right kernel {v : m v = 0} of a `rows × cols` integer matrix,
/// each vector scaled to coprime integers. The basis is the reduced echelon
/// one: one vector per free column, in column order.
pub fn kernel(m: &[Vec<i64>], cols: usize) -> Result<Vec<Vec<i64>>> {
    let mut a = to_rational(m);
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(integral_primitive(&v)?);
    }
    Ok(basis)
}

/// Scales a rational vector to a primitive integer vector.
fn integral_primitive(v: &[BigRational]) -> Result<Vec<i64>> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g.abs() };
    ints.iter()
        .map(|x| {
            (x / &g)
                .to_i64()
                .ok_or_else(|| Error::CapExceeded("kernel vector entry exceeds i64".into()))
        })
        .collect()
}
