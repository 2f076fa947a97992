//! Exact multinomials in the energy-momentum components, used for the spin
//! kernel matrix entries. Coefficients are complex; evaluation is numeric.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::geometry::Momentum;

/// A multinomial in the `d` components of an energy-momentum vector
/// (component 0 is the energy). Stored canonically as exponent-vector to
/// coefficient, with zero coefficients pruned.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Multinomial {
    dim: usize,
    terms: BTreeMap<Vec<u8>, Complex64>,
}

impl Multinomial {
    pub fn zero(dim: usize) -> Self {
        Multinomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Complex64) -> Self {
        let mut m = Self::zero(dim);
        if c != Complex64::ZERO {
            m.terms.insert(vec![0; dim], c);
        }
        m
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Complex64::ONE)
    }

    /// The coordinate monomial `p_(index)`; index 0 is the energy.
    pub fn component(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        let mut exps = vec![0u8; dim];
        exps[index] = 1;
        let mut m = Self::zero(dim);
        m.terms.insert(exps, Complex64::ONE);
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert(Complex64::ZERO);
            *entry += c;
            if entry.norm_sqr() == 0.0 {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        if s == Complex64::ZERO {
            return Self::zero(self.dim);
        }
        Multinomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-Complex64::ONE))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u8> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(e.clone()).or_insert(Complex64::ZERO);
                *entry += ca * cb;
                if entry.norm_sqr() == 0.0 {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Multinomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.conj())).collect(),
        }
    }

    /// Substitute `p -> -p` (every component negated).
    pub fn negate_argument(&self) -> Self {
        Multinomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let degree: u32 = e.iter().map(|x| *x as u32).sum();
                    let sign = if degree % 2 == 0 { 1.0 } else { -1.0 };
                    (e.clone(), c * sign)
                })
                .collect(),
        }
    }

    pub fn eval(&self, p: &Momentum) -> Complex64 {
        debug_assert_eq!(p.dim(), self.dim);
        let comps = p.components();
        let mut acc = Complex64::ZERO;
        for (e, c) in &self.terms {
            let mut mono = 1.0;
            for (x, k) in comps.iter().zip(e) {
                for _ in 0..*k {
                    mono *= x;
                }
            }
            acc += c * mono;
        }
        acc
    }

    /// Total degree of the highest-degree term.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|x| *x as usize).sum())
            .max()
            .unwrap_or(0)
    }
}

/// A square matrix with multinomial entries (the momentum-dependent spin
/// kernel).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixMultinomial {
    size: usize,
    entries: Vec<Multinomial>,
}

impl MatrixMultinomial {
    pub fn zero(size: usize, dim: usize) -> Self {
        MatrixMultinomial {
            size,
            entries: vec![Multinomial::zero(dim); size * size],
        }
    }

    pub fn identity(size: usize, dim: usize) -> Self {
        let mut m = Self::zero(size, dim);
        for i in 0..size {
            *m.entry_mut(i, i) = Multinomial::one(dim);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &Multinomial {
        &self.entries[i * self.size + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Multinomial {
        &mut self.entries[i * self.size + j]
    }

    pub fn eval(&self, p: &Momentum) -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_fn(self.size, self.size, |i, j| self.entry(i, j).eval(p))
    }

    pub fn transpose(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.size {
            for j in 0..self.size {
                *out.entry_mut(i, j) = self.entry(j, i).clone();
            }
        }
        out
    }

    pub fn negate_argument(&self) -> Self {
        MatrixMultinomial {
            size: self.size,
            entries: self.entries.iter().map(|e| e.negate_argument()).collect(),
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Self, dim: usize) -> Self {
        let n = self.size + other.size;
        let mut out = Self::zero(n, dim);
        for i in 0..self.size {
            for j in 0..self.size {
                *out.entry_mut(i, j) = self.entry(i, j).clone();
            }
        }
        for i in 0..other.size {
            for j in 0..other.size {
                *out.entry_mut(self.size + i, self.size + j) = other.entry(i, j).clone();
            }
        }
        out
    }

    /// Kronecker product; entry (i1*n2+i2, j1*n2+j2) = a[i1,j1] * b[i2,j2].
    pub fn kronecker(&self, other: &Self) -> Self {
        let n1 = self.size;
        let n2 = other.size;
        let mut out = Self::zero(n1 * n2, self.entries[0].dim());
        for i1 in 0..n1 {
            for j1 in 0..n1 {
                for i2 in 0..n2 {
                    for j2 in 0..n2 {
                        *out.entry_mut(i1 * n2 + i2, j1 * n2 + j2) =
                            self.entry(i1, j1).mul(other.entry(i2, j2));
                    }
                }
            }
        }
        out
    }

    /// Conjugation by a constant real matrix: `O M O^T`.
    pub fn conjugate_by(&self, o: &nalgebra::DMatrix<f64>) -> Self {
        let n = self.size;
        let dim = self.entries[0].dim();
        let mut out = Self::zero(n, dim);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Multinomial::zero(dim);
                for k in 0..n {
                    for l in 0..n {
                        if o[(i, k)] != 0.0 && o[(j, l)] != 0.0 {
                            acc = acc.add(
                                &self
                                    .entry(k, l)
                                    .scale(Complex64::new(o[(i, k)] * o[(j, l)], 0.0)),
                            );
                        }
                    }
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        out
    }

    /// Apply a permutation to rows and columns: out[i,j] = self[perm[i], perm[j]].
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.size;
        let dim = self.entries[0].dim();
        let mut out = Self::zero(n, dim);
        for i in 0..n {
            for j in 0..n {
                *out.entry_mut(i, j) = self.entry(perm[i], perm[j]).clone();
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().map(|e| e.degree()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mom(v: &[f64]) -> Momentum {
        Momentum::new(v.to_vec()).unwrap()
    }

    #[test]
    fn eval_and_arithmetic() {
        let d = 4;
        let e = Multinomial::component(d, 0);
        let px = Multinomial::component(d, 1);
        // E^2 - px^2 + 3
        let m = e
            .mul(&e)
            .sub(&px.mul(&px))
            .add(&Multinomial::constant(d, Complex64::new(3.0, 0.0)));
        let p = mom(&[2.0, 1.0, 5.0, 7.0]);
        assert_eq!(m.eval(&p), Complex64::new(4.0 - 1.0 + 3.0, 0.0));
        assert_eq!(m.degree(), 2);
    }

    #[test]
    fn negate_argument_flips_odd_terms() {
        let d = 3;
        let e = Multinomial::component(d, 0);
        let p1 = Multinomial::component(d, 1);
        let m = e.mul(&p1).add(&e.mul(&e)); // E*p1 + E^2
        let p = mom(&[1.5, -0.5, 2.0]);
        let neg = m.negate_argument();
        assert_eq!(neg.eval(&p), m.eval(&p.neg()));
    }

    #[test]
    fn kronecker_matches_scalar_product() {
        let d = 3;
        let mut a = MatrixMultinomial::identity(2, d);
        *a.entry_mut(0, 1) = Multinomial::component(d, 0);
        let b = MatrixMultinomial::identity(1, d);
        let k = a.kronecker(&b);
        let p = mom(&[2.0, 0.3, 0.4]);
        assert_eq!(k.eval(&p), a.eval(&p));
    }
}
