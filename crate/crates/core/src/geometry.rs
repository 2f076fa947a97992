//! Minkowski geometry: momentum vectors, mass shells, the forward cone and
//! proper orthochronous Lorentz transformations, with the matched SL(2)
//! covering element in four dimensions.
//!
//! The metric signature is fixed to (+, -, ..., -) with the energy component
//! stored first.

use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::QfvError;
use crate::tolerances;

/// Energy-momentum vector in `d >= 3` spacetime dimensions, energy first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Momentum {
    comps: Vec<f64>,
}

impl Momentum {
    pub fn new(comps: Vec<f64>) -> Result<Self, QfvError> {
        if comps.len() < 3 {
            return Err(QfvError::Dimension(format!(
                "momentum needs d >= 3 components, got {}",
                comps.len()
            )));
        }
        if comps.iter().any(|c| !c.is_finite()) {
            return Err(QfvError::Dimension("non-finite momentum component".into()));
        }
        Ok(Self { comps })
    }

    /// Assemble from an energy and spatial components.
    pub fn from_energy_spatial(energy: f64, spatial: &[f64]) -> Self {
        let mut comps = Vec::with_capacity(spatial.len() + 1);
        comps.push(energy);
        comps.extend_from_slice(spatial);
        Self { comps }
    }

    pub fn zero(d: usize) -> Self {
        Self { comps: vec![0.0; d] }
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn energy(&self) -> f64 {
        self.comps[0]
    }

    pub fn spatial(&self) -> &[f64] {
        &self.comps[1..]
    }

    pub fn components(&self) -> &[f64] {
        &self.comps
    }

    pub fn spatial_norm_sq(&self) -> f64 {
        self.spatial().iter().map(|x| x * x).sum()
    }

    /// Minkowski square `p.p`.
    pub fn mass_sq(&self) -> f64 {
        minkowski_dot(self, self).expect("same vector")
    }

    pub fn neg(&self) -> Self {
        Self {
            comps: self.comps.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            comps: self.comps.iter().map(|c| c * s).collect(),
        }
    }
}

/// Minkowski inner product `E_p E_q - p.q` for the (+,-,...,-) signature.
pub fn minkowski_dot(p: &Momentum, q: &Momentum) -> Result<f64, QfvError> {
    if p.dim() != q.dim() {
        return Err(QfvError::Dimension(format!(
            "dimension mismatch: {} vs {}",
            p.dim(),
            q.dim()
        )));
    }
    let spatial: f64 = p
        .spatial()
        .iter()
        .zip(q.spatial())
        .map(|(a, b)| a * b)
        .sum();
    Ok(p.energy() * q.energy() - spatial)
}

/// Shell frequency `omega = sqrt(m^2 + |p|^2)`.
pub fn shell_energy(mass: f64, spatial: &[f64]) -> f64 {
    let sq: f64 = spatial.iter().map(|x| x * x).sum();
    (mass * mass + sq).sqrt()
}

/// Place a spatial momentum on the positive or negative energy sheet of the
/// mass shell of `mass`.
pub fn on_shell(spatial: &[f64], mass: f64, positive: bool) -> Momentum {
    let omega = shell_energy(mass, spatial);
    Momentum::from_energy_spatial(if positive { omega } else { -omega }, spatial)
}

/// Closed forward cone membership: `p.p >= 0` and `E >= 0`, with boundary
/// tolerance [`tolerances::EXACT`].
pub fn in_forward_cone(p: &Momentum) -> bool {
    p.mass_sq() >= -tolerances::EXACT && p.energy() >= -tolerances::EXACT
}

/// A particle species: positive mass plus boson/fermion statistics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Species {
    pub mass: f64,
    pub fermionic: bool,
}

impl Species {
    pub fn boson(mass: f64) -> Self {
        Species {
            mass,
            fermionic: false,
        }
    }

    pub fn fermion(mass: f64) -> Self {
        Species {
            mass,
            fermionic: true,
        }
    }
}

/// A proper orthochronous Lorentz transformation, together with the matched
/// SL(2, C) covering element when `d = 4`.
#[derive(Debug, Clone)]
pub struct LorentzElement {
    /// The d x d matrix acting on energy-momentum column vectors.
    pub matrix: DMatrix<f64>,
    /// Covering element with `A sigma(p) A^dagger = sigma(matrix * p)`;
    /// only populated in four dimensions.
    pub sl2: Option<Matrix2<Complex64>>,
}

impl LorentzElement {
    pub fn identity(d: usize) -> Self {
        LorentzElement {
            matrix: DMatrix::identity(d, d),
            sl2: if d == 4 {
                Some(Matrix2::identity())
            } else {
                None
            },
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Pure boost of rapidity `chi` along the spatial unit vector `axis`.
    pub fn boost(d: usize, axis: &[f64], chi: f64) -> Self {
        assert_eq!(axis.len(), d - 1);
        let norm: f64 = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(norm > 0.0, "boost axis must be nonzero");
        let n: Vec<f64> = axis.iter().map(|x| x / norm).collect();
        let (ch, sh) = (chi.cosh(), chi.sinh());
        let mut m = DMatrix::identity(d, d);
        m[(0, 0)] = ch;
        for i in 0..d - 1 {
            m[(0, i + 1)] = sh * n[i];
            m[(i + 1, 0)] = sh * n[i];
            for j in 0..d - 1 {
                m[(i + 1, j + 1)] = if i == j { 1.0 } else { 0.0 } + (ch - 1.0) * n[i] * n[j];
            }
        }
        let sl2 = (d == 4).then(|| {
            let half = chi / 2.0;
            let (c, s) = (half.cosh(), half.sinh());
            let one = Complex64::new(1.0, 0.0);
            Matrix2::identity() * Complex64::new(c, 0.0)
                + pauli_dot(&[n[0] * s, n[1] * s, n[2] * s]) * one
        });
        LorentzElement {
            matrix: m,
            sl2,
        }
    }

    /// Spatial rotation given by an orthogonal (d-1) x (d-1) matrix with
    /// determinant +1. For `d = 4` the covering element is reconstructed
    /// from the axis-angle decomposition.
    pub fn rotation(d: usize, spatial: &DMatrix<f64>) -> Self {
        assert_eq!(spatial.nrows(), d - 1);
        let mut m = DMatrix::identity(d, d);
        for i in 0..d - 1 {
            for j in 0..d - 1 {
                m[(i + 1, j + 1)] = spatial[(i, j)];
            }
        }
        let sl2 = (d == 4).then(|| {
            let (axis, angle) = axis_angle_3(spatial);
            let half = angle / 2.0;
            let (c, s) = (half.cos(), half.sin());
            Matrix2::identity() * Complex64::new(c, 0.0)
                - pauli_dot(&axis) * Complex64::new(0.0, s)
        });
        LorentzElement {
            matrix: m,
            sl2,
        }
    }

    /// Group composition `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        LorentzElement {
            matrix: &self.matrix * &other.matrix,
            sl2: match (&self.sl2, &other.sl2) {
                (Some(a), Some(b)) => Some(a * b),
                _ => None,
            },
        }
    }

    pub fn inverse(&self) -> Self {
        // Lorentz inverse = g Lambda^T g; cheaper and exact compared to LU.
        let d = self.dim();
        let mut inv = self.matrix.transpose();
        for i in 1..d {
            inv[(0, i)] = -inv[(0, i)];
            inv[(i, 0)] = -inv[(i, 0)];
        }
        LorentzElement {
            matrix: inv,
            sl2: self.sl2.map(|a| {
                let det = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
                Matrix2::new(a[(1, 1)], -a[(0, 1)], -a[(1, 0)], a[(0, 0)]) / det
            }),
        }
    }

    pub fn apply(&self, p: &Momentum) -> Momentum {
        let v = nalgebra::DVector::from_column_slice(p.components());
        let w = &self.matrix * v;
        Momentum {
            comps: w.iter().copied().collect(),
        }
    }

    /// Worst entrywise residual of `Lambda^T g Lambda = g`.
    pub fn metric_residual(&self) -> f64 {
        let d = self.dim();
        let mut g = DMatrix::identity(d, d);
        for i in 1..d {
            g[(i, i)] = -1.0;
        }
        let r = self.matrix.transpose() * &g * &self.matrix - g;
        r.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
    }

    pub fn is_orthochronous(&self) -> bool {
        self.matrix[(0, 0)] >= 1.0 - tolerances::EXACT
    }

    /// The pure boost carrying the rest vector `(sqrt(p.p), 0, ...)` to `p`.
    /// `p` must be strictly inside the forward cone.
    pub fn boost_to(p: &Momentum) -> Result<Self, QfvError> {
        let psq = p.mass_sq();
        if psq <= 0.0 || p.energy() <= 0.0 {
            return Err(QfvError::Domain(format!(
                "boost_to requires a timelike forward vector, got p^2 = {psq}"
            )));
        }
        let d = p.dim();
        let rest = psq.sqrt();
        let spatial_norm = p.spatial_norm_sq().sqrt();
        if spatial_norm < tolerances::EXACT {
            return Ok(LorentzElement::identity(d));
        }
        let chi = (p.energy() / rest).acosh();
        let axis: Vec<f64> = p.spatial().iter().map(|x| x / spatial_norm).collect();
        Ok(LorentzElement::boost(d, &axis, chi))
    }
}

fn pauli_dot(v: &[f64; 3]) -> Matrix2<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    let re = |x: f64| Complex64::new(x, 0.0);
    Matrix2::new(
        re(v[2]),
        re(v[0]) - i * v[1],
        re(v[0]) + i * v[1],
        -re(v[2]),
    )
}

/// Hermitian Pauli-vector image of a four-momentum: `E + p . sigma`.
pub fn pauli_map(p: &Momentum) -> Matrix2<Complex64> {
    assert_eq!(p.dim(), 4);
    let s = p.spatial();
    Matrix2::identity() * Complex64::new(p.energy(), 0.0) + pauli_dot(&[s[0], s[1], s[2]])
}

/// Axis-angle extraction from a 3x3 proper rotation matrix.
fn axis_angle_3(r: &DMatrix<f64>) -> ([f64; 3], f64) {
    let trace = r[(0, 0)] + r[(1, 1)] + r[(2, 2)];
    let cos_angle = ((trace - 1.0) / 2.0).clamp(-1.0, 1.0);
    let angle = cos_angle.acos();
    if angle.abs() < 1e-12 {
        return ([0.0, 0.0, 1.0], 0.0);
    }
    if (angle - std::f64::consts::PI).abs() < 1e-9 {
        // Near angle pi the antisymmetric part degenerates; read the axis
        // from the symmetric part instead.
        let mut axis = [
            ((r[(0, 0)] + 1.0) / 2.0).max(0.0).sqrt(),
            ((r[(1, 1)] + 1.0) / 2.0).max(0.0).sqrt(),
            ((r[(2, 2)] + 1.0) / 2.0).max(0.0).sqrt(),
        ];
        // Fix relative signs from the off-diagonal entries.
        if axis[0] > 1e-6 {
            axis[1] = (r[(0, 1)] + r[(1, 0)]) / (2.0 * axis[0]);
            axis[2] = (r[(0, 2)] + r[(2, 0)]) / (2.0 * axis[0]);
        } else if axis[1] > 1e-6 {
            axis[0] = (r[(0, 1)] + r[(1, 0)]) / (2.0 * axis[1]);
            axis[2] = (r[(1, 2)] + r[(2, 1)]) / (2.0 * axis[1]);
        } else {
            axis[0] = (r[(0, 2)] + r[(2, 0)]) / (2.0 * axis[2]);
            axis[1] = (r[(1, 2)] + r[(2, 1)]) / (2.0 * axis[2]);
        }
        let n: f64 = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        return ([axis[0] / n, axis[1] / n, axis[2] / n], angle);
    }
    let two_sin = 2.0 * angle.sin();
    let axis = [
        (r[(2, 1)] - r[(1, 2)]) / two_sin,
        (r[(0, 2)] - r[(2, 0)]) / two_sin,
        (r[(1, 0)] - r[(0, 1)]) / two_sin,
    ];
    (axis, angle)
}

/// Random proper orthochronous transformation: a uniform random rotation
/// composed with a boost of rapidity uniform in `[0, max_rapidity]` along a
/// random axis, then another random rotation. In four dimensions the matched
/// covering element is carried along.
pub fn random_lorentz(seed: u64, d: usize, max_rapidity: f64) -> LorentzElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r1 = random_rotation(&mut rng, d);
    let r2 = random_rotation(&mut rng, d);
    let chi = rng.gen_range(0.0..=max_rapidity.max(0.0));
    let mut axis = vec![0.0; d - 1];
    loop {
        let mut nrm = 0.0;
        for a in axis.iter_mut() {
            *a = rng.gen_range(-1.0..1.0);
            nrm += *a * *a;
        }
        if nrm > 1e-3 {
            break;
        }
    }
    if chi == 0.0 {
        return r2.compose(&r1);
    }
    r2.compose(&LorentzElement::boost(d, &axis, chi)).compose(&r1)
}

/// Haar-ish random rotation via QR of a Gaussian matrix, determinant fixed
/// to +1.
fn random_rotation<R: Rng>(rng: &mut R, d: usize) -> LorentzElement {
    let n = d - 1;
    let gauss = DMatrix::from_fn(n, n, |_, _| {
        // Box-Muller; avoids pulling in rand_distr for one sampler.
        let u1: f64 = rng.gen_range(1e-12..1.0);
        let u2: f64 = rng.gen_range(0.0..1.0);
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    });
    let qr = gauss.qr();
    let mut q = qr.q();
    // Normalize the sign convention so columns are deterministic, then force
    // det = +1 by flipping the last column if needed.
    if q.determinant() < 0.0 {
        for i in 0..n {
            q[(i, n - 1)] = -q[(i, n - 1)];
        }
    }
    LorentzElement::rotation(d, &q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mom(v: &[f64]) -> Momentum {
        Momentum::new(v.to_vec()).unwrap()
    }

    #[test]
    fn minkowski_dot_examples() {
        let p = mom(&[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(minkowski_dot(&p, &p).unwrap(), 1.0);
        let q = mom(&[2.0, 1.0, 1.0, 1.0]);
        assert_eq!(minkowski_dot(&q, &q).unwrap(), 1.0);
        let l = mom(&[1.0, 1.0, 0.0, 0.0]);
        assert_eq!(minkowski_dot(&l, &l).unwrap(), 0.0);
        let bad = mom(&[1.0, 0.0, 0.0]);
        assert!(minkowski_dot(&p, &bad).is_err());
    }

    #[test]
    fn on_shell_examples() {
        let p = on_shell(&[0.0, 0.0, 0.0], 1.0, true);
        assert_eq!(p.energy(), 1.0);
        let q = on_shell(&[3.0, 4.0, 0.0], 1.0, true);
        assert!((q.energy() - 26.0f64.sqrt()).abs() < 1e-15);
        let r = on_shell(&[0.0, 0.0, 0.0], 1.0, false);
        assert_eq!(r.energy(), -1.0);
        assert!((q.mass_sq() - 1.0).abs() < crate::tolerances::SHELL_REL);
    }

    #[test]
    fn forward_cone_examples() {
        assert!(in_forward_cone(&mom(&[1.0, 0.0, 0.0, 0.0])));
        assert!(!in_forward_cone(&mom(&[1.0, 2.0, 0.0, 0.0])));
        assert!(!in_forward_cone(&mom(&[-1.0, 0.0, 0.0, 0.0])));
        // boundary: lightlike is inside the closed cone
        assert!(in_forward_cone(&mom(&[1.0, 1.0, 0.0, 0.0])));
    }

    #[test]
    fn random_lorentz_preserves_metric() {
        for seed in 0..30u64 {
            for d in [3usize, 4, 5] {
                let l = random_lorentz(seed, d, 2.0);
                assert!(l.metric_residual() < crate::tolerances::EXACT, "residual {}", l.metric_residual());
                assert!(l.is_orthochronous());
                let inv = l.inverse();
                let prod = l.compose(&inv);
                let idres = (&prod.matrix - DMatrix::<f64>::identity(d, d))
                    .iter()
                    .fold(0.0f64, |a, x| a.max(x.abs()));
                assert!(idres < 1e-11);
            }
        }
    }

    #[test]
    fn boost_has_cosh_entry() {
        let chi = 0.7;
        let l = LorentzElement::boost(4, &[1.0, 0.0, 0.0], chi);
        assert!((l.matrix[(0, 0)] - chi.cosh()).abs() < 1e-15);
        assert!(l.metric_residual() < crate::tolerances::EXACT);
    }

    #[test]
    fn zero_rapidity_identity_rotation_is_identity() {
        let l = LorentzElement::boost(4, &[0.0, 1.0, 0.0], 0.0);
        let res = (&l.matrix - DMatrix::<f64>::identity(4, 4))
            .iter()
            .fold(0.0f64, |a, x| a.max(x.abs()));
        assert!(res < 1e-15);
    }

    #[test]
    fn sl2_matches_vector_action() {
        // A sigma(p) A^dagger must equal sigma(Lambda p) for the matched pair.
        for seed in 0..20u64 {
            let l = random_lorentz(seed, 4, 1.5);
            let a = l.sl2.expect("d=4 carries SL(2)");
            let p = on_shell(&[0.3 * seed as f64 - 2.0, 0.4, -0.7], 1.0, true);
            let lhs = a * pauli_map(&p) * a.adjoint();
            let rhs = pauli_map(&l.apply(&p));
            let res = (lhs - rhs)
                .iter()
                .fold(0.0f64, |acc, z| acc.max(z.norm()));
            assert!(res < 1e-10, "seed {seed}: residual {res}");
        }
    }

    #[test]
    fn forward_cone_closed_under_addition() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let d = 4;
            let spatial: Vec<f64> = (0..d - 1).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let spatial2: Vec<f64> = (0..d - 1).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let p = on_shell(&spatial, rng.gen_range(0.1..2.0), true);
            let q = on_shell(&spatial2, rng.gen_range(0.1..2.0), true);
            assert!(in_forward_cone(&p) && in_forward_cone(&q));
            assert!(in_forward_cone(&p.add(&q)));
        }
    }

    #[test]
    fn boost_to_restores_momentum() {
        let p = on_shell(&[0.5, -1.2, 0.3], 1.3, true);
        let b = LorentzElement::boost_to(&p).unwrap();
        let rest = Momentum::from_energy_spatial(p.mass_sq().sqrt(), &[0.0, 0.0, 0.0]);
        let back = b.apply(&rest);
        for (a, c) in back.components().iter().zip(p.components()) {
            assert!((a - c).abs() < 1e-12);
        }
    }
}
