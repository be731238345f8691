//! Periodic grid fields with consistent sample/spectrum pairs, quadrature
//! L^p norms and Fourier-multiplier calculus.
//!
//! Convention: `f(x) = sum_k spectrum[k] * exp(i xi_k . x)` with
//! `xi_k = 2 pi k / L` componentwise and `k in [-n/2, n/2)`. The forward
//! transform therefore divides the raw DFT by the point count.

use std::any::{Any, TypeId};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex;
use rustfft::{Fft, FftDirection, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Periodic grid on the torus `[0, L)^d` with `n` points per axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    /// Spatial dimension, 1 or 2.
    pub d: usize,
    /// Points per axis; a power of two, at least 16.
    pub n: usize,
    /// Box length per axis.
    pub len: f64,
}

impl Grid {
    pub fn new(d: usize, n: usize, len: f64) -> Result<Self> {
        if d != 1 && d != 2 {
            return Err(Error::BadDimension(d));
        }
        if n < 16 || !n.is_power_of_two() {
            return Err(Error::BadGridSize(n));
        }
        if !(len > 0.0) {
            return Err(Error::BadParameter {
                name: "L",
                value: len,
                range: "(0, inf)",
            });
        }
        Ok(Grid { d, n, len })
    }

    /// Total number of grid points.
    pub fn total(&self) -> usize {
        self.n.pow(self.d as u32)
    }

    /// Quadrature cell volume `(L/n)^d`.
    pub fn cell_volume(&self) -> f64 {
        (self.len / self.n as f64).powi(self.d as i32)
    }

    /// Largest resolved wavenumber magnitude per axis, `pi n / L`.
    pub fn nyquist(&self) -> f64 {
        std::f64::consts::PI * self.n as f64 / self.len
    }

    /// Signed integer mode along one axis for a storage index.
    #[inline]
    fn signed_mode(&self, i: usize) -> i64 {
        if i <= self.n / 2 - 1 {
            i as i64
        } else {
            i as i64 - self.n as i64
        }
    }

    /// Integer mode vector `k` of a flat storage index.
    #[inline]
    pub fn mode(&self, idx: usize) -> [i64; 2] {
        match self.d {
            1 => [self.signed_mode(idx), 0],
            _ => [self.signed_mode(idx / self.n), self.signed_mode(idx % self.n)],
        }
    }

    /// Wavenumber vector `xi_k = 2 pi k / L` of a flat storage index.
    #[inline]
    pub fn wavenumber(&self, idx: usize) -> [f64; 2] {
        let k = self.mode(idx);
        let s = 2.0 * std::f64::consts::PI / self.len;
        [s * k[0] as f64, s * k[1] as f64]
    }

    /// Wavenumber magnitude `|xi_k|`.
    #[inline]
    pub fn wavenumber_mag(&self, idx: usize) -> f64 {
        let xi = self.wavenumber(idx);
        xi[0].hypot(xi[1])
    }

    /// Physical coordinates of a flat storage index.
    #[inline]
    pub fn coords(&self, idx: usize) -> [f64; 2] {
        let h = self.len / self.n as f64;
        match self.d {
            1 => [h * idx as f64, 0.0],
            _ => [h * (idx / self.n) as f64, h * (idx % self.n) as f64],
        }
    }

    /// Storage index of the opposite mode `-k`.
    #[inline]
    fn conjugate_index(&self, idx: usize) -> usize {
        let neg = |i: usize| if i == 0 { 0 } else { self.n - i };
        match self.d {
            1 => neg(idx),
            _ => neg(idx / self.n) * self.n + neg(idx % self.n),
        }
    }
}

// Per-thread FFT plan cache keyed by scalar type, length and direction.
thread_local! {
    static PLANS: RefCell<HashMap<(TypeId, usize, bool), Box<dyn Any>>> =
        RefCell::new(HashMap::new());
}

fn plan<T: Scalar>(n: usize, forward: bool) -> Arc<dyn Fft<T>> {
    PLANS.with(|cell| {
        let mut map = cell.borrow_mut();
        let key = (TypeId::of::<T>(), n, forward);
        let entry = map.entry(key).or_insert_with(|| {
            let mut planner = FftPlanner::<T>::new();
            let dir = if forward {
                FftDirection::Forward
            } else {
                FftDirection::Inverse
            };
            Box::new(planner.plan_fft(n, dir)) as Box<dyn Any>
        });
        entry
            .downcast_ref::<Arc<dyn Fft<T>>>()
            .expect("plan cache type")
            .clone()
    })
}

/// In-place multi-dimensional FFT in the crate convention.
fn fft_nd<T: Scalar>(grid: &Grid, data: &mut [Complex<T>], forward: bool) {
    let n = grid.n;
    let fft = plan::<T>(n, forward);
    match grid.d {
        1 => fft.process(data),
        _ => {
            for row in data.chunks_exact_mut(n) {
                fft.process(row);
            }
            let mut col = vec![Complex::default(); n];
            for j in 0..n {
                for i in 0..n {
                    col[i] = data[i * n + j];
                }
                fft.process(&mut col);
                for i in 0..n {
                    data[i * n + j] = col[i];
                }
            }
        }
    }
}

/// Real scalar field on a periodic grid carrying both physical samples and
/// Fourier coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField<T: Scalar> {
    grid: Grid,
    samples: Vec<T>,
    spectrum: Vec<Complex<T>>,
}

impl<T: Scalar> GridField<T> {
    /// Forward transform: build the consistent pair from physical samples.
    pub fn from_samples(grid: Grid, samples: Vec<T>) -> Result<Self> {
        if samples.len() != grid.total() {
            return Err(Error::SampleCountMismatch {
                got: samples.len(),
                want: grid.total(),
            });
        }
        let mut spectrum: Vec<Complex<T>> = samples
            .iter()
            .map(|&s| Complex::new(s, T::zero()))
            .collect();
        fft_nd(&grid, &mut spectrum, true);
        let norm = T::of(1.0 / grid.total() as f64);
        for z in spectrum.iter_mut() {
            *z = z.scale(norm);
        }
        Ok(GridField {
            grid,
            samples,
            spectrum,
        })
    }

    /// Build a field from Fourier coefficients; samples are the real part of
    /// the inverse transform. Intended for (approximately) Hermitian spectra.
    pub fn from_spectrum(grid: Grid, spectrum: Vec<Complex<T>>) -> Result<Self> {
        if spectrum.len() != grid.total() {
            return Err(Error::SampleCountMismatch {
                got: spectrum.len(),
                want: grid.total(),
            });
        }
        let mut work = spectrum.clone();
        fft_nd(&grid, &mut work, false);
        let samples = work.iter().map(|z| z.re).collect();
        Ok(GridField {
            grid,
            samples,
            spectrum,
        })
    }

    pub fn from_fn(grid: Grid, f: impl Fn([f64; 2]) -> f64) -> Result<Self> {
        let samples = (0..grid.total())
            .map(|i| T::of(f(grid.coords(i))))
            .collect();
        Self::from_samples(grid, samples)
    }

    pub fn zeros(grid: Grid) -> Self {
        GridField {
            grid,
            samples: vec![T::zero(); grid.total()],
            spectrum: vec![Complex::default(); grid.total()],
        }
    }

    pub fn constant(grid: Grid, value: T) -> Self {
        let mut f = Self::zeros(grid);
        f.samples.iter_mut().for_each(|s| *s = value);
        f.spectrum[0] = Complex::new(value, T::zero());
        f
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    pub fn spectrum(&self) -> &[Complex<T>] {
        &self.spectrum
    }

    /// Mean value over the torus (the DC Fourier coefficient).
    pub fn mean(&self) -> T {
        self.spectrum[0].re
    }

    pub fn max_abs(&self) -> T {
        self.samples
            .iter()
            .fold(T::zero(), |m, &s| m.max(s.abs()))
    }

    /// Largest deviation of the spectrum from Hermitian symmetry.
    pub fn hermitian_residual(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.spectrum.len() {
            let j = self.grid.conjugate_index(i);
            let diff = self.spectrum[i] - self.spectrum[j].conj();
            worst = worst.max(diff.norm());
        }
        worst
    }

    /// Largest imaginary residue of the inverse transform, relative to the
    /// field scale. Near zero whenever the spectrum is Hermitian.
    pub fn imag_residue(&self) -> T {
        let mut work = self.spectrum.clone();
        fft_nd(&self.grid, &mut work, false);
        let imag = work.iter().fold(T::zero(), |m, z| m.max(z.im.abs()));
        let scale = work.iter().fold(T::zero(), |m, z| m.max(z.norm()));
        if scale == T::zero() {
            T::zero()
        } else {
            imag / scale
        }
    }

    /// Rectangle-rule `L^p` norm; `p = inf` returns the max norm.
    pub fn lp_norm(&self, p: f64) -> Result<T> {
        lp_quadrature(&self.grid, p, self.samples.iter().map(|&s| s.abs()))
    }

    /// Quadrature `L^2` inner product with another field.
    pub fn inner_l2(&self, other: &Self) -> Result<T> {
        self.check_grid(other)?;
        let cell = T::of(self.grid.cell_volume());
        Ok(self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(&a, &b)| a * b)
            .sum::<T>()
            * cell)
    }

    fn check_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }

    /// Pointwise product of physical samples.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_grid(other)?;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(&a, &b)| a * b)
            .collect();
        Self::from_samples(self.grid, samples)
    }

    /// Apply a pointwise function to the samples.
    pub fn map(&self, f: impl Fn(T) -> T) -> Result<Self> {
        Self::from_samples(self.grid, self.samples.iter().map(|&s| f(s)).collect())
    }

    /// Multiply the spectrum pointwise by a symbol of the wavenumber vector.
    pub fn fourier_multiplier(&self, m: impl Fn([f64; 2]) -> Complex<f64>) -> Self {
        let spectrum = self
            .spectrum
            .iter()
            .enumerate()
            .map(|(i, &z)| {
                let s = m(self.grid.wavenumber(i));
                z * Complex::new(T::of(s.re), T::of(s.im))
            })
            .collect();
        Self::from_spectrum(self.grid, spectrum).expect("spectrum length preserved")
    }

    /// Multiply the spectrum by a real radial symbol `m(|xi|)`.
    pub fn radial_multiplier(&self, m: impl Fn(f64) -> f64) -> Self {
        self.fourier_multiplier(|xi| Complex::new(m(xi[0].hypot(xi[1])), 0.0))
    }

    /// Partial derivative along axis `a` (multiplier `i xi_a`).
    pub fn derivative(&self, a: usize) -> Self {
        self.fourier_multiplier(|xi| Complex::new(0.0, xi[a]))
    }

    /// Gradient as a vector field.
    pub fn gradient(&self) -> VecField<T> {
        VecField {
            components: (0..self.grid.d).map(|a| self.derivative(a)).collect(),
        }
    }

    /// Laplacian (multiplier `-|xi|^2`).
    pub fn laplacian(&self) -> Self {
        self.fourier_multiplier(|xi| Complex::new(-(xi[0] * xi[0] + xi[1] * xi[1]), 0.0))
    }

    /// Heat propagator `exp(mu t Laplacian)`.
    pub fn heat_propagate(&self, mu: f64, t: f64) -> Self {
        self.fourier_multiplier(|xi| {
            Complex::new((-mu * t * (xi[0] * xi[0] + xi[1] * xi[1])).exp(), 0.0)
        })
    }

    /// Zero every mode with `|k_a| >= fraction * n/2` on some axis
    /// (the 2/3-rule dealiasing truncation for `fraction = 2/3`).
    pub fn band_limit(&self, fraction: f64) -> Result<Self> {
        if !(fraction > 0.0 && fraction <= 1.0) {
            return Err(Error::BadBandFraction);
        }
        let cut = fraction * self.grid.n as f64 / 2.0;
        let grid = self.grid;
        Ok(self.fourier_multiplier(move |xi| {
            let scale = grid.len / (2.0 * std::f64::consts::PI);
            let k0 = (xi[0] * scale).abs();
            let k1 = (xi[1] * scale).abs();
            if k0 >= cut || k1 >= cut {
                Complex::new(0.0, 0.0)
            } else {
                Complex::new(1.0, 0.0)
            }
        }))
    }

    /// Zero every mode with `|xi| >= xi_max` (radial truncation).
    pub fn truncate_radial(&self, xi_max: f64) -> Self {
        self.radial_multiplier(|r| if r >= xi_max { 0.0 } else { 1.0 })
    }

    /// Subtract the mean, leaving the oscillating part.
    pub fn remove_mean(&self) -> Self {
        let mut out = self.clone();
        let mean = out.spectrum[0].re;
        out.spectrum[0] = Complex::default();
        out.samples.iter_mut().for_each(|s| *s -= mean);
        out
    }

    /// Linear combination `alpha * self + beta * other`; spectra and samples
    /// both combine exactly, no transform required.
    pub fn lincomb(&self, alpha: T, other: &Self, beta: T) -> Result<Self> {
        self.check_grid(other)?;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(&a, &b)| alpha * a + beta * b)
            .collect();
        let spectrum = self
            .spectrum
            .iter()
            .zip(&other.spectrum)
            .map(|(&a, &b)| a.scale(alpha) + b.scale(beta))
            .collect();
        Ok(GridField {
            grid: self.grid,
            samples,
            spectrum,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.lincomb(T::one(), other, T::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.lincomb(T::one(), other, -T::one())
    }

    pub fn scale(&self, alpha: T) -> Self {
        let samples = self.samples.iter().map(|&s| alpha * s).collect();
        let spectrum = self.spectrum.iter().map(|&z| z.scale(alpha)).collect();
        GridField {
            grid: self.grid,
            samples,
            spectrum,
        }
    }
}

/// Rectangle-rule quadrature of `(sum |f_i|^p * cell)^(1/p)` over magnitudes.
fn lp_quadrature<T: Scalar>(
    grid: &Grid,
    p: f64,
    magnitudes: impl Iterator<Item = T>,
) -> Result<T> {
    if p.is_infinite() && p > 0.0 {
        return Ok(magnitudes.fold(T::zero(), |m, s| m.max(s)));
    }
    if !(p >= 1.0) || p.is_nan() {
        return Err(Error::BadExponent(p));
    }
    let cell = T::of(grid.cell_volume());
    let pt = T::of(p);
    if p == 2.0 {
        let sum = magnitudes.map(|s| s * s).sum::<T>();
        return Ok((sum * cell).sqrt());
    }
    if p == 1.0 {
        return Ok(magnitudes.sum::<T>() * cell);
    }
    let sum = magnitudes.map(|s| s.powf(pt)).sum::<T>();
    Ok((sum * cell).powf(pt.recip()))
}

/// Vector field: `d` grid fields sharing one grid.
#[derive(Debug, Clone, PartialEq)]
pub struct VecField<T: Scalar> {
    components: Vec<GridField<T>>,
}

impl<T: Scalar> VecField<T> {
    pub fn new(components: Vec<GridField<T>>) -> Result<Self> {
        let grid = components
            .first()
            .ok_or(Error::BadDimension(0))?
            .grid();
        if components.len() != grid.d {
            return Err(Error::BadDimension(components.len()));
        }
        if components.iter().any(|c| c.grid() != grid) {
            return Err(Error::GridMismatch);
        }
        Ok(VecField { components })
    }

    pub fn zeros(grid: Grid) -> Self {
        VecField {
            components: (0..grid.d).map(|_| GridField::zeros(grid)).collect(),
        }
    }

    pub fn grid(&self) -> Grid {
        self.components[0].grid()
    }

    pub fn components(&self) -> &[GridField<T>] {
        &self.components
    }

    pub fn component(&self, a: usize) -> &GridField<T> {
        &self.components[a]
    }

    /// Apply one scalar-field map to every component.
    pub fn map_components(&self, f: impl Fn(&GridField<T>) -> GridField<T>) -> Self {
        VecField {
            components: self.components.iter().map(f).collect(),
        }
    }

    pub fn try_map_components(
        &self,
        f: impl Fn(&GridField<T>) -> Result<GridField<T>>,
    ) -> Result<Self> {
        let components = self
            .components
            .iter()
            .map(f)
            .collect::<Result<Vec<_>>>()?;
        Ok(VecField { components })
    }

    pub fn divergence(&self) -> GridField<T> {
        let mut out = self.components[0].derivative(0);
        for a in 1..self.components.len() {
            out = out
                .add(&self.components[a].derivative(a))
                .expect("shared grid");
        }
        out
    }

    pub fn lincomb(&self, alpha: T, other: &Self, beta: T) -> Result<Self> {
        if self.grid() != other.grid() {
            return Err(Error::GridMismatch);
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.lincomb(alpha, b, beta))
            .collect::<Result<Vec<_>>>()?;
        Ok(VecField { components })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.lincomb(T::one(), other, T::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.lincomb(T::one(), other, -T::one())
    }

    pub fn scale(&self, alpha: T) -> Self {
        VecField {
            components: self.components.iter().map(|c| c.scale(alpha)).collect(),
        }
    }

    /// `L^p` norm of the pointwise Euclidean magnitude.
    pub fn lp_norm(&self, p: f64) -> Result<T> {
        let grid = self.grid();
        let total = grid.total();
        let mags = (0..total).map(|i| {
            self.components
                .iter()
                .map(|c| {
                    let s = c.samples()[i];
                    s * s
                })
                .sum::<T>()
                .sqrt()
        });
        lp_quadrature(&grid, p, mags)
    }

    pub fn max_abs(&self) -> T {
        let total = self.grid().total();
        (0..total)
            .map(|i| {
                self.components
                    .iter()
                    .map(|c| {
                        let s = c.samples()[i];
                        s * s
                    })
                    .sum::<T>()
                    .sqrt()
            })
            .fold(T::zero(), |m, s| m.max(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid1(n: usize) -> Grid {
        Grid::new(1, n, 2.0 * std::f64::consts::PI).unwrap()
    }

    #[test]
    fn rejects_bad_grid() {
        assert!(Grid::new(1, 100, 1.0).is_err());
        assert!(Grid::new(1, 8, 1.0).is_err());
        assert!(Grid::new(3, 64, 1.0).is_err());
    }

    #[test]
    fn constant_field_dc_mode() {
        let g = grid1(64);
        let f = GridField::<f64>::constant(g, 1.0);
        assert!((f.spectrum()[0].re - 1.0).abs() < 1e-15);
        for k in 1..g.total() {
            assert!(f.spectrum()[k].norm() < 1e-15);
        }
    }

    #[test]
    fn cosine_spectrum_is_half_at_pm4() {
        let g = grid1(64);
        let f = GridField::<f64>::from_fn(g, |x| (4.0 * x[0]).cos()).unwrap();
        for i in 0..g.total() {
            let k = g.mode(i)[0];
            let expect = if k == 4 || k == -4 { 0.5 } else { 0.0 };
            assert!(
                (f.spectrum()[i].re - expect).abs() < 1e-13,
                "k={k} re={}",
                f.spectrum()[i].re
            );
            assert!(f.spectrum()[i].im.abs() < 1e-13);
        }
    }

    #[test]
    fn round_trip_reproduces_samples() {
        let g = grid1(128);
        let samples: Vec<f64> = (0..g.total())
            .map(|i| ((i * 2654435761) % 1000) as f64 / 500.0 - 1.0)
            .collect();
        let f = GridField::from_samples(g, samples.clone()).unwrap();
        let back = GridField::from_spectrum(g, f.spectrum().to_vec()).unwrap();
        let scale = f.max_abs();
        let err = samples
            .iter()
            .zip(back.samples())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(err / scale < 1e-13, "relative error {}", err / scale);
    }

    #[test]
    fn lp_norms_of_reference_fields() {
        let g = grid1(64);
        let zero = GridField::<f64>::zeros(g);
        assert_eq!(zero.lp_norm(2.0).unwrap(), 0.0);
        let one = GridField::<f64>::constant(g, 1.0);
        let expect = (2.0 * std::f64::consts::PI).sqrt();
        assert!((one.lp_norm(2.0).unwrap() - expect).abs() < 1e-12);
        let cosine = GridField::<f64>::from_fn(g, |x| x[0].cos()).unwrap();
        assert!((cosine.lp_norm(2.0).unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert!((cosine.lp_norm(f64::INFINITY).unwrap() - 1.0).abs() < 1e-12);
        assert!(cosine.lp_norm(0.5).is_err());
    }

    #[test]
    fn parseval_identity() {
        let g = grid1(256);
        let samples: Vec<f64> = (0..g.total())
            .map(|i| ((i * 1103515245 + 12345) % 2048) as f64 / 1024.0 - 1.0)
            .collect();
        let f = GridField::from_samples(g, samples).unwrap();
        let l2 = f.lp_norm(2.0).unwrap();
        let spec: f64 = f.spectrum().iter().map(|z| z.norm_sqr()).sum();
        let rhs = (g.len * spec).sqrt();
        assert!((l2 - rhs).abs() / rhs < 1e-12);
    }

    #[test]
    fn derivative_of_cosine() {
        let g = grid1(64);
        let f = GridField::<f64>::from_fn(g, |x| (4.0 * x[0]).cos()).unwrap();
        let df = f.derivative(0);
        let expect = GridField::<f64>::from_fn(g, |x| -4.0 * (4.0 * x[0]).sin()).unwrap();
        let err = df.sub(&expect).unwrap().max_abs();
        assert!(err < 1e-12, "max error {err}");
    }

    #[test]
    fn laplacian_kills_constants() {
        let g = grid1(32);
        let f = GridField::<f64>::constant(g, 3.25);
        assert!(f.laplacian().max_abs() < 1e-14);
    }

    #[test]
    fn identity_symbol_is_identity() {
        let g = grid1(64);
        let f = GridField::<f64>::from_fn(g, |x| (3.0 * x[0]).sin() + 0.2).unwrap();
        let same = f.radial_multiplier(|_| 1.0);
        assert!(f.sub(&same).unwrap().max_abs() < 1e-13);
    }

    #[test]
    fn multiplier_composition_matches_product_symbol() {
        let g = grid1(64);
        let f = GridField::<f64>::from_fn(g, |x| (2.0 * x[0]).cos() + (5.0 * x[0]).sin())
            .unwrap();
        let m1 = |r: f64| 1.0 / (1.0 + r * r);
        let m2 = |r: f64| (-0.3 * r).exp();
        let a = f.radial_multiplier(m1).radial_multiplier(m2);
        let b = f.radial_multiplier(|r| m1(r) * m2(r));
        for (x, y) in a.spectrum().iter().zip(b.spectrum()) {
            assert!((x - y).norm() <= 1e-15 * (1.0 + y.norm()));
        }
    }

    #[test]
    fn reality_preserved_by_radial_symbols() {
        let g = grid1(128);
        let samples: Vec<f64> = (0..g.total())
            .map(|i| ((i * 48271) % 4096) as f64 / 2048.0 - 1.0)
            .collect();
        let f = GridField::from_samples(g, samples).unwrap();
        let out = f.radial_multiplier(|r| (-(r * r)).exp());
        assert!(out.hermitian_residual() < 1e-12 * f.max_abs());
        assert!(out.imag_residue() < 1e-12);
    }

    #[test]
    fn two_dimensional_round_trip_and_gradient() {
        let g = Grid::new(2, 32, 2.0 * std::f64::consts::PI).unwrap();
        let f =
            GridField::<f64>::from_fn(g, |x| (3.0 * x[0]).cos() * (2.0 * x[1]).sin()).unwrap();
        let back = GridField::from_spectrum(g, f.spectrum().to_vec()).unwrap();
        let err: f64 = f
            .samples()
            .iter()
            .zip(back.samples())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(err < 1e-13);
        let grad = f.gradient();
        let gx = GridField::<f64>::from_fn(g, |x| {
            -3.0 * (3.0 * x[0]).sin() * (2.0 * x[1]).sin()
        })
        .unwrap();
        assert!(grad.component(0).sub(&gx).unwrap().max_abs() < 1e-11);
        let div = grad.divergence();
        let lap = f.laplacian();
        assert!(div.sub(&lap).unwrap().max_abs() < 1e-11);
    }

    #[test]
    fn band_limit_zeroes_high_modes() {
        let g = grid1(64);
        let f = GridField::<f64>::from_fn(g, |x| (30.0 * x[0]).cos() + (2.0 * x[0]).cos())
            .unwrap();
        let cut = f.band_limit(2.0 / 3.0).unwrap();
        let expect = GridField::<f64>::from_fn(g, |x| (2.0 * x[0]).cos()).unwrap();
        assert!(cut.sub(&expect).unwrap().max_abs() < 1e-12);
        assert!(f.band_limit(0.0).is_err());
    }

    #[test]
    fn f32_smoke() {
        let g = grid1(64);
        let f = GridField::<f32>::from_fn(g, |x| (4.0 * x[0]).cos()).unwrap();
        let back = GridField::from_spectrum(g, f.spectrum().to_vec()).unwrap();
        let err = f
            .samples()
            .iter()
            .zip(back.samples())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f32, f32::max);
        assert!(err < 1e-5);
        assert!((f.lp_norm(2.0).unwrap() - std::f32::consts::PI.sqrt()).abs() < 1e-4);
    }
}
