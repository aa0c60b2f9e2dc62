//! Construction, validation, and perturbation of n-qubit pure states.
//!
//! A state over n qubits is a unit-norm vector of `2^n` complex amplitudes
//! indexed by the computational-basis label `k`, with qubit `i` stored in
//! bit `i` of `k` (bit 0 least significant). All constructors return states
//! normalized to within [`NORM_TOLERANCE`].

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};

/// Hard cap on the qubit count: 2^24 amplitudes is 256 MiB of f64 pairs.
pub const MAX_QUBITS: u32 = 24;

/// Normalization tolerance enforced at construction: |Σ|z_k|² − 1| ≤ 1e-12.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Seed for reproducible Haar sampling. The same `(n, seed)` pair always
/// reproduces the same state bit-for-bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSeed(pub u64);

impl From<u64> for RandomSeed {
    fn from(value: u64) -> Self {
        RandomSeed(value)
    }
}

/// Graph underlying a cluster state: an open chain or a closed ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Chain,
    Ring,
}

impl std::str::FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(Topology::Chain),
            "ring" => Ok(Topology::Ring),
            other => Err(Error::invalid(format!(
                "unknown topology {other:?}, expected \"chain\" or \"ring\""
            ))),
        }
    }
}

/// An immutable n-qubit pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n: u32,
    amplitudes: Vec<Complex64>,
}

fn check_qubit_count(n: u32) -> Result<()> {
    if !(1..=MAX_QUBITS).contains(&n) {
        return Err(Error::invalid(format!(
            "qubit count must be in 1..={MAX_QUBITS}, got {n}"
        )));
    }
    Ok(())
}

impl PureState {
    /// Build a state from raw amplitudes, validating length and normalization.
    pub fn new(n: u32, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubit_count(n)?;
        let dim = 1usize << n;
        if amplitudes.len() != dim {
            return Err(Error::invalid(format!(
                "expected {dim} amplitudes for n = {n}, got {}",
                amplitudes.len()
            )));
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::invalid(format!(
                "state is not normalized: |Σ|z|² − 1| = {:e}",
                (norm_sq - 1.0).abs()
            )));
        }
        Ok(PureState { n, amplitudes })
    }

    /// Loader-side constructor: length is checked; the caller has already
    /// validated the norm at the file-format tolerance.
    pub(crate) fn from_loaded(n: u32, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubit_count(n)?;
        if amplitudes.len() != 1usize << n {
            return Err(Error::format(format!(
                "length mismatch: expected {} amplitudes for n = {n}, got {}",
                1usize << n,
                amplitudes.len()
            )));
        }
        Ok(PureState { n, amplitudes })
    }

    /// The computational basis state |k⟩.
    pub fn basis_state(n: u32, k: u64) -> Result<Self> {
        check_qubit_count(n)?;
        let dim = 1u64 << n;
        if k >= dim {
            return Err(Error::invalid(format!(
                "basis index {k} out of range for n = {n}"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim as usize];
        amplitudes[k as usize] = Complex64::new(1.0, 0.0);
        Ok(PureState { n, amplitudes })
    }

    /// (|0…0⟩ + |1…1⟩)/√2.
    pub fn ghz(n: u32) -> Result<Self> {
        check_qubit_count(n)?;
        let dim = 1usize << n;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        let z = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        amplitudes[0] = z;
        amplitudes[dim - 1] = z;
        Ok(PureState { n, amplitudes })
    }

    /// Uniform superposition of the n one-excitation basis states: amplitude
    /// 1/√n at each one-hot index 2^i.
    pub fn w(n: u32) -> Result<Self> {
        check_qubit_count(n)?;
        let dim = 1usize << n;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        let z = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        for qubit in 0..n {
            amplitudes[1usize << qubit] = z;
        }
        Ok(PureState { n, amplitudes })
    }

    /// Cluster state on the given graph: uniform superposition, then a
    /// controlled-Z along every edge. Chain edges are (0,1), (1,2), …,
    /// (n−2, n−1); a ring adds (n−1, 0).
    pub fn cluster(n: u32, topology: Topology) -> Result<Self> {
        check_qubit_count(n)?;
        let min_n = match topology {
            Topology::Chain => 2,
            Topology::Ring => 3,
        };
        if n < min_n {
            return Err(Error::invalid(format!(
                "{topology:?} cluster state needs n ≥ {min_n}, got {n}"
            )));
        }
        let dim = 1usize << n;
        let amp = 2f64.powi(-(n as i32) / 2)
            * if n % 2 == 1 {
                std::f64::consts::FRAC_1_SQRT_2
            } else {
                1.0
            };
        let mut amplitudes = vec![Complex64::new(amp, 0.0); dim];
        let mut edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        if topology == Topology::Ring {
            edges.push((n - 1, 0));
        }
        for (i, j) in edges {
            let pair = (1usize << i) | (1usize << j);
            for (k, z) in amplitudes.iter_mut().enumerate() {
                if k & pair == pair {
                    *z = -*z;
                }
            }
        }
        Ok(PureState { n, amplitudes })
    }

    /// Haar-random pure state: 2·2^n i.i.d. standard normals as real and
    /// imaginary parts, normalized to the unit sphere. Deterministic in
    /// `(n, seed)`.
    pub fn haar_random(n: u32, seed: RandomSeed) -> Result<Self> {
        check_qubit_count(n)?;
        let dim = 1usize << n;
        let mut rng = ChaCha12Rng::seed_from_u64(seed.0);
        let mut amplitudes = Vec::with_capacity(dim);
        for _ in 0..dim {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            amplitudes.push(Complex64::new(re, im));
        }
        let norm = amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        for z in &mut amplitudes {
            *z /= norm;
        }
        Ok(PureState { n, amplitudes })
    }

    pub fn qubit_count(&self) -> u32 {
        self.n
    }

    /// Hilbert-space dimension 2^n.
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, k: u64) -> Complex64 {
        self.amplitudes[k as usize]
    }

    /// Σ|z_k|²; equals 1 within [`NORM_TOLERANCE`] for any constructed state.
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Apply a 2×2 unitary to one qubit, returning the transformed state.
    ///
    /// `u` is row-major: `[[u00, u01], [u10, u11]]` acting on (|0⟩, |1⟩) of
    /// `qubit`. Rejects matrices that are not unitary within 1e-12.
    pub fn apply_single_qubit_unitary(&self, qubit: u32, u: &[[Complex64; 2]; 2]) -> Result<Self> {
        if qubit >= self.n {
            return Err(Error::invalid(format!(
                "qubit index {qubit} out of range for n = {}",
                self.n
            )));
        }
        check_unitary(u)?;
        let step = 1usize << qubit;
        let mut amplitudes = self.amplitudes.clone();
        for base in (0..amplitudes.len()).step_by(2 * step) {
            for offset in 0..step {
                let lo = base + offset;
                let hi = lo + step;
                let a = amplitudes[lo];
                let b = amplitudes[hi];
                amplitudes[lo] = u[0][0] * a + u[0][1] * b;
                amplitudes[hi] = u[1][0] * a + u[1][1] * b;
            }
        }
        Ok(PureState {
            n: self.n,
            amplitudes,
        })
    }
}

fn check_unitary(u: &[[Complex64; 2]; 2]) -> Result<()> {
    // u†u = I within 1e-12, entrywise.
    let col = |j: usize| (u[0][j], u[1][j]);
    let dot = |a: (Complex64, Complex64), b: (Complex64, Complex64)| a.0.conj() * b.0 + a.1.conj() * b.1;
    let g00 = dot(col(0), col(0));
    let g01 = dot(col(0), col(1));
    let g11 = dot(col(1), col(1));
    let dev = (g00 - 1.0).norm().max(g01.norm()).max((g11 - 1.0).norm());
    if dev > 1e-12 {
        return Err(Error::invalid(format!(
            "matrix is not unitary: max |u†u − 1| entry = {dev:e}"
        )));
    }
    Ok(())
}
