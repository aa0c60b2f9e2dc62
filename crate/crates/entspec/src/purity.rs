//! The purity kernel: reduced density matrix, purity, and participation
//! number for a state and a bipartition.
//!
//! The production path gathers the amplitudes into an `N_A × N_B` matrix M
//! through the bipartition's index bijection and contracts `ρ_A = M·M†`,
//! costing `O(N_A²·N_B)` per bipartition. The literal quartic coefficient
//! sum is kept as [`purity_quartic_oracle`] for cross-checking only.

use num_complex::Complex64;

use crate::bipartition::{submasks_ascending, BipartitionMask};
use crate::error::{Error, Result};
use crate::state::PureState;

/// Cap for the quartic-sum oracle, which costs O(N_A²·N_B²).
pub const ORACLE_MAX_QUBITS: u32 = 12;

/// The reduced density matrix ρ_A of a bipartition: Hermitian, trace 1,
/// positive semidefinite, stored dense row-major.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    /// Row-major entries, `dim × dim` of them.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|j| self.entry(j, j)).sum()
    }

    /// Σ|ρ[j][j′]|², which equals tr ρ² for a Hermitian matrix.
    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// Purity π_AB together with its derived quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PurityRecord {
    /// tr ρ_A², in (0, 1].
    pub purity: f64,
    /// Participation number 1/π_AB: the effective Schmidt rank, in
    /// `[1, min(N_A, N_B)]`.
    pub participation: f64,
    /// log₂ of the participation number: the effective number of entangled
    /// qubits severed by the bipartition.
    pub entangled_qubits: f64,
}

impl PurityRecord {
    fn from_purity(purity: f64) -> Self {
        PurityRecord {
            purity,
            participation: 1.0 / purity,
            entangled_qubits: -purity.log2(),
        }
    }
}

fn check_dims(state: &PureState, b: &BipartitionMask) -> Result<()> {
    if state.qubit_count() != b.qubit_count() {
        return Err(Error::invalid(format!(
            "state has {} qubits but the bipartition splits {}",
            state.qubit_count(),
            b.qubit_count()
        )));
    }
    Ok(())
}

/// Gather the amplitudes into the N_A × N_B matrix M with M[j_A][l_B] =
/// z_k, rows and columns in ascending subsystem-index order.
fn gather_matrix(state: &PureState, b: &BipartitionMask) -> Vec<Complex64> {
    let rows: Vec<u64> = submasks_ascending(b.mask()).collect();
    let cols: Vec<u64> = submasks_ascending(b.complement_bits()).collect();
    let amps = state.amplitudes();
    let mut m = Vec::with_capacity(rows.len() * cols.len());
    for &r in &rows {
        for &c in &cols {
            m.push(amps[(r | c) as usize]);
        }
    }
    m
}

/// Partial trace over subsystem B: ρ_A[j][j′] = Σ_l M[j][l]·conj(M[j′][l]).
pub fn reduce(state: &PureState, b: &BipartitionMask) -> Result<GramMatrix> {
    check_dims(state, b)?;
    let na = b.dim_a();
    let nb = b.dim_b();
    let m = gather_matrix(state, b);
    let mut entries = vec![Complex64::new(0.0, 0.0); na * na];
    for j in 0..na {
        let row_j = &m[j * nb..(j + 1) * nb];
        for j2 in 0..=j {
            let row_j2 = &m[j2 * nb..(j2 + 1) * nb];
            let mut acc = Complex64::new(0.0, 0.0);
            for (a, b2) in row_j.iter().zip(row_j2) {
                acc += a * b2.conj();
            }
            entries[j * na + j2] = acc;
            entries[j2 * na + j] = acc.conj();
        }
    }
    Ok(GramMatrix { dim: na, entries })
}

/// Purity π_AB = tr ρ_A² and the participation number N_AB = 1/π_AB.
///
/// Contracts on the smaller subsystem (π_AB = π_BA), using the Hermitian
/// symmetry of ρ_A to touch each off-diagonal pair once.
pub fn purity(state: &PureState, b: &BipartitionMask) -> Result<PurityRecord> {
    check_dims(state, b)?;
    let side = if b.n_a() <= b.n_b() { *b } else { b.complement() };
    let na = side.dim_a();
    let nb = side.dim_b();
    let m = gather_matrix(state, &side);
    let mut acc = 0.0;
    for j in 0..na {
        let row_j = &m[j * nb..(j + 1) * nb];
        let diag: f64 = row_j.iter().map(|z| z.norm_sqr()).sum();
        acc += diag * diag;
        for j2 in 0..j {
            let row_j2 = &m[j2 * nb..(j2 + 1) * nb];
            let mut inner = Complex64::new(0.0, 0.0);
            for (a, b2) in row_j.iter().zip(row_j2) {
                inner += a * b2.conj();
            }
            acc += 2.0 * inner.norm_sqr();
        }
    }
    Ok(PurityRecord::from_purity(acc))
}

/// The quartic coefficient sum
/// `π_AB = Σ_{j,j′} Σ_{l,l′} z_{jl}·conj(z_{j′l})·z_{j′l′}·conj(z_{jl′})`
/// evaluated literally, term by term. Test oracle for [`purity`]; refuses
/// above [`ORACLE_MAX_QUBITS`].
///
/// The matrix is assembled by splitting every basis label, the reverse of
/// the production gather, so this also cross-checks the index bijection.
pub fn purity_quartic_oracle(state: &PureState, b: &BipartitionMask) -> Result<f64> {
    check_dims(state, b)?;
    let n = state.qubit_count();
    if n > ORACLE_MAX_QUBITS {
        return Err(Error::AboveCap {
            operation: "quartic-sum purity oracle",
            cap: ORACLE_MAX_QUBITS,
            n,
        });
    }
    let na = b.dim_a();
    let nb = b.dim_b();
    let mut m = vec![Complex64::new(0.0, 0.0); na * nb];
    for (k, &z) in state.amplitudes().iter().enumerate() {
        let (j, l) = b.split_index(k as u64)?;
        m[j as usize * nb + l as usize] = z;
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..na {
        for j2 in 0..na {
            for l in 0..nb {
                for l2 in 0..nb {
                    acc += m[j * nb + l]
                        * m[j2 * nb + l].conj()
                        * m[j2 * nb + l2]
                        * m[j * nb + l2].conj();
                }
            }
        }
    }
    Ok(acc.re)
}

/// Exact participation number of the W state for a bipartition of sizes
/// `(n_A, n_B)`: the reduced state has the two-point spectrum
/// `{n_A/n, n_B/n}`, so `N_AB = n²/(n_A² + n_B²)`.
pub fn w_state_participation(n: u32, n_a: u32) -> Result<f64> {
    if n_a < 1 || n_a >= n {
        return Err(Error::invalid(format!(
            "subsystem size must satisfy 1 ≤ n_A < n, got n_A = {n_a}, n = {n}"
        )));
    }
    let n_b = n - n_a;
    let (nf, af, bf) = (f64::from(n), f64::from(n_a), f64::from(n_b));
    Ok(nf * nf / (af * af + bf * bf))
}
