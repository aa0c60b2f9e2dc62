//! Quantify multipartite entanglement of an n-qubit pure state as a
//! distribution rather than a single number: sweep every balanced
//! bipartition (subsystem sizes ⌊n/2⌋ and ⌈n/2⌉), compute the purity
//! π = tr ρ_A² and the participation number N_AB = 1/π of each, and compare
//! the resulting histogram, mean, and spread against the analytic density
//! that typical (Haar-random) states follow.
//!
//! A state is strongly multipartite-entangled when N_AB is large *and*
//! nearly independent of the bipartition: the distribution is a narrow peak
//! at a large value. GHZ states sit at N_AB = 2 for every cut; W states
//! near 2; cluster states reach 2^⌊n/2⌋ on favourable cuts but spread over
//! several octaves; Haar-random states concentrate tightly around
//! N/(N_A + N_B − 1).
//!
//! # Layout
//!
//! - [`state`] — state construction (GHZ, W, cluster, Haar-random), file
//!   round-tripping, single-qubit unitaries.
//! - [`bipartition`] — balanced-bipartition enumeration and the index
//!   bijection `k ↔ (j_A, l_B)`.
//! - [`purity`] — the Gram-matrix purity kernel plus the quartic-sum test
//!   oracle.
//! - [`distribution`] — sweeps, empirical statistics, histograms, and the
//!   analytic mean/width/density.
//! - [`reference`] — embedded reference means for the four state families.
//! - [`cli`] — the `entspec` binary: `gen`, `sweep`, `stats`, `density`,
//!   `hist`, `table`.
//!
//! # Example
//!
//! ```
//! use entspec::{empirical_stats, sweep, PureState, RandomSeed};
//!
//! let state = PureState::haar_random(8, RandomSeed(7)).unwrap();
//! let result = sweep(&state).unwrap();
//! let stats = empirical_stats(&result).unwrap();
//! assert_eq!(result.n_p(), 70); // binomial(8, 4)
//! assert!(stats.mean_participation > 1.0);
//! ```
//!
//! Runnable walkthroughs live under `examples/`; start with
//! `generate_states` and `sweep_and_histogram`.

pub mod bipartition;
pub mod cli;
pub mod distribution;
pub mod error;
pub mod io;
pub mod purity;
pub mod reference;
pub mod state;

pub use bipartition::{balanced_count, enumerate_balanced, BipartitionMask};
pub use distribution::{
    compare_to_analytic, density, density_table, empirical_stats, histogram, sweep,
    sweep_with_cap, AnalyticComparison, AnalyticParams, EmpiricalStats, HistogramBin, MuMode,
    StatsReport, SweepRecord, SweepResult, DEFAULT_HISTOGRAM_BINS, DEFAULT_SWEEP_CAP,
};
pub use error::{Error, Result};
pub use io::{load_state, read_state, save_state, write_qsv};
pub use purity::{
    purity, purity_quartic_oracle, reduce, w_state_participation, GramMatrix, PurityRecord,
    ORACLE_MAX_QUBITS,
};
pub use state::{PureState, RandomSeed, Topology, MAX_QUBITS, NORM_TOLERANCE};
