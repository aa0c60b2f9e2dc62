//! Recompute the mean participation number of the four state families over
//! a range of n and compare against the embedded reference values.
//!
//! Equivalent to `entspec table --nmin 5 --nmax 10 --samples 8`; extend the
//! range or sample count for a fuller (slower) reproduction.
//!
//! ```bash
//! cargo run --example reference_table
//! ```

use entspec::reference::reference_for;
use entspec::{empirical_stats, sweep, PureState, RandomSeed, Topology};

fn mean(state: &PureState) -> entspec::Result<f64> {
    Ok(empirical_stats(&sweep(state)?)?.mean_participation)
}

fn main() -> entspec::Result<()> {
    let samples = 8u64;
    let base_seed = 42u64;
    println!("mean N_AB over balanced bipartitions (random column: {samples} Haar samples)\n");
    println!("{:>3} {:>10} {:>10} {:>10} {:>10}   reference (ghz w cluster random)", "n", "ghz", "w", "cluster", "random");
    for n in 5..=10u32 {
        let ghz = mean(&PureState::ghz(n)?)?;
        let w = mean(&PureState::w(n)?)?;
        let cluster = mean(&PureState::cluster(n, Topology::Chain)?)?;
        let mut random = 0.0;
        for i in 0..samples {
            random += mean(&PureState::haar_random(n, RandomSeed(base_seed + i))?)?;
        }
        random /= samples as f64;
        let reference = reference_for(n)
            .map(|r| format!("({} {} {} {})", r.ghz, r.w, r.cluster, r.random))
            .unwrap_or_else(|| "-".into());
        println!("{n:>3} {ghz:>10.3} {w:>10.3} {cluster:>10.3} {random:>10.3}   {reference}");
    }
    println!(
        "\nGHZ and W stay near 2 for every n; cluster and random grow with n, and the\n\
         random column approaches its analytic mean N/(N_A+N_B−1) from below as n grows."
    );
    Ok(())
}
