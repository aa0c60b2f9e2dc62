//! Overlay the analytic participation-number density on an empirical sweep
//! histogram and report the gap diagnostics.
//!
//! ```bash
//! cargo run --example analytic_vs_empirical
//! ```

use entspec::{
    compare_to_analytic, density, empirical_stats, histogram, sweep, AnalyticParams, MuMode,
    PureState, RandomSeed, Topology,
};

fn main() -> entspec::Result<()> {
    let n = 10;
    let params = AnalyticParams::for_qubit_count(n)?;
    println!(
        "n={n}: alpha={}, mu_exact={:.6}, mu_asymptotic={:.6}, sigma_N={:.6}",
        params.alpha, params.mu_exact, params.mu_asymptotic, params.sigma_participation
    );
    println!(
        "density is centered near 1/mu_exact = {:.3}; its width sigma_N depends only on the\n\
         parity of n (√2/4 even, 2√2/9 odd)",
        1.0 / params.mu_exact
    );

    let state = PureState::haar_random(n, RandomSeed(9))?;
    let result = sweep(&state)?;
    let stats = empirical_stats(&result)?;
    println!(
        "\nHaar({n}) sweep: mean={:.4} std={:.4} over {} cuts",
        stats.mean_participation,
        stats.std_participation,
        result.n_p()
    );

    // Side-by-side: normalized histogram counts vs the density at bin centers.
    let center = 1.0 / params.mu_exact;
    let bins = histogram(&result, 16, Some((center - 2.0, center + 2.0)))?;
    let n_p = result.n_p() as f64;
    println!("\n   bin center   empirical   analytic");
    for bin in &bins {
        let mid = 0.5 * (bin.lower + bin.upper);
        let width = bin.upper - bin.lower;
        let empirical = bin.count as f64 / (n_p * width);
        let analytic = density(mid, &params, MuMode::Exact)?;
        println!("   {mid:9.3}   {empirical:9.4}   {analytic:8.4}");
    }

    let gaps = compare_to_analytic(&result, &params)?;
    println!(
        "\ngaps vs analytic: mean {:.3}%, std {:.2}%, sup (per-bin mass) {:.4}",
        100.0 * gaps.mean_gap,
        100.0 * gaps.std_gap,
        gaps.sup_gap
    );

    // A structured state sits far from the typical ensemble.
    let cluster = sweep(&PureState::cluster(n, Topology::Chain)?)?;
    let cluster_gaps = compare_to_analytic(&cluster, &params)?;
    println!(
        "cluster({n}, chain) mean gap for comparison: {:.1}%",
        100.0 * cluster_gaps.mean_gap
    );
    Ok(())
}
