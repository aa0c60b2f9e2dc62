//! Construct the four state families, inspect amplitudes, and round-trip
//! one of them through the QSV1 file format.
//!
//! ```bash
//! cargo run --example generate_states
//! ```

use entspec::{load_state, save_state, PureState, RandomSeed, Topology};

fn main() -> entspec::Result<()> {
    let ghz = PureState::ghz(3)?;
    println!("GHZ(3): dim={} norm²={:.15}", ghz.dim(), ghz.norm_sqr());
    for (k, z) in ghz.amplitudes().iter().enumerate() {
        if z.norm_sqr() > 0.0 {
            println!("  |{k:03b}⟩ -> {:+.6}", z.re);
        }
    }

    let w = PureState::w(4)?;
    println!("\nW(4): one-hot support at indices 1, 2, 4, 8");
    for (k, z) in w.amplitudes().iter().enumerate() {
        if z.norm_sqr() > 0.0 {
            println!("  |{k:04b}⟩ -> {:+.6}", z.re);
        }
    }

    // Cluster amplitudes all share the modulus 2^(-n/2); only signs differ.
    let cluster = PureState::cluster(3, Topology::Chain)?;
    let signs: Vec<char> = cluster
        .amplitudes()
        .iter()
        .map(|z| if z.re > 0.0 { '+' } else { '-' })
        .collect();
    println!("\ncluster(3, chain) sign pattern over k=0..7: {signs:?}");

    let haar = PureState::haar_random(10, RandomSeed(42))?;
    println!("\nHaar(10, seed 42): norm²={:.15}", haar.norm_sqr());
    let again = PureState::haar_random(10, RandomSeed(42))?;
    println!("same seed reproduces bit-for-bit: {}", haar == again);

    let dir = std::env::temp_dir();
    let path = dir.join("entspec_example_haar10.qsv");
    save_state(&haar, &path)?;
    let loaded = load_state(&path)?;
    println!(
        "saved {} bytes to {} and loaded back identical: {}",
        16 + 16 * haar.dim(),
        path.display(),
        loaded == haar
    );
    std::fs::remove_file(&path).ok();
    Ok(())
}
