//! Enumerate balanced bipartitions and walk through the index bijection
//! that splits a basis label into subsystem labels.
//!
//! ```bash
//! cargo run --example balanced_bipartitions
//! ```

use entspec::{balanced_count, enumerate_balanced, BipartitionMask};

fn main() -> entspec::Result<()> {
    println!("balanced bipartitions of n=5 qubits (n_A = 2):");
    for b in enumerate_balanced(5)? {
        println!(
            "  mask {} = {:05b}  A-qubits {:?}",
            b.hex_string(),
            b.mask(),
            (0..5).filter(|i| b.mask() >> i & 1 == 1).collect::<Vec<_>>()
        );
    }
    for n in [5u32, 8, 12, 16] {
        println!("n={n:2}: {} balanced bipartitions", balanced_count(n));
    }

    // Splitting k = 13 = 1101b with A = qubits {0, 1}: A sees bits (1, 0),
    // B sees bits (1, 1).
    let b = BipartitionMask::new(4, 0b0011)?;
    let (j_a, l_b) = b.split_index(13)?;
    println!("\nsplit_index(13) under mask 0011 -> (j_A={j_a}, l_B={l_b})");
    println!("join_index({j_a}, {l_b}) -> {}", b.join_index(j_a, l_b));

    let c = b.complement();
    println!(
        "complement of {} is {} (n_A {} -> {})",
        b.hex_string(),
        c.hex_string(),
        b.n_a(),
        c.n_a()
    );

    // The bijection covers the full index range exactly once.
    let b = BipartitionMask::new(3, 0b010)?;
    let pairs: Vec<(u64, u64)> = (0..8).map(|k| b.split_index(k).unwrap()).collect();
    println!("\nall (j_A, l_B) pairs for n=3, mask 010: {pairs:?}");
    Ok(())
}
