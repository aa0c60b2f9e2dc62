//! Purity and participation number of the named state families, bipartition
//! by bipartition, with the quartic-sum oracle as a cross-check.
//!
//! ```bash
//! cargo run --example purity_of_named_states
//! ```

use entspec::{
    enumerate_balanced, purity, purity_quartic_oracle, reduce, w_state_participation, PureState,
    Topology,
};

fn main() -> entspec::Result<()> {
    let n = 5;

    println!("GHZ({n}): every balanced cut severs exactly one entangled qubit");
    let ghz = PureState::ghz(n)?;
    for b in enumerate_balanced(n)?.take(3) {
        let rec = purity(&ghz, &b)?;
        println!(
            "  mask {}: purity={:.6} N_AB={:.6} n_AB={:.6}",
            b.hex_string(),
            rec.purity,
            rec.participation,
            rec.entangled_qubits
        );
    }

    println!("\nW({n}): reduced spectrum {{n_A/n, n_B/n}} for every cut");
    let w = PureState::w(n)?;
    let closed = w_state_participation(n, n / 2)?;
    for b in enumerate_balanced(n)?.take(3) {
        let rec = purity(&w, &b)?;
        println!(
            "  mask {}: N_AB={:.9} (closed form {closed:.9})",
            b.hex_string(),
            rec.participation
        );
    }

    println!("\ncluster({n}, chain): stabilizer state, N_AB is an exact power of 2");
    let cluster = PureState::cluster(n, Topology::Chain)?;
    for b in enumerate_balanced(n)? {
        let rec = purity(&cluster, &b)?;
        let oracle = purity_quartic_oracle(&cluster, &b)?;
        println!(
            "  mask {}: N_AB={:.1}  quartic oracle agrees to {:.1e}",
            b.hex_string(),
            rec.participation,
            (rec.purity - oracle).abs()
        );
    }

    // The reduced density matrix itself: GHZ keeps two equal branches.
    let b = enumerate_balanced(4)?.next().unwrap();
    let rho = reduce(&PureState::ghz(4)?, &b)?;
    println!("\nρ_A of GHZ(4), mask {} (dim {}):", b.hex_string(), rho.dim());
    for row in 0..rho.dim() {
        let cells: Vec<String> = (0..rho.dim())
            .map(|col| format!("{:+.2}", rho.entry(row, col).re))
            .collect();
        println!("  [{}]", cells.join(" "));
    }
    println!("trace = {:.12}", rho.trace().re);
    Ok(())
}
