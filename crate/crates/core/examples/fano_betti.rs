//! Betti numbers of Fano varieties of k-planes, by both routes, plus the
//! N_i(k, j) decomposition behind them.
use qfano::fano::{
    betti_via_multiplicities, cohomology_table, example_f1_betti, n_generating_poly,
};

fn main() -> qfano::Result<()> {
    println!("elliptic curve: {:?}", betti_via_multiplicities(1, 0)?);
    for g in 2..=4 {
        for kplane in 0..g {
            println!(
                "g={g} F_{kplane}: {:?}",
                betti_via_multiplicities(g, kplane)?
            );
        }
    }

    let t = cohomology_table(4, 2)?;
    println!("\nF_2 for g=4, dim {}:", t.dim);
    for ((k, j), n) in &t.ncoeffs {
        println!("  N_2({k},{j}) = {n}");
    }
    println!(
        "generating polynomial for i=2, j=3: {}",
        n_generating_poly(2, 3)?
    );
    println!("\nlines, n=5: {:?}", example_f1_betti(5)?);
    Ok(())
}
