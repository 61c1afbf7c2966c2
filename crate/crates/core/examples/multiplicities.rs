//! The polynomials P_j^(n) and the multiplicity tables s^i_{jk}.
use qfano::kostka::{p_center, p_poly, s_table};

fn main() -> qfano::Result<()> {
    let n = 4;
    for j in 0..n {
        println!(
            "P_{j}^({n}) = {}  (center {})",
            p_poly(n, j)?,
            p_center(n, j)
        );
    }
    for i in 0..n {
        let t = s_table(n, i)?;
        println!(
            "\ns^{i}_(j,k), n = {n}, invariants hold: {}",
            t.satisfies_invariants()
        );
        for ((j, k), s) in &t.entries {
            if *s != 0 {
                println!("  j={j} k={k}: {s}");
            }
        }
    }
    Ok(())
}
