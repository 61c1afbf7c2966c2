//! Gaussian binomials, Poincaré polynomials of Grassmannians and
//! orthogonal Grassmannians, and the q-binomial series.
use qfano::qseries::{grassmann_poincare, ogr_poincare, poch_ratio_series, q_binomial};

fn main() -> qfano::Result<()> {
    for n in 0..=5 {
        let row: Vec<String> = (0..=n).map(|k| q_binomial(n, k, 1).to_string()).collect();
        println!("[{n} k]_q: {}", row.join(" | "));
    }
    println!("Gr(2,4) in q^2: {}", grassmann_poincare(2, 4));
    for n in 1..=3 {
        for j in 0..n {
            println!("OG({j}, {}): {}", 2 * n, ogr_poincare(j, n)?);
        }
    }
    let s = poch_ratio_series(4, 2, 4)?;
    for (j, c) in s.coeffs().iter().enumerate() {
        println!("(q^4 x; q^2)_inf/(x; q^2)_inf, x^{j}: {c}");
    }
    Ok(())
}
