//! h_m^(n)(q) by each of the six methods, with a check that they agree.
//!
//! Usage: cargo run --example h_polynomials -- [n]
use qfano::kostka::{h_poly, h_poly_checked, HMethod};

fn main() -> qfano::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    for m in 0..n {
        println!("h_{m}^({n}) = {}", h_poly_checked(n, m)?);
    }
    println!();
    for method in HMethod::ALL {
        println!("{:>15}: {}", method.name(), h_poly(n, n - 1, method)?);
    }
    Ok(())
}
