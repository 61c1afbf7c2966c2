//! Exact Laurent polynomial arithmetic: products, exact division, the
//! remainder reported by a failed division, and unreduced fractions.
use qfano::{LaurentPoly, RationalPair};

fn main() -> qfano::Result<()> {
    let a = LaurentPoly::from_terms([(-1, 1), (0, 2), (3, -1)]);
    let b = LaurentPoly::one_minus_q_pow(2);
    let prod = &a * &b;
    println!("a       = {a}");
    println!("a(1-q²) = {prod}");
    println!("latex   = {}", prod.to_latex());
    println!("back    = {}", prod.divide_exact(&b)?);

    match LaurentPoly::from_terms([(0, 1), (1, 1)]).divide_exact(&b) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(e) => println!("1+q over 1-q²: {e}"),
    }

    // (1+q)/(1-q²) and 1/(1-q) are the same fraction.
    let x = RationalPair::new(LaurentPoly::one_plus_q_pow(1), b)?;
    let y = RationalPair::new(LaurentPoly::one(), LaurentPoly::one_minus_q_pow(1))?;
    println!("{x} == {y}: {}", x == y);
    println!("sum = {}", &x + &y);

    println!("json = {}", serde_json::to_string(&a).unwrap());
    Ok(())
}
