//! Stalk dimensions of intersection cohomology complexes of orbit closures.
use qfano::kostka::stalk_table;

fn main() -> qfano::Result<()> {
    let n = 4;
    for i in 0..n {
        for j in 0..=i {
            let t = stalk_table(n, i, j)?;
            let dims: Vec<String> = t.dims.iter().map(|(k, d)| format!("{k}:{d}")).collect();
            println!(
                "n={n} i={i} j={j}  {}  parity ok: {}",
                dims.join(" "),
                t.vanishes_in_forbidden_parity()
            );
        }
    }
    Ok(())
}
