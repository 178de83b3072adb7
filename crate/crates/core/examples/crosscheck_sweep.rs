//! Every additively idempotent semiring with two or three elements,
//! checked against brute force on M_2.

use idemring::checkers::{crosscheck, enumerate_small};

fn main() -> idemring::Result<()> {
    let mut bad = 0;
    for s in enumerate_small(3)?.iter().filter(|s| s.size() >= 2) {
        let r = crosscheck(s, 2)?;
        let applied: Vec<&str> = r.agreements.iter().map(|a| a.theorem).collect();
        println!("{:<8} {}", r.semiring, applied.join(" "));
        for d in r.discrepancies() {
            println!("  discrepancy {}: {}", d.theorem, d.detail);
            bad += 1;
        }
    }
    println!("{bad} discrepancies");
    Ok(())
}
