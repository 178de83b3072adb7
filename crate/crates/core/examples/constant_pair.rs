//! Drives a pair of distinct matrices to a pair of distinct constant
//! matrices by translations, and replays the chain.

use idemring::{extract_constant_pair, gen_lukasiewicz, Matrix, MatrixSemiring};

fn main() -> idemring::Result<()> {
    let s = gen_lukasiewicz(2)?;
    let ms = MatrixSemiring::lazy(&s, 2)?;
    let a = Matrix::parse_literal(&s, "[[0,2],[1,0]]")?;
    let b = Matrix::parse_literal(&s, "[[0,2],[0,0]]")?;

    let pair = extract_constant_pair(&ms, &a, &b)?;
    println!(
        "({}, {}) from {} vs {}",
        s.label(pair.a),
        s.label(pair.b),
        a.literal(&s),
        b.literal(&s)
    );
    for (x, y) in pair.chain.replay(&ms, &a, &b) {
        println!("  {}  {}", x.literal(&s), y.literal(&s));
    }
    Ok(())
}
