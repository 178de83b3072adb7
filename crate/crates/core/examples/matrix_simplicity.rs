//! Brute-force simplicity of M_2 over the two-element lattice, and of M_2
//! over the other two-element semirings for contrast.

use idemring::checkers::{check_two_element, enumerate_small};
use idemring::{is_congruence_simple, MatrixSemiring};

fn main() -> idemring::Result<()> {
    for s in enumerate_small(2)?.iter().filter(|s| s.size() == 2) {
        let ms = MatrixSemiring::materialized(s, 2)?;
        let m = ms.require_materialized()?;
        println!(
            "{:<8} {:?}: M_2 has {} elements, simple = {}",
            s.name(),
            check_two_element(s)?,
            m.size(),
            is_congruence_simple(m)?
        );
    }
    Ok(())
}
