//! Join endomorphisms of small lattices, the ideal X(L) of maps with at
//! most two values, and matrix simplicity of End_0(L).

use idemring::constructions::{chain, end0};
use idemring::{is_congruence_simple, lattice_from_order};

fn main() -> idemring::Result<()> {
    let square = lattice_from_order(
        ["0", "x", "y", "1"].map(String::from).to_vec(),
        &[
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ],
    )?;
    for lattice in [chain(2)?, chain(3)?, square] {
        let e = end0(&lattice)?;
        let s = &e.semiring;
        println!(
            "lattice {:?}: |End0| = {}, |X(L)| = {}, simple = {}",
            lattice.labels(),
            s.size(),
            e.xl.len(),
            is_congruence_simple(s)?
        );
        let outside: Vec<&str> = s.elements().filter(|i| !e.xl.contains(i)).map(|i| s.label(i)).collect();
        println!("  rank > 2: {outside:?}");
    }
    Ok(())
}
