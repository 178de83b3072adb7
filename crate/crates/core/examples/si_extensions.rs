//! Adjoining a least non-zero element to B_2 gives a subdirectly
//! irreducible semiring whose M_2 is not; adjoining a unity on top repairs
//! that. Takes a few seconds in release mode.

use idemring::checkers::{check_si3, check_si_props};
use idemring::{adjoin_least, adjoin_unity, gen_boolean, is_subdirectly_irreducible, MatrixSemiring};

fn main() -> idemring::Result<()> {
    let b2e = adjoin_least(&gen_boolean(2)?)?;
    let b2e1 = adjoin_unity(&b2e)?;

    for s in [&b2e, &b2e1] {
        let props = check_si_props(s)?;
        let si3 = check_si3(s)?;
        let m = MatrixSemiring::materialized(s, 2)?;
        println!("{} ({} elements)", s.name(), s.size());
        println!("  SI: {}", is_subdirectly_irreducible(s)?);
        println!(
            "  e = {}, e^2 = 0: {}",
            s.label(props.least_nonzero),
            props.e_squared_zero
        );
        println!(
            "  zero separation inside S: {} ({})",
            si3.holds,
            si3.describe_witness(s)
        );
        println!(
            "  M_2 ({} elements) SI: {}",
            m.semiring().unwrap().size(),
            is_subdirectly_irreducible(m.require_materialized()?)?
        );
    }
    Ok(())
}
