//! Principal congruences, simplicity and the monolith of a small chain.

use idemring::{gen_lukasiewicz, is_congruence_simple, lambda_rho, monolith, natural_order, principal_congruence};

fn main() -> idemring::Result<()> {
    let s = gen_lukasiewicz(3)?;
    println!("{}: {} elements", s.name(), s.size());

    for (a, b) in natural_order(&s)?.covering_pairs() {
        let p = principal_congruence(&s, a, b);
        println!("Cg({}, {}) = {:?}", s.label(a), s.label(b), p.labeled_blocks(&s));
    }

    println!("simple: {}", is_congruence_simple(&s)?);
    match monolith(&s)? {
        Some(m) => println!("monolith: {:?}", m.partition.labeled_blocks(&s)),
        None => println!("not subdirectly irreducible"),
    }

    let (lambda, rho) = lambda_rho(&s);
    println!(
        "lambda {:?}, rho {:?}",
        lambda.labeled_blocks(&s),
        rho.labeled_blocks(&s)
    );
    Ok(())
}
