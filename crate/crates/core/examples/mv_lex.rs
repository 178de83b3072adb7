//! MV-derived products on an interval of the lexicographic l-group, the
//! basic witnesses on Lukasiewicz chains, and tropical witnesses.

use idemring::checkers::{mv_basic_witness, rational, tropical_witness};
use idemring::constructions::mv_product;
use idemring::{gen_lukasiewicz, LexGroupElement};

fn main() -> idemring::Result<()> {
    let u = LexGroupElement::from_ratios(3, 1, 0, 1, 0)?;
    let a = LexGroupElement::from_ratios(2, 1, 0, 1, 0)?;
    let b = LexGroupElement::from_ratios(2, 1, 1, 1, 0)?;
    println!("u = {u}");
    println!("a.b = {}", mv_product(&a, &b, &u)?);
    println!("b.a = {}", mv_product(&b, &a, &u)?);

    let s = gen_lukasiewicz(4)?;
    for a in s.elements() {
        for b in s.elements().filter(|&b| b < a) {
            let (c, d) = mv_basic_witness(&s, a, b)?;
            println!("{}: a = {a}, b = {b}, c = {c}, d = {d}", s.name());
        }
    }

    let (c, f) = tropical_witness(&rational(3), &rational(-1), &rational(5), &rational(-2))?;
    println!("tropical: c = {c}, f = {f}");
    Ok(())
}
