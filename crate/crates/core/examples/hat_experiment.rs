//! Pulls the monolith of M_2(S) back along the constant embedding and
//! compares it with the monolith of S.

use idemring::{adjoin_least, adjoin_unity, gen_boolean, gen_lukasiewicz, hat_congruence, monolith, MatrixSemiring};

fn main() -> idemring::Result<()> {
    let list = [
        gen_lukasiewicz(2)?,
        gen_lukasiewicz(3)?,
        adjoin_unity(&adjoin_least(&gen_boolean(2)?)?)?,
    ];
    for s in &list {
        let ms = MatrixSemiring::materialized(s, 2)?;
        let Some(mm) = monolith(ms.require_materialized()?)? else {
            println!("{}: M_2 not SI", s.name());
            continue;
        };
        let hat = hat_congruence(&ms, &mm.partition)?;
        let base = monolith(s)?.map(|m| m.partition);
        println!(
            "{}: hat {:?}, monolith {:?}, equal = {}",
            s.name(),
            hat.labeled_blocks(s),
            base.as_ref().map(|b| b.labeled_blocks(s)),
            base.as_ref() == Some(&hat)
        );
    }
    Ok(())
}
