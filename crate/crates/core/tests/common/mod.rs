#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use idemring::checkers::enumerate_small;
use idemring::constructions::{chain, gen_end0};
use idemring::{adjoin_least, adjoin_unity, gen_boolean, gen_l2, gen_lukasiewicz, FiniteSemiring};

/// Every semiring with 2 or 3 elements, plus the named families that fit a
/// materialized `M_2` comfortably.
pub fn pool() -> &'static [FiniteSemiring] {
    static POOL: OnceLock<Vec<FiniteSemiring>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<_> = enumerate_small(3)
            .unwrap()
            .into_iter()
            .filter(|s| s.size() >= 2)
            .collect();
        v.extend([
            gen_l2(),
            gen_lukasiewicz(1).unwrap(),
            gen_lukasiewicz(2).unwrap(),
            gen_lukasiewicz(3).unwrap(),
            gen_boolean(2).unwrap(),
            adjoin_least(&gen_boolean(1).unwrap()).unwrap(),
            adjoin_unity(&adjoin_least(&gen_boolean(1).unwrap()).unwrap()).unwrap(),
            gen_end0(&chain(3).unwrap()).unwrap(),
        ]);
        v
    })
}

/// Almost integral members of the pool and further almost integral examples.
pub fn almost_integral() -> Vec<FiniteSemiring> {
    let mut v: Vec<_> = pool()
        .iter()
        .filter(|s| idemring::classify(s).almost_integral)
        .cloned()
        .collect();
    v.extend([
        gen_lukasiewicz(4).unwrap(),
        gen_lukasiewicz(5).unwrap(),
        gen_boolean(3).unwrap(),
        adjoin_least(&gen_boolean(2).unwrap()).unwrap(),
        adjoin_least(&gen_lukasiewicz(1).unwrap()).unwrap(),
    ]);
    v
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

/// Runs the command-line front end in process.
pub fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("idemring").chain(args.iter().copied());
    let code = idemring::cli::run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
