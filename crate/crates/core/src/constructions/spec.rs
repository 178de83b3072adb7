use std::fs;

use crate::constructions::{
    adjoin_least, adjoin_unity, corner, gen_boolean, gen_end0, gen_l2, gen_lukasiewicz, FiniteLattice,
};
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

fn parse_count(spec: &str, arg: &str) -> Result<usize> {
    arg.parse()
        .map_err(|_| Error::Input(format!("generator `{spec}`: `{arg}` is not a non-negative integer")))
}

/// Builds a semiring from a generator string: `l2`, `bool:K`, `luk:U` or
/// `end0:<lattice-file>`.
pub fn generate(spec: &str) -> Result<FiniteSemiring> {
    let (head, arg) = match spec.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (spec, None),
    };
    match (head, arg) {
        ("l2", None) => Ok(gen_l2()),
        ("bool", Some(a)) => gen_boolean(parse_count(spec, a)?),
        ("luk", Some(a)) => gen_lukasiewicz(parse_count(spec, a)?),
        ("end0", Some(path)) => {
            let text = fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.to_owned(),
                source,
            })?;
            gen_end0(&FiniteLattice::from_json(&text)?)
        }
        _ => Err(Error::Input(format!(
            "unknown generator `{spec}` (expected l2, bool:K, luk:U or end0:<lattice-file>)"
        ))),
    }
}

/// Applies `adjoin-unity`, `adjoin-least` or `corner:<label>`.
pub fn apply_transform(s: &FiniteSemiring, transform: &str) -> Result<FiniteSemiring> {
    match transform.split_once(':') {
        None if transform == "adjoin-unity" => adjoin_unity(s),
        None if transform == "adjoin-least" => adjoin_least(s),
        Some(("corner", label)) => {
            let u = s
                .index_of(label)
                .ok_or_else(|| Error::Input(format!("corner: `{}` has no element `{label}`", s.name())))?;
            corner(s, u)
        }
        _ => Err(Error::Input(format!(
            "unknown transform `{transform}` (expected adjoin-unity, adjoin-least or corner:<label>)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::chain;

    #[test]
    fn generator_strings() {
        assert_eq!(generate("l2").unwrap().size(), 2);
        assert_eq!(generate("bool:3").unwrap().size(), 8);
        assert_eq!(generate("luk:4").unwrap().size(), 5);
        for bad in ["l3", "bool", "bool:x", "luk:-1", "bool:9", "end0:/nonexistent"] {
            assert!(generate(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn end0_from_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c3.json");
        fs::write(&path, serde_json::to_string(&chain(3).unwrap().to_file()).unwrap()).unwrap();
        let s = generate(&format!("end0:{}", path.display())).unwrap();
        assert_eq!(s.size(), 6);
    }

    #[test]
    fn transforms() {
        let b2 = generate("bool:2").unwrap();
        let s = apply_transform(&b2, "adjoin-least").unwrap();
        let t = apply_transform(&s, "adjoin-unity").unwrap();
        assert_eq!((s.size(), t.size()), (5, 6));
        assert_eq!(apply_transform(&b2, "corner:a").unwrap().size(), 2);
        assert!(apply_transform(&b2, "corner:zz").is_err());
        assert!(apply_transform(&b2, "flip").is_err());
    }
}
