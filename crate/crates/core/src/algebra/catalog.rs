//! Stored frames for the named example algebras. Each primed frame is the
//! frame of the corresponding cyclic algebra with one extra point above
//! everything, so its algebra is the cyclic algebra with a new bottom.

use super::{poset_from_json, upset_algebra, HeytingAlgebra, Poset};
use crate::error::{Error, Result};

pub const CATALOG_NAMES: [&str; 5] = ["C5p", "C7p", "C10p", "C12p", "C16"];

const FRAMES: [(&str, &str); 5] = [
    ("C5p", include_str!("../../data/catalog/C5p.json")),
    ("C7p", include_str!("../../data/catalog/C7p.json")),
    ("C10p", include_str!("../../data/catalog/C10p.json")),
    ("C12p", include_str!("../../data/catalog/C12p.json")),
    ("C16", include_str!("../../data/catalog/C16.json")),
];

pub fn catalog_names() -> &'static [&'static str] {
    &CATALOG_NAMES
}

pub fn catalog_frame(name: &str) -> Result<Poset> {
    let (_, text) = FRAMES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    poset_from_json(text)
}

pub fn catalog(name: &str) -> Result<HeytingAlgebra> {
    upset_algebra(&catalog_frame(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_frames_load() {
        let sizes: Vec<usize> = CATALOG_NAMES
            .iter()
            .map(|n| catalog(n).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![6, 8, 11, 13, 16]);
        assert!(matches!(catalog("C9"), Err(Error::UnknownCatalog(_))));
    }

    #[test]
    fn primed_frames_have_a_top_point() {
        for name in ["C5p", "C7p", "C10p", "C12p"] {
            let f = catalog_frame(name).unwrap();
            assert_eq!(f.maximal().len(), 1, "{name}");
        }
    }
}
