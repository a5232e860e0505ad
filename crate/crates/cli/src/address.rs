//! `kind:arg` algebra addresses.

use std::fs;

use hsc_core::algebra::{
    algebra_from_json, catalog, catalog_frame, chain, cyclic, poset_from_json, product, upset_algebra,
    HeytingAlgebra, Poset, CATALOG_NAMES,
};
use hsc_core::quasivariety::{free_algebra, QvarHandle};
use hsc_core::{Budgets, Error, Result};

fn number(kind: &str, s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("{kind}: expected a number, got `{s}`")))
}

/// Catalog names are matched as given; `C<n>` outside the catalog is read
/// as the cyclic algebra with n elements.
fn catalog_entry(name: &str) -> Result<HeytingAlgebra> {
    if CATALOG_NAMES.contains(&name) {
        return catalog(name);
    }
    match name.strip_prefix('C').map(str::parse::<usize>) {
        Some(Ok(n)) => cyclic(n),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

fn read(path: &str) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

/// A JSON file holding either an algebra (`n`, `meet`, ...) or a frame
/// (`elements`, `covers`), whose up-set algebra is taken.
fn from_file(path: &str) -> Result<HeytingAlgebra> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.get("elements").is_some() {
        upset_algebra(&poset_from_json(&text)?)
    } else {
        algebra_from_json(&text)
    }
}

/// Splits `a,b` at the first comma for which both halves resolve.
fn split_pair<T>(
    s: &str,
    left: impl Fn(&str) -> Result<T>,
    right: impl Fn(&str) -> Result<usize>,
) -> Result<(T, usize)> {
    for (i, _) in s.match_indices(',').collect::<Vec<_>>().into_iter().rev() {
        if let (Ok(r), Ok(l)) = (right(&s[i + 1..]), left(&s[..i])) {
            return Ok((l, r));
        }
    }
    Err(Error::InvalidArgument(format!("cannot split `{s}` into two arguments")))
}

pub fn resolve(addr: &str, budgets: &Budgets) -> Result<HeytingAlgebra> {
    let (kind, arg) = addr
        .split_once(':')
        .ok_or_else(|| Error::InvalidArgument(format!("`{addr}` is not of the form kind:arg")))?;
    match kind {
        "chain" => {
            let n = number(kind, arg)?;
            if n == 0 {
                return Err(Error::InvalidArgument("chain size must be at least 1".into()));
            }
            Ok(chain(n))
        }
        "cyclic" => cyclic(number(kind, arg)?),
        "catalog" => catalog_entry(arg),
        "file" => from_file(arg),
        "product" => {
            let commas: Vec<usize> = arg.match_indices(',').map(|(i, _)| i).collect();
            for i in commas {
                if let (Ok(a), Ok(b)) = (resolve(&arg[..i], budgets), resolve(&arg[i + 1..], budgets)) {
                    return Ok(product(&[&a, &b], budgets.algebra_cap)?.algebra);
                }
            }
            Err(Error::InvalidArgument(format!("product: cannot read two algebras from `{arg}`")))
        }
        "free" => {
            let (b, k) = split_pair(arg, |s| resolve(s, budgets), |s| number(kind, s))?;
            let q = QvarHandle::new(b, *budgets)?;
            Ok(free_algebra(&q, k)?.algebra)
        }
        _ => Err(Error::InvalidArgument(format!("unknown algebra kind `{kind}`"))),
    }
}

/// The frame behind an address, where there is one.
pub fn resolve_frame(addr: &str) -> Result<Poset> {
    match addr.split_once(':') {
        Some(("catalog", name)) => catalog_frame(name),
        Some(("file", path)) => poset_from_json(&read(path)?),
        _ => Err(Error::InvalidArgument(format!(
            "`{addr}` has no frame; use catalog:NAME or file:PATH"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addresses() {
        let b = Budgets::default();
        assert_eq!(resolve("chain:4", &b).unwrap().len(), 4);
        assert_eq!(resolve("cyclic:7", &b).unwrap().len(), 7);
        assert_eq!(resolve("catalog:C7", &b).unwrap().len(), 7);
        assert_eq!(resolve("catalog:C7p", &b).unwrap().len(), 8);
        assert_eq!(resolve("product:chain:2,chain:3", &b).unwrap().len(), 6);
        assert_eq!(resolve("product:product:chain:2,chain:2,chain:2", &b).unwrap().len(), 8);
        assert_eq!(resolve("free:chain:2,1", &b).unwrap().len(), 4);
        assert!(resolve("chain:0", &b).is_err());
        assert!(resolve("catalog:nope", &b).is_err());
        assert!(resolve("nonsense", &b).is_err());
    }
}
