//! On-disk cache of Specht modules and radicals in the module text format.
//!
//! A file that fails to parse, is not canonical, or does not describe the
//! requested module is ignored and rewritten.

use std::fs;
use std::path::{Path, PathBuf};

use spechtkit::wordspace::{gram_radical, specht_module};
use spechtkit::{GModule, Guard, ModuleKind, Partition, PrimeField, Result};

pub const CACHE_ENV: &str = "SPECHTKIT_CACHE_DIR";

#[derive(Debug, Clone, Default)]
pub struct ModuleCache {
    dir: Option<PathBuf>,
}

impl ModuleCache {
    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Self { dir: Some(dir.into()) }
    }

    /// The flag wins over the environment; neither means no caching.
    pub fn resolve(flag: Option<PathBuf>) -> Self {
        Self { dir: flag.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)) }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn specht(&self, lambda: &Partition, n: usize, field: PrimeField, guard: Guard) -> Result<GModule> {
        self.fetch(ModuleKind::Specht, lambda, n, field, guard, || specht_module(lambda, n, field, guard))
    }

    pub fn radical(&self, lambda: &Partition, n: usize, field: PrimeField, guard: Guard) -> Result<GModule> {
        self.fetch(ModuleKind::Radical, lambda, n, field, guard, || {
            gram_radical(&self.specht(lambda, n, field, guard)?)
        })
    }

    fn fetch(
        &self,
        kind: ModuleKind,
        lambda: &Partition,
        n: usize,
        field: PrimeField,
        guard: Guard,
        build: impl FnOnce() -> Result<GModule>,
    ) -> Result<GModule> {
        let Some(dir) = &self.dir else { return build() };
        let path = dir.join(format!("{}-n{n}-p{}-{}.gmod", kind.as_str(), field.modulus(), file_label(lambda)));
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(m) = GModule::from_text(&text, guard) {
                let fits =
                    m.kind() == kind && m.partition() == Some(lambda) && m.space().n() == n && m.field() == field;
                if fits {
                    return Ok(m);
                }
            }
        }
        let m = build()?;
        // a cache that cannot be written only costs recomputation
        let _ = store(&path, &m.to_text());
        Ok(m)
    }
}

fn file_label(lambda: &Partition) -> String {
    if lambda.is_empty() {
        "empty".into()
    } else {
        lambda.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_")
    }
}

fn store(path: &Path, text: &str) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hit_matches_cold_build() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ModuleCache::at(dir.path());
        let f = PrimeField::new(3).unwrap();
        let lam: Partition = "2,1".parse().unwrap();
        let cold = cache.radical(&lam, 2, f, Guard::default()).unwrap();
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2);
        let warm = cache.radical(&lam, 2, f, Guard::default()).unwrap();
        assert_eq!(cold, warm);
        assert_eq!(warm.kind(), ModuleKind::Radical);
    }

    #[test]
    fn corrupt_files_are_rebuilt() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ModuleCache::at(dir.path());
        let f = PrimeField::new(2).unwrap();
        let lam: Partition = "2,1".parse().unwrap();
        let good = cache.specht(&lam, 2, f, Guard::default()).unwrap();
        let path = dir.path().join("specht-n2-p2-2_1.gmod");
        fs::write(&path, "spechtkit-gmodule 1\ngarbage\n").unwrap();
        assert_eq!(cache.specht(&lam, 2, f, Guard::default()).unwrap(), good);
        assert_eq!(fs::read_to_string(&path).unwrap(), good.to_text());
    }
}
