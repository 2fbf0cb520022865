//! Manifests shipped with the crate.

use crate::error::{Error, Result};

use super::manifest::{parse_manifest, Manifest};

pub const BUNDLED: &[(&str, &str)] = &[
    ("example-4-2.lm", include_str!("../../manifests/example-4-2.lm")),
    ("example-4-1.lm", include_str!("../../manifests/example-4-1.lm")),
    ("example-4-3.lm", include_str!("../../manifests/example-4-3.lm")),
];

pub fn bundled_text(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn bundled(name: &str) -> Result<Manifest> {
    let text = bundled_text(name).ok_or_else(|| Error::Io(format!("no bundled manifest `{name}`")))?;
    parse_manifest(text, name)
}

/// A file on disk, or a bundled manifest when no such file exists.
pub fn resolve(path: &str) -> Result<Manifest> {
    if std::path::Path::new(path).exists() {
        return super::manifest::load_manifest(path);
    }
    match bundled_text(path) {
        Some(t) => parse_manifest(t, path),
        None => super::manifest::load_manifest(path),
    }
}
