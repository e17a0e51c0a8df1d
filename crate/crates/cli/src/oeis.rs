//! Embedded integer-sequence fixtures.
//!
//! Each prefix is bound to the `full` family at a fixed `m`, starting at the
//! smallest valid `n = 2m - 2` (2, 4 and 6 for `m = 2, 3, 4`).

use cayley_polygons::Count;

use crate::table::{counts, FamilyName};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OeisFixture {
    pub id: &'static str,
    pub prefix: &'static [&'static str],
    pub family: FamilyName,
    pub m: usize,
    pub n_start: usize,
}

pub const FIXTURES: [OeisFixture; 3] = [
    OeisFixture {
        id: "A002057",
        prefix: &["1", "4", "14", "48", "165", "572", "2002", "7072", "25194"],
        family: FamilyName::Full,
        m: 2,
        n_start: 2,
    },
    OeisFixture {
        id: "A003517",
        prefix: &["1", "6", "27", "110", "429", "1638", "6188", "23256", "87210"],
        family: FamilyName::Full,
        m: 3,
        n_start: 4,
    },
    OeisFixture {
        id: "A003518",
        prefix: &["1", "8", "44", "208", "910", "3808", "15504", "62016", "245157"],
        family: FamilyName::Full,
        m: 4,
        n_start: 6,
    },
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureResult {
    pub id: &'static str,
    /// First `(n, expected, computed)` that disagrees, if any.
    pub mismatch: Option<(usize, String, String)>,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub fn check_fixture(f: &OeisFixture) -> cayley_polygons::Result<FixtureResult> {
    let n_end = f.n_start + f.prefix.len() - 1;
    let computed: Vec<(usize, Count)> = counts(f.family, f.m, f.n_start, n_end)?;
    let mismatch = f
        .prefix
        .iter()
        .zip(computed)
        .find(|(want, (_, got))| got.to_string() != **want)
        .map(|(want, (n, got))| (n, want.to_string(), got.to_string()));
    Ok(FixtureResult { id: f.id, mismatch })
}

pub fn check_all() -> cayley_polygons::Result<Vec<FixtureResult>> {
    FIXTURES.iter().map(check_fixture).collect()
}
