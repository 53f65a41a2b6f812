//! Size caps shared by every construction.
//!
//! The element cap defaults to 4096 and can be overridden with the
//! `ACTFORGE_CAP` environment variable. Exceeding a cap is always an error.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_SIZE_CAP: usize = 4096;
/// Largest act for which exhaustive subset searches are attempted.
pub const EXHAUSTIVE_CAP: usize = 16;
/// Largest `|N|^|A|` enumerated by the wreath constructions.
pub const NAMAP_CAP: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub size_cap: usize,
    pub exhaustive_cap: usize,
    pub namap_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            size_cap: DEFAULT_SIZE_CAP,
            exhaustive_cap: EXHAUSTIVE_CAP,
            namap_cap: NAMAP_CAP,
        }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var("ACTFORGE_CAP")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.size_cap = cap;
        }
        limits
    }

    /// Process-wide limits, read from the environment once.
    pub fn global() -> &'static Limits {
        static GLOBAL: OnceLock<Limits> = OnceLock::new();
        GLOBAL.get_or_init(Limits::from_env)
    }
}

pub(crate) fn check_size(requested: usize) -> Result<()> {
    let cap = Limits::global().size_cap;
    if requested > cap {
        Err(Error::SizeLimitExceeded { requested, cap })
    } else {
        Ok(())
    }
}

/// `base^exp` with overflow mapped to `usize::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> usize {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
