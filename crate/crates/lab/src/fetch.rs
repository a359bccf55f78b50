//! Resolving A-numbers to b-files: override directory, bundled fixtures,
//! or (only when asked) the network with an on-disk cache.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use crate::bfile::{parse_bfile, BFile};
use crate::error::{LabError, Result};
use crate::fixtures;

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

#[derive(Debug, Clone)]
pub struct Fetcher {
    pub online: bool,
    pub base_url: String,
    pub cache_dir: PathBuf,
    pub fixtures_dir: Option<PathBuf>,
}

fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("DOLD_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("dold").join("oeis")
}

impl Fetcher {
    /// Offline fetcher reading only bundled fixtures (and `fixtures_dir`).
    pub fn offline(fixtures_dir: Option<PathBuf>) -> Self {
        Fetcher { online: false, base_url: DEFAULT_BASE_URL.into(), cache_dir: default_cache_dir(), fixtures_dir }
    }

    /// Settings from the environment: `OEIS_BASE_URL`, `DOLD_CACHE_DIR`.
    pub fn from_env(online: bool, fixtures_dir: Option<PathBuf>) -> Self {
        let base_url = std::env::var("OEIS_BASE_URL").unwrap_or_else(|_| DEFAULT_BASE_URL.into());
        Fetcher { online, base_url, cache_dir: default_cache_dir(), fixtures_dir }
    }

    pub fn url_for(&self, a_number: &str) -> String {
        format!("{}/{a_number}/{}", self.base_url.trim_end_matches('/'), fixtures::bfile_name(a_number))
    }

    fn read_file(path: &Path, a_number: &str) -> Result<BFile> {
        let text = fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
        parse_bfile(a_number, &text)
    }

    pub fn fetch(&self, a_number: &str) -> Result<BFile> {
        let a = fixtures::normalize_a_number(a_number)?;
        if let Some(dir) = &self.fixtures_dir {
            let path = dir.join(fixtures::bfile_name(&a));
            if path.exists() {
                return Self::read_file(&path, &a);
            }
        }
        if self.online {
            let cached = self.cache_dir.join(fixtures::bfile_name(&a));
            if cached.exists() {
                return Self::read_file(&cached, &a);
            }
            return self.download(&a, &cached);
        }
        match fixtures::bundled_bfile(&a) {
            Some(text) => parse_bfile(&a, text),
            None => Err(LabError::MissingFixture(a)),
        }
    }

    fn download(&self, a: &str, cached: &Path) -> Result<BFile> {
        let url = self.url_for(a);
        let response = ureq::get(&url).timeout(Duration::from_secs(30)).call().map_err(|e| match e {
            ureq::Error::Status(status, _) => LabError::HttpStatus { url: url.clone(), status },
            ureq::Error::Transport(t) => LabError::Network { url: url.clone(), msg: t.to_string() },
        })?;
        let text = response.into_string().map_err(|e| LabError::Network { url: url.clone(), msg: e.to_string() })?;
        let parsed = parse_bfile(a, &text)?;
        self.store(cached, &text)?;
        Ok(parsed)
    }

    /// Writes through a temporary file and renames it into place, so readers
    /// never see a partial entry.
    fn store(&self, path: &Path, text: &str) -> Result<()> {
        fs::create_dir_all(&self.cache_dir).map_err(|e| LabError::io(&self.cache_dir, e))?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(|e| LabError::io(&tmp, e))?;
        f.write_all(text.as_bytes()).map_err(|e| LabError::io(&tmp, e))?;
        drop(f);
        fs::rename(&tmp, path).map_err(|e| LabError::io(path, e))
    }
}
