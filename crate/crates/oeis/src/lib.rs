//! A small OEIS client: fetches a sequence's b-file over HTTP, keeps a
//! mandatory local cache of b-files, and produces cross-check reports
//! comparing locally computed integer sequences against OEIS data.
//!
//! The cache directory holds one file per sequence in OEIS's own b-file
//! format (`n a(n)` lines, `#` comments). A warm cache makes `fetch` fully
//! deterministic and offline; the test suites run entirely from committed
//! fixtures.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "SETPART_OEIS_CACHE";

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("malformed OEIS id {0:?}: expected 'A' followed by six digits")]
    BadId(String),
    #[error("network failure fetching {id} with no cached copy: {message}")]
    Network { id: String, message: String },
    #[error("OEIS does not serve a b-file for {0} (HTTP 404)")]
    UnknownId(String),
    #[error("unexpected HTTP status {status} fetching {id}")]
    BadStatus { id: String, status: u16 },
    #[error("malformed b-file response for {id}: {message}")]
    MalformedResponse { id: String, message: String },
    #[error("cached b-file for {id} is corrupt: {message}")]
    CacheCorrupt { id: String, message: String },
    #[error("cache I/O error: {0}")]
    Io(#[from] std::io::Error),
}

/// A well-formed OEIS identifier such as `A000108`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OeisId(String);

impl OeisId {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Digits without the leading `A`.
    pub fn digits(&self) -> &str {
        &self.0[1..]
    }

    /// OEIS's file name for the sequence's b-file, e.g. `b000108.txt`.
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", self.digits())
    }
}

impl FromStr for OeisId {
    type Err = OeisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let ok = s.len() == 7
            && s.starts_with('A')
            && s[1..].chars().all(|c| c.is_ascii_digit());
        if ok {
            Ok(OeisId(s.to_string()))
        } else {
            Err(OeisError::BadId(s.to_string()))
        }
    }
}

impl std::fmt::Display for OeisId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// A fetched sequence: consecutive terms starting at `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisSequence {
    pub id: OeisId,
    pub offset: i64,
    pub terms: Vec<i64>,
}

impl OeisSequence {
    /// Parse b-file text: `#` comments and blank lines are skipped, every
    /// other line is `index value`, and indices must be consecutive.
    pub fn parse_bfile(id: OeisId, text: &str) -> Result<Self, String> {
        let mut offset = None;
        let mut next_index = 0i64;
        let mut terms = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(format!("line {}: expected 'index value'", lineno + 1));
            };
            let index: i64 = a
                .parse()
                .map_err(|_| format!("line {}: bad index {a:?}", lineno + 1))?;
            let value: i64 = b
                .parse()
                .map_err(|_| format!("line {}: bad value {b:?}", lineno + 1))?;
            match offset {
                None => {
                    offset = Some(index);
                    next_index = index;
                }
                Some(_) if index != next_index => {
                    return Err(format!(
                        "line {}: index {index} breaks the consecutive run",
                        lineno + 1
                    ));
                }
                Some(_) => {}
            }
            next_index += 1;
            terms.push(value);
        }
        if terms.is_empty() {
            return Err("no terms".to_string());
        }
        Ok(OeisSequence {
            id,
            offset: offset.unwrap(),
            terms,
        })
    }

    /// Serialize back to b-file lines.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.terms.iter().enumerate() {
            out.push_str(&format!("{} {v}\n", self.offset + i as i64));
        }
        out
    }
}

/// Blocking OEIS client with a mandatory b-file cache.
#[derive(Debug, Clone)]
pub struct OeisClient {
    cache_dir: PathBuf,
    base_url: String,
    timeout: Duration,
    user_agent: String,
}

impl OeisClient {
    pub fn new(cache_dir: impl Into<PathBuf>) -> Self {
        OeisClient {
            cache_dir: cache_dir.into(),
            base_url: "https://oeis.org".to_string(),
            timeout: Duration::from_secs(10),
            user_agent: concat!("setpart-oeis/", env!("CARGO_PKG_VERSION")).to_string(),
        }
    }

    /// Cache directory from `SETPART_OEIS_CACHE`, else `fallback`.
    pub fn cache_dir_from_env(fallback: impl Into<PathBuf>) -> PathBuf {
        std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| fallback.into())
    }

    pub fn with_base_url(mut self, url: impl Into<String>) -> Self {
        self.base_url = url.into();
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn with_user_agent(mut self, ua: impl Into<String>) -> Self {
        self.user_agent = ua.into();
        self
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    fn cache_path(&self, id: &OeisId) -> PathBuf {
        self.cache_dir.join(id.bfile_name())
    }

    /// Cached terms if present, otherwise one HTTP GET of the b-file,
    /// which is then cached (write to a temporary file, then rename).
    pub fn fetch(&self, id: &OeisId) -> Result<OeisSequence, OeisError> {
        let path = self.cache_path(id);
        if path.exists() {
            let text = fs::read_to_string(&path)?;
            return OeisSequence::parse_bfile(id.clone(), &text).map_err(|message| {
                OeisError::CacheCorrupt {
                    id: id.to_string(),
                    message,
                }
            });
        }
        let body = self.http_get(id)?;
        let seq = OeisSequence::parse_bfile(id.clone(), &body).map_err(|message| {
            OeisError::MalformedResponse {
                id: id.to_string(),
                message,
            }
        })?;
        fs::create_dir_all(&self.cache_dir)?;
        let tmp = self
            .cache_dir
            .join(format!("{}.tmp{}", id.bfile_name(), std::process::id()));
        fs::write(&tmp, &body)?;
        fs::rename(&tmp, &path)?;
        Ok(seq)
    }

    fn http_get(&self, id: &OeisId) -> Result<String, OeisError> {
        let url = format!(
            "{}/{}/{}",
            self.base_url.trim_end_matches('/'),
            id,
            id.bfile_name()
        );
        let agent = ureq::AgentBuilder::new()
            .timeout(self.timeout)
            .user_agent(&self.user_agent)
            .build();
        match agent.get(&url).call() {
            Ok(resp) => resp.into_string().map_err(|e| OeisError::Network {
                id: id.to_string(),
                message: format!("reading body: {e}"),
            }),
            Err(ureq::Error::Status(404, _)) => Err(OeisError::UnknownId(id.to_string())),
            Err(ureq::Error::Status(status, _)) => Err(OeisError::BadStatus {
                id: id.to_string(),
                status,
            }),
            Err(ureq::Error::Transport(t)) => Err(OeisError::Network {
                id: id.to_string(),
                message: t.to_string(),
            }),
        }
    }
}

/// Result of aligning a computed sequence against OEIS terms. Reports only;
/// a failed match is data, not an error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub id: String,
    pub matched: bool,
    /// Shift of the computed sequence into the OEIS term list: computed[i]
    /// aligned against terms[i + offset].
    pub offset: Option<i64>,
    pub compared_terms: usize,
}

/// Find the smallest-magnitude shift within `±window` at which `computed`
/// is a prefix of the OEIS terms (or the terms are a prefix of `computed`,
/// when the b-file is shorter). A negative shift drops leading computed
/// entries instead.
pub fn crosscheck(computed: &[i64], seq: &OeisSequence, window: usize) -> CrosscheckReport {
    assert!(!computed.is_empty(), "computed sequence must be nonempty");
    let mut shifts: Vec<i64> = (-(window as i64)..=window as i64).collect();
    shifts.sort_by_key(|s| (s.abs(), *s));
    for s in shifts {
        let (a, b): (&[i64], &[i64]) = if s >= 0 {
            let s = s as usize;
            if s >= seq.terms.len() {
                continue;
            }
            (computed, &seq.terms[s..])
        } else {
            let skip = (-s) as usize;
            if skip >= computed.len() {
                continue;
            }
            (&computed[skip..], &seq.terms[..])
        };
        let overlap = a.len().min(b.len());
        if overlap == 0 {
            continue;
        }
        if a[..overlap] == b[..overlap] {
            return CrosscheckReport {
                id: seq.id.to_string(),
                matched: true,
                offset: Some(s),
                compared_terms: overlap,
            };
        }
    }
    CrosscheckReport {
        id: seq.id.to_string(),
        matched: false,
        offset: None,
        compared_terms: 0,
    }
}
