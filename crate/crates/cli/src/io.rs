//! JSON file formats and atomic output.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use framerep_core::{Frame, Matrix, Tolerance, C64};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// On-disk frame: `{"dim": d, "vectors": [[[re, im], ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub dim: usize,
    pub vectors: Vec<Vec<C64>>,
}

impl FrameFile {
    pub fn from_frame(frame: &Frame) -> Self {
        FrameFile {
            dim: frame.dim(),
            vectors: frame.vectors(),
        }
    }

    pub fn into_frame(self, tol: Tolerance) -> Result<Frame, CliError> {
        Ok(Frame::from_vectors(self.dim, &self.vectors, tol)?)
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_frame(path: &Path, tol: Tolerance) -> Result<Frame, CliError> {
    read_json::<FrameFile>(path)?.into_frame(tol)
}

pub fn read_matrix(path: &Path) -> Result<Matrix, CliError> {
    read_json(path)
}

/// A vector file is a plain array of `[re, im]` pairs.
pub fn read_vector(path: &Path) -> Result<Vec<C64>, CliError> {
    read_json(path)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

/// Writes through a temporary sibling and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(io_err)
}

/// Writes `value` as JSON to `out`, or to standard output when absent.
pub fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), CliError> {
    let text = to_json(value);
    match out {
        Some(path) => write_atomic(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_file_layout() {
        let text = r#"{"dim": 2, "vectors": [[[1,0],[0,0]], [[0,0],[1,0]], [[1,0],[1,0]]]}"#;
        let file: FrameFile = serde_json::from_str(text).unwrap();
        let frame = file.clone().into_frame(Tolerance::default()).unwrap();
        assert_eq!(frame.len(), 3);
        assert_eq!(FrameFile::from_frame(&frame), file);
    }

    #[test]
    fn matrix_file_layout() {
        let text = r#"{"rows": 1, "cols": 2, "entries": [[1.5, -2], [0, 1]]}"#;
        let m: Matrix = serde_json::from_str(text).unwrap();
        assert_eq!(m[(0, 0)], C64::new(1.5, -2.0));
        let bad = r#"{"rows": 2, "cols": 2, "entries": [[1, 0]]}"#;
        assert!(serde_json::from_str::<Matrix>(bad).is_err());
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.json");
        write_atomic(&path, "first").unwrap();
        write_atomic(&path, "second").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "second");
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
