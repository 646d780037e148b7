//! All-or-nothing file output.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

/// Writes every `(path, contents)` pair or none of them. Each file goes to
/// a temporary sibling first; renames happen only after all temporaries are
/// written.
pub fn write_all_atomic(files: &[(PathBuf, String)]) -> io::Result<()> {
    let mut staged: Vec<(PathBuf, &Path)> = Vec::with_capacity(files.len());
    for (path, contents) in files {
        let tmp = temp_sibling(path);
        if let Err(e) = fs::write(&tmp, contents) {
            let _ = fs::remove_file(&tmp);
            discard(&staged);
            return Err(with_path(e, path));
        }
        staged.push((tmp, path));
    }
    for (i, (tmp, path)) in staged.iter().enumerate() {
        if let Err(e) = fs::rename(tmp, path) {
            discard(&staged[i..]);
            return Err(with_path(e, path));
        }
    }
    Ok(())
}

fn temp_sibling(path: &Path) -> PathBuf {
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!(".{name}.{}.tmp", std::process::id()))
}

fn discard(staged: &[(PathBuf, &Path)]) {
    for (tmp, _) in staged {
        let _ = fs::remove_file(tmp);
    }
}

fn with_path(e: io::Error, path: &Path) -> io::Error {
    io::Error::new(e.kind(), format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_batch_leaves_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let good = dir.path().join("a.csv");
        let bad = dir.path().join("missing").join("b.csv");
        let err = write_all_atomic(&[(good.clone(), "x".into()), (bad, "y".into())]).unwrap_err();
        assert!(err.to_string().contains("b.csv"));
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
    }

    #[test]
    fn batch_is_written() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.csv");
        write_all_atomic(&[(a.clone(), "hello".into())]).unwrap();
        assert_eq!(fs::read_to_string(a).unwrap(), "hello");
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
