use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use irredundant::catalog;
use irredundant::oracle::construct;
use irredundant::{Error, PermGroup};

/// Overrides where named certificates and tables are looked up.
pub const DATA_DIR_VAR: &str = "IRRGEN_DATA_DIR";

/// Text of a data file given as a path, a name under the data directory or
/// the name of a shipped file.
pub fn data_text(
    arg: &str,
    sub: &str,
    ext: &str,
    shipped: impl Fn(&str) -> Option<String>,
) -> Result<String, String> {
    let path = Path::new(arg);
    if path.is_file() {
        return fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"));
    }
    if let Ok(dir) = env::var(DATA_DIR_VAR) {
        let dir = PathBuf::from(dir).join(sub);
        for name in [format!("{arg}.{ext}"), format!("{}.{ext}", arg.to_lowercase())] {
            let p = dir.join(name);
            if p.is_file() {
                return fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()));
            }
        }
    }
    shipped(arg).ok_or_else(|| format!("no such file or shipped {sub} entry: {arg}"))
}

/// A catalog group, or else an oracle constructor spec.
pub fn group(arg: &str) -> Result<(String, PermGroup), Error> {
    match catalog::entry(arg) {
        Ok(e) => Ok((e.name.to_string(), e.group())),
        Err(_) if arg.contains('(') => Ok((arg.to_string(), construct(arg)?)),
        Err(e) => Err(e),
    }
}
