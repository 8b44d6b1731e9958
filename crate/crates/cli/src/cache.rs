//! On-disk store of solved Macdonald coordinates.
//!
//! The file is line oriented. The first line is a version header; each
//! further line is one entry:
//!
//! ```text
//! <lambda>\t<n>\t<specialization>\t<partition>=<value>\t<partition>=<value>...
//! ```
//!
//! Values use the canonical rational-function rendering, so a file written
//! twice from the same results is byte-identical.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use staircase_core::algebra::parse_ratfun;
use staircase_core::macdonald::{Macdonald, Specialization};
use staircase_core::symbasis::MCoords;
use staircase_core::Partition;

pub const HEADER: &str = "staircase-cache\tv1";

/// Entry key: padded partition, alphabet size, specialization.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CacheKey {
    pub lambda: Partition,
    pub n: usize,
    pub spec: String,
}

impl CacheKey {
    pub fn new(lambda: &Partition, n: usize, spec: &Specialization) -> Self {
        CacheKey { lambda: lambda.padded(n).unwrap_or_else(|_| lambda.clone()), n, spec: spec.key() }
    }
}

fn partition_field(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<CacheKey, MCoords>,
    /// Problems met while loading; the caller decides whether to print them.
    pub warnings: Vec<String>,
    dirty: bool,
}

impl Cache {
    /// Reads `path` if it exists. A version mismatch drops every entry; a
    /// malformed line drops that entry only. Either way the file is rewritten
    /// on the next save.
    pub fn open(path: &Path) -> io::Result<Self> {
        let mut cache = Cache { path: path.to_path_buf(), entries: BTreeMap::new(), warnings: Vec::new(), dirty: false };
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e),
        };
        let mut lines = text.lines();
        match lines.next() {
            Some(HEADER) => {}
            Some(other) => {
                cache.warnings.push(format!("cache version `{other}` not understood; discarding all entries"));
                cache.dirty = true;
                return Ok(cache);
            }
            None => return Ok(cache),
        }
        for (no, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match parse_line(line) {
                Some((k, v)) => {
                    cache.entries.insert(k, v);
                }
                None => {
                    cache.warnings.push(format!("corrupt cache entry on line {}; it will be recomputed", no + 2));
                    cache.dirty = true;
                }
            }
        }
        Ok(cache)
    }

    pub fn load(&self, key: &CacheKey) -> Option<&MCoords> {
        self.entries.get(key)
    }

    pub fn store(&mut self, key: CacheKey, coords: MCoords) {
        if self.entries.get(&key) != Some(&coords) {
            self.entries.insert(key, coords);
            self.dirty = true;
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Hands every entry to the solver.
    pub fn seed(&self, engine: &Macdonald) {
        for (k, v) in &self.entries {
            if let Ok(spec) = k.spec.parse::<Specialization>() {
                let _ = engine.preload(&k.lambda, k.n, &spec, v.clone());
            }
        }
    }

    /// Copies every solved entry out of the solver.
    pub fn absorb(&mut self, engine: &Macdonald) {
        for (lambda, n, spec, coords) in engine.solved_entries() {
            self.store(CacheKey::new(&lambda, n, &spec), (*coords).clone());
        }
    }

    /// Writes the file if anything changed.
    pub fn save(&mut self) -> io::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let tmp = self.path.with_extension("tmp");
        {
            let mut f = io::BufWriter::new(fs::File::create(&tmp)?);
            writeln!(f, "{HEADER}")?;
            for (k, v) in &self.entries {
                write!(f, "{}\t{}\t{}", partition_field(&k.lambda), k.n, k.spec)?;
                for (mu, c) in v.iter() {
                    write!(f, "\t{}={}", partition_field(mu), c.render())?;
                }
                writeln!(f)?;
            }
            f.flush()?;
        }
        fs::rename(&tmp, &self.path)?;
        self.dirty = false;
        Ok(())
    }
}

fn parse_line(line: &str) -> Option<(CacheKey, MCoords)> {
    let mut fields = line.split('\t');
    let lambda: Partition = fields.next()?.parse().ok()?;
    let n: usize = fields.next()?.parse().ok()?;
    let spec: Specialization = fields.next()?.parse().ok()?;
    let lambda = lambda.padded(n).ok()?;
    let mut coords = MCoords::new(n);
    for f in fields {
        let (mu, value) = f.split_once('=')?;
        let mu: Partition = mu.parse().ok()?;
        let value = parse_ratfun(value).ok()?;
        if value.is_zero() {
            return None;
        }
        coords.insert(&mu, value).ok()?;
    }
    if coords.get(&lambda).is_one() {
        Some((CacheKey { lambda, n, spec: spec.key() }, coords))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use staircase_core::macdonald::macdonald_p;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        let lam: Partition = "2".parse().unwrap();
        let p2 = macdonald_p(&lam, 2).unwrap().coords;
        let key = CacheKey::new(&lam, 2, &Specialization::Generic);
        let mut c = Cache::open(&path).unwrap();
        assert!(c.load(&key).is_none());
        c.store(key.clone(), p2.clone());
        c.save().unwrap();
        let c2 = Cache::open(&path).unwrap();
        assert_eq!(c2.load(&key), Some(&p2));
        assert!(c2.warnings.is_empty());
        let first = fs::read(&path).unwrap();
        let mut c3 = Cache::open(&path).unwrap();
        c3.store(key, p2);
        c3.dirty = true;
        c3.save().unwrap();
        assert_eq!(fs::read(&path).unwrap(), first);
    }

    #[test]
    fn corrupt_and_mismatched() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        fs::write(&path, format!("{HEADER}\n2,0\t2\tqt\t2,0=1\t1,1=(((\n1\t1\tqt\t1=1\n")).unwrap();
        let c = Cache::open(&path).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.warnings.len(), 1);
        fs::write(&path, "staircase-cache\tv0\n1\t1\tqt\t1=1\n").unwrap();
        let c = Cache::open(&path).unwrap();
        assert!(c.is_empty());
        assert_eq!(c.warnings.len(), 1);
    }
}
