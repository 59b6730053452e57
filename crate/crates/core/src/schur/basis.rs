//! The change of basis between `S` and `M` at a fixed weight.

use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::tableau::schur_to_m;
use crate::algebra::Scalar;
use crate::composition::{compositions_of, Composition};
use crate::error::{QsymError, Result};
use crate::linalg::RationalMatrix;

pub const DEFAULT_WEIGHT_CAP: usize = 9;
const CACHE_FORMAT_VERSION: u32 = 1;

static WEIGHT_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_WEIGHT_CAP);

/// Largest weight at which the `S` basis may be used.
pub fn weight_cap() -> usize {
    WEIGHT_CAP.load(Ordering::Relaxed)
}

pub fn set_weight_cap(cap: usize) {
    WEIGHT_CAP.store(cap, Ordering::Relaxed);
}

fn cache_dir_slot() -> &'static RwLock<Option<PathBuf>> {
    static DIR: OnceLock<RwLock<Option<PathBuf>>> = OnceLock::new();
    DIR.get_or_init(|| RwLock::new(None))
}

/// Directory for persisted basis matrices; `None` disables the disk cache.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *cache_dir_slot().write().unwrap() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    cache_dir_slot().read().unwrap().clone()
}

/// Row `i` expresses `S_{comps[i]}` in the monomial basis, column `j`
/// standing for `M_{comps[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    weight: usize,
    comps: Vec<Composition>,
    index: HashMap<Composition, usize>,
    matrix: RationalMatrix,
    inverse: RationalMatrix,
}

impl BasisMatrix {
    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.comps
    }

    pub fn index_of(&self, alpha: &Composition) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &RationalMatrix {
        &self.inverse
    }

    fn build(weight: usize) -> Result<Self> {
        let comps = compositions_of(weight);
        let index: HashMap<Composition, usize> = comps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let mut matrix = RationalMatrix::zeros(comps.len());
        for (i, alpha) in comps.iter().enumerate() {
            for (gamma, x) in schur_to_m(alpha).iter() {
                matrix[(i, index[gamma])] = x.clone();
            }
        }
        let inverse = matrix.inverse().ok_or(QsymError::SingularMatrix(weight))?;
        Ok(BasisMatrix {
            weight,
            comps,
            index,
            matrix,
            inverse,
        })
    }

    fn from_file(weight: usize, file: CacheFile) -> Option<Self> {
        if file.format_version != CACHE_FORMAT_VERSION || file.weight != weight {
            return None;
        }
        let comps = compositions_of(weight);
        if file.compositions != comps {
            return None;
        }
        let parse = |rows: Vec<Vec<String>>| -> Option<RationalMatrix> {
            if rows.len() != comps.len() || rows.iter().any(|r| r.len() != comps.len()) {
                return None;
            }
            let rows = rows
                .into_iter()
                .map(|r| r.iter().map(|s| s.parse::<Scalar>().ok()).collect())
                .collect::<Option<Vec<Vec<Scalar>>>>()?;
            Some(RationalMatrix::from_rows(rows))
        };
        let matrix = parse(file.matrix)?;
        let inverse = parse(file.inverse)?;
        let index = comps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        Some(BasisMatrix {
            weight,
            comps,
            index,
            matrix,
            inverse,
        })
    }

    fn to_file(&self) -> CacheFile {
        let dump = |m: &RationalMatrix| -> Vec<Vec<String>> {
            m.rows()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect()
        };
        CacheFile {
            format_version: CACHE_FORMAT_VERSION,
            weight: self.weight,
            compositions: self.comps.clone(),
            matrix: dump(&self.matrix),
            inverse: dump(&self.inverse),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    weight: usize,
    compositions: Vec<Composition>,
    matrix: Vec<Vec<String>>,
    inverse: Vec<Vec<String>>,
}

fn cache_path(dir: &Path, weight: usize) -> PathBuf {
    dir.join(format!(
        "basis-matrix-v{CACHE_FORMAT_VERSION}-n{weight}.json"
    ))
}

fn load(dir: &Path, weight: usize) -> Option<BasisMatrix> {
    let bytes = std::fs::read(cache_path(dir, weight)).ok()?;
    let file: CacheFile = serde_json::from_slice(&bytes).ok()?;
    BasisMatrix::from_file(weight, file)
}

fn store(dir: &Path, m: &BasisMatrix) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &m.to_file())?;
    tmp.flush()?;
    tmp.persist(cache_path(dir, m.weight))
        .map_err(|e| QsymError::Io(e.error))?;
    Ok(())
}

type MatrixCache = Mutex<HashMap<usize, Arc<OnceLock<Arc<BasisMatrix>>>>>;

fn memory_cache() -> &'static MatrixCache {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The basis matrix at weight `n`, from memory, then disk, then computed.
pub fn basis_matrix(n: usize) -> Result<Arc<BasisMatrix>> {
    let cap = weight_cap();
    if n > cap {
        return Err(QsymError::BoundExceeded { weight: n, cap });
    }
    let slot = memory_cache().lock().unwrap().entry(n).or_default().clone();
    if let Some(m) = slot.get() {
        return Ok(m.clone());
    }
    let dir = cache_dir();
    let m = match dir.as_deref().and_then(|d| load(d, n)) {
        Some(m) => m,
        None => {
            let m = BasisMatrix::build(n)?;
            if let Some(d) = &dir {
                // a failed write only costs a recomputation later
                let _ = store(d, &m);
            }
            m
        }
    };
    Ok(slot.get_or_init(|| Arc::new(m)).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;
    use num::Signed;

    #[test]
    fn small_matrices() {
        let m1 = basis_matrix(1).unwrap();
        assert_eq!(*m1.matrix(), RationalMatrix::identity(1));
        let m2 = basis_matrix(2).unwrap();
        assert_eq!(m2.matrix().determinant().abs(), scalar(1));
        let m0 = basis_matrix(0).unwrap();
        assert_eq!(m0.compositions(), &[Composition::empty()]);
    }

    #[test]
    fn unimodular() {
        for n in 1..=5 {
            let m = basis_matrix(n).unwrap();
            assert_eq!(m.matrix().determinant().abs(), scalar(1), "n = {n}");
            assert_eq!(
                m.matrix().mul(m.inverse()),
                RationalMatrix::identity(m.compositions().len())
            );
        }
    }

    #[test]
    fn disk_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let built = BasisMatrix::build(4).unwrap();
        store(dir.path(), &built).unwrap();
        assert_eq!(load(dir.path(), 4).unwrap(), built);
        assert!(load(dir.path(), 3).is_none());
        std::fs::write(cache_path(dir.path(), 3), b"{not json").unwrap();
        assert!(load(dir.path(), 3).is_none());
    }

    #[test]
    fn over_the_cap() {
        assert!(matches!(
            basis_matrix(40),
            Err(QsymError::BoundExceeded { weight: 40, .. })
        ));
    }
}
