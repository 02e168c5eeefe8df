use std::fs;
use std::path::{Path, PathBuf};

use fermat_cubic::catalogs::{self, PointCatalog, PointKind};
use fermat_cubic::io::CatalogFile;
use fermat_cubic::poly::HomForm;
use sha2::{Digest, Sha256};

use crate::CliError;

/// The output directory, which doubles as the catalog cache.
pub struct Cache {
    dir: PathBuf,
    enabled: bool,
}

fn io_error(context: impl Into<String>) -> impl FnOnce(std::io::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Io { context, source }
}

fn corrupted(path: &Path, what: impl std::fmt::Display) -> CliError {
    CliError::Verification(format!("cached catalog {} is corrupted: {what}", path.display()))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn serialize(catalog: &PointCatalog) -> Result<Vec<u8>, CliError> {
    let mut bytes = serde_json::to_vec(&CatalogFile::from(catalog))
        .map_err(|e| CliError::Verification(format!("serializing catalog: {e}")))?;
    bytes.push(b'\n');
    Ok(bytes)
}

impl Cache {
    pub fn new(dir: &Path, enabled: bool) -> Result<Self, CliError> {
        fs::create_dir_all(dir).map_err(io_error(format!("creating {}", dir.display())))?;
        Ok(Cache { dir: dir.to_path_buf(), enabled })
    }

    fn catalog_path(&self, kind: PointKind) -> PathBuf {
        self.dir.join(format!("catalog_{kind}.json"))
    }

    fn sidecar_path(&self, kind: PointKind) -> PathBuf {
        self.dir.join(format!("catalog_{kind}.json.sha256"))
    }

    /// The catalog of `kind`, reused from disk when cached and valid, and
    /// written back otherwise.
    pub fn catalog(&self, kind: PointKind) -> Result<PointCatalog, CliError> {
        if let Some(catalog) = self.revalidate(kind)? {
            return Ok(catalog);
        }
        let catalog = catalogs::catalog(kind)?;
        let bytes = serialize(&catalog)?;
        self.write(&format!("catalog_{kind}.json"), &bytes)?;
        let sidecar = format!("{}  catalog_{kind}.json\n", sha256_hex(&bytes));
        fs::write(self.sidecar_path(kind), sidecar)
            .map_err(io_error(format!("writing {}", self.sidecar_path(kind).display())))?;
        Ok(catalog)
    }

    /// Loads a cached catalog after checking its checksum, its canonical
    /// form and membership of sample points on the cubic. `None` when the
    /// cache is disabled or holds no file for `kind`.
    pub fn revalidate(&self, kind: PointKind) -> Result<Option<PointCatalog>, CliError> {
        let path = self.catalog_path(kind);
        if !self.enabled || !path.exists() {
            return Ok(None);
        }
        let bytes = fs::read(&path).map_err(io_error(format!("reading {}", path.display())))?;
        let sidecar = fs::read_to_string(self.sidecar_path(kind)).map_err(|e| corrupted(&path, e))?;
        let recorded = sidecar.split_whitespace().next().unwrap_or_default();
        if recorded != sha256_hex(&bytes) {
            return Err(corrupted(&path, "checksum mismatch"));
        }
        let file: CatalogFile = serde_json::from_slice(&bytes).map_err(|e| corrupted(&path, e))?;
        if file.kind != kind.as_str() {
            return Err(corrupted(&path, format!("holds a {} catalog", file.kind)));
        }
        let f = HomForm::fermat(kind.tower());
        let n = file.points.len();
        for i in [0, n / 2, n.saturating_sub(1)] {
            if file.points.get(i).is_some_and(|p| !p.lies_on(&f)) {
                return Err(corrupted(&path, format!("point {i} is not on the cubic")));
            }
        }
        let catalog = file.into_catalog().map_err(|e| corrupted(&path, e))?;
        if serialize(&catalog)? != bytes {
            return Err(corrupted(&path, "not in canonical form"));
        }
        println!("reused {}", path.display());
        Ok(Some(catalog))
    }

    pub fn write(&self, name: &str, bytes: &[u8]) -> Result<(), CliError> {
        let path = self.dir.join(name);
        fs::write(&path, bytes).map_err(io_error(format!("writing {}", path.display())))?;
        println!("wrote {}", path.display());
        Ok(())
    }
}
