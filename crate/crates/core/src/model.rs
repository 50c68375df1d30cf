//! Model specification: system levels, environment bands, coupling blocks,
//! and the composite basis layout.
//!
//! A model is a few-level system S (energies `E_i`) coupled to an
//! environment E made of bands. Band `a` holds `N_a` equidistant levels
//! `E_a + δε·n/N_a` for `n = 1..N_a`, spanning `(E_a, E_a + δε]`. The
//! interaction is declared block-wise: a block couples the system pair
//! `(i, j)` to the band pair `(a, b)` with strength `λ`, and its adjoint is
//! implied.
//!
//! Model files are TOML with three sections (`#` comments allowed):
//!
//! ```toml
//! [system]
//! levels = [0.0, 25.0]        # non-decreasing, units of u
//!
//! [[bands]]
//! mean_energy = 0.0           # E_a
//! width = 0.5                 # δε > 0
//! levels = 500                # N_a
//!
//! [[blocks]]
//! system_pair = [0, 1]        # i <= j, zero-based
//! band_pair = [1, 0]          # (a, b): the block maps (j, b) -> (i, a)
//! strength = 5e-4             # λ >= 0
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Energy levels of the considered system S.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    /// Level energies `E_i` in units of u, listed in non-decreasing order.
    pub levels: Vec<f64>,
}

impl SystemSpec {
    pub fn new(levels: Vec<f64>) -> Self {
        Self { levels }
    }

    pub fn dim(&self) -> usize {
        self.levels.len()
    }

    pub fn energy(&self, i: usize) -> f64 {
        self.levels[i]
    }

    fn validate(&self) -> Result<()> {
        if self.levels.is_empty() {
            return Err(Error::Spec("system needs at least one level".into()));
        }
        if self.levels.iter().any(|e| !e.is_finite()) {
            return Err(Error::Spec("system level energies must be finite".into()));
        }
        if self.levels.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Spec(
                "system level energies must be non-decreasing".into(),
            ));
        }
        Ok(())
    }
}

/// One environment band: `N_a` equidistant levels of total width `δε`
/// centred around `E_a`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandSpec {
    /// Mean band energy `E_a` (u).
    pub mean_energy: f64,
    /// Band width `δε` (u), strictly positive.
    pub width: f64,
    /// Number of levels `N_a` in the band.
    pub levels: usize,
}

impl BandSpec {
    pub fn new(mean_energy: f64, width: f64, levels: usize) -> Self {
        Self {
            mean_energy,
            width,
            levels,
        }
    }

    /// Energy of level `n` (zero-based) within the band:
    /// `E_a + δε·(n+1)/N_a`.
    pub fn level_energy(&self, n: usize) -> f64 {
        debug_assert!(n < self.levels);
        self.mean_energy + self.width * (n + 1) as f64 / self.levels as f64
    }

    fn validate(&self) -> Result<()> {
        if !(self.width > 0.0) || !self.width.is_finite() {
            return Err(Error::Spec(format!(
                "band width must be positive and finite, got {}",
                self.width
            )));
        }
        if self.levels == 0 {
            return Err(Error::Spec("band must contain at least one level".into()));
        }
        if !self.mean_energy.is_finite() {
            return Err(Error::Spec("band mean energy must be finite".into()));
        }
        Ok(())
    }
}

/// Canonical couplings (`i != j`) exchange energy with the environment;
/// microcanonical couplings (`i == j`) only entangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CouplingKind {
    Canonical,
    Microcanonical,
}

/// One declared interaction block `C_{ij,ab}` with strength `λ_{ij,ab}`.
///
/// Only the canonical representative is stored: `i <= j`, and `a <= b`
/// whenever `i == j`. The adjoint block `C_{ji,ba} = C_{ij,ab}^†` is implied
/// (so `λ_{ij,ab} = λ_{ji,ba}`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CouplingBlockSpec {
    /// System pair `(i, j)` with `i <= j`, zero-based.
    pub system_pair: (usize, usize),
    /// Band pair `(a, b)`, zero-based. The block maps
    /// subspace `(j, b)` to subspace `(i, a)`.
    pub band_pair: (usize, usize),
    /// Coupling strength `λ` (u), non-negative.
    pub strength: f64,
}

impl CouplingBlockSpec {
    pub fn new(system_pair: (usize, usize), band_pair: (usize, usize), strength: f64) -> Self {
        Self {
            system_pair,
            band_pair,
            strength,
        }
    }

    pub fn kind(&self) -> CouplingKind {
        if self.system_pair.0 == self.system_pair.1 {
            CouplingKind::Microcanonical
        } else {
            CouplingKind::Canonical
        }
    }

    /// Identity key `(i, j, a, b)`.
    pub fn key(&self) -> (usize, usize, usize, usize) {
        (
            self.system_pair.0,
            self.system_pair.1,
            self.band_pair.0,
            self.band_pair.1,
        )
    }
}

/// Full declarative model: system, bands, and coupling blocks.
///
/// Units convention: `ħ = 1`, energies in u, times in `ħ/u`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub system: SystemSpec,
    pub bands: Vec<BandSpec>,
    #[serde(default)]
    pub blocks: Vec<CouplingBlockSpec>,
}

impl ModelSpec {
    pub fn new(system: SystemSpec, bands: Vec<BandSpec>, blocks: Vec<CouplingBlockSpec>) -> Self {
        Self {
            system,
            bands,
            blocks,
        }
    }

    pub fn n_sys(&self) -> usize {
        self.system.dim()
    }

    pub fn n_bands(&self) -> usize {
        self.bands.len()
    }

    /// Total number of environment levels `N_E = Σ_a N_a`.
    pub fn n_env(&self) -> usize {
        self.bands.iter().map(|b| b.levels).sum()
    }

    /// Composite dimension `N_tot = N_S · N_E`.
    pub fn n_total(&self) -> usize {
        self.n_sys() * self.n_env()
    }

    pub fn layout(&self) -> BasisLayout {
        BasisLayout::new(self.n_sys(), self.bands.iter().map(|b| b.levels).collect())
    }

    /// Check every declared invariant; all operations consuming a spec call
    /// this first.
    pub fn validate(&self) -> Result<()> {
        self.system.validate()?;
        if self.bands.is_empty() {
            return Err(Error::Spec("model needs at least one band".into()));
        }
        for band in &self.bands {
            band.validate()?;
        }
        let mut seen = std::collections::HashSet::new();
        for blk in &self.blocks {
            let (i, j, a, b) = blk.key();
            if i >= self.n_sys() || j >= self.n_sys() {
                return Err(Error::Spec(format!(
                    "block {:?}: system index out of range (N_S = {})",
                    blk.key(),
                    self.n_sys()
                )));
            }
            if a >= self.n_bands() || b >= self.n_bands() {
                return Err(Error::Spec(format!(
                    "block {:?}: band index out of range ({} bands)",
                    blk.key(),
                    self.n_bands()
                )));
            }
            if i > j {
                return Err(Error::Spec(format!(
                    "block {:?}: store the canonical representative with i <= j",
                    blk.key()
                )));
            }
            if i == j && a > b {
                return Err(Error::Spec(format!(
                    "block {:?}: microcanonical blocks need a <= b (the adjoint is implied)",
                    blk.key()
                )));
            }
            if !(blk.strength >= 0.0) || !blk.strength.is_finite() {
                return Err(Error::Spec(format!(
                    "block {:?}: strength must be finite and non-negative",
                    blk.key()
                )));
            }
            if !seen.insert(blk.key()) {
                return Err(Error::Spec(format!(
                    "duplicate block entry {:?}",
                    blk.key()
                )));
            }
        }
        Ok(())
    }

    /// Local energy `E_i + E_a + δε·(n+1)/N_a` of the basis state
    /// `(i, a, n)` (`n` zero-based within the band).
    pub fn local_energy(&self, i: usize, a: usize, n: usize) -> f64 {
        self.system.energy(i) + self.bands[a].level_energy(n)
    }

    /// Parse a model file.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let spec: ModelSpec =
            toml::from_str(text).map_err(|e| Error::Config(format!("model file: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("model serialization cannot fail")
    }

    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Self> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    /// Stable content hash of the spec (FNV-1a over the canonical TOML
    /// form), used for run provenance.
    pub fn content_hash(&self) -> String {
        let text = self.to_toml_string();
        let mut h: u64 = 0xcbf29ce484222325;
        for byte in text.bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        format!("{h:016x}")
    }
}

/// System-major flat indexing of the composite basis:
/// `k = i·N_E + offset(a) + n` with `offset(a) = Σ_{a'<a} N_{a'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisLayout {
    n_sys: usize,
    band_sizes: Vec<usize>,
    band_offsets: Vec<usize>,
    n_env: usize,
}

impl BasisLayout {
    pub fn new(n_sys: usize, band_sizes: Vec<usize>) -> Self {
        let mut band_offsets = Vec::with_capacity(band_sizes.len());
        let mut acc = 0;
        for &s in &band_sizes {
            band_offsets.push(acc);
            acc += s;
        }
        Self {
            n_sys,
            band_sizes,
            band_offsets,
            n_env: acc,
        }
    }

    pub fn n_sys(&self) -> usize {
        self.n_sys
    }

    pub fn n_bands(&self) -> usize {
        self.band_sizes.len()
    }

    pub fn n_env(&self) -> usize {
        self.n_env
    }

    pub fn n_total(&self) -> usize {
        self.n_sys * self.n_env
    }

    pub fn band_size(&self, a: usize) -> usize {
        self.band_sizes[a]
    }

    pub fn band_offset(&self, a: usize) -> usize {
        self.band_offsets[a]
    }

    /// Flat index of `(i, a, n)`; `n` is zero-based within band `a`.
    pub fn flat(&self, i: usize, a: usize, n: usize) -> usize {
        debug_assert!(i < self.n_sys && a < self.band_sizes.len() && n < self.band_sizes[a]);
        i * self.n_env + self.band_offsets[a] + n
    }

    /// Inverse of [`Self::flat`].
    pub fn decode(&self, k: usize) -> (usize, usize, usize) {
        debug_assert!(k < self.n_total());
        let i = k / self.n_env;
        let mut r = k % self.n_env;
        let mut a = 0;
        while a + 1 < self.band_sizes.len() && r >= self.band_offsets[a + 1] {
            a += 1;
        }
        r -= self.band_offsets[a];
        (i, a, r)
    }
}

/// Diagonal of the local Hamiltonian `H_loc = H_S ⊗ 1 + 1 ⊗ H_E` over the
/// composite basis. Returned as a vector, never as a dense matrix.
pub fn build_local_hamiltonian(spec: &ModelSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    let layout = spec.layout();
    let mut diag = vec![0.0; layout.n_total()];
    for i in 0..spec.n_sys() {
        for a in 0..spec.n_bands() {
            for n in 0..spec.bands[a].levels {
                diag[layout.flat(i, a, n)] = spec.local_energy(i, a, n);
            }
        }
    }
    Ok(diag)
}

/// The sparse operator `P̂_ij^a = |i⟩⟨j| ⊗ Π_a`: ones at rows `(i, a, n)`
/// and columns `(j, a, n)` for every level `n` of band `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeProjector {
    pub i: usize,
    pub j: usize,
    pub a: usize,
    layout: BasisLayout,
}

/// Build `P̂_ij^a` over the given layout.
pub fn composite_projector(
    layout: &BasisLayout,
    i: usize,
    j: usize,
    a: usize,
) -> Result<CompositeProjector> {
    if i >= layout.n_sys() || j >= layout.n_sys() {
        return Err(Error::Spec(format!(
            "projector indices ({i},{j}) out of range for {} system levels",
            layout.n_sys()
        )));
    }
    if a >= layout.n_bands() {
        return Err(Error::Spec(format!(
            "projector band {a} out of range for {} bands",
            layout.n_bands()
        )));
    }
    Ok(CompositeProjector {
        i,
        j,
        a,
        layout: layout.clone(),
    })
}

impl CompositeProjector {
    /// Number of structural nonzeros (`N_a`).
    pub fn nnz(&self) -> usize {
        self.layout.band_size(self.a)
    }

    /// Exact trace: `N_a` for `i == j`, else 0.
    pub fn trace(&self) -> f64 {
        if self.i == self.j {
            self.layout.band_size(self.a) as f64
        } else {
            0.0
        }
    }

    /// Nonzero positions as `(row, col)` pairs.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.layout.band_size(self.a)).map(move |n| {
            (
                self.layout.flat(self.i, self.a, n),
                self.layout.flat(self.j, self.a, n),
            )
        })
    }

    /// Apply to a state vector.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.layout.n_total());
        let mut y = vec![Complex64::new(0.0, 0.0); x.len()];
        for (r, c) in self.entries() {
            y[r] = x[c];
        }
        y
    }

    /// Group law `P̂_ij^a · P̂_i'j'^a' = δ_{ji'} δ_{aa'} P̂_ij'^a'`;
    /// `None` encodes the zero operator.
    pub fn product(&self, other: &CompositeProjector) -> Option<CompositeProjector> {
        debug_assert_eq!(self.layout, other.layout);
        if self.j == other.i && self.a == other.a {
            Some(CompositeProjector {
                i: self.i,
                j: other.j,
                a: other.a,
                layout: self.layout.clone(),
            })
        } else {
            None
        }
    }

    pub fn to_dense(&self) -> faer::Mat<faer::c64> {
        let n = self.layout.n_total();
        let mut m = faer::Mat::<faer::c64>::zeros(n, n);
        for (r, c) in self.entries() {
            m[(r, c)] = faer::c64::new(1.0, 0.0);
        }
        m
    }
}

/// Classification of a declared block against the resonance condition.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockClass {
    pub block: CouplingBlockSpec,
    /// `|E_i + E_a − E_j − E_b|` from the mean band energies.
    pub detuning: f64,
    pub resonant: bool,
    pub kind: CouplingKind,
}

/// Flag each declared block as resonant or not.
///
/// A block is resonant when its detuning is at most `tolerance`; the default
/// tolerance is the smaller width of the two coupled bands (contributions
/// vanish once the gap mismatch exceeds the band's frequency spread).
pub fn classify_blocks(spec: &ModelSpec, tolerance: Option<f64>) -> Result<Vec<BlockClass>> {
    spec.validate()?;
    if let Some(tol) = tolerance {
        if !(tol >= 0.0) {
            return Err(Error::Spec(format!(
                "resonance tolerance must be non-negative, got {tol}"
            )));
        }
    }
    Ok(spec
        .blocks
        .iter()
        .map(|blk| {
            let (i, j, a, b) = blk.key();
            let detuning = (spec.system.energy(i) + spec.bands[a].mean_energy
                - spec.system.energy(j)
                - spec.bands[b].mean_energy)
                .abs();
            let tol = tolerance.unwrap_or_else(|| spec.bands[a].width.min(spec.bands[b].width));
            BlockClass {
                block: *blk,
                detuning,
                resonant: detuning <= tol,
                kind: blk.kind(),
            }
        })
        .collect())
}
