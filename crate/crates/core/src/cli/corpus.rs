use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_math::{Integer, Rational};
use crate::families::{generate_polytope, standard_members};
use crate::polytope::{make_hrep, HalfSpace, Polytope};

/// Parameters of the seeded random corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusConfig {
    pub count: usize,
    pub dim_min: usize,
    pub dim_max: usize,
    /// Normal entries are drawn from `[-bound, bound]`.
    pub bound: i64,
    pub seed: u64,
    /// Probability that an item is built with offsets in `{0, 1}` rather
    /// than general rational offsets.
    pub constructed_weight: f64,
    /// Offsets are `p/q` with `1 <= q <= max_denominator` and
    /// `|p/q| <= max_offset`.
    pub max_offset: i64,
    pub max_denominator: i64,
    /// Items with a vertex coordinate beyond this are redrawn, which keeps
    /// brute-force lattice boxes small.
    pub max_vertex_coordinate: i64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            count: 200,
            dim_min: 2,
            dim_max: 3,
            bound: 4,
            seed: 42,
            constructed_weight: 0.25,
            max_offset: 2,
            max_denominator: 3,
            max_vertex_coordinate: 4,
        }
    }
}

impl CorpusConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.count == 0 {
            return Err("count must be positive".into());
        }
        if self.dim_min == 0 || self.dim_min > self.dim_max {
            return Err(format!(
                "bad dimension range {}..{}",
                self.dim_min, self.dim_max
            ));
        }
        if self.bound < 1 || self.max_denominator < 1 || self.max_offset < 1 {
            return Err("bound, offset and denominator limits must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.constructed_weight) {
            return Err("constructed weight must lie in [0, 1]".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItemKind {
    /// General rational offsets.
    Random,
    /// Integer normals with offsets in `{0, 1}`.
    Constructed,
    Family,
    File,
}

#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub id: usize,
    pub name: String,
    pub kind: ItemKind,
    pub polytope: Polytope,
}

fn random_normal(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> Vec<i64> {
    loop {
        let a: Vec<i64> = (0..d).map(|_| rng.random_range(-bound..=bound)).collect();
        if a.iter().any(|&x| x != 0) {
            return a;
        }
    }
}

fn within(p: &Polytope, limit: i64) -> bool {
    let limit = Rational::from_integer(Integer::from(limit));
    p.vertices().iter().flatten().all(|c| c.abs() <= limit)
}

/// Draws one bounded, nonempty polytope; `constructed` selects offsets
/// in `{0, 1}`.
pub fn random_polytope(rng: &mut ChaCha8Rng, cfg: &CorpusConfig, constructed: bool) -> Polytope {
    loop {
        let d = rng.random_range(cfg.dim_min..=cfg.dim_max);
        let m = rng.random_range(d + 1..=d + 4);
        let rows: Vec<HalfSpace> = (0..m)
            .map(|_| {
                let a = random_normal(rng, d, cfg.bound);
                let b = if constructed {
                    Rational::from_integer(Integer::from(rng.random_range(0..=1)))
                } else {
                    let q = rng.random_range(1..=cfg.max_denominator);
                    let p = rng.random_range(-cfg.max_offset * q..=cfg.max_offset * q);
                    Rational::new(p.into(), q.into())
                };
                HalfSpace::from_integers(&a, b).expect("nonzero normal")
            })
            .collect();
        if let Ok(p) = make_hrep(d, rows) {
            if !p.is_empty() && within(&p, cfg.max_vertex_coordinate) {
                return p;
            }
        }
    }
}

/// The seeded random corpus; identical configs give identical corpora.
pub fn generate_corpus(cfg: &CorpusConfig) -> Vec<CorpusItem> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.count)
        .map(|id| {
            let constructed = rng.random_bool(cfg.constructed_weight);
            let polytope = random_polytope(&mut rng, cfg, constructed);
            let (kind, tag) = if constructed {
                (ItemKind::Constructed, "constructed")
            } else {
                (ItemKind::Random, "random")
            };
            CorpusItem {
                id,
                name: format!("{tag}-{id}"),
                kind,
                polytope,
            }
        })
        .collect()
}

/// Standard family members, numbered from `first_id`.
pub fn family_items(first_id: usize) -> Vec<CorpusItem> {
    standard_members()
        .into_iter()
        .enumerate()
        .map(|(k, (name, spec))| CorpusItem {
            id: first_id + k,
            name,
            kind: ItemKind::Family,
            polytope: generate_polytope(&spec).expect("standard members are valid"),
        })
        .collect()
}
