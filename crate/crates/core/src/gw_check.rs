//! Monte-Carlo verification of the four-point genus-zero invariant: the
//! count of lines through a general point meeting two general Schubert
//! conditions, reduced to intersecting random rational subspaces. All
//! randomness is deterministic in a caller-supplied seed.

use crate::algebra::field::Field;
use crate::algebra::matrix::{DenseMatrix, RowSpace};
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Small deterministic generator (splitmix64) for reproducible draws.
#[derive(Debug, Clone)]
pub struct SeededRng {
    state: u64,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng { state: seed }
    }

    /// An independent stream for subtask `index` of a run seeded by `seed`.
    pub fn split(seed: u64, index: u64) -> Self {
        let mut rng = SeededRng::new(seed.wrapping_add(index.wrapping_mul(GOLDEN_GAMMA)));
        rng.next_u64();
        rng
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from the inclusive range `lo ..= hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// A random rational with numerator in `-9 ..= 9` and denominator in
    /// `1 ..= 4`; small enough to keep exact arithmetic cheap.
    pub fn small_rational(&mut self) -> Rational {
        let num = self.range(-9, 9);
        let den = self.range(1, 4);
        Rational::new(num, den).expect("positive denominator")
    }
}

/// A linear subspace of `Q^ambient`, stored as an independent spanning set.
#[derive(Debug, Clone)]
pub struct LinearSubspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl LinearSubspace {
    /// Wraps a spanning set, which must consist of independent vectors of
    /// length `ambient`.
    pub fn new(ambient: usize, basis: Vec<Vec<Rational>>) -> Result<Self> {
        let mut span = RowSpace::new(ambient);
        for row in &basis {
            if row.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient dimension {ambient}",
                    row.len()
                )));
            }
            if !span.insert(row.clone()) {
                return Err(Error::DimensionMismatch(
                    "spanning set is linearly dependent".to_string(),
                ));
            }
        }
        Ok(LinearSubspace { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// A basis of the functionals (rows) vanishing on the subspace.
    pub fn annihilator(&self) -> Result<Vec<Vec<Rational>>> {
        if self.basis.is_empty() {
            return Ok((0..self.ambient)
                .map(|i| {
                    let mut e = vec![Rational::zero(); self.ambient];
                    e[i] = Rational::one();
                    e
                })
                .collect());
        }
        Ok(DenseMatrix::from_rows(self.basis.clone())?.nullspace())
    }
}

/// Draws a uniformly random subspace of the given codimension by sampling
/// spanning vectors with small rational entries; rank-deficient samples are
/// silently redrawn.
pub fn random_subspace(
    ambient: usize,
    codim: usize,
    rng: &mut SeededRng,
) -> Result<LinearSubspace> {
    if codim > ambient {
        return Err(Error::BadCodim { codim, ambient });
    }
    let dim = ambient - codim;
    let mut attempts = 0usize;
    loop {
        let rows: Vec<Vec<Rational>> = (0..dim)
            .map(|_| (0..ambient).map(|_| rng.small_rational()).collect())
            .collect();
        let mut span = RowSpace::new(ambient);
        if rows.iter().all(|r| span.insert(r.clone())) {
            return Ok(LinearSubspace {
                ambient,
                basis: rows,
            });
        }
        attempts += 1;
        if attempts > 64 {
            return Err(Error::RedrawLimitExceeded { redraws: attempts });
        }
    }
}

/// Dimension of the intersection of the given subspaces, via the rank of
/// their stacked annihilators.
pub fn intersection_dim(spaces: &[LinearSubspace]) -> Result<usize> {
    let first = spaces.first().ok_or(Error::EmptyGeneratorList)?;
    let ambient = first.ambient;
    let mut span = RowSpace::new(ambient);
    for s in spaces {
        if s.ambient != ambient {
            return Err(Error::AmbientMismatch);
        }
        for functional in s.annihilator()? {
            span.insert(functional);
        }
    }
    Ok(ambient - span.dim())
}

/// Degree axiom for genus-zero invariants on IG(2, 2n): a degree-`d`
/// invariant of classes with the given cohomological degrees can be nonzero
/// only if the degrees sum to `(2n - 1) d + 2 (2n - 2)`.
pub fn gw_degree_constraint(n: usize, degrees: &[usize], d: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::UnsupportedN { n, min: 2 });
    }
    let sum: usize = degrees.iter().sum();
    Ok(sum == (2 * n - 1) * d + 2 * (2 * n - 2))
}

/// How a four-point verification concluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourPointStatus {
    /// The invariant is forced to vanish by the degree axiom; nothing was
    /// sampled.
    VanishesByDegree,
    /// Every trial met the expected intersection count on its first draw.
    Verified,
    /// All trials eventually succeeded, after this many redraws.
    DegenerateRedraws(usize),
}

/// Result of a randomized four-point check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourPointOutcome {
    pub value: usize,
    pub trials: usize,
    pub redraws: usize,
    pub status: FourPointStatus,
}

/// Evaluates the four-point invariant attached to Schubert degrees `i, j`.
/// Off the critical band `i + j = 2n - 2` it vanishes by degree. On it, each
/// trial intersects random subspaces of codimensions `1, i - 1, j - 1` in
/// `Q^{2n-2}` and demands a one-dimensional intersection; non-generic draws
/// are redrawn within a budget of `3 * trials`.
pub fn four_point_check(
    n: usize,
    i: usize,
    j: usize,
    trials: usize,
    seed: u64,
) -> Result<FourPointOutcome> {
    if n < 2 {
        return Err(Error::UnsupportedN { n, min: 2 });
    }
    let top = 2 * n - 2;
    for idx in [i, j] {
        if idx < 1 || idx > top {
            return Err(Error::IndexOutOfRange {
                index: idx,
                limit: top,
            });
        }
    }
    if i + j != top {
        return Ok(FourPointOutcome {
            value: 0,
            trials,
            redraws: 0,
            status: FourPointStatus::VanishesByDegree,
        });
    }

    let ambient = top;
    let codims = [1, i - 1, j - 1];
    let budget = 3 * trials;
    let mut redraws = 0usize;
    for trial in 0..trials {
        let mut rng = SeededRng::split(seed, trial as u64);
        loop {
            let spaces = codims
                .iter()
                .map(|&c| random_subspace(ambient, c, &mut rng))
                .collect::<Result<Vec<_>>>()?;
            if intersection_dim(&spaces)? == 1 {
                break;
            }
            redraws += 1;
            if redraws > budget {
                return Err(Error::RedrawLimitExceeded { redraws });
            }
        }
    }
    let status = if redraws == 0 {
        FourPointStatus::Verified
    } else {
        FourPointStatus::DegenerateRedraws(redraws)
    };
    Ok(FourPointOutcome {
        value: 1,
        trials,
        redraws,
        status,
    })
}
