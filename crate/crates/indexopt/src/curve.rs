//! Reduction of multidimensional search domains to the unit interval.
//!
//! A level-`d` approximation of a space-filling curve visits every cell of a
//! `2^d x ... x 2^d` partition of the cube `[-1/2, 1/2]^N` exactly once,
//! entering the cell that contains the corner `(-1/2, ..., -1/2)` first and
//! moving between face-adjacent cells. [`CurveMap`] maps a scalar
//! `x in [0, 1]` to the center of the cell whose visiting rank is
//! `floor(x * 2^(d*N))`, turning a multidimensional problem over the cube
//! into a one-dimensional problem over `[0, 1]`.
//!
//! Under this reduction a Lipschitz function on the cube satisfies a Hölder
//! condition with exponent `1/N` over the interval, with metric
//! [`holder_distance`]. Points closer than the map's [`CurveMap::resolution`]
//! are indistinguishable to the reduction.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use crate::error::{BoundsError, CurveError};

/// Largest value of `level * dimension`: cell ranks must stay exactly
/// representable in an `f64` mantissa so `x -> rank` is unambiguous.
pub const MAX_TOTAL_BITS: u32 = 52;

// Orientation of the curve inside the cube — one fixed member of the
// curve's symmetry family (axis rotation, per-axis mirror, traversal
// direction). Every choice preserves the walk invariants; this particular
// one anchors which corner the walk enters first and along which axis it
// leaves, and all frozen walk expectations in the tests below assume it.
const LAYOUT_ROTATE: usize = 0;
const LAYOUT_MIRROR: u64 = 0;
const LAYOUT_REVERSED: bool = false;

/// Piecewise-constant approximation of a space-filling curve in
/// `[-1/2, 1/2]^N`, evaluated over `x in [0, 1]`.
///
/// For `dimension == 1` the map degenerates to the exact affine identity
/// `x -> x - 1/2` and the level only affects the (then unused) cell walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveMap {
    dimension: usize,
    level: u32,
}

impl CurveMap {
    /// Creates a map for the given dimension (`>= 1`) and subdivision level
    /// (`>= 1`, with `level * dimension <= 52`).
    pub fn new(dimension: usize, level: u32) -> Result<Self, CurveError> {
        if dimension == 0 {
            return Err(CurveError::InvalidDimension(dimension));
        }
        let total = (dimension as u64).checked_mul(level as u64);
        match total {
            Some(bits) if level >= 1 && bits <= MAX_TOTAL_BITS as u64 => {
                Ok(CurveMap { dimension, level })
            }
            _ => Err(CurveError::InvalidLevel { dimension, level }),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    fn total_bits(&self) -> u32 {
        self.level * self.dimension as u32
    }

    /// Number of cells the curve visits: `2^(level * dimension)`.
    pub fn cell_count(&self) -> u64 {
        1u64 << self.total_bits()
    }

    /// Cells per axis: `2^level`.
    pub fn cells_per_axis(&self) -> u64 {
        1u64 << self.level
    }

    /// Smallest separation in `x` the map can distinguish.
    ///
    /// Two arguments closer than this may fall into the same cell and map to
    /// the same point. The one-dimensional map is exact, so its resolution is
    /// machine precision rather than a cell width.
    pub fn resolution(&self) -> f64 {
        let bits = if self.dimension == 1 { MAX_TOTAL_BITS } else { self.total_bits() };
        1.0 / (1u64 << bits) as f64
    }

    /// Maps `x in [0, 1]` to a point of the cube `[-1/2, 1/2]^N`.
    pub fn map_to_cube(&self, x: f64) -> Result<Vec<f64>, CurveError> {
        if !x.is_finite() || !(0.0..=1.0).contains(&x) {
            return Err(CurveError::OutOfRange(x));
        }
        if self.dimension == 1 {
            return Ok(vec![x - 0.5]);
        }
        let cells = self.cell_count();
        let rank = ((x * cells as f64) as u64).min(cells - 1);
        Ok(self.cell_center(&self.rank_to_cell(rank)))
    }

    /// Integer coordinates of the cell visited at `rank`
    /// (each in `0..2^level`).
    ///
    /// Panics if `rank >= cell_count()`.
    pub fn rank_to_cell(&self, rank: u64) -> Vec<u64> {
        assert!(
            rank < self.cell_count(),
            "rank {rank} out of range for {} cells",
            self.cell_count()
        );
        if self.dimension == 1 {
            return vec![rank];
        }
        let rank = if LAYOUT_REVERSED { self.cell_count() - 1 - rank } else { rank };
        let mut transpose = self.spread_bits(rank);
        transpose_to_axes(&mut transpose, self.level);
        let n = self.dimension;
        let mirror = self.cells_per_axis() - 1;
        (0..n)
            .map(|axis| {
                let c = transpose[(axis + LAYOUT_ROTATE) % n];
                if LAYOUT_MIRROR >> axis & 1 == 1 {
                    mirror ^ c
                } else {
                    c
                }
            })
            .collect()
    }

    /// Visiting rank of the cell with the given integer coordinates.
    ///
    /// Inverse of [`CurveMap::rank_to_cell`]. Panics on a length mismatch or
    /// an out-of-range coordinate.
    pub fn cell_to_rank(&self, cell: &[u64]) -> u64 {
        assert_eq!(cell.len(), self.dimension, "cell coordinate count");
        let per_axis = self.cells_per_axis();
        assert!(
            cell.iter().all(|&c| c < per_axis),
            "cell coordinate out of range for {per_axis} cells per axis"
        );
        if self.dimension == 1 {
            return cell[0];
        }
        let n = self.dimension;
        let mirror = per_axis - 1;
        let mut transpose = vec![0u64; n];
        for (axis, &c) in cell.iter().enumerate() {
            let c = if LAYOUT_MIRROR >> axis & 1 == 1 { mirror ^ c } else { c };
            transpose[(axis + LAYOUT_ROTATE) % n] = c;
        }
        axes_to_transpose(&mut transpose, self.level);
        let rank = self.gather_bits(&transpose);
        if LAYOUT_REVERSED {
            self.cell_count() - 1 - rank
        } else {
            rank
        }
    }

    /// Center of a cell, in cube coordinates.
    pub fn cell_center(&self, cell: &[u64]) -> Vec<f64> {
        let per_axis = self.cells_per_axis() as f64;
        cell.iter().map(|&c| (c as f64 + 0.5) / per_axis - 0.5).collect()
    }

    /// Distributes the rank's bits round-robin over one word per axis, most
    /// significant bit first.
    fn spread_bits(&self, rank: u64) -> Vec<u64> {
        let n = self.dimension;
        let b = self.level;
        let total = self.total_bits();
        let mut words = vec![0u64; n];
        for lev in 0..b {
            for (i, word) in words.iter_mut().enumerate() {
                let bit = (rank >> (total - 1 - (lev * n as u32 + i as u32))) & 1;
                *word |= bit << (b - 1 - lev);
            }
        }
        words
    }

    fn gather_bits(&self, words: &[u64]) -> u64 {
        let n = self.dimension;
        let b = self.level;
        let total = self.total_bits();
        let mut rank = 0u64;
        for lev in 0..b {
            for (i, word) in words.iter().enumerate() {
                let bit = (word >> (b - 1 - lev)) & 1;
                rank |= bit << (total - 1 - (lev * n as u32 + i as u32));
            }
        }
        rank
    }
}

/// In-place conversion from the bit-transposed rank to axis coordinates
/// (Skilling's algorithm).
fn transpose_to_axes(x: &mut [u64], bits: u32) {
    let n = x.len();
    // Gray decode by H ^ (H/2).
    let t = x[n - 1] >> 1;
    for i in (1..n).rev() {
        x[i] ^= x[i - 1];
    }
    x[0] ^= t;
    // Undo excess work.
    let top = 1u64 << bits;
    let mut q = 2u64;
    while q != top {
        let p = q - 1;
        for i in (0..n).rev() {
            if x[i] & q != 0 {
                x[0] ^= p;
            } else {
                let t = (x[0] ^ x[i]) & p;
                x[0] ^= t;
                x[i] ^= t;
            }
        }
        q <<= 1;
    }
}

/// Inverse of [`transpose_to_axes`].
fn axes_to_transpose(x: &mut [u64], bits: u32) {
    let n = x.len();
    let m = 1u64 << (bits - 1);
    let mut q = m;
    while q > 1 {
        let p = q - 1;
        for i in 0..n {
            if x[i] & q != 0 {
                x[0] ^= p;
            } else {
                let t = (x[0] ^ x[i]) & p;
                x[0] ^= t;
                x[i] ^= t;
            }
        }
        q >>= 1;
    }
    // Gray encode.
    for i in 1..n {
        x[i] ^= x[i - 1];
    }
    let mut t = 0u64;
    q = m;
    while q > 1 {
        if x[n - 1] & q != 0 {
            t ^= q - 1;
        }
        q >>= 1;
    }
    for w in x.iter_mut() {
        *w ^= t;
    }
}

/// Hölder metric on `[0, 1]` induced by an `N`-dimensional curve reduction:
/// `|a - b|^(1/N)`.
pub fn holder_distance(a: f64, b: f64, dimension: usize) -> f64 {
    debug_assert!(dimension >= 1);
    let gap = (a - b).abs();
    if dimension == 1 {
        gap
    } else {
        gap.powf(1.0 / dimension as f64)
    }
}

/// Axis-aligned search domain `[a_1, b_1] x ... x [a_N, b_N]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    /// Creates bounds from per-axis endpoints; every interval must be finite
    /// and non-degenerate (`lower < upper`).
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, BoundsError> {
        if lower.is_empty() {
            return Err(BoundsError::Empty);
        }
        if lower.len() != upper.len() {
            return Err(BoundsError::LengthMismatch { lower: lower.len(), upper: upper.len() });
        }
        for (axis, (&a, &b)) in lower.iter().zip(&upper).enumerate() {
            if !a.is_finite() || !b.is_finite() || a >= b {
                return Err(BoundsError::BadInterval { axis, lower: a, upper: b });
            }
        }
        Ok(Bounds { lower, upper })
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Affine image of a point of the cube `[-1/2, 1/2]^N` in this domain.
    pub fn from_cube(&self, point: &[f64]) -> Vec<f64> {
        assert_eq!(point.len(), self.dimension(), "point dimension");
        point
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(&p, (&a, &b))| a + (p + 0.5) * (b - a))
            .collect()
    }

    /// Affine preimage in the cube `[-1/2, 1/2]^N` of a domain point.
    pub fn to_cube(&self, point: &[f64]) -> Vec<f64> {
        assert_eq!(point.len(), self.dimension(), "point dimension");
        point
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(&y, (&a, &b))| (y - a) / (b - a) - 0.5)
            .collect()
    }

    /// Whether the point lies inside the domain (boundaries included).
    pub fn contains(&self, point: &[f64]) -> bool {
        point.len() == self.dimension()
            && point
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&y, (&a, &b))| y >= a && y <= b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_construction() {
        assert!(matches!(CurveMap::new(0, 3), Err(CurveError::InvalidDimension(0))));
        assert!(matches!(CurveMap::new(2, 0), Err(CurveError::InvalidLevel { .. })));
        assert!(matches!(CurveMap::new(2, 27), Err(CurveError::InvalidLevel { .. })));
        assert!(matches!(CurveMap::new(6, 9), Err(CurveError::InvalidLevel { .. })));
        assert!(CurveMap::new(6, 8).is_ok());
        assert!(CurveMap::new(1, 52).is_ok());
        assert!(CurveMap::new(26, 2).is_ok());
    }

    #[test]
    fn resolution_values() {
        assert_eq!(CurveMap::new(2, 1).unwrap().resolution(), 0.25);
        assert_eq!(CurveMap::new(2, 10).unwrap().resolution(), 2f64.powi(-20));
        assert_eq!(CurveMap::new(6, 8).unwrap().resolution(), 2f64.powi(-48));
        // The 1-D map is affine and exact; level does not matter.
        assert_eq!(CurveMap::new(1, 10).unwrap().resolution(), 2f64.powi(-52));
    }

    #[test]
    fn two_dim_level_one_walk() {
        let curve = CurveMap::new(2, 1).unwrap();
        let cells: Vec<Vec<u64>> = (0..4).map(|k| curve.rank_to_cell(k)).collect();
        assert_eq!(cells, vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![1, 0]]);
        assert_eq!(curve.map_to_cube(0.0).unwrap(), vec![-0.25, -0.25]);
        // Consecutive quarters land in face-adjacent cells.
        let centers: Vec<Vec<f64>> =
            [0.1, 0.3, 0.6, 0.9].iter().map(|&x| curve.map_to_cube(x).unwrap()).collect();
        assert_eq!(centers[0], vec![-0.25, -0.25]);
        assert_eq!(centers[1], vec![-0.25, 0.25]);
        assert_eq!(centers[2], vec![0.25, 0.25]);
        assert_eq!(centers[3], vec![0.25, -0.25]);
        for pair in centers.windows(2) {
            let moved: Vec<f64> =
                pair[0].iter().zip(&pair[1]).map(|(a, b)| (a - b).abs()).collect();
            assert_eq!(moved.iter().filter(|&&d| d == 0.5).count(), 1);
            assert_eq!(moved.iter().filter(|&&d| d == 0.0).count(), 1);
        }
    }

    #[test]
    fn two_dim_level_two_walk() {
        let curve = CurveMap::new(2, 2).unwrap();
        let cells: Vec<Vec<u64>> = (0..16).map(|k| curve.rank_to_cell(k)).collect();
        let expected: Vec<Vec<u64>> = [
            (0, 0),
            (1, 0),
            (1, 1),
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 3),
            (1, 2),
            (2, 2),
            (2, 3),
            (3, 3),
            (3, 2),
            (3, 1),
            (2, 1),
            (2, 0),
            (3, 0),
        ]
        .iter()
        .map(|&(a, b)| vec![a, b])
        .collect();
        assert_eq!(cells, expected);
    }

    #[test]
    fn three_dim_level_one_walk() {
        let curve = CurveMap::new(3, 1).unwrap();
        let cells: Vec<Vec<u64>> = (0..8).map(|k| curve.rank_to_cell(k)).collect();
        let expected: Vec<Vec<u64>> = [
            (0, 0, 0),
            (0, 0, 1),
            (0, 1, 1),
            (0, 1, 0),
            (1, 1, 0),
            (1, 1, 1),
            (1, 0, 1),
            (1, 0, 0),
        ]
        .iter()
        .map(|&(a, b, c)| vec![a, b, c])
        .collect();
        assert_eq!(cells, expected);
    }

    #[test]
    fn one_dim_is_affine_identity() {
        let curve = CurveMap::new(1, 10).unwrap();
        assert_eq!(curve.map_to_cube(0.0).unwrap(), vec![-0.5]);
        assert_eq!(curve.map_to_cube(1.0).unwrap(), vec![0.5]);
        assert_eq!(curve.map_to_cube(0.3).unwrap(), vec![0.3 - 0.5]);
        // Rank walk degenerates to the identity scan.
        assert_eq!(curve.rank_to_cell(5), vec![5]);
        assert_eq!(curve.cell_to_rank(&[5]), 5);
    }

    #[test]
    fn map_rejects_bad_arguments() {
        let curve = CurveMap::new(2, 4).unwrap();
        assert!(matches!(curve.map_to_cube(-0.1), Err(CurveError::OutOfRange(_))));
        assert!(matches!(curve.map_to_cube(1.5), Err(CurveError::OutOfRange(_))));
        assert!(matches!(curve.map_to_cube(f64::NAN), Err(CurveError::OutOfRange(_))));
    }

    #[test]
    fn endpoints_map_to_first_and_last_cells() {
        for (n, d) in [(2usize, 10u32), (3, 7), (4, 5), (5, 4)] {
            let curve = CurveMap::new(n, d).unwrap();
            let first = curve.cell_center(&curve.rank_to_cell(0));
            let last = curve.cell_center(&curve.rank_to_cell(curve.cell_count() - 1));
            assert_eq!(curve.map_to_cube(0.0).unwrap(), first);
            assert_eq!(curve.map_to_cube(1.0).unwrap(), last);
            // Rank 0 holds the lowest corner of the cube.
            assert!(first.iter().all(|&c| c == -0.5 + 0.5 / curve.cells_per_axis() as f64));
        }
    }

    #[test]
    fn holder_distance_examples() {
        assert_eq!(holder_distance(0.0, 1.0, 2), 1.0);
        assert_eq!(holder_distance(0.75, 1.0, 2), 0.5);
        assert_eq!(holder_distance(0.25, 0.75, 1), 0.5);
        assert!((holder_distance(0.0, 1.0 / 8.0, 3) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn scaling_round_trip() {
        let bounds = Bounds::new(vec![0.0, -1.0], vec![4.0, 3.0]).unwrap();
        assert_eq!(bounds.from_cube(&[-0.25, -0.25]), vec![1.0, 0.0]);
        assert_eq!(bounds.to_cube(&[1.0, 0.0]), vec![-0.25, -0.25]);
        assert!(bounds.contains(&[0.0, 3.0]));
        assert!(!bounds.contains(&[4.1, 0.0]));
        assert!(!bounds.contains(&[f64::NAN, 0.0]));
    }

    #[test]
    fn bounds_validation() {
        assert!(matches!(Bounds::new(vec![], vec![]), Err(BoundsError::Empty)));
        assert!(matches!(
            Bounds::new(vec![0.0], vec![1.0, 2.0]),
            Err(BoundsError::LengthMismatch { .. })
        ));
        assert!(matches!(
            Bounds::new(vec![1.0], vec![1.0]),
            Err(BoundsError::BadInterval { axis: 0, .. })
        ));
        assert!(matches!(
            Bounds::new(vec![0.0, f64::INFINITY], vec![1.0, 2.0]),
            Err(BoundsError::BadInterval { axis: 1, .. })
        ));
    }
}
