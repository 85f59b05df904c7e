//! Independent geometric ground truth for the counting formulas.
//!
//! Builds the orbit polytope `P_λ = Conv(W · λ)` with integer coordinates
//! and enumerates its full face lattice by brute force: every ordered set
//! partition of the coordinate positions induces a linear functional whose
//! argmax vertex set is a face. The fan of those functionals refines the
//! normal fan of any orbit polytope, so every face arises this way. Nothing in this module touches the counting formulas it is used to
//! check.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::coxeter::SimpleSubset;
use crate::error::{Error, Result};
use crate::hvector::FVector;
use crate::scalar::{scalar_from_usize, Scalar};

/// Enumeration limits for the geometric pipeline.
///
/// Full face-lattice runs cost `Fubini(n+1)` functional maximizations over
/// up to `(n+1)!` points, so they are guarded separately from plain orbit
/// generation. `ORBITOPE_GUARD_N` (or [`Guard::raised_to`]) raises both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    /// Largest rank for which orbit points are generated.
    pub max_orbit_rank: u32,
    /// Largest rank for which the full face lattice is enumerated.
    pub max_lattice_rank: u32,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_orbit_rank: 6,
            max_lattice_rank: 5,
        }
    }
}

impl Guard {
    /// Default limits, raised (never lowered) to `n`.
    pub fn raised_to(n: u32) -> Self {
        let base = Guard::default();
        Guard {
            max_orbit_rank: base.max_orbit_rank.max(n),
            max_lattice_rank: base.max_lattice_rank.max(n),
        }
    }

    /// Default limits, raised by `ORBITOPE_GUARD_N` when set to an integer.
    pub fn from_env() -> Self {
        match std::env::var("ORBITOPE_GUARD_N")
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
        {
            Some(n) => Guard::raised_to(n),
            None => Guard::default(),
        }
    }
}

/// Ground-set size limit for free-standing ordered-set-partition
/// enumeration (`Fubini(7) = 47293` is the largest default workload).
pub const DEFAULT_PARTITION_LIMIT: usize = 7;

/// An integer point in `(n+1)`-space whose pattern of equal adjacent
/// coordinates realizes a stabilizer subset `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> u32 {
        self.coords.len() as u32 - 1
    }
}

/// The canonical weight for `J`: positions `1..=n+1` are grouped into
/// maximal runs linked by the members of `J` (`s_i` forces positions `i`
/// and `i+1` equal), and run `r` of `m` runs gets the value `m - r`.
///
/// The values are block-wise constant, strictly decreasing across blocks,
/// and the stabilizer of the result under coordinate permutation is
/// exactly `W_J`.
pub fn canonical_weight(j: &SimpleSubset) -> Weight {
    let n = j.rank();
    let mut run_of = Vec::with_capacity(n as usize + 1);
    let mut run = 0u32;
    for pos in 1..=n + 1 {
        run_of.push(run);
        if pos <= n && !j.contains(pos) {
            run += 1;
        }
    }
    let runs = run + 1;
    let coords = run_of.into_iter().map(|r| (runs - 1 - r) as i64).collect();
    Weight { coords }
}

/// The orbit `W · λ`: all distinct coordinate permutations of a weight,
/// deduplicated and lexicographically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPointSet {
    points: Vec<Vec<i64>>,
}

impl OrbitPointSet {
    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.points[0].len() as u32 - 1
    }
}

pub fn orbit_points(w: &Weight, guard: &Guard) -> Result<OrbitPointSet> {
    if w.rank() > guard.max_orbit_rank {
        return Err(Error::GuardExceeded {
            what: "orbit rank",
            requested: w.rank(),
            limit: guard.max_orbit_rank,
        });
    }
    let mut current = w.coords.clone();
    current.sort_unstable();
    let mut points = Vec::new();
    loop {
        points.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    Ok(OrbitPointSet { points })
}

/// Advances `arr` to its lexicographic successor among the distinct
/// arrangements of its multiset; returns false from the last one.
fn next_permutation(arr: &mut [i64]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// An ordered set partition of positions `{1..m}`, stored as the block
/// index of each position plus the block count. Blocks are disjoint,
/// nonempty, and cover all positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    block_of: Vec<usize>,
    block_count: usize,
}

impl OrderedSetPartition {
    /// Builds a partition from explicit blocks of 1-based positions.
    pub fn new(blocks: Vec<Vec<usize>>, m: usize) -> Result<Self> {
        let mut block_of = vec![usize::MAX; m];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            for &pos in block {
                if pos < 1 || pos > m || block_of[pos - 1] != usize::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "position {pos} missing from 1..={m} or repeated"
                    )));
                }
                block_of[pos - 1] = b;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(Error::InvalidArgument("blocks do not cover 1..=m".into()));
        }
        Ok(OrderedSetPartition {
            block_of,
            block_count: blocks.len(),
        })
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    /// Block index (0-based) of a 1-based position.
    pub fn block_of(&self, pos: usize) -> usize {
        self.block_of[pos - 1]
    }

    /// Blocks as lists of 1-based positions.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count];
        for (idx, &b) in self.block_of.iter().enumerate() {
            blocks[b].push(idx + 1);
        }
        blocks
    }
}

/// All ordered set partitions of `{1..m}` in a deterministic order; the
/// counts follow the Fubini numbers 1, 1, 3, 13, 75, 541, 4683, 47293, ...
pub fn ordered_set_partitions(m: usize) -> Result<Vec<OrderedSetPartition>> {
    ordered_set_partitions_with_limit(m, DEFAULT_PARTITION_LIMIT)
}

/// As [`ordered_set_partitions`] with an explicit ground-set limit.
pub fn ordered_set_partitions_with_limit(
    m: usize,
    limit: usize,
) -> Result<Vec<OrderedSetPartition>> {
    if m < 1 {
        return Err(Error::InvalidArgument("ground set must be nonempty".into()));
    }
    if m > limit {
        return Err(Error::GuardExceeded {
            what: "ordered-set-partition ground set",
            requested: m as u32,
            limit: limit as u32,
        });
    }
    Ok(generate_partitions(m))
}

fn generate_partitions(m: usize) -> Vec<OrderedSetPartition> {
    let full: u32 = (1 << m) - 1;
    let mut out = Vec::new();
    let mut blocks: Vec<u32> = Vec::new();
    recurse(full, m, &mut blocks, &mut out);
    out
}

// First block = any nonempty submask of the remaining positions, then
// recurse on the rest; generates each ordered set partition exactly once.
fn recurse(remaining: u32, m: usize, blocks: &mut Vec<u32>, out: &mut Vec<OrderedSetPartition>) {
    if remaining == 0 {
        let mut block_of = vec![usize::MAX; m];
        for (b, &mask) in blocks.iter().enumerate() {
            let mut bits = mask;
            while bits != 0 {
                let pos = bits.trailing_zeros() as usize;
                block_of[pos] = b;
                bits &= bits - 1;
            }
        }
        out.push(OrderedSetPartition {
            block_of,
            block_count: blocks.len(),
        });
        return;
    }
    let mut sub = remaining;
    loop {
        blocks.push(sub);
        recurse(remaining & !sub, m, blocks, out);
        blocks.pop();
        sub = (sub - 1) & remaining;
        if sub == 0 {
            break;
        }
    }
}

/// Vertex indices (into the lex-sorted point list) maximizing the linear
/// functional that weights every position of block `B_j` by `m - j`
/// (`m` = block count). The single-block partition selects every vertex.
pub fn face_of_partition(pts: &OrbitPointSet, osp: &OrderedSetPartition) -> Vec<usize> {
    let m = osp.block_count();
    let mut best: Option<i64> = None;
    let mut argmax = Vec::new();
    for (idx, p) in pts.points().iter().enumerate() {
        let value: i64 = p
            .iter()
            .enumerate()
            .map(|(pos0, &x)| (m - osp.block_of(pos0 + 1)) as i64 * x)
            .sum();
        match best {
            Some(b) if value < b => {}
            Some(b) if value == b => argmax.push(idx),
            _ => {
                best = Some(value);
                argmax.clear();
                argmax.push(idx);
            }
        }
    }
    argmax
}

/// A face as the set of vertices it contains, with its affine dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub dim: usize,
}

/// All nonempty faces of the orbit polytope, deduplicated by vertex set and
/// sorted by (dimension, vertex list). The empty face is not stored; the
/// polytope itself appears as the unique top-dimensional face.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Face>,
    dim: usize,
}

impl FaceLattice {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Face counts by dimension, `f_0..f_d`.
    pub fn f_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.dim + 1];
        for face in &self.faces {
            counts[face.dim] += 1;
        }
        counts
    }

    pub fn f_vector<T: Scalar>(&self) -> FVector<T> {
        FVector::new(self.f_counts().into_iter().map(scalar_from_usize).collect())
            .expect("internal invariant violated: enumerated face counts not polytopal")
    }

    /// Line-oriented dump, one face per line: `dim <d>: v_i1 v_i2 ...`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for face in &self.faces {
            write!(out, "dim {}:", face.dim).unwrap();
            for v in &face.vertices {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub fn enumerate_face_lattice(pts: &OrbitPointSet, guard: &Guard) -> Result<FaceLattice> {
    let n = pts.rank();
    if n > guard.max_lattice_rank {
        return Err(Error::GuardExceeded {
            what: "face-lattice rank",
            requested: n,
            limit: guard.max_lattice_rank,
        });
    }
    let partitions = generate_partitions(n as usize + 1);
    let vertex_sets: HashSet<Vec<usize>> = partitions
        .par_iter()
        .map(|osp| face_of_partition(pts, osp))
        .collect();

    let mut faces: Vec<Face> = vertex_sets
        .into_par_iter()
        .map(|vertices| {
            let dim = affine_dimension(pts, &vertices);
            Face { vertices, dim }
        })
        .collect();
    faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));

    let dim = faces.iter().map(|f| f.dim).max().expect("no faces");
    let top_count = faces.iter().filter(|f| f.dim == dim).count();
    let vertex_count = faces.iter().filter(|f| f.dim == 0).count();
    assert!(
        faces.iter().all(|f| f.dim <= n as usize),
        "face dimension exceeds ambient rank"
    );
    assert_eq!(top_count, 1, "expected a unique top-dimensional face");
    assert_eq!(
        vertex_count,
        pts.len(),
        "every orbit point must appear as a 0-face"
    );
    Ok(FaceLattice { faces, dim })
}

/// Affine dimension of a vertex set: the rank over the rationals of the
/// difference vectors against the first vertex, computed fraction-free
/// over the integers.
fn affine_dimension(pts: &OrbitPointSet, vertices: &[usize]) -> usize {
    let base = &pts.points()[vertices[0]];
    let cols = base.len();
    let mut pivots: Vec<(usize, Vec<i128>)> = Vec::new(); // (leading column, row)
    for &v in &vertices[1..] {
        let mut row: Vec<i128> = pts.points()[v]
            .iter()
            .zip(base)
            .map(|(&a, &b)| (a - b) as i128)
            .collect();
        for (lead, pivot) in &pivots {
            if row[*lead] != 0 {
                let (pl, rl) = (pivot[*lead], row[*lead]);
                for (r, p) in row.iter_mut().zip(pivot) {
                    *r = *r * pl - *p * rl;
                }
                reduce_by_gcd(&mut row);
            }
        }
        if let Some(lead) = row.iter().position(|&x| x != 0) {
            pivots.push((lead, row));
            pivots.sort_by_key(|(lead, _)| *lead);
            if pivots.len() == cols {
                break;
            }
        }
    }
    pivots.len()
}

fn reduce_by_gcd(row: &mut [i128]) {
    let mut g: i128 = 0;
    for &x in row.iter() {
        g = gcd_i128(g, x);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// End-to-end geometric f-vector: canonical weight, orbit, face lattice,
/// counts by dimension. Uses no counting formula anywhere.
pub fn f_vector_geometric<T: Scalar>(j: &SimpleSubset, guard: &Guard) -> Result<FVector<T>> {
    let pts = orbit_points(&canonical_weight(j), guard)?;
    Ok(enumerate_face_lattice(&pts, guard)?.f_vector())
}

/// True when every vertex lies on exactly `d` edges (`d` = polytope
/// dimension). The degenerate 0-dimensional lattice (full stabilizer)
/// reports false, matching the proper-stabilizer convention of the
/// classification.
pub fn is_simple(lat: &FaceLattice) -> bool {
    let d = lat.dim();
    if d == 0 {
        return false;
    }
    let mut edges_at: HashMap<usize, usize> = HashMap::new();
    for face in lat.faces() {
        if face.dim == 1 {
            for &v in &face.vertices {
                *edges_at.entry(v).or_insert(0) += 1;
            }
        }
    }
    lat.faces()
        .iter()
        .filter(|f| f.dim == 0)
        .all(|f| edges_at.get(&f.vertices[0]).copied().unwrap_or(0) == d)
}
