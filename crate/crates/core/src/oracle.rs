//! Independent brute-force verification of the classification.
//!
//! Two deliberately plain instruments, sharing only the geometry
//! primitives with the search engine:
//!
//! * [`brute_classify`]: full orbit classification by subset
//!   enumeration, feasible for r <= 3 (at most 2^15 subsets);
//! * [`count_labeled_spanning_caps`]: a group-theory-free DFS counting
//!   every labeled spanning cap exactly once, feasible through r = 4.
//!
//! [`mass_check`] ties them together via orbit–stabilizer: for each size,
//! the sum of `|GL(r+1,2)| / |stabilizer|` over classes must equal the
//! labeled count. A classification that misses or double-counts a class
//! cannot pass.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::codes::weight_enumerator;
use crate::collineations::{canonical_form, stabilizer_order};
use crate::geometry::{Point, PointSet, Space};
use crate::linalg;
use crate::search::{CapClass, ClassificationTable};
use crate::Error;

/// Classifies all spanning caps of a small space by enumerating every
/// subset of the point universe. No tree, no pruning; algorithmically
/// independent of [`crate::search::classify`].
pub fn brute_classify(space: &Space) -> Result<ClassificationTable, Error> {
    if space.r() > 3 {
        return Err(Error::UnsupportedDimension { r: space.r() });
    }
    let num_points = space.num_points();
    let mut reps: BTreeMap<PointSet, PointSet> = BTreeMap::new();
    for bits in 1u32..1 << num_points {
        let s = PointSet::from_mask(bits << 1);
        if !space.spans(&s) || !space.is_cap(&s) {
            continue;
        }
        let form = canonical_form(space, &s)?;
        reps.entry(form).or_insert(s);
    }
    let mut classes = Vec::with_capacity(reps.len());
    for (canonical, representative) in reps {
        classes.push(CapClass {
            size: representative.len(),
            complete: space.is_complete(&representative)?,
            canonical,
            representative,
            stabilizer_order: stabilizer_order(space, &representative)?,
            weight_enum: weight_enumerator(space, &representative),
        });
    }
    classes.sort_by(|a, b| a.size.cmp(&b.size).then(a.canonical.cmp(&b.canonical)));
    Ok(ClassificationTable {
        space: *space,
        classes,
        duplicates_pruned_tree: 0,
    })
}

/// Counts labeled (not up-to-equivalence) spanning caps by size, via DFS
/// in ascending point order: each cap extends only by candidate points
/// beyond its current maximum, so every cap is visited exactly once. Uses
/// no group theory.
pub fn count_labeled_spanning_caps(space: &Space, up_to_size: usize) -> BTreeMap<usize, u64> {
    let order: Vec<Point> = space.points().collect();
    count_labeled_spanning_caps_ordered(space, &order, up_to_size)
}

/// As [`count_labeled_spanning_caps`], visiting points in the given
/// order. The counts are independent of the order; exposed for exactly
/// that spot-check.
pub fn count_labeled_spanning_caps_ordered(
    space: &Space,
    order: &[Point],
    up_to_size: usize,
) -> BTreeMap<usize, u64> {
    debug_assert_eq!(order.len(), space.num_points() as usize);
    let mut counts = BTreeMap::new();
    if up_to_size == 0 {
        return counts;
    }
    let mut tallies = [0u64; 32];
    dfs(
        space,
        order,
        0,
        PointSet::empty(),
        PointSet::empty(),
        [0u8; 8],
        0,
        up_to_size,
        &mut tallies,
    );
    for (size, &n) in tallies.iter().enumerate() {
        if n > 0 {
            counts.insert(size, n);
        }
    }
    counts
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    space: &Space,
    order: &[Point],
    start: usize,
    cap: PointSet,
    covered: PointSet,
    basis: [u8; 8],
    rank: u32,
    up_to_size: usize,
    tallies: &mut [u64; 32],
) {
    for (pos, &p) in order.iter().enumerate().skip(start) {
        if covered.contains(p) {
            continue;
        }
        let next_cap = cap.with(p);
        // new secants all pass through p
        let mut next_covered = covered.with(p);
        for q in cap.iter() {
            next_covered.insert(Point(q.0 ^ p.0));
        }
        let mut next_basis = basis;
        let next_rank = if linalg::reduce_and_insert(&mut next_basis, p.0) {
            rank + 1
        } else {
            rank
        };
        if next_rank == space.dim() {
            tallies[next_cap.len()] += 1;
        }
        if next_cap.len() < up_to_size {
            dfs(
                space,
                order,
                pos + 1,
                next_cap,
                next_covered,
                next_basis,
                next_rank,
                up_to_size,
                tallies,
            );
        }
    }
}

/// One size row of the orbit–stabilizer mass check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MassRow {
    pub size: usize,
    /// Sum over classes of this size of group_order / stabilizer_order.
    pub orbit_sum: u64,
    /// Independently counted labeled spanning caps of this size.
    pub labeled: u64,
}

impl MassRow {
    pub fn passed(&self) -> bool {
        self.orbit_sum == self.labeled
    }

    pub fn discrepancy(&self) -> i64 {
        self.orbit_sum as i64 - self.labeled as i64
    }
}

/// Orbit–stabilizer report over all sizes of a classification.
#[derive(Debug, Clone)]
pub struct MassReport {
    pub rows: Vec<MassRow>,
}

impl MassReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(MassRow::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &MassRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

/// Checks, for every size appearing in the table or the counts, that the
/// table's stabilizers account for exactly the labeled caps counted by
/// the DFS.
pub fn mass_check(
    space: &Space,
    table: &ClassificationTable,
    labeled: &BTreeMap<usize, u64>,
) -> MassReport {
    let group_order = space.group_order();
    let mut orbit_sums: BTreeMap<usize, u64> = BTreeMap::new();
    for class in &table.classes {
        *orbit_sums.entry(class.size).or_insert(0) += group_order / class.stabilizer_order;
    }
    let mut sizes: Vec<usize> = orbit_sums.keys().chain(labeled.keys()).copied().collect();
    sizes.sort_unstable();
    sizes.dedup();
    let rows = sizes
        .into_iter()
        .map(|size| MassRow {
            size,
            orbit_sum: orbit_sums.get(&size).copied().unwrap_or(0),
            labeled: labeled.get(&size).copied().unwrap_or(0),
        })
        .collect();
    MassReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search;

    fn pg(r: u32) -> Space {
        Space::new(r).unwrap()
    }

    #[test]
    fn fano_brute_classification() {
        let table = brute_classify(&pg(2)).unwrap();
        let counts = table.counts();
        assert_eq!(counts[&3], (0, 1));
        assert_eq!(counts[&4], (1, 0));
        assert_eq!(table.classes.len(), 2);
    }

    #[test]
    fn brute_rejects_large_spaces() {
        assert!(matches!(
            brute_classify(&pg(4)),
            Err(Error::UnsupportedDimension { r: 4 })
        ));
    }

    #[test]
    fn labeled_counts_in_small_spaces() {
        let counts = count_labeled_spanning_caps(&pg(2), 7);
        assert_eq!(counts.get(&3), Some(&28));
        assert_eq!(counts.get(&4), Some(&7));
        assert_eq!(counts.get(&5), None);

        let counts = count_labeled_spanning_caps(&pg(3), 15);
        assert_eq!(counts.get(&8), Some(&15));
        assert_eq!(counts.get(&9), None);
    }

    #[test]
    fn labeled_counts_respect_size_limit() {
        let counts = count_labeled_spanning_caps(&pg(2), 3);
        assert_eq!(counts.get(&3), Some(&28));
        assert_eq!(counts.get(&4), None);
    }

    #[test]
    fn mass_check_passes_for_fano() {
        let space = pg(2);
        let table = search::classify(&space).unwrap();
        let labeled = count_labeled_spanning_caps(&space, 7);
        let report = mass_check(&space, &table, &labeled);
        assert!(report.passed());
        // 168/6 = 28 triangles, 168/24 = 7 hyperovals
        assert_eq!(
            report.rows[0],
            MassRow {
                size: 3,
                orbit_sum: 28,
                labeled: 28
            }
        );
        assert_eq!(
            report.rows[1],
            MassRow {
                size: 4,
                orbit_sum: 7,
                labeled: 7
            }
        );
    }

    #[test]
    fn mass_check_flags_corruption() {
        let space = pg(2);
        let mut table = search::classify(&space).unwrap();
        let labeled = count_labeled_spanning_caps(&space, 7);
        table.classes[0].stabilizer_order = 3;
        let report = mass_check(&space, &table, &labeled);
        assert!(!report.passed());
        assert!(report.failures().next().unwrap().discrepancy() != 0);
    }
}
