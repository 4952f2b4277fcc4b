//! Isomorph-pruned classification of all spanning caps of PG(r,2).
//!
//! The tree is rooted at the standard frame: every spanning cap contains
//! r+1 independent points, so it is equivalent to a cap containing the
//! frame. At each node the surviving candidate points are partitioned
//! into extension classes (points whose one-point extensions are
//! equivalent); one representative per class is pursued, and each
//! branch drops the points of all strictly earlier classes from its
//! candidate pool, since a cap containing one of them is equivalent to
//! a cap found under an earlier branch.
//!
//! Each node records its cap. Deduplication by canonical form runs
//! unconditionally afterwards, so correctness never rests on the pruning
//! argument; the number of duplicates the pruned tree actually produced
//! is reported as a diagnostic. Completeness flags are always evaluated
//! against the full candidate set of a cap, never the pruned pool.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::codes::{weight_enumerator, WeightEnumerator};
use crate::collineations::{canonical_form, extension_classes_by_form, stabilizer_order};
use crate::geometry::{PointSet, Space};
use crate::Error;

/// A node of the extension tree.
#[derive(Debug, Clone)]
pub struct SearchNode {
    /// The current cap.
    pub cap: PointSet,
    /// Candidates surviving the pruning rule; a subset of
    /// `candidates(cap)`.
    pub cand: PointSet,
    /// 1-based extension-class indices leading here; the cap has
    /// r + 1 + path.len() points.
    pub path: Vec<u32>,
}

/// A cap recorded during the tree walk, before deduplication.
#[derive(Debug, Clone)]
pub struct ClassRecord {
    pub representative: PointSet,
    pub canonical: PointSet,
}

/// One equivalence class of spanning caps.
#[derive(Debug, Clone)]
pub struct CapClass {
    pub size: usize,
    pub complete: bool,
    pub canonical: PointSet,
    /// The class member first reached by the search.
    pub representative: PointSet,
    pub stabilizer_order: u64,
    pub weight_enum: WeightEnumerator,
}

/// The classification of all spanning caps of a space, one record per
/// equivalence class.
#[derive(Debug, Clone)]
pub struct ClassificationTable {
    pub space: Space,
    /// Classes sorted by (size, canonical form).
    pub classes: Vec<CapClass>,
    /// How many duplicate classes the pruned tree emitted before
    /// deduplication.
    pub duplicates_pruned_tree: u64,
}

impl ClassificationTable {
    /// Per-size (complete, incomplete) class counts, derived from the
    /// class list.
    pub fn counts(&self) -> BTreeMap<usize, (u32, u32)> {
        let mut counts: BTreeMap<usize, (u32, u32)> = BTreeMap::new();
        for class in &self.classes {
            let entry = counts.entry(class.size).or_insert((0, 0));
            if class.complete {
                entry.0 += 1;
            } else {
                entry.1 += 1;
            }
        }
        counts
    }

    pub fn classes_of_size(&self, size: usize) -> impl Iterator<Item = &CapClass> {
        self.classes.iter().filter(move |c| c.size == size)
    }
}

/// The root of the tree: the frame with its full candidate set.
pub fn root_node(space: &Space) -> Result<SearchNode, Error> {
    let frame = space.frame();
    Ok(SearchNode {
        cap: frame,
        cand: space.candidates(&frame)?,
        path: Vec::new(),
    })
}

/// The record for a node's own cap.
pub fn node_record(space: &Space, node: &SearchNode) -> Result<ClassRecord, Error> {
    Ok(ClassRecord {
        representative: node.cap,
        canonical: canonical_form(space, &node.cap)?,
    })
}

/// A node's children: one per extension class, the j-th child's candidate
/// pool pruned of all classes before the j-th. Points of the child's own
/// class stay available: a cap may need several of them (in PG(3,2) every
/// 6-cap through the frame adds two points of the same class), so only
/// strictly earlier classes are avoidable. The consumed representative
/// itself drops out as a cap member.
pub fn split_node(space: &Space, node: &SearchNode) -> Result<Vec<SearchNode>, Error> {
    let classes = extension_classes_by_form(space, &node.cap, &node.cand)?;
    let mut surviving = node.cand;
    let mut children = Vec::with_capacity(classes.len());
    for (index, class) in classes.values().enumerate() {
        let rep = class.first().expect("extension classes are nonempty");
        let child_cap = node.cap.with(rep);
        let child_cand = space.candidates(&child_cap)?.intersection(&surviving);
        surviving = surviving.difference(class);
        let mut path = node.path.clone();
        path.push(index as u32 + 1);
        children.push(SearchNode {
            cap: child_cap,
            cand: child_cand,
            path,
        });
    }
    Ok(children)
}

/// Walks the subtree under `node` (children recorded before their own
/// subtrees), appending one record per node visited.
pub fn extend(space: &Space, node: &SearchNode, sink: &mut Vec<ClassRecord>) -> Result<(), Error> {
    for child in split_node(space, node)? {
        sink.push(node_record(space, &child)?);
        extend(space, &child, sink)?;
    }
    Ok(())
}

/// Classifies all spanning caps of the space, sizes r+1 and up.
pub fn classify(space: &Space) -> Result<ClassificationTable, Error> {
    let root = root_node(space)?;
    let mut records = Vec::new();
    records.push(node_record(space, &root)?);
    extend(space, &root, &mut records)?;
    finalize(space, records)
}

/// Deduplicates records by canonical form (keeping each class's first
/// discovery), computes per-class completeness, stabilizer and weight
/// enumerator, and assembles the sorted table.
pub fn finalize(space: &Space, records: Vec<ClassRecord>) -> Result<ClassificationTable, Error> {
    let mut seen: BTreeMap<PointSet, PointSet> = BTreeMap::new();
    let mut duplicates = 0u64;
    for record in records {
        match seen.entry(record.canonical) {
            Entry::Occupied(_) => duplicates += 1,
            Entry::Vacant(slot) => {
                slot.insert(record.representative);
            }
        }
    }
    let mut classes = Vec::with_capacity(seen.len());
    for (canonical, representative) in seen {
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
        duplicates_pruned_tree: duplicates,
    })
}

/// Re-checks every class record from first principles: representative is
/// a spanning cap, flags and invariants match, canonical forms are
/// pairwise distinct.
pub fn validate(table: &ClassificationTable) -> Result<(), Error> {
    let space = &table.space;
    let mut last: Option<&CapClass> = None;
    for class in &table.classes {
        if let Some(line) = space.collinear_triple(&class.representative) {
            return Err(Error::NotACap { line });
        }
        let rank = space.rank(&class.representative);
        if rank != space.dim() {
            return Err(Error::NotSpanning {
                rank,
                required: space.dim(),
            });
        }
        if class.size != class.representative.len() {
            return Err(Error::InvariantViolation {
                what: "size mismatch",
            });
        }
        if class.complete != space.is_complete(&class.representative)? {
            return Err(Error::InvariantViolation {
                what: "completeness flag mismatch",
            });
        }
        if class.canonical != canonical_form(space, &class.representative)? {
            return Err(Error::InvariantViolation {
                what: "canonical form mismatch",
            });
        }
        if class.stabilizer_order != stabilizer_order(space, &class.representative)?
            || space.group_order() % class.stabilizer_order != 0
        {
            return Err(Error::InvariantViolation {
                what: "stabilizer order mismatch",
            });
        }
        if class.weight_enum != weight_enumerator(space, &class.representative) {
            return Err(Error::InvariantViolation {
                what: "weight enumerator mismatch",
            });
        }
        if let Some(prev) = last {
            if (prev.size, prev.canonical) >= (class.size, class.canonical) {
                return Err(Error::InvariantViolation {
                    what: "classes out of order",
                });
            }
        }
        last = Some(class);
    }
    Ok(())
}
