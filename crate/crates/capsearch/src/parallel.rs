//! Threaded classification driver.
//!
//! The top-level extension classes of the frame give independent
//! subtrees; workers explore disjoint subsets of them and the record
//! streams are merged back in subtree order, so the final table is
//! byte-identical to the single-threaded one for any thread count.

use std::sync::mpsc;
use std::thread;

use capsearch_core::search::{self, ClassRecord, ClassificationTable, SearchNode};
use capsearch_core::{Error, Space};

/// Records a node and its whole subtree, in DFS order.
fn explore(space: &Space, node: &SearchNode) -> Result<Vec<ClassRecord>, Error> {
    let mut records = vec![search::node_record(space, node)?];
    search::extend(space, node, &mut records)?;
    Ok(records)
}

/// Classifies all spanning caps using up to `threads` workers. Results
/// are identical to [`search::classify`] regardless of the thread count.
pub fn classify_with_threads(space: &Space, threads: usize) -> Result<ClassificationTable, Error> {
    let root = search::root_node(space)?;
    let subtrees = search::split_node(space, &root)?;
    let workers = threads.max(1).min(subtrees.len().max(1));
    let mut records = vec![search::node_record(space, &root)?];

    if workers <= 1 {
        for node in &subtrees {
            records.extend(explore(space, node)?);
        }
        return search::finalize(space, records);
    }

    let (tx, rx) = mpsc::channel();
    thread::scope(|scope| {
        for worker in 0..workers {
            let tx = tx.clone();
            let nodes: Vec<(usize, &SearchNode)> = subtrees
                .iter()
                .enumerate()
                .filter(|(i, _)| i % workers == worker)
                .collect();
            scope.spawn(move || {
                for (index, node) in nodes {
                    let _ = tx.send((index, explore(space, node)));
                }
            });
        }
    });
    drop(tx);

    // merge in subtree order so the record stream matches a
    // single-threaded walk
    let mut collected: Vec<(usize, Result<Vec<ClassRecord>, Error>)> = rx.into_iter().collect();
    collected.sort_by_key(|(index, _)| *index);
    debug_assert_eq!(collected.len(), subtrees.len());
    for (_, result) in collected {
        records.extend(result?);
    }
    search::finalize(space, records)
}
