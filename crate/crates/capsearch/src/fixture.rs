//! Bundled reference data: the published classification tables for
//! PG(3,2) and PG(4,2) and the 27 representative caps of PG(4,2) with
//! their stabilizer orders and weight enumerators.
//!
//! Caps are stored verbatim as the column encodings of the published
//! generator matrices, in print order, so any fixture mismatch is
//! traceable to the source tables. One stabilizer entry is printed as
//! 1334 there; 1334 = 2·23·29 does not divide |GL(5,2)| = 9,999,360, so
//! it cannot be a subgroup order. That entry is marked discrepant rather
//! than silently corrected: the verifier recomputes the order and
//! reports the mismatch as a warning.

use capsearch_core::{PointSet, Space};

/// One row of the published PG(4,2) cap list.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceCap {
    /// `size.index` within the published list, e.g. `"9.1"`.
    pub id: &'static str,
    pub size: usize,
    pub complete: bool,
    /// Column encodings of the published matrix, in print order.
    pub points: &'static [u32],
    pub weight_enumerator: &'static str,
    /// Stabilizer order as published.
    pub stabilizer: u64,
    /// True when the published order cannot be a subgroup order.
    pub stabilizer_discrepant: bool,
}

impl ReferenceCap {
    pub fn point_set(&self, space: &Space) -> PointSet {
        self.points
            .iter()
            .map(|&e| space.point(e).expect("fixture points are valid"))
            .collect()
    }
}

/// Published per-size (size, complete, incomplete) counts for PG(3,2),
/// sizes 5..=8.
pub const TABLE_PG32: &[(usize, u32, u32)] = &[(5, 1, 1), (6, 0, 1), (7, 0, 1), (8, 1, 0)];

/// Published per-size (size, complete, incomplete) counts for PG(4,2),
/// sizes 6..=16.
pub const TABLE_PG42: &[(usize, u32, u32)] = &[
    (6, 0, 3),
    (7, 0, 3),
    (8, 0, 4),
    (9, 1, 4),
    (10, 1, 3),
    (11, 0, 2),
    (12, 0, 2),
    (13, 0, 1),
    (14, 0, 1),
    (15, 0, 1),
    (16, 1, 0),
];

/// The published counts for a space, if a table exists.
pub fn reference_counts(space: &Space) -> Option<&'static [(usize, u32, u32)]> {
    match space.r() {
        3 => Some(TABLE_PG32),
        4 => Some(TABLE_PG42),
        _ => None,
    }
}

/// The 27 published representative caps of PG(4,2).
pub const REFERENCE_PG42: &[ReferenceCap] = &[
    ReferenceCap {
        id: "6.1",
        size: 6,
        complete: false,
        points: &[1, 2, 4, 8, 16, 31],
        weight_enumerator: "2^{15}4^{15}6^{1}",
        stabilizer: 720,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "6.2",
        size: 6,
        complete: false,
        points: &[1, 2, 4, 8, 29, 16],
        weight_enumerator: "1^{1}2^{10}3^{10}4^{5}5^{5}",
        stabilizer: 120,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "6.3",
        size: 6,
        complete: false,
        points: &[1, 2, 4, 8, 16, 13],
        weight_enumerator: "1^{2}2^{7}3^{12}4^{7}5^{2}6^{1}",
        stabilizer: 48,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "7.1",
        size: 7,
        complete: false,
        points: &[1, 2, 4, 8, 16, 13, 26],
        weight_enumerator: "2^{6}3^{9}4^{9}5^{6}7^{1}",
        stabilizer: 72,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "7.2",
        size: 7,
        complete: false,
        points: &[1, 2, 4, 8, 16, 27, 13],
        weight_enumerator: "2^{5}3^{12}4^{7}5^{4}6^{3}",
        stabilizer: 48,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "7.3",
        size: 7,
        complete: false,
        points: &[1, 7, 2, 4, 8, 16, 13],
        weight_enumerator: "1^{1}2^{3}3^{11}4^{11}5^{3}6^{1}7^{1}",
        stabilizer: 48,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "8.1",
        size: 8,
        complete: false,
        points: &[1, 7, 21, 2, 4, 8, 16, 13],
        weight_enumerator: "2^{4}4^{22}6^{4}8^{1}",
        stabilizer: 384,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "8.2",
        size: 8,
        complete: false,
        points: &[1, 7, 2, 14, 4, 8, 16, 13],
        weight_enumerator: "1^{1}3^{7}4^{14}5^{7}7^{1}8^{1}",
        stabilizer: 168,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "8.3",
        size: 8,
        complete: false,
        points: &[1, 7, 2, 4, 8, 16, 27, 13],
        weight_enumerator: "2^{1}3^{10}4^{11}5^{4}6^{3}7^{2}",
        stabilizer: 48,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "8.4",
        size: 8,
        complete: false,
        points: &[1, 7, 2, 4, 8, 16, 13, 26],
        weight_enumerator: "2^{2}3^{8}4^{10}5^{8}6^{2}8^{1}",
        stabilizer: 32,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "9.1",
        size: 9,
        complete: false,
        points: &[1, 7, 2, 14, 4, 8, 16, 11, 13],
        weight_enumerator: "1^{1}4^{14}5^{14}8^{1}9^{1}",
        stabilizer: 1334,
        stabilizer_discrepant: true,
    },
    ReferenceCap {
        id: "9.2",
        size: 9,
        complete: false,
        points: &[1, 21, 7, 2, 4, 8, 16, 27, 13],
        weight_enumerator: "3^{4}4^{14}5^{8}7^{4}8^{1}",
        stabilizer: 192,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "9.3",
        size: 9,
        complete: false,
        points: &[1, 7, 2, 4, 28, 8, 16, 13, 26],
        weight_enumerator: "3^{6}4^{9}5^{9}6^{6}9^{1}",
        stabilizer: 72,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "9.4",
        size: 9,
        complete: false,
        points: &[1, 21, 7, 2, 4, 8, 16, 13, 26],
        weight_enumerator: "2^{1}3^{3}4^{11}5^{11}6^{3}7^{1}9^{1}",
        stabilizer: 48,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "9.5",
        size: 9,
        complete: true,
        points: &[1, 7, 2, 14, 4, 8, 16, 27, 13],
        weight_enumerator: "2^{1}4^{21}6^{7}8^{2}",
        stabilizer: 336,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "10.1",
        size: 10,
        complete: false,
        points: &[1, 7, 2, 4, 28, 8, 16, 19, 13, 26],
        weight_enumerator: "4^{15}6^{15}10^{1}",
        stabilizer: 720,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "10.2",
        size: 10,
        complete: false,
        points: &[1, 2, 4, 8, 16, 21, 13, 26, 7, 31],
        weight_enumerator: "2^{1}4^{6}5^{16}6^{6}8^{1}10^{1}",
        stabilizer: 384,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "10.3",
        size: 10,
        complete: false,
        points: &[1, 2, 4, 8, 16, 13, 26, 7, 14, 28],
        weight_enumerator: "3^{2}4^{7}5^{12}6^{7}7^{2}10^{1}",
        stabilizer: 48,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "10.4",
        size: 10,
        complete: true,
        points: &[27, 1, 2, 4, 8, 16, 21, 30, 13, 7],
        weight_enumerator: "4^{10}5^{16}8^{5}",
        stabilizer: 1920,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "11.1",
        size: 11,
        complete: false,
        points: &[1, 2, 4, 8, 16, 21, 13, 26, 7, 14, 31],
        weight_enumerator: "3^{1}4^{2}5^{12}6^{12}7^{2}8^{1}11^{1}",
        stabilizer: 192,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "11.2",
        size: 11,
        complete: false,
        points: &[1, 19, 2, 4, 8, 16, 13, 26, 7, 14, 28],
        weight_enumerator: "4^{5}5^{10}6^{10}7^{5}11^{1}",
        stabilizer: 120,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "12.1",
        size: 12,
        complete: false,
        points: &[1, 2, 4, 8, 16, 21, 13, 26, 11, 7, 14, 31],
        weight_enumerator: "4^{3}6^{24}8^{3}12^{1}",
        stabilizer: 2304,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "12.2",
        size: 12,
        complete: false,
        points: &[1, 19, 2, 4, 8, 16, 13, 26, 7, 14, 28, 31],
        weight_enumerator: "4^{1}5^{8}6^{12}7^{8}8^{1}12^{1}",
        stabilizer: 192,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "13.1",
        size: 13,
        complete: false,
        points: &[1, 2, 4, 8, 16, 21, 13, 26, 11, 7, 14, 28, 31],
        weight_enumerator: "5^{3}6^{12}7^{12}8^{3}13^{1}",
        stabilizer: 576,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "14.1",
        size: 14,
        complete: false,
        points: &[1, 19, 2, 4, 8, 16, 21, 13, 26, 11, 7, 14, 28, 31],
        weight_enumerator: "6^{7}7^{16}8^{7}14^{1}",
        stabilizer: 2688,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "15.1",
        size: 15,
        complete: false,
        points: &[1, 19, 2, 4, 8, 16, 21, 13, 25, 26, 11, 7, 14, 28, 31],
        weight_enumerator: "7^{15}8^{15}15^{1}",
        stabilizer: 20160,
        stabilizer_discrepant: false,
    },
    ReferenceCap {
        id: "16.1",
        size: 16,
        complete: true,
        points: &[1, 19, 2, 4, 8, 16, 21, 13, 25, 26, 11, 7, 22, 14, 28, 31],
        weight_enumerator: "8^{30}16^{1}",
        stabilizer: 322560,
        stabilizer_discrepant: false,
    },
];
