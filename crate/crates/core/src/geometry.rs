//! Points, caps and secant structure of PG(r,2).
//!
//! A point of PG(r,2) is a nonzero vector of GF(2)^(r+1), encoded as an
//! integer in `1..=2^(r+1)-1` with bit `i-1` holding coordinate `x_i`.
//! Three points are collinear exactly when they XOR to zero, so the third
//! point of the line through `p` and `q` is `p ^ q`. Point sets are `u32`
//! bitmasks (bit `p` set iff point `p` is a member; bit 0 never set),
//! which keeps every operation here branch-light and allocation-free.

use core::fmt;

use crate::linalg;
use crate::Error;

/// The binary projective space PG(r,2), 2 <= r <= 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Space {
    r: u32,
}

impl Space {
    pub fn new(r: u32) -> Result<Space, Error> {
        if (2..=4).contains(&r) {
            Ok(Space { r })
        } else {
            Err(Error::UnsupportedDimension { r })
        }
    }

    /// Projective dimension r.
    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Vector-space dimension d = r + 1.
    #[inline]
    pub fn dim(&self) -> u32 {
        self.r + 1
    }

    /// Number of points, 2^(r+1) - 1 (7, 15, 31 for r = 2, 3, 4).
    #[inline]
    pub fn num_points(&self) -> u32 {
        (1 << self.dim()) - 1
    }

    /// Order of GL(r+1,2): product of 2^d - 2^i over i = 0..d.
    pub fn group_order(&self) -> u64 {
        let d = self.dim();
        (0..d).map(|i| (1u64 << d) - (1u64 << i)).product()
    }

    pub fn point(&self, encoding: u32) -> Result<Point, Error> {
        if encoding >= 1 && encoding <= self.num_points() {
            Ok(Point(encoding as u8))
        } else {
            Err(Error::PointOutOfRange { encoding })
        }
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        (p.0 as u32) <= self.num_points()
    }

    /// All points, ascending by encoding.
    pub fn points(&self) -> impl Iterator<Item = Point> {
        (1..=self.num_points()).map(|e| Point(e as u8))
    }

    /// The set of all points.
    pub fn universe(&self) -> PointSet {
        PointSet {
            mask: ((1u64 << (self.num_points() + 1)) - 2) as u32,
        }
    }

    /// The standard frame: the r+1 basis points e_1, ..., e_{r+1}.
    pub fn frame(&self) -> PointSet {
        let mut s = PointSet::empty();
        for i in 0..self.dim() {
            s.insert(Point(1 << i));
        }
        s
    }

    /// The unique third point on the line through two distinct points.
    pub fn third_point(&self, p: Point, q: Point) -> Result<Point, Error> {
        debug_assert!(self.contains(p) && self.contains(q));
        if p == q {
            return Err(Error::IdenticalPoints { point: p });
        }
        Ok(Point(p.0 ^ q.0))
    }

    /// Some collinear triple inside `s`, if one exists.
    pub fn collinear_triple(&self, s: &PointSet) -> Option<[Point; 3]> {
        let pts = s.mask;
        let mut rest_p = pts;
        while rest_p != 0 {
            let p = rest_p.trailing_zeros() as u8;
            rest_p &= rest_p - 1;
            let mut rest_q = rest_p;
            while rest_q != 0 {
                let q = rest_q.trailing_zeros() as u8;
                rest_q &= rest_q - 1;
                let third = p ^ q;
                if pts & (1 << third) != 0 {
                    let mut line = [p, q, third];
                    line.sort_unstable();
                    return Some(line.map(Point));
                }
            }
        }
        None
    }

    /// True iff no three points of `s` are collinear. Sets of size <= 2
    /// are caps.
    pub fn is_cap(&self, s: &PointSet) -> bool {
        self.collinear_triple(s).is_none()
    }

    /// `s` together with the third point of every 2-secant of `s`.
    pub fn covered_points(&self, s: &PointSet) -> PointSet {
        let mut covered = s.mask;
        let mut rest_p = s.mask;
        while rest_p != 0 {
            let p = rest_p.trailing_zeros() as u8;
            rest_p &= rest_p - 1;
            let mut rest_q = rest_p;
            while rest_q != 0 {
                let q = rest_q.trailing_zeros() as u8;
                rest_q &= rest_q - 1;
                covered |= 1 << (p ^ q);
            }
        }
        PointSet { mask: covered }
    }

    /// Points on no 2-secant of the cap `s` and not in `s`: exactly the
    /// points that extend `s` to a larger cap.
    pub fn candidates(&self, s: &PointSet) -> Result<PointSet, Error> {
        if let Some(line) = self.collinear_triple(s) {
            return Err(Error::NotACap { line });
        }
        Ok(PointSet {
            mask: self.universe().mask & !self.covered_points(s).mask,
        })
    }

    /// True iff the cap `s` is contained in no larger cap.
    pub fn is_complete(&self, s: &PointSet) -> Result<bool, Error> {
        Ok(self.candidates(s)?.is_empty())
    }

    /// GF(2) linear rank of the coordinate vectors of `s`.
    pub fn rank(&self, s: &PointSet) -> u32 {
        linalg::rank(s.iter().map(|p| p.0))
    }

    /// True iff `s` has full rank r+1.
    pub fn spans(&self, s: &PointSet) -> bool {
        self.rank(s) == self.dim()
    }
}

/// A point, by its nonzero coordinate encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub(crate) u8);

impl Point {
    #[inline]
    pub fn encoding(&self) -> u32 {
        self.0 as u32
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of points as a bitmask; doubles as "cap" when the cap invariant
/// holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet {
    mask: u32,
}

impl PointSet {
    pub const fn empty() -> PointSet {
        PointSet { mask: 0 }
    }

    /// Builds a set from a raw mask; bit 0 is ignored.
    pub fn from_mask(mask: u32) -> PointSet {
        PointSet { mask: mask & !1 }
    }

    pub fn from_points(points: impl IntoIterator<Item = Point>) -> PointSet {
        let mut s = PointSet::empty();
        for p in points {
            s.insert(p);
        }
        s
    }

    #[inline]
    pub fn mask(&self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        self.mask & (1 << p.0) != 0
    }

    pub fn insert(&mut self, p: Point) {
        self.mask |= 1 << p.0;
    }

    pub fn remove(&mut self, p: Point) {
        self.mask &= !(1 << p.0);
    }

    /// A copy of the set with `p` added.
    pub fn with(&self, p: Point) -> PointSet {
        PointSet {
            mask: self.mask | (1 << p.0),
        }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        PointSet {
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        PointSet {
            mask: self.mask & other.mask,
        }
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        PointSet {
            mask: self.mask & !other.mask,
        }
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.mask & !other.mask == 0
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<Point> {
        if self.mask == 0 {
            None
        } else {
            Some(Point(self.mask.trailing_zeros() as u8))
        }
    }

    /// Members in ascending encoding order.
    pub fn iter(&self) -> Iter {
        Iter { rest: self.mask }
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<T: IntoIterator<Item = Point>>(iter: T) -> Self {
        PointSet::from_points(iter)
    }
}

impl IntoIterator for &PointSet {
    type Item = Point;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter {
    rest: u32,
}

impl Iterator for Iter {
    type Item = Point;
    fn next(&mut self) -> Option<Point> {
        if self.rest == 0 {
            return None;
        }
        let p = self.rest.trailing_zeros() as u8;
        self.rest &= self.rest - 1;
        Some(Point(p))
    }
}

/// Sets compare by their sorted encoding lists, lexicographically; the
/// order canonical forms are minimized and listed in. The set holding the
/// smallest differing element is smaller; a strict prefix is smaller than
/// its extensions.
impl Ord for PointSet {
    fn cmp(&self, other: &PointSet) -> core::cmp::Ordering {
        use core::cmp::Ordering;
        let diff = self.mask ^ other.mask;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        if self.mask & low != 0 {
            if other.mask & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.mask & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &PointSet) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
