//! The collineation group of PG(r,2) and projective equivalence of caps.
//!
//! Over GF(2) there are no nontrivial field automorphisms and no scalars,
//! so the collineation group is exactly GL(r+1,2) acting linearly on
//! point encodings.
//!
//! Equivalence machinery rests on one device: for an ordered tuple `t` of
//! r+1 independent points of a set `s` there is a unique map `h_t` with
//! `h_t(t_i) = e_i`, and every image `h_t(s)` contains the frame. The
//! multiset `{ h_t(s) : t }` meets each orbit of `s` in the same way, so
//!
//! * the minimum image over all tuples is a canonical form,
//! * the number of tuples reproducing a fixed reference image is the
//!   order of the setwise stabilizer,
//! * two spanning caps are equivalent iff some tuple of one maps a fixed
//!   tuple of the other onto it.
//!
//! Tuples are enumerated by a DFS that extends the partial linear map
//! over the growing span, which costs O(2^d) per completed tuple instead
//! of a matrix inversion each.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::geometry::{Point, PointSet, Space};
use crate::linalg::{self, Cols, MAX_DIM};
use crate::Error;

/// An element of GL(r+1,2): column `j` is the image of basis vector
/// `e_{j+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collineation {
    d: u32,
    cols: Cols,
}

impl Collineation {
    pub fn identity(space: &Space) -> Collineation {
        let mut cols = [0u8; MAX_DIM];
        for j in 0..space.dim() as usize {
            cols[j] = 1 << j;
        }
        Collineation {
            d: space.dim(),
            cols,
        }
    }

    /// Builds a collineation from its r+1 column encodings, rejecting
    /// singular matrices.
    pub fn from_columns(space: &Space, columns: &[Point]) -> Result<Collineation, Error> {
        let d = space.dim();
        if columns.len() != d as usize {
            return Err(Error::DependentTuple);
        }
        let rank = linalg::rank(columns.iter().map(|p| p.0));
        if rank != d {
            return Err(Error::DependentTuple);
        }
        let mut cols = [0u8; MAX_DIM];
        for (j, p) in columns.iter().enumerate() {
            cols[j] = p.0;
        }
        Ok(Collineation { d, cols })
    }

    pub fn columns(&self) -> impl Iterator<Item = Point> + '_ {
        self.cols[..self.d as usize].iter().map(|&c| Point(c))
    }

    /// Linear image of a point: XOR of the columns selected by its bits.
    #[inline]
    pub fn apply(&self, p: Point) -> Point {
        Point(linalg::mat_vec(&self.cols, p.0))
    }

    /// Pointwise image of a set; preserves cardinality and the cap
    /// property.
    pub fn apply_set(&self, s: &PointSet) -> PointSet {
        s.iter().map(|p| self.apply(p)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Collineation) -> Collineation {
        debug_assert_eq!(self.d, other.d);
        Collineation {
            d: self.d,
            cols: linalg::mat_mul(&self.cols, &other.cols, self.d as usize),
        }
    }

    pub fn inverse(&self) -> Collineation {
        let cols = linalg::invert(&self.cols, self.d as usize)
            .expect("collineations are invertible by construction");
        Collineation { d: self.d, cols }
    }
}

/// An ordered tuple of r+1 linearly independent points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameTuple {
    d: u32,
    pts: [u8; MAX_DIM],
}

impl FrameTuple {
    pub fn new(space: &Space, points: &[Point]) -> Result<FrameTuple, Error> {
        let d = space.dim();
        if points.len() != d as usize || linalg::rank(points.iter().map(|p| p.0)) != d {
            return Err(Error::DependentTuple);
        }
        let mut pts = [0u8; MAX_DIM];
        for (i, p) in points.iter().enumerate() {
            pts[i] = p.0;
        }
        Ok(FrameTuple { d, pts })
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.pts[..self.d as usize].iter().map(|&p| Point(p))
    }

    /// The lexicographically first independent tuple inside a spanning
    /// set: greedy scan in ascending encoding order.
    pub fn first_in(space: &Space, s: &PointSet) -> Result<FrameTuple, Error> {
        let d = space.dim();
        let mut basis = [0u8; 8];
        let mut pts = [0u8; MAX_DIM];
        let mut len = 0usize;
        for p in s.iter() {
            if linalg::reduce_and_insert(&mut basis, p.0) {
                pts[len] = p.0;
                len += 1;
                if len == d as usize {
                    return Ok(FrameTuple { d, pts });
                }
            }
        }
        Err(Error::NotSpanning {
            rank: len as u32,
            required: d,
        })
    }
}

/// The unique collineation sending `t_i` to `e_i` for all i: the inverse
/// of the matrix whose columns are the tuple points.
pub fn frame_map(space: &Space, t: &FrameTuple) -> Collineation {
    let d = space.dim();
    debug_assert_eq!(t.d, d);
    let cols = linalg::invert(&t.pts, d as usize).expect("frame tuples are independent");
    Collineation { d, cols }
}

fn require_spanning(space: &Space, s: &PointSet) -> Result<(), Error> {
    let rank = space.rank(s);
    if rank != space.dim() {
        return Err(Error::NotSpanning {
            rank,
            required: space.dim(),
        });
    }
    Ok(())
}

/// Per-tuple context handed to [`scan_tuples`] visitors: the chosen tuple
/// and the completed image table of the whole space.
struct TupleImages<'a> {
    tuple: &'a [u8],
    img: &'a [u8; 32],
}

impl TupleImages<'_> {
    /// Image of `s` under the frame map of this tuple, as a mask.
    #[inline]
    fn image_mask(&self, s: &PointSet) -> u32 {
        let mut m = 0u32;
        for p in s.iter() {
            m |= 1 << self.img[p.0 as usize];
        }
        m
    }
}

/// Enumerates every ordered independent d-tuple of `src` in ascending DFS
/// order, maintaining the full image table of the frame map `h_t`
/// incrementally over the span of the chosen prefix. The visitor may
/// return `false` to stop the enumeration early.
fn scan_tuples(space: &Space, src: &PointSet, visit: &mut impl FnMut(&TupleImages) -> bool) {
    let d = space.dim() as usize;
    let pts: Vec<u8> = src.iter().map(|p| p.0).collect();
    let mut img = [0u8; 32];
    let mut tuple = [0u8; MAX_DIM];

    fn rec(
        level: usize,
        d: usize,
        span: u32,
        pts: &[u8],
        img: &mut [u8; 32],
        tuple: &mut [u8; MAX_DIM],
        visit: &mut impl FnMut(&TupleImages) -> bool,
    ) -> bool {
        let basis_bit = 1u8 << level;
        for &v in pts {
            if span & (1 << v) != 0 {
                continue;
            }
            tuple[level] = v;
            img[v as usize] = basis_bit;
            let mut new_span = span | (1u32 << v);
            let mut rest = span;
            while rest != 0 {
                let x = rest.trailing_zeros() as u8;
                rest &= rest - 1;
                let y = x ^ v;
                img[y as usize] = img[x as usize] ^ basis_bit;
                new_span |= 1u32 << y;
            }
            let keep_going = if level + 1 == d {
                visit(&TupleImages {
                    tuple: &tuple[..d],
                    img,
                })
            } else {
                rec(level + 1, d, new_span, pts, img, tuple, visit)
            };
            if !keep_going {
                return false;
            }
        }
        true
    }

    rec(0, d, 0, &pts, &mut img, &mut tuple, visit);
}

/// Compares two equal-size images in sorted-encoding-lexicographic order.
#[inline]
fn image_less(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

/// One full transversal pass over a spanning cap: the reference image
/// (under the first tuple), the minimal image, and how many tuples attain
/// each.
struct Transversal {
    reference: u32,
    reference_count: u64,
    minimum: u32,
    minimum_count: u64,
    tuples: u64,
}

fn transversal(space: &Space, s: &PointSet) -> Result<Transversal, Error> {
    require_spanning(space, s)?;
    let mut out = Transversal {
        reference: 0,
        reference_count: 0,
        minimum: 0,
        minimum_count: 0,
        tuples: 0,
    };
    scan_tuples(space, s, &mut |t| {
        let m = t.image_mask(s);
        if out.tuples == 0 {
            out.reference = m;
            out.minimum = m;
            out.reference_count = 1;
            out.minimum_count = 1;
        } else {
            if m == out.reference {
                out.reference_count += 1;
            }
            if m == out.minimum {
                out.minimum_count += 1;
            } else if image_less(m, out.minimum) {
                out.minimum = m;
                out.minimum_count = 1;
            }
        }
        out.tuples += 1;
        true
    });
    Ok(out)
}

/// The canonical form of a spanning cap: the minimum, over all ordered
/// independent (r+1)-tuples `t` of `s`, of the image `h_t(s)` in
/// sorted-encoding-lexicographic order. Equal canonical forms characterize
/// projective equivalence, and every canonical form contains the frame.
pub fn canonical_form(space: &Space, s: &PointSet) -> Result<PointSet, Error> {
    let scan = transversal(space, s)?;
    Ok(PointSet::from_mask(scan.minimum))
}

/// Order of the setwise stabilizer of a spanning cap in GL(r+1,2):
/// the number of ordered independent tuples whose image of `s` equals
/// that of a fixed reference tuple.
pub fn stabilizer_order(space: &Space, s: &PointSet) -> Result<u64, Error> {
    let scan = transversal(space, s)?;
    // Tuple fibers all have stabilizer size, so the two counts agree.
    debug_assert_eq!(scan.reference_count, scan.minimum_count);
    debug_assert_eq!(scan.tuples % scan.reference_count, 0);
    Ok(scan.reference_count)
}

/// Finds a collineation mapping `a` onto `b`, if the two spanning caps
/// are equivalent. Fixes the first independent tuple `t0` of `a` and
/// tests, for every ordered independent tuple `u` of `b`, the unique map
/// sending `t0` to `u`; any witness must arise this way.
pub fn are_equivalent(
    space: &Space,
    a: &PointSet,
    b: &PointSet,
) -> Result<Option<Collineation>, Error> {
    require_spanning(space, a)?;
    require_spanning(space, b)?;
    if a.len() != b.len() {
        return Ok(None);
    }
    let t0 = FrameTuple::first_in(space, a)?;
    let to_frame = frame_map(space, &t0);
    // Precompute h_t0 on all of a; g = M_u ∘ h_t0 maps t0_i to u_i.
    let a_images: Vec<u8> = a.iter().map(|p| to_frame.apply(p).0).collect();
    let b_mask = b.mask();
    let d = space.dim();

    let mut witness: Option<Collineation> = None;
    scan_tuples(space, b, &mut |t| {
        for &y in &a_images {
            let mut g_p = 0u8;
            let mut rest = y;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                g_p ^= t.tuple[j];
            }
            if b_mask & (1 << g_p) == 0 {
                return true; // not a witness; keep scanning
            }
        }
        let mut u_cols = [0u8; MAX_DIM];
        u_cols[..d as usize].copy_from_slice(t.tuple);
        let m_u = Collineation { d, cols: u_cols };
        witness = Some(m_u.compose(&to_frame));
        false
    });

    if let Some(g) = &witness {
        debug_assert_eq!(g.apply_set(a), *b);
    }
    Ok(witness)
}

/// Partitions a set of candidate points of the cap `c` into extension
/// classes: `p` and `q` share a class iff `c ∪ {p}` and `c ∪ {q}` are
/// projectively equivalent. Classes are returned in ascending order of
/// the extended cap's canonical form.
pub fn extension_classes(
    space: &Space,
    c: &PointSet,
    cand: &PointSet,
) -> Result<Vec<PointSet>, Error> {
    Ok(extension_classes_by_form(space, c, cand)?
        .into_values()
        .collect())
}

/// As [`extension_classes`], keyed by the canonical form of the extended
/// cap.
pub(crate) fn extension_classes_by_form(
    space: &Space,
    c: &PointSet,
    cand: &PointSet,
) -> Result<BTreeMap<PointSet, PointSet>, Error> {
    #[cfg(debug_assertions)]
    if let Ok(full) = space.candidates(c) {
        debug_assert!(cand.is_subset_of(&full));
    }
    let mut classes: BTreeMap<PointSet, PointSet> = BTreeMap::new();
    for p in cand.iter() {
        let form = canonical_form(space, &c.with(p))?;
        classes
            .entry(form)
            .or_insert_with(PointSet::empty)
            .insert(p);
    }
    Ok(classes)
}

/// Calls `f` with every element of GL(r+1,2) exactly once.
pub fn for_each_collineation(space: &Space, mut f: impl FnMut(&Collineation)) {
    let universe = space.universe();
    for_each_rec(
        space,
        &universe,
        0,
        [0u8; MAX_DIM],
        PointSet::empty(),
        &mut f,
    );
}

fn for_each_rec(
    space: &Space,
    universe: &PointSet,
    level: u32,
    mut cols: Cols,
    span: PointSet,
    f: &mut impl FnMut(&Collineation),
) {
    let d = space.dim();
    for p in universe.difference(&span).iter() {
        cols[level as usize] = p.0;
        if level + 1 == d {
            f(&Collineation { d, cols });
        } else {
            // span of the chosen columns grows by the coset through p
            let mut new_span = span.with(p);
            for x in span.iter() {
                new_span.insert(Point(x.0 ^ p.0));
            }
            for_each_rec(space, universe, level + 1, cols, new_span, f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pg(r: u32) -> Space {
        Space::new(r).unwrap()
    }

    fn set(space: &Space, encodings: &[u32]) -> PointSet {
        encodings.iter().map(|&e| space.point(e).unwrap()).collect()
    }

    fn pts(space: &Space, encodings: &[u32]) -> Vec<Point> {
        encodings.iter().map(|&e| space.point(e).unwrap()).collect()
    }

    #[test]
    fn identity_fixes_points() {
        let s = pg(4);
        let id = Collineation::identity(&s);
        assert_eq!(id.apply(s.point(0b10110).unwrap()).encoding(), 0b10110);
        let frame = s.frame();
        assert_eq!(id.apply_set(&frame), frame);
    }

    #[test]
    fn basis_swap_and_cycle() {
        let s = pg(4);
        let swap = Collineation::from_columns(&s, &pts(&s, &[2, 1, 4, 8, 16])).unwrap();
        assert_eq!(swap.apply(s.point(1).unwrap()).encoding(), 2);
        assert_eq!(swap.apply_set(&s.frame()), s.frame());
        assert_eq!(swap.apply_set(&set(&s, &[1, 2])), set(&s, &[1, 2]));

        // columns (e2, e3, e4, e5, e1) send (10001) to e2 ^ e1 = (11000)
        let cycle = Collineation::from_columns(&s, &pts(&s, &[2, 4, 8, 16, 1])).unwrap();
        assert_eq!(cycle.apply(s.point(0b10001).unwrap()).encoding(), 0b00011);
        assert_eq!(cycle.apply_set(&set(&s, &[1, 2])), set(&s, &[2, 4]));
    }

    #[test]
    fn from_columns_rejects_singular() {
        let s = pg(4);
        assert!(matches!(
            Collineation::from_columns(&s, &pts(&s, &[1, 2, 3, 8, 16])),
            Err(Error::DependentTuple)
        ));
    }

    #[test]
    fn frame_map_sends_tuple_to_frame() {
        let s = pg(4);
        let t = FrameTuple::new(&s, &pts(&s, &[1, 2, 4, 8, 16])).unwrap();
        assert_eq!(frame_map(&s, &t), Collineation::identity(&s));

        let t = FrameTuple::new(&s, &pts(&s, &[2, 1, 4, 8, 16])).unwrap();
        let g = frame_map(&s, &t);
        assert_eq!(g.apply(s.point(2).unwrap()).encoding(), 1);
        assert_eq!(g.apply(s.point(1).unwrap()).encoding(), 2);

        let t = FrameTuple::new(&s, &pts(&s, &[1, 2, 4, 8, 31])).unwrap();
        let g = frame_map(&s, &t);
        for (i, p) in t.points().enumerate() {
            assert_eq!(g.apply(p).encoding(), 1 << i);
        }

        assert!(matches!(
            FrameTuple::new(&s, &pts(&s, &[1, 2, 3, 8, 16])),
            Err(Error::DependentTuple)
        ));
    }

    #[test]
    fn canonical_form_of_frame_is_frame() {
        for r in 2..=4 {
            let s = pg(r);
            assert_eq!(canonical_form(&s, &s.frame()).unwrap(), s.frame());
        }
    }

    #[test]
    fn canonical_form_contains_frame() {
        let s = pg(4);
        let cap = set(&s, &[1, 2, 4, 8, 16, 13, 26]);
        let form = canonical_form(&s, &cap).unwrap();
        assert!(s.frame().is_subset_of(&form));
        assert_eq!(form.len(), cap.len());
    }

    #[test]
    fn canonical_form_rejects_degenerate_sets() {
        let s = pg(4);
        assert!(matches!(
            canonical_form(&s, &set(&s, &[1, 2, 4])),
            Err(Error::NotSpanning {
                rank: 3,
                required: 5
            })
        ));
    }

    #[test]
    fn frame_stabilizers() {
        // the monomial group over GF(2) is the symmetric group on the
        // basis points
        assert_eq!(stabilizer_order(&pg(2), &pg(2).frame()).unwrap(), 6);
        assert_eq!(stabilizer_order(&pg(3), &pg(3).frame()).unwrap(), 24);
        assert_eq!(stabilizer_order(&pg(4), &pg(4).frame()).unwrap(), 120);
    }

    #[test]
    fn hyperoval_stabilizer() {
        let s = pg(2);
        assert_eq!(stabilizer_order(&s, &set(&s, &[1, 2, 4, 7])).unwrap(), 24);
    }

    #[test]
    fn equivalence_finds_witnesses() {
        let s = pg(4);
        let cap = set(&s, &[1, 2, 4, 8, 16, 13, 26]);
        let g = Collineation::from_columns(&s, &pts(&s, &[3, 5, 9, 17, 16])).unwrap();
        let image = g.apply_set(&cap);
        let witness = are_equivalent(&s, &cap, &image).unwrap().unwrap();
        assert_eq!(witness.apply_set(&cap), image);

        // weight-3 and weight-4 frame extensions are related by a
        // coordinate permutation
        let a = s.frame().with(s.point(0b00111).unwrap());
        let b = s.frame().with(s.point(0b11100).unwrap());
        assert!(are_equivalent(&s, &a, &b).unwrap().is_some());
    }

    #[test]
    fn inequivalent_same_size_caps() {
        let s = pg(4);
        // frame + weight-5 vs frame + weight-3 extension
        let a = set(&s, &[1, 2, 4, 8, 16, 31]);
        let b = set(&s, &[1, 2, 4, 8, 16, 13]);
        assert!(are_equivalent(&s, &a, &b).unwrap().is_none());
        assert_ne!(
            canonical_form(&s, &a).unwrap(),
            canonical_form(&s, &b).unwrap()
        );
        // different sizes never match
        let c = set(&s, &[1, 2, 4, 8, 16, 13, 26]);
        assert!(are_equivalent(&s, &a, &c).unwrap().is_none());
    }

    #[test]
    fn canonical_form_is_invariant_under_action() {
        let s = pg(3);
        let cap = set(&s, &[1, 2, 4, 8, 7]);
        let base = canonical_form(&s, &cap).unwrap();
        let g = Collineation::from_columns(&s, &pts(&s, &[15, 2, 6, 8])).unwrap();
        let h = Collineation::from_columns(&s, &pts(&s, &[3, 2, 12, 9])).unwrap();
        for m in [g, h, g.compose(&h), g.inverse()] {
            assert_eq!(canonical_form(&s, &m.apply_set(&cap)).unwrap(), base);
        }
    }

    #[test]
    fn compose_and_inverse() {
        let s = pg(4);
        let g = Collineation::from_columns(&s, &pts(&s, &[3, 5, 9, 17, 16])).unwrap();
        let id = Collineation::identity(&s);
        assert_eq!(g.compose(&g.inverse()), id);
        assert_eq!(g.inverse().compose(&g), id);
        let h = Collineation::from_columns(&s, &pts(&s, &[2, 4, 8, 16, 1])).unwrap();
        let p = s.point(21).unwrap();
        assert_eq!(g.compose(&h).apply(p), g.apply(h.apply(p)));
    }

    #[test]
    fn group_enumeration_matches_order_formula() {
        let s = pg(2);
        let mut n = 0u64;
        for_each_collineation(&s, |_| n += 1);
        assert_eq!(n, s.group_order());
    }

    #[test]
    fn extension_classes_of_the_frame() {
        let s = pg(4);
        let frame = s.frame();
        let cand = s.candidates(&frame).unwrap();
        let classes = extension_classes(&s, &frame, &cand).unwrap();
        assert_eq!(classes.len(), 3);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [1, 5, 10]);
        // classes group the candidates by Hamming weight
        for class in &classes {
            let w = class.first().unwrap().encoding().count_ones();
            assert!(class.iter().all(|p| p.encoding().count_ones() == w));
        }
        // empty and singleton candidate sets
        assert!(extension_classes(&s, &frame, &PointSet::empty())
            .unwrap()
            .is_empty());
        let single = PointSet::from_points([s.point(31).unwrap()]);
        assert_eq!(
            extension_classes(&s, &frame, &single).unwrap(),
            vec![single]
        );
    }
}
