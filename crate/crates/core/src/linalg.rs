//! GF(2) linear algebra on d x d bit matrices, d <= 5.
//!
//! A matrix is stored as its columns: `cols[j]` is the encoding of the
//! image of the j-th basis vector, one bit per row.

pub const MAX_DIM: usize = 5;

pub type Cols = [u8; MAX_DIM];

/// Rank of a list of vectors, via incremental basis insertion.
pub fn rank(vectors: impl IntoIterator<Item = u8>) -> u32 {
    let mut basis = [0u8; 8];
    let mut rank = 0;
    for v in vectors {
        if reduce_and_insert(&mut basis, v) {
            rank += 1;
        }
    }
    rank
}

/// Reduces `v` against `basis` (indexed by leading bit) and inserts the
/// remainder if nonzero. Returns true when the rank grew.
pub fn reduce_and_insert(basis: &mut [u8; 8], v: u8) -> bool {
    let mut x = v;
    while x != 0 {
        let lead = 7 - x.leading_zeros() as usize;
        if basis[lead] == 0 {
            basis[lead] = x;
            return true;
        }
        x ^= basis[lead];
    }
    false
}

/// Matrix–vector product: XOR of the columns selected by the bits of `x`.
#[inline]
pub fn mat_vec(cols: &Cols, x: u8) -> u8 {
    let mut acc = 0;
    let mut rest = x;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        acc ^= cols[j];
    }
    acc
}

/// Composition `a ∘ b` as column matrices: column j of the result is
/// `a(b(e_j))`.
pub fn mat_mul(a: &Cols, b: &Cols, d: usize) -> Cols {
    let mut out = [0u8; MAX_DIM];
    for j in 0..d {
        out[j] = mat_vec(a, b[j]);
    }
    out
}

/// Inverse of a column matrix, or `None` if it is singular.
///
/// Gauss–Jordan on the rows of `[M | I]`, each row packed as `2d` bits.
pub fn invert(cols: &Cols, d: usize) -> Option<Cols> {
    let mut rows = [0u16; MAX_DIM];
    for i in 0..d {
        let mut left = 0u16;
        for j in 0..d {
            left |= (((cols[j] >> i) & 1) as u16) << j;
        }
        rows[i] = left | (1u16 << (d + i));
    }
    for col in 0..d {
        let pivot = (col..d).find(|&i| rows[i] >> col & 1 == 1)?;
        rows.swap(col, pivot);
        for i in 0..d {
            if i != col && rows[i] >> col & 1 == 1 {
                rows[i] ^= rows[col];
            }
        }
    }
    // Left half is now I; read the inverse out of the right half.
    let mut inv = [0u8; MAX_DIM];
    for i in 0..d {
        let right = rows[i] >> d;
        for j in 0..d {
            inv[j] |= (((right >> j) & 1) as u8) << i;
        }
    }
    Some(inv)
}
