//! Closed-form classification data for tight contact structures on solid
//! tori and lens spaces: continued fraction blocks, product-formula counts,
//! basic-slice decorations, relative half-Euler classes, and the lens-space
//! gluing matrix.

use crate::error::{Error, Result};
use crate::farey::{cf_expand, peel_path, Slope};
use crate::Sign;

/// The peeling path of `-p/q` grouped into continued fraction blocks.
///
/// Every edge of the path is a basic slice; a block collects the
/// consecutive edges that increment the same continued fraction
/// coefficient, i.e. whose endpoint slopes have expansions of equal
/// length.  Basic slices may be shuffled within a block but not across
/// blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    path: Vec<Slope>,
    block_edge_counts: Vec<usize>,
}

impl BlockDecomposition {
    pub fn path(&self) -> &[Slope] {
        &self.path
    }

    /// Edge counts `e_1, ..., e_B` in peeling order; they sum to
    /// `path.len() - 1`.
    pub fn block_edge_counts(&self) -> &[usize] {
        &self.block_edge_counts
    }
}

/// Decomposes the peeling path of `-p/q` into continued fraction blocks.
///
/// For the expansion `(r_0, ..., r_k)` the innermost block (traversed
/// first) has `|r_k| - 1` edges and the block for `r_i`, `i < k`, has
/// `|r_i| - 2`, skipping empty blocks.
pub fn block_decompose(p: i64, q: i64) -> Result<BlockDecomposition> {
    let cf = cf_expand(p, q)?;
    let path = peel_path(p, q)?;
    let r = cf.coefficients();
    let k = r.len() - 1;
    let mut block_edge_counts = vec![(-r[k] - 1) as usize];
    for i in (0..k).rev() {
        let e = (-r[i] - 2) as usize;
        if e > 0 {
            block_edge_counts.push(e);
        }
    }
    debug_assert_eq!(
        block_edge_counts.iter().sum::<usize>(),
        path.len() - 1,
        "blocks partition the peeling edges"
    );
    Ok(BlockDecomposition {
        path,
        block_edge_counts,
    })
}

/// Number of tight contact structures on a solid torus with two dividing
/// curves of boundary slope `-p/q`:
/// `|(r_0 + 1)(r_1 + 1) ... (r_{k-1} + 1) r_k|`.
///
/// The boundary slope `-1` (`p == q == 1`) is the standard neighborhood of
/// a Legendrian curve and carries exactly one.
pub fn solid_torus_count_formula(p: i64, q: i64) -> Result<u64> {
    if p == 1 && q == 1 {
        return Ok(1);
    }
    let cf = cf_expand(p, q)?;
    let r = cf.coefficients();
    let k = r.len() - 1;
    let mut count = 1u64;
    for &ri in &r[..k] {
        count *= (ri + 1).unsigned_abs();
    }
    count *= r[k].unsigned_abs();
    Ok(count)
}

/// Number of tight contact structures on the lens space `L(p, q)`:
/// `|(r_0 + 1)(r_1 + 1) ... (r_k + 1)|`.
pub fn lens_count_formula(p: i64, q: i64) -> Result<u64> {
    let cf = cf_expand(p, q)?;
    Ok(cf
        .coefficients()
        .iter()
        .map(|&ri| (ri + 1).unsigned_abs())
        .product())
}

/// One isotopy class of tight structures on the solid torus: the number of
/// positive basic slices in each continued fraction block.  Shuffling
/// within a block is quotiented out by storing counts rather than
/// sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TightDecoration {
    plus_counts: Vec<usize>,
}

impl TightDecoration {
    pub fn plus_counts(&self) -> &[usize] {
        &self.plus_counts
    }
}

/// All decorations `(m_1, ..., m_B)` with `0 <= m_b <= e_b`, in
/// lexicographic order.  Their number equals
/// [`solid_torus_count_formula`].
pub fn enumerate_tight_decorations(p: i64, q: i64) -> Result<Vec<TightDecoration>> {
    let blocks = block_decompose(p, q)?;
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for &e in blocks.block_edge_counts() {
        let mut next = Vec::with_capacity(out.len() * (e + 1));
        for prefix in &out {
            for m in 0..=e {
                let mut t = prefix.clone();
                t.push(m);
                next.push(t);
            }
        }
        out = next;
    }
    Ok(out
        .into_iter()
        .map(|plus_counts| TightDecoration { plus_counts })
        .collect())
}

/// Relative half-Euler class of a layered slice decomposition, as a vector
/// in the first homology of the thickened torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfEulerClass {
    vector: (i64, i64),
}

impl HalfEulerClass {
    pub fn vector(&self) -> (i64, i64) {
        self.vector
    }
}

/// Shortest integer vector of a slope, normalized to the half-plane with
/// non-negative first coordinate: `a/b` maps to `(b, a)` and `∞` to
/// `(0, 1)`.
pub fn shortest_vector(s: Slope) -> (i64, i64) {
    (s.den(), s.num())
}

/// Relative half-Euler class of a path of slopes with one basic-slice sign
/// per edge: the signed sum of the differences of shortest vectors.
///
/// A single basic slice contributes `±(v_back - v_front)`; the class is
/// additive under stacking, and the sign labelling is defined up to one
/// global flip.
pub fn half_euler(path: &[Slope], signs: &[Sign]) -> Result<HalfEulerClass> {
    if path.len() != signs.len() + 1 {
        return Err(Error::SignCountMismatch {
            expected: path.len().saturating_sub(1),
            got: signs.len(),
        });
    }
    let mut vector = (0i64, 0i64);
    for (w, sign) in path.windows(2).zip(signs) {
        let front = shortest_vector(w[0]);
        let back = shortest_vector(w[1]);
        let (dx, dy) = (back.0 - front.0, back.1 - front.1);
        match sign {
            Sign::Plus => {
                vector.0 += dx;
                vector.1 += dy;
            }
            Sign::Minus => {
                vector.0 -= dx;
                vector.1 -= dy;
            }
        }
    }
    Ok(HalfEulerClass { vector })
}

/// The gluing matrix presenting `L(p, q)` as two solid tori: the map
/// `(-q, q'; p, -p')` of determinant `-1`, with `p q' - q p' = 1`,
/// `0 < q' <= q` minimal, and `0 < p' < p`.
pub fn lens_gluing_matrix(p: i64, q: i64) -> Result<[[i64; 2]; 2]> {
    if p <= 0 {
        return Err(Error::NotPositive(p));
    }
    if q <= 0 {
        return Err(Error::NotPositive(q));
    }
    if p <= q {
        return Err(Error::NotExpandable { p, q });
    }
    if crate::farey::gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let q_prime = (1..=q)
        .find(|&x| (p * x) % q == 1 % q)
        .expect("coprime p has an inverse mod q");
    let p_prime = (p * q_prime - 1) / q;
    Ok([[-q, q_prime], [p, -p_prime]])
}
