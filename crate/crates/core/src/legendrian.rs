//! Classical invariants of Legendrian knots in the front projection:
//! the Thurston-Bennequin invariant, the rotation number, stabilizations,
//! and the classification of Legendrian unknots by those two numbers.

use crate::error::{Error, Result};
use crate::farey::cf_expand;
use crate::Sign;

/// Feature counts of a generic closed front projection.
///
/// The invariants of a front depend only on these counts, so no planar
/// geometry is stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrontCounts {
    up_cusps: u32,
    down_cusps: u32,
    pos_crossings: u32,
    neg_crossings: u32,
}

impl FrontCounts {
    /// A closed front has an even, positive number of cusps.
    pub fn new(
        up_cusps: u32,
        down_cusps: u32,
        pos_crossings: u32,
        neg_crossings: u32,
    ) -> Result<FrontCounts> {
        let cusps = up_cusps + down_cusps;
        if cusps == 0 || cusps % 2 != 0 {
            return Err(Error::OddCusps(cusps));
        }
        Ok(FrontCounts {
            up_cusps,
            down_cusps,
            pos_crossings,
            neg_crossings,
        })
    }

    /// `tb = -(# cusps)/2 + (# positive crossings) - (# negative crossings)`.
    pub fn tb(&self) -> i64 {
        -i64::from(self.up_cusps + self.down_cusps) / 2 + i64::from(self.pos_crossings)
            - i64::from(self.neg_crossings)
    }

    /// `r = ((# downward cusps) - (# upward cusps))/2`.
    pub fn rotation(&self) -> i64 {
        (i64::from(self.down_cusps) - i64::from(self.up_cusps)) / 2
    }
}

/// A Legendrian unknot written as a stabilization `S_+^{k_plus} S_-^{k_minus}`
/// of the unique maximal-tb unknot, which has `tb = -1` and `r = 0`.
///
/// Legendrian unknots in the tight three-sphere are determined by `tb` and
/// `r`, so this pair of counts is a complete invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnknotForm {
    k_plus: u32,
    k_minus: u32,
}

impl UnknotForm {
    pub fn new(k_plus: u32, k_minus: u32) -> UnknotForm {
        UnknotForm { k_plus, k_minus }
    }

    /// The maximal-tb representative: no stabilizations at all.
    pub fn maximal() -> UnknotForm {
        UnknotForm::new(0, 0)
    }

    pub fn k_plus(&self) -> u32 {
        self.k_plus
    }

    pub fn k_minus(&self) -> u32 {
        self.k_minus
    }

    /// Each stabilization drops `tb` by one and moves `r` by `±1`.
    pub fn stabilize(&self, sign: Sign) -> UnknotForm {
        match sign {
            Sign::Plus => UnknotForm::new(self.k_plus + 1, self.k_minus),
            Sign::Minus => UnknotForm::new(self.k_plus, self.k_minus + 1),
        }
    }

    pub fn tb(&self) -> i64 {
        -1 - i64::from(self.k_plus) - i64::from(self.k_minus)
    }

    pub fn rotation(&self) -> i64 {
        i64::from(self.k_plus) - i64::from(self.k_minus)
    }
}

/// Recovers the stabilization form of a Legendrian unknot from `(tb, r)`,
/// or `None` if no Legendrian unknot in the tight three-sphere has these
/// invariants.  In particular `tb >= 0` always yields `None`.
pub fn unknot_from_invariants(tb: i64, r: i64) -> Option<UnknotForm> {
    let total = -1 - tb; // k_plus + k_minus
    if total < 0 || (total - r) % 2 != 0 {
        return None;
    }
    let k_plus = (total + r) / 2;
    let k_minus = (total - r) / 2;
    if k_plus < 0 || k_minus < 0 {
        return None;
    }
    Some(UnknotForm::new(k_plus as u32, k_minus as u32))
}

/// The Bennequin inequality `tb ± r <= -χ(Σ)` for a Legendrian knot with a
/// Seifert surface of Euler characteristic `chi`.
///
/// Holds for every nullhomologous Legendrian knot in a tight contact
/// manifold; a violation certifies overtwistedness.
pub fn bennequin_check(tb: i64, r: i64, chi: i64) -> Result<bool> {
    if chi > 1 {
        return Err(Error::BadEulerCharacteristic(chi));
    }
    Ok(tb + r <= -chi && tb - r <= -chi)
}

/// Rotation numbers available to a Legendrian unknot with `tb = r_i + 1`:
/// `r_i + 2, r_i + 4, ..., -(r_i + 2)`, which is `|r_i + 1|` choices.
fn rotation_menu(r: i64) -> Vec<i64> {
    debug_assert!(r <= -2);
    (0..(-r - 1)).map(|j| r + 2 + 2 * j).collect()
}

/// All tuples of rotation numbers for the surgery link description of the
/// lens space `L(p, q)`: one unknot per continued fraction coefficient
/// `r_i`, with `tb = r_i + 1` and the rotation number drawn from
/// [`rotation_menu`].  Tuples are listed in row-major order of the menus.
pub fn surgery_rotation_tuples(p: i64, q: i64) -> Result<Vec<Vec<i64>>> {
    let cf = cf_expand(p, q)?;
    let menus: Vec<Vec<i64>> = cf.coefficients().iter().map(|&r| rotation_menu(r)).collect();
    let mut tuples: Vec<Vec<i64>> = vec![Vec::new()];
    for menu in &menus {
        let mut next = Vec::with_capacity(tuples.len() * menu.len());
        for t in &tuples {
            for &m in menu {
                let mut t = t.clone();
                t.push(m);
                next.push(t);
            }
        }
        tuples = next;
    }
    Ok(tuples)
}
