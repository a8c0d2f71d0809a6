//! Reference Chern-number columns, in the row order of
//! [`crate::charclass::ChernMonomial::ALL`]: c5, c1^5, c1^3c2, c1^2c3, c1c4,
//! c1c2^2, c2c3.

pub const Z: [i64; 7] = [6, 4374, 2106, 594, 90, 1014, 286];
pub const N: [i64; 7] = [6, -18, -6, 18, 18, -2, 6];
pub const Q: [i64; 7] = [6, 6250, 2750, 650, 90, 1210, 286];
pub const PTS6: [i64; 7] = [6, -486, -162, 18, 18, -54, 6];
pub const PTSTAR_S6: [i64; 7] = [6, 486, 162, 18, 18, 54, 6];
pub const X: [i64; 7] = [6, -2, 2, 2, -6, -2, -2];

/// Per-unit multiples of the Euler characteristic of the base for the
/// projectivized tangent and cotangent bundles of a 6-manifold with `c1 = 0`.
pub const PTS6_PER_UNIT: [i64; 7] = [3, -243, -81, 9, 9, -27, 3];
pub const PTSTAR_S6_PER_UNIT: [i64; 7] = [3, 243, 81, 9, 9, 27, 3];

/// The value of `c1^5(Z)` as it appears in one printed derivation; the table
/// and `18 * 3^5` both give 4374.
pub const Z_C1_POW5_PRINTED: i64 = 4373;

/// Column for a catalogue name.
pub fn column(name: &str) -> Option<[i64; 7]> {
    Some(match name {
        "Z" => Z,
        "N" => N,
        "Q" => Q,
        "PTS6" => PTS6,
        "PTstarS6" => PTSTAR_S6,
        "X" => X,
        _ => return None,
    })
}
