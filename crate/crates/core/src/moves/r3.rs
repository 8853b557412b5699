//! Which oriented triangles admit a third Reidemeister move.
//!
//! A triangle is formed by three strands: top (T), middle (M) and bottom (B).
//! In the code it shows up as three adjacent pairs of passages,
//!
//! ```text
//! T: O_tm O_tb      M: U_tm O_mb      B: U_tb U_mb
//! ```
//!
//! each in either order, plus the three crossing signs. Instead of listing
//! the valid patterns by hand, they are generated from three straight lines
//! in the plane: each line gets a direction, and the triangle is placed on
//! either side of the crossing point of the moving strand (the move swaps
//! every pair, which is the same as flipping the triangle).

use std::sync::OnceLock;

/// `(t_first, m_first, b_first, sign_tm, sign_tb, sign_mb)`: `t_first` means
/// O_tm comes before O_tb along T, `m_first` that U_tm comes before O_mb,
/// `b_first` that U_tb comes before U_mb.
pub type R3Pattern = (bool, bool, bool, i8, i8, i8);

fn cross(a: (i32, i32), b: (i32, i32)) -> i32 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: (i32, i32), b: (i32, i32)) -> i32 {
    a.0 * b.0 + a.1 * b.1
}

fn sign(x: i32) -> i8 {
    if x > 0 {
        1
    } else {
        -1
    }
}

fn generate() -> Vec<R3Pattern> {
    let mut out = Vec::new();
    for et in [1, -1] {
        for em in [1, -1] {
            for eb in [1, -1] {
                // T along the x-axis, M along the y-axis, B along the anti-diagonal
                let (dt, dm, db) = ((et, 0), (0, em), (-eb, eb));
                // crossing points TM, TB, MB of the triangle and of its mirror image
                for (tm, tb, mb) in [((0, 0), (1, 0), (0, 1)), ((0, 0), (-1, 0), (0, -1))] {
                    let pat = (
                        dot(tm, dt) < dot(tb, dt),
                        dot(tm, dm) < dot(mb, dm),
                        dot(tb, db) < dot(mb, db),
                        sign(cross(dt, dm)),
                        sign(cross(dt, db)),
                        sign(cross(dm, db)),
                    );
                    if !out.contains(&pat) {
                        out.push(pat);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

pub fn patterns() -> &'static [R3Pattern] {
    static TABLE: OnceLock<Vec<R3Pattern>> = OnceLock::new();
    TABLE.get_or_init(generate)
}

pub fn is_valid(p: &R3Pattern) -> bool {
    patterns().contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eight_patterns_closed_under_the_move() {
        let ps = patterns();
        assert_eq!(ps.len(), 8);
        for &(a, b, c, x, y, z) in ps {
            // applying the move reverses every pair and keeps the signs
            assert!(is_valid(&(!a, !b, !c, x, y, z)));
            // the sign product is always positive for a braid-like triangle
            assert_eq!(x * y * z, 1);
        }
    }
}
