//! Random codes for the invariance harness and the benches.
//!
//! Codes are random chord pairings with random over/under and signs, plus up
//! to two tokens per side. They need not be realizable on the given surface;
//! the invariance statements are algebraic and hold for any code.

use rand::seq::SliceRandom;
use rand::Rng;

use super::r3::patterns;
use crate::diagram::{DiagramCode, GaussDiagram, Sign, SurfaceDiagram, Token};

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

fn random_passages<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Token> {
    let mut ids: Vec<u32> = (1..=n as u32).chain(1..=n as u32).collect();
    ids.shuffle(rng);
    let over_first: Vec<bool> = (0..=n).map(|_| rng.gen_bool(0.5)).collect();
    let signs: Vec<Sign> = (0..=n).map(|_| random_sign(rng)).collect();
    let mut seen = vec![false; n + 1];
    ids.into_iter()
        .map(|c| {
            let k = c as usize;
            let first = !seen[k];
            seen[k] = true;
            if first == over_first[k] {
                Token::over(c, signs[k])
            } else {
                Token::under(c, signs[k])
            }
        })
        .collect()
}

pub fn random_gauss<R: Rng + ?Sized>(rng: &mut R, crossings: usize) -> GaussDiagram {
    GaussDiagram::new("random", random_passages(rng, crossings)).expect("valid by construction").renumbered()
}

pub fn random_surface<R: Rng + ?Sized>(rng: &mut R, crossings: usize, genus: u32) -> SurfaceDiagram {
    let mut tokens = random_passages(rng, crossings);
    for side in 1..=2 * genus {
        for _ in 0..rng.gen_range(0..=2) {
            let at = rng.gen_range(0..=tokens.len());
            tokens.insert(at, Token::side(side, random_sign(rng)));
        }
    }
    SurfaceDiagram::new("random", genus, tokens).expect("valid by construction").renumbered()
}

/// Insert an R3 triangle (three fresh crossings in a valid pattern) at random places.
pub fn plant_r3<R: Rng + ?Sized>(rng: &mut R, tokens: &[Token]) -> Vec<Token> {
    let &(tf, mf, bf, stm, stb, smb) = patterns().choose(rng).expect("table is nonempty");
    let base = tokens.iter().filter_map(Token::crossing).map(|c| c.0).max().unwrap_or(0);
    let (tm, tb, mb) = (base + 1, base + 2, base + 3);
    let s = |x: i8| if x > 0 { Sign::Pos } else { Sign::Neg };
    let order = |a: Token, b: Token, first: bool| if first { [a, b] } else { [b, a] };
    let segs = [
        order(Token::over(tm, s(stm)), Token::over(tb, s(stb)), tf),
        order(Token::under(tm, s(stm)), Token::over(mb, s(smb)), mf),
        order(Token::under(tb, s(stb)), Token::under(mb, s(smb)), bf),
    ];
    // pick gaps in the original word and insert back to front so no segment
    // lands inside another one
    let mut placed: Vec<(usize, [Token; 2])> =
        segs.into_iter().map(|seg| (rng.gen_range(0..=tokens.len()), seg)).collect();
    placed.sort_by_key(|p| std::cmp::Reverse(p.0));
    let mut out = tokens.to_vec();
    for (at, seg) in placed {
        out.splice(at..at, seg);
    }
    out
}

/// Surround both passages of a random crossing with tokens of one side so
/// that a side pass becomes applicable.
pub fn plant_side_pass<R: Rng + ?Sized>(rng: &mut R, d: &SurfaceDiagram) -> SurfaceDiagram {
    let crossings = d.crossings();
    if crossings.is_empty() || d.genus() == 0 {
        return d.clone();
    }
    let c = *crossings.choose(rng).expect("nonempty");
    let side = rng.gen_range(1..=2 * d.genus());
    let region = if rng.gen_bool(0.5) { 1 } else { -1 };
    let mut tokens = d.tokens().to_vec();
    let mut inserts: Vec<(usize, Token)> = tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.crossing() == Some(c))
        .map(|(i, _)| {
            let after = rng.gen_bool(0.5);
            let e = if after { -region } else { region };
            let sign = if e > 0 { Sign::Pos } else { Sign::Neg };
            (if after { i + 1 } else { i }, Token::side(side, sign))
        })
        .collect();
    inserts.sort_by_key(|p| std::cmp::Reverse(p.0));
    for (at, t) in inserts {
        tokens.insert(at, t);
    }
    SurfaceDiagram::new(d.name(), d.genus(), tokens).expect("side in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::{r3_sites, side_pass_sites};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_codes_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..8 {
            let d = random_surface(&mut rng, n, 2);
            assert_eq!(d.crossing_count(), n);
            let g = random_gauss(&mut rng, n);
            assert_eq!(g.crossing_count(), n);
        }
    }

    #[test]
    fn planted_sites_are_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let d = random_gauss(&mut rng, 3);
            let t = plant_r3(&mut rng, d.tokens());
            assert!(!r3_sites(&t).is_empty(), "{t:?}");
            let base = random_surface(&mut rng, 3, 1);
            let s = plant_side_pass(&mut rng, &base);
            assert!(!side_pass_sites(s.tokens()).is_empty(), "{s}");
        }
    }
}
