//! The two worked examples, both directions, with their move-by-move
//! transcripts checked into `fixtures/`.

use crate::bijection::{from_triple, to_triple, transcript, Direction, MoveTriple};
use crate::error::BijectionError;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy)]
pub struct GoldenCase {
    pub name: &'static str,
    pub a: u32,
    pub direction: Direction,
    /// `λ` for backward cases.
    pub lambda: &'static [u32],
    /// `(pairs, singletons, μ, ν)` for forward cases.
    pub triple: (u32, u32, &'static [u32], &'static [u32]),
    pub expected: &'static str,
}

pub const CASES: [GoldenCase; 4] = [
    GoldenCase {
        name: "a3-backward",
        a: 3,
        direction: Direction::Backward,
        lambda: &[14, 14, 11, 10, 7, 7, 5, 5, 2, 1],
        triple: (0, 0, &[], &[]),
        expected: include_str!("../fixtures/a3_backward.txt"),
    },
    GoldenCase {
        name: "a3-forward",
        a: 3,
        direction: Direction::Forward,
        lambda: &[],
        triple: (3, 4, &[10, 4, 4], &[3, 3, 0, 0]),
        expected: include_str!("../fixtures/a3_forward.txt"),
    },
    GoldenCase {
        name: "a2-backward",
        a: 2,
        direction: Direction::Backward,
        lambda: &[17, 13, 9, 6, 6, 4, 4, 1],
        triple: (0, 0, &[], &[]),
        expected: include_str!("../fixtures/a2_backward.txt"),
    },
    GoldenCase {
        name: "a2-forward",
        a: 2,
        direction: Direction::Forward,
        lambda: &[],
        triple: (2, 4, &[2, 2], &[9, 6, 3, 0]),
        expected: include_str!("../fixtures/a2_forward.txt"),
    },
];

impl GoldenCase {
    /// Runs the bijection on this case's input and renders the transcript.
    pub fn render(&self) -> Result<String, BijectionError> {
        match self.direction {
            Direction::Backward => {
                let lam = Partition::new(self.lambda.to_vec())?;
                let (t, trace) = to_triple(self.a, &lam)?;
                Ok(transcript(&lam, &trace, &t.base(), &t))
            }
            Direction::Forward => {
                let (pairs, singletons, mu, nu) = self.triple;
                let t = MoveTriple { a: self.a, pairs, singletons, mu: mu.to_vec(), nu: nu.to_vec() };
                let (lam, trace) = from_triple(&t)?;
                Ok(transcript(&t.base(), &trace, &lam, &t))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_matches_its_fixture() {
        for case in CASES {
            assert_eq!(case.render().unwrap(), case.expected, "{}", case.name);
        }
    }
}
