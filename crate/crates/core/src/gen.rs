//! Seeded instance generators.
//!
//! Randomness comes from ChaCha8 keyed with the seed's little-endian bytes
//! (remaining key bytes zero, stream 0). Integers in `0..bound` are drawn by
//! rejection: discard raw words below `2^64 mod bound`, then reduce modulo
//! `bound`. Shuffles are Fisher-Yates from the top index down. Together this
//! pins every generated instance to the seed, independent of platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::circle::{circle_graph, Chord, ChordDiagram};
use crate::error::{Error, Result};
use crate::graph::Color;
use crate::interval::{Interval, IntervalInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub n: usize,
    pub alpha: usize,
    pub seed: u64,
    /// Resample until the generated graph is connected.
    pub connected: bool,
}

impl GenConfig {
    pub fn new(n: usize, alpha: usize, seed: u64) -> Self {
        GenConfig {
            n,
            alpha,
            seed,
            connected: true,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::input("n must be at least 1"));
        }
        if self.alpha == 0 || self.alpha > self.n {
            return Err(Error::input(format!(
                "alpha must lie in 1..={} (got {})",
                self.n, self.alpha
            )));
        }
        Ok(())
    }
}

/// Deterministic integer source used by the generators.
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        SeededRng(ChaCha8Rng::from_seed(key))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// Random perfect matching of the points `1..=2n`, each pair ordered.
    fn matching(&mut self, n: usize) -> Vec<(usize, usize)> {
        let mut points: Vec<usize> = (1..=2 * n).collect();
        self.shuffle(&mut points);
        points
            .chunks(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect()
    }

    /// Uniform colors in `1..=alpha`, redrawn until every color appears.
    fn colors(&mut self, n: usize, alpha: usize) -> Vec<Color> {
        loop {
            let colors: Vec<Color> = (0..n)
                .map(|_| self.below(alpha as u64) as Color + 1)
                .collect();
            let mut seen = vec![false; alpha];
            for &c in &colors {
                seen[c as usize - 1] = true;
            }
            if seen.iter().all(|&s| s) {
                return colors;
            }
        }
    }
}

pub fn random_interval_instance(cfg: &GenConfig) -> Result<IntervalInstance> {
    cfg.validate()?;
    let mut rng = SeededRng::new(cfg.seed);
    loop {
        let pairs = rng.matching(cfg.n);
        let colors = rng.colors(cfg.n, cfg.alpha);
        let intervals = pairs
            .into_iter()
            .zip(colors)
            .map(|((left, right), color)| Interval { color, left, right })
            .collect();
        let inst = IntervalInstance::new(intervals)?;
        if !cfg.connected || inst.is_connected() {
            return Ok(inst);
        }
    }
}

pub fn random_chord_diagram(cfg: &GenConfig) -> Result<ChordDiagram> {
    cfg.validate()?;
    let mut rng = SeededRng::new(cfg.seed);
    loop {
        let pairs = rng.matching(cfg.n);
        let colors = rng.colors(cfg.n, cfg.alpha);
        let chords = pairs
            .into_iter()
            .zip(colors)
            .map(|((a, b), color)| Chord { color, a, b })
            .collect();
        let diagram = ChordDiagram::new(chords)?;
        if !cfg.connected || circle_graph(&diagram)?.is_connected() {
            return Ok(diagram);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_interval() {
        let inst = random_interval_instance(&GenConfig::new(1, 1, 42)).unwrap();
        assert_eq!(
            inst.intervals(),
            &[Interval {
                color: 1,
                left: 1,
                right: 2
            }]
        );
    }

    #[test]
    fn single_chord() {
        let d = random_chord_diagram(&GenConfig::new(1, 1, 7)).unwrap();
        assert_eq!(
            d.chords(),
            &[Chord {
                color: 1,
                a: 1,
                b: 2
            }]
        );
    }

    #[test]
    fn same_seed_same_output() {
        let cfg = GenConfig::new(10, 3, 99);
        assert_eq!(
            random_interval_instance(&cfg).unwrap(),
            random_interval_instance(&cfg).unwrap()
        );
        assert_eq!(
            random_chord_diagram(&cfg).unwrap(),
            random_chord_diagram(&cfg).unwrap()
        );
        let other = GenConfig::new(10, 3, 100);
        assert_ne!(
            random_interval_instance(&cfg).unwrap(),
            random_interval_instance(&other).unwrap()
        );
    }

    #[test]
    fn alpha_above_n_rejected() {
        assert!(random_interval_instance(&GenConfig::new(2, 3, 0)).is_err());
        assert!(random_chord_diagram(&GenConfig::new(3, 0, 0)).is_err());
    }

    #[test]
    fn below_stays_in_range() {
        let mut rng = SeededRng::new(5);
        let mut hits = [0usize; 3];
        for _ in 0..3000 {
            hits[rng.below(3) as usize] += 1;
        }
        assert!(hits.iter().all(|&h| h > 800));
    }

    /// Frozen first outputs, so a dependency upgrade that changes the stream
    /// is caught.
    #[test]
    fn stream_is_pinned() {
        let mut rng = SeededRng::new(0);
        assert_eq!(rng.next_u64(), 15438444565445410878);
        assert_eq!(rng.next_u64(), 11647726043916688255);
        let inst = random_interval_instance(&GenConfig::new(4, 2, 2024)).unwrap();
        let spans: Vec<(Color, usize, usize)> = inst
            .intervals()
            .iter()
            .map(|iv| (iv.color, iv.left, iv.right))
            .collect();
        assert_eq!(spans, vec![(1, 3, 6), (2, 2, 7), (1, 4, 5), (1, 1, 8)]);
    }
}
