use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded randomness for the probabilistic splitting step.
///
/// The same seed reproduces the same draws on every platform and thread
/// count. `counter` records how many draws have been taken.
#[derive(Clone, Debug)]
pub struct RngState {
    seed: u64,
    counter: u64,
    rng: ChaCha8Rng,
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        RngState {
            seed,
            counter: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream `stream` derived from the same seed; used to hand
    /// each parallel task its own generator.
    pub fn fork(&self, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream.wrapping_add(1));
        RngState {
            seed: self.seed,
            counter: 0,
            rng,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn counter(&self) -> u64 {
        self.counter
    }

    /// Uniform draw from `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.counter += 1;
        self.rng.gen_range(0..bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_forks_differ() {
        let mut a = RngState::new(42);
        let mut b = RngState::new(42);
        let xs: Vec<u64> = (0..20).map(|_| a.below(1000)).collect();
        let ys: Vec<u64> = (0..20).map(|_| b.below(1000)).collect();
        assert_eq!(xs, ys);
        assert_eq!(a.counter(), 20);
        let mut f1 = a.fork(1);
        let mut f2 = a.fork(2);
        let zs: Vec<u64> = (0..20).map(|_| f1.below(1000)).collect();
        let ws: Vec<u64> = (0..20).map(|_| f2.below(1000)).collect();
        assert_ne!(zs, ws);
        assert_eq!(a.fork(1).below(1 << 40), RngState::new(42).fork(1).below(1 << 40));
    }
}
