use rand::seq::index::sample;
use rand::Rng;

use crate::semigroup::NumericalSemigroup;

/// A gcd-1 semigroup with between 2 and `max_r` minimal generators, all in
/// `2..=max_gen`.
pub fn random_semigroup<R: Rng>(rng: &mut R, max_r: usize, max_gen: u64) -> NumericalSemigroup {
    assert!(max_r >= 2 && max_gen >= 3);
    loop {
        let r = rng.gen_range(2..=max_r);
        let span = (max_gen - 1) as usize;
        if r > span {
            continue;
        }
        let gens: Vec<u64> = sample(rng, span, r)
            .into_iter()
            .map(|i| i as u64 + 2)
            .collect();
        let h = NumericalSemigroup::from_generators(&gens).expect("positive generators");
        if h.gcd() == 1 && h.mu() >= 2 {
            return h;
        }
    }
}

pub fn random_semigroups<R: Rng>(
    rng: &mut R,
    count: usize,
    max_r: usize,
    max_gen: u64,
) -> Vec<NumericalSemigroup> {
    (0..count)
        .map(|_| random_semigroup(rng, max_r, max_gen))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_and_in_range() {
        let a = random_semigroups(&mut ChaCha8Rng::seed_from_u64(7), 20, 5, 40);
        let b = random_semigroups(&mut ChaCha8Rng::seed_from_u64(7), 20, 5, 40);
        assert_eq!(a, b);
        for h in &a {
            assert!(h.mu() >= 2 && h.mu() <= 5 && h.gcd() == 1);
            assert!(h.generators().iter().all(|&g| (2..=40).contains(&g)));
        }
    }
}
