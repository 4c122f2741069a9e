//! Seeded inputs shared by the benchmarks under `benches/`.

use specker_core::sample::{self, SampleRng};
use specker_core::{Algebra, FlatElem, PerpElem, ProxRel, Scalar};

/// An algebra with `n` atoms named `a0, a1, ...`.
pub fn algebra(n: usize) -> Algebra {
    let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    Algebra::new(&names).expect("at least one atom")
}

pub fn perp_pairs<D: Scalar>(
    alg: &Algebra,
    count: usize,
    seed: u64,
) -> Vec<(PerpElem<D>, PerpElem<D>)> {
    let mut rng: SampleRng = sample::rng(seed);
    (0..count)
        .map(|_| {
            (
                sample::random_perp(&mut rng, alg, 100),
                sample::random_perp(&mut rng, alg, 100),
            )
        })
        .collect()
}

pub fn flat_pairs<D: Scalar>(
    alg: &Algebra,
    count: usize,
    seed: u64,
) -> Vec<(FlatElem<D>, FlatElem<D>)> {
    let mut rng: SampleRng = sample::rng(seed);
    (0..count)
        .map(|_| {
            (
                sample::random_flat(&mut rng, alg, 100),
                sample::random_flat(&mut rng, alg, 100),
            )
        })
        .collect()
}

/// A sum of products of generators, `width` terms long.
pub fn polynomial(alg: &Algebra, width: usize) -> String {
    let n = alg.atom_count();
    (0..width)
        .map(|i| format!("{}*x_a{}*x_a{}", i % 7 + 1, i % n, (i * 3 + 1) % n))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn order_relation(alg: &Algebra) -> ProxRel {
    ProxRel::leq(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use specker_core::presentation::normalize_text;
    use specker_core::Int;

    #[test]
    fn fixtures_are_usable() {
        let alg = algebra(4);
        assert_eq!(perp_pairs::<Int>(&alg, 3, 0).len(), 3);
        assert_eq!(flat_pairs::<Int>(&alg, 3, 0), flat_pairs::<Int>(&alg, 3, 0));
        assert!(normalize_text::<Int>(&polynomial(&alg, 10), &alg).is_ok());
    }
}
