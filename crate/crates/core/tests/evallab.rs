use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ly_polyid::evallab::{bundled_algebras, check_identity, reductive_sl4, validate, AlgebraSC, Evaluable, Vector};
use ly_polyid::liftgen::{generate, Seed};
use ly_polyid::rat;

#[test]
fn generated_identities_hold_in_small_algebras() {
    let algebras: Vec<_> = bundled_algebras().into_iter().filter(|b| b.algebra.dim() <= 3).collect();
    assert!(algebras.len() >= 3);
    for n in 3..=5 {
        for (i, id) in generate(n).unwrap().identities.iter().enumerate() {
            for b in &algebras {
                let out = check_identity(&id.polynomial, &b.algebra, 4, i as u64).unwrap();
                assert!(out.passed, "degree {n} identity {i} ({}) on {}: {:?}", id.lineage, b.name, out.counterexample);
                assert_eq!(out.basis_tuples, b.algebra.dim().pow(n as u32));
            }
        }
    }
}

fn vanishes_at_random(p: &impl Evaluable, a: &AlgebraSC, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let args: Vec<Vector> = (0..p.degree())
            .map(|_| (0..a.dim()).map(|_| rat(rng.gen_range(-3..=3), 1)).collect())
            .collect();
        p.evaluate(a, &args).unwrap().iter().all(Zero::is_zero)
    })
}

#[test]
fn seeds_hold_in_the_reductive_algebra() {
    let a = reductive_sl4();
    assert!(validate(&a).is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for s in Seed::ALL {
        assert!(vanishes_at_random(&s.polynomial(), &a, &mut rng, 3), "{}", s.name());
    }
}

#[test]
fn rescaled_triple_breaks_only_the_inhomogeneous_axiom() {
    // Every defining identity except the first is homogeneous in the triple
    // product, so doubling it only breaks the first.
    let mut a = reductive_sl4();
    for (i, j, k, l, c) in a.trilinear_entries() {
        a.set_t(i, j, k, l, c * rat(2, 1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let failing: Vec<Seed> = Seed::ALL
        .into_iter()
        .filter(|s| !vanishes_at_random(&s.polynomial(), &a, &mut rng, 2))
        .collect();
    assert_eq!(failing, [Seed::F]);
}
