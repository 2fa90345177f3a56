use icosa::klein::{klein_forward, klein_solve_numeric, rel_diff, Hp, SolverOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn forward_then_solve_recovers_the_seed() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut misses = Vec::new();
    for _ in 0..20 {
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let j = Hp::from_f64(sign * 10f64.powf(rng.gen_range(1.0..5.0)));
        let m = Hp::from_f64(rng.gen_range(-50.0..50.0));
        let n = Hp::from_f64(rng.gen_range(-200.0..200.0));
        let target = klein_forward(&j, &m, &n).unwrap();
        let sols = klein_solve_numeric(&target, 1, &SolverOptions::default()).unwrap();
        assert!(sols.iter().all(|s| s.residual < 1e-20));
        let hit = sols.iter().any(|s| rel_diff(&s.j, &j) < 1e-20 && rel_diff(&s.m, &m) < 1e-20 && rel_diff(&s.n, &n) < 1e-20);
        if !hit {
            misses.push((j.to_f64(), m.to_f64(), n.to_f64(), sols.len()));
        }
    }
    assert!(misses.is_empty(), "{misses:?}");
}
