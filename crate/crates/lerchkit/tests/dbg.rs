#[test]
fn dbg_worst_recurrence() {
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use lerchkit::specfun::hurwitz_zeta;
    use lerchkit::complex::cpow_principal;
    let c = Complex64::new;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut n = 0usize;
    let mut worst = 0.0f64;
    let mut wargs = (c(0.,0.), c(0.,0.));
    while n < 200 {
        let s = c(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0));
        if s.norm() > 20.0 || (s - c(1.0, 0.0)).norm() < 0.05 { continue; }
        let v = c(rng.gen_range(0.1..20.0), rng.gen_range(-3.0..3.0));
        let (a, b) = match (hurwitz_zeta(s, v), hurwitz_zeta(s, v + 1.0)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        let vs = cpow_principal(v, -s).unwrap();
        let residual = (a.value - b.value - vs).norm();
        let scale = a.value.norm().max(b.value.norm()).max(vs.norm()).max(1e-300);
        if residual/scale > worst { worst = residual/scale; wargs = (s, v); }
        n += 1;
    }
    let (s, v) = wargs;
    let a = hurwitz_zeta(s, v).unwrap();
    let b = hurwitz_zeta(s, v + 1.0).unwrap();
    panic!("worst {:.3e} at s={} v={} |zeta(s,v)|={:.3e} est_a={:.3e} est_b={:.3e} strat={:?}",
        worst, s, v, a.value.norm(), a.est_error, b.est_error, a.strategy);
}
