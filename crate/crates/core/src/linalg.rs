//! Small dense complex linear algebra helpers for 25x25 operators.
//!
//! Everything here is deliberately dense and allocation-light; the systems
//! are tiny (two atoms, 25 basis states) so a hand-rolled cyclic Jacobi
//! eigensolver beats pulling in a LAPACK binding.

use ndarray::Array2;
use num_complex::Complex64;

pub type C64 = Complex64;

/// Conjugate transpose.
pub fn dagger(m: &Array2<C64>) -> Array2<C64> {
    m.t().mapv(|z| z.conj())
}

/// Matrix trace.
pub fn trace(m: &Array2<C64>) -> C64 {
    m.diag().sum()
}

/// Largest elementwise magnitude of `m - m†`.
pub fn max_nonhermiticity(m: &Array2<C64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (m[[i, j]] - m[[j, i]].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// `(m + m†) / 2`.
pub fn hermitize(m: &Array2<C64>) -> Array2<C64> {
    let md = dagger(m);
    (m + &md) * C64::new(0.5, 0.0)
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// ascending. The input is assumed Hermitian; only the upper triangle drives
/// the rotations.
pub fn hermitian_eigenvalues(m: &Array2<C64>) -> Vec<f64> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "square matrix required");
    let mut a: Vec<C64> = m.iter().cloned().collect();
    let idx = |i: usize, j: usize| i * n + j;

    let norm2: f64 = a.iter().map(|z| z.norm_sqr()).sum();
    let stop = norm2 * 1e-30 + f64::MIN_POSITIVE;

    for _sweep in 0..60 {
        let mut off2 = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off2 += a[idx(p, q)].norm_sqr();
            }
        }
        if off2 <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                let r = apq.norm();
                if r * r <= stop / (n * n) as f64 {
                    continue;
                }
                let phase = apq / r;
                let app = a[idx(p, p)].re;
                let aqq = a[idx(q, q)].re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let se = phase * s;
                // column rotation: A <- A J
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = akp * c - akq * se.conj();
                    a[idx(k, q)] = akp * se + akq * c;
                }
                // row rotation: A <- J† A
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = apk * c - aqk * se;
                    a[idx(q, k)] = apk * se.conj() + aqk * c;
                }
            }
        }
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| a[idx(i, i)].re).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(m: &Array2<C64>) -> f64 {
    hermitian_eigenvalues(m)[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, rng: &mut impl Rng) -> Array2<C64> {
        let mut m = Array2::from_elem((n, n), C64::new(0.0, 0.0));
        for i in 0..n {
            m[[i, i]] = C64::new(rng.gen_range(-2.0..2.0), 0.0);
            for j in (i + 1)..n {
                let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                m[[i, j]] = z;
                m[[j, i]] = z.conj();
            }
        }
        m
    }

    #[test]
    fn diagonal_matrix() {
        let m = array![
            [C64::new(3.0, 0.0), C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), C64::new(-1.0, 0.0)]
        ];
        let e = hermitian_eigenvalues(&m);
        assert_abs_diff_eq!(e[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e[1], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn two_by_two_analytic() {
        // [[a, b], [b*, d]] has eigenvalues (a+d)/2 ± sqrt(((a-d)/2)^2 + |b|^2)
        let b = C64::new(0.3, -0.7);
        let m = array![[C64::new(1.0, 0.0), b], [b.conj(), C64::new(-0.5, 0.0)]];
        let disc = (0.75f64.powi(2) + b.norm_sqr()).sqrt();
        let e = hermitian_eigenvalues(&m);
        assert_abs_diff_eq!(e[0], 0.25 - disc, epsilon = 1e-13);
        assert_abs_diff_eq!(e[1], 0.25 + disc, epsilon = 1e-13);
    }

    #[test]
    fn moments_match_traces() {
        // tr A^k = sum of lambda^k is an eigensolver-independent oracle.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [5usize, 25] {
            let m = random_hermitian(n, &mut rng);
            let e = hermitian_eigenvalues(&m);
            let m2 = m.dot(&m);
            let m3 = m2.dot(&m);
            let scale = e.iter().map(|x| x.abs()).fold(1.0f64, f64::max);
            assert_abs_diff_eq!(
                e.iter().sum::<f64>(),
                trace(&m).re,
                epsilon = 1e-11 * scale
            );
            assert_abs_diff_eq!(
                e.iter().map(|x| x * x).sum::<f64>(),
                trace(&m2).re,
                epsilon = 1e-10 * scale * scale
            );
            assert_abs_diff_eq!(
                e.iter().map(|x| x * x * x).sum::<f64>(),
                trace(&m3).re,
                epsilon = 1e-9 * scale * scale * scale
            );
        }
    }

    #[test]
    fn projector_eigenvalues() {
        // psi psi† has eigenvalues {1, 0, ..., 0}
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 8;
        let mut psi: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        psi.iter_mut().for_each(|z| *z /= norm);
        let mut m = Array2::from_elem((n, n), C64::new(0.0, 0.0));
        for i in 0..n {
            for j in 0..n {
                m[[i, j]] = psi[i] * psi[j].conj();
            }
        }
        let e = hermitian_eigenvalues(&m);
        assert_abs_diff_eq!(e[n - 1], 1.0, epsilon = 1e-12);
        for v in &e[..n - 1] {
            assert_abs_diff_eq!(*v, 0.0, epsilon = 1e-12);
        }
        assert!(min_eigenvalue(&m) > -1e-12);
    }

    #[test]
    fn hermitize_and_nonhermiticity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut m = random_hermitian(4, &mut rng);
        assert!(max_nonhermiticity(&m) < 1e-15);
        m[[0, 1]] += C64::new(1e-3, 0.0);
        assert!(max_nonhermiticity(&m) > 0.9e-3);
        let h = hermitize(&m);
        assert!(max_nonhermiticity(&h) < 1e-15);
    }
}
