use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Truncated annihilation operator, `a|n> = sqrt(n)|n-1>`.
pub fn annihilation(dim: usize) -> DMatrix<Complex64> {
    let mut a = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        a[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    a
}

pub fn number_operator(dim: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |r, c| {
        if r == c {
            Complex64::new(r as f64, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `S(zeta) = exp((zeta* a^2 - zeta a^dag^2) / 2)` from the truncated
/// generator. Entries near the cutoff are inaccurate; callers work in a
/// padded space and keep only the low corner.
pub fn squeeze_operator(zeta: Complex64, dim: usize) -> DMatrix<Complex64> {
    let a = annihilation(dim);
    let a2 = &a * &a;
    let ad2 = a2.adjoint();
    let generator = (a2 * zeta.conj() - ad2 * zeta) * Complex64::new(0.5, 0.0);
    // the generator only couples n to n +- 2: exponentiate each parity block
    let mut out = DMatrix::zeros(dim, dim);
    for parity in 0..2 {
        let idx: Vec<usize> = (parity..dim).step_by(2).collect();
        if idx.is_empty() {
            continue;
        }
        let block = generator
            .select_rows(idx.iter())
            .select_columns(idx.iter())
            .exp();
        for (i, &r) in idx.iter().enumerate() {
            for (j, &c) in idx.iter().enumerate() {
                out[(r, c)] = block[(i, j)];
            }
        }
    }
    out
}

/// Coherent state `|alpha>` truncated to `dim` levels (not renormalized).
pub fn coherent_state(alpha: Complex64, dim: usize) -> DVector<Complex64> {
    let mut v = DVector::zeros(dim);
    let mut amp = Complex64::new((-0.5 * alpha.norm_sqr()).exp(), 0.0);
    for n in 0..dim {
        if n > 0 {
            amp *= alpha / (n as f64).sqrt();
        }
        v[n] = amp;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_away_from_cutoff() {
        let d = 8;
        let a = annihilation(d);
        let comm = &a * a.adjoint() - a.adjoint() * &a;
        for n in 0..d - 1 {
            assert!((comm[(n, n)].re - 1.0).abs() < 1e-14);
        }
        let n_op = a.adjoint() * &a;
        assert!((n_op - number_operator(d)).norm() < 1e-13);
    }

    #[test]
    fn squeeze_operator_is_unitary() {
        let s = squeeze_operator(Complex64::from_polar(0.6, 0.4), 30);
        let id = DMatrix::<Complex64>::identity(30, 30);
        assert!((s.adjoint() * &s - id).norm() < 1e-10);
    }

    #[test]
    fn parity_blocks_match_full_exponential() {
        let d = 25;
        let zeta = Complex64::from_polar(0.7, 2.1);
        let a = annihilation(d);
        let a2 = &a * &a;
        let g = (&a2 * zeta.conj() - a2.adjoint() * zeta) * Complex64::new(0.5, 0.0);
        assert!((squeeze_operator(zeta, d) - g.exp()).norm() < 1e-12);
    }

    #[test]
    fn squeezed_vacuum_moments() {
        let r: f64 = 0.5;
        let phi: f64 = 0.9;
        let d = 80;
        let s = squeeze_operator(Complex64::from_polar(r, phi), d);
        let vac = s.column(0).into_owned();
        let a = annihilation(d);
        let n = (vac.adjoint() * a.adjoint() * &a * &vac)[(0, 0)].re;
        assert!((n - r.sinh().powi(2)).abs() < 1e-10);
        let a2 = (vac.adjoint() * &a * &a * &vac)[(0, 0)];
        let expected = -Complex64::from_polar(r.sinh() * r.cosh(), phi);
        assert!((a2 - expected).norm() < 1e-10);
    }

    #[test]
    fn coherent_state_is_eigenvector() {
        let alpha = Complex64::new(0.7, -0.4);
        let v = coherent_state(alpha, 40);
        assert!((v.norm() - 1.0).abs() < 1e-12);
        let av = annihilation(40) * &v;
        for n in 0..30 {
            assert!((av[n] - alpha * v[n]).norm() < 1e-12);
        }
    }
}
