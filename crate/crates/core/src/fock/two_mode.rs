use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{FockDensityMatrix, OracleConfig};
use crate::error::{Error, Result};
use crate::gaussian::BeamSplitter;

/// Values of `n1` in `|n1, total - n1>` with both occupations below `dim`.
fn kept_levels(total: usize, dim: usize) -> std::ops::RangeInclusive<usize> {
    total.saturating_sub(dim - 1)..=total.min(dim - 1)
}

/// Beam-splitter unitary on the fixed-total-photon block spanned by
/// `|j, total - j>`, `j = 0..=total`. The generator
/// `theta (e^{i phi} a1^dag a2 - e^{-i phi} a1 a2^dag)` maps the coherent
/// product `|alpha_1, alpha_2>` onto `|M alpha>` with `M` the amplitude
/// matrix of [`BeamSplitter::matrix`].
fn block_unitary(total: usize, bs: &BeamSplitter) -> DMatrix<Complex64> {
    let size = total + 1;
    let e = Complex64::from_polar(bs.theta(), bs.phi());
    let mut g = DMatrix::zeros(size, size);
    for j in 0..total {
        let amp = (((j + 1) * (total - j)) as f64).sqrt();
        g[(j + 1, j)] = e * amp;
        g[(j, j + 1)] = -e.conj() * amp;
    }
    g.exp()
}

/// `P U (rho_1 (x) rho_2) U^dag P` with `P` the projector onto the first
/// `cfg.dim` levels of each output mode.
///
/// The inputs may carry more levels than the output (up to `2 dim - 1` is
/// useful): output states with `n1 + n2 = N` are fed by every input pair with
/// the same total, including pairs where one occupation exceeds the output
/// cutoff. The unitary conserves total photon number and is exponentiated
/// exactly on each such block, so the only approximations are the input
/// truncation and the final projection. The probability removed by the
/// projection is left in the result as `1 - trace` and is not an error.
pub fn fock_beam_splitter(
    rho1: &FockDensityMatrix,
    rho2: &FockDensityMatrix,
    bs: &BeamSplitter,
    cfg: &OracleConfig,
) -> Result<FockDensityMatrix> {
    cfg.validate()?;
    if rho1.modes() != 1 || rho2.modes() != 1 {
        return Err(Error::Dimension(
            "beam splitter takes two single-mode inputs".into(),
        ));
    }
    if rho1.dim() != rho2.dim() || rho1.dim() < cfg.dim {
        return Err(Error::Dimension(format!(
            "input cutoffs {} and {} must be equal and at least the output cutoff {}",
            rho1.dim(),
            rho2.dim(),
            cfg.dim
        )));
    }
    Ok(mix(rho1, rho2, bs, cfg.dim))
}

struct Block {
    total: usize,
    /// first input `n1` of the block
    in_lo: usize,
    /// output row/column indices `n1 * dim + n2`
    out_idx: Vec<usize>,
    /// rows: kept output levels, columns: available input levels
    w: DMatrix<Complex64>,
}

fn mix(
    rho1: &FockDensityMatrix,
    rho2: &FockDensityMatrix,
    bs: &BeamSplitter,
    dim: usize,
) -> FockDensityMatrix {
    let din = rho1.dim();
    let blocks: Vec<Block> = (0..=2 * (dim - 1))
        .map(|total| {
            let u = block_unitary(total, bs);
            let outs = kept_levels(total, dim);
            let ins = kept_levels(total, din);
            let w = u
                .view(
                    (*outs.start(), *ins.start()),
                    (outs.clone().count(), ins.clone().count()),
                )
                .into_owned();
            Block {
                total,
                in_lo: *ins.start(),
                out_idx: outs.map(|j| j * dim + (total - j)).collect(),
                w,
            }
        })
        .collect();

    let (r1, r2) = (rho1.matrix(), rho2.matrix());
    let mut out = DMatrix::zeros(dim * dim, dim * dim);
    for bn in &blocks {
        for bm in &blocks {
            let x = DMatrix::from_fn(bn.w.ncols(), bm.w.ncols(), |j, k| {
                let (n1, m1) = (bn.in_lo + j, bm.in_lo + k);
                r1[(n1, m1)] * r2[(bn.total - n1, bm.total - m1)]
            });
            if x.iter().all(|z| z.re == 0.0 && z.im == 0.0) {
                continue;
            }
            let y = &bn.w * x * bm.w.adjoint();
            for (a, &r) in bn.out_idx.iter().enumerate() {
                for (b, &c) in bm.out_idx.iter().enumerate() {
                    out[(r, c)] = y[(a, b)];
                }
            }
        }
    }
    FockDensityMatrix::from_parts(out, dim, 2)
}

/// Transpose of the second mode: `<n1 n2|rho|m1 m2> -> <n1 m2|rho|m1 n2>`.
pub fn partial_transpose(rho: &FockDensityMatrix) -> DMatrix<Complex64> {
    let d = rho.dim();
    let m = rho.matrix();
    DMatrix::from_fn(d * d, d * d, |row, col| {
        let (n1, m2) = (row / d, row % d);
        let (m1, n2) = (col / d, col % d);
        m[(n1 * d + n2, m1 * d + m2)]
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockNegativity {
    /// `max{0, raw}`.
    pub value: f64,
    /// `log2(||rho^PT||_1 / tr rho)`, renormalized for truncation loss.
    pub raw: f64,
    pub trace_norm: f64,
    pub trace: f64,
}

/// Logarithmic negativity from the eigenvalues of the partial transpose.
pub fn fock_log_negativity(rho: &FockDensityMatrix) -> Result<FockNegativity> {
    if rho.modes() != 2 {
        return Err(Error::Dimension("negativity needs a two-mode state".into()));
    }
    let dev = rho.hermitian_deviation();
    if dev > 1e-10 {
        return Err(Error::NotHermitian(dev));
    }
    let pt = partial_transpose(rho);
    let trace_norm = trace_norm_hermitian(&pt, rho.dim());
    let trace = rho.trace();
    let raw = (trace_norm / trace).log2();
    Ok(FockNegativity {
        value: raw.max(0.0),
        raw,
        trace_norm,
        trace,
    })
}

/// Sum of absolute eigenvalues. Zero-mean Gaussian inputs and the
/// number-conserving splitter keep total photon parity, and so does the
/// partial transpose; when the matrix has no parity-mixing entries the two
/// parity sectors are diagonalized separately.
fn trace_norm_hermitian(m: &DMatrix<Complex64>, d: usize) -> f64 {
    let parity = |i: usize| (i / d + i % d) % 2;
    let (even, odd): (Vec<usize>, Vec<usize>) = (0..m.nrows()).partition(|&i| parity(i) == 0);
    let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mixing = even
        .iter()
        .flat_map(|&r| odd.iter().map(move |&c| (r, c)))
        .map(|(r, c)| m[(r, c)].norm())
        .fold(0.0, f64::max);
    let abs_sum = |h: DMatrix<Complex64>| -> f64 {
        let h = (&h + h.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = if h.iter().all(|z| z.im == 0.0) {
            // real phases: the real symmetric solver is several times faster
            h.map(|z| z.re).symmetric_eigenvalues()
        } else {
            h.symmetric_eigenvalues()
        };
        eig.iter().map(|x| x.abs()).sum()
    };
    if mixing <= 1e-15 * scale {
        let block = |idx: &[usize]| m.select_rows(idx.iter()).select_columns(idx.iter());
        abs_sum(block(&even)) + abs_sum(block(&odd))
    } else {
        abs_sum(m.clone())
    }
}
