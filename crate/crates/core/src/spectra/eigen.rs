//! Symmetric eigensolvers: cyclic Jacobi for dense matrices and Lanczos with
//! full reorthogonalization for the extremes of larger ones.

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations. Returns the eigenvalues and the final off-diagonal norm.
pub fn jacobi_eigenvalues(a: &[Vec<f64>], tol: f64) -> (Vec<f64>, f64) {
    let (ev, _, r) = jacobi(a, tol, false);
    (ev, r)
}

/// Eigenvalues ascending with unit eigenvectors (`vectors[k]` belongs to
/// `values[k]`), and the final off-diagonal norm.
pub fn jacobi_eigensystem(a: &[Vec<f64>], tol: f64) -> (Vec<f64>, Vec<Vec<f64>>, f64) {
    jacobi(a, tol, true)
}

fn jacobi(a: &[Vec<f64>], tol: f64, want_vectors: bool) -> (Vec<f64>, Vec<Vec<f64>>, f64) {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    // columns of `v` are the eigenvectors
    let mut v: Vec<Vec<f64>> = if want_vectors {
        (0..n).map(|i| (0..n).map(|j| (i == j) as u8 as f64).collect()).collect()
    } else {
        Vec::new()
    };
    let off = |m: &[Vec<f64>]| {
        let mut s = 0.0;
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    s += x * x;
                }
            }
        }
        s.sqrt()
    };
    let scale = m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    for _sweep in 0..100 {
        if off(&m) <= tol * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (m[k][p], m[k][q]);
                    m[k][p] = c * akp - s * akq;
                    m[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * apk - s * aqk;
                    m[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let residual = off(&m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| m[x][x].partial_cmp(&m[y][y]).unwrap());
    let values = order.iter().map(|&i| m[i][i]).collect();
    let vectors = if want_vectors {
        order.iter().map(|&i| v.iter().map(|row| row[i]).collect()).collect()
    } else {
        Vec::new()
    };
    (values, vectors, residual)
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn normalize(x: &mut [f64]) -> f64 {
    let n = dot(x, x).sqrt();
    x.iter_mut().for_each(|v| *v /= n);
    n
}

/// Ritz values of a Lanczos run, ascending, with residual bounds
/// `|β_k · s_k|`.
#[derive(Clone, Debug)]
pub struct LanczosResult {
    pub ritz: Vec<f64>,
    pub residuals: Vec<f64>,
}

/// Lanczos on the symmetric operator `apply`, restricted to the orthogonal
/// complement of `deflate`, stopping once the `top` largest and the smallest
/// Ritz values have residuals below `tol`.
pub fn lanczos<A>(
    n: usize,
    apply: A,
    deflate: &[Vec<f64>],
    max_steps: usize,
    top: usize,
    tol: f64,
    seed: u64,
) -> LanczosResult
where
    A: Fn(&[f64]) -> Vec<f64>,
{
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let project = |x: &mut Vec<f64>, basis: &[Vec<f64>]| {
        for _ in 0..2 {
            for b in basis {
                let c = dot(x, b);
                x.iter_mut().zip(b).for_each(|(v, w)| *v -= c * w);
            }
        }
    };
    let mut q: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() - 0.5).collect();
    project(&mut q, deflate);
    normalize(&mut q);
    let mut basis: Vec<Vec<f64>> = vec![q];
    let mut alphas = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let limit = max_steps.min(n.saturating_sub(deflate.len())).max(1);
    loop {
        let k = alphas.len();
        let mut w = apply(&basis[k]);
        alphas.push(dot(&w, &basis[k]));
        project(&mut w, deflate);
        project(&mut w, &basis);
        let b = dot(&w, &w).sqrt();
        let m = alphas.len();
        if m % 10 != 0 && b >= 1e-12 && m < limit {
            betas.push(b);
            w.iter_mut().for_each(|v| *v /= b);
            basis.push(w);
            continue;
        }
        let res = tridiagonal_ritz(&alphas, &betas, b);
        let want = top.min(m);
        let done = (m - want..m).chain([0]).all(|i| res.residuals[i] <= tol);
        if (done && m > want + 1) || b < 1e-12 || m >= limit {
            return res;
        }
        betas.push(b);
        w.iter_mut().for_each(|v| *v /= b);
        basis.push(w);
    }
}

/// Ritz values of the tridiagonal matrix with the given diagonal and
/// off-diagonal, each with `|β · last component of its eigenvector|`.
fn tridiagonal_ritz(alphas: &[f64], betas: &[f64], beta_next: f64) -> LanczosResult {
    let k = alphas.len();
    let mut t = vec![vec![0.0; k]; k];
    for i in 0..k {
        t[i][i] = alphas[i];
        if i + 1 < k {
            t[i][i + 1] = betas[i];
            t[i + 1][i] = betas[i];
        }
    }
    let (ritz, vectors, _) = jacobi_eigensystem(&t, 1e-14);
    let residuals = vectors.iter().map(|s| beta_next * s[k - 1].abs()).collect();
    LanczosResult { ritz, residuals }
}
