//! Floating-point evaluation of the family residuals, independent of the
//! exact engine: dense forms over the six orbit generators, hard-coded
//! structure constants and closed-form frame derivatives.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::ansatz::{AnsatzFamily, System};

/// A form over six generators, indexed by bitmask.
pub type Dense = [f64; 64];

const ZERO: Dense = [0.0; 64];

fn sign_table() -> &'static [[i8; 64]; 64] {
    static T: OnceLock<[[i8; 64]; 64]> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = [[0i8; 64]; 64];
        for a in 0..64usize {
            for b in 0..64usize {
                if a & b != 0 {
                    continue;
                }
                // transpositions: pairs (i in a, j in b) with i > j
                let mut swaps = 0;
                for i in 0..6 {
                    if a >> i & 1 == 1 {
                        swaps += (b & ((1 << i) - 1)).count_ones();
                    }
                }
                t[a][b] = if swaps % 2 == 0 { 1 } else { -1 };
            }
        }
        t
    })
}

fn nonzero(x: &Dense) -> impl Iterator<Item = (usize, f64)> + '_ {
    x.iter().enumerate().filter(|(_, v)| **v != 0.0).map(|(i, v)| (i, *v))
}

pub fn wedge(x: &Dense, y: &Dense) -> Dense {
    let signs = sign_table();
    let ys: Vec<(usize, f64)> = nonzero(y).collect();
    let mut out = ZERO;
    for (a, u) in nonzero(x) {
        for &(b, v) in &ys {
            if a & b == 0 {
                out[a | b] += signs[a][b] as f64 * u * v;
            }
        }
    }
    out
}

fn add_into(out: &mut Dense, x: &Dense, k: f64) {
    for i in 0..64 {
        out[i] += k * x[i];
    }
}

fn one_form(c: [f64; 6]) -> Dense {
    let mut x = ZERO;
    for (i, v) in c.iter().enumerate() {
        x[1 << i] = *v;
    }
    x
}

/// d on generators, as 2-forms: index 0..2 and 3..5 are the two triples.
fn generator_d(family: AnsatzFamily) -> [Dense; 6] {
    let mut d = [ZERO; 6];
    // adds v·g_i∧g_j
    let mut put = |k: usize, i: usize, j: usize, v: f64| {
        let s = if i < j { v } else { -v };
        d[k][(1usize << i) | (1usize << j)] += s;
    };
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        match family {
            AnsatzFamily::S7Style => {
                // de_k = −2 e_ij, df_k = −2 f_ij
                put(k, i, j, -2.0);
                put(k + 3, i + 3, j + 3, -2.0);
            }
            AnsatzFamily::B7Style => {
                // dp_k = −2(p_ij + n_ij), dn_k = −2(p_i n_j − p_j n_i)
                put(k, i, j, -2.0);
                put(k, i + 3, j + 3, -2.0);
                put(k + 3, i, j + 3, -2.0);
                put(k + 3, j, i + 3, 2.0);
            }
        }
    }
    d
}

/// Sparse matrix of d on the 64 basis monomials, by Leibniz from the lowest
/// generator: d(g∧r) = dg∧r − g∧dr.
fn d_matrix(family: AnsatzFamily) -> Vec<Vec<(usize, f64)>> {
    let dg = generator_d(family);
    let mut full = vec![ZERO; 64];
    for mask in 1..64usize {
        let g = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << g);
        let mut r = ZERO;
        r[rest] = 1.0;
        let mut gen = ZERO;
        gen[1 << g] = 1.0;
        let mut out = wedge(&dg[g], &r);
        add_into(&mut out, &wedge(&gen, &full[rest]), -1.0);
        full[mask] = out;
    }
    full.iter().map(|x| nonzero(x).collect()).collect()
}

fn d_cache(family: AnsatzFamily) -> &'static Vec<Vec<(usize, f64)>> {
    static S7: OnceLock<Vec<Vec<(usize, f64)>>> = OnceLock::new();
    static B7: OnceLock<Vec<Vec<(usize, f64)>>> = OnceLock::new();
    match family {
        AnsatzFamily::S7Style => S7.get_or_init(|| d_matrix(family)),
        AnsatzFamily::B7Style => B7.get_or_init(|| d_matrix(family)),
    }
}

pub fn d_h(family: AnsatzFamily, x: &Dense) -> Dense {
    let d = d_cache(family);
    let mut out = ZERO;
    for (m, v) in nonzero(x) {
        for &(n, w) in &d[m] {
            out[n] += v * w;
        }
    }
    out
}

/// The six orbit frame 1-forms and their t-derivatives.
pub fn frame(family: AnsatzFamily, lam: f64, a: f64, b: f64, t: f64) -> ([Dense; 6], [Dense; 6]) {
    let mut x = [ZERO; 6];
    let mut dx = [ZERO; 6];
    for k in 0..3 {
        let th = t + 2.0 * PI * k as f64 / 3.0;
        let (s, c) = th.sin_cos();
        let mut v = [0.0; 6];
        let mut w = [0.0; 6];
        let mut dv = [0.0; 6];
        let mut dw = [0.0; 6];
        match family {
            AnsatzFamily::S7Style => {
                // X_{2k−1} = λf_k + λ(ac_k + b)e_k, X_{2k} = 4s_k e_k
                v[k + 3] = lam;
                v[k] = lam * (a * c + b);
                w[k] = 4.0 * s;
                dv[k] = -lam * a * s;
                dw[k] = 4.0 * c;
            }
            AnsatzFamily::B7Style => {
                // Y_{2k−1} = 2λp_k + 2λac_k n_k, Y_{2k} = b p_k + 2s_k n_k
                v[k] = 2.0 * lam;
                v[k + 3] = 2.0 * lam * a * c;
                w[k] = b;
                w[k + 3] = 2.0 * s;
                dv[k + 3] = -2.0 * lam * a * s;
                dw[k + 3] = 2.0 * c;
            }
        }
        x[2 * k] = one_form(v);
        x[2 * k + 1] = one_form(w);
        dx[2 * k] = one_form(dv);
        dx[2 * k + 1] = one_form(dw);
    }
    (x, dx)
}

/// (sign, i, j, k) for Re Ξ and Im Ξ.
const RE_TERMS: [(f64, usize, usize, usize); 4] = [(1.0, 0, 2, 4), (-1.0, 0, 3, 5), (-1.0, 1, 2, 5), (-1.0, 1, 3, 4)];
const IM_TERMS: [(f64, usize, usize, usize); 4] = [(1.0, 0, 2, 5), (1.0, 0, 3, 4), (1.0, 1, 2, 4), (-1.0, 1, 3, 5)];

fn triples(x: &[Dense; 6], terms: &[(f64, usize, usize, usize)]) -> Dense {
    let mut out = ZERO;
    for &(s, i, j, k) in terms {
        add_into(&mut out, &wedge(&wedge(&x[i], &x[j]), &x[k]), s);
    }
    out
}

fn triples_deriv(x: &[Dense; 6], dx: &[Dense; 6], terms: &[(f64, usize, usize, usize)]) -> Dense {
    let mut out = ZERO;
    for &(s, i, j, k) in terms {
        add_into(&mut out, &wedge(&wedge(&dx[i], &x[j]), &x[k]), s);
        add_into(&mut out, &wedge(&wedge(&x[i], &dx[j]), &x[k]), s);
        add_into(&mut out, &wedge(&wedge(&x[i], &x[j]), &dx[k]), s);
    }
    out
}

/// The residual of one system at one t, split as A − μB.
#[derive(Clone, Debug)]
pub struct SplitResidual {
    pub nhf: (Dense, Dense),
    pub flow: Option<(Dense, Dense)>,
}

/// A = [d ReΞ]_H, B = ½ξ² and, for the joint system, A = [dξ]_H + ∂_t ReΞ,
/// B = Im Ξ.
pub fn split_residual(family: AnsatzFamily, system: System, lam: f64, a: f64, b: f64, t: f64) -> SplitResidual {
    let (x, dx) = frame(family, lam, a, b, t);
    let mut xi = wedge(&x[0], &x[1]);
    add_into(&mut xi, &wedge(&x[2], &x[3]), 1.0);
    add_into(&mut xi, &wedge(&x[4], &x[5]), 1.0);
    let re = triples(&x, &RE_TERMS);
    let mut half_xi2 = wedge(&xi, &xi);
    half_xi2.iter_mut().for_each(|v| *v *= 0.5);
    let nhf = (d_h(family, &re), half_xi2);
    let flow = match system {
        System::Nhf => None,
        System::Joint => {
            let mut a1 = d_h(family, &xi);
            add_into(&mut a1, &triples_deriv(&x, &dx, &RE_TERMS), 1.0);
            Some((a1, triples(&x, &IM_TERMS)))
        }
    };
    SplitResidual { nhf, flow }
}

/// Residual components A − μB at (λ, a, b, μ, t), flow first.
pub fn residual_components(family: AnsatzFamily, system: System, p: [f64; 4], t: f64) -> Vec<f64> {
    let r = split_residual(family, system, p[0], p[1], p[2], t);
    let mut out = Vec::with_capacity(128);
    for (a, b) in r.flow.iter().chain(std::iter::once(&r.nhf)) {
        out.extend((0..64).map(|i| a[i] - p[3] * b[i]));
    }
    out
}

/// t-samples strictly inside (0, π/3).
pub fn t_samples(n: usize) -> Vec<f64> {
    (1..=n).map(|j| PI / 3.0 * j as f64 / (n + 1) as f64).collect()
}

/// Stacked A and B over the t-samples.
pub fn stacked(family: AnsatzFamily, system: System, lam: f64, a: f64, b: f64, ts: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let mut av = Vec::with_capacity(ts.len() * 128);
    let mut bv = Vec::with_capacity(ts.len() * 128);
    for &t in ts {
        let r = split_residual(family, system, lam, a, b, t);
        for (x, y) in r.flow.iter().chain(std::iter::once(&r.nhf)) {
            av.extend_from_slice(x);
            bv.extend_from_slice(y);
        }
    }
    (av, bv)
}

/// Least-squares μ for A − μB and the resulting max-norm residual.
pub fn best_mu(av: &[f64], bv: &[f64]) -> (f64, f64) {
    let ab: f64 = av.iter().zip(bv).map(|(x, y)| x * y).sum();
    let bb: f64 = bv.iter().map(|y| y * y).sum();
    let mu = if bb > 0.0 { ab / bb } else { 0.0 };
    let norm = av.iter().zip(bv).map(|(x, y)| (x - mu * y).abs()).fold(0.0, f64::max);
    (mu, norm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_squared_vanishes() {
        for fam in [AnsatzFamily::S7Style, AnsatzFamily::B7Style] {
            for m in 0..64 {
                let mut x = ZERO;
                x[m] = 1.0;
                let dd = d_h(fam, &d_h(fam, &x));
                assert!(dd.iter().all(|v| v.abs() < 1e-12), "{fam} {m}");
            }
        }
    }

    #[test]
    fn canonical_points_are_zeros() {
        let lam = 2.0 / 5f64.sqrt();
        let ts = t_samples(13);
        let (a, b) = stacked(AnsatzFamily::S7Style, System::Joint, lam, 2.0, 1.0, &ts);
        let (mu, norm) = best_mu(&a, &b);
        assert!(norm < 1e-12 && (mu + 6.0 / 5f64.sqrt()).abs() < 1e-12);
        let (a, b) = stacked(AnsatzFamily::B7Style, System::Joint, lam, 0.5, 0.0, &ts);
        let (mu, norm) = best_mu(&a, &b);
        assert!(norm < 1e-12 && (mu + 6.0 / 5f64.sqrt()).abs() < 1e-12);
    }
}
