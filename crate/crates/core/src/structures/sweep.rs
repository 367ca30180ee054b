//! Grid search for parameter points where a family residual vanishes for
//! some μ, refined by Levenberg–Marquardt.

use nalgebra::{Matrix4, Vector4};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ansatz::{AnsatzFamily, System};
use super::numeric::{best_mu, stacked, t_samples};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub lambda: (f64, f64),
    pub a: (f64, f64),
    pub b: (f64, f64),
    pub resolution: f64,
    pub tolerance: f64,
    pub t_samples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            lambda: (0.1, 2.0),
            a: (-3.0, 3.0),
            b: (-2.0, 2.0),
            resolution: 0.05,
            tolerance: 1e-6,
            t_samples: 13,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepZero {
    pub lambda: f64,
    pub a: f64,
    pub b: f64,
    pub mu: f64,
    pub residual: f64,
}

impl SweepZero {
    pub fn params(&self) -> [f64; 3] {
        [self.lambda, self.a, self.b]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cluster {
    pub size: usize,
    pub min: [f64; 3],
    pub max: [f64; 3],
    pub centroid: [f64; 3],
    pub mu_range: (f64, f64),
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepResult {
    pub grid_points: usize,
    pub candidates: usize,
    pub zeros: Vec<SweepZero>,
    pub clusters: Vec<Cluster>,
}

fn axis(range: (f64, f64), res: f64) -> Vec<f64> {
    if res.is_nan() || res <= 0.0 || range.1 < range.0 {
        return Vec::new();
    }
    let n = ((range.1 - range.0) / res + 1e-9).floor() as usize + 1;
    (0..n).map(|i| range.0 + i as f64 * res).collect()
}

struct Problem<'a> {
    family: AnsatzFamily,
    system: System,
    ts: &'a [f64],
}

impl Problem<'_> {
    fn split(&self, p: [f64; 3]) -> (Vec<f64>, Vec<f64>) {
        stacked(self.family, self.system, p[0], p[1], p[2], self.ts)
    }

    fn residual(&self, x: &Vector4<f64>) -> Vec<f64> {
        let (a, b) = self.split([x[0], x[1], x[2]]);
        a.iter().zip(&b).map(|(u, v)| u - x[3] * v).collect()
    }

    /// Levenberg–Marquardt on (λ, a, b, μ).
    fn refine(&self, start: [f64; 3], mu0: f64, tol: f64) -> (Vector4<f64>, f64) {
        let mut x = Vector4::new(start[0], start[1], start[2], mu0);
        let mut f = self.residual(&x);
        let sq = |f: &[f64]| f.iter().map(|v| v * v).sum::<f64>();
        let max = |f: &[f64]| f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut nu: f64 = 1e-3;
        for _ in 0..80 {
            if max(&f) < tol * 1e-3 {
                break;
            }
            let m = f.len();
            let mut cols = vec![vec![0.0; m]; 4];
            for (k, col) in cols.iter_mut().enumerate().take(3) {
                let h = 1e-6 * x[k].abs().max(1.0);
                let mut xp = x;
                let mut xm = x;
                xp[k] += h;
                xm[k] -= h;
                let fp = self.residual(&xp);
                let fm = self.residual(&xm);
                for i in 0..m {
                    col[i] = (fp[i] - fm[i]) / (2.0 * h);
                }
            }
            let (_, bv) = self.split([x[0], x[1], x[2]]);
            cols[3] = bv.iter().map(|v| -v).collect();
            let mut jtj: Matrix4<f64> = Matrix4::zeros();
            let mut jtf: Vector4<f64> = Vector4::zeros();
            for r in 0..4 {
                jtf[r] = cols[r].iter().zip(&f).map(|(u, v)| u * v).sum::<f64>();
                for c in 0..4 {
                    jtj[(r, c)] = cols[r].iter().zip(&cols[c]).map(|(u, v)| u * v).sum::<f64>();
                }
            }
            let mut improved = false;
            for _ in 0..10 {
                let mut a = jtj;
                for d in 0..4 {
                    a[(d, d)] += nu * jtj[(d, d)].max(1e-12);
                }
                let Some(step) = a.lu().solve(&-jtf) else {
                    nu *= 4.0;
                    continue;
                };
                let xn = x + step;
                let fnew = self.residual(&xn);
                if sq(&fnew) < sq(&f) {
                    x = xn;
                    f = fnew;
                    nu = (nu / 3.0).max(1e-12);
                    improved = true;
                    break;
                }
                nu *= 4.0;
            }
            if !improved {
                break;
            }
        }
        let norm = max(&f);
        (x, norm)
    }
}

/// Grid points that are local minima of the residual norm among their
/// (up to 26) neighbours.
fn local_minima(norms: &[f64], dims: [usize; 3]) -> Vec<usize> {
    let [nl, na, nb] = dims;
    let idx = |i: usize, j: usize, k: usize| (i * na + j) * nb + k;
    let mut out = Vec::new();
    for i in 0..nl {
        for j in 0..na {
            for k in 0..nb {
                let v = norms[idx(i, j, k)];
                let mut is_min = true;
                'nb: for di in -1i64..=1 {
                    for dj in -1i64..=1 {
                        for dk in -1i64..=1 {
                            let (ii, jj, kk) = (i as i64 + di, j as i64 + dj, k as i64 + dk);
                            if ii < 0 || jj < 0 || kk < 0 || ii >= nl as i64 || jj >= na as i64 || kk >= nb as i64 {
                                continue;
                            }
                            if norms[idx(ii as usize, jj as usize, kk as usize)] < v {
                                is_min = false;
                                break 'nb;
                            }
                        }
                    }
                }
                if is_min {
                    out.push(idx(i, j, k));
                }
            }
        }
    }
    out
}

/// Group zeros whose parameters differ by at most 1.5 grid cells.
pub fn cluster(zeros: &[SweepZero], res: f64) -> Vec<Cluster> {
    let n = zeros.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (zeros[i].params(), zeros[j].params());
            if (0..3).all(|k| (x[k] - y[k]).abs() <= 1.5 * res) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Cluster> = groups
        .values()
        .map(|members| {
            let mut min = [f64::INFINITY; 3];
            let mut max = [f64::NEG_INFINITY; 3];
            let mut sum = [0.0; 3];
            let mut mu_range = (f64::INFINITY, f64::NEG_INFINITY);
            for &m in members {
                let p = zeros[m].params();
                for k in 0..3 {
                    min[k] = min[k].min(p[k]);
                    max[k] = max[k].max(p[k]);
                    sum[k] += p[k];
                }
                mu_range = (mu_range.0.min(zeros[m].mu), mu_range.1.max(zeros[m].mu));
            }
            let size = members.len();
            Cluster {
                size,
                min,
                max,
                centroid: sum.map(|s| s / size as f64),
                mu_range,
            }
        })
        .collect();
    out.sort_by(|x, y| x.min.partial_cmp(&y.min).unwrap_or(std::cmp::Ordering::Equal));
    out
}

pub fn numeric_sweep(family: AnsatzFamily, system: System, cfg: &SweepConfig) -> SweepResult {
    let (ls, as_, bs) = (axis(cfg.lambda, cfg.resolution), axis(cfg.a, cfg.resolution), axis(cfg.b, cfg.resolution));
    let dims = [ls.len(), as_.len(), bs.len()];
    let total = dims.iter().product::<usize>();
    if total == 0 || cfg.t_samples == 0 {
        return SweepResult::default();
    }
    let ts = t_samples(cfg.t_samples);
    let prob = Problem { family, system, ts: &ts };
    let point = |n: usize| {
        let (i, r) = (n / (dims[1] * dims[2]), n % (dims[1] * dims[2]));
        [ls[i], as_[r / dims[2]], bs[r % dims[2]]]
    };
    let evals: Vec<(f64, f64)> = (0..total)
        .into_par_iter()
        .map(|n| {
            let (a, b) = prob.split(point(n));
            best_mu(&a, &b)
        })
        .collect();
    let norms: Vec<f64> = evals.iter().map(|e| e.1).collect();
    // grid nodes already at a zero count even when a neighbour ties lower
    let mut candidates = local_minima(&norms, dims);
    candidates.extend((0..total).filter(|&n| norms[n] < cfg.tolerance * 1e-3));
    candidates.sort_unstable();
    candidates.dedup();
    let mut zeros: Vec<SweepZero> = candidates
        .par_iter()
        .filter_map(|&n| {
            let start = point(n);
            let (x, norm) = if evals[n].1 < cfg.tolerance * 1e-3 {
                (Vector4::new(start[0], start[1], start[2], evals[n].0), evals[n].1)
            } else {
                prob.refine(start, evals[n].0, cfg.tolerance)
            };
            let near = (0..3).all(|k| (x[k] - start[k]).abs() <= cfg.resolution * (1.0 + 1e-9));
            (norm < cfg.tolerance && near).then(|| SweepZero {
                lambda: x[0],
                a: x[1],
                b: x[2],
                mu: x[3],
                residual: norm,
            })
        })
        .collect();
    zeros.sort_by(|x, y| x.params().partial_cmp(&y.params()).unwrap_or(std::cmp::Ordering::Equal));
    let clusters = cluster(&zeros, cfg.resolution);
    SweepResult {
        grid_points: total,
        candidates: candidates.len(),
        zeros,
        clusters,
    }
}

/// Whether a parameter point lies on the solution set claimed for the
/// family and system, within `eps`; `None` when nothing is claimed.
pub fn on_claimed_variety(family: AnsatzFamily, system: System, p: [f64; 3], eps: f64) -> Option<bool> {
    let [l, a, b] = p;
    let near = |x: f64, y: f64| (x - y).abs() < eps;
    match (family, system) {
        (AnsatzFamily::S7Style, System::Nhf) => {
            Some((near(a, 0.0) && (near(b, 0.0) || near(b, -1.0))) || (near(a.abs(), 2.0) && near(b, 1.0)))
        }
        (AnsatzFamily::B7Style, System::Nhf) => Some(
            (near(l * l * (4.0 - a * a), 3.0) && near(b, 0.0))
                || (near(l, 0.5) && near(a, 2.0) && near(b.abs(), 3f64.sqrt())),
        ),
        (AnsatzFamily::B7Style, System::Joint) => {
            Some(near(l.abs(), 2.0 / 5f64.sqrt()) && near(a, 0.5) && near(b, 0.0))
        }
        (AnsatzFamily::S7Style, System::Joint) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid() {
        let cfg = SweepConfig {
            lambda: (1.0, 0.5),
            ..SweepConfig::default()
        };
        let r = numeric_sweep(AnsatzFamily::S7Style, System::Nhf, &cfg);
        assert_eq!(r.grid_points, 0);
        assert!(r.zeros.is_empty());
    }

    #[test]
    fn small_grid_around_b7_point() {
        let cfg = SweepConfig {
            lambda: (0.8, 1.0),
            a: (0.4, 0.6),
            b: (-0.1, 0.1),
            ..SweepConfig::default()
        };
        let r = numeric_sweep(AnsatzFamily::B7Style, System::Joint, &cfg);
        assert!(!r.zeros.is_empty());
        for z in &r.zeros {
            assert_eq!(on_claimed_variety(AnsatzFamily::B7Style, System::Joint, z.params(), 1e-4), Some(true));
        }
        assert_eq!(r.clusters.len(), 1);
    }
}
