//! Shared numeric helpers: column statistics, standardization, medians.

use crate::matrix::Matrix;

/// Per-column mean and (population) standard deviation.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct ColumnScaler {
    pub means: Vec<f64>,
    pub stds: Vec<f64>,
}

impl ColumnScaler {
    /// Fit on the columns of `x`. Constant columns get std 1 so that
    /// transforming maps them to exactly zero instead of NaN.
    pub fn fit(x: &Matrix) -> Self {
        let n = x.n_rows().max(1) as f64;
        let d = x.n_cols();
        let mut means = vec![0.0; d];
        for row in x.rows_iter() {
            for (j, v) in row.iter().enumerate() {
                means[j] += v;
            }
        }
        for m in &mut means {
            *m /= n;
        }
        let mut vars = vec![0.0; d];
        for row in x.rows_iter() {
            for (j, v) in row.iter().enumerate() {
                let c = v - means[j];
                vars[j] += c * c;
            }
        }
        let stds = vars
            .iter()
            .map(|v| {
                let s = (v / n).sqrt();
                if s > 0.0 {
                    s
                } else {
                    1.0
                }
            })
            .collect();
        ColumnScaler { means, stds }
    }

    pub fn transform(&self, x: &Matrix) -> Matrix {
        let mut out = x.clone();
        for i in 0..out.n_rows() {
            let row = out.row_mut(i);
            for (j, v) in row.iter_mut().enumerate() {
                *v = (*v - self.means[j]) / self.stds[j];
            }
        }
        out
    }
}

/// Population variance of a slice.
pub fn variance(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n
}

/// Median of a slice (mean of the middle pair for even lengths).
pub fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    }
}

/// Index of the row maximum, ties broken toward the lowest index.
pub fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaler_centers_and_scales() {
        let x = Matrix::from_vec(3, 2, vec![1.0, 5.0, 2.0, 5.0, 3.0, 5.0]).unwrap();
        let s = ColumnScaler::fit(&x);
        let z = s.transform(&x);
        // column 0 has mean 2, column 1 is constant -> all zeros
        assert!((z.get(0, 0) + 1.2247448713915890).abs() < 1e-12);
        for i in 0..3 {
            assert_eq!(z.get(i, 1), 0.0);
        }
    }

    #[test]
    fn median_even_odd() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn argmax_tie_lowest() {
        assert_eq!(argmax(&[1.0, 3.0, 3.0]), 1);
    }
}
