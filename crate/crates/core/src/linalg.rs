//! Small dimension-generic vector helpers over `&[f64]`.

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    norm_sq(a).sqrt()
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

pub(crate) fn axpy(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub(crate) fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub(crate) fn dist(a: &[f64], b: &[f64]) -> f64 {
    dist_sq(a, b).sqrt()
}

/// Unit vector along `a`; `None` when `|a|` is below `eps`.
pub(crate) fn normalized(a: &[f64], eps: f64) -> Option<Vec<f64>> {
    let n = norm(a);
    if n <= eps {
        None
    } else {
        Some(scale(a, 1.0 / n))
    }
}

/// Any unit vector orthogonal to `a` (which must be nonzero).
pub(crate) fn any_orthogonal(a: &[f64]) -> Vec<f64> {
    let n = a.len();
    debug_assert!(n >= 2);
    // Pick the coordinate axis least aligned with `a` and project it out.
    let (k, _) = a
        .iter()
        .enumerate()
        .min_by(|(_, x), (_, y)| x.abs().partial_cmp(&y.abs()).unwrap())
        .unwrap();
    let mut e = vec![0.0; n];
    e[k] = 1.0;
    let na = norm_sq(a);
    let proj = dot(&e, a) / na;
    let v = axpy(&e, -proj, a);
    normalized(&v, 0.0).unwrap()
}
