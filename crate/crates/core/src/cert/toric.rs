use std::collections::HashSet;

use num_integer::Integer;
use serde::Serialize;

use super::{sections, CertError, Variant};

/// Distinct points of `Z^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePointSet {
    points: Vec<[i64; 2]>,
}

impl LatticePointSet {
    pub fn new(points: Vec<[i64; 2]>) -> Result<Self, CertError> {
        let mut seen = HashSet::new();
        if let Some(p) = points.iter().find(|p| !seen.insert(**p)) {
            return Err(CertError::InvalidArgument(format!("repeated point {p:?}")));
        }
        Ok(LatticePointSet { points })
    }

    pub fn points(&self) -> &[[i64; 2]] {
        &self.points
    }
}

/// Exponents `(a_1, a_2)` of the `Y_m` sections; the `y_0` exponent is
/// determined by homogeneity.
pub fn y_points(m: u32) -> Result<LatticePointSet, CertError> {
    let map = sections(m, Variant::Y)?;
    let pts = map
        .sections()
        .iter()
        .map(|s| {
            let mono = s.leading_monomial().expect("nonzero section");
            [mono.exp(1) as i64, mono.exp(2) as i64]
        })
        .collect();
    LatticePointSet::new(pts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricDegree {
    /// `2 * area` of the convex hull.
    pub normalized_volume: u64,
    /// Index in `Z^2` of the lattice spanned by differences of points.
    pub lattice_index: u64,
    pub candidate_degree: u64,
    /// The candidate, asserted only when the index is 1.
    pub degree: Option<u64>,
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Hull vertices in counter-clockwise order (monotone chain).
fn convex_hull(points: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<[i64; 2]> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &[i64; 2]>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Degree of the projective toric surface of `points` via its lattice
/// polygon: normalized area divided by the index of the lattice the
/// points generate.
pub fn toric_degree(points: &LatticePointSet) -> Result<ToricDegree, CertError> {
    let pts = points.points();
    let hull = convex_hull(pts);
    let twice_area: i64 = (0..hull.len())
        .map(|i| {
            let (a, b) = (hull[i], hull[(i + 1) % hull.len()]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum();
    if hull.len() < 3 || twice_area == 0 {
        return Err(CertError::InvalidArgument("points are collinear".into()));
    }
    // the index is the gcd of the 2x2 minors of the difference vectors
    let diffs: Vec<[i64; 2]> = pts[1..].iter().map(|p| [p[0] - pts[0][0], p[1] - pts[0][1]]).collect();
    let mut index = 0i64;
    for (i, u) in diffs.iter().enumerate() {
        for v in &diffs[i + 1..] {
            index = index.gcd(&(u[0] * v[1] - u[1] * v[0]));
        }
    }
    let volume = twice_area.unsigned_abs();
    let index = index.unsigned_abs();
    let candidate = volume / index;
    Ok(ToricDegree {
        normalized_volume: volume,
        lattice_index: index,
        candidate_degree: candidate,
        degree: (index == 1).then_some(candidate),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y6() {
        let pts = y_points(6).unwrap();
        assert_eq!(pts.points(), &[[5, 1], [1, 0], [6, 0], [3, 3], [0, 0], [0, 5]]);
        let d = toric_degree(&pts).unwrap();
        assert_eq!(d.lattice_index, 1);
        assert_eq!(d.degree, Some(33));
    }

    #[test]
    fn veronese_triangle_and_sublattice() {
        for m in 1..6i64 {
            let all: Vec<[i64; 2]> = (0..=m).flat_map(|a| (0..=m - a).map(move |b| [a, b])).collect();
            let d = toric_degree(&LatticePointSet::new(all).unwrap()).unwrap();
            assert_eq!(d.degree, Some((m * m) as u64));
            // the vertices alone span an index-m^2 sublattice: a plane
            let t = LatticePointSet::new(vec![[0, 0], [m, 0], [0, m]]).unwrap();
            let d = toric_degree(&t).unwrap();
            assert_eq!(d.normalized_volume, (m * m) as u64);
            assert_eq!((d.lattice_index, d.candidate_degree), ((m * m) as u64, 1));
        }
    }

    #[test]
    fn degenerate_inputs() {
        let line = LatticePointSet::new(vec![[0, 0], [1, 1], [2, 2]]).unwrap();
        assert!(toric_degree(&line).is_err());
        assert!(LatticePointSet::new(vec![[0, 0], [0, 0]]).is_err());
    }
}
