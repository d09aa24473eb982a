//! Convex hulls of planar point sets and tolerant membership tests.

use num_complex::Complex64;

/// Convex hull of a finite point set, counter-clockwise, without repeated
/// or collinear vertices. Degenerate sets collapse to a point or a segment.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexHull {
    Empty,
    Point(Complex64),
    Segment(Complex64, Complex64),
    Polygon(Vec<Complex64>),
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

impl ConvexHull {
    /// Andrew's monotone chain.
    pub fn new(points: &[Complex64]) -> Self {
        let mut pts: Vec<Complex64> = points.to_vec();
        pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        pts.dedup();
        match pts.len() {
            0 => return ConvexHull::Empty,
            1 => return ConvexHull::Point(pts[0]),
            _ => {}
        }
        let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
        for &p in pts.iter() {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        let lower_len = hull.len() + 1;
        for &p in pts.iter().rev().skip(1) {
            while hull.len() >= lower_len
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
        if hull.len() == 2 {
            ConvexHull::Segment(hull[0], hull[1])
        } else {
            ConvexHull::Polygon(hull)
        }
    }

    pub fn vertices(&self) -> Vec<Complex64> {
        match self {
            ConvexHull::Empty => Vec::new(),
            ConvexHull::Point(p) => vec![*p],
            ConvexHull::Segment(a, b) => vec![*a, *b],
            ConvexHull::Polygon(v) => v.clone(),
        }
    }

    /// Euclidean distance from `p` to the hull; zero inside. Infinite for
    /// the empty hull.
    pub fn distance(&self, p: Complex64) -> f64 {
        match self {
            ConvexHull::Empty => f64::INFINITY,
            ConvexHull::Point(a) => (p - a).norm(),
            ConvexHull::Segment(a, b) => segment_distance(p, *a, *b),
            ConvexHull::Polygon(v) => {
                let n = v.len();
                let inside = (0..n).all(|i| cross(v[i], v[(i + 1) % n], p) >= 0.0);
                if inside {
                    0.0
                } else {
                    (0..n)
                        .map(|i| segment_distance(p, v[i], v[(i + 1) % n]))
                        .fold(f64::INFINITY, f64::min)
                }
            }
        }
    }

    /// Membership with an outward slack of `tol`.
    pub fn contains(&self, p: Complex64, tol: f64) -> bool {
        self.distance(p) <= tol
    }
}
