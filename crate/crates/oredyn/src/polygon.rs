//! Convex lattice polygons in Z^2: hulls, Minkowski sums, exact lattice
//! point counts by row scan with rational edge intersections.

use crate::{Error, IntMat, Integer, Rational, Result};
use num_integer::Integer as NumInteger;
use num_traits::{Signed, Zero};

type Pt = (Integer, Integer);

/// A convex polygon with integer vertices, stored as the counterclockwise
/// hull with collinear vertices removed. Degenerate cases (a point, a
/// segment) keep one or two vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticePolygon {
    vertices: Vec<Pt>,
}

fn cross(o: &Pt, a: &Pt, b: &Pt) -> Integer {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

impl LatticePolygon {
    /// Convex hull of a set of lattice points (monotone chain).
    pub fn hull_of(points: &[Pt]) -> LatticePolygon {
        let mut pts: Vec<Pt> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() <= 2 {
            return LatticePolygon { vertices: pts };
        }
        let mut lower: Vec<Pt> = Vec::new();
        for p in &pts {
            while lower.len() >= 2
                && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Integer::zero()
            {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<Pt> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Integer::zero()
            {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        if lower.len() <= 2 {
            // All points collinear; keep the extreme pair.
            let mut seg = vec![pts.first().unwrap().clone(), pts.last().unwrap().clone()];
            seg.sort();
            seg.dedup();
            return LatticePolygon { vertices: seg };
        }
        LatticePolygon { vertices: lower }
    }

    /// Accept a vertex list that already describes a convex polygon
    /// (collinear vertices along edges are tolerated); reject anything else.
    pub fn from_convex_vertices(points: &[Pt]) -> Result<LatticePolygon> {
        if points.is_empty() {
            return Err(Error::Invalid("empty polygon".into()));
        }
        let hull = LatticePolygon::hull_of(points);
        for p in points {
            if !hull.on_boundary(p) {
                return Err(Error::Invalid(
                    "vertex list does not describe a convex polygon".into(),
                ));
            }
        }
        Ok(hull)
    }

    /// Whether a lattice point lies on the boundary of the polygon.
    fn on_boundary(&self, p: &Pt) -> bool {
        let n = self.vertices.len();
        match n {
            0 => false,
            1 => self.vertices[0] == *p,
            _ => {
                let edges = if n == 2 { 1 } else { n };
                for i in 0..edges {
                    let a = &self.vertices[i];
                    let b = &self.vertices[(i + 1) % n];
                    if cross(a, b, p).is_zero() {
                        let (lox, hix) = if a.0 <= b.0 { (&a.0, &b.0) } else { (&b.0, &a.0) };
                        let (loy, hiy) = if a.1 <= b.1 { (&a.1, &b.1) } else { (&b.1, &a.1) };
                        if p.0 >= *lox && p.0 <= *hix && p.1 >= *loy && p.1 <= *hiy {
                            return true;
                        }
                    }
                }
                false
            }
        }
    }

    pub fn from_i64(points: &[(i64, i64)]) -> Result<LatticePolygon> {
        LatticePolygon::from_convex_vertices(
            &points
                .iter()
                .map(|&(x, y)| (Integer::from(x), Integer::from(y)))
                .collect::<Vec<_>>(),
        )
    }

    pub fn vertices(&self) -> &[Pt] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Twice the area (shoelace); zero for degenerate polygons.
    pub fn area2(&self) -> Integer {
        let n = self.vertices.len();
        if n < 3 {
            return Integer::zero();
        }
        let mut acc = Integer::zero();
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            acc += &a.0 * &b.1 - &b.0 * &a.1;
        }
        acc.abs()
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_points(&self) -> Integer {
        let n = self.vertices.len();
        match n {
            1 => Integer::from(1),
            2 => {
                let dx = &self.vertices[1].0 - &self.vertices[0].0;
                let dy = &self.vertices[1].1 - &self.vertices[0].1;
                dx.gcd(&dy) + 1
            }
            _ => {
                let mut acc = Integer::zero();
                for i in 0..n {
                    let a = &self.vertices[i];
                    let b = &self.vertices[(i + 1) % n];
                    let dx = &b.0 - &a.0;
                    let dy = &b.1 - &a.1;
                    acc += dx.gcd(&dy);
                }
                acc
            }
        }
    }

    fn contains_point_rational(&self, x: &Rational, y: &Rational) -> bool {
        let n = self.vertices.len();
        match n {
            0 => false,
            1 => {
                *x == Rational::from_integer(self.vertices[0].0.clone())
                    && *y == Rational::from_integer(self.vertices[0].1.clone())
            }
            _ => {
                for i in 0..n {
                    let a = &self.vertices[i];
                    let b = &self.vertices[(i + 1) % n];
                    if n == 2 && i == 1 {
                        break;
                    }
                    let ax = Rational::from_integer(a.0.clone());
                    let ay = Rational::from_integer(a.1.clone());
                    let bx = Rational::from_integer(b.0.clone());
                    let by = Rational::from_integer(b.1.clone());
                    let c = (bx.clone() - ax.clone()) * (y.clone() - ay.clone())
                        - (by - ay) * (x.clone() - ax);
                    if c.is_negative() {
                        return false;
                    }
                    if n == 2 && !c.is_zero() {
                        return false;
                    }
                }
                if n == 2 {
                    // On the segment line; check the box.
                    let (a, b) = (&self.vertices[0], &self.vertices[1]);
                    let (lox, hix) = if a.0 <= b.0 { (&a.0, &b.0) } else { (&b.0, &a.0) };
                    let (loy, hiy) = if a.1 <= b.1 { (&a.1, &b.1) } else { (&b.1, &a.1) };
                    return *x >= Rational::from_integer(lox.clone())
                        && *x <= Rational::from_integer(hix.clone())
                        && *y >= Rational::from_integer(loy.clone())
                        && *y <= Rational::from_integer(hiy.clone());
                }
                true
            }
        }
    }

    /// Exact number of lattice points inside or on the polygon, by scanning
    /// integer rows and intersecting edges exactly. Row intersections are
    /// exact rational points; per row the count is
    /// `floor(xmax) - ceil(xmin) + 1`. Coordinates within machine range use
    /// the integer floor/ceil division fast path.
    pub fn lattice_point_count(&self) -> Integer {
        let n = self.vertices.len();
        if n == 0 {
            return Integer::zero();
        }
        if n == 1 {
            return Integer::from(1);
        }
        if n == 2 {
            return self.boundary_points();
        }
        if let Some(count) = self.lattice_point_count_machine() {
            return count;
        }
        self.lattice_point_count_big()
    }

    fn lattice_point_count_machine(&self) -> Option<Integer> {
        use num_traits::ToPrimitive;
        let verts: Option<Vec<(i64, i64)>> = self
            .vertices
            .iter()
            .map(|(x, y)| Some((x.to_i64()?, y.to_i64()?)))
            .collect();
        let verts = verts?;
        // Guard the largest intermediate product (y-range times x-range).
        let mut big: i64 = 1;
        for &(x, y) in &verts {
            big = big
                .max(x.checked_abs().unwrap_or(i64::MAX))
                .max(y.checked_abs().unwrap_or(i64::MAX));
        }
        if big >= (1i64 << 30) {
            return None;
        }
        let n = verts.len();
        let ymin = verts.iter().map(|p| p.1).min().unwrap();
        let ymax = verts.iter().map(|p| p.1).max().unwrap();
        let mut count: i128 = 0;
        for y in ymin..=ymax {
            // ceil of the leftmost and floor of the rightmost intersection.
            let mut lo: Option<i64> = None;
            let mut hi: Option<i64> = None;
            for i in 0..n {
                let (ax, ay) = verts[i];
                let (bx, by) = verts[(i + 1) % n];
                let (ylo, yhi) = if ay <= by { (ay, by) } else { (by, ay) };
                if y < ylo || y > yhi {
                    continue;
                }
                if ay == by {
                    let (exlo, exhi) = if ax <= bx { (ax, bx) } else { (bx, ax) };
                    lo = Some(lo.map_or(exlo, |v| v.min(exlo)));
                    hi = Some(hi.map_or(exhi, |v| v.max(exhi)));
                } else {
                    // Orient the edge upward so the denominator is positive
                    // and euclidean division is floor division.
                    let ((ax, ay), (bx, by)) = if ay <= by {
                        ((ax, ay), (bx, by))
                    } else {
                        ((bx, by), (ax, ay))
                    };
                    // x = ax + (y - ay)(bx - ax)/(by - ay), exact.
                    let num = (y - ay) as i128 * (bx - ax) as i128;
                    let den = (by - ay) as i128;
                    debug_assert!(den > 0);
                    let floor_x = ax as i128 + num.div_euclid(den);
                    let ceil_x = floor_x + i128::from(num.rem_euclid(den) != 0);
                    lo = Some(lo.map_or(ceil_x as i64, |v| v.min(ceil_x as i64)));
                    hi = Some(hi.map_or(floor_x as i64, |v| v.max(floor_x as i64)));
                }
            }
            if let (Some(lo), Some(hi)) = (lo, hi) {
                if hi >= lo {
                    count += (hi - lo + 1) as i128;
                }
            }
        }
        Some(Integer::from(count))
    }

    fn lattice_point_count_big(&self) -> Integer {
        let n = self.vertices.len();
        let ymin = self.vertices.iter().map(|p| p.1.clone()).min().unwrap();
        let ymax = self.vertices.iter().map(|p| p.1.clone()).max().unwrap();
        let mut count = Integer::zero();
        let mut y = ymin;
        while y <= ymax {
            let yq = Rational::from_integer(y.clone());
            let mut xlo: Option<Rational> = None;
            let mut xhi: Option<Rational> = None;
            let mut bump = |x: Rational| {
                if xlo.as_ref().map(|c| x < *c).unwrap_or(true) {
                    xlo = Some(x.clone());
                }
                if xhi.as_ref().map(|c| x > *c).unwrap_or(true) {
                    xhi = Some(x);
                }
            };
            for i in 0..n {
                let a = &self.vertices[i];
                let b = &self.vertices[(i + 1) % n];
                let (ylo, yhi) = if a.1 <= b.1 {
                    (a.1.clone(), b.1.clone())
                } else {
                    (b.1.clone(), a.1.clone())
                };
                if y < ylo || y > yhi {
                    continue;
                }
                if a.1 == b.1 {
                    bump(Rational::from_integer(a.0.clone()));
                    bump(Rational::from_integer(b.0.clone()));
                } else {
                    // x = ax + (y - ay) * (bx - ax) / (by - ay)
                    let t = (yq.clone() - Rational::from_integer(a.1.clone()))
                        / Rational::from_integer(&b.1 - &a.1);
                    let x = Rational::from_integer(a.0.clone())
                        + t * Rational::from_integer(&b.0 - &a.0);
                    bump(x);
                }
            }
            if let (Some(xlo), Some(xhi)) = (xlo, xhi) {
                let lo = xlo.ceil().to_integer();
                let hi = xhi.floor().to_integer();
                if hi >= lo {
                    count += hi - lo + 1;
                }
            }
            y += 1;
        }
        count
    }

    /// Minkowski sum, via the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &LatticePolygon) -> LatticePolygon {
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push((&a.0 + &b.0, &a.1 + &b.1));
            }
        }
        LatticePolygon::hull_of(&sums)
    }

    /// Image under an integer matrix (2x2), re-hulled.
    pub fn apply_matrix(&self, m: &IntMat) -> LatticePolygon {
        assert!(m.nrows() == 2 && m.ncols() == 2);
        let pts: Vec<Pt> = self
            .vertices
            .iter()
            .map(|(x, y)| {
                (
                    &m[(0, 0)] * x + &m[(0, 1)] * y,
                    &m[(1, 0)] * x + &m[(1, 1)] * y,
                )
            })
            .collect();
        LatticePolygon::hull_of(&pts)
    }

    /// Whether the origin lies inside or on the polygon.
    pub fn contains_origin(&self) -> bool {
        self.contains_point_rational(&Rational::zero(), &Rational::zero())
    }

    /// The standard triangle (0,0), (1,0), (0,1).
    pub fn standard_triangle() -> LatticePolygon {
        LatticePolygon::from_i64(&[(0, 0), (1, 0), (0, 1)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn count_examples() {
        let t = LatticePolygon::from_i64(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(t.lattice_point_count(), int(3));
        let p = LatticePolygon::from_i64(&[(5, 7)]).unwrap();
        assert_eq!(p.lattice_point_count(), int(1));
        let pent = LatticePolygon::from_i64(&[(0, 0), (2, 0), (2, 1), (1, 2), (0, 1)]).unwrap();
        assert_eq!(pent.lattice_point_count(), int(7));
    }

    #[test]
    fn rejects_nonconvex() {
        // A dart: (0,0),(4,0),(1,1),(0,4) has (1,1) interior to the hull.
        assert!(LatticePolygon::from_i64(&[(0, 0), (4, 0), (1, 1), (0, 4)]).is_err());
    }

    #[test]
    fn segment_and_negative_coordinates() {
        let s = LatticePolygon::from_i64(&[(0, 0), (4, 6)]).unwrap();
        assert_eq!(s.lattice_point_count(), int(3)); // gcd(4,6)+1
        let sq = LatticePolygon::from_i64(&[(-1, -1), (1, -1), (1, 1), (-1, 1)]).unwrap();
        assert_eq!(sq.lattice_point_count(), int(9));
    }

    #[test]
    fn minkowski_matches_shear_fixture() {
        let t = LatticePolygon::standard_triangle();
        let shear = IntMat::from_i64(&[&[1, 1], &[0, 1]]).unwrap();
        let mt = t.apply_matrix(&shear);
        let sum = t.minkowski_sum(&mt);
        assert_eq!(
            sum,
            LatticePolygon::from_i64(&[(0, 0), (2, 0), (2, 1), (1, 2), (0, 1)]).unwrap()
        );
        assert_eq!(sum.lattice_point_count(), int(7));
    }

    #[test]
    fn picks_theorem_on_a_square() {
        let sq = LatticePolygon::from_i64(&[(0, 0), (3, 0), (3, 3), (0, 3)]).unwrap();
        let area2 = sq.area2();
        let b = sq.boundary_points();
        let total = sq.lattice_point_count();
        let interior = &total - &b;
        // Pick: A = I + B/2 - 1, doubled: 2A = 2I + B - 2
        assert_eq!(area2, int(2) * interior + b - int(2));
    }
}
