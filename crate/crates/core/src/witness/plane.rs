//! PG(2, q) over the prime field.

use super::WitnessError;
use crate::group::is_prime;

pub const MAX_ORDER: usize = 13;

/// Result of meeting two lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Meet {
    Point(usize),
    /// The two lines were equal.
    Line(usize),
}

/// Points and lines are both numbered `0..q²+q+1` in lexicographic order
/// of their normalised homogeneous coordinates (first nonzero entry 1).
#[derive(Clone, Debug)]
pub struct ProjectivePlane {
    q: usize,
    coordinates: Vec<[usize; 3]>,
    lines: Vec<Vec<usize>>,
    incident: Vec<Vec<bool>>,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl ProjectivePlane {
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn point_count(&self) -> usize {
        self.coordinates.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    /// Homogeneous coordinates of a point, or the dual coordinates of a line.
    pub fn coordinates(&self, id: usize) -> [usize; 3] {
        self.coordinates[id]
    }

    pub fn line(&self, l: usize) -> &[usize] {
        &self.lines[l]
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn on_line(&self, p: usize, l: usize) -> bool {
        self.incident[l][p]
    }

    pub fn meet(&self, l: usize, k: usize) -> Meet {
        if l == k {
            Meet::Line(l)
        } else {
            Meet::Point(self.meet[l * self.line_count() + k])
        }
    }

    pub fn join(&self, p: usize, r: usize) -> Result<usize, WitnessError> {
        if p == r {
            return Err(WitnessError::SamePoint);
        }
        Ok(self.join[p * self.point_count() + r])
    }

    pub fn collinear(&self, p: usize, r: usize, t: usize) -> bool {
        p == r || self.on_line(t, self.join[p * self.point_count() + r])
    }
}

pub fn build_plane(q: usize) -> Result<ProjectivePlane, WitnessError> {
    if !is_prime(q) {
        return Err(WitnessError::NotPrime(q));
    }
    if q > MAX_ORDER {
        return Err(WitnessError::TooLarge(q));
    }
    let mut coordinates = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    coordinates.push(v);
                }
            }
        }
    }
    let n = coordinates.len();
    let incident: Vec<Vec<bool>> = coordinates
        .iter()
        .map(|l| {
            coordinates
                .iter()
                .map(|p| (l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % q == 0)
                .collect()
        })
        .collect();
    let lines: Vec<Vec<usize>> = incident
        .iter()
        .map(|row| (0..n).filter(|&p| row[p]).collect())
        .collect();

    let mut join = vec![usize::MAX; n * n];
    let mut meet = vec![usize::MAX; n * n];
    for (l, points) in lines.iter().enumerate() {
        for &p in points {
            for &r in points {
                if p != r {
                    if join[p * n + r] != usize::MAX {
                        return Err(axiom_failure("two points on two lines"));
                    }
                    join[p * n + r] = l;
                }
            }
        }
    }
    for p in 0..n {
        for r in 0..n {
            if p != r && join[p * n + r] == usize::MAX {
                return Err(axiom_failure("two points on no common line"));
            }
        }
    }
    for l in 0..n {
        for k in 0..n {
            if l == k {
                continue;
            }
            let common: Vec<usize> = lines[l].iter().copied().filter(|&p| incident[k][p]).collect();
            if common.len() != 1 {
                return Err(axiom_failure("two lines not meeting in one point"));
            }
            meet[l * n + k] = common[0];
        }
    }
    let plane = ProjectivePlane {
        q,
        coordinates,
        lines,
        incident,
        join,
        meet,
    };
    if !plane.has_quadrangle() {
        return Err(axiom_failure("no four points in general position"));
    }
    Ok(plane)
}

fn axiom_failure(what: &'static str) -> WitnessError {
    WitnessError::AxiomViolated(what)
}

impl ProjectivePlane {
    fn has_quadrangle(&self) -> bool {
        let n = self.point_count();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.collinear(a, b, c) {
                        continue;
                    }
                    for d in c + 1..n {
                        if !self.collinear(a, b, d) && !self.collinear(a, c, d) && !self.collinear(b, c, d) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}
