//! Vertex set, index arithmetic and neighbor structure of ℤ_m^{d1} × K_n^{d2}.

use crate::error::{Error, Result};

/// Parameters of the product graph ℤ_m^{d1} × K_n^{d2} with activation threshold θ.
///
/// The flat index layout is row-major with the cycle coordinates outermost, so
/// the sites of one Hamming plane (fixed cycle coordinates) form a contiguous
/// block of `n^{d2}` indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphShape {
    d1: u32,
    d2: u32,
    m: u32,
    n: u32,
    theta: u32,
    len: usize,
    plane_len: usize,
}

impl GraphShape {
    /// `d1 = 0` is allowed for single-plane studies; `n = 1` is rejected
    /// because K_1 has no edges.
    pub fn new(d1: u32, d2: u32, m: u32, n: u32, theta: u32) -> Result<Self> {
        if d2 == 0 {
            return Err(Error::Shape("d2 must be at least 1".into()));
        }
        if n < 2 {
            return Err(Error::Shape("n must be at least 2".into()));
        }
        if d1 > 0 && m == 0 {
            return Err(Error::Shape("m must be positive".into()));
        }
        if theta == 0 {
            return Err(Error::Shape("theta must be positive".into()));
        }
        let mut len = 1usize;
        for _ in 0..d1 {
            len = len
                .checked_mul(m as usize)
                .ok_or_else(|| Error::Shape("vertex count overflows".into()))?;
        }
        let mut plane_len = 1usize;
        for _ in 0..d2 {
            plane_len = plane_len
                .checked_mul(n as usize)
                .ok_or_else(|| Error::Shape("vertex count overflows".into()))?;
        }
        len = len
            .checked_mul(plane_len)
            .ok_or_else(|| Error::Shape("vertex count overflows".into()))?;
        // keep indices addressable as f64-exact integers too
        if len > (1usize << 52) {
            return Err(Error::Shape("vertex count too large".into()));
        }
        Ok(GraphShape {
            d1,
            d2,
            m,
            n,
            theta,
            len,
            plane_len,
        })
    }

    pub fn d1(&self) -> u32 {
        self.d1
    }
    pub fn d2(&self) -> u32 {
        self.d2
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn theta(&self) -> u32 {
        self.theta
    }

    /// Total number of vertices, m^{d1}·n^{d2}.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of sites in one Hamming plane, n^{d2}.
    pub fn plane_len(&self) -> usize {
        self.plane_len
    }

    /// Number of Hamming planes, m^{d1}.
    pub fn plane_count(&self) -> usize {
        self.len / self.plane_len
    }

    /// Graph degree; identical for every vertex.
    pub fn degree(&self) -> usize {
        let cycle = match self.m {
            1 => 0,
            2 => 1,
            _ => 2,
        };
        self.d1 as usize * cycle + self.d2 as usize * (self.n as usize - 1)
    }

    /// Plane (z-block) containing a flat index.
    #[inline(always)]
    pub fn plane_of(&self, idx: usize) -> usize {
        idx / self.plane_len
    }

    /// Stride of K-coordinate `t` within the plane block.
    #[inline(always)]
    pub fn k_stride(&self, t: u32) -> usize {
        (self.n as usize).pow(self.d2 - 1 - t)
    }

    pub fn index_of(&self, site: &Site) -> Result<usize> {
        if site.z.len() != self.d1 as usize || site.k.len() != self.d2 as usize {
            return Err(Error::Range("coordinate arity mismatch".into()));
        }
        let mut idx = 0usize;
        for &z in &site.z {
            if z >= self.m {
                return Err(Error::Range(format!("cycle coordinate {z} out of [0, {})", self.m)));
            }
            idx = idx * self.m as usize + z as usize;
        }
        for &k in &site.k {
            if k >= self.n {
                return Err(Error::Range(format!("K coordinate {k} out of [0, {})", self.n)));
            }
            idx = idx * self.n as usize + k as usize;
        }
        Ok(idx)
    }

    pub fn site_of(&self, idx: usize) -> Result<Site> {
        if idx >= self.len {
            return Err(Error::Range(format!("index {idx} out of [0, {})", self.len)));
        }
        let mut rem = idx;
        let mut k = vec![0u32; self.d2 as usize];
        for t in (0..self.d2 as usize).rev() {
            k[t] = (rem % self.n as usize) as u32;
            rem /= self.n as usize;
        }
        let mut z = vec![0u32; self.d1 as usize];
        for t in (0..self.d1 as usize).rev() {
            z[t] = (rem % self.m as usize) as u32;
            rem /= self.m as usize;
        }
        Ok(Site { z, k })
    }

    /// Distinct neighbors of `site`: ±1 (mod m) in each cycle coordinate and
    /// the n−1 same-line sites in each K-coordinate. Never contains `site`.
    pub fn neighbors(&self, site: &Site) -> Result<Vec<Site>> {
        self.index_of(site)?; // validates coordinates
        let mut out = Vec::with_capacity(self.degree());
        for t in 0..self.d1 as usize {
            let z = site.z[t];
            let up = (z + 1) % self.m;
            let down = (z + self.m - 1) % self.m;
            let mut push = |zz: u32| {
                let mut s = site.clone();
                s.z[t] = zz;
                out.push(s);
            };
            if self.m == 1 {
                // no cycle neighbors
            } else if self.m == 2 {
                push(up);
            } else {
                push(down);
                push(up);
            }
        }
        for t in 0..self.d2 as usize {
            for k in 0..self.n {
                if k != site.k[t] {
                    let mut s = site.clone();
                    s.k[t] = k;
                    out.push(s);
                }
            }
        }
        Ok(out)
    }

    /// Visit the flat indices of all neighbors of `idx`. Faster path for the
    /// engine; agrees with [`GraphShape::neighbors`].
    #[inline]
    pub fn for_each_neighbor_index<F: FnMut(usize)>(&self, idx: usize, mut f: F) {
        let plane_len = self.plane_len;
        let m = self.m as usize;
        // cycle coordinates
        if self.d1 > 0 && m > 1 {
            let mut stride = self.len / m; // stride of z-coordinate 0
            for t in 0..self.d1 {
                let coord = (idx / stride) % m;
                let base = idx - coord * stride;
                let up = (coord + 1) % m;
                if m == 2 {
                    f(base + up * stride);
                } else {
                    let down = (coord + m - 1) % m;
                    f(base + down * stride);
                    f(base + up * stride);
                }
                if t + 1 < self.d1 {
                    stride /= m;
                }
            }
        }
        // K coordinates
        let n = self.n as usize;
        let mut stride = plane_len / n;
        for t in 0..self.d2 {
            let coord = (idx / stride) % n;
            let base = idx - coord * stride;
            for k in 0..n {
                if k != coord {
                    f(base + k * stride);
                }
            }
            if t + 1 < self.d2 {
                stride /= n;
            }
        }
    }
}

/// Coordinates of one vertex: d1 cycle coordinates in [0, m), then d2
/// complete-graph coordinates in [0, n).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Site {
    pub z: Vec<u32>,
    pub k: Vec<u32>,
}

impl Site {
    pub fn new(z: Vec<u32>, k: Vec<u32>) -> Self {
        Site { z, k }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn shape(d1: u32, d2: u32, m: u32, n: u32, theta: u32) -> GraphShape {
        GraphShape::new(d1, d2, m, n, theta).unwrap()
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(GraphShape::new(1, 1, 5, 1, 2).is_err()); // n = 1
        assert!(GraphShape::new(1, 0, 5, 4, 2).is_err()); // d2 = 0
        assert!(GraphShape::new(1, 1, 0, 4, 2).is_err()); // m = 0
        assert!(GraphShape::new(8, 8, 1000, 1000, 2).is_err()); // overflow
    }

    #[test]
    fn index_examples() {
        let s = shape(1, 2, 3, 4, 2);
        let origin = Site::new(vec![0], vec![0, 0]);
        assert_eq!(s.index_of(&origin).unwrap(), 0);
        let last = Site::new(vec![2], vec![3, 3]);
        assert_eq!(s.index_of(&last).unwrap(), s.len() - 1);
        assert!(s.index_of(&Site::new(vec![3], vec![0, 0])).is_err());
        assert!(s.site_of(s.len()).is_err());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(shape(1, 2, 10, 7, 2).degree(), 2 + 12);
        assert_eq!(shape(2, 1, 4, 5, 2).degree(), 4 + 4);
        assert_eq!(shape(1, 1, 1, 3, 2).degree(), 0 + 2);
        // Figure: Z_5 x K_4 has degree 2 + 3 = 5
        let s = shape(1, 1, 5, 4, 2);
        let v = Site::new(vec![0], vec![0]);
        assert_eq!(s.neighbors(&v).unwrap().len(), 5);
        assert_eq!(shape(1, 2, 3, 3, 2).degree(), 2 + 2 + 2);
    }

    #[test]
    fn degenerate_m2_deduplicates() {
        let s = shape(1, 1, 2, 2, 2);
        let nb = s.neighbors(&Site::new(vec![0], vec![0])).unwrap();
        assert_eq!(nb.len(), 2);
        assert!(nb.contains(&Site::new(vec![1], vec![0])));
        assert!(nb.contains(&Site::new(vec![0], vec![1])));
    }

    #[test]
    fn neighbor_symmetry_and_transitivity_small_shapes() {
        for s in [
            shape(1, 1, 5, 4, 2),
            shape(2, 1, 3, 3, 2),
            shape(1, 2, 4, 3, 2),
            shape(1, 1, 2, 3, 2),
            shape(1, 1, 1, 4, 2),
        ] {
            let deg = s.degree();
            for idx in 0..s.len() {
                let v = s.site_of(idx).unwrap();
                let nb = s.neighbors(&v).unwrap();
                assert_eq!(nb.len(), deg, "degree not constant on {s:?}");
                // symmetry
                for w in &nb {
                    let back = s.neighbors(w).unwrap();
                    assert!(back.contains(&v));
                    assert_ne!(w, &v);
                }
                // fast path agrees with the Site-based path
                let mut fast: Vec<usize> = Vec::new();
                s.for_each_neighbor_index(idx, |j| fast.push(j));
                let mut slow: Vec<usize> =
                    nb.iter().map(|w| s.index_of(w).unwrap()).collect();
                fast.sort_unstable();
                slow.sort_unstable();
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn round_trip_every_index_small() {
        let s = shape(2, 2, 3, 3, 2);
        for idx in 0..s.len() {
            assert_eq!(s.index_of(&s.site_of(idx).unwrap()).unwrap(), idx);
        }
    }

    proptest! {
        #[test]
        fn round_trip_random_sites(
            d1 in 0u32..3,
            d2 in 1u32..3,
            m in 1u32..7,
            n in 2u32..9,
            seed in any::<u64>(),
        ) {
            let s = shape(d1, d2, m, n, 2);
            let idx = (seed % s.len() as u64) as usize;
            let site = s.site_of(idx).unwrap();
            prop_assert_eq!(s.index_of(&site).unwrap(), idx);
        }
    }
}
