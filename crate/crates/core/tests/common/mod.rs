//! Brute-force reference implementations. Nothing here calls into the
//! library's order, lattice or canonicalization code.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// A labeled order on `0..n` as a row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    pub n: usize,
    pub leq: Vec<bool>,
}

impl Order {
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    fn bounds(&self, x: usize, y: usize, upper: bool) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| if upper { self.le(x, u) && self.le(y, u) } else { self.le(u, x) && self.le(u, y) })
            .collect()
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let ub = self.bounds(x, y, true);
        ub.iter().copied().find(|&u| ub.iter().all(|&v| self.le(u, v)))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let lb = self.bounds(x, y, false);
        lb.iter().copied().find(|&l| lb.iter().all(|&v| self.le(v, l)))
    }

    pub fn is_lattice(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.join(x, y).is_some() && self.meet(x, y).is_some()))
    }

    /// Strict order minus its square.
    pub fn transitive_reduction(&self) -> BTreeSet<(usize, usize)> {
        let lt = |x: usize, y: usize| x != y && self.le(x, y);
        let mut out = BTreeSet::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if lt(x, y) && !(0..self.n).any(|z| lt(x, z) && lt(z, y)) {
                    out.insert((x, y));
                }
            }
        }
        out
    }

    fn relabel(&self, perm: &[usize]) -> Vec<bool> {
        let mut out = vec![false; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                out[perm[x] * self.n + perm[y]] = self.le(x, y);
            }
        }
        out
    }

    /// Smallest relabeled matrix over all `n!` permutations.
    pub fn brute_canonical(&self) -> Vec<bool> {
        permutations(self.n).iter().map(|p| self.relabel(p)).min().expect("n >= 1")
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes of bounded lattices with `n` elements:
/// every relation on `n - 2` labeled middle points, filtered to partial
/// orders, closed off with a bottom and a top, filtered to lattices, then
/// quotiented by brute-force isomorphism.
pub fn lattice_class_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let k = n - 2;
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rel = vec![false; k * k];
        for i in 0..k {
            rel[i * k + i] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                rel[i * k + j] = true;
            }
        }
        let antisymmetric = pairs.iter().all(|&(i, j)| !(rel[i * k + j] && rel[j * k + i]));
        let transitive =
            (0..k).all(|i| (0..k).all(|j| (0..k).all(|l| !(rel[i * k + j] && rel[j * k + l]) || rel[i * k + l])));
        if !antisymmetric || !transitive {
            continue;
        }
        // bottom = 0, middle = 1..=k, top = n - 1
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x] = true;
            leq[x * n + n - 1] = true;
        }
        for i in 0..k {
            for j in 0..k {
                leq[(i + 1) * n + (j + 1)] = rel[i * k + j];
            }
        }
        let order = Order { n, leq };
        if order.is_lattice() {
            classes.insert(order.brute_canonical());
        }
    }
    classes.len()
}

/// All unary maps on `0..n`, as index vectors.
pub fn all_unary_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (n as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut map = vec![0; n];
        for slot in map.iter_mut() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        map
    })
}

/// Brute-force orthocomplementation test: `x v x' = 1`, `x ^ x' = 0`,
/// antitone, involutive, and optionally orthomodular.
pub fn is_orthocomplement(o: &Order, c: &[usize], omod: bool) -> bool {
    let n = o.n;
    let bottom = (0..n).find(|&b| (0..n).all(|x| o.le(b, x))).unwrap();
    let top = (0..n).find(|&t| (0..n).all(|x| o.le(x, t))).unwrap();
    let j = |x, y| o.join(x, y).unwrap();
    let m = |x, y| o.meet(x, y).unwrap();
    for x in 0..n {
        if j(x, c[x]) != top || m(x, c[x]) != bottom || c[c[x]] != x {
            return false;
        }
        for y in 0..n {
            if o.le(x, y) && !o.le(c[y], c[x]) {
                return false;
            }
            if omod && o.le(x, y) && y != j(x, m(y, c[x])) {
                return false;
            }
        }
    }
    true
}
