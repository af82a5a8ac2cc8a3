//! Multiplication tables of small finite groups, for [`group_algebra`](super::group_algebra).
//!
//! Every table has the identity at index 0.

use std::collections::BTreeSet;

pub type Table = Vec<Vec<usize>>;

pub fn cyclic(n: usize) -> Table {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// `G × H` with element `(g, h)` at index `g*|H| + h`.
pub fn product(g: &Table, h: &Table) -> Table {
    let (m, n) = (g.len(), h.len());
    (0..m * n)
        .map(|x| {
            (0..m * n)
                .map(|y| g[x / n][y / n] * n + h[x % n][y % n])
                .collect()
        })
        .collect()
}

pub fn klein_four() -> Table {
    product(&cyclic(2), &cyclic(2))
}

/// Closure of the given permutations of `0..degree` under composition.
///
/// Elements are sorted lexicographically, so the identity comes first;
/// `table[a][b]` is the permutation `x ↦ a(b(x))`.
pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Table {
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
    elements.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q: Vec<usize> = (0..degree).map(|x| g[p[x]]).collect();
            if elements.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    let elements: Vec<Vec<usize>> = elements.into_iter().collect();
    let index = |p: &Vec<usize>| elements.binary_search(p).expect("closed under composition");
    elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| index(&(0..degree).map(|x| a[b[x]]).collect()))
                .collect()
        })
        .collect()
}

/// The symmetric group on `n` letters, generated by a transposition and an `n`-cycle.
pub fn symmetric(n: usize) -> Table {
    if n <= 1 {
        return cyclic(1);
    }
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    from_permutations(n, &[transposition, cycle])
}

/// The dihedral group of order `2n`, acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Table {
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    from_permutations(n, &[rotation, reflection])
}

/// The quaternion group `{±1, ±i, ±j, ±k}`; index `2u + s` is `(−1)^s · u`
/// with `u ∈ (1, i, j, k)`.
pub fn quaternion_group() -> Table {
    // unit products: (result unit, sign flip)
    let unit_mul = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (x, 0),
            (x, y) if x == y => (0, 1),
            (1, 2) => (3, 0),
            (2, 3) => (1, 0),
            (3, 1) => (2, 0),
            (2, 1) => (3, 1),
            (3, 2) => (1, 1),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (u, s) = unit_mul(x / 2, y / 2);
                    2 * u + (s + x % 2 + y % 2) % 2
                })
                .collect()
        })
        .collect()
}
