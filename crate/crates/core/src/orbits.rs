//! Weyl group orbits on real roots.
//!
//! Two simple roots lie in the same orbit exactly when their vertices are
//! joined by a path of single edges, so the orbit classes are the connected
//! components of the skeleton. [`orbit_bfs_oracle`] recomputes orbits by
//! brute-force reflection closure and never consults the skeleton.

use std::collections::{BTreeSet, VecDeque};

use crate::dynkin::Skeleton;
use crate::error::{Error, Result};
use crate::gcm::GeneralizedCartanMatrix;
use crate::roots::{apply_word, reflect, RootVector, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Index classes, each sorted, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[i]` is the position of i's class in `classes`.
    pub class_of: Vec<usize>,
}

impl OrbitPartition {
    /// Renders as `{1} {2 3}` with 1-based indices.
    pub fn to_text(&self) -> String {
        self.classes
            .iter()
            .map(|c| {
                let items: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
                format!("{{{}}}", items.join(" "))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn orbit_partition(a: &GeneralizedCartanMatrix) -> OrbitPartition {
    let classes = Skeleton::new(a).components;
    let mut class_of = vec![0; a.rank()];
    for (c, members) in classes.iter().enumerate() {
        for &i in members {
            class_of[i] = c;
        }
    }
    OrbitPartition { classes, class_of }
}

pub fn same_orbit(a: &GeneralizedCartanMatrix, i: usize, j: usize) -> Result<bool> {
    a.check_index(i)?;
    a.check_index(j)?;
    let p = orbit_partition(a);
    Ok(p.class_of[i] == p.class_of[j])
}

/// Closure of a seed set under all simple reflections, restricted to the
/// sup-norm box `|b_i| <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BoundedClosure {
    pub set: BTreeSet<RootVector>,
    /// No reflection of a member left the box.
    pub complete: bool,
}

pub(crate) fn bounded_closure(
    a: &GeneralizedCartanMatrix,
    seeds: impl IntoIterator<Item = RootVector>,
    bound: u64,
) -> Result<BoundedClosure> {
    let mut set = BTreeSet::new();
    let mut frontier = BTreeSet::new();
    for s in seeds {
        if s.sup_norm() <= bound && set.insert(s.clone()) {
            frontier.insert(s);
        }
    }
    let mut complete = true;
    // Level by level; each level is visited in lexicographic order.
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for v in &frontier {
            for i in 0..a.rank() {
                let image = reflect(a, i, v)?;
                if image.sup_norm() > bound {
                    complete = false;
                } else if !set.contains(&image) {
                    set.insert(image.clone());
                    next.insert(image);
                }
            }
        }
        frontier = next;
    }
    Ok(BoundedClosure { set, complete })
}

fn check_bound(bound: u64) -> Result<()> {
    if bound == 0 {
        Err(Error::InvalidBound { min: 1 })
    } else {
        Ok(())
    }
}

/// Real roots reachable from `±α_i` through reflections that stay inside the
/// sup-norm box of radius `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRootSet {
    pub roots: BTreeSet<RootVector>,
    pub bound: u64,
    /// True when no reflection of any member escapes the box.
    pub frontier_complete: bool,
}

impl RealRootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, beta: &RootVector) -> bool {
        self.roots.contains(beta)
    }

    pub fn positive(&self) -> impl Iterator<Item = &RootVector> {
        self.roots
            .iter()
            .filter(|r| r.coords().iter().all(|&x| x >= 0))
    }
}

pub fn generate_real_roots(a: &GeneralizedCartanMatrix, bound: u64) -> Result<RealRootSet> {
    check_bound(bound)?;
    let n = a.rank();
    let seeds = (0..n).flat_map(|i| {
        let s = RootVector::simple(n, i);
        [s.neg(), s]
    });
    let closure = bounded_closure(a, seeds, bound)?;
    Ok(RealRootSet {
        roots: closure.set,
        bound,
        frontier_complete: closure.complete,
    })
}

/// `W α_i` within the box, by reflection closure alone.
pub fn orbit_bfs_oracle(
    a: &GeneralizedCartanMatrix,
    i: usize,
    bound: u64,
) -> Result<BTreeSet<RootVector>> {
    a.check_index(i)?;
    check_bound(bound)?;
    Ok(bounded_closure(a, [RootVector::simple(a.rank(), i)], bound)?.set)
}

/// A word `w` with `w α_j = α_k`, built from a shortest skeleton path
/// `j = i_1, …, i_m = k` as `(w_{i_{m-1}} w_{i_m}) ⋯ (w_{i_1} w_{i_2})`.
/// Returns `None` when j and k lie in different skeleton components.
pub fn connecting_word(
    a: &GeneralizedCartanMatrix,
    j: usize,
    k: usize,
) -> Result<Option<WeylWord>> {
    a.check_index(j)?;
    a.check_index(k)?;
    let Some(path) = skeleton_path(&Skeleton::new(a), j, k) else {
        return Ok(None);
    };
    let mut word = WeylWord::identity();
    for step in path.windows(2) {
        // w_s w_t sends α_s to α_t when a_st = a_ts = -1.
        word = WeylWord::new(vec![step[0], step[1]]).then_after(&word);
    }
    let n = a.rank();
    let image = apply_word(a, &word, &RootVector::simple(n, j))?;
    assert_eq!(
        image,
        RootVector::simple(n, k),
        "connecting word failed to map α_{} to α_{}",
        j + 1,
        k + 1
    );
    Ok(Some(word))
}

/// Shortest path by BFS, visiting neighbors in increasing index order.
fn skeleton_path(s: &Skeleton, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![None; s.order];
    let mut seen = vec![false; s.order];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while let Some(p) = parent[cur] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            return Some(path);
        }
        let mut nbrs: Vec<usize> = s.neighbors(v).collect();
        nbrs.sort_unstable();
        for u in nbrs {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                queue.push_back(u);
            }
        }
    }
    None
}
