use std::fmt;
use std::rc::Rc;

use crate::algebra::Rational;
use crate::error::{domain, Result};
use crate::open::chi_m0_open;

/// A vertex of a rooted tree: the labelled leaves attached to it and its
/// child subtrees. Subtrees are shared between the trees that contain them.
#[derive(Debug, PartialEq, Eq)]
pub struct TreeVertex {
    pub leaves: Vec<u32>,
    pub children: Vec<Rc<TreeVertex>>,
}

impl TreeVertex {
    /// Edges at this vertex, counting the one towards the root.
    pub fn valence(&self) -> u32 {
        (self.leaves.len() + self.children.len()) as u32 + 1
    }

    fn min_label(&self) -> u32 {
        let own = self.leaves.iter().copied().min();
        let below = self.children.iter().map(|c| c.min_label()).min();
        own.into_iter().chain(below).min().unwrap_or(u32::MAX)
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a TreeVertex)) {
        f(self);
        for c in &self.children {
            c.visit(f);
        }
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for l in &self.leaves {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        for c in &self.children {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A stable tree on labelled leaves whose root carries one extra, unlabelled
/// half-edge. Every vertex has valence at least three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableTree {
    pub root: Rc<TreeVertex>,
}

impl StableTree {
    pub fn vertices(&self) -> Vec<&TreeVertex> {
        let mut out = Vec::new();
        self.root.visit(&mut |v| out.push(v));
        out
    }

    pub fn leaf_labels(&self) -> Vec<u32> {
        let mut labels: Vec<u32> = self
            .vertices()
            .iter()
            .flat_map(|v| v.leaves.iter().copied())
            .collect();
        labels.sort_unstable();
        labels
    }

    /// Every label `1..=n` used exactly once and every vertex stable.
    pub fn is_valid(&self, n: u32) -> bool {
        self.leaf_labels() == (1..=n).collect::<Vec<_>>()
            && self.vertices().iter().all(|v| v.valence() >= 3)
    }

    /// `Π_v χ(M_{0,val(v)})`: Euler characteristic of the boundary stratum.
    pub fn contribution(&self) -> Rational {
        self.vertices()
            .iter()
            .map(|v| chi_m0_open(v.valence()).expect("stable vertices have valence >= 3"))
            .product()
    }
}

impl fmt::Display for StableTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

/// Every stable rooted tree on leaves `1..=n`, each isomorphism class once.
pub fn enumerate_stable_rooted_trees(n: u32) -> Result<Vec<StableTree>> {
    if n < 2 {
        return Err(domain("enumerate_stable_rooted_trees", format!("n = {n} < 2")));
    }
    let labels: Vec<u32> = (1..=n).collect();
    Ok(trees_on(&labels)
        .into_iter()
        .map(|root| StableTree { root })
        .collect())
}

/// Trees whose leaves are exactly `labels` (sorted, at least two).
///
/// The root's leaf set is split into at least two blocks; singletons hang
/// directly off the root and larger blocks become subtrees. Blocks are
/// ordered by least element, so children come out in canonical order.
fn trees_on(labels: &[u32]) -> Vec<Rc<TreeVertex>> {
    let mut out = Vec::new();
    for blocks in set_partitions(labels) {
        if blocks.len() < 2 {
            continue;
        }
        let leaves: Vec<u32> = blocks.iter().filter(|b| b.len() == 1).map(|b| b[0]).collect();
        let options: Vec<Vec<Rc<TreeVertex>>> = blocks
            .iter()
            .filter(|b| b.len() > 1)
            .map(|b| trees_on(b))
            .collect();
        for children in cartesian(&options) {
            out.push(Rc::new(TreeVertex {
                leaves: leaves.clone(),
                children,
            }));
        }
    }
    debug_assert!(out.iter().all(|t| t.min_label() == labels[0]));
    out
}

fn cartesian(options: &[Vec<Rc<TreeVertex>>]) -> Vec<Vec<Rc<TreeVertex>>> {
    let mut acc: Vec<Vec<Rc<TreeVertex>>> = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for prefix in &acc {
            for o in opts {
                let mut v = prefix.clone();
                v.push(Rc::clone(o));
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

/// All set partitions of `labels`, blocks in order of least element.
fn set_partitions(labels: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    fn go(rest: &[u32], blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let Some((&x, rest)) = rest.split_first() else {
            out.push(blocks.clone());
            return;
        };
        for i in 0..blocks.len() {
            blocks[i].push(x);
            go(rest, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![x]);
        go(rest, blocks, out);
        blocks.pop();
    }
    go(labels, &mut blocks, &mut out);
    out
}

/// `Σ_T Π_v χ(M_{0,val(v)})` over all stable rooted trees on `n` leaves.
pub fn tree_contribution_sum(n: u32) -> Result<Rational> {
    Ok(enumerate_stable_rooted_trees(n)?
        .iter()
        .map(StableTree::contribution)
        .sum())
}
