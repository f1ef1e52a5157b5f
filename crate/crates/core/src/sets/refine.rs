//! Common refinement of weighted balls.
//!
//! Balls are inserted into a digit trie rooted at a ball `p^k D` that
//! contains all of them; a trie node at depth `d` is a ball of scale `k + d`.
//! The value at a point is the sum of the weights on its root-to-leaf path.
//! Only paths that some input ball actually uses are expanded, so splitting
//! costs `(q - 1)` siblings per level of each inserted path.

use std::ops::AddAssign;

use super::Ball;
use crate::field::{Field, FieldElement, Gf};

struct Node<V> {
    weight: V,
    children: Vec<(u32, usize)>,
}

/// Disjoint pieces `(ball, classify(sum of weights))` covering exactly the
/// points where the classified value differs from `W::default()`.
///
/// Sibling groups whose `q` members classify to the same value are merged,
/// so the output is the coarsest partition and is sorted canonically.
pub(crate) fn refine<V, W, F>(field: &Field, items: Vec<(Ball, V)>, classify: F) -> Vec<(Ball, W)>
where
    V: Clone + Default + AddAssign,
    W: Clone + Default + PartialEq,
    F: Fn(&V) -> W,
{
    let Some(root_scale) = items
        .iter()
        .map(|(b, _)| b.valuation().map_or(b.scale(), |v| v.min(b.scale())))
        .min()
    else {
        return Vec::new();
    };

    let mut nodes: Vec<Node<V>> = vec![Node {
        weight: V::default(),
        children: Vec::new(),
    }];
    for (ball, w) in items {
        let mut cur = 0usize;
        for index in root_scale..ball.scale() {
            let d = ball.center().digit(index).code();
            cur = match nodes[cur].children.iter().find(|(digit, _)| *digit == d) {
                Some(&(_, next)) => next,
                None => {
                    nodes.push(Node {
                        weight: V::default(),
                        children: Vec::new(),
                    });
                    let next = nodes.len() - 1;
                    nodes[cur].children.push((d, next));
                    next
                }
            };
        }
        nodes[cur].weight += w;
    }

    let mut walker = Walker {
        field,
        q: field.q(),
        root_scale,
        nodes: &nodes,
        path: Vec::new(),
        out: Vec::new(),
        classify: &classify,
    };
    if let Some(w) = walker.visit(0, V::default()) {
        if w != W::default() {
            walker.out.push((walker.ball_at(&[]), w));
        }
    }
    let mut out = walker.out;
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

struct Walker<'a, V, W, F> {
    field: &'a Field,
    q: u32,
    root_scale: i32,
    nodes: &'a [Node<V>],
    path: Vec<u32>,
    out: Vec<(Ball, W)>,
    classify: &'a F,
}

impl<V, W, F> Walker<'_, V, W, F>
where
    V: Clone + Default + AddAssign,
    W: Clone + Default + PartialEq,
    F: Fn(&V) -> W,
{
    /// Returns `Some(w)` when the whole subtree classifies to `w` (nothing
    /// emitted yet); otherwise emits the subtree's pieces and returns `None`.
    fn visit(&mut self, node: usize, mut acc: V) -> Option<W> {
        let n = &self.nodes[node];
        acc += n.weight.clone();
        if n.children.is_empty() {
            return Some((self.classify)(&acc));
        }
        let here = (self.classify)(&acc);
        let mut results: Vec<Option<W>> = Vec::with_capacity(self.q as usize);
        for d in 0..self.q {
            match n.children.iter().find(|(digit, _)| *digit == d) {
                Some(&(_, child)) => {
                    self.path.push(d);
                    let r = self.visit(child, acc.clone());
                    self.path.pop();
                    results.push(r);
                }
                None => results.push(Some(here.clone())),
            }
        }
        if let Some(Some(first)) = results.first() {
            if results.iter().all(|r| r.as_ref() == Some(first)) {
                return Some(first.clone());
            }
        }
        for (d, r) in results.into_iter().enumerate() {
            if let Some(w) = r {
                if w != W::default() {
                    self.path.push(d as u32);
                    let ball = self.ball_at(&self.path);
                    self.path.pop();
                    self.out.push((ball, w));
                }
            }
        }
        None
    }

    fn ball_at(&self, path: &[u32]) -> Ball {
        let center = FieldElement::from_terms(
            self.field,
            path.iter()
                .enumerate()
                .map(|(i, &d)| (self.root_scale + i as i32, Gf(d))),
        );
        Ball::new(center, self.root_scale + path.len() as i32)
    }
}

/// Componentwise-accumulated pair, for refining two families at once.
#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct Pair<A, B>(pub A, pub B);

impl<A: AddAssign, B: AddAssign> AddAssign for Pair<A, B> {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
        self.1 += rhs.1;
    }
}
