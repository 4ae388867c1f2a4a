//! Direct regex evaluation by dynamic programming over subword spans.
//!
//! This is the automaton-independent membership oracle: it never consults an
//! NFA or DFA. Star is evaluated as a least fixed point over splittings with
//! the empty first factor excluded, which makes the recursion well-founded.

use super::{RegexAst, RegexNode};
use crate::alphabet::SymbolId;

/// True iff `word` belongs to the language of `ast`.
pub fn matches(ast: &RegexAst, word: &[SymbolId]) -> bool {
    let mut arena = Vec::new();
    let root = index_nodes(ast, &mut arena);
    let n = word.len();
    let mut memo = Memo::new(arena.len(), n);
    eval(&arena, &mut memo, word, root, 0, n)
}

struct Entry<'a> {
    node: &'a RegexNode,
    left: usize,
    right: usize,
}

fn index_nodes<'a>(ast: &'a RegexAst, arena: &mut Vec<Entry<'a>>) -> usize {
    let id = arena.len();
    arena.push(Entry { node: ast.node(), left: usize::MAX, right: usize::MAX });
    match ast.node() {
        RegexNode::Symbol(_) | RegexNode::EmptySet | RegexNode::Epsilon => {}
        RegexNode::Concat(l, r) | RegexNode::Union(l, r) => {
            let left = index_nodes(l, arena);
            let right = index_nodes(r, arena);
            arena[id].left = left;
            arena[id].right = right;
        }
        RegexNode::Star(inner) => {
            let left = index_nodes(inner, arena);
            arena[id].left = left;
        }
    }
    id
}

struct Memo {
    cells: Vec<u8>, // 0 unknown, 1 false, 2 true
    span_stride: usize,
}

impl Memo {
    fn new(nodes: usize, word_len: usize) -> Memo {
        let span_stride = word_len + 1;
        Memo { cells: vec![0; nodes * span_stride * span_stride], span_stride }
    }

    fn idx(&self, id: usize, i: usize, j: usize) -> usize {
        (id * self.span_stride + i) * self.span_stride + j
    }

    fn get(&self, id: usize, i: usize, j: usize) -> Option<bool> {
        match self.cells[self.idx(id, i, j)] {
            1 => Some(false),
            2 => Some(true),
            _ => None,
        }
    }

    fn set(&mut self, id: usize, i: usize, j: usize, value: bool) {
        let idx = self.idx(id, i, j);
        self.cells[idx] = if value { 2 } else { 1 };
    }
}

fn eval(arena: &[Entry], memo: &mut Memo, word: &[SymbolId], id: usize, i: usize, j: usize) -> bool {
    if let Some(v) = memo.get(id, i, j) {
        return v;
    }
    let entry = &arena[id];
    let value = match entry.node {
        RegexNode::Symbol(s) => j == i + 1 && word[i] == *s,
        RegexNode::EmptySet => false,
        RegexNode::Epsilon => i == j,
        RegexNode::Union(_, _) => {
            eval(arena, memo, word, entry.left, i, j) || eval(arena, memo, word, entry.right, i, j)
        }
        RegexNode::Concat(_, _) => (i..=j).any(|m| {
            eval(arena, memo, word, entry.left, i, m) && eval(arena, memo, word, entry.right, m, j)
        }),
        RegexNode::Star(_) => {
            // First factor is non-empty, so (m, j) spans strictly shrink.
            i == j
                || (i + 1..=j).any(|m| {
                    eval(arena, memo, word, entry.left, i, m) && eval(arena, memo, word, id, m, j)
                })
        }
    };
    memo.set(id, i, j, value);
    value
}
