//! Persistent cons-list stacks (`x · xs`, `nil`).
//!
//! Events share stack tails, so cloning an event is O(1) and a journal of
//! n events costs O(n) stack cells rather than O(n · depth).

use std::fmt;
use std::sync::Arc;

pub struct Stack<T>(Option<Arc<Node<T>>>);

struct Node<T> {
    head: T,
    tail: Stack<T>,
    len: usize,
}

impl<T> Stack<T> {
    pub fn nil() -> Self {
        Stack(None)
    }

    pub fn push(&self, head: T) -> Self {
        let len = self.len() + 1;
        Stack(Some(Arc::new(Node {
            head,
            tail: self.clone(),
            len,
        })))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn len(&self) -> usize {
        self.0.as_ref().map_or(0, |n| n.len)
    }

    pub fn top(&self) -> Option<&T> {
        self.0.as_ref().map(|n| &n.head)
    }

    /// Top element and the stack below it.
    pub fn pop(&self) -> Option<(&T, &Stack<T>)> {
        self.0.as_ref().map(|n| (&n.head, &n.tail))
    }

    /// The stack below the top, or `nil` for an empty stack.
    /// The stack under the top `n` elements, if there are that many.
    pub fn below(&self, n: usize) -> Option<&Stack<T>> {
        let mut cur = self;
        for _ in 0..n {
            cur = &cur.0.as_ref()?.tail;
        }
        Some(cur)
    }

    pub fn tail(&self) -> Stack<T> {
        self.0.as_ref().map_or_else(Stack::nil, |n| n.tail.clone())
    }

    /// Iterates from the top down.
    pub fn iter(&self) -> Iter<'_, T> {
        Iter { cur: self }
    }

    pub fn ptr_eq(&self, other: &Stack<T>) -> bool {
        match (&self.0, &other.0) {
            (None, None) => true,
            (Some(a), Some(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl<T: Clone> Stack<T> {
    /// Builds a stack whose top is the first element of `items`.
    pub fn from_top_first(items: Vec<T>) -> Self {
        items
            .into_iter()
            .rev()
            .fold(Stack::nil(), |acc, item| acc.push(item))
    }

    /// `self + bottom`: the elements of `self` stacked on top of `bottom`.
    pub fn append(&self, bottom: &Stack<T>) -> Stack<T> {
        let items: Vec<T> = self.iter().cloned().collect();
        items
            .into_iter()
            .rev()
            .fold(bottom.clone(), |acc, item| acc.push(item))
    }
}

impl<T: PartialEq + Clone> Stack<T> {
    /// If `self = prefix + suffix`, returns `prefix` (as a stack over `nil`).
    pub fn strip_suffix(&self, suffix: &Stack<T>) -> Option<Stack<T>> {
        let extra = self.len().checked_sub(suffix.len())?;
        let mut prefix = Vec::with_capacity(extra);
        let mut cur = self;
        for _ in 0..extra {
            let (head, tail) = cur.pop()?;
            prefix.push(head.clone());
            cur = tail;
        }
        if cur == suffix {
            Some(Stack::from_top_first(prefix))
        } else {
            None
        }
    }

    /// Number of elements above the longest common bottom part of both stacks.
    pub fn diverging_heights(&self, other: &Stack<T>) -> (usize, usize) {
        let (mut a, mut b) = (self, other);
        let (mut extra_a, mut extra_b) = (0, 0);
        while a.len() > b.len() {
            a = a.pop().map_or(a, |(_, t)| t);
            extra_a += 1;
        }
        while b.len() > a.len() {
            b = b.pop().map_or(b, |(_, t)| t);
            extra_b += 1;
        }
        // Lockstep walk; the common part starts below the last differing level.
        let mut level = 0;
        let mut unshared = 0;
        while !a.ptr_eq(b) {
            match (a.pop(), b.pop()) {
                (Some((x, ta)), Some((y, tb))) => {
                    level += 1;
                    if x != y {
                        unshared = level;
                    }
                    a = ta;
                    b = tb;
                }
                _ => break,
            }
        }
        (extra_a + unshared, extra_b + unshared)
    }
}

impl<T> Clone for Stack<T> {
    fn clone(&self) -> Self {
        Stack(self.0.clone())
    }
}

impl<T> Default for Stack<T> {
    fn default() -> Self {
        Stack::nil()
    }
}

impl<T: PartialEq> PartialEq for Stack<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let (mut a, mut b) = (self, other);
        loop {
            if a.ptr_eq(b) {
                return true;
            }
            match (a.pop(), b.pop()) {
                (Some((x, ta)), Some((y, tb))) => {
                    if x != y {
                        return false;
                    }
                    a = ta;
                    b = tb;
                }
                _ => return false,
            }
        }
    }
}

impl<T: Eq> Eq for Stack<T> {}

impl<T: fmt::Debug> fmt::Debug for Stack<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

impl<T> Drop for Stack<T> {
    // Iterative, so that dropping a very deep stack does not recurse.
    fn drop(&mut self) {
        let mut cur = self.0.take();
        while let Some(node) = cur {
            match Arc::try_unwrap(node) {
                Ok(mut node) => cur = node.tail.0.take(),
                Err(_) => break,
            }
        }
    }
}

pub struct Iter<'a, T> {
    cur: &'a Stack<T>,
}

impl<'a, T> Iterator for Iter<'a, T> {
    type Item = &'a T;

    fn next(&mut self) -> Option<&'a T> {
        let node = self.cur.0.as_ref()?;
        self.cur = &node.tail;
        Some(&node.head)
    }
}
