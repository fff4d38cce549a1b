//! The multi-pass stack sorter.
//!
//! Entries are pushed in input order. The top of the stack is popped only when
//! it is the next value the output needs. When the input runs dry, whatever is
//! left in the stack is read bottom-to-top and fed through again.

use std::fmt::{self, Write as _};

use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Event {
    Push(u32),
    Pop(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Pass {
    pub events: Vec<Event>,
    /// Stack contents at the end of the pass, bottom to top.
    pub leftover: Vec<u32>,
}

impl Pass {
    pub fn popped(&self) -> impl Iterator<Item = u32> + '_ {
        self.events.iter().filter_map(|e| match *e {
            Event::Pop(v) => Some(v),
            Event::Push(_) => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortTrace {
    pub input: Permutation,
    pub passes: Vec<Pass>,
}

impl SortTrace {
    pub fn total_passes(&self) -> usize {
        self.passes.len()
    }

    /// Passes minus one; zero for the empty permutation.
    pub fn tier(&self) -> usize {
        self.passes.len().saturating_sub(1)
    }

    /// Event-per-line rendering: `-- pass k --`, `push v`, `pop v`, and a
    /// closing `tier t` line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, pass) in self.passes.iter().enumerate() {
            writeln!(out, "-- pass {} --", k + 1).unwrap();
            for event in &pass.events {
                match event {
                    Event::Push(v) => writeln!(out, "push {v}").unwrap(),
                    Event::Pop(v) => writeln!(out, "pop {v}").unwrap(),
                }
            }
        }
        writeln!(out, "tier {}", self.tier()).unwrap();
        out
    }
}

impl fmt::Display for SortTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// One pass through the stack. Returns the pass record; the next needed
/// value after the pass is `next_needed + popped count`.
pub fn run_single_pass(input: &[u32], next_needed: u32) -> Pass {
    let mut stack: Vec<u32> = Vec::with_capacity(input.len());
    let mut events = Vec::with_capacity(2 * input.len());
    let mut next = next_needed;
    let mut remaining = input.iter();
    loop {
        if stack.last() == Some(&next) {
            stack.pop();
            events.push(Event::Pop(next));
            next += 1;
        } else if let Some(&v) = remaining.next() {
            stack.push(v);
            events.push(Event::Push(v));
        } else {
            break;
        }
    }
    Pass { events, leftover: stack }
}

pub fn sort_with_trace(p: &Permutation) -> SortTrace {
    let mut passes = Vec::new();
    let mut input = p.values().to_vec();
    let mut next = 1;
    while !input.is_empty() {
        let pass = run_single_pass(&input, next);
        next += pass.popped().count() as u32;
        input = pass.leftover.clone();
        passes.push(pass);
    }
    SortTrace { input: p.clone(), passes }
}

/// Pass count minus one, without recording events.
pub fn tier_by_simulation(values: &[u32]) -> usize {
    let mut input = values.to_vec();
    let mut stack = Vec::with_capacity(values.len());
    let mut next = 1;
    let mut passes = 0usize;
    while !input.is_empty() {
        passes += 1;
        stack.clear();
        for &v in &input {
            stack.push(v);
            while stack.last() == Some(&next) {
                stack.pop();
                next += 1;
            }
        }
        std::mem::swap(&mut input, &mut stack);
    }
    passes.saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn popped(pass: &Pass) -> Vec<u32> {
        pass.popped().collect()
    }

    #[test]
    fn single_pass_examples() {
        let pass = run_single_pass(&[3, 5, 6, 1, 2, 4], 1);
        assert_eq!(popped(&pass), [1, 2]);
        assert_eq!(pass.leftover, [3, 5, 6, 4]);

        let pass = run_single_pass(&[3, 5, 6, 4], 3);
        assert_eq!(popped(&pass), [3, 4]);
        assert_eq!(pass.leftover, [5, 6]);

        let pass = run_single_pass(&[1, 2, 3], 1);
        assert_eq!(popped(&pass), [1, 2, 3]);
        assert!(pass.leftover.is_empty());
    }

    #[test]
    fn trace_examples() {
        let t = sort_with_trace(&"356124".parse().unwrap());
        assert_eq!(t.total_passes(), 3);
        let outs: Vec<Vec<u32>> = t.passes.iter().map(popped).collect();
        assert_eq!(outs, [vec![1, 2], vec![3, 4], vec![5, 6]]);

        let t = sort_with_trace(&"231".parse().unwrap());
        assert_eq!(t.total_passes(), 2);
        assert_eq!(popped(&t.passes[0]), [1]);
        assert_eq!(t.passes[0].leftover, [2, 3]);
        assert_eq!(popped(&t.passes[1]), [2, 3]);

        assert_eq!(sort_with_trace(&Permutation::identity(5)).total_passes(), 1);
        let empty = sort_with_trace(&Permutation::default());
        assert_eq!((empty.total_passes(), empty.tier()), (0, 0));
    }

    #[test]
    fn simulation_tiers() {
        for (s, t) in [("231", 1), ("356124", 2), ("4637251", 4), ("", 0), ("1", 0)] {
            let p: Permutation = s.parse().unwrap();
            assert_eq!(tier_by_simulation(p.values()), t, "{s}");
            assert_eq!(sort_with_trace(&p).tier(), t, "{s}");
        }
    }

    #[test]
    fn golden_render() {
        let t = sort_with_trace(&"231".parse().unwrap());
        let expected = "\
-- pass 1 --
push 2
push 3
push 1
pop 1
-- pass 2 --
push 2
pop 2
push 3
pop 3
tier 1
";
        assert_eq!(t.render(), expected);
    }
}
