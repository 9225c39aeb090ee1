//! Band-generator presentation backend: simple elements are non-crossing
//! partitions.
//!
//! The atom `a(t, s)` (with `t > s`, 0-based internally) is the band braid
//! swapping strands `t` and `s` behind the intermediate strands.  As a
//! partition it is the two-element block `{s, t}`; a general simple element
//! is a non-crossing partition of the strand set, acting as the permutation
//! whose cycles walk each block in increasing order (the largest element
//! wraps to the smallest).  Delta is the single full block, the cyclic shift
//! `i -> i+1`.
//!
//! Conventions frozen by oracle validation: left divisibility of simples is
//! refinement of partitions, the atom `a(t, s)` divides `P` iff `t` and `s`
//! share a block, and tau rotates every element by `+1 mod n`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::presentation::Presentation;

type Elem = u16;

/// A non-crossing partition, stored as sorted blocks of sorted elements
/// (singletons included), blocks ordered by their least element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NcPartitionSimple {
    blocks: Vec<Vec<Elem>>,
}

impl NcPartitionSimple {
    fn canonical(mut blocks: Vec<Vec<Elem>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable();
        NcPartitionSimple { blocks }
    }

    pub fn blocks(&self) -> &[Vec<Elem>] {
        &self.blocks
    }

    /// 1-based blocks, matching the I/O convention.
    pub fn blocks_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&e| e as usize + 1).collect())
            .collect()
    }

    fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    fn block_ids(&self, n: usize) -> Vec<u32> {
        let mut ids = vec![u32::MAX; n];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &e in b {
                ids[e as usize] = bi as u32;
            }
        }
        debug_assert!(ids.iter().all(|&i| i != u32::MAX));
        ids
    }

    /// The permutation induced on strands: each block is an increasing
    /// cycle.
    fn to_perm(&self, n: usize) -> Vec<Elem> {
        let mut perm: Vec<Elem> = (0..n as Elem).collect();
        for b in &self.blocks {
            for w in b.windows(2) {
                perm[w[0] as usize] = w[1];
            }
            if b.len() > 1 {
                perm[*b.last().unwrap() as usize] = b[0];
            }
        }
        perm
    }
}

/// Rebuilds a partition from a permutation, provided every cycle is an
/// increasing rotation and the resulting blocks are non-crossing.
fn partition_from_perm(perm: &[Elem]) -> Option<NcPartitionSimple> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // `start` is the least unseen element, hence the minimum of its
        // cycle if cycles are increasing rotations.
        let mut block = vec![start as Elem];
        seen[start] = true;
        let mut cur = perm[start] as usize;
        while cur != start {
            if cur < *block.last().unwrap() as usize || seen[cur] {
                return None;
            }
            block.push(cur as Elem);
            seen[cur] = true;
            cur = perm[cur] as usize;
        }
        blocks.push(block);
    }
    let part = NcPartitionSimple::canonical(blocks);
    if is_non_crossing(&part, n) {
        Some(part)
    } else {
        None
    }
}

/// Parenthesis test: scan positions once, keeping a stack of open blocks.
fn is_non_crossing(p: &NcPartitionSimple, n: usize) -> bool {
    find_crossing(p, n).is_none()
}

/// Returns a crossing pair of block indices, if any.
fn find_crossing(p: &NcPartitionSimple, n: usize) -> Option<(usize, usize)> {
    let ids = p.block_ids(n);
    let mut first = vec![usize::MAX; p.blocks.len()];
    let mut last = vec![0usize; p.blocks.len()];
    for (e, &b) in ids.iter().enumerate() {
        let b = b as usize;
        if first[b] == usize::MAX {
            first[b] = e;
        }
        last[b] = e;
    }
    let mut stack: Vec<usize> = Vec::new();
    for (e, &b) in ids.iter().enumerate() {
        let b = b as usize;
        if first[b] == e {
            stack.push(b);
        } else if *stack.last().unwrap() != b {
            return Some((*stack.last().unwrap(), b));
        }
        if last[b] == e {
            // A block can only close when it is on top; otherwise the top
            // block crosses it.
            if *stack.last().unwrap() != b {
                return Some((*stack.last().unwrap(), b));
            }
            stack.pop();
        }
    }
    None
}

fn compose(second: &[Elem], first: &[Elem]) -> Vec<Elem> {
    first.iter().map(|&p| second[p as usize]).collect()
}

fn inverse(p: &[Elem]) -> Vec<Elem> {
    let mut out = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        out[v as usize] = i as Elem;
    }
    out
}

/// The band-generator presentation of the braid group on `n` strands.
#[derive(Debug)]
pub struct BklPresentation {
    n: usize,
    atom_pairs: Vec<(Elem, Elem)>,
    simple_table: OnceLock<Vec<NcPartitionSimple>>,
}

impl BklPresentation {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "braid index must be at least 2");
        assert!(n <= Elem::MAX as usize, "braid index too large");
        let mut atom_pairs = Vec::new();
        for t in 1..n {
            for s in 0..t {
                atom_pairs.push((t as Elem, s as Elem));
            }
        }
        BklPresentation { n, atom_pairs, simple_table: OnceLock::new() }
    }

    /// The atom index of the band `a(t, s)`, `t > s`, 0-based strands.
    pub fn atom_index(&self, t: usize, s: usize) -> Option<usize> {
        self.atom_pairs.iter().position(|&(a, b)| a as usize == t && b as usize == s)
    }

    pub fn atom_pair(&self, idx: usize) -> (usize, usize) {
        let (t, s) = self.atom_pairs[idx];
        (t as usize, s as usize)
    }

    fn same_block(&self, p: &NcPartitionSimple, a: usize, b: usize) -> bool {
        let ids = p.block_ids(self.n);
        ids[a] == ids[b]
    }
}

impl Clone for BklPresentation {
    fn clone(&self) -> Self {
        BklPresentation::new(self.n)
    }
}

impl Presentation for BklPresentation {
    type Simple = NcPartitionSimple;

    fn braid_index(&self) -> usize {
        self.n
    }

    fn atom_count(&self) -> usize {
        self.atom_pairs.len()
    }

    fn atom(&self, idx: usize) -> NcPartitionSimple {
        let (t, s) = self.atom_pairs[idx];
        let mut blocks = vec![vec![s, t]];
        for e in 0..self.n as Elem {
            if e != s && e != t {
                blocks.push(vec![e]);
            }
        }
        NcPartitionSimple::canonical(blocks)
    }

    fn identity_simple(&self) -> NcPartitionSimple {
        NcPartitionSimple::canonical((0..self.n as Elem).map(|e| vec![e]).collect())
    }

    fn delta(&self) -> NcPartitionSimple {
        NcPartitionSimple::canonical(vec![(0..self.n as Elem).collect()])
    }

    fn tau_order(&self) -> usize {
        self.n
    }

    fn atom_len(&self, s: &NcPartitionSimple) -> usize {
        self.n - s.blocks.len()
    }

    fn atom_left_divides_simple(&self, atom: usize, p: &NcPartitionSimple) -> bool {
        let (t, s) = self.atom_pairs[atom];
        self.same_block(p, t as usize, s as usize)
    }

    fn left_divides_simple(&self, s: &NcPartitionSimple, t: &NcPartitionSimple) -> bool {
        // Refinement order.
        let ids = t.block_ids(self.n);
        s.blocks
            .iter()
            .all(|b| b.iter().all(|&e| ids[e as usize] == ids[b[0] as usize]))
    }

    fn meet_simple(&self, s: &NcPartitionSimple, t: &NcPartitionSimple) -> NcPartitionSimple {
        // Common refinement; automatically non-crossing.
        let sid = s.block_ids(self.n);
        let tid = t.block_ids(self.n);
        let mut buckets: std::collections::HashMap<(u32, u32), Vec<Elem>> =
            std::collections::HashMap::new();
        for e in 0..self.n {
            buckets
                .entry((sid[e], tid[e]))
                .or_default()
                .push(e as Elem);
        }
        NcPartitionSimple::canonical(buckets.into_values().collect())
    }

    fn right_meet_simple(&self, s: &NcPartitionSimple, t: &NcPartitionSimple) -> NcPartitionSimple {
        // Greedy: extend d by atoms right-dividing both quotients.  An atom
        // a(t, s) right-divides a simple iff its strands share a block, and
        // the quotient is the same-cycle split composed on the other side.
        let mut d: Vec<Elem> = (0..self.n as Elem).collect();
        let mut u = s.clone();
        let mut v = t.clone();
        loop {
            let mut progressed = false;
            for idx in 0..self.atom_pairs.len() {
                let (t_, s_) = self.atom_pairs[idx];
                let (ti, si) = (t_ as usize, s_ as usize);
                if self.same_block(&u, ti, si) && self.same_block(&v, ti, si) {
                    let mut au = u.to_perm(self.n);
                    let mut av = v.to_perm(self.n);
                    // u' = a o u (split the cycle through t, s).
                    for x in [&mut au, &mut av] {
                        for p in 0..self.n {
                            if x[p] as usize == ti {
                                x[p] = s_;
                            } else if x[p] as usize == si {
                                x[p] = t_;
                            }
                        }
                    }
                    u = partition_from_perm(&au).expect("same-cycle split stays non-crossing");
                    v = partition_from_perm(&av).expect("same-cycle split stays non-crossing");
                    // d <- a * d.
                    d.swap(ti, si);
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        partition_from_perm(&d).expect("right divisor of a simple is simple")
    }

    fn complement(&self, s: &NcPartitionSimple) -> NcPartitionSimple {
        // s^-1 delta: the Kreweras complement.
        let perm = s.to_perm(self.n);
        let inv = inverse(&perm);
        let n = self.n as Elem;
        let comp: Vec<Elem> = (0..self.n)
            .map(|q| {
                let v = inv[q] + 1;
                if v == n { 0 } else { v }
            })
            .collect();
        partition_from_perm(&comp).expect("complement of a simple is simple")
    }

    fn tau_simple(&self, s: &NcPartitionSimple) -> NcPartitionSimple {
        let n = self.n as Elem;
        NcPartitionSimple::canonical(
            s.blocks
                .iter()
                .map(|b| b.iter().map(|&e| if e + 1 == n { 0 } else { e + 1 }).collect())
                .collect(),
        )
    }

    fn tau_inv_simple(&self, s: &NcPartitionSimple) -> NcPartitionSimple {
        let n = self.n as Elem;
        NcPartitionSimple::canonical(
            s.blocks
                .iter()
                .map(|b| b.iter().map(|&e| if e == 0 { n - 1 } else { e - 1 }).collect())
                .collect(),
        )
    }

    fn product_if_simple(&self, s: &NcPartitionSimple, t: &NcPartitionSimple) -> Option<NcPartitionSimple> {
        let perm = compose(&t.to_perm(self.n), &s.to_perm(self.n));
        let prod = partition_from_perm(&perm)?;
        if self.atom_len(&prod) == self.atom_len(s) + self.atom_len(t) {
            Some(prod)
        } else {
            None
        }
    }

    fn left_quotient(&self, s: &NcPartitionSimple, t: &NcPartitionSimple) -> Option<NcPartitionSimple> {
        if !self.left_divides_simple(s, t) {
            return None;
        }
        let perm = compose(&t.to_perm(self.n), &inverse(&s.to_perm(self.n)));
        let q = partition_from_perm(&perm)
            .expect("quotient of a refinement pair is simple");
        debug_assert_eq!(self.atom_len(s) + self.atom_len(&q), self.atom_len(t));
        Some(q)
    }

    fn simple_from_atom_word(&self, word: &[usize]) -> Result<NcPartitionSimple> {
        let mut acc = self.identity_simple();
        for &idx in word {
            if idx >= self.atom_pairs.len() {
                return Err(Error::AtomOutOfRange { index: idx, n: self.n });
            }
            acc = self
                .product_if_simple(&acc, &self.atom(idx))
                .ok_or(Error::NotSimple)?;
        }
        Ok(acc)
    }

    fn enumerate_simples(&self) -> Vec<NcPartitionSimple> {
        assert!(self.n <= 12, "full enumeration is restricted to small braid index");
        self.simple_table
            .get_or_init(|| {
                let elems: Vec<Elem> = (0..self.n as Elem).collect();
                nc_partitions(&elems)
            })
            .clone()
    }

    fn join_simple(&self, s: &NcPartitionSimple, t: &NcPartitionSimple) -> NcPartitionSimple {
        // Set-partition join, then merge crossing blocks until non-crossing.
        let sid = s.block_ids(self.n);
        let tid = t.block_ids(self.n);
        let mut uf: Vec<usize> = (0..self.n).collect();
        fn find(uf: &mut Vec<usize>, x: usize) -> usize {
            if uf[x] != x {
                let root = find(uf, uf[x]);
                uf[x] = root;
            }
            uf[x]
        }
        for e in 1..self.n {
            for f in 0..e {
                if sid[e] == sid[f] || tid[e] == tid[f] {
                    let (a, b) = (find(&mut uf, e), find(&mut uf, f));
                    if a != b {
                        uf[a] = b;
                    }
                }
            }
        }
        let mut buckets: std::collections::HashMap<usize, Vec<Elem>> =
            std::collections::HashMap::new();
        for e in 0..self.n {
            let root = find(&mut uf, e);
            buckets.entry(root).or_default().push(e as Elem);
        }
        let mut part = NcPartitionSimple::canonical(buckets.into_values().collect());
        while let Some((a, b)) = find_crossing(&part, self.n) {
            let mut blocks = part.blocks.clone();
            let merged = blocks.swap_remove(a.max(b));
            blocks[a.min(b)].extend(merged);
            part = NcPartitionSimple::canonical(blocks);
        }
        part
    }
}

/// All non-crossing partitions of a strictly increasing element list: the
/// block of the least element separates the rest into independent gaps.
fn nc_partitions(elems: &[Elem]) -> Vec<NcPartitionSimple> {
    if elems.is_empty() {
        return vec![NcPartitionSimple { blocks: Vec::new() }];
    }
    let mut out = Vec::new();
    let rest = &elems[1..];
    // Choose the partners of elems[0] as an increasing subsequence of rest,
    // then partition each gap independently.
    let mut partners: Vec<usize> = Vec::new();
    loop {
        // Current block and gap decomposition.
        let mut block = vec![elems[0]];
        block.extend(partners.iter().map(|&i| rest[i]));
        let mut gaps: Vec<&[Elem]> = Vec::new();
        let mut prev = 0usize;
        for &i in &partners {
            gaps.push(&rest[prev..i]);
            prev = i + 1;
        }
        gaps.push(&rest[prev..]);
        let gap_parts: Vec<Vec<NcPartitionSimple>> =
            gaps.iter().map(|g| nc_partitions(g)).collect();
        let mut combos: Vec<Vec<Vec<Elem>>> = vec![vec![block.clone()]];
        for parts in &gap_parts {
            let mut next = Vec::new();
            for combo in &combos {
                for part in parts {
                    let mut extended = combo.clone();
                    extended.extend(part.blocks.iter().cloned());
                    next.push(extended);
                }
            }
            combos = next;
        }
        for blocks in combos {
            out.push(NcPartitionSimple::canonical(blocks));
        }
        // Advance to the next partner subsequence (odometer).
        let start = partners.last().map_or(0, |&i| i + 1);
        if start < rest.len() {
            partners.push(start);
        } else {
            loop {
                match partners.pop() {
                    None => return out,
                    Some(last) if last + 1 < rest.len() => {
                        partners.push(last + 1);
                        break;
                    }
                    Some(_) => {}
                }
            }
        }
    }
}
