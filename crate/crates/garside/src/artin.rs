//! Artin presentation backend: simple elements are permutation braids.
//!
//! A simple element is stored as the permutation it induces on strand
//! positions, `map[i]` being the final position of the strand that starts at
//! position `i` (0-based).  Braid words act left to right: the first factor
//! acts first, so `(s * t)[p] = t[s[p]]`.
//!
//! Divisibility convention, frozen after validating both orientations
//! against brute-force divisor enumeration (see the `convention` tests and
//! `oracle::validate_backend`): the atom swapping positions `i, i+1`
//! left-divides `s` iff `s[i] > s[i+1]`, i.e. iff the strands starting at
//! `i` and `i+1` cross.  Equivalently `s` left-divides `t` iff every pair of
//! start positions crossed by `s` is also crossed by `t`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::presentation::Presentation;

type Strand = u16;

/// A permutation braid: left divisor of the positive half twist.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PermutationSimple {
    map: Vec<Strand>,
}

impl PermutationSimple {
    pub fn permutation(&self) -> &[Strand] {
        &self.map
    }

    /// 1-based one-line notation, matching the I/O convention.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize + 1).collect()
    }
}

/// Composes two position maps: the strand runs through `first`, then
/// `second`.
fn compose(second: &[Strand], first: &[Strand]) -> Vec<Strand> {
    first.iter().map(|&p| second[p as usize]).collect()
}

fn inverse(p: &[Strand]) -> Vec<Strand> {
    let mut out = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        out[v as usize] = i as Strand;
    }
    out
}

fn inversions(p: &[Strand]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// The Artin presentation of the braid group on `n` strands.
#[derive(Clone, Debug)]
pub struct ArtinPresentation {
    n: usize,
}

impl ArtinPresentation {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "braid index must be at least 2");
        assert!(n <= Strand::MAX as usize, "braid index too large");
        ArtinPresentation { n }
    }

    fn simple(&self, map: Vec<Strand>) -> PermutationSimple {
        debug_assert_eq!(map.len(), self.n);
        PermutationSimple { map }
    }
}

impl Presentation for ArtinPresentation {
    type Simple = PermutationSimple;

    fn braid_index(&self) -> usize {
        self.n
    }

    fn atom_count(&self) -> usize {
        self.n - 1
    }

    fn atom(&self, idx: usize) -> PermutationSimple {
        assert!(idx < self.atom_count());
        let mut map: Vec<Strand> = (0..self.n as Strand).collect();
        map.swap(idx, idx + 1);
        self.simple(map)
    }

    fn identity_simple(&self) -> PermutationSimple {
        self.simple((0..self.n as Strand).collect())
    }

    fn delta(&self) -> PermutationSimple {
        self.simple((0..self.n as Strand).rev().collect())
    }

    fn tau_order(&self) -> usize {
        2
    }

    fn atom_len(&self, s: &PermutationSimple) -> usize {
        inversions(&s.map)
    }

    fn atom_left_divides_simple(&self, atom: usize, s: &PermutationSimple) -> bool {
        assert!(atom < self.atom_count());
        s.map[atom] > s.map[atom + 1]
    }

    fn left_divides_simple(&self, s: &PermutationSimple, t: &PermutationSimple) -> bool {
        // Inclusion of crossing sets (pairs of start positions).
        for i in 0..self.n {
            for j in i + 1..self.n {
                if s.map[i] > s.map[j] && t.map[i] < t.map[j] {
                    return false;
                }
            }
        }
        true
    }

    fn meet_simple(&self, s: &PermutationSimple, t: &PermutationSimple) -> PermutationSimple {
        // Greedy atom absorption: extend d by any atom dividing both
        // quotients d^-1 s and d^-1 t until none does.
        let mut d: Vec<Strand> = (0..self.n as Strand).collect();
        let mut u = s.map.clone();
        let mut v = t.map.clone();
        loop {
            let mut progressed = false;
            for i in 0..self.n - 1 {
                if u[i] > u[i + 1] && v[i] > v[i + 1] {
                    u.swap(i, i + 1);
                    v.swap(i, i + 1);
                    // d <- d * sigma_{i+1}: swap the values i, i+1 in d.
                    let a = d.iter().position(|&x| x == i as Strand).unwrap();
                    let b = d.iter().position(|&x| x == (i + 1) as Strand).unwrap();
                    d.swap(a, b);
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        self.simple(d)
    }

    fn right_meet_simple(&self, s: &PermutationSimple, t: &PermutationSimple) -> PermutationSimple {
        // Symmetric greedy on right divisibility: the atom swapping i, i+1
        // right-divides w iff the strands *ending* at i, i+1 cross, i.e.
        // w^-1[i] > w^-1[i+1].
        let mut d: Vec<Strand> = (0..self.n as Strand).collect();
        let mut u = s.map.clone();
        let mut v = t.map.clone();
        loop {
            let mut progressed = false;
            for i in 0..self.n - 1 {
                let ui = inverse(&u);
                let vi = inverse(&v);
                if ui[i] > ui[i + 1] && vi[i] > vi[i + 1] {
                    // u <- u * sigma_{i+1}^-1: swap values i, i+1 in u.
                    u.swap(ui[i + 1] as usize, ui[i] as usize);
                    v.swap(vi[i + 1] as usize, vi[i] as usize);
                    // d <- sigma_{i+1} * d: swap entries i, i+1.
                    d.swap(i, i + 1);
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        self.simple(d)
    }

    fn complement(&self, s: &PermutationSimple) -> PermutationSimple {
        let inv = inverse(&s.map);
        let n = self.n as Strand;
        self.simple(inv.iter().map(|&v| n - 1 - v).collect())
    }

    fn tau_simple(&self, s: &PermutationSimple) -> PermutationSimple {
        let n = self.n;
        let map = (0..n)
            .map(|p| (n - 1) as Strand - s.map[n - 1 - p])
            .collect();
        self.simple(map)
    }

    fn tau_inv_simple(&self, s: &PermutationSimple) -> PermutationSimple {
        // tau is an involution on permutation braids.
        self.tau_simple(s)
    }

    fn product_if_simple(&self, s: &PermutationSimple, t: &PermutationSimple) -> Option<PermutationSimple> {
        let map = compose(&t.map, &s.map);
        if inversions(&map) == inversions(&s.map) + inversions(&t.map) {
            Some(self.simple(map))
        } else {
            None
        }
    }

    fn left_quotient(&self, s: &PermutationSimple, t: &PermutationSimple) -> Option<PermutationSimple> {
        if !self.left_divides_simple(s, t) {
            return None;
        }
        let sinv = inverse(&s.map);
        Some(self.simple(compose(&t.map, &sinv)))
    }

    fn simple_from_atom_word(&self, word: &[usize]) -> Result<PermutationSimple> {
        let mut pos_to_strand: Vec<Strand> = (0..self.n as Strand).collect();
        let mut crossed: HashSet<(Strand, Strand)> = HashSet::new();
        for &i in word {
            if i >= self.atom_count() {
                return Err(Error::AtomOutOfRange { index: i, n: self.n });
            }
            let a = pos_to_strand[i];
            let b = pos_to_strand[i + 1];
            let key = (a.min(b), a.max(b));
            if !crossed.insert(key) {
                return Err(Error::NotSimple);
            }
            pos_to_strand.swap(i, i + 1);
        }
        Ok(self.simple(inverse(&pos_to_strand)))
    }

    fn enumerate_simples(&self) -> Vec<PermutationSimple> {
        assert!(self.n <= 8, "full enumeration is restricted to small braid index");
        let mut out = Vec::new();
        let mut current: Vec<Strand> = (0..self.n as Strand).collect();
        heap_permutations(&mut current, self.n, &mut out);
        out.into_iter().map(|map| self.simple(map)).collect()
    }
}

fn heap_permutations(items: &mut Vec<Strand>, k: usize, out: &mut Vec<Vec<Strand>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b3() -> ArtinPresentation {
        ArtinPresentation::new(3)
    }

    fn word(p: &ArtinPresentation, w: &[usize]) -> PermutationSimple {
        p.simple_from_atom_word(w).unwrap()
    }

    #[test]
    fn delta_is_the_half_twist_word() {
        let p = b3();
        assert_eq!(word(&p, &[0, 1, 0]), p.delta());
        let p4 = ArtinPresentation::new(4);
        assert_eq!(word(&p4, &[0, 1, 2, 0, 1, 0]), p4.delta());
    }

    #[test]
    fn squares_are_not_simple() {
        let p = b3();
        assert!(matches!(p.simple_from_atom_word(&[0, 0]), Err(Error::NotSimple)));
        assert!(matches!(
            p.simple_from_atom_word(&[0, 1, 0, 1]),
            Err(Error::NotSimple)
        ));
    }

    #[test]
    fn atom_divisibility_examples() {
        let p = b3();
        let delta = p.delta();
        assert!(p.atom_left_divides_simple(0, &delta));
        assert!(p.atom_left_divides_simple(1, &delta));
        let id = p.identity_simple();
        assert!(!p.atom_left_divides_simple(0, &id));
        assert!(!p.atom_left_divides_simple(1, &id));
        let s1 = p.atom(0);
        assert!(p.atom_left_divides_simple(0, &s1));
        assert!(!p.atom_left_divides_simple(1, &s1));
    }

    #[test]
    fn complement_examples() {
        let p = b3();
        assert_eq!(p.complement(&p.identity_simple()), p.delta());
        assert_eq!(p.complement(&p.delta()), p.identity_simple());
        // sigma1 * (sigma2 sigma1) = delta
        assert_eq!(p.complement(&p.atom(0)), word(&p, &[1, 0]));
    }

    #[test]
    fn complement_inverts() {
        let p = ArtinPresentation::new(4);
        for s in p.enumerate_simples() {
            assert_eq!(p.complement_inv(&p.complement(&s)), s);
            let prod = p.product_if_simple(&s, &p.complement(&s)).unwrap();
            assert_eq!(prod, p.delta());
        }
    }

    #[test]
    fn tau_swaps_the_atoms_of_b3() {
        let p = b3();
        assert_eq!(p.tau_simple(&p.atom(0)), p.atom(1));
        assert_eq!(p.tau_simple(&p.delta()), p.delta());
        assert_eq!(p.tau_simple(&p.identity_simple()), p.identity_simple());
        for s in p.enumerate_simples() {
            assert_eq!(p.tau_simple(&p.tau_simple(&s)), s);
        }
    }

    #[test]
    fn meet_and_join_hand_values() {
        let p = b3();
        let s1 = p.atom(0);
        let s2 = p.atom(1);
        assert_eq!(p.meet_simple(&s1, &s2), p.identity_simple());
        assert_eq!(p.join_simple(&s1, &s2), p.delta());
        assert_eq!(p.join_simple(&s1, &p.identity_simple()), s1);
        assert_eq!(p.join_simple(&s1, &s1), s1);
        let s12 = word(&p, &[0, 1]);
        assert_eq!(p.meet_simple(&s12, &s1), s1);

        let p4 = ArtinPresentation::new(4);
        let a = word(&p4, &[0, 1]);
        let b = word(&p4, &[0, 2]);
        assert_eq!(p4.meet_simple(&a, &b), p4.atom(0));
    }

    #[test]
    fn simple_count_is_factorial() {
        for (n, count) in [(3usize, 6usize), (4, 24), (5, 120)] {
            let p = ArtinPresentation::new(n);
            let simples = p.enumerate_simples();
            assert_eq!(simples.len(), count);
            let dedup: HashSet<_> = simples.into_iter().collect();
            assert_eq!(dedup.len(), count);
        }
    }

    #[test]
    fn word_round_trip_on_all_simples() {
        let p = ArtinPresentation::new(4);
        for s in p.enumerate_simples() {
            // Greedy spelling: repeatedly strip the smallest dividing atom.
            let mut rest = s.clone();
            let mut letters = Vec::new();
            'outer: loop {
                for i in 0..p.atom_count() {
                    if p.atom_left_divides_simple(i, &rest) {
                        letters.push(i);
                        rest = p.left_quotient(&p.atom(i), &rest).unwrap();
                        continue 'outer;
                    }
                }
                break;
            }
            assert!(p.is_identity(&rest));
            assert_eq!(word(&p, &letters), s);
        }
    }
}
