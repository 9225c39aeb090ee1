//! Backend contract for a Garside presentation of the braid group.
//!
//! A backend supplies the finite lattice of simple elements (the divisors of
//! the Garside element delta) together with the simple-level primitives that
//! the generic canonical-form and conjugacy machinery is built from.  Two
//! backends ship: permutation braids ([`crate::artin`]) and non-crossing
//! partitions ([`crate::bkl`]).

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;

/// A concrete Garside presentation of the braid group on `braid_index`
/// strands.
///
/// Required invariants, validated exhaustively at small braid index by the
/// [`crate::oracle`] module:
///
/// * every atom left-divides delta;
/// * the set of simples is finite and closed under meet, join, complement
///   and tau;
/// * `complement(s)` satisfies `s * complement(s) = delta`.
pub trait Presentation: Send + Sync {
    /// Payload type for simple elements (left divisors of delta).
    type Simple: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    /// Number of strands.
    fn braid_index(&self) -> usize;

    fn atom_count(&self) -> usize;

    /// The `idx`-th atom, `0 <= idx < atom_count()`.
    fn atom(&self, idx: usize) -> Self::Simple;

    fn identity_simple(&self) -> Self::Simple;

    fn delta(&self) -> Self::Simple;

    /// Order of tau (conjugation by delta) on simples.
    fn tau_order(&self) -> usize;

    /// Number of atoms in any decomposition of `s`.
    fn atom_len(&self, s: &Self::Simple) -> usize;

    fn atom_left_divides_simple(&self, atom: usize, s: &Self::Simple) -> bool;

    fn left_divides_simple(&self, s: &Self::Simple, t: &Self::Simple) -> bool;

    /// Left gcd of two simples.
    fn meet_simple(&self, s: &Self::Simple, t: &Self::Simple) -> Self::Simple;

    /// Gcd of two simples with respect to right divisibility.
    fn right_meet_simple(&self, s: &Self::Simple, t: &Self::Simple) -> Self::Simple;

    /// The complement `s^-1 * delta`.
    fn complement(&self, s: &Self::Simple) -> Self::Simple;

    fn tau_simple(&self, s: &Self::Simple) -> Self::Simple;

    fn tau_inv_simple(&self, s: &Self::Simple) -> Self::Simple;

    /// `s * t` when the product is simple, `None` otherwise.
    fn product_if_simple(&self, s: &Self::Simple, t: &Self::Simple) -> Option<Self::Simple>;

    /// `s^-1 * t` when `s` left-divides `t`, `None` otherwise.
    fn left_quotient(&self, s: &Self::Simple, t: &Self::Simple) -> Option<Self::Simple>;

    /// Builds a simple element from a positive atom word; errors when the
    /// word does not divide delta.
    fn simple_from_atom_word(&self, word: &[usize]) -> Result<Self::Simple>;

    /// Every simple element, including the identity and delta.  Intended for
    /// small braid index only (oracle checks and uniform sampling).
    fn enumerate_simples(&self) -> Vec<Self::Simple>;

    fn is_identity(&self, s: &Self::Simple) -> bool {
        *s == self.identity_simple()
    }

    fn is_delta(&self, s: &Self::Simple) -> bool {
        *s == self.delta()
    }

    /// The inverse of the complement map: `delta * s^-1`.
    fn complement_inv(&self, s: &Self::Simple) -> Self::Simple {
        self.complement(&self.tau_inv_simple(s))
    }

    /// Least common right-multiple of two simples, computed through the
    /// order-reversing bijection `complement`: upper bounds of `{s, t}` in
    /// left divisibility correspond to common right divisors of the
    /// complements.
    fn join_simple(&self, s: &Self::Simple, t: &Self::Simple) -> Self::Simple {
        let rm = self.right_meet_simple(&self.complement(s), &self.complement(t));
        self.complement_inv(&rm)
    }

    /// Left-greedy rewriting of the product `s * t` as a normal-form pair:
    /// the head absorbs `complement(s) /\ t`.
    fn simple_product_split(&self, s: &Self::Simple, t: &Self::Simple) -> (Self::Simple, Self::Simple) {
        let moved = self.meet_simple(&self.complement(s), t);
        let head = self
            .product_if_simple(s, &moved)
            .expect("transfer below the complement keeps the head simple");
        let tail = self
            .left_quotient(&moved, t)
            .expect("meet divides its argument");
        (head, tail)
    }

    fn tau_pow_simple(&self, s: &Self::Simple, m: i64) -> Self::Simple {
        let ord = self.tau_order() as i64;
        let m = m.rem_euclid(ord) as usize;
        let mut out = s.clone();
        for _ in 0..m {
            out = self.tau_simple(&out);
        }
        out
    }

    fn atoms(&self) -> Vec<Self::Simple> {
        (0..self.atom_count()).map(|i| self.atom(i)).collect()
    }
}
