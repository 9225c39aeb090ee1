//! Left-greedy canonical forms and the positive-element calculus.
//!
//! An element is stored as a delta power (the infimum) followed by the
//! greedy sequence of simple factors, none of them trivial or equal to
//! delta, with `complement(A_i) /\ A_{i+1} = 1` for every adjacent pair.

use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// One token of an input word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    /// A positive atom, by 0-based index.
    Atom(usize),
    /// An inverted atom, by 0-based index.
    AtomInv(usize),
    /// A (possibly negative) power of delta.
    DeltaPow(i64),
}

/// Canonical form `delta^inf * A_1 ... A_r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm<S> {
    inf: i64,
    factors: Vec<S>,
}

impl<S: Clone + Eq> CanonicalForm<S> {
    pub fn identity() -> Self {
        CanonicalForm { inf: 0, factors: Vec::new() }
    }

    pub fn delta_pow(k: i64) -> Self {
        CanonicalForm { inf: k, factors: Vec::new() }
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }

    pub fn factors(&self) -> &[S] {
        &self.factors
    }

    /// The positive part of the factor sequence, with the delta power
    /// stripped.
    pub fn factor_form(&self) -> CanonicalForm<S> {
        CanonicalForm { inf: 0, factors: self.factors.clone() }
    }

    /// Shifts the delta power without touching the factors.
    pub fn shift(&self, by: i64) -> CanonicalForm<S> {
        CanonicalForm { inf: self.inf + by, factors: self.factors.clone() }
    }
}

/// Builds the canonical form of `delta^inf * fs` by local greedy sweeps:
/// each adjacent pair `(A, B)` absorbs `t = complement(A) /\ B` into the
/// head until a full pass is stable, after which delta factors sit at the
/// front and trivial factors at the back.
pub fn normalize_factors<P: Presentation>(
    p: &P,
    inf: i64,
    mut fs: Vec<P::Simple>,
) -> CanonicalForm<P::Simple> {
    loop {
        let mut changed = false;
        for i in 0..fs.len().saturating_sub(1) {
            if p.is_delta(&fs[i]) || p.is_identity(&fs[i + 1]) {
                continue;
            }
            let t = p.meet_simple(&p.complement(&fs[i]), &fs[i + 1]);
            if p.is_identity(&t) {
                continue;
            }
            fs[i] = p
                .product_if_simple(&fs[i], &t)
                .expect("transfer below the complement keeps the head simple");
            fs[i + 1] = p
                .left_quotient(&t, &fs[i + 1])
                .expect("meet divides its argument");
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let lead = fs.iter().take_while(|f| p.is_delta(f)).count();
    let inf = inf + lead as i64;
    fs.drain(..lead);
    while fs.last().map_or(false, |f| p.is_identity(f)) {
        fs.pop();
    }
    debug_assert!(fs.iter().all(|f| !p.is_identity(f) && !p.is_delta(f)));
    CanonicalForm { inf, factors: fs }
}

pub fn from_simple<P: Presentation>(p: &P, s: &P::Simple) -> CanonicalForm<P::Simple> {
    if p.is_identity(s) {
        CanonicalForm::identity()
    } else if p.is_delta(s) {
        CanonicalForm::delta_pow(1)
    } else {
        CanonicalForm { inf: 0, factors: vec![s.clone()] }
    }
}

/// Extracts the unique simple element a canonical form of supremum <= 1
/// represents.  Panics when the form is longer than a simple.
pub fn to_simple<P: Presentation>(p: &P, x: &CanonicalForm<P::Simple>) -> P::Simple {
    match (x.inf, x.factors.len()) {
        (0, 0) => p.identity_simple(),
        (1, 0) => p.delta(),
        (0, 1) => x.factors[0].clone(),
        _ => panic!("canonical form is not simple: inf {}, len {}", x.inf, x.len()),
    }
}

pub fn multiply<P: Presentation>(
    p: &P,
    a: &CanonicalForm<P::Simple>,
    b: &CanonicalForm<P::Simple>,
) -> CanonicalForm<P::Simple> {
    let mut fs = Vec::with_capacity(a.factors.len() + b.factors.len());
    for f in &a.factors {
        fs.push(p.tau_pow_simple(f, b.inf));
    }
    fs.extend(b.factors.iter().cloned());
    normalize_factors(p, a.inf + b.inf, fs)
}

pub fn invert<P: Presentation>(p: &P, a: &CanonicalForm<P::Simple>) -> CanonicalForm<P::Simple> {
    // delta^k A_1..A_r inverts to delta^-(k+r) tau^(r-1-k)(B_r) ... tau^-k(B_1)
    // with B_i = delta * A_i^-1.
    let r = a.factors.len() as i64;
    let k = a.inf;
    let mut fs = Vec::with_capacity(a.factors.len());
    for (i, f) in a.factors.iter().enumerate().rev() {
        let b = p.complement_inv(f);
        fs.push(p.tau_pow_simple(&b, i as i64 - k));
    }
    normalize_factors(p, -(k + r), fs)
}

pub fn conjugate<P: Presentation>(
    p: &P,
    x: &CanonicalForm<P::Simple>,
    c: &CanonicalForm<P::Simple>,
) -> CanonicalForm<P::Simple> {
    multiply(p, &multiply(p, &invert(p, c), x), c)
}

pub fn tau_pow<P: Presentation>(
    p: &P,
    x: &CanonicalForm<P::Simple>,
    m: i64,
) -> CanonicalForm<P::Simple> {
    CanonicalForm {
        inf: x.inf,
        factors: x.factors.iter().map(|f| p.tau_pow_simple(f, m)).collect(),
    }
}

/// `a` left-divides `b` iff `a^-1 b` is positive.
pub fn left_divides<P: Presentation>(
    p: &P,
    a: &CanonicalForm<P::Simple>,
    b: &CanonicalForm<P::Simple>,
) -> bool {
    multiply(p, &invert(p, a), b).is_positive()
}

pub fn normalize<P: Presentation>(p: &P, letters: &[Letter]) -> Result<CanonicalForm<P::Simple>> {
    let mut acc = CanonicalForm::identity();
    for &letter in letters {
        let piece = match letter {
            Letter::Atom(i) => {
                check_atom(p, i)?;
                from_simple(p, &p.atom(i))
            }
            Letter::AtomInv(i) => {
                check_atom(p, i)?;
                invert(p, &from_simple(p, &p.atom(i)))
            }
            Letter::DeltaPow(k) => CanonicalForm::delta_pow(k),
        };
        acc = multiply(p, &acc, &piece);
    }
    Ok(acc)
}

fn check_atom<P: Presentation>(p: &P, i: usize) -> Result<()> {
    if i >= p.atom_count() {
        Err(Error::AtomOutOfRange { index: i, n: p.braid_index() })
    } else {
        Ok(())
    }
}

/// The first normal-form factor of a positive element, extended to delta
/// for positive infimum: `head(u) = u /\ delta`.
fn head<P: Presentation>(p: &P, u: &CanonicalForm<P::Simple>) -> P::Simple {
    debug_assert!(u.is_positive());
    if u.inf >= 1 {
        p.delta()
    } else {
        u.factors.first().cloned().unwrap_or_else(|| p.identity_simple())
    }
}

/// Left gcd of two positive elements, by head peeling: each round emits
/// `meet_simple(head(u), head(v))`, which is the head of the gcd.
pub fn meet_positive<P: Presentation>(
    p: &P,
    u: &CanonicalForm<P::Simple>,
    v: &CanonicalForm<P::Simple>,
) -> Result<CanonicalForm<P::Simple>> {
    for x in [u, v] {
        if !x.is_positive() {
            return Err(Error::NotPositive { inf: x.inf });
        }
    }
    let mut u = u.clone();
    let mut v = v.clone();
    let mut acc = Vec::new();
    loop {
        let d = p.meet_simple(&head(p, &u), &head(p, &v));
        if p.is_identity(&d) {
            break;
        }
        let dcf = from_simple(p, &d);
        let dinv = invert(p, &dcf);
        u = multiply(p, &dinv, &u);
        v = multiply(p, &dinv, &v);
        debug_assert!(u.is_positive() && v.is_positive());
        acc.push(d);
    }
    Ok(normalize_factors(p, 0, acc))
}

/// Minimal simple `c` with `s` dividing `u * c`, i.e. `u * c = u \/ s`,
/// computed by folding the simple-level identity `(AB)\s = B\(A\s)` with
/// `A\s = A^-1 (A \/ s)`.
pub fn complement_in_positive<P: Presentation>(
    p: &P,
    u: &CanonicalForm<P::Simple>,
    s: &P::Simple,
) -> P::Simple {
    debug_assert!(u.is_positive());
    if u.inf >= 1 {
        // delta divides u, so s already divides u.
        return p.identity_simple();
    }
    let mut c = s.clone();
    for f in &u.factors {
        let joined = p.join_simple(f, &c);
        c = p.left_quotient(f, &joined).expect("factor divides the join");
    }
    c
}

/// `delta^j \/ w` for positive `w`, peeling one delta at a time through
/// `w \/ delta = w * (w\delta)`.
fn join_with_delta_pow<P: Presentation>(
    p: &P,
    w: &CanonicalForm<P::Simple>,
    j: i64,
) -> CanonicalForm<P::Simple> {
    debug_assert!(w.is_positive());
    if j <= 0 {
        return w.clone();
    }
    let c = complement_in_positive(p, w, &p.delta());
    let r1 = multiply(p, w, &from_simple(p, &c));
    debug_assert!(r1.inf >= 1);
    let inner = join_with_delta_pow(p, &r1.shift(-1), j - 1);
    inner.shift(1)
}

/// `1 \/ g`: the least positive element `h` with `g` dividing `h`.
pub fn positive_part<P: Presentation>(
    p: &P,
    g: &CanonicalForm<P::Simple>,
) -> CanonicalForm<P::Simple> {
    if g.inf >= 0 {
        return g.clone();
    }
    let w = g.factor_form();
    join_with_delta_pow(p, &w, -g.inf).shift(g.inf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::ArtinPresentation;

    type Cf = CanonicalForm<crate::artin::PermutationSimple>;

    fn b3() -> ArtinPresentation {
        ArtinPresentation::new(3)
    }

    fn nf(p: &ArtinPresentation, word: &[i64]) -> Cf {
        let letters: Vec<Letter> = word
            .iter()
            .map(|&i| {
                if i > 0 {
                    Letter::Atom(i as usize - 1)
                } else {
                    Letter::AtomInv((-i) as usize - 1)
                }
            })
            .collect();
        normalize(p, &letters).unwrap()
    }

    #[test]
    fn normal_form_hand_examples() {
        let p = b3();

        let half_twist = nf(&p, &[1, 2, 1]);
        assert_eq!(half_twist, CanonicalForm::delta_pow(1));

        assert_eq!(nf(&p, &[]), CanonicalForm::identity());

        let x = nf(&p, &[1, 2, 1, 2]);
        assert_eq!(x.inf(), 1);
        assert_eq!(x.factors(), &[p.atom(1)]);

        let y = nf(&p, &[-2]);
        assert_eq!(y.inf(), -1);
        assert_eq!(y.factors(), &[p.simple_from_atom_word(&[1, 0]).unwrap()]);
    }

    #[test]
    fn braid_relations_normalize_equal() {
        let p = b3();
        assert_eq!(nf(&p, &[1, 2, 1]), nf(&p, &[2, 1, 2]));
        let p4 = ArtinPresentation::new(4);
        assert_eq!(nf(&p4, &[1, 3]), nf(&p4, &[3, 1]));
    }

    #[test]
    fn multiply_keeps_greedy_pairs() {
        let p = b3();
        let s1 = nf(&p, &[1]);
        let prod = multiply(&p, &s1, &s1);
        assert_eq!(prod.inf(), 0);
        assert_eq!(prod.factors(), &[p.atom(0), p.atom(0)]);
    }

    #[test]
    fn inverse_laws() {
        let p = b3();
        for word in [&[1, 2, 1, 2][..], &[1][..], &[-2, 1][..], &[2, 2, 1, -1, 2][..]] {
            let x = nf(&p, word);
            let xi = invert(&p, &x);
            assert!(multiply(&p, &x, &xi).is_identity());
            assert!(multiply(&p, &xi, &x).is_identity());
            assert_eq!(xi.inf(), -x.sup());
            assert_eq!(xi.sup(), -x.inf());
        }
        let sigma1_inv = invert(&p, &nf(&p, &[1]));
        assert_eq!(sigma1_inv, nf(&p, &[-1]));
    }

    #[test]
    fn delta_powers_cancel() {
        let p = b3();
        let a = CanonicalForm::delta_pow(1);
        let b = CanonicalForm::delta_pow(-1);
        assert!(multiply(&p, &a, &b).is_identity());
    }

    #[test]
    fn conjugation_by_delta_is_tau() {
        let p = b3();
        let x = nf(&p, &[1, 1]);
        let by_delta = conjugate(&p, &x, &CanonicalForm::delta_pow(1));
        assert_eq!(by_delta, nf(&p, &[2, 2]));
        assert_eq!(by_delta, tau_pow(&p, &x, 1));
        assert_eq!(tau_pow(&p, &by_delta, 1), x);

        // Even delta powers are central.
        let c = nf(&p, &[2, -1, 2]);
        let k2 = CanonicalForm::delta_pow(2);
        assert_eq!(conjugate(&p, &k2, &c), k2);
        assert_eq!(conjugate(&p, &x, &CanonicalForm::identity()), x);
    }

    #[test]
    fn divisibility_examples() {
        let p = b3();
        let s1 = nf(&p, &[1]);
        let s12 = nf(&p, &[1, 2]);
        let s21 = nf(&p, &[2, 1]);
        assert!(left_divides(&p, &s1, &s12));
        assert!(!left_divides(&p, &s1, &s21));
        assert!(left_divides(&p, &s12, &s12));
    }

    #[test]
    fn positive_meet_examples() {
        let p = b3();
        let s1 = nf(&p, &[1]);
        let s2 = nf(&p, &[2]);
        assert!(meet_positive(&p, &s1, &s2).unwrap().is_identity());

        let a = nf(&p, &[1, 2]);
        let b = nf(&p, &[1, 1]);
        assert_eq!(meet_positive(&p, &a, &b).unwrap(), s1);
        assert_eq!(meet_positive(&p, &a, &a).unwrap(), a);

        let neg = nf(&p, &[-1]);
        assert!(meet_positive(&p, &neg, &a).is_err());
    }

    #[test]
    fn complement_in_positive_examples() {
        let p = b3();
        let s2 = p.atom(1);
        assert_eq!(complement_in_positive(&p, &Cf::identity(), &s2), s2);
        let u = nf(&p, &[1]);
        assert_eq!(
            complement_in_positive(&p, &u, &p.identity_simple()),
            p.identity_simple()
        );
        // sigma1 \/ sigma2 = delta = sigma1 * (sigma2 sigma1)
        assert_eq!(
            complement_in_positive(&p, &u, &s2),
            p.simple_from_atom_word(&[1, 0]).unwrap()
        );
    }

    #[test]
    fn positive_part_examples() {
        let p = b3();
        // sigma1^-1 divides the identity, so its positive part is trivial.
        assert!(positive_part(&p, &nf(&p, &[-1])).is_identity());

        // Defining properties plus minimality against a brute scan over
        // positive elements of supremum <= 2.
        let simples = p.enumerate_simples();
        for word in [&[2, -1][..], &[-2, -1][..], &[1, 2][..], &[1, -2, -1][..]] {
            let g = nf(&p, word);
            let h = positive_part(&p, &g);
            assert!(h.is_positive());
            assert!(left_divides(&p, &g, &h));
            for a in &simples {
                for b in &simples {
                    let cand = multiply(&p, &from_simple(&p, a), &from_simple(&p, b));
                    if left_divides(&p, &g, &cand) {
                        assert!(left_divides(&p, &h, &cand));
                    }
                }
            }
        }
    }
}
