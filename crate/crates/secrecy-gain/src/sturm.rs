//! Sturm sequences: exact real-root counting and isolation.
//!
//! Everything here works over an ordered exact field, so all sign decisions
//! are true signs, never rounded ones.  The chain for a squarefree p is
//!
//! ```text
//!     p_0 = p,   p_1 = p',   p_{i+1} = -(p_{i-1} mod p_i),
//! ```
//!
//! each member divided by the absolute value of its leading coefficient (a
//! positive scalar, which preserves every sign).  For a < b with
//! `p(a) != 0 != p(b)`, the difference `V(a) - V(b)` of sign-change counts
//! equals the number of distinct roots in the open interval `(a, b)`.
//!
//! The public entry points count and isolate roots of an *arbitrary*
//! nonzero polynomial in an open interval: multiplicities are flattened via
//! the squarefree part, and roots sitting exactly on an endpoint are divided
//! out first, so they are never counted.

use crate::poly::Poly;
use crate::scalar::{int, sign, ExactField};

/// Where one root of a polynomial lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLoc<T> {
    /// A root found exactly (always a rational in this crate).
    Exact(T),
    /// Exactly one root lies in the open interval; neither endpoint is a
    /// root, and the whole interval is strictly inside the query interval.
    Bracket(T, T),
}

impl<T: Clone> RootLoc<T> {
    /// Lower end of the location (the point itself for `Exact`).
    pub fn low(&self) -> T {
        match self {
            RootLoc::Exact(x) => x.clone(),
            RootLoc::Bracket(lo, _) => lo.clone(),
        }
    }

    /// Upper end of the location (the point itself for `Exact`).
    pub fn high(&self) -> T {
        match self {
            RootLoc::Exact(x) => x.clone(),
            RootLoc::Bracket(_, hi) => hi.clone(),
        }
    }
}

/// Sturm chain of a squarefree polynomial.
struct SturmChain<T> {
    chain: Vec<Poly<T>>,
}

impl<T: ExactField> SturmChain<T> {
    /// Build the chain.  The input must be squarefree (callers obtain it
    /// from [`Poly::squarefree_part`]), which guarantees the chain ends in a
    /// nonzero constant.
    fn new_squarefree(p: &Poly<T>) -> Self {
        let mut chain = vec![p.reduced_by_positive_leading()];
        if !p.is_constant() {
            chain.push(p.derivative().reduced_by_positive_leading());
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push((-&r).reduced_by_positive_leading());
            }
        }
        SturmChain { chain }
    }

    /// Number of sign changes in the chain evaluated at x, zeros skipped.
    fn sign_changes_at(&self, x: &T) -> usize {
        let mut changes = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = sign(&p.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }
}

/// Midpoint of two scalars.
fn midpoint<T: ExactField>(a: &T, b: &T) -> T {
    (a.clone() + b.clone()) / int(2)
}

/// Divide out one linear factor `(z - r)`; `r` must be a root.
fn deflate<T: ExactField>(p: &Poly<T>, r: &T) -> Poly<T> {
    let linear = Poly::new(vec![-r.clone(), T::one()]);
    let (q, rem) = p.div_rem(&linear);
    debug_assert!(rem.is_zero(), "deflation point must be a root");
    q
}

/// Squarefree part with any root at `a` or `b` removed, ready for
/// open-interval queries.
fn interior_squarefree<T: ExactField>(p: &Poly<T>, a: &T, b: &T) -> Poly<T> {
    let mut sf = p.squarefree_part();
    if !sf.is_constant() && sf.eval(a).is_zero() {
        sf = deflate(&sf, a);
    }
    if !sf.is_constant() && sf.eval(b).is_zero() {
        sf = deflate(&sf, b);
    }
    sf
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
///
/// # Panics
///
/// Panics when `p` is the zero polynomial or `a >= b`.
pub fn count_roots_open<T: ExactField>(p: &Poly<T>, a: &T, b: &T) -> usize {
    assert!(!p.is_zero(), "root counting needs a nonzero polynomial");
    assert!(a < b, "interval must be non-empty");
    let sf = interior_squarefree(p, a, b);
    if sf.is_constant() {
        return 0;
    }
    let chain = SturmChain::new_squarefree(&sf);
    let va = chain.sign_changes_at(a);
    let vb = chain.sign_changes_at(b);
    debug_assert!(va >= vb, "sign-change counts must be monotone");
    va - vb
}

/// Isolate every distinct real root of `p` in the open interval `(a, b)`.
///
/// Returns locations sorted in increasing order.  Rational roots that a
/// bisection probe happens to hit exactly are reported as [`RootLoc::Exact`]
/// points; every other root gets a [`RootLoc::Bracket`] whose endpoints are
/// non-roots *of p itself*, strictly inside `(a, b)`, with exactly one root
/// between them — so callers may read true signs of `p` at the endpoints.
///
/// # Panics
///
/// Panics when `p` is the zero polynomial or `a >= b`.
pub fn isolate_roots_open<T: ExactField>(p: &Poly<T>, a: &T, b: &T) -> Vec<RootLoc<T>> {
    assert!(!p.is_zero(), "root isolation needs a nonzero polynomial");
    assert!(a < b, "interval must be non-empty");
    // `interior` keeps every interior root of p (deflation below removes
    // them from the working polynomial one by one); bracket endpoints are
    // validated against it, not just against the deflated remainder.
    let interior = interior_squarefree(p, a, b);
    let mut sf = interior.clone();
    let mut exact: Vec<T> = Vec::new();

    // Each pass either finishes, or discovers a rational root at a probe
    // point, divides it out, and starts over with the smaller polynomial.
    let brackets: Vec<(T, T)> = 'rebuild: loop {
        if sf.is_constant() {
            break Vec::new();
        }
        let chain = SturmChain::new_squarefree(&sf);
        let va = chain.sign_changes_at(a);
        let vb = chain.sign_changes_at(b);
        if va == vb {
            break Vec::new();
        }
        let mut found: Vec<(T, T)> = Vec::new();
        let mut work = vec![(a.clone(), va, b.clone(), vb)];
        while let Some((lo, vlo, hi, vhi)) = work.pop() {
            let count = vlo - vhi;
            if count == 0 {
                continue;
            }
            if count == 1 {
                // One root in (lo, hi).  Shrink until the bracket sits
                // strictly inside (a, b) and neither endpoint is a root of
                // the original polynomial (a previously deflated rational
                // root can reappear as a probe point).
                let (mut lo, mut vlo, mut hi) = (lo, vlo, hi);
                while &lo == a
                    || &hi == b
                    || interior.eval(&lo).is_zero()
                    || interior.eval(&hi).is_zero()
                {
                    let mid = midpoint(&lo, &hi);
                    if sf.eval(&mid).is_zero() {
                        exact.push(mid.clone());
                        sf = deflate(&sf, &mid);
                        continue 'rebuild;
                    }
                    let vmid = chain.sign_changes_at(&mid);
                    if vlo - vmid == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                        vlo = vmid;
                    }
                }
                found.push((lo, hi));
            } else {
                let mid = midpoint(&lo, &hi);
                if sf.eval(&mid).is_zero() {
                    exact.push(mid.clone());
                    sf = deflate(&sf, &mid);
                    continue 'rebuild;
                }
                let vmid = chain.sign_changes_at(&mid);
                work.push((lo, vlo, mid.clone(), vmid));
                work.push((mid, vmid, hi, vhi));
            }
        }
        break found;
    };

    let mut out: Vec<RootLoc<T>> = exact.into_iter().map(RootLoc::Exact).collect();
    out.extend(
        brackets
            .into_iter()
            .map(|(lo, hi)| RootLoc::Bracket(lo, hi)),
    );
    out.sort_by(|x, y| x.low().cmp(&y.low()));
    out
}
