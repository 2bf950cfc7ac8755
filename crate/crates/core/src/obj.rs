//! Hash-consed object terms.
//!
//! Every object of every model is a term over named generators. Terms are
//! interned process-wide, so structurally equal terms share one `ObjRef` and
//! equality is a single integer comparison. A term means nothing by itself;
//! a model gives it meaning by evaluating it.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Gen(String),
    E,
    D,
    Tensor(ObjRef, ObjRef),
    Par(ObjRef, ObjRef),
    /// Left dual `⊥p`, printed prefix.
    LDual(ObjRef),
    /// Right dual `ᵖp`, printed postfix as `p⊥`.
    RDual(ObjRef),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjRef(u32);

#[derive(Default)]
struct Interner {
    terms: Vec<Term>,
    index: HashMap<Term, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static CELL: OnceLock<RwLock<Interner>> = OnceLock::new();
    CELL.get_or_init(|| RwLock::new(Interner::default()))
}

fn intern(t: Term) -> ObjRef {
    if let Some(&id) = interner().read().expect("interner poisoned").index.get(&t) {
        return ObjRef(id);
    }
    let mut w = interner().write().expect("interner poisoned");
    if let Some(&id) = w.index.get(&t) {
        return ObjRef(id);
    }
    let id = u32::try_from(w.terms.len()).expect("object interner exhausted");
    w.terms.push(t.clone());
    w.index.insert(t, id);
    ObjRef(id)
}

impl ObjRef {
    pub fn gen(name: &str) -> ObjRef {
        intern(Term::Gen(name.to_string()))
    }

    pub fn e() -> ObjRef {
        intern(Term::E)
    }

    pub fn d() -> ObjRef {
        intern(Term::D)
    }

    pub fn tensor(self, o: ObjRef) -> ObjRef {
        intern(Term::Tensor(self, o))
    }

    pub fn par(self, o: ObjRef) -> ObjRef {
        intern(Term::Par(self, o))
    }

    /// `⊥self`
    pub fn ldual(self) -> ObjRef {
        intern(Term::LDual(self))
    }

    /// `ᵖself`
    pub fn rdual(self) -> ObjRef {
        intern(Term::RDual(self))
    }

    pub fn term(self) -> Term {
        interner().read().expect("interner poisoned").terms[self.0 as usize].clone()
    }

    pub fn id(self) -> u32 {
        self.0
    }

    /// Height of the term tree; generators and units have height 0.
    pub fn height(self) -> usize {
        match self.term() {
            Term::Gen(_) | Term::E | Term::D => 0,
            Term::Tensor(a, b) | Term::Par(a, b) => 1 + a.height().max(b.height()),
            Term::LDual(a) | Term::RDual(a) => 1 + a.height(),
        }
    }

    /// Largest number of nested dual constructors.
    pub fn dual_depth(self) -> usize {
        match self.term() {
            Term::Gen(_) | Term::E | Term::D => 0,
            Term::Tensor(a, b) | Term::Par(a, b) => a.dual_depth().max(b.dual_depth()),
            Term::LDual(a) | Term::RDual(a) => 1 + a.dual_depth(),
        }
    }

    /// Iterated left dual (`k > 0`) or right dual (`k < 0`).
    pub fn dual_iter(self, k: i64) -> ObjRef {
        let mut p = self;
        for _ in 0..k.unsigned_abs() {
            p = if k > 0 { p.ldual() } else { p.rdual() };
        }
        p
    }
}

impl fmt::Display for ObjRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.term() {
            Term::Gen(n) => write!(f, "{n}"),
            Term::E => write!(f, "e"),
            Term::D => write!(f, "d"),
            Term::Tensor(a, b) => write!(f, "({a} ⊗ {b})"),
            Term::Par(a, b) => write!(f, "({a} ⅋ {b})"),
            Term::LDual(a) => write!(f, "⊥{a}"),
            Term::RDual(a) => write!(f, "{a}⊥"),
        }
    }
}

impl fmt::Debug for ObjRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structurally_equal_terms_share_a_handle() {
        let a = ObjRef::gen("a");
        let b = ObjRef::gen("b");
        assert_eq!(a.tensor(b).ldual(), ObjRef::gen("a").tensor(ObjRef::gen("b")).ldual());
        assert_ne!(a.tensor(b), b.tensor(a));
        assert_ne!(a.ldual(), a.rdual());
    }

    #[test]
    fn depth_bookkeeping() {
        let a = ObjRef::gen("a");
        let t = a.ldual().ldual().tensor(ObjRef::e());
        assert_eq!(t.dual_depth(), 2);
        assert_eq!(t.height(), 3);
        assert_eq!(a.dual_iter(-2), a.rdual().rdual());
        assert_eq!(t.to_string(), "(⊥⊥a ⊗ e)");
    }

    #[test]
    fn concurrent_interning_agrees() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| ObjRef::gen("conc").par(ObjRef::d()).rdual()))
            .collect();
        let ids: Vec<ObjRef> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(ids.windows(2).all(|w| w[0] == w[1]));
    }
}
