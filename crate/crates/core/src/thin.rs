//! Thin (posetal) star-autonomous categories: a morphism `p → q` exists iff
//! the value of `p` is below the value of `q`, and parallel morphisms are equal.

use crate::error::{Result, StautError};
use crate::obj::{ObjRef, Term};
use crate::quantale::Quantale;
use crate::staut::{compose_error, Mor, Payload, Probe, StautModel};
use std::fmt::Debug;
use std::hash::Hash;

/// Order-theoretic data a thin model is evaluated in.
pub trait ThinAlgebra: Send + Sync {
    type El: Clone + Eq + Hash + Debug + Send + Sync;
    fn leq(&self, a: &Self::El, b: &Self::El) -> bool;
    fn tensor(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn par(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn unit(&self) -> Self::El;
    fn dualizer(&self) -> Self::El;
    fn ldual(&self, a: &Self::El) -> Self::El;
    fn rdual(&self, a: &Self::El) -> Self::El;
    fn show(&self, a: &Self::El) -> String;
}

impl ThinAlgebra for Quantale {
    type El = u32;
    fn leq(&self, a: &u32, b: &u32) -> bool {
        Quantale::leq(self, *a, *b)
    }
    fn tensor(&self, a: &u32, b: &u32) -> u32 {
        Quantale::tensor(self, *a, *b)
    }
    fn par(&self, a: &u32, b: &u32) -> u32 {
        Quantale::par(self, *a, *b)
    }
    fn unit(&self) -> u32 {
        Quantale::unit(self)
    }
    fn dualizer(&self) -> u32 {
        Quantale::dualizer(self)
    }
    fn ldual(&self, a: &u32) -> u32 {
        Quantale::ldual(self, *a)
    }
    fn rdual(&self, a: &u32) -> u32 {
        Quantale::rdual(self, *a)
    }
    fn show(&self, a: &u32) -> String {
        self.label(*a).to_string()
    }
}

pub struct ThinModel<A: ThinAlgebra> {
    name: String,
    alg: A,
    gens: Vec<(ObjRef, A::El)>,
    depth: usize,
}

impl<A: ThinAlgebra> ThinModel<A> {
    /// Generators are named `g0, g1, ..` after the given elements.
    pub fn new(name: &str, alg: A, gens: Vec<A::El>, depth: usize) -> ThinModel<A> {
        let gens = gens
            .into_iter()
            .enumerate()
            .map(|(i, el)| (ObjRef::gen(&format!("{name}.g{i}")), el))
            .collect();
        ThinModel { name: name.to_string(), alg, gens, depth }
    }

    pub fn alg(&self) -> &A {
        &self.alg
    }

    pub fn eval(&self, p: ObjRef) -> A::El {
        match p.term() {
            Term::Gen(_) => self
                .gens
                .iter()
                .find(|(g, _)| *g == p)
                .map(|(_, el)| el.clone())
                .unwrap_or_else(|| panic!("object {p} is not generated in model {}", self.name)),
            Term::E => self.alg.unit(),
            Term::D => self.alg.dualizer(),
            Term::Tensor(a, b) => self.alg.tensor(&self.eval(a), &self.eval(b)),
            Term::Par(a, b) => self.alg.par(&self.eval(a), &self.eval(b)),
            Term::LDual(a) => self.alg.ldual(&self.eval(a)),
            Term::RDual(a) => self.alg.rdual(&self.eval(a)),
        }
    }

    pub fn holds(&self, p: ObjRef, q: ObjRef) -> bool {
        self.alg.leq(&self.eval(p), &self.eval(q))
    }

    fn w(&self, dom: ObjRef, cod: ObjRef) -> Mor {
        Mor::new(dom, cod, Payload::Thin)
    }
}

impl<A: ThinAlgebra> StautModel for ThinModel<A> {
    fn label(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|(g, el)| format!("{g}={}", self.alg.show(el))).collect();
        format!("thin {} [{}]", self.name, gens.join(", "))
    }

    fn generators(&self) -> Vec<ObjRef> {
        self.gens.iter().map(|(g, _)| *g).collect()
    }

    fn probe(&self) -> Probe {
        Probe::standard(&self.generators(), self.depth)
    }

    fn is_thin(&self) -> bool {
        true
    }

    fn hom_span(&self, p: ObjRef, q: ObjRef) -> Vec<Mor> {
        if self.holds(p, q) {
            vec![self.w(p, q)]
        } else {
            Vec::new()
        }
    }

    fn id(&self, p: ObjRef) -> Mor {
        self.w(p, p)
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Result<Mor> {
        if f.cod != g.dom {
            return Err(compose_error(f, g));
        }
        Ok(self.w(f.dom, g.cod))
    }

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Mor {
        self.w(f.dom.tensor(g.dom), f.cod.tensor(g.cod))
    }

    fn par_mor(&self, f: &Mor, g: &Mor) -> Mor {
        self.w(f.dom.par(g.dom), f.cod.par(g.cod))
    }

    fn inverse(&self, f: &Mor) -> Result<Mor> {
        if self.holds(f.cod, f.dom) {
            Ok(self.w(f.cod, f.dom))
        } else {
            Err(StautError::NotInvertible(format!("{} ≰ {}", f.cod, f.dom)))
        }
    }

    fn validate(&self, f: &Mor) -> Result<()> {
        if f.payload != Payload::Thin {
            return Err(StautError::Validation("thin model given a non-thin payload".into()));
        }
        if self.holds(f.dom, f.cod) {
            Ok(())
        } else {
            Err(StautError::Validation(format!(
                "no witness: {} = {} is not below {} = {}",
                f.dom,
                self.alg.show(&self.eval(f.dom)),
                f.cod,
                self.alg.show(&self.eval(f.cod))
            )))
        }
    }

    fn dual_identity(&self, p: ObjRef) -> Option<Mor> {
        self.holds(p.ldual(), p.rdual()).then(|| self.w(p.ldual(), p.rdual()))
    }

    fn assoc_t(&self, p: ObjRef, q: ObjRef, r: ObjRef) -> Mor {
        self.w(p.tensor(q).tensor(r), p.tensor(q.tensor(r)))
    }
    fn assoc_p(&self, p: ObjRef, q: ObjRef, r: ObjRef) -> Mor {
        self.w(p.par(q).par(r), p.par(q.par(r)))
    }
    fn lunit_t(&self, p: ObjRef) -> Mor {
        self.w(ObjRef::e().tensor(p), p)
    }
    fn runit_t(&self, p: ObjRef) -> Mor {
        self.w(p.tensor(ObjRef::e()), p)
    }
    fn lunit_p(&self, p: ObjRef) -> Mor {
        self.w(ObjRef::d().par(p), p)
    }
    fn runit_p(&self, p: ObjRef) -> Mor {
        self.w(p.par(ObjRef::d()), p)
    }
    fn dist_l(&self, q: ObjRef, s: ObjRef, t: ObjRef) -> Mor {
        self.w(q.tensor(s.par(t)), q.tensor(s).par(t))
    }
    fn dist_r(&self, p: ObjRef, q: ObjRef, s: ObjRef) -> Mor {
        self.w(p.par(q).tensor(s), p.par(q.tensor(s)))
    }
    fn tau(&self, p: ObjRef) -> Mor {
        self.w(ObjRef::e(), p.ldual().par(p))
    }
    fn tau_r(&self, p: ObjRef) -> Mor {
        self.w(ObjRef::e(), p.par(p.rdual()))
    }
    fn gamma(&self, p: ObjRef) -> Mor {
        self.w(p.tensor(p.ldual()), ObjRef::d())
    }
    fn gamma_r(&self, p: ObjRef) -> Mor {
        self.w(p.rdual().tensor(p), ObjRef::d())
    }
}

/// A thin model over a quantale with up to `k` generators picked as the
/// first non-unit, non-dualizer elements in element order.
pub fn quantale_model(q: Quantale, k: usize, depth: usize) -> ThinModel<Quantale> {
    let gens: Vec<u32> = q.elements().filter(|&a| a != q.unit() && a != q.dualizer()).take(k).collect();
    let name = q.name().to_string();
    ThinModel::new(&name, q, gens, depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{build_rel_quantale, build_s3};
    use crate::staut::*;

    #[test]
    fn rel2_passes_core_invariants() {
        let m = quantale_model(build_rel_quantale(2).unwrap(), 2, 2);
        assert!(check_structure_maps(&m).pass);
        assert!(check_triangles(&m).pass);
        assert!(check_curry_bijection(&m).pass);
        assert!(check_monoidal_coherence(&m).pass);
        assert!(check_distribution_coherence(&m).pass);
        assert!(check_canonical_maps(&m).pass);
    }

    #[test]
    fn noncyclic_group_still_staut() {
        let m = quantale_model(build_s3("t01").unwrap(), 2, 2);
        assert!(check_structure_maps(&m).pass);
        assert!(check_canonical_maps(&m).pass);
    }

    #[test]
    fn lcurry_transports_witness() {
        let m = quantale_model(build_rel_quantale(2).unwrap(), 1, 1);
        let p = m.generators()[0];
        let g = m.gamma(p);
        let c = lcurry(&m, &g).unwrap();
        assert_eq!(c, m.id(p.ldual()));
    }

    #[test]
    fn composition_mismatch_names_objects() {
        let m = quantale_model(build_rel_quantale(2).unwrap(), 1, 1);
        let p = m.generators()[0];
        let err = m.compose(&m.id(p), &m.id(p.ldual())).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains(&p.to_string()) && msg.contains(&p.ldual().to_string()), "{msg}");
    }
}
