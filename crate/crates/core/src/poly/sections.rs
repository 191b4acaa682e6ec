use std::collections::HashMap;

use super::monomial::Monomial;
use super::ring::{PolyRing, SparsePoly};
use super::PolyError;
use crate::arith::CoeffRing;

/// A rational map `P^n --> P^r` given by `r+1` homogeneous sections of a
/// common degree in the source ring `k[y_0..y_n]`. The target coordinates
/// `x_0..x_r` are only named here; polynomials in them live in
/// [`SectionMap::target_ring`].
#[derive(Clone, Debug)]
pub struct SectionMap<R: CoeffRing> {
    source: PolyRing<R>,
    target_names: Vec<String>,
    sections: Vec<SparsePoly<R::Elem>>,
    degree: u32,
}

impl<R: CoeffRing> SectionMap<R> {
    pub fn new(
        source: PolyRing<R>,
        target_names: Vec<String>,
        sections: Vec<SparsePoly<R::Elem>>,
    ) -> Result<Self, PolyError> {
        if target_names.len() != sections.len() {
            return Err(PolyError::RingMismatch(format!(
                "{} target names for {} sections",
                target_names.len(),
                sections.len()
            )));
        }
        let unit = vec![1; source.nvars()];
        let mut degree = None;
        for (i, s) in sections.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            if !s.is_homogeneous(&unit) {
                return Err(PolyError::NotHomogeneous(format!("section {i}")));
            }
            let d = s.total_degree().unwrap();
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(PolyError::NotHomogeneous(format!(
                        "section {i} has degree {d}, expected {e}"
                    )))
                }
                _ => {}
            }
        }
        let degree = degree.ok_or(PolyError::ZeroPolynomial)?;
        Ok(SectionMap {
            source,
            target_names,
            sections,
            degree,
        })
    }

    pub fn source(&self) -> &PolyRing<R> {
        &self.source
    }

    pub fn sections(&self) -> &[SparsePoly<R::Elem>] {
        &self.sections
    }

    pub fn target_names(&self) -> &[String] {
        &self.target_names
    }

    /// Number of target coordinates `r + 1`.
    pub fn target_count(&self) -> usize {
        self.sections.len()
    }

    /// Common degree `m` of the sections.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn target_ring(&self, order: super::MonomialOrder) -> PolyRing<R> {
        PolyRing::new(self.source.coeffs().clone(), self.target_names.clone(), order)
            .expect("target names validated at construction")
    }

    /// The same map over another coefficient domain.
    pub fn map_coeffs<S: CoeffRing>(&self, coeffs: S, map: impl Fn(&R::Elem) -> S::Elem) -> SectionMap<S> {
        let source = self.source.with_coeffs(coeffs);
        let sections = self
            .sections
            .iter()
            .map(|s| self.source.map_coeffs(s, &source, &map))
            .collect();
        SectionMap {
            source,
            target_names: self.target_names.clone(),
            sections,
            degree: self.degree,
        }
    }

    /// `F(s_0, .., s_r)`: the image of `f` under `x_i -> s_i`.
    pub fn substitute(&self, target: &PolyRing<R>, f: &SparsePoly<R::Elem>) -> Result<SparsePoly<R::Elem>, PolyError> {
        if target.nvars() != self.sections.len() {
            return Err(PolyError::RingMismatch(format!(
                "polynomial has {} variables, map has {} sections",
                target.nvars(),
                self.sections.len()
            )));
        }
        let ring = &self.source;
        let mut powers: HashMap<(usize, u32), SparsePoly<R::Elem>> = HashMap::new();
        let mut acc = Vec::new();
        for (m, c) in f.terms() {
            let mut img = ring.constant(c.clone());
            for i in 0..self.sections.len() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                let p = powers.entry((i, e)).or_insert_with(|| ring.pow(&self.sections[i], e));
                img = ring.mul(&img, p);
                if img.is_zero() {
                    break;
                }
            }
            acc.extend(img.into_terms());
        }
        Ok(ring.from_terms(acc))
    }

    /// The monomial `x^a` pushed through the map, without building `x^a`.
    pub fn image_of_monomial(&self, m: &Monomial) -> SparsePoly<R::Elem> {
        let ring = &self.source;
        let mut img = ring.one();
        for i in 0..self.sections.len() {
            let e = m.exp(i);
            if e > 0 {
                img = ring.mul(&img, &ring.pow(&self.sections[i], e));
            }
        }
        img
    }

    /// Text form accepted by [`super::parse_document`].
    pub fn to_text(&self) -> String {
        let mut s = format!("ring {};\nmap", self.source.names().join(" "));
        for (i, (name, sec)) in self.target_names.iter().zip(&self.sections).enumerate() {
            if i > 0 {
                s.push_str(";\n   ");
            }
            s.push_str(&format!(" {name} = {}", self.source.display(sec)));
        }
        s.push_str(";\n");
        s
    }

    /// All sections are single monomials.
    pub fn is_monomial(&self) -> bool {
        self.sections.iter().all(|s| s.len() == 1)
    }
}
