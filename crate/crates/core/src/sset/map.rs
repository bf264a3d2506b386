use std::collections::HashMap;
use std::sync::Arc;

use super::object::{MapViolation, Materialized};
use super::set::{SimplicialSet, SsetError};
use super::simplex::{Simplex, SimplexId};

/// A simplicial map between canonical simplicial sets, stored as the image of
/// each nondegenerate source simplex.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    images: Vec<Simplex>,
}

impl SimplicialMap {
    /// Build from a table of images. Degrees are checked here; commutation with
    /// faces is checked by [`SimplicialMap::violations`].
    pub fn new(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        images: Vec<Simplex>,
    ) -> Result<Self, SsetError> {
        if images.len() != source.simplex_count() {
            return Err(SsetError::Invalid(format!(
                "map table has {} entries for {} simplices",
                images.len(),
                source.simplex_count()
            )));
        }
        for (k, img) in images.iter().enumerate() {
            let id = SimplexId(k as u32);
            if img.id.index() >= target.simplex_count() || target.degree(img) != source.dim(id) {
                return Err(SsetError::Invalid(format!(
                    "image of `{}` has the wrong degree",
                    source.name(id)
                )));
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            images,
        })
    }

    /// Build and reject tables that do not commute with faces.
    pub fn checked(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        images: Vec<Simplex>,
    ) -> Result<Self, SsetError> {
        let m = Self::new(source, target, images)?;
        if let Some(v) = m.violations().into_iter().next() {
            return Err(SsetError::Invalid(v.to_string()));
        }
        Ok(m)
    }

    pub fn identity(x: Arc<SimplicialSet>) -> Self {
        let images = (0..x.simplex_count())
            .map(|k| Simplex::nondegenerate(SimplexId(k as u32)))
            .collect();
        SimplicialMap {
            source: x.clone(),
            target: x,
            images,
        }
    }

    /// The map to the point (`target` must have a single vertex).
    pub fn to_point(x: Arc<SimplicialSet>, point: Arc<SimplicialSet>) -> Result<Self, SsetError> {
        let v = *point
            .roster(0)
            .first()
            .ok_or_else(|| SsetError::Invalid("target has no vertex".into()))?;
        let images = (0..x.simplex_count())
            .map(|k| {
                let d = x.dim(SimplexId(k as u32));
                Simplex::nondegenerate(v).with_outer(
                    &super::simplex::DegeneracyWord::from_index_set((0..d).collect()),
                )
            })
            .collect();
        Self::new(x, point, images)
    }

    /// Build from an element function between explicit objects that have been
    /// materialized.
    pub fn from_materialized<E, F, G>(
        source: &Materialized<E>,
        target: &Materialized<F>,
        f: G,
    ) -> Result<Self, SsetError>
    where
        E: Clone + Eq + std::hash::Hash,
        F: Clone + Eq + std::hash::Hash,
        G: Fn(&E) -> F,
    {
        let mut images = Vec::with_capacity(source.elements.len());
        for e in &source.elements {
            let img = f(e);
            match target.index.get(&img) {
                Some(s) => images.push(s.clone()),
                None => {
                    return Err(SsetError::Invalid(
                        "image lies outside the target's enumerated elements".into(),
                    ))
                }
            }
        }
        Self::new(
            Arc::new(source.set.clone()),
            Arc::new(target.set.clone()),
            images,
        )
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.target
    }

    pub fn image_of(&self, id: SimplexId) -> &Simplex {
        &self.images[id.index()]
    }

    pub fn apply(&self, s: &Simplex) -> Simplex {
        self.images[s.id.index()].with_outer(&s.word)
    }

    pub fn compose(&self, after: &SimplicialMap) -> Result<SimplicialMap, SsetError> {
        if !Arc::ptr_eq(&self.target, &after.source) && *self.target != *after.source {
            return Err(SsetError::Invalid("maps are not composable".into()));
        }
        let images = self.images.iter().map(|s| after.apply(s)).collect();
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: after.target.clone(),
            images,
        })
    }

    /// Faces that fail to commute, checked on nondegenerate source simplices.
    pub fn violations(&self) -> Vec<MapViolation> {
        let top = self.source.truncation().min(self.target.truncation());
        let mut out = Vec::new();
        for n in 1..=top {
            for &id in self.source.roster(n) {
                let x = Simplex::nondegenerate(id);
                let fx = self.apply(&x);
                for i in 0..=n {
                    let lhs = self.apply(&self.source.face(i, &x));
                    let rhs = self.target.face(i, &fx);
                    if lhs != rhs {
                        out.push(MapViolation {
                            operator: format!("d{i}"),
                            degree: n,
                            simplex: self.source.name(id).to_string(),
                            detail: format!(
                                "{} != {}",
                                self.target.label(&lhs),
                                self.target.label(&rhs)
                            ),
                        });
                    }
                }
            }
        }
        out
    }

    /// Degreewise injectivity on all simplices up to `up_to`; returns the first clash.
    pub fn injectivity_witness(&self, up_to: usize) -> Option<(usize, Simplex, Simplex)> {
        let top = up_to.min(self.source.truncation());
        for n in 0..=top {
            let mut seen: HashMap<Simplex, Simplex> = HashMap::new();
            for s in self.source.simplices(n) {
                let img = self.apply(&s);
                if let Some(prev) = seen.insert(img, s.clone()) {
                    return Some((n, prev, s));
                }
            }
        }
        None
    }

    /// Degreewise surjectivity failure up to `up_to`, if any.
    pub fn surjectivity_witness(&self, up_to: usize) -> Option<(usize, Simplex)> {
        let top = up_to.min(self.source.truncation()).min(self.target.truncation());
        for n in 0..=top {
            let hit: std::collections::HashSet<Simplex> =
                self.source.simplices(n).iter().map(|s| self.apply(s)).collect();
            if let Some(miss) = self.target.simplices(n).into_iter().find(|t| !hit.contains(t)) {
                return Some((n, miss));
            }
        }
        None
    }
}

/// Check a [`SimplicialMap`] against the generic explicit-level checker too.
pub fn check_simplicial_map(f: &SimplicialMap, up_to: usize) -> Vec<MapViolation> {
    super::object::check_map(&*f.source, &*f.target, |s| f.apply(s), up_to)
}
