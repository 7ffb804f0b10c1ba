//! Strict partial orders and linear orders.
//!
//! Orders are stored strictly (no reflexive pairs) and transitively closed at
//! construction, so extension tests, restriction and minimal-element queries
//! are plain set lookups. The element type is generic: vertex orders use
//! `String`, unit orders in the solver use `usize`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// An irreflexive, antisymmetric, transitively closed relation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrictPartialOrder<T: Ord> {
    elements: BTreeSet<T>,
    pairs: BTreeSet<(T, T)>,
}

/// Drops reflexive pairs, closes transitively, and validates antisymmetry.
///
/// Fails with [`Error::OrderCycle`] naming one offending pair if the closure
/// would require both (x, y) and (y, x).
pub fn order_from_pairs<T, I>(pairs: I) -> Result<StrictPartialOrder<T>>
where
    T: Ord + Clone + fmt::Display,
    I: IntoIterator<Item = (T, T)>,
{
    let mut elements: BTreeSet<T> = BTreeSet::new();
    let mut succ: BTreeMap<T, BTreeSet<T>> = BTreeMap::new();
    for (a, b) in pairs {
        elements.insert(a.clone());
        elements.insert(b.clone());
        if a == b {
            continue;
        }
        succ.entry(a).or_default().insert(b);
    }
    // Reachability from every source; the element sets are small enough that
    // a per-source sweep is fine.
    let mut closed: BTreeSet<(T, T)> = BTreeSet::new();
    for start in succ.keys().cloned().collect::<Vec<_>>() {
        let mut seen: BTreeSet<T> = BTreeSet::new();
        let mut stack: Vec<T> = vec![start.clone()];
        while let Some(x) = stack.pop() {
            if let Some(nexts) = succ.get(&x) {
                for y in nexts {
                    if seen.insert(y.clone()) {
                        stack.push(y.clone());
                    }
                }
            }
        }
        for y in seen {
            if y == start {
                continue;
            }
            closed.insert((start.clone(), y));
        }
    }
    for (a, b) in &closed {
        if a < b && closed.contains(&(b.clone(), a.clone())) {
            return Err(Error::OrderCycle(a.to_string(), b.to_string()));
        }
    }
    // A source that only reaches itself sits on a cycle through itself via
    // others; the symmetric pair above already catches every such case.
    Ok(StrictPartialOrder {
        elements,
        pairs: closed,
    })
}

impl<T: Ord + Clone> StrictPartialOrder<T> {
    pub fn empty() -> Self {
        StrictPartialOrder {
            elements: BTreeSet::new(),
            pairs: BTreeSet::new(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = &T> {
        self.elements.iter()
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(T, T)> {
        self.pairs.iter()
    }

    pub fn contains(&self, a: &T, b: &T) -> bool {
        self.pairs.contains(&(a.clone(), b.clone()))
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs with both endpoints in `keep`; the restriction of a closed order
    /// is itself closed.
    pub fn restrict(&self, keep: &BTreeSet<T>) -> Self {
        StrictPartialOrder {
            elements: self.elements.intersection(keep).cloned().collect(),
            pairs: self
                .pairs
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .cloned()
                .collect(),
        }
    }

    /// Members of `x` with no predecessor inside `x`.
    pub fn minimal_elements(&self, x: &BTreeSet<T>) -> BTreeSet<T> {
        let mut out = x.clone();
        for (a, b) in &self.pairs {
            if x.contains(a) {
                out.remove(b);
            }
        }
        out
    }

    /// Checks the three structural invariants; used by tests and debug paths.
    pub fn check_invariants(&self) -> Result<()> {
        for (a, b) in &self.pairs {
            if a == b {
                return Err(Error::Internal("reflexive pair stored".into()));
            }
            if self.pairs.contains(&(b.clone(), a.clone())) {
                return Err(Error::Internal("antisymmetry violated".into()));
            }
        }
        let mut succ: BTreeMap<&T, Vec<&T>> = BTreeMap::new();
        for (a, b) in &self.pairs {
            succ.entry(a).or_default().push(b);
        }
        for (a, b) in &self.pairs {
            for &c in succ.get(b).into_iter().flatten() {
                if c != a && !self.pairs.contains(&(a.clone(), c.clone())) {
                    return Err(Error::Internal("not transitively closed".into()));
                }
            }
        }
        Ok(())
    }
}

/// A duplicate-free sequence; the complete order over its ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder<T: Ord> {
    seq: Vec<T>,
}

impl<T: Ord + Clone> LinearOrder<T> {
    pub fn new(seq: Vec<T>) -> Result<Self> {
        let mut sorted = seq.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("linear order contains a duplicate"));
        }
        Ok(LinearOrder { seq })
    }

    pub fn as_slice(&self) -> &[T] {
        &self.seq
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.seq.iter()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn position(&self, t: &T) -> Option<usize> {
        self.seq.iter().position(|x| x == t)
    }

    pub fn first(&self) -> Option<&T> {
        self.seq.first()
    }

    pub fn last(&self) -> Option<&T> {
        self.seq.last()
    }

    /// True iff every pair of `r` appears in this order's direction.
    ///
    /// Elements of `r` missing from the sequence are an error.
    pub fn extends(&self, r: &StrictPartialOrder<T>) -> Result<bool> {
        let pos: BTreeMap<&T, usize> = self.seq.iter().enumerate().map(|(i, t)| (t, i)).collect();
        for (a, b) in r.pairs() {
            let (pa, pb) = match (pos.get(a), pos.get(b)) {
                (Some(&pa), Some(&pb)) => (pa, pb),
                _ => {
                    return Err(Error::invalid(
                        "order mentions an element missing from the sequence",
                    ))
                }
            };
            if pa > pb {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<T: Ord + Clone> From<LinearOrder<T>> for Vec<T> {
    fn from(lin: LinearOrder<T>) -> Vec<T> {
        lin.seq
    }
}

/// Lexicographically smallest linear extension of `r` over `ground`.
///
/// Pairs of `r` outside `ground` are ignored. Kahn's scheme, always popping
/// the smallest available element.
pub fn lex_linear_extension<T: Ord + Clone>(
    ground: &BTreeSet<T>,
    r: &StrictPartialOrder<T>,
) -> LinearOrder<T> {
    let mut indegree: BTreeMap<&T, usize> = ground.iter().map(|t| (t, 0)).collect();
    let mut succs: BTreeMap<&T, Vec<&T>> = BTreeMap::new();
    for (a, b) in r.pairs() {
        if ground.contains(a) && ground.contains(b) {
            *indegree.get_mut(b).unwrap() += 1;
            succs.entry(a).or_default().push(b);
        }
    }
    let mut ready: BTreeSet<&T> = indegree
        .iter()
        .filter(|(_, &d)| d == 0)
        .map(|(&t, _)| t)
        .collect();
    let mut out = Vec::with_capacity(ground.len());
    while let Some(&t) = ready.iter().next() {
        ready.remove(t);
        out.push(t.clone());
        for &s in succs.get(t).into_iter().flatten() {
            let d = indegree.get_mut(s).unwrap();
            *d -= 1;
            if *d == 0 {
                ready.insert(s);
            }
        }
    }
    debug_assert_eq!(out.len(), ground.len(), "valid orders are acyclic");
    LinearOrder { seq: out }
}

/// Convenience constructor for vertex orders from &str pairs.
pub fn vertex_order(pairs: &[(&str, &str)]) -> Result<StrictPartialOrder<String>> {
    order_from_pairs(pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())))
}

/// Convenience constructor for vertex linear orders from &str slices.
pub fn vertex_sequence(seq: &[&str]) -> Result<LinearOrder<String>> {
    LinearOrder::new(seq.iter().map(|s| s.to_string()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn closure_adds_transitive_pair() {
        let r = vertex_order(&[("a", "b"), ("b", "c")]).unwrap();
        assert!(r.contains(&"a".into(), &"b".into()));
        assert!(r.contains(&"b".into(), &"c".into()));
        assert!(r.contains(&"a".into(), &"c".into()));
        assert_eq!(r.pair_count(), 3);
    }

    #[test]
    fn reflexive_pairs_are_dropped() {
        let r = vertex_order(&[("a", "a")]).unwrap();
        assert!(r.is_empty());
        assert_eq!(r.elements().count(), 1);
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = vertex_order(&[("a", "b"), ("b", "a")]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains('a') && msg.contains('b'), "names the pair: {msg}");
    }

    #[test]
    fn longer_cycle_is_rejected() {
        assert!(vertex_order(&[("a", "b"), ("b", "c"), ("c", "a")]).is_err());
    }

    #[test]
    fn restrict_examples() {
        let r = vertex_order(&[("a", "b"), ("b", "c")]).unwrap();
        let keep: BTreeSet<String> = ["a".to_string(), "c".to_string()].into();
        let s = r.restrict(&keep);
        assert_eq!(s.pairs().cloned().collect::<Vec<_>>(), vec![("a".to_string(), "c".to_string())]);
        assert!(r.restrict(&BTreeSet::new()).is_empty());
        let only_b: BTreeSet<String> = ["b".to_string()].into();
        assert!(vertex_order(&[("a", "b")]).unwrap().restrict(&only_b).is_empty());
    }

    #[test]
    fn extends_examples() {
        let lin = vertex_sequence(&["a", "b", "c"]).unwrap();
        let r = vertex_order(&[("a", "c")]).unwrap();
        assert!(lin.extends(&r).unwrap());
        let lin2 = vertex_sequence(&["c", "a", "b"]).unwrap();
        assert!(!lin2.extends(&r).unwrap());
        assert!(lin.extends(&StrictPartialOrder::empty()).unwrap());
        let missing = vertex_order(&[("a", "z")]).unwrap();
        assert!(lin.extends(&missing).is_err());
    }

    #[test]
    fn minimal_elements_examples() {
        let r = vertex_order(&[("a", "b")]).unwrap();
        let ab: BTreeSet<String> = ["a".to_string(), "b".to_string()].into();
        let only_b: BTreeSet<String> = ["b".to_string()].into();
        assert_eq!(r.minimal_elements(&ab), ["a".to_string()].into());
        assert_eq!(r.minimal_elements(&only_b), only_b);
        let empty = StrictPartialOrder::<String>::empty();
        assert_eq!(empty.minimal_elements(&ab), ab);
    }

    #[test]
    fn lex_extension_is_deterministic() {
        let r = vertex_order(&[("b", "a")]).unwrap();
        let ground: BTreeSet<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let lin = lex_linear_extension(&ground, &r);
        assert_eq!(lin.as_slice(), ["b".to_string(), "a".into(), "c".into()]);
    }

    fn arb_pairs() -> impl Strategy<Value = Vec<(String, String)>> {
        let elem = prop::sample::select(vec!["a", "b", "c", "d", "e"]);
        prop::collection::vec((elem.clone(), elem), 0..10).prop_map(|v| {
            v.into_iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn closure_is_idempotent(pairs in arb_pairs()) {
            if let Ok(r) = order_from_pairs(pairs) {
                let again = order_from_pairs(r.pairs().cloned()).unwrap();
                prop_assert_eq!(r.pairs().cloned().collect::<Vec<_>>(),
                                again.pairs().cloned().collect::<Vec<_>>());
                prop_assert!(r.check_invariants().is_ok());
            }
        }

        #[test]
        fn extension_survives_restriction(pairs in arb_pairs(), mask in prop::collection::vec(any::<bool>(), 5)) {
            if let Ok(r) = order_from_pairs(pairs) {
                let ground: BTreeSet<String> = ["a", "b", "c", "d", "e"].iter().map(|s| s.to_string()).collect();
                let lin = lex_linear_extension(&ground, &r);
                prop_assert!(lin.extends(&r).unwrap());
                let keep: BTreeSet<String> = ["a", "b", "c", "d", "e"].iter().zip(&mask)
                    .filter(|(_, &m)| m).map(|(s, _)| s.to_string()).collect();
                prop_assert!(lin.extends(&r.restrict(&keep)).unwrap());
            }
        }
    }
}
