//! Laurent group-ring calculus over `Z[H^2(X)]`.
//!
//! Seiberg–Witten invariants of the closed manifolds built from the family
//! live in the group ring of second cohomology: a finitely supported integer
//! combination of exponent monomials over named free-abelian generators.
//! The two operations that matter are multiplication by `E + E^{-1}` (the
//! blow-up formula) and multiplication by an Alexander polynomial evaluated
//! at the square of a torus class (knot surgery). Everything is exact; terms
//! are kept in a lexicographically ordered map so serialization and
//! iteration are deterministic.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupRingError {
    #[error("elements live over different generator lists")]
    GeneratorMismatch,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("exponent vector has length {got}, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomial is not symmetric under t -> 1/t")]
    NotSymmetric,
    #[error("polynomial evaluates to {0} at t = 1, expected a unit")]
    NotUnit(BigInt),
}

/// An element of `Z[Z^k]` for named generators: a finitely supported map
/// from exponent vectors to nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    generators: Vec<String>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl GroupRingElement {
    pub fn zero(generators: Vec<String>) -> Self {
        GroupRingElement {
            generators,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(generators: Vec<String>) -> Self {
        let exp = vec![0; generators.len()];
        let mut terms = BTreeMap::new();
        terms.insert(exp, BigInt::one());
        GroupRingElement { generators, terms }
    }

    pub fn monomial(
        generators: Vec<String>,
        exponents: Vec<i64>,
        coefficient: BigInt,
    ) -> Result<Self, GroupRingError> {
        if exponents.len() != generators.len() {
            return Err(GroupRingError::ArityMismatch {
                expected: generators.len(),
                got: exponents.len(),
            });
        }
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponents, coefficient);
        }
        Ok(GroupRingElement { generators, terms })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[i64]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The support, i.e. the set of basic classes when the element is an SW
    /// invariant; lexicographically sorted.
    pub fn basic_classes(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    fn check_same(&self, other: &GroupRingElement) -> Result<(), GroupRingError> {
        if self.generators != other.generators {
            return Err(GroupRingError::GeneratorMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupRingElement) -> Result<GroupRingElement, GroupRingError> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (exp, coeff) in &other.terms {
            let entry = terms.entry(exp.clone()).or_insert_with(BigInt::zero);
            *entry += coeff;
            if entry.is_zero() {
                terms.remove(exp);
            }
        }
        Ok(GroupRingElement {
            generators: self.generators.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> GroupRingElement {
        GroupRingElement {
            generators: self.generators.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> GroupRingElement {
        if k.is_zero() {
            return GroupRingElement::zero(self.generators.clone());
        }
        GroupRingElement {
            generators: self.generators.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Convolution product, exact.
    pub fn multiply(&self, other: &GroupRingElement) -> Result<GroupRingElement, GroupRingError> {
        self.check_same(other)?;
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(exp.clone()).or_insert_with(BigInt::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&exp);
                }
            }
        }
        Ok(GroupRingElement {
            generators: self.generators.clone(),
            terms,
        })
    }

    /// The image under the inversion `g -> g^{-1}` of the group.
    pub fn bar(&self) -> GroupRingElement {
        GroupRingElement {
            generators: self.generators.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    fn generator_index(&self, name: &str) -> Result<usize, GroupRingError> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| GroupRingError::UnknownGenerator(name.to_string()))
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, coeff) in &self.terms {
            let mut mono = String::new();
            for (g, e) in self.generators.iter().zip(exp) {
                if *e == 1 {
                    mono.push_str(g);
                } else if *e != 0 {
                    mono.push_str(&format!("{g}^{e}"));
                }
            }
            if first {
                if mono.is_empty() {
                    write!(f, "{coeff}")?;
                } else if coeff.is_one() {
                    write!(f, "{mono}")?;
                } else if (-coeff).is_one() {
                    write!(f, "-{mono}")?;
                } else {
                    write!(f, "{coeff}{mono}")?;
                }
                first = false;
            } else {
                let sign = if coeff.is_negative() { "-" } else { "+" };
                let mag = coeff.abs();
                if mono.is_empty() {
                    write!(f, " {sign} {mag}")?;
                } else if mag.is_one() {
                    write!(f, " {sign} {mono}")?;
                } else {
                    write!(f, " {sign} {mag}{mono}")?;
                }
            }
        }
        Ok(())
    }
}

/// A symmetric Laurent polynomial in one variable `t` with `Δ(1) = ±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl AlexanderPolynomial {
    pub fn new(coeffs: BTreeMap<i64, BigInt>) -> Result<Self, GroupRingError> {
        let mut clean: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (k, c) in coeffs {
            if !c.is_zero() {
                clean.insert(k, c);
            }
        }
        for (k, c) in &clean {
            if clean.get(&-k) != Some(c) {
                return Err(GroupRingError::NotSymmetric);
            }
        }
        let at_one: BigInt = clean.values().sum();
        if !at_one.abs().is_one() {
            return Err(GroupRingError::NotUnit(at_one));
        }
        Ok(AlexanderPolynomial { coeffs: clean })
    }

    /// The unknot polynomial `Δ = 1`.
    pub fn unknot() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(0, BigInt::one());
        AlexanderPolynomial { coeffs }
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if first {
                if mono.is_empty() {
                    write!(f, "{c}")?;
                } else if c.is_one() {
                    write!(f, "{mono}")?;
                } else if (-c).is_one() {
                    write!(f, "-{mono}")?;
                } else {
                    write!(f, "{c}{mono}")?;
                }
                first = false;
            } else {
                let sign = if c.is_negative() { "-" } else { "+" };
                let mag = c.abs();
                if mono.is_empty() {
                    write!(f, " {sign} {mag}")?;
                } else if mag.is_one() {
                    write!(f, " {sign} {mono}")?;
                } else {
                    write!(f, " {sign} {mag}{mono}")?;
                }
            }
        }
        Ok(())
    }
}

/// Alexander polynomial of the `n`-th twist knot:
/// `Δ(t) = −(2n−1) + n(t + t^{−1})`.
pub fn alexander_twist(n: i64) -> AlexanderPolynomial {
    assert!(n >= 1, "twist family starts at n = 1");
    let mut coeffs = BTreeMap::new();
    coeffs.insert(0, BigInt::from(-(2 * n - 1)));
    coeffs.insert(1, BigInt::from(n));
    coeffs.insert(-1, BigInt::from(n));
    AlexanderPolynomial::new(coeffs).expect("twist polynomial is symmetric with unit value")
}

/// Blow-up formula: multiply the invariant by `E + E^{-1}` for the
/// exceptional class `e_class`.
pub fn blowup(
    sw: &GroupRingElement,
    e_class: &str,
) -> Result<GroupRingElement, GroupRingError> {
    let idx = sw.generator_index(e_class)?;
    let gens = sw.generators().to_vec();
    let mut plus = vec![0i64; gens.len()];
    plus[idx] = 1;
    let mut minus = vec![0i64; gens.len()];
    minus[idx] = -1;
    let factor = GroupRingElement::monomial(gens.clone(), plus, BigInt::one())?
        .add(&GroupRingElement::monomial(gens, minus, BigInt::one())?)?;
    sw.multiply(&factor)
}

/// Knot surgery along a square-zero torus with class `torus_class`:
/// multiply by the Alexander polynomial with `t` replaced by the square of
/// the torus class.
pub fn knot_surgery(
    sw: &GroupRingElement,
    delta: &AlexanderPolynomial,
    torus_class: &str,
) -> Result<GroupRingElement, GroupRingError> {
    let idx = sw.generator_index(torus_class)?;
    let gens = sw.generators().to_vec();
    let mut factor = GroupRingElement::zero(gens.clone());
    for (k, c) in delta.coefficients() {
        let mut exp = vec![0i64; gens.len()];
        exp[idx] = 2 * k;
        factor = factor.add(&GroupRingElement::monomial(gens.clone(), exp, c.clone())?)?;
    }
    sw.multiply(&factor)
}

/// The SW element of the `n`-th member of the knot-surgery family over the
/// generators `E1, E2, F`:
/// `(E1 + E1^{-1}) (E2 + E2^{-1}) (−(2n−1) + n(F^2 + F^{−2}))`.
pub fn sw_family(n: i64) -> GroupRingElement {
    let gens: Vec<String> = ["E1", "E2", "F"].iter().map(|s| s.to_string()).collect();
    let one = GroupRingElement::one(gens);
    let blown = blowup(&blowup(&one, "E1").unwrap(), "E2").unwrap();
    knot_surgery(&blown, &alexander_twist(n), "F").unwrap()
}

/// Result of a pairwise comparison of a family of invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctReport {
    /// Index pairs `(i, j)` with `i < j` whose elements are equal.
    pub equal_pairs: Vec<(usize, usize)>,
    pub all_distinct: bool,
}

pub fn pairwise_distinct(family: &[GroupRingElement]) -> Result<DistinctReport, GroupRingError> {
    for w in family.windows(2) {
        w[0].check_same(&w[1])?;
    }
    let mut equal_pairs = Vec::new();
    for i in 0..family.len() {
        for j in (i + 1)..family.len() {
            if family[i] == family[j] {
                equal_pairs.push((i, j));
            }
        }
    }
    let all_distinct = equal_pairs.is_empty();
    Ok(DistinctReport {
        equal_pairs,
        all_distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gens() -> Vec<String> {
        vec!["E1".into(), "E2".into(), "F".into()]
    }

    fn mono(exp: &[i64], c: i64) -> GroupRingElement {
        GroupRingElement::monomial(gens(), exp.to_vec(), BigInt::from(c)).unwrap()
    }

    #[test]
    fn one_is_identity() {
        let a = mono(&[1, -2, 3], 5).add(&mono(&[0, 0, 0], -7)).unwrap();
        let one = GroupRingElement::one(gens());
        assert_eq!(a.multiply(&one).unwrap(), a);
        assert_eq!(one.multiply(&a).unwrap(), a);
    }

    #[test]
    fn square_of_blowup_factor() {
        let gens1 = vec!["E".to_string()];
        let e = GroupRingElement::monomial(gens1.clone(), vec![1], BigInt::one()).unwrap();
        let ei = GroupRingElement::monomial(gens1.clone(), vec![-1], BigInt::one()).unwrap();
        let f = e.add(&ei).unwrap();
        let sq = f.multiply(&f).unwrap();
        assert_eq!(sq.coefficient(&[2]), BigInt::one());
        assert_eq!(sq.coefficient(&[0]), BigInt::from(2));
        assert_eq!(sq.coefficient(&[-2]), BigInt::one());
        assert_eq!(sq.term_count(), 3);
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = mono(&[1, 0, 0], 3);
        let b = mono(&[1, 0, 0], -3);
        assert!(a.add(&b).unwrap().is_zero());
        let x = mono(&[0, 0, 0], 1).add(&mono(&[1, 0, 0], 1)).unwrap();
        let y = mono(&[0, 0, 0], 1).add(&mono(&[1, 0, 0], -1)).unwrap();
        // (1 + E)(1 - E) = 1 - E^2
        let p = x.multiply(&y).unwrap();
        assert_eq!(p.coefficient(&[0, 0, 0]), BigInt::one());
        assert_eq!(p.coefficient(&[1, 0, 0]), BigInt::zero());
        assert_eq!(p.coefficient(&[2, 0, 0]), BigInt::from(-1));
        assert_eq!(p.term_count(), 2);
    }

    #[test]
    fn generator_mismatch_is_rejected() {
        let a = GroupRingElement::one(vec!["E".into()]);
        let b = GroupRingElement::one(vec!["F".into()]);
        assert_eq!(a.multiply(&b), Err(GroupRingError::GeneratorMismatch));
        assert_eq!(
            blowup(&a, "Q"),
            Err(GroupRingError::UnknownGenerator("Q".into()))
        );
    }

    #[test]
    fn twist_polynomials() {
        let d1 = alexander_twist(1);
        assert_eq!(d1.coefficient(0), BigInt::from(-1));
        assert_eq!(d1.coefficient(1), BigInt::one());
        assert_eq!(d1.coefficient(-1), BigInt::one());
        assert_eq!(d1.to_string(), "t^-1 - 1 + t");
        let d2 = alexander_twist(2);
        assert_eq!(d2.coefficient(0), BigInt::from(-3));
        assert_eq!(d2.coefficient(1), BigInt::from(2));
        for n in 1..=100 {
            assert_eq!(alexander_twist(n).evaluate_at_one(), BigInt::one());
        }
    }

    #[test]
    fn alexander_validation() {
        let mut bad = BTreeMap::new();
        bad.insert(1, BigInt::one());
        assert_eq!(
            AlexanderPolynomial::new(bad),
            Err(GroupRingError::NotSymmetric)
        );
        let mut zero_unit = BTreeMap::new();
        zero_unit.insert(1, BigInt::one());
        zero_unit.insert(-1, BigInt::one());
        assert_eq!(
            AlexanderPolynomial::new(zero_unit),
            Err(GroupRingError::NotUnit(BigInt::from(2)))
        );
        // Δ = -1 is a fine unit.
        let mut neg = BTreeMap::new();
        neg.insert(0, BigInt::from(-1));
        assert!(AlexanderPolynomial::new(neg).is_ok());
    }

    #[test]
    fn unknot_surgery_is_identity() {
        let sw = sw_family(4);
        let same = knot_surgery(&sw, &AlexanderPolynomial::unknot(), "F").unwrap();
        assert_eq!(same, sw);
    }

    #[test]
    fn surgery_factor_alone() {
        let one = GroupRingElement::one(gens());
        for n in 1..=5 {
            let s = knot_surgery(&one, &alexander_twist(n), "F").unwrap();
            assert_eq!(s.coefficient(&[0, 0, 0]), BigInt::from(-(2 * n - 1)));
            assert_eq!(s.coefficient(&[0, 0, 2]), BigInt::from(n));
            assert_eq!(s.coefficient(&[0, 0, -2]), BigInt::from(n));
            assert_eq!(s.term_count(), 3);
        }
    }

    #[test]
    fn double_blowup_of_one() {
        let one = GroupRingElement::one(gens());
        let b = blowup(&blowup(&one, "E1").unwrap(), "E2").unwrap();
        assert_eq!(b.term_count(), 4);
        for e1 in [-1i64, 1] {
            for e2 in [-1i64, 1] {
                assert_eq!(b.coefficient(&[e1, e2, 0]), BigInt::one());
            }
        }
        assert_eq!(b, b.bar(), "support symmetric under inversion");
    }

    #[test]
    fn family_element_has_twelve_classes() {
        for n in 1..=8 {
            let sw = sw_family(n);
            let classes = sw.basic_classes();
            assert_eq!(classes.len(), 12, "n = {n}");
            for class in &classes {
                assert!(class[0].abs() == 1 && class[1].abs() == 1);
                assert!([-2, 0, 2].contains(&class[2]));
            }
            assert_eq!(sw.coefficient(&[1, 1, 0]), BigInt::from(-(2 * n - 1)));
            assert_eq!(sw.coefficient(&[1, 1, 2]), BigInt::from(n));
            assert_eq!(sw, sw.bar(), "blowup/surgery factors are symmetric");
        }
    }

    #[test]
    fn family_pairwise_distinct() {
        let family: Vec<GroupRingElement> = (1..=20).map(sw_family).collect();
        let report = pairwise_distinct(&family).unwrap();
        assert!(report.all_distinct);
        assert!(report.equal_pairs.is_empty());
        // Duplicates are located precisely.
        let with_dup = vec![sw_family(1), sw_family(2), sw_family(1)];
        let report = pairwise_distinct(&with_dup).unwrap();
        assert!(!report.all_distinct);
        assert_eq!(report.equal_pairs, vec![(0, 2)]);
    }

    #[test]
    fn display_formatting() {
        let a = mono(&[0, 0, 0], -3)
            .add(&mono(&[0, 0, 2], 2))
            .unwrap()
            .add(&mono(&[0, 0, -2], 2))
            .unwrap();
        assert_eq!(a.to_string(), "2F^-2 - 3 + 2F^2");
        assert_eq!(GroupRingElement::zero(gens()).to_string(), "0");
        let e1e2 = mono(&[1, 1, 0], 1);
        assert_eq!(e1e2.to_string(), "E1E2");
    }

    fn arb_element() -> impl Strategy<Value = GroupRingElement> {
        proptest::collection::vec(
            (
                proptest::collection::vec(-3i64..=3, 2),
                -5i64..=5,
            ),
            0..6,
        )
        .prop_map(|terms| {
            let gens: Vec<String> = vec!["A".into(), "B".into()];
            let mut acc = GroupRingElement::zero(gens.clone());
            for (exp, c) in terms {
                acc = acc
                    .add(&GroupRingElement::monomial(gens.clone(), exp, BigInt::from(c)).unwrap())
                    .unwrap();
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn prop_ring_laws(a in arb_element(), b in arb_element(), c in arb_element()) {
            prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
            prop_assert_eq!(
                a.multiply(&b).unwrap().multiply(&c).unwrap(),
                a.multiply(&b.multiply(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.multiply(&b.add(&c).unwrap()).unwrap(),
                a.multiply(&b).unwrap().add(&a.multiply(&c).unwrap()).unwrap()
            );
            let one = GroupRingElement::one(a.generators().to_vec());
            prop_assert_eq!(a.multiply(&one).unwrap(), a.clone());
            prop_assert!(a.add(&a.neg()).unwrap().is_zero());
            prop_assert_eq!(a.bar().bar(), a);
        }
    }
}
