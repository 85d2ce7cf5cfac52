//! Generator-coefficient data: the finite family `{c'_k(beta),
//! c''_k(beta)}` expressing an element of the spanning module as a
//! combination of translated generators. Validity means every entry
//! lies in `pi^(-km) N_k(beta)`; it is enforced at construction and
//! after every group action.

use super::RepParams;
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::symlat::{Lattice, PolyVec};
use crate::wspace::{Value, WElem, WFunction, WGroup};
use num_rational::BigRational;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

/// One entry: `c1` rides the first generator family (the `chi1`
/// exponent), `c2` the second.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffPair {
    pub c1: PolyVec,
    pub c2: PolyVec,
}

impl CoeffPair {
    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorCoeffs {
    p: u64,
    n: u32,
    k0: i64,
    entries: BTreeMap<(i64, WElem), CoeffPair>,
}

impl GeneratorCoeffs {
    /// Validated construction: every coefficient must lie in
    /// `pi^(-km) N_k(beta)` for its slot.
    pub fn new(
        entries: BTreeMap<(i64, WElem), CoeffPair>,
        params: &RepParams,
    ) -> Result<GeneratorCoeffs> {
        let out = GeneratorCoeffs::new_unchecked(entries, params.field.p, params.weight.n);
        out.validate(params)?;
        Ok(out)
    }

    /// Construction without the lattice membership check; for probe
    /// vectors and fault-injection tests whose callers own the contract.
    pub fn new_unchecked(
        entries: BTreeMap<(i64, WElem), CoeffPair>,
        p: u64,
        n: u32,
    ) -> GeneratorCoeffs {
        let entries: BTreeMap<(i64, WElem), CoeffPair> =
            entries.into_iter().filter(|(_, pair)| !pair.is_zero()).collect();
        let k0 = entries.keys().map(|(k, _)| *k).min().unwrap_or(0);
        GeneratorCoeffs { p, n, k0, entries }
    }

    pub fn validate(&self, params: &RepParams) -> Result<()> {
        if self.p != params.field.p || self.n != params.weight.n {
            return Err(Error::RegimeMismatch(format!(
                "coefficients built for (p={}, n={}), parameters have (p={}, n={})",
                self.p, self.n, params.field.p, params.weight.n
            )));
        }
        let g = WGroup::new(self.p);
        for ((k, beta), pair) in &self.entries {
            let lat = Lattice::scaled(*k, *beta, params.weight, -k * params.weight.m);
            if !(lat.contains(&pair.c1, &g)? && lat.contains(&pair.c2, &g)?) {
                return Err(Error::InvalidCoeffs {
                    k: *k,
                    beta: format!("{}", g.representative(*beta)),
                });
            }
        }
        Ok(())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn weight_degree(&self) -> u32 {
        self.n
    }

    /// Minimal level present (0 for the empty family).
    pub fn k0(&self) -> i64 {
        self.k0
    }

    pub fn max_level(&self) -> i64 {
        self.entries.keys().map(|(k, _)| *k).max().unwrap_or(self.k0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &BTreeMap<(i64, WElem), CoeffPair> {
        &self.entries
    }

    pub fn get(&self, k: i64, beta: WElem) -> Option<&CoeffPair> {
        self.entries.get(&(k, beta))
    }

    /// The level-`k` slice of the first coefficient family.
    pub fn row_c1(&self, k: i64) -> WFunction<PolyVec> {
        WFunction::from_pairs(
            self.entries
                .range((k, WElem::min_key())..=(k, WElem::max_key()))
                .map(|((_, b), pair)| (*b, pair.c1.clone())),
        )
    }

    pub fn row_c2(&self, k: i64) -> WFunction<PolyVec> {
        WFunction::from_pairs(
            self.entries
                .range((k, WElem::min_key())..=(k, WElem::max_key()))
                .map(|((_, b), pair)| (*b, pair.c2.clone())),
        )
    }

    /// Scalar multiple of the whole family (validity regions are
    /// lattices, so nonnegative-valuation scalings preserve validity).
    pub fn scale(&self, s: &Scalar) -> GeneratorCoeffs {
        let entries = self
            .entries
            .iter()
            .map(|(k, pair)| (*k, CoeffPair { c1: pair.c1.scale(s), c2: pair.c2.scale(s) }))
            .collect();
        GeneratorCoeffs::new_unchecked(entries, self.p, self.n)
    }
}

impl Serialize for GeneratorCoeffs {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            k: i64,
            beta: String,
            c1: &'a PolyVec,
            c2: &'a PolyVec,
        }
        let g = WGroup::new(self.p);
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|((k, b), pair)| Entry {
                k: *k,
                beta: beta_string(&g, *b),
                c1: &pair.c1,
                c2: &pair.c2,
            })
            .collect();
        let mut st = s.serialize_struct("GeneratorCoeffs", 4)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k0", &self.k0)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

pub(crate) fn beta_string(g: &WGroup, b: WElem) -> String {
    let r = g.representative(b);
    if b.is_zero() {
        "0".to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_beta(g: &WGroup, s: &str) -> std::result::Result<WElem, String> {
    let r = crate::scalars::parse_ratio_str(s)?;
    let b = g.from_rational(&r);
    // Round-trip to reject non-canonical denominators.
    if g.representative(b) != normalize_fraction(&r) {
        return Err(format!("{s} is not a canonical class representative"));
    }
    Ok(b)
}

fn normalize_fraction(r: &BigRational) -> BigRational {
    r.clone()
}

impl<'de> Deserialize<'de> for GeneratorCoeffs {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<GeneratorCoeffs, D::Error> {
        #[derive(Deserialize)]
        struct EntryIn {
            k: i64,
            beta: String,
            c1: PolyVec,
            c2: PolyVec,
        }
        #[derive(Deserialize)]
        struct Repr {
            p: u64,
            n: u32,
            k0: i64,
            entries: Vec<EntryIn>,
        }
        let r = Repr::deserialize(d)?;
        let g = WGroup::new(r.p);
        let mut entries = BTreeMap::new();
        for e in r.entries {
            let beta = parse_beta(&g, &e.beta).map_err(D::Error::custom)?;
            if e.c1.degree_bound() != r.n || e.c2.degree_bound() != r.n {
                return Err(D::Error::custom(format!(
                    "coefficient vectors must have length n+1 = {}",
                    r.n + 1
                )));
            }
            if entries.insert((e.k, beta), CoeffPair { c1: e.c1, c2: e.c2 }).is_some() {
                return Err(D::Error::custom(format!("duplicate entry at (k={}, beta={})", e.k, e.beta)));
            }
        }
        let out = GeneratorCoeffs::new_unchecked(entries, r.p, r.n);
        if !out.is_empty() && out.k0() != r.k0 {
            return Err(D::Error::custom(format!(
                "recorded k0 = {} does not match minimal level {}",
                r.k0,
                out.k0()
            )));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kirillov::Regime;
    use crate::scalars::FieldParams;
    use crate::symlat::WeightParams;

    fn params_n1() -> RepParams {
        RepParams::unramified(
            FieldParams::new(5).unwrap(),
            WeightParams::new(0, 1),
            Scalar::one(),
            Scalar::from_ratio(1, 25),
        )
        .unwrap()
    }

    #[test]
    fn validity_is_enforced() {
        let params = params_n1();
        let g = WGroup::new(5);
        // u/5 is outside N_1(0) (basis {1/5, u}); placing it at (1, 0) fails.
        let mut entries = BTreeMap::new();
        entries.insert(
            (1i64, g.zero()),
            CoeffPair {
                c1: PolyVec::new(vec![Scalar::zero(), Scalar::from_ratio(1, 5)]),
                c2: PolyVec::zero(1),
            },
        );
        assert!(matches!(
            GeneratorCoeffs::new(entries.clone(), &params),
            Err(Error::InvalidCoeffs { k: 1, .. })
        ));
        // u itself is fine there.
        entries.insert(
            (1i64, g.zero()),
            CoeffPair { c1: PolyVec::monomial(1, 1), c2: PolyVec::zero(1) },
        );
        let c = GeneratorCoeffs::new(entries, &params).unwrap();
        assert_eq!(c.k0(), 1);
        assert_eq!(c.regime_sanity(), Regime::Unramified as u8 as i64 * 0 + 1);
    }

    #[test]
    fn serde_round_trip() {
        let params = params_n1();
        let g = WGroup::new(5);
        let mut entries = BTreeMap::new();
        entries.insert(
            (0i64, g.elem(2, 1)),
            CoeffPair {
                c1: PolyVec::new(vec![Scalar::from_int(3), Scalar::one()]),
                c2: PolyVec::new(vec![Scalar::from_ratio(-2, 1), Scalar::zero()]),
            },
        );
        entries.insert(
            (-1i64, g.zero()),
            CoeffPair {
                c1: PolyVec::new(vec![Scalar::from_ratio(1, 5), Scalar::zero()]),
                c2: PolyVec::zero(1),
            },
        );
        let c = GeneratorCoeffs::new(entries, &params).unwrap();
        let j = serde_json::to_string_pretty(&c).unwrap();
        let back: GeneratorCoeffs = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
    }
}
