use std::collections::BTreeMap;
use std::fmt;

use exact_core::{ExactError, PiLinear, Rat};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Component Θ_{index} of the fiber at position `fiber` in the surface's
/// fiber list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentKey {
    pub fiber: usize,
    pub index: usize,
}

impl fmt::Display for ComponentKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}/Theta_{}", self.fiber, self.index)
    }
}

/// `constant + Σ coeff · symbol` with coefficients in Q + Qπ. Symbols stand
/// for numbers the lattice data does not determine.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LinearForm {
    pub constant: PiLinear,
    pub symbols: BTreeMap<String, PiLinear>,
}

impl LinearForm {
    pub fn constant(c: PiLinear) -> LinearForm {
        LinearForm { constant: c, symbols: BTreeMap::new() }
    }

    pub fn symbol(name: &str, coeff: PiLinear) -> LinearForm {
        let mut symbols = BTreeMap::new();
        symbols.insert(name.to_string(), coeff);
        LinearForm { constant: PiLinear::zero(), symbols }.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.symbols.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.symbols.is_empty()
    }

    fn normalized(mut self) -> LinearForm {
        self.symbols.retain(|_, v| !v.is_zero());
        self
    }

    pub fn add(&self, rhs: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        out.constant = &out.constant + &rhs.constant;
        for (k, v) in &rhs.symbols {
            let e = out.symbols.entry(k.clone()).or_default();
            *e = &*e + v;
        }
        out.normalized()
    }

    pub fn scale(&self, c: &Rat) -> LinearForm {
        LinearForm {
            constant: self.constant.scale(c),
            symbols: self.symbols.iter().map(|(k, v)| (k.clone(), v.scale(c))).collect(),
        }
        .normalized()
    }

    pub fn scale_pi(&self, c: &PiLinear) -> Result<LinearForm, ExactError> {
        let mut symbols = BTreeMap::new();
        for (k, v) in &self.symbols {
            symbols.insert(k.clone(), v.checked_mul(c)?);
        }
        Ok(LinearForm { constant: self.constant.checked_mul(c)?, symbols }.normalized())
    }

    /// Replace the symbols present in `values` by their values.
    pub fn substitute(&self, values: &BTreeMap<String, PiLinear>) -> Result<LinearForm, ExactError> {
        let mut out = LinearForm::constant(self.constant.clone());
        for (k, v) in &self.symbols {
            match values.get(k) {
                Some(x) => out.constant = &out.constant + &v.checked_mul(x)?,
                None => {
                    out.symbols.insert(k.clone(), v.clone());
                }
            }
        }
        Ok(out.normalized())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() || self.symbols.is_empty() {
            parts.push(self.constant.to_string());
        }
        for (k, v) in &self.symbols {
            parts.push(format!("({v})*{k}"));
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Class in NS(X) ⊗ (Q + Qπ). Absent map keys mean zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivisorClass {
    pub s: PiLinear,
    pub f: PiLinear,
    pub components: BTreeMap<ComponentKey, PiLinear>,
    /// Essential part: `psi(name)` for Shioda images, a bare section name for
    /// the section class itself.
    pub essential: BTreeMap<String, LinearForm>,
}

impl DivisorClass {
    pub fn zero() -> DivisorClass {
        DivisorClass::default()
    }

    pub fn fiber(f: PiLinear) -> DivisorClass {
        DivisorClass { f, ..DivisorClass::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.f.is_zero() && self.components.is_empty() && self.essential.is_empty()
    }

    fn normalized(mut self) -> DivisorClass {
        self.components.retain(|_, v| !v.is_zero());
        self.essential.retain(|_, v| !v.is_zero());
        self
    }

    pub fn add_component(&mut self, key: ComponentKey, coeff: &PiLinear) {
        let e = self.components.entry(key).or_default();
        *e = &*e + coeff;
        if e.is_zero() {
            self.components.remove(&key);
        }
    }

    pub fn add_essential(&mut self, key: &str, coeff: &LinearForm) {
        let e = self.essential.entry(key.to_string()).or_default();
        *e = e.add(coeff);
        if e.is_zero() {
            self.essential.remove(key);
        }
    }

    pub fn add(&self, rhs: &DivisorClass) -> DivisorClass {
        let mut out = self.clone();
        out.s = &out.s + &rhs.s;
        out.f = &out.f + &rhs.f;
        for (k, v) in &rhs.components {
            out.add_component(*k, v);
        }
        for (k, v) in &rhs.essential {
            out.add_essential(k, v);
        }
        out.normalized()
    }

    pub fn neg(&self) -> DivisorClass {
        self.scale(&Rat::int(-1))
    }

    pub fn sub(&self, rhs: &DivisorClass) -> DivisorClass {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rat) -> DivisorClass {
        DivisorClass {
            s: self.s.scale(c),
            f: self.f.scale(c),
            components: self.components.iter().map(|(k, v)| (*k, v.scale(c))).collect(),
            essential: self.essential.iter().map(|(k, v)| (k.clone(), v.scale(c))).collect(),
        }
        .normalized()
    }

    /// Multiply by a scalar in Q + Qπ; fails if a π² term would appear.
    pub fn scale_pi(&self, c: &PiLinear) -> Result<DivisorClass, ExactError> {
        let mut components = BTreeMap::new();
        for (k, v) in &self.components {
            components.insert(*k, v.checked_mul(c)?);
        }
        let mut essential = BTreeMap::new();
        for (k, v) in &self.essential {
            essential.insert(k.clone(), v.scale_pi(c)?);
        }
        Ok(DivisorClass { s: self.s.checked_mul(c)?, f: self.f.checked_mul(c)?, components, essential }
            .normalized())
    }

    /// Coefficients of the components of fiber `fiber`, Θ1 first, with
    /// zeros filled in up to `len`.
    pub fn fiber_vector(&self, fiber: usize, len: usize) -> Vec<PiLinear> {
        (1..=len)
            .map(|index| self.components.get(&ComponentKey { fiber, index }).cloned().unwrap_or_default())
            .collect()
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut term = |c: String, b: String| parts.push(format!("({c}){b}"));
        if !self.s.is_zero() {
            term(self.s.to_string(), "[s]".into());
        }
        if !self.f.is_zero() {
            term(self.f.to_string(), "[F]".into());
        }
        for (k, v) in &self.components {
            term(v.to_string(), k.to_string());
        }
        for (k, v) in &self.essential {
            term(v.to_string(), k.clone());
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

struct Components<'a>(&'a BTreeMap<ComponentKey, PiLinear>);

impl Serialize for Components<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(&k.to_string(), v)?;
        }
        map.end()
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("s", &self.s)?;
        map.serialize_entry("F", &self.f)?;
        map.serialize_entry("components", &Components(&self.components))?;
        map.serialize_entry("essential", &self.essential)?;
        map.end()
    }
}
