//! Sparse multivariate Laurent polynomials with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::RingError;

/// Variables in their canonical order: t, p, q, s, r, w, x1, x2, ...
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    P,
    Q,
    S,
    R,
    W,
    X(u8),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T => f.write_str("t"),
            Var::P => f.write_str("p"),
            Var::Q => f.write_str("q"),
            Var::S => f.write_str("s"),
            Var::R => f.write_str("r"),
            Var::W => f.write_str("w"),
            Var::X(i) => write!(f, "x{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[Var]>);

impl VarSet {
    pub fn new(mut vars: Vec<Var>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        VarSet(vars.into())
    }

    /// t, p, x1 .. x_{2g}
    pub fn for_genus(genus: u32) -> Self {
        let mut v = vec![Var::T, Var::P];
        v.extend((1..=2 * genus).map(|i| Var::X(i as u8)));
        VarSet::new(v)
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    fn idx(&self, v: Var) -> usize {
        self.index_of(v).unwrap_or_else(|| panic!("variable {v} not in {self}"))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Exponent vector. Ordering is by total degree, then lexicographic in the
/// variable order, which is also the display order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: i64,
    exps: SmallVec<[i32; 6]>,
}

impl Monomial {
    pub fn new(exps: impl Into<SmallVec<[i32; 6]>>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().map(|&e| e as i64).sum();
        Monomial { degree, exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { degree: 0, exps: SmallVec::from_elem(0, n) }
    }

    pub fn exps(&self) -> &[i32] {
        &self.exps
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[i32; 6]> = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    fn map(&self, f: impl FnOnce(&mut [i32])) -> Monomial {
        let mut exps = self.exps.clone();
        f(&mut exps);
        Monomial::new(exps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &VarSet) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &VarSet, c: impl Into<BigInt>) -> Self {
        Self::term(vars, c, Monomial::one(vars.len()))
    }

    pub fn term(vars: &VarSet, c: impl Into<BigInt>, m: Monomial) -> Self {
        assert_eq!(m.exps.len(), vars.len());
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// Sum of the given terms (repeated monomials are added up).
    pub fn from_terms(vars: &VarSet, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut out = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.exps.len(), vars.len());
            out.add_term(m, c);
        }
        out
    }

    /// `c * prod v^e`; variables must belong to `vars`.
    pub fn monomial(vars: &VarSet, c: impl Into<BigInt>, powers: &[(Var, i32)]) -> Self {
        let mut exps: SmallVec<[i32; 6]> = SmallVec::from_elem(0, vars.len());
        for &(v, e) in powers {
            exps[vars.idx(v)] += e;
        }
        Self::term(vars, c, Monomial::new(exps))
    }

    pub fn var(vars: &VarSet, v: Var) -> Self {
        Self::monomial(vars, 1, &[(v, 1)])
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in display order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(RingError::VariableSetMismatch { left: self.vars.to_string(), right: other.vars.to_string() })
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("variable sets agree")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("variable sets agree")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("variable sets agree")
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by the monomial `prod v^e`.
    pub fn shift(&self, powers: &[(Var, i32)]) -> Self {
        let idx: Vec<(usize, i32)> = powers.iter().map(|&(v, e)| (self.vars.idx(v), e)).collect();
        self.map_monomials(|exps| {
            for &(i, e) in &idx {
                exps[i] += e;
            }
        })
    }

    /// Rewrite exponent vectors; colliding terms are summed.
    pub fn map_monomials(&self, mut f: impl FnMut(&mut [i32])) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.map(&mut f), c.clone());
        }
        out
    }

    /// Substitute `from -> into^factor`, i.e. exponent of `from` moves onto `into`.
    pub fn merge_var(&self, from: Var, into: Var, factor: i32) -> Self {
        let (i, j) = (self.vars.idx(from), self.vars.idx(into));
        self.map_monomials(|e| {
            e[j] += factor * e[i];
            e[i] = 0;
        })
    }

    /// Substitute `v -> 1`.
    pub fn set_one(&self, v: Var) -> Self {
        let i = self.vars.idx(v);
        self.map_monomials(|e| e[i] = 0)
    }

    /// Drop every term that contains `v` (substitute `v -> 0` for a polynomial variable).
    pub fn set_zero(&self, v: Var) -> Self {
        let i = self.vars.idx(v);
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.exps[i] == 0).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn min_exp(&self, v: Var) -> Option<i32> {
        let i = self.vars.idx(v);
        self.terms.keys().map(|m| m.exps[i]).min()
    }

    pub fn max_exp(&self, v: Var) -> Option<i32> {
        let i = self.vars.idx(v);
        self.terms.keys().map(|m| m.exps[i]).max()
    }

    /// Exponent of `v` is zero in every term.
    pub fn free_of(&self, v: Var) -> bool {
        match self.vars.index_of(v) {
            None => true,
            Some(i) => self.terms.keys().all(|m| m.exps[i] == 0),
        }
    }

    /// Re-express over another variable set. Fails if a used variable is missing.
    pub fn with_vars(&self, vars: &VarSet) -> Result<Self, RingError> {
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut exps: SmallVec<[i32; 6]> = SmallVec::from_elem(0, vars.len());
            for (k, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = self.vars.0[k];
                let j = vars.index_of(v).ok_or_else(|| RingError::UnexpectedVariable(v.to_string()))?;
                exps[j] = e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Exact division by `v - 1`.
    pub fn div_by_var_minus_one(&self, v: Var) -> Result<Self, RingError> {
        let i = self.vars.idx(v);
        // group by the remaining exponents; each group is a Laurent polynomial in v
        let mut groups: BTreeMap<Monomial, BTreeMap<i32, BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let rest = m.map(|e| e[i] = 0);
            groups.entry(rest).or_default().insert(m.exps[i], c.clone());
        }
        let mut out = Self::zero(&self.vars);
        for (rest, coeffs) in groups {
            let lo = *coeffs.keys().next().unwrap();
            let hi = *coeffs.keys().next_back().unwrap();
            // f = (v - 1) g  =>  c_e = g_{e-1} - g_e
            let mut g = BigInt::zero();
            for e in lo..hi {
                g = &g - coeffs.get(&e).cloned().unwrap_or_default();
                if !g.is_zero() {
                    out.add_term(rest.map(|x| x[i] = e), g.clone());
                }
            }
            if coeffs[&hi] != g {
                return Err(RingError::DivisionFailed("not divisible by (v - 1)"));
            }
        }
        Ok(out)
    }

    /// Value at all variables = 1.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(abs.to_string());
            }
            for (v, &e) in self.vars.0.iter().zip(&m.exps) {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

/// Reads polynomials in the display syntax: `-2*t + 4*t^2 - t^3*x1^-1`.
/// Implicit products (`2t`, `t x1`) are accepted too.
pub fn parse_poly(vars: &VarSet, text: &str) -> Result<LaurentPoly, RingError> {
    let bad = |msg: &str| RingError::UnexpectedVariable(format!("{msg} in `{text}`"));
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = LaurentPoly::zero(vars);
    let mut i = 0;
    if s.is_empty() {
        return Err(bad("empty polynomial"));
    }
    while i < s.len() {
        let mut sign = BigInt::one();
        while i < s.len() && (s[i] == '+' || s[i] == '-' || s[i] == '\u{2212}') {
            if s[i] != '+' {
                sign = -sign;
            }
            i += 1;
        }
        let mut coeff = sign;
        let mut exps: SmallVec<[i32; 6]> = SmallVec::from_elem(0, vars.len());
        let mut any = false;
        loop {
            if i < s.len() && s[i] == '*' {
                i += 1;
            }
            if i >= s.len() || s[i] == '+' || s[i] == '-' || s[i] == '\u{2212}' {
                break;
            }
            if s[i].is_ascii_digit() {
                let st = i;
                while i < s.len() && s[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[st..i].iter().collect::<String>().parse().map_err(|_| bad("bad integer"))?;
                coeff *= n;
            } else {
                let v = match s[i] {
                    't' => Var::T,
                    'p' => Var::P,
                    'q' => Var::Q,
                    's' => Var::S,
                    'r' => Var::R,
                    'w' => Var::W,
                    'x' => {
                        let st = i + 1;
                        let mut j = st;
                        while j < s.len() && s[j].is_ascii_digit() {
                            j += 1;
                        }
                        let n: u8 = s[st..j].iter().collect::<String>().parse().map_err(|_| bad("bad x index"))?;
                        i = j - 1;
                        Var::X(n)
                    }
                    _ => return Err(bad("unexpected character")),
                };
                i += 1;
                let mut e = 1;
                if i < s.len() && s[i] == '^' {
                    i += 1;
                    let st = i;
                    if i < s.len() && (s[i] == '-' || s[i] == '\u{2212}') {
                        i += 1;
                    }
                    while i < s.len() && s[i].is_ascii_digit() {
                        i += 1;
                    }
                    let txt: String = s[st..i].iter().map(|&c| if c == '\u{2212}' { '-' } else { c }).collect();
                    e = txt.parse().map_err(|_| bad("bad exponent"))?;
                }
                let k = vars.index_of(v).ok_or_else(|| bad("variable outside the ring"))?;
                exps[k] += e;
            }
            any = true;
        }
        if !any {
            return Err(bad("dangling sign"));
        }
        out.add_term(Monomial::new(exps), coeff);
    }
    Ok(out)
}
