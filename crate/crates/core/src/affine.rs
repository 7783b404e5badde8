//! Affine forms and maps over a parameter tuple, with the series length `n`
//! carried as a formal symbol.
//!
//! `AffineExpr` is `constant + Σ coeffs[i]·x_i + n_coeff·n`. An `AffineMap`
//! is one such form per output coordinate, i.e. a matrix plus an offset whose
//! entries are affine in `n`. Because `n` stays symbolic, two maps compare
//! equal only if they agree for every `n`.

use std::fmt;

use crate::expr::Expr;
use crate::field::{FieldError, ParseError, Rational, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineExpr {
    coeffs: Vec<Rational>,
    n_coeff: Rational,
    constant: Rational,
}

impl AffineExpr {
    pub fn constant(arity: usize, c: Rational) -> Self {
        AffineExpr { coeffs: vec![Rational::zero(); arity], n_coeff: Rational::zero(), constant: c }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = AffineExpr::constant(arity, Rational::zero());
        e.coeffs[i] = Rational::one();
        e
    }

    pub fn n(arity: usize) -> Self {
        let mut e = AffineExpr::constant(arity, Rational::zero());
        e.n_coeff = Rational::one();
        e
    }

    pub fn parse(src: &str, vars: &[&str]) -> Result<Self, ParseError> {
        Expr::parse(src)?.to_affine(vars)
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn n_coeff(&self) -> &Rational {
        &self.n_coeff
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    /// The value when no parameter and no `n` appears.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.n_coeff.is_zero() && self.coeffs.iter().all(Rational::is_zero)).then(|| self.constant.clone())
    }

    pub fn add(&self, other: &AffineExpr) -> AffineExpr {
        assert_eq!(self.arity(), other.arity(), "arity mismatch");
        AffineExpr {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            n_coeff: &self.n_coeff + &other.n_coeff,
            constant: &self.constant + &other.constant,
        }
    }

    pub fn sub(&self, other: &AffineExpr) -> AffineExpr {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> AffineExpr {
        AffineExpr {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            n_coeff: &self.n_coeff * c,
            constant: &self.constant * c,
        }
    }

    /// Value at concrete parameters and a concrete `n`.
    pub fn eval<S: Scalar>(&self, params: &[S], n: u64) -> Result<S, FieldError> {
        assert_eq!(params.len(), self.arity(), "arity mismatch");
        let fixed = &self.constant + &(&self.n_coeff * &Rational::from(n));
        let mut acc = S::from_rational(fixed);
        for (c, p) in self.coeffs.iter().zip(params) {
            if c.is_zero() {
                continue;
            }
            let term = if c.is_one() { p.clone() } else { p.try_mul(&S::from_rational(c.clone()))? };
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// `self ∘ inner`: substitutes the outputs of `inner` for this form's
    /// variables.
    pub fn substitute(&self, inner: &AffineMap) -> AffineExpr {
        assert_eq!(self.arity(), inner.output_arity(), "arity mismatch");
        let mut out = AffineExpr::constant(inner.input_arity(), self.constant.clone());
        out.n_coeff = self.n_coeff.clone();
        for (c, g) in self.coeffs.iter().zip(&inner.outputs) {
            if !c.is_zero() {
                out = out.add(&g.scale(c));
            }
        }
        out
    }

    /// Renders the form over the given variable names, pulling a common
    /// denominator out front: `(1+3x-y-z-2n)/2`.
    pub fn display_with<'v>(&self, vars: &[&'v str]) -> String {
        use num_integer::Integer;
        let lcm = std::iter::once(&self.constant)
            .chain(&self.coeffs)
            .chain(std::iter::once(&self.n_coeff))
            .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let l = Rational::from(lcm.clone());
        let mut terms: Vec<(Rational, Option<&'v str>)> = Vec::new();
        let mut push = |c: &Rational, name: Option<&'v str>| {
            let c = c * &l;
            if !c.is_zero() {
                terms.push((c, name));
            }
        };
        push(&self.constant, None);
        for (c, v) in self.coeffs.iter().zip(vars) {
            push(c, Some(*v));
        }
        push(&self.n_coeff, Some("n"));
        // lead with a positive term when there is one
        if let Some(i) = terms.iter().position(|(c, _)| !c.is_negative()) {
            let lead = terms.remove(i);
            terms.insert(0, lead);
        }
        let mut body = String::new();
        for (c, name) in &terms {
            let mag = c.abs();
            if c.is_negative() {
                body.push('-');
            } else if !body.is_empty() {
                body.push('+');
            }
            match name {
                None => body.push_str(&mag.to_string()),
                Some(v) => {
                    if !mag.is_one() {
                        body.push_str(&mag.to_string());
                    }
                    body.push_str(v);
                }
            }
        }
        if body.is_empty() {
            body.push('0');
        }
        if l.is_one() {
            body
        } else {
            format!("({body})/{lcm}")
        }
    }
}

impl fmt::Debug for AffineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.arity()).map(|i| format!("x{i}")).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

/// An affine map from `input_arity` parameters to `outputs.len()` values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    input_arity: usize,
    outputs: Vec<AffineExpr>,
}

impl AffineMap {
    pub fn identity(k: usize) -> Self {
        AffineMap { input_arity: k, outputs: (0..k).map(|i| AffineExpr::var(k, i)).collect() }
    }

    pub fn from_outputs(input_arity: usize, outputs: Vec<AffineExpr>) -> Self {
        assert!(outputs.iter().all(|e| e.arity() == input_arity), "arity mismatch");
        AffineMap { input_arity, outputs }
    }

    /// Parses one output expression per coordinate over the named inputs, e.g.
    /// `parse(&["a","b","c"], &["c-b-n", "c-a-n", "c"])`.
    pub fn parse(inputs: &[&str], outputs: &[&str]) -> Result<Self, ParseError> {
        let outputs = outputs.iter().map(|s| AffineExpr::parse(s, inputs)).collect::<Result<Vec<_>, _>>()?;
        Ok(AffineMap { input_arity: inputs.len(), outputs })
    }

    pub fn input_arity(&self) -> usize {
        self.input_arity
    }

    pub fn output_arity(&self) -> usize {
        self.outputs.len()
    }

    pub fn outputs(&self) -> &[AffineExpr] {
        &self.outputs
    }

    pub fn is_square(&self) -> bool {
        self.input_arity == self.outputs.len()
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineMap::identity(self.input_arity)
    }

    /// Linear part, row per output.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        self.outputs.iter().map(|e| e.coeffs.clone()).collect()
    }

    /// Offsets as `(constant, coefficient of n)` per output.
    pub fn offsets(&self) -> Vec<(Rational, Rational)> {
        self.outputs.iter().map(|e| (e.constant.clone(), e.n_coeff.clone())).collect()
    }

    /// `self ∘ g`: apply `g` first, then `self`. `None` on arity mismatch.
    pub fn compose(&self, g: &AffineMap) -> Option<AffineMap> {
        if self.input_arity != g.output_arity() {
            return None;
        }
        Some(AffineMap { input_arity: g.input_arity, outputs: self.outputs.iter().map(|e| e.substitute(g)).collect() })
    }

    pub fn apply<S: Scalar>(&self, params: &[S], n: u64) -> Result<Vec<S>, FieldError> {
        self.outputs.iter().map(|e| e.eval(params, n)).collect()
    }

    pub fn display_with(&self, vars: &[&str]) -> String {
        let parts: Vec<String> = self.outputs.iter().map(|e| e.display_with(vars)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.outputs).finish()
    }
}
