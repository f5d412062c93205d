//! Sparse multivariate polynomials over the exact rationals, monomial
//! orders, Gröbner bases, and rational functions.

pub mod dimension;
pub mod groebner;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod ratfun;
pub mod registry;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, Rational};

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use registry::VarRegistry;

/// A polynomial in canonical form: a map from monomials to nonzero rational
/// coefficients. Two polynomials are equal iff their term maps are equal.
/// The map key order is the canonical order on `Monomial`, not the active
/// monomial order; leading terms are computed against an explicit
/// `MonomialOrder`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn var(id: u32) -> Self {
        Polynomial::term(Monomial::var(id), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The constant term (zero if absent).
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Set of variable ids appearing with positive exponent.
    pub fn support(&self) -> std::collections::BTreeSet<u32> {
        self.terms.keys().flat_map(|m| m.support()).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn leading<'a>(&'a self, order: &MonomialOrder) -> Option<(&'a Monomial, &'a Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.leading(order).map(|(m, _)| m.clone())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiply by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    /// In-place `self += c * m * g`.
    pub fn add_scaled(&mut self, g: &Polynomial, m: &Monomial, c: &Rational) {
        for (gm, gc) in &g.terms {
            self.add_term(gm.mul(m), gc * c);
        }
    }

    pub(crate) fn remove_term(&mut self, m: &Monomial) -> Option<Rational> {
        self.terms.remove(m)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    pub fn partial_derivative(&self, var: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e > 0 {
                let dm = Monomial::from_pairs(
                    m.iter().map(|(v, k)| if v == var { (v, k - 1) } else { (v, k) }),
                );
                out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Evaluate at a full point, indexed by variable id.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                t *= rational_pow(&point[v as usize], e);
            }
            acc += t;
        }
        acc
    }

    /// Substitute values for a subset of the variables.
    pub fn eval_partial(&self, assignment: &BTreeMap<u32, Rational>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.iter() {
                match assignment.get(&v) {
                    Some(val) => coeff *= rational_pow(val, e),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), coeff);
        }
        out
    }

    /// Decompose an (affine-)linear polynomial as `(coeffs, constant)`.
    /// Returns `None` if any term has degree > 1.
    pub fn linear_form(&self) -> Option<(Vec<(u32, Rational)>, Rational)> {
        let mut coeffs = Vec::new();
        let mut constant = Rational::zero();
        for (m, c) in &self.terms {
            match m.total_degree() {
                0 => constant = c.clone(),
                1 => {
                    let (v, _) = m.iter().next().unwrap();
                    coeffs.push((v, c.clone()));
                }
                _ => return None,
            }
        }
        Some((coeffs, constant))
    }

    /// Divide every coefficient by the leading coefficient.
    pub fn make_monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            None => Polynomial::zero(),
            Some((_, lc)) => {
                let inv = Rational::one() / lc;
                self.mul_scalar(&inv)
            }
        }
    }

    /// Positive rational `g` with `self / g` having coprime integer
    /// coefficients: gcd of numerators over lcm of denominators.
    pub fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            Rational::one()
        } else {
            Rational::new(num_gcd, den_lcm)
        }
    }

    /// `self` divided by its content (integer coefficients, gcd 1).
    pub fn primitive_part(&self) -> Polynomial {
        let c = self.content();
        let inv = Rational::one() / c;
        self.mul_scalar(&inv)
    }

    /// Exact division by `g`; `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        if g.is_zero() {
            return None;
        }
        let order = MonomialOrder::degrevlex();
        let (gm, gc) = g.leading(&order).unwrap();
        let (gm, gc) = (gm.clone(), gc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading(&order).unwrap();
            let factor = rm.try_div(&gm)?;
            let coeff = rc / &gc;
            quot.add_term(factor.clone(), coeff.clone());
            rem = rem.sub(&g.mul_term(&factor, &coeff));
        }
        Some(quot)
    }

    /// Render against a registry using the canonical text grammar.
    pub fn display<'a>(&'a self, reg: &'a VarRegistry) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, reg }
    }

    pub fn to_text(&self, reg: &VarRegistry) -> String {
        self.display(reg).to_string()
    }
}

fn rational_pow(base: &Rational, exp: u32) -> Rational {
    let mut out = Rational::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            out *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    out
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    reg: &'a VarRegistry,
}

impl std::fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // Display order: degrevlex descending, deterministic.
        let order = MonomialOrder::degrevlex();
        let mut terms: Vec<(&Monomial, &Rational)> = self.poly.terms().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a).then_with(|| a.cmp(b)));
        for (idx, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -(*c).clone() } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(format_rational(&mag));
            }
            for (v, e) in m.iter() {
                let name = self.reg.name(v);
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use crate::sampling::{random_rational, task_rng};
    use rand::Rng;

    fn reg3() -> VarRegistry {
        VarRegistry::from_names(["x", "y", "z"]).unwrap()
    }

    fn random_poly(rng: &mut impl Rng, n_vars: u32, max_deg: u32, n_terms: usize) -> Polynomial {
        let mut p = Polynomial::zero();
        for _ in 0..n_terms {
            let m = Monomial::from_pairs(
                (0..n_vars).filter_map(|v| {
                    let e = rng.gen_range(0..=max_deg);
                    (e > 0).then_some((v, e))
                }),
            );
            p.add_term(m, random_rational(rng));
        }
        p
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::var(0), rat(2));
        p.add_term(Monomial::var(0), rat(-2));
        assert!(p.is_zero());
        assert_eq!(Polynomial::constant(rat(0)), Polynomial::zero());
    }

    #[test]
    fn ring_axioms_on_random_samples() {
        let mut rng = task_rng(7, "poly/axioms");
        for _ in 0..30 {
            let a = random_poly(&mut rng, 3, 3, 4);
            let b = random_poly(&mut rng, 3, 3, 4);
            let c = random_poly(&mut rng, 3, 3, 4);
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.sub(&a), Polynomial::zero());
        }
    }

    #[test]
    fn derivative_and_eval() {
        // f = x^2 y + 3 z
        let f = Polynomial::from_terms([
            (Monomial::from_pairs([(0, 2), (1, 1)]), rat(1)),
            (Monomial::var(2), rat(3)),
        ]);
        let fx = f.partial_derivative(0);
        assert_eq!(
            fx,
            Polynomial::term(Monomial::from_pairs([(0, 1), (1, 1)]), rat(2))
        );
        let point = [rat(2), rat(-1), ratio(1, 3)];
        assert_eq!(f.eval(&point), rat(-4) + rat(1)); // 4*(-1) + 3*(1/3)
    }

    #[test]
    fn partial_eval_substitutes() {
        // f = x y + y^2
        let f = Polynomial::from_terms([
            (Monomial::from_pairs([(0, 1), (1, 1)]), rat(1)),
            (Monomial::from_pairs([(1, 2)]), rat(1)),
        ]);
        let assigned: BTreeMap<u32, Rational> = [(0, rat(3))].into_iter().collect();
        let g = f.eval_partial(&assigned);
        // 3 y + y^2
        assert_eq!(
            g,
            Polynomial::from_terms([
                (Monomial::var(1), rat(3)),
                (Monomial::from_pairs([(1, 2)]), rat(1)),
            ])
        );
    }

    #[test]
    fn exact_division() {
        let reg = reg3();
        let x = Polynomial::var(reg.id("x").unwrap());
        let y = Polynomial::var(reg.id("y").unwrap());
        let f = x.add(&y).mul(&x.sub(&y));
        assert_eq!(f.exact_div(&x.add(&y)), Some(x.sub(&y)));
        assert_eq!(f.exact_div(&x), None);
    }

    #[test]
    fn display_matches_grammar() {
        let reg = reg3();
        let x = reg.id("x").unwrap();
        let y = reg.id("y").unwrap();
        let p = Polynomial::from_terms([
            (Monomial::from_pairs([(x, 2)]), ratio(2, 3)),
            (Monomial::from_pairs([(x, 1), (y, 1)]), rat(-1)),
            (Monomial::one(), rat(5)),
        ]);
        assert_eq!(p.to_text(&reg), "2/3*x^2 - x*y + 5");
        assert_eq!(Polynomial::zero().to_text(&reg), "0");
    }

    #[test]
    fn content_and_primitive_part() {
        let p = Polynomial::from_terms([
            (Monomial::var(0), ratio(4, 3)),
            (Monomial::var(1), rat(2)),
        ]);
        assert_eq!(p.content(), ratio(2, 3));
        let pp = p.primitive_part();
        assert_eq!(pp.coefficient(&Monomial::var(0)), rat(2));
        assert_eq!(pp.coefficient(&Monomial::var(1)), rat(3));
    }
}
