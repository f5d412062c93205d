//! Sparse monomials: sorted `(variable, exponent)` pairs with no zeros.

/// A power product of variables. The representation is canonical: pairs are
/// sorted by variable id and zero exponents are never stored, so derived
/// `Eq`/`Ord` give a canonical (not order-theoretic) total order usable as a
/// map key.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(id: u32) -> Self {
        Monomial(vec![(id, 1)])
    }

    pub fn var_pow(id: u32, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(id, exp)])
        }
    }

    /// Build from arbitrary pairs; merges duplicates and drops zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = std::collections::BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0u32) += e;
            }
        }
        Monomial(map.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, var: u32) -> u32 {
        match self.0.binary_search_by_key(&var, |&(v, _)| v) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Degree counting only variables in `vars` (assumed sorted-free set).
    pub fn degree_in(&self, vars: &[u32]) -> u32 {
        self.0
            .iter()
            .filter(|&&(v, _)| vars.contains(&v))
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = self.0[i];
            let (vb, eb) = other.0[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut i = 0;
        for &(vb, eb) in &other.0 {
            loop {
                if i >= self.0.len() {
                    return None;
                }
                let (va, ea) = self.0[i];
                if va < vb {
                    out.push((va, ea));
                    i += 1;
                } else if va == vb {
                    if ea < eb {
                        return None;
                    }
                    if ea > eb {
                        out.push((va, ea - eb));
                    }
                    i += 1;
                    break;
                } else {
                    return None;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.try_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = self.0[i];
            let (vb, eb) = other.0[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((va, ea.max(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Disjoint supports, i.e. `lcm == product`.
    pub fn coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * n)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_is_canonical() {
        let m = Monomial::from_pairs([(3, 1), (1, 2), (3, 1), (5, 0)]);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(1, 2), (3, 2)]);
        assert_eq!(m.total_degree(), 4);
        assert_eq!(m.exponent(1), 2);
        assert_eq!(m.exponent(5), 0);
    }

    #[test]
    fn mul_div_lcm() {
        let a = Monomial::from_pairs([(0, 2), (1, 1)]);
        let b = Monomial::from_pairs([(1, 1), (2, 3)]);
        let ab = a.mul(&b);
        assert_eq!(ab.iter().collect::<Vec<_>>(), vec![(0, 2), (1, 2), (2, 3)]);
        assert_eq!(ab.try_div(&b), Some(a.clone()));
        assert_eq!(a.try_div(&b), None);
        assert_eq!(
            a.lcm(&b).iter().collect::<Vec<_>>(),
            vec![(0, 2), (1, 1), (2, 3)]
        );
        assert!(!a.coprime(&b));
        assert!(a.coprime(&Monomial::var(7)));
        assert!(Monomial::one().divides(&a));
    }
}
