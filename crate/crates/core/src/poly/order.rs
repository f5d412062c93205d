//! Monomial orders: lex, degrevlex, and block (elimination) orders.

use std::cmp::Ordering;

use super::monomial::Monomial;

/// A total order on monomials compatible with multiplication and with 1
/// minimal. `priority` lists variable ids from most to least significant;
/// `None` means ascending id order. Variables absent from a custom priority
/// (or from every block) are appended in id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex { priority: Option<Vec<u32>> },
    DegRevLex { priority: Option<Vec<u32>> },
    /// Graded revlex within each block; earlier blocks dominate. With the
    /// block to eliminate listed first this is an elimination order.
    Block { blocks: Vec<Vec<u32>> },
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder::Lex { priority: None }
    }

    pub fn degrevlex() -> Self {
        MonomialOrder::DegRevLex { priority: None }
    }

    pub fn lex_with(priority: Vec<u32>) -> Self {
        MonomialOrder::Lex {
            priority: Some(priority),
        }
    }

    pub fn degrevlex_with(priority: Vec<u32>) -> Self {
        MonomialOrder::DegRevLex {
            priority: Some(priority),
        }
    }

    pub fn block(blocks: Vec<Vec<u32>>) -> Self {
        MonomialOrder::Block { blocks }
    }

    pub fn describe(&self) -> String {
        match self {
            MonomialOrder::Lex { priority: None } => "lex".into(),
            MonomialOrder::Lex { priority: Some(p) } => format!("lex(priority={p:?})"),
            MonomialOrder::DegRevLex { priority: None } => "degrevlex".into(),
            MonomialOrder::DegRevLex { priority: Some(p) } => format!("degrevlex(priority={p:?})"),
            MonomialOrder::Block { blocks } => {
                format!("block({})", blocks.iter().map(|b| b.len()).count())
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex { priority: None } => lex_cmp_id(a, b),
            MonomialOrder::Lex { priority: Some(p) } => lex_cmp_priority(a, b, p),
            MonomialOrder::DegRevLex { priority: None } => {
                a.total_degree().cmp(&b.total_degree()).then_with(|| revlex_tie_id(a, b))
            }
            MonomialOrder::DegRevLex { priority: Some(p) } => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| revlex_tie_priority(a, b, p)),
            MonomialOrder::Block { blocks } => block_cmp(a, b, blocks),
        }
    }

    pub fn max<'m>(&self, mons: impl Iterator<Item = &'m Monomial>) -> Option<&'m Monomial> {
        mons.max_by(|a, b| self.cmp(a, b))
    }
}

/// Lex with priority = ascending variable id. Monomial pairs are sorted by
/// id, so a two-pointer walk sees variables in priority order.
fn lex_cmp_id(a: &Monomial, b: &Monomial) -> Ordering {
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            // `a` still has a positive exponent on a variable `b` lacks.
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some((va, ea)), Some((vb, eb))) => {
                if va < vb {
                    return Ordering::Greater; // a has the more significant var
                }
                if vb < va {
                    return Ordering::Less;
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
        }
    }
}

/// Revlex tiebreak (equal degrees assumed): the monomial with the larger
/// exponent on the least significant differing variable is smaller.
fn revlex_tie_id(a: &Monomial, b: &Monomial) -> Ordering {
    let av: Vec<(u32, u32)> = a.iter().collect();
    let bv: Vec<(u32, u32)> = b.iter().collect();
    let (mut i, mut j) = (av.len(), bv.len());
    while i > 0 || j > 0 {
        match (i.checked_sub(1).map(|k| av[k]), j.checked_sub(1).map(|k| bv[k])) {
            (Some((va, ea)), Some((vb, eb))) => {
                if va > vb {
                    return Ordering::Less; // a has trailing weight b lacks
                }
                if vb > va {
                    return Ordering::Greater;
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
                i -= 1;
                j -= 1;
            }
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => unreachable!(),
        }
    }
    Ordering::Equal
}

fn lex_cmp_priority(a: &Monomial, b: &Monomial, priority: &[u32]) -> Ordering {
    for &v in priority {
        let (ea, eb) = (a.exponent(v), b.exponent(v));
        if ea != eb {
            return ea.cmp(&eb);
        }
    }
    // Variables outside the listed priority, in id order.
    lex_cmp_rest(a, b, priority)
}

fn revlex_tie_priority(a: &Monomial, b: &Monomial, priority: &[u32]) -> Ordering {
    for &v in priority.iter().rev() {
        let (ea, eb) = (a.exponent(v), b.exponent(v));
        if ea != eb {
            return eb.cmp(&ea);
        }
    }
    lex_cmp_rest(a, b, priority)
}

fn lex_cmp_rest(a: &Monomial, b: &Monomial, listed: &[u32]) -> Ordering {
    let mut rest: Vec<u32> = a
        .support()
        .chain(b.support())
        .filter(|v| !listed.contains(v))
        .collect();
    rest.sort_unstable();
    rest.dedup();
    for v in rest {
        let (ea, eb) = (a.exponent(v), b.exponent(v));
        if ea != eb {
            return ea.cmp(&eb);
        }
    }
    Ordering::Equal
}

fn block_cmp(a: &Monomial, b: &Monomial, blocks: &[Vec<u32>]) -> Ordering {
    for block in blocks {
        let (da, db) = (a.degree_in(block), b.degree_in(block));
        if da != db {
            return da.cmp(&db);
        }
        let tie = revlex_tie_priority_in(a, b, block);
        if tie != Ordering::Equal {
            return tie;
        }
    }
    // Implicit trailing block: everything not listed, graded revlex by id.
    let listed: Vec<u32> = blocks.iter().flatten().copied().collect();
    let da: u32 = a.iter().filter(|(v, _)| !listed.contains(v)).map(|(_, e)| e).sum();
    let db: u32 = b.iter().filter(|(v, _)| !listed.contains(v)).map(|(_, e)| e).sum();
    da.cmp(&db).then_with(|| {
        let mut rest: Vec<u32> = a
            .support()
            .chain(b.support())
            .filter(|v| !listed.contains(v))
            .collect();
        rest.sort_unstable();
        rest.dedup();
        for &v in rest.iter().rev() {
            let (ea, eb) = (a.exponent(v), b.exponent(v));
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    })
}

fn revlex_tie_priority_in(a: &Monomial, b: &Monomial, vars: &[u32]) -> Ordering {
    for &v in vars.iter().rev() {
        let (ea, eb) = (a.exponent(v), b.exponent(v));
        if ea != eb {
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::lex();
        // x > y > 1, x^2 > x y^5
        assert_eq!(o.cmp(&m(&[(0, 1)]), &m(&[(1, 1)])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[(1, 1)]), &Monomial::one()), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[(0, 2)]), &m(&[(0, 1), (1, 5)])), Ordering::Greater);
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::degrevlex();
        // degree dominates
        assert_eq!(o.cmp(&m(&[(1, 3)]), &m(&[(0, 2)])), Ordering::Greater);
        // x > y > z in degree 1
        assert_eq!(o.cmp(&m(&[(0, 1)]), &m(&[(1, 1)])), Ordering::Greater);
        // classic: y^2 > x z under degrevlex(x>y>z)
        assert_eq!(o.cmp(&m(&[(1, 2)]), &m(&[(0, 1), (2, 1)])), Ordering::Greater);
        // x y > z^2
        assert_eq!(o.cmp(&m(&[(0, 1), (1, 1)]), &m(&[(2, 2)])), Ordering::Greater);
    }

    #[test]
    fn one_is_minimal_and_multiplicative() {
        let orders = [
            MonomialOrder::lex(),
            MonomialOrder::degrevlex(),
            MonomialOrder::block(vec![vec![1], vec![0, 2]]),
        ];
        let mons = [m(&[(0, 1)]), m(&[(1, 2)]), m(&[(0, 1), (2, 3)]), m(&[(2, 1)])];
        for o in &orders {
            for a in &mons {
                assert_eq!(o.cmp(a, &Monomial::one()), Ordering::Greater);
                for b in &mons {
                    let c = o.cmp(a, b);
                    for f in &mons {
                        assert_eq!(o.cmp(&a.mul(f), &b.mul(f)), c, "multiplicativity");
                    }
                }
            }
        }
    }

    #[test]
    fn block_order_eliminates_first_block() {
        // variables: 0,1 in second block; 2 in first (eliminated) block
        let o = MonomialOrder::block(vec![vec![2], vec![0, 1]]);
        // anything containing var 2 beats anything that does not
        assert_eq!(o.cmp(&m(&[(2, 1)]), &m(&[(0, 5), (1, 5)])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[(0, 1)]), &m(&[(1, 1)])), Ordering::Greater);
    }

    #[test]
    fn custom_priority_reorders_lex() {
        // priority y > x
        let o = MonomialOrder::lex_with(vec![1, 0]);
        assert_eq!(o.cmp(&m(&[(1, 1)]), &m(&[(0, 3)])), Ordering::Greater);
    }
}
