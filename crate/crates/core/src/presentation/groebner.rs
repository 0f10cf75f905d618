use std::collections::BTreeSet;

use super::poly::{degrevlex, divides, lcm, Monomial, PolyExpr};
use crate::error::PresentationError;

/// S-pair budget for Buchberger's algorithm.
pub const DEFAULT_PAIR_CAP: usize = 10_000;

/// Full reduction of `f` modulo `basis` (leading terms under degrevlex).
pub fn normal_form(f: &PolyExpr, basis: &[PolyExpr]) -> PolyExpr {
    let field = f.field();
    let leads: Vec<(u32, Monomial)> = basis
        .iter()
        .map(|g| {
            let (c, m) = g.leading().expect("zero polynomial in basis");
            (c, m.clone())
        })
        .collect();
    let mut p = f.clone();
    let mut rem = PolyExpr::zero(field, f.nvars());
    while let Some((c, m)) = p.leading().map(|(c, m)| (c, m.clone())) {
        match leads.iter().position(|(_, lm)| divides(lm, &m)) {
            Some(k) => {
                let (lc, lm) = &leads[k];
                let shift: Monomial = m.iter().zip(lm).map(|(a, b)| a - b).collect();
                let factor = field.mul(c, field.inv(*lc));
                p = p.sub_scaled(factor, &basis[k].shift(&shift));
            }
            None => {
                rem.add_term(c, m.clone());
                p.add_term(field.neg(c), m);
            }
        }
    }
    rem
}

fn s_poly(f: &PolyExpr, g: &PolyExpr) -> PolyExpr {
    let (cf, mf) = f.leading().unwrap();
    let (cg, mg) = g.leading().unwrap();
    let l = lcm(mf, mg);
    let sf: Monomial = l.iter().zip(mf).map(|(a, b)| a - b).collect();
    let sg: Monomial = l.iter().zip(mg).map(|(a, b)| a - b).collect();
    let field = f.field();
    let a = f.shift(&sf).scale(field.inv(cf));
    let b = g.shift(&sg).scale(field.inv(cg));
    a.sub_scaled(1, &b)
}

fn lead(p: &PolyExpr) -> Monomial {
    p.leading().unwrap().1.clone()
}

/// Reduced Gröbner basis under degrevlex, via Buchberger's algorithm with
/// the coprime and chain criteria. Fails if more than `cap` S-pairs are
/// examined or if the ideal is not zero-dimensional.
pub fn groebner_zero_dim(
    relations: &[PolyExpr],
    vars: &[String],
    cap: usize,
) -> Result<Vec<PolyExpr>, PresentationError> {
    let mut g: Vec<PolyExpr> = relations.iter().filter(|p| !p.is_zero()).map(PolyExpr::monic).collect();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let mut examined = 0usize;
    while !pending.is_empty() {
        // Normal selection strategy: smallest lcm first, ties by index.
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lcm(&lead(&g[a.0]), &lead(&g[a.1]));
                let lb = lcm(&lead(&g[b.0]), &lead(&g[b.1]));
                degrevlex(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        examined += 1;
        if examined > cap {
            return Err(PresentationError::IterationCap(cap));
        }
        let (li, lj) = (lead(&g[i]), lead(&g[j]));
        if li.iter().zip(&lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let l = lcm(&li, &lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && divides(&lead(&g[k]), &l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_poly(&g[i], &g[j]), &g);
        if !r.is_zero() {
            let n = g.len();
            g.push(r.monic());
            for k in 0..n {
                pending.insert((k, n));
            }
        }
    }
    let reduced = interreduce(g);
    if reduced.iter().any(|p| lead(p).iter().all(|&e| e == 0)) {
        return Err(PresentationError::UnitIdeal);
    }
    for (v, name) in vars.iter().enumerate() {
        let has_pure_power = reduced.iter().any(|p| {
            let m = lead(p);
            m[v] > 0 && m.iter().enumerate().all(|(w, &e)| w == v || e == 0)
        });
        if !has_pure_power {
            return Err(PresentationError::NotZeroDimensional(name.clone()));
        }
    }
    Ok(reduced)
}

fn interreduce(g: Vec<PolyExpr>) -> Vec<PolyExpr> {
    // Drop elements whose leading monomial is divisible by another one.
    let mut keep: Vec<PolyExpr> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let lp = lead(p);
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let lq = lead(q);
            j != i && divides(&lq, &lp) && (lq != lp || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<PolyExpr> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let p = &keep[i];
        let (c, m) = p.leading().map(|(c, m)| (c, m.clone())).unwrap();
        let mut tail = p.clone();
        tail.add_term(p.field().neg(c), m.clone());
        let mut r = normal_form(&tail, &others);
        r.add_term(c, m);
        out.push(r.monic());
    }
    out.sort_by(|a, b| degrevlex(&lead(a), &lead(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::super::poly::parse_poly;
    use super::*;
    use crate::linalg::PrimeField;

    fn ideal(p: u32, vars: &[&str], rels: &[&str]) -> (Vec<String>, Vec<PolyExpr>) {
        let f = PrimeField::new(p).unwrap();
        let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let r = rels.iter().map(|s| parse_poly(s, &v, f).unwrap()).collect();
        (v, r)
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let (v, r) = ideal(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
        let g = groebner_zero_dim(&r, &v, DEFAULT_PAIR_CAP).unwrap();
        let leads: Vec<Monomial> = g.iter().map(lead).collect();
        assert_eq!(leads, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert!(g.iter().all(|p| p.num_terms() == 1));
    }

    #[test]
    fn binomial_ideal_over_f3() {
        let (v, r) = ideal(3, &["x", "y"], &["x^2 - y^2", "x*y"]);
        let g = groebner_zero_dim(&r, &v, DEFAULT_PAIR_CAP).unwrap();
        let f = PrimeField::new(3).unwrap();
        let expect = vec![
            parse_poly("x*y", &v, f).unwrap(),
            parse_poly("x^2 - y^2", &v, f).unwrap(),
            parse_poly("y^3", &v, f).unwrap(),
        ];
        assert_eq!(g, expect);
    }

    #[test]
    fn not_zero_dimensional() {
        let (v, r) = ideal(2, &["x", "y"], &["x"]);
        assert_eq!(
            groebner_zero_dim(&r, &v, DEFAULT_PAIR_CAP),
            Err(PresentationError::NotZeroDimensional("y".into()))
        );
    }

    #[test]
    fn unit_ideal() {
        let (v, r) = ideal(5, &["x"], &["x^2", "x^2 + 1"]);
        assert_eq!(
            groebner_zero_dim(&r, &v, DEFAULT_PAIR_CAP),
            Err(PresentationError::UnitIdeal)
        );
    }

    #[test]
    fn cap_is_enforced() {
        let (v, r) = ideal(3, &["x", "y"], &["x^2 - y^2", "x*y"]);
        assert_eq!(groebner_zero_dim(&r, &v, 0), Err(PresentationError::IterationCap(0)));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let (v, r) = ideal(3, &["x", "y"], &["x^2 - y^2", "x*y"]);
        let g = groebner_zero_dim(&r, &v, DEFAULT_PAIR_CAP).unwrap();
        let f = PrimeField::new(3).unwrap();
        let p = parse_poly("x^3 + 2*x^2*y + y^2 + x", &v, f).unwrap();
        let nf = normal_form(&p, &g);
        assert_eq!(normal_form(&nf, &g), nf);
    }
}
