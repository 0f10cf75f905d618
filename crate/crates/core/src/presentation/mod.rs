//! Ring presentations k[x_1..x_n]/I and their standard monomial bases.

mod groebner;
mod poly;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub use groebner::{groebner_zero_dim, normal_form, DEFAULT_PAIR_CAP};
pub use poly::{degrevlex, divides, lcm, parse_poly, Monomial, PolyExpr};

use crate::error::PresentationError;
use crate::linalg::PrimeField;

/// Default cap on the k-dimension of a presented algebra.
pub const DEFAULT_DIM_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    field: PrimeField,
    vars: Vec<String>,
    relations: Vec<PolyExpr>,
}

impl RingPresentation {
    pub fn new(field: PrimeField, vars: Vec<String>, relations: Vec<PolyExpr>) -> Result<Self, PresentationError> {
        let mut seen = BTreeSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(PresentationError::DuplicateVariable(v.clone()));
            }
        }
        if relations.is_empty() {
            return Err(PresentationError::NoRelations);
        }
        let origin = vec![0; vars.len()];
        for (i, r) in relations.iter().enumerate() {
            if r.coeff(&origin) != 0 {
                return Err(PresentationError::ConstantTerm(i));
            }
        }
        Ok(Self { field, vars, relations })
    }

    /// Parses relation strings over F_p in the given variables.
    pub fn parse<S: AsRef<str>>(p: u32, vars: &[S], relations: &[S]) -> Result<Self, PresentationError> {
        let field = PrimeField::new(p)?;
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| parse_poly(r.as_ref(), &vars, field))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(field, vars, rels)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn relations(&self) -> &[PolyExpr] {
        &self.relations
    }
}

/// Standard monomials of R = k[x]/I with the multiplication table.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    pub groebner: Vec<PolyExpr>,
    /// By total degree, then descending degrevlex within a degree
    /// (`1, x, y, x^2, x*y, ...`); `monomials[0]` is 1.
    pub monomials: Vec<Monomial>,
    /// `structure[i][j]` holds the coordinates of `e_i * e_j`.
    pub structure: Vec<Vec<Vec<u32>>>,
}

impl StandardBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    /// Monomial labels such as `1`, `x`, `x*y^2`.
    pub fn labels(&self, vars: &[String]) -> Vec<String> {
        self.monomials.iter().map(|m| monomial_label(m, vars)).collect()
    }
}

pub fn monomial_label(m: &[u32], vars: &[String]) -> String {
    let parts: Vec<String> = m
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn standard_basis(pres: &RingPresentation, dim_cap: usize) -> Result<StandardBasis, PresentationError> {
    let g = groebner_zero_dim(&pres.relations, &pres.vars, DEFAULT_PAIR_CAP)?;
    let leads: Vec<Monomial> = g.iter().map(|p| p.leading().unwrap().1.clone()).collect();
    let n = pres.vars.len();
    let standard = |m: &Monomial| !leads.iter().any(|l| divides(l, m));

    // The standard monomials form an order ideal; walk it from 1.
    let mut found: BTreeSet<Monomial> = BTreeSet::new();
    let mut queue = VecDeque::from([vec![0u32; n]]);
    while let Some(m) = queue.pop_front() {
        if found.contains(&m) || !standard(&m) {
            continue;
        }
        found.insert(m.clone());
        if found.len() > dim_cap {
            return Err(PresentationError::DimensionCap { cap: dim_cap });
        }
        for v in 0..n {
            let mut next = m.clone();
            next[v] += 1;
            queue.push_back(next);
        }
    }
    let mut monomials: Vec<Monomial> = found.into_iter().collect();
    monomials.sort_by(|a, b| {
        let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
        da.cmp(&db).then_with(|| degrevlex(b, a))
    });
    let index: BTreeMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let field = pres.field;
    let d = monomials.len();
    let mut structure = vec![vec![vec![0u32; d]; d]; d];
    for i in 0..d {
        for j in i..d {
            let prod: Monomial = monomials[i].iter().zip(&monomials[j]).map(|(a, b)| a + b).collect();
            let nf = normal_form(&PolyExpr::monomial(field, prod), &g);
            let mut coords = vec![0u32; d];
            for (c, m) in nf.terms() {
                coords[index[m]] = c;
            }
            structure[j][i] = coords.clone();
            structure[i][j] = coords;
        }
    }
    Ok(StandardBasis {
        groebner: g,
        monomials,
        structure,
    })
}
