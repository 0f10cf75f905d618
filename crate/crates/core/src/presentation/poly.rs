use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::ParseError;
use crate::linalg::PrimeField;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// Degree-reverse-lexicographic comparison: total degree first, then the
/// monomial with the *smaller* exponent in the last differing variable
/// is the larger one.
pub fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// A polynomial over F_p with canonical terms: no repeated exponent
/// vectors and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Monomial, u32>,
}

impl PolyExpr {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(field: PrimeField, nvars: usize, terms: impl IntoIterator<Item = (i64, Monomial)>) -> Self {
        let mut p = Self::zero(field, nvars);
        for (c, m) in terms {
            assert_eq!(m.len(), nvars);
            p.add_term(field.reduce(c), m);
        }
        p
    }

    pub fn monomial(field: PrimeField, m: Monomial) -> Self {
        let n = m.len();
        Self::from_terms(field, n, [(1, m)])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(coefficient, exponents)` in ascending exponent-vector
    /// order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Monomial)> {
        self.terms.iter().map(|(m, &c)| (c, m))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &[u32]) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, c: u32, m: Monomial) {
        if c == 0 {
            return;
        }
        let f = self.field;
        let e = self.terms.entry(m).or_insert(0);
        *e = f.add(*e, c);
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    /// Leading term under degrevlex.
    pub fn leading(&self) -> Option<(u32, &Monomial)> {
        self.terms
            .iter()
            .max_by(|a, b| degrevlex(a.0, b.0))
            .map(|(m, &c)| (c, m))
    }

    pub fn scale(&self, c: u32) -> Self {
        let mut out = Self::zero(self.field, self.nvars);
        for (m, &v) in &self.terms {
            out.add_term(self.field.mul(v, c), m.clone());
        }
        out
    }

    pub fn shift(&self, by: &[u32]) -> Self {
        let mut out = Self::zero(self.field, self.nvars);
        for (m, &v) in &self.terms {
            let mm: Monomial = m.iter().zip(by).map(|(a, b)| a + b).collect();
            out.add_term(v, mm);
        }
        out
    }

    /// `self - c * other`.
    pub fn sub_scaled(&self, c: u32, other: &Self) -> Self {
        let mut out = self.clone();
        let f = self.field;
        for (m, &v) in &other.terms {
            out.add_term(f.neg(f.mul(c, v)), m.clone());
        }
        out
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((c, _)) => self.scale(self.field.inv(c)),
            None => self.clone(),
        }
    }
}

/// Parses a polynomial in the variables `vars`.
///
/// Grammar: a signed sum of terms, each an optional integer coefficient
/// followed by `*`-separated powers `x^e`. Whitespace is ignored.
pub fn parse_poly(text: &str, vars: &[String], field: PrimeField) -> Result<PolyExpr, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut parser = Parser {
        chars,
        pos: 0,
        len: text.len(),
        vars,
        field,
    };
    let mut poly = PolyExpr::zero(field, vars.len());
    let mut first = true;
    while parser.pos < parser.chars.len() {
        let mut negative = false;
        match parser.peek() {
            Some('+') => {
                parser.pos += 1;
            }
            Some('-') => {
                negative = true;
                parser.pos += 1;
            }
            Some(ch) if !first => {
                return Err(ParseError::Unexpected {
                    ch,
                    pos: parser.byte_pos(),
                })
            }
            _ => {}
        }
        first = false;
        let (c, m) = parser.term()?;
        let c = if negative { field.neg(c) } else { c };
        poly.add_term(c, m);
    }
    Ok(poly)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    vars: &'a [String],
    field: PrimeField,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map(|&(b, _)| b).unwrap_or(self.len)
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            v = v.checked_mul(10)?.checked_add(c.to_digit(10).unwrap() as u64)?;
            self.pos += 1;
        }
        (self.pos > start).then_some(v)
    }

    fn term(&mut self) -> Result<(u32, Monomial), ParseError> {
        let mut coeff = 1u32;
        let mut exps = vec![0u32; self.vars.len()];
        let mut expect_factor = true;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let at = self.byte_pos();
            let n = self.number().ok_or(ParseError::MalformedCoefficient(at))?;
            coeff = (n % self.field.p() as u64) as u32;
            match self.peek() {
                Some('*') => self.pos += 1,
                None | Some('+') | Some('-') => expect_factor = false,
                Some(ch) => {
                    return Err(ParseError::Unexpected {
                        ch,
                        pos: self.byte_pos(),
                    })
                }
            }
        }
        while expect_factor {
            let at = self.byte_pos();
            let name = self.ident().ok_or_else(|| match self.peek() {
                Some(ch) => ParseError::Unexpected { ch, pos: at },
                None => ParseError::UnexpectedEnd,
            })?;
            let idx = self
                .vars
                .iter()
                .position(|v| *v == name)
                .ok_or(ParseError::UnknownVariable(name))?;
            let mut e = 1u32;
            if self.peek() == Some('^') {
                self.pos += 1;
                let at = self.byte_pos();
                let n = self.number().ok_or(ParseError::MalformedExponent(at))?;
                e = u32::try_from(n).map_err(|_| ParseError::MalformedExponent(at))?;
            }
            exps[idx] += e;
            match self.peek() {
                Some('*') => self.pos += 1,
                None | Some('+') | Some('-') => expect_factor = false,
                Some(ch) => {
                    return Err(ParseError::Unexpected {
                        ch,
                        pos: self.byte_pos(),
                    })
                }
            }
        }
        Ok((coeff, exps))
    }

    fn ident(&mut self) -> Option<String> {
        let first = self.peek().filter(|c| c.is_ascii_alphabetic() || *c == '_')?;
        let mut s = String::from(first);
        self.pos += 1;
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
            s.push(c);
            self.pos += 1;
        }
        Some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_power() {
        let f = PrimeField::new(2).unwrap();
        let p = parse_poly("x^2", &vars(&["x", "y"]), f).unwrap();
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![(1, &vec![2, 0])]);
    }

    #[test]
    fn characteristic_two_cancellation() {
        let f = PrimeField::new(2).unwrap();
        let p = parse_poly("x*y + y*x", &vars(&["x", "y"]), f).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn coefficients_over_f3() {
        let f = PrimeField::new(3).unwrap();
        let p = parse_poly("2*x^2 + y", &vars(&["x", "y"]), f).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&[2, 0]), 2);
        assert_eq!(p.coeff(&[0, 1]), 1);
        let q = parse_poly("x^2 - y^2", &vars(&["x", "y"]), f).unwrap();
        assert_eq!(q.coeff(&[0, 2]), 2);
        let r = parse_poly(" 4 * x ^ 2 ", &vars(&["x", "y"]), f).unwrap();
        assert_eq!(r.coeff(&[2, 0]), 1);
    }

    #[test]
    fn errors() {
        let f = PrimeField::new(2).unwrap();
        let v = vars(&["x", "y"]);
        assert_eq!(parse_poly("", &v, f), Err(ParseError::Empty));
        assert_eq!(parse_poly("   ", &v, f), Err(ParseError::Empty));
        assert!(matches!(parse_poly("x^", &v, f), Err(ParseError::MalformedExponent(_))));
        assert!(matches!(
            parse_poly("x^y", &v, f),
            Err(ParseError::MalformedExponent(_))
        ));
        assert_eq!(parse_poly("z", &v, f), Err(ParseError::UnknownVariable("z".into())));
        assert!(parse_poly("x*", &v, f).is_err());
        assert!(parse_poly("x y", &v, f).is_err());
        assert!(parse_poly("x + + y", &v, f).is_err());
    }

    #[test]
    fn degrevlex_order() {
        use std::cmp::Ordering::*;
        assert_eq!(degrevlex(&[2, 0], &[0, 2]), Greater);
        assert_eq!(degrevlex(&[1, 1], &[0, 2]), Greater);
        assert_eq!(degrevlex(&[2, 0], &[1, 1]), Greater);
        assert_eq!(degrevlex(&[0, 3], &[2, 0]), Greater);
        assert_eq!(degrevlex(&[1, 0, 1], &[0, 2, 0]), Less);
    }
}
