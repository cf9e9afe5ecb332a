use std::fmt;
use std::ops::Mul;

/// Integer polynomial in `t`, constant term first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct IntegerPolynomial {
    coefficients: Vec<i64>,
}

impl IntegerPolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    /// `∏ (t − r)`.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots
            .iter()
            .fold(Self::new(vec![1]), |p, &r| &p * &Self::new(vec![-r, 1]))
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Coefficient of `t^k`.
    pub fn coefficient(&self, k: usize) -> i64 {
        self.coefficients.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coefficients.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, other: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntegerPolynomial::default();
        }
        let mut c = vec![0i64; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in other.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(c)
    }
}

/// Expanded form, highest power first: `t^3-5t^2+7t-3`.
impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let a = c.unsigned_abs();
            if a != 1 || e == 0 {
                write!(f, "{a}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Product form of `∏ (t − r)`, roots ascending: `t*(t-1)^2`, `(t-1)^2*(t-3)`.
pub fn format_factored(roots: &[i64]) -> String {
    let mut sorted = roots.to_vec();
    sorted.sort_unstable();
    if sorted.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let r = sorted[i];
        let k = sorted[i..].iter().take_while(|&&s| s == r).count();
        let base = match r {
            0 => "t".to_string(),
            r if r > 0 => format!("(t-{r})"),
            r => format!("(t+{})", -r),
        };
        parts.push(if k > 1 { format!("{base}^{k}") } else { base });
        i += k;
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expanded_display() {
        let p = IntegerPolynomial::from_roots(&[1, 1, 3]);
        assert_eq!(p.coefficients(), &[-3, 7, -5, 1]);
        assert_eq!(p.to_string(), "t^3-5t^2+7t-3");
        assert_eq!(IntegerPolynomial::new(vec![0, -1, 0]).to_string(), "-t");
        assert_eq!(IntegerPolynomial::new(vec![1]).to_string(), "1");
        assert_eq!(IntegerPolynomial::new(vec![0, 0]).to_string(), "0");
        assert_eq!(IntegerPolynomial::new(vec![2, 0, -1]).to_string(), "-t^2+2");
    }

    #[test]
    fn factored_display() {
        assert_eq!(format_factored(&[3, 1, 1]), "(t-1)^2*(t-3)");
        assert_eq!(format_factored(&[1, 0, 1]), "t*(t-1)^2");
        assert_eq!(format_factored(&[0, 0, 0, 1]), "t^3*(t-1)");
        assert_eq!(format_factored(&[-2]), "(t+2)");
        assert_eq!(format_factored(&[]), "1");
    }

    #[test]
    fn eval_and_degree() {
        let p = IntegerPolynomial::from_roots(&[0, 1, 1]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.eval(2), 2);
        assert_eq!(p.eval(1), 0);
        assert_eq!(IntegerPolynomial::default().degree(), None);
    }
}
