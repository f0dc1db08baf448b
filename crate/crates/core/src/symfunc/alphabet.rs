use std::fmt;
use std::sync::Arc;

use crate::exact::{RatFunc, Var};

type Rule = Arc<dyn Fn(usize) -> RatFunc + Send + Sync>;

/// A virtual alphabet, given by the value of each power sum `p_n`.
#[derive(Clone)]
pub struct Alphabet {
    name: String,
    rule: Rule,
}

impl Alphabet {
    pub fn new<F>(name: impl Into<String>, rule: F) -> Alphabet
    where
        F: Fn(usize) -> RatFunc + Send + Sync + 'static,
    {
        Alphabet {
            name: name.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `p_n(A)`
    pub fn value(&self, n: usize) -> RatFunc {
        (self.rule)(n)
    }

    pub fn zero() -> Alphabet {
        Alphabet::new("0", |_| RatFunc::zero())
    }

    /// The one-letter alphabet `{1}`.
    pub fn unit() -> Alphabet {
        Alphabet::new("1", |_| RatFunc::one())
    }

    /// `{x}`: `p_n ↦ x^n`.
    pub fn singleton(x: RatFunc) -> Alphabet {
        let name = x.to_string();
        Alphabet::new(name, move |n| x.pow(n as i64))
    }

    /// Finite list of letters: `p_n ↦ Σ x_i^n`.
    pub fn letters(xs: Vec<RatFunc>) -> Alphabet {
        let name = xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        Alphabet::new(format!("{{{name}}}"), move |n| {
            RatFunc::sum(xs.iter().map(|x| x.pow(n as i64)).collect::<Vec<_>>().iter())
        })
    }

    /// `a - b`: `p_n ↦ a^n - b^n`.
    pub fn difference(a: RatFunc, b: RatFunc) -> Alphabet {
        let name = format!("{a}-{b}");
        Alphabet::new(name, move |n| a.pow(n as i64).sub(&b.pow(n as i64)))
    }

    /// `a - 1` with `a` the auxiliary variable.
    pub fn a_minus_one() -> Alphabet {
        let mut al = Alphabet::difference(RatFunc::a(), RatFunc::one());
        al.name = "a-1".into();
        al
    }

    /// The negative of the unit letter: `p_n ↦ -1`.
    pub fn minus_one() -> Alphabet {
        Alphabet::new("-1", |_| RatFunc::from_int(-1))
    }

    /// `1/(1 - v)`: `p_n ↦ 1/(1 - v^n)`.
    pub fn geometric(v: Var) -> Alphabet {
        Alphabet::new(format!("1/(1-{})", v.name()), move |n| {
            RatFunc::var(v).pow(n as i64).one_minus().inv()
        })
    }

    /// `(1 - q/t)/(1 - t)`: `p_n ↦ (1 - (q/t)^n)/(1 - t^n)`.
    pub fn principal_qt() -> Alphabet {
        Alphabet::new("(1-q/t)/(1-t)", |n| {
            let n = n as i64;
            RatFunc::monomial([n, -n, 0])
                .one_minus()
                .div(&RatFunc::t().pow(n).one_minus())
        })
    }

    pub fn neg(&self) -> Alphabet {
        let a = self.clone();
        Alphabet::new(format!("-({})", self.name), move |n| a.value(n).neg())
    }

    pub fn plus(&self, other: &Alphabet) -> Alphabet {
        let (a, b) = (self.clone(), other.clone());
        Alphabet::new(format!("{}+{}", self.name, other.name), move |n| a.value(n).add(&b.value(n)))
    }

    pub fn minus(&self, other: &Alphabet) -> Alphabet {
        self.plus(&other.neg())
    }

    /// Product alphabet: `p_n(AB) = p_n(A) p_n(B)`.
    pub fn times(&self, other: &Alphabet) -> Alphabet {
        let (a, b) = (self.clone(), other.clone());
        Alphabet::new(format!("({})({})", self.name, other.name), move |n| a.value(n).mul(&b.value(n)))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Alphabet {
        self.name = name.into();
        self
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self.name)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let q = RatFunc::q();
        assert_eq!(Alphabet::singleton(q.clone()).value(3), q.pow(3));
        let d = Alphabet::difference(RatFunc::a(), RatFunc::t());
        assert_eq!(d.value(2), "a^2 - t^2".parse().unwrap());
        assert!(Alphabet::difference(q.clone(), q.clone()).value(4).is_zero());
        let l = Alphabet::letters(vec![RatFunc::t(), RatFunc::from_int(-1)]);
        assert_eq!(l.value(2), "t^2 + 1".parse().unwrap());
        assert_eq!(l.value(3), "t^3 - 1".parse().unwrap());
        assert_eq!(Alphabet::geometric(Var::Q).value(2), "1/(1-q^2)".parse().unwrap());
    }
}
