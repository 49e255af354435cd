//! Finite Łukasiewicz chains `{0, 1/(n-1), …, 1}` over any numeric scalar.

use num_rational::Rational64;
use num_traits::{FromPrimitive, Num, Signed};

use super::DetMatrix;
use crate::values::TruthValue;

/// The chain `k/(n-1)` for `k = 0 … n-1`, designating every value at or above
/// the one with index `first_designated`.
#[derive(Clone, Debug, PartialEq)]
pub struct LukChain<S> {
    values: Vec<S>,
    threshold: S,
}

pub type RationalChain = LukChain<Rational64>;
pub type FloatChain = LukChain<f64>;

impl<S> LukChain<S>
where
    S: Clone + PartialOrd + Num + Signed + FromPrimitive,
{
    pub fn new(n: usize, first_designated: usize) -> LukChain<S> {
        assert!(n >= 2 && first_designated < n, "a chain needs two values and a designated top");
        let den = S::from_usize(n - 1).expect("chain length fits the scalar");
        let values: Vec<S> = (0..n)
            .map(|k| S::from_usize(k).expect("index fits the scalar") / den.clone())
            .collect();
        LukChain {
            threshold: values[first_designated].clone(),
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, k: usize) -> S {
        self.values[k].clone()
    }

    /// Index of the chain element nearest to `x`. Exact for rationals; for
    /// floats it absorbs rounding such as `1 - 2/3 ≠ 1/3`.
    pub fn index_of(&self, x: &S) -> usize {
        let mut best = 0;
        for k in 1..self.values.len() {
            if (self.values[k].clone() - x.clone()).abs() < (self.values[best].clone() - x.clone()).abs() {
                best = k;
            }
        }
        best
    }

    pub fn designated(&self, x: &S) -> bool {
        *x >= self.threshold
    }

    pub fn neg(&self, x: &S) -> S {
        S::one() - x.clone()
    }

    pub fn or(&self, x: &S, y: &S) -> S {
        if x >= y {
            x.clone()
        } else {
            y.clone()
        }
    }

    pub fn and(&self, x: &S, y: &S) -> S {
        if x <= y {
            x.clone()
        } else {
            y.clone()
        }
    }

    /// The residuated implication `min(1, 1 - x + y)`.
    pub fn residuum(&self, x: &S, y: &S) -> S {
        let r = S::one() - x.clone() + y.clone();
        if r > S::one() {
            S::one()
        } else {
            r
        }
    }

    /// `¬x ∨ y`, the implication definable in the `{¬, ∨}` fragment.
    pub fn material(&self, x: &S, y: &S) -> S {
        self.or(&self.neg(x), y)
    }

    /// `1` on `1`, else `0`.
    pub fn delta(&self, x: &S) -> S {
        if x.is_one() {
            S::one()
        } else {
            S::zero()
        }
    }

    /// `0` on `0`, else `1`.
    pub fn nabla(&self, x: &S) -> S {
        if x.is_zero() {
            S::zero()
        } else {
            S::one()
        }
    }

    /// The deterministic matrix with `¬`, material `→`, `□ = Δ` and `◇ = ∇`,
    /// values numbered by their index in the chain.
    pub fn det_matrix(&self) -> DetMatrix {
        let n = self.len();
        let idx = |x: S| self.index_of(&x);
        let v = |k: usize| self.value(k);
        DetMatrix {
            size: n,
            designated: (0..n).map(|k| self.designated(&v(k))).collect(),
            neg: (0..n).map(|k| idx(self.neg(&v(k)))).collect(),
            imp: (0..n * n).map(|c| idx(self.material(&v(c / n), &v(c % n)))).collect(),
            boxt: (0..n).map(|k| idx(self.delta(&v(k)))).collect(),
            dia: (0..n).map(|k| idx(self.nabla(&v(k)))).collect(),
        }
    }
}

/// The four-element chain with `{2/3, 1}` designated, as a matrix.
pub fn t45md_matrix() -> DetMatrix {
    RationalChain::new(4, 2).det_matrix()
}

/// Reading of chain index `k` (value `k/3`) as a truth-value:
/// `0 ↦ F−`, `1/3 ↦ C−`, `2/3 ↦ C+`, `1 ↦ T+`.
pub fn t45md_value(k: usize) -> TruthValue {
    [TruthValue::FMinus, TruthValue::CMinus, TruthValue::CPlus, TruthValue::TPlus][k]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nmatrix::{builtin, SystemId};
    use crate::syntax::Connective;
    use crate::values::ValueSet;

    #[test]
    fn chain_arithmetic() {
        let c = RationalChain::new(4, 2);
        let third = Rational64::new(1, 3);
        assert_eq!(c.neg(&third), Rational64::new(2, 3));
        assert_eq!(c.residuum(&Rational64::new(2, 3), &third), Rational64::new(2, 3));
        assert_eq!(c.material(&Rational64::new(2, 3), &third), third);
        assert!(c.designated(&Rational64::new(2, 3)) && !c.designated(&third));
    }

    #[test]
    fn float_chain_gives_the_same_matrix() {
        let f = FloatChain::new(4, 2);
        assert_ne!(f.neg(&f.value(2)), f.value(1));
        assert_eq!(f.det_matrix(), t45md_matrix());
    }

    #[test]
    fn reads_back_as_the_t45md_tables() {
        let nm = builtin(SystemId::T45md);
        let m = t45md_matrix();
        for x in 0..4 {
            let tx = t45md_value(x);
            assert_eq!(m.designated[x], nm.is_designated(tx));
            assert_eq!(nm.table(Connective::Neg).unary(tx), ValueSet::singleton(t45md_value(m.neg[x])));
            assert_eq!(nm.table(Connective::Box).unary(tx), ValueSet::singleton(t45md_value(m.boxt[x])));
            assert_eq!(nm.table(Connective::Dia).unary(tx), ValueSet::singleton(t45md_value(m.dia[x])));
            for y in 0..4 {
                let cell = nm.table(Connective::Imp).binary(tx, t45md_value(y));
                assert_eq!(cell, ValueSet::singleton(t45md_value(m.imp(x, y))));
            }
        }
    }
}
