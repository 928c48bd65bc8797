//! Ultimately periodic models and formula evaluation over them.

use std::collections::BTreeSet;
use std::fmt;

use super::{Formula, PropSymbol};

/// The set of symbols true in a state; every other symbol is false.
pub type Valuation = BTreeSet<PropSymbol>;

/// The state sequence `prefix · loop · loop · …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoModel {
    pub prefix: Vec<Valuation>,
    pub loop_: Vec<Valuation>,
}

impl LassoModel {
    /// Panics if `loop_` is empty.
    pub fn new(prefix: Vec<Valuation>, loop_: Vec<Valuation>) -> Self {
        assert!(!loop_.is_empty(), "a lasso needs a nonempty loop");
        LassoModel { prefix, loop_ }
    }

    /// The state at absolute index `i`.
    pub fn state(&self, i: usize) -> &Valuation {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.loop_[(i - self.prefix.len()) % self.loop_.len()]
        }
    }

    /// Number of states that must be inspected from any index to see
    /// every distinct future.
    pub fn horizon(&self) -> usize {
        self.prefix.len() + 2 * self.loop_.len()
    }

    /// An equivalent lasso whose prefix is nonempty, so that position 0 is
    /// never revisited.
    fn anchored(&self) -> LassoModel {
        if !self.prefix.is_empty() {
            return self.clone();
        }
        let mut loop_ = self.loop_.clone();
        loop_.rotate_left(1);
        LassoModel {
            prefix: vec![self.loop_[0].clone()],
            loop_,
        }
    }
}

impl fmt::Display for LassoModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn states(f: &mut fmt::Formatter<'_>, vs: &[Valuation]) -> fmt::Result {
            f.write_str("[")?;
            for (i, v) in vs.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                f.write_str("{")?;
                for (j, p) in v.iter().enumerate() {
                    if j > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str("}")?;
            }
            f.write_str("]")
        }
        f.write_str("prefix: ")?;
        states(f, &self.prefix)?;
        f.write_str("\nloop:   ")?;
        states(f, &self.loop_)
    }
}

/// Truth of `f` at each position of an anchored lasso. Position `j`'s
/// successor is `j + 1`, wrapping from the last position to the first loop
/// position.
struct Table<'m> {
    model: &'m LassoModel,
    n: usize,
    window: usize,
}

impl Table<'_> {
    fn succ(&self, j: usize) -> usize {
        if j + 1 < self.n {
            j + 1
        } else {
            self.model.prefix.len()
        }
    }

    fn eval(&self, f: &Formula) -> Vec<bool> {
        let n = self.n;
        match f {
            Formula::True => vec![true; n],
            Formula::False => vec![false; n],
            Formula::Start => (0..n).map(|j| j == 0).collect(),
            Formula::Prop(p) => (0..n).map(|j| self.model.state(j).contains(p)).collect(),
            Formula::Not(a) => self.eval(a).into_iter().map(|x| !x).collect(),
            Formula::And(a, b) => zip(self.eval(a), self.eval(b), |x, y| x && y),
            Formula::Or(a, b) => zip(self.eval(a), self.eval(b), |x, y| x || y),
            Formula::Implies(a, b) => zip(self.eval(a), self.eval(b), |x, y| !x || y),
            Formula::Next(a) => {
                let a = self.eval(a);
                (0..n).map(|j| a[self.succ(j)]).collect()
            }
            Formula::Sometime(a) => {
                let a = self.eval(a);
                let all = vec![true; n];
                (0..n).map(|j| self.scan(j, &all, &a, false)).collect()
            }
            Formula::Always(a) => {
                let a = self.eval(a);
                let none = vec![false; n];
                (0..n).map(|j| self.scan(j, &a, &none, true)).collect()
            }
            Formula::Until(a, b) => {
                let (a, b) = (self.eval(a), self.eval(b));
                (0..n).map(|j| self.scan(j, &a, &b, false)).collect()
            }
            Formula::Unless(a, b) => {
                let (a, b) = (self.eval(a), self.eval(b));
                (0..n).map(|j| self.scan(j, &a, &b, true)).collect()
            }
        }
    }

    /// Walks forward from `j`: true at the first position satisfying
    /// `goal`, false at the first one violating `hold`, `otherwise` if
    /// neither happens within the window.
    fn scan(&self, j: usize, hold: &[bool], goal: &[bool], otherwise: bool) -> bool {
        let mut k = j;
        for _ in 0..self.window {
            if goal[k] {
                return true;
            }
            if !hold[k] {
                return false;
            }
            k = self.succ(k);
        }
        otherwise
    }
}

fn zip(a: Vec<bool>, b: Vec<bool>, op: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

/// Whether `f` holds at state `i` of `m`. `Start` holds only at state 0.
pub fn evaluate(m: &LassoModel, i: usize, f: &Formula) -> bool {
    let model = m.anchored();
    let p = model.prefix.len();
    let l = model.loop_.len();
    let table = Table {
        model: &model,
        n: p + l,
        window: model.horizon(),
    };
    // `anchored` may have shifted one state from the loop into the
    // prefix; absolute indices are unaffected.
    let pos = if i < p { i } else { p + (i - p) % l };
    table.eval(f)[pos]
}
