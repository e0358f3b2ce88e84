use std::ops::AddAssign;

/// Compensated accumulator (Kahan–Babuška–Neumaier).
///
/// Partial accumulators combine with [`NeumaierSum::merge`]; the result
/// depends only on the order of merges, never on which thread produced a
/// partial.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let c = if a.abs() >= b.abs() { (a - s) + b } else { (b - s) + a };
    (s, c)
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let (s, c) = two_sum(self.sum, x);
        self.sum = s;
        self.comp += c;
    }

    pub fn merge(&mut self, other: &NeumaierSum) {
        self.add(other.sum);
        self.comp += other.comp;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        iter.into_iter().for_each(|x| acc.add(x));
        acc
    }
}

/// Merges partials left to right.
pub fn merge_in_order<'a, I>(parts: I) -> NeumaierSum
where
    I: IntoIterator<Item = &'a NeumaierSum>,
{
    let mut acc = NeumaierSum::new();
    parts.into_iter().for_each(|p| acc.merge(p));
    acc
}
