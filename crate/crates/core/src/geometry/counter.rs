use std::ops::AddAssign;

/// Tally of point reads during one hull construction.
///
/// A read is one point loaded from a point list during a scan. Testing a
/// loaded point against several lines in the same scan is still one read.
/// Sorting is charged `n * ceil(log2 n)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReadCounter {
    reads: u64,
}

impl ReadCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, n: usize) {
        self.reads += n as u64;
    }

    pub fn reads(&self) -> u64 {
        self.reads
    }

    pub fn reset(&mut self) {
        self.reads = 0;
    }

    /// Charge for sorting `n` points.
    pub fn charge_sort(&mut self, n: usize) {
        if n > 1 {
            let log = usize::BITS - (n - 1).leading_zeros();
            self.add(n * log as usize);
        }
    }
}

impl AddAssign for ReadCounter {
    fn add_assign(&mut self, rhs: Self) {
        self.reads += rhs.reads;
    }
}
