use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stratified fold assignment. Each class is shuffled and dealt round-robin,
/// continuing the deal across classes so overall fold sizes stay balanced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldPlan {
    k: usize,
    assignment: Vec<usize>,
}

impl FoldPlan {
    pub fn stratified(labels: &[usize], class_count: usize, k: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut assignment = vec![0; labels.len()];
        let mut slot = 0;
        for class in 0..class_count {
            let mut members: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == class).collect();
            members.shuffle(&mut rng);
            for i in members {
                assignment[i] = slot % k;
                slot += 1;
            }
        }
        FoldPlan { k, assignment }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// `(train, test)` row indices for one fold.
    pub fn split(&self, fold: usize) -> (Vec<usize>, Vec<usize>) {
        (0..self.assignment.len()).partition(|&i| self.assignment[i] != fold)
    }
}
