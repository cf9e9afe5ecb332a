use super::FiniteLattice;

impl FiniteLattice {
    /// Rank of every element when all maximal chains of every lower interval
    /// `[0̂, x]` have the same length; `None` otherwise.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        let n = self.size();
        let mut shortest = vec![usize::MAX; n];
        let mut longest = vec![0usize; n];
        shortest[self.bottom()] = 0;
        for &x in self.linear_extension() {
            if x == self.bottom() {
                continue;
            }
            for &y in self.lower_covers(x) {
                shortest[x] = shortest[x].min(shortest[y] + 1);
                longest[x] = longest[x].max(longest[y] + 1);
            }
            if shortest[x] != longest[x] {
                return None;
            }
        }
        Some(longest)
    }

    pub fn is_ranked(&self) -> bool {
        self.rank_function().is_some()
    }

    /// Upper semimodularity via the covering law: if `x` and `y` both cover
    /// `x ∧ y` then `x ∨ y` covers both.
    pub fn is_semimodular(&self) -> bool {
        self.semimodularity_witness().is_none()
    }

    /// A pair violating the covering law, if any.
    pub fn semimodularity_witness(&self) -> Option<(usize, usize)> {
        for z in 0..self.size() {
            let cov = self.upper_covers(z);
            for (i, &x) in cov.iter().enumerate() {
                for &y in &cov[i + 1..] {
                    let j = self.join(x, y);
                    if !self.covers(x, j) || !self.covers(y, j) {
                        return Some((x, y));
                    }
                }
            }
        }
        None
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomic(&self) -> bool {
        (0..self.size()).all(|x| {
            self.join_set(self.atoms().iter().copied().filter(|&a| self.leq(a, x))) == x
        })
    }

    pub fn is_geometric(&self) -> bool {
        self.is_ranked() && self.is_atomic() && self.is_semimodular()
    }

    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
    pub fn is_distributive(&self) -> bool {
        let all: Vec<usize> = (0..self.size()).collect();
        self.is_distributive_on(&all)
    }

    /// Distributive law restricted to triples from `elems`.
    pub fn is_distributive_on(&self, elems: &[usize]) -> bool {
        elems.iter().all(|&x| {
            elems.iter().all(|&y| {
                elems.iter().all(|&z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }
}
