use super::Permutation;

/// Which side the `S_A` factor sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitSide {
    /// `p = tau1 ∘ tau2 ∘ tau3`.
    Right,
    /// `p = tau3 ∘ tau2 ∘ tau1`.
    Left,
}

/// Factorization of a permutation relative to a bipartition `A ∪ B`.
///
/// `tau2` consists of the cycles of `p` inside `B` and `tau3` lies in `S_A`.
/// Every nontrivial cycle of `tau1` meets `A` exactly once. `a` is zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSplit {
    pub tau1: Permutation,
    pub tau2: Permutation,
    pub tau3: Permutation,
    pub a: Vec<usize>,
    pub side: SplitSide,
}

impl CycleSplit {
    pub fn recompose(&self) -> Permutation {
        match self.side {
            SplitSide::Right => &(&self.tau1 * &self.tau2) * &self.tau3,
            SplitSide::Left => &(&self.tau3 * &self.tau2) * &self.tau1,
        }
    }

    /// The factors in product order, as cycle notation joined by `" | "`.
    pub fn display_factors(&self) -> String {
        let parts = match self.side {
            SplitSide::Right => [&self.tau1, &self.tau2, &self.tau3],
            SplitSide::Left => [&self.tau3, &self.tau2, &self.tau1],
        };
        parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

fn membership(m: usize, a: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; m];
    for &i in a {
        mask[i] = true;
    }
    mask
}

/// Splits `p` as `tau1 ∘ tau2 ∘ tau3`; points of `a` outside `0..m` are ignored.
pub fn split_cycles(p: &Permutation, a: &[usize]) -> CycleSplit {
    let m = p.degree();
    let mut a: Vec<usize> = a.iter().copied().filter(|&i| i < m).collect();
    a.sort_unstable();
    a.dedup();
    let in_a = membership(m, &a);

    // tau3 sends each A-point to the next A-point met along its p-cycle.
    let mut t3: Vec<usize> = (0..m).collect();
    for &x in &a {
        let mut y = p.apply(x);
        while !in_a[y] {
            y = p.apply(y);
        }
        t3[x] = y;
    }
    let tau3 = Permutation::from_images(t3).expect("next-A map is a bijection of A");

    let mut t2: Vec<usize> = (0..m).collect();
    for c in p.cycles() {
        if c.iter().all(|&i| !in_a[i]) {
            for &i in &c {
                t2[i] = p.apply(i);
            }
        }
    }
    let tau2 = Permutation::from_images(t2).expect("union of cycles of p");

    let tau1 = &(p * &tau3.inverse()) * &tau2.inverse();
    CycleSplit {
        tau1,
        tau2,
        tau3,
        a,
        side: SplitSide::Right,
    }
}

/// Splits `p` as `tau3 ∘ tau2 ∘ tau1` with the `S_A` factor on the left.
pub fn split_cycle_left(p: &Permutation, a: &[usize]) -> CycleSplit {
    let right = split_cycles(p, a);
    let tau1 = right.tau1.conjugate_by(&right.tau3.inverse());
    CycleSplit {
        tau1,
        side: SplitSide::Left,
        ..right
    }
}

/// True iff every cycle of `p` contains at most one point of `a`.
pub fn in_u(p: &Permutation, a: &[usize]) -> bool {
    let in_a = membership(p.degree(), &a.iter().copied().filter(|&i| i < p.degree()).collect::<Vec<_>>());
    p.cycles()
        .iter()
        .all(|c| c.iter().filter(|&&i| in_a[i]).count() <= 1)
}
