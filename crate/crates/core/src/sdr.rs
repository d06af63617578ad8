//! Systems of distinct `t`-representatives.
//!
//! Each set is replicated `t` times and a maximum bipartite matching between
//! copies and elements is found by augmenting paths. A perfect matching of
//! the copies is an SDR^t; otherwise the copies reachable by alternating paths
//! from an unmatched copy give a subfamily violating the counting condition.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{line_graph, Graph, GraphError};

/// Sets `F_1..F_n` over the ground set `0..ground`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: usize,
    sets: Vec<Vec<usize>>,
}

impl SetFamily {
    /// Builds a family; elements are sorted and deduplicated and the ground
    /// set is taken as `0..=max element`.
    pub fn new(sets: Vec<Vec<usize>>) -> Self {
        let sets: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let ground = sets.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
        SetFamily { ground, sets }
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// Sorted union of the sets with the given indices.
    pub fn union_of(&self, idx: &[usize]) -> Vec<usize> {
        let mut u: Vec<usize> = idx.iter().flat_map(|&i| self.sets[i].iter().copied()).collect();
        u.sort_unstable();
        u.dedup();
        u
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sdr {
    /// `reps[i]` holds the `t` representatives of set `i`, in increasing order.
    Witness(Vec<Vec<usize>>),
    /// A subfamily (set indices, increasing) whose union has fewer than
    /// `t` times as many elements as it has sets.
    Deficient { subfamily: Vec<usize>, union: Vec<usize> },
}

impl Sdr {
    pub fn exists(&self) -> bool {
        matches!(self, Sdr::Witness(_))
    }
}

/// Decides whether `family` has an SDR^t and returns a witness or a
/// deficient subfamily.
pub fn sdr_t(family: &SetFamily, t: usize) -> Sdr {
    let copies = family.len() * t;
    let set_of = |c: usize| c / t.max(1);
    let mut elem_match: Vec<Option<usize>> = vec![None; family.ground];
    let mut copy_match: Vec<Option<usize>> = vec![None; copies];
    for c in 0..copies {
        let mut seen = vec![false; family.ground];
        augment(family, t, c, &mut seen, &mut elem_match, &mut copy_match);
    }
    if let Some(free) = copy_match.iter().position(Option::is_none) {
        // Alternating search from the first unmatched copy.
        let mut reached_copy = vec![false; copies];
        let mut reached_elem = vec![false; family.ground];
        let mut stack = vec![free];
        reached_copy[free] = true;
        while let Some(c) = stack.pop() {
            for &x in &family.sets[set_of(c)] {
                if !reached_elem[x] {
                    reached_elem[x] = true;
                    let partner = elem_match[x].expect("maximum matching has no augmenting path");
                    if !reached_copy[partner] {
                        reached_copy[partner] = true;
                        stack.push(partner);
                    }
                }
            }
        }
        let mut subfamily: Vec<usize> = (0..copies).filter(|&c| reached_copy[c]).map(set_of).collect();
        subfamily.dedup();
        let union = family.union_of(&subfamily);
        return Sdr::Deficient { subfamily, union };
    }
    let mut reps = vec![Vec::with_capacity(t); family.len()];
    for (c, m) in copy_match.iter().enumerate() {
        reps[set_of(c)].push(m.expect("all copies matched"));
    }
    for r in &mut reps {
        r.sort_unstable();
    }
    Sdr::Witness(reps)
}

fn augment(
    family: &SetFamily,
    t: usize,
    c: usize,
    seen: &mut [bool],
    elem_match: &mut [Option<usize>],
    copy_match: &mut [Option<usize>],
) -> bool {
    for &x in &family.sets[c / t] {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        let free = match elem_match[x] {
            None => true,
            Some(other) => augment(family, t, other, seen, elem_match, copy_match),
        };
        if free {
            elem_match[x] = Some(c);
            copy_match[c] = Some(x);
            return true;
        }
    }
    false
}

/// Checks a witness: `t` representatives per set, each in its set, all
/// distinct.
pub fn is_valid_witness(family: &SetFamily, t: usize, reps: &[Vec<usize>]) -> bool {
    if reps.len() != family.len() {
        return false;
    }
    let mut all: Vec<usize> = Vec::new();
    for (set, r) in family.sets.iter().zip(reps) {
        if r.len() != t || r.iter().any(|x| set.binary_search(x).is_err()) {
            return false;
        }
        all.extend_from_slice(r);
    }
    let total = all.len();
    all.sort_unstable();
    all.dedup();
    all.len() == total
}

/// Checks a deficiency certificate against the counting condition.
pub fn is_valid_deficiency(family: &SetFamily, t: usize, subfamily: &[usize]) -> bool {
    !subfamily.is_empty()
        && subfamily.iter().all(|&i| i < family.len())
        && family.union_of(subfamily).len() < t * subfamily.len()
}

/// The clique family of `L(H)`: for every non-isolated vertex `u` of `H`, the
/// set of line-graph vertices (edge ids of `H`) incident to `u`. Also returns
/// the `H` vertex owning each set.
pub fn clique_family(h: &Graph) -> Result<(SetFamily, Vec<usize>), GraphError> {
    let (_, edges) = line_graph(h)?;
    let mut sets = Vec::new();
    let mut owners = Vec::new();
    for u in 0..h.n() {
        let set: Vec<usize> =
            edges.iter().enumerate().filter(|(_, &(a, b))| a == u || b == u).map(|(i, _)| i).collect();
        if !set.is_empty() {
            sets.push(set);
            owners.push(u);
        }
    }
    Ok((SetFamily::new(sets), owners))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    /// Exhaustive assignment search: pick `t` distinct unused elements for
    /// each set in turn.
    fn brute(family: &SetFamily, t: usize) -> bool {
        fn rec(sets: &[Vec<usize>], t: usize, i: usize, used: &mut Vec<bool>) -> bool {
            if i == sets.len() {
                return true;
            }
            let free: Vec<usize> = sets[i].iter().copied().filter(|&x| !used[x]).collect();
            let mut pick = Vec::new();
            choose(sets, t, i, used, &free, 0, &mut pick)
        }
        fn choose(
            sets: &[Vec<usize>],
            t: usize,
            i: usize,
            used: &mut Vec<bool>,
            free: &[usize],
            from: usize,
            pick: &mut Vec<usize>,
        ) -> bool {
            if pick.len() == t {
                for &x in pick.iter() {
                    used[x] = true;
                }
                let ok = rec(sets, t, i + 1, used);
                for &x in pick.iter() {
                    used[x] = false;
                }
                return ok;
            }
            for j in from..free.len() {
                pick.push(free[j]);
                let ok = choose(sets, t, i, used, free, j + 1, pick);
                pick.pop();
                if ok {
                    return true;
                }
            }
            false
        }
        let mut used = vec![false; family.ground()];
        rec(family.sets(), t, 0, &mut used)
    }

    #[test]
    fn small_families() {
        let f = SetFamily::new(vec![vec![1, 2], vec![2, 3], vec![1, 3]]);
        match sdr_t(&f, 1) {
            Sdr::Witness(r) => assert!(is_valid_witness(&f, 1, &r)),
            other => panic!("{other:?}"),
        }
        let f = SetFamily::new(vec![vec![1], vec![1]]);
        assert_eq!(sdr_t(&f, 1), Sdr::Deficient { subfamily: vec![0, 1], union: vec![1] });
        let f = SetFamily::new(vec![vec![0, 1, 2, 3]]);
        assert!(sdr_t(&f, 2).exists());
        assert!(!sdr_t(&f, 5).exists());
    }

    #[test]
    fn pseudo_random_families_match_brute_force() {
        let mut seed = 0x2545_f491_4f6c_dd1du64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..2000 {
            let n = (next() % 6 + 1) as usize;
            let sets: Vec<Vec<usize>> = (0..n)
                .map(|_| {
                    let mask = next() % 1024;
                    (0..10).filter(|b| mask >> b & 1 == 1).collect()
                })
                .collect();
            let f = SetFamily::new(sets);
            for t in 1..=2 {
                let r = sdr_t(&f, t);
                assert_eq!(r.exists(), brute(&f, t), "{f:?} t={t}");
                match r {
                    Sdr::Witness(reps) => assert!(is_valid_witness(&f, t, &reps)),
                    Sdr::Deficient { subfamily, .. } => assert!(is_valid_deficiency(&f, t, &subfamily)),
                }
            }
        }
    }

    #[test]
    fn clique_families() {
        let (f, owners) = clique_family(&complete(3).unwrap()).unwrap();
        assert_eq!(owners, [0, 1, 2]);
        assert!(f.sets().iter().all(|s| s.len() == 2));
        let (f, _) = clique_family(&star(3).unwrap()).unwrap();
        let mut sizes: Vec<usize> = f.sets().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, [1, 1, 1, 3]);
        let (f, _) = clique_family(&complete(5).unwrap()).unwrap();
        assert!(sdr_t(&f, 2).exists());
    }
}
