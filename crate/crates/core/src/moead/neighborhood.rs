use alloc::vec::Vec;

use super::WeightSet;

/// For each sub-problem, the `T` sub-problems with the closest weight
/// vectors (Euclidean), nearest first. Ties are broken by index, so the
/// sub-problem itself always comes first.
#[derive(Clone, Debug, PartialEq)]
pub struct NeighborhoodTable {
    lists: Vec<Vec<usize>>,
}

impl NeighborhoodTable {
    pub fn new(weights: &WeightSet, size: usize) -> Self {
        let w = weights.vectors();
        let lists = w
            .iter()
            .map(|wi| {
                let mut order: Vec<(f64, usize)> = w
                    .iter()
                    .enumerate()
                    .map(|(j, wj)| (squared_distance(wi, wj), j))
                    .collect();
                order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
                order.into_iter().take(size).map(|(_, j)| j).collect()
            })
            .collect();
        Self { lists }
    }

    pub fn size(&self) -> usize {
        self.lists.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize) -> &[usize] {
        &self.lists[i]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moead::generate_weights;

    #[test]
    fn self_first_and_sorted_by_distance() {
        for (m, mu) in [(2, 200), (3, 210), (5, 210)] {
            let w = generate_weights(m, mu).unwrap();
            let b = NeighborhoodTable::new(&w, 20);
            assert_eq!(b.len(), mu);
            for i in 0..mu {
                let list = b.get(i);
                assert_eq!(list.len(), 20);
                assert_eq!(list[0], i);
                let d: Vec<f64> = list.iter().map(|&j| squared_distance(w.get(i), w.get(j))).collect();
                assert!(d.windows(2).all(|p| p[0] <= p[1]));
                // Nothing outside the list is strictly closer than its farthest member.
                let far = d[19];
                for j in 0..mu {
                    if !list.contains(&j) {
                        assert!(squared_distance(w.get(i), w.get(j)) >= far);
                    }
                }
            }
        }
    }

    #[test]
    fn biobjective_neighbors_are_contiguous() {
        let w = generate_weights(2, 200).unwrap();
        let b = NeighborhoodTable::new(&w, 5);
        let mut l = b.get(100).to_vec();
        l.sort();
        assert_eq!(l, [98, 99, 100, 101, 102]);
        let mut l = b.get(0).to_vec();
        l.sort();
        assert_eq!(l, [0, 1, 2, 3, 4]);
    }
}
