use crate::error::{input, Result};

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroupTable {
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroupTable {
    /// Validates closure, identity at index 0, inverses and associativity.
    pub fn new(mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return input("a group has at least one element");
        }
        if mult
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return input("multiplication table is not a closed square table");
        }
        for (a, row) in mult.iter().enumerate() {
            if row[0] != a || mult[0][a] != a {
                return input("element 0 is not the identity");
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for (a, row) in mult.iter().enumerate() {
            match (0..n).find(|&b| row[b] == 0 && mult[b][a] == 0) {
                Some(b) => inverse.push(b),
                None => return input(format!("element {a} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return input(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FiniteGroupTable { mult, inverse })
    }

    pub fn cyclic(m: usize) -> Self {
        let mult = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        Self::new(mult).expect("cyclic group table")
    }

    /// Direct product; the pair `(a, b)` has index `a * other.order() + b`.
    pub fn product(&self, other: &FiniteGroupTable) -> Self {
        let (n, k) = (self.order(), other.order());
        let mult = (0..n * k)
            .map(|x| {
                (0..n * k)
                    .map(|y| self.mul(x / k, y / k) * k + other.mul(x % k, y % k))
                    .collect()
            })
            .collect();
        Self::new(mult).expect("product of groups")
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn mult_table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Smallest-index element generating the whole group, if the group is cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        (0..self.order()).find(|&a| self.element_order(a) == self.order())
    }

    /// Subgroup generated by `gens`, as a membership mask.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_product() {
        let z4 = FiniteGroupTable::cyclic(4);
        assert_eq!(z4.inv(1), 3);
        assert_eq!(z4.cyclic_generator(), Some(1));
        let v4 = FiniteGroupTable::cyclic(2).product(&FiniteGroupTable::cyclic(2));
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.cyclic_generator(), None);
        assert!((1..4).all(|a| v4.element_order(a) == 2));
        assert_eq!(FiniteGroupTable::cyclic(1).cyclic_generator(), Some(0));
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroupTable::new(vec![]).is_err());
        assert!(FiniteGroupTable::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroupTable::new(vec![vec![1, 0], vec![0, 1]]).is_err());
        // a loop that is not associative
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroupTable::new(bad).is_err());
    }

    #[test]
    fn generation() {
        let z4 = FiniteGroupTable::cyclic(4);
        assert_eq!(z4.generated_by(&[2]), vec![true, false, true, false]);
        assert!(z4.generated_by(&[3]).iter().all(|&b| b));
    }
}
