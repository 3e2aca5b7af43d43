use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::Mul;

use super::GroupError;

pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// A bijection of `{0, …, degree-1}` stored by its images.
///
/// Products compose right to left: `(p * q)[i] = p[q[i]]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(GroupError::InvalidPermutation { images, reason: "image out of range" });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(GroupError::InvalidPermutation { images, reason: "repeated image" });
            }
        }
        Ok(Self(images))
    }

    pub fn identity(degree: usize) -> Self {
        Self((0..degree).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Self(inv)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        Permutation(rhs.0.iter().map(|&i| self.0[i]).collect())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An enumerated permutation group.
///
/// Elements are listed in breadth-first order of the Cayley graph (right
/// multiplication by generators in the given order); element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroupData {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverse: Vec<usize>,
}

pub fn enumerate_group(degree: usize, generators: &[Vec<usize>]) -> Result<FiniteGroupData, GroupError> {
    enumerate_group_with_cap(degree, generators, DEFAULT_ORDER_CAP)
}

pub fn enumerate_group_with_cap(
    degree: usize,
    generators: &[Vec<usize>],
    cap: usize,
) -> Result<FiniteGroupData, GroupError> {
    let mut gens = Vec::with_capacity(generators.len());
    for g in generators {
        if g.len() != degree {
            return Err(GroupError::InvalidPermutation { images: g.clone(), reason: "wrong degree" });
        }
        gens.push(Permutation::new(g.clone())?);
    }

    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in &gens {
            let p = &elements[k] * g;
            if !index.contains_key(&p) {
                if elements.len() == cap {
                    return Err(GroupError::OrderCapExceeded { cap });
                }
                index.insert(p.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
    Ok(FiniteGroupData { degree, generators: gens, elements, index, inverse })
}

impl FiniteGroupData {
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }
    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&(&self.elements[a] * &self.elements[b])]
    }

    /// Full multiplication table, `table[a][b] = mul(a, b)`. Quadratic in `|G|`.
    pub fn mult_table(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|a| (0..self.order()).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Subgroup of elements commuting with `g`, re-enumerated from its own elements.
    pub fn centralizer(&self, g: usize) -> (FiniteGroupData, Vec<usize>) {
        let members: Vec<usize> =
            (0..self.order()).filter(|&h| self.mul(g, h) == self.mul(h, g)).collect();
        let gens: Vec<Vec<usize>> = members[1..].iter().map(|&h| self.elements[h].0.clone()).collect();
        let sub = enumerate_group(self.degree, &gens).expect("subgroup of a valid group");
        let embed = sub.elements.iter().map(|p| self.index[p]).collect();
        (sub, embed)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| (a * b) == (b * a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(enumerate_group(3, &[vec![1, 0]]).is_err());
    }

    #[test]
    fn trivial_and_small_orders() {
        assert_eq!(enumerate_group(1, &[]).unwrap().order(), 1);
        assert_eq!(enumerate_group(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap().order(), 6);
        assert_eq!(enumerate_group(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]]).unwrap().order(), 24);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_group_with_cap(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]], 10).unwrap_err();
        assert_eq!(err, GroupError::OrderCapExceeded { cap: 10 });
    }

    #[test]
    fn product_convention() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        let q = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!((&p * &q).images(), &[2, 1, 0]);
        assert!((&p * &p.inverse()).is_identity());
    }

    #[test]
    fn centralizer_of_transposition_in_s3() {
        let g = enumerate_group(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let t = g.index_of(&Permutation::new(vec![1, 0, 2]).unwrap()).unwrap();
        let (c, embed) = g.centralizer(t);
        assert_eq!(c.order(), 2);
        assert!(embed.contains(&t));
    }
}
