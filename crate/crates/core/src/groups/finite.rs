//! Finite groups as multiplication tables.
//!
//! Elements are indices `0..order`, index 0 is the identity, and the
//! canonical order is breadth-first discovery order from the identity over
//! the signed generator letters in alphabet order.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::word::Letter;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    labels: Vec<String>,
}

/// Products use the left-to-right convention: `(a·b)(i) = b(a(i))`.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&i| b[i]).collect()
}

fn invert_perm(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.join(","));
        out.push(')');
    }
    if out.is_empty() { "()".into() } else { out }
}

/// Breadth-first closure from `identity` under right multiplication by the
/// letters in order. Returns discovered items in discovery order.
fn bfs_closure<T, F>(identity: T, letters: &[T], mul: F, limit: usize) -> Result<Vec<T>>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T, &T) -> T,
{
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut order = vec![identity.clone()];
    index.insert(identity, 0);
    let mut head = 0;
    while head < order.len() {
        let current = order[head].clone();
        head += 1;
        for x in letters {
            let next = mul(&current, x);
            if !index.contains_key(&next) {
                if order.len() >= limit {
                    return Err(Error::GroupDefinition(format!(
                        "group has more than {limit} elements"
                    )));
                }
                index.insert(next.clone(), order.len());
                order.push(next);
            }
        }
    }
    Ok(order)
}

pub const MAX_ORDER: usize = 5040;

impl FiniteGroup {
    /// Permutation group from one-line images, 1-based (`[2, 1, 3]` is the
    /// transposition of 1 and 2).
    pub fn from_permutations(images: &[Vec<usize>]) -> Result<Self> {
        let degree = images.iter().map(Vec::len).max().unwrap_or(0);
        let mut gens = Vec::with_capacity(images.len());
        for img in images {
            let mut p: Vec<usize> = (0..degree).collect();
            let mut seen = vec![false; degree];
            for (i, &j) in img.iter().enumerate() {
                if j == 0 || j > img.len() || seen[j - 1] {
                    return Err(Error::GroupDefinition(format!(
                        "{img:?} is not a permutation in one-line notation"
                    )));
                }
                seen[j - 1] = true;
                p[i] = j - 1;
            }
            gens.push(p);
        }
        let letters: Vec<Vec<usize>> =
            gens.iter().flat_map(|g| [g.clone(), invert_perm(g)]).collect();
        let identity: Vec<usize> = (0..degree).collect();
        let elements = bfs_closure(identity, &letters, |a, b| compose(a, b), MAX_ORDER)?;
        let index: HashMap<&Vec<usize>, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * n + j] = index[&compose(a, b)] as u32;
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(Self::assemble(table, n, generators, labels))
    }

    /// Group from a Cayley table (`table[a][b] = a·b`, 0-based) and the
    /// table indices of its generators. Elements are re-indexed into
    /// canonical order; labels keep the original indices.
    pub fn from_table(table: &[Vec<usize>], generators: &[usize]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::GroupDefinition("empty Cayley table".into()));
        }
        for row in table {
            if row.len() != n {
                return Err(Error::GroupDefinition("Cayley table is not square".into()));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::GroupDefinition("Cayley table is not a Latin square".into()));
                }
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            for row in table {
                if std::mem::replace(&mut seen[row[col]], true) {
                    return Err(Error::GroupDefinition("Cayley table is not a Latin square".into()));
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::GroupDefinition("Cayley table has no identity".into()))?;
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return Err(Error::GroupDefinition(
                                "Cayley table is not associative".into(),
                            ));
                        }
                    }
                }
            }
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= n) {
            return Err(Error::GroupDefinition(format!("generator {g} is not a table element")));
        }
        let inverse = |x: usize| (0..n).find(|&y| table[x][y] == e).unwrap();
        let letters: Vec<usize> = generators.iter().flat_map(|&g| [g, inverse(g)]).collect();
        let elements = bfs_closure(e, &letters, |&a, &b| table[a][b], n + 1)?;
        if elements.len() != n {
            return Err(Error::GroupDefinition(format!(
                "generators reach {} of {} elements",
                elements.len(),
                n
            )));
        }
        let mut new_index = vec![0; n];
        for (i, &old) in elements.iter().enumerate() {
            new_index[old] = i;
        }
        let mut flat = vec![0u32; n * n];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                flat[i * n + j] = new_index[table[a][b]] as u32;
            }
        }
        let gens = generators.iter().map(|&g| new_index[g]).collect();
        let labels = elements.iter().map(|old| format!("e{old}")).collect();
        Ok(Self::assemble(flat, n, gens, labels))
    }

    fn assemble(table: Vec<u32>, order: usize, generators: Vec<usize>, labels: Vec<String>) -> Self {
        let inverses = (0..order)
            .map(|a| (0..order).find(|&b| table[a * order + b] == 0).expect("group table"))
            .collect();
        Self { order, table, inverses, generators, labels }
    }

    /// The subgroup generated by `images`, re-indexed canonically. Also
    /// returns, for each new index, the element of `self` it stands for.
    pub fn subgroup(&self, images: &[usize]) -> Result<(Self, Vec<usize>)> {
        let letters: Vec<usize> = images.iter().flat_map(|&g| [g, self.inv(g)]).collect();
        let elements = bfs_closure(0usize, &letters, |&a, &b| self.mul(a, b), self.order + 1)?;
        let n = elements.len();
        let mut new_index = HashMap::new();
        for (i, &old) in elements.iter().enumerate() {
            new_index.insert(old, i);
        }
        let mut table = vec![0u32; n * n];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                table[i * n + j] = new_index[&self.mul(a, b)] as u32;
            }
        }
        let gens = images.iter().map(|g| new_index[g]).collect();
        let labels = elements.iter().map(|&old| self.labels[old].clone()).collect();
        Ok((Self::assemble(table, n, gens, labels), elements))
    }

    /// Same elements and indices, one more generator.
    pub(crate) fn with_generator(&self, element: usize) -> Self {
        let mut out = self.clone();
        out.generators.push(element);
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn letter_value(&self, l: Letter) -> usize {
        let g = self.generators[l.generator];
        if l.inverse { self.inv(g) } else { g }
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements reachable from the identity by right multiplication with
    /// the generator letters; equals the whole group for a valid handle.
    pub fn closure_size(&self) -> usize {
        let letters: Vec<usize> =
            self.generators.iter().flat_map(|&g| [g, self.inv(g)]).collect();
        bfs_closure(0usize, &letters, |&a, &b| self.mul(a, b), self.order + 1)
            .map(|v| v.len())
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![2, 1, 3], vec![2, 3, 1]]).unwrap()
    }

    #[test]
    fn s3_closure_and_axioms() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.closure_size(), 6);
        for a in 0..6 {
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(g.inv(a), a), 0);
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        assert!(!g.is_abelian());
        assert_eq!(g.label(0), "()");
    }

    #[test]
    fn bfs_order_is_canonical() {
        // identity, then s, then t, t^-1 (s is an involution).
        let g = s3();
        assert_eq!(g.generators(), &[1, 2]);
        assert_eq!(g.inv(2), 3);
    }

    #[test]
    fn table_ingestion_matches_permutations() {
        let g = s3();
        let table: Vec<Vec<usize>> =
            (0..6).map(|a| (0..6).map(|b| g.mul(a, b)).collect()).collect();
        let h = FiniteGroup::from_table(&table, &[1, 2]).unwrap();
        assert_eq!(h.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(h.mul(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![0, 1]], &[1]).is_err());
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]], &[]).is_err());
        assert!(FiniteGroup::from_table(&[vec![0, 1, 2], vec![1, 0]], &[1]).is_err());
        assert!(FiniteGroup::from_permutations(&[vec![1, 1, 3]]).is_err());
    }

    #[test]
    fn subgroup_of_images() {
        let g = s3();
        let (h, embed) = g.subgroup(&[g.generators()[1]]).unwrap();
        assert_eq!(h.order(), 3);
        assert!(h.is_abelian());
        assert_eq!(embed[0], 0);
    }
}
