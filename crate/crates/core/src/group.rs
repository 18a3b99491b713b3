//! Finite groups given by multiplication tables, and homomorphisms between
//! them (gradings).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({:?})", self.names)
    }
}

impl FiniteGroup {
    /// Validates the table exhaustively: closure, associativity, identity
    /// and inverses. Element names must be distinct.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Input("a group has at least one element".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Input(format!("group table must be {n}x{n}")));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::Input(format!("duplicate element name {a:?}")));
            }
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::Input("group table entry out of range".into()));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| flat[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::Input(format!(
                            "group table not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| Error::Input("group table has no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| Error::Input(format!("{} has no inverse", names[a])))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup {
            names,
            table: flat,
            identity,
            inverse,
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn trivial() -> Self {
        Self::new(vec!["e".into()], vec![vec![0]]).expect("trivial group")
    }

    /// `Z/n` with elements named `"0"`, …, `"n-1"`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(names, table).expect("cyclic group")
    }

    /// Direct product with index `a * |other| + b` and names `"(a,b)"`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.size(), other.size());
        let names = (0..n * m)
            .map(|x| format!("({},{})", self.name(x / m), other.name(x % m)))
            .collect();
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Self::new(names, table).expect("direct product of groups")
    }

    /// Group of permutations under composition `(p ∘ q)(i) = p(q(i))`.
    pub fn from_permutations(names: Vec<String>, perms: &[Vec<usize>]) -> Result<Self> {
        let find = |p: &Vec<usize>| {
            perms
                .iter()
                .position(|q| q == p)
                .ok_or_else(|| Error::Input("permutations not closed under composition".into()))
        };
        let mut table = Vec::with_capacity(perms.len());
        for p in perms {
            let mut row = Vec::with_capacity(perms.len());
            for q in perms {
                let composed: Vec<usize> = q.iter().map(|&i| p[i]).collect();
                row.push(find(&composed)?);
            }
            table.push(row);
        }
        Self::new(names, table)
    }
}

/// A group homomorphism `source → target`, checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() || map.iter().any(|&x| x >= target.size()) {
            return Err(Error::Input("grading map has the wrong length or range".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::Input(format!(
                        "grading is not a homomorphism at ({}, {})",
                        source.name(a),
                        source.name(b)
                    )));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            map,
        })
    }

    pub fn to_trivial(source: Arc<FiniteGroup>) -> Self {
        let n = source.size();
        Self::new(source, Arc::new(FiniteGroup::trivial()), vec![0; n]).expect("trivial map")
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let map = group.elements().collect();
        Self::new(group.clone(), group, map).expect("identity map")
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// Elements of the source lying over `grade`, in source order.
    pub fn fiber(&self, grade: usize) -> Vec<usize> {
        self.source.elements().filter(|&a| self.map[a] == grade).collect()
    }
}

/// A homomorphism with a name, as stored alongside a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub name: String,
    pub hom: GroupHom,
}
