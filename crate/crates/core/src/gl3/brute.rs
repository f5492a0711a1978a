//! Brute-force GL₃(F_q) for tiny q: conjugacy classes, the lattice of normal
//! subgroups, derived series.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::algebra::{FiniteField, Fq};
use crate::error::{Error, Result};

/// Largest q accepted by the enumeration.
pub const MAX_BRUTE_Q: u32 = 4;

type Mat = [u32; 9];

/// GL₃(F_q) with elements numbered densely.
pub struct Gl3Group {
    field: Fq,
    elems: Vec<Mat>,
    /// q^9 slots, element number or u32::MAX.
    index: Vec<u32>,
    identity: u32,
}

impl Gl3Group {
    pub fn new(field: &Fq) -> Result<Self> {
        if field.q() > MAX_BRUTE_Q {
            return Err(Error::ResourceCap(format!("GL3 enumeration limited to q <= {MAX_BRUTE_Q}")));
        }
        let q = field.q();
        let total = (q as usize).pow(9);
        let mut elems = Vec::new();
        let mut index = vec![u32::MAX; total];
        for code in 0..total {
            let m = decode(code, q);
            if det(field, &m) != 0 {
                index[code] = elems.len() as u32;
                elems.push(m);
            }
        }
        let id = [1, 0, 0, 0, 1, 0, 0, 0, 1];
        let identity = index[encode(&id, q)];
        Ok(Gl3Group { field: field.clone(), elems, index, identity })
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (&self.elems[a as usize], &self.elems[b as usize]);
        let f = &self.field;
        let mut m = [0u32; 9];
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0;
                for k in 0..3 {
                    s = f.add(s, f.mul(x[3 * i + k], y[3 * k + j]));
                }
                m[3 * i + j] = s;
            }
        }
        self.index[encode(&m, f.q())]
    }

    pub fn inv(&self, a: u32) -> u32 {
        let mut x = a;
        loop {
            let next = self.mul(x, a);
            if next == self.identity {
                return x;
            }
            x = next;
        }
    }

    pub fn is_scalar(&self, a: u32) -> bool {
        let m = &self.elems[a as usize];
        m[1] == 0 && m[2] == 0 && m[3] == 0 && m[5] == 0 && m[6] == 0 && m[7] == 0 && m[0] == m[4] && m[4] == m[8]
    }

    pub fn det(&self, a: u32) -> u32 {
        det(&self.field, &self.elems[a as usize])
    }

    fn generators(&self) -> Vec<u32> {
        let f = &self.field;
        let q = f.q();
        let mut gens = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let mut m = [1, 0, 0, 0, 1, 0, 0, 0, 1];
                    m[3 * i + j] = 1;
                    gens.push(self.index[encode(&m, q)]);
                }
            }
        }
        for a in 2..q {
            gens.push(self.index[encode(&[a, 0, 0, 0, 1, 0, 0, 0, 1], q)]);
        }
        gens
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        let gens: Vec<(u32, u32)> = self.generators().into_iter().map(|g| (g, self.inv(g))).collect();
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut members = vec![start];
            class_of[start as usize] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(g, gi) in &gens {
                    let y = self.mul(self.mul(g, x), gi);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }
}

fn encode(m: &Mat, q: u32) -> usize {
    m.iter().rev().fold(0usize, |acc, &x| acc * q as usize + x as usize)
}

fn decode(mut code: usize, q: u32) -> Mat {
    let mut m = [0u32; 9];
    for x in m.iter_mut() {
        *x = (code % q as usize) as u32;
        code /= q as usize;
    }
    m
}

fn det(f: &Fq, m: &Mat) -> u32 {
    let t = |a: usize, b: usize, c: usize, d: usize| f.sub(f.mul(m[a], m[b]), f.mul(m[c], m[d]));
    let a = f.mul(m[0], t(4, 8, 5, 7));
    let b = f.mul(m[1], t(3, 8, 5, 6));
    let c = f.mul(m[2], t(3, 7, 4, 6));
    f.add(f.sub(a, b), c)
}

/// A normal subgroup, as a set of conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalSubgroupInfo {
    pub order: usize,
    pub classes: Vec<usize>,
    pub solvable: bool,
    pub central: bool,
    /// Contained in SL₃.
    pub in_sl3: bool,
    pub derived_length: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalSolvableReport {
    pub q: u32,
    pub group_order: usize,
    pub class_count: usize,
    pub center_order: usize,
    pub normal_subgroups: Vec<NormalSubgroupInfo>,
    /// Every solvable normal subgroup is central.
    pub holds: bool,
}

type Mask = u128;

struct ClassAlgebra {
    sizes: Vec<usize>,
    /// Classes met by (class a) · (class b).
    prod: Vec<Vec<Mask>>,
    /// Classes met by commutators [a, y] with y in class b.
    comm: Vec<Vec<Mask>>,
}

impl ClassAlgebra {
    fn new(g: &Gl3Group, classes: &[Vec<u32>]) -> Result<Self> {
        let k = classes.len();
        if k > Mask::BITS as usize {
            return Err(Error::ResourceCap(format!("{k} conjugacy classes exceed {}", Mask::BITS)));
        }
        let mut class_of = vec![0usize; g.order()];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x as usize] = i;
            }
        }
        let mut prod = vec![vec![0; k]; k];
        let mut comm = vec![vec![0; k]; k];
        for a in 0..k {
            let rep = classes[a][0];
            let rep_inv = g.inv(rep);
            for b in 0..k {
                for &y in &classes[b] {
                    prod[a][b] |= 1 << class_of[g.mul(rep, y) as usize];
                    let c = g.mul(g.mul(rep_inv, g.inv(y)), g.mul(rep, y));
                    comm[a][b] |= 1 << class_of[c as usize];
                }
            }
        }
        Ok(ClassAlgebra { sizes: classes.iter().map(Vec::len).collect(), prod, comm })
    }

    fn bits(m: Mask) -> impl Iterator<Item = usize> {
        (0..Mask::BITS as usize).filter(move |&i| m >> i & 1 == 1)
    }

    /// Smallest union of classes containing `m` and closed under products.
    fn close(&self, mut m: Mask) -> Mask {
        loop {
            let mut next = m;
            for a in Self::bits(m) {
                for b in Self::bits(m) {
                    next |= self.prod[a][b];
                }
            }
            if next == m {
                return m;
            }
            m = next;
        }
    }

    fn derived(&self, m: Mask) -> Mask {
        let mut c = 0;
        for a in Self::bits(m) {
            for b in Self::bits(m) {
                c |= self.comm[a][b];
            }
        }
        self.close(c)
    }

    fn size(&self, m: Mask) -> usize {
        Self::bits(m).map(|i| self.sizes[i]).sum()
    }
}

pub fn normal_solvable_center_check(field: &Fq) -> Result<NormalSolvableReport> {
    let g = Gl3Group::new(field)?;
    let classes = g.classes();
    let alg = ClassAlgebra::new(&g, &classes)?;
    let id_class = classes.iter().position(|c| c.contains(&g.identity())).expect("identity");
    let trivial: Mask = 1 << id_class;

    let mut found = BTreeSet::from([trivial]);
    let mut queue = VecDeque::from([trivial]);
    while let Some(n) = queue.pop_front() {
        for c in 0..classes.len() {
            if n >> c & 1 == 0 {
                let m = alg.close(n | 1 << c);
                if found.insert(m) {
                    queue.push_back(m);
                }
            }
        }
    }

    let mut normal_subgroups = Vec::new();
    for &m in &found {
        let mut cur = m;
        let mut steps = 0;
        let mut solvable = false;
        loop {
            if cur == trivial {
                solvable = true;
                break;
            }
            let next = alg.derived(cur);
            if next == cur {
                break;
            }
            cur = next;
            steps += 1;
        }
        let members = ClassAlgebra::bits(m).flat_map(|c| classes[c].iter().copied());
        let (mut central, mut in_sl3) = (true, true);
        for x in members {
            central &= g.is_scalar(x);
            in_sl3 &= g.det(x) == 1;
        }
        normal_subgroups.push(NormalSubgroupInfo {
            order: alg.size(m),
            classes: ClassAlgebra::bits(m).collect(),
            solvable,
            central,
            in_sl3,
            derived_length: solvable.then_some(steps),
        });
    }
    normal_subgroups.sort_by_key(|n| (n.order, n.classes.clone()));
    let center_order = classes.iter().filter(|c| c.len() == 1).count();
    let holds = normal_subgroups.iter().all(|n| !n.solvable || n.central);
    Ok(NormalSolvableReport {
        q: field.q(),
        group_order: g.order(),
        class_count: classes.len(),
        center_order,
        normal_subgroups,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl3_f2() {
        let r = normal_solvable_center_check(&Fq::of_order(2).unwrap()).unwrap();
        assert_eq!((r.group_order, r.class_count, r.center_order), (168, 6, 1));
        assert!(r.holds);
        assert_eq!(r.normal_subgroups.len(), 2);
        let whole = r.normal_subgroups.last().unwrap();
        assert!(whole.order == 168 && !whole.solvable && whole.in_sl3);
    }

    #[test]
    fn gl3_f3() {
        let r = normal_solvable_center_check(&Fq::of_order(3).unwrap()).unwrap();
        assert_eq!((r.group_order, r.center_order), (11232, 2));
        assert!(r.holds);
        let center = r.normal_subgroups.iter().find(|n| n.order == 2).unwrap();
        assert!(center.solvable && center.central);
        let sl3 = r.normal_subgroups.iter().find(|n| n.order == 5616).unwrap();
        assert!(!sl3.solvable && sl3.in_sl3);
    }
}
