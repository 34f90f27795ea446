//! Buchberger's algorithm specialised to binomial ideals.
//!
//! All coefficients are ±1, so an S-polynomial of two binomials is again a
//! binomial and reducing a binomial means rewriting each of its two terms to
//! normal form. Common factors of the two terms are never cancelled: the
//! ideals handled during saturation are not prime.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap};

use super::binomial::{Binomial, Monomial, MonomialIdeal, MonomialOrder};

/// Reduced Gröbner basis; each element's `plus` is its initial term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Normal form of a monomial modulo the basis.
    pub fn normal_form(&self, m: &Monomial) -> Monomial {
        let leads: Vec<Lead> = self.elements.iter().map(Lead::new).collect();
        normal_form(m, &self.elements, &leads)
    }

    /// True iff `f` lies in the ideal (both terms share a normal form).
    pub fn contains(&self, f: &Binomial) -> bool {
        self.normal_form(&f.plus) == self.normal_form(&f.minus)
    }
}

/// Minimal generators of the initial ideal of a reduced basis.
pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.elements.iter().map(|b| b.plus.clone()).collect())
}

#[derive(Clone)]
struct Lead {
    mask: u64,
    degree: u32,
}

impl Lead {
    fn new(b: &Binomial) -> Self {
        Lead {
            mask: b.plus.support_mask(),
            degree: b.plus.degree(),
        }
    }
}

fn find_divisor(m: &Monomial, mask: u64, degree: u32, basis: &[Binomial], leads: &[Lead]) -> Option<usize> {
    leads.iter().zip(basis).position(|(l, b)| {
        l.degree <= degree && l.mask & !mask == 0 && b.plus.divides(m)
    })
}

fn normal_form(m: &Monomial, basis: &[Binomial], leads: &[Lead]) -> Monomial {
    let mut cur = m.clone();
    let degree = cur.degree();
    while let Some(k) = find_divisor(&cur, cur.support_mask(), degree, basis, leads) {
        cur = cur.replace(&basis[k].plus, &basis[k].minus);
    }
    cur
}

struct Pair {
    degree: u32,
    seq: usize,
    i: usize,
    j: usize,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        (self.degree, self.seq) == (other.degree, other.seq)
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree, self.seq).cmp(&(other.degree, other.seq))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn buchberger(gens: &[Binomial], order: &MonomialOrder) -> GroebnerBasis {
    let mut basis: Vec<Binomial> = Vec::new();
    let mut leads: Vec<Lead> = Vec::new();
    let mut queue: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
    // pairs whose S-binomial was reduced (or is coprime); the chain criterion
    // may only lean on these, never on pairs it skipped itself
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut seq = 0usize;

    let mut insert = |b: Binomial,
                      basis: &mut Vec<Binomial>,
                      leads: &mut Vec<Lead>,
                      queue: &mut BinaryHeap<Reverse<Pair>>| {
        let j = basis.len();
        for i in 0..j {
            let lcm = basis[i].plus.lcm(&b.plus);
            queue.push(Reverse(Pair {
                degree: lcm.degree(),
                seq,
                i,
                j,
            }));
            seq += 1;
        }
        leads.push(Lead::new(&b));
        basis.push(b);
    };

    for g in gens {
        let p = normal_form(&g.plus, &basis, &leads);
        let m = normal_form(&g.minus, &basis, &leads);
        if p != m {
            insert(Binomial::new(p, m).oriented(order), &mut basis, &mut leads, &mut queue);
        }
    }

    while let Some(Reverse(pair)) = queue.pop() {
        let (i, j) = (pair.i, pair.j);
        let (bi, bj) = (&basis[i], &basis[j]);
        if bi.plus.is_coprime(&bj.plus) {
            done.insert((i, j));
            continue;
        }
        let lcm = bi.plus.lcm(&bj.plus);
        // chain criterion: some lead divides the lcm and both side pairs are done
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].plus.divides(&lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s1 = lcm.replace(&bi.plus, &bi.minus);
        let s2 = lcm.replace(&bj.plus, &bj.minus);
        let n1 = normal_form(&s1, &basis, &leads);
        let n2 = normal_form(&s2, &basis, &leads);
        done.insert((i, j));
        if n1 != n2 {
            insert(Binomial::new(n1, n2).oriented(order), &mut basis, &mut leads, &mut queue);
        }
    }

    reduce(basis, order)
}

/// Turns a Gröbner basis into the reduced one.
fn reduce(basis: Vec<Binomial>, order: &MonomialOrder) -> GroebnerBasis {
    let mut keep: Vec<Binomial> = Vec::new();
    for (k, b) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(l, c)| {
            l != k && c.plus.divides(&b.plus) && (c.plus != b.plus || l < k)
        });
        if !redundant {
            keep.push(b.clone());
        }
    }
    let leads: Vec<Lead> = keep.iter().map(Lead::new).collect();
    let mut elements: Vec<Binomial> = keep
        .iter()
        .map(|b| Binomial::new(b.plus.clone(), normal_form(&b.minus, &keep, &leads)))
        .collect();
    elements.sort_by(|a, b| order.cmp(&b.plus, &a.plus).then_with(|| a.plus.cmp(&b.plus)));
    GroebnerBasis {
        order: order.clone(),
        elements,
    }
}
