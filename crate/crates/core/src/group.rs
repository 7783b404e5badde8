//! Invariance groups of the normalized functions.
//!
//! Each invariance is an [`AffineMap`] on the parameter tuple with `n`
//! formal. Groups are generated by closure under composition and certified
//! by their multiplication table and element orders.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::affine::AffineMap;
use crate::catalog::{NamedFunction, Verdict};
use crate::field::Rational;

/// Closure search stops once this many distinct elements are found.
pub const CLOSURE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("generator is not a square map")]
    NotSquare,
    #[error("generator is not invertible")]
    NotInvertible,
    #[error("no generators given")]
    Empty,
    #[error("closure exceeded {0} elements")]
    ClosureCapExceeded(usize),
    #[error("unsupported group order {0}")]
    UnsupportedOrder(usize),
    #[error("listed elements do not match the generated group")]
    ListingMismatch,
}

/// Which side acts first in a product `f * g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// `f * g` applies `g` first, then `f`.
    #[default]
    RightFirst,
    /// `f * g` applies `f` first, then `g`.
    LeftFirst,
}

/// `f ∘ g`: apply `g` first, then `f`.
pub fn compose(f: &AffineMap, g: &AffineMap) -> Result<AffineMap, GroupError> {
    f.compose(g).ok_or(GroupError::ArityMismatch(f.input_arity(), g.output_arity()))
}

fn product(conv: Convention, f: &AffineMap, g: &AffineMap) -> Result<AffineMap, GroupError> {
    match conv {
        Convention::RightFirst => compose(f, g),
        Convention::LeftFirst => compose(g, f),
    }
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let k = m.len();
    let mut det = Rational::one();
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = &det * &pivot;
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            let f = row[col].checked_div(&pivot).expect("nonzero pivot");
            for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *dst = &*dst - &(src * &f);
            }
        }
    }
    det
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    elements: Vec<AffineMap>,
    table: Vec<Vec<usize>>,
    orders: Vec<u32>,
    convention: Convention,
}

/// Closure of `generators` under composition, identity first and the rest
/// in discovery order.
pub fn generate_group(generators: &[AffineMap]) -> Result<GroupTable, GroupError> {
    generate_group_with(generators, Convention::RightFirst)
}

pub fn generate_group_with(generators: &[AffineMap], conv: Convention) -> Result<GroupTable, GroupError> {
    let k = generators.first().ok_or(GroupError::Empty)?.input_arity();
    for g in generators {
        if !g.is_square() {
            return Err(GroupError::NotSquare);
        }
        if g.input_arity() != k {
            return Err(GroupError::ArityMismatch(k, g.input_arity()));
        }
        if determinant(g.matrix()).is_zero() {
            return Err(GroupError::NotInvertible);
        }
    }
    let mut elements = vec![AffineMap::identity(k)];
    let mut index: HashMap<AffineMap, usize> = HashMap::from([(elements[0].clone(), 0)]);
    let mut next = 0;
    while next < elements.len() {
        let e = elements[next].clone();
        next += 1;
        for g in generators {
            let h = product(conv, &e, g)?;
            if !index.contains_key(&h) {
                if elements.len() == CLOSURE_CAP {
                    return Err(GroupError::ClosureCapExceeded(CLOSURE_CAP));
                }
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
    }
    GroupTable::build(elements, conv)
}

impl GroupTable {
    fn build(elements: Vec<AffineMap>, conv: Convention) -> Result<GroupTable, GroupError> {
        let index: HashMap<&AffineMap, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut table = Vec::with_capacity(elements.len());
        for f in &elements {
            let mut row = Vec::with_capacity(elements.len());
            for g in &elements {
                let h = product(conv, f, g)?;
                row.push(*index.get(&h).ok_or(GroupError::ListingMismatch)?);
            }
            table.push(row);
        }
        let id = elements.iter().position(AffineMap::is_identity).ok_or(GroupError::ListingMismatch)?;
        let orders = (0..elements.len())
            .map(|i| {
                let mut cur = i;
                let mut k = 1;
                while cur != id {
                    cur = table[cur][i];
                    k += 1;
                }
                k
            })
            .collect();
        Ok(GroupTable { elements, table, orders, convention: conv })
    }

    /// The same group with its elements listed in `order`, which must be a
    /// permutation of the generated set.
    pub fn reordered(&self, order: &[AffineMap]) -> Result<GroupTable, GroupError> {
        if order.len() != self.elements.len() || order.iter().any(|e| self.index_of(e).is_none()) {
            return Err(GroupError::ListingMismatch);
        }
        GroupTable::build(order.to_vec(), self.convention)
    }

    pub fn elements(&self) -> &[AffineMap] {
        &self.elements
    }

    /// `table[i][j]` is the index of `elements[i] * elements[j]`.
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, f: &AffineMap) -> Option<usize> {
        self.elements.iter().position(|e| e == f)
    }

    pub fn is_abelian(&self) -> bool {
        let k = self.len();
        (0..k).all(|i| (0..k).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Every row and column is a permutation of the element indices.
    pub fn is_latin_square(&self) -> bool {
        let k = self.len();
        let perm = |it: &mut dyn Iterator<Item = usize>| {
            let mut seen = vec![false; k];
            for x in it {
                if x >= k || std::mem::replace(&mut seen[x], true) {
                    return false;
                }
            }
            true
        };
        (0..k).all(|i| perm(&mut self.table[i].iter().copied()) && perm(&mut (0..k).map(|r| self.table[r][i])))
    }
}

pub fn element_orders(g: &GroupTable) -> Vec<u32> {
    g.orders.clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupLabel {
    Trivial,
    S2,
    /// Cyclic of order 6.
    C6,
    S3,
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupLabel::Trivial => "trivial",
            GroupLabel::S2 => "S2",
            GroupLabel::C6 => "C6",
            GroupLabel::S3 => "S3",
        })
    }
}

/// Isomorphism type for orders 1, 2 and 6; at order 6 the abelian test
/// separates S3 from the cyclic group.
pub fn classify_group(g: &GroupTable) -> Result<GroupLabel, GroupError> {
    match g.len() {
        1 => Ok(GroupLabel::Trivial),
        2 => Ok(GroupLabel::S2),
        6 if g.is_abelian() => Ok(GroupLabel::C6),
        6 => Ok(GroupLabel::S3),
        k => Err(GroupError::UnsupportedOrder(k)),
    }
}

/// A parameter family with its listed invariances and its symmetric
/// reparameterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    T,
    Ttilde,
    R,
    Rtilde,
    Q,
    M,
}

const XYZ: [&str; 3] = ["x", "y", "z"];
const XY: [&str; 2] = ["x", "y"];
const PERMS3: [&str; 6] = ["xyz", "xzy", "yxz", "yzx", "zxy", "zyx"];
const PERMS2: [&str; 2] = ["xy", "yx"];

struct FamilyData {
    ids: &'static [&'static str],
    maps: &'static [&'static [&'static str]],
    generators: &'static [usize],
    reparam: &'static [&'static str],
}

fn data(f: Family) -> FamilyData {
    match f {
        Family::T => FamilyData {
            ids: &["TI1", "TI2", "TI3", "TI4", "TI5", "TI6"],
            maps: &[
                &["a", "b", "c"],
                &["a", "b", "1+a-c"],
                &["c-b-n", "c-a-n", "c"],
                &["c-b-n", "c-a-n", "1-b-n"],
                &["1+a-b-c-n", "1-c-n", "1+a-c"],
                &["1+a-b-c-n", "1-c-n", "1-b-n"],
            ],
            generators: &[1, 2],
            reparam: &["x-y-z", "(1+3x-y-z-2n)/2", "(1+x+y-3z)/2"],
        },
        Family::Ttilde => FamilyData {
            ids: &["TtI1", "TtI2", "TtI3", "TtI4", "TtI5", "TtI6"],
            maps: &[
                &["a", "c"],
                &["a", "1+a-c"],
                &["c-a-n", "c"],
                &["c-a-n", "1-a-n"],
                &["1-c-n", "1+a-c"],
                &["1-c-n", "1-a-n"],
            ],
            generators: &[1, 2],
            reparam: &["(1+2x-y-z-2n)/3", "(2+x+y-2z-n)/3"],
        },
        Family::R => FamilyData {
            ids: &["RI1", "RI2", "RI3", "RI4", "RI5", "RI6"],
            maps: &[
                &["a", "b", "c"],
                &["a", "b", "a-c-n"],
                &["1+c-b", "1+c-a", "c"],
                &["1+c-b", "1+c-a", "1-b-n"],
                &["1+a-b-c-n", "1-c-n", "a-c-n"],
                &["1+a-b-c-n", "1-c-n", "1-b-n"],
            ],
            generators: &[1, 2],
            reparam: &["x-y-z", "(2+3x-y-z-n)/2", "(x+y-3z-n)/2"],
        },
        Family::Rtilde => FamilyData {
            ids: &["RtI1", "RtI2", "RtI3", "RtI4", "RtI5", "RtI6"],
            maps: &[
                &["a", "c"],
                &["a", "a-c-n"],
                &["1+c-a", "c"],
                &["1+c-a", "1-a-n"],
                &["1-c-n", "a-c-n"],
                &["1-c-n", "1-a-n"],
            ],
            generators: &[1, 2],
            reparam: &["(2+2x-y-z-n)/3", "(1+x+y-2z-2n)/3"],
        },
        Family::Q => FamilyData {
            ids: &["Q-id", "Q-inv"],
            maps: &[&["a", "c"], &["2c-a-n-1", "c"]],
            generators: &[1],
            reparam: &["x", "(1+x+y+n)/2"],
        },
        Family::M => FamilyData {
            ids: &["M-id", "M-inv"],
            maps: &[&["a", "c"], &["1+2c-a+n", "c"]],
            generators: &[1],
            reparam: &["x", "(x+y-n-1)/2"],
        },
    }
}

impl Family {
    pub const ALL: [Family; 6] = [Family::T, Family::Ttilde, Family::R, Family::Rtilde, Family::Q, Family::M];

    pub fn name(self) -> &'static str {
        self.base().name()
    }

    pub fn base(self) -> NamedFunction {
        match self {
            Family::T => NamedFunction::T,
            Family::Ttilde => NamedFunction::Ttilde,
            Family::R => NamedFunction::R,
            Family::Rtilde => NamedFunction::Rtilde,
            Family::Q => NamedFunction::Q,
            Family::M => NamedFunction::M,
        }
    }

    pub fn symmetric(self) -> NamedFunction {
        match self {
            Family::T => NamedFunction::U,
            Family::Ttilde => NamedFunction::Utilde,
            Family::R => NamedFunction::V,
            Family::Rtilde => NamedFunction::Vtilde,
            Family::Q => NamedFunction::W,
            Family::M => NamedFunction::L,
        }
    }

    pub fn params(self) -> &'static [&'static str] {
        self.base().params()
    }

    pub fn symmetric_params(self) -> &'static [&'static str] {
        if self.has_order_six() {
            &XYZ
        } else {
            &XY
        }
    }

    fn has_order_six(self) -> bool {
        !matches!(self, Family::Q | Family::M)
    }

    /// Listed invariances `(id, map)`, identity first.
    pub fn invariances(self) -> Vec<(&'static str, AffineMap)> {
        let d = data(self);
        d.ids
            .iter()
            .zip(d.maps)
            .map(|(id, outs)| (*id, AffineMap::parse(self.params(), outs).expect("static map")))
            .collect()
    }

    pub fn generators(self) -> Vec<AffineMap> {
        let inv = self.invariances();
        data(self).generators.iter().map(|&i| inv[i].1.clone()).collect()
    }

    /// `ρ`: symmetric parameters to base parameters.
    pub fn reparameterization(self) -> AffineMap {
        AffineMap::parse(self.symmetric_params(), data(self).reparam).expect("static map")
    }

    /// Permutations of the symmetric parameters as `(label, σ)`, in the
    /// order matching [`Family::invariances`]. The label lists the images
    /// of the inputs, e.g. `"xzy"` is `(x,y,z) -> (x,z,y)`.
    pub fn permutations(self) -> Vec<(&'static str, AffineMap)> {
        let vars = self.symmetric_params();
        let labels: &[&'static str] = if vars.len() == 3 { &PERMS3 } else { &PERMS2 };
        labels
            .iter()
            .map(|label| {
                let outs: Vec<String> = label.chars().map(String::from).collect();
                let outs: Vec<&str> = outs.iter().map(String::as_str).collect();
                (*label, AffineMap::parse(vars, &outs).expect("static map"))
            })
            .collect()
    }

    pub fn group(self) -> Result<GroupTable, GroupError> {
        self.group_with(Convention::RightFirst)
    }

    /// Generated group, with elements listed in invariance order.
    pub fn group_with(self, conv: Convention) -> Result<GroupTable, GroupError> {
        let listed: Vec<AffineMap> = self.invariances().into_iter().map(|(_, m)| m).collect();
        generate_group_with(&self.generators(), conv)?.reordered(&listed)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// Checks `ρ ∘ σ == φ ∘ ρ` as affine maps, where `σ` is the permutation at
/// `index` and `φ` the invariance listed at the same index.
pub fn verify_reparameterization(family: Family, index: usize) -> Result<Verdict<AffineMap>, GroupError> {
    let rho = family.reparameterization();
    let perms = family.permutations();
    let invs = family.invariances();
    let (Some((_, sigma)), Some((_, phi))) = (perms.get(index), invs.get(index)) else {
        return Err(GroupError::ListingMismatch);
    };
    let lhs = compose(&rho, sigma)?;
    let rhs = compose(phi, &rho)?;
    Ok(Verdict::compare(lhs, rhs))
}

/// Everything `group` prints for a family.
#[derive(Debug, Clone)]
pub struct GroupCertificate {
    pub family: Family,
    pub ids: Vec<&'static str>,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub orders: Vec<u32>,
    pub label: GroupLabel,
    pub latin_square: bool,
    /// Conjugation check per permutation, in listing order.
    pub reparameterization: Vec<bool>,
}

pub fn certify(family: Family) -> Result<GroupCertificate, GroupError> {
    let g = family.group()?;
    let vars = family.params();
    let reparameterization =
        (0..g.len()).map(|i| verify_reparameterization(family, i).map(|v| v.is_holds())).collect::<Result<_, _>>()?;
    Ok(GroupCertificate {
        family,
        ids: family.invariances().into_iter().map(|(id, _)| id).collect(),
        elements: g.elements().iter().map(|m| m.display_with(vars)).collect(),
        table: g.table().to_vec(),
        orders: g.orders().to_vec(),
        label: classify_group(&g)?,
        latin_square: g.is_latin_square(),
        reparameterization,
    })
}
