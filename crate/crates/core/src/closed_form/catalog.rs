//! The published part decompositions of the eight amplitudes, as data.
//!
//! Each part sums `(-1)^sign · weight` over nested integer ranges. Indicator
//! prefactors are folded into the weight. [`literal_parts`] follows the
//! published text; [`CORRECTIONS`] lists the edits needed to make every part
//! agree with exhaustive path enumeration.

use crate::cluster::EndType;

/// Size classes of the clusters of one letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SizeClass {
    /// Every cluster has size one.
    A,
    /// The largest cluster has size two.
    B,
    /// Some cluster has size three or more.
    C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSpec {
    pub name: String,
    pub lo: String,
    pub hi: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSpec {
    pub id: String,
    pub basis: u8,
    pub left: SizeClass,
    pub right: SizeClass,
    /// End of the L mask for the two amplitudes that split on it.
    pub tail: Option<EndType>,
    pub vars: Vec<VarSpec>,
    pub sign: String,
    pub weight: String,
}

/// Which text of a part an edit replaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Lo(&'static str),
    Hi(&'static str),
    Sign,
    Weight,
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Lo(v) => write!(f, "lower bound of {v}"),
            Field::Hi(v) => write!(f, "upper bound of {v}"),
            Field::Sign => f.write_str("sign exponent"),
            Field::Weight => f.write_str("weight"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Correction {
    pub part: &'static str,
    pub field: Field,
    pub published: &'static str,
    pub corrected: &'static str,
    pub note: &'static str,
}

pub const CORRECTIONS: &[Correction] = &[
    Correction {
        part: "a0.5",
        field: Field::Weight,
        published: "perm01(2*CL-CL,NL-CL,g)*place(CL-1,CR1-1,g-1,r)*comp(NR-CR1,CL-CR1,CR2)",
        corrected: "perm01(2*CL-NL,NL-CL,g)*place(CL-1,CR1-1,g-1,r)*comp(NR-CR1,CL-CR1,CR2)",
        note: "the first group count is the number of size-1 L clusters, CL1 = 2*CL-NL",
    },
    Correction {
        part: "a3.ii.4",
        field: Field::Weight,
        published: "(2*CL-NR-r-1)/(CL-g)*perm01(CL1-1,CL-CL1,g)*place(CL-1,2*CL-NR-1,g,r)*comp(NL-CL1,CL-CL1,CL2)",
        corrected: "(2*CL-NR-r-1)/(CL-g)*perm01(CL1-1,CL-CL1,g)*place(CL-1,2*CL-NR-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)",
        note: "the group placement among R clusters counts g-1 gaps between L groups, as in part a3.ii.3",
    },
    Correction {
        part: "a3.ii.4",
        field: Field::Lo("g"),
        published: "2-delta(CL1,0)",
        corrected: "2-delta(CL1,1)",
        note: "the S group count of the permutation is CL1-1, so the single-group case is CL1 = 1",
    },
    Correction {
        part: "a4.6",
        field: Field::Weight,
        published: "(CR1-r-1)/(CL-g+1)*perm01(CL1,CL-CL1,g)*place(CL,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1,CR2)",
        corrected: "(CR1-r-1)/(CL-g+1)*perm01(CL1,CL-CL1,g)*place(CL,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1+1,CR2)",
        note: "R has CL+1 clusters, so the multi-element R count is CL+1-CR1, as in part a4.5",
    },
    Correction {
        part: "a5.5",
        field: Field::Lo("CL1"),
        published: "max(1,2*NR-NL+1)",
        corrected: "max(1,2*NR-NL-1)",
        note: "with CL = NR-1 the size-1 L bound max(0,2*CL-NL+1) is 2*NR-NL-1",
    },
];

impl PartSpec {
    pub fn field(&self, field: Field) -> Option<&str> {
        match field {
            Field::Lo(v) => self.vars.iter().find(|x| x.name == v).map(|x| x.lo.as_str()),
            Field::Hi(v) => self.vars.iter().find(|x| x.name == v).map(|x| x.hi.as_str()),
            Field::Sign => Some(&self.sign),
            Field::Weight => Some(&self.weight),
        }
    }

    pub fn field_mut(&mut self, field: Field) -> Option<&mut String> {
        match field {
            Field::Lo(v) => self.vars.iter_mut().find(|x| x.name == v).map(|x| &mut x.lo),
            Field::Hi(v) => self.vars.iter_mut().find(|x| x.name == v).map(|x| &mut x.hi),
            Field::Sign => Some(&mut self.sign),
            Field::Weight => Some(&mut self.weight),
        }
    }
}

use EndType::{MI, SI};
use SizeClass::{A, B, C};

fn part(
    id: &str,
    basis: u8,
    (left, right): (SizeClass, SizeClass),
    tail: Option<EndType>,
    vars: &[(&str, &str, &str)],
    sign: &str,
    weight: &str,
) -> PartSpec {
    PartSpec {
        id: id.to_string(),
        basis,
        left,
        right,
        tail,
        vars: vars
            .iter()
            .map(|&(name, lo, hi)| VarSpec { name: name.into(), lo: lo.into(), hi: hi.into() })
            .collect(),
        sign: sign.into(),
        weight: weight.into(),
    }
}

/// All 58 parts as published.
pub fn literal_parts() -> Vec<PartSpec> {
    let mut v = Vec::with_capacity(58);
    a0(&mut v);
    a1(&mut v);
    a2(&mut v);
    a3(&mut v);
    a4(&mut v);
    a5(&mut v);
    a6(&mut v);
    a7(&mut v);
    v
}

// Final moves R L L, last L cluster of size two.
fn a0(v: &mut Vec<PartSpec>) {
    let g_b = ("g", "2-delta(2*CL,NL)", "2*min(2*CL-NL,NL-CL)+pos(2*NL-3*CL)");
    let g_c = ("g", "2-delta(CL1,0)", "2*min(CL1,CL-CL1)+pos(CL-2*CL1)");
    let r_b = ("r", "max(0,CL-NR+g-1)", "min(2*CL-NR-1,g-1)");
    let r_c = ("r", "max(0,CR1-CL+g-1)", "min(CR1-1,g-1)");
    v.push(part(
        "a0.1",
        0,
        (B, A),
        None,
        &[("g", "2-delta(2*NR,NL)", "2*min(2*NR-NL,NL-NR)+pos(2*NL-3*NR)")],
        "g-1",
        "ind(ceilh(NL),NL-1,NR)*perm01(2*NR-NL,NL-NR,g)",
    ));
    v.push(part(
        "a0.2",
        0,
        (C, A),
        None,
        &[
            ("CL1", "max(0,2*NR-NL+1)", "NR-2"),
            ("CL2", "max(1,3*NR-2*CL1-NL)", "NR-CL1-1"),
            ("g", "2-delta(CL1,0)", "2*min(CL1,NR-CL1)+pos(NR-2*CL1)"),
        ],
        "n+CL2+g-1",
        "ind(2,NL-3,NR)*CL2/(NR-CL1)*perm01(CL1,NR-CL1,g)*comp(NL-CL1,NR-CL1,CL2)",
    ));
    v.push(part(
        "a0.3",
        0,
        (B, B),
        None,
        &[("CL", "ceilh(max(NL,NR+1))", "min(NL,NR)-1"), g_b, r_b],
        "r",
        "perm01(2*CL-NL,NL-CL,g)*place(CL-1,2*CL-NR-1,g-1,r)",
    ));
    v.push(part(
        "a0.4",
        0,
        (C, B),
        None,
        &[
            ("CL", "1+floorh(NR)", "min(NR,NL-2)-1"),
            ("CL1", "max(0,2*CL-NL+1)", "CL-2"),
            ("CL2", "max(1,3*CL-2*CL1-NL)", "CL-CL1-1"),
            g_c,
            r_b,
        ],
        "CL2+NL-CL+r",
        "CL2/(CL-CL1)*perm01(CL1,CL-CL1,g)*place(CL-1,2*CL-NR-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)",
    ));
    v.push(part(
        "a0.5",
        0,
        (B, C),
        None,
        &[
            ("CL", "max(2,ceilh(NL))", "min(NL,NR-1)-1"),
            ("CR1", "max(1,2*CL-NR+1)", "CL-1"),
            ("CR2", "max(0,3*CL-2*CR1-NR)", "CL-CR1-1"),
            g_b,
            r_c,
        ],
        "NR-CL+CR2+r",
        "perm01(2*CL-CL,NL-CL,g)*place(CL-1,CR1-1,g-1,r)*comp(NR-CR1,CL-CR1,CR2)",
    ));
    v.push(part(
        "a0.6",
        0,
        (C, C),
        None,
        &[
            ("CL", "2", "min(NL-1,NR)-2"),
            ("CL1", "max(0,2*CL-NL+1)", "CL-2"),
            ("CL2", "max(1,3*CL-2*CL1-NL)", "CL-CL1-1"),
            ("CR1", "max(0,2*CL-NR+1)", "CL-1"),
            ("CR2", "max(0,3*CL-2*CR1-NR)", "CL-CR1-1"),
            g_c,
            r_c,
        ],
        "n+CL2+CR2+r",
        "CL2/(CL-CL1)*perm01(CL1,CL-CL1,g)*place(CL-1,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1,CR2)",
    ));
}

// Final moves L L L.
fn a1(v: &mut Vec<PartSpec>) {
    let cl1 = ("CL1", "max(0,2*CL-NL+1)", "CL-1");
    let cl2 = ("CL2", "max(0,3*CL-2*CL1-NL)", "CL-CL1-1");
    let g = ("g", "2-delta(CL1,0)", "2*min(CL1,CL-CL1)+pos(CL-2*CL1)");
    v.push(part(
        "a1.1",
        1,
        (C, A),
        None,
        &[
            ("CL1", "max(0,2*NR-NL+1)", "NR-1"),
            ("CL2", "max(0,3*NR-2*CL1-NL)", "NR-CL1-1"),
            ("g", "2-delta(CL1,0)", "2*min(CL1,NR-CL1)+pos(NR-2*CL1)"),
        ],
        "n+CL2+g-1",
        "(NR-CL1-CL2)/(NR-CL1)*perm01(CL1,NR-CL1,g)*comp(NL-CL1,NR-CL1,CL2)",
    ));
    v.push(part(
        "a1.2",
        1,
        (C, B),
        None,
        &[("CL", "1+floorh(NR)", "min(NR,NL-1)-1"), cl1, cl2, g, ("r", "max(0,CL-NR+g-1)", "min(2*CL-NR-1,g-1)")],
        "CL2+NL-CL+r",
        "(CL-CL1-CL2)/(CL-CL1)*perm01(CL1,CL-CL1,g)*place(CL-1,2*CL-NR-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)",
    ));
    v.push(part(
        "a1.3",
        1,
        (C, C),
        None,
        &[
            ("CL", "2", "min(NL,NR)-2"),
            cl1,
            cl2,
            ("CR1", "max(1,2*CL-NR+1)", "CL-1"),
            ("CR2", "max(0,3*CL-2*CR1-NR)", "CL-CR1-1"),
            g,
            ("r", "max(0,CR1-CL+g-1)", "min(CR1-1,g-1)"),
        ],
        "n+CL2+CR2+r",
        "(CL-CL1-CL2)/(CL-CL1)*perm01(CL1,CL-CL1,g)*place(CL-1,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1,CR2)",
    ));
}

// Final moves R R L.
fn a2(v: &mut Vec<PartSpec>) {
    let cr1 = ("CR1", "max(1,2*CL-NR+1)", "CL-1");
    let cr2 = ("CR2", "max(0,3*CL-2*CR1-NR)", "CL-CR1-1");
    let cl2 = ("CL2", "max(0,3*CL-2*CL1-NL)", "CL-CL1-1");
    let g_bi = ("g", "2", "2*min(2*CL-NL-1,NL-CL)+pos(3*CL-2*NL-1)");
    let g_bii = ("g", "2-delta(2*CL,NL+1)", "2*min(2*CL-NL-1,NL-CL)+pos(2*NL-3*CL+1)");
    let g_cii = ("g", "2-delta(CL1,1)", "2*min(CL1-1,CL-CL1)+pos(CL-2*CL1+1)");

    v.push(part("a2.i.1", 2, (A, B), Some(SI), &[], "0", "ind(1+floorh(NR),NR-1,NL)*binom(NL-2,2*NL-NR-1)"));
    v.push(part(
        "a2.i.2",
        2,
        (A, C),
        Some(SI),
        &[("CR1", "max(1,2*NL-NR+1)", "NL-1"), ("CR2", "max(0,3*NL-2*CR1-NR)", "NL-CR1-1")],
        "n+CR2",
        "comp(NR-CR1,NL-CR1,CR2)*binom(NL-2,CR1-1)",
    ));
    v.push(part(
        "a2.i.3",
        2,
        (B, B),
        Some(SI),
        &[("CL", "max(ceilh(NL),floorh(NR))+1", "min(NL,NR)-1"), g_bi, ("r", "max(0,CL-NR+g)", "min(2*CL-NR-1,g)")],
        "r",
        "(g-r)/g*perm10(2*CL-NL-1,NL-CL,g)*place(CL-1,2*CL-NR-1,g,r)",
    ));
    v.push(part(
        "a2.i.4",
        2,
        (B, C),
        Some(SI),
        &[("CL", "1+ceilh(NL)", "min(NL,NR-1)-1"), cr1, cr2, g_bi, ("r", "max(0,CR1-CL+g)", "min(CR1-1,g)")],
        "NR-CL+CR2+r",
        "(g-r)/g*perm10(2*CL-NL-1,NL-CL,g)*place(CL-1,CR1-1,g,r)*comp(NR-CR1,CL-CR1,CR2)",
    ));
    v.push(part(
        "a2.i.5",
        2,
        (C, B),
        Some(SI),
        &[
            ("CL", "1+floorh(NR)", "min(NR,NL-1)-1"),
            ("CL1", "max(2,2*CL-NL+1)", "CL-1"),
            cl2,
            ("g", "2", "2*min(CL1-1,CL-CL1)+pos(2*CL1-CL-1)"),
            ("r", "max(0,CL-NR+g)", "min(2*CL-NR-1,g)"),
        ],
        "CL2+NL-CL+r",
        "(g-r)/g*perm10(CL1-1,CL-CL1,g)*place(CL-1,2*CL-NR-1,g,r)*comp(NL-CL1,CL-CL1,CL2)",
    ));
    v.push(part(
        "a2.i.6",
        2,
        (C, C),
        Some(SI),
        &[
            ("CL", "2", "min(NL,NR)-2"),
            ("CL1", "max(1,2*CL-NL+1)", "CL-1"),
            cl2,
            cr1,
            cr2,
            ("g", "2", "2*min(CL1,CL-CL1)+pos(2*CL1-CL-1)"),
            ("r", "max(0,CR1-CL+g)", "min(CR1-1,g)"),
        ],
        "n+CL2+CR2+r",
        "(g-r)/g*perm10(CL1-1,CL-CL1,g)*place(CL-1,CR1-1,g,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1,CR2)",
    ));

    v.push(part(
        "a2.ii.1",
        2,
        (B, B),
        Some(MI),
        &[("CL", "floorh(max(NL,NR))+1", "min(NL,NR)-1"), g_bii, ("r", "max(0,CL-NR+g-1)", "min(2*CL-NR-1,g-1)")],
        "r",
        "(NR-CL-g+r+1)/(CL-g)*perm01(2*CL-NL-1,NL-CL,g)*place(CL-1,2*CL-NR-1,g-1,r)",
    ));
    v.push(part(
        "a2.ii.2",
        2,
        (B, C),
        Some(MI),
        &[("CL", "1+floorh(NL)", "min(NL,NR-1)-1"), cr1, cr2, g_bii, ("r", "max(0,CR1-CL+g-1)", "min(CR1-1,g-1)")],
        "NR-CL+CR2+r",
        "(CL-CR1-g+r+1)/(CL-g)*perm01(2*CL-NL-1,NL-CL,g)*place(CL-1,CR1-1,g-1,r)*comp(NR-CR1,CL-CR1,CR2)",
    ));
    v.push(part(
        "a2.ii.3",
        2,
        (C, B),
        Some(MI),
        &[
            ("CL", "1+floorh(NR)", "min(NR,NL-1)-1"),
            ("CL1", "max(1,2*CL-NL+1)", "CL-1"),
            cl2,
            g_cii,
            ("r", "max(0,CL-NR+g-1)", "min(2*CL-NR-1,g-1)"),
        ],
        "CL2+NL-CL+r",
        "(NR-CL-g+r+1)/(CL-g)*perm01(CL1-1,CL-CL1,g)*place(CL-1,2*CL-NR-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)",
    ));
    v.push(part(
        "a2.ii.4",
        2,
        (C, C),
        Some(MI),
        &[
            ("CL", "2", "min(NL,NR)-2"),
            ("CL1", "max(1,2*CL-NL+1)", "CL-1"),
            cl2,
            cr1,
            cr2,
            g_cii,
            ("r", "max(0,CR1-CL+g-1)", "min(CR1-1,g-1)"),
        ],
        "n+CL2+CR2+r",
        "(CL-CR1-g+r+1)/(CL-g)*perm01(CL1-1,CL-CL1,g)*place(CL-1,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1,CR2)",
    ));
}

// Final moves L R L.
fn a3(v: &mut Vec<PartSpec>) {
    let cl2 = ("CL2", "max(0,3*CL-2*CL1-NL)", "CL-CL1-1");
    let cr1 = ("CR1", "max(2,2*CL-NR+1)", "CL-1");
    let cr2 = ("CR2", "max(0,3*CL-2*CR1-NR)", "CL-CR1-1");
    let g_bi = ("g", "2", "2*min(2*CL-NL-1,NL-CL)+pos(3*CL-2*NL-1)");
    let g_ci = ("g", "2", "2*min(CL1-1,CL-CL1)+pos(2*CL1-CL-1)");
    let g_bii = ("g", "2-delta(2*CL,NL+1)", "2*min(2*CL-NL-1,NL-CL)+pos(2*NL-3*CL+1)");

    v.push(part("a3.i.1", 3, (A, A), Some(SI), &[], "0", "-delta(NL,NR)"));
    v.push(part("a3.i.2", 3, (A, B), Some(SI), &[], "0", "-ind(1+ceilh(NR),NR-1,NL)*binom(NL-2,2*NL-NR-2)"));
    v.push(part(
        "a3.i.3",
        3,
        (B, A),
        Some(SI),
        &[("g", "2", "2*min(2*NR-NL-1,NL-NR)+pos(3*NR-2*NL-1)")],
        "g",
        "ind(1+ceilh(NL),NL-1,NR)*perm10(2*NR-NL-1,NL-NR,g)",
    ));
    v.push(part(
        "a3.i.4",
        3,
        (A, C),
        Some(SI),
        &[("CR1", "max(2,2*NL-NR+1)", "NL-1"), ("CR2", "max(0,3*NL-2*CR1-NR)", "NL-CR1-1")],
        "n+CR2+1",
        "comp(NR-CR1,NL-CR1,CR2)*binom(NL-2,CR1-2)",
    ));
    v.push(part(
        "a3.i.5",
        3,
        (C, A),
        Some(SI),
        &[
            ("CL1", "max(2,2*NR-NL+1)", "NR-1"),
            ("CL2", "max(0,3*NR-2*CL1-NL)", "NR-CL1-1"),
            ("g", "2", "2*min(CL1-1,NR-CL1)+pos(2*CL1-NR-1)"),
        ],
        "n+CL2+g",
        "perm10(CL1-1,NR-CL1,g)*comp(NL-CL1,NR-CL1,CL2)",
    ));
    v.push(part(
        "a3.i.6",
        3,
        (B, B),
        Some(SI),
        &[("CL", "ceilh(max(NL,NR))+1", "min(NL,NR)-1"), g_bi, ("r", "max(0,CL-NR+g)", "min(2*CL-NR-1,g)")],
        "r",
        "r/g*perm10(2*CL-NL-1,NL-CL,g)*place(CL-1,2*CL-NR-1,g,r)",
    ));
    v.push(part(
        "a3.i.7",
        3,
        (B, C),
        Some(SI),
        &[("CL", "1+ceilh(NL)", "min(NL,NR-1)-1"), cr1, cr2, g_bi, ("r", "max(0,CR1-CL+g)", "min(CR1-1,g)")],
        "NR-CL+CR2+r",
        "r/g*perm10(2*CL-NL-1,NL-CL,g)*place(CL-1,CR1-1,g,r)*comp(NR-CR1,CL-CR1,CR2)",
    ));
    v.push(part(
        "a3.i.8",
        3,
        (C, B),
        Some(SI),
        &[
            ("CL", "1+ceilh(NR)", "min(NL-1,NR)-1"),
            ("CL1", "max(2,2*CL-NL+1)", "CL-1"),
            cl2,
            g_ci,
            ("r", "max(0,CL-NR+g)", "min(2*CL-NR-1,g)"),
        ],
        "CL2+NL-CL+r",
        "r/g*perm10(CL1-1,CL-CL1,g)*place(CL-1,2*CL-NR-1,g,r)*comp(NL-CL1,CL-CL1,CL2)",
    ));
    v.push(part(
        "a3.i.9",
        3,
        (C, C),
        Some(SI),
        &[
            ("CL", "3", "min(NL,NR)-2"),
            ("CL1", "max(2,2*CL-NL+1)", "CL-1"),
            cl2,
            cr1,
            cr2,
            g_ci,
            ("r", "max(0,CR1-CL+g)", "min(CR1-1,g)"),
        ],
        "n+CL2+CR2+r",
        "r/g*perm10(CL1-1,CL-CL1,g)*place(CL-1,CR1-1,g,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1,CR2)",
    ));

    v.push(part(
        "a3.ii.1",
        3,
        (B, A),
        Some(MI),
        &[("g", "2-delta(2*NR,NL+1)", "2*min(2*NR-NL-1,NL-NR)+pos(2*NL-3*NR+1)")],
        "g-1",
        "ind(1+floorh(NL),NL-1,NR)*perm01(2*NR-NL-1,NL-NR,g)",
    ));
    v.push(part(
        "a3.ii.2",
        3,
        (C, A),
        Some(MI),
        &[
            ("CL1", "max(1,2*NR-NL+1)", "NR-1"),
            ("CL2", "max(0,3*NR-2*CL1-NL)", "NR-CL1-1"),
            ("g", "2-delta(CL1,1)", "2*min(CL1-1,NR-CL1)+pos(NR-2*CL1+1)"),
        ],
        "n+CL2+g-1",
        "perm01(CL1-1,NR-CL1,g)*comp(NL-CL1,NR-CL1,CL2)",
    ));
    v.push(part(
        "a3.ii.3",
        3,
        (B, B),
        Some(MI),
        &[
            ("CL", "max(floorh(NL),ceilh(NR))+1", "min(NL,NR)-1"),
            g_bii,
            ("r", "max(0,CL-NR+g-1)", "min(2*CL-NR-1,g-1)"),
        ],
        "r",
        "(2*CL-NR-r-1)/(CL-g)*perm01(2*CL-NL-1,NL-CL,g)*place(CL-1,2*CL-NR-1,g-1,r)",
    ));
    v.push(part(
        "a3.ii.4",
        3,
        (C, B),
        Some(MI),
        &[
            ("CL", "1+ceilh(NR)", "min(NR,NL-1)-1"),
            ("CL1", "max(1,2*CL-NL+1)", "CL-1"),
            cl2,
            ("g", "2-delta(CL1,0)", "2*min(CL1-1,CL-CL1)+pos(CL-2*CL1+1)"),
            ("r", "max(0,CL-NR+g-1)", "min(2*CL-NR-1,g-1)"),
        ],
        "CL2+NL-CL+r",
        "(2*CL-NR-r-1)/(CL-g)*perm01(CL1-1,CL-CL1,g)*place(CL-1,2*CL-NR-1,g,r)*comp(NL-CL1,CL-CL1,CL2)",
    ));
    v.push(part(
        "a3.ii.5",
        3,
        (B, C),
        Some(MI),
        &[("CL", "max(3,floorh(NL)+1)", "min(NL,NR-1)-1"), cr1, cr2, g_bii, ("r", "max(0,CR1-CL+g-1)", "min(CR1-1,g-1)")],
        "NR-CL+CR2+r",
        "(CR1-r-1)/(CL-g)*perm01(2*CL-NL-1,NL-CL,g)*place(CL-1,CR1-1,g-1,r)*comp(NR-CR1,CL-CR1,CR2)",
    ));
    v.push(part(
        "a3.ii.6",
        3,
        (C, C),
        Some(MI),
        &[
            ("CL", "3", "min(NL,NR)-2"),
            ("CL1", "max(1,2*CL-NL+1)", "CL-1"),
            cl2,
            cr1,
            cr2,
            ("g", "2-delta(CL1,1)", "2*min(CL1-1,CL-CL1)+pos(CL-2*CL1+1)"),
            ("r", "max(0,CR1-CL+g-1)", "min(CR1-1,g-1)"),
        ],
        "n+CL2+CR2+r",
        "(CR1-r-1)/(CL-g)*perm01(CL1-1,CL-CL1,g)*place(CL-1,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1,CR2)",
    ));
}

// Final moves L L R.
fn a4(v: &mut Vec<PartSpec>) {
    let cl1 = ("CL1", "max(0,2*CL-NL+1)", "CL-1");
    let cl2 = ("CL2", "max(0,3*CL-2*CL1-NL)", "CL-CL1-1");
    let cr1 = ("CR1", "max(2,2*CL-NR+3)", "CL");
    let cr2 = ("CR2", "max(0,3*CL-2*CR1-NR+3)", "CL-CR1");
    let g_b = ("g", "2-delta(2*CL,NL)", "2*min(2*CL-NL,NL-CL)+pos(2*NL-3*CL)");
    let g_c = ("g", "2-delta(CL1,0)", "2*min(CL1,CL-CL1)+pos(CL-2*CL1)");
    let r_b = ("r", "max(0,CL-NR+g)", "min(2*CL-NR+1,g-1)");
    let r_c = ("r", "max(0,CR1-CL+g-2)", "min(CR1-1,g-1)");

    v.push(part(
        "a4.1",
        4,
        (B, A),
        None,
        &[("g", "2-delta(2*NR,NL+2)", "2*min(2*NR-NL-2,NL-NR+1)+pos(2*NL-3*NR+3)")],
        "g-1",
        "ind(ceilh(NL)+1,NL,NR)*perm01(2*NR-NL-2,NL-NR+1,g)",
    ));
    v.push(part(
        "a4.2",
        4,
        (C, A),
        None,
        &[
            ("CL1", "max(0,2*NR-NL-1)", "NR-2"),
            ("CL2", "max(0,3*NR-2*CL1-NL-3)", "NR-CL1-2"),
            ("g", "2-delta(CL1,0)", "2*min(CL1,NR-CL1-1)+pos(NR-2*CL1-1)"),
        ],
        "n+CL2+g",
        "perm01(CL1,NR-CL1-1,g)*comp(NL-CL1,NR-CL1-1,CL2)",
    ));
    v.push(part(
        "a4.3",
        4,
        (B, B),
        None,
        &[("CL", "ceilh(max(NL,NR))", "min(NL,NR-1)-1"), g_b, r_b],
        "r",
        "(2*CL-NR-r+1)/(CL-g+1)*perm01(2*CL-NL,NL-CL,g)*place(CL,2*CL-NR+1,g-1,r)",
    ));
    v.push(part(
        "a4.4",
        4,
        (C, B),
        None,
        &[("CL", "ceilh(NR)", "min(NL,NR)-2"), cl1, cl2, g_c, r_b],
        "CL2+NL-CL+r",
        "(2*CL-NR-r+1)/(CL-g+1)*perm01(CL1,CL-CL1,g)*place(CL,2*CL-NR+1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)",
    ));
    v.push(part(
        "a4.5",
        4,
        (B, C),
        None,
        &[("CL", "max(2,ceilh(NL))", "min(NL,NR-2)-1"), cr1, cr2, g_b, r_c],
        "NR-CL+CR2+r+1",
        "(CR1-r-1)/(CL-g+1)*perm01(2*CL-NL,NL-CL,g)*place(CL,CR1-1,g-1,r)*comp(NR-CR1,CL-CR1+1,CR2)",
    ));
    v.push(part(
        "a4.6",
        4,
        (C, C),
        None,
        &[("CL", "2", "min(NL-2,NR-3)"), cl1, cl2, cr1, cr2, g_c, r_c],
        "n+CL2+CR2+r+1",
        "(CR1-r-1)/(CL-g+1)*perm01(CL1,CL-CL1,g)*place(CL,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1,CR2)",
    ));
}

// Final moves R L R.
fn a5(v: &mut Vec<PartSpec>) {
    let cl2 = ("CL2", "max(0,3*CL-2*CL1-NL)", "CL-CL1-1");
    let cr1 = ("CR1", "max(2,2*CL-NR+3)", "CL");
    let cr2 = ("CR2", "max(0,3*CL-2*CR1-NR+3)", "CL-CR1");
    let g_b = ("g", "2", "2*min(2*CL-NL,NL-CL)+pos(3*CL-2*NL)");
    let g_c = ("g", "2", "2*min(CL1,CL-CL1)+pos(2*CL1-CL)");
    let r_b = ("r", "max(0,CL-NR+g)", "min(2*CL-NR+1,g-1)");
    let r_c = ("r", "max(0,CR1-CL+g-2)", "min(CR1-1,g-1)");

    v.push(part("a5.1", 5, (A, A), None, &[], "0", "delta(NL,NR-1)"));
    v.push(part("a5.2", 5, (A, B), None, &[], "0", "ind(ceilh(NR),NR-2,NL)*(2*NL-NR+1)/NL*binom(NL,2*NL-NR+1)"));
    v.push(part(
        "a5.3",
        5,
        (B, A),
        None,
        &[("g", "2", "2*min(2*NR-NL-2,NL-NR+1)+pos(3*NR-2*NL-3)")],
        "g-1",
        "ind(2+floorh(NL),NL,NR)*perm10(2*NR-NL-2,NL-NR+1,g)",
    ));
    v.push(part(
        "a5.4",
        5,
        (A, C),
        None,
        &[("CR1", "max(2,2*NL-NR+3)", "NL"), ("CR2", "max(0,3*NL-2*CR1-NR+3)", "NL-CR1")],
        "n+CR2+1",
        "(CR1-1)/NL*comp(NR-CR1,NL-CR1+1,CR2)*binom(NL,CR1-1)",
    ));
    v.push(part(
        "a5.5",
        5,
        (C, A),
        None,
        &[
            ("CL1", "max(1,2*NR-NL+1)", "NR-2"),
            ("CL2", "max(0,3*NR-2*CL1-NL-3)", "NR-CL1-2"),
            ("g", "2", "2*min(CL1,NR-CL1-1)+pos(2*CL1-NR+1)"),
        ],
        "n+CL2+g",
        "perm10(CL1,NR-CL1-1,g)*comp(NL-CL1,NR-CL1-1,CL2)",
    ));
    v.push(part(
        "a5.6",
        5,
        (B, B),
        None,
        &[("CL", "ceilh(max(NL+1,NR))", "min(NL,NR-1)-1"), g_b, r_b],
        "r",
        "(2*CL-NR-r+1)/(CL-g+1)*perm10(2*CL-NL,NL-CL,g)*place(CL,2*CL-NR+1,g-1,r)",
    ));
    v.push(part(
        "a5.7",
        5,
        (B, C),
        None,
        &[("CL", "1+floorh(NL)", "min(NL,NR-2)-1"), cr1, cr2, g_b, r_c],
        "NR-CL+CR2+r+1",
        "(CR1-r-1)/(CL-g+1)*perm10(2*CL-NL,NL-CL,g)*place(CL,CR1-1,g-1,r)*comp(NR-CR1,CL-CR1+1,CR2)",
    ));
    v.push(part(
        "a5.8",
        5,
        (C, B),
        None,
        &[("CL", "ceilh(NR)", "min(NL,NR)-2"), ("CL1", "max(1,2*CL-NL+1)", "CL-1"), cl2, g_c, r_b],
        "CL2+NL-CL+r",
        "(2*CL-NR-r+1)/(CL-g+1)*perm10(CL1,CL-CL1,g)*place(CL,2*CL-NR+1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)",
    ));
    v.push(part(
        "a5.9",
        5,
        (C, C),
        None,
        &[("CL", "2", "min(NL,NR-1)-2"), ("CL1", "max(1,2*CL-NL+1)", "CL-1"), cl2, cr1, cr2, g_c, r_c],
        "n+CL2+CR2+r+1",
        "(CR1-r-1)/(CL-g+1)*perm10(CL1,CL-CL1,g)*place(CL,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1+1,CR2)",
    ));
}

// Final moves L R R.
fn a6(v: &mut Vec<PartSpec>) {
    let cl1 = ("CL1", "max(0,2*CL-NL+1)", "CL-1");
    let cl2 = ("CL2", "max(0,3*CL-2*CL1-NL)", "CL-CL1-1");
    let cr1 = ("CR1", "max(1,2*CL-NR+3)", "CL-1");
    let cr2 = ("CR2", "max(1,3*CL-2*CR1-NR+3)", "CL-CR1");
    let g_b = ("g", "2-delta(2*CL,NL)", "2*min(2*CL-NL,NL-CL)+1-delta(2*CL-NL,NL-CL)");
    let g_c = ("g", "2-delta(CL1,0)", "2*min(CL1,CL-CL1)+1-delta(CL1,CL-CL1)");
    let r_c = ("r", "max(0,CR1-CL+g-2)", "min(CR1-1,g-1)");

    v.push(part("a6.1", 6, (A, B), None, &[], "0", "ind(floorh(NR),NR-2,NL)*(NR-NL-1)/NL*binom(NL,2*NL-NR+1)"));
    v.push(part(
        "a6.2",
        6,
        (A, C),
        None,
        &[("CR1", "max(1,2*NL-NR+3)", "NL-1"), ("CR2", "max(1,3*NL-2*CR1-NR+3)", "NL-CR1")],
        "n+CR2+1",
        "CR2/NL*comp(NR-CR1,NL-CR1+1,CR2)*binom(NL,CR1-1)",
    ));
    v.push(part(
        "a6.3",
        6,
        (B, B),
        None,
        &[
            ("CL", "max(ceilh(NL),floorh(NR))", "min(NL,NR-1)-1"),
            g_b,
            ("r", "max(0,CL-NR+g+1)", "min(2*CL-NR+1,g-1)"),
        ],
        "r",
        "(NR-CL-g+r)/(CL-g+1)*perm11(2*CL-NL,NL-CL,g)*place(CL,2*CL-NR+1,g-1,r)",
    ));
    v.push(part(
        "a6.4",
        6,
        (B, C),
        None,
        &[("CL", "max(2,ceilh(NL))", "min(NL,NR-3)-1"), cr1, cr2, g_b, r_c],
        "NR-CL+CR2+r+1",
        "(CL-CR1-g+r+2)*CR2/((CL-g+1)*(CL-CR1+1))*perm11(2*CL-NL,NL-CL,g)*place(CL,CR1-1,g-1,r)*comp(NR-CR1,CL-CR1+1,CR2)",
    ));
    v.push(part(
        "a6.5",
        6,
        (C, B),
        None,
        &[("CL", "floorh(NR)", "min(NL,NR)-2"), cl1, cl2, g_c, ("r", "max(0,CL-NR+g)", "min(2*CL-NR+1,g-1)")],
        "CL2+NL-CL+r",
        "(NR-CL-g+r)/(CL-g+1)*perm11(CL1,CL-CL1,g)*place(CL,2*CL-NR+1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)",
    ));
    v.push(part(
        "a6.6",
        6,
        (C, C),
        None,
        &[("CL", "2", "min(NL,NR-2)-2"), cl1, cl2, cr1, cr2, g_c, r_c],
        "n+CL2+CR2+r+1",
        "(CL-CR1-g+r+2)*CR2/((CL-g+1)*(CL-CR1+1))*perm11(CL1,CL-CL1,g)*place(CL,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1+1,CR2)",
    ));
}

// Final moves R R R.
fn a7(v: &mut Vec<PartSpec>) {
    let cr1 = ("CR1", "max(1,2*CL-NR+3)", "CL");
    let cr2 = ("CR2", "max(0,3*CL-2*CR1-NR+3)", "CL-CR1");
    let r = ("r", "max(0,CR1-CL+g-2)", "min(CR1-1,g-1)");
    v.push(part(
        "a7.1",
        7,
        (A, C),
        None,
        &[("CR1", "max(1,2*NL-NR+3)", "NL"), ("CR2", "max(0,3*NL-2*CR1-NR+3)", "NL-CR1")],
        "n+CR2+1",
        "(NL-CR1-CR2+1)/NL*comp(NR-CR1,NL-CR1+1,CR2)*binom(NL,CR1-1)",
    ));
    v.push(part(
        "a7.2",
        7,
        (B, C),
        None,
        &[
            ("CL", "ceilh(NL)", "min(NL,NR-2)-1"),
            cr1,
            cr2,
            ("g", "2-delta(2*CL,NL)", "2*min(2*CL-NL,NL-CL)+1-delta(2*CL-NL,NL-CL)"),
            r,
        ],
        "NR-CL+CR2+r+1",
        "(CL-CR1-g+r+2)/(CL-g+1)*(CL-CR1-CR2+1)/(CL-CR1+1)*perm11(2*CL-NL,NL-CL,g)*place(CL,CR1-1,g-1,r)*comp(NR-CR1,CL-CR1+1,CR2)",
    ));
    v.push(part(
        "a7.3",
        7,
        (C, C),
        None,
        &[
            ("CL", "1", "min(NL,NR-1)-2"),
            ("CL1", "max(0,2*CL-NL+1)", "CL-1"),
            ("CL2", "max(0,3*CL-2*CL1-NL)", "CL-CL1-1"),
            cr1,
            cr2,
            ("g", "2-delta(CL1,0)", "2*min(CL1,CL-CL1)+1-delta(CL1,CL-CL1)"),
            r,
        ],
        "n+CL2+CR2+r+1",
        "(CL-CR1-g+r+2)/(CL-g+1)*(CL-CR1-CR2+1)/(CL-CR1+1)*perm11(CL1,CL-CL1,g)*place(CL,CR1-1,g-1,r)*comp(NL-CL1,CL-CL1,CL2)*comp(NR-CR1,CL-CR1+1,CR2)",
    ));
}

/// Literal parts with every [`CORRECTIONS`] entry applied.
pub fn corrected_parts() -> Vec<PartSpec> {
    let mut parts = literal_parts();
    for c in CORRECTIONS {
        let p = parts.iter_mut().find(|p| p.id == c.part).expect("correction names a known part");
        let slot = p.field_mut(c.field).expect("correction names an existing field");
        assert_eq!(slot, c.published, "correction for {} does not match the transcription", c.part);
        *slot = c.corrected.to_string();
    }
    parts
}
