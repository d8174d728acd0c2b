//! Negative continued fractions and plumbing (resolution) graphs.

use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::linalg::IntMatrix;
use crate::surfaces::genus_of_degree;

/// `n/d = a_0 - 1/(a_1 - 1/(a_2 - ...))` with `a_0 >= 1`, `a_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegContFrac {
    pub numerator: i64,
    pub denominator: i64,
    pub terms: Vec<i64>,
}

impl NegContFrac {
    /// Exact evaluation as a reduced fraction `(numerator, denominator)`.
    pub fn evaluate(terms: &[i64]) -> Option<(i64, i64)> {
        let (&last, rest) = terms.split_last()?;
        let (mut num, mut den) = (last, 1i64);
        for &a in rest.iter().rev() {
            // a - den/num
            let next_num = a.checked_mul(num)?.checked_sub(den)?;
            den = num;
            num = next_num;
        }
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if g == 0 {
            return None;
        }
        Some((num / g, den / g))
    }
}

pub fn negative_continued_fraction(n: i64, d: i64) -> Result<NegContFrac> {
    if n <= 0 || d <= 0 || n.gcd(&d) != 1 {
        return Err(Error::BadFraction {
            numerator: n,
            denominator: d,
        });
    }
    let mut terms = Vec::new();
    let (mut num, mut den) = (n, d);
    while den != 0 {
        let a = Integer::div_ceil(&num, &den);
        terms.push(a);
        (num, den) = (den, a * den - num);
    }
    Ok(NegContFrac {
        numerator: n,
        denominator: d,
        terms,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub genus: u64,
    pub euler_weight: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<u64>,
    pub arrows: u64,
}

impl Vertex {
    pub fn new(genus: u64, euler_weight: i64) -> Self {
        Vertex {
            genus,
            euler_weight,
            multiplicity: None,
            arrows: 0,
        }
    }
}

/// How the two arms hang off the central `-1` curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArmConvention {
    /// The last expansion term is adjacent to the central vertex.
    LastTermInner,
    /// The first non-leading term is adjacent to the central vertex.
    FirstTermInner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<ArmConvention>,
}

impl ResolutionGraph {
    pub fn single(vertex: Vertex) -> Self {
        ResolutionGraph {
            vertices: vec![vertex],
            edges: Vec::new(),
            convention: None,
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Euler weights on the diagonal, `1` per edge.
    pub fn plumbing_matrix(&self) -> IntMatrix {
        let n = self.vertices.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, v) in self.vertices.iter().enumerate() {
            m[(i, i)] = v.euler_weight;
        }
        for &(a, b) in &self.edges {
            m[(a, b)] += 1;
            m[(b, a)] += 1;
        }
        m
    }

    pub fn binding_vector(&self) -> Vec<u64> {
        self.vertices.iter().map(|v| v.arrows).collect()
    }

    /// Graphviz rendering. Vertex labels carry the weight and, for positive
    /// genus, `[g]`; arrowheads are diamond nodes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph resolution {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let label = if v.genus > 0 {
                format!("{} [{}]", v.euler_weight, v.genus)
            } else {
                v.euler_weight.to_string()
            };
            let _ = writeln!(out, "  v{i} [label=\"{label}\"];");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  v{a} -- v{b};");
        }
        for (i, v) in self.vertices.iter().enumerate() {
            for k in 0..v.arrows {
                let _ = writeln!(out, "  a{i}_{k} [shape=diamond,label=\"\"];");
                let _ = writeln!(out, "  v{i} -- a{i}_{k};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The arrowless graph of a plane-curve link plumbs to `S^3` exactly when its
/// plumbing matrix is unimodular. Graphs with positive-genus vertices are
/// never `S^3` plumbings and return `false`.
pub fn validate_s3(graph: &ResolutionGraph) -> bool {
    if graph.vertices.iter().any(|v| v.genus != 0) || !graph.is_connected() {
        return false;
    }
    graph
        .plumbing_matrix()
        .determinant()
        .map(|d| d.abs() == 1.into())
        .unwrap_or(false)
}

fn assemble(central_arrows: u64, multiplicity: Option<u64>, arms: [&[i64]; 2]) -> ResolutionGraph {
    let mut center = Vertex::new(0, -1);
    center.arrows = central_arrows;
    center.multiplicity = multiplicity;
    let mut graph = ResolutionGraph::single(center);
    for arm in arms {
        let mut prev = 0;
        for &a in arm {
            graph.vertices.push(Vertex::new(0, -a));
            let idx = graph.vertices.len() - 1;
            graph.edges.push((prev, idx));
            prev = idx;
        }
    }
    graph
}

/// Embedded resolution graph of `x^p + y^q`: a central `-1` curve carrying
/// the `gcd(p,q)` link components as arrowheads, and two arms read off the
/// expansions of `p'/q'` and `q'/p'` with their leading terms dropped.
pub fn torus_link_resolution_graph(p: i64, q: i64) -> Result<ResolutionGraph> {
    require("p", p, 2)?;
    require("q", q, 2)?;
    let n = p.gcd(&q);
    let (p1, q1) = (p / n, q / n);
    let a = negative_continued_fraction(p1, q1)?;
    let b = negative_continued_fraction(q1, p1)?;
    let multiplicity = (p1 == 1 && q1 == 1).then_some(p as u64);

    for convention in [ArmConvention::LastTermInner, ArmConvention::FirstTermInner] {
        let mut arm_a = a.terms[1..].to_vec();
        let mut arm_b = b.terms[1..].to_vec();
        if convention == ArmConvention::LastTermInner {
            arm_a.reverse();
            arm_b.reverse();
        }
        let mut graph = assemble(n as u64, multiplicity, [&arm_a, &arm_b]);
        if validate_s3(&graph) {
            if graph.vertices.len() > 1 {
                graph.convention = Some(convention);
            }
            return Ok(graph);
        }
    }
    Err(Error::ResolutionValidation { p, q })
}

/// Minimal resolution of `x^p + y^p + z^p`: one curve of genus
/// `(p-1)(p-2)/2` and self-intersection `-p`.
pub fn fermat_resolution_graph(p: i64) -> Result<ResolutionGraph> {
    require("p", p, 2)?;
    Ok(ResolutionGraph::single(Vertex::new(
        genus_of_degree(p as u64),
        -p,
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainParity {
    Even,
    Odd,
}

/// Even: `x^2 + y^{2g+1} + z^{4g+2}`, one genus-`g` curve of square `-1`.
/// Odd: `x^2 + y^{2g+2} + z^{2g+2}`, one genus-`g` curve of square `-2`.
pub fn chain_singularity_resolution(g: u64, parity: ChainParity) -> Result<ResolutionGraph> {
    require("g", g as i64, 1)?;
    let weight = match parity {
        ChainParity::Even => -1,
        ChainParity::Odd => -2,
    };
    Ok(ResolutionGraph::single(Vertex::new(g, weight)))
}
