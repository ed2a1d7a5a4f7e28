//! Simplicial formal C-maps on ordered complexes of dimension at most 3.
//!
//! Simplices are stored with their vertices sorted by the vertex order. In a
//! triangle (v₀, v₁, v₂) edge i is the one opposite vᵢ, so the boundary
//! condition reads p₁ = ∂c·p₂·p₀ when c is read from v₀.

use std::collections::HashMap;

use super::{ElementaryPiece, FormalError, LabeledCell};
use crate::crossed_modules::CrossedModule;
use crate::groups::{Elem, FiniteGroup};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    order: Vec<usize>,
    rank: Vec<usize>,
    edges: Vec<[usize; 2]>,
    triangles: Vec<[usize; 3]>,
    tetrahedra: Vec<[usize; 4]>,
    edge_index: HashMap<[usize; 2], usize>,
    tri_index: HashMap<[usize; 3], usize>,
}

impl SimplicialComplex {
    /// `order` lists every vertex once, least first.
    pub fn new(
        vertices: usize,
        order: Vec<usize>,
        edges: Vec<Vec<usize>>,
        triangles: Vec<Vec<usize>>,
        tetrahedra: Vec<Vec<usize>>,
    ) -> Result<Self, FormalError> {
        let bad = |s: String| Err(FormalError::Malformed(s));
        let mut rank = vec![usize::MAX; vertices];
        if order.len() != vertices {
            return bad(format!(
                "order lists {} of {vertices} vertices",
                order.len()
            ));
        }
        for (i, &v) in order.iter().enumerate() {
            if v >= vertices || rank[v] != usize::MAX {
                return bad(format!("order entry {v} is out of range or repeated"));
            }
            rank[v] = i;
        }
        fn sorted<const N: usize>(s: &[usize], rank: &[usize]) -> Result<[usize; N], FormalError> {
            let mut out: [usize; N] = s.try_into().map_err(|_| {
                FormalError::Malformed(format!("simplex {s:?} should have {N} vertices"))
            })?;
            if out.iter().any(|&v| v >= rank.len()) {
                return Err(FormalError::Malformed(format!(
                    "simplex {s:?} has an unknown vertex"
                )));
            }
            out.sort_by_key(|&v| rank[v]);
            if out.windows(2).any(|w| w[0] == w[1]) {
                return Err(FormalError::Malformed(format!(
                    "simplex {s:?} repeats a vertex"
                )));
            }
            Ok(out)
        }
        let edges: Vec<[usize; 2]> = edges
            .iter()
            .map(|s| sorted(s, &rank))
            .collect::<Result<_, _>>()?;
        let triangles: Vec<[usize; 3]> = triangles
            .iter()
            .map(|s| sorted(s, &rank))
            .collect::<Result<_, _>>()?;
        let tetrahedra: Vec<[usize; 4]> = tetrahedra
            .iter()
            .map(|s| sorted(s, &rank))
            .collect::<Result<_, _>>()?;
        let mut edge_index = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            if edge_index.insert(*e, i).is_some() {
                return bad(format!("edge {e:?} listed twice"));
            }
        }
        let mut tri_index = HashMap::new();
        for (i, t) in triangles.iter().enumerate() {
            if tri_index.insert(*t, i).is_some() {
                return bad(format!("triangle {t:?} listed twice"));
            }
            for f in tri_faces(t) {
                if !edge_index.contains_key(&f) {
                    return bad(format!("edge {f:?} of triangle {t:?} is missing"));
                }
            }
        }
        for t in &tetrahedra {
            for f in tet_faces(t) {
                if !tri_index.contains_key(&f) {
                    return bad(format!("face {f:?} of tetrahedron {t:?} is missing"));
                }
            }
        }
        Ok(SimplicialComplex {
            vertices,
            order,
            rank,
            edges,
            triangles,
            tetrahedra,
            edge_index,
            tri_index,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn tetrahedra(&self) -> &[[usize; 4]] {
        &self.tetrahedra
    }

    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.rank[u] < self.rank[v]
    }

    /// Index of the edge {u, v}, in either orientation.
    pub fn edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = if self.precedes(u, v) { [u, v] } else { [v, u] };
        self.edge_index.get(&key).copied()
    }

    pub fn triangle(&self, vs: [usize; 3]) -> Option<usize> {
        let mut key = vs;
        key.sort_by_key(|&v| self.rank[v]);
        self.tri_index.get(&key).copied()
    }
}

/// Faces opposite v₀, v₁, v₂.
fn tri_faces(t: &[usize; 3]) -> [[usize; 2]; 3] {
    [[t[1], t[2]], [t[0], t[2]], [t[0], t[1]]]
}

/// Faces opposite v₀, …, v₃.
fn tet_faces(t: &[usize; 4]) -> [[usize; 3]; 4] {
    [
        [t[1], t[2], t[3]],
        [t[0], t[2], t[3]],
        [t[0], t[1], t[3]],
        [t[0], t[1], t[2]],
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialFormalMap {
    pub complex: SimplicialComplex,
    pub edge_labels: Vec<Elem>,
    pub tri_labels: Vec<Elem>,
    /// Vertex from which each triangle's label is read.
    pub start_vertices: Vec<usize>,
}

impl SimplicialFormalMap {
    pub fn new(
        cm: &CrossedModule,
        complex: SimplicialComplex,
        edge_labels: Vec<Elem>,
        tri_labels: Vec<Elem>,
        start_vertices: Vec<usize>,
    ) -> Result<Self, FormalError> {
        if edge_labels.len() != complex.edges.len() || tri_labels.len() != complex.triangles.len() {
            return Err(FormalError::Malformed(
                "one label per edge and per triangle is required".into(),
            ));
        }
        if start_vertices.len() != complex.triangles.len() {
            return Err(FormalError::Malformed(
                "one start vertex per triangle is required".into(),
            ));
        }
        if let Some(&g) = edge_labels.iter().find(|&&g| g >= cm.base().order()) {
            return Err(FormalError::IndexOutOfRange {
                what: "P",
                index: g,
            });
        }
        if let Some(&c) = tri_labels.iter().find(|&&c| c >= cm.top().order()) {
            return Err(FormalError::IndexOutOfRange {
                what: "C",
                index: c,
            });
        }
        for (t, s) in complex.triangles.iter().zip(&start_vertices) {
            if !t.contains(s) {
                return Err(FormalError::Malformed(format!(
                    "start vertex {s} is not in triangle {t:?}"
                )));
            }
        }
        Ok(SimplicialFormalMap {
            complex,
            edge_labels,
            tri_labels,
            start_vertices,
        })
    }

    /// Edges from a vertex potential, x_u⁻¹·x_v on u → v, and every triangle labelled 1.
    pub fn identity_labeled(
        p: &FiniteGroup,
        complex: SimplicialComplex,
        potential: &[Elem],
    ) -> Self {
        assert_eq!(
            potential.len(),
            complex.vertices,
            "one potential value per vertex"
        );
        let edge_labels = complex
            .edges
            .iter()
            .map(|&[u, v]| p.mul(p.inv(potential[u]), potential[v]))
            .collect();
        let tri_labels = vec![0; complex.triangles.len()];
        let start_vertices = complex.triangles.iter().map(|t| t[0]).collect();
        SimplicialFormalMap {
            complex,
            edge_labels,
            tri_labels,
            start_vertices,
        }
    }

    /// Label of the edge u → v, in increasing order.
    pub fn edge_label(&self, u: usize, v: usize) -> Elem {
        let e = self.complex.edge(u, v).expect("edge present");
        self.edge_labels[e]
    }

    /// The label of triangle `t` as read from its least vertex.
    pub fn normalized_label(&self, cm: &CrossedModule, t: usize) -> Elem {
        let [v0, v1, v2] = self.complex.triangles[t];
        let c = self.tri_labels[t];
        let s = self.start_vertices[t];
        if s == v0 {
            c
        } else if s == v1 {
            cm.act(self.edge_label(v0, v1), c)
        } else {
            cm.act(self.edge_label(v0, v2), c)
        }
    }

    fn set_triangle(&mut self, t: usize, c: Elem) {
        self.tri_labels[t] = c;
        self.start_vertices[t] = self.complex.triangles[t][0];
    }

    fn set_edge(&mut self, u: usize, v: usize, g: Elem) {
        let e = self.complex.edge(u, v).expect("edge present");
        self.edge_labels[e] = g;
    }
}

/// Lists every triangle failing the boundary condition and every tetrahedron
/// failing the cocycle condition c₂·^{p₀₁}c₀ = c₁·c₃.
pub fn validate_simplicial(cm: &CrossedModule, m: &SimplicialFormalMap) -> Report {
    let (c_grp, p) = (cm.top(), cm.base());
    let mut report = Report::new("simplicial formal map");
    {
        let mut ax = report.axiom("boundary", "boundary condition ∂c = p₁·p₀⁻¹·p₂⁻¹");
        for (t, tri) in m.complex.triangles.iter().enumerate() {
            let [v0, v1, v2] = *tri;
            let (p0, p1, p2) = (
                m.edge_label(v1, v2),
                m.edge_label(v0, v2),
                m.edge_label(v0, v1),
            );
            let c = m.normalized_label(cm, t);
            let rhs = p.product(&[p1, p.inv(p0), p.inv(p2)]);
            ax.check(cm.d(c) == rhs, || {
                (
                    format!("triangle {tri:?}"),
                    format!(
                        "∂c = {} but p₁·p₀⁻¹·p₂⁻¹ = {}",
                        p.name(cm.d(c)),
                        p.name(rhs)
                    ),
                )
            });
        }
    }
    let mut ax = report.axiom("cocycle", "cocycle condition c₂·^{p₀₁}c₀ = c₁·c₃");
    for tet in &m.complex.tetrahedra {
        let faces = tet_faces(tet);
        let c: Vec<Elem> = faces
            .iter()
            .map(|f| m.normalized_label(cm, m.complex.triangle(*f).expect("face present")))
            .collect();
        let p01 = m.edge_label(tet[0], tet[1]);
        let lhs = c_grp.mul(c[2], cm.act(p01, c[0]));
        let rhs = c_grp.mul(c[1], c[3]);
        ax.check(lhs == rhs, || {
            (
                format!("tetrahedron {tet:?}"),
                format!(
                    "c₂·^{{p₀₁}}c₀ = {} but c₁·c₃ = {}",
                    c_grp.name(lhs),
                    c_grp.name(rhs)
                ),
            )
        });
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// All colour moves to the triangle containing the least vertex.
    ConcentrateUp,
    /// All colour moves to the other triangle.
    ConcentrateDown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination {
    /// The square as one cell from w₀ to w₃ along w₀w₁w₂w₃.
    pub cell: LabeledCell,
    /// The relabelled map, all colour in one triangle.
    pub map: SimplicialFormalMap,
}

/// Combines two triangles sharing an edge into one square cell.
///
/// With the four vertices ordered w₀ < w₁ < w₂ < w₃, the supported squares
/// have diagonal w₀w₂ (triangles w₀w₁w₂, w₀w₂w₃) or diagonal w₁w₃
/// (triangles w₀w₁w₃, w₁w₂w₃).
pub fn combine_triangles(
    cm: &CrossedModule,
    m: &SimplicialFormalMap,
    t1: usize,
    t2: usize,
    mode: CombineMode,
) -> Result<Combination, FormalError> {
    let tris = &m.complex.triangles;
    if t1 >= tris.len() || t2 >= tris.len() {
        return Err(FormalError::IndexOutOfRange {
            what: "triangle",
            index: t1.max(t2),
        });
    }
    let (a, b) = (tris[t1], tris[t2]);
    let shared = a.iter().filter(|v| b.contains(v)).count();
    if t1 == t2 || shared != 2 {
        return Err(FormalError::NotAdjacent(t1, t2));
    }
    let mut w: Vec<usize> = a.to_vec();
    w.extend(b.iter().filter(|v| !a.contains(v)));
    w.sort_by_key(|&v| m.complex.rank[v]);
    let (c_grp, p) = (cm.top(), cm.base());
    let e = |u: usize, v: usize| m.edge_label(u, v);
    let path = p.product(&[e(w[0], w[1]), e(w[1], w[2]), e(w[2], w[3])]);
    let find = |vs: [usize; 3]| m.complex.triangle(vs).filter(|&t| t == t1 || t == t2);
    let mut out = m.clone();
    let cell;
    if let (Some(upper), Some(lower)) = (find([w[0], w[1], w[2]]), find([w[0], w[2], w[3]])) {
        let (cu, cl) = (m.normalized_label(cm, upper), m.normalized_label(cm, lower));
        let total = c_grp.mul(cl, cu);
        cell = LabeledCell::new(total, path);
        let g12 = p.mul(e(w[0], w[1]), e(w[1], w[2]));
        match mode {
            CombineMode::ConcentrateUp => {
                out.set_triangle(upper, total);
                out.set_triangle(lower, 0);
                out.set_edge(w[0], w[2], p.mul(cm.d(total), g12));
            }
            CombineMode::ConcentrateDown => {
                out.set_triangle(upper, 0);
                out.set_triangle(lower, total);
                out.set_edge(w[0], w[2], g12);
            }
        }
    } else if let (Some(left), Some(right)) = (find([w[0], w[1], w[3]]), find([w[1], w[2], w[3]])) {
        let g = e(w[0], w[1]);
        let (cl, cr) = (m.normalized_label(cm, left), m.normalized_label(cm, right));
        // the right triangle is read from w₁, so its colour is carried back along g
        let total = c_grp.mul(cl, cm.act(g, cr));
        cell = LabeledCell::new(total, path);
        let g23 = p.mul(e(w[1], w[2]), e(w[2], w[3]));
        match mode {
            CombineMode::ConcentrateUp => {
                out.set_triangle(left, total);
                out.set_triangle(right, 0);
                out.set_edge(w[1], w[3], g23);
            }
            CombineMode::ConcentrateDown => {
                let moved = cm.act(p.inv(g), total);
                out.set_triangle(left, 0);
                out.set_triangle(right, moved);
                out.set_edge(w[1], w[3], p.mul(cm.d(moved), g23));
            }
        }
    } else {
        return Err(FormalError::UnsupportedTriangulation(format!(
            "triangles {a:?} and {b:?} do not form a square with diagonal w₀w₂ or w₁w₃"
        )));
    }
    Ok(Combination { cell, map: out })
}

/// Annulus square with vertices 0 = bottom left, 1 = bottom right, 2 = top left,
/// 3 = top right; the vertical sides are glued. Diagonal 0 → 3.
pub fn annulus_rising(
    cm: &CrossedModule,
    g: Elem,
    h: Elem,
    c_tl: Elem,
    c_br: Elem,
) -> SimplicialFormalMap {
    let p = cm.base();
    let b = p.product(&[cm.d(c_br), g, h]);
    let top = p.product(&[p.inv(h), p.inv(cm.d(c_tl)), b]);
    let complex = SimplicialComplex::new(
        4,
        vec![0, 1, 2, 3],
        vec![vec![0, 1], vec![1, 3], vec![0, 2], vec![2, 3], vec![0, 3]],
        vec![vec![0, 2, 3], vec![0, 1, 3]],
        vec![],
    )
    .expect("annulus square");
    SimplicialFormalMap::new(
        cm,
        complex,
        vec![g, h, h, top, b],
        vec![c_tl, c_br],
        vec![0, 0],
    )
    .expect("annulus labels")
}

/// The same annulus with diagonal 2 → 1; triangle (0, 2, 1) carries `c1`, (2, 1, 3) carries `c2`.
pub fn annulus_falling(
    cm: &CrossedModule,
    g: Elem,
    h: Elem,
    c1: Elem,
    c2: Elem,
) -> SimplicialFormalMap {
    let p = cm.base();
    let b = p.product(&[p.inv(h), p.inv(cm.d(c1)), g]);
    let top = p.product(&[cm.d(c2), b, h]);
    let complex = SimplicialComplex::new(
        4,
        vec![0, 2, 1, 3],
        vec![vec![0, 1], vec![1, 3], vec![0, 2], vec![2, 3], vec![2, 1]],
        vec![vec![0, 2, 1], vec![2, 1, 3]],
        vec![],
    )
    .expect("annulus square");
    SimplicialFormalMap::new(cm, complex, vec![g, h, h, top, b], vec![c1, c2], vec![0, 2])
        .expect("annulus labels")
}

/// Reads a labelled annulus square as the cylinder (Cyl; c*, g, h) from the
/// bottom circle g to the top circle ∂c*·h⁻¹gh.
pub fn annulus_flatten(
    cm: &CrossedModule,
    m: &SimplicialFormalMap,
) -> Result<ElementaryPiece, FormalError> {
    let unsupported = |s: &str| Err(FormalError::UnsupportedTriangulation(s.to_string()));
    let cx = &m.complex;
    if cx.vertices != 4
        || cx.edges.len() != 5
        || cx.triangles.len() != 2
        || !cx.tetrahedra.is_empty()
    {
        return unsupported("an annulus square has 4 vertices, 5 edges and 2 triangles");
    }
    for (u, v) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
        if cx.edge(u, v).is_none() || !cx.precedes(u, v) {
            return unsupported("sides must run 0 → 1, 0 → 2, 1 → 3 and 2 → 3");
        }
    }
    let (c_grp, p) = (cm.top(), cm.base());
    let (g, h, top) = (m.edge_label(0, 1), m.edge_label(0, 2), m.edge_label(2, 3));
    if m.edge_label(1, 3) != h {
        return unsupported("the glued vertical sides carry different labels");
    }
    let c_star = if let (Some(tl), Some(br)) = (cx.triangle([0, 2, 3]), cx.triangle([0, 1, 3])) {
        let (c_tl, c_br) = (m.normalized_label(cm, tl), m.normalized_label(cm, br));
        cm.act(p.inv(h), c_grp.mul(c_grp.inv(c_tl), c_br))
    } else if let (Some(t1), Some(t2)) = (cx.triangle([0, 2, 1]), cx.triangle([2, 1, 3])) {
        if !cx.precedes(2, 1) {
            return unsupported("the falling diagonal must run 2 → 1");
        }
        let (c1, c2) = (m.normalized_label(cm, t1), m.normalized_label(cm, t2));
        c_grp.mul(c2, cm.act(p.inv(h), c_grp.inv(c1)))
    } else {
        return unsupported("triangles are not one of the two annulus diagonals");
    };
    let piece = ElementaryPiece::Cyl { c: c_star, g, h };
    if piece.target(cm) != vec![top] {
        return Err(FormalError::Malformed(
            "annulus labels violate the boundary condition".into(),
        ));
    }
    Ok(piece)
}
