//! Elementary cobordism pieces and layered cobordism expressions.

use super::circuit::grades_display;
use super::{FormalBoundary, FormalError};
use crate::crossed_modules::CrossedModule;
use crate::groups::Elem;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryPiece {
    /// ∅ → (∂c)
    Disc {
        c: Elem,
    },
    /// (g) → (∂c·h⁻¹gh)
    Cyl {
        c: Elem,
        g: Elem,
        h: Elem,
    },
    /// (g₁, g₂) → (∂c·g₁g₂)
    Pants {
        c: Elem,
        g1: Elem,
        g2: Elem,
    },
    /// (g₁g₂) → (g₁, g₂)
    Copants {
        g1: Elem,
        g2: Elem,
    },
    /// ∅ → (g, g⁻¹)
    Cup {
        g: Elem,
    },
    /// (g, g⁻¹) → ∅
    Cap {
        g: Elem,
    },
    Id {
        g: Elem,
    },
    /// (g₁, g₂) → (g₂, g₁)
    Swap {
        g1: Elem,
        g2: Elem,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieceKind {
    Disc,
    Cyl,
    Pants,
    Copants,
    Cup,
    Cap,
    Id,
    Swap,
}

impl PieceKind {
    pub const ALL: [PieceKind; 8] = [
        PieceKind::Disc,
        PieceKind::Cyl,
        PieceKind::Pants,
        PieceKind::Copants,
        PieceKind::Cup,
        PieceKind::Cap,
        PieceKind::Id,
        PieceKind::Swap,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            PieceKind::Disc => "disc",
            PieceKind::Cyl => "cyl",
            PieceKind::Pants => "pants",
            PieceKind::Copants => "copants",
            PieceKind::Cup => "cup",
            PieceKind::Cap => "cap",
            PieceKind::Id => "id",
            PieceKind::Swap => "swap",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        PieceKind::ALL.into_iter().find(|k| k.tag() == tag)
    }
}

impl ElementaryPiece {
    pub fn kind(&self) -> PieceKind {
        match self {
            ElementaryPiece::Disc { .. } => PieceKind::Disc,
            ElementaryPiece::Cyl { .. } => PieceKind::Cyl,
            ElementaryPiece::Pants { .. } => PieceKind::Pants,
            ElementaryPiece::Copants { .. } => PieceKind::Copants,
            ElementaryPiece::Cup { .. } => PieceKind::Cup,
            ElementaryPiece::Cap { .. } => PieceKind::Cap,
            ElementaryPiece::Id { .. } => PieceKind::Id,
            ElementaryPiece::Swap { .. } => PieceKind::Swap,
        }
    }

    /// C-labels and P-labels carried by the piece.
    pub fn labels(&self) -> (Vec<Elem>, Vec<Elem>) {
        match *self {
            ElementaryPiece::Disc { c } => (vec![c], vec![]),
            ElementaryPiece::Cyl { c, g, h } => (vec![c], vec![g, h]),
            ElementaryPiece::Pants { c, g1, g2 } => (vec![c], vec![g1, g2]),
            ElementaryPiece::Copants { g1, g2 } | ElementaryPiece::Swap { g1, g2 } => {
                (vec![], vec![g1, g2])
            }
            ElementaryPiece::Cup { g } | ElementaryPiece::Cap { g } | ElementaryPiece::Id { g } => {
                (vec![], vec![g])
            }
        }
    }

    pub fn validate(&self, cm: &CrossedModule) -> Result<(), FormalError> {
        let (cs, ps) = self.labels();
        if let Some(&c) = cs.iter().find(|&&c| c >= cm.top().order()) {
            return Err(FormalError::IndexOutOfRange {
                what: "C",
                index: c,
            });
        }
        if let Some(&g) = ps.iter().find(|&&g| g >= cm.base().order()) {
            return Err(FormalError::IndexOutOfRange {
                what: "P",
                index: g,
            });
        }
        Ok(())
    }

    pub fn source(&self, cm: &CrossedModule) -> Vec<Elem> {
        let p = cm.base();
        match *self {
            ElementaryPiece::Disc { .. } | ElementaryPiece::Cup { .. } => vec![],
            ElementaryPiece::Cyl { g, .. } | ElementaryPiece::Id { g } => vec![g],
            ElementaryPiece::Pants { g1, g2, .. } | ElementaryPiece::Swap { g1, g2 } => {
                vec![g1, g2]
            }
            ElementaryPiece::Copants { g1, g2 } => vec![p.mul(g1, g2)],
            ElementaryPiece::Cap { g } => vec![g, p.inv(g)],
        }
    }

    pub fn target(&self, cm: &CrossedModule) -> Vec<Elem> {
        let p = cm.base();
        match *self {
            ElementaryPiece::Disc { c } => vec![cm.d(c)],
            ElementaryPiece::Cyl { c, g, h } => vec![p.product(&[cm.d(c), p.inv(h), g, h])],
            ElementaryPiece::Pants { c, g1, g2 } => vec![p.product(&[cm.d(c), g1, g2])],
            ElementaryPiece::Copants { g1, g2 } => vec![g1, g2],
            ElementaryPiece::Cup { g } => vec![g, p.inv(g)],
            ElementaryPiece::Cap { .. } => vec![],
            ElementaryPiece::Id { g } => vec![g],
            ElementaryPiece::Swap { g1, g2 } => vec![g2, g1],
        }
    }

    pub fn display(&self, cm: &CrossedModule) -> String {
        let (cs, ps) = self.labels();
        let mut args: Vec<&str> = cs.iter().map(|&c| cm.top().name(c)).collect();
        args.extend(ps.iter().map(|&g| cm.base().name(g)));
        format!("{}({})", self.kind().tag(), args.join(", "))
    }
}

/// Layers of pieces placed side by side; consecutive layers glue along
/// single-label circuits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CobordismExpression {
    pub source: FormalBoundary,
    pub layers: Vec<Vec<ElementaryPiece>>,
    pub target: FormalBoundary,
}

impl CobordismExpression {
    pub fn new(
        source: FormalBoundary,
        layers: Vec<Vec<ElementaryPiece>>,
        target: FormalBoundary,
    ) -> Self {
        CobordismExpression {
            source,
            layers,
            target,
        }
    }

    /// No layers; evaluates to the identity.
    pub fn identity(b: FormalBoundary) -> Self {
        CobordismExpression {
            source: b.clone(),
            layers: Vec::new(),
            target: b,
        }
    }

    /// Source from the first layer, target from the last.
    pub fn from_layers(cm: &CrossedModule, layers: Vec<Vec<ElementaryPiece>>) -> Self {
        let ends = |layer: Option<&Vec<ElementaryPiece>>, src: bool| {
            let grades: Vec<Elem> = layer
                .map(|l| {
                    l.iter()
                        .flat_map(|pc| if src { pc.source(cm) } else { pc.target(cm) })
                        .collect()
                })
                .unwrap_or_default();
            FormalBoundary::from_grades(&grades)
        };
        let source = ends(layers.first(), true);
        let target = ends(layers.last(), false);
        CobordismExpression {
            source,
            layers,
            target,
        }
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn source_grades(&self, cm: &CrossedModule) -> Vec<Elem> {
        self.source.grades(cm.base())
    }

    pub fn target_grades(&self, cm: &CrossedModule) -> Vec<Elem> {
        self.target.grades(cm.base())
    }

    /// self then other, glued along self's target.
    pub fn then(
        &self,
        cm: &CrossedModule,
        other: &CobordismExpression,
    ) -> Result<Self, FormalError> {
        let (a, b) = (self.target_grades(cm), other.source_grades(cm));
        if a != b {
            return Err(FormalError::GlueMismatch(format!(
                "{} vs {}",
                grades_display(cm.base(), &a),
                grades_display(cm.base(), &b)
            )));
        }
        let mut layers = self.layers.clone();
        layers.extend(other.layers.iter().cloned());
        Ok(CobordismExpression {
            source: self.source.clone(),
            layers,
            target: other.target.clone(),
        })
    }

    /// Disjoint union, padding the shallower side with identity pieces.
    pub fn beside(&self, cm: &CrossedModule, other: &CobordismExpression) -> Self {
        let depth = self.depth().max(other.depth());
        let padded = |e: &CobordismExpression| -> Vec<Vec<ElementaryPiece>> {
            let mut layers = e.layers.clone();
            let ids: Vec<ElementaryPiece> = e
                .target_grades(cm)
                .into_iter()
                .map(|g| ElementaryPiece::Id { g })
                .collect();
            while layers.len() < depth {
                layers.push(ids.clone());
            }
            layers
        };
        let (l, r) = (padded(self), padded(other));
        let layers = l
            .into_iter()
            .zip(r)
            .map(|(mut a, b)| {
                a.extend(b);
                a
            })
            .collect();
        let mut source = self.source.clone();
        source
            .circuits
            .extend(other.source.circuits.iter().cloned());
        let mut target = self.target.clone();
        target
            .circuits
            .extend(other.target.circuits.iter().cloned());
        CobordismExpression {
            source,
            layers,
            target,
        }
    }
}

fn layer_grades(cm: &CrossedModule, layer: &[ElementaryPiece], src: bool) -> Vec<Elem> {
    layer
        .iter()
        .flat_map(|pc| if src { pc.source(cm) } else { pc.target(cm) })
        .collect()
}

/// Checks that every interface between consecutive layers matches.
pub fn typecheck(cm: &CrossedModule, e: &CobordismExpression) -> Report {
    let p = cm.base();
    let mut report = Report::new("typecheck");
    {
        let mut ax = report.axiom("typecheck", "labels in range");
        for (k, layer) in e.layers.iter().enumerate() {
            for (i, piece) in layer.iter().enumerate() {
                let res = piece.validate(cm);
                ax.check(res.is_ok(), || {
                    (
                        format!("layer {k}, piece {i}"),
                        res.unwrap_err().to_string(),
                    )
                });
            }
        }
        let bad_boundary = e
            .source
            .circuits
            .iter()
            .chain(&e.target.circuits)
            .flat_map(|c| c.labels())
            .find(|&&g| g >= p.order());
        ax.check(bad_boundary.is_none(), || {
            (
                "boundary".into(),
                format!("P index {} out of range", bad_boundary.unwrap()),
            )
        });
    }
    if !report.passed {
        return report;
    }
    let src = e.source_grades(cm);
    let tgt = e.target_grades(cm);
    let mut ax = report.axiom("typecheck", "interfaces match");
    let mut current = src;
    let mut here = "source".to_string();
    for (k, layer) in e.layers.iter().enumerate() {
        let need = layer_grades(cm, layer, true);
        ax.check(current == need, || {
            (
                format!("{here} → layer {k}"),
                format!(
                    "{} does not match piece sources {}",
                    grades_display(p, &current),
                    grades_display(p, &need)
                ),
            )
        });
        current = layer_grades(cm, layer, false);
        here = format!("layer {k}");
    }
    ax.check(current == tgt, || {
        (
            format!("{here} → target"),
            format!(
                "{} does not match declared target {}",
                grades_display(p, &current),
                grades_display(p, &tgt)
            ),
        )
    });
    report
}
