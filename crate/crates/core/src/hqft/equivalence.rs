//! Pairs of cobordism expressions related by moves, which τ must identify.

use super::FormalHqft;
use crate::crossed_algebras::first_diff;
use crate::exact_linalg::Scalar;
use crate::formal_maps::{
    whiskering_steps, CobordismExpression, ElementaryPiece, LabeledCell, WhiskerOrder,
};
use crate::report::Report;

pub const FAMILY_DISC_CYL: &str = "(a) disc then cylinder";
pub const FAMILY_PANTS: &str = "(b) pants reduction";
pub const FAMILY_WHISKERING: &str = "(c) whiskering orders";
pub const FAMILY_INNER_PRODUCT: &str = "(d) inner product composites";

use ElementaryPiece::{Cap, Cyl, Disc, Id, Pants};

/// Evaluates both sides of every built-in move over all parameters.
pub fn check_equivalence_invariance<F: Scalar>(tau: &FormalHqft<'_, F>) -> Report {
    let cm = tau.algebra().crossed_module();
    let (c_grp, p) = (cm.top(), cm.base());
    let mut report = Report::new("equivalence invariance");
    let build = |layers: Vec<Vec<ElementaryPiece>>| CobordismExpression::from_layers(cm, layers);
    let mut compare =
        |family: &str,
         axiom: &str,
         items: Vec<(String, CobordismExpression, CobordismExpression)>| {
            let mut ax = report.axiom(family, axiom);
            for (instance, lhs, rhs) in items {
                let (a, b) = (tau.eval_expression(&lhs), tau.eval_expression(&rhs));
                let ok = match (&a, &b) {
                    (Ok(a), Ok(b)) => a.matrix == b.matrix,
                    _ => false,
                };
                ax.check(ok, || {
                    let detail = match (a, b) {
                        (Ok(a), Ok(b)) => match first_diff(&a.matrix, &b.matrix) {
                            Some((r, c)) if r != usize::MAX => format!(
                                "entry ({r}, {c}) is {} on the left and {} on the right",
                                a.matrix.get(r, c).encode(),
                                b.matrix.get(r, c).encode()
                            ),
                            _ => "shapes differ".to_string(),
                        },
                        (Err(e), _) | (_, Err(e)) => e.to_string(),
                    };
                    (instance, detail)
                });
            }
        };

    let mut items = Vec::new();
    for c in c_grp.elements() {
        for h in p.elements() {
            let lhs = build(vec![
                vec![Disc { c }],
                vec![Cyl {
                    c: 0,
                    g: cm.d(c),
                    h,
                }],
            ]);
            let rhs = build(vec![vec![Disc {
                c: cm.act(p.inv(h), c),
            }]]);
            items.push((
                format!("(c, h) = ({}, {})", c_grp.name(c), p.name(h)),
                lhs,
                rhs,
            ));
        }
    }
    compare(
        FAMILY_DISC_CYL,
        "Disc(c) then Cyl(1, ∂c, h) = Disc(^{h⁻¹}c)",
        items,
    );

    let quads: Vec<(usize, usize, usize, usize)> = c_grp
        .elements()
        .flat_map(|c1| c_grp.elements().map(move |c2| (c1, c2)))
        .flat_map(|(c1, c2)| p.elements().map(move |g1| (c1, c2, g1)))
        .flat_map(|(c1, c2, g1)| p.elements().map(move |g2| (c1, c2, g1, g2)))
        .collect();
    let quad_name = |(c1, c2, g1, g2): (usize, usize, usize, usize)| {
        format!(
            "({}, {}, {}, {})",
            c_grp.name(c1),
            c_grp.name(c2),
            p.name(g1),
            p.name(g2)
        )
    };

    let items = quads
        .iter()
        .map(|&(c1, c2, g1, g2)| {
            let lhs = build(vec![
                vec![Cyl { c: c1, g: g1, h: 0 }, Cyl { c: c2, g: g2, h: 0 }],
                vec![Pants {
                    c: 0,
                    g1: p.mul(cm.d(c1), g1),
                    g2: p.mul(cm.d(c2), g2),
                }],
            ]);
            let rhs = build(vec![vec![Pants {
                c: c_grp.mul(c1, cm.act(g1, c2)),
                g1,
                g2,
            }]]);
            (
                format!("(c₁, c₂, g₁, g₂) = {}", quad_name((c1, c2, g1, g2))),
                lhs,
                rhs,
            )
        })
        .collect();
    compare(
        FAMILY_PANTS,
        "cylinders on both legs = Pants(c₁·^{g₁}c₂, g₁, g₂)",
        items,
    );

    let whiskered = |c: usize, g: usize, c2: usize, g2: usize, order: WhiskerOrder| {
        let (first, second) =
            whiskering_steps(cm, LabeledCell::new(c, g), LabeledCell::new(c2, g2), order);
        build(vec![
            vec![Pants { c: 0, g1: g, g2 }],
            vec![Cyl {
                c: first.c,
                g: first.p,
                h: 0,
            }],
            vec![Cyl {
                c: second.c,
                g: second.p,
                h: 0,
            }],
        ])
    };
    let items = quads
        .iter()
        .map(|&(c, c2, g, g2)| {
            (
                format!("(c, c′, p, p′) = {}", quad_name((c, c2, g, g2))),
                whiskered(c, g, c2, g2, WhiskerOrder::LeftFirst),
                whiskered(c, g, c2, g2, WhiskerOrder::RightFirst),
            )
        })
        .collect();
    compare(
        FAMILY_WHISKERING,
        "left-first whiskering = right-first whiskering",
        items,
    );
    let items = quads
        .iter()
        .map(|&(c, c2, g, g2)| {
            let legs = build(vec![
                vec![Cyl { c, g, h: 0 }, Cyl { c: c2, g: g2, h: 0 }],
                vec![Pants {
                    c: 0,
                    g1: p.mul(cm.d(c), g),
                    g2: p.mul(cm.d(c2), g2),
                }],
            ]);
            (
                format!("(c, c′, p, p′) = {}", quad_name((c, c2, g, g2))),
                whiskered(c, g, c2, g2, WhiskerOrder::LeftFirst),
                legs,
            )
        })
        .collect();
    compare(
        FAMILY_WHISKERING,
        "whiskered composite = cells side by side",
        items,
    );

    let mut items = Vec::new();
    for c in c_grp.elements() {
        for g in p.elements() {
            let k = p.inv(p.mul(cm.d(c), g));
            let lhs = build(vec![
                vec![Cyl { c, g, h: 0 }, Id { g: k }],
                vec![Cap { g: p.inv(k) }],
            ]);
            let rhs = build(vec![
                vec![
                    Id { g },
                    Cyl {
                        c: cm.act(p.inv(g), c),
                        g: k,
                        h: 0,
                    },
                ],
                vec![Cap { g }],
            ]);
            items.push((
                format!("(c, g) = ({}, {})", c_grp.name(c), p.name(g)),
                lhs,
                rhs,
            ));
        }
    }
    compare(
        FAMILY_INNER_PRODUCT,
        "ρ(c̃·x, y) = ρ(x, (^{g⁻¹}c)~·y)",
        items,
    );
    report
}
