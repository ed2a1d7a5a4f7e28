//! Random well-typed cobordism expressions.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::crossed_modules::CrossedModule;
use crate::formal_maps::{CobordismExpression, ElementaryPiece, FormalBoundary};
use crate::groups::Elem;

/// A random expression out of `source` with `depth` layers, never more than
/// `width` circuits at any interface (a source wider than `width` only shrinks).
pub fn random_expression<R: Rng + ?Sized>(
    rng: &mut R,
    cm: &CrossedModule,
    source: &[Elem],
    depth: usize,
    width: usize,
) -> CobordismExpression {
    let (c_grp, p) = (cm.top(), cm.base());
    let mut current = source.to_vec();
    let mut layers = Vec::with_capacity(depth);
    for _ in 0..depth {
        let mut pieces = Vec::new();
        let mut out = 0usize;
        let mut i = 0;
        loop {
            let pending = current.len() - i;
            let room = width.saturating_sub(out + pending);
            if room >= 1 && rng.gen_ratio(1, if pending == 0 { 3 } else { 6 }) {
                let piece = if room >= 2 && rng.gen_bool(0.5) {
                    ElementaryPiece::Cup {
                        g: rng.gen_range(0..p.order()),
                    }
                } else {
                    ElementaryPiece::Disc {
                        c: rng.gen_range(0..c_grp.order()),
                    }
                };
                out += piece.target(cm).len();
                pieces.push(piece);
                continue;
            }
            if pending == 0 {
                break;
            }
            let g = current[i];
            let mut options: Vec<ElementaryPiece> = vec![
                ElementaryPiece::Id { g },
                ElementaryPiece::Cyl {
                    c: rng.gen_range(0..c_grp.order()),
                    g,
                    h: rng.gen_range(0..p.order()),
                },
            ];
            if room >= 1 {
                let g1 = rng.gen_range(0..p.order());
                options.push(ElementaryPiece::Copants {
                    g1,
                    g2: p.mul(p.inv(g1), g),
                });
            }
            if pending >= 2 {
                let g2 = current[i + 1];
                options.push(ElementaryPiece::Pants {
                    c: rng.gen_range(0..c_grp.order()),
                    g1: g,
                    g2,
                });
                options.push(ElementaryPiece::Swap { g1: g, g2 });
                if g2 == p.inv(g) {
                    options.push(ElementaryPiece::Cap { g });
                }
            }
            let piece = *options.choose(rng).expect("nonempty");
            i += piece.source(cm).len();
            out += piece.target(cm).len();
            pieces.push(piece);
        }
        current = pieces.iter().flat_map(|pc| pc.target(cm)).collect();
        layers.push(pieces);
    }
    CobordismExpression::new(
        FormalBoundary::from_grades(source),
        layers,
        FormalBoundary::from_grades(&current),
    )
}
