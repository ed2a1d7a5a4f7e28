//! Bounded exhaustive search for crossed algebra morphisms over finite fields.

use super::{check_algebra_morphism, AlgebraError, CrossedAlgebra, CrossedAlgebraMorphism};
use crate::crossed_modules::CrossedModuleMorphism;
use crate::exact_linalg::{Matrix, Scalar};

pub const DEFAULT_SEARCH_BOUND: u128 = 1 << 20;

/// Every morphism L → L′ over f, found by running through all grade-block matrices.
pub fn enumerate_morphisms<F: Scalar>(
    f: &CrossedModuleMorphism,
    source: &CrossedAlgebra<F>,
    target: &CrossedAlgebra<F>,
    bound: u128,
) -> Result<Vec<CrossedAlgebraMorphism<F>>, AlgebraError> {
    let field = F::elements().ok_or(AlgebraError::InfiniteField)?;
    let p = source.crossed_module().base();
    let shapes: Vec<(usize, usize)> = p
        .elements()
        .map(|g| (target.dim(f.f0(g)), source.dim(g)))
        .collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let size = (field.len() as u128).checked_pow(entries as u32);
    match size {
        Some(s) if s <= bound => {}
        _ => {
            return Err(AlgebraError::SearchTooLarge {
                size: format!("{}^{}", field.len(), entries),
                bound,
            })
        }
    }
    let mut digits = vec![0usize; entries];
    let mut found = Vec::new();
    loop {
        let mut it = digits.iter();
        let blocks: Vec<Matrix<F>> = shapes
            .iter()
            .map(|&(r, c)| Matrix::from_fn(r, c, |_, _| field[*it.next().expect("digit")].clone()))
            .collect();
        let m = CrossedAlgebraMorphism::from_parts(f.clone(), blocks, source, target)?;
        if check_algebra_morphism(&m, source, target).passed {
            found.push(m);
        }
        let mut i = 0;
        loop {
            if i == entries {
                return Ok(found);
            }
            digits[i] += 1;
            if digits[i] < field.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
