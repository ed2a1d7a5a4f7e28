//! Oracles shared by the integration tests. Nothing here calls into the
//! library's arithmetic: permutations are composed by hand and linear algebra
//! is a small Gaussian elimination over BigRational.
#![allow(dead_code)]

use crossed_hqft::groups::FiniteGroup;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub const S3_NAMES: [&str; 6] = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
pub const A3_NAMES: [&str; 3] = ["e", "(123)", "(132)"];

/// Images of 1, 2, 3 (stored 0-based) for a cycle-notation name.
pub fn perm(name: &str) -> [usize; 3] {
    let mut p = [0, 1, 2];
    if name == "e" {
        return p;
    }
    let digits: Vec<usize> = name
        .trim_matches(|c| c == '(' || c == ')')
        .chars()
        .map(|c| c.to_digit(10).expect("digit") as usize - 1)
        .collect();
    for i in 0..digits.len() {
        p[digits[i]] = digits[(i + 1) % digits.len()];
    }
    p
}

/// (a·b)(x) = a(b(x))
pub fn perm_mul(a: [usize; 3], b: [usize; 3]) -> [usize; 3] {
    [a[b[0]], a[b[1]], a[b[2]]]
}

pub fn perm_name(p: [usize; 3]) -> String {
    S3_NAMES
        .iter()
        .find(|n| perm(n) == p)
        .expect("every permutation of three points is named")
        .to_string()
}

pub fn s3_mul(a: &str, b: &str) -> String {
    perm_name(perm_mul(perm(a), perm(b)))
}

pub fn s3_prod(names: &[&str]) -> String {
    names.iter().fold("e".to_string(), |acc, n| s3_mul(&acc, n))
}

pub fn s3_inv(a: &str) -> String {
    let p = perm(a);
    let mut q = [0; 3];
    for i in 0..3 {
        q[p[i]] = i;
    }
    perm_name(q)
}

/// p·c·p⁻¹
pub fn s3_conj(p: &str, c: &str) -> String {
    s3_prod(&[p, c, &s3_inv(p)])
}

pub fn sign(a: &str) -> i32 {
    if A3_NAMES.contains(&a) {
        1
    } else {
        -1
    }
}

pub fn idx(g: &FiniteGroup, name: &str) -> usize {
    g.index_of(name)
        .unwrap_or_else(|| panic!("no element {name:?} in {:?}", g.names()))
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Rank of a list of rational row vectors.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = BigRational::one() / m[r][c].clone();
        let pr: Vec<BigRational> = m[r].iter().map(|x| x * &inv).collect();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        m[r] = pr;
        r += 1;
    }
    r
}

/// Dimension of the smallest subspace containing `gens` and closed under
/// every map in `ops`, by naive saturation.
pub fn closure_dim(
    gens: Vec<Vec<BigRational>>,
    ops: &[Box<dyn Fn(&[BigRational]) -> Vec<BigRational>>],
) -> usize {
    let mut span = gens;
    let mut dim = rank(&span);
    loop {
        let mut next = span.clone();
        for v in &span {
            for op in ops {
                next.push(op(v));
            }
        }
        let mut kept: Vec<Vec<BigRational>> = Vec::new();
        for v in next {
            kept.push(v);
            if rank(&kept) < kept.len() {
                kept.pop();
            }
        }
        if kept.len() == dim {
            return dim;
        }
        dim = kept.len();
        span = kept;
    }
}

/// Two-sided ideal of K[S3] generated by e_{ngn⁻¹} − e_g (n ∈ A3) and e_b − e_1
/// (b ∈ A3), closed under left and right multiplication by every e_p.
pub fn ks3_ideal_oracle() -> usize {
    let basis = |name: &str| {
        let mut v = vec![q(0); 6];
        v[S3_NAMES.iter().position(|n| *n == name).unwrap()] = q(1);
        v
    };
    let diff = |a: &str, b: &str| {
        let (x, y) = (basis(a), basis(b));
        x.iter().zip(&y).map(|(a, b)| a - b).collect::<Vec<_>>()
    };
    let mut gens = Vec::new();
    for n in A3_NAMES {
        for g in S3_NAMES {
            gens.push(diff(&s3_conj(n, g), g));
        }
        gens.push(diff(n, "e"));
    }
    let mut ops: Vec<Box<dyn Fn(&[BigRational]) -> Vec<BigRational>>> = Vec::new();
    for p in S3_NAMES {
        for left in [true, false] {
            ops.push(Box::new(move |v: &[BigRational]| {
                let mut out = vec![q(0); 6];
                for (i, x) in v.iter().enumerate() {
                    let prod = if left {
                        s3_mul(p, S3_NAMES[i])
                    } else {
                        s3_mul(S3_NAMES[i], p)
                    };
                    out[S3_NAMES.iter().position(|n| *n == prod).unwrap()] += x;
                }
                out
            }));
        }
    }
    closure_dim(gens, &ops)
}
