use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

fn parse_err(spec: &str, message: &str) -> Error {
    Error::Precondition(format!("group spec `{spec}`: {message}"))
}

/// Builds a group from `cyclic(n) | symmetric(n) | alternating(n) |
/// dihedral(2n) | product(spec, spec)`. Products act on the disjoint union
/// of the factors' points.
pub fn construct(spec: &str) -> Result<PermGroup> {
    let spec = spec.trim();
    let (gens, degree) = build(spec)?;
    if degree > 255 {
        return Err(Error::Degree(degree));
    }
    let gens = gens
        .into_iter()
        .map(|img| Permutation::from_images(&img))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

/// One-based image lists and the degree.
type Images = Vec<Vec<usize>>;

fn cycle(points: &[usize], degree: usize) -> Vec<usize> {
    let mut img: Vec<usize> = (1..=degree).collect();
    for (k, &p) in points.iter().enumerate() {
        img[p - 1] = points[(k + 1) % points.len()];
    }
    img
}

fn build(spec: &str) -> Result<(Images, usize)> {
    let open = spec.find('(').ok_or_else(|| parse_err(spec, "expected `name(...)`"))?;
    if !spec.ends_with(')') {
        return Err(parse_err(spec, "missing closing parenthesis"));
    }
    let name = &spec[..open];
    let inner = &spec[open + 1..spec.len() - 1];
    if name == "product" {
        let (a, b) = split_top_comma(inner).ok_or_else(|| parse_err(spec, "product needs two factors"))?;
        let (ga, da) = build(a.trim())?;
        let (gb, db) = build(b.trim())?;
        let d = da + db;
        let mut gens = Vec::new();
        for g in ga {
            let mut img: Vec<usize> = (1..=d).collect();
            img[..da].copy_from_slice(&g);
            gens.push(img);
        }
        for g in gb {
            let mut img: Vec<usize> = (1..=d).collect();
            for (k, &v) in g.iter().enumerate() {
                img[da + k] = da + v;
            }
            gens.push(img);
        }
        return Ok((gens, d));
    }
    let n: usize = inner
        .trim()
        .parse()
        .map_err(|_| parse_err(spec, "expected a positive integer argument"))?;
    if n == 0 {
        return Err(parse_err(spec, "argument must be positive"));
    }
    let all: Vec<usize> = (1..=n).collect();
    match name {
        "cyclic" => Ok((if n > 1 { vec![cycle(&all, n)] } else { vec![] }, n)),
        "symmetric" => {
            let gens = match n {
                1 => vec![],
                2 => vec![cycle(&[1, 2], 2)],
                _ => vec![cycle(&all, n), cycle(&[1, 2], n)],
            };
            Ok((gens, n))
        }
        "alternating" => {
            let gens = (3..=n).map(|i| cycle(&[1, 2, i], n)).collect();
            Ok((gens, n))
        }
        "dihedral" => {
            if !n.is_multiple_of(2) {
                return Err(parse_err(spec, "dihedral order must be even"));
            }
            let k = n / 2;
            match k {
                1 => Ok((vec![cycle(&[1, 2], 2)], 2)),
                2 => Ok((vec![cycle(&[1, 2], 4), cycle(&[3, 4], 4)], 4)),
                _ => {
                    let pts: Vec<usize> = (1..=k).collect();
                    let mut refl: Vec<usize> = (1..=k).collect();
                    for i in 1..=k {
                        // i -> 2 - i mod k, fixing 1
                        refl[i - 1] = (k + 1 - i) % k + 1;
                    }
                    Ok((vec![cycle(&pts, k), refl], k))
                }
            }
        }
        _ => Err(parse_err(spec, "unknown constructor")),
    }
}

fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}
