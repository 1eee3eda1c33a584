use super::{BaseMonomial, Mode, RigMonomial, Symbol};

/// All base monomials of degree at most `max_degree` over `symbols`.
pub fn base_monomials(mode: Mode, symbols: &[Symbol], max_degree: usize) -> Vec<BaseMonomial> {
    let mut out = vec![BaseMonomial::one(mode)];
    let mut layer: Vec<Vec<Symbol>> = vec![Vec::new()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for w in &layer {
            for &s in symbols {
                // commutative monomials are generated with non-increasing letters
                if mode == Mode::Commutative && w.last().is_some_and(|&l| s > l) {
                    continue;
                }
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(
            next.iter()
                .map(|v| BaseMonomial::from_letters(mode, v.clone())),
        );
        layer = next;
    }
    out.sort();
    out
}

/// All rig monomials with total degree at most `max_degree` and at most
/// `max_len` components, θ included.
pub fn monomials_within(
    mode: Mode,
    symbols: &[Symbol],
    max_degree: usize,
    max_len: usize,
) -> Vec<RigMonomial> {
    let bases = base_monomials(mode, symbols, max_degree);
    let mut out = Vec::new();
    let mut current: Vec<BaseMonomial> = Vec::new();
    fn go(
        bases: &[BaseMonomial],
        start: usize,
        degree_left: usize,
        len_left: usize,
        current: &mut Vec<BaseMonomial>,
        out: &mut Vec<RigMonomial>,
    ) {
        out.push(RigMonomial::from_components(current.iter().cloned()));
        if len_left == 0 {
            return;
        }
        for i in start..bases.len() {
            let d = bases[i].degree();
            if d > degree_left {
                // bases are sorted by degree first
                break;
            }
            current.push(bases[i].clone());
            go(bases, i, degree_left - d, len_left - 1, current, out);
            current.pop();
        }
    }
    go(&bases, 0, max_degree, max_len, &mut current, &mut out);
    out
}
