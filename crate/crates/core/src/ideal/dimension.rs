/// Size of a smallest variable set meeting every support in `supports`
/// (bitmasks over `nvars` variables). For the leading-term ideal of a
/// Gröbner basis this is the codimension.
pub fn min_transversal(supports: &[u64], nvars: usize) -> usize {
    assert!(nvars <= 64, "at most 64 variables");
    // keep only inclusion-minimal supports
    let mut sets: Vec<u64> = supports.to_vec();
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for s in sets {
        if s == 0 {
            continue;
        }
        if !minimal.iter().any(|&m| m & s == m) {
            minimal.push(s);
        }
    }
    let mut best = nvars.min(minimal.len());
    search(&minimal, 0, 0, &mut best);
    best
}

fn search(sets: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    // first set not yet hit; branch on its variables
    let Some(&open) = sets.iter().find(|&&s| s & chosen == 0) else {
        *best = size;
        return;
    };
    // lower bound: greedy count of pairwise disjoint unhit sets
    let mut used = chosen;
    let mut disjoint = 0;
    for &s in sets {
        if s & used == 0 {
            used |= s;
            disjoint += 1;
        }
    }
    if size + disjoint >= *best {
        return;
    }
    let mut bits = open;
    while bits != 0 {
        let v = bits.trailing_zeros();
        bits &= bits - 1;
        search(sets, chosen | (1 << v), size + 1, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(supports: &[u64], nvars: usize) -> usize {
        (0u64..1 << nvars)
            .filter(|c| supports.iter().all(|&s| s == 0 || s & c != 0))
            .map(|c| c.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn matches_brute_force() {
        let cases: &[&[u64]] = &[
            &[0b1, 0b10],
            &[0b11, 0b110, 0b1100],
            &[0b101, 0b11, 0b110],
            &[0b1111],
            &[],
            &[0b1, 0b11, 0b111, 0b1000, 0b110000, 0b100001],
        ];
        for s in cases {
            assert_eq!(min_transversal(s, 6), brute(s, 6), "{s:?}");
        }
    }

    #[test]
    fn random_against_brute_force() {
        let mut x: u64 = 0x9e3779b97f4a7c15;
        for _ in 0..200 {
            let k = (x % 6) as usize;
            let mut sets = Vec::new();
            for _ in 0..k {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                sets.push(x & 0xff);
            }
            assert_eq!(min_transversal(&sets, 8), brute(&sets, 8));
        }
    }
}
