use super::{check_budget, DominantWeight, E8Vector, DYNKIN, WEYL_ORDER};
use crate::error::Result;
use std::collections::{HashMap, HashSet};
use std::sync::{Arc, LazyLock, Mutex};

/// Simple reflection s_i acting on fundamental-weight coordinates.
#[inline]
pub fn reflect_fw(x: &mut [i32; 8], i: usize) {
    let c = x[i];
    x[i] = -c;
    for &j in DYNKIN[i] {
        x[j] += c;
    }
}

/// Reflect at the first negative coordinate until none is left.
#[inline]
pub fn reduce_fw(mut x: [i32; 8]) -> [i32; 8] {
    while let Some(i) = x.iter().position(|&c| c < 0) {
        reflect_fw(&mut x, i);
    }
    x
}

pub fn dominant_reduce(v: &E8Vector) -> DominantWeight {
    DominantWeight::from_fw_unchecked(reduce_fw(v.fw()))
}

static ORBITS: LazyLock<Mutex<HashMap<[i32; 8], Arc<Vec<[i32; 8]>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Orbit of m in fundamental-weight coordinates (unordered, cached).
pub fn orbit_fw(m: &DominantWeight) -> Result<Arc<Vec<[i32; 8]>>> {
    if let Some(o) = ORBITS.lock().unwrap().get(m.fw()) {
        return Ok(o.clone());
    }
    let size = orbit_size(m);
    check_budget(size as usize)?;
    let start = *m.fw();
    let mut seen: HashSet<[i32; 8]> = HashSet::with_capacity(size as usize);
    seen.insert(start);
    let mut out = vec![start];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        head += 1;
        for i in 0..8 {
            if x[i] != 0 {
                let mut y = x;
                reflect_fw(&mut y, i);
                if seen.insert(y) {
                    out.push(y);
                }
            }
        }
    }
    debug_assert_eq!(out.len() as u64, size);
    let arc = Arc::new(out);
    ORBITS.lock().unwrap().insert(start, arc.clone());
    Ok(arc)
}

/// The full Weyl orbit of m, sorted by doubled coordinates.
pub fn orbit(m: &DominantWeight) -> Result<Vec<E8Vector>> {
    let o = orbit_fw(m)?;
    let mut v: Vec<E8Vector> = o.iter().map(E8Vector::from_fw).collect();
    v.sort_unstable();
    Ok(v)
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Order of the Weyl group of a connected subdiagram of the E8 diagram.
fn component_order(nodes: &[usize]) -> u64 {
    let n = nodes.len() as u64;
    let inside = |a: usize| nodes.contains(&a);
    let degree = |a: usize| DYNKIN[a].iter().filter(|&&b| inside(b)).count();
    let Some(&branch) = nodes.iter().find(|&&a| degree(a) == 3) else {
        return factorial(n + 1);
    };
    let mut arms: Vec<usize> = DYNKIN[branch]
        .iter()
        .map(|&first| {
            let (mut prev, mut cur, mut len) = (branch, first, 1);
            loop {
                let next = DYNKIN[cur].iter().find(|&&b| b != prev && inside(b));
                match next {
                    Some(&b) => {
                        prev = cur;
                        cur = b;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match (arms[0], arms[1], arms[2]) {
        (1, 1, _) => (1u64 << (n - 1)) * factorial(n),
        (1, 2, 2) => 51_840,
        (1, 2, 3) => 2_903_040,
        (1, 2, 4) => WEYL_ORDER,
        a => unreachable!("no subdiagram of E8 has arms {a:?}"),
    }
}

/// |orb(m)| = |W| / |W_J| with J the simple roots orthogonal to m.
pub fn orbit_size(m: &DominantWeight) -> u64 {
    let j: Vec<usize> = (0..8).filter(|&i| m.fw()[i] == 0).collect();
    let mut seen = [false; 8];
    let mut stab = 1u64;
    for &s in &j {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            for &b in DYNKIN[comp[k]] {
                if j.contains(&b) && !seen[b] {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            k += 1;
        }
        stab *= component_order(&comp);
    }
    WEYL_ORDER / stab
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        let a2 = E8Vector::simple_root(1);
        assert_eq!(dominant_reduce(&a2), DominantWeight::w(8));
        let w1 = DominantWeight::w(1);
        assert_eq!(dominant_reduce(&-w1.vector()), w1);
        assert_eq!(dominant_reduce(&DominantWeight::w(8).vector()), DominantWeight::w(8));
    }

    #[test]
    fn small_orbits() {
        assert_eq!(orbit(&DominantWeight::w(8)).unwrap().len(), 240);
        assert_eq!(orbit(&DominantWeight::ZERO).unwrap(), vec![E8Vector::ZERO]);
        assert_eq!(orbit(&DominantWeight::w(1)).unwrap().len(), 2160);
        let roots = orbit(&DominantWeight::w(8)).unwrap();
        assert!(roots.iter().all(|r| r.norm() == 2));
        assert!(roots.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn orbit_size_formula_matches_bfs() {
        let reps: Vec<[i32; 8]> = vec![
            [0; 8],
            [1, 0, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 0, 0, 1],
            [1, 0, 0, 0, 0, 0, 0, 1],
            [0, 1, 0, 0, 0, 0, 0, 1],
            [1, 1, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 1],
            [1, 0, 0, 0, 0, 0, 1, 0],
        ];
        for fw in reps {
            let m = DominantWeight::from_fw(fw).unwrap();
            assert_eq!(orbit_fw(&m).unwrap().len() as u64, orbit_size(&m), "{m}");
        }
    }

    #[test]
    fn generic_orbit_is_regular() {
        let m = DominantWeight::from_fw([1; 8]).unwrap();
        assert_eq!(orbit_size(&m), WEYL_ORDER);
    }

    #[test]
    fn budget_guard() {
        let m = DominantWeight::from_fw([1; 8]).unwrap();
        assert!(orbit(&m).is_err());
    }
}
