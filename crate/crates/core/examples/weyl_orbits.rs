//! Dominant representatives, reflections and orbit sizes.

use e8jacobi::e8::{dominant_reduce, orbit, orbit_size, DominantWeight, E8Vector, WEYL_ORDER};

fn main() -> e8jacobi::Result<()> {
    let v = E8Vector::from_doubled([3, -1, 1, 1, -1, 1, 1, -1])?;
    let d = dominant_reduce(&v);
    println!("{v} has norm {} and dominant representative {d}", v.norm());

    for i in 1..=8 {
        let w = DominantWeight::w(i);
        println!("orb(w{i}): norm {:>2}, size {:>6}, stabiliser order {}", w.norm(), orbit_size(&w), WEYL_ORDER / orbit_size(&w));
    }

    let roots = orbit(&DominantWeight::w(8))?;
    println!("{} roots, first {} last {}", roots.len(), roots[0], roots[roots.len() - 1]);
    Ok(())
}
