//! Inputs shared by the benchmarks.

use lamcoord::{DynnikovCoords, Signature, TriangleCoords};

pub fn example1() -> TriangleCoords {
    TriangleCoords::new(
        Signature::new(2, 3).unwrap(),
        vec![4, 2, 2, 6],
        vec![2, 6, 8, 4],
        vec![8],
        vec![1, 1],
    )
    .unwrap()
}

pub fn example2_rho() -> DynnikovCoords {
    DynnikovCoords::new(
        Signature::new(2, 2).unwrap(),
        vec![-1],
        vec![2, 0],
        vec![1],
        vec![1, 0],
    )
    .unwrap()
}

/// A lamination with large coordinates on `N_{k,n}`: entries alternate in
/// sign around `±scale`, and each `t_s` is set to `ψ_s` so the tuple lies in
/// the image.
pub fn large(k: i64, n: i64, scale: i64) -> DynnikovCoords {
    let sig = Signature::new(k, n).unwrap();
    let mut flat: Vec<i64> = (0..sig.dynnikov_len() as i64)
        .map(|i| if i % 2 == 0 { scale - i } else { i - scale })
        .collect();
    let rho = DynnikovCoords::from_flat(sig, &flat).unwrap();
    let t_start = sig.s_region_count() + sig.b_count();
    for s in 1..=sig.sprime_region_count() {
        flat[t_start + s - 1] = rho.psi(s);
    }
    DynnikovCoords::from_flat(sig, &flat).unwrap()
}
