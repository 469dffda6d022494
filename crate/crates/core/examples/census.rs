use tapestry_core::fixtures;
use tapestry_core::reps::{enumerate_representations, EnumOptions};
use tapestry_core::tap::twisted_alexander;
use std::collections::BTreeSet;

fn main() {
    for (g, p) in [(fixtures::kt_simplified(), 5u32), (fixtures::j_minus1(), 7u32), (fixtures::trefoil(), 5u32)] {
        let list = enumerate_representations(&g, p, EnumOptions::default()).unwrap();
        // pair up to a COMMON unit: normalize the denominator, apply the same
        // unit to the numerator, record the numerator exactly (with offsets).
        let mut common: BTreeSet<String> = BTreeSet::new();
        for r in &list.reps {
            let pair = twisted_alexander(&g, r, None).unwrap();
            // both stored canonicalized already: that's (N up to unit, D up to unit).
            // recompute raw dets instead: use column 0 and no canonicalization.
            // twisted_alexander canonicalizes; reconstruct raw via fox directly.
            let k = g.gen_count();
            let n = 2;
            let field = r.field();
            let mut m = tapestry_core::algebra::LaurentMatrix::zero(field, n * (k - 1));
            for (bi, rel) in g.relators.iter().enumerate() {
                let mut bj = 0;
                for col in 1..k {
                    let block = tapestry_core::fox::phi_evaluate(
                        &tapestry_core::fox::fox_derivative(rel, col), r.images()).unwrap();
                    for a in 0..n { for b in 0..n {
                        m.set(bi * n + a, bj * n + b, block.get(a, b).clone());
                    }}
                    bj += 1;
                }
            }
            let raw_num = m.det();
            let xj = tapestry_core::presentation::FreeWord::letter(0, 1);
            let raw_den = tapestry_core::fox::phi_word(&xj, r.images()).unwrap()
                .add(&tapestry_core::algebra::LaurentMatrix::identity(field, n).scale(-1, 0)).unwrap()
                .det();
            // normalize the pair by the denominator's unit only
            let (den_c, (c, kk)) = raw_den.canonicalize_with_unit();
            let c_inv = tapestry_core::algebra::Fp::new(p).unwrap().inv(c).unwrap();
            let num_common = raw_num.mul_unit(c_inv, -kk);
            common.insert(format!("{} || {}", num_common, den_c));
            let _ = pair;
        }
        println!("{} p={}: reps={} common-unit pairs={}", g.name, p, list.count(), common.len());
    }
}
