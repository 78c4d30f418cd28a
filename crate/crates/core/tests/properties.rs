use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superspecial::field::{Field, Fp2, QuadExtField};
use superspecial::genus2::{ProjPoint, SexticModel};
use superspecial::richelot::{quadratic_splittings, richelot_g, richelot_identity_holds, splitting_delta};

const PRIMES: [u64; 9] = [11, 13, 17, 19, 23, 29, 31, 37, 41];

fn elem(f: &QuadExtField, c: (u64, u64)) -> Fp2 {
    f.elem(c.0 as i64, c.1 as i64)
}

fn distinct(pts: &[ProjPoint<Fp2>]) -> bool {
    (0..pts.len()).all(|i| (0..i).all(|j| pts[i] != pts[j]))
}

fn coords() -> impl Strategy<Value = (u64, u64)> {
    (0u64..1000, 0u64..1000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fp2_is_a_field(pi in 0usize..9, a in coords(), b in coords(), c in coords()) {
        let f = QuadExtField::new(PRIMES[pi]).unwrap();
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        if !a.is_zero() {
            prop_assert_eq!(a * a.inv().unwrap(), f.one());
        }
        // every element of F_p is a square in F_p²
        let s = f.from_int(a.c0() as i64).sqrt().unwrap();
        prop_assert_eq!(s * s, f.from_int(a.c0() as i64));
        prop_assert_eq!(a.frobenius().frobenius(), a);
    }

    #[test]
    fn keys_survive_moebius_maps_and_twists(
        pi in 0usize..9,
        roots in prop::collection::vec(coords(), 6),
        m in prop::array::uniform4(coords()),
        twist in coords(),
        at_infinity in any::<bool>(),
    ) {
        let f = QuadExtField::new(PRIMES[pi]).unwrap();
        let mut pts: Vec<ProjPoint<Fp2>> = roots.iter().map(|&r| ProjPoint::affine(elem(&f, r))).collect();
        if at_infinity {
            pts[5] = ProjPoint::infinity(&f.one());
        }
        prop_assume!(distinct(&pts));
        let [a, b, c, d] = m.map(|x| elem(&f, x));
        prop_assume!(!(a * d - b * c).is_zero());
        let lam = elem(&f, twist);
        prop_assume!(!lam.is_zero());
        let moved: Vec<ProjPoint<Fp2>> = pts
            .iter()
            .map(|p| ProjPoint::new(a * p.x + b * p.z, c * p.x + d * p.z).unwrap())
            .collect();
        let base = SexticModel::from_roots(f.one(), pts.try_into().unwrap()).unwrap();
        let image = SexticModel::from_roots(lam, moved.try_into().unwrap()).unwrap();
        let k = base.key();
        prop_assume!(k.is_ok());
        prop_assert_eq!(k.unwrap(), image.key().unwrap());
        prop_assert_eq!(base.moebius_group().order(), image.moebius_group().order());
    }
}

/// Random six-point models over every p ≤ 41; every non-degenerate splitting
/// must satisfy the Richelot identity.
#[test]
fn richelot_identity_on_random_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0usize;
    let mut degenerate = 0usize;
    for &p in &PRIMES {
        let f = QuadExtField::new(p).unwrap();
        for _ in 0..100 {
            let mut pts: Vec<ProjPoint<Fp2>> = Vec::new();
            while pts.len() < 6 {
                let x = f.elem(rng.gen_range(0..p as i64), rng.gen_range(0..p as i64));
                let q = if rng.gen_bool(0.1) { ProjPoint::infinity(&x) } else { ProjPoint::affine(x) };
                if !pts.contains(&q) {
                    pts.push(q);
                }
            }
            let lead = loop {
                let l = f.elem(rng.gen_range(0..p as i64), rng.gen_range(0..p as i64));
                if !l.is_zero() {
                    break l;
                }
            };
            let model = SexticModel::from_roots(lead, pts.try_into().unwrap()).unwrap();
            for s in quadratic_splittings(&model) {
                let delta = splitting_delta(&s);
                if delta.is_zero() {
                    degenerate += 1;
                    continue;
                }
                assert!(richelot_identity_holds(&s.factors, &richelot_g(&s, &delta)), "p={p} {:?}", s.pairing);
                checked += 1;
            }
        }
    }
    assert!(checked >= 10_000, "only {checked} instances");
    assert!(degenerate < checked / 10);
}
