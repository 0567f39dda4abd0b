//! Property tests over random inputs, checked against a reference evaluator
//! that spells every index out directly from `tau`, `delta` and `omega`.

use neutro_core::io::{
    compute_results, parse_records, write_results, Format, ParseOptions, Record, RecordBatch,
    Schema,
};
use neutro_core::{
    closed_form_triad, deca_decompose, deca_recompose, entropy_triad, penta_decompose,
    penta_recompose, prototype_combination, support_count, BifuzzyPair, NeutrosophicTriplet,
    Variant,
};
use proptest::prelude::*;

/// Reference deca evaluation, independent of the split-based implementation.
fn reference_deca(mu: f64, omega: f64, nu: f64, variant: Variant) -> [f64; 10] {
    let tau = mu - nu;
    let delta = mu + nu - 1.0;
    let w_bar = 1.0 - omega;
    let (kt, kd) = match variant {
        Variant::I => (1.0, 1.0),
        Variant::II => (1.0 - delta.abs() / 2.0, 1.0 - tau.abs() / 2.0),
    };
    let tp = tau.max(0.0);
    let tm = (-tau).max(0.0);
    let pi = (-delta).max(0.0);
    let kappa = delta.max(0.0);
    let big_t = tau.abs() * kt;
    let big_d = delta.abs() * kd;
    [
        tp.min(w_bar) * kt,
        (tp - tp.min(w_bar)) * kt,
        tm.min(w_bar) * kt,
        (tm - tm.min(w_bar)) * kt,
        (kappa - kappa.min(omega)) * kd,
        pi.min(omega) * kd,
        kappa.min(omega) * kd,
        (pi - pi.min(omega)) * kd,
        1.0 - big_t.min(w_bar) - big_d.max(omega),
        1.0 - big_t.max(w_bar) - big_d.min(omega),
    ]
}

fn unit() -> impl Strategy<Value = f64> {
    prop_oneof![
        3 => 0.0f64..=1.0,
        1 => prop::sample::select(vec![0.0, 0.25, 0.5, 0.75, 1.0]),
    ]
}

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![Just(Variant::I), Just(Variant::II)]
}

proptest! {
    #[test]
    fn deca_matches_reference(mu in unit(), omega in unit(), nu in unit(), v in variant()) {
        let x = NeutrosophicTriplet::new(mu, omega, nu).unwrap();
        let got = deca_decompose(x, v).values();
        let want = reference_deca(mu, omega, nu, v);
        for (g, w) in got.iter().zip(want) {
            prop_assert!((g - w).abs() <= 1e-12, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn deca_partition_and_exclusions(mu in unit(), omega in unit(), nu in unit(), v in variant()) {
        let d = deca_decompose(NeutrosophicTriplet::new(mu, omega, nu).unwrap(), v);
        prop_assert!(d.values().iter().all(|&x| x >= 0.0));
        prop_assert!((d.sum() - 1.0).abs() <= 1e-12);
        prop_assert_eq!((d.t.get() + d.t_w.get()) * (d.f.get() + d.f_w.get()), 0.0);
        prop_assert_eq!((d.u.get() + d.n.get()) * (d.c.get() + d.s.get()), 0.0);
    }

    #[test]
    fn variant_one_support_and_inverse(mu in unit(), omega in unit(), nu in unit()) {
        let x = NeutrosophicTriplet::new(mu, omega, nu).unwrap();
        let d = deca_decompose(x, Variant::I);
        prop_assert!(support_count(&d, 1e-12) <= 4);
        let back = deca_recompose(&d).unwrap();
        for (b, o) in back.values().iter().zip(x.values()) {
            prop_assert!((b - o).abs() <= 1e-12);
        }
        prop_assert_eq!(prototype_combination(&d), back);
    }

    #[test]
    fn triad_routes_agree(mu in unit(), omega in unit(), nu in unit(), v in variant()) {
        let x = NeutrosophicTriplet::new(mu, omega, nu).unwrap();
        let sums = entropy_triad(x, v);
        let closed = closed_form_triad(x, v);
        prop_assert!((sums.sum() - 1.0).abs() <= 1e-12);
        for (a, b) in sums.values().iter().zip(closed.values()) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn penta_partition_and_inverse(mu in unit(), nu in unit(), v in variant()) {
        let p = BifuzzyPair::new(mu, nu).unwrap();
        let idx = penta_decompose(p, v);
        prop_assert!((idx.sum() - 1.0).abs() <= 1e-12);
        if v == Variant::I {
            let back = penta_recompose(&idx).unwrap();
            prop_assert!((back.mu.get() - mu).abs() <= 1e-12);
            prop_assert!((back.nu.get() - nu).abs() <= 1e-12);
        } else {
            prop_assert!(penta_recompose(&idx).is_err());
        }
    }

    #[test]
    fn csv_and_jsonl_round_trip_bit_for_bit(
        points in prop::collection::vec((unit(), unit(), unit()), 1..40),
        v in variant(),
        jsonl in any::<bool>(),
    ) {
        let rows: Vec<Record> = points
            .iter()
            .map(|&(m, w, n)| Record::Triplet(NeutrosophicTriplet::new(m, w, n).unwrap()))
            .collect();
        let batch = RecordBatch {
            schema: Schema::Triplet,
            line_numbers: (1..=rows.len()).collect(),
            rows,
            ignored_fields: vec![],
        };
        let format = if jsonl { Format::Jsonl } else { Format::Csv };
        let results = compute_results(&batch, v);
        let mut out = Vec::new();
        write_results(&results, Schema::Triplet, format, &mut out).unwrap();
        let back = parse_records(&out[..], format, Schema::Triplet, &ParseOptions::default()).unwrap();
        prop_assert_eq!(back.rows.len(), batch.rows.len());
        for (a, b) in back.rows.iter().zip(&batch.rows) {
            let (a, b) = (a.values(), b.values());
            prop_assert!(a.iter().zip(&b).all(|(x, y)| x.to_bits() == y.to_bits()));
        }
    }
}
