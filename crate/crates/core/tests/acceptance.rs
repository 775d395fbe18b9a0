//! End-to-end acceptance checks, one test per criterion. Each test prints a
//! single pass line on success; a failed assertion marks the criterion as
//! failed.

use std::fs;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use frobeniuslab::algebra::{Algebra, Elem};
use frobeniuslab::cert::{certificate_from, verify, Certificate};
use frobeniuslab::comult::{gendo_comult, gendo_comult_raw, proportionality, CoTensor};
use frobeniuslab::format;
use frobeniuslab::frobenius::{frobenius_comult, inner_witness, is_frobenius, nakayama_from_form};
use frobeniuslab::gendo::{
    corner_nakayama, gendo_structure, gendo_structure_with_sigma,
    gendo_structure_with_sigma_tau, is_gendo_frobenius, tensor_characterization,
};
use frobeniuslab::linalg::Mat;
use frobeniuslab::pipeline::{classify, Classification};
use frobeniuslab::rep::SearchOpts;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_files() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for entry in fs::read_dir(corpus_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) == Some("alg") {
            let name = path.file_stem().unwrap().to_str().unwrap().to_string();
            out.push((name, fs::read_to_string(&path).unwrap()));
        }
    }
    out.sort();
    out
}

fn load(name: &str) -> (Arc<Algebra>, Option<Elem>) {
    let text = fs::read_to_string(corpus_dir().join(format!("{name}.alg"))).unwrap();
    format::load(&text).unwrap()
}

fn idx(alg: &Algebra, lbl: &str) -> usize {
    (0..alg.dim).position(|i| alg.label(i) == lbl).unwrap()
}

fn classify_file(name: &str, opts: &SearchOpts) -> (Arc<Algebra>, Classification) {
    let (alg, e) = load(name);
    let anchor = if name.starts_with("a10") { Some("a1a3") } else { None };
    let cls = classify(&alg, e.as_ref(), opts, anchor).unwrap();
    (alg, cls)
}

// the independently worked-out comultiplication of the ten-dimensional
// algebra, normalized
// so that the coefficient on a1a3 (x) a1a3 in delta(a1a3) is 1
fn expected_delta(alg: &Algebra) -> Mat {
    let table: Vec<(&str, Vec<(&str, &str)>)> = vec![
        ("e1", vec![("a1a3", "e1"), ("a1", "a4"), ("e1", "a2a4")]),
        ("e2", vec![("a2a4", "e2"), ("a2", "a3"), ("e2", "a1a3")]),
        ("e3", vec![("a3", "a1")]),
        ("e4", vec![("a4", "a2")]),
        ("a1", vec![("a1a3", "a1")]),
        ("a2", vec![("a2a4", "a2")]),
        ("a3", vec![("a3", "a1a3")]),
        ("a4", vec![("a4", "a2a4")]),
        ("a1a3", vec![("a1a3", "a1a3")]),
        ("a2a4", vec![("a2a4", "a2a4")]),
    ];
    let n = alg.dim;
    let mut d = Mat::zero(alg.field, n * n, n);
    for (t, terms) in table {
        for (a, b) in terms {
            d.set(idx(alg, a) * n + idx(alg, b), idx(alg, t), alg.field.one());
        }
    }
    d
}

// the matching product on the dual basis: all nonzero products, coefficient 1
fn expected_m(alg: &Algebra) -> Mat {
    let table: Vec<(&str, &str, &str)> = vec![
        ("e1", "a1a3", "e1"),
        ("e2", "a2a4", "e2"),
        ("a1", "a3", "e3"),
        ("a1", "a1a3", "a1"),
        ("a2", "a4", "e4"),
        ("a2", "a2a4", "a2"),
        ("a3", "a2", "e2"),
        ("a4", "a1", "e1"),
        ("a1a3", "e2", "e2"),
        ("a1a3", "a3", "a3"),
        ("a1a3", "a1a3", "a1a3"),
        ("a2a4", "e1", "e1"),
        ("a2a4", "a4", "a4"),
        ("a2a4", "a2a4", "a2a4"),
    ];
    let n = alg.dim;
    let mut m = Mat::zero(alg.field, n, n * n);
    for (f, g, r) in table {
        m.set(idx(alg, r), idx(alg, f) * n + idx(alg, g), alg.field.one());
    }
    m
}

#[test]
fn criterion_01_m_table_reproduction() {
    let start = Instant::now();
    let opts = SearchOpts::default();
    let (alg, cls) = classify_file("a10", &opts);
    let s = cls.structure.as_ref().unwrap();
    let want = expected_m(&alg);
    // up to one global nonzero scalar without normalization
    let raw = gendo_comult_raw(&alg, s).unwrap();
    let c = proportionality(&raw.m, &want).expect("m is not proportional to the table");
    assert!(!c.is_zero());
    // exact, all 100 entries, once normalized at a1a3
    let norm = gendo_comult(&alg, s, Some("a1a3")).unwrap();
    assert_eq!(norm.m, want);
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 10.0, "took {secs:.1}s");
    println!("[acceptance] criterion 1 (m-table reproduction): pass ({secs:.2}s)");
}

#[test]
fn criterion_02_delta_reproduction() {
    let opts = SearchOpts::default();
    let (alg, cls) = classify_file("a10", &opts);
    let co = &cls.comult.as_ref().unwrap().co;
    assert_eq!(co.delta, expected_delta(&alg));
    println!("[acceptance] criterion 2 (delta reproduction): pass");
}

#[test]
fn criterion_03_counit_iff_frobenius() {
    let opts = SearchOpts::default();
    let files = corpus_files();
    assert!(files.len() >= 12);
    let mut with_delta = 0;
    for (name, _) in &files {
        let (_, cls) = classify_file(name, &opts);
        let frob = cls.frobenius.holds();
        if let Some(gc) = &cls.comult {
            with_delta += 1;
            let eps = gc.co.counit_solve();
            assert_eq!(eps.is_some(), frob, "{name}: counit_solve disagrees");
            if let Some(eps) = eps {
                gc.co.verify_counit(&eps).unwrap();
            }
        } else {
            // the only corpus member without a comultiplication is the
            // non-gendo-Frobenius one, which is in particular not Frobenius
            assert!(!frob, "{name}: Frobenius member lost its comultiplication");
        }
    }
    // the named spot checks
    for name in ["b", "k", "kx2", "m2"] {
        let (_, cls) = classify_file(name, &opts);
        assert!(cls.comult.unwrap().co.counit_solve().is_some(), "{name}: no counit");
    }
    let (_, cls) = classify_file("a10", &opts);
    assert!(cls.comult.unwrap().co.counit_solve().is_none(), "a10: unexpected counit");
    println!(
        "[acceptance] criterion 3 (counit exactly on Frobenius members, \
         {with_delta} comultiplications over Q and GF(5)): pass"
    );
}

#[test]
fn criterion_04_coassoc_and_bimodule_laws() {
    let opts = SearchOpts::default();
    let mut checked = 0;
    for (name, _) in corpus_files() {
        let (alg, cls) = classify_file(&name, &opts);
        if let Some(gc) = &cls.comult {
            gc.co.verify_coassoc().unwrap();
            gc.co.verify_bimodule().unwrap();
            checked += 1;
            // corrupted negative control: perturb one entry (pointless in
            // dimension one, where every tensor satisfies both laws)
            let n = alg.dim;
            if n == 1 {
                continue;
            }
            let mut bad = gc.co.delta.clone();
            let bump = bad.at(0, n - 1).add(&alg.field.one());
            bad.set(0, n - 1, bump);
            let bad_co = CoTensor::new(alg.clone(), bad);
            assert!(
                bad_co.verify_coassoc().is_err() || bad_co.verify_bimodule().is_err(),
                "{name}: corrupted tensor not rejected"
            );
        }
        // the classical construction from the form, where it exists
        if let Some(form) = &cls.form {
            let (co, eps) = frobenius_comult(&alg, form).unwrap();
            co.verify_coassoc().unwrap();
            co.verify_bimodule().unwrap();
            co.verify_counit(&eps).unwrap();
            checked += 1;
        }
    }
    assert!(checked >= 12);
    println!("[acceptance] criterion 4 (coassociativity + bimodule law, {checked} tensors): pass");
}

#[test]
fn criterion_05_image_is_twisted_centralizer() {
    let opts = SearchOpts::default();
    for (name, _) in corpus_files() {
        let (alg, cls) = classify_file(&name, &opts);
        let (Some(s), Some(gc)) = (&cls.structure, &cls.comult) else { continue };
        let sigma_inv = s.sigma.inverse().unwrap();
        let cent = CoTensor::twisted_centralizer(&alg, &sigma_inv);
        assert!(gc.co.image().equal(&cent).unwrap(), "{name}: image mismatch");
        // gendo-symmetric members use the identity twist: the image is the
        // plain centralizer of the identity bimodule
        if cls.gendo_symmetric.holds() {
            assert_eq!(s.sigma, Mat::identity(alg.field, alg.dim), "{name}");
        }
    }
    // Frobenius specialization: the form's comultiplication on B has image
    // the nu-twisted centralizer
    let (alg, _) = load("b");
    let (_, form) = is_frobenius(&alg, &opts).unwrap();
    let form = form.unwrap();
    let nu = nakayama_from_form(&alg, &form).unwrap();
    let s = gendo_structure_with_sigma(&alg, &alg.unit.clone(), &nu, &opts).unwrap();
    let gc = gendo_comult_raw(&alg, &s).unwrap();
    let cent = CoTensor::twisted_centralizer(&alg, &nu.inverse().unwrap());
    assert!(gc.co.image().equal(&cent).unwrap());
    println!("[acceptance] criterion 5 (image = twisted centralizer): pass");
}

#[test]
fn criterion_06_tensor_characterization_agreement() {
    let opts = SearchOpts::default();
    for (name, _) in corpus_files() {
        let (alg, cls) = classify_file(&name, &opts);
        if cls.gendo_frobenius.holds() {
            let s = cls.structure.as_ref().unwrap();
            assert!(
                tensor_characterization(&alg, &s.sigma, &opts).unwrap().is_iso(),
                "{name}: characterization fails on the extracted twist"
            );
        } else {
            let id = Mat::identity(alg.field, alg.dim);
            assert!(
                !tensor_characterization(&alg, &id, &opts).unwrap().is_iso(),
                "{name}: characterization holds but the classifier says no"
            );
        }
    }
    // the Morita-but-not-gendo-Frobenius algebra: both answers are negative
    let (alg, _) = load("endb_bs1");
    assert!(!is_gendo_frobenius(&alg, &opts).unwrap().holds());
    let id = Mat::identity(alg.field, alg.dim);
    assert!(!tensor_characterization(&alg, &id, &opts).unwrap().is_iso());
    println!("[acceptance] criterion 6 (tensor characterization agrees with classifier): pass");
}

#[test]
fn criterion_07_classical_comultiplication_identity() {
    let opts = SearchOpts::default();
    for name in ["b", "kx2", "m2"] {
        let (alg, _) = load(name);
        let (_, form) = is_frobenius(&alg, &opts).unwrap();
        let form = form.unwrap();
        let nu = nakayama_from_form(&alg, &form).unwrap();
        // e = 1, sigma the Nakayama automorphism, tau the form's pairing:
        // the transported product must equal the classical one exactly
        let s = gendo_structure_with_sigma_tau(
            &alg,
            &alg.unit.clone(),
            &nu,
            &form.gram,
            &opts,
        )
        .unwrap();
        let gc = gendo_comult_raw(&alg, &s).unwrap();
        let (classical, _) = frobenius_comult(&alg, &form).unwrap();
        assert_eq!(gc.co.delta, classical.delta, "{name}: tensors differ");
    }
    println!("[acceptance] criterion 7 (identity with the classical construction): pass");
}

#[test]
fn criterion_08_sigma_properties() {
    let opts0 = SearchOpts { seed: 0, ..SearchOpts::default() };
    let opts1 = SearchOpts { seed: 1, ..SearchOpts::default() };
    for name in ["a10", "a10_gf5", "auslander_kx2", "b"] {
        let (alg, cls) = classify_file(name, &opts0);
        let s = cls.structure.as_ref().unwrap();
        // sigma fixes the chosen idempotent
        assert_eq!(s.sigma.apply(&s.e), s.e, "{name}: sigma moves e");
        // its restriction to the corner is a Nakayama automorphism (checked
        // inside corner_nakayama via a twisted bimodule isomorphism)
        corner_nakayama(&alg, s, &opts0).unwrap();
        // independent seeds give inner-equivalent twists
        let s1 = gendo_structure(&alg, &s.e, &opts1).unwrap();
        if s.sigma != s1.sigma {
            let diff = s.sigma.mul(&s1.sigma.inverse().unwrap());
            assert!(
                inner_witness(&alg, &diff, &opts0).is_some(),
                "{name}: seeds disagree beyond an inner automorphism"
            );
        }
    }
    println!("[acceptance] criterion 8 (twist properties and seed independence): pass");
}

#[test]
fn criterion_09_hierarchy_separations() {
    let opts = SearchOpts::default();
    fn expect(c: &Classification, name: &str) -> String {
        format!(
            "{name}: frobenius={} symmetric={} gendo-sym={} gendo-frob={} morita={}",
            c.frobenius.holds(),
            c.symmetric.holds(),
            c.gendo_symmetric.holds(),
            c.gendo_frobenius.holds(),
            c.morita.holds(),
        )
    }
    let (_, b) = classify_file("b", &opts);
    assert!(b.frobenius.holds() && !b.symmetric.holds(), "{}", expect(&b, "b"));
    let (_, a) = classify_file("a10", &opts);
    assert!(
        a.gendo_frobenius.holds() && !a.frobenius.holds() && !a.gendo_symmetric.holds(),
        "{}",
        expect(&a, "a10")
    );
    let (_, e) = classify_file("endb_bs1", &opts);
    assert!(e.morita.holds() && !e.gendo_frobenius.holds(), "{}", expect(&e, "endb_bs1"));
    let (_, au) = classify_file("auslander_kx2", &opts);
    assert!(
        au.gendo_symmetric.holds() && !au.symmetric.holds(),
        "{}",
        expect(&au, "auslander_kx2")
    );
    println!("[acceptance] criterion 9 (four strict hierarchy separations): pass");
}

#[test]
fn criterion_10_determinism_and_verification() {
    let opts = SearchOpts::default();
    let start = Instant::now();
    let mut certs: Vec<(String, String, Certificate)> = Vec::new();
    for (name, text) in corpus_files() {
        let (alg, e) = format::load(&text).unwrap();
        let anchor = if name.starts_with("a10") { Some("a1a3") } else { None };
        let run = || {
            let cls = classify(&alg, e.as_ref(), &opts, anchor).unwrap();
            certificate_from(&text, &cls, &alg, &opts, anchor).to_json()
        };
        let first = run();
        let second = run();
        assert_eq!(first, second, "{name}: same seed, different bytes");
        certs.push((name, text, Certificate::from_json(&first).unwrap()));
    }
    // full substitution-only re-validation of every certificate
    for (name, text, cert) in &certs {
        verify(cert, text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "took {secs:.1}s");
    println!(
        "[acceptance] criterion 10 (deterministic certificates, {} verified in {secs:.1}s): pass",
        certs.len()
    );
}

// an invalid scalar in a certificate must be rejected, not silently accepted
#[test]
fn tampered_certificates_are_rejected() {
    let opts = SearchOpts::default();
    let text = fs::read_to_string(corpus_dir().join("a10.alg")).unwrap();
    let (alg, e) = format::load(&text).unwrap();
    let cls = classify(&alg, e.as_ref(), &opts, Some("a1a3")).unwrap();
    let cert = certificate_from(&text, &cls, &alg, &opts, Some("a1a3"));
    let tampered = cert.to_json().replacen("\"1\"", "\"2\"", 1);
    let cert = Certificate::from_json(&tampered).unwrap();
    assert!(verify(&cert, &text).is_err());
}
