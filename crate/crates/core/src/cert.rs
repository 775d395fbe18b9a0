//! Certificates: a JSON record of everything the classifier established,
//! with enough witnesses that every `true` flag can be re-checked by direct
//! substitution, without re-running any randomized search.

use crate::algebra::Elem;
use crate::comult::CoTensor;
use crate::error::AlgError;
use crate::format::load;
use crate::frobenius::form_from_functional;
use crate::gendo::verify_bimodule_iso;
use crate::linalg::Mat;
use crate::pipeline::Classification;
use crate::rep::{BiRep, SearchOpts};
use crate::scalar::{certificate_string, FieldSpec, Scalar};
use crate::structure::{
    check_idempotent, corner, verify_domdim_witness, Check, DomdimWitness, InjProjWitness,
};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::sync::Arc;

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct Flag {
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl Flag {
    pub fn from_check(c: &Check) -> Flag {
        match c {
            Check::Holds => Flag { value: "true".into(), reason: None },
            Check::Fails(r) => Flag { value: "false".into(), reason: Some(r.clone()) },
            Check::Unknown(r) => Flag { value: "unknown".into(), reason: Some(r.clone()) },
        }
    }

    pub fn is_true(&self) -> bool {
        self.value == "true"
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct Flags {
    pub frobenius: Flag,
    pub symmetric: Flag,
    pub gendo_symmetric: Flag,
    pub gendo_frobenius: Flag,
    pub morita: Flag,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct InjProjData {
    pub inj_vertex: usize,
    pub proj_vertex: usize,
    pub iso: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct DomdimData {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub self_injective: Option<Vec<Vec<String>>>,
    pub socle_mults: Vec<usize>,
    pub inj_proj: Vec<InjProjData>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub embedding: Option<Vec<Vec<String>>>,
    pub coker_mults: Vec<usize>,
    pub coker_inj_proj: Vec<InjProjData>,
}

/// Sparse tensor entry (k, i, j, value): the coefficient of b_i (x) b_j in
/// the image of b_k (for delta), or the coefficient of b_k in the product of
/// the i-th and j-th dual basis vectors (for m).
pub type SparseEntry = (usize, usize, usize, String);

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug, Default)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nu: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub symmetric_iso: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gendo_symmetric_iso: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub e: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tau: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<Vec<SparseEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<Vec<SparseEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counit: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub domdim: Option<DomdimData>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hom_module_faithful: Option<bool>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub version: String,
    pub input_digest: String,
    pub field: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub seed: u64,
    pub trials: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub normalize: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub comult_note: Option<String>,
    pub flags: Flags,
    pub witnesses: Witnesses,
}

pub fn digest(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn field_string(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rational => "rational".into(),
        FieldSpec::Prime(p) => format!("prime={p}"),
    }
}

fn vec_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(certificate_string).collect()
}

fn mat_rows(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows).map(|i| vec_strings(&m.row(i))).collect()
}

fn parse_scalar(field: FieldSpec, s: &str) -> Result<Scalar, AlgError> {
    // residue strings look like "4 mod 7"
    let head = match s.split_once(" mod ") {
        Some((v, _)) => v,
        None => s,
    };
    field.parse(head)
}

fn parse_vec(field: FieldSpec, v: &[String]) -> Result<Elem, AlgError> {
    v.iter().map(|s| parse_scalar(field, s)).collect()
}

fn parse_mat(field: FieldSpec, rows: &[Vec<String>]) -> Result<Mat, AlgError> {
    let r = rows.len();
    let c = rows.first().map(|x| x.len()).unwrap_or(0);
    let mut out = Mat::zero(field, r, c);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != c {
            return Err(AlgError::Parse("ragged matrix in certificate".into()));
        }
        for (j, s) in row.iter().enumerate() {
            out.set(i, j, parse_scalar(field, s)?);
        }
    }
    Ok(out)
}

fn sparse_delta(co: &CoTensor) -> Vec<SparseEntry> {
    let n = co.alg.dim;
    let mut out = Vec::new();
    for t in 0..n {
        for a in 0..n {
            for b in 0..n {
                let c = co.coefficient(t, a, b);
                if !c.is_zero() {
                    out.push((t, a, b, certificate_string(c)));
                }
            }
        }
    }
    out
}

fn sparse_m(m: &Mat, n: usize) -> Vec<SparseEntry> {
    let mut out = Vec::new();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let c = m.at(k, i * n + j);
                if !c.is_zero() {
                    out.push((k, i, j, certificate_string(c)));
                }
            }
        }
    }
    out
}

fn domdim_data(w: &DomdimWitness) -> DomdimData {
    let conv = |ws: &[InjProjWitness]| {
        ws.iter()
            .map(|w| InjProjData {
                inj_vertex: w.inj_vertex,
                proj_vertex: w.proj_vertex,
                iso: mat_rows(&w.iso),
            })
            .collect()
    };
    DomdimData {
        self_injective: w.self_injective.as_ref().map(mat_rows),
        socle_mults: w.socle_mults.clone(),
        inj_proj: conv(&w.inj_proj),
        embedding: w.embedding.as_ref().map(mat_rows),
        coker_mults: w.coker_mults.clone(),
        coker_inj_proj: conv(&w.coker_inj_proj),
    }
}

fn domdim_witness(field: FieldSpec, d: &DomdimData) -> Result<DomdimWitness, AlgError> {
    let conv = |ws: &[InjProjData]| -> Result<Vec<InjProjWitness>, AlgError> {
        ws.iter()
            .map(|w| {
                Ok(InjProjWitness {
                    inj_vertex: w.inj_vertex,
                    proj_vertex: w.proj_vertex,
                    iso: parse_mat(field, &w.iso)?,
                })
            })
            .collect()
    };
    Ok(DomdimWitness {
        self_injective: d.self_injective.as_ref().map(|m| parse_mat(field, m)).transpose()?,
        socle_mults: d.socle_mults.clone(),
        inj_proj: conv(&d.inj_proj)?,
        embedding: d.embedding.as_ref().map(|m| parse_mat(field, m)).transpose()?,
        coker_mults: d.coker_mults.clone(),
        coker_inj_proj: conv(&d.coker_inj_proj)?,
    })
}

/// Build a certificate from a classification of the algebra loaded from
/// `text`.
pub fn certificate_from(
    text: &str,
    cls: &Classification,
    alg: &Arc<crate::algebra::Algebra>,
    opts: &SearchOpts,
    normalize: Option<&str>,
) -> Certificate {
    let mut w = Witnesses::default();
    if let Some(form) = &cls.form {
        w.eps = Some(vec_strings(&form.eps));
    }
    w.nu = cls.nu.as_ref().map(mat_rows);
    w.symmetric_iso = cls.symmetric_witness.as_ref().map(mat_rows);
    w.gendo_symmetric_iso = cls.gendo_symmetric_witness.as_ref().map(mat_rows);
    w.e = cls.e.as_ref().map(|e| vec_strings(e));
    if let Some(s) = &cls.structure {
        w.sigma = Some(mat_rows(&s.sigma));
        w.tau = Some(mat_rows(&s.tau));
    }
    if let Some(c) = &cls.comult {
        w.delta = Some(sparse_delta(&c.co));
        w.m = Some(sparse_m(&c.m, alg.dim));
        w.counit = c.co.counit_solve().map(|e| vec_strings(&e));
    }
    w.domdim = cls.domdim_witness.as_ref().map(domdim_data);
    w.hom_module_faithful = cls.hom_module_faithful;
    Certificate {
        version: env!("CARGO_PKG_VERSION").to_string(),
        input_digest: digest(text),
        field: field_string(alg.field),
        dim: alg.dim,
        labels: (0..alg.dim).map(|i| alg.label(i)).collect(),
        seed: opts.seed,
        trials: opts.trials,
        normalize: normalize.map(|s| s.to_string()),
        comult_note: cls.comult_note.clone(),
        flags: Flags {
            frobenius: Flag::from_check(&cls.frobenius),
            symmetric: Flag::from_check(&cls.symmetric),
            gendo_symmetric: Flag::from_check(&cls.gendo_symmetric),
            gendo_frobenius: Flag::from_check(&cls.gendo_frobenius),
            morita: Flag::from_check(&cls.morita),
        },
        witnesses: w,
    }
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serialization");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate, AlgError> {
        serde_json::from_str(text)
            .map_err(|e| AlgError::Parse(format!("bad certificate: {e}")))
    }
}

/// Re-check every witness in a certificate against the input file, by
/// substitution only.
pub fn verify(cert: &Certificate, text: &str) -> Result<(), AlgError> {
    if digest(text) != cert.input_digest {
        return Err(AlgError::VerificationFailed("input digest mismatch".into()));
    }
    let (alg, _) = load(text)?;
    let field = alg.field;
    if field_string(field) != cert.field {
        return Err(AlgError::VerificationFailed("field mismatch".into()));
    }
    if alg.dim != cert.dim {
        return Err(AlgError::VerificationFailed("dimension mismatch".into()));
    }
    let labels: Vec<String> = (0..alg.dim).map(|i| alg.label(i)).collect();
    if labels != cert.labels {
        return Err(AlgError::VerificationFailed("label mismatch".into()));
    }
    let n = alg.dim;

    // Frobenius: the gram matrix of the recorded functional must be
    // invertible
    let form = match &cert.witnesses.eps {
        Some(eps) => Some(form_from_functional(&alg, &parse_vec(field, eps)?)?),
        None => None,
    };
    if cert.flags.frobenius.is_true() && form.is_none() {
        return Err(AlgError::VerificationFailed("frobenius flag without a form".into()));
    }

    // Nakayama automorphism: the functional equation eps(ab) = eps(b nu(a))
    if let Some(nu_rows) = &cert.witnesses.nu {
        let nu = parse_mat(field, nu_rows)?;
        crate::frobenius::verify_automorphism(&alg, &nu)?;
        let form = form.as_ref().ok_or_else(|| {
            AlgError::VerificationFailed("nu witness without a form".into())
        })?;
        let apply_eps = |x: &[Scalar]| {
            form.eps
                .iter()
                .zip(x)
                .fold(field.zero(), |acc, (a, b)| acc.add(&a.mul(b)))
        };
        for i in 0..n {
            let bi = alg.basis_elem(i);
            let nbi = nu.apply(&bi);
            for j in 0..n {
                let bj = alg.basis_elem(j);
                if apply_eps(&alg.mul(&bi, &bj)) != apply_eps(&alg.mul(&bj, &nbi)) {
                    return Err(AlgError::VerificationFailed(
                        "nu does not satisfy the form identity".into(),
                    ));
                }
            }
        }
    }

    // symmetric: a bimodule isomorphism A -> D(A)
    if cert.flags.symmetric.is_true() {
        let rows = cert.witnesses.symmetric_iso.as_ref().ok_or_else(|| {
            AlgError::VerificationFailed("symmetric flag without a witness".into())
        })?;
        let wmat = parse_mat(field, rows)?;
        let reg = BiRep::regular(alg.clone());
        verify_bimodule_iso(&reg, &reg.dual(), &wmat)?;
    }

    // gendo-symmetric: a bimodule isomorphism Hom(D(A), A) -> A; the hom
    // module itself is deterministic linear algebra
    if cert.flags.gendo_symmetric.is_true() {
        let rows = cert.witnesses.gendo_symmetric_iso.as_ref().ok_or_else(|| {
            AlgError::VerificationFailed("gendo-symmetric flag without a witness".into())
        })?;
        let wmat = parse_mat(field, rows)?;
        let (hom, _) = crate::gendo::hom_dual_regular(&alg)?;
        verify_bimodule_iso(&hom, &BiRep::regular(alg.clone()), &wmat)?;
    }

    // Morita: dominant dimension witness plus faithfulness
    if cert.flags.morita.is_true() {
        let d = cert.witnesses.domdim.as_ref().ok_or_else(|| {
            AlgError::VerificationFailed("morita flag without a dominant-dimension witness".into())
        })?;
        verify_domdim_witness(&alg, 2, &domdim_witness(field, d)?)?;
        let (hom, _) = crate::gendo::hom_dual_regular(&alg)?;
        if !hom.left_rep().is_faithful() {
            return Err(AlgError::VerificationFailed(
                "Hom(D(A), A) is not faithful".into(),
            ));
        }
    }

    // gendo-Frobenius comultiplication witnesses
    if let Some(delta_entries) = &cert.witnesses.delta {
        let e = parse_vec(
            field,
            cert.witnesses.e.as_ref().ok_or_else(|| {
                AlgError::VerificationFailed("comultiplication without an idempotent".into())
            })?,
        )?;
        check_idempotent(&alg, &e)?;
        let sigma = parse_mat(
            field,
            cert.witnesses.sigma.as_ref().ok_or_else(|| {
                AlgError::VerificationFailed("comultiplication without sigma".into())
            })?,
        )?;
        crate::frobenius::verify_automorphism(&alg, &sigma)?;
        if sigma.apply(&e) != e {
            return Err(AlgError::VerificationFailed("sigma does not fix e".into()));
        }
        let tau = parse_mat(
            field,
            cert.witnesses.tau.as_ref().ok_or_else(|| {
                AlgError::VerificationFailed("comultiplication without tau".into())
            })?,
        )?;
        let c = corner(&alg, &e)?;
        verify_bimodule_iso(&c.ea.twist_right(&sigma), &c.ae.dual(), &tau)?;
        let mut delta = Mat::zero(field, n * n, n);
        for (k, i, j, v) in delta_entries {
            if *k >= n || *i >= n || *j >= n {
                return Err(AlgError::VerificationFailed("delta index out of range".into()));
            }
            delta.set(i * n + j, *k, parse_scalar(field, v)?);
        }
        let co = CoTensor::new(alg.clone(), delta);
        co.verify_coassoc()?;
        co.verify_bimodule()?;
        let sigma_inv = sigma.inverse().ok_or_else(|| {
            AlgError::VerificationFailed("sigma is not invertible".into())
        })?;
        if !co.image().equal(&CoTensor::twisted_centralizer(&alg, &sigma_inv))? {
            return Err(AlgError::VerificationFailed(
                "image of delta is not the twisted centralizer".into(),
            ));
        }
        if let Some(m_entries) = &cert.witnesses.m {
            let mut m = Mat::zero(field, n, n * n);
            for (k, i, j, v) in m_entries {
                if *k >= n || *i >= n || *j >= n {
                    return Err(AlgError::VerificationFailed("m index out of range".into()));
                }
                m.set(*k, i * n + j, parse_scalar(field, v)?);
            }
            // the duality flip between delta and m
            for t in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        if *co.coefficient(t, a, b) != *m.at(t, b * n + a) {
                            return Err(AlgError::VerificationFailed(
                                "delta and m are not dual to each other".into(),
                            ));
                        }
                    }
                }
            }
        }
        if let Some(counit) = &cert.witnesses.counit {
            co.verify_counit(&parse_vec(field, counit)?)?;
        }
    } else if cert.flags.gendo_frobenius.is_true() && cert.comult_note.is_none() {
        return Err(AlgError::VerificationFailed(
            "gendo-Frobenius flag without a comultiplication or a note".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::classify;

    const B_FILE: &str = "\
[field] rational
[quiver]
vertex 1
vertex 2
arrow b1 : 1 -> 2
arrow b2 : 2 -> 1
[relations]
b1*b2
b2*b1
";

    fn make_cert(text: &str, seed: u64) -> Certificate {
        let (alg, idem) = load(text).unwrap();
        let opts = SearchOpts { seed, ..SearchOpts::default() };
        let cls = classify(&alg, idem.as_ref(), &opts, None).unwrap();
        certificate_from(text, &cls, &alg, &opts, None)
    }

    #[test]
    fn round_trip_and_verify() {
        let cert = make_cert(B_FILE, 0);
        assert!(cert.flags.frobenius.is_true());
        assert!(!cert.flags.symmetric.is_true());
        assert!(cert.flags.gendo_frobenius.is_true());
        assert!(cert.flags.morita.is_true());
        let json = cert.to_json();
        let back = Certificate::from_json(&json).unwrap();
        assert_eq!(back, cert);
        verify(&back, B_FILE).unwrap();
    }

    #[test]
    fn determinism_same_seed_same_bytes() {
        let a = make_cert(B_FILE, 7).to_json();
        let b = make_cert(B_FILE, 7).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn tampered_delta_rejected() {
        let cert = make_cert(B_FILE, 0);
        let mut bad = cert.clone();
        let entries = bad.witnesses.delta.as_mut().unwrap();
        entries[0].3 = "5".into();
        assert!(matches!(verify(&bad, B_FILE), Err(AlgError::VerificationFailed(_))));
    }

    #[test]
    fn wrong_file_rejected() {
        let cert = make_cert(B_FILE, 0);
        let other = B_FILE.replace("b1*b2", "b1*b2*b1*b2");
        assert!(matches!(verify(&cert, &other), Err(AlgError::VerificationFailed(_))));
    }
}
