//! The classification pipeline: runs every detector on an algebra and
//! collects witnesses, then optionally builds the comultiplication.

use crate::algebra::{Algebra, Elem};
use crate::comult::{gendo_comult, GendoComult};
use crate::error::AlgError;
use crate::frobenius::{is_frobenius, is_symmetric, nakayama_from_form, FrobeniusForm};
use crate::gendo::{gendo_structure, hom_dual_regular, is_gendo_frobenius, GendoStructure};
use crate::linalg::Mat;
use crate::rep::{bi_iso_search, BiRep, IsoVerdict, SearchOpts};
use crate::structure::{
    domdim_with_witness, find_faithful_selfdual_idem, Check, DomdimWitness,
};
use std::sync::Arc;

/// Everything the classifier established about one algebra.
pub struct Classification {
    pub frobenius: Check,
    pub symmetric: Check,
    pub gendo_symmetric: Check,
    pub gendo_frobenius: Check,
    pub morita: Check,
    pub form: Option<FrobeniusForm>,
    pub nu: Option<Mat>,
    pub symmetric_witness: Option<Mat>,
    pub gendo_symmetric_witness: Option<Mat>,
    pub e: Option<Elem>,
    pub structure: Option<GendoStructure>,
    pub comult: Option<GendoComult>,
    /// why the comultiplication is absent, when it is
    pub comult_note: Option<String>,
    pub domdim2: Check,
    pub domdim_witness: Option<DomdimWitness>,
    pub hom_module_faithful: Option<bool>,
}

/// Run the full detector stack. `declared` is the idempotent from the input
/// file, if any; `anchor` is the normalization label for the
/// comultiplication.
pub fn classify(
    alg: &Arc<Algebra>,
    declared: Option<&Elem>,
    opts: &SearchOpts,
    anchor: Option<&str>,
) -> Result<Classification, AlgError> {
    let (frobenius, form) = is_frobenius(alg, opts)?;
    let nu = match &form {
        Some(f) => Some(nakayama_from_form(alg, f)?),
        None => None,
    };
    let (symmetric, symmetric_witness) = is_symmetric(alg, opts)?;
    let gendo_frobenius = is_gendo_frobenius(alg, opts)?;
    let (hom, _) = hom_dual_regular(alg)?;
    let gendo_symmetric_result = bi_iso_search(&hom, &BiRep::regular(alg.clone()), opts);
    let (gendo_symmetric, gendo_symmetric_witness) = match gendo_symmetric_result {
        IsoVerdict::Isomorphic(w) => (Check::Holds, Some(w)),
        IsoVerdict::NotIsomorphic(r) => (Check::Fails(r), None),
        IsoVerdict::Unknown(t) => {
            (Check::Unknown(format!("search exhausted {t} trials")), None)
        }
    };
    let hom_module_faithful = Some(hom.left_rep().is_faithful());
    let (domdim2, domdim_witness) = match domdim_with_witness(alg, 2, opts) {
        Ok((c, w)) => (c, Some(w)),
        Err(AlgError::NotQuiverPresented) => (
            Check::Unknown("dominant dimension needs a quiver presentation".into()),
            None,
        ),
        Err(e) => return Err(e),
    };
    let morita = match (&domdim2, hom_module_faithful) {
        (Check::Holds, Some(true)) => Check::Holds,
        (Check::Holds, _) => Check::Fails("Hom(D(A), A) is not a faithful left module".into()),
        (other, _) => other.clone(),
    };

    // idempotent for the comultiplication pipeline
    let e: Option<Elem> = match declared {
        Some(e) => Some(e.clone()),
        None if alg.quiver.is_some() => match find_faithful_selfdual_idem(alg, opts) {
            Ok(Some((_, e))) => Some(e),
            Ok(None) => None,
            Err(AlgError::Inconclusive(_)) => None,
            Err(e) => return Err(e),
        },
        None if frobenius.holds() => Some(alg.unit.clone()),
        None => None,
    };

    let mut structure = None;
    let mut comult = None;
    let mut comult_note = None;
    if gendo_frobenius.holds() {
        match &e {
            Some(e) => match gendo_structure(alg, e, opts) {
                Ok(s) => match gendo_comult(alg, &s, anchor) {
                    Ok(c) => {
                        structure = Some(s);
                        comult = Some(c);
                    }
                    Err(err) => comult_note = Some(err.to_string()),
                },
                Err(err) => comult_note = Some(err.to_string()),
            },
            None => {
                comult_note =
                    Some("no faithful self-dual idempotent found".into());
            }
        }
    } else {
        comult_note = Some("algebra is not gendo-Frobenius".into());
    }

    Ok(Classification {
        frobenius,
        symmetric,
        gendo_symmetric,
        gendo_frobenius,
        morita,
        form,
        nu,
        symmetric_witness,
        gendo_symmetric_witness,
        e,
        structure,
        comult,
        comult_note,
        domdim2,
        domdim_witness,
        hom_module_faithful,
    })
}
