//! Gendo-Frobenius structure: the canonical automorphism sigma, the corner
//! isomorphism tau, the bimodule isomorphism gamma from Ae (x)_eAe eA_sigma
//! to D(A), the comparison map Theta, and the class predicates
//! (Morita, gendo-Frobenius, gendo-symmetric).

use crate::algebra::{Algebra, Elem};
use crate::error::AlgError;
use crate::frobenius::{inner_witness, is_frobenius, nakayama_from_form, verify_automorphism};
use crate::linalg::{Mat, Subspace};
use crate::rep::{
    bi_iso_search, hom_space, iso_search, tensor_over, BiRep, IsoVerdict, Rep, SearchOpts, Side,
    TensorOver,
};
use crate::structure::{corner, check_idempotent, Check, CornerData};
use std::sync::Arc;

/// Hom_A(D(A), A) as an (A, A)-bimodule: (a phi b)(f) = phi(f a) b.
pub fn hom_dual_regular(alg: &Arc<Algebra>) -> Result<(BiRep, Vec<Mat>), AlgError> {
    let field = alg.field;
    let n = alg.dim;
    let da = Rep::regular(alg.clone(), Side::Right).dual();
    let reg = Rep::regular(alg.clone(), Side::Left);
    let basis = hom_space(&da, &reg);
    let h = basis.len();
    let amb = n * n;
    let vec_of = |x: &Mat| -> Elem { (0..amb).map(|ix| x.at(ix / n, ix % n).clone()).collect() };
    let span = Subspace::from_vectors(field, amb, basis.iter().map(vec_of).collect());
    // transition from canonical subspace coordinates to the hom basis
    let mut tr = Mat::zero(field, h, h);
    for (j, b) in basis.iter().enumerate() {
        let c = span.coordinates(&vec_of(b)).unwrap();
        for i in 0..h {
            tr.set(i, j, c[i].clone());
        }
    }
    let tr_inv = tr.inverse().ok_or_else(|| {
        AlgError::InternalInconsistency("hom basis transition not invertible".into())
    })?;
    let coords = |x: &Mat| -> Option<Elem> { Some(tr_inv.apply(&span.coordinates(&vec_of(x))?)) };
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for i in 0..n {
        let b = alg.basis_elem(i);
        // left action: phi -> phi . (right action of b on D(A)) = X L_b^T
        let lb_t = alg.lmul_mat(&b).transpose();
        let rb = alg.rmul_mat(&b);
        let mut lm = Mat::zero(field, h, h);
        let mut rm = Mat::zero(field, h, h);
        for (j, x) in basis.iter().enumerate() {
            let lc = coords(&x.mul(&lb_t)).ok_or_else(|| {
                AlgError::InternalInconsistency("hom space not closed under left action".into())
            })?;
            let rc = coords(&rb.mul(x)).ok_or_else(|| {
                AlgError::InternalInconsistency("hom space not closed under right action".into())
            })?;
            for i2 in 0..h {
                lm.set(i2, j, lc[i2].clone());
                rm.set(i2, j, rc[i2].clone());
            }
        }
        left.push(lm);
        right.push(rm);
    }
    Ok((BiRep::new(alg.clone(), alg.clone(), left, right)?, basis))
}

/// Is A gendo-Frobenius: Hom_A(D(A), A) = A as left A-modules.
pub fn is_gendo_frobenius(alg: &Arc<Algebra>, opts: &SearchOpts) -> Result<Check, AlgError> {
    let (hom, _) = hom_dual_regular(alg)?;
    let reg = Rep::regular(alg.clone(), Side::Left);
    match iso_search(&hom.left_rep(), &reg, opts) {
        IsoVerdict::Isomorphic(_) => Ok(Check::Holds),
        IsoVerdict::NotIsomorphic(r) => Ok(Check::Fails(r)),
        IsoVerdict::Unknown(t) => Ok(Check::Unknown(format!("search exhausted {t} trials"))),
    }
}

/// Is A gendo-symmetric: Hom_A(D(A), A) = A as bimodules.
pub fn is_gendo_symmetric(alg: &Arc<Algebra>, opts: &SearchOpts) -> Result<Check, AlgError> {
    let (hom, _) = hom_dual_regular(alg)?;
    let reg = BiRep::regular(alg.clone());
    match bi_iso_search(&hom, &reg, opts) {
        IsoVerdict::Isomorphic(_) => Ok(Check::Holds),
        IsoVerdict::NotIsomorphic(r) => Ok(Check::Fails(r)),
        IsoVerdict::Unknown(t) => Ok(Check::Unknown(format!("search exhausted {t} trials"))),
    }
}

/// Is A a Morita algebra: dominant dimension at least 2 and Hom_A(D(A), A)
/// faithful as a left module.
pub fn is_morita(alg: &Arc<Algebra>, opts: &SearchOpts) -> Result<Check, AlgError> {
    match crate::structure::domdim_at_least(alg, 2, opts)? {
        Check::Holds => {}
        other => return Ok(other),
    }
    let (hom, _) = hom_dual_regular(alg)?;
    if hom.left_rep().is_faithful() {
        Ok(Check::Holds)
    } else {
        Ok(Check::Fails("Hom(D(A), A) is not a faithful left module".into()))
    }
}

/// Monomial automorphism candidates of a quiver-presented algebra: graph
/// automorphisms of the quiver (all arrow scalars 1) that fix the given
/// vertex set setwise, as matrices on the path basis. The identity comes
/// first; the rest follow in lexicographic order of the vertex permutation.
/// Candidates that do not respect the relations are dropped.
pub fn monomial_automorphisms(alg: &Arc<Algebra>, fixed: &[usize]) -> Vec<Mat> {
    let q = match &alg.quiver {
        Some(q) => q,
        None => return vec![Mat::identity(alg.field, alg.dim)],
    };
    let nv = q.vertices.len();
    let na = q.arrow_names.len();
    let arrow_ends: Vec<(usize, usize)> = (0..na)
        .map(|a| {
            let p = &q.basis_paths[q.arrow_basis[a]];
            (p.source, p.target)
        })
        .collect();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; nv];
    fn rec(nv: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == nv {
            out.push(cur.clone());
            return;
        }
        for v in 0..nv {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(nv, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(nv, &mut cur, &mut used, &mut perms);
    // identity first, rest already lexicographic
    let mut out = Vec::new();
    for perm in perms {
        // fixed set must be stable
        let mut stable = true;
        for &v in fixed {
            if !fixed.contains(&perm[v]) {
                stable = false;
                break;
            }
        }
        if !stable {
            continue;
        }
        // each arrow must map to a unique arrow with permuted endpoints
        let mut arrow_map = vec![usize::MAX; na];
        let mut ok = true;
        for a in 0..na {
            let (s, t) = arrow_ends[a];
            let target = (perm[s], perm[t]);
            let mut found = None;
            for b in 0..na {
                if arrow_ends[b] == target {
                    found = Some(b);
                    break;
                }
            }
            match found {
                Some(b) => arrow_map[a] = b,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        // induced map on basis paths; drop the permutation if an image path
        // is not itself a basis path
        let mut m = Mat::zero(alg.field, alg.dim, alg.dim);
        let mut total = true;
        for (i, p) in q.basis_paths.iter().enumerate() {
            let src = perm[p.source];
            let arrows: Vec<usize> = p.arrows.iter().map(|&a| arrow_map[a]).collect();
            let image = q
                .basis_paths
                .iter()
                .position(|bp| bp.source == src && bp.arrows == arrows);
            match image {
                Some(j) => m.set(j, i, alg.field.one()),
                None => {
                    total = false;
                    break;
                }
            }
        }
        if !total {
            continue;
        }
        if verify_automorphism(alg, &m).is_ok() {
            out.push(m);
        }
    }
    out
}

/// The full gendo-Frobenius structure at an idempotent e.
pub struct GendoStructure {
    pub e: Elem,
    pub corner: CornerData,
    /// automorphism of A with sigma(e) = e
    pub sigma: Mat,
    /// (eAe, A)-bimodule isomorphism eA_sigma -> D(Ae)
    pub tau: Mat,
    /// Ae (x)_eAe eA with its section and projection (the twist does not
    /// change the underlying space)
    pub tensor: TensorOver,
    /// A-bimodule isomorphism Ae (x)_eAe eA_sigma -> D(A)
    pub gamma: Mat,
    /// multiplication map T -> A, class(ae (x) eb) -> aeb
    pub mult: Mat,
    /// Theta = mult . gamma^{-1} : D(A) -> A_sigma
    pub theta: Mat,
}

/// Find the canonical sigma at e and build the full structure. Candidates
/// are tried in a fixed order: the identity, then monomial quiver
/// automorphisms; the first one admitting an (eAe, A)-bimodule isomorphism
/// eA_sigma = D(Ae) wins.
pub fn gendo_structure(
    alg: &Arc<Algebra>,
    e: &Elem,
    opts: &SearchOpts,
) -> Result<GendoStructure, AlgError> {
    check_idempotent(alg, e)?;
    let verts: Vec<usize> = match &alg.quiver {
        Some(q) => q
            .vertex_idems
            .iter()
            .enumerate()
            .filter(|(_, &ix)| !e[ix].is_zero())
            .map(|(v, _)| v)
            .collect(),
        None => Vec::new(),
    };
    let mut candidates = vec![Mat::identity(alg.field, alg.dim)];
    for m in monomial_automorphisms(alg, &verts) {
        if m != candidates[0] {
            candidates.push(m);
        }
    }
    let mut last_unknown = None;
    for sigma in candidates {
        if sigma.apply(e) != *e {
            continue;
        }
        match gendo_structure_with_sigma(alg, e, &sigma, opts) {
            Ok(s) => return Ok(s),
            Err(AlgError::Inconclusive(msg)) => last_unknown = Some(msg),
            Err(AlgError::VerificationFailed(_)) | Err(AlgError::NotCornerFrobenius) => {}
            Err(other) => return Err(other),
        }
    }
    Err(match last_unknown {
        Some(msg) => AlgError::Inconclusive(msg),
        None => AlgError::VerificationFailed(
            "no candidate automorphism admits the corner duality".into(),
        ),
    })
}

/// Build the structure for an explicitly given sigma; tau is searched.
pub fn gendo_structure_with_sigma(
    alg: &Arc<Algebra>,
    e: &Elem,
    sigma: &Mat,
    opts: &SearchOpts,
) -> Result<GendoStructure, AlgError> {
    build_structure(alg, e, sigma, None, opts)
}

/// Build the structure for explicitly given sigma and tau; tau is verified
/// to be an invertible (eAe, A)-bimodule map eA_sigma -> D(Ae).
pub fn gendo_structure_with_sigma_tau(
    alg: &Arc<Algebra>,
    e: &Elem,
    sigma: &Mat,
    tau: &Mat,
    opts: &SearchOpts,
) -> Result<GendoStructure, AlgError> {
    build_structure(alg, e, sigma, Some(tau), opts)
}

fn build_structure(
    alg: &Arc<Algebra>,
    e: &Elem,
    sigma: &Mat,
    tau_given: Option<&Mat>,
    opts: &SearchOpts,
) -> Result<GendoStructure, AlgError> {
    verify_automorphism(alg, sigma)?;
    if sigma.apply(e) != *e {
        return Err(AlgError::Precondition("sigma does not fix e".into()));
    }
    let field = alg.field;
    let n = alg.dim;
    let c = corner(alg, e)?;
    let ea_twisted = c.ea.twist_right(sigma);
    let dae = c.ae.dual();
    let tau = match tau_given {
        Some(t) => {
            verify_bimodule_iso(&ea_twisted, &dae, t)?;
            t.clone()
        }
        None => match bi_iso_search(&ea_twisted, &dae, opts) {
            IsoVerdict::Isomorphic(t) => t,
            IsoVerdict::NotIsomorphic(_) => return Err(AlgError::VerificationFailed(
                "twisted eA is not isomorphic to D(Ae) for this sigma".into(),
            )),
            IsoVerdict::Unknown(t) => {
                return Err(AlgError::Inconclusive(format!(
                    "corner duality search exhausted {t} trials"
                )))
            }
        },
    };
    // tensor Ae (x)_eAe eA_sigma; the balancing relations only involve the
    // inner eAe-actions, so the twisted and untwisted tensors share the
    // underlying quotient
    let tensor = tensor_over(&c.ae, &ea_twisted)?;
    if tensor.bimod.dim != n {
        return Err(AlgError::InternalInconsistency(format!(
            "tensor dimension {} differs from the algebra dimension {n}",
            tensor.bimod.dim
        )));
    }
    let (dx, dy) = (c.ae.dim, c.ea.dim);
    // gamma on an ambient pair (i, j): x -> tau(ea_j sigma(x))(ae_i)
    let ea_right = ea_twisted.right_rep();
    let mut gamma_amb = Mat::zero(field, n, dx * dy);
    for x in 0..n {
        // right action of b_x on eA_sigma (the twist is inside ea_right)
        let act = &ea_right.acts[x];
        let tact = tau.mul(act);
        for i in 0..dx {
            for j in 0..dy {
                gamma_amb.set(x, i * dy + j, tact.at(i, j).clone());
            }
        }
    }
    let gamma = gamma_amb.mul(&tensor.section);
    // gamma must factor through the quotient
    if gamma.mul(&tensor.projection) != gamma_amb {
        return Err(AlgError::InternalInconsistency(
            "gamma does not vanish on the balancing relations".into(),
        ));
    }
    let gamma_inv = gamma
        .inverse()
        .ok_or_else(|| AlgError::VerificationFailed("gamma is not invertible".into()))?;
    // bimodule property of gamma: left of b on D(A) is R_b^T, right is L_b^T
    // against the twisted right action of the tensor
    for i in 0..n {
        let b = alg.basis_elem(i);
        let lhs = alg.rmul_mat(&b).transpose().mul(&gamma);
        if lhs != gamma.mul(&tensor.bimod.left[i]) {
            return Err(AlgError::InternalInconsistency("gamma is not left A-linear".into()));
        }
        let rhs = alg.lmul_mat(&b).transpose().mul(&gamma);
        if rhs != gamma.mul(&tensor.bimod.right[i]) {
            return Err(AlgError::InternalInconsistency("gamma is not right A-linear".into()));
        }
    }
    // multiplication map: class(ae (x) eb) -> aeb, checked well defined
    let mut mult_amb = Mat::zero(field, n, dx * dy);
    for i in 0..dx {
        for j in 0..dy {
            let prod = alg.mul(&c.ae_sub.basis.row(i), &c.ea_sub.basis.row(j));
            for x in 0..n {
                mult_amb.set(x, i * dy + j, prod[x].clone());
            }
        }
    }
    let mult = mult_amb.mul(&tensor.section);
    if mult.mul(&tensor.projection) != mult_amb {
        return Err(AlgError::InternalInconsistency(
            "multiplication does not vanish on the balancing relations".into(),
        ));
    }
    let theta = mult.mul(&gamma_inv);
    // Theta is a bimodule map D(A) -> A_sigma
    for i in 0..n {
        let b = alg.basis_elem(i);
        if theta.mul(&alg.rmul_mat(&b).transpose()) != alg.lmul_mat(&b).mul(&theta) {
            return Err(AlgError::InternalInconsistency("Theta is not left A-linear".into()));
        }
        let sb = sigma.apply(&b);
        if theta.mul(&alg.lmul_mat(&b).transpose()) != alg.rmul_mat(&sb).mul(&theta) {
            return Err(AlgError::InternalInconsistency("Theta is not right twisted-linear".into()));
        }
    }
    // e Theta = tau^{-1}: restriction of a functional to Ae has coordinates
    // given by evaluating on the Ae basis
    let tau_inv = tau.inverse().ok_or_else(|| {
        AlgError::InternalInconsistency("tau is not invertible".into())
    })?;
    let (ae_sub, ea_sub) = (&c.ae_sub, &c.ea_sub);
    for x in 0..n {
        let mut f = vec![field.zero(); n];
        f[x] = field.one();
        let u = alg.mul(e, &theta.apply(&f));
        let ucoords = ea_sub.coordinates(&u).ok_or_else(|| {
            AlgError::InternalInconsistency("e Theta does not land in eA".into())
        })?;
        let restr: Elem = (0..ae_sub.dim()).map(|r| ae_sub.basis.row(r)[x].clone()).collect();
        if ucoords != tau_inv.apply(&restr) {
            return Err(AlgError::InternalInconsistency("e Theta differs from tau inverse".into()));
        }
    }
    Ok(GendoStructure {
        e: e.clone(),
        corner: c,
        sigma: sigma.clone(),
        tau,
        tensor,
        gamma,
        mult,
        theta,
    })
}

/// The restriction of sigma to eAe, verified to be a Nakayama automorphism
/// of the corner.
pub fn corner_nakayama(
    alg: &Arc<Algebra>,
    s: &GendoStructure,
    opts: &SearchOpts,
) -> Result<Mat, AlgError> {
    let c = &s.corner;
    let d = c.eae.dim;
    let mut rest = Mat::zero(alg.field, d, d);
    for j in 0..d {
        let u = c.eae_sub.basis.row(j);
        let img = s.sigma.apply(&u);
        let coords = c
            .eae_sub
            .coordinates(&img)
            .ok_or_else(|| AlgError::InternalInconsistency("sigma does not preserve eAe".into()))?;
        for i in 0..d {
            rest.set(i, j, coords[i].clone());
        }
    }
    verify_automorphism(&c.eae, &rest)?;
    // Nakayama property: sigma_e differs from a Nakayama automorphism of the
    // corner by an inner automorphism
    let (check, form) = is_frobenius(&c.eae, opts)?;
    if !check.holds() {
        return Err(AlgError::NotCornerFrobenius);
    }
    let nu = nakayama_from_form(&c.eae, &form.unwrap())?;
    let diff = rest.mul(&nu.inverse().unwrap());
    if inner_witness(&c.eae, &diff, opts).is_none() {
        return Err(AlgError::VerificationFailed(
            "restriction of sigma is not a Nakayama automorphism of the corner".into(),
        ));
    }
    Ok(rest)
}

/// Check that a matrix is an invertible bimodule map X -> Y by direct
/// substitution on the action of every basis element on both sides.
pub fn verify_bimodule_iso(x: &BiRep, y: &BiRep, w: &Mat) -> Result<(), AlgError> {
    if w.rows != y.dim || w.cols != x.dim || !w.is_invertible() {
        return Err(AlgError::VerificationFailed("witness is not invertible".into()));
    }
    for i in 0..x.left_alg.dim {
        if w.mul(&x.left[i]) != y.left[i].mul(w) {
            return Err(AlgError::VerificationFailed("witness is not left linear".into()));
        }
    }
    for i in 0..x.right_alg.dim {
        if w.mul(&x.right[i]) != y.right[i].mul(w) {
            return Err(AlgError::VerificationFailed("witness is not right linear".into()));
        }
    }
    Ok(())
}

/// The tensor characterization: A is gendo-Frobenius for sigma exactly when
/// D(A)_{sigma^{-1}} (x)_A D(A) = D(A) as bimodules.
pub fn tensor_characterization(
    alg: &Arc<Algebra>,
    sigma: &Mat,
    opts: &SearchOpts,
) -> Result<IsoVerdict, AlgError> {
    verify_automorphism(alg, sigma)?;
    let sigma_inv = sigma
        .inverse()
        .ok_or_else(|| AlgError::Precondition("sigma is not invertible".into()))?;
    let da = BiRep::regular(alg.clone()).dual();
    let twisted = da.twist_right(&sigma_inv);
    let t = tensor_over(&twisted, &da)?;
    Ok(bi_iso_search(&t.bimod, &da, opts))
}
