//! Structural analysis: radical and socle, idempotent corners, projectives
//! and injectives, self-duality of Ae, and dominant dimension bounds.

use crate::algebra::{vec_is_zero, Algebra, Elem};
use crate::error::AlgError;
use crate::linalg::{Mat, Subspace};
use crate::rep::{
    direct_sum, full_rank_in_span, iso_search, BiRep, IsoVerdict, Rep, SearchOpts, Side,
};

use std::sync::Arc;

/// Three-valued outcome for structural predicates. A failure carries a
/// sound reason; Unknown means the search budget ran out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Holds,
    Fails(String),
    Unknown(String),
}

impl Check {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }
}

/// Radical of the algebra as a subspace.
pub fn radical(alg: &Algebra) -> Result<Subspace, AlgError> {
    alg.radical().ok_or_else(|| {
        AlgError::Precondition(
            "radical computation needs a quiver presentation or characteristic zero".into(),
        )
    })
}

/// Socle of the regular left module: the joint kernel of left multiplication
/// by a radical basis.
pub fn left_socle(alg: &Algebra) -> Result<Subspace, AlgError> {
    let rad = radical(alg)?;
    if rad.dim() == 0 {
        return Ok(Subspace::from_vectors(
            alg.field,
            alg.dim,
            (0..alg.dim).map(|i| alg.basis_elem(i)).collect(),
        ));
    }
    let mut sys: Option<Mat> = None;
    for r in 0..rad.dim() {
        let l = alg.lmul_mat(&rad.basis.row(r));
        sys = Some(match sys {
            None => l,
            Some(s) => s.vstack(&l),
        });
    }
    Ok(sys.unwrap().kernel())
}

/// Socle of a left module: joint kernel of the radical action.
pub fn module_socle(m: &Rep) -> Result<Subspace, AlgError> {
    let rad = radical(&m.alg)?;
    if rad.dim() == 0 {
        return Ok(Subspace::from_vectors(
            m.field(),
            m.dim,
            (0..m.dim)
                .map(|i| {
                    let mut v = vec![m.field().zero(); m.dim];
                    v[i] = m.field().one();
                    v
                })
                .collect(),
        ));
    }
    let mut sys: Option<Mat> = None;
    for r in 0..rad.dim() {
        let a = m.act_of(&rad.basis.row(r));
        sys = Some(match sys {
            None => a,
            Some(s) => s.vstack(&a),
        });
    }
    Ok(sys.unwrap().kernel())
}

/// Multiplicity of each simple S_v in the socle of a left module over a
/// quiver-presented algebra.
pub fn socle_multiplicities(m: &Rep) -> Result<Vec<usize>, AlgError> {
    let q = m.alg.quiver.as_ref().ok_or(AlgError::NotQuiverPresented)?;
    let soc = module_socle(m)?;
    let mut out = Vec::new();
    for &ev in &q.vertex_idems {
        let op = &m.acts[ev];
        let vecs: Vec<Elem> = (0..soc.dim()).map(|r| op.apply(&soc.basis.row(r))).collect();
        out.push(Subspace::from_vectors(m.field(), m.dim, vecs).dim());
    }
    Ok(out)
}

/// The sum of the chosen vertex idempotents.
pub fn idempotent_from_vertices(alg: &Algebra, verts: &[usize]) -> Result<Elem, AlgError> {
    let q = alg.quiver.as_ref().ok_or(AlgError::NotQuiverPresented)?;
    let mut e = vec![alg.field.zero(); alg.dim];
    for &v in verts {
        e[q.vertex_idems[v]] = alg.field.one();
    }
    Ok(e)
}

/// Projective indecomposable A e_v as a left module.
pub fn proj_left(alg: &Arc<Algebra>, v: usize) -> Result<Rep, AlgError> {
    let q = alg.quiver.as_ref().ok_or(AlgError::NotQuiverPresented)?;
    let e = alg.basis_elem(q.vertex_idems[v]);
    let sub = Subspace::from_vectors(
        alg.field,
        alg.dim,
        (0..alg.dim).map(|i| alg.mul(&alg.basis_elem(i), &e)).collect(),
    );
    Rep::regular(alg.clone(), Side::Left).sub_rep(&sub)
}

/// Injective indecomposable D(e_v A) as a left module.
pub fn inj_left(alg: &Arc<Algebra>, v: usize) -> Result<Rep, AlgError> {
    let q = alg.quiver.as_ref().ok_or(AlgError::NotQuiverPresented)?;
    let e = alg.basis_elem(q.vertex_idems[v]);
    let sub = Subspace::from_vectors(
        alg.field,
        alg.dim,
        (0..alg.dim).map(|i| alg.mul(&e, &alg.basis_elem(i))).collect(),
    );
    Ok(Rep::regular(alg.clone(), Side::Right).sub_rep(&sub)?.dual())
}

/// Left module A e for an arbitrary idempotent e.
pub fn left_ideal_rep(alg: &Arc<Algebra>, e: &Elem) -> Result<Rep, AlgError> {
    check_idempotent(alg, e)?;
    let sub = Subspace::from_vectors(
        alg.field,
        alg.dim,
        (0..alg.dim).map(|i| alg.mul(&alg.basis_elem(i), e)).collect(),
    );
    Rep::regular(alg.clone(), Side::Left).sub_rep(&sub)
}

/// Right module e A for an arbitrary idempotent e.
pub fn right_ideal_rep(alg: &Arc<Algebra>, e: &Elem) -> Result<Rep, AlgError> {
    check_idempotent(alg, e)?;
    let sub = Subspace::from_vectors(
        alg.field,
        alg.dim,
        (0..alg.dim).map(|i| alg.mul(e, &alg.basis_elem(i))).collect(),
    );
    Rep::regular(alg.clone(), Side::Right).sub_rep(&sub)
}

pub fn check_idempotent(alg: &Algebra, e: &Elem) -> Result<(), AlgError> {
    if alg.mul(e, e) != *e || vec_is_zero(e) {
        return Err(AlgError::NotIdempotent);
    }
    Ok(())
}

/// Corner data for an idempotent e: the algebra e A e with verified laws,
/// A e as an (A, eAe)-bimodule and e A as an (eAe, A)-bimodule.
pub struct CornerData {
    pub e: Elem,
    pub eae: Arc<Algebra>,
    /// basis of e A e inside A
    pub eae_sub: Subspace,
    /// basis of A e inside A
    pub ae_sub: Subspace,
    /// basis of e A inside A
    pub ea_sub: Subspace,
    pub ae: BiRep,
    pub ea: BiRep,
}

pub fn corner(alg: &Arc<Algebra>, e: &Elem) -> Result<CornerData, AlgError> {
    check_idempotent(alg, e)?;
    let field = alg.field;
    let eae_sub = Subspace::from_vectors(
        field,
        alg.dim,
        (0..alg.dim)
            .map(|i| alg.mul(&alg.mul(e, &alg.basis_elem(i)), e))
            .collect(),
    );
    let d = eae_sub.dim();
    let mut sc = vec![field.zero(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            let p = alg.mul(&eae_sub.basis.row(i), &eae_sub.basis.row(j));
            let c = eae_sub
                .coordinates(&p)
                .ok_or_else(|| AlgError::InternalInconsistency("corner not closed".into()))?;
            for k in 0..d {
                sc[(i * d + j) * d + k] = c[k].clone();
            }
        }
    }
    let unit = eae_sub
        .coordinates(e)
        .ok_or_else(|| AlgError::InternalInconsistency("e not in corner".into()))?;
    let eae = Arc::new(Algebra::from_sc(field, d, sc, unit, None)?);

    // A e: left action of A restricted, right action of eAe basis elements
    let ae_sub = Subspace::from_vectors(
        field,
        alg.dim,
        (0..alg.dim).map(|i| alg.mul(&alg.basis_elem(i), e)).collect(),
    );
    let ae_left = Rep::regular(alg.clone(), Side::Left).sub_rep(&ae_sub)?;
    let ae_right: Vec<Mat> = (0..d)
        .map(|j| {
            let u = eae_sub.basis.row(j);
            let mut m = Mat::zero(field, ae_sub.dim(), ae_sub.dim());
            for c in 0..ae_sub.dim() {
                let img = alg.mul(&ae_sub.basis.row(c), &u);
                let co = ae_sub.coordinates(&img).unwrap();
                for r in 0..ae_sub.dim() {
                    m.set(r, c, co[r].clone());
                }
            }
            m
        })
        .collect();
    let ae = BiRep::new(alg.clone(), eae.clone(), ae_left.acts, ae_right)?;

    let ea_sub = Subspace::from_vectors(
        field,
        alg.dim,
        (0..alg.dim).map(|i| alg.mul(e, &alg.basis_elem(i))).collect(),
    );
    let ea_right = Rep::regular(alg.clone(), Side::Right).sub_rep(&ea_sub)?;
    let ea_left: Vec<Mat> = (0..d)
        .map(|j| {
            let u = eae_sub.basis.row(j);
            let mut m = Mat::zero(field, ea_sub.dim(), ea_sub.dim());
            for c in 0..ea_sub.dim() {
                let img = alg.mul(&u, &ea_sub.basis.row(c));
                let co = ea_sub.coordinates(&img).unwrap();
                for r in 0..ea_sub.dim() {
                    m.set(r, c, co[r].clone());
                }
            }
            m
        })
        .collect();
    let ea = BiRep::new(eae.clone(), alg.clone(), ea_left, ea_right.acts)?;

    Ok(CornerData { e: e.clone(), eae, eae_sub, ae_sub, ea_sub, ae, ea })
}

/// Is A e isomorphic to D(e A) as left modules? (A e self-dual through e.)
pub fn self_dual_check(alg: &Arc<Algebra>, e: &Elem, opts: &SearchOpts) -> Result<IsoVerdict, AlgError> {
    let ae = left_ideal_rep(alg, e)?;
    let dea = right_ideal_rep(alg, e)?.dual();
    Ok(iso_search(&ae, &dea, opts))
}

/// Smallest set of vertices (by size, then lexicographically) whose
/// idempotent e gives a faithful self-dual A e. The scan is exact: a
/// candidate is skipped only on a decisive negative, and an Unknown verdict
/// aborts with an error rather than guessing.
pub fn find_faithful_selfdual_idem(
    alg: &Arc<Algebra>,
    opts: &SearchOpts,
) -> Result<Option<(Vec<usize>, Elem)>, AlgError> {
    let q = alg.quiver.as_ref().ok_or(AlgError::NotQuiverPresented)?;
    let nv = q.vertices.len();
    for size in 1..=nv {
        for subset in subsets_of_size(nv, size) {
            let e = idempotent_from_vertices(alg, &subset)?;
            let ae = left_ideal_rep(alg, &e)?;
            if !ae.is_faithful() {
                continue;
            }
            match self_dual_check(alg, &e, opts)? {
                IsoVerdict::Isomorphic(_) => return Ok(Some((subset, e))),
                IsoVerdict::NotIsomorphic(_) => continue,
                IsoVerdict::Unknown(t) => {
                    return Err(AlgError::Inconclusive(format!(
                        "self-duality search for vertex set {subset:?} exhausted {t} trials"
                    )))
                }
            }
        }
    }
    Ok(None)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Witness that the injective at a vertex is projective: an isomorphism onto
/// the projective indecomposable at some vertex.
#[derive(Clone)]
pub struct InjProjWitness {
    pub inj_vertex: usize,
    pub proj_vertex: usize,
    pub iso: Mat,
}

/// Is every summand of the injective module with the given socle
/// multiplicities projective? On success returns one witness per vertex of
/// nonzero multiplicity.
fn injectives_projective(
    alg: &Arc<Algebra>,
    mult: &[usize],
    opts: &SearchOpts,
) -> Result<(Check, Vec<InjProjWitness>), AlgError> {
    let nv = mult.len();
    let mut witnesses = Vec::new();
    for v in 0..nv {
        if mult[v] == 0 {
            continue;
        }
        let iv = inj_left(alg, v)?;
        let mut verdict = Check::Fails(format!(
            "injective at vertex {v} is not isomorphic to any projective indecomposable"
        ));
        for w in 0..nv {
            let pw = proj_left(alg, w)?;
            match iso_search(&iv, &pw, opts) {
                IsoVerdict::Isomorphic(m) => {
                    witnesses.push(InjProjWitness { inj_vertex: v, proj_vertex: w, iso: m });
                    verdict = Check::Holds;
                    break;
                }
                IsoVerdict::NotIsomorphic(_) => {}
                IsoVerdict::Unknown(t) => {
                    verdict = Check::Unknown(format!(
                        "projectivity of injective at vertex {v} undecided after {t} trials"
                    ));
                }
            }
        }
        match verdict {
            Check::Holds => {}
            other => return Ok((other, witnesses)),
        }
    }
    Ok((Check::Holds, witnesses))
}

/// Dominant dimension bound: does A have dominant dimension >= d, for d in
/// {1, 2}? Uses a minimal injective copresentation 0 -> A -> I0 -> I1 and
/// checks that the needed injectives are projective.
pub fn domdim_at_least(alg: &Arc<Algebra>, d: usize, opts: &SearchOpts) -> Result<Check, AlgError> {
    Ok(domdim_with_witness(alg, d, opts)?.0)
}

/// All checked facts behind a dominant-dimension verdict, re-checkable by
/// direct substitution.
#[derive(Clone, Default)]
pub struct DomdimWitness {
    /// self-injective shortcut: an isomorphism A -> D(A) of left modules
    pub self_injective: Option<Mat>,
    pub socle_mults: Vec<usize>,
    pub inj_proj: Vec<InjProjWitness>,
    /// embedding A -> I0 with I0 built from socle_mults (depth 2 only)
    pub embedding: Option<Mat>,
    pub coker_mults: Vec<usize>,
    pub coker_inj_proj: Vec<InjProjWitness>,
}

pub fn domdim_with_witness(
    alg: &Arc<Algebra>,
    d: usize,
    opts: &SearchOpts,
) -> Result<(Check, DomdimWitness), AlgError> {
    assert!(d == 1 || d == 2);
    let mut wit = DomdimWitness::default();
    // self-injective algebras have infinite dominant dimension
    let reg = Rep::regular(alg.clone(), Side::Left);
    let dual = Rep::regular(alg.clone(), Side::Right).dual();
    if let IsoVerdict::Isomorphic(m) = iso_search(&reg, &dual, opts) {
        wit.self_injective = Some(m);
        return Ok((Check::Holds, wit));
    }
    let q = alg.quiver.as_ref().ok_or(AlgError::NotQuiverPresented)?;
    let nv = q.vertices.len();
    let mult = socle_multiplicities(&reg)?;
    wit.socle_mults = mult.clone();
    let (check, ws) = injectives_projective(alg, &mult, opts)?;
    wit.inj_proj = ws;
    match check {
        Check::Holds => {}
        other => return Ok((other, wit)),
    }
    if d == 1 {
        return Ok((Check::Holds, wit));
    }
    // I0 = sum of injectives matching the socle of A; an embedding with
    // matching socle multiplicities is automatically essential
    let i0 = envelope_from_mults(alg, &mult)?;
    let homs = crate::rep::hom_space(&reg, &i0);
    let emb = full_rank_in_span(&homs, alg.dim, opts).ok_or_else(|| {
        AlgError::Inconclusive("no embedding into the injective envelope found".into())
    })?;
    wit.embedding = Some(emb.clone());
    let img = Subspace::from_vectors(
        alg.field,
        i0.dim,
        (0..alg.dim).map(|c| emb.col(c)).collect(),
    );
    let coker = i0.quotient_rep(&img)?;
    if coker.dim == 0 {
        return Ok((Check::Holds, wit));
    }
    let cmult = socle_multiplicities(&coker)?;
    wit.coker_mults = cmult.clone();
    let _ = nv;
    let (check, ws) = injectives_projective(alg, &cmult, opts)?;
    wit.coker_inj_proj = ws;
    Ok((check, wit))
}

/// Direct sum of injectives prescribed by socle multiplicities.
pub fn envelope_from_mults(alg: &Arc<Algebra>, mult: &[usize]) -> Result<Rep, AlgError> {
    let mut parts: Vec<Rep> = Vec::new();
    for (v, &m) in mult.iter().enumerate() {
        for _ in 0..m {
            parts.push(inj_left(alg, v)?);
        }
    }
    let refs: Vec<&Rep> = parts.iter().collect();
    Ok(direct_sum(&refs))
}

/// Re-check a dominant-dimension witness by substitution only (no search).
pub fn verify_domdim_witness(
    alg: &Arc<Algebra>,
    d: usize,
    wit: &DomdimWitness,
) -> Result<(), AlgError> {
    assert!(d == 1 || d == 2);
    let reg = Rep::regular(alg.clone(), Side::Left);
    if let Some(m) = &wit.self_injective {
        let dual = Rep::regular(alg.clone(), Side::Right).dual();
        verify_module_iso(&reg, &dual, m)?;
        return Ok(());
    }
    let mult = socle_multiplicities(&reg)?;
    if mult != wit.socle_mults {
        return Err(AlgError::VerificationFailed("socle multiplicities differ".into()));
    }
    verify_inj_proj(alg, &mult, &wit.inj_proj)?;
    if d == 1 {
        return Ok(());
    }
    let emb = wit.embedding.as_ref().ok_or_else(|| {
        AlgError::VerificationFailed("missing embedding witness".into())
    })?;
    let i0 = envelope_from_mults(alg, &mult)?;
    if emb.rows != i0.dim || emb.cols != alg.dim || emb.rank() != alg.dim {
        return Err(AlgError::VerificationFailed("embedding is not injective".into()));
    }
    for i in 0..alg.dim {
        if emb.mul(&reg.acts[i]) != i0.acts[i].mul(emb) {
            return Err(AlgError::VerificationFailed("embedding is not a module map".into()));
        }
    }
    let img = Subspace::from_vectors(
        alg.field,
        i0.dim,
        (0..alg.dim).map(|c| emb.col(c)).collect(),
    );
    let coker = i0.quotient_rep(&img)?;
    if coker.dim == 0 {
        return Ok(());
    }
    let cmult = socle_multiplicities(&coker)?;
    if cmult != wit.coker_mults {
        return Err(AlgError::VerificationFailed("cokernel socle multiplicities differ".into()));
    }
    verify_inj_proj(alg, &cmult, &wit.coker_inj_proj)
}

fn verify_inj_proj(
    alg: &Arc<Algebra>,
    mult: &[usize],
    witnesses: &[InjProjWitness],
) -> Result<(), AlgError> {
    for (v, &m) in mult.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let w = witnesses.iter().find(|w| w.inj_vertex == v).ok_or_else(|| {
            AlgError::VerificationFailed(format!("missing projectivity witness at vertex {v}"))
        })?;
        let iv = inj_left(alg, v)?;
        let pw = proj_left(alg, w.proj_vertex)?;
        verify_module_iso(&iv, &pw, &w.iso)?;
    }
    Ok(())
}

/// Check that a matrix is an invertible module map M -> N by substitution.
pub fn verify_module_iso(m: &Rep, n: &Rep, w: &Mat) -> Result<(), AlgError> {
    if w.rows != n.dim || w.cols != m.dim || !w.is_invertible() {
        return Err(AlgError::VerificationFailed("witness is not invertible".into()));
    }
    for i in 0..m.alg.dim {
        if w.mul(&m.acts[i]) != n.acts[i].mul(w) {
            return Err(AlgError::VerificationFailed("witness is not a module map".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{algebra_from_quiver, matrix_algebra, Arrow, QuiverPresentation};
    use crate::scalar::FieldSpec;

    fn quiver_b(field: FieldSpec) -> Arc<Algebra> {
        let mut q = QuiverPresentation::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow { name: "b1".into(), source: 0, target: 1 },
                Arrow { name: "b2".into(), source: 1, target: 0 },
            ],
        );
        q.relations =
            vec![vec![(field.one(), vec![0, 1])], vec![(field.one(), vec![1, 0])]];
        Arc::new(algebra_from_quiver(&q, field).unwrap())
    }

    fn quiver_a10(field: FieldSpec) -> Arc<Algebra> {
        let mut q = QuiverPresentation::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                Arrow { name: "a1".into(), source: 0, target: 2 },
                Arrow { name: "a2".into(), source: 1, target: 3 },
                Arrow { name: "a3".into(), source: 2, target: 1 },
                Arrow { name: "a4".into(), source: 3, target: 0 },
            ],
        );
        q.relations =
            vec![vec![(field.one(), vec![2, 1])], vec![(field.one(), vec![3, 0])]];
        Arc::new(algebra_from_quiver(&q, field).unwrap())
    }

    #[test]
    fn radical_and_socle_of_a10() {
        let a = quiver_a10(FieldSpec::Rational);
        let rad = radical(&a).unwrap();
        assert_eq!(rad.dim(), 6); // arrows and the two length-2 paths
        let soc = left_socle(&a).unwrap();
        // socle of the regular left module: a1a3, a2a4, a3, a4
        assert_eq!(soc.dim(), 4);
        let reg = Rep::regular(a.clone(), Side::Left);
        assert_eq!(socle_multiplicities(&reg).unwrap(), vec![2, 2, 0, 0]);
    }

    #[test]
    fn radical_matches_trace_criterion() {
        // quiver radical vs the trace-form radical on the same algebra
        let a = quiver_a10(FieldSpec::Rational);
        let via_quiver = radical(&a).unwrap();
        let mut plain = a.as_ref().clone();
        plain.quiver = None;
        let via_trace = plain.radical().unwrap();
        assert!(via_quiver.equal(&via_trace).unwrap());
    }

    #[test]
    fn semisimple_socle_is_everything() {
        let m2 = Arc::new(matrix_algebra(FieldSpec::Rational, 2));
        let rad = radical(&m2).unwrap();
        assert_eq!(rad.dim(), 0);
        assert_eq!(left_socle(&m2).unwrap().dim(), 4);
    }

    #[test]
    fn corner_of_a10_is_the_four_dim_algebra() {
        let a = quiver_a10(FieldSpec::Rational);
        let e = idempotent_from_vertices(&a, &[0, 1]).unwrap();
        let c = corner(&a, &e).unwrap();
        assert_eq!(c.eae.dim, 4);
        c.eae.verify_laws().unwrap();
        assert_eq!(c.ae.dim, 6); // paths ending at vertices 1, 2
        assert_eq!(c.ea.dim, 6);
        // the corner is self-injective, like the 4-dim two-vertex algebra
        let reg = Rep::regular(c.eae.clone(), Side::Left);
        let dual = Rep::regular(c.eae.clone(), Side::Right).dual();
        assert!(iso_search(&reg, &dual, &SearchOpts::default()).is_iso());
    }

    #[test]
    fn faithful_selfdual_idempotent_of_a10() {
        let a = quiver_a10(FieldSpec::Rational);
        let found = find_faithful_selfdual_idem(&a, &SearchOpts::default()).unwrap();
        let (verts, _) = found.expect("expected a faithful self-dual idempotent");
        assert_eq!(verts, vec![0, 1]);
    }

    #[test]
    fn selfinjective_has_full_idempotent() {
        let b = quiver_b(FieldSpec::Rational);
        // e = e1 alone: Ae1 is not faithful for this algebra? it is: dims..
        // the scan should find some set; for a self-injective algebra the
        // full set always works
        let found = find_faithful_selfdual_idem(&b, &SearchOpts::default()).unwrap();
        assert!(found.is_some());
    }

    #[test]
    fn domdim_of_a10_is_at_least_two() {
        let a = quiver_a10(FieldSpec::Rational);
        assert_eq!(domdim_at_least(&a, 1, &SearchOpts::default()).unwrap(), Check::Holds);
        assert_eq!(domdim_at_least(&a, 2, &SearchOpts::default()).unwrap(), Check::Holds);
    }

    #[test]
    fn domdim_of_a10_gf5() {
        let a = quiver_a10(FieldSpec::Prime(5));
        assert_eq!(domdim_at_least(&a, 2, &SearchOpts::default()).unwrap(), Check::Holds);
    }

    #[test]
    fn domdim_fails_for_low_dominant_dimension() {
        // path algebra of 1 -> 2 (no relations needed; finite dimensional):
        // dominant dimension of the hereditary algebra k(1->2) is 1, not 2
        let q = QuiverPresentation::new(
            vec!["1".into(), "2".into()],
            vec![Arrow { name: "a".into(), source: 0, target: 1 }],
        );
        let a = Arc::new(algebra_from_quiver(&q, FieldSpec::Rational).unwrap());
        assert_eq!(a.dim, 3);
        let d2 = domdim_at_least(&a, 2, &SearchOpts::default()).unwrap();
        assert!(matches!(d2, Check::Fails(_)), "{d2:?}");
    }

    #[test]
    fn non_idempotent_rejected() {
        let a = quiver_a10(FieldSpec::Rational);
        let q = a.quiver.as_ref().unwrap();
        let x = a.basis_elem(q.arrow_basis[0]);
        assert!(matches!(corner(&a, &x), Err(AlgError::NotIdempotent)));
    }
}
