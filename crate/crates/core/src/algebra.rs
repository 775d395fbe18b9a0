//! Finite-dimensional associative unital algebras as structure-constant
//! tables, plus construction from quiver-with-relations presentations.
//!
//! Path composition is left-to-right: `p*q` means "first p, then q", so a
//! word `a1a3` is the path traversing arrow a1 and then arrow a3. The
//! `right_to_left` presentation option flips the reading of relation words
//! and products for inputs written in the other convention.

use crate::error::AlgError;
use crate::linalg::{Mat, Subspace};
use crate::scalar::{FieldSpec, Scalar};
use std::fmt::Write as _;
use std::sync::Arc;

/// Coordinate vector of an algebra element in the fixed basis.
pub type Elem = Vec<Scalar>;

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Elem {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Elem {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Elem {
    a.iter().map(|x| x.mul(c)).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// One basis path of a quiver algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPath {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl BasisPath {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Quiver side-information kept on algebras built from presentations;
/// the structural operations (radical, socle, dominant dimension) need it.
#[derive(Debug, Clone)]
pub struct QuiverInfo {
    pub vertices: Vec<String>,
    pub arrow_names: Vec<String>,
    /// basis index of the trivial path at each vertex
    pub vertex_idems: Vec<usize>,
    /// basis index of each arrow
    pub arrow_basis: Vec<usize>,
    pub basis_paths: Vec<BasisPath>,
}

#[derive(Debug, Clone)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    /// sc[i][j][k] flattened: b_i * b_j = sum_k sc[i][j][k] b_k
    sc: Vec<Scalar>,
    pub unit: Elem,
    pub labels: Option<Vec<String>>,
    pub quiver: Option<QuiverInfo>,
    /// generating set (coordinate vectors); None means all basis elements.
    /// Used to cut intertwiner systems down to a generating family.
    pub gens: Option<Vec<Elem>>,
}

pub type ARef = Arc<Algebra>;

impl Algebra {
    pub fn sc(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Verified constructor: checks associativity and the unit laws exhaustively.
    pub fn from_sc(
        field: FieldSpec,
        dim: usize,
        sc: Vec<Scalar>,
        unit: Elem,
        labels: Option<Vec<String>>,
    ) -> Result<Algebra, AlgError> {
        assert_eq!(sc.len(), dim * dim * dim);
        assert_eq!(unit.len(), dim);
        let a = Algebra { field, dim, sc, unit, labels, quiver: None, gens: None };
        a.verify_laws()?;
        Ok(a)
    }

    /// Full associativity and unit-law check by expanding the table.
    pub fn verify_laws(&self) -> Result<(), AlgError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // (b_i b_j) b_k vs b_i (b_j b_k), coefficient of b_m
                    for m in 0..n {
                        let mut lhs = self.field.zero();
                        let mut rhs = self.field.zero();
                        for t in 0..n {
                            let a = self.sc(i, j, t);
                            if !a.is_zero() {
                                lhs = lhs.add(&a.mul(self.sc(t, k, m)));
                            }
                            let b = self.sc(j, k, t);
                            if !b.is_zero() {
                                rhs = rhs.add(&b.mul(self.sc(i, t, m)));
                            }
                        }
                        if lhs != rhs {
                            return Err(AlgError::NotAssociative(i, j, k));
                        }
                    }
                }
            }
        }
        for i in 0..n {
            let mut e = vec![self.field.zero(); n];
            e[i] = self.field.one();
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgError::UnitLawFails(i));
            }
        }
        Ok(())
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut e = vec![self.field.zero(); self.dim];
        e[i] = self.field.one();
        e
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Elem {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let c = a[i].mul(&b[j]);
                for k in 0..n {
                    let s = self.sc(i, j, k);
                    if !s.is_zero() {
                        out[k] = out[k].add(&c.mul(s));
                    }
                }
            }
        }
        out
    }

    /// Left multiplication operator L_a (column j = a * b_j).
    pub fn lmul_mat(&self, a: &[Scalar]) -> Mat {
        let n = self.dim;
        let mut m = Mat::zero(self.field, n, n);
        for j in 0..n {
            let col = self.mul(a, &self.basis_elem(j));
            for k in 0..n {
                m.set(k, j, col[k].clone());
            }
        }
        m
    }

    /// Right multiplication operator R_a (column j = b_j * a).
    pub fn rmul_mat(&self, a: &[Scalar]) -> Mat {
        let n = self.dim;
        let mut m = Mat::zero(self.field, n, n);
        for j in 0..n {
            let col = self.mul(&self.basis_elem(j), a);
            for k in 0..n {
                m.set(k, j, col[k].clone());
            }
        }
        m
    }

    pub fn is_invertible_elem(&self, a: &[Scalar]) -> bool {
        self.lmul_mat(a).is_invertible()
    }

    pub fn inverse_elem(&self, a: &[Scalar]) -> Option<Elem> {
        // solve a * x = 1; in a finite-dimensional unital algebra a one-sided
        // inverse of an invertible operator is two-sided
        let la = self.lmul_mat(a);
        let x = la.solve(&self.unit)?;
        if self.mul(&x, a) == self.unit {
            Some(x)
        } else {
            None
        }
    }

    /// Generating family as coordinate vectors (defaults to the whole basis).
    pub fn generators(&self) -> Vec<Elem> {
        match &self.gens {
            Some(g) => g.clone(),
            None => (0..self.dim).map(|i| self.basis_elem(i)).collect(),
        }
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("b{}", i + 1),
        }
    }

    /// Opposite algebra: sc_op[i][j][k] = sc[j][i][k].
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut sc = vec![self.field.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    sc[(i * n + j) * n + k] = self.sc(j, i, k).clone();
                }
            }
        }
        Algebra {
            field: self.field,
            dim: n,
            sc,
            unit: self.unit.clone(),
            labels: self.labels.clone(),
            quiver: None,
            gens: self.gens.clone(),
        }
    }

    /// Radical as a subspace of the algebra. Quiver algebras read it off the
    /// path lengths; otherwise Dickson's trace criterion (characteristic 0).
    pub fn radical(&self) -> Option<Subspace> {
        if let Some(q) = &self.quiver {
            let vecs: Vec<Elem> = (0..self.dim)
                .filter(|&i| q.basis_paths[i].len() >= 1)
                .map(|i| self.basis_elem(i))
                .collect();
            return Some(Subspace::from_vectors(self.field, self.dim, vecs));
        }
        if self.field != FieldSpec::Rational {
            return None;
        }
        // rad = { x : tr(L_x L_{b_j}) = 0 for all j }
        let n = self.dim;
        let lmats: Vec<Mat> = (0..n).map(|i| self.lmul_mat(&self.basis_elem(i))).collect();
        let mut sys = Mat::zero(self.field, n, n);
        for j in 0..n {
            for i in 0..n {
                let prod = lmats[i].mul(&lmats[j]);
                let mut tr = self.field.zero();
                for d in 0..n {
                    tr = tr.add(prod.at(d, d));
                }
                sys.set(j, i, tr);
            }
        }
        let k = sys.kernel();
        let vecs = (0..k.dim()).map(|i| k.basis.row(i)).collect();
        Some(Subspace::from_vectors(self.field, n, vecs))
    }
}

/// Tensor product A (x) B^op; bimodules over (A, B) become left modules over
/// this algebra. Basis index of b_i (x) b_j^op is i * dim(B) + j.
pub fn pair_algebra(a: &Algebra, b: &Algebra) -> Algebra {
    assert_eq!(a.field, b.field);
    let (n, m) = (a.dim, b.dim);
    let dim = n * m;
    let mut sc = vec![a.field.zero(); dim * dim * dim];
    for i1 in 0..n {
        for j1 in 0..n {
            for i2 in 0..m {
                for j2 in 0..m {
                    // (x (x) u^op)(y (x) v^op) = xy (x) (vu)^op
                    for k1 in 0..n {
                        let s1 = a.sc(i1, j1, k1);
                        if s1.is_zero() {
                            continue;
                        }
                        for k2 in 0..m {
                            let s2 = b.sc(j2, i2, k2);
                            if s2.is_zero() {
                                continue;
                            }
                            let i = i1 * m + i2;
                            let j = j1 * m + j2;
                            let k = k1 * m + k2;
                            sc[(i * dim + j) * dim + k] = s1.mul(s2);
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![a.field.zero(); dim];
    for i in 0..n {
        if a.unit[i].is_zero() {
            continue;
        }
        for j in 0..m {
            if !b.unit[j].is_zero() {
                unit[i * m + j] = a.unit[i].mul(&b.unit[j]);
            }
        }
    }
    // generators: g (x) 1 and 1 (x) h over the factors' generating families
    let mut gens: Vec<Elem> = Vec::new();
    for g in a.generators() {
        let mut v = vec![a.field.zero(); dim];
        for i in 0..n {
            if g[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b.unit[j].is_zero() {
                    v[i * m + j] = g[i].mul(&b.unit[j]);
                }
            }
        }
        gens.push(v);
    }
    for h in b.generators() {
        let mut v = vec![a.field.zero(); dim];
        for i in 0..n {
            if a.unit[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if !h[j].is_zero() {
                    v[i * m + j] = a.unit[i].mul(&h[j]);
                }
            }
        }
        gens.push(v);
    }
    Algebra { field: a.field, dim, sc, unit, labels: None, quiver: None, gens: Some(gens) }
}

/// Enveloping algebra A (x) A^op.
pub fn enveloping(a: &Algebra) -> Algebra {
    pair_algebra(a, a)
}

#[derive(Debug, Clone)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// One relation: a linear combination of parallel paths, each path a
/// sequence of arrow indices in left-to-right order.
pub type Relation = Vec<(Scalar, Vec<usize>)>;

#[derive(Debug, Clone)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub length_cap: usize,
    pub right_to_left: bool,
}

impl QuiverPresentation {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> QuiverPresentation {
        QuiverPresentation { vertices, arrows, relations: Vec::new(), length_cap: 32, right_to_left: false }
    }
}

/// Internal path representation during construction (always left-to-right).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Path {
    len: usize,
    arrows: Vec<usize>,
    source: usize,
}

impl Path {
    fn trivial(v: usize) -> Path {
        Path { len: 0, arrows: Vec::new(), source: v }
    }

    fn target(&self, arrows: &[Arrow]) -> usize {
        match self.arrows.last() {
            Some(&a) => arrows[a].target,
            None => self.source,
        }
    }
}

pub fn algebra_from_quiver(q: &QuiverPresentation, field: FieldSpec) -> Result<Algebra, AlgError> {
    // validate relations: parallel paths of length >= 2
    let mut relations: Vec<Relation> = Vec::new();
    for rel in &q.relations {
        let mut fixed: Relation = Vec::new();
        let mut endpoints: Option<(usize, usize)> = None;
        for (c, word) in rel {
            let arrows: Vec<usize> = if q.right_to_left {
                word.iter().rev().cloned().collect()
            } else {
                word.clone()
            };
            if arrows.len() < 2 {
                return Err(AlgError::BadRelation("relation term of length < 2".into()));
            }
            for w in arrows.windows(2) {
                if q.arrows[w[0]].target != q.arrows[w[1]].source {
                    return Err(AlgError::BadRelation("non-composable word".into()));
                }
            }
            let ep = (q.arrows[arrows[0]].source, q.arrows[*arrows.last().unwrap()].target);
            match endpoints {
                None => endpoints = Some(ep),
                Some(e) if e != ep => {
                    return Err(AlgError::BadRelation("relation mixes non-parallel paths".into()))
                }
                _ => {}
            }
            fixed.push((c.clone(), arrows));
        }
        relations.push(fixed);
    }

    // enumerate paths by length
    let mut by_len: Vec<Vec<Path>> = vec![q.vertices.iter().enumerate().map(|(v, _)| Path::trivial(v)).collect()];
    let extend = |paths: &[Path]| -> Vec<Path> {
        let mut out = Vec::new();
        for p in paths {
            let t = p.target(&q.arrows);
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == t {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    out.push(Path { len: p.len + 1, arrows, source: p.source });
                }
            }
        }
        out.sort();
        out
    };

    let min_rel_len: Vec<usize> =
        relations.iter().map(|r| r.iter().map(|(_, w)| w.len()).min().unwrap()).collect();

    // find the saturation length: smallest L with every length-L path inside
    // the window span of p * r * q
    let mut sat: Option<usize> = None;
    for l in 1..=q.length_cap {
        let prev = by_len.last().unwrap().clone();
        by_len.push(extend(&prev));
        if relations.is_empty() {
            if by_len[l].is_empty() {
                sat = Some(l);
                break;
            }
            continue;
        }
        if by_len[l].is_empty() {
            sat = Some(l);
            break;
        }
        // index of every path with length <= l
        let all: Vec<Path> = by_len.iter().flatten().cloned().collect();
        let index = |p: &Path| all.iter().position(|x| x == p);
        let total = all.len();
        let mut span_rows: Vec<Vec<Scalar>> = Vec::new();
        // products p * r * s with every term length <= l
        for (ri, rel) in relations.iter().enumerate() {
            let max_len = rel.iter().map(|(_, w)| w.len()).max().unwrap();
            let _ = min_rel_len[ri];
            if max_len > l {
                continue;
            }
            let budget = l - max_len;
            for lp in 0..=budget {
                for rp in 0..=(budget - lp) {
                    for left in &by_len[lp] {
                        for right in &by_len[rp] {
                            let mut row = vec![field.zero(); total];
                            let mut nonzero = false;
                            for (c, word) in rel {
                                // compose left + word + right when endpoints match
                                if q.arrows[word[0]].source != left.target(&q.arrows) {
                                    continue;
                                }
                                let wt = q.arrows[*word.last().unwrap()].target;
                                if right.source != wt {
                                    continue;
                                }
                                let mut arrows = left.arrows.clone();
                                arrows.extend(word.iter().cloned());
                                arrows.extend(right.arrows.iter().cloned());
                                let p = Path { len: arrows.len(), arrows, source: left.source };
                                if let Some(ix) = index(&p) {
                                    row[ix] = row[ix].add(c);
                                    nonzero = true;
                                }
                            }
                            if nonzero {
                                span_rows.push(row);
                            }
                        }
                    }
                }
            }
        }
        let span = Subspace::from_vectors(field, total, span_rows);
        let killed = by_len[l].iter().all(|p| {
            let ix = index(p).unwrap();
            let mut v = vec![field.zero(); total];
            v[ix] = field.one();
            span.contains(&v)
        });
        if killed {
            sat = Some(l);
            break;
        }
    }
    let sat = sat.ok_or(AlgError::NotAdmissibleWithinCap(q.length_cap))?;

    // survivors: paths of length < sat, ordered descending so that RREF
    // pivots eliminate the lexicographically largest paths first
    let mut survivors: Vec<Path> = by_len[..sat].iter().flatten().cloned().collect();
    survivors.sort();
    let ordered = survivors.clone(); // ascending (length, lex)
    let coord_of = |p: &Path| -> Option<usize> { ordered.iter().position(|x| x == p) };
    let total = ordered.len();
    // column c of the elimination matrix corresponds to ordered[total-1-c]
    let colix = |i: usize| total - 1 - i;

    // ideal window: truncations of p * r * s to lengths < sat
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ri, rel) in relations.iter().enumerate() {
        if min_rel_len[ri] >= sat {
            continue;
        }
        let budget = sat - 1 - min_rel_len[ri];
        for lp in 0..=budget {
            for rp in 0..=(budget - lp) {
                for left in &by_len[lp] {
                    for right in &by_len[rp] {
                        let mut row = vec![field.zero(); total];
                        let mut nonzero = false;
                        for (c, word) in rel {
                            if q.arrows[word[0]].source != left.target(&q.arrows) {
                                continue;
                            }
                            if right.source != q.arrows[*word.last().unwrap()].target {
                                continue;
                            }
                            let mut arrows = left.arrows.clone();
                            arrows.extend(word.iter().cloned());
                            arrows.extend(right.arrows.iter().cloned());
                            if arrows.len() >= sat {
                                continue; // truncated: long paths are already zero
                            }
                            let p = Path { len: arrows.len(), arrows, source: left.source };
                            if let Some(ix) = coord_of(&p) {
                                row[colix(ix)] = row[colix(ix)].add(c);
                                nonzero = true;
                            }
                        }
                        if nonzero {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    let window = Subspace::from_vectors(field, total, rows);
    let (_, _, pivots) = window.basis.rref();
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; total];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    // quotient basis: non-pivot columns, mapped back to ascending order
    let mut basis_paths: Vec<Path> =
        (0..total).filter(|&c| !pivot_set[c]).map(|c| ordered[colix(c)].clone()).collect();
    basis_paths.sort();
    let dim = basis_paths.len();

    // reduce an element of the survivor span modulo the window; returns
    // coordinates in the quotient basis
    let reduce = |v: &[Scalar]| -> Elem {
        // v is indexed by ascending order; convert to column order
        let mut w: Vec<Scalar> = (0..total).map(|c| v[colix(c)].clone()).collect();
        for (row, &pc) in pivots.iter().enumerate() {
            if !w[pc].is_zero() {
                let f = w[pc].clone();
                for j in 0..total {
                    w[j] = w[j].sub(&f.mul(window.basis.at(row, j)));
                }
            }
        }
        basis_paths
            .iter()
            .map(|p| {
                let ix = coord_of(p).unwrap();
                w[colix(ix)].clone()
            })
            .collect()
    };

    // structure constants by concatenation + reduction
    let mut sc = vec![field.zero(); dim * dim * dim];
    for (i, p) in basis_paths.iter().enumerate() {
        for (j, r) in basis_paths.iter().enumerate() {
            let prod: Option<Path> = if p.len == 0 {
                if r.source == p.source { Some(r.clone()) } else { None }
            } else if r.len == 0 {
                if p.target(&q.arrows) == r.source { Some(p.clone()) } else { None }
            } else if p.target(&q.arrows) == r.source {
                let mut arrows = p.arrows.clone();
                arrows.extend(r.arrows.iter().cloned());
                Some(Path { len: arrows.len(), arrows, source: p.source })
            } else {
                None
            };
            if let Some(c) = prod {
                if c.len >= sat {
                    continue; // lies in the ideal
                }
                let mut v = vec![field.zero(); total];
                match coord_of(&c) {
                    Some(ix) => v[ix] = field.one(),
                    None => continue,
                }
                let red = reduce(&v);
                for k in 0..dim {
                    sc[(i * dim + j) * dim + k] = red[k].clone();
                }
            }
        }
    }

    // unit and labels
    let mut unit_raw = vec![field.zero(); total];
    for v in 0..q.vertices.len() {
        if let Some(ix) = coord_of(&Path::trivial(v)) {
            unit_raw[ix] = field.one();
        }
    }
    let unit = reduce(&unit_raw);

    let label_of = |p: &Path| -> String {
        if p.len == 0 {
            format!("e{}", q.vertices[p.source])
        } else {
            let names: Vec<&str> = if q.right_to_left {
                p.arrows.iter().rev().map(|&a| q.arrows[a].name.as_str()).collect()
            } else {
                p.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect()
            };
            let mut s = String::new();
            for n in names {
                let _ = write!(s, "{n}");
            }
            s
        }
    };
    let labels: Vec<String> = basis_paths.iter().map(label_of).collect();

    let mut vertex_idems = vec![usize::MAX; q.vertices.len()];
    let mut arrow_basis = vec![usize::MAX; q.arrows.len()];
    for (i, p) in basis_paths.iter().enumerate() {
        if p.len == 0 {
            vertex_idems[p.source] = i;
        } else if p.len == 1 {
            arrow_basis[p.arrows[0]] = i;
        }
    }
    if vertex_idems.iter().any(|&v| v == usize::MAX) {
        return Err(AlgError::BadRelation("a vertex idempotent died in the quotient".into()));
    }

    let bp: Vec<BasisPath> = basis_paths
        .iter()
        .map(|p| BasisPath { source: p.source, target: p.target(&q.arrows), arrows: p.arrows.clone() })
        .collect();

    let gens: Vec<Elem> = vertex_idems
        .iter()
        .chain(arrow_basis.iter().filter(|&&a| a != usize::MAX))
        .map(|&i| {
            let mut e = vec![field.zero(); dim];
            e[i] = field.one();
            e
        })
        .collect();

    let alg = Algebra {
        field,
        dim,
        sc,
        unit,
        labels: Some(labels),
        quiver: Some(QuiverInfo {
            vertices: q.vertices.clone(),
            arrow_names: q.arrows.iter().map(|a| a.name.clone()).collect(),
            vertex_idems,
            arrow_basis,
            basis_paths: bp,
        }),
        gens: Some(gens),
    };
    alg.verify_laws()?;
    Ok(alg)
}

/// The base field as a 1-dimensional algebra.
pub fn field_algebra(field: FieldSpec) -> Algebra {
    Algebra::from_sc(field, 1, vec![field.one()], vec![field.one()], Some(vec!["1".into()])).unwrap()
}

/// Full matrix algebra M_n(k) in the matrix-unit basis e_{rc}, index r*n+c.
pub fn matrix_algebra(field: FieldSpec, n: usize) -> Algebra {
    let dim = n * n;
    let mut sc = vec![field.zero(); dim * dim * dim];
    for r in 0..n {
        for c in 0..n {
            for s in 0..n {
                for t in 0..n {
                    // e_{rc} e_{st} = delta_{cs} e_{rt}
                    if c == s {
                        let i = r * n + c;
                        let j = s * n + t;
                        let k = r * n + t;
                        sc[(i * dim + j) * dim + k] = field.one();
                    }
                }
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    for r in 0..n {
        unit[r * n + r] = field.one();
    }
    let labels = (0..n).flat_map(|r| (0..n).map(move |c| format!("E{}{}", r + 1, c + 1))).collect();
    Algebra::from_sc(field, dim, sc, unit, Some(labels)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    pub fn quiver_b() -> QuiverPresentation {
        let mut q = QuiverPresentation::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow { name: "b1".into(), source: 0, target: 1 },
                Arrow { name: "b2".into(), source: 1, target: 0 },
            ],
        );
        q.relations = vec![
            vec![(FieldSpec::Rational.one(), vec![0, 1])],
            vec![(FieldSpec::Rational.one(), vec![1, 0])],
        ];
        q
    }

    pub fn quiver_a10() -> QuiverPresentation {
        let mut q = QuiverPresentation::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                Arrow { name: "a1".into(), source: 0, target: 2 },
                Arrow { name: "a2".into(), source: 1, target: 3 },
                Arrow { name: "a3".into(), source: 2, target: 1 },
                Arrow { name: "a4".into(), source: 3, target: 0 },
            ],
        );
        // a3 a2 = 0 = a4 a1
        q.relations = vec![
            vec![(FieldSpec::Rational.one(), vec![2, 1])],
            vec![(FieldSpec::Rational.one(), vec![3, 0])],
        ];
        q
    }

    #[test]
    fn field_as_algebra() {
        let a = field_algebra(FieldSpec::Rational);
        assert_eq!(a.dim, 1);
        assert_eq!(a.mul(&a.unit, &a.unit), a.unit);
    }

    #[test]
    fn matrix_units_m2() {
        let a = matrix_algebra(FieldSpec::Rational, 2);
        assert_eq!(a.dim, 4);
        // e12 * e21 = e11
        let e12 = a.basis_elem(1);
        let e21 = a.basis_elem(2);
        assert_eq!(a.mul(&e12, &e21), a.basis_elem(0));
    }

    // perturb one structure constant of M2 and confirm rejection.
    #[test]
    fn perturbed_table_rejected() {
        let a = matrix_algebra(FieldSpec::Rational, 2);
        let mut sc = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    sc.push(a.sc(i, j, k).clone());
                }
            }
        }
        assert!(sc[1].is_zero());
        sc[1] = FieldSpec::Rational.from_i64(1); // e11 * e11 gains a spurious e12 term
        let r = Algebra::from_sc(FieldSpec::Rational, 4, sc, a.unit.clone(), None);
        assert!(matches!(r, Err(AlgError::NotAssociative(..)) | Err(AlgError::UnitLawFails(_))));
    }

    #[test]
    fn quiver_b_basis() {
        let a = algebra_from_quiver(&quiver_b(), FieldSpec::Rational).unwrap();
        assert_eq!(a.dim, 4);
        assert_eq!(a.labels.as_ref().unwrap(), &vec!["e1", "e2", "b1", "b2"]);
        let q = a.quiver.as_ref().unwrap();
        // b1 * b2 = 0, e1 * b1 = b1
        let b1 = a.basis_elem(q.arrow_basis[0]);
        let b2 = a.basis_elem(q.arrow_basis[1]);
        assert!(vec_is_zero(&a.mul(&b1, &b2)));
        let e1 = a.basis_elem(q.vertex_idems[0]);
        assert_eq!(a.mul(&e1, &b1), b1);
    }

    // the 10-dimensional example algebra has the stated basis.
    #[test]
    fn quiver_a10_basis() {
        let a = algebra_from_quiver(&quiver_a10(), FieldSpec::Rational).unwrap();
        assert_eq!(a.dim, 10);
        assert_eq!(
            a.labels.as_ref().unwrap(),
            &vec!["e1", "e2", "e3", "e4", "a1", "a2", "a3", "a4", "a1a3", "a2a4"]
        );
    }

    #[test]
    fn dual_numbers_quiver() {
        // single vertex, one loop x, relation x^2
        let mut q = QuiverPresentation::new(
            vec!["1".into()],
            vec![Arrow { name: "x".into(), source: 0, target: 0 }],
        );
        q.relations = vec![vec![(FieldSpec::Rational.one(), vec![0, 0])]];
        let a = algebra_from_quiver(&q, FieldSpec::Rational).unwrap();
        assert_eq!(a.dim, 2);
    }

    #[test]
    fn inadmissible_rejected() {
        // single loop with no relations: infinite dimensional
        let mut q = QuiverPresentation::new(
            vec!["1".into()],
            vec![Arrow { name: "x".into(), source: 0, target: 0 }],
        );
        q.length_cap = 6;
        let r = algebra_from_quiver(&q, FieldSpec::Rational);
        assert!(matches!(r, Err(AlgError::NotAdmissibleWithinCap(6))));
    }

    #[test]
    fn bad_relation_rejected() {
        let mut q = quiver_b();
        // b1 alone is length 1: not admissible as a relation term
        q.relations.push(vec![(FieldSpec::Rational.one(), vec![0])]);
        assert!(matches!(
            algebra_from_quiver(&q, FieldSpec::Rational),
            Err(AlgError::BadRelation(_))
        ));
    }

    #[test]
    fn opposite_involution() {
        let a = algebra_from_quiver(&quiver_b(), FieldSpec::Rational).unwrap();
        let op = a.opposite();
        let opop = op.opposite();
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    assert_eq!(a.sc(i, j, k), opop.sc(i, j, k));
                }
            }
        }
        // matrix units: e12 . e21 in M2^op equals e21 * e12 = e22
        let m2 = matrix_algebra(FieldSpec::Rational, 2);
        let m2op = m2.opposite();
        assert_eq!(m2op.mul(&m2.basis_elem(1), &m2.basis_elem(2)), m2.basis_elem(3));
    }

    #[test]
    fn enveloping_dims() {
        let a = algebra_from_quiver(&quiver_b(), FieldSpec::Rational).unwrap();
        let env = enveloping(&a);
        assert_eq!(env.dim, 16);
        env.verify_laws().unwrap();
        let k = field_algebra(FieldSpec::Rational);
        assert_eq!(enveloping(&k).dim, 1);
    }

    #[test]
    fn vertex_idems_orthogonal_sum_to_one() {
        let a = algebra_from_quiver(&quiver_a10(), FieldSpec::Rational).unwrap();
        let q = a.quiver.as_ref().unwrap();
        let mut sum = vec![a.field.zero(); a.dim];
        for &v in &q.vertex_idems {
            let ev = a.basis_elem(v);
            assert_eq!(a.mul(&ev, &ev), ev);
            for &w in &q.vertex_idems {
                if w != v {
                    assert!(vec_is_zero(&a.mul(&ev, &a.basis_elem(w))));
                }
            }
            sum = vec_add(&sum, &ev);
        }
        assert_eq!(sum, a.unit);
    }
}
