//! Typed multi-slot tensor spaces over V = C^N and its dual, sparse linear
//! maps with exact scalars, deterministic Gaussian elimination, minor-space
//! embeddings, quantum-trace caps/cups and U_q(sl_N) generator actions.
//!
//! Index convention used everywhere: an operator X with coefficients
//! X^{KL}_{IJ} sends the basis vector e_I (x) e_J to sum_{K,L} X^{KL}_{IJ}
//! e_K (x) e_L — lower indices are inputs (columns), upper are outputs
//! (rows). Multi-indices are ordered lexicographically and subsets are
//! identified with their sorted tuples.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use smallvec::SmallVec;
use thiserror::Error;

use crate::oracle::binomial;
use crate::qarith::{qnum_poly, ArithError, LaurentPoly, RatFunc};
use crate::scalar::QScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("signature mismatch: {0}")]
    SigMismatch(String),
    #[error("slot parameter out of range: {0}")]
    SlotRange(String),
    #[error("cache: {0}")]
    Cache(String),
}

// ---------------------------------------------------------------------------
// Slots and signatures
// ---------------------------------------------------------------------------

/// A tensor slot: the vector representation, its dual, or the minor space
/// W_s spanned by q-antisymmetrized s-vectors (and its dual).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum SlotKind {
    V,
    Vd,
    W(u8),
    Wd(u8),
}

impl SlotKind {
    pub fn dim(&self, n: usize) -> usize {
        match self {
            SlotKind::V | SlotKind::Vd => n,
            SlotKind::W(s) | SlotKind::Wd(s) => binomial(n, *s as usize),
        }
    }

    pub fn is_dual(&self) -> bool {
        matches!(self, SlotKind::Vd | SlotKind::Wd(_))
    }

    pub fn token(&self) -> String {
        match self {
            SlotKind::V => "V".into(),
            SlotKind::Vd => "V*".into(),
            SlotKind::W(s) => format!("W{s}"),
            SlotKind::Wd(s) => format!("W{s}*"),
        }
    }

    pub fn parse(tok: &str) -> Result<SlotKind, TensorError> {
        match tok {
            "V" => Ok(SlotKind::V),
            "V*" => Ok(SlotKind::Vd),
            t if t.starts_with('W') => {
                let (body, dual) = if let Some(b) = t.strip_suffix('*') {
                    (b, true)
                } else {
                    (t, false)
                };
                let s: u8 = body[1..]
                    .parse()
                    .map_err(|_| TensorError::Cache(format!("bad slot token `{tok}`")))?;
                Ok(if dual { SlotKind::Wd(s) } else { SlotKind::W(s) })
            }
            _ => Err(TensorError::Cache(format!("bad slot token `{tok}`"))),
        }
    }
}

/// An ordered list of slot kinds together with the ambient N.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct SlotSig {
    pub n: usize,
    pub slots: Vec<SlotKind>,
}

impl SlotSig {
    pub fn new(n: usize, slots: Vec<SlotKind>) -> Self {
        for k in &slots {
            if let SlotKind::W(s) | SlotKind::Wd(s) = k {
                assert!(*s as usize >= 1 && (*s as usize) <= n, "minor slot out of range");
            }
        }
        SlotSig { n, slots }
    }

    pub fn scalar(n: usize) -> Self {
        SlotSig { n, slots: vec![] }
    }

    pub fn v_pow(n: usize, m: usize) -> Self {
        SlotSig { n, slots: vec![SlotKind::V; m] }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.slots.iter().map(|k| k.dim(self.n)).product()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.slots.iter().map(|k| k.dim(self.n)).collect()
    }

    pub fn concat(&self, other: &SlotSig) -> SlotSig {
        assert_eq!(self.n, other.n);
        let mut slots = self.slots.clone();
        slots.extend_from_slice(&other.slots);
        SlotSig { n: self.n, slots }
    }

    pub fn token(&self) -> String {
        if self.slots.is_empty() {
            return "-".into();
        }
        self.slots.iter().map(|k| k.token()).collect::<Vec<_>>().join(",")
    }

    pub fn parse(n: usize, s: &str) -> Result<SlotSig, TensorError> {
        if s == "-" {
            return Ok(SlotSig::scalar(n));
        }
        let slots = s
            .split(',')
            .map(SlotKind::parse)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SlotSig::new(n, slots))
    }

    /// All multi-indices in lexicographic order.
    pub fn basis(&self) -> Vec<MIdx> {
        let dims = self.dims();
        let total: usize = dims.iter().product();
        let mut out = Vec::with_capacity(total);
        let mut idx: MIdx = SmallVec::from_elem(0u16, dims.len());
        if dims.iter().any(|&d| d == 0) {
            return out;
        }
        loop {
            out.push(idx.clone());
            let mut pos = dims.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if (idx[pos] as usize) < dims[pos] {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

/// A multi-index: one entry per slot.
pub type MIdx = SmallVec<[u16; 6]>;

pub fn midx(parts: &[u16]) -> MIdx {
    SmallVec::from_slice(parts)
}

/// Sparse coordinate vector over the multi-index basis of some signature.
pub type SparseVec<F> = BTreeMap<MIdx, F>;

pub fn vec_add_scaled<F: QScalar>(dst: &mut SparseVec<F>, src: &SparseVec<F>, c: &F) {
    if c.is_zero() {
        return;
    }
    for (k, v) in src {
        let t = v.mul(c);
        match dst.get_mut(k) {
            Some(e) => {
                let s = e.add(&t);
                if s.is_zero() {
                    dst.remove(k);
                } else {
                    *e = s;
                }
            }
            None => {
                if !t.is_zero() {
                    dst.insert(k.clone(), t);
                }
            }
        }
    }
}

pub fn vec_scale<F: QScalar>(v: &SparseVec<F>, c: &F) -> SparseVec<F> {
    if c.is_zero() {
        return BTreeMap::new();
    }
    v.iter().map(|(k, x)| (k.clone(), x.mul(c))).collect()
}

// ---------------------------------------------------------------------------
// Sparse operators
// ---------------------------------------------------------------------------

/// A sparse linear map between slot signatures, stored column-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseOp<F: QScalar> {
    pub dom: SlotSig,
    pub cod: SlotSig,
    /// input multi-index -> (output multi-index -> coefficient)
    pub cols: BTreeMap<MIdx, SparseVec<F>>,
}

/// A vector with an attached signature (an operator with trivial domain).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VecT<F: QScalar> {
    pub sig: SlotSig,
    pub coords: SparseVec<F>,
}

impl<F: QScalar> SparseOp<F> {
    pub fn zero(dom: SlotSig, cod: SlotSig) -> Self {
        assert_eq!(dom.n, cod.n);
        SparseOp { dom, cod, cols: BTreeMap::new() }
    }

    pub fn identity(sig: &SlotSig) -> Self {
        let mut cols = BTreeMap::new();
        for idx in sig.basis() {
            let mut col = BTreeMap::new();
            col.insert(idx.clone(), F::one());
            cols.insert(idx, col);
        }
        SparseOp { dom: sig.clone(), cod: sig.clone(), cols }
    }

    pub fn from_entries(
        dom: SlotSig,
        cod: SlotSig,
        entries: impl IntoIterator<Item = (MIdx, MIdx, F)>,
    ) -> Self {
        let mut op = SparseOp::zero(dom, cod);
        for (out, inp, c) in entries {
            op.add_entry(out, inp, c);
        }
        op
    }

    pub fn add_entry(&mut self, out: MIdx, inp: MIdx, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(out.len(), self.cod.len());
        debug_assert_eq!(inp.len(), self.dom.len());
        let col = self.cols.entry(inp.clone()).or_default();
        match col.get_mut(&out) {
            Some(e) => {
                let s = e.add(&c);
                if s.is_zero() {
                    col.remove(&out);
                } else {
                    *e = s;
                }
            }
            None => {
                col.insert(out, c);
            }
        }
        if col.is_empty() {
            self.cols.remove(&inp);
        }
    }

    pub fn entry(&self, out: &MIdx, inp: &MIdx) -> F {
        self.cols
            .get(inp)
            .and_then(|c| c.get(out))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn nnz(&self) -> usize {
        self.cols.values().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.values().all(|c| c.is_empty())
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = BTreeMap::new();
        for (idx, c) in v {
            if let Some(col) = self.cols.get(idx) {
                vec_add_scaled(&mut out, col, c);
            }
        }
        out
    }

    /// self after other: (self . other)(v) = self(other(v)).
    pub fn compose(&self, other: &Self) -> Result<Self, TensorError> {
        if self.dom != other.cod {
            return Err(TensorError::SigMismatch(format!(
                "compose: {} vs {}",
                self.dom.token(),
                other.cod.token()
            )));
        }
        let mut cols = BTreeMap::new();
        for (inp, col) in &other.cols {
            let image = self.apply(col);
            if !image.is_empty() {
                cols.insert(inp.clone(), image);
            }
        }
        Ok(SparseOp { dom: other.dom.clone(), cod: self.cod.clone(), cols })
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let dom = self.dom.concat(&other.dom);
        let cod = self.cod.concat(&other.cod);
        let mut op = SparseOp::zero(dom, cod);
        for (i1, c1) in &self.cols {
            for (o1, v1) in c1 {
                for (i2, c2) in &other.cols {
                    for (o2, v2) in c2 {
                        let mut inp = i1.clone();
                        inp.extend_from_slice(i2);
                        let mut out = o1.clone();
                        out.extend_from_slice(o2);
                        op.add_entry(out, inp, v1.mul(v2));
                    }
                }
            }
        }
        op
    }

    /// Embed this operator at 0-based slot position k of `total`, acting as
    /// the identity elsewhere. The slots of `total` at k.. must match the
    /// operator's domain; the resulting codomain replaces them by the
    /// operator's codomain slots.
    pub fn embed_at(&self, k: usize, total: &SlotSig) -> Result<Self, TensorError> {
        let m = self.dom.len();
        if k + m > total.len() || total.slots[k..k + m] != self.dom.slots[..] || total.n != self.dom.n
        {
            return Err(TensorError::SigMismatch(format!(
                "embed_at position {k}: {} into {}",
                self.dom.token(),
                total.token()
            )));
        }
        let mut cod_slots = total.slots.clone();
        cod_slots.splice(k..k + m, self.cod.slots.iter().copied());
        let cod = SlotSig::new(total.n, cod_slots);
        let mut op = SparseOp::zero(total.clone(), cod);
        for inp in total.basis() {
            let mid: MIdx = SmallVec::from_slice(&inp[k..k + m]);
            if let Some(col) = self.cols.get(&mid) {
                for (out_mid, c) in col {
                    let mut out: MIdx = SmallVec::from_slice(&inp[..k]);
                    out.extend_from_slice(out_mid);
                    out.extend_from_slice(&inp[k + m..]);
                    op.add_entry(out, inp.clone(), c.clone());
                }
            }
        }
        Ok(op)
    }

    /// Apply this operator to slots k..k+m of a vector, without building the
    /// embedded operator.
    pub fn apply_at(&self, v: &SparseVec<F>, k: usize) -> SparseVec<F> {
        let m = self.dom.len();
        let mut out: SparseVec<F> = BTreeMap::new();
        for (idx, c) in v {
            let mid: MIdx = SmallVec::from_slice(&idx[k..k + m]);
            if let Some(col) = self.cols.get(&mid) {
                for (out_mid, t) in col {
                    let mut oidx: MIdx = SmallVec::from_slice(&idx[..k]);
                    oidx.extend_from_slice(out_mid);
                    oidx.extend_from_slice(&idx[k + m..]);
                    let val = c.mul(t);
                    match out.get_mut(&oidx) {
                        Some(e) => {
                            let s = e.add(&val);
                            if s.is_zero() {
                                out.remove(&oidx);
                            } else {
                                *e = s;
                            }
                        }
                        None => {
                            if !val.is_zero() {
                                out.insert(oidx, val);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, TensorError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(TensorError::SigMismatch("add".into()));
        }
        let mut op = self.clone();
        for (inp, col) in &other.cols {
            for (out, c) in col {
                op.add_entry(out.clone(), inp.clone(), c.clone());
            }
        }
        Ok(op)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.add(&other.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return SparseOp::zero(self.dom.clone(), self.cod.clone());
        }
        let cols = self
            .cols
            .iter()
            .map(|(i, col)| (i.clone(), vec_scale(col, c)))
            .collect();
        SparseOp { dom: self.dom.clone(), cod: self.cod.clone(), cols }
    }

    pub fn trace(&self) -> F {
        assert_eq!(self.dom, self.cod);
        let mut acc = F::zero();
        for (i, col) in &self.cols {
            if let Some(c) = col.get(i) {
                acc = acc.add(c);
            }
        }
        acc
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MIdx, &MIdx, &F)> {
        self.cols
            .iter()
            .flat_map(|(i, col)| col.iter().map(move |(o, c)| (o, i, c)))
    }
}

impl SparseOp<RatFunc> {
    /// Convert the symbolic operator into any scalar field.
    pub fn specialize<F: QScalar>(&self, ctx: &F::Ctx) -> SparseOp<F> {
        let mut op = SparseOp::zero(self.dom.clone(), self.cod.clone());
        for (inp, col) in &self.cols {
            for (out, c) in col {
                op.add_entry(out.clone(), inp.clone(), F::embed(ctx, c));
            }
        }
        op
    }
}

impl<F: QScalar> VecT<F> {
    pub fn zero(sig: SlotSig) -> Self {
        VecT { sig, coords: BTreeMap::new() }
    }

    pub fn basis_vector(sig: SlotSig, idx: MIdx) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(idx, F::one());
        VecT { sig, coords }
    }
}

// ---------------------------------------------------------------------------
// Deterministic elimination
// ---------------------------------------------------------------------------

/// Reduced echelon span of sparse vectors. Pivot rule: the lexicographically
/// first multi-index with a nonzero coefficient; rows kept fully reduced and
/// sorted by pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon<F: QScalar> {
    rows: Vec<(MIdx, SparseVec<F>)>,
}

impl<F: QScalar> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &MIdx> {
        self.rows.iter().map(|(p, _)| p)
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                if c.is_zero() {
                    continue;
                }
                let nc = c.neg();
                vec_add_scaled(&mut v, row, &nc);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Insert a vector; returns true when the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let v = self.reduce(v);
        let Some((pivot, pc)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = pc.inv().expect("nonzero pivot");
        let v: SparseVec<F> = v.iter().map(|(k, c)| (k.clone(), c.mul(&inv))).collect();
        for (_, row) in self.rows.iter_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                let nc = c.neg();
                vec_add_scaled(row, &v, &nc);
            }
        }
        let at = self.rows.partition_point(|(p, _)| p < &pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    pub fn insert_all(&mut self, vs: impl IntoIterator<Item = SparseVec<F>>) {
        for v in vs {
            self.insert(v);
        }
    }
}

/// Exact rank, kernel basis (reduced echelon form over the domain) and the
/// pivot input indices of the image, with the deterministic pivot rule.
pub fn gauss_rank_kernel<F: QScalar>(op: &SparseOp<F>) -> (usize, Vec<VecT<F>>, Vec<MIdx>) {
    let mut image_rows: Vec<(MIdx, SparseVec<F>)> = Vec::new();
    let mut combos: Vec<SparseVec<F>> = Vec::new();
    let mut image_pivots: Vec<MIdx> = Vec::new();
    let mut kernel: Echelon<F> = Echelon::new();

    for inp in op.dom.basis() {
        let mut v = op.cols.get(&inp).cloned().unwrap_or_default();
        let mut combo: SparseVec<F> = BTreeMap::new();
        combo.insert(inp.clone(), F::one());
        for (k, (pivot, row)) in image_rows.iter().enumerate() {
            if let Some(c) = v.get(pivot).cloned() {
                let nc = c.neg();
                vec_add_scaled(&mut v, row, &nc);
                vec_add_scaled(&mut combo, &combos[k], &nc);
            }
        }
        match v.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            Some((pivot, pc)) => {
                let inv = pc.inv().expect("nonzero pivot");
                let v: SparseVec<F> = v.iter().map(|(k, c)| (k.clone(), c.mul(&inv))).collect();
                let combo: SparseVec<F> =
                    combo.iter().map(|(k, c)| (k.clone(), c.mul(&inv))).collect();
                let at = image_rows.partition_point(|(p, _)| p < &pivot);
                image_rows.insert(at, (pivot, v));
                combos.insert(at, combo);
                image_pivots.push(inp);
            }
            None => {
                kernel.insert(combo);
            }
        }
    }

    let rank = image_rows.len();
    let kvecs = kernel
        .rows
        .iter()
        .map(|(_, r)| VecT { sig: op.dom.clone(), coords: r.clone() })
        .collect();
    (rank, kvecs, image_pivots)
}

// ---------------------------------------------------------------------------
// Subsets and minor spaces
// ---------------------------------------------------------------------------

/// Increasing s-subsets of {0..n-1} in lexicographic order.
pub fn subsets(n: usize, s: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::new();
    fn rec(n: usize, s: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v as u8);
            rec(n, s, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, s, 0, &mut cur, &mut out);
    out
}

pub fn subset_index(n: usize, set: &[u8]) -> usize {
    subsets(n, set.len())
        .iter()
        .position(|x| x == set)
        .expect("subset present")
}

pub fn inversions(t: &[u8]) -> usize {
    let mut inv = 0;
    for i in 0..t.len() {
        for j in (i + 1)..t.len() {
            if t[i] > t[j] {
                inv += 1;
            }
        }
    }
    inv
}

pub fn permutations(items: &[u8]) -> Vec<Vec<u8>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// (-q)^l
pub fn neg_q_pow(l: usize) -> RatFunc {
    let sign = if l % 2 == 0 { 1 } else { -1 };
    RatFunc::from_poly(LaurentPoly::term(l as i64, crate::qarith::rat_int(sign)))
}

/// W_s -> V^{(x)s}: column I is the antisymmetrized vector
/// x_I = sum_sigma (-q)^{l(sigma)} e_{sigma(i_1)} (x) ... (x) e_{sigma(i_s)}.
pub fn minor_embed(n: usize, s: usize) -> SparseOp<RatFunc> {
    let dom = SlotSig::new(n, vec![SlotKind::W(s as u8)]);
    let cod = SlotSig::new(n, vec![SlotKind::V; s]);
    let mut op = SparseOp::zero(dom, cod);
    for (ci, set) in subsets(n, s).iter().enumerate() {
        for t in permutations(set) {
            let c = neg_q_pow(inversions(&t));
            let out: MIdx = t.iter().map(|&x| x as u16).collect();
            op.add_entry(out, midx(&[ci as u16]), c);
        }
    }
    op
}

/// W_s* -> (V*)^{(x)s}: column I is
/// y_I = sum_sigma (-q)^{l(sigma)} e*_{sigma(i_s)} (x) ... (x) e*_{sigma(i_1)}.
pub fn minor_embed_dual(n: usize, s: usize) -> SparseOp<RatFunc> {
    let dom = SlotSig::new(n, vec![SlotKind::Wd(s as u8)]);
    let cod = SlotSig::new(n, vec![SlotKind::Vd; s]);
    let mut op = SparseOp::zero(dom, cod);
    for (ci, set) in subsets(n, s).iter().enumerate() {
        for t in permutations(set) {
            let c = neg_q_pow(inversions(&t));
            let out: MIdx = t.iter().rev().map(|&x| x as u16).collect();
            op.add_entry(out, midx(&[ci as u16]), c);
        }
    }
    op
}

/// Left inverse of `minor_embed`: the dual pairing divided by
/// q^{s(s-1)/2} [s]!.
pub fn minor_compress(n: usize, s: usize) -> SparseOp<RatFunc> {
    let dom = SlotSig::new(n, vec![SlotKind::V; s]);
    let cod = SlotSig::new(n, vec![SlotKind::W(s as u8)]);
    let norm = crate::qarith::pairing_norm(s as i64).inv().unwrap();
    let mut op = SparseOp::zero(dom, cod);
    for (ci, set) in subsets(n, s).iter().enumerate() {
        for t in permutations(set) {
            let c = neg_q_pow(inversions(&t)).mul(&norm);
            let inp: MIdx = t.iter().map(|&x| x as u16).collect();
            op.add_entry(midx(&[ci as u16]), inp, c);
        }
    }
    op
}

/// Left inverse of `minor_embed_dual`.
pub fn minor_compress_dual(n: usize, s: usize) -> SparseOp<RatFunc> {
    let dom = SlotSig::new(n, vec![SlotKind::Vd; s]);
    let cod = SlotSig::new(n, vec![SlotKind::Wd(s as u8)]);
    let norm = crate::qarith::pairing_norm(s as i64).inv().unwrap();
    let mut op = SparseOp::zero(dom, cod);
    for (ci, set) in subsets(n, s).iter().enumerate() {
        for t in permutations(set) {
            let c = neg_q_pow(inversions(&t)).mul(&norm);
            let inp: MIdx = t.iter().rev().map(|&x| x as u16).collect();
            op.add_entry(midx(&[ci as u16]), inp, c);
        }
    }
    op
}

// ---------------------------------------------------------------------------
// U_q(sl_N) generator actions
// ---------------------------------------------------------------------------

/// Chevalley generator label (1-based index i in 1..N-1).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    K(usize),
    Kinv(usize),
}

impl Gen {
    pub fn all(n: usize) -> Vec<Gen> {
        let mut v = Vec::new();
        for i in 1..n {
            v.push(Gen::E(i));
            v.push(Gen::F(i));
            v.push(Gen::K(i));
        }
        v
    }
}

/// Action on the vector representation: E_i e_{i+1} = e_i, F_i e_i = e_{i+1},
/// K_i e_j = q^{d_{ji} - d_{j,i+1}} e_j. These matrices pair with the
/// coproducts D(E) = E (x) 1 + K (x) E and D(F) = F (x) K^-1 + 1 (x) F;
/// the combination is pinned by invariance of the antisymmetrized subspaces.
fn gen_on_v(n: usize, g: Gen) -> SparseOp<RatFunc> {
    let sig = SlotSig::new(n, vec![SlotKind::V]);
    let mut op = SparseOp::zero(sig.clone(), sig);
    match g {
        Gen::E(i) => op.add_entry(midx(&[(i - 1) as u16]), midx(&[i as u16]), RatFunc::one()),
        Gen::F(i) => op.add_entry(midx(&[i as u16]), midx(&[(i - 1) as u16]), RatFunc::one()),
        Gen::K(i) => {
            for j in 0..n {
                let e = if j == i - 1 {
                    1
                } else if j == i {
                    -1
                } else {
                    0
                };
                op.add_entry(midx(&[j as u16]), midx(&[j as u16]), RatFunc::q_pow(e));
            }
        }
        Gen::Kinv(i) => {
            for j in 0..n {
                let e = if j == i - 1 {
                    -1
                } else if j == i {
                    1
                } else {
                    0
                };
                op.add_entry(midx(&[j as u16]), midx(&[j as u16]), RatFunc::q_pow(e));
            }
        }
    }
    op
}

/// Dual action (Xf)(v) = f(S(X)v) on V*.
fn gen_on_vd(n: usize, g: Gen) -> SparseOp<RatFunc> {
    let sig = SlotSig::new(n, vec![SlotKind::Vd]);
    let mut op = SparseOp::zero(sig.clone(), sig);
    match g {
        Gen::E(i) => op.add_entry(
            midx(&[i as u16]),
            midx(&[(i - 1) as u16]),
            RatFunc::q_pow(-1).neg(),
        ),
        Gen::F(i) => op.add_entry(
            midx(&[(i - 1) as u16]),
            midx(&[i as u16]),
            RatFunc::q_pow(1).neg(),
        ),
        Gen::K(i) => {
            for j in 0..n {
                let e = if j == i - 1 {
                    -1
                } else if j == i {
                    1
                } else {
                    0
                };
                op.add_entry(midx(&[j as u16]), midx(&[j as u16]), RatFunc::q_pow(e));
            }
        }
        Gen::Kinv(i) => {
            for j in 0..n {
                let e = if j == i - 1 {
                    1
                } else if j == i {
                    -1
                } else {
                    0
                };
                op.add_entry(midx(&[j as u16]), midx(&[j as u16]), RatFunc::q_pow(e));
            }
        }
    }
    op
}

/// Single-slot action of a generator, conjugated through the minor
/// embedding for W slots.
fn gen_on_slot(n: usize, kind: SlotKind, g: Gen) -> SparseOp<RatFunc> {
    match kind {
        SlotKind::V => gen_on_v(n, g),
        SlotKind::Vd => gen_on_vd(n, g),
        SlotKind::W(s) => {
            let act = uq_act_sig(&SlotSig::v_pow(n, s as usize), g);
            minor_compress(n, s as usize)
                .compose(&act)
                .unwrap()
                .compose(&minor_embed(n, s as usize))
                .unwrap()
        }
        SlotKind::Wd(s) => {
            let act = uq_act_sig(&SlotSig::new(n, vec![SlotKind::Vd; s as usize]), g);
            minor_compress_dual(n, s as usize)
                .compose(&act)
                .unwrap()
                .compose(&minor_embed_dual(n, s as usize))
                .unwrap()
        }
    }
}

/// Iterated-coproduct action of a generator on an arbitrary signature.
pub fn uq_act_sig(sig: &SlotSig, g: Gen) -> SparseOp<RatFunc> {
    let n = sig.n;
    let m = sig.len();
    if m == 0 {
        let mut op = SparseOp::zero(sig.clone(), sig.clone());
        let c = match g {
            Gen::E(_) | Gen::F(_) => RatFunc::zero(),
            Gen::K(_) | Gen::Kinv(_) => RatFunc::one(),
        };
        op.add_entry(midx(&[]), midx(&[]), c);
        return op;
    }
    match g {
        Gen::K(_) | Gen::Kinv(_) => {
            let mut acc = gen_on_slot(n, sig.slots[0], g);
            for k in 1..m {
                acc = acc.tensor(&gen_on_slot(n, sig.slots[k], g));
            }
            acc
        }
        Gen::E(i) => {
            let mut total = SparseOp::zero(sig.clone(), sig.clone());
            for k in 0..m {
                let mut acc: Option<SparseOp<RatFunc>> = None;
                for j in 0..m {
                    let factor = if j < k {
                        gen_on_slot(n, sig.slots[j], Gen::K(i))
                    } else if j == k {
                        gen_on_slot(n, sig.slots[j], Gen::E(i))
                    } else {
                        SparseOp::identity(&SlotSig::new(n, vec![sig.slots[j]]))
                    };
                    acc = Some(match acc {
                        None => factor,
                        Some(a) => a.tensor(&factor),
                    });
                }
                total = total.add(&acc.unwrap()).unwrap();
            }
            total
        }
        Gen::F(i) => {
            let mut total = SparseOp::zero(sig.clone(), sig.clone());
            for k in 0..m {
                let mut acc: Option<SparseOp<RatFunc>> = None;
                for j in 0..m {
                    let factor = if j > k {
                        gen_on_slot(n, sig.slots[j], Gen::Kinv(i))
                    } else if j == k {
                        gen_on_slot(n, sig.slots[j], Gen::F(i))
                    } else {
                        SparseOp::identity(&SlotSig::new(n, vec![sig.slots[j]]))
                    };
                    acc = Some(match acc {
                        None => factor,
                        Some(a) => a.tensor(&factor),
                    });
                }
                total = total.add(&acc.unwrap()).unwrap();
            }
            total
        }
    }
}

/// The iterated action on V^{(x)m}.
pub fn uq_act(n: usize, g: Gen, m: usize) -> SparseOp<RatFunc> {
    uq_act_sig(&SlotSig::v_pow(n, m), g)
}

// ---------------------------------------------------------------------------
// Caps and cups
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TracePreset {
    Plain,
    Qtr,
    Qtrinv,
}

impl TracePreset {
    pub fn parse(s: &str) -> Option<TracePreset> {
        match s {
            "plain" => Some(TracePreset::Plain),
            "qtr" => Some(TracePreset::Qtr),
            "qtrinv" => Some(TracePreset::Qtrinv),
            _ => None,
        }
    }

    /// Diagonal weight at 1-based index k.
    pub fn weight(&self, n: usize, k: usize) -> RatFunc {
        match self {
            TracePreset::Plain => RatFunc::one(),
            TracePreset::Qtr => RatFunc::q_pow(2 * k as i64 - 2 * n as i64 - 1),
            TracePreset::Qtrinv => RatFunc::q_pow(2 * n as i64 + 1 - 2 * k as i64),
        }
    }
}

/// Cap: plain pairs V* (x) V, the weighted presets pair V (x) V*.
pub fn weighted_cap(n: usize, preset: TracePreset) -> SparseOp<RatFunc> {
    let dom = match preset {
        TracePreset::Plain => SlotSig::new(n, vec![SlotKind::Vd, SlotKind::V]),
        _ => SlotSig::new(n, vec![SlotKind::V, SlotKind::Vd]),
    };
    let cod = SlotSig::scalar(n);
    let mut op = SparseOp::zero(dom, cod);
    for k in 0..n {
        op.add_entry(midx(&[]), midx(&[k as u16, k as u16]), preset.weight(n, k + 1));
    }
    op
}

/// Cup: plain produces V (x) V*, the weighted presets produce V* (x) V.
pub fn weighted_cup(n: usize, preset: TracePreset) -> SparseOp<RatFunc> {
    let cod = match preset {
        TracePreset::Plain => SlotSig::new(n, vec![SlotKind::V, SlotKind::Vd]),
        _ => SlotSig::new(n, vec![SlotKind::Vd, SlotKind::V]),
    };
    let dom = SlotSig::scalar(n);
    let mut op = SparseOp::zero(dom, cod);
    for k in 0..n {
        op.add_entry(midx(&[k as u16, k as u16]), midx(&[]), preset.weight(n, k + 1));
    }
    op
}

// ---------------------------------------------------------------------------
// Operator cache files
// ---------------------------------------------------------------------------

fn fnv64(data: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in data {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn midx_token(m: &MIdx) -> String {
    if m.is_empty() {
        return "-".into();
    }
    m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("-")
}

fn midx_parse(s: &str) -> Result<MIdx, TensorError> {
    if s == "-" {
        return Ok(midx(&[]));
    }
    s.split('-')
        .map(|p| {
            p.parse::<u16>()
                .map_err(|_| TensorError::Cache(format!("bad index `{s}`")))
        })
        .collect()
}

/// Serialize an operator in the cache format: a header line, one line per
/// entry, and a checksum line.
pub fn cache_encode(op: &SparseOp<RatFunc>, mode_label: &str) -> String {
    let mut body = String::new();
    let _ = writeln!(
        body,
        "N={} DOMAIN={} CODOMAIN={} NNZ={} MODE={}",
        op.dom.n,
        op.dom.token(),
        op.cod.token(),
        op.nnz(),
        mode_label
    );
    for (inp, col) in &op.cols {
        for (out, c) in col {
            let _ = writeln!(body, "{}|{}|{}", midx_token(out), midx_token(inp), c.serialize());
        }
    }
    let sum = fnv64(body.as_bytes());
    format!("{body}CHECKSUM={sum:016x}\n")
}

pub fn cache_decode(text: &str) -> Result<(SparseOp<RatFunc>, String), TensorError> {
    let body_end = text
        .rfind("CHECKSUM=")
        .ok_or_else(|| TensorError::Cache("missing checksum".into()))?;
    let (body, sumline) = text.split_at(body_end);
    let sum = sumline
        .trim()
        .strip_prefix("CHECKSUM=")
        .ok_or_else(|| TensorError::Cache("bad checksum line".into()))?;
    let expect = format!("{:016x}", fnv64(body.as_bytes()));
    if sum != expect {
        return Err(TensorError::Cache("checksum mismatch".into()));
    }
    let mut lines = body.lines();
    let header = lines.next().ok_or_else(|| TensorError::Cache("empty".into()))?;
    let mut n = 0usize;
    let mut dom = None;
    let mut cod = None;
    let mut mode = String::new();
    for field in header.split_whitespace() {
        let (k, v) = field
            .split_once('=')
            .ok_or_else(|| TensorError::Cache(format!("bad header field `{field}`")))?;
        match k {
            "N" => n = v.parse().map_err(|_| TensorError::Cache("bad N".into()))?,
            "DOMAIN" => dom = Some(v.to_string()),
            "CODOMAIN" => cod = Some(v.to_string()),
            "MODE" => mode = v.to_string(),
            "NNZ" => {}
            _ => return Err(TensorError::Cache(format!("unknown header field `{k}`"))),
        }
    }
    let dom = SlotSig::parse(n, &dom.ok_or_else(|| TensorError::Cache("no DOMAIN".into()))?)?;
    let cod = SlotSig::parse(n, &cod.ok_or_else(|| TensorError::Cache("no CODOMAIN".into()))?)?;
    let mut op = SparseOp::zero(dom, cod);
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.splitn(3, '|');
        let out = midx_parse(parts.next().unwrap_or(""))?;
        let inp = midx_parse(parts.next().ok_or_else(|| TensorError::Cache("short line".into()))?)?;
        let c = parts
            .next()
            .ok_or_else(|| TensorError::Cache("short line".into()))
            .and_then(|s| {
                RatFunc::parse(s).map_err(|e: ArithError| TensorError::Cache(e.to_string()))
            })?;
        op.add_entry(out, inp, c);
    }
    Ok((op, mode))
}

pub fn qnum_rf(n: i64) -> RatFunc {
    RatFunc::from_poly(qnum_poly(n))
}
