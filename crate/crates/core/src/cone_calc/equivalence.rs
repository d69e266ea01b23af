//! Equivalence of cone decompositions and of T^S morphisms.

use super::decomposition::ConeDecomposition;
use super::ts::{Summand, TSMorphism};
use super::ConeError;
use crate::f2::{induced_on_homology, BitMatrix, BitVec, ChainMap};
use crate::report::Report;

/// Largest affine system the witness solver will set up.
const MAX_UNKNOWNS: usize = 4096;

/// True iff `isos = (I_1, …, I_{k+1})` are quasi-isomorphisms `Y_i → Y'_i`
/// making every square commute up to homotopy, with identities on the
/// (equal) linearizations.
pub fn check_equivalence(eta: &ConeDecomposition, eta2: &ConeDecomposition, isos: &[ChainMap]) -> Result<bool, ConeError> {
    let k = eta.len();
    if eta2.len() != k || isos.len() != k + 1 {
        return Err(ConeError::LengthMismatch);
    }
    if eta.linearization() != eta2.linearization() {
        return Ok(false);
    }
    for (i, iso) in isos.iter().enumerate() {
        if &iso.source != eta.stage(i + 1) || &iso.target != eta2.stage(i + 1) {
            return Ok(false);
        }
        if !induced_on_homology(iso)?.is_invertible() {
            return Ok(false);
        }
    }
    let h = |m: &ChainMap| induced_on_homology(m);
    for (i, (t, t2)) in eta.triangles().iter().zip(eta2.triangles()).enumerate() {
        // u'_i ≃ I_i u_i, v'_i I_i ≃ I_{i+1} v_i, w'_i I_{i+1} ≃ w_i
        if h(&t2.u)? != h(&isos[i])?.mul(&h(&t.u)?) {
            return Ok(false);
        }
        if h(&t2.v)?.mul(&h(&isos[i])?) != h(&isos[i + 1])?.mul(&h(&t.v)?) {
            return Ok(false);
        }
        if h(&t2.w)?.mul(&h(&isos[i + 1])?) != h(&t.w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Witnesses for two strict decompositions with equal linearization, in
/// the unitriangular form `I_{i+1} = [[id, 0], [K_i, I_i]]`. When maps
/// `φ : x → A` and `φ' : x → A'` are given, also requires `φ' ≃ I_{k+1} φ`.
/// Returns `None` when no witness of that form exists.
pub fn solve_equivalence(
    eta: &ConeDecomposition,
    eta2: &ConeDecomposition,
    phis: Option<(&ChainMap, &ChainMap)>,
) -> Option<Vec<ChainMap>> {
    if !eta.is_strict() || !eta2.is_strict() || eta.len() != eta2.len() || eta.linearization() != eta2.linearization() {
        return None;
    }
    let k = eta.len();
    let xs = eta.linearization();
    let shapes: Vec<(usize, usize)> = (0..k).map(|i| (eta2.stage(i + 1).dim(), xs[i].dim())).collect();
    let mut unknowns: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let m_shape = phis.map(|(p, _)| (eta2.top().dim(), p.source.dim()));
    if let Some((r, c)) = m_shape {
        unknowns += r * c;
    }
    if unknowns > MAX_UNKNOWNS {
        return None;
    }
    let unpack = |params: &BitVec| -> (Vec<BitMatrix>, Option<BitMatrix>) {
        let mut off = 0;
        let mut take = |r: usize, c: usize| {
            let mut m = BitMatrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, params.get(off + i * c + j));
                }
            }
            off += r * c;
            m
        };
        let ks = shapes.iter().map(|&(r, c)| take(r, c)).collect();
        let mm = m_shape.map(|(r, c)| take(r, c));
        (ks, mm)
    };
    let isos_of = |ks: &[BitMatrix]| -> Vec<BitMatrix> {
        let mut out = vec![BitMatrix::zeros(0, 0)];
        for (i, kmat) in ks.iter().enumerate() {
            let n = xs[i].dim();
            let prev = out.last().unwrap().clone();
            out.push(BitMatrix::block(&BitMatrix::identity(n), &BitMatrix::zeros(n, prev.cols()), kmat, &prev));
        }
        out
    };
    let residual = |params: &BitVec| -> BitVec {
        let (ks, mm) = unpack(params);
        let isos = isos_of(&ks);
        let mut bits: Vec<bool> = Vec::new();
        let mut push = |m: &BitMatrix| {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    bits.push(m.get(r, c));
                }
            }
        };
        for (i, (t, t2)) in eta.triangles().iter().zip(eta2.triangles()).enumerate() {
            let d2 = t2.y().d();
            let d = t.x().d();
            // d'K + K d + u' + I u
            push(&d2.mul(&ks[i]).add(&ks[i].mul(d)).add(&t2.u.f).add(&isos[i].mul(&t.u.f)));
        }
        if let (Some((p, p2)), Some(m)) = (phis, mm) {
            let r = eta2.top().d().mul(&m).add(&m.mul(p.source.d())).add(&p2.f).add(&isos[k].mul(&p.f));
            push(&r);
        }
        BitVec::from_bools(&bits)
    };
    let base = residual(&BitVec::zeros(unknowns));
    let columns: Vec<BitVec> = (0..unknowns).map(|j| residual(&BitVec::unit(unknowns, j)).xor(&base)).collect();
    let lin = BitMatrix::from_columns(&columns, base.len());
    let sol = lin.solve(&base)?;
    let (ks, _) = unpack(&sol);
    let isos = isos_of(&ks);
    Some(
        isos.into_iter()
            .enumerate()
            .map(|(i, f)| ChainMap { source: eta.stage(i + 1).clone(), target: eta2.stage(i + 1).clone(), f })
            .collect(),
    )
}

fn summand_equivalent(s: &Summand, s2: &Summand, isos: &[ChainMap]) -> Result<bool, ConeError> {
    if s.phi.source != s2.phi.source || !check_equivalence(&s.decomposition, &s2.decomposition, isos)? {
        return Ok(false);
    }
    let last = isos.last().expect("k + 1 maps");
    Ok(induced_on_homology(&s2.phi)? == induced_on_homology(last)?.mul(&induced_on_homology(&s.phi)?))
}

/// Equivalence of two T^S morphisms summand by summand. Supplied witnesses
/// are checked as given; missing ones are searched for with
/// [`solve_equivalence`] after strictifying.
pub fn check_ts_equivalence(a: &TSMorphism, b: &TSMorphism, witnesses: Option<&[Vec<ChainMap>]>) -> Report {
    let mut report = Report::new("ts-equivalence");
    if a.source() != b.source() || a.target() != b.target() || a.blocks() != b.blocks() {
        report.violation("shape", "source, target or blocks differ");
        return report;
    }
    for (j, (s, s2)) in a.summands().iter().zip(b.summands()).enumerate() {
        report.tick(1);
        let outcome = match witnesses.and_then(|w| w.get(j)) {
            Some(isos) => summand_equivalent(s, s2, isos),
            None => search_summand(s, s2),
        };
        match outcome {
            Ok(true) => {}
            Ok(false) => report.violation(format!("summand {}", j + 1), "no equivalence"),
            Err(e) => report.violation(format!("summand {}", j + 1), e.to_string()),
        }
    }
    report
}

fn search_summand(s: &Summand, s2: &Summand) -> Result<bool, ConeError> {
    let (d, sd) = s.decomposition.strictify()?;
    let (d2, sd2) = s2.decomposition.strictify()?;
    let phi = sd.compose(&s.phi)?;
    let phi2 = sd2.compose(&s2.phi)?;
    match solve_equivalence(&d, &d2, Some((&phi, &phi2))) {
        Some(isos) => summand_equivalent(
            &Summand { phi, decomposition: d, shift: 0 },
            &Summand { phi: phi2, decomposition: d2, shift: 0 },
            &isos,
        ),
        None => Ok(false),
    }
}
