use super::HopfSuperData;
use crate::linalg::{Matrix, Vector};
use crate::report::Report;

/// Checks that `m` (columns are images of the basis of `src`) is a morphism
/// of Hopf superalgebras `src → dst`.
pub fn morphism_report(src: &HopfSuperData, dst: &HopfSuperData, m: &Matrix) -> Report {
    let mut r = Report::new(format!("morphism {} → {}", src.name, dst.name));
    if m.rows != dst.dim || m.cols != src.dim {
        r.fail("shape", format!("{}×{} for {} → {}", m.rows, m.cols, src.dim, dst.dim));
        return r;
    }
    let img: Vec<Vector> = m.cols_vec();
    let lab = |i: usize| src.labels[i].clone();

    let bad = (0..src.dim).find(|&i| dst.parity_of(&img[i]).is_some_and(|p| p != src.parity[i]));
    r.check("parity", bad.is_none(), bad.map(|i| format!("image of {}", lab(i))));

    r.check("unit", m.mul_vec(&src.unit) == dst.unit, None);

    let mut bad = None;
    'mul: for i in 0..src.dim {
        for j in 0..src.dim {
            let lhs = m.mul_vec(&src.mul(&src.basis(i), &src.basis(j)));
            if lhs != dst.mul(&img[i], &img[j]) {
                bad = Some(format!("{}·{}", lab(i), lab(j)));
                break 'mul;
            }
        }
    }
    r.check("multiplicative", bad.is_none(), bad);

    let bad = (0..src.dim).find(|&i| dst.eps(&img[i]) != src.counit[i]);
    r.check("counit", bad.is_none(), bad.map(lab));

    let bad = (0..src.dim).find(|&i| dst.comul(&img[i]) != src.comul(&src.basis(i)).map(m, m));
    r.check("comultiplication", bad.is_none(), bad.map(lab));

    let bad = (0..src.dim).find(|&i| dst.s(&img[i]) != m.mul_vec(&src.s(&src.basis(i))));
    r.check("antipode", bad.is_none(), bad.map(lab));
    r
}

/// [`morphism_report`] plus bijectivity.
pub fn isomorphism_report(src: &HopfSuperData, dst: &HopfSuperData, m: &Matrix) -> Report {
    let mut r = morphism_report(src, dst, m);
    r.subject = format!("isomorphism {} → {}", src.name, dst.name);
    let ok = m.rows == m.cols && m.rows > 0 && !m.det().is_zero();
    r.check("bijective", ok, None);
    r
}
