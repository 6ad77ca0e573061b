use crate::cyclo::Cyclo;
use crate::hopf::HopfSuperData;

fn lincomb(terms: &[(String, Cyclo)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(body, c)| if c.is_one() { body.clone() } else { format!("{}*{}", c.to_dsl(), body) })
        .collect();
    parts.join(" + ")
}

/// Writes structure constants as a presentation with one generator per basis
/// vector. Compiling the output reproduces the input exactly.
pub fn render(h: &HopfSuperData) -> String {
    let d = h.dim;
    let b = |i: usize| format!("b{}", i);
    let vec_terms = |v: &[Cyclo]| -> Vec<(String, Cyclo)> {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (b(i), c.clone())).collect()
    };
    let mut out = String::new();
    out.push_str(&format!("hopf \"{}\" over Q(zeta{})\n", h.name.replace('"', "'"), h.conductor));
    for i in 0..d {
        out.push_str(&format!("gen {} {}\n", b(i), if h.parity[i] == 0 { "even" } else { "odd" }));
    }
    let names: Vec<String> = (0..d).map(b).collect();
    out.push_str(&format!("basis {}\n", names.join(", ")));
    out.push_str(&format!("unit = {}\n", lincomb(&vec_terms(&h.unit))));
    for i in 0..d {
        for j in 0..d {
            let terms: Vec<(String, Cyclo)> = h.mult_basis(i, j).iter().map(|(k, c)| (b(*k), c.clone())).collect();
            out.push_str(&format!("rel {}*{} = {}\n", b(i), b(j), lincomb(&terms)));
        }
    }
    for i in 0..d {
        let terms: Vec<(String, Cyclo)> =
            h.comult_basis(i).iter().map(|(j, k, c)| (format!("{} (x) {}", b(*j), b(*k)), c.clone())).collect();
        out.push_str(&format!("delta {} = {}\n", b(i), lincomb(&terms)));
        out.push_str(&format!("counit {} = {}\n", b(i), h.counit[i].to_dsl()));
        out.push_str(&format!("antipode {} = {}\n", b(i), lincomb(&vec_terms(&h.antipode.col(i)))));
    }
    for i in 0..d {
        out.push_str(&format!("label {} \"{}\"\n", b(i), h.labels[i].replace('"', "'")));
    }
    out
}
