//! `superforms`: the inverse-bosonization pipeline on one purely even input.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hopfsuper::analysis::{
    fingerprint, is_supercocommutative, is_supercommutative, search_isomorphism, Fingerprint,
};
use hopfsuper::presentation::builtin_names;
use hopfsuper::superdata::{
    admissible_data, coinvariant_superalgebra, orbit_classes, verify_bosonization_roundtrip, SuperDatum,
};
use hopfsuper::{HopfSuperData, Matrix};
use serde::{Deserialize, Serialize};

use crate::load::{catalogue, Loaded};
use crate::output::{Format, Verdict};

#[derive(Deserialize)]
struct OrbitFile {
    automorphisms: Vec<Automorphism>,
}

#[derive(Deserialize)]
struct Automorphism {
    name: String,
    /// DSL expressions, one per generator in declaration order.
    images: Vec<String>,
}

#[derive(Serialize)]
pub struct DatumRow {
    pub index: usize,
    pub datum: String,
    pub super_datum: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejected_by: Option<String>,
}

#[derive(Serialize)]
pub struct FormRow {
    pub datum: usize,
    pub dim: String,
    pub identified: String,
    pub roundtrip: Verdict,
    pub fingerprint: Fingerprint,
}

#[derive(Serialize)]
pub struct SuperformsReport {
    pub object: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub short_circuit: Option<String>,
    pub admissible: Vec<DatumRow>,
    pub forms: Vec<FormRow>,
    /// Orbits of the super-data, as indices into `admissible`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<Vec<usize>>>,
}

fn rejection(d: &SuperDatum) -> Option<String> {
    if d.is_super() {
        None
    } else if !d.certificates.g_noncentral {
        Some("g is central".into())
    } else {
        Some("conjugation identity fails".into())
    }
}

/// The catalogue's superalgebras with their fingerprints.
pub struct SuperCatalogue {
    entries: Vec<(String, Loaded, Fingerprint)>,
}

impl SuperCatalogue {
    pub fn new(conductor: Option<u32>) -> Result<Self> {
        let mut entries = Vec::new();
        for n in builtin_names() {
            let c = catalogue(&n, conductor)?;
            if !c.hopf.is_purely_even() {
                let fp = fingerprint(&c.hopf)?;
                entries.push((n, c, fp));
            }
        }
        Ok(SuperCatalogue { entries })
    }

    /// Names of the entries whose fingerprint equals `fp`.
    pub fn matches(&self, fp: &Fingerprint) -> Vec<&str> {
        self.entries.iter().filter(|e| e.2 == *fp).map(|e| e.0.as_str()).collect()
    }

    /// Fingerprint match, then a witness search from each matching entry.
    pub fn identify(&self, b: &HopfSuperData, fp: &Fingerprint, fuel: u64) -> Result<String> {
        let hits: Vec<&(String, Loaded, Fingerprint)> = self.entries.iter().filter(|e| e.2 == *fp).collect();
        if hits.is_empty() {
            return Ok("no catalogue match".into());
        }
        for (n, c, _) in &hits {
            if let Some(src) = &c.compiled {
                if search_isomorphism(src, b, fuel)?.witness.is_some() {
                    return Ok(format!("≅ {n} (witness)"));
                }
            }
        }
        let names: Vec<&str> = hits.iter().map(|e| e.0.as_str()).collect();
        Ok(format!("fingerprint of {}", names.join(" / ")))
    }
}

pub fn run(loaded: &Loaded, orbits: Option<&Path>, fuel: u64) -> Result<SuperformsReport> {
    let a = &loaded.hopf;
    if !a.is_purely_even() {
        bail!("{} has odd part; superforms needs an ordinary Hopf algebra", a.name);
    }
    let short_circuit = if is_supercommutative(a) {
        Some("commutative: every group-like is central".to_string())
    } else if is_supercocommutative(a) {
        Some("cocommutative: the conjugation identity forces g central".to_string())
    } else {
        None
    };
    let ad = admissible_data(a)?;
    let admissible: Vec<DatumRow> = ad
        .iter()
        .enumerate()
        .map(|(i, d)| DatumRow { index: i, datum: d.describe(a), super_datum: d.is_super(), rejected_by: rejection(d) })
        .collect();
    let cat = SuperCatalogue::new(Some(a.conductor))?;
    let mut forms = Vec::new();
    for (i, d) in ad.iter().enumerate().filter(|(_, d)| d.is_super()) {
        let b = coinvariant_superalgebra(a, d)?;
        let fp = fingerprint(&b)?;
        let rt = verify_bosonization_roundtrip(a, d)?;
        forms.push(FormRow {
            datum: i,
            dim: format!("{}|{}", b.dim - b.odd_dim(), b.odd_dim()),
            identified: cat.identify(&b, &fp, fuel)?,
            roundtrip: Verdict::from_report(&rt, "A ≅ coinvariant # kZ2"),
            fingerprint: fp,
        });
    }
    let orbits = match orbits {
        None => None,
        Some(p) => {
            let Some(src) = &loaded.compiled else {
                bail!("--orbits needs a presentation (DSL file or catalogue name)");
            };
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let file: OrbitFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))?;
            let mut autos = vec![Matrix::identity(a.dim)];
            for m in &file.automorphisms {
                let imgs = m
                    .images
                    .iter()
                    .map(|e| src.element(e))
                    .collect::<hopfsuper::Result<Vec<_>>>()
                    .with_context(|| format!("automorphism {}", m.name))?;
                autos.push(src.extend_generator_images(a, &imgs).with_context(|| format!("automorphism {}", m.name))?);
            }
            let sd_idx: Vec<usize> = forms.iter().map(|f| f.datum).collect();
            let sd: Vec<SuperDatum> = sd_idx.iter().map(|&i| ad[i].clone()).collect();
            let classes = orbit_classes(a, &sd, &autos)?;
            Some(classes.into_iter().map(|cl| cl.into_iter().map(|j| sd_idx[j]).collect()).collect())
        }
    };
    Ok(SuperformsReport { object: a.name.clone(), dim: a.dim, short_circuit, admissible, forms, orbits })
}

impl SuperformsReport {
    pub fn ok(&self) -> bool {
        self.forms.iter().all(|f| matches!(f.roundtrip, Verdict::Verified { .. }))
            && (self.short_circuit.is_none() || self.forms.is_empty())
    }

    pub fn render(&self, f: Format) -> Result<String> {
        match f {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["datum", "admissible", "super", "rejected_by", "dim", "identified", "roundtrip"])?;
                for d in &self.admissible {
                    let form = self.forms.iter().find(|f| f.datum == d.index);
                    w.write_record([
                        d.datum.as_str(),
                        "true",
                        if d.super_datum { "true" } else { "false" },
                        d.rejected_by.as_deref().unwrap_or(""),
                        form.map(|f| f.dim.as_str()).unwrap_or(""),
                        form.map(|f| f.identified.as_str()).unwrap_or(""),
                        form.map(|f| if matches!(f.roundtrip, Verdict::Verified { .. }) { "ok" } else { "FAIL" })
                            .unwrap_or(""),
                    ])?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
            Format::Text => {
                let mut s = String::new();
                let _ = writeln!(s, "{} (dim {})", self.object, self.dim);
                if let Some(r) = &self.short_circuit {
                    let _ = writeln!(s, "  {r}");
                }
                let _ = writeln!(s, "admissible data: {}", self.admissible.len());
                for d in &self.admissible {
                    let tag = match &d.rejected_by {
                        None => "super".to_string(),
                        Some(r) => format!("rejected: {r}"),
                    };
                    let _ = writeln!(s, "  [{}] {} ({tag})", d.index, d.datum);
                }
                let _ = writeln!(s, "super-forms: {}", self.forms.len());
                for f in &self.forms {
                    let rt = match &f.roundtrip {
                        Verdict::Verified { .. } => "round trip ok".to_string(),
                        Verdict::Failed { detail } => format!("round trip FAILED: {detail}"),
                        Verdict::Unverified { reason } => format!("round trip open: {reason}"),
                    };
                    let _ = writeln!(s, "  [{}] dim {}, {}, {rt}", f.datum, f.dim, f.identified);
                }
                if let Some(o) = &self.orbits {
                    let _ = writeln!(s, "orbits: {}", o.len());
                    for cl in o {
                        let idx: Vec<String> = cl.iter().map(|i| i.to_string()).collect();
                        let _ = writeln!(s, "  {{{}}}", idx.join(", "));
                    }
                }
                Ok(s)
            }
        }
    }
}
