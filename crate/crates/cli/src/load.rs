//! Input resolution: JSON files, DSL files and catalogue names.

use std::path::Path;

use anyhow::{bail, Context, Result};
use hopfsuper::hopf::dual;
use hopfsuper::presentation::{builtin_spec, builtin_spec_source, Compiled};
use hopfsuper::HopfSuperData;

pub struct Loaded {
    pub hopf: HopfSuperData,
    /// Present when the input came with a presentation (DSL or catalogue).
    pub compiled: Option<Compiled>,
}

/// File stem of a path, or the catalogue name with punctuation removed.
pub fn stem(input: &str) -> String {
    let p = Path::new(input);
    if p.exists() {
        return p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into());
    }
    input.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' }).collect()
}

pub fn compile_source(src: &str, conductor: Option<u32>) -> hopfsuper::Result<Compiled> {
    match conductor {
        Some(n) => Compiled::from_source_over(src, n),
        None => Compiled::from_source(src),
    }
}

/// Catalogue entry compiled over `Q(ζ_n)`.
pub fn catalogue(name: &str, conductor: Option<u32>) -> Result<Loaded> {
    match builtin_spec_source(name)? {
        Some(src) => {
            let c = compile_source(&src, conductor).with_context(|| format!("compiling builtin {name}"))?;
            Ok(Loaded { hopf: c.hopf.clone(), compiled: Some(c) })
        }
        None => {
            let h = builtin_spec(name)?;
            if conductor.is_some_and(|n| n != h.conductor) {
                // entries without DSL source are duals of entries with one
                let base = name.trim_start_matches("dual_");
                let c = catalogue(base, conductor)?;
                let mut d = dual(&c.hopf)?;
                d.name = h.name.clone();
                return Ok(Loaded { hopf: d, compiled: None });
            }
            Ok(Loaded { hopf: h, compiled: None })
        }
    }
}

pub fn load(input: &str, conductor: Option<u32>) -> Result<Loaded> {
    let path = Path::new(input);
    if !path.exists() {
        return catalogue(input, conductor)
            .with_context(|| format!("`{input}` is neither a readable file nor a catalogue name"));
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
    if path.extension().is_some_and(|e| e == "json") {
        let h = HopfSuperData::from_json_str(&text).with_context(|| format!("loading {input}"))?;
        if let Some(n) = conductor {
            if n != h.conductor {
                bail!("{input} is stored over Q(zeta{}); re-convert it from its DSL source to change the field", h.conductor);
            }
        }
        return Ok(Loaded { hopf: h, compiled: None });
    }
    let c = compile_source(&text, conductor).with_context(|| input.to_string())?;
    Ok(Loaded { hopf: c.hopf.clone(), compiled: Some(c) })
}
