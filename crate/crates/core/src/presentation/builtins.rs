//! The catalogue of named Hopf (super)algebras, mostly as DSL sources.

use super::compile::Compiled;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::hopf::{dual, HopfSuperData};
use crate::linalg::Matrix;

/// A builtin parameter: a sign choosing `±ζ₄`, or a small integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Zeta4(i8),
    Int(i64),
}

impl Param {
    fn dsl(&self) -> &'static str {
        match self {
            Param::Zeta4(s) if *s < 0 => "-zeta8^2",
            _ => "zeta8^2",
        }
    }

    fn spec(&self) -> String {
        match self {
            Param::Zeta4(s) if *s < 0 => "-zeta4".into(),
            Param::Zeta4(_) => "zeta4".into(),
            Param::Int(n) => n.to_string(),
        }
    }
}

const FAMILIES: &[&str] = &[
    "kZ2", "kZ2xZ2", "kZ4", "kS3", "dual_kS3", "Lambda", "H4_sweedler", "A_C2", "A_C2xC2", "H8", "H8_star",
    "A_plus", "H16", "H4_1", "H4_2", "H4_3", "H4_4", "A4", "A6", "K8",
];

/// Every catalogue instance, written as accepted by [`builtin_spec`].
pub fn builtin_names() -> Vec<String> {
    let mut out: Vec<String> = [
        "kZ2", "kZ2xZ2", "kZ4", "kS3", "dual_kS3", "Lambda1", "Lambda2", "H4_sweedler", "A_C2", "A_C2xC2", "H8",
        "H8_star", "A_plus", "H16(zeta4)", "H16(-zeta4)", "H4_1", "H4_2", "H4_3", "H4_4", "A4(zeta4)",
        "A4(-zeta4)", "A6",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for z in ["zeta4", "-zeta4"] {
        for e in 0..2 {
            for h in 0..2 {
                out.push(format!("K8({},{},{})", z, e, h));
            }
        }
    }
    out
}

fn split_spec(spec: &str) -> Result<(String, Vec<Param>)> {
    let spec = spec.trim();
    let (name, args) = match spec.find('(') {
        Some(i) => {
            let rest = spec[i + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::BadParams(format!("unbalanced parameters in {}", spec)))?;
            (&spec[..i], rest)
        }
        None => (spec, ""),
    };
    let name = name.trim();
    if let Some(n) = name.strip_prefix("Lambda").filter(|n| !n.is_empty()) {
        let n: i64 = n.parse().map_err(|_| Error::UnknownName(spec.into()))?;
        return Ok(("Lambda".into(), vec![Param::Int(n)]));
    }
    let mut params = Vec::new();
    for a in args.split(',').map(str::trim).filter(|a| !a.is_empty()) {
        let a = a.replace('ζ', "zeta").replace('₄', "4").replace('−', "-");
        params.push(match a.as_str() {
            "zeta4" | "+zeta4" | "i" => Param::Zeta4(1),
            "-zeta4" | "-i" => Param::Zeta4(-1),
            _ => Param::Int(a.parse().map_err(|_| Error::BadParams(format!("parameter `{}`", a)))?),
        });
    }
    Ok((name.to_string(), params))
}

fn canonical_name(name: &str) -> &str {
    match name {
        "H4" | "H4_sweedler" | "Sweedler" => "H4_sweedler",
        "H8*" | "H8_star" => "H8_star",
        "A+" | "A_plus" => "A_plus",
        "kS3*" | "dual_kS3" => "dual_kS3",
        other => other,
    }
}

fn check_params(name: &str, params: &[Param]) -> Result<()> {
    let bad = |msg: &str| Err(Error::BadParams(format!("{}: {}", name, msg)));
    let bit = |p: &Param| matches!(p, Param::Int(0) | Param::Int(1));
    match name {
        "Lambda" => match params {
            [Param::Int(n)] if (1..=6).contains(n) => Ok(()),
            _ => bad("expects θ in 1..=6"),
        },
        "A4" | "H16" => match params {
            [Param::Zeta4(_)] => Ok(()),
            _ => bad("expects ζ ∈ {zeta4, -zeta4}"),
        },
        "K8" => match params {
            [Param::Zeta4(_), e, h] if bit(e) && bit(h) => Ok(()),
            _ => bad("expects (±zeta4, ε, η) with ε, η ∈ {0, 1}"),
        },
        _ if params.is_empty() => Ok(()),
        _ => bad("takes no parameters"),
    }
}

fn instance_name(name: &str, params: &[Param]) -> String {
    match name {
        "Lambda" => format!("Lambda{}", params[0].spec()),
        _ if params.is_empty() => name.to_string(),
        _ => format!("{}({})", name, params.iter().map(Param::spec).collect::<Vec<_>>().join(",")),
    }
}

/// DSL source of a catalogue entry, or `None` for entries built by other
/// means (`dual_kS3`).
pub fn builtin_source(name: &str, params: &[Param]) -> Result<Option<String>> {
    let name = canonical_name(name);
    if !FAMILIES.contains(&name) {
        return Err(Error::UnknownName(name.to_string()));
    }
    check_params(name, params)?;
    let title = instance_name(name, params);
    let head = format!("hopf \"{}\" over Q(zeta8)\nscalar i = zeta8^2\n", title);
    let body = match name {
        "kZ2" => KZ2.to_string(),
        "kZ2xZ2" => KZ2XZ2.to_string(),
        "kZ4" => KZ4.to_string(),
        "kS3" => KS3.to_string(),
        "dual_kS3" => return Ok(None),
        "Lambda" => match params[0] {
            Param::Int(n) => lambda_source(n as usize),
            _ => unreachable!(),
        },
        "H4_sweedler" => H4_SWEEDLER.to_string(),
        "A_C2" => A_C2.to_string(),
        "A_C2xC2" => A_C2XC2.to_string(),
        "H8" => H8.to_string(),
        "H8_star" => H8_STAR.to_string(),
        "A_plus" => A_PLUS.to_string(),
        "H16" => format!("scalar zeta = {}\n{}{}", params[0].dsl(), H8, H16_EXTRA),
        "H4_1" => lambda_source(2),
        "H4_2" => H4_2.to_string(),
        "H4_3" => H4_3.to_string(),
        "H4_4" => H4_4.to_string(),
        "A4" => format!("scalar zeta = {}\n{}", params[0].dsl(), A4),
        "A6" => A6.to_string(),
        "K8" => {
            let (e, h) = match (&params[1], &params[2]) {
                (Param::Int(e), Param::Int(h)) => (*e, *h),
                _ => unreachable!(),
            };
            k8_source(params[0].dsl(), e, h)
        }
        _ => unreachable!(),
    };
    Ok(Some(head + &body))
}

/// Certified structure constants of a catalogue entry.
pub fn builtin(name: &str, params: &[Param]) -> Result<HopfSuperData> {
    let canon = canonical_name(name);
    match builtin_source(canon, params)? {
        Some(src) => Ok(Compiled::from_source(&src)?.hopf),
        None => {
            let ks3 = builtin("kS3", &[])?;
            Ok(dual(&ks3)?.with_name("dual_kS3"))
        }
    }
}

/// Looks up an entry written as `A4(zeta4)`, `K8(-zeta4,0,1)`, `Lambda2`, …
pub fn builtin_spec(spec: &str) -> Result<HopfSuperData> {
    let (name, params) = split_spec(spec)?;
    builtin(&name, &params)
}

/// Source of an entry written as in [`builtin_spec`].
pub fn builtin_spec_source(spec: &str) -> Result<Option<String>> {
    let (name, params) = split_spec(spec)?;
    builtin_source(&name, &params)
}

fn lambda_source(n: usize) -> String {
    let names: Vec<String> = if n == 1 { vec!["z".into()] } else { (1..=n).map(|k| format!("z{}", k)).collect() };
    let mut s = format!("gen {} odd\n", names.join(", "));
    for a in 0..n {
        s.push_str(&format!("rel {0}*{0} = 0\n", names[a]));
        for b in 0..a {
            s.push_str(&format!("rel {}*{} = -{}*{}\n", names[a], names[b], names[b], names[a]));
        }
    }
    let mut words = Vec::new();
    for mask in 0u32..(1 << n) {
        let w: Vec<&str> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| names[k].as_str()).collect();
        words.push((w.len(), mask, if w.is_empty() { "1".to_string() } else { w.join("*") }));
    }
    words.sort();
    s.push_str(&format!("basis {}\n", words.iter().map(|w| w.2.clone()).collect::<Vec<_>>().join(", ")));
    for (_, mask, w) in &words {
        if *mask != 0 {
            let label: String = w.split('*').collect();
            s.push_str(&format!("label {} \"{}\"\n", w, label));
        }
    }
    for z in &names {
        s.push_str(&format!("delta {0} = {0} (x) 1 + 1 (x) {0}\ncounit {0} = 0\nantipode {0} = -{0}\n", z));
    }
    s
}

fn k8_source(zeta: &str, e: i64, h: i64) -> String {
    let sign = if e == 0 { "" } else { "-" };
    let anti = if e == 0 { "-" } else { "" };
    let geta = if h == 0 { "1" } else { "g" };
    format!(
        "scalar zeta = {zeta}
gen g, v even
gen w, t odd
rel g*g = 1
rel g*v = v
rel v*g = v
rel g*w = -w
rel w*g = -w
rel v*w = 0
rel w*v = 0
rel v*v = 1/2*(1 + g)
rel w*w = 1/2*(1 - g)
rel t*t = 0
rel t*g = g*t
rel t*v = {sign}v*t
rel t*w = {anti}w*t
basis 1, g, v, w, t, g*t, v*t, w*t
label g*t \"gt\"
label v*t \"vt\"
label w*t \"wt\"
delta g = g (x) g
delta v = v (x) v - zeta*w (x) w
delta w = v (x) w + w (x) v
delta t = {geta} (x) t + t (x) 1
counit g = 1
counit v = 1
counit w = 0
counit t = 0
antipode g = g
antipode v = v
antipode w = zeta*w
antipode t = -{geta}*t
"
    )
}

const KZ2: &str = "gen σ even
rel σ*σ = 1
basis 1, σ
delta σ = σ (x) σ
counit σ = 1
antipode σ = σ
";

const KZ2XZ2: &str = "gen a, b even
rel a*a = 1
rel b*b = 1
rel b*a = a*b
basis 1, a, b, a*b
delta a = a (x) a
delta b = b (x) b
counit a = 1
counit b = 1
antipode a = a
antipode b = b
";

const KZ4: &str = "gen g even
rel g^4 = 1
basis 1, g, g^2, g^3
delta g = g (x) g
counit g = 1
antipode g = g^3
";

const KS3: &str = "gen s1, s2 even
rel s1*s1 = 1
rel s2*s2 = 1
rel s2*s1*s2 = s1*s2*s1
basis 1, s1, s2, s1*s2, s2*s1, s1*s2*s1
label s1*s2 \"s1s2\"
label s2*s1 \"s2s1\"
label s1*s2*s1 \"s1s2s1\"
delta s1 = s1 (x) s1
delta s2 = s2 (x) s2
counit s1 = 1
counit s2 = 1
antipode s1 = s1
antipode s2 = s2
";

const H4_SWEEDLER: &str = "gen c, x even
rel c*c = 1
rel x*x = 0
rel x*c = -c*x
basis 1, c, x, c*x
delta c = c (x) c
delta x = c (x) x + x (x) 1
counit c = 1
counit x = 0
antipode c = c
antipode x = -c*x
";

const A_C2: &str = "gen c, x, y even
rel c*c = 1
rel x*c = -c*x
rel y*c = -c*y
rel y*x = -x*y
rel x*x = 0
rel y*y = 0
basis 1, c, x, y, c*x, c*y, x*y, c*x*y
delta c = c (x) c
delta x = c (x) x + x (x) 1
delta y = c (x) y + y (x) 1
counit c = 1
counit x = 0
counit y = 0
antipode c = c
antipode x = -c*x
antipode y = -c*y
";

const A_C2XC2: &str = "gen c, d, x even
rel c*c = 1
rel d*d = 1
rel d*c = c*d
rel x*c = -c*x
rel x*d = -d*x
rel x*x = 0
basis 1, c, d, c*d, x, c*x, d*x, c*d*x
delta c = c (x) c
delta d = d (x) d
delta x = c (x) x + x (x) 1
counit c = 1
counit d = 1
counit x = 0
antipode c = c
antipode d = d
antipode x = -c*x
";

const H8: &str = "gen X, Y, Z even
rel X*X = 1
rel Y*Y = 1
rel Y*X = X*Y
rel Z*X = Y*Z
rel Z*Y = X*Z
rel Z*Z = 1/2*(1 + X + Y - X*Y)
basis 1, X, Y, X*Y, Z, X*Z, Y*Z, X*Y*Z
delta X = X (x) X
delta Y = Y (x) Y
delta Z = 1/2*(Z (x) Z + Z (x) X*Z + Y*Z (x) Z - Y*Z (x) X*Z)
counit X = 1
counit Y = 1
counit Z = 1
antipode X = X
antipode Y = Y
antipode Z = Z
";

const H16_EXTRA: &str = "gen T even
rel T*T = 0
rel T*X = -X*T
rel T*Y = -Y*T
rel T*Z = zeta*X*Z*T
basis T, X*T, Y*T, X*Y*T, Z*T, X*Z*T, Y*Z*T, X*Y*Z*T
delta T = X (x) T + T (x) 1
counit T = 0
antipode T = -X*T
";

const H8_STAR: &str = "gen c, s, h even
rel c*c = 1 + s*s
rel c*s = 0
rel s*c = 0
rel s*s*s = -s
rel h*h = 1
rel h*c = c*h
rel h*s = -s*h
basis 1, c, s, s^2, h, c*h, s*h, s^2*h
delta c = c (x) c - s (x) s
delta s = c (x) s + s (x) c
delta h = h (x) h + h*s^2 (x) h*(1 - c - s)
counit c = 1
counit s = 0
counit h = 1
antipode c = c
antipode s = s
antipode h = h*(s^2 + s + 1)
";

const H4_2: &str = "gen g even
gen z odd
rel g*g = 1
rel z*z = 0
rel z*g = g*z
basis 1, g, z, g*z
delta g = g (x) g
delta z = 1 (x) z + z (x) 1
counit g = 1
counit z = 0
antipode g = g
antipode z = -z
";

const H4_3: &str = "gen g even
gen z odd
rel g*g = 1
rel z*z = 0
rel z*g = g*z
basis 1, g, z, g*z
delta g = g (x) g
delta z = g (x) z + z (x) 1
counit g = 1
counit z = 0
antipode g = g
antipode z = -g*z
";

const H4_4: &str = "gen g even
gen z odd
rel g*g = 1
rel z*z = 0
rel z*g = -g*z
basis 1, g, z, g*z
delta g = g (x) g
delta z = 1 (x) z + z (x) 1
counit g = 1
counit z = 0
antipode g = g
antipode z = -z
";

const A4: &str = "gen x even
gen z odd
rel z*z = 1 - x*x
rel x*z = 0
rel z*x = 0
rel x*x*x = x
basis 1, x, x^2, z
delta x = x (x) x + zeta*z (x) z
delta z = x (x) z + z (x) x
counit x = 1
counit z = 0
antipode x = x
antipode z = -zeta*z
";

const A6: &str = "gen x, y even
gen z, w odd
rel x*x = 1/2*(1 + x)
rel y*y = 1/2*(1 + x)
rel y*x = x*y
rel x*z = -1/2*z
rel z*x = -1/2*z
rel x*w = -1/2*w
rel w*x = -1/2*w
rel y*z = -1/2*w
rel z*y = 1/2*w
rel y*w = -1/2*z
rel w*y = 1/2*z
rel z*z = 1/2*(x - 1)
rel w*w = 1/2*(1 - x)
rel z*w = x*y - y
rel w*z = y - x*y
basis 1, x, y, x*y, z, w
delta x = x (x) x - w (x) z
delta y = y (x) y - z (x) w
delta z = z (x) x + y (x) z
delta w = w (x) y + x (x) w
counit x = 1
counit y = 1
counit z = 0
counit w = 0
antipode x = x
antipode y = y
antipode z = -w
antipode w = z
";

const A_PLUS: &str = "gen pe, p1, p2, p12, p21, p121, xi even
rel pe*pe = pe
rel pe*p1 = 0
rel pe*p2 = 0
rel pe*p12 = 0
rel pe*p21 = 0
rel pe*p121 = 0
rel p1*pe = 0
rel p1*p1 = p1
rel p1*p2 = 0
rel p1*p12 = 0
rel p1*p21 = 0
rel p1*p121 = 0
rel p2*pe = 0
rel p2*p1 = 0
rel p2*p2 = p2
rel p2*p12 = 0
rel p2*p21 = 0
rel p2*p121 = 0
rel p12*pe = 0
rel p12*p1 = 0
rel p12*p2 = 0
rel p12*p12 = p12
rel p12*p21 = 0
rel p12*p121 = 0
rel p21*pe = 0
rel p21*p1 = 0
rel p21*p2 = 0
rel p21*p12 = 0
rel p21*p21 = p21
rel p21*p121 = 0
rel p121*pe = 0
rel p121*p1 = 0
rel p121*p2 = 0
rel p121*p12 = 0
rel p121*p21 = 0
rel p121*p121 = p121
rel xi*xi = 1
rel xi*pe = pe*xi
rel xi*p1 = p1*xi
rel xi*p2 = p121*xi
rel xi*p12 = p21*xi
rel xi*p21 = p12*xi
rel xi*p121 = p2*xi
basis pe, p1, p2, p12, p21, p121, pe*xi, p1*xi, p2*xi, p12*xi, p21*xi, p121*xi
unit = pe + p1 + p2 + p12 + p21 + p121
label pe \"e*\"
label p1 \"s1*\"
label p2 \"s2*\"
label p12 \"(s1s2)*\"
label p21 \"(s2s1)*\"
label p121 \"(s1s2s1)*\"
label pe*xi \"e*ξ\"
label p1*xi \"s1*ξ\"
label p2*xi \"s2*ξ\"
label p12*xi \"(s1s2)*ξ\"
label p21*xi \"(s2s1)*ξ\"
label p121*xi \"(s1s2s1)*ξ\"
delta pe = pe (x) pe + p1 (x) p1 + p2 (x) p2 + p12 (x) p21 + p21 (x) p12 + p121 (x) p121
delta p1 = pe (x) p1 + p1 (x) pe + p2 (x) p21 + p12 (x) p2 + p21 (x) p121 + p121 (x) p12
delta p2 = pe (x) p2 + p1 (x) p12 + p2 (x) pe + p12 (x) p121 + p21 (x) p1 + p121 (x) p21
delta p12 = pe (x) p12 + p1 (x) p2 + p2 (x) p121 + p12 (x) pe + p21 (x) p21 + p121 (x) p1
delta p21 = pe (x) p21 + p1 (x) p121 + p2 (x) p1 + p12 (x) p12 + p21 (x) pe + p121 (x) p2
delta p121 = pe (x) p121 + p1 (x) p21 + p2 (x) p12 + p12 (x) p1 + p21 (x) p2 + p121 (x) pe
delta xi = xi (x) xi
counit pe = 1
counit p1 = 0
counit p2 = 0
counit p12 = 0
counit p21 = 0
counit p121 = 0
counit xi = 1
antipode pe = pe
antipode p1 = p1
antipode p2 = p2
antipode p12 = p21
antipode p21 = p12
antipode p121 = p121
antipode xi = xi
";

/// The elements of S₃ in catalogue order `e, s1, s2, s1s2, s2s1, s1s2s1`, as
/// permutations of `{0, 1, 2}`.
pub fn s3_elements() -> Vec<[usize; 3]> {
    let comp = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
    let (e, s1, s2) = ([0, 1, 2], [1, 0, 2], [0, 2, 1]);
    vec![e, s1, s2, comp(s1, s2), comp(s2, s1), comp(comp(s1, s2), s1)]
}

/// `A_plus` assembled directly from the smash-product formulas on the basis
/// `σ* ξⁱ` (index `6i + σ`), without the rewriting compiler.
pub fn a_plus_table() -> Result<HopfSuperData> {
    let els = s3_elements();
    let comp = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
    let inv = |a: [usize; 3]| {
        let mut r = [0; 3];
        for k in 0..3 {
            r[a[k]] = k;
        }
        r
    };
    let idx = |p: [usize; 3]| els.iter().position(|q| *q == p).unwrap();
    let c = els[1];
    let conj = |s: usize, i: usize| if i == 0 { s } else { idx(comp(comp(c, els[s]), c)) };
    let d = 12;
    let one = Cyclo::one();
    let unit_v = |k: usize| crate::linalg::unit_vec(d, k);
    let mut mult = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let (s, i) = (a % 6, a / 6);
            let (t, j) = (b % 6, b / 6);
            // σ* ξⁱ τ* ξʲ = σ* (c^i τ c^i)* ξ^{i+j}
            mult.push(if conj(t, i) == s { unit_v(6 * ((i + j) % 2) + s) } else { vec![Cyclo::zero(); d] });
        }
    }
    let mut comult = Vec::with_capacity(d);
    for a in 0..d {
        let (s, i) = (a % 6, a / 6);
        let mut t = crate::hopf::Tensor::zeros(d, d);
        for x in 0..6 {
            for y in 0..6 {
                if idx(comp(els[x], els[y])) == s {
                    t.add_at(6 * i + x, 6 * i + y, &one);
                }
            }
        }
        comult.push(t);
    }
    let mut antipode = Matrix::zeros(d, d);
    for a in 0..d {
        let (s, i) = (a % 6, a / 6);
        // S(σ* ξⁱ) = ξⁱ (σ⁻¹)* = (c^i σ⁻¹ c^i)* ξⁱ
        antipode.set(6 * i + conj(idx(inv(els[s])), i), a, one.clone());
    }
    let names = ["e*", "s1*", "s2*", "(s1s2)*", "(s2s1)*", "(s1s2s1)*"];
    let labels = (0..d).map(|a| if a < 6 { names[a].to_string() } else { format!("{}ξ", names[a - 6]) }).collect();
    let mut unit = vec![Cyclo::zero(); d];
    for u in unit.iter_mut().take(6) {
        *u = one.clone();
    }
    let mut counit = vec![Cyclo::zero(); d];
    counit[0] = one.clone();
    counit[6] = one.clone();
    HopfSuperData::from_parts("A_plus", 8, vec![0; d], labels, unit, counit, mult, comult, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{compile, parse, render};

    #[test]
    fn whole_catalogue_certifies_and_round_trips() {
        for spec in builtin_names() {
            let h = builtin_spec(&spec).unwrap_or_else(|e| panic!("{}: {}", spec, e));
            let back = compile(&parse(&render(&h)).unwrap()).unwrap_or_else(|e| panic!("{}: {}", spec, e)).hopf;
            assert!(h.same_structure(&back), "{}", spec);
        }
    }

    #[test]
    fn a_plus_sources_agree() {
        let a = builtin("A_plus", &[]).unwrap();
        let b = a_plus_table().unwrap();
        assert!(a.same_structure(&b));
        assert!(crate::hopf::verify_axioms(&b).passed());
    }

    #[test]
    fn dimensions_and_errors() {
        assert_eq!(builtin_spec("H8").unwrap().dim, 8);
        assert_eq!(builtin_spec("H16(zeta4)").unwrap().dim, 16);
        assert_eq!(builtin_spec("Lambda3").unwrap().dim, 8);
        assert!(matches!(builtin("Nope", &[]), Err(Error::UnknownName(_))));
        assert!(matches!(builtin("A4", &[]), Err(Error::BadParams(_))));
        assert!(matches!(builtin("K8", &[Param::Zeta4(1), Param::Int(2), Param::Int(0)]), Err(Error::BadParams(_))));
    }
}
