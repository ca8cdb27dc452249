//! Job specifications (group + cocycle), the cochain file format, and the
//! JSON atlas records emitted by the CLI. Records serialize with stable
//! field order and sorted collections so output bytes are deterministic.

use crate::bichar::{Bicharacter, Flavor};
use crate::classify::{
    dual_group, lagrangian_labels, module_categories_pointed_dual, label_correspondence,
    LagrangianLabel,
};
use crate::cohomology::{
    cyclic_cocycle_on, inflate, normalize_3cocycle, Cochain2, Cochain3,
};
use crate::groups::{abelian_structure, parse_group_spec, quotient_group, FiniteGroup, GroupSpec};
use crate::modular::ModularData;
use crate::scalars::RootOfUnity;
use crate::Error;
use serde::{Deserialize, Serialize};

/// Parsed cocycle specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaSpec {
    Trivial,
    /// `cyclic n k`: the standard class-k cocycle on a cyclic group of order n
    Cyclic(usize, i64),
    /// `inflate cyclic n k via mod-w1-w2-...`: pull back along the quotient
    /// by the subgroup generated by the named elements
    InflateCyclic {
        n: usize,
        k: i64,
        kernel_words: Vec<String>,
    },
    File(std::path::PathBuf),
}

impl std::fmt::Display for OmegaSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OmegaSpec::Trivial => write!(f, "trivial"),
            OmegaSpec::Cyclic(n, k) => write!(f, "cyclic {} {}", n, k),
            OmegaSpec::InflateCyclic { n, k, kernel_words } => {
                write!(f, "inflate cyclic {} {} via mod-{}", n, k, kernel_words.join("-"))
            }
            OmegaSpec::File(p) => write!(f, "file {}", p.display()),
        }
    }
}

pub fn parse_omega_spec(text: &str) -> Result<OmegaSpec, Error> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        [] | ["trivial"] => Ok(OmegaSpec::Trivial),
        ["cyclic", n, k] => Ok(OmegaSpec::Cyclic(
            n.parse().map_err(|_| Error::parse("bad cyclic order"))?,
            k.parse().map_err(|_| Error::parse("bad cyclic class"))?,
        )),
        ["inflate", "cyclic", n, k, "via", quot] => {
            let Some(rest) = quot.strip_prefix("mod-") else {
                return Err(Error::parse(format!("bad quotient spec {:?}", quot)));
            };
            Ok(OmegaSpec::InflateCyclic {
                n: n.parse().map_err(|_| Error::parse("bad cyclic order"))?,
                k: k.parse().map_err(|_| Error::parse("bad cyclic class"))?,
                kernel_words: rest.split('-').map(|s| s.to_string()).collect(),
            })
        }
        ["file", path] => Ok(OmegaSpec::File(std::path::PathBuf::from(path))),
        _ => Err(Error::parse(format!("unknown omega spec {:?}", text))),
    }
}

impl OmegaSpec {
    /// Realize the cocycle on the given group.
    pub fn build(&self, group: &FiniteGroup, group_id: &str) -> Result<Cochain3, Error> {
        match self {
            OmegaSpec::Trivial => Ok(Cochain3::trivial_on_group(group)),
            OmegaSpec::Cyclic(n, k) => {
                if group.order() != *n {
                    return Err(Error::parse(format!(
                        "cyclic cocycle order {} does not match group order {}",
                        n,
                        group.order()
                    )));
                }
                let generator = (0..group.order())
                    .find(|&g| group.elem_order(g) == *n)
                    .ok_or_else(|| Error::parse("group is not cyclic"))?;
                cyclic_cocycle_on(group, generator, *k)
            }
            OmegaSpec::InflateCyclic { n, k, kernel_words } => {
                let gens = kernel_words
                    .iter()
                    .map(|w| {
                        group
                            .elem_by_name(w)
                            .ok_or_else(|| Error::parse(format!("unknown element name {:?}", w)))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let kernel = group.closure(&gens);
                let q = quotient_group(group, &kernel)?;
                if q.group.order() != *n {
                    return Err(Error::parse(format!(
                        "quotient has order {}, expected {}",
                        q.group.order(),
                        n
                    )));
                }
                let generator = (0..q.group.order())
                    .find(|&g| q.group.elem_order(g) == *n)
                    .ok_or_else(|| Error::parse("quotient is not cyclic"))?;
                let omega0 = cyclic_cocycle_on(&q.group, generator, *k)?;
                inflate(&omega0, group, &q.group, &q.proj)
            }
            OmegaSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::parse(format!("cannot read cochain file: {}", e)))?;
                read_cochain3(&text, group, group_id)
            }
        }
    }
}

/// Cochain file format: header `omega <group-id> <M>`, then one line
/// `g1 g2 g3 q/M` per non-zero entry.
pub fn write_cochain3(omega: &Cochain3, group_id: &str) -> String {
    let m = omega.value_order();
    let mut out = format!("omega {} {}\n", group_id.replace(' ', "_"), m);
    for &a in omega.domain() {
        for &b in omega.domain() {
            for &c in omega.domain() {
                let v = omega.value(a, b, c);
                if !v.is_one() {
                    out.push_str(&format!(
                        "{} {} {} {}/{}\n",
                        a,
                        b,
                        c,
                        v.numer() * (m / v.order()),
                        m
                    ));
                }
            }
        }
    }
    out
}

pub fn read_cochain3(text: &str, group: &FiniteGroup, group_id: &str) -> Result<Cochain3, Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::parse("empty cochain file"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let [tag, file_id, _m] = parts.as_slice() else {
        return Err(Error::parse("bad cochain header"));
    };
    if *tag != "omega" {
        return Err(Error::parse("cochain header must start with 'omega'"));
    }
    if *file_id != group_id.replace(' ', "_") {
        return Err(Error::parse(format!(
            "cochain file is for group {:?}, expected {:?}",
            file_id, group_id
        )));
    }
    let n = group.order();
    let mut values = vec![RootOfUnity::ONE; n * n * n];
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [a, b, c, q] = toks.as_slice() else {
            return Err(Error::parse(format!("bad cochain line {:?}", line)));
        };
        let (a, b, c): (usize, usize, usize) = (
            a.parse().map_err(|_| Error::parse("bad index"))?,
            b.parse().map_err(|_| Error::parse("bad index"))?,
            c.parse().map_err(|_| Error::parse("bad index"))?,
        );
        if a >= n || b >= n || c >= n {
            return Err(Error::parse("cochain index out of range"));
        }
        let (num, den) = q
            .split_once('/')
            .ok_or_else(|| Error::parse("bad exponent, expected q/M"))?;
        let num: i64 = num.parse().map_err(|_| Error::parse("bad exponent"))?;
        let den: i64 = den.parse().map_err(|_| Error::parse("bad exponent"))?;
        values[(a * n + b) * n + c] = RootOfUnity::new(num, den);
    }
    let raw = {
        let vals = values.clone();
        Cochain3::from_fn((0..n).collect(), move |a, b, c| vals[(a * n + b) * n + c])
    };
    // shift by a coboundary to enforce the normalization, then validate
    let (omega, _shift) = normalize_3cocycle(group, &raw);
    if !omega.is_cocycle(group) {
        return Err(Error::invalid("cochain file does not define a 3-cocycle"));
    }
    Ok(omega)
}

// ---------- JSON records ----------

fn rou_string(r: &RootOfUnity) -> String {
    format!("{}/{}", r.numer(), r.order())
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct DualGroupRecord {
    pub order: usize,
    pub iso_name: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct LabelRecord {
    #[serde(rename = "H")]
    pub h: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<(usize, usize, String)>,
    pub mu: Vec<(usize, usize, String)>,
    pub dual_group: Option<DualGroupRecord>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ModularSummary {
    pub object_count: usize,
    pub t_spectrum: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct AtlasRecord {
    pub group: String,
    pub omega: String,
    pub label_count: usize,
    pub labels: Vec<LabelRecord>,
    pub modular: Option<ModularSummary>,
    pub cross_checks: Vec<(String, String)>,
}

fn bichar_entries(group: &FiniteGroup, b: &Bicharacter) -> Result<Vec<(usize, usize, String)>, Error> {
    let h = b.subgroup();
    match b.flavor() {
        Flavor::Plain => {
            // generator pairs i < j
            let data = abelian_structure(group, h)?;
            let mut out = Vec::new();
            for i in 0..data.generators.len() {
                for j in i + 1..data.generators.len() {
                    let (gi, gj) = (data.generators[i], data.generators[j]);
                    out.push((gi, gj, rou_string(&b.value(gi, gj))));
                }
            }
            Ok(out)
        }
        Flavor::Omega => {
            let mut out = Vec::new();
            for &x in h.elements() {
                for &y in h.elements() {
                    out.push((x, y, rou_string(&b.value(x, y))));
                }
            }
            Ok(out)
        }
    }
}

fn mu_entries(mu: &Cochain2) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for &a in mu.domain() {
        for &b in mu.domain() {
            let v = mu.value(a, b);
            if !v.is_one() {
                out.push((a, b, rou_string(&v)));
            }
        }
    }
    out
}

pub fn label_record(
    group: &FiniteGroup,
    omega: &Cochain3,
    label: &LagrangianLabel,
) -> Result<LabelRecord, Error> {
    let dual = if omega.is_trivial() {
        let d = dual_group(group, omega, &label.witness)?;
        Some(DualGroupRecord {
            order: d.group.order(),
            iso_name: d.iso_name,
        })
    } else {
        None
    };
    Ok(LabelRecord {
        h: label.subgroup.elements().to_vec(),
        b: bichar_entries(group, &label.bichar)?,
        mu: mu_entries(&label.witness.mu),
        dual_group: dual,
    })
}

/// Build the full atlas record for (group, omega): labels, dual groups,
/// cross-check verdicts, and the modular summary when the order is within
/// `modular_bound`.
pub fn atlas_record(
    group: &FiniteGroup,
    omega: &Cochain3,
    group_desc: &str,
    omega_desc: &str,
    modular_bound: usize,
) -> Result<AtlasRecord, Error> {
    let labels = lagrangian_labels(group, omega)?;
    let records = labels
        .iter()
        .map(|l| label_record(group, omega, l))
        .collect::<Result<Vec<_>, _>>()?;
    let mut checks: Vec<(String, String)> = Vec::new();
    // bijection with module-category labels
    let mods = module_categories_pointed_dual(group, omega)?;
    let bijection = label_correspondence(group, omega, &labels, &mods).is_ok();
    checks.push((
        "module-category/Lagrangian bijection".to_string(),
        if bijection { "pass" } else { "fail" }.to_string(),
    ));
    if !bijection {
        return Err(Error::invariant(
            "module-category labels do not biject with Lagrangian labels",
        ));
    }
    let modular = if group.order() <= modular_bound {
        let data = crate::modular::modular_data(group, omega)?;
        checks.push(("sum of squared dimensions".to_string(), "pass".to_string()));
        Some(modular_summary(&data))
    } else {
        None
    };
    Ok(AtlasRecord {
        group: group_desc.to_string(),
        omega: omega_desc.to_string(),
        label_count: records.len(),
        labels: records,
        modular,
        cross_checks: checks,
    })
}

pub fn modular_summary(data: &ModularData) -> ModularSummary {
    ModularSummary {
        object_count: data.objects.len(),
        t_spectrum: data.t_spectrum().iter().map(rou_string).collect(),
    }
}

/// Modular data JSON per the external interface: conductor, objects, and the
/// S-matrix as nested arrays of cyclotomic coefficient vectors.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ModularRecord {
    pub group: String,
    pub omega: String,
    pub conductor: i64,
    pub objects: Vec<ObjectRecord>,
    pub s: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ObjectRecord {
    pub rep: usize,
    pub char_index: usize,
    pub dim: i64,
    pub twist: String,
}

pub fn modular_record(data: &ModularData, group_desc: &str, omega_desc: &str) -> ModularRecord {
    ModularRecord {
        group: group_desc.to_string(),
        omega: omega_desc.to_string(),
        conductor: data.conductor,
        objects: data
            .objects
            .iter()
            .map(|o| ObjectRecord {
                rep: data.classes.reps[o.class_index],
                char_index: o.char_index,
                dim: o.dim,
                twist: rou_string(&o.twist),
            })
            .collect(),
        s: data
            .s
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.coeffs().iter().map(|q| q.to_string()).collect())
                    .collect()
            })
            .collect(),
    }
}

/// A parsed CLI job: the specs plus shared options.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub group: GroupSpec,
    pub omega: OmegaSpec,
    pub bound: Option<usize>,
    pub seed: u64,
}

impl JobSpec {
    pub fn parse(group: &str, omega: &str, bound: Option<usize>, seed: u64) -> Result<JobSpec, Error> {
        Ok(JobSpec {
            group: parse_group_spec(group)?,
            omega: parse_omega_spec(omega)?,
            bound,
            seed,
        })
    }

    pub fn build(&self) -> Result<(FiniteGroup, Cochain3), Error> {
        let group = self.group.build()?;
        let omega = self.omega.build(&group, &self.group.to_string())?;
        Ok((group, omega))
    }
}
