//! Command-line front end: classify | verify | examples | morita | modular.
//! Exit codes: 0 pass, 1 invariant failure, 2 parse error, 3 bound exceeded.

use crate::atlas::{
    atlas_record, modular_record, parse_omega_spec, JobSpec,
};
use crate::classify::{
    find_equivalent_twist, is_morita_rigid, lagrangian_labels, morita_classes, MoritaEntry,
    MoritaEvidence,
};
use crate::cohomology::Cochain3;
use crate::groups::{is_isomorphic, parse_group_spec, FiniteGroup};
use crate::modular::{
    brute_force_lagrangians, build_subcategory, centralize, centralize_by_conditions,
    modular_data, modular_equivalent,
};
use crate::Error;
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "twistkit", version, about = "Exact classification of Lagrangian subcategories and modular data of twisted Drinfeld doubles of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Classify labels (H, B), module categories with pointed duals, and dual groups
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        omega: String,
        /// modular-summary order bound (default 16 untwisted, 8 twisted)
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-validate the classification against the brute-force Lagrangian search
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        omega: String,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reproduce the worked-example tables (dihedral, platonic, linear, order-8)
    Examples {},
    /// Pairwise Morita-class evidence for two or more (group, omega) pairs
    Morita {
        /// group spec; repeat once per entry
        #[arg(long = "group")]
        groups: Vec<String>,
        /// omega spec per entry (defaults to trivial); the literal `search`
        /// enumerates cocycle classes to match the first entry
        #[arg(long = "omega")]
        omegas: Vec<String>,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the exact modular data as JSON
    Modular {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        omega: String,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::invalid(format!("cannot write output: {}", e))),
        None => {
            println!("{}", text);
            Ok(())
        }
    }
}

fn default_modular_bound(omega: &Cochain3, bound: Option<usize>) -> usize {
    bound.unwrap_or(if omega.is_trivial() { 16 } else { 8 })
}

pub fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Classify { group, omega, bound, out, seed } => {
            let job = JobSpec::parse(&group, &omega, bound, seed)?;
            let (g, w) = job.build()?;
            let record = atlas_record(
                &g,
                &w,
                &job.group.to_string(),
                &job.omega.to_string(),
                default_modular_bound(&w, job.bound),
            )?;
            let json = serde_json::to_string_pretty(&record)
                .map_err(|e| Error::internal(e.to_string()))?;
            emit(&out, &json)
        }
        Command::Verify { group, omega, bound, seed } => {
            let job = JobSpec::parse(&group, &omega, bound, seed)?;
            let (g, w) = job.build()?;
            let limit = default_modular_bound(&w, job.bound);
            if g.order() > limit {
                return Err(Error::bounds(format!(
                    "verify bound {} exceeded by group order {}",
                    limit,
                    g.order()
                )));
            }
            cmd_verify(&g, &w, seed)
        }
        Command::Examples {} => cmd_examples(),
        Command::Morita { groups, omegas, bound, out } => {
            cmd_morita(&groups, &omegas, bound, &out)
        }
        Command::Modular { group, omega, bound, out } => {
            let job = JobSpec::parse(&group, &omega, bound, 0)?;
            let (g, w) = job.build()?;
            let limit = default_modular_bound(&w, job.bound);
            if g.order() > limit {
                return Err(Error::bounds(format!(
                    "modular bound {} exceeded by group order {}",
                    limit,
                    g.order()
                )));
            }
            let data = modular_data(&g, &w)?;
            let record = modular_record(&data, &job.group.to_string(), &job.omega.to_string());
            let json = serde_json::to_string_pretty(&record)
                .map_err(|e| Error::internal(e.to_string()))?;
            emit(&out, &json)
        }
    }
}

struct SampleRng(u64);

impl SampleRng {
    fn next(&mut self, bound: usize) -> usize {
        // xorshift64*
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        (x.wrapping_mul(0x2545F4914F6CDD1D) >> 32) as usize % bound
    }
}

fn cmd_verify(g: &FiniteGroup, w: &Cochain3, seed: u64) -> Result<(), Error> {
    let labels = lagrangian_labels(g, w)?;
    println!("labels: {}", labels.len());
    let data = modular_data(g, w)?;
    println!("objects: {} (sum d^2 = |G|^2: pass)", data.objects.len());

    // centralization: the two routes must agree; exhaustive below order 9,
    // seeded sampling above
    let n = data.objects.len();
    let exhaustive = g.order() <= 8;
    let mut rng = SampleRng(seed ^ 0x9E3779B97F4A7C15 | 1);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    if exhaustive {
        for i in 0..n {
            for j in 0..n {
                pairs.push((i, j));
            }
        }
    } else {
        for _ in 0..512 {
            pairs.push((rng.next(n), rng.next(n)));
        }
    }
    for (i, j) in pairs {
        if centralize(&data, i, j) != centralize_by_conditions(&data, i, j) {
            return Err(Error::invariant(format!(
                "centralization: S-matrix and character-condition routes disagree at ({}, {})",
                i, j
            )));
        }
    }
    println!(
        "centralization two-route agreement ({}): pass",
        if exhaustive { "exhaustive" } else { "sampled" }
    );

    // every label builds a verified subcategory (twist 1, mutual
    // centralization, dimension |G| are checked inside)
    let mut built: Vec<Vec<usize>> = Vec::new();
    for label in &labels {
        built.push(build_subcategory(&data, &label.subgroup, &label.bichar)?);
    }
    println!("subcategory checks (twist = 1, centralizing, dim = |G|): pass");
    built.sort();
    let brute = brute_force_lagrangians(&data)?;
    if built != brute {
        return Err(Error::invariant(format!(
            "oracle equivalence: classification yields {} subcategories, brute force {}",
            built.len(),
            brute.len()
        )));
    }
    println!("oracle equivalence: {} = {}: pass", built.len(), brute.len());
    Ok(())
}

fn cmd_examples() -> Result<(), Error> {
    let mut failures = 0usize;
    fn check(failures: &mut usize, name: &str, expected: usize, computed: usize, duals: &str) {
        let ok = expected == computed;
        if !ok {
            *failures += 1;
        }
        println!(
            "{:<22} expected {:<3} computed {:<3} {:<5} duals: {}",
            name,
            expected,
            computed,
            if ok { "ok" } else { "FAIL" },
            duals
        );
    }

    let classify_row = |spec_text: &str| -> Result<(usize, String), Error> {
        let spec = parse_group_spec(spec_text)?;
        let g = spec.build()?;
        let w = Cochain3::trivial_on_group(&g);
        let labels = lagrangian_labels(&g, &w)?;
        let mut names: Vec<String> = Vec::new();
        for label in &labels {
            let dual = crate::classify::dual_group(&g, &w, &label.witness)?;
            let display = if is_isomorphic(&dual.group, &g).map(|m| m.is_some()).unwrap_or(false) {
                "G".to_string()
            } else {
                dual.iso_name.unwrap_or_else(|| format!("order {}", dual.group.order()))
            };
            names.push(display);
        }
        names.sort();
        names.dedup();
        Ok((labels.len(), names.join(", ")))
    };

    for (spec, expected) in [
        ("dihedral 2", 6usize),
        ("dihedral 3", 2),
        ("dihedral 4", 7),
        ("dihedral 5", 2),
        ("dihedral 6", 4),
        ("alt 4", 3),
        ("sym 4", 3),
        ("quaternion", 5),
        ("sl 2 3", 2),
    ] {
        let (computed, duals) = classify_row(spec)?;
        check(&mut failures, spec, expected, computed, &duals);
    }
    // A5: classification only (no dual-group table needed beyond the trivial
    // label, which is G itself)
    {
        let g = parse_group_spec("alt 5")?.build()?;
        let w = Cochain3::trivial_on_group(&g);
        let labels = lagrangian_labels(&g, &w)?;
        check(&mut failures, "alt 5", 1, labels.len(), "G");
    }
    // SL(2, 5): two labels; the center label's dual is Z2 x A5
    {
        let g = parse_group_spec("sl 2 5")?.build()?;
        let w = Cochain3::trivial_on_group(&g);
        let labels = lagrangian_labels(&g, &w)?;
        let mut duals = Vec::new();
        for label in &labels {
            let d = crate::classify::dual_group(&g, &w, &label.witness)?;
            duals.push(if is_isomorphic(&d.group, &g)?.is_some() {
                "G".to_string()
            } else {
                d.iso_name.unwrap_or_else(|| format!("order {}", d.group.order()))
            });
        }
        duals.sort();
        let summary = duals.join(", ");
        check(&mut failures, "sl 2 5", 2, labels.len(), &summary);
        if !duals.contains(&"Z2xA5".to_string()) {
            failures += 1;
            println!("sl 2 5: FAIL expected a dual group isomorphic to Z2 x A5");
        }
    }
    // twisted D8 inventory: the literal inflated cocycle has five labels
    // (see README notes; the restriction to <r> is a coboundary)
    {
        let g = parse_group_spec("dihedral 4")?.build()?;
        let spec = parse_omega_spec("inflate cyclic 2 1 via mod-r2-s")?;
        let w = spec.build(&g, "dihedral 4")?;
        let labels = lagrangian_labels(&g, &w)?;
        check(&mut failures, "dihedral 4 (twisted)", 5, labels.len(), "(twisted: not computed)");
    }
    // Morita rigidity flags
    for (spec, expected) in [("alt 4", true), ("sym 4", true), ("dihedral 3", true), ("dihedral 5", true), ("dihedral 4", false)] {
        let g = parse_group_spec(spec)?.build()?;
        let report = is_morita_rigid(&g)?;
        let ok = report.rigid == expected;
        if !ok {
            failures += 1;
        }
        println!(
            "rigidity {:<12} expected {:<5} computed {:<5} {}",
            spec,
            expected,
            report.rigid,
            if ok { "ok" } else { "FAIL" }
        );
    }
    // order-8 Morita distinctions at the double level
    {
        let d8 = parse_group_spec("dihedral 4")?.build()?;
        let q8 = parse_group_spec("quaternion")?.build()?;
        let data_d8 = modular_data(&d8, &Cochain3::trivial_on_group(&d8))?;
        let data_q8 = modular_data(&q8, &Cochain3::trivial_on_group(&q8))?;
        let distinguished = modular_equivalent(&data_d8, &data_q8).is_none();
        if !distinguished {
            failures += 1;
        }
        println!(
            "morita: D(D8) vs D(Q8) {}",
            if distinguished { "distinguished ok" } else { "FAIL: matched" }
        );
        let z8 = parse_group_spec("abelian 2 2 2")?.build()?;
        let witness = find_equivalent_twist(&data_d8, &z8)?;
        if witness.is_none() {
            failures += 1;
        }
        println!(
            "morita: D(D8) vs twisted doubles of Z2^3: {}",
            if witness.is_some() { "equivalent cocycle found ok" } else { "FAIL: no cocycle" }
        );
    }
    if failures > 0 {
        return Err(Error::invariant(format!("{} example expectations failed", failures)));
    }
    Ok(())
}

#[derive(Serialize, Deserialize, Debug)]
pub struct MoritaReportRecord {
    pub entries: Vec<String>,
    pub matrix: Vec<Vec<MoritaCellRecord>>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct MoritaCellRecord {
    pub verdict: String,
    pub detail: String,
}

fn cmd_morita(
    groups: &[String],
    omegas: &[String],
    bound: Option<usize>,
    out: &Option<PathBuf>,
) -> Result<(), Error> {
    if groups.len() < 2 {
        return Err(Error::parse("morita needs at least two --group entries"));
    }
    let mut entries: Vec<MoritaEntry> = Vec::new();
    for (i, gtext) in groups.iter().enumerate() {
        let gspec = parse_group_spec(gtext)?;
        let g = gspec.build()?;
        let otext = omegas.get(i).map(|s| s.as_str()).unwrap_or("trivial");
        let (omega, odesc) = if otext == "search" {
            if i == 0 {
                return Err(Error::parse("the first entry cannot use omega = search"));
            }
            let target = modular_data(&entries[0].group, &entries[0].omega)?;
            let found = find_equivalent_twist(&target, &g)?.ok_or_else(|| {
                Error::invariant(format!(
                    "no cocycle class on {} matches the modular data of {}",
                    gtext, groups[0]
                ))
            })?;
            (found.0, format!("search (match for {})", groups[0]))
        } else {
            let ospec = parse_omega_spec(otext)?;
            (ospec.build(&g, &gspec.to_string())?, ospec.to_string())
        };
        entries.push(MoritaEntry {
            group: g,
            omega,
            descriptor: format!("{} | {}", gspec, odesc),
        });
    }
    let report = morita_classes(&entries, bound.unwrap_or(16))?;
    let record = MoritaReportRecord {
        entries: report.descriptors.clone(),
        matrix: report
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|ev| match ev {
                        MoritaEvidence::EquivalentWitness { detail, .. } => MoritaCellRecord {
                            verdict: "equivalent".to_string(),
                            detail: detail.clone(),
                        },
                        MoritaEvidence::Distinguished { invariant } => MoritaCellRecord {
                            verdict: "distinguished".to_string(),
                            detail: invariant.clone(),
                        },
                        MoritaEvidence::Undecided { note } => MoritaCellRecord {
                            verdict: "undecided".to_string(),
                            detail: note.clone(),
                        },
                    })
                    .collect()
            })
            .collect(),
    };
    let json = serde_json::to_string_pretty(&record).map_err(|e| Error::internal(e.to_string()))?;
    emit(out, &json)
}

/// Map an error to the documented exit code.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => 2,
        Error::Bounds(_) => 3,
        _ => 1,
    }
}
