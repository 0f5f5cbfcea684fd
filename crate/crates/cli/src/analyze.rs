use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use ly_polyid::exactla::{write_dump, Field, FieldSpec, PrimeField, Rationals};
use ly_polyid::idfile::IdentityFile;
use ly_polyid::liftgen::{generate, generate_with_filtered_inputs};
use ly_polyid::pipeline::{analyze_degree, reconstruct_identity, PartitionReport, ResourceCaps};
use ly_polyid::symrep::{partitions, Partition};
use ly_polyid::{Error, Result};

use crate::golden;
use crate::{AnalyzeArgs, FormatArg, IdentityArgs, EXIT_ABORTED, EXIT_MISMATCH};

#[derive(Serialize)]
struct Report<'a> {
    degree: usize,
    characteristic: u64,
    filtered: bool,
    generators: usize,
    partitions: &'a [PartitionReport],
}

pub fn select_partitions(n: usize, specs: &[String]) -> Result<Vec<Partition>> {
    let all = partitions(n);
    let mut out: Vec<Partition> = Vec::new();
    for spec in specs {
        let chosen = match spec.as_str() {
            "all" => all.clone(),
            "sign" => vec![Partition::new(vec![1; n])?],
            "trivial" => vec![Partition::new(vec![n as u8])?],
            s => {
                let p: Partition = s.parse()?;
                if p.n() != n {
                    return Err(Error::DegreeMismatch { expected: n, found: p.n() });
                }
                vec![p]
            }
        };
        for p in chosen {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    // Keep the canonical partition order regardless of how they were named.
    out.sort_by_key(|p| all.iter().position(|q| q == p));
    Ok(out)
}

fn dump_name(pi: &Partition) -> String {
    pi.to_string().replace('+', "_").replace('^', "e")
}

fn run<F: Field>(a: &AnalyzeArgs, field: F) -> Result<u8> {
    let n = a.degree;
    let g = if a.filtered {
        generate_with_filtered_inputs(n, &field)?
    } else {
        generate(n)?
    };
    let parts = select_partitions(n, &a.partitions)?;
    let caps = ResourceCaps {
        max_rows: a.max_rows,
        max_seconds: a.max_seconds,
    };
    let results = analyze_degree(&g, &parts, &field, &caps)?;

    println!("degree {n}, characteristic {}, {} generators", field.characteristic(), g.len());
    println!("{:<12} {:>5} {:>7} {:>7} {:>10} {:>9}", "partition", "dim", "a_rank", "c_rank", "contained", "seconds");
    let mut problems = Vec::new();
    let mut aborted = false;
    for (r, analysis) in &results {
        let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let contained = match (&r.status, r.contained) {
            (_, Some(c)) => c.to_string(),
            _ => "aborted".to_string(),
        };
        println!(
            "{:<12} {:>5} {:>7} {:>7} {:>10} {:>9.2}",
            r.partition.to_string(),
            r.dimension,
            show(r.a_rank),
            show(r.c_rank),
            contained,
            r.seconds
        );
        match analysis {
            Some(an) => {
                problems.extend(golden::compare(an, &field)?);
                if let Some(dir) = &a.dump_dir {
                    std::fs::create_dir_all(dir)?;
                    let stem = dump_name(&r.partition);
                    std::fs::write(dir.join(format!("{stem}_identities.dump")), write_dump(&an.a_pi))?;
                    std::fs::write(dir.join(format!("{stem}_skew.dump")), write_dump(&an.b_pi))?;
                }
            }
            None => aborted = true,
        }
    }

    let reports: Vec<PartitionReport> = results.iter().map(|(r, _)| r.clone()).collect();
    if let Some(path) = &a.report {
        let report = Report {
            degree: n,
            characteristic: field.characteristic(),
            filtered: a.filtered,
            generators: g.len(),
            partitions: &reports,
        };
        write_json(path, &report)?;
    }
    if let Some(path) = &a.timings {
        let times: BTreeMap<String, f64> = reports.iter().map(|r| (r.partition.to_string(), r.seconds)).collect();
        write_json(path, &times)?;
    }

    for p in &problems {
        eprintln!("mismatch: {p}");
    }
    Ok(if !problems.is_empty() {
        EXIT_MISMATCH
    } else if aborted {
        EXIT_ABORTED
    } else {
        0
    })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn analyze(a: &AnalyzeArgs) -> Result<u8> {
    let spec = FieldSpec::from_characteristic(a.characteristic)?;
    spec.check_exceeds(a.degree as u64)?;
    match spec {
        FieldSpec::Rational => run(a, Rationals),
        FieldSpec::Prime(p) => run(a, PrimeField::new(p)?),
    }
}

pub fn identity(a: &IdentityArgs) -> Result<u8> {
    match a.degree {
        0 => return Err(Error::InvalidDegree(0)),
        1..=7 => {
            println!(
                "no such identity exists below degree 8: every identity of degree {} for the bracket follows from anticommutativity",
                a.degree
            );
            return Ok(0);
        }
        8 => {}
        n => return Err(Error::Unsupported(format!("degree {n} is beyond the computed range"))),
    }
    let sign = Partition::new(vec![1; 8])?;
    let g = generate(8)?;
    let results = analyze_degree(&g, std::slice::from_ref(&sign), &Rationals, &ResourceCaps::default())?;
    let analysis = results
        .into_iter()
        .find_map(|(_, a)| a)
        .ok_or_else(|| Error::ResourceCap("sign representation did not finish".into()))?;
    let row = analysis
        .new_rows
        .first()
        .ok_or_else(|| Error::Unsupported("no new identity found in degree 8".into()))?;
    let id = reconstruct_identity(&sign, row, &Rationals)?;
    match a.format {
        FormatArg::File => print!("{}", IdentityFile::from_explicit(&id)),
        FormatArg::Text => {
            println!("{id}");
            println!("where sigma runs over all permutations of a,...,h and sign(sigma) is its sign");
            println!();
            println!("{:>5}  {:>6}  term", "type", "coeff");
            let rendered = id.rendered_terms()?;
            for ((j, _), (c, t)) in id.terms.iter().zip(rendered) {
                println!("{j:>5}  {c:>6}  {t}");
            }
        }
    }
    Ok(0)
}
