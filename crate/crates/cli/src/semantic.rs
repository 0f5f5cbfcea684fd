use std::path::Path;

use ly_polyid::evallab::{bundled_algebras, check_identity, validate, AlgebraFile, AlgebraSC, CheckOutcome};
use ly_polyid::idfile::IdentityFile;
use ly_polyid::pipeline::certify_new;
use ly_polyid::{Error, Result};

use crate::{AlgebraArgs, CertifyArgs, ValidateArgs, VerifyArgs, EXIT_MISMATCH};

fn read_identity(path: &Path) -> Result<IdentityFile> {
    std::fs::read_to_string(path)?.parse()
}

/// Loads an algebra file or a bundled algebra named `bundled:<name>`.
pub fn load_algebra(spec: &str) -> Result<AlgebraSC> {
    match spec.strip_prefix("bundled:") {
        Some(name) => bundled_algebras()
            .into_iter()
            .find(|b| b.name == name)
            .map(|b| b.algebra)
            .ok_or_else(|| Error::Parse(format!("no bundled algebra named {name:?}"))),
        None => AlgebraFile::read(Path::new(spec))?.build(),
    }
}

pub fn certify(a: &CertifyArgs) -> Result<u8> {
    let id = read_identity(&a.identity)?.to_explicit()?;
    let c = certify_new(&id)?;
    println!("not a consequence of anticommutativity: {}", c.not_anticommutative_consequence);
    println!("consequence of the defining identities: {}", c.is_ly_consequence);
    Ok(if c.not_anticommutative_consequence && c.is_ly_consequence {
        0
    } else {
        EXIT_MISMATCH
    })
}

fn report(outcome: &CheckOutcome) -> u8 {
    if outcome.passed {
        println!(
            "pass: {} random trials, {} basis tuples",
            outcome.random_trials, outcome.basis_tuples
        );
        return 0;
    }
    println!("FAIL");
    if let Some(c) = &outcome.counterexample {
        match c.trial {
            Some(t) => println!("random trial {t}"),
            None => println!("basis tuple"),
        }
        for (i, v) in c.assignment.iter().enumerate() {
            println!("x{} = ({})", i + 1, v.join(", "));
        }
        println!("value = ({})", c.value.join(", "));
    }
    EXIT_MISMATCH
}

pub fn verify(a: &VerifyArgs) -> Result<u8> {
    let file = read_identity(&a.identity)?;
    let alg = load_algebra(&a.algebra)?;
    let outcome = match file.to_explicit() {
        Ok(id) if id.alternating => check_identity(&id, &alg, a.trials, a.seed)?,
        _ => check_identity(&file.to_polynomial()?, &alg, a.trials, a.seed)?,
    };
    Ok(report(&outcome))
}

pub fn validate_algebra(a: &ValidateArgs) -> Result<u8> {
    let alg = load_algebra(&a.algebra)?;
    let violations = validate(&alg);
    if violations.is_empty() {
        println!("valid Lie-Yamaguti algebra of dimension {}", alg.dim());
        return Ok(0);
    }
    for v in &violations {
        println!("{v}");
    }
    Ok(EXIT_MISMATCH)
}

pub fn algebra(a: &AlgebraArgs) -> Result<u8> {
    let all = bundled_algebras();
    match &a.name {
        None => {
            for b in &all {
                println!("{} (dimension {})", b.name, b.algebra.dim());
            }
        }
        Some(name) => {
            let b = all
                .iter()
                .find(|b| b.name == name)
                .ok_or_else(|| Error::Parse(format!("no bundled algebra named {name:?}")))?;
            println!("{}", AlgebraFile::from_algebra(Some(b.name.to_string()), &b.algebra).to_json());
        }
    }
    Ok(0)
}
