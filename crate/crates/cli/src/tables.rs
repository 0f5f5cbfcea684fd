use ly_polyid::freealg::{count_types, monomial_count, types_of_degree, OpClass, Term, MAX_DEGREE};
use ly_polyid::liftgen::lambda;
use ly_polyid::{Error, Result};

use crate::{ClassArg, CountsArgs, TypesArgs};

pub fn types(a: &TypesArgs) -> Result<u8> {
    let types = types_of_degree(a.degree)?;
    let class = match a.class {
        ClassArg::All => None,
        ClassArg::Ternary => Some(OpClass::Ternary),
        ClassArg::Mixed => Some(OpClass::Mixed),
        ClassArg::Binary => Some(OpClass::Binary),
    };
    let labels: Vec<u8> = (0..a.degree as u8).collect();
    for t in types.types() {
        // Degree one has a single leaf type that belongs to every class.
        if class.is_some_and(|c| c != t.class() && t.class() != OpClass::Leaf) {
            continue;
        }
        let index = if class.is_some() { t.class_index } else { t.index };
        if a.skew {
            for s in &t.skews {
                println!("{index} {} {}", s.sigma.cycle_string(), s.parity());
            }
        } else if a.render {
            println!("{index} {}", Term::from_tree(&t.tree, &labels).render(a.degree <= 8));
        } else {
            println!("{index} {}", t.tree);
        }
    }
    Ok(0)
}

pub fn counts(a: &CountsArgs) -> Result<u8> {
    if a.max_degree == 0 || a.max_degree > MAX_DEGREE {
        return Err(Error::InvalidDegree(a.max_degree));
    }
    println!("{:>3} {:>7} {:>7} {:>7} {:>7} {:>16} {:>10}", "n", "bt", "b", "t", "m", "mu", "lambda");
    for n in 1..=a.max_degree {
        let (bt, b, t, m) = count_types(n)?;
        let lam = if n >= 3 { lambda(n).to_string() } else { "-".into() };
        println!(
            "{n:>3} {bt:>7} {b:>7} {t:>7} {m:>7} {:>16} {lam:>10}",
            monomial_count(n)?
        );
    }
    Ok(0)
}
