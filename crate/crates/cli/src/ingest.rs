//! Samples to a spec via the linearly interpolated empirical CDF.

use monoinv_core::repr::rat;
use monoinv_core::{parse_rational, Rational};

use crate::spec::{AtomSpec, DistributionSpec, PieceSpec};
use crate::CliError;

/// One number per line; blank lines are ignored, the first line is dropped
/// when `header` is set.
pub fn read_samples(text: &str, header: bool) -> Result<Vec<Rational>, CliError> {
    text.lines()
        .skip(usize::from(header))
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let line = i + 1 + usize::from(header);
            let field = l.split(',').next().unwrap_or("").trim();
            parse_rational(field).map_err(|e| CliError::Parse(format!("line {line}: {e}")))
        })
        .collect()
}

/// Every gap between consecutive order statistics carries `1/(n-1)`; a
/// zero-length gap (a tie) puts that mass on an atom.
pub fn ingest(mut xs: Vec<Rational>, allow_degenerate: bool) -> Result<DistributionSpec, CliError> {
    xs.sort();
    let distinct = xs.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(!xs.is_empty());
    if distinct < 2 {
        return match (allow_degenerate, xs.first()) {
            (true, Some(x)) => Ok(DistributionSpec {
                atoms: vec![AtomSpec { x: rat(x).into(), mass: "1".to_string().into() }],
                uniform_pieces: Vec::new(),
                carrier: None,
            }),
            _ => Err(CliError::Invalid(format!("need at least 2 distinct samples, got {distinct}"))),
        };
    }
    let unit = Rational::new(1.into(), (xs.len() - 1).into());
    let mut atoms: Vec<(Rational, Rational)> = Vec::new();
    let mut pieces = Vec::new();
    for w in xs.windows(2) {
        if w[0] == w[1] {
            match atoms.last_mut() {
                Some((x, m)) if *x == w[0] => *m += &unit,
                _ => atoms.push((w[0].clone(), unit.clone())),
            }
        } else {
            pieces.push(PieceSpec {
                a: rat(&w[0]).into(),
                b: rat(&w[1]).into(),
                mass: Some(rat(&unit).into()),
                density: None,
            });
        }
    }
    Ok(DistributionSpec {
        atoms: atoms.into_iter().map(|(x, m)| AtomSpec { x: rat(&x).into(), mass: rat(&m).into() }).collect(),
        uniform_pieces: pieces,
        carrier: None,
    })
}
