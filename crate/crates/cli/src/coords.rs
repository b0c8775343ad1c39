//! Coordinate lists: `x=1,y=2/3,z=-4` or positional `1,2/3,-4`.

use num_complex::Complex64;
use sl2char::scalar::{parse_complex, parse_rational, parse_real};
use sl2char::Rational;

use crate::CliError;

/// Raw fields in the order of `names`.
pub fn fields(text: &str, names: &[&str]) -> Result<Vec<String>, CliError> {
    let items: Vec<&str> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if items.len() != names.len() {
        return Err(CliError::Usage(format!(
            "expected {} coordinates ({}), got {}",
            names.len(),
            names.join(","),
            items.len()
        )));
    }
    if !items.iter().any(|s| s.contains('=')) {
        return Ok(items.iter().map(|s| s.to_string()).collect());
    }
    let mut out = vec![None; names.len()];
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("mixed named and positional field `{item}`")))?;
        let i = names.iter().position(|n| *n == k.trim()).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown coordinate `{k}`; expected {}",
                names.join(",")
            ))
        })?;
        if out[i].replace(v.trim().to_string()).is_some() {
            return Err(CliError::Usage(format!("coordinate `{k}` given twice")));
        }
    }
    Ok(out
        .into_iter()
        .map(|v| v.expect("all names filled"))
        .collect())
}

fn each<T>(
    text: &str,
    names: &[&str],
    parse: fn(&str) -> Result<T, String>,
) -> Result<Vec<T>, CliError> {
    fields(text, names)?
        .iter()
        .map(|s| parse(s).map_err(CliError::Usage))
        .collect()
}

pub fn reals(text: &str, names: &[&str]) -> Result<Vec<f64>, CliError> {
    each(text, names, parse_real)
}

pub fn complexes(text: &str, names: &[&str]) -> Result<Vec<Complex64>, CliError> {
    each(text, names, parse_complex)
}

pub fn rationals(text: &str, names: &[&str]) -> Result<Vec<Rational>, CliError> {
    each(text, names, parse_rational)
}

pub fn real(text: &str) -> Result<f64, CliError> {
    parse_real(text).map_err(CliError::Usage)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_and_positional() {
        let n = ["x", "y", "z"];
        assert_eq!(reals("z=3,x=1,y=1/2", &n).unwrap(), vec![1.0, 0.5, 3.0]);
        assert_eq!(reals("1, -2, 3e1", &n).unwrap(), vec![1.0, -2.0, 30.0]);
        assert!(reals("1,2", &n).is_err());
        assert!(reals("x=1,x=2,y=3", &n).is_err());
        assert!(reals("x=1,w=2,y=3", &n).is_err());
        assert_eq!(
            complexes("1+2i,i,0", &n).unwrap()[1],
            Complex64::new(0.0, 1.0)
        );
    }
}
