//! List-valued flags: `8,16,32`, `8:8:64` (arithmetic) and `8:x2:64`
//! (geometric), freely mixed with commas.

use osht::PlacementMethod;

#[derive(Debug, Clone, PartialEq)]
pub struct Bandlimits(pub Vec<usize>);

#[derive(Debug, Clone, PartialEq)]
pub struct Methods(pub Vec<PlacementMethod>);

fn number(s: &str) -> Result<usize, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))
}

fn range(item: &str) -> Result<Vec<usize>, String> {
    let parts: Vec<&str> = item.split(':').collect();
    let [start, step, end] = parts[..] else {
        return Err(format!(
            "`{item}`: ranges are start:step:end or start:xfactor:end"
        ));
    };
    let (start, end) = (number(start)?, number(end)?);
    if start > end {
        return Err(format!("`{item}`: start exceeds end"));
    }
    let mut out = Vec::new();
    if let Some(factor) = step.trim().strip_prefix('x') {
        let factor = number(factor)?;
        if factor < 2 || start == 0 {
            return Err(format!(
                "`{item}`: geometric ranges need factor >= 2 and start >= 1"
            ));
        }
        let mut v = start;
        while v <= end {
            out.push(v);
            v *= factor;
        }
    } else {
        let step = number(step)?;
        if step == 0 {
            return Err(format!("`{item}`: step must be positive"));
        }
        out.extend((start..=end).step_by(step));
    }
    Ok(out)
}

pub fn parse_bandlimits(s: &str) -> Result<Bandlimits, String> {
    let mut out = Vec::new();
    for item in s.split(',') {
        if item.contains(':') {
            out.extend(range(item)?);
        } else {
            out.push(number(item)?);
        }
    }
    if out.is_empty() {
        return Err("empty band-limit list".into());
    }
    Ok(Bandlimits(out))
}

pub fn parse_passes(s: &str) -> Result<usize, String> {
    match number(s)? {
        0 => Err("at least one pass is required".into()),
        n => Ok(n),
    }
}

pub fn parse_methods(s: &str) -> Result<Methods, String> {
    s.split(',')
        .map(|m| m.trim().parse::<PlacementMethod>())
        .collect::<Result<Vec<_>, _>>()
        .map(Methods)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_and_ranges() {
        assert_eq!(parse_bandlimits("8,16").unwrap().0, vec![8, 16]);
        assert_eq!(parse_bandlimits("8:8:32").unwrap().0, vec![8, 16, 24, 32]);
        assert_eq!(parse_bandlimits("8:x2:64").unwrap().0, vec![8, 16, 32, 64]);
        assert_eq!(parse_bandlimits("4, 8:x2:20").unwrap().0, vec![4, 8, 16]);
    }

    #[test]
    fn malformed_lists() {
        for bad in [
            "", "8,", "a", "8:0:16", "16:2:8", "8:16", "8:x1:32", "1:2:3:4",
        ] {
            assert!(parse_bandlimits(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn methods() {
        assert_eq!(
            parse_methods("elimination,ascending").unwrap().0,
            vec![PlacementMethod::Elimination, PlacementMethod::Ascending]
        );
        assert!(parse_methods("elimination,nope").is_err());
        assert_eq!(parse_passes("3"), Ok(3));
        assert!(parse_passes("0").is_err());
    }
}
