//! Argument syntax shared by the subcommands.

use schubert_core::{Error, Grassmannian, Partition, Result};

/// `K,N`.
pub fn grassmannian(text: &str) -> std::result::Result<Grassmannian, String> {
    let (k, n) = text
        .split_once(',')
        .ok_or_else(|| format!("expected K,N but found {text:?}"))?;
    let k: usize = k
        .trim()
        .parse()
        .map_err(|_| format!("invalid k in {text:?}"))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| format!("invalid n in {text:?}"))?;
    Grassmannian::new(k, n).map_err(|e| e.to_string())
}

/// A partition on the command line. Besides the comma grammar, a token of
/// several digits and no comma lists one part per digit, so `211` is
/// `(2,1,1)`. A single part above 9 needs a comma: `12,0`.
pub fn partition(token: &str) -> Result<Partition> {
    let compact = token.len() > 1 && token.bytes().all(|b| b.is_ascii_digit());
    if compact {
        Partition::new(token.bytes().map(|b| usize::from(b - b'0')).collect())
    } else {
        token.parse()
    }
}

/// `PARTITION[^EXP]`, e.g. `111^2`.
pub fn factor(token: &str) -> Result<(Partition, u32)> {
    match token.split_once('^') {
        None => Ok((partition(token)?, 1)),
        Some((base, exp)) => {
            let exp = exp.parse().map_err(|_| Error::Syntax {
                position: base.len() + 1,
                message: format!("invalid exponent {exp:?}"),
            })?;
            Ok((partition(base)?, exp))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(p: &Partition) -> Vec<usize> {
        p.parts().to_vec()
    }

    #[test]
    fn partition_tokens() {
        assert_eq!(parts(&partition("211").unwrap()), [2, 1, 1]);
        assert_eq!(parts(&partition("1").unwrap()), [1]);
        assert_eq!(parts(&partition("4,3,1").unwrap()), [4, 3, 1]);
        assert_eq!(parts(&partition("12,0").unwrap()), [12]);
        assert!(partition("0").unwrap().is_empty());
        assert!(partition("").unwrap().is_empty());
        assert!(partition("121").is_err());
        assert!(partition("a").unwrap_err().is_parse());
    }

    #[test]
    fn factor_tokens() {
        let (p, e) = factor("111^2").unwrap();
        assert_eq!((parts(&p), e), (vec![1, 1, 1], 2));
        let (p, e) = factor("3,1").unwrap();
        assert_eq!((parts(&p), e), (vec![3, 1], 1));
        assert!(factor("1^x").unwrap_err().is_parse());
    }

    #[test]
    fn grassmannian_tokens() {
        let g = grassmannian("3,7").unwrap();
        assert_eq!((g.k(), g.n()), (3, 7));
        assert!(grassmannian("3").is_err());
        assert!(grassmannian("7,3").is_err());
    }
}
