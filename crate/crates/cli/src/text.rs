//! The integer and crossing text formats.

use braidnf_core::{BraidWord, Crossing, CrossingSequence, Generator, Sign};

use crate::CliError;

/// Whitespace-separated non-zero integers; `t` is `x_|t|` with the sign of `t`.
pub fn parse_word(strands: usize, text: &str) -> Result<BraidWord, CliError> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let t: i64 = tok
            .parse()
            .map_err(|_| CliError::Parse(format!("bad word token {tok:?}")))?;
        let g = Generator::from_int(t).ok_or_else(|| CliError::Parse("token 0 is not a generator".into()))?;
        letters.push(g);
    }
    Ok(BraidWord::new(strands, letters)?)
}

pub fn format_word(w: &BraidWord) -> String {
    join(w.to_ints())
}

/// Tokens `r,s` or `-r,s` with `1 <= r < s <= strands`.
pub fn parse_crossings(strands: usize, text: &str) -> Result<CrossingSequence, CliError> {
    let mut items = Vec::new();
    for tok in text.split_whitespace() {
        let bad = || CliError::Parse(format!("bad crossing token {tok:?}"));
        let (sign, body) = match tok.strip_prefix('-') {
            Some(rest) => (Sign::Neg, rest),
            None => (Sign::Pos, tok),
        };
        let (r, s) = body.split_once(',').ok_or_else(bad)?;
        let r: usize = r.parse().map_err(|_| bad())?;
        let s: usize = s.parse().map_err(|_| bad())?;
        if r == 0 || r >= s || s > strands {
            return Err(CliError::Parse(format!(
                "crossing {tok:?} needs 1 <= r < s <= {strands}"
            )));
        }
        items.push(Crossing::new(r, s, sign)?);
    }
    Ok(CrossingSequence::new(strands, items)?)
}

pub fn format_crossing(c: &Crossing) -> String {
    let minus = if c.sign == Sign::Neg { "-" } else { "" };
    format!("{minus}{},{}", c.low, c.high)
}

pub fn format_crossings(c: &CrossingSequence) -> String {
    join(c.items().iter().map(format_crossing))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Word text, or `x`-notation when `pretty`.
pub fn render_word(w: &BraidWord, pretty: bool) -> String {
    if pretty {
        w.to_string()
    } else {
        format_word(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        let w = parse_word(4, "3 -2 -2 1").unwrap();
        assert_eq!(format_word(&w), "3 -2 -2 1");
        assert_eq!(render_word(&w, true), "x3 x2^-2 x1");
        assert!(parse_word(3, "").unwrap().is_empty());
        assert!(parse_word(3, "3").is_err());
        assert!(parse_word(3, "0").is_err());
        assert!(parse_word(3, "x").is_err());
    }

    #[test]
    fn crossing_round_trip() {
        let c = parse_crossings(4, "3,4 -2,4 -2,4 1,2").unwrap();
        assert_eq!(format_crossings(&c), "3,4 -2,4 -2,4 1,2");
        assert!(parse_crossings(3, "2,1").is_err());
        assert!(parse_crossings(3, "1,4").is_err());
        assert!(parse_crossings(3, "1;2").is_err());
    }
}
