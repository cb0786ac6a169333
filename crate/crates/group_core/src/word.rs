use crate::error::GroupError;

/// A group word: generator indices with integer exponents, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().copied());
        Word(v)
    }

    /// Renders with generator names, e.g. `sigma2 sigma3^2`.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(g, e)| if e == 1 { names[g].clone() } else { format!("{}^{}", names[g], e) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses `a b^2 c^-1` style words. Tokens split on whitespace and `*`;
/// `1`, `e` and the empty string denote the identity.
pub fn parse_word(s: &str, names: &[String]) -> Result<Word, GroupError> {
    let mut out = Vec::new();
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "1" || trimmed == "e" {
        return Ok(Word::identity());
    }
    for tok in trimmed.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e.trim_matches(|c| c == '(' || c == ')' || c == '{' || c == '}')
                    .parse()
                    .map_err(|_| GroupError::BadWord(s.to_string()))?;
                (n, e)
            }
            None => (tok, 1),
        };
        if name == "1" || name == "e" {
            continue;
        }
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
        out.push((idx, exp));
    }
    Ok(Word(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exponents() {
        let names: Vec<String> = ["s", "t"].iter().map(|s| s.to_string()).collect();
        let w = parse_word("s t^2 s^-1", &names).unwrap();
        assert_eq!(w, Word(vec![(0, 1), (1, 2), (0, -1)]));
        assert_eq!(w.render(&names), "s t^2 s^-1");
        assert!(parse_word("1", &names).unwrap().is_empty());
        assert!(matches!(parse_word("u", &names), Err(GroupError::UnknownGenerator(_))));
    }
}
