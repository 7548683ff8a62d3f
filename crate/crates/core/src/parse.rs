//! Line-oriented text formats: the poset input file, and the string
//! serializations for antichains, subsets and clutters used by the CLI.
//!
//! A poset file has one `elements:` line listing distinct labels and any
//! number of `covers:` lines with `lo<hi` tokens; `#` starts a comment
//! line. The file is rejected unless the closure of the covers is a
//! bounded poset.

use crate::antichain::Antichain;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

fn valid_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_poset_file(text: &str) -> Result<Poset> {
    let mut names: Option<Vec<String>> = None;
    let mut cover_tokens: Vec<String> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("elements:") {
            if names.is_some() {
                return Err(Error::Parse(format!(
                    "line {lineno}: second `elements:` line"
                )));
            }
            let labels: Vec<String> = rest.split_whitespace().map(String::from).collect();
            for l in &labels {
                if !valid_label(l) {
                    return Err(Error::Parse(format!("line {lineno}: bad label `{l}`")));
                }
            }
            names = Some(labels);
        } else if let Some(rest) = line.strip_prefix("covers:") {
            cover_tokens.extend(rest.split_whitespace().map(String::from));
        } else {
            return Err(Error::Parse(format!(
                "line {lineno}: unrecognized line `{line}`"
            )));
        }
    }
    let names = names.ok_or_else(|| Error::Parse("missing `elements:` line".to_string()))?;
    let id_of = |label: &str| -> Result<usize> {
        names
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| Error::Parse(format!("unknown element `{label}` in covers")))
    };
    let mut covers = Vec::new();
    for token in &cover_tokens {
        let (lo, hi) = token
            .split_once('<')
            .ok_or_else(|| Error::Parse(format!("bad cover token `{token}`, expected lo<hi")))?;
        if !valid_label(lo) || !valid_label(hi) {
            return Err(Error::Parse(format!("bad cover token `{token}`")));
        }
        covers.push((id_of(lo)?, id_of(hi)?));
    }
    Poset::from_cover_relations(names, &covers)
}

/// Renders a poset back into the two file lines, usable both as input
/// and in counterexample reports.
pub fn format_poset_file(p: &Poset) -> String {
    let covers: Vec<String> = p
        .covers()
        .iter()
        .map(|&(lo, hi)| format!("{}<{}", p.name(lo), p.name(hi)))
        .collect();
    format!(
        "elements: {}\ncovers: {}\n",
        p.names().join(" "),
        covers.join(" ")
    )
}

/// Comma-separated labels in ascending id order; the empty set is `-`.
pub fn format_subset(p: &Poset, xs: ElementSet) -> String {
    if xs.is_empty() {
        return "-".to_string();
    }
    xs.iter().map(|id| p.name(id)).collect::<Vec<_>>().join(",")
}

pub fn format_antichain(p: &Poset, a: Antichain) -> String {
    format_subset(p, a.members())
}

/// Parses comma-separated labels; `-` is the empty set.
pub fn parse_subset(p: &Poset, s: &str) -> Result<ElementSet> {
    let s = s.trim();
    if s == "-" {
        return Ok(ElementSet::EMPTY);
    }
    let mut out = ElementSet::EMPTY;
    for part in s.split(',') {
        let label = part.trim();
        let id = p
            .id_of(label)
            .ok_or_else(|| Error::Parse(format!("unknown element `{label}`")))?;
        out = out.with(id);
    }
    Ok(out)
}

/// Like [`parse_subset`], but additionally requires pairwise
/// incomparability.
pub fn parse_antichain(p: &Poset, s: &str) -> Result<Antichain> {
    Antichain::new(p, parse_subset(p, s)?)
}

/// Clutter serialization: members separated by `;`, elements by `,`;
/// the empty clutter is `-` and the clutter whose one member is the
/// empty set is `0`.
pub fn format_clutter(c: &Clutter) -> String {
    if c.is_empty() {
        return "-".to_string();
    }
    if c.sets() == [ElementSet::EMPTY] {
        return "0".to_string();
    }
    c.sets()
        .iter()
        .map(|s| {
            s.iter()
                .map(|bit| (bit + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_clutter(ground: usize, s: &str) -> Result<Clutter> {
    let s = s.trim();
    if s == "-" {
        return Ok(Clutter::empty(ground));
    }
    if s == "0" {
        return Ok(Clutter::trivial_empty_member(ground));
    }
    let mut sets = Vec::new();
    for member in s.split(';') {
        let mut set = ElementSet::EMPTY;
        for part in member.split(',') {
            let element: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad clutter element `{part}`")))?;
            if element == 0 || element > ground {
                return Err(Error::Parse(format!(
                    "clutter element {element} outside ground {{1..{ground}}}"
                )));
            }
            set = set.with(element - 1);
        }
        sets.push(set);
    }
    Clutter::new(ground, sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::b2;

    const B2_FILE: &str = "# the four-element square\nelements: 0 a b 1\ncovers: 0<a 0<b a<1 b<1\n";

    #[test]
    fn poset_file_round_trip() {
        let p = parse_poset_file(B2_FILE).unwrap();
        assert_eq!(p, b2());
        let again = parse_poset_file(&format_poset_file(&p)).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn covers_lines_accumulate() {
        let split = "elements: 0 a b 1\ncovers: 0<a 0<b\ncovers: a<1 b<1\n";
        assert_eq!(parse_poset_file(split).unwrap(), b2());
    }

    #[test]
    fn poset_file_errors() {
        assert!(matches!(
            parse_poset_file("covers: a<b\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_poset_file("elements: a b\nelements: c d\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_poset_file("elements: a b\ncovers: a<c\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_poset_file("elements: a b\ncovers: ab\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_poset_file("elements: a-b c\ncovers: a<c\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_poset_file("nonsense\n"),
            Err(Error::Parse(_))
        ));
        // closure not bounded: rejected at construction
        assert!(matches!(
            parse_poset_file("elements: a b c\ncovers: a<b a<c\n"),
            Err(Error::NotBounded(_))
        ));
    }

    #[test]
    fn subset_strings() {
        let p = b2();
        assert_eq!(parse_subset(&p, "-").unwrap(), ElementSet::EMPTY);
        let s = parse_subset(&p, "a,b").unwrap();
        assert_eq!(format_subset(&p, s), "a,b");
        assert!(parse_subset(&p, "q").is_err());
        assert!(parse_antichain(&p, "a,1").is_err());
        assert!(parse_antichain(&p, "a,b").is_ok());
    }

    #[test]
    fn clutter_strings() {
        assert_eq!(format_clutter(&Clutter::empty(3)), "-");
        assert_eq!(format_clutter(&Clutter::trivial_empty_member(3)), "0");
        let c = parse_clutter(3, "1,2;3").unwrap();
        assert_eq!(format_clutter(&c), "3;1,2");
        assert!(parse_clutter(3, "4").is_err());
        assert!(parse_clutter(3, "x").is_err());
        assert_eq!(parse_clutter(2, "-").unwrap(), Clutter::empty(2));
        assert_eq!(
            parse_clutter(2, "0").unwrap(),
            Clutter::trivial_empty_member(2)
        );
    }
}
