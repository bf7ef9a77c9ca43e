//! The line-oriented `.act` file format.
//!
//! ```text
//! # comments run to the end of the line
//! surface <trivial|nontrivial> <genus> [twisted]
//! domain <interval|circle> <t0> <t1>
//! seam <t>                                        # required iff twisted
//! piece <t0> <t1> omega <c0> <c1> <d0> <d1> euler <eu> <ev>
//! wall <s> surface <genus> dual <a> <b>           # one line per component
//! wall <s> isolated <p> <q> <r>                   # weights (p, q, −r)
//! extremum <min|max> genus <g> normalchern <n> [twistedbranch]
//! ```
//!
//! Scalars are integers or rationals `p/q`; the omega coefficients describe
//! the affine path c(t) = c0 + c1·t, d(t) = d0 + d1·t in absolute time.
//! Parsing is purely syntactic: semantic trouble (tiling defects, broken
//! laws) is the validator's business, with one deliberate exception —
//! isolated weights outside the fixed normal form (p, q, −r) with p, q, r ≥ 1
//! describe actions that are automatically Hamiltonian and are rejected
//! here as outside this data model.

use std::fmt;
use std::fmt::Write as _;

use semifree_core::classifier::{ActionData, Domain, Wall};
use semifree_core::constraints::{ExtremalAnnotation, ExtremeSide, FixedComponent};
use semifree_core::dh::{ClassPath, LinearClassPath};
use semifree_core::homology::{zc, Bundle, RuledSurface};
use semifree_core::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn parse_rat(line: usize, tok: &str) -> Result<Rat, ParseError> {
    match tok.split_once('/') {
        None => match tok.parse::<i64>() {
            Ok(n) => Ok(semifree_core::rat(n)),
            Err(_) => err(line, format!("expected a number, found `{tok}`")),
        },
        Some((p, q)) => {
            let p: i64 = p
                .parse()
                .map_err(|_| ParseError { line, message: format!("expected a numerator, found `{p}`") })?;
            let q: i64 = q
                .parse()
                .map_err(|_| ParseError { line, message: format!("expected a denominator, found `{q}`") })?;
            if q == 0 {
                return err(line, "zero denominator");
            }
            Ok(semifree_core::ratio(p, q))
        }
    }
}

fn parse_i64(line: usize, tok: &str) -> Result<i64, ParseError> {
    tok.parse::<i64>()
        .map_err(|_| ParseError { line, message: format!("expected an integer, found `{tok}`") })
}

fn parse_u32(line: usize, tok: &str) -> Result<u32, ParseError> {
    tok.parse::<u32>().map_err(|_| ParseError {
        line,
        message: format!("expected a non-negative integer, found `{tok}`"),
    })
}

fn expect<'a>(line: usize, tokens: &mut impl Iterator<Item = &'a str>, what: &str) -> Result<&'a str, ParseError> {
    tokens
        .next()
        .ok_or_else(|| ParseError { line, message: format!("expected {what}") })
}

fn expect_keyword<'a>(
    line: usize,
    tokens: &mut impl Iterator<Item = &'a str>,
    kw: &str,
) -> Result<(), ParseError> {
    let tok = expect(line, tokens, &format!("keyword `{kw}`"))?;
    if tok != kw {
        return err(line, format!("expected keyword `{kw}`, found `{tok}`"));
    }
    Ok(())
}

fn expect_end<'a>(line: usize, tokens: &mut impl Iterator<Item = &'a str>) -> Result<(), ParseError> {
    match tokens.next() {
        None => Ok(()),
        Some(tok) => err(line, format!("unexpected trailing token `{tok}`")),
    }
}

/// Parses a complete document.  The result is syntactically canonical:
/// pieces sorted by their left endpoint, wall components grouped by level.
pub fn parse_action(text: &str) -> Result<ActionData, ParseError> {
    let mut surface: Option<(RuledSurface, bool)> = None;
    let mut domain: Option<(bool, Rat, Rat)> = None;
    let mut seam: Option<Rat> = None;
    let mut pieces: Vec<LinearClassPath> = Vec::new();
    let mut walls: Vec<Wall> = Vec::new();
    let mut extrema: Vec<ExtremalAnnotation> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let head = tokens.next().unwrap();
        match head {
            "surface" => {
                if surface.is_some() {
                    return err(line, "duplicate surface line");
                }
                let bundle = match expect(line, &mut tokens, "`trivial` or `nontrivial`")? {
                    "trivial" => Bundle::Trivial,
                    "nontrivial" => Bundle::Nontrivial,
                    other => {
                        return err(line, format!("expected `trivial` or `nontrivial`, found `{other}`"))
                    }
                };
                let genus = parse_u32(line, expect(line, &mut tokens, "a genus")?)?;
                let twisted = match tokens.next() {
                    None => false,
                    Some("twisted") => true,
                    Some(other) => {
                        return err(line, format!("expected `twisted` or end of line, found `{other}`"))
                    }
                };
                expect_end(line, &mut tokens)?;
                surface = Some((RuledSurface::new(bundle, genus), twisted));
            }
            "domain" => {
                if domain.is_some() {
                    return err(line, "duplicate domain line");
                }
                let circle = match expect(line, &mut tokens, "`interval` or `circle`")? {
                    "interval" => false,
                    "circle" => true,
                    other => {
                        return err(line, format!("expected `interval` or `circle`, found `{other}`"))
                    }
                };
                let lo = parse_rat(line, expect(line, &mut tokens, "a left endpoint")?)?;
                let hi = parse_rat(line, expect(line, &mut tokens, "a right endpoint")?)?;
                expect_end(line, &mut tokens)?;
                domain = Some((circle, lo, hi));
            }
            "seam" => {
                if seam.is_some() {
                    return err(line, "duplicate seam line");
                }
                seam = Some(parse_rat(line, expect(line, &mut tokens, "a seam position")?)?);
                expect_end(line, &mut tokens)?;
            }
            "piece" => {
                let lo = parse_rat(line, expect(line, &mut tokens, "a left endpoint")?)?;
                let hi = parse_rat(line, expect(line, &mut tokens, "a right endpoint")?)?;
                expect_keyword(line, &mut tokens, "omega")?;
                let c0 = parse_rat(line, expect(line, &mut tokens, "c0")?)?;
                let c1 = parse_rat(line, expect(line, &mut tokens, "c1")?)?;
                let d0 = parse_rat(line, expect(line, &mut tokens, "d0")?)?;
                let d1 = parse_rat(line, expect(line, &mut tokens, "d1")?)?;
                expect_keyword(line, &mut tokens, "euler")?;
                let eu = parse_i64(line, expect(line, &mut tokens, "e_u")?)?;
                let ev = parse_i64(line, expect(line, &mut tokens, "e_v")?)?;
                expect_end(line, &mut tokens)?;
                pieces.push(LinearClassPath {
                    lo,
                    hi,
                    path: ClassPath::new(c0, c1, d0, d1),
                    euler: zc(eu, ev),
                });
            }
            "wall" => {
                let s = parse_rat(line, expect(line, &mut tokens, "a wall position")?)?;
                let component = match expect(line, &mut tokens, "`surface` or `isolated`")? {
                    "surface" => {
                        let genus = parse_u32(line, expect(line, &mut tokens, "a genus")?)?;
                        expect_keyword(line, &mut tokens, "dual")?;
                        let a = parse_i64(line, expect(line, &mut tokens, "a dual coefficient")?)?;
                        let b = parse_i64(line, expect(line, &mut tokens, "a dual coefficient")?)?;
                        FixedComponent::Surface { genus, dual: zc(a, b) }
                    }
                    "isolated" => {
                        let p = parse_i64(line, expect(line, &mut tokens, "a weight")?)?;
                        let q = parse_i64(line, expect(line, &mut tokens, "a weight")?)?;
                        let r = parse_i64(line, expect(line, &mut tokens, "a weight")?)?;
                        if p < 1 || q < 1 || r < 1 {
                            return err(
                                line,
                                "isolated weights must be positive in the normal form \
                                 (p, q, \u{2212}r): other sign patterns make the action \
                                 automatically Hamiltonian \u{2014} outside this data model",
                            );
                        }
                        FixedComponent::Isolated { weights: (p, q, r) }
                    }
                    other => {
                        return err(line, format!("expected `surface` or `isolated`, found `{other}`"))
                    }
                };
                expect_end(line, &mut tokens)?;
                match walls.iter_mut().find(|w| w.s == s) {
                    Some(w) => w.components.push(component),
                    None => walls.push(Wall { s, components: vec![component] }),
                }
            }
            "extremum" => {
                let end = match expect(line, &mut tokens, "`min` or `max`")? {
                    "min" => ExtremeSide::Min,
                    "max" => ExtremeSide::Max,
                    other => return err(line, format!("expected `min` or `max`, found `{other}`")),
                };
                expect_keyword(line, &mut tokens, "genus")?;
                let genus = parse_u32(line, expect(line, &mut tokens, "a genus")?)?;
                expect_keyword(line, &mut tokens, "normalchern")?;
                let normal_chern = parse_i64(line, expect(line, &mut tokens, "a Chern number")?)?;
                let twisted_branch = match tokens.next() {
                    None => false,
                    Some("twistedbranch") => true,
                    Some(other) => {
                        return err(
                            line,
                            format!("expected `twistedbranch` or end of line, found `{other}`"),
                        )
                    }
                };
                expect_end(line, &mut tokens)?;
                extrema.push(ExtremalAnnotation { end, genus, normal_chern, twisted_branch });
            }
            other => {
                return err(
                    line,
                    format!(
                        "expected one of `surface`, `domain`, `seam`, `piece`, `wall`, \
                         `extremum`, found `{other}`"
                    ),
                )
            }
        }
    }

    let (surface, twisted) = match surface {
        Some(s) => s,
        None => return err(0, "missing surface line"),
    };
    let (circle, lo, hi) = match domain {
        Some(d) => d,
        None => return err(0, "missing domain line"),
    };
    let domain = if circle { Domain::Circle { lo, hi } } else { Domain::Interval { lo, hi } };

    pieces.sort_by(|a, b| a.lo.cmp(&b.lo));
    walls.sort_by(|a, b| a.s.cmp(&b.s));
    extrema.sort_by_key(|e| e.end != ExtremeSide::Min);

    Ok(ActionData { surface, twisted, domain, seam, pieces, walls, extrema })
}

/// Writes a document back out in the canonical line order.
pub fn serialize_action(data: &ActionData) -> String {
    let mut out = String::new();
    let bundle = match data.surface.bundle {
        Bundle::Trivial => "trivial",
        Bundle::Nontrivial => "nontrivial",
    };
    let twisted = if data.twisted { " twisted" } else { "" };
    let _ = writeln!(out, "surface {bundle} {}{twisted}", data.surface.genus);
    let (lo, hi) = data.domain.bounds();
    let kind = if data.domain.is_circle() { "circle" } else { "interval" };
    let _ = writeln!(out, "domain {kind} {lo} {hi}");
    if let Some(seam) = &data.seam {
        let _ = writeln!(out, "seam {seam}");
    }
    for p in &data.pieces {
        let (c0, c1) = (&p.path.u.c0, &p.path.u.c1);
        let (d0, d1) = (&p.path.v.c0, &p.path.v.c1);
        let _ = writeln!(
            out,
            "piece {} {} omega {c0} {c1} {d0} {d1} euler {} {}",
            p.lo, p.hi, p.euler.u, p.euler.v
        );
    }
    for w in &data.walls {
        for c in &w.components {
            match c {
                FixedComponent::Surface { genus, dual } => {
                    let _ = writeln!(out, "wall {} surface {genus} dual {} {}", w.s, dual.u, dual.v);
                }
                FixedComponent::Isolated { weights: (p, q, r) } => {
                    let _ = writeln!(out, "wall {} isolated {p} {q} {r}", w.s);
                }
            }
        }
    }
    for e in &data.extrema {
        let end = match e.end {
            ExtremeSide::Min => "min",
            ExtremeSide::Max => "max",
        };
        let branch = if e.twisted_branch { " twistedbranch" } else { "" };
        let _ = writeln!(out, "extremum {end} genus {} normalchern {}{branch}", e.genus, e.normal_chern);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const ROUND_TRIP: &str = "\
# a one-wall document
surface trivial 0
domain interval 0 2
piece 0 1 omega 3 0 0 1 euler 0 -1
piece 1 2 omega 5 -2 2 -1 euler 2 1
wall 1 surface 1 dual 2 2
extremum min genus 0 normalchern 0
extremum max genus 0 normalchern -4
";

    #[test]
    fn parse_serialize_parse_is_identity() {
        let parsed = parse_action(ROUND_TRIP).unwrap();
        let reparsed = parse_action(&serialize_action(&parsed)).unwrap();
        assert_eq!(parsed, reparsed);
    }

    #[test]
    fn empty_files_name_the_missing_line() {
        let e = parse_action("").unwrap_err();
        assert!(e.message.contains("missing surface line"));
        let e = parse_action("surface trivial 0\n").unwrap_err();
        assert!(e.message.contains("missing domain line"));
    }

    #[test]
    fn errors_carry_line_numbers_and_expectations() {
        let e = parse_action("surface trivial 0\ndomain interval 0 2\npiece 0 1 omega 1 2 3\n")
            .unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("expected"), "{}", e.message);

        let e = parse_action("surface klein 0\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.message.contains("trivial"));

        let e = parse_action("orbit 1 2\n").unwrap_err();
        assert!(e.message.contains("expected one of"));
    }

    #[test]
    fn bad_isolated_weights_are_outside_the_model() {
        let text = "surface trivial 0\ndomain circle 0 2\nwall 1 isolated 1 -2 3\n";
        let e = parse_action(text).unwrap_err();
        assert!(e.message.contains("automatically Hamiltonian"), "{}", e.message);
        assert!(e.message.contains("outside this data model"));
    }

    #[test]
    fn rationals_and_repeated_wall_lines() {
        let text = "\
surface nontrivial 1
domain interval 0 5/2
piece 0 5/4 omega 7/2 0 0 1 euler 0 -1
piece 5/4 5/2 omega 7/2 0 5/2 -1 euler 0 1
wall 5/4 surface 1 dual 0 1
wall 5/4 surface 1 dual 0 1
wall 5/4 isolated 1 2 3
extremum min genus 1 normalchern 0
extremum max genus 1 normalchern 0
";
        let parsed = parse_action(text).unwrap();
        assert_eq!(parsed.walls.len(), 1);
        assert_eq!(parsed.walls[0].components.len(), 3);
        assert_eq!(parsed.walls[0].s, semifree_core::ratio(5, 4));
        let reparsed = parse_action(&serialize_action(&parsed)).unwrap();
        assert_eq!(parsed, reparsed);
    }
}
