use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use crate::forms::{validate_twist, CalculusSpec, DiagonalTwist, FormsError, WedgeCoefficients};
use crate::rewrite::{MonomialOrder, PresentedAlgebra, RewriteError};
use crate::symbolic::{GeneratorSet, Scalar};
use crate::zoo::{MetadataRecord, Subject};

use super::parse::parse_poly_at;
use super::FrontError;

const SECTIONS: [&str; 4] = ["algebra", "relations", "twist", "wedge"];

#[derive(Default)]
struct Section {
    header_line: usize,
    lines: Vec<(usize, usize, String)>,
}

#[derive(Default)]
struct Raw {
    sections: [Option<Section>; 4],
}

fn spec_err(line: usize, column: usize, message: impl Into<String>) -> FrontError {
    FrontError::Spec {
        line,
        column,
        message: message.into(),
    }
}

fn split_sections(text: &str) -> Result<Raw, FrontError> {
    let mut raw = Raw::default();
    let mut current: Option<usize> = None;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = line.chars().take_while(|c| c.is_whitespace()).count() + 1;
        if let Some(rest) = trimmed.strip_prefix('[') {
            let name = rest
                .strip_suffix(']')
                .ok_or_else(|| spec_err(lineno, indent, "section header is missing `]`"))?
                .trim();
            let slot = SECTIONS
                .iter()
                .position(|s| *s == name)
                .ok_or_else(|| spec_err(lineno, indent, format!("unknown section [{name}]")))?;
            if raw.sections[slot].is_some() {
                return Err(spec_err(lineno, indent, format!("section [{name}] appears twice")));
            }
            raw.sections[slot] = Some(Section {
                header_line: lineno,
                lines: Vec::new(),
            });
            current = Some(slot);
            continue;
        }
        let slot = current.ok_or_else(|| spec_err(lineno, indent, "content before the first section header"))?;
        let body = line.trim_end().to_string();
        raw.sections[slot]
            .as_mut()
            .expect("current section exists")
            .lines
            .push((lineno, 1, body));
    }
    Ok(raw)
}

struct AlgebraKeys {
    name: Option<String>,
    generators: Option<(usize, Vec<String>)>,
    degrees: Option<(usize, Vec<u32>)>,
    gkdim: Option<u32>,
    order: MonomialOrder,
    generator_order: Option<(usize, Vec<String>)>,
    claim: Option<String>,
    closed_form_partials: bool,
    metadata_only: bool,
    relation_degrees: Vec<u32>,
}

fn list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_bool(v: &str, line: usize, col: usize) -> Result<bool, FrontError> {
    match v {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(spec_err(line, col, format!("expected true or false, got `{other}`"))),
    }
}

fn parse_u32(v: &str, line: usize, col: usize, what: &str) -> Result<u32, FrontError> {
    v.parse()
        .map_err(|_| spec_err(line, col, format!("{what} must be a non-negative integer, got `{v}`")))
}

fn algebra_keys(sec: &Section) -> Result<AlgebraKeys, FrontError> {
    let mut keys = AlgebraKeys {
        name: None,
        generators: None,
        degrees: None,
        gkdim: None,
        order: MonomialOrder::Deglex,
        generator_order: None,
        claim: None,
        closed_form_partials: false,
        metadata_only: false,
        relation_degrees: Vec::new(),
    };
    let mut seen: Vec<String> = Vec::new();
    for (line, _, text) in &sec.lines {
        let line = *line;
        let indent = text.chars().take_while(|c| c.is_whitespace()).count() + 1;
        let (key, value) = text
            .split_once('=')
            .ok_or_else(|| spec_err(line, indent, "expected `key = value`"))?;
        let key = key.trim();
        let value = value.trim();
        let vcol = text.find('=').map(|i| i + 2).unwrap_or(1);
        if seen.iter().any(|k| k == key) {
            return Err(spec_err(line, indent, format!("key `{key}` given twice")));
        }
        seen.push(key.to_string());
        match key {
            "name" => keys.name = Some(value.to_string()),
            "generators" => keys.generators = Some((line, list(value))),
            "degrees" => {
                let ds = list(value)
                    .iter()
                    .map(|d| parse_u32(d, line, vcol, "degree"))
                    .collect::<Result<Vec<_>, _>>()?;
                keys.degrees = Some((line, ds));
            }
            "gkdim" => keys.gkdim = Some(parse_u32(value, line, vcol, "gkdim")?),
            "order" => keys.order = value.parse().map_err(|m: String| spec_err(line, vcol, m))?,
            "generator_order" => keys.generator_order = Some((line, list(value))),
            "claim" => keys.claim = Some(value.to_string()),
            "closed_form_partials" => keys.closed_form_partials = parse_bool(value, line, vcol)?,
            "metadata_only" => keys.metadata_only = parse_bool(value, line, vcol)?,
            "relation_degrees" => {
                keys.relation_degrees = list(value)
                    .iter()
                    .map(|d| parse_u32(d, line, vcol, "relation degree"))
                    .collect::<Result<Vec<_>, _>>()?;
            }
            other => return Err(spec_err(line, indent, format!("unknown key `{other}`"))),
        }
    }
    Ok(keys)
}

struct ScalarRow {
    line: usize,
    columns: Vec<usize>,
    values: Vec<Scalar>,
}

impl ScalarRow {
    fn zero_entry(&self) -> Option<(usize, usize)> {
        let j = self.values.iter().position(Scalar::is_zero)?;
        Some((j, self.columns[j]))
    }
}

fn scalar_rows(sec: &Section) -> Result<Vec<ScalarRow>, FrontError> {
    let mut rows = Vec::new();
    for (line, start, text) in &sec.lines {
        let mut row = Vec::new();
        let mut columns = Vec::new();
        let mut col = 1;
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if !tok.is_empty() {
                let at = text[col - 1..].find(tok).map(|i| i + col).unwrap_or(col);
                let s: Scalar = tok
                    .parse()
                    .map_err(|e| spec_err(*line, at + start - 1, format!("`{tok}`: {e}")))?;
                row.push(s);
                columns.push(at + start - 1);
                col = at + tok.len();
            }
        }
        rows.push(ScalarRow {
            line: *line,
            columns,
            values: row,
        });
    }
    Ok(rows)
}

/// Parses spec-file text. The `[twist]` section is validated against the relations.
pub fn parse_spec(text: &str) -> Result<Subject, FrontError> {
    let raw = split_sections(text)?;
    let [alg_sec, rel_sec, twist_sec, wedge_sec] = raw.sections;
    let alg_sec = alg_sec.ok_or_else(|| spec_err(1, 1, "missing [algebra] section"))?;
    let keys = algebra_keys(&alg_sec)?;
    let hl = alg_sec.header_line;
    let name = keys.name.clone().ok_or_else(|| spec_err(hl, 1, "missing key `name`"))?;
    let (gline, mut names) = keys
        .generators
        .clone()
        .ok_or_else(|| spec_err(hl, 1, "missing key `generators`"))?;

    if keys.metadata_only {
        if rel_sec.is_some() || twist_sec.is_some() || wedge_sec.is_some() {
            return Err(spec_err(hl, 1, "a metadata_only spec has only an [algebra] section"));
        }
        let gkdim = keys.gkdim.ok_or_else(|| spec_err(hl, 1, "metadata_only needs `gkdim`"))?;
        GeneratorSet::new(names.clone()).map_err(|e| spec_err(gline, 1, e.to_string()))?;
        return Ok(Subject::Metadata(MetadataRecord {
            name,
            num_generators: names.len(),
            gkdim,
            relation_degrees: keys.relation_degrees,
        }));
    }
    if !keys.relation_degrees.is_empty() {
        return Err(spec_err(hl, 1, "`relation_degrees` is only allowed with metadata_only = true"));
    }

    let mut degrees = match &keys.degrees {
        Some((dline, ds)) => {
            if ds.len() != names.len() {
                return Err(spec_err(
                    *dline,
                    1,
                    format!("{} degrees for {} generators", ds.len(), names.len()),
                ));
            }
            ds.clone()
        }
        None => vec![1; names.len()],
    };
    if let Some((oline, order)) = &keys.generator_order {
        let mut sorted_a = order.clone();
        sorted_a.sort();
        let mut sorted_b = names.clone();
        sorted_b.sort();
        if sorted_a != sorted_b {
            return Err(spec_err(*oline, 1, "generator_order must list each generator exactly once"));
        }
        degrees = order
            .iter()
            .map(|g| degrees[names.iter().position(|n| n == g).expect("same names")])
            .collect();
        names = order.clone();
    }
    let gens = Arc::new(GeneratorSet::with_degrees(names, degrees).map_err(|e| spec_err(gline, 1, e.to_string()))?);

    let mut relations = Vec::new();
    let mut rel_lines = Vec::new();
    if let Some(sec) = &rel_sec {
        for (line, col, text) in &sec.lines {
            relations.push(parse_poly_at(text, &gens, *line, *col)?);
            rel_lines.push(*line);
        }
    }
    let algebra = PresentedAlgebra::new(name, Arc::clone(&gens), relations, keys.gkdim, keys.order)
        .map_err(|e| match e {
            RewriteError::ZeroRelation(i) | RewriteError::Inhomogeneous(i) => spec_err(rel_lines[i], 1, e.to_string()),
            other => FrontError::Validation {
                message: other.to_string(),
                witness: None,
            },
        })?;
    let algebra = match keys.claim {
        Some(c) => algebra.with_claim(c),
        None => algebra,
    }
    .with_closed_form_partials(keys.closed_form_partials);
    crate::rewrite::RewriteSystem::build(&algebra).map_err(|e| FrontError::Validation {
        message: e.to_string(),
        witness: None,
    })?;

    let n = gens.len();
    let Some(twist_sec) = twist_sec else {
        if let Some(w) = wedge_sec {
            return Err(spec_err(w.header_line, 1, "[wedge] requires a [twist] section"));
        }
        return Ok(Subject::Algebra(algebra));
    };
    let rows = scalar_rows(&twist_sec)?;
    if rows.len() != n {
        return Err(spec_err(
            twist_sec.header_line,
            1,
            format!("twist has {} rows for {n} generators", rows.len()),
        ));
    }
    for row in &rows {
        if row.values.len() != n {
            return Err(spec_err(
                row.line,
                1,
                format!("twist row has {} entries for {n} generators", row.values.len()),
            ));
        }
        if let Some((j, col)) = row.zero_entry() {
            return Err(spec_err(row.line, col, format!("twist entry {} is zero; scales must be nonzero", j + 1)));
        }
    }
    let twist = DiagonalTwist::new(rows.into_iter().map(|r| r.values).collect()).map_err(forms_err)?;

    let wedge = match wedge_sec {
        None => WedgeCoefficients::exterior(n),
        Some(sec) => {
            let rows = scalar_rows(&sec)?;
            if rows.len() != n.saturating_sub(1) {
                return Err(spec_err(
                    sec.header_line,
                    1,
                    format!("wedge has {} rows, expected {}", rows.len(), n.saturating_sub(1)),
                ));
            }
            let mut full = vec![Vec::new()];
            for (k, row) in rows.into_iter().enumerate() {
                if row.values.len() != k + 1 {
                    return Err(spec_err(row.line, 1, format!("wedge row {} needs {} entries", k + 1, k + 1)));
                }
                if let Some((j, col)) = row.zero_entry() {
                    return Err(spec_err(
                        row.line,
                        col,
                        format!("wedge entry {} is zero; coefficients must be nonzero", j + 1),
                    ));
                }
                full.push(row.values);
            }
            WedgeCoefficients::new(full).map_err(forms_err)?
        }
    };
    let spec = CalculusSpec::new(algebra, twist, wedge).map_err(forms_err)?;
    let failures = validate_twist(&spec).map_err(forms_err)?;
    if let Some(f) = failures.first() {
        let rel = &spec.algebra.relations()[f.relation];
        return Err(FrontError::Validation {
            message: format!(
                "twist does not respect relation r{} (line {})",
                f.relation + 1,
                rel_lines[f.relation]
            ),
            witness: Some(format!("nu_{}({rel}) = {}", gens.name(f.generator), f.residue)),
        });
    }
    Ok(Subject::Calculus(spec))
}

fn forms_err(e: FormsError) -> FrontError {
    FrontError::Validation {
        message: e.to_string(),
        witness: None,
    }
}

pub fn load_spec(path: impl AsRef<Path>) -> Result<Subject, FrontError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| FrontError::Io(format!("{}: {e}", path.display())))?;
    parse_spec(&text)
}

/// Canonical spec-file text; [`parse_spec`] reads it back to an equal subject.
pub fn serialize_spec(subject: &Subject) -> String {
    let mut out = String::new();
    out.push_str("[algebra]\n");
    match subject {
        Subject::Metadata(m) => {
            let names: Vec<String> = (1..=m.num_generators).map(|i| format!("g{i}")).collect();
            writeln!(out, "name = {}", m.name).unwrap();
            writeln!(out, "generators = {}", names.join(", ")).unwrap();
            writeln!(out, "gkdim = {}", m.gkdim).unwrap();
            writeln!(out, "metadata_only = true").unwrap();
            if !m.relation_degrees.is_empty() {
                let ds: Vec<String> = m.relation_degrees.iter().map(u32::to_string).collect();
                writeln!(out, "relation_degrees = {}", ds.join(", ")).unwrap();
            }
            return out;
        }
        Subject::Algebra(a) => write_algebra(&mut out, a),
        Subject::Calculus(s) => {
            write_algebra(&mut out, &s.algebra);
            out.push_str("\n[twist]\n");
            for row in s.twist.rows() {
                let r: Vec<String> = row.iter().map(Scalar::to_string).collect();
                writeln!(out, "{}", r.join(" ")).unwrap();
            }
            out.push_str("\n[wedge]\n");
            for row in s.wedge.rows().iter().skip(1) {
                let r: Vec<String> = row.iter().map(Scalar::to_string).collect();
                writeln!(out, "{}", r.join(" ")).unwrap();
            }
        }
    }
    out
}

fn write_algebra(out: &mut String, a: &PresentedAlgebra) {
    let gens = a.gens();
    writeln!(out, "name = {}", a.name).unwrap();
    writeln!(out, "generators = {}", gens.names().join(", ")).unwrap();
    if !gens.all_unit_degree() {
        let ds: Vec<String> = gens.degrees().iter().map(u32::to_string).collect();
        writeln!(out, "degrees = {}", ds.join(", ")).unwrap();
    }
    if let Some(g) = a.declared_gkdim {
        writeln!(out, "gkdim = {g}").unwrap();
    }
    writeln!(out, "order = {}", a.order).unwrap();
    if let Some(c) = &a.claim {
        writeln!(out, "claim = {c}").unwrap();
    }
    if a.closed_form_partials {
        writeln!(out, "closed_form_partials = true").unwrap();
    }
    out.push_str("\n[relations]\n");
    for r in a.relations() {
        writeln!(out, "{r}").unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    const QUANTUM: &str = "\
# quantum plane at q = 2
[algebra]
name = qp
generators = x, y
gkdim = 2

[relations]
y*x = 2*x*y

[twist]
1 2
1/2, 1

[wedge]
-2
";

    #[test]
    fn loads_a_calculus() {
        let Subject::Calculus(spec) = parse_spec(QUANTUM).unwrap() else {
            panic!("expected a calculus");
        };
        let preset = zoo::quantum_plane(Scalar::from_int(2)).unwrap();
        assert_eq!(spec.twist, preset.twist);
        assert_eq!(spec.wedge, preset.wedge);
        assert_eq!(spec.algebra.relations(), preset.algebra.relations());
    }

    #[test]
    fn missing_sections_default() {
        let text = QUANTUM.split("[twist]").next().unwrap();
        assert!(matches!(parse_spec(text).unwrap(), Subject::Algebra(_)));
        let text = QUANTUM.split("[wedge]").next().unwrap();
        let Subject::Calculus(spec) = parse_spec(text).unwrap() else {
            panic!("expected a calculus");
        };
        assert_eq!(spec.wedge, WedgeCoefficients::constant(2, -Scalar::one()));
    }

    #[test]
    fn twist_dimension_must_match() {
        let mut text = String::from("[algebra]\nname = p\ngenerators = a, b, c, d\n[relations]\nb*a - a*b\n[twist]\n");
        for _ in 0..5 {
            text.push_str("1 1 1 1 1\n");
        }
        let err = parse_spec(&text).unwrap_err();
        assert!(matches!(err, FrontError::Spec { line: 6, .. }), "{err:?}");
        assert!(err.to_string().contains("5 rows for 4 generators"), "{err}");
    }

    #[test]
    fn zero_twist_entry_is_rejected() {
        let text = QUANTUM.replace("1/2, 1", "1,  0");
        let err = parse_spec(&text).unwrap_err();
        assert!(matches!(err, FrontError::Spec { line: 12, column: 5, .. }), "{err:?}");
        assert!(err.to_string().contains("zero"), "{err}");
    }

    #[test]
    fn errors_carry_positions() {
        let text = QUANTUM.replace("y*x = 2*x*y", "y*x = 2*x*w");
        match parse_spec(&text).unwrap_err() {
            FrontError::Parse(e) => {
                assert_eq!(e.line, 8);
                assert_eq!(e.column, 11);
            }
            other => panic!("{other:?}"),
        }
        let text = QUANTUM.replace("[twist]", "[twists]");
        assert!(matches!(parse_spec(&text).unwrap_err(), FrontError::Spec { line: 10, .. }));
    }

    #[test]
    fn invalid_twist_reports_a_witness() {
        let text = "[algebra]\nname = t\ngenerators = x, y\n[relations]\nx^2 - y^2\n[twist]\n1 1\n1 2\n";
        match parse_spec(text).unwrap_err() {
            FrontError::Validation { witness: Some(w), .. } => assert_eq!(w, "nu_y(x^2 - y^2) = -3*x^2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn presets_round_trip() {
        for name in ["cliffordC", "cliffordC_derived", "two_gen_gk5", "li_wang", "zhou_lu"] {
            let subject = zoo::preset(name, &[]).unwrap();
            let text = serialize_spec(&subject);
            assert_eq!(parse_spec(&text).unwrap(), subject, "{name}");
        }
    }
}
