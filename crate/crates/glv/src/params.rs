use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use graphdyn_core::{BasisSet, Label};
use serde::Deserialize;

pub const DEFAULT_ALPHA: f64 = -0.02;
pub const DEFAULT_BETA: f64 = -0.1;
pub const DEFAULT_T_STAR: f64 = 4.0;

/// Per-species growth rates and antibiotic susceptibilities plus the global
/// weight-adaptation coefficients. The flow map restricts these to whatever
/// basis is live, so both maps must cover the whole universe.
#[derive(Clone, Debug, PartialEq)]
pub struct GlvParams {
    pub growth: BTreeMap<Label, f64>,
    pub susceptibility: BTreeMap<Label, f64>,
    pub alpha: f64,
    pub beta: f64,
    pub t_star: f64,
}

impl GlvParams {
    pub fn ensure_covers(&self, universe: &BasisSet) -> Result<(), ParamError> {
        for label in universe.iter() {
            if !self.growth.contains_key(&label) || !self.susceptibility.contains_key(&label) {
                return Err(ParamError::MissingSpecies { label });
            }
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ParamError {
    #[error("cannot read parameter file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parameter file record {row}: {message}")]
    Parse { row: usize, message: String },
    #[error("duplicate species {label} in parameter file")]
    Duplicate { label: Label },
    #[error("no parameters for species {label}")]
    MissingSpecies { label: Label },
}

#[derive(Deserialize)]
struct ParamRow {
    species_id: Label,
    growth_rate: f64,
    susceptibility: f64,
}

/// Parses the three-column parameter table. Lines starting with `#` are
/// comments; the header row is required.
pub fn parse_params(reader: impl Read) -> Result<GlvParams, ParamError> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut growth = BTreeMap::new();
    let mut susceptibility = BTreeMap::new();
    for (i, record) in csv_reader.deserialize::<ParamRow>().enumerate() {
        let row = record.map_err(|e| ParamError::Parse { row: i + 1, message: e.to_string() })?;
        if growth.insert(row.species_id, row.growth_rate).is_some() {
            return Err(ParamError::Duplicate { label: row.species_id });
        }
        susceptibility.insert(row.species_id, row.susceptibility);
    }
    Ok(GlvParams {
        growth,
        susceptibility,
        alpha: DEFAULT_ALPHA,
        beta: DEFAULT_BETA,
        t_star: DEFAULT_T_STAR,
    })
}

pub fn load_params(path: &Path) -> Result<GlvParams, ParamError> {
    let file = std::fs::File::open(path)
        .map_err(|source| ParamError::Io { path: path.display().to_string(), source })?;
    parse_params(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_header_and_rows() {
        let text = "# provenance note\nspecies_id,growth_rate,susceptibility\n1,0.5,-1.0\n2,-0.25,-0.5\n";
        let p = parse_params(text.as_bytes()).unwrap();
        assert_eq!(p.growth[&1], 0.5);
        assert_eq!(p.susceptibility[&2], -0.5);
        assert_eq!(p.alpha, -0.02);
        assert_eq!(p.beta, -0.1);
        assert_eq!(p.t_star, 4.0);
    }

    #[test]
    fn missing_species_is_named() {
        let text = "species_id,growth_rate,susceptibility\n1,0.5,-1.0\n";
        let p = parse_params(text.as_bytes()).unwrap();
        let universe: BasisSet = [1u32, 11].into_iter().collect();
        match p.ensure_covers(&universe) {
            Err(ParamError::MissingSpecies { label }) => assert_eq!(label, 11),
            other => panic!("expected missing species 11, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_and_malformed_rows_error() {
        let dup = "species_id,growth_rate,susceptibility\n1,0.5,-1.0\n1,0.6,-1.1\n";
        assert!(matches!(
            parse_params(dup.as_bytes()),
            Err(ParamError::Duplicate { label: 1 })
        ));
        let bad = "species_id,growth_rate,susceptibility\n1,fast,-1.0\n";
        assert!(matches!(parse_params(bad.as_bytes()), Err(ParamError::Parse { row: 1, .. })));
    }
}
