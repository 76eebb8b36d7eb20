//! Job and ideal files (TOML, schema 1).

use serde::Deserialize;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub schema: u32,
    pub name: Option<String>,
    /// `q` or `Fp:PRIME`; the command line flag wins.
    pub field: Option<String>,
    pub order: Option<String>,
    pub variables: Vec<String>,
    #[serde(default)]
    pub parameters: Vec<String>,
    /// Row-major entries; rows >= cols.
    pub matrix: Vec<Vec<String>>,
    pub minor_size: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub q: Option<usize>,
    /// Exponents of a monomial parameterization `x_v = t^{w_v}` of a curve.
    pub weights: Option<Vec<u64>>,
    pub germ: Option<String>,
    pub seed: Option<u64>,
    pub second_seed: Option<u64>,
    pub family: Option<FamilySection>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySection {
    pub parameter: String,
    pub smoothing: Option<String>,
    /// `smoothing` or `test`.
    pub role: Option<String>,
    /// Column combination for the relative polar, one row per fiber variable.
    pub combination: Option<Vec<Vec<i64>>>,
    pub chi_slice: Option<i64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub schema: u32,
    pub name: Option<String>,
    pub field: Option<String>,
    pub order: Option<String>,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub saturate_by: Option<Vec<String>>,
    pub colon_by: Option<Vec<String>>,
}

fn check_schema(v: u32) -> Result<(), String> {
    if v != SCHEMA {
        return Err(format!("unsupported schema version {v}, expected {SCHEMA}"));
    }
    Ok(())
}

pub fn parse_job(text: &str) -> Result<JobFile, String> {
    let job: JobFile = toml::from_str(text).map_err(|e| e.to_string())?;
    check_schema(job.schema)?;
    if job.matrix.is_empty() || job.matrix[0].is_empty() {
        return Err("matrix is empty".into());
    }
    let cols = job.matrix[0].len();
    if job.matrix.iter().any(|r| r.len() != cols) {
        return Err("matrix rows have different lengths".into());
    }
    if job.matrix.len() < cols {
        return Err(format!("matrix has {} rows and {cols} columns; rows >= cols is required", job.matrix.len()));
    }
    let mut seen = std::collections::HashSet::new();
    for v in job.variables.iter().chain(&job.parameters) {
        if !seen.insert(v) {
            return Err(format!("variable `{v}` declared twice"));
        }
    }
    Ok(job)
}

pub fn parse_ideal(text: &str) -> Result<IdealFile, String> {
    let file: IdealFile = toml::from_str(text).map_err(|e| e.to_string())?;
    check_schema(file.schema)?;
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_job() {
        let j = parse_job("schema = 1\nvariables = [\"x\", \"y\"]\nmatrix = [[\"x\"], [\"y\"]]\n").unwrap();
        assert_eq!(j.matrix.len(), 2);
        assert!(j.family.is_none());
    }

    #[test]
    fn rejects_bad_jobs() {
        assert!(parse_job("schema = 2\nvariables = []\nmatrix = [[\"x\"]]").is_err());
        assert!(parse_job("schema = 1\nvariables = [\"x\"]\nmatrix = [[\"x\", \"x\"]]").is_err());
        assert!(parse_job("schema = 1\nvariables = [\"x\", \"x\"]\nmatrix = [[\"x\"]]").is_err());
        assert!(parse_job("schema = 1\nvariables = [\"x\"]\nmatrix = [[\"x\"]]\nbogus = 3").is_err());
        let e = parse_job("schema = 1\nvariables = [\"x\"\nmatrix = [[\"x\"]]").unwrap_err();
        assert!(e.contains("line"), "{e}");
    }
}
