//! Cost surveys over word families, written as CSV.

use std::path::Path;

use super::gen::FamilyKind;
use super::HarnessError;
use crate::filling::alg5_fill;
use crate::word::Word;

pub const CSV_HEADER: [&str; 7] = ["family", "seed", "n", "k", "cost", "bound", "len_final"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRecord {
    pub family: String,
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub cost: u64,
    pub bound: u128,
    pub len_final: usize,
}

/// Fills `w`, replays the trace, and records the outcome.
pub fn measure(family: &str, seed: u64, w: &Word) -> Result<SurveyRecord, HarnessError> {
    let report = alg5_fill(w, None)?;
    let replay = report.trace.validate()?;
    Ok(SurveyRecord {
        family: family.to_string(),
        seed,
        n: report.n,
        k: report.k,
        cost: replay.cost,
        bound: report.bound,
        len_final: replay.end.len(),
    })
}

/// Target lengths `n_min, 2n_min, 4n_min, …` not exceeding `n_max`.
pub fn geometric_grid(n_min: usize, n_max: usize) -> Vec<usize> {
    let mut grid = Vec::new();
    let mut n = n_min;
    while n <= n_max {
        grid.push(n);
        n *= 2;
    }
    grid
}

pub fn survey_records(
    family: FamilyKind,
    n_min: usize,
    n_max: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<SurveyRecord>, HarnessError> {
    if n_min < 8 {
        return Err(HarnessError::InvalidArgument(format!(
            "n_min must be at least 8, got {n_min}"
        )));
    }
    let mut rows = Vec::new();
    for target in geometric_grid(n_min, n_max) {
        for j in 0..samples {
            let s = seed.wrapping_add(j as u64);
            let w = family.word_for_length(target, s);
            rows.push(measure(family.name(), s, &w)?);
        }
    }
    Ok(rows)
}

pub fn write_csv(rows: &[SurveyRecord], out_path: &Path) -> Result<(), HarnessError> {
    let io = |e: csv::Error| HarnessError::Csv {
        path: out_path.display().to_string(),
        source: e,
    };
    let mut writer = csv::Writer::from_path(out_path).map_err(io)?;
    writer.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        writer
            .write_record([
                r.family.clone(),
                r.seed.to_string(),
                r.n.to_string(),
                r.k.to_string(),
                r.cost.to_string(),
                r.bound.to_string(),
                r.len_final.to_string(),
            ])
            .map_err(io)?;
    }
    writer.flush().map_err(|e| HarnessError::Io {
        path: out_path.display().to_string(),
        source: e,
    })
}

pub fn read_csv(path: &Path) -> Result<Vec<SurveyRecord>, HarnessError> {
    let err = |e: csv::Error| HarnessError::Csv {
        path: path.display().to_string(),
        source: e,
    };
    let mut reader = csv::Reader::from_path(path).map_err(err)?;
    let bad = |line: usize, what: &str| HarnessError::Malformed {
        path: path.display().to_string(),
        reason: format!("record {line}: bad {what}"),
    };
    let mut rows = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(err)?;
        let field = |j: usize| rec.get(j).unwrap_or("");
        rows.push(SurveyRecord {
            family: field(0).to_string(),
            seed: field(1).parse().map_err(|_| bad(i + 1, "seed"))?,
            n: field(2).parse().map_err(|_| bad(i + 1, "n"))?,
            k: field(3).parse().map_err(|_| bad(i + 1, "k"))?,
            cost: field(4).parse().map_err(|_| bad(i + 1, "cost"))?,
            bound: field(5).parse().map_err(|_| bad(i + 1, "bound"))?,
            len_final: field(6).parse().map_err(|_| bad(i + 1, "len_final"))?,
        });
    }
    Ok(rows)
}

pub fn run_survey(
    family: &str,
    n_min: usize,
    n_max: usize,
    samples: usize,
    seed: u64,
    out_path: &Path,
) -> Result<Vec<SurveyRecord>, HarnessError> {
    let rows = survey_records(FamilyKind::parse(family)?, n_min, n_max, samples, seed)?;
    write_csv(&rows, out_path)?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid() {
        assert_eq!(geometric_grid(8, 64), vec![8, 16, 32, 64]);
        assert_eq!(geometric_grid(8, 100), vec![8, 16, 32, 64]);
        assert!(geometric_grid(16, 8).is_empty());
    }

    #[test]
    fn small_survey_rows_are_certified() {
        for family in FamilyKind::ALL {
            let rows = survey_records(family, 8, 32, 2, 1).unwrap();
            assert_eq!(rows.len(), 6);
            for r in rows {
                assert!((r.cost as u128) <= r.bound || r.n < 4, "{r:?}");
                assert_eq!(r.len_final, 0);
            }
        }
        assert!(survey_records(FamilyKind::Hnn, 4, 32, 1, 0).is_err());
    }
}
