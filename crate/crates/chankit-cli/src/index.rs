//! Campaign index: the file listing every sweep of a measurement campaign
//! with its link metadata summary.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use chankit_core::Scenario;

pub const INDEX_CSV_HEADER: &str = "sweep_file,link_id,distance_m,scenario";
pub const INDEX_FILE_NAME: &str = "index.csv";

#[derive(Debug, Clone)]
pub struct IndexEntry {
    pub sweep_file: String,
    pub link_id: String,
    pub distance_m: f64,
    pub scenario: Scenario,
}

#[derive(Debug, Clone, Default)]
pub struct CampaignIndex {
    pub entries: Vec<IndexEntry>,
}

impl CampaignIndex {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(INDEX_CSV_HEADER);
        out.push('\n');
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{}\n",
                e.sweep_file,
                e.link_id,
                e.distance_m,
                e.scenario.as_str()
            ));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next() {
            Some(h) if h.trim() == INDEX_CSV_HEADER => {}
            other => bail!("bad index header: {other:?}"),
        }
        let mut entries = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split(',').collect();
            if cols.len() != 4 {
                bail!("index line {}: expected 4 columns, got {}", i + 2, cols.len());
            }
            entries.push(IndexEntry {
                sweep_file: cols[0].to_string(),
                link_id: cols[1].to_string(),
                distance_m: cols[2].parse().with_context(|| format!("index line {}", i + 2))?,
                scenario: Scenario::parse(cols[3]).map_err(|e| anyhow::anyhow!("index line {}: {e}", i + 2))?,
            });
        }
        let idx = CampaignIndex { entries };
        idx.validate(None)?;
        Ok(idx)
    }

    /// Unique link ids; referenced files must exist when a base dir is given.
    pub fn validate(&self, base_dir: Option<&Path>) -> Result<()> {
        for (i, a) in self.entries.iter().enumerate() {
            for b in self.entries.iter().skip(i + 1) {
                if a.link_id == b.link_id {
                    bail!("duplicate link_id {:?} in index", a.link_id);
                }
            }
        }
        if let Some(dir) = base_dir {
            for e in &self.entries {
                let p = dir.join(&e.sweep_file);
                if !p.exists() {
                    bail!("index references missing file {}", p.display());
                }
            }
        }
        Ok(())
    }

    pub fn load(dir: &Path) -> Result<Self> {
        let path = dir.join(INDEX_FILE_NAME);
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading campaign index {}", path.display()))?;
        let idx = Self::parse(&text)?;
        idx.validate(Some(dir))?;
        Ok(idx)
    }

    pub fn scenario_of(&self, link_id: &str) -> Option<Scenario> {
        self.entries.iter().find(|e| e.link_id == link_id).map(|e| e.scenario)
    }

    pub fn sweep_paths(&self, dir: &Path) -> Vec<(PathBuf, &IndexEntry)> {
        self.entries.iter().map(|e| (dir.join(&e.sweep_file), e)).collect()
    }
}
