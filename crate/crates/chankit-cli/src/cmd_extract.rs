//! `chankit extract`: sweep files to MPC list files.

use std::path::{Path, PathBuf};

use anyhow::{bail, Result};
use chankit_core::{extract_padp_opts, parse_sweep, write_mpcs};

use crate::fsutil::{read_text, write_atomic};
use crate::ExtractFlags;

pub fn run(files: &[PathBuf], out_dir: &Path, flags: &ExtractFlags) -> Result<()> {
    let params = flags.correction();
    let opts = flags.options();
    let mut failures = 0usize;
    for file in files {
        match read_text(file).and_then(|text| Ok(parse_sweep(&text)?)) {
            Ok(rec) => {
                let padp = extract_padp_opts(&rec, &params, &opts);
                log::info!("{}: {} MPCs", rec.meta.link_id, padp.mpcs.len());
                let out = out_dir.join(format!("{}.mpc.csv", rec.meta.link_id));
                write_atomic(&out, &write_mpcs(&padp))?;
            }
            Err(e) => {
                log::warn!("skipping {}: {e:#}", file.display());
                failures += 1;
            }
        }
    }
    if failures > 0 {
        bail!("{failures} of {} sweep file(s) could not be processed", files.len());
    }
    Ok(())
}
