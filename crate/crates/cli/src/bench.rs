//! Timing of direct against modular elimination on random inputs.

use std::io::Write;
use std::time::Instant;

use ore_elim::{res_x2_direct, res_x2_modular, Automorphism, BivarOrePoly, FieldCtx};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;

/// One CSV line; each trial contributes a direct and a modular row.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub trial: usize,
    pub method: &'static str,
    pub micros: u128,
    pub degree: Option<usize>,
    pub is_zero: bool,
    /// `ok` when the modular representative equals the direct one.
    pub verdict: &'static str,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub ctx: FieldCtx,
    pub sigma1: Automorphism,
    pub sigma2: Automorphism,
    pub trials: usize,
    pub deg_x1: usize,
    pub deg_x2: usize,
    pub seed: u64,
}

pub fn cmd_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>, CliError> {
    if cfg.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if cfg.deg_x2 == 0 {
        return Err(CliError::Usage("--deg-x2 must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rows = Vec::with_capacity(2 * cfg.trials);
    for trial in 0..cfg.trials {
        let f = BivarOrePoly::random(
            &cfg.ctx, cfg.sigma1, cfg.sigma2, cfg.deg_x1, cfg.deg_x2, &mut rng,
        );
        let g = BivarOrePoly::random(
            &cfg.ctx, cfg.sigma1, cfg.sigma2, cfg.deg_x1, cfg.deg_x2, &mut rng,
        );
        let start = Instant::now();
        let direct = res_x2_direct(&f, &g)?;
        let direct_us = start.elapsed().as_micros();
        let start = Instant::now();
        let modular = res_x2_modular(&f, &g);
        let modular_us = start.elapsed().as_micros();
        let verdict = match &modular {
            Ok(m) if m.rep == direct.rep => "ok",
            _ => "mismatch",
        };
        rows.push(BenchRow {
            trial,
            method: "direct",
            micros: direct_us,
            degree: direct.degree,
            is_zero: direct.is_zero,
            verdict,
        });
        rows.push(BenchRow {
            trial,
            method: "modular",
            micros: modular_us,
            degree: modular.as_ref().ok().and_then(|m| m.degree),
            is_zero: modular.as_ref().is_ok_and(|m| m.is_zero),
            verdict,
        });
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Median time per method, in microseconds.
pub fn medians(rows: &[BenchRow]) -> (u128, u128) {
    let median = |method: &str| {
        let mut v: Vec<u128> = rows
            .iter()
            .filter(|r| r.method == method)
            .map(|r| r.micros)
            .collect();
        v.sort_unstable();
        v.get(v.len() / 2).copied().unwrap_or(0)
    };
    (median("direct"), median("modular"))
}
