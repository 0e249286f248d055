//! Parsed elimination jobs and their reports.

use std::time::Instant;

use ore_elim::{
    parse_bivar, parse_field, res_x2_direct, res_x2_modular, Automorphism, BivarOrePoly, DetResult,
    FieldCtx,
};
use serde::Serialize;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Direct,
    Modular,
    Both,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub field: FieldCtx,
    pub sigma1: Automorphism,
    pub sigma2: Automorphism,
    pub f: BivarOrePoly,
    pub g: BivarOrePoly,
    pub method: Method,
}

/// The field and its two Frobenius twists.
pub fn parse_ring(
    field: &str,
    sigma1: u32,
    sigma2: u32,
) -> Result<(FieldCtx, Automorphism, Automorphism), CliError> {
    let ctx = parse_field(field).map_err(CliError::input("--field"))?;
    let s1 = Automorphism::frobenius(&ctx, sigma1).map_err(CliError::input("--sigma1"))?;
    let s2 = Automorphism::frobenius(&ctx, sigma2).map_err(CliError::input("--sigma2"))?;
    Ok((ctx, s1, s2))
}

impl JobSpec {
    pub fn parse(
        field: &str,
        sigma1: u32,
        sigma2: u32,
        f: &str,
        g: &str,
        method: Method,
    ) -> Result<Self, CliError> {
        let (ctx, s1, s2) = parse_ring(field, sigma1, sigma2)?;
        let f = parse_bivar(f, &ctx, s1, s2).map_err(CliError::input("--f"))?;
        let g = parse_bivar(g, &ctx, s1, s2).map_err(CliError::input("--g"))?;
        Ok(JobSpec {
            field: ctx,
            sigma1: s1,
            sigma2: s2,
            f,
            g,
            method,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MethodResult {
    pub method: &'static str,
    /// Raw representative in `x1`.
    pub eliminant: String,
    /// Representative scaled to leading coefficient one.
    pub monic: String,
    pub degree: Option<usize>,
    pub is_zero: bool,
    pub micros: u128,
    /// Packed coefficients of the raw representative, constant first.
    pub coeffs: Vec<u64>,
}

impl MethodResult {
    fn new(method: &'static str, det: &DetResult, micros: u128) -> Self {
        MethodResult {
            method,
            eliminant: det.rep.display_with("x1").to_string(),
            monic: det.monic_rep().display_with("x1").to_string(),
            degree: det.degree,
            is_zero: det.is_zero,
            micros,
            coeffs: det.rep.coeffs().iter().map(|c| c.index()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub field: String,
    pub sigma1: u32,
    pub sigma2: u32,
    pub f: String,
    pub g: String,
    pub results: Vec<MethodResult>,
    /// Coefficient equality of the two representatives (both methods only).
    pub agree: Option<bool>,
}

pub fn cmd_eliminate(job: &JobSpec) -> Result<Report, CliError> {
    let mut results = Vec::new();
    let mut reps = Vec::new();
    if job.method != Method::Modular {
        let start = Instant::now();
        let det = res_x2_direct(&job.f, &job.g)?;
        results.push(MethodResult::new(
            "direct",
            &det,
            start.elapsed().as_micros(),
        ));
        reps.push(det.rep);
    }
    if job.method != Method::Direct {
        let start = Instant::now();
        let det = res_x2_modular(&job.f, &job.g)?;
        results.push(MethodResult::new(
            "modular",
            &det,
            start.elapsed().as_micros(),
        ));
        reps.push(det.rep);
    }
    Ok(Report {
        field: job.field.to_string(),
        sigma1: job.sigma1.exponent(),
        sigma2: job.sigma2.exponent(),
        f: job.f.to_string(),
        g: job.g.to_string(),
        agree: (reps.len() == 2).then(|| reps[0] == reps[1]),
        results,
    })
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "field:   {}\nsigma1:  {}\nsigma2:  {}\nf:       {}\ng:       {}\n",
            self.field, self.sigma1, self.sigma2, self.f, self.g
        );
        for r in &self.results {
            let degree = r.degree.map_or("-".to_string(), |d| d.to_string());
            out.push_str(&format!(
                "{}:\n  eliminant: {}\n  monic:     {}\n  degree:    {}\n  is_zero:   {}\n  micros:    {}\n",
                r.method, r.eliminant, r.monic, degree, r.is_zero, r.micros
            ));
        }
        if let Some(agree) = self.agree {
            out.push_str(&format!("agree:   {agree}\n"));
        }
        out
    }
}
