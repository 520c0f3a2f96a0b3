use std::io::{self, Write};

use super::{SweepConfig, SweepRecord};
use crate::states::PRNG_NAME;

pub const CSV_HEADER: &str =
    "index,seed,k,t,q,c,l,identity_residual,ppt_min_eig,theta_a,phi_a,theta_b,phi_b";

const SIG_DIGITS: usize = 12;

/// Formats a real with 12 significant digits, like C's `%.12g`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIG_DIGITS as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    } else {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_csv_header<W: Write>(out: &mut W, cfg: &SweepConfig) -> io::Result<()> {
    writeln!(out, "# tool=dissonance-core {}", env!("CARGO_PKG_VERSION"))?;
    writeln!(out, "# prng={PRNG_NAME}")?;
    writeln!(
        out,
        "# seed_mixing=splitmix64(master_seed ^ splitmix64(index))"
    )?;
    writeln!(
        out,
        "# config n={} master_seed={} k_min={} k_max={} grid_n={} refine={} include_bell_diagonal={} append_counterexample={}",
        cfg.n,
        cfg.master_seed,
        cfg.k_min,
        cfg.k_max,
        cfg.grid_n,
        cfg.refine,
        cfg.include_bell_diagonal,
        cfg.append_counterexample
    )?;
    writeln!(out, "{CSV_HEADER}")
}

pub fn write_csv_record<W: Write>(out: &mut W, r: &SweepRecord) -> io::Result<()> {
    let reals = [
        r.t,
        r.q,
        r.c,
        r.l,
        r.identity_residual,
        r.ppt_min_eig,
        r.theta_a,
        r.phi_a,
        r.theta_b,
        r.phi_b,
    ];
    write!(out, "{},{},{}", r.index, r.seed, r.k)?;
    for x in reals {
        write!(out, ",{}", format_real(x))?;
    }
    writeln!(out)
}
