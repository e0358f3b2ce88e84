//! Oracle run behind the frozen regression windows in `lab::windows`.
//!
//! `cargo run --release --example measure_windows`

use std::time::Instant;

use divisum::constants::{linnik_constant, ramanujan_a1};
use divisum::lab::{log_log, Family, Lab, LabConfig, SetId};

fn main() -> divisum::Result<()> {
    let lab = Lab::new(LabConfig::default())?;

    let t = Instant::now();
    let grid = [10_000, 100_000, 1_000_000, 10_000_000];
    let counts = lab.census_scan(&grid)?;
    for c in &counts {
        println!(
            "census x={} b1={} b2={} b3={} sqf={} | dens b1={:.6} b2={:.6} b3={:.6} | sqf dev/sqrt(x)={:.6}",
            c.x,
            c.b1,
            c.b2,
            c.b3,
            c.squarefree,
            c.density(SetId::B1),
            c.density(SetId::B2),
            c.density(SetId::B3),
            c.squarefree_deviation()
        );
    }
    println!("  [{:.1?}]", t.elapsed());

    let t = Instant::now();
    let tgrid = [1_000, 10_000, 100_000, 1_000_000, 10_000_000];
    for r in lab.turan_scan(&tgrid)? {
        println!("turan N={} var={} ratio={:.6}", r.n, r.variance_sum, r.ratio);
    }
    println!("  [{:.1?}]", t.elapsed());

    let t = Instant::now();
    let rgrid = [10_000, 100_000, 1_000_000, 10_000_000, 100_000_000];
    for r in lab.c3_diagnostic(&rgrid)? {
        println!("R x={} S={} R={:.6}", r.x, r.sum, r.ratio);
    }
    println!("  [{:.1?}]", t.elapsed());

    let t = Instant::now();
    let parts = lab.census_scan(&rgrid)?;
    for c in &parts {
        println!("partition x={} b1={} b2_only={} rest={} total={}", c.x, c.b1, c.b2_only, c.rest, c.partition_total());
    }
    println!("  [{:.1?}]", t.elapsed());

    let t = Instant::now();
    let x = 10_000_000u64;
    let tm = lab.accumulate(Family::Titchmarsh, x, &[x])?;
    let linnik = linnik_constant(1e-9)?.value;
    let raw = tm.checkpoints[0].value / x as f64;
    println!("titchmarsh x={x} sum/x={raw:.6} linnik={linnik:.9} ratio={:.6}", raw / linnik);

    let rd = lab.accumulate(Family::RecipD, x, &[x])?;
    let q = rd.checkpoints[0].value * (x as f64).ln().sqrt() / x as f64;
    let a1 = ramanujan_a1(1e-9)?;
    println!("recip_d x={x} S*sqrt(log x)/x={q:.6} A1={:.9} (err {:e}) A1/q={:.6}", a1.value, a1.abs_error, a1.value / q);
    println!("  [{:.1?}]", t.elapsed());
    println!("loglog(1e7)={:.6}", log_log(x));
    Ok(())
}
