// Sliding block codes on windows and on whole constructions.

use std::error::Error;

use symrank::construction::language_profile;
use symrank::parsing::WindowContext;
use symrank::transforms::{apply_code, factor_construction, gallery, FactorOptions, SlidingBlockCode};
use symrank::words::d_l;

pub fn run() -> Result<(), Box<dyn Error>> {
    let ctx = WindowContext::new("00100".parse()?, 0)?;
    let m = apply_code(&ctx, &SlidingBlockCode::majority3())?;
    println!("majority3(00100) = {} at origin {}", m.word, m.origin);

    let c = gallery("chacon")?;
    let f = factor_construction(&c, &SlidingBlockCode::bit_flip(), FactorOptions::default())?;
    println!("bit-flip factor: start level {}, sizes {:?}", f.start_level, f.sizes);
    let a = language_profile(&c, 8, 12)?;
    let b = language_profile(&f.construction, 8, f.construction.steps.len())?;
    println!("distance to Chacón: {}", d_l(&a, &b, 8)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
