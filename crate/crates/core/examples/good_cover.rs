// Builds a proper, good cover of the Chacón construction and checks it.

use std::error::Error;

use symrank::construction::{check_good, check_proper, AffixMode};
use symrank::transforms::{gallery, good_cover, CoverOptions};

pub fn run() -> Result<(), Box<dyn Error>> {
    let c = gallery("chacon")?;
    let g = good_cover(&c, CoverOptions::default())?;
    println!(
        "source levels {:?}, k0 = {}, m = {:?}",
        g.trace.indices, g.trace.k0, g.trace.m
    );
    println!(
        "cover level-1 lengths {:?}",
        g.cover.expander(1 << 24).level_lengths(1)?
    );
    println!("proper: {}", check_proper(&g.cover, g.cover.steps.len())?.proper);
    for level in 1..=2 {
        println!(
            "good at level {level}: {}",
            check_good(&g.cover, level, AffixMode::AllowFull)?.good
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
