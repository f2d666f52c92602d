// Walks the gallery: spacer statistics, rank bounds, minimality, and
// language distances between entries.

use std::error::Error;

use symrank::construction::{language_profile, minimality_verdict, rank_bounds, spacer_stats};
use symrank::transforms::{gallery, verify_cyclic_partition};
use symrank::words::d_l;

pub fn run() -> Result<(), Box<dyn Error>> {
    let names = ["chacon", "chacon_like(2)", "zero_spacer", "prop_6_10", "prop_6_11(2)"];
    let mut profiles = Vec::new();
    for name in names {
        let c = gallery(name)?;
        let depth = c.max_level().unwrap_or(6).min(6);
        let s = spacer_stats(&c, depth)?;
        let b = rank_bounds(&c, depth)?;
        let m = minimality_verdict(&c, depth)?;
        println!(
            "{name}: spacers {:?} (certified {}), rank <= {}, minimality {:?}",
            s.per_step,
            s.certified,
            b.upper_a.min(b.upper_b),
            m.verdict
        );
        profiles.push(language_profile(&c, 8, 12)?);
    }
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            match d_l(&profiles[i], &profiles[j], 8) {
                Ok(d) => println!("{} vs {}: {d}", names[i], names[j]),
                Err(e) => println!("{} vs {}: {e}", names[i], names[j]),
            }
        }
    }
    let p = verify_cyclic_partition(2, 5)?;
    println!(
        "cyclic partition k=2: {} words checked, pass {}",
        p.words_checked,
        p.pass()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
