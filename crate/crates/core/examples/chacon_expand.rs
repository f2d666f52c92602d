// Expands the Chacón construction, first materializing words and then
// reading exact lengths of levels far too long to build.

use std::error::Error;

use symrank::construction::{ExpandMode, Expansion};
use symrank::transforms::gallery;

pub fn run() -> Result<(), Box<dyn Error>> {
    let c = gallery("chacon")?;
    for level in 0..=3 {
        println!("v_{{{level},1}} = {}", c.expand(level, 1)?);
    }
    let mut e = c.expander(1 << 20);
    for level in [10, 40, 100] {
        match e.expand(level, 1, ExpandMode::LengthOnly)? {
            Expansion::Length(n) => println!("|v_{{{level},1}}| = {n}"),
            Expansion::Word(w) => println!("|v_{{{level},1}}| = {}", w.len()),
        }
    }
    assert_eq!(c.expand(2, 1)?.to_string(), "0010001010010");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
