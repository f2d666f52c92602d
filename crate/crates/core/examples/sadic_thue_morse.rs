// S-adic directive sequences: the Thue-Morse substitution, its language,
// and a rank-2 construction from a telescoped copy.

use std::error::Error;

use symrank::sadic::{language_level, primitivity_probe, to_rank_construction, DirectiveSequence};

pub fn run() -> Result<(), Box<dyn Error>> {
    let tm = DirectiveSequence::thue_morse();
    println!("primitivity: {:?}", primitivity_probe(&tm, 0, 4)?);
    let lang = language_level(&tm, 0, 3, 6, 1 << 20)?;
    println!("length-3 words of the Thue-Morse language: {}", lang.members.len());

    // τ^4 has images of length 16, enough for the level-1 length bound
    let deep = tm.telescope(&[0, 4, 8, 12], 1 << 20)?;
    let conv = to_rank_construction(&deep, 2, 3, true)?;
    let lens = conv.construction.expander(1 << 20).level_lengths(1)?;
    println!("level-1 word lengths {lens:?}");
    println!("v_{{1,1}} = {}", conv.construction.expand(1, 1)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
