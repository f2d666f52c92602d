// Goodness and unique readability: Chacón's levels are good and every
// window has at most one reading, while {"00", "000"} is neither.

use std::error::Error;

use symrank::construction::{check_good, check_good_words, AffixMode};
use symrank::parsing::{parse_window, parse_window_words, unique_readability_probe, ProbeOutcome, WindowContext};
use symrank::transforms::gallery;
use symrank::Word;

pub fn run() -> Result<(), Box<dyn Error>> {
    let c = gallery("chacon")?;
    println!("chacon level 2 good: {}", check_good(&c, 2, AffixMode::AllowFull)?.good);

    let ctx = WindowContext::new("0010001010010".parse()?, 0)?;
    let r = parse_window(&ctx, &c, 1, 4)?;
    println!("readings of v_2 through level 1: {}", r.candidates.len());
    for layer in &r.candidates[0].layers {
        let marks: Vec<i64> = layer.marks.iter().map(|m| m.0).collect();
        println!("  level {} marks at {marks:?}", layer.level);
    }

    match unique_readability_probe(&c, 2, 40, usize::MAX, None)? {
        ProbeOutcome::NoViolation { windows_checked, .. } => println!("probe: {windows_checked} windows, all unique"),
        ProbeOutcome::Counterexample { window, .. } => println!("probe: {window} has two readings"),
    }

    let bad: Vec<Word> = vec!["00".parse()?, "000".parse()?];
    println!(
        "{{00, 000}} good: {}",
        check_good_words(&bad, AffixMode::AllowFull).good
    );
    let zero = vec![Word::zeros(1)];
    let window = WindowContext::new("00000".parse()?, 0)?;
    let r = parse_window_words(&window, &[zero, bad], 8)?;
    println!("readings of 00000 over {{00, 000}}: {}", r.candidates.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
