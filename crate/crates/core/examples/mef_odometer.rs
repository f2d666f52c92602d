// The rank-2 odometer construction: p/q recursion, word lengths and
// odometer digits of positions, including negative ones.

use std::error::Error;

use num_bigint::BigInt;
use symrank::transforms::{mef_construction, mef_digits, MefParams};

pub fn run() -> Result<(), Box<dyn Error>> {
    let params = MefParams::new(vec![8, 26, 90]);
    for (i, (p, q)) in MefParams::pq(3).iter().enumerate() {
        println!("p_{i} = {p}, q_{i} = {q}");
    }
    let c = mef_construction(&params, 3, 1)?;
    let mut e = c.expander(1 << 24);
    for i in 1..=3 {
        println!("level {i} lengths {:?}", e.level_lengths(i)?);
    }
    for k in [-3i64, 0, 7, 8, 1000] {
        let digits: Vec<u64> = (0..3)
            .map(|i| mef_digits(&params, &BigInt::from(k), i))
            .collect::<Result<_, _>>()?;
        println!("position {k}: digits {digits:?}");
    }
    if let Err(e) = MefParams::new(vec![7]).check(1, 1) {
        println!("a_1 = 7 rejected: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
