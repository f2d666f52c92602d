// Ordered Bratteli diagrams: tower heights, the Vershik map on an odometer,
// and conversion of a two-vertex diagram into a rank-2 construction.

use std::error::Error;

use symrank::bratteli::{min_path, to_rank_construction, vershik_orbit, OrderedBratteliDiagram};

pub fn run() -> Result<(), Box<dyn Error>> {
    let odo = OrderedBratteliDiagram::odometer(&[2, 3]);
    let start = min_path(&odo, 2, 1)?;
    let orbit = vershik_orbit(&odo, &start, 12)?;
    println!("odometer (2,3) orbit length before return: {}", orbit.len());

    // level 1 long enough for rank 2, then two levels with common extremal edges
    let d = OrderedBratteliDiagram::new(vec![
        vec![vec![1; 30], vec![1; 31]],
        vec![vec![1, 2, 2, 1], vec![1, 1, 2, 1]],
        vec![vec![1, 2, 1], vec![1, 1, 2, 2, 1]],
    ]);
    d.validated()?;
    println!("heights at level 3: {:?}", d.heights(3)?);
    let conv = to_rank_construction(&d, 2)?;
    for i in 1..=3 {
        let lens = conv.construction.expander(1 << 20).level_lengths(i)?;
        println!(
            "level {i} word lengths {lens:?}, vertex order {:?}",
            conv.vertex_order[i]
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
