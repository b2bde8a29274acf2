use std::time::Instant;

use isoregion::{enumerate_projections, CensusConfig};

fn main() {
    let t0 = Instant::now();
    let knots = enumerate_projections(&CensusConfig::new(5).dedup(true).knots_only(true)).unwrap();
    println!("dedup knots c<=5: {} classes in {:?}", knots.len(), t0.elapsed());

    let t1 = Instant::now();
    let all = enumerate_projections(&CensusConfig::new(5).dedup(true)).unwrap();
    println!("dedup all c<=5: {} classes in {:?}", all.len(), t1.elapsed());

    let t2 = Instant::now();
    let c4 = enumerate_projections(&CensusConfig::new(4).dedup(true)).unwrap();
    println!("dedup all c<=4: {} classes in {:?}", c4.len(), t2.elapsed());
}
