//! Times certified searches over a range: `cargo run --release --example sweep -- cyclic 1 64`.

use std::time::Instant;

use diffbase::{min_difference_basis, GroupKind, GroupSpec, SearchConfig};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let kind: GroupKind = args.get(1).map_or("cyclic", String::as_str).parse().unwrap();
    let lo: u32 = args.get(2).map_or(1, |s| s.parse().unwrap());
    let hi: u32 = args.get(3).map_or(lo, |s| s.parse().unwrap());
    let total = Instant::now();
    for n in lo..=hi {
        let spec = GroupSpec::new(kind, n).unwrap();
        let cfg = SearchConfig::for_spec(spec);
        let out = min_difference_basis(spec, &cfg).unwrap();
        println!(
            "{spec:>8} delta={:<3} certified={} nodes={:<12} {:.2?} {}",
            out.delta, out.certified, out.nodes_expanded, out.wall_time, out.witness
        );
    }
    eprintln!("total {:.2?}", total.elapsed());
}
