//! Re-derives the searched seed pairs shipped in `data/seeds/`.
//!
//! `cargo run --release -p compset --example derive_seeds -- <q> <len>...`

use std::time::Instant;

use compset::algebra::Alphabet;
use compset::format::to_text;
use compset::search::{search_gcp, SearchOptions};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer arguments"))
        .collect();
    let (q, lengths) = args
        .split_first()
        .expect("usage: derive_seeds <q> <len>...");
    let alphabet = Alphabet::new(*q as u32).expect("q >= 1");
    for &len in lengths {
        let start = Instant::now();
        let opts = SearchOptions {
            limit: Some(1),
            work_bound: u64::MAX,
        };
        let out = search_gcp(alphabet, len, opts).expect("unbounded search");
        eprintln!(
            "q={q} len={len}: {} classes, {} nodes, {:.1?}",
            out.total,
            out.nodes,
            start.elapsed()
        );
        if let Some(first) = out.results.first() {
            print!("{}", to_text(first, Some("derived-search")).unwrap());
        }
    }
}
