//! Generates a benchmark class and prints it in the instance file format.
//!
//! `cargo run --example generate_class -- 4 6 H+2 7 3`

use ubrp::instances::{make_class, parse_instance, write_instance, GeneratorParams, HeightPolicy};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let h: usize = arg(0, "3").parse().expect("height");
    let w: usize = arg(1, "4").parse().expect("width");
    let policy: HeightPolicy = arg(2, "unlimited").parse().expect("policy");
    let seed: u64 = arg(3, "1").parse().expect("seed");
    let count: usize = arg(4, "2").parse().expect("count");

    let params = GeneratorParams::new(h, w, policy, seed, count);
    for (i, inst) in make_class(&params).iter().enumerate() {
        let text = write_instance(inst);
        assert_eq!(&parse_instance(&text).unwrap(), inst.as_ref());
        println!("# {policy} class {h}x{w}, seed {seed}, instance {}", i + 1);
        print!("{text}");
    }
}
