//! Reading and writing structure and map files.
//!
//! cargo run -p merotopy --example text_formats

use merotopy::format::{parse_map, parse_structure, serialize_map, serialize_structure};
use merotopy::reflection::{reflect, Algorithm};

fn main() -> merotopy::Result<()> {
    let text = "# not canonical, not wedge-closed\nn=3\ncover: 1,2;0,1;1\ncover: 0,1,2\n";
    let mu = parse_structure(text)?;
    print!("parsed:\n{}", serialize_structure(&mu));
    print!(
        "reflection:\n{}",
        serialize_structure(&reflect(&mu, Algorithm::Both)?)
    );

    let f = parse_map("n=3\nm=2\nmap: 0->0,1->1,2->1\n")?;
    print!("map:\n{}", serialize_map(&f));

    if let Err(e) = parse_structure("n=2\ncover: 0;5\n") {
        println!("rejected: {e}");
    }
    Ok(())
}
