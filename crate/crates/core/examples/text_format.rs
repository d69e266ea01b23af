// The text format: parse, canonicalize and run a command over a file.

use ainfty::io::{parse, run_document, Command};

const INPUT: &str = "\
# a two-step decomposition of an acyclic complex
complex Pt dim 1
decomp D
piece Pt
piece Pt
u   1
complex C   dim 2
d 00
d 10
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let doc = parse(INPUT)?;
    print!("{}", doc.canonical());
    for cmd in [Command::CheckComplex, Command::ConeDecomp] {
        let out = run_document(cmd, &doc, &[]);
        for r in &out.reports {
            print!("{}", r.render());
        }
        assert_eq!(out.exit, 0);
    }
    match parse("complex C dim 2\nd 0\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("short row should be rejected".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
