// Index of a profile of entry and exit indices, and its case.

use ainfty::cone_calc::{classify_index, fredholm_index, MorseIndexProfile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (entries, exit) in [(vec![1], 1), (vec![1, 1, 1], 1), (vec![0, 1], 0), (vec![1, 1], 0), (vec![0, 0, 1], 1)] {
        let p = MorseIndexProfile::new(entries.clone(), exit).ok_or("indices must be 0 or 1")?;
        let case = classify_index(&p);
        let ind = fredholm_index(&p);
        println!("entries {entries:?} exit {exit}: index {ind} ({case:?})");
        assert_eq!(ind.signum(), case.index_sign());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
