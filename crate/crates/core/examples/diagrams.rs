//! Skew diagrams, contents, tableaux, Gelfand–Zetlin schemes and the
//! Littlewood–Richardson expansion.

use yangtensor::diagrams::{
    column_bottom_contents, enumerate_gz_schemes, enumerate_ssyt, lr_expand, make_skew, row_tableau_contents,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = make_skew(&[5, 5, 3, 2, 0, -2], &[3, 2, 2, 1], 2)?;
    println!("{} boxes: {:?}", d.len(), d.boxes());
    println!("contents in row-reading order: {:?}", row_tableau_contents(&d));
    for k in 1..=d.n() {
        println!("bottom contents of height-{k} columns: {:?}", column_bottom_contents(&d, k));
    }
    let ssyt = enumerate_ssyt(&d).len();
    let gz = enumerate_gz_schemes(d.lambda(), d.mu(), d.n())?.len();
    println!("semistandard tableaux: {ssyt}, schemes: {gz}");

    println!("(2,1) x (1,1) for gl_3:");
    for (gamma, mult) in lr_expand(&[2, 1], &[1, 1], 3) {
        println!("  {gamma:?} with multiplicity {mult}");
    }
    Ok(())
}
