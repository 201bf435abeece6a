//! The tensor file format: a JSON document with the dimension `n`, an
//! optional `metric` (identity when absent), and the full `R` array of
//! `[re, im]` pairs indexed `[i][j][k][l]`. Loading validates symmetries and
//! finiteness; saving is canonical, so emit → load → re-emit is the identity
//! on bytes. Bundle inputs for the projectivized-bundle engine use the same
//! conventions.
//!
//! Run with: cargo run -p ricperp --example tensor_files

use ricperp::io::{bundle_input_from_json, bundle_input_to_json, TensorDocument};
use ricperp::models::{self, SplitBundleModel};
use ricperp::projbundle::ProjBundleInput;

fn main() -> ricperp::Result<()> {
    let dir = std::env::temp_dir();

    // Save a model tensor and read it back.
    let (tensor, _) = models::fubini_study(2)?;
    let path = dir.join("ricperp_example_fs2.json");
    let doc = TensorDocument::new(tensor, None);
    doc.save(&path)?;
    println!("wrote {}", path.display());

    let reloaded = TensorDocument::load(&path)?;
    println!(
        "reloaded: n = {}, metric stored = {}",
        reloaded.tensor.n(),
        reloaded.metric.is_some()
    );

    // Round trip is byte-identical.
    let first = doc.to_json_string();
    let second = reloaded.to_json_string();
    println!("emit → load → re-emit byte-identical: {}", first == second);
    println!("document size: {} bytes", first.len());

    // Validation on load: flipping one entry of R breaks the Hermitian
    // pairing symmetry and the file is rejected.
    let mut corrupted: serde_json::Value = serde_json::from_str(&first).expect("valid json");
    corrupted["R"][0][0][0][1][0] = serde_json::json!(3.25);
    match TensorDocument::from_json_str(&corrupted.to_string()) {
        Err(e) => println!("corrupted file rejected: {e}"),
        Ok(_) => println!("BUG: corrupted file was accepted"),
    }

    // Bundle inputs round-trip the same way.
    let model = SplitBundleModel::new(2, vec![0.0, -1.0])?;
    let input = ProjBundleInput::from_split_bundle(&model, 0, 12.0)?;
    let text = bundle_input_to_json(&input);
    let back = bundle_input_from_json(&text)?;
    println!(
        "\nbundle input round trip: n = {}, r = {}, lambda = {}, re-emit identical: {}",
        back.n,
        back.r,
        back.lambda,
        bundle_input_to_json(&back) == text
    );

    std::fs::remove_file(&path).ok();
    Ok(())
}
