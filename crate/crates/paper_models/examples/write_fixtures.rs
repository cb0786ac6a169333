fn main() {
    let dir = std::env::args().nth(1).map(Into::into).unwrap_or_else(paper_models::fixtures::fixtures_dir);
    let n = paper_models::fixtures::write_all(&dir).expect("write fixtures");
    println!("wrote {n} files to {}", dir.display());
}
