fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR set by cargo");
    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        include_guard: Some("KBALANCE_H".to_string()),
        cpp_compat: true,
        header: Some("/* C interface to the kbalance generating-function library. */".to_string()),
        ..Default::default()
    };
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("generate C header")
        .write_to_file(std::path::Path::new(&crate_dir).join("include/kbalance.h"));
    println!("cargo:rerun-if-changed=src/lib.rs");
}
