use std::path::PathBuf;
use std::process::{Command, Output};

pub fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

pub fn ringext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringext"))
        .args(args)
        .env_remove("WORKBENCH_GUARD")
        .output()
        .expect("binary runs")
}

/// One invocation per verb, all on small inputs.
pub fn verb_invocations() -> Vec<Vec<String>> {
    let cmd = |parts: &[&str]| parts.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        cmd(&["ring-check", &data("z4.json")]),
        cmd(&["bimodule-check", &data("bimodule_z2_z2.json")]),
        cmd(&["factorset-check", &data("cochain_f11.json")]),
        cmd(&["ext-build", &data("cochain_f11.json")]),
        cmd(&["ext-extract", &data("ext_z4.json")]),
        cmd(&["h2", &data("bimodule_z2_z2.json")]),
        cmd(&["pre-check", &data("pre_z4.json")]),
        cmd(&["obstruction", "--gamma", &data("pre_nonvanishing.json")]),
        cmd(&["cocycle-check", &data("family_rel5.json")]),
        cmd(&["cohomologous", &data("family_zero.json"), &data("family_zero.json")]),
        cmd(&["vanish-build", &data("pre_z4.json")]),
        cmd(&["classify", &data("pre_z4.json")]),
        cmd(&["resolution-verify", "--dump", &data("z2.json")]),
        cmd(&["product-report", &data("z2.json")]),
        cmd(&["h3", "--seed", "7", &data("bimodule_z2_z2.json")]),
        cmd(&["ann-check", &data("structure_zero.json")]),
        cmd(&["ann-functor", "--find", &data("structure_zero.json"), &data("structure_zero.json")]),
    ]
}
