//! Compiles and runs a small C client against the generated header and the
//! static library, exercising the ABI end to end.

use std::path::PathBuf;
use std::process::Command;

const C_CLIENT: &str = r#"
#include <stdio.h>
#include <math.h>
#include "tokenspectra.h"

int main(void) {
    TsGraph *g = NULL;
    if (ts_graph_family("cycle:9", &g) != TS_STATUS_OK) return 1;
    if (ts_graph_vertex_count(g) != 9) return 2;

    TsGraph *f2 = NULL;
    if (ts_graph_token(g, 2, &f2) != TS_STATUS_OK) return 3;
    if (ts_graph_vertex_count(f2) != 36 || ts_graph_edge_count(f2) != 63) return 4;

    double alpha = 0.0;
    if (ts_graph_alpha(f2, &alpha) != TS_STATUS_OK) return 5;

    TsSpectrum *s = NULL;
    if (ts_f2_cycle_spectrum(9, &s) != TS_STATUS_OK) return 6;
    if (ts_spectrum_len(s) != 36) return 7;
    double fiedler = 0.0;
    if (ts_spectrum_fiedler(s, &fiedler) != TS_STATUS_OK) return 8;
    if (fabs(fiedler - alpha) > 1e-8) return 9;

    double values[36];
    if (ts_spectrum_values(s, values, 36) != TS_STATUS_OK) return 10;
    for (int i = 1; i < 36; i++) {
        if (values[i] < values[i - 1]) return 11;
    }

    TsGraph *bad = NULL;
    if (ts_graph_family("nope:3", &bad) != TS_STATUS_INVALID_ARGUMENT) return 12;

    ts_spectrum_free(s);
    ts_graph_free(f2);
    ts_graph_free(g);
    printf("c client ok, alpha = %.9f\n", alpha);
    return 0;
}
"#;

#[test]
fn c_client_links_and_runs() {
    let cc = ["cc", "clang", "gcc"]
        .iter()
        .find(|cc| {
            Command::new(cc)
                .arg("--version")
                .output()
                .map(|o| o.status.success())
                .unwrap_or(false)
        })
        .copied();
    let Some(cc) = cc else {
        eprintln!("no C compiler found; skipping the C client smoke test");
        return;
    };

    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    // The staticlib lands next to this test binary's deps directory.
    let mut libdir = std::env::current_exe().unwrap();
    libdir.pop(); // test binary
    libdir.pop(); // deps/
    let staticlib = libdir.join("libtokenspectra_ffi.a");
    assert!(
        staticlib.exists(),
        "staticlib not found at {}",
        staticlib.display()
    );

    let workdir = std::env::temp_dir().join(format!("tokenspectra_c_smoke_{}", std::process::id()));
    std::fs::create_dir_all(&workdir).unwrap();
    let src = workdir.join("client.c");
    let exe = workdir.join("client");
    std::fs::write(&src, C_CLIENT).unwrap();

    let compile = Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(staticlib)
        .arg("-lm")
        .arg("-lpthread")
        .arg("-ldl")
        .arg("-o")
        .arg(&exe)
        .output()
        .expect("spawn C compiler");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&exe).output().expect("run C client");
    assert!(
        run.status.success(),
        "client exited {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stdout)
    );
    let out = String::from_utf8_lossy(&run.stdout);
    assert!(out.contains("c client ok"), "{out}");
    let _ = std::fs::remove_dir_all(&workdir);
}
