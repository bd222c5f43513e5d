//! Compile and run a small C program against the shipped header and the
//! built cdylib. Skipped (with a note) when no C compiler is around.

use std::path::PathBuf;
use std::process::Command;

const C_SOURCE: &str = r#"
#include "alcove_path.h"
#include <stdio.h>
#include <string.h>

int main(void) {
    AlcRootSystem *rs = NULL;
    if (alc_root_system_new('G', 2, &rs) != ALC_OK) return 1;
    if (alc_root_system_rank(rs) != 2) return 2;
    if (alc_root_system_num_positive_roots(rs) != 6) return 3;
    if (alc_root_system_coxeter_number(rs) != 6) return 4;
    int64_t omega1[2] = {1, 0};
    char *json = NULL;
    if (alc_chain_json(rs, omega1, 2, &json) != ALC_OK) return 5;
    if (strstr(json, "\"reduced\":true") == NULL) return 6;
    alc_string_free(json);
    uint64_t dim = 0;
    int64_t rho[2] = {1, 1};
    if (alc_weyl_dimension(rs, rho, 2, &dim) != ALC_OK || dim != 64) return 7;
    int64_t bad[2] = {-1, 0};
    if (alc_weyl_dimension(rs, bad, 2, &dim) != ALC_INVALID_ARGUMENT) return 8;
    if (strlen(alc_last_error_message()) == 0) return 9;
    alc_root_system_free(rs);
    return 0;
}
"#;

fn find_compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"].into_iter().find(|cc| {
        Command::new(cc)
            .arg("--version")
            .output()
            .map(|o| o.status.success())
            .unwrap_or(false)
    })
}

fn find_cdylib() -> Option<PathBuf> {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = manifest.parent()?.parent()?.join("target");
    for profile in ["debug", "release"] {
        for name in ["libalcove_path_ffi.so", "libalcove_path_ffi.dylib"] {
            let p = target.join(profile).join(name);
            if p.exists() {
                return Some(p);
            }
        }
    }
    None
}

#[test]
fn c_program_links_and_runs() {
    let Some(cc) = find_compiler() else {
        eprintln!("skipping: no C compiler found");
        return;
    };
    let Some(lib) = find_cdylib() else {
        eprintln!("skipping: cdylib not built yet");
        return;
    };
    let lib_dir = lib.parent().unwrap();
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");

    let dir = std::env::temp_dir().join(format!("alcove-ffi-c-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    let bin = dir.join("smoke");
    std::fs::write(&src, C_SOURCE).unwrap();

    let compile = Command::new(cc)
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg("-L")
        .arg(lib_dir)
        .arg("-lalcove_path_ffi")
        .arg("-o")
        .arg(&bin)
        .output()
        .expect("compiler invocation");
    assert!(
        compile.status.success(),
        "C compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&bin)
        .env("LD_LIBRARY_PATH", lib_dir)
        .env("DYLD_LIBRARY_PATH", lib_dir)
        .output()
        .expect("smoke binary runs");
    assert!(
        run.status.success(),
        "C smoke test exited with {:?}",
        run.status.code()
    );
    std::fs::remove_dir_all(&dir).ok();
}
