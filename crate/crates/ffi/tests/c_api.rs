use std::ffi::{CStr, CString};
use std::ptr;

use pmatch_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(pm_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn text(symbols: &[u16], sigma: u32) -> *mut PmText {
    let mut out = ptr::null_mut();
    let st = unsafe { pm_text_new(symbols.as_ptr(), symbols.len(), sigma, &mut out) };
    assert_eq!(st, PmStatus::Ok, "{}", last_error());
    out
}

fn pattern(symbols: &[u16], sigma: u32) -> *mut PmPattern {
    let mut out = ptr::null_mut();
    let st = unsafe { pm_pattern_new(symbols.as_ptr(), symbols.len(), sigma, &mut out) };
    assert_eq!(st, PmStatus::Ok, "{}", last_error());
    out
}

fn search(algo: u32, t: *const PmText, p: *const PmPattern) -> (Vec<usize>, PmStats) {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            pm_search(algo, t, p, &mut out),
            PmStatus::Ok,
            "{}",
            last_error()
        );
        let n = pm_outcome_count(out);
        let occ = std::slice::from_raw_parts(pm_outcome_occurrences(out), n).to_vec();
        let mut stats = PmStats::default();
        assert_eq!(pm_outcome_stats(out, &mut stats), PmStatus::Ok);
        pm_outcome_free(out);
        (occ, stats)
    }
}

fn letters(s: &str) -> Vec<u16> {
    s.bytes().map(|b| u16::from(b - b'A')).collect()
}

#[test]
fn searches_through_handles() {
    let t = text(&letters("XYXYZZYX"), 26);
    let p = pattern(&letters("ABABCCBA"), 26);
    let e = pattern(&letters("YZZ"), 26);
    for algo in [PM_ALGO_PM_NAIVE, PM_ALGO_PM_AUTO] {
        assert_eq!(search(algo, t, p).0, [0]);
    }
    for algo in [PM_ALGO_EXACT_NAIVE, PM_ALGO_EXACT_KMP] {
        let (occ, stats) = search(algo, t, e);
        assert_eq!(occ, [3]);
        assert!(stats.symbol_comparisons > 0);
    }
    unsafe {
        assert_eq!(pm_text_len(t), 8);
        assert_eq!(pm_text_sigma(t), 26);
        assert_eq!(*pm_text_symbols(t), 23);
        assert_eq!(pm_pattern_len(p), 8);
        pm_text_free(t);
        pm_pattern_free(p);
        pm_pattern_free(e);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut t = ptr::null_mut();
        let bad = [0u16, 5];
        assert_eq!(
            pm_text_new(bad.as_ptr(), 2, 3, &mut t),
            PmStatus::InvalidArgument
        );
        assert!(last_error().contains("outside alphabet"));
        assert!(t.is_null());

        let mut p = ptr::null_mut();
        assert_eq!(
            pm_pattern_new(ptr::null(), 0, 3, &mut p),
            PmStatus::InvalidArgument
        );
        assert_eq!(
            pm_text_new(ptr::null(), 3, 3, &mut t),
            PmStatus::NullPointer
        );
        assert_eq!(
            pm_text_new(bad.as_ptr(), 1, 3, ptr::null_mut()),
            PmStatus::NullPointer
        );

        let t = text(&[0, 1, 0], 2);
        let p = pattern(&[0, 1], 3);
        let mut out = ptr::null_mut();
        assert_eq!(
            pm_search(PM_ALGO_EXACT_KMP, t, p, &mut out),
            PmStatus::InvalidArgument
        );
        assert_eq!(pm_search(9, t, p, &mut out), PmStatus::InvalidArgument);
        assert!(last_error().contains("algorithm"));
        assert_eq!(
            pm_search(PM_ALGO_PM_AUTO, ptr::null(), p, &mut out),
            PmStatus::NullPointer
        );
        assert_eq!(
            pm_outcome_stats(ptr::null(), ptr::null_mut()),
            PmStatus::NullPointer
        );
        assert_eq!(pm_text_len(ptr::null()), 0);
        pm_text_free(ptr::null_mut());
        pm_text_free(t);
        pm_pattern_free(p);
    }
}

#[test]
fn files_round_trip_and_bad_files_fail() {
    let dir = tempfile::tempdir().unwrap();
    let path = CString::new(dir.path().join("t.pmtx").to_str().unwrap()).unwrap();
    let t = text(&[3, 1, 4, 1, 5], 6);
    unsafe {
        assert_eq!(pm_text_save(t, path.as_ptr()), PmStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(pm_text_load(path.as_ptr(), &mut back), PmStatus::Ok);
        let s = std::slice::from_raw_parts(pm_text_symbols(back), pm_text_len(back));
        assert_eq!(s, [3, 1, 4, 1, 5]);
        let mut p = ptr::null_mut();
        assert_eq!(pm_pattern_load(path.as_ptr(), &mut p), PmStatus::Ok);
        assert_eq!(pm_pattern_len(p), 5);
        pm_pattern_free(p);
        pm_text_free(back);
        pm_text_free(t);

        let missing = CString::new(dir.path().join("none").to_str().unwrap()).unwrap();
        let mut x = ptr::null_mut();
        assert_eq!(pm_text_load(missing.as_ptr(), &mut x), PmStatus::Io);
        let junk = dir.path().join("junk");
        std::fs::write(&junk, b"not a pmtx file at all").unwrap();
        let junk = CString::new(junk.to_str().unwrap()).unwrap();
        assert_eq!(pm_text_load(junk.as_ptr(), &mut x), PmStatus::Format);
        assert_eq!(pm_text_load(ptr::null(), &mut x), PmStatus::NullPointer);
    }
}

#[test]
fn prev_encoding_and_equivalence() {
    let s = letters("ABABCCBA");
    let mut enc = vec![0u32; s.len()];
    unsafe {
        assert_eq!(
            pm_prev_encode(s.as_ptr(), s.len(), enc.as_mut_ptr()),
            PmStatus::Ok
        );
        assert_eq!(enc, [1, 2, 1, 2, 5, 5, 4, 3]);
        let t = letters("XYXYZZYX");
        let u = letters("XYXYZZYY");
        let mut eq = false;
        assert_eq!(
            pm_p_equivalent(s.as_ptr(), t.as_ptr(), s.len(), &mut eq),
            PmStatus::Ok
        );
        assert!(eq);
        assert_eq!(
            pm_p_equivalent(s.as_ptr(), u.as_ptr(), s.len(), &mut eq),
            PmStatus::Ok
        );
        assert!(!eq);
    }
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(pm_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/pmatch.h")).unwrap();
    for name in [
        "PM_STATUS_OK",
        "PM_STATUS_PANIC",
        "PM_ALGO_PM_AUTO",
        "typedef struct PmText PmText",
        "pm_search(",
        "pm_outcome_free(",
        "pm_prev_encode(",
        "pm_last_error(",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    // syntax-check with the system C compiler when there is one
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("check.c");
    std::fs::write(
        &src,
        "#include \"pmatch.h\"\nint main(void) { return PM_STATUS_OK; }\n",
    )
    .unwrap();
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    if let Ok(status) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I", include])
        .arg(&src)
        .status()
    {
        assert!(status.success());
    }
}

#[test]
fn c_program_links_against_static_library() {
    // test binaries live in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let lib = exe
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .join("libpmatch_ffi.a");
    if !cfg!(unix)
        || std::process::Command::new("cc")
            .arg("--version")
            .output()
            .is_err()
    {
        return;
    }
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("smoke");
    let manifest = env!("CARGO_MANIFEST_DIR");
    let status = std::process::Command::new("cc")
        .arg("-I")
        .arg(format!("{manifest}/include"))
        .arg(format!("{manifest}/tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = std::process::Command::new(&bin).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1 0\n");
}
