// SPDX-License-Identifier: Apache-2.0

use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use maskedhls_ffi::*;

const DOMAND: &str = include_str!("../../core/tests/fixtures/domand_cross.c");

fn parse(text: &str) -> *mut MhDesign {
    let c = CString::new(text).unwrap();
    let mut d = ptr::null_mut();
    let st = unsafe { mh_design_parse_c(c.as_ptr(), &mut d) };
    assert_eq!(st, MhStatus::Ok);
    assert!(!d.is_null());
    d
}

fn last_error() -> String {
    let p = mh_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn compile_and_inspect() {
    let d = parse(DOMAND);
    let mut comp = ptr::null_mut();
    assert_eq!(unsafe { mh_compile(d, 1.0, &mut comp) }, MhStatus::Ok);
    let mut stats = MhStats::default();
    assert_eq!(
        unsafe { mh_compilation_stats(comp, &mut stats) },
        MhStatus::Ok
    );
    assert_eq!(
        (
            stats.total_registers,
            stats.latency,
            stats.annotated_registers
        ),
        (4, 1, 2)
    );
    assert!(stats.balanced);
    assert_eq!(unsafe { mh_compilation_check(comp, 0, 0) }, MhStatus::Ok);

    let mut v = ptr::null_mut();
    let name = CString::new("dom_and").unwrap();
    assert_eq!(
        unsafe { mh_compilation_verilog(comp, name.as_ptr(), &mut v) },
        MhStatus::Ok
    );
    let text = unsafe { CStr::from_ptr(v) }.to_str().unwrap().to_owned();
    assert!(text.contains("module dom_and(clk"));
    unsafe { mh_string_free(v) };

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { mh_compilation_source(comp, &mut s) }, MhStatus::Ok);
    let src = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    assert!(src.contains("p1 = reg(a0 * b0);"));
    unsafe {
        mh_string_free(s);
        mh_compilation_free(comp);
        mh_design_free(d);
    }
}

#[test]
fn naive_and_mask() {
    let d = parse("int f(bool a, bool b, bool c, bool *y) { t = a & b; *y = t & c; return 0; }");
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { mh_design_mask(d, MhGadget::Dom, false, &mut m) },
        MhStatus::Ok
    );
    let mut comp = ptr::null_mut();
    assert_eq!(unsafe { mh_compile_naive(m, &mut comp) }, MhStatus::Ok);
    let mut stats = MhStats::default();
    unsafe { mh_compilation_stats(comp, &mut stats) };
    assert_eq!(stats.annotated_registers, 4);
    assert_eq!(stats.latency, 2);
    assert_eq!(unsafe { mh_compilation_check(comp, 1000, 7) }, MhStatus::Ok);
    let mut j = ptr::null_mut();
    assert_eq!(unsafe { mh_design_to_json(m, &mut j) }, MhStatus::Ok);
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { mh_design_parse_json(j, &mut back) }, MhStatus::Ok);
    unsafe {
        mh_string_free(j);
        mh_design_free(back);
        mh_compilation_free(comp);
        mh_design_free(m);
        mh_design_free(d);
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("int f(bool a, bool *y) { *y = a +; return 0; }").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { mh_design_parse_c(bad.as_ptr(), &mut d) },
        MhStatus::Parse
    );
    assert!(d.is_null());
    assert!(last_error().contains("1:"));

    assert_eq!(
        unsafe { mh_design_parse_c(ptr::null(), &mut d) },
        MhStatus::NullPointer
    );
    let text = CString::new("int f(bool a, bool *y) { *y = a; return 0; }").unwrap();
    assert_eq!(
        unsafe { mh_design_parse_c(text.as_ptr(), ptr::null_mut()) },
        MhStatus::NullPointer
    );

    let d = parse(DOMAND);
    let mut comp = ptr::null_mut();
    assert_eq!(
        unsafe { mh_compile(d, -1.0, &mut comp) },
        MhStatus::InvalidArgument
    );
    assert!(comp.is_null());
    // Already annotated input cannot be masked again.
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { mh_design_mask(d, MhGadget::Hpc1, false, &mut m) },
        MhStatus::Validation
    );
    unsafe { mh_design_free(d) };
    unsafe {
        mh_design_free(ptr::null_mut());
        mh_compilation_free(ptr::null_mut());
        mh_string_free(ptr::null_mut());
    }
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(mh_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/maskedhls.h");
    let text = std::fs::read_to_string(header).unwrap();
    for f in [
        "mh_compile",
        "mh_design_parse_c",
        "mh_last_error",
        "MH_STATUS_SOLVER",
    ] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let dir = tempfile::tempdir().unwrap();
    let probe = dir.path().join("probe.c");
    std::fs::write(
        &probe,
        "#include \"maskedhls.h\"\nint main(void) { MhStats s; (void)s; return MH_STATUS_OK; }\n",
    )
    .unwrap();
    let inc = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    for (cc, lang) in [("cc", "c"), ("c++", "c++")] {
        let out = match Command::new(cc)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang, "-I", inc])
            .arg(&probe)
            .output()
        {
            Ok(o) => o,
            // No compiler installed: nothing more to check.
            Err(_) => return,
        };
        assert!(
            out.status.success(),
            "{cc}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}
