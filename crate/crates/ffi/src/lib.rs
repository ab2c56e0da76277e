// SPDX-License-Identifier: Apache-2.0

//! C ABI for the maskedhls compiler.
//!
//! Designs and compilations are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns an
//! [`MhStatus`]; on failure [`mh_last_error`] describes the problem for the
//! calling thread. Strings handed out by the library are NUL-terminated and
//! must be released with [`mh_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use maskedhls::codegen::{emit_balanced_source, emit_verilog};
use maskedhls::frontend::{dfg_to_json, parse_json_netlist, parse_masked_c, validate_dfg, Dfg};
use maskedhls::gadgets::{apply_masking_pass, GadgetKind};
use maskedhls::hlsmodel::ModelError;
use maskedhls::retimer::{retime, PipelinedNetlist, RetimeError};
use maskedhls::simcheck::{check_balance, check_equivalence, naive_balance};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    Solver = 5,
    Equivalence = 6,
    InvalidArgument = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MhGadget {
    Dom = 0,
    Hpc1 = 1,
    Hpc2 = 2,
    Comar = 3,
}

impl From<MhGadget> for GadgetKind {
    fn from(g: MhGadget) -> Self {
        match g {
            MhGadget::Dom => GadgetKind::Dom,
            MhGadget::Hpc1 => GadgetKind::Hpc1,
            MhGadget::Hpc2 => GadgetKind::Hpc2,
            MhGadget::Comar => GadgetKind::Comar,
        }
    }
}

/// A parsed circuit.
pub struct MhDesign {
    dfg: Dfg,
}

/// A balanced (or fully cut) circuit together with its source design.
pub struct MhCompilation {
    golden: Dfg,
    net: PipelinedNetlist,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MhStats {
    pub inputs: u32,
    pub outputs: u32,
    pub operations: u32,
    pub annotated_registers: u32,
    pub balancing_registers: u32,
    pub total_registers: u32,
    pub latency: u32,
    pub balanced: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: MhStatus, msg: impl Into<String>) -> MhStatus {
    set_error(msg.into());
    status
}

/// Run `f`, turning panics into [`MhStatus::Internal`].
fn guard(f: impl FnOnce() -> MhStatus) -> MhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(MhStatus::Internal, format!("internal error: {msg}"))
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, MhStatus> {
    if p.is_null() {
        return Err(fail(MhStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(MhStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn give_string(s: String, out: *mut *mut c_char) -> MhStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: caller checked `out` for NULL.
            unsafe { *out = c.into_raw() };
            MhStatus::Ok
        }
        Err(_) => fail(MhStatus::Internal, "output contains a NUL byte"),
    }
}

fn finish_design(dfg: Dfg, out: *mut *mut MhDesign) -> MhStatus {
    let diags = validate_dfg(&dfg);
    if let Some(d) = diags.first() {
        return fail(MhStatus::Validation, d.to_string());
    }
    // SAFETY: caller checked `out` for NULL.
    unsafe { *out = Box::into_raw(Box::new(MhDesign { dfg })) };
    MhStatus::Ok
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn mh_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parse a circuit written in the masked C dialect.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_design_parse_c(
    text: *const c_char,
    out: *mut *mut MhDesign,
) -> MhStatus {
    guard(|| {
        if out.is_null() {
            return fail(MhStatus::NullPointer, "out is NULL");
        }
        let text = match str_arg(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_masked_c(text) {
            Ok(g) => finish_design(g, out),
            Err(e) => fail(MhStatus::Parse, e.to_string()),
        }
    })
}

/// Parse a circuit in the JSON netlist format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_design_parse_json(
    text: *const c_char,
    out: *mut *mut MhDesign,
) -> MhStatus {
    guard(|| {
        if out.is_null() {
            return fail(MhStatus::NullPointer, "out is NULL");
        }
        let text = match str_arg(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_json_netlist(text) {
            Ok(g) => finish_design(g, out),
            Err(e) => fail(MhStatus::Parse, e.to_string()),
        }
    })
}

/// Mask an unannotated design, producing a new design.
///
/// # Safety
/// `design` must come from this library and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_design_mask(
    design: *const MhDesign,
    gadget: MhGadget,
    share_randoms: bool,
    out: *mut *mut MhDesign,
) -> MhStatus {
    guard(|| {
        if design.is_null() || out.is_null() {
            return fail(MhStatus::NullPointer, "design or out is NULL");
        }
        match apply_masking_pass(&(*design).dfg, gadget.into(), share_randoms) {
            Ok((g, _)) => finish_design(g, out),
            Err(e) => fail(MhStatus::Validation, e.to_string()),
        }
    })
}

/// The design as a JSON netlist.
///
/// # Safety
/// `design` must come from this library and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_design_to_json(
    design: *const MhDesign,
    out: *mut *mut c_char,
) -> MhStatus {
    guard(|| {
        if design.is_null() || out.is_null() {
            return fail(MhStatus::NullPointer, "design or out is NULL");
        }
        give_string(dfg_to_json(&(*design).dfg), out)
    })
}

/// # Safety
/// `design` must come from this library (or be NULL) and not be used again.
#[no_mangle]
pub unsafe extern "C" fn mh_design_free(design: *mut MhDesign) {
    if !design.is_null() {
        drop(Box::from_raw(design));
    }
}

/// Balance the design's registers by retiming.
///
/// # Safety
/// `design` must come from this library and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_compile(
    design: *const MhDesign,
    clock: f64,
    out: *mut *mut MhCompilation,
) -> MhStatus {
    guard(|| {
        if design.is_null() || out.is_null() {
            return fail(MhStatus::NullPointer, "design or out is NULL");
        }
        let g = &(*design).dfg;
        match retime(g, clock) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(MhCompilation {
                    golden: g.clone(),
                    net: r.netlist,
                }));
                MhStatus::Ok
            }
            Err(e @ RetimeError::Model(ModelError::BadClock(_))) => {
                fail(MhStatus::InvalidArgument, e.to_string())
            }
            Err(e @ RetimeError::Model(_)) => fail(MhStatus::Validation, e.to_string()),
            Err(e) => fail(MhStatus::Solver, e.to_string()),
        }
    })
}

/// Balance with one full register cut per annotation level.
///
/// # Safety
/// `design` must come from this library and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_compile_naive(
    design: *const MhDesign,
    out: *mut *mut MhCompilation,
) -> MhStatus {
    guard(|| {
        if design.is_null() || out.is_null() {
            return fail(MhStatus::NullPointer, "design or out is NULL");
        }
        let g = &(*design).dfg;
        *out = Box::into_raw(Box::new(MhCompilation {
            golden: g.clone(),
            net: naive_balance(g),
        }));
        MhStatus::Ok
    })
}

/// Register and latency figures of a compilation.
///
/// # Safety
/// `comp` must come from this library and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_compilation_stats(
    comp: *const MhCompilation,
    out: *mut MhStats,
) -> MhStatus {
    guard(|| {
        if comp.is_null() || out.is_null() {
            return fail(MhStatus::NullPointer, "comp or out is NULL");
        }
        let net = &(*comp).net;
        *out = MhStats {
            inputs: net.dfg.inputs.len() as u32,
            outputs: net.dfg.outputs.len() as u32,
            operations: net.dfg.operation_count() as u32,
            annotated_registers: net.annotated_registers(),
            balancing_registers: net.balancing_registers(),
            total_registers: net.total_registers(),
            latency: net.latency,
            balanced: check_balance(net).balanced,
        };
        MhStatus::Ok
    })
}

/// Verilog for the compiled circuit. `module_name` may be NULL to use the
/// design name.
///
/// # Safety
/// `comp` must come from this library, `module_name` NULL or a
/// NUL-terminated string, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_compilation_verilog(
    comp: *const MhCompilation,
    module_name: *const c_char,
    out: *mut *mut c_char,
) -> MhStatus {
    guard(|| {
        if comp.is_null() || out.is_null() {
            return fail(MhStatus::NullPointer, "comp or out is NULL");
        }
        let net = &(*comp).net;
        let name = if module_name.is_null() {
            net.dfg.name.as_str()
        } else {
            match str_arg(module_name, "module_name") {
                Ok(n) => n,
                Err(s) => return s,
            }
        };
        give_string(emit_verilog(net, name).text, out)
    })
}

/// The compiled circuit written back in the C dialect.
///
/// # Safety
/// `comp` must come from this library and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_compilation_source(
    comp: *const MhCompilation,
    out: *mut *mut c_char,
) -> MhStatus {
    guard(|| {
        if comp.is_null() || out.is_null() {
            return fail(MhStatus::NullPointer, "comp or out is NULL");
        }
        give_string(emit_balanced_source(&(*comp).net), out)
    })
}

/// Simulate the compiled circuit against the unregistered design. Returns
/// [`MhStatus::Equivalence`] if any output differs.
///
/// # Safety
/// `comp` must come from this library.
#[no_mangle]
pub unsafe extern "C" fn mh_compilation_check(
    comp: *const MhCompilation,
    trials: u64,
    seed: u64,
) -> MhStatus {
    guard(|| {
        if comp.is_null() {
            return fail(MhStatus::NullPointer, "comp is NULL");
        }
        let c = &*comp;
        let mut golden = c.golden.clone();
        for n in &mut golden.nodes {
            n.annotated = false;
            n.regs.iter_mut().for_each(|r| *r = 0);
        }
        match check_equivalence(&c.net, &golden, trials, seed) {
            Ok(r) if r.equivalent => MhStatus::Ok,
            Ok(r) => fail(
                MhStatus::Equivalence,
                format!("{} mismatching output sample(s)", r.mismatch_count),
            ),
            Err(e) => fail(MhStatus::Internal, e.to_string()),
        }
    })
}

/// # Safety
/// `comp` must come from this library (or be NULL) and not be used again.
#[no_mangle]
pub unsafe extern "C" fn mh_compilation_free(comp: *mut MhCompilation) {
    if !comp.is_null() {
        drop(Box::from_raw(comp));
    }
}

/// # Safety
/// `s` must be a string returned by this library (or NULL).
#[no_mangle]
pub unsafe extern "C" fn mh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
