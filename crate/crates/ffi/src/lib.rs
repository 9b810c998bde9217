//! C ABI for `kirwan-core`.
//!
//! Scenes are opaque handles created by `kirwan_scene_from_json` or
//! `kirwan_scene_from_file` and released with `kirwan_scene_free`. Every
//! fallible call returns a [`KirwanStatus`]; on failure the message is
//! available from `kirwan_last_error` on the same thread. Strings returned
//! through `char **` out-parameters are owned by the caller and must be
//! released with `kirwan_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kirwan_core::blowup::{blowup_charts, kirwan_charts};
use kirwan_core::cdga::{classical_truncation, validate_presentation, GradedCdga};
use kirwan_core::io::report::{canonical_generators, leaf_records, tree_record, ChartRecord};
use kirwan_core::io::{ReportDocument, Scene};
use kirwan_core::reduction::{stabilizer_reduce, ReductionConfig};
use kirwan_core::torus::{saturation_ideal_partial, stabilizer_stratification, DEFAULT_VARIABLE_CAP};
use kirwan_core::Error;

/// Result codes. The first four match the exit codes of the `kirwan` binary.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KirwanStatus {
    Ok = 0,
    ValidationFailed = 1,
    InvalidInput = 2,
    InvariantBreach = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// Opaque scene handle.
pub struct KirwanScene {
    scene: Scene,
    bytes: Vec<u8>,
    cdga: GradedCdga,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("no interior nul")));
}

fn status_of(e: &Error) -> KirwanStatus {
    match e.exit_code() {
        1 => KirwanStatus::ValidationFailed,
        3 => KirwanStatus::InvariantBreach,
        _ => KirwanStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<(), KirwanStatus>) -> KirwanStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KirwanStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            KirwanStatus::Panic
        }
    }
}

fn core<T>(r: kirwan_core::Result<T>) -> Result<T, KirwanStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, KirwanStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(KirwanStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        KirwanStatus::InvalidUtf8
    })
}

unsafe fn scene_ref<'a>(scene: *const KirwanScene) -> Result<&'a KirwanScene, KirwanStatus> {
    scene.as_ref().ok_or_else(|| {
        set_error("null scene handle");
        KirwanStatus::NullPointer
    })
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), KirwanStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(KirwanStatus::NullPointer);
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    Ok(())
}

fn load(bytes: Vec<u8>, out: *mut *mut KirwanScene) -> Result<(), KirwanStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(KirwanStatus::NullPointer);
    }
    let src = std::str::from_utf8(&bytes).map_err(|_| {
        set_error("scene is not valid UTF-8");
        KirwanStatus::InvalidUtf8
    })?;
    let scene = core(Scene::from_json(src))?;
    let cdga = core(scene.to_cdga_unchecked())?;
    let handle = Box::new(KirwanScene { scene, bytes, cdga });
    unsafe { *out = Box::into_raw(handle) };
    Ok(())
}

/// Parses a scene from JSON text. Presentation checks are deferred to
/// `kirwan_scene_validate`; schema and parse errors fail here.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kirwan_scene_from_json(json: *const c_char, out: *mut *mut KirwanScene) -> KirwanStatus {
    guard(|| load(read_str(json)?.as_bytes().to_vec(), out))
}

/// # Safety
/// `path` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kirwan_scene_from_file(path: *const c_char, out: *mut *mut KirwanScene) -> KirwanStatus {
    guard(|| {
        let bytes = core(std::fs::read(read_str(path)?).map_err(Error::from))?;
        load(bytes, out)
    })
}

/// # Safety
/// `scene` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn kirwan_scene_free(scene: *mut KirwanScene) {
    if !scene.is_null() {
        drop(Box::from_raw(scene));
    }
}

/// Runs the presentation checks; `*passed` is set either way. The messages of
/// a failed check are available from `kirwan_last_error`.
///
/// # Safety
/// `scene` must be a live handle and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn kirwan_scene_validate(scene: *const KirwanScene, passed: *mut bool) -> KirwanStatus {
    guard(|| {
        let s = scene_ref(scene)?;
        if passed.is_null() {
            set_error("null output pointer");
            return Err(KirwanStatus::NullPointer);
        }
        let report = validate_presentation(&s.cdga);
        *passed = report.passed();
        if !report.passed() {
            let msg: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
            set_error(msg.join("; "));
        }
        Ok(())
    })
}

fn checked(s: &KirwanScene) -> Result<GradedCdga, KirwanStatus> {
    core(s.scene.to_cdga())
}

/// Classical truncation as newline-separated reduced Gröbner basis elements.
///
/// # Safety
/// `scene` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kirwan_pi0(scene: *const KirwanScene, out: *mut *mut c_char) -> KirwanStatus {
    guard(|| {
        let x = checked(scene_ref(scene)?)?;
        write_string(out, canonical_generators(&classical_truncation(&x)).join("\n"))
    })
}

/// Blow-up charts along the maximal stabilizer locus as a JSON report; with
/// `kirwan` set the unstable locus is removed.
///
/// # Safety
/// `scene` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kirwan_blowup_json(scene: *const KirwanScene, kirwan: bool, degree_cap: u32, out: *mut *mut c_char) -> KirwanStatus {
    guard(|| {
        let s = scene_ref(scene)?;
        let x = checked(s)?;
        let rep = core(stabilizer_stratification(&x, DEFAULT_VARIABLE_CAP))?;
        if rep.max_dim == 0 {
            return core(Err(Error::NoPositiveDimensionalStabilizer));
        }
        let h = rep.maximal_subtorus;
        let charts = if kirwan {
            let j = core(saturation_ideal_partial(&x, &h, degree_cap))?;
            core(kirwan_charts(&x, &h, &j.ideal))?
        } else {
            core(blowup_charts(&x, &h))?
        };
        let records: Vec<ChartRecord> = charts.iter().map(ChartRecord::from).collect();
        let command = if kirwan { "kirwan" } else { "blowup" };
        write_string(out, ReportDocument::new(command, &s.bytes, records).to_json())
    })
}

fn config(s: &KirwanScene, seed: u64) -> ReductionConfig {
    let mut c = ReductionConfig { seed, ..ReductionConfig::default() };
    if let Some(d) = s.scene.options.depth_fuse {
        c.depth_fuse = d;
    }
    if let Some(d) = s.scene.options.degree_cap {
        c.degree_cap = d;
    }
    c
}

/// Full stabilizer reduction tree as a JSON report.
///
/// # Safety
/// `scene` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kirwan_reduce_json(scene: *const KirwanScene, seed: u64, out: *mut *mut c_char) -> KirwanStatus {
    guard(|| {
        let s = scene_ref(scene)?;
        let tree = core(stabilizer_reduce(&checked(s)?, &config(s, seed)))?;
        write_string(out, ReportDocument::new("reduce", &s.bytes, tree_record(&tree)).to_json())
    })
}

/// Obstruction reports of the reduction's leaves as a JSON report.
///
/// # Safety
/// `scene` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kirwan_report_json(scene: *const KirwanScene, seed: u64, out: *mut *mut c_char) -> KirwanStatus {
    guard(|| {
        let s = scene_ref(scene)?;
        let tree = core(stabilizer_reduce(&checked(s)?, &config(s, seed)))?;
        write_string(out, ReportDocument::new("report", &s.bytes, leaf_records(&tree)).to_json())
    })
}

/// # Safety
/// `s` must come from this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn kirwan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library.
#[no_mangle]
pub extern "C" fn kirwan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

#[no_mangle]
pub extern "C" fn kirwan_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
