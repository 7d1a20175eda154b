//! C interface to `xmodlie`.
//!
//! A workspace is an opaque handle created from TOML text, a file, or the
//! built-in corpus. Commands return a report string owned by the caller and
//! freed with [`xmodlie_string_free`]. Every function returns an
//! [`XmodlieStatus`]; on failure [`xmodlie_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use xmodlie::cli::{run, Workspace};
use xmodlie::{Category, Error};

/// Opaque workspace handle.
pub struct XmodlieWorkspace {
    inner: Workspace,
}

/// Status codes. Values 1 to 5 match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XmodlieStatus {
    Ok = 0,
    Usage = 1,
    Parse = 2,
    Axiom = 3,
    Mismatch = 4,
    Internal = 5,
    NullPointer = 6,
    InvalidUtf8 = 7,
}

impl From<Category> for XmodlieStatus {
    fn from(c: Category) -> Self {
        match c {
            Category::Usage => XmodlieStatus::Usage,
            Category::Parse => XmodlieStatus::Parse,
            Category::Axiom => XmodlieStatus::Axiom,
            Category::Mismatch => XmodlieStatus::Mismatch,
            Category::Internal => XmodlieStatus::Internal,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: XmodlieStatus, msg: impl Into<String>) -> XmodlieStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> XmodlieStatus {
    fail(e.category().into(), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, XmodlieStatus> {
    if p.is_null() {
        return Err(fail(XmodlieStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(XmodlieStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

fn guarded(f: impl FnOnce() -> XmodlieStatus) -> XmodlieStatus {
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(XmodlieStatus::Internal, "internal panic"))
}

fn publish(ws: Result<Workspace, Error>, out: *mut *mut XmodlieWorkspace) -> XmodlieStatus {
    match ws {
        Ok(inner) => {
            let b = Box::new(XmodlieWorkspace { inner });
            unsafe { *out = Box::into_raw(b) };
            XmodlieStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Loads the built-in corpus into `*out`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn xmodlie_workspace_builtin(
    out: *mut *mut XmodlieWorkspace,
) -> XmodlieStatus {
    if out.is_null() {
        return fail(XmodlieStatus::NullPointer, "null output pointer");
    }
    guarded(|| publish(Workspace::builtin(), out))
}

/// Parses a TOML document into `*out`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xmodlie_workspace_from_toml(
    text: *const c_char,
    out: *mut *mut XmodlieWorkspace,
) -> XmodlieStatus {
    if out.is_null() {
        return fail(XmodlieStatus::NullPointer, "null output pointer");
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(|| publish(Workspace::from_str("<memory>", text), out))
}

/// Loads a definition file into `*out`.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xmodlie_workspace_from_path(
    path: *const c_char,
    out: *mut *mut XmodlieWorkspace,
) -> XmodlieStatus {
    if out.is_null() {
        return fail(XmodlieStatus::NullPointer, "null output pointer");
    }
    let path = match read_str(path) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(|| publish(Workspace::from_paths(&[path]), out))
}

/// Releases a workspace. Null is ignored.
///
/// # Safety
/// `ws` must come from one of the constructors and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn xmodlie_workspace_free(ws: *mut XmodlieWorkspace) {
    if !ws.is_null() {
        drop(Box::from_raw(ws));
    }
}

/// Runs `command` with `nargs` arguments and stores the report in `*out`,
/// as JSON when `machine` is true and as text otherwise. A report whose
/// checks failed is still stored and yields `Mismatch`.
///
/// # Safety
/// `ws` must be a live handle, `command` and each of the `nargs` entries of
/// `args` nul-terminated strings, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xmodlie_run(
    ws: *const XmodlieWorkspace,
    command: *const c_char,
    args: *const *const c_char,
    nargs: usize,
    machine: bool,
    out: *mut *mut c_char,
) -> XmodlieStatus {
    if ws.is_null() || out.is_null() || (args.is_null() && nargs > 0) {
        return fail(XmodlieStatus::NullPointer, "null argument");
    }
    *out = ptr::null_mut();
    let command = match read_str(command) {
        Ok(c) => c,
        Err(s) => return s,
    };
    let mut owned = Vec::with_capacity(nargs);
    for i in 0..nargs {
        match read_str(*args.add(i)) {
            Ok(a) => owned.push(a.to_string()),
            Err(s) => return s,
        }
    }
    let ws = &(*ws).inner;
    guarded(|| match run(ws, command, &owned) {
        Ok(r) => {
            let text = if machine {
                r.to_machine()
            } else {
                r.to_human()
            };
            *out = CString::new(text)
                .expect("reports contain no nul")
                .into_raw();
            if r.ok {
                XmodlieStatus::Ok
            } else {
                fail(XmodlieStatus::Mismatch, "report checks failed")
            }
        }
        Err(e) => from_error(e),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn xmodlie_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn xmodlie_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
