//! C ABI over `connectivity`.
//!
//! Objects cross the boundary as opaque handles built from JSON (the same
//! shapes the CLI reads). Every call returns a [`CxStatus`]; on failure the
//! message is available from [`cx_last_error`] until the next call on the
//! same thread. Strings handed out by the library are released with
//! [`cx_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use connectivity::conndyn::ConnDynamics;
use connectivity::dynamics::Dynamics;
use connectivity::json::{
    from_value, space_value, to_value, ConnDynamicsJson, DynamicsJson, FoliationJson, SpaceJson,
};
use connectivity::order::{connectivity_order, order_report};
use connectivity::{Error, Foliation, Space};
use serde_json::Value;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CxStatus {
    Ok = 0,
    /// A predicate evaluated to false.
    False = 1,
    /// Malformed JSON, bad index or unknown name.
    Input = 2,
    /// Beyond the supported size.
    Capacity = 3,
    /// Well-formed but not a valid structure.
    Invalid = 4,
    /// Precondition of the operation not met.
    Domain = 5,
    /// A required pointer was null.
    Null = 6,
    /// Internal failure.
    Panic = 7,
}

/// A finite connectivity space.
pub struct CxSpace {
    inner: Space,
}

/// A pair of structures on the same points, internal finer than external.
pub struct CxFoliation {
    inner: Foliation,
}

/// A dynamics over a finite category.
pub struct CxDynamics {
    inner: Dynamics,
}

/// A dynamics with connectivity structures on its arrows and states.
pub struct CxConnDynamics {
    inner: ConnDynamics,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> CxStatus {
    match e {
        Error::Input(_) => CxStatus::Input,
        Error::Capacity(_) => CxStatus::Capacity,
        Error::Invalid(_) => CxStatus::Invalid,
        Error::Domain(_) => CxStatus::Domain,
    }
}

enum Fail {
    Lib(Error),
    Null(&'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Fail>;

fn guard(f: impl FnOnce() -> Res<CxStatus>) -> CxStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            CxStatus::Null
        }
        Err(_) => {
            set_error("internal panic");
            CxStatus::Panic
        }
    }
}

fn flag(b: bool) -> CxStatus {
    if b {
        CxStatus::Ok
    } else {
        CxStatus::False
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Res<&'a str> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail::Lib(Error::Input(format!("{what}: {e}"))))
}

unsafe fn json_arg(p: *const c_char, what: &'static str) -> Res<Value> {
    let text = str_arg(p, what)?;
    serde_json::from_str(text).map_err(|e| Fail::Lib(Error::Input(format!("{what}: {e}"))))
}

unsafe fn handle<'a, T>(p: *const T, what: &'static str) -> Res<&'a T> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &'static str) -> Res<&'a mut T> {
    p.as_mut().ok_or(Fail::Null(what))
}

fn boxed<T>(t: T) -> *mut T {
    Box::into_raw(Box::new(t))
}

fn c_string(v: &Value) -> *mut c_char {
    CString::new(v.to_string()).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library; valid until the next call.
#[no_mangle]
pub extern "C" fn cx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by any `*_json` function.
///
/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn cx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Largest supported number of points.
#[no_mangle]
pub extern "C" fn cx_max_points() -> usize {
    connectivity::subset::MAX_POINTS
}

// spaces

/// Parses `{"points": n, "connected": [[...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string, `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cx_space_from_json(json: *const c_char, out_space: *mut *mut CxSpace) -> CxStatus {
    guard(|| {
        let slot = out(out_space, "out")?;
        let s = from_value::<SpaceJson>(json_arg(json, "json")?)?.to_space()?;
        *slot = boxed(CxSpace { inner: s });
        Ok(CxStatus::Ok)
    })
}

/// # Safety
/// `space` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn cx_space_free(space: *mut CxSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// # Safety
/// `space` must be a live handle, `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cx_space_to_json(space: *const CxSpace, out_json: *mut *mut c_char) -> CxStatus {
    guard(|| {
        let s = handle(space, "space")?;
        *out(out_json, "out")? = c_string(&space_value(&s.inner));
        Ok(CxStatus::Ok)
    })
}

/// # Safety
/// `space` must be a live handle, `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cx_space_points(space: *const CxSpace, out_points: *mut usize) -> CxStatus {
    guard(|| {
        *out(out_points, "out")? = handle(space, "space")?.inner.points();
        Ok(CxStatus::Ok)
    })
}

/// `Ok` when the points of `mask` (bit `i` for point `i`) form a connected part, `False` otherwise.
///
/// # Safety
/// `space` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cx_space_is_connected(space: *const CxSpace, mask: u64) -> CxStatus {
    guard(|| Ok(flag(handle(space, "space")?.inner.is_connected(mask))))
}

/// # Safety
/// `space` must be a live handle, `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cx_space_order(space: *const CxSpace, out_order: *mut usize) -> CxStatus {
    guard(|| {
        *out(out_order, "out")? = connectivity_order(&handle(space, "space")?.inner);
        Ok(CxStatus::Ok)
    })
}

/// Irreducible parts, chain length, height and both order conventions.
///
/// # Safety
/// `space` must be a live handle, `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cx_space_order_json(space: *const CxSpace, out_json: *mut *mut c_char) -> CxStatus {
    guard(|| {
        let r = order_report(&handle(space, "space")?.inner);
        *out(out_json, "out")? = c_string(&to_value(&r));
        Ok(CxStatus::Ok)
    })
}

/// Quotient by a partition given as JSON, e.g. `[[0,1],[2]]`.
///
/// # Safety
/// `space` must be a live handle, `classes` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_space_quotient(
    space: *const CxSpace,
    classes: *const c_char,
    out_space: *mut *mut CxSpace,
) -> CxStatus {
    guard(|| {
        let s = handle(space, "space")?;
        let slot = out(out_space, "out")?;
        let classes: Vec<Vec<usize>> = from_value(json_arg(classes, "classes")?)?;
        *slot = boxed(CxSpace { inner: connectivity::space::quotient(&s.inner, &classes)? });
        Ok(CxStatus::Ok)
    })
}

// foliations

/// Parses `{"points": n, "internal": [...], "external": [...]}`.
///
/// # Safety
/// `json` must be NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_foliation_from_json(json: *const c_char, out_foliation: *mut *mut CxFoliation) -> CxStatus {
    guard(|| {
        let slot = out(out_foliation, "out")?;
        let z = from_value::<FoliationJson>(json_arg(json, "json")?)?.to_foliation()?;
        *slot = boxed(CxFoliation { inner: z });
        Ok(CxStatus::Ok)
    })
}

/// # Safety
/// `z` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn cx_foliation_free(z: *mut CxFoliation) {
    if !z.is_null() {
        drop(Box::from_raw(z));
    }
}

/// # Safety
/// `z` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cx_foliation_is_regular(z: *const CxFoliation) -> CxStatus {
    guard(|| Ok(flag(handle(z, "foliation")?.inner.is_regular())))
}

/// # Safety
/// `z` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_foliation_leaf_count(z: *const CxFoliation, out_count: *mut usize) -> CxStatus {
    guard(|| {
        *out(out_count, "out")? = handle(z, "foliation")?.inner.leaves().len();
        Ok(CxStatus::Ok)
    })
}

/// Leaves as point lists, ordered by least point.
///
/// # Safety
/// `z` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_foliation_leaves_json(z: *const CxFoliation, out_json: *mut *mut c_char) -> CxStatus {
    guard(|| {
        let leaves = handle(z, "foliation")?.inner.leaf_lists();
        *out(out_json, "out")? = c_string(&serde_json::json!(leaves));
        Ok(CxStatus::Ok)
    })
}

/// Space of leaves: induced (`quotient` false) or quotient (`quotient` true).
///
/// # Safety
/// `z` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_foliation_leaf_space(
    z: *const CxFoliation,
    quotient: bool,
    out_space: *mut *mut CxSpace,
) -> CxStatus {
    guard(|| {
        let z = &handle(z, "foliation")?.inner;
        let slot = out(out_space, "out")?;
        let s = if quotient { z.leaf_space_quotient()? } else { z.leaf_space_induced()? };
        *slot = boxed(CxSpace { inner: s });
        Ok(CxStatus::Ok)
    })
}

// dynamics

/// Parses a dynamics with an inline category.
///
/// # Safety
/// `json` must be NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_dynamics_from_json(json: *const c_char, out_dynamics: *mut *mut CxDynamics) -> CxStatus {
    guard(|| {
        let slot = out(out_dynamics, "out")?;
        let d = from_value::<DynamicsJson>(json_arg(json, "json")?)?.to_dynamics(Path::new("."))?;
        d.require_valid()?;
        *slot = boxed(CxDynamics { inner: d });
        Ok(CxStatus::Ok)
    })
}

/// # Safety
/// `d` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn cx_dynamics_free(d: *mut CxDynamics) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cx_dynamics_is_proper(d: *const CxDynamics) -> CxStatus {
    guard(|| Ok(flag(handle(d, "dynamics")?.inner.is_proper())))
}

/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cx_dynamics_is_deterministic(d: *const CxDynamics) -> CxStatus {
    guard(|| Ok(flag(handle(d, "dynamics")?.inner.is_deterministic())))
}

/// Names of the states reachable from `state`, itself included.
///
/// # Safety
/// `d` must be a live handle, `state` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_dynamics_orbit_json(
    d: *const CxDynamics,
    state: *const c_char,
    out_json: *mut *mut c_char,
) -> CxStatus {
    guard(|| {
        let d = &handle(d, "dynamics")?.inner;
        let name = str_arg(state, "state")?;
        let slot = out(out_json, "out")?;
        let s = d.state_index(name).ok_or_else(|| Error::Input(format!("unknown state {name:?}")))?;
        let names: Vec<&str> = d.orbit(s).into_iter().map(|t| d.names()[t].as_str()).collect();
        *slot = c_string(&serde_json::json!(names));
        Ok(CxStatus::Ok)
    })
}

// connective dynamics

/// Parses a dynamics with `arrow_connected` and `state_connected` families.
///
/// # Safety
/// `json` must be NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_conn_dynamics_from_json(
    json: *const c_char,
    out_dynamics: *mut *mut CxConnDynamics,
) -> CxStatus {
    guard(|| {
        let slot = out(out_dynamics, "out")?;
        let cd = from_value::<ConnDynamicsJson>(json_arg(json, "json")?)?.to_conn_dynamics(Path::new("."))?;
        *slot = boxed(CxConnDynamics { inner: cd });
        Ok(CxStatus::Ok)
    })
}

/// # Safety
/// `d` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn cx_conn_dynamics_free(d: *mut CxConnDynamics) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Foliation of the states: internal parts generated by arrow reach, external the state structure.
///
/// # Safety
/// `d` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_conn_dynamics_foliation(
    d: *const CxConnDynamics,
    out_foliation: *mut *mut CxFoliation,
) -> CxStatus {
    guard(|| {
        let d = &handle(d, "dynamics")?.inner;
        let slot = out(out_foliation, "out")?;
        *slot = boxed(CxFoliation { inner: d.foliation()? });
        Ok(CxStatus::Ok)
    })
}

/// # Safety
/// `d` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cx_conn_dynamics_order(d: *const CxConnDynamics, out_order: *mut usize) -> CxStatus {
    guard(|| {
        let d = &handle(d, "dynamics")?.inner;
        *out(out_order, "out")? = d.order()?.order;
        Ok(CxStatus::Ok)
    })
}
