//! C interface to `satake`. Handles are opaque; every fallible call returns a
//! `SatakeStatus` and leaves a message for `satake_last_error_message`.
//! Strings returned through `char **out` are owned by the caller and released
//! with `satake_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use satake::decorations::{
    enumerate_cd, parse_gamma, parse_nodes, parse_tau, Analysis, ClassLabel, Decoration,
};
use satake::ksub::theorem::main_theorem_report;
use satake::ksub::{dimension_formula, lie_closure, standard_basis, KGenerators};
use satake::linalg::q;
use satake::verify::{verify, VerifyConfig};
use satake::{CartanMatrix, Error, LieAlgebra, RootSystem};
use serde_json::json;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatakeStatus {
    Ok = 0,
    InvalidInput = 1,
    Structural = 2,
    /// A verification ran and at least one check failed; the report is still written.
    VerificationFailed = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatakeLabel {
    NotCompatible = 0,
    NotGsat = 1,
    Sat = 2,
    WeakSat = 3,
    NonweakGsat = 4,
}

impl From<ClassLabel> for SatakeLabel {
    fn from(l: ClassLabel) -> Self {
        match l {
            ClassLabel::NotCompatible => SatakeLabel::NotCompatible,
            ClassLabel::CompatibleOnly => SatakeLabel::NotGsat,
            ClassLabel::Sat => SatakeLabel::Sat,
            ClassLabel::WeakSat => SatakeLabel::WeakSat,
            ClassLabel::NonweakGSat => SatakeLabel::NonweakGsat,
        }
    }
}

/// A Chevalley basis realization of a semisimple Lie algebra.
pub struct SatakeAlgebra {
    g: LieAlgebra,
}

/// A compatible decoration `(X, tau)` of the algebra it was created from.
pub struct SatakeDecoration {
    dec: Decoration,
    rank: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(SatakeStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let s = match e {
            Error::Input(_) => SatakeStatus::InvalidInput,
            Error::Structural(_) => SatakeStatus::Structural,
            Error::Verification(_) => SatakeStatus::VerificationFailed,
        };
        Fail(s, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SatakeStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SatakeStatus::Ok,
        Ok(Err(Fail(s, m))) => {
            set_error(&m);
            s
        }
        Err(_) => {
            set_error("internal panic");
            SatakeStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SatakeStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(SatakeStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Fail> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, what).map(Some)
    }
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(SatakeStatus::NullPointer, format!("{what} is null")))
}

fn out_check<T>(p: *mut T) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail(SatakeStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

unsafe fn write_json(out: *mut *mut c_char, v: &serde_json::Value) {
    let s = serde_json::to_string(v).expect("json");
    *out = CString::new(s).expect("json has no nul").into_raw();
}

unsafe fn pair<'a>(
    alg: *const SatakeAlgebra,
    dec: *const SatakeDecoration,
) -> Result<(&'a LieAlgebra, &'a Decoration), Fail> {
    let a = handle(alg, "algebra")?;
    let d = handle(dec, "decoration")?;
    if d.rank != a.g.rank() {
        return Err(Fail(SatakeStatus::InvalidInput, "decoration belongs to another rank".into()));
    }
    Ok((&a.g, &d.dec))
}

/// Message of the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn satake_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn satake_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the algebra for a type string such as `"B3"` or `"A1xA1"`.
///
/// # Safety
/// `type_string` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn satake_algebra_new(
    type_string: *const c_char,
    out: *mut *mut SatakeAlgebra,
) -> SatakeStatus {
    guard(|| {
        out_check(out)?;
        let t = str_arg(type_string, "type string")?;
        let rs = RootSystem::generate(&CartanMatrix::from_type_string(t)?)?;
        let g = LieAlgebra::build(&rs)?;
        *out = Box::into_raw(Box::new(SatakeAlgebra { g }));
        Ok(())
    })
}

/// # Safety
/// `alg` must come from `satake_algebra_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn satake_algebra_free(alg: *mut SatakeAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Dimension of the algebra; 0 for a null handle.
///
/// # Safety
/// `alg` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn satake_algebra_dim(alg: *const SatakeAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.g.dim())
}

/// # Safety
/// `alg` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn satake_algebra_rank(alg: *const SatakeAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.g.rank())
}

/// Validates `(X, tau)`. `x` is a 1-based list like `"2,3"` (empty or null
/// for no nodes); `tau` is `"id"`, `"w0"` or pairs `"1:3,3:1"` (null means `"id"`).
///
/// # Safety
/// String arguments must be valid C strings or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn satake_decoration_new(
    alg: *const SatakeAlgebra,
    x: *const c_char,
    tau: *const c_char,
    out: *mut *mut SatakeDecoration,
) -> SatakeStatus {
    guard(|| {
        out_check(out)?;
        let a = handle(alg, "algebra")?;
        let rs = a.g.root_system();
        let xs = parse_nodes(opt_str_arg(x, "X")?.unwrap_or(""), rs.rank())?;
        let t = parse_tau(opt_str_arg(tau, "tau")?.unwrap_or("id"), rs)?;
        let dec = Decoration::new(rs, &xs, t)?;
        *out = Box::into_raw(Box::new(SatakeDecoration { dec, rank: rs.rank() }));
        Ok(())
    })
}

/// # Safety
/// `dec` must come from `satake_decoration_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn satake_decoration_free(dec: *mut SatakeDecoration) {
    if !dec.is_null() {
        drop(Box::from_raw(dec));
    }
}

/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn satake_classify(
    alg: *const SatakeAlgebra,
    dec: *const SatakeDecoration,
    out: *mut SatakeLabel,
) -> SatakeStatus {
    guard(|| {
        out_check(out)?;
        let (g, d) = pair(alg, dec)?;
        *out = Analysis::new(g.root_system(), d).classify().into();
        Ok(())
    })
}

/// JSON list of all compatible decorations of `type_string` with labels.
///
/// # Safety
/// `type_string` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn satake_enumerate_json(
    type_string: *const c_char,
    out: *mut *mut c_char,
) -> SatakeStatus {
    guard(|| {
        out_check(out)?;
        let t = str_arg(type_string, "type string")?;
        let rs = RootSystem::generate(&CartanMatrix::from_type_string(t)?)?;
        let rows: Vec<_> = enumerate_cd(&rs)
            .iter()
            .map(|d| json!({"decoration": d.to_json(rs.cartan()), "label": Analysis::new(&rs, d).classify()}))
            .collect();
        write_json(out, &json!(rows));
        Ok(())
    })
}

fn gamma_for(dec: &Decoration, gamma: Option<&str>, allow_zero: bool) -> Result<Vec<satake::linalg::Q>, Fail> {
    let g = match gamma {
        Some(s) => parse_gamma(s)?,
        None => vec![q(1); dec.white().len()],
    };
    if g.len() != dec.white().len() {
        return Err(Fail(SatakeStatus::InvalidInput, "gamma has the wrong length".into()));
    }
    if !allow_zero && g.iter().any(|c| *c == q(0)) {
        return Err(Fail(SatakeStatus::InvalidInput, "zero gamma entry".into()));
    }
    Ok(g)
}

/// Builds `k` for `gamma` (comma-separated rationals over the nodes outside
/// `X`; null means all ones) and writes its dimensions and standard basis.
///
/// # Safety
/// Handles must be live; `gamma` a valid C string or null; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn satake_build_k_json(
    alg: *const SatakeAlgebra,
    dec: *const SatakeDecoration,
    gamma: *const c_char,
    allow_zero_gamma: bool,
    out: *mut *mut c_char,
) -> SatakeStatus {
    guard(|| {
        out_check(out)?;
        let (g, d) = pair(alg, dec)?;
        let gm = gamma_for(d, opt_str_arg(gamma, "gamma")?, allow_zero_gamma)?;
        let gens = KGenerators::new(g, d, &gm, allow_zero_gamma)?;
        let k = lie_closure(g, &gens.all());
        let sb = standard_basis(g, d, &gens, &k);
        write_json(
            out,
            &json!({
                "dim_k": k.dim(),
                "dim_formula": dimension_formula(g, d),
                "closure_certified": k.is_subalgebra,
                "standard_basis": sb,
            }),
        );
        Ok(())
    })
}

/// The four equivalent conditions and their witness.
///
/// # Safety
/// Handles must be live; `gamma` a valid C string or null; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn satake_theorem_json(
    alg: *const SatakeAlgebra,
    dec: *const SatakeDecoration,
    gamma: *const c_char,
    out: *mut *mut c_char,
) -> SatakeStatus {
    guard(|| {
        out_check(out)?;
        let (g, d) = pair(alg, dec)?;
        let gm = gamma_for(d, opt_str_arg(gamma, "gamma")?, false)?;
        let r = main_theorem_report(g, d, &gm)?;
        write_json(out, &serde_json::to_value(&r).expect("json"));
        Ok(())
    })
}

/// Full verification battery over every decoration of `type_string`. On
/// `SATAKE_STATUS_VERIFICATION_FAILED` the report is still written to `out`.
///
/// # Safety
/// `type_string` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn satake_verify_json(
    type_string: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> SatakeStatus {
    guard(|| {
        out_check(out)?;
        let t = str_arg(type_string, "type string")?;
        let a = CartanMatrix::from_type_string(t)?;
        let cfg = VerifyConfig { seed, ..VerifyConfig::default() };
        let r = verify(&a, &cfg, &|_| {})?;
        write_json(out, &serde_json::to_value(&r).expect("json"));
        if r.passed {
            Ok(())
        } else {
            Err(Fail(SatakeStatus::VerificationFailed, r.failures.join("; ")))
        }
    })
}
